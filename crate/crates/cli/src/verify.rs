use std::fs;
use std::path::Path;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;
use verma_tensor::characters::decomposition_character;
use verma_tensor::{
    clebsch_gordan_summand, duality_predicates, fusion_sets, multiplicity_two_crosscheck, predicted_decomposition,
    tensor_character, tensor_iso_check, ComponentTag, Error, GaussianRational,
};

use crate::envelope::{envelope, print, to_value};
use crate::failure::Failure;
use crate::grid::{default_grid, parse_grid, Case, SUITES};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Debug, Serialize)]
struct CaseOutcome {
    suite: &'static str,
    inputs: Vec<GaussianRational>,
    status: Status,
    detail: String,
}

#[derive(Debug, Default, Serialize)]
struct SuiteSummary {
    suite: &'static str,
    cases: usize,
    passed: usize,
    failed: usize,
    errors: usize,
}

fn verdict(ok: bool, detail: String) -> (Status, String) {
    (if ok { Status::Pass } else { Status::Fail }, detail)
}

fn observed_tags(mu1: &GaussianRational, mu2: &GaussianRational, cutoff: usize) -> Result<Vec<ComponentTag>, Error> {
    let report = predicted_decomposition(mu1, mu2, cutoff, true)?;
    Ok(report.oracle.unwrap_or_default().into_iter().filter_map(|c| c.observed.map(|o| o.tag)).collect())
}

fn check(case: &Case, cutoff: usize) -> Result<(Status, String), Error> {
    Ok(match case {
        Case::Decompose(mu1, mu2) => {
            let report = predicted_decomposition(mu1, mu2, cutoff, true)?;
            let checks = report.oracle.as_deref().unwrap_or_default();
            let checked = checks.iter().filter(|c| c.agrees.is_some()).count();
            let characters_match =
                decomposition_character(&report).restrict(&(mu1 + mu2), cutoff) == tensor_character(mu1, mu2, cutoff);
            match report.first_disagreement() {
                Some(c) => verdict(
                    false,
                    format!(
                        "component of {}: expected {}, observed {}",
                        c.orbit.nu,
                        c.expected,
                        c.observed.as_ref().map_or("nothing".to_string(), |o| o.tag.to_string())
                    ),
                ),
                None if !characters_match => {
                    verdict(false, "summand character differs from the tensor character".into())
                }
                None => verdict(true, format!("{checked} of {} components checked", checks.len())),
            }
        }
        Case::Multiplicity(l1, l2, l3) => {
            let r = multiplicity_two_crosscheck(l1, l2, l3, cutoff)?;
            let detail = format!(
                "hom {}, integral {}, bracket vanishes {}, splits {}",
                r.hom_dimension, r.integral_condition, r.bracket_vanishes, r.component_splits
            );
            verdict(r.consistent(), detail)
        }
        Case::Iso(m1, m2, n1, n2) => {
            let c = tensor_iso_check(m1, m2, n1, n2);
            let mut detail = format!("hypothesis {}, isomorphic {}", c.hypothesis_met, c.isomorphic);
            let mut ok = !c.hypothesis_met || c.isomorphic;
            if m1 + m2 == n1 + n2 {
                let same_shapes = observed_tags(m1, m2, cutoff)? == observed_tags(n1, n2, cutoff)?;
                detail.push_str(&format!(", oracle shapes {}", if same_shapes { "equal" } else { "differ" }));
                ok &= same_shapes == c.isomorphic;
            }
            verdict(ok, detail)
        }
        Case::ClebschGordan(nu, mu1, mu2) => {
            if !nu.is_natural() {
                return Err(Error::ParameterOutOfRange(format!("cg needs a natural weight, got {nu}")));
            }
            let predicted = clebsch_gordan_summand(nu, mu1, mu2);
            let in_b = fusion_sets(mu1, mu2, 0).in_b(nu);
            verdict(predicted == in_b, format!("summand {predicted}, in B {in_b}"))
        }
        Case::Duality(mu1, mu2) => {
            let d = duality_predicates(mu1, mu2, Some(cutoff))?;
            let both_natural = mu1.is_natural() && mu2.is_natural();
            let coincide = d.multiplicity_free == d.self_dual && d.self_dual == d.no_reducible_verma_summand;
            let witnessed =
                d.witnesses.iter().all(|w| w.hom_dimension == 2) && (!both_natural || !d.witnesses.is_empty());
            let detail = format!("self-dual {}, {} witnesses", d.self_dual, d.witnesses.len());
            verdict(coincide && d.self_dual != both_natural && witnessed, detail)
        }
    })
}

fn outcome(case: &Case, cutoff: usize) -> CaseOutcome {
    let (status, detail) = check(case, cutoff).unwrap_or_else(|e| (Status::Error, e.to_string()));
    CaseOutcome { suite: case.suite(), inputs: case.inputs().into_iter().cloned().collect(), status, detail }
}

fn summarize(outcomes: &[CaseOutcome]) -> Vec<SuiteSummary> {
    SUITES
        .iter()
        .map(|&suite| {
            let mut s = SuiteSummary { suite, ..Default::default() };
            for o in outcomes.iter().filter(|o| o.suite == suite) {
                s.cases += 1;
                match o.status {
                    Status::Pass => s.passed += 1,
                    Status::Fail => s.failed += 1,
                    Status::Error => s.errors += 1,
                }
            }
            s
        })
        .collect()
}

fn describe(o: &CaseOutcome) -> String {
    let inputs: Vec<String> = o.inputs.iter().map(ToString::to_string).collect();
    format!("{}({}): {}", o.suite, inputs.join(", "), o.detail)
}

pub fn run(grid: Option<&Path>, cutoff: usize, workers: usize, list: bool, json: bool) -> Result<(), Failure> {
    let (cases, source) = match grid {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            (parse_grid(&text)?, path.display().to_string())
        }
        None => (default_grid(), "default".to_string()),
    };
    if cases.is_empty() {
        eprintln!("warning: grid has no cases");
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Failure::Input(format!("cannot start {workers} workers: {e}")))?;
    let outcomes: Vec<CaseOutcome> = pool.install(|| cases.par_iter().map(|c| outcome(c, cutoff)).collect());
    let summary = summarize(&outcomes);
    let all_passed = outcomes.iter().all(|o| o.status == Status::Pass);

    if json {
        let results = json!({ "suites": to_value(&summary), "cases": to_value(&outcomes) });
        print(&envelope("verify", json!({ "grid": source }), Some(cutoff), results, all_passed));
    } else {
        if list {
            for o in &outcomes {
                println!("{:<5} {}", format!("{:?}", o.status).to_lowercase(), describe(o));
            }
        }
        println!("{:<14}{:>7}{:>8}{:>8}{:>8}", "suite", "cases", "passed", "failed", "errors");
        for s in &summary {
            println!("{:<14}{:>7}{:>8}{:>8}{:>8}", s.suite, s.cases, s.passed, s.failed, s.errors);
        }
    }

    if let Some(o) = outcomes.iter().find(|o| o.status == Status::Fail) {
        return Err(Failure::Disagreement(format!("counterexample {}", describe(o))));
    }
    if let Some(o) = outcomes.iter().find(|o| o.status == Status::Error) {
        return Err(Failure::Precondition(format!("case failed to run {}", describe(o))));
    }
    Ok(())
}
