//! Acceptance criteria, one line per criterion.
//!
//! Run with `cargo test -p verma-tensor-cli --test acceptance`.

use std::collections::BTreeMap;
use std::process::Command;
use std::time::Instant;

use verma_tensor::*;

const GRID: [&str; 15] = ["0", "1", "2", "3", "5", "-1", "-2", "1/2", "-1/2", "3/2", "i", "-i", "1+i", "2-i", "-1/2+i"];

fn q(s: &str) -> GaussianRational {
    s.parse().unwrap()
}

fn natural(x: &GaussianRational) -> Option<i64> {
    x.to_i64().filter(|n| *n >= 0)
}

fn grid() -> Vec<GaussianRational> {
    GRID.iter().map(|s| q(s)).collect()
}

fn grid_pairs() -> Vec<(GaussianRational, GaussianRational)> {
    let g = grid();
    g.iter().flat_map(|a| g.iter().map(move |b| (a.clone(), b.clone()))).collect()
}

type Outcome = std::result::Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

/// Observed component shapes per grid pair at cutoff 12, shared by later criteria.
type Observed = BTreeMap<(String, String), Vec<ComponentTag>>;

fn criterion_1() -> Outcome {
    let r = predicted_decomposition(&q("0"), &q("0"), 12, true).map_err(|e| e.to_string())?;
    ensure!(r.fusion_sets.projective_heads.is_empty(), "A nonempty for (0,0)");
    let expected: Vec<String> = (0..=12).map(|k| format!("M({})", -2 * k)).collect();
    let got: Vec<String> = r.summands.iter().map(ToString::to_string).collect();
    ensure!(got == expected, "(0,0) summands {got:?}");
    ensure!(r.oracle_verified() == Some(true), "(0,0) oracle disagrees");

    let r = predicted_decomposition(&q("i"), &q("-i"), 12, true).map_err(|e| e.to_string())?;
    let heads: Vec<GaussianRational> = r.fusion_sets.projective_heads.iter().collect();
    ensure!(heads == vec![q("-2")], "A = {heads:?} for (i,-i)");
    let mut expected = vec!["P(-2)".to_string()];
    expected.extend((2..=12).map(|k| format!("M({})", -2 * k)));
    let got: Vec<String> = r.summands.iter().map(ToString::to_string).collect();
    ensure!(got == expected, "(i,-i) summands {got:?}");
    ensure!(r.oracle_verified() == Some(true), "(i,-i) oracle disagrees");
    let check = r.oracle.as_ref().unwrap().iter().find(|c| c.orbit.partner == q("-2")).ok_or("no orbit at -2")?;
    let shape = check.observed.as_ref().ok_or("orbit at -2 unchecked")?;
    ensure!(shape.tag == ComponentTag::ProjectiveCover { low: q("-2") }, "tag {:?}", shape.tag);
    ensure!(shape.evidence.singular_count_low == 1, "singular count {}", shape.evidence.singular_count_low);
    ensure!(shape.evidence.casimir_nilpotent, "Casimir semisimple at -2");

    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_verma-tensor"))
        .args(["decompose", "--mu1", "i", "--mu2", "-i", "--cutoff", "6", "--verify", "--json"])
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure!(out.status.success(), "CLI exit {:?}", out.status.code());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    ensure!(json["oracle_verified"] == serde_json::json!(true), "CLI oracle_verified {}", json["oracle_verified"]);
    ensure!(elapsed.as_millis() < 1000, "CLI took {elapsed:?}");
    Ok(format!("CLI run {:.0} ms", elapsed.as_secs_f64() * 1e3))
}

fn criterion_2(observed: &mut Observed) -> Outcome {
    let mut orbits = 0usize;
    let mut checked = 0usize;
    for (mu1, mu2) in grid_pairs() {
        let r = predicted_decomposition(&mu1, &mu2, 12, true).map_err(|e| format!("({mu1},{mu2}): {e}"))?;
        let checks = r.oracle.as_ref().unwrap();
        if let Some(bad) = r.first_disagreement() {
            return Err(format!(
                "({mu1},{mu2}) orbit {}: expected {:?}, observed {:?}",
                bad.orbit.nu, bad.expected, bad.observed
            ));
        }
        orbits += checks.len();
        let tags: Vec<ComponentTag> =
            checks.iter().filter_map(|c| c.observed.as_ref().map(|o| o.tag.clone())).collect();
        checked += tags.len();
        observed.insert((mu1.to_string(), mu2.to_string()), tags);
    }
    Ok(format!("{} pairs, {checked} of {orbits} orbits fully inside the cutoff, 0 mismatches", GRID.len().pow(2)))
}

fn criterion_3() -> Outcome {
    let mut triples = 0usize;
    let mut positive = 0usize;
    for l1 in -6i64..=6 {
        for l2 in -6i64..=6 {
            for ell in 0i64..=6 {
                let (a, b, c) =
                    (GaussianRational::from(l1), GaussianRational::from(l2), GaussianRational::from(l1 + l2 + 2 * ell));
                let r = multiplicity_two_crosscheck(&a, &b, &c, 20).map_err(|e| format!("({l1},{l2},{c}): {e}"))?;
                ensure!(r.consistent(), "({l1},{l2},{c}): {r:?}");
                triples += 1;
                positive += usize::from(r.hom_is_two);
            }
        }
    }
    Ok(format!("{triples} triples, {positive} with all four true"))
}

fn criterion_4() -> Outcome {
    let r = multiplicity_two_crosscheck(&q("-1"), &q("-3"), &q("-2"), 20).map_err(|e| e.to_string())?;
    let split = ComponentTag::VermaPair { low: q("-4"), high: q("2") };
    ensure!(r.component.tag == split, "component {:?}", r.component.tag);
    ensure!(!r.integral_condition, "integral condition holds");
    ensure!(!(r.hom_is_two || r.integral_condition || r.bracket_vanishes || r.component_splits), "{r:?}");
    Ok("component M(2)+M(-4), all four false".into())
}

fn criterion_5() -> Outcome {
    let cutoff = 20;
    let mut layers = 0usize;
    for (mu1, mu2) in grid_pairs() {
        let spec = TensorModuleSpec::new(mu1.clone(), mu2.clone(), cutoff).map_err(|e| e.to_string())?;
        for k in 0..=cutoff {
            let layer = spec.layer(k).map_err(|e| e.to_string())?;
            ensure!(layer.dim() == k + 1, "({mu1},{mu2}) layer {k} has dim {}", layer.dim());
            let all = singular_vectors(&spec, k, None).map_err(|e| e.to_string())?.cols();
            ensure!(all >= 1, "({mu1},{mu2}) layer {k}: no singular vector");
            let c = casimir_eigenvalue(&spec.weight(k));
            let own = singular_vectors(&spec, k, Some(&c)).map_err(|e| e.to_string())?.cols();
            ensure!((1..=2).contains(&own), "({mu1},{mu2}) layer {k}: {own} singular vectors in its character");
            layers += 1;
        }
    }
    Ok(format!("{layers} layers"))
}

fn criterion_6() -> Outcome {
    let cutoff = 12;
    let pairs = grid_pairs();
    let mut characters = Vec::new();
    for (mu1, mu2) in &pairs {
        let top = mu1 + mu2;
        let expected = tensor_character(mu1, mu2, cutoff);
        let spec = TensorModuleSpec::new(mu1.clone(), mu2.clone(), cutoff).map_err(|e| e.to_string())?;
        let mut by_orbit = GrothendieckVector::new();
        for orbit in character_support(&spec) {
            by_orbit = by_orbit.union(&component_character(mu1, mu2, &orbit.nu, cutoff).map_err(|e| e.to_string())?);
        }
        ensure!(by_orbit.restrict(&top, cutoff) == expected, "({mu1},{mu2}): component characters");
        let report = predicted_decomposition(mu1, mu2, cutoff, false).map_err(|e| e.to_string())?;
        ensure!(
            decomposition_character(&report).restrict(&top, cutoff) == expected,
            "({mu1},{mu2}): summand characters"
        );
        characters.push(expected);
    }
    let mut comparisons = 0usize;
    for (i, (a1, a2)) in pairs.iter().enumerate() {
        for (j, (b1, b2)) in pairs.iter().enumerate() {
            let equal = grothendieck_equal(a1, a2, b1, b2);
            ensure!(equal == (characters[i] == characters[j]), "({a1},{a2}) vs ({b1},{b2})");
            ensure!(equal == (a1 + a2 == b1 + b2), "({a1},{a2}) vs ({b1},{b2})");
            comparisons += 1;
        }
    }
    Ok(format!("{} pairs, {comparisons} class comparisons", pairs.len()))
}

fn criterion_7(observed: &Observed) -> Outcome {
    let pairs = grid_pairs();
    let mut hypothesis = 0usize;
    for (m1, m2) in &pairs {
        for (n1, n2) in &pairs {
            if m1 + m2 != n1 + n2 {
                continue;
            }
            let c = tensor_iso_check(m1, m2, n1, n2);
            if c.hypothesis_met {
                hypothesis += 1;
                ensure!(c.isomorphic, "({m1},{m2}) vs ({n1},{n2}) not isomorphic");
                let left = &observed[&(m1.to_string(), m2.to_string())];
                let right = &observed[&(n1.to_string(), n2.to_string())];
                ensure!(left == right, "({m1},{m2}) vs ({n1},{n2}): oracle shapes differ");
            }
        }
    }
    let c = tensor_iso_check(&q("0"), &q("0"), &q("i"), &q("-i"));
    ensure!(!c.hypothesis_met && !c.isomorphic, "(0,0,i,-i): {c:?}");
    Ok(format!("{hypothesis} quadruples meet the hypothesis, all isomorphic; (0,0,i,-i) not isomorphic"))
}

fn criterion_8() -> Outcome {
    let mut cases = 0usize;
    let mut summands = 0usize;
    for a in 0i64..=5 {
        for b in 0i64..=5 {
            let (mu1, mu2) = (GaussianRational::from(a), GaussianRational::from(b));
            let sets = fusion_sets(&mu1, &mu2, 0);
            let naturals: Vec<GaussianRational> =
                sets.natural_verma_weights().iter().flat_map(|p| p.iter().collect::<Vec<_>>()).collect();
            for n in 0i64..=10 {
                let nu = GaussianRational::from(n);
                let in_b = sets.in_b(&nu);
                ensure!(in_b == naturals.contains(&nu), "({a},{b}) nu={n}: B membership routes differ");
                ensure!(clebsch_gordan_summand(&nu, &mu1, &mu2) == in_b, "({a},{b}) nu={n}");
                cases += 1;
                summands += usize::from(in_b);
            }
        }
    }
    Ok(format!("{cases} cases, {summands} summands"))
}

fn criterion_9() -> Outcome {
    let mut witnessed = 0usize;
    for (mu1, mu2) in grid_pairs() {
        let d = duality_predicates(&mu1, &mu2, Some(12)).map_err(|e| e.to_string())?;
        let naturals = natural(&mu1).zip(natural(&mu2));
        ensure!(
            d.multiplicity_free == d.self_dual && d.self_dual == d.no_reducible_verma_summand,
            "({mu1},{mu2}) predicates differ: {d:?}"
        );
        ensure!(d.self_dual == naturals.is_none(), "({mu1},{mu2}) predicates {}", d.self_dual);
        if let Some((a, b)) = naturals {
            let expected: Vec<GaussianRational> =
                (0..=a.min(b)).rev().map(|j| GaussianRational::from((a - b).abs() + 2 * j)).collect();
            ensure!(d.natural_verma_weights == expected, "({mu1},{mu2}) B∩N = {:?}", d.natural_verma_weights);
            ensure!(!d.witnesses.is_empty(), "({mu1},{mu2}) no witness within cutoff");
            for w in &d.witnesses {
                ensure!(w.hom_dimension == 2, "({mu1},{mu2}) nu={} hom dim {}", w.nu, w.hom_dimension);
                witnessed += 1;
            }
        }
    }
    Ok(format!("{} grid points, {witnessed} witnesses of dimension 2", GRID.len().pow(2)))
}

fn criterion_10() -> Outcome {
    let cutoff = 20;
    let mut layers = 0usize;
    for (mu1, mu2) in grid_pairs() {
        let spec = TensorModuleSpec::new(mu1.clone(), mu2.clone(), cutoff).map_err(|e| e.to_string())?;
        for k in 0..cutoff {
            let r = spec.layer_relations(k).map_err(|e| e.to_string())?;
            ensure!(r.all(), "({mu1},{mu2}) layer {k}: {r:?}");
            layers += 1;
        }
    }
    Ok(format!("{layers} layer pairs, exact equality"))
}

fn main() {
    let mut observed = Observed::new();
    let mut failures = 0;
    let mut report = |n: usize, f: &mut dyn FnMut() -> Outcome| {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {n:>2}: PASS ({detail}; {secs:.2} s)"),
            Err(why) => {
                failures += 1;
                println!("criterion {n:>2}: FAIL ({why}; {secs:.2} s)");
            }
        }
    };
    report(1, &mut criterion_1);
    report(2, &mut || criterion_2(&mut observed));
    report(3, &mut criterion_3);
    report(4, &mut criterion_4);
    report(5, &mut criterion_5);
    report(6, &mut criterion_6);
    report(7, &mut || criterion_7(&observed));
    report(8, &mut criterion_8);
    report(9, &mut criterion_9);
    report(10, &mut criterion_10);
    if failures > 0 {
        eprintln!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
}
