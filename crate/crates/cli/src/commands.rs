use std::fs;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};
use verma_tensor::fusion::DecompositionReport;
use verma_tensor::primary::singular_vectors;
use verma_tensor::{
    casimir_eigenvalue, hom_dim, predicted_decomposition, rc_operator, GaussianRational, Poly1, TensorModuleSpec,
};

use crate::envelope::{envelope, print, to_value};
use crate::failure::Failure;

fn join<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn matrices(mu1: &GaussianRational, mu2: &GaussianRational, cutoff: usize) -> Result<Value, Failure> {
    let spec = TensorModuleSpec::new(mu1.clone(), mu2.clone(), cutoff)?;
    let mut layers = Vec::new();
    for k in 0..=cutoff {
        let raising = if k == 0 { Value::Null } else { to_value(&spec.raising_matrix(k)?.matrix) };
        layers.push(json!({
            "k": k,
            "weight": spec.weight(k),
            "raising": raising,
            "casimir": to_value(&spec.casimir_matrix(k)?.matrix),
        }));
    }
    Ok(Value::Array(layers))
}

fn print_decomposition(r: &DecompositionReport) {
    let sets = &r.fusion_sets;
    println!("M({}) ⊗ M({}), layers 0..={}", r.mu1, r.mu2, r.cutoff);
    println!("X  = {} - 2N", sets.top_weight);
    println!("A  = {{{}}}", join(sets.projective_heads.iter()));
    println!("A* = {{{}}}", join(sets.projective_socles.iter()));
    println!("A' = {{{}}}", join(sets.linked.iter()));
    println!("B  = {{{}, ...}} (truncated)", join(&sets.verma_weights));
    println!("summands: {} ⊕ ...", r.summands.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ⊕ "));
    let Some(checks) = &r.oracle else { return };
    println!("oracle:");
    for c in checks {
        let members = if c.orbit.is_paired() {
            format!("{{{}, {}}}", c.orbit.nu, c.orbit.partner)
        } else {
            format!("{{{}}}", c.orbit.nu)
        };
        match &c.observed {
            None => println!("  {members}: beyond cutoff"),
            Some(shape) => {
                let e = &shape.evidence;
                let singular = if c.orbit.is_paired() {
                    format!(
                        "{} at {} and {} at {}",
                        e.singular_count_high, c.orbit.nu, e.singular_count_low, c.orbit.partner
                    )
                } else {
                    format!("{} at {}", e.singular_count_low, c.orbit.nu)
                };
                println!(
                    "  {members}: {}, singular vectors {singular}, Casimir {}, {}",
                    shape.tag,
                    if e.casimir_nilpotent { "not semisimple" } else { "semisimple" },
                    if c.agrees == Some(true) { "agrees" } else { "DISAGREES" }
                );
            }
        }
    }
}

pub fn decompose(
    mu1: &GaussianRational,
    mu2: &GaussianRational,
    cutoff: usize,
    verify: bool,
    dump_matrices: bool,
    json: bool,
) -> Result<(), Failure> {
    let report = predicted_decomposition(mu1, mu2, cutoff, verify)?;
    let verified = report.oracle_verified() == Some(true);
    if json {
        let mut results = json!({
            "fusion_sets": to_value(&report.fusion_sets),
            "summands": to_value(&report.summands),
            "oracle": to_value(&report.oracle),
        });
        if dump_matrices {
            results["matrices"] = matrices(mu1, mu2, cutoff)?;
        }
        print(&envelope("decompose", json!({ "mu1": mu1, "mu2": mu2 }), Some(cutoff), results, verified));
    } else {
        print_decomposition(&report);
        if dump_matrices {
            println!("{}", serde_json::to_string_pretty(&matrices(mu1, mu2, cutoff)?).expect("JSON values print"));
        }
    }
    match report.first_disagreement() {
        Some(c) => Err(Failure::Disagreement(format!(
            "component of {}: closed form predicts {}, oracle found {}",
            c.orbit.nu,
            c.expected,
            c.observed.as_ref().map_or("nothing".to_string(), |o| o.tag.to_string())
        ))),
        None => Ok(()),
    }
}

fn read_poly(path: &Path) -> Result<Poly1, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

pub fn rc(
    lam1: &GaussianRational,
    lam2: &GaussianRational,
    lam3: &GaussianRational,
    apply: Option<(PathBuf, PathBuf)>,
    json: bool,
) -> Result<(), Failure> {
    let op = rc_operator(lam1, lam2, lam3)?;
    let applied = match apply {
        Some((f, g)) => Some(op.apply(&read_poly(&f)?, &read_poly(&g)?)),
        None => None,
    };
    if json {
        let results = json!({
            "ell": op.ell,
            "coeffs": op.coeffs,
            "is_zero": op.is_zero(),
            "applied": applied,
        });
        let inputs = json!({ "lam1": lam1, "lam2": lam2, "lam3": lam3 });
        print(&envelope("rc", inputs, None, results, false));
    } else {
        println!("ell = {}", op.ell);
        println!("coeffs = [{}]", join(&op.coeffs));
        println!("is_zero = {}", op.is_zero());
        if let Some(p) = applied {
            println!("applied = [{}]", join(p.coeffs()));
        }
    }
    Ok(())
}

pub fn homdim(
    lam1: &GaussianRational,
    lam2: &GaussianRational,
    lam3: &GaussianRational,
    cutoff: usize,
    json: bool,
) -> Result<(), Failure> {
    // the bracket is defined exactly when the weight occurs in the tensor product
    rc_operator(lam1, lam2, lam3)?;
    let dim = hom_dim(lam1, lam2, lam3, cutoff)?;
    let spec = TensorModuleSpec::new(-lam1, -lam2, cutoff)?;
    let nu = -lam3;
    let layer = spec.layer_of(&nu).expect("weight occurs once the degrees match") as usize;
    let singular_total = singular_vectors(&spec, layer, None)?.cols();
    let singular_in_character = singular_vectors(&spec, layer, Some(&casimir_eigenvalue(&nu)))?.cols();
    if json {
        let results = json!({
            "hom_dimension": dim,
            "layer": layer,
            "singular_total": singular_total,
            "singular_in_character": singular_in_character,
        });
        let inputs = json!({ "lam1": lam1, "lam2": lam2, "lam3": lam3 });
        print(&envelope("homdim", inputs, Some(cutoff), results, true));
    } else {
        println!("dim Hom(M({nu}), M({}) ⊗ M({})) = {dim}", -lam1, -lam2);
        println!(
            "layer {layer}: {singular_total} singular vectors, {singular_in_character} with Casimir eigenvalue of {nu}"
        );
    }
    Ok(())
}
