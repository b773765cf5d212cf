//! Grid files: one case per line, `suite,scalar,scalar,...`. Blank lines and
//! lines starting with `#` are skipped.

use verma_tensor::{parse_scalar, GaussianRational};

use crate::failure::Failure;

#[derive(Clone, Debug)]
pub enum Case {
    /// `decompose,μ′,μ″`
    Decompose(GaussianRational, GaussianRational),
    /// `multiplicity,λ′,λ″,λ‴`
    Multiplicity(GaussianRational, GaussianRational, GaussianRational),
    /// `iso,μ′,μ″,ν′,ν″`
    Iso(GaussianRational, GaussianRational, GaussianRational, GaussianRational),
    /// `cg,ν,μ′,μ″`
    ClebschGordan(GaussianRational, GaussianRational, GaussianRational),
    /// `duality,μ′,μ″`
    Duality(GaussianRational, GaussianRational),
}

impl Case {
    pub fn suite(&self) -> &'static str {
        match self {
            Case::Decompose(..) => "decompose",
            Case::Multiplicity(..) => "multiplicity",
            Case::Iso(..) => "iso",
            Case::ClebschGordan(..) => "cg",
            Case::Duality(..) => "duality",
        }
    }

    pub fn inputs(&self) -> Vec<&GaussianRational> {
        match self {
            Case::Decompose(a, b) | Case::Duality(a, b) => vec![a, b],
            Case::Multiplicity(a, b, c) | Case::ClebschGordan(a, b, c) => vec![a, b, c],
            Case::Iso(a, b, c, d) => vec![a, b, c, d],
        }
    }
}

pub const SUITES: [&str; 5] = ["decompose", "multiplicity", "iso", "cg", "duality"];

fn parse_line(line: &str) -> Result<Case, String> {
    let mut fields = line.split(',').map(str::trim);
    let suite = fields.next().unwrap_or_default();
    let values = fields.map(|f| parse_scalar(f).map_err(|e| e.to_string())).collect::<Result<Vec<_>, _>>()?;
    let arity = |n: usize| {
        if values.len() == n {
            Ok(())
        } else {
            Err(format!("suite {suite} takes {n} scalars, got {}", values.len()))
        }
    };
    let v = |i: usize| values[i].clone();
    match suite {
        "decompose" => arity(2).map(|()| Case::Decompose(v(0), v(1))),
        "multiplicity" => arity(3).map(|()| Case::Multiplicity(v(0), v(1), v(2))),
        "iso" => arity(4).map(|()| Case::Iso(v(0), v(1), v(2), v(3))),
        "cg" => arity(3).map(|()| Case::ClebschGordan(v(0), v(1), v(2))),
        "duality" => arity(2).map(|()| Case::Duality(v(0), v(1))),
        other => Err(format!("unknown suite {other:?}; expected one of {}", SUITES.join(", "))),
    }
}

pub fn parse_grid(text: &str) -> Result<Vec<Case>, Failure> {
    text.lines()
        .enumerate()
        .filter(|(_, line)| !line.trim().is_empty() && !line.trim_start().starts_with('#'))
        .map(|(n, line)| parse_line(line).map_err(|e| Failure::Input(format!("grid line {}: {e}", n + 1))))
        .collect()
}

fn int(n: i64) -> GaussianRational {
    GaussianRational::from(n)
}

/// Integer cases, plus the pair `(i, −i)` against `(0, 0)`.
pub fn default_grid() -> Vec<Case> {
    let mut cases = Vec::new();
    let pairs: Vec<(i64, i64)> = (-2..=4).flat_map(|a| (-2..=4).map(move |b| (a, b))).collect();
    cases.extend(pairs.iter().map(|&(a, b)| Case::Decompose(int(a), int(b))));
    for l1 in -3..=3 {
        for l2 in -3..=3 {
            for ell in 0..=3 {
                cases.push(Case::Multiplicity(int(l1), int(l2), int(l1 + l2 + 2 * ell)));
            }
        }
    }
    let small: Vec<(i64, i64)> = pairs.iter().copied().filter(|&(a, b)| a <= 3 && b <= 3).collect();
    for &(a, b) in &small {
        for &(c, d) in &small {
            if a + b == c + d {
                cases.push(Case::Iso(int(a), int(b), int(c), int(d)));
            }
        }
    }
    let i = GaussianRational::i();
    cases.push(Case::Iso(int(0), int(0), i.clone(), -&i));
    for a in 0..=4 {
        for b in 0..=4 {
            for nu in 0..=8 {
                cases.push(Case::ClebschGordan(int(nu), int(a), int(b)));
            }
        }
    }
    cases.extend(pairs.iter().map(|&(a, b)| Case::Duality(int(a), int(b))));
    cases.push(Case::Duality(i.clone(), -&i));
    cases
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_cases_and_skips_comments() {
        let cases = parse_grid("# header\n\ndecompose, i, -i\niso,0,0,i,-i\n  # indented\ncg,2,1,3\n").unwrap();
        let suites: Vec<_> = cases.iter().map(Case::suite).collect();
        assert_eq!(suites, ["decompose", "iso", "cg"]);
        assert_eq!(cases[0].inputs()[1].to_string(), "-i");
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse_grid("decompose,0,0\ndecompose,0\n").unwrap_err();
        assert!(err.to_string().starts_with("grid line 2:"), "{err}");
        let err = parse_grid("nope,1\n").unwrap_err();
        assert!(err.to_string().contains("unknown suite"), "{err}");
        let err = parse_grid("cg,1/0,1,1\n").unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }
}
