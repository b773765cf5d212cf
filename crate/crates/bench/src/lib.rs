//! Shared inputs for the criterion benchmarks.

use verma_tensor::GaussianRational;

/// Weight pairs covering the generic, singular and fully integral cases.
pub fn sample_pairs() -> Vec<(GaussianRational, GaussianRational)> {
    [("1/2", "0"), ("i", "-i"), ("5", "-1"), ("1", "3"), ("5", "5")]
        .iter()
        .map(|(a, b)| (a.parse().unwrap(), b.parse().unwrap()))
        .collect()
}
