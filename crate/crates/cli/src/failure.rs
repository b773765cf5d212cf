use std::fmt;

use verma_tensor::Error;

/// Why a command did not succeed; each kind has its own exit status.
#[derive(Debug)]
pub enum Failure {
    /// The closed form and the brute-force oracle disagree.
    Disagreement(String),
    /// Unreadable or malformed input.
    Input(String),
    /// Well-formed input outside an operation's domain, including cutoffs too small.
    Precondition(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Disagreement(_) => 1,
            Failure::Input(_) => 2,
            Failure::Precondition(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Disagreement(m) | Failure::Input(m) | Failure::Precondition(m) => f.write_str(m),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) => Failure::Input(e.to_string()),
            Error::Inconsistent(_) => Failure::Disagreement(e.to_string()),
            _ => Failure::Precondition(e.to_string()),
        }
    }
}
