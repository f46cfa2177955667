//! Sweep and table drivers behind the `qsum` binary.

pub mod report;
pub mod sweep;
pub mod table;

use std::fmt;
use std::str::FromStr;

use qsum_core::arith::is_prime;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),
    #[error("unknown example {0:?}")]
    UnknownExample(String),
    #[error("invalid configuration: {0}")]
    ConfigInvalid(String),
    #[error("bad prime range {0:?}: expected LO..HI or a single prime")]
    BadRange(String),
}

/// Inclusive range of primes, written `LO..HI` or `P`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeRange {
    pub lo: u64,
    pub hi: u64,
}

impl PrimeRange {
    pub fn primes(&self) -> Vec<u64> {
        (self.lo..=self.hi).filter(|&p| is_prime(p)).collect()
    }
}

impl FromStr for PrimeRange {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let bad = || CliError::BadRange(s.to_string());
        let (lo, hi) = match s.split_once("..") {
            Some((lo, hi)) => (lo.trim(), hi.trim_start_matches('=').trim()),
            None => (s.trim(), s.trim()),
        };
        let lo: u64 = lo.parse().map_err(|_| bad())?;
        let hi: u64 = hi.parse().map_err(|_| bad())?;
        if lo > hi {
            return Err(bad());
        }
        Ok(PrimeRange { lo, hi })
    }
}

impl fmt::Display for PrimeRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}
