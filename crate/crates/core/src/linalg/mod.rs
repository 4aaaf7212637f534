//! Exact linear algebra over `Z` and `F_p`.

pub mod fp;
pub mod homology;
pub mod int;
pub mod snf;
pub mod solve;
pub mod sparse;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::is_prime;
use crate::error::{Error, Result};

pub use fp::{FpMatrix, SparseVec};
pub use homology::{homology, homology_basis, homology_ranks, DegreeHomology, HomologyBasis, HomologySummary};
pub use int::Int;
pub use snf::{invariant_factors, smith_normal_form, SnfResult};
pub use solve::{solve_integer, Certificate, Solution};
pub use sparse::SparseIntMatrix;

/// Coefficient ring: the integers or a prime field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Coefficients {
    Integers,
    Prime(u64),
}

impl Coefficients {
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Coefficients::Prime(p))
        } else {
            Err(Error::InvalidArgument(format!("{p} is not prime")))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Coefficients::Integers => 0,
            Coefficients::Prime(p) => *p,
        }
    }
}

impl fmt::Display for Coefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficients::Integers => write!(f, "Z"),
            Coefficients::Prime(p) => write!(f, "F{p}"),
        }
    }
}

impl FromStr for Coefficients {
    type Err = Error;

    /// Accepts `Z`, `F3`, `F_3`, `Fp3` and a bare prime.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("z") {
            return Ok(Coefficients::Integers);
        }
        let digits = t
            .strip_prefix("Fp")
            .or_else(|| t.strip_prefix("F_"))
            .or_else(|| t.strip_prefix('F'))
            .or_else(|| t.strip_prefix('f'))
            .unwrap_or(t);
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("unknown coefficients `{s}`")))?;
        Coefficients::prime(p)
    }
}

impl Serialize for Coefficients {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Coefficients {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coefficient_strings() {
        assert_eq!("Z".parse::<Coefficients>().unwrap(), Coefficients::Integers);
        assert_eq!("F5".parse::<Coefficients>().unwrap(), Coefficients::Prime(5));
        assert_eq!("3".parse::<Coefficients>().unwrap(), Coefficients::Prime(3));
        assert!("F4".parse::<Coefficients>().is_err());
        assert_eq!(Coefficients::Prime(2).to_string(), "F2");
    }
}
