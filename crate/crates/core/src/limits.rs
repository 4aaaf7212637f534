//! Size caps shared by the enumerating operations.
//!
//! Bell numbers grow super-exponentially, so every enumeration checks its
//! cap up front and fails loudly instead of truncating.

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest ground set for partition lattices.
    pub max_n: usize,
    /// Largest admissible Bell number (lattice size).
    pub max_bell: u64,
    /// Largest permutation group that closure may produce.
    pub max_group_order: usize,
    /// Largest permutation degree (e.g. `p^k` for the regular embedding).
    pub max_degree: usize,
    /// Largest number of monomials a single group-cohomology product may carry.
    pub max_terms: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_n: 12,
            max_bell: 4_213_597,
            max_group_order: 100_000,
            max_degree: 4096,
            max_terms: 2_000_000,
        }
    }
}

/// Bell numbers via the Bell triangle; `None` on `u64` overflow.
pub fn bell_number(n: usize) -> Option<u64> {
    let mut row: Vec<u64> = vec![1];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last()?);
        for x in &row {
            let v = next.last()?.checked_add(*x)?;
            next.push(v);
        }
        row = next;
    }
    row.first().copied()
}

impl Limits {
    pub fn check_lattice(&self, n: usize) -> Result<()> {
        let bell = bell_number(n);
        if n > self.max_n {
            return Err(Error::SizeLimit {
                what: format!("ground set of Pi_{n} (Bell number {})", fmt_bell(bell)),
                actual: n as u128,
                cap: self.max_n as u128,
            });
        }
        match bell {
            Some(b) if b <= self.max_bell => Ok(()),
            _ => Err(Error::SizeLimit {
                what: format!("Bell number B({n})"),
                actual: bell.map(u128::from).unwrap_or(u128::MAX),
                cap: self.max_bell as u128,
            }),
        }
    }

    pub fn check_degree(&self, degree: usize) -> Result<()> {
        if degree > self.max_degree {
            return Err(Error::SizeLimit {
                what: "permutation degree".into(),
                actual: degree as u128,
                cap: self.max_degree as u128,
            });
        }
        Ok(())
    }
}

fn fmt_bell(b: Option<u64>) -> String {
    b.map(|b| b.to_string()).unwrap_or_else(|| "> 2^64".into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell_numbers() {
        let expected = [1u64, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975];
        for (n, b) in expected.iter().enumerate() {
            assert_eq!(bell_number(n), Some(*b));
        }
    }

    #[test]
    fn cap_names_the_bell_number() {
        let limits = Limits {
            max_bell: 100,
            ..Limits::default()
        };
        let err = limits.check_lattice(6).unwrap_err();
        assert!(err.to_string().contains("B(6)"), "{err}");
        assert!(err.to_string().contains("203"), "{err}");
        assert!(limits.check_lattice(5).is_ok());
    }
}
