//! Dual Stiefel–Whitney classes of `η_{R^d}` over `F(R^d, k)` for powers of
//! two, written in the Dickson generators `w_{2^m - 2^s}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `(Σ i)! / Π i! mod 2`: odd exactly when no two summands share a bit.
pub fn multinomial_mod2(i: &[u64]) -> u8 {
    let mut seen = 0u64;
    for &x in i {
        if seen & x != 0 {
            return 0;
        }
        seen |= x;
    }
    1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SwExpansion {
    pub l: u32,
    pub m: u32,
    /// `(2^l - 1)(2^m - 1)`.
    pub degree: u64,
    /// Generator degrees `2^m - 2^s`, `s = 0..m-1`.
    pub weights: Vec<u64>,
    /// Every exponent vector of the right weighted degree.
    pub candidates: Vec<Vec<u64>>,
    /// Those with odd multinomial coefficient.
    pub survivors: Vec<Vec<u64>>,
    /// The survivors are exactly `{w_{k-1}^{d-1}}`.
    pub nonzero: bool,
}

const MAX_LM: u32 = 8;

/// Expands `w̄_{(d-1)(k-1)}` for `d = 2^l`, `k = 2^m`.
pub fn dual_sw_expansion(l: u32, m: u32) -> Result<SwExpansion> {
    if l == 0 || m == 0 || l > MAX_LM || m > MAX_LM {
        return Err(Error::InvalidArgument(format!(
            "need 1 ≤ l, m ≤ {MAX_LM}, got l={l}, m={m}"
        )));
    }
    let k = 1u64 << m;
    let d = 1u64 << l;
    let degree = (d - 1) * (k - 1);
    let weights: Vec<u64> = (0..m).map(|s| k - (1 << s)).collect();
    let mut candidates = Vec::new();
    let mut cur = vec![0; weights.len()];
    enumerate(&weights, 0, degree, &mut cur, &mut candidates);
    let survivors: Vec<Vec<u64>> = candidates
        .iter()
        .filter(|c| multinomial_mod2(c) == 1)
        .cloned()
        .collect();
    let mut expected = vec![0; weights.len()];
    expected[0] = d - 1;
    Ok(SwExpansion {
        l,
        m,
        degree,
        nonzero: survivors == [expected],
        weights,
        candidates,
        survivors,
    })
}

fn enumerate(w: &[u64], s: usize, rest: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    if s == w.len() {
        if rest == 0 {
            out.push(cur.clone());
        }
        return;
    }
    for x in 0..=rest / w[s] {
        cur[s] = x;
        enumerate(w, s + 1, rest - x * w[s], cur, out);
    }
    cur[s] = 0;
}

/// `d(k - α(k)) + α(k) - 1`, with `α` the binary digit sum.
pub fn chisholm_bound(d: u64, k: u64) -> Result<u64> {
    if !d.is_power_of_two() {
        return Err(Error::InvalidArgument(format!("{d} is not a power of 2")));
    }
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let alpha = u64::from(k.count_ones());
    Ok(d * (k - alpha) + alpha - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multinomials() {
        assert_eq!(multinomial_mod2(&[3, 0]), 1);
        assert_eq!(multinomial_mod2(&[1, 3]), 0);
        assert_eq!(multinomial_mod2(&[1, 2, 4]), 1);
    }

    #[test]
    fn expansions() {
        let e = dual_sw_expansion(1, 1).unwrap();
        assert_eq!((e.degree, e.survivors.clone()), (1, vec![vec![1]]));
        let e = dual_sw_expansion(2, 2).unwrap();
        assert_eq!(e.candidates, vec![vec![1, 3], vec![3, 0]]);
        assert_eq!(e.survivors, vec![vec![3, 0]]);
        assert!(e.nonzero);
        let e = dual_sw_expansion(1, 2).unwrap();
        assert_eq!(e.survivors, vec![vec![1, 0]]);
    }

    #[test]
    fn chisholm() {
        assert_eq!(chisholm_bound(2, 3).unwrap(), 3);
        assert_eq!(chisholm_bound(4, 4).unwrap(), 12);
        assert_eq!(chisholm_bound(2, 1).unwrap(), 0);
        assert!(chisholm_bound(6, 2).is_err());
    }
}
