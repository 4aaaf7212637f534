//! The Euler classes `ζ` and `ζ_H` as products of linear forms.

use super::element::{subgroup_basis, Gce};
use super::poly::Poly;
use crate::arith::is_prime;
use crate::error::{Error, Result};

/// Nonzero vectors of `F_p^k` whose first nonzero coordinate is 1.
pub fn projective_points(p: u64, k: usize) -> Vec<Vec<u64>> {
    let total = (p as usize).pow(k as u32);
    (1..total)
        .map(|mut x| {
            (0..k)
                .map(|_| {
                    let c = (x % p as usize) as u64;
                    x /= p as usize;
                    c
                })
                .collect::<Vec<u64>>()
        })
        .filter(|v| v.iter().find(|&&c| c != 0) == Some(&1))
        .collect()
}

/// Caps `p^k` so the products stay desk-sized.
const MAX_POINTS: u64 = 1 << 12;

fn check(p: u64, k: usize) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let size = p.checked_pow(k as u32).unwrap_or(u64::MAX);
    if size > MAX_POINTS {
        return Err(Error::SizeLimit {
            what: "p^k for Euler class products".into(),
            actual: size as u128,
            cap: MAX_POINTS as u128,
        });
    }
    Ok(())
}

fn form(p: u64, alpha: &[u64]) -> Poly {
    let c: Vec<i64> = alpha.iter().map(|&a| a as i64).collect();
    Poly::linear_form(p, &c)
}

fn product(p: u64, k: usize, forms: impl Iterator<Item = Vec<u64>>) -> Gce {
    let exp = if p == 2 { 1 } else { ((p - 1) / 2) as u32 };
    let mut acc = Poly::constant(p, k, 1);
    for alpha in forms {
        acc = acc.mul(&form(p, &alpha).pow(exp)).expect("same ring");
    }
    Gce::from_poly(acc)
}

/// `ζ = Π_α (α·t)^{(p-1)/2}` over normalized representatives `α`
/// (for `p = 2`, the product of all nonzero linear forms).
pub fn euler_class_zeta(p: u64, k: usize) -> Result<Gce> {
    check(p, k)?;
    Ok(product(p, k, projective_points(p, k).into_iter()))
}

/// The same product over the forms that do not vanish on `H`.
pub fn euler_class_zeta_h(p: u64, k: usize, h: &[Vec<u64>]) -> Result<Gce> {
    check(p, k)?;
    let basis = subgroup_basis(p, k, h)?;
    if basis.is_empty() || basis.len() == k {
        return Err(Error::InvalidArgument(
            "H must be a proper nonzero subgroup".into(),
        ));
    }
    let survives = |alpha: &Vec<u64>| {
        basis
            .iter()
            .any(|b| alpha.iter().zip(b).map(|(x, y)| x * y).sum::<u64>() % p != 0)
    };
    Ok(product(p, k, projective_points(p, k).into_iter().filter(survives)))
}

/// All subgroups of `F_p^k` of dimension `1..k-1`, each given by an
/// echelon basis.
pub fn proper_subgroups(p: u64, k: usize) -> Vec<Vec<Vec<u64>>> {
    let points = projective_points(p, k);
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    // every subgroup is spanned by at most k-1 projective points
    let mut stack: Vec<Vec<usize>> = (0..points.len()).map(|i| vec![i]).collect();
    while let Some(idx) = stack.pop() {
        let gens: Vec<Vec<u64>> = idx.iter().map(|&i| points[i].clone()).collect();
        let basis = subgroup_basis(p, k, &gens).expect("valid vectors");
        if basis.len() != idx.len() || basis.len() >= k {
            continue;
        }
        let members = span(p, &basis);
        if seen.insert(members.clone()) {
            out.push(echelon(p, &basis));
        }
        let last = *idx.last().expect("nonempty");
        for j in last + 1..points.len() {
            let mut next = idx.clone();
            next.push(j);
            stack.push(next);
        }
    }
    out.sort();
    out
}

fn span(p: u64, basis: &[Vec<u64>]) -> std::collections::BTreeSet<Vec<u64>> {
    let k = basis[0].len();
    let mut out = std::collections::BTreeSet::new();
    let count = (p as usize).pow(basis.len() as u32);
    for mut x in 0..count {
        let mut v = vec![0; k];
        for b in basis {
            let c = (x % p as usize) as u64;
            x /= p as usize;
            for (vi, bi) in v.iter_mut().zip(b) {
                *vi = (*vi + c * bi) % p;
            }
        }
        out.insert(v);
    }
    out
}

/// Reduced row-echelon form, for a canonical description of a subgroup.
fn echelon(p: u64, basis: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let mut rows = basis.to_vec();
    let k = rows[0].len();
    let mut r = 0;
    for c in 0..k {
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, piv);
        let inv = crate::arith::mod_inv(rows[r][c], p);
        for x in rows[r].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                let pivot_row = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                    *x = (*x + p - f * y % p) % p;
                }
            }
        }
        r += 1;
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::poly::poly_divides;

    #[test]
    fn zeta_examples() {
        let z = euler_class_zeta(2, 2).unwrap();
        let t1 = Poly::var(2, 2, 0);
        let t2 = Poly::var(2, 2, 1);
        let expected = t1.mul(&t2).unwrap().mul(&t1.add(&t2).unwrap()).unwrap();
        assert_eq!(z.poly_part(), expected);
        assert_eq!(euler_class_zeta(3, 1).unwrap().poly_part(), Poly::var(3, 1, 0));
        assert_eq!(euler_class_zeta(2, 1).unwrap().poly_part(), Poly::var(2, 1, 0));
    }

    #[test]
    fn zeta_h_examples() {
        let zh = euler_class_zeta_h(2, 2, &[vec![1, 0]]).unwrap();
        let t1 = Poly::var(2, 2, 0);
        let t2 = Poly::var(2, 2, 1);
        assert_eq!(zh.poly_part(), t1.mul(&t1.add(&t2).unwrap()).unwrap());
        let zh3 = euler_class_zeta_h(3, 2, &[vec![1, 0]]).unwrap();
        assert_eq!(zh3.degree(), Some(6));
        assert!(euler_class_zeta_h(2, 2, &[]).is_err());
        assert!(euler_class_zeta_h(2, 2, &[vec![1, 0], vec![0, 1]]).is_err());
        let z = euler_class_zeta(2, 2).unwrap().poly_part();
        assert!(poly_divides(&zh.poly_part(), &z).unwrap().is_some());
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(proper_subgroups(2, 2).len(), 3);
        assert_eq!(proper_subgroups(3, 2).len(), 4);
        // lines and planes of F_2^3
        assert_eq!(proper_subgroups(2, 3).len(), 14);
    }
}
