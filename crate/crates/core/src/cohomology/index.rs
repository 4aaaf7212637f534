//! Fadell–Husseini index descriptors for configuration spaces.

use serde::{Deserialize, Serialize};

use super::element::{gc_multiply, Gce};
use super::euler::euler_class_zeta;
use super::poly::poly_divides;
use crate::arith::is_prime;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum IdealDescriptor {
    /// `H^{≥ m}`.
    Truncation { min_degree: u32 },
    Generated { generators: Vec<Gce> },
}

/// Both exponent vectors and exterior masks of `small` fit inside `big`.
fn monomial_divides(small: (u32, &[u32]), big: (u32, &[u32])) -> bool {
    small.0 & !big.0 == 0 && small.1.iter().zip(big.1).all(|(a, b)| a <= b)
}

fn single_monomial(x: &Gce) -> Option<(u32, Vec<u32>)> {
    let mut terms = x.terms();
    let (&mask, poly) = terms.next()?;
    if terms.next().is_some() || poly.num_terms() != 1 {
        return None;
    }
    let (e, _) = poly.leading_term()?;
    Some((mask, e.clone()))
}

impl IdealDescriptor {
    /// Membership for truncations (degree test), monomial ideals (termwise
    /// divisibility) and principal polynomial ideals (exact division).
    pub fn contains(&self, x: &Gce) -> Result<bool> {
        if x.is_zero() {
            return Ok(true);
        }
        match self {
            IdealDescriptor::Truncation { min_degree } => {
                Ok(x.degrees().iter().all(|d| d >= min_degree))
            }
            IdealDescriptor::Generated { generators } => {
                if let Some(monos) = generators.iter().map(single_monomial).collect::<Option<Vec<_>>>() {
                    return Ok(x.terms().all(|(&mask, poly)| {
                        poly.terms().all(|(e, _)| {
                            monos.iter().any(|(gm, ge)| monomial_divides((*gm, ge), (mask, e)))
                        })
                    }));
                }
                if let [g] = generators.as_slice() {
                    if g.is_polynomial() && x.is_polynomial() {
                        return Ok(poly_divides(&g.poly_part(), &x.poly_part())?.is_some());
                    }
                }
                Err(Error::Unsupported(
                    "membership is decided only for truncations, monomial ideals and principal polynomial ideals".into(),
                ))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonMembership {
    pub element: Gce,
    pub degree: u32,
    pub in_truncation: bool,
    pub in_generated: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FhIndexReport {
    pub p: u64,
    pub d: u64,
    pub index: IdealDescriptor,
    pub generators: IdealDescriptor,
    /// Degrees up to which the two presentations were compared.
    pub presentations_agree_through: u32,
    pub presentations_agree: bool,
    /// `ζ^{d-1}`, the generator of the index of `S(W_p^{⊕(d-1)})`.
    pub sphere_generator: Gce,
    pub certificate: NonMembership,
    /// No `Z/p`-map `F(R^d, p) → S(W_p^{⊕(d-1)})` exists.
    pub no_equivariant_map: bool,
}

/// Additive basis of `H^j(Z/p; F_p)`.
fn basis_in_degree(p: u64, j: u32) -> Result<Vec<Gce>> {
    let t = Gce::t(p, 1, 0)?;
    if p == 2 {
        return Ok(vec![t.pow(j)?]);
    }
    if j.is_multiple_of(2) {
        Ok(vec![t.pow(j / 2)?])
    } else {
        Ok(vec![gc_multiply(&Gce::e(p, 1, 0)?, &t.pow(j / 2)?)?])
    }
}

/// The index of `F(R^d, p)` under the cyclic shift: `H^{≥ (d-1)(p-1)+1}`.
pub fn fh_index_prime(p: u64, d: u64) -> Result<FhIndexReport> {
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    if d < 2 {
        return Err(Error::InvalidArgument(format!("need d > 1, got {d}")));
    }
    let top = (d - 1) * (p - 1);
    if top > 4096 {
        return Err(Error::SizeLimit {
            what: "(d-1)(p-1)".into(),
            actual: top as u128,
            cap: 4096,
        });
    }
    let top = top as u32;
    let m = top + 1;
    let t = Gce::t(p, 1, 0)?;
    let generators = if p == 2 {
        vec![t.pow(top + 1)?]
    } else {
        let half = top / 2;
        vec![gc_multiply(&Gce::e(p, 1, 0)?, &t.pow(half)?)?, t.pow(half + 1)?]
    };
    let index = IdealDescriptor::Truncation { min_degree: m };
    let generated = IdealDescriptor::Generated { generators };

    let through = m + 4;
    let mut agree = true;
    for j in 0..=through {
        for b in basis_in_degree(p, j)? {
            if index.contains(&b)? != generated.contains(&b)? {
                agree = false;
            }
        }
    }

    let zeta = euler_class_zeta(p, 1)?;
    let sphere_generator = zeta.pow((d - 1) as u32)?;
    let in_truncation = index.contains(&sphere_generator)?;
    let in_generated = generated.contains(&sphere_generator)?;
    let degree = sphere_generator.degree().unwrap_or(0);
    Ok(FhIndexReport {
        p,
        d,
        index,
        generators: generated,
        presentations_agree_through: through,
        presentations_agree: agree,
        no_equivariant_map: !in_truncation && !in_generated,
        certificate: NonMembership {
            element: sphere_generator.clone(),
            degree,
            in_truncation,
            in_generated,
        },
        sphere_generator,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FhIndexBounds {
    pub p: u64,
    pub k: u32,
    pub d: u64,
    /// `(d-1)(p^k - p^{k-1})`.
    pub n: u64,
    /// `Index ⊆ H^{≥ N+1}`.
    pub upper_containment_degree: u64,
    /// `Index ∩ H^{N+1} ≠ 0`.
    pub nonvanishing_degree: u64,
    /// `N` from an orbit scan over `Π_{p^k}`, when requested.
    pub scanned_n: Option<u64>,
    pub notes: Vec<String>,
}

/// Degree bookkeeping for the index of `F(R^d, p^k)` under `(Z/p)^k`.
/// `scan` recomputes `N` from the lattice.
pub fn fh_index_bounds(p: u64, k: u32, d: u64, scan: bool) -> Result<FhIndexBounds> {
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    if k == 0 || d < 2 {
        return Err(Error::InvalidArgument(format!("need k ≥ 1 and d > 1, got k={k}, d={d}")));
    }
    let pk = p
        .checked_pow(k)
        .ok_or_else(|| Error::InvalidArgument("p^k overflows".into()))?;
    let n = (d - 1) * (pk - pk / p);
    let scanned_n = if scan {
        let s = crate::arrangement::full_stabilizer_degree(p as usize, k as usize, d as usize)?;
        Some(s.degree as u64)
    } else {
        None
    };
    let mut notes = vec![format!(
        "the index is zero through degree {n} and nonzero in degree {}",
        n + 1
    )];
    if k == 1 {
        notes.push(format!(
            "for k = 1 the full index is known: H^(>= {})",
            n + 1
        ));
    }
    if let Some(s) = scanned_n {
        if s != n {
            notes.push(format!("orbit scan found N = {s}, formula gives {n}"));
        }
    }
    Ok(FhIndexBounds {
        p,
        k,
        d,
        n,
        upper_containment_degree: n + 1,
        nonvanishing_degree: n + 1,
        scanned_n,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_examples() {
        let r = fh_index_prime(3, 2).unwrap();
        assert_eq!(r.index, IdealDescriptor::Truncation { min_degree: 3 });
        let IdealDescriptor::Generated { generators } = &r.generators else { panic!() };
        let shown: Vec<String> = generators.iter().map(ToString::to_string).collect();
        assert_eq!(shown, vec!["e t", "t^2"]);
        assert!(r.presentations_agree);
        assert!(r.no_equivariant_map);
        assert_eq!(r.certificate.element.to_string(), "t");

        let r = fh_index_prime(2, 2).unwrap();
        assert_eq!(r.index, IdealDescriptor::Truncation { min_degree: 2 });
        let IdealDescriptor::Generated { generators } = &r.generators else { panic!() };
        assert_eq!(generators[0].to_string(), "t^2");

        let r = fh_index_prime(5, 3).unwrap();
        assert_eq!(r.index, IdealDescriptor::Truncation { min_degree: 9 });
        let IdealDescriptor::Generated { generators } = &r.generators else { panic!() };
        let shown: Vec<String> = generators.iter().map(ToString::to_string).collect();
        assert_eq!(shown, vec!["e t^4", "t^5"]);
        assert!(fh_index_prime(4, 2).is_err());
    }

    #[test]
    fn bounds() {
        let b = fh_index_bounds(2, 2, 2, true).unwrap();
        assert_eq!((b.n, b.upper_containment_degree, b.nonvanishing_degree), (2, 3, 3));
        assert_eq!(b.scanned_n, Some(2));
        assert_eq!(fh_index_bounds(3, 2, 2, false).unwrap().n, 6);
        assert_eq!(fh_index_bounds(5, 1, 3, false).unwrap().n, 8);
    }
}
