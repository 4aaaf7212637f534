//! Elements of `H^*((Z/p)^k; F_p)`: `F_p[t] ⊗ Λ[e]` for odd `p`, `F_2[t]` for `p = 2`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::poly::{monomial_string, Poly};
use crate::arith::is_prime;
use crate::error::{Error, Result};

/// Terms keyed by exterior monomials (bit `i` set means `e_{i+1}` present).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupCohomologyElement {
    pub p: u64,
    pub k: usize,
    terms: BTreeMap<u32, Poly>,
}

pub type Gce = GroupCohomologyElement;

/// Sign of `e_A · e_B` after reordering into increasing indices.
fn exterior_sign(a: u32, b: u32) -> i64 {
    let mut inversions = 0;
    for i in 0..32 {
        if b >> i & 1 == 1 {
            inversions += (a >> (i + 1)).count_ones();
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

impl GroupCohomologyElement {
    pub fn zero(p: u64, k: usize) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidArgument(format!("{p} is not prime")));
        }
        if k > 31 {
            return Err(Error::InvalidArgument(format!("rank {k} is too large")));
        }
        Ok(GroupCohomologyElement {
            p,
            k,
            terms: BTreeMap::new(),
        })
    }

    pub fn from_poly(poly: Poly) -> Self {
        let mut out = GroupCohomologyElement {
            p: poly.p,
            k: poly.k,
            terms: BTreeMap::new(),
        };
        out.add_term(0, poly);
        out
    }

    pub fn constant(p: u64, k: usize, c: i64) -> Result<Self> {
        Self::zero(p, k)?;
        Ok(Self::from_poly(Poly::constant(p, k, c)))
    }

    /// `t_i`, 0-based.
    pub fn t(p: u64, k: usize, i: usize) -> Result<Self> {
        Self::zero(p, k)?;
        if i >= k {
            return Err(Error::InvalidArgument(format!("no generator t{} when k = {k}", i + 1)));
        }
        Ok(Self::from_poly(Poly::var(p, k, i)))
    }

    /// `e_i`, 0-based; only for odd `p`.
    pub fn e(p: u64, k: usize, i: usize) -> Result<Self> {
        let mut out = Self::zero(p, k)?;
        if p == 2 {
            return Err(Error::Unsupported("for p = 2 the ring has no exterior part".into()));
        }
        if i >= k {
            return Err(Error::InvalidArgument(format!("no generator e{} when k = {k}", i + 1)));
        }
        out.add_term(1 << i, Poly::constant(p, k, 1));
        Ok(out)
    }

    pub fn from_terms(p: u64, k: usize, terms: Vec<(u32, Poly)>) -> Result<Self> {
        let mut out = Self::zero(p, k)?;
        for (mask, poly) in terms {
            if poly.p != p || poly.k != k {
                return Err(Error::InvalidArgument("term over a different ring".into()));
            }
            if p == 2 && mask != 0 {
                return Err(Error::Unsupported("for p = 2 the ring has no exterior part".into()));
            }
            if mask >> k != 0 {
                return Err(Error::InvalidArgument(format!("exterior monomial {mask:#b} uses e_j with j > {k}")));
            }
            out.add_term(mask, poly);
        }
        Ok(out)
    }

    fn add_term(&mut self, mask: u32, poly: Poly) {
        if poly.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&mask) {
            Some(old) => old.add(&poly).expect("same ring"),
            None => poly,
        };
        if !sum.is_zero() {
            self.terms.insert(mask, sum);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&u32, &Poly)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The coefficient polynomial of the exterior monomial `mask`.
    pub fn component(&self, mask: u32) -> Poly {
        self.terms.get(&mask).cloned().unwrap_or_else(|| Poly::zero(self.p, self.k))
    }

    /// The purely polynomial part.
    pub fn poly_part(&self) -> Poly {
        self.component(0)
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|&m| m == 0)
    }

    fn t_weight(&self) -> u32 {
        if self.p == 2 {
            1
        } else {
            2
        }
    }

    /// Cohomological degrees of all terms, ascending and deduplicated.
    pub fn degrees(&self) -> Vec<u32> {
        let w = self.t_weight();
        let mut out: Vec<u32> = self
            .terms
            .iter()
            .flat_map(|(m, poly)| {
                poly.terms()
                    .map(move |(e, _)| m.count_ones() + w * e.iter().sum::<u32>())
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Degree of a homogeneous element (`None` for zero or mixed degrees).
    pub fn degree(&self) -> Option<u32> {
        match self.degrees().as_slice() {
            [d] => Some(*d),
            _ => None,
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.p != other.p || self.k != other.k {
            return Err(Error::InvalidArgument(format!(
                "elements of different rings: (p={}, k={}) and (p={}, k={})",
                self.p, self.k, other.p, other.k
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (&m, poly) in &other.terms {
            out.add_term(m, poly.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: i64) -> Self {
        let mut out = GroupCohomologyElement {
            p: self.p,
            k: self.k,
            terms: BTreeMap::new(),
        };
        for (&m, poly) in &self.terms {
            out.add_term(m, poly.scale(c));
        }
        out
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut acc = Self::constant(self.p, self.k, 1)?;
        for _ in 0..e {
            acc = gc_multiply(&acc, self)?;
        }
        Ok(acc)
    }

    /// Restriction along the inclusion of the subgroup spanned by `vectors`;
    /// the result lives over `(p, dim H)`.
    pub fn restrict(&self, vectors: &[Vec<u64>]) -> Result<Self> {
        let basis = subgroup_basis(self.p, self.k, vectors)?;
        let h = basis.len();
        // t_i ↦ Σ_j (b_j)_i t'_j, and the same for e_i
        let forms: Vec<Vec<i64>> = (0..self.k)
            .map(|i| basis.iter().map(|b| b[i] as i64).collect())
            .collect();
        let t_images: Vec<Poly> = forms.iter().map(|f| linear(self.p, h, f)).collect();
        let mut out = Self::zero(self.p, h)?;
        for (&mask, poly) in &self.terms {
            let mut ext = Self::constant(self.p, h, 1)?;
            for (i, form) in forms.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    let mut image = Self::zero(self.p, h)?;
                    for (j, &c) in form.iter().enumerate() {
                        image = image.add(&Self::e(self.p, h, j)?.scale(c))?;
                    }
                    ext = gc_multiply(&ext, &image)?;
                }
            }
            let sub = Self::from_poly(poly.substitute(&t_images, h)?);
            out = out.add(&gc_multiply(&ext, &sub)?)?;
        }
        Ok(out)
    }
}

fn linear(p: u64, k: usize, coeffs: &[i64]) -> Poly {
    if k == 0 {
        return Poly::zero(p, 0);
    }
    Poly::linear_form(p, coeffs)
}

/// Graded-commutative product.
pub fn gc_multiply(a: &Gce, b: &Gce) -> Result<Gce> {
    a.check(b)?;
    let mut out = Gce::zero(a.p, a.k)?;
    for (&ma, pa) in &a.terms {
        for (&mb, pb) in &b.terms {
            if ma & mb != 0 {
                continue;
            }
            let prod = pa.mul(pb)?.scale(exterior_sign(ma, mb));
            out.add_term(ma | mb, prod);
        }
    }
    Ok(out)
}

/// A basis of the span of `vectors` in `F_p^k`: the independent members, in order.
pub fn subgroup_basis(p: u64, k: usize, vectors: &[Vec<u64>]) -> Result<Vec<Vec<u64>>> {
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for v in vectors {
        if v.len() != k {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} in F_{p}^{k}",
                v.len()
            )));
        }
        if v.iter().any(|&x| x >= p) {
            return Err(Error::InvalidArgument(format!("{v:?} has entries outside F_{p}")));
        }
        rows.push(v.clone());
    }
    let mut basis: Vec<Vec<u64>> = Vec::new();
    let mut echelon: Vec<(usize, Vec<u64>)> = Vec::new();
    for v in rows {
        let mut w = v.clone();
        for (piv, r) in &echelon {
            let c = w[*piv];
            if c != 0 {
                let f = c * crate::arith::mod_inv(r[*piv], p) % p;
                for (x, y) in w.iter_mut().zip(r) {
                    *x = (*x + p - f * y % p) % p;
                }
            }
        }
        if let Some(piv) = w.iter().position(|&x| x != 0) {
            echelon.push((piv, w));
            basis.push(v);
        }
    }
    Ok(basis)
}

impl fmt::Display for GroupCohomologyElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (&mask, poly) in &self.terms {
            let ext: Vec<String> = (0..self.k)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| if self.k == 1 { "e".to_string() } else { format!("e{}", i + 1) })
                .collect();
            for (e, &c) in poly.terms().collect::<Vec<_>>().into_iter().rev() {
                let mut pieces = ext.clone();
                let mono = monomial_string(e, self.k);
                if !mono.is_empty() {
                    pieces.push(mono);
                }
                let body = pieces.join(" ");
                parts.push(match (c, body.is_empty()) {
                    (_, true) => c.to_string(),
                    (1, false) => body,
                    _ => format!("{c}{body}"),
                });
            }
        }
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
struct TermDoc {
    e_monomial: u32,
    poly: serde_json::Value,
}

#[derive(Serialize, Deserialize)]
struct ElementDoc {
    p: u64,
    k: usize,
    terms: Vec<TermDoc>,
}

impl Serialize for GroupCohomologyElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ElementDoc {
            p: self.p,
            k: self.k,
            terms: self
                .terms
                .iter()
                .map(|(&m, poly)| TermDoc {
                    e_monomial: m,
                    poly: poly.to_json_terms(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GroupCohomologyElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let doc = ElementDoc::deserialize(d)?;
        let terms = doc
            .terms
            .iter()
            .map(|t| Poly::from_json_terms(doc.p, doc.k, &t.poly).map(|p| (t.e_monomial, p)))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        Gce::from_terms(doc.p, doc.k, terms).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exterior_rules() {
        let e1 = Gce::e(3, 2, 0).unwrap();
        let e2 = Gce::e(3, 2, 1).unwrap();
        assert!(gc_multiply(&e1, &e1).unwrap().is_zero());
        let s = gc_multiply(&e1, &e2).unwrap().add(&gc_multiply(&e2, &e1).unwrap()).unwrap();
        assert!(s.is_zero());
    }

    #[test]
    fn products_and_degrees() {
        let e = Gce::e(3, 1, 0).unwrap();
        let t = Gce::t(3, 1, 0).unwrap();
        let et = gc_multiply(&e, &t).unwrap();
        let et2 = gc_multiply(&et, &t).unwrap();
        assert_eq!(et2.to_string(), "e t^2");
        assert_eq!(et2.degree(), Some(5));
        assert_eq!(Gce::t(2, 1, 0).unwrap().degree(), Some(1));
    }

    #[test]
    fn restriction_examples() {
        let t1 = Gce::t(2, 2, 0).unwrap();
        let t2 = Gce::t(2, 2, 1).unwrap();
        let h = vec![vec![1, 0]];
        assert_eq!(t1.restrict(&h).unwrap(), Gce::t(2, 1, 0).unwrap());
        assert!(t2.restrict(&h).unwrap().is_zero());
        let x = Gce::t(3, 2, 0).unwrap().add(&Gce::t(3, 2, 1).unwrap()).unwrap();
        let r = x.restrict(&[vec![1, 1]]).unwrap();
        assert_eq!(r, Gce::t(3, 1, 0).unwrap().scale(2));
        let r0 = x.restrict(&[]).unwrap();
        assert!(r0.is_zero());
        let one = Gce::constant(3, 2, 1).unwrap();
        assert_eq!(one.restrict(&[]).unwrap(), Gce::constant(3, 0, 1).unwrap());
    }

    #[test]
    fn serde_round_trip() {
        let e = Gce::e(5, 2, 1).unwrap();
        let t = Gce::t(5, 2, 0).unwrap().pow(3).unwrap();
        let x = gc_multiply(&e, &t).unwrap().add(&t).unwrap();
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(serde_json::from_str::<Gce>(&s).unwrap(), x);
    }
}
