//! Polynomials in `t_1, …, t_k` over `F_p`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{mod_i64, mod_inv};
use crate::error::{Error, Result};

/// Terms keyed by exponent vectors; the lexicographically largest key is
/// the leading term.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    pub p: u64,
    pub k: usize,
    terms: BTreeMap<Vec<u32>, u64>,
}

impl Poly {
    pub fn zero(p: u64, k: usize) -> Self {
        Poly {
            p,
            k,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(p: u64, k: usize, c: i64) -> Self {
        Poly::monomial(p, k, vec![0; k], c)
    }

    pub fn monomial(p: u64, k: usize, exps: Vec<u32>, c: i64) -> Self {
        assert_eq!(exps.len(), k, "exponent vector length");
        let mut out = Poly::zero(p, k);
        out.add_term(exps, mod_i64(c, p));
        out
    }

    /// `t_i` (0-based `i`).
    pub fn var(p: u64, k: usize, i: usize) -> Self {
        let mut exps = vec![0; k];
        exps[i] = 1;
        Poly::monomial(p, k, exps, 1)
    }

    /// `Σ c_i t_i`.
    pub fn linear_form(p: u64, coeffs: &[i64]) -> Self {
        let k = coeffs.len();
        let mut out = Poly::zero(p, k);
        for (i, &c) in coeffs.iter().enumerate() {
            let mut exps = vec![0; k];
            exps[i] = 1;
            out.add_term(exps, mod_i64(c, p));
        }
        out
    }

    fn add_term(&mut self, exps: Vec<u32>, c: u64) {
        let c = c % self.p;
        if c == 0 {
            return;
        }
        let p = self.p;
        let slot = self.terms.entry(exps).or_insert(0);
        *slot = (*slot + c) % p;
        if *slot == 0 {
            self.terms.retain(|_, v| *v != 0);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &u64)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<(&Vec<u32>, &u64)> {
        self.terms.iter().next_back()
    }

    /// Largest total degree of a term (`None` for zero).
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(first) => degs.all(|d| d == first),
        }
    }

    fn check(&self, other: &Poly) -> Result<()> {
        if self.p != other.p || self.k != other.k {
            return Err(Error::InvalidArgument(format!(
                "polynomials over different rings: (p={}, k={}) and (p={}, k={})",
                self.p, self.k, other.p, other.k
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: i64) -> Poly {
        let c = mod_i64(c, self.p);
        let mut out = Poly::zero(self.p, self.k);
        for (e, &v) in &self.terms {
            out.add_term(e.clone(), v * c % self.p);
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.add(&other.scale(-1))
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let p = self.p;
        let mut out = Poly::zero(p, self.k);
        for (a, &x) in &self.terms {
            for (b, &y) in &other.terms {
                let e = a.iter().zip(b).map(|(u, v)| u + v).collect();
                out.add_term(e, x * y % p);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::constant(self.p, self.k, 1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same ring");
            }
            base = base.mul(&base).expect("same ring");
            e >>= 1;
        }
        acc
    }

    /// Replaces `t_i` by `images[i]`, a polynomial in a possibly different
    /// number of variables.
    pub fn substitute(&self, images: &[Poly], target_k: usize) -> Result<Poly> {
        if images.len() != self.k {
            return Err(Error::DimensionMismatch(format!(
                "{} images for {} variables",
                images.len(),
                self.k
            )));
        }
        let mut out = Poly::zero(self.p, target_k);
        for (e, &c) in &self.terms {
            let mut term = Poly::constant(self.p, target_k, c as i64);
            for (img, &x) in images.iter().zip(e) {
                if x > 0 {
                    term = term.mul(&img.pow(x))?;
                }
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Division by a single divisor: `self = f·q + r` where no term of `r`
    /// is divisible by the leading term of `f`.
    pub fn divide(&self, f: &Poly) -> Result<(Poly, Poly)> {
        self.check(f)?;
        let (lead_e, &lead_c) = f
            .leading_term()
            .ok_or_else(|| Error::InvalidArgument("division by the zero polynomial".into()))?;
        let p = self.p;
        let inv = mod_inv(lead_c, p);
        let mut rest = self.clone();
        let mut quotient = Poly::zero(p, self.k);
        let mut remainder = Poly::zero(p, self.k);
        while let Some((e, &c)) = rest.leading_term() {
            let e = e.clone();
            if e.iter().zip(lead_e).all(|(a, b)| a >= b) {
                let qe: Vec<u32> = e.iter().zip(lead_e).map(|(a, b)| a - b).collect();
                let qc = c * inv % p;
                let step = Poly::monomial(p, self.k, qe.clone(), qc as i64);
                quotient.add_term(qe, qc);
                rest = rest.sub(&step.mul(f)?)?;
            } else {
                remainder.add_term(e.clone(), c);
                rest.terms.remove(&e);
            }
        }
        Ok((quotient, remainder))
    }
}

/// Exact divisibility of `g` by `f`; the quotient is re-verified.
pub fn poly_divides(f: &Poly, g: &Poly) -> Result<Option<Poly>> {
    if f.is_zero() {
        return Err(Error::InvalidArgument("divisor is zero".into()));
    }
    let (q, r) = g.divide(f)?;
    if !r.is_zero() {
        return Ok(None);
    }
    if f.mul(&q)? != *g {
        return Err(Error::Structural("quotient failed re-verification".into()));
    }
    Ok(Some(q))
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, &c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mono = monomial_string(e, self.k);
            match (c, mono.is_empty()) {
                (_, true) => write!(f, "{c}")?,
                (1, false) => write!(f, "{mono}")?,
                _ => write!(f, "{c}{mono}")?,
            }
        }
        Ok(())
    }
}

/// `t_1^2 t_3` style; a lone variable in one unknown prints as `t`.
pub(crate) fn monomial_string(e: &[u32], k: usize) -> String {
    let mut parts = Vec::new();
    for (i, &x) in e.iter().enumerate() {
        if x == 0 {
            continue;
        }
        let name = if k == 1 { "t".to_string() } else { format!("t{}", i + 1) };
        if x == 1 {
            parts.push(name);
        } else {
            parts.push(format!("{name}^{x}"));
        }
    }
    parts.join(" ")
}

#[derive(Serialize, Deserialize)]
struct TermDoc {
    exps: Vec<u32>,
    coeff: u64,
}

#[derive(Serialize, Deserialize)]
struct PolyDoc {
    p: u64,
    k: usize,
    terms: Vec<TermDoc>,
}

impl Serialize for Poly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_term_docs_owned().serialize(s)
    }
}

impl Poly {
    fn to_term_docs_owned(&self) -> PolyDoc {
        PolyDoc {
            p: self.p,
            k: self.k,
            terms: self.term_docs(),
        }
    }

    fn term_docs(&self) -> Vec<TermDoc> {
        self.terms
            .iter()
            .map(|(e, &c)| TermDoc {
                exps: e.clone(),
                coeff: c,
            })
            .collect()
    }

    /// `[{exps, coeff}]` as used inside serialized cohomology elements.
    pub fn to_json_terms(&self) -> serde_json::Value {
        serde_json::to_value(self.term_docs()).expect("plain data")
    }

    pub fn from_json_terms(p: u64, k: usize, v: &serde_json::Value) -> Result<Poly> {
        let docs: Vec<TermDoc> = serde_json::from_value(v.clone())?;
        let mut out = Poly::zero(p, k);
        for t in docs {
            if t.exps.len() != k {
                return Err(Error::Serialization(format!(
                    "exponent vector of length {} in {k} variables",
                    t.exps.len()
                )));
            }
            out.add_term(t.exps, t.coeff);
        }
        Ok(out)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let doc = PolyDoc::deserialize(d)?;
        let v = serde_json::to_value(&doc.terms).map_err(serde::de::Error::custom)?;
        Poly::from_json_terms(doc.p, doc.k, &v).map_err(serde::de::Error::custom)
    }
}
