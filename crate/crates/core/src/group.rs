//! Permutation groups acting on `[n]` and on the partition lattice.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::partition::{Partition, PartitionLattice};

/// A bijection of `{1..n}`, stored 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || seen[i] {
                return Err(Error::InvalidArgument(format!(
                    "{images:?} is not a bijection"
                )));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of degree `n` from 1-based cycles.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (pos, &x) in cycle.iter().enumerate() {
                if x == 0 || x > n {
                    return Err(Error::InvalidArgument(format!("{x} outside 1..={n}")));
                }
                if touched[x - 1] {
                    return Err(Error::InvalidArgument(format!("{x} in two cycles")));
                }
                touched[x - 1] = true;
                let y = cycle[(pos + 1) % cycle.len()];
                images[x - 1] = y - 1;
            }
        }
        Permutation::new(images)
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 0-based images.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    /// Multiplicative order.
    pub fn order(&self) -> usize {
        self.cycles()
            .iter()
            .map(Vec::len)
            .fold(1, num_integer::lcm)
    }

    /// `+1` for even permutations, `-1` for odd ones.
    pub fn sign(&self) -> i32 {
        let transpositions: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        if transpositions.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn fixed_points(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &j)| *i == j)
            .count()
    }

    pub fn act(&self, p: &Partition) -> Partition {
        p.permuted(&self.images)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nontrivial: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if nontrivial.is_empty() {
            return write!(f, "()");
        }
        for c in nontrivial {
            let body: Vec<String> = c.iter().map(ToString::to_string).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

/// Parses cycle notation such as `"(1 2 3)(4 5)"`; the degree is the
/// largest point mentioned unless a larger degree is supplied via
/// [`Permutation::from_cycles`].
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        for chunk in s.split('(').map(str::trim).filter(|c| !c.is_empty()) {
            let body = chunk
                .strip_suffix(')')
                .ok_or_else(|| Error::InvalidArgument(format!("unclosed cycle in {s:?}")))?;
            let cycle = body
                .split([' ', ','])
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::InvalidArgument(format!("bad point {t:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            cycles.push(cycle);
        }
        let n = cycles.iter().flatten().copied().max().unwrap_or(0);
        let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
        Permutation::from_cycles(n, &refs)
    }
}

/// A finite permutation group listed element by element; the identity is
/// always `elements()[0]`.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    n: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
}

impl FiniteGroup {
    pub fn trivial(n: usize) -> Self {
        FiniteGroup {
            n,
            generators: vec![],
            elements: vec![Permutation::identity(n)],
        }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.elements.contains(g)
    }

    /// Index `[self : sub]`.
    pub fn index_of(&self, sub: &FiniteGroup) -> usize {
        self.order() / sub.order()
    }
}

pub fn group_from_generators(n: usize, gens: &[Permutation]) -> Result<FiniteGroup> {
    group_from_generators_with(n, gens, &Limits::default())
}

/// Closure of `gens` under composition, by breadth-first search.
pub fn group_from_generators_with(
    n: usize,
    gens: &[Permutation],
    limits: &Limits,
) -> Result<FiniteGroup> {
    for g in gens {
        if g.degree() != n {
            return Err(Error::DegreeMismatch {
                expected: n,
                actual: g.degree(),
            });
        }
    }
    let id = Permutation::identity(n);
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut elements = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = g.compose(&x);
            if seen.insert(y.clone()) {
                if elements.len() >= limits.max_group_order {
                    return Err(Error::SizeLimit {
                        what: "group order".into(),
                        actual: elements.len() as u128 + 1,
                        cap: limits.max_group_order as u128,
                    });
                }
                elements.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(FiniteGroup {
        n,
        generators: gens.to_vec(),
        elements,
    })
}

/// Point `i` (0-based) of `{1..p^k}` as a vector of `F_p^k`; the first
/// coordinate varies fastest, so `1 ↔ (0,0)`, `2 ↔ (1,0)`, `3 ↔ (0,1)`.
pub fn point_to_vector(i: usize, p: usize, k: usize) -> Vec<usize> {
    let mut v = Vec::with_capacity(k);
    let mut x = i;
    for _ in 0..k {
        v.push(x % p);
        x /= p;
    }
    v
}

pub fn vector_to_point(v: &[usize], p: usize) -> usize {
    v.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Translation permutation of `F_p^k` by `shift`.
pub fn translation(p: usize, k: usize, shift: &[usize]) -> Permutation {
    let n = p.pow(k as u32);
    let images = (0..n)
        .map(|i| {
            let v = point_to_vector(i, p, k);
            let w: Vec<usize> = v.iter().zip(shift).map(|(a, b)| (a + b) % p).collect();
            vector_to_point(&w, p)
        })
        .collect();
    Permutation { images }
}

pub fn regular_embedding(p: usize, k: usize) -> Result<FiniteGroup> {
    regular_embedding_with(p, k, &Limits::default())
}

/// `(Z/p)^k` acting on itself by translations, as a subgroup of `Sym_{p^k}`.
pub fn regular_embedding_with(p: usize, k: usize, limits: &Limits) -> Result<FiniteGroup> {
    if !crate::arith::is_prime(p as u64) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let n = p
        .checked_pow(k as u32)
        .ok_or_else(|| Error::SizeLimit {
            what: "p^k".into(),
            actual: u128::MAX,
            cap: limits.max_degree as u128,
        })?;
    limits.check_degree(n)?;
    let gens: Vec<Permutation> = (0..k)
        .map(|j| {
            let mut e = vec![0; k];
            e[j] = 1;
            translation(p, k, &e)
        })
        .collect();
    group_from_generators_with(n, &gens, limits)
}

/// One orbit of a group acting on `Π_n`.
#[derive(Clone, Debug)]
pub struct OrbitEntry {
    /// First orbit element in lattice order.
    pub representative: Partition,
    pub representative_index: usize,
    pub members: Vec<usize>,
    pub orbit_size: usize,
    pub stabilizer: FiniteGroup,
}

impl OrbitEntry {
    pub fn is_fully_stabilized(&self, group: &FiniteGroup) -> bool {
        self.stabilizer.order() == group.order()
    }
}

pub fn orbits_and_stabilizers(
    group: &FiniteGroup,
    lattice: &PartitionLattice,
) -> Result<Vec<OrbitEntry>> {
    if group.degree() != lattice.n() {
        return Err(Error::DegreeMismatch {
            expected: lattice.n(),
            actual: group.degree(),
        });
    }
    let mut assigned = vec![false; lattice.len()];
    let mut out = Vec::new();
    for i in 0..lattice.len() {
        if assigned[i] {
            continue;
        }
        let rep = lattice.element(i);
        let mut members: Vec<usize> = Vec::new();
        let mut stab = Vec::new();
        for g in group.elements() {
            let j = lattice
                .index_of(&g.act(rep))
                .expect("lattice is closed under the action");
            if j == i {
                stab.push(g.clone());
            }
            if !assigned[j] {
                assigned[j] = true;
                members.push(j);
            }
        }
        members.sort_unstable();
        let stabilizer = FiniteGroup {
            n: group.degree(),
            generators: stab.clone(),
            elements: stab,
        };
        out.push(OrbitEntry {
            representative: rep.clone(),
            representative_index: i,
            orbit_size: members.len(),
            members,
            stabilizer,
        });
    }
    Ok(out)
}

/// Orbit lookup: lattice index → position in the orbit list.
pub fn orbit_map(orbits: &[OrbitEntry]) -> HashMap<usize, usize> {
    orbits
        .iter()
        .enumerate()
        .flat_map(|(o, e)| e.members.iter().map(move |&m| (m, o)))
        .collect()
}

/// Serialized group: generators in cycle notation.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GroupDocument {
    pub degree: usize,
    pub order: usize,
    pub generators: Vec<String>,
}

impl From<&FiniteGroup> for GroupDocument {
    fn from(g: &FiniteGroup) -> Self {
        GroupDocument {
            degree: g.degree(),
            order: g.order(),
            generators: g.generators().iter().map(ToString::to_string).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::build_partition_lattice;

    fn perm(s: &str, n: usize) -> Permutation {
        let p: Permutation = s.parse().unwrap();
        let mut images = p.images().to_vec();
        images.extend(images.len()..n);
        Permutation::new(images).unwrap()
    }

    #[test]
    fn closure_examples() {
        let c3 = group_from_generators(3, &[perm("(1 2 3)", 3)]).unwrap();
        assert_eq!(c3.order(), 3);
        assert_eq!(group_from_generators(3, &[]).unwrap().order(), 1);
        let s3 = group_from_generators(3, &[perm("(1 2)", 3), perm("(1 2 3)", 3)]).unwrap();
        assert_eq!(s3.order(), 6);
    }

    #[test]
    fn closure_cap() {
        let limits = Limits {
            max_group_order: 10,
            ..Limits::default()
        };
        let err = group_from_generators_with(
            4,
            &[perm("(1 2)", 4), perm("(1 2 3 4)", 4)],
            &limits,
        )
        .unwrap_err();
        assert!(matches!(err, Error::SizeLimit { .. }));
    }

    #[test]
    fn degree_mismatch() {
        assert!(matches!(
            group_from_generators(4, &[perm("(1 2 3)", 3)]),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn regular_embedding_generators() {
        let g = regular_embedding(2, 2).unwrap();
        assert_eq!(g.generators()[0].to_string(), "(1 2)(3 4)");
        assert_eq!(g.generators()[1].to_string(), "(1 3)(2 4)");
        let c3 = regular_embedding(3, 1).unwrap();
        assert_eq!(c3.generators()[0].to_string(), "(1 2 3)");
        let g8 = regular_embedding(2, 3).unwrap();
        assert_eq!(g8.order(), 8);
        for e in g8.elements().iter().filter(|e| !e.is_identity()) {
            let cycles = e.cycles();
            assert_eq!(cycles.len(), 4);
            assert!(cycles.iter().all(|c| c.len() == 2));
        }
    }

    #[test]
    fn regular_embedding_is_free() {
        for (p, k) in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (2, 4)] {
            let g = regular_embedding(p, k).unwrap();
            assert_eq!(g.order(), p.pow(k as u32));
            for e in g.elements().iter().filter(|e| !e.is_identity()) {
                assert_eq!(e.fixed_points(), 0);
            }
        }
        assert!(regular_embedding(4, 1).is_err());
    }

    #[test]
    fn orbit_stabilizer_theorem() {
        let s4 = group_from_generators(4, &[perm("(1 2)", 4), perm("(1 2 3 4)", 4)]).unwrap();
        let groups = [
            s4,
            regular_embedding(2, 2).unwrap(),
            FiniteGroup::trivial(4),
        ];
        let lattice = build_partition_lattice(4).unwrap();
        for g in &groups {
            let orbits = orbits_and_stabilizers(g, &lattice).unwrap();
            let total: usize = orbits.iter().map(|o| o.orbit_size).sum();
            assert_eq!(total, lattice.len());
            for o in &orbits {
                assert_eq!(o.orbit_size * o.stabilizer.order(), g.order());
            }
            let top = orbits
                .iter()
                .find(|o| o.representative == Partition::coarsest(4))
                .unwrap();
            assert!(top.is_fully_stabilized(g));
        }
    }

    #[test]
    fn klein_group_full_stabilizers() {
        let g = regular_embedding(2, 2).unwrap();
        let lattice = build_partition_lattice(4).unwrap();
        let orbits = orbits_and_stabilizers(&g, &lattice).unwrap();
        let mut full: Vec<String> = orbits
            .iter()
            .filter(|o| o.representative.size() == 2 && o.is_fully_stabilized(&g))
            .map(|o| o.representative.to_string())
            .collect();
        full.sort();
        assert_eq!(full, vec!["12|34", "13|24", "14|23"]);
    }

    #[test]
    fn cyclic_orbit_on_pi3() {
        let g = group_from_generators(3, &[perm("(1 2 3)", 3)]).unwrap();
        let lattice = build_partition_lattice(3).unwrap();
        let orbits = orbits_and_stabilizers(&g, &lattice).unwrap();
        let atoms: Vec<_> = orbits
            .iter()
            .filter(|o| o.representative.size() == 2)
            .collect();
        assert_eq!(atoms.len(), 1);
        assert_eq!(atoms[0].orbit_size, 3);
        assert_eq!(atoms[0].stabilizer.order(), 1);
    }
}
