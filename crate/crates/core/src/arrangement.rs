//! Intersection lattices of linear subspace arrangements, Goresky–MacPherson
//! cohomology of their complements and its equivariant bookkeeping.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::arith::factorial;
use crate::complex::{chain_complex, order_complex, Region, SimplicialComplex};
use crate::error::{Error, Result};
use crate::group::{orbits_and_stabilizers, FiniteGroup, Permutation};
use crate::limits::Limits;
use crate::linalg::{homology, Coefficients, HomologySummary, Int};
use crate::partition::{Partition, PartitionLattice};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrangementElement {
    pub id: String,
    pub dim: usize,
    pub codim: usize,
}

#[derive(Clone, Debug)]
enum Order {
    /// Reflexive-transitive relation as a dense matrix.
    Explicit(Vec<Vec<bool>>),
    Partitions { lattice: PartitionLattice },
}

/// Intersection lattice in reverse-inclusion order, listed by increasing
/// codimension so that index 0 is the ambient space.
#[derive(Clone, Debug)]
pub struct ArrangementLattice {
    pub ambient_dim: usize,
    elements: Vec<ArrangementElement>,
    order: Order,
}

impl ArrangementLattice {
    /// `elements` are `(id, dim)`; `relations` are pairs `(x, y)` with
    /// `x ≤ y`, closed up reflexively and transitively here.
    pub fn explicit(
        ambient_dim: usize,
        elements: Vec<(String, usize)>,
        relations: &[(usize, usize)],
    ) -> Result<Self> {
        let m = elements.len();
        if m == 0 {
            return Err(Error::Structural("an arrangement lattice needs its ambient space".into()));
        }
        if let Some((id, dim)) = elements.iter().find(|(_, d)| *d > ambient_dim) {
            return Err(Error::Structural(format!(
                "{id} has dimension {dim} above the ambient {ambient_dim}"
            )));
        }
        let mut leq = vec![vec![false; m]; m];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(x, y) in relations {
            if x >= m || y >= m {
                return Err(Error::Structural(format!("relation ({x}, {y}) out of range")));
            }
            leq[x][y] = true;
        }
        for k in 0..m {
            for i in 0..m {
                if leq[i][k] {
                    for j in 0..m {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..m {
            for j in 0..m {
                if i != j && leq[i][j] {
                    if leq[j][i] {
                        return Err(Error::Structural(format!(
                            "{} and {} are mutually below each other",
                            elements[i].0, elements[j].0
                        )));
                    }
                    if elements[j].1 >= elements[i].1 {
                        return Err(Error::Structural(format!(
                            "{} < {} but the dimension does not drop",
                            elements[i].0, elements[j].0
                        )));
                    }
                }
            }
        }
        let mut idx: Vec<usize> = (0..m).collect();
        idx.sort_by_key(|&i| std::cmp::Reverse(elements[i].1));
        let bottom = idx[0];
        if elements[bottom].1 != ambient_dim || !(0..m).all(|j| leq[bottom][j]) {
            return Err(Error::Structural(
                "the ambient space must be the unique minimum".into(),
            ));
        }
        let sorted = idx
            .iter()
            .map(|&i| ArrangementElement {
                id: elements[i].0.clone(),
                dim: elements[i].1,
                codim: ambient_dim - elements[i].1,
            })
            .collect();
        let order = idx
            .iter()
            .map(|&i| idx.iter().map(|&j| leq[i][j]).collect())
            .collect();
        Ok(ArrangementLattice {
            ambient_dim,
            elements: sorted,
            order: Order::Explicit(order),
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[ArrangementElement] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &ArrangementElement {
        &self.elements[i]
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        match &self.order {
            Order::Explicit(m) => m[i][j],
            Order::Partitions { lattice } => lattice.leq(i, j),
        }
    }

    pub fn less(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    pub fn partition_lattice(&self) -> Option<&PartitionLattice> {
        match &self.order {
            Order::Partitions { lattice } => Some(lattice),
            Order::Explicit(_) => None,
        }
    }

    /// Elements covering `0̂`.
    pub fn atoms(&self) -> Vec<usize> {
        (1..self.len())
            .filter(|&v| !(1..self.len()).any(|w| self.less(w, v)))
            .collect()
    }

    /// Order complex of the open interval `(0̂, v)`.
    pub fn lower_interval_complex(&self, v: usize) -> Result<SimplicialComplex> {
        match &self.order {
            Order::Partitions { lattice } => order_complex(lattice, Region::Interval(0, v)),
            Order::Explicit(_) => {
                let members: Vec<usize> = (1..v).filter(|&w| self.less(w, v)).collect();
                let labels = members.iter().map(|&w| self.elements[w].id.clone()).collect();
                Ok(SimplicialComplex::from_poset(labels, |a, b| {
                    self.less(members[a], members[b])
                }))
            }
        }
    }

    /// Key under which isomorphic lower intervals share one computation.
    fn interval_key(&self, v: usize) -> Option<Vec<usize>> {
        self.partition_lattice().map(|l| l.element(v).block_type())
    }
}

/// The lattice `Π_n` realised by the subspaces `V_{π,d}` of `R^{dn}`.
pub fn configuration_arrangement(n: usize, d: usize) -> Result<ArrangementLattice> {
    configuration_arrangement_with(n, d, &Limits::default())
}

pub fn configuration_arrangement_with(n: usize, d: usize, limits: &Limits) -> Result<ArrangementLattice> {
    if n < 2 || d < 1 {
        return Err(Error::InvalidArgument(format!("need n ≥ 2 and d ≥ 1, got n={n}, d={d}")));
    }
    let lattice = PartitionLattice::with_limits(n, limits)?;
    let elements = lattice
        .elements()
        .iter()
        .map(|pi| ArrangementElement {
            id: pi.to_string(),
            dim: d * pi.size(),
            codim: d * (n - pi.size()),
        })
        .collect();
    Ok(ArrangementLattice {
        ambient_dim: d * n,
        elements,
        order: Order::Partitions { lattice },
    })
}

/// Atoms of codimension `c` and all relative codimensions divisible by `c`.
pub fn is_c_arrangement(lat: &ArrangementLattice, c: usize) -> bool {
    if c < 2 {
        return false;
    }
    if lat.atoms().iter().any(|&a| lat.element(a).codim != c) {
        return false;
    }
    (0..lat.len()).all(|i| {
        (0..lat.len()).all(|j| {
            !lat.leq(i, j) || (lat.element(j).codim - lat.element(i).codim).is_multiple_of(c)
        })
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GmContribution {
    pub rep: String,
    pub codim: usize,
    pub interval_degree: i64,
    pub interval_rank: usize,
    /// Number of lattice elements this line stands for.
    #[serde(default = "one", skip_serializing_if = "is_one")]
    pub multiplicity: u128,
}

fn one() -> u128 {
    1
}

fn is_one(v: &u128) -> bool {
    *v == 1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GmDegree {
    pub degree: usize,
    pub rank: u128,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub torsion: Vec<Int>,
    pub contributions: Vec<GmContribution>,
}

/// Cohomology of the complement, degree by degree. Degree 0 carries the
/// unit class on top of the reduced formula.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GmReport {
    pub coefficients: Coefficients,
    pub degrees: Vec<GmDegree>,
}

impl GmReport {
    pub fn rank(&self, degree: usize) -> u128 {
        self.degrees
            .iter()
            .find(|d| d.degree == degree)
            .map_or(0, |d| d.rank)
    }

    /// `(degree, rank)` for every nonzero degree.
    pub fn ranks(&self) -> Vec<(usize, u128)> {
        self.degrees
            .iter()
            .filter(|d| d.rank > 0)
            .map(|d| (d.degree, d.rank))
            .collect()
    }

    pub fn total_rank(&self) -> u128 {
        self.degrees.iter().map(|d| d.rank).sum()
    }

    fn from_map(coefficients: Coefficients, map: BTreeMap<usize, GmDegree>) -> Self {
        GmReport {
            coefficients,
            degrees: map.into_values().filter(|d| d.rank > 0 || !d.torsion.is_empty()).collect(),
        }
    }
}

fn unit_degree() -> GmDegree {
    GmDegree {
        degree: 0,
        rank: 1,
        torsion: Vec::new(),
        contributions: vec![GmContribution {
            rep: "unit".into(),
            codim: 0,
            interval_degree: -1,
            interval_rank: 1,
            multiplicity: 1,
        }],
    }
}

/// `H^i(M_A) = ⊕_{V > 0̂} H̃_{codim V − i − 2}(Δ(0̂, V))`, every interval
/// computed as an order complex.
pub fn gm_cohomology(lat: &ArrangementLattice, coeff: Coefficients) -> Result<GmReport> {
    let mut cache: HashMap<Vec<usize>, HomologySummary> = HashMap::new();
    let mut map: BTreeMap<usize, GmDegree> = BTreeMap::new();
    map.insert(0, unit_degree());
    for v in 1..lat.len() {
        let key = lat.interval_key(v);
        let summary = match key.as_ref().and_then(|k| cache.get(k)) {
            Some(s) => s.clone(),
            None => {
                let sc = lat.lower_interval_complex(v)?;
                let s = homology(&chain_complex(&sc, coeff));
                if let Some(k) = key {
                    cache.insert(k, s.clone());
                }
                s
            }
        };
        let codim = lat.element(v).codim as i64;
        for dh in &summary.degrees {
            if dh.betti == 0 && dh.torsion.is_empty() {
                continue;
            }
            let i = codim - dh.degree - 2;
            if i < 0 {
                return Err(Error::Structural(format!(
                    "interval below {} contributes to negative degree {i}",
                    lat.element(v).id
                )));
            }
            let entry = map.entry(i as usize).or_insert_with(|| GmDegree {
                degree: i as usize,
                rank: 0,
                torsion: Vec::new(),
                contributions: Vec::new(),
            });
            entry.rank += dh.betti as u128;
            entry.torsion.extend(dh.torsion.iter().cloned());
            entry.contributions.push(GmContribution {
                rep: lat.element(v).id.clone(),
                codim: codim as usize,
                interval_degree: dh.degree,
                interval_rank: dh.betti,
                multiplicity: 1,
            });
        }
    }
    Ok(GmReport::from_map(coeff, map))
}

/// Integer partitions of `n` as nonincreasing part lists.
pub fn integer_partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            rec(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Number of set partitions of `[n]` with the given block sizes.
pub fn set_partitions_of_type(parts: &[usize]) -> u128 {
    let n: usize = parts.iter().sum();
    let mut denom = 1u128;
    let mut mult: BTreeMap<usize, u64> = BTreeMap::new();
    for &a in parts {
        denom *= factorial(a as u64);
        *mult.entry(a).or_default() += 1;
    }
    for &m in mult.values() {
        denom *= factorial(m);
    }
    factorial(n as u64) / denom
}

/// The canonical partition `{1..a_1 | a_1+1 .. | …}` of a block type.
fn partition_of_type(parts: &[usize]) -> Partition {
    let mut blocks = Vec::new();
    let mut next = 1;
    for &a in parts {
        blocks.push((next..next + a).collect());
        next += a;
    }
    Partition::new(next - 1, blocks).expect("consecutive blocks cover [n]")
}

/// Closed form: `rank H^{(d-1)(n-j)} = Σ_{size π = j} Π (a_i(π) − 1)!`,
/// summed over block types.
pub fn config_rank_formula(n: usize, d: usize) -> Result<GmReport> {
    if n < 1 || d < 2 {
        return Err(Error::InvalidArgument(format!("need n ≥ 1 and d ≥ 2, got n={n}, d={d}")));
    }
    if n > 30 {
        return Err(Error::SizeLimit {
            what: "closed-form configuration ranks".into(),
            actual: n as u128,
            cap: 30,
        });
    }
    let mut map: BTreeMap<usize, GmDegree> = BTreeMap::new();
    for parts in integer_partitions(n) {
        let j = parts.len();
        let interval_rank: u128 = parts.iter().map(|&a| factorial(a as u64 - 1)).product();
        let count = set_partitions_of_type(&parts);
        let degree = (d - 1) * (n - j);
        let entry = map.entry(degree).or_insert_with(|| GmDegree {
            degree,
            rank: 0,
            torsion: Vec::new(),
            contributions: Vec::new(),
        });
        entry.rank += count * interval_rank;
        entry.contributions.push(GmContribution {
            rep: partition_of_type(&parts).to_string(),
            codim: d * (n - j),
            interval_degree: (n - j) as i64 - 2,
            interval_rank: usize::try_from(interval_rank).unwrap_or(usize::MAX),
            multiplicity: count,
        });
    }
    Ok(GmReport::from_map(Coefficients::Integers, map))
}

/// Sign of the permutation `g` induces on the blocks of a partition it fixes.
fn block_permutation_sign(g: &Permutation, pi: &Partition) -> i32 {
    let labels = pi.labels();
    let images: Vec<usize> = pi
        .blocks()
        .iter()
        .map(|b| labels[g.apply(b[0] - 1)])
        .collect();
    Permutation::new(images).map_or(1, |p| p.sign())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitContribution {
    pub rep: String,
    pub orbit_size: usize,
    pub stab_order: usize,
    pub interval_rank: u128,
    /// `[G : G_V] · interval_rank` (the sphere factor has rank one).
    pub induced_dim: u128,
    pub full_stabilizer: bool,
    /// `det(g|V)` is `+1` on all of `G_V` (always true in characteristic 2).
    pub orientation_trivial: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivariantDegree {
    pub degree: usize,
    pub rank: u128,
    pub contributions: Vec<OrbitContribution>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivariantGmReport {
    pub n: usize,
    pub d: usize,
    pub p: u64,
    pub group_order: usize,
    /// `det` of every group element on `R^{dn}` is `+1`.
    pub ambient_orientation_trivial: bool,
    pub degrees: Vec<EquivariantDegree>,
}

impl EquivariantGmReport {
    pub fn degree(&self, degree: usize) -> Option<&EquivariantDegree> {
        self.degrees.iter().find(|e| e.degree == degree)
    }

    /// Smallest positive degree with an orbit fixed by the whole group.
    pub fn first_full_stabilizer_degree(&self) -> Option<usize> {
        self.degrees
            .iter()
            .filter(|e| e.degree > 0 && e.contributions.iter().any(|c| c.full_stabilizer))
            .map(|e| e.degree)
            .min()
    }
}

/// Orbit-wise Goresky–MacPherson data for a group acting on `[n]`. Lower
/// interval ranks use the product formula `Π (a_i − 1)!`.
pub fn equivariant_gm(
    lattice: &PartitionLattice,
    d: usize,
    group: &FiniteGroup,
    p: u64,
) -> Result<EquivariantGmReport> {
    let n = lattice.n();
    if group.degree() != n {
        return Err(Error::DegreeMismatch {
            expected: n,
            actual: group.degree(),
        });
    }
    let orbits = orbits_and_stabilizers(group, lattice)?;
    let sign_matters = p != 2;
    let ambient_orientation_trivial =
        !sign_matters || d.is_multiple_of(2) || group.elements().iter().all(|g| g.sign() == 1);
    let mut map: BTreeMap<usize, EquivariantDegree> = BTreeMap::new();
    map.insert(
        0,
        EquivariantDegree {
            degree: 0,
            rank: 1,
            contributions: vec![OrbitContribution {
                rep: Partition::finest(n).to_string(),
                orbit_size: 1,
                stab_order: group.order(),
                interval_rank: 1,
                induced_dim: 1,
                full_stabilizer: true,
                orientation_trivial: true,
            }],
        },
    );
    for orbit in orbits.iter().filter(|o| o.representative_index != lattice.bottom()) {
        let pi = &orbit.representative;
        let interval_rank: u128 = pi
            .block_type()
            .iter()
            .map(|&a| factorial(a as u64 - 1))
            .product();
        let degree = (d - 1) * (n - pi.size());
        let orientation_trivial = !sign_matters
            || d.is_multiple_of(2)
            || orbit
                .stabilizer
                .elements()
                .iter()
                .all(|g| block_permutation_sign(g, pi) == 1);
        let entry = map.entry(degree).or_insert_with(|| EquivariantDegree {
            degree,
            rank: 0,
            contributions: Vec::new(),
        });
        let induced_dim = orbit.orbit_size as u128 * interval_rank;
        entry.rank += induced_dim;
        entry.contributions.push(OrbitContribution {
            rep: pi.to_string(),
            orbit_size: orbit.orbit_size,
            stab_order: orbit.stabilizer.order(),
            interval_rank,
            induced_dim,
            full_stabilizer: orbit.is_fully_stabilized(group),
            orientation_trivial,
        });
    }
    Ok(EquivariantGmReport {
        n,
        d,
        p,
        group_order: group.order(),
        ambient_orientation_trivial,
        degrees: map.into_values().collect(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FullStabilizerScan {
    pub p: usize,
    pub k: usize,
    pub d: usize,
    pub degree: usize,
    pub formula: usize,
    /// Partitions of `[p^k]` fixed by the whole group in that degree.
    pub representatives: Vec<String>,
    pub orbits_scanned: usize,
}

/// Smallest positive degree of `H^*(F(R^d, p^k))` carrying a partition fixed by
/// the whole regular `(Z/p)^k`, found by scanning `Π_{p^k}`.
pub fn full_stabilizer_degree(p: usize, k: usize, d: usize) -> Result<FullStabilizerScan> {
    full_stabilizer_degree_with(p, k, d, &Limits::default())
}

pub fn full_stabilizer_degree_with(p: usize, k: usize, d: usize, limits: &Limits) -> Result<FullStabilizerScan> {
    if d < 2 {
        return Err(Error::InvalidArgument(format!("need d ≥ 2, got {d}")));
    }
    let group = crate::group::regular_embedding_with(p, k, limits)?;
    let n = group.degree();
    let lattice = PartitionLattice::with_limits(n, limits)?;
    let orbits = orbits_and_stabilizers(&group, &lattice)?;
    let full: Vec<&Partition> = orbits
        .iter()
        .filter(|o| o.representative_index != lattice.bottom() && o.is_fully_stabilized(&group))
        .map(|o| &o.representative)
        .collect();
    let max_size = full
        .iter()
        .map(|pi| pi.size())
        .max()
        .ok_or_else(|| Error::Structural("no partition is fixed by the group".into()))?;
    let representatives = full
        .iter()
        .filter(|pi| pi.size() == max_size)
        .map(|pi| pi.to_string())
        .collect();
    Ok(FullStabilizerScan {
        p,
        k,
        d,
        degree: (d - 1) * (n - max_size),
        formula: (d - 1) * (n - n / p),
        representatives,
        orbits_scanned: orbits.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{group_from_generators, regular_embedding};
    use crate::partition::build_partition_lattice;

    #[test]
    fn configuration_dimensions() {
        let a = configuration_arrangement(3, 2).unwrap();
        let v = a.elements().iter().find(|e| e.id == "12|3").unwrap();
        assert_eq!((v.dim, v.codim), (4, 2));
        let a = configuration_arrangement(4, 3).unwrap();
        let top = a.element(a.len() - 1);
        assert_eq!((top.dim, top.codim), (3, 9));
        let a = configuration_arrangement(4, 2).unwrap();
        assert_eq!(a.len(), 15);
        let mut codims: Vec<usize> = a.elements().iter().map(|e| e.codim).collect();
        codims.dedup();
        assert_eq!(codims, vec![0, 2, 4, 6]);
    }

    #[test]
    fn c_arrangements() {
        for n in 2..=6 {
            for d in [2, 3] {
                assert!(is_c_arrangement(&configuration_arrangement(n, d).unwrap(), d));
            }
        }
        assert!(!is_c_arrangement(&configuration_arrangement(4, 2).unwrap(), 3));
        let single = ArrangementLattice::explicit(7, vec![("R7".into(), 7), ("V".into(), 2)], &[(0, 1)]).unwrap();
        assert!(is_c_arrangement(&single, 5));
    }

    #[test]
    fn gm_small_cases() {
        let r = gm_cohomology(&configuration_arrangement(3, 2).unwrap(), Coefficients::Integers).unwrap();
        assert_eq!(r.ranks(), vec![(0, 1), (1, 3), (2, 2)]);
        let r = gm_cohomology(&configuration_arrangement(4, 3).unwrap(), Coefficients::Integers).unwrap();
        assert_eq!(r.ranks(), vec![(0, 1), (2, 6), (4, 11), (6, 6)]);
        let empty = ArrangementLattice::explicit(3, vec![("R3".into(), 3)], &[]).unwrap();
        let r = gm_cohomology(&empty, Coefficients::Prime(2)).unwrap();
        assert_eq!(r.ranks(), vec![(0, 1)]);
    }

    #[test]
    fn explicit_lattice_matches_partition_backed() {
        // three planes in R^4 meeting pairwise only in the origin
        let elements = vec![
            ("R4".to_string(), 4),
            ("A".to_string(), 2),
            ("B".to_string(), 2),
            ("C".to_string(), 2),
            ("0".to_string(), 0),
        ];
        let rel = [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)];
        let lat = ArrangementLattice::explicit(4, elements, &rel).unwrap();
        assert!(is_c_arrangement(&lat, 2));
        let r = gm_cohomology(&lat, Coefficients::Integers).unwrap();
        // atoms give degree 1; the top gives H̃_0 of three points in degree 2
        assert_eq!(r.ranks(), vec![(0, 1), (1, 3), (2, 2)]);
    }

    #[test]
    fn closed_form() {
        let r = config_rank_formula(5, 2).unwrap();
        assert_eq!(r.rank(4), 24);
        let r = config_rank_formula(4, 2).unwrap();
        assert_eq!(r.ranks(), vec![(0, 1), (1, 6), (2, 11), (3, 6)]);
        for d in 2..5 {
            assert_eq!(config_rank_formula(2, d).unwrap().ranks(), vec![(0, 1), (d - 1, 1)]);
        }
    }

    #[test]
    fn equivariant_examples() {
        let l4 = build_partition_lattice(4).unwrap();
        let g = regular_embedding(2, 2).unwrap();
        let r = equivariant_gm(&l4, 2, &g, 2).unwrap();
        let full: Vec<&str> = r
            .degree(2)
            .unwrap()
            .contributions
            .iter()
            .filter(|c| c.full_stabilizer && c.rep.len() == 5)
            .map(|c| c.rep.as_str())
            .collect();
        assert_eq!(full, vec!["12|34", "13|24", "14|23"]);

        let l5 = build_partition_lattice(5).unwrap();
        let c5 = regular_embedding(5, 1).unwrap();
        let r = equivariant_gm(&l5, 3, &c5, 5).unwrap();
        let top = r.degree(8).unwrap();
        let full: Vec<&OrbitContribution> = top.contributions.iter().filter(|c| c.full_stabilizer).collect();
        assert_eq!(full.len(), 1);
        assert_eq!(full[0].rep, "12345");

        let trivial = group_from_generators(4, &[]).unwrap();
        let r = equivariant_gm(&l4, 2, &trivial, 3).unwrap();
        let plain = config_rank_formula(4, 2).unwrap();
        for e in &r.degrees {
            assert!(e.contributions.iter().all(|c| c.orbit_size == 1));
            assert_eq!(e.rank, plain.rank(e.degree));
        }
    }

    #[test]
    fn equivariant_ranks_match_direct_computation() {
        for (p, k) in [(2usize, 1usize), (3, 1), (2, 2), (5, 1)] {
            let g = regular_embedding(p, k).unwrap();
            let n = g.degree();
            let lat = build_partition_lattice(n).unwrap();
            for d in [2, 3] {
                let direct = gm_cohomology(&configuration_arrangement(n, d).unwrap(), Coefficients::Integers).unwrap();
                let eq = equivariant_gm(&lat, d, &g, p as u64).unwrap();
                for e in &eq.degrees {
                    assert_eq!(e.rank, direct.rank(e.degree), "p={p}, k={k}, d={d}, degree {}", e.degree);
                }
                assert_eq!(eq.degrees.iter().map(|e| e.rank).sum::<u128>(), direct.total_rank());
            }
        }
    }

    #[test]
    fn stabilizer_degree_small() {
        let s = full_stabilizer_degree(2, 2, 2).unwrap();
        assert_eq!(s.degree, 2);
        assert_eq!(s.representatives, vec!["12|34", "13|24", "14|23"]);
        assert_eq!(full_stabilizer_degree(3, 1, 3).unwrap().degree, 4);
    }
}
