//! The Whitney-homology complex of an intersection lattice with sphere
//! coefficients, and its `E²` ranks.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::arrangement::ArrangementLattice;
use crate::complex::{chain_complex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::linalg::fp::{rank_mod_p, EliminationOrder};
use crate::linalg::{homology, Coefficients, Int, SparseIntMatrix};

/// Which faces the differential removes from a chain `V_0 < … < V_r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FaceRange {
    /// Faces `0..r-1`; the top element `V_r` always stays.
    AllButTop,
    /// Faces `1..r-1` only.
    Interior,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct E2Entry {
    pub r: usize,
    pub s: i64,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WhitneyReport {
    pub p: u64,
    pub faces: FaceRange,
    /// Nonzero ranks of the Whitney complex homology.
    pub e2: Vec<E2Entry>,
    /// Nonzero ranks of `⊕_V H̃_{r-1}(Δ(0̂, V)) ⊗ H̃_s(S(V))`.
    pub interval_ranks: Vec<E2Entry>,
    pub boundary_squares_to_zero: bool,
    pub agrees: bool,
}

impl WhitneyReport {
    pub fn rank(&self, r: usize, s: i64) -> usize {
        self.e2
            .iter()
            .find(|e| e.r == r && e.s == s)
            .map_or(0, |e| e.rank)
    }
}

fn sphere_degree(lat: &ArrangementLattice, v: usize) -> i64 {
    lat.element(v).dim as i64 - 1
}

fn to_entries(map: BTreeMap<(usize, i64), usize>) -> Vec<E2Entry> {
    map.into_iter()
        .filter(|&(_, rank)| rank > 0)
        .map(|((r, s), rank)| E2Entry { r, s, rank })
        .collect()
}

/// Homology of the Whitney complex over `F_p`, compared against the
/// interval decomposition.
pub fn whitney_e2(lat: &ArrangementLattice, p: u64, faces: FaceRange) -> Result<WhitneyReport> {
    let coeff = Coefficients::prime(p)?;
    let upper: Vec<usize> = (1..lat.len()).collect();
    let labels = upper.iter().map(|&v| lat.element(v).id.clone()).collect();
    let chains = SimplicialComplex::from_poset(labels, |a, b| lat.less(upper[a], upper[b]));

    // chains of length r + 1 grouped by the sphere degree of their top element
    let top_s = |chain: &[usize]| sphere_degree(lat, upper[*chain.last().expect("nonempty")]);
    let mut local: Vec<HashMap<usize, (i64, usize)>> = Vec::new();
    let mut sizes: BTreeMap<(usize, i64), usize> = BTreeMap::new();
    for r in 0..chains.f_vector().len() {
        let mut m = HashMap::new();
        for (idx, chain) in chains.simplices(r).iter().enumerate() {
            let s = top_s(chain);
            let slot = sizes.entry((r, s)).or_default();
            m.insert(idx, (s, *slot));
            *slot += 1;
        }
        local.push(m);
    }

    // d_r : C_{r,s} → C_{r-1,s}
    let mut blocks: BTreeMap<(usize, i64), Vec<(usize, usize, Int)>> = BTreeMap::new();
    for r in 1..local.len() {
        for (idx, chain) in chains.simplices(r).iter().enumerate() {
            let (s, col) = local[r][&idx];
            let range = match faces {
                FaceRange::AllButTop => 0..r,
                FaceRange::Interior => 1..r,
            };
            for i in range {
                let mut face = chain.clone();
                face.remove(i);
                let fidx = chains.simplex_index(&face).expect("faces of chains are chains");
                let (_, row) = local[r - 1][&fidx];
                let sign = if i % 2 == 0 { 1 } else { -1 };
                blocks.entry((r, s)).or_default().push((row, col, Int::from(sign)));
            }
        }
    }
    let mut matrices: BTreeMap<(usize, i64), SparseIntMatrix> = BTreeMap::new();
    for (&(r, s), &cols) in &sizes {
        if r == 0 {
            continue;
        }
        let rows = sizes.get(&(r - 1, s)).copied().unwrap_or(0);
        let trip = blocks.remove(&(r, s)).unwrap_or_default();
        matrices.insert((r, s), SparseIntMatrix::from_triplets(rows, cols, trip)?);
    }
    let mut squares_zero = true;
    for (&(r, s), m) in &matrices {
        if let Some(below) = matrices.get(&(r - 1, s)) {
            if !below.mul(m)?.is_zero_mod(p) {
                squares_zero = false;
            }
        }
    }
    let rank = |r: usize, s: i64| {
        matrices
            .get(&(r, s))
            .map_or(0, |m| rank_mod_p(m, p, EliminationOrder::LowestPivot))
    };
    let mut e2 = BTreeMap::new();
    for (&(r, s), &dim) in &sizes {
        let out = if r == 0 { 0 } else { rank(r, s) };
        let betti = dim.checked_sub(out + rank(r + 1, s)).ok_or_else(|| {
            Error::Structural("Whitney differential does not square to zero".into())
        })?;
        e2.insert((r, s), betti);
    }

    let mut expected = BTreeMap::new();
    for v in 1..lat.len() {
        let sc = lat.lower_interval_complex(v)?;
        let h = homology(&chain_complex(&sc, coeff));
        for dh in &h.degrees {
            if dh.betti > 0 {
                let r = usize::try_from(dh.degree + 1).expect("reduced degrees start at -1");
                *expected.entry((r, sphere_degree(lat, v))).or_insert(0) += dh.betti;
            }
        }
    }
    let e2 = to_entries(e2);
    let interval_ranks = to_entries(expected);
    Ok(WhitneyReport {
        p,
        faces,
        agrees: squares_zero && e2 == interval_ranks,
        e2,
        interval_ranks,
        boundary_squares_to_zero: squares_zero,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::configuration_arrangement;

    #[test]
    fn three_points_in_the_plane() {
        let lat = configuration_arrangement(3, 2).unwrap();
        let w = whitney_e2(&lat, 2, FaceRange::AllButTop).unwrap();
        assert_eq!(w.rank(0, 3), 3);
        assert_eq!(w.rank(1, 1), 2);
        assert_eq!(w.e2.len(), 2);
        assert!(w.agrees);
    }

    #[test]
    fn two_points() {
        for d in 2..5 {
            let lat = configuration_arrangement(2, d).unwrap();
            let w = whitney_e2(&lat, 3, FaceRange::AllButTop).unwrap();
            assert_eq!(w.e2, vec![E2Entry { r: 0, s: d as i64 - 1, rank: 1 }]);
        }
    }

    #[test]
    fn interior_faces_differ() {
        let lat = configuration_arrangement(4, 2).unwrap();
        let strict = whitney_e2(&lat, 2, FaceRange::Interior).unwrap();
        assert!(strict.boundary_squares_to_zero);
        assert!(!strict.agrees);
    }
}
