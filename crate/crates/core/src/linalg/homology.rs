//! Reduced homology of chain complexes.

use serde::{Deserialize, Serialize};

use super::fp::{axpy, columns_mod_p, kernel_mod_p, rank_mod_p, ColumnReduction, EliminationOrder, SparseVec};
use super::int::Int;
use super::snf::invariant_factors;
use super::Coefficients;
use crate::complex::ChainComplex;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeHomology {
    pub degree: i64,
    pub betti: usize,
    /// Torsion coefficients (all `> 1`), divisibility-ordered. Empty over `F_p`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub torsion: Vec<Int>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologySummary {
    pub coefficients: Coefficients,
    pub degrees: Vec<DegreeHomology>,
}

impl HomologySummary {
    pub fn betti(&self, degree: i64) -> usize {
        self.get(degree).map_or(0, |d| d.betti)
    }

    pub fn torsion(&self, degree: i64) -> &[Int] {
        self.get(degree).map_or(&[], |d| d.torsion.as_slice())
    }

    pub fn get(&self, degree: i64) -> Option<&DegreeHomology> {
        self.degrees.iter().find(|d| d.degree == degree)
    }

    /// Degrees with nonzero homology.
    pub fn support(&self) -> Vec<i64> {
        self.degrees
            .iter()
            .filter(|d| d.betti > 0 || !d.torsion.is_empty())
            .map(|d| d.degree)
            .collect()
    }

    pub fn total_betti(&self) -> usize {
        self.degrees.iter().map(|d| d.betti).sum()
    }
}

/// Ranks of every boundary map, computed once.
fn boundary_ranks(cc: &ChainComplex) -> (Vec<usize>, Vec<Vec<Int>>) {
    match cc.coefficients {
        Coefficients::Integers => {
            let factors: Vec<Vec<Int>> = cc.boundaries.iter().map(invariant_factors).collect();
            (factors.iter().map(Vec::len).collect(), factors)
        }
        Coefficients::Prime(p) => {
            let ranks = cc.boundaries.iter().map(|b| {
                let fwd = rank_mod_p(b, p, EliminationOrder::LowestPivot);
                let rev = rank_mod_p(b, p, EliminationOrder::HighestPivot);
                assert_eq!(fwd, rev, "elimination orders disagree on a boundary rank");
                fwd
            });
            (ranks.collect(), Vec::new())
        }
    }
}

/// Reduced homology: Betti numbers in every degree, and torsion over `Z`.
pub fn homology(cc: &ChainComplex) -> HomologySummary {
    let (ranks, factors) = boundary_ranks(cc);
    let mut degrees = Vec::with_capacity(cc.dims.len());
    for (i, &dim) in cc.dims.iter().enumerate() {
        let degree = i as i64 - 1;
        // boundaries[i - 1] leaves degree i - 1; boundaries[i] enters it
        let out_rank = if i == 0 { 0 } else { ranks[i - 1] };
        let in_rank = ranks.get(i).copied().unwrap_or(0);
        let torsion = factors
            .get(i)
            .map(|f| f.iter().filter(|d| !d.is_unit()).cloned().collect())
            .unwrap_or_default();
        degrees.push(DegreeHomology {
            degree,
            betti: dim - out_rank - in_rank,
            torsion,
        });
    }
    HomologySummary {
        coefficients: cc.coefficients,
        degrees,
    }
}

/// Betti numbers only, indexed from degree `-1`.
pub fn homology_ranks(cc: &ChainComplex) -> Vec<usize> {
    homology(cc).degrees.iter().map(|d| d.betti).collect()
}

/// A basis of `H_r(C; F_p)` as cycle representatives, with a projection
/// from cycles to coordinates in that basis.
#[derive(Clone)]
pub struct HomologyBasis {
    pub degree: i64,
    pub p: u64,
    pub representatives: Vec<SparseVec>,
    reduction: ColumnReduction,
    /// For each reduced column, its coordinates on the representatives.
    rep_coords: Vec<SparseVec>,
    /// Rows of the outgoing boundary mod `p`.
    boundary_rows: Vec<SparseVec>,
}

impl HomologyBasis {
    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    /// Coordinates of the class of `z` in the representative basis.
    pub fn project(&self, z: &SparseVec) -> Result<Vec<u64>> {
        let p = self.p;
        for (i, row) in self.boundary_rows.iter().enumerate() {
            let dot = dot_mod(row, z, p);
            if dot != 0 {
                return Err(Error::Structural(format!(
                    "chain is not a cycle: boundary coordinate {i} is {dot}"
                )));
            }
        }
        let mut coords: SparseVec = Vec::new();
        let rest = self.reduction.reduce_with(z.clone(), |k, c| {
            coords = axpy(&coords, c, &self.rep_coords[k], p);
        });
        if !rest.is_empty() {
            return Err(Error::Structural("cycle outside the span of cycles".into()));
        }
        // z + Σ c·red = 0, so z = −Σ c·red
        let mut out = vec![0; self.dim()];
        for (j, v) in coords {
            out[j] = (p - v) % p;
        }
        Ok(out)
    }
}

fn dot_mod(a: &SparseVec, b: &SparseVec, p: u64) -> u64 {
    let (mut i, mut j, mut acc) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                acc = (acc + a[i].1 * b[j].1) % p;
                i += 1;
                j += 1;
            }
        }
    }
    acc
}

/// Cycle basis of reduced homology in `degree` over `F_p`.
pub fn homology_basis(cc: &ChainComplex, degree: i64) -> Result<HomologyBasis> {
    let Coefficients::Prime(p) = cc.coefficients else {
        return Err(Error::Unsupported("homology bases are computed over F_p".into()));
    };
    let i = usize::try_from(degree + 1)
        .ok()
        .filter(|&i| i < cc.dims.len())
        .ok_or_else(|| Error::InvalidArgument(format!("degree {degree} out of range")))?;
    let dim = cc.dims[i];
    let out = if i == 0 { None } else { Some(&cc.boundaries[i - 1]) };
    let cycles = match out {
        Some(b) => kernel_mod_p(b, p),
        None => (0..dim).map(|j| vec![(j, 1)]).collect(),
    };
    let mut reduction = ColumnReduction::new(dim, p, EliminationOrder::LowestPivot);
    let mut rep_coords = Vec::new();
    if let Some(b) = cc.boundaries.get(i) {
        for col in columns_mod_p(b, p) {
            if reduction.insert(col).is_some() {
                rep_coords.push(Vec::new());
            }
        }
    }
    let mut representatives = Vec::new();
    for z in cycles {
        let mut combo: SparseVec = Vec::new();
        let reduced = reduction.reduce_with(z.clone(), |k, c| {
            combo = axpy(&combo, c, &rep_coords[k], p);
        });
        if reduced.is_empty() {
            continue;
        }
        let idx = representatives.len();
        combo = axpy(&combo, 1, &vec![(idx, 1)], p);
        reduction.push_reduced(reduced);
        rep_coords.push(combo);
        representatives.push(z);
    }
    Ok(HomologyBasis {
        degree,
        p,
        representatives,
        reduction,
        rep_coords,
        boundary_rows: out.map(|b| columns_mod_p(&b.transpose(), p)).unwrap_or_default(),
    })
}
