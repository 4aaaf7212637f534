//! Simplicial complexes, order complexes of lattice intervals, reduced chain
//! complexes and chain maps induced by vertex bijections.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Coefficients, Int, SparseIntMatrix};
use crate::partition::PartitionLattice;

/// Simplices are stored as strictly increasing vertex-index lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    simplices: Vec<Vec<Vec<usize>>>,
    lookup: Vec<HashMap<Vec<usize>, usize>>,
    vertex_index: HashMap<String, usize>,
}

/// Which part of a lattice to take the order complex of.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Region {
    /// Open interval `(x, y)` given by lattice indices.
    Interval(usize, usize),
    /// `L \ {0̂, 1̂}`.
    ProperPart,
}

impl SimplicialComplex {
    pub fn empty() -> Self {
        SimplicialComplex::from_simplices(Vec::new(), Vec::new())
    }

    fn from_simplices(vertices: Vec<String>, simplices: Vec<Vec<Vec<usize>>>) -> Self {
        let lookup = simplices
            .iter()
            .map(|level| {
                level
                    .iter()
                    .enumerate()
                    .map(|(i, s)| (s.clone(), i))
                    .collect()
            })
            .collect();
        let vertex_index = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), i))
            .collect();
        SimplicialComplex {
            vertices,
            simplices,
            lookup,
            vertex_index,
        }
    }

    /// The downward closure of `facets`. Every vertex label gets a
    /// 0-simplex, even when it appears in no facet.
    pub fn from_facets(vertices: Vec<String>, facets: &[Vec<usize>]) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for v in &vertices {
            if !seen.insert(v) {
                return Err(Error::Structural(format!("duplicate vertex label {v}")));
            }
        }
        let mut levels: Vec<BTreeSet<Vec<usize>>> = Vec::new();
        let add = |s: Vec<usize>, levels: &mut Vec<BTreeSet<Vec<usize>>>| {
            let d = s.len() - 1;
            if levels.len() <= d {
                levels.resize(d + 1, BTreeSet::new());
            }
            levels[d].insert(s);
        };
        for v in 0..vertices.len() {
            add(vec![v], &mut levels);
        }
        for f in facets {
            let mut s = f.clone();
            s.sort_unstable();
            s.dedup();
            if s.len() != f.len() || s.is_empty() {
                return Err(Error::Structural(format!("malformed facet {f:?}")));
            }
            if let Some(&bad) = s.iter().find(|&&v| v >= vertices.len()) {
                return Err(Error::Structural(format!("facet {f:?} uses unknown vertex {bad}")));
            }
            let k = s.len();
            for mask in 1u64..(1u64 << k) {
                let face: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| s[i]).collect();
                add(face, &mut levels);
            }
        }
        let simplices = levels.into_iter().map(|l| l.into_iter().collect()).collect();
        Ok(SimplicialComplex::from_simplices(vertices, simplices))
    }

    /// Chains of a finite poset. `elements` must be listed in a linear
    /// extension, so sorted index lists are increasing chains.
    pub fn from_poset(labels: Vec<String>, less: impl Fn(usize, usize) -> bool) -> Self {
        let m = labels.len();
        let above: Vec<Vec<usize>> = (0..m)
            .map(|i| (i + 1..m).filter(|&j| less(i, j)).collect())
            .collect();
        let mut simplices: Vec<Vec<Vec<usize>>> = Vec::new();
        let mut chain = Vec::new();
        fn extend(
            chain: &mut Vec<usize>,
            candidates: &[usize],
            above: &[Vec<usize>],
            out: &mut Vec<Vec<Vec<usize>>>,
        ) {
            for &v in candidates {
                chain.push(v);
                let d = chain.len() - 1;
                if out.len() <= d {
                    out.resize(d + 1, Vec::new());
                }
                out[d].push(chain.clone());
                extend(chain, &above[v], above, out);
                chain.pop();
            }
        }
        let all: Vec<usize> = (0..m).collect();
        extend(&mut chain, &all, &above, &mut simplices);
        for level in &mut simplices {
            level.sort();
        }
        SimplicialComplex::from_simplices(labels, simplices)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertex_index.get(label).copied()
    }

    /// `-1` for the empty complex.
    pub fn dimension(&self) -> i64 {
        self.simplices.len() as i64 - 1
    }

    pub fn simplices(&self, dim: usize) -> &[Vec<usize>] {
        self.simplices.get(dim).map_or(&[], Vec::as_slice)
    }

    pub fn count(&self, dim: usize) -> usize {
        self.simplices(dim).len()
    }

    /// Face counts `f_0, f_1, …`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.simplices.iter().map(Vec::len).collect()
    }

    pub fn simplex_index(&self, simplex: &[usize]) -> Option<usize> {
        self.lookup.get(simplex.len().checked_sub(1)?)?.get(simplex).copied()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    /// `Σ (-1)^r f_r` including the empty face.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        let mut chi = -1;
        for (r, level) in self.simplices.iter().enumerate() {
            let sign = if r % 2 == 0 { 1 } else { -1 };
            chi += sign * level.len() as i64;
        }
        chi
    }

    /// Maximal simplices.
    pub fn facets(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for (d, level) in self.simplices.iter().enumerate() {
            let next = self.lookup.get(d + 1);
            for s in level {
                let covered = next.is_some_and(|_| {
                    self.simplices[d + 1]
                        .iter()
                        .any(|t| s.iter().all(|v| t.binary_search(v).is_ok()))
                });
                if !covered {
                    out.push(s.clone());
                }
            }
        }
        out
    }

    pub fn to_document(&self) -> ComplexDocument {
        ComplexDocument {
            vertices: self.vertices.clone(),
            facets: self.facets(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexDocument {
    pub vertices: Vec<String>,
    pub facets: Vec<Vec<usize>>,
}

impl TryFrom<ComplexDocument> for SimplicialComplex {
    type Error = Error;

    fn try_from(doc: ComplexDocument) -> Result<Self> {
        SimplicialComplex::from_facets(doc.vertices, &doc.facets)
    }
}

/// Order complex of an open interval or of the proper part of a lattice.
/// Vertices are labelled by the partitions they stand for.
pub fn order_complex(lattice: &PartitionLattice, region: Region) -> Result<SimplicialComplex> {
    let (x, y) = match region {
        Region::Interval(x, y) => {
            if x >= lattice.len() || y >= lattice.len() {
                return Err(Error::InvalidArgument("interval endpoint out of range".into()));
            }
            if !lattice.less(x, y) {
                return Err(Error::Order(format!(
                    "{} is not strictly below {}",
                    lattice.element(x),
                    lattice.element(y)
                )));
            }
            (x, y)
        }
        Region::ProperPart => {
            if lattice.len() == 1 {
                return Ok(SimplicialComplex::empty());
            }
            (lattice.bottom(), lattice.top())
        }
    };
    let members = lattice.open_interval(x, y);
    let labels = members.iter().map(|&i| lattice.element(i).to_string()).collect();
    Ok(SimplicialComplex::from_poset(labels, |a, b| {
        lattice.less(members[a], members[b])
    }))
}

/// A reduced chain complex `C_top → … → C_0 → C_{-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainComplex {
    #[serde(rename = "coeff")]
    pub coefficients: Coefficients,
    /// `dims[i]` is the rank in degree `i - 1`.
    pub dims: Vec<usize>,
    /// `boundaries[i]` maps degree `i` to degree `i - 1`; entry 0 is the augmentation.
    pub boundaries: Vec<SparseIntMatrix>,
}

impl ChainComplex {
    pub fn dim(&self, degree: i64) -> usize {
        usize::try_from(degree + 1)
            .ok()
            .and_then(|i| self.dims.get(i).copied())
            .unwrap_or(0)
    }

    /// `∂_r : C_r → C_{r-1}` for `r ≥ 0`.
    pub fn boundary(&self, r: i64) -> Option<&SparseIntMatrix> {
        usize::try_from(r).ok().and_then(|i| self.boundaries.get(i))
    }

    pub fn top_degree(&self) -> i64 {
        self.dims.len() as i64 - 2
    }

    /// Checks `∂_{r-1} ∘ ∂_r = 0` (mod `p` over `F_p`) in every degree.
    pub fn verify(&self) -> Result<()> {
        if self.boundaries.len() + 1 != self.dims.len() {
            return Err(Error::Structural("boundary count does not match dims".into()));
        }
        for (i, b) in self.boundaries.iter().enumerate() {
            if b.rows() != self.dims[i] || b.cols() != self.dims[i + 1] {
                return Err(Error::DimensionMismatch(format!(
                    "boundary in degree {i} is {}x{}, expected {}x{}",
                    b.rows(),
                    b.cols(),
                    self.dims[i],
                    self.dims[i + 1]
                )));
            }
        }
        for i in 1..self.boundaries.len() {
            let prod = self.boundaries[i - 1].mul(&self.boundaries[i])?;
            if !prod.is_zero_mod(self.coefficients.characteristic()) {
                return Err(Error::Structural(format!(
                    "boundary squares to a nonzero map in degree {i}"
                )));
            }
        }
        Ok(())
    }
}

/// Reduced simplicial chain complex. The empty complex gets `C_{-1} = R`.
pub fn chain_complex(sc: &SimplicialComplex, coeff: Coefficients) -> ChainComplex {
    chain_complex_with(sc, coeff, true)
}

/// With `empty_convention = false` the empty complex has no homology at all.
pub fn chain_complex_with(
    sc: &SimplicialComplex,
    coeff: Coefficients,
    empty_convention: bool,
) -> ChainComplex {
    if sc.is_empty() && !empty_convention {
        return ChainComplex {
            coefficients: coeff,
            dims: vec![0],
            boundaries: Vec::new(),
        };
    }
    let mut dims = vec![1];
    dims.extend(sc.f_vector());
    let mut boundaries = Vec::with_capacity(dims.len() - 1);
    if !sc.is_empty() {
        boundaries.push(
            SparseIntMatrix::from_triplets(1, sc.count(0), (0..sc.count(0)).map(|j| (0, j, Int::ONE)))
                .expect("augmentation shape"),
        );
    }
    for r in 1..sc.simplices.len() {
        let mut triplets = Vec::with_capacity(sc.count(r) * (r + 1));
        for (j, s) in sc.simplices(r).iter().enumerate() {
            for i in 0..=r {
                let mut face = s.clone();
                face.remove(i);
                let row = sc.lookup[r - 1][&face];
                let sign = if i % 2 == 0 { 1 } else { -1 };
                triplets.push((row, j, Int::from(sign)));
            }
        }
        boundaries.push(
            SparseIntMatrix::from_triplets(sc.count(r - 1), sc.count(r), triplets)
                .expect("faces index into the previous level"),
        );
    }
    let cc = ChainComplex {
        coefficients: coeff,
        dims,
        boundaries,
    };
    debug_assert!(cc.verify().is_ok());
    cc
}

/// Per-degree matrices of a chain map, starting at degree `-1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainMap {
    pub matrices: Vec<SparseIntMatrix>,
}

impl ChainMap {
    pub fn identity(cc: &ChainComplex) -> Self {
        ChainMap {
            matrices: cc.dims.iter().map(|&d| SparseIntMatrix::identity(d)).collect(),
        }
    }

    pub fn matrix(&self, degree: i64) -> Option<&SparseIntMatrix> {
        usize::try_from(degree + 1).ok().and_then(|i| self.matrices.get(i))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &ChainMap) -> Result<ChainMap> {
        if self.matrices.len() != other.matrices.len() {
            return Err(Error::DimensionMismatch("chain maps span different degrees".into()));
        }
        let matrices = self
            .matrices
            .iter()
            .zip(&other.matrices)
            .map(|(a, b)| a.mul(b))
            .collect::<Result<_>>()?;
        Ok(ChainMap { matrices })
    }

    pub fn power(&self, m: u64) -> Result<ChainMap> {
        let mut acc = ChainMap {
            matrices: self
                .matrices
                .iter()
                .map(|a| SparseIntMatrix::identity(a.cols()))
                .collect(),
        };
        for _ in 0..m {
            acc = self.compose(&acc)?;
        }
        Ok(acc)
    }

    pub fn is_identity(&self) -> bool {
        self.matrices
            .iter()
            .all(|a| *a == SparseIntMatrix::identity(a.rows()))
    }

    /// Checks `∂^tgt ∘ f_r = f_{r-1} ∘ ∂^src` exactly in every degree.
    pub fn check_commutes(&self, src: &ChainComplex, tgt: &ChainComplex) -> Result<()> {
        if self.matrices.len() != src.dims.len() || self.matrices.len() != tgt.dims.len() {
            return Err(Error::DimensionMismatch("chain map does not fit the complexes".into()));
        }
        for r in 0..src.boundaries.len() {
            let lhs = tgt.boundaries[r].mul(&self.matrices[r + 1])?;
            let rhs = self.matrices[r].mul(&src.boundaries[r])?;
            if lhs != rhs {
                return Err(Error::Structural(format!(
                    "chain map does not commute with the boundary in degree {r}"
                )));
            }
        }
        Ok(())
    }
}

/// Parity of the permutation sorting `v`, as `±1`, plus the sorted list.
fn sort_with_sign(mut v: Vec<usize>) -> (Vec<usize>, i64) {
    let mut sign = 1;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    (v, sign)
}

/// Signed permutation matrices of the simplicial automorphism given by
/// `vertex_map` (vertex index to vertex index).
pub fn induced_chain_map(sc: &SimplicialComplex, vertex_map: &[usize]) -> Result<ChainMap> {
    if vertex_map.len() != sc.vertices.len() {
        return Err(Error::DimensionMismatch(format!(
            "vertex map has {} entries for {} vertices",
            vertex_map.len(),
            sc.vertices.len()
        )));
    }
    let mut matrices = vec![SparseIntMatrix::identity(1)];
    for (r, level) in sc.simplices.iter().enumerate() {
        let mut triplets = Vec::with_capacity(level.len());
        for (j, s) in level.iter().enumerate() {
            let image: Vec<usize> = s.iter().map(|&v| vertex_map[v]).collect();
            let (sorted, sign) = sort_with_sign(image);
            let row = sc.lookup[r].get(&sorted).filter(|_| {
                sorted.windows(2).all(|w| w[0] < w[1])
            });
            let Some(&row) = row else {
                let names: Vec<&str> = s.iter().map(|&v| sc.vertices[v].as_str()).collect();
                return Err(Error::Structural(format!(
                    "vertex map is not simplicial: the image of {{{}}} is not a simplex",
                    names.join(", ")
                )));
            };
            triplets.push((row, j, Int::from(sign)));
        }
        matrices.push(
            SparseIntMatrix::from_triplets(level.len(), level.len(), triplets)
                .expect("square permutation matrix"),
        );
    }
    Ok(ChainMap { matrices })
}

/// Vertex map induced on an order complex by a permutation of `[n]`,
/// through its action on the partition labels.
pub fn partition_vertex_map(
    sc: &SimplicialComplex,
    g: &crate::group::Permutation,
) -> Result<Vec<usize>> {
    sc.vertices
        .iter()
        .map(|label| {
            let pi: crate::partition::Partition = label.parse()?;
            let image = g.act(&pi).to_string();
            sc.vertex_index(&image).ok_or_else(|| {
                Error::Structural(format!("{g} sends {label} outside the complex"))
            })
        })
        .collect()
}
