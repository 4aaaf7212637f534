//! `F_p[G]`-module structure on homology: action matrices, Jordan types and
//! the free / augmentation-kernel / trivial decomposition for `G = Z/p`.

use serde::{Deserialize, Serialize};

use crate::arith::is_prime;
use crate::complex::{chain_complex, induced_chain_map, order_complex, partition_vertex_map, ChainComplex, ChainMap, Region};
use crate::error::{Error, Result};
use crate::group::regular_embedding;
use crate::linalg::fp::FpMatrix;
use crate::linalg::homology::homology_basis;
use crate::linalg::Coefficients;
use crate::partition::PartitionLattice;

/// Matrix of a chain automorphism on a homology basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyAction {
    pub degree: i64,
    pub p: u64,
    pub matrix: FpMatrix,
    pub order: u64,
}

/// Bound for the multiplicative-order search of an action matrix.
const ORDER_SEARCH: u64 = 100_000;

pub fn homology_action(cc: &ChainComplex, f: &ChainMap, degree: i64) -> Result<HomologyAction> {
    let Coefficients::Prime(p) = cc.coefficients else {
        return Err(Error::Unsupported("homology actions are computed over F_p".into()));
    };
    f.check_commutes(cc, cc)?;
    let basis = homology_basis(cc, degree)?;
    let fr = f
        .matrix(degree)
        .ok_or_else(|| Error::InvalidArgument(format!("chain map has no degree {degree}")))?;
    let cols = crate::linalg::fp::columns_mod_p(fr, p);
    let dim = basis.dim();
    let mut matrix = FpMatrix::zeros(p, dim, dim);
    for (j, z) in basis.representatives.iter().enumerate() {
        let mut image: crate::linalg::SparseVec = Vec::new();
        for &(i, c) in z {
            image = crate::linalg::fp::axpy(&image, c, &cols[i], p);
        }
        for (i, v) in basis.project(&image)?.into_iter().enumerate() {
            matrix.set(i, j, v);
        }
    }
    let order = matrix
        .multiplicative_order(ORDER_SEARCH)
        .ok_or_else(|| Error::Structural("induced map on homology is not invertible".into()))?;
    Ok(HomologyAction {
        degree,
        p,
        matrix,
        order,
    })
}

/// Jordan block sizes of `M - I`, largest first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JordanType {
    pub p: u64,
    pub sizes: Vec<usize>,
}

impl JordanType {
    pub fn new(p: u64, mut sizes: Vec<usize>) -> Self {
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        JordanType { p, sizes }
    }

    pub fn dimension(&self) -> usize {
        self.sizes.iter().sum()
    }

    pub fn count(&self, size: usize) -> usize {
        self.sizes.iter().filter(|&&s| s == size).count()
    }
}

/// Jordan type of a matrix with `M^p = I`, from the ranks of `(M - I)^j`.
pub fn jordan_type(m: &FpMatrix, p: u64) -> Result<JordanType> {
    if m.p != p || !m.is_square() {
        return Err(Error::Precondition("expected a square matrix over F_p".into()));
    }
    if !m.pow(p)?.is_identity() {
        return Err(Error::Precondition(format!("matrix does not satisfy M^{p} = I")));
    }
    let n = m.rows;
    let nil = m.sub(&FpMatrix::identity(p, n));
    let mut ranks = vec![n];
    let mut power = FpMatrix::identity(p, n);
    for _ in 0..=p {
        power = power.mul(&nil)?;
        ranks.push(power.rank());
    }
    if ranks[p as usize] != 0 {
        return Err(Error::Structural("(M - I)^p is not zero".into()));
    }
    // at_least[j] = number of blocks of size ≥ j
    let at_least = |j: usize| ranks[j - 1] - ranks[j];
    let mut sizes = Vec::new();
    for j in 1..=p as usize {
        let exact = at_least(j) - at_least(j + 1);
        sizes.extend(std::iter::repeat_n(j, exact));
    }
    Ok(JordanType::new(p, sizes))
}

/// Free, augmentation-kernel and trivial summands of an `F_p[Z/p]`-module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZpModuleDescriptor {
    pub p: u64,
    pub free_rank: usize,
    pub k_multiplicity: usize,
    pub trivial_rank: usize,
    pub other: Vec<usize>,
}

impl ZpModuleDescriptor {
    pub fn dimension(&self) -> usize {
        let p = self.p as usize;
        p * self.free_rank
            + (p - 1) * self.k_multiplicity
            + self.trivial_rank
            + self.other.iter().sum::<usize>()
    }

    pub fn triple(&self) -> (usize, usize, usize) {
        (self.free_rank, self.k_multiplicity, self.trivial_rank)
    }
}

/// For `p = 2` the kernel module is trivial, so size-1 blocks count as trivial.
pub fn zp_module_descriptor(jt: &JordanType, p: u64) -> ZpModuleDescriptor {
    let p_us = p as usize;
    let mut d = ZpModuleDescriptor {
        p,
        free_rank: 0,
        k_multiplicity: 0,
        trivial_rank: 0,
        other: Vec::new(),
    };
    for &s in &jt.sizes {
        if s == p_us {
            d.free_rank += 1;
        } else if s == 1 {
            d.trivial_rank += 1;
        } else if s == p_us - 1 {
            d.k_multiplicity += 1;
        } else {
            d.other.push(s);
        }
    }
    d
}

/// Free modules are exactly those with all blocks of size `p`.
#[allow(non_snake_case)]
pub fn is_in_FI_family_zp(jt: &JordanType, p: u64) -> bool {
    jt.sizes.iter().all(|&s| s == p as usize)
}

/// The cyclic action on the top homology of `Δ(Π̄_p)` over `F_p`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PartitionModuleReport {
    pub p: u64,
    pub degree: i64,
    pub dimension: usize,
    pub generator: String,
    pub order: u64,
    pub jordan_type: JordanType,
    pub descriptor: ZpModuleDescriptor,
    pub free: bool,
    /// `((p-1)! - p + 1) / p` copies of the free module plus one `K`.
    pub expected: (usize, usize, usize),
}

/// Builds `Δ(Π̄_p)`, lets the generator of `Z/p` act through the regular
/// embedding, and decomposes `H̃_{p-3}` over `F_p`.
pub fn partition_lattice_module(p: u64, lattice: &PartitionLattice) -> Result<PartitionModuleReport> {
    if !is_prime(p) || p < 3 {
        return Err(Error::InvalidArgument(format!("{p} is not an odd prime")));
    }
    if lattice.n() as u64 != p {
        return Err(Error::DegreeMismatch {
            expected: p as usize,
            actual: lattice.n(),
        });
    }
    let group = regular_embedding(p as usize, 1)?;
    let g = &group.generators()[0];
    let sc = order_complex(lattice, Region::ProperPart)?;
    let cc = chain_complex(&sc, Coefficients::Prime(p));
    let f = induced_chain_map(&sc, &partition_vertex_map(&sc, g)?)?;
    let degree = p as i64 - 3;
    let action = homology_action(&cc, &f, degree)?;
    let jt = jordan_type(&action.matrix, p)?;
    let descriptor = zp_module_descriptor(&jt, p);
    let fact = crate::arith::factorial(p - 1) as usize;
    Ok(PartitionModuleReport {
        p,
        degree,
        dimension: action.matrix.rows,
        generator: g.to_string(),
        order: action.order,
        free: is_in_FI_family_zp(&jt, p),
        jordan_type: jt,
        descriptor,
        expected: ((fact + 1 - p as usize) / p as usize, 1, 0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::build_partition_lattice;

    fn perm_matrix(p: u64, images: &[usize]) -> FpMatrix {
        let mut m = FpMatrix::zeros(p, images.len(), images.len());
        for (j, &i) in images.iter().enumerate() {
            m.set(i, j, 1);
        }
        m
    }

    #[test]
    fn jordan_examples() {
        assert_eq!(jordan_type(&FpMatrix::identity(3, 4), 3).unwrap().sizes, vec![1, 1, 1, 1]);
        assert_eq!(jordan_type(&perm_matrix(3, &[1, 2, 0]), 3).unwrap().sizes, vec![3]);
        let reduced = FpMatrix::from_rows(3, &[vec![0, -1], vec![1, -1]]);
        assert_eq!(jordan_type(&reduced, 3).unwrap().sizes, vec![2]);
        let bad = FpMatrix::from_rows(5, &[vec![2]]);
        assert!(matches!(jordan_type(&bad, 5), Err(Error::Precondition(_))));
    }

    #[test]
    fn descriptors() {
        let d = zp_module_descriptor(&JordanType::new(3, vec![2]), 3);
        assert_eq!(d.triple(), (0, 1, 0));
        let d = zp_module_descriptor(&JordanType::new(5, vec![5, 5, 5, 5, 4]), 5);
        assert_eq!(d.triple(), (4, 1, 0));
        assert_eq!(d.dimension(), 24);
        let d = zp_module_descriptor(&JordanType::new(2, vec![2, 2, 1]), 2);
        assert_eq!(d.triple(), (2, 0, 1));
        assert!(is_in_FI_family_zp(&JordanType::new(3, vec![3, 3]), 3));
        assert!(!is_in_FI_family_zp(&JordanType::new(3, vec![2]), 3));
    }

    #[test]
    fn three_points() {
        let l = build_partition_lattice(3).unwrap();
        let r = partition_lattice_module(3, &l).unwrap();
        assert_eq!(r.dimension, 2);
        assert_eq!(r.jordan_type.sizes, vec![2]);
        assert_eq!(r.descriptor.triple(), r.expected);
    }

    #[test]
    fn identity_acts_trivially() {
        let l = build_partition_lattice(4).unwrap();
        let sc = order_complex(&l, Region::ProperPart).unwrap();
        let cc = chain_complex(&sc, Coefficients::Prime(2));
        let id: Vec<usize> = (0..sc.vertices().len()).collect();
        let f = induced_chain_map(&sc, &id).unwrap();
        let a = homology_action(&cc, &f, 1).unwrap();
        assert!(a.matrix.is_identity());
        assert_eq!(a.order, 1);
        assert_eq!(a.matrix.rows, 6);
    }
}
