//! Cohomology of elementary abelian groups and the invariants built on it.

pub mod element;
pub mod euler;
pub mod index;
pub mod poly;
pub mod stiefel_whitney;

pub use element::{gc_multiply, GroupCohomologyElement};
pub use euler::{euler_class_zeta, euler_class_zeta_h, proper_subgroups};
pub use index::{fh_index_bounds, fh_index_prime, FhIndexBounds, FhIndexReport, IdealDescriptor};
pub use poly::{poly_divides, Poly};
pub use stiefel_whitney::{chisholm_bound, dual_sw_expansion, multinomial_mod2, SwExpansion};

/// Restriction of `x` to the subgroup spanned by `h`.
pub fn restrict(x: &GroupCohomologyElement, h: &[Vec<u64>]) -> crate::Result<GroupCohomologyElement> {
    x.restrict(h)
}
