//! Partition lattices, configuration-space arrangements and the equivariant
//! invariants that decide when `F(R^d, n)` maps to a sphere.

pub mod arith;
pub mod arrangement;
pub mod cli;
pub mod cohomology;
pub mod complex;
pub mod error;
pub mod group;
pub mod limits;
pub mod linalg;
pub mod obstruction;
pub mod partition;
pub mod representation;
pub mod whitney;

pub use complex::{chain_complex, induced_chain_map, order_complex, ChainComplex, ChainMap, Region, SimplicialComplex};
pub use error::{Error, Result};
pub use group::{group_from_generators, orbits_and_stabilizers, regular_embedding, FiniteGroup, Permutation};
pub use limits::Limits;
pub use linalg::{homology, smith_normal_form, solve_integer, Coefficients, Int, SparseIntMatrix};
pub use partition::{build_partition_lattice, Partition, PartitionLattice};
