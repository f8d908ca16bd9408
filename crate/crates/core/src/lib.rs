//! Exact computations in the Heisenberg algebra of a based rational vector
//! space with a bilinear pairing: normal ordering, the `p`/`q` generator
//! families and their relations, the Fock representation, graded
//! symmetric/exterior powers and the matching dimension counts.

pub mod error;
pub mod fock;
pub mod generators;
pub mod graded;
pub mod heisenberg;
pub mod kdims;
pub mod linalg;
pub mod partitions;
pub mod rational;
pub mod series;

pub use error::AlgebraError;
pub use fock::{act_element, act_generator, fock_dim, FockVector};
pub use generators::{
    check_triangularity, expand_p, expand_q, pq_to_a_basis, s_coefficient, verify_qp_relation,
    verify_qq_pp_commute, Flavor, RelationVariant,
};
pub use graded::{euler, ext_power, sym_power, tensor, GradedDims};
pub use heisenberg::{
    commutator, commutator_scalar, multiply, normal_order, Element, Generator, NormalElement,
    NormalKey, PairingMatrix, Word,
};
pub use kdims::{compare_dims, vistoli_dim, DimComparison, KModel};
pub use partitions::{
    is_coarser, multipartition_coarser, multipartitions_of, partitions_of, z_constant,
    MultiPartition, Partition,
};
pub use rational::Rational;
