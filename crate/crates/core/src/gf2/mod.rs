//! Finite-field and group-algebra arithmetic for multilinear monomial detection.

mod assignment;
mod field;
mod group;

pub use assignment::{AssignmentError, VarAssignment, RNG_ALGORITHM};
pub use field::{gf_mul, Gf64, REDUCTION_LOW, REDUCTION_POLYNOMIAL};
pub use group::{AlgebraError, GroupVec, MAX_GROUP_DIM};

pub(crate) use group::{add_into, is_zero, mul_var_into, scale_add_into};
