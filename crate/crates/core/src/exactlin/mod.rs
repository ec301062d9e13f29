//! Exact scalars, dense linear maps and the tensor-index convention shared by
//! every structure constant in the crate.

mod field;
mod gauss;
mod linmap;
mod tensor;

pub use field::{Field, Scalar, MAX_PRIME};
pub use gauss::{invert, kernel_basis, rank, solve_linear, spans_contain};
pub use linmap::{basis_vector, kron_vec, tensor_map, LinMap, Slot, Vector};
pub use tensor::TensorIndex;
