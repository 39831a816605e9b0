//! The category of linear maps and Lie algebras in it.

mod lie;
mod object;

pub use lie::{check_lm_jacobi, leibniz_from_lm, lm_from_leibniz, LmLieAlgebra};
pub use object::{
    interchange, lm_exterior_power, lm_symmetric_power, lm_tensor, multisets, subsets, Degree1Slot,
    LmObject, LmPower, TensorIndex,
};
