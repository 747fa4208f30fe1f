//! Exact computations with opmonoidal monads: the linear monad `A ⊗ −` of a finite-dimensional
//! bialgebra, and monads on finite sets and finite presheaf categories.

pub mod bialgebra;
pub mod corpus;
pub mod exactlin;
pub mod finset;
pub mod fusion;
pub mod hopfmod;
pub mod report;
