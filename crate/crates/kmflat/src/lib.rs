//! Exact-arithmetic toolkit for the flat geometry of Kac-Moody symmetric
//! spaces: generalized Cartan matrices and their symmetrizers, extended
//! realizations, Weyl groups, the Tits cone, a Loos-style model of the
//! maximal flat, rank-one hyperbolic labs and the horizon (boundary)
//! complex.

pub mod cli;
pub mod cone;
pub mod flat;
pub mod gcm;
pub mod horizon;
pub mod local;
pub mod linalg;
pub mod realization;
pub mod sl2;
pub mod weyl;
