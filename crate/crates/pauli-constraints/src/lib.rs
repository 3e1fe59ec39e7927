//! Generalized Pauli constraints on fermionic occupation numbers.
//!
//! The crate computes Schubert-calculus coefficients of occupation-number
//! inequalities, generates the closed-form Grassmann families, evaluates
//! explicit states, decomposes plethysms and approximates moment polytopes
//! from inside and outside until the two agree.

pub mod combinatorics;
pub mod permutations;
pub mod polyring;
pub mod coefficients;
pub mod states;
pub mod generators;
pub mod plethysm;
pub mod polytope;
