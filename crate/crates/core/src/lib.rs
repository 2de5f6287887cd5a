//! Combinatorial and computational tools for graded Artinian monomial ideals.
//!
//! The crate is organised bottom-up:
//!
//! * [`monomial`] and [`ideal`]: exponent vectors, term orders, monomial ideals,
//!   standard monomials and the stable / strongly stable / almost revlex hierarchy.
//! * [`hilbert`]: O-sequences, the difference operator, breakpoints and the
//!   Hilbert-function characterizations of the k-SLP.
//! * [`lefschetz`]: x_n-chain decompositions and the combinatorial SL / WL conditions.
//! * [`construct`]: almost revlex, lex-segment and Borel-fixed tower ideals built
//!   from a Hilbert function, plus brute-force enumeration of strongly stable ideals.
//! * [`betti`]: graded Betti numbers (Eliahou-Kervaire, m-full recursion, closed
//!   forms, upper bounds) and a Koszul-homology oracle.
//! * [`groebner`]: prime-field polynomials, Buchberger, Monte-Carlo generic initial
//!   ideals and rank-based Lefschetz tests for arbitrary graded ideals.
//! * [`parse`]: the text grammars for monomials, ideals and polynomials.

pub mod betti;
pub mod construct;
mod error;
pub mod groebner;
pub mod hilbert;
pub mod ideal;
pub mod lefschetz;
pub mod monomial;
pub mod parse;

pub use error::{Error, Result};
pub use hilbert::OSequence;
pub use ideal::{MonomialIdeal, StabilityReport};
pub use monomial::{Monomial, TermOrder, MAX_DEGREE, MAX_VARS};
