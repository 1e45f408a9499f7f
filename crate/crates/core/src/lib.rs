//! Exact Graev-type extensions of finite quasi-pseudometrics to free and free
//! abelian groups.
//!
//! - [`words`]: free-group words, reduction, normal forms, abelian words.
//! - [`qpspace`]: finite quasi-pseudometric spaces and the extensions `ρ_e`, `ρ*`.
//! - [`schemes`]: non-crossing pairings and the cost `Γ_ρ`.
//! - [`graev`]: the quasi-prenorm `N_ρ`, the Graev distance, the abelian norm.
//! - [`quniform`]: entourages, Frink's construction, `W(P)` and `W_n(P)`.
//!
//! All values are exact rationals.

pub mod error;
pub mod graev;
pub mod qpspace;
pub mod quniform;
pub mod rational;
pub mod schemes;
pub mod words;

pub use error::{Error, Result};
pub use graev::{
    abelian_dist, abelian_norm, abelian_norm_balanced, graev_dist_free, graev_norm_free, v_rho_member, Caps,
    GroupElement, NormWitness, PairingWitness,
};
pub use qpspace::{ExtendedPoint, QPSpace, ValidationReport, Violation};
pub use quniform::{
    frink_qpm, lemma3_qpm, lemma5_check, universal_base, wn_member, wp_member, Entourage, EntourageSequence,
    FiniteSpace, FrinkTail, WMembership,
};
pub use rational::{format_rational, parse_rational, Rational};
pub use schemes::{enumerate_schemes, gamma, is_scheme, Scheme};
pub use words::{AbelianWord, Alphabet, Generator, Letter, NormalForm, Sign, Word};
