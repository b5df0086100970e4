//! Derives the state, writer, reader, and error monad transformers from a
//! single generic construction — translating a monad along an adjunction —
//! and checks every law and commuting diagram involved by exhaustive (or
//! seeded-sample) pointwise evaluation over finite test universes.
//!
//! The crate is organized around a handful of small runtime descriptors:
//!
//! * [`FiniteType`] / [`Value`] — enumerable carriers and their elements,
//!   with tabulated exponentials so function equality is decidable;
//! * [`MonadDescriptor`] / [`Strength`] — a monad on the base category as a
//!   bundle of object/map/unit/mult closures;
//! * [`Adjunction`] — the per-instance contract (free/forgetful style pairs
//!   for state, writer, reader, error) shared by the generic machinery;
//! * [`MonadOnD`] — a monad living on the instance category;
//! * [`translate`](translate::translate) — the generic construction itself;
//! * [`LawReport`] — structured pass/fail output of every check suite.
//!
//! Everything is pure and immutable after construction; repeated runs with
//! the same [`Budget`] produce identical reports.

pub mod adjunction;
pub mod fixtures;
pub mod function;
pub mod harness;
pub mod instances;
pub mod laws;
pub mod monad;
pub mod monoid;
pub mod oracle;
pub mod registry;
pub mod suites;
pub mod translate;
pub mod universe;

pub use adjunction::{
    check_triangle_identities, induced_monad, phi, phi_inv, Adjunction, DMorphism, DObject,
    DStructure, MonadOnD,
};
pub use function::{enumerate_functions, hom_set, FiniteFunction};
pub use harness::{Budget, Check, CheckResult, LawReport};
pub use monad::{
    canonical_strength, identity_monad, list_monad, option_monad, writer_monad, MonadDescriptor,
    Strength,
};
pub use monoid::Monoid;
pub use translate::{check_translation_diagrams, stack, translate, StackLayer};
pub use universe::{extensional_equal, values_of, FiniteType, Value};

/// Errors surfaced by the public construction and comparison operations.
///
/// Law *failures* are never errors: they are collected into [`LawReport`]s.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A name-based lookup did not match any registered universe.
    #[error("unknown type name `{0}`")]
    UnknownType(String),
    /// Two values with incompatible shapes were compared.
    #[error("type mismatch comparing `{left}` with `{right}`")]
    TypeMismatch { left: String, right: String },
    /// An argument did not have the shape an operation requires.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    /// A monad-on-D was combined with an adjunction it does not belong to.
    #[error("owner mismatch: expected a monad on `{expected}`, got one on `{found}`")]
    OwnerMismatch { expected: String, found: String },
    /// Full enumeration of a carrier was requested beyond the hard limit.
    #[error("cannot enumerate `{0}`: carrier too large")]
    TooLarge(String),
    /// A monoid handed to the writer instance fails its laws.
    #[error("monoid law violated for `{name}`: {counterexample}")]
    MonoidLaw { name: String, counterexample: String },
    /// Eager verification during a lifting found a violated side condition.
    #[error("{condition} violated while lifting `{monad}`: {counterexample}")]
    LiftViolation {
        condition: &'static str,
        monad: String,
        counterexample: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
