//! Path-model combinatorics for generalized Kac–Moody (Borcherds) algebras:
//! truncated path crystals, their embedding into the associated Kac–Moody
//! model, tensor and branching decompositions, Demazure crystals and the
//! Demazure character formula.
//!
//! The core types are generic over an exact scalar ([`scalar::Scalar`],
//! implemented for every `Ratio<T>`); the aliases below fix it to
//! [`BigRational`](num_rational::BigRational).

pub mod associated;
pub mod cartan;
pub mod crystal;
pub mod demazure;
pub mod error;
pub mod index;
pub mod monoid;
pub mod pathmodel;
pub mod report;
pub mod scalar;
pub mod verify;
pub mod weight;

pub use cartan::BorcherdsCartanDatum;
pub use error::{Error, Result};

pub type Rational = num_rational::BigRational;
pub type RationalWeight = weight::Weight<Rational>;
pub type RationalPath = pathmodel::Path<Rational>;
pub type RationalCrystal = crystal::CrystalGraph<Rational>;
pub type RationalCharacter = crystal::CharacterElement<Rational>;
