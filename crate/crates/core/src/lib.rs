//! Exact-arithmetic computational algebra for finite groupoids.
//!
//! The crate provides:
//!
//! - finite groups given by Cayley tables, with subgroup, quotient and
//!   homomorphism enumeration ([`group`]);
//! - finite groupoids with exact rational cardinality, products, coproducts,
//!   action groupoids and functor groupoids ([`groupoid`]);
//! - functor classification and the ternary (surjective/bijective-on-classes/
//!   fully-faithful) factorization, with the cardinality order and
//!   equivalence criteria that follow from it ([`functor`]);
//! - truncated power series over any scalar, used for the generating function
//!   of finite G-sets and the parametric representation-series bounds
//!   ([`series`]);
//! - the slice category of group homomorphisms into a fixed base group, its
//!   hom-groupoid cardinalities and the homomorphism-counting equivalence
//!   test ([`relfin`]);
//! - homomorphism counting for finite relational structures and the
//!   counting-based isomorphism test ([`relational`]);
//! - homotopy cardinality of spaces described by their homotopy group orders
//!   ([`homotopy`]).
//!
//! All cardinalities and series coefficients are exact rationals with
//! arbitrary-precision integers; floating point appears only in explicitly
//! requested evaluations.

pub mod group;
pub mod groupoid;
pub mod functor;
pub mod homotopy;
pub mod json;
pub mod relational;
pub mod relfin;
pub mod scalar;
pub mod series;

/// Exact rational number used for every cardinality in this crate.
pub type Rat = num_rational::BigRational;

/// Truncated power series with exact rational coefficients.
pub type RationalSeries = series::Series<Rat>;

pub use scalar::Scalar;

/// `p/q` as an exact rational.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(p.into(), q.into())
}
