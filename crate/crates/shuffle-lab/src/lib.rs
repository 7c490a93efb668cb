//! A laboratory for transposition shuffles on the symmetric group `S_n` and the
//! hyperoctahedral group `B_n`.
//!
//! The crate computes, at small deck sizes, exact mixing distances by rational
//! convolution; closed-form eigenvalue catalogs indexed by (bi-)partitions and
//! standard Young (bi-)tableaux; explicit eigenvectors in word modules built by
//! lifting operators; and spectral upper / combinatorial lower bounds on mixing.
//! At large deck sizes it runs Monte-Carlo experiments for strong stationary
//! times and coupon-collector counting processes.
//!
//! Every closed-form quantity is cross-checkable against a brute-force oracle:
//! the dense transition matrix of the walk, built from the group enumeration in
//! [`group`] and diagonalised in [`exact`].

pub mod bounds;
pub mod error;
pub mod exact;
pub mod group;
pub mod lifting;
pub mod shuffles;
pub mod simulation;
pub mod spectra;
pub mod tableaux;
pub mod verify;

pub use error::Error;

/// Exact scalar used throughout the rational paths.
pub type Q = num::BigRational;

/// Shorthand for building a rational from an integer.
pub fn q_int(v: i64) -> Q {
    Q::from_integer(v.into())
}

/// Shorthand for building a rational `num/den`.
pub fn q_ratio(num: i64, den: i64) -> Q {
    Q::new(num.into(), den.into())
}
