//! Exact-arithmetic verification of a blow-up/contraction construction on
//! plane quartic curves.
//!
//! The library builds two quartics from exact parameters, replays the
//! associated sequence of blow-ups in local charts and on the rank-11
//! Picard lattice, contracts down to two plane models of degree 39, and
//! decides projective equivalence and isomorphism of the resulting curves
//! via degree-8 binary forms.  Everything runs over the rationals or over
//! small finite fields, with no floating point anywhere.

pub mod binaryforms;
pub mod construction;
pub mod exactfield;
pub mod infnear;
pub mod picard;
pub mod polyring;

pub use construction::{ParameterSet, VerdictReport};
pub use exactfield::{FieldDescriptor, FieldValue};
