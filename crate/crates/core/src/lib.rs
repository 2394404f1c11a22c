//! Exact-arithmetic kernel for enumerating candidate algebraically primitive
//! Veech surfaces in the two-zero hyperelliptic stratum.
//!
//! The crate is organised around five subsystems:
//!
//! * [`exact`] -- arbitrary-precision rationals, cyclotomic field elements,
//!   Galois action and rigorous sign determination of real cyclotomic numbers.
//! * [`relations`] -- vanishing sums of roots of unity, conductor bounds of
//!   Mann type, and the residue computation that turns a root tuple into a
//!   tuple of cylinder widths.
//! * [`neron`] -- component groups of degenerate Jacobian fibres over a
//!   two-vertex dual graph, computed by Smith normal form and by the
//!   closed-form torsion order.
//! * [`flatsurf`] -- the staircase prototype surface, exact cylinder
//!   decompositions, intersection matrices and the linear identities relating
//!   horizontal and vertical cylinder data.
//! * [`pipeline`] -- the staged search combining all of the above into a
//!   deterministic candidate list.
//!
//! Everything in this crate is `no_std` compatible (with `alloc`); IO, JSON
//! serialization and the CLI live in the companion `veech-cli` crate.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

#[cfg(any(test, feature = "std"))]
extern crate std;

pub mod exact;
pub mod flatsurf;
pub mod neron;
pub mod pipeline;
pub mod relations;

pub use exact::{CycNum, Rat, RootOfUnity};
