//! Topological invariants of circle actions computed from fixed-point data.
//!
//! A smooth circle action on a closed oriented `2n`-manifold is described here
//! only by its fixed points: isolated points with their rotation exponents and
//! orientation sign, and (in dimension four) fixed surfaces with their normal
//! Euler numbers. From that data the crate computes, with exact rational
//! arithmetic,
//!
//! * Euler number, Pontryagin numbers and signature by localization
//!   ([`localize`]),
//! * equivariant connected sums and blow-ups of the data ([`surgery`]),
//! * the vanishing and equal-exponent signature identities as verdicts,
//! * necessary conditions for a manifold to carry a non-constant harmonic
//!   morphism with one-dimensional fibres ([`obstruct`]).
//!
//! Orientation convention: the complex projective plane with its linear
//! action has `p_1 = +3` and signature `+1`.
//!
//! ```
//! use circloc::actiondata::cp_action;
//! use circloc::localize::{euler_number, pontryagin_number, signature};
//! use circloc::exactalg::{rat, Partition};
//!
//! let cp2 = cp_action(&[0, 1, 2]).unwrap();
//! assert_eq!(euler_number(&cp2), 3.into());
//! assert_eq!(pontryagin_number(&cp2, &Partition::single(1)).unwrap(), rat(3));
//! assert_eq!(signature(&cp2).unwrap().value, 1.into());
//! ```

pub mod actiondata;
pub mod cli;
pub mod error;
pub mod exactalg;
mod json;
pub mod localize;
pub mod obstruct;
pub mod surgery;

pub use error::{Error, Result, Violation};

/// Orientation convention note carried by every report.
pub const CONVENTION: &str = "p_1[CP2]=+3 orientation convention";
