//! Verified arithmetic on Cantor and self-similar subsets of the real line.
//!
//! Everything is computed in exact rational arithmetic. Sufficient-condition
//! checkers return `Proved` with exact witness quantities and a certified
//! image, or `Inconclusive` — never a rounded verdict. Images of sets under
//! C¹ expressions come out as normalized finite unions of closed rational
//! intervals, either exact (backed by a proved theorem) or as outer covers
//! at a chosen refinement depth.
//!
//! The crate is organized bottom-up:
//!
//! - [`rational`], [`interval`], [`enclosure`]: exact scalars, closed
//!   intervals, normalized unions, and certified enclosures of roots and
//!   the constants e, π, √2;
//! - [`system`], [`structure`]: self-similar and Moran generators with
//!   level sets, cylinders, s_min, κ and thickness;
//! - [`expr`], [`calculus`]: the expression grammar with symbolic
//!   derivatives and certified partial bounds over boxes;
//! - [`theorems`]: one checker per sufficient condition;
//! - [`image`]: exact images, outer covers, the two-branch quotient closed
//!   form, and scaled-intersection queries;
//! - [`apps`]: scripted end-to-end verifications;
//! - [`cli`], [`set_spec`], [`svg`]: the command-line front end and its
//!   input/output formats.
//!
//! See the crate examples for runnable walkthroughs of each capability.

pub mod apps;
pub mod calculus;
pub mod cli;
pub mod cover;
pub mod enclosure;
pub mod error;
pub mod expr;
pub mod image;
pub mod interval;
pub mod rational;
pub mod set_spec;
pub mod structure;
pub mod svg;
pub mod system;
pub mod theorems;

pub use error::{Error, Result};
pub use interval::{Interval, IntervalUnion, SetOp};
pub use rational::Rational;
