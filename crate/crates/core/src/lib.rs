//! Invariants, move calculus and spun-torus classification checks for
//! welded knots given as signed Gauss codes.
//!
//! * [`codec`]: Gauss codes, symmetries, canonical forms.
//! * [`knotgroup`]: Wirtinger presentation, meridian and longitude.
//! * [`invariants`]: Alexander polynomial, finite colorings, peripheral
//!   multisets, f-polynomial, level-tagged batteries.
//! * [`moves`]: welded Reidemeister moves and bounded search.
//! * [`spun`]: Tube certificates and classification verdicts.
//! * [`corpus`]: built-in knots with frozen Alexander polynomials.
//! * [`cli`]: the `weld` command line.

pub mod cli;
pub mod codec;
pub mod corpus;
pub mod invariants;
pub mod knotgroup;
pub mod moves;
pub mod spun;

pub use codec::{CodecError, GaussCode, GaussSymbol, Role, Sign, Symmetry};
pub use invariants::{battery, InvariantBattery, LaurentPoly, Level, Palette};
pub use moves::{apply, enumerate_moves, Move, MoveKind, MovePath};
pub use spun::{spun_compare, tube_certificate, welded_compare, Outcome, TubeCertificate, Verdict};
