//! Analysis of tropical bases of simple matroids.
//!
//! A matroid is given by its circuits (minimal dependent sets). A subfamily
//! of circuits is a *tropical basis* when every non-closed set `X` is
//! certified by some member `C` with `|C \ X| = 1`. This crate provides:
//!
//! - validated circuit families and matroids over up to 64 elements, with
//!   rank, closure, cocircuits, duality, simplicity and binarity tests
//!   ([`matroid`], [`circuits`]);
//! - tropical basis tests by two independent routes, the witness hypergraph
//!   over all non-closed sets, enumeration of all minimal tropical bases,
//!   uniqueness of the minimal basis, double-circuit decompositions, the
//!   closed-basis sufficiency check, and basis swaps ([`tropical`]);
//! - constructions: column matroids over prime fields ([`gf`]), cycle
//!   matroids of multigraphs ([`graph`]), and a small named catalog
//!   ([`catalog`]);
//! - deliberately naive reference implementations for cross-checking
//!   ([`oracle`]), and plain-text input formats ([`io`]).
//!
//! Subsets are bit masks ([`ElementSubset`]) rendered 1-based, e.g.
//! `{1,2,4}`. Operations that scan all `2^n` subsets take [`ScanOpts`] and
//! refuse ground sets beyond the caps in [`scan`].
//!
//! ```
//! use tropbas::{CircuitFamily, Matroid, ScanOpts};
//! use tropbas::tropical;
//!
//! // Four points on a line: every 3 of them are dependent.
//! let family = CircuitFamily::validate(
//!     4,
//!     &[vec![1, 2, 3], vec![1, 2, 4], vec![1, 3, 4], vec![2, 3, 4]],
//! )?;
//! let m = Matroid::new(family);
//!
//! let bases = tropical::enumerate_minimal_tropical_bases(&m, 64, ScanOpts::default())?;
//! assert_eq!(bases.bases.len(), 4); // any three circuits, never two
//!
//! let unique = tropical::has_unique_minimal_basis(&m, ScanOpts::default())?;
//! assert!(!unique.unique);
//! # Ok::<(), tropbas::Error>(())
//! ```

pub mod catalog;
pub mod circuits;
pub mod error;
pub mod gf;
pub mod graph;
pub mod io;
pub mod matroid;
pub mod oracle;
pub mod scan;
pub mod subset;
pub mod tropical;

pub use circuits::CircuitFamily;
pub use error::{Error, Result};
pub use matroid::Matroid;
pub use scan::ScanOpts;
pub use subset::ElementSubset;
