//! Algebra of injective partial selfmaps of the naturals that are the
//! identity almost everywhere: composition, Green's relations, the
//! congruence chain, translation solvers, the two basic-open topologies, and
//! a windowed brute-force model that checks all of it.
//!
//! Composition is written left to right: `x(ab) = (xa)b`.

pub mod congruence;
pub mod element;
pub mod error;
pub mod finset;
pub mod green;
pub mod notation;
pub mod oracle;
pub mod semilattice;
pub mod solver;
pub mod topology;

pub use congruence::{principal_congruence, sign, ClassLabel, CongruenceId, Parity};
pub use element::{PartialSelfmap, Point};
pub use error::{Error, Result};
pub use finset::FinSet;
pub use green::GreenRelation;
pub use notation::eval_expr;
pub use oracle::{enumerate_window, verify, Model, Report, Suite, VerifyConfig, Window};
pub use solver::{fiber_count, solve_left, solve_right};
pub use topology::{Flavor, Nbhd};
