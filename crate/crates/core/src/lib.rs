//! Combinatorics of words, partitions and graph networks.
//!
//! The crate collects the machinery needed to move between four views of the
//! same finite data: words over an alphabet, set partitions, multigraphs and
//! integer partitions. On top of those carriers it provides
//!
//! - finite-language algebra and truncated generating-function arithmetic
//!   ([`word`], [`series`]),
//! - the restricted-growth-string bijection between words and set partitions
//!   and numerical-semigroup pattern checks ([`partition`], [`semigroup`]),
//! - Littlewood-Richardson coefficients by direct filling enumeration
//!   ([`tableaux`]),
//! - Horn's inductive triple sets `U(n,r)`/`T(n,r)` and admissibility of
//!   partition triples ([`horn`]),
//! - finite automata and rational expressions ([`automaton`]),
//! - exact word counting and seeded uniform sampling for context-free
//!   grammars, plus pattern-occurrence distributions ([`grammar`]),
//! - multigraph metrics: degrees, walks, components, bipartiteness,
//!   spectra, betweenness and combinatorial configurations ([`graph`]),
//! - circuits, link functions, catalan words and their counting limits
//!   ([`catalan`]),
//! - record-linkage style re-identification probabilities and the
//!   coefficient-over-power-of-two probability formula ([`linkage`]).
//!
//! All counting is exact: integers are arbitrary precision where they can
//! grow, probabilities and series coefficients are rationals. Floating point
//! appears only in eigenvalue computation and Monte-Carlo estimates, both of
//! which carry explicit tolerances. Every type is an immutable value and
//! every operation is pure; seeded operations take the seed explicitly.

pub mod automaton;
pub mod catalan;
pub mod grammar;
pub mod graph;
pub mod horn;
pub mod linkage;
pub mod partition;
pub mod rational;
pub mod rng;
pub mod semigroup;
pub mod series;
pub mod tableaux;
pub mod word;

pub use partition::{Partition, SetPartition};
pub use word::{Alphabet, Word};
