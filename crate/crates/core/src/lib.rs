//! Parabolic subgroups of Coxeter groups: commensurators, normalizers,
//! quasi-centralizers and quasi-centers, together with brute-force oracles
//! that check them.
//!
//! The entry points are [`CoxeterGraph`] (parsing, classification and the
//! closed-form analysis of a subset), [`CoxeterGroup`] (elements, the word
//! problem and every group-theoretic operation), [`CanonicalRepresentation`]
//! (roots and the sign-based length oracle) and [`verify`] (cross-checks).
//!
//! ```
//! use coxeter_core::{CoxeterGraph, CoxeterGroup};
//!
//! let graph = CoxeterGraph::parse("a b c\na b inf\n")?;
//! let x = graph.parse_subset("a,b")?;
//! assert_eq!(graph.analyze_parabolic(x).commensurator, graph.generators());
//!
//! let group = CoxeterGroup::new(graph);
//! let c = group.parse_word("c")?;
//! assert!(group.normalizer_membership(x, &c));
//! # Ok::<(), coxeter_core::Error>(())
//! ```

pub mod error;
pub mod graph;
pub mod parabolic;
pub mod roots;
pub mod subset;
pub mod verify;
pub mod words;

pub use error::{Error, ParseError, Result};
pub use graph::{ComponentType, CoxeterGraph, CoxeterType, Label, ParabolicAnalysis};
pub use parabolic::{ConjugationWitness, ElementaryConjugation, ParabolicDescriptor};
pub use roots::{CanonicalRepresentation, Root, Scalar};
pub use subset::GeneratorSubset;
pub use words::{CoxeterGroup, DoubleCosetDecomposition, Element, Limits, Side};
