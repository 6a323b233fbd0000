//! Louvain community detection with pluggable quality criteria.
//!
//! The optimizer in [`louvain`] never looks at a formula: it moves nodes
//! between communities through the [`criteria::Criterion`] contract and
//! coarsens the graph between passes. Nine criteria ship with the crate,
//! each paired with an ordered-pair evaluator for cross-checking, and
//! [`oracle`] solves small instances exactly.
//!
//! ```
//! use genlouvain::{detect, CriterionId, Graph, RunConfig};
//!
//! let g = Graph::from_edges(6, [
//!     (0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0),
//!     (3, 4, 1.0), (4, 5, 1.0), (3, 5, 1.0),
//!     (2, 3, 1.0),
//! ]);
//! let h = detect(&g, &RunConfig::new(CriterionId::NewmanGirvan)).unwrap();
//! assert_eq!(h.kappa_final(), 2);
//! ```

pub mod bench;
pub mod criteria;
pub mod error;
pub mod graph;
pub mod io;
pub mod louvain;
pub mod oracle;
pub mod synth;

pub use criteria::{evaluate, pretreat, relational_total, Criterion, CriterionId, CriterionState};
pub use error::{Error, Result};
pub use graph::{aggregate, Graph, Level0Constants, Partition};
pub use louvain::{detect, run, run_with, Hierarchy, RunConfig};
