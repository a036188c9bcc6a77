//! Fundamental basic blocks of RC-lattices and labeled graphs without
//! isolated vertices.
//!
//! The crate builds the complete block `CF(n)` and every block `F ∈ 𝓕ₙ(l)`
//! from its adjunct pairs, labels the edges of `K_n` by their position in
//! dictionary order, maps blocks to digraphs and back, and counts both
//! families exactly (`f(n, l) = d(n, l)`, OEIS A054548).
//!
//! ```
//! use fbbgraph::{build_fbb, correspondence::phi, RankSet};
//!
//! let ranks = RankSet::from_labels(4, [1, 3, 4, 5]).unwrap();
//! let block = build_fbb(4, &ranks).unwrap();
//! assert_eq!(block.nullity(), 4);
//! assert_eq!(phi(&block).unwrap().ranks(), &ranks);
//! ```

pub mod bits;
pub mod correspondence;
pub mod counting;
pub mod error;
pub mod fbb;
pub mod graphs;
pub mod labeling;
pub mod order;
pub mod render;
pub mod verify;

pub use error::{Error, Result};
pub use fbb::{build_cf, build_fbb, CompleteFbb, Fbb};
pub use graphs::{DirectedLabeledGraph, LabeledGraph};
pub use labeling::{rank, unrank, EdgeLabel, RankSet};
pub use order::{ElemId, Element, Poset};
