//! Decision procedures for finite posets, orthosets and their logics.
//!
//! A poset gives rise to two orthosets: elements are orthogonal when
//! incomparable, or when strictly comparable. The crate decides N-freeness
//! and weak-N-freeness of posets, the Dacey and compatibility properties of
//! orthosets, and orthomodularity and Boolean-ness of the lattice of
//! orthoclosed sets, each with a concrete counterexample when it fails. The
//! [`census`] module checks the equivalences between these properties over
//! every labeled poset of a given size.
//!
//! ```
//! use orthoposet::{bridges, structure, Logic, Poset};
//!
//! let n = Poset::n_shape();
//! assert!(!structure::is_n_free(&n));
//! let logic = Logic::build(&bridges::incomparability_orthoset(&n)).unwrap();
//! assert!(!logic.is_orthomodular().orthomodular);
//! ```

pub mod bridges;
pub mod census;
pub mod cliques;
pub mod error;
pub mod io;
pub mod limits;
pub mod logic;
pub mod orthoset;
pub mod poset;
pub mod structure;
pub mod subset;

pub use error::{Error, Result};
pub use limits::Limits;
pub use logic::Logic;
pub use orthoset::Orthoset;
pub use poset::Poset;
pub use subset::SubsetMask;
