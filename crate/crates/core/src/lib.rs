//! Ranking-based extensions for abstract argumentation frameworks.
//!
//! Arguments are interpreted by fresh propositional atoms, a framework
//! induces a default base over them, and its canonical ranking model (the
//! JZ model) picks the extensions: conflict-free sets of non-self-attacking
//! arguments whose joint claim is least surprising. The same extensions
//! are also available through a direct weight computation ([`jz`]), which
//! is what the solver uses.
//!
//! ```
//! use rankarg::{corpus, jz};
//!
//! let f = corpus::simple_reinstatement();
//! let ex = jz::jz_extensions(&f);
//! assert_eq!(ex.len(), 1);
//! assert_eq!(f.format_set(ex[0]), "[a,c]");
//! ```

pub mod classical;
pub mod corpus;
pub mod framework;
pub mod generic;
pub mod io;
pub mod jz;
pub mod principles;
pub mod ranking;

pub use framework::{sort_extensions, ArgumentSet, ArgumentationFramework, FrameworkError};
pub use ranking::Rank;
