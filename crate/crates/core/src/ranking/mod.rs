//! Finite-world ranking measures, conditionals and ranking constructions.

mod construction;
mod measure;
mod rank;
mod world;

pub use construction::{
    construct, is_justifiably_constructible, jj_search, ConstructionError, JjModel,
};
pub use measure::{Conditional, ConditionalKind, DefaultBase, RankingMeasure, SpaceMismatch};
pub use rank::{ParseRankError, Rank};
pub use world::{Proposition, WorldSpace, WorldSpaceError, MAX_ATOMS};
