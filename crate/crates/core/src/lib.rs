//! Exact analysis of simple voting games.
//!
//! A simple game decides, for each coalition of players, whether it wins.
//! Four representations are supported: the full list of winning
//! coalitions, the list of minimal winning coalitions, a weighted voting
//! game `[q; w_1, ..., w_n]`, and a conjunction of weighted voting games.
//!
//! On top of these the crate classifies players (dummies, passers,
//! vetoers, dictators), compares players by desirability and tests
//! linearity, computes Banzhaf, Shapley–Shubik, Holler and Deegan–Packel
//! indices and Chow parameters as exact rationals, decides whether a game
//! is weighted, and builds the PARTITION and vertex-cover gadgets used as
//! hard test instances.
//!
//! Anything exponential is guarded by [`Limits`]; exceeding a limit is an
//! error ([`Error::is_budget`]) rather than a long wait.
//!
//! ```
//! use simple_games::{indices, Limits, SimpleGame, WeightedForm};
//! let game: SimpleGame = WeightedForm::from_u64(3, &[2, 1, 1]).unwrap().into();
//! let banzhaf = indices::banzhaf_indices(&game, &Limits::default()).unwrap();
//! assert_eq!(banzhaf.to_string(), "3/5 1/5 1/5");
//! ```

mod coalition;
mod error;
mod fourier_motzkin;
mod game;
mod subset_index;
mod table;

pub mod classification;
pub mod desirability;
pub mod indices;
pub mod random;
pub mod realizability;
pub mod reductions;
pub mod representations;

pub use coalition::{Coalition, PlayerId, PlayerSet, Players, Subsets, MAX_PLAYERS};
pub use error::{Error, Result};
pub use game::{
    enumerate_winning, validate, ExtensiveWinningForm, Limits, MinimalWinningForm,
    MultiWeightedForm, SimpleGame, ValidationReport, Violation, WeightedForm,
};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/representations.md")]
    mod representations {}
    #[doc = include_str!("../../../book/src/player_types.md")]
    mod player_types {}
    #[doc = include_str!("../../../book/src/desirability.md")]
    mod desirability {}
    #[doc = include_str!("../../../book/src/indices.md")]
    mod indices {}
    #[doc = include_str!("../../../book/src/realizability.md")]
    mod realizability {}
    #[doc = include_str!("../../../book/src/hard_instances.md")]
    mod hard_instances {}
    #[doc = include_str!("../../../book/src/budgets.md")]
    mod budgets {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
}
