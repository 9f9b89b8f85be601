use thiserror::Error;

use crate::coalition::MAX_PLAYERS;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("player {player} is out of range for a game on {n} players")]
    InvalidPlayer { player: usize, n: usize },

    #[error("{n} players exceeds the enumeration budget of {cap} players")]
    EnumerationTooLarge { n: usize, cap: usize },

    #[error(
        "counting needs at most {n_cap} players or at most {ie_cap} minimal winning \
         coalitions; game has {n} players and {minimal} minimal winning coalitions"
    )]
    CountingTooLarge {
        n: usize,
        n_cap: usize,
        minimal: usize,
        ie_cap: usize,
    },

    #[error("more than {cap} coalitions would have to be listed")]
    TooManyCoalitions { cap: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("games are limited to 1..={MAX_PLAYERS} players, got {0}")]
    Capacity(usize),
}

impl Error {
    /// True for the errors that signal an exhausted desk-scale budget rather
    /// than bad input.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            Error::EnumerationTooLarge { .. }
                | Error::CountingTooLarge { .. }
                | Error::TooManyCoalitions { .. }
        )
    }
}
