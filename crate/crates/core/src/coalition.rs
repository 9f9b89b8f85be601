//! Players and coalitions.
//!
//! Players are numbered from 1. A [`Coalition`] is a 64-bit set in which
//! player `i` occupies bit `i - 1`, so the natural ordering of coalitions is
//! the ordering of their bit patterns.

use std::fmt;

use crate::error::{Error, Result};

/// Hard upper bound on the number of players in any game.
pub const MAX_PLAYERS: usize = 64;

/// A 1-based player index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlayerId(u8);

impl PlayerId {
    /// Returns `None` unless `1 <= index <= 64`.
    pub fn new(index: usize) -> Option<Self> {
        (1..=MAX_PLAYERS)
            .contains(&index)
            .then_some(PlayerId(index as u8))
    }

    pub(crate) fn from_bit(bit: usize) -> Self {
        debug_assert!(bit < MAX_PLAYERS);
        PlayerId(bit as u8 + 1)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// Zero-based position of this player in a bit set.
    pub fn bit(self) -> usize {
        self.0 as usize - 1
    }
}

impl fmt::Display for PlayerId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A set of players. Also used wherever a set of players is returned.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coalition(u64);

pub type PlayerSet = Coalition;

impl Coalition {
    pub const EMPTY: Coalition = Coalition(0);

    pub const fn from_bits(bits: u64) -> Self {
        Coalition(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The grand coalition `{1..n}`.
    pub fn grand(n: usize) -> Self {
        assert!(n <= MAX_PLAYERS, "at most {MAX_PLAYERS} players");
        if n == MAX_PLAYERS {
            Coalition(u64::MAX)
        } else {
            Coalition((1u64 << n) - 1)
        }
    }

    pub fn singleton(player: PlayerId) -> Self {
        Coalition(1 << player.bit())
    }

    /// Builds a coalition from 1-based indices, panicking on 0 or indices
    /// above 64. Handy in tests and examples; see
    /// [`Coalition::try_from_indices`] for untrusted input.
    ///
    /// ```
    /// use simple_games::Coalition;
    /// let s = Coalition::of(&[1, 3]);
    /// assert_eq!(s.to_string(), "{1,3}");
    /// ```
    pub fn of(indices: &[usize]) -> Self {
        Self::try_from_indices(indices.iter().copied()).expect("player indices must be in 1..=64")
    }

    pub fn try_from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Result<Self> {
        indices.into_iter().try_fold(Coalition::EMPTY, |acc, i| {
            PlayerId::new(i)
                .map(|p| acc.with(p))
                .ok_or(Error::InvalidPlayer {
                    player: i,
                    n: MAX_PLAYERS,
                })
        })
    }

    pub fn contains(self, player: PlayerId) -> bool {
        self.0 >> player.bit() & 1 == 1
    }

    #[must_use]
    pub fn with(self, player: PlayerId) -> Self {
        Coalition(self.0 | 1 << player.bit())
    }

    #[must_use]
    pub fn without(self, player: PlayerId) -> Self {
        Coalition(self.0 & !(1 << player.bit()))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: Coalition) -> bool {
        self.0 & !other.0 == 0
    }

    #[must_use]
    pub fn union(self, other: Coalition) -> Self {
        Coalition(self.0 | other.0)
    }

    #[must_use]
    pub fn intersection(self, other: Coalition) -> Self {
        Coalition(self.0 & other.0)
    }

    #[must_use]
    pub fn difference(self, other: Coalition) -> Self {
        Coalition(self.0 & !other.0)
    }

    /// `N \ self` for a game on `n` players.
    #[must_use]
    pub fn complement(self, n: usize) -> Self {
        Coalition::grand(n).difference(self)
    }

    /// Largest member, if any.
    pub fn max_player(self) -> Option<PlayerId> {
        (self.0 != 0).then(|| PlayerId::from_bit(63 - self.0.leading_zeros() as usize))
    }

    /// Members in ascending order.
    pub fn players(self) -> Players {
        Players(self.0)
    }

    /// All subsets of this coalition, in ascending bit order, starting with
    /// the empty set.
    pub fn subsets(self) -> Subsets {
        Subsets {
            set: self.0,
            next: Some(0),
        }
    }
}

impl fmt::Display for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, p) in self.players().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromIterator<PlayerId> for Coalition {
    fn from_iter<I: IntoIterator<Item = PlayerId>>(iter: I) -> Self {
        iter.into_iter().fold(Coalition::EMPTY, Coalition::with)
    }
}

pub struct Players(u64);

impl Iterator for Players {
    type Item = PlayerId;

    fn next(&mut self) -> Option<PlayerId> {
        if self.0 == 0 {
            return None;
        }
        let bit = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(PlayerId::from_bit(bit))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Players {}

/// Carry-rippler enumeration of the subsets of a bit set.
pub struct Subsets {
    set: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = Coalition;

    fn next(&mut self) -> Option<Coalition> {
        let current = self.next?;
        let following = current.wrapping_sub(self.set) & self.set;
        self.next = (following != 0).then_some(following);
        Some(Coalition(current))
    }
}
