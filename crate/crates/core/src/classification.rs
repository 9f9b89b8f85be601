//! Dummies, passers, vetoers and the dictator.
//!
//! Vetoers, passers and the dictator have cheap tests in every
//! representation. Dummies are cheap for `(N, W)` and `(N, W^m)` (a dummy is
//! a player outside every minimal winning coalition) but NP-hard for weighted
//! games, where a subset-sum DP or full enumeration is used.

use crate::coalition::{Coalition, PlayerId, PlayerSet};
use crate::error::Result;
use crate::game::{Limits, SimpleGame, WeightedForm};
use crate::representations::minimize;
use crate::table::WinningTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlayerClassification {
    pub dummies: PlayerSet,
    pub passers: PlayerSet,
    pub vetoers: PlayerSet,
    pub dictator: Option<PlayerId>,
}

impl PlayerClassification {
    pub fn is_dummy(&self, p: PlayerId) -> bool {
        self.dummies.contains(p)
    }

    pub fn is_passer(&self, p: PlayerId) -> bool {
        self.passers.contains(p)
    }

    pub fn is_vetoer(&self, p: PlayerId) -> bool {
        self.vetoers.contains(p)
    }

    pub fn is_dictator(&self, p: PlayerId) -> bool {
        self.dictator == Some(p)
    }
}

/// All four player types in one pass.
pub fn classify(game: &SimpleGame, limits: &Limits) -> Result<PlayerClassification> {
    Ok(PlayerClassification {
        dummies: dummies(game, limits)?,
        passers: passers(game),
        vetoers: vetoers(game),
        dictator: dictator(game),
    })
}

/// Players that are never critical.
pub fn dummies(game: &SimpleGame, limits: &Limits) -> Result<PlayerSet> {
    let grand = game.grand();
    match game {
        SimpleGame::MinimalWinning(g) => {
            let used = g.minimal().iter().fold(Coalition::EMPTY, |acc, &s| acc.union(s));
            Ok(grand.difference(used))
        }
        SimpleGame::Winning(g) => dummies(&minimize(g).into(), limits),
        SimpleGame::Weighted(g) => match weighted_dummies_dp(g, limits) {
            Some(d) => Ok(d),
            None => dummies_by_enumeration(game, limits),
        },
        SimpleGame::MultiWeighted(_) => dummies_by_enumeration(game, limits),
    }
}

/// Player `i` is critical somewhere iff some subset of `N \ {i}` weighs in
/// `[q - w_i, q - 1]`. Sums at or above `q` are never needed, so the DP
/// table has `q` cells.
fn weighted_dummies_dp(g: &WeightedForm, limits: &Limits) -> Option<PlayerSet> {
    let (quota, weights) = g.fast()?;
    if quota == 0 || !limits.dp_allows(quota as u128 * weights.len() as u128) {
        return None;
    }
    let q = quota as usize;
    let mut out = Coalition::EMPTY;
    for (i, &wi) in weights.iter().enumerate() {
        let player = PlayerId::new(i + 1).unwrap();
        if wi == 0 {
            out = out.with(player);
            continue;
        }
        let mut reach = vec![false; q];
        reach[0] = true;
        for (j, &wj) in weights.iter().enumerate() {
            if j == i || wj == 0 || wj >= quota {
                continue;
            }
            let wj = wj as usize;
            for s in (wj..q).rev() {
                if reach[s - wj] {
                    reach[s] = true;
                }
            }
        }
        let low = q.saturating_sub(wi as usize);
        if !reach[low..].iter().any(|&r| r) {
            out = out.with(player);
        }
    }
    Some(out)
}

fn dummies_by_enumeration(game: &SimpleGame, limits: &Limits) -> Result<PlayerSet> {
    let table = WinningTable::build(game, limits)?;
    let mut critical = Coalition::EMPTY;
    for s in table.winning() {
        for p in s.difference(critical).players() {
            if !table.wins(s.without(p)) {
                critical = critical.with(p);
            }
        }
    }
    Ok(game.grand().difference(critical))
}

/// Players present in every winning coalition.
pub fn vetoers(game: &SimpleGame) -> PlayerSet {
    let grand = game.grand();
    match game {
        SimpleGame::Winning(g) => g
            .winning()
            .iter()
            .fold(grand, |acc, &s| acc.intersection(s)),
        SimpleGame::MinimalWinning(g) => g
            .minimal()
            .iter()
            .fold(grand, |acc, &s| acc.intersection(s)),
        SimpleGame::Weighted(_) | SimpleGame::MultiWeighted(_) => game
            .players()
            .filter(|&p| !game.wins(grand.without(p)))
            .collect(),
    }
}

/// Players that win alone.
pub fn passers(game: &SimpleGame) -> PlayerSet {
    game.players()
        .filter(|&p| game.wins(Coalition::singleton(p)))
        .collect()
}

/// The player `i` with `v({i}) = 1` and `v(N \ {i}) = 0`, if any.
pub fn dictator(game: &SimpleGame) -> Option<PlayerId> {
    let grand = game.grand();
    game.players()
        .find(|&p| game.wins(Coalition::singleton(p)) && !game.wins(grand.without(p)))
}
