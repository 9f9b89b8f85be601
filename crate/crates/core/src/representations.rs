//! Conversions between representations, the dual game and the symmetric
//! (`k`-out-of-`n`) constructor.

use crate::coalition::Coalition;
use crate::error::{Error, Result};
use crate::game::{
    ExtensiveWinningForm, Limits, MinimalWinningForm, MultiWeightedForm, SimpleGame, WeightedForm,
};
use crate::table::WinningTable;

/// Reduces `(N, W)` to `(N, W^m)`.
///
/// A winning coalition is kept when every member is critical, which is
/// exactly where removing players one at a time from any winning coalition
/// must stop.
///
/// ```
/// use simple_games::{representations::minimize, Coalition, ExtensiveWinningForm};
/// let w = ExtensiveWinningForm::new(3, [
///     Coalition::of(&[1, 2]),
///     Coalition::of(&[1, 3]),
///     Coalition::of(&[1, 2, 3]),
/// ]).unwrap();
/// assert_eq!(minimize(&w).minimal(), &[Coalition::of(&[1, 2]), Coalition::of(&[1, 3])]);
/// ```
pub fn minimize(w: &ExtensiveWinningForm) -> MinimalWinningForm {
    let minimal = w
        .winning()
        .iter()
        .copied()
        .filter(|&s| s.players().all(|p| !w.wins(s.without(p))));
    MinimalWinningForm::new(w.n(), minimal).expect("subset of a valid listing")
}

/// Lists every superset of a minimal winning coalition.
pub fn expand(m: &MinimalWinningForm, limits: &Limits) -> Result<ExtensiveWinningForm> {
    table_to_extensive(&WinningTable::build(&m.clone().into(), limits)?, limits)
}

fn table_to_extensive(table: &WinningTable, limits: &Limits) -> Result<ExtensiveWinningForm> {
    if table.count() > limits.max_coalitions as u64 {
        return Err(Error::TooManyCoalitions {
            cap: limits.max_coalitions,
        });
    }
    ExtensiveWinningForm::new(table.n(), table.winning())
}

/// The dual game: its winning coalitions are the blocking coalitions of
/// `game`, those whose complement loses.
pub fn dual(game: &SimpleGame, limits: &Limits) -> Result<ExtensiveWinningForm> {
    let table = WinningTable::build(game, limits)?;
    let n = game.n();
    let blocking = Coalition::grand(n)
        .subsets()
        .filter(|s| !table.wins(s.complement(n)));
    let blocking: Vec<Coalition> = blocking.collect();
    if blocking.len() > limits.max_coalitions {
        return Err(Error::TooManyCoalitions {
            cap: limits.max_coalitions,
        });
    }
    ExtensiveWinningForm::new(n, blocking)
}

/// `[k; 1, ..., 1]` on `n` players.
pub fn k_out_of_n(k: usize, n: usize) -> Result<WeightedForm> {
    if k < 1 || k > n {
        return Err(Error::InvalidParameter(format!(
            "k-out-of-n needs 1 <= k <= n, got k = {k}, n = {n}"
        )));
    }
    WeightedForm::new(k as u64, std::iter::repeat_n(1u64, n))
}

/// True when every minimal winning coalition of `wvg` weighs exactly the
/// quota.
pub fn is_homogeneous(wvg: &WeightedForm, limits: &Limits) -> Result<bool> {
    limits.check_enumerable(wvg.n())?;
    let minimal = weighted_minimal(wvg, limits)?;
    Ok(minimal
        .minimal()
        .iter()
        .all(|&s| &wvg.weight_of(s) == wvg.quota()))
}

/// Minimal winning coalitions of a weighted game without visiting all
/// `2^n` coalitions.
///
/// Players are added in order of decreasing weight; the first time the
/// running weight reaches the quota, the player just added is the lightest
/// member, so dropping anyone leaves the coalition short of the quota.
pub fn weighted_minimal(wvg: &WeightedForm, limits: &Limits) -> Result<MinimalWinningForm> {
    let Some((quota, weights)) = wvg.fast() else {
        let table = WinningTable::build(&wvg.clone().into(), limits)?;
        return minimal_from_table(&table, limits);
    };
    let mut order: Vec<usize> = (0..weights.len()).filter(|&b| weights[b] > 0).collect();
    order.sort_by(|&a, &b| weights[b].cmp(&weights[a]));
    let mut suffix = vec![0u64; order.len() + 1];
    for k in (0..order.len()).rev() {
        suffix[k] = suffix[k + 1] + weights[order[k]];
    }

    struct Search<'a> {
        quota: u64,
        weights: &'a [u64],
        order: &'a [usize],
        suffix: &'a [u64],
        cap: usize,
        found: Vec<Coalition>,
    }

    impl Search<'_> {
        fn descend(&mut self, from: usize, sum: u64, mask: u64) -> Result<()> {
            for k in from..self.order.len() {
                if sum + self.suffix[k] < self.quota {
                    break;
                }
                let bit = self.order[k];
                let next = sum + self.weights[bit];
                let with = mask | 1 << bit;
                if next >= self.quota {
                    if self.found.len() == self.cap {
                        return Err(Error::TooManyCoalitions { cap: self.cap });
                    }
                    self.found.push(Coalition::from_bits(with));
                } else {
                    self.descend(k + 1, next, with)?;
                }
            }
            Ok(())
        }
    }

    let mut search = Search {
        quota,
        weights,
        order: &order,
        suffix: &suffix,
        cap: limits.max_coalitions,
        found: Vec::new(),
    };
    if quota > 0 {
        search.descend(0, 0, 0)?;
    }
    MinimalWinningForm::new(wvg.n(), search.found)
}

fn minimal_from_table(table: &WinningTable, limits: &Limits) -> Result<MinimalWinningForm> {
    let mut found = Vec::new();
    for s in table.winning() {
        if s.players().all(|p| !table.wins(s.without(p))) {
            if found.len() == limits.max_coalitions {
                return Err(Error::TooManyCoalitions {
                    cap: limits.max_coalitions,
                });
            }
            found.push(s);
        }
    }
    MinimalWinningForm::new(table.n(), found)
}

/// `W^m` of any representation, taking the cheapest available route.
pub fn minimal_winning_of(game: &SimpleGame, limits: &Limits) -> Result<MinimalWinningForm> {
    match game {
        SimpleGame::Winning(g) => Ok(minimize(g)),
        SimpleGame::MinimalWinning(g) => Ok(g.clone()),
        SimpleGame::Weighted(g) => weighted_minimal(g, limits),
        SimpleGame::MultiWeighted(_) => minimal_from_table(&WinningTable::build(game, limits)?, limits),
    }
}

/// `(N, W)` of any representation.
pub fn extensive_of(game: &SimpleGame, limits: &Limits) -> Result<ExtensiveWinningForm> {
    match game {
        SimpleGame::Winning(g) => Ok(g.clone()),
        _ => table_to_extensive(&WinningTable::build(game, limits)?, limits),
    }
}

/// A conjunction of weighted games with the same winning set.
///
/// Each maximal losing coalition `T` contributes `[1; w]` with `w_i = 1`
/// outside `T` and `0` inside, which rejects exactly the subsets of `T`.
/// A coalition loses iff it fits inside some maximal losing coalition.
/// Weighted inputs are wrapped as a single component.
pub fn multi_weighted_of(game: &SimpleGame, limits: &Limits) -> Result<MultiWeightedForm> {
    match game {
        SimpleGame::MultiWeighted(g) => return Ok(g.clone()),
        SimpleGame::Weighted(g) => return MultiWeightedForm::new(vec![g.clone()]),
        _ => {}
    }
    let table = WinningTable::build(game, limits)?;
    let n = game.n();
    let grand = Coalition::grand(n);
    let mut parts = Vec::new();
    for t in grand.subsets() {
        if table.wins(t) || grand.difference(t).players().any(|p| !table.wins(t.with(p))) {
            continue;
        }
        if parts.len() == limits.max_coalitions {
            return Err(Error::TooManyCoalitions {
                cap: limits.max_coalitions,
            });
        }
        let weights: Vec<u64> = (0..n).map(|b| u64::from(t.bits() >> b & 1 == 0)).collect();
        parts.push(WeightedForm::from_u64(1, &weights)?);
    }
    MultiWeightedForm::new(parts)
}
