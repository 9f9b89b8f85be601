//! Is a game a single weighted voting game?
//!
//! A game is weighted iff some `w ≥ 0` and `q` satisfy `w(S) ≥ q` on every
//! minimal winning coalition and `w(T) ≤ q - 1` on every maximal losing one
//! (the gap of 1 is free because the system is positively homogeneous).
//! Feasibility is decided exactly by Fourier–Motzkin elimination.
//!
//! Equivalent players can share one weight variable: swapping two
//! equivalent players maps the game to itself, so averaging any feasible
//! weighting over those swaps is again feasible.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::coalition::{Coalition, PlayerId};
use crate::desirability::{strict_desirability_ordering, OrderingVerdict};
use crate::error::{Error, Result};
use crate::fourier_motzkin::{solve, Inequality};
use crate::game::{Limits, SimpleGame, WeightedForm};
use crate::representations::minimal_winning_of;
use crate::table::WinningTable;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizabilityResult {
    pub realizable: bool,
    /// Integer weights generating exactly the same winning set.
    pub witness: Option<WeightedForm>,
    /// An incomparable pair, when non-linearity alone rules out weights.
    pub certificate: Option<(PlayerId, PlayerId)>,
}

impl RealizabilityResult {
    fn rejected(certificate: Option<(PlayerId, PlayerId)>) -> Self {
        RealizabilityResult {
            realizable: false,
            witness: None,
            certificate,
        }
    }
}

fn maximal_losing_in(table: &WinningTable) -> Vec<Coalition> {
    let n = table.n();
    let grand = Coalition::grand(n);
    grand
        .subsets()
        .filter(|&t| !table.wins(t))
        .filter(|&t| grand.difference(t).players().all(|p| table.wins(t.with(p))))
        .collect()
}

/// Losing coalitions that win as soon as any outsider joins.
pub fn maximal_losing(game: &SimpleGame, limits: &Limits) -> Result<Vec<Coalition>> {
    let mut out = maximal_losing_in(&WinningTable::build(game, limits)?);
    out.sort();
    Ok(out)
}

fn same_winning_set(a: &WinningTable, b: &WinningTable) -> bool {
    a.n() == b.n() && a.winning().eq(b.winning())
}

/// Decides weightedness and, when it holds, returns integer weights.
///
/// Non-linear games are rejected straight away with an incomparable pair.
/// A weighted input is its own witness.
///
/// ```
/// use simple_games::realizability::is_wvg_realizable;
/// use simple_games::{Coalition, Limits, MinimalWinningForm};
/// let majority = MinimalWinningForm::new(3, [
///     Coalition::of(&[1, 2]),
///     Coalition::of(&[1, 3]),
///     Coalition::of(&[2, 3]),
/// ]).unwrap();
/// let r = is_wvg_realizable(&majority.into(), &Limits::default()).unwrap();
/// assert_eq!(r.witness.unwrap().to_string(), "[2;1,1,1]");
/// ```
pub fn is_wvg_realizable(game: &SimpleGame, limits: &Limits) -> Result<RealizabilityResult> {
    limits.check_enumerable(game.n())?;
    if let SimpleGame::Weighted(w) = game {
        return Ok(RealizabilityResult {
            realizable: true,
            witness: Some(w.clone()),
            certificate: None,
        });
    }
    let minimal = minimal_winning_of(game, limits)?;
    let classes = match strict_desirability_ordering(&minimal) {
        OrderingVerdict::NonLinear(i, j) => return Ok(RealizabilityResult::rejected(Some((i, j)))),
        OrderingVerdict::Linear(order) => order.classes().to_vec(),
    };

    let table = WinningTable::build(game, limits)?;
    let n = game.n();
    let vars = classes.len() + 1;
    let mut class_of = vec![0usize; n];
    for (k, class) in classes.iter().enumerate() {
        for p in class {
            class_of[p.bit()] = k;
        }
    }
    let counts = |s: Coalition| {
        let mut c = vec![BigInt::zero(); vars];
        for p in s.players() {
            c[class_of[p.bit()]] += 1;
        }
        c
    };

    let mut rows = Vec::new();
    for &s in minimal.minimal() {
        let mut coeffs = counts(s);
        coeffs[vars - 1] = BigInt::from(-1);
        rows.push(Inequality {
            coeffs,
            constant: BigInt::zero(),
        });
    }
    for t in maximal_losing_in(&table) {
        let mut coeffs: Vec<BigInt> = counts(t).into_iter().map(|c| -c).collect();
        coeffs[vars - 1] = BigInt::one();
        rows.push(Inequality {
            coeffs,
            constant: BigInt::from(-1),
        });
    }
    for k in 0..vars - 1 {
        let mut coeffs = vec![BigInt::zero(); vars];
        coeffs[k] = BigInt::one();
        rows.push(Inequality {
            coeffs,
            constant: BigInt::zero(),
        });
    }

    let Some(point) = solve(vars, rows) else {
        return Ok(RealizabilityResult::rejected(None));
    };
    let scale = point
        .iter()
        .fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let mut ints: Vec<BigInt> = point
        .iter()
        .map(|x| x.numer() * (&scale / x.denom()))
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |g, v| g.gcd(v));
    if !g.is_zero() {
        for v in ints.iter_mut() {
            *v /= &g;
        }
    }
    let to_uint = |v: &BigInt| {
        debug_assert!(!v.is_negative());
        v.to_biguint().expect("weights and quota are non-negative")
    };
    let quota = to_uint(&ints[vars - 1]);
    let weights: Vec<BigUint> = (0..n).map(|b| to_uint(&ints[class_of[b]])).collect();
    let witness = WeightedForm::new(quota, weights)?;
    assert!(
        same_winning_set(&table, &WinningTable::build(&witness.clone().into(), limits)?),
        "a feasible point always generates the game"
    );
    Ok(RealizabilityResult {
        realizable: true,
        witness: Some(witness),
        certificate: None,
    })
}

/// Brute-force search for integer weights in `0..=weight_bound`.
///
/// Candidates are tried by increasing maximum weight, then increasing total
/// weight, then lexicographically; the quota is the lightest minimal
/// winning coalition's weight. Any result is checked against the full
/// winning set.
pub fn integer_wvg_search(
    game: &SimpleGame,
    weight_bound: u64,
    limits: &Limits,
) -> Result<Option<WeightedForm>> {
    let n = game.n();
    limits.check_enumerable(n)?;
    let space = (weight_bound as u128 + 1).checked_pow(n as u32);
    if space.is_none_or(|s| s > limits.max_coalitions as u128) {
        return Err(Error::TooManyCoalitions {
            cap: limits.max_coalitions,
        });
    }
    let table = WinningTable::build(game, limits)?;
    let minimal = minimal_winning_of(game, limits)?;
    let losing = maximal_losing_in(&table);
    let weigh = |w: &[u64], s: Coalition| s.players().map(|p| w[p.bit()]).sum::<u64>();

    for top in 0..=weight_bound {
        let mut candidates = Vec::new();
        let mut w = vec![0u64; n];
        loop {
            if w.contains(&top) {
                candidates.push(w.clone());
            }
            // Odometer over [0, top]^n, last coordinate fastest.
            let Some(k) = (0..n).rev().find(|&k| w[k] < top) else {
                break;
            };
            w[k] += 1;
            w[k + 1..].iter_mut().for_each(|x| *x = 0);
        }
        candidates.sort_by_key(|w| (w.iter().sum::<u64>(), w.clone()));
        for w in candidates {
            let Some(q) = minimal.minimal().iter().map(|&s| weigh(&w, s)).min() else {
                continue;
            };
            if q == 0 || losing.iter().any(|&t| weigh(&w, t) >= q) {
                continue;
            }
            let witness = WeightedForm::from_u64(q, &w)?;
            if same_winning_set(&table, &WinningTable::build(&witness.clone().into(), limits)?) {
                return Ok(Some(witness));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{MinimalWinningForm, MultiWeightedForm};
    use crate::representations::k_out_of_n;

    fn c(s: &[usize]) -> Coalition {
        Coalition::of(s)
    }

    fn p(i: usize) -> PlayerId {
        PlayerId::new(i).unwrap()
    }

    fn crossed_weights() -> SimpleGame {
        MultiWeightedForm::new(vec![
            WeightedForm::from_u64(10, &[10, 9, 1, 0]).unwrap(),
            WeightedForm::from_u64(10, &[9, 10, 0, 1]).unwrap(),
        ])
        .unwrap()
        .into()
    }

    fn dictator3() -> SimpleGame {
        MinimalWinningForm::new(3, [c(&[1])]).unwrap().into()
    }

    fn majority3() -> SimpleGame {
        MinimalWinningForm::new(3, [c(&[1, 2]), c(&[1, 3]), c(&[2, 3])])
            .unwrap()
            .into()
    }

    #[test]
    fn maximal_losing_examples() {
        let l = Limits::default();
        let g: SimpleGame = WeightedForm::from_u64(3, &[2, 1, 1]).unwrap().into();
        assert_eq!(maximal_losing(&g, &l).unwrap(), vec![c(&[1]), c(&[2, 3])]);
        assert_eq!(maximal_losing(&dictator3(), &l).unwrap(), vec![c(&[2, 3])]);
        let unanimity: SimpleGame = k_out_of_n(3, 3).unwrap().into();
        assert_eq!(
            maximal_losing(&unanimity, &l).unwrap(),
            vec![c(&[1, 2]), c(&[1, 3]), c(&[2, 3])]
        );
    }

    #[test]
    fn crossed_weights_is_not_weighted() {
        let r = is_wvg_realizable(&crossed_weights(), &Limits::default()).unwrap();
        assert!(!r.realizable);
        assert_eq!(r.certificate, Some((p(1), p(2))));
        assert_eq!(integer_wvg_search(&crossed_weights(), 8, &Limits::default()).unwrap(), None);
    }

    #[test]
    fn weighted_sources_are_realized() {
        let l = Limits::default();
        for (q, w) in [(3, vec![2, 1, 1]), (7, vec![4, 3, 3, 2, 1, 1]), (5, vec![5, 4, 1, 0])] {
            let wvg = WeightedForm::from_u64(q, &w).unwrap();
            let m: SimpleGame = minimal_winning_of(&wvg.clone().into(), &l).unwrap().into();
            let r = is_wvg_realizable(&m, &l).unwrap();
            assert!(r.realizable && r.certificate.is_none(), "{wvg}");
            let witness: SimpleGame = r.witness.unwrap().into();
            assert_eq!(
                crate::game::enumerate_winning(&witness, &l).unwrap(),
                crate::game::enumerate_winning(&m, &l).unwrap()
            );
        }
    }

    #[test]
    fn majority_witnesses() {
        let l = Limits::default();
        let r = is_wvg_realizable(&majority3(), &l).unwrap();
        assert_eq!(r.witness, Some(WeightedForm::from_u64(2, &[1, 1, 1]).unwrap()));
        assert_eq!(
            integer_wvg_search(&majority3(), 8, &l).unwrap(),
            Some(WeightedForm::from_u64(2, &[1, 1, 1]).unwrap())
        );
    }

    #[test]
    fn dictator_search() {
        assert_eq!(
            integer_wvg_search(&dictator3(), 8, &Limits::default()).unwrap(),
            Some(WeightedForm::from_u64(1, &[1, 0, 0]).unwrap())
        );
    }

    #[test]
    fn search_budget() {
        let l = Limits {
            max_coalitions: 100,
            ..Limits::default()
        };
        assert!(integer_wvg_search(&majority3(), 8, &l).unwrap_err().is_budget());
    }
}
