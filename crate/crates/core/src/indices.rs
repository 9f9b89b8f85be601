//! Power indices, Chow parameters and winning-coalition counting.
//!
//! Every quantity is exact. Raw values are [`BigUint`], indices are
//! [`BigRational`]. Each function picks a backend from the representation:
//!
//! * `(N, W)`: one pass over the listed winning coalitions.
//! * `(N, W^m)`: Holler and Deegan–Packel in one pass over `W^m`;
//!   everything else by enumeration (the general problem is #P-hard), with
//!   inclusion–exclusion over `W^m` as a second route for counting.
//! * Weighted: pseudo-polynomial subset-sum DP when the table fits in
//!   [`Limits::max_dp_cells`], otherwise enumeration.
//! * Multiple weighted: enumeration.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::coalition::{Coalition, PlayerId};
use crate::error::{Error, Result};
use crate::game::{Limits, MinimalWinningForm, SimpleGame, WeightedForm};
use crate::representations::minimal_winning_of;
use crate::table::WinningTable;

/// One exact rational per player.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexVector(pub Vec<BigRational>);

impl IndexVector {
    pub fn get(&self, player: PlayerId) -> &BigRational {
        &self.0[player.bit()]
    }

    pub fn sum(&self) -> BigRational {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Entries as `p/q` strings in lowest terms.
    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(ratio_string).collect()
    }
}

impl fmt::Display for IndexVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_strings().join(" "))
    }
}

/// `p/q` in lowest terms, always with an explicit denominator.
pub fn ratio_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// `(|W_1|, ..., |W_n|; |W|)` where `W_i` is the set of winning coalitions
/// containing `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChowParameters {
    pub per_player: Vec<BigUint>,
    pub total: BigUint,
}

impl fmt::Display for ChowParameters {
    /// `(3,2,2);3`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, v) in self.per_player.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ");{}", self.total)
    }
}

fn factorials(n: usize) -> Vec<BigUint> {
    let mut out = vec![BigUint::one()];
    for k in 1..=n {
        let next = &out[k - 1] * BigUint::from(k);
        out.push(next);
    }
    out
}

fn normalize(values: &[BigUint], denominator: &BigUint) -> IndexVector {
    let d = BigInt::from(denominator.clone());
    IndexVector(
        values
            .iter()
            .map(|v| {
                if d.is_zero() {
                    BigRational::zero()
                } else {
                    BigRational::new(BigInt::from(v.clone()), d.clone())
                }
            })
            .collect(),
    )
}

/// `crit[i][k]`: coalitions of size `k` in which player `i` is critical.
fn critical_by_size<I, F>(n: usize, winning: I, wins: F) -> Vec<Vec<u64>>
where
    I: IntoIterator<Item = Coalition>,
    F: Fn(Coalition) -> bool,
{
    let mut crit = vec![vec![0u64; n + 1]; n];
    for s in winning {
        let k = s.len();
        for p in s.players() {
            if !wins(s.without(p)) {
                crit[p.bit()][k] += 1;
            }
        }
    }
    crit
}

fn critical_counts(game: &SimpleGame, limits: &Limits) -> Result<Vec<Vec<u64>>> {
    let n = game.n();
    Ok(match game {
        SimpleGame::Winning(g) => critical_by_size(n, g.winning().iter().copied(), |s| g.wins(s)),
        _ => {
            let table = WinningTable::build(game, limits)?;
            critical_by_size(n, table.winning(), |s| table.wins(s))
        }
    })
}

/// Subset-sum counts over `weights` minus player `skip`, for sums below
/// `bound`.
fn subset_counts_below(weights: &[u64], skip: Option<usize>, bound: u64) -> Vec<u128> {
    let bound = bound as usize;
    let mut cnt = vec![0u128; bound.max(1)];
    cnt[0] = 1;
    for (j, &w) in weights.iter().enumerate() {
        if Some(j) == skip {
            continue;
        }
        let w = w as usize;
        if w == 0 {
            for c in cnt.iter_mut() {
                *c *= 2;
            }
            continue;
        }
        if w >= bound {
            continue;
        }
        for s in (w..bound).rev() {
            cnt[s] += cnt[s - w];
        }
    }
    cnt.truncate(bound);
    cnt
}

fn weighted_fast<'a>(g: &'a WeightedForm, limits: &Limits, cells: impl Fn(u128, u128) -> u128) -> Option<(u64, &'a [u64])> {
    let (q, w) = g.fast()?;
    (q > 0 && limits.dp_allows(cells(q as u128, w.len() as u128))).then_some((q, w))
}

fn banzhaf_dp(quota: u64, weights: &[u64]) -> Vec<BigUint> {
    (0..weights.len())
        .map(|i| {
            let cnt = subset_counts_below(weights, Some(i), quota);
            let low = quota.saturating_sub(weights[i]) as usize;
            let total: u128 = cnt[low.min(cnt.len())..].iter().sum();
            BigUint::from(total)
        })
        .collect()
}

/// Number of coalitions in which each player is critical.
///
/// ```
/// use simple_games::{indices::banzhaf_values, Limits, SimpleGame, WeightedForm};
/// let g = SimpleGame::from(WeightedForm::from_u64(3, &[2, 1, 1]).unwrap());
/// let eta = banzhaf_values(&g, &Limits::default()).unwrap();
/// assert_eq!(eta, [3u32, 1, 1].map(Into::into));
/// ```
pub fn banzhaf_values(game: &SimpleGame, limits: &Limits) -> Result<Vec<BigUint>> {
    if let SimpleGame::Weighted(g) = game {
        if let Some((q, w)) = weighted_fast(g, limits, |q, n| q * n) {
            return Ok(banzhaf_dp(q, w));
        }
    }
    let crit = critical_counts(game, limits)?;
    Ok(crit
        .iter()
        .map(|row| BigUint::from(row.iter().map(|&c| c as u128).sum::<u128>()))
        .collect())
}

/// `η_i / Σ η_j`.
pub fn banzhaf_indices(game: &SimpleGame, limits: &Limits) -> Result<IndexVector> {
    let values = banzhaf_values(game, limits)?;
    let total: BigUint = values.iter().sum();
    Ok(normalize(&values, &total))
}

fn shapley_dp(quota: u64, weights: &[u64]) -> Vec<BigUint> {
    let n = weights.len();
    let fact = factorials(n);
    let q = quota as usize;
    (0..n)
        .map(|i| {
            // cnt[z][s]: subsets of N \ {i} with z members and weight s < q.
            let mut cnt = vec![vec![0u128; q]; n];
            cnt[0][0] = 1;
            let mut seen = 0;
            for (j, &w) in weights.iter().enumerate() {
                if j == i {
                    continue;
                }
                let w = w as usize;
                for z in (0..=seen).rev() {
                    for s in (0..q.saturating_sub(w)).rev() {
                        let c = cnt[z][s];
                        if c != 0 {
                            cnt[z + 1][s + w] += c;
                        }
                    }
                }
                seen += 1;
            }
            let low = q.saturating_sub(weights[i] as usize);
            let mut kappa = BigUint::zero();
            for (z, row) in cnt.iter().enumerate() {
                let swings: u128 = row[low..].iter().sum();
                if swings != 0 {
                    kappa += BigUint::from(swings) * &fact[z] * &fact[n - 1 - z];
                }
            }
            kappa
        })
        .collect()
}

/// `κ_i = Σ (|X|-1)! (n-|X|)! (v(X) - v(X \ {i}))`.
pub fn shapley_values(game: &SimpleGame, limits: &Limits) -> Result<Vec<BigUint>> {
    if let SimpleGame::Weighted(g) = game {
        if let Some((q, w)) = weighted_fast(g, limits, |q, n| q * n * n) {
            return Ok(shapley_dp(q, w));
        }
    }
    let n = game.n();
    let fact = factorials(n);
    let crit = critical_counts(game, limits)?;
    Ok(crit
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .filter(|&(_, &c)| c > 0)
                .map(|(k, &c)| BigUint::from(c) * &fact[k - 1] * &fact[n - k])
                .sum()
        })
        .collect())
}

/// `κ_i / n!`.
pub fn shapley_indices(game: &SimpleGame, limits: &Limits) -> Result<IndexVector> {
    let values = shapley_values(game, limits)?;
    Ok(normalize(&values, &factorials(game.n())[game.n()]))
}

/// Public good index: share of minimal winning coalition memberships.
pub fn holler_indices(m: &MinimalWinningForm) -> IndexVector {
    let mut counts = vec![BigUint::zero(); m.n()];
    for &s in m.minimal() {
        for p in s.players() {
            counts[p.bit()] += 1u32;
        }
    }
    let total: BigUint = counts.iter().sum();
    normalize(&counts, &total)
}

/// `D_i = (1/|W^m|) Σ_{S ∈ W^m, i ∈ S} 1/|S|`.
pub fn deegan_packel_indices(m: &MinimalWinningForm) -> IndexVector {
    let mut acc = vec![BigRational::zero(); m.n()];
    for &s in m.minimal() {
        let share = BigRational::new(BigInt::one(), BigInt::from(s.len()));
        for p in s.players() {
            acc[p.bit()] += &share;
        }
    }
    let size = BigRational::from_integer(BigInt::from(m.minimal().len()));
    IndexVector(acc.into_iter().map(|a| a / &size).collect())
}

/// Holler index of any representation, through its minimal winning
/// coalitions.
pub fn holler_indices_of(game: &SimpleGame, limits: &Limits) -> Result<IndexVector> {
    Ok(holler_indices(&minimal_winning_of(game, limits)?))
}

/// Deegan–Packel index of any representation.
pub fn deegan_packel_indices_of(game: &SimpleGame, limits: &Limits) -> Result<IndexVector> {
    Ok(deegan_packel_indices(&minimal_winning_of(game, limits)?))
}

fn pow2(e: usize) -> BigUint {
    BigUint::one() << e
}

fn chow_dp(quota: u64, weights: &[u64]) -> ChowParameters {
    let n = weights.len();
    let losing: u128 = subset_counts_below(weights, None, quota).iter().sum();
    let per_player = (0..n)
        .map(|i| {
            let need = quota.saturating_sub(weights[i]);
            let short: u128 = subset_counts_below(weights, Some(i), need)
                .iter()
                .take(need as usize)
                .sum();
            pow2(n - 1) - BigUint::from(short)
        })
        .collect();
    ChowParameters {
        per_player,
        total: pow2(n) - BigUint::from(losing),
    }
}

/// Inclusion–exclusion over the up-sets of the minimal winning coalitions:
/// `|W| = Σ_{∅≠T⊆W^m} (-1)^{|T|+1} 2^{n-|∪T|}`, and the same with `∪T ∪ {i}`
/// for `|W_i|`.
///
/// Visits all `2^|W^m|` subfamilies, so callers bound the list length
/// (see [`Limits::max_ie_terms`]). Panics on 64 or more coalitions.
pub fn chow_by_inclusion_exclusion(m: &MinimalWinningForm) -> ChowParameters {
    // Every term is at most 2^63, so fewer than 2^63 of them fit in i128.
    assert!(m.minimal().len() < 64, "inclusion-exclusion over 64 or more coalitions");
    struct Acc<'a> {
        n: usize,
        list: &'a [Coalition],
        total: i128,
        per_player: Vec<i128>,
    }

    impl Acc<'_> {
        fn visit(&mut self, from: usize, union: Coalition, odd: bool) {
            for k in from..self.list.len() {
                let u = union.union(self.list[k]);
                let odd = !odd;
                let free = self.n - u.len();
                let term: i128 = 1i128 << free;
                let sign = if odd { 1 } else { -1 };
                self.total += sign * term;
                for b in 0..self.n {
                    let t = if u.bits() >> b & 1 == 1 { term } else { term >> 1 };
                    self.per_player[b] += sign * t;
                }
                self.visit(k + 1, u, odd);
            }
        }
    }

    let mut acc = Acc {
        n: m.n(),
        list: m.minimal(),
        total: 0,
        per_player: vec![0; m.n()],
    };
    acc.visit(0, Coalition::EMPTY, false);
    let to_big = |v: i128| BigUint::try_from(v).expect("counts are non-negative");
    ChowParameters {
        per_player: acc.per_player.into_iter().map(to_big).collect(),
        total: to_big(acc.total),
    }
}

fn chow_by_enumeration(game: &SimpleGame, limits: &Limits) -> Result<ChowParameters> {
    let n = game.n();
    let mut per_player = vec![0u64; n];
    let mut total = 0u64;
    let mut tally = |s: Coalition| {
        total += 1;
        for p in s.players() {
            per_player[p.bit()] += 1;
        }
    };
    match game {
        SimpleGame::Winning(g) => g.winning().iter().copied().for_each(&mut tally),
        _ => WinningTable::build(game, limits)?.winning().for_each(&mut tally),
    }
    Ok(ChowParameters {
        per_player: per_player.into_iter().map(BigUint::from).collect(),
        total: BigUint::from(total),
    })
}

/// `(|W_1|, ..., |W_n|; |W|)`.
///
/// Backends, first match wins: the listing itself for `(N, W)`; the weight
/// DP for weighted games; enumeration when `n` is within budget;
/// inclusion–exclusion when `|W^m|` is within budget.
pub fn chow_parameters(game: &SimpleGame, limits: &Limits) -> Result<ChowParameters> {
    let n = game.n();
    if let SimpleGame::Weighted(g) = game {
        if let Some((q, w)) = weighted_fast(g, limits, |q, n| q * n) {
            return Ok(chow_dp(q, w));
        }
    }
    if matches!(game, SimpleGame::Winning(_)) || n <= limits.max_enum_players {
        return chow_by_enumeration(game, limits);
    }
    let too_large = |minimal: usize| Error::CountingTooLarge {
        n,
        n_cap: limits.max_enum_players,
        minimal,
        ie_cap: limits.max_ie_terms,
    };
    let m = match game {
        SimpleGame::MinimalWinning(m) => m.clone(),
        SimpleGame::Weighted(g) => {
            let capped = Limits {
                max_coalitions: limits.max_ie_terms + 1,
                ..*limits
            };
            crate::representations::weighted_minimal(g, &capped)
                .map_err(|_| too_large(limits.max_ie_terms + 1))?
        }
        _ => return Err(too_large(0)),
    };
    if m.minimal().len() > limits.max_ie_terms {
        return Err(too_large(m.minimal().len()));
    }
    Ok(chow_by_inclusion_exclusion(&m))
}

/// `|W|`.
pub fn count_winning(game: &SimpleGame, limits: &Limits) -> Result<BigUint> {
    Ok(chow_parameters(game, limits)?.total)
}

/// Power of collectivity to act, `|W| / 2^n`.
pub fn collectivity_power(game: &SimpleGame, limits: &Limits) -> Result<BigRational> {
    let count = count_winning(game, limits)?;
    Ok(BigRational::new(
        BigInt::from(count),
        BigInt::from(pow2(game.n())),
    ))
}
