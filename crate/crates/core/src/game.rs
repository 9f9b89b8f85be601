//! The four representations of a simple game, the winning test and
//! validation.
//!
//! Constructors only check structure (player ranges, matching player counts).
//! The game axioms (`v(∅) = 0`, `v(N) = 1`, monotonicity) are checked by
//! [`validate`], and every analysis assumes a game that passed it.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::coalition::{Coalition, PlayerId, MAX_PLAYERS};
use crate::error::{Error, Result};
use crate::table::WinningTable;

/// Desk-scale budgets for the exponential parts of the library.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest `n` for which all `2^n` coalitions may be enumerated.
    pub max_enum_players: usize,
    /// Largest `|W^m|` for inclusion–exclusion counting (`2^|W^m|` terms).
    pub max_ie_terms: usize,
    /// Largest DP table (cells per player) for the pseudo-polynomial
    /// weighted-game paths.
    pub max_dp_cells: u64,
    /// Largest number of coalitions any listing may produce.
    pub max_coalitions: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_enum_players: 24,
            max_ie_terms: 20,
            max_dp_cells: 1 << 24,
            max_coalitions: 1 << 22,
        }
    }
}

impl Limits {
    pub fn check_enumerable(&self, n: usize) -> Result<()> {
        if n > self.max_enum_players {
            Err(Error::EnumerationTooLarge {
                n,
                cap: self.max_enum_players,
            })
        } else {
            Ok(())
        }
    }

    pub(crate) fn dp_allows(&self, cells: u128) -> bool {
        cells <= self.max_dp_cells as u128
    }
}

fn check_player_count(n: usize) -> Result<()> {
    if (1..=MAX_PLAYERS).contains(&n) {
        Ok(())
    } else {
        Err(Error::Capacity(n))
    }
}

fn check_in_range(n: usize, c: Coalition) -> Result<()> {
    match c.max_player() {
        Some(p) if p.index() > n => Err(Error::InvalidPlayer {
            player: p.index(),
            n,
        }),
        _ => Ok(()),
    }
}

fn sorted_unique<I: IntoIterator<Item = Coalition>>(n: usize, coalitions: I) -> Result<Vec<Coalition>> {
    let mut list: Vec<Coalition> = coalitions.into_iter().collect();
    for &c in &list {
        check_in_range(n, c)?;
    }
    list.sort_unstable();
    list.dedup();
    Ok(list)
}

/// `(N, W)`: the complete list of winning coalitions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensiveWinningForm {
    n: usize,
    winning: Vec<Coalition>,
}

impl ExtensiveWinningForm {
    pub fn new<I: IntoIterator<Item = Coalition>>(n: usize, winning: I) -> Result<Self> {
        check_player_count(n)?;
        let winning = sorted_unique(n, winning)?;
        Ok(ExtensiveWinningForm { n, winning })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Winning coalitions in ascending bit order.
    pub fn winning(&self) -> &[Coalition] {
        &self.winning
    }

    pub fn wins(&self, s: Coalition) -> bool {
        self.winning.binary_search(&s).is_ok()
    }
}

/// `(N, W^m)`: the minimal winning coalitions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalWinningForm {
    n: usize,
    minimal: Vec<Coalition>,
}

impl MinimalWinningForm {
    pub fn new<I: IntoIterator<Item = Coalition>>(n: usize, minimal: I) -> Result<Self> {
        check_player_count(n)?;
        let minimal = sorted_unique(n, minimal)?;
        Ok(MinimalWinningForm { n, minimal })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Minimal winning coalitions in ascending bit order.
    pub fn minimal(&self) -> &[Coalition] {
        &self.minimal
    }

    pub fn wins(&self, s: Coalition) -> bool {
        self.minimal.iter().any(|m| m.is_subset_of(s))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct FastWeights {
    quota: u64,
    weights: Vec<u64>,
}

/// `[q; w_1, ..., w_n]`.
///
/// Weights are arbitrary-precision; when the total weight fits in 64 bits a
/// machine-word copy is kept and used by the winning test and the DP paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedForm {
    quota: BigUint,
    weights: Vec<BigUint>,
    fast: Option<FastWeights>,
}

impl WeightedForm {
    pub fn new<Q, W>(quota: Q, weights: impl IntoIterator<Item = W>) -> Result<Self>
    where
        Q: Into<BigUint>,
        W: Into<BigUint>,
    {
        let quota = quota.into();
        let weights: Vec<BigUint> = weights.into_iter().map(Into::into).collect();
        check_player_count(weights.len())?;
        let total: BigUint = weights.iter().sum();
        let fast = match (total.to_u64(), quota.to_u64()) {
            (Some(_), Some(q)) => Some(FastWeights {
                quota: q,
                weights: weights.iter().map(|w| w.to_u64().unwrap()).collect(),
            }),
            _ => None,
        };
        Ok(WeightedForm {
            quota,
            weights,
            fast,
        })
    }

    /// Shorthand for machine-word weights.
    ///
    /// ```
    /// use simple_games::{Coalition, WeightedForm};
    /// let g = WeightedForm::from_u64(3, &[2, 1, 1]).unwrap();
    /// assert!(g.wins(Coalition::of(&[1, 2])));
    /// assert!(!g.wins(Coalition::of(&[2, 3])));
    /// ```
    pub fn from_u64(quota: u64, weights: &[u64]) -> Result<Self> {
        Self::new(quota, weights.iter().copied())
    }

    pub fn n(&self) -> usize {
        self.weights.len()
    }

    pub fn quota(&self) -> &BigUint {
        &self.quota
    }

    pub fn weights(&self) -> &[BigUint] {
        &self.weights
    }

    pub fn weight(&self, player: PlayerId) -> &BigUint {
        &self.weights[player.bit()]
    }

    /// `(quota, weights)` as machine words when the quota and the total
    /// weight both fit in 64 bits.
    pub fn fast(&self) -> Option<(u64, &[u64])> {
        self.fast.as_ref().map(|f| (f.quota, f.weights.as_slice()))
    }

    pub fn total_weight(&self) -> BigUint {
        self.weights.iter().sum()
    }

    pub fn weight_of(&self, s: Coalition) -> BigUint {
        s.players().map(|p| &self.weights[p.bit()]).sum()
    }

    pub fn wins(&self, s: Coalition) -> bool {
        match &self.fast {
            Some(f) => s.players().map(|p| f.weights[p.bit()]).sum::<u64>() >= f.quota,
            None => self.weight_of(s) >= self.quota,
        }
    }
}

impl fmt::Display for WeightedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{};", self.quota)?;
        for (k, w) in self.weights.iter().enumerate() {
            write!(f, "{}{w}", if k == 0 { "" } else { "," })?;
        }
        f.write_str("]")
    }
}

/// `v_1 ∧ ... ∧ v_m`: a coalition wins iff it wins every component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiWeightedForm {
    components: Vec<WeightedForm>,
}

impl MultiWeightedForm {
    pub fn new(components: Vec<WeightedForm>) -> Result<Self> {
        let Some(first) = components.first() else {
            return Err(Error::InvalidParameter(
                "a multiple weighted game needs at least one component".into(),
            ));
        };
        let n = first.n();
        if let Some(bad) = components.iter().find(|c| c.n() != n) {
            return Err(Error::InvalidParameter(format!(
                "component has {} players, expected {n}",
                bad.n()
            )));
        }
        Ok(MultiWeightedForm { components })
    }

    pub fn n(&self) -> usize {
        self.components[0].n()
    }

    pub fn components(&self) -> &[WeightedForm] {
        &self.components
    }

    pub fn wins(&self, s: Coalition) -> bool {
        self.components.iter().all(|c| c.wins(s))
    }
}

impl fmt::Display for MultiWeightedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.components.iter().enumerate() {
            if k > 0 {
                f.write_str(" ∧ ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// A simple game in any of the four supported representations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SimpleGame {
    Winning(ExtensiveWinningForm),
    MinimalWinning(MinimalWinningForm),
    Weighted(WeightedForm),
    MultiWeighted(MultiWeightedForm),
}

impl SimpleGame {
    pub fn n(&self) -> usize {
        match self {
            SimpleGame::Winning(g) => g.n(),
            SimpleGame::MinimalWinning(g) => g.n(),
            SimpleGame::Weighted(g) => g.n(),
            SimpleGame::MultiWeighted(g) => g.n(),
        }
    }

    pub fn grand(&self) -> Coalition {
        Coalition::grand(self.n())
    }

    pub fn players(&self) -> impl Iterator<Item = PlayerId> {
        (0..self.n()).map(PlayerId::from_bit)
    }

    /// The winning test without the player-range check.
    pub fn wins(&self, s: Coalition) -> bool {
        match self {
            SimpleGame::Winning(g) => g.wins(s),
            SimpleGame::MinimalWinning(g) => g.wins(s),
            SimpleGame::Weighted(g) => g.wins(s),
            SimpleGame::MultiWeighted(g) => g.wins(s),
        }
    }

    /// `v(S) = 1`?
    ///
    /// ```
    /// use simple_games::{Coalition, SimpleGame, WeightedForm};
    /// let g = SimpleGame::from(WeightedForm::from_u64(3, &[2, 1, 1]).unwrap());
    /// assert!(g.is_winning(Coalition::of(&[1, 2])).unwrap());
    /// assert!(g.is_winning(Coalition::of(&[4])).is_err());
    /// ```
    pub fn is_winning(&self, s: Coalition) -> Result<bool> {
        check_in_range(self.n(), s)?;
        Ok(self.wins(s))
    }

    /// Short tag used in reports: `winning`, `minimal_winning`, `weighted`
    /// or `multi_weighted`.
    pub fn form_name(&self) -> &'static str {
        match self {
            SimpleGame::Winning(_) => "winning",
            SimpleGame::MinimalWinning(_) => "minimal_winning",
            SimpleGame::Weighted(_) => "weighted",
            SimpleGame::MultiWeighted(_) => "multi_weighted",
        }
    }
}

impl From<ExtensiveWinningForm> for SimpleGame {
    fn from(g: ExtensiveWinningForm) -> Self {
        SimpleGame::Winning(g)
    }
}

impl From<MinimalWinningForm> for SimpleGame {
    fn from(g: MinimalWinningForm) -> Self {
        SimpleGame::MinimalWinning(g)
    }
}

impl From<WeightedForm> for SimpleGame {
    fn from(g: WeightedForm) -> Self {
        SimpleGame::Weighted(g)
    }
}

impl From<MultiWeightedForm> for SimpleGame {
    fn from(g: MultiWeightedForm) -> Self {
        SimpleGame::MultiWeighted(g)
    }
}

/// One broken game axiom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    EmptyCoalitionWins,
    GrandCoalitionLoses,
    /// `coalition` wins but its superset `superset` is not listed.
    NotUpwardClosed {
        coalition: Coalition,
        superset: Coalition,
    },
    NoMinimalCoalitions,
    EmptyMinimalCoalition,
    /// Both are listed as minimal but `subset ⊂ superset`.
    NotAntichain {
        subset: Coalition,
        superset: Coalition,
    },
    /// Quota of component `component` (0-based) is zero.
    ZeroQuota { component: usize },
    /// Total weight of component `component` is below its quota.
    QuotaUnreachable { component: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptyCoalitionWins => f.write_str("the empty coalition must lose"),
            Violation::GrandCoalitionLoses => f.write_str("the grand coalition must win"),
            Violation::NotUpwardClosed {
                coalition,
                superset,
            } => write!(f, "not upward closed: {coalition} wins but {superset} is missing"),
            Violation::NoMinimalCoalitions => {
                f.write_str("at least one minimal winning coalition is required")
            }
            Violation::EmptyMinimalCoalition => {
                f.write_str("the empty coalition cannot be minimal winning")
            }
            Violation::NotAntichain { subset, superset } => {
                write!(f, "not an antichain: {subset} is contained in {superset}")
            }
            Violation::ZeroQuota { component } => {
                write!(f, "component {}: quota must be at least 1", component + 1)
            }
            Violation::QuotaUnreachable { component } => {
                write!(f, "component {}: total weight is below the quota", component + 1)
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

fn validate_weighted(g: &WeightedForm, component: usize, out: &mut Vec<Violation>) {
    if g.quota().is_zero() {
        out.push(Violation::ZeroQuota { component });
    }
    if &g.total_weight() < g.quota() {
        out.push(Violation::QuotaUnreachable { component });
    }
}

/// Lists every violated game axiom. An empty report means the game is valid.
pub fn validate(game: &SimpleGame) -> ValidationReport {
    let mut violations = Vec::new();
    match game {
        SimpleGame::Winning(g) => {
            let grand = Coalition::grand(g.n());
            if g.wins(Coalition::EMPTY) {
                violations.push(Violation::EmptyCoalitionWins);
            }
            if !g.wins(grand) {
                violations.push(Violation::GrandCoalitionLoses);
            }
            // Closure under single-player additions implies upward closure.
            for &s in g.winning() {
                for p in grand.difference(s).players() {
                    let t = s.with(p);
                    if !g.wins(t) {
                        violations.push(Violation::NotUpwardClosed {
                            coalition: s,
                            superset: t,
                        });
                    }
                }
            }
        }
        SimpleGame::MinimalWinning(g) => {
            let list = g.minimal();
            if list.is_empty() {
                violations.push(Violation::NoMinimalCoalitions);
            }
            if list.first() == Some(&Coalition::EMPTY) {
                violations.push(Violation::EmptyMinimalCoalition);
            }
            for (k, &a) in list.iter().enumerate() {
                for &b in &list[k + 1..] {
                    if a.is_subset_of(b) {
                        violations.push(Violation::NotAntichain {
                            subset: a,
                            superset: b,
                        });
                    } else if b.is_subset_of(a) {
                        violations.push(Violation::NotAntichain {
                            subset: b,
                            superset: a,
                        });
                    }
                }
            }
        }
        SimpleGame::Weighted(g) => validate_weighted(g, 0, &mut violations),
        SimpleGame::MultiWeighted(g) => {
            for (k, c) in g.components().iter().enumerate() {
                validate_weighted(c, k, &mut violations);
            }
        }
    }
    ValidationReport { violations }
}

/// Every winning coalition, in ascending bit order.
pub fn enumerate_winning(game: &SimpleGame, limits: &Limits) -> Result<Vec<Coalition>> {
    if let SimpleGame::Winning(g) = game {
        return Ok(g.winning().to_vec());
    }
    let table = WinningTable::build(game, limits)?;
    if table.count() > limits.max_coalitions as u64 {
        return Err(Error::TooManyCoalitions {
            cap: limits.max_coalitions,
        });
    }
    Ok(table.winning().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wvg(q: u64, w: &[u64]) -> SimpleGame {
        WeightedForm::from_u64(q, w).unwrap().into()
    }

    fn crossed_weights() -> SimpleGame {
        MultiWeightedForm::new(vec![
            WeightedForm::from_u64(10, &[10, 9, 1, 0]).unwrap(),
            WeightedForm::from_u64(10, &[9, 10, 0, 1]).unwrap(),
        ])
        .unwrap()
        .into()
    }

    #[test]
    fn winning_tests() {
        assert!(wvg(3, &[2, 1, 1]).is_winning(Coalition::of(&[1, 2])).unwrap());
        assert!(!crossed_weights().is_winning(Coalition::of(&[1, 3])).unwrap());
        let m: SimpleGame = MinimalWinningForm::new(3, [Coalition::of(&[1, 2]), Coalition::of(&[1, 3])])
            .unwrap()
            .into();
        assert!(m.is_winning(Coalition::of(&[1, 2, 3])).unwrap());
    }

    #[test]
    fn out_of_range_player() {
        let err = wvg(3, &[2, 1, 1]).is_winning(Coalition::of(&[4])).unwrap_err();
        assert_eq!(err, Error::InvalidPlayer { player: 4, n: 3 });
        assert!(ExtensiveWinningForm::new(2, [Coalition::of(&[3])]).is_err());
    }

    #[test]
    fn validation_findings() {
        let w: SimpleGame = ExtensiveWinningForm::new(2, [Coalition::of(&[1])]).unwrap().into();
        let report = validate(&w);
        assert!(report.violations.contains(&Violation::GrandCoalitionLoses));
        assert!(report.violations.contains(&Violation::NotUpwardClosed {
            coalition: Coalition::of(&[1]),
            superset: Coalition::of(&[1, 2]),
        }));

        let m: SimpleGame = MinimalWinningForm::new(2, [Coalition::of(&[1]), Coalition::of(&[1, 2])])
            .unwrap()
            .into();
        assert_eq!(
            validate(&m).violations,
            [Violation::NotAntichain {
                subset: Coalition::of(&[1]),
                superset: Coalition::of(&[1, 2]),
            }]
        );

        assert!(validate(&wvg(3, &[2, 1, 1])).is_valid());
        assert_eq!(
            validate(&wvg(0, &[1])).violations,
            [Violation::ZeroQuota { component: 0 }]
        );
        assert_eq!(
            validate(&wvg(5, &[1, 1])).violations,
            [Violation::QuotaUnreachable { component: 0 }]
        );
    }

    #[test]
    fn enumerate_small_games() {
        let limits = Limits::default();
        assert_eq!(
            enumerate_winning(&wvg(3, &[2, 1, 1]), &limits).unwrap(),
            [Coalition::of(&[1, 2]), Coalition::of(&[1, 3]), Coalition::of(&[1, 2, 3])]
        );
        let half: SimpleGame = MinimalWinningForm::new(4, [Coalition::of(&[1, 2])]).unwrap().into();
        assert_eq!(enumerate_winning(&half, &limits).unwrap().len(), 4);
        let dictator: SimpleGame = MinimalWinningForm::new(3, [Coalition::of(&[1])]).unwrap().into();
        let w = enumerate_winning(&dictator, &limits).unwrap();
        assert_eq!(w.len(), 4);
        assert!(w.iter().all(|s| s.contains(PlayerId::new(1).unwrap())));
    }

    #[test]
    fn enumeration_budget() {
        let limits = Limits {
            max_enum_players: 4,
            ..Limits::default()
        };
        let g = wvg(3, &[1; 5]);
        assert_eq!(
            enumerate_winning(&g, &limits).unwrap_err(),
            Error::EnumerationTooLarge { n: 5, cap: 4 }
        );
    }

    #[test]
    fn big_weights_use_slow_path() {
        let big = BigUint::from(u64::MAX);
        let g = WeightedForm::new(big.clone() + 1u32, [big.clone(), big, BigUint::from(1u32)]).unwrap();
        assert!(g.fast().is_none());
        assert!(g.wins(Coalition::of(&[1, 3])));
        assert!(!g.wins(Coalition::of(&[3])));
    }
}
