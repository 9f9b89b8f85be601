//! Desirability relation, linearity and desirability orderings.
//!
//! Player `i` is at least as desirable as `j` when swapping `j` out for `i`
//! never turns a winning coalition into a losing one. A game is *linear*
//! when every pair of players is comparable. For linear games given by
//! their minimal winning coalitions the equivalence classes and their order
//! are read off the d-profile: `d[k][i]` counts the minimal winning
//! coalitions of size `k` that contain `i`. Two players are equivalent iff
//! their d-profile columns agree, and otherwise the one with the larger
//! count at the first differing size is strictly more desirable.
//!
//! Linearity itself is decided by sorting players by d-profile and checking
//! that each player is at least as desirable as the next one. If the game
//! is linear the sorted order is a desirability order, so every check
//! passes; if every check passes, transitivity of the relation makes all
//! pairs comparable. The cost is `O(n·|W^m|)` for the profile plus one shift
//! test per adjacent pair.

use std::collections::HashSet;
use std::fmt;

use crate::coalition::{Coalition, PlayerId};
use crate::error::Result;
use crate::game::{Limits, MinimalWinningForm, SimpleGame, WeightedForm};
use crate::representations::minimal_winning_of;
use crate::subset_index::SubsetIndex;
use crate::table::WinningTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DesirabilityRelation {
    StrictlyMore,
    Equivalent,
    StrictlyLess,
    Incomparable,
}

impl DesirabilityRelation {
    fn from_dominance(i_over_j: bool, j_over_i: bool) -> Self {
        match (i_over_j, j_over_i) {
            (true, true) => DesirabilityRelation::Equivalent,
            (true, false) => DesirabilityRelation::StrictlyMore,
            (false, true) => DesirabilityRelation::StrictlyLess,
            (false, false) => DesirabilityRelation::Incomparable,
        }
    }

    #[must_use]
    pub fn reverse(self) -> Self {
        match self {
            DesirabilityRelation::StrictlyMore => DesirabilityRelation::StrictlyLess,
            DesirabilityRelation::StrictlyLess => DesirabilityRelation::StrictlyMore,
            other => other,
        }
    }
}

/// Size-stratified membership counts of minimal winning coalitions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DProfile {
    n: usize,
    // Column-major: counts[bit * n + (k - 1)].
    counts: Vec<u64>,
}

impl DProfile {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of minimal winning coalitions of size `k` containing `player`.
    pub fn get(&self, k: usize, player: PlayerId) -> u64 {
        assert!((1..=self.n).contains(&k), "size {k} out of range");
        self.counts[player.bit() * self.n + k - 1]
    }

    /// `d[1][player], ..., d[n][player]`.
    pub fn column(&self, player: PlayerId) -> &[u64] {
        let start = player.bit() * self.n;
        &self.counts[start..start + self.n]
    }

    /// Number of minimal winning coalitions containing `player`.
    pub fn membership(&self, player: PlayerId) -> u64 {
        self.column(player).iter().sum()
    }

    fn at(&self, k: usize, bit: usize) -> u64 {
        self.counts[bit * self.n + k - 1]
    }
}

/// Counts `d[|S|][x]` for every `S ∈ W^m` and `x ∈ S`.
///
/// ```
/// use simple_games::{desirability::d_profile, Coalition, MinimalWinningForm, PlayerId};
/// let m = MinimalWinningForm::new(3, [Coalition::of(&[1, 2]), Coalition::of(&[1, 3])]).unwrap();
/// let d = d_profile(&m);
/// let p = |i| PlayerId::new(i).unwrap();
/// assert_eq!(d.column(p(1)), &[0, 2, 0]);
/// assert_eq!(d.column(p(2)), &[0, 1, 0]);
/// ```
pub fn d_profile(m: &MinimalWinningForm) -> DProfile {
    let n = m.n();
    let mut counts = vec![0u64; n * n];
    for &s in m.minimal() {
        let k = s.len();
        for p in s.players() {
            counts[p.bit() * n + k - 1] += 1;
        }
    }
    DProfile { n, counts }
}

/// How consecutive classes of a [`DesirabilityOrdering`] relate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Boundary {
    /// Each class is strictly more desirable than the next.
    Strict,
    /// Each class is at least as desirable as the next; some neighbouring
    /// classes may in fact be equivalent.
    AtLeast,
}

/// Players grouped into classes, most desirable first. Players within a
/// class are equivalent and listed in ascending order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DesirabilityOrdering {
    classes: Vec<Vec<PlayerId>>,
    boundary: Boundary,
}

impl DesirabilityOrdering {
    pub fn classes(&self) -> &[Vec<PlayerId>] {
        &self.classes
    }

    pub fn boundary(&self) -> Boundary {
        self.boundary
    }

    pub fn is_strict(&self) -> bool {
        self.boundary == Boundary::Strict
    }

    /// Classes as plain 1-based indices.
    pub fn to_indices(&self) -> Vec<Vec<usize>> {
        self.classes
            .iter()
            .map(|c| c.iter().map(|p| p.index()).collect())
            .collect()
    }

    /// Position of the class containing `player`.
    pub fn rank_of(&self, player: PlayerId) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(&player))
    }
}

impl fmt::Display for DesirabilityOrdering {
    /// `1 > 2 ~ 3` for strict orderings and `1 >= 2 ~ 3` otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = match self.boundary {
            Boundary::Strict => " > ",
            Boundary::AtLeast => " >= ",
        };
        for (k, class) in self.classes.iter().enumerate() {
            if k > 0 {
                f.write_str(sep)?;
            }
            for (t, p) in class.iter().enumerate() {
                if t > 0 {
                    f.write_str(" ~ ")?;
                }
                write!(f, "{p}")?;
            }
        }
        Ok(())
    }
}

/// Outcome of [`strict_desirability_ordering`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderingVerdict {
    /// The game is not linear; the two players are incomparable.
    NonLinear(PlayerId, PlayerId),
    Linear(DesirabilityOrdering),
}

impl OrderingVerdict {
    pub fn ordering(&self) -> Option<&DesirabilityOrdering> {
        match self {
            OrderingVerdict::Linear(o) => Some(o),
            OrderingVerdict::NonLinear(..) => None,
        }
    }

    pub fn is_linear(&self) -> bool {
        matches!(self, OrderingVerdict::Linear(_))
    }
}

/// Decides `i ⪰ j` on `(N, W^m)` by shifting minimal winning coalitions.
///
/// It suffices to check, for every `S ∈ W^m` with `j ∈ S` and `i ∉ S`, that
/// `S \ {j} ∪ {i}` wins: any coalition `T ∪ {j}` that wins contains such an
/// `S` or already wins without `j`.
pub struct ShiftTester<'a> {
    game: &'a MinimalWinningForm,
    members: HashSet<Coalition>,
    index: SubsetIndex,
    by_player: Vec<Vec<Coalition>>,
}

impl<'a> ShiftTester<'a> {
    pub fn new(game: &'a MinimalWinningForm) -> Self {
        let mut by_player = vec![Vec::new(); game.n()];
        for &s in game.minimal() {
            for p in s.players() {
                by_player[p.bit()].push(s);
            }
        }
        ShiftTester {
            game,
            members: game.minimal().iter().copied().collect(),
            index: SubsetIndex::new(game.minimal()),
            by_player,
        }
    }

    /// `i ⪰ j`?
    pub fn dominates(&self, i: PlayerId, j: PlayerId) -> bool {
        self.by_player[j.bit()]
            .iter()
            .filter(|s| !s.contains(i))
            .all(|&s| self.shifted_wins(s.without(j).with(i)))
    }

    fn shifted_wins(&self, t: Coalition) -> bool {
        self.members.contains(&t) || self.index.any_subset_of(t)
    }

    pub fn relation(&self, i: PlayerId, j: PlayerId) -> DesirabilityRelation {
        DesirabilityRelation::from_dominance(self.dominates(i, j), self.dominates(j, i))
    }

    /// Relation matrix over all pairs, for diagnostics and tests.
    pub fn all_relations(&self) -> Vec<(PlayerId, PlayerId, DesirabilityRelation)> {
        let n = self.game.n();
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                let (i, j) = (PlayerId::from_bit(a), PlayerId::from_bit(b));
                out.push((i, j, self.relation(i, j)));
            }
        }
        out
    }
}

/// Relation between two players by direct evaluation over all
/// `S ⊆ N \ {i, j}`.
fn compare_exhaustive(game: &SimpleGame, i: PlayerId, j: PlayerId) -> DesirabilityRelation {
    let rest = game.grand().without(i).without(j);
    let mut i_over_j = true;
    let mut j_over_i = true;
    for s in rest.subsets() {
        let with_i = game.wins(s.with(i));
        let with_j = game.wins(s.with(j));
        i_over_j &= with_i || !with_j;
        j_over_i &= with_j || !with_i;
        if !i_over_j && !j_over_i {
            break;
        }
    }
    DesirabilityRelation::from_dominance(i_over_j, j_over_i)
}

/// Relation of `i` to `j`: `StrictlyMore` means `i ≻ j`.
///
/// Minimal winning form uses the shift test; the other representations
/// evaluate the definition over all `2^(n-2)` coalitions.
pub fn compare_players(
    game: &SimpleGame,
    i: PlayerId,
    j: PlayerId,
    limits: &Limits,
) -> Result<DesirabilityRelation> {
    for p in [i, j] {
        game.is_winning(Coalition::singleton(p))?;
    }
    if i == j {
        return Ok(DesirabilityRelation::Equivalent);
    }
    match game {
        SimpleGame::MinimalWinning(m) => Ok(ShiftTester::new(m).relation(i, j)),
        _ => {
            limits.check_enumerable(game.n())?;
            Ok(compare_exhaustive(game, i, j))
        }
    }
}

/// Recursive refinement: sort the class by `d[k][·]` descending, split it
/// into runs of equal count and refine each run on `k + 1`.
fn classify(class: &mut [usize], profile: &DProfile, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == profile.n + 1 || class.len() == 1 {
        out.push(class.to_vec());
        return;
    }
    class.sort_by_key(|&a| std::cmp::Reverse(profile.at(k, a)));
    let mut start = 0;
    while start < class.len() {
        let key = profile.at(k, class[start]);
        let end = start
            + class[start..]
                .iter()
                .take_while(|&&x| profile.at(k, x) == key)
                .count();
        classify(&mut class[start..end], profile, k + 1, out);
        start = end;
    }
}

/// Equivalence classes by d-profile, ordered lexicographically with larger
/// counts first. Meaningful as a desirability ordering only when the game
/// is linear.
pub fn profile_classes(profile: &DProfile) -> Vec<Vec<PlayerId>> {
    let mut players: Vec<usize> = (0..profile.n).collect();
    let mut out = Vec::new();
    classify(&mut players, profile, 1, &mut out);
    out.into_iter()
        .map(|c| c.into_iter().map(PlayerId::from_bit).collect())
        .collect()
}

/// `NO` (with an incomparable pair) for non-linear games, otherwise the
/// strict desirability ordering.
///
/// ```
/// use simple_games::desirability::{strict_desirability_ordering, OrderingVerdict};
/// use simple_games::{Coalition, MinimalWinningForm};
/// let m = MinimalWinningForm::new(3, [Coalition::of(&[1, 2]), Coalition::of(&[1, 3])]).unwrap();
/// let OrderingVerdict::Linear(order) = strict_desirability_ordering(&m) else { panic!() };
/// assert_eq!(order.to_string(), "1 > 2 ~ 3");
/// ```
pub fn strict_desirability_ordering(m: &MinimalWinningForm) -> OrderingVerdict {
    let profile = d_profile(m);
    let classes = profile_classes(&profile);
    let tester = ShiftTester::new(m);
    let flat: Vec<PlayerId> = classes.iter().flatten().copied().collect();
    for pair in flat.windows(2) {
        let (i, j) = (pair[0], pair[1]);
        if !tester.dominates(i, j) {
            return OrderingVerdict::NonLinear(i.min(j), i.max(j));
        }
    }
    OrderingVerdict::Linear(DesirabilityOrdering {
        classes,
        boundary: Boundary::Strict,
    })
}

/// Some incomparable pair, if the game is not linear.
pub fn find_incomparable_pair(
    game: &SimpleGame,
    limits: &Limits,
) -> Result<Option<(PlayerId, PlayerId)>> {
    let m = match game {
        SimpleGame::Weighted(_) => return Ok(None),
        SimpleGame::MultiWeighted(_) => {
            limits.check_enumerable(game.n())?;
            minimal_winning_of(game, limits)?
        }
        _ => minimal_winning_of(game, limits)?,
    };
    Ok(match strict_desirability_ordering(&m) {
        OrderingVerdict::NonLinear(i, j) => {
            debug_assert_eq!(
                ShiftTester::new(&m).relation(i, j),
                DesirabilityRelation::Incomparable,
                "adjacent failure in a profile-sorted order is an incomparable pair"
            );
            Some((i, j))
        }
        OrderingVerdict::Linear(_) => None,
    })
}

/// Is every pair of players comparable?
///
/// Weighted games are always linear. Multiple weighted games go through
/// full enumeration under `limits`.
pub fn is_linear(game: &SimpleGame, limits: &Limits) -> Result<bool> {
    Ok(find_incomparable_pair(game, limits)?.is_none())
}

/// Players by descending weight with equal weights grouped. Heavier never
/// means less desirable, but neighbouring groups may still be equivalent,
/// so the boundaries are only [`Boundary::AtLeast`].
pub fn weight_desirability_ordering(wvg: &WeightedForm) -> DesirabilityOrdering {
    let mut order: Vec<usize> = (0..wvg.n()).collect();
    let w = wvg.weights();
    order.sort_by(|&a, &b| w[b].cmp(&w[a]));
    let classes = order
        .chunk_by(|&a, &b| w[a] == w[b])
        .map(|run| run.iter().map(|&b| PlayerId::from_bit(b)).collect())
        .collect();
    DesirabilityOrdering {
        classes,
        boundary: Boundary::AtLeast,
    }
}

/// No single exchange of players between two winning coalitions makes both
/// losing.
///
/// Only minimal winning coalitions need to be tried: if winning `S ∋ i` and
/// `T ∋ j` both lose after the swap, every minimal winning subset of `S`
/// contains `i`, every one of `T` contains `j`, and swapping inside those
/// subsets loses as well.
pub fn is_swap_robust(game: &SimpleGame, limits: &Limits) -> Result<bool> {
    let table = WinningTable::build(game, limits)?;
    let m = minimal_winning_of(game, limits)?;
    let list = m.minimal();
    for (a, &s) in list.iter().enumerate() {
        for &t in &list[a + 1..] {
            for i in s.difference(t).players() {
                for j in t.difference(s).players() {
                    if !table.wins(s.without(i).with(j)) && !table.wins(t.without(j).with(i)) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Builds the ordering implied by pairwise relations. Used to cross-check
/// the profile-based result; returns `None` if some pair is incomparable.
pub fn ordering_from_pairwise<F>(n: usize, mut relation: F) -> Option<DesirabilityOrdering>
where
    F: FnMut(PlayerId, PlayerId) -> DesirabilityRelation,
{
    let players: Vec<PlayerId> = (0..n).map(PlayerId::from_bit).collect();
    // Number of players each player strictly beats orders the classes.
    let mut beats = vec![0usize; n];
    let mut classes: Vec<Vec<PlayerId>> = Vec::new();
    for (a, &i) in players.iter().enumerate() {
        for &j in &players[a + 1..] {
            match relation(i, j) {
                DesirabilityRelation::Incomparable => return None,
                DesirabilityRelation::StrictlyMore => beats[i.bit()] += 1,
                DesirabilityRelation::StrictlyLess => beats[j.bit()] += 1,
                DesirabilityRelation::Equivalent => {}
            }
        }
    }
    let mut order = players.clone();
    order.sort_by(|a, b| beats[b.bit()].cmp(&beats[a.bit()]).then(a.cmp(b)));
    for p in order {
        match classes.last_mut() {
            Some(last) if beats[last[0].bit()] == beats[p.bit()] => last.push(p),
            _ => classes.push(vec![p]),
        }
    }
    for class in &mut classes {
        class.sort();
    }
    Some(DesirabilityOrdering {
        classes,
        boundary: Boundary::Strict,
    })
}
