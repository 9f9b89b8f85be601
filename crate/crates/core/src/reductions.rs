//! Game constructions that encode PARTITION and vertex-cover counting.
//!
//! They make good test instances because the answer is known from the
//! source problem: a PARTITION instance has an equal-sum split exactly when
//! its game is non-linear, and the pivot and zero-weight extensions turn
//! `|W|` into a single player's Banzhaf value or Chow parameter.

use std::collections::BTreeSet;

use num_bigint::BigUint;

use crate::coalition::{Coalition, MAX_PLAYERS};
use crate::error::{Error, Result};
use crate::game::{validate, Limits, MinimalWinningForm, MultiWeightedForm, SimpleGame, WeightedForm};

fn checked<G: Clone + Into<SimpleGame>>(game: G) -> Result<G> {
    let report = validate(&game.clone().into());
    match report.violations.first() {
        None => Ok(game),
        Some(v) => Err(Error::InvalidInstance(v.to_string())),
    }
}

/// Positive integers `a_1, ..., a_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionInstance {
    weights: Vec<u64>,
}

impl PartitionInstance {
    pub fn new(weights: Vec<u64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidInstance("a partition instance needs at least one weight".into()));
        }
        if weights.contains(&0) {
            return Err(Error::InvalidInstance("partition weights must be positive".into()));
        }
        Ok(PartitionInstance { weights })
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }
}

/// Two weighted games on `k + 4` players that agree on the first `k`.
///
/// With `Σ a_i = 2t` and `q = 10 + 20t` the components are
/// `[q; 20a_1, ..., 20a_k, 10, 9, 1, 0]` and `[q; 20a_1, ..., 20a_k, 9, 10, 0, 1]`.
/// Players `k + 1` and `k + 2` are incomparable exactly when some subset of
/// the `a_i` sums to `t`.
///
/// ```
/// use simple_games::reductions::{partition_to_mwvg, PartitionInstance};
/// let g = partition_to_mwvg(&PartitionInstance::new(vec![1, 1]).unwrap()).unwrap();
/// assert_eq!(g.to_string(), "[30;20,20,10,9,1,0] ∧ [30;20,20,9,10,0,1]");
/// ```
pub fn partition_to_mwvg(p: &PartitionInstance) -> Result<MultiWeightedForm> {
    let k = p.weights.len();
    if k + 4 > MAX_PLAYERS {
        return Err(Error::Capacity(k + 4));
    }
    let total: BigUint = p.weights.iter().map(|&a| BigUint::from(a)).sum();
    if total.bit(0) {
        return Err(Error::InvalidInstance(format!(
            "partition weights must have an even total, got {total}"
        )));
    }
    let t = total >> 1u32;
    let quota = BigUint::from(10u32) + BigUint::from(20u32) * t;
    let scaled: Vec<BigUint> = p.weights.iter().map(|&a| BigUint::from(a) * 20u32).collect();
    let component = |tail: [u32; 4]| {
        let weights = scaled.iter().cloned().chain(tail.map(BigUint::from));
        WeightedForm::new(quota.clone(), weights)
    };
    checked(MultiWeightedForm::new(vec![
        component([10, 9, 1, 0])?,
        component([9, 10, 0, 1])?,
    ])?)
}

/// `[10; 10, 9, 1, 0] ∧ [10; 9, 10, 0, 1]`, where players 1 and 2 are
/// incomparable.
pub fn crossed_weights_example() -> MultiWeightedForm {
    MultiWeightedForm::new(vec![
        WeightedForm::from_u64(10, &[10, 9, 1, 0]).expect("valid weights"),
        WeightedForm::from_u64(10, &[9, 10, 0, 1]).expect("valid weights"),
    ])
    .expect("components share the player count")
}

/// Simple undirected graph on vertices `1..=vertex_count`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    /// Edges are unordered; `(2, 1)` and `(1, 2)` are the same edge.
    pub fn new<I: IntoIterator<Item = (usize, usize)>>(vertex_count: usize, edges: I) -> Result<Self> {
        if vertex_count == 0 || vertex_count > MAX_PLAYERS {
            return Err(Error::Capacity(vertex_count));
        }
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            for v in [a, b] {
                if v == 0 || v > vertex_count {
                    return Err(Error::InvalidPlayer {
                        player: v,
                        n: vertex_count,
                    });
                }
            }
            if a == b {
                return Err(Error::InvalidInstance(format!("self-loop at vertex {a}")));
            }
            set.insert((a.min(b), a.max(b)));
        }
        Ok(Graph {
            vertex_count,
            edges: set,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    fn edge_masks(&self) -> impl Iterator<Item = Coalition> + '_ {
        self.edges.iter().map(|&(a, b)| Coalition::of(&[a, b]))
    }
}

/// The game whose minimal winning coalitions are the edges.
pub fn graph_to_minimal_form(g: &Graph) -> Result<MinimalWinningForm> {
    if g.edges.is_empty() {
        return Err(Error::InvalidInstance(
            "a graph without edges gives a game where the grand coalition loses".into(),
        ));
    }
    checked(MinimalWinningForm::new(g.vertex_count, g.edge_masks())?)
}

/// Number of vertex sets touching every edge, by enumeration.
pub fn count_vertex_covers(g: &Graph, limits: &Limits) -> Result<BigUint> {
    limits.check_enumerable(g.vertex_count)?;
    let edges: Vec<Coalition> = g.edge_masks().collect();
    let covers = Coalition::grand(g.vertex_count)
        .subsets()
        .filter(|c| edges.iter().all(|e| !e.intersection(*c).is_empty()))
        .count();
    Ok(BigUint::from(covers))
}

/// Adds player `n + 1` to every minimal winning coalition. The new player
/// is critical in `S ∪ {n + 1}` exactly when `S` wins in the original game,
/// so its Banzhaf value is the original `|W|`.
pub fn augment_with_pivot(m: &MinimalWinningForm) -> Result<MinimalWinningForm> {
    let n = m.n() + 1;
    if n > MAX_PLAYERS {
        return Err(Error::Capacity(n));
    }
    let pivot = Coalition::of(&[n]);
    checked(MinimalWinningForm::new(n, m.minimal().iter().map(|s| s.union(pivot)))?)
}

/// Appends a player of weight zero. Each winning coalition of the input
/// gives exactly one winning coalition containing the new player.
pub fn zero_weight_extension(w: &WeightedForm) -> Result<WeightedForm> {
    if w.n() + 1 > MAX_PLAYERS {
        return Err(Error::Capacity(w.n() + 1));
    }
    let weights = w.weights().iter().cloned().chain([BigUint::default()]);
    checked(WeightedForm::new(w.quota().clone(), weights)?)
}
