//! Seeded random instances for tests, benchmarks and the command line.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::coalition::{Coalition, PlayerId};
use crate::game::{MinimalWinningForm, MultiWeightedForm, WeightedForm};

/// Weights uniform in `0..=max_weight` (at least one positive) and a quota
/// uniform in `1..=total`.
pub fn random_weighted<R: Rng + ?Sized>(rng: &mut R, n: usize, max_weight: u64) -> WeightedForm {
    assert!(n >= 1 && max_weight >= 1);
    let mut weights: Vec<u64> = (0..n).map(|_| rng.random_range(0..=max_weight)).collect();
    if weights.iter().all(|&w| w == 0) {
        let k = rng.random_range(0..n);
        weights[k] = rng.random_range(1..=max_weight);
    }
    let total: u64 = weights.iter().sum();
    let quota = rng.random_range(1..=total);
    WeightedForm::from_u64(quota, &weights).expect("n is in range")
}

/// Conjunction of `components` independent random weighted games.
pub fn random_multi_weighted<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    components: usize,
    max_weight: u64,
) -> MultiWeightedForm {
    let parts = (0..components.max(1)).map(|_| random_weighted(rng, n, max_weight)).collect();
    MultiWeightedForm::new(parts).expect("components share n")
}

/// Keeps the inclusion-minimal coalitions.
fn minimal_elements(mut sets: Vec<Coalition>) -> Vec<Coalition> {
    sets.sort_by_key(|s| (s.len(), *s));
    sets.dedup();
    let mut kept: Vec<Coalition> = Vec::new();
    for s in sets {
        if !kept.iter().any(|k| k.is_subset_of(s)) {
            kept.push(s);
        }
    }
    kept
}

fn random_nonempty<R: Rng + ?Sized>(rng: &mut R, within: Coalition) -> Coalition {
    loop {
        let s = Coalition::from_bits(rng.random::<u64>() & within.bits());
        if !s.is_empty() {
            return s;
        }
    }
}

/// Minimal elements of up to `draws` random non-empty coalitions.
pub fn random_minimal<R: Rng + ?Sized>(rng: &mut R, n: usize, draws: usize) -> MinimalWinningForm {
    let grand = Coalition::grand(n);
    let sets = (0..draws.max(1)).map(|_| random_nonempty(rng, grand)).collect();
    MinimalWinningForm::new(n, minimal_elements(sets)).expect("non-empty antichain")
}

/// A game on `n ≥ 4` players with a known incomparable pair.
///
/// Before relabelling, `{1, 3}` and `{2, 4}` are minimal winning and every
/// other minimal winning coalition lies inside `{5, ..., n}`, so `{2, 3}`
/// and `{1, 4}` lose. Players are then shuffled.
pub fn planted_incomparable<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    draws: usize,
) -> (MinimalWinningForm, PlayerId, PlayerId) {
    assert!(n >= 4);
    let mut sets = vec![Coalition::of(&[1, 3]), Coalition::of(&[2, 4])];
    if n > 4 {
        let rest = Coalition::grand(n).difference(Coalition::grand(4));
        sets.extend((0..draws).map(|_| random_nonempty(rng, rest)));
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let relabel = |s: Coalition| -> Coalition {
        s.players().map(|p| PlayerId::new(perm[p.bit()] + 1).unwrap()).collect()
    };
    let sets = minimal_elements(sets.into_iter().map(relabel).collect());
    let i = PlayerId::new(perm[0] + 1).unwrap();
    let j = PlayerId::new(perm[1] + 1).unwrap();
    (
        MinimalWinningForm::new(n, sets).expect("non-empty antichain"),
        i.min(j),
        i.max(j),
    )
}
