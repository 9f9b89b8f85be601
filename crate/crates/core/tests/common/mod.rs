//! Brute-force oracles shared by the integration tests.
//!
//! Everything here works from the raw representation data and the textbook
//! definitions, never from the library's algorithms, so agreement with the
//! library is evidence rather than tautology.

#![allow(dead_code)]

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rand::Rng;

use simple_games::desirability::DesirabilityRelation;
use simple_games::{Coalition, SimpleGame, WeightedForm};

/// Winning flag of every coalition, indexed by bitmask.
pub struct Truth {
    pub n: usize,
    pub win: Vec<bool>,
}

fn weighted_wins(w: &WeightedForm, mask: u64) -> bool {
    let q = w.quota().to_u128().unwrap();
    let sum: u128 = (0..w.n())
        .filter(|b| mask >> b & 1 == 1)
        .map(|b| w.weights()[b].to_u128().unwrap())
        .sum();
    sum >= q
}

impl Truth {
    pub fn of(game: &SimpleGame) -> Truth {
        let n = game.n();
        assert!(n <= 16, "oracle tables are for small games");
        let win = (0..1u64 << n)
            .map(|mask| match game {
                SimpleGame::Winning(g) => g.winning().iter().any(|s| s.bits() == mask),
                SimpleGame::MinimalWinning(g) => g.minimal().iter().any(|s| s.bits() & !mask == 0),
                SimpleGame::Weighted(g) => weighted_wins(g, mask),
                SimpleGame::MultiWeighted(g) => g.components().iter().all(|c| weighted_wins(c, mask)),
            })
            .collect();
        Truth { n, win }
    }

    pub fn wins(&self, mask: u64) -> bool {
        self.win[mask as usize]
    }

    pub fn masks(&self) -> impl Iterator<Item = u64> {
        0..1u64 << self.n
    }

    pub fn winning(&self) -> Vec<Coalition> {
        self.masks().filter(|&m| self.wins(m)).map(Coalition::from_bits).collect()
    }

    pub fn count(&self) -> u64 {
        self.win.iter().filter(|&&w| w).count() as u64
    }

    pub fn minimal(&self) -> Vec<Coalition> {
        self.masks()
            .filter(|&m| self.wins(m) && (0..self.n).all(|b| m >> b & 1 == 0 || !self.wins(m & !(1 << b))))
            .map(Coalition::from_bits)
            .collect()
    }

    pub fn maximal_losing(&self) -> Vec<Coalition> {
        self.masks()
            .filter(|&m| !self.wins(m) && (0..self.n).all(|b| m >> b & 1 == 1 || self.wins(m | 1 << b)))
            .map(Coalition::from_bits)
            .collect()
    }

    /// Swings of player `b` (0-based): coalitions `S ∋ b` winning with `b`
    /// and losing without.
    pub fn swings(&self, b: usize) -> u64 {
        self.masks()
            .filter(|&m| m >> b & 1 == 1 && self.wins(m) && !self.wins(m & !(1 << b)))
            .count() as u64
    }

    pub fn chow(&self, b: usize) -> u64 {
        self.masks().filter(|&m| m >> b & 1 == 1 && self.wins(m)).count() as u64
    }

    /// Pivot counts over all `n!` orderings, by walking permutations.
    pub fn pivots_by_permutation(&self) -> Vec<u64> {
        let n = self.n;
        let mut perm: Vec<usize> = (0..n).collect();
        let mut out = vec![0u64; n];
        let mut visit = |perm: &[usize]| {
            let mut mask = 0u64;
            for &p in perm {
                mask |= 1 << p;
                if self.wins(mask) {
                    out[p] += 1;
                    break;
                }
            }
        };
        // Heap's algorithm.
        let mut c = vec![0usize; n];
        visit(&perm);
        let mut i = 0;
        while i < n {
            if c[i] < i {
                if i % 2 == 0 {
                    perm.swap(0, i);
                } else {
                    perm.swap(c[i], i);
                }
                visit(&perm);
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
        out
    }

    /// Definition of `i ⪰ j` over every coalition avoiding both.
    pub fn relation(&self, i: usize, j: usize) -> DesirabilityRelation {
        let (mut ij, mut ji) = (true, true);
        for m in self.masks() {
            if m >> i & 1 == 1 || m >> j & 1 == 1 {
                continue;
            }
            let (wi, wj) = (self.wins(m | 1 << i), self.wins(m | 1 << j));
            ij &= wi || !wj;
            ji &= wj || !wi;
        }
        match (ij, ji) {
            (true, true) => DesirabilityRelation::Equivalent,
            (true, false) => DesirabilityRelation::StrictlyMore,
            (false, true) => DesirabilityRelation::StrictlyLess,
            (false, false) => DesirabilityRelation::Incomparable,
        }
    }

    pub fn is_linear(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.relation(i, j) != DesirabilityRelation::Incomparable))
    }

    pub fn is_dummy(&self, b: usize) -> bool {
        self.swings(b) == 0
    }

    pub fn is_passer(&self, b: usize) -> bool {
        self.wins(1 << b)
    }

    pub fn is_vetoer(&self, b: usize) -> bool {
        self.masks().all(|m| !self.wins(m) || m >> b & 1 == 1)
    }

    pub fn is_dictator(&self, b: usize) -> bool {
        self.is_passer(b) && self.is_vetoer(b)
    }

    pub fn players_where(&self, f: impl Fn(usize) -> bool) -> Coalition {
        Coalition::from_bits((0..self.n).filter(|&b| f(b)).fold(0, |m, b| m | 1 << b))
    }
}

pub fn ratio(num: u64, den: u64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

pub fn normalized(values: &[u64]) -> Vec<BigRational> {
    let total: u64 = values.iter().sum();
    values
        .iter()
        .map(|&v| if total == 0 { BigRational::zero() } else { ratio(v, total) })
        .collect()
}

pub fn factorial(k: u64) -> u64 {
    (1..=k).product()
}

pub fn biguints(values: &[u64]) -> Vec<BigUint> {
    values.iter().map(|&v| BigUint::from(v)).collect()
}

/// Holler: MWC membership counts, normalized.
pub fn holler(minimal: &[Coalition], n: usize) -> Vec<BigRational> {
    let counts: Vec<u64> = (0..n)
        .map(|b| minimal.iter().filter(|s| s.bits() >> b & 1 == 1).count() as u64)
        .collect();
    normalized(&counts)
}

/// Deegan–Packel: `(1/|W^m|) Σ_{S ∋ i} 1/|S|`.
pub fn deegan_packel(minimal: &[Coalition], n: usize) -> Vec<BigRational> {
    (0..n)
        .map(|b| {
            let sum: BigRational = minimal
                .iter()
                .filter(|s| s.bits() >> b & 1 == 1)
                .map(|s| ratio(1, s.len() as u64))
                .sum();
            sum / ratio(minimal.len() as u64, 1)
        })
        .collect()
}

/// Is there a subset of `a` summing to half the total?
pub fn has_equal_split(a: &[u64]) -> bool {
    let total: u64 = a.iter().sum();
    if total % 2 == 1 {
        return false;
    }
    let mut reach = std::collections::HashSet::from([0u64]);
    for &x in a {
        let next: Vec<u64> = reach.iter().map(|&s| s + x).collect();
        reach.extend(next);
    }
    reach.contains(&(total / 2))
}

/// Every monotone game on `n` players, as the antichain of its minimal
/// winning coalitions (non-empty antichains of non-empty sets).
pub fn all_antichains(n: usize) -> Vec<Vec<Coalition>> {
    fn extend(sets: &[u64], from: usize, chosen: &mut Vec<u64>, out: &mut Vec<Vec<Coalition>>) {
        for k in from..sets.len() {
            let s = sets[k];
            if chosen.iter().all(|&c| c & !s != 0 && s & !c != 0) {
                chosen.push(s);
                out.push(chosen.iter().copied().map(Coalition::from_bits).collect());
                extend(sets, k + 1, chosen, out);
                chosen.pop();
            }
        }
    }
    let sets: Vec<u64> = (1..1u64 << n).collect();
    let mut out = Vec::new();
    extend(&sets, 0, &mut Vec::new(), &mut out);
    out
}

/// Random edge set on `n` vertices, each edge present with probability `p`.
pub fn random_edges<R: Rng>(rng: &mut R, n: usize, p: f64) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            if rng.random_bool(p) {
                edges.push((a, b));
            }
        }
    }
    edges
}
