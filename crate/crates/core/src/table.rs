//! Dense `2^n` winning bitmap shared by every enumeration path.

use num_bigint::BigUint;

use crate::coalition::Coalition;
use crate::error::Result;
use crate::game::{Limits, SimpleGame, WeightedForm};

pub(crate) struct WinningTable {
    n: usize,
    words: Vec<u64>,
}

/// Running coalition weight, updated one player at a time.
enum Running<'a> {
    Fast { quota: u64, weights: &'a [u64], sum: u64 },
    Big { game: &'a WeightedForm, sum: BigUint },
}

impl<'a> Running<'a> {
    fn new(game: &'a WeightedForm) -> Self {
        match game.fast() {
            Some((quota, weights)) => Running::Fast { quota, weights, sum: 0 },
            None => Running::Big {
                game,
                sum: BigUint::default(),
            },
        }
    }

    fn toggle(&mut self, bit: usize, added: bool) {
        match self {
            Running::Fast { weights, sum, .. } => {
                if added {
                    *sum += weights[bit];
                } else {
                    *sum -= weights[bit];
                }
            }
            Running::Big { game, sum } => {
                let w = &game.weights()[bit];
                if added {
                    *sum += w;
                } else {
                    *sum -= w;
                }
            }
        }
    }

    fn wins(&self) -> bool {
        match self {
            Running::Fast { quota, sum, .. } => sum >= quota,
            Running::Big { game, sum } => sum >= game.quota(),
        }
    }
}

impl WinningTable {
    pub(crate) fn build(game: &SimpleGame, limits: &Limits) -> Result<Self> {
        let n = game.n();
        limits.check_enumerable(n)?;
        let size = 1usize << n;
        let mut table = WinningTable {
            n,
            words: vec![0; size.div_ceil(64)],
        };
        match game {
            SimpleGame::Winning(g) => {
                for s in g.winning() {
                    table.set(s.bits() as usize);
                }
            }
            SimpleGame::MinimalWinning(g) => {
                for s in g.minimal() {
                    table.set(s.bits() as usize);
                }
                // Subsets precede supersets in numeric order.
                for mask in 1..size {
                    if table.get(mask) {
                        continue;
                    }
                    let mut rest = mask;
                    while rest != 0 {
                        let low = rest & rest.wrapping_neg();
                        if table.get(mask ^ low) {
                            table.set(mask);
                            break;
                        }
                        rest ^= low;
                    }
                }
            }
            SimpleGame::Weighted(g) => {
                table.fill_gray(std::slice::from_ref(g));
            }
            SimpleGame::MultiWeighted(g) => {
                table.fill_gray(g.components());
            }
        }
        Ok(table)
    }

    /// Visits coalitions in Gray-code order so each step changes one player.
    fn fill_gray(&mut self, components: &[WeightedForm]) {
        let mut running: Vec<Running> = components.iter().map(Running::new).collect();
        let mut mask = 0usize;
        if running.iter().all(Running::wins) {
            self.set(0);
        }
        for step in 1..(1usize << self.n) {
            let bit = step.trailing_zeros() as usize;
            mask ^= 1 << bit;
            let added = mask >> bit & 1 == 1;
            for r in running.iter_mut() {
                r.toggle(bit, added);
            }
            if running.iter().all(Running::wins) {
                self.set(mask);
            }
        }
    }

    fn set(&mut self, mask: usize) {
        self.words[mask >> 6] |= 1 << (mask & 63);
    }

    pub(crate) fn get(&self, mask: usize) -> bool {
        self.words[mask >> 6] >> (mask & 63) & 1 == 1
    }

    pub(crate) fn wins(&self, s: Coalition) -> bool {
        self.get(s.bits() as usize)
    }

    pub(crate) fn n(&self) -> usize {
        self.n
    }

    pub(crate) fn count(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    /// Winning coalitions in ascending bit order.
    pub(crate) fn winning(&self) -> impl Iterator<Item = Coalition> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as u64;
                w &= w - 1;
                Some(Coalition::from_bits(((k as u64) << 6) | bit))
            })
        })
    }
}
