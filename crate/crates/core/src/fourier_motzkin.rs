//! Exact Fourier–Motzkin elimination for systems `A·x + c ≥ 0`.
//!
//! Rows are integer vectors kept primitive (entries divided by their gcd),
//! so duplicates are caught by hashing. Chernikov's rule drops a derived
//! row once it combines more original rows than one plus the number of
//! variables eliminated so far; such rows are always redundant.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// `coeffs · x + constant ≥ 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) struct Inequality {
    pub coeffs: Vec<BigInt>,
    pub constant: BigInt,
}

impl Inequality {
    fn primitive(mut self) -> Self {
        let g = self
            .coeffs
            .iter()
            .chain(std::iter::once(&self.constant))
            .fold(BigInt::zero(), |g, v| g.gcd(v));
        if !g.is_zero() && g != BigInt::from(1) {
            for c in self.coeffs.iter_mut() {
                *c /= &g;
            }
            self.constant /= &g;
        }
        self
    }
}

#[derive(Clone)]
struct Tracked {
    row: Inequality,
    origins: Vec<u64>,
}

fn origin_count(origins: &[u64]) -> usize {
    origins.iter().map(|w| w.count_ones() as usize).sum()
}

fn merge(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x | y).collect()
}

/// Bounds on one variable in terms of the variables eliminated after it.
struct Stage {
    var: usize,
    rows: Vec<Inequality>,
}

/// Finds a rational point satisfying every row, or `None` if the system is
/// infeasible. Variables are eliminated in index order.
pub(crate) fn solve(num_vars: usize, rows: Vec<Inequality>) -> Option<Vec<BigRational>> {
    let words = rows.len().div_ceil(64).max(1);
    let mut current: Vec<Tracked> = Vec::new();
    let mut seen: HashSet<Inequality> = HashSet::new();
    for (k, row) in rows.into_iter().enumerate() {
        let row = row.primitive();
        if seen.insert(row.clone()) {
            let mut origins = vec![0u64; words];
            origins[k / 64] |= 1 << (k % 64);
            current.push(Tracked { row, origins });
        }
    }

    let mut stages = Vec::with_capacity(num_vars);
    for (eliminated, var) in (0..num_vars).enumerate() {
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for t in current {
            match t.row.coeffs[var].sign() {
                num_bigint::Sign::Plus => pos.push(t),
                num_bigint::Sign::Minus => neg.push(t),
                num_bigint::Sign::NoSign => rest.push(t),
            }
        }
        stages.push(Stage {
            var,
            rows: pos.iter().chain(&neg).map(|t| t.row.clone()).collect(),
        });
        let mut seen: HashMap<Inequality, usize> = rest
            .iter()
            .enumerate()
            .map(|(k, t)| (t.row.clone(), k))
            .collect();
        for p in &pos {
            for q in &neg {
                let origins = merge(&p.origins, &q.origins);
                if origin_count(&origins) > eliminated + 2 {
                    continue;
                }
                let a = &p.row.coeffs[var];
                let b = -&q.row.coeffs[var];
                let coeffs = p
                    .row
                    .coeffs
                    .iter()
                    .zip(&q.row.coeffs)
                    .map(|(x, y)| x * &b + y * a)
                    .collect();
                let constant = &p.row.constant * &b + &q.row.constant * a;
                let row = Inequality { coeffs, constant }.primitive();
                // Keep the smaller origin set on duplicates.
                match seen.get(&row) {
                    Some(&k) => {
                        if origin_count(&origins) < origin_count(&rest[k].origins) {
                            rest[k].origins = origins;
                        }
                    }
                    None => {
                        seen.insert(row.clone(), rest.len());
                        rest.push(Tracked { row, origins });
                    }
                }
            }
        }
        current = rest;
    }

    if current.iter().any(|t| t.row.constant.is_negative()) {
        return None;
    }

    let mut x = vec![BigRational::zero(); num_vars];
    for stage in stages.iter().rev() {
        let mut lower: Option<BigRational> = None;
        let mut upper: Option<BigRational> = None;
        for row in &stage.rows {
            // a·x_var + rest ≥ 0 with later variables already fixed.
            let mut rest = BigRational::from_integer(row.constant.clone());
            for (k, c) in row.coeffs.iter().enumerate() {
                if k != stage.var && !c.is_zero() {
                    rest += &x[k] * BigRational::from_integer(c.clone());
                }
            }
            let a = BigRational::from_integer(row.coeffs[stage.var].clone());
            let bound = -rest / &a;
            if a.is_positive() {
                lower = Some(lower.map_or(bound.clone(), |l| l.max(bound)));
            } else {
                upper = Some(upper.map_or(bound.clone(), |u| u.min(bound)));
            }
        }
        x[stage.var] = match (lower, upper) {
            (Some(l), Some(u)) => {
                debug_assert!(l <= u, "elimination guarantees a non-empty interval");
                l
            }
            (Some(l), None) => l,
            (None, Some(u)) => u.min(BigRational::zero()),
            (None, None) => BigRational::zero(),
        };
    }
    Some(x)
}
