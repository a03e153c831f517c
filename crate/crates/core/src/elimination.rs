//! Fourier–Motzkin elimination over the integers.
//!
//! A system is a list of inequalities `a . x >= b` with integer data. Variables
//! are eliminated one at a time; combined rows carry the set of original rows
//! they were derived from, and Chernikov's rule drops any row whose history
//! exceeds `k + 1` originals after `k` eliminations. That keeps the instances
//! used here (at most a few dozen rows in five or fewer variables) small.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// `coeffs . x >= rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Inequality {
    pub coeffs: Vec<BigInt>,
    pub rhs: BigInt,
}

impl Inequality {
    pub fn new(coeffs: Vec<BigInt>, rhs: BigInt) -> Self {
        Self { coeffs, rhs }
    }

    fn normalized(mut self) -> Self {
        let g = self
            .coeffs
            .iter()
            .chain(std::iter::once(&self.rhs))
            .fold(BigInt::zero(), |g, x| g.gcd(x));
        if !g.is_zero() && g != BigInt::from(1) {
            for c in &mut self.coeffs {
                *c /= &g;
            }
            self.rhs /= &g;
        }
        self
    }
}

#[derive(Clone, Debug)]
struct Row {
    ineq: Inequality,
    history: Vec<u64>,
}

fn history_union(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x | y).collect()
}

fn history_len(h: &[u64]) -> usize {
    h.iter().map(|w| w.count_ones() as usize).sum()
}

/// Decides whether `{x : a_i . x >= b_i for all i}` is non-empty.
pub fn is_feasible(system: &[Inequality], num_vars: usize) -> bool {
    assert!(system.iter().all(|r| r.coeffs.len() == num_vars));
    let words = system.len().div_ceil(64).max(1);
    let mut rows: Vec<Row> = system
        .iter()
        .enumerate()
        .map(|(i, ineq)| {
            let mut history = vec![0u64; words];
            history[i / 64] |= 1 << (i % 64);
            Row { ineq: ineq.clone().normalized(), history }
        })
        .collect();

    for var in 0..num_vars {
        if rows.iter().any(|r| is_contradiction(&r.ineq)) {
            return false;
        }
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        let mut next = Vec::new();
        for row in rows {
            match row.ineq.coeffs[var].sign() {
                num_bigint::Sign::Plus => pos.push(row),
                num_bigint::Sign::Minus => neg.push(row),
                num_bigint::Sign::NoSign => next.push(row),
            }
        }
        let max_history = var + 2;
        let mut seen: HashSet<Inequality> = next.iter().map(|r| r.ineq.clone()).collect();
        for p in &pos {
            for n in &neg {
                let history = history_union(&p.history, &n.history);
                if history_len(&history) > max_history {
                    continue;
                }
                let kp = -&n.ineq.coeffs[var];
                let kn = p.ineq.coeffs[var].clone();
                let coeffs = p
                    .ineq
                    .coeffs
                    .iter()
                    .zip(&n.ineq.coeffs)
                    .map(|(a, b)| a * &kp + b * &kn)
                    .collect();
                let rhs = &p.ineq.rhs * &kp + &n.ineq.rhs * &kn;
                let ineq = Inequality::new(coeffs, rhs).normalized();
                debug_assert!(ineq.coeffs[var].is_zero());
                if seen.insert(ineq.clone()) {
                    next.push(Row { ineq, history });
                }
            }
        }
        rows = next;
    }
    !rows.iter().any(|r| is_contradiction(&r.ineq))
}

fn is_contradiction(ineq: &Inequality) -> bool {
    ineq.coeffs.iter().all(Zero::is_zero) && ineq.rhs.is_positive()
}
