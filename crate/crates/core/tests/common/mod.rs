#![allow(dead_code)]

use std::collections::HashMap;

use geis_core::bun::{enumerate_split, SplitBundle};
use geis_core::curve::UnramifiedCharacter;
use geis_core::ringtools::Scalar;
use num_rational::BigRational;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Weight multiplicities of the GL(n) irreducible with highest weight λ by
/// Freudenthal's recursion, written against the standard coordinates only.
pub struct Freudenthal {
    lambda: Vec<i64>,
    memo: HashMap<Vec<i64>, i64>,
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn sorted_desc(v: &[i64]) -> Vec<i64> {
    let mut s = v.to_vec();
    s.sort_unstable_by(|a, b| b.cmp(a));
    s
}

fn dominated(mu: &[i64], lambda: &[i64]) -> bool {
    let (mut a, mut b) = (0, 0);
    for i in 0..mu.len() {
        a += mu[i];
        b += lambda[i];
        if a > b {
            return false;
        }
    }
    a == b
}

impl Freudenthal {
    pub fn new(lambda: &[i64]) -> Self {
        Freudenthal { lambda: lambda.to_vec(), memo: HashMap::new() }
    }

    pub fn multiplicity(&mut self, mu: &[i64]) -> i64 {
        // the multiplicity is invariant under permutations of the coordinates
        let mu = sorted_desc(mu);
        if !dominated(&mu, &self.lambda) {
            return 0;
        }
        if mu == self.lambda {
            return 1;
        }
        if let Some(&m) = self.memo.get(&mu) {
            return m;
        }
        let n = mu.len();
        let two_rho: Vec<i64> = (0..n).map(|i| n as i64 - 1 - 2 * i as i64).collect();
        let lam = self.lambda.clone();
        let diff: Vec<i64> = lam.iter().zip(&mu).map(|(a, b)| a - b).collect();
        // |λ+ρ|² - |μ+ρ|², doubled to stay integral
        let denom = 2 * (dot(&lam, &lam) - dot(&mu, &mu)) + 2 * dot(&diff, &two_rho);
        let mut sum = 0;
        for i in 0..n {
            for j in i + 1..n {
                let mut k = 1;
                loop {
                    let mut nu = mu.clone();
                    nu[i] += k;
                    nu[j] -= k;
                    if !dominated(&sorted_desc(&nu), &lam) {
                        break;
                    }
                    sum += self.multiplicity(&nu) * (nu[i] - nu[j]);
                    k += 1;
                }
            }
        }
        assert!(denom > 0 && (4 * sum) % denom == 0, "Freudenthal denominator");
        let m = 4 * sum / denom;
        self.memo.insert(mu, m);
        m
    }
}

/// Dominant (decreasing) μ ≤ λ in dominance order.
pub fn dominant_below(lambda: &[i64]) -> Vec<Vec<i64>> {
    fn rec(i: usize, lambda: &[i64], acc: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        let n = lambda.len();
        if i == n {
            if dominated(acc, lambda) {
                out.push(acc.clone());
            }
            return;
        }
        let hi = if i == 0 { lambda[0] } else { acc[i - 1] };
        let lo = lambda[n - 1];
        for v in (lo..=hi).rev() {
            acc.push(v);
            let ps: i64 = acc.iter().sum();
            let pl: i64 = lambda[..=i].iter().sum();
            if ps <= pl {
                rec(i + 1, lambda, acc, out);
            }
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, lambda, &mut Vec::new(), &mut out);
    out
}

/// Dominant GL(n) weights with last coordinate 0 and <λ, 2ρ̌> ≤ bound.
pub fn dominant_weights(n: usize, bound: i64) -> Vec<Vec<i64>> {
    let two_rho: Vec<i64> = (0..n).map(|i| n as i64 - 1 - 2 * i as i64).collect();
    let mut out = Vec::new();
    fn rec(i: usize, n: usize, bound: i64, two_rho: &[i64], acc: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if i == n - 1 {
            acc.push(0);
            if dot(acc, two_rho) <= bound {
                out.push(acc.clone());
            }
            acc.pop();
            return;
        }
        let hi = if i == 0 { bound } else { acc[i - 1] };
        for v in 0..=hi {
            acc.push(v);
            rec(i + 1, n, bound, two_rho, acc, out);
            acc.pop();
        }
    }
    rec(0, n, bound, &two_rho, &mut Vec::new(), &mut out);
    out
}

/// Split bundles of rank n with spread ≤ `spread` and |degree| ≤ `degree`.
pub fn bundle_range(n: usize, spread: i64, degree: i64) -> Vec<SplitBundle> {
    (-degree..=degree).flat_map(|d| enumerate_split(n, d, spread)).collect()
}

fn random_rational(rng: &mut ChaCha8Rng) -> BigRational {
    let num: i64 = rng.gen_range(1..=9);
    let den: i64 = rng.gen_range(1..=7);
    let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
    BigRational::new((sign * num).into(), den.into())
}

/// A character with random nonzero rational values that is regular for GL(n).
pub fn random_regular(rng: &mut ChaCha8Rng, q: u64, n: usize) -> UnramifiedCharacter {
    loop {
        let values: Vec<BigRational> = (0..n).map(|_| random_rational(rng)).collect();
        let distinct = (0..n).all(|i| (i + 1..n).all(|j| values[i] != values[j]));
        if distinct {
            let chi = UnramifiedCharacter::new(values.into_iter().map(|v| Scalar::from_rational(q, v)).collect())
                .expect("nonzero values");
            return chi;
        }
    }
}
