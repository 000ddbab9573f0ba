//! Vector bundles on the projective line over F_q: split types, automorphism
//! groups, subsheaf and flag counts, and Hecke modifications at a point.

mod counting;
mod field;
mod hecke;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

pub use counting::BundleCounter;
pub use field::{FiniteField, MAX_FIELD_ORDER};
pub use hecke::{hecke_modifications, hecke_modifications_at, ModificationResult, RationalPoint, subspace_count};

/// O(a_1) ⊕ … ⊕ O(a_n) with a_1 ≥ … ≥ a_n.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SplitBundle(Vec<i64>);

impl SplitBundle {
    /// Sorts the degrees into decreasing order.
    pub fn new(mut degrees: Vec<i64>) -> Self {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        SplitBundle(degrees)
    }

    /// The trivial bundle of rank n.
    pub fn trivial(n: usize) -> Self {
        SplitBundle(vec![0; n])
    }

    pub fn degrees(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn dual(&self) -> Self {
        SplitBundle::new(self.0.iter().map(|a| -a).collect())
    }

    /// M ⊗ O(m)
    pub fn twist(&self, m: i64) -> Self {
        SplitBundle(self.0.iter().map(|a| a + m).collect())
    }

    /// a_1 - a_n
    pub fn spread(&self) -> i64 {
        match (self.0.first(), self.0.last()) {
            (Some(a), Some(b)) => a - b,
            _ => 0,
        }
    }

    /// Partial sums a_1, a_1 + a_2, …, of all n entries.
    pub fn partial_sums(&self) -> Vec<i64> {
        self.0
            .iter()
            .scan(0, |s, a| {
                *s += a;
                Some(*s)
            })
            .collect()
    }

    /// Human-readable form such as `O(1)+O+O(-1)`.
    pub fn pretty(&self) -> String {
        let parts: Vec<String> =
            self.0.iter().map(|&a| if a == 0 { "O".to_string() } else { format!("O({a})") }).collect();
        parts.join("+")
    }
}

impl fmt::Display for SplitBundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for SplitBundle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.split(',')
            .map(|p| p.trim().parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(SplitBundle::new)
            .map_err(|_| Error::Parse { what: "split bundle", input: s.to_string() })
    }
}

/// dim Hom(O(d), O(e)) = max(0, e - d + 1)
pub fn hom_dim(d: i64, e: i64) -> u64 {
    (e - d + 1).max(0) as u64
}

/// dim Hom(N, M)
pub fn hom_dim_bundles(n: &SplitBundle, m: &SplitBundle) -> u64 {
    n.0.iter().map(|&a| m.0.iter().map(|&b| hom_dim(a, b)).sum::<u64>()).sum()
}

fn big_pow(q: u64, e: u64) -> BigInt {
    num_traits::pow(BigInt::from(q), e as usize)
}

/// |GL_m(F_q)|
pub fn gl_order(m: usize, q: u64) -> BigInt {
    (0..m as u64).map(|i| big_pow(q, m as u64) - big_pow(q, i)).product()
}

/// Order of Aut(M): ∏ |GL_{m_b}(F_q)| · q^{Σ_{a_i > a_j} (a_i - a_j + 1)}.
pub fn aut_order(m: &SplitBundle, q: u64) -> BigInt {
    let mut blocks = BigInt::from(1);
    let mut i = 0;
    while i < m.0.len() {
        let j = (i..m.0.len()).find(|&j| m.0[j] != m.0[i]).unwrap_or(m.0.len());
        blocks *= gl_order(j - i, q);
        i = j;
    }
    let exp: i64 = m.0.iter().flat_map(|&a| m.0.iter().filter(move |&&b| a > b).map(move |&b| a - b + 1)).sum();
    blocks * big_pow(q, exp as u64)
}

/// Gaussian binomial [n choose k]_q.
pub fn gaussian_binomial(n: usize, k: usize, q: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let num: BigInt = (0..k as u64).map(|i| big_pow(q, (n as u64) - i) - 1).product();
    let den: BigInt = (1..=k as u64).map(|i| big_pow(q, i) - 1).product();
    num / den
}

/// Decreasing integer vectors b with `lower[i] ≤ b_i ≤ upper[i]` and sum `degree`.
pub fn types_between(degree: i64, upper: &[i64], lower: &[i64]) -> Vec<SplitBundle> {
    fn rec(i: usize, prev: i64, left: i64, upper: &[i64], lower: &[i64], acc: &mut Vec<i64>, out: &mut Vec<SplitBundle>) {
        let k = upper.len();
        if i == k {
            if left == 0 {
                out.push(SplitBundle(acc.clone()));
            }
            return;
        }
        let hi = prev.min(upper[i]);
        for b in (lower[i]..=hi).rev() {
            // remaining entries lie between their lower bounds and b
            let rest_max: i64 = (i + 1..k).map(|j| b.min(upper[j])).sum();
            let rest_min: i64 = lower[i + 1..].iter().sum();
            let rem = left - b;
            if rem > rest_max {
                break;
            }
            if rem < rest_min {
                continue;
            }
            acc.push(b);
            rec(i + 1, b, rem, upper, lower, acc, out);
            acc.pop();
        }
    }
    assert_eq!(upper.len(), lower.len());
    let mut out = Vec::new();
    rec(0, i64::MAX, degree, upper, lower, &mut Vec::new(), &mut out);
    out
}

/// All split bundles of rank n and the given degree with a_1 - a_n ≤ spread.
pub fn enumerate_split(n: usize, degree: i64, spread: i64) -> Vec<SplitBundle> {
    if n == 0 || spread < 0 {
        return Vec::new();
    }
    if n == 1 {
        return vec![SplitBundle(vec![degree])];
    }
    let ni = n as i64;
    let hi = degree.div_euclid(ni);
    let lo = (degree - (ni - 1) * spread).div_euclid(ni) - 1;
    let mut out = Vec::new();
    for min in lo..=hi {
        let upper = vec![min + spread; n - 1];
        let lower = vec![min; n - 1];
        for head in types_between(degree - min, &upper, &lower) {
            let mut v = head.0;
            v.push(min);
            out.push(SplitBundle(v));
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Σ 1/|Aut M| over the split bundles of rank n, given degree and spread.
pub fn mass(n: usize, degree: i64, spread: i64, q: u64) -> BigRational {
    enumerate_split(n, degree, spread)
        .iter()
        .map(|m| BigRational::new(BigInt::from(1), aut_order(m, q)))
        .sum()
}
