use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::bun::{FiniteField, SplitBundle};
use crate::error::{Error, Result};

/// A degree-1 point of P¹: a value of the affine coordinate or ∞.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RationalPoint {
    Affine(u16),
    Infinity,
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RationalPoint::Affine(x) => write!(f, "{x}"),
            RationalPoint::Infinity => write!(f, "inf"),
        }
    }
}

impl FromStr for RationalPoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "infinity" => Ok(RationalPoint::Infinity),
            t => t.parse().map(RationalPoint::Affine).map_err(|_| Error::Parse { what: "point", input: s.to_string() }),
        }
    }
}

/// Split types of the lower modifications M' = ker(M → M|_x / W) over all
/// subspaces W of the fiber of the given dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModificationResult {
    pub entries: BTreeMap<SplitBundle, u64>,
}

impl ModificationResult {
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }
}

/// Lower modifications of colength k at the affine point 0.
pub fn hecke_modifications(m: &SplitBundle, k: usize, q: u64) -> Result<ModificationResult> {
    hecke_modifications_at(m, k, q, RationalPoint::Affine(0))
}

/// Lower modifications of colength k at a rational point: for every
/// (n-k)-dimensional W ⊂ M|_x, the split type of ker(M → M|_x / W).
///
/// Sections of O(a) are polynomials of degree ≤ a in the affine coordinate;
/// their value at ∞ is the coefficient of degree a. The type of M' is read off
/// from h⁰(M'(t)) = h⁰(M(t)) - rank(sections → M|_x / W) for the twists t
/// that can change it.
pub fn hecke_modifications_at(m: &SplitBundle, k: usize, q: u64, point: RationalPoint) -> Result<ModificationResult> {
    let n = m.rank();
    if k == 0 || k > n {
        return Err(Error::Unsupported(format!("modification colength {k} for rank {n}")));
    }
    let field = FiniteField::new(q)?;
    if let RationalPoint::Affine(x) = point {
        if x as usize >= field.order() {
            return Err(Error::Parse { what: "point", input: x.to_string() });
        }
    }
    let a = m.degrees();
    let (amin, amax) = (*a.last().unwrap(), a[0]);
    // the modified degrees lie in [amin - 1, amax]; h⁰ at twists -v for those v
    let twists: Vec<i64> = (-amax - 1..=-amin + 1).collect();
    let evals: Vec<Vec<Vec<u16>>> = twists.iter().map(|&t| evaluation_rows(a, t, &field, point)).collect();

    let mut entries: BTreeMap<SplitBundle, u64> = BTreeMap::new();
    for w in subspaces(n, n - k, &field) {
        let wdim = w.len();
        let h: Vec<i64> = evals
            .iter()
            .map(|rows| {
                let mut stacked = rows.clone();
                stacked.extend(w.iter().cloned());
                let image = field.rank(&stacked) - wdim;
                (rows.len() - image) as i64
            })
            .collect();
        // #{b_j ≥ v} = h⁰(M'(-v)) - h⁰(M'(-v-1))
        let count_ge = |v: i64| -> i64 {
            let idx = |t: i64| twists.iter().position(|&x| x == t);
            let hi = idx(-v).map_or(0, |i| h[i]);
            let lo = idx(-v - 1).map_or(0, |i| h[i]);
            hi - lo
        };
        let mut degrees = Vec::with_capacity(n);
        for v in (amin - 1..=amax).rev() {
            let mult = count_ge(v) - count_ge(v + 1);
            for _ in 0..mult.max(0) {
                degrees.push(v);
            }
        }
        let modified = SplitBundle::new(degrees);
        if modified.rank() != n || modified.degree() != m.degree() - k as i64 {
            return Err(Error::NonIntegral(format!("inconsistent modification type {modified} of {m}")));
        }
        *entries.entry(modified).or_insert(0) += 1;
    }
    Ok(ModificationResult { entries })
}

/// Values at the point of a basis of H⁰(M(t)), one row per section.
fn evaluation_rows(a: &[i64], t: i64, field: &FiniteField, point: RationalPoint) -> Vec<Vec<u16>> {
    let n = a.len();
    let mut rows = Vec::new();
    for (i, &ai) in a.iter().enumerate() {
        let top = ai + t;
        for j in 0..=top.max(-1) {
            let value = match point {
                RationalPoint::Affine(x) => field.pow(x, j as u32),
                RationalPoint::Infinity => u16::from(j == top),
            };
            let mut row = vec![0u16; n];
            row[i] = value;
            rows.push(row);
        }
    }
    rows
}

/// All subspaces of F_q^n of dimension d, as reduced row-echelon bases.
fn subspaces(n: usize, d: usize, field: &FiniteField) -> Vec<Vec<Vec<u16>>> {
    let mut out = Vec::new();
    for pivots in combinations(n, d) {
        // free positions: in row r, columns after the pivot that are not pivots
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| (p + 1..n).filter(|c| !pivots.contains(c)).map(move |c| (r, c)))
            .collect();
        let qn = field.order();
        let total = qn.pow(free.len() as u32);
        for code in 0..total {
            let mut rows = vec![vec![0u16; n]; d];
            for (r, &p) in pivots.iter().enumerate() {
                rows[r][p] = 1;
            }
            let mut c = code;
            for &(r, col) in &free {
                rows[r][col] = (c % qn) as u16;
                c /= qn;
            }
            out.push(rows);
        }
    }
    out
}

fn combinations(n: usize, d: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, d: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if acc.len() == d {
            out.push(acc.clone());
            return;
        }
        for i in start..n {
            acc.push(i);
            rec(i + 1, n, d, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, d, &mut Vec::new(), &mut out);
    out
}

/// Number of d-dimensional subspaces enumerated, for cross-checks.
pub fn subspace_count(n: usize, d: usize, q: u64) -> Result<BigInt> {
    Ok(BigInt::from(subspaces(n, d, &FiniteField::new(q)?).len()))
}
