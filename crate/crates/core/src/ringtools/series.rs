use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ringtools::Scalar;
use crate::rootdata::{BasedRootDatum, Coweight};

/// A truncated element of the completed group ring: coefficients supported
/// on `base + Λ^pos`, kept up to `height_bound`.
///
/// The height of `μ` is `<μ - base, ρ̌>`, the sum of the simple-coroot
/// coordinates of `μ - base`.
#[derive(Clone, Debug, PartialEq)]
pub struct ConeSeries {
    datum: BasedRootDatum,
    q: u64,
    base: Coweight,
    height_bound: u32,
    coeffs: BTreeMap<Coweight, Scalar>,
}

/// One serialized coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesTerm {
    pub mu: String,
    pub value: String,
}

/// Where two series first disagree.
#[derive(Clone, Debug, PartialEq)]
pub struct Discrepancy {
    pub mu: Coweight,
    pub height: u32,
    pub left: Scalar,
    pub right: Scalar,
}

/// Outcome of `series_equal`.
#[derive(Clone, Debug, PartialEq)]
pub struct SeriesComparison {
    pub equal: bool,
    pub compared_height: u32,
    pub first_discrepancy: Option<Discrepancy>,
}

impl ConeSeries {
    pub fn zero(datum: &BasedRootDatum, q: u64, base: Coweight, height_bound: u32) -> Self {
        assert_eq!(base.rank(), datum.rank(), "series base has wrong rank");
        ConeSeries { datum: datum.clone(), q, base, height_bound, coeffs: BTreeMap::new() }
    }

    /// The unit series, based at 0.
    pub fn one(datum: &BasedRootDatum, q: u64, height_bound: u32) -> Self {
        let mut s = Self::zero(datum, q, Coweight::zero(datum.rank()), height_bound);
        s.coeffs.insert(Coweight::zero(datum.rank()), Scalar::one(q));
        s
    }

    pub fn datum(&self) -> &BasedRootDatum {
        &self.datum
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn base(&self) -> &Coweight {
        &self.base
    }

    pub fn height_bound(&self) -> u32 {
        self.height_bound
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Height of `mu` above the base, or `None` if `mu` is outside the cone.
    pub fn height_of(&self, mu: &Coweight) -> Option<u32> {
        if mu.rank() != self.base.rank() {
            return None;
        }
        let c = self.datum.integer_coords(&(mu - &self.base))?;
        if c.iter().any(|&x| x < 0) {
            return None;
        }
        Some(c.iter().sum::<i64>() as u32)
    }

    /// Adds `value` to the coefficient at `mu`. Terms above the height bound
    /// are dropped; keys outside the cone are an error.
    pub fn add_term(&mut self, mu: Coweight, value: &Scalar) -> Result<()> {
        let h = self.height_of(&mu).ok_or_else(|| Error::OutsideCone(mu.to_string()))?;
        if h > self.height_bound || value.is_zero() {
            return Ok(());
        }
        match self.coeffs.entry(mu) {
            Entry::Vacant(e) => {
                e.insert(value.clone());
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += value;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
        Ok(())
    }

    pub fn coeff(&self, mu: &Coweight) -> Scalar {
        self.coeffs.get(mu).cloned().unwrap_or_else(|| Scalar::zero(self.q))
    }

    /// Nonzero terms in key order.
    pub fn terms(&self) -> impl Iterator<Item = (&Coweight, &Scalar)> {
        self.coeffs.iter()
    }

    /// Nonzero terms ordered by height, then by key.
    pub fn terms_by_height(&self) -> Vec<(u32, &Coweight, &Scalar)> {
        let mut v: Vec<_> = self.coeffs.iter().map(|(k, c)| (self.height_of(k).unwrap_or(0), k, c)).collect();
        v.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
        v
    }

    /// Largest height carrying a nonzero coefficient.
    pub fn max_support_height(&self) -> Option<u32> {
        self.coeffs.keys().filter_map(|k| self.height_of(k)).max()
    }

    pub fn truncate(&self, height: u32) -> Self {
        let mut out = Self::zero(&self.datum, self.q, self.base.clone(), height.min(self.height_bound));
        for (k, v) in &self.coeffs {
            if self.height_of(k).is_some_and(|h| h <= out.height_bound) {
                out.coeffs.insert(k.clone(), v.clone());
            }
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero(&self.datum, self.q, self.base.clone(), self.height_bound);
        if c.is_zero() {
            return out;
        }
        out.coeffs = self.coeffs.iter().map(|(k, v)| (k.clone(), v * c)).collect();
        out
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.datum != other.datum {
            return Err(Error::DatumMismatch);
        }
        if self.q != other.q {
            return Err(Error::ContextMismatch(self.q, other.q));
        }
        Ok(())
    }

    /// Sum of two series with the same base; the bound is the smaller one.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        if self.base != other.base {
            return Err(Error::OutsideCone(format!("bases {} and {} differ", self.base, other.base)));
        }
        let mut out = self.truncate(self.height_bound.min(other.height_bound));
        for (k, v) in &other.coeffs {
            out.add_term(k.clone(), v)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Scalar::one(self.q)))
    }

    /// Convolution product, truncated to the smaller height bound.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let bound = self.height_bound.min(other.height_bound);
        let base = &self.base + &other.base;
        let mut out = Self::zero(&self.datum, self.q, base, bound);
        let left: Vec<(u32, &Coweight, &Scalar)> = self.terms_by_height();
        let right: Vec<(u32, &Coweight, &Scalar)> = other.terms_by_height();
        let mut acc: BTreeMap<Coweight, Scalar> = BTreeMap::new();
        for (h1, k1, v1) in &left {
            for (h2, k2, v2) in &right {
                if h1 + h2 > bound {
                    break;
                }
                let e = acc.entry(*k1 + *k2).or_insert_with(|| Scalar::zero(self.q));
                *e += &(*v1 * *v2);
            }
        }
        out.coeffs = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        Ok(out)
    }

    /// `self^e` by repeated squaring.
    pub fn pow(&self, mut e: u64) -> Result<Self> {
        let mut acc = ConeSeries::one(&self.datum, self.q, self.height_bound);
        let mut sq = self.clone();
        let mut first = true;
        while e > 0 {
            if e & 1 == 1 {
                acc = if first { sq.clone() } else { acc.mul(&sq)? };
                first = false;
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq)?;
            }
        }
        Ok(acc)
    }

    /// Serialized terms, ordered by height then key.
    pub fn serialize_terms(&self) -> Vec<SeriesTerm> {
        self.terms_by_height()
            .into_iter()
            .map(|(_, k, v)| SeriesTerm { mu: k.to_string(), value: v.to_string() })
            .collect()
    }
}

/// Compares all coefficients of height at most `height` (heights relative to
/// the common base). Reports the first discrepancy by height, then key.
pub fn series_equal(f: &ConeSeries, g: &ConeSeries, height: u32) -> Result<SeriesComparison> {
    f.compatible(g)?;
    for s in [f, g] {
        if height > s.height_bound {
            return Err(Error::HeightExceedsBound { height, bound: s.height_bound });
        }
    }
    if f.base != g.base {
        return Err(Error::OutsideCone(format!("bases {} and {} differ", f.base, g.base)));
    }
    let mut keys: Vec<(u32, Coweight)> = f
        .coeffs
        .keys()
        .chain(g.coeffs.keys())
        .filter_map(|k| f.height_of(k).filter(|&h| h <= height).map(|h| (h, k.clone())))
        .collect();
    keys.sort();
    keys.dedup();
    for (h, k) in keys {
        let (a, b) = (f.coeff(&k), g.coeff(&k));
        if a != b {
            return Ok(SeriesComparison {
                equal: false,
                compared_height: height,
                first_discrepancy: Some(Discrepancy { mu: k, height: h, left: a, right: b }),
            });
        }
    }
    Ok(SeriesComparison { equal: true, compared_height: height, first_discrepancy: None })
}
