use std::collections::BTreeMap;

use crate::ringtools::{ConeSeries, Scalar};
use crate::rootdata::Coweight;

/// A finite Laurent polynomial Σ c_μ t^μ over Q(√q).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    q: u64,
    rank: usize,
    terms: BTreeMap<Coweight, Scalar>,
}

impl LaurentPoly {
    pub fn zero(q: u64, rank: usize) -> Self {
        LaurentPoly { q, rank, terms: BTreeMap::new() }
    }

    pub fn one(q: u64, rank: usize) -> Self {
        Self::monomial(Coweight::zero(rank), Scalar::one(q))
    }

    pub fn monomial(mu: Coweight, c: Scalar) -> Self {
        let mut p = Self::zero(c.q(), mu.rank());
        p.add_term(mu, &c);
        p
    }

    /// Copies the (finitely many) stored terms of a series.
    pub fn from_series(s: &ConeSeries) -> Self {
        let mut p = Self::zero(s.q(), s.base().rank());
        for (k, v) in s.terms() {
            p.add_term(k.clone(), v);
        }
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Coweight, &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mu: &Coweight) -> Scalar {
        self.terms.get(mu).cloned().unwrap_or_else(|| Scalar::zero(self.q))
    }

    pub fn add_term(&mut self, mu: Coweight, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(mu.clone()).or_insert_with(|| Scalar::zero(self.q));
        *e += c;
        if e.is_zero() {
            self.terms.remove(&mu);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v);
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero(self.q, self.rank);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), &(v * c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.q, self.rank);
        for (k1, v1) in &self.terms {
            for (k2, v2) in &other.terms {
                out.add_term(k1 + k2, &(v1 * v2));
            }
        }
        out
    }

    /// Multiplies by the monomial t^shift.
    pub fn shift(&self, shift: &Coweight) -> Self {
        LaurentPoly { q: self.q, rank: self.rank, terms: self.terms.iter().map(|(k, v)| (k + shift, v.clone())).collect() }
    }

    /// Applies a lattice automorphism to the exponents.
    pub fn map_exponents(&self, f: impl Fn(&Coweight) -> Coweight) -> Self {
        let mut out = Self::zero(self.q, self.rank);
        for (k, v) in &self.terms {
            out.add_term(f(k), v);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_shift() {
        let q = 3;
        let a = Coweight(vec![1, -1]);
        let one = LaurentPoly::one(q, 2);
        let p = one.add(&LaurentPoly::monomial(a.clone(), Scalar::one(q)));
        let m = one.add(&LaurentPoly::monomial(a.clone(), -Scalar::one(q)));
        let prod = p.mul(&m);
        assert_eq!(prod, one.add(&LaurentPoly::monomial(a.scale(2), -Scalar::one(q))));
        let swapped = prod.map_exponents(|k| Coweight(vec![k.0[1], k.0[0]]));
        assert_eq!(swapped.coeff(&Coweight(vec![-2, 2])), -Scalar::one(q));
        assert_eq!(prod.shift(&a).coeff(&a), Scalar::one(q));
    }
}
