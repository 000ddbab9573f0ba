//! Arithmetic of the projective line over F_q: closed points, effective
//! divisors, unramified characters and abelian L-series.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ringtools::{ConeSeries, Scalar};
use crate::rootdata::{BasedRootDatum, Coweight, WeylElement, WeylGroup};

/// True iff `q = p^k` for a prime `p` and `k ≥ 1`.
pub fn is_prime_power(q: u64) -> bool {
    prime_power_decomposition(q).is_some()
}

/// `(p, k)` with `q = p^k`, if `q` is a prime power.
pub fn prime_power_decomposition(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..).take_while(|d| d * d <= q).find(|d| q % d == 0).unwrap_or(q);
    let mut rest = q;
    let mut k = 0;
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

fn mobius(n: u64) -> i64 {
    let mut n = n;
    let mut result = 1;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            n /= d;
            if n % d == 0 {
                return 0;
            }
            result = -result;
        }
        d += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Point counts of P¹ over F_q: `a_d` is the number of closed points of degree d.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveContext {
    q: u64,
    point_counts: Vec<BigInt>,
}

/// Builds the closed-point table up to degree `n` by Möbius inversion of
/// `Σ_{d|m} d·a_d = q^m + 1`.
pub fn point_counts(q: u64, n: usize) -> Result<CurveContext> {
    CurveContext::new(q, n)
}

impl CurveContext {
    pub fn new(q: u64, n: usize) -> Result<Self> {
        if !is_prime_power(q) {
            return Err(Error::NotPrimePower(q));
        }
        let qb = BigInt::from(q);
        let counts = (1..=n as u64)
            .map(|m| {
                let total: BigInt = (1..=m)
                    .filter(|d| m % d == 0)
                    .map(|d| BigInt::from(mobius(m / d)) * (num_traits::pow(qb.clone(), d as usize) + 1))
                    .sum();
                let (quot, rem) = total.div_rem(&BigInt::from(m));
                debug_assert!(rem.is_zero());
                quot
            })
            .collect();
        Ok(CurveContext { q, point_counts: counts })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn genus(&self) -> u32 {
        0
    }

    /// `a_1, …, a_N`
    pub fn point_counts(&self) -> &[BigInt] {
        &self.point_counts
    }

    pub fn max_degree(&self) -> usize {
        self.point_counts.len()
    }

    /// Number of closed points of degree `d` (1-based).
    pub fn closed_points(&self, d: usize) -> &BigInt {
        &self.point_counts[d - 1]
    }
}

/// Number of effective divisors of degree `n`: `(q^{n+1} - 1)/(q - 1)`.
pub fn effective_divisor_count(ctx: &CurveContext, n: u32) -> BigInt {
    let q = BigInt::from(ctx.q);
    (num_traits::pow(q.clone(), n as usize + 1) - 1) / (q - 1)
}

/// Coefficients `0..=n` of `∏_{d≥1} (1 - s^d t^d)^{-a_d}` computed from the
/// closed-point table. Needs `ctx.max_degree() ≥ n`.
pub fn euler_product_coefficients(ctx: &CurveContext, s: &Scalar, n: usize) -> Result<Vec<Scalar>> {
    if ctx.max_degree() < n {
        return Err(Error::Unsupported(format!("point table only reaches degree {}", ctx.max_degree())));
    }
    let q = ctx.q;
    let mut acc = vec![Scalar::zero(q); n + 1];
    acc[0] = Scalar::one(q);
    for d in 1..=n {
        let a = ctx.closed_points(d);
        let x = s.pow(d as i64)?;
        // (1 - x t^d)^{-a} = Σ_k C(a+k-1, k) x^k t^{dk}
        let mut factor = vec![Scalar::zero(q); n + 1];
        let mut binom = BigInt::one();
        let mut xk = Scalar::one(q);
        for k in 0..=(n / d) {
            if k > 0 {
                binom = binom * (a + BigInt::from(k - 1)) / BigInt::from(k);
                xk = &xk * &x;
            }
            factor[d * k] = xk.scale_int(&binom);
        }
        let mut next = vec![Scalar::zero(q); n + 1];
        for (i, ai) in acc.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, fj) in factor.iter().enumerate().take(n + 1 - i).filter(|(_, v)| !v.is_zero()) {
                next[i + j] += &(ai * fj);
            }
        }
        acc = next;
    }
    Ok(acc)
}

/// `Σ_{deg D = n} χ(D)` for the degree character `χ(O(1)) = s`, which on P¹
/// equals `s^n (q^{n+1} - 1)/(q - 1)`.
pub fn sym_power_trace(ctx: &CurveContext, s: &Scalar, n: u32) -> Result<Scalar> {
    Ok(s.pow(i64::from(n))?.scale_int(&effective_divisor_count(ctx, n)))
}

/// The abelian L-series along the ray of a positive coroot `alpha`:
/// coefficient `q^{-n}·sym_power_trace(s, n)` at `n·alpha`.
pub fn l_series(ctx: &CurveContext, datum: &BasedRootDatum, s: &Scalar, alpha: &Coweight, height: u32) -> Result<ConeSeries> {
    if !datum.positive_coroots().contains(alpha) {
        return Err(Error::NotPositiveCoroot(alpha.to_string()));
    }
    if s.is_zero() {
        return Err(Error::ZeroCharacterValue);
    }
    let step = datum.height(alpha).expect("positive coroot has a height") as u32;
    let mut out = ConeSeries::zero(datum, ctx.q, Coweight::zero(datum.rank()), height);
    let mut n = 0u32;
    while n * step <= height {
        let c = &Scalar::q_half_power(ctx.q, -2 * i64::from(n)) * &sym_power_trace(ctx, s, n)?;
        out.add_term(alpha.scale(i64::from(n)), &c)?;
        n += 1;
    }
    Ok(out)
}

/// An unramified character of the torus, given by its values on the
/// coordinate coweights.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnramifiedCharacter {
    values: Vec<Scalar>,
}

impl UnramifiedCharacter {
    pub fn new(values: Vec<Scalar>) -> Result<Self> {
        if values.iter().any(Scalar::is_zero) {
            return Err(Error::ZeroCharacterValue);
        }
        if let Some(first) = values.first() {
            if let Some(bad) = values.iter().find(|v| v.q() != first.q()) {
                return Err(Error::ContextMismatch(first.q(), bad.q()));
            }
        }
        Ok(UnramifiedCharacter { values })
    }

    /// Parses a comma-separated list of scalars, e.g. "3,1/2".
    pub fn parse(q: u64, s: &str) -> Result<Self> {
        let values = s.split(',').map(|p| Scalar::parse(q, p)).collect::<Result<Vec<_>>>()?;
        Self::new(values)
    }

    pub fn rank(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn q(&self) -> u64 {
        self.values.first().map_or(2, Scalar::q)
    }

    /// `χ(λ) = ∏ s_i^{λ_i}`
    pub fn eval(&self, lambda: &Coweight) -> Scalar {
        let mut acc = Scalar::one(self.q());
        for (s, &e) in self.values.iter().zip(lambda.coords()) {
            if e != 0 {
                acc = &acc * &s.pow(e).expect("character values are nonzero");
            }
        }
        acc
    }

    /// `χ^w = χ ∘ w⁻¹`. For GL(n) this permutes the values:
    /// the value at position `w(i)` of `χ^w` is `s_i`.
    pub fn twist(&self, group: &WeylGroup, w: &WeylElement) -> Self {
        let winv = group.inverse(w);
        let n = self.rank();
        let values = (0..n)
            .map(|j| {
                let mut e = Coweight::zero(n);
                e.0[j] = 1;
                self.eval(&winv.apply(&e))
            })
            .collect();
        UnramifiedCharacter { values }
    }

    /// True iff `χ(α) ≠ 1` for every positive coroot `α`.
    pub fn is_regular(&self, datum: &BasedRootDatum) -> bool {
        self.rank() == datum.rank() && datum.positive_coroots().iter().all(|a| !self.eval(a).is_one())
    }

    /// The elementary symmetric polynomial `e_k(s_1, …, s_n)`.
    pub fn elementary_symmetric(&self, k: usize) -> Scalar {
        let q = self.q();
        let mut e = vec![Scalar::zero(q); k + 1];
        e[0] = Scalar::one(q);
        for s in &self.values {
            for j in (1..=k).rev() {
                let add = &e[j - 1] * s;
                e[j] += &add;
            }
        }
        e[k].clone()
    }
}

impl fmt::Display for UnramifiedCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}
