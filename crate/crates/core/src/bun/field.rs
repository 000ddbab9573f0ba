//! Small finite fields F_q with table-driven arithmetic.

use crate::curve::prime_power_decomposition;
use crate::error::{Error, Result};

/// Elements are encoded as integers `0..q`: base-p digits are the
/// coefficients of a polynomial in the generator. `0` and `1` are the
/// additive and multiplicative units.
#[derive(Clone, Debug)]
pub struct FiniteField {
    q: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
}

/// Largest field order supported by the tables.
pub const MAX_FIELD_ORDER: u64 = 1024;

impl FiniteField {
    pub fn new(q: u64) -> Result<Self> {
        let (p, k) = prime_power_decomposition(q).ok_or(Error::NotPrimePower(q))?;
        if q > MAX_FIELD_ORDER {
            return Err(Error::Unsupported(format!("field order {q} above {MAX_FIELD_ORDER}")));
        }
        let (p, k, qs) = (p as usize, k as usize, q as usize);
        let digits = |x: usize| -> Vec<usize> { (0..k).map(|i| (x / p.pow(i as u32)) % p).collect() };
        let encode = |d: &[usize]| -> usize { d.iter().rev().fold(0, |acc, &c| acc * p + c) };
        let modulus = irreducible(p, k);

        let mut add = vec![0u16; qs * qs];
        let mut mul = vec![0u16; qs * qs];
        for x in 0..qs {
            let dx = digits(x);
            for y in 0..qs {
                let dy = digits(y);
                let s: Vec<usize> = dx.iter().zip(&dy).map(|(a, b)| (a + b) % p).collect();
                add[x * qs + y] = encode(&s) as u16;
                // schoolbook product, then reduce by the monic modulus
                let mut prod = vec![0usize; 2 * k];
                for (i, a) in dx.iter().enumerate() {
                    for (j, b) in dy.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + a * b) % p;
                    }
                }
                for deg in (k..2 * k).rev() {
                    let c = prod[deg];
                    if c != 0 {
                        for (i, m) in modulus.iter().enumerate().take(k) {
                            let idx = deg - k + i;
                            prod[idx] = (prod[idx] + p - (c * m) % p) % p;
                        }
                        prod[deg] = 0;
                    }
                }
                mul[x * qs + y] = encode(&prod[..k]) as u16;
            }
        }
        let neg = (0..qs).map(|x| (0..qs).find(|&y| add[x * qs + y] == 0).unwrap() as u16).collect();
        let inv = (0..qs)
            .map(|x| if x == 0 { 0 } else { (1..qs).find(|&y| mul[x * qs + y] == 1).expect("field inverse") as u16 })
            .collect();
        Ok(FiniteField { q: qs, add, mul, neg, inv })
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn add(&self, x: u16, y: u16) -> u16 {
        self.add[x as usize * self.q + y as usize]
    }

    pub fn sub(&self, x: u16, y: u16) -> u16 {
        self.add(x, self.neg[y as usize])
    }

    pub fn mul(&self, x: u16, y: u16) -> u16 {
        self.mul[x as usize * self.q + y as usize]
    }

    /// Multiplicative inverse; `inv(0)` is 0 by convention.
    pub fn inv(&self, x: u16) -> u16 {
        self.inv[x as usize]
    }

    pub fn pow(&self, x: u16, e: u32) -> u16 {
        (0..e).fold(1, |acc, _| self.mul(acc, x))
    }

    /// Rank of a matrix (rows of field elements) by Gaussian elimination.
    pub fn rank(&self, rows: &[Vec<u16>]) -> usize {
        let mut m: Vec<Vec<u16>> = rows.to_vec();
        let cols = m.first().map_or(0, Vec::len);
        let mut rank = 0;
        for c in 0..cols {
            let Some(piv) = (rank..m.len()).find(|&r| m[r][c] != 0) else { continue };
            m.swap(rank, piv);
            let inv = self.inv(m[rank][c]);
            for x in m[rank].iter_mut() {
                *x = self.mul(*x, inv);
            }
            for r in 0..m.len() {
                if r != rank && m[r][c] != 0 {
                    let f = m[r][c];
                    for j in 0..cols {
                        let t = self.mul(f, m[rank][j]);
                        m[r][j] = self.sub(m[r][j], t);
                    }
                }
            }
            rank += 1;
        }
        rank
    }
}

/// A monic irreducible polynomial of degree k over F_p, lowest coefficient
/// first, leading coefficient omitted.
fn irreducible(p: usize, k: usize) -> Vec<usize> {
    if k == 1 {
        return vec![0];
    }
    let total = p.pow(k as u32);
    'candidates: for code in 0..total {
        let coeffs: Vec<usize> = (0..k).map(|i| (code / p.pow(i as u32)) % p).collect();
        if coeffs[0] == 0 {
            continue;
        }
        // irreducible iff no monic factor of degree ≤ k/2
        let mut full = coeffs.clone();
        full.push(1);
        for d in 1..=k / 2 {
            for dc in 0..p.pow(d as u32) {
                let mut div: Vec<usize> = (0..d).map(|i| (dc / p.pow(i as u32)) % p).collect();
                div.push(1);
                if poly_rem(&full, &div, p).iter().all(|&c| c == 0) {
                    continue 'candidates;
                }
            }
        }
        return coeffs;
    }
    unreachable!("irreducible polynomials exist in every degree")
}

fn poly_rem(a: &[usize], b: &[usize], p: usize) -> Vec<usize> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        if lead != 0 {
            for (i, &c) in b.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p * p - lead * c % p) % p;
            }
        }
        r.pop();
    }
    r
}
