use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::bun::{aut_order, hom_dim, hom_dim_bundles, types_between, SplitBundle};
use crate::error::{Error, Result};

/// Memoized counts of maps, subsheaves and flags between split bundles over
/// a fixed F_q. Caches belong to the instance; use one per worker.
#[derive(Debug, Clone)]
pub struct BundleCounter {
    q: u64,
    inj: HashMap<(SplitBundle, SplitBundle), BigInt>,
    sub: HashMap<(SplitBundle, SplitBundle), BigInt>,
    satsub: HashMap<(SplitBundle, SplitBundle), BigInt>,
    flags: HashMap<(SplitBundle, Vec<i64>, bool), BigInt>,
}

impl BundleCounter {
    pub fn new(q: u64) -> Self {
        BundleCounter { q, inj: HashMap::new(), sub: HashMap::new(), satsub: HashMap::new(), flags: HashMap::new() }
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    fn qpow(&self, e: u64) -> BigInt {
        num_traits::pow(BigInt::from(self.q), e as usize)
    }

    /// Number of injective sheaf maps N → M.
    ///
    /// Every map factors through its image, a quotient of N by a saturated
    /// subsheaf. Subtracting the maps with kernel of each rank (counted by
    /// quotient type) from all of Hom leaves the injective ones.
    pub fn inj_count(&mut self, n: &SplitBundle, m: &SplitBundle) -> Result<BigInt> {
        if n.rank() > m.rank() {
            return Err(Error::RankMismatch { expected: m.rank(), got: n.rank() });
        }
        let r = n.rank();
        if r == 0 {
            return Ok(BigInt::one());
        }
        let key = (n.clone(), m.clone());
        if let Some(v) = self.inj.get(&key) {
            return Ok(v.clone());
        }
        let mut total: BigInt = self.qpow(hom_dim_bundles(n, m)) - 1;
        let (nd, md) = (n.degrees(), m.degrees());
        for j in 1..r {
            // image type c: c_i ≤ m_i, and c_{j+1-i} ≥ n_{r+1-i} as a quotient of N
            let upper: Vec<i64> = md[..j].to_vec();
            let lower: Vec<i64> = (0..j).map(|idx| nd[r - j + idx]).collect();
            let (lo, hi): (i64, i64) = (lower.iter().sum(), upper.iter().sum());
            for deg in lo..=hi {
                for image in types_between(deg, &upper, &lower) {
                    let quotients = self.saturated_subbundle_count(&n.dual(), &image.dual())?;
                    if quotients.is_zero() {
                        continue;
                    }
                    total -= quotients * self.inj_count(&image, m)?;
                }
            }
        }
        if total.is_negative() {
            return Err(Error::NonIntegral(format!("negative injection count {total} for {n} -> {m}")));
        }
        self.inj.insert(key, total.clone());
        Ok(total)
    }

    /// Number of subsheaves of M isomorphic to N: inj_count(N, M)/|Aut N|.
    pub fn subsheaf_type_count(&mut self, m: &SplitBundle, n: &SplitBundle) -> Result<BigInt> {
        let key = (m.clone(), n.clone());
        if let Some(v) = self.sub.get(&key) {
            return Ok(v.clone());
        }
        let inj = self.inj_count(n, m)?;
        let aut = aut_order(n, self.q);
        let (quot, rem) = inj.div_rem(&aut);
        if !rem.is_zero() {
            return Err(Error::NonIntegral(format!("{inj} injections {n} -> {m} not divisible by |Aut| = {aut}")));
        }
        self.sub.insert(key, quot.clone());
        Ok(quot)
    }

    /// Number of subbundles (saturated subsheaves) of M isomorphic to N.
    ///
    /// Every subsheaf N ⊂ M has a unique saturation N'' of the same rank, with
    /// n_i ≤ n''_i ≤ m_i, so sub(M, N) = Σ_{N''} satsub(M, N'')·sub(N'', N).
    pub fn saturated_subbundle_count(&mut self, m: &SplitBundle, n: &SplitBundle) -> Result<BigInt> {
        let k = n.rank();
        if k > m.rank() {
            return Ok(BigInt::zero());
        }
        if n.degrees().iter().zip(m.degrees()).any(|(a, b)| a > b) {
            return Ok(BigInt::zero());
        }
        let key = (m.clone(), n.clone());
        if let Some(v) = self.satsub.get(&key) {
            return Ok(v.clone());
        }
        let mut total = self.subsheaf_type_count(m, n)?;
        let upper: Vec<i64> = m.degrees()[..k].to_vec();
        let lower: Vec<i64> = n.degrees().to_vec();
        let top: i64 = upper.iter().sum();
        for deg in n.degree() + 1..=top {
            for bigger in types_between(deg, &upper, &lower) {
                let s = self.saturated_subbundle_count(m, &bigger)?;
                if !s.is_zero() {
                    total -= s * self.subsheaf_type_count(&bigger, n)?;
                }
            }
        }
        if total.is_negative() {
            return Err(Error::NonIntegral(format!("negative subbundle count {total} for {n} in {m}")));
        }
        self.satsub.insert(key, total.clone());
        Ok(total)
    }

    /// Number of rank-1 subsheaves of degree d: (q^{hom(O(d), M)} - 1)/(q - 1).
    pub fn rank1_subsheaf_count(&self, m: &SplitBundle, d: i64) -> BigInt {
        let h: u64 = m.degrees().iter().map(|&a| hom_dim(d, a)).sum();
        (self.qpow(h) - 1) / BigInt::from(self.q - 1)
    }

    /// Number of line subbundles of degree d, from
    /// `subsheaf(d) = Σ_{m≥0} subbundle(d+m)·#{effective divisors of degree m}`.
    pub fn line_subbundle_count(&self, m: &SplitBundle, d: i64) -> BigInt {
        let Some(&top) = m.degrees().first() else { return BigInt::zero() };
        if d > top {
            return BigInt::zero();
        }
        let divisors = |k: i64| (self.qpow(k as u64 + 1) - 1) / BigInt::from(self.q - 1);
        // solve downwards from the top degree
        let mut sat: Vec<BigInt> = Vec::new();
        for deg in (d..=top).rev() {
            let mut v = self.rank1_subsheaf_count(m, deg);
            for (i, s) in sat.iter().enumerate() {
                // sat[i] is the count at degree top - i
                let shift = top - i as i64 - deg;
                v -= s * divisors(shift);
            }
            sat.push(v);
        }
        sat.pop().unwrap_or_default()
    }

    /// Number of chains M_1 ⊂ … ⊂ M_{n-1} ⊂ M with rank M_i = i and
    /// deg M_i = profile[i-1]; subbundles only when `saturated`.
    pub fn flag_profile_count(&mut self, m: &SplitBundle, profile: &[i64], saturated: bool) -> Result<BigInt> {
        let n = m.rank();
        if profile.len() + 1 != n {
            return Err(Error::RankMismatch { expected: n.saturating_sub(1), got: profile.len() });
        }
        if n == 1 {
            return Ok(BigInt::one());
        }
        let sums = m.partial_sums();
        if profile.iter().zip(&sums).any(|(d, a)| d > a) {
            return Ok(BigInt::zero());
        }
        let key = (m.clone(), profile.to_vec(), saturated);
        if let Some(v) = self.flags.get(&key) {
            return Ok(v.clone());
        }
        let k = n - 1;
        let deg = profile[k - 1];
        let upper: Vec<i64> = m.degrees()[..k].to_vec();
        let floor = deg - upper[..k - 1].iter().sum::<i64>();
        let lower = vec![floor; k];
        let mut total = BigInt::zero();
        for sub in types_between(deg, &upper, &lower) {
            let c = if saturated { self.saturated_subbundle_count(m, &sub)? } else { self.subsheaf_type_count(m, &sub)? };
            if !c.is_zero() {
                total += c * self.flag_profile_count(&sub, &profile[..k - 1], saturated)?;
            }
        }
        self.flags.insert(key, total.clone());
        Ok(total)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sb(v: &[i64]) -> SplitBundle {
        SplitBundle::new(v.to_vec())
    }

    #[test]
    fn injection_examples() {
        let mut c = BundleCounter::new(2);
        assert_eq!(c.inj_count(&sb(&[0, 0]), &sb(&[0, 0])).unwrap(), BigInt::from(6));
        assert_eq!(c.inj_count(&sb(&[5]), &sb(&[0, 0])).unwrap(), BigInt::zero());
        assert_eq!(c.inj_count(&sb(&[0]), &sb(&[0, 0])).unwrap(), BigInt::from(3));
        assert!(c.inj_count(&sb(&[0, 0, 0]), &sb(&[0, 0])).is_err());
    }

    #[test]
    fn rank1_examples() {
        let c = BundleCounter::new(3);
        assert_eq!(c.rank1_subsheaf_count(&sb(&[0, 0]), -1), BigInt::from(27 + 9 + 3 + 1));
        assert_eq!(c.rank1_subsheaf_count(&sb(&[0, 0]), 1), BigInt::zero());
        assert_eq!(c.rank1_subsheaf_count(&sb(&[1, 0]), 1), BigInt::one());
    }

    #[test]
    fn line_subbundle_examples() {
        for q in [2u64, 3, 5] {
            let c = BundleCounter::new(q);
            let qi = BigInt::from(q);
            assert_eq!(c.line_subbundle_count(&sb(&[0, 0]), 0), &qi + 1);
            assert_eq!(c.line_subbundle_count(&sb(&[0, 0]), -1), &qi * &qi * &qi - &qi);
            assert_eq!(c.line_subbundle_count(&sb(&[1, 0]), 1), BigInt::one());
        }
    }

    #[test]
    fn subsheaf_type_examples() {
        let mut c = BundleCounter::new(2);
        assert_eq!(c.subsheaf_type_count(&sb(&[0, 0]), &sb(&[0])).unwrap(), BigInt::from(3));
        let m = sb(&[2, 1, -1]);
        assert_eq!(c.subsheaf_type_count(&m, &m).unwrap(), BigInt::one());
        // rank-2 trivial subsheaves of O^3 are the 2-planes of F_2^3
        assert_eq!(c.subsheaf_type_count(&sb(&[0, 0, 0]), &sb(&[0, 0])).unwrap(), BigInt::from(7));
    }

    #[test]
    fn flag_examples() {
        for q in [2u64, 3] {
            let mut c = BundleCounter::new(q);
            let qi = BigInt::from(q);
            let full = (&qi * &qi + &qi + 1) * (&qi + 1);
            assert_eq!(c.flag_profile_count(&sb(&[0, 0, 0]), &[0, 0], true).unwrap(), full);
            assert_eq!(c.flag_profile_count(&sb(&[0, 0]), &[0], true).unwrap(), &qi + 1);
            assert_eq!(c.flag_profile_count(&sb(&[0, 0]), &[1], false).unwrap(), BigInt::zero());
        }
    }

    #[test]
    fn injective_endomorphisms_are_automorphisms() {
        let mut c = BundleCounter::new(2);
        for v in [vec![0, 0], vec![3, -1], vec![1, 0, -1], vec![2, 2, -1], vec![0, 0, 0]] {
            let m = sb(&v);
            assert_eq!(c.inj_count(&m, &m).unwrap(), aut_order(&m, 2), "{m}");
        }
    }
}
