//! Kostant partition counts, weight multiplicities, tensor products and
//! Levi branching for the dual group.
//!
//! Everything lives in the coweight lattice: the positive coroots play the
//! role of the positive roots of the dual group and ρ (half the sum of the
//! positive coroots) is its Weyl vector.

use std::collections::{BTreeMap, HashMap, VecDeque};

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ringtools::Scalar;
use crate::rootdata::{BasedRootDatum, Coweight, WeylGroup};

/// Largest `<λ, 2ρ̌>` accepted by the partition counters.
pub const KOSTANT_HEIGHT_CAP: i64 = 64;

/// A finite multiset of coweights.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightMultiset {
    entries: BTreeMap<Coweight, u64>,
}

impl WeightMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, mu: &Coweight) -> u64 {
        self.entries.get(mu).copied().unwrap_or(0)
    }

    pub fn insert(&mut self, mu: Coweight, m: u64) {
        if m > 0 {
            *self.entries.entry(mu).or_insert(0) += m;
        }
    }

    pub fn entries(&self) -> &BTreeMap<Coweight, u64> {
        &self.entries
    }

    /// Number of distinct weights.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Total multiplicity (the dimension of the module).
    pub fn mass(&self) -> u64 {
        self.entries.values().sum()
    }
}

/// The graded Kostant count: `coeffs[m]` decompositions with `Σ m_α = m`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QKostantValue {
    pub coeffs: BTreeMap<u32, u128>,
}

impl QKostantValue {
    pub fn total(&self) -> u128 {
        self.coeffs.values().sum()
    }

    /// `Σ_m coeffs[m]·x^{-m}` as an exact rational.
    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let inv = x.recip();
        self.coeffs.iter().fold(BigRational::zero(), |acc, (&m, &c)| {
            acc + BigRational::from_integer(BigInt::from(c)) * num_traits::pow(inv.clone(), m as usize)
        })
    }

    /// `Σ_m coeffs[m]·q^{-m}` in the scalar field of `q`.
    pub fn funct_value(&self, q: u64) -> Scalar {
        Scalar::from_rational(q, self.eval_rational(&BigRational::from_integer(BigInt::from(q))))
    }

    /// Display as a Laurent polynomial in q.
    pub fn to_poly_string(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(&m, &c)| match (m, c) {
                (0, c) => c.to_string(),
                (m, 1) => format!("q^-{m}"),
                (m, c) => format!("{c}*q^-{m}"),
            })
            .collect();
        parts.join(" + ")
    }
}

/// Memoized partition counter for one datum. Work happens in simple-coroot
/// coordinates; the cache is owned by the instance.
#[derive(Debug)]
pub struct KostantCounter {
    datum: BasedRootDatum,
    positive: Vec<Vec<i64>>,
    two_rho_check: Vec<i64>,
    cache: HashMap<(Vec<i64>, usize), Vec<u128>>,
}

impl KostantCounter {
    pub fn new(datum: &BasedRootDatum) -> Self {
        let positive = datum
            .positive_coroots()
            .iter()
            .map(|c| datum.integer_coords(c).expect("positive coroots have integer coordinates"))
            .collect();
        KostantCounter { datum: datum.clone(), positive, two_rho_check: datum.two_rho_check(), cache: HashMap::new() }
    }

    /// Graded counts indexed by total multiplicity; empty when `λ ∉ Λ^pos`.
    fn graded(&mut self, lambda: &Coweight) -> Result<Vec<u128>> {
        let h = lambda.pair(&self.two_rho_check);
        if h > KOSTANT_HEIGHT_CAP {
            return Err(Error::HeightCap { height: h, cap: KOSTANT_HEIGHT_CAP });
        }
        match self.datum.integer_coords(lambda) {
            Some(c) if c.iter().all(|&x| x >= 0) => Ok(self.count(c, self.positive.len())),
            _ => Ok(Vec::new()),
        }
    }

    fn count(&mut self, c: Vec<i64>, k: usize) -> Vec<u128> {
        if k == 0 {
            return if c.iter().all(|&x| x == 0) { vec![1] } else { Vec::new() };
        }
        if let Some(v) = self.cache.get(&(c.clone(), k)) {
            return v.clone();
        }
        let beta = self.positive[k - 1].clone();
        let mut out: Vec<u128> = Vec::new();
        let mut rest = c.clone();
        let mut m = 0usize;
        while rest.iter().all(|&x| x >= 0) {
            let sub = self.count(rest.clone(), k - 1);
            if out.len() < sub.len() + m {
                out.resize(sub.len() + m, 0);
            }
            for (j, v) in sub.iter().enumerate() {
                out[j + m] += v;
            }
            for (r, b) in rest.iter_mut().zip(&beta) {
                *r -= b;
            }
            m += 1;
        }
        while out.last() == Some(&0) {
            out.pop();
        }
        self.cache.insert((c, k), out.clone());
        out
    }

    pub fn partition_count(&mut self, lambda: &Coweight) -> Result<u128> {
        Ok(self.graded(lambda)?.iter().sum())
    }

    pub fn q_kostant(&mut self, lambda: &Coweight) -> Result<QKostantValue> {
        let g = self.graded(lambda)?;
        let coeffs = g.into_iter().enumerate().filter(|(_, c)| *c > 0).map(|(m, c)| (m as u32, c)).collect();
        Ok(QKostantValue { coeffs })
    }
}

/// Number of ways to write `λ` as a sum of positive coroots.
pub fn kostant_partition_count(d: &BasedRootDatum, lambda: &Coweight) -> Result<u128> {
    d.validate(lambda)?;
    KostantCounter::new(d).partition_count(lambda)
}

/// The q-analog, graded by the total number of coroots used.
pub fn q_kostant(d: &BasedRootDatum, lambda: &Coweight) -> Result<QKostantValue> {
    d.validate(lambda)?;
    KostantCounter::new(d).q_kostant(lambda)
}

/// Weight multiplicities via Kostant's formula, with per-instance caches.
#[derive(Debug)]
pub struct RepEngine {
    datum: BasedRootDatum,
    weyl: WeylGroup,
    two_rho: Coweight,
    kostant: KostantCounter,
    dominant_cache: HashMap<(Coweight, Coweight), u64>,
}

impl RepEngine {
    pub fn new(datum: &BasedRootDatum) -> Result<Self> {
        Ok(RepEngine {
            datum: datum.clone(),
            weyl: datum.weyl_group()?,
            two_rho: datum.two_rho(),
            kostant: KostantCounter::new(datum),
            dominant_cache: HashMap::new(),
        })
    }

    pub fn datum(&self) -> &BasedRootDatum {
        &self.datum
    }

    fn require_dominant(&self, lambda: &Coweight) -> Result<()> {
        self.datum.validate(lambda)?;
        if !self.datum.is_dominant(lambda) {
            return Err(Error::NotDominant(lambda.to_string()));
        }
        Ok(())
    }

    /// dim V^λ(μ)
    pub fn weight_multiplicity(&mut self, lambda: &Coweight, mu: &Coweight) -> Result<u64> {
        self.require_dominant(lambda)?;
        self.datum.validate(mu)?;
        let (mu_dom, _) = self.datum.dominant_representative(mu);
        if !self.datum.dominance_leq(&mu_dom, lambda) {
            return Ok(0);
        }
        let key = (lambda.clone(), mu_dom.clone());
        if let Some(&m) = self.dominant_cache.get(&key) {
            return Ok(m);
        }
        // w(λ+ρ) - (μ+ρ) = w(λ) - μ + (w(2ρ) - 2ρ)/2
        let mut total: i128 = 0;
        for w in self.weyl.elements() {
            let shift = &w.apply(&self.two_rho) - &self.two_rho;
            let half = Coweight(shift.0.iter().map(|x| x / 2).collect());
            let arg = &(&w.apply(lambda) - &mu_dom) + &half;
            let p = self.kostant.partition_count(&arg)? as i128;
            total += i128::from(w.sign()) * p;
        }
        if total < 0 {
            return Err(Error::NonIntegral(format!("negative multiplicity {total} for λ={lambda}, μ={mu}")));
        }
        let m = total as u64;
        self.dominant_cache.insert(key, m);
        Ok(m)
    }

    /// All weights of V^λ with multiplicities.
    pub fn character_of(&mut self, lambda: &Coweight) -> Result<WeightMultiset> {
        self.require_dominant(lambda)?;
        let mut out = WeightMultiset::new();
        let mut seen = std::collections::HashSet::new();
        let mut queue = VecDeque::from([lambda.clone()]);
        seen.insert(lambda.clone());
        while let Some(mu) = queue.pop_front() {
            let m = self.weight_multiplicity(lambda, &mu)?;
            if m == 0 {
                continue;
            }
            out.insert(mu.clone(), m);
            for a in self.datum.positive_coroots().to_vec() {
                let next = &mu - &a;
                if !seen.contains(&next) {
                    let (dom, _) = self.datum.dominant_representative(&next);
                    seen.insert(next.clone());
                    if self.datum.dominance_leq(&dom, lambda) {
                        queue.push_back(next);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Decomposes a virtual character into irreducibles by peeling highest
    /// weights: largest `<ν, 2ρ̌>` first, ties broken lexicographically.
    pub fn decompose(&mut self, character: &BTreeMap<Coweight, i64>) -> Result<BTreeMap<Coweight, u64>> {
        let mut rest: BTreeMap<Coweight, i64> = character.iter().filter(|(_, &m)| m != 0).map(|(k, &m)| (k.clone(), m)).collect();
        let two_rho_check = self.datum.two_rho_check();
        let mut out = BTreeMap::new();
        while let Some((top, &m)) = rest.iter().max_by(|a, b| (a.0.pair(&two_rho_check), a.0).cmp(&(b.0.pair(&two_rho_check), b.0))) {
            let top = top.clone();
            if m < 0 || !self.datum.is_dominant(&top) {
                return Err(Error::NonIntegral(format!("character is not a sum of irreducibles at {top}")));
            }
            for (k, v) in self.character_of(&top)?.entries() {
                let e = rest.entry(k.clone()).or_insert(0);
                *e -= m * (*v as i64);
                if *e == 0 {
                    rest.remove(k);
                }
            }
            out.insert(top, m as u64);
        }
        Ok(out)
    }

    /// V^{λ1} ⊗ V^{λ2} as a sum of irreducibles.
    pub fn tensor_decomposition(&mut self, l1: &Coweight, l2: &Coweight) -> Result<BTreeMap<Coweight, u64>> {
        let c1 = self.character_of(l1)?;
        let c2 = self.character_of(l2)?;
        let mut prod: BTreeMap<Coweight, i64> = BTreeMap::new();
        for (a, m1) in c1.entries() {
            for (b, m2) in c2.entries() {
                *prod.entry(a + b).or_insert(0) += (*m1 * *m2) as i64;
            }
        }
        self.decompose(&prod)
    }

    pub fn tensor_multiplicity(&mut self, lambda: &Coweight, l1: &Coweight, l2: &Coweight) -> Result<u64> {
        self.require_dominant(lambda)?;
        Ok(self.tensor_decomposition(l1, l2)?.get(lambda).copied().unwrap_or(0))
    }
}

/// dim V^λ(μ) by Kostant's multiplicity formula.
pub fn weight_multiplicity(d: &BasedRootDatum, lambda: &Coweight, mu: &Coweight) -> Result<u64> {
    RepEngine::new(d)?.weight_multiplicity(lambda, mu)
}

/// The full character of V^λ.
pub fn character_of(d: &BasedRootDatum, lambda: &Coweight) -> Result<WeightMultiset> {
    RepEngine::new(d)?.character_of(lambda)
}

/// Multiplicity of V^λ in V^{λ1} ⊗ V^{λ2}.
pub fn tensor_multiplicity(d: &BasedRootDatum, lambda: &Coweight, l1: &Coweight, l2: &Coweight) -> Result<u64> {
    RepEngine::new(d)?.tensor_multiplicity(lambda, l1, l2)
}

/// `ν ↦ dim Hom_M(U^ν, V^λ)` for the Levi given by `levi_vertices` (0-based).
pub fn branch_to_levi(d: &BasedRootDatum, levi_vertices: &[usize], lambda: &Coweight) -> Result<BTreeMap<Coweight, u64>> {
    let levi = d.levi_subdatum(levi_vertices)?;
    let character = RepEngine::new(d)?.character_of(lambda)?;
    let restricted: BTreeMap<Coweight, i64> = character.entries().iter().map(|(k, &v)| (k.clone(), v as i64)).collect();
    RepEngine::new(&levi)?.decompose(&restricted)
}

/// Weyl's dimension formula `∏_α <λ+ρ, α̌>/<ρ, α̌>` over positive coroots.
pub fn weyl_dimension(d: &BasedRootDatum, lambda: &Coweight) -> Result<u64> {
    d.validate(lambda)?;
    if !d.is_dominant(lambda) {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let two_rho = d.two_rho();
    let mut acc = Rational64::one();
    for root in d.positive_roots() {
        let num = lambda.scale(2).pair(root) + two_rho.pair(root);
        acc *= Rational64::new(num, two_rho.pair(root));
    }
    Ok(acc.to_integer() as u64)
}
