//! Classical and modified Eisenstein series on Bun_GL(n) of the projective
//! line, as functions of the split type and the torus component.
//!
//! A component is labelled by its gr-degree vector `d` (the degrees of the
//! successive quotients of the flag); the corresponding series exponent is
//! `μ = -d`. For a bundle with degrees `a`, components satisfy `d ≤ a` in the
//! dominance order and the series is based at `-a`.

mod checks;
mod ledger;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::bun::{BundleCounter, SplitBundle};
use crate::curve::{is_prime_power, UnramifiedCharacter};
use crate::error::{Error, Result};
use crate::ringtools::{ConeSeries, Scalar};
use crate::rootdata::{BasedRootDatum, Coweight};

pub use checks::{
    l_product,
    check_comparefinite, check_fullcompare, check_functional_equation, check_hecke_eigen, fe_cocycle, CocycleReport,
    ComparisonReport, ComponentMismatch, FeReport, FeVariant, HeckeReport,
};
pub use ledger::{aut_value, NormalizationLedger};

/// Which Eisenstein series: saturated flags (classical) or subsheaf flags
/// (modified).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EisKind {
    Classical,
    Modified,
}

impl EisKind {
    pub fn as_str(self) -> &'static str {
        match self {
            EisKind::Classical => "classical",
            EisKind::Modified => "modified",
        }
    }
}

impl fmt::Display for EisKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for EisKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "classical" | "cl" => Ok(EisKind::Classical),
            "modified" | "mod" => Ok(EisKind::Modified),
            _ => Err(Error::Parse { what: "Eisenstein kind", input: s.to_string() }),
        }
    }
}

/// The component index of a gr-degree vector.
pub fn component_of(d: &[i64]) -> Coweight {
    Coweight(d.iter().map(|x| -x).collect())
}

/// The gr-degree vector of a component index.
pub fn degrees_of(mu: &Coweight) -> Vec<i64> {
    mu.coords().iter().map(|x| -x).collect()
}

/// Gr-degree vectors `d ≤ top` whose height `<top - d, ρ̌>` is at most `height`.
pub fn degree_window(top: &[i64], height: u32) -> Vec<Vec<i64>> {
    let n = top.len();
    if n == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut hs = vec![0u32; n.saturating_sub(1)];
    fn rec(i: usize, left: u32, hs: &mut Vec<u32>, top: &[i64], out: &mut Vec<Vec<i64>>) {
        if i == hs.len() {
            // partial sums D_i = A_i - h_i, then d_i = D_i - D_{i-1}
            let n = top.len();
            let mut sums = Vec::with_capacity(n);
            let mut acc = 0;
            for (j, a) in top.iter().enumerate() {
                acc += a;
                sums.push(if j + 1 < n { acc - i64::from(hs[j]) } else { acc });
            }
            let mut prev = 0;
            out.push(
                sums.iter()
                    .map(|s| {
                        let d = s - prev;
                        prev = *s;
                        d
                    })
                    .collect(),
            );
            return;
        }
        for h in 0..=left {
            hs[i] = h;
            rec(i + 1, left - h, hs, top, out);
        }
        hs[i] = 0;
    }
    rec(0, height, &mut hs, top, &mut out);
    out
}

/// Evaluates Eisenstein components for GL(n) over a fixed F_q. Holds the
/// flag-count caches, so reuse one engine across characters.
#[derive(Debug, Clone)]
pub struct EisEngine {
    datum: BasedRootDatum,
    ledger: NormalizationLedger,
    counter: BundleCounter,
}

impl EisEngine {
    pub fn new(n: usize, q: u64) -> Result<Self> {
        if !is_prime_power(q) {
            return Err(Error::NotPrimePower(q));
        }
        Ok(EisEngine {
            datum: BasedRootDatum::gl(n)?,
            ledger: NormalizationLedger::new(n, q),
            counter: BundleCounter::new(q),
        })
    }

    pub fn with_ledger(mut self, ledger: NormalizationLedger) -> Self {
        self.ledger = ledger;
        self
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    pub fn q(&self) -> u64 {
        self.ledger.q
    }

    pub fn datum(&self) -> &BasedRootDatum {
        &self.datum
    }

    pub fn ledger(&self) -> &NormalizationLedger {
        &self.ledger
    }

    pub fn counter(&mut self) -> &mut BundleCounter {
        &mut self.counter
    }

    fn check_character(&self, chi: &UnramifiedCharacter) -> Result<()> {
        if chi.rank() != self.rank() {
            return Err(Error::RankMismatch { expected: self.rank(), got: chi.rank() });
        }
        if chi.q() != self.q() {
            return Err(Error::ContextMismatch(self.q(), chi.q()));
        }
        Ok(())
    }

    /// Weighted number of flags of M with gr-degrees d.
    pub fn flag_count(&mut self, kind: EisKind, m: &SplitBundle, d: &[i64]) -> Result<BigInt> {
        let n = self.rank();
        if m.rank() != n || d.len() != n {
            return Err(Error::RankMismatch { expected: n, got: d.len().min(m.rank()) });
        }
        let total: i64 = d.iter().sum();
        if total != m.degree() {
            return Err(Error::DegreeMismatch { profile: total, bundle: m.degree() });
        }
        let profile: Vec<i64> = d[..n - 1]
            .iter()
            .scan(0, |s, x| {
                *s += x;
                Some(*s)
            })
            .collect();
        self.counter.flag_profile_count(m, &profile, kind == EisKind::Classical)
    }

    /// The value of the component `d` of the Eisenstein series at M.
    pub fn component(&mut self, kind: EisKind, chi: &UnramifiedCharacter, m: &SplitBundle, d: &[i64]) -> Result<Scalar> {
        self.check_character(chi)?;
        let count = self.flag_count(kind, m, d)?;
        if count.is_zero() {
            return Ok(Scalar::zero(self.q()));
        }
        let factor = self.ledger.component_factor(chi, d)?;
        Ok(factor.scale_int(&count))
    }

    /// All components within the height bound, as a series in t^μ, μ = -d.
    pub fn series(&mut self, kind: EisKind, chi: &UnramifiedCharacter, m: &SplitBundle, height: u32) -> Result<ConeSeries> {
        self.check_character(chi)?;
        let base = component_of(m.degrees());
        let mut out = ConeSeries::zero(&self.datum, self.q(), base, height);
        for d in degree_window(m.degrees(), height) {
            let v = self.component(kind, chi, m, &d)?;
            out.add_term(component_of(&d), &v)?;
        }
        Ok(out)
    }

    /// A table over several bundles.
    pub fn table(
        &mut self,
        kind: EisKind,
        chi: &UnramifiedCharacter,
        bundles: &[SplitBundle],
        height: u32,
    ) -> Result<EisComponentTable> {
        let mut entries = BTreeMap::new();
        for m in bundles {
            for d in degree_window(m.degrees(), height) {
                let v = self.component(kind, chi, m, &d)?;
                if !v.is_zero() {
                    entries.insert((m.clone(), d), v);
                }
            }
        }
        Ok(EisComponentTable { n: self.rank(), q: self.q(), chi: chi.clone(), kind, entries, height_bound: height })
    }
}

/// Nonzero Eisenstein components keyed by (bundle, gr-degree vector).
#[derive(Clone, Debug, PartialEq)]
pub struct EisComponentTable {
    pub n: usize,
    pub q: u64,
    pub chi: UnramifiedCharacter,
    pub kind: EisKind,
    pub entries: BTreeMap<(SplitBundle, Vec<i64>), Scalar>,
    pub height_bound: u32,
}

impl EisComponentTable {
    pub fn get(&self, m: &SplitBundle, d: &[i64]) -> Scalar {
        self.entries.get(&(m.clone(), d.to_vec())).cloned().unwrap_or_else(|| Scalar::zero(self.q))
    }
}
