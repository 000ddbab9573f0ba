//! Based root data, Weyl groups and the dominance order.
//!
//! Conventions: `simple_coroots` live in the coweight lattice Λ = Z^rank and
//! `simple_roots` in the dual lattice; the pairing is the dot product.
//! A simple reflection acts on Λ by `v - <v, α̌_i> α_i`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const ROOT_LIMIT: usize = 10_000;
const WEYL_LIMIT: usize = 500_000;

/// An integer vector in the coweight lattice.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Coweight(pub Vec<i64>);

impl Coweight {
    pub fn new(coords: Vec<i64>) -> Self {
        Coweight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Coweight(vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    /// Pairing with a vector of the dual lattice.
    pub fn pair(&self, dual: &[i64]) -> i64 {
        self.0.iter().zip(dual).map(|(a, b)| a * b).sum()
    }

    pub fn scale(&self, k: i64) -> Self {
        Coweight(self.0.iter().map(|a| a * k).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }
}

impl fmt::Display for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Coweight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Coweight(Vec::new()));
        }
        s.split(',')
            .map(|p| p.trim().parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(Coweight)
            .map_err(|_| Error::Parse { what: "coweight", input: s.to_string() })
    }
}

impl Add for &Coweight {
    type Output = Coweight;
    fn add(self, rhs: &Coweight) -> Coweight {
        assert_eq!(self.rank(), rhs.rank(), "coweight rank mismatch");
        Coweight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Coweight {
    type Output = Coweight;
    fn sub(self, rhs: &Coweight) -> Coweight {
        assert_eq!(self.rank(), rhs.rank(), "coweight rank mismatch");
        Coweight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Add for Coweight {
    type Output = Coweight;
    fn add(self, rhs: Coweight) -> Coweight {
        &self + &rhs
    }
}

impl Sub for Coweight {
    type Output = Coweight;
    fn sub(self, rhs: Coweight) -> Coweight {
        &self - &rhs
    }
}

impl Neg for &Coweight {
    type Output = Coweight;
    fn neg(self) -> Coweight {
        Coweight(self.0.iter().map(|a| -a).collect())
    }
}

impl Neg for Coweight {
    type Output = Coweight;
    fn neg(self) -> Coweight {
        -&self
    }
}

type Matrix = Vec<Vec<i64>>;

fn identity(n: usize) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let mut out = vec![vec![0; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == 0 {
                continue;
            }
            for j in 0..n {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

/// An element of the Weyl group: a reduced word together with its matrix on Λ.
/// Equality and hashing use the matrix only.
#[derive(Clone, Debug)]
pub struct WeylElement {
    word: Vec<usize>,
    matrix: Matrix,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for WeylElement {}

impl std::hash::Hash for WeylElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.matrix.hash(state);
    }
}

impl WeylElement {
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    /// (-1)^length
    pub fn sign(&self) -> i64 {
        if self.word.len() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    pub fn apply(&self, v: &Coweight) -> Coweight {
        Coweight(self.matrix.iter().map(|row| row.iter().zip(&v.0).map(|(a, b)| a * b).sum()).collect())
    }

    /// Action on rational vectors (used for ρ).
    pub fn apply_rational(&self, v: &[Rational64]) -> Vec<Rational64> {
        self.matrix
            .iter()
            .map(|row| row.iter().zip(v).fold(Rational64::zero(), |acc, (a, b)| acc + b * *a))
            .collect()
    }

    /// The permutation of coordinates realized by this element, if it is one:
    /// `p[i] = j` when `w(e_i) = e_j`.
    pub fn as_permutation(&self) -> Option<Vec<usize>> {
        let n = self.matrix.len();
        let mut p = vec![usize::MAX; n];
        for (i, slot) in p.iter_mut().enumerate() {
            let col: Vec<i64> = (0..n).map(|r| self.matrix[r][i]).collect();
            let ones: Vec<usize> = (0..n).filter(|&r| col[r] == 1).collect();
            if ones.len() != 1 || col.iter().filter(|&&c| c != 0).count() != 1 {
                return None;
            }
            *slot = ones[0];
        }
        Some(p)
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "e");
        }
        let parts: Vec<String> = self.word.iter().map(|i| format!("s{}", i + 1)).collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// The full Weyl group, listed in BFS order (so by nondecreasing length).
#[derive(Clone, Debug)]
pub struct WeylGroup {
    elements: Vec<WeylElement>,
    simple: Vec<Matrix>,
    index: HashMap<Matrix, usize>,
}

impl WeylGroup {
    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn identity(&self) -> &WeylElement {
        &self.elements[0]
    }

    /// The unique longest element w₀.
    pub fn longest(&self) -> &WeylElement {
        self.elements.iter().max_by_key(|w| w.length()).expect("non-empty group")
    }

    fn lookup(&self, m: &Matrix) -> &WeylElement {
        &self.elements[self.index[m]]
    }

    /// `a ∘ b`
    pub fn compose(&self, a: &WeylElement, b: &WeylElement) -> &WeylElement {
        self.lookup(&mat_mul(&a.matrix, &b.matrix))
    }

    pub fn inverse(&self, w: &WeylElement) -> &WeylElement {
        let mut m = identity(w.matrix.len());
        for &i in w.word.iter().rev() {
            m = mat_mul(&m, &self.simple[i]);
        }
        self.lookup(&m)
    }

    /// Finds the element with the given word (not necessarily reduced).
    pub fn from_word(&self, word: &[usize]) -> Option<&WeylElement> {
        let mut m = identity(self.elements[0].matrix.len());
        for &i in word {
            m = mat_mul(&m, self.simple.get(i)?);
        }
        self.index.get(&m).map(|&k| &self.elements[k])
    }
}

/// Serializable form of a datum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatumRecord {
    pub rank: usize,
    pub coroots: Vec<Vec<i64>>,
    pub roots: Vec<Vec<i64>>,
}

/// A based root datum with its positive coroots and a solver for
/// simple-coroot coordinates precomputed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasedRootDatum {
    rank: usize,
    simple_coroots: Vec<Coweight>,
    simple_roots: Vec<Vec<i64>>,
    positive_coroots: Vec<Coweight>,
    positive_roots: Vec<Vec<i64>>,
    /// Inverse of the transposed Cartan matrix.
    coord_solver: Vec<Vec<Rational64>>,
    name: Option<String>,
}

impl BasedRootDatum {
    /// Builds a datum from simple coroots (in Λ) and simple roots (in the dual lattice).
    pub fn new(rank: usize, simple_coroots: Vec<Vec<i64>>, simple_roots: Vec<Vec<i64>>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidDatum("rank must be positive".into()));
        }
        if simple_coroots.len() != simple_roots.len() {
            return Err(Error::InvalidDatum("coroot and root lists differ in length".into()));
        }
        for v in simple_coroots.iter().chain(&simple_roots) {
            if v.len() != rank {
                return Err(Error::RankMismatch { expected: rank, got: v.len() });
            }
        }
        let simple_coroots: Vec<Coweight> = simple_coroots.into_iter().map(Coweight).collect();
        let l = simple_coroots.len();
        let cartan: Vec<Vec<i64>> = (0..l)
            .map(|i| (0..l).map(|j| simple_coroots[i].pair(&simple_roots[j])).collect())
            .collect();
        for i in 0..l {
            if cartan[i][i] != 2 {
                return Err(Error::InvalidDatum(format!("<α_{0}, α̌_{0}> = {1}, expected 2", i + 1, cartan[i][i])));
            }
            for j in 0..l {
                if i != j && cartan[i][j] > 0 {
                    return Err(Error::InvalidDatum(format!("positive off-diagonal Cartan entry at ({}, {})", i + 1, j + 1)));
                }
                if i != j && (cartan[i][j] == 0) != (cartan[j][i] == 0) {
                    return Err(Error::InvalidDatum("Cartan matrix zero pattern is not symmetric".into()));
                }
            }
        }
        // solve c from <v, α̌_j> = Σ_i c_i <α_i, α̌_j>, i.e. (C^T) c = pairings.
        let transposed: Vec<Vec<Rational64>> =
            (0..l).map(|j| (0..l).map(|i| Rational64::from_integer(cartan[i][j])).collect()).collect();
        let coord_solver = invert(transposed).ok_or_else(|| Error::InvalidDatum("Cartan matrix is singular".into()))?;

        let mut d = BasedRootDatum {
            rank,
            simple_coroots,
            simple_roots,
            positive_coroots: Vec::new(),
            positive_roots: Vec::new(),
            coord_solver,
            name: None,
        };
        d.generate_positive()?;
        Ok(d)
    }

    /// The standard datum of GL(n) on Z^n.
    pub fn gl(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDatum("GL(0) is not a group".into()));
        }
        let simple: Vec<Vec<i64>> = (0..n - 1)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                v[i + 1] = -1;
                v
            })
            .collect();
        let mut d = Self::new(n, simple.clone(), simple)?;
        d.name = Some(format!("gl{n}"));
        Ok(d)
    }

    /// Looks up a datum by name: "gl1", "gl2", ...
    pub fn by_name(name: &str) -> Result<Self> {
        let lower = name.trim().to_ascii_lowercase();
        lower
            .strip_prefix("gl")
            .and_then(|n| n.parse::<usize>().ok())
            .ok_or_else(|| Error::Parse { what: "group name", input: name.to_string() })
            .and_then(Self::gl)
    }

    pub fn from_record(r: &DatumRecord) -> Result<Self> {
        Self::new(r.rank, r.coroots.clone(), r.roots.clone())
    }

    pub fn to_record(&self) -> DatumRecord {
        DatumRecord {
            rank: self.rank,
            coroots: self.simple_coroots.iter().map(|c| c.0.clone()).collect(),
            roots: self.simple_roots.clone(),
        }
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of vertices of the Dynkin diagram.
    pub fn num_simple(&self) -> usize {
        self.simple_coroots.len()
    }

    pub fn simple_coroots(&self) -> &[Coweight] {
        &self.simple_coroots
    }

    pub fn simple_roots(&self) -> &[Vec<i64>] {
        &self.simple_roots
    }

    /// Δ⁺, sorted by height and then lexicographically.
    pub fn positive_coroots(&self) -> &[Coweight] {
        &self.positive_coroots
    }

    /// Positive roots, paired index-wise with `positive_coroots`.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn is_gl(&self) -> bool {
        self.name.as_deref().is_some_and(|n| n.starts_with("gl"))
    }

    fn check_rank(&self, v: &Coweight) -> Result<()> {
        if v.rank() != self.rank {
            return Err(Error::RankMismatch { expected: self.rank, got: v.rank() });
        }
        Ok(())
    }

    pub fn reflect(&self, i: usize, v: &Coweight) -> Coweight {
        let k = v.pair(&self.simple_roots[i]);
        v - &self.simple_coroots[i].scale(k)
    }

    fn reflect_dual(&self, i: usize, u: &[i64]) -> Vec<i64> {
        let k = self.simple_coroots[i].pair(u);
        u.iter().zip(&self.simple_roots[i]).map(|(a, b)| a - k * b).collect()
    }

    fn generate_positive(&mut self) -> Result<()> {
        let mut seen: HashSet<(Coweight, Vec<i64>)> = HashSet::new();
        let mut queue = VecDeque::new();
        for i in 0..self.num_simple() {
            let p = (self.simple_coroots[i].clone(), self.simple_roots[i].clone());
            if seen.insert(p.clone()) {
                queue.push_back(p);
            }
        }
        while let Some((c, r)) = queue.pop_front() {
            for i in 0..self.num_simple() {
                let p = (self.reflect(i, &c), self.reflect_dual(i, &r));
                if seen.insert(p.clone()) {
                    if seen.len() > ROOT_LIMIT {
                        return Err(Error::GenerationLimit(ROOT_LIMIT));
                    }
                    queue.push_back(p);
                }
            }
        }
        let mut pos: Vec<(i64, Coweight, Vec<i64>)> = seen
            .into_iter()
            .filter_map(|(c, r)| {
                let coords = self.simple_coords(&c)?;
                if coords.iter().all(|x| x.is_integer() && *x >= Rational64::zero()) {
                    let h = coords.iter().map(|x| x.to_integer()).sum();
                    Some((h, c, r))
                } else {
                    None
                }
            })
            .collect();
        pos.sort();
        self.positive_coroots = pos.iter().map(|p| p.1.clone()).collect();
        self.positive_roots = pos.into_iter().map(|p| p.2).collect();
        Ok(())
    }

    /// Coordinates of `v` in the basis of simple coroots, or `None` if `v`
    /// is outside their rational span.
    pub fn simple_coords(&self, v: &Coweight) -> Option<Vec<Rational64>> {
        let l = self.num_simple();
        let pairings: Vec<Rational64> =
            self.simple_roots.iter().map(|r| Rational64::from_integer(v.pair(r))).collect();
        let c: Vec<Rational64> = (0..l)
            .map(|i| (0..l).fold(Rational64::zero(), |acc, j| acc + self.coord_solver[i][j] * pairings[j]))
            .collect();
        for k in 0..self.rank {
            let rebuilt = (0..l).fold(Rational64::zero(), |acc, i| acc + c[i] * self.simple_coroots[i].0[k]);
            if rebuilt != Rational64::from_integer(v.0[k]) {
                return None;
            }
        }
        Some(c)
    }

    /// Integer simple-coroot coordinates, if `v` is in the coroot lattice.
    pub fn integer_coords(&self, v: &Coweight) -> Option<Vec<i64>> {
        let c = self.simple_coords(v)?;
        c.iter().map(|x| x.is_integer().then(|| x.to_integer())).collect()
    }

    /// True iff `v` is a nonnegative integer combination of simple coroots.
    pub fn in_positive_cone(&self, v: &Coweight) -> bool {
        self.integer_coords(v).is_some_and(|c| c.iter().all(|&x| x >= 0))
    }

    /// `a ≤ b` in the dominance order.
    pub fn dominance_leq(&self, a: &Coweight, b: &Coweight) -> bool {
        a.rank() == self.rank && b.rank() == self.rank && self.in_positive_cone(&(b - a))
    }

    /// `<v, ρ̌>` for `v` in the coroot lattice, i.e. the sum of its
    /// simple-coroot coordinates.
    pub fn height(&self, v: &Coweight) -> Option<i64> {
        self.integer_coords(v).map(|c| c.iter().sum())
    }

    /// 2ρ: the sum of the positive coroots.
    pub fn two_rho(&self) -> Coweight {
        self.positive_coroots.iter().fold(Coweight::zero(self.rank), |acc, c| &acc + c)
    }

    /// 2ρ̌: the sum of the positive roots.
    pub fn two_rho_check(&self) -> Vec<i64> {
        let mut out = vec![0; self.rank];
        for r in &self.positive_roots {
            for (o, x) in out.iter_mut().zip(r) {
                *o += x;
            }
        }
        out
    }

    /// (ρ, ρ̌) as rational vectors.
    pub fn rho_pair(&self) -> (Vec<Rational64>, Vec<Rational64>) {
        let half = |v: Vec<i64>| v.into_iter().map(|x| Rational64::new(x, 2)).collect();
        (half(self.two_rho().0), half(self.two_rho_check()))
    }

    pub fn is_dominant(&self, v: &Coweight) -> bool {
        self.simple_roots.iter().all(|r| v.pair(r) >= 0)
    }

    /// Moves `v` into the dominant chamber; returns the dominant element and
    /// the word of simple reflections applied (first applied first).
    pub fn dominant_representative(&self, v: &Coweight) -> (Coweight, Vec<usize>) {
        let mut cur = v.clone();
        let mut word = Vec::new();
        while let Some(i) = (0..self.num_simple()).find(|&i| cur.pair(&self.simple_roots[i]) < 0) {
            cur = self.reflect(i, &cur);
            word.push(i);
        }
        (cur, word)
    }

    /// The Weyl group with reduced words, in order of nondecreasing length.
    pub fn weyl_group(&self) -> Result<WeylGroup> {
        let n = self.rank;
        let simple: Vec<Matrix> = (0..self.num_simple())
            .map(|i| {
                let mut m = identity(n);
                for (r, row) in m.iter_mut().enumerate() {
                    for (c, x) in row.iter_mut().enumerate() {
                        *x -= self.simple_coroots[i].0[r] * self.simple_roots[i][c];
                    }
                }
                m
            })
            .collect();
        let mut elements = vec![WeylElement { word: Vec::new(), matrix: identity(n) }];
        let mut index = HashMap::new();
        index.insert(identity(n), 0usize);
        let mut head = 0;
        while head < elements.len() {
            let g = elements[head].clone();
            head += 1;
            for (i, s) in simple.iter().enumerate() {
                let m = mat_mul(s, &g.matrix);
                if !index.contains_key(&m) {
                    if elements.len() >= WEYL_LIMIT {
                        return Err(Error::GenerationLimit(WEYL_LIMIT));
                    }
                    let mut word = vec![i];
                    word.extend_from_slice(&g.word);
                    index.insert(m.clone(), elements.len());
                    elements.push(WeylElement { word, matrix: m });
                }
            }
        }
        Ok(WeylGroup { elements, simple, index })
    }

    /// The datum spanned by the simple (co)roots indexed by `subset` (0-based).
    pub fn levi_subdatum(&self, subset: &[usize]) -> Result<Self> {
        let mut idx: Vec<usize> = subset.to_vec();
        idx.sort_unstable();
        idx.dedup();
        if let Some(&bad) = idx.iter().find(|&&i| i >= self.num_simple()) {
            return Err(Error::IndexOutOfRange(bad));
        }
        let coroots = idx.iter().map(|&i| self.simple_coroots[i].0.clone()).collect();
        let roots = idx.iter().map(|&i| self.simple_roots[i].clone()).collect();
        let mut d = Self::new(self.rank, coroots, roots)?;
        if idx.len() == self.num_simple() {
            d.name = self.name.clone();
        }
        Ok(d)
    }

    /// Checks that `v` has the rank of this datum.
    pub fn validate(&self, v: &Coweight) -> Result<()> {
        self.check_rank(v)
    }
}

/// The k-th fundamental coweight of GL(n): (1,…,1,0,…,0) with k ones.
pub fn gl_fundamental(n: usize, k: usize) -> Coweight {
    Coweight((0..n).map(|i| i64::from(i < k)).collect())
}

fn invert(mut a: Vec<Vec<Rational64>>) -> Option<Vec<Vec<Rational64>>> {
    let n = a.len();
    let mut inv: Vec<Vec<Rational64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rational64::one() } else { Rational64::zero() }).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col];
        for j in 0..n {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for j in 0..n {
                    let (x, y) = (a[col][j], inv[col][j]);
                    a[r][j] -= f * x;
                    inv[r][j] -= f * y;
                }
            }
        }
    }
    Some(inv)
}
