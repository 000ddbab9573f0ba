use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An exact element `a + b·√q` of Q(√q) for a fixed prime power `q`.
///
/// `√q` is the positive root. When `q` is a perfect square the root is an
/// integer and is folded into `a`, so `b` is always zero in that case.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    a: BigRational,
    b: BigRational,
    q: u64,
}

fn int_sqrt(q: u64) -> Option<u64> {
    let r = q.sqrt();
    (r * r == q).then_some(r)
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Scalar {
    pub fn new(q: u64, a: BigRational, b: BigRational) -> Self {
        assert!(q >= 2, "scalar context needs q >= 2");
        match int_sqrt(q) {
            Some(r) if !b.is_zero() => Scalar { a: a + b * rat(r as i64), b: BigRational::zero(), q },
            _ => Scalar { a, b, q },
        }
    }

    pub fn zero(q: u64) -> Self {
        Self::new(q, BigRational::zero(), BigRational::zero())
    }

    pub fn one(q: u64) -> Self {
        Self::from_int(q, 1)
    }

    pub fn from_int(q: u64, n: i64) -> Self {
        Self::new(q, rat(n), BigRational::zero())
    }

    pub fn from_bigint(q: u64, n: BigInt) -> Self {
        Self::new(q, BigRational::from_integer(n), BigRational::zero())
    }

    pub fn from_ratio(q: u64, num: i64, den: i64) -> Self {
        Self::new(q, BigRational::new(BigInt::from(num), BigInt::from(den)), BigRational::zero())
    }

    pub fn from_rational(q: u64, r: BigRational) -> Self {
        Self::new(q, r, BigRational::zero())
    }

    /// √q
    pub fn sqrt_q(q: u64) -> Self {
        Self::new(q, BigRational::zero(), BigRational::one())
    }

    /// q^{k/2} for any integer k.
    pub fn q_half_power(q: u64, k: i64) -> Self {
        let whole = k.div_euclid(2);
        let base = BigRational::from_integer(BigInt::from(q));
        let p = if whole >= 0 {
            num_traits::pow(base, whole as usize)
        } else {
            num_traits::pow(base.recip(), (-whole) as usize)
        };
        if k.rem_euclid(2) == 0 {
            Self::from_rational(q, p)
        } else {
            Self::new(q, BigRational::zero(), p)
        }
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn sqrt_part(&self) -> &BigRational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// a - b·√q
    pub fn conj(&self) -> Self {
        Scalar { a: self.a.clone(), b: -self.b.clone(), q: self.q }
    }

    /// a² - q·b², the norm to Q.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - rat(self.q as i64) * &self.b * &self.b
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // q is not a square whenever b != 0, so the norm is nonzero here
        let n = self.norm();
        Ok(Scalar { a: &self.a / &n, b: -(&self.b / &n), q: self.q })
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    /// Integer power; negative exponents need a nonzero base.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut n = e.unsigned_abs();
        let mut acc = Scalar::one(self.q);
        let mut sq = base;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &sq;
            }
            n >>= 1;
            if n > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    pub fn scale_int(&self, k: &BigInt) -> Self {
        let k = BigRational::from_integer(k.clone());
        Scalar { a: &self.a * &k, b: &self.b * &k, q: self.q }
    }

    pub fn scale_rational(&self, k: &BigRational) -> Self {
        Scalar { a: &self.a * k, b: &self.b * k, q: self.q }
    }

    /// Parses "a", "b*r", "a+b*r", "a-b*r", "r" and "-r" with rational literals.
    pub fn parse(q: u64, s: &str) -> Result<Self> {
        let err = || Error::Parse { what: "scalar", input: s.to_string() };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err());
        }
        let mut terms: Vec<String> = Vec::new();
        let mut cur = String::new();
        for (i, ch) in compact.chars().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 && !cur.is_empty() {
                terms.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        terms.push(cur);
        let mut out = Scalar::zero(q);
        for t in terms {
            let (sign, body) = match t.strip_prefix('-') {
                Some(rest) => (-1, rest),
                None => (1, t.strip_prefix('+').unwrap_or(&t)),
            };
            let (coef, is_root) = if body == "r" {
                ("1", true)
            } else if let Some(c) = body.strip_suffix("*r") {
                (c, true)
            } else {
                (body, false)
            };
            let value = parse_rational(coef).ok_or_else(err)? * rat(sign);
            let term = if is_root {
                Scalar::new(q, BigRational::zero(), value)
            } else {
                Scalar::from_rational(q, value)
            };
            out += &term;
        }
        Ok(out)
    }

    fn check(&self, other: &Scalar) {
        assert_eq!(self.q, other.q, "scalars from different contexts");
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    if s.is_empty() {
        return None;
    }
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().ok()?;
            let d: BigInt = d.parse().ok()?;
            (!d.is_zero()).then(|| BigRational::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if self.a.is_zero() {
            return write!(f, "{}*r", self.b);
        }
        if self.b.is_negative() {
            write!(f, "{}-{}*r", self.a, -self.b.clone())
        } else {
            write!(f, "{}+{}*r", self.a, self.b)
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.check(rhs);
        Scalar { a: &self.a + &rhs.a, b: &self.b + &rhs.b, q: self.q }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.check(rhs);
        Scalar { a: &self.a - &rhs.a, b: &self.b - &rhs.b, q: self.q }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.check(rhs);
        let q = rat(self.q as i64);
        Scalar {
            a: &self.a * &rhs.a + q * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
            q: self.q,
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { a: -self.a.clone(), b: -self.b.clone(), q: self.q }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}

owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.check(rhs);
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.check(rhs);
        self.a -= &rhs.a;
        self.b -= &rhs.b;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}
