use serde_json::json;

use crate::curve::UnramifiedCharacter;
use crate::error::{Error, Result};
use crate::ringtools::Scalar;

/// The normalization conventions used to turn flag counts into Eisenstein
/// components. Serialized with every table so that results can be
/// reproduced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizationLedger {
    pub n: usize,
    pub q: u64,
    /// Overall scalar multiplying every component.
    pub global_constant: Scalar,
    /// Sign attached to the square root of the Ω^{2ρ} fiber.
    pub sqrt_twist_sign: i64,
}

impl NormalizationLedger {
    pub fn new(n: usize, q: u64) -> Self {
        NormalizationLedger { n, q, global_constant: Scalar::one(q), sqrt_twist_sign: 1 }
    }

    /// R(d) = Σ_{i<j} (d_i - d_j + 1)
    pub fn component_exponent(d: &[i64]) -> i64 {
        let n = d.len();
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| d[i] - d[j] + 1).sum()
    }

    /// Sign normalizing the k-th minuscule Hecke operator: (-1)^{k(n+1)}.
    pub fn hecke_sign(&self, k: usize) -> i64 {
        if (k * (self.n + 1)) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Constant c(ε, q) in front of every weight ε of the k-th fundamental
    /// representation: q^{<ω_k, ρ̌>} = q^{k(n-k)/2}.
    pub fn hecke_constant(&self, k: usize) -> Scalar {
        Scalar::q_half_power(self.q, (k * (self.n - k)) as i64)
    }

    /// aut_value(d)·(-√q)^{R(d)}·global_constant
    pub fn component_factor(&self, chi: &UnramifiedCharacter, d: &[i64]) -> Result<Scalar> {
        let r = Self::component_exponent(d);
        let sign = if r.rem_euclid(2) == 0 { Scalar::one(self.q) } else { -Scalar::one(self.q) };
        let tate = &sign * &Scalar::q_half_power(self.q, r);
        Ok(&(&aut_value(chi, d, self)? * &tate) * &self.global_constant)
    }

    /// Machine-readable description of the conventions.
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "group": format!("gl{}", self.n),
            "q": self.q,
            "sqrt_q": "positive root, written r",
            "global_constant": self.global_constant.to_string(),
            "sqrt_twist_choice": self.sqrt_twist_sign,
            "component_index": "mu = -d for gr-degree vector d",
            "component_exponent": "R(d) = sum_{i<j} (d_i - d_j + 1)",
            "component_factor": "(-r)^R(d)",
            "aut_value": "(-1)^n r^n prod_i s_i^((n+1-2i) - d_i)",
            "tate_twist": "Q_l(1/2)[1] -> -r^-1, Q_l(1)[2] -> q^-1",
            "hecke_normalization": "(-1)^(k(n+1)) * sum over lower modifications of colength k",
            "hecke_constant": "q^(k(n-k)/2) for every weight of the k-th fundamental representation",
            "weyl_action": "chi^w = chi o w^-1; reindexing mu -> w(mu) + w(2rho) - 2rho",
            "functional_equation_constant": "1",
        })
    }
}

/// Value of the automorphic character on the torus component with
/// gr-degrees d: (-1)^n q^{n/2} ∏ s_i^{(n+1-2i) - d_i}, with the sign choice for
/// the square root of Ω^{2ρ} applied to the ρ-part.
pub fn aut_value(chi: &UnramifiedCharacter, d: &[i64], ledger: &NormalizationLedger) -> Result<Scalar> {
    let n = chi.rank();
    if d.len() != n {
        return Err(Error::RankMismatch { expected: n, got: d.len() });
    }
    if chi.values().iter().any(Scalar::is_zero) {
        return Err(Error::ZeroCharacterValue);
    }
    let q = chi.q();
    let mut v = Scalar::q_half_power(q, n as i64);
    if n % 2 == 1 {
        v = -v;
    }
    if ledger.sqrt_twist_sign < 0 {
        v = -v;
    }
    for (i, (s, di)) in chi.values().iter().zip(d).enumerate() {
        let e = (n as i64 + 1 - 2 * (i as i64 + 1)) - di;
        v = &v * &s.pow(e)?;
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aut_value_examples() {
        let q = 5;
        let ledger = NormalizationLedger::new(2, q);
        let chi = UnramifiedCharacter::parse(q, "3,1/2").unwrap();
        let (s1, s2) = (&chi.values()[0], &chi.values()[1]);
        let d = [2, -3];
        let expected = &(&Scalar::from_int(q, 5) * &s1.pow(-1).unwrap()) * &s2.pow(2).unwrap();
        assert_eq!(aut_value(&chi, &d, &ledger).unwrap(), expected);
        let shifted = aut_value(&chi, &[3, -3], &ledger).unwrap();
        assert_eq!(shifted.checked_div(&aut_value(&chi, &d, &ledger).unwrap()).unwrap(), s1.inv().unwrap());

        let l1 = NormalizationLedger::new(1, q);
        let trivial = UnramifiedCharacter::parse(q, "1").unwrap();
        assert_eq!(aut_value(&trivial, &[7], &l1).unwrap(), -Scalar::sqrt_q(q));
    }

    #[test]
    fn exponent_and_hecke_constants() {
        assert_eq!(NormalizationLedger::component_exponent(&[0, 0]), 1);
        assert_eq!(NormalizationLedger::component_exponent(&[1, 0, -1]), 7);
        let l = NormalizationLedger::new(3, 2);
        assert_eq!(l.hecke_sign(1), 1);
        assert_eq!(l.hecke_constant(1), Scalar::from_int(2, 2));
        let l2 = NormalizationLedger::new(2, 2);
        assert_eq!(l2.hecke_sign(1), -1);
        assert_eq!(l2.hecke_constant(1), Scalar::sqrt_q(2));
    }
}
