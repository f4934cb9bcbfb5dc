use std::fmt;

use serde::{Serialize, Serializer};

use super::{Rational, Ring};
use crate::error::{Error, Result};

/// Element of Q(ξ), ξ = e^{2πi/5}, stored as the coefficients of
/// 1, ξ, ξ², ξ³ (the ξ⁴ term is eliminated with 1 + ξ + … + ξ⁴ = 0).
///
/// Arithmetic goes through the five-slot cyclic form in Q[x]/(x⁵ − 1),
/// where multiplication is a plain cyclic convolution.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CycScalar {
    c: [Rational; 4],
}

impl CycScalar {
    pub fn new(c: [Rational; 4]) -> Self {
        CycScalar { c }
    }

    pub fn from_rational(r: Rational) -> Self {
        CycScalar {
            c: [r, Rational::zero(), Rational::zero(), Rational::zero()],
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_int(n))
    }

    /// Reduce a cyclic five-slot vector to canonical form.
    pub fn from_slots(s: [Rational; 5]) -> Self {
        let [s0, s1, s2, s3, s4] = s;
        if s4.is_zero() {
            return CycScalar { c: [s0, s1, s2, s3] };
        }
        CycScalar {
            c: [&s0 - &s4, &s1 - &s4, &s2 - &s4, &s3 - &s4],
        }
    }

    pub fn to_slots(&self) -> [Rational; 5] {
        [
            self.c[0].clone(),
            self.c[1].clone(),
            self.c[2].clone(),
            self.c[3].clone(),
            Rational::zero(),
        ]
    }

    /// ξ^k for any integer k.
    pub fn xi_pow(k: i64) -> Self {
        let mut s: [Rational; 5] = Default::default();
        s[k.rem_euclid(5) as usize] = Rational::one();
        Self::from_slots(s)
    }

    /// ξ^{n/2} with the in-group square root ξ^{1/2} := ξ³, so ξ^{n/2} = ξ^{3n mod 5}.
    pub fn zeta_half_power(n: i64) -> Self {
        Self::xi_pow((3 * n).rem_euclid(5))
    }

    pub fn coeffs(&self) -> &[Rational; 4] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Rational::is_zero)
    }

    /// The rational value, if the element lies in Q.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.c[1..].iter().all(Rational::is_zero) {
            Some(&self.c[0])
        } else {
            None
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        CycScalar {
            c: std::array::from_fn(|i| &self.c[i] + &o.c[i]),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        CycScalar {
            c: std::array::from_fn(|i| &self.c[i] - &o.c[i]),
        }
    }

    pub fn neg(&self) -> Self {
        CycScalar {
            c: std::array::from_fn(|i| -&self.c[i]),
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        CycScalar {
            c: std::array::from_fn(|i| &self.c[i] * r),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        // Fast paths: most scalars in the pipeline are rational or a single ξ-power.
        if let Some(r) = self.as_rational() {
            return o.scale(r);
        }
        if let Some(r) = o.as_rational() {
            return self.scale(r);
        }
        let mut s: [Rational; 5] = Default::default();
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                s[(i + j) % 5] += &(a * b);
            }
        }
        Self::from_slots(s)
    }

    /// Galois automorphism ξ ↦ ξ^k, k a unit mod 5.
    pub fn galois(&self, k: i64) -> Self {
        debug_assert!(k.rem_euclid(5) != 0);
        let mut s: [Rational; 5] = Default::default();
        for (i, a) in self.c.iter().enumerate() {
            s[(i as i64 * k).rem_euclid(5) as usize] = a.clone();
        }
        Self::from_slots(s)
    }

    /// Field norm down to Q.
    pub fn norm(&self) -> Rational {
        let n = self.mul(&self.conjugate_product());
        n.as_rational()
            .cloned()
            .expect("field norm of a cyclotomic element is rational")
    }

    fn conjugate_product(&self) -> Self {
        self.galois(2).mul(&self.galois(3)).mul(&self.galois(4))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational(r.inv()?));
        }
        let p = self.conjugate_product();
        let n = self.mul(&p);
        let n = n.as_rational().expect("norm is rational");
        Ok(p.scale(&n.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::from_int(1);
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }
}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{a}")?,
                1 => write!(f, "({a})ξ")?,
                _ => write!(f, "({a})ξ^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for CycScalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.c.serialize(s)
    }
}

impl Ring for CycScalar {
    const NAME: &'static str = "Q(xi)";

    fn zero() -> Self {
        CycScalar::default()
    }
    fn one() -> Self {
        CycScalar::from_int(1)
    }
    fn is_zero(&self) -> bool {
        CycScalar::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        CycScalar::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        CycScalar::sub(self, o)
    }
    fn neg(&self) -> Self {
        CycScalar::neg(self)
    }
    fn mul(&self, o: &Self) -> Self {
        CycScalar::mul(self, o)
    }
    fn try_inv(&self) -> Option<Self> {
        self.inv().ok()
    }
    fn from_rational(r: &Rational) -> Self {
        CycScalar::from_rational(r.clone())
    }
    fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("cyclotomic scalar serializes")
    }
    fn scale(&self, r: &Rational) -> Self {
        CycScalar::scale(self, r)
    }
    fn add_assign(&mut self, o: &Self) {
        for (a, b) in self.c.iter_mut().zip(o.c.iter()) {
            *a += b;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xi(k: i64) -> CycScalar {
        CycScalar::xi_pow(k)
    }

    #[test]
    fn xi_times_xi4_is_one() {
        assert_eq!(xi(1).mul(&xi(4)), CycScalar::one());
    }

    #[test]
    fn minimal_polynomial_vanishes() {
        let s = (0..5).fold(CycScalar::zero(), |acc, k| acc.add(&xi(k)));
        assert!(s.is_zero());
    }

    #[test]
    fn inverse_of_xi() {
        assert_eq!(xi(1).inv().unwrap(), xi(4));
        assert_eq!(CycScalar::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn half_powers() {
        assert_eq!(CycScalar::zeta_half_power(2), xi(1));
        assert_eq!(CycScalar::zeta_half_power(1), xi(3));
        assert_eq!(CycScalar::zeta_half_power(10), CycScalar::one());
        let h = CycScalar::zeta_half_power(1);
        assert_eq!(h.mul(&h), xi(1));
    }

    #[test]
    fn inverse_of_difference() {
        let a = xi(1).sub(&xi(3));
        let b = a.inv().unwrap();
        assert_eq!(a.mul(&b), CycScalar::one());
    }

    #[test]
    fn norm_of_one_minus_xi_is_five() {
        assert_eq!(CycScalar::one().sub(&xi(1)).norm(), Rational::from_int(5));
    }

    #[test]
    fn xi4_eliminated_in_canonical_form() {
        let c = xi(4);
        let want: [Rational; 4] = std::array::from_fn(|_| Rational::from_int(-1));
        assert_eq!(c.coeffs(), &want);
    }
}
