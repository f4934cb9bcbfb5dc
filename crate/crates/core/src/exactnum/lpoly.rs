use std::collections::BTreeMap;
use std::fmt;

use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};

use super::{Rational, Ring};

/// Laurent polynomial in Λ := λ⁵ with rational coefficients.
///
/// Only monomials are units, which is all the I_{p,q} tower needs: its
/// diagonal entries have constant term 1 or Λ.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LambdaPoly {
    terms: BTreeMap<i32, Rational>,
}

impl LambdaPoly {
    pub fn monomial(exp: i32, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LambdaPoly { terms }
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, c)
    }

    /// Λ itself.
    pub fn big_lambda() -> Self {
        Self::monomial(1, Rational::one())
    }

    pub fn from_coeffs(coeffs: impl IntoIterator<Item = (i32, Rational)>) -> Self {
        let mut p = Self::default();
        for (e, c) in coeffs {
            p.insert_add(e, c);
        }
        p
    }

    pub fn coeff(&self, exp: i32) -> Rational {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &Rational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn as_monomial(&self) -> Option<(i32, &Rational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (*e, c))
        } else {
            None
        }
    }

    /// Evaluate at a rational value of Λ. Negative powers need Λ ≠ 0.
    pub fn eval(&self, lam: &Rational) -> crate::Result<Rational> {
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            acc += &(c * &lam.pow(*e)?);
        }
        Ok(acc)
    }

    /// Multiply by Λ^k.
    pub fn shift(&self, k: i32) -> Self {
        LambdaPoly {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    fn insert_add(&mut self, e: i32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }
}

impl fmt::Display for LambdaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            match e {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})Λ")?,
                _ => write!(f, "({c})Λ^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LambdaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for LambdaPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct T<'a>(i32, &'a Rational);
        impl Serialize for T<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(2))?;
                m.serialize_entry("exp", &self.0)?;
                m.serialize_entry("c", self.1)?;
                m.end()
            }
        }
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            seq.serialize_element(&T(*e, c))?;
        }
        seq.end()
    }
}

impl Ring for LambdaPoly {
    const NAME: &'static str = "Q[Lambda]";

    fn zero() -> Self {
        Self::default()
    }
    fn one() -> Self {
        Self::constant(Rational::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(o);
        out
    }
    fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.insert_add(*e, -c);
        }
        out
    }
    fn neg(&self) -> Self {
        LambdaPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
    fn mul(&self, o: &Self) -> Self {
        let mut out = Self::default();
        out.mul_add_assign(self, o);
        out
    }
    fn try_inv(&self) -> Option<Self> {
        let (e, c) = self.as_monomial()?;
        Some(Self::monomial(-e, c.inv().ok()?))
    }
    fn from_rational(r: &Rational) -> Self {
        Self::constant(r.clone())
    }
    fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("lambda polynomial serializes")
    }
    fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::default();
        }
        LambdaPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c * r)).collect(),
        }
    }
    fn add_assign(&mut self, o: &Self) {
        for (e, c) in &o.terms {
            self.insert_add(*e, c.clone());
        }
    }
    fn mul_add_assign(&mut self, a: &Self, b: &Self) {
        for (ea, x) in &a.terms {
            for (eb, y) in &b.terms {
                self.insert_add(ea + eb, x * y);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eval_and_units() {
        let p = LambdaPoly::from_coeffs([(0, Rational::one()), (1, Rational::new(1, 2))]);
        assert_eq!(p.eval(&Rational::from_int(2)).unwrap(), Rational::from_int(2));
        assert!(p.try_inv().is_none());
        let m = LambdaPoly::big_lambda().scale(&Rational::from_int(3));
        assert_eq!(m.mul(&m.try_inv().unwrap()), LambdaPoly::one());
    }
}
