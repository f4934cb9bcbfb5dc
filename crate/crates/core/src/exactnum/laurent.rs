use std::collections::BTreeMap;
use std::fmt;

use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};

use super::{CycScalar, Rational, Ring};
use crate::error::{Error, Result};

/// Finite sum Σ c_h λ^{h/2} with c_h ∈ Q(ξ). Keys count half-steps of λ.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LambdaLaurent {
    terms: BTreeMap<i32, CycScalar>,
}

impl LambdaLaurent {
    pub fn monomial(halfexp: i32, c: CycScalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(halfexp, c);
        }
        LambdaLaurent { terms }
    }

    /// λ^{halfexp/2}
    pub fn lambda_half(halfexp: i32) -> Self {
        Self::monomial(halfexp, CycScalar::one())
    }

    pub fn scalar(c: CycScalar) -> Self {
        Self::monomial(0, c)
    }

    pub fn rational(r: Rational) -> Self {
        Self::scalar(CycScalar::from_rational(r))
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &CycScalar)> {
        self.terms.iter().map(|(h, c)| (*h, c))
    }

    pub fn coeff(&self, halfexp: i32) -> CycScalar {
        self.terms.get(&halfexp).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The single (halfexp, coefficient) pair of a monomial.
    pub fn as_monomial(&self) -> Option<(i32, &CycScalar)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(h, c)| (*h, c))
        } else {
            None
        }
    }

    fn insert_add(&mut self, h: i32, c: CycScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(h) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// Multiply by λ^{shift/2}.
    pub fn shift(&self, shift: i32) -> Self {
        LambdaLaurent {
            terms: self.terms.iter().map(|(h, c)| (h + shift, c.clone())).collect(),
        }
    }

    /// Exact division by the monomial λ^{halfexp/2}.
    pub fn div_monomial(&self, halfexp: i32) -> Self {
        self.shift(-halfexp)
    }

    pub fn scale_cyc(&self, c: &CycScalar) -> Self {
        if c.is_zero() {
            return Self::default();
        }
        LambdaLaurent {
            terms: self.terms.iter().map(|(h, a)| (*h, a.mul(c))).collect(),
        }
    }

    /// Substitute λ ↦ s·λ for a rational s; λ^{h/2} picks up s^{h/2}, so `h` must be even
    /// wherever s is not a square. Only even exponents are supported.
    pub fn rescale_lambda(&self, s: &Rational) -> Result<Self> {
        let mut out = Self::default();
        for (h, c) in &self.terms {
            if h % 2 != 0 {
                return Err(Error::Domain(format!(
                    "cannot rescale odd half-exponent λ^{h}/2 by a rational"
                )));
            }
            out.insert_add(*h, c.scale(&s.pow(h / 2)?));
        }
        Ok(out)
    }

    /// The value as a plain rational, if every λ and ξ has cancelled.
    pub fn rationality_project(&self) -> Result<Rational> {
        if self.terms.is_empty() {
            return Ok(Rational::zero());
        }
        if let Some((0, c)) = self.as_monomial() {
            if let Some(r) = c.as_rational() {
                return Ok(r.clone());
            }
        }
        let residual = LambdaLaurent {
            terms: self
                .terms
                .iter()
                .filter_map(|(h, c)| {
                    let c = if *h == 0 {
                        let mut k = c.coeffs().clone();
                        k[0] = Rational::zero();
                        CycScalar::new(k)
                    } else {
                        c.clone()
                    };
                    (!c.is_zero()).then_some((*h, c))
                })
                .collect(),
        };
        Err(Error::CancellationFailure(residual.to_string()))
    }
}

impl fmt::Display for LambdaLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (h, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if *h == 0 {
                write!(f, "[{c}]")?;
            } else if h % 2 == 0 {
                write!(f, "[{c}]λ^{}", h / 2)?;
            } else {
                write!(f, "[{c}]λ^({h}/2)")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LambdaLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

struct Term<'a>(i32, &'a CycScalar);

impl Serialize for Term<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("halfexp", &self.0)?;
        m.serialize_entry("c", self.1)?;
        m.end()
    }
}

impl Serialize for LambdaLaurent {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (h, c) in &self.terms {
            seq.serialize_element(&Term(*h, c))?;
        }
        seq.end()
    }
}

impl Ring for LambdaLaurent {
    const NAME: &'static str = "LambdaLaurent";

    fn zero() -> Self {
        Self::default()
    }
    fn one() -> Self {
        Self::scalar(CycScalar::one())
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
        for (h, c) in &o.terms {
            out.insert_add(*h, c.neg());
        }
        out
    }
    fn neg(&self) -> Self {
        LambdaLaurent {
            terms: self.terms.iter().map(|(h, c)| (*h, c.neg())).collect(),
        }
    }
    fn mul(&self, o: &Self) -> Self {
        let mut out = Self::default();
        for (ha, a) in &self.terms {
            for (hb, b) in &o.terms {
                out.insert_add(ha + hb, a.mul(b));
            }
        }
        out
    }
    fn try_inv(&self) -> Option<Self> {
        let (h, c) = self.as_monomial()?;
        Some(Self::monomial(-h, c.inv().ok()?))
    }
    fn from_rational(r: &Rational) -> Self {
        Self::rational(r.clone())
    }
    fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("laurent element serializes")
    }
    fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::default();
        }
        LambdaLaurent {
            terms: self.terms.iter().map(|(h, c)| (*h, c.scale(r))).collect(),
        }
    }
    fn add_assign(&mut self, o: &Self) {
        for (h, c) in &o.terms {
            self.insert_add(*h, c.clone());
        }
    }
    fn mul_add_assign(&mut self, a: &Self, b: &Self) {
        for (ha, x) in &a.terms {
            for (hb, y) in &b.terms {
                self.insert_add(ha + hb, x.mul(y));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_projection() {
        let x = LambdaLaurent::rational(Rational::new(7, 3));
        assert_eq!(x.rationality_project().unwrap(), Rational::new(7, 3));
        let y = LambdaLaurent::scalar(CycScalar::xi_pow(1));
        assert!(matches!(y.rationality_project(), Err(Error::CancellationFailure(_))));
    }

    #[test]
    fn root_of_unity_sum_cancels() {
        let lam = LambdaLaurent::lambda_half(2);
        let inv = lam.try_inv().unwrap();
        let sum = (0..5).fold(LambdaLaurent::zero(), |acc, a| {
            acc.add(&LambdaLaurent::scalar(CycScalar::xi_pow(a)))
        });
        let x = lam
            .mul(&inv)
            .mul(&sum)
            .add(&LambdaLaurent::rational(Rational::from_int(5)));
        assert_eq!(x.rationality_project().unwrap(), Rational::from_int(5));
    }

    #[test]
    fn monomial_division_is_exact() {
        let x = LambdaLaurent::monomial(3, CycScalar::xi_pow(2)).add(&LambdaLaurent::rational(Rational::new(1, 2)));
        let y = x.shift(5).div_monomial(5);
        assert_eq!(x, y);
    }

    #[test]
    fn json_encoding() {
        let x = LambdaLaurent::monomial(-1, CycScalar::from_int(2));
        let v = serde_json::to_value(&x).unwrap();
        assert_eq!(v[0]["halfexp"], -1);
        assert_eq!(v[0]["c"][0]["n"], "2");
    }
}
