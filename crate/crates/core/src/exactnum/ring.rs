use std::fmt;

use super::Rational;

/// Commutative ring with exact equality, used as the coefficient ring of
/// [`crate::pseries::TruncatedSeries`].
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    /// Tag written into serialized series.
    const NAME: &'static str;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// `None` when `self` is not a unit.
    fn try_inv(&self) -> Option<Self>;
    fn from_rational(r: &Rational) -> Self;
    fn to_json(&self) -> serde_json::Value;

    fn scale(&self, r: &Rational) -> Self {
        self.mul(&Self::from_rational(r))
    }

    fn add_assign(&mut self, other: &Self) {
        *self = self.add(other);
    }

    /// `self += a * b`
    fn mul_add_assign(&mut self, a: &Self, b: &Self) {
        if !a.is_zero() && !b.is_zero() {
            self.add_assign(&a.mul(b));
        }
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

impl Ring for Rational {
    const NAME: &'static str = "Q";

    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn try_inv(&self) -> Option<Self> {
        self.inv().ok()
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("rational serializes")
    }
    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
    fn add_assign(&mut self, other: &Self) {
        *self += other;
    }
}
