//! Truncated power series in one variable over an exact coefficient ring.
//!
//! A series of order N keeps the coefficients of x⁰..x^N. Binary operations
//! on series of different orders work at the smaller order; the derivative
//! drops one order and the antiderivative adds one.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde_json::json;

use crate::error::{Error, Result};
use crate::exactnum::{Rational, Ring};

#[derive(Clone, PartialEq)]
pub struct TruncatedSeries<R: Ring> {
    var: String,
    order: usize,
    coeffs: Vec<R>,
}

impl<R: Ring> TruncatedSeries<R> {
    /// Builds a series from leading coefficients; missing ones are zero, extra ones dropped.
    pub fn new(var: &str, order: usize, coeffs: Vec<R>) -> Self {
        let mut coeffs = coeffs;
        coeffs.resize(order + 1, R::zero());
        TruncatedSeries {
            var: var.to_string(),
            order,
            coeffs,
        }
    }

    pub fn zero(var: &str, order: usize) -> Self {
        Self::new(var, order, Vec::new())
    }

    pub fn constant(var: &str, order: usize, c: R) -> Self {
        Self::new(var, order, vec![c])
    }

    pub fn one(var: &str, order: usize) -> Self {
        Self::constant(var, order, R::one())
    }

    /// c·x^k
    pub fn monomial(var: &str, order: usize, k: usize, c: R) -> Self {
        let mut s = Self::zero(var, order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// The series x.
    pub fn variable(var: &str, order: usize) -> Self {
        Self::monomial(var, order, 1, R::one())
    }

    pub fn from_fn(var: &str, order: usize, f: impl FnMut(usize) -> R) -> Self {
        TruncatedSeries {
            var: var.to_string(),
            order,
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Coefficient of x^k; errors past the order.
    pub fn coefficient(&self, k: usize) -> Result<&R> {
        self.coeffs.get(k).ok_or(Error::OutOfOrder { k, order: self.order })
    }

    /// Coefficient of x^k. Panics past the order.
    pub fn coeff(&self, k: usize) -> &R {
        &self.coeffs[k]
    }

    pub fn constant_term(&self) -> &R {
        &self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(R::is_zero)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn renamed(mut self, var: &str) -> Self {
        self.var = var.to_string();
        self
    }

    /// Drops everything above x^m (m ≤ order).
    pub fn truncate(&self, m: usize) -> Self {
        let m = m.min(self.order);
        TruncatedSeries {
            var: self.var.clone(),
            order: m,
            coeffs: self.coeffs[..=m].to_vec(),
        }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> TruncatedSeries<S> {
        TruncatedSeries {
            var: self.var.clone(),
            order: self.order,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn try_map<S: Ring>(&self, f: impl Fn(&R) -> Result<S>) -> Result<TruncatedSeries<S>> {
        Ok(TruncatedSeries {
            var: self.var.clone(),
            order: self.order,
            coeffs: self.coeffs.iter().map(f).collect::<Result<_>>()?,
        })
    }

    fn common_order(&self, other: &Self) -> usize {
        debug_assert_eq!(self.var, other.var, "series in different variables");
        self.order.min(other.order)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.common_order(other);
        Self::from_fn(&self.var, n, |k| self.coeffs[k].add(&other.coeffs[k]))
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.common_order(other);
        Self::from_fn(&self.var, n, |k| self.coeffs[k].sub(&other.coeffs[k]))
    }

    pub fn neg(&self) -> Self {
        self.map(R::neg)
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|a| a.mul(c))
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.map(|a| a.scale(r))
    }

    /// Schoolbook product; zero coefficients are skipped, which matters for
    /// the mod-5 sparse series of the quintic.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.common_order(other);
        let mut out = vec![R::zero(); n + 1];
        let rhs: Vec<(usize, &R)> = other.coeffs[..=n]
            .iter()
            .enumerate()
            .filter(|(_, b)| !b.is_zero())
            .collect();
        for (i, a) in self.coeffs[..=n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for &(j, b) in &rhs {
                if i + j > n {
                    break;
                }
                out[i + j].mul_add_assign(a, b);
            }
        }
        Self::new(&self.var, n, out)
    }

    /// Multiply by x^k.
    pub fn shift_up(&self, k: usize) -> Self {
        Self::from_fn(&self.var, self.order, |i| {
            if i >= k {
                self.coeffs[i - k].clone()
            } else {
                R::zero()
            }
        })
    }

    /// Exact division by x^k; the order drops by k.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if k > self.order {
            return Err(Error::OutOfOrder { k, order: self.order });
        }
        if let Some(j) = self.coeffs[..k].iter().position(|c| !c.is_zero()) {
            return Err(Error::Domain(format!(
                "series not divisible by {}^{k}: coefficient {j} is {}",
                self.var, self.coeffs[j]
            )));
        }
        Ok(Self::new(&self.var, self.order - k, self.coeffs[k..].to_vec()))
    }

    pub fn inv(&self) -> Result<Self> {
        let b0 = self.coeffs[0]
            .try_inv()
            .ok_or_else(|| Error::NotAUnit(format!("constant term {}", self.coeffs[0])))?;
        let n = self.order;
        let mut b: Vec<R> = Vec::with_capacity(n + 1);
        b.push(b0.clone());
        let nz: Vec<(usize, &R)> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, a)| !a.is_zero())
            .collect();
        for m in 1..=n {
            let mut acc = R::zero();
            for &(k, a) in &nz {
                if k > m {
                    break;
                }
                acc.mul_add_assign(a, &b[m - k]);
            }
            b.push(acc.mul(&b0).neg());
        }
        Ok(Self::new(&self.var, n, b))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        let n = self.common_order(other);
        Ok(self.truncate(n).mul(&other.truncate(n).inv()?))
    }

    /// Non-negative or negative integer power.
    pub fn powi(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one(&self.var, self.order);
        let mut p = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&p);
            }
            k >>= 1;
            if k > 0 {
                p = p.mul(&p);
            }
        }
        Ok(acc)
    }

    /// d/dx; the result has order N − 1.
    pub fn derivative(&self) -> Self {
        if self.order == 0 {
            return Self::zero(&self.var, 0);
        }
        Self::from_fn(&self.var, self.order - 1, |k| {
            self.coeffs[k + 1].scale(&Rational::from_int(k as i64 + 1))
        })
    }

    /// ∫ with constant term `c`; the result has order N + 1.
    pub fn antiderivative(&self, c: R) -> Self {
        Self::from_fn(&self.var, self.order + 1, |k| {
            if k == 0 {
                c.clone()
            } else {
                self.coeffs[k - 1].scale(&Rational::new(1, k as i64))
            }
        })
    }

    fn require_constant(&self, want_one: bool, what: &str) -> Result<()> {
        let c = &self.coeffs[0];
        let ok = if want_one { c.is_one() } else { c.is_zero() };
        if ok {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "{what} needs constant term {}, got {c}",
                if want_one { 1 } else { 0 }
            )))
        }
    }

    /// d/dx log(self), valid at order N − 1 and defined for any unit constant term.
    pub fn log_derivative(&self) -> Result<Self> {
        self.derivative().div(self)
    }

    pub fn log(&self) -> Result<Self> {
        self.require_constant(true, "log")?;
        if self.order == 0 {
            return Ok(Self::zero(&self.var, 0));
        }
        Ok(self.log_derivative()?.antiderivative(R::zero()))
    }

    pub fn exp(&self) -> Result<Self> {
        self.require_constant(false, "exp")?;
        let n = self.order;
        let mut b = vec![R::one()];
        for m in 1..=n {
            let mut acc = R::zero();
            for k in 1..=m {
                let a = &self.coeffs[k];
                if a.is_zero() {
                    continue;
                }
                acc.mul_add_assign(&a.scale(&Rational::from_int(k as i64)), &b[m - k]);
            }
            b.push(acc.scale(&Rational::new(1, m as i64)));
        }
        Ok(Self::new(&self.var, n, b))
    }

    /// self^α for rational α and constant term 1, by the power recurrence
    /// m·b_m = Σ_{k≥1} ((α+1)k − m) a_k b_{m−k}.
    pub fn pow_rational(&self, alpha: &Rational) -> Result<Self> {
        self.require_constant(true, "rational power")?;
        let n = self.order;
        let alpha1 = alpha + &Rational::one();
        let mut b = vec![R::one()];
        for m in 1..=n {
            let mut acc = R::zero();
            for k in 1..=m {
                let a = &self.coeffs[k];
                if a.is_zero() {
                    continue;
                }
                let w = &(&alpha1 * &Rational::from_int(k as i64)) - &Rational::from_int(m as i64);
                acc.mul_add_assign(&a.scale(&w), &b[m - k]);
            }
            b.push(acc.scale(&Rational::new(1, m as i64)));
        }
        Ok(Self::new(&self.var, n, b))
    }

    /// The monic n-th root, computed as exp(log(self)/n).
    pub fn nth_root(&self, n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("zeroth root".into()));
        }
        self.log()?.scale_rational(&Rational::new(1, n as i64)).exp()
    }

    /// outer(inner) by Horner's rule; inner must have zero constant term.
    pub fn compose(outer: &Self, inner: &Self) -> Result<Self> {
        inner.require_constant(false, "composition inner series")?;
        let n = outer.order.min(inner.order);
        let inner = inner.truncate(n);
        let mut acc = Self::constant(&inner.var, n, outer.coeffs[n].clone());
        for k in (0..n).rev() {
            acc = acc.mul(&inner);
            acc.coeffs[0].add_assign(&outer.coeffs[k]);
        }
        Ok(acc)
    }

    /// Compositional inverse by Lagrange inversion: b_m = (1/m)[x^{m−1}](x/a)^m.
    pub fn reversion(&self) -> Result<Self> {
        self.require_constant(false, "reversion")?;
        let n = self.order;
        if n == 0 {
            return Ok(Self::zero(&self.var, 0));
        }
        if self.coeffs[1].try_inv().is_none() {
            return Err(Error::Domain(format!(
                "reversion needs an invertible linear coefficient, got {}",
                self.coeffs[1]
            )));
        }
        let h = self.shift_down(1)?.inv()?;
        let mut out = vec![R::zero(); n + 1];
        let mut p = h.clone();
        for (m, slot) in out.iter_mut().enumerate().skip(1) {
            *slot = p.coeffs[m - 1].scale(&Rational::new(1, m as i64));
            if m < n {
                p = p.mul(&h);
            }
        }
        Ok(Self::new(&self.var, n, out))
    }

    /// First exponent ≤ min order where the two series differ.
    pub fn first_mismatch(&self, other: &Self) -> Option<usize> {
        let n = self.order.min(other.order);
        (0..=n).find(|&k| self.coeffs[k] != other.coeffs[k])
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "var": self.var,
            "order": self.order,
            "ring": R::NAME,
            "coeffs": self.coeffs.iter().map(R::to_json).collect::<Vec<_>>(),
        })
    }
}

impl TruncatedSeries<Rational> {
    /// `exponent,coefficient` rows for the nonzero coefficients.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("exponent,coefficient\n");
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                s.push_str(&format!("{k},{c}\n"));
            }
        }
        s
    }
}

impl<R: Ring> fmt::Display for TruncatedSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c}){}", self.var)?,
                _ => write!(f, "({c}){}^{k}", self.var)?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O({}^{})", self.var, self.order + 1)
    }
}

impl<R: Ring> fmt::Debug for TruncatedSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<R: Ring> Add for &TruncatedSeries<R> {
    type Output = TruncatedSeries<R>;
    fn add(self, rhs: Self) -> TruncatedSeries<R> {
        TruncatedSeries::add(self, rhs)
    }
}

impl<R: Ring> Sub for &TruncatedSeries<R> {
    type Output = TruncatedSeries<R>;
    fn sub(self, rhs: Self) -> TruncatedSeries<R> {
        TruncatedSeries::sub(self, rhs)
    }
}

impl<R: Ring> Mul for &TruncatedSeries<R> {
    type Output = TruncatedSeries<R>;
    fn mul(self, rhs: Self) -> TruncatedSeries<R> {
        TruncatedSeries::mul(self, rhs)
    }
}

impl<R: Ring> Neg for &TruncatedSeries<R> {
    type Output = TruncatedSeries<R>;
    fn neg(self) -> TruncatedSeries<R> {
        TruncatedSeries::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::q;

    type S = TruncatedSeries<Rational>;

    fn s(order: usize, c: &[i64]) -> S {
        S::new("t", order, c.iter().map(|&x| Rational::from_int(x)).collect())
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(s(3, &[1, 1]).mul(&s(3, &[1, -1])), s(3, &[1, 0, -1]));
        assert_eq!(s(3, &[1, -1]).inv().unwrap(), s(3, &[1, 1, 1, 1]));
        assert_eq!(s(1, &[0, 1]).mul(&s(1, &[0, 1])), s(1, &[]));
    }

    #[test]
    fn non_unit_division_errors() {
        assert!(matches!(s(3, &[1]).div(&s(3, &[0, 1])), Err(Error::NotAUnit(_))));
    }

    #[test]
    fn calculus_examples() {
        let l = s(3, &[1, 1]).log().unwrap();
        assert_eq!(l, S::new("t", 3, vec![q(0, 1), q(1, 1), q(-1, 2), q(1, 3)]));
        let r = s(2, &[1, 5]).nth_root(5).unwrap();
        assert_eq!(r, s(2, &[1, 1, -2]));
        assert_eq!(r.powi(5).unwrap(), s(2, &[1, 5]));
        assert_eq!(s(3, &[0, 0, 0, 1]).derivative(), s(2, &[0, 0, 3]));
    }

    #[test]
    fn log_needs_unit_constant() {
        let e = s(3, &[2, 1]).log().unwrap_err();
        assert!(e.to_string().contains("got 2"));
        assert!(s(3, &[1]).exp().is_err());
    }

    #[test]
    fn composition_examples() {
        let geo = s(4, &[1, 1, 1, 1, 1]);
        let t2 = s(4, &[0, 0, 1]);
        assert_eq!(S::compose(&geo, &t2).unwrap(), s(4, &[1, 0, 1, 0, 1]));
        let x = S::variable("t", 4);
        let inner = s(4, &[0, 3, 0, 7]);
        assert_eq!(S::compose(&x, &inner).unwrap(), inner);
        let log1p = s(4, &[1, 1]).log().unwrap();
        let expm1 = S::variable("t", 4).exp().unwrap().sub(&S::one("t", 4));
        assert_eq!(S::compose(&log1p, &expm1).unwrap(), x);
    }

    #[test]
    fn reversion_examples() {
        let t = S::variable("t", 5);
        assert_eq!(t.reversion().unwrap(), t);
        assert_eq!(s(3, &[0, 1, 1]).reversion().unwrap(), s(3, &[0, 1, -1, 2]));
        assert_eq!(
            s(2, &[0, 2]).reversion().unwrap(),
            S::new("t", 2, vec![q(0, 1), q(1, 2)])
        );
        assert!(s(3, &[0, 0, 1]).reversion().is_err());
    }

    #[test]
    fn coefficient_access() {
        assert_eq!(s(2, &[1, 0, 3]).coefficient(2).unwrap(), &Rational::from_int(3));
        assert_eq!(s(1, &[0, 1]).coefficient(0).unwrap(), &Rational::zero());
        assert!(matches!(
            s(2, &[1]).coefficient(3),
            Err(Error::OutOfOrder { k: 3, order: 2 })
        ));
        assert!(S::zero("t", 5).exp().unwrap().sub(&S::one("t", 5)).is_zero());
    }

    #[test]
    fn orders_move_with_calculus() {
        let a = s(6, &[1, 2, 3]);
        assert_eq!(a.derivative().order(), 5);
        assert_eq!(a.antiderivative(Rational::zero()).order(), 7);
        assert_eq!(a.add(&s(4, &[1])).order(), 4);
    }

    #[test]
    fn csv_rows() {
        assert_eq!(s(3, &[0, 1, 0, 2]).to_csv(), "exponent,coefficient\n1,1\n3,2\n");
    }
}
