//! Genus-one potentials: the semisimple reconstruction formula, the twisted
//! and FJRW closed forms, and the one-point constants.

use serde::Serialize;

use crate::error::Result;
use crate::exactnum::{q, xi, LambdaLaurent, Rational, Ring};
use crate::frob::{build_frame, CanonicalFrame};
use crate::ifun::{self, Theory, VAR};
use crate::report::Report;
use crate::rmat::{build_r1, default_constants, RMatrixData};
use crate::{LSeries, QSeries};

/// Exponent of I_0 in the twisted closed form.
pub fn twisted_i0_exponent() -> Rational {
    &q(5, 24) - &Rational::from_int(2)
}

/// Exponent of I_0 in the FJRW closed form, obtained from the comparison.
pub fn fjrw_i0_exponent() -> Rational {
    &twisted_i0_exponent() + &comparison_shift()
}

/// (one-point FJRW) − (one-point twisted).
pub fn comparison_shift() -> Rational {
    &one_point_constant(Theory::Fjrw) - &one_point_constant(Theory::Twisted)
}

/// −1/12 log(1 − t⁵/5⁵) − 1/2 log I_{1,1}, the part shared by both closed forms.
fn common_part(order: usize) -> Result<QSeries> {
    let n = order + 1;
    let base = QSeries::one(VAR, order).sub(&QSeries::monomial(VAR, order, 5, q(1, 3125)));
    let i11 = ifun::mirror_map(n).derivative();
    Ok(base.log()?.scale(&q(-1, 12)).sub(&i11.log()?.scale(&q(1, 2))))
}

fn closed_form(order: usize, i0_exp: &Rational) -> Result<QSeries> {
    let i0 = ifun::i0(order);
    Ok(i0.log()?.scale(i0_exp).add(&common_part(order)?))
}

/// log(I_0^{5/24−2} (1 − (t/5)⁵)^{−1/12} τ'(t)^{−1/2}).
pub fn f1_closed_twisted(order: usize) -> Result<QSeries> {
    closed_form(order, &twisted_i0_exponent())
}

/// log(I_0^{−31/3} (1 − (t/5)⁵)^{−1/12} τ'(t)^{−1/2}).
pub fn f1_closed_fjrw(order: usize) -> Result<QSeries> {
    closed_form(order, &q(-31, 3))
}

/// dF_1/dt before projection: Σ_α (1/48 Δ_α'/Δ_α + 1/2 (R_1)_{αα} ξ^α λ L).
pub fn f1_derivative_raw(frame: &CanonicalFrame, r: &RMatrixData) -> Result<LSeries> {
    let n = r.order;
    let mut acc = LSeries::zero(VAR, n);
    for a in 0..5 {
        let dlog = frame.delta[a].log_derivative()?.truncate(n);
        acc = acc.add(&dlog.scale(&LambdaLaurent::rational(q(1, 48))));
        let du = frame.du_alpha(a).truncate(n);
        acc = acc.add(&r.get(a, a).mul(&du).scale(&LambdaLaurent::rational(q(1, 2))));
    }
    Ok(acc)
}

/// F_1 from the reconstruction formula with the given R-matrix, F_1(0) = 0.
pub fn f1_with(frame: &CanonicalFrame, r: &RMatrixData) -> Result<QSeries> {
    let raw = f1_derivative_raw(frame, r)?;
    let d = raw.try_map(|c| c.rationality_project())?;
    Ok(d.antiderivative(Rational::zero()))
}

/// F_1 through t^N from the reconstruction formula, default normalization.
pub fn f1_from_formula(order: usize) -> Result<QSeries> {
    let frame = build_frame(order + 1)?;
    let r = build_r1(&frame, &default_constants())?;
    Ok(f1_with(&frame, &r)?.truncate(order))
}

/// Σ (−1)^deg over a homogeneous basis of the state space.
pub fn supertrace_dimension(degrees: &[u32]) -> i64 {
    degrees.iter().map(|d| if d % 2 == 0 { 1 } else { -1 }).sum()
}

/// Degrees of the basis: φ_i in degree 2i, plus 204 odd classes of degree 3 in the FJRW case.
pub fn state_space_degrees(theory: Theory) -> Vec<u32> {
    match theory {
        Theory::Twisted => (0..5).map(|i| 2 * i).collect(),
        Theory::Fjrw => (0..4).map(|i| 2 * i).chain(std::iter::repeat(3).take(204)).collect(),
    }
}

/// ⟨φ_0 ψ_1⟩_{1,1} = χ/24 with χ the supertrace of the identity.
pub fn one_point_constant(theory: Theory) -> Rational {
    let chi = supertrace_dimension(&state_space_degrees(theory));
    Rational::from_int(chi).scale(&crate::cohft::psi_integral(1, &[1]))
}

/// fjrw = twisted + (χ^w − χ^λ)/24 · log I_0.
pub fn verify_comparison(order: usize) -> Report {
    let mut rep = Report::new("comparison");
    let run = || -> Result<(QSeries, QSeries)> {
        let tw = f1_closed_twisted(order)?;
        let fj = f1_closed_fjrw(order)?;
        let shifted = tw.add(&ifun::i0(order).log()?.scale(&comparison_shift()));
        Ok((fj, shifted))
    };
    match run() {
        Ok((fj, shifted)) => {
            rep.check_series("fjrw = twisted + shift·log I_0", &fj, &shifted, order);
        }
        Err(e) => rep.error("comparison", &e),
    }
    rep.check_eq("I_0 exponent", None, &fjrw_i0_exponent(), &q(-31, 3));
    rep.check_eq("shift", None, &comparison_shift(), &q(-205, 24));
    rep.check_eq("one-point fjrw", None, &one_point_constant(Theory::Fjrw), &q(-200, 24));
    rep.check_eq(
        "one-point twisted",
        None,
        &one_point_constant(Theory::Twisted),
        &q(5, 24),
    );
    rep.check_eq(
        "state-space dimension",
        None,
        &state_space_degrees(Theory::Fjrw).len(),
        &208,
    );
    rep.finish()
}

/// Central check: the reconstruction formula equals the twisted closed form,
/// with λ/ξ-cancellation, invariance under the constrained C_α perturbation
/// and support in 5N₀.
pub fn verify_genus_one(order: usize) -> Report {
    let mut rep = Report::new("genus1");
    let run = || -> Result<(QSeries, QSeries, QSeries)> {
        let frame = build_frame(order + 1)?;
        let r0 = build_r1(&frame, &default_constants())?;
        let f1 = f1_with(&frame, &r0)?;
        let rc = build_r1(&frame, &crate::rmat::sample_perturbation(Rational::one()))?;
        let f1c = f1_with(&frame, &rc)?;
        Ok((f1, f1c, f1_closed_twisted(order)?))
    };
    match run() {
        Ok((f1, f1c, closed)) => {
            rep.check_series("formula = closed form", &f1, &closed, order);
            rep.check_series("C_α perturbation", &f1c, &f1, order);
            let bad = (0..=order).find(|&k| k % 5 != 0 && !f1.coeff(k).is_zero());
            rep.check("support in 5N", bad.is_none(), || {
                format!("nonzero t^{} coefficient", bad.unwrap_or(0))
            });
            rep.check_eq("F_1(0)", Some(0), f1.constant_term(), &Rational::zero());
        }
        Err(e) => rep.error("genus1", &e),
    }
    // the α-averaged trace Σ ξ^α λ R_αα is ξ- and λ-free
    if let Ok(frame) = build_frame(order.min(12) + 1) {
        if let Ok(r) = build_r1(&frame, &default_constants()) {
            let tr = (0..5).fold(LSeries::zero(VAR, r.order), |acc, a| {
                acc.add(&r.get(a, a).scale(&LambdaLaurent::monomial(2, xi(a as i64))))
            });
            let ok = tr.coeffs().iter().all(|c| c.rationality_project().is_ok());
            rep.check("trace Σ ξ^α λ R_αα rational", ok, || tr.to_string());
        }
    }
    rep.finish()
}

/// Output bundle for the CLI.
#[derive(Debug, Clone, Serialize)]
pub struct GenusOneSeries {
    pub theory: String,
    pub order: usize,
    pub series: serde_json::Value,
}

pub fn f1_closed(theory: Theory, order: usize) -> Result<QSeries> {
    match theory {
        Theory::Twisted => f1_closed_twisted(order),
        Theory::Fjrw => f1_closed_fjrw(order),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_leading_terms() {
        let tw = f1_closed_twisted(6).unwrap();
        let fj = f1_closed_fjrw(6).unwrap();
        for k in 0..5 {
            assert!(tw.coeff(k).is_zero() && fj.coeff(k).is_zero());
        }
        assert_eq!(tw.coeff(5), &q(-23, 1_800_000));
        assert_eq!(fj.coeff(5), &q(-1, 28_125));
        let via = &q(-23, 1_800_000) + &(&q(-205, 24) * &q(1, 375_000));
        assert_eq!(via, q(-1, 28_125));
    }

    #[test]
    fn one_point_constants() {
        assert_eq!(one_point_constant(Theory::Fjrw), q(-200, 24));
        assert_eq!(one_point_constant(Theory::Twisted), q(5, 24));
        assert_eq!(comparison_shift(), q(-205, 24));
        assert_eq!(fjrw_i0_exponent(), q(-31, 3));
    }

    #[test]
    fn formula_matches_at_low_order() {
        let f1 = f1_from_formula(10).unwrap();
        assert_eq!(f1, f1_closed_twisted(10).unwrap());
    }
}
