//! First-order R-matrix in the normalized canonical frame.
//!
//! Off-diagonal entries come from flatness, Ψ dΨ⁻¹ = [dU, R_1]; the
//! diagonal from the closed form in the potential
//! P = 5/4 log L − 4 log I_0 − log I_{1,1}, up to constants C_α with
//! Σ ξ^α C_α = 0. Entries are t-series over Q(ξ)[λ^{±1/2}] and
//! carry exactly λ⁻¹.

use serde_json::json;

use crate::error::{Error, Result};
use crate::exactnum::{q, xi, CycScalar, LambdaLaurent, Rational, Ring};
use crate::frob::{lift_q, CanonicalFrame};
use crate::ifun::{potential, VAR};
use crate::report::Report;
use crate::{LSeries, QSeries};

#[derive(Debug, Clone)]
pub struct RMatrixData {
    /// Series order of the entries (one less than the frame).
    pub order: usize,
    pub r1: Vec<Vec<LSeries>>,
    pub cconst: Vec<LambdaLaurent>,
}

impl RMatrixData {
    pub fn get(&self, alpha: usize, beta: usize) -> &LSeries {
        &self.r1[alpha][beta]
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<Vec<serde_json::Value>> = self
            .r1
            .iter()
            .map(|r| r.iter().map(LSeries::to_json).collect())
            .collect();
        json!({"order": self.order, "r1": rows, "C": self.cconst})
    }
}

/// The default normalization C_α = 0.
pub fn default_constants() -> Vec<LambdaLaurent> {
    vec![LambdaLaurent::zero(); 5]
}

/// C = (c, −c ξ⁻¹, 0, 0, 0)·λ⁻¹, which keeps Σ ξ^α C_α = 0.
pub fn sample_perturbation(c: Rational) -> Vec<LambdaLaurent> {
    let mut v = default_constants();
    v[0] = LambdaLaurent::monomial(-2, CycScalar::from_rational(c.clone()));
    v[1] = LambdaLaurent::monomial(-2, xi(-1).scale(&-&c));
    v
}

pub fn check_constraint(cconst: &[LambdaLaurent]) -> Result<()> {
    if cconst.len() != 5 {
        return Err(Error::InvalidNormalization(format!(
            "expected 5 constants, got {}",
            cconst.len()
        )));
    }
    let s = cconst.iter().enumerate().fold(LambdaLaurent::zero(), |acc, (a, c)| {
        acc.add(&c.scale_cyc(&xi(a as i64)))
    });
    if s.is_zero() {
        Ok(())
    } else {
        Err(Error::InvalidNormalization(format!("Σ ξ^α C_α = {s}")))
    }
}

/// 1/(λ L) as an LSeries.
fn inv_lambda_l(frame: &CanonicalFrame, order: usize) -> Result<LSeries> {
    let linv = frame.slice.l.inv()?.truncate(order);
    Ok(lift_q(&linv).scale(&LambdaLaurent::lambda_half(-2)))
}

/// dC^{α−β} / (5(ξ^α − ξ^β) λ du).
pub fn r1_offdiag(frame: &CanonicalFrame, alpha: usize, beta: usize) -> Result<LSeries> {
    if alpha % 5 == beta % 5 {
        return Err(Error::Domain(format!(
            "off-diagonal entry requested at α = β = {alpha}"
        )));
    }
    let n = frame.order - 1;
    let denom = xi(alpha as i64)
        .sub(&xi(beta as i64))
        .scale(&Rational::from_int(5))
        .inv()?;
    let dc = frame.d_c(alpha as i64 - beta as i64);
    Ok(dc.mul(&inv_lambda_l(frame, n)?).scale(&LambdaLaurent::scalar(denom)))
}

/// d/du P, with d/du = L⁻¹ d/dt.
pub fn potential_du(frame: &CanonicalFrame) -> Result<QSeries> {
    let s = &frame.slice;
    let p = potential(&s.l, &s.i0, &s.ipp[1])?;
    Ok(p.derivative().mul(&s.l.inv()?))
}

/// (1/(5λξ^α)) dP/du + C_α.
pub fn r1_diag(frame: &CanonicalFrame, alpha: usize, cconst: &[LambdaLaurent]) -> Result<LSeries> {
    check_constraint(cconst)?;
    let n = frame.order - 1;
    let pre = LambdaLaurent::monomial(-2, xi(-(alpha as i64)).scale(&q(1, 5)));
    let base = lift_q(&potential_du(frame)?).scale(&pre);
    Ok(base.add(&LSeries::constant(VAR, n, cconst[alpha].clone())))
}

pub fn build_r1(frame: &CanonicalFrame, cconst: &[LambdaLaurent]) -> Result<RMatrixData> {
    check_constraint(cconst)?;
    let mut r1 = Vec::with_capacity(5);
    for a in 0..5 {
        let row = (0..5)
            .map(|b| {
                if a == b {
                    r1_diag(frame, a, cconst)
                } else {
                    r1_offdiag(frame, a, b)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        r1.push(row);
    }
    Ok(RMatrixData {
        order: frame.order - 1,
        r1,
        cconst: cconst.to_vec(),
    })
}

/// (i) (Ψ dΨ⁻¹)_{αβ} = dC^{α−β}/5 by direct matrix calculus; (ii) off the
/// diagonal, (du^α − du^β)(R_1)_{αβ} reproduces it; plus symmetry and
/// λ-homogeneity of R_1.
pub fn verify_flatness(frame: &CanonicalFrame, r: &RMatrixData, order: usize) -> Report {
    let mut rep = Report::new("flatness");
    let n = frame.order - 1;
    let dpsi_inv: Vec<Vec<LSeries>> = frame
        .psi_inv
        .iter()
        .map(|row| row.iter().map(LSeries::derivative).collect())
        .collect();
    let fifth = LambdaLaurent::rational(q(1, 5));
    for a in 0..5 {
        for b in 0..5 {
            let m = (0..5).fold(LSeries::zero(VAR, n), |acc, j| {
                acc.add(&frame.psi[a][j].mul(&dpsi_inv[j][b]))
            });
            let dc = frame.d_c(a as i64 - b as i64).scale(&fifth);
            rep.check_series(&format!("(i) ({a},{b})"), &m, &dc, order);
            if a != b {
                let du = frame.du_alpha(a).sub(&frame.du_alpha(b)).truncate(n);
                rep.check_series(&format!("(ii) ({a},{b})"), &du.mul(r.get(a, b)), &m, order);
            }
            rep.check_series(&format!("symmetry ({a},{b})"), r.get(a, b), r.get(b, a), order);
            let homog = r.get(a, b).coeffs().iter().all(|c| c.terms().all(|(h, _)| h == -2));
            rep.check(&format!("λ-exponent −1 at ({a},{b})"), homog, || {
                r.get(a, b).to_string()
            });
        }
    }
    rep.finish()
}

/// (dR_1)_{αα} two ways: Σ_{β≠α}(du^β − du^α)(R_1)_{αβ}(R_1)_{βα} against d/dt of
/// the closed form, plus the intermediate reduction to (d log c_2/du)² + (d log c_3/du)².
pub fn verify_diag_consistency(frame: &CanonicalFrame, r: &RMatrixData, order: usize) -> Report {
    let mut rep = Report::new("diag");
    let n = r.order;
    let l = frame.slice.l.truncate(n);
    let run = || -> Result<QSeries> {
        let linv = l.inv()?;
        let d2 = frame.dlog_c(2).truncate(n).mul(&linv);
        let d3 = frame.dlog_c(3).truncate(n).mul(&linv);
        // times du/dt = L
        Ok(d2.mul(&d2).add(&d3.mul(&d3)).mul(&l))
    };
    let reduced = match run() {
        Ok(s) => s,
        Err(e) => {
            rep.error("reduction", &e);
            return rep.finish();
        }
    };
    for a in 0..5 {
        let mut lhs = LSeries::zero(VAR, n);
        for b in (0..5).filter(|&b| b != a) {
            let du = frame.du_alpha(b).sub(&frame.du_alpha(a)).truncate(n);
            lhs = lhs.add(&du.mul(r.get(a, b)).mul(r.get(b, a)));
        }
        let rhs = r.get(a, a).derivative();
        rep.check_series(&format!("(dR_1)_{a}{a}"), &lhs, &rhs, order);
        let pre = LambdaLaurent::monomial(-2, xi(-(a as i64)).scale(&q(1, 5)));
        rep.check_series(&format!("reduction α={a}"), &lhs, &lift_q(&reduced).scale(&pre), order);
        let scaled = r.get(a, a).sub(&LSeries::constant(VAR, n, r.cconst[a].clone()));
        let scaled = scaled.scale(&LambdaLaurent::monomial(2, xi(a as i64)));
        let base = r.get(0, 0).sub(&LSeries::constant(VAR, n, r.cconst[0].clone()));
        let base = base.scale(&LambdaLaurent::lambda_half(2));
        rep.check_series(&format!("λξ^α R_αα independent of α={a}"), &scaled, &base, order);
    }
    rep.finish()
}

/// The R-matrix suite at order N, default normalization.
pub fn verify_rmatrix(order: usize) -> Report {
    let mut rep = Report::new("rmatrix");
    let built = crate::frob::build_frame(order + 2).and_then(|f| {
        let r = build_r1(&f, &default_constants())?;
        Ok((f, r))
    });
    match built {
        Ok((frame, r)) => {
            rep.absorb(verify_flatness(&frame, &r, order));
            rep.absorb(verify_diag_consistency(&frame, &r, order));
        }
        Err(e) => rep.error("build", &e),
    }
    rep.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frob::build_frame;

    #[test]
    fn entry_examples() {
        let fr = build_frame(10).unwrap();
        let r = build_r1(&fr, &default_constants()).unwrap();
        for a in 0..5 {
            assert!(r.get(a, a).constant_term().is_zero());
            for b in 0..5 {
                assert_eq!(r.get(a, b), r.get(b, a));
                assert!(r.get(a, b).constant_term().is_zero());
            }
        }
        assert!(matches!(r1_offdiag(&fr, 2, 2), Err(Error::Domain(_))));
    }

    #[test]
    fn lambda_homogeneity() {
        let fr = build_frame(8).unwrap();
        let x = r1_offdiag(&fr, 1, 3).unwrap();
        let y = x.map(|c| c.rescale_lambda(&Rational::from_int(2)).unwrap());
        assert_eq!(y, x.scale(&LambdaLaurent::rational(q(1, 2))));
    }

    #[test]
    fn constraint_enforced() {
        let fr = build_frame(6).unwrap();
        assert!(check_constraint(&sample_perturbation(Rational::one())).is_ok());
        let mut bad = default_constants();
        bad[2] = LambdaLaurent::rational(Rational::one());
        assert!(matches!(r1_diag(&fr, 0, &bad), Err(Error::InvalidNormalization(_))));
    }

    #[test]
    fn suite_small_order() {
        let r = verify_rmatrix(8);
        assert!(r.passed(), "{r}");
    }
}
