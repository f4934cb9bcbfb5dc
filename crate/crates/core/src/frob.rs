//! Frobenius structure on the small phase space of the twisted theory:
//! pairing, quantum product, idempotents, canonical coordinates, Δ-factors,
//! the constants c_j, the transition matrix Ψ and the differentials dC^γ.
//!
//! Everything is a series in the curve parameter t. Coefficients live in
//! Q(ξ)[λ^{±1/2}]; ξ^{1/2} is fixed as ξ³.

use serde_json::json;

use crate::error::{Error, Result};
use crate::exactnum::{q, xi, zeta_half_power, CycScalar, LambdaLaurent, Rational, Ring};
use crate::ifun::{self, Theory, VAR};
use crate::report::Report;
use crate::{LSeries, QSeries};

/// λ^{halfexp/2}·series(t) with a rational series.
#[derive(Debug, Clone, PartialEq)]
pub struct MonoSeries {
    pub halfexp: i32,
    pub series: QSeries,
}

impl MonoSeries {
    pub fn new(halfexp: i32, series: QSeries) -> Self {
        MonoSeries { halfexp, series }
    }

    pub fn mul(&self, o: &Self) -> Self {
        MonoSeries::new(self.halfexp + o.halfexp, self.series.mul(&o.series))
    }

    pub fn inv(&self) -> Result<Self> {
        Ok(MonoSeries::new(-self.halfexp, self.series.inv()?))
    }

    /// d log of the series part; the λ-power drops out.
    pub fn dlog(&self) -> Result<QSeries> {
        self.series.log_derivative()
    }

    pub fn to_lseries(&self) -> LSeries {
        let h = self.halfexp;
        self.series
            .map(|c| LambdaLaurent::monomial(h, CycScalar::from_rational(c.clone())))
    }

    pub fn truncate(&self, m: usize) -> Self {
        MonoSeries::new(self.halfexp, self.series.truncate(m))
    }
}

/// A vector in the φ-basis.
pub type Vector = Vec<LSeries>;

pub fn lift_q(s: &QSeries) -> LSeries {
    s.map(|c| LambdaLaurent::rational(c.clone()))
}

pub fn scalar_series(c: LambdaLaurent, order: usize) -> LSeries {
    LSeries::constant(VAR, order, c)
}

pub fn basis_vector(i: usize, order: usize) -> Vector {
    (0..5)
        .map(|k| {
            if k == i {
                LSeries::one(VAR, order)
            } else {
                LSeries::zero(VAR, order)
            }
        })
        .collect()
}

fn zero_vector(order: usize) -> Vector {
    vec![LSeries::zero(VAR, order); 5]
}

fn vec_add(a: &Vector, b: &Vector) -> Vector {
    a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
}

fn vec_scale(a: &Vector, s: &LSeries) -> Vector {
    a.iter().map(|x| x.mul(s)).collect()
}

/// η in the φ-basis.
#[derive(Debug, Clone)]
pub struct PairingMatrix {
    pub entries: [[LambdaLaurent; 5]; 5],
}

impl PairingMatrix {
    pub fn get(&self, i: usize, j: usize) -> &LambdaLaurent {
        &self.entries[i][j]
    }

    pub fn pair(&self, x: &Vector, y: &Vector) -> LSeries {
        let order = x[0].order().min(y[0].order());
        let mut acc = LSeries::zero(VAR, order);
        for i in 0..5 {
            for j in 0..5 {
                let e = &self.entries[i][j];
                if e.is_zero() || x[i].is_zero() || y[j].is_zero() {
                    continue;
                }
                acc = acc.add(&x[i].mul(&y[j]).scale(e));
            }
        }
        acc
    }
}

pub fn build_pairing() -> PairingMatrix {
    let entries = std::array::from_fn(|i| {
        std::array::from_fn(|j| match (i, j) {
            (4, 4) => LambdaLaurent::monomial(10, CycScalar::from_int(5)),
            (a, b) if a + b == 3 => LambdaLaurent::rational(Rational::from_int(5)),
            _ => LambdaLaurent::zero(),
        })
    });
    PairingMatrix { entries }
}

/// The I-function data along the small slice, all Λ-free in the twisted theory.
#[derive(Debug, Clone)]
pub struct SliceData {
    pub order: usize,
    /// I_{p,p} for p = 0..4.
    pub ipp: Vec<QSeries>,
    pub i0: QSeries,
    pub l: QSeries,
}

impl SliceData {
    pub fn build(order: usize) -> Result<Self> {
        let table = ifun::ipq_table(4, 4, order, Theory::Twisted)?;
        let ipp = (0..5).map(|p| table.diag_q(p)).collect::<Result<Vec<_>>>()?;
        Ok(SliceData {
            order,
            ipp,
            i0: ifun::i0(order),
            l: ifun::l_series(order),
        })
    }

    /// dτ/dt = I_{1,1}.
    pub fn tau_prime(&self) -> &QSeries {
        &self.ipp[1]
    }

    pub fn f(&self) -> QSeries {
        self.ipp[2].div(&self.ipp[1]).expect("I_{1,1}(0) = 1")
    }

    pub fn g(&self) -> QSeries {
        self.ipp[4].div(&self.ipp[1]).expect("I_{1,1}(0) = 1")
    }

    /// u with du = L dt, u(0) = 0.
    pub fn u(&self) -> QSeries {
        self.l.antiderivative(Rational::zero())
    }
}

/// φ_i • φ_j = κ_{ij} φ_{(i+j) mod 5}, with κ a λ-monomial series.
#[derive(Debug, Clone)]
pub struct QuantumProductTable {
    pub order: usize,
    pub f: QSeries,
    pub g: QSeries,
    kappa: Vec<Vec<MonoSeries>>,
}

impl QuantumProductTable {
    pub fn kappa(&self, i: usize, j: usize) -> &MonoSeries {
        &self.kappa[i][j]
    }

    /// Matrix of φ_i•: entry [k][j] is the φ_k coefficient of φ_i•φ_j.
    pub fn mult_matrix(&self, i: usize) -> Vec<Vec<LSeries>> {
        let mut m = vec![vec![LSeries::zero(VAR, self.order); 5]; 5];
        for (j, k) in (0..5).map(|j| (j, (i + j) % 5)) {
            m[k][j] = self.kappa[i][j].to_lseries();
        }
        m
    }

    pub fn product(&self, x: &Vector, y: &Vector) -> Vector {
        let order = x[0].order().min(y[0].order());
        let mut out = zero_vector(order);
        for i in 0..5 {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..5 {
                if y[j].is_zero() {
                    continue;
                }
                let k = (i + j) % 5;
                let term = x[i].mul(&y[j]).mul(&self.kappa[i][j].to_lseries());
                out[k] = out[k].add(&term);
            }
        }
        out
    }
}

pub fn build_product(slice: &SliceData) -> QuantumProductTable {
    let (f, g) = (slice.f(), slice.g());
    let n = slice.order;
    let one = QSeries::one(VAR, n);
    let g_over_f = g.div(&f).expect("f(0) = 1");
    let g2_over_f = g.mul(&g_over_f);
    let k = |h: i32, s: &QSeries| MonoSeries::new(h, s.clone());
    let mut kappa = vec![vec![k(0, &one); 5]; 5];
    let mut set = |i: usize, j: usize, m: MonoSeries| {
        kappa[i][j] = m.clone();
        kappa[j][i] = m;
    };
    set(1, 1, k(0, &f));
    set(1, 3, k(0, &g));
    set(1, 4, k(10, &g));
    set(2, 2, k(0, &g_over_f));
    set(2, 3, k(10, &g2_over_f));
    set(2, 4, k(10, &g_over_f));
    set(3, 3, k(10, &g2_over_f));
    set(3, 4, k(10, &g));
    set(4, 4, k(10, &one));
    QuantumProductTable { order: n, f, g, kappa }
}

/// Idempotents, canonical coordinate, Δ-factors, c_j and Ψ.
#[derive(Debug, Clone)]
pub struct CanonicalFrame {
    pub order: usize,
    pub slice: SliceData,
    pub product: QuantumProductTable,
    pub pairing: PairingMatrix,
    /// Normalizations: tilde-φ_i = a_i φ_i.
    pub a: Vec<MonoSeries>,
    pub idempotents: Vec<Vector>,
    pub u: QSeries,
    /// Δ_α = (ξ^α λ)³ I_0²/L².
    pub delta: Vec<LSeries>,
    /// Δ_α^{1/2} = ξ^{3α/2} λ^{3/2} I_0/L.
    pub delta_half: Vec<LSeries>,
    c: Vec<MonoSeries>,
    /// Ψ_{αj} = η(tilde-e_α, φ_j).
    pub psi: Vec<Vec<LSeries>>,
    /// Ψ⁻¹_{jα}.
    pub psi_inv: Vec<Vec<LSeries>>,
}

impl CanonicalFrame {
    /// c_j for j = −1..4.
    pub fn c(&self, j: i32) -> &MonoSeries {
        &self.c[(j + 1) as usize]
    }

    /// d log c_j / dt.
    pub fn dlog_c(&self, j: i32) -> QSeries {
        self.c(j).dlog().expect("c_j has unit series part")
    }

    /// Coefficient of dt in dC^γ.
    pub fn d_c(&self, gamma: i64) -> LSeries {
        let n = self.order - 1;
        let mut acc = LSeries::zero(VAR, n);
        for j in 0..5i64 {
            let w = xi(gamma * j).mul(&zeta_half_power(-3 * gamma));
            acc = acc.add(&lift_q(&self.dlog_c(j as i32)).scale(&LambdaLaurent::scalar(w)));
        }
        acc
    }

    /// tilde-e_α = Δ_α^{1/2} e_α.
    pub fn normalized_idempotent(&self, alpha: usize) -> Vector {
        vec_scale(&self.idempotents[alpha], &self.delta_half[alpha])
    }

    /// du^α/dt = ξ^α λ L.
    pub fn du_alpha(&self, alpha: usize) -> LSeries {
        lift_q(&self.slice.l).scale(&LambdaLaurent::monomial(2, xi(alpha as i64)))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mat = |m: &Vec<Vec<LSeries>>| -> Vec<Vec<serde_json::Value>> {
            m.iter().map(|r| r.iter().map(LSeries::to_json).collect()).collect()
        };
        json!({
            "order": self.order,
            "f": self.product.f.to_json(),
            "g": self.product.g.to_json(),
            "u": self.u.to_json(),
            "delta": self.delta.iter().map(LSeries::to_json).collect::<Vec<_>>(),
            "c": (-1..5).map(|j| json!({
                "j": j,
                "lambda_halfexp": self.c(j).halfexp,
                "series": self.c(j).series.to_json(),
            })).collect::<Vec<_>>(),
            "psi": mat(&self.psi),
        })
    }
}

pub fn build_frame(order: usize) -> Result<CanonicalFrame> {
    let slice = SliceData::build(order)?;
    let product = build_product(&slice);
    let pairing = build_pairing();
    let (f, g) = (&product.f, &product.g);
    let root = |s: &QSeries| -> Result<QSeries> {
        if !s.constant_term().is_one() {
            return Err(Error::NotAUnit(format!(
                "fifth root of series with constant term {}",
                s.constant_term()
            )));
        }
        s.nth_root(5)
    };
    let (f5, g5) = (root(f)?, root(g)?);
    // f^{k/5} g^{m/5}
    let fg = |kf: i64, kg: i64| -> Result<QSeries> { Ok(f5.powi(kf)?.mul(&g5.powi(kg)?)) };
    let a = vec![
        MonoSeries::new(0, QSeries::one(VAR, order)),
        MonoSeries::new(-2, fg(-1, -2)?),
        MonoSeries::new(-4, fg(3, -4)?),
        MonoSeries::new(-6, fg(2, -6)?),
        MonoSeries::new(-8, fg(1, -3)?),
    ];
    let idempotents: Vec<Vector> = (0..5)
        .map(|alpha| {
            (0..5)
                .map(|i| {
                    let w = xi(-(i as i64) * alpha as i64).scale(&q(1, 5));
                    a[i].to_lseries().scale(&LambdaLaurent::scalar(w))
                })
                .collect()
        })
        .collect();
    let u = slice.u();
    let i0_over_l = slice.i0.div(&slice.l)?;
    let i0l2 = i0_over_l.mul(&i0_over_l);
    let delta: Vec<LSeries> = (0..5)
        .map(|al| lift_q(&i0l2).scale(&LambdaLaurent::monomial(6, xi(3 * al as i64))))
        .collect();
    let delta_half: Vec<LSeries> = (0..5)
        .map(|al| lift_q(&i0_over_l).scale(&LambdaLaurent::monomial(3, zeta_half_power(3 * al as i64))))
        .collect();
    let ipp = &slice.ipp;
    let l = &slice.l;
    let prod = |k: usize| ipp[..k].iter().fold(QSeries::one(VAR, order), |acc, s| acc.mul(s));
    let over_l = |s: QSeries, p: i64| -> Result<QSeries> { Ok(s.mul(&l.powi(-p)?)) };
    let c = vec![
        MonoSeries::new(5, QSeries::one(VAR, order)),
        MonoSeries::new(3, over_l(prod(1), 1)?),
        MonoSeries::new(1, over_l(prod(2), 2)?),
        MonoSeries::new(-1, over_l(prod(3), 3)?),
        MonoSeries::new(-3, over_l(prod(4), 4)?),
        MonoSeries::new(-5, QSeries::one(VAR, order)),
    ];
    let cj = |j: i64| c[(j + 1) as usize].to_lseries();
    let psi = (0..5i64)
        .map(|al| {
            (0..5i64)
                .map(|j| {
                    let w = xi(al * j).mul(&zeta_half_power(-3 * al));
                    cj(3 - j).scale(&LambdaLaurent::scalar(w))
                })
                .collect()
        })
        .collect();
    let psi_inv = (0..5i64)
        .map(|j| {
            (0..5i64)
                .map(|al| {
                    let w = xi(-al * j).mul(&zeta_half_power(3 * al)).scale(&q(1, 5));
                    cj(j).scale(&LambdaLaurent::scalar(w))
                })
                .collect()
        })
        .collect();
    Ok(CanonicalFrame {
        order,
        slice,
        product,
        pairing,
        a,
        idempotents,
        u,
        delta,
        delta_half,
        c,
        psi,
        psi_inv,
    })
}

fn mat_mul(a: &[Vec<LSeries>], b: &[Vec<LSeries>]) -> Vec<Vec<LSeries>> {
    let n = a[0][0].order().min(b[0][0].order());
    (0..5)
        .map(|i| {
            (0..5)
                .map(|j| (0..5).fold(LSeries::zero(VAR, n), |acc, k| acc.add(&a[i][k].mul(&b[k][j]))))
                .collect()
        })
        .collect()
}

fn check_vec(rep: &mut Report, name: &str, x: &Vector, y: &Vector, order: usize) {
    for k in 0..5 {
        if !rep.check_series(&format!("{name} [φ_{k}]"), &x[k], &y[k], order) {
            return;
        }
    }
}

/// Product-table checks: commutativity, unit, associativity on all 125 basis
/// triples, and the Frobenius property η(a•b, c) = η(a, b•c).
pub fn verify_product(frame: &CanonicalFrame, order: usize) -> Report {
    let mut rep = Report::new("product");
    let p = &frame.product;
    let n = frame.order;
    let e: Vec<Vector> = (0..5).map(|i| basis_vector(i, n)).collect();
    rep.check_eq("f(0)", Some(0), p.f.constant_term(), &Rational::one());
    rep.check_eq("g(0)", Some(0), p.g.constant_term(), &Rational::one());
    match frame.slice.ipp[0].div(&frame.slice.ipp[1]) {
        Ok(g2) => {
            rep.check_series("g = I_{0,0}/I_{1,1}", &p.g, &g2, order);
        }
        Err(err) => rep.error("g", &err),
    }
    let prods: Vec<Vec<Vector>> = (0..5)
        .map(|i| (0..5).map(|j| p.product(&e[i], &e[j])).collect())
        .collect();
    for i in 0..5 {
        check_vec(&mut rep, &format!("φ_0•φ_{i}"), &prods[0][i], &e[i], order);
        for j in 0..5 {
            check_vec(
                &mut rep,
                &format!("φ_{i}•φ_{j} commutes"),
                &prods[i][j],
                &prods[j][i],
                order,
            );
        }
    }
    for i in 0..5 {
        for j in 0..5 {
            for k in 0..5 {
                let lhs = p.product(&prods[i][j], &e[k]);
                let rhs = p.product(&e[i], &prods[j][k]);
                check_vec(&mut rep, &format!("assoc ({i},{j},{k})"), &lhs, &rhs, order);
                let l2 = frame.pairing.pair(&prods[i][j], &e[k]);
                let r2 = frame.pairing.pair(&e[i], &prods[j][k]);
                rep.check_series(&format!("Frobenius ({i},{j},{k})"), &l2, &r2, order);
            }
        }
    }
    // tilde-φ_i • tilde-φ_j = tilde-φ_{i+j}
    let tilde: Vec<Vector> = (0..5).map(|i| vec_scale(&e[i], &frame.a[i].to_lseries())).collect();
    for i in 0..5 {
        for j in 0..5 {
            let lhs = p.product(&tilde[i], &tilde[j]);
            check_vec(&mut rep, &format!("tilde ({i},{j})"), &lhs, &tilde[(i + j) % 5], order);
        }
    }
    rep.finish()
}

/// Frame checks: idempotents, Δ, Ψ, du^α, the c_j relations and dC symmetries.
pub fn verify_frame(frame: &CanonicalFrame, order: usize) -> Report {
    let mut rep = Report::new("frame");
    let n = frame.order;
    let p = &frame.product;
    let eta = &frame.pairing;
    let e = &frame.idempotents;
    let sum = e.iter().skip(1).fold(e[0].clone(), |acc, v| vec_add(&acc, v));
    check_vec(&mut rep, "Σ e_α = φ_0", &sum, &basis_vector(0, n), order);
    for al in 0..5 {
        for be in 0..5 {
            let lhs = p.product(&e[al], &e[be]);
            let rhs = if al == be { e[al].clone() } else { zero_vector(n) };
            check_vec(&mut rep, &format!("e_{al}•e_{be}"), &lhs, &rhs, order);
            let pr = eta.pair(&e[al], &e[be]);
            let want = if al == be {
                frame.delta[al].inv().expect("Δ is a unit")
            } else {
                LSeries::zero(VAR, n)
            };
            rep.check_series(&format!("η(e_{al},e_{be})"), &pr, &want, order);
            let te = eta.pair(&frame.normalized_idempotent(al), &frame.normalized_idempotent(be));
            let want = if al == be {
                LSeries::one(VAR, n)
            } else {
                LSeries::zero(VAR, n)
            };
            rep.check_series(&format!("η(ẽ_{al},ẽ_{be})"), &te, &want, order);
        }
    }
    // Δ via f, g: (ξ^α λ)³ g^{6/5} f^{-2/5}
    let via_fg = (|| -> Result<QSeries> {
        let f5 = p.f.nth_root(5)?;
        let g5 = p.g.nth_root(5)?;
        Ok(g5.powi(6)?.mul(&f5.powi(-2)?))
    })();
    match via_fg {
        Ok(s) => {
            for al in 0..5 {
                let want = lift_q(&s).scale(&LambdaLaurent::monomial(6, xi(3 * al as i64)));
                rep.check_series(&format!("Δ_{al} via f,g"), &frame.delta[al], &want, order);
            }
        }
        Err(err) => rep.error("Δ via f,g", &err),
    }
    for al in 0..5 {
        let sq = frame.delta_half[al].mul(&frame.delta_half[al]);
        rep.check_series(&format!("(Δ_{al}^{{1/2}})²"), &sq, &frame.delta[al], order);
        let lead = frame.delta[al].constant_term();
        rep.check(
            &format!("Δ_{al}(0) unit λ³ monomial"),
            lead.as_monomial().map(|(h, _)| h) == Some(6),
            || lead.to_string(),
        );
        for j in 0..5 {
            let direct = eta.pair(&frame.normalized_idempotent(al), &basis_vector(j, n));
            rep.check_series(
                &format!("Ψ_{al}{j} = η(ẽ_{al},φ_{j})"),
                &frame.psi[al][j],
                &direct,
                order,
            );
        }
    }
    let ids = [
        (&frame.psi, &frame.psi_inv, "ΨΨ⁻¹"),
        (&frame.psi_inv, &frame.psi, "Ψ⁻¹Ψ"),
    ];
    for (x, y, name) in ids {
        let m = mat_mul(x, y);
        for i in 0..5 {
            for j in 0..5 {
                let want = if i == j {
                    LSeries::one(VAR, n)
                } else {
                    LSeries::zero(VAR, n)
                };
                rep.check_series(&format!("{name} ({i},{j})"), &m[i][j], &want, order);
            }
        }
    }
    // Σ_α e_α du^α = φ_1 dτ
    let mut lhs = zero_vector(n);
    for al in 0..5 {
        lhs = vec_add(&lhs, &vec_scale(&e[al], &frame.du_alpha(al)));
    }
    let rhs = vec_scale(&basis_vector(1, n), &lift_q(frame.slice.tau_prime()));
    check_vec(&mut rep, "Σ e_α du^α = φ_1 dτ", &lhs, &rhs, order);
    for j in -1..5 {
        let prod = frame.c(j).mul(frame.c(3 - j));
        rep.check_eq(&format!("λ-power of c_{j} c_{}", 3 - j), None, &prod.halfexp, &0);
        rep.check_series(
            &format!("c_{j} c_{}", 3 - j),
            &prod.series,
            &QSeries::one(VAR, n),
            order,
        );
    }
    let m = order.saturating_sub(1).min(n - 1);
    rep.check_series("d log c_4 = 0", &frame.dlog_c(4), &QSeries::zero(VAR, n - 1), m);
    rep.check_series("dC^0 = 0", &frame.d_c(0), &LSeries::zero(VAR, n - 1), m);
    for g in 1..5 {
        let s = frame.d_c(g).add(&frame.d_c(-g));
        rep.check_series(&format!("dC^{g} + dC^-{g}"), &s, &LSeries::zero(VAR, n - 1), m);
        rep.check_series(&format!("dC^{} = dC^{g}", g + 5), &frame.d_c(g + 5), &frame.d_c(g), m);
    }
    rep.finish()
}

/// The full Frobenius suite at order N.
pub fn verify_frobenius(order: usize) -> Report {
    let mut rep = Report::new("frobenius");
    let eta = build_pairing();
    for i in 0..5 {
        for j in 0..5 {
            rep.check_eq(&format!("η symmetric ({i},{j})"), None, eta.get(i, j), eta.get(j, i));
        }
    }
    match build_frame(order + 1) {
        Ok(frame) => {
            rep.absorb(verify_product(&frame, order));
            rep.absorb(verify_frame(&frame, order));
        }
        Err(e) => rep.error("build_frame", &e),
    }
    rep.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairing_examples() {
        let eta = build_pairing();
        assert_eq!(eta.get(1, 2), &LambdaLaurent::rational(Rational::from_int(5)));
        assert_eq!(eta.get(4, 4), &LambdaLaurent::monomial(10, CycScalar::from_int(5)));
        assert!(eta.get(0, 1).is_zero());
    }

    #[test]
    fn frame_examples() {
        let fr = build_frame(8).unwrap();
        assert_eq!(fr.u.coeff(6), &q(1, 93_750));
        assert!(fr.product.f.constant_term().is_one());
        for al in 0..5 {
            let want = LambdaLaurent::monomial(6, xi(3 * al as i64));
            assert_eq!(fr.delta[al].constant_term(), &want);
        }
        // φ_4•φ_4 = λ⁵ φ_3
        let k = fr.product.kappa(4, 4);
        assert_eq!(k.halfexp, 10);
        assert!(k.series.constant_term().is_one() && k.series.valuation() == Some(0));
        assert_eq!(k.series.first_mismatch(&QSeries::one(VAR, 8)), None);
    }

    #[test]
    fn small_order_suites_pass() {
        let r = verify_frobenius(6);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn dc_leading_term_uses_c2_c3_only() {
        let fr = build_frame(8).unwrap();
        // d log c_0 = −d log c_3 and d log c_1 = −d log c_2
        let lhs = fr.d_c(1);
        let mut rhs = LSeries::zero(VAR, 7);
        for j in [2i64, 3] {
            let w = xi(j).sub(&xi(3 - j)).mul(&zeta_half_power(-3));
            rhs = rhs.add(&lift_q(&fr.dlog_c(j as i32)).scale(&LambdaLaurent::scalar(w)));
        }
        assert_eq!(lhs, rhs);
        assert!(lhs.coeff(3).is_zero());
        assert!(!lhs.coeff(4).is_zero());
    }
}
