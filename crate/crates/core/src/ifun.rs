//! The small I-functions of the twisted and FJRW quintic theories, the
//! Birkhoff tower I_{p,q}, and the identities they satisfy.
//!
//! The φ_a-coefficient of I^λ(t, z) is
//! z·t^a/(z^a a!)·Π (Λ + (mz)⁵) over 0 < m < (a+1)/5 with m ≡ (a+1)/5 mod 1.
//! Writing w := Λ/z⁵, that is z^{1−a+5n}·t^a·c_a(w) with
//! c_a(w) = Π (m⁵ + w)/a!, so the w^j part of c_a feeds I_{(a mod 5)+5j}
//! with an explicit Λ^j. Hence I_k = Λ^{⌊k/5⌋}·(rational series) and the
//! slot of I_k is k mod 5.

use std::fmt;
use std::str::FromStr;

use serde_json::json;

use crate::error::{Error, Result};
use crate::exactnum::{q, LambdaPoly, Rational, Ring};
use crate::report::Report;
use crate::{PSeries, QSeries};

pub const VAR: &str = "t";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theory {
    /// λ-twisted 5-spin theory, Λ = λ⁵ kept symbolic.
    Twisted,
    /// FJRW theory: Λ = 0 and the untwisted φ_4 terms vanish.
    Fjrw,
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theory::Twisted => "twisted",
            Theory::Fjrw => "fjrw",
        })
    }
}

impl FromStr for Theory {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "twisted" | "lambda" => Ok(Theory::Twisted),
            "fjrw" | "w" => Ok(Theory::Fjrw),
            _ => Err(Error::Domain(format!("unknown theory {s:?}"))),
        }
    }
}

/// c_a(w) = Π (m⁵ + w)/a!, the z-normalized φ_a-coefficient. In the FJRW
/// theory w = 0 and m = 0 joins the product.
pub fn hypergeometric_coeff(a: usize, theory: Theory) -> LambdaPoly {
    let s = Rational::new(a as i64 + 1, 5);
    let mut m = s.fract_part();
    let mut p = LambdaPoly::constant(Rational::factorial(a as u64).inv().expect("a! > 0"));
    while m < s {
        match theory {
            Theory::Twisted => {
                if !m.is_zero() {
                    let factor =
                        LambdaPoly::from_coeffs([(0, m.pow(5).expect("positive power")), (1, Rational::one())]);
                    p = p.mul(&factor);
                }
            }
            Theory::Fjrw => p = p.scale(&m.pow(5).expect("positive power")),
        }
        m = &m + &Rational::one();
    }
    p
}

/// The components I_0..I_kmax, each a series in t over Q[Λ].
#[derive(Debug, Clone)]
pub struct IFunctionTable {
    pub kmax: usize,
    pub order: usize,
    pub theory: Theory,
    pub components: Vec<PSeries>,
}

impl IFunctionTable {
    pub fn component(&self, k: usize) -> &PSeries {
        &self.components[k]
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "kmax": self.kmax,
            "order": self.order,
            "theory": self.theory.to_string(),
            "components": self.components.iter().map(PSeries::to_json).collect::<Vec<_>>(),
        })
    }
}

pub fn build_ifunction(kmax: usize, order: usize, theory: Theory) -> IFunctionTable {
    let coeffs: Vec<LambdaPoly> = (0..=order).map(|a| hypergeometric_coeff(a, theory)).collect();
    let components = (0..=kmax)
        .map(|k| {
            let (r, j) = (k % 5, (k / 5) as i32);
            PSeries::from_fn(VAR, order, |a| {
                if a % 5 != r {
                    return LambdaPoly::zero();
                }
                LambdaPoly::monomial(j, coeffs[a].coeff(j))
            })
        })
        .collect();
    IFunctionTable {
        kmax,
        order,
        theory,
        components,
    }
}

/// The coefficient of Λ^j, as a rational series.
pub fn lambda_part(s: &PSeries, j: i32) -> QSeries {
    s.map(|c| c.coeff(j))
}

/// The series itself, provided no Λ survives.
pub fn lambda_free(s: &PSeries) -> Result<QSeries> {
    s.try_map(|c| match c.as_monomial() {
        None if c.is_zero() => Ok(Rational::zero()),
        Some((0, r)) => Ok(r.clone()),
        _ => Err(Error::CancellationFailure(format!("Λ-dependent coefficient {c}"))),
    })
}

/// Specialize Λ to a rational value.
pub fn at_lambda(s: &PSeries, value: &Rational) -> Result<QSeries> {
    s.try_map(|c| c.eval(value))
}

pub fn lift(s: &QSeries) -> PSeries {
    s.map(|c| LambdaPoly::constant(c.clone()))
}

/// I_k for k ≤ 4, which is Λ-free. The FJRW I_4 vanishes.
pub fn i_series(k: usize, order: usize, theory: Theory) -> QSeries {
    assert!(k <= 4, "I_k is Λ-free only for k ≤ 4");
    let t = build_ifunction(k, order, theory);
    lambda_part(t.component(k), 0)
}

pub fn i0(order: usize) -> QSeries {
    i_series(0, order, Theory::Twisted)
}

pub fn i1(order: usize) -> QSeries {
    i_series(1, order, Theory::Twisted)
}

/// τ(t) = I_1/I_0, identical in both theories.
pub fn mirror_map(order: usize) -> QSeries {
    i1(order).div(&i0(order)).expect("I_0 has constant term 1")
}

/// L = (1 − t⁵/5⁵)^{−1/5}.
pub fn l_series(order: usize) -> QSeries {
    let base = QSeries::one(VAR, order).sub(&QSeries::monomial(VAR, order, 5, q(1, 3125)));
    base.pow_rational(&q(-1, 5)).expect("constant term 1")
}

/// One row of the tower: `comps[q] = I_{p,p+q}`, the z^{−q}φ_{p+q} coefficient of M^p(I/z).
#[derive(Debug, Clone)]
pub struct BirkhoffRow {
    pub p: usize,
    pub comps: Vec<PSeries>,
}

/// M F = z d/dt (F / F(t, ∞)) on the component representation: the leading
/// slot is divided out and differentiated away, shifting every other slot down.
pub fn birkhoff_m(row: &BirkhoffRow) -> Result<BirkhoffRow> {
    let lead = row
        .comps
        .first()
        .ok_or_else(|| Error::Domain("empty Birkhoff row".into()))?;
    if lead.constant_term().try_inv().is_none() {
        return Err(Error::Domain(format!(
            "leading part I_{{{0},{0}}} has non-unit constant term {1}",
            row.p,
            lead.constant_term()
        )));
    }
    let inv = lead.inv()?;
    let comps = row.comps[1..].iter().map(|c| c.mul(&inv).derivative()).collect();
    Ok(BirkhoffRow { p: row.p + 1, comps })
}

/// I_{p,q} for 0 ≤ p ≤ pmax, p ≤ q ≤ qmax, every entry exact through t^order.
#[derive(Debug, Clone)]
pub struct BirkhoffTable {
    pub pmax: usize,
    pub qmax: usize,
    pub order: usize,
    pub theory: Theory,
    rows: Vec<BirkhoffRow>,
}

impl BirkhoffTable {
    pub fn get(&self, p: usize, qq: usize) -> Option<&PSeries> {
        if qq < p {
            return None;
        }
        self.rows.get(p)?.comps.get(qq - p)
    }

    /// I_{p,q}; panics outside the table.
    pub fn entry(&self, p: usize, qq: usize) -> &PSeries {
        self.get(p, qq)
            .unwrap_or_else(|| panic!("I_{{{p},{qq}}} outside the table"))
    }

    pub fn diag(&self, p: usize) -> &PSeries {
        self.entry(p, p)
    }

    /// Λ-free diagonal entry as a rational series.
    pub fn diag_q(&self, p: usize) -> Result<QSeries> {
        lambda_free(self.diag(p))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<_> = self
            .rows
            .iter()
            .flat_map(|r| {
                r.comps
                    .iter()
                    .enumerate()
                    .map(move |(i, s)| json!({"p": r.p, "q": r.p + i, "series": s.to_json()}))
            })
            .collect();
        json!({
            "pmax": self.pmax,
            "qmax": self.qmax,
            "order": self.order,
            "theory": self.theory.to_string(),
            "entries": entries,
        })
    }
}

pub fn ipq_table(pmax: usize, qmax: usize, order: usize, theory: Theory) -> Result<BirkhoffTable> {
    if pmax > qmax {
        return Err(Error::Domain(format!("pmax {pmax} exceeds qmax {qmax}")));
    }
    // Each application of M costs one order in t.
    let table = build_ifunction(qmax, order + pmax, theory);
    let mut row = BirkhoffRow {
        p: 0,
        comps: table.components,
    };
    let mut rows = Vec::with_capacity(pmax + 1);
    for p in 0..=pmax {
        if p > 0 {
            row = birkhoff_m(&row)?;
        }
        rows.push(BirkhoffRow {
            p,
            comps: row.comps.iter().map(|c| c.truncate(order)).collect(),
        });
    }
    Ok(BirkhoffTable {
        pmax,
        qmax,
        order,
        theory,
        rows,
    })
}

/// S*(φ_k) = M^k(I/z)/I_{k,k}: `comps[q]` multiplies z^{−q}φ_{(k+q) mod 5}.
#[derive(Debug, Clone)]
pub struct SOperator {
    pub k: usize,
    pub comps: Vec<PSeries>,
}

impl SOperator {
    pub fn slot(&self, qq: usize) -> usize {
        (self.k + qq) % 5
    }
}

pub fn s_operator_from(table: &BirkhoffTable, k: usize) -> Result<SOperator> {
    let inv = table.diag(k).inv()?;
    let comps = (k..=table.qmax).map(|qq| table.entry(k, qq).mul(&inv)).collect();
    Ok(SOperator { k, comps })
}

/// S*(φ_k) with `zdepth` powers of z^{-1}.
pub fn s_operator(k: usize, zdepth: usize, order: usize) -> Result<SOperator> {
    if k > 5 {
        return Err(Error::Domain(format!("S-operator index {k} > 5")));
    }
    let table = ipq_table(k, k + zdepth, order, Theory::Twisted)?;
    s_operator_from(&table, k)
}

/// The pairing η(φ_a, φ_b) in Q[Λ]: 5 on the anti-diagonal a + b = 3, 5Λ at (4, 4).
pub fn eta_poly(a: usize, b: usize) -> LambdaPoly {
    match (a % 5, b % 5) {
        (4, 4) => LambdaPoly::monomial(1, Rational::from_int(5)),
        (x, y) if x + y == 3 => LambdaPoly::constant(Rational::from_int(5)),
        _ => LambdaPoly::zero(),
    }
}

/// η(S*(φ_i)(z), S*(φ_j)(−z)) = η(φ_i, φ_j) through z^{−zdepth} and t^order.
pub fn verify_s_unitarity(order: usize, zdepth: usize) -> Report {
    let mut rep = Report::new("s-unitarity");
    let ops: Result<Vec<SOperator>> = ipq_table(4, 4 + zdepth, order, Theory::Twisted)
        .and_then(|table| (0..5).map(|k| s_operator_from(&table, k)).collect());
    let ops = match ops {
        Ok(o) => o,
        Err(e) => {
            rep.error("build", &e);
            return rep.finish();
        }
    };
    for i in 0..5 {
        for j in 0..5 {
            for m in 0..=zdepth {
                let mut acc = PSeries::zero(VAR, order);
                for qq in 0..=m {
                    let r = m - qq;
                    let eta = eta_poly(ops[i].slot(qq), ops[j].slot(r));
                    if eta.is_zero() {
                        continue;
                    }
                    let sign = if r % 2 == 0 { 1 } else { -1 };
                    let term = ops[i].comps[qq]
                        .mul(&ops[j].comps[r])
                        .scale(&eta.scale(&Rational::from_int(sign)));
                    acc = acc.add(&term);
                }
                let want = if m == 0 {
                    PSeries::constant(VAR, order, eta_poly(i, j))
                } else {
                    PSeries::zero(VAR, order)
                };
                rep.check_series(&format!("(i,j,m)=({i},{j},{m})"), &acc, &want, order);
            }
        }
    }
    rep.finish()
}

/// Lemma checks: (i) Π_{p<5} I_{p,p} = L⁵, (ii) I_{5,5} = Λ·I_{0,0},
/// (iii) I_{p,p} = I_{4−p,4−p}.
pub fn verify_ipp(order: usize) -> Report {
    verify_ipp_orders(order, order, order)
}

/// As [`verify_ipp`] with separate orders for the three identities.
pub fn verify_ipp_orders(order_i: usize, order_ii: usize, order_iii: usize) -> Report {
    let mut rep = Report::new("ipp");
    for r in ipp_reports(order_i, order_ii, order_iii) {
        rep.absorb(r);
    }
    rep.finish()
}

/// The three identities as separate reports, sharing one tower.
pub fn ipp_reports(order_i: usize, order_ii: usize, order_iii: usize) -> [Report; 3] {
    let mut ri = Report::new("ipp-i");
    let mut rii = Report::new("ipp-ii");
    let mut riii = Report::new("ipp-iii");
    let top = order_i.max(order_ii).max(order_iii);
    let table = match ipq_table(5, 5, top, Theory::Twisted) {
        Ok(t) => t,
        Err(e) => {
            for r in [&mut ri, &mut rii, &mut riii] {
                r.error("build", &e);
            }
            return [ri.finish(), rii.finish(), riii.finish()];
        }
    };
    let l5 = lift(&l_series(top).powi(5).expect("integer power"));
    let prod = (1..5).fold(table.diag(0).clone(), |acc, p| acc.mul(table.diag(p)));
    ri.check_series("Λ tracked", &prod, &l5, order_i);
    match (at_lambda(&prod, &Rational::zero()), at_lambda(&l5, &Rational::zero())) {
        (Ok(a), Ok(b)) => {
            ri.check_series("Λ = 0", &a, &b, order_i);
        }
        (Err(e), _) | (_, Err(e)) => ri.error("Λ = 0", &e),
    }
    let lam_i00 = table.diag(0).scale(&LambdaPoly::big_lambda());
    rii.check_series("I_55 = Λ I_00", table.diag(5), &lam_i00, order_ii);
    for p in 0..5 {
        riii.check_series(&format!("p={p}"), table.diag(p), table.diag(4 - p), order_iii);
    }
    [ri.finish(), rii.finish(), riii.finish()]
}

/// Per-coefficient Picard–Fuchs identity (((a+1)/5)⁵ + w)·c_a = (a+5)!/a!·c_{a+5},
/// with c_a read back from the I-function table (w is the Λ/z⁵ bookkeeping variable).
pub fn picard_fuchs_check(amax: usize, theory: Theory) -> Report {
    let mut rep = Report::new("pf");
    let order = amax + 5;
    let kmax = 4 + 5 * (order / 5);
    let table = build_ifunction(kmax, order, theory);
    let read = |a: usize| -> LambdaPoly {
        let r = a % 5;
        LambdaPoly::from_coeffs((0..).map(|j| r + 5 * j).take_while(|&k| k <= kmax).map(|k| {
            let j = (k / 5) as i32;
            (j, table.component(k).coeff(a).coeff(j))
        }))
    };
    let w = match theory {
        Theory::Twisted => LambdaPoly::big_lambda(),
        Theory::Fjrw => LambdaPoly::zero(),
    };
    for a in 0..=amax {
        let m5 = Rational::new(a as i64 + 1, 5).pow(5).expect("positive power");
        let lhs = LambdaPoly::constant(m5).add(&w).mul(&read(a));
        let ratio = &Rational::factorial(a as u64 + 5) / &Rational::factorial(a as u64);
        let rhs = read(a + 5).scale(&ratio);
        rep.check_eq(&format!("a={a}"), Some(a as i64), &lhs, &rhs);
        rep.check_eq(
            &format!("table vs closed form, a={a}"),
            Some(a as i64),
            &read(a),
            &hypergeometric_coeff(a, theory),
        );
    }
    rep.finish()
}

/// (d log c_2/du)² + (d log c_3/du)² = d²/du² (5/4 log L − 4 log I_0 − log I_{1,1}),
/// d/du = L⁻¹ d/dt, c_2 ∝ L²/(I_0 I_{1,1}), c_3 ∝ L/I_0.
pub fn verify_zz_identity(order: usize) -> Report {
    let mut rep = Report::new("zz");
    let n = order + 3;
    let table = match ipq_table(1, 1, n, Theory::Twisted) {
        Ok(t) => t,
        Err(e) => {
            rep.error("build", &e);
            return rep.finish();
        }
    };
    let run = || -> Result<(QSeries, QSeries)> {
        let i00 = table.diag_q(0)?;
        let i11 = table.diag_q(1)?;
        let l = l_series(n);
        let linv = l.inv()?;
        let c2 = l.mul(&l).div(&i00.mul(&i11))?;
        let c3 = l.div(&i00)?;
        let d2 = c2.log_derivative()?.mul(&linv);
        let d3 = c3.log_derivative()?.mul(&linv);
        let lhs = d2.mul(&d2).add(&d3.mul(&d3));
        let pot = potential(&l, &i00, &i11)?;
        let rhs = pot.derivative().mul(&linv).derivative().mul(&linv);
        Ok((lhs, rhs))
    };
    match run() {
        Ok((lhs, rhs)) => {
            rep.check_series("identity", &lhs, &rhs, order);
        }
        Err(e) => rep.error("identity", &e),
    }
    rep.finish()
}

/// 5/4 log L − 4 log I_0 − log I_{1,1}.
pub fn potential(l: &QSeries, i00: &QSeries, i11: &QSeries) -> Result<QSeries> {
    Ok(l.log()?
        .scale(&q(5, 4))
        .sub(&i00.log()?.scale(&Rational::from_int(4)))
        .sub(&i11.log()?))
}

fn rising_fifth(start: Rational, count: usize) -> Rational {
    let mut acc = Rational::one();
    let mut m = start;
    for _ in 0..count {
        acc = &acc * &m.pow(5).expect("positive power");
        m = &m + &Rational::one();
    }
    acc
}

/// Rational coefficient of C_{d1,d2} (without its t^{5d1+5d2−1}).
pub fn club_spade_c(d1: usize, d2: usize) -> Rational {
    let a = &rising_fifth(q(1, 5), d1) / &Rational::factorial(5 * d1 as u64);
    let b = &rising_fifth(q(2, 5), d2) / &Rational::factorial(5 * d2 as u64 + 1);
    &a * &b
}

/// t·♣ and t·♠ assembled from the double sums over d1 + d2 ≤ dmax.
pub fn club_spade_sums(dmax: usize) -> (QSeries, QSeries) {
    let order = 5 * dmax;
    let mut club = QSeries::zero(VAR, order);
    let mut spade = QSeries::zero(VAR, order);
    for d1 in 0..=dmax {
        for d2 in 0..=dmax - d1 {
            let c = club_spade_c(d1, d2);
            let (x, y) = (d1 as i64, d2 as i64);
            let k = 5 * x - 5 * y - 1;
            let cl = -5 * k * (5 * x * x + 5 * y * y - 3 * x - y);
            let sp = -k * (5 * x + 5 * y + 1);
            let e = 5 * (d1 + d2);
            club = club.add(&QSeries::monomial(VAR, order, e, c.scale(&Rational::from_int(cl))));
            spade = spade.add(&QSeries::monomial(VAR, order, e, c.scale(&Rational::from_int(sp))));
        }
    }
    (club, spade)
}

/// t·♣ and t·♠ straight from their derivative definitions in terms of I_0, I_1.
pub fn club_spade_from_series(order: usize) -> Result<(QSeries, QSeries)> {
    let n = order + 3;
    let (a, b) = (i0(n), i1(n));
    let d = |s: &QSeries, k: usize| (0..k).fold(s.clone(), |acc, _| acc.derivative());
    let (a1, a2, a3) = (d(&a, 1), d(&a, 2), d(&a, 3));
    let (b1, b2, b3) = (d(&b, 1), d(&b, 2), d(&b, 3));
    let t = QSeries::variable(VAR, n);
    // t·♣ = t²(I1'''I0 − I1 I0''' − I1''I0' + I1'I0'')
    let inner = b3.mul(&a).sub(&b.mul(&a3)).sub(&b2.mul(&a1)).add(&b1.mul(&a2));
    let club = t.mul(&t).mul(&inner).truncate(order);
    // t·♠ = t(I1''I0 − I1 I0'') + (I1'I0 − I1 I0')
    let spade = t
        .mul(&b2.mul(&a).sub(&b.mul(&a2)))
        .add(&b1.mul(&a).sub(&b.mul(&a1)))
        .truncate(order);
    Ok((club, spade))
}

/// (5⁵ − t⁵)·♣ = 5t⁵·♠ coefficientwise for d1 + d2 ≤ dmax, plus the A/B scalar relations.
pub fn verify_club_spade(dmax: usize) -> Report {
    let mut rep = Report::new("clubspade");
    let (club, spade) = club_spade_sums(dmax);
    let order = 5 * dmax;
    let p5 = Rational::from_int(3125);
    // Both sides multiplied by t; compare the t^{5D} coefficients.
    for dd in 0..=dmax {
        let e = 5 * dd;
        let mut lhs = club.coeff(e).scale(&p5);
        let mut rhs = Rational::zero();
        if dd > 0 {
            lhs = &lhs - club.coeff(e - 5);
            rhs = spade.coeff(e - 5).scale(&Rational::from_int(5));
        }
        rep.check_eq(&format!("t^{}", e as i64 - 1), Some(e as i64 - 1), &lhs, &rhs);
    }
    match club_spade_from_series(order) {
        Ok((c2, s2)) => {
            rep.check_series("♣ double sum vs derivative form", &club, &c2, order);
            rep.check_series("♠ double sum vs derivative form", &spade, &s2, order);
        }
        Err(e) => rep.error("derivative form", &e),
    }
    for d1 in 0..=dmax {
        for d2 in 0..=dmax - d1 {
            let (x, y) = (d1 as i64, d2 as i64);
            let lhs = &club_spade_a(x + 1, y) + &club_spade_b(x, y + 1);
            let rhs = Rational::new(
                5 * (5 * x - 5 * y - 1) * (5 * x * x + 5 * y * y + 2 * x + 4 * y + 1),
                3125,
            );
            rep.check_eq(&format!("A+B at ({d1},{d2})"), None, &lhs, &rhs);
            let a4 = (&Rational::from_int(x) - &q(4, 5)).pow(4).expect("power");
            let b4 = (&Rational::from_int(y) - &q(3, 5)).pow(4).expect("power");
            let f = |m: i64, shift: i64| {
                (0..4).fold(Rational::one(), |acc, i| &acc * &Rational::from_int(5 * m + shift - i))
            };
            let mut lhs = Rational::zero();
            if !a4.is_zero() {
                lhs = &lhs + &(&(&f(x, 0) / &a4) * &club_spade_a(x, y));
            }
            if !b4.is_zero() {
                lhs = &lhs + &(&(&f(y, 1) / &b4) * &club_spade_b(x, y));
            }
            let rhs = Rational::from_int((5 * x - 5 * y - 1) * (5 * x * x + 5 * y * y - 3 * x - y));
            rep.check_eq(&format!("A/B first relation at ({d1},{d2})"), None, &lhs, &rhs);
        }
    }
    rep.finish()
}

pub fn club_spade_a(d1: i64, d2: i64) -> Rational {
    let num = (&Rational::from_int(d1) - &q(4, 5)).pow(4).expect("power");
    &num / &Rational::from_int(5 * (5 * d1 + 5 * d2 - 2))
}

pub fn club_spade_b(d1: i64, d2: i64) -> Rational {
    let num = (&Rational::from_int(d2) - &q(3, 5)).pow(4).expect("power");
    -(&num / &Rational::from_int(5 * (5 * d1 + 5 * d2 - 2)))
}

/// Y = I_{2,2}/I_{1,1}, checked against (L⁵/I_0²)(dt/dτ)³ with dt/dτ obtained by
/// reverting the mirror map, differentiating in τ and substituting back.
pub fn yukawa(order: usize) -> (Option<QSeries>, Report) {
    let mut rep = Report::new("yukawa");
    let run = || -> Result<(QSeries, QSeries, QSeries)> {
        let n = order + 1;
        let table = ipq_table(2, 2, n, Theory::Twisted)?;
        let y_tracked = table.diag(2).div(table.diag(1))?;
        let y = lambda_free(&y_tracked)?;
        let tau = mirror_map(n);
        let t_of_tau = tau.reversion()?.renamed("tau");
        let dt_dtau = QSeries::compose(&t_of_tau.derivative(), &tau)?;
        let l = l_series(n);
        let i00 = i0(n);
        let rhs = l.powi(5)?.div(&i00.mul(&i00))?.mul(&dt_dtau.powi(3)?);
        let y0 = at_lambda(&y_tracked, &Rational::zero())?;
        Ok((y, rhs, y0))
    };
    match run() {
        Ok((y, rhs, y0)) => {
            rep.check_series("Y = (L⁵/I_0²)(dt/dτ)³", &y, &rhs, order);
            rep.check_series("Λ-tracked Y vs Λ = 0, t < 5", &y, &y0, 4.min(order));
            rep.check_eq("Y(0)", Some(0), y.constant_term(), &Rational::one());
            (Some(y.truncate(order)), rep.finish())
        }
        Err(e) => {
            rep.error("yukawa", &e);
            (None, rep.finish())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frozen_coefficients() {
        assert_eq!(i0(10).coeff(5), &q(1, 375_000));
        assert_eq!(i1(10).coeff(6), &q(2, 140_625));
        assert_eq!(i0(10).coeff(1), &Rational::zero());
        let tau = mirror_map(10);
        assert_eq!(tau.coeff(1), &Rational::one());
        assert_eq!(tau.coeff(6), &q(13, 1_125_000));
        assert_eq!(tau.coeff(2), &Rational::zero());
        let l = l_series(10);
        assert_eq!(l.coeff(0), &Rational::one());
        assert_eq!(l.coeff(5), &q(1, 15_625));
        assert_eq!(l.coeff(3), &Rational::zero());
    }

    #[test]
    fn closed_form_for_small_k() {
        // coefficient of t^{5d+k} in I_k is Π_{i<d}((k+1)/5 + i)⁵/(5d+k)!
        for k in 0..4 {
            let s = i_series(k, 30, Theory::Twisted);
            for d in 0..=(30 - k) / 5 {
                let want = &rising_fifth(Rational::new(k as i64 + 1, 5), d) / &Rational::factorial((5 * d + k) as u64);
                assert_eq!(s.coeff(5 * d + k), &want, "k={k} d={d}");
            }
        }
    }

    #[test]
    fn fjrw_kills_untwisted_sector() {
        let t = build_ifunction(9, 20, Theory::Fjrw);
        assert!(t.component(4).is_zero());
        assert!(t.component(7).is_zero());
        assert_eq!(lambda_part(t.component(1), 0), i1(20));
    }

    #[test]
    fn i11_t5_coefficient() {
        let t = ipq_table(1, 1, 10, Theory::Twisted).unwrap();
        let i11 = at_lambda(t.diag(1), &Rational::zero()).unwrap();
        assert_eq!(i11.coeff(5), &q(13, 187_500));
        assert_eq!(t.diag(0), build_ifunction(0, 10, Theory::Twisted).component(0));
    }

    #[test]
    fn birkhoff_examples() {
        let t = ipq_table(2, 2, 12, Theory::Twisted).unwrap();
        let tau = mirror_map(13);
        assert_eq!(lambda_free(t.diag(1)).unwrap(), tau.derivative().truncate(12));
        // I_{1,2} = d/dt (I_2/I_0)
        let i2 = i_series(2, 13, Theory::Twisted);
        let want = i2.div(&i0(13)).unwrap().derivative();
        assert_eq!(lambda_free(t.entry(1, 2)).unwrap(), want.truncate(12));
        for p in 0..=2 {
            assert!(t.diag(p).constant_term().is_one());
        }
    }

    #[test]
    fn i55_starts_at_lambda() {
        let t = ipq_table(5, 5, 6, Theory::Twisted).unwrap();
        assert_eq!(t.diag(5).constant_term(), &LambdaPoly::big_lambda());
    }

    #[test]
    fn non_unit_birkhoff_leading_part() {
        let row = BirkhoffRow {
            p: 0,
            comps: vec![PSeries::zero(VAR, 3), PSeries::one(VAR, 3)],
        };
        assert!(matches!(birkhoff_m(&row), Err(Error::Domain(_))));
    }

    #[test]
    fn s_operator_leading_slots() {
        let s0 = s_operator(0, 3, 8).unwrap();
        assert!(s0.comps[0].constant_term().is_one());
        let s1 = s_operator(1, 2, 8).unwrap();
        let t = ipq_table(1, 3, 8, Theory::Twisted).unwrap();
        assert_eq!(s1.comps[1], t.entry(1, 2).div(t.diag(1)).unwrap());
        assert_eq!(s1.slot(1), 2);
        let s5 = s_operator(5, 1, 6).unwrap();
        assert_eq!(s5.slot(0), 0);
        assert!(s5.comps[0].constant_term().is_one());
    }

    #[test]
    fn pf_amax_zero() {
        assert!(picard_fuchs_check(0, Theory::Twisted).passed());
        // c_5 = (Λ + (1/5)⁵)/5!
        let c5 = hypergeometric_coeff(5, Theory::Twisted);
        assert_eq!(c5.coeff(1), q(1, 120));
        assert_eq!(c5.coeff(0), q(1, 375_000));
    }

    #[test]
    fn club_spade_first_term() {
        let lhs = &club_spade_a(1, 0) + &club_spade_b(0, 1);
        assert_eq!(lhs, q(-5, 3125));
    }

    #[test]
    fn theory_parsing() {
        assert_eq!("lambda".parse::<Theory>().unwrap(), Theory::Twisted);
        assert_eq!("fjrw".parse::<Theory>().unwrap(), Theory::Fjrw);
        assert!("x".parse::<Theory>().is_err());
    }
}
