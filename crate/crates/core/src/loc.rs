//! Localization data with the equivariant parameter set to α = 1: sector
//! I-functions with coefficients rational in z, recursion coefficients,
//! the residue conditions, edge terms and the tail series.
//!
//! Degrees are multiples of 1/5. The heart sector is graded by q = Q^{1/5},
//! the diamond sector by Q. `Theory::Twisted` is the λ theory and
//! `Theory::Fjrw` its specialization Λ = 0.

use std::fmt;

use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::exactnum::{q, LambdaPoly, Rational, Ring};
use crate::ifun::{self, Theory};
use crate::report::Report;

type Poly = Vec<LambdaPoly>;

fn poly_trim(p: &mut Poly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![LambdaPoly::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j].mul_add_assign(x, y);
        }
    }
    poly_trim(&mut out);
    out
}

fn poly_eval(p: &Poly, z: &Rational) -> LambdaPoly {
    p.iter().rev().fold(LambdaPoly::zero(), |acc, c| acc.scale(z).add(c))
}

/// Quotient by (z − r), assuming r is a root.
fn poly_div_linear(p: &Poly, r: &Rational) -> Poly {
    let n = p.len();
    if n <= 1 {
        return Vec::new();
    }
    let mut out = vec![LambdaPoly::zero(); n - 1];
    let mut carry = LambdaPoly::zero();
    for i in (1..n).rev() {
        carry = p[i].add(&carry.scale(r));
        out[i - 1] = carry.clone();
    }
    out
}

/// (k z + c)^5 + Λ·lam, as a polynomial in z.
fn fifth_power_plus(k: &Rational, c: &Rational, lam: bool) -> Poly {
    let binom = [1, 5, 10, 10, 5, 1];
    let mut p: Poly = (0..=5)
        .map(|j| {
            let v = &(&Rational::from_int(binom[j]) * &k.pow(j as i32).unwrap_or_default())
                * &c.pow(5 - j as i32).unwrap_or_else(|_| Rational::zero());
            LambdaPoly::constant(v)
        })
        .collect();
    if lam {
        p[0] = p[0].add(&LambdaPoly::big_lambda());
    }
    poly_trim(&mut p);
    p
}

/// N(z) / (z^e Π (z − r_i)) with N over Q[Λ] and nonzero rational r_i.
#[derive(Clone, PartialEq)]
pub struct ZRational {
    num: Poly,
    zpow: u32,
    roots: Vec<Rational>,
}

impl ZRational {
    pub fn constant(c: LambdaPoly) -> Self {
        Self::new(vec![c], 0, Vec::new())
    }

    pub fn zero() -> Self {
        Self::new(Vec::new(), 0, Vec::new())
    }

    /// Builds N / (z^zpow Π(z − r)), cancelling common factors.
    pub fn new(num: Poly, zpow: i32, roots: Vec<Rational>) -> Self {
        let mut num = num;
        poly_trim(&mut num);
        let mut zp = zpow;
        if zp < 0 {
            let mut shifted = vec![LambdaPoly::zero(); (-zp) as usize];
            shifted.extend(num);
            num = shifted;
            zp = 0;
        }
        assert!(roots.iter().all(|r| !r.is_zero()), "zero root belongs in zpow");
        let mut out = ZRational {
            num,
            zpow: zp as u32,
            roots,
        };
        out.reduce();
        out
    }

    fn reduce(&mut self) {
        if self.num.is_empty() {
            self.zpow = 0;
            self.roots.clear();
            return;
        }
        while self.zpow > 0 && self.num[0].is_zero() {
            self.num.remove(0);
            self.zpow -= 1;
        }
        let mut kept = Vec::with_capacity(self.roots.len());
        for r in std::mem::take(&mut self.roots) {
            if poly_eval(&self.num, &r).is_zero() {
                self.num = poly_div_linear(&self.num, &r);
            } else {
                kept.push(r);
            }
        }
        kept.sort();
        self.roots = kept;
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    pub fn numerator(&self) -> &[LambdaPoly] {
        &self.num
    }

    /// Poles other than z = 0, with multiplicity.
    pub fn poles(&self) -> &[Rational] {
        &self.roots
    }

    pub fn pole_order_at_zero(&self) -> u32 {
        self.zpow
    }

    pub fn mul(&self, o: &ZRational) -> ZRational {
        let mut roots = self.roots.clone();
        roots.extend(o.roots.iter().cloned());
        ZRational::new(poly_mul(&self.num, &o.num), (self.zpow + o.zpow) as i32, roots)
    }

    pub fn scale(&self, c: &LambdaPoly) -> ZRational {
        let num = self.num.iter().map(|x| x.mul(c)).collect();
        ZRational::new(num, self.zpow as i32, self.roots.clone())
    }

    /// The constant value when z does not appear.
    pub fn as_constant(&self) -> Option<LambdaPoly> {
        match (self.num.len(), self.zpow, self.roots.len()) {
            (0, _, _) => Some(LambdaPoly::zero()),
            (1, 0, 0) => Some(self.num[0].clone()),
            _ => None,
        }
    }

    fn denominator_at(&self, z: &Rational, skip: Option<&Rational>) -> Result<Rational> {
        let mut d = z.pow(self.zpow as i32)?;
        let mut skipped = false;
        for r in &self.roots {
            if !skipped && Some(r) == skip {
                skipped = true;
                continue;
            }
            d = &d * &(z - r);
        }
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(d)
    }

    pub fn eval(&self, z: &Rational) -> Result<LambdaPoly> {
        if self.is_zero() {
            return Ok(LambdaPoly::zero());
        }
        let d = self.denominator_at(z, None)?;
        Ok(poly_eval(&self.num, z).scale(&d.inv()?))
    }

    /// Residue at a nonzero simple pole; zero at regular points.
    pub fn residue(&self, r: &Rational) -> Result<LambdaPoly> {
        if r.is_zero() {
            return Err(Error::Domain("residue at z = 0 is not a simple pole".into()));
        }
        match self.roots.iter().filter(|x| *x == r).count() {
            0 => Ok(LambdaPoly::zero()),
            1 => {
                let d = self.denominator_at(r, Some(r))?;
                Ok(poly_eval(&self.num, r).scale(&d.inv()?))
            }
            m => Err(Error::Domain(format!("pole of order {m} at z = {r}"))),
        }
    }

    /// Laurent coefficients at z = 0 for exponents −zpow..=kmax, lowest first.
    pub fn laurent_at_zero(&self, kmax: i64) -> Vec<(i64, LambdaPoly)> {
        let lo = -(self.zpow as i64);
        if kmax < lo {
            return Vec::new();
        }
        let len = (kmax - lo + 1) as usize;
        // 1/(z − r) = −Σ z^n / r^{n+1}
        let mut inv: Vec<Rational> = vec![Rational::zero(); len];
        inv[0] = Rational::one();
        for r in &self.roots {
            let rinv = r.inv().expect("roots are nonzero");
            let geo: Vec<Rational> = (0..len).map(|n| -&rinv.pow(n as i32 + 1).expect("nonzero")).collect();
            let mut next = vec![Rational::zero(); len];
            for (i, a) in inv.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
                for (j, b) in geo.iter().take(len - i).enumerate() {
                    next[i + j] += &(a * b);
                }
            }
            inv = next;
        }
        (0..len)
            .map(|n| {
                let mut c = LambdaPoly::zero();
                for (i, x) in self.num.iter().enumerate().take(n + 1) {
                    if !inv[n - i].is_zero() {
                        c = c.add(&x.scale(&inv[n - i]));
                    }
                }
                (lo + n as i64, c)
            })
            .collect()
    }

    pub fn at_lambda_zero(&self) -> ZRational {
        let num = self.num.iter().map(|c| LambdaPoly::constant(c.coeff(0))).collect();
        ZRational::new(num, self.zpow as i32, self.roots.clone())
    }
}

impl fmt::Display for ZRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .num
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("({c})"),
                1 => format!("({c})z"),
                _ => format!("({c})z^{i}"),
            })
            .collect();
        let num = if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        };
        let mut den: Vec<String> = Vec::new();
        if self.zpow > 0 {
            den.push(format!("z^{}", self.zpow));
        }
        den.extend(self.roots.iter().map(|r| format!("(z - {r})")));
        if den.is_empty() {
            write!(f, "{num}")
        } else {
            write!(f, "[{num}] / [{}]", den.join(""))
        }
    }
}

impl fmt::Debug for ZRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for ZRational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        json!({"numerator": self.num, "zpow": self.zpow, "roots": self.roots}).serialize(s)
    }
}

fn uses_lambda(theory: Theory) -> bool {
    theory == Theory::Twisted
}

/// Checks that d > 0 and 5d ∈ Z, returning 5d.
fn fifths(d: &Rational) -> Result<u64> {
    let m = d * &Rational::from_int(5);
    match m.to_i64() {
        Some(n) if n > 0 && m.is_integer() => Ok(n as u64),
        _ => Err(Error::Domain(format!("degree {d} is not a positive multiple of 1/5"))),
    }
}

/// k ∈ (lo, hi) or [lo, hi) etc. with ⟨k⟩ = ⟨hi⟩, starting from `start`.
fn graded(start: &Rational, hi: &Rational, hi_incl: bool) -> Vec<Rational> {
    let mut out = Vec::new();
    let mut k = start.clone();
    while &k < hi || (hi_incl && &k == hi) {
        out.push(k.clone());
        k += &Rational::one();
    }
    out
}

/// Smallest k with ⟨k⟩ = ⟨x⟩ and k > 0 (or k ≥ 0 when `zero_ok`).
fn first_graded(x: &Rational, zero_ok: bool) -> Rational {
    let f = x.fract_part();
    if f.is_zero() && !zero_ok {
        Rational::one()
    } else {
        f
    }
}

/// Π((k/d')^5 + Λ) / ((fact)! (1/d')^power Π(k/d' − 1)), shared by RC and
/// the three edge cases.
fn edge_core(
    dprime: &Rational,
    knum: &[Rational],
    kden: &[Rational],
    fact: u64,
    power: i32,
    lam: bool,
) -> Result<LambdaPoly> {
    let w = dprime.inv()?;
    let mut num = LambdaPoly::one();
    for k in knum {
        let base = (k * &w).pow(5)?;
        let mut f = LambdaPoly::constant(base);
        if lam {
            f = f.add(&LambdaPoly::big_lambda());
        }
        num = num.mul(&f);
    }
    let mut den = &Rational::factorial(fact) * &w.pow(power)?;
    for k in kden {
        den = &den * &(&(k * &w) - &Rational::one());
    }
    Ok(num.scale(&den.inv()?))
}

/// RC(d) at α = 1. The w theory sets Λ = 0.
pub fn recursion_coeff(d: &Rational, theory: Theory) -> Result<ZRational> {
    let m = fifths(d)?;
    let knum = graded(&first_graded(d, false), d, false);
    let kden = graded(&first_graded(d, true), d, false);
    let core = edge_core(d, &knum, &kden, m, m as i32, uses_lambda(theory))?;
    let pre = (&Rational::from_int(5) * d).inv()?;
    Ok(ZRational::constant(core.scale(&pre)))
}

/// Edge term with its Q-power split off.
#[derive(Debug, Clone, Serialize)]
pub struct EdgeTerm {
    pub case: u8,
    pub degree: Rational,
    pub q_power: Rational,
    pub value: ZRational,
}

/// The three closed-form edge contributions at α = 1.
pub fn edge_contribution(case: u8, d: &Rational, theory: Theory) -> Result<EdgeTerm> {
    let m = fifths(d)?;
    let lam = uses_lambda(theory);
    let five = Rational::from_int(5);
    let value = match case {
        1 | 2 => {
            let knum = graded(&first_graded(d, false), d, false);
            let kden = graded(&first_graded(d, true), d, false);
            let (fact, power) = if case == 1 {
                (m, m as i32)
            } else {
                (m - 1, m as i32 - 1)
            };
            let core = edge_core(d, &knum, &kden, fact, power, lam)?;
            core.scale(&(&five * &d.inv()?))
        }
        3 => {
            if !d.is_integer() {
                return Err(Error::Domain(format!("case-3 edge needs an integral degree, got {d}")));
            }
            let dp = d - &q(1, 5);
            let knum = graded(&first_graded(&dp, false), &dp, false);
            let kden = graded(&q(-1, 5), &dp, false);
            let core = edge_core(&dp, &knum, &kden, m - 1, m as i32 - 1, lam)?;
            core.scale(&(&five * &Rational::from_int(m as i64 - 1).inv()?))
        }
        _ => return Err(Error::Domain(format!("edge case {case} is not 1, 2 or 3"))),
    };
    Ok(EdgeTerm {
        case,
        degree: d.clone(),
        q_power: d.clone(),
        value: ZRational::constant(value),
    })
}

/// (η^•_m)^{-1} at α = 1, read off the dual basis.
pub fn eta_inv(sector: Sector, m: usize) -> Rational {
    let alpha = Rational::one();
    match sector {
        Sector::Heart if m % 5 == 4 => &alpha * &q(1, 5),
        Sector::Heart => q(1, 5),
        Sector::Diamond => &alpha * &q(-1, 5),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sector {
    Heart,
    Diamond,
}

/// Coefficients of one sector I-function. Heart entry `n` is the
/// q^n φ^♥_{n−1} term; diamond entry `n` is the Q^n φ^◇ term.
#[derive(Debug, Clone, Serialize)]
pub struct SectorIFunction {
    pub sector: Sector,
    pub theory: String,
    pub coeffs: Vec<ZRational>,
}

impl SectorIFunction {
    pub fn coeff(&self, n: usize) -> Option<&ZRational> {
        self.coeffs.get(n)
    }

    /// Basis index carried by entry `n`.
    pub fn slot(&self, n: usize) -> usize {
        match self.sector {
            Sector::Heart => (n + 4) % 5,
            Sector::Diamond => 0,
        }
    }
}

/// Heart coefficient of q^{a+1} φ^♥_a.
pub fn heart_coeff(a: usize, theory: Theory) -> ZRational {
    let s = q(a as i64 + 1, 5);
    let lam = uses_lambda(theory);
    let mut num: Poly = vec![LambdaPoly::one()];
    for k in graded(&first_graded(&s, false), &s, false) {
        num = poly_mul(&num, &fifth_power_plus(&k, &Rational::zero(), lam));
    }
    // (kz − 1) = k (z − 1/k)
    let kden = graded(&first_graded(&s, false), &s, true);
    let mut c = Rational::factorial(a as u64);
    for k in &kden {
        c = &c * k;
    }
    let roots = kden.iter().map(|k| k.inv().expect("k > 0")).collect();
    let cinv = c.inv().expect("nonzero");
    let num = num.iter().map(|x| x.scale(&cinv)).collect();
    ZRational::new(num, a as i32 - 1, roots)
}

/// Diamond coefficient of Q^a φ^◇.
pub fn diamond_coeff(a: usize, theory: Theory) -> ZRational {
    let lam = uses_lambda(theory);
    let mut num: Poly = vec![LambdaPoly::one()];
    for k in 1..a.max(1) {
        num = poly_mul(
            &num,
            &fifth_power_plus(&Rational::from_int(k as i64), &Rational::one(), lam),
        );
    }
    // −1/5 · 1/a! · 1/5 (the k = 0 factor, when present) · Π_{k ≥ 1} 1/k (z + 5/k)
    let k0 = if a > 0 { 25 } else { 5 };
    let mut c = &Rational::factorial(a as u64) * &Rational::from_int(-k0);
    let mut roots = Vec::new();
    for k in 1..5 * a {
        c = &c * &Rational::from_int(k as i64);
        roots.push(q(-5, k as i64));
    }
    let cinv = c.inv().expect("nonzero");
    let num = num.iter().map(|x| x.scale(&cinv)).collect();
    ZRational::new(num, a as i32 - 1, roots)
}

/// Heart entries q^1..=q^hmax and diamond entries Q^0..=Q^dmax; heart entry 0 is zero.
pub fn build_sector_ifunctions_with(hmax: usize, dmax: usize, theory: Theory) -> (SectorIFunction, SectorIFunction) {
    let mut h = vec![ZRational::zero()];
    h.extend((0..hmax).map(|a| heart_coeff(a, theory)));
    let heart = SectorIFunction {
        sector: Sector::Heart,
        theory: theory.to_string(),
        coeffs: h,
    };
    let diamond = SectorIFunction {
        sector: Sector::Diamond,
        theory: theory.to_string(),
        coeffs: (0..=dmax).map(|a| diamond_coeff(a, theory)).collect(),
    };
    (heart, diamond)
}

/// Both sectors up to degree `dmax` in their own degree variable.
pub fn build_sector_ifunctions(dmax: usize, theory: Theory) -> (SectorIFunction, SectorIFunction) {
    build_sector_ifunctions_with(dmax, dmax, theory)
}

/// Poles allowed for heart entry q^n: z = 1/k with ⟨k⟩ = ⟨n/5⟩.
fn heart_pole_ok(n: usize, r: &Rational) -> bool {
    let k = match r.inv() {
        Ok(k) => k,
        Err(_) => return false,
    };
    !k.is_negative() && (&k - &q(n as i64, 5)).is_integer()
}

fn diamond_pole_ok(r: &Rational) -> bool {
    r.is_negative() && fifths(&-&r.inv().unwrap_or_default()).is_ok()
}

/// Pole structure of every computed coefficient: simple poles at the listed points only.
pub fn verify_pole_structure(heart: &SectorIFunction, diamond: &SectorIFunction) -> Report {
    let mut rep = Report::new("poles");
    for (n, c) in heart.coeffs.iter().enumerate() {
        let ok = c.poles().iter().all(|r| heart_pole_ok(n, r));
        let simple = c.poles().windows(2).all(|w| w[0] != w[1]);
        rep.check(&format!("heart q^{n}"), ok && simple, || c.to_string());
    }
    for (n, c) in diamond.coeffs.iter().enumerate() {
        let ok = c.poles().iter().all(diamond_pole_ok);
        let simple = c.poles().windows(2).all(|w| w[0] != w[1]);
        rep.check(&format!("diamond Q^{n}"), ok && simple, || c.to_string());
    }
    rep.finish()
}

/// One instance of a residue identity: lhs = c · rhs for a constant c.
#[derive(Debug, Clone, Serialize)]
pub struct ResiduePair {
    pub direction: u8,
    pub degree: Rational,
    /// Degree of the residue side in its own sector variable.
    pub source: usize,
    pub lhs: LambdaPoly,
    pub rhs: LambdaPoly,
}

/// Rational c with lhs = c · rhs, if one exists.
pub fn rational_ratio(lhs: &LambdaPoly, rhs: &LambdaPoly) -> Option<Rational> {
    if rhs.is_zero() {
        return lhs.is_zero().then(Rational::zero);
    }
    let e = rhs.max_exp()?;
    let c = lhs.coeff(e).checked_div(&rhs.coeff(e)).ok()?;
    (lhs == &rhs.scale(&c)).then_some(c)
}

/// All residue pairs for 5d ≤ `dmax5`, with two extra degrees of headroom.
pub fn residue_pairs(dmax5: usize, theory: Theory) -> Result<Vec<ResiduePair>> {
    let top = dmax5.div_ceil(5) + 2;
    let (heart, diamond) = build_sector_ifunctions_with(5 * top, top, theory);
    let mut out = Vec::new();
    for m in 1..=dmax5 {
        let d = q(m as i64, 5);
        let rc = recursion_coeff(&d, theory)?.as_constant().expect("RC is z-free");
        let z1 = d.inv()?;
        // heart entry q^{5(d+b)} against diamond Q^b at z = 1/d
        for b in 0..=top {
            let n = m + 5 * b;
            let Some(h) = heart.coeff(n) else { break };
            let lhs = h.residue(&z1)?;
            let rhs = diamond.coeff(b).expect("built").eval(&z1)?;
            let rhs = rhs.mul(&rc).scale(&eta_inv(Sector::Heart, heart.slot(n)));
            out.push(ResiduePair {
                direction: 1,
                degree: d.clone(),
                source: n,
                lhs,
                rhs,
            });
        }
        // diamond Q^b against heart entry q^{5(b−d)} at z = −1/d
        let z2 = -&z1;
        for b in 1..=top {
            if 5 * b <= m {
                continue;
            }
            let n = 5 * b - m;
            let Some(h) = heart.coeff(n) else { continue };
            let lhs = diamond.coeff(b).expect("built").residue(&z2)?;
            let rhs = h.eval(&z2)?.mul(&rc).scale(&eta_inv(Sector::Diamond, 0));
            out.push(ResiduePair {
                direction: 2,
                degree: d.clone(),
                source: b,
                lhs,
                rhs,
            });
        }
    }
    Ok(out)
}

/// Solves lhs = c·rhs at the first pair with rhs ≠ 0 in the given direction.
pub fn solve_constant(pairs: &[ResiduePair], direction: u8) -> Option<Rational> {
    pairs
        .iter()
        .filter(|p| p.direction == direction && !p.rhs.is_zero())
        .find_map(|p| rational_ratio(&p.lhs, &p.rhs))
}

/// The residue identity for every 5d ≤ `dmax5`: the global constant is solved per direction
/// at the smallest degree and must then hold at every other degree.
pub fn residue_check_c2(dmax5: usize, theory: Theory) -> Report {
    let mut rep = Report::new("residues");
    let top = dmax5.div_ceil(5) + 2;
    let (heart, diamond) = build_sector_ifunctions_with(5 * top, top, theory);
    rep.absorb(verify_pole_structure(&heart, &diamond));

    // z = 3/7 and z = −2/3 are not of the form ±1/d
    for z in [q(3, 7), q(-2, 3)] {
        let zero = heart
            .coeffs
            .iter()
            .chain(&diamond.coeffs)
            .all(|c| c.residue(&z).is_ok_and(|r| r.is_zero()));
        rep.check(&format!("regular point {z}"), zero, || "nonzero residue".into());
    }

    let pairs = match residue_pairs(dmax5, theory) {
        Ok(p) => p,
        Err(e) => {
            rep.error("residue pairs", &e);
            return rep.finish();
        }
    };
    for dir in [1u8, 2] {
        let Some(c) = solve_constant(&pairs, dir) else {
            rep.fail(
                &format!("direction {dir}"),
                None,
                "no degree fixes the constant".into(),
                String::new(),
            );
            continue;
        };
        rep.note(format!("{theory}: direction {dir} constant {c}"));
        for m in 1..=dmax5 {
            let d = q(m as i64, 5);
            let mut ok = true;
            for p in pairs.iter().filter(|p| p.direction == dir && p.degree == d) {
                let name = format!("{theory} dir {dir} d={d} source {}", p.source);
                ok &= rep.check_eq(&name, Some(m as i64), &p.lhs, &p.rhs.scale(&c));
            }
            if !ok {
                let ratios: Vec<String> = pairs
                    .iter()
                    .filter(|p| p.direction == dir && p.degree == d)
                    .map(|p| match rational_ratio(&p.lhs, &p.rhs) {
                        Some(r) => r.to_string(),
                        None if p.rhs.is_zero() => "rhs 0".into(),
                        None => "Λ-dependent".into(),
                    })
                    .collect();
                rep.note(format!(
                    "{theory}: direction {dir} d={d} fails, ratios [{}]",
                    ratios.join(", ")
                ));
            }
        }
    }
    rep.finish()
}

/// The q^n coefficient of I^♥_+(Q, z) in its φ slot, as (z⁰, z¹) Laurent coefficients.
pub fn tail_coefficients(n: usize, theory: Theory) -> (LambdaPoly, LambdaPoly) {
    let c = heart_coeff(n - 1, theory);
    let lau = c.laurent_at_zero(1);
    let get = |k: i64| {
        lau.iter()
            .find(|(e, _)| *e == k)
            .map(|(_, v)| v.clone())
            .unwrap_or_default()
    };
    (get(0), get(1))
}

/// Tail series through q^N: the φ^♥_0·z and φ^♥_1 coefficients of the
/// z-regular part against I_0 and I_1 under t⁵ = −Q, for Q-powers ≥ 2/5.
pub fn tail_extraction(nmax: usize, theory: Theory) -> Report {
    let mut rep = Report::new("tails");
    let i0 = ifun::i0(nmax);
    let i1 = ifun::i1(nmax);
    for n in 2..=nmax {
        let a = n - 1;
        let (z0, z1) = tail_coefficients(n, theory);
        let sign = if (a / 5) % 2 == 0 {
            Rational::one()
        } else {
            -Rational::one()
        };
        match a % 5 {
            0 => {
                // −(−1)^d c_{5d}, d = a/5
                let want = -&(&sign * i0.coeff(a));
                rep.check_eq(&format!("{theory} φ0·z at q^{n}"), Some(n as i64), &z1.coeff(0), &want);
                rep.check_eq(
                    &format!("{theory} φ0·z⁰ at q^{n}"),
                    Some(n as i64),
                    &z0.coeff(0),
                    &Rational::zero(),
                );
                if theory == Theory::Fjrw {
                    rep.check(
                        &format!("w φ0 Λ-free at q^{n}"),
                        z1.max_exp().unwrap_or(0) == 0,
                        || z1.to_string(),
                    );
                }
            }
            1 => {
                let want = -&(&sign * i1.coeff(a));
                rep.check_eq(&format!("{theory} φ1 at q^{n}"), Some(n as i64), &z0.coeff(0), &want);
            }
            _ => {}
        }
    }
    rep.finish()
}

/// Residues for 5d ≤ `dmax5` and tails through q^`nmax`, both theories.
pub fn verify_localization(dmax5: usize, nmax: usize) -> Report {
    let mut rep = Report::new("localization");
    for th in [Theory::Twisted, Theory::Fjrw] {
        rep.absorb(residue_check_c2(dmax5, th));
        rep.absorb(tail_extraction(nmax, th));
    }
    rep.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(c: Rational) -> LambdaPoly {
        LambdaPoly::constant(c)
    }

    #[test]
    fn rc_examples() {
        let rc = recursion_coeff(&q(1, 5), Theory::Twisted).unwrap();
        assert_eq!(rc.as_constant().unwrap(), lp(q(1, 5)));
        // d = 2/5: both products are empty, 1/2 · 1/(2! (5/2)²)
        let direct = &q(1, 2) * &(&Rational::from_int(2) * &q(25, 4)).inv().unwrap();
        let rc2 = recursion_coeff(&q(2, 5), Theory::Twisted).unwrap();
        assert_eq!(rc2.as_constant().unwrap(), lp(direct));
        for m in 1..12 {
            let d = q(m, 5);
            let l = recursion_coeff(&d, Theory::Twisted).unwrap().as_constant().unwrap();
            let w = recursion_coeff(&d, Theory::Fjrw).unwrap().as_constant().unwrap();
            assert_eq!(lp(l.coeff(0)), w);
        }
        assert!(recursion_coeff(&q(1, 3), Theory::Twisted).is_err());
    }

    #[test]
    fn zrational_reduction_and_residues() {
        // (z − 2)(z + 1) / (z (z − 2)(z − 3)) = (z + 1)/(z (z − 3))
        let num = vec![lp(q(-2, 1)), lp(q(-1, 1)), lp(q(1, 1))];
        let f = ZRational::new(num, 1, vec![q(2, 1), q(3, 1)]);
        assert_eq!(f.poles(), &[q(3, 1)]);
        assert_eq!(f.residue(&q(3, 1)).unwrap(), lp(q(4, 3)));
        assert!(f.residue(&q(2, 1)).unwrap().is_zero());
        assert_eq!(f.eval(&q(1, 1)).unwrap(), lp(Rational::from_int(-1)));
        assert!(matches!(f.eval(&q(3, 1)), Err(Error::DivisionByZero)));
        // (z + 1)/(z (z − 3)) = −1/(3z) − 4/9 − 4z/27 + …
        let lau = f.laurent_at_zero(1);
        let vals: Vec<_> = lau.iter().map(|(_, c)| c.coeff(0)).collect();
        assert_eq!(vals, vec![q(-1, 3), q(-4, 9), q(-4, 27)]);
    }

    #[test]
    fn sector_examples() {
        let (h, d) = build_sector_ifunctions(6, Theory::Twisted);
        // a = 0: z/(z/5 − 1) = 5z/(z − 5), the q^1 φ^♥_0 term
        assert_eq!(
            h.coeff(1).unwrap(),
            &ZRational::new(vec![lp(Rational::zero()), lp(q(5, 1))], 0, vec![q(5, 1)])
        );
        assert_eq!(h.slot(1), 0);
        assert_eq!(d.coeff(0).unwrap(), &ZRational::new(vec![lp(q(-1, 5))], -1, vec![]));
        assert!(verify_pole_structure(&h, &d).passed());
    }

    #[test]
    fn edge_examples() {
        let d = q(1, 5);
        let e = edge_contribution(1, &d, Theory::Twisted).unwrap();
        let rc = recursion_coeff(&d, Theory::Twisted).unwrap();
        assert_eq!(e.value, rc.scale(&lp(q(25, 1))));
        assert_eq!(e.q_power, d);
        for m in 1..11 {
            let d = q(m, 5);
            let l = edge_contribution(1, &d, Theory::Twisted)
                .unwrap()
                .value
                .as_constant()
                .unwrap();
            let w = edge_contribution(1, &d, Theory::Fjrw)
                .unwrap()
                .value
                .as_constant()
                .unwrap();
            assert_eq!(lp(l.coeff(0)), w);
        }
        assert!(edge_contribution(3, &q(2, 5), Theory::Twisted).is_err());
        assert!(edge_contribution(3, &q(1, 1), Theory::Twisted).is_ok());
        assert!(edge_contribution(4, &q(1, 1), Theory::Twisted).is_err());
    }

    #[test]
    fn tail_examples() {
        let (_, z1) = tail_coefficients(6, Theory::Fjrw);
        assert_eq!(z1.coeff(0), q(1, 375_000));
        let (z0, _) = tail_coefficients(2, Theory::Fjrw);
        assert_eq!(z0, lp(Rational::from_int(-1)));
        for th in [Theory::Twisted, Theory::Fjrw] {
            let r = tail_extraction(30, th);
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn first_degree_residues() {
        let pairs = residue_pairs(1, Theory::Fjrw).unwrap();
        assert_eq!(solve_constant(&pairs, 1), Some(Rational::from_int(-625)));
        assert_eq!(solve_constant(&pairs, 2), Some(Rational::one()));
    }

    #[test]
    fn w_theory_fractional_degrees_hold() {
        let pairs = residue_pairs(15, Theory::Fjrw).unwrap();
        for p in pairs.iter().filter(|p| !p.degree.is_integer()) {
            let c = if p.direction == 1 {
                Rational::from_int(-625)
            } else {
                Rational::one()
            };
            assert_eq!(p.lhs, p.rhs.scale(&c), "dir {} d={}", p.direction, p.degree);
        }
        // at integral degree the diamond pole cancels in the w theory
        for p in pairs.iter().filter(|p| p.degree.is_integer() && p.direction == 2) {
            assert!(p.lhs.is_zero() && !p.rhs.is_zero());
        }
    }
}
