//! Stable-graph sums for the R- and T-actions on the semisimple TQFT, at
//! genus ≤ 1, evaluated directly at the level of integrated correlators.
//!
//! The engine works in the idempotent frame e_α, where the TQFT is
//! ω_{g,n}(e_α, …, e_α) = Δ_α^{g−1} and zero on mixed inputs. R is known to
//! first order only: R⁻¹(z) = 1 − R_1 z, T(z) = T_1 z² with T_1 = R_1 φ_0, and
//! the edge tensor V is known through its constant term R_1 η⁻¹. Any term
//! of the right dimension that would need more is reported as an error
//! rather than silently dropped.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{q, zeta_half_power, LambdaLaurent, Rational, Ring};
use crate::frob::{build_frame, lift_q, CanonicalFrame};
use crate::ifun::VAR;
use crate::report::Report;
use crate::rmat::{build_r1, default_constants, RMatrixData};
use crate::{LSeries, QSeries};

/// ∫ over M̄_{g,n} of Π ψ_i^{a_i}, for g ∈ {0, 1}. Dimension mismatch gives 0.
pub fn psi_integral(g: u32, exps: &[u32]) -> Rational {
    let n = exps.len() as i64;
    let dim = 3 * g as i64 - 3 + n;
    if dim < 0 || exps.iter().map(|&a| a as i64).sum::<i64>() != dim {
        return Rational::zero();
    }
    match g {
        0 => {
            let mut v = Rational::factorial(dim as u64);
            for &a in exps {
                v = &v / &Rational::factorial(a as u64);
            }
            v
        }
        1 => genus_one_psi(exps.to_vec()),
        _ => panic!("ψ-integrals implemented for g ≤ 1 only"),
    }
}

/// String and dilaton recursion down to ⟨τ_1⟩_1 = 1/24.
fn genus_one_psi(mut a: Vec<u32>) -> Rational {
    if a == [1] {
        return q(1, 24);
    }
    if let Some(i) = a.iter().position(|&x| x == 0) {
        a.remove(i);
        let mut acc = Rational::zero();
        for j in 0..a.len() {
            if a[j] > 0 {
                let mut b = a.clone();
                b[j] -= 1;
                acc = &acc + &genus_one_psi(b);
            }
        }
        return acc;
    }
    if let Some(i) = a.iter().position(|&x| x == 1) {
        a.remove(i);
        // ⟨τ_1 Π τ_{a_i}⟩_1 = (2·1 − 2 + n)⟨Π τ_{a_i}⟩_1
        let n = a.len() as i64;
        return Rational::from_int(n).scale(&genus_one_psi(a));
    }
    // all exponents ≥ 2 with Σ a_i = n is impossible for n ≥ 1
    Rational::zero()
}

/// A stable graph with labeled legs. Edges are vertex pairs (u ≤ v); u = v is a loop.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct StableGraph {
    pub genus: Vec<u32>,
    pub edges: Vec<(usize, usize)>,
    /// legs[i] is the vertex carrying leg i+1.
    pub legs: Vec<usize>,
}

impl StableGraph {
    pub fn total_genus(&self) -> u32 {
        let h1 = self.edges.len() + 1 - self.genus.len();
        self.genus.iter().sum::<u32>() + h1 as u32
    }

    pub fn valence(&self, v: usize) -> usize {
        let legs = self.legs.iter().filter(|&&w| w == v).count();
        let ends: usize = self
            .edges
            .iter()
            .map(|&(a, b)| (a == v) as usize + (b == v) as usize)
            .sum();
        legs + ends
    }

    pub fn is_stable(&self) -> bool {
        (0..self.genus.len()).all(|v| 2 * self.genus[v] as i64 - 2 + self.valence(v) as i64 > 0)
    }

    pub fn is_connected(&self) -> bool {
        let nv = self.genus.len();
        let mut seen = vec![false; nv];
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            if seen[v] {
                continue;
            }
            seen[v] = true;
            for &(a, b) in &self.edges {
                if a == v && !seen[b] {
                    stack.push(b);
                }
                if b == v && !seen[a] {
                    stack.push(a);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    fn relabeled(&self, perm: &[usize]) -> StableGraph {
        let nv = self.genus.len();
        let mut genus = vec![0; nv];
        for v in 0..nv {
            genus[perm[v]] = self.genus[v];
        }
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (perm[a], perm[b]);
                (x.min(y), x.max(y))
            })
            .collect();
        edges.sort();
        let legs = self.legs.iter().map(|&v| perm[v]).collect();
        StableGraph { genus, edges, legs }
    }

    fn canonical(&self) -> StableGraph {
        permutations(self.genus.len())
            .into_iter()
            .map(|p| self.relabeled(&p))
            .min()
            .expect("at least one vertex")
    }

    /// Vertex permutations preserving the graph, times edge-flip and
    /// multi-edge symmetries.
    pub fn automorphisms(&self) -> u64 {
        let me = self.relabeled(&(0..self.genus.len()).collect::<Vec<_>>());
        let vperm = permutations(self.genus.len())
            .into_iter()
            .filter(|p| self.relabeled(p) == me)
            .count() as u64;
        let mut edge_factor = 1u64;
        let mut i = 0;
        while i < me.edges.len() {
            let mut j = i;
            while j < me.edges.len() && me.edges[j] == me.edges[i] {
                j += 1;
            }
            let m = (j - i) as u64;
            edge_factor *= (1..=m).product::<u64>();
            if me.edges[i].0 == me.edges[i].1 {
                edge_factor *= 1 << m;
            }
            i = j;
        }
        vperm * edge_factor
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut x = p.clone();
            x.insert(pos, n - 1);
            out.push(x);
        }
    }
    out
}

/// All stable graphs of genus g with n labeled legs, up to isomorphism.
pub fn enumerate_stable_graphs(g: u32, n: usize) -> Result<Vec<StableGraph>> {
    if g > 1 || n == 0 || n > 4 || 2 * g as i64 - 2 + n as i64 <= 0 {
        return Err(Error::UnimplementedRange { g: g as usize, n });
    }
    let mut found = BTreeSet::new();
    let vmax = (2 * g as usize + n).saturating_sub(2);
    for nv in 1..=vmax {
        for h1 in 0..=g {
            let ne = nv - 1 + h1 as usize;
            let pairs: Vec<(usize, usize)> = (0..nv).flat_map(|a| (a..nv).map(move |b| (a, b))).collect();
            for edges in multisets(&pairs, ne) {
                for genus in genus_labels(nv, g - h1) {
                    for legs in assignments(n, nv) {
                        let gr = StableGraph {
                            genus: genus.clone(),
                            edges: edges.clone(),
                            legs,
                        };
                        if gr.is_connected() && gr.is_stable() {
                            found.insert(gr.canonical());
                        }
                    }
                }
            }
        }
    }
    Ok(found.into_iter().collect())
}

fn multisets<T: Clone>(items: &[T], k: usize) -> Vec<Vec<T>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for (i, it) in items.iter().enumerate() {
        for mut rest in multisets(&items[i..], k - 1) {
            rest.insert(0, it.clone());
            out.push(rest);
        }
    }
    out
}

fn genus_labels(nv: usize, total: u32) -> Vec<Vec<u32>> {
    if nv == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    (0..=total)
        .flat_map(|first| {
            genus_labels(nv - 1, total - first).into_iter().map(move |mut r| {
                r.insert(0, first);
                r
            })
        })
        .collect()
}

fn assignments(n: usize, nv: usize) -> Vec<Vec<usize>> {
    (0..n).fold(vec![vec![]], |acc, _| {
        acc.into_iter()
            .flat_map(|p| {
                (0..nv).map(move |v| {
                    let mut x = p.clone();
                    x.push(v);
                    x
                })
            })
            .collect()
    })
}

/// CohFT data in the idempotent frame.
#[derive(Debug, Clone)]
pub struct CohFTInput {
    pub order: usize,
    pub delta: Vec<LSeries>,
    /// (R_1^e)_{γβ}: the e_γ-component of R_1 e_β.
    pub r1e: Vec<Vec<LSeries>>,
    /// T_1 = R_1 φ_0 in the e-frame.
    pub t1: Vec<LSeries>,
}

impl CohFTInput {
    /// Converts R_1 from the normalized frame: ẽ_α = Δ_α^{1/2} e_α gives
    /// (R_1^e)_{γβ} = ξ^{3(γ−β)/2} (R_1)_{γβ}.
    pub fn from_frame(frame: &CanonicalFrame, r: &RMatrixData) -> Self {
        let n = r.order;
        let r1e: Vec<Vec<LSeries>> = (0..5)
            .map(|g| {
                (0..5)
                    .map(|b| {
                        let w = zeta_half_power(3 * (g as i64 - b as i64));
                        r.get(g, b).scale(&LambdaLaurent::scalar(w))
                    })
                    .collect()
            })
            .collect();
        let t1 = (0..5)
            .map(|g| r1e[g].iter().fold(LSeries::zero(VAR, n), |acc, x| acc.add(x)))
            .collect();
        CohFTInput {
            order: n,
            delta: frame.delta.iter().map(|d| d.truncate(n)).collect(),
            r1e,
            t1,
        }
    }

    /// R = 1, T = 0: the bare TQFT.
    pub fn trivial(delta: Vec<LSeries>) -> Self {
        let n = delta[0].order();
        let z = LSeries::zero(VAR, n);
        CohFTInput {
            order: n,
            delta,
            r1e: vec![vec![z.clone(); 5]; 5],
            t1: vec![z; 5],
        }
    }

    pub fn idempotent(&self, alpha: usize) -> Vec<LSeries> {
        (0..5)
            .map(|k| {
                if k == alpha {
                    LSeries::one(VAR, self.order)
                } else {
                    LSeries::zero(VAR, self.order)
                }
            })
            .collect()
    }

    /// φ_0 = Σ e_α.
    pub fn unit(&self) -> Vec<LSeries> {
        vec![LSeries::one(VAR, self.order); 5]
    }

    fn delta_pow(&self, alpha: usize, e: i64) -> Result<LSeries> {
        self.delta[alpha].powi(e)
    }

    /// ω_{g,n}(x_1, …, x_n) = Σ_α Δ_α^{g−1} Π (x_i)_α.
    pub fn tqft(&self, g: u32, inputs: &[Vec<LSeries>]) -> Result<LSeries> {
        let mut acc = LSeries::zero(VAR, self.order);
        for a in 0..5 {
            let mut term = self.delta_pow(a, g as i64 - 1)?;
            for x in inputs {
                term = term.mul(&x[a]);
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    fn apply_r1(&self, x: &[LSeries]) -> Vec<LSeries> {
        (0..5)
            .map(|g| {
                (0..5).fold(LSeries::zero(VAR, self.order), |acc, b| {
                    acc.add(&self.r1e[g][b].mul(&x[b]))
                })
            })
            .collect()
    }
}

/// One graph's integrated contribution, before dividing by |Aut|.
#[derive(Debug, Clone, Serialize)]
pub struct GraphContribution {
    pub graph: StableGraph,
    pub automorphisms: u64,
    #[serde(serialize_with = "ser_series")]
    pub value: LSeries,
}

fn ser_series<S: serde::Serializer>(v: &LSeries, s: S) -> std::result::Result<S::Ok, S::Error> {
    v.to_json().serialize(s)
}

/// Whether some dimensionally admissible decoration at a vertex with the given
/// degree budget would need data beyond R_1, T_1 and the constant edge term.
/// Degrees: a leg R-term of order k has degree k, an edge end of V has degree ≥ 0,
/// a T_m insertion has degree m. Known: leg degree ≤ 1, edge ends 0, at most one T_1.
fn unknown_terms_survive(budget: i64, legs: usize, edge_ends: usize) -> bool {
    match budget {
        b if b < 0 => false,
        0 => false,
        // degree 1: an edge end would need the linear term of V
        1 => edge_ends > 0,
        // degree ≥ 2: T_2 alone (or R_2 on a leg) fills it
        _ => legs + edge_ends + 1 > 0,
    }
}

/// Per-vertex decoration in the known range.
#[derive(Debug, Clone, Copy, PartialEq)]
enum Deco {
    Bare,
    /// The R-term −R_1ψ on the given local leg.
    Leg(usize),
    /// One T_1 ψ² insertion.
    T,
}

/// ∫_{M̄_{g,n}} Ω_{g,n}(x_1, …, x_n) Π ψ_i^{a_i}, per graph.
pub fn rt_graph_contributions(
    input: &CohFTInput,
    g: u32,
    insertions: &[Vec<LSeries>],
    psi: &[u32],
) -> Result<Vec<GraphContribution>> {
    let n = insertions.len();
    if psi.len() != n {
        return Err(Error::Domain(format!("{} ψ-exponents for {n} insertions", psi.len())));
    }
    let graphs = enumerate_stable_graphs(g, n)?;
    let mut out = Vec::with_capacity(graphs.len());
    for gr in graphs {
        let value = graph_value(input, &gr, insertions, psi)?;
        out.push(GraphContribution {
            automorphisms: gr.automorphisms(),
            graph: gr,
            value,
        });
    }
    Ok(out)
}

pub fn rt_omega_integral(input: &CohFTInput, g: u32, insertions: &[Vec<LSeries>], psi: &[u32]) -> Result<LSeries> {
    let parts = rt_graph_contributions(input, g, insertions, psi)?;
    Ok(parts.iter().fold(LSeries::zero(VAR, input.order), |acc, c| {
        acc.add(&c.value.scale(&LambdaLaurent::rational(q(1, c.automorphisms as i64))))
    }))
}

fn graph_value(input: &CohFTInput, gr: &StableGraph, ins: &[Vec<LSeries>], psi: &[u32]) -> Result<LSeries> {
    let nv = gr.genus.len();
    let order = input.order;
    // local legs and edge ends per vertex
    let legs_at: Vec<Vec<usize>> = (0..nv)
        .map(|v| (0..gr.legs.len()).filter(|&i| gr.legs[i] == v).collect())
        .collect();
    let ends_at: Vec<usize> = (0..nv)
        .map(|v| {
            gr.edges
                .iter()
                .map(|&(a, b)| (a == v) as usize + (b == v) as usize)
                .sum()
        })
        .collect();
    let mut budgets = Vec::with_capacity(nv);
    for v in 0..nv {
        let dim = 3 * gr.genus[v] as i64 - 3 + gr.valence(v) as i64;
        let used: i64 = legs_at[v].iter().map(|&i| psi[i] as i64).sum();
        budgets.push(dim - used);
    }
    if budgets.iter().any(|&b| b < 0) {
        return Ok(LSeries::zero(VAR, order));
    }
    for v in 0..nv {
        if unknown_terms_survive(budgets[v], legs_at[v].len(), ends_at[v]) {
            return Err(Error::TruncationExceeded(format!(
                "vertex of genus {} with budget {} needs terms beyond R_1",
                gr.genus[v], budgets[v]
            )));
        }
    }
    let decos: Vec<Vec<Deco>> = (0..nv)
        .map(|v| match budgets[v] {
            0 => vec![Deco::Bare],
            _ => legs_at[v]
                .iter()
                .map(|&l| Deco::Leg(l))
                .chain(std::iter::once(Deco::T))
                .collect(),
        })
        .collect();
    let r_ins: Vec<Vec<LSeries>> = ins.iter().map(|x| input.apply_r1(x)).collect();
    let mut total = LSeries::zero(VAR, order);
    for choice in cartesian(&decos) {
        for alpha in assignments(nv, 5) {
            let mut term = LSeries::one(VAR, order);
            for v in 0..nv {
                let a = alpha[v];
                term = term.mul(&input.delta_pow(a, gr.genus[v] as i64 - 1)?);
                // ψ-exponents at the vertex: legs, then edge ends (always 0), then T point
                let mut exps: Vec<u32> = Vec::new();
                for &l in &legs_at[v] {
                    let bump = (choice[v] == Deco::Leg(l)) as u32;
                    exps.push(psi[l] + bump);
                    if bump == 1 {
                        term = term.mul(&r_ins[l][a]).neg();
                    } else {
                        term = term.mul(&ins[l][a]);
                    }
                }
                exps.extend(std::iter::repeat(0).take(ends_at[v]));
                if choice[v] == Deco::T {
                    exps.push(2);
                    term = term.mul(&input.t1[a]);
                }
                let pi = psi_integral(gr.genus[v], &exps);
                if pi.is_zero() {
                    term = LSeries::zero(VAR, order);
                    break;
                }
                term = term.scale_rational(&pi);
            }
            if term.is_zero() {
                continue;
            }
            for &(x, y) in &gr.edges {
                // Σ_α R_1 e^α ⊗ e_α read at (α_x, α_y)
                let (ax, ay) = (alpha[x], alpha[y]);
                term = term.mul(&input.r1e[ax][ay]).mul(&input.delta[ay]);
            }
            total = total.add(&term);
        }
    }
    Ok(total)
}

fn cartesian(sets: &[Vec<Deco>]) -> Vec<Vec<Deco>> {
    sets.iter().fold(vec![vec![]], |acc, s| {
        acc.into_iter()
            .flat_map(|p| {
                s.iter().map(move |d| {
                    let mut x = p.clone();
                    x.push(*d);
                    x
                })
            })
            .collect()
    })
}

/// (A1), (A2), (A3), (MAIN) and the TQFT sanity values, through t^N.
pub fn verify_appendix(order: usize) -> Report {
    let mut rep = Report::new("appendix");
    for (g, n, want) in [(0u32, 3usize, 1usize), (0, 4, 4), (1, 1, 2)] {
        match enumerate_stable_graphs(g, n) {
            Ok(gs) => {
                rep.check_eq(&format!("graph count ({g},{n})"), None, &gs.len(), &want);
                if (g, n) == (1, 1) {
                    let auts: Vec<u64> = gs.iter().map(StableGraph::automorphisms).collect();
                    rep.check("loop graph Aut = 2", auts.contains(&2) && auts.contains(&1), || {
                        format!("{auts:?}")
                    });
                }
            }
            Err(e) => rep.error("graphs", &e),
        }
    }
    rep.check_eq("∫_{M̄_{1,1}} ψ", None, &psi_integral(1, &[1]), &q(1, 24));
    let built = build_frame(order + 2).and_then(|f| {
        let r = build_r1(&f, &default_constants())?;
        Ok((f, r))
    });
    let (frame, r) = match built {
        Ok(x) => x,
        Err(e) => {
            rep.error("build", &e);
            return rep.finish();
        }
    };
    if let Err(e) = appendix_checks(&mut rep, &frame, &r, order) {
        rep.error("appendix", &e);
    }
    rep.finish()
}

fn appendix_checks(rep: &mut Report, frame: &CanonicalFrame, r: &RMatrixData, order: usize) -> Result<()> {
    let inp = CohFTInput::from_frame(frame, r);
    let n = inp.order;
    let tq = CohFTInput::trivial(inp.delta.clone());
    let w = tq.tqft(1, &[tq.unit()])?;
    rep.check_series(
        "ω_{1,1}(φ_0) = 5",
        &w,
        &LSeries::constant(VAR, n, LambdaLaurent::rational(Rational::from_int(5))),
        order,
    );
    let one_pt = rt_omega_integral(&tq, 1, &[tq.unit()], &[1])?;
    rep.check_series(
        "∫Ω_{1,1}(φ_0)ψ at R = 1",
        &one_pt,
        &LSeries::constant(VAR, n, LambdaLaurent::rational(q(5, 24))),
        order,
    );
    for a in 0..5 {
        let e = inp.idempotent(a);
        let v = rt_omega_integral(&inp, 0, &[e.clone(), e.clone(), e], &[0, 0, 0])?;
        rep.check_series(&format!("Ω_{{0,3}}(e_{a}³) = Δ⁻¹"), &v, &inp.delta[a].inv()?, order);
    }
    // edge tensor symmetry: (R_1^e)_{γα} Δ_α = (R_1^e)_{αγ} Δ_γ
    for g in 0..5 {
        for a in 0..5 {
            let l = inp.r1e[g][a].mul(&inp.delta[a]);
            let rr = inp.r1e[a][g].mul(&inp.delta[g]);
            rep.check_series(&format!("edge tensor symmetric ({g},{a})"), &l, &rr, order);
        }
    }
    let col_sum = |b: usize| (0..5).fold(LSeries::zero(VAR, n), |acc, a| acc.add(&inp.r1e[a][b]));
    let half = LambdaLaurent::rational(q(1, 2));
    let o11: Vec<LSeries> = (0..5)
        .map(|b| rt_omega_integral(&inp, 1, &[inp.idempotent(b)], &[0]))
        .collect::<Result<_>>()?;
    let o04: Vec<Vec<LSeries>> = (0..5)
        .map(|a| {
            (0..5)
                .map(|b| {
                    let e = inp.idempotent(a);
                    rt_omega_integral(&inp, 0, &[e.clone(), e.clone(), e, inp.idempotent(b)], &[0; 4])
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    for b in 0..5 {
        let bracket = inp.t1[b].sub(&col_sum(b));
        let rhs = r
            .get(b, b)
            .truncate(n)
            .scale(&half)
            .add(&bracket.scale(&LambdaLaurent::rational(q(1, 24))));
        rep.check_series(&format!("(A1) β={b}"), &o11[b], &rhs, order);
        let lhs = (0..5).fold(LSeries::zero(VAR, n), |acc, a| acc.add(&inp.delta[a].mul(&o04[a][b])));
        rep.check_series(&format!("(A2) β={b}"), &lhs, &bracket, order);
    }
    // τ-direction: du^β/dτ = ξ^β λ L / I_{1,1}, d/dτ = I_{1,1}⁻¹ d/dt
    let inv_i11 = lift_q(&frame.slice.tau_prime().inv()?.truncate(n));
    let dudtau: Vec<LSeries> = (0..5).map(|b| frame.du_alpha(b).truncate(n).mul(&inv_i11)).collect();
    for a in 0..5 {
        let lhs = (0..5).fold(LSeries::zero(VAR, n), |acc, b| acc.add(&dudtau[b].mul(&o04[a][b])));
        let rhs = inp.delta[a]
            .inv()?
            .derivative()
            .mul(&inv_i11)
            .scale(&LambdaLaurent::rational(q(-1, 2)));
        rep.check_series(&format!("(A3) α={a}"), &lhs, &rhs, order);
    }
    let main = (0..5).fold(LSeries::zero(VAR, n), |acc, b| acc.add(&dudtau[b].mul(&o11[b])));
    let main = main.try_map(|c| c.rationality_project())?;
    let f1 = crate::genus1::f1_closed_twisted(order + 1)?;
    let rhs: QSeries = f1.derivative().mul(&frame.slice.tau_prime().inv()?);
    rep.check_series("(MAIN)", &main, &rhs, order);
    // (A2) and (MAIN) are C_α-independent
    let rc = build_r1(frame, &crate::rmat::sample_perturbation(Rational::one()))?;
    let inp_c = CohFTInput::from_frame(frame, &rc);
    let main_c = (0..5).try_fold(LSeries::zero(VAR, n), |acc, b| -> Result<LSeries> {
        let v = rt_omega_integral(&inp_c, 1, &[inp_c.idempotent(b)], &[0])?;
        Ok(acc.add(&dudtau[b].mul(&v)))
    })?;
    let main_c = main_c.try_map(|c| c.rationality_project())?;
    rep.check_series("(MAIN) under C_α perturbation", &main_c, &rhs, order);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn psi_examples() {
        assert_eq!(psi_integral(1, &[1]), q(1, 24));
        assert_eq!(psi_integral(0, &[1, 0, 0, 0]), Rational::one());
        assert_eq!(psi_integral(0, &[2, 0, 0, 0, 0]), Rational::one());
        assert_eq!(psi_integral(0, &[1, 1, 0, 0, 0]), Rational::from_int(2));
        assert_eq!(psi_integral(0, &[1, 0, 0]), Rational::zero());
        // string: ⟨τ_0 τ_2⟩_1 = ⟨τ_1⟩_1; dilaton: ⟨τ_1 τ_1⟩_1 = ⟨τ_1⟩_1
        assert_eq!(psi_integral(1, &[0, 2]), q(1, 24));
        assert_eq!(psi_integral(1, &[1, 1]), q(1, 24));
        assert_eq!(psi_integral(1, &[2, 1, 0]), q(1, 12));
    }

    #[test]
    fn genus_zero_string_equation() {
        // ⟨τ_0 Π τ_{a_i}⟩_0 = Σ_j ⟨… τ_{a_j − 1} …⟩_0
        for a in [[2u32, 0, 0, 0], [1, 1, 0, 0], [0, 0, 2, 0]] {
            let mut with0 = a.to_vec();
            with0.push(0);
            let mut rhs = Rational::zero();
            for j in 0..a.len() {
                if a[j] > 0 {
                    let mut b = a.to_vec();
                    b[j] -= 1;
                    rhs = &rhs + &psi_integral(0, &b);
                }
            }
            assert_eq!(psi_integral(0, &with0), rhs);
        }
    }

    #[test]
    fn graph_counts() {
        assert_eq!(enumerate_stable_graphs(0, 3).unwrap().len(), 1);
        assert_eq!(enumerate_stable_graphs(0, 4).unwrap().len(), 4);
        let g11 = enumerate_stable_graphs(1, 1).unwrap();
        assert_eq!(g11.len(), 2);
        let loop_graph = g11.iter().find(|g| g.genus == [0]).unwrap();
        assert_eq!(loop_graph.automorphisms(), 2);
        assert!(matches!(
            enumerate_stable_graphs(2, 1),
            Err(Error::UnimplementedRange { .. })
        ));
        assert_eq!(enumerate_stable_graphs(1, 2).unwrap().len(), 5);
        for gr in enumerate_stable_graphs(1, 3).unwrap() {
            assert_eq!(gr.total_genus(), 1);
        }
    }

    #[test]
    fn suite_small_order() {
        let r = verify_appendix(6);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn truncation_is_guarded() {
        let fr = build_frame(4).unwrap();
        let r = build_r1(&fr, &default_constants()).unwrap();
        let inp = CohFTInput::from_frame(&fr, &r);
        let e = inp.idempotent(0);
        let five = vec![e.clone(), e.clone(), e.clone(), e.clone(), e];
        assert!(rt_omega_integral(&inp, 0, &five, &[0; 5]).is_err());
        let e = inp.idempotent(1);
        let two = vec![e.clone(), e];
        assert!(matches!(
            rt_omega_integral(&inp, 1, &two, &[0, 0]),
            Err(Error::TruncationExceeded(_))
        ));
    }
}
