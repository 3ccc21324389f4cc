//! Generalized Laufer computation sequences.
//!
//! A sequence starts at a cycle `z_0` of `L'` and repeatedly adds a base
//! element `E_v` with `(z, E_v) > 0` until no such vertex is left in the
//! targeted vertex set. Targeting every vertex gives the minimal anti-nef
//! representative `s(l')`; targeting every vertex but the center gives the
//! cycles `x^l` of a class.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::lattice::{
    canonical_cycle, chi, dual_cycle, pairing, ClassRep, RationalCycle, StarGraph, CENTER,
};
use crate::rational::{as_i64, format_q, qi, Q};
use crate::seifert::{invariants, is_rational_link};
use crate::{Error, Result};

pub const DEFAULT_STEP_BUDGET: u64 = 10_000_000;

/// Which vertex to add when several have positive pairing.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TieBreak {
    #[default]
    Smallest,
    Largest,
    Random(u64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LauferOptions {
    pub tie_break: TieBreak,
    pub step_budget: u64,
    pub record_steps: bool,
}

impl Default for LauferOptions {
    fn default() -> Self {
        LauferOptions {
            tie_break: TieBreak::Smallest,
            step_budget: DEFAULT_STEP_BUDGET,
            record_steps: false,
        }
    }
}

impl LauferOptions {
    pub fn with_tie_break(mut self, tie_break: TieBreak) -> Self {
        self.tie_break = tie_break;
        self
    }

    pub fn recording(mut self) -> Self {
        self.record_steps = true;
        self
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.step_budget = budget;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LauferStep {
    pub vertex: usize,
    /// `chi` after the step.
    pub chi: Q,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LauferTrace {
    pub start: RationalCycle,
    pub start_chi: Q,
    /// Empty unless steps were recorded.
    pub steps: Vec<LauferStep>,
    pub step_count: u64,
    pub result: RationalCycle,
}

impl fmt::Display for LauferTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, step) in self.steps.iter().enumerate() {
            writeln!(
                f,
                "step {}: +E_{}, chi={}",
                k + 1,
                step.vertex,
                format_q(&step.chi)
            )?;
        }
        Ok(())
    }
}

/// Incremental walker over `l0 + L`. Pairings `(z, E_v)` are integers for
/// `z` in `L'` and are updated locally on each step.
struct Walker<'g> {
    g: &'g StarGraph,
    start: RationalCycle,
    added: Vec<i64>,
    pairings: Vec<i64>,
    chi_delta: i64,
    steps: u64,
    opts: LauferOptions,
    rng: Option<ChaCha8Rng>,
    recorded: Vec<(usize, i64)>,
}

impl<'g> Walker<'g> {
    fn new(g: &'g StarGraph, start: &RationalCycle, opts: LauferOptions) -> Result<Self> {
        if start.len() != g.vertex_count() {
            return Err(Error::IndexMismatch {
                expected: g.vertex_count(),
                found: start.len(),
            });
        }
        let mut pairings = Vec::with_capacity(g.vertex_count());
        for v in 0..g.vertex_count() {
            let p = g.pair_with_base(start, v);
            pairings.push(as_i64(&p).ok_or(Error::NotInDualLattice)?);
        }
        let rng = match opts.tie_break {
            TieBreak::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
            _ => None,
        };
        Ok(Walker {
            g,
            start: start.clone(),
            added: vec![0; g.vertex_count()],
            pairings,
            chi_delta: 0,
            steps: 0,
            opts,
            rng,
            recorded: Vec::new(),
        })
    }

    /// Adds `E_v` without any positivity requirement.
    fn push(&mut self, v: usize) {
        // chi(z + E_v) = chi(z) + 1 - (z, E_v)
        self.chi_delta += 1 - self.pairings[v];
        self.added[v] += 1;
        self.pairings[v] += self.g.euler(v);
        for &u in self.g.neighbors(v) {
            self.pairings[u] += 1;
        }
    }

    /// Runs the sequence until `(z, E_v) <= 0` for every `v` with `allowed[v]`.
    fn run(&mut self, allowed: &[bool]) -> Result<()> {
        let mut frontier: BTreeSet<usize> = (0..allowed.len())
            .filter(|&v| allowed[v] && self.pairings[v] > 0)
            .collect();
        while !frontier.is_empty() {
            if self.steps >= self.opts.step_budget {
                return Err(Error::StepBudgetExceeded(self.opts.step_budget));
            }
            let v = match self.opts.tie_break {
                TieBreak::Smallest => *frontier.first().unwrap(),
                TieBreak::Largest => *frontier.last().unwrap(),
                TieBreak::Random(_) => {
                    let k = self.rng.as_mut().unwrap().gen_range(0..frontier.len());
                    *frontier.iter().nth(k).unwrap()
                }
            };
            self.push(v);
            self.steps += 1;
            if self.opts.record_steps {
                self.recorded.push((v, self.chi_delta));
            }
            for u in std::iter::once(v).chain(self.g.neighbors(v).iter().copied()) {
                if allowed[u] && self.pairings[u] > 0 {
                    frontier.insert(u);
                } else {
                    frontier.remove(&u);
                }
            }
        }
        Ok(())
    }

    fn current(&self) -> RationalCycle {
        let mut z = self.start.clone();
        for (v, &k) in self.added.iter().enumerate() {
            if k != 0 {
                z.add_base(v, k);
            }
        }
        z
    }

    fn center_pairing(&self) -> i64 {
        self.pairings[CENTER]
    }
}

fn all_vertices(g: &StarGraph) -> Vec<bool> {
    vec![true; g.vertex_count()]
}

fn off_center(g: &StarGraph) -> Vec<bool> {
    let mut mask = vec![true; g.vertex_count()];
    mask[CENTER] = false;
    mask
}

/// `s(l0)`, the minimal anti-nef cycle of `l0 + L` reached from `l0`.
pub fn to_antinef(g: &StarGraph, l0: &RationalCycle) -> Result<(RationalCycle, LauferTrace)> {
    to_antinef_with(g, l0, LauferOptions::default())
}

pub fn to_antinef_with(
    g: &StarGraph,
    l0: &RationalCycle,
    opts: LauferOptions,
) -> Result<(RationalCycle, LauferTrace)> {
    let mut w = Walker::new(g, l0, opts)?;
    w.run(&all_vertices(g))?;
    let result = w.current();
    let start_chi = chi(g, l0)?;
    let steps = w
        .recorded
        .iter()
        .map(|&(vertex, d)| LauferStep {
            vertex,
            chi: &start_chi + qi(d),
        })
        .collect();
    let trace = LauferTrace {
        start: l0.clone(),
        start_chi,
        steps,
        step_count: w.steps,
        result: result.clone(),
    };
    Ok((result, trace))
}

/// The cycles `x^0, ..., x^L` of a class together with `N(l) = -(x^l, E_0)`
/// and `chi(x^l)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XSeries {
    pub class: ClassRep,
    pub cycles: Vec<RationalCycle>,
    pub n_values: Vec<i64>,
    pub chi_values: Vec<Q>,
}

pub fn x_series(g: &StarGraph, class: &ClassRep, up_to: usize) -> Result<XSeries> {
    x_series_with(g, class, up_to, LauferOptions::default())
}

pub fn x_series_with(
    g: &StarGraph,
    class: &ClassRep,
    up_to: usize,
    opts: LauferOptions,
) -> Result<XSeries> {
    let r = class.representative();
    if r.len() != g.vertex_count() {
        return Err(Error::IndexMismatch {
            expected: g.vertex_count(),
            found: r.len(),
        });
    }
    let chi_r = chi(g, &r)?;
    let mask = off_center(g);
    let mut w = Walker::new(g, &r, opts)?;
    let mut series = XSeries {
        class: class.clone(),
        cycles: Vec::with_capacity(up_to + 1),
        n_values: Vec::with_capacity(up_to + 1),
        chi_values: Vec::with_capacity(up_to + 1),
    };
    for ell in 0..=up_to {
        if ell > 0 {
            w.push(CENTER);
        }
        w.run(&mask)?;
        series.cycles.push(w.current());
        series.n_values.push(-w.center_pairing());
        series.chi_values.push(&chi_r + qi(w.chi_delta));
    }
    Ok(series)
}

/// Scalars read off the computation sequences of the classes `[Z_K]` and
/// `[Z_K + E_0^*]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LauferScalars {
    pub z_k: RationalCycle,
    pub r_zk: RationalCycle,
    pub s_zk: RationalCycle,
    pub s_zk_e0: RationalCycle,
    /// `m_0(s_[Z_K] - r_[Z_K])`.
    pub delta: i64,
    /// `m_0(Z_K - r_[Z_K])`.
    pub big_delta: i64,
    /// `m_0(s_[Z_K])`.
    pub s: Q,
    /// `m_0(s_[Z_K + E_0^*])`.
    pub s_check: Q,
}

pub fn scalars(g: &StarGraph) -> Result<LauferScalars> {
    scalars_with(g, LauferOptions::default())
}

pub fn scalars_with(g: &StarGraph, opts: LauferOptions) -> Result<LauferScalars> {
    let z_k = canonical_cycle(g);
    let class = ClassRep::of(&z_k);
    let r_zk = class.representative();
    let (s_zk, _) = to_antinef_with(g, &r_zk, opts)?;
    let e0 = dual_cycle(g, CENTER)?;
    let r_zk_e0 = ClassRep::of(&(&z_k + &e0)).representative();
    let (s_zk_e0, _) = to_antinef_with(g, &r_zk_e0, opts)?;

    let delta = int_coeff(&(s_zk.m0() - r_zk.m0()))?;
    let big_delta = int_coeff(&(z_k.m0() - r_zk.m0()))?;

    // The same delta as the first index of an anti-nef x^*(l), with the sign
    // change of (x^*(l), E_0) at that index.
    let mut w = Walker::new(g, &r_zk, opts)?;
    let mask = off_center(g);
    let mut ell = 0i64;
    loop {
        if ell > 0 {
            w.push(CENTER);
        }
        w.run(&mask)?;
        if w.center_pairing() <= 0 {
            break;
        }
        ell += 1;
        if ell > delta {
            return Err(Error::Internal(format!(
                "x*({ell}) not anti-nef although m_0(s_[Z_K] - r_[Z_K]) = {delta}"
            )));
        }
    }
    if ell != delta || w.current() != s_zk {
        return Err(Error::Internal(format!(
            "first anti-nef x*(l) at l = {ell}, expected delta = {delta} and x*(delta) = s_[Z_K]"
        )));
    }
    if big_delta < delta {
        return Err(Error::Internal(format!(
            "Delta = {big_delta} < delta = {delta}"
        )));
    }

    Ok(LauferScalars {
        s: s_zk.m0().clone(),
        s_check: s_zk_e0.m0().clone(),
        z_k,
        r_zk,
        s_zk,
        s_zk_e0,
        delta,
        big_delta,
    })
}

fn int_coeff(x: &Q) -> Result<i64> {
    as_i64(x).ok_or_else(|| Error::Internal(format!("expected an integer, got {}", format_q(x))))
}

/// Frobenius number of the module `{N >= -1}` from `gamma - s`, checked
/// against `Delta - delta - 1` and `m_0(Z_K - s_[Z_K]) - 1`.
pub fn frobenius_module(g: &StarGraph) -> Result<i64> {
    frobenius_module_with(g, LauferOptions::default())
}

pub fn frobenius_module_with(g: &StarGraph, opts: LauferOptions) -> Result<i64> {
    if is_rational_link(g.seifert()) {
        return Err(Error::RationalLink);
    }
    let sc = scalars_with(g, opts)?;
    frobenius_module_from(g, &sc)
}

pub(crate) fn frobenius_module_from(g: &StarGraph, sc: &LauferScalars) -> Result<i64> {
    let gamma = invariants(g.seifert()).gamma;
    let a = int_coeff(&(gamma - &sc.s))?;
    let b = sc.big_delta - sc.delta - 1;
    let c = int_coeff(&(sc.z_k.m0() - sc.s_zk.m0() - Q::one()))?;
    if a != b || b != c {
        return Err(Error::Internal(format!(
            "module Frobenius formulas disagree: gamma - s = {a}, Delta - delta - 1 = {b}, m_0(Z_K - s) - 1 = {c}"
        )));
    }
    if a < 1 {
        return Err(Error::Internal(format!(
            "module Frobenius number {a} < 1 on a non-rational link"
        )));
    }
    Ok(a)
}

/// Outcome of the duality check between the `x` and `x^*` series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualReport {
    pub big_delta: i64,
    pub checked: usize,
    pub first_failure: Option<String>,
}

impl DualReport {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// `chi(x^*(l)) = chi(x(Delta - l))` for `0 <= l <= Delta` and
/// `N(l) + N^*(Delta - 1 - l) = -2` for `0 <= l < Delta`.
pub fn dual_check(g: &StarGraph) -> Result<DualReport> {
    dual_check_with(g, LauferOptions::default())
}

pub fn dual_check_with(g: &StarGraph, opts: LauferOptions) -> Result<DualReport> {
    let z_k = canonical_cycle(g);
    let class = ClassRep::of(&z_k);
    let big_delta = int_coeff(&(z_k.m0() - class.representative().m0()))?;
    let mut report = DualReport {
        big_delta,
        checked: 0,
        first_failure: None,
    };
    if big_delta < 0 {
        return Ok(report);
    }
    let up_to = big_delta as usize;
    let x = x_series_with(g, &ClassRep::zero(g.vertex_count()), up_to, opts)?;
    let xs = x_series_with(g, &class, up_to, opts)?;
    for ell in 0..=up_to {
        report.checked += 1;
        let lhs = &xs.chi_values[ell];
        let rhs = &x.chi_values[up_to - ell];
        if lhs != rhs {
            report.first_failure = Some(format!(
                "chi(x*({ell})) = {} but chi(x({})) = {}",
                format_q(lhs),
                up_to - ell,
                format_q(rhs)
            ));
            return Ok(report);
        }
    }
    for ell in 0..up_to {
        report.checked += 1;
        let sum = x.n_values[ell] + xs.n_values[up_to - 1 - ell];
        if sum != -2 {
            report.first_failure = Some(format!(
                "N({ell}) + N*({}) = {sum}, expected -2",
                up_to - 1 - ell
            ));
            return Ok(report);
        }
    }
    Ok(report)
}

/// Checks the step invariants of a recorded trace: each added vertex had
/// positive pairing, chi is non-increasing, and the end is anti-nef.
pub fn check_trace(g: &StarGraph, trace: &LauferTrace) -> Result<bool> {
    let mut z = trace.start.clone();
    let mut prev = trace.start_chi.clone();
    for step in &trace.steps {
        if g.pair_with_base(&z, step.vertex) <= Q::zero() {
            return Ok(false);
        }
        z.add_base(step.vertex, 1);
        if step.chi > prev || chi(g, &z)? != step.chi {
            return Ok(false);
        }
        prev = step.chi.clone();
    }
    Ok(z == trace.result && crate::lattice::is_antinef(g, &z)?)
}

/// `(E_0^*, E_0^*)`, equal to `1/e`.
pub fn center_dual_square(g: &StarGraph) -> Result<Q> {
    let e0 = dual_cycle(g, CENTER)?;
    pairing(g, &e0, &e0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{is_antinef, is_antinef_on};
    use crate::rational::q;
    use crate::seifert::{big_n, ihs_from_alphas, SeifertData};

    fn graph(b0: i64, legs: &[(i64, i64)]) -> StarGraph {
        StarGraph::from_seifert(&SeifertData::new(b0, legs.to_vec()).unwrap())
    }

    fn g70() -> StarGraph {
        graph(1, &[(5, 1), (5, 1), (7, 1), (10, 1), (70, 1)])
    }

    fn cyc(v: &[(i64, i64)]) -> RationalCycle {
        RationalCycle::from_vec(v.iter().map(|&(n, d)| q(n, d)).collect())
    }

    #[test]
    fn zero_is_fixed() {
        let g = g70();
        let (s, trace) = to_antinef(&g, &g.zero_cycle()).unwrap();
        assert!(s.is_zero());
        assert_eq!(trace.step_count, 0);
    }

    #[test]
    fn rejects_cycles_outside_dual_lattice() {
        let g = g70();
        let half = cyc(&[(1, 2), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)]);
        assert_eq!(to_antinef(&g, &half).unwrap_err(), Error::NotInDualLattice);
    }

    #[test]
    fn gamma70_s_zk() {
        let g = g70();
        let r = ClassRep::of(&canonical_cycle(&g)).representative();
        let (s, trace) = to_antinef_with(&g, &r, LauferOptions::default().recording()).unwrap();
        let mut expected = r.clone();
        expected.add_base(0, 3);
        expected.add_base(1, 1);
        expected.add_base(2, 1);
        assert_eq!(s, expected);
        assert_eq!(s, cyc(&[(23, 6), (7, 6), (7, 6), (5, 6), (7, 12), (1, 12)]));
        assert!(check_trace(&g, &trace).unwrap());
        let sc = scalars(&g).unwrap();
        assert_eq!(sc.s, q(23, 6));
        assert_eq!(invariants(g.seifert()).gamma - &sc.s, qi(3));
        assert_eq!(frobenius_module(&g).unwrap(), 3);
    }

    #[test]
    fn trace_format() {
        let g = g70();
        let r = ClassRep::of(&canonical_cycle(&g)).representative();
        let (_, trace) = to_antinef_with(&g, &r, LauferOptions::default().recording()).unwrap();
        let text = trace.to_string();
        assert_eq!(text.lines().count(), 5);
        assert!(text.starts_with("step 1: +E_0, chi="));
    }

    #[test]
    fn four_leg_example_s_check() {
        let g = graph(1, &[(5, 1), (5, 1), (7, 1), (10, 1)]);
        let sc = scalars(&g).unwrap();
        assert_eq!(sc.s_check, q(18, 5));
        let r = ClassRep::of(&(&sc.z_k + &dual_cycle(&g, CENTER).unwrap())).representative();
        let mut expected = r;
        expected.add_base(0, 3);
        expected.add_base(1, 1);
        expected.add_base(2, 1);
        assert_eq!(sc.s_zk_e0, expected);
    }

    #[test]
    fn no1_and_no2_s_check() {
        let no1 = graph(1, &[(4, 1), (4, 1), (4, 1), (10, 1), (40, 1)]);
        let sc = scalars(&no1).unwrap();
        assert_eq!(
            sc.s_zk_e0,
            cyc(&[(4, 1), (1, 1), (1, 1), (1, 1), (2, 5), (3, 5)])
        );
        assert_eq!(sc.s_check, qi(4));
        let no2 = graph(
            2,
            &[(2, 1), (2, 1), (3, 1), (3, 1), (7, 1), (7, 1), (84, 1)],
        );
        let sc = scalars(&no2).unwrap();
        assert_eq!(sc.s_check, qi(28));
        assert_eq!(sc.s_zk_e0, dual_cycle(&no2, CENTER).unwrap());
        assert!(sc.s_zk.is_zero());
    }

    #[test]
    fn module_frobenius_gorenstein_and_rational() {
        let g = StarGraph::from_seifert(&ihs_from_alphas(&[2, 3, 7]).unwrap());
        assert_eq!(frobenius_module(&g).unwrap(), 1);
        let e8 = StarGraph::from_seifert(&ihs_from_alphas(&[2, 3, 5]).unwrap());
        assert_eq!(frobenius_module(&e8).unwrap_err(), Error::RationalLink);
    }

    #[test]
    fn x_series_class_zero_matches_n() {
        let s = ihs_from_alphas(&[2, 3, 7]).unwrap();
        let g = StarGraph::from_seifert(&s);
        let xs = x_series(&g, &ClassRep::zero(g.vertex_count()), 21).unwrap();
        assert!(xs.cycles[0].is_zero());
        for ell in 0..=20 {
            assert_eq!(xs.n_values[ell], big_n(&s, ell as i64));
            assert_eq!(
                &xs.chi_values[ell + 1] - &xs.chi_values[ell],
                qi(1 + big_n(&s, ell as i64))
            );
            assert_eq!(xs.chi_values[ell], chi(&g, &xs.cycles[ell]).unwrap());
        }
        for (ell, x) in xs.cycles.iter().enumerate() {
            assert!(is_antinef_on(&g, x, 1..g.vertex_count()).unwrap());
            for (i, leg) in g.legs().iter().enumerate() {
                let (a, w) = s.legs()[i];
                assert_eq!(x[leg[0]], qi(crate::rational::ceil_div(ell as i64 * w, a)));
            }
        }
    }

    #[test]
    fn x_star_reaches_s_zk_at_delta() {
        let g = g70();
        let sc = scalars(&g).unwrap();
        let class = ClassRep::of(&sc.z_k);
        let xs = x_series(&g, &class, sc.delta as usize).unwrap();
        assert_eq!(xs.cycles[sc.delta as usize], sc.s_zk);
        for ell in 0..sc.delta as usize {
            assert!(!is_antinef(&g, &xs.cycles[ell]).unwrap());
        }
    }

    #[test]
    fn duality_examples() {
        for g in [
            g70(),
            graph(1, &[(4, 1), (4, 1), (4, 1), (10, 1), (40, 1)]),
            graph(1, &[(5, 1), (5, 1), (7, 1), (10, 1)]),
        ] {
            let rep = dual_check(&g).unwrap();
            assert!(rep.passed(), "{:?}", rep.first_failure);
        }
    }

    #[test]
    fn center_dual_square_is_inverse_e() {
        let g = g70();
        let e = invariants(g.seifert()).e;
        assert_eq!(center_dual_square(&g).unwrap(), e.recip());
    }

    #[test]
    fn budget_is_enforced() {
        let g = g70();
        let r = ClassRep::of(&canonical_cycle(&g)).representative();
        let err = to_antinef_with(&g, &r, LauferOptions::default().with_budget(2)).unwrap_err();
        assert_eq!(err, Error::StepBudgetExceeded(2));
    }

    #[test]
    fn tie_breaks_agree() {
        let g = g70();
        let start = cyc(&[(-3, 1), (2, 1), (-1, 1), (0, 1), (-5, 1), (1, 1)]);
        let base = to_antinef(&g, &start).unwrap().0;
        for tb in [TieBreak::Largest, TieBreak::Random(7), TieBreak::Random(99)] {
            let other = to_antinef_with(&g, &start, LauferOptions::default().with_tie_break(tb))
                .unwrap()
                .0;
            assert_eq!(base, other);
        }
    }
}
