//! The numerical semigroup `S = {N >= 0}` and the `S`-module `M = {N >= -1}`.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_integer::Integer;
use num_traits::Signed;

use crate::lattice::{dual_cycle, RationalCycle, StarGraph, CENTER};
use crate::laufer::{frobenius_module_from, scalars_with, LauferOptions, LauferScalars};
use crate::rational::{ceil_div, floor_i64, format_q, lcm, qi, Q};
use crate::seifert::{big_n, invariants, is_numerically_gorenstein, is_rational_link, SeifertData};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Semigroup,
    Module,
}

impl Kind {
    fn threshold(self) -> i64 {
        match self {
            Kind::Semigroup => 0,
            Kind::Module => -1,
        }
    }
}

/// `N(l) >= 0` for the semigroup, `N(l) >= -1` for the module.
pub fn contains(sf: &SeifertData, kind: Kind, ell: i64) -> bool {
    big_n(sf, ell) >= kind.threshold()
}

/// `S = N` exactly when `N(1) = b0 - d >= 0`.
pub fn is_trivial_semigroup(sf: &SeifertData) -> bool {
    sf.b0() >= sf.d() as i64
}

/// Frobenius number of the semigroup, or the fact that it is all of `N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SemigroupFrobenius {
    Trivial,
    Value(i64),
}

impl SemigroupFrobenius {
    pub fn value(self) -> Option<i64> {
        match self {
            SemigroupFrobenius::Trivial => None,
            SemigroupFrobenius::Value(f) => Some(f),
        }
    }

    /// The value with `-1` standing for `S = N`.
    pub fn or_sentinel(self) -> i64 {
        self.value().unwrap_or(-1)
    }

    pub fn is_trivial(self) -> bool {
        matches!(self, SemigroupFrobenius::Trivial)
    }
}

/// Largest non-member, by scanning `(0, alpha + gamma]` for the semigroup and
/// `(0, gamma]` for the module.
pub fn frobenius_bruteforce(sf: &SeifertData, kind: Kind) -> Result<i64> {
    let inv = invariants(sf);
    let top = match kind {
        Kind::Semigroup => {
            if is_trivial_semigroup(sf) {
                return Err(Error::TrivialSemigroup);
            }
            floor_i64(&(qi(inv.alpha) + &inv.gamma))
        }
        Kind::Module => {
            if inv.gamma.is_negative() {
                return Err(Error::RationalLink);
            }
            floor_i64(&inv.gamma)
        }
    };
    (1..=top)
        .rev()
        .find(|&l| !contains(sf, kind, l))
        .ok_or(match kind {
            Kind::Semigroup => Error::TrivialSemigroup,
            Kind::Module => Error::RationalLink,
        })
}

/// `f_S = gamma + 1/|e| - s_check`, with the special cases it must reduce to.
pub fn frobenius_semigroup_formula(g: &StarGraph) -> Result<SemigroupFrobenius> {
    frobenius_semigroup_formula_with(g, LauferOptions::default())
}

pub fn frobenius_semigroup_formula_with(
    g: &StarGraph,
    opts: LauferOptions,
) -> Result<SemigroupFrobenius> {
    let sf = g.seifert();
    if is_trivial_semigroup(sf) {
        return Ok(SemigroupFrobenius::Trivial);
    }
    let sc = scalars_with(g, opts)?;
    frobenius_semigroup_from(g, &sc).map(SemigroupFrobenius::Value)
}

pub(crate) fn frobenius_semigroup_from(g: &StarGraph, sc: &LauferScalars) -> Result<i64> {
    let sf = g.seifert();
    let inv = invariants(sf);
    let inv_e = inv.e.abs().recip();
    let f = &inv.gamma + &inv_e - &sc.s_check;
    if !f.is_integer() {
        return Err(Error::Internal(format!(
            "gamma + 1/|e| - s_check = {} is not an integer",
            format_q(&f)
        )));
    }
    let f = floor_i64(&f);
    if f < 1 {
        return Err(Error::Internal(format!(
            "semigroup Frobenius number {f} < 1 with b0 < d"
        )));
    }

    if inv.orbit_order == 1 {
        let alt = &inv.gamma + qi(inv.alpha) - &sc.s;
        if alt != qi(f) {
            return Err(Error::Internal(format!(
                "orbit order 1 but gamma + alpha - s = {} differs from {f}",
                format_q(&alt)
            )));
        }
    }
    let e0 = dual_cycle(g, CENTER)?;
    if sc.z_k.is_integral() {
        let (s_e0, _) =
            crate::laufer::to_antinef(g, &crate::lattice::class_rep(&e0).representative())?;
        let diff = &e0 - &s_e0;
        let alt = &inv.gamma + diff.m0();
        if !diff.is_integral() || !diff.is_effective() || alt != qi(f) {
            return Err(Error::Internal(format!(
                "numerically Gorenstein shortcut gamma + m_0(E_0^* - s_[E_0^*]) = {} differs from {f}",
                format_q(&alt)
            )));
        }
    }
    // s_[Z_K] + E_0^* lies in the Lipman cone of the class [Z_K + E_0^*].
    let gap = &(&sc.s_zk + &e0) - &sc.s_zk_e0;
    if !gap.is_integral() || !gap.is_effective() {
        return Err(Error::Internal(format!(
            "s_[Z_K] + E_0^* - s_[Z_K + E_0^*] = {gap} is not an effective integral cycle"
        )));
    }
    Ok(f)
}

/// Both Frobenius numbers from one pair of computation sequences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusPair {
    pub semigroup: SemigroupFrobenius,
    /// `None` for rational links.
    pub module: Option<i64>,
}

pub fn frobenius_formulas(g: &StarGraph, opts: LauferOptions) -> Result<FrobeniusPair> {
    let sf = g.seifert();
    let trivial = is_trivial_semigroup(sf);
    let rational = is_rational_link(sf);
    if trivial && rational {
        return Ok(FrobeniusPair {
            semigroup: SemigroupFrobenius::Trivial,
            module: None,
        });
    }
    let sc = scalars_with(g, opts)?;
    let semigroup = if trivial {
        SemigroupFrobenius::Trivial
    } else {
        SemigroupFrobenius::Value(frobenius_semigroup_from(g, &sc)?)
    };
    let module = if rational {
        None
    } else {
        Some(frobenius_module_from(g, &sc)?)
    };
    Ok(FrobeniusPair { semigroup, module })
}

/// Smallest element of `M`. Below `ceil(-2/|e|)` one has `N(l) <= |e| l <= -2`.
pub fn min_module(sf: &SeifertData) -> i64 {
    let e = invariants(sf).e;
    let start = crate::rational::ceil_i64(&(qi(-2) / e.abs()));
    (start..)
        .find(|&l| contains(sf, Kind::Module, l))
        .expect("l = 0 is always in M")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AperySelmer {
    /// Entry `l` is the least member congruent to `l` modulo `alpha`.
    pub apery: Vec<i64>,
    pub frobenius: SemigroupFrobenius,
    pub gaps: u64,
}

/// `Ap(S, alpha) = {ceil(-N(l)/o) alpha + l : 0 <= l < alpha}`, Selmer's
/// `max(Ap) - alpha`, and the gap count `sum ceil(-N(l)/o)`.
pub fn apery_selmer(sf: &SeifertData) -> AperySelmer {
    let inv = invariants(sf);
    let alpha = inv.alpha;
    let mut apery = Vec::with_capacity(alpha as usize);
    let mut gaps = 0u64;
    for l in 0..alpha {
        let k = ceil_div(-big_n(sf, l), inv.orbit_order);
        debug_assert!(k >= 0);
        gaps += k as u64;
        apery.push(k * alpha + l);
    }
    let top = *apery.iter().max().unwrap();
    let frobenius = if top - alpha < 0 {
        SemigroupFrobenius::Trivial
    } else {
        SemigroupFrobenius::Value(top - alpha)
    };
    AperySelmer {
        apery,
        frobenius,
        gaps,
    }
}

/// Membership plus the cached data of either `S` or `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemigroupView {
    source: SeifertData,
    kind: Kind,
    frobenius: Option<i64>,
    min_element: i64,
    apery: Option<Vec<i64>>,
    generators: Option<Vec<i64>>,
    gaps: Option<u64>,
}

impl SemigroupView {
    pub fn semigroup(sf: &SeifertData) -> Self {
        let ap = apery_selmer(sf);
        let frobenius = ap.frobenius.value();
        let mut view = SemigroupView {
            source: sf.clone(),
            kind: Kind::Semigroup,
            frobenius,
            min_element: 0,
            apery: Some(ap.apery),
            generators: None,
            gaps: Some(ap.gaps),
        };
        view.generators = Some(minimal_generators_by(
            |l| view.contains(l),
            frobenius.unwrap_or(-1),
        ));
        view
    }

    pub fn module(sf: &SeifertData) -> Self {
        SemigroupView {
            source: sf.clone(),
            kind: Kind::Module,
            frobenius: frobenius_bruteforce(sf, Kind::Module).ok(),
            min_element: min_module(sf),
            apery: None,
            generators: None,
            gaps: None,
        }
    }

    pub fn source(&self) -> &SeifertData {
        &self.source
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn contains(&self, ell: i64) -> bool {
        contains(&self.source, self.kind, ell)
    }

    /// `None` when `S = N`, or for the module of a rational link.
    pub fn frobenius(&self) -> Option<i64> {
        self.frobenius
    }

    pub fn min_element(&self) -> i64 {
        self.min_element
    }

    pub fn apery(&self) -> Option<&[i64]> {
        self.apery.as_deref()
    }

    pub fn generators(&self) -> Option<&[i64]> {
        self.generators.as_deref()
    }

    pub fn gaps(&self) -> Option<u64> {
        self.gaps
    }

    pub fn members(&self, lo: i64, hi: i64) -> Vec<i64> {
        (lo..=hi).filter(|&l| self.contains(l)).collect()
    }
}

/// Minimal generating set of a semigroup view (sorted).
pub fn minimal_generators(view: &SemigroupView) -> Result<Vec<i64>> {
    match view.kind {
        Kind::Semigroup => Ok(minimal_generators_by(
            |l| view.contains(l),
            view.frobenius.unwrap_or(-1),
        )),
        Kind::Module => Err(Error::InvalidInput(
            "a module view has no generators".into(),
        )),
    }
}

/// Minimal generators of the numerical semigroup with the given membership
/// predicate and Frobenius number (`-1` for `N`): the multiplicity `m` and
/// the elements of `Ap(S, m)` that are not sums of two non-zero Apery elements.
pub fn minimal_generators_by(member: impl Fn(i64) -> bool, frobenius: i64) -> Vec<i64> {
    let m = (1..=frobenius.max(0) + 1)
        .find(|&l| member(l))
        .expect("f + 1 is a member");
    let top = frobenius + m;
    let table: Vec<bool> = (0..=top).map(&member).collect();
    let mut apery = vec![0i64; m as usize];
    for r in 1..m {
        apery[r as usize] = (r..=top)
            .step_by(m as usize)
            .find(|&l| table[l as usize])
            .expect("every residue class meets (f, f + m]");
    }
    let mut nonzero: Vec<i64> = apery[1..].to_vec();
    nonzero.sort_unstable();
    let mut gens = vec![m];
    for (i, &w) in nonzero.iter().enumerate() {
        let decomposable = nonzero[..i]
            .iter()
            .any(|&u| table[(w - u) as usize] && w - u > 0);
        if !decomposable {
            gens.push(w);
        }
    }
    gens.sort_unstable();
    gens
}

/// Membership table on `[0, up_to]` of the monoid generated by `gens`.
pub fn sieve(gens: &[i64], up_to: i64) -> Vec<bool> {
    let n = (up_to.max(-1) + 1) as usize;
    let mut table = vec![false; n];
    if n == 0 {
        return table;
    }
    table[0] = true;
    for &g in gens {
        if g <= 0 {
            continue;
        }
        let g = g as usize;
        for l in g..n {
            if table[l - g] {
                table[l] = true;
            }
        }
    }
    table
}

/// Frobenius number of the monoid generated by `gens`; `None` when the gcd
/// is not `1`, `Some(-1)` when the monoid is `N`. Shortest paths over the
/// residues modulo the smallest generator.
pub fn frobenius_of_generators(gens: &[i64]) -> Option<i64> {
    let gens: Vec<i64> = gens.iter().copied().filter(|&g| g > 0).collect();
    let g = gens.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    if g != 1 {
        return None;
    }
    let m = *gens.iter().min().unwrap();
    let mut dist = vec![i64::MAX; m as usize];
    dist[0] = 0;
    let mut heap = BinaryHeap::from([Reverse((0i64, 0usize))]);
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r] {
            continue;
        }
        for &a in &gens {
            let nr = ((r as i64 + a) % m) as usize;
            let nd = d + a;
            if nd < dist[nr] {
                dist[nr] = nd;
                heap.push(Reverse((nd, nr)));
            }
        }
    }
    Some(dist.iter().max().unwrap() - m)
}

/// `a_i = alpha / alpha_i` for pairwise coprime `alpha_i`.
pub fn ihs_generators(alphas: &[i64]) -> Result<Vec<i64>> {
    check_pairwise_coprime(alphas)?;
    let alpha: i64 = alphas.iter().product();
    Ok(alphas.iter().map(|&a| alpha / a).collect())
}

fn check_pairwise_coprime(xs: &[i64]) -> Result<()> {
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            if xs[i].gcd(&xs[j]) != 1 {
                return Err(Error::NotCoprime(xs.to_vec()));
            }
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StronglyFlat {
    pub is_strongly_flat: bool,
    /// `alpha_i = gcd` of the generators other than `a_i`.
    pub alphas: Vec<i64>,
    /// `(d - 1) lcm(a) - sum a_i`.
    pub bound: i64,
    pub frobenius: i64,
    pub attained: bool,
}

pub fn strongly_flat_check(a: &[i64]) -> Result<StronglyFlat> {
    if a.len() < 2 || a.iter().any(|&x| x <= 0) {
        return Err(Error::InvalidInput(format!(
            "need at least two positive generators, got {a:?}"
        )));
    }
    let frobenius = frobenius_of_generators(a)
        .ok_or_else(|| Error::InvalidInput(format!("generators {a:?} have gcd > 1")))?;
    let alphas: Vec<i64> = (0..a.len())
        .map(|i| {
            a.iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .fold(0i64, |acc, (_, &x)| acc.gcd(&x))
        })
        .collect();
    let is_strongly_flat = (0..a.len()).all(|i| {
        let prod: i64 = alphas
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &x)| x)
            .product();
        prod == a[i]
    });
    let l = a.iter().fold(1i64, |acc, &x| lcm(acc, x));
    let bound = (a.len() as i64 - 1) * l - a.iter().sum::<i64>();
    Ok(StronglyFlat {
        is_strongly_flat,
        alphas,
        bound,
        frobenius,
        attained: frobenius == bound,
    })
}

/// Generators of the projection of the analytic monoid of
/// `Sigma(alpha_1, ..., alpha_d)` to the end vertex of leg `end_index`:
/// `prod_{j != i, end} alpha_j` for the other legs and
/// `ceil(prod_{j != end} alpha_j / alpha_end)`.
pub fn end_projection_generators(alphas: &[i64], end_index: usize) -> Result<Vec<i64>> {
    if alphas.len() < 3 {
        return Err(Error::TooFewLegs(alphas.len()));
    }
    if end_index >= alphas.len() {
        return Err(Error::InvalidInput(format!(
            "end index {end_index} out of range for {} legs",
            alphas.len()
        )));
    }
    check_pairwise_coprime(alphas)?;
    let others: Vec<i64> = alphas
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != end_index)
        .map(|(_, &a)| a)
        .collect();
    let prod: i64 = others.iter().product();
    let mut gens: Vec<i64> = others.iter().map(|&a| prod / a).collect();
    gens.push(ceil_div(prod, alphas[end_index]));
    Ok(gens)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoincareData {
    /// `max(0, 1 + N(l))` for `0 <= l <= up_to`.
    pub p0: Vec<i64>,
    /// `max(0, -1 - N(l))` up to its degree.
    pub p0_plus: Vec<i64>,
    /// `1 + N(l)` for `0 <= l <= up_to`.
    pub p0_neg: Vec<i64>,
    pub pg: i64,
}

impl PoincareData {
    /// Degree of `P_0^+`, `None` for the zero polynomial.
    pub fn plus_degree(&self) -> Option<usize> {
        self.p0_plus.iter().rposition(|&c| c != 0)
    }
}

pub fn poincare(sf: &SeifertData, up_to: usize) -> Result<PoincareData> {
    let gamma = invariants(sf).gamma;
    let need = crate::rational::ceil_i64(&gamma).max(0);
    if (up_to as i64) < need {
        return Err(Error::InvalidInput(format!(
            "up_to = {up_to} must be at least ceil(max(0, gamma)) = {need}"
        )));
    }
    let ns: Vec<i64> = (0..=up_to as i64).map(|l| big_n(sf, l)).collect();
    let p0 = ns.iter().map(|&n| (1 + n).max(0)).collect();
    let p0_neg = ns.iter().map(|&n| 1 + n).collect();
    let mut p0_plus: Vec<i64> = ns.iter().map(|&n| (-1 - n).max(0)).collect();
    while p0_plus.last() == Some(&0) {
        p0_plus.pop();
    }
    let pg = p0_plus.iter().sum();
    Ok(PoincareData {
        p0,
        p0_plus,
        p0_neg,
        pg,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryReport {
    pub frobenius: SemigroupFrobenius,
    pub symmetric: bool,
    /// Pairs `(l, f - l)` with `l <= f - l` and neither in `S`.
    pub witnesses: Vec<(i64, i64)>,
    pub module_principal: bool,
    /// First `l` where `M` and `min(M) + S` differ.
    pub module_witness: Option<i64>,
}

/// Symmetry of `S` on `[0, f]`, and whether `M = min(M) + S`.
pub fn symmetry_report(sf: &SeifertData) -> SymmetryReport {
    let frobenius = apery_selmer(sf).frobenius;
    let f = frobenius.or_sentinel();
    let s = |l: i64| contains(sf, Kind::Semigroup, l);
    let witnesses: Vec<(i64, i64)> = (0..=f)
        .filter(|&l| 2 * l <= f && !s(l) && !s(f - l))
        .map(|l| (l, f - l))
        .collect();
    let min = min_module(sf);
    let inv = invariants(sf);
    // Above max(gamma, min + f) both sides contain everything.
    let hi = floor_i64(&inv.gamma).max(min + f) + inv.alpha;
    let module_witness = (min..=hi).find(|&l| contains(sf, Kind::Module, l) != s(l - min));
    SymmetryReport {
        frobenius,
        symmetric: witnesses.is_empty(),
        witnesses,
        module_principal: module_witness.is_none(),
        module_witness,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GorensteinReport {
    pub first_failure: Option<String>,
    pub minus_one_set: Vec<i64>,
}

impl GorensteinReport {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// `N(l) + N(gamma - l) = -2` on `[-2 alpha, 2 alpha]`; for orbit order 1
/// also `N(l) + N(alpha + gamma - l) = -1`; and
/// `{N = -1} = Z \ ((gamma - S) u S)` on `[min M - alpha, f_S + alpha]`.
pub fn gorenstein_symmetry_check(sf: &SeifertData) -> Result<GorensteinReport> {
    if !is_numerically_gorenstein(sf) {
        return Err(Error::NotNumericallyGorenstein);
    }
    let inv = invariants(sf);
    let gamma = floor_i64(&inv.gamma);
    let alpha = inv.alpha;
    let mut report = GorensteinReport {
        first_failure: None,
        minus_one_set: Vec::new(),
    };
    for l in -2 * alpha..=2 * alpha {
        let sum = big_n(sf, l) + big_n(sf, gamma - l);
        if sum != -2 {
            report.first_failure = Some(format!("N({l}) + N({}) = {sum}, expected -2", gamma - l));
            return Ok(report);
        }
        if inv.orbit_order == 1 {
            let sum = big_n(sf, l) + big_n(sf, alpha + gamma - l);
            if sum != -1 {
                report.first_failure = Some(format!(
                    "N({l}) + N({}) = {sum}, expected -1",
                    alpha + gamma - l
                ));
                return Ok(report);
            }
        }
    }
    let f = apery_selmer(sf).frobenius.or_sentinel();
    let min = min_module(sf);
    let s = |l: i64| contains(sf, Kind::Semigroup, l);
    for l in min - alpha..=f + alpha {
        let minus_one = big_n(sf, l) == -1;
        if minus_one {
            report.minus_one_set.push(l);
        }
        let outside = !s(l) && !s(gamma - l);
        if minus_one != outside {
            report.first_failure = Some(format!(
                "N({l}) = {} but l is {}in Z \\ ((gamma - S) u S)",
                big_n(sf, l),
                if outside { "" } else { "not " }
            ));
            return Ok(report);
        }
    }
    if min + f != gamma {
        report.first_failure = Some(format!("min M + f_S = {} != gamma = {gamma}", min + f));
    }
    Ok(report)
}

/// `{l in [lo, hi] : N(l) = -1}`, the difference `M \ S`.
pub fn minus_one_set(sf: &SeifertData, lo: i64, hi: i64) -> Vec<i64> {
    (lo..=hi).filter(|&l| big_n(sf, l) == -1).collect()
}

/// `E_0`-coefficients of the end-vertex duals.
pub fn end_dual_center_coefficients(g: &StarGraph) -> Result<Vec<Q>> {
    g.end_vertices()
        .into_iter()
        .map(|v| dual_cycle(g, v).map(|d: RationalCycle| d.m0().clone()))
        .collect()
}
