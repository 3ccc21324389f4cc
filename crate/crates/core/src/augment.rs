//! The auxiliary graph `Gamma_(n)` obtained by adding a leg `(n, 1)`, the
//! maps `j : L -> L_(n)` and `j^* : L'_(n) -> L'`, and the comparison of the
//! module of `Gamma_(n)` with the semigroup of the base.

use num_traits::{One, Signed};

use crate::lattice::{
    canonical_cycle, dual_cycle, linalg, pairing, ClassRep, RationalCycle, StarGraph, CENTER,
};
use crate::laufer::{frobenius_module_from, scalars_with, to_antinef_with, LauferOptions};
use crate::rational::{ceil_div, ceil_i64, format_q, q, qi, Q};
use crate::seifert::{big_n, invariants, is_rational_link, SeifertData};
use crate::semigroup::{contains, frobenius_bruteforce, is_trivial_semigroup, min_module, Kind};
use crate::{Error, Result};

/// A base link and its augmentation by the leg `(n, 1)`.
///
/// Vertices of the base keep their indices in the augmented graph; the new
/// vertex `E_+` comes last.
#[derive(Clone, Debug)]
pub struct AugmentedPair {
    pub base: SeifertData,
    pub n: i64,
    pub augmented: SeifertData,
    pub base_graph: StarGraph,
    pub graph: StarGraph,
}

/// Requires `e + 1/n < 0` strictly.
pub fn augment(sf: &SeifertData, n: i64) -> Result<AugmentedPair> {
    let e = sf.orbifold_euler();
    if n < 2 || !(e + q(1, n)).is_negative() {
        return Err(Error::AugmentTooSmall { n });
    }
    let augmented = sf.with_leg(n, 1)?;
    Ok(AugmentedPair {
        base: sf.clone(),
        n,
        base_graph: StarGraph::from_seifert(sf),
        graph: StarGraph::from_seifert(&augmented),
        augmented,
    })
}

impl AugmentedPair {
    /// Index of `E_+` in the augmented graph.
    pub fn plus(&self) -> usize {
        self.graph.vertex_count() - 1
    }

    pub fn e_plus(&self) -> RationalCycle {
        self.graph.base_cycle(self.plus())
    }

    /// `j(l)`: the same coefficients, zero on `E_+`.
    pub fn j(&self, l: &RationalCycle) -> RationalCycle {
        l.padded(self.graph.vertex_count())
    }

    /// `j^*(l')`, the cycle of the base with `(j^* l', E_v) = (l', j E_v)`.
    pub fn j_star(&self, l: &RationalCycle) -> Result<RationalCycle> {
        let rhs = (0..self.base_graph.vertex_count())
            .map(|v| self.graph.pair_with_base(l, v))
            .collect();
        Ok(RationalCycle::from_vec(linalg::solve_star(
            &self.base_graph,
            rhs,
        )?))
    }
}

/// `c_(n) = (n + gamma - 1) / (n - 1/|e|)`.
pub fn c_n(sf: &SeifertData, n: i64) -> Q {
    let inv = invariants(sf);
    (qi(n) + inv.gamma - Q::one()) / (qi(n) - Q::one() / inv.e.abs())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZkReport {
    pub c_n: Q,
    /// `Z_K(n) = j Z_K + c_(n) (E_+ + j E_0^*)`.
    pub closed_form: bool,
    /// `gamma_(n) = gamma + c_(n)/|e|`.
    pub gamma_shift: bool,
    /// `c_(n) >= 1`, checked when `b0 < d`.
    pub at_least_one: Option<bool>,
    /// `c_(n) < 2`, checked when `n > gamma - 1 + 2/|e|`.
    pub below_two: Option<bool>,
}

impl ZkReport {
    pub fn passed(&self) -> bool {
        self.closed_form
            && self.gamma_shift
            && self.at_least_one != Some(false)
            && self.below_two != Some(false)
    }
}

pub fn zk_identity_check(pair: &AugmentedPair) -> Result<ZkReport> {
    let inv = invariants(&pair.base);
    let abs_e = inv.e.abs();
    let c = c_n(&pair.base, pair.n);
    let zk = canonical_cycle(&pair.base_graph);
    let e0 = dual_cycle(&pair.base_graph, CENTER)?;
    let expected = &pair.j(&zk) + &(&pair.e_plus() + &pair.j(&e0)).scale(&c);
    let closed_form = canonical_cycle(&pair.graph) == expected;

    let gamma_n = invariants(&pair.augmented).gamma;
    let gamma_shift = gamma_n == &inv.gamma + &c / &abs_e;

    let at_least_one = (!is_trivial_semigroup(&pair.base)).then(|| c >= Q::one());
    let threshold = &inv.gamma - Q::one() + qi(2) / &abs_e;
    let below_two = (qi(pair.n) > threshold).then(|| c < qi(2));
    Ok(ZkReport {
        c_n: c,
        closed_form,
        gamma_shift,
        at_least_one,
        below_two,
    })
}

/// `(j^* l', l) = (l', j l)` for the given cycles.
pub fn projection_holds(
    pair: &AugmentedPair,
    lp: &RationalCycle,
    l: &RationalCycle,
) -> Result<bool> {
    let left = pairing(&pair.base_graph, &pair.j_star(lp)?, l)?;
    let right = pairing(&pair.graph, lp, &pair.j(l))?;
    Ok(left == right)
}

/// `j^*(E_+) = -E_0^*` and `j^* j E_v = E_v` for every base vertex.
pub fn projection_basics(pair: &AugmentedPair) -> Result<bool> {
    let e0 = dual_cycle(&pair.base_graph, CENTER)?;
    if pair.j_star(&pair.e_plus())? != -&e0 {
        return Ok(false);
    }
    for v in 0..pair.base_graph.vertex_count() {
        let ev = pair.base_graph.base_cycle(v);
        if pair.j_star(&pair.j(&ev))? != ev {
            return Ok(false);
        }
    }
    Ok(true)
}

/// First `l` in `[lo, hi]` violating `N(l) = N_(n)(l) + ceil(l/n)`.
pub fn dagger_failure(pair: &AugmentedPair, lo: i64, hi: i64) -> Option<i64> {
    (lo..=hi).find(|&l| big_n(&pair.base, l) != big_n(&pair.augmented, l) + ceil_div(l, pair.n))
}

/// Identities from the proof of the semigroup Frobenius formula, read off
/// the cycle `s_[Z_K(n)]` of the augmented graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofReport {
    /// `j^*(s_h)` is the minimal anti-nef cycle of its own class, `h = [Z_K(n)]`.
    pub projection_minimal: bool,
    /// `j^*(s_[Z_K(n)]) = s_[Z_K + E_0^*]`.
    pub projects_to_s_check: bool,
    /// The `E_+` coefficient of `s_[Z_K(n)]` equals `c_(n) - 1`.
    pub plus_coefficient: bool,
    /// `m_0(s_[Z_K(n)]) = s_check + (c_(n) - 1)/|e|`.
    pub center_coefficient: bool,
}

impl ProofReport {
    pub fn passed(&self) -> bool {
        self.projection_minimal
            && self.projects_to_s_check
            && self.plus_coefficient
            && self.center_coefficient
    }
}

pub fn proof_identities(pair: &AugmentedPair, opts: LauferOptions) -> Result<ProofReport> {
    let abs_e = invariants(&pair.base).e.abs();
    let c = c_n(&pair.base, pair.n);
    let aug = scalars_with(&pair.graph, opts)?;
    let base = scalars_with(&pair.base_graph, opts)?;
    let projected = pair.j_star(&aug.s_zk)?;
    let (own, _) = to_antinef_with(
        &pair.base_graph,
        &ClassRep::of(&projected).representative(),
        opts,
    )?;
    Ok(ProofReport {
        projection_minimal: own == projected,
        projects_to_s_check: projected == base.s_zk_e0,
        plus_coefficient: *aug.s_zk.coeff(pair.plus()) == &c - Q::one(),
        center_coefficient: aug.s == &base.s_check + (&c - Q::one()) / &abs_e,
    })
}

/// One trial `n` of the comparison between `M_(n)` and the base semigroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropCompAttempt {
    pub n: i64,
    /// `M_(n)` and `S` agree on `[0, bound]`.
    pub membership: bool,
    /// `min M_(n)`. Negative whenever `b0 <= 1`, since `N_(n)(-1) = -b0`, so
    /// the comparison is only made on non-negative integers.
    pub module_min: i64,
    /// Module Frobenius number of `Gamma_(n)`, `-1` when it is rational.
    pub module_frobenius: i64,
    /// Brute-force Frobenius number of the base semigroup, `-1` for `S = N`.
    pub semigroup_frobenius: i64,
}

impl PropCompAttempt {
    pub fn passed(&self) -> bool {
        self.membership && self.module_frobenius == self.semigroup_frobenius
    }
}

pub fn prop_comp_at(
    sf: &SeifertData,
    n: i64,
    bound: i64,
    opts: LauferOptions,
) -> Result<PropCompAttempt> {
    let pair = augment(sf, n)?;
    let membership = (0..=bound)
        .all(|l| contains(&pair.augmented, Kind::Module, l) == contains(sf, Kind::Semigroup, l));
    let module_frobenius = if is_rational_link(&pair.augmented) {
        -1
    } else {
        let sc = scalars_with(&pair.graph, opts)?;
        frobenius_module_from(&pair.graph, &sc)?
    };
    let semigroup_frobenius = if is_trivial_semigroup(sf) {
        -1
    } else {
        frobenius_bruteforce(sf, Kind::Semigroup)?
    };
    Ok(PropCompAttempt {
        n,
        membership,
        module_min: min_module(&pair.augmented),
        module_frobenius,
        semigroup_frobenius,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropCompReport {
    pub attempts: Vec<PropCompAttempt>,
}

impl PropCompReport {
    pub fn n_used(&self) -> Option<i64> {
        self.attempts.iter().find(|a| a.passed()).map(|a| a.n)
    }

    pub fn passed(&self) -> bool {
        self.n_used().is_some()
    }
}

/// Smallest `n` tried: `max(ceil(1/|e|) + 1, ceil(gamma - s + alpha) + 1)`.
pub fn prop_comp_start(sf: &SeifertData, opts: LauferOptions) -> Result<i64> {
    let inv = invariants(sf);
    let first = ceil_i64(&(Q::one() / inv.e.abs())) + 1;
    let s = scalars_with(&StarGraph::from_seifert(sf), opts)?.s;
    let second = ceil_i64(&(inv.gamma - s + qi(inv.alpha))) + 1;
    Ok(first.max(second).max(2))
}

pub const PROP_COMP_DOUBLINGS: usize = 4;

/// Tries `n_0, 2 n_0, ...` (five values) and stops at the first success.
pub fn verify_prop_comp(
    sf: &SeifertData,
    bound: i64,
    opts: LauferOptions,
) -> Result<PropCompReport> {
    let mut n = prop_comp_start(sf, opts)?;
    let mut attempts = Vec::new();
    for _ in 0..=PROP_COMP_DOUBLINGS {
        let attempt = prop_comp_at(sf, n, bound, opts)?;
        let done = attempt.passed();
        attempts.push(attempt);
        if done {
            return Ok(PropCompReport { attempts });
        }
        n *= 2;
    }
    Err(Error::Internal(format!(
        "module of Gamma_(n) never matched the semigroup of {sf} for n up to {}: {:?}",
        n / 2,
        attempts
            .last()
            .map(|a| (a.membership, a.module_frobenius, a.semigroup_frobenius))
    )))
}

/// Human-readable summary used in error messages.
pub fn describe(pair: &AugmentedPair) -> String {
    format!(
        "{} + (n = {}), c_(n) = {}",
        pair.base,
        pair.n,
        format_q(&c_n(&pair.base, pair.n))
    )
}
