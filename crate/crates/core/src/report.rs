//! Serializable summaries. Rationals are rendered as `"p/q"` strings.

use serde::Serialize;

use crate::brieskorn::{bh_generators, bh_seifert_candidates, classify, BhCase};
use crate::lattice::{canonical_cycle, dual_cycle, ClassRep, RationalCycle, StarGraph, CENTER};
use crate::laufer::{scalars_with, to_antinef_with, LauferOptions};
use crate::rational::{ceil_i64, format_q};
use crate::seifert::{
    geometric_genus, invariants, is_numerically_gorenstein, is_rational_link, SeifertData,
};
use crate::semigroup::{
    apery_selmer, frobenius_bruteforce, frobenius_formulas, is_trivial_semigroup, min_module,
    poincare, symmetry_report, Kind, SemigroupView,
};
use crate::Result;

pub fn cycle_strings(l: &RationalCycle) -> Vec<String> {
    l.coeffs().iter().map(format_q).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct InfoReport {
    pub seifert: SeifertData,
    pub vertices: usize,
    pub e: String,
    pub alpha: i64,
    pub gamma: String,
    pub order_h: i64,
    pub orbit_order: i64,
    pub z_k: Vec<String>,
    pub e0_dual: Vec<String>,
    pub numerically_gorenstein: bool,
    pub rational: bool,
    pub geometric_genus: u64,
}

pub fn info(sf: &SeifertData) -> Result<InfoReport> {
    let g = StarGraph::from_seifert(sf);
    let inv = invariants(sf);
    Ok(InfoReport {
        seifert: sf.clone(),
        vertices: g.vertex_count(),
        e: format_q(&inv.e),
        alpha: inv.alpha,
        gamma: format_q(&inv.gamma),
        order_h: inv.order_h,
        orbit_order: inv.orbit_order,
        z_k: cycle_strings(&canonical_cycle(&g)),
        e0_dual: cycle_strings(&dual_cycle(&g, CENTER)?),
        numerically_gorenstein: is_numerically_gorenstein(sf),
        rational: is_rational_link(sf),
        geometric_genus: geometric_genus(sf),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Formula,
    Brute,
    Both,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FrobeniusEntry {
    /// `-1` when there is no gap.
    pub frobenius: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub formula: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub brute_force: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FrobeniusReport {
    pub semigroup: FrobeniusEntry,
    pub trivial: bool,
    pub module: FrobeniusEntry,
    pub rational: bool,
    pub module_min: i64,
    pub agree: bool,
}

pub fn frobenius(sf: &SeifertData, method: Method, opts: LauferOptions) -> Result<FrobeniusReport> {
    let trivial = is_trivial_semigroup(sf);
    let rational = is_rational_link(sf);
    let (sf_formula, mf_formula) = if method != Method::Brute {
        let pair = frobenius_formulas(&StarGraph::from_seifert(sf), opts)?;
        (
            Some(pair.semigroup.or_sentinel()),
            Some(pair.module.unwrap_or(-1)),
        )
    } else {
        (None, None)
    };
    let (sf_brute, mf_brute) = if method != Method::Formula {
        let s = if trivial {
            -1
        } else {
            frobenius_bruteforce(sf, Kind::Semigroup)?
        };
        let m = if rational {
            -1
        } else {
            frobenius_bruteforce(sf, Kind::Module)?
        };
        (Some(s), Some(m))
    } else {
        (None, None)
    };
    let agree = method != Method::Both || (sf_formula == sf_brute && mf_formula == mf_brute);
    let pick = |a: Option<i64>, b: Option<i64>| a.or(b).expect("one method ran");
    Ok(FrobeniusReport {
        semigroup: FrobeniusEntry {
            frobenius: pick(sf_formula, sf_brute),
            formula: sf_formula,
            brute_force: sf_brute,
        },
        trivial,
        module: FrobeniusEntry {
            frobenius: pick(mf_formula, mf_brute),
            formula: mf_formula,
            brute_force: mf_brute,
        },
        rational,
        module_min: min_module(sf),
        agree,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SymmetryJson {
    pub symmetric: bool,
    pub witnesses: Vec<(i64, i64)>,
    pub module_principal: bool,
    pub module_witness: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PoincareJson {
    pub p0: Vec<i64>,
    pub p0_plus: Vec<i64>,
    pub pg: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SemigroupReport {
    pub up_to: i64,
    /// Members of `S` in `[0, up_to]`.
    pub members: Vec<i64>,
    /// Members of `M` in `[min M, up_to]`.
    pub module_members: Vec<i64>,
    pub frobenius: i64,
    pub trivial: bool,
    pub generators: Vec<i64>,
    pub apery: Vec<i64>,
    pub gaps: u64,
    pub symmetry: SymmetryJson,
    pub poincare: PoincareJson,
}

pub fn semigroup(sf: &SeifertData, up_to: i64) -> Result<SemigroupReport> {
    let view = SemigroupView::semigroup(sf);
    let module = SemigroupView::module(sf);
    let ap = apery_selmer(sf);
    let sym = symmetry_report(sf);
    let need = ceil_i64(&invariants(sf).gamma).max(0);
    let p = poincare(sf, up_to.max(need).max(0) as usize)?;
    Ok(SemigroupReport {
        up_to,
        members: view.members(0, up_to),
        module_members: module.members(module.min_element(), up_to),
        frobenius: ap.frobenius.or_sentinel(),
        trivial: ap.frobenius.is_trivial(),
        generators: view.generators().unwrap_or_default().to_vec(),
        apery: ap.apery,
        gaps: ap.gaps,
        symmetry: SymmetryJson {
            symmetric: sym.symmetric,
            witnesses: sym.witnesses,
            module_principal: sym.module_principal,
            module_witness: sym.module_witness,
        },
        poincare: PoincareJson {
            p0: p.p0,
            p0_plus: p.p0_plus,
            pg: p.pg,
        },
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassChoice {
    Zk,
    ZkE0,
    Zero,
}

impl ClassChoice {
    pub fn name(self) -> &'static str {
        match self {
            ClassChoice::Zk => "zk",
            ClassChoice::ZkE0 => "zk+e0",
            ClassChoice::Zero => "zero",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct StepJson {
    pub vertex: usize,
    pub chi: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LauferReport {
    pub class: &'static str,
    pub r_h: Vec<String>,
    pub s_h: Vec<String>,
    pub step_count: u64,
    pub delta: i64,
    pub big_delta: i64,
    pub s: String,
    pub s_check: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<StepJson>>,
}

pub fn laufer(
    sf: &SeifertData,
    class: ClassChoice,
    trace: bool,
    opts: LauferOptions,
) -> Result<LauferReport> {
    let g = StarGraph::from_seifert(sf);
    let sc = scalars_with(&g, opts)?;
    let start: RationalCycle = match class {
        ClassChoice::Zk => sc.z_k.clone(),
        ClassChoice::ZkE0 => &sc.z_k + &dual_cycle(&g, CENTER)?,
        ClassChoice::Zero => g.zero_cycle(),
    };
    let r = ClassRep::of(&start).representative();
    let run_opts = if trace { opts.recording() } else { opts };
    let (s_h, tr) = to_antinef_with(&g, &r, run_opts)?;
    Ok(LauferReport {
        class: class.name(),
        r_h: cycle_strings(&r),
        s_h: cycle_strings(&s_h),
        step_count: tr.step_count,
        delta: sc.delta,
        big_delta: sc.big_delta,
        s: format_q(&sc.s),
        s_check: format_q(&sc.s_check),
        trace: trace.then(|| {
            tr.steps
                .iter()
                .map(|st| StepJson {
                    vertex: st.vertex,
                    chi: format_q(&st.chi),
                })
                .collect()
        }),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BhReport {
    pub a: Vec<i64>,
    pub case: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c: Option<u32>,
    pub order: Vec<usize>,
    pub p: Vec<i64>,
    pub alphas: Vec<i64>,
    pub multiplicities: Vec<i64>,
    pub orbit_order: Option<i64>,
    pub seifert: Option<SeifertData>,
    /// Number of Seifert completions that passed validation.
    pub completions: usize,
    pub generators: Option<Vec<i64>>,
}

pub fn brieskorn(a: &[i64]) -> Result<BhReport> {
    let cls = classify(a)?;
    let (case, m, c) = match cls.case {
        BhCase::I { m } => ("case_i", Some(m), None),
        BhCase::II { c } => ("case_ii", None, Some(c)),
        BhCase::NotQhs => ("not_qhs", None, None),
    };
    let (seifert, completions, generators) = if cls.is_qhs() {
        let candidates = bh_seifert_candidates(&cls)?;
        (
            Some(candidates[0].clone()),
            candidates.len(),
            Some(bh_generators(&cls)?),
        )
    } else {
        (None, 0, None)
    };
    Ok(BhReport {
        a: a.to_vec(),
        case,
        m,
        c,
        order: cls.order.clone(),
        orbit_order: cls.orbit_order(),
        p: cls.p,
        alphas: cls.alphas,
        multiplicities: cls.multiplicities,
        seifert,
        completions,
        generators,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::parse_q;

    #[test]
    fn e8_info() {
        let sf = crate::seifert::ihs_from_alphas(&[2, 3, 5]).unwrap();
        let r = info(&sf).unwrap();
        assert!(r.rational);
        assert_eq!(r.gamma, "-1");
        assert!(r.z_k.iter().all(|c| c == "0"));
    }

    #[test]
    fn rationals_round_trip() {
        let sf = SeifertData::new(1, vec![(5, 1), (5, 1), (7, 1), (10, 1)]).unwrap();
        let r = info(&sf).unwrap();
        for s in r.z_k.iter().chain(&r.e0_dual).chain([&r.e, &r.gamma]) {
            assert_eq!(&format_q(&parse_q(s).unwrap()), s);
        }
        assert_eq!(r.e, "-5/14");
        assert_eq!(r.gamma, "19/5");
    }

    #[test]
    fn frobenius_methods() {
        let sf = SeifertData::new(1, vec![(5, 1), (5, 1), (7, 1), (10, 1)]).unwrap();
        let r = frobenius(&sf, Method::Both, LauferOptions::default()).unwrap();
        assert!(r.agree);
        assert_eq!(r.semigroup.frobenius, 3);
        let sf = crate::seifert::ihs_from_alphas(&[2, 3, 7]).unwrap();
        let r = frobenius(&sf, Method::Brute, LauferOptions::default()).unwrap();
        assert_eq!(r.semigroup.frobenius, 43);
        assert_eq!(r.semigroup.formula, None);
    }

    #[test]
    fn laufer_zk_on_gamma_70() {
        let sf = SeifertData::new(1, vec![(5, 1), (5, 1), (7, 1), (10, 1), (70, 1)]).unwrap();
        let r = laufer(&sf, ClassChoice::Zk, true, LauferOptions::default()).unwrap();
        assert_eq!(r.trace.as_ref().unwrap().len() as u64, r.step_count);
        assert_eq!(r.r_h, ["5/6", "1/6", "1/6", "5/6", "7/12", "1/12"]);
        let z = laufer(&sf, ClassChoice::Zero, false, LauferOptions::default()).unwrap();
        assert!(z.s_h.iter().all(|c| c == "0"));
        assert_eq!(z.step_count, 0);
    }

    #[test]
    fn brieskorn_report() {
        let r = brieskorn(&[6, 10, 14]).unwrap();
        assert_eq!(r.case, "case_ii");
        assert_eq!(r.generators, Some(vec![15, 21, 35]));
        let r = brieskorn(&[4, 4, 4]).unwrap();
        assert_eq!(r.case, "not_qhs");
        assert!(r.seifert.is_none());
    }
}
