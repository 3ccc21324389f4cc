//! The invariant and oracle suite run by `seifert verify`.

use serde::Serialize;

use crate::augment::{
    augment, dagger_failure, projection_basics, verify_prop_comp, zk_identity_check,
};
use crate::brieskorn::{bh_generators, bh_seifert, classify, generators_match};
use crate::lattice::{dual_cycle, ClassRep, StarGraph, CENTER};
use crate::laufer::{
    check_trace, dual_check_with, scalars_with, to_antinef_with, LauferOptions, TieBreak,
};
use crate::seifert::{invariants, is_numerically_gorenstein, is_rational_link, SeifertData};
use crate::semigroup::{
    apery_selmer, contains, frobenius_bruteforce, frobenius_formulas, gorenstein_symmetry_check,
    is_trivial_semigroup, minimal_generators, Kind, SemigroupView,
};
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub seifert: SeifertData,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub opts: LauferOptions,
    /// Seed of the random tie-break strategy.
    pub seed: u64,
    pub prop_comp: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            opts: LauferOptions::default(),
            seed: 0,
            prop_comp: true,
        }
    }
}

struct Checks(Vec<Check>);

impl Checks {
    fn run(&mut self, name: &'static str, check: impl FnOnce() -> Result<(bool, String)>) {
        let (passed, detail) = check().unwrap_or_else(|e| (false, format!("error: {e}")));
        self.0.push(Check {
            name,
            passed,
            detail,
        });
    }
}

pub fn verify_seifert(sf: &SeifertData, cfg: VerifyConfig) -> VerifyReport {
    let g = StarGraph::from_seifert(sf);
    let inv = invariants(sf);
    let trivial = is_trivial_semigroup(sf);
    let rational = is_rational_link(sf);
    let mut checks = Checks(Vec::new());

    let formulas = frobenius_formulas(&g, cfg.opts);
    checks.run("semigroup_frobenius", || {
        let formula = formulas.clone()?.semigroup.or_sentinel();
        let brute = if trivial {
            -1
        } else {
            frobenius_bruteforce(sf, Kind::Semigroup)?
        };
        let apery = apery_selmer(sf).frobenius.or_sentinel();
        Ok((
            formula == brute && brute == apery,
            format!("formula {formula}, brute force {brute}, Apery {apery}"),
        ))
    });
    checks.run("module_frobenius", || {
        let formula = formulas.clone()?.module.unwrap_or(-1);
        let brute = if rational {
            -1
        } else {
            frobenius_bruteforce(sf, Kind::Module)?
        };
        Ok((
            formula == brute,
            format!("formula {formula}, brute force {brute}"),
        ))
    });
    checks.run("gap_count", || {
        let ap = apery_selmer(sf);
        let f = ap.frobenius.or_sentinel();
        let direct = (0..=f)
            .filter(|&l| !contains(sf, Kind::Semigroup, l))
            .count() as u64;
        Ok((
            direct == ap.gaps,
            format!("Apery {}, direct count {direct}", ap.gaps),
        ))
    });
    checks.run("duality", || {
        let r = dual_check_with(&g, cfg.opts)?;
        Ok((
            r.passed(),
            r.first_failure
                .unwrap_or_else(|| format!("{} identities", r.checked)),
        ))
    });
    checks.run("tie_break_invariance", || {
        let base = scalars_with(&g, cfg.opts.with_tie_break(TieBreak::Smallest))?;
        for tb in [TieBreak::Largest, TieBreak::Random(cfg.seed)] {
            let other = scalars_with(&g, cfg.opts.with_tie_break(tb))?;
            if other.s_zk != base.s_zk || other.s_zk_e0 != base.s_zk_e0 {
                return Ok((false, format!("{tb:?} reaches a different endpoint")));
            }
        }
        Ok((true, "3 strategies agree".into()))
    });
    checks.run("trace_chi_monotone", || {
        let e0 = dual_cycle(&g, CENTER)?;
        let sc = scalars_with(&g, cfg.opts)?;
        for start in [sc.z_k.clone(), &sc.z_k + &e0] {
            let r = ClassRep::of(&start).representative();
            let (_, trace) = to_antinef_with(&g, &r, cfg.opts.recording())?;
            if !check_trace(&g, &trace)? {
                return Ok((false, format!("trace from {r} violates a step invariant")));
            }
        }
        Ok((true, "traces of [Z_K] and [Z_K + E_0^*]".into()))
    });
    if is_numerically_gorenstein(sf) {
        checks.run("gorenstein_symmetry", || {
            let r = gorenstein_symmetry_check(sf)?;
            Ok((
                r.passed(),
                r.first_failure
                    .unwrap_or_else(|| "N(l) + N(gamma - l) = -2".into()),
            ))
        });
    }
    if cfg.prop_comp {
        let f = apery_selmer(sf).frobenius.or_sentinel();
        let bound = f.max(0) + 2 * inv.alpha;
        checks.run("prop_comp", || {
            let r = verify_prop_comp(sf, bound, cfg.opts)?;
            let n = r
                .n_used()
                .expect("verify_prop_comp errors when no n passes");
            let pair = augment(sf, n)?;
            let zk = zk_identity_check(&pair)?;
            let proj = projection_basics(&pair)?;
            let dagger = dagger_failure(&pair, -2 * inv.alpha, 3 * inv.alpha);
            Ok((
                zk.passed() && proj && dagger.is_none(),
                format!(
                    "n = {n}, Z_K(n) closed form {}, projection {}, dagger {}",
                    zk.passed(),
                    proj,
                    dagger.map_or("ok".to_string(), |l| format!("fails at {l}"))
                ),
            ))
        });
    }
    VerifyReport {
        seifert: sf.clone(),
        checks: checks.0,
    }
}

/// Brieskorn-Hamm checks followed by the Seifert suite on the synthesized data.
/// `Ok(None)` for links that are not rational homology spheres.
pub fn verify_brieskorn(a: &[i64], cfg: VerifyConfig) -> Result<Option<VerifyReport>> {
    let cls = classify(a)?;
    if !cls.is_qhs() {
        return Ok(None);
    }
    let sf = bh_seifert(&cls)?;
    let gens = bh_generators(&cls)?;
    let mut report = verify_seifert(&sf, cfg);
    report.checks.push(Check {
        name: "bh_generators_sieve",
        passed: generators_match(&sf, &gens),
        detail: format!("{gens:?}"),
    });
    let minimal = minimal_generators(&SemigroupView::semigroup(&sf))?;
    report.checks.push(Check {
        name: "bh_generators_minimal",
        passed: minimal == gens,
        detail: format!("minimal generators {minimal:?}"),
    });
    Ok(Some(report))
}
