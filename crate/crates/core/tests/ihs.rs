mod common;

use num_integer::Integer;
use proptest::prelude::*;
use seifert_core::rational::{floor_i64, qi};
use seifert_core::seifert::{ihs_from_alphas, invariants};
use seifert_core::semigroup::{
    contains, frobenius_bruteforce, frobenius_semigroup_formula, ihs_generators, min_module,
    minimal_generators, sieve, strongly_flat_check, symmetry_report, Kind, SemigroupView,
};
use seifert_core::StarGraph;

fn coprime_tuple() -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(2i64..=25, 3..=4).prop_filter("pairwise coprime", |v| {
        (0..v.len()).all(|i| (i + 1..v.len()).all(|j| v[i].gcd(&v[j]) == 1))
    })
}

#[test]
fn sigma_237() {
    let sf = ihs_from_alphas(&[2, 3, 7]).unwrap();
    assert_eq!(frobenius_bruteforce(&sf, Kind::Semigroup).unwrap(), 43);
    assert_eq!(
        minimal_generators(&SemigroupView::semigroup(&sf)).unwrap(),
        [6, 14, 21]
    );
    assert_eq!(min_module(&sf), -42);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn semigroup_is_generated_by_cofactors(alphas in coprime_tuple()) {
        let sf = ihs_from_alphas(&alphas).unwrap();
        let inv = invariants(&sf);
        let alpha = inv.alpha;
        let f = frobenius_bruteforce(&sf, Kind::Semigroup).unwrap();
        let gens = ihs_generators(&alphas).unwrap();
        let table = sieve(&gens, f + 2 * alpha);
        for l in 0..=f + 2 * alpha {
            prop_assert_eq!(table[l as usize], contains(&sf, Kind::Semigroup, l), "l = {}", l);
        }
        prop_assert_eq!(qi(f), &inv.gamma + qi(alpha));
        let g = StarGraph::from_seifert(&sf);
        prop_assert_eq!(frobenius_semigroup_formula(&g).unwrap().or_sentinel(), f);

        let sym = symmetry_report(&sf);
        prop_assert!(sym.symmetric);
        prop_assert_eq!(min_module(&sf), -alpha);
        for l in -alpha..=f + alpha {
            prop_assert_eq!(contains(&sf, Kind::Module, l), contains(&sf, Kind::Semigroup, l + alpha));
        }
        let flat = strongly_flat_check(&gens).unwrap();
        prop_assert!(flat.is_strongly_flat && flat.attained);
        prop_assert_eq!(flat.frobenius, f);
        prop_assert_eq!(floor_i64(&inv.gamma) + alpha, f);
    }
}
