#![allow(dead_code)]

pub mod boxes;

use seifert_core::rational::q;
use seifert_core::{RationalCycle, SeifertData};

pub fn sf(b0: i64, legs: &[(i64, i64)]) -> SeifertData {
    SeifertData::new(b0, legs.to_vec()).unwrap()
}

pub fn cyc(v: &[(i64, i64)]) -> RationalCycle {
    RationalCycle::from_vec(v.iter().map(|&(n, d)| q(n, d)).collect())
}

/// Four legs `(5,1),(5,1),(7,1),(10,1)` with `b0 = 1`.
pub fn four_leg() -> SeifertData {
    sf(1, &[(5, 1), (5, 1), (7, 1), (10, 1)])
}

/// `four_leg` with the extra leg `(70, 1)`.
pub fn gamma70() -> SeifertData {
    sf(1, &[(5, 1), (5, 1), (7, 1), (10, 1), (70, 1)])
}

pub fn no1() -> SeifertData {
    sf(1, &[(4, 1), (4, 1), (4, 1), (10, 1), (40, 1)])
}

pub fn no2() -> SeifertData {
    sf(
        2,
        &[(2, 1), (2, 1), (3, 1), (3, 1), (7, 1), (7, 1), (84, 1)],
    )
}

use num_integer::Integer;
use proptest::prelude::*;

/// Normalized data with `3 <= d <= max_legs`, `alpha_i <= max_alpha`, and
/// `b0` between its least admissible value and `d + 1`.
pub fn arb_seifert(max_alpha: i64, max_legs: usize) -> impl Strategy<Value = SeifertData> {
    let leg = (2..=max_alpha).prop_flat_map(|a| {
        let omegas: Vec<i64> = (1..a).filter(|w| w.gcd(&a) == 1).collect();
        proptest::sample::select(omegas).prop_map(move |w| (a, w))
    });
    (proptest::collection::vec(leg, 3..=max_legs), 0i64..4).prop_map(|(legs, extra)| {
        let big: i64 = legs.iter().fold(1, |acc, &(a, _)| acc.lcm(&a));
        let numer: i64 = legs.iter().map(|&(a, w)| w * (big / a)).sum();
        SeifertData::new(numer / big + 1 + extra, legs).unwrap()
    })
}
