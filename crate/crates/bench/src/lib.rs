//! Benchmark fixtures.

use seifert_core::random::{coprime_sample, seifert_sample, SeifertBox};
use seifert_core::seifert::ihs_from_alphas;
use seifert_core::SeifertData;

/// Four legs `(5,1),(5,1),(7,1),(10,1)` with `b0 = 1`.
pub fn four_leg() -> SeifertData {
    SeifertData::new(1, vec![(5, 1), (5, 1), (7, 1), (10, 1)]).unwrap()
}

/// Seven legs with an integral canonical cycle.
pub fn seven_leg() -> SeifertData {
    SeifertData::new(
        2,
        vec![(2, 1), (2, 1), (3, 1), (3, 1), (7, 1), (7, 1), (84, 1)],
    )
    .unwrap()
}

/// Seeded random data in the default box (`alpha_i <= 30`, `d <= 5`).
pub fn random_inputs(count: usize) -> Vec<SeifertData> {
    seifert_sample(1, count, SeifertBox::default())
}

/// Seeded integral homology spheres with three or four legs.
pub fn ihs_inputs(count: usize) -> Vec<SeifertData> {
    coprime_sample(1, count, &[3, 4], 25)
        .iter()
        .map(|a| ihs_from_alphas(a).unwrap())
        .collect()
}
