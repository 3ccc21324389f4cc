//! Seeded samplers for test and verification suites.

use num_integer::Integer;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::rational::lcm;
use crate::seifert::SeifertData;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeifertBox {
    pub max_alpha: i64,
    pub max_legs: usize,
    /// Optional upper bound on `lcm(alpha_i)`; samples above it are redrawn.
    pub lcm_cap: i64,
}

impl Default for SeifertBox {
    fn default() -> Self {
        SeifertBox {
            max_alpha: 30,
            max_legs: 5,
            lcm_cap: i64::MAX,
        }
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// One normalized Seifert datum with `3 <= d <= max_legs` and `e < 0`.
/// `b0` ranges from its smallest admissible value up to `d`, so both trivial
/// and non-trivial semigroups occur.
pub fn random_seifert(rng: &mut impl Rng, bx: SeifertBox) -> SeifertData {
    assert!(bx.max_alpha >= 2 && bx.max_legs >= 3);
    loop {
        let d = rng.gen_range(3..=bx.max_legs);
        let mut legs = Vec::with_capacity(d);
        let mut big_alpha = 1i64;
        for _ in 0..d {
            let a = rng.gen_range(2..=bx.max_alpha);
            let omegas: Vec<i64> = (1..a).filter(|w| w.gcd(&a) == 1).collect();
            legs.push((a, *omegas.choose(rng).expect("omega = 1 always qualifies")));
            big_alpha = lcm(big_alpha, a);
        }
        if big_alpha > bx.lcm_cap {
            continue;
        }
        // e < 0 iff b0 > sum omega_i/alpha_i.
        let mut numer = 0i64;
        for &(a, w) in &legs {
            numer += w * (big_alpha / a);
        }
        let b_min = numer / big_alpha + 1;
        let b_max = b_min.max(d as i64);
        let b0 = rng.gen_range(b_min..=b_max);
        return SeifertData::new(b0, legs).expect("sampled data is normalized");
    }
}

pub fn seifert_sample(seed: u64, count: usize, bx: SeifertBox) -> Vec<SeifertData> {
    let mut r = rng(seed);
    (0..count).map(|_| random_seifert(&mut r, bx)).collect()
}

/// Pairwise coprime `alpha_1, ..., alpha_d` in `[2, max_alpha]`.
pub fn random_coprime(rng: &mut impl Rng, d: usize, max_alpha: i64) -> Vec<i64> {
    loop {
        let mut out: Vec<i64> = Vec::with_capacity(d);
        for _ in 0..d {
            let pool: Vec<i64> = (2..=max_alpha)
                .filter(|a| out.iter().all(|b| a.gcd(b) == 1))
                .collect();
            match pool.choose(rng) {
                Some(&a) => out.push(a),
                None => break,
            }
        }
        if out.len() == d {
            return out;
        }
    }
}

/// `count` coprime tuples with `d` drawn uniformly from `legs`.
pub fn coprime_sample(seed: u64, count: usize, legs: &[usize], max_alpha: i64) -> Vec<Vec<i64>> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let d = *legs.choose(&mut r).expect("non-empty leg choices");
            random_coprime(&mut r, d, max_alpha)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seifert::invariants;
    use num_traits::Signed;

    #[test]
    fn samples_are_reproducible_and_valid() {
        let bx = SeifertBox::default();
        let a = seifert_sample(7, 50, bx);
        assert_eq!(a, seifert_sample(7, 50, bx));
        for sf in &a {
            assert!(sf.d() >= 3 && sf.d() <= bx.max_legs);
            assert!(invariants(sf).alpha <= bx.lcm_cap);
            assert!(sf.orbifold_euler().is_negative());
        }
        assert!(a.iter().any(|sf| sf.b0() < sf.d() as i64));
        assert!(a.iter().any(|sf| sf.b0() >= sf.d() as i64));
    }

    #[test]
    fn coprime_tuples() {
        for t in coprime_sample(3, 100, &[3, 4], 25) {
            assert!(t.len() == 3 || t.len() == 4);
            for i in 0..t.len() {
                assert!((2..=25).contains(&t[i]));
                for j in i + 1..t.len() {
                    assert_eq!(t[i].gcd(&t[j]), 1);
                }
            }
        }
    }
}
