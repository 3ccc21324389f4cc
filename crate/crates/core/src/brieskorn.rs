//! Brieskorn-Hamm links `Sigma(a_1, ..., a_n)` that are rational homology
//! spheres: recognition, Seifert invariants, and semigroup generators.

use num_integer::Integer;

use crate::rational::{lcm, mod_inverse, q, Q};
use crate::seifert::{invariants, SeifertData};
use crate::semigroup::{contains, frobenius_of_generators, sieve, Kind};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BhCase {
    /// `a = (m p_1, m p_2, p_3, ..., p_n)`.
    I {
        m: i64,
    },
    /// `a = (2^c p_1, 2 p_2, 2 p_3, p_4, ..., p_n)` with odd `p_i`.
    II {
        c: u32,
    },
    NotQhs,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BhClassification {
    pub a: Vec<i64>,
    pub case: BhCase,
    /// `order[k]` is the index into `a` of the `k`-th normalized entry.
    pub order: Vec<usize>,
    pub p: Vec<i64>,
    pub alphas: Vec<i64>,
    /// How many legs carry `alphas[k]`.
    pub multiplicities: Vec<i64>,
}

impl BhClassification {
    pub fn is_qhs(&self) -> bool {
        self.case != BhCase::NotQhs
    }

    /// Order of `[E_0^*]`: `1` in case (i), `2` in case (ii).
    pub fn orbit_order(&self) -> Option<i64> {
        match self.case {
            BhCase::I { .. } => Some(1),
            BhCase::II { .. } => Some(2),
            BhCase::NotQhs => None,
        }
    }

    fn not_qhs(a: &[i64]) -> Self {
        BhClassification {
            a: a.to_vec(),
            case: BhCase::NotQhs,
            order: Vec::new(),
            p: Vec::new(),
            alphas: Vec::new(),
            multiplicities: Vec::new(),
        }
    }
}

fn pairwise_coprime(xs: &[i64]) -> bool {
    (0..xs.len()).all(|i| (i + 1..xs.len()).all(|j| xs[i].gcd(&xs[j]) == 1))
}

fn two_adic(x: i64) -> u32 {
    x.trailing_zeros()
}

/// Tries every placement of the two `m`-multiples (case (i)) and of the
/// three even entries (case (ii)).
pub fn classify(a: &[i64]) -> Result<BhClassification> {
    let n = a.len();
    if n < 3 || a.iter().any(|&x| x < 2) {
        return Err(Error::InvalidInput(format!(
            "Brieskorn-Hamm exponents need n >= 3 entries, each >= 2; got {a:?}"
        )));
    }
    for i in 0..n {
        for j in i + 1..n {
            let m = a[i].gcd(&a[j]);
            let mut order = vec![i, j];
            order.extend((0..n).filter(|&k| k != i && k != j));
            let p: Vec<i64> = order
                .iter()
                .enumerate()
                .map(|(k, &idx)| if k < 2 { a[idx] / m } else { a[idx] })
                .collect();
            if pairwise_coprime(&p) && p[2..].iter().all(|&x| m.gcd(&x) == 1) {
                let mut multiplicities = vec![1, 1];
                multiplicities.extend(std::iter::repeat_n(m, n - 2));
                return Ok(BhClassification {
                    a: a.to_vec(),
                    case: BhCase::I { m },
                    order,
                    alphas: p.clone(),
                    p,
                    multiplicities,
                });
            }
        }
    }

    let evens: Vec<usize> = (0..n).filter(|&k| a[k] % 2 == 0).collect();
    if evens.len() == 3 {
        let high: Vec<usize> = evens
            .iter()
            .copied()
            .filter(|&k| two_adic(a[k]) > 1)
            .collect();
        let first = match high.len() {
            0 => Some(evens[0]),
            1 => Some(high[0]),
            _ => None,
        };
        if let Some(first) = first {
            let c = two_adic(a[first]);
            let mut order = vec![first];
            order.extend(evens.iter().copied().filter(|&k| k != first));
            order.extend((0..n).filter(|&k| a[k] % 2 != 0));
            let p: Vec<i64> = order
                .iter()
                .enumerate()
                .map(|(k, &idx)| match k {
                    0 => a[idx] >> c,
                    1 | 2 => a[idx] / 2,
                    _ => a[idx],
                })
                .collect();
            if p.iter().all(|&x| x % 2 != 0) && pairwise_coprime(&p) {
                let mut alphas = p.clone();
                alphas[0] = p[0] << (c - 1);
                let multiplicities = (0..n).map(|k| if k < 3 { 2 } else { 4 }).collect();
                return Ok(BhClassification {
                    a: a.to_vec(),
                    case: BhCase::II { c },
                    order,
                    p,
                    alphas,
                    multiplicities,
                });
            }
        }
    }
    Ok(BhClassification::not_qhs(a))
}

fn hat(alphas: &[i64], i: usize) -> i64 {
    alphas
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != i)
        .map(|(_, &x)| x)
        .product()
}

/// Case (i): `{hat_1, hat_2} u {m hat_i : i >= 3}`; case (ii):
/// `{hat_i : i <= 3} u {2 hat_i : i >= 4}`, `hat_i = prod_{j != i} alpha_j`.
/// Sorted; duplicates and elements generated by the others are dropped,
/// which only happens when some `alpha_i = 1`.
pub fn bh_generators(cls: &BhClassification) -> Result<Vec<i64>> {
    let al = &cls.alphas;
    let mut gens: Vec<i64> = match cls.case {
        BhCase::I { m } => (0..al.len())
            .map(|i| if i < 2 { hat(al, i) } else { m * hat(al, i) })
            .collect(),
        BhCase::II { .. } => (0..al.len())
            .map(|i| if i < 3 { hat(al, i) } else { 2 * hat(al, i) })
            .collect(),
        BhCase::NotQhs => return Err(Error::NotQhs(cls.a.clone())),
    };
    gens.sort_unstable();
    gens.dedup();
    let mut minimal: Vec<i64> = Vec::with_capacity(gens.len());
    for g in gens {
        if !sieve(&minimal, g)[g as usize] {
            minimal.push(g);
        }
    }
    Ok(minimal)
}

/// Seifert invariants with the classified multiplicities (legs with
/// `alpha = 1` dropped) and `alpha |e|` equal to the orbit order. When several
/// completions pass validation the least one (by legs, then `b0`) is taken.
pub fn bh_seifert(cls: &BhClassification) -> Result<SeifertData> {
    Ok(bh_seifert_candidates(cls)?.swap_remove(0))
}

/// Every completion passing validation, sorted; never empty.
pub fn bh_seifert_candidates(cls: &BhClassification) -> Result<Vec<SeifertData>> {
    let orbit = cls
        .orbit_order()
        .ok_or_else(|| Error::NotQhs(cls.a.clone()))?;
    let omega_choices: Vec<Vec<i64>> = match cls.case {
        BhCase::I { .. } => {
            let l = cls.a.iter().fold(1i64, |acc, &x| lcm(acc, x));
            cls.order
                .iter()
                .zip(&cls.alphas)
                .map(|(&idx, &alpha)| {
                    let q = l / cls.a[idx];
                    if alpha == 1 {
                        vec![0]
                    } else {
                        let inv = mod_inverse(q.rem_euclid(alpha), alpha).expect("coprime");
                        vec![(-inv).rem_euclid(alpha)]
                    }
                })
                .collect()
        }
        _ => case_ii_omega_choices(cls),
    };
    let gens = bh_generators(cls)?;
    let mut passing = Vec::new();
    for omegas in cartesian(&omega_choices) {
        if let Some(sf) = assemble(cls, &omegas, orbit) {
            if generators_match(&sf, &gens) {
                passing.push(sf);
            }
        }
    }
    passing.sort_by(|x, y| x.legs().cmp(y.legs()).then(x.b0().cmp(&y.b0())));
    if passing.is_empty() {
        return Err(Error::Internal(format!(
            "no Seifert completion of {:?} ({:?}) matches the generators {gens:?}",
            cls.a, cls.case
        )));
    }
    Ok(passing)
}

/// Per group, every `omega` in `(0, alpha)` coprime to `alpha` with
/// `s omega (A / alpha) = -o (mod alpha)`, `A = prod alpha_j`.
fn case_ii_omega_choices(cls: &BhClassification) -> Vec<Vec<i64>> {
    let total: i64 = cls.alphas.iter().product();
    let orbit = 2;
    cls.alphas
        .iter()
        .zip(&cls.multiplicities)
        .map(|(&alpha, &s)| {
            if alpha == 1 {
                return vec![0];
            }
            let cof = total / alpha;
            (1..alpha)
                .filter(|&w| w.gcd(&alpha) == 1)
                .filter(|&w| (s * w % alpha * (cof % alpha) + orbit).rem_euclid(alpha) == 0)
                .collect()
        })
        .collect()
}

fn cartesian(choices: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for opts in choices {
        let mut next = Vec::with_capacity(out.len() * opts.len());
        for prefix in &out {
            for &w in opts {
                let mut v = prefix.clone();
                v.push(w);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

fn assemble(cls: &BhClassification, omegas: &[i64], orbit: i64) -> Option<SeifertData> {
    let mut legs = Vec::new();
    let mut sum = Q::from_integer(0.into());
    for ((&alpha, &s), &w) in cls.alphas.iter().zip(&cls.multiplicities).zip(omegas) {
        if alpha == 1 {
            continue;
        }
        for _ in 0..s {
            legs.push((alpha, w));
        }
        sum += q(s * w, alpha);
    }
    let big_alpha = legs.iter().fold(1i64, |acc, &(a, _)| lcm(acc, a));
    // alpha (b0 - sum) = o
    let b0 = sum + q(orbit, big_alpha);
    if !b0.is_integer() {
        return None;
    }
    let b0 = crate::rational::floor_i64(&b0);
    let sf = SeifertData::new(b0, legs).ok()?;
    (invariants(&sf).orbit_order == orbit).then_some(sf)
}

/// `{N >= 0}` agrees with the monoid of `gens` on `[0, f + 2 alpha]`.
pub fn generators_match(sf: &SeifertData, gens: &[i64]) -> bool {
    let Some(f) = frobenius_of_generators(gens) else {
        return false;
    };
    let hi = f + 2 * invariants(sf).alpha;
    let table = sieve(gens, hi);
    (0..=hi).all(|l| table[l as usize] == contains(sf, Kind::Semigroup, l))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::{minimal_generators, SemigroupView};

    #[test]
    fn classify_examples() {
        let c = classify(&[2, 3, 7]).unwrap();
        assert_eq!(c.case, BhCase::I { m: 1 });
        let c = classify(&[6, 10, 7]).unwrap();
        assert_eq!(c.case, BhCase::I { m: 2 });
        assert_eq!(c.p, vec![3, 5, 7]);
        assert_eq!(c.multiplicities, vec![1, 1, 2]);
        let c = classify(&[6, 10, 14]).unwrap();
        assert_eq!(c.case, BhCase::II { c: 1 });
        assert_eq!(c.alphas, vec![3, 5, 7]);
        assert_eq!(classify(&[4, 4, 4]).unwrap().case, BhCase::NotQhs);
        assert!(classify(&[2, 3]).is_err());
    }

    #[test]
    fn generator_examples() {
        assert_eq!(
            bh_generators(&classify(&[2, 3, 7]).unwrap()).unwrap(),
            vec![6, 14, 21]
        );
        assert_eq!(
            bh_generators(&classify(&[6, 10, 7]).unwrap()).unwrap(),
            vec![21, 30, 35]
        );
        assert_eq!(
            bh_generators(&classify(&[6, 10, 14]).unwrap()).unwrap(),
            vec![15, 21, 35]
        );
        assert!(bh_generators(&classify(&[4, 4, 4]).unwrap()).is_err());
    }

    #[test]
    fn seifert_examples() {
        let sf = bh_seifert(&classify(&[2, 3, 7]).unwrap()).unwrap();
        assert_eq!(
            sf,
            SeifertData::new(1, vec![(2, 1), (3, 1), (7, 1)]).unwrap()
        );
        for a in [[6, 10, 7], [6, 10, 14], [2, 3, 7], [4, 6, 5]] {
            let cls = classify(&a).unwrap();
            let sf = bh_seifert(&cls).unwrap();
            let gens = bh_generators(&cls).unwrap();
            assert!(generators_match(&sf, &gens), "{a:?}");
            let view = SemigroupView::semigroup(&sf);
            assert_eq!(minimal_generators(&view).unwrap(), gens, "{a:?}");
        }
    }
}
