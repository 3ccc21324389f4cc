//! Seifert invariants, the quasi-linear function `N(l)`, and the scalar
//! invariants derived from them.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::lattice::{canonical_cycle, StarGraph};
use crate::rational::{ceil_div, floor_i64, lcm, mod_inverse, q, qi, Q};
use crate::{Error, Result};

/// Normalized Seifert invariants `(-b0; (alpha_i, omega_i))` of a
/// negative-definite rational homology sphere with `d >= 3` legs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSeifert", into = "RawSeifert")]
pub struct SeifertData {
    b0: i64,
    legs: Vec<(i64, i64)>,
}

#[derive(Serialize, Deserialize)]
struct RawSeifert {
    b0: i64,
    legs: Vec<(i64, i64)>,
}

impl TryFrom<RawSeifert> for SeifertData {
    type Error = Error;
    fn try_from(raw: RawSeifert) -> Result<Self> {
        SeifertData::new(raw.b0, raw.legs)
    }
}

impl From<SeifertData> for RawSeifert {
    fn from(sf: SeifertData) -> Self {
        RawSeifert {
            b0: sf.b0,
            legs: sf.legs,
        }
    }
}

impl SeifertData {
    pub fn new(b0: i64, legs: Vec<(i64, i64)>) -> Result<Self> {
        let sf = SeifertData { b0, legs };
        sf.validate()?;
        Ok(sf)
    }

    pub(crate) fn validate(&self) -> Result<()> {
        for &(alpha, omega) in &self.legs {
            if alpha < 2 || omega <= 0 || omega >= alpha {
                return Err(Error::InvalidSeifert(format!(
                    "leg ({alpha}, {omega}) is not normalized: need 0 < omega < alpha"
                )));
            }
            if alpha.gcd(&omega) != 1 {
                return Err(Error::InvalidSeifert(format!(
                    "leg ({alpha}, {omega}) has gcd(alpha, omega) != 1"
                )));
            }
        }
        if self.legs.len() < 3 {
            return Err(Error::TooFewLegs(self.legs.len()));
        }
        let e = self.orbifold_euler();
        if !e.is_negative() {
            return Err(Error::NotNegativeDefinite {
                e: crate::rational::format_q(&e),
            });
        }
        Ok(())
    }

    pub fn b0(&self) -> i64 {
        self.b0
    }

    pub fn legs(&self) -> &[(i64, i64)] {
        &self.legs
    }

    pub fn d(&self) -> usize {
        self.legs.len()
    }

    /// `e = -b0 + sum omega_i / alpha_i`.
    pub fn orbifold_euler(&self) -> Q {
        let mut e = qi(-self.b0);
        for &(a, w) in &self.legs {
            e += q(w, a);
        }
        e
    }

    /// `alpha = lcm(alpha_1, ..., alpha_d)`.
    pub fn alpha(&self) -> i64 {
        self.legs.iter().fold(1, |acc, &(a, _)| lcm(acc, a))
    }

    /// Same invariants with one more leg appended.
    pub fn with_leg(&self, alpha: i64, omega: i64) -> Result<Self> {
        let mut legs = self.legs.clone();
        legs.push((alpha, omega));
        SeifertData::new(self.b0, legs)
    }
}

impl fmt::Display for SeifertData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(-{}", self.b0)?;
        for (a, w) in &self.legs {
            write!(f, "; ({a},{w})")?;
        }
        write!(f, ")")
    }
}

/// Scalar invariants of a Seifert link.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertInvariants {
    pub e: Q,
    /// `lcm` of the `alpha_i`.
    pub alpha: i64,
    /// `|H| = alpha_1 ... alpha_d |e|`.
    pub order_h: i64,
    /// Order of `[E_0^*]` in `H`, `alpha |e|`.
    pub orbit_order: i64,
    pub gamma: Q,
    /// `omega_i'` with `omega_i omega_i' = 1 (mod alpha_i)`.
    pub omega_prime: Vec<i64>,
}

pub fn invariants(sf: &SeifertData) -> SeifertInvariants {
    let e = sf.orbifold_euler();
    let abs_e = e.abs();
    let alpha = sf.alpha();
    let prod = sf
        .legs()
        .iter()
        .fold(BigInt::one(), |acc, &(a, _)| acc * BigInt::from(a));
    let order_h = Q::from_integer(prod) * &abs_e;
    let orbit_order = qi(alpha) * &abs_e;
    assert!(order_h.is_integer() && orbit_order.is_integer());

    let mut inner = qi(sf.d() as i64 - 2);
    for &(a, _) in sf.legs() {
        inner -= q(1, a);
    }
    let gamma = inner / &abs_e;

    let omega_prime = sf
        .legs()
        .iter()
        .map(|&(a, w)| mod_inverse(w, a).expect("normalized leg"))
        .collect();

    SeifertInvariants {
        e,
        alpha,
        order_h: order_h.to_integer().to_i64().expect("|H| fits in i64"),
        orbit_order: orbit_order
            .to_integer()
            .to_i64()
            .expect("orbit order fits in i64"),
        gamma,
        omega_prime,
    }
}

/// The integral homology sphere `Sigma(alpha_1, ..., alpha_d)`: the unique
/// normalized `(b0, omega)` with `alpha (b0 - sum omega_i/alpha_i) = 1`.
pub fn ihs_from_alphas(alphas: &[i64]) -> Result<SeifertData> {
    if alphas.len() < 3 {
        return Err(Error::TooFewLegs(alphas.len()));
    }
    if alphas.iter().any(|&a| a < 2) {
        return Err(Error::InvalidSeifert(format!(
            "alphas {alphas:?} must be >= 2"
        )));
    }
    for i in 0..alphas.len() {
        for j in i + 1..alphas.len() {
            if alphas[i].gcd(&alphas[j]) != 1 {
                return Err(Error::NotCoprime(alphas.to_vec()));
            }
        }
    }
    let alpha: i64 = alphas.iter().product();
    // Mod alpha_i the defining identity reads -(alpha/alpha_i) omega_i = 1.
    let mut legs = Vec::with_capacity(alphas.len());
    let mut numer = 1i64;
    for &a in alphas {
        let cofactor = alpha / a;
        let inv = mod_inverse(cofactor.rem_euclid(a), a).expect("coprime");
        let omega = (-inv).rem_euclid(a);
        numer += omega * cofactor;
        legs.push((a, omega));
    }
    if numer % alpha != 0 {
        return Err(Error::Internal(format!(
            "CRT solution for {alphas:?} does not give an integral b0"
        )));
    }
    let sf = SeifertData::new(numer / alpha, legs)?;
    if qi(alpha) * sf.orbifold_euler() != qi(-1) {
        return Err(Error::Internal(format!("alpha*e != -1 for {sf}")));
    }
    Ok(sf)
}

/// `N(l) = b0 l - sum ceil(l omega_i / alpha_i)`.
pub fn big_n(sf: &SeifertData, ell: i64) -> i64 {
    let mut n = sf.b0 * ell;
    for &(a, w) in &sf.legs {
        n -= ceil_div(ell * w, a);
    }
    n
}

/// `tau(0) = 0`, `tau(l+1) = tau(l) + 1 + N(l)`, for `0 <= l <= up_to`.
pub fn tau_sequence(sf: &SeifertData, up_to: usize) -> Vec<i64> {
    let mut tau = Vec::with_capacity(up_to + 1);
    tau.push(0);
    for ell in 0..up_to {
        let next = tau[ell] + 1 + big_n(sf, ell as i64);
        tau.push(next);
    }
    tau
}

/// `Z_K` has integral coefficients.
pub fn is_numerically_gorenstein(sf: &SeifertData) -> bool {
    canonical_cycle(&StarGraph::from_seifert(sf)).is_integral()
}

/// `p_g = sum_{l >= 0} max(0, -1 - N(l)) = 0`. Only `0 <= l <= gamma` can
/// contribute since `N(l) >= -1` beyond `gamma`.
pub fn is_rational_link(sf: &SeifertData) -> bool {
    geometric_genus(sf) == 0
}

pub fn geometric_genus(sf: &SeifertData) -> u64 {
    let gamma = invariants(sf).gamma;
    if gamma.is_negative() {
        return 0;
    }
    (0..=floor_i64(&gamma))
        .map(|l| (-1 - big_n(sf, l)).max(0) as u64)
        .sum()
}
