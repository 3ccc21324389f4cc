use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::rational::{format_q, frac, Q};

/// Element of `L (x) Q` in the `E_v` basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalCycle(Vec<Q>);

impl RationalCycle {
    pub fn zero(n: usize) -> Self {
        RationalCycle(vec![Q::zero(); n])
    }

    /// The base element `E_v`.
    pub fn basis(n: usize, v: usize) -> Self {
        let mut c = Self::zero(n);
        c.0[v] = Q::one();
        c
    }

    pub fn from_vec(coeffs: Vec<Q>) -> Self {
        RationalCycle(coeffs)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        RationalCycle(
            coeffs
                .iter()
                .map(|&c| Q::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.0
    }

    pub fn into_coeffs(self) -> Vec<Q> {
        self.0
    }

    /// `m_v(l)`, the `E_v`-coefficient.
    pub fn coeff(&self, v: usize) -> &Q {
        &self.0[v]
    }

    /// The `E_0` (center) coefficient.
    pub fn m0(&self) -> &Q {
        &self.0[0]
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| !self.0[v].is_zero()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    /// Componentwise `self >= other`.
    pub fn dominates(&self, other: &RationalCycle) -> bool {
        assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    pub fn is_effective(&self) -> bool {
        self.0.iter().all(|c| !c.is_negative())
    }

    /// Componentwise minimum.
    pub fn min(&self, other: &RationalCycle) -> RationalCycle {
        assert_eq!(self.len(), other.len());
        RationalCycle(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.min(b).clone())
                .collect(),
        )
    }

    pub fn scale(&self, k: &Q) -> RationalCycle {
        RationalCycle(self.0.iter().map(|c| c * k).collect())
    }

    /// `self + k * E_v`.
    pub fn add_base(&mut self, v: usize, k: i64) {
        self.0[v] += Q::from_integer(BigInt::from(k));
    }

    /// Appends zero coefficients up to length `n`.
    pub fn padded(&self, n: usize) -> RationalCycle {
        let mut c = self.0.clone();
        c.resize(n, Q::zero());
        RationalCycle(c)
    }
}

impl Index<usize> for RationalCycle {
    type Output = Q;
    fn index(&self, v: usize) -> &Q {
        &self.0[v]
    }
}

impl Add for &RationalCycle {
    type Output = RationalCycle;
    fn add(self, rhs: &RationalCycle) -> RationalCycle {
        assert_eq!(self.len(), rhs.len(), "cycle length mismatch");
        RationalCycle(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &RationalCycle {
    type Output = RationalCycle;
    fn sub(self, rhs: &RationalCycle) -> RationalCycle {
        assert_eq!(self.len(), rhs.len(), "cycle length mismatch");
        RationalCycle(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Add for RationalCycle {
    type Output = RationalCycle;
    fn add(self, rhs: RationalCycle) -> RationalCycle {
        &self + &rhs
    }
}

impl Sub for RationalCycle {
    type Output = RationalCycle;
    fn sub(self, rhs: RationalCycle) -> RationalCycle {
        &self - &rhs
    }
}

impl Neg for &RationalCycle {
    type Output = RationalCycle;
    fn neg(self) -> RationalCycle {
        RationalCycle(self.0.iter().map(|c| -c).collect())
    }
}

impl Neg for RationalCycle {
    type Output = RationalCycle;
    fn neg(self) -> RationalCycle {
        -&self
    }
}

impl fmt::Display for RationalCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", format_q(c))?;
        }
        write!(f, ")")
    }
}

/// A class `h` in `H = L'/L`, stored as the fractional parts of any
/// representative. Two cycles share a class iff their difference is integral.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClassRep(Vec<Q>);

impl ClassRep {
    pub fn of(l: &RationalCycle) -> Self {
        ClassRep(l.coeffs().iter().map(frac).collect())
    }

    /// The zero class on `n` vertices.
    pub fn zero(n: usize) -> Self {
        ClassRep(vec![Q::zero(); n])
    }

    pub fn fractional(&self) -> &[Q] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// `r_h`, the representative in the cube `[0, 1)^V`.
    pub fn representative(&self) -> RationalCycle {
        RationalCycle(self.0.clone())
    }
}
