//! Truncated power series with exact rational coefficients.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// A power series known modulo `z^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesQ {
    coeffs: Vec<BigRational>,
}

impl SeriesQ {
    pub fn zero(order: usize) -> Self {
        SeriesQ {
            coeffs: vec![BigRational::zero(); order],
        }
    }

    /// Series from leading coefficients; missing ones are zero up to `order`.
    pub fn from_coeffs(coeffs: Vec<BigRational>, order: usize) -> Self {
        let mut coeffs = coeffs;
        coeffs.resize(order, BigRational::zero());
        SeriesQ { coeffs }
    }

    /// Constant plus linear polynomial `c0 + c1·z`.
    pub fn linear(c0: i64, c1: i64, order: usize) -> Self {
        Self::from_coeffs(vec![int(c0), int(c1)], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        SeriesQ {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// `(1 + a·z)^e` by the generalized binomial theorem:
    /// `Σ_k C(e, k) a^k z^k`, with `C(e, k+1) = C(e, k)·(e - k)/(k + 1)`.
    pub fn binomial(a: &BigRational, e: &BigRational, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order);
        let mut binom = BigRational::one();
        let mut power = BigRational::one();
        for k in 0..order {
            coeffs.push(&binom * &power);
            let kq = BigRational::from_integer(BigInt::from(k));
            binom = binom * (e - &kq) / (kq + BigRational::one());
            power *= a;
        }
        SeriesQ { coeffs }
    }

    /// Divides by `z`; `None` unless the constant term is zero. The result
    /// is known to one order less.
    pub fn div_z(&self) -> Option<Self> {
        match self.coeffs.first() {
            Some(c) if c.is_zero() => Some(SeriesQ {
                coeffs: self.coeffs[1..].to_vec(),
            }),
            _ => None,
        }
    }
}

pub(crate) fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Add for &SeriesQ {
    type Output = SeriesQ;

    fn add(self, rhs: &SeriesQ) -> SeriesQ {
        let order = self.order().min(rhs.order());
        SeriesQ {
            coeffs: (0..order).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect(),
        }
    }
}

impl Sub for &SeriesQ {
    type Output = SeriesQ;

    fn sub(self, rhs: &SeriesQ) -> SeriesQ {
        let order = self.order().min(rhs.order());
        SeriesQ {
            coeffs: (0..order).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect(),
        }
    }
}

impl Neg for &SeriesQ {
    type Output = SeriesQ;

    fn neg(self) -> SeriesQ {
        SeriesQ {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &SeriesQ {
    type Output = SeriesQ;

    fn mul(self, rhs: &SeriesQ) -> SeriesQ {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![BigRational::zero(); order];
        for (i, a) in self.coeffs.iter().take(order).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order - i).enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        SeriesQ { coeffs }
    }
}
