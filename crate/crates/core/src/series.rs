//! Truncated univariate power series with rational coefficients.

use std::ops::{Add, Mul};

use num_traits::{One, Zero};

use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Rational>,
}

impl Series {
    /// Series known up to and including `t^order`.
    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![Rational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }

    /// Pads or truncates `coeffs` to the given order.
    pub fn from_coeffs(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| c * factor).collect() }
    }

    /// `-log(1 - t) = Σ_{ℓ≥1} t^ℓ / ℓ`.
    pub fn neg_log_one_minus(order: usize) -> Self {
        let mut s = Self::zero(order);
        for l in 1..=order {
            s.coeffs[l] = Rational::new(1.into(), (l as i64).into());
        }
        s
    }

    /// `exp(self)` for a series without constant term, via `E' = f' E`.
    ///
    /// # Panics
    /// If the constant term is nonzero.
    pub fn exp(&self) -> Self {
        assert!(self.coeffs[0].is_zero(), "exp needs a series without constant term");
        let order = self.order();
        let mut out = Self::zero(order);
        out.coeffs[0] = Rational::one();
        for n in 1..=order {
            let mut acc = Rational::zero();
            for k in 1..=n {
                acc += Rational::from_integer((k as i64).into()) * &self.coeffs[k] * &out.coeffs[n - k];
            }
            out.coeffs[n] = acc / Rational::from_integer((n as i64).into());
        }
        out
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect();
        Series { coeffs }
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        let mut out = Series::zero(order);
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                out.coeffs[i + j] += &self.coeffs[i] * &rhs.coeffs[j];
            }
        }
        out
    }
}

/// `(1 - t)^{-chi}` as `exp(chi · (-log(1 - t)))`.
pub fn one_minus_t_power(chi: &Rational, order: usize) -> Series {
    Series::neg_log_one_minus(order).scale(chi).exp()
}
