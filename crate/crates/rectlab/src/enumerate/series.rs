use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Power series with exact rational coefficients, truncated after `x^order`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Series {
    coeffs: Vec<BigRational>,
}

impl Series {
    pub fn zero(order: usize) -> Self {
        Series { coeffs: vec![BigRational::zero(); order + 1] }
    }

    pub fn constant(c: BigRational, order: usize) -> Self {
        let mut s = Series::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Series::constant(BigRational::one(), order)
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        Series::from_ints(&[0, 1], order)
    }

    /// Polynomial with the given integer coefficients, lowest degree first.
    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        let mut s = Series::zero(order);
        for (i, &c) in coeffs.iter().enumerate().take(order + 1) {
            s.coeffs[i] = BigRational::from_integer(BigInt::from(c));
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &BigRational {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient `i` as a natural number, if it is one.
    pub fn natural(&self, i: usize) -> Option<BigUint> {
        let c = &self.coeffs[i];
        (c.is_integer() && !c.is_negative()).then(|| c.to_integer().to_biguint().expect("non-negative"))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Series { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Multiplicative inverse by Newton iteration `g <- g (2 - f g)`.
    pub fn inverse(&self) -> Self {
        let c0 = &self.coeffs[0];
        assert!(!c0.is_zero(), "constant term must be invertible");
        let order = self.order();
        let two = Series::constant(BigRational::from_integer(2.into()), order);
        let mut g = Series::constant(c0.recip(), order);
        loop {
            let next = &g * &(&two - &(self * &g));
            if next == g {
                return g;
            }
            g = next;
        }
    }

    /// Square root with constant term 1, by Newton iteration
    /// `s <- (s + f / s) / 2` starting from 1.
    pub fn sqrt(&self) -> Self {
        assert!(self.coeffs[0].is_one(), "constant term must be 1");
        let order = self.order();
        let half = BigRational::new(1.into(), 2.into());
        let mut s = Series::one(order);
        loop {
            let next = (&s + &(self * &s.inverse())).scale(&half);
            if next == s {
                return s;
            }
            s = next;
        }
    }
}

impl Add for &Series {
    type Output = Series;

    fn add(self, rhs: &Series) -> Series {
        Series { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &Series {
    type Output = Series;

    fn sub(self, rhs: &Series) -> Series {
        Series { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &Series {
    type Output = Series;

    fn neg(self) -> Series {
        Series { coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }
}

impl Mul for &Series {
    type Output = Series;

    fn mul(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        let mut out = Series::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &Series) -> Vec<i64> {
        s.coeffs().iter().map(|c| i64::try_from(c.to_integer()).unwrap()).collect()
    }

    #[test]
    fn geometric_inverse() {
        let one_minus_x = Series::from_ints(&[1, -1], 6);
        assert_eq!(ints(&one_minus_x.inverse()), vec![1; 7]);
    }

    #[test]
    fn sqrt_squares_back() {
        let f = Series::from_ints(&[1, -6, 1], 12);
        let s = f.sqrt();
        assert_eq!(&s * &s, f);
        // Schröder: (1 - x - sqrt(1 - 6x + x^2)) / 2
        let g = (&Series::from_ints(&[1, -1], 12) - &s).scale(&BigRational::new(1.into(), 2.into()));
        assert_eq!(ints(&g)[..6], [0, 1, 2, 6, 22, 90]);
    }
}
