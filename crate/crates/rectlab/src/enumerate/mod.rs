//! Closed forms, recurrences and generating series.

mod constants;
mod guillotine;
mod series;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

pub use constants::{
    growth_constants, lower_bound, lower_bound_closed_form, rho, rho_exact, spectral_radius, x0, x0_polynomial,
    z0_bound, GrowthConstants, MATRIX_A, MATRIX_A_PRIME,
};
pub use guillotine::{
    strong_count_via_multiplicity, strong_guillotine_count, strong_guillotine_table, weak_classes, CountTable,
    EnumError, Sides, MAX_EXHAUSTIVE_N,
};
pub use series::Series;

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::default();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

fn rational(n: &BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(n.clone()))
}

/// Baxter number `B_n`, evaluated over the rationals.
pub fn baxter_number(n: usize) -> BigUint {
    let m = n + 1;
    let denominator = rational(&(binomial(m, 1) * binomial(m, 2)));
    let mut sum = BigRational::zero();
    for k in 1..=n {
        sum += rational(&(binomial(m, k - 1) * binomial(m, k) * binomial(m, k + 1))) / &denominator;
    }
    assert!(sum.is_integer());
    sum.to_integer().to_biguint().expect("non-negative")
}

/// Generating series of guillotine classes: `G` all, `H` and `V` by the
/// orientation of the first cut.
#[derive(Clone, Debug)]
pub struct SchroderSeries {
    pub g: Series,
    pub h: Series,
    pub v: Series,
}

/// Solves `V = (x + H) G`, `H = V`, `G = x + 2V` to order `order`.
pub fn schroder_series(order: usize) -> SchroderSeries {
    let x = Series::x(order);
    let mut v = Series::zero(order);
    // each pass fixes one more coefficient
    for _ in 0..=order {
        let g = &x + &(&v + &v);
        v = &(&x + &v) * &g;
    }
    let g = &x + &(&v + &v);
    SchroderSeries { g, h: v.clone(), v }
}

/// Coefficients `1..=n` of `G`: weak guillotine rectangulations by size.
pub fn schroder_counts(n: usize) -> Vec<BigUint> {
    let s = schroder_series(n);
    (1..=n).map(|i| s.g.natural(i).expect("integral")).collect()
}

/// `G(x, y)`, guillotine classes weighted by `y` per two-sided segment.
///
/// Solves `V = xG + V (G0 + y G1)` with `H = V`, `G = x + 2V`,
/// `G0 = xG + x` and `G1 = (1 - x) G - x`.
pub fn weighted_guillotine_series(y: &BigRational, order: usize) -> Series {
    let x = Series::x(order);
    let one_minus_x = Series::from_ints(&[1, -1], order);
    let mut v = Series::zero(order);
    for _ in 0..=order {
        let g = &x + &(&v + &v);
        let g0 = &(&x * &g) + &x;
        let g1 = &(&one_minus_x * &g) - &x;
        v = &(&x * &g) + &(&v * &(&g0 + &g1.scale(y)));
    }
    &x + &(&v + &v)
}

/// `(1 + x - x^2 - sqrt(1 - 6x - 5x^2 + 2x^3 + x^4)) / (2 (2 - x))`.
pub fn weighted_closed_form_y2(order: usize) -> Series {
    let root = Series::from_ints(&[1, -6, -5, 2, 1], order).sqrt();
    let numerator = &Series::from_ints(&[1, 1, -1], order) - &root;
    &numerator * &Series::from_ints(&[4, -2], order).inverse()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(v: Vec<BigUint>) -> Vec<u64> {
        v.into_iter().map(|c| u64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn schroder_values() {
        assert_eq!(small(schroder_counts(5)), vec![1, 2, 6, 22, 90]);
        let h = schroder_series(5).h;
        assert_eq!(small((2..=5).map(|i| h.natural(i).unwrap()).collect()), vec![1, 3, 11, 45]);
    }

    #[test]
    fn baxter_values() {
        assert_eq!(small((1..=8).map(baxter_number).collect()), vec![1, 2, 6, 22, 92, 422, 2074, 10754]);
    }

    #[test]
    fn weighted_reduces_to_schroder() {
        let one = BigRational::one();
        assert_eq!(weighted_guillotine_series(&one, 10), schroder_series(10).g);
    }

    #[test]
    fn weighted_matches_closed_form() {
        let two = BigRational::from_integer(2.into());
        assert_eq!(weighted_guillotine_series(&two, 20), weighted_closed_form_y2(20));
    }
}
