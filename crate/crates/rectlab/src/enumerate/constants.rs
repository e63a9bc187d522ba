use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use super::guillotine::CountTable;

pub const MATRIX_A: [[f64; 4]; 4] = [[2., 3., 3., 4.], [2., 3., 2., 3.], [2., 2., 3., 3.], [2., 2., 2., 2.]];
pub const MATRIX_A_PRIME: [[f64; 4]; 4] = [[2., 2., 2., 2.], [1., 1., 2., 2.], [1., 2., 1., 2.], [0., 1., 1., 2.]];

const TOLERANCE: f64 = 1e-12;

/// Perron root of a primitive non-negative matrix, by power iteration.
pub fn spectral_radius(m: &[[f64; 4]; 4]) -> f64 {
    let mut v = [1.0; 4];
    let mut lambda = 0.0;
    for _ in 0..10_000 {
        let mut w = [0.0; 4];
        for (i, row) in m.iter().enumerate() {
            w[i] = row.iter().zip(&v).map(|(a, b)| a * b).sum();
        }
        let norm = w.iter().cloned().fold(0.0, f64::max);
        v = w.map(|c| c / norm);
        if (norm - lambda).abs() < 1e-15 * norm {
            return norm;
        }
        lambda = norm;
    }
    lambda
}

/// `2 (2 + v) / (2v^2 + 18v + 27 + (9 + 4v)^{3/2})`, for `v >= -9/4`.
pub fn rho(v: f64) -> f64 {
    2.0 * (2.0 + v) / (2.0 * v * v + 18.0 * v + 27.0 + (9.0 + 4.0 * v).powf(1.5))
}

fn exact_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let root = |n: &BigInt| {
        let r = n.sqrt();
        (&r * &r == *n).then_some(r)
    };
    Some(BigRational::new(root(q.numer())?, root(q.denom())?))
}

/// `rho(v)` in exact arithmetic, when `9 + 4v` is a rational square.
pub fn rho_exact(v: &BigRational) -> Option<BigRational> {
    let int = |k: i64| BigRational::from_integer(k.into());
    let s = exact_sqrt(&(int(9) + int(4) * v))?;
    let denominator = int(2) * v * v + int(18) * v + int(27) + &s * &s * &s;
    Some(int(2) * (int(2) + v) / denominator)
}

fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let lo_sign = f(lo).signum();
    assert_ne!(lo_sign, f(hi).signum(), "no sign change on [{lo}, {hi}]");
    while hi - lo > TOLERANCE {
        let mid = 0.5 * (lo + hi);
        if f(mid).signum() == lo_sign {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Smallest root in `(lo, hi]`, bracketed by scanning with step `step`.
fn first_root(f: impl Fn(f64) -> f64, lo: f64, hi: f64, step: f64) -> Option<f64> {
    let sign = f(lo).signum();
    let mut a = lo;
    while a < hi {
        let b = (a + step).min(hi);
        if f(b).signum() != sign {
            return Some(bisect(&f, a, b));
        }
        a = b;
    }
    None
}

pub fn x0_polynomial(x: f64) -> f64 {
    (((2.0 * x - 29.0) * x + 36.0) * x - 8.0) * x * x - 8.0
}

/// The positive root of `2x^5 - 29x^4 + 36x^3 - 8x^2 - 8`.
pub fn x0() -> f64 {
    let signs: Vec<f64> = (1..=64).map(|k| x0_polynomial(k as f64).signum()).collect();
    let changes = signs.windows(2).filter(|w| w[0] != w[1]).count();
    assert_eq!(changes, 1, "expected a single sign change on the integers");
    assert!(x0_polynomial(1e-9) < 0.0 && signs[0] < 0.0);
    bisect(x0_polynomial, 1e-9, 64.0)
}

/// `1 / z`, for `z` the smallest positive solution of `z = rho(-2 sum g_i z^i)`.
fn inverse_fixed_point(g: &[f64]) -> f64 {
    let v = |z: f64| -2.0 * g.iter().enumerate().map(|(i, c)| c * z.powi(i as i32 + 1)).sum::<f64>();
    let f = |z: f64| {
        let v = v(z);
        if v < -2.25 {
            f64::INFINITY
        } else {
            z - rho(v)
        }
    };
    1.0 / first_root(f, 1e-9, 1.0, 1e-4).expect("fixed point in (0, 1]")
}

/// The bound `1 / z0` from the first `k` strong guillotine counts.
pub fn z0_bound(k: usize) -> f64 {
    let table = CountTable::new(k);
    let g: Vec<f64> = (1..=k).map(|n| table.total(n).to_f64().expect("finite")).collect();
    inverse_fixed_point(&g)
}

/// `1 / x` for the smallest positive root of `1 - 6x - 5x^2 + 2x^3 + x^4`.
pub fn lower_bound() -> f64 {
    let f = |x: f64| (((x + 2.0) * x - 5.0) * x - 6.0) * x + 1.0;
    1.0 / first_root(f, 1e-9, 1.0, 1e-3).expect("root in (0, 1)")
}

pub fn lower_bound_closed_form() -> f64 {
    let r2 = 2f64.sqrt();
    0.5 * (1.0 + (13.0 - 8.0 * r2).sqrt()) * (3.0 + 2.0 * r2)
}

#[derive(Clone, Debug)]
pub struct GrowthConstants {
    pub gamma: f64,
    pub gamma_closed_form: f64,
    pub gamma_prime: f64,
    pub gamma_prime_closed_form: f64,
    pub rho_zero: BigRational,
    pub x0: f64,
    /// `1 / z` for `z = rho(-2z)`, the single-term case of the fixed point.
    pub x0_via_rho: f64,
    pub lower_bound: f64,
    pub lower_bound_closed_form: f64,
    pub z0_terms: usize,
    pub z0_bound: f64,
}

pub fn growth_constants(z0_terms: usize) -> GrowthConstants {
    GrowthConstants {
        gamma: spectral_radius(&MATRIX_A),
        gamma_closed_form: (9.0 + 113f64.sqrt()) / 2.0,
        gamma_prime: spectral_radius(&MATRIX_A_PRIME),
        gamma_prime_closed_form: (7.0 + 17f64.sqrt()) / 2.0,
        rho_zero: rho_exact(&BigRational::from_integer(BigInt::from(0))).expect("9 is a square"),
        x0: x0(),
        x0_via_rho: inverse_fixed_point(&[1.0]),
        lower_bound: lower_bound(),
        lower_bound_closed_form: lower_bound_closed_form(),
        z0_terms,
        z0_bound: z0_bound(z0_terms),
    }
}
