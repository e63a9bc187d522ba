use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::{leftmost_step, rightmost_step, Color, Variant, WalkPoint};
use crate::enumerate::binomial;

/// Number of excursions with `n` points whose consecutive points all
/// satisfy `step_ok`.
///
/// Forward dynamic programming over `(x, y, color)`; after point `i` the
/// level is at most `n - 1 - i`, otherwise the walk cannot return.
pub fn count_excursions(n: usize, step_ok: impl Fn(&WalkPoint, &WalkPoint) -> bool) -> BigUint {
    if n == 0 {
        return BigUint::zero();
    }
    let side = n + 1;
    let idx = |x: usize, y: usize, c: usize| (x * side + y) * 4 + c;
    let mut layer = vec![BigUint::zero(); side * side * 4];
    for c in 0..4 {
        layer[idx(0, 0, c)] = BigUint::one();
    }
    for i in 1..n {
        let cap = n - 1 - i;
        let mut next = vec![BigUint::zero(); side * side * 4];
        for x in 0..side {
            for y in 0..side - x {
                for (c, &color) in Color::ALL.iter().enumerate() {
                    let ways = &layer[idx(x, y, c)];
                    if ways.is_zero() {
                        continue;
                    }
                    let h = (x + y) as isize + color.level_step();
                    if h < 0 || h as usize > cap {
                        continue;
                    }
                    let h = h as usize;
                    let p = WalkPoint::new(x, y, color);
                    for x2 in 0..=h {
                        for (c2, &color2) in Color::ALL.iter().enumerate() {
                            if step_ok(&p, &WalkPoint::new(x2, h - x2, color2)) {
                                next[idx(x2, h - x2, c2)] += ways;
                            }
                        }
                    }
                }
            }
        }
        layer = next;
    }
    layer[idx(0, 0, 3)].clone()
}

/// Strong rectangulations of size `n`, as leftmost excursions.
pub fn count_strong_rect(n: usize) -> BigUint {
    count_excursions(n, |p, q| leftmost_step(p, q, Variant::Strong))
}

/// Weak rectangulations of size `n`, as weak leftmost excursions.
pub fn count_weak_leftmost(n: usize) -> BigUint {
    count_excursions(n, |p, q| leftmost_step(p, q, Variant::Weak))
}

pub fn count_leftright(n: usize, variant: Variant) -> BigUint {
    count_excursions(n, |p, q| leftmost_step(p, q, variant) && rightmost_step(p, q, variant))
}

/// One-sided rectangulations of size `n`: weak leftright excursions.
///
/// Intersecting the two weak step rules leaves these steps `(dx, dy)`
/// from a point of color `c` to one of color `c'`:
///
/// | c \ c' | black         | red              | green            | white                  |
/// |--------|---------------|------------------|------------------|------------------------|
/// | black  | (1,0), (0,1)  | (1,0), (0,1)     | (1,0), (0,1)     | (1,0), (0,1)           |
/// | red    | (0,0)         | (0,0)            | (0,0), (1,-1)    | (0,0), (1,-1)          |
/// | green  | (0,0)         | (0,0), (-1,1)    | (0,0)            | (0,0), (-1,1)          |
/// | white  | none          | (-1,0)           | (0,-1)           | (-1,0), (0,-1)         |
pub fn count_o(n: usize) -> BigUint {
    count_leftright(n, Variant::Weak)
}

/// `U_n = A_{n-1,0,0}` from the first-step decomposition of closed
/// leftright walks, with `G_{m,i,j} = R_{m,j,i}`.
pub fn count_u(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::zero();
    }
    let size = n + 3;
    type Grid = Vec<Vec<BigUint>>;
    let zero_grid = || vec![vec![BigUint::zero(); size]; size];
    let at = |g: &Grid, i: isize, j: isize| -> BigUint {
        if i < 0 || j < 0 || i as usize >= size || j as usize >= size {
            BigUint::zero()
        } else {
            g[i as usize][j as usize].clone()
        }
    };
    let (mut a, mut r, mut w) = (zero_grid(), zero_grid(), zero_grid());
    a[0][0] = BigUint::one();
    w[0][0] = BigUint::one();
    for _ in 1..n {
        let g: Grid = (0..size).map(|i| (0..size).map(|j| r[j][i].clone()).collect()).collect();
        let (mut a2, mut r2, mut w2) = (zero_grid(), zero_grid(), zero_grid());
        for i in 0..size {
            for j in 0..size {
                let (i_, j_) = (i as isize, j as isize);
                let black = at(&a, i_ + 1, j_)
                    + at(&a, i_, j_ + 1)
                    + at(&r, i_ - 1, j_ + 2)
                    + at(&w, i_ - 1, j_ + 2)
                    + at(&g, i_ + 2, j_ - 1)
                    + at(&w, i_ + 2, j_ - 1);
                let red = at(&a, i_ + 1, j_ - 1) + at(&a, i_, j_) + at(&r, i_ - 1, j_ + 1) + at(&w, i_ - 1, j_ + 1);
                let white = at(&a, i_ - 1, j_) + at(&a, i_, j_ - 1);
                r2[i][j] = red;
                w2[i][j] = white;
                a2[i][j] = black + &r2[i][j] + &w2[i][j];
            }
        }
        for i in 0..size {
            for j in 0..size {
                a2[i][j] += &r2[j][i];
            }
        }
        (a, r, w) = (a2, r2, w2);
    }
    a[0][0].clone()
}

fn lattice_paths(from: (i64, i64), to: (i64, i64)) -> BigInt {
    let (dx, dy) = (to.0 - from.0, to.1 - from.1);
    if dx < 0 || dy < 0 {
        return BigInt::zero();
    }
    BigInt::from(binomial((dx + dy) as usize, dx as usize))
}

fn nit_endpoints(n: usize, k: usize) -> [(i64, i64); 3] {
    let (n, k) = (n as i64, k as i64);
    [(n - k - 1, k), (n - k, k - 1), (n - k + 1, k - 2)]
}

const NIT_STARTS: [(i64, i64); 3] = [(-1, 1), (0, 0), (1, -1)];

/// Non-intersecting triples of up/right lattice paths, by the
/// Gessel-Viennot determinant summed over the endpoint family.
pub fn nit_count(n: usize) -> BigUint {
    let mut total = BigInt::zero();
    for k in 1..=n {
        let ends = nit_endpoints(n, k);
        let m: Vec<Vec<BigInt>> =
            NIT_STARTS.iter().map(|&s| ends.iter().map(|&e| lattice_paths(s, e)).collect()).collect();
        let det = &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
            - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
            + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0]);
        total += det;
    }
    total.to_biguint().expect("a sum of path counts is non-negative")
}

/// Direct enumeration of vertex-disjoint triples; exponential in `n`.
pub fn nit_count_brute_force(n: usize) -> u64 {
    let steps = n - 1;
    let trace = |start: (i64, i64), mask: u32| -> Vec<(i64, i64)> {
        let mut p = start;
        let mut out = vec![p];
        for s in 0..steps {
            if mask >> s & 1 == 1 {
                p.0 += 1
            } else {
                p.1 += 1
            }
            out.push(p);
        }
        out
    };
    let mut count = 0;
    for k in 1..=n {
        let ends = nit_endpoints(n, k);
        let paths: Vec<Vec<Vec<(i64, i64)>>> = (0..3)
            .map(|t| {
                (0..1u32 << steps).map(|m| trace(NIT_STARTS[t], m)).filter(|p| *p.last().unwrap() == ends[t]).collect()
            })
            .collect();
        for a in &paths[0] {
            for b in paths[1].iter().filter(|b| b.iter().all(|v| !a.contains(v))) {
                count += paths[2].iter().filter(|c| c.iter().all(|v| !a.contains(v) && !b.contains(v))).count() as u64;
            }
        }
    }
    count
}
