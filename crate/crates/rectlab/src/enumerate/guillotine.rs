use std::collections::{BTreeSet, HashMap, HashSet};

use num_bigint::BigUint;
use num_traits::Zero;
use thiserror::Error;

use super::binomial;
use crate::biject::gamma_w;
use crate::perm::Permutation;
use crate::rect::Rectangulation;

/// Segment endpoints on the left, top, right and bottom sides.
pub type Sides = [u16; 4];

type Layer = HashMap<Sides, BigUint>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumError {
    #[error("size {n} exceeds the exhaustive bound {max}")]
    BoundExceeded { n: usize, max: usize },
}

/// Largest size swept exhaustively over all permutations.
pub const MAX_EXHAUSTIVE_N: usize = 9;

/// Memoized counts of strong guillotine rectangulations by size and side
/// endpoint counts, split by the orientation of the first cut.
///
/// The single rectangle counts as both vertical and horizontal.
#[derive(Clone, Debug)]
pub struct CountTable {
    all: Vec<Layer>,
    vertical: Vec<Layer>,
    horizontal: Vec<Layer>,
}

impl CountTable {
    pub fn new(max_n: usize) -> Self {
        let unit: Layer = HashMap::from([([0; 4], BigUint::from(1u32))]);
        let mut t = CountTable {
            all: vec![Layer::new(), unit.clone()],
            vertical: vec![Layer::new(), unit.clone()],
            horizontal: vec![Layer::new(), unit],
        };
        for n in 2..=max_n {
            t.extend(n);
        }
        t
    }

    pub fn max_n(&self) -> usize {
        self.all.len() - 1
    }

    fn extend(&mut self, n: usize) {
        let mut vertical = Layer::new();
        for left_size in 1..n {
            let right = &self.all[n - left_size];
            let mut by_left: HashMap<u16, Vec<(&Sides, &BigUint)>> = HashMap::new();
            for (k, v) in right {
                by_left.entry(k[0]).or_default().push((k, v));
            }
            // left part summed over its right-side endpoints r', weighted by
            // the shuffles of r' and l' neighbors along the cut
            let mut folded: HashMap<(u16, u16, u16, u16), BigUint> = HashMap::new();
            for (&[l, t, r, b], v) in &self.horizontal[left_size] {
                for &l2 in by_left.keys() {
                    *folded.entry((l, t, b, l2)).or_default() += v * binomial((r + l2) as usize, r as usize);
                }
            }
            for ((l, t1, b1, l2), w) in folded {
                for &(&[_, t2, r, b2], v) in &by_left[&l2] {
                    *vertical.entry([l, t1 + t2 + 1, r, b1 + b2 + 1]).or_default() += &w * v;
                }
            }
        }
        let horizontal: Layer = vertical.iter().map(|(&[l, t, r, b], v)| ([t, l, b, r], v.clone())).collect();
        for (&[l, t, r, b], v) in &vertical {
            assert_eq!(vertical.get(&[r, t, l, b]), Some(v), "left-right mirror");
            assert_eq!(vertical.get(&[l, b, r, t]), Some(v), "top-bottom mirror");
            assert_eq!(vertical.get(&[r, b, l, t]), Some(v), "half turn");
            for key in [[b, l, t, r], [t, r, b, l], [b, r, t, l]] {
                assert_eq!(horizontal.get(&key), Some(v), "transpose");
            }
        }
        let mut all = vertical.clone();
        for (k, v) in &horizontal {
            *all.entry(*k).or_default() += v;
        }
        self.vertical.push(vertical);
        self.horizontal.push(horizontal);
        self.all.push(all);
    }

    fn lookup(layer: &[Layer], n: usize, sides: Sides) -> BigUint {
        layer.get(n).and_then(|m| m.get(&sides)).cloned().unwrap_or_default()
    }

    pub fn s(&self, n: usize, sides: Sides) -> BigUint {
        Self::lookup(&self.all, n, sides)
    }

    pub fn s_v(&self, n: usize, sides: Sides) -> BigUint {
        Self::lookup(&self.vertical, n, sides)
    }

    pub fn s_h(&self, n: usize, sides: Sides) -> BigUint {
        Self::lookup(&self.horizontal, n, sides)
    }

    /// Non-zero `(sides, count)` entries of `S(n, ...)`, sorted.
    pub fn entries(&self, n: usize) -> Vec<(Sides, BigUint)> {
        let mut v: Vec<_> = self.all[n].iter().map(|(k, c)| (*k, c.clone())).collect();
        v.sort();
        v
    }

    pub fn total(&self, n: usize) -> BigUint {
        self.all[n].values().sum()
    }
}

pub fn strong_guillotine_table(n: usize) -> CountTable {
    CountTable::new(n)
}

pub fn strong_guillotine_count(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::zero();
    }
    CountTable::new(n).total(n)
}

/// Weak classes of size `n`, as compacted diagonal representatives.
pub fn weak_classes(n: usize) -> Result<Vec<Rectangulation>, EnumError> {
    if n > MAX_EXHAUSTIVE_N {
        return Err(EnumError::BoundExceeded { n, max: MAX_EXHAUSTIVE_N });
    }
    let set: HashSet<Rectangulation> = Permutation::all(n).map(|p| gamma_w(&p)).collect();
    let mut out: Vec<_> = set.into_iter().collect();
    out.sort_by_cached_key(|r| r.raw_rects().iter().map(|q| (q.x1, q.y1, q.x2, q.y2)).collect::<BTreeSet<_>>());
    Ok(out)
}

/// Sum of multiplicities over weak classes, optionally only guillotine ones.
pub fn strong_count_via_multiplicity(n: usize, guillotine_only: bool) -> Result<BigUint, EnumError> {
    Ok(weak_classes(n)?
        .iter()
        .filter(|r| !guillotine_only || r.is_guillotine())
        .map(Rectangulation::multiplicity)
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_table() {
        let t = CountTable::new(3);
        assert_eq!(t.s_v(2, [0, 1, 0, 1]), BigUint::from(1u32));
        assert_eq!(t.s_h(2, [1, 0, 1, 0]), BigUint::from(1u32));
        assert_eq!(t.total(2), BigUint::from(2u32));
        assert_eq!(t.total(3), BigUint::from(6u32));
        assert_eq!(t.entries(1), vec![([0; 4], BigUint::from(1u32))]);
    }

    #[test]
    fn printed_values() {
        let t = CountTable::new(9);
        let got: Vec<u64> = (1..=9).map(|n| u64::try_from(t.total(n)).unwrap()).collect();
        assert_eq!(got, vec![1, 2, 6, 24, 114, 606, 3494, 21434, 138100]);
    }

    #[test]
    fn multiplicity_oracle() {
        assert_eq!(strong_count_via_multiplicity(4, false).unwrap(), BigUint::from(24u32));
        assert_eq!(strong_count_via_multiplicity(5, true).unwrap(), BigUint::from(114u32));
        assert!(strong_count_via_multiplicity(10, true).is_err());
    }
}
