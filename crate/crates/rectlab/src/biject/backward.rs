use std::collections::BTreeSet;

use crate::perm::Permutation;
use crate::rect::Rectangulation;

struct Partial<'a> {
    r: &'a Rectangulation,
    remaining: &'a [bool],
}

impl Partial<'_> {
    fn inside(&self, cx: isize, cy: isize) -> bool {
        self.r.owner_at(cx, cy).is_some_and(|l| self.remaining[l - 1])
    }

    /// Nothing remaining touches the top or right side of `r_label`.
    fn on_staircase(&self, label: usize) -> bool {
        let q = self.r.rect(label);
        let above = (q.x_left..q.x_right).any(|x| self.inside(x as isize, q.y_top as isize - 1));
        let right = (q.y_top..q.y_bottom).any(|y| self.inside(q.x_right as isize, y as isize));
        !above && !right
    }

    fn is_peak(&self, x: usize, y: usize) -> bool {
        let (x, y) = (x as isize, y as isize);
        self.inside(x - 1, y) && !self.inside(x - 1, y - 1) && !self.inside(x, y - 1) && !self.inside(x, y)
    }
}

fn available(r: &Rectangulation, remaining: &[bool], strong: bool) -> Vec<usize> {
    let p = Partial { r, remaining };
    (1..=r.n())
        .filter(|&l| remaining[l - 1] && p.on_staircase(l))
        .filter(|&l| {
            if !strong {
                return true;
            }
            let q = r.rect(l);
            let top_left_ok = !r.arms(q.x_left, q.y_top).up || q.x_left == 0 || {
                let left = r.rect(r.owner_at(q.x_left as isize - 1, q.y_top as isize).expect("inside"));
                p.is_peak(left.x_right, left.y_top)
            };
            let bottom_right_ok = !r.arms(q.x_right, q.y_bottom).right || q.y_bottom == r.height() || {
                let below = r.rect(r.owner_at(q.x_right as isize, q.y_bottom as isize).expect("inside"));
                p.is_peak(below.x_right, below.y_top)
            };
            top_left_ok && bottom_right_ok
        })
        .collect()
}

/// Rectangles of a diagonal representative that may be removed next.
pub fn weak_available(diagonal: &Rectangulation, remaining: &[bool]) -> Vec<usize> {
    available(diagonal, remaining, false)
}

/// Rectangles that may be removed next while keeping a valid staircase.
pub fn strong_available(r: &Rectangulation, remaining: &[bool]) -> Vec<usize> {
    available(r, remaining, true)
}

fn all_removals(r: &Rectangulation, strong: bool) -> BTreeSet<Permutation> {
    fn go(
        r: &Rectangulation,
        strong: bool,
        remaining: &mut [bool],
        tail: &mut Vec<usize>,
        out: &mut BTreeSet<Permutation>,
    ) {
        if tail.len() == r.n() {
            let entries = tail.iter().rev().copied().collect();
            out.insert(Permutation::new(entries).expect("each label removed once"));
            return;
        }
        for l in available(r, remaining, strong) {
            remaining[l - 1] = false;
            tail.push(l);
            go(r, strong, remaining, tail, out);
            tail.pop();
            remaining[l - 1] = true;
        }
    }
    let mut out = BTreeSet::new();
    go(r, strong, &mut vec![true; r.n()], &mut Vec::new(), &mut out);
    out
}

/// Every permutation produced by removing available rectangles of the
/// diagonal representative from the top-right.
pub fn backward_weak(r: &Rectangulation) -> BTreeSet<Permutation> {
    all_removals(&r.diagonal_representative(), false)
}

/// Every permutation produced by strong removals from the top-right.
pub fn backward_strong(r: &Rectangulation) -> BTreeSet<Permutation> {
    all_removals(r, true)
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::super::forward::{gamma_s, gamma_w};
    use super::*;

    #[test]
    fn strips_have_single_preimage() {
        let v = Rectangulation::vertical_strips(4);
        assert_eq!(backward_strong(&v).into_iter().collect::<Vec<_>>(), vec![Permutation::identity(4)]);
        assert_eq!(backward_weak(&v).into_iter().collect::<Vec<_>>(), vec![Permutation::identity(4)]);
    }

    #[test]
    fn backward_inverts_forward() {
        for n in 1..=6 {
            let mut seen = HashSet::new();
            for p in Permutation::all(n) {
                let r = gamma_s(&p);
                if !seen.insert(r.strong_key()) {
                    continue;
                }
                let fiber = backward_strong(&r);
                assert!(fiber.contains(&p));
                assert_eq!(fiber, r.fiber_s());
                let weak = backward_weak(&gamma_w(&p));
                assert!(weak.contains(&p));
                assert_eq!(weak, r.fiber_w());
            }
        }
    }

    #[test]
    fn availability_is_maximality() {
        for p in Permutation::all(6) {
            let r = gamma_s(&p);
            let poset = r.strong_poset();
            let mut remaining = vec![true; 6];
            for &j in p.entries().iter().rev() {
                let maximal: Vec<usize> = (1..=6)
                    .filter(|&a| remaining[a - 1] && (1..=6).all(|b| !remaining[b - 1] || !poset.less(a, b)))
                    .collect();
                assert_eq!(strong_available(&r, &remaining), maximal);
                remaining[j - 1] = false;
            }
        }
    }
}
