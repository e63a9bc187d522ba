use std::collections::BTreeSet;

use super::{PermError, Permutation};

/// Inversions as value pairs `(a, b)` with `a < b` and `b` placed before `a`.
pub fn inversion_set(pi: &Permutation) -> BTreeSet<(usize, usize)> {
    let e = pi.entries();
    let mut out = BTreeSet::new();
    for i in 0..e.len() {
        for j in i + 1..e.len() {
            if e[i] > e[j] {
                out.insert((e[j], e[i]));
            }
        }
    }
    out
}

/// `Inv(pi) ⊆ Inv(sigma)`.
pub fn bruhat_leq(pi: &Permutation, sigma: &Permutation) -> Result<bool, PermError> {
    if pi.len() != sigma.len() {
        return Err(PermError::SizeMismatch { left: pi.len(), right: sigma.len() });
    }
    let pos = sigma.positions();
    let e = pi.entries();
    for i in 0..e.len() {
        for j in i + 1..e.len() {
            if e[i] > e[j] && pos[e[i] - 1] > pos[e[j] - 1] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Upper covers: swap each adjacent ascent.
pub fn bruhat_covers(pi: &Permutation) -> Vec<Permutation> {
    let e = pi.entries();
    (0..e.len().saturating_sub(1)).filter(|&i| e[i] < e[i + 1]).map(|i| pi.swap_adjacent(i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extremes() {
        assert!(inversion_set(&Permutation::identity(5)).is_empty());
        assert_eq!(inversion_set(&Permutation::reverse(5)).len(), 10);
    }

    #[test]
    fn identity_is_bottom() {
        let id = Permutation::identity(4);
        assert!(Permutation::all(4).all(|s| bruhat_leq(&id, &s).unwrap()));
    }

    #[test]
    fn cover_edges_in_s4() {
        let edges: usize = Permutation::all(4).map(|p| bruhat_covers(&p).len()).sum();
        assert_eq!(edges, 36);
    }

    #[test]
    fn covers_add_exactly_one_inversion() {
        for p in Permutation::all(5) {
            let inv = inversion_set(&p);
            for c in bruhat_covers(&p) {
                let inv_c = inversion_set(&c);
                assert!(inv.is_subset(&inv_c));
                assert_eq!(inv_c.len(), inv.len() + 1);
            }
        }
    }

    #[test]
    fn partial_order_on_s5() {
        let all: Vec<_> = Permutation::all(5).collect();
        let sets: Vec<_> = all.iter().map(inversion_set).collect();
        for (a, sa) in all.iter().zip(&sets) {
            assert!(bruhat_leq(a, a).unwrap());
            for (b, sb) in all.iter().zip(&sets) {
                let ab = bruhat_leq(a, b).unwrap();
                assert_eq!(ab, sa.is_subset(sb));
                if ab && a != b {
                    assert!(!bruhat_leq(b, a).unwrap());
                }
            }
        }
        // transitivity via the subset characterization
        for a in &sets {
            for b in &sets {
                if !a.is_subset(b) {
                    continue;
                }
                for c in &sets {
                    if b.is_subset(c) {
                        assert!(a.is_subset(c));
                    }
                }
            }
        }
    }

    #[test]
    fn size_mismatch_is_an_error() {
        assert!(bruhat_leq(&Permutation::identity(2), &Permutation::identity(3)).is_err());
    }
}
