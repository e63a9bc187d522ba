use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;

use thiserror::Error;

use super::forward::gamma_s;
use crate::perm::{bruhat_leq, Permutation};
use crate::rect::Rectangulation;
use crate::relation::Relation;

pub const MAX_FLIP_N: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FlipError {
    #[error("size {n} exceeds the flip graph bound {max}")]
    BoundExceeded { n: usize, max: usize },
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum FlipKind {
    /// Weak class unchanged: only the order of sides along a segment moves.
    WallSlide,
    /// The two rectangles form a rectangle and swap their dividing side.
    SimpleFlip,
    Pivot,
}

/// Neighbors of `r` in the flip graph, one per strong class, sorted by key.
pub fn flips(r: &Rectangulation) -> Vec<(FlipKind, Rectangulation)> {
    let poset = r.strong_poset();
    let base = poset.leftmost_extension();
    let rank = base.positions();
    let weak = r.weak_key();
    let mut out: BTreeMap<Permutation, (FlipKind, Rectangulation)> = BTreeMap::new();
    for &(i, j) in poset.covers() {
        let below = poset.down_set(j);
        let mut order: Vec<usize> = below.iter().copied().filter(|&a| a != i).collect();
        order.sort_by_key(|&a| rank[a - 1]);
        order.extend([j, i]);
        let mut rest: Vec<usize> = (1..=r.n()).filter(|a| !order.contains(a)).collect();
        rest.sort_by_key(|&a| rank[a - 1]);
        order.extend(rest);
        let next = gamma_s(&Permutation::new(order).expect("labels used once"));
        let kind = if next.weak_key() == weak {
            FlipKind::WallSlide
        } else if union_is_rect(r, i, j) {
            FlipKind::SimpleFlip
        } else {
            FlipKind::Pivot
        };
        out.entry(next.strong_key()).or_insert((kind, next));
    }
    out.into_values().collect()
}

fn union_is_rect(r: &Rectangulation, i: usize, j: usize) -> bool {
    let (a, b) = (r.rect(i), r.rect(j));
    let side_by_side =
        a.y_top == b.y_top && a.y_bottom == b.y_bottom && (a.x_right == b.x_left || b.x_right == a.x_left);
    let stacked = a.x_left == b.x_left && a.x_right == b.x_right && (a.y_bottom == b.y_top || b.y_bottom == a.y_top);
    side_by_side || stacked
}

/// Strong classes of size `n` joined when some permutations of the two
/// classes differ by an adjacent transposition.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FlipGraph {
    n: usize,
    vertices: Vec<Permutation>,
    edges: BTreeSet<(usize, usize)>,
}

pub fn quotient_cover_graph(n: usize) -> Result<FlipGraph, FlipError> {
    if n > MAX_FLIP_N {
        return Err(FlipError::BoundExceeded { n, max: MAX_FLIP_N });
    }
    let perms: Vec<Permutation> = Permutation::all(n).collect();
    let keys: Vec<Permutation> = perms.iter().map(|p| gamma_s(p).strong_key()).collect();
    let vertices: Vec<Permutation> = keys.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
    let index: HashMap<&Permutation, usize> = vertices.iter().enumerate().map(|(i, k)| (k, i)).collect();
    let class_of: HashMap<&Permutation, usize> = perms.iter().zip(&keys).map(|(p, k)| (p, index[k])).collect();
    let mut edges = BTreeSet::new();
    for p in &perms {
        for i in 0..n.saturating_sub(1) {
            let (u, v) = (class_of[p], class_of[&p.swap_adjacent(i)]);
            if u != v {
                edges.insert((u.min(v), u.max(v)));
            }
        }
    }
    Ok(FlipGraph { n, vertices, edges })
}

impl FlipGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    /// 2-clumped keys in lexicographic order.
    pub fn vertices(&self) -> &[Permutation] {
        &self.vertices
    }

    /// Index pairs `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, u: usize) -> BTreeSet<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == u {
                    Some(b)
                } else if b == u {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.vertices.len()];
        let mut stack = vec![0];
        while let Some(u) = stack.pop() {
            if !std::mem::replace(&mut seen[u], true) {
                stack.extend(self.neighbors(u));
            }
        }
        seen.iter().all(|&s| s)
    }

    /// Edges oriented by the weak order on keys, closed transitively;
    /// `None` if some edge joins incomparable keys.
    fn order(&self) -> Option<Relation> {
        let mut up = Relation::new(self.vertices.len());
        for &(a, b) in &self.edges {
            let (ka, kb) = (&self.vertices[a], &self.vertices[b]);
            if bruhat_leq(ka, kb).ok()? {
                up.insert(a, b);
            } else if bruhat_leq(kb, ka).ok()? {
                up.insert(b, a);
            } else {
                return None;
            }
        }
        Some(up)
    }

    /// The edges are the cover relations of a lattice whose order agrees
    /// with the weak order on keys.
    pub fn is_lattice(&self) -> bool {
        let Some(up) = self.order() else { return false };
        let closure = up.transitive_closure();
        if !closure.is_irreflexive() || closure.transitive_reduction() != up {
            return false;
        }
        let m = self.vertices.len();
        let leq = |a: usize, b: usize| a == b || closure.contains(a, b);
        for a in 0..m {
            for b in 0..m {
                if leq(a, b) != bruhat_leq(&self.vertices[a], &self.vertices[b]).unwrap_or(false) {
                    return false;
                }
            }
        }
        let unique_extreme = |bounds: Vec<usize>, least: bool| {
            let extremes: Vec<_> =
                bounds.iter().filter(|&&c| bounds.iter().all(|&d| if least { leq(c, d) } else { leq(d, c) })).collect();
            extremes.len() == 1
        };
        (0..m).all(|a| {
            (a..m).all(|b| {
                let uppers = (0..m).filter(|&c| leq(a, c) && leq(b, c)).collect();
                let lowers = (0..m).filter(|&c| leq(c, a) && leq(c, b)).collect();
                unique_extreme(uppers, true) && unique_extreme(lowers, false)
            })
        })
    }

    pub fn to_dot(&self) -> String {
        let mut s = format!("graph quotient_{} {{\n", self.n);
        for v in &self.vertices {
            let _ = writeln!(s, "  \"{v}\";");
        }
        for &(a, b) in &self.edges {
            let _ = writeln!(s, "  \"{}\" -- \"{}\";", self.vertices[a], self.vertices[b]);
        }
        s.push_str("}\n");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn size_two_is_one_edge() {
        let g = quotient_cover_graph(2).unwrap();
        assert_eq!(g.vertices().len(), 2);
        assert_eq!(g.edge_count(), 1);
        assert!(g.to_dot().contains("\"1 2\" -- \"2 1\""));
    }

    #[test]
    fn bound_enforced() {
        assert_eq!(quotient_cover_graph(MAX_FLIP_N + 1), Err(FlipError::BoundExceeded { n: 9, max: 8 }));
    }

    #[test]
    fn flips_match_quotient_edges() {
        for n in 1..=5 {
            let g = quotient_cover_graph(n).unwrap();
            let index: HashMap<&Permutation, usize> = g.vertices().iter().enumerate().map(|(i, k)| (k, i)).collect();
            for (u, key) in g.vertices().iter().enumerate() {
                let got: BTreeSet<usize> = flips(&gamma_s(key)).iter().map(|(_, r)| index[&r.strong_key()]).collect();
                assert_eq!(got, g.neighbors(u), "n = {n}, key = {key}");
            }
        }
    }

    #[test]
    fn lattice_and_connected() {
        for n in 1..=5 {
            let g = quotient_cover_graph(n).unwrap();
            assert!(g.is_connected());
            assert!(g.is_lattice(), "n = {n}");
        }
    }

    #[test]
    fn flip_kinds_at_size_three() {
        let kinds: BTreeSet<FlipKind> =
            Permutation::all(3).flat_map(|p| flips(&gamma_s(&p)).into_iter().map(|(k, _)| k)).collect();
        assert!(kinds.contains(&FlipKind::SimpleFlip));
        assert!(kinds.contains(&FlipKind::Pivot));
    }
}
