use std::collections::BTreeSet;

use super::forward::gamma_w;
use super::poset::{Poset, PosetKind};
use crate::perm::Permutation;
use crate::rect::{Orientation, Rectangulation};
use crate::relation::Relation;

impl Rectangulation {
    /// Pairs `(a, b)` of rectangles sharing a side of positive length with
    /// `r_a` left of or below `r_b`; 0-based.
    fn blocking(&self) -> Relation {
        let mut rel = Relation::new(self.n());
        for s in self.segments() {
            for &p in &s.side_a {
                for &q in &s.side_b {
                    let (rp, rq) = (self.rect(p), self.rect(q));
                    match s.orientation {
                        Orientation::Vertical if rp.y_top < rq.y_bottom && rq.y_top < rp.y_bottom => {
                            rel.insert(p - 1, q - 1)
                        }
                        Orientation::Horizontal if rp.x_left < rq.x_right && rq.x_left < rp.x_right => {
                            rel.insert(q - 1, p - 1)
                        }
                        _ => {}
                    }
                }
            }
        }
        rel
    }

    /// Pairs `(a, b)` where `r_b` ends on a segment before `r_a` starts on
    /// its other side; 0-based.
    fn special(&self) -> Relation {
        let mut rel = Relation::new(self.n());
        for s in self.segments() {
            for &p in &s.side_a {
                for &q in &s.side_b {
                    let (rp, rq) = (self.rect(p), self.rect(q));
                    match s.orientation {
                        Orientation::Vertical if rp.y_bottom < rq.y_top => rel.insert(q - 1, p - 1),
                        Orientation::Horizontal if rq.x_left > rp.x_right => rel.insert(p - 1, q - 1),
                        _ => {}
                    }
                }
            }
        }
        rel
    }

    pub fn adjacency_poset(&self) -> Poset {
        Poset::generated_by(PosetKind::Adjacency, &self.blocking()).expect("blocking refines the NW-SE order")
    }

    pub fn strong_poset(&self) -> Poset {
        let mut rel = self.blocking();
        rel.union_with(&self.special());
        Poset::generated_by(PosetKind::Strong, &rel).expect("strong relation is acyclic")
    }

    /// The diagonal representative of the weak class, compacted.
    pub fn diagonal_representative(&self) -> Rectangulation {
        gamma_w(&self.adjacency_poset().leftmost_extension())
    }

    /// Adjacency poset of the diagonal representative.
    pub fn weak_poset(&self) -> Poset {
        let d = self.diagonal_representative();
        Poset::generated_by(PosetKind::Weak, &d.blocking()).expect("blocking refines the NW-SE order")
    }

    /// The twisted Baxter permutation of the weak class.
    pub fn weak_key(&self) -> Permutation {
        self.weak_poset().leftmost_extension()
    }

    /// The 2-clumped permutation of the strong class.
    pub fn strong_key(&self) -> Permutation {
        self.strong_poset().leftmost_extension()
    }

    /// NW-SE labels read in SW-NE order.
    pub fn baxter_representative(&self) -> Permutation {
        Permutation::new(self.swne_labeling()).expect("labeling is a bijection")
    }

    pub fn fiber_w(&self) -> BTreeSet<Permutation> {
        self.weak_poset().linear_extensions().collect()
    }

    pub fn fiber_s(&self) -> BTreeSet<Permutation> {
        self.strong_poset().linear_extensions().collect()
    }
}
