use super::{Orientation, Rectangulation};

/// Recursive decomposition by cuts spanning the current sub-box.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GuillotineTree {
    Leaf(usize),
    Cut {
        orientation: Orientation,
        position: usize,
        /// Left part for a vertical cut, top part for a horizontal one.
        first: Box<GuillotineTree>,
        second: Box<GuillotineTree>,
    },
}

impl GuillotineTree {
    pub fn leaves(&self) -> Vec<usize> {
        match self {
            GuillotineTree::Leaf(l) => vec![*l],
            GuillotineTree::Cut { first, second, .. } => {
                let mut v = first.leaves();
                v.extend(second.leaves());
                v
            }
        }
    }
}

/// Rotation sense in which each segment of a windmill ends on the next.
///
/// `Clockwise`: the left segment's top end lies on the top segment, whose
/// right end lies on the right segment, whose bottom end lies on the bottom
/// segment, whose left end lies on the left segment. `CounterClockwise` is
/// its mirror image.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Chirality {
    Clockwise,
    CounterClockwise,
}

/// Four segment indices (left, top, right, bottom) forming a pinwheel.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Windmill {
    pub left: usize,
    pub top: usize,
    pub right: usize,
    pub bottom: usize,
    pub chirality: Chirality,
}

impl Rectangulation {
    fn split(&self, labels: &[usize]) -> Option<GuillotineTree> {
        if labels.len() == 1 {
            return Some(GuillotineTree::Leaf(labels[0]));
        }
        let rs: Vec<_> = labels.iter().map(|&l| *self.rect(l)).collect();
        let x0 = rs.iter().map(|r| r.x_left).min()?;
        let x1 = rs.iter().map(|r| r.x_right).max()?;
        let y0 = rs.iter().map(|r| r.y_top).min()?;
        let y1 = rs.iter().map(|r| r.y_bottom).max()?;
        let vertical = (x0 + 1..x1)
            .find(|&c| rs.iter().all(|r| r.x_right <= c || r.x_left >= c))
            .map(|c| (Orientation::Vertical, c));
        let horizontal = || {
            (y0 + 1..y1)
                .find(|&c| rs.iter().all(|r| r.y_bottom <= c || r.y_top >= c))
                .map(|c| (Orientation::Horizontal, c))
        };
        let (orientation, position) = vertical.or_else(horizontal)?;
        let (first, second): (Vec<usize>, Vec<usize>) = labels.iter().partition(|&&l| {
            let r = self.rect(l);
            match orientation {
                Orientation::Vertical => r.x_right <= position,
                Orientation::Horizontal => r.y_bottom <= position,
            }
        });
        Some(GuillotineTree::Cut {
            orientation,
            position,
            first: Box::new(self.split(&first)?),
            second: Box::new(self.split(&second)?),
        })
    }

    /// Cut decomposition, preferring the leftmost vertical cut, then the
    /// topmost horizontal one; `None` if some sub-box admits no cut.
    pub fn guillotine_tree(&self) -> Option<GuillotineTree> {
        let labels: Vec<usize> = (1..=self.n()).collect();
        self.split(&labels)
    }

    pub fn is_guillotine(&self) -> bool {
        self.guillotine_tree().is_some()
    }

    pub fn find_windmills(&self) -> Vec<Windmill> {
        use Orientation::{Horizontal as H, Vertical as V};
        let segs = self.segments();
        let mut out = Vec::new();
        for (l, left) in segs.iter().enumerate().filter(|(_, s)| s.orientation == V) {
            let cw = (|| {
                let t = self.segment_through(H, left.start, left.coord)?;
                let r = self.segment_through(V, segs[t].end, segs[t].coord)?;
                let b = self.segment_through(H, segs[r].end, segs[r].coord)?;
                let back = self.segment_through(V, segs[b].start, segs[b].coord)?;
                (back == l).then_some((t, r, b))
            })();
            if let Some((top, right, bottom)) = cw {
                out.push(Windmill { left: l, top, right, bottom, chirality: Chirality::Clockwise });
            }
            let ccw = (|| {
                let b = self.segment_through(H, left.end, left.coord)?;
                let r = self.segment_through(V, segs[b].end, segs[b].coord)?;
                let t = self.segment_through(H, segs[r].start, segs[r].coord)?;
                let back = self.segment_through(V, segs[t].start, segs[t].coord)?;
                (back == l).then_some((t, r, b))
            })();
            if let Some((top, right, bottom)) = ccw {
                out.push(Windmill { left: l, top, right, bottom, chirality: Chirality::CounterClockwise });
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::super::RawRect;
    use super::*;

    fn pinwheel(mirror: bool) -> Rectangulation {
        let base = [(0, 0, 2, 1), (2, 0, 3, 2), (1, 2, 3, 3), (0, 1, 1, 3), (1, 1, 2, 2)];
        let raw: Vec<_> = base
            .iter()
            .map(
                |&(x1, y1, x2, y2)| {
                    if mirror {
                        RawRect::new(3 - x2, y1, 3 - x1, y2)
                    } else {
                        RawRect::new(x1, y1, x2, y2)
                    }
                },
            )
            .collect();
        Rectangulation::from_rects(&raw).unwrap()
    }

    #[test]
    fn pinwheel_has_one_windmill() {
        let r = pinwheel(false);
        assert!(!r.is_guillotine());
        let w = r.find_windmills();
        assert_eq!(w.len(), 1);
        assert_eq!(w[0].chirality, Chirality::Clockwise);
        let m = pinwheel(true).find_windmills();
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].chirality, Chirality::CounterClockwise);
    }

    #[test]
    fn strips_are_guillotine() {
        let v = Rectangulation::vertical_strips(4);
        assert!(v.find_windmills().is_empty());
        let tree = v.guillotine_tree().unwrap();
        assert_eq!(tree.leaves(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn thirteen_piece_pinwheel() {
        let r = Rectangulation::from_rects(&super::super::tests::pinwheel13()).unwrap();
        assert!(!r.is_guillotine());
        assert_eq!(r.find_windmills().len(), 1);
    }
}
