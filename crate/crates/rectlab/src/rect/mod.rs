//! Rectangulations with compact integer geometry (y grows downward).

mod guillotine;
mod json;
mod render;

pub use guillotine::{Chirality, GuillotineTree, Windmill};
pub use render::Format;

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

use crate::relation::Relation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RectError {
    #[error("no rectangles")]
    Empty,
    #[error("rectangle {0} has non-positive width or height")]
    Degenerate(usize),
    #[error("rectangles {0} and {1} overlap")]
    Overlap(usize, usize),
    #[error("rectangles leave a hole inside their bounding box")]
    Gap,
    #[error("union of rectangles is not a rectangle")]
    NonRectangularUnion,
    #[error("non-generic: four rectangles meet at ({0}, {1})")]
    NonGeneric(i64, i64),
    #[error("labels do not follow the NW-SE order: rectangle {index} is labeled {given}, expected {expected}")]
    LabelMismatch { index: usize, given: usize, expected: usize },
    #[error("size field {given} does not match {actual} rectangles")]
    SizeMismatch { given: usize, actual: usize },
    #[error("malformed JSON at line {line}: {message}")]
    Json { line: usize, message: String },
    #[error("unsupported format {0:?}")]
    UnsupportedFormat(String),
}

/// Input rectangle with arbitrary integer coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct RawRect {
    pub x1: i64,
    pub y1: i64,
    pub x2: i64,
    pub y2: i64,
}

impl RawRect {
    pub fn new(x1: i64, y1: i64, x2: i64, y2: i64) -> Self {
        RawRect { x1, y1, x2, y2 }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Rect {
    pub label: usize,
    pub x_left: usize,
    pub x_right: usize,
    pub y_top: usize,
    pub y_bottom: usize,
}

impl Rect {
    pub fn to_raw(&self) -> RawRect {
        RawRect::new(self.x_left as i64, self.y_top as i64, self.x_right as i64, self.y_bottom as i64)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Orientation {
    Horizontal,
    Vertical,
}

/// A maximal internal line made of rectangle sides.
///
/// For a horizontal segment `side_a` lists the rectangles above it and
/// `side_b` those below, left to right; for a vertical one `side_a` is the
/// left side and `side_b` the right side, top to bottom.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Segment {
    pub orientation: Orientation,
    pub coord: usize,
    pub start: usize,
    pub end: usize,
    pub side_a: Vec<usize>,
    pub side_b: Vec<usize>,
}

impl Segment {
    /// Perpendicular segments ending on side A.
    pub fn neighbors_a(&self) -> usize {
        self.side_a.len() - 1
    }

    pub fn neighbors_b(&self) -> usize {
        self.side_b.len() - 1
    }

    pub fn is_two_sided(&self) -> bool {
        self.neighbors_a() > 0 && self.neighbors_b() > 0
    }

    fn contains_interior(&self, along: usize) -> bool {
        self.start < along && along < self.end
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Direction {
    Up,
    Down,
    Left,
    Right,
}

/// Shape of a point where lines meet. `Tee(d)` names the direction of the
/// stem: `Tee(Down)` is ⊤, `Tee(Up)` is ⊥, `Tee(Right)` is ⊢, `Tee(Left)` is ⊣.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Joint {
    Tee(Direction),
    BoxCorner,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Corner {
    TopLeft,
    TopRight,
    BottomLeft,
    BottomRight,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Arms {
    pub up: bool,
    pub down: bool,
    pub left: bool,
    pub right: bool,
}

const NONE: usize = usize::MAX;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Rectangulation {
    rects: Vec<Rect>,
    width: usize,
    height: usize,
    owner: Vec<usize>,
    segments: Vec<Segment>,
}

impl Rectangulation {
    /// Validates a tiling, compacts its coordinates and relabels the
    /// rectangles in NW-SE order.
    pub fn from_rects(raw: &[RawRect]) -> Result<Self, RectError> {
        Rectangulation::from_rects_with_labels(raw).map(|(r, _)| r)
    }

    /// Like [`Self::from_rects`], also returning the label given to each
    /// input rectangle.
    #[allow(clippy::needless_range_loop)]
    pub fn from_rects_with_labels(raw: &[RawRect]) -> Result<(Self, Vec<usize>), RectError> {
        if raw.is_empty() {
            return Err(RectError::Empty);
        }
        if let Some(i) = raw.iter().position(|r| r.x1 >= r.x2 || r.y1 >= r.y2) {
            return Err(RectError::Degenerate(i + 1));
        }
        let xs: Vec<i64> = raw.iter().flat_map(|r| [r.x1, r.x2]).collect::<BTreeSet<_>>().into_iter().collect();
        let ys: Vec<i64> = raw.iter().flat_map(|r| [r.y1, r.y2]).collect::<BTreeSet<_>>().into_iter().collect();
        let rank = |v: &[i64], c: i64| v.binary_search(&c).expect("coordinate collected");
        let width = xs.len() - 1;
        let height = ys.len() - 1;
        let compact: Vec<[usize; 4]> =
            raw.iter().map(|r| [rank(&xs, r.x1), rank(&ys, r.y1), rank(&xs, r.x2), rank(&ys, r.y2)]).collect();

        let mut owner = vec![NONE; width * height];
        for (i, c) in compact.iter().enumerate() {
            for cy in c[1]..c[3] {
                for cx in c[0]..c[2] {
                    let cell = &mut owner[cy * width + cx];
                    if *cell != NONE {
                        return Err(RectError::Overlap(*cell + 1, i + 1));
                    }
                    *cell = i;
                }
            }
        }
        let mut hole = false;
        for cy in 0..height {
            for cx in 0..width {
                if owner[cy * width + cx] == NONE {
                    if cx == 0 || cy == 0 || cx + 1 == width || cy + 1 == height {
                        return Err(RectError::NonRectangularUnion);
                    }
                    hole = true;
                }
            }
        }
        if hole {
            return Err(RectError::Gap);
        }

        let mut pre = Rectangulation {
            rects: compact
                .iter()
                .enumerate()
                .map(|(i, c)| Rect { label: i + 1, x_left: c[0], y_top: c[1], x_right: c[2], y_bottom: c[3] })
                .collect(),
            width,
            height,
            owner,
            segments: Vec::new(),
        };
        for y in 1..height {
            for x in 1..width {
                let a = pre.arms(x, y);
                if a.up && a.down && a.left && a.right {
                    return Err(RectError::NonGeneric(xs[x], ys[y]));
                }
            }
        }
        pre.segments = pre.derive_segments();
        let labels = pre.nwse_order_by_closure();
        Ok((pre.relabeled(&labels), labels))
    }

    /// `n` side-by-side columns.
    pub fn vertical_strips(n: usize) -> Self {
        let raw: Vec<_> = (0..n as i64).map(|i| RawRect::new(i, 0, i + 1, 1)).collect();
        Rectangulation::from_rects(&raw).expect("strips tile a box")
    }

    /// `n` stacked rows.
    pub fn horizontal_strips(n: usize) -> Self {
        let raw: Vec<_> = (0..n as i64).map(|i| RawRect::new(0, i, 1, i + 1)).collect();
        Rectangulation::from_rects(&raw).expect("strips tile a box")
    }

    pub fn n(&self) -> usize {
        self.rects.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn rects(&self) -> &[Rect] {
        &self.rects
    }

    /// The rectangle with the given 1-based label.
    pub fn rect(&self, label: usize) -> &Rect {
        &self.rects[label - 1]
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn raw_rects(&self) -> Vec<RawRect> {
        self.rects.iter().map(Rect::to_raw).collect()
    }

    /// Label of the rectangle covering cell `(cx, cy)`, if inside the box.
    pub fn owner_at(&self, cx: isize, cy: isize) -> Option<usize> {
        if cx < 0 || cy < 0 || cx >= self.width as isize || cy >= self.height as isize {
            return None;
        }
        let o = self.owner[cy as usize * self.width + cx as usize];
        (o != NONE).then_some(o + 1)
    }

    /// Lines leaving grid point `(x, y)`, including the box boundary.
    pub fn arms(&self, x: usize, y: usize) -> Arms {
        let (x, y) = (x as isize, y as isize);
        let nw = self.owner_at(x - 1, y - 1);
        let ne = self.owner_at(x, y - 1);
        let sw = self.owner_at(x - 1, y);
        let se = self.owner_at(x, y);
        Arms { up: nw != ne, down: sw != se, left: nw != sw, right: ne != se }
    }

    pub fn joint_at(&self, x: usize, y: usize) -> Joint {
        let a = self.arms(x, y);
        match (a.up, a.down, a.left, a.right) {
            (false, true, true, true) => Joint::Tee(Direction::Down),
            (true, false, true, true) => Joint::Tee(Direction::Up),
            (true, true, false, true) => Joint::Tee(Direction::Right),
            (true, true, true, false) => Joint::Tee(Direction::Left),
            _ => Joint::BoxCorner,
        }
    }

    pub fn corner_point(&self, label: usize, corner: Corner) -> (usize, usize) {
        let r = self.rect(label);
        match corner {
            Corner::TopLeft => (r.x_left, r.y_top),
            Corner::TopRight => (r.x_right, r.y_top),
            Corner::BottomLeft => (r.x_left, r.y_bottom),
            Corner::BottomRight => (r.x_right, r.y_bottom),
        }
    }

    pub fn corner_joint(&self, label: usize, corner: Corner) -> Joint {
        let (x, y) = self.corner_point(label, corner);
        self.joint_at(x, y)
    }

    fn derive_segments(&self) -> Vec<Segment> {
        let own = |cx: usize, cy: usize| self.owner[cy * self.width + cx];
        let mut segments = Vec::new();
        let mut push_run = |orientation, coord, start, end, a: Vec<usize>, b: Vec<usize>| {
            let dedup = |mut v: Vec<usize>| {
                v.dedup();
                v.into_iter().map(|o| o + 1).collect::<Vec<_>>()
            };
            segments.push(Segment { orientation, coord, start, end, side_a: dedup(a), side_b: dedup(b) });
        };
        for y in 1..self.height {
            let mut cx = 0;
            while cx < self.width {
                if own(cx, y - 1) == own(cx, y) {
                    cx += 1;
                    continue;
                }
                let start = cx;
                let (mut a, mut b) = (Vec::new(), Vec::new());
                while cx < self.width && own(cx, y - 1) != own(cx, y) {
                    a.push(own(cx, y - 1));
                    b.push(own(cx, y));
                    cx += 1;
                }
                push_run(Orientation::Horizontal, y, start, cx, a, b);
            }
        }
        for x in 1..self.width {
            let mut cy = 0;
            while cy < self.height {
                if own(x - 1, cy) == own(x, cy) {
                    cy += 1;
                    continue;
                }
                let start = cy;
                let (mut a, mut b) = (Vec::new(), Vec::new());
                while cy < self.height && own(x - 1, cy) != own(x, cy) {
                    a.push(own(x - 1, cy));
                    b.push(own(x, cy));
                    cy += 1;
                }
                push_run(Orientation::Vertical, x, start, cy, a, b);
            }
        }
        segments
    }

    fn side_relation(&self, orientation: Orientation) -> Relation {
        let mut r = Relation::new(self.n());
        for s in self.segments.iter().filter(|s| s.orientation == orientation) {
            for &a in &s.side_a {
                for &b in &s.side_b {
                    r.insert(a - 1, b - 1);
                }
            }
        }
        r.transitive_closure()
    }

    /// `(i-1, j-1)` present iff `r_i` is left of `r_j`.
    pub fn left_of(&self) -> Relation {
        self.side_relation(Orientation::Vertical)
    }

    /// `(i-1, j-1)` present iff `r_i` is above `r_j`.
    pub fn above(&self) -> Relation {
        self.side_relation(Orientation::Horizontal)
    }

    fn nwse_order_by_closure(&self) -> Vec<usize> {
        let n = self.n();
        let mut before = self.left_of();
        before.union_with(&self.above());
        let mut rank: Vec<usize> = (0..n).collect();
        rank.sort_by_key(|&i| (0..n).filter(|&j| before.contains(j, i)).count());
        let mut label = vec![0; n];
        for (pos, &i) in rank.iter().enumerate() {
            label[i] = pos + 1;
        }
        label
    }

    fn relabeled(&self, label: &[usize]) -> Self {
        let mut rects = vec![self.rects[0]; self.n()];
        for (i, r) in self.rects.iter().enumerate() {
            rects[label[i] - 1] = Rect { label: label[i], ..*r };
        }
        let map = |v: &Vec<usize>| v.iter().map(|&l| label[l - 1]).collect::<Vec<_>>();
        Rectangulation {
            rects,
            width: self.width,
            height: self.height,
            owner: self.owner.iter().map(|&o| label[o] - 1).collect(),
            segments: self
                .segments
                .iter()
                .map(|s| Segment { side_a: map(&s.side_a), side_b: map(&s.side_b), ..s.clone() })
                .collect(),
        }
    }

    pub(crate) fn segment_through(&self, orientation: Orientation, coord: usize, along: usize) -> Option<usize> {
        self.segments
            .iter()
            .position(|s| s.orientation == orientation && s.coord == coord && s.contains_interior(along))
    }

    fn segment_containing_side(&self, orientation: Orientation, coord: usize, lo: usize) -> &Segment {
        self.segments
            .iter()
            .find(|s| s.orientation == orientation && s.coord == coord && s.start <= lo && lo < s.end)
            .expect("internal side lies on a segment")
    }

    /// Labels visited by the corner-walking NW-SE procedure: start at the
    /// top-left rectangle, then follow the joint at each bottom-right corner.
    pub fn nwse_labeling(&self) -> Vec<usize> {
        let mut order = vec![self.owner_at(0, 0).expect("non-empty")];
        while order.len() < self.n() {
            let cur = *self.rect(*order.last().unwrap());
            let next = match self.joint_at(cur.x_right, cur.y_bottom) {
                Joint::Tee(Direction::Left) => {
                    let s = self.segment_containing_side(Orientation::Horizontal, cur.y_bottom, cur.x_left);
                    s.side_b[0]
                }
                Joint::Tee(Direction::Up) => {
                    let s = self.segment_containing_side(Orientation::Vertical, cur.x_right, cur.y_top);
                    s.side_b[0]
                }
                _ => unreachable!("bottom-right corner of a non-final rectangle is a ⊣ or ⊥"),
            };
            order.push(next);
        }
        order
    }

    /// Labels sorted so that `r_i` precedes `r_j` iff it is left of or below it.
    pub fn swne_labeling(&self) -> Vec<usize> {
        let n = self.n();
        let left = self.left_of();
        let above = self.above();
        let mut labels: Vec<usize> = (1..=n).collect();
        labels.sort_by_key(|&l| (0..n).filter(|&j| left.contains(j, l - 1) || above.contains(l - 1, j)).count());
        labels
    }

    /// Product over segments of `C(a + b, a)` for the neighbor counts on
    /// each side.
    pub fn multiplicity(&self) -> BigUint {
        self.segments.iter().fold(BigUint::one(), |acc, s| {
            acc * crate::enumerate::binomial(s.neighbors_a() + s.neighbors_b(), s.neighbors_a())
        })
    }

    pub fn two_sided_segments(&self) -> usize {
        self.segments.iter().filter(|s| s.is_two_sided()).count()
    }

    /// Every segment has neighbors on at most one side.
    pub fn is_one_sided(&self) -> bool {
        self.two_sided_segments() == 0
    }

    /// A vertical segment carrying a left rectangle whose bottom lies above
    /// the top of a right rectangle.
    pub fn has_z_wall(&self) -> bool {
        self.segments
            .iter()
            .filter(|s| s.orientation == Orientation::Vertical)
            .any(|s| s.side_a.iter().any(|&l| s.side_b.iter().any(|&r| self.rect(l).y_bottom < self.rect(r).y_top)))
    }

    /// Reflection of [`Self::has_z_wall`] across the SW-NE diagonal.
    pub fn has_mirrored_z_wall(&self) -> bool {
        self.segments
            .iter()
            .filter(|s| s.orientation == Orientation::Horizontal)
            .any(|s| s.side_a.iter().any(|&a| s.side_b.iter().any(|&b| self.rect(b).x_left > self.rect(a).x_right)))
    }

    /// Mirror image across the SW-NE diagonal.
    pub fn reflect_swne(&self) -> Self {
        let (w, h) = (self.width as i64, self.height as i64);
        let raw: Vec<_> = self
            .rects
            .iter()
            .map(|r| RawRect::new(h - r.y_bottom as i64, w - r.x_right as i64, h - r.y_top as i64, w - r.x_left as i64))
            .collect();
        Rectangulation::from_rects(&raw).expect("reflection of a valid tiling")
    }
}
