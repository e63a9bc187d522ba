//! History quadrant walks: one colored point per insertion, recording the
//! valley used and which sides were aligned.

mod count;

pub use count::{
    count_excursions, count_leftright, count_o, count_strong_rect, count_u, count_weak_leftmost, nit_count,
    nit_count_brute_force,
};

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::biject::{build, insertion_steps, Attachment, InsertionStep};
use crate::perm::Permutation;
use crate::rect::Rectangulation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WalkError {
    #[error("walk has no points")]
    Empty,
    #[error("walk does not start at the origin")]
    NotAtOrigin,
    #[error("point {index} breaks the level rule")]
    LevelViolation { index: usize },
    #[error("walk does not end with a white point at the origin")]
    NotClosed,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Which sides of the inserted rectangle align with the flanking peaks.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Color {
    /// Neither side aligned.
    Black,
    /// Right side aligned with the right peak.
    Red,
    /// Top side aligned with the left peak.
    Green,
    /// Both sides aligned.
    White,
}

impl Color {
    pub const ALL: [Color; 4] = [Color::Black, Color::Red, Color::Green, Color::White];

    pub fn from_alignment(top_aligned: bool, right_aligned: bool) -> Self {
        match (top_aligned, right_aligned) {
            (false, false) => Color::Black,
            (false, true) => Color::Red,
            (true, false) => Color::Green,
            (true, true) => Color::White,
        }
    }

    pub fn top_aligned(self) -> bool {
        matches!(self, Color::Green | Color::White)
    }

    pub fn right_aligned(self) -> bool {
        matches!(self, Color::Red | Color::White)
    }

    /// Level change to the next point.
    pub fn level_step(self) -> isize {
        match self {
            Color::Black => 1,
            Color::Red | Color::Green => 0,
            Color::White => -1,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Color::Black => "black",
            Color::Red => "red",
            Color::Green => "green",
            Color::White => "white",
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Color {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Color::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| format!("unknown color {s:?}"))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct WalkPoint {
    pub x: usize,
    pub y: usize,
    pub color: Color,
}

impl WalkPoint {
    pub fn new(x: usize, y: usize, color: Color) -> Self {
        WalkPoint { x, y, color }
    }

    pub fn level(&self) -> usize {
        self.x + self.y
    }
}

/// Outer insertion for strong rectangulations, inner for weak ones.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Variant {
    Strong,
    Weak,
}

/// Leftmost step rule; the weak variant relaxes the conjunction to a
/// disjunction.
pub fn leftmost_step(p: &WalkPoint, q: &WalkPoint, variant: Variant) -> bool {
    let from = matches!(p.color, Color::Black | Color::Red);
    let to = matches!(q.color, Color::Black | Color::Green);
    let strict = match variant {
        Variant::Strong => from && to,
        Variant::Weak => from || to,
    };
    if strict {
        q.x >= p.x
    } else {
        q.x + 1 >= p.x
    }
}

/// [`leftmost_step`] with the axes and the red/green roles exchanged.
pub fn rightmost_step(p: &WalkPoint, q: &WalkPoint, variant: Variant) -> bool {
    let from = matches!(p.color, Color::Black | Color::Green);
    let to = matches!(q.color, Color::Black | Color::Red);
    let strict = match variant {
        Variant::Strong => from && to,
        Variant::Weak => from || to,
    };
    if strict {
        q.y >= p.y
    } else {
        q.y + 1 >= p.y
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct HistoryQuadrantWalk {
    points: Vec<WalkPoint>,
    variant: Variant,
}

impl HistoryQuadrantWalk {
    /// Checks the level rule between consecutive points.
    pub fn new(points: Vec<WalkPoint>, variant: Variant) -> Result<Self, WalkError> {
        for (i, w) in points.windows(2).enumerate() {
            if w[0].level() as isize + w[0].color.level_step() != w[1].level() as isize {
                return Err(WalkError::LevelViolation { index: i + 1 });
            }
        }
        Ok(HistoryQuadrantWalk { points, variant })
    }

    pub fn points(&self) -> &[WalkPoint] {
        &self.points
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn is_closed(&self) -> bool {
        self.points.last().is_some_and(|p| p.x == 0 && p.y == 0 && p.color == Color::White)
    }

    pub fn is_excursion(&self) -> bool {
        self.is_closed() && self.points[0].level() == 0
    }

    fn all_steps(&self, rule: impl Fn(&WalkPoint, &WalkPoint) -> bool) -> bool {
        self.points.windows(2).all(|w| rule(&w[0], &w[1]))
    }

    pub fn is_leftmost(&self) -> bool {
        self.all_steps(|p, q| leftmost_step(p, q, self.variant))
    }

    pub fn is_rightmost(&self) -> bool {
        self.all_steps(|p, q| rightmost_step(p, q, self.variant))
    }

    pub fn is_leftright(&self) -> bool {
        self.is_leftmost() && self.is_rightmost()
    }

    /// One `x y color` line per point.
    pub fn to_text(&self) -> String {
        self.points.iter().map(|p| format!("{} {} {}\n", p.x, p.y, p.color)).collect()
    }

    /// Parses `x y color` lines; blank lines are skipped.
    pub fn from_text(text: &str, variant: Variant) -> Result<Self, WalkError> {
        let mut points = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.is_empty() {
                continue;
            }
            let parse_err = |message: String| WalkError::Parse { line: i + 1, message };
            let [x, y, color] = fields[..] else {
                return Err(parse_err(format!("expected `x y color`, got {} fields", fields.len())));
            };
            let coord = |s: &str| s.parse::<usize>().map_err(|e| parse_err(format!("{s:?}: {e}")));
            points.push(WalkPoint::new(coord(x)?, coord(y)?, color.parse().map_err(parse_err)?));
        }
        HistoryQuadrantWalk::new(points, variant)
    }

    fn steps(&self) -> Result<Vec<InsertionStep>, WalkError> {
        let first = self.points.first().ok_or(WalkError::Empty)?;
        if first.level() != 0 {
            return Err(WalkError::NotAtOrigin);
        }
        if !self.is_closed() {
            return Err(WalkError::NotClosed);
        }
        Ok(self
            .points
            .iter()
            .map(|p| InsertionStep {
                valley: p.x,
                valleys: p.level() + 1,
                top_aligned: p.color.top_aligned(),
                right_aligned: p.color.right_aligned(),
            })
            .collect())
    }

    /// Replays the insertions; outer attachments for the strong variant,
    /// inner ones for the weak variant.
    pub fn decode(&self) -> Result<Rectangulation, WalkError> {
        let attachment = match self.variant {
            Variant::Strong => Attachment::Outer,
            Variant::Weak => Attachment::Inner,
        };
        let raw = build(&self.steps()?, attachment).expect("level rule keeps valleys in range");
        Ok(Rectangulation::from_rects(&raw).expect("replayed insertions tile a box"))
    }
}

impl fmt::Display for HistoryQuadrantWalk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn encode(pi: &Permutation, variant: Variant) -> HistoryQuadrantWalk {
    let points = insertion_steps(pi)
        .into_iter()
        .map(|s| {
            WalkPoint::new(s.valley, s.valleys - 1 - s.valley, Color::from_alignment(s.top_aligned, s.right_aligned))
        })
        .collect();
    HistoryQuadrantWalk::new(points, variant).expect("insertion histories obey the level rule")
}

pub fn encode_strong(pi: &Permutation) -> HistoryQuadrantWalk {
    encode(pi, Variant::Strong)
}

/// Same points as [`encode_strong`]; decoding attaches innermost.
pub fn encode_weak(pi: &Permutation) -> HistoryQuadrantWalk {
    encode(pi, Variant::Weak)
}

pub fn decode_strong(w: &HistoryQuadrantWalk) -> Result<Rectangulation, WalkError> {
    HistoryQuadrantWalk { points: w.points.clone(), variant: Variant::Strong }.decode()
}

pub fn decode_weak(w: &HistoryQuadrantWalk) -> Result<Rectangulation, WalkError> {
    HistoryQuadrantWalk { points: w.points.clone(), variant: Variant::Weak }.decode()
}

/// Every excursion with `n` points, in lexicographic order of points.
pub fn excursions(n: usize, variant: Variant) -> Vec<HistoryQuadrantWalk> {
    fn go(n: usize, variant: Variant, acc: &mut Vec<WalkPoint>, level: usize, out: &mut Vec<HistoryQuadrantWalk>) {
        let left = n - acc.len();
        if left == 0 {
            if acc.last().is_some_and(|p| p.level() == 0 && p.color == Color::White) {
                out.push(HistoryQuadrantWalk { points: acc.clone(), variant });
            }
            return;
        }
        if level >= left {
            return;
        }
        for x in 0..=level {
            for color in Color::ALL {
                let next = level as isize + color.level_step();
                if next < 0 && left > 1 {
                    continue;
                }
                acc.push(WalkPoint::new(x, level - x, color));
                go(n, variant, acc, next.max(0) as usize, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n, variant, &mut Vec::new(), 0, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;
    use crate::biject::{gamma_s, gamma_w};

    #[test]
    fn identity_profile() {
        let w = encode_strong(&Permutation::identity(3));
        assert!(w.points().iter().all(|p| p.level() == 0));
        assert_eq!(w.points().last().unwrap().color, Color::White);
        assert!(w.is_excursion());
        assert_eq!(encode_weak(&Permutation::identity(3)).points(), w.points());
    }

    #[test]
    fn single_white_point() {
        let w = HistoryQuadrantWalk::new(vec![WalkPoint::new(0, 0, Color::White)], Variant::Strong).unwrap();
        assert_eq!(w.decode().unwrap(), Rectangulation::vertical_strips(1));
    }

    #[test]
    fn malformed_walks_rejected() {
        let bad = vec![WalkPoint::new(0, 0, Color::Black), WalkPoint::new(0, 0, Color::White)];
        assert_eq!(HistoryQuadrantWalk::new(bad, Variant::Strong), Err(WalkError::LevelViolation { index: 1 }));
        let open = HistoryQuadrantWalk::new(vec![WalkPoint::new(0, 0, Color::Red)], Variant::Strong).unwrap();
        assert_eq!(open.decode(), Err(WalkError::NotClosed));
        let far = HistoryQuadrantWalk::new(vec![WalkPoint::new(1, 0, Color::White)], Variant::Strong).unwrap();
        assert_eq!(far.decode(), Err(WalkError::NotAtOrigin));
        assert!(matches!(
            HistoryQuadrantWalk::from_text("0 0\n", Variant::Strong),
            Err(WalkError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            HistoryQuadrantWalk::from_text("\n0 0 blue\n", Variant::Strong),
            Err(WalkError::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn text_round_trip() {
        for p in Permutation::all(5) {
            let w = encode_strong(&p);
            assert_eq!(HistoryQuadrantWalk::from_text(&w.to_text(), Variant::Strong).unwrap(), w);
        }
    }

    #[test]
    fn encoding_is_a_bijection_onto_excursions() {
        for n in 1..=6 {
            let all: BTreeSet<Vec<(usize, usize, Color)>> = excursions(n, Variant::Strong)
                .iter()
                .map(|w| w.points().iter().map(|p| (p.x, p.y, p.color)).collect())
                .collect();
            let encoded: BTreeSet<_> = Permutation::all(n)
                .map(|p| encode_strong(&p).points().iter().map(|q| (q.x, q.y, q.color)).collect())
                .collect();
            assert_eq!(all.len(), (1..=n).product::<usize>());
            assert_eq!(encoded, all);
        }
    }

    #[test]
    fn decode_matches_forward_maps() {
        for n in 1..=6 {
            for p in Permutation::all(n) {
                let strong = decode_strong(&encode_strong(&p)).unwrap();
                assert_eq!(strong.strong_key(), gamma_s(&p).strong_key());
                if n <= 5 {
                    let weak = decode_weak(&encode_weak(&p)).unwrap();
                    assert_eq!(weak.weak_key(), gamma_w(&p).weak_key());
                }
            }
        }
    }

    #[test]
    fn leftmost_iff_strong_key() {
        for n in 1..=6 {
            for p in Permutation::all(n) {
                let key = gamma_s(&p).strong_key();
                assert_eq!(encode_strong(&p).is_leftmost(), p == key, "{p}");
                let top = gamma_s(&p).strong_poset().rightmost_extension();
                assert_eq!(encode_strong(&p).is_rightmost(), p == top, "{p}");
            }
        }
    }

    #[test]
    fn weak_leftmost_iff_weak_key() {
        for n in 1..=6 {
            for p in Permutation::all(n) {
                let r = gamma_w(&p);
                assert_eq!(encode_weak(&p).is_leftmost(), p == r.weak_key(), "{p}");
                assert_eq!(encode_weak(&p).is_rightmost(), p == r.weak_poset().rightmost_extension(), "{p}");
            }
        }
    }

    #[test]
    fn short_excursions_decode() {
        for n in 1..=4 {
            for variant in [Variant::Strong, Variant::Weak] {
                for w in excursions(n, variant) {
                    assert_eq!(w.decode().unwrap().n(), n);
                }
            }
        }
    }
}
