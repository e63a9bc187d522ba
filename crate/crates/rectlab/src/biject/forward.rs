use crate::perm::Permutation;
use crate::rect::{RawRect, Rect, Rectangulation};

/// One insertion: the valley used (0-based from the top-left) and which
/// sides align with the flanking peaks.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct InsertionStep {
    pub valley: usize,
    /// Number of valleys before the insertion.
    pub valleys: usize,
    pub top_aligned: bool,
    pub right_aligned: bool,
}

/// Valley choices and alignments made while inserting `pi` left to right.
///
/// Peak labels stay strictly increasing with gaps of at least two, so the
/// valley for `j` is the unique gap between consecutive peaks around `j`.
pub fn insertion_steps(pi: &Permutation) -> Vec<InsertionStep> {
    let n = pi.len();
    let mut peaks = vec![0, n + 1];
    let mut inserted = vec![false; n + 2];
    let mut steps = Vec::with_capacity(n);
    for &j in pi.entries() {
        let valley = peaks.partition_point(|&p| p < j) - 1;
        let (a, b) = (peaks[valley], peaks[valley + 1]);
        let top_aligned = (a + 1..j).all(|k| inserted[k]);
        let right_aligned = (j + 1..b).all(|k| inserted[k]);
        steps.push(InsertionStep { valley, valleys: peaks.len() - 1, top_aligned, right_aligned });
        inserted[j] = true;
        let mut replacement = Vec::with_capacity(3);
        if !top_aligned {
            replacement.push(a);
        }
        replacement.push(j);
        if !right_aligned {
            replacement.push(b);
        }
        peaks.splice(valley..valley + 2, replacement);
    }
    steps
}

/// Where a non-aligned side lands on the staircase wall or floor.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum Attachment {
    /// Tops just below the left peak, rights just left of the right peak.
    Outer,
    /// Tops just above the valley, rights just right of the valley.
    Inner,
}

#[derive(Clone, Copy)]
struct Peak {
    x_right: usize,
    y_top: usize,
}

/// Partial rectangulation whose coordinates are kept as order-maintenance
/// lists of opaque ids.
struct Staircase {
    attachment: Attachment,
    xs: Vec<usize>,
    ys: Vec<usize>,
    next_id: usize,
    peaks: Vec<Peak>,
    rects: Vec<[usize; 4]>,
}

impl Staircase {
    fn new(attachment: Attachment) -> Self {
        // ids 0, 1: left and right boundary; 2, 3: top and bottom boundary
        Staircase {
            attachment,
            xs: vec![0, 1],
            ys: vec![2, 3],
            next_id: 4,
            peaks: vec![Peak { x_right: 0, y_top: 2 }, Peak { x_right: 1, y_top: 3 }],
            rects: Vec::new(),
        }
    }

    fn fresh(&mut self, axis_y: bool, anchor: usize, after: bool) -> usize {
        let id = self.next_id;
        self.next_id += 1;
        let list = if axis_y { &mut self.ys } else { &mut self.xs };
        let at = list.iter().position(|&c| c == anchor).expect("anchor present");
        list.insert(if after { at + 1 } else { at }, id);
        id
    }

    fn insert(&mut self, valley: usize, top_aligned: bool, right_aligned: bool) {
        let a = self.peaks[valley];
        let b = self.peaks[valley + 1];
        let y_top = match (top_aligned, self.attachment) {
            (true, _) => a.y_top,
            (false, Attachment::Outer) => self.fresh(true, a.y_top, true),
            (false, Attachment::Inner) => self.fresh(true, b.y_top, false),
        };
        let x_right = match (right_aligned, self.attachment) {
            (true, _) => b.x_right,
            (false, Attachment::Outer) => self.fresh(false, b.x_right, false),
            (false, Attachment::Inner) => self.fresh(false, a.x_right, true),
        };
        self.rects.push([a.x_right, y_top, x_right, b.y_top]);
        let mut replacement = Vec::with_capacity(3);
        if !top_aligned {
            replacement.push(a);
        }
        replacement.push(Peak { x_right, y_top });
        if !right_aligned {
            replacement.push(b);
        }
        self.peaks.splice(valley..valley + 2, replacement);
    }

    fn finish(self) -> Vec<RawRect> {
        let mut rank = vec![0i64; self.next_id];
        for (i, &c) in self.xs.iter().enumerate() {
            rank[c] = i as i64;
        }
        for (i, &c) in self.ys.iter().enumerate() {
            rank[c] = i as i64;
        }
        self.rects.iter().map(|r| RawRect::new(rank[r[0]], rank[r[1]], rank[r[2]], rank[r[3]])).collect()
    }
}

/// Replays insertion steps; `None` if a step names a missing valley.
pub(crate) fn build(steps: &[InsertionStep], attachment: Attachment) -> Option<Vec<RawRect>> {
    let mut s = Staircase::new(attachment);
    for step in steps {
        if step.valley + 1 >= s.peaks.len() {
            return None;
        }
        s.insert(step.valley, step.top_aligned, step.right_aligned);
    }
    Some(s.finish())
}

fn assemble(pi: &Permutation, attachment: Attachment) -> Rectangulation {
    let raw = build(&insertion_steps(pi), attachment).expect("label-driven steps name existing valleys");
    let (r, labels) = Rectangulation::from_rects_with_labels(&raw).expect("insertion yields a generic tiling");
    debug_assert_eq!(labels, pi.entries(), "insertion order carries NW-SE labels");
    r
}

/// Rectangles of the diagonal representative on the `n`×`n` grid, indexed
/// by label.
pub fn diagonal_layout(pi: &Permutation) -> Vec<Rect> {
    let n = pi.len();
    let mut x_right = vec![0; n + 2];
    let mut y_top = vec![0; n + 2];
    x_right[n + 1] = n;
    y_top[n + 1] = n;
    let mut peaks = vec![0, n + 1];
    let mut rects = vec![Rect { label: 0, x_left: 0, x_right: 0, y_top: 0, y_bottom: 0 }; n];
    for (&j, step) in pi.entries().iter().zip(insertion_steps(pi)) {
        let (a, b) = (peaks[step.valley], peaks[step.valley + 1]);
        let top = if step.top_aligned { y_top[a] } else { j - 1 };
        let right = if step.right_aligned { x_right[b] } else { j };
        rects[j - 1] = Rect { label: j, x_left: x_right[a], x_right: right, y_top: top, y_bottom: y_top[b] };
        x_right[j] = right;
        y_top[j] = top;
        let mut replacement = Vec::with_capacity(3);
        if !step.top_aligned {
            replacement.push(a);
        }
        replacement.push(j);
        if !step.right_aligned {
            replacement.push(b);
        }
        peaks.splice(step.valley..step.valley + 2, replacement);
    }
    rects
}

/// The diagonal representative of the weak class of `pi`, compacted.
pub fn gamma_w(pi: &Permutation) -> Rectangulation {
    let raw: Vec<_> = diagonal_layout(pi).iter().map(Rect::to_raw).collect();
    let (r, labels) = Rectangulation::from_rects_with_labels(&raw).expect("diagonal layout tiles the grid");
    debug_assert!(labels.iter().enumerate().all(|(i, &l)| l == i + 1));
    r
}

/// The strong rectangulation built by inserting `pi` left to right.
pub fn gamma_s(pi: &Permutation) -> Rectangulation {
    assemble(pi, Attachment::Outer)
}

/// Weak-class representative built with innermost attachments.
pub fn gamma_w_innermost(pi: &Permutation) -> Rectangulation {
    assemble(pi, Attachment::Inner)
}
