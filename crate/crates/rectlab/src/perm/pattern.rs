use std::collections::BTreeSet;
use std::fmt;
use std::ops::ControlFlow;

use super::{PermError, Permutation};

/// A pattern permutation together with a set of shaded cells.
///
/// Cell `(i, j)` is the open region strictly between the `i`-th and
/// `(i+1)`-th chosen positions and strictly between the `j`-th and
/// `(j+1)`-th smallest chosen values, with index `0` and `k + 1` standing
/// for minus and plus infinity. Classical patterns shade nothing; a vincular
/// adjacency between positions `i` and `i + 1` shades the whole column `i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MeshPattern {
    tau: Permutation,
    shaded: BTreeSet<(usize, usize)>,
}

impl MeshPattern {
    pub fn new(tau: Permutation, shaded: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, PermError> {
        let k = tau.len();
        let shaded: BTreeSet<_> = shaded.into_iter().collect();
        if let Some(&(i, j)) = shaded.iter().find(|&&(i, j)| i > k || j > k) {
            return Err(PermError::CellOutOfRange(i, j));
        }
        Ok(MeshPattern { tau, shaded })
    }

    pub fn classical(tau: Permutation) -> Self {
        MeshPattern { tau, shaded: BTreeSet::new() }
    }

    /// `adjacent` lists the columns `i` whose flanking entries must be
    /// consecutive positions (`1 <= i < k`).
    pub fn vincular(tau: Permutation, adjacent: &[usize]) -> Result<Self, PermError> {
        let k = tau.len();
        let cells: Vec<_> = adjacent.iter().flat_map(|&i| (0..=k).map(move |j| (i, j))).collect();
        MeshPattern::new(tau, cells)
    }

    pub fn tau(&self) -> &Permutation {
        &self.tau
    }

    pub fn shaded(&self) -> &BTreeSet<(usize, usize)> {
        &self.shaded
    }

    pub fn len(&self) -> usize {
        self.tau.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tau.is_empty()
    }

    /// The pattern whose occurrences are the occurrences of `self` in the
    /// complement.
    pub fn complement(&self) -> Self {
        let k = self.len();
        MeshPattern { tau: self.tau.complement(), shaded: self.shaded.iter().map(|&(i, j)| (i, k - j)).collect() }
    }

    fn full_column(&self, i: usize) -> bool {
        (0..=self.len()).all(|j| self.shaded.contains(&(i, j)))
    }
}

impl fmt::Display for MeshPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {{", self.tau)?;
        for (idx, (i, j)) in self.shaded.iter().enumerate() {
            if idx > 0 {
                f.write_str(", ")?;
            }
            write!(f, "({i},{j})")?;
        }
        f.write_str("})")
    }
}

struct Matcher<'a> {
    pi: &'a [usize],
    tau: &'a [usize],
    shaded: Vec<(usize, usize)>,
    // column_tight[i]: chosen positions i-1 and i (0-based) must be consecutive
    column_tight: Vec<bool>,
    // value_rank[j]: index into the chosen tuple holding the (j+1)-th smallest value
    value_rank: Vec<usize>,
    chosen: Vec<usize>,
}

impl Matcher<'_> {
    fn search<F>(&mut self, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let n = self.pi.len();
        let k = self.tau.len();
        let m = self.chosen.len();
        if m == k {
            if self.column_tight[k] && k > 0 && self.chosen[k - 1] != n - 1 {
                return ControlFlow::Continue(());
            }
            if self.regions_empty() {
                return visit(&self.chosen);
            }
            return ControlFlow::Continue(());
        }
        let start = self.chosen.last().map_or(0, |&p| p + 1);
        let end = n - (k - m - 1);
        let range = if self.column_tight[m] {
            if m == 0 {
                0..1.min(end)
            } else {
                start..(start + 1).min(end)
            }
        } else {
            start..end
        };
        for p in range {
            let v = self.pi[p];
            let consistent =
                self.chosen.iter().enumerate().all(|(q, &pq)| (self.pi[pq] < v) == (self.tau[q] < self.tau[m]));
            if consistent {
                self.chosen.push(p);
                let flow = self.search(visit);
                self.chosen.pop();
                flow?;
            }
        }
        ControlFlow::Continue(())
    }

    fn regions_empty(&self) -> bool {
        let n = self.pi.len();
        let k = self.tau.len();
        self.shaded.iter().all(|&(i, j)| {
            let lo_pos = if i == 0 { 0 } else { self.chosen[i - 1] + 1 };
            let hi_pos = if i == k { n } else { self.chosen[i] };
            let lo_val = if j == 0 { 0 } else { self.pi[self.chosen[self.value_rank[j - 1]]] };
            let hi_val = if j == k { n + 1 } else { self.pi[self.chosen[self.value_rank[j]]] };
            (lo_pos..hi_pos).all(|l| {
                let v = self.pi[l];
                v <= lo_val || v >= hi_val
            })
        })
    }
}

fn run<F>(pi: &Permutation, m: &MeshPattern, mut visit: F)
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let k = m.len();
    if k > pi.len() {
        return;
    }
    let mut value_rank = vec![0; k];
    for (q, &v) in m.tau.entries().iter().enumerate() {
        value_rank[v - 1] = q;
    }
    let mut matcher = Matcher {
        pi: pi.entries(),
        tau: m.tau.entries(),
        shaded: m.shaded.iter().copied().collect(),
        column_tight: (0..=k).map(|i| m.full_column(i)).collect(),
        value_rank,
        chosen: Vec::with_capacity(k),
    };
    let _ = matcher.search(&mut visit);
}

/// Whether `pi` contains an occurrence of the mesh pattern `m`.
pub fn contains_pattern(pi: &Permutation, m: &MeshPattern) -> bool {
    let mut found = false;
    run(pi, m, |_| {
        found = true;
        ControlFlow::Break(())
    });
    found
}

/// All occurrences of `m` in `pi` as 0-based position tuples, in
/// lexicographic order.
pub fn occurrences(pi: &Permutation, m: &MeshPattern) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    run(pi, m, |occ| {
        out.push(occ.to_vec());
        ControlFlow::Continue(())
    });
    out
}

/// Built-in patterns.
pub mod patterns {
    use super::MeshPattern;
    use crate::perm::Permutation;

    fn perm(entries: &[usize]) -> Permutation {
        Permutation::from_vec_unchecked(entries.to_vec())
    }

    fn vinc(entries: &[usize], column: usize) -> MeshPattern {
        MeshPattern::vincular(perm(entries), &[column]).expect("column within pattern")
    }

    pub fn classical_2413() -> MeshPattern {
        MeshPattern::classical(perm(&[2, 4, 1, 3]))
    }

    pub fn classical_3142() -> MeshPattern {
        MeshPattern::classical(perm(&[3, 1, 4, 2]))
    }

    /// 2-41-3
    pub fn v2_41_3() -> MeshPattern {
        vinc(&[2, 4, 1, 3], 2)
    }

    /// 3-14-2
    pub fn v3_14_2() -> MeshPattern {
        vinc(&[3, 1, 4, 2], 2)
    }

    /// 3-41-2
    pub fn v3_41_2() -> MeshPattern {
        vinc(&[3, 4, 1, 2], 2)
    }

    /// 2-14-3
    pub fn v2_14_3() -> MeshPattern {
        vinc(&[2, 1, 4, 3], 2)
    }

    /// 24-51-3, 42-51-3, 3-51-24, 3-51-42
    pub fn two_clumped() -> [MeshPattern; 4] {
        [vinc(&[2, 4, 5, 1, 3], 3), vinc(&[4, 2, 5, 1, 3], 3), vinc(&[3, 5, 1, 2, 4], 2), vinc(&[3, 5, 1, 4, 2], 2)]
    }

    /// 24-15-3, 42-15-3, 3-15-24, 3-15-42
    pub fn co_two_clumped() -> [MeshPattern; 4] {
        [vinc(&[2, 4, 1, 5, 3], 3), vinc(&[4, 2, 1, 5, 3], 3), vinc(&[3, 1, 5, 2, 4], 2), vinc(&[3, 1, 5, 4, 2], 2)]
    }

    pub fn p1() -> MeshPattern {
        MeshPattern::new(perm(&[2, 5, 3, 1, 4]), [(0, 3), (0, 4), (1, 3), (4, 2), (5, 1), (5, 2)])
            .expect("cells within grid")
    }

    pub fn p2() -> MeshPattern {
        MeshPattern::new(perm(&[4, 1, 3, 5, 2]), [(0, 1), (0, 2), (1, 2), (4, 3), (5, 3), (5, 4)])
            .expect("cells within grid")
    }
}
