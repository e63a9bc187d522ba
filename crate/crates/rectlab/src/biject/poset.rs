use std::collections::HashMap;

use thiserror::Error;

use crate::perm::Permutation;
use crate::relation::Relation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PosetError {
    #[error("relation has a cycle through label {0}")]
    Cyclic(usize),
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum PosetKind {
    Weak,
    Adjacency,
    Strong,
}

/// A partial order on labels `1..=n`; `a ≺ b` means `a` precedes `b` in
/// every linear extension.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poset {
    kind: PosetKind,
    covers: Vec<(usize, usize)>,
    closure: Relation,
}

impl Poset {
    /// Builds the order generated by `relation` (0-based pairs).
    pub fn generated_by(kind: PosetKind, relation: &Relation) -> Result<Self, PosetError> {
        let closure = relation.transitive_closure();
        if let Some(a) = (0..closure.size()).find(|&a| closure.contains(a, a)) {
            return Err(PosetError::Cyclic(a + 1));
        }
        let covers = closure.transitive_reduction().pairs().map(|(a, b)| (a + 1, b + 1)).collect();
        Ok(Poset { kind, covers, closure })
    }

    pub fn chain(n: usize) -> Self {
        let mut r = Relation::new(n);
        for i in 1..n {
            r.insert(i - 1, i);
        }
        Poset::generated_by(PosetKind::Adjacency, &r).expect("chains are acyclic")
    }

    pub fn antichain(n: usize) -> Self {
        Poset::generated_by(PosetKind::Adjacency, &Relation::new(n)).expect("empty relation")
    }

    pub fn n(&self) -> usize {
        self.closure.size()
    }

    pub fn kind(&self) -> PosetKind {
        self.kind
    }

    /// Irredundant pairs `(a, b)` with `a ⋖ b`, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn less(&self, a: usize, b: usize) -> bool {
        self.closure.contains(a - 1, b - 1)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.less(a, b) || self.less(b, a)
    }

    pub fn is_linear_extension(&self, pi: &Permutation) -> bool {
        if pi.len() != self.n() {
            return false;
        }
        let pos = pi.positions();
        self.covers.iter().all(|&(a, b)| pos[a - 1] < pos[b - 1])
    }

    fn greedy(&self, pick_largest: bool) -> Permutation {
        let n = self.n();
        let mut pending = self.pending_counts();
        let mut placed = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for _ in 0..n {
            let mut candidates = (0..n).filter(|&v| !placed[v] && pending[v] == 0);
            let v = if pick_largest { candidates.next_back() } else { candidates.next() }.expect("acyclic");
            placed[v] = true;
            out.push(v + 1);
            for &(a, b) in &self.covers {
                if a == v + 1 {
                    pending[b - 1] -= 1;
                }
            }
        }
        Permutation::from_vec_unchecked(out)
    }

    fn pending_counts(&self) -> Vec<usize> {
        let mut pending = vec![0; self.n()];
        for &(_, b) in &self.covers {
            pending[b - 1] += 1;
        }
        pending
    }

    /// Repeatedly takes the smallest minimal label.
    pub fn leftmost_extension(&self) -> Permutation {
        self.greedy(false)
    }

    /// Repeatedly takes the largest minimal label.
    pub fn rightmost_extension(&self) -> Permutation {
        self.greedy(true)
    }

    /// All linear extensions in lexicographic order.
    pub fn linear_extensions(&self) -> LinearExtensions<'_> {
        LinearExtensions {
            poset: self,
            pending: self.pending_counts(),
            placed: vec![false; self.n()],
            stack: Vec::with_capacity(self.n()),
            state: IterState::Fresh,
        }
    }

    pub fn count_linear_extensions(&self) -> u128 {
        assert!(self.n() <= 64, "subset dynamic programming is limited to 64 labels");
        let n = self.n();
        let below: Vec<u64> =
            (0..n).map(|b| (0..n).filter(|&a| self.closure.contains(a, b)).fold(0u64, |m, a| m | 1 << a)).collect();
        let mut memo: HashMap<u64, u128> = HashMap::new();
        fn go(mask: u64, n: usize, below: &[u64], memo: &mut HashMap<u64, u128>) -> u128 {
            if mask.count_ones() as usize == n {
                return 1;
            }
            if let Some(&v) = memo.get(&mask) {
                return v;
            }
            let total = (0..n)
                .filter(|&v| mask >> v & 1 == 0 && below[v] & !mask == 0)
                .map(|v| go(mask | 1 << v, n, below, memo))
                .sum();
            memo.insert(mask, total);
            total
        }
        go(0, n, &below, &mut memo)
    }

    /// Labels strictly below `b`.
    pub fn down_set(&self, b: usize) -> Vec<usize> {
        (1..=self.n()).filter(|&a| self.less(a, b)).collect()
    }
}

enum IterState {
    Fresh,
    Running,
    Done,
}

pub struct LinearExtensions<'a> {
    poset: &'a Poset,
    pending: Vec<usize>,
    placed: Vec<bool>,
    stack: Vec<usize>,
    state: IterState,
}

impl LinearExtensions<'_> {
    fn place(&mut self, v: usize) {
        self.placed[v] = true;
        self.stack.push(v);
        for &(a, b) in &self.poset.covers {
            if a == v + 1 {
                self.pending[b - 1] -= 1;
            }
        }
    }

    fn unplace(&mut self) -> Option<usize> {
        let v = self.stack.pop()?;
        self.placed[v] = false;
        for &(a, b) in &self.poset.covers {
            if a == v + 1 {
                self.pending[b - 1] += 1;
            }
        }
        Some(v)
    }

    fn next_available(&self, after: Option<usize>) -> Option<usize> {
        let start = after.map_or(0, |v| v + 1);
        (start..self.poset.n()).find(|&v| !self.placed[v] && self.pending[v] == 0)
    }

    fn fill(&mut self) {
        while let Some(v) = self.next_available(None) {
            self.place(v);
        }
    }
}

impl Iterator for LinearExtensions<'_> {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        match self.state {
            IterState::Done => return None,
            IterState::Fresh => {
                self.state = IterState::Running;
                self.fill();
            }
            IterState::Running => loop {
                let Some(v) = self.unplace() else {
                    self.state = IterState::Done;
                    return None;
                };
                if let Some(w) = self.next_available(Some(v)) {
                    self.place(w);
                    self.fill();
                    break;
                }
            },
        }
        if self.stack.len() != self.poset.n() {
            self.state = IterState::Done;
            return None;
        }
        Some(Permutation::from_vec_unchecked(self.stack.iter().map(|v| v + 1).collect()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn antichain_and_chain() {
        let a = Poset::antichain(3);
        let all: Vec<_> = a.linear_extensions().collect();
        assert_eq!(all, Permutation::all(3).collect::<Vec<_>>());
        assert_eq!(a.count_linear_extensions(), 6);
        assert_eq!(a.leftmost_extension().to_string(), "1 2 3");
        assert_eq!(a.rightmost_extension().to_string(), "3 2 1");
        let c = Poset::chain(5);
        assert_eq!(c.linear_extensions().count(), 1);
        assert_eq!(c.count_linear_extensions(), 1);
        assert_eq!(c.covers().len(), 4);
    }

    #[test]
    fn cycle_rejected() {
        let mut r = Relation::new(2);
        r.insert(0, 1);
        r.insert(1, 0);
        assert!(Poset::generated_by(PosetKind::Strong, &r).is_err());
    }

    #[test]
    fn extensions_match_filter_oracle() {
        // 1 < 3, 2 < 3, 2 < 4, 4 < 5
        let mut r = Relation::new(5);
        for (a, b) in [(0, 2), (1, 2), (1, 3), (3, 4)] {
            r.insert(a, b);
        }
        let p = Poset::generated_by(PosetKind::Adjacency, &r).unwrap();
        let got: Vec<_> = p.linear_extensions().collect();
        let want: Vec<_> = Permutation::all(5).filter(|s| p.is_linear_extension(s)).collect();
        assert_eq!(got, want);
        assert_eq!(p.count_linear_extensions(), want.len() as u128);
        assert_eq!(p.leftmost_extension(), want[0]);
        assert_eq!(&p.rightmost_extension(), want.last().unwrap());
    }

    #[test]
    fn empty_poset_has_one_extension() {
        let p = Poset::antichain(0);
        assert_eq!(p.linear_extensions().count(), 1);
        assert_eq!(p.count_linear_extensions(), 1);
    }
}
