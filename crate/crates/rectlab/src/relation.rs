//! Dense binary relations on `0..n` stored as bit rows.

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Relation {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Relation {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Relation { n, words, bits: vec![0; n * words] }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, a: usize, b: usize) {
        self.bits[a * self.words + b / 64] |= 1 << (b % 64);
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.bits[a * self.words + b / 64] >> (b % 64) & 1 == 1
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |a| (0..self.n).filter(move |&b| self.contains(a, b)).map(move |b| (a, b)))
    }

    pub fn union_with(&mut self, other: &Relation) {
        for (x, y) in self.bits.iter_mut().zip(&other.bits) {
            *x |= *y;
        }
    }

    /// Warshall closure.
    pub fn transitive_closure(&self) -> Relation {
        let mut c = self.clone();
        let w = self.words;
        for k in 0..self.n {
            let row_k: Vec<u64> = c.bits[k * w..(k + 1) * w].to_vec();
            for i in 0..self.n {
                if c.contains(i, k) {
                    for (x, y) in c.bits[i * w..(i + 1) * w].iter_mut().zip(&row_k) {
                        *x |= *y;
                    }
                }
            }
        }
        c
    }

    /// Pairs of a strict order that are not implied by transitivity.
    pub fn transitive_reduction(&self) -> Relation {
        let closure = self.transitive_closure();
        let mut red = Relation::new(self.n);
        for (a, b) in closure.pairs() {
            let implied = (0..self.n).any(|m| m != a && m != b && closure.contains(a, m) && closure.contains(m, b));
            if !implied {
                red.insert(a, b);
            }
        }
        red
    }

    pub fn is_irreflexive(&self) -> bool {
        (0..self.n).all(|a| !self.contains(a, a))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_and_reduction_of_chain() {
        let mut r = Relation::new(70);
        for i in 0..69 {
            r.insert(i, i + 1);
        }
        let c = r.transitive_closure();
        assert!(c.contains(0, 69));
        assert!(!c.contains(69, 0));
        assert_eq!(c.pairs().count(), 70 * 69 / 2);
        assert_eq!(c.transitive_reduction(), r);
    }
}
