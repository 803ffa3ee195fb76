use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::GradedPoset;
use crate::error::{Error, Result};

impl GradedPoset {
    // The subposet on `elements` (listed in the order that becomes the new
    // indexing) with the given ranks.
    fn induced(&self, elements: &[usize], ranks: Vec<usize>) -> Result<GradedPoset> {
        let mut rels = Vec::new();
        for (i, &x) in elements.iter().enumerate() {
            for (j, &y) in elements.iter().enumerate() {
                if self.lt(x, y) {
                    rels.push((i, j));
                }
            }
        }
        if self.is_graded() {
            GradedPoset::new(ranks, &rels)
        } else {
            GradedPoset::with_rank_function(ranks, &rels)
        }
    }

    /// P(S): the elements with rank in `set` together with 0̂ and 1̂, re-ranked
    /// so that the `i`-th smallest rank of `set` becomes rank `i`.
    ///
    /// Returns the poset and, for each new element, its index in `self`.
    pub fn rank_selection(&self, set: &[usize]) -> Result<(GradedPoset, Vec<usize>)> {
        let mut s = set.to_vec();
        s.sort_unstable();
        s.dedup();
        if s.len() != set.len() || s.iter().any(|&r| r == 0 || r >= self.rank()) {
            return Err(Error::InvalidRankSelection(format!(
                "ranks must be distinct and lie in 1..{}",
                self.rank()
            )));
        }
        let mut elements = vec![self.bottom()];
        let mut ranks = vec![0];
        for (i, &r) in s.iter().enumerate() {
            for &x in self.layer(r) {
                elements.push(x);
                ranks.push(i + 1);
            }
        }
        elements.push(self.top());
        ranks.push(s.len() + 1);
        let p = self.induced(&elements, ranks)?;
        Ok((p, elements))
    }

    /// P* with the order reversed and rank ρ(P) - ρ(x).
    pub fn dual(&self) -> GradedPoset {
        let rho = self.rank();
        let ranks = (0..self.len()).map(|x| rho - self.rank_of(x)).collect();
        let rels: Vec<(usize, usize)> = self.cover_relations().into_iter().map(|(x, y)| (y, x)).collect();
        let built = if self.is_graded() {
            GradedPoset::new(ranks, &rels)
        } else {
            GradedPoset::with_rank_function(ranks, &rels)
        };
        built.expect("the dual of a bounded poset is bounded")
    }

    /// [x, y] with ranks shifted to start at 0, plus the embedding.
    pub fn interval(&self, x: usize, y: usize) -> Result<(GradedPoset, Vec<usize>)> {
        self.check_leq(x, y)?;
        let elements: Vec<usize> =
            self.linear_extension().filter(|&z| self.leq(x, z) && self.leq(z, y)).collect();
        let ranks = elements.iter().map(|&z| self.rank_of(z) - self.rank_of(x)).collect();
        let p = self.induced(&elements, ranks)?;
        Ok((p, elements))
    }

    /// P ∪ {0̂'} with a new minimum; the old element `x` keeps index `x` and the
    /// new minimum gets index `len()`.
    pub fn adjoin_bottom(&self) -> GradedPoset {
        let n = self.len();
        let mut ranks: Vec<usize> = (0..n).map(|x| self.rank_of(x) + 1).collect();
        ranks.push(0);
        let mut rels = self.cover_relations();
        rels.push((n, self.bottom()));
        let built = if self.is_graded() {
            GradedPoset::new(ranks, &rels)
        } else {
            GradedPoset::with_rank_function(ranks, &rels)
        };
        built.expect("adjoining a minimum keeps the poset bounded")
    }

    /// The chain 0 < 1 < ... < n.
    pub fn chain(n: usize) -> GradedPoset {
        let rels: Vec<(usize, usize)> = (1..=n).map(|i| (i - 1, i)).collect();
        GradedPoset::new((0..=n).collect(), &rels).expect("chains are graded")
    }

    /// The Boolean lattice B_n of subsets of an `n`-set; element `m` is the
    /// subset with bitmask `m`.
    pub fn boolean(n: usize) -> GradedPoset {
        assert!(n < 16, "Boolean lattice too large");
        let size = 1usize << n;
        let ranks = (0..size).map(|m| m.count_ones() as usize).collect();
        let mut rels = Vec::new();
        for m in 0..size {
            for i in 0..n {
                if m >> i & 1 == 0 {
                    rels.push((m, m | 1 << i));
                }
            }
        }
        GradedPoset::new(ranks, &rels).expect("Boolean lattices are graded")
    }

    /// The butterfly poset of rank `k`: two elements at each rank 1..k-1,
    /// each covering both elements of the rank below.
    pub fn butterfly(k: usize) -> GradedPoset {
        assert!(k >= 1);
        let mut ranks = vec![0];
        for r in 1..k {
            ranks.push(r);
            ranks.push(r);
        }
        ranks.push(k);
        let top = ranks.len() - 1;
        let mut rels = Vec::new();
        let layer = |r: usize| -> Vec<usize> {
            if r == 0 {
                vec![0]
            } else if r == k {
                vec![top]
            } else {
                let mut v = vec![2 * r - 1];
                v.push(2 * r);
                v
            }
        };
        for r in 0..k {
            for x in layer(r) {
                for y in layer(r + 1) {
                    rels.push((x, y));
                }
            }
        }
        GradedPoset::new(ranks, &rels).expect("butterflies are graded")
    }
}
