//! Finite bounded posets with a rank function.

mod bitset;
mod construct;
mod invariants;
mod manifold;

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

pub use bitset::BitSet;
pub use invariants::{FlagVector, Zaslavsky};
pub use manifold::{
    coalgebra_chain_identity_check, manifold_decomposition, projective_quotient_psi,
    ManifoldDecomposition,
};

use crate::error::{Error, Result};

/// A finite poset with 0̂, 1̂ and a strictly increasing rank function.
///
/// Posets built with [`GradedPoset::new`] are graded: every cover raises the
/// rank by one. [`GradedPoset::with_rank_function`] only requires the rank to
/// increase along the order, which is what a few derived posets need.
#[derive(Clone, Debug)]
pub struct GradedPoset {
    rank: Vec<usize>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    above: Vec<BitSet>,
    below: Vec<BitSet>,
    layers: Vec<Vec<usize>>,
    bottom: usize,
    top: usize,
    graded: bool,
}

impl GradedPoset {
    /// Builds a graded poset from ranks and order relations `x < y`. The
    /// relations may include non-covers; every cover must raise the rank by
    /// exactly one.
    pub fn new(rank: Vec<usize>, relations: &[(usize, usize)]) -> Result<Self> {
        Self::build(rank, relations, true)
    }

    pub fn with_rank_function(rank: Vec<usize>, relations: &[(usize, usize)]) -> Result<Self> {
        Self::build(rank, relations, false)
    }

    fn build(rank: Vec<usize>, relations: &[(usize, usize)], graded: bool) -> Result<Self> {
        let n = rank.len();
        if n == 0 {
            return Err(Error::InvalidPoset("poset has no elements".into()));
        }
        let mut out_edges = vec![Vec::new(); n];
        for &(x, y) in relations {
            if x >= n || y >= n {
                return Err(Error::InvalidPoset(format!("relation {x} < {y} names a missing element")));
            }
            if rank[x] >= rank[y] {
                return Err(Error::InvalidPoset(format!(
                    "relation {x} < {y} does not increase the rank ({} to {})",
                    rank[x], rank[y]
                )));
            }
            out_edges[x].push(y);
        }
        let max_rank = *rank.iter().max().unwrap();
        let mut layers = vec![Vec::new(); max_rank + 1];
        for (x, &r) in rank.iter().enumerate() {
            layers[r].push(x);
        }

        let mut above: Vec<BitSet> = (0..n).map(|_| BitSet::new(n)).collect();
        for r in (0..=max_rank).rev() {
            for &x in &layers[r] {
                let mut s = BitSet::new(n);
                s.insert(x);
                for &y in &out_edges[x] {
                    s.union_with(&above[y]);
                }
                above[x] = s;
            }
        }
        let mut below: Vec<BitSet> = (0..n).map(|_| BitSet::new(n)).collect();
        for (x, set) in above.iter().enumerate() {
            for y in set.iter() {
                below[y].insert(x);
            }
        }

        let bottoms: Vec<usize> = (0..n).filter(|&x| below[x].len() == 1).collect();
        let tops: Vec<usize> = (0..n).filter(|&x| above[x].len() == 1).collect();
        if bottoms.len() != 1 {
            return Err(Error::InvalidPoset(format!("expected one minimal element, found {}", bottoms.len())));
        }
        if tops.len() != 1 {
            return Err(Error::InvalidPoset(format!("expected one maximal element, found {}", tops.len())));
        }
        let (bottom, top) = (bottoms[0], tops[0]);
        if rank[bottom] != 0 {
            return Err(Error::InvalidPoset("the minimum must have rank 0".into()));
        }

        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for x in 0..n {
            let mut strict_above = above[x].clone();
            strict_above.remove(x);
            for &y in &out_edges[x] {
                let mut strict_below = below[y].clone();
                strict_below.remove(y);
                if strict_above.intersects(&strict_below) || up[x].contains(&y) {
                    continue;
                }
                if graded && rank[y] != rank[x] + 1 {
                    return Err(Error::InvalidPoset(format!(
                        "cover {x} < {y} jumps from rank {} to {}",
                        rank[x], rank[y]
                    )));
                }
                up[x].push(y);
                down[y].push(x);
            }
        }
        for v in up.iter_mut().chain(down.iter_mut()) {
            v.sort_unstable();
        }
        Ok(GradedPoset { rank, up, down, above, below, layers, bottom, top, graded })
    }

    pub fn len(&self) -> usize {
        self.rank.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// ρ(P), the rank of 1̂.
    pub fn rank(&self) -> usize {
        self.rank[self.top]
    }

    pub fn rank_of(&self, x: usize) -> usize {
        self.rank[x]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.rank
    }

    /// True when every cover raises the rank by exactly one.
    pub fn is_graded(&self) -> bool {
        self.graded || (0..self.len()).all(|x| self.up[x].iter().all(|&y| self.rank[y] == self.rank[x] + 1))
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.above[x].contains(y)
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn covers_up(&self, x: usize) -> &[usize] {
        &self.up[x]
    }

    pub fn covers_down(&self, x: usize) -> &[usize] {
        &self.down[x]
    }

    /// Elements of rank `r` (may be empty when the rank function skips `r`).
    pub fn layer(&self, r: usize) -> &[usize] {
        self.layers.get(r).map(|v| v.as_slice()).unwrap_or(&[])
    }

    /// Elements in order of increasing rank.
    pub fn linear_extension(&self) -> impl Iterator<Item = usize> + '_ {
        self.layers.iter().flatten().copied()
    }

    pub fn up_set(&self, x: usize) -> &BitSet {
        &self.above[x]
    }

    pub fn down_set(&self, x: usize) -> &BitSet {
        &self.below[x]
    }

    pub fn atoms(&self) -> Vec<usize> {
        self.up[self.bottom].clone()
    }

    pub fn coatoms(&self) -> Vec<usize> {
        self.down[self.top].clone()
    }

    /// All order relations `x < y`.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.len() {
            for y in self.above[x].iter() {
                if y != x {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// All cover relations `x ⋖ y`.
    pub fn cover_relations(&self) -> Vec<(usize, usize)> {
        (0..self.len()).flat_map(|x| self.up[x].iter().map(move |&y| (x, y))).collect()
    }

    pub(crate) fn check_leq(&self, x: usize, y: usize) -> Result<()> {
        if x >= self.len() || y >= self.len() || !self.leq(x, y) {
            return Err(Error::Incomparable(x, y));
        }
        Ok(())
    }
}
