use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::Zero;

use super::{AffineArrangement, AffineHyperplane};
use crate::error::Result;
use crate::intpoly::IntPoly;
use crate::linalg::{rref, Rat};
use crate::poset::GradedPoset;

/// A nonempty affine subspace of R^n, stored as the reduced row echelon form
/// of its defining equations `[A | b]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Flat {
    n: usize,
    rows: Vec<Vec<Rat>>,
}

impl Flat {
    pub fn whole(n: usize) -> Self {
        Flat { n, rows: Vec::new() }
    }

    fn from_rows(n: usize, rows: Vec<Vec<Rat>>) -> Option<Self> {
        let (red, pivots) = rref(&rows);
        if pivots.last() == Some(&n) {
            return None;
        }
        Some(Flat { n, rows: red })
    }

    /// The common intersection, `None` when empty.
    pub fn from_hyperplanes(n: usize, hs: &[AffineHyperplane]) -> Option<Self> {
        Self::from_rows(n, hs.iter().map(augmented_row).collect())
    }

    pub fn intersect(&self, h: &AffineHyperplane) -> Option<Flat> {
        let mut rows = self.rows.clone();
        rows.push(augmented_row(h));
        Self::from_rows(self.n, rows)
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.n - self.rows.len()
    }

    pub fn codim(&self) -> usize {
        self.rows.len()
    }

    /// Equations in reduced echelon form, each `[a_1, ..., a_n, b]`.
    pub fn equations(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Flat) -> bool {
        if other.codim() < self.codim() {
            return false;
        }
        let mut rows = other.rows.clone();
        rows.extend(self.rows.iter().cloned());
        rref(&rows).0.len() == other.codim()
    }

    pub fn contains_point(&self, x: &[Rat]) -> bool {
        self.rows.iter().all(|r| {
            let lhs: Rat = (0..self.n).map(|i| &r[i] * &x[i]).sum();
            lhs == r[self.n]
        })
    }
}

fn augmented_row(h: &AffineHyperplane) -> Vec<Rat> {
    let mut r = h.normal_rat();
    r.push(h.offset.clone());
    r
}

/// Intersection flats ordered by reverse inclusion, with R^n as 0̂ and the
/// empty set adjoined as 1̂ for non-central arrangements.
#[derive(Clone, Debug)]
pub struct IntersectionLattice {
    pub poset: GradedPoset,
    /// Flat of each element; `None` marks the empty set.
    pub flats: Vec<Option<Flat>>,
}

impl IntersectionLattice {
    pub fn of(a: &AffineArrangement) -> Result<Self> {
        a.check_essential()?;
        Ok(Self::build(a))
    }

    /// Same as [`IntersectionLattice::of`] without the essentiality check.
    pub fn build(a: &AffineArrangement) -> Self {
        let n = a.n();
        let mut index: BTreeMap<Flat, usize> = BTreeMap::new();
        let mut flats: Vec<Flat> = Vec::new();
        let mut edges: Vec<(usize, usize)> = Vec::new();
        let mut empty_from: Vec<usize> = Vec::new();
        let whole = Flat::whole(n);
        index.insert(whole.clone(), 0);
        flats.push(whole);
        let mut next = 0;
        while next < flats.len() {
            let x = flats[next].clone();
            for h in a.hyperplanes() {
                match x.intersect(h) {
                    Some(y) if y == x => {}
                    Some(y) => {
                        let j = *index.entry(y.clone()).or_insert_with(|| {
                            flats.push(y);
                            flats.len() - 1
                        });
                        edges.push((next, j));
                    }
                    None => empty_from.push(next),
                }
            }
            next += 1;
        }
        let mut ranks: Vec<usize> = flats.iter().map(|f| f.codim()).collect();
        let mut labels: Vec<Option<Flat>> = flats.into_iter().map(Some).collect();
        if !empty_from.is_empty() {
            let top = labels.len();
            let r = ranks.iter().max().copied().unwrap_or(0) + 1;
            for x in 0..top {
                edges.push((x, top));
            }
            ranks.push(r);
            labels.push(None);
        }
        let poset = GradedPoset::new(ranks, &edges).expect("intersection lattices are graded");
        IntersectionLattice { poset, flats: labels }
    }

    /// Index of `flat`, or of the empty set for `None`.
    pub fn find(&self, flat: Option<&Flat>) -> Option<usize> {
        self.flats.iter().position(|f| f.as_ref() == flat)
    }

    pub fn has_empty_top(&self) -> bool {
        self.flats[self.poset.top()].is_none()
    }

    /// Σ μ(0̂, x) t^{dim x} over the nonempty flats.
    pub fn characteristic_polynomial(&self) -> IntPoly {
        let mu = self.poset.moebius_from(self.poset.bottom());
        let mut out = IntPoly::zero();
        for (x, f) in self.flats.iter().enumerate() {
            if let Some(f) = f {
                if !mu[x].is_zero() {
                    out = &out + &IntPoly::monomial(mu[x].clone(), f.dim());
                }
            }
        }
        out
    }
}

impl AffineArrangement {
    pub fn intersection_lattice(&self) -> Result<IntersectionLattice> {
        IntersectionLattice::of(self)
    }

    pub fn characteristic_polynomial(&self) -> IntPoly {
        IntersectionLattice::build(self).characteristic_polynomial()
    }
}
