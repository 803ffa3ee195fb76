//! Rational hyperplane arrangements in R^n.

mod faces;
mod flats;
mod formulas;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

pub use faces::{face_poset_central, faces, unbounded_structures, Face, FacePoset, UnboundedStructures};
pub use flats::{Flat, IntersectionLattice};
pub(crate) use formulas::fiber_product;
pub use formulas::{
    fiber_cardinality_central, fiber_cardinality_unbounded, psi_central, psi_unbounded,
    region_counts, RegionCounts,
};

use crate::error::{Error, Result};
use crate::linalg::{kernel_vector, rat, Rat};

/// The hyperplane `normal · x = offset`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineHyperplane {
    pub normal: Vec<BigInt>,
    pub offset: Rat,
}

impl AffineHyperplane {
    pub fn new(normal: Vec<BigInt>, offset: Rat) -> Result<Self> {
        if normal.iter().all(|c| c.is_zero()) {
            return Err(Error::InvalidHyperplane("normal vector is zero".into()));
        }
        Ok(AffineHyperplane { normal, offset })
    }

    pub fn from_i64s(normal: &[i64], offset: Rat) -> Result<Self> {
        Self::new(normal.iter().map(|&c| BigInt::from(c)).collect(), offset)
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    pub fn normal_rat(&self) -> Vec<Rat> {
        self.normal.iter().map(|c| rat(c.clone())).collect()
    }

    // Primitive normal with positive leading entry and the matching offset.
    fn canonical(&self) -> (Vec<BigInt>, Rat) {
        let g = self.normal.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        let lead_neg = self.normal.iter().find(|c| !c.is_zero()).is_some_and(|c| c.is_negative());
        let g = if lead_neg { -g } else { g };
        let normal = self.normal.iter().map(|c| c / &g).collect();
        (normal, &self.offset / rat(g))
    }
}

impl fmt::Display for AffineHyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.normal.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, " | {}", self.offset)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineArrangement {
    n: usize,
    hyperplanes: Vec<AffineHyperplane>,
}

impl AffineArrangement {
    pub fn new(n: usize, hyperplanes: Vec<AffineHyperplane>) -> Result<Self> {
        let mut seen: Vec<(Vec<BigInt>, Rat)> = Vec::new();
        for (i, h) in hyperplanes.iter().enumerate() {
            if h.dim() != n {
                return Err(Error::DimensionMismatch { expected: n, found: h.dim() });
            }
            let key = h.canonical();
            if seen.contains(&key) {
                return Err(Error::InvalidHyperplane(format!("hyperplane {} repeats an earlier one", i + 1)));
            }
            seen.push(key);
        }
        Ok(AffineArrangement { n, hyperplanes })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn hyperplanes(&self) -> &[AffineHyperplane] {
        &self.hyperplanes
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    /// A nonzero direction orthogonal to every normal, if the normals do not
    /// span R^n.
    pub fn essential_witness(&self) -> Option<Vec<Rat>> {
        let rows: Vec<Vec<Rat>> = self.hyperplanes.iter().map(|h| h.normal_rat()).collect();
        if rows.is_empty() {
            return (self.n > 0).then(|| {
                let mut v = alloc::vec![Rat::zero(); self.n];
                v[0] = rat(1);
                v
            });
        }
        kernel_vector(&rows, self.n)
    }

    pub fn is_essential(&self) -> bool {
        self.essential_witness().is_none()
    }

    pub(crate) fn check_essential(&self) -> Result<()> {
        match self.essential_witness() {
            None => Ok(()),
            Some(w) => Err(Error::NotEssential(format!("the direction {} is orthogonal to every normal", format_vector(&w)))),
        }
    }

    /// True when all hyperplanes share a common point.
    pub fn is_central(&self) -> bool {
        Flat::from_hyperplanes(self.n, &self.hyperplanes).is_some()
    }
}

pub(crate) fn format_vector(v: &[Rat]) -> String {
    let parts: Vec<String> = v.iter().map(|x| format!("{x}")).collect();
    format!("({})", parts.join(", "))
}

#[cfg(test)]
mod tests;
