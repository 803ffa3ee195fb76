//! Rational toric hyperplane arrangements on T^n = R^n / Z^n.

mod poset;
mod subdivision;
mod subspace;

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

pub use poset::{
    chi_by_lattice_points, fiber_cardinality_toric, n_of_arrangement, psi_toric, psi_toric_by_phi,
    toric_f_vector, toric_region_count, FVectorMethod, IntersectionPoset, ToricPsi,
};
pub use subdivision::{toric_face_poset_2d, ToricSubdivision};
pub use subspace::{intersect_components, ToricSubspace};

use crate::error::{Error, Result};
use crate::linalg::{kernel_vector, rank, rat, Rat};

/// `x - floor(x)`.
pub(crate) fn frac(x: &Rat) -> Rat {
    x - x.floor()
}

/// The toric hyperplane `normal · x ≡ offset (mod 1)`, stored with a
/// primitive normal whose first nonzero entry is positive and an offset in
/// `[0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ToricHyperplane {
    normal: Vec<BigInt>,
    offset: Rat,
}

impl ToricHyperplane {
    /// The image of the real hyperplane `normal · x = offset`.
    pub fn new(normal: Vec<BigInt>, offset: Rat) -> Result<Self> {
        let g = normal.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        if g.is_zero() {
            return Err(Error::InvalidHyperplane("normal vector is zero".into()));
        }
        let lead_neg = normal.iter().find(|c| !c.is_zero()).is_some_and(|c| c.is_negative());
        let g = if lead_neg { -g } else { g };
        let normal = normal.iter().map(|c| c / &g).collect();
        Ok(ToricHyperplane { normal, offset: frac(&(offset / rat(g))) })
    }

    pub fn from_i64s(normal: &[i64], offset: Rat) -> Result<Self> {
        Self::new(normal.iter().map(|&c| BigInt::from(c)).collect(), offset)
    }

    pub fn normal(&self) -> &[BigInt] {
        &self.normal
    }

    pub fn offset(&self) -> &Rat {
        &self.offset
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    /// The normal scaled so that the equation has integer data.
    pub fn integral_normal(&self) -> Vec<BigInt> {
        let d = self.offset.denom();
        self.normal.iter().map(|c| c * d).collect()
    }

    pub fn contains_point(&self, x: &[Rat]) -> bool {
        let v: Rat = self.normal.iter().zip(x).map(|(a, xi)| rat(a.clone()) * xi).sum();
        (v - &self.offset).is_integer()
    }

    pub fn subspace(&self) -> ToricSubspace {
        ToricSubspace::from_canonical(self.dim(), alloc::vec![self.normal.clone()], alloc::vec![self.offset.clone()])
    }
}

impl fmt::Display for ToricHyperplane {
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
pub struct ToricArrangement {
    n: usize,
    hyperplanes: Vec<ToricHyperplane>,
}

impl ToricArrangement {
    pub fn new(n: usize, hyperplanes: Vec<ToricHyperplane>) -> Result<Self> {
        for (i, h) in hyperplanes.iter().enumerate() {
            if h.dim() != n {
                return Err(Error::DimensionMismatch { expected: n, found: h.dim() });
            }
            if hyperplanes[..i].contains(h) {
                return Err(Error::InvalidHyperplane(format!("hyperplane {} repeats an earlier one", i + 1)));
            }
        }
        Ok(ToricArrangement { n, hyperplanes })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn hyperplanes(&self) -> &[ToricHyperplane] {
        &self.hyperplanes
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    pub fn is_essential(&self) -> bool {
        let rows: Vec<Vec<Rat>> =
            self.hyperplanes.iter().map(|h| h.normal.iter().map(|c| rat(c.clone())).collect()).collect();
        rank(&rows) == self.n
    }

    pub(crate) fn check_essential(&self) -> Result<()> {
        let rows: Vec<Vec<Rat>> =
            self.hyperplanes.iter().map(|h| h.normal.iter().map(|c| rat(c.clone())).collect()).collect();
        let witness = if rows.is_empty() {
            (self.n > 0).then(|| (0..self.n).map(|i| rat(i64::from(i == 0))).collect())
        } else {
            kernel_vector(&rows, self.n)
        };
        match witness {
            None => Ok(()),
            Some(w) => Err(Error::NotEssential(format!(
                "the direction {} is orthogonal to every normal",
                crate::arrangement::format_vector(&w)
            ))),
        }
    }
}
