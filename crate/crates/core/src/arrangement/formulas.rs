use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use super::flats::IntersectionLattice;
use super::AffineArrangement;
use crate::error::{Error, Result};
use crate::ncpoly::{omega, AbPoly, CdPoly};
use crate::poset::{GradedPoset, Zaslavsky};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegionCounts {
    pub regions: BigInt,
    pub bounded: BigInt,
    pub unbounded: BigInt,
}

pub fn region_counts(a: &AffineArrangement) -> Result<RegionCounts> {
    let l = IntersectionLattice::of(a)?;
    let zs = l.poset.zaslavsky_invariants();
    if l.has_empty_top() {
        Ok(RegionCounts { regions: &zs.z - &zs.z_b, bounded: zs.z_b, unbounded: zs.z_ub })
    } else {
        Ok(RegionCounts { regions: zs.z.clone(), bounded: BigInt::from(0), unbounded: zs.z })
    }
}

/// cd-index of the face lattice of a central arrangement, ω(a·Ψ(L))*.
pub fn psi_central(a: &AffineArrangement) -> Result<CdPoly> {
    if !a.is_central() {
        return Err(Error::NotCentral);
    }
    let l = IntersectionLattice::of(a)?;
    Ok(omega(&(AbPoly::a() * l.poset.ab_index()?))?.star())
}

/// cd-index of the unbounded complex, ω(a·Ψ(L_ub))*.
pub fn psi_unbounded(a: &AffineArrangement) -> Result<CdPoly> {
    let l = IntersectionLattice::of(a)?;
    if !l.has_empty_top() {
        return Err(Error::Central);
    }
    let n = a.n();
    let ranks: Vec<usize> = (1..n).collect();
    let (l_ub, _) = l.poset.rank_selection(&ranks)?;
    Ok(omega(&(AbPoly::a() * l_ub.ab_index()?))?.star())
}

pub(crate) fn check_chain(p: &GradedPoset, chain: &[usize]) -> Result<()> {
    if chain.first() != Some(&p.bottom()) || chain.last() != Some(&p.top()) {
        return Err(Error::InvalidChain("a chain must start at 0̂ and end at 1̂".into()));
    }
    if let Some(&x) = chain.iter().find(|&&x| x >= p.len()) {
        return Err(Error::InvalidChain(format!("element {x} is out of range")));
    }
    for w in chain.windows(2) {
        if !p.lt(w[0], w[1]) {
            return Err(Error::InvalidChain(format!("elements {} and {} are not strictly increasing", w[0], w[1])));
        }
    }
    Ok(())
}

pub(crate) fn interval_invariants(p: &GradedPoset, x: usize, y: usize) -> Result<Zaslavsky> {
    Ok(p.interval(x, y)?.0.zaslavsky_invariants())
}

/// Π_{i=2..k-1} Z([x_{i-1}, x_i]) · last([x_{k-1}, x_k]) for a chain
/// 0̂ = x_0 < x_1 < ... < x_k = 1̂ of `p`.
pub(crate) fn fiber_product(
    p: &GradedPoset,
    chain: &[usize],
    last: impl Fn(&Zaslavsky) -> BigInt,
) -> Result<BigInt> {
    check_chain(p, chain)?;
    let k = chain.len() - 1;
    if k < 2 {
        return Err(Error::InvalidChain("the chain needs at least two steps".into()));
    }
    let mut out = BigInt::one();
    for i in 2..k {
        out *= interval_invariants(p, chain[i - 1], chain[i])?.z;
    }
    Ok(out * last(&interval_invariants(p, chain[k - 1], chain[k])?))
}

/// Size of the z-preimage of a chain of L ∪ {0̂}, given as indices into
/// `lattice.poset.adjoin_bottom()`.
pub fn fiber_cardinality_central(a: &AffineArrangement, chain: &[usize]) -> Result<BigInt> {
    if !a.is_central() {
        return Err(Error::NotCentral);
    }
    let p = IntersectionLattice::of(a)?.poset.adjoin_bottom();
    check_chain(&p, chain)?;
    if chain.len() == 2 {
        return Ok(BigInt::one());
    }
    fiber_product(&p, chain, |z| z.z.clone())
}

/// Size of the z_ub-preimage (inside Q) of a chain of L ∪ {0̂}.
pub fn fiber_cardinality_unbounded(a: &AffineArrangement, chain: &[usize]) -> Result<BigInt> {
    let l = IntersectionLattice::of(a)?;
    if !l.has_empty_top() {
        return Err(Error::Central);
    }
    fiber_product(&l.poset.adjoin_bottom(), chain, |z| z.z_ub.clone())
}
