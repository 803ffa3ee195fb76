use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{ToricArrangement, ToricSubspace};
use crate::arrangement::fiber_product;
use crate::error::{Error, Result};
use crate::intpoly::IntPoly;
use crate::lattice::maximal_minors;
use crate::ncpoly::{cd_expand, h_prime, omega, phi_t, AbPoly, CdPoly};
use crate::poset::{FlagVector, GradedPoset};

/// The intersection poset: T^n as 0̂, the connected components of all
/// intersections ordered by reverse inclusion, and ∅ as 1̂.
#[derive(Clone, Debug)]
pub struct IntersectionPoset {
    pub poset: GradedPoset,
    /// Component of each element; `None` for ∅.
    pub subspaces: Vec<Option<ToricSubspace>>,
}

impl IntersectionPoset {
    pub fn of(a: &ToricArrangement) -> Result<Self> {
        a.check_essential()?;
        Self::build(a)
    }

    /// Same as [`IntersectionPoset::of`] without the essentiality check; ∅
    /// sits one rank above the smallest components.
    pub fn build(a: &ToricArrangement) -> Result<Self> {
        let n = a.n();
        let mut elems = vec![ToricSubspace::whole(n)];
        let mut i = 0;
        while i < elems.len() {
            let x = elems[i].clone();
            for h in a.hyperplanes() {
                let hs = h.subspace();
                if hs.contains(&x) {
                    continue;
                }
                for c in x.intersect(&hs)? {
                    if !elems.contains(&c) {
                        elems.push(c);
                    }
                }
            }
            i += 1;
        }
        let top = elems.len();
        let mut ranks: Vec<usize> = elems.iter().map(|x| x.codim()).collect();
        ranks.push(ranks.iter().max().copied().unwrap_or(0) + 1);
        let mut rels = Vec::new();
        for (i, x) in elems.iter().enumerate() {
            for (j, y) in elems.iter().enumerate() {
                if i != j && x.contains(y) {
                    rels.push((i, j));
                }
            }
            rels.push((i, top));
        }
        let poset = GradedPoset::new(ranks, &rels)?;
        let mut subspaces: Vec<Option<ToricSubspace>> = elems.into_iter().map(Some).collect();
        subspaces.push(None);
        Ok(IntersectionPoset { poset, subspaces })
    }

    pub fn find(&self, x: &ToricSubspace) -> Option<usize> {
        self.subspaces.iter().position(|s| s.as_ref() == Some(x))
    }

    /// Σ μ(0̂, x) t^{dim x} over the nonempty components.
    pub fn characteristic_polynomial(&self) -> IntPoly {
        let mu = self.poset.moebius_from(self.poset.bottom());
        let mut out = IntPoly::zero();
        for (x, s) in self.subspaces.iter().enumerate() {
            if let Some(s) = s {
                out = &out + &IntPoly::monomial(mu[x].clone(), s.dim());
            }
        }
        out
    }
}

impl ToricArrangement {
    pub fn intersection_poset(&self) -> Result<IntersectionPoset> {
        IntersectionPoset::of(self)
    }

    pub fn characteristic_polynomial(&self) -> Result<IntPoly> {
        Ok(IntersectionPoset::build(self)?.characteristic_polynomial())
    }
}

/// lcm of the nonzero n×n minors of the integral normal matrix.
pub fn n_of_arrangement(a: &ToricArrangement) -> Result<BigInt> {
    a.check_essential()?;
    let normals: Vec<Vec<BigInt>> = a.hyperplanes().iter().map(|h| h.integral_normal()).collect();
    Ok(maximal_minors(&normals, a.n()).iter().fold(BigInt::one(), |l, m| l.lcm(&m.abs())))
}

/// Points of `(1/q Z)^n / Z^n` on none of the hyperplanes.
pub fn chi_by_lattice_points(a: &ToricArrangement, q: &BigInt) -> Result<BigInt> {
    if !q.is_positive() {
        return Err(Error::GridNotMultiple { q: q.to_string(), n: "a positive integer".into() });
    }
    let n_h = if a.is_empty() { BigInt::one() } else { n_of_arrangement(a)? };
    if !(q % &n_h).is_zero() {
        return Err(Error::GridNotMultiple { q: q.to_string(), n: n_h.to_string() });
    }
    let qs = q.to_u64().filter(|&qs| qs.checked_pow(a.n() as u32).is_some_and(|t| t <= 50_000_000));
    let Some(qs) = qs else {
        return Err(Error::TooLarge(format!("grid of {q}^{} points", a.n())));
    };
    // With k = q·x the test a·x ≡ b becomes a·k ≡ q·b (mod q).
    let eqs: Vec<(Vec<i128>, i128)> = a
        .hyperplanes()
        .iter()
        .map(|h| {
            let qb = h.offset() * crate::linalg::rat(q.clone());
            let rhs = qb.to_integer().mod_floor(q);
            let coeffs = h.normal().iter().map(|c| c.mod_floor(q).to_i128().unwrap()).collect();
            (coeffs, rhs.to_i128().unwrap())
        })
        .collect();
    let n = a.n();
    let qi = qs as i128;
    let mut k = vec![0i128; n];
    let mut count = 0u64;
    loop {
        let off = eqs.iter().all(|(c, b)| (c.iter().zip(&k).map(|(x, y)| x * y).sum::<i128>() - b).rem_euclid(qi) != 0);
        if off {
            count += 1;
        }
        let mut i = 0;
        while i < n {
            k[i] += 1;
            if k[i] < qi {
                break;
            }
            k[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
    }
    Ok(BigInt::from(count))
}

/// Number of regions, by (-1)^n χ(0) and by Z_t of the intersection poset.
pub fn toric_region_count(a: &ToricArrangement) -> Result<BigInt> {
    let p = IntersectionPoset::of(a)?;
    let chi0 = p.characteristic_polynomial().coeff(0);
    let by_chi = if a.n().is_multiple_of(2) { chi0 } else { -chi0 };
    let by_zt = p.poset.zaslavsky_invariants().z_t;
    if by_chi != by_zt {
        return Err(Error::Inconsistent(format!("(-1)^n χ(0) = {by_chi} but Z_t = {by_zt}")));
    }
    Ok(by_zt)
}

/// Ψ(T_t) = (a-b)^{n+1} + half, with `half` a cd-polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricPsi {
    pub n: usize,
    pub half: CdPoly,
}

impl ToricPsi {
    pub fn ab(&self) -> AbPoly {
        AbPoly::a_minus_b_pow(self.n + 1) + cd_expand(&self.half)
    }
}

impl fmt::Display for ToricPsi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(a-b)^{}", self.n + 1)?;
        if !self.half.is_zero() {
            let s = self.half.to_string();
            match s.strip_prefix('-') {
                Some(rest) => write!(f, " - {rest}")?,
                None => write!(f, " + {s}")?,
            }
        }
        Ok(())
    }
}

/// Ψ(T_t) = (a-b)^{n+1} + ½·ω(a·H′(Ψ(P))·b)*.
pub fn psi_toric(a: &ToricArrangement) -> Result<ToricPsi> {
    let p = IntersectionPoset::of(a)?;
    let inner = AbPoly::a() * h_prime(&p.poset.ab_index()?) * AbPoly::b();
    let half = omega(&inner)?.star().halve("ω(a·H′(Ψ(P))·b)")?;
    Ok(ToricPsi { n: a.n(), half })
}

/// Ψ(T_t) = φ_t(Ψ(P ∪ {0̂}))*.
pub fn psi_toric_by_phi(a: &ToricArrangement) -> Result<AbPoly> {
    let p = IntersectionPoset::of(a)?;
    Ok(phi_t(&p.poset.adjoin_bottom().ab_index()?)?.star())
}

/// Size of the z_t-preimage of a chain of P ∪ {0̂}, given as indices into
/// `poset.adjoin_bottom()`.
pub fn fiber_cardinality_toric(a: &ToricArrangement, chain: &[usize]) -> Result<BigInt> {
    let p = IntersectionPoset::of(a)?;
    fiber_product(&p.poset.adjoin_bottom(), chain, |z| z.z_t.clone())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FVectorMethod {
    Moebius,
    FlagH,
}

/// `(f_1, ..., f_{n+1})`: the number of faces of each dimension `0..=n`.
pub fn toric_f_vector(a: &ToricArrangement, via: FVectorMethod) -> Result<Vec<BigInt>> {
    let p = IntersectionPoset::of(a)?;
    let n = a.n();
    match via {
        FVectorMethod::Moebius => {
            let points: Vec<usize> = p.poset.layer(n).to_vec();
            Ok((0..=n)
                .map(|i| {
                    let s: BigInt = p
                        .poset
                        .layer(n - i)
                        .iter()
                        .map(|&x| {
                            let mu = p.poset.moebius_from(x);
                            points.iter().map(|&y| mu[y].clone()).sum::<BigInt>()
                        })
                        .sum();
                    if i % 2 == 0 { s } else { -s }
                })
                .collect())
        }
        FVectorMethod::FlagH => {
            let fv = p.poset.flag_vectors();
            Ok(f_from_flag_h(&fv, n))
        }
    }
}

fn f_from_flag_h(fv: &FlagVector, n: usize) -> Vec<BigInt> {
    let range = |lo: usize, hi: usize| -> Vec<usize> { (lo.max(1)..=hi).collect() };
    let h = |s: Vec<usize>| fv.h(&s).clone();
    (0..=n)
        .map(|i| {
            if i == 0 {
                BigInt::one() + h(vec![n])
            } else if i == n {
                h(range(1, n - 1)) + h(range(1, n))
            } else {
                h(range(n - i, n)) + h(range(n - i, n - 1)) + h(range(n - i + 1, n)) + h(range(n - i + 1, n - 1))
            }
        })
        .collect()
}
