use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::GradedPoset;
use crate::error::{Error, Result};
use crate::ncpoly::{AbPoly, AbWord, Letter};

/// The four Zaslavsky invariants of a poset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Zaslavsky {
    pub z: BigInt,
    pub z_b: BigInt,
    pub z_t: BigInt,
    pub z_ub: BigInt,
}

/// Flag f- and h-vectors of a poset of rank `n + 1`, indexed by subsets of
/// `{1, ..., n}` encoded as bitmasks (bit `i - 1` for rank `i`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagVector {
    n: usize,
    f: Vec<BigInt>,
    h: Vec<BigInt>,
}

impl FlagVector {
    pub fn from_f(n: usize, f: Vec<BigInt>) -> Self {
        assert_eq!(f.len(), 1 << n);
        let h = mobius_transform(&f, n, true);
        FlagVector { n, f, h }
    }

    pub fn from_h(n: usize, h: Vec<BigInt>) -> Self {
        assert_eq!(h.len(), 1 << n);
        let f = mobius_transform(&h, n, false);
        FlagVector { n, f, h }
    }

    /// `n`, so that the ambient poset has rank `n + 1`.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mask(set: &[usize]) -> usize {
        set.iter().fold(0, |m, &i| {
            assert!(i >= 1, "rank sets use ranks 1..=n");
            m | 1 << (i - 1)
        })
    }

    pub fn f(&self, set: &[usize]) -> &BigInt {
        &self.f[Self::mask(set)]
    }

    pub fn h(&self, set: &[usize]) -> &BigInt {
        &self.h[Self::mask(set)]
    }

    pub fn f_mask(&self, mask: usize) -> &BigInt {
        &self.f[mask]
    }

    pub fn h_mask(&self, mask: usize) -> &BigInt {
        &self.h[mask]
    }

    pub fn f_values(&self) -> &[BigInt] {
        &self.f
    }

    pub fn h_values(&self) -> &[BigInt] {
        &self.h
    }

    /// Σ_S h_S u_S.
    pub fn ab_index(&self) -> AbPoly {
        let mut out = AbPoly::zero();
        for (mask, h) in self.h.iter().enumerate() {
            let w = AbWord::from_letters(
                (0..self.n).map(|i| if mask >> i & 1 == 1 { Letter::B } else { Letter::A }),
            );
            out.add_term(w, h.clone());
        }
        out
    }
}

// Sum over subsets; `signed` gives the inverse transform.
fn mobius_transform(v: &[BigInt], n: usize, signed: bool) -> Vec<BigInt> {
    let mut out = v.to_vec();
    for i in 0..n {
        for mask in 0..out.len() {
            if mask >> i & 1 == 1 {
                let lower = out[mask ^ (1 << i)].clone();
                if signed {
                    out[mask] -= lower;
                } else {
                    out[mask] += lower;
                }
            }
        }
    }
    out
}

impl GradedPoset {
    /// μ(x, y) for every `y`, zero where `x ≰ y`.
    pub fn moebius_from(&self, x: usize) -> Vec<BigInt> {
        let mut mu = vec![BigInt::zero(); self.len()];
        let up: Vec<usize> = self.linear_extension().filter(|&y| self.leq(x, y)).collect();
        for (i, &y) in up.iter().enumerate() {
            if y == x {
                mu[y] = BigInt::one();
                continue;
            }
            let mut s = BigInt::zero();
            for &z in &up[..i] {
                if self.lt(z, y) {
                    s += &mu[z];
                }
            }
            mu[y] = -s;
        }
        mu
    }

    pub fn moebius(&self, x: usize, y: usize) -> Result<BigInt> {
        self.check_leq(x, y)?;
        Ok(self.moebius_from(x).swap_remove(y))
    }

    /// μ(P) = μ(0̂, 1̂).
    pub fn moebius_of_poset(&self) -> BigInt {
        self.moebius_from(self.bottom()).swap_remove(self.top())
    }

    /// χ = μ(P) + 1 for the face poset of a regular cell complex.
    pub fn euler_characteristic(&self) -> BigInt {
        self.moebius_of_poset() + 1
    }

    pub fn zaslavsky_invariants(&self) -> Zaslavsky {
        let mu = self.moebius_from(self.bottom());
        let rho = self.rank();
        let sign = |r: usize| if r.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
        let z: BigInt = (0..self.len()).map(|x| sign(self.rank_of(x)) * &mu[x]).sum();
        let z_b = sign(rho) * &mu[self.top()];
        let coatom_sum: BigInt = self.coatoms().iter().map(|&x| mu[x].clone()).sum();
        let z_t = if rho == 0 { BigInt::zero() } else { sign(rho - 1) * coatom_sum };
        let z_ub = &z - &z_b * 2;
        Zaslavsky { z, z_b, z_t, z_ub }
    }

    /// μ(x, y) = (-1)^{ρ(y) - ρ(x)} for all `x ≤ y`.
    pub fn is_eulerian(&self) -> bool {
        (0..self.len()).all(|x| {
            let mu = self.moebius_from(x);
            self.up_set(x).iter().all(|y| {
                let d = self.rank_of(y) - self.rank_of(x);
                let expected = if d.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
                mu[y] == expected
            })
        })
    }

    /// Number of chains 0̂ < x_1 < ... < x_k < 1̂ with ranks exactly `set`.
    fn chains_with_ranks(&self, set: &[usize]) -> BigInt {
        let mut counts = vec![BigInt::zero(); self.len()];
        counts[self.bottom()] = BigInt::one();
        let mut prev = vec![self.bottom()];
        for &r in set {
            let cur: Vec<usize> = self.layer(r).to_vec();
            for &y in &cur {
                let s: BigInt = prev.iter().filter(|&&x| self.lt(x, y)).map(|&x| counts[x].clone()).sum();
                counts[y] = s;
            }
            prev = cur;
        }
        prev.iter().map(|&x| counts[x].clone()).sum()
    }

    pub fn flag_vectors(&self) -> FlagVector {
        let n = self.rank().saturating_sub(1);
        let f = (0..1usize << n)
            .map(|mask| {
                let set: Vec<usize> = (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
                self.chains_with_ranks(&set)
            })
            .collect();
        FlagVector::from_f(n, f)
    }

    /// Ψ(P) by summing chain weights with a forward pass over the poset.
    pub fn ab_index_chain(&self) -> Result<AbPoly> {
        let rho = self.rank();
        if rho == 0 {
            return Err(Error::InvalidPoset("the ab-index needs rank at least 1".into()));
        }
        let powers: Vec<AbPoly> = (0..rho).map(AbPoly::a_minus_b_pow).collect();
        let b = AbPoly::b();
        let mut w: Vec<AbPoly> = vec![AbPoly::zero(); self.len()];
        let order: Vec<usize> = self.linear_extension().collect();
        for (i, &y) in order.iter().enumerate() {
            if y == self.bottom() {
                continue;
            }
            let mut acc = powers[self.rank_of(y) - 1].clone();
            for &x in &order[..i] {
                if x != self.bottom() && self.lt(x, y) && !w[x].is_zero() {
                    let gap = self.rank_of(y) - self.rank_of(x) - 1;
                    acc += &(&(&w[x] * &b) * &powers[gap]);
                }
            }
            w[y] = acc;
        }
        Ok(w.swap_remove(self.top()))
    }

    /// Ψ(P) by Stanley's recursion over the upper intervals [x, 1̂].
    pub fn ab_index_stanley(&self) -> Result<AbPoly> {
        let rho = self.rank();
        if rho == 0 {
            return Err(Error::InvalidPoset("the ab-index needs rank at least 1".into()));
        }
        let powers: Vec<AbPoly> = (0..rho).map(AbPoly::a_minus_b_pow).collect();
        let b = AbPoly::b();
        let top = self.top();
        let mut psi: Vec<AbPoly> = vec![AbPoly::zero(); self.len()];
        let order: Vec<usize> = self.linear_extension().collect();
        for (i, &x) in order.iter().enumerate().rev() {
            if x == top {
                continue;
            }
            let mut acc = powers[self.rank_of(top) - self.rank_of(x) - 1].clone();
            for &y in &order[i + 1..] {
                if y != top && self.lt(x, y) {
                    let gap = self.rank_of(y) - self.rank_of(x) - 1;
                    acc += &(&(&powers[gap] * &b) * &psi[y]);
                }
            }
            psi[x] = acc;
        }
        Ok(psi.swap_remove(self.bottom()))
    }

    /// Ψ(P) = Σ_S h_S u_S.
    pub fn ab_index_flag_h(&self) -> Result<AbPoly> {
        if self.rank() == 0 {
            return Err(Error::InvalidPoset("the ab-index needs rank at least 1".into()));
        }
        Ok(self.flag_vectors().ab_index())
    }

    /// Shorthand for [`GradedPoset::ab_index_chain`].
    pub fn ab_index(&self) -> Result<AbPoly> {
        self.ab_index_chain()
    }
}
