use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::GradedPoset;
use crate::error::{Error, Result};
use crate::ncpoly::{ab_to_cd, cd_expand, coproduct_k, AbPoly, AbWord, CdPoly, CdWord, TensorSum};

/// Ψ(P) = c1·(a-b)^{n+1} + c2·c^{n+1} + Φ for the face poset of a regular
/// subdivision of a compact `n`-manifold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManifoldDecomposition {
    pub c1: BigRational,
    pub c2: BigRational,
    pub phi: CdPoly,
}

pub fn manifold_decomposition(p: &GradedPoset, euler_char: &BigInt) -> Result<ManifoldDecomposition> {
    let rho = p.rank();
    if rho < 2 {
        return Err(Error::InvalidPoset("a face poset of a manifold has rank at least 2".into()));
    }
    let m = rho - 1;
    let psi = p.ab_index_chain()?;
    let c_m = cd_expand(&CdPoly::c_pow(m));
    let two = BigInt::from(2);
    let two_phi = &(&psi.scale(&two) - &AbPoly::a_minus_b_pow(m).scale(&(&two - euler_char)))
        - &c_m.scale(euler_char);
    let phi_ab = two_phi.halve("2Ψ - (2-χ)(a-b)^{n+1} - χc^{n+1}")?;
    let phi = ab_to_cd(&phi_ab)?;
    if !phi.coefficient(CdWord::c_power(m)).is_zero() {
        return Err(Error::Inconsistent(alloc::format!(
            "Φ contains the term c^{m}; the Euler characteristic {euler_char} does not match μ(P) + 1"
        )));
    }
    let half = |k: BigInt| BigRational::new(k, two.clone());
    Ok(ManifoldDecomposition { c1: half(&two - euler_char), c2: half(euler_char.clone()), phi })
}

/// (c^{n+1} + (a-b)^{n+1} + Φ)/2 where `psi_sphere = c^{n+1} + Φ`.
pub fn projective_quotient_psi(psi_sphere: &CdPoly, n: usize) -> Result<AbPoly> {
    let c_m = CdPoly::c_pow(n + 1);
    let phi = psi_sphere - &c_m;
    if let Some(d) = phi.homogeneous_degree()? {
        if d != n + 1 {
            return Err(Error::Inconsistent(alloc::format!(
                "cd-index has degree {d}, expected {}",
                n + 1
            )));
        }
    }
    if !phi.is_even() {
        return Err(Error::OddCoefficient { what: "Φ of a centrally symmetric sphere".into() });
    }
    let sum = &(&cd_expand(&c_m) + &AbPoly::a_minus_b_pow(n + 1)) + &cd_expand(&phi);
    sum.halve("c^{n+1} + (a-b)^{n+1} + Φ")
}

/// Checks Σ_chains M(Ψ([x_0,x_1]), ..., Ψ([x_{k-1},x_k])) against
/// Σ M(w_(1), ..., w_(k)) over Δ^{k-1}Ψ(P), for chains 0̂ = x_0 < ... < x_k = 1̂.
/// `m` is given on monomials and extended multilinearly.
pub fn coalgebra_chain_identity_check<M>(p: &GradedPoset, k: usize, m: M) -> Result<bool>
where
    M: Fn(&[AbWord]) -> AbPoly,
{
    if k == 0 {
        return Err(Error::InvalidChain("k must be positive".into()));
    }
    let mut cache: BTreeMap<(usize, usize), AbPoly> = BTreeMap::new();
    let mut lhs = AbPoly::zero();
    let mut chain = alloc::vec![p.bottom()];
    walk(p, k, &m, &mut chain, &mut cache, &mut lhs)?;
    let rhs = coproduct_k(&p.ab_index_chain()?, k - 1).evaluate(&m);
    Ok(lhs == rhs)
}

fn walk<M: Fn(&[AbWord]) -> AbPoly>(
    p: &GradedPoset,
    k: usize,
    m: &M,
    chain: &mut Vec<usize>,
    cache: &mut BTreeMap<(usize, usize), AbPoly>,
    acc: &mut AbPoly,
) -> Result<()> {
    let last = *chain.last().unwrap();
    if chain.len() == k {
        if last == p.top() || !p.lt(last, p.top()) {
            return Ok(());
        }
        chain.push(p.top());
        let mut factors = Vec::with_capacity(k);
        for pair in chain.windows(2) {
            let key = (pair[0], pair[1]);
            if let alloc::collections::btree_map::Entry::Vacant(e) = cache.entry(key) {
                let psi = p.interval(pair[0], pair[1])?.0.ab_index_chain()?;
                e.insert(psi);
            }
            factors.push(cache[&key].clone());
        }
        *acc += &TensorSum::from_factors(&factors).evaluate(m);
        chain.pop();
        return Ok(());
    }
    let next: Vec<usize> = p.up_set(last).iter().filter(|&y| y != last && y != p.top()).collect();
    for y in next {
        chain.push(y);
        walk(p, k, m, chain, cache, acc)?;
        chain.pop();
    }
    Ok(())
}
