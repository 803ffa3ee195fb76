//! Naive reference computations used to cross-check the formulas.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::arrangement::{face_poset_central, AffineArrangement};
use crate::error::{Error, Result};
use crate::ncpoly::AbPoly;
use crate::poset::GradedPoset;
use crate::toric::ToricArrangement;

const MAX_ELEMENTS: usize = 5000;
const MAX_Q: u64 = 60;
const MAX_HYPERPLANES: usize = 10;

fn check_size(p: &GradedPoset) -> Result<()> {
    if p.len() > MAX_ELEMENTS {
        return Err(Error::TooLarge(format!("poset with {} elements", p.len())));
    }
    Ok(())
}

/// Ψ(P) as the sum of chain weights over every chain 0̂ < x_1 < ... < x_k < 1̂,
/// each chain listed explicitly.
pub fn ab_index_by_chains(p: &GradedPoset) -> Result<AbPoly> {
    check_size(p)?;
    let rho = p.rank();
    if rho == 0 {
        return Err(Error::InvalidPoset("the ab-index needs rank at least 1".into()));
    }
    let mut chains: Vec<Vec<usize>> = Vec::new();
    let mut stack = vec![vec![p.bottom()]];
    while let Some(c) = stack.pop() {
        let last = *c.last().unwrap();
        for y in 0..p.len() {
            if y != p.top() && p.lt(last, y) {
                let mut d = c.clone();
                d.push(y);
                stack.push(d);
            }
        }
        chains.push(c);
    }
    let mut out = AbPoly::zero();
    for c in chains {
        let ranks: Vec<usize> = c[1..].iter().map(|&x| p.rank_of(x)).collect();
        let mut w = AbPoly::one();
        for i in 1..rho {
            let factor = if ranks.contains(&i) { AbPoly::b() } else { AbPoly::a() - AbPoly::b() };
            w = w * factor;
        }
        out += &w;
    }
    Ok(out)
}

/// Number of chains y_0 < ... < y_k of `source` with `map[y_i] = chain[i]`.
pub fn z_fiber_count(source: &GradedPoset, map: &[usize], chain: &[usize]) -> Result<BigInt> {
    check_size(source)?;
    if map.len() != source.len() {
        return Err(Error::InvalidChain("the map must have one entry per element".into()));
    }
    let mut count = BigInt::zero();
    let mut stack: Vec<(usize, usize)> = (0..source.len()).filter(|&y| map[y] == chain[0]).map(|y| (y, 1)).collect();
    while let Some((y, depth)) = stack.pop() {
        if depth == chain.len() {
            count += 1;
            continue;
        }
        for z in 0..source.len() {
            if map[z] == chain[depth] && source.lt(y, z) {
                stack.push((z, depth + 1));
            }
        }
    }
    Ok(count)
}

/// Points of one subset intersection in the grid census.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetCensus {
    pub hyperplanes: Vec<usize>,
    pub points: u64,
    pub clusters: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridCensus {
    pub q: u64,
    /// Grid points on no hyperplane.
    pub off: u64,
    /// Every nonempty subset of hyperplanes whose common intersection
    /// contains a grid point.
    pub subsets: Vec<SubsetCensus>,
}

/// Enumerates `(1/q Z)^n / Z^n`. Points on all hyperplanes of a subset are
/// grouped into clusters joined by grid steps `w/q`, `|w|_∞ ≤ q`, along which
/// every hyperplane of the subset stays constant.
pub fn grid_census(a: &ToricArrangement, q: u64) -> Result<GridCensus> {
    let n = a.n();
    let m = a.len();
    if q == 0 || q > MAX_Q || m > MAX_HYPERPLANES {
        return Err(Error::TooLarge(format!("grid census needs 1 ≤ q ≤ {MAX_Q} and at most {MAX_HYPERPLANES} hyperplanes")));
    }
    let side = 2 * q as usize + 1;
    if side.checked_pow(n as u32).is_none_or(|s| s > 250_000) {
        return Err(Error::TooLarge(format!("grid census in dimension {n} at q = {q}")));
    }
    let qi = q as i64;
    let mut eqs: Vec<(Vec<i64>, i64)> = Vec::new();
    for h in a.hyperplanes() {
        let qb = h.offset() * crate::linalg::rat(BigInt::from(q));
        if !qb.is_integer() {
            return Err(Error::GridNotMultiple { q: format!("{q}"), n: format!("{}", h.offset().denom()) });
        }
        let coeffs = h.normal().iter().map(|c| c.mod_floor(&BigInt::from(q)).to_i64().unwrap()).collect();
        eqs.push((coeffs, qb.to_integer().mod_floor(&BigInt::from(q)).to_i64().unwrap()));
    }
    let on_mask = |k: &[i64]| -> u32 {
        let mut mask = 0;
        for (i, (c, b)) in eqs.iter().enumerate() {
            if (c.iter().zip(k).map(|(x, y)| x * y).sum::<i64>() - b).rem_euclid(qi) == 0 {
                mask |= 1 << i;
            }
        }
        mask
    };
    let points = grid(n, 0, qi);
    let masks: Vec<u32> = points.iter().map(|k| on_mask(k)).collect();
    let off = masks.iter().filter(|&&m| m == 0).count() as u64;

    // Steps with the hyperplanes they keep constant.
    let raw: Vec<Vec<i64>> = a.hyperplanes().iter().map(|h| h.normal().iter().map(|c| c.to_i64().unwrap()).collect()).collect();
    let steps: Vec<(Vec<i64>, u32)> = grid(n, -qi, qi + 1)
        .into_iter()
        .filter(|w| w.iter().any(|&x| x != 0))
        .map(|w| {
            let mut keep = 0;
            for (i, r) in raw.iter().enumerate() {
                if r.iter().zip(&w).map(|(x, y)| x * y).sum::<i64>() == 0 {
                    keep |= 1 << i;
                }
            }
            (w, keep)
        })
        .collect();

    let index = |k: &[i64]| k.iter().rev().fold(0usize, |acc, &x| acc * q as usize + x.rem_euclid(qi) as usize);
    let mut subsets = Vec::new();
    for s in 1u32..1 << m {
        let members: Vec<usize> = (0..points.len()).filter(|&i| masks[i] & s == s).collect();
        if members.is_empty() {
            continue;
        }
        let mut parent: Vec<usize> = (0..points.len()).collect();
        fn root(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &i in &members {
            for (w, keep) in &steps {
                if keep & s != s {
                    continue;
                }
                let k: Vec<i64> = points[i].iter().zip(w).map(|(x, y)| x + y).collect();
                let j = index(&k);
                let (a, b) = (root(&mut parent, i), root(&mut parent, j));
                parent[a.max(b)] = a.min(b);
            }
        }
        let clusters = members.iter().filter(|&&i| root(&mut parent, i) == i).count() as u64;
        let hyperplanes = (0..m).filter(|&i| s >> i & 1 == 1).collect();
        subsets.push(SubsetCensus { hyperplanes, points: members.len() as u64, clusters });
    }
    Ok(GridCensus { q, off, subsets })
}

// All integer vectors in [lo, hi)^n, first coordinate fastest.
fn grid(n: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut k = vec![lo; n];
    loop {
        out.push(k.clone());
        let mut i = 0;
        while i < n {
            k[i] += 1;
            if k[i] < hi {
                break;
            }
            k[i] = lo;
            i += 1;
        }
        if i == n {
            return out;
        }
    }
}

/// Face poset of the projective space obtained from the sphere of a central
/// arrangement by identifying antipodal faces.
pub fn projective_face_poset(a: &AffineArrangement) -> Result<GradedPoset> {
    let (t, faces, _) = face_poset_central(a)?;
    let origin = t.poset.bottom();
    let nf = faces.len();
    // Class representative: the face itself or its negation, whichever is
    // listed first.
    let neg = |i: usize| -> usize {
        let s: Vec<i8> = faces[i].signs.iter().map(|&x| -x).collect();
        faces.iter().position(|f| f.signs == s).expect("central face sets are symmetric")
    };
    let mut class = vec![usize::MAX; nf];
    let mut reps = Vec::new();
    for i in 0..nf {
        if i == origin || class[i] != usize::MAX {
            continue;
        }
        class[i] = reps.len();
        class[neg(i)] = reps.len();
        reps.push(i);
    }
    let k = reps.len();
    let (bottom, top) = (k, k + 1);
    let mut ranks: Vec<usize> = reps.iter().map(|&i| t.poset.rank_of(i)).collect();
    ranks.push(0);
    ranks.push(t.poset.rank());
    let mut rels = Vec::new();
    for x in 0..k {
        rels.push((bottom, x));
        rels.push((x, top));
    }
    for i in 0..nf {
        for j in 0..nf {
            if i != origin && j != origin && t.poset.lt(i, j) {
                rels.push((class[i], class[j]));
            }
        }
    }
    rels.sort_unstable();
    rels.dedup();
    GradedPoset::new(ranks, &rels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;
    use crate::toric::ToricHyperplane;

    #[test]
    fn chains_on_small_posets() {
        assert_eq!(ab_index_by_chains(&GradedPoset::boolean(2)).unwrap(), "1*a + 1*b".parse().unwrap());
        let b = GradedPoset::butterfly(3);
        assert_eq!(ab_index_by_chains(&b).unwrap(), b.ab_index_stanley().unwrap());
    }

    #[test]
    fn census_of_two_lines() {
        let hs = [[2, -1], [1, -2]]
            .iter()
            .map(|v| ToricHyperplane::from_i64s(v, rat(0)).unwrap())
            .collect();
        let a = ToricArrangement::new(2, hs).unwrap();
        let c = grid_census(&a, 3).unwrap();
        assert_eq!(c.off, 6);
        let both = c.subsets.iter().find(|s| s.hyperplanes == [0, 1]).unwrap();
        assert_eq!((both.points, both.clusters), (3, 3));
        let one = c.subsets.iter().find(|s| s.hyperplanes == [0]).unwrap();
        assert_eq!((one.points, one.clusters), (3, 1));
    }
}
