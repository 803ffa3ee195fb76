#![allow(dead_code)]

use flagcd_core::arrangement::{AffineArrangement, AffineHyperplane};
use flagcd_core::graphs::SimpleGraph;
use flagcd_core::linalg::{rat, Rat};
use flagcd_core::ncpoly::{AbPoly, AbWord, Letter};
use flagcd_core::poset::GradedPoset;
use flagcd_core::toric::{ToricArrangement, ToricHyperplane};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(a: i64, b: i64) -> Rat {
    BigRational::new(a.into(), b.into())
}

pub fn affine(n: usize, hs: &[(&[i64], Rat)]) -> AffineArrangement {
    let hs = hs.iter().map(|(v, b)| AffineHyperplane::from_i64s(v, b.clone()).unwrap()).collect();
    AffineArrangement::new(n, hs).unwrap()
}

pub fn toric(hs: &[(&[i64], Rat)]) -> ToricArrangement {
    let n = hs[0].0.len();
    let hs = hs.iter().map(|(v, b)| ToricHyperplane::from_i64s(v, b.clone()).unwrap()).collect();
    ToricArrangement::new(n, hs).unwrap()
}

pub fn toric_one() -> ToricArrangement {
    toric(&[(&[2, -1], rat(0)), (&[1, -2], rat(0))])
}

pub fn toric_two() -> ToricArrangement {
    toric(&[(&[3, -1], rat(0)), (&[1, -2], rat(0)), (&[0, 1], q(1, 5))])
}

/// x_i = 0 and x_i = 1 for every coordinate.
pub fn unit_cube(n: usize) -> AffineArrangement {
    let mut hs = Vec::new();
    for i in 0..n {
        for b in [0, 1] {
            let mut v = vec![0i64; n];
            v[i] = 1;
            hs.push(AffineHyperplane::from_i64s(&v, rat(b)).unwrap());
        }
    }
    AffineArrangement::new(n, hs).unwrap()
}

pub fn coordinate(n: usize) -> AffineArrangement {
    let hs = (0..n)
        .map(|i| {
            let mut v = vec![0i64; n];
            v[i] = 1;
            AffineHyperplane::from_i64s(&v, rat(0)).unwrap()
        })
        .collect();
    AffineArrangement::new(n, hs).unwrap()
}

/// A graded poset of rank `rank` with one to three elements at each middle
/// rank and random covers between adjacent ranks.
pub fn random_poset(r: &mut impl Rng, rank: usize) -> GradedPoset {
    let mut ranks = vec![0usize];
    let mut layers: Vec<Vec<usize>> = vec![vec![0]];
    for k in 1..rank {
        let size = r.gen_range(1..=3);
        let layer: Vec<usize> = (0..size).map(|i| ranks.len() + i).collect();
        ranks.extend(std::iter::repeat_n(k, size));
        layers.push(layer);
    }
    layers.push(vec![ranks.len()]);
    ranks.push(rank);
    let mut rels = Vec::new();
    for k in 1..layers.len() {
        let (below, here) = (&layers[k - 1], &layers[k]);
        let mut covered = vec![false; below.len()];
        for &y in here {
            let mut any = false;
            for (i, &x) in below.iter().enumerate() {
                if r.gen_bool(0.6) {
                    rels.push((x, y));
                    covered[i] = true;
                    any = true;
                }
            }
            if !any {
                let i = r.gen_range(0..below.len());
                rels.push((below[i], y));
                covered[i] = true;
            }
        }
        for (i, &x) in below.iter().enumerate() {
            if !covered[i] {
                rels.push((x, *here.choose(r).unwrap()));
            }
        }
    }
    GradedPoset::new(ranks, &rels).unwrap()
}

fn random_offset(r: &mut impl Rng) -> Rat {
    [q(0, 1), q(1, 1), q(-1, 1), q(1, 2), q(2, 1)].choose(r).unwrap().clone()
}

/// Essential arrangement in R^n with `m` hyperplanes, small integer normals
/// and offsets in {0, ±1, 1/2, 2}; `central` forces every offset to 0.
pub fn random_affine(r: &mut impl Rng, n: usize, m: usize, central: bool) -> AffineArrangement {
    loop {
        let mut hs: Vec<AffineHyperplane> = Vec::new();
        while hs.len() < m {
            let v: Vec<i64> = (0..n).map(|_| r.gen_range(-2..=2)).collect();
            if v.iter().all(|&x| x == 0) {
                continue;
            }
            let b = if central { rat(0) } else { random_offset(r) };
            hs.push(AffineHyperplane::from_i64s(&v, b).unwrap());
        }
        if let Ok(a) = AffineArrangement::new(n, hs) {
            if a.is_essential() && (central || !a.is_central()) {
                return a;
            }
        }
    }
}

/// Essential line arrangement on T² with normals in [-3, 3]².
pub fn random_toric_2d(r: &mut impl Rng, m: usize) -> ToricArrangement {
    loop {
        let mut hs = Vec::new();
        while hs.len() < m {
            let v: Vec<i64> = (0..2).map(|_| r.gen_range(-3..=3)).collect();
            if v.iter().all(|&x| x == 0) {
                continue;
            }
            let b = [q(0, 1), q(1, 2), q(1, 3), q(1, 5)].choose(r).unwrap().clone();
            let h = ToricHyperplane::from_i64s(&v, b).unwrap();
            if !hs.contains(&h) {
                hs.push(h);
            }
        }
        let a = ToricArrangement::new(2, hs).unwrap();
        if a.is_essential() {
            return a;
        }
    }
}

pub fn random_connected_graph(r: &mut impl Rng, n: usize) -> SimpleGraph {
    loop {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if r.gen_bool(0.5) {
                    edges.push((i, j));
                }
            }
        }
        let g = SimpleGraph::new(n, &edges).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}

pub fn random_tree(r: &mut impl Rng, n: usize) -> SimpleGraph {
    let edges: Vec<_> = (1..n).map(|i| (r.gen_range(0..i), i)).collect();
    SimpleGraph::new(n, &edges).unwrap()
}

pub fn all_words(n: usize) -> impl Iterator<Item = AbWord> {
    (0u64..1 << n).map(move |m| {
        AbWord::from_letters((0..n).map(|i| if m >> i & 1 == 1 { Letter::B } else { Letter::A }))
    })
}

pub fn random_word(r: &mut impl Rng, n: usize) -> AbWord {
    AbWord::from_letters((0..n).map(|_| if r.gen_bool(0.5) { Letter::B } else { Letter::A }))
}

/// Random homogeneous ab-polynomial of degree `n` with a few terms.
pub fn random_poly(r: &mut impl Rng, n: usize) -> AbPoly {
    let mut p = AbPoly::zero();
    for _ in 0..r.gen_range(1..=4) {
        p += &AbPoly::term(BigInt::from(r.gen_range(-5..=5)), random_word(r, n));
    }
    p
}

/// Every chain from 0̂ to 1̂ (each listed with both ends).
pub fn all_chains(p: &GradedPoset) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut stack = vec![vec![p.bottom()]];
    while let Some(c) = stack.pop() {
        let last = *c.last().unwrap();
        if last == p.top() {
            out.push(c);
            continue;
        }
        for y in 0..p.len() {
            if p.lt(last, y) {
                let mut d = c.clone();
                d.push(y);
                stack.push(d);
            }
        }
    }
    out.sort();
    out
}
