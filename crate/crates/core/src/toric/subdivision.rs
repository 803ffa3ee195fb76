use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::{frac, IntersectionPoset, ToricArrangement, ToricHyperplane, ToricSubspace};
use crate::error::{Error, Result};
use crate::linalg::{rat, Rat};
use crate::poset::GradedPoset;

/// The cell decomposition of T² cut out by a line arrangement.
#[derive(Clone, Debug)]
pub struct ToricSubdivision {
    /// Face poset T_t: 0̂, vertices, edges, regions, 1̂ at ranks 0 to 4.
    pub poset: GradedPoset,
    pub vertices: Vec<[Rat; 2]>,
    /// Endpoints and line of each edge.
    pub edges: Vec<(usize, usize, usize)>,
    /// Boundary walk of each region as a cyclic list of (vertex, edge).
    pub regions: Vec<Vec<(usize, usize)>>,
    /// Every edge has two distinct endpoints and every boundary walk is a
    /// simple cycle.
    pub regular: bool,
    /// For each element of T_t, its image in `intersection.poset.adjoin_bottom()`
    /// under the map sending a face to the smallest component containing it
    /// (with T_t's 1̂ sent to the new 0̂).
    pub z: Vec<usize>,
    pub intersection: IntersectionPoset,
}

struct Line {
    normal: [BigInt; 2],
    dir: [BigInt; 2],
    base: [Rat; 2],
    // w·dir = 1, so the parameter of x is frac(w·(x - base)).
    w: [BigInt; 2],
}

impl Line {
    fn new(h: &ToricHyperplane) -> Line {
        let a = [h.normal()[0].clone(), h.normal()[1].clone()];
        let e = a[0].extended_gcd(&a[1]);
        debug_assert!(e.gcd == BigInt::from(1));
        let (u1, u2) = (e.x, e.y);
        let base = [h.offset() * rat(u1.clone()), h.offset() * rat(u2.clone())];
        Line { dir: [-a[1].clone(), a[0].clone()], normal: a, base, w: [-u2, u1] }
    }

    fn param(&self, x: &[Rat; 2]) -> Rat {
        frac(&(rat(self.w[0].clone()) * (&x[0] - &self.base[0]) + rat(self.w[1].clone()) * (&x[1] - &self.base[1])))
    }
}

fn angle_cmp(u: &[BigInt; 2], v: &[BigInt; 2]) -> Ordering {
    let half = |p: &[BigInt; 2]| p[1].is_negative() || (p[1].is_zero() && p[0].is_negative());
    half(u).cmp(&half(v)).then_with(|| {
        let cross = &u[0] * &v[1] - &u[1] * &v[0];
        BigInt::zero().cmp(&cross)
    })
}

/// Builds the face poset of the subdivision of T² by exact geometry: vertices
/// are the pairwise intersection points, edges the arcs between consecutive
/// vertices along each closed line, regions the face-tracing orbits of the
/// rotation system.
pub fn toric_face_poset_2d(a: &ToricArrangement) -> Result<ToricSubdivision> {
    if a.n() != 2 {
        return Err(Error::Unsupported("the subdivision oracle needs n = 2".into()));
    }
    let intersection = IntersectionPoset::of(a)?;
    let hs = a.hyperplanes();
    let lines: Vec<Line> = hs.iter().map(Line::new).collect();

    // Pairwise intersections: x = M⁻¹(b + k) for k ∈ [0, |det|)².
    let mut vertices: Vec<[Rat; 2]> = Vec::new();
    for i in 0..hs.len() {
        for j in i + 1..hs.len() {
            let (p, q) = (&lines[i].normal, &lines[j].normal);
            let det = &p[0] * &q[1] - &p[1] * &q[0];
            if det.is_zero() {
                continue;
            }
            let range = det.abs().to_u64().ok_or_else(|| Error::TooLarge("determinant".into()))?;
            for k0 in 0..range {
                for k1 in 0..range {
                    let r0 = hs[i].offset() + rat(k0);
                    let r1 = hs[j].offset() + rat(k1);
                    let d = rat(det.clone());
                    let x = [
                        frac(&((rat(q[1].clone()) * &r0 - rat(p[1].clone()) * &r1) / &d)),
                        frac(&((rat(p[0].clone()) * &r1 - rat(q[0].clone()) * &r0) / &d)),
                    ];
                    if !vertices.contains(&x) {
                        vertices.push(x);
                    }
                }
            }
        }
    }
    vertices.sort();
    let nv = vertices.len();

    // Edges along each line, and darts: dart 2e runs along +dir, 2e+1 back.
    let mut edges = Vec::new();
    let mut dart_tail = Vec::new();
    let mut dart_dir: Vec<[BigInt; 2]> = Vec::new();
    for (li, (h, line)) in hs.iter().zip(&lines).enumerate() {
        let mut on: Vec<(Rat, usize)> = (0..nv)
            .filter(|&v| h.contains_point(&vertices[v]))
            .map(|v| (line.param(&vertices[v]), v))
            .collect();
        if on.is_empty() {
            return Err(Error::NotEssential(format!("line {} meets no other line", li + 1)));
        }
        on.sort();
        let neg = [-line.dir[0].clone(), -line.dir[1].clone()];
        for k in 0..on.len() {
            let (t, hd) = (on[k].1, on[(k + 1) % on.len()].1);
            edges.push((t, hd, li));
            dart_tail.extend([t, hd]);
            dart_dir.extend([line.dir.clone(), neg.clone()]);
        }
    }
    let ne = edges.len();

    // Rotation at each vertex: outgoing darts in counterclockwise order.
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); nv];
    for (d, &t) in dart_tail.iter().enumerate() {
        rotation[t].push(d);
    }
    for r in rotation.iter_mut() {
        r.sort_by(|&x, &y| angle_cmp(&dart_dir[x], &dart_dir[y]));
    }
    let mut succ = vec![0usize; 2 * ne];
    for r in &rotation {
        for (i, &d) in r.iter().enumerate() {
            succ[d] = r[(i + 1) % r.len()];
        }
    }

    let mut seen = vec![false; 2 * ne];
    let mut regions = Vec::new();
    for start in 0..2 * ne {
        if seen[start] {
            continue;
        }
        let mut walk = Vec::new();
        let mut d = start;
        while !seen[d] {
            seen[d] = true;
            walk.push((dart_tail[d], d / 2));
            d = succ[d ^ 1];
        }
        regions.push(walk);
    }
    let nf = regions.len();
    if nv + nf != ne {
        return Err(Error::Inconsistent(format!("V - E + F = {nv} - {ne} + {nf} is not 0")));
    }

    let regular = edges.iter().all(|&(t, h, _)| t != h)
        && regions.iter().all(|w| {
            let mut vs: Vec<usize> = w.iter().map(|&(v, _)| v).collect();
            vs.sort();
            vs.windows(2).all(|p| p[0] != p[1])
        });

    // Poset elements: 0̂, vertices, edges, regions, 1̂.
    let vid = |v: usize| 1 + v;
    let eid = |e: usize| 1 + nv + e;
    let fid = |f: usize| 1 + nv + ne + f;
    let top = 1 + nv + ne + nf;
    let mut ranks = vec![0usize];
    ranks.extend(core::iter::repeat_n(1, nv));
    ranks.extend(core::iter::repeat_n(2, ne));
    ranks.extend(core::iter::repeat_n(3, nf));
    ranks.push(4);
    let mut rels = Vec::new();
    for v in 0..nv {
        rels.push((0, vid(v)));
    }
    for (e, &(t, h, _)) in edges.iter().enumerate() {
        rels.push((vid(t), eid(e)));
        rels.push((vid(h), eid(e)));
    }
    for (f, walk) in regions.iter().enumerate() {
        for &(v, e) in walk {
            rels.push((vid(v), fid(f)));
            rels.push((eid(e), fid(f)));
        }
        rels.push((fid(f), top));
    }
    rels.sort();
    rels.dedup();
    let poset = GradedPoset::new(ranks, &rels)?;

    let p = &intersection.poset;
    let mut z = vec![p.top()];
    for x in &vertices {
        let idx = intersection.find(&ToricSubspace::point(x)).ok_or_else(|| {
            Error::Inconsistent("a vertex is missing from the intersection poset".into())
        })?;
        z.push(idx);
    }
    for &(_, _, li) in &edges {
        let idx = intersection
            .find(&hs[li].subspace())
            .ok_or_else(|| Error::Inconsistent("a line is missing from the intersection poset".into()))?;
        z.push(idx);
    }
    z.extend(core::iter::repeat_n(p.bottom(), nf));
    z.push(p.len());

    Ok(ToricSubdivision { poset, vertices, edges, regions, regular, z, intersection })
}
