use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::flats::{Flat, IntersectionLattice};
use super::AffineArrangement;
use crate::error::{Error, Result};
use crate::linalg::{feasible, rank, rat, Constraint, Rel};
use crate::poset::GradedPoset;

const MAX_DIM: usize = 4;
const MAX_HYPERPLANES: usize = 12;

/// A nonempty face: the relatively open cell with a given sign vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    /// Sign of `normal·x - offset` on the face, in {-1, 0, 1}.
    pub signs: Vec<i8>,
    pub dim: usize,
    pub bounded: bool,
    pub hull: Flat,
}

impl Face {
    /// `self` lies in the closure of `other`.
    pub fn conforms_to(&self, other: &Face) -> bool {
        self.signs.iter().zip(&other.signs).all(|(&s, &t)| s == 0 || s == t)
    }

    pub fn is_region(&self) -> bool {
        self.signs.iter().all(|&s| s != 0)
    }
}

fn constraint(a: &AffineArrangement, i: usize, s: i8) -> Constraint {
    let h = &a.hyperplanes()[i];
    match s {
        0 => Constraint::new(h.normal_rat(), Rel::Eq, h.offset.clone()),
        1 => Constraint::new(h.normal_rat(), Rel::Gt, h.offset.clone()),
        _ => Constraint::lt(h.normal_rat(), h.offset.clone()),
    }
}

/// All nonempty faces, found by sign-vector enumeration with exact
/// feasibility tests. Sign vectors are listed in lexicographic order with
/// `0 < + < -`.
pub fn faces(a: &AffineArrangement) -> Result<Vec<Face>> {
    if a.n() > MAX_DIM || a.len() > MAX_HYPERPLANES {
        return Err(Error::TooLarge(format!(
            "face enumeration supports n ≤ {MAX_DIM} and at most {MAX_HYPERPLANES} hyperplanes"
        )));
    }
    let mut out = Vec::new();
    let mut signs = Vec::new();
    let mut sys = Vec::new();
    enumerate(a, &mut signs, &mut sys, &mut out);
    Ok(out)
}

fn enumerate(a: &AffineArrangement, signs: &mut Vec<i8>, sys: &mut Vec<Constraint>, out: &mut Vec<Face>) {
    let n = a.n();
    if signs.len() == a.len() {
        let zero: Vec<_> = (0..a.len()).filter(|&i| signs[i] == 0).collect();
        let normals: Vec<_> = zero.iter().map(|&i| a.hyperplanes()[i].normal_rat()).collect();
        let dim = n - rank(&normals);
        let hs: Vec<_> = zero.iter().map(|&i| a.hyperplanes()[i].clone()).collect();
        let hull = Flat::from_hyperplanes(n, &hs).expect("a nonempty face lies in its hull");
        out.push(Face { signs: signs.clone(), dim, bounded: !has_recession(a, signs), hull });
        return;
    }
    let i = signs.len();
    for s in [0i8, 1, -1] {
        sys.push(constraint(a, i, s));
        if feasible(n, sys) {
            signs.push(s);
            enumerate(a, signs, sys, out);
            signs.pop();
        }
        sys.pop();
    }
}

// The face is unbounded iff its recession cone has a nonzero vector.
fn has_recession(a: &AffineArrangement, signs: &[i8]) -> bool {
    let n = a.n();
    let mut cone = Vec::new();
    for (h, &s) in a.hyperplanes().iter().zip(signs) {
        let rel = if s == 0 { Rel::Eq } else { Rel::Ge };
        let coeffs = h.normal_rat().into_iter().map(|c| if s < 0 { -c } else { c }).collect();
        cone.push(Constraint::new(coeffs, rel, rat(0)));
    }
    (0..n).any(|k| {
        [1i64, -1].iter().any(|&dir| {
            let mut e = vec![rat(0); n];
            e[k] = rat(dir);
            let mut sys = cone.clone();
            sys.push(Constraint::new(e, Rel::Gt, rat(0)));
            feasible(n, &sys)
        })
    })
}

/// A face poset together with the zero map of its dual into L ∪ {0̂}.
#[derive(Clone, Debug)]
pub struct FacePoset {
    pub poset: GradedPoset,
    /// Face index of each element; `None` for adjoined elements.
    pub faces: Vec<Option<usize>>,
    /// Image of each element under the zero map, as an index into
    /// `lattice.poset.adjoin_bottom()` (whose new 0̂ has index
    /// `lattice.poset.len()`).
    pub z: Vec<usize>,
}

fn hull_index(lattice: &IntersectionLattice, f: &Face) -> usize {
    lattice.find(Some(&f.hull)).expect("every face hull is an intersection flat")
}

/// The face lattice T of a central essential arrangement: the origin as 0̂,
/// a face of dimension `d` at rank `d`, and R^n as 1̂ at rank `n + 1`.
pub fn face_poset_central(a: &AffineArrangement) -> Result<(FacePoset, Vec<Face>, IntersectionLattice)> {
    if !a.is_central() {
        return Err(Error::NotCentral);
    }
    let lattice = IntersectionLattice::of(a)?;
    let fs = faces(a)?;
    let n = a.n();
    let top = fs.len();
    let mut ranks: Vec<usize> = fs.iter().map(|f| f.dim).collect();
    ranks.push(n + 1);
    let mut rels = Vec::new();
    for (i, f) in fs.iter().enumerate() {
        for (j, g) in fs.iter().enumerate() {
            if i != j && f.conforms_to(g) {
                rels.push((i, j));
            }
        }
        rels.push((i, top));
    }
    let poset = GradedPoset::new(ranks, &rels)?;
    let mut faces_idx: Vec<Option<usize>> = (0..top).map(Some).collect();
    faces_idx.push(None);
    let mut z: Vec<usize> = fs.iter().map(|f| hull_index(&lattice, f)).collect();
    z.push(lattice.poset.len());
    Ok((FacePoset { poset, faces: faces_idx, z }, fs, lattice))
}

/// Posets attached to the unbounded faces of a non-central arrangement.
#[derive(Clone, Debug)]
pub struct UnboundedStructures {
    pub lattice: IntersectionLattice,
    /// L with its coatoms (the points) removed.
    pub l_ub: GradedPoset,
    /// Unbounded faces with 0̂ and 1̂, a face of dimension `d` at rank `d`.
    pub t_ub: FacePoset,
    /// The lower ideal of unbounded faces in T* plus a new 1̂, ranked as in T*.
    pub q: FacePoset,
    pub faces: Vec<Face>,
}

pub fn unbounded_structures(a: &AffineArrangement) -> Result<UnboundedStructures> {
    let lattice = IntersectionLattice::of(a)?;
    if !lattice.has_empty_top() {
        return Err(Error::Central);
    }
    let n = a.n();
    let ranks_sel: Vec<usize> = (1..n).collect();
    let (l_ub, _) = lattice.poset.rank_selection(&ranks_sel)?;
    let fs = faces(a)?;
    let ub: Vec<usize> = (0..fs.len()).filter(|&i| !fs[i].bounded).collect();
    let k = ub.len();
    let aug_bottom = lattice.poset.len();
    let empty_idx = lattice.poset.top();

    // T_ub: elements 0..k are the unbounded faces, then 0̂, then 1̂.
    let mut ranks: Vec<usize> = ub.iter().map(|&i| fs[i].dim).collect();
    ranks.push(0);
    ranks.push(n + 1);
    let mut rels = Vec::new();
    for (x, &i) in ub.iter().enumerate() {
        for (y, &j) in ub.iter().enumerate() {
            if x != y && fs[i].conforms_to(&fs[j]) {
                rels.push((x, y));
            }
        }
        rels.push((k, x));
        rels.push((x, k + 1));
    }
    let t_ub_poset = GradedPoset::new(ranks, &rels)?;
    let mut t_faces: Vec<Option<usize>> = ub.iter().map(|&i| Some(i)).collect();
    t_faces.extend([None, None]);
    let mut t_z: Vec<usize> = ub.iter().map(|&i| hull_index(&lattice, &fs[i])).collect();
    t_z.extend([empty_idx, aug_bottom]);
    let t_ub = FacePoset { poset: t_ub_poset, faces: t_faces.clone(), z: t_z };

    // Q: same elements, order reversed; T's 1̂ becomes 0̂ and the new 1̂ sits
    // at rank n + 2.
    let mut q_ranks: Vec<usize> = ub.iter().map(|&i| n + 1 - fs[i].dim).collect();
    q_ranks.push(n + 2);
    q_ranks.push(0);
    let q_rels: Vec<(usize, usize)> = rels.iter().map(|&(x, y)| (y, x)).collect();
    let q_poset = GradedPoset::with_rank_function(q_ranks, &q_rels)?;
    let mut q_z: Vec<usize> = ub.iter().map(|&i| hull_index(&lattice, &fs[i])).collect();
    q_z.extend([empty_idx, aug_bottom]);
    let q = FacePoset { poset: q_poset, faces: t_faces, z: q_z };

    Ok(UnboundedStructures { lattice, l_ub, t_ub, q, faces: fs })
}
