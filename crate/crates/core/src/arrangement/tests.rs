use alloc::vec::Vec;

use num_bigint::BigInt;

use super::*;
use crate::intpoly::IntPoly;
use crate::linalg::rat;
use crate::ncpoly::{ab_to_cd, AbPoly, CdPoly};

fn arr(n: usize, hs: &[(&[i64], i64)]) -> AffineArrangement {
    let hs = hs.iter().map(|(v, b)| AffineHyperplane::from_i64s(v, rat(*b)).unwrap()).collect();
    AffineArrangement::new(n, hs).unwrap()
}

fn cube(n: usize) -> AffineArrangement {
    let mut hs = Vec::new();
    for i in 0..n {
        for b in [0, 1] {
            let mut v = alloc::vec![0i64; n];
            v[i] = 1;
            hs.push(AffineHyperplane::from_i64s(&v, rat(b)).unwrap());
        }
    }
    AffineArrangement::new(n, hs).unwrap()
}

#[test]
fn crossing_lines() {
    let a = arr(2, &[(&[1, 0], 0), (&[0, 1], 0)]);
    assert_eq!(a.characteristic_polynomial(), IntPoly::from_i64s(&[1, -2, 1]));
    let r = region_counts(&a).unwrap();
    assert_eq!(r.regions, BigInt::from(4));
    let (t, fs, _) = face_poset_central(&a).unwrap();
    assert_eq!(fs.len(), 9);
    let psi = psi_central(&a).unwrap();
    assert_eq!(psi, "1*cc + 2*d".parse::<CdPoly>().unwrap());
    assert_eq!(ab_to_cd(&t.poset.ab_index_chain().unwrap()).unwrap(), psi);
}

#[test]
fn parallel_lines_are_not_essential() {
    let a = arr(2, &[(&[1, 0], 0), (&[1, 0], 1)]);
    assert!(matches!(region_counts(&a), Err(Error::NotEssential(_))));
}

#[test]
fn unit_cube_arrangement() {
    let a = cube(3);
    let r = region_counts(&a).unwrap();
    assert_eq!((r.regions, r.bounded, r.unbounded), (27.into(), 1.into(), 26.into()));
    let fs = faces(&a).unwrap();
    assert_eq!(fs.iter().filter(|f| f.is_region()).count(), 27);
    assert_eq!(fs.iter().filter(|f| f.is_region() && f.bounded).count(), 1);

    let u = unbounded_structures(&a).unwrap();
    let expected: AbPoly = "1*aa + 5*ba + 11*ab + 7*bb".parse().unwrap();
    assert_eq!(u.l_ub.ab_index().unwrap(), expected);
    let psi = psi_unbounded(&a).unwrap();
    assert_eq!(psi.to_string(), "1*ccc + 22*dc + 24*cd");
    let t_ub = u.t_ub.poset.ab_index_chain().unwrap();
    assert_eq!(ab_to_cd(&t_ub).unwrap(), psi);
    let q = u.q.poset.ab_index_chain().unwrap();
    assert_eq!(t_ub.star() * AbPoly::a_minus_b_pow(1), q);
}

#[test]
fn octahedron_lattice() {
    let a = cube(3);
    let l = a.intersection_lattice().unwrap();
    assert_eq!(l.poset.len(), 1 + 6 + 12 + 8 + 1);
    assert!(l.poset.dual().is_eulerian());
}

#[test]
fn square_bounded_region() {
    let a = cube(2);
    let chi = a.characteristic_polynomial();
    assert_eq!(chi.eval(&BigInt::from(1)), BigInt::from(1));
    assert_eq!(chi.eval(&BigInt::from(-1)), BigInt::from(9));
}

#[test]
fn central_fibers() {
    let a = arr(2, &[(&[1, 0], 0), (&[0, 1], 0)]);
    let l = a.intersection_lattice().unwrap();
    let p = l.poset.adjoin_bottom();
    let zero = p.len() - 1;
    assert_eq!(fiber_cardinality_central(&a, &[zero, l.poset.top()]).unwrap(), BigInt::from(1));
    assert_eq!(
        fiber_cardinality_central(&a, &[zero, l.poset.bottom(), l.poset.top()]).unwrap(),
        BigInt::from(4)
    );
}
