mod common;

use common::*;
use flagcd_core::arrangement::IntersectionLattice;
use flagcd_core::graphs::{chromatic_polynomial, graphical_arrangement, SimpleGraph};
use flagcd_core::toric::IntersectionPoset;

fn same_intersections(g: &SimpleGraph) {
    let (euclid, toric) = graphical_arrangement(g);
    let l = IntersectionLattice::build(&euclid);
    let p = IntersectionPoset::build(&toric).unwrap();
    // P carries ∅ as an extra top; the diagonal below it is the top of L.
    let coatoms = p.poset.coatoms();
    assert_eq!(coatoms.len(), 1);
    let (below, _) = p.poset.interval(p.poset.bottom(), coatoms[0]).unwrap();
    assert_eq!(l.poset.len() + 1, p.poset.len());
    assert_eq!(l.poset.flag_vectors(), below.flag_vectors());
    assert_eq!(l.poset.ab_index().unwrap(), below.ab_index().unwrap());
    assert_eq!(l.characteristic_polynomial(), chromatic_polynomial(g));
    assert_eq!(p.characteristic_polynomial(), chromatic_polynomial(g));
}

#[test]
fn toric_graphical_poset_is_the_bond_lattice() {
    same_intersections(&SimpleGraph::complete(4));
    same_intersections(&SimpleGraph::cycle(5));
    let mut r = rng(11);
    for n in 2..=5 {
        same_intersections(&random_connected_graph(&mut r, n));
        same_intersections(&random_tree(&mut r, n));
    }
}

#[test]
fn small_chromatic_polynomials() {
    assert_eq!(chromatic_polynomial(&SimpleGraph::complete(3)).to_string(), "t^3 - 3*t^2 + 2*t");
    assert_eq!(chromatic_polynomial(&SimpleGraph::cycle(4)).to_string(), "t^4 - 4*t^3 + 6*t^2 - 3*t");
    assert_eq!(chromatic_polynomial(&SimpleGraph::path(3)).to_string(), "t^3 - 2*t^2 + t");
}
