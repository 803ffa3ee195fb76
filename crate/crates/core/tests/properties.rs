mod common;

use common::*;
use flagcd_core::arrangement::{faces, face_poset_central, psi_central};
use flagcd_core::graphs::{chromatic_polynomial, SimpleGraph};
use flagcd_core::lattice::{determinant, mat_mul, smith};
use flagcd_core::ncpoly::{
    ab_to_cd, beta, cd_expand, coproduct, eta, kappa, lambda_t, lambda_ub, omega, AbPoly, CdLetter, CdPoly,
    CdWord,
};
use flagcd_core::oracle::ab_index_by_chains;
use flagcd_core::toric::{chi_by_lattice_points, n_of_arrangement};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::Rng;

// Reads c or d off successive bits until the degree is used up.
fn cd_word(degree: usize, bits: u32) -> CdWord {
    let mut letters = Vec::new();
    let (mut left, mut i) = (degree, 0);
    while left > 0 {
        if left >= 2 && bits >> i & 1 == 1 {
            letters.push(CdLetter::D);
            left -= 2;
        } else {
            letters.push(CdLetter::C);
            left -= 1;
        }
        i += 1;
    }
    CdWord::from_letters(letters)
}

fn cd_poly() -> impl Strategy<Value = CdPoly> {
    (0usize..8, prop::collection::vec((any::<u32>(), -9i64..=9), 0..5)).prop_map(|(degree, terms)| {
        let mut p = CdPoly::zero();
        for (bits, k) in terms {
            p += &CdPoly::term(k, cd_word(degree, bits));
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cd_round_trip(p in cd_poly()) {
        prop_assert_eq!(ab_to_cd(&cd_expand(&p)).unwrap(), p.clone());
        let shown = p.to_string();
        prop_assert_eq!(shown.parse::<CdPoly>().unwrap(), p);
    }

    #[test]
    fn ab_display_parses_back(seed in any::<u64>(), n in 0usize..7) {
        let p = random_poly(&mut rng(seed), n);
        prop_assert_eq!(p.to_string().parse::<AbPoly>().unwrap(), p);
    }

    #[test]
    fn coproduct_is_coassociative(seed in any::<u64>(), n in 0usize..9) {
        let d = coproduct(&random_poly(&mut rng(seed), n));
        prop_assert_eq!(d.split_factor(0), d.split_factor(1));
    }

    #[test]
    fn operators_are_linear(seed in any::<u64>(), n in 1usize..8) {
        let mut r = rng(seed);
        let (p, q) = (random_poly(&mut r, n), random_poly(&mut r, n));
        let s = &p + &q;
        prop_assert_eq!(kappa(&s), kappa(&p) + kappa(&q));
        prop_assert_eq!(beta(&s), beta(&p) + beta(&q));
        prop_assert_eq!(eta(&s), eta(&p) + eta(&q));
        prop_assert_eq!(lambda_t(&s), lambda_t(&p) + lambda_t(&q));
        prop_assert_eq!(lambda_ub(&s), lambda_ub(&p) + lambda_ub(&q));
    }

    #[test]
    fn omega_lands_in_cd(seed in any::<u64>(), n in 1usize..8) {
        let mut r = rng(seed);
        let w = AbPoly::a() * random_poly(&mut r, n - 1);
        prop_assert!(omega(&w).is_ok());
    }

    #[test]
    fn ab_index_methods_agree(seed in any::<u64>(), rank in 1usize..6) {
        let p = random_poset(&mut rng(seed), rank);
        let chain = p.ab_index_chain().unwrap();
        prop_assert_eq!(&chain, &p.ab_index_stanley().unwrap());
        prop_assert_eq!(&chain, &p.ab_index_flag_h().unwrap());
        prop_assert_eq!(&chain, &ab_index_by_chains(&p).unwrap());
        prop_assert_eq!(p.dual().ab_index_chain().unwrap(), chain.star());
    }

    #[test]
    fn zaslavsky_relations(seed in any::<u64>(), rank in 1usize..6) {
        let p = random_poset(&mut rng(seed), rank);
        let z = p.zaslavsky_invariants();
        let ab = AbPoly::a_minus_b_pow(rank - 1);
        let psi = p.ab_index().unwrap();
        prop_assert_eq!(eta(&psi), ab.scale(&z.z));
        prop_assert_eq!(beta(&psi), ab.scale(&z.z_b));
        prop_assert_eq!(lambda_t(&psi), ab.scale(&z.z_t));
        prop_assert_eq!(lambda_ub(&psi), ab.scale(&z.z_ub));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn regions_match_characteristic_polynomial(seed in any::<u64>(), n in 1usize..3, extra in 1usize..4) {
        let a = random_affine(&mut rng(seed), n, n + extra, false);
        let chi = a.characteristic_polynomial();
        let fs = faces(&a).unwrap();
        let regions = fs.iter().filter(|f| f.is_region()).count();
        let bounded = fs.iter().filter(|f| f.is_region() && f.bounded).count();
        prop_assert_eq!(chi.eval(&BigInt::from(-1)).abs(), BigInt::from(regions));
        prop_assert_eq!(chi.eval(&BigInt::one()).abs(), BigInt::from(bounded));
    }

    #[test]
    fn central_face_posets_are_eulerian(seed in any::<u64>(), n in 2usize..4) {
        let m = rng(seed ^ 1).gen_range(n..=n + 2);
        let a = random_affine(&mut rng(seed), n, m, true);
        let (t, _, _) = face_poset_central(&a).unwrap();
        prop_assert!(t.poset.is_eulerian());
        let by_chains = ab_to_cd(&t.poset.ab_index_chain().unwrap()).unwrap();
        prop_assert_eq!(psi_central(&a).unwrap(), by_chains);
    }

    #[test]
    fn toric_lattice_points(seed in any::<u64>(), m in 2usize..4) {
        let a = random_toric_2d(&mut rng(seed), m);
        let n = n_of_arrangement(&a).unwrap();
        prop_assume!(n <= BigInt::from(60));
        let chi = a.characteristic_polynomial().unwrap();
        prop_assert_eq!(chi_by_lattice_points(&a, &n).unwrap(), chi.eval(&n));
    }

    #[test]
    fn chromatic_counts_colourings(seed in any::<u64>(), n in 1usize..6, k in 1u32..4) {
        let g = random_graph(seed, n);
        let mut count = 0u64;
        for code in 0..(k as u64).pow(n as u32) {
            let colour = |v: usize| code / (k as u64).pow(v as u32) % k as u64;
            if g.edges().iter().all(|&(u, v)| colour(u) != colour(v)) {
                count += 1;
            }
        }
        prop_assert_eq!(chromatic_polynomial(&g).eval(&BigInt::from(k)), BigInt::from(count));
    }

    #[test]
    fn smith_form_factors(entries in prop::collection::vec(-6i64..=6, 6)) {
        let a: Vec<Vec<BigInt>> = entries.chunks(2).map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        let (p, d, q) = smith(&a);
        prop_assert_eq!(mat_mul(&mat_mul(&p, &a), &q), d.clone());
        prop_assert_eq!(determinant(&p).abs(), BigInt::one());
        prop_assert_eq!(determinant(&q).abs(), BigInt::one());
        if !d[1][1].is_zero() {
            prop_assert!((&d[1][1] % &d[0][0]).is_zero());
        }
    }
}

fn random_graph(seed: u64, n: usize) -> SimpleGraph {
    let mut r = rng(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if r.gen_bool(0.5) {
                edges.push((i, j));
            }
        }
    }
    SimpleGraph::new(n, &edges).unwrap()
}
