mod common;

use lapspec::enumerate::{enumerate, EnumConfig, Family, FamilyQuery};
use lapspec::graphcore::{canonical_form, copies, join, Graph};
use lapspec::spectral::{
    charpoly, direct_invariants, invariants_from_charpoly, join_spectrum, spanning_trees_matrix_tree, spectrum_numeric,
};
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn all_graphs(n: usize) -> Vec<Graph> {
    enumerate(&FamilyQuery::new(Family::All, n)).unwrap()
}

#[test]
fn charpoly_matches_expanded_numeric_spectrum() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut graphs: Vec<Graph> = (1..=8).flat_map(all_graphs).collect();
    for _ in 0..2000 {
        let p = rng.gen_range(0.1..0.9);
        graphs.push(common::random_graph(&mut rng, 9, p));
    }
    for g in &graphs {
        let exact = charpoly(g).unwrap();
        let spec = spectrum_numeric(g, 1e-9).unwrap();
        let approx = common::expand_roots(&spec.values);
        assert_eq!(exact.degree() + 1, approx.len());
        for (k, a) in approx.iter().enumerate() {
            let c = exact.coeff(k).to_f64().unwrap();
            assert!(
                (a - c).abs() <= 1e-6 * c.abs().max(1.0),
                "{g}: coefficient {k} exact {c} numeric {a}"
            );
            assert_eq!(a.round(), c, "{g}: coefficient {k}");
        }
    }
}

#[test]
fn spanning_tree_oracles_agree() {
    for n in 1..=6 {
        for g in all_graphs(n) {
            let brute = common::spanning_trees_brute(&g);
            assert_eq!(spanning_trees_matrix_tree(&g), BigUint::from(brute), "{g}");
            let inv = invariants_from_charpoly(&charpoly(&g).unwrap()).unwrap();
            assert_eq!(inv.spanning_trees, BigUint::from(brute), "{g}");
        }
    }
}

#[test]
fn kelmans_invariants_match_direct_counts() {
    for n in 1..=7 {
        for g in all_graphs(n) {
            let inv = invariants_from_charpoly(&charpoly(&g).unwrap()).unwrap();
            assert_eq!(inv.n_vertices, g.n());
            assert_eq!(inv.n_edges, g.edge_count());
            assert_eq!(inv.n_components, common::components(&g), "{g}");
            let sq: u64 = g.degrees().iter().map(|&d| (d * d) as u64).sum();
            assert_eq!(inv.degree_square_sum, sq, "{g}");
            assert_eq!(inv, direct_invariants(&g));
        }
    }
}

#[test]
fn power_sums_of_spectrum() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..300 {
        let n = rng.gen_range(1..=12);
        let p = rng.gen_range(0.0..1.0);
        let g = common::random_graph(&mut rng, n, p);
        let spec = spectrum_numeric(&g, 1e-9).unwrap();
        let s1: f64 = spec.values.iter().sum();
        let s2: f64 = spec.values.iter().map(|l| l * l).sum();
        let e = g.edge_count() as f64;
        let d2: f64 = g.degrees().iter().map(|&d| (d * d) as f64).sum();
        assert!((s1 - 2.0 * e).abs() < 1e-8, "{g}");
        assert!((s2 - (d2 + 2.0 * e)).abs() < 1e-7, "{g}");
    }
}

#[test]
fn join_identity_on_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..300 {
        let a = rng.gen_range(1..=7);
        let b = rng.gen_range(1..=10 - a);
        let (p, q) = (rng.gen_range(0.0..1.0), rng.gen_range(0.0..1.0));
        let g = common::random_graph(&mut rng, a, p);
        let h = common::random_graph(&mut rng, b, q);
        let direct = charpoly(&join(&g, &h)).unwrap();
        let via = join_spectrum(&charpoly(&g).unwrap(), &charpoly(&h).unwrap()).unwrap();
        assert_eq!(direct, via, "{g} x {h}");
    }
}

/// A random connected graph whose complement is also connected, so it is
/// not itself a join.
fn join_irreducible<R: Rng>(rng: &mut R, n: usize) -> Graph {
    loop {
        let g = common::random_graph(rng, n, 0.5);
        if n == 1 || (common::components(&g) == 1 && common::components(&g.complement()) == 1) {
            return g;
        }
    }
}

#[test]
fn eigenvalue_n_counts_join_factors() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut tested = 0;
    while tested < 200 {
        let k = rng.gen_range(1..=4);
        let sizes: Vec<usize> = (0..k).map(|_| rng.gen_range(1..=4)).collect();
        let total: usize = sizes.iter().sum();
        if total > 10 || sizes.iter().any(|&s| s == 2 || s == 3) {
            // on 2 or 3 vertices every connected graph is a join
            continue;
        }
        let factors: Vec<Graph> = sizes.iter().map(|&s| join_irreducible(&mut rng, s)).collect();
        let g = factors[1..].iter().fold(factors[0].clone(), |acc, f| join(&acc, f));
        let p = charpoly(&g).unwrap();
        assert_eq!(p.multiplicity(total as i64), k - 1, "{g} from {sizes:?}");
        tested += 1;
    }
}

#[test]
fn cospectral_graphs_share_invariants() {
    let graphs = all_graphs(6);
    for (i, a) in graphs.iter().enumerate() {
        for b in &graphs[i + 1..] {
            let (pa, pb) = (charpoly(a).unwrap(), charpoly(b).unwrap());
            if pa == pb {
                assert_ne!(canonical_form(a), canonical_form(b));
                assert_eq!(direct_invariants(a), direct_invariants(b));
            }
        }
    }
}

#[test]
fn invariants_survive_disjoint_copies() {
    let config = EnumConfig::default();
    let trees = lapspec::enumerate::enumerate_with(&FamilyQuery::new(Family::Tree, 5), &config).unwrap();
    for t in trees {
        let g = copies(&t, 3);
        let inv = invariants_from_charpoly(&charpoly(&g).unwrap()).unwrap();
        assert_eq!(inv.n_components, 3);
        assert_eq!(inv.spanning_trees, BigUint::from(0u32));
    }
}

#[test]
fn jacobi_oracle_matches_library_spectrum() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..200 {
        let n = rng.gen_range(1..=10);
        let p = rng.gen_range(0.0..1.0);
        let g = common::random_graph(&mut rng, n, p);
        let lib = spectrum_numeric(&g, 1e-9).unwrap().values;
        let oracle = common::laplacian_eigenvalues(&g);
        for (a, b) in lib.iter().zip(&oracle) {
            assert!((a - b).abs() < 1e-9, "{g}: {lib:?} vs {oracle:?}");
        }
    }
}
