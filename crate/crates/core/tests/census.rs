mod common;

use lapspec::census::{census, emit_census, lds_check, Census, Format, Universe};
use lapspec::enumerate::{enumerate, EnumConfig, Family, FamilyQuery};
use lapspec::graphcore::{build_named, canonical_form, cycle, graph6, join, path, Graph, Named};
use lapspec::spectral::charpoly;

fn cfg(jobs: usize) -> EnumConfig {
    EnumConfig {
        jobs,
        ..EnumConfig::default()
    }
}

fn all(n: usize) -> Universe {
    Universe::Family(FamilyQuery::new(Family::All, n))
}

fn with_mates(c: &Census) -> usize {
    c.cospectral_classes().map(|k| k.members.len()).sum()
}

#[test]
fn fraction_with_cospectral_mates() {
    // published counts of graphs sharing their Laplacian spectrum with a
    // non-isomorphic graph: none up to 5 vertices, 4 on 6, 130 on 7
    for (n, expected) in [(4, 0), (5, 0), (6, 4), (7, 130)] {
        assert_eq!(with_mates(&census(&all(n), &cfg(0)).unwrap()), expected, "n = {n}");
    }
}

#[test]
fn classes_partition_universe() {
    let c = census(&all(7), &cfg(0)).unwrap();
    assert_eq!(c.size, 1044);
    assert_eq!(c.classes.iter().map(|k| k.members.len()).sum::<usize>(), 1044);
    for class in &c.classes {
        for m in &class.members {
            let g = graph6::decode(m).unwrap();
            assert_eq!(charpoly(&g).unwrap(), class.key);
            assert_eq!(canonical_form(&g).as_str(), m);
        }
        let mut sorted = class.members.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted, class.members);
    }
    let mut keys: Vec<_> = c.classes.iter().map(|k| k.key.clone()).collect();
    keys.sort();
    keys.dedup();
    assert_eq!(keys.len(), c.classes.len());
}

#[test]
fn census_is_independent_of_workers() {
    let u = all(7);
    let one = census(&u, &cfg(1)).unwrap();
    for jobs in [2, 3, 8] {
        assert_eq!(census(&u, &cfg(jobs)).unwrap(), one);
    }
    let json = |c: &Census| emit_census(c, Format::Json).unwrap();
    assert_eq!(json(&one), json(&census(&u, &cfg(5)).unwrap()));
}

#[test]
fn tree_census_at_eight() {
    let c = census(&Universe::Family(FamilyQuery::new(Family::Tree, 8)), &cfg(0)).unwrap();
    assert_eq!(c.size, 23);
    assert_eq!(c.classes.len(), 23);
}

#[test]
fn corpus_universe_matches_family_universe() {
    let graphs: Vec<Graph> = enumerate(&FamilyQuery::new(Family::All, 6)).unwrap();
    let mut text = Vec::new();
    graph6::write_corpus(&mut text, &graphs).unwrap();
    let corpus = Universe::Corpus {
        name: "six".into(),
        graphs: graph6::read_corpus(&text[..]).unwrap(),
    };
    let a = census(&corpus, &cfg(0)).unwrap();
    let b = census(&all(6), &cfg(0)).unwrap();
    assert_eq!(a.classes, b.classes);
}

#[test]
fn lds_examples() {
    assert!(lds_check(&cycle(6).unwrap(), &all(6), &cfg(0)).unwrap().is_lds);
    assert!(lds_check(&path(6).unwrap(), &all(6), &cfg(0)).unwrap().is_lds);
    let cone = join(&Graph::empty(1).unwrap(), &cycle(6).unwrap());
    let report = lds_check(&cone, &all(7), &cfg(0)).unwrap();
    let h1 = canonical_form(&build_named(Named::H1).unwrap());
    assert_eq!(report.mates, vec![h1.as_str().to_string()]);
    let c5 = join(&Graph::empty(1).unwrap(), &cycle(5).unwrap());
    assert!(lds_check(&c5, &all(6), &cfg(0)).unwrap().is_lds);
}
