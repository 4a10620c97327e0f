mod common;

use common::{cfg, handle_twists, pure_generators, random_word, rng};
use hilden_core::catalog::hilden_generators;
use hilden_core::plat::{include, plat_summary};
use hilden_core::{
    abelianization, coset_equivalence_check, evaluate, plat_presentation, tietze_simplify, AbelianGroup, GeneratorWord,
    PSI_S3,
};

fn word(text: &str) -> GeneratorWord {
    GeneratorWord::parse(text).unwrap()
}

#[test]
fn unknot_in_the_sphere() {
    let p = plat_presentation(&cfg(0, 1), &word(""), &word("")).unwrap();
    assert_eq!(p.generators.len(), 2);
    assert_eq!(p.relators.len(), 1);
    assert_eq!(abelianization(&p), AbelianGroup::free(1));
    let s = tietze_simplify(&p, 50);
    assert_eq!(s.generators.len(), 1);
    assert!(s.relators.is_empty());
}

#[test]
fn doubled_handlebodies() {
    for g in 1..=4 {
        let p = plat_presentation(&cfg(g, 0), &word(""), &word("")).unwrap();
        assert_eq!(p.relators.len(), 2 * g);
        assert_eq!(abelianization(&p), AbelianGroup::free(g));
    }
}

#[test]
fn sphere_splittings() {
    for g in 1..=3 {
        let p = plat_presentation(&cfg(g, 0), &PSI_S3(g), &word("")).unwrap();
        assert!(abelianization(&p).is_trivial());
        let s = tietze_simplify(&p, 100);
        assert!(s.generators.is_empty(), "{s}");
        assert!(s.relators.is_empty(), "{s}");
    }
}

#[test]
fn trivial_links_from_pure_braids() {
    let mut r = rng(7);
    for n in 1..=3 {
        let pool = pure_generators(0, n);
        for _ in 0..15 {
            let sigma = random_word(&mut r, &pool, 6);
            let p = plat_presentation(&cfg(0, n), &word(""), &sigma).unwrap();
            assert_eq!(abelianization(&p), AbelianGroup::free(n), "{sigma}");
        }
    }
}

#[test]
fn relator_count_and_gluing() {
    let mut r = rng(11);
    for (g, n) in [(0, 2), (1, 1), (1, 2), (2, 1)] {
        let c = cfg(g, n);
        for _ in 0..20 {
            let psi = random_word(&mut r, &handle_twists(g), 4);
            let sigma = random_word(&mut r, &hilden_generators(g, n), 5);
            let p = plat_presentation(&c, &psi, &sigma).unwrap();
            assert_eq!(p.relators.len(), 2 * g + 2 * n - 1);
            let glue = evaluate(&c, &psi.concat(&sigma)).unwrap();
            let img = glue.lift().unwrap().apply(c.relator()).unwrap();
            assert!(include(&c, &img).is_identity());
        }
    }
}

#[test]
fn homology_splits_off_the_link() {
    let mut r = rng(5);
    for g in 1..=2 {
        for n in 1..=2 {
            for _ in 0..10 {
                let psi = random_word(&mut r, &handle_twists(g), 5);
                let with = abelianization(&plat_presentation(&cfg(g, n), &psi, &word("")).unwrap());
                let without = abelianization(&plat_presentation(&cfg(g, 0), &psi, &word("")).unwrap());
                assert_eq!(with.free_rank, without.free_rank + n, "{psi}");
                assert_eq!(with.torsion, without.torsion, "{psi}");
            }
        }
    }
}

#[test]
fn tietze_keeps_homology() {
    let mut r = rng(3);
    for (g, n) in [(0, 2), (1, 1), (1, 2), (2, 1)] {
        for _ in 0..10 {
            let psi = random_word(&mut r, &handle_twists(g), 4);
            let sigma = random_word(&mut r, &hilden_generators(g, n), 4);
            let p = plat_presentation(&cfg(g, n), &psi, &sigma).unwrap();
            assert_eq!(abelianization(&tietze_simplify(&p, 100)), abelianization(&p));
        }
    }
}

#[test]
fn coset_examples() {
    let rep = coset_equivalence_check(&cfg(0, 2), &word(""), &word(""), &word("s[1]")).unwrap();
    assert!(rep.homology_equal);
    assert_eq!(rep.sigma.homology, AbelianGroup::free(2));
    let rep = coset_equivalence_check(&cfg(1, 1), &word(""), &word(""), &word("m[1,1]")).unwrap();
    assert!(rep.homology_equal);
    let rep = coset_equivalence_check(&cfg(1, 1), &word("tu[1]"), &word("iota[1]"), &word("")).unwrap();
    assert_eq!(rep.sigma.raw, rep.sigma_epsilon.raw);
}

#[test]
fn rejects_misplaced_factors() {
    assert!(plat_presentation(&cfg(1, 1), &word("iota[1]"), &word("")).is_err());
    assert!(plat_presentation(&cfg(1, 1), &word(""), &word("tu[1]")).is_err());
}

#[test]
fn summary_reports_homology() {
    let s = plat_summary(&cfg(0, 2), &word(""), &word("")).unwrap();
    assert_eq!(s.homology.to_string(), "Z^2");
}
