use std::sync::Arc;

use hilden_core::catalog::{all_generators, check_relation, hilden_generators};
use hilden_core::motion::{goldsmith, MotionGenerator};
use hilden_core::plat::induced_handlebody_map;
use hilden_core::{evaluate, generator, relation_suite, GeneratorName, GeneratorWord, SurfaceConfig};

const CONFIGS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 1), (1, 2), (2, 2)];

fn cfg(g: usize, n: usize) -> Arc<SurfaceConfig> {
    Arc::new(SurfaceConfig::new(g as i64, n as i64).unwrap())
}

fn word(text: &str) -> GeneratorWord {
    GeneratorWord::parse(text).unwrap()
}

#[test]
fn relation_suite_passes() {
    for (g, n) in [(0, 2), (0, 3), (1, 1), (1, 2), (2, 2)] {
        let report = relation_suite(&cfg(g, n));
        let failures: Vec<_> = report.failures().collect();
        assert!(failures.is_empty(), "(g,n)=({g},{n}): {failures:#?}");
    }
}

#[test]
fn every_generator_validates() {
    for (g, n) in CONFIGS {
        let c = cfg(g, n);
        for name in all_generators(g, n) {
            let e = generator(&c, name).unwrap();
            let rep = e.validate();
            assert!(rep.passed, "{name} at ({g},{n}): {rep:?}");
        }
    }
}

#[test]
fn hilden_generators_act_trivially_on_homology() {
    for (g, n) in CONFIGS {
        let c = cfg(g, n);
        for name in all_generators(g, n) {
            let m = generator(&c, name).unwrap().h1_matrix();
            assert_eq!(m.is_identity(), !name.is_handle_twist(), "{name} at ({g},{n}):\n{m}");
        }
    }
}

#[test]
fn hilden_generators_extend_over_the_handlebody() {
    for (g, n) in CONFIGS {
        let c = cfg(g, n);
        for name in hilden_generators(g, n) {
            let e = generator(&c, name).unwrap();
            assert!(induced_handlebody_map(&e).is_some(), "{name} at ({g},{n})");
        }
    }
}

#[test]
fn longitude_twist_does_not_extend() {
    let e = generator(&cfg(1, 1), GeneratorName::HandleTwistU(1)).unwrap();
    assert!(induced_handlebody_map(&e).is_none());
    let e = generator(&cfg(1, 1), GeneratorName::HandleTwistV(1)).unwrap();
    assert!(induced_handlebody_map(&e).is_some());
}

#[test]
fn handle_twists_satisfy_the_braid_relation() {
    for g in 1..=2 {
        let c = cfg(g, 1);
        for j in 1..=g {
            let l = word(&format!("tu[{j}] tv[{j}] tu[{j}]"));
            let r = word(&format!("tv[{j}] tu[{j}] tv[{j}]"));
            assert_eq!(check_relation(&c, &l, &r).unwrap(), None);
        }
    }
}

#[test]
fn genus_zero_induced_action_matches_motion_generators() {
    let c = cfg(0, 3);
    let cases = [
        ("iota[2]", MotionGenerator::Flip(2)),
        ("lam[1]", MotionGenerator::Swap(1)),
        ("sik[1,3]", MotionGenerator::Pass(1, 3)),
        ("sik[3,2]", MotionGenerator::Pass(3, 2)),
    ];
    for (text, kind) in cases {
        let e = evaluate(&c, &word(text)).unwrap();
        let induced = induced_handlebody_map(&e).unwrap();
        let expected = goldsmith(kind, 3).unwrap();
        let got: Vec<String> = induced.images().iter().map(|w| w.to_string().replace('m', "x")).collect();
        let want: Vec<String> = expected.automorphism().forward().images().iter().map(ToString::to_string).collect();
        assert_eq!(got, want, "{text}");
    }
}

#[test]
fn evaluate_examples() {
    let c = cfg(0, 2);
    assert!(evaluate(&c, &word("")).unwrap().is_identity_class());
    let a = evaluate(&c, &word("iota[1] iota[1]")).unwrap();
    let b = evaluate(&c, &word("s[1]")).unwrap();
    assert!(a.equals(&b).unwrap());
    assert!(evaluate(&c, &word("lam[1] lam[1]^-1")).unwrap().is_identity_class());
    let i1 = evaluate(&c, &word("iota[1]")).unwrap();
    assert_eq!(i1.apply(&c.free_basis().parse("z1").unwrap()).unwrap().to_string(), "z1 z2 z1^-1");
    assert_eq!(i1.perm().one_line(), vec![2, 1, 3, 4]);
    assert!(!i1.equals(&evaluate(&c, &word("")).unwrap()).unwrap());
}

#[test]
fn twist_on_torus_conjugates_by_the_pair() {
    let c = cfg(1, 1);
    let s = generator(&c, GeneratorName::Twist(1)).unwrap();
    let zp = c.puncture_word(1).multiply(&c.puncture_word(2));
    let z1 = c.puncture_word(1);
    assert_eq!(s.apply(&z1).unwrap(), z1.conjugate_by(&zp));
    for sym in ["u1", "v1"] {
        let w = c.free_basis().parse(sym).unwrap();
        assert_eq!(s.apply(&w).unwrap(), w);
    }
}

#[test]
fn range_errors() {
    let c = cfg(0, 2);
    assert!(generator(&c, GeneratorName::Interval(3)).is_err());
    assert!(generator(&c, GeneratorName::MeridianSlide { handle: 1, basis: 1, primed: false }).is_err());
}
