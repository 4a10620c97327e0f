//! Acceptance criteria 1 to 9. Prints one line per criterion and exits
//! non-zero if any fails.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use common::snf_oracle::{naive_invariants, random_rows};
use common::{cfg, handle_twists, pure_generators, random_word, rng};
use hilden_core::catalog::{all_generators, hilden_generators};
use hilden_core::motion::MotionGenerator;
use hilden_core::plat::include;
use hilden_core::projections::{permutation_closure, signed_generators};
use hilden_core::{
    abelianization, coset_equivalence_check, evaluate, generator, goldsmith, hilden_map, order_probe,
    plat_presentation, relation_suite, signed_decompose, smith_normal_form, tietze_simplify, AbelianGroup, BigMatrix,
    GeneratorWord, PuncturePermutation, PSI_S3,
};
use rand::seq::SliceRandom;
use rand::Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn word(text: &str) -> GeneratorWord {
    GeneratorWord::parse(text).unwrap()
}

/// Images written out by hand from the motion-group generator table.
fn expected_image(kind: MotionGenerator, n: usize, i: usize) -> String {
    let x = |k: usize| format!("x{k}");
    match kind {
        MotionGenerator::Flip(a) if a == i => format!("x{i}^-1"),
        MotionGenerator::Swap(j) if i == j => x(j + 1),
        MotionGenerator::Swap(j) if i == j + 1 => x(j),
        MotionGenerator::Pass(a, k) if a == i => format!("x{k} x{i} x{k}^-1"),
        _ => {
            assert!(i <= n);
            x(i)
        }
    }
}

fn motion_table() -> Outcome {
    let mut checked = 0;
    for n in 1..=4 {
        let mut kinds: Vec<MotionGenerator> = (1..=n).map(MotionGenerator::Flip).collect();
        kinds.extend((1..n).map(MotionGenerator::Swap));
        kinds.extend((1..=n).flat_map(|i| (1..=n).filter(move |&k| k != i).map(move |k| MotionGenerator::Pass(i, k))));
        for kind in kinds {
            let a = goldsmith(kind, n).map_err(|e| e.to_string())?;
            for i in 1..=n {
                let got = a.image(i).to_string();
                let want = expected_image(kind, n, i);
                ensure(got == want, || format!("{kind:?}, n={n}: x{i} -> {got}, expected {want}"))?;
            }
            let sq = a.compose(&a).unwrap();
            match kind {
                MotionGenerator::Pass(..) => {
                    ensure(order_probe(&a, 50).is_none(), || format!("{kind:?} has finite order at n={n}"))?
                }
                _ => ensure(sq.is_identity(), || format!("{kind:?} squared is not the identity at n={n}"))?,
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} generators"))
}

fn relations() -> Outcome {
    let mut total = 0;
    for (g, n) in [(0, 2), (0, 3), (1, 1), (1, 2), (2, 2)] {
        let report = relation_suite(&cfg(g, n));
        if let Some(f) = report.failures().next() {
            return Err(format!("({g},{n}) {}: {} = {} fails: {:?}", f.family, f.lhs, f.rhs, f.witness));
        }
        total += report.instances.len();
    }
    Ok(format!("{total} relation instances"))
}

fn signed_image() -> Outcome {
    let mut r = rng(101);
    for n in 1..=3 {
        let mut seen = BTreeSet::new();
        for _ in 0..500 {
            let g = r.gen_range(0..=1);
            let w = random_word(&mut r, &hilden_generators(g, n), 6);
            let e = evaluate(&cfg(g, n), &w).map_err(|e| e.to_string())?;
            ensure(signed_decompose(e.perm(), n).is_some(), || format!("{w} at ({g},{n}) is not signed"))?;
            seen.insert(e.perm().one_line());
        }
        let gens: Vec<PuncturePermutation> =
            seen.iter().map(|p| PuncturePermutation::from_one_line(p).unwrap()).collect();
        let image = permutation_closure(&gens, 2 * n);
        let full = permutation_closure(&signed_generators(n), 2 * n);
        ensure(image == full, || format!("n={n}: image has order {}, expected {}", image.len(), full.len()))?;
    }
    Ok("500 words for each n <= 3".into())
}

fn kernel_condition() -> Outcome {
    let mut count = 0;
    for (g, n) in [(0, 1), (0, 2), (0, 3), (1, 1), (1, 2), (2, 1), (2, 2)] {
        let c = cfg(g, n);
        for name in all_generators(g, n) {
            let m = generator(&c, name).map_err(|e| e.to_string())?.h1_matrix();
            ensure(m.is_identity() != name.is_handle_twist(), || format!("{name} at ({g},{n})"))?;
            count += 1;
        }
    }
    Ok(format!("{count} generators"))
}

fn injectivity_failure() -> Outcome {
    let c = cfg(0, 2);
    let iota = word("iota[1]");
    for k in 1..=20 {
        let e = evaluate(&c, &iota.pow(k)).map_err(|e| e.to_string())?;
        ensure(!e.is_identity_class(), || format!("iota[1]^{k} is trivial"))?;
    }
    let h = hilden_map(&iota.pow(2), 2).map_err(|e| e.to_string())?;
    ensure(h.is_identity(), || "H(iota[1]^2) is not the identity".into())?;
    Ok("iota[1]^k nontrivial for k <= 20, H(iota[1]^2) = 1".into())
}

fn plat_ground_truths() -> Outcome {
    let h1 = |g: usize, n: usize, psi: &GeneratorWord, sigma: &GeneratorWord| {
        plat_presentation(&cfg(g, n), psi, sigma).map(|p| abelianization(&p)).map_err(|e| e.to_string())
    };
    let empty = GeneratorWord::empty();
    let got = h1(0, 1, &empty, &empty)?;
    ensure(got == AbelianGroup::free(1), || format!("unknot: {got}"))?;
    for g in 1..=4 {
        let got = h1(g, 0, &empty, &empty)?;
        ensure(got == AbelianGroup::free(g), || format!("g={g}, n=0: {got}"))?;
    }
    for g in 1..=3 {
        let p = plat_presentation(&cfg(g, 0), &PSI_S3(g), &empty).map_err(|e| e.to_string())?;
        let s = tietze_simplify(&p, 200);
        ensure(s.generators.is_empty() && s.relators.is_empty(), || format!("PSI_S3({g}) simplifies to {s}"))?;
        ensure(abelianization(&p).is_trivial(), || format!("PSI_S3({g}) has H1 {}", abelianization(&p)))?;
    }
    let mut r = rng(102);
    for n in 1..=3 {
        for _ in 0..100 {
            let sigma = random_word(&mut r, &pure_generators(0, n), 8);
            let got = h1(0, n, &empty, &sigma)?;
            ensure(got == AbelianGroup::free(n), || format!("sigma = {sigma}: {got}"))?;
        }
    }
    Ok("unknot, doubled handlebodies, sphere splittings, 300 pure closures".into())
}

fn coset_invariance() -> Outcome {
    let mut r = rng(103);
    for (g, n) in [(0, 2), (1, 1), (1, 2)] {
        let c = cfg(g, n);
        let pool = hilden_generators(g, n);
        for _ in 0..200 {
            let psi = random_word(&mut r, &handle_twists(g), 3);
            let sigma = random_word(&mut r, &pool, 4);
            let eps = random_word(&mut r, &pool, 4);
            let rep = coset_equivalence_check(&c, &psi, &sigma, &eps).map_err(|e| e.to_string())?;
            ensure(rep.homology_equal, || {
                format!(
                    "({g},{n}) psi={psi} sigma={sigma} eps={eps}: {} vs {}",
                    rep.sigma.homology, rep.sigma_epsilon.homology
                )
            })?;
        }
    }
    Ok("600 pairs".into())
}

fn gluing() -> Outcome {
    let mut r = rng(104);
    let configs = [(0, 2), (1, 1), (1, 2), (2, 1)];
    for _ in 0..500 {
        let &(g, n) = configs.choose(&mut r).unwrap();
        let c = cfg(g, n);
        let psi = random_word(&mut r, &handle_twists(g), 4);
        let sigma = random_word(&mut r, &hilden_generators(g, n), 5);
        let glue = evaluate(&c, &psi.concat(&sigma)).map_err(|e| e.to_string())?;
        let img = glue.lift().unwrap().apply(c.relator()).unwrap();
        ensure(include(&c, &img).is_identity(), || format!("({g},{n}) psi={psi} sigma={sigma}: {img}"))?;
        let p = plat_presentation(&c, &psi, &sigma).map_err(|e| e.to_string())?;
        ensure(p.relators.len() == 2 * g + 2 * n - 1, || format!("({g},{n}) has {} relators", p.relators.len()))?;
    }
    Ok("500 pairs".into())
}

fn snf() -> Outcome {
    let mut r = rng(105);
    for _ in 0..1000 {
        let rows = random_rows(&mut r, 10, 9);
        let base = smith_normal_form(&BigMatrix::from_rows(rows.clone()));
        ensure(base.is_divisibility_chain(), || format!("not a chain: {rows:?}"))?;
        ensure(base.invariant_factors == naive_invariants(&rows), || format!("oracle disagrees: {rows:?}"))?;
        let mut rp = rows.clone();
        rp.shuffle(&mut r);
        let mut cp: Vec<usize> = (0..rows[0].len()).collect();
        cp.shuffle(&mut r);
        let shuffled: Vec<Vec<_>> = rp.iter().map(|row| cp.iter().map(|&j| row[j].clone()).collect()).collect();
        ensure(smith_normal_form(&BigMatrix::from_rows(shuffled)) == base, || {
            format!("not permutation invariant: {rows:?}")
        })?;
    }
    Ok("1000 matrices".into())
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("motion generator table", motion_table),
        ("relation suite", relations),
        ("signed permutation image", signed_image),
        ("kernel condition", kernel_condition),
        ("injectivity failure witness", injectivity_failure),
        ("plat ground truths", plat_ground_truths),
        ("coset invariance", coset_invariance),
        ("gluing well-formedness", gluing),
        ("smith normal form", snf),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name} ({detail}; {secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
