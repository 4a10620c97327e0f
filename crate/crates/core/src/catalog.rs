//! Action tables for every generator family, evaluation of generator words,
//! and the relation suite that certifies the tables.
//!
//! Slides are products of Dehn twists along curves read off from a [`Frame`]:
//! pushing the disk around arc `i` along a loop `c` is `T_{c'}·T_{c''}⁻¹·s_i⁻¹`
//! where `c'` and `c''` bound a neighbourhood of the disk and the loop.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use crate::endo::{FreeAutomorphism, FreeEndomorphism};
use crate::error::{Error, Result};
use crate::frame::{handle_twist_in, Frame, HandleCurve};
use crate::generators::{GeneratorName, GeneratorWord};
use crate::surface::{u, v, z, MappingClassElement, PuncturePermutation, SurfaceConfig};
use crate::word::{FreeWord, Symbol};

/// The catalog element for one generator.
pub fn generator(config: &Arc<SurfaceConfig>, name: GeneratorName) -> Result<MappingClassElement> {
    name.check_range(config.genus(), config.arcs())?;
    let lift = lift(config, name);
    let perm = permutation(config, name);
    MappingClassElement::from_lift(config.clone(), lift, perm, GeneratorWord::single(name))
}

/// Left-to-right product: the rightmost factor acts first.
pub fn evaluate(config: &Arc<SurfaceConfig>, word: &GeneratorWord) -> Result<MappingClassElement> {
    word.check_range(config.genus(), config.arcs())?;
    let mut cache: HashMap<GeneratorName, (FreeAutomorphism, PuncturePermutation)> = HashMap::new();
    let mut acc = FreeAutomorphism::identity(config.full_alphabet());
    let mut perm = PuncturePermutation::identity(config.punctures());
    for &(name, exp) in &word.factors {
        let (f, p) = cache.entry(name).or_insert_with(|| (lift(config, name), permutation(config, name)));
        let (f, p) = if exp < 0 { (f.inverse(), p.inverse()) } else { (f.clone(), p.clone()) };
        acc = acc.compose(&f)?;
        perm = perm.compose(&p);
    }
    let elem = MappingClassElement::from_lift(config.clone(), acc, perm, word.clone())?;
    let report = crate::surface::validate_geometry(&elem);
    if !report.passed {
        return Err(Error::Invalid(format!("{word}: {:?} {}", report.clause, report.witness.unwrap_or_default())));
    }
    Ok(elem)
}

fn permutation(config: &SurfaceConfig, name: GeneratorName) -> PuncturePermutation {
    let size = config.punctures();
    let cycles: Vec<Vec<usize>> = match name {
        GeneratorName::Interval(i) => vec![vec![2 * i - 1, 2 * i]],
        GeneratorName::Exchange(i) => vec![vec![2 * i - 1, 2 * i + 1], vec![2 * i, 2 * i + 2]],
        _ => vec![],
    };
    let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
    PuncturePermutation::from_cycles(size, &refs).expect("indices checked")
}

fn table(config: &SurfaceConfig, fwd: &[(Symbol, FreeWord)], bwd: &[(Symbol, FreeWord)]) -> FreeAutomorphism {
    let a = config.full_alphabet();
    let to_map = |t: &[(Symbol, FreeWord)]| t.iter().cloned().collect::<HashMap<_, _>>();
    FreeAutomorphism::new(
        FreeEndomorphism::from_map(a, &to_map(fwd)).expect("table symbols"),
        FreeEndomorphism::from_map(a, &to_map(bwd)).expect("table symbols"),
    )
    .expect("table is invertible")
}

fn g(s: Symbol) -> FreeWord {
    FreeWord::gen(s)
}

/// Half twist on arc `i`: `z(2i-1) ↦ z(2i-1) z(2i) z(2i-1)⁻¹`, `z(2i) ↦ z(2i-1)`.
fn interval(config: &SurfaceConfig, i: usize) -> FreeAutomorphism {
    let (a, b) = (z(2 * i - 1), z(2 * i));
    table(
        config,
        &[(a, g(b).conjugate_by(&g(a))), (b, g(a))],
        &[(a, g(b)), (b, g(a).conjugate_by(&FreeWord::gen_inv(b)))],
    )
}

/// Arc `i` passes in front of arc `i+1`, both keeping their endpoint order.
fn exchange(config: &SurfaceConfig, i: usize) -> FreeAutomorphism {
    let (a, b, c, d) = (z(2 * i - 1), z(2 * i), z(2 * i + 1), z(2 * i + 2));
    let p = g(a).multiply(&g(b));
    let q = g(c).multiply(&g(d));
    let qi = q.inverse();
    table(
        config,
        &[(a, g(c).conjugate_by(&p)), (b, g(d).conjugate_by(&p)), (c, g(a)), (d, g(b))],
        &[(a, g(c)), (b, g(d)), (c, g(a).conjugate_by(&qi)), (d, g(b).conjugate_by(&qi))],
    )
}

fn pair_block(i: usize) -> usize {
    i - 1
}

fn handle_block(config: &SurfaceConfig, j: usize) -> usize {
    config.arcs() + config.genus() - j
}

fn pair_twist(config: &SurfaceConfig, i: usize, exp: i32) -> FreeAutomorphism {
    Frame::standard(config).twist(pair_block(i), pair_block(i), exp)
}

fn handle_twist(config: &SurfaceConfig, j: usize, curve: HandleCurve, exp: i32) -> FreeAutomorphism {
    let f = handle_twist_in(config.full_alphabet(), &v(j), &u(j), curve);
    if exp >= 0 {
        f
    } else {
        f.inverse()
    }
}

fn product(parts: &[FreeAutomorphism]) -> FreeAutomorphism {
    parts.iter().skip(1).fold(parts[0].clone(), |acc, f| acc.compose(f).expect("same alphabet"))
}

/// Twist along the curve around arc `i` and one endpoint of arc `k`, composed
/// with `s_i⁻¹`. `endpoint` is 1 or 2; the moving endpoint crosses the other
/// one when it has to, which fixes the side of the curve.
fn slide_around_endpoint(config: &SurfaceConfig, i: usize, k: usize, endpoint: usize) -> FreeAutomorphism {
    let mut f = Frame::standard(config);
    f.split(pair_block(k));
    let mover = z(2 * k - 2 + endpoint);
    let at = f.find(&mover);
    let pair = f.find(&z(2 * i - 1));
    let (first, last) = if i < k {
        f.move_block(at, pair + 1);
        (pair, pair + 1)
    } else {
        f.move_block(at, pair - 1);
        (pair - 1, pair)
    };
    product(&[f.twist(first, last, 1), pair_twist(config, i, -1)])
}

/// Twist along the curve around arcs `i` and `k`, composed with `s_k⁻¹`.
fn slide_around_arc(config: &SurfaceConfig, i: usize, k: usize) -> FreeAutomorphism {
    let mut f = Frame::standard(config);
    let (pi, pk) = (pair_block(i), pair_block(k));
    let (first, last) = if i < k {
        f.move_block(pk, pi + 1);
        (pi, pi + 1)
    } else {
        f.move_block(pk, pi - 1);
        (pi - 1, pi)
    };
    product(&[f.twist(first, last, 1), pair_twist(config, k, -1)])
}

/// Frame in which the block at `block` of the standard frame has been band
/// summed into handle `j`; returns the frame and the handle's new index.
fn band_frame(config: &SurfaceConfig, block: usize, j: usize) -> (Frame, usize) {
    let mut f = Frame::standard(config);
    let h = handle_block(config, j);
    let t = if block < h { h - 1 } else { h };
    f.move_block(block, t);
    f.band_sum(t);
    (f, t)
}

/// Push of the disk `block` once along the meridian of handle `j`:
/// `T_{c'} · T_{∂block}⁻¹ · T_{v_j}⁻¹` with `c'` the band sum of both curves.
fn meridian_push(config: &SurfaceConfig, block: usize, j: usize) -> FreeAutomorphism {
    let (f, t) = band_frame(config, block, j);
    let boundary = Frame::standard(config).twist(block, block, -1);
    product(&[
        f.handle_twist(t, HandleCurve::Meridian, 1),
        boundary,
        handle_twist(config, j, HandleCurve::Meridian, -1),
    ])
}

/// `T_u T_v T_u` on handle `j`: exchanges the two handle curves.
fn handle_flip(config: &SurfaceConfig, j: usize) -> FreeAutomorphism {
    let tu = handle_twist(config, j, HandleCurve::Longitude, 1);
    let tv = handle_twist(config, j, HandleCurve::Meridian, 1);
    product(&[tu.clone(), tv, tu])
}

fn conjugate(by: &FreeAutomorphism, f: &FreeAutomorphism) -> FreeAutomorphism {
    product(&[by.clone(), f.clone(), by.inverse()])
}

/// The full-alphabet automorphism of a generator; fixes the boundary word.
pub(crate) fn lift(config: &SurfaceConfig, name: GeneratorName) -> FreeAutomorphism {
    use GeneratorName::*;
    match name {
        Interval(i) => interval(config, i),
        Exchange(i) => exchange(config, i),
        Twist(i) => pair_twist(config, i, 1),
        SlideM(i, j) => meridian_push(config, pair_block(i), j),
        SlideL(i, j) => conjugate(&handle_flip(config, j), &meridian_push(config, pair_block(i), j)),
        SlideS(i, k) => slide_around_endpoint(config, i, k, 1),
        SlideSP(i, k) => slide_around_endpoint(config, i, k, 2),
        SlideT(i, k) => slide_around_arc(config, i, k),
        MeridianSlide { handle, basis, primed } => {
            let block =
                if basis <= config.arcs() { pair_block(basis) } else { handle_block(config, basis - config.arcs()) };
            let push = meridian_push(config, block, handle);
            if primed {
                // The rotation by a half turn of the handle swaps the two
                // sides of its meridian disk.
                let flip = handle_flip(config, handle);
                conjugate(&flip.compose(&flip).expect("same alphabet"), &push)
            } else {
                push
            }
        }
        HandleTwistU(j) => handle_twist(config, j, HandleCurve::Longitude, 1),
        HandleTwistV(j) => handle_twist(config, j, HandleCurve::Meridian, 1),
    }
}

/// Every generator name valid at `(genus, arcs)`, in a fixed order.
pub fn all_generators(genus: usize, arcs: usize) -> Vec<GeneratorName> {
    use GeneratorName::*;
    let mut out = Vec::new();
    for i in 1..=arcs {
        out.push(Interval(i));
        out.push(Twist(i));
        if i < arcs {
            out.push(Exchange(i));
        }
        for j in 1..=genus {
            out.push(SlideM(i, j));
            out.push(SlideL(i, j));
        }
        for k in (1..=arcs).filter(|&k| k != i) {
            out.push(SlideS(i, k));
            out.push(SlideSP(i, k));
            out.push(SlideT(i, k));
        }
    }
    for h in 1..=genus {
        for b in 1..=arcs + genus {
            if b <= arcs || b - arcs != h {
                out.push(MeridianSlide { handle: h, basis: b, primed: false });
                out.push(MeridianSlide { handle: h, basis: b, primed: true });
            }
        }
    }
    for j in 1..=genus {
        out.push(HandleTwistU(j));
        out.push(HandleTwistV(j));
    }
    out
}

/// The Hilden-family generators (everything except handle twists).
pub fn hilden_generators(genus: usize, arcs: usize) -> Vec<GeneratorName> {
    all_generators(genus, arcs).into_iter().filter(|g| !g.is_handle_twist()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationInstance {
    pub family: &'static str,
    pub lhs: String,
    pub rhs: String,
    pub passed: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub genus: usize,
    pub arcs: usize,
    pub instances: Vec<RelationInstance>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.instances.iter().all(|r| r.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationInstance> {
        self.instances.iter().filter(|r| !r.passed)
    }
}

/// Checks `lhs = rhs` as mapping classes.
pub fn check_relation(config: &Arc<SurfaceConfig>, lhs: &GeneratorWord, rhs: &GeneratorWord) -> Result<Option<String>> {
    let a = evaluate(config, lhs)?;
    let b = evaluate(config, rhs)?;
    if a.equals(&b)? {
        return Ok(None);
    }
    let diff = a.compose(&b.inverse())?;
    if !diff.perm().is_identity() {
        return Ok(Some(format!("permutations differ: {} vs {}", a.perm(), b.perm())));
    }
    let basis = config.free_basis();
    let moved = basis
        .symbols()
        .iter()
        .zip(diff.action().forward().images())
        .find(|(s, w)| **w != FreeWord::gen(*(*s)))
        .map(|(s, w)| format!("lhs·rhs⁻¹ is not inner: {s} ↦ {w}"));
    Ok(Some(moved.unwrap_or_else(|| "lhs·rhs⁻¹ is not inner".into())))
}

/// Runs every relation instance that fits the configuration.
pub fn relation_suite(config: &Arc<SurfaceConfig>) -> RelationReport {
    use GeneratorName::*;
    let (g_, n) = (config.genus(), config.arcs());
    let w = |f: &[(GeneratorName, i32)]| GeneratorWord::from_factors(f.to_vec());
    let mut cases: Vec<(&'static str, GeneratorWord, GeneratorWord)> = Vec::new();
    let commute = |a: GeneratorName, b: GeneratorName| (w(&[(a, 1), (b, 1)]), w(&[(b, 1), (a, 1)]));

    for i in 1..n.saturating_sub(1) {
        let (a, b) = (Exchange(i), Exchange(i + 1));
        cases.push(("R1", w(&[(a, 1), (b, 1), (a, 1)]), w(&[(b, 1), (a, 1), (b, 1)])));
    }
    for i in 1..n {
        for j in i + 2..n {
            let (l, r) = commute(Exchange(i), Exchange(j));
            cases.push(("R2", l, r));
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            let (l, r) = commute(Interval(i), Interval(j));
            cases.push(("R3", l, r));
        }
    }
    for i in 1..=n {
        cases.push(("R4", w(&[(Twist(i), 1)]), w(&[(Interval(i), 1), (Interval(i), 1)])));
    }
    for i in 1..=n {
        for k in (1..=n).filter(|&k| k != i) {
            cases.push(("R5", w(&[(SlideS(i, k), 1), (SlideSP(i, k), 1)]), w(&[(SlideT(i, k), 1), (Twist(i), -1)])));
        }
    }
    // Disjoint supports.
    let mut disjoint: Vec<(GeneratorName, GeneratorName)> = Vec::new();
    for i in 1..=n {
        for l in (1..=n).filter(|&l| l != i) {
            disjoint.push((Twist(i), Twist(l)));
            disjoint.push((Interval(l), Twist(i)));
            for j in 1..=g_ {
                disjoint.push((Interval(l), SlideM(i, j)));
                disjoint.push((Interval(l), SlideL(i, j)));
            }
            for k in (1..=n).filter(|&k| k != i && k != l) {
                disjoint.push((Interval(l), SlideS(i, k)));
                disjoint.push((Interval(l), SlideT(i, k)));
            }
            if l < n && i != l && i != l + 1 {
                disjoint.push((Exchange(l), Twist(i)));
                disjoint.push((Exchange(l), Interval(i)));
            }
        }
    }
    for j in 1..=g_ {
        let disk: Vec<GeneratorName> = all_generators(0, n);
        for x in disk {
            disjoint.push((HandleTwistU(j), x));
            disjoint.push((HandleTwistV(j), x));
        }
        for k in (1..=g_).filter(|&k| k != j) {
            disjoint.push((HandleTwistU(j), HandleTwistV(k)));
            disjoint.push((HandleTwistU(j), HandleTwistU(k)));
        }
    }
    let mut seen = std::collections::HashSet::new();
    for (a, b) in disjoint {
        if seen.insert((a.min(b), a.max(b))) {
            let (l, r) = commute(a, b);
            cases.push(("R6", l, r));
        }
    }

    let instances = cases
        .into_iter()
        .map(|(family, lhs, rhs)| {
            let outcome = check_relation(config, &lhs, &rhs);
            let (passed, witness) = match outcome {
                Ok(None) => (true, None),
                Ok(Some(wit)) => (false, Some(wit)),
                Err(e) => (false, Some(e.to_string())),
            };
            RelationInstance { family, lhs: lhs.to_string(), rhs: rhs.to_string(), passed, witness }
        })
        .collect();
    RelationReport { genus: g_, arcs: n, instances }
}
