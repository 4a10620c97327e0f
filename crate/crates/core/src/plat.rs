//! Generalized plat closures: the presentation of the link complement in the
//! manifold obtained by gluing two arc-decorated handlebodies, its Tietze
//! simplification and its first homology.
//!
//! The complement of the arcs in the handlebody has free fundamental group on
//! `y1 … yg` (cores of the handles) and `m1 … mn` (meridians of the arcs).
//! The mirror copy uses `yb1 … ybg`, `mb1 … mbn`, and the mirror
//! identification matches each surface symbol with its barred twin.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use serde::Serialize;

use crate::catalog::evaluate;
use crate::endo::FreeEndomorphism;
use crate::error::{Error, Result};
use crate::generators::{GeneratorName, GeneratorWord};
use crate::snf::{AbelianGroup, IntegerMatrix};
use crate::surface::{u, v, z, MappingClassElement, SurfaceConfig};
use crate::word::{Alphabet, FreeWord, Letter, Symbol};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupPresentation {
    pub generators: Vec<Symbol>,
    pub relators: Vec<FreeWord>,
}

impl GroupPresentation {
    /// Cyclically reduces the relators.
    pub fn new(generators: Vec<Symbol>, relators: Vec<FreeWord>) -> Self {
        let relators = relators.into_iter().map(|r| r.cyclic_reduce().0).collect();
        GroupPresentation { generators, relators }
    }

    /// Exponent-sum matrix, one row per relator.
    pub fn relation_matrix(&self) -> IntegerMatrix<BigInt> {
        let mut m = IntegerMatrix::zeros(self.relators.len(), self.generators.len());
        for (r, w) in self.relators.iter().enumerate() {
            for (c, g) in self.generators.iter().enumerate() {
                m.set(r, c, BigInt::from(w.exponent_sum(g)));
            }
        }
        m
    }

    pub fn is_trivial_group(&self) -> bool {
        self.generators.is_empty()
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(ToString::to_string).collect();
        let rels: Vec<String> = self.relators.iter().map(ToString::to_string).collect();
        let part = |xs: Vec<String>| if xs.is_empty() { String::new() } else { format!(" {}", xs.join(", ")) };
        write!(f, "<{} |{} >", part(gens), part(rels))
    }
}

impl Serialize for GroupPresentation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            generators: Vec<String>,
            relators: Vec<String>,
        }
        Repr {
            generators: self.generators.iter().map(ToString::to_string).collect(),
            relators: self.relators.iter().map(ToString::to_string).collect(),
        }
        .serialize(s)
    }
}

pub fn handle_core(j: usize) -> Symbol {
    Symbol::new(&format!("y{j}"))
}
pub fn arc_meridian(i: usize) -> Symbol {
    Symbol::new(&format!("m{i}"))
}

fn mirror(s: &Symbol) -> Symbol {
    let name = s.name();
    let split = name.find(|c: char| c.is_ascii_digit()).unwrap_or(name.len());
    Symbol::new(&format!("{}b{}", &name[..split], &name[split..]))
}

/// Free basis of the handlebody side: `y1 … yg, m1 … mn`.
pub fn handlebody_alphabet(config: &SurfaceConfig) -> Alphabet {
    let ys = (1..=config.genus()).map(handle_core);
    let ms = (1..=config.arcs()).map(arc_meridian);
    Alphabet::new(ys.chain(ms)).expect("distinct")
}

fn full_images(config: &SurfaceConfig) -> HashMap<Symbol, FreeWord> {
    let mut map = HashMap::new();
    for j in 1..=config.genus() {
        map.insert(u(j), FreeWord::gen(handle_core(j)));
        map.insert(v(j), FreeWord::identity());
    }
    for i in 1..=config.arcs() {
        map.insert(z(2 * i - 1), FreeWord::gen(arc_meridian(i)));
        map.insert(z(2 * i), FreeWord::gen_inv(arc_meridian(i)));
    }
    map
}

/// Inclusion of the punctured surface into the arc complement, on the free
/// basis. Keys are ordered like the basis.
pub fn handlebody_images(config: &SurfaceConfig) -> BTreeMap<Symbol, FreeWord> {
    let full = full_images(config);
    config.free_basis().symbols().iter().map(|s| (*s, full[s].clone())).collect()
}

/// Inclusion applied to a word over the full alphabet.
pub fn include(config: &SurfaceConfig, w: &FreeWord) -> FreeWord {
    w.substitute(&full_images(config))
}

/// The map induced on the arc complement, when the element preserves the
/// kernel of the inclusion. Needs the element's full-alphabet lift.
pub fn induced_handlebody_map(elem: &MappingClassElement) -> Option<FreeEndomorphism> {
    let cfg = elem.config();
    let lift = elem.lift()?;
    let image = |s: Symbol| include(cfg, &lift.forward().apply_unchecked(&FreeWord::gen(s)));
    let killed = (1..=cfg.genus())
        .map(|j| FreeWord::gen(v(j)))
        .chain((1..=cfg.arcs()).map(|i| FreeWord::gen(z(2 * i - 1)).multiply(&FreeWord::gen(z(2 * i)))));
    for w in killed {
        if !include(cfg, &lift.forward().apply_unchecked(&w)).is_identity() {
            return None;
        }
    }
    let alphabet = handlebody_alphabet(cfg);
    let mut images = Vec::new();
    for j in 1..=cfg.genus() {
        images.push(image(u(j)));
    }
    for i in 1..=cfg.arcs() {
        images.push(image(z(2 * i - 1)));
    }
    FreeEndomorphism::from_images(&alphabet, images).ok()
}

fn check_psi(psi: &GeneratorWord) -> Result<()> {
    match psi.factors.iter().find(|(g, _)| !g.is_handle_twist()) {
        Some((g, _)) => Err(Error::Domain(format!("{g} is not a twist supported away from the arc disk"))),
        None => Ok(()),
    }
}

fn check_sigma(sigma: &GeneratorWord) -> Result<()> {
    match sigma.factors.iter().find(|(g, _)| g.is_handle_twist()) {
        Some((g, _)) => Err(Error::Domain(format!("{g} is not a Hilden generator"))),
        None => Ok(()),
    }
}

/// The presentation of the closure of `sigma` over the splitting `psi`:
/// one relator `h(x) · h̄(ψσ(x))⁻¹` per free basis symbol `x`.
pub fn plat_presentation(
    config: &Arc<SurfaceConfig>,
    psi: &GeneratorWord,
    sigma: &GeneratorWord,
) -> Result<GroupPresentation> {
    check_psi(psi)?;
    check_sigma(sigma)?;
    let glue = evaluate(config, &psi.concat(sigma))?;
    let h = handlebody_images(config);
    let mut relators = Vec::new();
    for (x, img) in config.free_basis().symbols().iter().zip(glue.action().forward().images()) {
        let far = img.substitute(&full_images(config)).map_symbols(mirror);
        relators.push(h[x].multiply(&far.inverse()));
    }
    let near = handlebody_alphabet(config).symbols().to_vec();
    let far = near.iter().map(mirror).collect::<Vec<_>>();
    Ok(GroupPresentation::new(near.into_iter().chain(far).collect(), relators))
}

/// A word in the gluing that realizes the 3-sphere at genus `g`: the twist
/// along every handle longitude, so each meridian is glued to a longitude.
#[allow(non_snake_case)]
pub fn PSI_S3(genus: usize) -> GeneratorWord {
    GeneratorWord::from_factors((1..=genus).map(|j| (GeneratorName::HandleTwistU(j), 1)).collect())
}

pub fn abelianization(p: &GroupPresentation) -> AbelianGroup {
    AbelianGroup::from_relation_matrix(&p.relation_matrix())
}

fn canonical(w: &FreeWord) -> FreeWord {
    let (core, _) = w.cyclic_reduce();
    let inv = core.inverse();
    (0..core.len().max(1)).flat_map(|k| [core.rotate(k), inv.rotate(k)]).min().unwrap_or_default()
}

fn tidy(relators: Vec<FreeWord>) -> Vec<FreeWord> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for r in relators {
        let (core, _) = r.cyclic_reduce();
        if !core.is_identity() && seen.insert(canonical(&core)) {
            out.push(core);
        }
    }
    out
}

/// A generator occurring exactly once in some relator, with that relator
/// rotated so the occurrence comes first. Picks the candidate whose
/// substitution grows the presentation least, and refuses to exceed `budget`.
fn find_elimination(p: &GroupPresentation, budget: usize) -> Option<(usize, Symbol, FreeWord)> {
    let counts: Vec<HashMap<Symbol, usize>> = p
        .relators
        .iter()
        .map(|w| {
            let mut m = HashMap::new();
            for l in w.letters() {
                *m.entry(l.sym).or_insert(0) += 1;
            }
            m
        })
        .collect();
    let mut totals: HashMap<Symbol, usize> = HashMap::new();
    for m in &counts {
        for (s, c) in m {
            *totals.entry(*s).or_insert(0) += c;
        }
    }
    let size: usize = p.relators.iter().map(FreeWord::len).sum();
    let mut best: Option<(isize, usize, usize, Symbol)> = None;
    for (r, m) in counts.iter().enumerate() {
        let len = p.relators[r].len() as isize;
        for gen in &p.generators {
            if m.get(gen) != Some(&1) {
                continue;
            }
            let elsewhere = (totals[gen] - 1) as isize;
            let growth = elsewhere * (len - 2) - len;
            let key = (growth, p.relators[r].len(), r, *gen);
            if best.as_ref().is_none_or(|b| (key.0, key.1, key.2) < (b.0, b.1, b.2)) {
                best = Some(key);
            }
        }
    }
    let (growth, _, r, gen) = best?;
    if size as isize + growth > budget as isize {
        return None;
    }
    let w = &p.relators[r];
    let k = w.letters().iter().position(|l| l.sym == gen).expect("counted occurrence");
    Some((r, gen, w.rotate(k)))
}

fn eliminate(p: &mut GroupPresentation, budget: usize) -> bool {
    let Some((r, gen, rotated)) = find_elimination(p, budget) else {
        return false;
    };
    // rotated = g^e · rest, so g = rest⁻¹ (e = 1) or g = rest (e = -1).
    let first: &Letter = &rotated.letters()[0];
    let rest = FreeWord::from_letters(rotated.letters()[1..].iter().cloned());
    let value = if first.inverted { rest } else { rest.inverse() };
    let mut map = HashMap::new();
    map.insert(gen, value);
    p.relators.remove(r);
    p.relators = tidy(p.relators.iter().map(|w| w.substitute(&map)).collect());
    p.generators.retain(|g| g != &gen);
    true
}

// Quadratic in relator length, so long relators are left alone.
const SHORTEN_MAX_LEN: usize = 400;

/// Replaces a relator by a shorter one obtained by cancelling more than half
/// of a cyclic form of another relator against a cyclic form of it.
fn shorten(p: &mut GroupPresentation) -> bool {
    for a in 0..p.relators.len() {
        let target = &p.relators[a];
        if target.len() > SHORTEN_MAX_LEN {
            continue;
        }
        for b in 0..p.relators.len() {
            let other = &p.relators[b];
            if a == b || other.len() > target.len() {
                continue;
            }
            let (tl, ol) = (target.letters(), other.letters());
            let (n, m) = (tl.len(), ol.len());
            for inverted in [false, true] {
                // Letter j of the cyclic form of `other` (or its inverse) starting at `s`.
                let form = |s: usize, j: usize| {
                    if inverted {
                        ol[(s + m - 1 - j) % m].inverse()
                    } else {
                        ol[(s + j) % m]
                    }
                };
                for ra in 0..n {
                    for s in 0..m {
                        let common = (0..m).take_while(|&j| tl[(ra + j) % n] == form(s, j)).count();
                        if 2 * common > m {
                            let t = target.rotate(ra);
                            let c = FreeWord::from_letters((0..m).map(|j| form(s, j)));
                            let shorter = c.inverse().multiply(&t).cyclic_reduce().0;
                            if shorter.len() < target.len() {
                                p.relators[a] = shorter;
                                p.relators = tidy(std::mem::take(&mut p.relators));
                                return true;
                            }
                        }
                    }
                }
            }
        }
    }
    false
}

/// Best-effort simplification; `effort` bounds the number of moves.
pub fn tietze_simplify(p: &GroupPresentation, effort: usize) -> GroupPresentation {
    let mut out = GroupPresentation { generators: p.generators.clone(), relators: tidy(p.relators.clone()) };
    let size: usize = out.relators.iter().map(FreeWord::len).sum();
    let budget = (4 * size).max(2000);
    for _ in 0..effort {
        if !eliminate(&mut out, budget) && !shorten(&mut out) {
            break;
        }
    }
    out
}

pub const DEFAULT_EFFORT: usize = 200;

#[derive(Clone, Debug, Serialize)]
pub struct PlatSummary {
    pub raw: GroupPresentation,
    pub simplified: GroupPresentation,
    pub homology: AbelianGroup,
}

pub fn plat_summary(config: &Arc<SurfaceConfig>, psi: &GeneratorWord, sigma: &GeneratorWord) -> Result<PlatSummary> {
    let raw = plat_presentation(config, psi, sigma)?;
    let simplified = tietze_simplify(&raw, DEFAULT_EFFORT);
    let homology = abelianization(&raw);
    Ok(PlatSummary { raw, simplified, homology })
}

#[derive(Clone, Debug, Serialize)]
pub struct CosetReport {
    pub sigma: PlatSummary,
    pub sigma_epsilon: PlatSummary,
    pub homology_equal: bool,
}

/// Compares the closures of `sigma` and `sigma·epsilon`.
pub fn coset_equivalence_check(
    config: &Arc<SurfaceConfig>,
    psi: &GeneratorWord,
    sigma: &GeneratorWord,
    epsilon: &GeneratorWord,
) -> Result<CosetReport> {
    check_sigma(epsilon)?;
    let a = plat_summary(config, psi, sigma)?;
    let b = plat_summary(config, psi, &sigma.concat(epsilon))?;
    let homology_equal = a.homology == b.homology;
    Ok(CosetReport { sigma: a, sigma_epsilon: b, homology_equal })
}
