//! The punctured surface `T_g ∖ P` with its π₁ basis, and mapping class
//! elements acting on it.
//!
//! Symbols: `u1 v1 … ug vg` for the handles (`vj` is the meridian class of
//! handle `j`) and `z1 … z2n` for loops around the punctures, with `z(2i-1)`,
//! `z(2i)` the two endpoints of arc `i`. The surface relator is
//! `R = [u1,v1]⋯[ug,vg] · (z1⋯z2n)⁻¹`, so `z2n` is eliminated from the free
//! basis through the alias `z2n = (z1⋯z(2n-1))⁻¹ · [u1,v1]⋯[ug,vg]`.
//!
//! Every catalog element is first built on the full alphabet, where it fixes
//! `R` letter for letter (the basepoint is treated as a boundary circle), and
//! then pushed down to the free basis.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::endo::{FreeAutomorphism, FreeEndomorphism};
use crate::error::{Error, Result};
use crate::generators::GeneratorWord;
use crate::snf::IntegerMatrix;
use crate::word::{commutator, Alphabet, FreeWord, Symbol};

#[derive(Clone, Debug)]
pub struct SurfaceConfig {
    genus: usize,
    arcs: usize,
    full: Alphabet,
    basis: Alphabet,
    alias: Option<FreeWord>,
    relator: FreeWord,
}

impl PartialEq for SurfaceConfig {
    fn eq(&self, other: &Self) -> bool {
        self.genus == other.genus && self.arcs == other.arcs
    }
}
impl Eq for SurfaceConfig {}

pub fn u(j: usize) -> Symbol {
    Symbol::new(&format!("u{j}"))
}
pub fn v(j: usize) -> Symbol {
    Symbol::new(&format!("v{j}"))
}
pub fn z(k: usize) -> Symbol {
    Symbol::new(&format!("z{k}"))
}

impl SurfaceConfig {
    /// Configuration with genus `g ≥ 0` and `n ≥ 1` arcs.
    pub fn new(g: i64, n: i64) -> Result<Self> {
        if g < 0 {
            return Err(Error::Domain(format!("genus must be non-negative, got {g}")));
        }
        if n < 1 {
            return Err(Error::Domain(format!("need at least one arc, got {n}")));
        }
        Ok(Self::build(g as usize, n as usize))
    }

    /// Also allows `n = 0`, the closed surface used for plain Heegaard
    /// splittings. There the basis words present π₁ only modulo the relator.
    pub fn with_arcs(genus: usize, arcs: usize) -> Self {
        Self::build(genus, arcs)
    }

    fn build(genus: usize, arcs: usize) -> Self {
        let mut handles = Vec::new();
        for j in 1..=genus {
            handles.push(u(j));
            handles.push(v(j));
        }
        let punct: Vec<Symbol> = (1..=2 * arcs).map(z).collect();
        let full = Alphabet::new(handles.iter().cloned().chain(punct.iter().cloned())).expect("distinct");
        let comm = (1..=genus)
            .fold(FreeWord::identity(), |acc, j| acc.multiply(&commutator(&FreeWord::gen(u(j)), &FreeWord::gen(v(j)))));
        let zprod = punct.iter().fold(FreeWord::identity(), |acc, s| acc.multiply(&FreeWord::gen(*s)));
        let relator = comm.multiply(&zprod.inverse());
        let (basis, alias) = if arcs == 0 {
            (full.clone(), None)
        } else {
            let basis =
                Alphabet::new(handles.iter().cloned().chain(punct[..2 * arcs - 1].iter().cloned())).expect("distinct");
            let head =
                punct[..2 * arcs - 1].iter().fold(FreeWord::identity(), |acc, s| acc.multiply(&FreeWord::gen(*s)));
            (basis, Some(head.inverse().multiply(&comm)))
        };
        SurfaceConfig { genus, arcs, full, basis, alias, relator }
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn arcs(&self) -> usize {
        self.arcs
    }

    pub fn punctures(&self) -> usize {
        2 * self.arcs
    }

    /// All symbols, including the eliminated `z2n`.
    pub fn full_alphabet(&self) -> &Alphabet {
        &self.full
    }

    /// The free basis of π₁(T_g ∖ P): every symbol except `z2n`.
    pub fn free_basis(&self) -> &Alphabet {
        &self.basis
    }

    pub fn alias(&self) -> Option<&FreeWord> {
        self.alias.as_ref()
    }

    /// The surface relator over the full alphabet.
    pub fn relator(&self) -> &FreeWord {
        &self.relator
    }

    /// Rewrites a full-alphabet word over the free basis.
    pub fn expand(&self, w: &FreeWord) -> FreeWord {
        match &self.alias {
            None => w.clone(),
            Some(alias) => {
                let mut map = HashMap::new();
                map.insert(z(2 * self.arcs), alias.clone());
                w.substitute(&map)
            }
        }
    }

    /// Puncture loop `z_k` as a free-basis word.
    pub fn puncture_word(&self, k: usize) -> FreeWord {
        self.expand(&FreeWord::gen(z(k)))
    }

    /// Pushes an automorphism of the full alphabet that fixes the relator
    /// down to the free basis.
    pub fn descend(&self, lift: &FreeAutomorphism) -> Result<FreeAutomorphism> {
        let down = |e: &FreeEndomorphism| -> Result<FreeEndomorphism> {
            let images = self
                .basis
                .symbols()
                .iter()
                .map(|s| Ok(self.expand(e.image(s).ok_or_else(|| Error::AlphabetMismatch(s.to_string()))?)))
                .collect::<Result<Vec<_>>>()?;
            FreeEndomorphism::from_images(&self.basis, images)
        };
        Ok(FreeAutomorphism::new_unchecked(down(lift.forward())?, down(lift.backward())?))
    }
}

/// Configuration with genus `g ≥ 0` and `n ≥ 1` arcs.
pub fn make_config(g: i64, n: i64) -> Result<SurfaceConfig> {
    SurfaceConfig::new(g, n)
}

/// A permutation of the punctures `1..=2n`, stored 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct PuncturePermutation {
    map: Vec<usize>,
}

impl PuncturePermutation {
    pub fn identity(size: usize) -> Self {
        PuncturePermutation { map: (0..size).collect() }
    }

    /// From a 0-based image table; rejects non-bijections.
    pub fn from_zero_based(map: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; map.len()];
        for &x in &map {
            if x >= map.len() || std::mem::replace(&mut seen[x], true) {
                return Err(Error::Domain(format!("not a permutation: {map:?}")));
            }
        }
        Ok(PuncturePermutation { map })
    }

    /// From the one-line 1-based notation.
    pub fn from_one_line(one_line: &[usize]) -> Result<Self> {
        if one_line.contains(&0) {
            return Err(Error::Domain("one-line permutations are 1-based".into()));
        }
        Self::from_zero_based(one_line.iter().map(|&x| x - 1).collect())
    }

    /// Product of disjoint or overlapping cycles (1-based), applied right to left.
    pub fn from_cycles(size: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut acc = Self::identity(size);
        for cyc in cycles.iter().rev() {
            let mut map: Vec<usize> = (0..size).collect();
            for (a, b) in cyc.iter().zip(cyc.iter().cycle().skip(1)) {
                if *a == 0 || *a > size || *b == 0 || *b > size {
                    return Err(Error::Domain(format!("cycle entry out of range: {cyc:?}")));
                }
                map[a - 1] = b - 1;
            }
            acc = Self::from_zero_based(map)?.compose(&acc);
        }
        Ok(acc)
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// 0-based image.
    pub fn apply(&self, k: usize) -> usize {
        self.map[k]
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.map.iter().map(|x| x + 1).collect()
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &PuncturePermutation) -> PuncturePermutation {
        PuncturePermutation { map: other.map.iter().map(|&k| self.map[k]).collect() }
    }

    pub fn inverse(&self) -> PuncturePermutation {
        let mut inv = vec![0; self.map.len()];
        for (k, &x) in self.map.iter().enumerate() {
            inv[x] = k;
        }
        PuncturePermutation { map: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(k, &x)| k == x)
    }
}

impl TryFrom<Vec<usize>> for PuncturePermutation {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Self::from_one_line(&v)
    }
}

impl From<PuncturePermutation> for Vec<usize> {
    fn from(p: PuncturePermutation) -> Self {
        p.one_line()
    }
}

impl fmt::Display for PuncturePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.one_line())
    }
}

/// An element of the punctured mapping class group: the induced automorphism
/// of the free basis, the permutation of punctures, and the generator word
/// it came from.
#[derive(Clone, Debug)]
pub struct MappingClassElement {
    config: Arc<SurfaceConfig>,
    action: FreeAutomorphism,
    lift: Option<FreeAutomorphism>,
    perm: PuncturePermutation,
    provenance: GeneratorWord,
}

impl MappingClassElement {
    pub fn identity(config: Arc<SurfaceConfig>) -> Self {
        let action = FreeAutomorphism::identity(config.free_basis());
        let lift = Some(FreeAutomorphism::identity(config.full_alphabet()));
        let perm = PuncturePermutation::identity(config.punctures());
        MappingClassElement { config, action, lift, perm, provenance: GeneratorWord::empty() }
    }

    /// Builds from a full-alphabet automorphism fixing the relator.
    pub fn from_lift(
        config: Arc<SurfaceConfig>,
        lift: FreeAutomorphism,
        perm: PuncturePermutation,
        provenance: GeneratorWord,
    ) -> Result<Self> {
        let action = config.descend(&lift)?;
        Ok(MappingClassElement { config, action, lift: Some(lift), perm, provenance })
    }

    /// Builds directly from an action on the free basis (no lift).
    pub fn from_action(
        config: Arc<SurfaceConfig>,
        action: FreeAutomorphism,
        perm: PuncturePermutation,
        provenance: GeneratorWord,
    ) -> Result<Self> {
        if action.alphabet() != config.free_basis() {
            return Err(Error::AlphabetsDiffer("action must be over the free basis".into()));
        }
        if perm.len() != config.punctures() {
            return Err(Error::Domain("permutation size differs from puncture count".into()));
        }
        Ok(MappingClassElement { config, action, lift: None, perm, provenance })
    }

    pub fn config(&self) -> &Arc<SurfaceConfig> {
        &self.config
    }

    pub fn action(&self) -> &FreeAutomorphism {
        &self.action
    }

    pub fn lift(&self) -> Option<&FreeAutomorphism> {
        self.lift.as_ref()
    }

    pub fn perm(&self) -> &PuncturePermutation {
        &self.perm
    }

    pub fn provenance(&self) -> &GeneratorWord {
        &self.provenance
    }

    /// `self ∘ other`; the provenance is the concatenated word.
    pub fn compose(&self, other: &MappingClassElement) -> Result<MappingClassElement> {
        if self.config != other.config {
            return Err(Error::ConfigMismatch);
        }
        let lift = match (&self.lift, &other.lift) {
            (Some(a), Some(b)) => Some(a.compose(b)?),
            _ => None,
        };
        Ok(MappingClassElement {
            config: self.config.clone(),
            action: self.action.compose(&other.action)?,
            lift,
            perm: self.perm.compose(&other.perm),
            provenance: self.provenance.concat(&other.provenance),
        })
    }

    pub fn inverse(&self) -> MappingClassElement {
        MappingClassElement {
            config: self.config.clone(),
            action: self.action.inverse(),
            lift: self.lift.as_ref().map(FreeAutomorphism::inverse),
            perm: self.perm.inverse(),
            provenance: self.provenance.inverse(),
        }
    }

    pub fn pow(&self, k: i64) -> MappingClassElement {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut acc = MappingClassElement::identity(self.config.clone());
        for _ in 0..k.unsigned_abs() {
            acc = acc.compose(&base).expect("same config");
        }
        acc
    }

    /// Image of a free-basis word.
    pub fn apply(&self, w: &FreeWord) -> Result<FreeWord> {
        self.action.apply(w)
    }

    pub fn validate(&self) -> ValidationReport {
        validate(self)
    }

    /// Same mapping class: equal permutations and actions equal up to an
    /// inner automorphism.
    pub fn equals(&self, other: &MappingClassElement) -> Result<bool> {
        if self.config != other.config {
            return Err(Error::ConfigMismatch);
        }
        Ok(self.perm == other.perm && self.action.equal_up_to_inner(&other.action)?)
    }

    pub fn is_identity_class(&self) -> bool {
        self.perm.is_identity() && self.action.is_inner().is_some()
    }

    pub fn h1_matrix(&self) -> IntegerMatrix<i64> {
        h1_matrix(self)
    }

    pub fn to_json(&self) -> ElementJson {
        let table = |e: &FreeEndomorphism| {
            e.alphabet()
                .symbols()
                .iter()
                .zip(e.images())
                .map(|(s, w)| (s.to_string(), w.to_string()))
                .collect::<BTreeMap<_, _>>()
        };
        ElementJson {
            genus: self.config.genus,
            arcs: self.config.arcs,
            images: table(self.action.forward()),
            inverse_images: Some(table(self.action.backward())),
            perm: self.perm.one_line(),
            provenance: self.provenance.to_string(),
        }
    }

    /// Reads an element back; the inverse table is required to rebuild a
    /// verified automorphism.
    pub fn from_json(data: &ElementJson) -> Result<Self> {
        let config = Arc::new(SurfaceConfig::new(data.genus as i64, data.arcs as i64)?);
        let basis = config.free_basis();
        let read = |t: &BTreeMap<String, String>| -> Result<FreeEndomorphism> {
            let mut map = HashMap::new();
            for s in basis.symbols() {
                let lit = t.get(s.name()).ok_or_else(|| Error::Format(format!("missing image of {s}")))?;
                map.insert(*s, basis.parse(lit)?);
            }
            if t.len() != basis.rank() {
                return Err(Error::Format("image table has extra symbols".into()));
            }
            FreeEndomorphism::from_map(basis, &map)
        };
        let inv = data.inverse_images.as_ref().ok_or_else(|| Error::Format("inverse_images is required".into()))?;
        let action = FreeAutomorphism::new(read(&data.images)?, read(inv)?)?;
        let perm = PuncturePermutation::from_one_line(&data.perm)?;
        let provenance = GeneratorWord::parse(&data.provenance)?;
        Self::from_action(config, action, perm, provenance)
    }
}

/// Serialized form of a [`MappingClassElement`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub genus: usize,
    pub arcs: usize,
    pub images: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inverse_images: Option<BTreeMap<String, String>>,
    pub perm: Vec<usize>,
    pub provenance: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Clause {
    /// Puncture loops go to conjugates of the permuted puncture loops.
    PunctureConjugacy,
    /// The surface relator is preserved up to conjugacy.
    Relator,
    /// The action is a two-sided invertible map.
    Automorphism,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub passed: bool,
    pub clause: Option<Clause>,
    pub witness: Option<String>,
}

impl ValidationReport {
    fn ok() -> Self {
        ValidationReport { passed: true, clause: None, witness: None }
    }

    fn fail(clause: Clause, witness: String) -> Self {
        ValidationReport { passed: false, clause: Some(clause), witness: Some(witness) }
    }
}

pub fn validate(elem: &MappingClassElement) -> ValidationReport {
    let report = validate_geometry(elem);
    if !report.passed {
        return report;
    }
    if let Err(e) = FreeAutomorphism::new(elem.action.forward().clone(), elem.action.backward().clone()) {
        return ValidationReport::fail(Clause::Automorphism, e.to_string());
    }
    ValidationReport::ok()
}

/// Puncture and relator clauses only. The inverse check costs the product of
/// the image lengths, which is wasted on composites of verified automorphisms.
pub(crate) fn validate_geometry(elem: &MappingClassElement) -> ValidationReport {
    let cfg = &elem.config;
    for k in 1..=cfg.punctures() {
        let img = elem.action.forward().apply_unchecked(&cfg.puncture_word(k));
        let target = cfg.puncture_word(elem.perm.apply(k - 1) + 1);
        if !img.is_conjugate_to(&target) {
            return ValidationReport::fail(Clause::PunctureConjugacy, format!("z{k} ↦ {img}"));
        }
    }
    if let Some(lift) = &elem.lift {
        let r = lift.forward().apply_unchecked(cfg.relator());
        if !r.is_conjugate_to(cfg.relator()) {
            return ValidationReport::fail(Clause::Relator, format!("R ↦ {r}"));
        }
    }
    ValidationReport::ok()
}

/// Action on H₁ of the closed surface in the basis `u1, v1, …, ug, vg`,
/// columns holding the images.
pub fn h1_matrix(elem: &MappingClassElement) -> IntegerMatrix<i64> {
    let g = elem.config.genus;
    let mut handle_syms = Vec::with_capacity(2 * g);
    for j in 1..=g {
        handle_syms.push(u(j));
        handle_syms.push(v(j));
    }
    let mut m = IntegerMatrix::zeros(2 * g, 2 * g);
    for (c, s) in handle_syms.iter().enumerate() {
        let img = elem.action.forward().image(s).expect("handle symbol in basis");
        for (r, t) in handle_syms.iter().enumerate() {
            m.set(r, c, img.exponent_sum(t));
        }
    }
    m
}
