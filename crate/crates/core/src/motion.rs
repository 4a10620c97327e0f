//! Motion-group generators of the trivial `n`-component link, as
//! automorphisms of `F(x1, …, xn)`, and the Hilden map into them.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::endo::{FreeAutomorphism, FreeEndomorphism};
use crate::error::{Error, Result};
use crate::generators::{GeneratorName, GeneratorWord};
use crate::word::{Alphabet, FreeWord, Symbol};

/// The three families of motion generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MotionGenerator {
    /// Turn circle `i` over: `xi ↦ xi⁻¹`.
    Flip(usize),
    /// Swap circles `j` and `j+1`.
    Swap(usize),
    /// Pull circle `i` through circle `k`: `xi ↦ xk xi xk⁻¹`.
    Pass(usize, usize),
}

#[derive(Clone, PartialEq, Eq)]
pub struct MotionAutomorphism {
    n: usize,
    aut: FreeAutomorphism,
}

fn x(i: usize) -> Symbol {
    Symbol::new(&format!("x{i}"))
}

pub fn motion_alphabet(n: usize) -> Alphabet {
    Alphabet::new((1..=n).map(x)).expect("distinct")
}

impl MotionAutomorphism {
    pub fn identity(n: usize) -> Self {
        MotionAutomorphism { n, aut: FreeAutomorphism::identity(&motion_alphabet(n)) }
    }

    pub fn components(&self) -> usize {
        self.n
    }

    pub fn automorphism(&self) -> &FreeAutomorphism {
        &self.aut
    }

    pub fn image(&self, i: usize) -> &FreeWord {
        &self.aut.forward().images()[i - 1]
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &MotionAutomorphism) -> Result<MotionAutomorphism> {
        Ok(MotionAutomorphism { n: self.n, aut: self.aut.compose(&other.aut)? })
    }

    pub fn inverse(&self) -> MotionAutomorphism {
        MotionAutomorphism { n: self.n, aut: self.aut.inverse() }
    }

    pub fn is_identity(&self) -> bool {
        self.aut.is_identity()
    }

    /// Every generator goes to a conjugate of some `xk^±1`, each `k` used once.
    pub fn has_generator_shape(&self) -> bool {
        let mut used = vec![false; self.n];
        for w in self.aut.forward().images() {
            let (core, _) = w.cyclic_reduce();
            let [l] = core.letters() else { return false };
            let k = motion_alphabet(self.n).position(&l.sym).expect("same alphabet");
            if std::mem::replace(&mut used[k], true) {
                return false;
            }
        }
        true
    }

    /// Symbol → image table.
    pub fn table(&self) -> Vec<(String, String)> {
        let a = self.aut.alphabet();
        a.symbols().iter().zip(self.aut.forward().images()).map(|(s, w)| (s.to_string(), w.to_string())).collect()
    }
}

impl fmt::Debug for MotionAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.aut.fmt(f)
    }
}

impl Serialize for MotionAutomorphism {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let images: std::collections::BTreeMap<String, String> = self.table().into_iter().collect();
        images.serialize(s)
    }
}

pub fn goldsmith(kind: MotionGenerator, n: usize) -> Result<MotionAutomorphism> {
    let a = motion_alphabet(n);
    let in_range = |i: usize| (1..=n).contains(&i);
    let (mut fwd, mut bwd) = (HashMap::new(), HashMap::new());
    match kind {
        MotionGenerator::Flip(i) if in_range(i) => {
            fwd.insert(x(i), FreeWord::gen_inv(x(i)));
            bwd.insert(x(i), FreeWord::gen_inv(x(i)));
        }
        MotionGenerator::Swap(j) if in_range(j) && in_range(j + 1) => {
            for (s, t) in [(x(j), x(j + 1)), (x(j + 1), x(j))] {
                fwd.insert(s, FreeWord::gen(t));
                bwd.insert(s, FreeWord::gen(t));
            }
        }
        MotionGenerator::Pass(i, k) if in_range(i) && in_range(k) && i != k => {
            let xi = FreeWord::gen(x(i));
            fwd.insert(x(i), xi.conjugate_by(&FreeWord::gen(x(k))));
            bwd.insert(x(i), xi.conjugate_by(&FreeWord::gen_inv(x(k))));
        }
        _ => return Err(Error::IndexOutOfRange(format!("{kind:?} with n = {n}"))),
    }
    let aut = FreeAutomorphism::new(FreeEndomorphism::from_map(&a, &fwd)?, FreeEndomorphism::from_map(&a, &bwd)?)?;
    Ok(MotionAutomorphism { n, aut })
}

/// Image of a single catalog generator, if it lies in the supported domain.
fn factor_image(name: GeneratorName, n: usize) -> Result<MotionAutomorphism> {
    match name {
        GeneratorName::Interval(i) => goldsmith(MotionGenerator::Flip(i), n),
        GeneratorName::Exchange(j) => goldsmith(MotionGenerator::Swap(j), n),
        GeneratorName::SlideS(i, k) => goldsmith(MotionGenerator::Pass(i, k), n),
        GeneratorName::Twist(i) => {
            let r = goldsmith(MotionGenerator::Flip(i), n)?;
            r.compose(&r)
        }
        other => Err(Error::UnsupportedGenerator(other.to_string())),
    }
}

/// The Hilden map on words in intervals, exchanges, twists and `s_{i,k}`.
pub fn hilden_map(word: &GeneratorWord, n: usize) -> Result<MotionAutomorphism> {
    let mut acc = MotionAutomorphism::identity(n);
    for &(name, exp) in &word.factors {
        let f = factor_image(name, n)?;
        acc = acc.compose(&if exp < 0 { f.inverse() } else { f })?;
    }
    Ok(acc)
}

/// Least `k ≤ max_k` with `a^k = 1`.
pub fn order_probe(a: &MotionAutomorphism, max_k: u32) -> Option<u32> {
    let mut p = a.clone();
    for k in 1..=max_k {
        if p.is_identity() {
            return Some(k);
        }
        p = p.compose(a).expect("same alphabet");
    }
    None
}
