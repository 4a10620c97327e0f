//! Endomorphisms and automorphisms of finitely generated free groups.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::word::{Alphabet, FreeWord, Letter, Symbol};

/// A free group endomorphism, given by the image of every basis symbol.
#[derive(Clone, PartialEq, Eq)]
pub struct FreeEndomorphism {
    alphabet: Alphabet,
    images: Vec<FreeWord>,
}

impl FreeEndomorphism {
    pub fn identity(alphabet: &Alphabet) -> Self {
        let images = (0..alphabet.rank()).map(|i| alphabet.word(i)).collect();
        FreeEndomorphism { alphabet: alphabet.clone(), images }
    }

    /// Builds from a partial map; symbols without an entry are fixed.
    pub fn from_map(alphabet: &Alphabet, map: &HashMap<Symbol, FreeWord>) -> Result<Self> {
        for (k, v) in map {
            if !alphabet.contains(k) {
                return Err(Error::AlphabetMismatch(k.to_string()));
            }
            alphabet.check(v)?;
        }
        let images =
            alphabet.symbols().iter().map(|s| map.get(s).cloned().unwrap_or_else(|| FreeWord::gen(*s))).collect();
        Ok(FreeEndomorphism { alphabet: alphabet.clone(), images })
    }

    pub fn from_images(alphabet: &Alphabet, images: Vec<FreeWord>) -> Result<Self> {
        if images.len() != alphabet.rank() {
            return Err(Error::Domain(format!("expected {} images, got {}", alphabet.rank(), images.len())));
        }
        for img in &images {
            alphabet.check(img)?;
        }
        Ok(FreeEndomorphism { alphabet: alphabet.clone(), images })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    pub fn image(&self, sym: &Symbol) -> Option<&FreeWord> {
        self.alphabet.position(sym).map(|i| &self.images[i])
    }

    pub fn apply(&self, w: &FreeWord) -> Result<FreeWord> {
        self.alphabet.check(w)?;
        Ok(self.apply_unchecked(w))
    }

    pub(crate) fn apply_unchecked(&self, w: &FreeWord) -> FreeWord {
        // Streamed so cancellation happens before the unreduced product exists.
        FreeWord::from_letters(w.letters().iter().flat_map(|l| {
            let img = self.images[self.alphabet.position(&l.sym).expect("checked symbol")].letters();
            let (fwd, bwd) = if l.inverted { (&[][..], img) } else { (img, &[][..]) };
            fwd.iter().copied().chain(bwd.iter().rev().map(Letter::inverse))
        }))
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &FreeEndomorphism) -> Result<FreeEndomorphism> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetsDiffer("cannot compose endomorphisms".into()));
        }
        let images = other.images.iter().map(|w| self.apply_unchecked(w)).collect();
        Ok(FreeEndomorphism { alphabet: self.alphabet.clone(), images })
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, w)| *w == self.alphabet.word(i))
    }

    pub fn max_image_len(&self) -> usize {
        self.images.iter().map(FreeWord::len).max().unwrap_or(0)
    }
}

impl fmt::Debug for FreeEndomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        for (s, w) in self.alphabet.symbols().iter().zip(&self.images) {
            m.entry(s, w);
        }
        m.finish()
    }
}

/// An endomorphism paired with a two-sided inverse, checked on construction.
#[derive(Clone, PartialEq, Eq)]
pub struct FreeAutomorphism {
    forward: FreeEndomorphism,
    backward: FreeEndomorphism,
}

impl FreeAutomorphism {
    pub fn new(forward: FreeEndomorphism, backward: FreeEndomorphism) -> Result<Self> {
        if forward.alphabet != backward.alphabet {
            return Err(Error::AlphabetsDiffer("forward and backward maps".into()));
        }
        // One side suffices: free groups of finite rank are Hopfian, so a
        // surjective `forward` is already bijective with inverse `backward`.
        if !forward.compose(&backward)?.is_identity() {
            return Err(Error::NotAutomorphism("forward ∘ backward is not the identity".into()));
        }
        Ok(FreeAutomorphism { forward, backward })
    }

    /// Skips the inverse check; for compositions of already verified automorphisms.
    pub(crate) fn new_unchecked(forward: FreeEndomorphism, backward: FreeEndomorphism) -> Self {
        FreeAutomorphism { forward, backward }
    }

    pub fn identity(alphabet: &Alphabet) -> Self {
        let id = FreeEndomorphism::identity(alphabet);
        FreeAutomorphism { forward: id.clone(), backward: id }
    }

    /// Conjugation `x ↦ c x c⁻¹`.
    pub fn inner(alphabet: &Alphabet, c: &FreeWord) -> Result<Self> {
        alphabet.check(c)?;
        let fwd = alphabet.symbols().iter().map(|s| FreeWord::gen(*s).conjugate_by(c)).collect();
        let ci = c.inverse();
        let bwd = alphabet.symbols().iter().map(|s| FreeWord::gen(*s).conjugate_by(&ci)).collect();
        Ok(FreeAutomorphism {
            forward: FreeEndomorphism::from_images(alphabet, fwd)?,
            backward: FreeEndomorphism::from_images(alphabet, bwd)?,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.forward.alphabet()
    }

    pub fn forward(&self) -> &FreeEndomorphism {
        &self.forward
    }

    pub fn backward(&self) -> &FreeEndomorphism {
        &self.backward
    }

    pub fn apply(&self, w: &FreeWord) -> Result<FreeWord> {
        self.forward.apply(w)
    }

    pub fn inverse(&self) -> FreeAutomorphism {
        FreeAutomorphism { forward: self.backward.clone(), backward: self.forward.clone() }
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &FreeAutomorphism) -> Result<FreeAutomorphism> {
        Ok(FreeAutomorphism {
            forward: self.forward.compose(&other.forward)?,
            backward: other.backward.compose(&self.backward)?,
        })
    }

    pub fn pow(&self, k: i64) -> FreeAutomorphism {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut acc = FreeAutomorphism::identity(self.alphabet());
        for _ in 0..k.unsigned_abs() {
            acc = acc.compose(&base).expect("same alphabet");
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.forward.is_identity()
    }

    /// Returns `w` with `self(x) = w x w⁻¹` for every basis symbol, if one exists.
    ///
    /// The conjugator is recovered from the image of the first symbol up to a
    /// power of that symbol (its centralizer); the power is bounded by image lengths.
    pub fn is_inner(&self) -> Option<FreeWord> {
        let alphabet = self.alphabet();
        if alphabet.rank() == 0 {
            return Some(FreeWord::identity());
        }
        let first = alphabet.word(0);
        let (core, w0) = self.forward.images[0].cyclic_reduce();
        if core != first {
            return None;
        }
        let bound = self.forward.max_image_len() as i64 + 1;
        let candidates = std::iter::once(0).chain((1..=bound).flat_map(|m| [m, -m]));
        candidates.map(|m| w0.multiply(&first.pow(m))).find(|w| self.is_conjugation_by(w))
    }

    pub fn is_conjugation_by(&self, w: &FreeWord) -> bool {
        let alphabet = self.alphabet();
        (0..alphabet.rank()).all(|i| self.forward.images[i] == alphabet.word(i).conjugate_by(w))
    }

    pub fn equal_up_to_inner(&self, other: &FreeAutomorphism) -> Result<bool> {
        Ok(self.compose(&other.inverse())?.is_inner().is_some())
    }
}

impl fmt::Debug for FreeAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.forward.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Alphabet {
        Alphabet::new(["x1", "x2"]).unwrap()
    }

    fn aut(a: &Alphabet, fwd: &[&str], bwd: &[&str]) -> FreeAutomorphism {
        let p = |v: &[&str]| v.iter().map(|s| a.parse(s).unwrap()).collect::<Vec<_>>();
        FreeAutomorphism::new(
            FreeEndomorphism::from_images(a, p(fwd)).unwrap(),
            FreeEndomorphism::from_images(a, p(bwd)).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn rho_and_alpha_images() {
        let a = f2();
        let rho = aut(&a, &["x1^-1", "x2"], &["x1^-1", "x2"]);
        assert_eq!(rho.apply(&a.parse("x1").unwrap()).unwrap().to_string(), "x1^-1");
        let alpha = aut(&a, &["x2 x1 x2^-1", "x2"], &["x2^-1 x1 x2", "x2"]);
        assert_eq!(alpha.apply(&a.parse("x1").unwrap()).unwrap().to_string(), "x2 x1 x2^-1");
        assert!(rho.compose(&rho).unwrap().is_identity());
    }

    #[test]
    fn rejects_non_inverse_pair() {
        let a = f2();
        let p = |v: &[&str]| v.iter().map(|s| a.parse(s).unwrap()).collect::<Vec<_>>();
        let fwd = FreeEndomorphism::from_images(&a, p(&["x1 x2", "x2"])).unwrap();
        let bad = FreeEndomorphism::from_images(&a, p(&["x1 x2", "x2"])).unwrap();
        assert!(matches!(FreeAutomorphism::new(fwd, bad), Err(Error::NotAutomorphism(_))));
    }

    #[test]
    fn inner_detection() {
        let a = Alphabet::new(["z1", "z2", "u1"]).unwrap();
        assert_eq!(FreeAutomorphism::identity(&a).is_inner(), Some(FreeWord::identity()));
        let c = a.parse("z1 z2").unwrap();
        let inner = FreeAutomorphism::inner(&a, &c).unwrap();
        assert_eq!(inner.is_inner(), Some(c));
        let rho = aut(&f2(), &["x1^-1", "x2"], &["x1^-1", "x2"]);
        assert_eq!(rho.is_inner(), None);
        assert!(!rho.equal_up_to_inner(&FreeAutomorphism::identity(&f2())).unwrap());
        let cu = FreeAutomorphism::inner(&a, &a.parse("u1").unwrap()).unwrap();
        assert!(FreeAutomorphism::identity(&a).equal_up_to_inner(&cu).unwrap());
    }

    #[test]
    fn conjugator_ending_in_first_symbol() {
        let a = f2();
        let c = a.parse("x2 x1 x1").unwrap();
        let inner = FreeAutomorphism::inner(&a, &c).unwrap();
        assert_eq!(inner.is_inner(), Some(c));
    }

    #[test]
    fn alphabet_mismatch_in_compose() {
        let id1 = FreeEndomorphism::identity(&f2());
        let id2 = FreeEndomorphism::identity(&Alphabet::new(["y"]).unwrap());
        assert!(id1.compose(&id2).is_err());
    }
}
