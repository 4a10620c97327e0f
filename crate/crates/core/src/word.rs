//! Freely reduced words over finite alphabets.
//!
//! Words are always stored reduced, so two words represent the same free
//! group element exactly when their letter sequences are equal.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};

/// An opaque generator name, interned so copies and comparisons are cheap.
/// Ordering is lexicographic on the name.
#[derive(Clone, Copy)]
pub struct Symbol {
    id: u32,
    name: &'static str,
}

fn interner() -> &'static Mutex<HashMap<&'static str, u32>> {
    static TABLE: OnceLock<Mutex<HashMap<&'static str, u32>>> = OnceLock::new();
    TABLE.get_or_init(Default::default)
}

impl Symbol {
    pub fn new(name: &str) -> Self {
        let mut table = interner().lock().unwrap_or_else(|e| e.into_inner());
        if let Some((&name, &id)) = table.get_key_value(name) {
            return Symbol { id, name };
        }
        // Names are few and live for the whole process.
        let name: &'static str = Box::leak(name.to_owned().into_boxed_str());
        let id = table.len() as u32;
        table.insert(name, id);
        Symbol { id, name }
    }

    pub fn name(&self) -> &str {
        self.name
    }
}

impl PartialEq for Symbol {
    fn eq(&self, other: &Self) -> bool {
        self.id == other.id
    }
}

impl Eq for Symbol {}

impl Hash for Symbol {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.id.hash(state);
    }
}

impl PartialOrd for Symbol {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Symbol {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.id == other.id {
            Ordering::Equal
        } else {
            self.name.cmp(other.name)
        }
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name)
    }
}

impl From<&str> for Symbol {
    fn from(s: &str) -> Self {
        Symbol::new(s)
    }
}

/// A symbol raised to the power +1 or -1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub sym: Symbol,
    pub inverted: bool,
}

impl Letter {
    pub fn new(sym: Symbol, exponent: i32) -> Self {
        assert!(exponent == 1 || exponent == -1, "letter exponent must be ±1");
        Letter { sym, inverted: exponent < 0 }
    }

    pub fn exponent(&self) -> i32 {
        if self.inverted {
            -1
        } else {
            1
        }
    }

    pub fn inverse(&self) -> Letter {
        Letter { sym: self.sym, inverted: !self.inverted }
    }

    fn cancels(&self, other: &Letter) -> bool {
        self.sym == other.sym && self.inverted != other.inverted
    }
}

/// An ordered set of symbols.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<Symbol>,
    // symbol id -> position + 1, zero when absent
    slots: Vec<u32>,
}

impl Alphabet {
    pub fn new<I, S>(symbols: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<Symbol>,
    {
        let symbols: Vec<Symbol> = symbols.into_iter().map(Into::into).collect();
        let size = symbols.iter().map(|s| s.id as usize + 1).max().unwrap_or(0);
        let mut slots = vec![0; size];
        for (i, s) in symbols.iter().enumerate() {
            if std::mem::replace(&mut slots[s.id as usize], i as u32 + 1) != 0 {
                return Err(Error::Domain(format!("duplicate symbol `{s}` in alphabet")));
            }
        }
        Ok(Alphabet { symbols, slots })
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn rank(&self) -> usize {
        self.symbols.len()
    }

    pub fn contains(&self, sym: &Symbol) -> bool {
        self.position(sym).is_some()
    }

    pub fn position(&self, sym: &Symbol) -> Option<usize> {
        match self.slots.get(sym.id as usize) {
            Some(&k) if k > 0 => Some(k as usize - 1),
            _ => None,
        }
    }

    pub fn check(&self, w: &FreeWord) -> Result<()> {
        match w.letters().iter().find(|l| !self.contains(&l.sym)) {
            Some(l) => Err(Error::AlphabetMismatch(l.sym.to_string())),
            None => Ok(()),
        }
    }

    /// Parses a word literal and checks every symbol against this alphabet.
    pub fn parse(&self, text: &str) -> Result<FreeWord> {
        let w = FreeWord::parse(text)?;
        self.check(&w)?;
        Ok(w)
    }

    pub fn word(&self, i: usize) -> FreeWord {
        FreeWord::gen(self.symbols[i])
    }
}

/// A freely reduced word. The empty word is the identity.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FreeWord {
    letters: Vec<Letter>,
}

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord { letters: Vec::new() }
    }

    pub fn gen(sym: Symbol) -> Self {
        FreeWord { letters: vec![Letter::new(sym, 1)] }
    }

    pub fn gen_inv(sym: Symbol) -> Self {
        FreeWord { letters: vec![Letter::new(sym, -1)] }
    }

    /// Freely reduces an arbitrary letter sequence.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            push_reduced(&mut out, l);
        }
        FreeWord { letters: out }
    }

    /// Reduces a raw letter sequence, rejecting symbols outside `alphabet`.
    pub fn reduce<I: IntoIterator<Item = Letter>>(letters: I, alphabet: &Alphabet) -> Result<Self> {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if !alphabet.contains(&l.sym) {
                return Err(Error::AlphabetMismatch(l.sym.to_string()));
            }
            push_reduced(&mut out, l);
        }
        Ok(FreeWord { letters: out })
    }

    /// Parses whitespace-separated tokens `sym` or `sym^-1` (also `sym^1`).
    pub fn parse(text: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for (pos, tok) in tokens(text) {
            let (name, exp) = match tok.split_once('^') {
                None => (tok, 1),
                Some((name, "-1")) => (name, -1),
                Some((name, "1")) => (name, 1),
                Some((_, e)) => return Err(Error::Syntax { pos, msg: format!("unsupported exponent `{e}`") }),
            };
            if name.is_empty() || !name.chars().all(|c| c.is_alphanumeric() || c == '_') {
                return Err(Error::Syntax { pos, msg: format!("bad symbol `{name}`") });
            }
            letters.push(Letter::new(Symbol::new(name), exp));
        }
        Ok(FreeWord::from_letters(letters))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn multiply(&self, other: &FreeWord) -> FreeWord {
        let mut out = self.letters.clone();
        for l in &other.letters {
            push_reduced(&mut out, *l);
        }
        FreeWord { letters: out }
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord { letters: self.letters.iter().rev().map(Letter::inverse).collect() }
    }

    pub fn pow(&self, k: i64) -> FreeWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = FreeWord::identity();
        for _ in 0..k.unsigned_abs() {
            out = out.multiply(&base);
        }
        out
    }

    /// `c · self · c⁻¹`
    pub fn conjugate_by(&self, c: &FreeWord) -> FreeWord {
        c.multiply(self).multiply(&c.inverse())
    }

    /// Splits `self = w · core · w⁻¹` with `core` cyclically reduced.
    pub fn cyclic_reduce(&self) -> (FreeWord, FreeWord) {
        let n = self.letters.len();
        let mut k = 0;
        while 2 * k + 1 < n && self.letters[k].cancels(&self.letters[n - 1 - k]) {
            k += 1;
        }
        let conj = FreeWord { letters: self.letters[..k].to_vec() };
        let core = FreeWord { letters: self.letters[k..n - k].to_vec() };
        (core, conj)
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.letters.first(), self.letters.last()) {
            (Some(a), Some(b)) if self.letters.len() > 1 => !a.cancels(b),
            _ => true,
        }
    }

    /// Rotation: moves the first `k` letters to the end (k taken mod length).
    pub fn rotate(&self, k: usize) -> FreeWord {
        if self.letters.is_empty() {
            return self.clone();
        }
        let k = k % self.letters.len();
        let mut letters = self.letters[k..].to_vec();
        letters.extend_from_slice(&self.letters[..k]);
        FreeWord { letters }
    }

    /// Decides conjugacy in the free group by comparing cyclically reduced cores
    /// up to rotation.
    pub fn is_conjugate_to(&self, other: &FreeWord) -> bool {
        let (a, _) = self.cyclic_reduce();
        let (b, _) = other.cyclic_reduce();
        if a.len() != b.len() {
            return false;
        }
        if a.is_identity() {
            return true;
        }
        (0..a.len()).any(|k| a.rotate(k) == b)
    }

    pub fn exponent_sum(&self, sym: &Symbol) -> i64 {
        self.letters.iter().filter(|l| &l.sym == sym).map(|l| l.exponent() as i64).sum()
    }

    pub fn contains_symbol(&self, sym: &Symbol) -> bool {
        self.letters.iter().any(|l| &l.sym == sym)
    }

    /// Replaces every occurrence of each symbol by its image (missing symbols stay).
    pub fn substitute(&self, images: &HashMap<Symbol, FreeWord>) -> FreeWord {
        let mut out: Vec<Letter> = Vec::new();
        for l in &self.letters {
            match images.get(&l.sym) {
                Some(img) if l.inverted => {
                    for m in img.letters.iter().rev() {
                        push_reduced(&mut out, m.inverse());
                    }
                }
                Some(img) => {
                    for m in &img.letters {
                        push_reduced(&mut out, *m);
                    }
                }
                None => push_reduced(&mut out, *l),
            }
        }
        FreeWord { letters: out }
    }

    /// Renames symbols through `f`.
    pub fn map_symbols(&self, f: impl Fn(&Symbol) -> Symbol) -> FreeWord {
        FreeWord::from_letters(self.letters.iter().map(|l| Letter { sym: f(&l.sym), inverted: l.inverted }))
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", l.sym)?;
            if l.inverted {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

fn push_reduced(out: &mut Vec<Letter>, l: Letter) {
    if out.last().is_some_and(|last| last.cancels(&l)) {
        out.pop();
    } else {
        out.push(l);
    }
}

/// Whitespace-separated tokens paired with their byte offsets.
pub(crate) fn tokens(text: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut rest = text;
    let mut offset = 0;
    std::iter::from_fn(move || {
        let trimmed = rest.trim_start();
        offset += rest.len() - trimmed.len();
        if trimmed.is_empty() {
            return None;
        }
        let end = trimmed.find(char::is_whitespace).unwrap_or(trimmed.len());
        let tok = &trimmed[..end];
        let pos = offset;
        offset += end;
        rest = &trimmed[end..];
        Some((pos, tok))
    })
}

/// `a b a⁻¹ b⁻¹`
pub fn commutator(a: &FreeWord, b: &FreeWord) -> FreeWord {
    a.multiply(b).multiply(&a.inverse()).multiply(&b.inverse())
}

pub fn product<'a, I: IntoIterator<Item = &'a FreeWord>>(words: I) -> FreeWord {
    words.into_iter().fold(FreeWord::identity(), |acc, w| acc.multiply(w))
}
