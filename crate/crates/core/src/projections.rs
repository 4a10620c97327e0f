//! Puncture permutations, their signed-permutation decomposition, purity and
//! the homological kernel test.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::surface::{MappingClassElement, PuncturePermutation};

/// An element of `(Z/2)^n ⋊ S_n`: arc `i` goes to arc `perm[i]`, flipped when
/// `signs[i] = -1`. Stored 0-based.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SignedPermutation {
    perm: Vec<usize>,
    signs: Vec<i8>,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        SignedPermutation { perm: (0..n).collect(), signs: vec![1; n] }
    }

    /// From a 1-based arc permutation and a sign vector.
    pub fn new(one_line: &[usize], signs: &[i8]) -> Option<Self> {
        let p = PuncturePermutation::from_one_line(one_line).ok()?;
        if signs.len() != one_line.len() || signs.iter().any(|s| s.abs() != 1) {
            return None;
        }
        Some(SignedPermutation { perm: (0..p.len()).map(|k| p.apply(k)).collect(), signs: signs.to_vec() })
    }

    pub fn arcs(&self) -> usize {
        self.perm.len()
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.perm.iter().map(|x| x + 1).collect()
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// `self · other`: apply `other` first.
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        let perm = other.perm.iter().map(|&k| self.perm[k]).collect();
        let signs = other.perm.iter().zip(&other.signs).map(|(&k, &s)| self.signs[k] * s).collect();
        SignedPermutation { perm, signs }
    }

    /// The induced permutation of the `2n` punctures.
    pub fn to_puncture_permutation(&self) -> PuncturePermutation {
        let mut map = vec![0; 2 * self.arcs()];
        for (i, (&t, &s)) in self.perm.iter().zip(&self.signs).enumerate() {
            let (a, b) = if s > 0 { (2 * t, 2 * t + 1) } else { (2 * t + 1, 2 * t) };
            map[2 * i] = a;
            map[2 * i + 1] = b;
        }
        PuncturePermutation::from_zero_based(map).expect("pairs map to pairs")
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.one_line(), self.signs)
    }
}

pub fn puncture_perm(elem: &MappingClassElement) -> PuncturePermutation {
    elem.perm().clone()
}

/// Decomposes `p` when it maps every endpoint pair onto an endpoint pair.
pub fn signed_decompose(p: &PuncturePermutation, arcs: usize) -> Option<SignedPermutation> {
    if p.len() != 2 * arcs {
        return None;
    }
    let mut perm = Vec::with_capacity(arcs);
    let mut signs = Vec::with_capacity(arcs);
    for i in 0..arcs {
        let (a, b) = (p.apply(2 * i), p.apply(2 * i + 1));
        if a / 2 != b / 2 {
            return None;
        }
        perm.push(a / 2);
        signs.push(if a < b { 1 } else { -1 });
    }
    Some(SignedPermutation { perm, signs })
}

pub fn is_pure(elem: &MappingClassElement) -> bool {
    elem.perm().is_identity()
}

/// Identity action on the homology of the closed surface. Necessary for
/// lying in the kernel of the forgetful map, not sufficient.
pub fn kernel_omega_necessary(elem: &MappingClassElement) -> bool {
    elem.h1_matrix().is_identity()
}

/// The subgroup of `S_{2n}` generated by `gens`, by breadth-first closure.
pub fn permutation_closure(gens: &[PuncturePermutation], size: usize) -> BTreeSet<Vec<usize>> {
    let id = PuncturePermutation::identity(size);
    let mut seen = BTreeSet::from([id.one_line()]);
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let q = g.compose(&p);
            if seen.insert(q.one_line()) {
                queue.push_back(q);
            }
        }
    }
    seen
}

/// `(1 2)` together with `(2i-1 2i+1)(2i 2i+2)` for `i < n`.
pub fn signed_generators(arcs: usize) -> Vec<PuncturePermutation> {
    let size = 2 * arcs;
    let mut gens = vec![PuncturePermutation::from_cycles(size, &[&[1, 2]]).expect("n ≥ 1")];
    for i in 1..arcs {
        gens.push(
            PuncturePermutation::from_cycles(size, &[&[2 * i - 1, 2 * i + 1], &[2 * i, 2 * i + 2]]).expect("in range"),
        );
    }
    gens
}
