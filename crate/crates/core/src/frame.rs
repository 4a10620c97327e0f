//! Geometric bases of π₁ of the bordered surface, and Dehn twists read off
//! from them.
//!
//! A frame is an ordered list of blocks together with an automorphism `phi`
//! taking role letters to actual words. A puncture block with roles
//! `r1 … rk` contributes `r1⋯rk` to the boundary word, a handle block with
//! roles `(a, b)` contributes `a b a⁻¹ b⁻¹`. The product of all block words,
//! pushed through `phi`, always equals the boundary word
//! `z1⋯z2n · [vg,ug] ⋯ [v1,u1]`.
//!
//! Any run of consecutive blocks is cut off by a simple closed curve, and the
//! twist along it conjugates the run by its product. Reordering blocks by the
//! half-braid moves below produces every curve the catalog needs.

use std::collections::HashMap;

use crate::endo::{FreeAutomorphism, FreeEndomorphism};
use crate::surface::{u, v, z, SurfaceConfig};
use crate::word::{commutator, Alphabet, FreeWord, Symbol};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum BlockKind {
    Punctures,
    Handle,
}

#[derive(Clone, Debug)]
pub(crate) struct Block {
    kind: BlockKind,
    roles: Vec<Symbol>,
}

impl Block {
    fn product(&self) -> FreeWord {
        let gens: Vec<FreeWord> = self.roles.iter().map(|r| FreeWord::gen(*r)).collect();
        match self.kind {
            BlockKind::Punctures => gens.iter().fold(FreeWord::identity(), |acc, w| acc.multiply(w)),
            BlockKind::Handle => commutator(&gens[0], &gens[1]),
        }
    }
}

/// Which simple curve of a handle block to twist along.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum HandleCurve {
    /// The curve of the second role (`u` in the standard frame).
    Longitude,
    /// The curve of the first role (`v` in the standard frame).
    Meridian,
}

#[derive(Clone, Debug)]
pub(crate) struct Frame {
    alphabet: Alphabet,
    blocks: Vec<Block>,
    phi: FreeAutomorphism,
}

impl Frame {
    /// Arc pairs in order, then handles `g` down to `1`.
    pub(crate) fn standard(cfg: &SurfaceConfig) -> Frame {
        let mut blocks = Vec::new();
        for i in 1..=cfg.arcs() {
            blocks.push(Block { kind: BlockKind::Punctures, roles: vec![z(2 * i - 1), z(2 * i)] });
        }
        for j in (1..=cfg.genus()).rev() {
            blocks.push(Block { kind: BlockKind::Handle, roles: vec![v(j), u(j)] });
        }
        let alphabet = cfg.full_alphabet().clone();
        let phi = FreeAutomorphism::identity(&alphabet);
        Frame { alphabet, blocks, phi }
    }

    /// Index of the block holding `role`.
    pub(crate) fn find(&self, role: &Symbol) -> usize {
        self.blocks.iter().position(|b| b.roles.contains(role)).expect("role present in frame")
    }

    /// Splits a puncture block into one block per puncture.
    pub(crate) fn split(&mut self, b: usize) {
        let block = self.blocks.remove(b);
        assert_eq!(block.kind, BlockKind::Punctures);
        for (k, r) in block.roles.into_iter().enumerate() {
            self.blocks.insert(b + k, Block { kind: BlockKind::Punctures, roles: vec![r] });
        }
    }

    fn change_basis(&mut self, fwd: HashMap<Symbol, FreeWord>, bwd: HashMap<Symbol, FreeWord>) {
        let e = FreeAutomorphism::new(
            FreeEndomorphism::from_map(&self.alphabet, &fwd).expect("frame alphabet"),
            FreeEndomorphism::from_map(&self.alphabet, &bwd).expect("frame alphabet"),
        )
        .expect("basis change is invertible");
        self.phi = self.phi.compose(&e).expect("frame alphabet");
    }

    /// Blocks `b-1, b` become `b', b-1`, the moving block conjugated by the other.
    pub(crate) fn exchange_left(&mut self, b: usize) {
        let x = self.blocks[b - 1].product();
        let xi = x.inverse();
        let (mut fwd, mut bwd) = (HashMap::new(), HashMap::new());
        for r in &self.blocks[b].roles {
            let g = FreeWord::gen(*r);
            fwd.insert(*r, g.conjugate_by(&x));
            bwd.insert(*r, g.conjugate_by(&xi));
        }
        self.change_basis(fwd, bwd);
        self.blocks.swap(b - 1, b);
    }

    /// Blocks `b, b+1` become `b+1, b'`, the moving block conjugated by the other.
    pub(crate) fn exchange_right(&mut self, b: usize) {
        let y = self.blocks[b + 1].product();
        let yi = y.inverse();
        let (mut fwd, mut bwd) = (HashMap::new(), HashMap::new());
        for r in &self.blocks[b].roles {
            let g = FreeWord::gen(*r);
            fwd.insert(*r, g.conjugate_by(&yi));
            bwd.insert(*r, g.conjugate_by(&y));
        }
        self.change_basis(fwd, bwd);
        self.blocks.swap(b, b + 1);
    }

    /// Moves the block at `from` to position `to` by repeated exchanges.
    pub(crate) fn move_block(&mut self, from: usize, to: usize) {
        let mut at = from;
        while at > to {
            self.exchange_left(at);
            at -= 1;
        }
        while at < to {
            self.exchange_right(at);
            at += 1;
        }
    }

    /// Block `b` followed by handle `b+1` with roles `(a, c)` becomes the
    /// handle with first role `x·a` followed by block `b` conjugated by `c`,
    /// from `x·[a,c] = [x a, c]·(c x c⁻¹)`. The handle's first role then
    /// represents the band sum of the block boundary with that handle curve.
    pub(crate) fn band_sum(&mut self, b: usize) {
        assert_eq!(self.blocks[b + 1].kind, BlockKind::Handle);
        let x = self.blocks[b].product();
        let a = self.blocks[b + 1].roles[0];
        let c = FreeWord::gen(self.blocks[b + 1].roles[1]);
        let ci = c.inverse();
        let (mut fwd, mut bwd) = (HashMap::new(), HashMap::new());
        let ga = FreeWord::gen(a);
        fwd.insert(a, x.multiply(&ga));
        bwd.insert(a, x.conjugate_by(&ci).inverse().multiply(&ga));
        for r in &self.blocks[b].roles {
            let g = FreeWord::gen(*r);
            fwd.insert(*r, g.conjugate_by(&c));
            bwd.insert(*r, g.conjugate_by(&ci));
        }
        self.change_basis(fwd, bwd);
        self.blocks.swap(b, b + 1);
    }

    fn conjugate_into_place(&self, t0: &FreeAutomorphism) -> FreeAutomorphism {
        self.phi.compose(t0).and_then(|t| t.compose(&self.phi.inverse())).expect("frame alphabet")
    }

    /// Twist along the curve enclosing blocks `first..=last`.
    pub(crate) fn twist(&self, first: usize, last: usize, exp: i32) -> FreeAutomorphism {
        let p = self.blocks[first..=last].iter().fold(FreeWord::identity(), |acc, b| acc.multiply(&b.product()));
        let (c, ci) = if exp >= 0 { (p.clone(), p.inverse()) } else { (p.inverse(), p) };
        let (mut fwd, mut bwd) = (HashMap::new(), HashMap::new());
        for r in self.blocks[first..=last].iter().flat_map(|b| b.roles.iter()) {
            let g = FreeWord::gen(*r);
            fwd.insert(*r, g.conjugate_by(&c));
            bwd.insert(*r, g.conjugate_by(&ci));
        }
        let t0 = FreeAutomorphism::new(
            FreeEndomorphism::from_map(&self.alphabet, &fwd).expect("frame alphabet"),
            FreeEndomorphism::from_map(&self.alphabet, &bwd).expect("frame alphabet"),
        )
        .expect("run twist is invertible");
        self.conjugate_into_place(&t0)
    }

    /// Twist along one of the two simple curves of handle block `b`.
    pub(crate) fn handle_twist(&self, b: usize, curve: HandleCurve, exp: i32) -> FreeAutomorphism {
        let block = &self.blocks[b];
        assert_eq!(block.kind, BlockKind::Handle);
        let t0 = handle_twist_in(&self.alphabet, &block.roles[0], &block.roles[1], curve);
        let t0 = if exp >= 0 { t0 } else { t0.inverse() };
        self.conjugate_into_place(&t0)
    }
}

/// Twist on a handle with roles `(a, c)`: along `c` sends `a ↦ a c`, along
/// `a` sends `c ↦ c a⁻¹`; both fix `[a, c]`.
pub(crate) fn handle_twist_in(alphabet: &Alphabet, a: &Symbol, c: &Symbol, curve: HandleCurve) -> FreeAutomorphism {
    let ga = FreeWord::gen(*a);
    let gc = FreeWord::gen(*c);
    let (mut fwd, mut bwd) = (HashMap::new(), HashMap::new());
    match curve {
        HandleCurve::Longitude => {
            fwd.insert(*a, ga.multiply(&gc));
            bwd.insert(*a, ga.multiply(&gc.inverse()));
        }
        HandleCurve::Meridian => {
            fwd.insert(*c, gc.multiply(&ga.inverse()));
            bwd.insert(*c, gc.multiply(&ga));
        }
    }
    FreeAutomorphism::new(
        FreeEndomorphism::from_map(alphabet, &fwd).expect("handle roles in alphabet"),
        FreeEndomorphism::from_map(alphabet, &bwd).expect("handle roles in alphabet"),
    )
    .expect("handle twist is invertible")
}
