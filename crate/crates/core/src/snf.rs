//! Integer matrices and Smith normal form, generic over the integer type.
//!
//! Use [`BigMatrix`](crate::BigMatrix) where entries may grow; fixed-width
//! instantiations are only as safe as their inputs.

use std::fmt;

use num_integer::Integer;
use num_traits::Signed;
use serde::Serialize;

/// Integer types the elimination runs over.
pub trait Scalar: Integer + Signed + Clone + fmt::Debug + fmt::Display {}
impl<T: Integer + Signed + Clone + fmt::Debug + fmt::Display> Scalar for T {}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntegerMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> IntegerMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size, size);
        for i in 0..size {
            m.set(i, i, T::one());
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let n = rows.len();
        IntegerMatrix { rows: n, cols, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: T) {
        self.data[r * self.cols + c] = x;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows)
                .all(|r| (0..self.cols).all(|c| *self.get(r, c) == if r == c { T::one() } else { T::zero() }))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    /// Panics on a dimension mismatch.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = T::zero();
                for k in 0..self.cols {
                    acc = acc + self.get(r, k).clone() * other.get(k, c).clone();
                }
                out.set(r, c, acc);
            }
        }
        out
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> IntegerMatrix<U> {
        IntegerMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for r in 0..self.rows {
                self.data.swap(r * self.cols + a, r * self.cols + b);
            }
        }
    }

    /// row[dst] += k · row[src]
    fn add_row(&mut self, dst: usize, src: usize, k: &T) {
        for c in 0..self.cols {
            let x = self.get(dst, c).clone() + k.clone() * self.get(src, c).clone();
            self.set(dst, c, x);
        }
    }

    /// col[dst] += k · col[src]
    fn add_col(&mut self, dst: usize, src: usize, k: &T) {
        for r in 0..self.rows {
            let x = self.get(r, dst).clone() + k.clone() * self.get(r, src).clone();
            self.set(r, dst, x);
        }
    }
}

impl<T: Scalar> fmt::Display for IntegerMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Diagonal of the Smith normal form: `min(rows, cols)` non-negative entries,
/// each dividing the next, zeros last.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SnfResult<T> {
    pub invariant_factors: Vec<T>,
}

impl<T: Scalar> SnfResult<T> {
    pub fn rank(&self) -> usize {
        self.invariant_factors.iter().filter(|d| !d.is_zero()).count()
    }

    pub fn is_divisibility_chain(&self) -> bool {
        self.invariant_factors.windows(2).all(
            |w| {
                if w[0].is_zero() {
                    w[1].is_zero()
                } else {
                    w[1].is_multiple_of(&w[0])
                }
            },
        ) && self.invariant_factors.iter().all(|d| !d.is_negative())
    }
}

pub fn smith_normal_form<T: Scalar>(m: &IntegerMatrix<T>) -> SnfResult<T> {
    let mut a = m.clone();
    let size = a.rows.min(a.cols);
    let mut diag = Vec::with_capacity(size);
    for t in 0..size {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        let Some((pr, pc)) = smallest_entry(&a, t) else {
            diag.resize(size, T::zero());
            break;
        };
        a.swap_rows(t, pr);
        a.swap_cols(t, pc);
        loop {
            let mut dirty = false;
            for r in t + 1..a.rows {
                if !a.get(r, t).is_zero() {
                    let q = a.get(r, t).div_floor(a.get(t, t));
                    a.add_row(r, t, &-q);
                    dirty |= !a.get(r, t).is_zero();
                }
            }
            for c in t + 1..a.cols {
                if !a.get(t, c).is_zero() {
                    let q = a.get(t, c).div_floor(a.get(t, t));
                    a.add_col(c, t, &-q);
                    dirty |= !a.get(t, c).is_zero();
                }
            }
            if !dirty {
                // Pivot row and column are clear; enforce divisibility.
                let p = a.get(t, t).clone();
                let bad = (t + 1..a.rows).find(|&r| (t + 1..a.cols).any(|c| !a.get(r, c).is_multiple_of(&p)));
                match bad {
                    Some(r) => a.add_row(t, r, &T::one()),
                    None => break,
                }
            }
            let (pr, pc) = smallest_entry_in_cross(&a, t);
            a.swap_rows(t, pr);
            a.swap_cols(t, pc);
        }
        diag.push(a.get(t, t).abs());
    }
    SnfResult { invariant_factors: diag }
}

fn smallest_entry<T: Scalar>(a: &IntegerMatrix<T>, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, T)> = None;
    for r in t..a.rows {
        for c in t..a.cols {
            let x = a.get(r, c).abs();
            if !x.is_zero() && best.as_ref().is_none_or(|b| x < b.2) {
                best = Some((r, c, x));
            }
        }
    }
    best.map(|(r, c, _)| (r, c))
}

// Pivot row or column may hold a smaller remainder after one sweep.
fn smallest_entry_in_cross<T: Scalar>(a: &IntegerMatrix<T>, t: usize) -> (usize, usize) {
    let mut best = (t, t, a.get(t, t).abs());
    let cells = (t..a.rows).map(|r| (r, t)).chain((t..a.cols).map(|c| (t, c)));
    for (r, c) in cells {
        let x = a.get(r, c).abs();
        if !x.is_zero() && (best.2.is_zero() || x < best.2) {
            best = (r, c, x);
        }
    }
    (best.0, best.1)
}

/// A finitely generated abelian group `Z^free_rank ⊕ Z/t1 ⊕ Z/t2 ⊕ …`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct AbelianGroup {
    pub free_rank: usize,
    pub torsion: Vec<String>,
}

impl AbelianGroup {
    pub fn free(rank: usize) -> Self {
        AbelianGroup { free_rank: rank, torsion: Vec::new() }
    }

    /// Cokernel of the relation matrix with one row per relation and one
    /// column per generator.
    pub fn from_relation_matrix<T: Scalar>(m: &IntegerMatrix<T>) -> Self {
        let snf = smith_normal_form(m);
        let torsion =
            snf.invariant_factors.iter().filter(|d| !d.is_zero() && !d.is_one()).map(ToString::to_string).collect();
        AbelianGroup { free_rank: m.cols() - snf.rank(), torsion }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" ⊕ "))
        }
    }
}
