//! Reference Smith forms computed without the library's pivoting strategy.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::Rng;

pub type Rows = Vec<Vec<BigInt>>;

pub fn random_rows(rng: &mut StdRng, max_dim: usize, bound: i64) -> Rows {
    let r = rng.gen_range(1..=max_dim);
    let c = rng.gen_range(1..=max_dim);
    // Sparse matrices reach zero rows and torsion more often than dense ones.
    let density = rng.gen_range(0.2..=1.0);
    (0..r)
        .map(|_| {
            (0..c)
                .map(
                    |_| {
                        if rng.gen_bool(density) {
                            BigInt::from(rng.gen_range(-bound..=bound))
                        } else {
                            BigInt::zero()
                        }
                    },
                )
                .collect()
        })
        .collect()
}

// Row steps touch two rows at once, so plain index loops read best.
#[allow(clippy::needless_range_loop)]
/// Gaussian elimination by 2×2 unimodular gcd steps, then a gcd/lcm sweep of
/// the diagonal.
pub fn naive_invariants(m: &Rows) -> Vec<BigInt> {
    let mut a = m.clone();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let size = rows.min(cols);
    for t in 0..size {
        let Some((pr, pc)) = (t..rows).flat_map(|r| (t..cols).map(move |c| (r, c))).find(|&(r, c)| !a[r][c].is_zero())
        else {
            break;
        };
        a.swap(t, pr);
        for row in a.iter_mut() {
            row.swap(t, pc);
        }
        loop {
            for r in t + 1..rows {
                if a[r][t].is_multiple_of(&a[t][t]) {
                    let f = &a[r][t] / &a[t][t];
                    for c in 0..cols {
                        let x = &f * &a[t][c];
                        a[r][c] -= x;
                    }
                } else {
                    let (p, q) = (a[t][t].clone(), a[r][t].clone());
                    let e = p.extended_gcd(&q);
                    let (pg, qg) = (&p / &e.gcd, &q / &e.gcd);
                    for c in 0..cols {
                        let (x, y) = (a[t][c].clone(), a[r][c].clone());
                        a[t][c] = &e.x * &x + &e.y * &y;
                        a[r][c] = &pg * &y - &qg * &x;
                    }
                }
            }
            for c in t + 1..cols {
                if a[t][c].is_multiple_of(&a[t][t]) {
                    let f = &a[t][c] / &a[t][t];
                    for row in a.iter_mut() {
                        let x = &f * &row[t];
                        row[c] -= x;
                    }
                } else {
                    let (p, q) = (a[t][t].clone(), a[t][c].clone());
                    let e = p.extended_gcd(&q);
                    let (pg, qg) = (&p / &e.gcd, &q / &e.gcd);
                    for row in a.iter_mut() {
                        let (x, y) = (row[t].clone(), row[c].clone());
                        row[t] = &e.x * &x + &e.y * &y;
                        row[c] = &pg * &y - &qg * &x;
                    }
                }
            }
            if (t + 1..rows).all(|r| a[r][t].is_zero()) {
                break;
            }
        }
    }
    let mut d: Vec<BigInt> = (0..size).map(|i| a[i][i].abs()).collect();
    for i in 0..size {
        for j in i + 1..size {
            let g = d[i].gcd(&d[j]);
            let l = if g.is_zero() { BigInt::zero() } else { &d[i] / &g * &d[j] };
            d[i] = g;
            d[j] = l;
        }
    }
    d
}

fn det(m: &[Vec<BigInt>]) -> BigInt {
    match m.len() {
        0 => BigInt::one(),
        1 => m[0][0].clone(),
        n => (0..n)
            .map(|c| {
                let minor: Vec<Vec<BigInt>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(k, _)| k != c).map(|(_, x)| x.clone()).collect())
                    .collect();
                let term = &m[0][c] * det(&minor);
                if c % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .sum(),
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// `d_k / d_{k-1}` where `d_k` is the gcd of all `k×k` minors.
pub fn determinantal_invariants(m: &Rows) -> Vec<BigInt> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut out = Vec::new();
    for k in 1..=rows.min(cols) {
        let mut d = BigInt::zero();
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let minor: Vec<Vec<BigInt>> =
                    rs.iter().map(|&r| cs.iter().map(|&c| m[r][c].clone()).collect()).collect();
                d = d.gcd(&det(&minor));
            }
        }
        out.push(if d.is_zero() { BigInt::zero() } else { &d / &prev });
        if !d.is_zero() {
            prev = d;
        }
    }
    out
}
