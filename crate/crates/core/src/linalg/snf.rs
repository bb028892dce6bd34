//! Smith normal form over the integers.

use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use super::matrix::BigIntMatrix;
use super::spanning::laplacian;
use crate::graph::DirectedMultigraph;
use crate::{Error, Result};

/// Invariant factors `d₁ | d₂ | …` of `m`, one per diagonal position
/// (`min(rows, cols)` of them), zeros last.
pub fn smith_normal_form(m: &BigIntMatrix) -> Vec<BigUint> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone().into_rows();
    let diag = rows.min(cols);
    let mut factors = Vec::with_capacity(diag);
    for t in 0..diag {
        // smallest nonzero entry of the trailing block becomes the pivot
        let Some((pi, pj)) = smallest_nonzero(&a, t) else {
            factors.extend((t..diag).map(|_| BigUint::zero()));
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                sub_row(&mut a, i, t, &q, t);
                if !a[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for i in t..rows {
                    let v = &q * &a[i][t];
                    a[i][j] -= v;
                }
                if !a[t][j].is_zero() {
                    clean = false;
                }
            }
            if clean {
                // pivot must also divide the rest of the block; otherwise fold
                // the offending row into the pivot row and keep reducing
                let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
                match bad {
                    None => break,
                    Some(i) => {
                        for j in t..cols {
                            let v = a[i][j].clone();
                            a[t][j] += v;
                        }
                    }
                }
            }
            if let Some((pi, pj)) = smallest_nonzero_in_cross(&a, t) {
                a.swap(t, pi);
                for row in a.iter_mut() {
                    row.swap(t, pj);
                }
            }
        }
        factors.push(a[t][t].magnitude().clone());
    }
    factors
}

fn sub_row(a: &mut [Vec<BigInt>], target: usize, source: usize, q: &BigInt, from: usize) {
    let (lo, hi) = a.split_at_mut(target);
    let src = &lo[source];
    let dst = &mut hi[0];
    for j in from..dst.len() {
        if !src[j].is_zero() {
            dst[j] -= q * &src[j];
        }
    }
}

fn smallest_nonzero(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, x) in row.iter().enumerate().skip(t) {
            if x.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| x.magnitude() < a[bi][bj].magnitude()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Smallest nonzero entry in row `t` or column `t` of the trailing block.
fn smallest_nonzero_in_cross(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best = (t, t);
    let mut found = !a[t][t].is_zero();
    let cells = (t..a.len()).map(|i| (i, t)).chain((t..a[t].len()).map(|j| (t, j)));
    for (i, j) in cells {
        let x = &a[i][j];
        if x.is_zero() {
            continue;
        }
        if !found || x.magnitude() < a[best.0][best.1].magnitude() {
            best = (i, j);
            found = true;
        }
    }
    found.then_some(best)
}

/// Order of the torsion subgroup of the Picard group: the product of the
/// invariant factors of the reduced Laplacian (row and column 0 deleted).
pub fn picard_torsion_order(g: &DirectedMultigraph) -> Result<BigUint> {
    if !g.is_connected()? {
        return Err(Error::NotConnected);
    }
    if g.vertex_count() == 1 {
        return Ok(BigUint::one());
    }
    let reduced = laplacian(g).minor(0, 0);
    let factors = smith_normal_form(&reduced);
    if factors.iter().any(|d| d.is_zero()) {
        return Err(Error::StructureViolation("reduced Laplacian of a connected graph is singular"));
    }
    Ok(factors.iter().product())
}
