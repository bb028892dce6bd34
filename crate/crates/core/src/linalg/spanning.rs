//! Spanning-tree counts: Kirchhoff's matrix-tree theorem and a brute-force oracle.

use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed};

use super::matrix::{determinant, BigIntMatrix};
use crate::graph::DirectedMultigraph;
use crate::{Error, Result};

/// Largest number of non-loop edges [`brute_force_spanning_trees`] accepts.
pub const BRUTE_FORCE_EDGE_CAP: usize = 16;

/// `L = D - A - Aᵗ` of the underlying undirected graph, with loops dropped.
pub fn laplacian(g: &DirectedMultigraph) -> BigIntMatrix {
    let n = g.vertex_count();
    let mut l = BigIntMatrix::zeros(n, n);
    for &(s, t) in g.edges() {
        if s == t {
            continue;
        }
        l[(s, s)] += 1;
        l[(t, t)] += 1;
        l[(s, t)] -= 1;
        l[(t, s)] -= 1;
    }
    l
}

/// `(-1)^(i+j) det(L_ij)`, the matrix-tree cofactor for any choice of `i, j`.
pub fn laplacian_cofactor(g: &DirectedMultigraph, i: usize, j: usize) -> Result<BigInt> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if i >= n || j >= n {
        return Err(Error::DimensionMismatch);
    }
    let det = determinant(&laplacian(g).minor(i, j))?;
    Ok(if (i + j) % 2 == 0 { det } else { -det })
}

/// Number of spanning trees of the underlying undirected graph.
///
/// Pendant vertices are pruned first: the edge to a degree-one vertex lies
/// in every spanning tree, so removing it leaves the count unchanged. The
/// reduced Laplacian of what remains, in BFS order, is then handed to Bareiss.
pub fn kirchhoff_count(g: &DirectedMultigraph) -> Result<BigUint> {
    if !g.is_connected()? {
        return Err(Error::NotConnected);
    }
    let n = g.vertex_count();
    let mut degree = alloc::vec![0usize; n];
    let mut incident: Vec<Vec<usize>> = alloc::vec![Vec::new(); n];
    for &(s, t) in g.edges() {
        if s != t {
            degree[s] += 1;
            degree[t] += 1;
            incident[s].push(t);
            incident[t].push(s);
        }
    }
    let mut alive = alloc::vec![true; n];
    let mut remaining = n;
    let mut stack: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    while let Some(v) = stack.pop() {
        if !alive[v] || degree[v] != 1 || remaining == 1 {
            continue;
        }
        alive[v] = false;
        remaining -= 1;
        degree[v] = 0;
        if let Some(&w) = incident[v].iter().find(|&&w| alive[w]) {
            degree[w] -= 1;
            if degree[w] == 1 {
                stack.push(w);
            }
        }
    }
    if remaining == 1 {
        return Ok(BigUint::one());
    }
    // BFS order keeps the bandwidth of the reduced Laplacian small, which
    // the elimination exploits
    let start = (0..n).find(|&v| alive[v]).expect("at least two vertices survive");
    let mut kept = alloc::vec![start];
    let mut seen = alloc::vec![false; n];
    seen[start] = true;
    let mut head = 0;
    while head < kept.len() {
        let v = kept[head];
        head += 1;
        for &w in &incident[v] {
            if alive[w] && !seen[w] {
                seen[w] = true;
                kept.push(w);
            }
        }
    }
    let mut index = alloc::vec![usize::MAX; n];
    for (i, &v) in kept.iter().enumerate() {
        index[v] = i;
    }
    // Reduced Laplacian of the pruned graph: row/column of kept[0] removed.
    let m = kept.len() - 1;
    let mut reduced = BigIntMatrix::zeros(m, m);
    for &(s, t) in g.edges() {
        if s == t || !alive[s] || !alive[t] {
            continue;
        }
        let (a, b) = (index[s], index[t]);
        if a > 0 {
            reduced[(a - 1, a - 1)] += 1;
        }
        if b > 0 {
            reduced[(b - 1, b - 1)] += 1;
        }
        if a > 0 && b > 0 {
            reduced[(a - 1, b - 1)] -= 1;
            reduced[(b - 1, a - 1)] -= 1;
        }
    }
    let det = determinant(&reduced)?;
    if !det.is_positive() {
        return Err(Error::StructureViolation("reduced Laplacian of a connected graph is not positive"));
    }
    Ok(det.into_parts().1)
}

/// Counts spanning trees by testing every `(|V|-1)`-subset of the non-loop
/// edges for acyclicity with a union-find.
pub fn brute_force_spanning_trees(g: &DirectedMultigraph) -> Result<BigUint> {
    let edges: Vec<(usize, usize)> = g.edges().iter().copied().filter(|(s, t)| s != t).collect();
    if edges.len() > BRUTE_FORCE_EDGE_CAP {
        return Err(Error::TooLarge { edges: edges.len(), cap: BRUTE_FORCE_EDGE_CAP });
    }
    if !g.is_connected()? {
        return Err(Error::NotConnected);
    }
    let n = g.vertex_count();
    let need = (n - 1) as u32;
    let mut count = 0u64;
    let mut parent = alloc::vec![0usize; n];
    for mask in 0u32..(1u32 << edges.len()) {
        if mask.count_ones() != need {
            continue;
        }
        for (v, p) in parent.iter_mut().enumerate() {
            *p = v;
        }
        let acyclic = edges.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).all(|(_, &(s, t))| {
            let (a, b) = (find(&mut parent, s), find(&mut parent, t));
            parent[a] = b;
            a != b
        });
        if acyclic {
            count += 1;
        }
    }
    Ok(BigUint::from(count))
}

fn find(parent: &mut [usize], mut v: usize) -> usize {
    while parent[v] != v {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    v
}
