//! Directed multigraphs, degree predicates and cycle weights.
//!
//! The doubled graph `X̃` (every edge plus a reversed partner) is never
//! built. Walking an edge backwards simply contributes weight `-1`.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::arith;
use crate::linalg::BigIntMatrix;
use crate::{Error, Result};

/// A finite directed multigraph. Loops and parallel edges are allowed and
/// the position of an edge in [`edges`](Self::edges) is its identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectedMultigraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    labels: Option<Vec<String>>,
    name: Option<String>,
    directed: bool,
}

/// Per-vertex in/out degrees. A loop adds one to each and to `loop_count`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    pub in_deg: Vec<usize>,
    pub out_deg: Vec<usize>,
    pub loop_count: Vec<usize>,
}

/// The subgroup of `Z` generated by the cycle weights of `X̃`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CycleWeightProfile {
    /// The underlying undirected graph is a forest.
    Acyclic,
    /// Non-negative generator of the weight lattice; 0 when every cycle has weight 0.
    Cyclic { weight_gcd: u64 },
}

impl CycleWeightProfile {
    pub fn weight_gcd(self) -> Option<u64> {
        match self {
            CycleWeightProfile::Acyclic => None,
            CycleWeightProfile::Cyclic { weight_gcd } => Some(weight_gcd),
        }
    }
}

/// A connected component (or other induced piece) together with the index,
/// in the parent graph, of each of its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: DirectedMultigraph,
    pub vertex_map: Vec<usize>,
}

impl DirectedMultigraph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        for (i, &(s, t)) in edges.iter().enumerate() {
            for v in [s, t] {
                if v >= vertex_count {
                    return Err(Error::VertexOutOfRange { edge: i, vertex: v, vertex_count });
                }
            }
        }
        Ok(Self { vertex_count, edges, labels: None, name: None, directed: true })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.vertex_count {
            return Err(Error::LabelCountMismatch { labels: labels.len(), vertex_count: self.vertex_count });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// Marks the edge list as unordered pairs. Used when reading documents
    /// that declare `directed: false`.
    pub fn with_directed(mut self, directed: bool) -> Self {
        self.directed = directed;
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    /// Image under the forgetful map: edges become unordered pairs, stored
    /// as `(min, max)`, with multiplicities and loops kept.
    pub fn underlying_undirected(&self) -> Self {
        let name = match &self.name {
            Some(n) if !self.directed => n.clone(),
            Some(n) => format!("undirected({n})"),
            None => String::from("undirected"),
        };
        Self {
            vertex_count: self.vertex_count,
            edges: self.edges.iter().map(|&(s, t)| (s.min(t), s.max(t))).collect(),
            labels: self.labels.clone(),
            name: Some(name),
            directed: false,
        }
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let n = self.vertex_count;
        let mut p = DegreeProfile {
            in_deg: alloc::vec![0; n],
            out_deg: alloc::vec![0; n],
            loop_count: alloc::vec![0; n],
        };
        for &(s, t) in &self.edges {
            p.out_deg[s] += 1;
            p.in_deg[t] += 1;
            if s == t {
                p.loop_count[s] += 1;
            }
        }
        p
    }

    /// For every vertex, `(neighbour, edge index, +1 if the edge leaves this vertex else -1)`.
    /// Loops are left out; they never join two vertices.
    fn incidence(&self) -> Vec<Vec<(usize, usize, i64)>> {
        let mut inc = alloc::vec![Vec::new(); self.vertex_count];
        for (e, &(s, t)) in self.edges.iter().enumerate() {
            if s != t {
                inc[s].push((t, e, 1));
                inc[t].push((s, e, -1));
            }
        }
        inc
    }

    /// Component id of each vertex, numbered in order of first appearance.
    pub fn component_ids(&self) -> Vec<usize> {
        let inc = self.incidence();
        let mut comp = alloc::vec![usize::MAX; self.vertex_count];
        let mut next = 0;
        let mut queue = VecDeque::new();
        for start in 0..self.vertex_count {
            if comp[start] != usize::MAX {
                continue;
            }
            comp[start] = next;
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                for &(w, _, _) in &inc[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        queue.push_back(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    /// Number of connected components of the underlying undirected graph.
    pub fn component_count(&self) -> Result<usize> {
        if self.vertex_count == 0 {
            return Err(Error::EmptyGraph);
        }
        Ok(self.component_ids().into_iter().max().map_or(0, |m| m + 1))
    }

    pub fn is_connected(&self) -> Result<bool> {
        Ok(self.component_count()? == 1)
    }

    /// Induced subgraphs of the connected components, ordered by their
    /// smallest vertex. Vertices keep their relative order.
    pub fn components(&self) -> Vec<Subgraph> {
        let ids = self.component_ids();
        let count = ids.iter().max().map_or(0, |m| m + 1);
        let mut maps: Vec<Vec<usize>> = alloc::vec![Vec::new(); count];
        let mut local = alloc::vec![0usize; self.vertex_count];
        for (v, &c) in ids.iter().enumerate() {
            local[v] = maps[c].len();
            maps[c].push(v);
        }
        let mut edges: Vec<Vec<(usize, usize)>> = alloc::vec![Vec::new(); count];
        for &(s, t) in &self.edges {
            edges[ids[s]].push((local[s], local[t]));
        }
        maps.into_iter()
            .zip(edges)
            .enumerate()
            .map(|(c, (vertex_map, edges))| {
                let labels = self
                    .labels
                    .as_ref()
                    .map(|ls| vertex_map.iter().map(|&v| ls[v].clone()).collect::<Vec<_>>());
                let name = self.name.as_ref().map(|n| format!("component({n},{c})"));
                let graph = Self { vertex_count: vertex_map.len(), edges, labels, name, directed: self.directed };
                Subgraph { graph, vertex_map }
            })
            .collect()
    }

    /// Weights `θ(u) + 1 - θ(w)` of the fundamental cycles of the non-tree
    /// edges `(u, w)` of a BFS spanning tree rooted at `root`, where `θ` is
    /// the signed tree distance from the root. Loops have weight 1.
    pub fn fundamental_cycle_weights(&self, root: usize) -> Result<Vec<i64>> {
        if self.vertex_count == 0 {
            return Err(Error::EmptyGraph);
        }
        if root >= self.vertex_count {
            return Err(Error::InvalidSpec("BFS root is not a vertex"));
        }
        let inc = self.incidence();
        let mut potential: Vec<Option<i64>> = alloc::vec![None; self.vertex_count];
        let mut tree_edge = alloc::vec![false; self.edges.len()];
        potential[root] = Some(0);
        let mut queue = VecDeque::from([root]);
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            let pv = potential[v].unwrap_or_default();
            for &(w, e, dir) in &inc[v] {
                if potential[w].is_none() {
                    potential[w] = Some(pv + dir);
                    tree_edge[e] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        if reached != self.vertex_count {
            return Err(Error::NotConnected);
        }
        Ok(self
            .edges
            .iter()
            .enumerate()
            .filter(|&(e, _)| !tree_edge[e])
            .map(|(_, &(u, w))| potential[u].unwrap_or_default() + 1 - potential[w].unwrap_or_default())
            .collect())
    }

    pub fn cycle_weight_profile(&self) -> Result<CycleWeightProfile> {
        self.cycle_weight_profile_from(0)
    }

    /// As [`cycle_weight_profile`](Self::cycle_weight_profile) with the BFS
    /// rooted at `root`. The answer does not depend on the root.
    pub fn cycle_weight_profile_from(&self, root: usize) -> Result<CycleWeightProfile> {
        let weights = self.fundamental_cycle_weights(root)?;
        if weights.is_empty() {
            return Ok(CycleWeightProfile::Acyclic);
        }
        let weight_gcd = weights.iter().fold(0u64, |g, &w| arith::gcd(g as i64, w));
        Ok(CycleWeightProfile::Cyclic { weight_gcd })
    }

    pub fn is_balanced(&self) -> bool {
        let p = self.degree_profile();
        p.in_deg == p.out_deg
    }

    /// `Some(k)` when `d_i(v) + d_o(v) = k` for every vertex.
    pub fn constant_total_degree(&self) -> Option<usize> {
        let p = self.degree_profile();
        let mut totals = p.in_deg.iter().zip(&p.out_deg).map(|(i, o)| i + o);
        let k = totals.next()?;
        totals.all(|t| t == k).then_some(k)
    }

    /// `A[i][j]` = number of edges `i → j`; a loop counts once on the diagonal.
    pub fn adjacency_matrix(&self) -> BigIntMatrix {
        let n = self.vertex_count;
        let mut a = BigIntMatrix::zeros(n, n);
        for &(s, t) in &self.edges {
            a[(s, t)] += 1;
        }
        a
    }

    /// Whether `A Aᵗ = Aᵗ A`.
    pub fn is_adjacency_normal(&self) -> bool {
        let a = self.adjacency_matrix();
        let at = a.transpose();
        let lhs = a.mul(&at).expect("square");
        let rhs = at.mul(&a).expect("square");
        lhs == rhs
    }

    /// Renames vertex `v` to `perm[v]`; edge order is kept.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Self> {
        let n = self.vertex_count;
        let mut seen = alloc::vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || core::mem::replace(&mut seen[p], true)) {
            return Err(Error::InvalidSpec("relabeling is not a permutation of the vertices"));
        }
        let labels = self.labels.as_ref().map(|ls| {
            let mut out = alloc::vec![String::new(); n];
            for (v, l) in ls.iter().enumerate() {
                out[perm[v]] = l.clone();
            }
            out
        });
        Ok(Self {
            vertex_count: n,
            edges: self.edges.iter().map(|&(s, t)| (perm[s], perm[t])).collect(),
            labels,
            name: self.name.clone(),
            directed: self.directed,
        })
    }

    /// Edge multiset in a canonical (sorted) order.
    pub fn sorted_edges(&self) -> Vec<(usize, usize)> {
        let mut e = self.edges.clone();
        e.sort_unstable();
        e
    }
}

impl DegreeProfile {
    pub fn total(&self, v: usize) -> usize {
        self.in_deg[v] + self.out_deg[v]
    }
}
