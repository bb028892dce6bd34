//! Graph families: directed cycles, bouquets, doubled graphs, abstract
//! `l`-volcanoes, and recognizers for volcano-shaped graphs.
//!
//! Volcano degrees count a loop once, unlike the `D` matrix used for the
//! characteristic series, which counts it twice.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::graph::DirectedMultigraph;
use crate::{Error, Result};

/// `0 → 1 → … → k-1 → 0`. `k = 1` is a single loop.
pub fn directed_cycle(k: usize) -> Result<DirectedMultigraph> {
    if k == 0 {
        return Err(Error::InvalidSpec("a cycle needs at least one vertex"));
    }
    let edges = (0..k).map(|i| (i, (i + 1) % k)).collect();
    Ok(DirectedMultigraph::new(k, edges)?.with_name(format!("cycle({k})")))
}

/// One vertex carrying `loops` self-loops.
pub fn bouquet(loops: usize) -> DirectedMultigraph {
    DirectedMultigraph::new(1, alloc::vec![(0, 0); loops])
        .expect("vertex 0 exists")
        .with_name(format!("bouquet({loops})"))
}

/// Every non-loop edge followed by a reversed partner; loops are kept single.
pub fn doubled(g: &DirectedMultigraph) -> DirectedMultigraph {
    let mut edges = Vec::with_capacity(2 * g.edge_count());
    for &(s, t) in g.edges() {
        edges.push((s, t));
        if s != t {
            edges.push((t, s));
        }
    }
    let mut out = DirectedMultigraph::new(g.vertex_count(), edges).expect("same vertex set");
    if let Some(labels) = g.labels() {
        out = out.with_labels(labels.to_vec()).expect("same vertex count");
    }
    out.with_name(format!("doubled({})", g.name().unwrap_or("graph")))
}

/// A cycle of length `s ≥ 2` in which each step `i → i+1` appears twice.
/// For `s = 2` that puts four edges between the two vertices.
pub fn double_crater(s: usize) -> Result<DirectedMultigraph> {
    if s < 2 {
        return Err(Error::InvalidSpec("a double crater has at least two vertices"));
    }
    let edges = (0..s).flat_map(|i| [(i, (i + 1) % s); 2]).collect();
    Ok(DirectedMultigraph::new(s, edges)?.with_name(format!("double-crater({s})")))
}

/// The bottom layer of a volcano.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CraterSpec {
    /// Cycle graph on `k ≥ 1` vertices; `Cycle(1)` is one looped vertex and
    /// `Cycle(2)` two vertices joined by two edges.
    Cycle(usize),
    SingleVertexOneLoop,
    SingleVertexTwoLoops,
    SingleVertexNoEdge,
}

impl CraterSpec {
    /// `Cycle(1)` and `SingleVertexOneLoop` describe the same graph; this
    /// picks the latter.
    pub fn normalized(self) -> Self {
        match self {
            CraterSpec::Cycle(1) => CraterSpec::SingleVertexOneLoop,
            c => c,
        }
    }

    pub fn vertex_count(self) -> usize {
        match self {
            CraterSpec::Cycle(k) => k,
            _ => 1,
        }
    }

    /// Loops-once degree each crater vertex gets from the crater itself.
    fn crater_degree(self) -> usize {
        match self.normalized() {
            CraterSpec::Cycle(_) | CraterSpec::SingleVertexTwoLoops => 2,
            CraterSpec::SingleVertexOneLoop => 1,
            CraterSpec::SingleVertexNoEdge => 0,
        }
    }
}

impl fmt::Display for CraterSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CraterSpec::Cycle(k) => write!(f, "cycle:{k}"),
            CraterSpec::SingleVertexOneLoop => f.write_str("loop"),
            CraterSpec::SingleVertexTwoLoops => f.write_str("two-loops"),
            CraterSpec::SingleVertexNoEdge => f.write_str("point"),
        }
    }
}

impl FromStr for CraterSpec {
    type Err = Error;

    /// Accepts `cycle:K`, `loop`, `two-loops` and `point`.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "loop" => Ok(CraterSpec::SingleVertexOneLoop),
            "two-loops" => Ok(CraterSpec::SingleVertexTwoLoops),
            "point" => Ok(CraterSpec::SingleVertexNoEdge),
            _ => {
                let k = s
                    .strip_prefix("cycle:")
                    .and_then(|k| k.parse::<usize>().ok())
                    .ok_or(Error::InvalidSpec("crater must be cycle:K, loop, two-loops or point"))?;
                if k == 0 {
                    return Err(Error::InvalidSpec("cycle crater needs K >= 1"));
                }
                Ok(CraterSpec::Cycle(k))
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VolcanoSpec {
    pub l: usize,
    pub depth: usize,
    pub crater: CraterSpec,
}

impl VolcanoSpec {
    pub fn new(l: usize, depth: usize, crater: CraterSpec) -> Result<Self> {
        let spec = Self { l, depth, crater };
        spec.validate()?;
        Ok(spec)
    }

    fn validate(&self) -> Result<()> {
        if self.l < 2 {
            return Err(Error::InvalidSpec("volcano needs l >= 2"));
        }
        if self.crater == CraterSpec::Cycle(0) {
            return Err(Error::InvalidSpec("cycle crater needs K >= 1"));
        }
        Ok(())
    }

    pub fn name(&self) -> String {
        format!("volcano(l={},d={},crater={})", self.l, self.depth, self.crater)
    }
}

/// Builds the abstract `l`-volcano level by level and orients it: crater
/// edges `v_i → v_{i+1}`, every other edge from the lower level to the
/// higher one. Crater vertices come first, then each level in BFS order.
pub fn volcano(spec: &VolcanoSpec) -> Result<DirectedMultigraph> {
    spec.validate()?;
    let k = spec.crater.vertex_count();
    let mut edges: Vec<(usize, usize)> = match spec.crater.normalized() {
        CraterSpec::Cycle(k) => (0..k).map(|i| (i, (i + 1) % k)).collect(),
        CraterSpec::SingleVertexOneLoop => alloc::vec![(0, 0)],
        CraterSpec::SingleVertexTwoLoops => alloc::vec![(0, 0), (0, 0)],
        CraterSpec::SingleVertexNoEdge => Vec::new(),
    };
    let mut vertex_count = k;
    let mut level: Vec<usize> = (0..k).collect();
    for r in 0..spec.depth {
        let children = if r == 0 { spec.l + 1 - spec.crater.crater_degree() } else { spec.l };
        let mut next = Vec::with_capacity(level.len() * children);
        for &parent in &level {
            for _ in 0..children {
                edges.push((parent, vertex_count));
                next.push(vertex_count);
                vertex_count += 1;
            }
        }
        level = next;
    }
    Ok(DirectedMultigraph::new(vertex_count, edges)?.with_name(spec.name()))
}

/// Degree of each vertex of the underlying undirected graph, counting a
/// loop once.
pub fn loops_once_degrees(g: &DirectedMultigraph) -> Vec<usize> {
    let mut deg = alloc::vec![0; g.vertex_count()];
    for &(s, t) in g.edges() {
        deg[s] += 1;
        if s != t {
            deg[t] += 1;
        }
    }
    deg
}

/// Sum of [`loops_once_degrees`].
pub fn total_degree(g: &DirectedMultigraph) -> usize {
    loops_once_degrees(g).iter().sum()
}

/// Closed-form total degree of `volcano(spec)`: `2kl^d` for a cycle crater
/// of length `k ≥ 2` or the two-loop crater (`k = 1`),
/// `(2l^{d+1} - (l+1)) / (l-1)` for a single loop, and
/// `2(l+1)(l^d - 1) / (l-1)` for the bare vertex.
pub fn closed_form_total_degree(spec: &VolcanoSpec) -> Result<u128> {
    spec.validate()?;
    let l = spec.l as u128;
    let d = u32::try_from(spec.depth).map_err(|_| Error::Overflow)?;
    let ld = l.checked_pow(d).ok_or(Error::Overflow)?;
    Ok(match spec.crater.normalized() {
        CraterSpec::Cycle(k) => 2 * k as u128 * ld,
        CraterSpec::SingleVertexTwoLoops => 2 * ld,
        CraterSpec::SingleVertexOneLoop => (2 * l * ld - (l + 1)) / (l - 1),
        CraterSpec::SingleVertexNoEdge => 2 * (l + 1) * (ld - 1) / (l - 1),
    })
}

/// What [`recognize_volcano`] found. `l` is absent at depth 0, where the
/// crater alone carries no information about it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VolcanoShape {
    pub l: Option<usize>,
    pub depth: usize,
    pub crater: CraterSpec,
}

impl VolcanoShape {
    pub fn crater_length(&self) -> usize {
        self.crater.vertex_count()
    }
}

/// Shape of an abstract augmented volcano: a double crater of `crater_length`
/// vertices with trees hanging off it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AugmentedShape {
    pub l: Option<usize>,
    pub depth: usize,
    pub crater_length: usize,
}

struct Layers {
    level: Vec<usize>,
    depth: usize,
    /// neighbours with multiplicity, loops excluded
    adj: Vec<Vec<usize>>,
    loops: Vec<usize>,
    degree: Vec<usize>,
}

/// Peels loop-free degree-one vertices until none are left; whatever
/// survives is the crater candidate, and levels are BFS distances from it.
fn layer(g: &DirectedMultigraph) -> Option<Layers> {
    let n = g.vertex_count();
    let mut adj: Vec<Vec<usize>> = alloc::vec![Vec::new(); n];
    let mut loops = alloc::vec![0usize; n];
    for &(s, t) in g.edges() {
        if s == t {
            loops[s] += 1;
        } else {
            adj[s].push(t);
            adj[t].push(s);
        }
    }
    let mut live_degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut alive = alloc::vec![true; n];
    // whole rounds at once, so a star keeps its centre rather than a leaf
    let mut round: Vec<usize> = (0..n).filter(|&v| loops[v] == 0 && live_degree[v] == 1).collect();
    while !round.is_empty() {
        for &v in &round {
            alive[v] = false;
        }
        let mut touched = Vec::new();
        for &v in &round {
            for &w in &adj[v] {
                if alive[w] {
                    live_degree[w] -= 1;
                    touched.push(w);
                }
            }
        }
        touched.sort_unstable();
        touched.dedup();
        touched.retain(|&w| loops[w] == 0 && live_degree[w] == 1);
        round = touched;
    }
    let mut level = alloc::vec![usize::MAX; n];
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| alive[v]).collect();
    if queue.is_empty() {
        return None;
    }
    for &v in &queue {
        level[v] = 0;
    }
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if level[w] == usize::MAX {
                level[w] = level[v] + 1;
                queue.push_back(w);
            }
        }
    }
    if level.contains(&usize::MAX) {
        return None;
    }
    let depth = level.iter().copied().max().unwrap_or(0);
    let degree = (0..n).map(|v| adj[v].len() + loops[v]).collect();
    Some(Layers { level, depth, adj, loops, degree })
}

impl Layers {
    /// Axioms shared by plain and augmented volcanoes: levels above 0 carry
    /// no internal edges or loops, and each of their vertices has exactly
    /// one edge down.
    fn levels_are_trees(&self) -> bool {
        (0..self.level.len()).filter(|&v| self.level[v] > 0).all(|v| {
            let r = self.level[v];
            self.loops[v] == 0
                && self.adj[v].iter().all(|&w| self.level[w] != r)
                && self.adj[v].iter().filter(|&&w| self.level[w] + 1 == r).count() == 1
        })
    }

    fn crater_vertices(&self) -> Vec<usize> {
        (0..self.level.len()).filter(|&v| self.level[v] == 0).collect()
    }

    /// Crater neighbours of `v` with their edge multiplicities, sorted.
    fn crater_multiplicities(&self, v: usize) -> Vec<(usize, usize)> {
        let mut nbrs: Vec<usize> = self.adj[v].iter().copied().filter(|&w| self.level[w] == 0).collect();
        nbrs.sort_unstable();
        let mut out: Vec<(usize, usize)> = Vec::new();
        for w in nbrs {
            match out.last_mut() {
                Some((last, m)) if *last == w => *m += 1,
                _ => out.push((w, 1)),
            }
        }
        out
    }

    /// Whether the crater vertices form one cycle with every step of
    /// multiplicity `mult` (for three or more vertices).
    fn crater_is_cycle(&self, crater: &[usize], mult: usize) -> bool {
        if crater.iter().any(|&v| self.loops[v] != 0) {
            return false;
        }
        let ok_degrees = crater.iter().all(|&v| {
            let m = self.crater_multiplicities(v);
            m.len() == 2 && m.iter().all(|&(_, k)| k == mult)
        });
        if !ok_degrees {
            return false;
        }
        // walk around; a 2-regular graph is one cycle iff the walk visits everything
        let (start, mut prev, mut cur) = (crater[0], crater[0], self.crater_multiplicities(crater[0])[0].0);
        let mut steps = 1;
        while cur != start {
            let m = self.crater_multiplicities(cur);
            let next = if m[0].0 == prev { m[1].0 } else { m[0].0 };
            prev = cur;
            cur = next;
            steps += 1;
            if steps > crater.len() {
                return false;
            }
        }
        steps == crater.len()
    }

    fn crater_kind(&self) -> Option<CraterSpec> {
        let crater = self.crater_vertices();
        match crater.len() {
            1 => match self.loops[crater[0]] {
                0 => Some(CraterSpec::SingleVertexNoEdge),
                1 => Some(CraterSpec::SingleVertexOneLoop),
                2 => Some(CraterSpec::SingleVertexTwoLoops),
                _ => None,
            },
            2 => {
                let m = self.crater_multiplicities(crater[0]);
                let no_loops = crater.iter().all(|&v| self.loops[v] == 0);
                (no_loops && m == [(crater[1], 2)]).then_some(CraterSpec::Cycle(2))
            }
            k => self.crater_is_cycle(&crater, 1).then_some(CraterSpec::Cycle(k)),
        }
    }

    fn double_crater_length(&self) -> Option<usize> {
        let crater = self.crater_vertices();
        match crater.len() {
            0 | 1 => None,
            2 => {
                let m = self.crater_multiplicities(crater[0]);
                let no_loops = crater.iter().all(|&v| self.loops[v] == 0);
                (no_loops && m == [(crater[1], 4)]).then_some(2)
            }
            k => self.crater_is_cycle(&crater, 2).then_some(k),
        }
    }

    /// Common degree of every vertex at levels `from..depth`, if any.
    fn uniform_degree(&self, from: usize) -> Option<Option<usize>> {
        let mut seen = None;
        for v in 0..self.level.len() {
            let r = self.level[v];
            if r < from || r >= self.depth {
                continue;
            }
            match seen {
                None => seen = Some(self.degree[v]),
                Some(d) if d != self.degree[v] => return None,
                Some(_) => {}
            }
        }
        Some(seen)
    }

    fn leaves_have_degree_one(&self) -> bool {
        (0..self.level.len()).filter(|&v| self.level[v] == self.depth).all(|v| self.degree[v] == 1)
    }
}

fn require_connected(g: &DirectedMultigraph) -> Result<()> {
    if g.is_connected()? {
        Ok(())
    } else {
        Err(Error::NotConnected)
    }
}

/// Classifies `g` (as an undirected graph) as an abstract `l`-volcano.
pub fn recognize_volcano(g: &DirectedMultigraph) -> Result<Option<VolcanoShape>> {
    require_connected(g)?;
    let Some(layers) = layer(g) else { return Ok(None) };
    let Some(crater) = layers.crater_kind() else { return Ok(None) };
    if !layers.levels_are_trees() {
        return Ok(None);
    }
    if layers.depth == 0 {
        return Ok(Some(VolcanoShape { l: None, depth: 0, crater }));
    }
    let Some(Some(upper)) = layers.uniform_degree(0) else { return Ok(None) };
    if upper < 2 || !layers.leaves_have_degree_one() {
        return Ok(None);
    }
    Ok(Some(VolcanoShape { l: Some(upper - 1), depth: layers.depth, crater }))
}

/// `Some(s)` when `g` is a double crater on `s` vertices.
pub fn is_double_crater(g: &DirectedMultigraph) -> Result<Option<usize>> {
    require_connected(g)?;
    let Some(layers) = layer(g) else { return Ok(None) };
    if layers.depth != 0 {
        return Ok(None);
    }
    Ok(layers.double_crater_length())
}

/// Classifies `g` as an abstract augmented `l`-volcano: a double crater
/// whose vertices have degree `l + 3`, inner levels `l + 1`, leaves 1
/// (all degrees 4 at depth 0).
pub fn augmented_volcano_shape(g: &DirectedMultigraph) -> Result<Option<AugmentedShape>> {
    require_connected(g)?;
    let Some(layers) = layer(g) else { return Ok(None) };
    let Some(crater_length) = layers.double_crater_length() else { return Ok(None) };
    if !layers.levels_are_trees() {
        return Ok(None);
    }
    if layers.depth == 0 {
        let all_four = layers.degree.iter().all(|&d| d == 4);
        return Ok(all_four.then_some(AugmentedShape { l: None, depth: 0, crater_length }));
    }
    let crater_degrees = layers.crater_vertices().into_iter().map(|v| layers.degree[v]).collect::<Vec<_>>();
    let top = crater_degrees[0];
    if top < 4 || crater_degrees.iter().any(|&d| d != top) || !layers.leaves_have_degree_one() {
        return Ok(None);
    }
    let l = top - 3;
    match layers.uniform_degree(1) {
        Some(None) => {}
        Some(Some(d)) if d == l + 1 => {}
        _ => return Ok(None),
    }
    Ok(Some(AugmentedShape { l: Some(l), depth: layers.depth, crater_length }))
}

pub fn is_augmented_volcano(g: &DirectedMultigraph) -> Result<bool> {
    augmented_volcano_shape(g).map(|s| s.is_some())
}
