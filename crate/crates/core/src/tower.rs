//! Derived graphs of constant voltage assignments modulo `p^n`.
//!
//! Vertex `(v, σ)` of a level-`n` derived graph sits at index `σ·|V| + v`
//! and edge `(e, σ)` at index `σ·|E| + e`, so repeated runs produce
//! identical graphs.

use alloc::format;
use alloc::vec::Vec;

use crate::arith;
use crate::graph::{CycleWeightProfile, DirectedMultigraph, Subgraph};
use crate::{Error, NoTowerReason, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if arith::is_prime(p) {
            Ok(Prime(p))
        } else {
            Err(Error::InvalidPrime(p))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }

    /// `p^n`, failing on `u64` overflow.
    pub fn pow(self, n: u32) -> Result<u64> {
        arith::checked_pow(self.0, n)
    }

    pub fn divides(self, n: u64) -> bool {
        n % self.0 == 0
    }
}

impl core::fmt::Display for Prime {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Every edge carries the same voltage `param ∈ Z_p`, represented by an integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConstantVoltage {
    p: Prime,
    param: i64,
}

impl ConstantVoltage {
    pub fn new(p: u64, param: i64) -> Result<Self> {
        Ok(Self { p: Prime::new(p)?, param })
    }

    /// Parameter 1, which every unit parameter is isomorphic to.
    pub fn unit(p: Prime) -> Self {
        Self { p, param: 1 }
    }

    pub fn p(&self) -> Prime {
        self.p
    }

    pub fn param(&self) -> i64 {
        self.param
    }

    pub fn is_unit(&self) -> bool {
        arith::gcd(self.param, self.p.0 as i64) == 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedGraph {
    graph: DirectedMultigraph,
    base_vertex_count: usize,
    level: u32,
    p: Prime,
    modulus: u64,
}

impl DerivedGraph {
    pub fn graph(&self) -> &DirectedMultigraph {
        &self.graph
    }

    pub fn into_graph(self) -> DirectedMultigraph {
        self.graph
    }

    pub fn base_vertex_count(&self) -> usize {
        self.base_vertex_count
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn p(&self) -> Prime {
        self.p
    }

    /// `p^n`.
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn index_of(&self, v: usize, sigma: u64) -> usize {
        sigma as usize * self.base_vertex_count + v
    }

    /// `(v, σ)` for a derived vertex index.
    pub fn vertex_of(&self, index: usize) -> (usize, u64) {
        (index % self.base_vertex_count, (index / self.base_vertex_count) as u64)
    }
}

/// Level-`n` derived graph: base edge `(s, t)` lifts to `(s, σ) → (t, σ + param)`
/// for every `σ ∈ Z/p^nZ`. Level 0 hands back the base graph unchanged.
pub fn derive(base: &DirectedMultigraph, voltage: &ConstantVoltage, n: u32) -> Result<DerivedGraph> {
    let p = voltage.p;
    let modulus = p.pow(n)?;
    if n == 0 {
        return Ok(DerivedGraph { graph: base.clone(), base_vertex_count: base.vertex_count(), level: 0, p, modulus });
    }
    let nv = base.vertex_count();
    let sheets = usize::try_from(modulus).map_err(|_| Error::Overflow)?;
    let vertex_count = sheets.checked_mul(nv).ok_or(Error::Overflow)?;
    let step = arith::rem_euclid(voltage.param, modulus);
    let mut edges = Vec::with_capacity(sheets * base.edge_count());
    for sigma in 0..modulus {
        let target_sheet = ((u128::from(sigma) + u128::from(step)) % u128::from(modulus)) as usize;
        for &(s, t) in base.edges() {
            edges.push((sigma as usize * nv + s, target_sheet * nv + t));
        }
    }
    let labels = (0..sheets).flat_map(|sigma| (0..nv).map(move |v| format!("v{v}@{sigma}"))).collect();
    let name = format!(
        "derive({},p={},n={},param={})",
        base.name().unwrap_or("graph"),
        p,
        n,
        voltage.param
    );
    let graph = DirectedMultigraph::new(vertex_count, edges)?
        .with_labels(labels)?
        .with_name(name)
        .with_directed(base.is_directed());
    Ok(DerivedGraph { graph, base_vertex_count: nv, level: n, p, modulus })
}

/// BFS component count of the underlying undirected graph.
pub fn component_count(g: &DirectedMultigraph) -> Result<usize> {
    g.component_count()
}

/// `p^min(n, v_p(gcd))`, or `p^n` when there is no nonzero cycle weight.
pub fn predicted_component_count(profile: CycleWeightProfile, p: Prime, n: u32) -> Result<u64> {
    match profile.weight_gcd() {
        None | Some(0) => p.pow(n),
        Some(g) => {
            let v = arith::valuation_u64(g, p.get()).unwrap_or(0);
            p.pow(n.min(v))
        }
    }
}

/// `n₀ = v_p(gcd)`, the level from which the component count stays at `p^n₀`.
pub fn stabilization_level(profile: CycleWeightProfile, p: Prime) -> core::result::Result<u32, NoTowerReason> {
    match profile {
        CycleWeightProfile::Acyclic => Err(NoTowerReason::Acyclic),
        CycleWeightProfile::Cyclic { weight_gcd: 0 } => Err(NoTowerReason::ZeroWeightGcd),
        CycleWeightProfile::Cyclic { weight_gcd } => Ok(arith::valuation_u64(weight_gcd, p.get()).unwrap_or(0)),
    }
}

/// The component of the level-`n` derived graph containing `(0, 0)`, and
/// the derived graph it came from.
pub fn tower_component_with_derived(
    base: &DirectedMultigraph,
    voltage: &ConstantVoltage,
    n: u32,
) -> Result<(Subgraph, DerivedGraph)> {
    if !voltage.is_unit() {
        return Err(Error::NotAUnit { value: voltage.param, p: voltage.p.get() });
    }
    let profile = base.cycle_weight_profile()?;
    stabilization_level(profile, voltage.p).map_err(Error::NoTowerExists)?;
    let derived = derive(base, voltage, n)?;
    let component = derived.graph.components().into_iter().next().ok_or(Error::EmptyGraph)?;
    Ok((component, derived))
}

/// The connected component `X̂_n` of the level-`n` derived graph containing
/// `(0, 0)`, re-indexed densely; `vertex_map` points back into the derived graph.
pub fn tower_component(base: &DirectedMultigraph, voltage: &ConstantVoltage, n: u32) -> Result<Subgraph> {
    tower_component_with_derived(base, voltage, n).map(|(c, _)| c)
}

/// Renames `(v, σ)` to `(v, u·σ)`. With `d` derived from parameter `a`, the
/// result equals the graph derived from parameter `u·a`.
pub fn relabel_by_unit(d: &DerivedGraph, u: i64) -> Result<DerivedGraph> {
    if arith::gcd(u, d.p.get() as i64) != 1 {
        return Err(Error::NotAUnit { value: u, p: d.p.get() });
    }
    let m = d.modulus;
    let u = u128::from(arith::rem_euclid(u, m));
    let nv = d.base_vertex_count;
    let perm: Vec<usize> = (0..d.graph.vertex_count())
        .map(|i| {
            let (v, sigma) = d.vertex_of(i);
            let image = (u * u128::from(sigma) % u128::from(m)) as u64;
            d.index_of(v, image)
        })
        .collect();
    debug_assert_eq!(perm.len(), nv * m as usize);
    let mut graph = d.graph.relabeled(&perm)?;
    if let Some(labels) = d.graph.labels() {
        graph = graph.with_labels(labels.to_vec())?;
    }
    Ok(DerivedGraph { graph, ..d.clone() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{bouquet, directed_cycle};

    fn v(p: u64, param: i64) -> ConstantVoltage {
        ConstantVoltage::new(p, param).unwrap()
    }

    #[test]
    fn bouquet_lifts_to_cycle() {
        let d = derive(&bouquet(1), &v(2, 1), 2).unwrap();
        assert_eq!(d.graph().edges(), [(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert_eq!(d.graph().labels().unwrap()[3], "v0@3");
    }

    #[test]
    fn three_cycle_splits_into_three() {
        let c = directed_cycle(3).unwrap();
        let d1 = derive(&c, &v(3, 1), 1).unwrap();
        assert_eq!(d1.graph().vertex_count(), 9);
        assert_eq!(component_count(d1.graph()).unwrap(), 3);
        let d2 = derive(&c, &v(3, 1), 2).unwrap();
        let comps = d2.graph().components();
        assert_eq!(comps.len(), 3);
        assert!(comps.iter().all(|s| s.graph.vertex_count() == 9 && s.graph.edge_count() == 9));
    }

    #[test]
    fn level_zero_is_identity() {
        let c = directed_cycle(4).unwrap().with_name("c4");
        assert_eq!(derive(&c, &v(5, 1), 0).unwrap().into_graph(), c);
    }

    #[test]
    fn rejects_composite() {
        assert_eq!(ConstantVoltage::new(4, 1), Err(Error::InvalidPrime(4)));
        assert_eq!(ConstantVoltage::new(1, 1), Err(Error::InvalidPrime(1)));
    }

    #[test]
    fn predicted_counts() {
        let p3 = Prime::new(3).unwrap();
        let p2 = Prime::new(2).unwrap();
        let gcd = |g| CycleWeightProfile::Cyclic { weight_gcd: g };
        assert_eq!(predicted_component_count(gcd(3), p3, 2).unwrap(), 3);
        assert_eq!(predicted_component_count(gcd(1), p3, 4).unwrap(), 1);
        assert_eq!(predicted_component_count(gcd(2), p2, 3).unwrap(), 2);
        assert_eq!(predicted_component_count(CycleWeightProfile::Acyclic, p2, 3).unwrap(), 8);
        assert_eq!(predicted_component_count(gcd(0), p3, 2).unwrap(), 9);
        let doubled = DirectedMultigraph::new(2, alloc::vec![(0, 1), (1, 0)]).unwrap();
        assert_eq!(derive(&doubled, &v(2, 1), 3).unwrap().graph().component_count().unwrap(), 2);
    }

    #[test]
    fn stabilization() {
        let p3 = Prime::new(3).unwrap();
        let p2 = Prime::new(2).unwrap();
        let c3 = CycleWeightProfile::Cyclic { weight_gcd: 3 };
        assert_eq!(stabilization_level(c3, p3), Ok(1));
        assert_eq!(stabilization_level(c3, p2), Ok(0));
        assert_eq!(stabilization_level(CycleWeightProfile::Acyclic, p2), Err(NoTowerReason::Acyclic));
    }

    #[test]
    fn tower_components() {
        let c = tower_component(&directed_cycle(3).unwrap(), &v(3, 1), 2).unwrap();
        assert_eq!(c.graph.vertex_count(), 9);
        assert_eq!(c.graph.cycle_weight_profile().unwrap(), CycleWeightProfile::Cyclic { weight_gcd: 9 });
        assert_eq!(c.vertex_map[..3], [0, 4, 8]);
        let b = tower_component(&bouquet(1), &v(2, 1), 3).unwrap();
        assert_eq!(b.graph.vertex_count(), 8);
        assert!(b.graph.is_connected().unwrap());
        let tree = DirectedMultigraph::new(2, alloc::vec![(0, 1)]).unwrap();
        assert_eq!(tower_component(&tree, &v(2, 1), 1), Err(Error::NoTowerExists(NoTowerReason::Acyclic)));
        assert_eq!(tower_component(&bouquet(1), &v(3, 6), 1), Err(Error::NotAUnit { value: 6, p: 3 }));
    }

    #[test]
    fn unit_relabeling() {
        let d = derive(&bouquet(1), &v(3, 1), 1).unwrap();
        assert_eq!(relabel_by_unit(&d, 1).unwrap(), d);
        let r = relabel_by_unit(&d, 2).unwrap();
        // σ ↦ 2σ sends 0→1→2→0 to 0→2→1→0
        assert_eq!(r.graph().edges(), [(0, 2), (2, 1), (1, 0)]);
        assert_eq!(r.graph().sorted_edges(), derive(&bouquet(1), &v(3, 2), 1).unwrap().graph().sorted_edges());
        assert_eq!(relabel_by_unit(&d, 3), Err(Error::NotAUnit { value: 3, p: 3 }));
    }

    #[test]
    fn non_unit_parameter_disconnects() {
        let c = directed_cycle(2).unwrap();
        let d = derive(&c, &v(3, 3), 1).unwrap();
        assert!(d.graph().component_count().unwrap() >= 3);
    }
}
