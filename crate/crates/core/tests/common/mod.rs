#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use voltage_tower_core::generators::{bouquet, directed_cycle, doubled, volcano, CraterSpec, VolcanoSpec};
use voltage_tower_core::DirectedMultigraph;

pub const PRIMES: [u64; 3] = [2, 3, 5];

pub fn graph(n: usize, edges: &[(usize, usize)], name: &str) -> DirectedMultigraph {
    DirectedMultigraph::new(n, edges.to_vec()).unwrap().with_name(name)
}

pub fn path(len: usize) -> DirectedMultigraph {
    let edges: Vec<_> = (0..len).map(|i| (i, i + 1)).collect();
    graph(len + 1, &edges, &format!("path({len})"))
}

pub fn vol(l: usize, d: usize, crater: CraterSpec) -> DirectedMultigraph {
    volcano(&VolcanoSpec::new(l, d, crater).unwrap()).unwrap()
}

/// Connected multigraph: a random spanning tree with random orientations,
/// then extra edges (loops included) up to `edges` total.
pub fn random_multigraph(seed: u64, vertices: usize, edges: usize) -> DirectedMultigraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut list = Vec::with_capacity(edges);
    for v in 1..vertices {
        let u = rng.gen_range(0..v);
        list.push(if rng.gen_bool(0.5) { (u, v) } else { (v, u) });
    }
    while list.len() < edges {
        let s = rng.gen_range(0..vertices);
        let t = if rng.gen_bool(0.15) { s } else { rng.gen_range(0..vertices) };
        list.push((s, t));
    }
    graph(vertices, &list, &format!("random(seed={seed},v={vertices},e={edges})"))
}

/// Connected graphs with at most 16 edges.
pub fn corpus() -> Vec<DirectedMultigraph> {
    let mut out = Vec::new();
    for k in 1..=6 {
        out.push(directed_cycle(k).unwrap());
    }
    for loops in 1..=4 {
        out.push(bouquet(loops));
    }
    out.push(vol(2, 1, CraterSpec::Cycle(3)));
    out.push(vol(2, 2, CraterSpec::Cycle(2)));
    out.push(vol(2, 1, CraterSpec::Cycle(4)));
    out.push(vol(2, 2, CraterSpec::Cycle(4)));
    out.push(vol(3, 1, CraterSpec::Cycle(3)));
    out.push(vol(2, 1, CraterSpec::SingleVertexOneLoop));
    out.push(vol(2, 2, CraterSpec::SingleVertexOneLoop));
    out.push(vol(2, 1, CraterSpec::SingleVertexTwoLoops));
    out.push(vol(3, 1, CraterSpec::SingleVertexTwoLoops));
    out.push(vol(2, 2, CraterSpec::SingleVertexTwoLoops));
    for len in 1..=4 {
        out.push(doubled(&path(len)));
    }
    out.push(doubled(&vol(2, 1, CraterSpec::Cycle(3))));
    out.push(doubled(&vol(2, 1, CraterSpec::SingleVertexTwoLoops)));
    out.push(doubled(&directed_cycle(5).unwrap()));
    out.push(graph(2, &[(0, 1), (0, 1), (1, 0)], "digon(2,1)"));
    out.push(graph(3, &[(0, 1), (1, 2), (0, 2)], "transitive-triangle"));
    out.push(graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)], "theta"));
    out.push(graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1)], "wheel(3)"));
    out.push(graph(3, &[(0, 1), (1, 2), (2, 0), (0, 0), (1, 1)], "looped-triangle"));
    out.push(path(3));
    for (seed, v, e) in [(1, 3, 5), (2, 4, 7), (3, 5, 8), (4, 5, 10), (5, 6, 9), (6, 6, 12), (7, 4, 9), (8, 7, 11), (9, 3, 7), (10, 6, 14)] {
        out.push(random_multigraph(seed, v, e));
    }
    out
}

/// Connected corpus graphs with a cycle of nonzero weight.
pub fn tower_corpus() -> Vec<DirectedMultigraph> {
    corpus()
        .into_iter()
        .filter(|g| g.cycle_weight_profile().unwrap().weight_gcd().is_some_and(|w| w != 0))
        .collect()
}

pub fn name(g: &DirectedMultigraph) -> &str {
    g.name().unwrap_or("graph")
}
