//! Seeded instance generators shared by the integration suites. Everything
//! is driven by the crate's own deterministic generator, so every run sees
//! the same instances.
#![allow(dead_code)] // each test target compiles its own copy and uses a subset

use serre_core::{Face, Graph, SimplicialComplex, SplitMix64};

/// A random complex on a ground set of size up to `max_n` (at least 1):
/// between 1 and n+1 random generator faces, reduced to their antichain.
pub fn random_complex(rng: &mut SplitMix64, max_n: usize) -> SimplicialComplex {
    let n = 1 + rng.next_below(max_n as u64) as usize;
    let count = 1 + rng.next_below(n as u64 + 1) as usize;
    let generators: Vec<Face> = (0..count)
        .map(|_| {
            let mask = rng.next_below(1 << n);
            Face::from_vertices((1..=n).filter(|v| mask & (1 << (v - 1)) != 0)).unwrap()
        })
        .collect();
    SimplicialComplex::from_facets(n, generators).unwrap()
}

/// Like [`random_complex`] but suitable for Alexander-dual work: never void
/// and never the full simplex.
pub fn random_dualizable_complex(rng: &mut SplitMix64, max_n: usize) -> SimplicialComplex {
    loop {
        let delta = random_complex(rng, max_n);
        let full = Face::from_vertices(1..=delta.n()).unwrap();
        if !delta.is_void() && !delta.contains(full) {
            return delta;
        }
    }
}

/// A random graph on exactly `n` vertices with the given edge probability.
pub fn random_graph(rng: &mut SplitMix64, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.next_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// A pool of complexes that actually satisfy S_r for various r, mixed with
/// random ones; heredity suites need true premises to bite on.
pub fn heredity_pool(rng: &mut SplitMix64, count: usize) -> Vec<SimplicialComplex> {
    let caps = serre_core::Caps::default();
    let mut pool: Vec<SimplicialComplex> = Vec::new();
    for n in [3usize, 5, 7] {
        pool.push(Graph::cycle(n).unwrap().independence_complex(&caps).unwrap());
    }
    for n in 2..=5 {
        let simplex = SimplicialComplex::simplex(n).unwrap();
        pool.push(simplex.skeleton(n as i64 - 2).unwrap());
        pool.push(simplex);
    }
    for n in 3..=6 {
        pool.push(Graph::path(n).unwrap().independence_complex(&caps).unwrap());
    }
    while pool.len() < count {
        let delta = random_complex(rng, 7);
        if delta.is_void() {
            continue;
        }
        // cones are Cohen-Macaulay over anything that is; they enrich the
        // pool with nontrivial S_r instances
        if pool.len().is_multiple_of(3) {
            if let Ok(cone) = delta.cone() {
                pool.push(cone);
                continue;
            }
        }
        pool.push(delta);
    }
    pool.truncate(count);
    pool
}
