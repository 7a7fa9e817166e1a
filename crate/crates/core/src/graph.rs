//! Simple graphs, independence complexes, and the graph-level sufficient
//! conditions for sequential S_2: simplicial vertices, chordless cycles,
//! whiskers, and the five-way battery for bipartite graphs.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::decompose::{is_shellable, is_vertex_decomposable};
use crate::error::{Caps, Error, Result};
use crate::face::{Face, MAX_VERTICES};
use crate::field::FieldSpec;
use crate::report::{CheckReport, Witness};
use crate::rng::SplitMix64;
use crate::serre::{is_seq_cm, is_seq_sr_skeleton};

/// A simple undirected graph on vertices `1..=n`, stored as adjacency
/// bitmasks. No loops, no multi-edges.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

/// Length filter for chordless-cycle enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleParity {
    Any,
    Even,
    Odd,
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::GroundSetTooLarge {
                n,
                max: MAX_VERTICES,
            });
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            for label in [u, v] {
                if label == 0 || label > n {
                    return Err(Error::LabelOutOfRange { label, n });
                }
            }
            if u == v {
                continue; // loops carry no independence information; drop them
            }
            adj[u - 1] |= 1 << (v - 1);
            adj[v - 1] |= 1 << (u - 1);
        }
        Ok(Graph { n, adj })
    }

    /// The cycle C_n with edges {i, i+1} and {n, 1}.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::CycleTooSmall { n });
        }
        let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).collect();
        edges.push((n, 1));
        Graph::new(n, &edges)
    }

    /// The path P_n on n vertices (and n - 1 edges).
    pub fn path(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::PathTooSmall);
        }
        let edges: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).collect();
        Graph::new(n, &edges)
    }

    /// Seeded bipartite graph on parts `1..=a` and `a+1..=a+b`; each cross
    /// pair becomes an edge with the given probability. The draw order is
    /// fixed, so (a, b, p, seed) pins the graph byte for byte.
    pub fn random_bipartite(a: usize, b: usize, p: f64, seed: u64) -> Result<Self> {
        let mut rng = SplitMix64::new(seed);
        let mut edges = Vec::new();
        for i in 1..=a {
            for j in a + 1..=a + b {
                if rng.next_bool(p) {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(a + b, &edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn full_mask(&self) -> u64 {
        (1u64 << self.n) - 1
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 1..=self.n {
            let mut m = self.adj[u - 1] >> u; // neighbors above u
            while m != 0 {
                let v = u + 1 + m.trailing_zeros() as usize;
                out.push((u, v));
                m &= m - 1;
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u >= 1 && u <= self.n && v >= 1 && v <= self.n && self.adj[u - 1] & (1 << (v - 1)) != 0
    }

    /// Open neighborhood of a vertex set, as a mask-backed face.
    pub fn neighborhood(&self, set: Face) -> Face {
        let mut out = 0u64;
        for v in set.vertices() {
            out |= self.adj[v - 1];
        }
        Face::from_mask(out)
    }

    /// Closed neighborhood `N[F] = F ∪ N(F)`; the empty set maps to itself.
    pub fn closed_neighborhood(&self, set: Face) -> Face {
        if set.is_empty() {
            return Face::EMPTY;
        }
        set.union(self.neighborhood(set))
    }

    pub fn is_independent(&self, set: Face) -> bool {
        set.vertices()
            .iter()
            .all(|&v| self.adj[v - 1] & set.mask() == 0)
    }

    /// Two-colorability check.
    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![-1i8; self.n];
        for start in 0..self.n {
            if color[start] != -1 {
                continue;
            }
            color[start] = 0;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let mut m = self.adj[u];
                while m != 0 {
                    let v = m.trailing_zeros() as usize;
                    m &= m - 1;
                    if color[v] == -1 {
                        color[v] = 1 - color[u];
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The independence complex: facets are the maximal independent sets,
    /// found as maximal cliques of the complement (Bron-Kerbosch with
    /// pivoting).
    pub fn independence_complex(&self, caps: &Caps) -> Result<SimplicialComplex> {
        caps.check_n(self.n)?;
        let full = self.full_mask();
        let comp: Vec<u64> = (0..self.n)
            .map(|v| !self.adj[v] & full & !(1u64 << v))
            .collect();
        let mut cliques: Vec<Face> = Vec::new();
        bron_kerbosch(&comp, 0, full, 0, &mut cliques);
        SimplicialComplex::from_facets(self.n, cliques)
    }

    /// Induced subgraph on the complement of `N[F]`, relabeled `1..=m` in
    /// ascending original order. Returns the graph together with the map
    /// from new labels to original ones. `F` must be independent.
    pub fn remove_closed_neighborhood(&self, set: Face) -> Result<(Graph, Vec<usize>)> {
        if !self.is_independent(set) {
            return Err(Error::NotIndependent {
                set: set.vertices(),
            });
        }
        let keep = self.full_mask() & !self.closed_neighborhood(set).mask();
        Ok(self.induced(keep))
    }

    /// Induced subgraph after deleting the given vertices (no neighborhoods
    /// involved), relabeled onto `1..=m` with the label map returned.
    pub fn delete_vertices(&self, s: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut drop = 0u64;
        for &v in s {
            if v == 0 || v > self.n {
                return Err(Error::LabelOutOfRange { label: v, n: self.n });
            }
            drop |= 1 << (v - 1);
        }
        Ok(self.induced(self.full_mask() & !drop))
    }

    /// Connectivity in the usual graph sense (isolated vertices count as
    /// their own components; a graph with at most one vertex is connected).
    pub fn is_connected_graph(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = 1u64;
        let mut frontier = vec![0usize];
        while let Some(u) = frontier.pop() {
            let mut m = self.adj[u] & !seen;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                seen |= 1 << v;
                frontier.push(v);
            }
        }
        seen == self.full_mask()
    }

    /// Induced subgraph on a vertex mask, relabeled onto `1..=m`.
    fn induced(&self, keep: u64) -> (Graph, Vec<usize>) {
        let labels: Vec<usize> = Face::from_mask(keep).vertices();
        let index = |v: usize| labels.binary_search(&v).expect("kept vertex") + 1;
        let mut adj = vec![0u64; labels.len()];
        for &v in &labels {
            let mut m = self.adj[v - 1] & keep;
            while m != 0 {
                let w = m.trailing_zeros() as usize + 1;
                m &= m - 1;
                adj[index(v) - 1] |= 1 << (index(w) - 1);
            }
        }
        (
            Graph {
                n: labels.len(),
                adj,
            },
            labels,
        )
    }

    /// Attaches a pendant whisker to every vertex of `s`: new degree-one
    /// vertices `n+1, n+2, ...` paired with the members of `s` in ascending
    /// order.
    pub fn add_whiskers(&self, s: &[usize]) -> Result<Graph> {
        let mut anchors: Vec<usize> = s.to_vec();
        anchors.sort_unstable();
        anchors.dedup();
        if let Some(&bad) = anchors.iter().find(|&&v| v == 0 || v > self.n) {
            return Err(Error::LabelOutOfRange {
                label: bad,
                n: self.n,
            });
        }
        let mut edges = self.edges();
        for (k, &v) in anchors.iter().enumerate() {
            edges.push((v, self.n + 1 + k));
        }
        Graph::new(self.n + anchors.len(), &edges)
    }

    /// All vertices whose closed neighborhood is a clique; vertices of degree
    /// at most one always qualify.
    pub fn simplicial_vertices(&self) -> Vec<usize> {
        (1..=self.n)
            .filter(|&z| self.is_simplicial_in(z, self.full_mask()))
            .collect()
    }

    fn is_simplicial_in(&self, z: usize, mask: u64) -> bool {
        let nbrs = Face::from_mask(self.adj[z - 1] & mask).vertices();
        nbrs.iter().enumerate().all(|(k, &u)| {
            nbrs[k + 1..]
                .iter()
                .all(|&w| self.adj[u - 1] & (1 << (w - 1)) != 0)
        })
    }

    /// All chordless (induced) cycles of length at least 4, optionally
    /// filtered by parity. Each cycle is reported once, as the vertex
    /// sequence starting at its smallest vertex and continuing toward the
    /// smaller of that vertex's two cycle neighbors; the list is sorted.
    pub fn chordless_cycles(&self, parity: CycleParity, caps: &Caps) -> Result<Vec<Vec<usize>>> {
        caps.check_n(self.n)?;
        Ok(self.chordless_cycles_in(self.full_mask(), parity))
    }

    fn chordless_cycles_in(&self, allowed: u64, parity: CycleParity) -> Vec<Vec<usize>> {
        let keep = |len: usize| match parity {
            CycleParity::Any => true,
            CycleParity::Even => len.is_multiple_of(2),
            CycleParity::Odd => !len.is_multiple_of(2),
        };
        let mut out: Vec<Vec<usize>> = Vec::new();
        let mut path: Vec<usize> = Vec::new();
        for v0 in Face::from_mask(allowed).vertices() {
            let above = allowed & !((1u64 << v0) - 1); // vertices > v0, within scope
            let mut nbrs = Face::from_mask(self.adj[v0 - 1] & above).vertices();
            nbrs.sort_unstable();
            for w in nbrs {
                path.clear();
                path.push(v0);
                path.push(w);
                self.chordless_dfs(v0, above, &mut path, &keep, &mut out);
            }
        }
        out.sort();
        out
    }

    fn chordless_dfs(
        &self,
        v0: usize,
        above: u64,
        path: &mut Vec<usize>,
        keep: &dyn Fn(usize) -> bool,
        out: &mut Vec<Vec<usize>>,
    ) {
        let last = *path.last().expect("nonempty path");
        let path_mask: u64 = path.iter().map(|&v| 1u64 << (v - 1)).sum();
        let internal = path_mask & !(1 << (v0 - 1)) & !(1 << (last - 1));
        let mut m = self.adj[last - 1] & above & !path_mask;
        while m != 0 {
            let u = m.trailing_zeros() as usize + 1;
            m &= m - 1;
            if self.adj[u - 1] & internal != 0 {
                continue; // chord into the interior of the path
            }
            if self.adj[u - 1] & (1 << (v0 - 1)) != 0 {
                // closing edge; canonical direction has the smaller neighbor first
                if path.len() + 1 >= 4 && path[1] < u && keep(path.len() + 1) {
                    let mut cycle = path.clone();
                    cycle.push(u);
                    out.push(cycle);
                }
                // a longer cycle through u would carry the chord {u, v0}
            } else {
                path.push(u);
                self.chordless_dfs(v0, above, path, keep, out);
                path.pop();
            }
        }
    }

    /// All independent sets, as faces in lexicographic order.
    pub fn independent_sets(&self, caps: &Caps) -> Result<Vec<Face>> {
        caps.check_n(self.n)?;
        let mut out: BTreeSet<Face> = BTreeSet::new();
        let mut stack: Vec<(usize, u64)> = vec![(1, 0)];
        while let Some((start, mask)) = stack.pop() {
            out.insert(Face::from_mask(mask));
            for v in start..=self.n {
                if self.adj[v - 1] & mask == 0 {
                    stack.push((v + 1, mask | 1 << (v - 1)));
                }
            }
        }
        Ok(out.into_iter().collect())
    }

    fn is_maximal_independent(&self, set: Face) -> bool {
        self.closed_neighborhood(set).mask() == self.full_mask()
    }

    /// For every independent set F that is not maximal, the graph left after
    /// deleting `N[F]` must have a vertex of degree at most one.
    pub fn condition_iv(&self, caps: &Caps) -> Result<CheckReport> {
        for set in self.independent_sets(caps)? {
            if self.is_maximal_independent(set) {
                continue;
            }
            let rest = self.full_mask() & !self.closed_neighborhood(set).mask();
            let ok = Face::from_mask(rest)
                .vertices()
                .iter()
                .any(|&v| (self.adj[v - 1] & rest).count_ones() <= 1);
            if !ok {
                return Ok(CheckReport::fail(
                    "condition-iv",
                    Witness::IndependentSet {
                        vertices: set.vertices(),
                    },
                ));
            }
        }
        Ok(CheckReport::pass("condition-iv"))
    }

    /// Sufficient conditions for sequential S_2: for every non-maximal
    /// independent F, the graph H left after deleting `N[F]` must (i) have no
    /// chordless even cycle, or (ii) have a simplicial vertex, or (iii) have
    /// a chordless (2t+1)-cycle, t >= 2, carrying t vertices of degree 2 in H
    /// that are independent in H. A true verdict certifies sequential S_2;
    /// a false verdict decides nothing.
    pub fn thm_conditions(&self, caps: &Caps) -> Result<CheckReport> {
        for set in self.independent_sets(caps)? {
            if self.is_maximal_independent(set) {
                continue;
            }
            let rest = self.full_mask() & !self.closed_neighborhood(set).mask();
            if !self.holds_on_induced(rest) {
                return Ok(CheckReport::fail(
                    "thm-conditions",
                    Witness::IndependentSet {
                        vertices: set.vertices(),
                    },
                ));
            }
        }
        Ok(CheckReport::pass("thm-conditions"))
    }

    fn holds_on_induced(&self, mask: u64) -> bool {
        // (i) no chordless even cycle
        let evens = self.chordless_cycles_in(mask, CycleParity::Even);
        if evens.is_empty() {
            return true;
        }
        // (ii) a simplicial vertex
        if Face::from_mask(mask)
            .vertices()
            .iter()
            .any(|&z| self.is_simplicial_in(z, mask))
        {
            return true;
        }
        // (iii) a chordless odd cycle of length 2t+1 with t independent
        // degree-2 vertices; a degree-2 cycle vertex is adjacent only to its
        // cycle neighbors, so independence means no two consecutive on the
        // cycle
        for cycle in self.chordless_cycles_in(mask, CycleParity::Odd) {
            let t = cycle.len() / 2;
            if t < 2 {
                continue;
            }
            let marked: Vec<bool> = cycle
                .iter()
                .map(|&v| (self.adj[v - 1] & mask).count_ones() == 2)
                .collect();
            if max_circular_independent(&marked) >= t {
                return true;
            }
        }
        false
    }

    /// Sufficient condition via whiskers: every chordless even cycle must
    /// contain a vertex adjacent to a degree-one vertex.
    pub fn whiskered_even_cycles(&self, caps: &Caps) -> Result<CheckReport> {
        let deg_one: u64 = (1..=self.n)
            .filter(|&v| self.degree(v) == 1)
            .map(|v| 1u64 << (v - 1))
            .sum();
        for cycle in self.chordless_cycles(CycleParity::Even, caps)? {
            let whiskered = cycle.iter().any(|&v| self.adj[v - 1] & deg_one != 0);
            if !whiskered {
                return Ok(CheckReport::fail(
                    "whiskered-even-cycles",
                    Witness::UnwhiskeredEvenCycle { cycle },
                ));
            }
        }
        Ok(CheckReport::pass("whiskered-even-cycles"))
    }

    /// The five equivalent conditions for a bipartite graph, all evaluated on
    /// the independence complex: vertex decomposability, shellability,
    /// sequential Cohen-Macaulayness, the degree-one deletion condition, and
    /// sequential S_2. Non-bipartite input is rejected.
    pub fn bipartite_battery(&self, field: FieldSpec, caps: &Caps) -> Result<BatteryReport> {
        if !self.is_bipartite() {
            return Err(Error::NotBipartite);
        }
        let delta = self.independence_complex(caps)?;
        Ok(BatteryReport {
            vertex_decomposable: is_vertex_decomposable(&delta, caps)?.verdict,
            shellable: is_shellable(&delta, caps)?.verdict,
            seq_cm: is_seq_cm(&delta, field, caps)?.verdict,
            condition_iv: self.condition_iv(caps)?.verdict,
            seq_s2: is_seq_sr_skeleton(&delta, 2, field, caps)?.verdict,
        })
    }
}

fn bron_kerbosch(adj: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<Face>) {
    if p == 0 && x == 0 {
        out.push(Face::from_mask(r));
        return;
    }
    // pivot: the candidate covering most of P
    let pivot = Face::from_mask(p | x)
        .vertices()
        .into_iter()
        .max_by_key(|&u| (p & adj[u - 1]).count_ones())
        .expect("p | x nonempty");
    let mut candidates = p & !adj[pivot - 1];
    while candidates != 0 {
        let v = candidates.trailing_zeros() as usize + 1;
        candidates &= candidates - 1;
        let bit = 1u64 << (v - 1);
        bron_kerbosch(adj, r | bit, p & adj[v - 1], x & adj[v - 1], out);
        p &= !bit;
        x |= bit;
    }
}

/// Largest subset of marked positions on a cycle with no two cyclically
/// consecutive.
fn max_circular_independent(marked: &[bool]) -> usize {
    fn linear(marked: &[bool]) -> usize {
        let (mut incl, mut excl) = (0usize, 0usize);
        for &m in marked {
            let next_incl = if m { excl + 1 } else { 0 };
            excl = excl.max(incl);
            incl = next_incl;
        }
        incl.max(excl)
    }
    let l = marked.len();
    if l == 0 {
        return 0;
    }
    if l == 1 {
        return usize::from(marked[0]);
    }
    let without_first = linear(&marked[1..]);
    let with_first = if marked[0] {
        1 + linear(&marked[2..l - 1])
    } else {
        0
    };
    without_first.max(with_first)
}

/// The five verdicts of the bipartite equivalence, reported side by side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BatteryReport {
    pub vertex_decomposable: bool,
    pub shellable: bool,
    pub seq_cm: bool,
    pub condition_iv: bool,
    pub seq_s2: bool,
}

impl BatteryReport {
    pub fn verdicts(&self) -> [(&'static str, bool); 5] {
        [
            ("vertex-decomposable", self.vertex_decomposable),
            ("shellable", self.shellable),
            ("seq-cm", self.seq_cm),
            ("condition-iv", self.condition_iv),
            ("seq-s2", self.seq_s2),
        ]
    }

    pub fn unanimous(&self) -> bool {
        let first = self.vertex_decomposable;
        self.verdicts().iter().all(|&(_, v)| v == first)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}; {:?})", self.n, self.edges())
    }
}
