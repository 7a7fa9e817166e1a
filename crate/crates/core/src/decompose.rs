//! Vertex decomposability and nonpure shellability.
//!
//! Vertex decomposability follows the recursive definition for nonpure
//! complexes: a simplex is vertex decomposable, and otherwise some vertex v
//! must have vertex-decomposable deletion and link while no face of the link
//! is a facet of the deletion. Vertices are tried in ascending label order
//! and the first success wins, so witnesses are deterministic.
//!
//! Shellability is the nonpure notion: an order F_1, ..., F_t of the facets
//! such that each F_k meets the complex generated by its predecessors in a
//! pure subcomplex of dimension dim(F_k) - 1. Whether a facet can be attached
//! depends only on the *set* of its predecessors, so the search runs over
//! subsets of facets instead of over all orders.

use std::collections::{HashMap, HashSet};

use crate::complex::SimplicialComplex;
use crate::error::{Caps, Error, Result};
use crate::face::Face;
use crate::report::{CheckReport, Witness};

/// Vertex decomposability, with the chosen shedding vertices (in recursion
/// pre-order: vertex, deletion subtree, link subtree) as the success witness.
pub fn is_vertex_decomposable(delta: &SimplicialComplex, caps: &Caps) -> Result<CheckReport> {
    caps.check_n(delta.n())?;
    if delta.is_void() {
        return Err(Error::VoidComplex);
    }
    let mut memo: HashMap<Vec<u64>, Option<Vec<usize>>> = HashMap::new();
    let witness = vd_rec(delta, &mut memo);
    Ok(match witness {
        Some(vertices) => {
            CheckReport::pass("vertex-decomposable").with_witness(Witness::SheddingVertices { vertices })
        }
        None => CheckReport {
            property: "vertex-decomposable".into(),
            verdict: false,
            r: None,
            field: None,
            witness: None,
        },
    })
}

fn vd_rec(
    delta: &SimplicialComplex,
    memo: &mut HashMap<Vec<u64>, Option<Vec<usize>>>,
) -> Option<Vec<usize>> {
    if delta.facets().len() == 1 {
        // a simplex, including {∅} and a single vertex
        return Some(Vec::new());
    }
    let key = delta.canonical_key();
    if let Some(cached) = memo.get(&key) {
        return cached.clone();
    }
    let mut result = None;
    for vertex in delta.support().vertices() {
        let deletion = delta.deletion(vertex).expect("support vertex in range");
        // shedding condition: no face of the link is a facet of the deletion,
        // i.e. no facet of the deletion stays a face once v is added back
        let sheds = deletion
            .facets()
            .iter()
            .all(|h| !delta.contains(h.insert(vertex)));
        if !sheds {
            continue;
        }
        let link = delta
            .link(Face::from_vertices([vertex]).expect("valid label"))
            .expect("support vertex is a face");
        let Some(del_w) = vd_rec(&deletion, memo) else {
            continue;
        };
        let Some(link_w) = vd_rec(&link, memo) else {
            continue;
        };
        let mut vertices = vec![vertex];
        vertices.extend(del_w);
        vertices.extend(link_w);
        result = Some(vertices);
        break;
    }
    memo.insert(key, result.clone());
    result
}

/// Search for a nonpure shelling order, reported on success. The state space
/// is the set of attachable facet subsets, explored depth-first; complexes
/// with more facets than the cap are refused.
pub fn is_shellable(delta: &SimplicialComplex, caps: &Caps) -> Result<CheckReport> {
    if delta.is_void() {
        return Err(Error::VoidComplex);
    }
    let facets = delta.facets();
    let t = facets.len();
    caps.check_shelling(t)?;
    if t > 63 {
        return Err(Error::CapExceeded {
            cap: "max_shelling_facets",
            limit: 63,
            actual: t,
        });
    }
    if t == 1 {
        return Ok(
            CheckReport::pass("shellable").with_witness(Witness::ShellingOrder {
                facets: facets.to_vec(),
            }),
        );
    }

    let inter: Vec<Vec<Face>> = facets
        .iter()
        .map(|a| facets.iter().map(|b| a.intersection(*b)).collect())
        .collect();

    let attach_ok = |state: u64, k: usize| -> bool {
        let target_card = facets[k].card() - 1;
        // maximal intersections with the already-placed facets must all have
        // cardinality card(F_k) - 1
        let mut maxima: Vec<Face> = Vec::new();
        let mut m = state;
        while m != 0 {
            let j = m.trailing_zeros() as usize;
            m &= m - 1;
            let x = inter[k][j];
            if maxima.iter().any(|y| x.is_subset_of(*y)) {
                continue;
            }
            maxima.retain(|y| !y.is_subset_of(x));
            maxima.push(x);
        }
        maxima.iter().all(|x| x.card() == target_card)
    };

    let full: u64 = (1 << t) - 1;
    let mut visited: HashSet<u64> = HashSet::new();
    let mut parent: HashMap<u64, (u64, usize)> = HashMap::new();
    let mut stack: Vec<u64> = Vec::new();
    for k in 0..t {
        let s = 1u64 << k;
        visited.insert(s);
        stack.push(s);
    }

    let mut reached = None;
    'search: while let Some(state) = stack.pop() {
        for k in 0..t {
            if state & (1 << k) != 0 {
                continue;
            }
            let next = state | (1 << k);
            if visited.contains(&next) || !attach_ok(state, k) {
                continue;
            }
            visited.insert(next);
            parent.insert(next, (state, k));
            if next == full {
                reached = Some(next);
                break 'search;
            }
            stack.push(next);
        }
    }

    match reached {
        Some(mut state) => {
            let mut order_rev = Vec::with_capacity(t);
            while let Some(&(prev, k)) = parent.get(&state) {
                order_rev.push(facets[k]);
                state = prev;
            }
            // the remaining singleton is the first facet
            order_rev.push(facets[state.trailing_zeros() as usize]);
            order_rev.reverse();
            Ok(
                CheckReport::pass("shellable").with_witness(Witness::ShellingOrder {
                    facets: order_rev,
                }),
            )
        }
        None => Ok(CheckReport {
            property: "shellable".into(),
            verdict: false,
            r: None,
            field: None,
            witness: None,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn caps() -> Caps {
        Caps::default()
    }

    fn cycle_complex(n: usize) -> SimplicialComplex {
        Graph::cycle(n).unwrap().independence_complex(&caps()).unwrap()
    }

    #[test]
    fn simplices_are_vertex_decomposable() {
        for delta in [
            SimplicialComplex::simplex(4).unwrap(),
            SimplicialComplex::irrelevant(2),
            SimplicialComplex::from_facets(2, vec![Face::from_vertices([1]).unwrap()]).unwrap(),
        ] {
            assert!(is_vertex_decomposable(&delta, &caps()).unwrap().verdict);
        }
    }

    #[test]
    fn c4_complex_is_not_vertex_decomposable() {
        assert!(!is_vertex_decomposable(&cycle_complex(4), &caps()).unwrap().verdict);
    }

    #[test]
    fn path_complex_is_vertex_decomposable() {
        let p4 = Graph::path(4).unwrap().independence_complex(&caps()).unwrap();
        let report = is_vertex_decomposable(&p4, &caps()).unwrap();
        assert!(report.verdict);
        assert!(matches!(report.witness, Some(Witness::SheddingVertices { .. })));
    }

    #[test]
    fn single_facet_is_shellable() {
        let one = SimplicialComplex::from_facets(
            3,
            vec![Face::from_vertices([1, 2, 3]).unwrap()],
        )
        .unwrap();
        assert!(is_shellable(&one, &caps()).unwrap().verdict);
    }

    #[test]
    fn c4_complex_is_not_shellable() {
        assert!(!is_shellable(&cycle_complex(4), &caps()).unwrap().verdict);
    }

    #[test]
    fn c5_complex_is_shellable_with_a_valid_order() {
        let delta = cycle_complex(5);
        let report = is_shellable(&delta, &caps()).unwrap();
        assert!(report.verdict);
        let Some(Witness::ShellingOrder { facets }) = report.witness else {
            panic!("expected a shelling order");
        };
        assert_eq!(facets.len(), delta.facets().len());
        // replay the order and re-verify every attachment step
        for k in 1..facets.len() {
            let maxima = {
                let mut mx: Vec<Face> = Vec::new();
                for j in 0..k {
                    let x = facets[k].intersection(facets[j]);
                    if mx.iter().any(|y| x.is_subset_of(*y)) {
                        continue;
                    }
                    mx.retain(|y| !y.is_subset_of(x));
                    mx.push(x);
                }
                mx
            };
            assert!(maxima.iter().all(|x| x.card() == facets[k].card() - 1));
        }
    }

    #[test]
    fn vertex_decomposable_implies_shellable_on_small_complexes() {
        for n in 3..=8 {
            let delta = cycle_complex(n);
            let vd = is_vertex_decomposable(&delta, &caps()).unwrap().verdict;
            if delta.facets().len() <= caps().max_shelling_facets {
                let sh = is_shellable(&delta, &caps()).unwrap().verdict;
                assert!(!vd || sh, "C_{n}: vertex decomposable but not shellable");
            }
        }
    }

    #[test]
    fn void_complex_is_rejected() {
        let void = SimplicialComplex::void(3);
        assert_eq!(
            is_vertex_decomposable(&void, &caps()).unwrap_err(),
            Error::VoidComplex
        );
        assert_eq!(is_shellable(&void, &caps()).unwrap_err(), Error::VoidComplex);
    }

    #[test]
    fn facet_cap_is_enforced() {
        let tight = Caps {
            max_shelling_facets: 2,
            ..Caps::default()
        };
        let err = is_shellable(&cycle_complex(5), &tight).unwrap_err();
        assert_eq!(
            err,
            Error::CapExceeded {
                cap: "max_shelling_facets",
                limit: 2,
                actual: 5
            }
        );
    }
}
