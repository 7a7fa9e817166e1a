//! Reduced and relative simplicial homology over a field, computed exactly
//! from boundary-matrix ranks.
//!
//! Chain groups are augmented: degree -1 is spanned by the empty face, so the
//! homology of `{∅}` is one-dimensional in degree -1 and the reduced homology
//! of anything with a vertex vanishes there. Faces are oriented by the
//! ascending order of their labels.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::complex::{RelativePair, SimplicialComplex};
use crate::error::{Caps, Result};
use crate::face::Face;
use crate::field::FieldSpec;
use crate::linalg::SparseIntMatrix;

/// Dimensions of (reduced or relative) homology per degree; absent degrees
/// are zero.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct HomologyVector {
    dims: BTreeMap<i64, usize>,
}

impl HomologyVector {
    pub fn dim(&self, degree: i64) -> usize {
        self.dims.get(&degree).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, usize)> + '_ {
        self.dims.iter().map(|(&d, &v)| (d, v))
    }

    /// Alternating sum over all degrees (the reduced Euler characteristic
    /// when applied to reduced homology).
    pub fn euler(&self) -> i64 {
        self.dims
            .iter()
            .map(|(&d, &v)| if d.rem_euclid(2) == 0 { v as i64 } else { -(v as i64) })
            .sum()
    }

    fn insert(&mut self, degree: i64, dim: usize) {
        if dim > 0 {
            self.dims.insert(degree, dim);
        }
    }
}

impl fmt::Display for HomologyVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.dims.is_empty() {
            return write!(f, "0");
        }
        for (k, (d, v)) in self.dims.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{d}:{v}")?;
        }
        Ok(())
    }
}

/// The boundary maps of the augmented chain complex: `matrix(i)` sends
/// `i`-chains to `(i-1)`-chains, for `0 <= i <= dim`. Row and column bases
/// are the faces of the respective dimensions in lexicographic order.
#[derive(Debug, Clone)]
pub struct BoundaryMatrices {
    faces: Vec<Vec<Face>>, // index d+1 holds the d-faces, starting at d = -1
    matrices: Vec<SparseIntMatrix>,
}

impl BoundaryMatrices {
    /// Dimension of the chain group in degree `d`.
    pub fn chain_dim(&self, d: i64) -> usize {
        usize::try_from(d + 1)
            .ok()
            .and_then(|i| self.faces.get(i))
            .map_or(0, Vec::len)
    }

    /// The matrix of the boundary map out of degree `i` (for `i >= 0`).
    pub fn matrix(&self, i: i64) -> Option<&SparseIntMatrix> {
        if i < 0 {
            return None;
        }
        self.matrices.get(i as usize)
    }

    pub fn top_dim(&self) -> i64 {
        self.faces.len() as i64 - 2
    }

    pub fn faces_of_dim(&self, d: i64) -> &[Face] {
        usize::try_from(d + 1)
            .ok()
            .and_then(|i| self.faces.get(i))
            .map_or(&[], Vec::as_slice)
    }
}

fn boundary_matrix_between(upper: &[Face], lower: &[Face]) -> SparseIntMatrix {
    let row_index: BTreeMap<Face, usize> =
        lower.iter().enumerate().map(|(i, f)| (*f, i)).collect();
    let mut entries = Vec::new();
    for (col, face) in upper.iter().enumerate() {
        for (pos, v) in face.vertices().into_iter().enumerate() {
            let sub = face.remove(v);
            if let Some(&row) = row_index.get(&sub) {
                let sign = if pos % 2 == 0 { 1 } else { -1 };
                entries.push((row, col, sign));
            }
        }
    }
    SparseIntMatrix::new(lower.len(), upper.len(), entries)
}

/// The full family of boundary matrices of a nonvoid complex, including the
/// augmentation into degree -1.
pub fn boundary_matrices(delta: &SimplicialComplex, caps: &Caps) -> Result<BoundaryMatrices> {
    caps.check_n(delta.n())?;
    let dim = delta.dim().ok_or(crate::error::Error::VoidComplex)?;
    let faces: Vec<Vec<Face>> = (-1..=dim).map(|d| delta.faces_of_dim(d)).collect();
    let matrices = (1..faces.len())
        .map(|i| boundary_matrix_between(&faces[i], &faces[i - 1]))
        .collect();
    Ok(BoundaryMatrices { faces, matrices })
}

/// Reduced homology dimensions in every degree from -1 through `dim`.
pub fn reduced_homology(
    delta: &SimplicialComplex,
    field: FieldSpec,
    caps: &Caps,
) -> Result<HomologyVector> {
    let bm = boundary_matrices(delta, caps)?;
    let dim = bm.top_dim();
    let mut ranks: BTreeMap<i64, usize> = BTreeMap::new();
    for i in 0..=dim {
        ranks.insert(i, bm.matrix(i).expect("matrix in range").rank(field));
    }
    let mut hv = HomologyVector::default();
    for d in -1..=dim {
        let faces = bm.chain_dim(d);
        let rank_out = ranks.get(&d).copied().unwrap_or(0);
        let rank_in = ranks.get(&(d + 1)).copied().unwrap_or(0);
        hv.insert(d, faces - rank_out - rank_in);
    }
    Ok(hv)
}

/// Reduced homology in a single degree; avoids computing ranks the caller
/// does not need.
pub fn reduced_homology_degree(
    delta: &SimplicialComplex,
    degree: i64,
    field: FieldSpec,
    caps: &Caps,
) -> Result<usize> {
    caps.check_n(delta.n())?;
    let Some(dim) = delta.dim() else {
        return Ok(0);
    };
    if degree < -1 || degree > dim {
        return Ok(0);
    }
    let here = delta.faces_of_dim(degree);
    let below = delta.faces_of_dim(degree - 1);
    let above = delta.faces_of_dim(degree + 1);
    let rank_out = if degree >= 0 {
        boundary_matrix_between(&here, &below).rank(field)
    } else {
        0
    };
    let rank_in = boundary_matrix_between(&above, &here).rank(field);
    Ok(here.len() - rank_out - rank_in)
}

fn relative_faces(pair: &RelativePair, d: i64) -> Vec<Face> {
    pair.ambient()
        .faces_of_dim(d)
        .into_iter()
        .filter(|f| !pair.sub().contains(*f))
        .collect()
}

/// Relative homology of the pair: the homology of the quotient chain complex
/// (ambient chains modulo subcomplex chains). With a void subcomplex this is
/// the reduced homology of the ambient complex.
pub fn relative_homology(
    pair: &RelativePair,
    field: FieldSpec,
    caps: &Caps,
) -> Result<HomologyVector> {
    caps.check_n(pair.ambient().n())?;
    let dim = pair
        .ambient()
        .dim()
        .ok_or(crate::error::Error::VoidComplex)?;
    let faces: Vec<Vec<Face>> = (-1..=dim).map(|d| relative_faces(pair, d)).collect();
    let mut ranks: BTreeMap<i64, usize> = BTreeMap::new();
    for i in 0..faces.len() - 1 {
        // faces[i + 1] holds degree-i faces, so this is the map out of degree i
        let m = boundary_matrix_between(&faces[i + 1], &faces[i]);
        ranks.insert(i as i64, m.rank(field));
    }
    let mut hv = HomologyVector::default();
    for d in -1..=dim {
        let idx = (d + 1) as usize;
        let rank_out = ranks.get(&d).copied().unwrap_or(0);
        let rank_in = ranks.get(&(d + 1)).copied().unwrap_or(0);
        hv.insert(d, faces[idx].len() - rank_out - rank_in);
    }
    Ok(hv)
}

/// Relative homology in a single degree.
pub fn relative_homology_degree(
    pair: &RelativePair,
    degree: i64,
    field: FieldSpec,
    caps: &Caps,
) -> Result<usize> {
    caps.check_n(pair.ambient().n())?;
    let Some(dim) = pair.ambient().dim() else {
        return Ok(0);
    };
    if degree < -1 || degree > dim {
        return Ok(0);
    }
    let here = relative_faces(pair, degree);
    let below = relative_faces(pair, degree - 1);
    let above = relative_faces(pair, degree + 1);
    let rank_out = boundary_matrix_between(&here, &below).rank(field);
    let rank_in = boundary_matrix_between(&above, &here).rank(field);
    Ok(here.len() - rank_out - rank_in)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::SimplicialComplex;
    use crate::graph::Graph;

    fn f(labels: &[usize]) -> Face {
        Face::from_vertices(labels.iter().copied()).unwrap()
    }

    fn complex(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(n, facets.iter().map(|v| f(v)).collect()).unwrap()
    }

    fn hollow_triangle() -> SimplicialComplex {
        complex(3, &[&[1, 2], &[1, 3], &[2, 3]])
    }

    #[test]
    fn boundary_of_boundary_vanishes() {
        let caps = Caps::default();
        for delta in [
            hollow_triangle(),
            SimplicialComplex::simplex(4).unwrap(),
            Graph::cycle(6).unwrap().independence_complex(&caps).unwrap(),
        ] {
            let bm = boundary_matrices(&delta, &caps).unwrap();
            for i in 1..=bm.top_dim() {
                let upper = bm.matrix(i).unwrap();
                let lower = bm.matrix(i - 1).unwrap();
                // compose over the integers
                let mut product = std::collections::HashMap::new();
                for &(r1, c1, v1) in &upper.entries {
                    for &(r2, c2, v2) in &lower.entries {
                        if c2 == r1 {
                            *product.entry((r2, c1)).or_insert(0i64) += v1 * v2;
                        }
                    }
                }
                assert!(product.values().all(|v| *v == 0), "∂∘∂ ≠ 0 at degree {i}");
            }
        }
    }

    #[test]
    fn boundary_shapes() {
        let caps = Caps::default();
        let c5 = Graph::cycle(5).unwrap().independence_complex(&caps).unwrap();
        let bm = boundary_matrices(&c5, &caps).unwrap();
        let d1 = bm.matrix(1).unwrap();
        assert_eq!((d1.nrows, d1.ncols), (5, 5));

        let point = complex(1, &[&[1]]);
        let bm = boundary_matrices(&point, &caps).unwrap();
        let d0 = bm.matrix(0).unwrap();
        assert_eq!((d0.nrows, d0.ncols), (1, 1));
        assert_eq!(d0.entries, vec![(0, 0, 1)]);
    }

    #[test]
    fn circle_homology() {
        let caps = Caps::default();
        let hv = reduced_homology(&hollow_triangle(), FieldSpec::Rationals, &caps).unwrap();
        assert_eq!(hv.dim(0), 0);
        assert_eq!(hv.dim(1), 1);
        assert_eq!(hv.dim(-1), 0);
    }

    #[test]
    fn irrelevant_complex_homology() {
        let caps = Caps::default();
        let hv = reduced_homology(
            &SimplicialComplex::irrelevant(2),
            FieldSpec::Rationals,
            &caps,
        )
        .unwrap();
        assert_eq!(hv.dim(-1), 1);
        assert!(hv.iter().all(|(d, _)| d == -1));
    }

    #[test]
    fn pure_two_skeleton_of_c7_is_a_circle() {
        let caps = Caps::default();
        let c7 = Graph::cycle(7).unwrap().independence_complex(&caps).unwrap();
        let skel = c7.pure_skeleton(2).unwrap();
        let hv = reduced_homology(&skel, FieldSpec::Rationals, &caps).unwrap();
        assert_eq!(hv.dim(1), 1);
        assert_eq!(
            reduced_homology_degree(&skel, 1, FieldSpec::Rationals, &caps).unwrap(),
            1
        );
    }

    #[test]
    fn relative_homology_cases() {
        let caps = Caps::default();
        let c5 = Graph::cycle(5).unwrap().independence_complex(&caps).unwrap();

        let same = RelativePair::new(c5.clone(), c5.clone()).unwrap();
        assert!(relative_homology(&same, FieldSpec::Rationals, &caps).unwrap().is_zero());

        let with_void = RelativePair::new(c5.clone(), SimplicialComplex::void(5)).unwrap();
        assert_eq!(
            relative_homology(&with_void, FieldSpec::Rationals, &caps).unwrap(),
            reduced_homology(&c5, FieldSpec::Rationals, &caps).unwrap()
        );

        let edge = complex(2, &[&[1, 2]]);
        let boundary = complex(2, &[&[1], &[2]]);
        let pair = RelativePair::new(edge, boundary).unwrap();
        let hv = relative_homology(&pair, FieldSpec::Rationals, &caps).unwrap();
        assert_eq!(hv.dim(1), 1);
        assert_eq!(hv.iter().count(), 1);
    }

    #[test]
    fn cone_is_acyclic() {
        let caps = Caps::default();
        for delta in [
            hollow_triangle(),
            Graph::cycle(4).unwrap().independence_complex(&caps).unwrap(),
            complex(3, &[&[1, 2], &[3]]),
        ] {
            let cone = delta.cone().unwrap();
            let hv = reduced_homology(&cone, FieldSpec::Rationals, &caps).unwrap();
            assert!(hv.is_zero(), "cone over {delta:?} has homology {hv}");
        }
    }

    #[test]
    fn euler_poincare() {
        let caps = Caps::default();
        for delta in [
            hollow_triangle(),
            Graph::cycle(6).unwrap().independence_complex(&caps).unwrap(),
            complex(4, &[&[1, 2, 3], &[3, 4], &[2, 4]]),
        ] {
            for field in [FieldSpec::Rationals, FieldSpec::PrimeField(2)] {
                let hv = reduced_homology(&delta, field, &caps).unwrap();
                let f_alt: i64 = delta
                    .f_vector(&caps)
                    .unwrap()
                    .iter()
                    .enumerate()
                    .map(|(k, &c)| {
                        // index 0 is dimension -1
                        let d = k as i64 - 1;
                        if d.rem_euclid(2) == 0 { c as i64 } else { -(c as i64) }
                    })
                    .sum();
                assert_eq!(f_alt, hv.euler());
            }
        }
    }

    #[test]
    fn long_exact_sequence_rank_balance() {
        let caps = Caps::default();
        let c6 = Graph::cycle(6).unwrap().independence_complex(&caps).unwrap();
        let sub = c6.pure_skeleton(1).unwrap();
        let pair = RelativePair::new(c6.clone(), sub.clone()).unwrap();
        let field = FieldSpec::Rationals;
        let euler_sub = reduced_homology(&sub, field, &caps).unwrap().euler();
        let euler_amb = reduced_homology(&c6, field, &caps).unwrap().euler();
        let euler_pair = relative_homology(&pair, field, &caps).unwrap().euler();
        assert_eq!(euler_sub - euler_amb + euler_pair, 0);
    }
}
