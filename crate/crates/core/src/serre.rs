//! Decision procedures for Serre's condition S_r, Cohen-Macaulayness, and
//! their sequential variants.
//!
//! S_r is decided through the homological criterion on links: a complex of
//! dimension d-1 satisfies S_r iff for all -1 <= i <= r-2 and every face F
//! with #F <= d-i-2 the reduced homology H~_i of the link of F vanishes. The
//! i = -1 part is purity and the i = 0 part is connectedness of the link,
//! so those two levels never touch a matrix.
//!
//! Sequential S_r has three interchangeable deciders: over pure skeletons,
//! over the relative complexes built from facets of a fixed dimension, and
//! (for r = 2) a local recursion on vertex links. They are proved equivalent
//! and the test suite holds them to that.
//!
//! Degenerate inputs are S_r for every r: the void complex, `{∅}` and
//! 0-dimensional complexes all leave the criterion's quantifier range empty.

use std::collections::HashMap;

use crate::complex::{RelativePair, SimplicialComplex};
use crate::error::{Caps, Error, Result};
use crate::face::Face;
use crate::field::FieldSpec;
use crate::homology::{reduced_homology, reduced_homology_degree, relative_homology_degree};
use crate::report::{CheckReport, Witness};

/// Serre's condition S_r, via the link criterion. Failures report the first
/// offending pair in lexicographic (degree, face) order.
pub fn is_sr(
    delta: &SimplicialComplex,
    r: u32,
    field: FieldSpec,
    caps: &Caps,
) -> Result<CheckReport> {
    let report = |verdict| {
        CheckReport {
            property: "s".into(),
            verdict,
            r: Some(r),
            field: Some(field),
            witness: None,
        }
    };
    if r < 2 {
        return Err(Error::InvalidR { r });
    }
    let Some(dim) = delta.dim() else {
        return Ok(report(true)); // void: vacuous
    };
    let d = dim + 1;

    // i = -1: the vanishing condition is purity
    if let Some(facet) = delta.impure_witness() {
        return Ok(report(false).with_witness(Witness::ImpureFacet { facet }));
    }

    let mut links: HashMap<Face, SimplicialComplex> = HashMap::new();
    for i in 0..=(r as i64 - 2) {
        let max_card = d - i - 2;
        if max_card < 0 {
            break;
        }
        for face in delta.faces_up_to_card(max_card as usize) {
            let link = links
                .entry(face)
                .or_insert_with(|| delta.link(face).expect("enumerated face"));
            if i == 0 {
                // H~_0 = 0 is connectedness
                if !link.is_connected() {
                    return Ok(report(false).with_witness(Witness::DisconnectedLink { face }));
                }
            } else {
                let h = reduced_homology_degree(link, i, field, caps)?;
                if h > 0 {
                    return Ok(report(false).with_witness(Witness::LinkHomology {
                        face,
                        degree: i,
                        dim: h,
                    }));
                }
            }
        }
    }
    Ok(report(true))
}

/// Cohen-Macaulayness by Reisner's criterion: every link has vanishing
/// reduced homology below its own dimension. Cross-asserted against
/// `is_sr(delta, dim + 1)`, the S_r formulation of the same condition.
pub fn is_cm(delta: &SimplicialComplex, field: FieldSpec, caps: &Caps) -> Result<CheckReport> {
    let report = |verdict| {
        CheckReport {
            property: "cm".into(),
            verdict,
            r: None,
            field: Some(field),
            witness: None,
        }
    };
    let Some(dim) = delta.dim() else {
        return Ok(report(true));
    };

    let mut out = report(true);
    'faces: for face in delta.faces_up_to_card((dim + 1) as usize) {
        let link = delta.link(face).expect("enumerated face");
        let link_dim = link.dim().expect("links of faces are nonvoid");
        if link_dim <= -1 {
            continue;
        }
        let hv = reduced_homology(&link, field, caps)?;
        for degree in -1..link_dim {
            let h = hv.dim(degree);
            if h > 0 {
                out = report(false).with_witness(Witness::LinkHomology {
                    face,
                    degree,
                    dim: h,
                });
                break 'faces;
            }
        }
    }

    // the two formulations guard one another
    if dim >= 1 {
        let sr = is_sr(delta, (dim + 1) as u32, field, caps)?;
        assert_eq!(
            sr.verdict, out.verdict,
            "Reisner and S_(dim+1) disagree on {delta:?}"
        );
    }
    Ok(out)
}

/// Relative S_r: the link-vanishing criterion on pairs of links,
/// `H~_i(lk_ambient F, lk_sub F) = 0` over the same (i, F) range, with the
/// dimension taken from the ambient complex.
pub fn is_relative_sr(
    pair: &RelativePair,
    r: u32,
    field: FieldSpec,
    caps: &Caps,
) -> Result<CheckReport> {
    let report = |verdict| {
        CheckReport {
            property: "relative-s".into(),
            verdict,
            r: Some(r),
            field: Some(field),
            witness: None,
        }
    };
    if r < 2 {
        return Err(Error::InvalidR { r });
    }
    let Some(dim) = pair.ambient().dim() else {
        return Ok(report(true));
    };
    let d = dim + 1;

    let mut link_pairs: HashMap<Face, RelativePair> = HashMap::new();
    for i in -1..=(r as i64 - 2) {
        let max_card = d - i - 2;
        if max_card < 0 {
            continue;
        }
        for face in pair.ambient().faces_up_to_card(max_card as usize) {
            let lp = match link_pairs.entry(face) {
                std::collections::hash_map::Entry::Occupied(e) => e.into_mut(),
                std::collections::hash_map::Entry::Vacant(e) => {
                    let ambient_link = pair.ambient().link(face).expect("enumerated face");
                    let sub_link = if pair.sub().contains(face) {
                        pair.sub().link(face).expect("face of subcomplex")
                    } else {
                        SimplicialComplex::void(pair.sub().n())
                    };
                    e.insert(RelativePair::new(ambient_link, sub_link)?)
                }
            };
            let h = relative_homology_degree(lp, i, field, caps)?;
            if h > 0 {
                return Ok(report(false).with_witness(Witness::RelativeHomology {
                    face,
                    degree: i,
                    dim: h,
                }));
            }
        }
    }
    Ok(report(true))
}

/// Sequential S_r through pure skeletons: the complex is sequentially S_r
/// iff every pure i-skeleton is S_r.
pub fn is_seq_sr_skeleton(
    delta: &SimplicialComplex,
    r: u32,
    field: FieldSpec,
    caps: &Caps,
) -> Result<CheckReport> {
    if r < 2 {
        return Err(Error::InvalidR { r });
    }
    let base = CheckReport::pass("seq-s-skeleton").with_r(r).with_field(field);
    let Some(dim) = delta.dim() else {
        return Ok(base);
    };
    for i in -1..=dim {
        let skeleton = delta.pure_skeleton(i)?;
        let inner = is_sr(&skeleton, r, field, caps)?;
        if !inner.verdict {
            let mut out = base;
            out.verdict = false;
            out.witness = Some(Witness::PureSkeleton {
                index: i,
                inner: Box::new(inner.witness.expect("failing subcheck carries a witness")),
            });
            return Ok(out);
        }
    }
    Ok(base)
}

/// Sequential Cohen-Macaulayness: every pure skeleton is Cohen-Macaulay.
pub fn is_seq_cm(delta: &SimplicialComplex, field: FieldSpec, caps: &Caps) -> Result<CheckReport> {
    let base = CheckReport::pass("seq-cm").with_field(field);
    let Some(dim) = delta.dim() else {
        return Ok(base);
    };
    for i in -1..=dim {
        let skeleton = delta.pure_skeleton(i)?;
        let inner = is_cm(&skeleton, field, caps)?;
        if !inner.verdict {
            let mut out = base;
            out.verdict = false;
            out.witness = Some(Witness::PureSkeleton {
                index: i,
                inner: Box::new(inner.witness.expect("failing subcheck carries a witness")),
            });
            return Ok(out);
        }
    }
    Ok(base)
}

/// Sequential S_r through the facet-dimension decomposition: for each
/// dimension i carrying a facet, the relative complex
/// (Delta*_i, Delta*_i ∩ (Delta*_{i+1} ∪ ... ∪ Delta*_dim)) must be S_r,
/// where Delta*_i is generated by the facets of dimension exactly i.
pub fn is_seq_sr_relative(
    delta: &SimplicialComplex,
    r: u32,
    field: FieldSpec,
    caps: &Caps,
) -> Result<CheckReport> {
    if r < 2 {
        return Err(Error::InvalidR { r });
    }
    let base = CheckReport::pass("seq-s-relative").with_r(r).with_field(field);
    if delta.is_void() {
        return Ok(base);
    }
    let dims = delta.facet_dims();

    // suffix unions of the facet-generated subcomplexes, from the top down
    let mut upper = SimplicialComplex::void(delta.n());
    let mut pairs: Vec<(i64, RelativePair)> = Vec::new();
    for &i in dims.iter().rev() {
        let ambient = delta.facet_generated(i)?;
        let sub = ambient.intersection(&upper)?;
        pairs.push((i, RelativePair::new(ambient.clone(), sub)?));
        upper = upper.union(&ambient)?;
    }
    pairs.reverse();

    for (i, pair) in pairs {
        let inner = is_relative_sr(&pair, r, field, caps)?;
        if !inner.verdict {
            let mut out = base;
            out.verdict = false;
            out.witness = Some(Witness::FacetDimensionPair {
                dim: i,
                inner: Box::new(inner.witness.expect("failing subcheck carries a witness")),
            });
            return Ok(out);
        }
    }
    Ok(base)
}

/// Sequential S_2 through the local criterion: every pure i-skeleton with
/// i >= 1 is connected, and the link of every vertex is again sequentially
/// S_2. The recursion bottoms out at dimension <= 0 and memoizes on
/// canonical facet lists, since vertex links repeat heavily.
pub fn is_seq_s2_local(
    delta: &SimplicialComplex,
    field: FieldSpec,
    caps: &Caps,
) -> Result<CheckReport> {
    caps.check_n(delta.n())?;
    let base = CheckReport::pass("seq-s2-local").with_r(2).with_field(field);
    let mut memo: HashMap<Vec<u64>, Option<Witness>> = HashMap::new();
    match local_rec(delta, &mut memo) {
        None => Ok(base),
        Some(witness) => {
            let mut out = base;
            out.verdict = false;
            out.witness = Some(witness);
            Ok(out)
        }
    }
}

fn local_rec(
    delta: &SimplicialComplex,
    memo: &mut HashMap<Vec<u64>, Option<Witness>>,
) -> Option<Witness> {
    let dim = delta.dim().unwrap_or(-1);
    if dim <= 0 {
        return None;
    }
    let key = delta.canonical_key();
    if let Some(cached) = memo.get(&key) {
        return cached.clone();
    }
    let mut result = None;
    for i in 1..=dim {
        let skeleton = delta.pure_skeleton(i).expect("nonvoid by dim check");
        if !skeleton.is_connected() {
            result = Some(Witness::DisconnectedPureSkeleton { index: i });
            break;
        }
    }
    if result.is_none() {
        for vertex in delta.support().vertices() {
            let link = delta
                .link(Face::from_vertices([vertex]).expect("support vertex"))
                .expect("support vertex is a face");
            if let Some(inner) = local_rec(&link, memo) {
                result = Some(Witness::VertexLink {
                    vertex,
                    inner: Box::new(inner),
                });
                break;
            }
        }
    }
    memo.insert(key, result.clone());
    result
}
