use std::fmt;

use serde::{Deserialize, Serialize};

use crate::face::Face;
use crate::field::FieldSpec;

/// Structured reason attached to a verdict. For the failure-style checks the
/// witness pins down the first offending face, degree, skeleton index or
/// subcheck in a deterministic order; for the search-style checks
/// (vertex decomposability, shellability) it carries the successful
/// decomposition instead. Every face or vertex in a witness is expressed in
/// the labels of the complex or graph that was checked.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A facet of non-maximal dimension (purity failure, degree -1).
    ImpureFacet { facet: Face },
    /// The link of `face` is disconnected (degree 0 failure).
    DisconnectedLink { face: Face },
    /// Reduced homology of the link of `face` does not vanish.
    LinkHomology { face: Face, degree: i64, dim: usize },
    /// Relative homology of the pair of links over `face` does not vanish.
    RelativeHomology { face: Face, degree: i64, dim: usize },
    /// A pure skeleton fails the underlying check.
    PureSkeleton { index: i64, inner: Box<Witness> },
    /// A pure skeleton is disconnected (local sequential-S_2 test).
    DisconnectedPureSkeleton { index: i64 },
    /// The link of a vertex fails a recursive check.
    VertexLink { vertex: usize, inner: Box<Witness> },
    /// The relative pair built from the facets of one dimension fails.
    FacetDimensionPair { dim: i64, inner: Box<Witness> },
    /// Successful shedding search: chosen vertices in recursion order.
    SheddingVertices { vertices: Vec<usize> },
    /// Successful shelling search: facets in shelling order.
    ShellingOrder { facets: Vec<Face> },
    /// Generators occur in more than one degree (linearity fails at step 0).
    MixedGeneratorDegrees { degrees: Vec<usize> },
    /// A nonzero graded Betti number off the allowed diagonal.
    BettiEntry { i: usize, j: usize, value: usize },
    /// A degree component of an ideal fails the linearity check.
    DegreeComponent { degree: usize, inner: Box<Witness> },
    /// An independent set witnessing a graph-condition failure.
    IndependentSet { vertices: Vec<usize> },
    /// A chordless even cycle none of whose vertices has a whisker.
    UnwhiskeredEvenCycle { cycle: Vec<usize> },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::ImpureFacet { facet } => write!(f, "impure: facet {facet} below top dimension"),
            Witness::DisconnectedLink { face } => write!(f, "link of {face} is disconnected"),
            Witness::LinkHomology { face, degree, dim } => {
                write!(f, "H~_{degree}(link {face}) has dimension {dim}")
            }
            Witness::RelativeHomology { face, degree, dim } => {
                write!(f, "relative H~_{degree} over {face} has dimension {dim}")
            }
            Witness::PureSkeleton { index, inner } => {
                write!(f, "pure {index}-skeleton: {inner}")
            }
            Witness::DisconnectedPureSkeleton { index } => {
                write!(f, "pure {index}-skeleton is disconnected")
            }
            Witness::VertexLink { vertex, inner } => write!(f, "link of vertex {vertex}: {inner}"),
            Witness::FacetDimensionPair { dim, inner } => {
                write!(f, "pair over dimension-{dim} facets: {inner}")
            }
            Witness::SheddingVertices { vertices } => {
                write!(f, "shedding vertices {vertices:?}")
            }
            Witness::ShellingOrder { facets } => {
                write!(f, "shelling order ")?;
                for (k, face) in facets.iter().enumerate() {
                    if k > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "{face}")?;
                }
                Ok(())
            }
            Witness::MixedGeneratorDegrees { degrees } => {
                write!(f, "generators in degrees {degrees:?}")
            }
            Witness::BettiEntry { i, j, value } => {
                write!(f, "beta_{{{i},{j}}} = {value}")
            }
            Witness::DegreeComponent { degree, inner } => {
                write!(f, "degree-{degree} component: {inner}")
            }
            Witness::IndependentSet { vertices } => {
                write!(f, "independent set {vertices:?}")
            }
            Witness::UnwhiskeredEvenCycle { cycle } => {
                write!(f, "chordless even cycle {cycle:?} without whisker")
            }
        }
    }
}

/// Outcome of a decision procedure: the verdict plus, when the verdict is
/// negative (or the check is a successful search), a re-checkable witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub property: String,
    pub verdict: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldSpec>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl CheckReport {
    pub fn pass(property: &str) -> Self {
        CheckReport {
            property: property.to_string(),
            verdict: true,
            r: None,
            field: None,
            witness: None,
        }
    }

    pub fn fail(property: &str, witness: Witness) -> Self {
        CheckReport {
            property: property.to_string(),
            verdict: false,
            r: None,
            field: None,
            witness: Some(witness),
        }
    }

    pub fn with_r(mut self, r: u32) -> Self {
        self.r = Some(r);
        self
    }

    pub fn with_field(mut self, field: FieldSpec) -> Self {
        self.field = Some(field);
        self
    }

    pub fn with_witness(mut self, witness: Witness) -> Self {
        self.witness = Some(witness);
        self
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.property, self.verdict)?;
        if let Some(r) = self.r {
            write!(f, " (r={r})")?;
        }
        if let Some(field) = self.field {
            write!(f, " (field={field})")?;
        }
        if let Some(w) = &self.witness {
            write!(f, " [{w}]")?;
        }
        Ok(())
    }
}
