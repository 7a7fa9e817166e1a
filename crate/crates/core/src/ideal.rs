//! Squarefree monomial ideals and their interplay with simplicial complexes:
//! the Stanley-Reisner correspondence and the squarefree degree components.

use itertools::Itertools;

use crate::complex::{minimal_transversals, SimplicialComplex};
use crate::error::{Error, Result};
use crate::face::{Face, MAX_VERTICES};

/// An ideal generated by squarefree monomials in `n` variables; each
/// generator is the support of one monomial. Generators are kept minimal
/// (an antichain under divisibility, which for squarefree monomials is set
/// containment).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquarefreeIdeal {
    n: usize,
    generators: Vec<Face>,
}

impl SquarefreeIdeal {
    /// Builds the ideal, discarding non-minimal generators.
    pub fn new(n: usize, generators: Vec<Face>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::GroundSetTooLarge {
                n,
                max: MAX_VERTICES,
            });
        }
        let full = (1u64 << n) - 1;
        for g in &generators {
            if g.mask() & !full != 0 {
                let label = g.vertices().into_iter().find(|&v| v > n).expect("out of range");
                return Err(Error::LabelOutOfRange { label, n });
            }
        }
        let mut gens = generators;
        gens.sort();
        gens.dedup();
        let minimal: Vec<Face> = gens
            .iter()
            .filter(|g| !gens.iter().any(|h| *g != h && h.is_subset_of(**g)))
            .copied()
            .collect();
        Ok(SquarefreeIdeal {
            n,
            generators: minimal,
        })
    }

    pub fn zero(n: usize) -> Self {
        SquarefreeIdeal {
            n,
            generators: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Face] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// The whole ring, generated by the degree-zero monomial.
    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(|g| g.is_empty())
    }

    /// Distinct generator degrees, ascending.
    pub fn generator_degrees(&self) -> Vec<usize> {
        let mut degs: Vec<usize> = self.generators.iter().map(|g| g.card()).collect();
        degs.sort_unstable();
        degs.dedup();
        degs
    }

    /// Does the squarefree monomial with this support lie in the ideal?
    pub fn contains_monomial(&self, support: Face) -> bool {
        self.generators.iter().any(|g| g.is_subset_of(support))
    }

    /// The ideal generated by all squarefree degree-`j` monomials of this
    /// ideal (the degree-`j` supersets of the generators). Empty components
    /// come back as the zero ideal.
    pub fn degree_component(&self, j: usize) -> SquarefreeIdeal {
        if j > self.n {
            return SquarefreeIdeal::zero(self.n);
        }
        let gens: Vec<Face> = (1..=self.n)
            .combinations(j)
            .map(|c| Face::from_vertices(c).expect("labels validated"))
            .filter(|f| self.contains_monomial(*f))
            .collect();
        SquarefreeIdeal {
            n: self.n,
            generators: gens,
        }
    }
}

/// The Stanley-Reisner ideal of a nonvoid complex: generated by the minimal
/// nonfaces.
pub fn sr_ideal(delta: &SimplicialComplex) -> Result<SquarefreeIdeal> {
    if delta.is_void() {
        return Err(Error::VoidComplex);
    }
    Ok(SquarefreeIdeal {
        n: delta.n(),
        generators: delta.minimal_nonfaces(),
    })
}

/// The unique complex whose Stanley-Reisner ideal is the given one: faces
/// are the squarefree monomials outside the ideal. The zero ideal gives the
/// full simplex; the unit ideal gives the void complex.
pub fn complex_of_ideal(ideal: &SquarefreeIdeal) -> SimplicialComplex {
    let full = Face::from_vertices(1..=ideal.n).expect("n validated");
    let facets: Vec<Face> = minimal_transversals(&ideal.generators)
        .into_iter()
        .map(|t| full.difference(t))
        .collect();
    let mut facets = facets;
    facets.sort();
    SimplicialComplex::from_facets(ideal.n, facets).expect("labels within range")
}
