use thiserror::Error;

use crate::face::Face;

/// Errors produced by constructors, checkers and parsers.
///
/// A `false` verdict is never an error; errors mean the input was malformed
/// or a configured resource cap was exceeded.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex label {label} out of range 1..={n}")]
    LabelOutOfRange { label: usize, n: usize },

    #[error("ground set of size {n} exceeds the bitset width {max}")]
    GroundSetTooLarge { n: usize, max: usize },

    #[error("{face} is not a face of the complex")]
    FaceNotInComplex { face: Face },

    #[error("operation is undefined for the void complex")]
    VoidComplex,

    #[error("the Alexander dual of the void complex lies outside the nonvoid/nonfull range")]
    DualOfVoid,

    #[error("the Alexander dual of the full simplex lies outside the nonvoid/nonfull range")]
    DualOfFullSimplex,

    #[error("r must be at least 2 (every face ring satisfies S_1); got {r}")]
    InvalidR { r: u32 },

    #[error("r must be at least 1; got 0")]
    InvalidLinearityStep,

    #[error("{p} is not prime")]
    NotPrime { p: u64 },

    #[error("a cycle needs at least 3 vertices; got {n}")]
    CycleTooSmall { n: usize },

    #[error("a path needs at least 1 vertex")]
    PathTooSmall,

    #[error("vertex set {set:?} is not independent")]
    NotIndependent { set: Vec<usize> },

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("the zero ideal has no resolution steps to report")]
    ZeroIdeal,

    #[error("subcomplex is not contained in the ambient complex (or ground sets differ)")]
    InvalidPair,

    #[error("cap `{cap}` exceeded: {actual} > {limit}")]
    CapExceeded {
        cap: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

/// Resource caps for the exponential enumerations.
///
/// All checks are exact; the caps only bound how large an input the library
/// agrees to chew on. Every cap is configurable from the CLI.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Caps {
    /// Ground-set bound for face enumeration, Alexander duals,
    /// vertex-decomposability and all graph sweeps.
    pub max_n: usize,
    /// Facet-count bound for the shelling-order search.
    pub max_shelling_facets: usize,
    /// Ground-set bound for Betti tables via vertex restrictions
    /// (2^n subcomplexes).
    pub max_betti_n: usize,
    /// Ground-set bound for the brute-force Koszul Betti oracle.
    pub max_koszul_n: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_n: 30,
            max_shelling_facets: 12,
            max_betti_n: 16,
            max_koszul_n: 8,
        }
    }
}

impl Caps {
    pub(crate) fn check_n(&self, n: usize) -> Result<()> {
        if n > self.max_n {
            return Err(Error::CapExceeded {
                cap: "max_n",
                limit: self.max_n,
                actual: n,
            });
        }
        Ok(())
    }

    pub(crate) fn check_betti_n(&self, n: usize) -> Result<()> {
        if n > self.max_betti_n {
            return Err(Error::CapExceeded {
                cap: "max_betti_n",
                limit: self.max_betti_n,
                actual: n,
            });
        }
        Ok(())
    }

    pub(crate) fn check_koszul_n(&self, n: usize) -> Result<()> {
        if n > self.max_koszul_n {
            return Err(Error::CapExceeded {
                cap: "max_koszul_n",
                limit: self.max_koszul_n,
                actual: n,
            });
        }
        Ok(())
    }

    pub(crate) fn check_shelling(&self, facets: usize) -> Result<()> {
        if facets > self.max_shelling_facets {
            return Err(Error::CapExceeded {
                cap: "max_shelling_facets",
                limit: self.max_shelling_facets,
                actual: facets,
            });
        }
        Ok(())
    }
}
