use std::cmp::Ordering;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Widest ground set a [`Face`] bitset can address.
pub const MAX_VERTICES: usize = 63;

/// A face of a simplicial complex: a set of vertex labels from `1..=n`,
/// stored as a fixed-width bitset (label `i` occupies bit `i - 1`).
///
/// The empty face is a valid value and is distinct from "no face".
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Face(u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    /// Builds a face from vertex labels, rejecting `0` and labels beyond the
    /// bitset width. Duplicates collapse.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(labels: I) -> Result<Face> {
        let mut mask = 0u64;
        for label in labels {
            if label == 0 || label > MAX_VERTICES {
                return Err(Error::LabelOutOfRange {
                    label,
                    n: MAX_VERTICES,
                });
            }
            mask |= 1 << (label - 1);
        }
        Ok(Face(mask))
    }

    pub(crate) fn from_mask(mask: u64) -> Face {
        Face(mask)
    }

    pub(crate) fn mask(self) -> u64 {
        self.0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Number of vertices.
    pub fn card(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Dimension: cardinality minus one; the empty face has dimension -1.
    pub fn dim(self) -> i64 {
        self.card() as i64 - 1
    }

    pub fn contains(self, label: usize) -> bool {
        (1..=MAX_VERTICES).contains(&label) && self.0 & (1 << (label - 1)) != 0
    }

    pub fn is_subset_of(self, other: Face) -> bool {
        self.0 & other.0 == self.0
    }

    pub fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    pub fn difference(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    pub fn is_disjoint_from(self, other: Face) -> bool {
        self.0 & other.0 == 0
    }

    pub fn insert(self, label: usize) -> Face {
        debug_assert!((1..=MAX_VERTICES).contains(&label));
        Face(self.0 | 1 << (label - 1))
    }

    pub fn remove(self, label: usize) -> Face {
        debug_assert!((1..=MAX_VERTICES).contains(&label));
        Face(self.0 & !(1 << (label - 1)))
    }

    /// Vertex labels in ascending order.
    pub fn vertices(self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.card());
        let mut m = self.0;
        while m != 0 {
            let b = m.trailing_zeros() as usize;
            out.push(b + 1);
            m &= m - 1;
        }
        out
    }

    /// Largest vertex label, or `None` for the empty face.
    pub fn max_vertex(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(64 - self.0.leading_zeros() as usize)
        }
    }
}

/// Faces are ordered lexicographically on their sorted vertex sequences,
/// with a proper prefix preceding its extensions: {} < {1} < {1,2} < {1,3} < {2}.
/// Witness reporting and all canonical facet lists rely on this order.
impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.0;
        let mut b = other.0;
        loop {
            match (a == 0, b == 0) {
                (true, true) => return Ordering::Equal,
                (true, false) => return Ordering::Less,
                (false, true) => return Ordering::Greater,
                (false, false) => {}
            }
            let la = a.trailing_zeros();
            let lb = b.trailing_zeros();
            match la.cmp(&lb) {
                Ordering::Equal => {
                    a &= a - 1;
                    b &= b - 1;
                }
                ord => return ord,
            }
        }
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "{{}}");
        }
        write!(f, "{{")?;
        for (k, v) in self.vertices().iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for Face {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.vertices().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Face {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let labels = Vec::<usize>::deserialize(deserializer)?;
        Face::from_vertices(labels).map_err(D::Error::custom)
    }
}
