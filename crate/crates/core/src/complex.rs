use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;

use crate::error::{Caps, Error, Result};
use crate::face::{Face, MAX_VERTICES};

/// An abstract simplicial complex on the ground set `1..=n`, stored by its
/// facets (the maximal faces, an antichain under inclusion).
///
/// Three degenerate states are distinguished: the void complex (no faces at
/// all), the irrelevant complex `{∅}` (exactly one facet, the empty face),
/// and everything else. `dim` of the void complex is reported as `None`.
///
/// Ground-set vertices that appear in no facet are retained; links produce
/// such complexes, and witnesses must stay expressed in the original labels.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<Face>,
}

/// Drops every set that is strictly contained in another; also dedups.
fn antichain_reduce(mut sets: Vec<Face>) -> Vec<Face> {
    sets.sort();
    sets.dedup();
    let keep: Vec<Face> = sets
        .iter()
        .filter(|s| !sets.iter().any(|t| *s != t && s.is_subset_of(*t)))
        .copied()
        .collect();
    keep
}

/// Minimal transversals (hitting sets) of a family of vertex sets, via
/// Berge's incremental algorithm. Used both for minimal nonfaces (hit the
/// facet complements) and for the faces of the complex of an ideal (hit the
/// generators).
///
/// An empty family has the empty set as its unique minimal transversal; a
/// family containing the empty set has no transversal at all.
pub(crate) fn minimal_transversals(sets: &[Face]) -> Vec<Face> {
    let mut transversals = vec![Face::EMPTY];
    for &s in sets {
        if s.is_empty() {
            return Vec::new();
        }
        let mut next: Vec<Face> = Vec::new();
        for &t in &transversals {
            if !t.is_disjoint_from(s) {
                next.push(t);
            } else {
                for v in s.vertices() {
                    next.push(t.insert(v));
                }
            }
        }
        // keep minimal elements only
        next.sort();
        next.dedup();
        next = next
            .iter()
            .filter(|t| !next.iter().any(|u| *t != u && u.is_subset_of(**t)))
            .copied()
            .collect();
        transversals = next;
    }
    transversals.sort();
    transversals
}

impl SimplicialComplex {
    /// The complex generated by the given faces: facets are the maximal
    /// generators. An empty generator list yields the void complex; `[∅]`
    /// yields the irrelevant complex `{∅}`.
    pub fn from_facets(n: usize, generators: Vec<Face>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::GroundSetTooLarge {
                n,
                max: MAX_VERTICES,
            });
        }
        let full = (1u64 << n) - 1;
        for g in &generators {
            if g.mask() & !full != 0 {
                let label = g.difference(Face::from_mask(full)).vertices()[0];
                return Err(Error::LabelOutOfRange { label, n });
            }
        }
        Ok(SimplicialComplex {
            n,
            facets: antichain_reduce(generators),
        })
    }

    /// The complex with no faces at all.
    pub fn void(n: usize) -> Self {
        SimplicialComplex {
            n,
            facets: Vec::new(),
        }
    }

    /// The irrelevant complex `{∅}`.
    pub fn irrelevant(n: usize) -> Self {
        SimplicialComplex {
            n,
            facets: vec![Face::EMPTY],
        }
    }

    /// The full simplex on `1..=n`.
    pub fn simplex(n: usize) -> Result<Self> {
        let all = Face::from_vertices(1..=n)?;
        SimplicialComplex::from_facets(n, vec![all])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_irrelevant(&self) -> bool {
        self.facets.len() == 1 && self.facets[0].is_empty()
    }

    /// `None` for the void complex, `Some(-1)` for `{∅}`.
    pub fn dim(&self) -> Option<i64> {
        self.facets.iter().map(|f| f.dim()).max()
    }

    /// Membership: a set is a face iff it lies in some facet.
    pub fn contains(&self, face: Face) -> bool {
        self.facets.iter().any(|g| face.is_subset_of(*g))
    }

    /// Vertices that actually occur in a face.
    pub fn support(&self) -> Face {
        self.facets
            .iter()
            .fold(Face::EMPTY, |acc, f| acc.union(*f))
    }

    /// All faces of dimension exactly `d`, in lexicographic order.
    pub fn faces_of_dim(&self, d: i64) -> Vec<Face> {
        if self.is_void() || d < -1 {
            return Vec::new();
        }
        if d == -1 {
            return vec![Face::EMPTY];
        }
        let card = (d + 1) as usize;
        let mut out = BTreeSet::new();
        for facet in &self.facets {
            if facet.card() < card {
                continue;
            }
            for combo in facet.vertices().into_iter().combinations(card) {
                out.insert(Face::from_vertices(combo).expect("labels already validated"));
            }
        }
        out.into_iter().collect()
    }

    /// All faces of cardinality at most `card`, in lexicographic order.
    pub fn faces_up_to_card(&self, card: usize) -> Vec<Face> {
        let mut out = BTreeSet::new();
        for d in -1..=(card as i64 - 1).min(self.dim().unwrap_or(-2)) {
            out.extend(self.faces_of_dim(d));
        }
        out.into_iter().collect()
    }

    /// Every face, grouped by dimension from -1 through `dim`; the counts are
    /// the f-vector. The void complex yields no groups.
    pub fn all_faces(&self, caps: &Caps) -> Result<Vec<(i64, Vec<Face>)>> {
        caps.check_n(self.n)?;
        let Some(dim) = self.dim() else {
            return Ok(Vec::new());
        };
        Ok((-1..=dim).map(|d| (d, self.faces_of_dim(d))).collect())
    }

    /// f-vector indexed from dimension -1.
    pub fn f_vector(&self, caps: &Caps) -> Result<Vec<usize>> {
        Ok(self
            .all_faces(caps)?
            .into_iter()
            .map(|(_, fs)| fs.len())
            .collect())
    }

    /// The `i`-skeleton: all faces of dimension at most `i`. For `i` at or
    /// above `dim` this is the complex itself.
    pub fn skeleton(&self, i: i64) -> Result<Self> {
        let dim = self.dim().ok_or(Error::VoidComplex)?;
        if i >= dim {
            return Ok(self.clone());
        }
        if i == -1 {
            return Ok(SimplicialComplex::irrelevant(self.n));
        }
        let mut gens: Vec<Face> = self
            .facets
            .iter()
            .filter(|f| f.dim() <= i)
            .copied()
            .collect();
        gens.extend(self.faces_of_dim(i));
        Ok(SimplicialComplex {
            n: self.n,
            facets: antichain_reduce(gens),
        })
    }

    /// The pure `i`-skeleton: the subcomplex generated by all faces of
    /// dimension exactly `i`. Void when `i > dim`; `{∅}` when `i = -1`.
    pub fn pure_skeleton(&self, i: i64) -> Result<Self> {
        let dim = self.dim().ok_or(Error::VoidComplex)?;
        if i > dim {
            return Ok(SimplicialComplex::void(self.n));
        }
        if i == -1 {
            return Ok(SimplicialComplex::irrelevant(self.n));
        }
        Ok(SimplicialComplex {
            n: self.n,
            facets: self.faces_of_dim(i),
        })
    }

    /// The subcomplex generated by the facets of dimension exactly `i`;
    /// void if there are none.
    pub fn facet_generated(&self, i: i64) -> Result<Self> {
        if self.is_void() {
            return Err(Error::VoidComplex);
        }
        let gens: Vec<Face> = self
            .facets
            .iter()
            .filter(|f| f.dim() == i)
            .copied()
            .collect();
        Ok(SimplicialComplex {
            n: self.n,
            facets: gens,
        })
    }

    /// Dimensions in which this complex has a facet, ascending.
    pub fn facet_dims(&self) -> Vec<i64> {
        let mut dims: Vec<i64> = self.facets.iter().map(|f| f.dim()).collect();
        dims.sort_unstable();
        dims.dedup();
        dims
    }

    /// The link of `face`: all faces disjoint from it whose union with it is
    /// again a face. Kept on the same ground set. `link(∅)` is the complex
    /// itself.
    pub fn link(&self, face: Face) -> Result<Self> {
        let gens: Vec<Face> = self
            .facets
            .iter()
            .filter(|g| face.is_subset_of(**g))
            .map(|g| g.difference(face))
            .collect();
        if gens.is_empty() {
            return Err(Error::FaceNotInComplex { face });
        }
        // differences of facets over a fixed face form an antichain already
        let mut facets = gens;
        facets.sort();
        Ok(SimplicialComplex {
            n: self.n,
            facets,
        })
    }

    /// All faces not containing the vertex `v`.
    pub fn deletion(&self, v: usize) -> Result<Self> {
        if v == 0 || v > self.n {
            return Err(Error::LabelOutOfRange { label: v, n: self.n });
        }
        let gens: Vec<Face> = self.facets.iter().map(|g| g.remove(v)).collect();
        Ok(SimplicialComplex {
            n: self.n,
            facets: antichain_reduce(gens),
        })
    }

    /// All faces contained in the vertex set `w`.
    pub fn restriction(&self, w: Face) -> Self {
        let gens: Vec<Face> = self.facets.iter().map(|g| g.intersection(w)).collect();
        SimplicialComplex {
            n: self.n,
            facets: antichain_reduce(gens),
        }
    }

    /// Minimal nonfaces: the minimal subsets of `1..=n` that are not faces.
    /// These generate the Stanley-Reisner ideal, and their complements are
    /// the facets of the Alexander dual.
    pub fn minimal_nonfaces(&self) -> Vec<Face> {
        let full = Face::from_vertices(1..=self.n).expect("n validated on construction");
        let complements: Vec<Face> = self.facets.iter().map(|g| full.difference(*g)).collect();
        minimal_transversals(&complements)
    }

    /// The Alexander dual: all sets whose complement is a nonface. Defined
    /// here only for complexes that are neither void nor the full simplex;
    /// both are rejected with a descriptive error instead of returning an
    /// out-of-range object.
    pub fn alexander_dual(&self, caps: &Caps) -> Result<Self> {
        caps.check_n(self.n)?;
        if self.is_void() {
            return Err(Error::DualOfVoid);
        }
        let full = Face::from_vertices(1..=self.n)?;
        if self.contains(full) {
            return Err(Error::DualOfFullSimplex);
        }
        let facets: Vec<Face> = self
            .minimal_nonfaces()
            .into_iter()
            .map(|nf| full.difference(nf))
            .collect();
        let mut facets = facets;
        facets.sort();
        Ok(SimplicialComplex {
            n: self.n,
            facets,
        })
    }

    /// The join: ground sets are concatenated (the right operand's labels are
    /// shifted up by `self.n`), and faces are unions across the two sides.
    pub fn join(&self, other: &SimplicialComplex) -> Result<Self> {
        if self.is_void() || other.is_void() {
            return Err(Error::VoidComplex);
        }
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::GroundSetTooLarge {
                n,
                max: MAX_VERTICES,
            });
        }
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for a in &self.facets {
            for b in &other.facets {
                facets.push(Face::from_mask(a.mask() | b.mask() << self.n));
            }
        }
        facets.sort();
        Ok(SimplicialComplex { n, facets })
    }

    /// The cone: join with one new vertex.
    pub fn cone(&self) -> Result<Self> {
        let point = SimplicialComplex::from_facets(1, vec![Face::from_vertices([1])?])?;
        self.join(&point)
    }

    /// Purity: all facets of the same dimension.
    pub fn is_pure(&self) -> bool {
        match self.facets.split_first() {
            None => true,
            Some((first, rest)) => rest.iter().all(|f| f.dim() == first.dim()),
        }
    }

    /// Lexicographically first facet of non-maximal dimension, if any.
    pub fn impure_witness(&self) -> Option<Face> {
        let dim = self.dim()?;
        self.facets.iter().find(|f| f.dim() < dim).copied()
    }

    /// Connectedness of the 1-skeleton's vertex set. Complexes with at most
    /// one vertex (including `{∅}` and the void complex) count as connected,
    /// matching the vanishing of reduced 0-homology.
    pub fn is_connected(&self) -> bool {
        let verts = self.support().vertices();
        if verts.len() <= 1 {
            return true;
        }
        // every facet is a clique of the 1-skeleton
        let mut parent: Vec<usize> = (0..verts.len()).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let r = find(parent, parent[x]);
                parent[x] = r;
            }
            parent[x]
        }
        let index = |v: usize| verts.binary_search(&v).expect("support vertex");
        for facet in &self.facets {
            let vs = facet.vertices();
            for w in vs.windows(2) {
                let (a, b) = (index(w[0]), index(w[1]));
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                parent[ra] = rb;
            }
        }
        let root = find(&mut parent, 0);
        (1..verts.len()).all(|i| find(&mut parent, i) == root)
    }

    /// Union of face sets (same ground set).
    pub fn union(&self, other: &SimplicialComplex) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::InvalidPair);
        }
        let mut gens = self.facets.clone();
        gens.extend_from_slice(&other.facets);
        Ok(SimplicialComplex {
            n: self.n,
            facets: antichain_reduce(gens),
        })
    }

    /// Intersection of face sets (same ground set).
    pub fn intersection(&self, other: &SimplicialComplex) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::InvalidPair);
        }
        let mut gens = Vec::new();
        for a in &self.facets {
            for b in &other.facets {
                gens.push(a.intersection(*b));
            }
        }
        Ok(SimplicialComplex {
            n: self.n,
            facets: antichain_reduce(gens),
        })
    }

    /// Is `other` a subcomplex (every face of `other` a face of `self`)?
    pub fn contains_complex(&self, other: &SimplicialComplex) -> bool {
        other.facets.iter().all(|f| self.contains(*f))
    }

    /// Relabels onto the support: vertices are renumbered `1..=m` in
    /// ascending order of their original labels. Returns the new complex and
    /// the map from new labels to original ones. This is the explicit
    /// normalization step; no operation performs it implicitly.
    pub fn restrict_to_support(&self) -> (Self, Vec<usize>) {
        let verts = self.support().vertices();
        let facets = self
            .facets
            .iter()
            .map(|f| {
                Face::from_vertices(
                    f.vertices()
                        .into_iter()
                        .map(|v| verts.binary_search(&v).expect("support vertex") + 1),
                )
                .expect("relabeled face within range")
            })
            .collect::<Vec<_>>();
        let mut facets = facets;
        facets.sort();
        (
            SimplicialComplex {
                n: verts.len(),
                facets,
            },
            verts,
        )
    }

    /// Canonical key for memo tables: the sorted facet masks. Two complexes
    /// with equal keys have identical face sets (ground-set padding aside).
    pub(crate) fn canonical_key(&self) -> Vec<u64> {
        let mut key: Vec<u64> = self.facets.iter().map(|f| f.mask()).collect();
        key.sort_unstable();
        key
    }
}

/// A relative simplicial complex: an ambient complex together with a
/// subcomplex on the same ground set. The subcomplex may be void.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelativePair {
    ambient: SimplicialComplex,
    sub: SimplicialComplex,
}

impl RelativePair {
    pub fn new(ambient: SimplicialComplex, sub: SimplicialComplex) -> Result<Self> {
        if ambient.n() != sub.n() || !ambient.contains_complex(&sub) {
            return Err(Error::InvalidPair);
        }
        Ok(RelativePair { ambient, sub })
    }

    pub fn ambient(&self) -> &SimplicialComplex {
        &self.ambient
    }

    pub fn sub(&self) -> &SimplicialComplex {
        &self.sub
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Complex(n={}; ", self.n)?;
        if self.is_void() {
            write!(f, "void")?;
        } else {
            for (k, facet) in self.facets.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{facet}")?;
            }
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn f(labels: &[usize]) -> Face {
        Face::from_vertices(labels.iter().copied()).unwrap()
    }

    fn complex(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(n, facets.iter().map(|v| f(v)).collect()).unwrap()
    }

    fn ind_complex_of_cycle(n: usize) -> SimplicialComplex {
        Graph::cycle(n)
            .unwrap()
            .independence_complex(&Caps::default())
            .unwrap()
    }

    #[test]
    fn from_facets_reduces_to_antichain() {
        let delta = complex(3, &[&[1, 2], &[2], &[2, 3]]);
        assert_eq!(delta.facets(), &[f(&[1, 2]), f(&[2, 3])]);
    }

    #[test]
    fn independent_sets_of_c5() {
        let delta = ind_complex_of_cycle(5);
        assert_eq!(
            delta.facets(),
            &[f(&[1, 3]), f(&[1, 4]), f(&[2, 4]), f(&[2, 5]), f(&[3, 5])]
        );
    }

    #[test]
    fn degenerate_states() {
        let void = SimplicialComplex::from_facets(2, vec![]).unwrap();
        assert!(void.is_void());
        assert_eq!(void.dim(), None);

        let irr = SimplicialComplex::from_facets(2, vec![Face::EMPTY]).unwrap();
        assert!(irr.is_irrelevant());
        assert_eq!(irr.dim(), Some(-1));
        assert!(irr.contains(Face::EMPTY));
        assert!(!void.contains(Face::EMPTY));
    }

    #[test]
    fn rejects_out_of_range_labels() {
        let err = SimplicialComplex::from_facets(3, vec![f(&[1, 4])]).unwrap_err();
        assert_eq!(err, Error::LabelOutOfRange { label: 4, n: 3 });
    }

    #[test]
    fn f_vector_counts() {
        let caps = Caps::default();
        let simplex = SimplicialComplex::simplex(3).unwrap();
        assert_eq!(simplex.f_vector(&caps).unwrap(), vec![1, 3, 3, 1]);

        let c5 = ind_complex_of_cycle(5);
        assert_eq!(c5.f_vector(&caps).unwrap(), vec![1, 5, 5]);

        let irr = SimplicialComplex::irrelevant(4);
        assert_eq!(irr.f_vector(&caps).unwrap(), vec![1]);
    }

    #[test]
    fn skeleton_cases() {
        let simplex = SimplicialComplex::simplex(3).unwrap();
        assert_eq!(simplex.skeleton(2).unwrap(), simplex);
        assert_eq!(simplex.skeleton(5).unwrap(), simplex);
        let hollow = simplex.skeleton(1).unwrap();
        assert_eq!(hollow.facets(), &[f(&[1, 2]), f(&[1, 3]), f(&[2, 3])]);

        let c6 = ind_complex_of_cycle(6);
        let one_skel = c6.skeleton(1).unwrap();
        // all 9 independent pairs of C_6
        assert_eq!(one_skel.facets().len(), 9);
        assert!(one_skel.facets().iter().all(|x| x.card() == 2));
    }

    #[test]
    fn pure_skeleton_cases() {
        let c6 = ind_complex_of_cycle(6);
        let top = c6.pure_skeleton(2).unwrap();
        assert_eq!(top.facets(), &[f(&[1, 3, 5]), f(&[2, 4, 6])]);
        assert!(!top.is_connected());

        let mixed = complex(3, &[&[1, 2], &[3]]);
        let zero = mixed.pure_skeleton(0).unwrap();
        assert_eq!(zero.facets(), &[f(&[1]), f(&[2]), f(&[3])]);
        assert!(mixed.pure_skeleton(-1).unwrap().is_irrelevant());
        assert!(mixed.pure_skeleton(7).unwrap().is_void());
    }

    #[test]
    fn facet_generated_cases() {
        let c6 = ind_complex_of_cycle(6);
        let dim1 = c6.facet_generated(1).unwrap();
        assert_eq!(dim1.facets(), &[f(&[1, 4]), f(&[2, 5]), f(&[3, 6])]);
        assert!(c6.facet_generated(0).unwrap().is_void());

        let c5 = ind_complex_of_cycle(5);
        assert_eq!(c5.facet_generated(1).unwrap(), c5);
    }

    #[test]
    fn link_cases() {
        let c5 = ind_complex_of_cycle(5);
        assert_eq!(c5.link(Face::EMPTY).unwrap(), c5);
        let lk = c5.link(f(&[1])).unwrap();
        assert_eq!(lk.facets(), &[f(&[3]), f(&[4])]);

        let simplex = SimplicialComplex::simplex(3).unwrap();
        assert_eq!(simplex.link(f(&[1])).unwrap().facets(), &[f(&[2, 3])]);

        assert_eq!(
            c5.link(f(&[1, 2])).unwrap_err(),
            Error::FaceNotInComplex { face: f(&[1, 2]) }
        );
    }

    #[test]
    fn link_composition_identity() {
        // lk_{lk F}(G) = lk(F ∪ G) for disjoint F, G with F ∪ G a face
        let c7 = ind_complex_of_cycle(7);
        for fs in c7.faces_up_to_card(3) {
            for v in fs.vertices() {
                let g = Face::from_vertices([v]).unwrap();
                let rest = fs.remove(v);
                if rest.is_empty() {
                    continue;
                }
                let inner = c7.link(rest).unwrap().link(g).unwrap();
                assert_eq!(inner, c7.link(fs).unwrap());
            }
        }
    }

    #[test]
    fn deletion_cases() {
        let simplex = SimplicialComplex::simplex(3).unwrap();
        assert_eq!(simplex.deletion(3).unwrap().facets(), &[f(&[1, 2])]);

        let c5 = ind_complex_of_cycle(5);
        assert_eq!(
            c5.deletion(1).unwrap().facets(),
            &[f(&[2, 4]), f(&[2, 5]), f(&[3, 5])]
        );

        let irr = SimplicialComplex::irrelevant(2);
        assert_eq!(irr.deletion(1).unwrap(), irr);
    }

    #[test]
    fn restriction_cases() {
        let path = complex(4, &[&[1, 2], &[2, 3], &[3, 4]]);
        let full = Face::from_vertices(1..=4).unwrap();
        assert_eq!(path.restriction(full), path);
        assert_eq!(path.restriction(f(&[1, 3])).facets(), &[f(&[1]), f(&[3])]);
        assert!(path.restriction(Face::EMPTY).is_irrelevant());
    }

    #[test]
    fn alexander_dual_cases() {
        let caps = Caps::default();
        let path = complex(4, &[&[1, 2], &[2, 3], &[3, 4]]);
        let dual = path.alexander_dual(&caps).unwrap();
        assert_eq!(dual.facets(), &[f(&[1, 3]), f(&[2, 3]), f(&[2, 4])]);
        assert_eq!(dual.alexander_dual(&caps).unwrap(), path);

        let hollow = SimplicialComplex::simplex(3).unwrap().skeleton(1).unwrap();
        assert!(hollow.alexander_dual(&caps).unwrap().is_irrelevant());

        assert_eq!(
            SimplicialComplex::void(3).alexander_dual(&caps).unwrap_err(),
            Error::DualOfVoid
        );
        assert_eq!(
            SimplicialComplex::simplex(3).unwrap().alexander_dual(&caps).unwrap_err(),
            Error::DualOfFullSimplex
        );
    }

    #[test]
    fn dual_matches_subset_scan() {
        // oracle: enumerate all subsets and test complement-nonmembership
        let caps = Caps::default();
        let delta = complex(4, &[&[1, 2], &[2, 3], &[3, 4]]);
        let dual = delta.alexander_dual(&caps).unwrap();
        let full = Face::from_vertices(1..=4).unwrap();
        for mask in 0..(1u64 << 4) {
            let face = Face::from_mask(mask);
            let in_dual = !delta.contains(full.difference(face));
            assert_eq!(dual.contains(face), in_dual, "subset {face}");
        }
    }

    #[test]
    fn join_cases() {
        let c3 = ind_complex_of_cycle(3);
        let unit = SimplicialComplex::irrelevant(0);
        assert_eq!(c3.join(&unit).unwrap(), c3);

        let two_a = complex(2, &[&[1], &[2]]);
        let square = two_a.join(&two_a).unwrap();
        assert_eq!(
            square.facets(),
            &[f(&[1, 3]), f(&[1, 4]), f(&[2, 3]), f(&[2, 4])]
        );

        let c5 = ind_complex_of_cycle(5);
        let joined = c3.join(&c5).unwrap();
        assert_eq!(joined.facets().len(), 3 * 5);
        assert_eq!(
            joined.dim().unwrap(),
            c3.dim().unwrap() + c5.dim().unwrap() + 1
        );
    }

    #[test]
    fn purity_and_connectivity() {
        let c5 = ind_complex_of_cycle(5);
        assert!(c5.is_pure());
        assert!(c5.is_connected());

        let c6 = ind_complex_of_cycle(6);
        assert!(!c6.is_pure());

        let c4 = ind_complex_of_cycle(4);
        assert_eq!(c4.facets(), &[f(&[1, 3]), f(&[2, 4])]);
        assert!(!c4.is_connected());

        assert!(SimplicialComplex::irrelevant(2).is_connected());
        assert!(complex(2, &[&[1]]).is_connected());
        assert!(!complex(2, &[&[1], &[2]]).is_connected());
    }

    #[test]
    fn minimal_nonfaces_of_irrelevant() {
        let irr = SimplicialComplex::irrelevant(3);
        assert_eq!(irr.minimal_nonfaces(), vec![f(&[1]), f(&[2]), f(&[3])]);
    }

    #[test]
    fn restrict_to_support_relabels() {
        let lk = ind_complex_of_cycle(5).link(f(&[1])).unwrap();
        let (small, map) = lk.restrict_to_support();
        assert_eq!(small.n(), 2);
        assert_eq!(small.facets(), &[f(&[1]), f(&[2])]);
        assert_eq!(map, vec![3, 4]);
    }
}
