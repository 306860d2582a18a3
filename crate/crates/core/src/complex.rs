//! Simplicial complexes on a labeled vertex set.
//!
//! A complex is stored by its inclusion-maximal faces (facets). The void
//! complex (no faces at all) and the irrelevant complex `{∅}` are distinct:
//! the void complex has an empty facet list, the irrelevant complex has the
//! single facet `∅`. Dimension of the void complex is a `None` sentinel so
//! it cannot be confused with `dim {∅} = -1`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::poly::Poly1;
use crate::vset::{Face, VertexSet, MAX_VERTICES};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComplexError {
    /// A face mentions a vertex id `>= n`.
    VertexOutOfRange { vertex: usize, n: usize },
    /// More vertices requested than the bitset width supports.
    TooManyVertices { n: usize },
    /// Operation undefined on the void complex.
    Void,
    /// `link` was asked for a non-face.
    NotAFace { face: Face },
    /// `skeleton` dimension out of range.
    BadSkeleton { j: i64 },
    /// Label list length does not match the vertex count.
    BadLabels,
}

impl fmt::Display for ComplexError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComplexError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex id {vertex} out of range for ambient [{n}]")
            }
            ComplexError::TooManyVertices { n } => {
                write!(f, "{n} vertices exceeds the supported maximum {MAX_VERTICES}")
            }
            ComplexError::Void => write!(f, "operation undefined on the void complex"),
            ComplexError::NotAFace { face } => write!(f, "{face:?} is not a face"),
            ComplexError::BadSkeleton { j } => write!(f, "skeleton dimension {j} out of range"),
            ComplexError::BadLabels => write!(f, "label list does not match vertex count"),
        }
    }
}

/// Face counts `(f_{-1}, f_0, ..., f_{d-1})`, so `coeffs()[i]` counts the
/// faces of cardinality `i` and `f_{-1} = 1` for every nonvoid complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FVector(pub Vec<i64>);

/// The transform of the f-vector defined by
/// `sum_i f_{i-1} t^i = sum_i h_i t^i (1+t)^{d-i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HVector(pub Vec<i64>);

/// Interval rank counts of a partition: `r_i` = number of rank-`i` intervals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RVector(pub Vec<i64>);

impl FVector {
    /// `sum_i f_{i-1} t^i` as a polynomial.
    pub fn polynomial(&self) -> Poly1 {
        Poly1(self.0.clone())
    }
}

impl HVector {
    /// `sum_i h_i t^i (1+t)^{d-i}` where `d + 1` is the vector length.
    pub fn polynomial(&self) -> Poly1 {
        let d = self.0.len() - 1;
        let mut acc = Poly1::zero();
        for (i, &h) in self.0.iter().enumerate() {
            acc = acc.add(&Poly1::term(h, i).mul(&Poly1::one_plus_t_pow(d - i)));
        }
        acc
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: usize,
    labels: Vec<String>,
    /// Pairwise inclusion-incomparable, sorted in canonical face order.
    facets: Vec<Face>,
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplicialComplex(n={}, facets=[", self.n)?;
        for (i, fc) in self.facets.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", self.face_string(*fc))?;
        }
        write!(f, "])")
    }
}

fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

/// Keep only the inclusion-maximal sets, sorted canonically.
pub fn inclusion_maximal(faces: &[Face]) -> Vec<Face> {
    let mut out: Vec<Face> = Vec::new();
    for &f in faces {
        if faces.iter().any(|&g| f != g && f.is_subset(g)) {
            continue;
        }
        if !out.contains(&f) {
            out.push(f);
        }
    }
    out.sort();
    out
}

impl SimplicialComplex {
    /// Build a complex from generating faces; dominated faces are dropped.
    /// An empty list yields the void complex.
    pub fn from_facets(faces: &[Face], n: usize) -> Result<SimplicialComplex, ComplexError> {
        if n > MAX_VERTICES {
            return Err(ComplexError::TooManyVertices { n });
        }
        let full = VertexSet::full(n);
        for f in faces {
            if !f.is_subset(full) {
                let vertex = f.minus(full).min_vertex().unwrap();
                return Err(ComplexError::VertexOutOfRange { vertex, n });
            }
        }
        Ok(SimplicialComplex { n, labels: default_labels(n), facets: inclusion_maximal(faces) })
    }

    /// The void complex: no faces at all.
    pub fn void(n: usize) -> SimplicialComplex {
        SimplicialComplex { n, labels: default_labels(n), facets: Vec::new() }
    }

    /// The irrelevant complex `{∅}`.
    pub fn irrelevant(n: usize) -> SimplicialComplex {
        SimplicialComplex { n, labels: default_labels(n), facets: vec![VertexSet::EMPTY] }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<SimplicialComplex, ComplexError> {
        if labels.len() != self.n {
            return Err(ComplexError::BadLabels);
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn face_string(&self, f: Face) -> String {
        if f.is_empty() {
            return "-".to_string();
        }
        let mut s = String::new();
        for (i, v) in f.iter().enumerate() {
            if i > 0 {
                s.push(' ');
            }
            s.push_str(&self.labels[v]);
        }
        s
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

    /// `dim Δ`; `None` is the void sentinel (the irrelevant complex has
    /// dimension `-1`, which is a legitimate value, not the sentinel).
    pub fn dim_complex(&self) -> Option<i64> {
        self.facets.iter().map(|f| f.card() as i64 - 1).max()
    }

    /// Krull dimension of the Stanley-Reisner ring, `dim Δ + 1`.
    pub fn dim_ring(&self) -> Option<i64> {
        self.dim_complex().map(|d| d + 1)
    }

    pub fn is_pure(&self) -> bool {
        match self.facets.first() {
            None => true,
            Some(f0) => self.facets.iter().all(|f| f.card() == f0.card()),
        }
    }

    pub fn contains_face(&self, f: Face) -> bool {
        self.facets.iter().any(|&g| f.is_subset(g))
    }

    /// Every face, deduplicated, `∅` included, in (cardinality, lex) order.
    pub fn all_faces(&self) -> Vec<Face> {
        let mut seen: alloc::collections::BTreeSet<Face> = alloc::collections::BTreeSet::new();
        for &f in &self.facets {
            for s in f.subsets() {
                seen.insert(s);
            }
        }
        seen.into_iter().collect()
    }

    pub fn f_vector(&self) -> Result<FVector, ComplexError> {
        if self.is_void() {
            return Err(ComplexError::Void);
        }
        let d = (self.dim_complex().unwrap() + 1) as usize;
        let mut f = vec![0i64; d + 1];
        for face in self.all_faces() {
            f[face.card()] += 1;
        }
        Ok(FVector(f))
    }

    /// h-vector via `H(s) = sum_i f_{i-1} s^i (1-s)^{d-i}`, the polynomial
    /// form of the substitution `t -> t/(1-t)` applied to the f-polynomial.
    pub fn h_vector(&self) -> Result<HVector, ComplexError> {
        let f = self.f_vector()?;
        let d = f.0.len() - 1;
        let mut acc = Poly1::zero();
        for (i, &fi) in f.0.iter().enumerate() {
            acc = acc.add(&Poly1::term(fi, i).mul(&Poly1::one_minus_t_pow(d - i)));
        }
        let mut h = acc.0;
        h.resize(d + 1, 0);
        Ok(HVector(h))
    }

    /// `link(F) = {G : G ∩ F = ∅, G ∪ F ∈ Δ}` on the same vertex set.
    pub fn link(&self, f: Face) -> Result<SimplicialComplex, ComplexError> {
        if !self.contains_face(f) {
            return Err(ComplexError::NotAFace { face: f });
        }
        let gens: Vec<Face> =
            self.facets.iter().filter(|&&g| f.is_subset(g)).map(|&g| g.minus(f)).collect();
        Ok(SimplicialComplex {
            n: self.n,
            labels: self.labels.clone(),
            facets: inclusion_maximal(&gens),
        })
    }

    /// Faces of dimension at most `j`.
    pub fn skeleton(&self, j: i64) -> Result<SimplicialComplex, ComplexError> {
        let d = self.dim_complex().ok_or(ComplexError::Void)?;
        if j < -1 || j > d {
            return Err(ComplexError::BadSkeleton { j });
        }
        if j == -1 {
            return Ok(SimplicialComplex {
                n: self.n,
                labels: self.labels.clone(),
                facets: vec![VertexSet::EMPTY],
            });
        }
        let k = (j + 1) as usize;
        let mut gens: Vec<Face> = Vec::new();
        for face in self.all_faces() {
            if face.card() == k || (face.card() < k && self.facets.contains(&face)) {
                gens.push(face);
            }
        }
        Ok(SimplicialComplex {
            n: self.n,
            labels: self.labels.clone(),
            facets: inclusion_maximal(&gens),
        })
    }

    /// Inclusion-minimal non-faces. Every candidate is a face plus one
    /// vertex, so no power-set sweep is needed.
    pub fn minimal_nonfaces(&self) -> Vec<Face> {
        if self.is_void() {
            // The empty set itself is a non-face.
            return vec![VertexSet::EMPTY];
        }
        let mut out: alloc::collections::BTreeSet<Face> = alloc::collections::BTreeSet::new();
        for face in self.all_faces() {
            for v in 0..self.n {
                if face.contains(v) {
                    continue;
                }
                let cand = face.with(v);
                if self.contains_face(cand) {
                    continue;
                }
                let all_proper_subfaces = cand.iter().all(|w| self.contains_face(cand.without(w)));
                if all_proper_subfaces {
                    out.insert(cand);
                }
            }
        }
        // Missing vertices are minimal non-faces too, found above via ∅+v.
        out.into_iter().collect()
    }

    /// Alexander dual: faces of the result are exactly the complements of
    /// the non-faces of `self` inside `[n]`.
    pub fn alexander_dual(&self) -> SimplicialComplex {
        // Facets of the dual are complements of the minimal non-faces.
        let facets: Vec<Face> =
            self.minimal_nonfaces().iter().map(|f| f.complement_in(self.n)).collect();
        SimplicialComplex {
            n: self.n,
            labels: self.labels.clone(),
            facets: inclusion_maximal(&facets),
        }
    }

    /// Number of facets of maximal dimension (the multiplicity of the
    /// Stanley-Reisner ring).
    pub fn multiplicity(&self) -> Result<i64, ComplexError> {
        let d = self.dim_complex().ok_or(ComplexError::Void)?;
        Ok(self.facets.iter().filter(|f| f.card() as i64 - 1 == d).count() as i64)
    }

    /// Convenience constructor from vertex-index slices.
    pub fn from_vertex_lists(lists: &[&[usize]], n: usize) -> Result<SimplicialComplex, ComplexError> {
        let faces: Vec<Face> = lists.iter().map(|l| VertexSet::from_iter(l.iter().copied())).collect();
        SimplicialComplex::from_facets(&faces, n)
    }

    /// The intersection complex: faces are the common faces of both.
    pub fn intersection(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let gens: Vec<Face> = self
            .all_faces()
            .into_iter()
            .filter(|&f| other.contains_face(f))
            .collect();
        SimplicialComplex {
            n: self.n,
            labels: self.labels.clone(),
            facets: inclusion_maximal(&gens),
        }
    }

    /// The union complex (facets of either, maximalized).
    pub fn union(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let mut gens = self.facets.clone();
        gens.extend_from_slice(&other.facets);
        SimplicialComplex {
            n: self.n,
            labels: self.labels.clone(),
            facets: inclusion_maximal(&gens),
        }
    }

    /// Parse a face from whitespace-separated labels ("-" is the empty face).
    pub fn face_from_labels(&self, text: &str) -> Result<Face, String> {
        let t = text.trim();
        if t == "-" || t.is_empty() {
            return Ok(VertexSet::EMPTY);
        }
        let mut f = VertexSet::EMPTY;
        for tok in t.split_whitespace() {
            match self.labels.iter().position(|l| l == tok) {
                Some(v) => f = f.with(v),
                None => return Err(format!("unknown vertex label `{tok}`")),
            }
        }
        Ok(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complex(lists: &[&[usize]], n: usize) -> SimplicialComplex {
        SimplicialComplex::from_vertex_lists(lists, n).unwrap()
    }

    #[test]
    fn from_facets_drops_dominated() {
        // {12, 1, 23} on n=3 keeps facets {12, 23}.
        let c = complex(&[&[0, 1], &[0], &[1, 2]], 3);
        assert_eq!(c.facets().len(), 2);
        assert!(c.contains_face(VertexSet::from_iter([0, 1])));
        assert!(c.contains_face(VertexSet::from_iter([1, 2])));
        assert!(!c.contains_face(VertexSet::from_iter([0, 2])));
    }

    #[test]
    fn from_facets_idempotent() {
        let c = complex(&[&[0, 1], &[1, 2], &[2, 3]], 4);
        let again = SimplicialComplex::from_facets(c.facets(), 4).unwrap();
        assert_eq!(c, again);
    }

    #[test]
    fn vertex_out_of_range_rejected() {
        let err = SimplicialComplex::from_vertex_lists(&[&[0, 5]], 3).unwrap_err();
        assert_eq!(err, ComplexError::VertexOutOfRange { vertex: 5, n: 3 });
    }

    #[test]
    fn void_vs_irrelevant() {
        let void = SimplicialComplex::void(3);
        let irr = SimplicialComplex::irrelevant(3);
        assert!(void.is_void() && !irr.is_void());
        assert_eq!(void.dim_complex(), None);
        assert_eq!(irr.dim_complex(), Some(-1));
        assert_eq!(irr.dim_ring(), Some(0));
        assert_ne!(void, irr);
    }

    #[test]
    fn all_faces_of_an_edge() {
        let c = complex(&[&[0, 1]], 2);
        let faces = c.all_faces();
        assert_eq!(faces.len(), 4);
        assert_eq!(faces[0], VertexSet::EMPTY);
        assert_eq!(faces[3], VertexSet::from_iter([0, 1]));
    }

    #[test]
    fn single_vertex_vectors() {
        let c = complex(&[&[0]], 1);
        assert_eq!(c.f_vector().unwrap().0, vec![1, 1]);
        assert_eq!(c.h_vector().unwrap().0, vec![1, 0]);
    }

    #[test]
    fn link_of_empty_face_is_identity() {
        let c = complex(&[&[0, 1, 2], &[1, 2, 3]], 4);
        assert_eq!(c.link(VertexSet::EMPTY).unwrap(), c);
    }

    #[test]
    fn link_by_definition_oracle() {
        // Brute-force the definition on a small complex and compare.
        let c = complex(&[&[0, 1, 2], &[1, 2, 3], &[2, 3, 4]], 5);
        for f in c.all_faces() {
            let link = c.link(f).unwrap();
            for g in VertexSet::full(5).subsets() {
                let expected = g.is_disjoint(f) && c.contains_face(g.union(f));
                assert_eq!(link.contains_face(g), expected, "f={f:?} g={g:?}");
            }
        }
    }

    #[test]
    fn skeleton_dims() {
        let c = complex(&[&[0, 1, 2], &[2, 3]], 4);
        let sk1 = c.skeleton(1).unwrap();
        assert_eq!(sk1.dim_complex(), Some(1));
        // 1-skeleton keeps all edges and vertices.
        assert!(sk1.contains_face(VertexSet::from_iter([0, 1])));
        assert!(!sk1.contains_face(VertexSet::from_iter([0, 1, 2])));
        let sk0 = c.skeleton(0).unwrap();
        assert_eq!(sk0.facets().len(), 4);
        assert_eq!(c.skeleton(-1).unwrap(), SimplicialComplex::irrelevant(4));
        assert!(c.skeleton(2).is_ok());
        assert!(c.skeleton(3).is_err());
    }

    #[test]
    fn alexander_dual_small() {
        // Δ = {facets 12, 23} on [3]: non-faces {13, 123}, dual facets {2}.
        let c = complex(&[&[0, 1], &[1, 2]], 3);
        let dual = c.alexander_dual();
        assert_eq!(dual.facets(), &[VertexSet::singleton(1)]);
        // Involution.
        assert_eq!(dual.alexander_dual(), c);
    }

    #[test]
    fn dual_of_void_and_simplex() {
        let void = SimplicialComplex::void(3);
        let full = complex(&[&[0, 1, 2]], 3);
        assert_eq!(void.alexander_dual(), full);
        assert_eq!(full.alexander_dual(), void);
        let irr = SimplicialComplex::irrelevant(3);
        let boundary = irr.alexander_dual();
        assert_eq!(boundary.facets().len(), 3);
        assert_eq!(boundary.dim_complex(), Some(1));
        assert_eq!(boundary.alexander_dual(), irr);
    }

    #[test]
    fn dual_face_count_complement_bijection() {
        // |faces(Δ)| + |faces(Δ∨)| = 2^n.
        for lists in [
            alloc::vec![&[0usize, 1, 2][..], &[1, 3][..]],
            alloc::vec![&[0usize][..], &[1][..], &[2][..]],
            alloc::vec![&[0usize, 1][..], &[1, 2][..], &[2, 3][..], &[3, 0][..]],
        ] {
            let c = complex(&lists, 4);
            let dual = c.alexander_dual();
            assert_eq!(
                c.all_faces().len() + dual.all_faces().len(),
                16,
                "complement bijection fails for {c:?}"
            );
            assert_eq!(dual.alexander_dual(), c);
        }
    }

    #[test]
    fn hollow_triangle_h_vector() {
        let c = complex(&[&[0, 1], &[0, 2], &[1, 2]], 3);
        assert_eq!(c.f_vector().unwrap().0, vec![1, 3, 3]);
        assert_eq!(c.h_vector().unwrap().0, vec![1, 1, 1]);
    }

    #[test]
    fn fh_identity_at_small_points() {
        // The defining polynomial identity, evaluated exactly at t = 1, 2, 3.
        let cases = [
            complex(&[&[0, 1, 2], &[1, 2, 3], &[3, 4]], 5),
            complex(&[&[0, 1], &[1, 2], &[2, 0], &[3]], 4),
            complex(&[&[0, 1, 2, 3]], 4),
        ];
        for c in cases {
            let fp = c.f_vector().unwrap().polynomial();
            let hp = c.h_vector().unwrap().polynomial();
            for t in 1..=3 {
                assert_eq!(fp.eval(t), hp.eval(t), "identity fails for {c:?} at t={t}");
            }
            assert_eq!(fp, hp);
        }
    }

    #[test]
    fn multiplicity_counts_top_facets() {
        let c = complex(&[&[0, 1, 2], &[1, 2, 3], &[3, 4]], 5);
        assert_eq!(c.multiplicity().unwrap(), 2);
        assert_eq!(complex(&[&[0, 1, 2]], 3).multiplicity().unwrap(), 1);
    }
}
