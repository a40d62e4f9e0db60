//! Simplicial complexes on `{1,…,n}` and the minimal-prime classification.

mod primes;

pub use crate::table::FaceSet;
pub use primes::{
    i_delta_in_s, minimal_prime_candidates, minimal_prime_candidates_with, render_component,
    CandidateOptions, ComponentCandidate, ComponentDescriptor, Minimality, FACET_CAP,
};

use itertools::Itertools;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("vertex {vertex} outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("complex is not a graph: facet {0} has more than two vertices")]
    NotAGraph(FaceSet),
    #[error("face {0} is not in the complex")]
    FaceNotInComplex(FaceSet),
    #[error("{facets} facets exceed the enumeration cap of {cap}")]
    CapExceeded { facets: usize, cap: usize },
    #[error("invalid component descriptor: {0}")]
    InvalidDescriptor(String),
}

/// A simplicial complex stored by its facets (an antichain, sorted).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<FaceSet>,
}

impl SimplicialComplex {
    /// Canonicalizes `facets`: dominated faces are dropped and the rest sorted.
    pub fn new(n: usize, facets: Vec<FaceSet>) -> Result<Self, ComplexError> {
        for f in &facets {
            if let Some(v) = f.iter().find(|&v| v == 0 || v > n) {
                return Err(ComplexError::VertexOutOfRange { vertex: v, n });
            }
        }
        Ok(Self::from_faces(n, facets))
    }

    pub(crate) fn from_faces(n: usize, faces: Vec<FaceSet>) -> Self {
        let mut faces = faces;
        faces.sort();
        faces.dedup();
        let facets: Vec<FaceSet> = faces
            .iter()
            .filter(|f| !faces.iter().any(|g| g != *f && f.is_subset(g)))
            .cloned()
            .collect();
        SimplicialComplex { n, facets }
    }

    /// The simplex on `n` vertices.
    pub fn simplex(n: usize) -> Self {
        SimplicialComplex { n, facets: vec![FaceSet::full(n)] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[FaceSet] {
        &self.facets
    }

    /// Downward closure, ordered by decreasing size then lexicographically.
    pub fn faces(&self) -> Vec<FaceSet> {
        let mut all: Vec<FaceSet> = self.facets.iter().flat_map(FaceSet::subsets).collect();
        all.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        all.dedup();
        all
    }

    pub fn contains_face(&self, face: &FaceSet) -> bool {
        self.facets.iter().any(|f| face.is_subset(f))
    }

    /// Subcomplex generated by a subset of the facets.
    pub fn restrict(&self, facet_ids: &[usize]) -> SimplicialComplex {
        SimplicialComplex::from_faces(self.n, facet_ids.iter().map(|&i| self.facets[i].clone()).collect())
    }

    pub fn is_graph(&self) -> bool {
        self.facets.iter().all(|f| f.len() <= 2)
    }

    /// All minimal vertex covers of the edges, in lexicographic order.
    pub fn vertex_covers(&self) -> Result<Vec<FaceSet>, ComplexError> {
        if let Some(f) = self.facets.iter().find(|f| f.len() > 2) {
            return Err(ComplexError::NotAGraph(f.clone()));
        }
        let edges: Vec<&FaceSet> = self.facets.iter().filter(|f| f.len() == 2).collect();
        let covers = |c: &FaceSet| edges.iter().all(|e| e.iter().any(|v| c.contains(v)));
        let all: Vec<FaceSet> = FaceSet::full(self.n).subsets().into_iter().filter(|c| covers(c)).collect();
        let mut minimal: Vec<FaceSet> = all
            .iter()
            .filter(|c| !all.iter().any(|d| d != *c && d.is_subset(c)))
            .cloned()
            .collect();
        minimal.sort();
        Ok(minimal)
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.facets.iter().join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fs(v: &[usize]) -> FaceSet {
        FaceSet::from(v)
    }

    #[test]
    fn canonicalize_drops_dominated_faces() {
        let c = SimplicialComplex::new(2, vec![fs(&[1, 2]), fs(&[1])]).unwrap();
        assert_eq!(c.facets(), &[fs(&[1, 2])]);
        let tri = SimplicialComplex::new(3, vec![fs(&[2, 3]), fs(&[1, 2]), fs(&[1, 3])]).unwrap();
        assert_eq!(tri.facets(), &[fs(&[1, 2]), fs(&[1, 3]), fs(&[2, 3])]);
        assert!(SimplicialComplex::new(3, vec![]).unwrap().facets().is_empty());
        assert_eq!(
            SimplicialComplex::new(2, vec![fs(&[1, 3])]),
            Err(ComplexError::VertexOutOfRange { vertex: 3, n: 2 })
        );
    }

    #[test]
    fn faces_of_triangle() {
        let tri = SimplicialComplex::new(3, vec![fs(&[1, 2]), fs(&[1, 3]), fs(&[2, 3])]).unwrap();
        let faces = tri.faces();
        assert_eq!(faces.len(), 7);
        assert_eq!(faces[0], fs(&[1, 2]));
        assert_eq!(faces[6], FaceSet::empty());
    }

    #[test]
    fn vertex_cover_examples() {
        let tri = SimplicialComplex::new(3, vec![fs(&[1, 2]), fs(&[1, 3]), fs(&[2, 3])]).unwrap();
        assert_eq!(tri.vertex_covers().unwrap(), vec![fs(&[1, 2]), fs(&[1, 3]), fs(&[2, 3])]);
        let edge = SimplicialComplex::new(2, vec![fs(&[1, 2])]).unwrap();
        assert_eq!(edge.vertex_covers().unwrap(), vec![fs(&[1]), fs(&[2])]);
        let none = SimplicialComplex::new(3, vec![fs(&[1]), fs(&[2])]).unwrap();
        assert_eq!(none.vertex_covers().unwrap(), vec![FaceSet::empty()]);
        let big = SimplicialComplex::simplex(3);
        assert!(matches!(big.vertex_covers(), Err(ComplexError::NotAGraph(_))));
    }
}
