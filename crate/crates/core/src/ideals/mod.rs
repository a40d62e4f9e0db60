//! Rings and generator factories for the independence ideals.
//!
//! Variable naming: `x[i_1,…,i_n]` in R, `X[t_1,…,t_n]` in S_Δ with `t_j` an
//! index or `+` for a summed slot, `y[j,i]` in the parameter rings, with
//! `y[j,+]` for the extra "summed slot" parameter of the toric map.

mod gens;
mod maps;

pub use gens::{
    i_delta_gens, i_delta_gens_in_s, j_delta_gens, k_delta_gens, l_gens, l_gens_in_s,
    q_delta_gens, segre_margin_gens, toric_kernel, KCounts, QMethod,
};
pub use maps::{
    dim_via_jacobian, eta_delta_image, eta_parameterization, jacobian_rank_at,
    p_delta_member, segre_parameterization, sigma_delta_image, sigma_parameterization,
    tau_delta_image,
};

use crate::complex::{ComplexError, SimplicialComplex};
use crate::poly::{PolyError, Polynomial, Ring, VarId};
use crate::table::{FaceSet, MarginSelector, Shape, Slot};
use itertools::Itertools;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdealError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error("{0}")]
    Shape(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingKind {
    /// `K[x_{i_1,…,i_n}]`.
    R,
    /// One variable per entry of every margin `A_𝒥`, `𝒥 ∈ Δ`.
    SDelta,
    /// `K[y_{j,i}]`, the Segre parameters.
    Y,
    /// `K[y_{j,i}, y_{j,+}]`, the toric parameters.
    YBullet,
}

impl RingKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            RingKind::R => "R",
            RingKind::SDelta => "S_Delta",
            RingKind::Y => "Y",
            RingKind::YBullet => "Y_bullet",
        }
    }

    pub fn parse(s: &str) -> Option<RingKind> {
        match s {
            "R" => Some(RingKind::R),
            "S_Delta" => Some(RingKind::SDelta),
            "Y" => Some(RingKind::Y),
            "Y_bullet" => Some(RingKind::YBullet),
            _ => None,
        }
    }
}

/// A polynomial ring tied to a table shape (and, for S_Δ, a complex).
#[derive(Clone, Debug)]
pub struct RingContext {
    kind: RingKind,
    shape: Shape,
    complex: Option<SimplicialComplex>,
    facets_only: bool,
    ring: Arc<Ring>,
    /// Margin selector of each variable (R and S_Δ only).
    selectors: Vec<MarginSelector>,
}

fn tuple_name(prefix: &str, slots: impl IntoIterator<Item = String>) -> String {
    format!("{prefix}[{}]", slots.into_iter().join(","))
}

pub fn x_name(idx: &[usize]) -> String {
    tuple_name("x", idx.iter().map(|i| i.to_string()))
}

pub fn s_name(sel: &MarginSelector) -> String {
    tuple_name("X", sel.slots().iter().map(|s| s.to_string()))
}

pub fn y_name(j: usize, slot: Slot) -> String {
    tuple_name("y", [j.to_string(), slot.to_string()])
}

impl RingContext {
    /// R with variables `x[i⃗]` in lexicographic index order.
    pub fn r(shape: &Shape) -> Self {
        let selectors: Vec<MarginSelector> =
            shape.indices().map(|idx| MarginSelector(idx.into_iter().map(Slot::Index).collect())).collect();
        let names = selectors.iter().map(|s| x_name(&full_index(s))).collect::<Vec<_>>();
        RingContext {
            kind: RingKind::R,
            shape: shape.clone(),
            complex: None,
            facets_only: false,
            ring: Ring::grevlex(names),
            selectors,
        }
    }

    /// S_Δ on all faces of the complex (downward closure).
    pub fn s_delta(shape: &Shape, complex: &SimplicialComplex) -> Result<Self, IdealError> {
        Self::s_delta_on(shape, complex, complex.faces(), false)
    }

    /// S_Δ′ on the facets alone.
    pub fn s_delta_facets_only(shape: &Shape, complex: &SimplicialComplex) -> Result<Self, IdealError> {
        Self::s_delta_on(shape, complex, complex.facets().to_vec(), true)
    }

    fn s_delta_on(
        shape: &Shape,
        complex: &SimplicialComplex,
        faces: Vec<FaceSet>,
        facets_only: bool,
    ) -> Result<Self, IdealError> {
        if complex.n() != shape.rank() {
            return Err(IdealError::Shape(format!(
                "complex on {} vertices for shape {shape}",
                complex.n()
            )));
        }
        let mut selectors = Vec::new();
        for face in &faces {
            for idx in shape.sub_shape(face).indices() {
                selectors.push(MarginSelector::for_face(shape.rank(), face, &idx));
            }
        }
        let names = selectors.iter().map(s_name).collect::<Vec<_>>();
        Ok(RingContext {
            kind: RingKind::SDelta,
            shape: shape.clone(),
            complex: Some(complex.clone()),
            facets_only,
            ring: Ring::grevlex(names),
            selectors,
        })
    }

    /// Parameter ring `K[y_{j,i}]`.
    pub fn y(shape: &Shape) -> Self {
        let names = (1..=shape.rank())
            .flat_map(|j| (1..=shape.dims()[j - 1]).map(move |i| y_name(j, Slot::Index(i))))
            .collect::<Vec<_>>();
        RingContext {
            kind: RingKind::Y,
            shape: shape.clone(),
            complex: None,
            facets_only: false,
            ring: Ring::grevlex(names),
            selectors: Vec::new(),
        }
    }

    /// Parameter ring with one extra `y[j,+]` per axis.
    pub fn y_bullet(shape: &Shape) -> Self {
        let names = (1..=shape.rank())
            .flat_map(|j| {
                (1..=shape.dims()[j - 1])
                    .map(move |i| y_name(j, Slot::Index(i)))
                    .chain(std::iter::once(y_name(j, Slot::Plus)))
            })
            .collect::<Vec<_>>();
        RingContext {
            kind: RingKind::YBullet,
            shape: shape.clone(),
            complex: None,
            facets_only: false,
            ring: Ring::grevlex(names),
            selectors: Vec::new(),
        }
    }

    /// Rebuilds a context from its serialized description.
    pub fn from_parts(
        kind: RingKind,
        shape: &Shape,
        complex: Option<&SimplicialComplex>,
        facets_only: bool,
    ) -> Result<Self, IdealError> {
        match kind {
            RingKind::R => Ok(Self::r(shape)),
            RingKind::Y => Ok(Self::y(shape)),
            RingKind::YBullet => Ok(Self::y_bullet(shape)),
            RingKind::SDelta => {
                let c = complex.ok_or_else(|| IdealError::Shape("S_Delta needs a complex".into()))?;
                if facets_only {
                    Self::s_delta_facets_only(shape, c)
                } else {
                    Self::s_delta(shape, c)
                }
            }
        }
    }

    pub fn kind(&self) -> RingKind {
        self.kind
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn complex(&self) -> Option<&SimplicialComplex> {
        self.complex.as_ref()
    }

    pub fn facets_only(&self) -> bool {
        self.facets_only
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn selectors(&self) -> &[MarginSelector] {
        &self.selectors
    }

    pub fn selector(&self, v: VarId) -> &MarginSelector {
        &self.selectors[v.0]
    }

    /// Faces carrying variables, in ring order.
    pub fn variable_faces(&self) -> Vec<FaceSet> {
        let mut out: Vec<FaceSet> = Vec::new();
        for s in &self.selectors {
            let f = s.face();
            if out.last() != Some(&f) {
                out.push(f);
            }
        }
        out
    }

    /// The variable `X[σ]` (S_Δ) or `x[i⃗]` (R) for a selector.
    pub fn var_for(&self, sel: &MarginSelector) -> Option<VarId> {
        let name = match self.kind {
            RingKind::R => x_name(&full_index(sel)),
            RingKind::SDelta => s_name(sel),
            _ => return None,
        };
        self.ring.var(&name)
    }

    pub fn y_var(&self, j: usize, slot: Slot) -> Option<VarId> {
        self.ring.var(&y_name(j, slot))
    }

    pub fn var_poly(&self, v: VarId) -> Polynomial {
        Polynomial::var(&self.ring, v)
    }

    pub fn parse(&self, src: &str) -> Result<Polynomial, PolyError> {
        Ok(Polynomial::parse(&self.ring, src)?)
    }
}

fn full_index(sel: &MarginSelector) -> Vec<usize> {
    sel.slots()
        .iter()
        .map(|s| match s {
            Slot::Index(k) => *k,
            Slot::Plus => panic!("R variables carry no summed slots"),
        })
        .collect()
}

/// Which ideal a generator list represents.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum IdealName {
    Segre(FaceSet),
    IDelta,
    L(FaceSet),
    KDelta,
    JDelta,
    QDelta,
    PComponent(String),
}

impl fmt::Display for IdealName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |face: &FaceSet| face.iter().join(",");
        match self {
            IdealName::Segre(face) => write!(f, "Segre({})", list(face)),
            IdealName::IDelta => write!(f, "I_Delta"),
            IdealName::L(face) => write!(f, "L({})", list(face)),
            IdealName::KDelta => write!(f, "K_Delta"),
            IdealName::JDelta => write!(f, "J_Delta"),
            IdealName::QDelta => write!(f, "Q_Delta"),
            IdealName::PComponent(d) => write!(f, "P_component({d})"),
        }
    }
}

impl IdealName {
    pub fn parse(s: &str) -> Option<IdealName> {
        let face = |inner: &str| -> Option<FaceSet> {
            if inner.trim().is_empty() {
                return Some(FaceSet::empty());
            }
            inner.split(',').map(|t| t.trim().parse().ok()).collect::<Option<Vec<usize>>>().map(FaceSet::new)
        };
        match s {
            "I_Delta" => return Some(IdealName::IDelta),
            "K_Delta" => return Some(IdealName::KDelta),
            "J_Delta" => return Some(IdealName::JDelta),
            "Q_Delta" => return Some(IdealName::QDelta),
            _ => {}
        }
        let inner = |p: &str| s.strip_prefix(p).and_then(|r| r.strip_suffix(')'));
        if let Some(i) = inner("Segre(") {
            return face(i).map(IdealName::Segre);
        }
        if let Some(i) = inner("L(") {
            return face(i).map(IdealName::L);
        }
        inner("P_component(").map(|i| IdealName::PComponent(i.to_string()))
    }
}

/// A named, reproducible generator list.
#[derive(Clone, Debug)]
pub struct IdealSpec {
    pub name: IdealName,
    pub ring: RingContext,
    pub generators: Vec<Polynomial>,
}

impl IdealSpec {
    pub fn new(name: IdealName, ring: RingContext, generators: Vec<Polynomial>) -> Self {
        IdealSpec { name, ring, generators }
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn running() -> (Shape, SimplicialComplex) {
        let c = SimplicialComplex::new(
            3,
            vec![FaceSet::new(vec![1, 2]), FaceSet::new(vec![1, 3]), FaceSet::new(vec![2, 3])],
        )
        .unwrap();
        (Shape::new(vec![2, 2, 2]).unwrap(), c)
    }

    #[test]
    fn ring_sizes() {
        let (shape, c) = running();
        assert_eq!(RingContext::r(&shape).nvars(), 8);
        assert_eq!(RingContext::s_delta(&shape, &c).unwrap().nvars(), 19);
        assert_eq!(RingContext::s_delta_facets_only(&shape, &c).unwrap().nvars(), 12);
        assert_eq!(RingContext::y(&shape).nvars(), 6);
        assert_eq!(RingContext::y_bullet(&shape).nvars(), 9);
    }

    #[test]
    fn names_use_plus_for_summed_slots() {
        let (shape, c) = running();
        let s = RingContext::s_delta(&shape, &c).unwrap();
        assert_eq!(s.ring().names()[0], "X[1,1,+]");
        assert_eq!(s.ring().names().last().unwrap(), "X[+,+,+]");
        assert!(s.ring().var("X[+,2,1]").is_some());
    }

    #[test]
    fn ideal_names_round_trip() {
        for n in [
            IdealName::Segre(FaceSet::new(vec![1, 3])),
            IdealName::L(FaceSet::empty()),
            IdealName::QDelta,
            IdealName::PComponent("Q_1".into()),
        ] {
            assert_eq!(IdealName::parse(&n.to_string()), Some(n));
        }
    }
}
