//! Ideal operations built on [`buchberger`]: membership, elimination,
//! saturation, intersection and radical membership.

use super::{buchberger, Budget, PolyError, Polynomial, Ring, TermOrder, VarId};
use crate::rational::Q;
use num_traits::One;
use std::sync::Arc;

fn common_ring<'a>(gens: &'a [Polynomial], fallback: Option<&'a Polynomial>) -> Option<&'a Arc<Ring>> {
    gens.first().or(fallback).map(Polynomial::ring)
}

/// `p ∈ ⟨gens⟩`, decided by a Gröbner basis in the ring order of `p`.
pub fn ideal_member(p: &Polynomial, gens: &[Polynomial], budget: Budget) -> Result<bool, PolyError> {
    if p.is_zero() {
        return Ok(true);
    }
    let gb = buchberger(p.ring(), gens, budget)?;
    gb.contains(p)
}

/// Generators of `⟨gens⟩ ∩ K[variables outside front]`, returned in the
/// original ring.
pub fn eliminate(gens: &[Polynomial], front: &[VarId], budget: Budget) -> Result<Vec<Polynomial>, PolyError> {
    let Some(ring) = common_ring(gens, None) else {
        return Ok(Vec::new());
    };
    let elim = ring.with_order(TermOrder::BlockElimination { front: front.to_vec() });
    let gb = buchberger(&elim, gens, budget)?;
    gb.generators()
        .iter()
        .filter(|g| front.iter().all(|&v| !g.involves(v)))
        .map(|g| g.with_ring(ring))
        .collect()
}

/// The ring of `base` with fresh variables prepended; returns the new ring
/// and the ids of the fresh variables.
fn extend_front(base: &Ring, prefix: &str, count: usize) -> (Arc<Ring>, Vec<VarId>) {
    let mut fresh = Vec::new();
    let mut k = 0;
    while fresh.len() < count {
        let name = format!("{prefix}{k}");
        if base.var(&name).is_none() {
            fresh.push(name);
        }
        k += 1;
    }
    let mut names = fresh;
    names.extend(base.names().iter().cloned());
    let front: Vec<VarId> = (0..count).map(VarId).collect();
    (Ring::new(names, TermOrder::BlockElimination { front: front.clone() }), front)
}

fn lift(p: &Polynomial, ring: &Arc<Ring>) -> Result<Polynomial, PolyError> {
    p.rename_into(ring)
}

fn drop_front(gens: Vec<Polynomial>, base: &Arc<Ring>) -> Result<Vec<Polynomial>, PolyError> {
    gens.iter().map(|g| g.transfer(base)).collect()
}

/// `(⟨gens⟩ : f^∞)` via `⟨gens, 1 − w·f⟩ ∩ K[x]`.
pub fn saturate(gens: &[Polynomial], f: &Polynomial, budget: Budget) -> Result<Vec<Polynomial>, PolyError> {
    let base = f.ring().clone();
    if f.is_zero() {
        return Err(PolyError::InvalidArgument("saturation by the zero polynomial".into()));
    }
    let (ring, front) = extend_front(&base, "_w", 1);
    let w = Polynomial::var(&ring, front[0]);
    let mut lifted: Vec<Polynomial> = gens.iter().map(|g| lift(g, &ring)).collect::<Result<_, _>>()?;
    lifted.push(&Polynomial::one(&ring) - &(&w * &lift(f, &ring)?));
    drop_front(eliminate(&lifted, &front, budget)?, &base)
}

/// `⟨A⟩ ∩ ⟨B⟩` via `⟨w·A, (1 − w)·B⟩ ∩ K[x]`.
pub fn intersect(a: &[Polynomial], b: &[Polynomial], budget: Budget) -> Result<Vec<Polynomial>, PolyError> {
    let Some(base) = common_ring(a, b.first()).cloned() else {
        return Ok(Vec::new());
    };
    if a.is_empty() || b.is_empty() {
        return Ok(Vec::new());
    }
    let (ring, front) = extend_front(&base, "_w", 1);
    let w = Polynomial::var(&ring, front[0]);
    let one_minus_w = &Polynomial::one(&ring) - &w;
    let mut lifted = Vec::with_capacity(a.len() + b.len());
    for g in a {
        lifted.push(&w * &lift(g, &ring)?);
    }
    for g in b {
        lifted.push(&one_minus_w * &lift(g, &ring)?);
    }
    drop_front(eliminate(&lifted, &front, budget)?, &base)
}

/// `p ∈ rad⟨gens⟩` by the Rabinowitsch criterion `1 ∈ ⟨gens, 1 − w·p⟩`.
pub fn radical_member(p: &Polynomial, gens: &[Polynomial], budget: Budget) -> Result<bool, PolyError> {
    let base = p.ring().clone();
    let (ring, front) = extend_front(&base, "_w", 1);
    let ring = ring.with_order(TermOrder::GrevLex);
    let w = Polynomial::var(&ring, front[0]);
    let mut lifted: Vec<Polynomial> = gens.iter().map(|g| lift(g, &ring)).collect::<Result<_, _>>()?;
    lifted.push(&Polynomial::one(&ring) - &(&w * &lift(p, &ring)?));
    let gb = buchberger(&ring, &lifted, budget)?;
    gb.contains(&Polynomial::constant(&ring, Q::one()))
}

/// Product of two ideals given by generators.
pub fn product(a: &[Polynomial], b: &[Polynomial]) -> Vec<Polynomial> {
    a.iter().flat_map(|f| b.iter().map(move |g| f * g)).filter(|p| !p.is_zero()).collect()
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::GroebnerBasis;

    fn p(r: &Arc<Ring>, s: &str) -> Polynomial {
        Polynomial::parse(r, s).unwrap()
    }

    fn gb(r: &Arc<Ring>, gens: &[Polynomial]) -> GroebnerBasis {
        buchberger(r, gens, Budget::default()).unwrap()
    }

    #[test]
    fn membership_examples() {
        let r = Ring::grevlex(["x", "y"]);
        let b = Budget::default();
        assert!(ideal_member(&p(&r, "y"), &[p(&r, "x"), p(&r, "x - y")], b).unwrap());
        assert!(!ideal_member(&p(&r, "1"), &[p(&r, "x")], b).unwrap());
        assert!(ideal_member(&Polynomial::zero(&r), &[p(&r, "x^2 + y")], b).unwrap());
    }

    #[test]
    fn elimination_examples() {
        let r = Ring::grevlex(["t", "x", "y"]);
        let b = Budget::default();
        let t = r.var("t").unwrap();
        let out = eliminate(&[p(&r, "t - x^2"), p(&r, "t - y")], &[t], b).unwrap();
        assert_eq!(out.len(), 1);
        assert!(out[0] == p(&r, "y - x^2") || out[0] == p(&r, "x^2 - y"));
        let plain = eliminate(&[p(&r, "x^2 - y"), p(&r, "x*y")], &[], b).unwrap();
        assert_eq!(plain, gb(&r, &[p(&r, "x^2 - y"), p(&r, "x*y")]).generators());
        let x = r.var("x").unwrap();
        assert!(eliminate(&[p(&r, "x - 1")], &[x], b).unwrap().is_empty());
    }

    #[test]
    fn saturation_examples() {
        let r = Ring::grevlex(["x", "y"]);
        let b = Budget::default();
        let sat = saturate(&[p(&r, "x*y")], &p(&r, "x"), b).unwrap();
        assert!(gb(&r, &sat).same_ideal(&gb(&r, &[p(&r, "y")])).unwrap());
        let g = p(&r, "x^2 + y^3");
        let sat1 = saturate(std::slice::from_ref(&g), &p(&r, "1"), b).unwrap();
        assert!(gb(&r, &sat1).same_ideal(&gb(&r, &[g])).unwrap());
        let unit = saturate(&[p(&r, "x^2")], &p(&r, "x"), b).unwrap();
        assert!(gb(&r, &unit).is_unit());
    }

    #[test]
    fn intersection_examples() {
        let r = Ring::grevlex(["x", "y"]);
        let b = Budget::default();
        let xy = intersect(&[p(&r, "x")], &[p(&r, "y")], b).unwrap();
        assert!(gb(&r, &xy).same_ideal(&gb(&r, &[p(&r, "x*y")])).unwrap());
        let i = [p(&r, "x^2 - y"), p(&r, "y^2")];
        let ii = intersect(&i, &i, b).unwrap();
        assert!(gb(&r, &ii).same_ideal(&gb(&r, &i)).unwrap());
        let i1 = intersect(&i, &[p(&r, "1")], b).unwrap();
        assert!(gb(&r, &i1).same_ideal(&gb(&r, &i)).unwrap());
    }

    #[test]
    fn radical_examples() {
        let r = Ring::grevlex(["x", "y"]);
        let b = Budget::default();
        assert!(radical_member(&p(&r, "x"), &[p(&r, "x^2")], b).unwrap());
        assert!(!radical_member(&p(&r, "y"), &[p(&r, "x^2")], b).unwrap());
        assert!(radical_member(&p(&r, "x + y"), &[p(&r, "x^2"), p(&r, "y^2")], b).unwrap());
        assert!(!ideal_member(&p(&r, "x + y"), &[p(&r, "x^2"), p(&r, "y^2")], b).unwrap());
    }
}
