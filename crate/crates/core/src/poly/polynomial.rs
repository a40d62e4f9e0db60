use super::{Monomial, PolyError, Ring, VarId};
use crate::rational::Q;
use num_traits::{One, Zero};
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

pub(crate) type Term = (Monomial, Q);

/// Sparse polynomial; terms are kept strictly decreasing in the ring's order
/// with nonzero coefficients.
#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &Arc<Ring>, c: Q) -> Self {
        Self::from_terms(ring, vec![(Monomial::one(ring.nvars()), c)])
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::constant(ring, Q::one())
    }

    pub fn var(ring: &Arc<Ring>, v: VarId) -> Self {
        Polynomial { ring: ring.clone(), terms: vec![(Monomial::var(ring.nvars(), v.0, 1), Q::one())] }
    }

    /// Looks a variable up by name.
    pub fn named(ring: &Arc<Ring>, name: &str) -> Result<Self, PolyError> {
        ring.var(name)
            .map(|v| Self::var(ring, v))
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))
    }

    /// Sum of the named variables.
    pub fn sum_of(ring: &Arc<Ring>, vars: impl IntoIterator<Item = VarId>) -> Self {
        let terms = vars.into_iter().map(|v| (Monomial::var(ring.nvars(), v.0, 1), Q::one())).collect();
        Self::from_terms(ring, terms)
    }

    /// Builds a polynomial from unsorted terms, combining like monomials.
    pub fn from_terms(ring: &Arc<Ring>, terms: Vec<Term>) -> Self {
        Polynomial { ring: ring.clone(), terms: normalize(ring, terms) }
    }

    pub(crate) fn from_sorted(ring: &Arc<Ring>, terms: Vec<Term>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub(crate) fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    /// Number of terms.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coefficient(&self) -> Option<&Q> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].0.degree() == w[1].0.degree())
    }

    /// Variables that occur with a positive exponent.
    pub fn support(&self) -> Vec<VarId> {
        let mut seen = vec![false; self.ring.nvars()];
        for (m, _) in &self.terms {
            for v in m.support() {
                seen[v] = true;
            }
        }
        seen.iter().enumerate().filter(|(_, &s)| s).map(|(i, _)| VarId(i)).collect()
    }

    pub fn involves(&self, v: VarId) -> bool {
        self.terms.iter().any(|(m, _)| m.exp(v.0) > 0)
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(lc) => {
                let inv = Q::one() / lc;
                self.scale(&inv)
            }
        }
    }

    pub fn scale(&self, c: &Q) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Q) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(t, k)| (t.mul(m), k * c)).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// Re-sorts into another ring with the same variables (e.g. a new order).
    pub fn with_ring(&self, ring: &Arc<Ring>) -> Result<Polynomial, PolyError> {
        if !self.ring.same_vars(ring) {
            return Err(PolyError::RingMismatch);
        }
        if Arc::ptr_eq(&self.ring, ring) || self.ring.order() == ring.order() {
            return Ok(Polynomial { ring: ring.clone(), terms: self.terms.clone() });
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| ring.cmp(&b.0, &a.0));
        Ok(Polynomial { ring: ring.clone(), terms })
    }

    /// Moves the polynomial into `target`, matching variables by name.
    pub fn rename_into(&self, target: &Arc<Ring>) -> Result<Polynomial, PolyError> {
        let map: Vec<usize> = self
            .ring
            .names()
            .iter()
            .map(|n| target.var(n).map(|v| v.0).ok_or_else(|| PolyError::UnknownVariable(n.clone())))
            .collect::<Result<_, _>>()?;
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0u32; target.nvars()];
                for v in m.support() {
                    e[map[v]] = m.exp(v);
                }
                (Monomial::from_exponents(e), c.clone())
            })
            .collect();
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Like [`Polynomial::rename_into`] but only the variables that occur need
    /// to exist in `target`.
    pub fn transfer(&self, target: &Arc<Ring>) -> Result<Polynomial, PolyError> {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0u32; target.nvars()];
                for v in m.support() {
                    let name = &self.ring.names()[v];
                    let t = target.var(name).ok_or_else(|| PolyError::UnknownVariable(name.clone()))?;
                    e[t.0] = m.exp(v);
                }
                Ok((Monomial::from_exponents(e), c.clone()))
            })
            .collect::<Result<Vec<_>, PolyError>>()?;
        Ok(Polynomial::from_terms(target, terms))
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        let other = other.with_ring(&self.ring)?;
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: merge(&self.ring, &self.terms, other.terms.iter().cloned()),
        })
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        let other = other.with_ring(&self.ring)?;
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: merge(&self.ring, &self.terms, other.terms.iter().map(|(m, c)| (m.clone(), -c))),
        })
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        let other = other.with_ring(&self.ring)?;
        let (small, large) = if self.len() <= other.len() { (self, &other) } else { (&other, self) };
        let mut acc: Vec<Term> = Vec::new();
        for (m, c) in &small.terms {
            acc = merge(&self.ring, &acc, large.terms.iter().map(|(t, k)| (t.mul(m), k * c)));
        }
        Ok(Polynomial { ring: self.ring.clone(), terms: acc })
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Image under `x_v ↦ images[v]`; all images must share one ring.
    pub fn substitute(&self, target: &Arc<Ring>, images: &[Polynomial]) -> Result<Polynomial, PolyError> {
        if images.len() != self.ring.nvars() {
            return Err(PolyError::RingMismatch);
        }
        if images.iter().any(|p| !p.ring.same_vars(target)) {
            return Err(PolyError::RingMismatch);
        }
        let mut powers: HashMap<(usize, u32), Polynomial> = HashMap::new();
        let mut acc = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for v in m.support() {
                let e = m.exp(v);
                let p = powers
                    .entry((v, e))
                    .or_insert_with(|| images[v].with_ring(target).expect("checked above").pow(e));
                t = &t * p;
                if t.is_zero() {
                    break;
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Formal partial derivative.
    pub fn derivative(&self, v: VarId) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exp(v.0) > 0)
            .map(|(m, c)| {
                let e = m.exp(v.0);
                let mut exps = m.exponents().to_vec();
                exps[v.0] -= 1;
                (Monomial::from_exponents(exps), c * Q::from_integer(e.into()))
            })
            .collect();
        Polynomial::from_terms(&self.ring, terms)
    }

    pub fn eval(&self, point: &[Q]) -> Q {
        assert_eq!(point.len(), self.ring.nvars());
        self.terms.iter().fold(Q::zero(), |acc, (m, c)| {
            let mut t = c.clone();
            for v in m.support() {
                t *= num_traits::pow::Pow::pow(&point[v], m.exp(v));
            }
            acc + t
        })
    }
}

/// Sorts descending, combines duplicates and drops zeros.
pub(crate) fn normalize(ring: &Ring, mut terms: Vec<Term>) -> Vec<Term> {
    terms.sort_by(|a, b| ring.cmp(&b.0, &a.0));
    let mut out: Vec<Term> = Vec::with_capacity(terms.len());
    for (m, c) in terms {
        if let Some((lm, lc)) = out.last_mut() {
            if *lm == m {
                *lc += c;
                continue;
            }
        }
        out.push((m, c));
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

/// Merges a sorted term list with a sorted term stream, adding coefficients.
pub(crate) fn merge(ring: &Ring, a: &[Term], b: impl Iterator<Item = Term>) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.size_hint().0);
    let mut ai = a.iter().peekable();
    let mut bi = b.peekable();
    loop {
        match (ai.peek(), bi.peek()) {
            (Some(x), Some(y)) => match ring.cmp(&x.0, &y.0) {
                Ordering::Greater => out.push(ai.next().unwrap().clone()),
                Ordering::Less => out.push(bi.next().unwrap()),
                Ordering::Equal => {
                    let (m, c) = bi.next().unwrap();
                    let s = &ai.next().unwrap().1 + c;
                    if !s.is_zero() {
                        out.push((m, s));
                    }
                }
            },
            (Some(_), None) => {
                out.extend(ai.cloned());
                break;
            }
            (None, Some(_)) => {
                out.extend(bi);
                break;
            }
            (None, None) => break,
        }
    }
    out
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        if !self.ring.same_vars(&other.ring) {
            return false;
        }
        if self.ring.order() == other.ring.order() {
            return self.terms == other.terms;
        }
        other.with_ring(&self.ring).map(|o| o.terms == self.terms).unwrap_or(false)
    }
}

impl Eq for Polynomial {}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            /// Panics when the operands live in different rings.
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect("polynomials from different rings")
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Q::one())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
