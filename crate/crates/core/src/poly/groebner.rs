//! Buchberger's algorithm with Gebauer–Möller pair elimination.
//!
//! Pairs are selected by the normal strategy: smallest total degree of the
//! lcm, then smallest lcm in the term order, then creation index. All basis
//! elements are kept monic, so reduction never divides coefficients.

use super::polynomial::{merge, Term};
use super::{Budget, Monomial, PolyError, Polynomial, Ring};
use crate::rational::Q;
use num_traits::One;
use std::sync::Arc;

/// A Gröbner basis together with the ring (and term order) it was computed in.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Arc<Ring>,
    generators: Vec<Polynomial>,
    reduced: bool,
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Reduction against a fixed list of monic divisors.
struct Divisors<'a> {
    ring: &'a Ring,
    polys: &'a [Vec<Term>],
    lms: &'a [Monomial],
    masks: &'a [u64],
    ids: &'a [usize],
}

impl Divisors<'_> {
    fn find(&self, m: &Monomial) -> Option<usize> {
        let mask = m.mask();
        self.ids
            .iter()
            .copied()
            .find(|&d| self.masks[d] & !mask == 0 && self.lms[d].divides(m))
    }

    /// Full reduction; `steps` is charged one unit per elementary reduction.
    fn reduce(&self, p: Vec<Term>, steps: &mut u64, limit: u64) -> Result<Vec<Term>, ()> {
        let mut rem: Vec<Term> = Vec::new();
        let mut cur = p;
        let mut start = 0;
        while start < cur.len() {
            let d = match self.find(&cur[start].0) {
                Some(d) => d,
                None => {
                    rem.push(std::mem::replace(&mut cur[start], (Monomial::one(0), Q::one())));
                    start += 1;
                    continue;
                }
            };
            *steps += 1;
            if *steps > limit {
                return Err(());
            }
            let (m, c) = &cur[start];
            let q = self.lms[d].quotient_of(m);
            let tail = self.polys[d][1..].iter().map(|(t, k)| (t.mul(&q), -(k * c)));
            cur = merge(self.ring, &cur[start + 1..], tail);
            start = 0;
        }
        Ok(rem)
    }
}

struct Engine<'a> {
    ring: &'a Ring,
    polys: Vec<Vec<Term>>,
    lms: Vec<Monomial>,
    masks: Vec<u64>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
    steps: u64,
    limit: u64,
}

impl<'a> Engine<'a> {
    fn new(ring: &'a Ring, limit: u64) -> Self {
        Engine {
            ring,
            polys: Vec::new(),
            lms: Vec::new(),
            masks: Vec::new(),
            active: Vec::new(),
            pairs: Vec::new(),
            steps: 0,
            limit,
        }
    }

    fn budget_error(&self) -> PolyError {
        PolyError::BudgetExceeded {
            limit: self.limit,
            steps: self.steps,
            basis_len: self.active.len(),
            pending_pairs: self.pairs.len(),
        }
    }

    fn reduce(&mut self, p: Vec<Term>) -> Result<Vec<Term>, PolyError> {
        let div = Divisors {
            ring: self.ring,
            polys: &self.polys,
            lms: &self.lms,
            masks: &self.masks,
            ids: &self.active,
        };
        let mut steps = self.steps;
        let out = div.reduce(p, &mut steps, self.limit);
        self.steps = steps;
        out.map_err(|_| self.budget_error())
    }

    /// Inserts a nonzero reduced polynomial and updates the pair set.
    fn insert(&mut self, mut h: Vec<Term>) {
        let inv = Q::one() / &h[0].1;
        if !inv.is_one() {
            for t in h.iter_mut() {
                t.1 *= &inv;
            }
        }
        let idx = self.polys.len();
        let lm_h = h[0].0.clone();
        self.masks.push(lm_h.mask());
        self.lms.push(lm_h.clone());
        self.polys.push(h);

        // Gebauer–Möller: candidate pairs with h.
        let cands: Vec<(usize, Monomial, bool)> = self
            .active
            .iter()
            .map(|&g| (g, self.lms[g].lcm(&lm_h), self.lms[g].is_coprime(&lm_h)))
            .collect();
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        for (k, c) in cands.iter().enumerate() {
            let dominated = cands[k + 1..].iter().chain(kept.iter()).any(|o| o.1.divides(&c.1));
            if c.2 || !dominated {
                kept.push(c.clone());
            }
        }
        let lms = &self.lms;
        self.pairs.retain(|p| {
            !(lm_h.divides(&p.lcm)
                && lms[p.i].lcm(&lm_h) != p.lcm
                && lms[p.j].lcm(&lm_h) != p.lcm)
        });
        for (g, lcm, coprime) in kept {
            if !coprime {
                self.pairs.push(Pair { i: g, j: idx, lcm });
            }
        }
        self.active.retain(|&g| !lm_h.divides(&lms[g]));
        self.active.push(idx);
    }

    fn next_pair(&mut self) -> Option<Pair> {
        let ring = self.ring;
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.lcm
                    .degree()
                    .cmp(&b.lcm.degree())
                    .then_with(|| ring.cmp(&a.lcm, &b.lcm))
                    .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
            })
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }

    fn s_poly(&self, i: usize, j: usize, lcm: &Monomial) -> Vec<Term> {
        let qi = self.lms[i].quotient_of(lcm);
        let qj = self.lms[j].quotient_of(lcm);
        let a: Vec<Term> = self.polys[i][1..].iter().map(|(t, c)| (t.mul(&qi), c.clone())).collect();
        merge(self.ring, &a, self.polys[j][1..].iter().map(|(t, c)| (t.mul(&qj), -c)))
    }

    fn is_unit(&self) -> bool {
        self.active.len() == 1 && self.lms[self.active[0]].is_one()
    }

    fn run(&mut self, gens: Vec<Vec<Term>>) -> Result<(), PolyError> {
        for g in gens {
            let h = self.reduce(g)?;
            if !h.is_empty() {
                self.insert(h);
                if self.is_unit() {
                    return Ok(());
                }
            }
        }
        while let Some(pair) = self.next_pair() {
            self.steps += 1;
            if self.steps > self.limit {
                return Err(self.budget_error());
            }
            let s = self.s_poly(pair.i, pair.j, &pair.lcm);
            let h = self.reduce(s)?;
            if !h.is_empty() {
                self.insert(h);
                if self.is_unit() {
                    self.pairs.clear();
                    return Ok(());
                }
            }
        }
        Ok(())
    }

    /// Tail-reduces the (already minimal) active set.
    fn finish(mut self) -> Result<Vec<Vec<Term>>, PolyError> {
        let mut ids = self.active.clone();
        ids.sort_by(|&a, &b| self.ring.cmp(&self.lms[a], &self.lms[b]));
        let mut out = Vec::with_capacity(ids.len());
        for &g in &ids {
            let others: Vec<usize> = ids.iter().copied().filter(|&o| o != g).collect();
            let div = Divisors {
                ring: self.ring,
                polys: &self.polys,
                lms: &self.lms,
                masks: &self.masks,
                ids: &others,
            };
            let mut steps = self.steps;
            let tail = div
                .reduce(self.polys[g][1..].to_vec(), &mut steps, self.limit)
                .map_err(|_| self.budget_error())?;
            self.steps = steps;
            let mut p = Vec::with_capacity(tail.len() + 1);
            p.push(self.polys[g][0].clone());
            p.extend(tail);
            out.push(p);
        }
        Ok(out)
    }
}

/// Reduced Gröbner basis of `⟨gens⟩` under the term order of `ring`.
///
/// `gens` may live in a ring with the same variables but another order; they
/// are re-sorted first.
pub fn buchberger(ring: &Arc<Ring>, gens: &[Polynomial], budget: Budget) -> Result<GroebnerBasis, PolyError> {
    let terms: Vec<Vec<Term>> = gens
        .iter()
        .map(|g| g.with_ring(ring).map(Polynomial::into_terms))
        .collect::<Result<_, _>>()?;
    let mut engine = Engine::new(ring, budget.max_steps);
    engine.run(terms.into_iter().filter(|t| !t.is_empty()).collect())?;
    let basis = engine.finish()?;
    Ok(GroebnerBasis {
        ring: ring.clone(),
        generators: basis.into_iter().map(|t| Polynomial::from_sorted(ring, t)).collect(),
        reduced: true,
    })
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_constant()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    fn divisors(&self) -> (Vec<Vec<Term>>, Vec<Monomial>, Vec<u64>, Vec<usize>) {
        let polys: Vec<Vec<Term>> = self.generators.iter().map(|g| g.terms().to_vec()).collect();
        let lms: Vec<Monomial> = polys.iter().map(|p| p[0].0.clone()).collect();
        let masks = lms.iter().map(Monomial::mask).collect();
        let ids = (0..polys.len()).collect();
        (polys, lms, masks, ids)
    }

    /// Remainder of full multivariate division by the basis.
    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial, PolyError> {
        let p = p.with_ring(&self.ring)?;
        let (polys, lms, masks, ids) = self.divisors();
        let div = Divisors { ring: &self.ring, polys: &polys, lms: &lms, masks: &masks, ids: &ids };
        let mut steps = 0;
        let rem = div.reduce(p.into_terms(), &mut steps, u64::MAX).expect("unbounded");
        Ok(Polynomial::from_sorted(&self.ring, rem))
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool, PolyError> {
        Ok(self.normal_form(p)?.is_zero())
    }

    /// Checks Buchberger's criterion directly: every S-polynomial of every
    /// pair of generators reduces to zero.
    pub fn s_pairs_reduce_to_zero(&self) -> bool {
        let (polys, lms, masks, ids) = self.divisors();
        let div = Divisors { ring: &self.ring, polys: &polys, lms: &lms, masks: &masks, ids: &ids };
        let monic: Vec<Vec<Term>> = polys
            .iter()
            .map(|p| {
                let inv = Q::one() / &p[0].1;
                p.iter().map(|(m, c)| (m.clone(), c * &inv)).collect()
            })
            .collect();
        for i in 0..monic.len() {
            for j in i + 1..monic.len() {
                let lcm = lms[i].lcm(&lms[j]);
                let qi = lms[i].quotient_of(&lcm);
                let qj = lms[j].quotient_of(&lcm);
                let a: Vec<Term> = monic[i].iter().map(|(t, c)| (t.mul(&qi), c.clone())).collect();
                let s = merge(&self.ring, &a, monic[j].iter().map(|(t, c)| (t.mul(&qj), -c)));
                let mut steps = 0;
                if !div.reduce(s, &mut steps, u64::MAX).expect("unbounded").is_empty() {
                    return false;
                }
            }
        }
        true
    }

    /// Same reduced basis, i.e. the same ideal (both must be reduced).
    pub fn same_ideal(&self, other: &GroebnerBasis) -> Result<bool, PolyError> {
        if !self.ring.same_vars(&other.ring) {
            return Err(PolyError::RingMismatch);
        }
        if self.ring.order() != other.ring.order() {
            return Ok(other.generators.iter().all(|g| self.contains(g).unwrap_or(false))
                && self.generators.iter().all(|g| other.contains(g).unwrap_or(false)));
        }
        Ok(self.generators == other.generators)
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.generators.iter().filter_map(|g| g.leading_monomial().cloned()).collect()
    }
}
