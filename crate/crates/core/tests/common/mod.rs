//! Generators and independent oracles shared by the integration tests.
#![allow(dead_code)]

use itertools::Itertools;
use margalg::linalg::Matrix;
use margalg::poly::{Monomial, Polynomial, Ring};
use margalg::{FaceSet, Shape, SimplicialComplex, Table, Q};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

pub fn shape(d: &[usize]) -> Shape {
    Shape::new(d.to_vec()).unwrap()
}

pub fn complex(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
    SimplicialComplex::new(n, facets.iter().map(|f| FaceSet::new(f.to_vec())).collect()).unwrap()
}

pub fn triangle() -> SimplicialComplex {
    complex(3, &[&[1, 2], &[1, 3], &[2, 3]])
}

/// A random shape with at most `max_size` cells and rank 1..=4.
pub fn random_shape(r: &mut ChaCha8Rng, max_size: usize) -> Shape {
    loop {
        let n = r.gen_range(1..=4);
        let dims: Vec<usize> = (0..n).map(|_| r.gen_range(1..=3)).collect();
        if dims.iter().product::<usize>() <= max_size {
            return Shape::new(dims).unwrap();
        }
    }
}

pub fn random_table(r: &mut ChaCha8Rng, sh: &Shape) -> Table {
    Table::from_fn(sh.clone(), |_| q(r.gen_range(-6..=6), r.gen_range(1..=3)))
}

pub fn random_vector(r: &mut ChaCha8Rng, len: usize, positive: bool) -> Vec<Q> {
    (0..len)
        .map(|_| if positive { q(r.gen_range(1..=9), 1) } else { q(r.gen_range(-4..=4), r.gen_range(1..=2)) })
        .collect()
}

pub fn random_rank_one(r: &mut ChaCha8Rng, sh: &Shape, positive: bool) -> Table {
    let vectors: Vec<Vec<Q>> = sh.dims().iter().map(|&a| random_vector(r, a, positive)).collect();
    Table::outer_product(&vectors).unwrap()
}

pub fn random_face(r: &mut ChaCha8Rng, n: usize) -> FaceSet {
    FaceSet::new((1..=n).filter(|_| r.gen_bool(0.5)).collect())
}

/// Brute-force rank-1 test: every 2×2 minor of every flattening along every
/// split of the axes into two nonempty groups.
pub fn brute_rank_one(t: &Table) -> bool {
    let sh = t.shape();
    let n = sh.rank();
    let cells: Vec<Vec<usize>> = sh.indices().collect();
    for mask in 1u32..(1 << n) - 1 {
        let key = |idx: &[usize], side: bool| -> Vec<usize> {
            (0..n).filter(|j| ((mask >> j) & 1 == 1) == side).map(|j| idx[j]).collect()
        };
        let rows: Vec<Vec<usize>> = cells.iter().map(|c| key(c, true)).unique().collect();
        let cols: Vec<Vec<usize>> = cells.iter().map(|c| key(c, false)).unique().collect();
        let entry = |r: &[usize], c: &[usize]| -> Q {
            let idx: Vec<usize> = {
                let (mut ri, mut ci) = (r.iter(), c.iter());
                (0..n)
                    .map(|j| if (mask >> j) & 1 == 1 { *ri.next().unwrap() } else { *ci.next().unwrap() })
                    .collect()
            };
            t.get(&idx).clone()
        };
        for (r1, r2) in rows.iter().tuple_combinations() {
            for (c1, c2) in cols.iter().tuple_combinations() {
                if entry(r1, c1) * entry(r2, c2) != entry(r1, c2) * entry(r2, c1) {
                    return false;
                }
            }
        }
    }
    true
}

pub fn var_ring(nv: usize) -> Arc<Ring> {
    Ring::grevlex((0..nv).map(|i| format!("v{i}")))
}

fn coefficient(r: &mut ChaCha8Rng) -> Q {
    loop {
        let c = r.gen_range(-3..=3);
        if c != 0 {
            return q(c, 1);
        }
    }
}

pub fn monomials_of_degree(nv: usize, d: usize) -> Vec<Monomial> {
    (0..nv)
        .combinations_with_replacement(d)
        .map(|c| {
            let mut e = vec![0u32; nv];
            c.into_iter().for_each(|v| e[v] += 1);
            Monomial::from_exponents(e)
        })
        .collect()
}

/// Random polynomial with up to `terms` terms of total degree ≤ `max_deg`.
pub fn random_poly(r: &mut ChaCha8Rng, ring: &Arc<Ring>, terms: usize, max_deg: u32) -> Polynomial {
    let nv = ring.nvars();
    let t = (0..r.gen_range(1..=terms))
        .map(|_| {
            let mut e = vec![0u32; nv];
            for _ in 0..r.gen_range(0..=max_deg) {
                e[r.gen_range(0..nv)] += 1;
            }
            (Monomial::from_exponents(e), coefficient(r))
        })
        .collect();
    Polynomial::from_terms(ring, t)
}

pub fn random_homogeneous(r: &mut ChaCha8Rng, ring: &Arc<Ring>, terms: usize, deg: usize) -> Polynomial {
    let monos = monomials_of_degree(ring.nvars(), deg);
    let t = (0..r.gen_range(1..=terms))
        .map(|_| (monos[r.gen_range(0..monos.len())].clone(), coefficient(r)))
        .collect();
    Polynomial::from_terms(ring, t)
}

/// Membership of a homogeneous `p` in the ideal of homogeneous `gens`,
/// decided by solving for cofactors in the degree-`deg p` component.
pub fn homogeneous_member_oracle(p: &Polynomial, gens: &[Polynomial]) -> bool {
    if p.is_zero() {
        return true;
    }
    let ring = p.ring();
    let nv = ring.nvars();
    let d = p.total_degree().unwrap() as usize;
    let monos = monomials_of_degree(nv, d);
    let row_of = |m: &Monomial| monos.iter().position(|x| x == m).unwrap();
    let mut columns: Vec<Vec<Q>> = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let e = g.total_degree().unwrap() as usize;
        if e > d {
            continue;
        }
        for m in monomials_of_degree(nv, d - e) {
            let prod = g.mul_monomial(&m, &q(1, 1));
            let mut col = vec![q(0, 1); monos.len()];
            for (mono, c) in prod.terms() {
                col[row_of(mono)] = c.clone();
            }
            columns.push(col);
        }
    }
    let mut target = vec![q(0, 1); monos.len()];
    for (mono, c) in p.terms() {
        target[row_of(mono)] = c.clone();
    }
    if columns.is_empty() {
        return false;
    }
    let rows: Vec<Vec<Q>> = (0..monos.len()).map(|i| columns.iter().map(|c| c[i].clone()).collect()).collect();
    Matrix::from_rows(rows, columns.len()).solve(&target).is_some()
}
