//! Dense exact-rational multi-way tables and their margins.
//!
//! Entries are stored row-major with the last index varying fastest. Vertex
//! labels and category indices are 1-based throughout, matching the usual
//! `x[i_1,…,i_n]` notation.

use crate::complex::SimplicialComplex;
use crate::linalg::Matrix;
use crate::rational::Q;
use itertools::Itertools;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("grand total is zero")]
    DegenerateTotal,
    #[error("invalid shape: {0}")]
    InvalidShape(String),
}

/// Category counts `(a_1,…,a_n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Shape {
    dims: Vec<usize>,
}

impl Shape {
    pub fn new(dims: Vec<usize>) -> Result<Self, TableError> {
        if dims.is_empty() {
            return Err(TableError::InvalidShape("a shape needs at least one axis".into()));
        }
        if dims.contains(&0) {
            return Err(TableError::InvalidShape(format!("zero-length axis in {dims:?}")));
        }
        Ok(Shape { dims })
    }

    /// The rank-0 shape of a grand-total margin.
    pub fn scalar() -> Self {
        Shape { dims: Vec::new() }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn rank(&self) -> usize {
        self.dims.len()
    }

    pub fn size(&self) -> usize {
        self.dims.iter().product()
    }

    /// All 1-based index tuples in row-major order.
    pub fn indices(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        self.dims.iter().map(|&a| 1..=a).multi_cartesian_product_or_unit()
    }

    fn strides(&self) -> Vec<usize> {
        let mut s = vec![1; self.dims.len()];
        for j in (0..self.dims.len().saturating_sub(1)).rev() {
            s[j] = s[j + 1] * self.dims[j + 1];
        }
        s
    }

    /// Flat offset of a 1-based index tuple.
    pub fn offset(&self, idx: &[usize]) -> usize {
        self.strides().iter().zip(idx).map(|(s, i)| s * (i - 1)).sum()
    }

    pub fn sub_shape(&self, face: &FaceSet) -> Shape {
        Shape { dims: face.iter().map(|v| self.dims[v - 1]).collect() }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.dims.iter().join("x"))
    }
}

trait CartesianOrUnit: Iterator {
    fn multi_cartesian_product_or_unit(self) -> Box<dyn Iterator<Item = Vec<usize>>>;
}

impl<I> CartesianOrUnit for I
where
    I: Iterator<Item = std::ops::RangeInclusive<usize>>,
{
    // itertools yields nothing for an empty product; the rank-0 case needs `[[]]`.
    fn multi_cartesian_product_or_unit(self) -> Box<dyn Iterator<Item = Vec<usize>>> {
        let ranges: Vec<_> = self.collect();
        if ranges.is_empty() {
            Box::new(std::iter::once(Vec::new()))
        } else {
            Box::new(ranges.into_iter().multi_cartesian_product())
        }
    }
}

/// Sorted, duplicate-free set of 1-based vertex labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FaceSet(Vec<usize>);

impl FaceSet {
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        FaceSet(members)
    }

    pub fn empty() -> Self {
        FaceSet(Vec::new())
    }

    pub fn full(n: usize) -> Self {
        FaceSet((1..=n).collect())
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset(&self, other: &FaceSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn intersection(&self, other: &FaceSet) -> FaceSet {
        FaceSet(self.iter().filter(|&v| other.contains(v)).collect())
    }

    pub fn union(&self, other: &FaceSet) -> FaceSet {
        FaceSet::new(self.iter().chain(other.iter()).collect())
    }

    pub fn difference(&self, other: &FaceSet) -> FaceSet {
        FaceSet(self.iter().filter(|&v| !other.contains(v)).collect())
    }

    pub fn without(&self, v: usize) -> FaceSet {
        FaceSet(self.iter().filter(|&w| w != v).collect())
    }

    /// Position (1-based) of each member of `self` inside `outer`.
    pub fn relabel_within(&self, outer: &FaceSet) -> Option<FaceSet> {
        self.iter()
            .map(|v| outer.0.binary_search(&v).ok().map(|p| p + 1))
            .collect::<Option<Vec<_>>>()
            .map(FaceSet)
    }

    /// All subsets, by size then lexicographically.
    pub fn subsets(&self) -> Vec<FaceSet> {
        (0..=self.len())
            .flat_map(|k| self.0.iter().copied().combinations(k).map(FaceSet))
            .collect()
    }

    pub(crate) fn check_within(&self, n: usize) -> Result<(), TableError> {
        match self.0.iter().find(|&&v| v == 0 || v > n) {
            Some(v) => Err(TableError::ShapeMismatch(format!("vertex {v} outside 1..={n}"))),
            None => Ok(()),
        }
    }
}

impl fmt::Display for FaceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.0.iter().join(","))
    }
}

impl From<&[usize]> for FaceSet {
    fn from(v: &[usize]) -> Self {
        FaceSet::new(v.to_vec())
    }
}

/// One slot of a margin selector: a fixed category or a summed axis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slot {
    Index(usize),
    Plus,
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slot::Index(k) => write!(f, "{k}"),
            Slot::Plus => write!(f, "+"),
        }
    }
}

/// A `+`-notation index such as `(1,+,3)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MarginSelector(pub Vec<Slot>);

impl MarginSelector {
    /// The selector `σ(𝒥)_{idx}`: `idx` fills the slots of `face`, `+` elsewhere.
    pub fn for_face(n: usize, face: &FaceSet, idx: &[usize]) -> Self {
        let mut slots = vec![Slot::Plus; n];
        for (v, &i) in face.iter().zip(idx) {
            slots[v - 1] = Slot::Index(i);
        }
        MarginSelector(slots)
    }

    /// The set `𝒥(σ)` of non-`+` positions.
    pub fn face(&self) -> FaceSet {
        FaceSet(
            self.0
                .iter()
                .enumerate()
                .filter(|(_, s)| matches!(s, Slot::Index(_)))
                .map(|(j, _)| j + 1)
                .collect(),
        )
    }

    pub fn slots(&self) -> &[Slot] {
        &self.0
    }

    /// Full index tuples summed by this selector.
    pub fn cells<'a>(&'a self, shape: &'a Shape) -> impl Iterator<Item = Vec<usize>> + 'a {
        self.0
            .iter()
            .zip(shape.dims())
            .map(|(s, &a)| match s {
                Slot::Index(k) => *k..=*k,
                Slot::Plus => 1..=a,
            })
            .multi_cartesian_product_or_unit()
    }

    fn conforms(&self, shape: &Shape) -> Result<(), TableError> {
        if self.0.len() != shape.rank() {
            return Err(TableError::ShapeMismatch(format!(
                "selector of length {} for a rank-{} table",
                self.0.len(),
                shape.rank()
            )));
        }
        for (j, (s, &a)) in self.0.iter().zip(shape.dims()).enumerate() {
            if let Slot::Index(k) = s {
                if *k == 0 || *k > a {
                    return Err(TableError::ShapeMismatch(format!(
                        "index {k} out of range 1..={a} at slot {}",
                        j + 1
                    )));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for MarginSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

/// Dense table of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table {
    shape: Shape,
    entries: Vec<Q>,
}

impl Table {
    pub fn new(shape: Shape, entries: Vec<Q>) -> Result<Self, TableError> {
        if entries.len() != shape.size() {
            return Err(TableError::ShapeMismatch(format!(
                "{} entries for shape {shape} of size {}",
                entries.len(),
                shape.size()
            )));
        }
        Ok(Table { shape, entries })
    }

    pub fn zeros(shape: Shape) -> Self {
        let entries = vec![Q::zero(); shape.size()];
        Table { shape, entries }
    }

    pub fn from_fn(shape: Shape, mut f: impl FnMut(&[usize]) -> Q) -> Self {
        let entries = shape.indices().map(|idx| f(&idx)).collect();
        Table { shape, entries }
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn entries(&self) -> &[Q] {
        &self.entries
    }

    pub fn get(&self, idx: &[usize]) -> &Q {
        &self.entries[self.shape.offset(idx)]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Q) -> Table {
        Table { shape: self.shape.clone(), entries: self.entries.iter().map(|e| e * c).collect() }
    }

    pub fn add(&self, other: &Table) -> Result<Table, TableError> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Table) -> Result<Table, TableError> {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(&self, other: &Table, f: impl Fn(&Q, &Q) -> Q) -> Result<Table, TableError> {
        if self.shape != other.shape {
            return Err(TableError::ShapeMismatch(format!("{} vs {}", self.shape, other.shape)));
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect();
        Ok(Table { shape: self.shape.clone(), entries })
    }

    /// `x_σ`: the sum of the entries selected by `sel`.
    pub fn margin_entry(&self, sel: &MarginSelector) -> Result<Q, TableError> {
        sel.conforms(&self.shape)?;
        Ok(sel.cells(&self.shape).fold(Q::zero(), |acc, idx| acc + self.get(&idx)))
    }

    /// The margin `A_𝒥`, with axes in increasing vertex order.
    pub fn marginalize(&self, face: &FaceSet) -> Result<Table, TableError> {
        face.check_within(self.shape.rank())?;
        let sub = self.shape.sub_shape(face);
        let strides = sub.strides();
        let mut entries = vec![Q::zero(); sub.size()];
        for (idx, value) in self.shape.indices().zip(&self.entries) {
            if value.is_zero() {
                continue;
            }
            let off: usize = face.iter().zip(&strides).map(|(v, s)| s * (idx[v - 1] - 1)).sum();
            entries[off] += value;
        }
        Ok(Table { shape: sub, entries })
    }

    pub fn grand_total(&self) -> Q {
        self.entries.iter().fold(Q::zero(), |acc, e| acc + e)
    }

    /// One-dimensional margins `(B_{+,…,i_j,…,+})_j`.
    pub fn one_margins(&self) -> Vec<Vec<Q>> {
        (1..=self.shape.rank())
            .map(|j| self.marginalize(&FaceSet(vec![j])).expect("vertex in range").entries)
            .collect()
    }

    /// Rank-1 test: every one-coordinate-interchange 2×2 minor vanishes.
    ///
    /// The interchange minors about coordinate `l` are exactly the 2×2 minors
    /// of the flattening with rows indexed by axis `l`, so each flattening is
    /// checked to have rank at most one.
    pub fn is_completely_independent(&self) -> bool {
        let n = self.shape.rank();
        (0..n).all(|l| {
            let rows = self.shape.dims()[l];
            let cols = self.shape.size() / rows;
            let flat = self.flattening(l);
            (0..rows).tuple_combinations().all(|(r1, r2)| {
                (0..cols).tuple_combinations().all(|(c1, c2)| {
                    &flat[r1][c1] * &flat[r2][c2] == &flat[r1][c2] * &flat[r2][c1]
                })
            })
        })
    }

    fn flattening(&self, axis: usize) -> Vec<Vec<Q>> {
        let rows = self.shape.dims()[axis];
        let mut flat = vec![Vec::with_capacity(self.shape.size() / rows); rows];
        for (idx, value) in self.shape.indices().zip(&self.entries) {
            flat[idx[axis] - 1].push(value.clone());
        }
        flat
    }

    /// Every facet margin is completely independent.
    pub fn is_delta_independent(&self, complex: &SimplicialComplex) -> Result<bool, TableError> {
        self.check_complex(complex)?;
        for facet in complex.facets() {
            if !self.marginalize(facet)?.is_completely_independent() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn check_complex(&self, complex: &SimplicialComplex) -> Result<(), TableError> {
        if complex.n() != self.shape.rank() {
            return Err(TableError::ShapeMismatch(format!(
                "complex on {} vertices for a rank-{} table",
                complex.n(),
                self.shape.rank()
            )));
        }
        Ok(())
    }

    /// `B^I`, the completely independent table with the margins of `B`:
    /// `∏_j B_{+,…,i_j,…,+} / t^{n−1}` where `t` is the grand total.
    pub fn independent_part(&self) -> Result<Table, TableError> {
        let t = self.grand_total();
        if t.is_zero() {
            return Err(TableError::DegenerateTotal);
        }
        let exp = self.shape.rank().saturating_sub(1) as i32;
        let norm = Q::one() / num_traits::pow::Pow::pow(&t, exp);
        Ok(self.independent_part_unnormalized().scale(&norm))
    }

    /// The literal product of one-dimensional margins, without dividing by
    /// `t^{n−1}`; agrees with [`Table::independent_part`] only when `t = 1`.
    pub fn independent_part_strict(&self) -> Result<Table, TableError> {
        if self.grand_total().is_zero() {
            return Err(TableError::DegenerateTotal);
        }
        Ok(self.independent_part_unnormalized())
    }

    fn independent_part_unnormalized(&self) -> Table {
        let margins = self.one_margins();
        Table::from_fn(self.shape.clone(), |idx| {
            idx.iter().enumerate().fold(Q::one(), |acc, (j, &i)| acc * &margins[j][i - 1])
        })
    }

    /// `(B^I, B^0)` with `B = B^I + B^0`.
    pub fn decompose(&self) -> Result<(Table, Table), TableError> {
        let indep = self.independent_part()?;
        let rest = self.sub(&indep)?;
        Ok((indep, rest))
    }

    /// Like [`Table::decompose`] but with the unnormalized independent part.
    pub fn decompose_strict(&self) -> Result<(Table, Table), TableError> {
        let indep = self.independent_part_strict()?;
        let rest = self.sub(&indep)?;
        Ok((indep, rest))
    }

    /// `Δ(B)`: the subsets 𝒥 on which `B^0` has a zero margin, by facets.
    pub fn detect_complex(&self) -> Result<SimplicialComplex, TableError> {
        let (_, rest) = self.decompose()?;
        Ok(zero_margin_complex(&rest))
    }

    /// Rank-1 table `v_1 ⊗ ⋯ ⊗ v_n`.
    pub fn outer_product(vectors: &[Vec<Q>]) -> Result<Table, TableError> {
        let shape = Shape::new(vectors.iter().map(Vec::len).collect())?;
        Ok(Table::from_fn(shape, |idx| {
            idx.iter().zip(vectors).fold(Q::one(), |acc, (&i, v)| acc * &v[i - 1])
        }))
    }
}

fn zero_margin_complex(rest: &Table) -> SimplicialComplex {
    let n = rest.shape.rank();
    let faces: Vec<FaceSet> = FaceSet::full(n)
        .subsets()
        .into_iter()
        .filter(|face| rest.marginalize(face).expect("face in range").is_zero())
        .collect();
    SimplicialComplex::from_faces(n, faces)
}

/// The linear map sending a table to the concatenation of its facet margins.
pub fn margin_matrix(shape: &Shape, faces: &[FaceSet]) -> Matrix {
    let cells: Vec<Vec<usize>> = shape.indices().collect();
    let mut rows = Vec::new();
    for face in faces {
        for sub in shape.sub_shape(face).indices() {
            let sel = MarginSelector::for_face(shape.rank(), face, &sub);
            rows.push(
                cells
                    .iter()
                    .map(|idx| {
                        let hit = sel.0.iter().zip(idx).all(|(s, &i)| match s {
                            Slot::Index(k) => *k == i,
                            Slot::Plus => true,
                        });
                        if hit {
                            Q::one()
                        } else {
                            Q::zero()
                        }
                    })
                    .collect(),
            );
        }
    }
    Matrix::from_rows(rows, cells.len())
}

/// A seeded table whose 𝒥-margins vanish for every face of `complex`.
///
/// Built from an exact kernel basis of the margin map, combined with
/// coefficients drawn from `{−3,…,3}∖{0}`; zero iff that kernel is trivial.
pub fn sample_zero_margin_table(
    shape: &Shape,
    complex: &SimplicialComplex,
    seed: u64,
) -> Result<Table, TableError> {
    if complex.n() != shape.rank() {
        return Err(TableError::ShapeMismatch(format!(
            "complex on {} vertices for shape {shape}",
            complex.n()
        )));
    }
    let kernel = margin_matrix(shape, complex.facets()).kernel();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut entries = vec![Q::zero(); shape.size()];
    for v in &kernel {
        let mut c: i64 = rng.gen_range(1..=3);
        if rng.gen_bool(0.5) {
            c = -c;
        }
        let c = Q::from_integer(c.into());
        for (e, x) in entries.iter_mut().zip(v) {
            if !x.is_zero() {
                *e += &c * x;
            }
        }
    }
    Table::new(shape.clone(), entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn t2(rows: [[i64; 2]; 2]) -> Table {
        Table::new(
            Shape::new(vec![2, 2]).unwrap(),
            rows.iter().flatten().map(|&v| int(v)).collect(),
        )
        .unwrap()
    }

    fn tq(dims: Vec<usize>, vals: &[(i64, i64)]) -> Table {
        Table::new(Shape::new(dims).unwrap(), vals.iter().map(|&(n, d)| frac(n, d)).collect())
            .unwrap()
    }

    fn sel(slots: &[Option<usize>]) -> MarginSelector {
        MarginSelector(slots.iter().map(|s| s.map_or(Slot::Plus, Slot::Index)).collect())
    }

    fn complex(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::new(n, facets.iter().map(|f| FaceSet::from(*f)).collect()).unwrap()
    }

    fn checkerboard_plus_uniform(eps: Q) -> Table {
        Table::from_fn(Shape::new(vec![2, 2, 2]).unwrap(), |idx| {
            let sign = if idx.iter().sum::<usize>() % 2 == 0 { int(1) } else { int(-1) };
            frac(1, 8) + &eps * sign
        })
    }

    #[test]
    fn margin_entry_examples() {
        let a = t2([[1, 2], [3, 4]]);
        assert_eq!(a.margin_entry(&sel(&[Some(1), None])).unwrap(), int(3));
        assert_eq!(a.margin_entry(&sel(&[Some(2), Some(1)])).unwrap(), int(3));
        let z = Table::zeros(Shape::new(vec![2, 3]).unwrap());
        assert_eq!(z.margin_entry(&sel(&[None, Some(3)])).unwrap(), int(0));
    }

    #[test]
    fn margin_entry_rejects_bad_selectors() {
        let a = t2([[1, 2], [3, 4]]);
        assert!(matches!(a.margin_entry(&sel(&[Some(3), None])), Err(TableError::ShapeMismatch(_))));
        assert!(matches!(a.margin_entry(&sel(&[None])), Err(TableError::ShapeMismatch(_))));
    }

    #[test]
    fn marginalize_examples() {
        let a = t2([[1, 2], [3, 4]]);
        let col = a.marginalize(&FaceSet::new(vec![2])).unwrap();
        assert_eq!(col.entries(), &[int(4), int(6)]);
        assert_eq!(a.marginalize(&FaceSet::full(2)).unwrap(), a);
        let total = a.marginalize(&FaceSet::empty()).unwrap();
        assert_eq!(total.shape().rank(), 0);
        assert_eq!(total.entries(), &[int(10)]);
        let u = Table::from_fn(Shape::new(vec![2, 2, 2]).unwrap(), |_| frac(1, 8));
        assert_eq!(u.marginalize(&FaceSet::new(vec![1])).unwrap().entries(), &[frac(1, 2), frac(1, 2)]);
        assert!(a.marginalize(&FaceSet::new(vec![3])).is_err());
    }

    #[test]
    fn grand_totals() {
        assert_eq!(t2([[1, 2], [3, 4]]).grand_total(), int(10));
        assert_eq!(tq(vec![2, 2], &[(1, 4); 4]).grand_total(), int(1));
        assert_eq!(Table::zeros(Shape::new(vec![3]).unwrap()).grand_total(), int(0));
    }

    #[test]
    fn complete_independence_examples() {
        assert!(tq(vec![2, 2], &[(1, 4); 4]).is_completely_independent());
        assert!(t2([[3, 5], [6, 10]]).is_completely_independent());
        assert!(!tq(vec![2, 2], &[(1, 2), (0, 1), (0, 1), (1, 2)]).is_completely_independent());
    }

    #[test]
    fn delta_independence_examples() {
        let tri = complex(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        let b = checkerboard_plus_uniform(frac(1, 16));
        assert!(b.is_delta_independent(&tri).unwrap());
        assert!(!b.is_completely_independent());
        let diag = tq(vec![2, 2], &[(1, 2), (0, 1), (0, 1), (1, 2)]);
        assert!(!diag.is_delta_independent(&complex(2, &[&[1, 2]])).unwrap());
        let rank1 = Table::outer_product(&[vec![int(1), int(2)], vec![int(3), int(5)]]).unwrap();
        assert!(rank1.is_delta_independent(&complex(2, &[&[1, 2]])).unwrap());
        assert!(rank1.is_delta_independent(&tri).is_err());
    }

    #[test]
    fn independent_part_examples() {
        let u = tq(vec![2, 2], &[(1, 4); 4]);
        assert_eq!(u.independent_part().unwrap(), u);
        let diag = tq(vec![2, 2], &[(1, 2), (0, 1), (0, 1), (1, 2)]);
        assert_eq!(diag.independent_part().unwrap(), u);
        let r = t2([[3, 5], [6, 10]]);
        assert_eq!(r.independent_part().unwrap(), r);
        // without normalisation the rank-1 table is not a fixed point
        assert_ne!(r.independent_part_strict().unwrap(), r);
        assert_eq!(diag.independent_part_strict().unwrap(), u);
        assert_eq!(Table::zeros(Shape::new(vec![2]).unwrap()).independent_part(), Err(TableError::DegenerateTotal));
    }

    #[test]
    fn decompose_examples() {
        let r = t2([[3, 5], [6, 10]]);
        let (i, z) = r.decompose().unwrap();
        assert_eq!(i, r);
        assert!(z.is_zero());

        let diag = tq(vec![2, 2], &[(1, 2), (0, 1), (0, 1), (1, 2)]);
        let (i, z) = diag.decompose().unwrap();
        assert_eq!(i, tq(vec![2, 2], &[(1, 4); 4]));
        assert_eq!(z, tq(vec![2, 2], &[(1, 4), (-1, 4), (-1, 4), (1, 4)]));

        let b = checkerboard_plus_uniform(frac(1, 16));
        let (i, z) = b.decompose().unwrap();
        assert_eq!(i, checkerboard_plus_uniform(int(0)));
        assert_eq!(z, b.sub(&i).unwrap());
        assert!(Table::zeros(Shape::new(vec![2, 2]).unwrap()).decompose().is_err());
    }

    #[test]
    fn detect_complex_examples() {
        let rank1 = Table::outer_product(&[vec![frac(1, 3), frac(2, 3)], vec![frac(1, 4), frac(3, 4)]]).unwrap();
        assert_eq!(rank1.detect_complex().unwrap(), complex(2, &[&[1, 2]]));
        let diag = tq(vec![2, 2], &[(1, 2), (0, 1), (0, 1), (1, 2)]);
        assert_eq!(diag.detect_complex().unwrap(), complex(2, &[&[1], &[2]]));
        let b = checkerboard_plus_uniform(frac(1, 16));
        assert_eq!(b.detect_complex().unwrap(), complex(3, &[&[1, 2], &[1, 3], &[2, 3]]));
    }

    #[test]
    fn zero_margin_sampling_examples() {
        let s22 = Shape::new(vec![2, 2]).unwrap();
        let z = sample_zero_margin_table(&s22, &complex(2, &[&[1], &[2]]), 7).unwrap();
        let c = z.entries()[0].clone();
        assert!(!c.is_zero());
        assert_eq!(z.entries(), &[c.clone(), -c.clone(), -c.clone(), c]);

        let s222 = Shape::new(vec![2, 2, 2]).unwrap();
        let z = sample_zero_margin_table(&s222, &complex(3, &[&[1, 2], &[1, 3], &[2, 3]]), 3).unwrap();
        let c = z.entries()[0].clone();
        assert!(!c.is_zero());
        let expected = Table::from_fn(s222.clone(), |idx| {
            if idx.iter().sum::<usize>() % 2 == 1 { c.clone() } else { -c.clone() }
        });
        assert_eq!(z, expected);

        let full = sample_zero_margin_table(&s222, &complex(3, &[&[1, 2, 3]]), 1).unwrap();
        assert!(full.is_zero());
        assert_eq!(
            sample_zero_margin_table(&s222, &complex(3, &[&[1, 2]]), 9).unwrap(),
            sample_zero_margin_table(&s222, &complex(3, &[&[1, 2]]), 9).unwrap()
        );
    }

    #[test]
    fn outer_product_examples() {
        let r = Table::outer_product(&[vec![int(1), int(2)], vec![int(3), int(5)]]).unwrap();
        assert_eq!(r, t2([[3, 5], [6, 10]]));
        let z = Table::outer_product(&[vec![int(1), int(2)], vec![int(0), int(0)]]).unwrap();
        assert!(z.is_zero());
        let v = Table::outer_product(&[vec![int(4), int(7), int(9)]]).unwrap();
        assert_eq!(v.entries(), &[int(4), int(7), int(9)]);
    }
}
