//! Dense exact linear algebra: row reduction, kernels and a subspace type
//! whose representation (reduced row echelon basis) is canonical.

use crate::error::{Error, Result};
use crate::field::{Elem, Field};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: &Field, cols: usize, rows: Vec<Vec<Elem>>) -> Result<Matrix> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::Shape(format!(
                    "row of length {} in a matrix with {cols} columns",
                    r.len()
                )));
            }
            data.extend(r);
        }
        Ok(Matrix {
            field: field.clone(),
            rows: n,
            cols,
            data,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Elem {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> impl Iterator<Item = &[Elem]> + '_ {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if f.is_zero(b) {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = f.add(&out.data[idx], &f.mul(a, b));
                }
            }
        }
        Ok(out)
    }

    /// `self * v` for a column vector `v`.
    pub fn apply(&self, v: &[Elem]) -> Vec<Elem> {
        let f = &self.field;
        (0..self.rows).map(|r| dot(f, self.row(r), v)).collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        self.zip_with(other, Field::add)
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.zip_with(other, Field::sub)
    }

    fn zip_with(&self, other: &Matrix, op: fn(&Field, &Elem, &Elem) -> Elem) -> Matrix {
        let f = &self.field;
        Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| op(f, a, b)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    /// Reduced row echelon form and rank.
    pub fn rref(&self) -> (Matrix, usize) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let rank = pivots.len();
        (m, rank)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Row-reduces in place, returning the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !f.is_zero(self.get(i, c))) else {
                continue;
            };
            self.swap_rows(r, pr);
            let inv = f.inv(self.get(r, c)).expect("nonzero pivot");
            for j in c..self.cols {
                let idx = r * self.cols + j;
                self.data[idx] = f.mul(&self.data[idx], &inv);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c).clone();
                if f.is_zero(&factor) {
                    continue;
                }
                for j in c..self.cols {
                    let pv = &self.data[r * self.cols + j];
                    if f.is_zero(pv) {
                        continue;
                    }
                    let t = f.mul(&factor, pv);
                    let idx = i * self.cols + j;
                    self.data[idx] = f.sub(&self.data[idx], &t);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Right null space `{x : self * x = 0}`.
    pub fn kernel(&self) -> Subspace {
        Subspace::row_space(self).annihilator()
    }
}

pub fn dot(f: &Field, a: &[Elem], b: &[Elem]) -> Elem {
    let mut acc = f.zero();
    for (x, y) in a.iter().zip(b) {
        if f.is_zero(x) || f.is_zero(y) {
            continue;
        }
        acc = f.add(&acc, &f.mul(x, y));
    }
    acc
}

pub fn is_zero_vec(f: &Field, v: &[Elem]) -> bool {
    v.iter().all(|x| f.is_zero(x))
}

pub fn add_vec(f: &Field, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    a.iter().zip(b).map(|(x, y)| f.add(x, y)).collect()
}

pub fn sub_vec(f: &Field, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    a.iter().zip(b).map(|(x, y)| f.sub(x, y)).collect()
}

pub fn scale_vec(f: &Field, c: &Elem, v: &[Elem]) -> Vec<Elem> {
    v.iter().map(|x| f.mul(c, x)).collect()
}

/// `acc += c * v`
pub fn axpy(f: &Field, acc: &mut [Elem], c: &Elem, v: &[Elem]) {
    if f.is_zero(c) {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !f.is_zero(x) {
            *a = f.add(a, &f.mul(c, x));
        }
    }
}

pub fn unit_vec(f: &Field, n: usize, i: usize) -> Vec<Elem> {
    let mut v = vec![f.zero(); n];
    v[i] = f.one();
    v
}

/// A linear subspace of `F^ambient`, stored by its reduced row echelon basis.
/// Equality of subspaces is equality of these bases.
#[derive(Clone, Debug)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: Vec<Vec<Elem>>,
    pivots: Vec<usize>,
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.basis == other.basis
    }
}

impl Eq for Subspace {}

impl Subspace {
    pub fn zero(field: &Field, ambient: usize) -> Subspace {
        Subspace {
            field: field.clone(),
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: &Field, ambient: usize) -> Subspace {
        Subspace {
            field: field.clone(),
            ambient,
            basis: (0..ambient).map(|i| unit_vec(field, ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span<I>(field: &Field, ambient: usize, vectors: I) -> Subspace
    where
        I: IntoIterator<Item = Vec<Elem>>,
    {
        let mut b = SubspaceBuilder::new(field, ambient);
        for v in vectors {
            b.insert(v);
        }
        b.finish()
    }

    pub fn row_space(m: &Matrix) -> Subspace {
        Subspace::span(m.field(), m.cols(), m.row_vecs().map(<[Elem]>::to_vec))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vec<Elem>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_rows(&self.field, self.ambient, self.basis.clone()).expect("uniform rows")
    }

    fn check(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        self.field.ensure_same(&other.field)
    }

    /// Residual of `x` after eliminating the pivot coordinates.
    pub fn reduce(&self, x: &[Elem]) -> Vec<Elem> {
        let f = &self.field;
        let mut v = x.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let c = v[p].clone();
            if !f.is_zero(&c) {
                let neg = f.neg(&c);
                axpy(f, &mut v, &neg, row);
            }
        }
        v
    }

    pub fn member(&self, x: &[Elem]) -> bool {
        x.len() == self.ambient && is_zero_vec(&self.field, &self.reduce(x))
    }

    /// Coordinates of `x` with respect to the canonical basis, if `x` lies in the subspace.
    pub fn coords(&self, x: &[Elem]) -> Option<Vec<Elem>> {
        if !self.member(x) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| x[p].clone()).collect())
    }

    /// The vector `sum_i c_i * basis_i`.
    pub fn combine(&self, coeffs: &[Elem]) -> Vec<Elem> {
        let mut v = vec![self.field.zero(); self.ambient];
        for (c, row) in coeffs.iter().zip(&self.basis) {
            axpy(&self.field, &mut v, c, row);
        }
        v
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check(other)?;
        Ok(other.basis.iter().all(|v| self.member(v)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        let mut b = SubspaceBuilder::from_subspace(self);
        for v in &other.basis {
            b.insert(v.clone());
        }
        Ok(b.finish())
    }

    /// Intersection through the left kernel of the stacked bases: pairs
    /// `(a, b)` with `a U + b V = 0` give the common vectors `a U`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(&self.field, self.ambient));
        }
        let du = self.dim();
        let stacked: Vec<Vec<Elem>> = self.basis.iter().chain(&other.basis).cloned().collect();
        let m = Matrix::from_rows(&self.field, self.ambient, stacked)?.transpose();
        let relations = m.kernel();
        let vectors = relations.basis.iter().map(|rel| self.combine(&rel[..du]));
        Ok(Subspace::span(&self.field, self.ambient, vectors))
    }

    /// `{x : <r, x> = 0 for every basis vector r}` under the standard pairing.
    pub fn annihilator(&self) -> Subspace {
        let f = &self.field;
        let n = self.ambient;
        let mut is_pivot = vec![false; n];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let vectors: Vec<Vec<Elem>> = (0..n)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![f.zero(); n];
                v[free] = f.one();
                for (row, &p) in self.basis.iter().zip(&self.pivots) {
                    v[p] = f.neg(&row[free]);
                }
                v
            })
            .collect();
        Subspace::span(f, n, vectors)
    }

    /// Image under a linear map given as a matrix acting on column vectors.
    pub fn image(&self, map: &Matrix) -> Subspace {
        Subspace::span(&self.field, map.rows(), self.basis.iter().map(|v| map.apply(v)))
    }

    /// Preimage `{x : map x ∈ self}` of this subspace (of the codomain).
    pub fn preimage(&self, map: &Matrix) -> Subspace {
        let eqs = self.annihilator();
        let rows = eqs.basis.iter().map(|e| {
            (0..map.cols())
                .map(|c| {
                    let col: Vec<Elem> = (0..map.rows()).map(|r| map.get(r, c).clone()).collect();
                    dot(&self.field, e, &col)
                })
                .collect::<Vec<_>>()
        });
        Subspace::span(&self.field, map.cols(), rows).annihilator()
    }
}

/// Incremental construction of a subspace in reduced row echelon form.
pub struct SubspaceBuilder {
    inner: Subspace,
}

impl SubspaceBuilder {
    pub fn new(field: &Field, ambient: usize) -> Self {
        SubspaceBuilder {
            inner: Subspace::zero(field, ambient),
        }
    }

    pub fn from_subspace(s: &Subspace) -> Self {
        SubspaceBuilder { inner: s.clone() }
    }

    pub fn dim(&self) -> usize {
        self.inner.dim()
    }

    pub fn is_full(&self) -> bool {
        self.inner.is_full()
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        self.inner.member(v)
    }

    /// Adds `v`; returns true when the dimension grew.
    pub fn insert(&mut self, v: Vec<Elem>) -> bool {
        assert_eq!(v.len(), self.inner.ambient, "vector length");
        if self.inner.is_full() {
            return false;
        }
        let f = self.inner.field.clone();
        let mut v = self.inner.reduce(&v);
        let Some(p) = v.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&v[p]).expect("nonzero");
        for x in v.iter_mut() {
            if !f.is_zero(x) {
                *x = f.mul(x, &inv);
            }
        }
        for row in self.inner.basis.iter_mut() {
            let c = row[p].clone();
            if !f.is_zero(&c) {
                let neg = f.neg(&c);
                axpy(&f, row, &neg, &v);
            }
        }
        let pos = self.inner.pivots.partition_point(|&q| q < p);
        self.inner.pivots.insert(pos, p);
        self.inner.basis.insert(pos, v);
        true
    }

    pub fn finish(self) -> Subspace {
        self.inner
    }
}

/// Coordinates with respect to an arbitrary (not necessarily echelon) basis.
pub struct CoordinateSolver {
    span: Subspace,
    transform: Vec<Vec<Elem>>,
}

impl CoordinateSolver {
    /// Fails with the index of the first vector dependent on its predecessors.
    pub fn new(field: &Field, ambient: usize, basis: &[Vec<Elem>]) -> Result<Self, usize> {
        let k = basis.len();
        let rows: Vec<Vec<Elem>> = basis
            .iter()
            .enumerate()
            .map(|(i, v)| {
                let mut r = v.clone();
                r.extend(unit_vec(field, k, i));
                r
            })
            .collect();
        let mut m = Matrix::from_rows(field, ambient + k, rows).expect("uniform");
        let pivots = m.rref_in_place();
        let rank = pivots.iter().filter(|&&p| p < ambient).count();
        if rank < k {
            let mut b = SubspaceBuilder::new(field, ambient);
            let bad = basis.iter().position(|v| !b.insert(v.clone())).unwrap_or(k);
            return Err(bad);
        }
        let span_rows: Vec<Vec<Elem>> = (0..k).map(|r| m.row(r)[..ambient].to_vec()).collect();
        let transform: Vec<Vec<Elem>> = (0..k).map(|r| m.row(r)[ambient..].to_vec()).collect();
        let span = Subspace {
            field: field.clone(),
            ambient,
            basis: span_rows,
            pivots: pivots[..k].to_vec(),
        };
        Ok(CoordinateSolver { span, transform })
    }

    pub fn dim(&self) -> usize {
        self.transform.len()
    }

    pub fn span(&self) -> &Subspace {
        &self.span
    }

    pub fn coords(&self, x: &[Elem]) -> Option<Vec<Elem>> {
        let f = &self.span.field;
        let echelon = self.span.coords(x)?;
        let mut out = vec![f.zero(); self.dim()];
        for (c, row) in echelon.iter().zip(&self.transform) {
            axpy(f, &mut out, c, row);
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn m(f: &Field, rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(
            f,
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&x| f.from_i64(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    fn v(f: &Field, xs: &[i64]) -> Vec<Elem> {
        xs.iter().map(|&x| f.from_i64(x)).collect()
    }

    #[test]
    fn rref_examples() {
        let f3 = Field::prime(3).unwrap();
        let id = Matrix::identity(&f3, 3);
        assert_eq!(id.rref(), (id.clone(), 3));
        let z = Matrix::zeros(&f3, 2, 2);
        assert_eq!(z.rref(), (z.clone(), 0));
        let q = Field::rational();
        let (r, rank) = m(&q, &[&[1, 2], &[2, 4]]).rref();
        assert_eq!(r, m(&q, &[&[1, 2], &[0, 0]]));
        assert_eq!(rank, 1);
    }

    #[test]
    fn kernel_examples() {
        let f2 = Field::prime(2).unwrap();
        assert!(Matrix::identity(&f2, 4).kernel().is_zero());
        assert!(Matrix::zeros(&f2, 1, 3).kernel().is_full());
        let k = m(&f2, &[&[1, 1]]).kernel();
        assert_eq!(k, Subspace::span(&f2, 2, [v(&f2, &[1, 1])]));
    }

    #[test]
    fn lattice_examples() {
        let f = Field::prime(3).unwrap();
        let e1 = Subspace::span(&f, 2, [v(&f, &[1, 0])]);
        let e2 = Subspace::span(&f, 2, [v(&f, &[0, 1])]);
        assert!(e1.intersect(&e2).unwrap().is_zero());
        assert_eq!(e1.sum(&Subspace::zero(&f, 2)).unwrap(), e1);
        assert_eq!(e1.intersect(&Subspace::full(&f, 2)).unwrap(), e1);
        assert!(matches!(
            e1.sum(&Subspace::zero(&f, 3)),
            Err(Error::AmbientMismatch(2, 3))
        ));
    }

    fn random_subspace(f: &Field, n: usize, rng: &mut ChaCha8Rng) -> Subspace {
        use rand::Rng;
        let k = rng.gen_range(0..=n);
        Subspace::span(f, n, (0..k).map(|_| (0..n).map(|_| f.random(rng)).collect()))
    }

    #[test]
    fn modular_law_on_random_pairs() {
        let f = Field::prime(3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0x5EED);
        for _ in 0..100 {
            let u = random_subspace(&f, 6, &mut rng);
            let w = random_subspace(&f, 6, &mut rng);
            let s = u.sum(&w).unwrap();
            let i = u.intersect(&w).unwrap();
            assert_eq!(s.dim() + i.dim(), u.dim() + w.dim());
            assert_eq!(s, w.sum(&u).unwrap());
            assert!(u.contains(&i).unwrap() && w.contains(&i).unwrap());
            assert!(s.contains(&u).unwrap() && s.contains(&w).unwrap());
        }
    }

    #[test]
    fn kernel_of_rref_agrees() {
        let f = Field::rational();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let rows: Vec<Vec<Elem>> = (0..3).map(|_| (0..5).map(|_| f.random(&mut rng)).collect()).collect();
            let a = Matrix::from_rows(&f, 5, rows).unwrap();
            let k = a.kernel();
            assert_eq!(k, a.rref().0.kernel());
            for x in k.basis() {
                assert!(is_zero_vec(&f, &a.apply(x)));
            }
            assert_eq!(k.dim(), 5 - a.rank());
        }
    }

    #[test]
    fn coordinate_solver() {
        let f = Field::prime(5).unwrap();
        let basis = vec![v(&f, &[1, 1, 0]), v(&f, &[0, 1, 1])];
        let s = CoordinateSolver::new(&f, 3, &basis).unwrap();
        assert_eq!(s.coords(&v(&f, &[2, 5, 3])), Some(v(&f, &[2, 3])));
        assert_eq!(s.coords(&v(&f, &[1, 0, 0])), None);
        let dep = vec![v(&f, &[1, 1, 0]), v(&f, &[2, 2, 0])];
        assert_eq!(CoordinateSolver::new(&f, 3, &dep).err(), Some(1));
    }

    #[test]
    fn preimage_and_image() {
        let f = Field::prime(7).unwrap();
        // projection onto the first coordinate
        let p = m(&f, &[&[1, 0, 0]]);
        let zero = Subspace::zero(&f, 1);
        let k = zero.preimage(&p);
        assert_eq!(k, p.kernel());
        assert_eq!(Subspace::full(&f, 3).image(&p), Subspace::full(&f, 1));
    }
}
