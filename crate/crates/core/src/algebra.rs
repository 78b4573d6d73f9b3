//! Finite-dimensional unital associative algebras given by structure constants.

use std::fmt;
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::linalg::{is_zero_vec, sub_vec, unit_vec, Matrix, Subspace, SubspaceBuilder};
use crate::substructures::{RadicalCertificate, RadicalHint};

/// One nonzero structure constant: `e_i * e_j` has coefficient `coeff` at `e_k`.
pub type SparseRow = Vec<(usize, Elem)>;

/// A radical supplied by a construction, re-verified before use.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropagatedRadical {
    pub radical: Subspace,
    pub evidence: String,
}

#[derive(Clone, Default)]
struct Cache {
    center: OnceLock<Subspace>,
    commutator: OnceLock<Subspace>,
    radical: OnceLock<Result<RadicalCertificate>>,
}

#[derive(Clone)]
pub struct Algebra {
    field: Field,
    dim: usize,
    table: Vec<SparseRow>,
    one: Vec<Elem>,
    labels: Option<Vec<String>>,
    radical_hint: Option<RadicalHint>,
    sym_form: Option<Vec<Elem>>,
    propagated: Option<PropagatedRadical>,
    cache: Cache,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("field", &self.field)
            .field("dim", &self.dim)
            .field("labels", &self.labels)
            .finish_non_exhaustive()
    }
}

impl Algebra {
    /// Builds an algebra from `table[i * dim + j]` = coordinates of `e_i e_j`,
    /// checking the unit law and associativity.
    pub fn new(field: &Field, dim: usize, table: Vec<Vec<Elem>>, one: Vec<Elem>) -> Result<Algebra> {
        if table.len() != dim * dim {
            return Err(Error::Shape(format!(
                "table has {} products, expected {}",
                table.len(),
                dim * dim
            )));
        }
        let mut sparse = Vec::with_capacity(dim * dim);
        for row in table {
            if row.len() != dim {
                return Err(Error::Shape(format!(
                    "product vector of length {}, expected {dim}",
                    row.len()
                )));
            }
            sparse.push(row.into_iter().enumerate().filter(|(_, c)| !field.is_zero(c)).collect());
        }
        Algebra::from_sparse(field, dim, sparse, one)
    }

    /// Like [`Algebra::new`] with each product given by its nonzero entries.
    pub fn from_sparse(field: &Field, dim: usize, table: Vec<SparseRow>, one: Vec<Elem>) -> Result<Algebra> {
        if dim == 0 {
            return Err(Error::Shape("an algebra must have positive dimension".into()));
        }
        if table.len() != dim * dim || one.len() != dim {
            return Err(Error::Shape(format!(
                "expected {} products and an identity of length {dim}",
                dim * dim
            )));
        }
        let mut canonical = Vec::with_capacity(table.len());
        for row in table {
            let mut dense = vec![field.zero(); dim];
            for (k, c) in row {
                if k >= dim || !field.contains(&c) {
                    return Err(Error::Shape(format!("bad structure constant at index {k}")));
                }
                dense[k] = field.add(&dense[k], &c);
            }
            canonical.push(
                dense
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !field.is_zero(c))
                    .collect(),
            );
        }
        if let Some(bad) = one.iter().find(|c| !field.contains(c)) {
            return Err(Error::Shape(format!("identity coordinate {bad:?} not in {field}")));
        }
        let alg = Algebra {
            field: field.clone(),
            dim,
            table: canonical,
            one,
            labels: None,
            radical_hint: None,
            sym_form: None,
            propagated: None,
            cache: Cache::default(),
        };
        alg.validate()?;
        Ok(alg)
    }

    fn validate(&self) -> Result<()> {
        let n = self.dim;
        for i in 0..n {
            let e = self.basis_vector(i);
            if self.mul(&self.one, &e) != e || self.mul(&e, &self.one) != e {
                return Err(Error::UnitLawViolated(i));
            }
        }
        let failure = (0..n).into_par_iter().find_map_first(|i| {
            for j in 0..n {
                let ij = &self.table[i * n + j];
                for k in 0..n {
                    let mut lhs = vec![self.field.zero(); n];
                    for (l, c) in ij {
                        self.accumulate(&mut lhs, c, *l, k);
                    }
                    let mut rhs = vec![self.field.zero(); n];
                    for (m, c) in &self.table[j * n + k] {
                        self.accumulate(&mut rhs, c, i, *m);
                    }
                    if lhs != rhs {
                        return Some(Error::NotAssociative { i, j, k });
                    }
                }
            }
            None
        });
        failure.map_or(Ok(()), Err)
    }

    /// `acc += c * e_i e_j`
    fn accumulate(&self, acc: &mut [Elem], c: &Elem, i: usize, j: usize) {
        let f = &self.field;
        for (k, t) in &self.table[i * self.dim + j] {
            acc[*k] = f.add(&acc[*k], &f.mul(c, t));
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Algebra> {
        if labels.len() != self.dim {
            return Err(Error::Shape(format!(
                "{} labels for an algebra of dimension {}",
                labels.len(),
                self.dim
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn with_radical_hint(mut self, hint: RadicalHint) -> Algebra {
        self.radical_hint = Some(hint);
        self.cache.radical = OnceLock::new();
        self
    }

    pub fn with_propagated_radical(mut self, radical: Subspace, evidence: impl Into<String>) -> Algebra {
        self.propagated = Some(PropagatedRadical {
            radical,
            evidence: evidence.into(),
        });
        self.cache.radical = OnceLock::new();
        self
    }

    /// Attaches a symmetrizing form candidate; it is verified by consumers.
    pub fn with_symmetrizing_form(mut self, lambda: Vec<Elem>) -> Result<Algebra> {
        if lambda.len() != self.dim {
            return Err(Error::Shape(format!(
                "form of length {} for dimension {}",
                lambda.len(),
                self.dim
            )));
        }
        self.sym_form = Some(lambda);
        Ok(self)
    }

    pub fn without_symmetrizing_form(mut self) -> Algebra {
        self.sym_form = None;
        self
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn one(&self) -> &[Elem] {
        &self.one
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn radical_hint(&self) -> Option<&RadicalHint> {
        self.radical_hint.as_ref()
    }

    pub fn symmetrizing_form(&self) -> Option<&[Elem]> {
        self.sym_form.as_deref()
    }

    pub fn propagated_radical(&self) -> Option<&PropagatedRadical> {
        self.propagated.as_ref()
    }

    pub(crate) fn radical_cache(&self) -> &OnceLock<Result<RadicalCertificate>> {
        &self.cache.radical
    }

    /// Nonzero coordinates of `e_i e_j`.
    pub fn product_entries(&self, i: usize, j: usize) -> &[(usize, Elem)] {
        &self.table[i * self.dim + j]
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Vec<Elem> {
        let mut v = vec![self.field.zero(); self.dim];
        for (k, c) in self.product_entries(i, j) {
            v[*k] = c.clone();
        }
        v
    }

    /// Dense table in the layout accepted by [`Algebra::new`].
    pub fn dense_table(&self) -> Vec<Vec<Elem>> {
        (0..self.dim * self.dim)
            .map(|ij| self.basis_product(ij / self.dim, ij % self.dim))
            .collect()
    }

    /// Index `k` with `one = e_k`, if the identity is a basis vector.
    pub fn one_index(&self) -> Option<usize> {
        let f = &self.field;
        let pos = self.one.iter().position(|c| !f.is_zero(c))?;
        let rest_zero = self.one[pos + 1..].iter().all(|c| f.is_zero(c));
        (f.is_one(&self.one[pos]) && rest_zero).then_some(pos)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Elem> {
        unit_vec(&self.field, self.dim, i)
    }

    pub fn zero_vector(&self) -> Vec<Elem> {
        vec![self.field.zero(); self.dim]
    }

    pub fn element(&self, coords: Vec<Elem>) -> Result<AlgebraElement<'_>> {
        if coords.len() != self.dim {
            return Err(Error::Shape(format!(
                "element with {} coordinates in dimension {}",
                coords.len(),
                self.dim
            )));
        }
        if coords.iter().any(|c| !self.field.contains(c)) {
            return Err(Error::Shape(format!("coordinate outside {}", self.field)));
        }
        Ok(AlgebraElement { algebra: self, coords })
    }

    /// Product of coordinate vectors.
    pub fn mul(&self, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
        let f = &self.field;
        let mut out = self.zero_vector();
        for (i, x) in a.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if f.is_zero(y) {
                    continue;
                }
                self.accumulate(&mut out, &f.mul(x, y), i, j);
            }
        }
        out
    }

    pub fn commutator(&self, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
        sub_vec(&self.field, &self.mul(a, b), &self.mul(b, a))
    }

    pub fn pow(&self, a: &[Elem], e: u32) -> Vec<Elem> {
        let mut acc = self.one.clone();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Matrix of `y -> x y` acting on coordinate columns.
    pub fn left_mult_matrix(&self, x: &[Elem]) -> Matrix {
        self.mult_matrix(x, true)
    }

    /// Matrix of `y -> y x` acting on coordinate columns.
    pub fn right_mult_matrix(&self, x: &[Elem]) -> Matrix {
        self.mult_matrix(x, false)
    }

    fn mult_matrix(&self, x: &[Elem], left: bool) -> Matrix {
        let f = &self.field;
        let n = self.dim;
        let mut m = Matrix::zeros(f, n, n);
        for (i, c) in x.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            for j in 0..n {
                let entries = if left {
                    self.product_entries(i, j)
                } else {
                    self.product_entries(j, i)
                };
                for (k, t) in entries {
                    let v = f.add(m.get(*k, j), &f.mul(c, t));
                    m.set(*k, j, v);
                }
            }
        }
        m
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| (i + 1..n).all(|j| self.product_entries(i, j) == self.product_entries(j, i)))
    }

    /// `{x : x e_i = e_i x for all i}`.
    pub fn center(&self) -> &Subspace {
        self.cache.center.get_or_init(|| {
            let f = &self.field;
            let n = self.dim;
            // Row (i, k) of the system: sum_j x_j (c_{ji}^k - c_{ij}^k) = 0.
            let mut eqs = SubspaceBuilder::new(f, n);
            for i in 0..n {
                let mut rows = vec![vec![f.zero(); n]; n];
                for j in 0..n {
                    for (k, c) in self.product_entries(j, i) {
                        rows[*k][j] = f.add(&rows[*k][j], c);
                    }
                    for (k, c) in self.product_entries(i, j) {
                        rows[*k][j] = f.sub(&rows[*k][j], c);
                    }
                }
                for r in rows {
                    eqs.insert(r);
                }
                if eqs.is_full() {
                    break;
                }
            }
            eqs.finish().annihilator()
        })
    }

    /// The commutator space, spanned by all `e_i e_j - e_j e_i`.
    pub fn commutator_space(&self) -> &Subspace {
        self.cache.commutator.get_or_init(|| {
            let n = self.dim;
            let mut b = SubspaceBuilder::new(&self.field, n);
            for i in 0..n {
                for j in i + 1..n {
                    let c = sub_vec(&self.field, &self.basis_product(i, j), &self.basis_product(j, i));
                    b.insert(c);
                }
            }
            b.finish()
        })
    }

    fn check_ambient(&self, u: &Subspace) -> Result<()> {
        if u.ambient() != self.dim {
            return Err(Error::AmbientMismatch(u.ambient(), self.dim));
        }
        self.field.ensure_same(u.field())
    }

    /// `span{u v : u in U, v in V}`.
    pub fn subspace_product(&self, u: &Subspace, v: &Subspace) -> Result<Subspace> {
        self.check_ambient(u)?;
        self.check_ambient(v)?;
        let mut b = SubspaceBuilder::new(&self.field, self.dim);
        'outer: for x in u.basis() {
            for y in v.basis() {
                b.insert(self.mul(x, y));
                if b.is_full() {
                    break 'outer;
                }
            }
        }
        Ok(b.finish())
    }

    pub fn full_space(&self) -> Subspace {
        Subspace::full(&self.field, self.dim)
    }

    pub fn zero_space(&self) -> Subspace {
        Subspace::zero(&self.field, self.dim)
    }

    pub fn span(&self, vectors: impl IntoIterator<Item = Vec<Elem>>) -> Subspace {
        Subspace::span(&self.field, self.dim, vectors)
    }

    /// `A u` for a single element.
    pub fn left_ideal_of(&self, u: &[Elem]) -> Subspace {
        self.span((0..self.dim).map(|i| self.mul(&self.basis_vector(i), u)))
    }

    /// A witness `(e_i, u)` or `(u, e_i)` escaping `U`, if `U` is not an ideal.
    pub fn ideal_violation(&self, u: &Subspace) -> Result<Option<(Vec<Elem>, Vec<Elem>)>> {
        self.check_ambient(u)?;
        for x in u.basis() {
            for i in 0..self.dim {
                let e = self.basis_vector(i);
                if !u.member(&self.mul(&e, x)) {
                    return Ok(Some((e, x.clone())));
                }
                if !u.member(&self.mul(x, &e)) {
                    return Ok(Some((x.clone(), e)));
                }
            }
        }
        Ok(None)
    }

    pub fn is_ideal(&self, u: &Subspace) -> Result<bool> {
        Ok(self.ideal_violation(u)?.is_none())
    }

    pub fn is_left_ideal(&self, u: &Subspace) -> Result<bool> {
        self.check_ambient(u)?;
        Ok(u.basis()
            .iter()
            .all(|x| (0..self.dim).all(|i| u.member(&self.mul(&self.basis_vector(i), x)))))
    }

    /// Smallest two-sided ideal containing `U`.
    pub fn ideal_closure(&self, u: &Subspace) -> Result<Subspace> {
        self.check_ambient(u)?;
        let mut b = SubspaceBuilder::from_subspace(u);
        let mut frontier: Vec<Vec<Elem>> = u.basis().to_vec();
        for _ in 0..=self.dim {
            if frontier.is_empty() {
                return Ok(b.finish());
            }
            let mut next = Vec::new();
            for x in &frontier {
                for i in 0..self.dim {
                    let e = self.basis_vector(i);
                    for y in [self.mul(&e, x), self.mul(x, &e)] {
                        if b.insert(y.clone()) {
                            next.push(y);
                        }
                    }
                }
            }
            frontier = next;
        }
        Err(Error::ClosureDiverged(self.dim))
    }

    /// Two-sided ideal generated by the given elements.
    pub fn ideal_generated_by(&self, gens: &[Vec<Elem>]) -> Result<Subspace> {
        self.ideal_closure(&self.span(gens.iter().cloned()))
    }

    /// `{x : x s = 0 for all s in S}`.
    pub fn left_annihilator(&self, s: &Subspace) -> Result<Subspace> {
        self.annihilator(s, true)
    }

    /// `{x : s x = 0 for all s in S}`.
    pub fn right_annihilator(&self, s: &Subspace) -> Result<Subspace> {
        self.annihilator(s, false)
    }

    fn annihilator(&self, s: &Subspace, left: bool) -> Result<Subspace> {
        self.check_ambient(s)?;
        let mut eqs = SubspaceBuilder::new(&self.field, self.dim);
        for v in s.basis() {
            let m = if left {
                self.right_mult_matrix(v)
            } else {
                self.left_mult_matrix(v)
            };
            for r in m.row_vecs() {
                eqs.insert(r.to_vec());
            }
            if eqs.is_full() {
                break;
            }
        }
        Ok(eqs.finish().annihilator())
    }

    /// Powers `J^0 = A, J^1 = J, ...` down to the first zero power.
    pub fn powers(&self, j: &Subspace) -> Result<Vec<Subspace>> {
        self.check_ambient(j)?;
        let mut out = vec![self.full_space(), j.clone()];
        while !out.last().expect("nonempty").is_zero() {
            if out.len() > self.dim + 1 {
                return Err(Error::NotNilpotent(self.dim));
            }
            let next = self.subspace_product(out.last().expect("nonempty"), j)?;
            out.push(next);
        }
        Ok(out)
    }

    pub fn is_nilpotent(&self, j: &Subspace) -> Result<bool> {
        match self.powers(j) {
            Ok(_) => Ok(true),
            Err(Error::NotNilpotent(_)) => Ok(false),
            Err(e) => Err(e),
        }
    }

    pub fn loewy_series(&self, j: &Subspace) -> Result<LoewyProfile> {
        let powers = self.powers(j)?;
        let layers: Vec<usize> = powers.windows(2).map(|w| w[0].dim() - w[1].dim()).collect();
        Ok(LoewyProfile {
            ell: layers.len(),
            layers,
        })
    }

    pub fn is_basis_element_nilpotent(&self, i: usize) -> bool {
        let e = self.basis_vector(i);
        is_zero_vec(&self.field, &self.pow(&e, self.dim as u32))
    }

    /// Human-readable element: labeled linear combination, or raw coordinates.
    pub fn format_vector(&self, v: &[Elem]) -> String {
        let f = &self.field;
        let Some(labels) = &self.labels else {
            let parts: Vec<String> = v.iter().map(|c| f.format(c)).collect();
            return format!("({})", parts.join(", "));
        };
        let mut out = String::new();
        for (c, label) in v.iter().zip(labels) {
            if f.is_zero(c) {
                continue;
            }
            let lit = f.format(c);
            let (sign, mag) = match lit.strip_prefix('-') {
                Some(abs) => (if out.is_empty() { "-" } else { " - " }, abs.to_string()),
                None => (if out.is_empty() { "" } else { " + " }, lit),
            };
            out.push_str(sign);
            match (mag == "1", label.as_str()) {
                (true, l) => out.push_str(l),
                (false, "1") => out.push_str(&mag),
                (false, l) => {
                    out.push_str(&mag);
                    out.push('*');
                    out.push_str(l);
                }
            }
        }
        if out.is_empty() {
            "0".into()
        } else {
            out
        }
    }

    pub fn format_subspace(&self, s: &Subspace) -> Vec<String> {
        s.basis().iter().map(|v| self.format_vector(v)).collect()
    }

    /// Same table, unit and field (labels, hints and caches ignored).
    pub fn same_table(&self, other: &Algebra) -> bool {
        self.field == other.field && self.dim == other.dim && self.table == other.table && self.one == other.one
    }
}

/// An element together with the algebra it lives in.
#[derive(Clone, Debug)]
pub struct AlgebraElement<'a> {
    algebra: &'a Algebra,
    coords: Vec<Elem>,
}

impl<'a> AlgebraElement<'a> {
    pub fn algebra(&self) -> &'a Algebra {
        self.algebra
    }

    pub fn coords(&self) -> &[Elem] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Elem> {
        self.coords
    }

    pub fn multiply(&self, other: &AlgebraElement<'_>) -> Result<AlgebraElement<'a>> {
        if !std::ptr::eq(self.algebra, other.algebra) && !self.algebra.same_table(other.algebra) {
            return Err(Error::AlgebraMismatch);
        }
        Ok(AlgebraElement {
            algebra: self.algebra,
            coords: self.algebra.mul(&self.coords, &other.coords),
        })
    }
}

impl PartialEq for AlgebraElement<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.algebra.same_table(other.algebra) && self.coords == other.coords
    }
}

impl fmt::Display for AlgebraElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.algebra.format_vector(&self.coords))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct LoewyProfile {
    pub layers: Vec<usize>,
    pub ell: usize,
}

#[cfg(test)]
mod tests {
    use super::*;

    /// F[X]/(X^n) with basis 1, X, ..., X^{n-1}.
    pub(crate) fn truncated(f: &Field, n: usize) -> Algebra {
        let mut table = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let mut row = SparseRow::new();
                if i + j < n {
                    row.push((i + j, f.one()));
                }
                table.push(row);
            }
        }
        Algebra::from_sparse(f, n, table, unit_vec(f, n, 0)).unwrap()
    }

    /// 2x2 matrices with basis E11, E12, E21, E22.
    fn mat2(f: &Field) -> Algebra {
        let idx = |r: usize, c: usize| 2 * r + c;
        let mut table = vec![SparseRow::new(); 16];
        for (a, b) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            for (c, d) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
                if b == c {
                    table[idx(a, b) * 4 + idx(c, d)].push((idx(a, d), f.one()));
                }
            }
        }
        let one = vec![f.one(), f.zero(), f.zero(), f.one()];
        Algebra::from_sparse(f, 4, table, one).unwrap()
    }

    #[test]
    fn identity_acts_trivially() {
        let f = Field::prime(3).unwrap();
        let a = truncated(&f, 3);
        let x = vec![f.from_i64(1), f.from_i64(2), f.from_i64(1)];
        assert_eq!(a.mul(a.one(), &x), x);
        assert_eq!(a.left_mult_matrix(a.one()), Matrix::identity(&f, 3));
        let x1 = a.basis_vector(1);
        let l = a.left_mult_matrix(&x1);
        assert!(l.mul(&l).unwrap().mul(&l).unwrap().is_zero());
    }

    #[test]
    fn rejects_bad_tables() {
        let f = Field::prime(2).unwrap();
        // e0 = 1, e1 with e1 e1 = e0 + e1 is fine; break the unit law instead.
        let table = vec![vec![(0, f.one())], vec![(1, f.one())], vec![(0, f.one())], vec![]];
        let err = Algebra::from_sparse(&f, 2, table, unit_vec(&f, 2, 0)).unwrap_err();
        assert_eq!(err, Error::UnitLawViolated(1));
    }

    #[test]
    fn detects_non_associativity() {
        // basis 1, a, b with a*a = b, a*b = 0, b*a = a: (aa)a = ba = a but a(aa) = ab = 0.
        let f = Field::prime(5).unwrap();
        let one = f.one();
        let table = vec![
            vec![(0, one.clone())],
            vec![(1, one.clone())],
            vec![(2, one.clone())],
            vec![(1, one.clone())],
            vec![(2, one.clone())],
            vec![],
            vec![(2, one.clone())],
            vec![(1, one.clone())],
            vec![],
        ];
        let err = Algebra::from_sparse(&f, 3, table, unit_vec(&f, 3, 0)).unwrap_err();
        assert!(matches!(err, Error::NotAssociative { .. }));
    }

    #[test]
    fn commutative_invariants() {
        let f = Field::prime(3).unwrap();
        let a = truncated(&f, 4);
        assert!(a.center().is_full());
        assert!(a.commutator_space().is_zero());
        assert!(a.is_commutative());
    }

    #[test]
    fn matrix_algebra_center_and_commutators() {
        let f = Field::prime(3).unwrap();
        let m = mat2(&f);
        assert_eq!(m.center(), &m.span([m.one().to_vec()]));
        assert_eq!(m.commutator_space().dim(), 3);
        assert!(!m.is_ideal(m.commutator_space()).unwrap());
        assert!(m.ideal_closure(m.commutator_space()).unwrap().is_full());
    }

    #[test]
    fn ideals_and_annihilators() {
        let f = Field::prime(2).unwrap();
        let a = truncated(&f, 3);
        assert!(a.is_ideal(&a.zero_space()).unwrap());
        assert!(a.is_ideal(&a.full_space()).unwrap());
        let j = a.span([a.basis_vector(1), a.basis_vector(2)]);
        assert!(a.is_ideal(&j).unwrap());
        let unit = a.span([a.one().to_vec()]);
        assert!(a.left_annihilator(&unit).unwrap().is_zero());
        assert!(a.right_annihilator(&a.zero_space()).unwrap().is_full());
        assert_eq!(a.right_annihilator(&j).unwrap(), a.span([a.basis_vector(2)]));
        assert_eq!(a.subspace_product(&j, &unit).unwrap(), j);
        assert_eq!(
            a.ideal_closure(&a.span([a.basis_vector(2)])).unwrap(),
            a.span([a.basis_vector(2)])
        );
    }

    #[test]
    fn loewy_of_dual_numbers() {
        let f = Field::rational();
        let a = truncated(&f, 2);
        let j = a.span([a.basis_vector(1)]);
        let profile = a.loewy_series(&j).unwrap();
        assert_eq!(profile.layers, vec![1, 1]);
        assert_eq!(profile.ell, 2);
        assert_eq!(a.loewy_series(&a.full_space()), Err(Error::NotNilpotent(2)));
    }

    #[test]
    fn element_formatting() {
        let f = Field::prime(3).unwrap();
        let a = truncated(&f, 3)
            .with_labels(vec!["1".into(), "X".into(), "X^2".into()])
            .unwrap();
        let v = vec![f.from_i64(2), f.zero(), f.one()];
        assert_eq!(a.format_vector(&v), "2 + X^2");
        assert_eq!(a.format_vector(&a.zero_vector()), "0");
        let x = a.element(a.basis_vector(1)).unwrap();
        assert_eq!(x.multiply(&x).unwrap().to_string(), "X^2");
        let plain = truncated(&f, 2);
        assert_eq!(plain.format_vector(&plain.basis_vector(1)), "(0, 1)");
    }
}
