//! Builders for new algebras. Each builder passes on what it knows about the
//! radical so that the result never needs a fresh hint.

use crate::algebra::{Algebra, SparseRow};
use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::linalg::{CoordinateSolver, Matrix, Subspace, SubspaceBuilder};
use crate::substructures::{self, property_verdicts, RadicalHint};

/// `u ⊗ v` in the basis `e_i ⊗ f_j` at index `i * dim(v) + j`.
pub fn tensor_vec(f: &Field, u: &[Elem], v: &[Elem]) -> Vec<Elem> {
    let mut out = Vec::with_capacity(u.len() * v.len());
    for x in u {
        for y in v {
            out.push(f.mul(x, y));
        }
    }
    out
}

/// `U ⊗ V` as a subspace of the tensor product.
pub fn tensor_subspace(u: &Subspace, v: &Subspace) -> Subspace {
    let f = u.field();
    let vectors = u
        .basis()
        .iter()
        .flat_map(|x| v.basis().iter().map(move |y| tensor_vec(f, x, y)));
    Subspace::span(f, u.ambient() * v.ambient(), vectors)
}

fn tensor_label(a: &str, b: &str) -> String {
    match (a, b) {
        ("1", "1") => "1".into(),
        _ => format!("{a}⊗{b}"),
    }
}

pub fn tensor(a1: &Algebra, a2: &Algebra) -> Result<Algebra> {
    let f = a1.field();
    f.ensure_same(a2.field())?;
    let (n1, n2) = (a1.dim(), a2.dim());
    let n = n1 * n2;
    let mut table = vec![SparseRow::new(); n * n];
    for i in 0..n1 {
        for j in 0..n2 {
            for k in 0..n1 {
                for l in 0..n2 {
                    let row = &mut table[(i * n2 + j) * n + (k * n2 + l)];
                    for (a, c1) in a1.product_entries(i, k) {
                        for (b, c2) in a2.product_entries(j, l) {
                            row.push((a * n2 + b, f.mul(c1, c2)));
                        }
                    }
                }
            }
        }
    }
    let one = tensor_vec(f, a1.one(), a2.one());
    let mut alg = Algebra::from_sparse(f, n, table, one)?;
    if let (Some(l1), Some(l2)) = (a1.labels(), a2.labels()) {
        let labels = l1
            .iter()
            .flat_map(|a| l2.iter().map(move |b| tensor_label(a, b)))
            .collect();
        alg = alg.with_labels(labels)?;
    }
    if let (Some(s1), Some(s2)) = (a1.symmetrizing_form(), a2.symmetrizing_form()) {
        alg = alg.with_symmetrizing_form(tensor_vec(f, s1, s2))?;
    }
    if let (Ok(j1), Ok(j2)) = (substructures::jacobson_radical(a1), substructures::jacobson_radical(a2)) {
        // Over a perfect field (A1/J1) ⊗ (A2/J2) is semisimple.
        let j = tensor_subspace(&j1, &a2.full_space()).sum(&tensor_subspace(&a1.full_space(), &j2))?;
        alg = alg.with_propagated_radical(j, "J1⊗A2 + A1⊗J2 over a perfect field");
    }
    Ok(alg)
}

/// The trivial extension `A ⊕ A*`: basis `e_0..e_{n-1}` followed by the dual basis.
pub fn trivial_extension(a: &Algebra) -> Result<Algebra> {
    let f = a.field();
    let n = a.dim();
    let m = 2 * n;
    let mut table = vec![SparseRow::new(); m * m];
    for i in 0..n {
        for j in 0..n {
            table[i * m + j] = a.product_entries(i, j).to_vec();
        }
    }
    // (e_i f)(x) = f(x e_i) and (f e_i)(x) = f(e_i x) for f = e_j*.
    for mm in 0..n {
        for i in 0..n {
            for (j, c) in a.product_entries(mm, i) {
                table[i * m + (n + j)].push((n + mm, c.clone()));
            }
            for (j, c) in a.product_entries(i, mm) {
                table[(n + j) * m + i].push((n + mm, c.clone()));
            }
        }
    }
    let mut one = a.one().to_vec();
    one.resize(m, f.zero());
    let mut lambda = vec![f.zero(); n];
    lambda.extend(a.one().iter().cloned());
    let mut t = Algebra::from_sparse(f, m, table, one)?.with_symmetrizing_form(lambda)?;
    if let Some(labels) = a.labels() {
        let mut all = labels.to_vec();
        all.extend(labels.iter().map(|l| format!("d({l})")));
        t = t.with_labels(all)?;
    }
    if let Ok(j) = substructures::jacobson_radical(a) {
        let vectors = j
            .basis()
            .iter()
            .map(|v| embed_base(f, v))
            .chain((n..m).map(|k| crate::linalg::unit_vec(f, m, k)));
        let radical = Subspace::span(f, m, vectors);
        t = t.with_propagated_radical(radical, "J(A) ⊕ A*");
    }
    Ok(t)
}

/// `a ∈ A` as the element `(a, 0)` of the trivial extension.
pub fn embed_base(f: &Field, a: &[Elem]) -> Vec<Elem> {
    let mut v = a.to_vec();
    v.resize(2 * a.len(), f.zero());
    v
}

/// `φ ∈ A*` (in dual coordinates) as the element `(0, φ)` of the trivial extension.
pub fn embed_dual(f: &Field, phi: &[Elem]) -> Vec<Elem> {
    let mut v = vec![f.zero(); phi.len()];
    v.extend(phi.iter().cloned());
    v
}

/// `(A/U)* = {φ : φ(U) = 0}` in dual coordinates.
pub fn dual_of_quotient(u: &Subspace) -> Subspace {
    u.annihilator()
}

/// The subspaces and verdicts deciding the ideal properties of a trivial extension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrivExtCriteria {
    /// `{b ∈ soc(Z) : A b ⊆ K}`
    pub s: Subspace,
    /// `K + A·J(Z)`
    pub i: Subspace,
    pub s_is_ideal: bool,
    pub i_is_ideal: bool,
    pub k_is_ideal: bool,
    pub predicted_p1: bool,
    pub predicted_p2: bool,
}

pub fn trivext_criteria(a: &Algebra) -> Result<TrivExtCriteria> {
    let f = a.field();
    let k = a.commutator_space();
    let socz = substructures::soc_of_center(a)?;
    let jz = substructures::j_of_center(a)?;
    let k_dual = k.annihilator();
    let mut eqs = SubspaceBuilder::new(f, a.dim());
    for i in 0..a.dim() {
        let l = a.left_mult_matrix(&a.basis_vector(i));
        for c in k_dual.basis() {
            let row = (0..a.dim())
                .map(|col| {
                    let column: Vec<Elem> = (0..a.dim()).map(|r| l.get(r, col).clone()).collect();
                    crate::linalg::dot(f, c, &column)
                })
                .collect();
            eqs.insert(row);
        }
    }
    let s = socz.intersect(&eqs.finish().annihilator())?;
    let i = k.sum(&a.subspace_product(&a.full_space(), &jz)?)?;
    let s_is_ideal = a.is_ideal(&s)?;
    let i_is_ideal = a.is_ideal(&i)?;
    let k_is_ideal = a.is_ideal(k)?;
    let p1 = property_verdicts(a)?.p1.holds;
    Ok(TrivExtCriteria {
        predicted_p1: p1 && k_is_ideal,
        predicted_p2: s_is_ideal && i_is_ideal,
        s,
        i,
        s_is_ideal,
        i_is_ideal,
        k_is_ideal,
    })
}

/// Coordinates on `A/I` via the columns that are not pivots of the ideal's echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientMap {
    ideal: Subspace,
    complement: Vec<usize>,
}

impl QuotientMap {
    pub fn new(ideal: &Subspace) -> QuotientMap {
        let mut is_pivot = vec![false; ideal.ambient()];
        for &p in ideal.pivots() {
            is_pivot[p] = true;
        }
        QuotientMap {
            ideal: ideal.clone(),
            complement: (0..ideal.ambient()).filter(|&c| !is_pivot[c]).collect(),
        }
    }

    pub fn ideal(&self) -> &Subspace {
        &self.ideal
    }

    pub fn complement(&self) -> &[usize] {
        &self.complement
    }

    pub fn quotient_dim(&self) -> usize {
        self.complement.len()
    }

    /// The canonical projection `A -> A/I`.
    pub fn project(&self, x: &[Elem]) -> Vec<Elem> {
        let r = self.ideal.reduce(x);
        self.complement.iter().map(|&c| r[c].clone()).collect()
    }

    /// The representative of `x̄` supported on the complement columns.
    pub fn lift(&self, xbar: &[Elem]) -> Vec<Elem> {
        let f = self.ideal.field();
        let mut v = vec![f.zero(); self.ideal.ambient()];
        for (&c, x) in self.complement.iter().zip(xbar) {
            v[c] = x.clone();
        }
        v
    }

    pub fn project_subspace(&self, u: &Subspace) -> Subspace {
        Subspace::span(
            u.field(),
            self.quotient_dim(),
            u.basis().iter().map(|x| self.project(x)),
        )
    }

    /// `{x : x̄ ∈ Ū}`
    pub fn preimage(&self, ubar: &Subspace) -> Result<Subspace> {
        let lifted = Subspace::span(
            ubar.field(),
            self.ideal.ambient(),
            ubar.basis().iter().map(|x| self.lift(x)),
        );
        lifted.sum(&self.ideal)
    }
}

#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: Algebra,
    pub map: QuotientMap,
}

/// `A/I` for a proper two-sided ideal `I`.
pub fn quotient(a: &Algebra, ideal: &Subspace) -> Result<Quotient> {
    if ideal.ambient() != a.dim() {
        return Err(Error::AmbientMismatch(ideal.ambient(), a.dim()));
    }
    if ideal.is_full() {
        return Err(Error::ImproperIdeal);
    }
    if !a.is_ideal(ideal)? {
        return Err(Error::NotAnIdeal);
    }
    let f = a.field();
    let map = QuotientMap::new(ideal);
    let comp = map.complement().to_vec();
    let mut table = Vec::with_capacity(comp.len() * comp.len());
    for &i in &comp {
        for &j in &comp {
            table.push(map.project(&a.basis_product(i, j)));
        }
    }
    let mut q = Algebra::new(f, comp.len(), table, map.project(a.one()))?;
    if let Some(labels) = a.labels() {
        q = q.with_labels(comp.iter().map(|&c| labels[c].clone()).collect())?;
    }
    if let Ok(j) = substructures::jacobson_radical(a) {
        // A/(J + I) is a quotient of the semisimple A/J.
        q = q.with_propagated_radical(map.project_subspace(&j), "(J(A) + I)/I");
    } else if let Some(RadicalHint::LocalCodim1 { vectors: None }) = a.radical_hint() {
        if q.one_index().is_some() {
            q = q.with_radical_hint(RadicalHint::LocalCodim1 { vectors: None });
        }
    }
    Ok(Quotient { algebra: q, map })
}

pub fn opposite(a: &Algebra) -> Result<Algebra> {
    let n = a.dim();
    let table = (0..n * n)
        .map(|ij| a.product_entries(ij % n, ij / n).to_vec())
        .collect();
    let mut op = Algebra::from_sparse(a.field(), n, table, a.one().to_vec())?;
    if let Some(labels) = a.labels() {
        op = op.with_labels(labels.to_vec())?;
    }
    if let Some(lambda) = a.symmetrizing_form() {
        op = op.with_symmetrizing_form(lambda.to_vec())?;
    }
    if let Ok(j) = substructures::jacobson_radical(a) {
        op = op.with_propagated_radical(j, "J(A^op) = J(A)");
    } else if let Some(h) = a.radical_hint() {
        op = op.with_radical_hint(h.clone());
    }
    Ok(op)
}

/// Generators `x_1..x_n` with `x_i^{b_i} = 0` and `x_j x_i = q_{ji} x_i x_j` for `j > i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewPresentation {
    pub names: Vec<String>,
    pub bounds: Vec<u32>,
    /// `q[j][i]` for `j > i`; other entries are ignored.
    pub q: Vec<Vec<Elem>>,
}

impl SkewPresentation {
    /// All generators pairwise commuting up to the same scalar `q`.
    pub fn uniform(field: &Field, names: &[&str], bounds: &[u32], q: &Elem) -> SkewPresentation {
        let n = bounds.len();
        SkewPresentation {
            names: names.iter().map(|s| s.to_string()).collect(),
            bounds: bounds.to_vec(),
            q: (0..n)
                .map(|j| (0..n).map(|i| if j > i { q.clone() } else { field.one() }).collect())
                .collect(),
        }
    }

    pub fn commutative(field: &Field, names: &[&str], bounds: &[u32]) -> SkewPresentation {
        SkewPresentation::uniform(field, names, bounds, &field.one())
    }

    pub fn default_names(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("x{i}")).collect()
    }

    pub fn dim(&self) -> usize {
        self.bounds.iter().map(|&b| b as usize).product()
    }

    /// Exponent tuple of basis vector `index` (first variable varies fastest).
    pub fn exponents(&self, mut index: usize) -> Vec<u32> {
        self.bounds
            .iter()
            .map(|&b| {
                let e = (index % b as usize) as u32;
                index /= b as usize;
                e
            })
            .collect()
    }

    pub fn index(&self, exps: &[u32]) -> Option<usize> {
        let mut idx = 0;
        let mut place = 1;
        for (&e, &b) in exps.iter().zip(&self.bounds) {
            if e >= b {
                return None;
            }
            idx += e as usize * place;
            place *= b as usize;
        }
        Some(idx)
    }

    pub fn monomial_label(&self, exps: &[u32]) -> String {
        let mut s = String::new();
        for (name, &e) in self.names.iter().zip(exps) {
            match e {
                0 => {}
                1 => s.push_str(name),
                _ => s.push_str(&format!("{name}^{e}")),
            }
        }
        if s.is_empty() {
            "1".into()
        } else {
            s
        }
    }

    fn validate(&self, field: &Field) -> Result<()> {
        let n = self.bounds.len();
        if n == 0 {
            return Err(Error::InvalidPresentation("no generators".into()));
        }
        if self.names.len() != n {
            return Err(Error::InvalidPresentation(format!(
                "{} names for {n} generators",
                self.names.len()
            )));
        }
        if self.bounds.contains(&0) {
            return Err(Error::InvalidPresentation(
                "nilpotency bounds must be at least 1".into(),
            ));
        }
        if self.q.len() != n || self.q.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidPresentation(format!("q must be a {n}x{n} table")));
        }
        for j in 0..n {
            for i in 0..j {
                if !field.contains(&self.q[j][i]) || field.is_zero(&self.q[j][i]) {
                    return Err(Error::InvalidPresentation(format!(
                        "q[{}][{}] must be a nonzero scalar",
                        j + 1,
                        i + 1
                    )));
                }
            }
        }
        Ok(())
    }
}

pub fn from_skew_presentation(p: &SkewPresentation, field: &Field) -> Result<Algebra> {
    p.validate(field)?;
    let n = p.bounds.len();
    let dim = p.dim();
    let exps: Vec<Vec<u32>> = (0..dim).map(|i| p.exponents(i)).collect();
    let mut table = Vec::with_capacity(dim * dim);
    for a in &exps {
        for b in &exps {
            let sum: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
            let Some(k) = p.index(&sum) else {
                table.push(SparseRow::new());
                continue;
            };
            let mut coeff = field.one();
            for j in 0..n {
                for i in 0..j {
                    let e = a[j] as u64 * b[i] as u64;
                    if e > 0 {
                        coeff = field.mul(&coeff, &field.pow(&p.q[j][i], e));
                    }
                }
            }
            table.push(vec![(k, coeff)]);
        }
    }
    let one = crate::linalg::unit_vec(field, dim, 0);
    let labels = exps.iter().map(|e| p.monomial_label(e)).collect();
    Ok(Algebra::from_sparse(field, dim, table, one)?
        .with_labels(labels)?
        .with_radical_hint(RadicalHint::LocalCodim1 { vectors: None }))
}

/// A word in the generators, as generator indices.
pub type Word = Vec<usize>;

/// Run-length rendering, e.g. `[0, 0, 1]` with names `M, N` is `M^2N`.
pub fn format_word(word: &[usize], names: &[String]) -> String {
    if word.is_empty() {
        return "1".into();
    }
    let mut s = String::new();
    let mut i = 0;
    while i < word.len() {
        let g = word[i];
        let mut run = 1;
        while i + run < word.len() && word[i + run] == g {
            run += 1;
        }
        s.push_str(&names[g]);
        if run > 1 {
            s.push_str(&format!("^{run}"));
        }
        i += run;
    }
    s
}

/// Parses `M^2N`, `1`, `N M` style words over the given generator names.
pub fn parse_word(text: &str, names: &[String]) -> Result<Word> {
    let bad = |reason: &str| Error::BadExpression {
        expr: text.to_string(),
        reason: reason.to_string(),
    };
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s == "1" {
        return Ok(Word::new());
    }
    let mut word = Word::new();
    let mut rest = s.as_str();
    while !rest.is_empty() {
        let (g, name) = names
            .iter()
            .enumerate()
            .filter(|(_, n)| rest.starts_with(n.as_str()))
            .max_by_key(|(_, n)| n.len())
            .ok_or_else(|| bad("unknown generator"))?;
        rest = &rest[name.len()..];
        let mut power = 1usize;
        if let Some(r) = rest.strip_prefix('^') {
            let digits: String = r.chars().take_while(char::is_ascii_digit).collect();
            power = digits.parse().map_err(|_| bad("expected an exponent"))?;
            rest = &r[digits.len()..];
        }
        word.extend(std::iter::repeat_n(g, power));
    }
    Ok(word)
}

pub fn evaluate_word(field: &Field, size: usize, generators: &[Matrix], word: &[usize]) -> Result<Matrix> {
    let mut m = Matrix::identity(field, size);
    for &g in word {
        m = m.mul(&generators[g])?;
    }
    Ok(m)
}

#[derive(Clone, Debug)]
pub struct MatrixAlgebra {
    pub algebra: Algebra,
    pub words: Vec<Word>,
    pub matrices: Vec<Matrix>,
}

fn flatten(m: &Matrix) -> Vec<Elem> {
    m.row_vecs().flat_map(|r| r.iter().cloned()).collect()
}

/// The unital subalgebra of `Mat_size` generated by the given matrices.
pub fn from_matrix_generators(
    field: &Field,
    size: usize,
    names: &[String],
    generators: &[Matrix],
    claimed_basis: Option<&[Word]>,
) -> Result<MatrixAlgebra> {
    if names.len() != generators.len() {
        return Err(Error::InvalidPresentation(format!(
            "{} names for {} generators",
            names.len(),
            generators.len()
        )));
    }
    for (name, g) in names.iter().zip(generators) {
        if g.rows() != size || g.cols() != size {
            return Err(Error::Shape(format!(
                "generator {name} is {}x{}, expected {size}x{size}",
                g.rows(),
                g.cols()
            )));
        }
        field.ensure_same(g.field())?;
    }
    let ambient = size * size;
    let mut span = SubspaceBuilder::new(field, ambient);
    let identity = Matrix::identity(field, size);
    span.insert(flatten(&identity));
    let mut words: Vec<Word> = vec![Word::new()];
    let mut matrices = vec![identity];
    let mut next = 0;
    while next < words.len() {
        for (g, gen) in generators.iter().enumerate() {
            let m = matrices[next].mul(gen)?;
            if span.insert(flatten(&m)) {
                let mut w = words[next].clone();
                w.push(g);
                words.push(w);
                matrices.push(m);
            }
        }
        next += 1;
        if words.len() > ambient {
            return Err(Error::Internal("matrix closure exceeded the ambient dimension".into()));
        }
    }
    if let Some(claimed) = claimed_basis {
        let evaluated = claimed
            .iter()
            .map(|w| {
                if w.iter().any(|&g| g >= generators.len()) {
                    return Err(Error::BasisClaimFailed("word uses an unknown generator".into()));
                }
                evaluate_word(field, size, generators, w)
            })
            .collect::<Result<Vec<_>>>()?;
        let flat: Vec<Vec<Elem>> = evaluated.iter().map(flatten).collect();
        if let Err(bad) = CoordinateSolver::new(field, ambient, &flat) {
            return Err(Error::BasisClaimFailed(format!(
                "{} depends on the preceding words",
                format_word(&claimed[bad], names)
            )));
        }
        if claimed.len() != words.len() {
            return Err(Error::BasisClaimFailed(format!(
                "{} independent words, but the algebra has dimension {}",
                claimed.len(),
                words.len()
            )));
        }
        words = claimed.to_vec();
        matrices = evaluated;
    }
    let flat: Vec<Vec<Elem>> = matrices.iter().map(flatten).collect();
    let solver = CoordinateSolver::new(field, ambient, &flat)
        .map_err(|_| Error::Internal("closure basis is dependent".into()))?;
    let dim = words.len();
    let mut table = Vec::with_capacity(dim * dim);
    for a in &matrices {
        for b in &matrices {
            let c = solver
                .coords(&flatten(&a.mul(b)?))
                .ok_or_else(|| Error::Internal("closure is not multiplicatively closed".into()))?;
            table.push(c);
        }
    }
    let one = solver
        .coords(&flatten(&Matrix::identity(field, size)))
        .expect("identity lies in the closure");
    let labels = words.iter().map(|w| format_word(w, names)).collect();
    let algebra = Algebra::new(field, dim, table, one)?.with_labels(labels)?;
    Ok(MatrixAlgebra {
        algebra,
        words,
        matrices,
    })
}

/// Full matrix algebra `Mat_n(F)` with basis `E_rc` in row-major order.
pub fn full_matrix_algebra(field: &Field, n: usize) -> Result<Algebra> {
    let dim = n * n;
    let mut table = vec![SparseRow::new(); dim * dim];
    for a in 0..n {
        for b in 0..n {
            for d in 0..n {
                table[(a * n + b) * dim + (b * n + d)].push((a * n + d, field.one()));
            }
        }
    }
    let one: Vec<Elem> = (0..dim)
        .map(|i| if i / n == i % n { field.one() } else { field.zero() })
        .collect();
    let labels = (0..dim).map(|i| format!("E{}{}", i / n + 1, i % n + 1)).collect();
    // The matrix trace is a symmetrizing form in every characteristic.
    let lambda = one.clone();
    let alg = Algebra::from_sparse(field, dim, table, one)?
        .with_labels(labels)?
        .with_symmetrizing_form(lambda)?;
    Ok(alg.with_radical_hint(RadicalHint::Semisimple))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::substructures::{jacobson_radical, socle};

    fn gf(p: u32) -> Field {
        Field::prime(p).unwrap()
    }

    #[test]
    fn dual_numbers_from_skew() {
        let f = gf(3);
        let p = SkewPresentation::commutative(&f, &["X"], &[2]);
        let a = from_skew_presentation(&p, &f).unwrap();
        assert_eq!(a.dim(), 2);
        assert_eq!(a.labels().unwrap(), ["1", "X"]);
        assert!(a.is_commutative());
        assert_eq!(jacobson_radical(&a).unwrap().dim(), 1);
    }

    #[test]
    fn skew_labels_and_signs() {
        let f = gf(3);
        let p = SkewPresentation::uniform(&f, &["x1", "x2"], &[3, 2], &f.from_i64(-1));
        let a = from_skew_presentation(&p, &f).unwrap();
        assert_eq!(a.dim(), 6);
        let x1 = a.basis_vector(1);
        let x2 = a.basis_vector(3);
        assert_eq!(a.labels().unwrap()[5], "x1^2x2");
        // x2 x1 = -x1 x2
        let x1x2 = a.mul(&x1, &x2);
        assert_eq!(a.mul(&x2, &x1), x1x2.iter().map(|c| f.neg(c)).collect::<Vec<_>>());
    }

    #[test]
    fn tensor_dimensions_and_radical() {
        let f = gf(3);
        let a = from_skew_presentation(&SkewPresentation::commutative(&f, &["X"], &[2]), &f).unwrap();
        let b = from_skew_presentation(&SkewPresentation::commutative(&f, &["Y"], &[3]), &f).unwrap();
        let t = tensor(&a, &b).unwrap();
        assert_eq!(t.dim(), 6);
        assert_eq!(jacobson_radical(&t).unwrap().dim(), 5);
        assert_eq!(
            socle(&t).unwrap(),
            tensor_subspace(&socle(&a).unwrap(), &socle(&b).unwrap())
        );
        let q = Field::rational();
        let c = from_skew_presentation(&SkewPresentation::commutative(&q, &["X"], &[2]), &q).unwrap();
        assert!(matches!(tensor(&a, &c), Err(Error::FieldMismatch(..))));
    }

    #[test]
    fn trivial_extension_of_commutative_base() {
        let f = gf(2);
        let a = from_skew_presentation(&SkewPresentation::commutative(&f, &["X"], &[3]), &f).unwrap();
        let t = trivial_extension(&a).unwrap();
        assert_eq!(t.dim(), 6);
        assert!(t.is_commutative());
        assert_eq!(t.symmetrizing_form().unwrap()[3], f.one());
        assert_eq!(jacobson_radical(&t).unwrap().dim(), 5);
        let c = trivext_criteria(&a).unwrap();
        assert!(c.s_is_ideal && c.i_is_ideal && c.k_is_ideal && c.predicted_p1 && c.predicted_p2);
    }

    #[test]
    fn quotients() {
        let f = gf(5);
        let a = from_skew_presentation(&SkewPresentation::commutative(&f, &["X"], &[4]), &f).unwrap();
        let same = quotient(&a, &a.zero_space()).unwrap();
        assert!(same.algebra.same_table(&a));
        let i = a.ideal_generated_by(&[a.basis_vector(2)]).unwrap();
        let q = quotient(&a, &i).unwrap();
        assert_eq!(q.algebra.dim(), 2);
        assert_eq!(q.algebra.labels().unwrap(), ["1", "X"]);
        assert_eq!(jacobson_radical(&q.algebra).unwrap().dim(), 1);
        assert!(matches!(quotient(&a, &a.full_space()), Err(Error::ImproperIdeal)));
        let not_ideal = a.span([a.basis_vector(1)]);
        assert!(matches!(quotient(&a, &not_ideal), Err(Error::NotAnIdeal)));
    }

    #[test]
    fn opposite_is_an_involution() {
        let f = gf(3);
        let p = SkewPresentation::uniform(&f, &["x", "y"], &[2, 2], &f.from_i64(-1));
        let a = from_skew_presentation(&p, &f).unwrap();
        let op = opposite(&a).unwrap();
        assert!(opposite(&op).unwrap().same_table(&a));
        let c = from_skew_presentation(&SkewPresentation::commutative(&f, &["X"], &[3]), &f).unwrap();
        assert!(opposite(&c).unwrap().same_table(&c));
    }

    #[test]
    fn matrix_generators() {
        let f = gf(2);
        let none = from_matrix_generators(&f, 3, &[], &[], None).unwrap();
        assert_eq!(none.algebra.dim(), 1);
        // A single nilpotent Jordan block of size 3 generates F[X]/(X^3).
        let names = vec!["J".to_string()];
        let mut j = Matrix::zeros(&f, 3, 3);
        j.set(0, 1, f.one());
        j.set(1, 2, f.one());
        let m = from_matrix_generators(&f, 3, &names, &[j.clone()], None).unwrap();
        assert_eq!(m.algebra.dim(), 3);
        assert_eq!(m.algebra.labels().unwrap(), ["1", "J", "J^2"]);
        let claim = vec![vec![], vec![0], vec![0, 0, 0]];
        let err = from_matrix_generators(&f, 3, &names, &[j], Some(&claim)).unwrap_err();
        assert!(matches!(err, Error::BasisClaimFailed(_)));
    }

    #[test]
    fn words_round_trip() {
        let names = vec!["M".to_string(), "N".to_string()];
        let w = parse_word("M^2N", &names).unwrap();
        assert_eq!(w, vec![0, 0, 1]);
        assert_eq!(format_word(&w, &names), "M^2N");
        assert_eq!(parse_word("1", &names).unwrap(), Word::new());
        assert!(parse_word("Q", &names).is_err());
    }

    #[test]
    fn full_matrix_algebra_is_semisimple() {
        let f = gf(3);
        let m = full_matrix_algebra(&f, 2).unwrap();
        assert!(jacobson_radical(&m).unwrap().is_zero());
        assert_eq!(m.center().dim(), 1);
    }
}
