//! Symmetrizing forms `λ`, the bilinear form `β(a, b) = λ(ab)`, orthogonal
//! complements and the symmetric quotients `A/(Az)^⊥`.

use crate::algebra::Algebra;
use crate::constructions::{quotient, QuotientMap};
use crate::error::{Error, Result};
use crate::field::Elem;
use crate::linalg::{dot, Matrix, Subspace};
use crate::substructures::{j_of_center, soc_of_center, socle};

/// A verified symmetrizing form together with its Gram matrix `λ(e_i e_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricStructure {
    lambda: Vec<Elem>,
    gram: Matrix,
}

impl SymmetricStructure {
    pub fn lambda(&self) -> &[Elem] {
        &self.lambda
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn beta(&self, a: &[Elem], b: &[Elem]) -> Elem {
        dot(self.gram.field(), a, &self.gram.apply(b))
    }

    /// `{a : β(a, x) = 0 for all x ∈ X}`
    pub fn perp(&self, x: &Subspace) -> Subspace {
        let f = self.gram.field();
        Subspace::span(f, self.gram.rows(), x.basis().iter().map(|v| self.gram.apply(v))).annihilator()
    }
}

pub fn verify_symmetric(alg: &Algebra, lambda: &[Elem]) -> Result<SymmetricStructure> {
    let f = alg.field();
    let n = alg.dim();
    if lambda.len() != n {
        return Err(Error::Shape(format!(
            "form of length {} for dimension {n}",
            lambda.len()
        )));
    }
    let mut gram = Matrix::zeros(f, n, n);
    for i in 0..n {
        for j in 0..n {
            let mut v = f.zero();
            for (k, c) in alg.product_entries(i, j) {
                v = f.add(&v, &f.mul(c, &lambda[*k]));
            }
            gram.set(i, j, v);
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            if gram.get(i, j) != gram.get(j, i) {
                return Err(Error::NotSymmetricForm(i, j));
            }
        }
    }
    let rank = gram.rank();
    if rank < n {
        return Err(Error::Degenerate { rank, dim: n });
    }
    Ok(SymmetricStructure {
        lambda: lambda.to_vec(),
        gram,
    })
}

/// The attached form, verified; `None` when no form is attached.
pub fn attached_structure(alg: &Algebra) -> Result<Option<SymmetricStructure>> {
    alg.symmetrizing_form().map(|l| verify_symmetric(alg, l)).transpose()
}

/// `A/(Az)^⊥` with the induced form `λ̄(ā) = λ(az)`.
#[derive(Clone, Debug)]
pub struct QuotientWitness {
    pub z: Vec<Elem>,
    pub ideal: Subspace,
    pub quotient: Algebra,
    pub structure: SymmetricStructure,
    pub map: QuotientMap,
}

impl QuotientWitness {
    pub fn nu(&self, x: &[Elem]) -> Vec<Elem> {
        self.map.project(x)
    }

    /// `ν*(x̄) = x z` for any preimage `x`.
    pub fn nu_star(&self, alg: &Algebra, xbar: &[Elem]) -> Vec<Elem> {
        alg.mul(&self.map.lift(xbar), &self.z)
    }

    pub fn nu_star_subspace(&self, alg: &Algebra, ubar: &Subspace) -> Subspace {
        alg.span(ubar.basis().iter().map(|x| self.nu_star(alg, x)))
    }
}

pub fn symmetric_quotient(alg: &Algebra, s: &SymmetricStructure, z: &[Elem]) -> Result<QuotientWitness> {
    if z.len() != alg.dim() {
        return Err(Error::Shape(format!("element of length {}", z.len())));
    }
    if !alg.center().member(z) {
        return Err(Error::CentralityViolated);
    }
    let az = alg.left_ideal_of(z);
    let ideal = s.perp(&az);
    let q = quotient(alg, &ideal)?;
    let map = q.map;
    let lambda_bar: Vec<Elem> = map
        .complement()
        .iter()
        .map(|&c| dot(alg.field(), s.lambda(), &alg.mul(&alg.basis_vector(c), z)))
        .collect();
    let quotient_alg = q.algebra.with_symmetrizing_form(lambda_bar.clone())?;
    let structure = verify_symmetric(&quotient_alg, &lambda_bar)
        .map_err(|e| Error::Internal(format!("symmetric quotient lost its form: {e}")))?;
    Ok(QuotientWitness {
        z: z.to_vec(),
        ideal,
        quotient: quotient_alg,
        structure,
        map,
    })
}

/// Outcome of one named identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub holds: bool,
}

fn check(name: &'static str, holds: bool) -> IdentityCheck {
    IdentityCheck { name, holds }
}

/// Basic properties of `ν*`: value at the identity, module compatibility,
/// injectivity and adjointness with `ν`.
pub fn check_nustar_basics(alg: &Algebra, s: &SymmetricStructure, w: &QuotientWitness) -> Vec<IdentityCheck> {
    let qa = &w.quotient;
    let m = qa.dim();
    let unit = w.nu_star(alg, qa.one()) == w.z;
    let mut module = true;
    let mut adjoint = true;
    for a in 0..m {
        let xbar = qa.basis_vector(a);
        let image = w.nu_star(alg, &xbar);
        for b in 0..alg.dim() {
            let y = alg.basis_vector(b);
            let ybar = w.nu(&y);
            if alg.mul(&image, &y) != w.nu_star(alg, &qa.mul(&xbar, &ybar)) {
                module = false;
            }
            if s.beta(&image, &y) != w.structure.beta(&xbar, &ybar) {
                adjoint = false;
            }
        }
    }
    let injective = w.nu_star_subspace(alg, &qa.full_space()).dim() == m;
    vec![
        check("nu_star_of_one_is_z", unit),
        check("nu_star_module_map", module),
        check("nu_star_injective", injective),
        check("nu_star_adjoint", adjoint),
    ]
}

/// Images of the center, its radical and its socle under `ν*`.
pub fn check_nustar_relations(
    alg: &Algebra,
    s: &SymmetricStructure,
    w: &QuotientWitness,
) -> Result<Vec<IdentityCheck>> {
    let qa = &w.quotient;
    let z_a = alg.center();
    let az = alg.left_ideal_of(&w.z);
    let img_center = w.nu_star_subspace(alg, qa.center());
    let center_rel = img_center == z_a.intersect(&az)?;

    let jz_bar = j_of_center(qa)?;
    let img_jz = w.nu_star_subspace(alg, &jz_bar);
    let soc_pre = w.map.preimage(&socle(qa)?)?;
    let jz_formula = z_a.intersect(&s.perp(&soc_pre))?;
    let jz_rel = img_jz == jz_formula;
    let jz_inside = j_of_center(alg)?.intersect(&az)?.contains(&img_jz)?;

    let img_socz = w.nu_star_subspace(alg, &soc_of_center(qa)?);
    let socz_rel = soc_of_center(alg)?.contains(&img_socz)?;
    Ok(vec![
        check("nu_star_center", center_rel),
        check("nu_star_radical_of_center", jz_rel),
        check("nu_star_radical_of_center_inside", jz_inside),
        check("nu_star_socle_of_center", socz_rel),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{from_skew_presentation, SkewPresentation};
    use crate::field::Field;

    fn dual_numbers(f: &Field) -> Algebra {
        from_skew_presentation(&SkewPresentation::commutative(f, &["x"], &[2]), f).unwrap()
    }

    #[test]
    fn accepts_and_rejects_forms() {
        let f = Field::prime(3).unwrap();
        let a = dual_numbers(&f);
        let s = verify_symmetric(&a, &[f.zero(), f.one()]).unwrap();
        assert_eq!(s.gram().get(0, 1), &f.one());
        assert_eq!(s.gram().get(1, 1), &f.zero());
        assert_eq!(
            verify_symmetric(&a, &[f.zero(), f.zero()]),
            Err(Error::Degenerate { rank: 0, dim: 2 })
        );
        // λ = (1, 0) has Gram diag(1, 0).
        assert!(matches!(
            verify_symmetric(&a, &[f.one(), f.zero()]),
            Err(Error::Degenerate { .. })
        ));
    }

    #[test]
    fn asymmetric_form_is_rejected() {
        let f = Field::prime(3).unwrap();
        let p = SkewPresentation::uniform(&f, &["x", "y"], &[2, 2], &f.from_i64(-1));
        let a = from_skew_presentation(&p, &f).unwrap();
        // λ(xy) = 1 but λ(yx) = -1.
        let mut lambda = vec![f.zero(); 4];
        lambda[3] = f.one();
        assert!(matches!(
            verify_symmetric(&a, &lambda),
            Err(Error::NotSymmetricForm(1, 2))
        ));
    }

    #[test]
    fn perp_extremes() {
        let f = Field::prime(5).unwrap();
        let a = dual_numbers(&f);
        let s = verify_symmetric(&a, &[f.zero(), f.one()]).unwrap();
        assert!(s.perp(&a.zero_space()).is_full());
        assert!(s.perp(&a.full_space()).is_zero());
    }

    #[test]
    fn quotient_by_one_and_by_socle() {
        let f = Field::prime(3).unwrap();
        let p = SkewPresentation::commutative(&f, &["x"], &[3]);
        let a = from_skew_presentation(&p, &f).unwrap();
        let s = verify_symmetric(&a, &[f.zero(), f.zero(), f.one()]).unwrap();
        let w = symmetric_quotient(&a, &s, a.one()).unwrap();
        assert!(w.ideal.is_zero());
        assert!(w.quotient.same_table(&a));
        let top = a.basis_vector(2);
        let w = symmetric_quotient(&a, &s, &top).unwrap();
        assert_eq!(w.ideal.dim(), 2);
        assert_eq!(w.quotient.dim(), 1);
        assert_eq!(w.nu_star(&a, w.quotient.one()), top);
        for c in check_nustar_basics(&a, &s, &w) {
            assert!(c.holds, "{}", c.name);
        }
        for c in check_nustar_relations(&a, &s, &w).unwrap() {
            assert!(c.holds, "{}", c.name);
        }
    }

    #[test]
    fn non_central_element_is_rejected() {
        let f = Field::prime(3).unwrap();
        let m = crate::constructions::full_matrix_algebra(&f, 2).unwrap();
        let s = attached_structure(&m).unwrap().unwrap();
        assert_eq!(
            symmetric_quotient(&m, &s, &m.basis_vector(1)).unwrap_err(),
            Error::CentralityViolated
        );
    }
}
