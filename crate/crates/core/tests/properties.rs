use proptest::prelude::*;

use symcenter::algebra::Algebra;
use symcenter::constructions::{
    from_skew_presentation, opposite, quotient, tensor, tensor_subspace, trivial_extension, SkewPresentation,
};
use symcenter::expr::parse_element;
use symcenter::field::{element_of_order, Elem, Field};
use symcenter::linalg::{Matrix, Subspace};
use symcenter::substructures::{jacobson_radical, radical, socle};
use symcenter::symform::attached_structure;

fn gf3() -> Field {
    Field::prime(3).unwrap()
}

fn vector(f: &Field, coords: &[i64]) -> Vec<Elem> {
    coords.iter().map(|&c| f.from_i64(c)).collect()
}

fn subspace(f: &Field, n: usize, rows: &[Vec<i64>]) -> Subspace {
    Subspace::span(f, n, rows.iter().map(|r| vector(f, r)))
}

fn rows(n: usize, max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-2i64..3, n), 0..=max)
}

/// Skew truncated polynomial algebras over GF(3) of dimension at most 12.
fn skew_algebra() -> impl Strategy<Value = Algebra> {
    (prop::collection::vec(1u32..4, 1..4), prop::collection::vec(1i64..3, 3))
        .prop_filter("dimension", |(b, _)| b.iter().product::<u32>() <= 12)
        .prop_map(|(bounds, qs)| {
            let f = gf3();
            let names: Vec<String> = (1..=bounds.len()).map(|i| format!("x{i}")).collect();
            let names: Vec<&str> = names.iter().map(String::as_str).collect();
            let mut p = SkewPresentation::commutative(&f, &names, &bounds);
            let mut k = 0;
            for j in 0..bounds.len() {
                for i in 0..j {
                    p.q[j][i] = f.from_i64(qs[k]);
                    k += 1;
                }
            }
            from_skew_presentation(&p, &f).unwrap()
        })
}

fn random_element(a: &Algebra, coords: &[i64]) -> Vec<Elem> {
    let f = a.field();
    (0..a.dim()).map(|i| f.from_i64(coords[i % coords.len()])).collect()
}

proptest! {
    #[test]
    fn rational_field_axioms(a in -50i64..50, b in 1i64..20, c in -50i64..50, d in 1i64..20, e in -9i64..9) {
        let q = Field::rational();
        let x = q.parse(&format!("{a}/{b}")).unwrap();
        let y = q.parse(&format!("{c}/{d}")).unwrap();
        let z = q.from_i64(e);
        prop_assert_eq!(q.add(&q.add(&x, &y), &z), q.add(&x, &q.add(&y, &z)));
        prop_assert_eq!(q.mul(&x, &q.add(&y, &z)), q.add(&q.mul(&x, &y), &q.mul(&x, &z)));
        prop_assert_eq!(q.parse(&q.format(&x)).unwrap(), x);
    }

    #[test]
    fn gf25_field_axioms(a in (0u32..5, 0u32..5), b in (0u32..5, 0u32..5), c in (0u32..5, 0u32..5)) {
        let f = Field::gf25();
        let lit = |(x, y): (u32, u32)| f.parse(&format!("[{x},{y}]")).unwrap();
        let (x, y, z) = (lit(a), lit(b), lit(c));
        prop_assert_eq!(f.mul(&f.mul(&x, &y), &z), f.mul(&x, &f.mul(&y, &z)));
        prop_assert_eq!(f.mul(&x, &f.add(&y, &z)), f.add(&f.mul(&x, &y), &f.mul(&x, &z)));
        prop_assert_eq!(f.parse(&f.format(&x)).unwrap(), x);
    }

    #[test]
    fn element_of_order_has_exact_order(n in prop::sample::select(vec![1u64, 2, 3, 4, 6, 8, 12, 24])) {
        let f = Field::gf25();
        let x = element_of_order(&f, n).unwrap().into_value();
        prop_assert!(f.is_one(&f.pow(&x, n)));
        for l in [2u64, 3] {
            if n % l == 0 {
                prop_assert!(!f.is_one(&f.pow(&x, n / l)));
            }
        }
    }

    #[test]
    fn modular_law_and_canonical_sums(u in rows(5, 4), v in rows(5, 4)) {
        let f = gf3();
        let (u, v) = (subspace(&f, 5, &u), subspace(&f, 5, &v));
        let sum = u.sum(&v).unwrap();
        prop_assert_eq!(&sum, &v.sum(&u).unwrap());
        prop_assert_eq!(sum.dim() + u.intersect(&v).unwrap().dim(), u.dim() + v.dim());
    }

    #[test]
    fn kernel_survives_row_reduction(m in prop::collection::vec(prop::collection::vec(-2i64..3, 6), 1..5)) {
        let f = gf3();
        let m = Matrix::from_rows(&f, 6, m.iter().map(|r| vector(&f, r)).collect()).unwrap();
        prop_assert_eq!(m.kernel(), m.rref().0.kernel());
        prop_assert_eq!(m.kernel().dim() + m.rank(), 6);
    }

    #[test]
    fn skew_algebras_are_local_with_certified_radical(a in skew_algebra()) {
        let cert = radical(&a).unwrap();
        cert.verify(&a).unwrap();
        prop_assert_eq!(cert.radical.dim() + 1, a.dim());
        prop_assert!(a.center().member(a.one()));
    }

    #[test]
    fn opposite_preserves_center_commutators_and_layers(a in skew_algebra()) {
        let op = opposite(&a).unwrap();
        prop_assert_eq!(a.center(), op.center());
        prop_assert_eq!(a.commutator_space(), op.commutator_space());
        let layers = |x: &Algebra| x.loewy_series(&jacobson_radical(x).unwrap()).unwrap();
        prop_assert_eq!(layers(&a), layers(&op));
    }

    #[test]
    fn commutator_closure_gives_commutative_quotient(a in skew_algebra()) {
        let k = a.ideal_closure(a.commutator_space()).unwrap();
        prop_assert!(quotient(&a, &k).unwrap().algebra.is_commutative());
    }

    #[test]
    fn tensor_component_formulas(a in skew_algebra(), b in skew_algebra()) {
        prop_assume!(a.dim() * b.dim() <= 36);
        let t = tensor(&a, &b).unwrap();
        prop_assert_eq!(t.center(), &tensor_subspace(a.center(), b.center()));
        let k = tensor_subspace(a.commutator_space(), &b.full_space())
            .sum(&tensor_subspace(&a.full_space(), b.commutator_space()))
            .unwrap();
        prop_assert_eq!(t.commutator_space(), &k);
        prop_assert_eq!(socle(&t).unwrap(), tensor_subspace(&socle(&a).unwrap(), &socle(&b).unwrap()));
    }

    #[test]
    fn perp_is_an_involution_on_trivial_extensions(a in skew_algebra(), x in rows(24, 6)) {
        let t = trivial_extension(&a).unwrap();
        let s = attached_structure(&t).unwrap().unwrap();
        let n = t.dim();
        let x = subspace(t.field(), n, &x.iter().map(|r| r[..n].to_vec()).collect::<Vec<_>>());
        let xp = s.perp(&x);
        prop_assert_eq!(x.dim() + xp.dim(), n);
        prop_assert_eq!(s.perp(&xp), x);
    }

    #[test]
    fn formatted_elements_parse_back(a in skew_algebra(), coords in prop::collection::vec(-1i64..2, 1..12)) {
        let v = random_element(&a, &coords);
        prop_assert_eq!(parse_element(&a, &a.format_vector(&v)).unwrap(), v);
        let t = trivial_extension(&a).unwrap();
        let w = random_element(&t, &coords);
        prop_assert_eq!(parse_element(&t, &t.format_vector(&w)).unwrap(), w);
    }
}
