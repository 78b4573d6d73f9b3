//! The TOML algebra-definition format.
//!
//! A file names an algebra, fixes its field and gives one presentation.
//! Construction presentations (`tensor`, `trivial_extension`, `quotient`,
//! `opposite`) nest further nodes with the same shape minus name and field.

use serde::{Deserialize, Serialize};
use toml::Spanned;

use symcenter::algebra::{Algebra, SparseRow};
use symcenter::constructions::{
    from_matrix_generators, from_skew_presentation, opposite, parse_word, quotient, tensor, trivial_extension,
    SkewPresentation,
};
use symcenter::expr::parse_element;
use symcenter::field::{Elem, Field, FieldDescriptor};
use symcenter::linalg::{unit_vec, Matrix, Subspace};
use symcenter::substructures::RadicalHint;

use crate::error::CliError;

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub field: FieldDescriptor,
    pub presentation: Spanned<Presentation>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radical_hint: Option<HintSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub symmetrizing_form: Option<VectorSpec>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct Node {
    pub presentation: Spanned<Presentation>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radical_hint: Option<HintSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub symmetrizing_form: Option<VectorSpec>,
}

/// A scalar literal; bare integers are accepted alongside strings.
#[derive(Clone, Debug, PartialEq, Deserialize, Serialize)]
#[serde(untagged)]
pub enum Literal {
    Int(i64),
    Text(String),
}

impl Literal {
    fn parse(&self, f: &Field) -> symcenter::error::Result<Elem> {
        match self {
            Literal::Int(n) => Ok(f.from_i64(*n)),
            Literal::Text(s) => f.parse(s.trim()),
        }
    }
}

/// An element given by coordinates or as an expression in the basis labels.
#[derive(Clone, Debug, PartialEq, Deserialize, Serialize)]
#[serde(untagged)]
pub enum VectorSpec {
    Coords(Vec<Literal>),
    Expr(String),
}

#[derive(Clone, Debug, PartialEq, Deserialize, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HintSpec {
    LocalCodim1,
    Semisimple,
    Basis(Vec<VectorSpec>),
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Presentation {
    StructureConstants(StructureConstants),
    SkewTruncated(SkewTruncated),
    MatrixGenerators(MatrixGenerators),
    Tensor { left: Box<Node>, right: Box<Node> },
    TrivialExtension { base: Box<Node> },
    Quotient(QuotientSpec),
    Opposite { base: Box<Node> },
}

/// `products` lists `[i, j, k, c]`: the coefficient `c` of `e_k` in `e_i e_j`.
#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct StructureConstants {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    /// Defaults to the first basis vector.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub one: Option<Vec<Literal>>,
    pub products: Vec<(usize, usize, usize, Literal)>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct SkewTruncated {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
    pub bounds: Vec<u32>,
    /// Scalar for every pair of generators not listed in `commutation`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<Literal>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub commutation: Vec<Commutation>,
}

/// `left * right = q * right * left`
#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct Commutation {
    pub left: String,
    pub right: String,
    pub q: Literal,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixGenerators {
    pub size: usize,
    pub generators: Vec<Generator>,
    /// Words in the generators claimed to form a basis, e.g. `"M^2N"`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
}

/// Rows are whitespace-separated literals, or one character per entry with
/// `.` for zero.
#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct Generator {
    pub name: String,
    pub rows: Vec<String>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct QuotientSpec {
    pub base: Box<Node>,
    pub ideal: Vec<VectorSpec>,
    /// Take the two-sided ideal generated by `ideal` instead of its span.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub generated: bool,
}

pub fn parse(text: &str) -> Result<AlgebraFile, CliError> {
    toml::from_str(text).map_err(|e| CliError::Syntax(e.to_string().trim_end().to_string()))
}

pub fn emit(file: &AlgebraFile) -> Result<String, CliError> {
    toml::to_string(file).map_err(|e| CliError::Usage(format!("cannot serialize algebra file: {e}")))
}

impl AlgebraFile {
    pub fn build(&self, source: &str) -> Result<Algebra, CliError> {
        let field = Field::from_descriptor(&self.field).map_err(|e| CliError::at(source, 0, e))?;
        let ctx = Context { field, source };
        ctx.node(
            &self.presentation,
            self.radical_hint.as_ref(),
            self.symmetrizing_form.as_ref(),
        )
    }
}

struct Context<'a> {
    field: Field,
    source: &'a str,
}

impl Context<'_> {
    fn node(
        &self,
        presentation: &Spanned<Presentation>,
        hint: Option<&HintSpec>,
        form: Option<&VectorSpec>,
    ) -> Result<Algebra, CliError> {
        let offset = presentation.span().start;
        let anchor = |e| CliError::at(self.source, offset, e);
        let mut alg = self.presentation(presentation.get_ref(), offset)?;
        if let Some(h) = hint {
            let h = match h {
                HintSpec::LocalCodim1 => RadicalHint::LocalCodim1 { vectors: None },
                HintSpec::Semisimple => RadicalHint::Semisimple,
                HintSpec::Basis(vs) => RadicalHint::Basis(
                    vs.iter()
                        .map(|v| self.vector(&alg, v))
                        .collect::<Result<_, _>>()
                        .map_err(anchor)?,
                ),
            };
            alg = alg.with_radical_hint(h);
        }
        if let Some(v) = form {
            let lambda = self.vector(&alg, v).map_err(anchor)?;
            alg = alg.with_symmetrizing_form(lambda).map_err(anchor)?;
        }
        Ok(alg)
    }

    fn child(&self, n: &Node) -> Result<Algebra, CliError> {
        self.node(&n.presentation, n.radical_hint.as_ref(), n.symmetrizing_form.as_ref())
    }

    fn vector(&self, alg: &Algebra, v: &VectorSpec) -> symcenter::error::Result<Vec<Elem>> {
        match v {
            VectorSpec::Expr(s) => parse_element(alg, s),
            VectorSpec::Coords(cs) => {
                if cs.len() != alg.dim() {
                    return Err(symcenter::error::Error::Shape(format!(
                        "{} coordinates for an algebra of dimension {}",
                        cs.len(),
                        alg.dim()
                    )));
                }
                cs.iter().map(|c| c.parse(&self.field)).collect()
            }
        }
    }

    fn presentation(&self, p: &Presentation, offset: usize) -> Result<Algebra, CliError> {
        let anchor = |e| CliError::at(self.source, offset, e);
        let f = &self.field;
        match p {
            Presentation::StructureConstants(sc) => self.structure_constants(sc).map_err(anchor),
            Presentation::SkewTruncated(s) => self.skew(s).map_err(anchor),
            Presentation::MatrixGenerators(m) => self.matrices(m).map_err(anchor),
            Presentation::Tensor { left, right } => {
                let (a, b) = (self.child(left)?, self.child(right)?);
                tensor(&a, &b).map_err(anchor)
            }
            Presentation::TrivialExtension { base } => trivial_extension(&self.child(base)?).map_err(anchor),
            Presentation::Opposite { base } => opposite(&self.child(base)?).map_err(anchor),
            Presentation::Quotient(q) => {
                let base = self.child(&q.base)?;
                let vectors = q
                    .ideal
                    .iter()
                    .map(|v| self.vector(&base, v))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(anchor)?;
                let ideal = if q.generated {
                    base.ideal_generated_by(&vectors).map_err(anchor)?
                } else {
                    Subspace::span(f, base.dim(), vectors)
                };
                Ok(quotient(&base, &ideal).map_err(anchor)?.algebra)
            }
        }
    }

    fn structure_constants(&self, sc: &StructureConstants) -> symcenter::error::Result<Algebra> {
        let f = &self.field;
        let n = sc.dim;
        let mut table = vec![SparseRow::new(); n * n];
        for (i, j, k, c) in &sc.products {
            if *i >= n || *j >= n || *k >= n {
                return Err(symcenter::error::Error::Shape(format!(
                    "product entry [{i}, {j}, {k}] out of range for dimension {n}"
                )));
            }
            table[i * n + j].push((*k, c.parse(f)?));
        }
        let one = match &sc.one {
            Some(cs) => cs.iter().map(|c| c.parse(f)).collect::<Result<Vec<_>, _>>()?,
            None if n > 0 => unit_vec(f, n, 0),
            None => Vec::new(),
        };
        let alg = Algebra::from_sparse(f, n, table, one)?;
        match &sc.labels {
            Some(l) => alg.with_labels(l.clone()),
            None => Ok(alg),
        }
    }

    fn skew(&self, s: &SkewTruncated) -> symcenter::error::Result<Algebra> {
        let f = &self.field;
        let names = s
            .names
            .clone()
            .unwrap_or_else(|| SkewPresentation::default_names(s.bounds.len()));
        let q = s.q.as_ref().map(|q| q.parse(f)).transpose()?.unwrap_or_else(|| f.one());
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let mut p = SkewPresentation::uniform(f, &refs, &s.bounds, &q);
        let position = |name: &str| {
            names.iter().position(|n| n == name).ok_or_else(|| {
                symcenter::error::Error::InvalidPresentation(format!("unknown generator {name:?} in commutation"))
            })
        };
        for c in &s.commutation {
            let (l, r) = (position(&c.left)?, position(&c.right)?);
            let q = c.q.parse(f)?;
            // Stored as x_j x_i = q x_i x_j for j > i.
            match l.cmp(&r) {
                std::cmp::Ordering::Greater => p.q[l][r] = q,
                std::cmp::Ordering::Less => p.q[r][l] = f.inv(&q)?,
                std::cmp::Ordering::Equal => {
                    return Err(symcenter::error::Error::InvalidPresentation(format!(
                        "generator {} commuted with itself",
                        c.left
                    )))
                }
            }
        }
        from_skew_presentation(&p, f)
    }

    fn matrices(&self, m: &MatrixGenerators) -> symcenter::error::Result<Algebra> {
        let f = &self.field;
        let names: Vec<String> = m.generators.iter().map(|g| g.name.clone()).collect();
        let mats = m
            .generators
            .iter()
            .map(|g| parse_matrix(f, m.size, g))
            .collect::<Result<Vec<_>, _>>()?;
        let words = m
            .basis
            .as_ref()
            .map(|ws| ws.iter().map(|w| parse_word(w, &names)).collect::<Result<Vec<_>, _>>())
            .transpose()?;
        Ok(from_matrix_generators(f, m.size, &names, &mats, words.as_deref())?.algebra)
    }
}

fn parse_matrix(f: &Field, size: usize, g: &Generator) -> symcenter::error::Result<Matrix> {
    let shape = |msg: String| symcenter::error::Error::Shape(format!("generator {}: {msg}", g.name));
    if g.rows.len() != size {
        return Err(shape(format!("{} rows, expected {size}", g.rows.len())));
    }
    let mut rows = Vec::with_capacity(size);
    for (r, text) in g.rows.iter().enumerate() {
        let tokens: Vec<String> = if text.contains(|c: char| c.is_whitespace() || c == ',') {
            text.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(str::to_string)
                .collect()
        } else {
            text.chars().map(|c| c.to_string()).collect()
        };
        if tokens.len() != size {
            return Err(shape(format!("row {r} has {} entries, expected {size}", tokens.len())));
        }
        let row = tokens
            .iter()
            .map(|t| if t == "." { Ok(f.zero()) } else { f.parse(t) })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    Matrix::from_rows(f, size, rows)
}

/// An explicit `structure_constants` file for `alg`, carrying its radical as
/// a basis hint and its symmetrizing form when it has one.
pub fn materialize(name: &str, alg: &Algebra, radical: &Subspace) -> AlgebraFile {
    let f = alg.field();
    let n = alg.dim();
    let lit = |c: &Elem| Literal::Text(f.format(c));
    let coords = |v: &[Elem]| VectorSpec::Coords(v.iter().map(lit).collect());
    let mut products = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for (k, c) in alg.product_entries(i, j) {
                products.push((i, j, *k, lit(c)));
            }
        }
    }
    let hint = if radical.is_zero() {
        HintSpec::Semisimple
    } else {
        HintSpec::Basis(radical.basis().iter().map(|v| coords(v)).collect())
    };
    AlgebraFile {
        name: name.to_string(),
        field: f.descriptor().clone(),
        presentation: Spanned::new(
            0..0,
            Presentation::StructureConstants(StructureConstants {
                dim: n,
                labels: alg.labels().map(<[String]>::to_vec),
                one: Some(alg.one().iter().map(lit).collect()),
                products,
            }),
        ),
        radical_hint: Some(hint),
        symmetrizing_form: alg.symmetrizing_form().map(coords),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const DUAL: &str = r#"
name = "dual"
field = { kind = "prime", p = 3 }
radical_hint = "local_codim1"
symmetrizing_form = "X"

[presentation.skew_truncated]
names = ["X"]
bounds = [2]
"#;

    #[test]
    fn skew_file_builds() {
        let file = parse(DUAL).unwrap();
        let a = file.build(DUAL).unwrap();
        assert_eq!(a.dim(), 2);
        assert_eq!(a.labels().unwrap(), ["1", "X"]);
        assert!(a.symmetrizing_form().is_some());
    }

    #[test]
    fn emit_is_stable() {
        let once = emit(&parse(DUAL).unwrap()).unwrap();
        let twice = emit(&parse(&once).unwrap()).unwrap();
        assert_eq!(once, twice);
    }

    #[test]
    fn commutation_in_either_order() {
        let text = |l: &str, r: &str, q: &str| {
            format!(
                "name = \"s\"\nfield = {{ kind = \"prime\", p = 5 }}\n[presentation.skew_truncated]\n\
                 names = [\"x\", \"y\"]\nbounds = [2, 2]\n\
                 commutation = [{{ left = \"{l}\", right = \"{r}\", q = \"{q}\" }}]\n"
            )
        };
        let a = text("y", "x", "2");
        let b = text("x", "y", "3");
        let a = parse(&a).unwrap().build(&a).unwrap();
        let b = parse(&b).unwrap().build(&b).unwrap();
        assert!(a.same_table(&b));
    }

    #[test]
    fn matrix_rows_with_dots_and_spaces() {
        let f = Field::prime(3).unwrap();
        let g = Generator {
            name: "M".into(),
            rows: vec![".1".into(), "2 0".into()],
        };
        let m = parse_matrix(&f, 2, &g).unwrap();
        assert_eq!(m.get(0, 1), &f.one());
        assert_eq!(m.get(1, 0), &f.from_i64(2));
        assert!(parse_matrix(&f, 3, &g).is_err());
    }
}
