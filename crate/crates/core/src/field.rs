//! Exact scalar arithmetic over prime fields GF(p), extension fields GF(p^k)
//! given by a monic irreducible modulus, and the rationals.
//!
//! A [`Field`] is a cheap-to-clone handle; scalars themselves are plain
//! [`Elem`] values interpreted relative to a field. [`FieldScalar`] bundles
//! the two for checked, mixed-field-safe arithmetic.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest extension field order for which log/exp tables are built.
pub const MAX_EXTENSION_ORDER: u64 = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FieldKind {
    Prime,
    Extension,
    Rational,
}

/// Identifies a field. Two fields interoperate only if their descriptors are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub kind: FieldKind,
    /// The characteristic; absent for the rationals.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u32>,
    /// Coefficients of the modulus, low to high degree (extension fields only).
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub modulus: Vec<u32>,
}

/// A field element. `Fin` indexes a finite field element (for GF(p^k) the
/// index is the base-p encoding of the coefficient vector, constant term
/// least significant).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Elem {
    Fin(u32),
    Rat(Box<BigRational>),
}

struct ExtTables {
    degree: usize,
    order: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
}

struct Inner {
    desc: FieldDescriptor,
    ext: Option<ExtTables>,
}

#[derive(Clone)]
pub struct Field(Arc<Inner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.desc == other.0.desc
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field({self})")
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = &self.0.desc;
        match d.kind {
            FieldKind::Prime => write!(f, "GF({})", d.p.unwrap_or(0)),
            FieldKind::Extension => {
                let p = d.p.unwrap_or(0);
                let deg = d.modulus.len() - 1;
                write!(f, "GF({p}^{deg})[t]/({})", format_poly(&d.modulus))
            }
            FieldKind::Rational => write!(f, "Q"),
        }
    }
}

fn format_poly(coeffs: &[u32]) -> String {
    let mut terms = Vec::new();
    for (deg, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mono = match deg {
            0 => String::new(),
            1 => "t".to_string(),
            _ => format!("t^{deg}"),
        };
        terms.push(match (c, mono.is_empty()) {
            (_, true) => c.to_string(),
            (1, false) => mono,
            (_, false) => format!("{c}{mono}"),
        });
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Remainder of `a` modulo the monic polynomial `m` over GF(p).
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let p64 = p as u64;
    let mut r: Vec<u64> = a.iter().map(|&c| c as u64).collect();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = r.pop().unwrap() % p64;
        if lead != 0 {
            let base = r.len() - dm;
            for (i, &mc) in m[..dm].iter().enumerate() {
                let sub = lead * mc as u64 % p64;
                r[base + i] = (r[base + i] + p64 - sub) % p64;
            }
        }
    }
    r.into_iter().map(|c| (c % p64) as u32).collect()
}

fn poly_mulmod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let p64 = p as u64;
    let mut prod = vec![0u64; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p64;
        }
    }
    let prod: Vec<u32> = prod.into_iter().map(|c| c as u32).collect();
    let mut r = poly_rem(&prod, m, p);
    r.resize(m.len() - 1, 0);
    r
}

fn decode(mut idx: u32, p: u32, degree: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(degree);
    for _ in 0..degree {
        out.push(idx % p);
        idx /= p;
    }
    out
}

fn encode(digits: &[u32], p: u32) -> u32 {
    digits.iter().rev().fold(0, |acc, &d| acc * p + d)
}

fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let deg = modulus.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            let mut divisor = decode(idx as u32, p, d);
            divisor.push(1);
            if poly_rem(modulus, &divisor, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl Field {
    pub fn prime(p: u32) -> Result<Field> {
        if !is_prime(p as u64) || p >= 1 << 31 {
            return Err(Error::InvalidField(format!("{p} is not a prime below 2^31")));
        }
        Ok(Field(Arc::new(Inner {
            desc: FieldDescriptor {
                kind: FieldKind::Prime,
                p: Some(p),
                modulus: Vec::new(),
            },
            ext: None,
        })))
    }

    /// GF(p)[t]/(modulus); the modulus is verified monic and irreducible.
    pub fn extension(p: u32, modulus: Vec<u32>) -> Result<Field> {
        if !is_prime(p as u64) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if modulus.len() < 3 {
            return Err(Error::InvalidField("modulus must have degree at least 2".into()));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidField(format!(
                "modulus coefficients must lie in [0, {p})"
            )));
        }
        if *modulus.last().unwrap() != 1 {
            return Err(Error::InvalidField("modulus must be monic".into()));
        }
        let degree = modulus.len() - 1;
        let order = (p as u64)
            .checked_pow(degree as u32)
            .filter(|&q| q <= MAX_EXTENSION_ORDER)
            .ok_or_else(|| {
                Error::InvalidField(format!(
                    "GF({p}^{degree}) exceeds the supported order {MAX_EXTENSION_ORDER}"
                ))
            })?;
        if !is_irreducible(&modulus, p) {
            return Err(Error::InvalidField(format!(
                "modulus {} is reducible over GF({p})",
                format_poly(&modulus)
            )));
        }
        let tables = build_tables(p, &modulus, order as u32);
        Ok(Field(Arc::new(Inner {
            desc: FieldDescriptor {
                kind: FieldKind::Extension,
                p: Some(p),
                modulus,
            },
            ext: Some(tables),
        })))
    }

    pub fn rational() -> Field {
        Field(Arc::new(Inner {
            desc: FieldDescriptor {
                kind: FieldKind::Rational,
                p: None,
                modulus: Vec::new(),
            },
            ext: None,
        }))
    }

    /// GF(25) = GF(5)[t]/(t^2 + 2); -2 = 3 is a non-square mod 5.
    pub fn gf25() -> Field {
        Field::extension(5, vec![2, 0, 1]).expect("t^2+2 is irreducible over GF(5)")
    }

    pub fn from_descriptor(desc: &FieldDescriptor) -> Result<Field> {
        match desc.kind {
            FieldKind::Rational => Ok(Field::rational()),
            FieldKind::Prime => Field::prime(
                desc.p
                    .ok_or_else(|| Error::InvalidField("prime field without p".into()))?,
            ),
            FieldKind::Extension => Field::extension(
                desc.p
                    .ok_or_else(|| Error::InvalidField("extension field without p".into()))?,
                desc.modulus.clone(),
            ),
        }
    }

    pub fn descriptor(&self) -> &FieldDescriptor {
        &self.0.desc
    }

    pub fn kind(&self) -> FieldKind {
        self.0.desc.kind
    }

    /// 0 for the rationals.
    pub fn characteristic(&self) -> u32 {
        self.0.desc.p.unwrap_or(0)
    }

    /// Number of elements, or `None` for the rationals.
    pub fn order(&self) -> Option<u64> {
        match self.kind() {
            FieldKind::Prime => Some(self.characteristic() as u64),
            FieldKind::Extension => Some(self.0.ext.as_ref().unwrap().order as u64),
            FieldKind::Rational => None,
        }
    }

    pub fn ensure_same(&self, other: &Field) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.to_string(), other.to_string()))
        }
    }

    fn p(&self) -> u32 {
        self.0.desc.p.unwrap_or(0)
    }

    fn ext(&self) -> &ExtTables {
        self.0.ext.as_ref().expect("extension tables")
    }

    pub fn zero(&self) -> Elem {
        match self.kind() {
            FieldKind::Rational => Elem::Rat(Box::new(BigRational::zero())),
            _ => Elem::Fin(0),
        }
    }

    pub fn one(&self) -> Elem {
        match self.kind() {
            FieldKind::Rational => Elem::Rat(Box::new(BigRational::one())),
            _ => Elem::Fin(1),
        }
    }

    pub fn from_i64(&self, n: i64) -> Elem {
        match self.kind() {
            FieldKind::Rational => Elem::Rat(Box::new(BigRational::from_integer(n.into()))),
            _ => Elem::Fin(n.rem_euclid(self.p() as i64) as u32),
        }
    }

    pub fn is_zero(&self, a: &Elem) -> bool {
        match a {
            Elem::Fin(x) => *x == 0,
            Elem::Rat(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self, a: &Elem) -> bool {
        match a {
            Elem::Fin(x) => *x == 1,
            Elem::Rat(r) => r.is_one(),
        }
    }

    /// True when `a` is a canonical element of this field.
    pub fn contains(&self, a: &Elem) -> bool {
        match (self.kind(), a) {
            (FieldKind::Prime, Elem::Fin(x)) => *x < self.p(),
            (FieldKind::Extension, Elem::Fin(x)) => *x < self.ext().order,
            (FieldKind::Rational, Elem::Rat(r)) => r.denom().is_positive() && r.numer().gcd(r.denom()).is_one(),
            _ => false,
        }
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        match (a, b) {
            (Elem::Fin(x), Elem::Fin(y)) => match self.kind() {
                FieldKind::Prime => {
                    let p = self.p() as u64;
                    Elem::Fin(((*x as u64 + *y as u64) % p) as u32)
                }
                _ => Elem::Fin(self.ext_combine(*x, *y, false)),
            },
            (Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(Box::new(&**x + &**y)),
            _ => panic!("mixed scalar representations in {self}"),
        }
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        match (a, b) {
            (Elem::Fin(x), Elem::Fin(y)) => match self.kind() {
                FieldKind::Prime => {
                    let p = self.p() as u64;
                    Elem::Fin(((*x as u64 + p - *y as u64) % p) as u32)
                }
                _ => Elem::Fin(self.ext_combine(*x, *y, true)),
            },
            (Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(Box::new(&**x - &**y)),
            _ => panic!("mixed scalar representations in {self}"),
        }
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        self.sub(&self.zero(), a)
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        match (a, b) {
            (Elem::Fin(x), Elem::Fin(y)) => match self.kind() {
                FieldKind::Prime => {
                    let p = self.p() as u64;
                    Elem::Fin((*x as u64 * *y as u64 % p) as u32)
                }
                _ => {
                    if *x == 0 || *y == 0 {
                        return Elem::Fin(0);
                    }
                    let t = self.ext();
                    let n = t.order as u64 - 1;
                    let l = (t.log[*x as usize] as u64 + t.log[*y as usize] as u64) % n;
                    Elem::Fin(t.exp[l as usize])
                }
            },
            (Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(Box::new(&**x * &**y)),
            _ => panic!("mixed scalar representations in {self}"),
        }
    }

    pub fn inv(&self, a: &Elem) -> Result<Elem> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        Ok(match a {
            Elem::Fin(x) => match self.kind() {
                FieldKind::Prime => {
                    let p = self.p() as i64;
                    let (mut r0, mut r1) = (p, *x as i64);
                    let (mut s0, mut s1) = (0i64, 1i64);
                    while r1 != 0 {
                        let q = r0 / r1;
                        (r0, r1) = (r1, r0 - q * r1);
                        (s0, s1) = (s1, s0 - q * s1);
                    }
                    Elem::Fin(s0.rem_euclid(p) as u32)
                }
                _ => {
                    let t = self.ext();
                    let n = t.order - 1;
                    let l = (n - t.log[*x as usize]) % n;
                    Elem::Fin(t.exp[l as usize])
                }
            },
            Elem::Rat(r) => Elem::Rat(Box::new(r.recip())),
        })
    }

    pub fn div(&self, a: &Elem, b: &Elem) -> Result<Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &Elem, mut e: u64) -> Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    fn ext_combine(&self, x: u32, y: u32, subtract: bool) -> u32 {
        let p = self.p();
        let degree = self.ext().degree;
        let (mut x, mut y) = (x, y);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..degree {
            let (a, b) = (x % p, y % p);
            let d = if subtract { (a + p - b) % p } else { (a + b) % p };
            out += d * place;
            place *= p;
            x /= p;
            y /= p;
        }
        out
    }

    /// All field elements in enumeration order (finite fields only).
    pub fn elements(&self) -> Option<Vec<Elem>> {
        self.order().map(|q| (0..q as u32).map(Elem::Fin).collect())
    }

    /// Uniform element for finite fields; a small fraction for the rationals.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Elem {
        match self.order() {
            Some(q) => Elem::Fin(rng.gen_range(0..q) as u32),
            None => {
                let n: i64 = rng.gen_range(-4..=4);
                let d: i64 = rng.gen_range(1..=3);
                Elem::Rat(Box::new(BigRational::new(n.into(), d.into())))
            }
        }
    }

    /// Coefficient vector (low to high) of an extension-field element.
    pub fn coefficients(&self, a: &Elem) -> Vec<u32> {
        match (self.kind(), a) {
            (FieldKind::Extension, Elem::Fin(x)) => decode(*x, self.p(), self.ext().degree),
            (FieldKind::Prime, Elem::Fin(x)) => vec![*x],
            _ => Vec::new(),
        }
    }

    /// Parses the scalar literal syntax: a decimal integer for GF(p), a
    /// coefficient list `[c0,c1,...]` (or an integer) for GF(p^k), and
    /// `a/b` or `a` for the rationals.
    pub fn parse(&self, literal: &str) -> Result<Elem> {
        let bad = |reason: &str| Error::BadLiteral {
            literal: literal.to_string(),
            field: self.to_string(),
            reason: reason.to_string(),
        };
        let s = literal.trim();
        match self.kind() {
            FieldKind::Prime => {
                let n: BigInt = s.parse().map_err(|_| bad("expected an integer"))?;
                Ok(Elem::Fin(reduce_bigint(&n, self.p())))
            }
            FieldKind::Extension => {
                let p = self.p();
                let degree = self.ext().degree;
                let digits: Vec<u32> = if let Some(inner) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
                    let parts: Vec<&str> = inner.split(',').map(str::trim).filter(|t| !t.is_empty()).collect();
                    if parts.len() > degree {
                        return Err(bad("too many coefficients"));
                    }
                    parts
                        .iter()
                        .map(|t| {
                            t.parse::<BigInt>()
                                .map(|n| reduce_bigint(&n, p))
                                .map_err(|_| bad("expected integer coefficients"))
                        })
                        .collect::<Result<_>>()?
                } else {
                    let n: BigInt = s.parse().map_err(|_| bad("expected [c0,c1,...] or an integer"))?;
                    vec![reduce_bigint(&n, p)]
                };
                let mut digits = digits;
                digits.resize(degree, 0);
                Ok(Elem::Fin(encode(&digits, p)))
            }
            FieldKind::Rational => {
                let (n, d) = match s.split_once('/') {
                    Some((n, d)) => (n.trim(), d.trim()),
                    None => (s, "1"),
                };
                let n: BigInt = n.parse().map_err(|_| bad("bad numerator"))?;
                let d: BigInt = d.parse().map_err(|_| bad("bad denominator"))?;
                if d.is_zero() {
                    return Err(bad("zero denominator"));
                }
                Ok(Elem::Rat(Box::new(BigRational::new(n, d))))
            }
        }
    }

    pub fn format(&self, a: &Elem) -> String {
        match (self.kind(), a) {
            (FieldKind::Extension, Elem::Fin(x)) if *x < self.p() => x.to_string(),
            (FieldKind::Extension, Elem::Fin(_)) => {
                let parts: Vec<String> = self.coefficients(a).iter().map(|c| c.to_string()).collect();
                format!("[{}]", parts.join(","))
            }
            (_, Elem::Fin(x)) => x.to_string(),
            (_, Elem::Rat(r)) => {
                if r.is_integer() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
        }
    }

    /// True when the literal of `a` is a plain integer (used for compact printing).
    pub fn is_scalar_integer(&self, a: &Elem) -> bool {
        match a {
            Elem::Rat(r) => r.is_integer(),
            Elem::Fin(x) => self.kind() == FieldKind::Prime || *x < self.p(),
        }
    }

    /// Multiplicative order of a nonzero element of a finite field.
    pub fn multiplicative_order(&self, a: &Elem) -> Option<u64> {
        let q = self.order()?;
        if self.is_zero(a) {
            return None;
        }
        let n = q - 1;
        let mut ord = n;
        for l in prime_factors(n) {
            while ord % l == 0 && self.is_one(&self.pow(a, ord / l)) {
                ord /= l;
            }
        }
        Some(ord)
    }
}

fn reduce_bigint(n: &BigInt, p: u32) -> u32 {
    let m = BigInt::from(p);
    let r = ((n % &m) + &m) % &m;
    r.to_u32().unwrap()
}

fn build_tables(p: u32, modulus: &[u32], order: u32) -> ExtTables {
    let degree = modulus.len() - 1;
    let n = (order - 1) as u64;
    let factors = prime_factors(n);
    let pow = |g: &[u32], mut e: u64| {
        let mut base = g.to_vec();
        let mut acc = vec![0u32; degree];
        acc[0] = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = poly_mulmod(&acc, &base, modulus, p);
            }
            base = poly_mulmod(&base, &base, modulus, p);
            e >>= 1;
        }
        acc
    };
    let one = {
        let mut v = vec![0u32; degree];
        v[0] = 1;
        v
    };
    let generator = (1..order)
        .map(|idx| decode(idx, p, degree))
        .find(|g| factors.iter().all(|&l| pow(g, n / l) != one))
        .expect("the multiplicative group of a finite field is cyclic");
    let mut exp = Vec::with_capacity(n as usize);
    let mut log = vec![0u32; order as usize];
    let mut cur = one;
    for i in 0..n as u32 {
        let idx = encode(&cur, p);
        exp.push(idx);
        log[idx as usize] = i;
        cur = poly_mulmod(&cur, &generator, modulus, p);
    }
    ExtTables {
        degree,
        order,
        exp,
        log,
    }
}

/// A scalar bundled with its field, for checked arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldScalar {
    field: Field,
    value: Elem,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl FieldScalar {
    pub fn new(field: &Field, value: Elem) -> Result<Self> {
        if !field.contains(&value) {
            return Err(Error::BadLiteral {
                literal: format!("{value:?}"),
                field: field.to_string(),
                reason: "not a canonical element".into(),
            });
        }
        Ok(FieldScalar {
            field: field.clone(),
            value,
        })
    }

    pub fn parse(field: &Field, literal: &str) -> Result<Self> {
        Ok(FieldScalar {
            field: field.clone(),
            value: field.parse(literal)?,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn value(&self) -> &Elem {
        &self.value
    }

    pub fn into_value(self) -> Elem {
        self.value
    }
}

impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.field.format(&self.value))
    }
}

/// Exact field arithmetic on two scalars of the same field.
pub fn arith(a: &FieldScalar, b: &FieldScalar, op: ArithOp) -> Result<FieldScalar> {
    a.field.ensure_same(&b.field)?;
    let f = &a.field;
    let value = match op {
        ArithOp::Add => f.add(&a.value, &b.value),
        ArithOp::Sub => f.sub(&a.value, &b.value),
        ArithOp::Mul => f.mul(&a.value, &b.value),
        ArithOp::Div => f.div(&a.value, &b.value)?,
    };
    Ok(FieldScalar {
        field: f.clone(),
        value,
    })
}

/// The first element (in enumeration order) of exact multiplicative order `n`.
pub fn element_of_order(field: &Field, n: u64) -> Result<FieldScalar> {
    let none = || Error::NoSuchOrder(n, field.to_string());
    let found = match field.order() {
        Some(q) => {
            if n == 0 || (q - 1) % n != 0 {
                return Err(none());
            }
            (1..q as u32)
                .map(Elem::Fin)
                .find(|a| field.multiplicative_order(a) == Some(n))
        }
        None => match n {
            1 => Some(field.one()),
            2 => Some(field.from_i64(-1)),
            _ => None,
        },
    };
    found
        .map(|value| FieldScalar {
            field: field.clone(),
            value,
        })
        .ok_or_else(none)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(f: &Field, lit: &str) -> FieldScalar {
        FieldScalar::parse(f, lit).unwrap()
    }

    #[test]
    fn prime_field_reduction() {
        let f = Field::prime(3).unwrap();
        let r = arith(&s(&f, "2"), &s(&f, "2"), ArithOp::Add).unwrap();
        assert_eq!(r.to_string(), "1");
        assert_eq!(f.parse("-1").unwrap(), Elem::Fin(2));
    }

    #[test]
    fn rational_reduction() {
        let q = Field::rational();
        let r = arith(&s(&q, "1/2"), &s(&q, "2/3"), ArithOp::Mul).unwrap();
        assert_eq!(r.to_string(), "1/3");
        assert_eq!(q.format(&q.parse("4/-6").unwrap()), "-2/3");
    }

    #[test]
    fn gf25_modulus_relation() {
        let f = Field::gf25();
        let t = s(&f, "[0,1]");
        let t2 = arith(&t, &t, ArithOp::Mul).unwrap();
        assert_eq!(t2.value(), &f.parse("3").unwrap());
        assert_eq!(t2.to_string(), "3");
    }

    #[test]
    fn division_errors() {
        let f = Field::prime(5).unwrap();
        assert_eq!(
            arith(&s(&f, "1"), &s(&f, "0"), ArithOp::Div),
            Err(Error::DivisionByZero)
        );
        let q = Field::rational();
        assert!(matches!(
            arith(&s(&f, "1"), &s(&q, "1"), ArithOp::Add),
            Err(Error::FieldMismatch(..))
        ));
    }

    #[test]
    fn rejects_bad_fields() {
        assert!(Field::prime(4).is_err());
        // t^2 + 1 = (t+2)(t+3) over GF(5)
        assert!(Field::extension(5, vec![1, 0, 1]).is_err());
        assert!(Field::extension(5, vec![2, 0, 2]).is_err());
        assert!(Field::extension(2, vec![1, 1, 1]).is_ok());
    }

    #[test]
    fn orders() {
        let f3 = Field::prime(3).unwrap();
        assert_eq!(element_of_order(&f3, 2).unwrap().to_string(), "2");
        let f5 = Field::prime(5).unwrap();
        assert!(matches!(element_of_order(&f5, 3), Err(Error::NoSuchOrder(3, _))));
    }

    #[test]
    fn gf25_primitive_element_matches_brute_force() {
        let f = Field::gf25();
        // Oracle: scan nonzero elements in enumeration order and take the
        // first whose powers 1..=23 avoid one.
        let oracle = (1..25u32)
            .map(Elem::Fin)
            .find(|a| {
                let mut cur = f.one();
                (1..24).all(|_| {
                    cur = f.mul(&cur, a);
                    !f.is_one(&cur)
                })
            })
            .unwrap();
        let q = element_of_order(&f, 24).unwrap();
        assert_eq!(q.value(), &oracle);
        assert!(f.is_one(&f.pow(q.value(), 24)));
    }

    #[test]
    fn field_axioms_exhaustive_small_primes() {
        for p in [2u32, 3, 5, 7] {
            let f = Field::prime(p).unwrap();
            let els = f.elements().unwrap();
            for a in &els {
                if !f.is_zero(a) {
                    assert!(f.is_one(&f.mul(a, &f.inv(a).unwrap())));
                }
                for b in &els {
                    for c in &els {
                        assert_eq!(f.add(&f.add(a, b), c), f.add(a, &f.add(b, c)));
                        assert_eq!(f.mul(a, &f.add(b, c)), f.add(&f.mul(a, b), &f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn extension_inverse_exhaustive() {
        let f = Field::gf25();
        for a in f.elements().unwrap().iter().skip(1) {
            assert!(f.is_one(&f.mul(a, &f.inv(a).unwrap())));
        }
    }

    #[test]
    fn literal_round_trip() {
        for f in [Field::prime(7).unwrap(), Field::gf25(), Field::rational()] {
            for lit in ["0", "1", "3"] {
                let e = f.parse(lit).unwrap();
                assert_eq!(f.parse(&f.format(&e)).unwrap(), e);
            }
        }
    }
}
