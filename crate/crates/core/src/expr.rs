//! Parsing of element expressions such as `2*M^3 + M^4N` or `x1^2x2 - x3`.
//!
//! Atoms are basis labels. Juxtaposition and `*` multiply in the algebra, so
//! `M^3N` means `M·M·M·N` whether or not it is itself a basis label.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::Elem;
use crate::linalg::{add_vec, scale_vec, sub_vec, unit_vec};

pub fn parse_element(alg: &Algebra, text: &str) -> Result<Vec<Elem>> {
    let mut p = Parser { alg, src: text, pos: 0 };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != text.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(v)
}

pub fn parse_elements(alg: &Algebra, texts: &[&str]) -> Result<Vec<Vec<Elem>>> {
    texts.iter().map(|t| parse_element(alg, t)).collect()
}

struct Parser<'a> {
    alg: &'a Algebra,
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, reason: &str) -> Error {
        Error::BadExpression {
            expr: self.src.to_string(),
            reason: format!("{reason} at offset {}", self.pos),
        }
    }

    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.rest().chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn expr(&mut self) -> Result<Vec<Elem>> {
        let f = self.alg.field();
        let mut negate = false;
        if self.peek() == Some('-') {
            self.pos += 1;
            negate = true;
        }
        let mut acc = self.term()?;
        if negate {
            acc = scale_vec(f, &f.neg(&f.one()), &acc);
        }
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = add_vec(f, &acc, &t);
                }
                Some('-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = sub_vec(f, &acc, &t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Vec<Elem>> {
        let mut acc = self.alg.one().to_vec();
        let mut factors = 0;
        while let Some(c) = self.peek() {
            if c == '+' || c == '-' || c == ')' {
                break;
            }
            if c == '*' && factors > 0 {
                self.pos += 1;
                continue;
            }
            let f = self.factor()?;
            acc = self.alg.mul(&acc, &f);
            factors += 1;
        }
        if factors == 0 {
            return Err(self.error("expected a term"));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Vec<Elem>> {
        self.skip_ws();
        let base = if self.rest().starts_with('(') && self.label_match().is_none() {
            self.pos += 1;
            let inner = self.expr()?;
            if self.peek() != Some(')') {
                return Err(self.error("expected ')'"));
            }
            self.pos += 1;
            inner
        } else if let Some(v) = self.scalar()? {
            v
        } else if let Some((idx, len)) = self.label_match() {
            self.pos += len;
            unit_vec(self.alg.field(), self.alg.dim(), idx)
        } else {
            return Err(self.error("unknown symbol"));
        };
        if self.rest().starts_with('^') {
            self.pos += 1;
            let digits: String = self.rest().chars().take_while(char::is_ascii_digit).collect();
            let e: u32 = digits.parse().map_err(|_| self.error("expected an exponent"))?;
            self.pos += digits.len();
            return Ok(self.alg.pow(&base, e));
        }
        Ok(base)
    }

    /// Scalar literal (as a multiple of the identity), unless a longer
    /// non-numeric label starts here.
    fn scalar(&mut self) -> Result<Option<Vec<Elem>>> {
        let rest = self.rest();
        let literal_len = if rest.starts_with('[') {
            match rest.find(']') {
                Some(end) => end + 1,
                None => return Err(self.error("unterminated coefficient list")),
            }
        } else {
            let digits = rest.chars().take_while(char::is_ascii_digit).count();
            if digits == 0 {
                return Ok(None);
            }
            let after = &rest[digits..];
            let denom = after
                .strip_prefix('/')
                .map(|d| d.chars().take_while(char::is_ascii_digit).count())
                .unwrap_or(0);
            if denom > 0 {
                digits + 1 + denom
            } else {
                digits
            }
        };
        if let Some((_, len)) = self.label_match() {
            if len > literal_len {
                return Ok(None);
            }
        }
        let f = self.alg.field();
        let c = f.parse(&rest[..literal_len])?;
        self.pos += literal_len;
        Ok(Some(scale_vec(f, &c, self.alg.one())))
    }

    /// The longest label at the cursor not directly followed by `^`; when
    /// every candidate is followed by `^`, the shortest one (which takes the
    /// exponent).
    fn label_match(&self) -> Option<(usize, usize)> {
        let labels = self.alg.labels()?;
        let rest = self.rest();
        let mut candidates: Vec<(usize, usize)> = labels
            .iter()
            .enumerate()
            .filter(|(_, l)| !l.is_empty() && rest.starts_with(l.as_str()))
            .map(|(i, l)| (i, l.len()))
            .collect();
        candidates.sort_by_key(|&(i, len)| (std::cmp::Reverse(len), i));
        candidates
            .iter()
            .find(|&&(_, len)| !rest[len..].starts_with('^'))
            .or_else(|| candidates.last())
            .copied()
    }
}
