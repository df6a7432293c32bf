//! The base algebra `B` whose basis supplies the letters of bracketed words.
//! The free construction only needs the product of two letters.

use std::fmt;

use crate::error::{Error, Result};
use crate::lexer::{Cursor, Tok};
use crate::lincomb::{write_sum, LinComb};
use crate::rbword::{Alphabet, Generator, Letter};
use crate::scalar::Scalar;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BaseKind {
    ZeroProduct,
    FreeMonoid,
    FiniteTable,
}

/// An element of `B` in the letter basis.
pub type BaseElement = LinComb<Letter>;

/// Structure constants `a·b = Σ c_z z` on a finite generator basis.
#[derive(Clone, Debug, PartialEq)]
pub struct MultTable {
    size: usize,
    entries: Vec<LinComb<Generator>>,
}

impl MultTable {
    /// The all-zero table on `size` generators.
    pub fn new(size: usize) -> Self {
        MultTable {
            size,
            entries: vec![LinComb::zero(); size * size],
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, a: Generator, b: Generator) -> &LinComb<Generator> {
        &self.entries[a.index() * self.size + b.index()]
    }

    pub fn set(&mut self, a: Generator, b: Generator, value: LinComb<Generator>) {
        let i = a.index() * self.size + b.index();
        self.entries[i] = value;
    }

    /// Bilinear extension to vectors.
    pub fn mul(&self, a: &LinComb<Generator>, b: &LinComb<Generator>) -> LinComb<Generator> {
        let mut out = LinComb::zero();
        for (x, cx) in a {
            for (y, cy) in b {
                out.add_scaled(&(cx * cy), self.get(*x, *y));
            }
        }
        out
    }

    /// Checks `(a·b)·c = a·(b·c)` on every generator triple.
    pub fn check_associative(&self, alphabet: &Alphabet) -> Result<usize> {
        let gens: Vec<Generator> = (0..self.size as u32).map(Generator).collect();
        let mut checked = 0;
        for &a in &gens {
            for &b in &gens {
                let ab = self.get(a, b);
                for &c in &gens {
                    let left = self.mul(ab, &LinComb::basis(c));
                    let right = self.mul(&LinComb::basis(a), self.get(b, c));
                    if left != right {
                        return Err(Error::Associativity {
                            a: alphabet.name(a).to_string(),
                            b: alphabet.name(b).to_string(),
                            c: alphabet.name(c).to_string(),
                        });
                    }
                    checked += 1;
                }
            }
        }
        Ok(checked)
    }

    /// Parses lines `x y -> c1*z1 + c2*z2`; missing pairs multiply to zero.
    ///
    /// With no alphabet given, generators are declared in order of first
    /// appearance.
    pub fn parse(text: &str, alphabet: Option<&Alphabet>) -> Result<(Alphabet, MultTable)> {
        let mut names = alphabet.cloned().unwrap_or_else(Alphabet::empty);
        let fixed = alphabet.is_some();
        let mut rows = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let at_line = |e: Error| match e {
                Error::Syntax { pos, msg } => Error::Syntax {
                    pos,
                    msg: format!("line {}: {msg}", lineno + 1),
                },
                other => other,
            };
            let mut cur = Cursor::new(line).map_err(at_line)?;
            let a = parse_generator(&mut cur, &mut names, fixed).map_err(at_line)?;
            let b = parse_generator(&mut cur, &mut names, fixed).map_err(at_line)?;
            cur.expect(&Tok::Arrow, "`->`").map_err(at_line)?;
            let rhs = parse_generator_sum(&mut cur, &mut names, fixed).map_err(at_line)?;
            cur.expect_end().map_err(at_line)?;
            rows.push((a, b, rhs));
        }
        if names.is_empty() {
            return Err(Error::Invalid("multiplication table declares no generators".into()));
        }
        let mut table = MultTable::new(names.len());
        for (a, b, rhs) in rows {
            if !table.get(a, b).is_zero() {
                return Err(Error::Invalid(format!(
                    "duplicate entry for {} {}",
                    names.name(a),
                    names.name(b)
                )));
            }
            table.set(a, b, rhs);
        }
        Ok((names, table))
    }

    pub fn to_text(&self, alphabet: &Alphabet) -> String {
        let mut out = String::new();
        for a in alphabet.generators() {
            for b in alphabet.generators() {
                let v = self.get(a, b);
                if !v.is_zero() {
                    out.push_str(&format!(
                        "{} {} -> {}\n",
                        alphabet.name(a),
                        alphabet.name(b),
                        GenSum(v, alphabet)
                    ));
                }
            }
        }
        out
    }
}

/// Displays a vector on generators as `2*x + y`.
pub struct GenSum<'a>(pub &'a LinComb<Generator>, pub &'a Alphabet);

impl fmt::Display for GenSum<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sum(f, self.0.iter(), |f, g| f.write_str(self.1.name(*g)))
    }
}

pub(crate) fn parse_generator(cur: &mut Cursor, names: &mut Alphabet, fixed: bool) -> Result<Generator> {
    let (name, pos) = cur.expect_ident()?;
    if fixed {
        names.lookup(&name).ok_or(Error::UnknownGenerator { name, pos })
    } else {
        names.get_or_push(&name)
    }
}

/// `term (('+'|'-') term)*` with `term := [rational ['*']] ident`, or `0`.
pub(crate) fn parse_generator_sum(
    cur: &mut Cursor,
    names: &mut Alphabet,
    fixed: bool,
) -> Result<LinComb<Generator>> {
    let mut out = LinComb::zero();
    if let Some(Tok::Int(n)) = cur.peek() {
        if n == &0.into() && cur.peek_at(1).is_none() {
            cur.next();
            return Ok(out);
        }
    }
    let mut sign = Scalar::one();
    if cur.eat(&Tok::Minus) {
        sign = Scalar::from_int(-1);
    }
    loop {
        let coeff = match parse_rational(cur)? {
            Some(c) => {
                cur.eat(&Tok::Star);
                c
            }
            None => Scalar::one(),
        };
        let g = parse_generator(cur, names, fixed)?;
        out.add_term(g, &sign * &coeff);
        if cur.eat(&Tok::Plus) {
            sign = Scalar::one();
        } else if cur.eat(&Tok::Minus) {
            sign = Scalar::from_int(-1);
        } else {
            break;
        }
    }
    Ok(out)
}

/// An optional unsigned `n` or `p/q`.
pub(crate) fn parse_rational(cur: &mut Cursor) -> Result<Option<Scalar>> {
    let num = match cur.peek() {
        Some(Tok::Int(n)) => n.clone(),
        _ => return Ok(None),
    };
    cur.next();
    let mut value = Scalar::from(num_rational::BigRational::from_integer(num));
    if cur.peek() == Some(&Tok::Slash) {
        cur.next();
        let pos = cur.pos();
        match cur.next() {
            Some(Tok::Int(d)) if d != 0.into() => {
                value = &value * &Scalar::from(num_rational::BigRational::new(1.into(), d));
            }
            _ => {
                return Err(Error::Syntax {
                    pos,
                    msg: "expected a nonzero denominator".into(),
                })
            }
        }
    }
    Ok(Some(value))
}

#[derive(Clone, Debug, PartialEq)]
pub enum BaseAlgebra {
    /// Every product of letters is zero.
    ZeroProduct,
    /// The tensor algebra: letters are generator sequences, the product
    /// concatenates them.
    FreeMonoid,
    /// A finite-dimensional algebra given by structure constants.
    Table(MultTable),
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct BaseReport {
    pub kind: BaseKind,
    pub triples_checked: usize,
}

impl BaseAlgebra {
    pub fn kind(&self) -> BaseKind {
        match self {
            BaseAlgebra::ZeroProduct => BaseKind::ZeroProduct,
            BaseAlgebra::FreeMonoid => BaseKind::FreeMonoid,
            BaseAlgebra::Table(_) => BaseKind::FiniteTable,
        }
    }

    /// Whether `l` is a basis letter of this algebra over `alphabet`.
    pub fn check_letter(&self, l: &Letter, alphabet: &Alphabet) -> Result<()> {
        if let Some(g) = l.parts().iter().find(|g| !alphabet.contains(**g)) {
            return Err(Error::ContextMismatch(format!("generator index {} outside alphabet", g.0)));
        }
        if l.len() > 1 && self.kind() != BaseKind::FreeMonoid {
            return Err(Error::InvalidLetter(format!(
                "letter `{}` has {} parts but the base is not the free monoid",
                l.display(alphabet),
                l.len()
            )));
        }
        if let BaseAlgebra::Table(t) = self {
            if t.size() != alphabet.len() {
                return Err(Error::ContextMismatch(format!(
                    "table has {} generators, alphabet has {}",
                    t.size(),
                    alphabet.len()
                )));
            }
        }
        Ok(())
    }

    /// Product of two basis letters in `B`.
    pub fn mult_letters(&self, a: &Letter, b: &Letter) -> Result<BaseElement> {
        match self {
            BaseAlgebra::ZeroProduct => {
                single_part(a)?;
                single_part(b)?;
                Ok(BaseElement::zero())
            }
            BaseAlgebra::FreeMonoid => Ok(BaseElement::basis(a.concat(b))),
            BaseAlgebra::Table(t) => {
                let (x, y) = (single_part(a)?, single_part(b)?);
                Ok(t.get(x, y).map_basis(|g| Letter::single(*g)))
            }
        }
    }

    /// Bilinear extension of [`BaseAlgebra::mult_letters`].
    pub fn mult(&self, a: &BaseElement, b: &BaseElement) -> Result<BaseElement> {
        let mut out = BaseElement::zero();
        for (x, cx) in a {
            for (y, cy) in b {
                out.add_scaled(&(cx * cy), &self.mult_letters(x, y)?);
            }
        }
        Ok(out)
    }

    /// Confirms associativity: exhaustively on generator triples for a table,
    /// structurally for the other kinds.
    pub fn validate(&self, alphabet: &Alphabet) -> Result<BaseReport> {
        let triples_checked = match self {
            BaseAlgebra::ZeroProduct | BaseAlgebra::FreeMonoid => 0,
            BaseAlgebra::Table(t) => {
                if t.size() != alphabet.len() {
                    return Err(Error::ContextMismatch("table size differs from alphabet".into()));
                }
                t.check_associative(alphabet)?
            }
        };
        Ok(BaseReport {
            kind: self.kind(),
            triples_checked,
        })
    }
}

fn single_part(l: &Letter) -> Result<Generator> {
    match l.parts() {
        [g] => Ok(*g),
        _ => Err(Error::InvalidLetter(
            "multi-part letters only exist over the free monoid base".into(),
        )),
    }
}

pub fn mult_letters(base: &BaseAlgebra, a: &Letter, b: &Letter) -> Result<BaseElement> {
    base.mult_letters(a, b)
}

pub fn validate_base(base: &BaseAlgebra, alphabet: &Alphabet) -> Result<BaseReport> {
    base.validate(alphabet)
}
