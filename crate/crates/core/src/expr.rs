//! Expressions over a free Rota-Baxter algebra.
//!
//! ```text
//! sum     := ['-'] product (('+'|'-') product)*
//! product := juxt ('*' juxt)*
//! juxt    := atom+
//! atom    := rational | letter | '[' sum ']' | 'R' '(' sum ')' | '(' sum ')'
//!          | op '(' sum ',' sum ')'
//! op      := prec | succ | dot | prec_prime | star
//! ```
//!
//! `*` is the product `⋄` (or scalar multiplication when a side is a
//! rational). Juxtaposition is word concatenation and must alternate
//! letters and brackets, so `x [y]` is a single word. The operations are the
//! induced dendriform ones.

use crate::base_algebra::parse_rational;
use crate::dendriform::{induced_op, DendKind, Flavor};
use crate::error::{Error, Result};
use crate::free_rba::{Context, Element};
use crate::lexer::{Cursor, Tok};
use crate::rbword::{parse_letter, RBWord};
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
enum Value {
    Scalar(Scalar),
    Elem(Element),
}

pub fn evaluate(ctx: &Context, text: &str) -> Result<Element> {
    let mut cur = Cursor::new(text)?;
    let v = Parser { ctx, depth: 0 }.sum(&mut cur)?;
    cur.expect_end()?;
    into_element(v, &cur)
}

fn into_element(v: Value, cur: &Cursor) -> Result<Element> {
    match v {
        Value::Elem(e) => Ok(e),
        Value::Scalar(s) if s.is_zero() => Ok(Element::zero()),
        Value::Scalar(_) => Err(Error::Syntax {
            pos: cur.pos(),
            msg: "a nonzero scalar is not an element (the algebra has no unit)".into(),
        }),
    }
}

struct Parser<'a> {
    ctx: &'a Context,
    depth: usize,
}

const MAX_NESTING: usize = 256;

impl Parser<'_> {
    fn sum(&mut self, cur: &mut Cursor) -> Result<Value> {
        self.depth += 1;
        if self.depth > MAX_NESTING {
            return Err(cur.error("expression nested too deeply"));
        }
        let mut acc = if cur.eat(&Tok::Minus) {
            negate(self.product(cur)?)
        } else {
            self.product(cur)?
        };
        loop {
            if cur.eat(&Tok::Plus) {
                let rhs = self.product(cur)?;
                acc = self.add(acc, rhs, cur)?;
            } else if cur.eat(&Tok::Minus) {
                let rhs = negate(self.product(cur)?);
                acc = self.add(acc, rhs, cur)?;
            } else {
                break;
            }
        }
        self.depth -= 1;
        Ok(acc)
    }

    fn add(&self, a: Value, b: Value, cur: &Cursor) -> Result<Value> {
        match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => Ok(Value::Scalar(&x + &y)),
            (a, b) => Ok(Value::Elem(into_element(a, cur)?.add(&into_element(b, cur)?))),
        }
    }

    fn product(&mut self, cur: &mut Cursor) -> Result<Value> {
        let mut acc = self.juxt(cur)?;
        while cur.eat(&Tok::Star) {
            let rhs = self.juxt(cur)?;
            acc = match (acc, rhs) {
                (Value::Scalar(a), Value::Scalar(b)) => Value::Scalar(&a * &b),
                (Value::Scalar(c), Value::Elem(e)) | (Value::Elem(e), Value::Scalar(c)) => {
                    Value::Elem(e.scale(&c))
                }
                (Value::Elem(a), Value::Elem(b)) => Value::Elem(self.ctx.product(&a, &b)?),
            };
        }
        Ok(acc)
    }

    fn juxt(&mut self, cur: &mut Cursor) -> Result<Value> {
        let mut acc = self.atom(cur)?;
        while starts_atom(cur) {
            let pos = cur.pos();
            let rhs = self.atom(cur)?;
            acc = match (acc, rhs) {
                (Value::Elem(a), Value::Elem(b)) => Value::Elem(concat(&a, &b, pos)?),
                _ => return Err(Error::Syntax {
                    pos,
                    msg: "scalars multiply with `*`".into(),
                }),
            };
        }
        Ok(acc)
    }

    fn atom(&mut self, cur: &mut Cursor) -> Result<Value> {
        match cur.peek() {
            Some(Tok::Int(_)) => Ok(Value::Scalar(parse_rational(cur)?.expect("integer token"))),
            Some(Tok::LParen) => {
                cur.next();
                let v = self.sum(cur)?;
                cur.expect(&Tok::RParen, "`)`")?;
                Ok(v)
            }
            Some(Tok::LBracket) => {
                cur.next();
                let v = self.sum(cur)?;
                cur.expect(&Tok::RBracket, "`]`")?;
                Ok(Value::Elem(self.ctx.rb_apply(&into_element(v, cur)?)))
            }
            Some(Tok::Ident(name)) if cur.peek_at(1) == Some(&Tok::LParen) => {
                let name = name.clone();
                if name == "R" {
                    cur.next();
                    cur.next();
                    let v = self.sum(cur)?;
                    cur.expect(&Tok::RParen, "`)`")?;
                    return Ok(Value::Elem(self.ctx.rb_apply(&into_element(v, cur)?)));
                }
                let kind = DendKind::from_name(&name)
                    .ok_or_else(|| cur.error(format!("unknown operation `{name}`")))?;
                cur.next();
                cur.next();
                let a = self.sum(cur)?;
                let a = into_element(a, cur)?;
                cur.expect(&Tok::Comma, "`,`")?;
                let b = self.sum(cur)?;
                let b = into_element(b, cur)?;
                cur.expect(&Tok::RParen, "`)`")?;
                self.ctx.check_element(&a)?;
                self.ctx.check_element(&b)?;
                Ok(Value::Elem(induced_op(self.ctx, Flavor::Trialgebra, kind, &a, &b)?))
            }
            Some(Tok::Ident(_)) => {
                let l = parse_letter(cur, self.ctx.base().kind(), self.ctx.alphabet())?;
                Ok(Value::Elem(self.ctx.embed_letter(&l)?))
            }
            _ => Err(cur.error("expected a letter, number, `[`, `(` or operation")),
        }
    }
}

fn starts_atom(cur: &Cursor) -> bool {
    matches!(
        cur.peek(),
        Some(Tok::Ident(_)) | Some(Tok::LBracket) | Some(Tok::LParen) | Some(Tok::Int(_))
    )
}

fn negate(v: Value) -> Value {
    match v {
        Value::Scalar(s) => Value::Scalar(-s),
        Value::Elem(e) => Value::Elem(e.neg()),
    }
}

/// Bilinear word concatenation; every pair of words must alternate.
fn concat(a: &Element, b: &Element, pos: usize) -> Result<Element> {
    let mut out = Element::zero();
    for (x, cx) in a {
        for (y, cy) in b {
            let w: RBWord = x.concat(y).map_err(|_| Error::Alternation { pos })?;
            out.add_term(w, cx * cy);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base_algebra::BaseAlgebra;
    use crate::rbword::Alphabet;

    fn ctx(base: BaseAlgebra, weight: i64) -> Context {
        Context::new(Alphabet::new(["x", "y", "z", "w"]).unwrap(), base, Scalar::from_int(weight)).unwrap()
    }

    #[test]
    fn words_and_sums() {
        let c = ctx(BaseAlgebra::ZeroProduct, 0);
        let e = evaluate(&c, "x [y] - 1/2*[x] + 2*x [y]").unwrap();
        assert_eq!(c.render(&e), "-1/2*[x] + 3*x [y]");
        assert_eq!(c.render(&evaluate(&c, "x - x").unwrap()), "0");
        assert_eq!(c.render(&evaluate(&c, "R(x) y").unwrap()), "[x] y");
    }

    #[test]
    fn products_and_operations() {
        let c = ctx(BaseAlgebra::FreeMonoid, 1);
        let e = evaluate(&c, "R(x) * R(y)").unwrap();
        assert_eq!(c.render(&e), "[x.y] + [[x] y] + [x [y]]");
        let z = ctx(BaseAlgebra::ZeroProduct, 0);
        assert_eq!(z.render(&evaluate(&z, "prec(x, y)").unwrap()), "x [y]");
        assert_eq!(z.render(&evaluate(&z, "x * y").unwrap()), "0");
        assert_eq!(z.render(&evaluate(&z, "succ(x, y)").unwrap()), "[x] y");
        assert_eq!(z.render(&evaluate(&z, "3 * x * 2").unwrap()), "6*x");
    }

    #[test]
    fn bracket_of_sum_is_linear() {
        let c = ctx(BaseAlgebra::ZeroProduct, 0);
        assert_eq!(evaluate(&c, "[x + 2*y]").unwrap(), evaluate(&c, "[x] + 2*[y]").unwrap());
        assert_eq!(evaluate(&c, "(x + y) [z]").unwrap(), evaluate(&c, "x [z] + y [z]").unwrap());
    }

    #[test]
    fn errors() {
        let c = ctx(BaseAlgebra::ZeroProduct, 0);
        assert!(matches!(evaluate(&c, "x y"), Err(Error::Alternation { .. })));
        assert!(matches!(evaluate(&c, "x +"), Err(Error::Syntax { .. })));
        assert!(matches!(evaluate(&c, "q"), Err(Error::UnknownGenerator { .. })));
        assert!(matches!(evaluate(&c, "foo(x, y)"), Err(Error::Syntax { .. })));
        assert!(matches!(evaluate(&c, "2"), Err(Error::Syntax { .. })));
        assert!(matches!(evaluate(&c, "x.y"), Err(Error::InvalidLetter(_))));
    }
}
