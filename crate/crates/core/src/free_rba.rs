//! The free nonunitary Rota-Baxter algebra on a base algebra: linear
//! combinations of bracketed words with the recursive product `⋄`, the
//! operator `R(w) = [w]`, and the extension of algebra maps to
//! Rota-Baxter morphisms.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{LinearSpace, RotaBaxterAlgebra};
use crate::base_algebra::{BaseAlgebra, BaseElement};
use crate::error::{Error, Result};
use crate::lincomb::{write_sum, LinComb};
use crate::rbword::{parse_word, Alphabet, DisplayWith, Factor, Letter, RBWord};
use crate::scalar::Scalar;

/// A finite formal sum of bracketed words.
pub type Element = LinComb<RBWord>;

/// Caps that turn runaway computations into errors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Nesting of the bracket-times-bracket recursion. The recursion depth
    /// never exceeds the sum of the operand depths, so hitting this means
    /// pathological input.
    pub max_recursion: usize,
    /// Number of terms allowed in a single product.
    pub max_terms: usize,
    /// Number of words or trees an enumeration may produce.
    pub max_enumeration: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_recursion: 64,
            max_terms: 2_000_000,
            max_enumeration: 2_000_000,
        }
    }
}

/// The base algebra, alphabet and weight that fix one free algebra.
#[derive(Clone, Debug)]
pub struct Context {
    alphabet: Arc<Alphabet>,
    base: Arc<BaseAlgebra>,
    weight: Scalar,
    limits: Limits,
}

impl Context {
    /// Validates the base algebra before use.
    pub fn new(alphabet: Alphabet, base: BaseAlgebra, weight: Scalar) -> Result<Self> {
        base.validate(&alphabet)?;
        Ok(Context {
            alphabet: Arc::new(alphabet),
            base: Arc::new(base),
            weight,
            limits: Limits::default(),
        })
    }

    pub fn with_limits(mut self, limits: Limits) -> Self {
        self.limits = limits;
        self
    }

    /// The same algebra with another weight.
    pub fn with_weight(&self, weight: Scalar) -> Self {
        Context {
            weight,
            ..self.clone()
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn base(&self) -> &BaseAlgebra {
        &self.base
    }

    pub fn weight(&self) -> &Scalar {
        &self.weight
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    /// Two contexts describe the same algebra.
    pub fn same_algebra(&self, other: &Context) -> bool {
        self.alphabet == other.alphabet && self.base == other.base && self.weight == other.weight
    }

    pub fn parse_word(&self, text: &str) -> Result<RBWord> {
        parse_word(text, self.base.kind(), &self.alphabet)
    }

    /// Parses an element or expression; see [`crate::expr`].
    pub fn parse(&self, text: &str) -> Result<Element> {
        crate::expr::evaluate(self, text)
    }

    pub fn display<'a>(&'a self, a: &'a Element) -> impl std::fmt::Display + 'a {
        DisplayWith(move |f: &mut std::fmt::Formatter<'_>| {
            write_sum(f, a.iter(), |f, w| write!(f, "{}", w.display(&self.alphabet)))
        })
    }

    pub fn render(&self, a: &Element) -> String {
        self.display(a).to_string()
    }

    pub fn check_word(&self, w: &RBWord) -> Result<()> {
        let mut res = Ok(());
        w.for_each_letter(&mut |l| {
            if res.is_ok() {
                res = self.base.check_letter(l, &self.alphabet);
            }
        });
        res
    }

    /// Every word of `a` is a word over this context's alphabet and base.
    pub fn check_element(&self, a: &Element) -> Result<()> {
        a.keys().try_for_each(|w| self.check_word(w))
    }

    pub fn add(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check_element(a)?;
        self.check_element(b)?;
        Ok(a.add(b))
    }

    pub fn scale(&self, c: &Scalar, a: &Element) -> Element {
        a.scale(c)
    }

    /// The product `⋄`, extended bilinearly.
    pub fn product(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check_element(a)?;
        self.check_element(b)?;
        self.mul_unchecked(a, b)
    }

    pub fn word_product(&self, x: &RBWord, y: &RBWord) -> Result<Element> {
        self.check_word(x)?;
        self.check_word(y)?;
        self.word_mul(x, y, 0)
    }

    pub(crate) fn mul_unchecked(&self, a: &Element, b: &Element) -> Result<Element> {
        let mut out = Element::zero();
        for (x, cx) in a {
            for (y, cy) in b {
                let p = self.word_mul(x, y, 0)?;
                out.add_scaled(&(cx * cy), &p);
                if out.len() > self.limits.max_terms {
                    return Err(Error::ResourceLimit {
                        what: "terms in a product".into(),
                        cap: self.limits.max_terms,
                    });
                }
            }
        }
        Ok(out)
    }

    /// Only the last factor of `x` and the first factor of `y` interact; the
    /// remaining factors are concatenated around their product.
    fn word_mul(&self, x: &RBWord, y: &RBWord, level: usize) -> Result<Element> {
        if level > self.limits.max_recursion {
            return Err(Error::RecursionLimit {
                limit: self.limits.max_recursion,
            });
        }
        let xf = x.factors();
        let yf = y.factors();
        let prefix = &xf[..xf.len() - 1];
        let suffix = &yf[1..];
        match (x.last(), y.first()) {
            (Factor::Letter(a), Factor::Letter(b)) => {
                let ab = self.base.mult_letters(a, b)?;
                Ok(ab.map_basis(|l| splice(prefix, Factor::Letter(l.clone()), suffix)))
            }
            (Factor::Bracket(u), Factor::Bracket(v)) => {
                let inner = self.bracket_mul(u, v, level + 1)?;
                Ok(inner.map_basis(|w| splice(prefix, Factor::Bracket(w.clone()), suffix)))
            }
            _ => {
                let mut factors = Vec::with_capacity(xf.len() + yf.len());
                factors.extend_from_slice(xf);
                factors.extend_from_slice(yf);
                Ok(Element::basis(RBWord::from_factors_unchecked(factors)))
            }
        }
    }

    /// The content of `[u] ⋄ [v] = [[u] ⋄ v] + [u ⋄ [v]] + λ[u ⋄ v]`.
    fn bracket_mul(&self, u: &RBWord, v: &RBWord, level: usize) -> Result<Element> {
        let bu = RBWord::bracket(u.clone());
        let bv = RBWord::bracket(v.clone());
        let mut out = self.word_mul(&bu, v, level)?;
        out.add_scaled(&Scalar::one(), &self.word_mul(u, &bv, level)?);
        if !self.weight.is_zero() {
            out.add_scaled(&self.weight, &self.word_mul(u, v, level)?);
        }
        Ok(out)
    }

    /// `R(a)`: wraps every word in one bracket.
    pub fn rb_apply(&self, a: &Element) -> Element {
        a.map_basis(|w| RBWord::bracket(w.clone()))
    }

    /// The natural injection of a basis letter.
    pub fn embed_letter(&self, l: &Letter) -> Result<Element> {
        self.base.check_letter(l, &self.alphabet)?;
        Ok(Element::basis(RBWord::letter(l.clone())))
    }

    /// The natural injection of `B`, extended linearly.
    pub fn embed_base(&self, b: &BaseElement) -> Result<Element> {
        let mut out = Element::zero();
        for (l, c) in b {
            out.add_scaled(c, &self.embed_letter(l)?);
        }
        Ok(out)
    }

    pub fn generator(&self, name: &str) -> Result<Element> {
        let g = self.alphabet.lookup(name).ok_or_else(|| Error::UnknownGenerator {
            name: name.to_string(),
            pos: 0,
        })?;
        Ok(Element::basis(RBWord::generator(g)))
    }

    /// Expands both associations of `[u] ⋄ [v] ⋄ [w]` into their eleven
    /// bracketed terms, each carrying its power of the weight.
    pub fn eleven_terms(&self, u: &RBWord, v: &RBWord, w: &RBWord) -> Result<ElevenTerms> {
        for x in [u, v, w] {
            self.check_word(x)?;
        }
        let lam = &self.weight;
        let lam2 = lam * lam;
        let e = |x: &RBWord| Element::basis(x.clone());
        let (u, v, w) = (e(u), e(v), e(w));
        let br = |a: &Element| self.rb_apply(a);
        let m = |a: &Element, b: &Element| self.mul_unchecked(a, b);
        let (bu, bv, bw) = (br(&u), br(&v), br(&w));

        let bu_v = m(&bu, &v)?;
        let u_bv = m(&u, &bv)?;
        let u_v = m(&u, &v)?;
        let bv_w = m(&bv, &w)?;
        let v_bw = m(&v, &bw)?;
        let v_w = m(&v, &w)?;

        let left = [
            br(&m(&br(&bu_v), &w)?),
            br(&m(&bu_v, &bw)?),
            br(&m(&bu_v, &w)?).scale(lam),
            br(&m(&br(&u_bv), &w)?),
            br(&m(&u, &br(&bv_w))?),
            br(&m(&u, &br(&v_bw))?),
            br(&m(&u, &br(&v_w))?).scale(lam),
            br(&m(&u_bv, &w)?).scale(lam),
            br(&m(&br(&u_v), &w)?).scale(lam),
            br(&m(&u_v, &bw)?).scale(lam),
            br(&m(&u_v, &w)?).scale(&lam2),
        ];
        let right = [
            br(&m(&br(&bu_v), &w)?),
            br(&m(&br(&u_bv), &w)?),
            br(&m(&br(&u_v), &w)?).scale(lam),
            br(&m(&u, &br(&bv_w))?),
            br(&m(&u, &bv_w)?).scale(lam),
            br(&m(&bu, &v_bw)?),
            br(&m(&u, &br(&v_bw))?),
            br(&m(&u, &v_bw)?).scale(lam),
            br(&m(&bu, &v_w)?).scale(lam),
            br(&m(&u, &br(&v_w))?).scale(lam),
            br(&m(&u, &v_w)?).scale(&lam2),
        ];
        Ok(ElevenTerms { left, right })
    }
}

/// Rebuilds a word around a new boundary factor. The new factor has the
/// kind of the factors it replaces, so alternation is preserved.
fn splice(prefix: &[Factor], middle: Factor, suffix: &[Factor]) -> RBWord {
    let mut factors = Vec::with_capacity(prefix.len() + 1 + suffix.len());
    factors.extend_from_slice(prefix);
    factors.push(middle);
    factors.extend_from_slice(suffix);
    RBWord::from_factors_unchecked(factors)
}

/// The term-by-term expansions of `([u]⋄[v])⋄[w]` (left) and
/// `[u]⋄([v]⋄[w])` (right).
#[derive(Clone, Debug)]
pub struct ElevenTerms {
    pub left: [Element; 11],
    pub right: [Element; 11],
}

impl ElevenTerms {
    /// The matching of left terms onto right terms, 1-based.
    pub const MATCHING: [usize; 11] = [1, 6, 9, 2, 4, 7, 10, 5, 3, 8, 11];

    pub fn left_sum(&self) -> Element {
        sum(&self.left)
    }

    pub fn right_sum(&self) -> Element {
        sum(&self.right)
    }

    /// The left term `i` equals the right term `MATCHING[i]` for every `i`.
    pub fn matching_holds(&self) -> bool {
        Self::MATCHING
            .iter()
            .enumerate()
            .all(|(i, &j)| self.left[i] == self.right[j - 1])
    }

    /// The two lists agree as multisets.
    pub fn multisets_agree(&self) -> bool {
        let mut right: Vec<Option<&Element>> = self.right.iter().map(Some).collect();
        self.left.iter().all(|l| {
            match right.iter_mut().find(|r| r.is_some_and(|r| r == l)) {
                Some(slot) => {
                    *slot = None;
                    true
                }
                None => false,
            }
        })
    }
}

fn sum(terms: &[Element]) -> Element {
    let mut out = Element::zero();
    for t in terms {
        out.add_scaled(&Scalar::one(), t);
    }
    out
}

impl LinearSpace for Context {
    type Elem = Element;

    fn zero(&self) -> Element {
        Element::zero()
    }

    fn add(&self, a: &Element, b: &Element) -> Element {
        a.add(b)
    }

    fn scale(&self, c: &Scalar, a: &Element) -> Element {
        a.scale(c)
    }

    fn is_zero(&self, a: &Element) -> bool {
        a.is_zero()
    }

    fn render(&self, a: &Element) -> String {
        Context::render(self, a)
    }
}

impl RotaBaxterAlgebra for Context {
    fn weight(&self) -> &Scalar {
        &self.weight
    }

    fn mul(&self, a: &Element, b: &Element) -> Result<Element> {
        self.product(a, b)
    }

    fn rota_baxter(&self, a: &Element) -> Element {
        self.rb_apply(a)
    }
}

/// The unique Rota-Baxter morphism out of the free algebra that extends an
/// algebra map `f: B → A` given on generators.
pub struct Morphism<'a, A: RotaBaxterAlgebra> {
    ctx: &'a Context,
    target: &'a A,
    images: Vec<A::Elem>,
}

impl<'a, A: RotaBaxterAlgebra> Morphism<'a, A> {
    /// `images[g]` is `f(g)`. Over the free monoid base a dotted letter maps
    /// to the product of its parts' images.
    ///
    /// Checks that the weights agree and that `f` is multiplicative on all
    /// generator pairs and on a fixed sample of random base elements.
    pub fn new(ctx: &'a Context, target: &'a A, images: Vec<A::Elem>) -> Result<Self> {
        if ctx.weight() != target.weight() {
            return Err(Error::WeightMismatch {
                context: ctx.weight().to_string(),
                target: target.weight().to_string(),
            });
        }
        if images.len() != ctx.alphabet().len() {
            return Err(Error::ContextMismatch(format!(
                "{} generator images for an alphabet of {}",
                images.len(),
                ctx.alphabet().len()
            )));
        }
        let morphism = Morphism { ctx, target, images };
        morphism.check_multiplicative()?;
        Ok(morphism)
    }

    fn check_multiplicative(&self) -> Result<()> {
        let alphabet = self.ctx.alphabet();
        let singles: Vec<BaseElement> = alphabet
            .generators()
            .map(|g| BaseElement::basis(Letter::single(g)))
            .collect();
        let mut pairs: Vec<(BaseElement, BaseElement)> = Vec::new();
        for a in &singles {
            for b in &singles {
                pairs.push((a.clone(), b.clone()));
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let mut random = || -> BaseElement {
            alphabet
                .generators()
                .map(|g| (Letter::single(g), Scalar::from_int(rng.gen_range(-2..=2))))
                .collect()
        };
        for _ in 0..4 {
            pairs.push((random(), random()));
        }
        for (a, b) in pairs {
            let lhs = self.base_image(&self.ctx.base().mult(&a, &b)?)?;
            let rhs = self.target.mul(&self.base_image(&a)?, &self.base_image(&b)?)?;
            if lhs != rhs {
                let show = |e: &BaseElement| {
                    let elem = self.ctx.embed_base(e).unwrap_or_default();
                    self.ctx.render(&elem)
                };
                return Err(Error::NotMultiplicative { a: show(&a), b: show(&b) });
            }
        }
        Ok(())
    }

    pub fn letter_image(&self, l: &Letter) -> Result<A::Elem> {
        let mut parts = l.parts().iter();
        let first = parts.next().expect("letters are nonempty");
        let mut out = self.images[first.index()].clone();
        for g in parts {
            out = self.target.mul(&out, &self.images[g.index()])?;
        }
        Ok(out)
    }

    pub fn base_image(&self, b: &BaseElement) -> Result<A::Elem> {
        let mut out = self.target.zero();
        for (l, c) in b {
            out = self.target.add(&out, &self.target.scale(c, &self.letter_image(l)?));
        }
        Ok(out)
    }

    /// `f̄(w_1 ⋯ w_b) = f̄(w_1) ∗ ⋯ ∗ f̄(w_b)` with `f̄([w]) = R(f̄(w))`.
    pub fn apply_word(&self, w: &RBWord) -> Result<A::Elem> {
        let mut acc: Option<A::Elem> = None;
        for factor in w.factors() {
            let img = match factor {
                Factor::Letter(l) => self.letter_image(l)?,
                Factor::Bracket(inner) => self.target.rota_baxter(&self.apply_word(inner)?),
            };
            acc = Some(match acc {
                None => img,
                Some(prev) => self.target.mul(&prev, &img)?,
            });
        }
        Ok(acc.expect("words are nonempty"))
    }

    pub fn apply(&self, a: &Element) -> Result<A::Elem> {
        self.ctx.check_element(a)?;
        let mut out = self.target.zero();
        for (w, c) in a {
            out = self.target.add(&out, &self.target.scale(c, &self.apply_word(w)?));
        }
        Ok(out)
    }
}

/// One-shot evaluation of the extended morphism.
pub fn eval_morphism<A: RotaBaxterAlgebra>(
    ctx: &Context,
    images: Vec<A::Elem>,
    target: &A,
    a: &Element,
) -> Result<A::Elem> {
    Morphism::new(ctx, target, images)?.apply(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base_algebra::MultTable;

    fn ctx(names: &[&str], base: BaseAlgebra, weight: i64) -> Context {
        Context::new(Alphabet::new(names).unwrap(), base, Scalar::from_int(weight)).unwrap()
    }

    #[test]
    fn addition_and_scaling() {
        let c = ctx(&["x", "y"], BaseAlgebra::ZeroProduct, 0);
        let x = c.parse("x").unwrap();
        assert!(c.add(&x, &x.neg()).unwrap().is_zero());
        assert_eq!(c.render(&c.parse("y + x").unwrap()), "x + y");
        let sum = c.add(&c.parse("2*[x]").unwrap(), &c.parse("3*[x]").unwrap()).unwrap();
        assert_eq!(c.render(&sum), "5*[x]");
        assert!(c.scale(&Scalar::zero(), &c.parse("x + [y]").unwrap()).is_zero());
        assert_eq!(c.scale(&Scalar::ratio(1, 2), &c.parse("2*x").unwrap()), x);
    }

    #[test]
    fn concatenation_cases() {
        let c = ctx(&["x", "y"], BaseAlgebra::ZeroProduct, 1);
        let p = c.product(&c.parse("x").unwrap(), &c.parse("[y]").unwrap()).unwrap();
        assert_eq!(c.render(&p), "x [y]");
        let p = c.product(&c.parse("[y]").unwrap(), &c.parse("x").unwrap()).unwrap();
        assert_eq!(c.render(&p), "[y] x");
    }

    #[test]
    fn bracket_product_zero_base() {
        for w in [0, 1, -1, 2] {
            let c = ctx(&["x", "y"], BaseAlgebra::ZeroProduct, w);
            let p = c.product(&c.parse("[x]").unwrap(), &c.parse("[y]").unwrap()).unwrap();
            assert_eq!(p, c.parse("[[x] y] + [x [y]]").unwrap());
        }
    }

    #[test]
    fn bracket_product_free_monoid() {
        let c = ctx(&["x", "y"], BaseAlgebra::FreeMonoid, 1);
        let p = c.product(&c.parse("[x]").unwrap(), &c.parse("[y]").unwrap()).unwrap();
        assert_eq!(c.render(&p), "[x.y] + [[x] y] + [x [y]]");
    }

    #[test]
    fn boundary_rule() {
        let c = ctx(&["x", "y", "z", "w"], BaseAlgebra::ZeroProduct, 1);
        let p = c
            .product(&c.parse("x [y]").unwrap(), &c.parse("[z] w").unwrap())
            .unwrap();
        assert_eq!(p, c.parse("x [[y] z] w + x [y [z]] w").unwrap());
    }

    #[test]
    fn zero_base_kills_whole_term() {
        let c = ctx(&["x", "y"], BaseAlgebra::ZeroProduct, 1);
        let p = c.product(&c.parse("[x] y").unwrap(), &c.parse("x [y]").unwrap()).unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn table_base_letters() {
        let (a, t) = MultTable::parse("x x -> 2*x", None).unwrap();
        let c = Context::new(a, BaseAlgebra::Table(t), Scalar::one()).unwrap();
        let p = c.product(&c.parse("[x] x").unwrap(), &c.parse("x [x]").unwrap()).unwrap();
        assert_eq!(c.render(&p), "2*[x] x [x]");
    }

    #[test]
    fn rb_apply_is_linear() {
        let c = ctx(&["x", "y"], BaseAlgebra::ZeroProduct, 0);
        assert_eq!(c.rb_apply(&c.parse("x").unwrap()), c.parse("[x]").unwrap());
        assert_eq!(c.rb_apply(&c.parse("x + 2*y").unwrap()), c.parse("[x] + 2*[y]").unwrap());
        assert!(c.rb_apply(&Element::zero()).is_zero());
    }

    #[test]
    fn embedding() {
        let c = ctx(&["x", "y"], BaseAlgebra::FreeMonoid, 1);
        let xy = Letter::new([crate::rbword::Generator(0), crate::rbword::Generator(1)]).unwrap();
        let e = c.embed_letter(&xy).unwrap();
        let w = e.as_basis().unwrap();
        assert_eq!((w.breadth(), w.depth()), (1, 0));
        let z = ctx(&["x", "y"], BaseAlgebra::ZeroProduct, 1);
        assert!(z.embed_letter(&xy).is_err());
        let b: BaseElement = [
            (Letter::single(crate::rbword::Generator(0)), Scalar::from_int(2)),
            (Letter::single(crate::rbword::Generator(1)), Scalar::from_int(3)),
        ]
        .into_iter()
        .collect();
        assert_eq!(c.embed_base(&b).unwrap(), c.parse("2*x + 3*y").unwrap());
    }

    #[test]
    fn context_mismatch() {
        let small = ctx(&["x"], BaseAlgebra::ZeroProduct, 0);
        let big = ctx(&["x", "y"], BaseAlgebra::FreeMonoid, 0);
        let y = big.parse("[x.y]").unwrap();
        assert!(matches!(small.product(&y, &y), Err(Error::ContextMismatch(_))));
        let zero_base = ctx(&["x", "y"], BaseAlgebra::ZeroProduct, 0);
        assert!(matches!(zero_base.product(&y, &y), Err(Error::InvalidLetter(_))));
    }

    #[test]
    fn recursion_guard_trips() {
        let c = ctx(&["x"], BaseAlgebra::ZeroProduct, 1).with_limits(Limits {
            max_recursion: 2,
            ..Limits::default()
        });
        let deep = c.parse("[[[[x]]]]").unwrap();
        assert!(matches!(c.product(&deep, &deep), Err(Error::RecursionLimit { limit: 2 })));
        let shallow = c.parse("[x]").unwrap();
        assert!(c.product(&shallow, &shallow).is_ok());
    }

    #[test]
    fn eleven_terms_small_case() {
        let c = ctx(&["x", "y", "z"], BaseAlgebra::FreeMonoid, 2);
        let w = |s| c.parse_word(s).unwrap();
        let t = c.eleven_terms(&w("x"), &w("y"), &w("z")).unwrap();
        assert!(t.matching_holds());
        assert!(t.multisets_agree());
        let (a, b, d) = (c.parse("[x]").unwrap(), c.parse("[y]").unwrap(), c.parse("[z]").unwrap());
        let lhs = c.product(&c.product(&a, &b).unwrap(), &d).unwrap();
        assert_eq!(t.left_sum(), lhs);
        assert_eq!(t.right_sum(), lhs);
    }
}
