//! Rota-Baxter bracketed words: the basis of the free nonunitary
//! Rota-Baxter algebra on an algebra with a chosen basis of letters.
//!
//! A word is a nonempty sequence of factors that alternate between letters
//! and bracketed subwords. The bracket `[w]` stands for the Rota-Baxter
//! operator applied to `w`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use smallvec::SmallVec;

use crate::base_algebra::BaseKind;
use crate::error::{Error, Result};
use crate::lexer::{self, Cursor, Tok};

/// Index of a generator in its [`Alphabet`]. The alphabet order is the
/// declaration order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Generator(pub u32);

impl Generator {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A finite, totally ordered set of generator names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    index: HashMap<String, Generator>,
}

impl Alphabet {
    pub fn new<S: AsRef<str>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let mut alphabet = Alphabet {
            names: Vec::new(),
            index: HashMap::new(),
        };
        for name in names {
            alphabet.push(name.as_ref())?;
        }
        if alphabet.is_empty() {
            return Err(Error::InvalidAlphabet("alphabet is empty".into()));
        }
        Ok(alphabet)
    }

    /// One identifier per line; blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        Alphabet::new(
            text.lines()
                .map(|l| l.split('#').next().unwrap_or("").trim())
                .filter(|l| !l.is_empty()),
        )
    }

    pub(crate) fn empty() -> Self {
        Alphabet {
            names: Vec::new(),
            index: HashMap::new(),
        }
    }

    pub(crate) fn push(&mut self, name: &str) -> Result<Generator> {
        if !lexer::is_ident(name) {
            return Err(Error::InvalidAlphabet(format!("`{name}` is not an identifier")));
        }
        if self.index.contains_key(name) {
            return Err(Error::InvalidAlphabet(format!("duplicate generator `{name}`")));
        }
        let g = Generator(self.names.len() as u32);
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), g);
        Ok(g)
    }

    pub(crate) fn get_or_push(&mut self, name: &str) -> Result<Generator> {
        match self.lookup(name) {
            Some(g) => Ok(g),
            None => self.push(name),
        }
    }

    pub fn lookup(&self, name: &str) -> Option<Generator> {
        self.index.get(name).copied()
    }

    pub fn name(&self, g: Generator) -> &str {
        &self.names[g.index()]
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn contains(&self, g: Generator) -> bool {
        g.index() < self.names.len()
    }

    pub fn generators(&self) -> impl Iterator<Item = Generator> + '_ {
        (0..self.names.len() as u32).map(Generator)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }
}

/// A basis element of the base algebra: one generator, or a nonempty
/// generator sequence (a monomial) when the base is the free monoid.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Letter(SmallVec<[Generator; 4]>);

impl Letter {
    pub fn new(parts: impl IntoIterator<Item = Generator>) -> Result<Self> {
        let parts: SmallVec<[Generator; 4]> = parts.into_iter().collect();
        if parts.is_empty() {
            return Err(Error::InvalidLetter("a letter needs at least one generator".into()));
        }
        Ok(Letter(parts))
    }

    pub fn single(g: Generator) -> Self {
        let mut parts = SmallVec::new();
        parts.push(g);
        Letter(parts)
    }

    pub fn parts(&self) -> &[Generator] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Monoid product: the concatenated generator sequence.
    pub fn concat(&self, other: &Letter) -> Letter {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Letter(parts)
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        DisplayWith(move |f: &mut fmt::Formatter<'_>| {
            for (i, g) in self.0.iter().enumerate() {
                if i > 0 {
                    f.write_str(".")?;
                }
                f.write_str(alphabet.name(*g))?;
            }
            Ok(())
        })
    }

    fn push_key(&self, key: &mut Vec<u32>) {
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                key.push(TOK_DOT);
            }
            key.push(TOK_GEN + g.0);
        }
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Letter {
    /// Shorter monomials first, then lexicographic in declaration order.
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

/// One factor of the standard decomposition.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Factor {
    Letter(Letter),
    Bracket(RBWord),
}

impl Factor {
    pub fn is_letter(&self) -> bool {
        matches!(self, Factor::Letter(_))
    }

    pub fn is_bracket(&self) -> bool {
        matches!(self, Factor::Bracket(_))
    }

    fn generator_count(&self) -> u32 {
        match self {
            Factor::Letter(l) => l.len() as u32,
            Factor::Bracket(w) => w.generator_count(),
        }
    }

    fn depth(&self) -> u32 {
        match self {
            Factor::Letter(_) => 0,
            Factor::Bracket(w) => w.depth() + 1,
        }
    }

    fn push_key(&self, key: &mut Vec<u32>) {
        match self {
            Factor::Letter(l) => l.push_key(key),
            Factor::Bracket(w) => {
                key.push(TOK_OPEN);
                key.extend_from_slice(&w.0.key);
                key.push(TOK_CLOSE);
            }
        }
    }
}

// Token codes of the canonical rendering. Generators sort after punctuation
// and among themselves by declaration order.
const TOK_SPACE: u32 = 0;
const TOK_DOT: u32 = 1;
const TOK_OPEN: u32 = 2;
const TOK_CLOSE: u32 = 3;
const TOK_GEN: u32 = 4;

struct WordData {
    factors: Vec<Factor>,
    /// Token sequence of the canonical rendering.
    key: Box<[u32]>,
    gens: u32,
    depth: u32,
}

/// A Rota-Baxter bracketed word. Cheap to clone.
#[derive(Clone)]
pub struct RBWord(Arc<WordData>);

/// Head, tail, breadth and depth of a word.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, serde::Serialize)]
pub struct WordStats {
    pub head: u8,
    pub tail: u8,
    pub breadth: usize,
    pub depth: usize,
}

/// The four disjoint shape classes of a word, by first and last factor.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Shape {
    /// `(x[·])^r`, r ≥ 1
    LetterBracketRuns,
    /// `(x[·])^r x`, r ≥ 0
    LetterBracketRunsLetter,
    /// `([·]x)^r`, r ≥ 1
    BracketLetterRuns,
    /// `([·]x)^r [·]`, r ≥ 0
    BracketLetterRunsBracket,
}

impl RBWord {
    /// Builds a word from its standard decomposition.
    pub fn from_factors(factors: Vec<Factor>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::Invalid("a word needs at least one factor".into()));
        }
        for (i, pair) in factors.windows(2).enumerate() {
            if pair[0].is_letter() == pair[1].is_letter() {
                return Err(Error::Alternation { pos: i + 1 });
            }
        }
        Ok(Self::from_factors_unchecked(factors))
    }

    pub(crate) fn from_factors_unchecked(factors: Vec<Factor>) -> Self {
        debug_assert!(!factors.is_empty());
        debug_assert!(factors.windows(2).all(|p| p[0].is_letter() != p[1].is_letter()));
        let mut key = Vec::new();
        let mut gens = 0;
        let mut depth = 0;
        for (i, f) in factors.iter().enumerate() {
            if i > 0 {
                key.push(TOK_SPACE);
            }
            f.push_key(&mut key);
            gens += f.generator_count();
            depth = depth.max(f.depth());
        }
        RBWord(Arc::new(WordData {
            factors,
            key: key.into_boxed_slice(),
            gens,
            depth,
        }))
    }

    pub fn letter(l: Letter) -> Self {
        Self::from_factors_unchecked(vec![Factor::Letter(l)])
    }

    pub fn generator(g: Generator) -> Self {
        Self::letter(Letter::single(g))
    }

    /// `[w]`
    pub fn bracket(w: RBWord) -> Self {
        Self::from_factors_unchecked(vec![Factor::Bracket(w)])
    }

    /// Concatenation; fails if the tail of `self` and the head of `other`
    /// have the same kind.
    pub fn concat(&self, other: &RBWord) -> Result<RBWord> {
        if self.tail_is_letter() == other.head_is_letter() {
            return Err(Error::Alternation {
                pos: self.breadth(),
            });
        }
        let mut factors = self.0.factors.clone();
        factors.extend_from_slice(&other.0.factors);
        Ok(Self::from_factors_unchecked(factors))
    }

    /// The standard decomposition `w = w_1 ⋯ w_b`.
    pub fn factors(&self) -> &[Factor] {
        &self.0.factors
    }

    /// Each factor of the standard decomposition as a word of breadth one.
    pub fn standard_decomposition(&self) -> Vec<RBWord> {
        if self.breadth() == 1 {
            return vec![self.clone()];
        }
        self.0
            .factors
            .iter()
            .map(|f| Self::from_factors_unchecked(vec![f.clone()]))
            .collect()
    }

    pub fn breadth(&self) -> usize {
        self.0.factors.len()
    }

    pub fn depth(&self) -> u32 {
        self.0.depth
    }

    /// Total number of generator occurrences.
    pub fn generator_count(&self) -> u32 {
        self.0.gens
    }

    pub fn head_is_letter(&self) -> bool {
        self.0.factors[0].is_letter()
    }

    pub fn tail_is_letter(&self) -> bool {
        self.0.factors[self.0.factors.len() - 1].is_letter()
    }

    pub fn first(&self) -> &Factor {
        &self.0.factors[0]
    }

    pub fn last(&self) -> &Factor {
        &self.0.factors[self.0.factors.len() - 1]
    }

    /// The content `w` when `self = [w]`.
    pub fn as_bracket(&self) -> Option<&RBWord> {
        match self.0.factors.as_slice() {
            [Factor::Bracket(w)] => Some(w),
            _ => None,
        }
    }

    pub fn as_letter(&self) -> Option<&Letter> {
        match self.0.factors.as_slice() {
            [Factor::Letter(l)] => Some(l),
            _ => None,
        }
    }

    pub fn stats(&self) -> WordStats {
        WordStats {
            head: u8::from(!self.head_is_letter()),
            tail: u8::from(!self.tail_is_letter()),
            breadth: self.breadth(),
            depth: self.depth() as usize,
        }
    }

    pub fn shape(&self) -> Shape {
        match (self.head_is_letter(), self.tail_is_letter()) {
            (true, false) => Shape::LetterBracketRuns,
            (true, true) => Shape::LetterBracketRunsLetter,
            (false, true) => Shape::BracketLetterRuns,
            (false, false) => Shape::BracketLetterRunsBracket,
        }
    }

    /// Calls `f` on every letter, at every nesting level.
    pub fn for_each_letter(&self, f: &mut impl FnMut(&Letter)) {
        for factor in self.factors() {
            match factor {
                Factor::Letter(l) => f(l),
                Factor::Bracket(w) => w.for_each_letter(f),
            }
        }
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        DisplayWith(move |f: &mut fmt::Formatter<'_>| {
            for &t in self.0.key.iter() {
                match t {
                    TOK_SPACE => f.write_str(" ")?,
                    TOK_DOT => f.write_str(".")?,
                    TOK_OPEN => f.write_str("[")?,
                    TOK_CLOSE => f.write_str("]")?,
                    g => f.write_str(alphabet.name(Generator(g - TOK_GEN)))?,
                }
            }
            Ok(())
        })
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        self.display(alphabet).to_string()
    }
}

impl PartialEq for RBWord {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.key == other.0.key
    }
}

impl Eq for RBWord {}

impl Hash for RBWord {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.key.hash(state);
    }
}

impl PartialOrd for RBWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RBWord {
    /// Canonical term order: generator count, then depth, then the rendered
    /// form read lexicographically (generators compared by declaration order).
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .gens
            .cmp(&other.0.gens)
            .then(self.0.depth.cmp(&other.0.depth))
            .then_with(|| self.0.key.cmp(&other.0.key))
    }
}

impl fmt::Debug for RBWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &t in self.0.key.iter() {
            match t {
                TOK_SPACE => f.write_str(" ")?,
                TOK_DOT => f.write_str(".")?,
                TOK_OPEN => f.write_str("[")?,
                TOK_CLOSE => f.write_str("]")?,
                g => write!(f, "g{}", g - TOK_GEN)?,
            }
        }
        Ok(())
    }
}

pub fn compare_words(a: &RBWord, b: &RBWord) -> Ordering {
    a.cmp(b)
}

pub fn word_stats(w: &RBWord) -> WordStats {
    w.stats()
}

pub fn render_word(w: &RBWord, alphabet: &Alphabet) -> String {
    w.render(alphabet)
}

pub(crate) struct DisplayWith<F>(pub F);

impl<F: Fn(&mut fmt::Formatter<'_>) -> fmt::Result> fmt::Display for DisplayWith<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        (self.0)(f)
    }
}

/// Parses the word grammar
///
/// ```text
/// word   := factor (SP factor)*
/// factor := letter | '[' word ']'
/// letter := ident ('.' ident)*
/// ```
///
/// `R( w )` is accepted as a synonym for `[ w ]`. Dotted letters are only
/// allowed over the free monoid base.
pub fn parse_word(text: &str, base: BaseKind, alphabet: &Alphabet) -> Result<RBWord> {
    let mut cur = Cursor::new(text)?;
    let w = parse_word_tokens(&mut cur, base, alphabet)?;
    cur.expect_end()?;
    Ok(w)
}

pub(crate) fn parse_word_tokens(cur: &mut Cursor, base: BaseKind, alphabet: &Alphabet) -> Result<RBWord> {
    let mut factors: Vec<Factor> = Vec::new();
    loop {
        let pos = cur.pos();
        let factor = match cur.peek() {
            Some(Tok::Ident(name)) if name == "R" && cur.peek_at(1) == Some(&Tok::LParen) => {
                cur.next();
                cur.next();
                let inner = parse_word_tokens(cur, base, alphabet)?;
                cur.expect(&Tok::RParen, "`)`")?;
                Factor::Bracket(inner)
            }
            Some(Tok::Ident(_)) => Factor::Letter(parse_letter(cur, base, alphabet)?),
            Some(Tok::LBracket) => {
                cur.next();
                let inner = parse_word_tokens(cur, base, alphabet)?;
                cur.expect(&Tok::RBracket, "`]`")?;
                Factor::Bracket(inner)
            }
            _ => break,
        };
        if let Some(prev) = factors.last() {
            if prev.is_letter() == factor.is_letter() {
                return Err(Error::Alternation { pos });
            }
        }
        factors.push(factor);
    }
    if factors.is_empty() {
        return Err(cur.error("expected a letter or `[`"));
    }
    Ok(RBWord::from_factors_unchecked(factors))
}

pub(crate) fn parse_letter(cur: &mut Cursor, base: BaseKind, alphabet: &Alphabet) -> Result<Letter> {
    let mut parts: SmallVec<[Generator; 4]> = SmallVec::new();
    loop {
        let (name, pos) = cur.expect_ident()?;
        let g = alphabet
            .lookup(&name)
            .ok_or(Error::UnknownGenerator { name, pos })?;
        parts.push(g);
        if cur.peek() == Some(&Tok::Dot) {
            let pos = cur.pos();
            if base != BaseKind::FreeMonoid {
                return Err(Error::InvalidLetter(format!(
                    "dotted letter at {pos} requires the free monoid base"
                )));
            }
            cur.next();
        } else {
            break;
        }
    }
    Ok(Letter(parts))
}

/// All words with at most `max_letters` generator occurrences and depth at
/// most `max_depth`, each once, in canonical order.
pub fn enumerate_words(
    alphabet: &Alphabet,
    max_letters: usize,
    max_depth: usize,
    base: BaseKind,
    cap: usize,
) -> Result<Vec<RBWord>> {
    if max_letters == 0 {
        return Err(Error::Invalid("max_letters must be at least 1".into()));
    }
    let mut en = Enumerator {
        alphabet_len: alphabet.len() as u32,
        free_monoid: base == BaseKind::FreeMonoid,
        cap,
        produced: 0,
        words: HashMap::new(),
        letters: HashMap::new(),
    };
    let mut out = Vec::new();
    for g in 1..=max_letters {
        out.extend(en.words(g, max_depth)?.iter().cloned());
    }
    out.sort();
    Ok(out)
}

/// Memoized generation by exact generator count and depth bound.
struct Enumerator {
    alphabet_len: u32,
    free_monoid: bool,
    cap: usize,
    produced: usize,
    words: HashMap<(usize, usize), Arc<Vec<RBWord>>>,
    letters: HashMap<usize, Arc<Vec<Letter>>>,
}

impl Enumerator {
    fn letters(&mut self, g: usize) -> Arc<Vec<Letter>> {
        if let Some(ls) = self.letters.get(&g) {
            return ls.clone();
        }
        let ls = if g == 1 {
            (0..self.alphabet_len).map(|i| Letter::single(Generator(i))).collect()
        } else if self.free_monoid {
            let shorter = self.letters(g - 1);
            let mut out = Vec::new();
            for l in shorter.iter() {
                for i in 0..self.alphabet_len {
                    out.push(l.concat(&Letter::single(Generator(i))));
                }
            }
            out
        } else {
            Vec::new()
        };
        let ls = Arc::new(ls);
        self.letters.insert(g, ls.clone());
        ls
    }

    fn words(&mut self, g: usize, d: usize) -> Result<Arc<Vec<RBWord>>> {
        if let Some(ws) = self.words.get(&(g, d)) {
            return Ok(ws.clone());
        }
        let mut out = Vec::new();
        let mut prefix = Vec::new();
        self.extend(g, d, &mut prefix, &mut out)?;
        let ws = Arc::new(out);
        self.words.insert((g, d), ws.clone());
        Ok(ws)
    }

    /// Factors with exactly `g` generators: letters, and brackets of words
    /// of depth at most `d - 1`.
    fn factors(&mut self, g: usize, d: usize, letter: bool) -> Result<Vec<Factor>> {
        if letter {
            Ok(self.letters(g).iter().cloned().map(Factor::Letter).collect())
        } else if d == 0 {
            Ok(Vec::new())
        } else {
            Ok(self
                .words(g, d - 1)?
                .iter()
                .cloned()
                .map(Factor::Bracket)
                .collect())
        }
    }

    fn extend(&mut self, remaining: usize, d: usize, prefix: &mut Vec<Factor>, out: &mut Vec<RBWord>) -> Result<()> {
        let kinds: &[bool] = match prefix.last() {
            None => &[true, false],
            Some(f) if f.is_letter() => &[false],
            Some(_) => &[true],
        };
        for &letter in kinds {
            for g in 1..=remaining {
                for factor in self.factors(g, d, letter)? {
                    prefix.push(factor);
                    if g == remaining {
                        self.produced += 1;
                        if self.produced > self.cap {
                            return Err(Error::ResourceLimit {
                                what: "word enumeration".into(),
                                cap: self.cap,
                            });
                        }
                        out.push(RBWord::from_factors_unchecked(prefix.clone()));
                    } else {
                        self.extend(remaining - g, d, prefix, out)?;
                    }
                    prefix.pop();
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc() -> Alphabet {
        Alphabet::new(["x1", "x2", "x3"]).unwrap()
    }

    #[test]
    fn parses_nested_example() {
        let a = abc();
        let w = parse_word("[ [x1] x2 ] x3", BaseKind::ZeroProduct, &a).unwrap();
        assert_eq!(w.render(&a), "[[x1] x2] x3");
        assert_eq!(
            w.stats(),
            WordStats {
                head: 1,
                tail: 0,
                breadth: 2,
                depth: 2
            }
        );
        let parts = w.standard_decomposition();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0].render(&a), "[[x1] x2]");
        assert_eq!(parts[1].render(&a), "x3");
    }

    #[test]
    fn letter_and_bracket_stats() {
        let a = Alphabet::new(["x"]).unwrap();
        let x = parse_word("x", BaseKind::ZeroProduct, &a).unwrap();
        assert_eq!((x.stats().head, x.stats().tail, x.stats().breadth, x.stats().depth), (0, 0, 1, 0));
        let bx = parse_word("[x]", BaseKind::ZeroProduct, &a).unwrap();
        assert_eq!((bx.stats().head, bx.stats().tail, bx.stats().breadth, bx.stats().depth), (1, 1, 1, 1));
    }

    #[test]
    fn decomposition_splits_factors() {
        let a = abc();
        let w = parse_word("x1 [x2] x3", BaseKind::ZeroProduct, &a).unwrap();
        let parts: Vec<String> = w.standard_decomposition().iter().map(|p| p.render(&a)).collect();
        assert_eq!(parts, ["x1", "[x2]", "x3"]);
    }

    #[test]
    fn parse_errors() {
        let a = abc();
        assert!(matches!(
            parse_word("x1 x2", BaseKind::ZeroProduct, &a),
            Err(Error::Alternation { pos: 3 })
        ));
        assert!(matches!(
            parse_word("[x1] [x2]", BaseKind::ZeroProduct, &a),
            Err(Error::Alternation { .. })
        ));
        assert!(matches!(
            parse_word("x1 [q]", BaseKind::ZeroProduct, &a),
            Err(Error::UnknownGenerator { pos: 4, .. })
        ));
        assert!(matches!(parse_word("[x1", BaseKind::ZeroProduct, &a), Err(Error::Syntax { .. })));
        assert!(matches!(parse_word("[]", BaseKind::ZeroProduct, &a), Err(Error::Syntax { .. })));
        assert!(matches!(
            parse_word("x1.x2", BaseKind::ZeroProduct, &a),
            Err(Error::InvalidLetter(_))
        ));
    }

    #[test]
    fn dotted_letters_render() {
        let a = Alphabet::new(["x", "y"]).unwrap();
        let w = parse_word("x.y", BaseKind::FreeMonoid, &a).unwrap();
        assert_eq!(w.render(&a), "x.y");
        assert_eq!(w.breadth(), 1);
        assert_eq!(w.depth(), 0);
        assert_eq!(w.generator_count(), 2);
    }

    #[test]
    fn r_notation_is_a_bracket() {
        let a = abc();
        let w = parse_word("R(x1) x2", BaseKind::ZeroProduct, &a).unwrap();
        assert_eq!(w.render(&a), "[x1] x2");
    }

    #[test]
    fn canonical_order_examples() {
        let a = Alphabet::new(["x", "y"]).unwrap();
        let p = |s| parse_word(s, BaseKind::ZeroProduct, &a).unwrap();
        assert_eq!(compare_words(&p("x"), &p("[x]")), Ordering::Less);
        assert_eq!(compare_words(&p("x"), &p("y")), Ordering::Less);
        // punctuation sorts before generators
        assert_eq!(compare_words(&p("[y] x"), &p("x [y]")), Ordering::Less);
        let b = Alphabet::new(["y", "x"]).unwrap();
        let q = |s| parse_word(s, BaseKind::ZeroProduct, &b).unwrap();
        assert_eq!(compare_words(&q("y"), &q("x")), Ordering::Less);
    }

    #[test]
    fn small_enumerations() {
        let a = Alphabet::new(["x"]).unwrap();
        let ws = enumerate_words(&a, 1, 1, BaseKind::ZeroProduct, 1000).unwrap();
        let r: Vec<String> = ws.iter().map(|w| w.render(&a)).collect();
        assert_eq!(r, ["x", "[x]"]);

        let ws = enumerate_words(&a, 2, 0, BaseKind::FreeMonoid, 1000).unwrap();
        let r: Vec<String> = ws.iter().map(|w| w.render(&a)).collect();
        assert_eq!(r, ["x", "x.x"]);

        let c = abc();
        let ws = enumerate_words(&c, 3, 0, BaseKind::ZeroProduct, 1000).unwrap();
        let r: Vec<String> = ws.iter().map(|w| w.render(&c)).collect();
        assert_eq!(r, ["x1", "x2", "x3"]);
    }

    #[test]
    fn enumeration_cap() {
        let a = abc();
        assert!(matches!(
            enumerate_words(&a, 4, 3, BaseKind::FreeMonoid, 10),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn alphabet_validation() {
        assert!(Alphabet::new(["x", "x"]).is_err());
        assert!(Alphabet::new(["1x"]).is_err());
        assert!(Alphabet::new(Vec::<String>::new()).is_err());
        let a = Alphabet::parse("x\n# comment\n\ny # trailing\n").unwrap();
        assert_eq!(a.names(), ["x", "y"]);
    }
}
