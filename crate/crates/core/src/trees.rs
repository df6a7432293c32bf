//! Decorated planar trees: the free dendriform dialgebra on planar binary
//! trees, the free dendriform trialgebra on planar trees, and their
//! embeddings `φ` and `ψ` into free Rota-Baxter algebras.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::algebra::LinearSpace;
use crate::base_algebra::BaseKind;
use crate::dendriform::{DendriformStructure, Flavor};
use crate::error::{Error, Result};
use crate::free_rba::Element;
use crate::lexer::{Cursor, Tok};
use crate::lincomb::{write_sum, LinComb};
use crate::rbword::{Alphabet, DisplayWith, Factor, Generator, Letter, RBWord};
use crate::scalar::Scalar;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TreeFamily {
    Binary,
    Planar,
}

/// A planar binary tree with decorated internal vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum BinaryTree {
    Leaf,
    Node(Arc<(BinaryTree, Generator, BinaryTree)>),
}

/// A planar tree whose internal vertices have at least two children; a
/// vertex with `k + 1` children carries `k` decorations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum PlanarTree {
    Leaf,
    Node(Arc<PlanarNode>),
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PlanarNode {
    children: Vec<PlanarTree>,
    decorations: Vec<Generator>,
}

/// `T ∨_x U`
pub fn graft_binary(left: BinaryTree, x: Generator, right: BinaryTree) -> BinaryTree {
    BinaryTree::Node(Arc::new((left, x, right)))
}

/// `T⁽⁰⁾ ∨_{x_1} T⁽¹⁾ ⋯ ∨_{x_k} T⁽ᵏ⁾`
pub fn graft_planar(children: Vec<PlanarTree>, decorations: Vec<Generator>) -> Result<PlanarTree> {
    if children.len() < 2 || children.len() != decorations.len() + 1 {
        return Err(Error::Arity {
            children: children.len(),
            decorations: decorations.len(),
        });
    }
    Ok(PlanarTree::Node(Arc::new(PlanarNode { children, decorations })))
}

/// The unique grafting that produces `t`; `None` for the leaf.
pub fn ungraft(t: &PlanarTree) -> Option<(&[PlanarTree], &[Generator])> {
    match t {
        PlanarTree::Leaf => None,
        PlanarTree::Node(n) => Some((&n.children, &n.decorations)),
    }
}

impl BinaryTree {
    pub fn is_leaf(&self) -> bool {
        matches!(self, BinaryTree::Leaf)
    }

    pub fn leaves(&self) -> usize {
        self.vertices() + 1
    }

    /// Number of internal vertices.
    pub fn vertices(&self) -> usize {
        match self {
            BinaryTree::Leaf => 0,
            BinaryTree::Node(n) => n.0.vertices() + 1 + n.2.vertices(),
        }
    }

    pub fn parts(&self) -> Option<(&BinaryTree, Generator, &BinaryTree)> {
        match self {
            BinaryTree::Leaf => None,
            BinaryTree::Node(n) => Some((&n.0, n.1, &n.2)),
        }
    }

    fn preorder(&self, out: &mut Vec<u32>) {
        match self {
            BinaryTree::Leaf => out.push(0),
            BinaryTree::Node(n) => {
                out.push(1 + n.1 .0);
                n.0.preorder(out);
                n.2.preorder(out);
            }
        }
    }

    /// The same tree as a planar tree with binary vertices.
    pub fn to_planar(&self) -> PlanarTree {
        match self {
            BinaryTree::Leaf => PlanarTree::Leaf,
            BinaryTree::Node(n) => PlanarTree::Node(Arc::new(PlanarNode {
                children: vec![n.0.to_planar(), n.2.to_planar()],
                decorations: vec![n.1],
            })),
        }
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        DisplayWith(move |f: &mut fmt::Formatter<'_>| match self {
            BinaryTree::Leaf => f.write_str("|"),
            BinaryTree::Node(n) => write!(
                f,
                "({}^{}{})",
                n.0.display(alphabet),
                alphabet.name(n.1),
                n.2.display(alphabet)
            ),
        })
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        self.display(alphabet).to_string()
    }
}

impl PlanarTree {
    pub fn is_leaf(&self) -> bool {
        matches!(self, PlanarTree::Leaf)
    }

    pub fn leaves(&self) -> usize {
        match self {
            PlanarTree::Leaf => 1,
            PlanarTree::Node(n) => n.children.iter().map(PlanarTree::leaves).sum(),
        }
    }

    fn preorder(&self, out: &mut Vec<u32>) {
        match self {
            PlanarTree::Leaf => out.push(0),
            PlanarTree::Node(n) => {
                // arity first so that distinct shapes never share a prefix
                out.push(n.children.len() as u32);
                out.extend(n.decorations.iter().map(|g| g.0));
                for c in &n.children {
                    c.preorder(out);
                }
            }
        }
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        DisplayWith(move |f: &mut fmt::Formatter<'_>| match self {
            PlanarTree::Leaf => f.write_str("|"),
            PlanarTree::Node(n) => {
                f.write_str("V(")?;
                write!(f, "{}", n.children[0].display(alphabet))?;
                for (x, c) in n.decorations.iter().zip(&n.children[1..]) {
                    write!(f, ",{},{}", alphabet.name(*x), c.display(alphabet))?;
                }
                f.write_str(")")
            }
        })
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        self.display(alphabet).to_string()
    }
}

macro_rules! tree_order {
    ($ty:ident) => {
        impl PartialOrd for $ty {
            fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
                Some(self.cmp(other))
            }
        }

        impl Ord for $ty {
            /// Leaf count, then preorder serialization.
            fn cmp(&self, other: &Self) -> Ordering {
                self.leaves().cmp(&other.leaves()).then_with(|| {
                    let (mut a, mut b) = (Vec::new(), Vec::new());
                    self.preorder(&mut a);
                    other.preorder(&mut b);
                    a.cmp(&b)
                })
            }
        }

        impl fmt::Debug for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let mut key = Vec::new();
                self.preorder(&mut key);
                write!(f, "{}{:?}", stringify!($ty), key)
            }
        }
    };
}

tree_order!(BinaryTree);
tree_order!(PlanarTree);

/// Parses `btree := '|' | '(' btree '^' ident btree ')'`.
pub fn parse_binary_tree(text: &str, alphabet: &Alphabet) -> Result<BinaryTree> {
    fn go(cur: &mut Cursor, alphabet: &Alphabet, depth: usize) -> Result<BinaryTree> {
        if depth > 256 {
            return Err(cur.error("tree nested too deeply"));
        }
        if cur.eat(&Tok::Pipe) {
            return Ok(BinaryTree::Leaf);
        }
        cur.expect(&Tok::LParen, "`|` or `(`")?;
        let left = go(cur, alphabet, depth + 1)?;
        cur.expect(&Tok::Caret, "`^`")?;
        let x = decoration(cur, alphabet)?;
        let right = go(cur, alphabet, depth + 1)?;
        cur.expect(&Tok::RParen, "`)`")?;
        Ok(graft_binary(left, x, right))
    }
    let mut cur = Cursor::new(text)?;
    let t = go(&mut cur, alphabet, 0)?;
    cur.expect_end()?;
    Ok(t)
}

/// Parses `ptree := '|' | 'V(' ptree (',' ident ',' ptree)+ ')'`.
pub fn parse_planar_tree(text: &str, alphabet: &Alphabet) -> Result<PlanarTree> {
    fn go(cur: &mut Cursor, alphabet: &Alphabet, depth: usize) -> Result<PlanarTree> {
        if depth > 256 {
            return Err(cur.error("tree nested too deeply"));
        }
        if cur.eat(&Tok::Pipe) {
            return Ok(PlanarTree::Leaf);
        }
        if cur.peek() != Some(&Tok::Ident("V".into())) {
            return Err(cur.error("expected `|` or `V(`"));
        }
        cur.next();
        cur.expect(&Tok::LParen, "`(`")?;
        let mut children = vec![go(cur, alphabet, depth + 1)?];
        let mut decorations = Vec::new();
        while cur.eat(&Tok::Comma) {
            decorations.push(decoration(cur, alphabet)?);
            cur.expect(&Tok::Comma, "`,`")?;
            children.push(go(cur, alphabet, depth + 1)?);
        }
        cur.expect(&Tok::RParen, "`)`")?;
        graft_planar(children, decorations)
    }
    let mut cur = Cursor::new(text)?;
    let t = go(&mut cur, alphabet, 0)?;
    cur.expect_end()?;
    Ok(t)
}

fn decoration(cur: &mut Cursor, alphabet: &Alphabet) -> Result<Generator> {
    let (name, pos) = cur.expect_ident()?;
    alphabet
        .lookup(&name)
        .ok_or(Error::UnknownGenerator { name, pos })
}

/// `φ(T^ℓ ∨_x T^r) = [φ(T^ℓ)] x [φ(T^r)]`, omitting the bracket of a leaf
/// subtree. The image lives over the zero-product base.
pub fn phi(t: &BinaryTree) -> Result<RBWord> {
    let (l, x, r) = t.parts().ok_or(Error::LeafInput)?;
    let mut factors = Vec::with_capacity(3);
    if !l.is_leaf() {
        factors.push(Factor::Bracket(phi(l)?));
    }
    factors.push(Factor::Letter(Letter::single(x)));
    if !r.is_leaf() {
        factors.push(Factor::Bracket(phi(r)?));
    }
    RBWord::from_factors(factors)
}

/// `ψ(T⁽⁰⁾ ∨_{x_1} ⋯ ∨_{x_k} T⁽ᵏ⁾) = [ψ(T⁽⁰⁾)] x_1 [ψ(T⁽¹⁾)] ⋯ x_k [ψ(T⁽ᵏ⁾)]`.
/// Leaf subtrees at either end are dropped; an interior leaf joins its two
/// neighbouring decorations into one letter of the free monoid.
pub fn psi(t: &PlanarTree) -> Result<RBWord> {
    let (children, decorations) = ungraft(t).ok_or(Error::LeafInput)?;
    let mut factors = Vec::new();
    let mut letter: Vec<Generator> = Vec::new();
    for (i, child) in children.iter().enumerate() {
        if !child.is_leaf() {
            if !letter.is_empty() {
                factors.push(Factor::Letter(Letter::new(letter.drain(..))?));
            }
            factors.push(Factor::Bracket(psi(child)?));
        }
        if let Some(x) = decorations.get(i) {
            letter.push(*x);
        }
    }
    if !letter.is_empty() {
        factors.push(Factor::Letter(Letter::new(letter)?));
    }
    RBWord::from_factors(factors)
}

/// Linear extension of [`phi`].
pub fn phi_element(a: &TreeElement<BinaryTree>) -> Result<Element> {
    map_words(a, phi)
}

/// Linear extension of [`psi`].
pub fn psi_element(a: &TreeElement<PlanarTree>) -> Result<Element> {
    map_words(a, psi)
}

fn map_words<T: Ord + Clone>(a: &TreeElement<T>, f: impl Fn(&T) -> Result<RBWord>) -> Result<Element> {
    let mut out = Element::zero();
    for (t, c) in a {
        out.add_term(f(t)?, c.clone());
    }
    Ok(out)
}

/// Dendriform diword: not a bracket at top level, no `[[w]]`, no
/// `letter [w] letter`, and every letter a single generator.
pub fn is_diword(w: &RBWord) -> bool {
    w.as_bracket().is_none() && word_ok(w, true)
}

/// Dendriform triword: not a bracket at top level and no `[[w]]`.
pub fn is_triword(w: &RBWord) -> bool {
    w.as_bracket().is_none() && word_ok(w, false)
}

fn word_ok(w: &RBWord, di: bool) -> bool {
    let factors = w.factors();
    if di {
        let sandwich = factors.windows(3).any(|f| f[0].is_letter() && f[2].is_letter());
        if sandwich {
            return false;
        }
    }
    factors.iter().all(|f| match f {
        Factor::Letter(l) => !di || l.len() == 1,
        Factor::Bracket(inner) => inner.as_bracket().is_none() && word_ok(inner, di),
    })
}

pub type TreeElement<T> = LinComb<T>;

/// `Dend(V)` on decorated planar binary trees.
#[derive(Clone, Debug)]
pub struct BinaryTrees {
    alphabet: Alphabet,
}

/// `DT(V)` on valently decorated planar trees.
#[derive(Clone, Debug)]
pub struct PlanarTrees {
    alphabet: Alphabet,
}

impl BinaryTrees {
    pub fn new(alphabet: Alphabet) -> Self {
        BinaryTrees { alphabet }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn prec_basis(&self, t: &BinaryTree, u: &BinaryTree) -> TreeElement<BinaryTree> {
        let (l, x, r) = t.parts().expect("non-leaf");
        self.star_ext(r, u).map_basis(|s| graft_binary(l.clone(), x, s.clone()))
    }

    fn succ_basis(&self, t: &BinaryTree, u: &BinaryTree) -> TreeElement<BinaryTree> {
        let (l, y, r) = u.parts().expect("non-leaf");
        self.star_ext(t, l).map_basis(|s| graft_binary(s.clone(), y, r.clone()))
    }

    /// `⋆ = ≺ + ≻` extended by `| ⋆ T = T ⋆ | = T`.
    pub fn star_ext(&self, t: &BinaryTree, u: &BinaryTree) -> TreeElement<BinaryTree> {
        if t.is_leaf() {
            return TreeElement::basis(u.clone());
        }
        if u.is_leaf() {
            return TreeElement::basis(t.clone());
        }
        self.prec_basis(t, u).add(&self.succ_basis(t, u))
    }
}

impl PlanarTrees {
    pub fn new(alphabet: Alphabet) -> Self {
        PlanarTrees { alphabet }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn prec_basis(&self, t: &PlanarTree, u: &PlanarTree) -> TreeElement<PlanarTree> {
        let (cs, xs) = ungraft(t).expect("non-leaf");
        let last = cs.len() - 1;
        self.star_ext(&cs[last], u).map_basis(|s| {
            let mut children = cs.to_vec();
            children[last] = s.clone();
            node(children, xs.to_vec())
        })
    }

    fn succ_basis(&self, t: &PlanarTree, u: &PlanarTree) -> TreeElement<PlanarTree> {
        let (ds, ys) = ungraft(u).expect("non-leaf");
        self.star_ext(t, &ds[0]).map_basis(|s| {
            let mut children = ds.to_vec();
            children[0] = s.clone();
            node(children, ys.to_vec())
        })
    }

    fn dot_basis(&self, t: &PlanarTree, u: &PlanarTree) -> TreeElement<PlanarTree> {
        let (cs, xs) = ungraft(t).expect("non-leaf");
        let (ds, ys) = ungraft(u).expect("non-leaf");
        self.star_ext(&cs[cs.len() - 1], &ds[0]).map_basis(|s| {
            let mut children = cs[..cs.len() - 1].to_vec();
            children.push(s.clone());
            children.extend_from_slice(&ds[1..]);
            let mut decorations = xs.to_vec();
            decorations.extend_from_slice(ys);
            node(children, decorations)
        })
    }

    /// `⋆ = ≺ + ≻ + ·` extended by `| ⋆ T = T ⋆ | = T` and `| ⋆ | = |`.
    pub fn star_ext(&self, t: &PlanarTree, u: &PlanarTree) -> TreeElement<PlanarTree> {
        if t.is_leaf() {
            return TreeElement::basis(u.clone());
        }
        if u.is_leaf() {
            return TreeElement::basis(t.clone());
        }
        let mut out = self.prec_basis(t, u);
        out.add_scaled(&Scalar::one(), &self.succ_basis(t, u));
        out.add_scaled(&Scalar::one(), &self.dot_basis(t, u));
        out
    }
}

fn node(children: Vec<PlanarTree>, decorations: Vec<Generator>) -> PlanarTree {
    PlanarTree::Node(Arc::new(PlanarNode { children, decorations }))
}

fn bilinear<T: Ord + Clone>(
    a: &TreeElement<T>,
    b: &TreeElement<T>,
    is_leaf: impl Fn(&T) -> bool,
    op: impl Fn(&T, &T) -> TreeElement<T>,
) -> Result<TreeElement<T>> {
    if a.keys().chain(b.keys()).any(&is_leaf) {
        return Err(Error::LeafInput);
    }
    let mut out = TreeElement::zero();
    for (t, ct) in a {
        for (u, cu) in b {
            out.add_scaled(&(ct * cu), &op(t, u));
        }
    }
    Ok(out)
}

macro_rules! tree_space {
    ($alg:ident, $tree:ident) => {
        impl LinearSpace for $alg {
            type Elem = TreeElement<$tree>;

            fn zero(&self) -> Self::Elem {
                TreeElement::zero()
            }

            fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
                a.add(b)
            }

            fn scale(&self, c: &Scalar, a: &Self::Elem) -> Self::Elem {
                a.scale(c)
            }

            fn is_zero(&self, a: &Self::Elem) -> bool {
                a.is_zero()
            }

            fn render(&self, a: &Self::Elem) -> String {
                DisplayWith(|f: &mut fmt::Formatter<'_>| {
                    write_sum(f, a.iter(), |f, t| write!(f, "{}", t.display(&self.alphabet)))
                })
                .to_string()
            }
        }
    };
}

tree_space!(BinaryTrees, BinaryTree);
tree_space!(PlanarTrees, PlanarTree);

impl DendriformStructure for BinaryTrees {
    fn flavor(&self) -> Flavor {
        Flavor::Dialgebra
    }

    fn prec(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        bilinear(a, b, BinaryTree::is_leaf, |t, u| self.prec_basis(t, u))
    }

    fn succ(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        bilinear(a, b, BinaryTree::is_leaf, |t, u| self.succ_basis(t, u))
    }

    fn dot(&self, _: &Self::Elem, _: &Self::Elem) -> Result<Self::Elem> {
        Err(Error::DotUnavailable)
    }
}

impl DendriformStructure for PlanarTrees {
    fn flavor(&self) -> Flavor {
        Flavor::Trialgebra
    }

    fn prec(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        bilinear(a, b, PlanarTree::is_leaf, |t, u| self.prec_basis(t, u))
    }

    fn succ(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        bilinear(a, b, PlanarTree::is_leaf, |t, u| self.succ_basis(t, u))
    }

    fn dot(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        bilinear(a, b, PlanarTree::is_leaf, |t, u| self.dot_basis(t, u))
    }
}

/// All decorated planar binary trees with `n` internal vertices, in
/// canonical order.
pub fn enumerate_binary(n: usize, alphabet: &Alphabet, cap: usize) -> Result<Vec<BinaryTree>> {
    let mut memo: HashMap<usize, Arc<Vec<BinaryTree>>> = HashMap::new();
    let mut out = binary_rec(n, alphabet, cap, &mut memo)?.as_ref().clone();
    out.sort();
    Ok(out)
}

fn binary_rec(
    n: usize,
    alphabet: &Alphabet,
    cap: usize,
    memo: &mut HashMap<usize, Arc<Vec<BinaryTree>>>,
) -> Result<Arc<Vec<BinaryTree>>> {
    if let Some(v) = memo.get(&n) {
        return Ok(v.clone());
    }
    let mut out = Vec::new();
    if n == 0 {
        out.push(BinaryTree::Leaf);
    } else {
        for k in 0..n {
            let left = binary_rec(k, alphabet, cap, memo)?;
            let right = binary_rec(n - 1 - k, alphabet, cap, memo)?;
            for l in left.iter() {
                for x in alphabet.generators() {
                    for r in right.iter() {
                        out.push(graft_binary(l.clone(), x, r.clone()));
                        check_cap(out.len(), cap)?;
                    }
                }
            }
        }
    }
    let out = Arc::new(out);
    memo.insert(n, out.clone());
    Ok(out)
}

/// All valently decorated planar trees with `n + 1` leaves, in canonical
/// order.
pub fn enumerate_planar(n: usize, alphabet: &Alphabet, cap: usize) -> Result<Vec<PlanarTree>> {
    let mut memo: HashMap<usize, Arc<Vec<PlanarTree>>> = HashMap::new();
    let mut out = planar_rec(n + 1, alphabet, cap, &mut memo)?.as_ref().clone();
    out.sort();
    Ok(out)
}

fn planar_rec(
    leaves: usize,
    alphabet: &Alphabet,
    cap: usize,
    memo: &mut HashMap<usize, Arc<Vec<PlanarTree>>>,
) -> Result<Arc<Vec<PlanarTree>>> {
    if let Some(v) = memo.get(&leaves) {
        return Ok(v.clone());
    }
    let mut out = Vec::new();
    if leaves == 1 {
        out.push(PlanarTree::Leaf);
    } else {
        // every composition of the leaves into at least two children
        let mut parts = Vec::new();
        compositions(leaves, &mut parts, &mut |parts| {
            if parts.len() < 2 {
                return Ok(());
            }
            let mut child_sets = Vec::with_capacity(parts.len());
            for &p in parts {
                child_sets.push(planar_rec(p, alphabet, cap, memo)?);
            }
            let mut children = Vec::with_capacity(parts.len());
            let mut decorations = Vec::with_capacity(parts.len() - 1);
            assemble(&child_sets, alphabet, &mut children, &mut decorations, &mut |c, d| {
                out.push(node(c.to_vec(), d.to_vec()));
                check_cap(out.len(), cap)
            })
        })?;
    }
    let out = Arc::new(out);
    memo.insert(leaves, out.clone());
    Ok(out)
}

fn compositions(
    n: usize,
    parts: &mut Vec<usize>,
    f: &mut dyn FnMut(&[usize]) -> Result<()>,
) -> Result<()> {
    if n == 0 {
        return f(parts);
    }
    for first in 1..=n {
        parts.push(first);
        compositions(n - first, parts, f)?;
        parts.pop();
    }
    Ok(())
}

type Visit<'a> = dyn FnMut(&[PlanarTree], &[Generator]) -> Result<()> + 'a;

fn assemble(
    child_sets: &[Arc<Vec<PlanarTree>>],
    alphabet: &Alphabet,
    children: &mut Vec<PlanarTree>,
    decorations: &mut Vec<Generator>,
    f: &mut Visit<'_>,
) -> Result<()> {
    let i = children.len();
    if i == child_sets.len() {
        return f(children, decorations);
    }
    for t in child_sets[i].iter() {
        children.push(t.clone());
        if i == 0 {
            assemble(child_sets, alphabet, children, decorations, f)?;
        } else {
            for x in alphabet.generators() {
                decorations.push(x);
                assemble(child_sets, alphabet, children, decorations, f)?;
                decorations.pop();
            }
        }
        children.pop();
    }
    Ok(())
}

fn check_cap(count: usize, cap: usize) -> Result<()> {
    if count > cap {
        Err(Error::ResourceLimit {
            what: "tree enumeration".into(),
            cap,
        })
    } else {
        Ok(())
    }
}

/// Diwords (binary family) or triwords (planar family) with exactly `n`
/// generator occurrences, found by filtering all words of that size.
pub fn filter_words(family: TreeFamily, n: usize, alphabet: &Alphabet, cap: usize) -> Result<Vec<RBWord>> {
    if n == 0 {
        return Ok(Vec::new());
    }
    let (base, keep): (BaseKind, fn(&RBWord) -> bool) = match family {
        TreeFamily::Binary => (BaseKind::ZeroProduct, is_diword),
        TreeFamily::Planar => (BaseKind::FreeMonoid, is_triword),
    };
    // a word with n generators never nests deeper than n
    let words = crate::rbword::enumerate_words(alphabet, n, n, base, cap)?;
    Ok(words
        .into_iter()
        .filter(|w| w.generator_count() as usize == n && keep(w))
        .collect())
}

/// Images of all trees with `n` decorations under `φ` or `ψ`, sorted.
pub fn tree_images(family: TreeFamily, n: usize, alphabet: &Alphabet, cap: usize) -> Result<Vec<RBWord>> {
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut out = match family {
        TreeFamily::Binary => enumerate_binary(n, alphabet, cap)?
            .iter()
            .map(phi)
            .collect::<Result<Vec<_>>>()?,
        TreeFamily::Planar => enumerate_planar(n, alphabet, cap)?
            .iter()
            .map(psi)
            .collect::<Result<Vec<_>>>()?,
    };
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rbword::parse_word;

    fn xyz() -> Alphabet {
        Alphabet::new(["x", "y", "z"]).unwrap()
    }

    fn single(a: &Alphabet, name: &str) -> BinaryTree {
        let g = a.lookup(name).unwrap();
        graft_binary(BinaryTree::Leaf, g, BinaryTree::Leaf)
    }

    #[test]
    fn binary_grammar_round_trip() {
        let a = xyz();
        let t = parse_binary_tree("((|^x|) ^z (|^y|))", &a).unwrap();
        assert_eq!(t.render(&a), "((|^x|)^z(|^y|))");
        assert_eq!(t.leaves(), 4);
        assert_eq!(parse_binary_tree(&t.render(&a), &a).unwrap(), t);
        assert!(parse_binary_tree("(|^q|)", &a).is_err());
        assert!(parse_binary_tree("(|x|)", &a).is_err());
    }

    #[test]
    fn planar_grammar_round_trip() {
        let a = xyz();
        let t = parse_planar_tree("V(|,x,|,y,|)", &a).unwrap();
        assert_eq!(t.render(&a), "V(|,x,|,y,|)");
        assert_eq!(t.leaves(), 3);
        assert!(matches!(parse_planar_tree("V(|)", &a), Err(Error::Arity { .. })));
    }

    #[test]
    fn grafting() {
        let a = xyz();
        let x = single(&a, "x");
        let y = single(&a, "y");
        let t = graft_binary(x.clone(), a.lookup("z").unwrap(), y.clone());
        assert_eq!(t.leaves(), x.leaves() + y.leaves());
        let p = graft_planar(
            vec![PlanarTree::Leaf, PlanarTree::Leaf, PlanarTree::Leaf],
            vec![Generator(0), Generator(1)],
        )
        .unwrap();
        let (c, d) = ungraft(&p).unwrap();
        assert_eq!((c.len(), d), (3, &[Generator(0), Generator(1)][..]));
        assert_eq!(x.to_planar(), parse_planar_tree("V(|,x,|)", &a).unwrap());
    }

    #[test]
    fn binary_operations_on_single_vertices() {
        let a = xyz();
        let alg = BinaryTrees::new(a.clone());
        let x = TreeElement::basis(single(&a, "x"));
        let y = TreeElement::basis(single(&a, "y"));
        assert_eq!(alg.render(&alg.prec(&x, &y).unwrap()), "(|^x(|^y|))");
        assert_eq!(alg.render(&alg.succ(&x, &y).unwrap()), "((|^x|)^y|)");
        assert_eq!(alg.dot(&x, &y), Err(Error::DotUnavailable));
        let leaf = TreeElement::basis(BinaryTree::Leaf);
        assert_eq!(alg.prec(&leaf, &x), Err(Error::LeafInput));
    }

    #[test]
    fn planar_dot_merges_vertices() {
        let a = xyz();
        let alg = PlanarTrees::new(a.clone());
        let x = TreeElement::basis(single(&a, "x").to_planar());
        let y = TreeElement::basis(single(&a, "y").to_planar());
        assert_eq!(alg.render(&alg.dot(&x, &y).unwrap()), "V(|,x,|,y,|)");
    }

    #[test]
    fn star_unit() {
        let a = xyz();
        let alg = PlanarTrees::new(a.clone());
        let t = single(&a, "x").to_planar();
        assert_eq!(alg.star_ext(&PlanarTree::Leaf, &t), TreeElement::basis(t.clone()));
        assert_eq!(alg.star_ext(&t, &PlanarTree::Leaf), TreeElement::basis(t.clone()));
        let b = BinaryTrees::new(a.clone());
        let u = single(&a, "y");
        assert_eq!(b.star_ext(&BinaryTree::Leaf, &u), TreeElement::basis(u.clone()));
    }

    #[test]
    fn phi_examples() {
        let a = xyz();
        assert_eq!(phi(&single(&a, "x")).unwrap().render(&a), "x");
        let t = parse_binary_tree("((|^x|)^z(|^y|))", &a).unwrap();
        assert_eq!(phi(&t).unwrap().render(&a), "[x] z [y]");
        let comb = parse_binary_tree("(|^x(|^y|))", &a).unwrap();
        assert_eq!(phi(&comb).unwrap().render(&a), "x [y]");
        assert_eq!(phi(&BinaryTree::Leaf), Err(Error::LeafInput));
    }

    #[test]
    fn psi_examples() {
        let a = xyz();
        let t = parse_planar_tree("V(|,x,|,y,|)", &a).unwrap();
        assert_eq!(psi(&t).unwrap().render(&a), "x.y");
        let t = parse_planar_tree("V(V(|,x,|),z,V(|,y,|))", &a).unwrap();
        assert_eq!(psi(&t).unwrap().render(&a), "[x] z [y]");
        let t = parse_planar_tree("V(V(|,x,|),x,|,y,|,z,V(|,y,|))", &a).unwrap();
        assert_eq!(psi(&t).unwrap().render(&a), "[x] x.y.z [y]");
        assert_eq!(psi(&PlanarTree::Leaf), Err(Error::LeafInput));
    }

    #[test]
    fn word_predicates() {
        let a = Alphabet::new(["x0", "x1", "x2", "x3", "x4"]).unwrap();
        let z = |s| parse_word(s, BaseKind::ZeroProduct, &a).unwrap();
        let m = |s| parse_word(s, BaseKind::FreeMonoid, &a).unwrap();
        assert!(is_diword(&z("x0 [x1 [x2]]")));
        assert!(is_diword(&z("[x0] x1 [x2]")));
        assert!(!is_diword(&z("x1 [x2] x3")));
        assert!(!is_diword(&z("[[x1]]")));
        assert!(!is_diword(&z("[[x1] x2 [x3]]")));
        assert!(!is_diword(&m("x0.x1")));
        assert!(is_triword(&m("[x0] x1 [x2] x3 [x4]")));
        assert!(is_triword(&m("x0.x1")));
        assert!(!is_triword(&m("[[x1]]")));
        assert!(!is_triword(&m("[x1 [x2] x3]")));
        assert!(is_triword(&m("x1 [x2] x3")));
    }

    #[test]
    fn small_tree_counts() {
        let a = Alphabet::new(["x"]).unwrap();
        let counts: Vec<usize> = (0..=4).map(|n| enumerate_binary(n, &a, 1000).unwrap().len()).collect();
        assert_eq!(counts, [1, 1, 2, 5, 14]);
        let counts: Vec<usize> = (0..=4).map(|n| enumerate_planar(n, &a, 1000).unwrap().len()).collect();
        assert_eq!(counts, [1, 1, 3, 11, 45]);
        let ab = Alphabet::new(["x", "y"]).unwrap();
        assert_eq!(enumerate_planar(2, &ab, 1000).unwrap().len(), 12);
        assert!(enumerate_binary(4, &ab, 10).is_err());
    }

    #[test]
    fn canonical_tree_order() {
        let a = Alphabet::new(["x"]).unwrap();
        let ts = enumerate_planar(3, &a, 1000).unwrap();
        assert!(ts.windows(2).all(|w| w[0] < w[1]));
    }
}
