//! Enveloping Rota-Baxter algebras of dendriform algebras.
//!
//! The enveloping algebra of `D` is a quotient of a free Rota-Baxter
//! algebra by the ideal generated by `x ≺ y − x⌊y⌋` and `x ≻ y − ⌊x⌋y`
//! (with an extra `−λ x.y` in the dialgebra case). The quotient itself is
//! not computed; instead every dendriform morphism `f: D → A` into the
//! induced structure of a Rota-Baxter algebra is extended to the free
//! algebra and checked to kill each generator, which is what makes it factor
//! through the quotient.

pub mod oracle;

use std::fmt;

use crate::algebra::{LinearSpace, RotaBaxterAlgebra};
use crate::base_algebra::{parse_generator_sum, parse_rational, BaseAlgebra, GenSum, MultTable};
use crate::dendriform::{check_axioms, DendriformStructure, Flavor, InducedDialgebra, InducedTrialgebra};
use crate::error::{Error, Result};
use crate::free_rba::{Context, Element, Morphism};
use crate::lexer::{Cursor, Tok};
use crate::lincomb::LinComb;
use crate::rbword::{Alphabet, Generator, Letter, RBWord};
use crate::scalar::Scalar;

pub use oracle::{check_rb_oracle, OracleElement, OracleKind, OracleReport, RbOracle};

/// Basis-size cap for the exhaustive axiom check.
pub const MAX_BASIS: usize = 12;

/// A finite-dimensional dendriform di- or trialgebra given by structure
/// constants.
#[derive(Clone, Debug, PartialEq)]
pub struct FiniteDendriform {
    basis: Alphabet,
    flavor: Flavor,
    prec: MultTable,
    succ: MultTable,
    /// All zero for dialgebras.
    dot: MultTable,
}

/// A parsed structure-constant file: the algebra and, when present, the
/// images of its basis in some Rota-Baxter algebra.
#[derive(Clone, Debug)]
pub struct DendriformFile {
    pub algebra: FiniteDendriform,
    pub images: Option<Vec<Vec<Scalar>>>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Operation {
    Prec,
    Succ,
    Dot,
}

impl Operation {
    fn parse(name: &str) -> Option<Self> {
        match name {
            "prec" => Some(Operation::Prec),
            "succ" => Some(Operation::Succ),
            "dot" => Some(Operation::Dot),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Operation::Prec => "prec",
            Operation::Succ => "succ",
            Operation::Dot => "dot",
        }
    }
}

impl FiniteDendriform {
    /// All operations zero.
    pub fn new(basis: Alphabet, flavor: Flavor) -> Self {
        let n = basis.len();
        FiniteDendriform {
            basis,
            flavor,
            prec: MultTable::new(n),
            succ: MultTable::new(n),
            dot: MultTable::new(n),
        }
    }

    pub fn basis(&self) -> &Alphabet {
        &self.basis
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn table(&self, op: Operation) -> &MultTable {
        match op {
            Operation::Prec => &self.prec,
            Operation::Succ => &self.succ,
            Operation::Dot => &self.dot,
        }
    }

    pub fn set(&mut self, op: Operation, x: Generator, y: Generator, value: LinComb<Generator>) -> Result<()> {
        let table = match op {
            Operation::Prec => &mut self.prec,
            Operation::Succ => &mut self.succ,
            Operation::Dot if self.flavor == Flavor::Dialgebra => return Err(Error::DotUnavailable),
            Operation::Dot => &mut self.dot,
        };
        table.set(x, y, value);
        Ok(())
    }

    /// Parses
    ///
    /// ```text
    /// kind trialgebra            # or dialgebra
    /// basis e0 e1 e2
    /// e0 prec e1 -> e1 - 1/2*e2  # prec, succ, dot; missing entries are 0
    /// image e0 -> 1, 0, 0        # optional coordinates of f(e0)
    /// ```
    pub fn parse(text: &str) -> Result<DendriformFile> {
        let mut flavor = None;
        let mut basis: Option<Alphabet> = None;
        let mut algebra: Option<FiniteDendriform> = None;
        let mut images: Vec<Option<Vec<Scalar>>> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let at_line = |e: Error| match e {
                Error::Syntax { pos, msg } => Error::Syntax {
                    pos,
                    msg: format!("line {}: {msg}", lineno + 1),
                },
                Error::Invalid(msg) => Error::Invalid(format!("line {}: {msg}", lineno + 1)),
                other => other,
            };
            let mut words = line.split_whitespace();
            match words.next() {
                Some("kind") => {
                    let f = match words.next() {
                        Some("trialgebra") => Flavor::Trialgebra,
                        Some("dialgebra") => Flavor::Dialgebra,
                        _ => return Err(at_line(Error::Invalid("expected `kind trialgebra|dialgebra`".into()))),
                    };
                    if flavor.replace(f).is_some() || words.next().is_some() {
                        return Err(at_line(Error::Invalid("malformed or repeated `kind` line".into())));
                    }
                }
                Some("basis") => {
                    if basis.is_some() {
                        return Err(at_line(Error::Invalid("repeated `basis` line".into())));
                    }
                    basis = Some(Alphabet::new(words).map_err(at_line)?);
                }
                Some(_) => {
                    let (Some(f), Some(b)) = (flavor, basis.as_ref()) else {
                        return Err(at_line(Error::Invalid(
                            "`kind` and `basis` must precede structure constants".into(),
                        )));
                    };
                    let alg = algebra.get_or_insert_with(|| {
                        images = vec![None; b.len()];
                        FiniteDendriform::new(b.clone(), f)
                    });
                    parse_entry(line, alg, &mut images).map_err(at_line)?;
                }
                None => {}
            }
        }
        let (Some(flavor), Some(basis)) = (flavor, basis) else {
            return Err(Error::Invalid("missing `kind` or `basis` line".into()));
        };
        let algebra = algebra.unwrap_or_else(|| {
            images = vec![None; basis.len()];
            FiniteDendriform::new(basis, flavor)
        });
        let images = if images.iter().all(Option::is_none) {
            None
        } else {
            let mut out = Vec::with_capacity(images.len());
            for (i, img) in images.into_iter().enumerate() {
                out.push(img.ok_or_else(|| {
                    Error::Invalid(format!("no image given for `{}`", algebra.basis.name(Generator(i as u32))))
                })?);
            }
            Some(out)
        };
        Ok(DendriformFile { algebra, images })
    }

    pub fn to_text(&self, images: Option<&[Vec<Scalar>]>) -> String {
        let mut out = String::new();
        out.push_str(match self.flavor {
            Flavor::Trialgebra => "kind trialgebra\n",
            Flavor::Dialgebra => "kind dialgebra\n",
        });
        out.push_str(&format!("basis {}\n", self.basis.names().join(" ")));
        let ops: &[Operation] = match self.flavor {
            Flavor::Trialgebra => &[Operation::Prec, Operation::Succ, Operation::Dot],
            Flavor::Dialgebra => &[Operation::Prec, Operation::Succ],
        };
        for &op in ops {
            for x in self.basis.generators() {
                for y in self.basis.generators() {
                    let v = self.table(op).get(x, y);
                    if !v.is_zero() {
                        out.push_str(&format!(
                            "{} {} {} -> {}\n",
                            self.basis.name(x),
                            op.name(),
                            self.basis.name(y),
                            GenSum(v, &self.basis)
                        ));
                    }
                }
            }
        }
        if let Some(images) = images {
            for (x, img) in self.basis.generators().zip(images) {
                let coords: Vec<String> = img.iter().map(|c| c.to_string()).collect();
                out.push_str(&format!("image {} -> {}\n", self.basis.name(x), coords.join(", ")));
            }
        }
        out
    }

    /// The structure induced on a finite-dimensional oracle, with the
    /// coordinate vectors as basis `e0, e1, …`, together with the images of
    /// that basis (the identity map).
    pub fn from_induced(o: &RbOracle, flavor: Flavor) -> Result<(FiniteDendriform, Vec<OracleElement>)> {
        let dim = o
            .dimension()
            .ok_or_else(|| Error::Invalid("the oracle must be finite-dimensional".into()))?;
        let basis = Alphabet::new((0..dim).map(|i| format!("e{i}")))?;
        let units: Vec<OracleElement> = (0..dim).map(|i| o.unit(i)).collect::<Result<_>>()?;
        let mut d = FiniteDendriform::new(basis, flavor);
        let coords = |v: &OracleElement| -> LinComb<Generator> {
            v.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| (Generator(i as u32), c.clone()))
                .collect()
        };
        for (i, a) in units.iter().enumerate() {
            for (j, b) in units.iter().enumerate() {
                let (x, y) = (Generator(i as u32), Generator(j as u32));
                match flavor {
                    Flavor::Trialgebra => {
                        let ops = InducedTrialgebra(o);
                        d.set(Operation::Prec, x, y, coords(&ops.prec(a, b)?))?;
                        d.set(Operation::Succ, x, y, coords(&ops.succ(a, b)?))?;
                        d.set(Operation::Dot, x, y, coords(&ops.dot(a, b)?))?;
                    }
                    Flavor::Dialgebra => {
                        let ops = InducedDialgebra(o);
                        d.set(Operation::Prec, x, y, coords(&ops.prec(a, b)?))?;
                        d.set(Operation::Succ, x, y, coords(&ops.succ(a, b)?))?;
                    }
                }
            }
        }
        Ok((d, units))
    }

    /// Checks every axiom on every triple of basis elements.
    pub fn validate(&self) -> Result<usize> {
        let n = self.basis.len();
        if n > MAX_BASIS {
            return Err(Error::ResourceLimit {
                what: "dendriform basis size".into(),
                cap: MAX_BASIS,
            });
        }
        let gens: Vec<LinComb<Generator>> = self.basis.generators().map(LinComb::basis).collect();
        for x in &gens {
            for y in &gens {
                for z in &gens {
                    let report = check_axioms(self, x, y, z)?;
                    if let Some(bad) = report.first_failure() {
                        return Err(Error::AxiomViolation {
                            axiom: bad.name.to_string(),
                            x: self.render(x),
                            y: self.render(y),
                            z: self.render(z),
                        });
                    }
                }
            }
        }
        Ok(n * n * n)
    }

    /// The free Rota-Baxter algebra that the enveloping algebra is a
    /// quotient of: over `(D, ·)` for trialgebras, over the tensor algebra
    /// of `D` for dialgebras.
    pub fn free_context(&self, weight: Scalar) -> Result<Context> {
        let base = match self.flavor {
            Flavor::Trialgebra => BaseAlgebra::Table(self.dot.clone()),
            Flavor::Dialgebra => BaseAlgebra::FreeMonoid,
        };
        Context::new(self.basis.clone(), base, weight)
    }

    fn check_context(&self, ctx: &Context) -> Result<()> {
        let expected = self.free_context(ctx.weight().clone())?;
        if !expected.same_algebra(ctx) {
            return Err(Error::ContextMismatch(
                "context is not the free algebra of this dendriform algebra".into(),
            ));
        }
        Ok(())
    }

    fn embed(&self, ctx: &Context, v: &LinComb<Generator>) -> Element {
        let _ = ctx;
        v.map_basis(|g| RBWord::generator(*g))
    }
}

fn parse_entry(line: &str, alg: &mut FiniteDendriform, images: &mut [Option<Vec<Scalar>>]) -> Result<()> {
    let mut cur = Cursor::new(line)?;
    let mut names = alg.basis.clone();
    let (first, pos) = cur.expect_ident()?;
    if first == "image" {
        let (name, pos) = cur.expect_ident()?;
        let g = names.lookup(&name).ok_or(Error::UnknownGenerator { name, pos })?;
        cur.expect(&Tok::Arrow, "`->`")?;
        let mut coords = Vec::new();
        loop {
            let neg = cur.eat(&Tok::Minus);
            let c = parse_rational(&mut cur)?.ok_or_else(|| cur.error("expected a rational"))?;
            coords.push(if neg { -c } else { c });
            if !cur.eat(&Tok::Comma) && cur.at_end() {
                break;
            }
        }
        if images[g.index()].replace(coords).is_some() {
            return Err(Error::Invalid(format!("repeated image of `{}`", names.name(g))));
        }
        return Ok(());
    }
    let x = names
        .lookup(&first)
        .ok_or(Error::UnknownGenerator { name: first, pos })?;
    let (op_name, op_pos) = cur.expect_ident()?;
    let op = Operation::parse(&op_name).ok_or(Error::Syntax {
        pos: op_pos,
        msg: format!("unknown operation `{op_name}` (expected prec, succ or dot)"),
    })?;
    let (second, pos) = cur.expect_ident()?;
    let y = names
        .lookup(&second)
        .ok_or(Error::UnknownGenerator { name: second, pos })?;
    cur.expect(&Tok::Arrow, "`->`")?;
    let value = parse_generator_sum(&mut cur, &mut names, true)?;
    cur.expect_end()?;
    if !alg.table(op).get(x, y).is_zero() {
        return Err(Error::Invalid(format!(
            "duplicate entry for {} {} {}",
            alg.basis.name(x),
            op.name(),
            alg.basis.name(y)
        )));
    }
    alg.set(op, x, y, value)
}

impl LinearSpace for FiniteDendriform {
    type Elem = LinComb<Generator>;

    fn zero(&self) -> Self::Elem {
        LinComb::zero()
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
        GenSum(a, &self.basis).to_string()
    }
}

impl DendriformStructure for FiniteDendriform {
    fn flavor(&self) -> Flavor {
        self.flavor
    }

    fn prec(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.prec.mul(a, b))
    }

    fn succ(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.succ.mul(a, b))
    }

    fn dot(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        match self.flavor {
            Flavor::Trialgebra => Ok(self.dot.mul(a, b)),
            Flavor::Dialgebra => Err(Error::DotUnavailable),
        }
    }
}

/// `x ≺ y − x ⋄ ⌊y⌋` and `x ≻ y − ⌊x⌋ ⋄ y` in the free algebra over `(D, ·)`.
pub fn tri_ideal_generators(d: &FiniteDendriform, ctx: &Context, x: Generator, y: Generator) -> Result<[Element; 2]> {
    if d.flavor != Flavor::Trialgebra {
        return Err(Error::Invalid("trialgebra generators need a trialgebra".into()));
    }
    d.check_context(ctx)?;
    check_basis(d, x)?;
    check_basis(d, y)?;
    let (ex, ey) = (Element::basis(RBWord::generator(x)), Element::basis(RBWord::generator(y)));
    let g1 = d
        .embed(ctx, d.prec.get(x, y))
        .sub(&ctx.product(&ex, &ctx.rb_apply(&ey))?);
    let g2 = d
        .embed(ctx, d.succ.get(x, y))
        .sub(&ctx.product(&ctx.rb_apply(&ex), &ey)?);
    Ok([g1, g2])
}

/// `x ≺ y − x⌊y⌋ − λ x.y` and `x ≻ y − ⌊x⌋y` in the free algebra over the
/// tensor algebra of `D`, with `λ` the weight of `ctx`.
pub fn di_ideal_generators(d: &FiniteDendriform, ctx: &Context, x: Generator, y: Generator) -> Result<[Element; 2]> {
    if d.flavor != Flavor::Dialgebra {
        return Err(Error::Invalid("dialgebra generators need a dialgebra".into()));
    }
    d.check_context(ctx)?;
    check_basis(d, x)?;
    check_basis(d, y)?;
    let (ex, ey) = (Element::basis(RBWord::generator(x)), Element::basis(RBWord::generator(y)));
    let xy = Element::basis(RBWord::letter(Letter::new([x, y])?));
    let g1 = d
        .embed(ctx, d.prec.get(x, y))
        .sub(&ctx.product(&ex, &ctx.rb_apply(&ey))?)
        .sub(&xy.scale(ctx.weight()));
    let g2 = d
        .embed(ctx, d.succ.get(x, y))
        .sub(&ctx.product(&ctx.rb_apply(&ex), &ey)?);
    Ok([g1, g2])
}

pub fn ideal_generators(d: &FiniteDendriform, ctx: &Context, x: Generator, y: Generator) -> Result<[Element; 2]> {
    match d.flavor {
        Flavor::Trialgebra => tri_ideal_generators(d, ctx, x, y),
        Flavor::Dialgebra => di_ideal_generators(d, ctx, x, y),
    }
}

fn check_basis(d: &FiniteDendriform, g: Generator) -> Result<()> {
    if d.basis.contains(g) {
        Ok(())
    } else {
        Err(Error::ContextMismatch(format!("basis index {} out of range", g.0)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct EnvelopeEntry {
    pub pair: [String; 2],
    /// `prec` for the first generator of the pair, `succ` for the second.
    pub relation: &'static str,
    pub generator: String,
    pub residual: String,
    /// Nonzero coordinates of the residual.
    pub residual_terms: usize,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct EnvelopeReport {
    pub schema: u32,
    pub flavor: Flavor,
    pub oracle: String,
    pub weight: String,
    pub basis_size: usize,
    pub entries: Vec<EnvelopeEntry>,
    pub pass: bool,
}

impl fmt::Display for EnvelopeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "envelope {:?} into {} (weight {}), {} generators",
            self.flavor,
            self.oracle,
            self.weight,
            self.entries.len()
        )?;
        for e in &self.entries {
            writeln!(
                f,
                "{} ({}, {}) {}: {} -> {}",
                if e.pass { "ok  " } else { "FAIL" },
                e.pair[0],
                e.pair[1],
                e.relation,
                e.generator,
                e.residual
            )?;
        }
        write!(f, "{}", if self.pass { "all generators annihilated" } else { "some generator survives" })
    }
}

/// Checks that the extension of `f` (given by `images` of the basis of `d`)
/// to the free Rota-Baxter algebra kills the ideal generators of the first
/// `pairs` basis pairs (all pairs when `None`).
///
/// Before any generator is evaluated, `d` is validated exhaustively, the
/// weights are compared, and `f` is checked to be a dendriform morphism into
/// the induced structure of `o` on every basis pair.
pub fn verify_envelope(
    d: &FiniteDendriform,
    images: &[OracleElement],
    o: &RbOracle,
    weight: &Scalar,
    pairs: Option<usize>,
) -> Result<EnvelopeReport> {
    d.validate()?;
    if weight != o.weight() {
        return Err(Error::WeightMismatch {
            context: weight.to_string(),
            target: o.weight().to_string(),
        });
    }
    if images.len() != d.basis.len() {
        return Err(Error::ContextMismatch(format!(
            "{} images for a basis of {}",
            images.len(),
            d.basis.len()
        )));
    }
    check_dendriform_morphism(d, images, o)?;
    let ctx = d.free_context(weight.clone())?;
    let f = Morphism::new(&ctx, o, images.to_vec())?;
    let all: Vec<(Generator, Generator)> = d
        .basis
        .generators()
        .flat_map(|x| d.basis.generators().map(move |y| (x, y)))
        .collect();
    let take = pairs.unwrap_or(all.len()).min(all.len());
    let mut entries = Vec::with_capacity(2 * take);
    for &(x, y) in &all[..take] {
        let gens = ideal_generators(d, &ctx, x, y)?;
        for (relation, g) in ["prec", "succ"].into_iter().zip(gens) {
            let r = f.apply(&g)?;
            let residual_terms = r.coeffs().iter().filter(|c| !c.is_zero()).count();
            entries.push(EnvelopeEntry {
                pair: [d.basis.name(x).to_string(), d.basis.name(y).to_string()],
                relation,
                generator: ctx.render(&g),
                residual: o.render(&r),
                residual_terms,
                pass: residual_terms == 0,
            });
        }
    }
    let pass = entries.iter().all(|e| e.pass);
    Ok(EnvelopeReport {
        schema: 1,
        flavor: d.flavor,
        oracle: o.name(),
        weight: weight.to_string(),
        basis_size: d.basis.len(),
        entries,
        pass,
    })
}

/// `f(x ≺ y) = f(x) ≺ f(y)` and likewise for `≻` (and `·`) on all basis
/// pairs, against the induced operations on `o`.
pub fn check_dendriform_morphism(d: &FiniteDendriform, images: &[OracleElement], o: &RbOracle) -> Result<()> {
    let image = |v: &LinComb<Generator>| -> OracleElement {
        let mut out = o.zero();
        for (g, c) in v {
            out = o.add(&out, &o.scale(c, &images[g.index()]));
        }
        out
    };
    for x in d.basis.generators() {
        for y in d.basis.generators() {
            let (fx, fy) = (&images[x.index()], &images[y.index()]);
            let (ex, ey) = (LinComb::basis(x), LinComb::basis(y));
            let mut checks: Vec<(&str, OracleElement, OracleElement)> = Vec::new();
            match d.flavor {
                Flavor::Trialgebra => {
                    let t = InducedTrialgebra(o);
                    checks.push(("prec", image(&d.prec(&ex, &ey)?), t.prec(fx, fy)?));
                    checks.push(("succ", image(&d.succ(&ex, &ey)?), t.succ(fx, fy)?));
                    checks.push(("dot", image(&d.dot(&ex, &ey)?), t.dot(fx, fy)?));
                }
                Flavor::Dialgebra => {
                    let t = InducedDialgebra(o);
                    checks.push(("prec", image(&d.prec(&ex, &ey)?), t.prec(fx, fy)?));
                    checks.push(("succ", image(&d.succ(&ex, &ey)?), t.succ(fx, fy)?));
                }
            }
            if let Some((op, _, _)) = checks.iter().find(|(_, l, r)| l != r) {
                return Err(Error::NotDendriformMorphism {
                    op: op.to_string(),
                    x: d.basis.name(x).to_string(),
                    y: d.basis.name(y).to_string(),
                });
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq_tri(n: usize) -> (FiniteDendriform, Vec<OracleElement>, RbOracle) {
        let o = RbOracle::sequences(n, Scalar::one()).unwrap();
        let (d, f) = FiniteDendriform::from_induced(&o, Flavor::Trialgebra).unwrap();
        (d, f, o)
    }

    #[test]
    fn induced_sequences_trialgebra_is_annihilated() {
        let (d, f, o) = seq_tri(3);
        assert_eq!(d.validate().unwrap(), 27);
        let report = verify_envelope(&d, &f, &o, &Scalar::one(), None).unwrap();
        assert_eq!(report.entries.len(), 18);
        assert!(report.pass, "{report}");
    }

    #[test]
    fn induced_polynomial_dialgebra_is_annihilated() {
        let o = RbOracle::polynomials(Some(3));
        let (d, f) = FiniteDendriform::from_induced(&o, Flavor::Dialgebra).unwrap();
        let report = verify_envelope(&d, &f, &o, &Scalar::zero(), None).unwrap();
        assert_eq!(report.entries.len(), 32);
        assert!(report.pass, "{report}");
    }

    #[test]
    fn two_term_generator() {
        // e1 < e0 = e1 R(e0) = e1 (0, 1) = e1
        let (d, _, _) = seq_tri(2);
        let ctx = d.free_context(Scalar::one()).unwrap();
        let [g1, g2] = tri_ideal_generators(&d, &ctx, Generator(1), Generator(0)).unwrap();
        assert_eq!(ctx.render(&g1), "e1 - e1 [e0]");
        // e1 > e0 = R(e1) e0 = 0
        assert_eq!(ctx.render(&g2), "-[e1] e0");
        for w in g1.keys().filter(|w| w.breadth() > 1) {
            assert_eq!(w.stats().head, 0);
            assert_eq!(w.stats().tail, 1);
        }
    }

    #[test]
    fn vanishing_structure_constant() {
        // e0 < e0 = e0 R(e0) = (1, 0)(0, 1) = 0
        let (d, _, _) = seq_tri(2);
        let ctx = d.free_context(Scalar::one()).unwrap();
        let [g1, _] = tri_ideal_generators(&d, &ctx, Generator(0), Generator(0)).unwrap();
        assert_eq!(ctx.render(&g1), "-e0 [e0]");
    }

    #[test]
    fn dialgebra_generators_with_weight() {
        let text = "kind dialgebra\nbasis x y\nx prec y -> y\n";
        let file = FiniteDendriform::parse(text).unwrap();
        let d = file.algebra;
        let ctx = d.free_context(Scalar::one()).unwrap();
        let [g1, _] = di_ideal_generators(&d, &ctx, Generator(0), Generator(1)).unwrap();
        assert_eq!(ctx.render(&g1), "y - x.y - x [y]");
        let xy = g1.keys().find(|w| w.generator_count() == 2 && w.depth() == 0).unwrap();
        assert_eq!((xy.breadth(), xy.depth()), (1, 0));
    }

    #[test]
    fn weight_coherence() {
        let text = "x prec x -> x\ny succ x -> y\n";
        let tri = FiniteDendriform::parse(&format!("kind trialgebra\nbasis x y\n{text}")).unwrap().algebra;
        let di = FiniteDendriform::parse(&format!("kind dialgebra\nbasis x y\n{text}")).unwrap().algebra;
        let tctx = tri.free_context(Scalar::zero()).unwrap();
        let dctx = di.free_context(Scalar::zero()).unwrap();
        for x in tri.basis().generators() {
            for y in tri.basis().generators() {
                let a = tri_ideal_generators(&tri, &tctx, x, y).unwrap();
                let b = di_ideal_generators(&di, &dctx, x, y).unwrap();
                for (g, h) in a.iter().zip(&b) {
                    assert_eq!(tctx.render(g), dctx.render(h));
                }
            }
        }
    }

    #[test]
    fn perturbed_images_fail_validation() {
        let (d, mut f, o) = seq_tri(3);
        f[1] = o.scale(&Scalar::from_int(2), &f[1]);
        assert!(matches!(
            verify_envelope(&d, &f, &o, &Scalar::one(), None),
            Err(Error::NotDendriformMorphism { .. })
        ));
    }

    #[test]
    fn perturbed_structure_constant_fails_validation() {
        let (mut d, f, o) = seq_tri(3);
        let v = d.table(Operation::Prec).get(Generator(2), Generator(0)).add(&LinComb::basis(Generator(0)));
        d.set(Operation::Prec, Generator(2), Generator(0), v).unwrap();
        assert!(verify_envelope(&d, &f, &o, &Scalar::one(), None).is_err());
    }

    #[test]
    fn weight_mismatch() {
        let (d, f, o) = seq_tri(3);
        assert!(matches!(
            verify_envelope(&d, &f, &o, &Scalar::from_int(2), None),
            Err(Error::WeightMismatch { .. })
        ));
    }

    #[test]
    fn file_round_trip() {
        let (d, f, _) = seq_tri(3);
        let images: Vec<Vec<Scalar>> = f.iter().map(|e| e.coeffs().to_vec()).collect();
        let text = d.to_text(Some(&images));
        let parsed = FiniteDendriform::parse(&text).unwrap();
        assert_eq!(parsed.algebra, d);
        assert_eq!(parsed.images.unwrap(), images);
    }

    #[test]
    fn file_errors() {
        assert!(FiniteDendriform::parse("basis x\n").is_err());
        assert!(FiniteDendriform::parse("kind trialgebra\nx prec x -> x\n").is_err());
        assert!(matches!(
            FiniteDendriform::parse("kind trialgebra\nbasis x\nx over x -> x\n"),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            FiniteDendriform::parse("kind dialgebra\nbasis x\nx dot x -> x\n"),
            Err(Error::DotUnavailable)
        ));
        assert!(FiniteDendriform::parse("kind trialgebra\nbasis x y\nimage x -> 1\n").is_err());
    }

    #[test]
    fn corrupted_algebra_rejected() {
        let text = "kind dialgebra\nbasis x\nx prec x -> x\nx succ x -> x\n";
        let d = FiniteDendriform::parse(text).unwrap().algebra;
        assert!(matches!(d.validate(), Err(Error::AxiomViolation { .. })));
    }
}
