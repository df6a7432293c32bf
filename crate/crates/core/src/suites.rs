//! Seeded property suites, each returning a per-property pass/fail report.

use rand::Rng;

use crate::algebra::{associativity_residual, rota_baxter_residual, RotaBaxterAlgebra};
use crate::base_algebra::{BaseAlgebra, BaseKind};
use crate::dendriform::{
    check_dialgebra, check_trialgebra, to_dialgebra, DendriformStructure, InducedDialgebra, InducedTrialgebra,
};
use crate::enveloping::{check_rb_oracle, OracleElement, RbOracle};
use crate::error::Result;
use crate::free_rba::{Context, Element, Morphism};
use crate::lincomb::LinComb;
use crate::rbword::Alphabet;
use crate::sample::{WordSampler, WordShape};
use crate::scalar::Scalar;
use crate::trees::{
    enumerate_binary, enumerate_planar, filter_words, is_diword, is_triword, phi_element, psi_element,
    tree_images, BinaryTrees, PlanarTrees, TreeFamily,
};

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct PropertyResult {
    pub property: String,
    pub trials: usize,
    pub pass: bool,
    /// Rendering of the first failing input.
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub results: Vec<PropertyResult>,
}

impl SuiteReport {
    fn new(suite: &'static str) -> Self {
        SuiteReport { suite, results: Vec::new() }
    }

    pub fn pass(&self) -> bool {
        self.results.iter().all(|r| r.pass)
    }

    fn record(&mut self, property: impl Into<String>, trials: usize, counterexample: Option<String>) {
        self.results.push(PropertyResult {
            property: property.into(),
            trials,
            pass: counterexample.is_none(),
            counterexample,
        });
    }
}

/// Runs `trial` until the first failure, which is recorded.
fn run(
    report: &mut SuiteReport,
    property: impl Into<String>,
    trials: usize,
    mut trial: impl FnMut() -> Result<Option<String>>,
) -> Result<()> {
    let mut failure = None;
    for _ in 0..trials {
        if let Some(c) = trial()? {
            failure = Some(c);
            break;
        }
    }
    report.record(property, trials, failure);
    Ok(())
}

fn sampler(ctx: &Context) -> WordSampler<'_> {
    WordSampler::new(ctx.alphabet(), ctx.base().kind(), WordShape::default())
}

/// Associativity, the Rota-Baxter identity and the eleven-term matching in
/// the free algebra of `ctx`.
pub fn words_suite(ctx: &Context, trials: usize, rng: &mut impl Rng) -> Result<SuiteReport> {
    let s = sampler(ctx);
    let mut report = SuiteReport::new("words");
    let show = |ws: &[&Element]| ws.iter().map(|w| ctx.render(w)).collect::<Vec<_>>().join(" ; ");
    run(&mut report, "associativity", trials, || {
        let (a, b, c) = (word(&s, rng), word(&s, rng), word(&s, rng));
        let r = associativity_residual(ctx, &a, &b, &c)?;
        Ok((!r.is_zero()).then(|| show(&[&a, &b, &c])))
    })?;
    run(&mut report, "rota-baxter identity", trials, || {
        let (a, b) = (word(&s, rng), word(&s, rng));
        let r = rota_baxter_residual(ctx, &a, &b)?;
        Ok((!r.is_zero()).then(|| show(&[&a, &b])))
    })?;
    run(&mut report, "eleven-term matching", trials, || {
        let (u, v, w) = (s.word(rng), s.word(rng), s.word(rng));
        let t = ctx.eleven_terms(&u, &v, &w)?;
        let ok = t.matching_holds() && t.multisets_agree() && t.left_sum() == t.right_sum();
        Ok((!ok).then(|| format!("{} ; {} ; {}", u.render(ctx.alphabet()), v.render(ctx.alphabet()), w.render(ctx.alphabet()))))
    })?;
    Ok(report)
}

fn word(s: &WordSampler, rng: &mut impl Rng) -> Element {
    Element::basis(s.word(rng))
}

/// The trialgebra axioms for `(≺, ≻, ·)`, the dialgebra axioms for
/// `(≺', ≻)` and, at weight zero, for `(≺, ≻)`, and the agreement of the
/// dialgebra built from the trialgebra with `(≺', ≻)`.
fn induced_properties<A: RotaBaxterAlgebra>(
    report: &mut SuiteReport,
    label: &str,
    alg: &A,
    zero_weight: &A,
    trials: usize,
    mut sample: impl FnMut() -> A::Elem,
) -> Result<()> {
    let tri = InducedTrialgebra(alg);
    let di = InducedDialgebra(alg);
    let di0 = InducedDialgebra(zero_weight);
    let show = |xs: &[&A::Elem]| xs.iter().map(|x| alg.render(x)).collect::<Vec<_>>().join(" ; ");
    run(report, format!("{label}: trialgebra axioms"), trials, || {
        let (x, y, z) = (sample(), sample(), sample());
        let r = check_trialgebra(&tri, &x, &y, &z)?;
        Ok(r.first_failure().map(|f| format!("{}: {}", f.name, show(&[&x, &y, &z]))))
    })?;
    run(report, format!("{label}: dialgebra axioms (prec', succ)"), trials, || {
        let (x, y, z) = (sample(), sample(), sample());
        let r = check_dialgebra(&di, &x, &y, &z)?;
        Ok(r.first_failure().map(|f| format!("{}: {}", f.name, show(&[&x, &y, &z]))))
    })?;
    run(report, format!("{label}: dialgebra axioms at weight 0"), trials, || {
        let (x, y, z) = (sample(), sample(), sample());
        let r = check_dialgebra(&di0, &x, &y, &z)?;
        Ok(r.first_failure().map(|f| format!("{}: {}", f.name, show(&[&x, &y, &z]))))
    })?;
    let seeds: Vec<A::Elem> = (0..3).map(|_| sample()).collect();
    let conv = to_dialgebra(InducedTrialgebra(alg), &seeds)?;
    run(report, format!("{label}: trialgebra to dialgebra"), trials, || {
        let (x, y) = (sample(), sample());
        let same = conv.prec(&x, &y)? == di.prec(&x, &y)?
            && conv.succ(&x, &y)? == di.succ(&x, &y)?
            && conv.star(&x, &y)? == tri.star(&x, &y)?;
        Ok((!same).then(|| show(&[&x, &y])))
    })?;
    Ok(())
}

/// Induced dendriform structures on the free algebra of `ctx` and on both
/// oracles (the sequence oracle at the weight of `ctx`).
pub fn dendriform_suite(ctx: &Context, trials: usize, rng: &mut impl Rng) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("dendriform");
    let s = sampler(ctx);
    let ctx0 = ctx.with_weight(Scalar::zero());
    induced_properties(&mut report, "free", ctx, &ctx0, trials, || word(&s, rng))?;
    let seq = RbOracle::sequences(6, ctx.weight().clone())?;
    let seq0 = RbOracle::sequences(6, Scalar::zero())?;
    induced_properties(&mut report, &seq.name(), &seq, &seq0, trials, || seq.random_element(rng))?;
    let poly = RbOracle::polynomials(None);
    induced_properties(&mut report, &poly.name(), &poly, &poly, trials, || poly.random_element(rng))?;
    Ok(report)
}

/// Soundness of both oracles, and the morphism property of the extension
/// of random generator images from the tensor-algebra base into each.
pub fn oracle_suite(alphabet: &Alphabet, weight: &Scalar, trials: usize, rng: &mut impl Rng) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("oracle");
    let oracles = [RbOracle::sequences(6, weight.clone())?, RbOracle::polynomials(None)];
    for o in &oracles {
        let failure = match check_rb_oracle(o, trials, rng) {
            Ok(_) => None,
            Err(e) => Some(e.to_string()),
        };
        report.record(format!("{}: rota-baxter identity", o.name()), trials, failure);
    }
    for o in &oracles {
        morphism_property(&mut report, alphabet, o, trials, rng)?;
    }
    Ok(report)
}

fn morphism_property(
    report: &mut SuiteReport,
    alphabet: &Alphabet,
    o: &RbOracle,
    trials: usize,
    rng: &mut impl Rng,
) -> Result<()> {
    let ctx = Context::new(alphabet.clone(), BaseAlgebra::FreeMonoid, o.weight().clone())?;
    let images: Vec<OracleElement> = alphabet.generators().map(|_| o.random_element(rng)).collect();
    let f = Morphism::new(&ctx, o, images)?;
    let shape = WordShape {
        max_depth: 2,
        max_breadth: 3,
        max_letter_len: 2,
    };
    let s = WordSampler::new(alphabet, BaseKind::FreeMonoid, shape);
    run(report, format!("{}: extension is a morphism", o.name()), trials, || {
        let (a, b) = (s.element(rng, 2), s.element(rng, 2));
        let product = f.apply(&ctx.product(&a, &b)?)? == o.mul(&f.apply(&a)?, &f.apply(&b)?)?;
        let bracket = f.apply(&ctx.rb_apply(&a))? == o.rota_baxter(&f.apply(&a)?);
        Ok((!(product && bracket)).then(|| format!("{} ; {}", ctx.render(&a), ctx.render(&b))))
    })
}

/// Homomorphism identities for `φ` and `ψ` on all tree pairs with at most
/// `max_leaves` leaves, and injectivity and the image characterization for
/// trees with `1..=max_n` decorations.
pub fn trees_suite(alphabet: &Alphabet, max_leaves: usize, max_n: usize, cap: usize) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("trees");
    let zero = Context::new(alphabet.clone(), BaseAlgebra::ZeroProduct, Scalar::zero())?;
    let tensor = Context::new(alphabet.clone(), BaseAlgebra::FreeMonoid, Scalar::one())?;

    let binary: Vec<_> = (1..max_leaves.max(1))
        .map(|n| enumerate_binary(n, alphabet, cap))
        .collect::<Result<Vec<_>>>()?
        .concat();
    let bt = BinaryTrees::new(alphabet.clone());
    let di = InducedDialgebra(&zero);
    let mut failure = None;
    'outer: for t in &binary {
        for u in &binary {
            let (te, ue) = (LinComb::basis(t.clone()), LinComb::basis(u.clone()));
            let (pt, pu) = (phi_element(&te)?, phi_element(&ue)?);
            if phi_element(&bt.prec(&te, &ue)?)? != di.prec(&pt, &pu)?
                || phi_element(&bt.succ(&te, &ue)?)? != di.succ(&pt, &pu)?
            {
                failure = Some(format!("{} ; {}", t.render(alphabet), u.render(alphabet)));
                break 'outer;
            }
        }
    }
    report.record("phi is a dialgebra morphism", binary.len() * binary.len(), failure);

    let planar: Vec<_> = (1..max_leaves.max(1))
        .map(|n| enumerate_planar(n, alphabet, cap))
        .collect::<Result<Vec<_>>>()?
        .concat();
    let pt = PlanarTrees::new(alphabet.clone());
    let tri = InducedTrialgebra(&tensor);
    let mut failure = None;
    'outer2: for t in &planar {
        for u in &planar {
            let (te, ue) = (LinComb::basis(t.clone()), LinComb::basis(u.clone()));
            let (a, b) = (psi_element(&te)?, psi_element(&ue)?);
            if psi_element(&pt.prec(&te, &ue)?)? != tri.prec(&a, &b)?
                || psi_element(&pt.succ(&te, &ue)?)? != tri.succ(&a, &b)?
                || psi_element(&pt.dot(&te, &ue)?)? != tri.dot(&a, &b)?
            {
                failure = Some(format!("{} ; {}", t.render(alphabet), u.render(alphabet)));
                break 'outer2;
            }
        }
    }
    report.record("psi is a trialgebra morphism", planar.len() * planar.len(), failure);

    for (family, name, pred) in [
        (TreeFamily::Binary, "phi", is_diword as fn(&_) -> bool),
        (TreeFamily::Planar, "psi", is_triword),
    ] {
        let mut injective = None;
        let mut image = None;
        let mut checked = 0;
        for n in 1..=max_n {
            let images = tree_images(family, n, alphabet, cap)?;
            checked += images.len();
            if injective.is_none() {
                if let Some(w) = images.windows(2).find(|p| p[0] == p[1]) {
                    injective = Some(format!("n={n}: {}", w[0].render(alphabet)));
                }
            }
            if image.is_none() {
                if let Some(w) = images.iter().find(|w| !pred(w)) {
                    image = Some(format!("n={n}: image {} fails the predicate", w.render(alphabet)));
                } else if filter_words(family, n, alphabet, cap)? != images {
                    image = Some(format!("n={n}: filtered words differ from the images"));
                }
            }
        }
        report.record(format!("{name} is injective"), checked, injective);
        report.record(format!("{name} image characterization"), checked, image);
    }
    Ok(report)
}
