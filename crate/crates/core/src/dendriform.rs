//! Dendriform dialgebras and trialgebras: the structures induced by a
//! Rota-Baxter operator, the passage from trialgebras to dialgebras, and
//! residual-based checkers for both axiom systems.

use crate::algebra::{LinearSpace, RotaBaxterAlgebra};
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DendKind {
    Prec,
    Succ,
    Dot,
    PrecPrime,
    Star,
}

impl DendKind {
    pub const ALL: [DendKind; 5] = [
        DendKind::Prec,
        DendKind::Succ,
        DendKind::Dot,
        DendKind::PrecPrime,
        DendKind::Star,
    ];

    pub fn name(self) -> &'static str {
        match self {
            DendKind::Prec => "prec",
            DendKind::Succ => "succ",
            DendKind::Dot => "dot",
            DendKind::PrecPrime => "prec_prime",
            DendKind::Star => "star",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == name)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Flavor {
    Dialgebra,
    Trialgebra,
}

/// A module with operations `≺`, `≻` and, for trialgebras, `·`.
pub trait DendriformStructure: LinearSpace {
    fn flavor(&self) -> Flavor;
    fn prec(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;
    fn succ(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;

    /// Fails with [`Error::DotUnavailable`] on dialgebras.
    fn dot(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;

    /// `≺ + ≻ + ·` on trialgebras, `≺ + ≻` on dialgebras.
    fn star(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        let s = self.add(&self.prec(a, b)?, &self.succ(a, b)?);
        match self.flavor() {
            Flavor::Dialgebra => Ok(s),
            Flavor::Trialgebra => Ok(self.add(&s, &self.dot(a, b)?)),
        }
    }
}

/// Evaluates one induced operation on a Rota-Baxter algebra:
/// `x ≺ y = xR(y)`, `x ≻ y = R(x)y`, `x · y = λxy`, `x ≺' y = xR(y) + λxy`.
///
/// `star` is `≺ + ≻ + ·` for the trialgebra flavor and `≺' + ≻` for the
/// dialgebra flavor; the two agree. `dot` is refused for the dialgebra flavor.
pub fn induced_op<A: RotaBaxterAlgebra>(
    alg: &A,
    flavor: Flavor,
    kind: DendKind,
    a: &A::Elem,
    b: &A::Elem,
) -> Result<A::Elem> {
    match (flavor, kind) {
        (_, DendKind::Prec) => alg.mul(a, &alg.rota_baxter(b)),
        (_, DendKind::Succ) => alg.mul(&alg.rota_baxter(a), b),
        (Flavor::Dialgebra, DendKind::Dot) => Err(Error::DotUnavailable),
        (Flavor::Trialgebra, DendKind::Dot) => Ok(alg.scale(alg.weight(), &alg.mul(a, b)?)),
        (_, DendKind::PrecPrime) => {
            let dot = alg.scale(alg.weight(), &alg.mul(a, b)?);
            Ok(alg.add(&alg.mul(a, &alg.rota_baxter(b))?, &dot))
        }
        (_, DendKind::Star) => {
            let prime = induced_op(alg, flavor, DendKind::PrecPrime, a, b)?;
            Ok(alg.add(&prime, &alg.mul(&alg.rota_baxter(a), b)?))
        }
    }
}

/// The trialgebra `(A, ≺_R, ≻_R, ·_R)` on a Rota-Baxter algebra.
pub struct InducedTrialgebra<'a, A>(pub &'a A);

/// The dialgebra `(A, ≺'_R, ≻_R)` on a Rota-Baxter algebra. At weight zero
/// this is `(A, ≺_R, ≻_R)`.
pub struct InducedDialgebra<'a, A>(pub &'a A);

macro_rules! forward_linear {
    ($ty:ident) => {
        impl<A: RotaBaxterAlgebra> LinearSpace for $ty<'_, A> {
            type Elem = A::Elem;

            fn zero(&self) -> A::Elem {
                self.0.zero()
            }

            fn add(&self, a: &A::Elem, b: &A::Elem) -> A::Elem {
                self.0.add(a, b)
            }

            fn scale(&self, c: &crate::scalar::Scalar, a: &A::Elem) -> A::Elem {
                self.0.scale(c, a)
            }

            fn is_zero(&self, a: &A::Elem) -> bool {
                self.0.is_zero(a)
            }

            fn render(&self, a: &A::Elem) -> String {
                self.0.render(a)
            }
        }
    };
}

forward_linear!(InducedTrialgebra);
forward_linear!(InducedDialgebra);

impl<A: RotaBaxterAlgebra> DendriformStructure for InducedTrialgebra<'_, A> {
    fn flavor(&self) -> Flavor {
        Flavor::Trialgebra
    }

    fn prec(&self, a: &A::Elem, b: &A::Elem) -> Result<A::Elem> {
        induced_op(self.0, Flavor::Trialgebra, DendKind::Prec, a, b)
    }

    fn succ(&self, a: &A::Elem, b: &A::Elem) -> Result<A::Elem> {
        induced_op(self.0, Flavor::Trialgebra, DendKind::Succ, a, b)
    }

    fn dot(&self, a: &A::Elem, b: &A::Elem) -> Result<A::Elem> {
        induced_op(self.0, Flavor::Trialgebra, DendKind::Dot, a, b)
    }
}

impl<A: RotaBaxterAlgebra> DendriformStructure for InducedDialgebra<'_, A> {
    fn flavor(&self) -> Flavor {
        Flavor::Dialgebra
    }

    fn prec(&self, a: &A::Elem, b: &A::Elem) -> Result<A::Elem> {
        induced_op(self.0, Flavor::Dialgebra, DendKind::PrecPrime, a, b)
    }

    fn succ(&self, a: &A::Elem, b: &A::Elem) -> Result<A::Elem> {
        induced_op(self.0, Flavor::Dialgebra, DendKind::Succ, a, b)
    }

    fn dot(&self, _: &A::Elem, _: &A::Elem) -> Result<A::Elem> {
        Err(Error::DotUnavailable)
    }
}

/// `(D, ≺ + ·, ≻)` for a trialgebra `D`.
pub struct DialgebraOf<S>(S);

impl<S: DendriformStructure> DialgebraOf<S> {
    pub fn inner(&self) -> &S {
        &self.0
    }
}

/// Converts a trialgebra into a dialgebra after checking the trialgebra
/// axioms on every triple drawn from `samples`.
pub fn to_dialgebra<S: DendriformStructure>(ops: S, samples: &[S::Elem]) -> Result<DialgebraOf<S>> {
    if ops.flavor() != Flavor::Trialgebra {
        return Err(Error::DotUnavailable);
    }
    for x in samples {
        for y in samples {
            for z in samples {
                let report = check_trialgebra(&ops, x, y, z)?;
                if let Some(bad) = report.first_failure() {
                    return Err(Error::AxiomViolation {
                        axiom: bad.name.to_string(),
                        x: ops.render(x),
                        y: ops.render(y),
                        z: ops.render(z),
                    });
                }
            }
        }
    }
    Ok(DialgebraOf(ops))
}

impl<S: DendriformStructure> LinearSpace for DialgebraOf<S> {
    type Elem = S::Elem;

    fn zero(&self) -> S::Elem {
        self.0.zero()
    }

    fn add(&self, a: &S::Elem, b: &S::Elem) -> S::Elem {
        self.0.add(a, b)
    }

    fn scale(&self, c: &crate::scalar::Scalar, a: &S::Elem) -> S::Elem {
        self.0.scale(c, a)
    }

    fn is_zero(&self, a: &S::Elem) -> bool {
        self.0.is_zero(a)
    }

    fn render(&self, a: &S::Elem) -> String {
        self.0.render(a)
    }
}

impl<S: DendriformStructure> DendriformStructure for DialgebraOf<S> {
    fn flavor(&self) -> Flavor {
        Flavor::Dialgebra
    }

    fn prec(&self, a: &S::Elem, b: &S::Elem) -> Result<S::Elem> {
        Ok(self.0.add(&self.0.prec(a, b)?, &self.0.dot(a, b)?))
    }

    fn succ(&self, a: &S::Elem, b: &S::Elem) -> Result<S::Elem> {
        self.0.succ(a, b)
    }

    fn dot(&self, _: &S::Elem, _: &S::Elem) -> Result<S::Elem> {
        Err(Error::DotUnavailable)
    }
}

/// Exchanges `≺` and `≻`; used as a negative control.
pub struct Swapped<S>(pub S);

impl<S: DendriformStructure> LinearSpace for Swapped<S> {
    type Elem = S::Elem;

    fn zero(&self) -> S::Elem {
        self.0.zero()
    }

    fn add(&self, a: &S::Elem, b: &S::Elem) -> S::Elem {
        self.0.add(a, b)
    }

    fn scale(&self, c: &crate::scalar::Scalar, a: &S::Elem) -> S::Elem {
        self.0.scale(c, a)
    }

    fn render(&self, a: &S::Elem) -> String {
        self.0.render(a)
    }
}

impl<S: DendriformStructure> DendriformStructure for Swapped<S> {
    fn flavor(&self) -> Flavor {
        self.0.flavor()
    }

    fn prec(&self, a: &S::Elem, b: &S::Elem) -> Result<S::Elem> {
        self.0.succ(a, b)
    }

    fn succ(&self, a: &S::Elem, b: &S::Elem) -> Result<S::Elem> {
        self.0.prec(a, b)
    }

    fn dot(&self, a: &S::Elem, b: &S::Elem) -> Result<S::Elem> {
        self.0.dot(a, b)
    }
}

#[derive(Clone, Debug)]
pub struct AxiomResidual<E> {
    pub name: &'static str,
    pub residual: E,
    pub pass: bool,
}

/// Residuals of every axiom on one triple.
#[derive(Clone, Debug)]
pub struct AxiomReport<E> {
    pub flavor: Flavor,
    pub axioms: Vec<AxiomResidual<E>>,
    pub witness: [E; 3],
}

impl<E> AxiomReport<E> {
    pub fn pass(&self) -> bool {
        self.axioms.iter().all(|a| a.pass)
    }

    pub fn first_failure(&self) -> Option<&AxiomResidual<E>> {
        self.axioms.iter().find(|a| !a.pass)
    }
}

pub const DIALGEBRA_AXIOMS: [&str; 3] = [
    "(x<y)<z = x<(y<z + y>z)",
    "(x>y)<z = x>(y<z)",
    "(x<y + x>y)>z = x>(y>z)",
];

pub const TRIALGEBRA_AXIOMS: [&str; 7] = [
    "(x<y)<z = x<(y*z)",
    "(x>y)<z = x>(y<z)",
    "(x*y)>z = x>(y>z)",
    "(x>y).z = x>(y.z)",
    "(x<y).z = x.(y>z)",
    "(x.y)<z = x.(y<z)",
    "(x.y).z = x.(y.z)",
];

fn residual<S: DendriformStructure>(
    ops: &S,
    name: &'static str,
    lhs: S::Elem,
    rhs: S::Elem,
) -> AxiomResidual<S::Elem> {
    let residual = ops.sub(&lhs, &rhs);
    let pass = ops.is_zero(&residual);
    AxiomResidual { name, residual, pass }
}

/// The three dialgebra axioms, with `⋆ = ≺ + ≻` regardless of flavor.
pub fn check_dialgebra<S: DendriformStructure>(
    ops: &S,
    x: &S::Elem,
    y: &S::Elem,
    z: &S::Elem,
) -> Result<AxiomReport<S::Elem>> {
    let p = |a: &S::Elem, b: &S::Elem| ops.prec(a, b);
    let s = |a: &S::Elem, b: &S::Elem| ops.succ(a, b);
    let st = |a: &S::Elem, b: &S::Elem| -> Result<S::Elem> { Ok(ops.add(&p(a, b)?, &s(a, b)?)) };
    let axioms = vec![
        residual(ops, DIALGEBRA_AXIOMS[0], p(&p(x, y)?, z)?, p(x, &st(y, z)?)?),
        residual(ops, DIALGEBRA_AXIOMS[1], p(&s(x, y)?, z)?, s(x, &p(y, z)?)?),
        residual(ops, DIALGEBRA_AXIOMS[2], s(&st(x, y)?, z)?, s(x, &s(y, z)?)?),
    ];
    Ok(AxiomReport {
        flavor: Flavor::Dialgebra,
        axioms,
        witness: [x.clone(), y.clone(), z.clone()],
    })
}

/// The seven trialgebra axioms with `⋆ = ≺ + ≻ + ·`.
pub fn check_trialgebra<S: DendriformStructure>(
    ops: &S,
    x: &S::Elem,
    y: &S::Elem,
    z: &S::Elem,
) -> Result<AxiomReport<S::Elem>> {
    let p = |a: &S::Elem, b: &S::Elem| ops.prec(a, b);
    let s = |a: &S::Elem, b: &S::Elem| ops.succ(a, b);
    let d = |a: &S::Elem, b: &S::Elem| ops.dot(a, b);
    let st = |a: &S::Elem, b: &S::Elem| -> Result<S::Elem> {
        Ok(ops.add(&ops.add(&p(a, b)?, &s(a, b)?), &d(a, b)?))
    };
    let t = &TRIALGEBRA_AXIOMS;
    let axioms = vec![
        residual(ops, t[0], p(&p(x, y)?, z)?, p(x, &st(y, z)?)?),
        residual(ops, t[1], p(&s(x, y)?, z)?, s(x, &p(y, z)?)?),
        residual(ops, t[2], s(&st(x, y)?, z)?, s(x, &s(y, z)?)?),
        residual(ops, t[3], d(&s(x, y)?, z)?, s(x, &d(y, z)?)?),
        residual(ops, t[4], d(&p(x, y)?, z)?, d(x, &s(y, z)?)?),
        residual(ops, t[5], p(&d(x, y)?, z)?, d(x, &p(y, z)?)?),
        residual(ops, t[6], d(&d(x, y)?, z)?, d(x, &d(y, z)?)?),
    ];
    Ok(AxiomReport {
        flavor: Flavor::Trialgebra,
        axioms,
        witness: [x.clone(), y.clone(), z.clone()],
    })
}

/// Dispatches on the flavor of `ops`.
pub fn check_axioms<S: DendriformStructure>(
    ops: &S,
    x: &S::Elem,
    y: &S::Elem,
    z: &S::Elem,
) -> Result<AxiomReport<S::Elem>> {
    match ops.flavor() {
        Flavor::Dialgebra => check_dialgebra(ops, x, y, z),
        Flavor::Trialgebra => check_trialgebra(ops, x, y, z),
    }
}

/// Residual `(x⋆y)⋆z − x⋆(y⋆z)`.
pub fn star_associativity_residual<S: DendriformStructure>(
    ops: &S,
    x: &S::Elem,
    y: &S::Elem,
    z: &S::Elem,
) -> Result<S::Elem> {
    let left = ops.star(&ops.star(x, y)?, z)?;
    let right = ops.star(x, &ops.star(y, z)?)?;
    Ok(ops.sub(&left, &right))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base_algebra::BaseAlgebra;
    use crate::free_rba::Context;
    use crate::rbword::Alphabet;
    use crate::scalar::Scalar;

    fn ctx(base: BaseAlgebra, weight: i64) -> Context {
        Context::new(Alphabet::new(["x", "y", "z"]).unwrap(), base, Scalar::from_int(weight)).unwrap()
    }

    #[test]
    fn induced_prec_and_dot() {
        let c = ctx(BaseAlgebra::ZeroProduct, 0);
        let (x, y) = (c.parse("x").unwrap(), c.parse("y").unwrap());
        let p = induced_op(&c, Flavor::Trialgebra, DendKind::Prec, &x, &y).unwrap();
        assert_eq!(c.render(&p), "x [y]");
        let c = ctx(BaseAlgebra::FreeMonoid, 1);
        let d = induced_op(&c, Flavor::Trialgebra, DendKind::Dot, &x, &y).unwrap();
        assert_eq!(c.render(&d), "x.y");
        assert_eq!(
            induced_op(&c, Flavor::Dialgebra, DendKind::Dot, &x, &y),
            Err(Error::DotUnavailable)
        );
    }

    #[test]
    fn star_agrees_across_flavors() {
        let c = ctx(BaseAlgebra::FreeMonoid, 2);
        let (x, y) = (c.parse("x [z]").unwrap(), c.parse("[y] z").unwrap());
        let tri = InducedTrialgebra(&c).star(&x, &y).unwrap();
        let di = InducedDialgebra(&c).star(&x, &y).unwrap();
        assert_eq!(tri, di);
        assert_eq!(tri, induced_op(&c, Flavor::Trialgebra, DendKind::Star, &x, &y).unwrap());
    }

    #[test]
    fn induced_structures_satisfy_axioms() {
        for weight in [0, 1, -1, 2] {
            let c = ctx(BaseAlgebra::FreeMonoid, weight);
            let (x, y, z) = (
                c.parse("x").unwrap(),
                c.parse("[y] x").unwrap(),
                c.parse("z [x]").unwrap(),
            );
            assert!(check_trialgebra(&InducedTrialgebra(&c), &x, &y, &z).unwrap().pass());
            assert!(check_dialgebra(&InducedDialgebra(&c), &x, &y, &z).unwrap().pass());
            let r = star_associativity_residual(&InducedTrialgebra(&c), &x, &y, &z).unwrap();
            assert!(r.is_zero());
        }
    }

    #[test]
    fn swapped_operations_fail() {
        let c = ctx(BaseAlgebra::ZeroProduct, 0);
        let (x, y, z) = (c.parse("x").unwrap(), c.parse("y").unwrap(), c.parse("z").unwrap());
        let report = check_dialgebra(&Swapped(InducedDialgebra(&c)), &x, &y, &z).unwrap();
        assert!(!report.pass());
        assert!(!report.first_failure().unwrap().residual.is_zero());
    }

    #[test]
    fn dialgebra_of_induced_trialgebra() {
        let c = ctx(BaseAlgebra::FreeMonoid, 1);
        let samples = [c.parse("x").unwrap(), c.parse("[y]").unwrap()];
        let di = to_dialgebra(InducedTrialgebra(&c), &samples).unwrap();
        let (a, b) = (c.parse("x [y]").unwrap(), c.parse("z").unwrap());
        assert_eq!(
            di.prec(&a, &b).unwrap(),
            induced_op(&c, Flavor::Trialgebra, DendKind::PrecPrime, &a, &b).unwrap()
        );
        assert_eq!(di.succ(&a, &b).unwrap(), InducedDialgebra(&c).succ(&a, &b).unwrap());
    }

    #[test]
    fn to_dialgebra_rejects_non_trialgebra() {
        let c = ctx(BaseAlgebra::ZeroProduct, 0);
        let samples = [c.parse("x").unwrap(), c.parse("y").unwrap()];
        assert!(matches!(
            to_dialgebra(Swapped(InducedTrialgebra(&c)), &samples),
            Err(Error::AxiomViolation { .. })
        ));
    }
}
