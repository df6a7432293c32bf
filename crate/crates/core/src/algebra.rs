//! Interfaces shared by every carrier the library computes in.

use std::fmt;

use crate::error::Result;
use crate::scalar::Scalar;

/// A vector space over the exact rationals with a concrete element type.
pub trait LinearSpace {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn scale(&self, c: &Scalar, a: &Self::Elem) -> Self::Elem;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.scale(&Scalar::from_int(-1), b))
    }

    /// Human-readable rendering used in reports and counterexamples.
    fn render(&self, a: &Self::Elem) -> String {
        format!("{a:?}")
    }
}

/// An associative algebra with a linear operator `R` satisfying
/// `R(x)R(y) = R(R(x)y + xR(y) + λxy)`.
pub trait RotaBaxterAlgebra: LinearSpace {
    fn weight(&self) -> &Scalar;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;
    fn rota_baxter(&self, a: &Self::Elem) -> Self::Elem;
}

/// Residual `R(x)R(y) - R(R(x)y + xR(y) + λxy)`.
pub fn rota_baxter_residual<A: RotaBaxterAlgebra>(alg: &A, x: &A::Elem, y: &A::Elem) -> Result<A::Elem> {
    let rx = alg.rota_baxter(x);
    let ry = alg.rota_baxter(y);
    let lhs = alg.mul(&rx, &ry)?;
    let inner = alg.add(
        &alg.add(&alg.mul(&rx, y)?, &alg.mul(x, &ry)?),
        &alg.scale(alg.weight(), &alg.mul(x, y)?),
    );
    Ok(alg.sub(&lhs, &alg.rota_baxter(&inner)))
}

/// Residual `(xy)z - x(yz)`.
pub fn associativity_residual<A: RotaBaxterAlgebra>(
    alg: &A,
    x: &A::Elem,
    y: &A::Elem,
    z: &A::Elem,
) -> Result<A::Elem> {
    let left = alg.mul(&alg.mul(x, y)?, z)?;
    let right = alg.mul(x, &alg.mul(y, z)?)?;
    Ok(alg.sub(&left, &right))
}
