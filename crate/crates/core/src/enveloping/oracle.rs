//! Concrete Rota-Baxter algebras used as morphism targets.

use std::fmt;

use rand::Rng;

use crate::algebra::{associativity_residual, rota_baxter_residual, LinearSpace, RotaBaxterAlgebra};
use crate::error::{Error, Result};
use crate::sample::small_int;
use crate::scalar::Scalar;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum OracleKind {
    /// Sequences of length `len` with the pointwise product and
    /// `R(f)(n) = λ Σ_{k<n} f(k)`.
    Sequences { len: usize },
    /// Polynomials in `x` with `R` the antiderivative vanishing at zero
    /// (weight zero). With a degree bound, products and integrals are
    /// reduced modulo `x^{d+1}`, which keeps finite subspaces closed.
    Polynomials { max_degree: Option<usize> },
}

/// A coefficient vector: sequence entries, or polynomial coefficients with
/// no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct OracleElement(Vec<Scalar>);

impl OracleElement {
    pub fn coeffs(&self) -> &[Scalar] {
        &self.0
    }
}

impl fmt::Debug for OracleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.0).finish()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RbOracle {
    kind: OracleKind,
    weight: Scalar,
}

impl RbOracle {
    pub fn sequences(len: usize, weight: Scalar) -> Result<Self> {
        if len == 0 {
            return Err(Error::Invalid("sequence length must be positive".into()));
        }
        Ok(RbOracle {
            kind: OracleKind::Sequences { len },
            weight,
        })
    }

    pub fn polynomials(max_degree: Option<usize>) -> Self {
        RbOracle {
            kind: OracleKind::Polynomials { max_degree },
            weight: Scalar::zero(),
        }
    }

    /// `sequences:N`, `polynomials` or `polynomials:D`. The weight applies
    /// to sequences only.
    pub fn parse_spec(spec: &str, weight: &Scalar) -> Result<Self> {
        let (name, arg) = match spec.split_once(':') {
            Some((n, a)) => (n, Some(a)),
            None => (spec, None),
        };
        let num = |a: &str| {
            a.parse::<usize>()
                .map_err(|_| Error::Invalid(format!("bad oracle parameter `{a}`")))
        };
        match (name, arg) {
            ("sequences", None) => RbOracle::sequences(6, weight.clone()),
            ("sequences", Some(a)) => RbOracle::sequences(num(a)?, weight.clone()),
            ("polynomials", None) => Ok(RbOracle::polynomials(None)),
            ("polynomials", Some(a)) => Ok(RbOracle::polynomials(Some(num(a)?))),
            _ => Err(Error::Invalid(format!(
                "unknown oracle `{spec}` (expected sequences[:N] or polynomials[:D])"
            ))),
        }
    }

    pub fn kind(&self) -> OracleKind {
        self.kind
    }

    pub fn name(&self) -> String {
        match self.kind {
            OracleKind::Sequences { len } => format!("sequences:{len}"),
            OracleKind::Polynomials { max_degree: None } => "polynomials".into(),
            OracleKind::Polynomials { max_degree: Some(d) } => format!("polynomials:{d}"),
        }
    }

    /// Number of coordinates when the carrier is finite-dimensional.
    pub fn dimension(&self) -> Option<usize> {
        match self.kind {
            OracleKind::Sequences { len } => Some(len),
            OracleKind::Polynomials { max_degree } => max_degree.map(|d| d + 1),
        }
    }

    /// Builds an element from coordinates, checking the length for
    /// sequences and reducing polynomials.
    pub fn element(&self, coeffs: Vec<Scalar>) -> Result<OracleElement> {
        match self.kind {
            OracleKind::Sequences { len } if coeffs.len() != len => Err(Error::Invalid(format!(
                "sequence of length {} given, oracle has length {len}",
                coeffs.len()
            ))),
            OracleKind::Sequences { .. } => Ok(OracleElement(coeffs)),
            OracleKind::Polynomials { .. } => Ok(self.normalize(coeffs)),
        }
    }

    pub fn from_ints(&self, coeffs: &[i64]) -> Result<OracleElement> {
        self.element(coeffs.iter().map(|&c| Scalar::from_int(c)).collect())
    }

    /// The `i`-th coordinate vector.
    pub fn unit(&self, i: usize) -> Result<OracleElement> {
        let n = match self.kind {
            OracleKind::Sequences { len } => len,
            OracleKind::Polynomials { .. } => i + 1,
        };
        if i >= n || self.dimension().is_some_and(|d| i >= d) {
            return Err(Error::Invalid(format!("coordinate {i} out of range")));
        }
        let mut v = vec![Scalar::zero(); n];
        v[i] = Scalar::one();
        self.element(v)
    }

    fn normalize(&self, mut v: Vec<Scalar>) -> OracleElement {
        match self.kind {
            OracleKind::Sequences { len } => {
                v.resize(len, Scalar::zero());
                return OracleElement(v);
            }
            OracleKind::Polynomials { max_degree: Some(d) } => v.truncate(d + 1),
            OracleKind::Polynomials { max_degree: None } => {}
        }
        while v.last().is_some_and(Scalar::is_zero) {
            v.pop();
        }
        OracleElement(v)
    }

    pub fn random_element(&self, rng: &mut impl Rng) -> OracleElement {
        let len = match self.kind {
            OracleKind::Sequences { len } => len,
            OracleKind::Polynomials { max_degree } => {
                rng.gen_range(1..=max_degree.map_or(4, |d| d + 1))
            }
        };
        self.normalize((0..len).map(|_| small_int(rng)).collect())
    }
}

impl LinearSpace for RbOracle {
    type Elem = OracleElement;

    fn zero(&self) -> OracleElement {
        match self.kind {
            OracleKind::Sequences { len } => OracleElement(vec![Scalar::zero(); len]),
            OracleKind::Polynomials { .. } => OracleElement(Vec::new()),
        }
    }

    fn add(&self, a: &OracleElement, b: &OracleElement) -> OracleElement {
        let n = a.0.len().max(b.0.len());
        let zero = Scalar::zero();
        let v = (0..n)
            .map(|i| a.0.get(i).unwrap_or(&zero) + b.0.get(i).unwrap_or(&zero))
            .collect();
        self.normalize(v)
    }

    fn scale(&self, c: &Scalar, a: &OracleElement) -> OracleElement {
        self.normalize(a.0.iter().map(|x| c * x).collect())
    }

    fn render(&self, a: &OracleElement) -> String {
        match self.kind {
            OracleKind::Sequences { .. } => {
                let parts: Vec<String> = a.0.iter().map(|c| c.to_string()).collect();
                format!("({})", parts.join(", "))
            }
            OracleKind::Polynomials { .. } => render_polynomial(&a.0),
        }
    }
}

fn render_polynomial(coeffs: &[Scalar]) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let monomial = match k {
            0 => String::new(),
            1 => "x".into(),
            _ => format!("x^{k}"),
        };
        if monomial.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&monomial);
        } else {
            out.push_str(&format!("{mag}*{monomial}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl RotaBaxterAlgebra for RbOracle {
    fn weight(&self) -> &Scalar {
        &self.weight
    }

    fn mul(&self, a: &OracleElement, b: &OracleElement) -> Result<OracleElement> {
        match self.kind {
            OracleKind::Sequences { .. } => Ok(OracleElement(
                a.0.iter().zip(&b.0).map(|(x, y)| x * y).collect(),
            )),
            OracleKind::Polynomials { max_degree } => {
                if a.0.is_empty() || b.0.is_empty() {
                    return Ok(OracleElement(Vec::new()));
                }
                let mut n = a.0.len() + b.0.len() - 1;
                if let Some(d) = max_degree {
                    n = n.min(d + 1);
                }
                let mut v = vec![Scalar::zero(); n];
                for (i, x) in a.0.iter().enumerate() {
                    for (j, y) in b.0.iter().enumerate() {
                        if i + j < n {
                            v[i + j] += &(x * y);
                        }
                    }
                }
                Ok(self.normalize(v))
            }
        }
    }

    fn rota_baxter(&self, a: &OracleElement) -> OracleElement {
        match self.kind {
            OracleKind::Sequences { len } => {
                let mut v = Vec::with_capacity(len);
                let mut partial = Scalar::zero();
                for x in &a.0 {
                    v.push(&self.weight * &partial);
                    partial += x;
                }
                OracleElement(v)
            }
            OracleKind::Polynomials { .. } => {
                let mut v = vec![Scalar::zero()];
                for (k, c) in a.0.iter().enumerate() {
                    v.push(c * &Scalar::ratio(1, k as i64 + 1));
                }
                self.normalize(v)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct OracleReport {
    pub oracle: String,
    pub weight: String,
    pub pairs_checked: usize,
    pub triples_checked: usize,
}

/// Checks the Rota-Baxter identity on `samples` random pairs, and
/// associativity and bilinearity of the product on as many random triples.
pub fn check_rb_oracle(o: &RbOracle, samples: usize, rng: &mut impl Rng) -> Result<OracleReport> {
    if samples == 0 {
        return Err(Error::Invalid("at least one sample is required".into()));
    }
    for _ in 0..samples {
        let (x, y, z) = (o.random_element(rng), o.random_element(rng), o.random_element(rng));
        if !o.is_zero(&rota_baxter_residual(o, &x, &y)?) {
            return Err(Error::RotaBaxterViolation {
                x: o.render(&x),
                y: o.render(&y),
            });
        }
        let c = small_int(rng);
        let distributes = o.mul(&o.add(&x, &y), &z)? == o.add(&o.mul(&x, &z)?, &o.mul(&y, &z)?)
            && o.mul(&o.scale(&c, &x), &y)? == o.scale(&c, &o.mul(&x, &y)?)
            && o.rota_baxter(&o.add(&x, &o.scale(&c, &y))) == o.add(&o.rota_baxter(&x), &o.scale(&c, &o.rota_baxter(&y)));
        if !distributes || !o.is_zero(&associativity_residual(o, &x, &y, &z)?) {
            return Err(Error::Associativity {
                a: o.render(&x),
                b: o.render(&y),
                c: o.render(&z),
            });
        }
    }
    Ok(OracleReport {
        oracle: o.name(),
        weight: o.weight.to_string(),
        pairs_checked: samples,
        triples_checked: samples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn partial_sums() {
        let o = RbOracle::sequences(3, Scalar::one()).unwrap();
        let f = o.from_ints(&[1, 1, 1]).unwrap();
        assert_eq!(o.rota_baxter(&f), o.from_ints(&[0, 1, 2]).unwrap());
        let lhs = o.mul(&o.rota_baxter(&f), &o.rota_baxter(&f)).unwrap();
        assert_eq!(lhs, o.from_ints(&[0, 1, 4]).unwrap());
        assert!(o.is_zero(&rota_baxter_residual(&o, &f, &f).unwrap()));
        let g = o.from_ints(&[1, 2, 3]).unwrap();
        assert_eq!(o.rota_baxter(&g), o.from_ints(&[0, 1, 3]).unwrap());
        assert_eq!(o.render(&g), "(1, 2, 3)");
    }

    #[test]
    fn weighted_sums() {
        let o = RbOracle::sequences(4, Scalar::from_int(-2)).unwrap();
        let f = o.from_ints(&[1, 2, 3, 4]).unwrap();
        assert_eq!(o.rota_baxter(&f), o.from_ints(&[0, -2, -6, -12]).unwrap());
    }

    #[test]
    fn integration() {
        let o = RbOracle::polynomials(None);
        let one = o.from_ints(&[1]).unwrap();
        let x2 = o.mul(&o.rota_baxter(&one), &o.rota_baxter(&one)).unwrap();
        assert_eq!(x2, o.from_ints(&[0, 0, 1]).unwrap());
        assert!(o.is_zero(&rota_baxter_residual(&o, &one, &one).unwrap()));
        let p = o.element(vec![Scalar::from_int(1), Scalar::zero(), Scalar::ratio(-1, 3)]).unwrap();
        assert_eq!(o.render(&p), "1 - 1/3*x^2");
        assert_eq!(o.render(&o.zero()), "0");
    }

    #[test]
    fn truncation() {
        let o = RbOracle::polynomials(Some(2));
        let x = o.unit(1).unwrap();
        assert!(o.is_zero(&o.mul(&x, &o.mul(&x, &x).unwrap()).unwrap()));
        assert_eq!(o.rota_baxter(&o.unit(2).unwrap()), o.zero());
        assert!(o.unit(3).is_err());
    }

    #[test]
    fn both_oracles_sound() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for o in [
            RbOracle::sequences(5, Scalar::from_int(2)).unwrap(),
            RbOracle::polynomials(None),
            RbOracle::polynomials(Some(3)),
        ] {
            check_rb_oracle(&o, 100, &mut rng).unwrap();
        }
    }

    #[test]
    fn spec_parsing() {
        let w = Scalar::one();
        assert_eq!(RbOracle::parse_spec("sequences:3", &w).unwrap().name(), "sequences:3");
        assert_eq!(RbOracle::parse_spec("polynomials:3", &w).unwrap().weight(), &Scalar::zero());
        assert!(RbOracle::parse_spec("matrices", &w).is_err());
    }
}
