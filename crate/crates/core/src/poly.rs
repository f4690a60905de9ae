//! Dense univariate polynomials over an exact coefficient ring.
//!
//! [`Poly<C>`] is generic over the scalar type through the `num-traits`
//! arithmetic traits; the two instantiations used throughout the engine are
//! exported at the crate root as [`IntPoly`](crate::IntPoly) (arbitrary
//! precision integers) and [`RatPoly`](crate::RatPoly) (arbitrary precision
//! rationals).  No floating point types are instantiated anywhere: every
//! computation in this crate is exact.
//!
//! Coefficients are stored in ascending order of exponent and kept in
//! canonical form: the zero polynomial is the empty vector, and otherwise the
//! final coefficient is nonzero.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{invalid, Result};

/// Arithmetic bound for polynomial coefficients.
///
/// Blanket-implemented for every exact scalar that supports ring arithmetic;
/// `BigInt` and `BigRational` are the instantiations the crate exports.
pub trait Coeff:
    Clone + Eq + Zero + One + Neg<Output = Self> + Sub<Output = Self> + fmt::Debug
{
}

impl<T> Coeff for T where
    T: Clone + Eq + Zero + One + Neg<Output = T> + Sub<Output = T> + fmt::Debug
{
}

/// Dense univariate polynomial with exact coefficients in ascending order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly<C: Coeff> {
    coeffs: Vec<C>,
}

impl<C: Coeff> Poly<C> {
    /// Builds a polynomial from ascending coefficients, normalizing trailing
    /// zeros away.
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        let mut p = Poly { coeffs };
        p.normalize();
        p
    }

    /// The zero polynomial.
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    /// The constant polynomial `1`.
    pub fn one() -> Self {
        Poly::constant(C::one())
    }

    /// A constant polynomial.
    pub fn constant(c: C) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Poly::from_coeffs(vec![C::zero(), C::one()])
    }

    /// The monomial `c * x^n`.
    pub fn monomial(c: C, n: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![C::zero(); n + 1];
        coeffs[n] = c;
        Poly { coeffs }
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    /// Ascending coefficient slice; empty exactly for the zero polynomial.
    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Whether this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Leading coefficient, or `None` for the zero polynomial.
    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    /// Multiplies every coefficient by a scalar.
    pub fn scale(&self, s: &C) -> Self {
        if s.is_zero() {
            return Poly::zero();
        }
        Poly::from_coeffs(
            self.coeffs
                .iter()
                .map(|c| c.clone() * s.clone())
                .collect(),
        )
    }

    /// Raises the polynomial to a nonnegative integer power by repeated
    /// squaring.
    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Evaluates at a point by Horner's rule.
    pub fn eval(&self, t: &C) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t.clone() + c.clone();
        }
        acc
    }

    /// Substitutes `x -> alpha * x + beta`, returning `p(alpha x + beta)`.
    pub fn compose_linear(&self, alpha: &C, beta: &C) -> Self {
        let inner = Poly::from_coeffs(vec![beta.clone(), alpha.clone()]);
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &inner) + &Poly::constant(c.clone());
        }
        acc
    }
}

impl<C: Coeff> Add for &Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: &Poly<C>) -> Poly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl<C: Coeff> Sub for &Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: &Poly<C>) -> Poly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl<C: Coeff> Mul for &Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: &Poly<C>) -> Poly<C> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let term = a.clone() * b.clone();
                let slot = std::mem::replace(&mut coeffs[i + j], C::zero());
                coeffs[i + j] = slot + term;
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl<C: Coeff> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Poly::from_coeffs(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

/// The falling factorial `(x)_j = x (x-1) ... (x-j+1)` as an integer
/// polynomial; `(x)_0 = 1`.
pub fn falling_factorial(j: usize) -> Poly<BigInt> {
    let mut p = Poly::one();
    for i in 0..j {
        let factor = Poly::from_coeffs(vec![BigInt::from(-(i as i64)), BigInt::one()]);
        p = &p * &factor;
    }
    p
}

impl Poly<BigInt> {
    /// Evaluates an integer polynomial at an exact rational point.
    pub fn eval_rational(&self, t: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Widens to a rational polynomial.
    pub fn to_rational(&self) -> Poly<BigRational> {
        Poly::from_coeffs(
            self.coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }
}

impl Poly<BigRational> {
    /// Narrows to an integer polynomial, or `None` if any coefficient has a
    /// nontrivial denominator.
    pub fn to_integer(&self) -> Option<Poly<BigInt>> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            if !c.is_integer() {
                return None;
            }
            coeffs.push(c.to_integer());
        }
        Some(Poly::from_coeffs(coeffs))
    }
}

/// Lagrange interpolation through points with pairwise distinct abscissae.
///
/// Returns the unique polynomial of degree below `points.len()` passing
/// through all of them, computed exactly over the rationals.
pub fn interpolate(points: &[(BigRational, BigRational)]) -> Result<Poly<BigRational>> {
    for (i, (xi, _)) in points.iter().enumerate() {
        for (xj, _) in points.iter().skip(i + 1) {
            if xi == xj {
                return Err(invalid(format!("repeated interpolation abscissa {xi}")));
            }
        }
    }
    let mut acc: Poly<BigRational> = Poly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut basis: Poly<BigRational> = Poly::constant(yi.clone());
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let denom = xi - xj;
            // (x - xj) / (xi - xj)
            let factor = Poly::from_coeffs(vec![-xj / &denom, denom.recip()]);
            basis = &basis * &factor;
        }
        acc = &acc + &basis;
    }
    Ok(acc)
}

impl<C: Coeff + fmt::Display> fmt::Display for Poly<C> {
    /// Human-readable form with the variable `x`, highest degree first,
    /// e.g. `x^3 + 6x^2 + 15x + 14`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let s = c.to_string();
            let (sign, mag) = match s.strip_prefix('-') {
                Some(rest) => ("-", rest.to_string()),
                None => ("+", s),
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            let unit_mag = mag == "1";
            match (i, unit_mag) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{mag}x^{i}")?,
            }
        }
        Ok(())
    }
}

/// JSON form of an integer polynomial: coefficients low to high as decimal
/// strings, e.g. `{"variable":"x","coefficients":["14","15","6","1"]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolyJson {
    pub variable: String,
    pub coefficients: Vec<String>,
}

impl PolyJson {
    /// Serializes an integer polynomial under the given variable name.  The
    /// zero polynomial is written as a single `"0"` coefficient.
    pub fn from_poly(p: &Poly<BigInt>, variable: &str) -> Self {
        let coefficients = if p.is_zero() {
            vec!["0".to_string()]
        } else {
            p.coeffs().iter().map(|c| c.to_string()).collect()
        };
        PolyJson {
            variable: variable.to_string(),
            coefficients,
        }
    }

    /// Parses back into an integer polynomial.
    pub fn to_poly(&self) -> Result<Poly<BigInt>> {
        let mut coeffs = Vec::with_capacity(self.coefficients.len());
        for s in &self.coefficients {
            let c = s
                .parse::<BigInt>()
                .map_err(|_| invalid(format!("bad integer coefficient {s:?}")))?;
            coeffs.push(c);
        }
        Ok(Poly::from_coeffs(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_poly(cs: &[i64]) -> Poly<BigInt> {
        Poly::from_coeffs(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn canonical_form_strips_trailing_zeros() {
        let p = int_poly(&[3, 0, 0]);
        assert_eq!(p.degree(), Some(0));
        assert!(int_poly(&[0, 0]).is_zero());
        assert_eq!(Poly::<BigInt>::zero().degree(), None);
    }

    #[test]
    fn arithmetic_matches_hand_expansion() {
        // (x + 1)(x + 2) = x^2 + 3x + 2
        let p = int_poly(&[1, 1]);
        let q = int_poly(&[2, 1]);
        assert_eq!(&p * &q, int_poly(&[2, 3, 1]));
        assert_eq!(&p + &q, int_poly(&[3, 2]));
        assert_eq!(&p - &q, int_poly(&[-1]));
        assert_eq!(p.pow(3), int_poly(&[1, 3, 3, 1]));
    }

    #[test]
    fn product_evaluation_is_multiplicative_at_rational_points() {
        // (p * q)(t) = p(t) q(t) over a deterministic sweep of rational t.
        let p = int_poly(&[14, 15, 6, 1]);
        let q = int_poly(&[-3, 0, 2]);
        let prod = &p * &q;
        for num in -10i64..10 {
            for den in 1i64..3 {
                let t = BigRational::new(BigInt::from(num), BigInt::from(den));
                assert_eq!(
                    prod.eval_rational(&t),
                    p.eval_rational(&t) * q.eval_rational(&t)
                );
            }
        }
    }

    #[test]
    fn falling_factorial_small_cases() {
        assert_eq!(falling_factorial(0), Poly::one());
        assert_eq!(falling_factorial(1), int_poly(&[0, 1]));
        // (x)_2 = x^2 - x
        assert_eq!(falling_factorial(2), int_poly(&[0, -1, 1]));
        // (x)_3 = x^3 - 3x^2 + 2x
        assert_eq!(falling_factorial(3), int_poly(&[0, 2, -3, 1]));
        // (x)_j at x = j is j!.
        let p = falling_factorial(5);
        assert_eq!(p.eval(&BigInt::from(5)), BigInt::from(120));
        assert_eq!(p.eval(&BigInt::from(4)), BigInt::from(0));
    }

    #[test]
    fn compose_linear_substitutes() {
        // p(x) = x^2 + 1 at x -> 2x - 3: (2x-3)^2 + 1 = 4x^2 - 12x + 10
        let p = int_poly(&[1, 0, 1]);
        let q = p.compose_linear(&BigInt::from(2), &BigInt::from(-3));
        assert_eq!(q, int_poly(&[10, -12, 4]));
        // Substituting x -> x is the identity.
        assert_eq!(p.compose_linear(&BigInt::one(), &BigInt::zero()), p);
    }

    #[test]
    fn interpolation_recovers_integer_polynomial() {
        let p = int_poly(&[7, -2, 0, 5]);
        let points: Vec<_> = (0..6)
            .map(|i| {
                let x = BigRational::from_integer(BigInt::from(i));
                let y = p.eval_rational(&x);
                (x, y)
            })
            .collect();
        let q = interpolate(&points).unwrap();
        assert_eq!(q.to_integer().unwrap(), p);
    }

    #[test]
    fn interpolation_rejects_repeated_abscissae() {
        let x = BigRational::from_integer(BigInt::from(1));
        let y = BigRational::from_integer(BigInt::from(2));
        assert!(interpolate(&[(x.clone(), y.clone()), (x, y)]).is_err());
    }

    #[test]
    fn display_matches_expected_shape() {
        assert_eq!(int_poly(&[14, 15, 6, 1]).to_string(), "x^3 + 6x^2 + 15x + 14");
        assert_eq!(int_poly(&[0, -1, 1]).to_string(), "x^2 - x");
        assert_eq!(Poly::<BigInt>::zero().to_string(), "0");
        assert_eq!(int_poly(&[-5]).to_string(), "-5");
    }

    #[test]
    fn json_round_trip() {
        let p = int_poly(&[14, 15, 6, 1]);
        let json = PolyJson::from_poly(&p, "x");
        assert_eq!(json.coefficients, vec!["14", "15", "6", "1"]);
        assert_eq!(json.to_poly().unwrap(), p);
        let zero = PolyJson::from_poly(&Poly::zero(), "x");
        assert_eq!(zero.coefficients, vec!["0"]);
        assert!(zero.to_poly().unwrap().is_zero());
    }

    #[test]
    fn rational_polynomials_narrow_only_when_integral() {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let p: Poly<BigRational> = Poly::from_coeffs(vec![half.clone(), half.clone()]);
        assert!(p.to_integer().is_none());
        assert_eq!((&p + &p).to_integer().unwrap(), int_poly(&[1, 1]));
    }
}
