//! Sparse multivariate polynomials with integer coefficients, and the weak
//! compositions used to record placement and tree statistics.
//!
//! The only producer of multivariate polynomials in the engine is the
//! Gessel-polynomial enumeration, which works in the `2k` variables
//! `u_1, ..., u_k, v_1, ..., v_k` (in that index order).  The type itself is
//! agnostic about variable meaning; it stores exponent vectors mapped to
//! nonzero `BigInt` coefficients.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use crate::error::{invalid, Result};

/// A weak composition: a fixed-length sequence of nonnegative parts.
///
/// Used for the excedance/subcedance statistics of colored placements and
/// the descent/ascent statistics of plane trees, always of length `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakComposition {
    parts: Vec<usize>,
}

impl WeakComposition {
    /// A composition of all zeros with `k` parts.
    pub fn zeros(k: usize) -> Self {
        WeakComposition {
            parts: vec![0; k],
        }
    }

    /// Wraps an explicit part vector.
    pub fn new(parts: Vec<usize>) -> Self {
        WeakComposition { parts }
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// Whether there are no parts.
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `j`-th part, 1-indexed.
    pub fn part(&self, j: usize) -> usize {
        self.parts[j - 1]
    }

    /// Increments the `j`-th part, 1-indexed.
    pub fn bump(&mut self, j: usize) {
        self.parts[j - 1] += 1;
    }

    /// Sum of all parts.
    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The parts as a slice.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }
}

/// Sparse multivariate polynomial over the integers in a fixed number of
/// variables.
///
/// Invariant: no stored term has coefficient zero, so structural equality is
/// mathematical equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    num_vars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MultiPoly {
    /// The zero polynomial in `num_vars` variables.
    pub fn zero(num_vars: usize) -> Self {
        MultiPoly {
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    /// The constant polynomial `1` in `num_vars` variables.
    pub fn one(num_vars: usize) -> Self {
        let mut p = MultiPoly::zero(num_vars);
        p.add_term(&vec![0; num_vars], BigInt::one());
        p
    }

    /// Number of variables.
    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// Adds `coeff * x^exponents` to the polynomial.
    ///
    /// # Panics
    /// If the exponent vector length differs from `num_vars`.
    pub fn add_term(&mut self, exponents: &[u32], coeff: BigInt) {
        assert_eq!(
            exponents.len(),
            self.num_vars,
            "exponent vector length must equal the variable count"
        );
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponents.to_vec()).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(exponents);
        }
    }

    /// Iterates terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    /// Number of stored (nonzero) terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Whether this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, point: &[BigRational]) -> Result<BigRational> {
        if point.len() != self.num_vars {
            return Err(invalid(format!(
                "evaluation point has {} coordinates, polynomial has {} variables",
                point.len(),
                self.num_vars
            )));
        }
        let mut acc = BigRational::zero();
        for (exps, coeff) in &self.terms {
            let mut term = BigRational::from_integer(coeff.clone());
            for (x, &e) in point.iter().zip(exps.iter()) {
                for _ in 0..e {
                    term *= x;
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Returns the polynomial with variables `i` and `j` (0-indexed)
    /// exchanged.
    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        let mut out = MultiPoly::zero(self.num_vars);
        for (exps, coeff) in &self.terms {
            let mut e = exps.clone();
            e.swap(i, j);
            out.add_term(&e, coeff.clone());
        }
        out
    }

    /// Restricts to the terms whose exponents vanish on the given variables
    /// (equivalently, substitutes zero for those variables).
    pub fn substitute_zero(&self, vars: &[usize]) -> Self {
        let mut out = MultiPoly::zero(self.num_vars);
        for (exps, coeff) in &self.terms {
            if vars.iter().all(|&v| exps[v] == 0) {
                out.add_term(exps, coeff.clone());
            }
        }
        out
    }

    /// The coefficient of a specific exponent vector (zero if absent).
    pub fn coeff(&self, exponents: &[u32]) -> BigInt {
        self.terms.get(exponents).cloned().unwrap_or_else(BigInt::zero)
    }
}

/// JSON form of a multivariate polynomial: named variables plus a list of
/// `[coefficient, exponent-vector]` terms in lexicographic exponent order.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MultiPolyJson {
    pub variables: Vec<String>,
    pub terms: Vec<MultiPolyTermJson>,
}

/// One term of [`MultiPolyJson`].
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MultiPolyTermJson {
    pub coeff: String,
    pub exponents: Vec<u32>,
}

impl MultiPolyJson {
    /// Serializes a polynomial under the given variable names.
    pub fn from_poly(p: &MultiPoly, variables: Vec<String>) -> Self {
        assert_eq!(variables.len(), p.num_vars());
        let terms = p
            .terms()
            .map(|(exps, coeff)| MultiPolyTermJson {
                coeff: coeff.to_string(),
                exponents: exps.clone(),
            })
            .collect();
        MultiPolyJson { variables, terms }
    }
}

/// Variable names `u_1..u_k, v_1..v_k` used for Gessel polynomials.
pub fn uv_variable_names(k: usize) -> Vec<String> {
    let mut names = Vec::with_capacity(2 * k);
    for j in 1..=k {
        names.push(format!("u{j}"));
    }
    for j in 1..=k {
        names.push(format!("v{j}"));
    }
    names
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_coefficients_are_never_stored() {
        let mut p = MultiPoly::zero(2);
        p.add_term(&[1, 0], BigInt::from(3));
        p.add_term(&[1, 0], BigInt::from(-3));
        assert!(p.is_zero());
        p.add_term(&[0, 1], BigInt::zero());
        assert!(p.is_zero());
    }

    #[test]
    fn evaluation_sums_terms() {
        // p = 2 x0 x1^2 + 5
        let mut p = MultiPoly::zero(2);
        p.add_term(&[1, 2], BigInt::from(2));
        p.add_term(&[0, 0], BigInt::from(5));
        let point = vec![
            BigRational::from_integer(BigInt::from(3)),
            BigRational::new(BigInt::from(1), BigInt::from(2)),
        ];
        // 2 * 3 * 1/4 + 5 = 13/2
        assert_eq!(
            p.eval(&point).unwrap(),
            BigRational::new(BigInt::from(13), BigInt::from(2))
        );
        assert!(p.eval(&point[..1]).is_err());
    }

    #[test]
    fn swap_vars_exchanges_exponents() {
        let mut p = MultiPoly::zero(3);
        p.add_term(&[2, 0, 1], BigInt::one());
        let q = p.swap_vars(0, 2);
        assert_eq!(q.coeff(&[1, 0, 2]), BigInt::one());
        assert_eq!(q.swap_vars(0, 2), p);
    }

    #[test]
    fn substitute_zero_drops_terms() {
        let mut p = MultiPoly::zero(2);
        p.add_term(&[1, 0], BigInt::from(4));
        p.add_term(&[0, 3], BigInt::from(7));
        let q = p.substitute_zero(&[1]);
        assert_eq!(q.coeff(&[1, 0]), BigInt::from(4));
        assert_eq!(q.coeff(&[0, 3]), BigInt::zero());
        assert_eq!(q.term_count(), 1);
    }

    #[test]
    fn weak_composition_basics() {
        let mut c = WeakComposition::zeros(3);
        c.bump(2);
        c.bump(2);
        c.bump(3);
        assert_eq!(c.parts(), &[0, 2, 1]);
        assert_eq!(c.part(2), 2);
        assert_eq!(c.total(), 3);
        assert_eq!(c, WeakComposition::new(vec![0, 2, 1]));
    }

    #[test]
    fn uv_names_are_ordered() {
        assert_eq!(uv_variable_names(2), vec!["u1", "u2", "v1", "v2"]);
    }
}
