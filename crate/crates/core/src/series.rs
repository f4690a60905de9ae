//! Truncated power series over exact rationals and the generating-function
//! identities they verify.
//!
//! A `TruncatedSeries` stores ordinary coefficients `c_0, ..., c_N` and all
//! arithmetic is exact modulo `x^{N+1}`; exponential generating functions
//! are handled by multiplying or dividing factorials explicitly at the
//! boundary.  On top of the core operations (multiplication, exponential,
//! logarithm, multiplicative and compositional inverses, composition) sit
//! four identity checks, each returning a machine-readable report:
//!
//! * `ltree-egf` — the compositional inverse of
//!   `2 log(1+x) / ((1+x)^{k-2} (2+x))` is `Σ l_{n,k} x^n / n!`, the
//!   exponential generating function of the ltree counts, cross-checked
//!   against both the closed form and direct tree enumeration;
//! * `f-equation` — with `f = 1 + Σ l_{n,k} x^n/n!`, the functional
//!   equation `f² = exp(x (f^{k-2} + f^{k-1}))` holds;
//! * `drake` — for numeric parameters `u, v`, the series
//!   `H(x) = Σ_i (v_i-u_i)^{k-2} log((1+v_i x)/(1+u_i x)) Π_{j≠i} 1/Z_{ij}`
//!   with `Z_{ij} = (v_i u_j - u_i v_j) x + (v_i - v_j) - (u_i - u_j)` is a
//!   compositional inverse of `P_k(x) = Σ G_{n,k}(u,v) x^n / n!`;
//! * `gessel-k2` — the two-color Gessel series `B = Σ G_{n,2} x^n/n!`
//!   satisfies `(1+v₁B)(1+u₂B) = (1+v₂B)(1+u₁B) ·
//!   exp(((v₁u₂-v₂u₁)B + v₁-v₂-u₁+u₂) x)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::bijection::for_each_colored_placement;
use crate::error::{invalid, limit, verification, Result};
use crate::trees::{count_class_with, ltree_count_formula, TreeClass};
use crate::Limits;

/// Largest order accepted by the ltree-egf and f-equation checks.
pub const MAX_SERIES_ORDER: usize = 12;

/// Largest order accepted by the Gessel-backed checks (placement
/// enumeration cost grows like `(kn)_{n-1}`).
pub const MAX_GESSEL_ORDER: usize = 8;

/// A power series truncated at `x^N`: exact rational coefficients
/// `c_0, ..., c_N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl TruncatedSeries {
    /// Wraps coefficients `c_0, ..., c_N`; the vector length fixes the
    /// order.
    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs at least c_0");
        TruncatedSeries { coeffs }
    }

    /// The zero series at the given order.
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    /// The constant-one series at the given order.
    pub fn one(order: usize) -> Self {
        let mut s = TruncatedSeries::zero(order);
        s.coeffs[0] = BigRational::one();
        s
    }

    /// The series `x` at the given order (which must be at least 1).
    pub fn x(order: usize) -> Self {
        assert!(order >= 1, "the series x needs order >= 1");
        let mut s = TruncatedSeries::zero(order);
        s.coeffs[1] = BigRational::one();
        s
    }

    /// Truncation order `N`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^i`; panics beyond the order, where the value is
    /// unknown rather than zero.
    pub fn coeff(&self, i: usize) -> &BigRational {
        assert!(i <= self.order(), "coefficient {i} beyond order {}", self.order());
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Drops coefficients above the given (smaller or equal) order.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        TruncatedSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect(),
        }
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        let mut coeffs = vec![BigRational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n + 1 - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        TruncatedSeries { coeffs }
    }

    /// Integer power by repeated multiplication; `powi(0)` is 1.
    pub fn powi(&self, e: u32) -> Self {
        let mut acc = TruncatedSeries::one(self.order());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        if self.coeffs[0].is_zero() {
            return Err(invalid("multiplicative inverse requires a nonzero constant term"));
        }
        let n = self.order();
        let c0_inv = self.coeffs[0].recip();
        let mut coeffs = vec![BigRational::zero(); n + 1];
        coeffs[0] = c0_inv.clone();
        for m in 1..=n {
            let mut acc = BigRational::zero();
            for i in 1..=m {
                acc += &self.coeffs[i] * &coeffs[m - i];
            }
            coeffs[m] = -acc * &c0_inv;
        }
        Ok(TruncatedSeries { coeffs })
    }

    /// `exp(f)` for `f` with zero constant term, via `Σ_{j<=N} f^j / j!`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(invalid("exp requires a zero constant term"));
        }
        let n = self.order();
        let mut acc = TruncatedSeries::one(n);
        let mut power = TruncatedSeries::one(n);
        let mut factorial = BigRational::one();
        for j in 1..=n {
            power = power.mul(self);
            factorial *= rat(j as i64);
            acc = acc.add(&power.scale(&factorial.recip()));
        }
        Ok(acc)
    }

    /// `log(f)` for `f` with constant term 1, via
    /// `Σ (-1)^{j+1} (f-1)^j / j`.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(invalid("log requires constant term 1"));
        }
        let n = self.order();
        let h = self.sub(&TruncatedSeries::one(n));
        let mut acc = TruncatedSeries::zero(n);
        let mut power = TruncatedSeries::one(n);
        for j in 1..=n {
            power = power.mul(&h);
            let sign = if j % 2 == 1 { 1 } else { -1 };
            acc = acc.add(&power.scale(&(rat(sign) / rat(j as i64))));
        }
        Ok(acc)
    }

    /// `f(g)` by Horner's scheme; requires `g(0) = 0`.
    pub fn compose(&self, g: &Self) -> Result<Self> {
        if !g.coeffs[0].is_zero() {
            return Err(invalid("composition requires the inner series to vanish at 0"));
        }
        let n = self.order().min(g.order());
        let mut acc = TruncatedSeries::zero(n);
        for c in self.coeffs.iter().take(n + 1).rev() {
            acc = acc.mul(g);
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    /// The compositional inverse `g` with `f(g) = g(f) = x`; requires
    /// `f(0) = 0` and `f'(0) != 0`.
    ///
    /// Solved coefficient by coefficient: with `g` known below order `m`,
    /// the `x^m` coefficient of `f(g)` is linear in `g_m` with slope
    /// `f'(0)`.
    pub fn compositional_inverse(&self) -> Result<Self> {
        let n = self.order();
        if n == 0 || !self.coeffs[0].is_zero() {
            return Err(invalid("compositional inverse requires f(0) = 0 and order >= 1"));
        }
        if self.coeffs[1].is_zero() {
            return Err(invalid("compositional inverse requires f'(0) != 0"));
        }
        let slope_inv = self.coeffs[1].recip();
        let mut g = TruncatedSeries::zero(n);
        g.coeffs[1] = slope_inv.clone();
        for m in 2..=n {
            let err = self.compose(&g)?.coeffs[m].clone();
            g.coeffs[m] = -err * &slope_inv;
        }
        Ok(g)
    }
}

/// The series `Σ_{n>=1} l_{n,k} x^n / n!` to the given order, obtained as
/// the compositional inverse of `2 log(1+x) / ((1+x)^{k-2} (2+x))`.
pub fn ltree_egf(k: usize, order: usize) -> Result<TruncatedSeries> {
    if k < 2 {
        return Err(invalid("ltree series require k >= 2"));
    }
    let n = order.max(1);
    let one_plus_x = TruncatedSeries::from_coeffs(
        (0..=n)
            .map(|i| if i <= 1 { BigRational::one() } else { BigRational::zero() })
            .collect(),
    );
    let mut two_plus_x = one_plus_x.clone();
    two_plus_x.coeffs[0] += BigRational::one();
    let numerator = one_plus_x.log()?.scale(&rat(2));
    let denominator = one_plus_x.powi((k - 2) as u32).mul(&two_plus_x);
    let f = numerator.mul(&denominator.inverse()?);
    Ok(f.compositional_inverse()?.truncate(order))
}

/// `G_{n,k}(u, v)` evaluated at numeric parameters by direct enumeration,
/// without materializing the polynomial.
fn gessel_value(
    n: usize,
    k: usize,
    u: &[BigRational],
    v: &[BigRational],
    limits: &Limits,
) -> Result<BigRational> {
    let mut total = BigRational::zero();
    for_each_colored_placement(n, k, limits, |g| {
        let mut term = BigRational::one();
        for i in 1..n {
            let (a, b) = g.pair(i);
            term *= if a > i { &u[b - 1] } else { &v[b - 1] };
        }
        total += term;
        Ok(())
    })?;
    Ok(total)
}

/// `Σ_{n>=1} G_{n,k}(u,v) x^n / n!` to the given order.
fn gessel_egf(
    k: usize,
    u: &[BigRational],
    v: &[BigRational],
    order: usize,
    limits: &Limits,
) -> Result<TruncatedSeries> {
    let mut coeffs = vec![BigRational::zero(); order + 1];
    let mut factorial = BigRational::one();
    for (n, c) in coeffs.iter_mut().enumerate().skip(1) {
        factorial *= rat(n as i64);
        *c = gessel_value(n, k, u, v, limits)? / &factorial;
    }
    Ok(TruncatedSeries::from_coeffs(coeffs))
}

/// Outcome of an identity check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VerifyStatus {
    Pass,
    Fail,
}

/// Machine-readable result of a series identity check:
/// `{"identity":"...","order":N,"status":"pass","first_mismatch":null}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity: String,
    pub order: usize,
    pub status: VerifyStatus,
    pub first_mismatch: Option<usize>,
}

impl IdentityReport {
    fn new(identity: &str, order: usize, first_mismatch: Option<usize>) -> Self {
        IdentityReport {
            identity: identity.to_string(),
            order,
            status: if first_mismatch.is_none() {
                VerifyStatus::Pass
            } else {
                VerifyStatus::Fail
            },
            first_mismatch,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == VerifyStatus::Pass
    }
}

/// Index of the lowest differing coefficient, if any.
fn first_diff(a: &TruncatedSeries, b: &TruncatedSeries) -> Option<usize> {
    let n = a.order().min(b.order());
    (0..=n).find(|&i| a.coeffs[i] != b.coeffs[i])
}

/// Checks that the ltree EGF coefficients match the closed form (always)
/// and direct tree enumeration (where the enumeration cap allows), under
/// the default caps.
pub fn verify_ltree_egf(k: usize, order: usize) -> Result<IdentityReport> {
    verify_ltree_egf_with(k, order, &Limits::default())
}

/// The ltree EGF check with explicit caps; `order <= MAX_SERIES_ORDER`.
pub fn verify_ltree_egf_with(k: usize, order: usize, limits: &Limits) -> Result<IdentityReport> {
    if order > MAX_SERIES_ORDER {
        return Err(limit(format!(
            "ltree-egf supports order <= {MAX_SERIES_ORDER}, got {order}"
        )));
    }
    let egf = ltree_egf(k, order)?;
    let mut factorial = BigRational::one();
    let mut mismatch = None;
    for n in 1..=order {
        factorial *= rat(n as i64);
        let from_series = egf.coeff(n) * &factorial;
        let formula = BigRational::from_integer(ltree_count_formula(n, k)?);
        if from_series != formula {
            mismatch = Some(n);
            break;
        }
        match count_class_with(n, k, TreeClass::Ltree, limits) {
            Ok(count) => {
                if BigRational::from_integer(count) != formula {
                    mismatch = Some(n);
                    break;
                }
            }
            // Enumeration past the cap is skipped; the closed form above
            // still pins the coefficient.
            Err(crate::Error::ResourceLimit(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(IdentityReport::new("ltree-egf", order, mismatch))
}

/// Checks `f² = exp(x (f^{k-2} + f^{k-1}))` for `f = 1 + Σ l_{n,k} x^n/n!`.
pub fn verify_f_equation(k: usize, order: usize) -> Result<IdentityReport> {
    if order > MAX_SERIES_ORDER {
        return Err(limit(format!(
            "f-equation supports order <= {MAX_SERIES_ORDER}, got {order}"
        )));
    }
    let n = order.max(1);
    let f = TruncatedSeries::one(n).add(&ltree_egf(k, n)?);
    let lhs = f.mul(&f);
    let sum = f.powi((k - 2) as u32).add(&f.powi((k - 1) as u32));
    let rhs = TruncatedSeries::x(n).mul(&sum).exp()?;
    let mismatch = first_diff(&lhs.truncate(order), &rhs.truncate(order));
    Ok(IdentityReport::new("f-equation", order, mismatch))
}

/// Checks Drake's compositional-inverse identity at numeric parameters,
/// under the default caps.
pub fn verify_drake_inverse(
    k: usize,
    u: &[BigRational],
    v: &[BigRational],
    order: usize,
) -> Result<IdentityReport> {
    verify_drake_inverse_with(k, u, v, order, &Limits::default())
}

/// Drake's identity with explicit caps; `order <= MAX_GESSEL_ORDER`.
pub fn verify_drake_inverse_with(
    k: usize,
    u: &[BigRational],
    v: &[BigRational],
    order: usize,
    limits: &Limits,
) -> Result<IdentityReport> {
    if k < 2 {
        return Err(invalid("Drake's identity requires k >= 2"));
    }
    if u.len() != k || v.len() != k {
        return Err(invalid(format!("need exactly k = {k} values in each of u and v")));
    }
    if order > MAX_GESSEL_ORDER {
        return Err(limit(format!(
            "drake supports order <= {MAX_GESSEL_ORDER}, got {order}"
        )));
    }
    if k > 2 {
        for i in 0..k {
            if u[i] == v[i] {
                return Err(invalid(format!(
                    "non-generic parameters: v{0} = u{0} makes (v{0}-u{0})^{1} vanish",
                    i + 1,
                    k - 2
                )));
            }
        }
    }
    let n = order.max(1);
    // H = Σ_i (v_i-u_i)^{k-2} log((1+v_i x)/(1+u_i x)) Π_{j≠i} 1/Z_ij.
    let linear = |c: &BigRational| -> TruncatedSeries {
        let mut s = TruncatedSeries::one(n);
        s.coeffs[1] = c.clone();
        s
    };
    let mut h = TruncatedSeries::zero(n);
    for i in 0..k {
        let mut weight = BigRational::one();
        for _ in 0..k - 2 {
            weight *= &v[i] - &u[i];
        }
        let mut term = linear(&v[i]).log()?.sub(&linear(&u[i]).log()?).scale(&weight);
        for j in 0..k {
            if j == i {
                continue;
            }
            // Z(v_i, u_i, v_j, u_j) = (v_i u_j - u_i v_j) x
            //                         + (v_i - v_j) - (u_i - u_j).
            let constant = (&v[i] - &v[j]) - (&u[i] - &u[j]);
            if constant.is_zero() {
                return Err(invalid(format!(
                    "non-generic parameters: Z(v{0},u{0},v{1},u{1}) has zero constant term",
                    i + 1,
                    j + 1
                )));
            }
            let mut z = TruncatedSeries::zero(n);
            z.coeffs[0] = constant;
            z.coeffs[1] = &v[i] * &u[j] - &u[i] * &v[j];
            term = term.mul(&z.inverse()?);
        }
        h = h.add(&term);
    }
    let p = gessel_egf(k, u, v, n, limits)?;
    let mismatch = first_diff(
        &h.compose(&p)?.truncate(order),
        &TruncatedSeries::x(n).truncate(order),
    );
    Ok(IdentityReport::new("drake", order, mismatch))
}

/// Checks the two-color Gessel functional equation, under the default caps.
pub fn verify_gessel_k2_equation(
    u1: &BigRational,
    u2: &BigRational,
    v1: &BigRational,
    v2: &BigRational,
    order: usize,
) -> Result<IdentityReport> {
    verify_gessel_k2_equation_with(u1, u2, v1, v2, order, &Limits::default())
}

/// The k = 2 functional equation with explicit caps;
/// `order <= MAX_GESSEL_ORDER`.
pub fn verify_gessel_k2_equation_with(
    u1: &BigRational,
    u2: &BigRational,
    v1: &BigRational,
    v2: &BigRational,
    order: usize,
    limits: &Limits,
) -> Result<IdentityReport> {
    if order > MAX_GESSEL_ORDER {
        return Err(limit(format!(
            "gessel-k2 supports order <= {MAX_GESSEL_ORDER}, got {order}"
        )));
    }
    let n = order.max(1);
    let u = [u1.clone(), u2.clone()];
    let v = [v1.clone(), v2.clone()];
    let b = gessel_egf(2, &u, &v, n, limits)?;
    let one = TruncatedSeries::one(n);
    let shifted = |c: &BigRational| one.add(&b.scale(c));
    // (1+v₁B)(1+u₂B) = (1+v₂B)(1+u₁B) e^{((v₁u₂-v₂u₁)B + v₁-v₂-u₁+u₂) x}.
    let lhs = shifted(v1).mul(&shifted(u2));
    let mut bracket = b.scale(&(v1 * u2 - v2 * u1));
    bracket.coeffs[0] += v1 - v2 - u1 + u2;
    let exponential = TruncatedSeries::x(n).mul(&bracket).exp()?;
    let rhs = shifted(v2).mul(&shifted(u1)).mul(&exponential);
    let mismatch = first_diff(&lhs.truncate(order), &rhs.truncate(order));
    Ok(IdentityReport::new("gessel-k2", order, mismatch))
}

/// Convenience used by the CLI and the aggregate verifier: a failed report
/// is turned into a verification error naming the identity.
pub fn require_pass(report: &IdentityReport) -> Result<()> {
    if report.passed() {
        Ok(())
    } else {
        Err(verification(format!(
            "identity {} fails at order {} (first mismatch at x^{})",
            report.identity,
            report.order,
            report.first_mismatch.unwrap_or_default()
        )))
    }
}
