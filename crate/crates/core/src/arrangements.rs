//! Truncated affine hyperplane arrangements: characteristic polynomials,
//! region counts, and bounded-region sequences.
//!
//! For nonnegative integers `a, b` with `a + b >= 2`, the truncated affine
//! arrangement `A^{a,b}_{n-1}` consists of the hyperplanes
//!
//! `x_i - x_j = -a+1, ..., b-1` for `1 <= i < j <= n`,
//!
//! viewed as an essential arrangement in the quotient `V_{n-1}` where
//! coordinates are pinned by `x_n = 0`.  Its characteristic polynomial
//! `χ(q)` is monic of degree `n-1`.  Three families have closed forms: the
//! braid case `(1,1)` with `χ = (q-1)...(q-n+1)`, the Shi case `(1,2)` with
//! `χ = (q-n)^{n-1}`, and the extended Linial family `(a-1, a+1)` where
//! `χ(q) = (-1)^{n-1} R(1 + (a-1)n - q, L_{0,n})` ties `χ` to the factorial
//! polynomial of a Linial board.  Everything else (and, as an independent
//! oracle, everything) is computable by the finite-field method: for a
//! prime `q` larger than every hyperplane offset, `χ(q)` equals the number
//! of points of `(Z_q)^{n-1}` avoiding all hyperplanes, so interpolating
//! exact counts at `n` primes recovers the polynomial.
//!
//! Zaslavsky's theorem converts `χ` into geometry: the arrangement cuts
//! `V_{n-1}` into `(-1)^{n-1} χ(-1)` regions, of which
//! `(-1)^{n-1} χ(1)` are bounded.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::boards::linial_factorial_poly;
use crate::error::{invalid, limit, Result};
use crate::poly::{interpolate, PolyJson};
use crate::{IntPoly, Limits};

/// Largest `n` accepted by the finite-field oracle (cost grows like
/// `q^{n-1}` per prime).
pub const MAX_FINITE_FIELD_N: usize = 6;

/// Largest `n_max` accepted by `bounded_region_sequence`.
pub const MAX_SEQUENCE_N: usize = 12;

/// Parameters of a truncated affine arrangement `A^{a,b}_{n-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TruncatedAffineSpec {
    n: usize,
    a: u32,
    b: u32,
}

impl TruncatedAffineSpec {
    /// Validates `n >= 2` and `a + b >= 2`.
    pub fn new(n: usize, a: u32, b: u32) -> Result<Self> {
        if n < 2 {
            return Err(invalid("truncated affine arrangements require n >= 2"));
        }
        if a + b < 2 {
            return Err(invalid("truncated affine arrangements require a + b >= 2"));
        }
        Ok(TruncatedAffineSpec { n, a, b })
    }

    /// The extended Linial arrangement `ℒ_{n-1,a} = A^{a-1,a+1}_{n-1}`,
    /// `a >= 1`.
    pub fn linial(n: usize, a: u32) -> Result<Self> {
        if a < 1 {
            return Err(invalid("the extended Linial family requires a >= 1"));
        }
        TruncatedAffineSpec::new(n, a - 1, a + 1)
    }

    /// The extended Catalan arrangement `A^{a,a}_{n-1}`, `a >= 1`.
    pub fn catalan(n: usize, a: u32) -> Result<Self> {
        if a < 1 {
            return Err(invalid("the extended Catalan family requires a >= 1"));
        }
        TruncatedAffineSpec::new(n, a, a)
    }

    /// The extended Shi arrangement `A^{a,a+1}_{n-1}`, `a >= 1`.
    pub fn shi(n: usize, a: u32) -> Result<Self> {
        if a < 1 {
            return Err(invalid("the extended Shi family requires a >= 1"));
        }
        TruncatedAffineSpec::new(n, a, a + 1)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    /// The hyperplane offsets `-a+1, ..., b-1`.
    pub fn offsets(&self) -> impl Iterator<Item = i64> {
        (1 - self.a as i64)..=(self.b as i64 - 1)
    }
}

/// Which route computes a characteristic polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CharpolyMethod {
    /// Closed forms for the braid, Shi, and extended Linial families.
    Formula,
    /// Point counting over `n` primes plus exact interpolation.
    FiniteField,
}

/// The characteristic polynomial from the closed forms.
///
/// Supported: `(1,1)`, `(1,2)`, and the Linial family `b = a + 2`.  Other
/// parameters return an error pointing at the finite-field method.
pub fn charpoly_formula(spec: &TruncatedAffineSpec) -> Result<IntPoly> {
    let n = spec.n;
    let (a, b) = (spec.a, spec.b);
    if (a, b) == (1, 1) {
        // Braid: (q-1)(q-2)...(q-n+1).
        let mut chi = IntPoly::one();
        for i in 1..n {
            chi = &chi * &IntPoly::from_coeffs(vec![BigInt::from(-(i as i64)), BigInt::one()]);
        }
        return Ok(chi);
    }
    if (a, b) == (1, 2) {
        // Shi: (q-n)^{n-1}.
        let linear = IntPoly::from_coeffs(vec![BigInt::from(-(n as i64)), BigInt::one()]);
        return Ok(linear.pow((n - 1) as u32));
    }
    if b == a + 2 {
        // Extended Linial with parameter a+1:
        // χ(q) = (-1)^{n-1} R(1 + a n - q, L_{0,n}).
        let base = BigInt::from((a as i64) * (n as i64) + 1);
        let composed = linial_factorial_poly(n)?.compose_linear(&BigInt::from(-1), &base);
        let sign = if (n - 1).is_multiple_of(2) {
            BigInt::one()
        } else {
            -BigInt::one()
        };
        return Ok(composed.scale(&sign));
    }
    Err(invalid(format!(
        "no closed form for (a, b) = ({a}, {b}); use the finite-field method"
    )))
}

fn is_prime(m: u64) -> bool {
    if m < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The first `count` primes strictly greater than `lower`.
fn primes_above(lower: u64, count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut m = lower + 1;
    while out.len() < count {
        if is_prime(m) {
            out.push(m);
        }
        m += 1;
    }
    out
}

/// Counts points of `(Z_q)^{n-1}` (with `x_n = 0`) avoiding every
/// hyperplane `x_i - x_j = c`, `c` an offset of the spec, `i < j`.
///
/// The outermost coordinate is striped across the available threads; each
/// thread runs a pruned depth-first count and the partial sums are added.
fn count_points(spec: &TruncatedAffineSpec, q: u64) -> u64 {
    let mut forbidden = vec![false; q as usize];
    for c in spec.offsets() {
        forbidden[c.rem_euclid(q as i64) as usize] = true;
    }
    let vars = spec.n - 1;

    fn dfs(q: u64, forbidden: &[bool], vals: &mut Vec<u64>, remaining: usize) -> u64 {
        if remaining == 0 {
            return 1;
        }
        let mut total = 0;
        // The new value x plays the later index j: reject x_j - x_n = x and
        // x_i - x_j = y - x landing on a forbidden offset.
        'next: for x in 0..q {
            if forbidden[x as usize] {
                continue;
            }
            for &y in vals.iter() {
                if forbidden[((y + q - x) % q) as usize] {
                    continue 'next;
                }
            }
            vals.push(x);
            total += dfs(q, forbidden, vals, remaining - 1);
            vals.pop();
        }
        total
    }

    let threads = std::thread::available_parallelism()
        .map(|p| p.get())
        .unwrap_or(1)
        .min(q as usize)
        .max(1);
    let forbidden = &forbidden;
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..threads as u64)
            .map(|t| {
                scope.spawn(move || {
                    let mut total = 0u64;
                    let mut vals = Vec::with_capacity(vars);
                    let mut x = t;
                    while x < q {
                        if !forbidden[x as usize] {
                            vals.push(x);
                            total += dfs(q, forbidden, &mut vals, vars - 1);
                            vals.pop();
                        }
                        x += threads as u64;
                    }
                    total
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("point-counting thread panicked"))
            .sum()
    })
}

/// Interpolates `χ` through exact point counts at the given primes, then
/// asserts the result is an integer, monic, degree-`n-1` polynomial.
///
/// Exposed so tests can drive disjoint prime sets; `primes` must hold `n`
/// distinct primes, each exceeding `(a + b) n`.
pub fn charpoly_finite_field_with_primes(
    spec: &TruncatedAffineSpec,
    primes: &[u64],
) -> Result<IntPoly> {
    let n = spec.n;
    if n > MAX_FINITE_FIELD_N {
        return Err(limit(format!(
            "finite-field method supports n <= {MAX_FINITE_FIELD_N}, got {n}"
        )));
    }
    if primes.len() != n {
        return Err(invalid(format!("need exactly {n} primes, got {}", primes.len())));
    }
    let floor = (spec.a as u64 + spec.b as u64) * n as u64;
    for &q in primes {
        if !is_prime(q) || q <= floor {
            return Err(invalid(format!("{q} is not a prime above {floor}")));
        }
    }
    let points: Vec<(BigRational, BigRational)> = primes
        .iter()
        .map(|&q| {
            (
                BigRational::from_integer(BigInt::from(q)),
                BigRational::from_integer(BigInt::from(count_points(spec, q))),
            )
        })
        .collect();
    let chi = interpolate(&points)?
        .to_integer()
        .unwrap_or_else(|| panic!("finite-field χ for {spec:?} interpolated to non-integer coefficients"));
    if chi.degree() != Some(n - 1) || chi.leading() != Some(&BigInt::one()) {
        panic!("finite-field χ for {spec:?} is not monic of degree {}: {chi}", n - 1);
    }
    Ok(chi)
}

/// The characteristic polynomial by the finite-field method.
///
/// Counts points at `2n` primes above `(a + b) n`, interpolates each half
/// separately, and insists the two polynomials agree — a runtime guard
/// against primes interacting with the arrangement.
pub fn charpoly_finite_field(spec: &TruncatedAffineSpec) -> Result<IntPoly> {
    let n = spec.n;
    if n > MAX_FINITE_FIELD_N {
        return Err(limit(format!(
            "finite-field method supports n <= {MAX_FINITE_FIELD_N}, got {n}"
        )));
    }
    let floor = (spec.a as u64 + spec.b as u64) * n as u64;
    let primes = primes_above(floor, 2 * n);
    let first = charpoly_finite_field_with_primes(spec, &primes[..n])?;
    let second = charpoly_finite_field_with_primes(spec, &primes[n..])?;
    if first != second {
        panic!(
            "finite-field χ for {spec:?} differs across prime sets: {first} vs {second}"
        );
    }
    Ok(first)
}

/// The characteristic polynomial by the requested route.
pub fn charpoly(spec: &TruncatedAffineSpec, method: CharpolyMethod) -> Result<IntPoly> {
    match method {
        CharpolyMethod::Formula => charpoly_formula(spec),
        CharpolyMethod::FiniteField => charpoly_finite_field(spec),
    }
}

/// Zaslavsky's evaluations of a degree-`n-1` characteristic polynomial:
/// `(regions, bounded) = ((-1)^{n-1} χ(-1), (-1)^{n-1} χ(1))`.
pub fn zaslavsky_counts(n: usize, chi: &IntPoly) -> (BigInt, BigInt) {
    let sign = if (n - 1).is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    let regions = &sign * chi.eval(&BigInt::from(-1));
    let bounded = &sign * chi.eval(&BigInt::one());
    assert!(
        regions >= bounded && bounded >= BigInt::from(0),
        "Zaslavsky counts out of order for χ = {chi}: regions {regions}, bounded {bounded}"
    );
    (regions, bounded)
}

/// Region and bounded-region counts of the arrangement.
pub fn region_counts(
    spec: &TruncatedAffineSpec,
    method: CharpolyMethod,
) -> Result<(BigInt, BigInt)> {
    let chi = charpoly(spec, method)?;
    Ok(zaslavsky_counts(spec.n, &chi))
}

/// Number of regions of the arrangement.
pub fn regions(spec: &TruncatedAffineSpec, method: CharpolyMethod) -> Result<BigInt> {
    Ok(region_counts(spec, method)?.0)
}

/// Number of bounded regions of the arrangement.
pub fn bounded_regions(spec: &TruncatedAffineSpec, method: CharpolyMethod) -> Result<BigInt> {
    Ok(region_counts(spec, method)?.1)
}

/// Bounded-region counts of the extended Linial family `ℒ_{n-1,a}` for
/// `n = 1, ..., n_max`, via `b = R((a-1) n, L_{0,n})`.
///
/// The `n = 1` entry is 0 by convention (an empty arrangement on a point
/// has no bounded region in this bookkeeping), matching the published
/// sequence 0, 0, 1, 4, 26, 212, ... at `a = 1`.
pub fn bounded_region_sequence(a: u32, n_max: usize) -> Result<Vec<BigInt>> {
    if a < 1 {
        return Err(invalid("the extended Linial family requires a >= 1"));
    }
    if n_max > MAX_SEQUENCE_N {
        return Err(limit(format!(
            "bounded_region_sequence supports n_max <= {MAX_SEQUENCE_N}, got {n_max}"
        )));
    }
    let mut out = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        if n == 1 {
            out.push(BigInt::from(0));
            continue;
        }
        let t = BigInt::from((a as i64 - 1) * n as i64);
        out.push(linial_factorial_poly(n)?.eval(&t));
    }
    Ok(out)
}

/// Which region statistic a sequence family encodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundType {
    Regions,
    Bounded,
}

/// Counts sequences `(x_1, ..., x_{n-1})` with `1 <= x_i <= an` (regions)
/// or `1 <= x_i <= an - 2` (bounded) such that the values `x_i + i` are
/// pairwise distinct, under the default caps.
///
/// For the extended Linial family these counts equal the region and
/// bounded-region counts of `ℒ_{n-1,a}`.
pub fn sequence_count(n: usize, a: u32, bound: BoundType) -> Result<BigInt> {
    sequence_count_with(n, a, bound, &Limits::default())
}

/// Counts the region/bounded-region sequences; `(an)^{n-1}` must not exceed
/// `limits.max_enum`.
pub fn sequence_count_with(n: usize, a: u32, bound: BoundType, limits: &Limits) -> Result<BigInt> {
    if n < 2 {
        return Err(invalid("sequence counting requires n >= 2"));
    }
    if a < 1 {
        return Err(invalid("sequence counting requires a >= 1"));
    }
    let upper = match bound {
        BoundType::Regions => a as usize * n,
        BoundType::Bounded => a as usize * n - 2,
    };
    let raw = (upper as u128).checked_pow((n - 1) as u32);
    match raw {
        Some(total) if total <= limits.max_enum as u128 => {}
        _ => {
            return Err(limit(format!(
                "{upper}^{} candidate sequences exceed cap {}",
                n - 1,
                limits.max_enum
            )))
        }
    }
    // x_i + i ranges over 2 ..= upper + n - 1.
    let mut used = vec![false; upper + n];
    fn dfs(i: usize, n: usize, upper: usize, used: &mut Vec<bool>) -> u64 {
        if i == n {
            return 1;
        }
        let mut total = 0;
        for x in 1..=upper {
            if !used[x + i] {
                used[x + i] = true;
                total += dfs(i + 1, n, upper, used);
                used[x + i] = false;
            }
        }
        total
    }
    Ok(BigInt::from(dfs(1, n, upper, &mut used)))
}

/// CLI-facing JSON report:
/// `{"n":4,"a":0,"b":2,"chi":{...},"regions":"36","bounded":"4"}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ArrangementReportJson {
    pub n: usize,
    pub a: u32,
    pub b: u32,
    pub chi: PolyJson,
    pub regions: String,
    pub bounded: String,
}

impl ArrangementReportJson {
    /// Assembles the report from a spec and its characteristic polynomial.
    pub fn new(spec: &TruncatedAffineSpec, chi: &IntPoly) -> Self {
        let (regions, bounded) = zaslavsky_counts(spec.n, chi);
        ArrangementReportJson {
            n: spec.n,
            a: spec.a,
            b: spec.b,
            chi: PolyJson::from_poly(chi, "q"),
            regions: regions.to_string(),
            bounded: bounded.to_string(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boards::{catalan_board, factorial_polynomial, shi_board};
    use crate::partitions::partition_lattice_sum;
    use crate::poly::Poly;
    use crate::trees::ltree_count_formula;

    fn int_poly(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn spec_validation_and_families() {
        assert!(TruncatedAffineSpec::new(1, 1, 1).is_err());
        assert!(TruncatedAffineSpec::new(3, 0, 1).is_err());
        assert!(TruncatedAffineSpec::new(3, 1, 1).is_ok());
        let lin = TruncatedAffineSpec::linial(4, 1).unwrap();
        assert_eq!((lin.a(), lin.b()), (0, 2));
        let cat = TruncatedAffineSpec::catalan(4, 2).unwrap();
        assert_eq!((cat.a(), cat.b()), (2, 2));
        let shi = TruncatedAffineSpec::shi(4, 1).unwrap();
        assert_eq!((shi.a(), shi.b()), (1, 2));
        assert!(TruncatedAffineSpec::linial(4, 0).is_err());
        assert_eq!(
            TruncatedAffineSpec::new(3, 2, 4).unwrap().offsets().collect::<Vec<_>>(),
            vec![-1, 0, 1, 2, 3]
        );
    }

    #[test]
    fn charpoly_formula_golden_values() {
        // χ²_{0,2} = q² - 3q + 3.
        let chi = charpoly_formula(&TruncatedAffineSpec::new(3, 0, 2).unwrap()).unwrap();
        assert_eq!(chi, int_poly(&[3, -3, 1]));
        // Shi: (q-3)².
        let chi = charpoly_formula(&TruncatedAffineSpec::new(3, 1, 2).unwrap()).unwrap();
        assert_eq!(chi, int_poly(&[9, -6, 1]));
        // Braid: (q-1)(q-2).
        let chi = charpoly_formula(&TruncatedAffineSpec::new(3, 1, 1).unwrap()).unwrap();
        assert_eq!(chi, int_poly(&[2, -3, 1]));
        // Second Linial family member, n = 2: χ = q - 3.
        let chi = charpoly_formula(&TruncatedAffineSpec::new(2, 1, 3).unwrap()).unwrap();
        assert_eq!(chi, int_poly(&[-3, 1]));
    }

    #[test]
    fn charpoly_formula_rejects_unsupported_families() {
        let err = charpoly_formula(&TruncatedAffineSpec::new(3, 2, 2).unwrap()).unwrap_err();
        assert!(err.to_string().contains("finite-field"), "{err}");
    }

    #[test]
    fn finite_field_matches_formula_on_small_cases() {
        for (a, b) in [(1, 1), (1, 2), (0, 2), (1, 3), (2, 4)] {
            for n in 2..=4 {
                let spec = TruncatedAffineSpec::new(n, a, b).unwrap();
                let formula = charpoly_formula(&spec).unwrap();
                let counted = charpoly_finite_field(&spec).unwrap();
                assert_eq!(formula, counted, "(a,b)=({a},{b}), n={n}");
            }
        }
    }

    #[test]
    fn finite_field_braid_and_linial_sanity() {
        let spec = TruncatedAffineSpec::new(3, 1, 1).unwrap();
        assert_eq!(charpoly_finite_field(&spec).unwrap(), int_poly(&[2, -3, 1]));
        // n=4 Linial: χ = -R(1-q, L_{0,4}) expanded.
        let spec = TruncatedAffineSpec::new(4, 0, 2).unwrap();
        let expected = linial_factorial_poly(4)
            .unwrap()
            .compose_linear(&BigInt::from(-1), &BigInt::one())
            .scale(&BigInt::from(-1));
        assert_eq!(charpoly_finite_field(&spec).unwrap(), expected);
    }

    #[test]
    fn finite_field_is_prime_set_independent() {
        for (n, a, b) in [(3, 1, 2), (4, 0, 2)] {
            let spec = TruncatedAffineSpec::new(n, a, b).unwrap();
            let floor = (a as u64 + b as u64) * n as u64;
            let primes = primes_above(floor, 2 * n);
            let first = charpoly_finite_field_with_primes(&spec, &primes[..n]).unwrap();
            let second = charpoly_finite_field_with_primes(&spec, &primes[n..]).unwrap();
            assert_eq!(first, second);
        }
        // Bad prime lists are rejected up front.
        let spec = TruncatedAffineSpec::new(3, 1, 2).unwrap();
        assert!(charpoly_finite_field_with_primes(&spec, &[11, 13]).is_err());
        assert!(charpoly_finite_field_with_primes(&spec, &[8, 11, 13]).is_err());
        assert!(charpoly_finite_field_with_primes(&spec, &[5, 11, 13]).is_err());
    }

    #[test]
    fn finite_field_caps_n() {
        let spec = TruncatedAffineSpec::new(7, 1, 1).unwrap();
        assert!(matches!(
            charpoly_finite_field(&spec),
            Err(crate::Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn linial_region_goldens() {
        let expect = [(2usize, 2i64, 0i64), (3, 7, 1), (4, 36, 4)];
        for (n, r, b) in expect {
            let spec = TruncatedAffineSpec::linial(n, 1).unwrap();
            let (regions, bounded) = region_counts(&spec, CharpolyMethod::Formula).unwrap();
            assert_eq!(regions, BigInt::from(r), "regions at n={n}");
            assert_eq!(bounded, BigInt::from(b), "bounded at n={n}");
        }
        // The finite-field route agrees on the showcase case.
        let spec = TruncatedAffineSpec::linial(4, 1).unwrap();
        let (regions, bounded) = region_counts(&spec, CharpolyMethod::FiniteField).unwrap();
        assert_eq!((regions, bounded), (BigInt::from(36), BigInt::from(4)));
    }

    #[test]
    fn bounded_sequence_matches_published_terms() {
        let seq = bounded_region_sequence(1, 8).unwrap();
        let expected: Vec<BigInt> = [0i64, 0, 1, 4, 26, 212, 2108, 24720]
            .iter()
            .map(|&x| BigInt::from(x))
            .collect();
        assert_eq!(seq, expected);
        // a=2, n=3 entry: R(3, L_{0,3}) = 13.
        let seq = bounded_region_sequence(2, 3).unwrap();
        assert_eq!(seq[2], BigInt::from(13));
        assert!(matches!(
            bounded_region_sequence(1, 13),
            Err(crate::Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn sequence_count_goldens() {
        assert_eq!(sequence_count(4, 1, BoundType::Regions).unwrap(), BigInt::from(36));
        assert_eq!(sequence_count(2, 1, BoundType::Regions).unwrap(), BigInt::from(2));
        assert_eq!(sequence_count(4, 1, BoundType::Bounded).unwrap(), BigInt::from(4));
        assert_eq!(sequence_count(2, 1, BoundType::Bounded).unwrap(), BigInt::from(0));
    }

    #[test]
    fn sequence_count_matches_region_counts() {
        for a in 1..=2u32 {
            for n in 2..=5usize {
                let spec = TruncatedAffineSpec::linial(n, a).unwrap();
                let (regions, bounded) = region_counts(&spec, CharpolyMethod::Formula).unwrap();
                assert_eq!(
                    sequence_count(n, a, BoundType::Regions).unwrap(),
                    regions,
                    "regions at n={n}, a={a}"
                );
                assert_eq!(
                    sequence_count(n, a, BoundType::Bounded).unwrap(),
                    bounded,
                    "bounded at n={n}, a={a}"
                );
            }
        }
    }

    #[test]
    fn sequence_count_respects_caps() {
        let limits = Limits {
            max_enum: 10,
            ..Limits::default()
        };
        assert!(matches!(
            sequence_count_with(4, 1, BoundType::Regions, &limits),
            Err(crate::Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn catalan_and_shi_partition_lattice_forms() {
        // R(t, C_{0,n}) = Σ_σ μ Π_A (t + n - 2) and
        // R(t, S_{0,n}) = Σ_σ μ Π_A (t + n - 2 + min A).
        let limits = Limits::default();
        for n in 2..=6usize {
            let lhs = factorial_polynomial(&catalan_board(0, n).unwrap()).unwrap();
            let rhs = partition_lattice_sum(n - 1, &limits, |_| {
                int_poly(&[n as i64 - 2, 1])
            })
            .unwrap();
            assert_eq!(lhs, rhs, "Catalan board, n={n}");

            let lhs = factorial_polynomial(&shi_board(0, n).unwrap()).unwrap();
            let rhs = partition_lattice_sum(n - 1, &limits, |block| {
                int_poly(&[n as i64 - 2 + block[0] as i64, 1])
            })
            .unwrap();
            assert_eq!(lhs, rhs, "Shi board, n={n}");
        }
    }

    #[test]
    fn linial_charpoly_partition_lattice_form() {
        // (-1)^{n-1} χ^{a-1,a+1}(q) = Σ_σ μ Π_A (an - q - 1 + min A - max A).
        let limits = Limits::default();
        for a in 1..=2i64 {
            for n in 2..=6usize {
                let spec = TruncatedAffineSpec::linial(n, a as u32).unwrap();
                let sign = if (n - 1) % 2 == 0 { 1 } else { -1 };
                let lhs = charpoly_formula(&spec).unwrap().scale(&BigInt::from(sign));
                let rhs = partition_lattice_sum(n - 1, &limits, |block| {
                    let c = a * n as i64 - 1 + block[0] as i64 - *block.last().unwrap() as i64;
                    int_poly(&[c, -1])
                })
                .unwrap();
                assert_eq!(lhs, rhs, "n={n}, a={a}");
            }
        }
    }

    #[test]
    fn ltree_count_partition_lattice_form() {
        // |ltree_{n,2}| = Σ_σ μ Π_A (n + min A - max A).
        let limits = Limits::default();
        for n in 2..=7usize {
            let rhs = partition_lattice_sum(n - 1, &limits, |block| {
                Poly::constant(BigInt::from(
                    n as i64 + block[0] as i64 - *block.last().unwrap() as i64,
                ))
            })
            .unwrap();
            assert_eq!(
                rhs,
                Poly::constant(ltree_count_formula(n, 2).unwrap()),
                "n={n}"
            );
        }
    }

    #[test]
    fn zaslavsky_consistency_across_families() {
        // regions >= bounded >= 0 (asserted inside zaslavsky_counts).
        for n in 2..=4usize {
            for (a, b, method) in [
                (1, 1, CharpolyMethod::Formula),
                (1, 2, CharpolyMethod::Formula),
                (0, 2, CharpolyMethod::Formula),
                (1, 3, CharpolyMethod::Formula),
                (2, 2, CharpolyMethod::FiniteField),
            ] {
                let spec = TruncatedAffineSpec::new(n, a, b).unwrap();
                let (regions, bounded) = region_counts(&spec, method).unwrap();
                assert!(regions >= bounded, "(a,b)=({a},{b}), n={n}");
            }
        }
    }

    #[test]
    fn report_json_golden() {
        let spec = TruncatedAffineSpec::linial(4, 1).unwrap();
        let chi = charpoly_formula(&spec).unwrap();
        let report = ArrangementReportJson::new(&spec, &chi);
        let text = serde_json::to_string(&report).unwrap();
        assert_eq!(
            text,
            r#"{"n":4,"a":0,"b":2,"chi":{"variable":"q","coefficients":["-14","15","-6","1"]},"regions":"36","bounded":"4"}"#
        );
    }
}
