//! Aggregate cross-verification: every module invariant bundled into named
//! suites with a machine-readable pass/fail report.
//!
//! [`run_all`] executes each suite with ranges clamped to a caller-chosen
//! `max_n`, so a quick smoke run and a thorough one use the same code
//! path.  Each suite pits at least two independent routes to the same
//! quantity against each other — dynamic programming against
//! partition-lattice expansions, bijective enumeration against closed
//! forms, finite-field point counts against product formulas — and any
//! discrepancy is reported rather than panicking, letting callers print
//! the full scoreboard before failing.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::arrangements::{
    bounded_region_sequence, charpoly, charpoly_formula, region_counts, sequence_count_with,
    BoundType, CharpolyMethod, TruncatedAffineSpec,
};
use crate::bijection::{
    enumerate_colored_placements, exc_sub, gessel_polynomial_with, phi, phi_inverse, psi,
    psi_inverse, DecoratedDigraph,
};
use crate::boards::{
    catalan_board, factorial_polynomial, gjw_factorial_polynomial, linial_board,
    linial_factorial_poly, rook_numbers_with, shi_board, skew_ferrers,
};
use crate::error::{verification, Result};
use crate::graphs::{
    chromatic_polynomial, complement, linial_count_maximum_matchings, linial_graph,
    linial_matchings_by_size_with,
};
use crate::multipoly::MultiPoly;
use crate::partitions::partition_lattice_sum;
use crate::poly::{falling_factorial, interpolate, Poly};
use crate::series::{
    verify_drake_inverse_with, verify_f_equation, verify_gessel_k2_equation_with,
    verify_ltree_egf_with,
};
use crate::trees::{
    count_class_with, for_each_tree_in_class, increasing_count_formula, left_to_right_maxima,
    ltree_count_formula, TreeClass,
};
use crate::{IntPoly, Limits};

/// Outcome of one invariant suite.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SuiteReport {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn suite<F>(name: &str, body: F) -> SuiteReport
where
    F: FnOnce() -> Result<String>,
{
    match body() {
        Ok(detail) => SuiteReport {
            name: name.to_string(),
            passed: true,
            detail,
        },
        Err(e) => SuiteReport {
            name: name.to_string(),
            passed: false,
            detail: e.to_string(),
        },
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(verification(msg()))
    }
}

fn int_poly(coeffs: &[i64]) -> IntPoly {
    IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
}

fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(big(n))
}

/// A random skew Ferrers pair with the given row cap and parts at most 9.
pub fn random_skew_shape<R: Rng>(rng: &mut R, max_rows: usize) -> (Vec<u32>, Vec<u32>) {
    let rows = rng.gen_range(1..=max_rows);
    let mut lambda: Vec<u32> = (0..rows).map(|_| rng.gen_range(1..=9)).collect();
    lambda.sort_unstable_by(|a, b| b.cmp(a));
    let mut mu = Vec::with_capacity(rows);
    let mut cap = lambda[0];
    for &l in &lambda {
        cap = cap.min(l);
        let m = rng.gen_range(0..=cap);
        mu.push(m);
        cap = m;
    }
    (lambda, mu)
}

fn falling_factorial_suite(max_n: usize) -> Result<String> {
    let top = (max_n + 2).min(8);
    for j in 0..=top {
        let p = falling_factorial(j);
        for x in -2..=(j as i64 + 2) {
            let direct: BigInt = (0..j as i64).map(|i| big(x - i)).product();
            ensure(p.eval(&big(x)) == direct, || {
                format!("(x)_{j} at x={x} disagrees with the direct product")
            })?;
        }
        let points: Vec<_> = (0..=j as i64)
            .map(|x| (rat(x), BigRational::from_integer(p.eval(&big(x)))))
            .collect();
        let recovered = interpolate(&points)?.to_integer();
        ensure(recovered.as_ref() == Some(&p), || {
            format!("interpolating (x)_{j} from {} points failed to recover it", j + 1)
        })?;
    }
    Ok(format!("expanded and re-interpolated (x)_j for j <= {top}"))
}

fn gjw_equivalence_suite(max_n: usize, limits: &Limits) -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let rounds = 40;
    for round in 0..rounds {
        let (lambda, mu) = random_skew_shape(&mut rng, max_n.min(6));
        let board = skew_ferrers(&lambda, &mu)?;
        let dp = factorial_polynomial(&board)?;
        let gjw = gjw_factorial_polynomial(&board)?;
        ensure(dp == gjw, || {
            format!("round {round}: lambda={lambda:?}, mu={mu:?} splits the two routes")
        })?;
        let _ = limits;
    }
    Ok(format!("{rounds} random skew boards agree across both routes"))
}

fn linial_board_suite(max_n: usize, limits: &Limits) -> Result<String> {
    // Fixed worked example first.
    let board = linial_board(1, 4)?;
    let r = rook_numbers_with(&board, limits)?;
    ensure(
        r.counts() == [big(1), big(9), big(22), big(14)],
        || "rook vector of L_{1,4} is off".to_string(),
    )?;
    let p = factorial_polynomial(&board)?;
    ensure(p == int_poly(&[14, 15, 6, 1]), || {
        "factorial polynomial of L_{1,4} is off".to_string()
    })?;
    ensure(
        p.eval(&big(1)) == big(36) && p.eval(&big(-1)) == big(4),
        || "R(1)/R(-1) of L_{1,4} are off".to_string(),
    )?;
    // Rook DP against the closed form.
    let top = max_n.min(7);
    for n in 2..=top {
        let dp = factorial_polynomial(&linial_board(0, n)?)?;
        let closed = linial_factorial_poly(n)?;
        ensure(dp == closed, || {
            format!("R(t, L_{{0,{n}}}): DP and closed form disagree")
        })?;
    }
    Ok(format!("worked example plus closed form checked for n <= {top}"))
}

fn tree_class_suite(max_n: usize, limits: &Limits) -> Result<String> {
    let classes = [
        TreeClass::Ltree,
        TreeClass::LtreeB,
        TreeClass::Increasing,
        TreeClass::RightIncreasing,
        TreeClass::All,
    ];
    let top = max_n.min(6);
    let mut cases = 0usize;
    for k in 2..=3usize {
        for n in 1..=top {
            for class in classes {
                // Formula-backed classes cross-assert enumeration
                // internally.
                let _ = count_class_with(n, k, class, limits)?;
                cases += 1;
            }
        }
    }
    let known = [1i64, 2, 7, 36, 246, 2108];
    for (i, expected) in known.iter().take(top).enumerate() {
        ensure(
            ltree_count_formula(i + 1, 2)? == big(*expected),
            || format!("l_{{{},2}} is off", i + 1),
        )?;
    }
    Ok(format!("{cases} class counts consistent; l_{{n,2}} matches its table"))
}

fn increasing_product_suite(max_n: usize, limits: &Limits) -> Result<String> {
    let top = max_n.min(6);
    for k in 2..=3usize {
        for n in 1..=top {
            let product: BigInt = (1..n).map(|i| big(1 + (i as i64) * (k as i64 - 1))).product();
            ensure(increasing_count_formula(n, k)? == product, || {
                format!("increasing-tree product formula fails at n={n}, k={k}")
            })?;
            let counted = count_class_with(n, k, TreeClass::Increasing, limits)?;
            ensure(counted == product, || {
                format!("increasing-tree enumeration fails at n={n}, k={k}")
            })?;
        }
    }
    Ok(format!("product formula and enumeration agree for n <= {top}, k <= 3"))
}

fn phi_round_trip_suite(max_n: usize) -> Result<String> {
    let mut cases = 0usize;
    let mut pairs = vec![(2usize, 2usize), (3, 2), (4, 2), (3, 3)];
    pairs.retain(|&(n, _)| n <= max_n.max(2));
    for (n, k) in pairs {
        for g in enumerate_colored_placements(n, k)? {
            let f = phi_inverse(&g);
            ensure(phi(&f) == g, || format!("phi round trip fails at n={n}, k={k}"))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} placements survive the phi round trip"))
}

fn psi_statistics_suite(max_n: usize) -> Result<String> {
    let mut pairs = vec![(2usize, 2usize), (3, 2), (4, 2), (5, 2), (3, 3), (4, 3)];
    pairs.retain(|&(n, _)| n <= max_n.max(2));
    let mut cases = 0usize;
    for (n, k) in pairs {
        for g in enumerate_colored_placements(n, k)? {
            let tree = psi(&g);
            ensure(psi_inverse(&tree) == g, || {
                format!("psi round trip fails at n={n}, k={k}")
            })?;
            let (exc, sub) = exc_sub(&g);
            let stats = tree.statistics();
            ensure(stats.dsc == exc && stats.asc == sub, || {
                format!("statistics transport fails at n={n}, k={k}")
            })?;
            let components = DecoratedDigraph::from_placement(&g).weak_component_count();
            let records = left_to_right_maxima(&tree.spine()).len();
            ensure(components == records, || {
                format!("component/record count mismatch at n={n}, k={k}")
            })?;
            cases += 1;
        }
    }
    Ok(format!("{cases} placements survive psi, statistics, and component checks"))
}

fn gessel_vs_trees_suite(max_n: usize, limits: &Limits) -> Result<String> {
    let top = max_n.min(4);
    for k in 2..=3usize {
        for n in 1..=top {
            let from_placements = gessel_polynomial_with(n, k, limits)?;
            let mut from_trees = MultiPoly::zero(2 * k);
            for_each_tree_in_class(n, k, TreeClass::All, limits, |tree| {
                let stats = tree.statistics();
                let mut exps = vec![0u32; 2 * k];
                for j in 0..k {
                    exps[j] = stats.dsc.part(j + 1) as u32;
                    exps[k + j] = stats.asc.part(j + 1) as u32;
                }
                from_trees.add_term(&exps, BigInt::one());
                Ok(())
            })?;
            ensure(from_placements == from_trees, || {
                format!("G_{{{n},{k}}} differs between placements and trees")
            })?;
        }
    }
    Ok(format!("Gessel polynomials match tree statistics for n <= {top}, k <= 3"))
}

fn gessel_specialization_suite(max_n: usize, limits: &Limits) -> Result<String> {
    let top = max_n.min(6);
    for n in 1..=top {
        let g = gessel_polynomial_with(n, 2, limits)?;
        // Variables are ordered u1, u2, v1, v2.
        let catalan: BigInt = {
            // n! C_n = (2n)! / (n+1)!.
            let mut numer = BigInt::one();
            for i in (n + 2)..=(2 * n) {
                numer *= big(i as i64);
            }
            numer
        };
        let at = |p: &[i64]| -> Result<BigRational> {
            g.eval(&p.iter().map(|&c| rat(c)).collect::<Vec<_>>())
        };
        ensure(
            at(&[1, 1, 1, 1])? == BigRational::from_integer(catalan.clone()),
            || format!("G_{{{n},2}}(1,1,1,1) != n! C_n"),
        )?;
        let cayley = big((n as i64 + 1).pow((n as u32).saturating_sub(1)));
        ensure(
            at(&[1, 1, 1, 0])? == BigRational::from_integer(cayley),
            || format!("G_{{{n},2}}(1,1,1,0) != (n+1)^{{n-1}}"),
        )?;
        let factorial: BigInt = (1..=n as i64).map(big).product();
        ensure(
            at(&[1, 0, 1, 0])? == BigRational::from_integer(factorial),
            || format!("G_{{{n},2}}(1,0,1,0) != n!"),
        )?;
        ensure(g.swap_vars(1, 2) == g, || {
            format!("G_{{{n},2}} is not symmetric under u2 <-> v1")
        })?;
    }
    Ok(format!("four Gessel specializations hold for n <= {top}"))
}

fn charpoly_methods_suite(max_n: usize) -> Result<String> {
    let top = max_n.min(4);
    let mut cases = 0usize;
    for &(a, b) in &[(1u32, 1u32), (1, 2), (0, 2)] {
        for n in 2..=top.max(2) {
            let spec = TruncatedAffineSpec::new(n, a, b)?;
            let formula = charpoly(&spec, CharpolyMethod::Formula)?;
            let counted = charpoly(&spec, CharpolyMethod::FiniteField)?;
            ensure(formula == counted, || {
                format!("chi^{{{a},{b}}} for n={n} differs between the two methods")
            })?;
            cases += 1;
        }
    }
    Ok(format!("{cases} characteristic polynomials agree across both methods"))
}

fn linial_region_suite(max_n: usize) -> Result<String> {
    let golden = [(2usize, (2i64, 0i64)), (3, (7, 1)), (4, (36, 4))];
    for &(n, (r, b)) in &golden {
        if n > max_n.max(2) {
            break;
        }
        let spec = TruncatedAffineSpec::linial(n, 1)?;
        let (regions, bounded) = region_counts(&spec, CharpolyMethod::Formula)?;
        ensure(regions == big(r) && bounded == big(b), || {
            format!("Linial a=1, n={n}: expected ({r},{b}), got ({regions},{bounded})")
        })?;
    }
    let top = max_n.min(8);
    let expected = [0i64, 0, 1, 4, 26, 212, 2108, 24720];
    let sequence = bounded_region_sequence(1, top)?;
    for (i, value) in sequence.iter().enumerate() {
        ensure(*value == big(expected[i]), || {
            format!("bounded-region sequence entry n={} is off", i + 1)
        })?;
    }
    Ok(format!("region goldens and bounded sequence hold up to n = {top}"))
}

fn sequence_model_suite(max_n: usize, limits: &Limits) -> Result<String> {
    let top = max_n.min(5);
    let mut cases = 0usize;
    for a in 1..=2u32 {
        for n in 2..=top.max(2) {
            let spec = TruncatedAffineSpec::linial(n, a)?;
            let (regions, bounded) = region_counts(&spec, CharpolyMethod::Formula)?;
            let reg_seq = sequence_count_with(n, a, BoundType::Regions, limits)?;
            let bnd_seq = sequence_count_with(n, a, BoundType::Bounded, limits)?;
            ensure(reg_seq == regions, || {
                format!("sequence model misses regions at n={n}, a={a}")
            })?;
            ensure(bnd_seq == bounded, || {
                format!("sequence model misses bounded regions at n={n}, a={a}")
            })?;
            cases += 1;
        }
    }
    Ok(format!("{cases} sequence counts match Zaslavsky region counts"))
}

fn partition_form_suite(max_n: usize, limits: &Limits) -> Result<String> {
    let top = max_n.min(5);
    for n in 2..=top.max(2) {
        let lhs = factorial_polynomial(&catalan_board(0, n)?)?;
        let rhs = partition_lattice_sum(n - 1, limits, |_| int_poly(&[n as i64 - 2, 1]))?;
        ensure(lhs == rhs, || format!("Catalan partition form fails at n={n}"))?;

        let lhs = factorial_polynomial(&shi_board(0, n)?)?;
        let rhs = partition_lattice_sum(n - 1, limits, |block| {
            int_poly(&[n as i64 - 2 + block[0] as i64, 1])
        })?;
        ensure(lhs == rhs, || format!("Shi partition form fails at n={n}"))?;

        for a in 1..=2i64 {
            let spec = TruncatedAffineSpec::linial(n, a as u32)?;
            let sign = if (n - 1) % 2 == 0 { 1 } else { -1 };
            let lhs = charpoly_formula(&spec)?.scale(&big(sign));
            let rhs = partition_lattice_sum(n - 1, limits, |block| {
                let c = a * n as i64 - 1 + block[0] as i64 - *block.last().unwrap() as i64;
                int_poly(&[c, -1])
            })?;
            ensure(lhs == rhs, || {
                format!("extended-Linial partition form fails at n={n}, a={a}")
            })?;
        }

        let count = partition_lattice_sum(n - 1, limits, |block| {
            Poly::constant(big(n as i64 + block[0] as i64 - *block.last().unwrap() as i64))
        })?;
        ensure(
            count == Poly::constant(ltree_count_formula(n, 2)?),
            || format!("ltree partition form fails at n={n}"),
        )?;
    }
    Ok(format!("partition-lattice forms verified for n <= {}", top.max(2)))
}

fn tree_region_equalities_suite(max_n: usize, limits: &Limits) -> Result<String> {
    let top = max_n.min(5);
    let mut cases = 0usize;
    for a in 1..=2u32 {
        for n in 2..=top.max(2) {
            let spec = TruncatedAffineSpec::linial(n, a)?;
            let (regions, bounded) = region_counts(&spec, CharpolyMethod::Formula)?;
            let ltree = count_class_with(n, (a + 1) as usize, TreeClass::Ltree, limits)?;
            let rook_top = {
                let board = linial_board((a - 1) * n as u32 + 2, n)?;
                rook_numbers_with(&board, limits)?.r(n - 1).clone()
            };
            ensure(ltree == regions && rook_top == regions, || {
                format!("region-count equalities fail at n={n}, a={a}")
            })?;
            let ltree_b = count_class_with(n, (a + 1) as usize, TreeClass::LtreeB, limits)?;
            let rook_bottom = {
                let board = linial_board((a - 1) * n as u32, n)?;
                rook_numbers_with(&board, limits)?.r(n - 1).clone()
            };
            ensure(ltree_b == bounded && rook_bottom == bounded, || {
                format!("bounded-count equalities fail at n={n}, a={a}")
            })?;
            cases += 1;
        }
    }
    Ok(format!("{cases} four-way tree/rook/region equalities hold"))
}

fn chromatic_suite(max_n: usize) -> Result<String> {
    // Fixed worked example.
    let g = complement(&linial_graph(1, 3)?);
    let expected = &(&int_poly(&[0, 1]) * &int_poly(&[-1, 1]))
        * &(&int_poly(&[-2, 1]) * &int_poly(&[3, -3, 1]));
    ensure(chromatic_polynomial(&g)? == expected, || {
        "chromatic polynomial of complement(G_{1,3}) is off".to_string()
    })?;
    // Theorem form across a grid.
    let top = max_n.min(4);
    let mut cases = 0usize;
    for t in 0..=2u32 {
        for n in 2..=top.max(2) {
            if (n as i64) - 2 + (t as i64) < 1 {
                continue;
            }
            let m = 3 * n - 5 + t as usize;
            let chrom = chromatic_polynomial(&complement(&linial_graph(t, n)?))?;
            let board = linial_board(t, n)?;
            let factorial = crate::boards::factorial_polynomial_m(&board, m)?;
            ensure(chrom == factorial, || {
                format!("chromatic identity fails at t={t}, n={n}")
            })?;
            cases += 1;
        }
    }
    Ok(format!("worked example plus {cases} chromatic identities hold"))
}

fn matching_suite(max_n: usize, limits: &Limits) -> Result<String> {
    let top = max_n.min(4);
    let mut cases = 0usize;
    for t in 0..=3u32 {
        for n in 2..=top.max(2) {
            if (n as i64) - 2 + (t as i64) < 1 {
                continue;
            }
            let matchings = linial_matchings_by_size_with(t, n, limits)?;
            let rooks = rook_numbers_with(&linial_board(t, n)?, limits)?;
            ensure(matchings == rooks.counts(), || {
                format!("matchings differ from rook numbers at t={t}, n={n}")
            })?;
            cases += 1;
        }
    }
    // Maximum-matching counts against regions for the Linial family.
    for n in 2..=top.max(2) {
        let spec = TruncatedAffineSpec::linial(n, 1)?;
        let (regions, bounded) = region_counts(&spec, CharpolyMethod::Formula)?;
        let (size, count) = linial_count_maximum_matchings(2, n)?;
        ensure(size == n - 1 && count == regions, || {
            format!("maximum matchings of G_{{2,{n}}} miss the region count")
        })?;
        if n > 2 {
            let (size, count) = linial_count_maximum_matchings(0, n)?;
            ensure(size == n - 1 && count == bounded, || {
                format!("maximum matchings of G_{{0,{n}}} miss the bounded count")
            })?;
        }
    }
    Ok(format!("{cases} matching vectors match rook numbers; maxima match regions"))
}

fn series_identity_suite(max_n: usize, limits: &Limits) -> Result<String> {
    let order = max_n.min(7);
    for k in 2..=3usize {
        let report = verify_ltree_egf_with(k, order, limits)?;
        ensure(report.passed(), || format!("ltree-egf fails for k={k}"))?;
        let report = verify_f_equation(k, (max_n + 2).min(8))?;
        ensure(report.passed(), || format!("f-equation fails for k={k}"))?;
    }
    let u = [rat(1), rat(0)];
    let v = [rat(0), rat(1)];
    let report = verify_drake_inverse_with(2, &u, &v, max_n.min(4), limits)?;
    ensure(report.passed(), || "drake fails at the ltree specialization".to_string())?;
    let report =
        verify_gessel_k2_equation_with(&rat(1), &rat(1), &rat(1), &rat(1), max_n.min(5), limits)?;
    ensure(report.passed(), || "gessel-k2 fails at all-ones".to_string())?;
    Ok(format!("series identities hold to order {order}"))
}

/// Runs every invariant suite with ranges clamped to `max_n`, collecting
/// one report per suite.  `max_n` below 2 still runs each suite at its
/// minimum sensible size.
pub fn run_all(max_n: usize, limits: &Limits) -> Vec<SuiteReport> {
    vec![
        suite("poly-falling-factorial", || falling_factorial_suite(max_n)),
        suite("boards-gjw-equivalence", || gjw_equivalence_suite(max_n, limits)),
        suite("boards-linial-closed-form", || linial_board_suite(max_n, limits)),
        suite("trees-class-counts", || tree_class_suite(max_n, limits)),
        suite("trees-increasing-product", || increasing_product_suite(max_n, limits)),
        suite("bijection-phi-round-trip", || phi_round_trip_suite(max_n)),
        suite("bijection-psi-statistics", || psi_statistics_suite(max_n)),
        suite("bijection-gessel-vs-trees", || gessel_vs_trees_suite(max_n, limits)),
        suite("gessel-specializations", || gessel_specialization_suite(max_n, limits)),
        suite("arrangements-charpoly-methods", || charpoly_methods_suite(max_n)),
        suite("arrangements-linial-regions", || linial_region_suite(max_n)),
        suite("arrangements-sequence-model", || sequence_model_suite(max_n, limits)),
        suite("arrangements-partition-forms", || partition_form_suite(max_n, limits)),
        suite("tree-region-equalities", || tree_region_equalities_suite(max_n, limits)),
        suite("graphs-chromatic-identity", || chromatic_suite(max_n)),
        suite("graphs-matchings", || matching_suite(max_n, limits)),
        suite("series-identities", || series_identity_suite(max_n, limits)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_at_smoke_scale() {
        let reports = run_all(3, &Limits::default());
        assert_eq!(reports.len(), 17);
        for report in &reports {
            assert!(report.passed, "{}: {}", report.name, report.detail);
            assert!(!report.detail.is_empty());
        }
    }

    #[test]
    fn report_serializes_cleanly() {
        let report = SuiteReport {
            name: "demo".into(),
            passed: true,
            detail: "ok".into(),
        };
        let text = serde_json::to_string(&report).unwrap();
        assert_eq!(text, r#"{"name":"demo","passed":true,"detail":"ok"}"#);
    }

    #[test]
    fn random_shapes_are_valid_young_pairs() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let (lambda, mu) = random_skew_shape(&mut rng, 6);
            assert!(skew_ferrers(&lambda, &mu).is_ok(), "{lambda:?} / {mu:?}");
        }
    }
}
