//! Property suites for the algebraic laws the library is built on.
//!
//! Scalar laws are checked at a scaled log-domain tolerance: an absolute
//! 1e-12 is meaningless for quantities like (ln u)(ln v)(ln w) that reach
//! 1e5, so tolerances scale with the magnitude of the compared logs.

use bigeo::real::{gabs, gadd, gdiv, gmetric, gmul, gpow, gsub, gsum};
use bigeo::{
    apply_row, cesaro_mean_partial, classical_hermite_oracle, delta_m, divided_diff_table,
    eval_lagrange, eval_newton, membership_diagnostic, newton_coeffs, norm_inf, norm_p,
    row_modulus_prefix_sums, telescoped_partial, transform_consistency, upsilon_project,
    DerivativeSpec, GeoMatrix, GeoReal, GeoSequence, HermiteData, PExponent,
};
use proptest::prelude::*;

type G = GeoReal<f64>;

fn g(l: f64) -> G {
    G::from_log(l).unwrap()
}

/// Log-domain closeness scaled by the magnitude of the operands.
fn log_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}

fn seq(logs: &[f64]) -> GeoSequence<f64> {
    GeoSequence::from_log_terms(logs).unwrap()
}

// ---------------------------------------------------------------------------
// geometric field laws, moduli, ordering: 1000 cases each
// ---------------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn field_laws(a in -50.0..50.0f64, b in -50.0..50.0f64, c in -50.0..50.0f64) {
        let (u, v, w) = (g(a), g(b), g(c));
        // commutativity and associativity of ⊕ and ⊙
        prop_assert!(log_close(gadd(u, v).log_value(), gadd(v, u).log_value(), 1e-12));
        prop_assert!(log_close(gmul(u, v).log_value(), gmul(v, u).log_value(), 1e-12));
        prop_assert!(log_close(
            gadd(gadd(u, v), w).log_value(),
            gadd(u, gadd(v, w)).log_value(),
            1e-12
        ));
        prop_assert!(log_close(
            gmul(gmul(u, v), w).log_value(),
            gmul(u, gmul(v, w)).log_value(),
            1e-12
        ));
        // distributivity of ⊙ over ⊕
        prop_assert!(log_close(
            gmul(u, gadd(v, w)).log_value(),
            gadd(gmul(u, v), gmul(u, w)).log_value(),
            1e-12
        ));
        // identities 1 and e
        prop_assert_eq!(gadd(u, G::geometric_zero()).log_value(), a);
        prop_assert_eq!(gmul(u, G::geometric_identity()).log_value(), a);
        // additive inverse 1/u
        prop_assert!(log_close(gadd(u, -u).log_value(), 0.0, 1e-12));
        // multiplicative inverse e ⊘ u for u ≠ 1
        if a.abs() > 1e-6 {
            let inv = gdiv(G::geometric_identity(), u).unwrap();
            prop_assert!(log_close(gmul(u, inv).log_value(), 1.0, 1e-12));
        }
    }

    #[test]
    fn log_domain_oracle(a in -50.0..50.0f64, b in -50.0..50.0f64) {
        // each operation's log is exactly the classical operation on logs
        let (u, v) = (g(a), g(b));
        prop_assert_eq!(gadd(u, v).log_value(), a + b);
        prop_assert_eq!(gsub(u, v).log_value(), a - b);
        prop_assert_eq!(gmul(u, v).log_value(), a * b);
        if b != 0.0 {
            prop_assert_eq!(gdiv(u, v).unwrap().log_value(), a / b);
        }
        prop_assert_eq!(gabs(u).log_value(), a.abs());
        prop_assert_eq!(gmetric(u, v).log_value(), (a - b).abs());
    }

    #[test]
    fn modulus_laws(a in -50.0..50.0f64, b in -50.0..50.0f64, q in -6.0..6.0f64) {
        let (u, v) = (g(a), g(b));
        prop_assert!(gabs(u).log_value() >= 0.0);
        // |u ⊙ v|_G = |u|_G ⊙ |v|_G
        prop_assert!(log_close(
            gabs(gmul(u, v)).log_value(),
            gmul(gabs(u), gabs(v)).log_value(),
            1e-12
        ));
        // triangle: |u ⊕ v|_G ≤ |u|_G ⊕ |v|_G
        prop_assert!(
            gabs(gadd(u, v)).log_value() <= gabs(u).log_value() + gabs(v).log_value() + 1e-12
        );
        // |u|_G^{q_G} ≥ 1 whenever defined (u = 1 with q < 0 is the undefined corner)
        if a != 0.0 || q >= 0.0 {
            prop_assert!(gpow(gabs(u), q).unwrap().log_value() >= 0.0);
        }
    }

    #[test]
    fn ordering_matches_log_order(a in -50.0..50.0f64, b in -50.0..50.0f64) {
        let (u, v) = (g(a), g(b));
        prop_assert_eq!(u < v, a < b);
        prop_assert_eq!(u == v, a == b);
    }

    #[test]
    fn positive_real_round_trip(a in -50.0..50.0f64) {
        let u = g(a);
        let back = G::from_positive_real(u.to_positive_real()).unwrap();
        // one representable unit in the log domain
        let ulp = 2.0 * f64::EPSILON * a.abs().max(1.0);
        prop_assert!((back.log_value() - a).abs() <= ulp);
    }

    #[test]
    fn metric_axioms(a in -40.0..40.0f64, b in -40.0..40.0f64, c in -40.0..40.0f64) {
        let (x, y, z) = (g(a), g(b), g(c));
        prop_assert_eq!(gmetric(x, y).log_value(), gmetric(y, x).log_value());
        prop_assert_eq!(gmetric(x, x).log_value(), 0.0);
        // geometric triangle inequality d(x,z) ≤ d(x,y) ⊕ d(y,z)
        prop_assert!(
            gmetric(x, z).log_value()
                <= gmetric(x, y).log_value() + gmetric(y, z).log_value() + 1e-12
        );
    }
}

// ---------------------------------------------------------------------------
// difference operators
// ---------------------------------------------------------------------------

/// Independent oracle: repeated first differencing of the log sequence.
fn repeated_diff_oracle(logs: &[f64], m: usize, k: usize) -> f64 {
    let mut d = logs.to_vec();
    for _ in 0..m {
        for i in 0..d.len() - 1 {
            d[i] -= d[i + 1];
        }
        d.pop();
    }
    d[k - 1]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn delta_matches_repeated_differencing(
        logs in prop::collection::vec(-5.0..5.0f64, 8..64),
        m in 0usize..=6,
        kseed in 0usize..1000,
    ) {
        let x = seq(&logs);
        let kmax = logs.len() - m;
        let k = 1 + kseed % kmax;
        let got = delta_m(&x, m, k).unwrap().log_value();
        let want = repeated_diff_oracle(&logs, m, k);
        prop_assert!((got - want).abs() <= 1e-10, "got {got}, oracle {want}");
    }

    #[test]
    fn delta_binomial_equals_recursive_form(
        logs in prop::collection::vec(-5.0..5.0f64, 8..32),
        m in 1usize..=5,
        kseed in 0usize..1000,
    ) {
        // Δ_G^m x_k = Δ_G^{m-1}(x_k ⊖ x_{k+1})
        let x = seq(&logs);
        let k = 1 + kseed % (logs.len() - m);
        let ratio: Vec<f64> = logs.windows(2).map(|w| w[0] - w[1]).collect();
        let r = seq(&ratio);
        let got = delta_m(&x, m, k).unwrap().log_value();
        let want = delta_m(&r, m - 1, k).unwrap().log_value();
        prop_assert!((got - want).abs() <= 1e-10);
    }

    #[test]
    fn delta_is_linear(
        xs in prop::collection::vec(-4.0..4.0f64, 10..24),
        ys in prop::collection::vec(-4.0..4.0f64, 10..24),
        a in -3.0..3.0f64,
        b in -3.0..3.0f64,
        m in 1usize..=4,
    ) {
        let len = xs.len().min(ys.len());
        let combined: Vec<f64> = (0..len).map(|i| a * xs[i] + b * ys[i]).collect();
        let (x, y, z) = (seq(&xs[..len]), seq(&ys[..len]), seq(&combined));
        for k in 1..=(len - m) {
            let lhs = delta_m(&z, m, k).unwrap().log_value();
            let rhs = a * delta_m(&x, m, k).unwrap().log_value()
                + b * delta_m(&y, m, k).unwrap().log_value();
            prop_assert!(log_close(lhs, rhs, 1e-12));
        }
    }

    #[test]
    fn telescoping_identity(
        logs in prop::collection::vec(-5.0..5.0f64, 10..32),
        m in 1usize..=4,
        nseed in 0usize..1000,
    ) {
        let x = seq(&logs);
        let n = 1 + nseed % (logs.len() - m);
        let brute: Vec<G> = (1..=n).map(|k| delta_m(&x, m, k).unwrap()).collect();
        let want = gsum(&brute).log_value();
        let got = telescoped_partial(&x, m, n).unwrap().log_value();
        prop_assert!(log_close(got, want, 1e-12));
    }
}

// ---------------------------------------------------------------------------
// norms and inequality lemmas
// ---------------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn geometric_maddox(a in -20.0..20.0f64, b in -20.0..20.0f64, p in 1.0..4.0f64) {
        // |a ⊕ b|^{p_G} ≤ e^{2^{p-1}} ⊙ (|a|^{p_G} ⊕ |b|^{p_G})
        let lhs = (a + b).abs().powf(p);
        let rhs = 2.0f64.powf(p - 1.0) * (a.abs().powf(p) + b.abs().powf(p));
        prop_assert!(lhs <= rhs + 1e-9 * rhs.max(1.0));
    }

    #[test]
    fn geometric_jessen(
        logs in prop::collection::vec(-8.0..8.0f64, 1..24),
        p in 0.2..3.0f64,
        dq in 0.1..3.0f64,
    ) {
        // (_G∑ |a_k|^{q_G})^{(1/q)_G} ≤ (_G∑ |a_k|^{p_G})^{(1/p)_G} for p < q
        let q = p + dq;
        let sum_pow = |e: f64| logs.iter().map(|l| l.abs().powf(e)).sum::<f64>();
        let lhs = sum_pow(q).powf(1.0 / q);
        let rhs = sum_pow(p).powf(1.0 / p);
        prop_assert!(lhs <= rhs + 1e-9 * rhs.max(1.0));
    }

    #[test]
    fn geometric_minkowski(
        pairs in prop::collection::vec((-8.0..8.0f64, -8.0..8.0f64), 1..24),
        p in 1.0..4.0f64,
    ) {
        let lhs = pairs
            .iter()
            .map(|&(a, b)| (a + b).abs().powf(p))
            .sum::<f64>()
            .powf(1.0 / p);
        let rhs = pairs.iter().map(|&(a, _)| a.abs().powf(p)).sum::<f64>().powf(1.0 / p)
            + pairs.iter().map(|&(_, b)| b.abs().powf(p)).sum::<f64>().powf(1.0 / p);
        prop_assert!(lhs <= rhs + 1e-9 * rhs.max(1.0));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn norm_axioms(
        logs in prop::collection::vec(-4.0..4.0f64, 12..40),
        other in prop::collection::vec(-4.0..4.0f64, 12..40),
        m in 1usize..=3,
        p in 1.0..4.0f64,
        a in -5.0..5.0f64,
    ) {
        let len = logs.len().min(other.len());
        let trunc = len - m;
        let x = seq(&logs[..len]);
        let y = seq(&other[..len]);
        let nx = norm_p(&x, m, p, trunc).unwrap();
        // positivity
        prop_assert!(nx.total().log_value() >= 0.0);
        prop_assert!(nx.head_term().log_value() >= 0.0);
        prop_assert!(nx.tail_term().log_value() >= 0.0);
        // absolute homogeneity under scalar ⊙
        let scaled: Vec<f64> = logs[..len].iter().map(|l| a * l).collect();
        let ns = norm_p(&seq(&scaled), m, p, trunc).unwrap();
        prop_assert!(log_close(
            ns.total().log_value(),
            a.abs() * nx.total().log_value(),
            1e-9
        ));
        // triangle inequality under vector ⊕
        let summed: Vec<f64> = (0..len).map(|i| logs[i] + other[i]).collect();
        let nsum = norm_p(&seq(&summed), m, p, trunc).unwrap();
        let ny = norm_p(&y, m, p, trunc).unwrap();
        prop_assert!(
            nsum.total().log_value()
                <= nx.total().log_value() + ny.total().log_value() + 1e-9
        );
        // the sup norm obeys the same three
        let ni = norm_inf(&x, m, trunc).unwrap();
        prop_assert!(ni.total().log_value() >= 0.0);
        let nis = norm_inf(&seq(&scaled), m, trunc).unwrap();
        prop_assert!(log_close(
            nis.total().log_value(),
            a.abs() * ni.total().log_value(),
            1e-9
        ));
    }

    #[test]
    fn norm_zero_only_for_all_ones(
        logs in prop::collection::vec(-4.0..4.0f64, 12..32),
        m in 1usize..=3,
    ) {
        // total = 1 must force every materialized term to 1 (finite uniqueness)
        let trunc = logs.len() - m;
        let x = seq(&logs);
        let r = norm_p(&x, m, 2.0, trunc).unwrap();
        if r.total().log_value().abs() <= 1e-12 {
            for k in 1..=logs.len() {
                prop_assert!(x.log_at(k).unwrap().abs() <= 1e-9);
            }
        }
        // and the all-ones prefix really has norm 1
        let ones = seq(&vec![0.0; logs.len()]);
        prop_assert_eq!(norm_p(&ones, m, 2.0, trunc).unwrap().total().log_value(), 0.0);
    }

    #[test]
    fn inclusion_evidence_p_tail_dominates_q_tail(
        logs in prop::collection::vec(-4.0..4.0f64, 12..40),
        m in 1usize..=3,
        p in 1.0..3.0f64,
        dq in 0.1..2.0f64,
    ) {
        // Jessen applied to the Cesàro summands: smaller p gives a larger tail
        let trunc = logs.len() - m;
        let x = seq(&logs);
        let tp = norm_p(&x, m, p, trunc).unwrap().tail_term().log_value();
        let tq = norm_p(&x, m, p + dq, trunc).unwrap().tail_term().log_value();
        prop_assert!(tq <= tp + 1e-9);
    }

    #[test]
    fn upsilon_is_idempotent_and_flattens(
        logs in prop::collection::vec(-4.0..4.0f64, 6..24),
        m in 1usize..=4,
    ) {
        prop_assume!(m <= logs.len());
        let x = seq(&logs);
        let once = upsilon_project(&x, m).unwrap();
        let twice = upsilon_project(&once, m).unwrap();
        for k in 1..=logs.len() {
            prop_assert_eq!(once.log_at(k).unwrap(), twice.log_at(k).unwrap());
            let expect = if k <= m { 0.0 } else { logs[k - 1] };
            prop_assert_eq!(once.log_at(k).unwrap(), expect);
        }
    }

    #[test]
    fn diagnostic_partial_sums_non_decreasing(
        logs in prop::collection::vec(-4.0..4.0f64, 16..48),
        m in 1usize..=3,
    ) {
        let trunc = logs.len() - m;
        let x = seq(&logs);
        for p in [PExponent::Finite(1.5), PExponent::Infinity] {
            let d = membership_diagnostic(&x, m, p, trunc).unwrap();
            for w in d.partial_log_sums().windows(2) {
                prop_assert!(w[1].1 >= w[0].1 - 1e-15);
            }
        }
    }
}

// ---------------------------------------------------------------------------
// matrix maps
// ---------------------------------------------------------------------------

fn matrix_strategy() -> impl Strategy<Value = (GeoMatrix<f64>, GeoSequence<f64>, usize, usize)> {
    (2usize..=4, 1usize..=5, 1usize..=3)
        .prop_flat_map(|(cols, extra, m)| {
            let rows = m + extra;
            (
                prop::collection::vec(
                    prop::collection::vec(-3.0..3.0f64, cols..=cols),
                    rows..=rows,
                ),
                prop::collection::vec(-3.0..3.0f64, cols..=cols),
                Just(m),
                1usize..=extra,
            )
        })
        .prop_map(|(a, x, m, i)| (GeoMatrix::from_log_rows(&a).unwrap(), seq(&x), m, i))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn matrix_consistency_and_telescoping((a, x, m, i) in matrix_strategy()) {
        let (lhs, rhs) = transform_consistency(&a, m, &x, i).unwrap();
        prop_assert!(log_close(lhs.log_value(), rhs.log_value(), 1e-10));

        // _G∑_{n≤i} Δ^m A_n(x) = Δ^{m-1} A_1(x) ⊖ Δ^{m-1} A_{i+1}(x)
        let actions: Vec<G> = (1..=a.rows())
            .map(|n| apply_row(&a, n, &x).unwrap())
            .collect();
        let aseq = GeoSequence::from_terms(actions);
        let brute: Vec<G> = (1..=i).map(|n| delta_m(&aseq, m, n).unwrap()).collect();
        let got = gsum(&brute).log_value();
        let want = telescoped_partial(&aseq, m, i).unwrap().log_value();
        prop_assert!(log_close(got, want, 1e-11));
    }

    #[test]
    fn apply_row_is_linear(
        row in prop::collection::vec(-3.0..3.0f64, 3..6),
        xs in prop::collection::vec(-3.0..3.0f64, 6..12),
        ys in prop::collection::vec(-3.0..3.0f64, 6..12),
        a in -2.0..2.0f64,
        b in -2.0..2.0f64,
    ) {
        let cols = row.len();
        let m = GeoMatrix::from_log_rows(&[row]).unwrap();
        let len = xs.len().min(ys.len()).max(cols);
        let xs = &xs[..xs.len().min(len)];
        let ys = &ys[..ys.len().min(len)];
        prop_assume!(xs.len() >= cols && ys.len() >= cols);
        let combined: Vec<f64> = (0..cols).map(|i| a * xs[i] + b * ys[i]).collect();
        let lhs = apply_row(&m, 1, &seq(&combined)).unwrap().log_value();
        let rhs = a * apply_row(&m, 1, &seq(&xs[..cols])).unwrap().log_value()
            + b * apply_row(&m, 1, &seq(&ys[..cols])).unwrap().log_value();
        prop_assert!(log_close(lhs, rhs, 1e-11));
    }

    #[test]
    fn row_summability_surrogate_monotone(
        row in prop::collection::vec(-4.0..4.0f64, 2..10),
    ) {
        let m = GeoMatrix::from_log_rows(&[row]).unwrap();
        let sums = row_modulus_prefix_sums(&m, 1).unwrap();
        for w in sums.windows(2) {
            prop_assert!(w[1].log_value() >= w[0].log_value());
        }
    }
}

// ---------------------------------------------------------------------------
// Hermite interpolation
// ---------------------------------------------------------------------------

/// Random well-separated Hermite data built from a smooth log-domain shape
/// plus the evaluation abscissae (logs within the node hull).
fn hermite_strategy() -> impl Strategy<Value = (HermiteData<f64>, Vec<f64>)> {
    (
        2usize..=6,
        0.1..1.0f64,
        prop::collection::vec(0.5..1.1f64, 5),
        (-1.5..1.5f64, -1.0..1.0f64, 0.3..2.0f64, -2.0..2.0f64),
        prop::collection::vec(0.0..1.0f64, 8),
    )
        .prop_map(|(count, t0, gaps, (c0, c1, c2, c3), evals)| {
            let mut ts = vec![t0];
            for gap in gaps.iter().take(count - 1) {
                ts.push(ts.last().unwrap() + gap);
            }
            let shape = move |t: f64| c0 + c1 * t + c2 * (c3 + t).sin();
            let slope = move |t: f64| c1 + c2 * (c3 + t).cos();
            let points: Vec<(f64, f64, DerivativeSpec<f64>)> = ts
                .iter()
                .map(|&t| {
                    (
                        t.exp(),
                        shape(t).exp(),
                        DerivativeSpec::Bigeometric(slope(t).exp()),
                    )
                })
                .collect();
            let span = ts.last().unwrap() - ts[0];
            let eval_logs: Vec<f64> = evals.iter().map(|&u| ts[0] + u * span).collect();
            (HermiteData::new(&points).unwrap(), eval_logs)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn hermite_three_paths_agree((data, eval_logs) in hermite_strategy()) {
        // uniqueness: Newton form and Lagrange form evaluate identically, and
        // both match the classical interpolant of the log-transformed data
        let poly = newton_coeffs(&divided_diff_table(&data).unwrap());
        prop_assert!(poly.geometric_degree() < poly.coeffs().len());
        for &t in &eval_logs {
            let x = g(t);
            let newton = eval_newton(&poly, x).log_value();
            let lagrange = eval_lagrange(&data, x).unwrap().log_value();
            let oracle = classical_hermite_oracle(&data, x).unwrap().log_value();
            prop_assert!((newton - oracle).abs() <= 1e-9, "newton {newton} oracle {oracle}");
            prop_assert!((lagrange - oracle).abs() <= 1e-9, "lagrange {lagrange} oracle {oracle}");
        }
    }

    #[test]
    fn hermite_osculates_data((data, _evals) in hermite_strategy()) {
        let poly = newton_coeffs(&divided_diff_table(&data).unwrap());
        let h = 1e-6;
        for node in data.nodes() {
            let p = eval_newton(&poly, node.x);
            prop_assert!((p.log_value() - node.f.log_value()).abs() <= 1e-9);
            let t = node.x.log_value();
            let hi = eval_newton(&poly, g(t + h)).log_value();
            let lo = eval_newton(&poly, g(t - h)).log_value();
            let slope = (hi - lo) / (2.0 * h);
            prop_assert!((slope - node.dgf.log_value()).abs() <= 1e-5);
        }
    }

    #[test]
    fn hermite_table_equal_argument_rule((data, _evals) in hermite_strategy()) {
        let table = divided_diff_table(&data).unwrap();
        for (j, node) in data.nodes().iter().enumerate() {
            prop_assert_eq!(
                table.entry(1, 2 * j).unwrap().log_value(),
                node.dgf.log_value()
            );
        }
    }
}

// ---------------------------------------------------------------------------
// cesaro means under projection
// ---------------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn projection_leaves_high_order_differences_alone(
        logs in prop::collection::vec(-3.0..3.0f64, 16..32),
        m in 1usize..=3,
    ) {
        // beyond index m the projected sequence keeps its terms, so Cesàro
        // means built purely from indices > m agree
        let x = seq(&logs);
        let proj = upsilon_project(&x, m).unwrap();
        for k in (m + 1)..=(logs.len() - m) {
            let a = delta_m(&x, m, k).unwrap().log_value();
            let b = delta_m(&proj, m, k).unwrap().log_value();
            prop_assert_eq!(a, b);
        }
        let _ = cesaro_mean_partial(&proj, m, logs.len() - m).unwrap();
    }
}
