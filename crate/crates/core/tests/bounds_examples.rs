//! Bound values on small graphs, worked out by hand from the degree data.

use approx::assert_relative_eq;

use ga_core::bounds::{
    check_all, check_cor_nk3, check_cor_randic, check_t_nk3, check_t_z1, BoundChecker, BoundError,
    CheckStatus, Side, TheoremId, Tolerance, DEFAULT_ALPHAS,
};
use ga_core::graph::Graph;

const EPS: f64 = 1e-12;

fn p3() -> Graph {
    Graph::path(3)
}

fn close(actual: Option<f64>, expected: f64) {
    assert_relative_eq!(actual.expect("side present"), expected, max_relative = EPS);
}

#[test]
fn path_p3_values() {
    // degrees 1, 2, 1: m = 2, M1 = 6, M2 = 4, R = √2, R_-1 = 1
    let g = p3();
    let c = BoundChecker::new(&g, Tolerance::default()).unwrap();
    let ga = 4.0 * 2f64.sqrt() / 3.0;
    assert_relative_eq!(c.ga1(), ga, max_relative = EPS);

    close(c.eq1().upper, 3.0);
    assert!(c.eq1().lower.is_none());

    let end2 = c.t_end2();
    close(end2.lower, 0.75);
    close(end2.upper, 18f64.sqrt() / 2.0);

    let p4bis = c.t_p4bis();
    close(p4bis.lower, 10.0 / 6.0);
    close(p4bis.upper, 6f64.sqrt());

    let tr = c.t_r();
    assert_relative_eq!(tr.value, 10.0 * 2f64.sqrt() / 3.0, max_relative = EPS);
    close(tr.lower, 4.0);
    assert!(tr.upper.is_none());

    let mz = c.t_mz();
    close(mz.lower, 0.8 * 2f64.sqrt());
    close(mz.upper, 2.0 * 2f64.sqrt());

    let mz2 = c.t_mz2();
    close(mz2.lower, 16.0 * 12f64.sqrt() / 45.0);
    close(mz2.upper, 6f64.sqrt());

    let mis29 = c.cor_mis29();
    close(mis29.lower, 0.4 * 8f64.sqrt());
    close(mis29.upper, 2.0);

    let prior = c.s_thm4_reference();
    close(prior.lower, 0.8);
    close(prior.upper, 2.0);

    let randic = c.cor_randic();
    close(randic.lower, 2f64.sqrt());
    close(randic.upper, 2.0 * 2f64.sqrt());
}

#[test]
fn path_p3_alpha_families() {
    let g = p3();
    let c = BoundChecker::new(&g, Tolerance::default()).unwrap();

    // R_-1 = 1, R_1 = 4
    let z1 = c.t_z1(-1.0).unwrap();
    close(z1.lower, 1.0);
    close(z1.upper, 4.0);
    let z1 = c.t_z1(1.0).unwrap();
    close(z1.lower, 0.5);
    close(z1.upper, 8.0);

    let lb = c.t_lb55(-1.0).unwrap();
    close(lb.lower, 0.5);
    close(lb.upper, 8.0);
    let lb = c.t_lb55(1.0).unwrap();
    close(lb.lower, 1.0);
    close(lb.upper, 4.0);

    // √(R_a R_-a) = 2 for every alpha on P3
    let (k_small, k_large) = c.t_mzz_coefficients(1.0).unwrap();
    assert_relative_eq!(k_small, 2.0 * 2f64.sqrt() / 5.0, max_relative = EPS);
    assert_relative_eq!(k_large, k_small, max_relative = EPS);
    let mzz = c.t_mzz(1.0).unwrap();
    close(mzz.lower, 4.0 * 2f64.sqrt() / 5.0);
    close(mzz.upper, 2.0);
    let mzz = c.t_mzz(2.0).unwrap();
    close(mzz.lower, 8.0 * 2f64.sqrt() / 17.0);
    close(mzz.upper, 2.0);
    let mzz = c.t_mzz(0.5).unwrap();
    close(mzz.lower, 4.0 * 2f64.sqrt() / 5.0);

    // NK* = 4
    close(check_cor_nk3(&g, -1.0).unwrap().lower, 1.0);
    close(check_cor_nk3(&g, 1.0).unwrap().lower, 0.5);
    let nk3 = check_t_nk3(&g, 1.0).unwrap();
    assert_relative_eq!(nk3.value, 4.0);
    close(nk3.lower, 4.0);
    assert!(nk3.tight_lower && nk3.in_class);
}

#[test]
fn nk3_equality_on_star_and_gap_on_path() {
    let star = Graph::star(3);
    let check = check_t_nk3(&star, 1.0).unwrap();
    assert_relative_eq!(check.value, 9.0);
    close(check.lower, 9.0);
    assert!(check.tight_lower);
    assert!(check.in_class);

    // P4: R_1 = 8, NK* = 16
    let p4 = Graph::path(4);
    let check = check_t_nk3(&p4, 1.0).unwrap();
    let slack = 8.0 - 3.0 * 16f64.powf(1.0 / 3.0);
    assert_relative_eq!(check.slack_lower.unwrap(), slack, max_relative = 1e-12);
    assert!((check.slack_lower.unwrap() - 0.440474).abs() <= 1e-6);
    assert!(!check.tight_lower && !check.in_class);
}

#[test]
fn cor_randic_matches_z1_at_minus_half() {
    for g in [
        p3(),
        Graph::path(6),
        Graph::star(5),
        Graph::petersen(),
        Graph::complete_bipartite(2, 5),
    ] {
        let a = check_cor_randic(&g).unwrap();
        let b = check_t_z1(&g, -0.5).unwrap();
        assert_relative_eq!(a.lower.unwrap(), b.lower.unwrap(), max_relative = EPS);
        assert_relative_eq!(a.upper.unwrap(), b.upper.unwrap(), max_relative = EPS);
    }
}

#[test]
fn regular_graphs_are_tight_everywhere() {
    // k-regular: GA1 = m = nk/2, M1 = nk², M2 = mk², R_a = m k^(2a)
    for (g, k) in [
        (Graph::circulant(7, &[1]), 2.0),
        (Graph::circulant(8, &[1, 4]), 3.0),
        (Graph::circulant(9, &[1, 2]), 4.0),
    ] {
        let m = g.m() as f64;
        let c = BoundChecker::new(&g, Tolerance::default()).unwrap();
        assert_relative_eq!(c.ga1(), m, max_relative = EPS);
        assert_relative_eq!(c.t_r().value, m + k * m / k, max_relative = EPS);
        for alpha in DEFAULT_ALPHAS {
            let z1 = c.t_z1(alpha).unwrap();
            assert_relative_eq!(z1.lower.unwrap(), m, max_relative = 1e-12);
            assert_relative_eq!(z1.upper.unwrap(), m, max_relative = 1e-12);
            let r_alpha = m * k.powf(2.0 * alpha);
            assert_relative_eq!(c.t_nk3(alpha).unwrap().value, r_alpha, max_relative = 1e-12);
        }
        let set = c.all(&DEFAULT_ALPHAS).unwrap();
        for check in &set.checks {
            assert!(check.holds, "{}", check.theorem);
            assert!(
                check.tight_all_sides(),
                "{} not tight on a {k}-regular graph",
                check.theorem
            );
            assert_eq!(check.observed_equality_matches, Some(true));
        }
        assert!(set.dominance.iter().all(|d| d.holds));
    }
}

#[test]
fn bidegreed_graphs_are_not_tight_on_regular_families() {
    let g = Graph::complete_bipartite(2, 4);
    let set = check_all(&g, &DEFAULT_ALPHAS).unwrap();
    for check in &set.checks {
        assert!(check.holds);
        if !matches!(check.theorem, TheoremId::TNk3(_)) {
            assert!(
                !check.tight_lower && !check.tight_upper,
                "{}",
                check.theorem
            );
            assert_eq!(check.observed_equality_matches, Some(true));
        }
    }
}

#[test]
fn branches_agree_at_boundary_alphas() {
    let g = Graph::complete_bipartite(2, 5);
    let c = BoundChecker::new(&g, Tolerance::default()).unwrap();
    let (a, b) = c.t_z1_branches(-0.5).unwrap();
    assert_relative_eq!(a.lower, b.lower, max_relative = 1e-12);
    assert_relative_eq!(a.upper, b.upper, max_relative = 1e-12);
    let (a, b) = c.t_lb55_branches(0.5).unwrap();
    assert_relative_eq!(a.lower, b.lower, max_relative = 1e-12);
    assert_relative_eq!(a.upper, b.upper, max_relative = 1e-12);
    let (small, large) = c.t_mzz_coefficients(1.0).unwrap();
    assert_relative_eq!(small, large, max_relative = 1e-12);
    let (a, b) = c.cor_nk3_branches(-0.5).unwrap().unwrap();
    assert_relative_eq!(a, b, max_relative = 1e-12);
}

#[test]
fn rejects_unusable_inputs() {
    let edgeless = Graph::new(3, []).unwrap();
    assert!(matches!(
        BoundChecker::new(&edgeless, Tolerance::default()),
        Err(BoundError::Edgeless)
    ));
    let two_edges = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
    let err = check_all(&two_edges, &DEFAULT_ALPHAS).unwrap_err();
    assert!(matches!(err, BoundError::Disconnected { components: 2 }));
    assert!(err.to_string().contains("component"));

    let g = p3();
    assert!(check_t_z1(&g, 0.0).is_err());
    assert!(check_t_z1(&g, f64::NAN).is_err());
    let c = BoundChecker::new(&g, Tolerance::default()).unwrap();
    assert!(c.t_mzz(-1.0).is_err());
    assert!(TheoremId::parse("t-mzz", Some(-1.0)).is_err());
    assert!(TheoremId::parse("t-z1", None).is_err());
    assert!(TheoremId::parse("t-end2", Some(1.0)).is_err());
    assert!(TheoremId::parse("nope", None).is_err());
    assert_eq!(
        TheoremId::parse("t-z1", Some(2.0)).unwrap(),
        TheoremId::TZ1(2.0)
    );
    assert!(Tolerance::new(-1.0).is_err());
    assert!(c.slack(TheoremId::TR, Side::Upper).is_err());
}

#[test]
fn extreme_alpha_skips_nk_checks() {
    // ln NK* / m = ln 2 on P3, so the cutoff sits near alpha = 1010
    let g = p3();
    let check = check_t_nk3(&g, 2000.0).unwrap();
    assert_eq!(check.status, CheckStatus::OverflowSkipped);
    assert!(check.holds);
    assert_eq!(check.observed_equality_matches, None);
    let check = check_t_nk3(&g, 1000.0).unwrap();
    assert_eq!(check.status, CheckStatus::Evaluated);
}

#[test]
fn theorem_names_round_trip() {
    for name in TheoremId::NAMES {
        let alpha = match name {
            "t-z1" | "t-lb55" | "t-mzz" | "t-nk3" | "cor-nk3" => Some(1.5),
            _ => None,
        };
        let id = TheoremId::parse(name, alpha).unwrap();
        assert_eq!(id.name(), name);
        assert_eq!(id.alpha(), alpha);
    }
}
