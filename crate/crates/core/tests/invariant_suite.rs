//! Exhaustive invariant sweeps at the bounds each module promises.

use cayley_census::verify;

fn assert_pass(report: verify::CheckReport) {
    assert!(
        report.passed(),
        "{} failed on {}/{} cases: {:?}",
        report.name,
        report.failures,
        report.cases,
        report.samples
    );
    assert!(report.cases > 0, "{} ran no cases", report.name);
}

#[test]
fn euler_phi_to_1000() {
    assert_pass(verify::check_euler_phi_bruteforce(1000));
}

#[test]
fn geom_sum_identities_to_105() {
    assert_pass(verify::check_geom_sum_identities(105));
}

#[test]
fn order_multiplicativity_to_500() {
    assert_pass(verify::check_order_multiplicativity(500));
}

#[test]
fn kappa_multiplicativity_to_105() {
    assert_pass(verify::check_kappa_multiplicativity(105));
}

#[test]
fn kappa_t_class_to_60() {
    assert_pass(verify::check_kappa_t_class(60));
}

#[test]
fn homomorphism_law_to_20() {
    assert_pass(verify::check_homomorphism_law(20));
}

#[test]
fn power_matches_compose_to_20() {
    assert_pass(verify::check_power_matches_compose(20));
}

#[test]
fn aut_order_three_way_to_50() {
    assert_pass(verify::check_aut_order_three_way(50));
}

#[test]
fn cycle_formula_vs_oracle_to_35() {
    assert_pass(verify::check_cycle_formula_vs_oracle(35));
}

#[test]
fn fixpoint_route_to_35() {
    assert_pass(verify::check_fixpoint_route(35));
}

#[test]
fn v_t_class_to_60() {
    assert_pass(verify::check_t_class_on_v(60));
}

#[test]
fn u_t_independence_to_35() {
    assert_pass(verify::check_t_independence_on_u(35));
}

#[test]
fn cv_routes_agree_to_105() {
    assert_pass(verify::check_cv_general_vs_squarefree(105));
}

#[test]
fn census_divisibility_to_60() {
    assert_pass(verify::check_census_divisibility(60));
}

#[test]
fn census_methods_agree_to_105() {
    assert_pass(verify::check_census_method_agreement(105));
}

#[test]
fn census_lower_bound_to_60() {
    assert_pass(verify::check_census_lower_bound(60));
}

#[test]
fn divisor_weights_to_200() {
    assert_pass(verify::check_divisor_weights(200));
}

#[test]
fn powerset_orbits_match_burnside() {
    assert_pass(verify::check_powerset_vs_burnside(&[3, 5, 7, 9]));
}

#[test]
fn orbit_stabilizer_sampled_at_5() {
    assert_pass(verify::check_orbit_stabilizer(5, 100, 0xfeed_5eed));
}

#[test]
fn d6p_piecewise_for_small_primes() {
    assert_pass(verify::check_d6p_piecewise(&[5, 7, 11, 13]));
}

#[test]
fn d6p_three_way_to_17() {
    assert_pass(verify::check_d6p_three_way(&[5, 7, 11, 13, 17]));
}
