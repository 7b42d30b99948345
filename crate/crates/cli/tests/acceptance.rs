//! Acceptance suite: one test per release criterion, each printing a
//! PASS line (visible with `cargo test -- --nocapture`) and holding the
//! stated time budget.
//!
//! The development-time mutation protocol (inject an off-by-one into any
//! closed form and watch `verify` flip to exit 3) is exercised manually;
//! criterion 8 here pins the green path through the real binary.

use std::process::Command;
use std::time::{Duration, Instant};

use cayley_census::arith::{self, Nat};
use cayley_census::{census, d6p, oracle, verify};

fn assert_check(report: verify::CheckReport, budget: Duration, started: Instant) {
    assert!(
        report.passed(),
        "{}: {} of {} cases failed: {:?}",
        report.name,
        report.failures,
        report.cases,
        report.samples
    );
    let elapsed = started.elapsed();
    assert!(
        elapsed <= budget,
        "{} exceeded its {budget:?} budget: {elapsed:?}",
        report.name
    );
}

#[test]
fn acceptance_1_cycle_formula_matches_oracle() {
    let started = Instant::now();
    // sweeps every n <= 35 (a superset of the required odd square-free
    // range), every automorphism
    assert_check(
        verify::check_cycle_formula_vs_oracle(35),
        Duration::from_secs(5),
        started,
    );
    println!("ACCEPTANCE 1 PASS: cycle formula equals the permutation oracle for all n <= 35");
}

#[test]
fn acceptance_2_order_correctness() {
    let started = Instant::now();
    assert_check(
        verify::check_aut_order_three_way(50),
        Duration::from_secs(5),
        started,
    );
    println!("ACCEPTANCE 2 PASS: kappa = least power hitting the identity = lcm of cycle lengths, n <= 50");
}

#[test]
fn acceptance_3_burnside_vs_direct_orbits() {
    for (n, frozen) in [(3u64, 12u64), (5, 44), (7, 248)] {
        let started = Instant::now();
        let direct = oracle::powerset_orbit_count(n).unwrap();
        let counted = census::burnside_count(n).unwrap().orbit_count;
        assert_eq!(direct, counted, "n = {n}");
        assert_eq!(direct, Nat::from(frozen), "frozen value at n = {n}");
        if n == 7 {
            assert!(
                started.elapsed() <= Duration::from_secs(1),
                "n = 7 enumeration exceeded 1 s"
            );
        }
    }
    println!("ACCEPTANCE 3 PASS: direct power-set orbits match the census for n in {{3, 5, 7}}");
}

#[test]
fn acceptance_4_theorem_agrees_with_burnside() {
    let started = Instant::now();
    assert_check(
        verify::check_census_method_agreement(105),
        Duration::from_secs(10),
        started,
    );
    println!("ACCEPTANCE 4 PASS: divisor-weighted census equals the direct sum for odd square-free n <= 105");
}

#[test]
fn acceptance_5_d6p_closed_form() {
    let started = Instant::now();
    let primes = [5u64, 7, 11, 13, 17];
    assert_check(
        verify::check_d6p_three_way(&primes),
        Duration::from_secs(5),
        started,
    );
    assert_check(
        verify::check_d6p_piecewise(&primes),
        Duration::from_secs(5),
        started,
    );
    // regression constants frozen after the first three-way agreement
    assert_eq!(d6p::d6p_count(5).unwrap(), Nat::from(4_512_576u64));
    assert_eq!(d6p::d6p_count(7).unwrap(), Nat::from(8_729_668_864u64));
    println!("ACCEPTANCE 5 PASS: closed form, census and piecewise tables agree for p in {{5, 7, 11, 13, 17}}");
}

#[test]
fn acceptance_6_divisibility_invariant() {
    let started = Instant::now();
    assert_check(
        verify::check_census_divisibility(60),
        Duration::from_secs(10),
        started,
    );
    // a non-exact division anywhere is a panic carrying this marker, which
    // the binary maps to exit 3
    let panic = std::panic::catch_unwind(|| arith::exact_div(7, 2)).unwrap_err();
    let message = panic.downcast_ref::<String>().cloned().unwrap_or_default();
    assert!(message.contains("invariant violation"), "got: {message}");
    println!("ACCEPTANCE 6 PASS: burnside sums divide exactly for all n <= 60");
}

#[test]
fn acceptance_7_subscript_algebra_suite() {
    let started = Instant::now();
    let budget = Duration::from_secs(10);
    assert_check(verify::check_order_multiplicativity(60), budget, started);
    assert_check(verify::check_kappa_multiplicativity(60), budget, started);
    assert_check(verify::check_kappa_t_class(60), budget, started);
    assert_check(
        verify::check_conjugation_invariance(60, 100, 0xacce97ed),
        budget,
        started,
    );
    println!("ACCEPTANCE 7 PASS: order multiplicativity, kappa multiplicativity, t-class and conjugation invariance, n <= 60");
}

#[test]
fn acceptance_8_verify_subcommand() {
    let output = Command::new(env!("CARGO_BIN_EXE_cayley-census"))
        .args(["verify", "--n-max", "35"])
        .output()
        .expect("binary runs");
    assert!(
        output.status.success(),
        "verify exited {:?}: {}",
        output.status.code(),
        String::from_utf8_lossy(&output.stderr)
    );
    let stdout = String::from_utf8(output.stdout).unwrap();
    let pass_lines = stdout.lines().filter(|l| l.starts_with("PASS ")).count();
    assert!(pass_lines >= 20, "expected a per-invariant summary, got:\n{stdout}");
    assert!(!stdout.contains("FAIL"), "unexpected failures:\n{stdout}");
    println!("ACCEPTANCE 8 PASS: verify --n-max 35 exits 0 with {pass_lines} per-invariant PASS lines");
}
