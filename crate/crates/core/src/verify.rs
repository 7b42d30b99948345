//! Cross-validation suite: every closed form in the crate checked against
//! an independent route (brute force, a second formula, or an algebraic
//! identity), over configurable sweep bounds.
//!
//! Each check returns a [`CheckReport`]; the CLI `verify` subcommand prints
//! one line per report and exits non-zero if any report records a failure.

use crate::arith::{self, Nat};
use crate::{census, cycles, d6p, dihedral, oracle};

/// Outcome of one named invariant check.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub name: &'static str,
    /// Number of individual comparisons performed.
    pub cases: u64,
    /// Number of failed comparisons.
    pub failures: u64,
    /// Up to a handful of failure descriptions.
    pub samples: Vec<String>,
}

impl CheckReport {
    fn new(name: &'static str) -> CheckReport {
        CheckReport { name, cases: 0, failures: 0, samples: Vec::new() }
    }

    fn case(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.samples.len() < 5 {
                self.samples.push(detail());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Deterministic generator for the sampled checks (splitmix64).
struct SplitMix64(u64);

impl SplitMix64 {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    fn below(&mut self, bound: u64) -> u64 {
        self.next() % bound
    }
}

fn units(n: u64) -> Vec<u64> {
    (0..n).filter(|&r| arith::gcd(r, n) == 1).collect()
}

pub fn check_euler_phi_bruteforce(n_max: u64) -> CheckReport {
    let mut report = CheckReport::new("euler_phi_bruteforce");
    for n in 1..=n_max {
        let brute = (1..=n).filter(|&i| arith::gcd(i, n) == 1).count() as u64;
        let phi = arith::euler_phi(n).unwrap();
        report.case(phi == brute, || format!("phi({n}) = {phi}, brute force {brute}"));
    }
    report
}

pub fn check_geom_sum_identities(n_max: u64) -> CheckReport {
    let mut report = CheckReport::new("geom_sum_identities");
    for n in 1..=n_max {
        for r in units(n) {
            // (r - 1) S_{|r|_n}(r) = r^{|r|_n} - 1 = 0 (mod n)
            let ord = arith::mult_order(r, n).unwrap();
            let s = arith::geom_sum_mod(r, ord, n).value();
            let lhs = arith::mul_mod((r + n - 1) % n, s, n);
            report.case(lhs == 0, || format!("(r-1)S_ord(r) != 0 mod {n} at r={r}"));
            // S_(l k |r|_d)(r) = l S_(k |r|_d)(r) (mod d) for d | n
            for d in arith::divisors_of(n).unwrap() {
                let ord_d = arith::mult_order(r, d).unwrap();
                for l in 0..=6u64 {
                    for k in 0..=6u64 {
                        let lhs = arith::geom_sum_mod(r, l * k * ord_d, d).value();
                        let rhs = arith::mul_mod(l % d, arith::geom_sum_mod(r, k * ord_d, d).value(), d);
                        report.case(lhs == rhs, || {
                            format!("geom sum reduction fails at n={n} d={d} r={r} l={l} k={k}")
                        });
                    }
                }
            }
        }
    }
    report
}

pub fn check_order_multiplicativity(n_max: u64) -> CheckReport {
    let mut report = CheckReport::new("order_multiplicativity");
    for n in 1..=n_max {
        for d in arith::divisors_of(n).unwrap() {
            let m = n / d;
            if arith::gcd(d, m) != 1 {
                continue;
            }
            for r in units(n) {
                let ok = arith::order_multiplicativity_check(n, d, m, r).unwrap();
                report.case(ok, || format!("order multiplicativity fails at n={n}=({d})({m}), r={r}"));
            }
        }
    }
    report
}

pub fn check_kappa_multiplicativity(n_max: u64) -> CheckReport {
    let mut report = CheckReport::new("kappa_multiplicativity");
    for n in 1..=n_max {
        for d in arith::divisors_of(n).unwrap() {
            let m = n / d;
            if arith::gcd(d, m) != 1 {
                continue;
            }
            for r in units(n) {
                let ord = arith::mult_order(r, n).unwrap();
                for t in 0..n {
                    let kn = dihedral::kappa(n, r, t).unwrap();
                    let kd = dihedral::kappa(d, r % d, t % d).unwrap();
                    let km = dihedral::kappa(m, r % m, t % m).unwrap();
                    let expected = ord * kd * km / (arith::gcd(kd, ord) * arith::gcd(km, ord));
                    report.case(kn == expected && kn % kd == 0, || {
                        format!("kappa multiplicativity fails at n={n}=({d})({m}), r={r}, t={t}")
                    });
                }
            }
        }
    }
    report
}

pub fn check_kappa_t_class(n_max: u64) -> CheckReport {
    let mut report = CheckReport::new("kappa_t_class_invariance");
    for n in 1..=n_max {
        for r in units(n) {
            // all t in one gcd-class must share kappa
            let mut by_class: std::collections::BTreeMap<u64, u64> = std::collections::BTreeMap::new();
            for t in 0..n {
                let class = arith::gcd(t, n);
                let k = dihedral::kappa(n, r, t).unwrap();
                match by_class.get(&class) {
                    None => {
                        by_class.insert(class, k);
                        report.case(true, String::new);
                    }
                    Some(&k0) => {
                        report.case(k == k0, || {
                            format!("kappa differs within gcd-class {class} at n={n}, r={r}, t={t}")
                        });
                    }
                }
            }
        }
    }
    report
}

pub fn check_conjugation_invariance(n_max: u64, samples_per_n: u64, seed: u64) -> CheckReport {
    let mut report = CheckReport::new("conjugation_invariance");
    let mut rng = SplitMix64(seed);
    for n in 1..=n_max {
        let units_n = units(n);
        for _ in 0..samples_per_n {
            let r = units_n[rng.below(units_n.len() as u64) as usize];
            let x = units_n[rng.below(units_n.len() as u64) as usize];
            let t = rng.below(n);
            let y = rng.below(n);
            let ok = dihedral::conjugation_invariance_check(n, r, t, x, y).unwrap();
            report.case(ok, || {
                format!("conjugation moves kappa at n={n}, r={r}, t={t}, x={x}, y={y}")
            });
        }
    }
    report
}

pub fn check_homomorphism_law(n_max: u64) -> CheckReport {
    let mut report = CheckReport::new("permutation_homomorphism");
    for n in 1..=n_max {
        let auts = dihedral::enumerate_aut(n);
        for a in &auts {
            for b in &auts {
                let composed = a.compose(b).unwrap().to_permutation();
                let chained = a.to_permutation().then(&b.to_permutation());
                report.case(composed == chained, || {
                    format!("permutation of compose differs at n={n}, a={a:?}, b={b:?}")
                });
            }
        }
    }
    report
}

pub fn check_power_matches_compose(n_max: u64) -> CheckReport {
    let mut report = CheckReport::new("power_matches_compose");
    for n in 1..=n_max {
        let bound = 2 * n * arith::euler_phi(n).unwrap();
        for a in dihedral::enumerate_aut(n) {
            let mut acc = dihedral::Aut::identity(n);
            for s in 0..=bound {
                report.case(a.power(s) == acc, || {
                    format!("power({s}) != {s}-fold compose at n={n}, a={a:?}")
                });
                acc = acc.compose(&a).unwrap();
            }
        }
    }
    report
}

pub fn check_aut_order_three_way(n_max: u64) -> CheckReport {
    let mut report = CheckReport::new("aut_order_three_way");
    for n in 1..=n_max {
        for a in dihedral::enumerate_aut(n) {
            let k = a.order();
            let mut least = 0;
            for s in 1..=k {
                if a.power(s).is_identity() {
                    least = s;
                    break;
                }
            }
            let lcm_of_cycles = oracle::cycle_lengths(&a.to_permutation())
                .into_iter()
                .fold(1, arith::lcm);
            report.case(k == least && k == lcm_of_cycles, || {
                format!("order mismatch at n={n}, a={a:?}: kappa={k}, least={least}, lcm={lcm_of_cycles}")
            });
        }
    }
    report
}

pub fn check_cycle_formula_vs_oracle(n_max: u64) -> CheckReport {
    let mut report = CheckReport::new("cycle_formula_vs_oracle");
    for n in 1..=n_max {
        for a in dihedral::enumerate_aut(n) {
            let formula = cycles::c_total(n, a.r(), a.t()).unwrap().total;
            let brute = oracle::perm_cycle_count(&a.to_permutation());
            report.case(formula == brute, || {
                format!("cycle total {formula} != oracle {brute} at n={n}, a={a:?}")
            });
        }
    }
    report
}

pub fn check_fixpoint_route(n_max: u64) -> CheckReport {
    let mut report = CheckReport::new("fixpoint_route");
    for n in 1..=n_max {
        for a in dihedral::enumerate_aut(n) {
            let formula = cycles::c_total(n, a.r(), a.t()).unwrap().total;
            let averaged = oracle::cycle_count_via_fixpoints(&a);
            report.case(formula == averaged, || {
                format!("fixed-point average {averaged} != formula {formula} at n={n}, a={a:?}")
            });
        }
    }
    report
}

pub fn check_t_class_on_v(n_max: u64) -> CheckReport {
    let mut report = CheckReport::new("v_cycles_t_class_invariance");
    for n in 1..=n_max {
        for r in units(n) {
            let mut by_class: std::collections::BTreeMap<u64, u64> = std::collections::BTreeMap::new();
            for t in 0..n {
                let class = arith::gcd(t, n);
                let cv = cycles::c_v_general(n, r, t).unwrap();
                match by_class.get(&class) {
                    None => {
                        by_class.insert(class, cv);
                        report.case(true, String::new);
                    }
                    Some(&cv0) => {
                        report.case(cv == cv0, || {
                            format!("c_v differs within gcd-class {class} at n={n}, r={r}, t={t}")
                        });
                    }
                }
            }
        }
    }
    report
}

pub fn check_t_independence_on_u(n_max: u64) -> CheckReport {
    let mut report = CheckReport::new("u_cycles_t_independence");
    for n in 1..=n_max {
        for r in units(n) {
            let reference = oracle::cycle_data_via_permutation(&dihedral::Aut::new(n, r, 0).unwrap());
            let u_ref: u64 = reference.u_parts.iter().map(|&(_, c)| c).sum();
            for t in 1..n {
                let data = oracle::cycle_data_via_permutation(&dihedral::Aut::new(n, r, t).unwrap());
                let u_sum: u64 = data.u_parts.iter().map(|&(_, c)| c).sum();
                report.case(u_sum == u_ref && data.u_parts == reference.u_parts, || {
                    format!("rotation-block cycles depend on t at n={n}, r={r}, t={t}")
                });
            }
        }
    }
    report
}

pub fn check_cv_general_vs_squarefree(n_max: u64) -> CheckReport {
    let mut report = CheckReport::new("cv_general_vs_squarefree");
    for n in 2..=n_max {
        if !arith::is_squarefree(n) {
            continue;
        }
        for r in units(n) {
            for t in 0..n {
                let general = cycles::c_v_general(n, r, t).unwrap();
                let sqfree = cycles::c_v_squarefree(n, r, t).unwrap();
                report.case(general == sqfree, || {
                    format!("c_v routes disagree at n={n}, r={r}, t={t}: {general} vs {sqfree}")
                });
            }
        }
    }
    report
}

pub fn check_census_divisibility(n_max: u64) -> CheckReport {
    let mut report = CheckReport::new("census_divisibility");
    for n in 3..=n_max {
        let result = census::burnside_count(n).unwrap();
        let product = &result.orbit_count * Nat::from(result.aut_order);
        report.case(product == result.burnside_sum, || {
            format!("burnside sum not an exact multiple at n={n}")
        });
    }
    report
}

pub fn check_census_method_agreement(n_max: u64) -> CheckReport {
    let mut report = CheckReport::new("census_method_agreement");
    for n in 3..=n_max {
        if n % 2 == 0 || !arith::is_squarefree(n) {
            continue;
        }
        let direct = census::burnside_count(n).unwrap();
        let theorem = census::dci_census(n).unwrap();
        report.case(direct.orbit_count == theorem.orbit_count, || {
            format!(
                "methods disagree at n={n}: burnside {} vs theorem {}",
                direct.orbit_count, theorem.orbit_count
            )
        });
    }
    report
}

pub fn check_census_lower_bound(n_max: u64) -> CheckReport {
    let mut report = CheckReport::new("census_lower_bound");
    for n in 3..=n_max {
        let result = census::burnside_count(n).unwrap();
        // ceiling(2^(2n-1) / aut_order)
        let numerator = Nat::from(1u8) << (2 * n - 1);
        let aut = Nat::from(result.aut_order);
        let bound = (&numerator + &aut - Nat::from(1u8)) / &aut;
        report.case(result.orbit_count >= bound, || {
            format!("orbit count below the identity-term bound at n={n}")
        });
    }
    report
}

pub fn check_divisor_weights(n_max: u64) -> CheckReport {
    let mut report = CheckReport::new("divisor_class_weights");
    for n in 1..=n_max {
        let mut counts: std::collections::BTreeMap<u64, u64> = std::collections::BTreeMap::new();
        for t in 0..n {
            *counts.entry(arith::gcd(t, n)).or_insert(0) += 1;
        }
        for d in arith::divisors_of(n).unwrap() {
            let expected = arith::euler_phi(n / d).unwrap();
            let got = counts.get(&d).copied().unwrap_or(0);
            report.case(got == expected, || {
                format!("|{{t : gcd(t,{n}) = {d}}}| = {got}, expected phi({n}/{d}) = {expected}")
            });
        }
    }
    report
}

pub fn check_powerset_vs_burnside(ns: &[u64]) -> CheckReport {
    let mut report = CheckReport::new("powerset_orbits_vs_burnside");
    for &n in ns {
        let direct = oracle::powerset_orbit_count(n).unwrap();
        let counted = census::burnside_count(n).unwrap().orbit_count;
        report.case(direct == counted, || {
            format!("direct orbit enumeration {direct} != burnside {counted} at n={n}")
        });
    }
    report
}

pub fn check_orbit_stabilizer(n: u64, samples: u64, seed: u64) -> CheckReport {
    let mut report = CheckReport::new("orbit_stabilizer_product");
    let group_order = n * arith::euler_phi(n).unwrap();
    let width = 2 * n - 1;
    let mut rng = SplitMix64(seed);
    for _ in 0..samples {
        let mask = rng.below(1 << width);
        let (orbit, stabilizer) = oracle::orbit_and_stabilizer(n, mask);
        report.case(orbit * stabilizer == group_order, || {
            format!("|orbit| * |stabilizer| != {group_order} for mask {mask:#b} at n={n}")
        });
    }
    report
}

pub fn check_d6p_piecewise(primes: &[u64]) -> CheckReport {
    let mut report = CheckReport::new("d6p_piecewise_vs_definitional");
    for &p in primes {
        let n = 3 * p;
        let universe = [1, 3, p, n];
        for r in units(n) {
            for t in universe {
                for d in universe {
                    let closed = d6p::lambda_set(p, d, r, t).unwrap();
                    let definitional = d6p::lambda_set_definitional(p, d, r, t).unwrap();
                    report.case(closed == definitional, || {
                        format!("lambda set differs at p={p}, d={d}, r={r}, t={t}")
                    });
                    let s_closed = d6p::s_sum(p, d, r, t).unwrap();
                    let s_def = d6p::s_sum_definitional(p, d, r, t).unwrap();
                    report.case(s_closed == s_def, || {
                        format!("s sum differs at p={p}, d={d}, r={r}, t={t}")
                    });
                }
                // c_v table vs the general route, kappa table vs kappa,
                // and the assembled quotient (sum of the four s-sums)
                let cv_table = d6p::c_v3p(p, r, t).unwrap();
                let cv_general = cycles::c_v_general(n, r, t % n).unwrap();
                report.case(cv_table == cv_general, || {
                    format!("c_v table {cv_table} != general {cv_general} at p={p}, r={r}, t={t}")
                });
                let k_table = d6p::kappa_piecewise(p, r, t).unwrap();
                let k_general = dihedral::kappa(n, r, t % n).unwrap();
                report.case(k_table == k_general, || {
                    format!("kappa table {k_table} != kappa {k_general} at p={p}, r={r}, t={t}")
                });
                let s_total: u64 = universe
                    .iter()
                    .map(|&d| d6p::s_sum(p, d, r, t).unwrap())
                    .sum();
                report.case(cv_general * k_general == s_total, || {
                    format!("kappa * c_v != sum of s-sums at p={p}, r={r}, t={t}")
                });
            }
            let cu_table = d6p::c_u3p(p, r).unwrap();
            let cu_general = cycles::c_u_total(n, r).unwrap();
            report.case(cu_table == cu_general, || {
                format!("c_u table {cu_table} != general {cu_general} at p={p}, r={r}")
            });
        }
    }
    report
}

pub fn check_d6p_three_way(primes: &[u64]) -> CheckReport {
    let mut report = CheckReport::new("d6p_count_three_way");
    for &p in primes {
        let n = 3 * p;
        let closed = d6p::d6p_count(p).unwrap();
        let theorem = census::dci_census(n).unwrap().orbit_count;
        let direct = census::burnside_count(n).unwrap().orbit_count;
        report.case(closed == theorem && closed == direct, || {
            format!("counts disagree at p={p}: closed {closed}, theorem {theorem}, burnside {direct}")
        });
    }
    report
}

/// The full suite at a given sweep bound, as run by the CLI `verify`
/// subcommand. Fixed-size checks (the D_{6p} primes, the power-set orbit
/// enumeration sizes, the sampled checks) do not scale with the bound.
pub fn run_suite(n_max: u64) -> Vec<CheckReport> {
    let seed = 0x5eed_cafe_f00d_u64;
    let mut powerset_ns = vec![3, 5, 7];
    if n_max >= 9 {
        powerset_ns.push(9);
    }
    vec![
        check_euler_phi_bruteforce(n_max),
        check_geom_sum_identities(n_max),
        check_order_multiplicativity(n_max),
        check_kappa_multiplicativity(n_max),
        check_kappa_t_class(n_max),
        check_conjugation_invariance(n_max, 100, seed),
        check_homomorphism_law(n_max.min(20)),
        check_power_matches_compose(n_max.min(20)),
        check_aut_order_three_way(n_max),
        check_cycle_formula_vs_oracle(n_max),
        check_fixpoint_route(n_max),
        check_t_class_on_v(n_max),
        check_t_independence_on_u(n_max),
        check_cv_general_vs_squarefree(n_max),
        check_census_divisibility(n_max),
        check_census_method_agreement(n_max),
        check_census_lower_bound(n_max),
        check_divisor_weights(n_max),
        check_powerset_vs_burnside(&powerset_ns),
        check_orbit_stabilizer(5, 100, seed),
        check_d6p_piecewise(&[5, 7, 11, 13]),
        check_d6p_three_way(&[5, 7, 11, 13, 17]),
    ]
}
