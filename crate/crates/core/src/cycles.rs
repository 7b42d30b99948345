//! Closed-form cycle counts of an automorphism acting on the non-identity
//! elements of `D_{2n}`.
//!
//! The action splits into invariant blocks: the rotations of each order
//! d > 1 dividing n (the "U part", independent of t) and the n reflections
//! (the "V part"). [`c_total`] assembles the full count; [`c_v_general`] is
//! the reference route valid for every n, while [`c_v_squarefree`] evaluates
//! the divisor-indexed double sum that is only stated for square-free n and
//! must agree with the general route on that range.

use crate::arith;
use crate::dihedral;
use crate::{Error, Result};

/// Breakdown of the cycle count of one automorphism on the 2n - 1
/// non-identity elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleData {
    pub n: u64,
    /// Per-divisor cycle counts on the rotations of order d, ascending in d.
    pub u_parts: Vec<(u64, u64)>,
    /// Cycle count on the n reflections.
    pub c_v: u64,
    /// `c_v` plus the sum of all `u_parts`.
    pub total: u64,
}

fn check_unit(n: u64, r: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::Domain("group parameter n must be positive".into()));
    }
    let r = r % n;
    if arith::gcd(r, n) != 1 {
        return Err(Error::InvalidAutomorphism { n, r });
    }
    Ok(r)
}

/// Cycle count on the rotations of order d: `phi(d) / |r|_d` (exact, and
/// independent of t).
pub fn c_u_part(n: u64, d: u64, r: u64) -> Result<u64> {
    let r = check_unit(n, r)?;
    if d <= 1 || n % d != 0 {
        return Err(Error::Domain(format!(
            "d must be a divisor of n greater than 1, got d={d}, n={n}"
        )));
    }
    let phi_d = arith::euler_phi(d)?;
    let ord_d = arith::mult_order(r, d)?;
    Ok(arith::exact_div(phi_d, ord_d))
}

/// Cycle count on all n - 1 non-trivial rotations: the sum of
/// `phi(d) / |r|_d` over divisors d > 1 of n.
pub fn c_u_total(n: u64, r: u64) -> Result<u64> {
    let r = check_unit(n, r)?;
    let mut total = 0;
    for d in arith::divisors_of(n)? {
        if d > 1 {
            total += c_u_part(n, d, r)?;
        }
    }
    Ok(total)
}

/// Number of reflections fixed by the s-th power of the automorphism:
/// `gcd(r^s - 1, n)` when that gcd divides `t S_s(r)`, else 0.
pub fn fix_v_count(n: u64, r: u64, t: u64, s: u64) -> Result<u64> {
    let r = check_unit(n, r)?;
    if s == 0 {
        return Err(Error::Domain("power exponent s must be at least 1".into()));
    }
    let g = arith::gcd((arith::pow_mod(r, s, n) + n - 1) % n, n);
    // g | t S_s(r) iff the product vanishes mod g; both factors reduce mod g
    // because g divides n.
    let ts = arith::mul_mod(t % g, arith::geom_sum_mod(r, s, n).value() % g, g);
    Ok(if ts == 0 { g } else { 0 })
}

/// Cycle count on the reflections, valid for every n >= 1:
/// `(1/kappa) * sum over s | kappa of phi(kappa/s) * fix_v_count(s)`.
pub fn c_v_general(n: u64, r: u64, t: u64) -> Result<u64> {
    let r = check_unit(n, r)?;
    let t = t % n;
    let k = dihedral::kappa(n, r, t)?;
    let mut sum = 0u64;
    for s in arith::divisors_of(k)? {
        sum += arith::euler_phi(k / s)? * fix_v_count(n, r, t, s)?;
    }
    Ok(arith::exact_div(sum, k))
}

/// Cycle count on the reflections via the divisor-indexed double sum,
/// stated only for square-free n > 1. Must equal [`c_v_general`] there.
pub fn c_v_squarefree(n: u64, r: u64, t: u64) -> Result<u64> {
    if n <= 1 {
        return Err(Error::Domain(format!("n > 1 required, got {n}")));
    }
    if !arith::is_squarefree(n) {
        return Err(Error::SquareFreeRequired { n });
    }
    let r = check_unit(n, r)?;
    let t = t % n;
    let ord_n = arith::mult_order(r, n)?;
    let kn = dihedral::kappa(n, r, t)?;
    let mut numerator = 0u64;
    for d in arith::divisors_of(n)? {
        let kd = if d == 1 {
            1
        } else {
            dihedral::kappa(d, r % d, t % d)?
        };
        let g = arith::gcd(kd, ord_n);
        for l in arith::divisors_of(ord_n / g)? {
            if arith::gcd((arith::pow_mod(r, l * kd, n) + n - 1) % n, n) == d {
                numerator += d * arith::euler_phi(ord_n / (l * g))?;
            }
        }
    }
    Ok(arith::exact_div(numerator, kn))
}

/// Full cycle breakdown of the automorphism (r, t) on the non-identity
/// elements.
///
/// For square-free n > 1 the V part is evaluated at the class
/// representative `gcd(t, n)` through the square-free route; otherwise the
/// general route is used with t as given. Both routes agree wherever both
/// apply.
pub fn c_total(n: u64, r: u64, t: u64) -> Result<CycleData> {
    let r = check_unit(n, r)?;
    let t = t % n;
    let mut u_parts = Vec::new();
    let mut u_sum = 0;
    for d in arith::divisors_of(n)? {
        if d > 1 {
            let part = c_u_part(n, d, r)?;
            u_parts.push((d, part));
            u_sum += part;
        }
    }
    let c_v = if n > 1 && arith::is_squarefree(n) {
        c_v_squarefree(n, r, arith::gcd(t, n))?
    } else {
        c_v_general(n, r, t)?
    };
    Ok(CycleData { n, u_parts, c_v, total: c_v + u_sum })
}
