//! The specialization n = 3p for a prime p > 3: piecewise closed forms for
//! the cycle counts of `Aut(D_{6p})` and the resulting exact digraph count.
//!
//! The divisor universe of 3p is {1, 3, p, 3p}, and both the d-subscript
//! and the t-subscript of every formula here range over it (an arbitrary t'
//! enters via its class representative gcd(t', 3p)). Every piecewise form
//! has a definitional twin that evaluates the underlying sum directly; the
//! verification suite keeps the two in agreement.

use crate::arith::{self, Nat};
use crate::{dihedral, Error, Result};

/// Validated parameter set for `D_{6p}`: p prime, p > 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct D6pParams {
    p: u64,
}

impl D6pParams {
    pub fn new(p: u64) -> Result<D6pParams> {
        if p <= 3 || !arith::is_prime(p) {
            return Err(Error::NotApplicable(format!(
                "the closed-form count requires a prime p >= 5, got p = {p}"
            )));
        }
        Ok(D6pParams { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> u64 {
        3 * self.p
    }

    /// The divisors of 3p in ascending order.
    pub fn divisor_universe(&self) -> [u64; 4] {
        [1, 3, self.p, 3 * self.p]
    }
}

/// The admissible multiplier set attached to a divisor d of 3p: the
/// positive l dividing `|r|_3p / gcd(kappa(d,r,t), |r|_3p)` with
/// `gcd(r^(l kappa(d,r,t)) - 1, 3p) = d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaSet {
    pub d: u64,
    /// Members in ascending order.
    pub members: Vec<u64>,
}

/// Class representative of an arbitrary t' in the divisor universe:
/// `gcd(t', n)`, with t' = 0 mapping to n itself.
pub fn divisor_rep(t_prime: u64, n: u64) -> u64 {
    arith::gcd(t_prime % n, n)
}

fn validate(p: u64, d: Option<u64>, r: u64, t: u64) -> Result<(D6pParams, u64)> {
    let params = D6pParams::new(p)?;
    let n = params.n();
    if let Some(d) = d {
        if !params.divisor_universe().contains(&d) {
            return Err(Error::Domain(format!(
                "d must be one of 1, 3, {p}, {n}, got {d}"
            )));
        }
    }
    if !params.divisor_universe().contains(&t) {
        return Err(Error::Domain(format!(
            "t must be a divisor representative 1, 3, {p} or {n}, got {t}"
        )));
    }
    let r = r % n;
    if arith::gcd(r, n) != 1 {
        return Err(Error::InvalidAutomorphism { n, r });
    }
    Ok((params, r))
}

/// Proper divisors of m (the set usually written Delta(m)).
fn proper_divisors(m: u64) -> Vec<u64> {
    arith::divisors_of(m)
        .expect("m >= 1")
        .into_iter()
        .filter(|&l| l < m)
        .collect()
}

/// Piecewise closed form of the admissible multiplier set.
pub fn lambda_set(p: u64, d: u64, r: u64, t: u64) -> Result<LambdaSet> {
    let (params, r) = validate(p, Some(d), r, t)?;
    let n = params.n();
    let op = arith::mult_order(r, p)?;
    let members = if d == n {
        vec![1]
    } else if d == p {
        if r % 3 == 2 && op % 2 == 1 {
            vec![1]
        } else {
            Vec::new()
        }
    } else if d == 3 {
        if r % 3 == 1 && (t == 3 || t == n) {
            proper_divisors(op)
        } else if r % 3 == 1 {
            proper_divisors(op / arith::gcd(3, op))
        } else {
            proper_divisors(op / arith::gcd(2, op))
        }
    } else {
        // d == 1
        if r % 3 == 1 {
            Vec::new()
        } else {
            proper_divisors(op).into_iter().filter(|&l| l % 2 == 1).collect()
        }
    };
    Ok(LambdaSet { d, members })
}

/// The same set computed by direct filtering of its definition.
pub fn lambda_set_definitional(p: u64, d: u64, r: u64, t: u64) -> Result<LambdaSet> {
    let (params, r) = validate(p, Some(d), r, t)?;
    let n = params.n();
    let ord_n = arith::mult_order(r, n)?;
    let kd = if d == 1 { 1 } else { dihedral::kappa(d, r % d, t % d)? };
    let limit = ord_n / arith::gcd(kd, ord_n);
    let members = arith::divisors_of(limit)?
        .into_iter()
        .filter(|&l| arith::gcd((arith::pow_mod(r, l * kd, n) + n - 1) % n, n) == d)
        .collect();
    Ok(LambdaSet { d, members })
}

/// Piecewise closed form of the weighted totient sum
/// `sum over l in the multiplier set of d * phi(|r|_3p / (l gcd(kappa(d,r,t), |r|_3p)))`.
// two d == 3 branches share a value on purpose; the branch structure is the
// contract the definitional route is tested against
#[allow(clippy::if_same_then_else)]
pub fn s_sum(p: u64, d: u64, r: u64, t: u64) -> Result<u64> {
    let (params, r) = validate(p, Some(d), r, t)?;
    let n = params.n();
    let op = arith::mult_order(r, p)?;
    Ok(if d == n {
        n
    } else if d == p {
        if r % 3 == 2 && op % 2 == 1 {
            p
        } else {
            0
        }
    } else if d == 1 {
        if r % 3 == 1 {
            0
        } else if op % 2 == 1 {
            op - 1
        } else {
            op / 2
        }
    } else {
        // d == 3
        if r % 3 == 1 && (t == 3 || t == n) {
            3 * (op - 1)
        } else if r % 3 == 1 && op % 3 != 0 {
            3 * (op - 1)
        } else if r % 3 == 1 {
            op - 3
        } else if op % 2 == 1 {
            3 * (op - 1)
        } else {
            3 * (op / 2 - 1)
        }
    })
}

/// Direct evaluation of the defining sum over [`lambda_set_definitional`].
pub fn s_sum_definitional(p: u64, d: u64, r: u64, t: u64) -> Result<u64> {
    let (params, r) = validate(p, Some(d), r, t)?;
    let n = params.n();
    let ord_n = arith::mult_order(r, n)?;
    let kd = if d == 1 { 1 } else { dihedral::kappa(d, r % d, t % d)? };
    let g = arith::gcd(kd, ord_n);
    let mut total = 0;
    for l in lambda_set_definitional(p, d, r, t)?.members {
        total += d * arith::euler_phi(ord_n / (l * g))?;
    }
    Ok(total)
}

/// Piecewise cycle count on the 3p - 1 non-trivial rotations.
pub fn c_u3p(p: u64, r: u64) -> Result<u64> {
    let params = D6pParams::new(p)?;
    let n = params.n();
    let r = r % n;
    if arith::gcd(r, n) != 1 {
        return Err(Error::InvalidAutomorphism { n, r });
    }
    let op = arith::mult_order(r, p)?;
    Ok(if r % 3 == 1 {
        2 + arith::exact_div(3 * (p - 1), op)
    } else if op % 2 == 1 {
        1 + arith::exact_div(2 * (p - 1), op)
    } else {
        1 + arith::exact_div(3 * (p - 1), op)
    })
}

/// Piecewise cycle count on the 3p reflections, for a divisor
/// representative t.
pub fn c_v3p(p: u64, r: u64, t: u64) -> Result<u64> {
    let (params, r) = validate(p, None, r, t)?;
    let n = params.n();
    let op = arith::mult_order(r, p)?;
    Ok(if r == 1 {
        arith::gcd(n, t)
    } else if r % 3 == 1 && (t == 3 || t == n) {
        3 + arith::exact_div(3 * (p - 1), op)
    } else if r % 3 == 1 && op % 3 != 0 {
        1 + arith::exact_div(p - 1, op)
    } else if r % 3 == 1 {
        1 + arith::exact_div(3 * (p - 1), op)
    } else if r % p == 1 {
        2 * arith::gcd(p, t)
    } else if op % 2 == 1 {
        2 + arith::exact_div(2 * (p - 1), op)
    } else {
        2 + arith::exact_div(3 * (p - 1), op)
    })
}

/// Piecewise table for the order kappa(3p, r, t) at a divisor
/// representative t; must agree with the general kappa.
pub fn kappa_piecewise(p: u64, r: u64, t: u64) -> Result<u64> {
    let (params, r) = validate(p, None, r, t)?;
    let n = params.n();
    let op = arith::mult_order(r, p)?;
    Ok(if r == 1 {
        arith::exact_div(n, arith::gcd(n, t))
    } else if r % 3 == 1 {
        arith::exact_div(3 * op, arith::gcd(3, t * op))
    } else if r % p == 1 {
        arith::exact_div(2 * p, arith::gcd(p, t))
    } else {
        arith::exact_div(2 * op, arith::gcd(2, op))
    })
}

/// Exact number of CI-classes of Cayley digraphs on `D_{6p}` (equal to the
/// isomorphism count, since `D_{6p}` has the DCI property for p >= 5), by
/// the five-term closed form.
///
/// The five terms share the denominator 3p(p - 1) but are not individually
/// integral, so each numerator is scaled onto that common denominator and a
/// single exact division finishes the job.
pub fn d6p_count(p: u64) -> Result<Nat> {
    let params = D6pParams::new(p)?;
    let n = params.n();
    let pm1 = p - 1;
    let one = Nat::from(1u8);

    // 2^{4p-2} (2^{2p} + 5)
    let mut total = (&one << (4 * p - 2)) * ((&one << (2 * p)) + Nat::from(5u8));
    // 2^{2p} (2^p + 1) / p, scaled by 3(p-1)
    total += Nat::from(3 * pm1) * (&one << (2 * p)) * ((&one << p) + &one);

    let mut sum_ord3_coprime = Nat::from(0u8);
    let mut sum_ord3_divisible = Nat::from(0u8);
    let mut sum_reflecting = Nat::from(0u8);
    for r in 2..n {
        if arith::gcd(r, n) != 1 {
            continue;
        }
        let o3 = arith::mult_order(r, 3)?;
        let op = arith::mult_order(r, p)?;
        if o3 == 1 && op % 3 != 0 {
            sum_ord3_coprime +=
                (&one << arith::exact_div(4 * pm1, op)) + (&one << (1 + arith::exact_div(6 * pm1, op)));
        } else if o3 == 1 {
            sum_ord3_divisible += &one << arith::exact_div(6 * pm1, op);
        } else if op % 2 == 1 && op > 1 {
            sum_reflecting += &one << arith::exact_div(4 * pm1, op);
        } else if op % 2 == 0 {
            sum_reflecting += &one << arith::exact_div(6 * pm1, op);
        }
        // o3 == 2 with op == 1 contributes to no r-sum; that class is
        // carried by the 2^{2p}(2^p + 1)/p term.
    }
    // weights 8/(3(p-1)), 8/(p-1) and 4/(p-1), scaled by 3p(p-1)
    total += Nat::from(8 * p) * sum_ord3_coprime;
    total += Nat::from(24 * p) * sum_ord3_divisible;
    total += Nat::from(12 * p) * sum_reflecting;

    Ok(arith::nat_exact_div(total, &Nat::from(3 * p * pm1)))
}
