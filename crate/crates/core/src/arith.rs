//! Number-theory kernel: gcd, Euler phi, multiplicative order, geometric
//! sums modulo n, divisor enumeration, square-free testing, and exact
//! big-integer division.
//!
//! Everything is pure and exact. Divisions that a formula guarantees to be
//! exact go through [`exact_div`] / [`nat_exact_div`], which panic on a
//! remainder instead of flooring.

use num_traits::Zero;

use crate::{Error, Result};

/// Arbitrary-precision nonnegative integer; carries all census counts and
/// power-set sums.
pub type Nat = num_bigint::BigUint;

/// A residue class representative, canonicalized into `[0, modulus)`.
///
/// Automorphism subscripts are always taken modulo n; this is the type that
/// enforces it, including for negative inputs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Residue {
    value: u64,
    modulus: u64,
}

impl Residue {
    /// Reduce a possibly negative integer into `[0, modulus)`.
    pub fn new(value: i64, modulus: u64) -> Residue {
        assert!(modulus >= 1, "invariant violation: modulus must be positive");
        Residue {
            value: value.rem_euclid(modulus as i64) as u64,
            modulus,
        }
    }

    pub fn from_u64(value: u64, modulus: u64) -> Residue {
        assert!(modulus >= 1, "invariant violation: modulus must be positive");
        Residue {
            value: value % modulus,
            modulus,
        }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

pub fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    assert!(n >= 1, "invariant violation: zero modulus");
    ((a as u128 * b as u128) % n as u128) as u64
}

/// `base^exp mod n` by square-and-multiply.
pub fn pow_mod(base: u64, exp: u64, n: u64) -> u64 {
    assert!(n >= 1, "invariant violation: zero modulus");
    if n == 1 {
        return 0;
    }
    let mut base = base % n;
    let mut exp = exp;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, n);
        }
        base = mul_mod(base, base, n);
        exp >>= 1;
    }
    acc
}

/// Euler's phi function, by trial-division factorization.
pub fn euler_phi(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::Domain("euler_phi(0) is undefined".into()));
    }
    let mut m = n;
    let mut phi = n;
    let mut q = 2;
    while q * q <= m {
        if m % q == 0 {
            phi -= phi / q;
            while m % q == 0 {
                m /= q;
            }
        }
        q += 1;
    }
    if m > 1 {
        phi -= phi / m;
    }
    Ok(phi)
}

/// Least s >= 1 with `r^s = 1 (mod n)`; 1 for n = 1.
pub fn mult_order(r: u64, n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::Domain("multiplicative order modulo 0 is undefined".into()));
    }
    if n == 1 {
        return Ok(1);
    }
    let r = r % n;
    if gcd(r, n) != 1 {
        return Err(Error::Domain(format!("{r} is not a unit modulo {n}")));
    }
    let mut s = 1;
    let mut x = r;
    while x != 1 {
        x = mul_mod(x, r, n);
        s += 1;
    }
    Ok(s)
}

/// Geometric sum `1 + r + ... + r^(m-1)` modulo n, with the empty sum 0.
///
/// Halving recursion, so m may be astronomically large without cost.
pub fn geom_sum_mod(r: u64, m: u64, n: u64) -> Residue {
    assert!(n >= 1, "invariant violation: zero modulus");
    Residue::from_u64(geom_sum_raw(r % n, m, n), n)
}

fn geom_sum_raw(r: u64, m: u64, n: u64) -> u64 {
    if n == 1 || m == 0 {
        0
    } else if m % 2 == 1 {
        (geom_sum_raw(r, m - 1, n) + pow_mod(r, m - 1, n)) % n
    } else {
        let h = m / 2;
        mul_mod(geom_sum_raw(r, h, n), (1 + pow_mod(r, h, n)) % n, n)
    }
}

/// All divisors of n in ascending order, including 1 and n.
pub fn divisors_of(n: u64) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::Domain("0 has no divisor list".into()));
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    Ok(small)
}

/// True iff no prime square divides n.
pub fn is_squarefree(n: u64) -> bool {
    assert!(n >= 1, "invariant violation: is_squarefree(0)");
    let mut m = n;
    let mut q = 2;
    while q * q <= m {
        if m % q == 0 {
            m /= q;
            if m % q == 0 {
                return false;
            }
        }
        q += 1;
    }
    true
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut q = 2;
    while q * q <= n {
        if n % q == 0 {
            return false;
        }
        q += 1;
    }
    true
}

/// Verification-suite check that orders multiply across a coprime
/// factorization n = d*m: `|r|_n = |r|_d |r|_m / gcd(|r|_d, |r|_m)`.
pub fn order_multiplicativity_check(n: u64, d: u64, m: u64, r: u64) -> Result<bool> {
    if n == 0 || d == 0 || m == 0 || d * m != n {
        return Err(Error::Domain(format!("n = d*m required, got n={n}, d={d}, m={m}")));
    }
    if gcd(d, m) != 1 {
        return Err(Error::Domain(format!("gcd({d}, {m}) != 1")));
    }
    if gcd(r % n, n) != 1 {
        return Err(Error::Domain(format!("{r} is not a unit modulo {n}")));
    }
    let od = mult_order(r, d)?;
    let om = mult_order(r, m)?;
    let on = mult_order(r, n)?;
    Ok(on == od / gcd(od, om) * om)
}

/// Exact division of machine integers; a remainder is a formula bug.
pub fn exact_div(numerator: u64, divisor: u64) -> u64 {
    assert!(divisor != 0, "invariant violation: division by zero");
    assert!(
        numerator % divisor == 0,
        "invariant violation: non-exact division {numerator} / {divisor}"
    );
    numerator / divisor
}

/// Exact division of big naturals; a remainder is a formula bug.
pub fn nat_exact_div(numerator: Nat, divisor: &Nat) -> Nat {
    assert!(!divisor.is_zero(), "invariant violation: division by zero");
    assert!(
        (&numerator % divisor).is_zero(),
        "invariant violation: non-exact division {numerator} / {divisor}"
    );
    numerator / divisor
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_small_values() {
        assert_eq!(euler_phi(1).unwrap(), 1);
        assert_eq!(euler_phi(7).unwrap(), 6);
        assert_eq!(euler_phi(15).unwrap(), 8);
        assert!(matches!(euler_phi(0), Err(Error::Domain(_))));
    }

    #[test]
    fn phi_matches_gcd_count() {
        for n in 1..=200u64 {
            let count = (1..=n).filter(|&i| gcd(i, n) == 1).count() as u64;
            assert_eq!(euler_phi(n).unwrap(), count, "phi({n})");
        }
    }

    #[test]
    fn orders() {
        assert_eq!(mult_order(1, 5).unwrap(), 1);
        assert_eq!(mult_order(2, 7).unwrap(), 3);
        assert_eq!(mult_order(2, 15).unwrap(), 4);
        assert_eq!(mult_order(7, 1).unwrap(), 1);
        assert!(mult_order(3, 15).is_err());
    }

    #[test]
    fn geometric_sums() {
        assert_eq!(geom_sum_mod(11, 0, 15).value(), 0);
        assert_eq!(geom_sum_mod(4, 2, 15).value(), 5);
        assert_eq!(geom_sum_mod(2, 4, 15).value(), 0);
        // against the naive accumulation
        for n in 1..=40u64 {
            for r in 0..n {
                let mut acc = 0u64;
                for m in 0..=12u64 {
                    assert_eq!(geom_sum_mod(r, m, n).value(), acc, "S_{m}({r}) mod {n}");
                    acc = (acc + pow_mod(r, m, n)) % n;
                }
            }
        }
    }

    #[test]
    fn divisor_lists() {
        assert_eq!(divisors_of(1).unwrap(), vec![1]);
        assert_eq!(divisors_of(15).unwrap(), vec![1, 3, 5, 15]);
        assert_eq!(divisors_of(12).unwrap(), vec![1, 2, 3, 4, 6, 12]);
        assert!(divisors_of(0).is_err());
    }

    #[test]
    fn squarefree() {
        assert!(is_squarefree(15));
        assert!(!is_squarefree(9));
        assert!(is_squarefree(1));
        assert!(!is_squarefree(12));
    }

    #[test]
    fn order_multiplicativity_examples() {
        assert!(order_multiplicativity_check(15, 3, 5, 2).unwrap());
        assert!(order_multiplicativity_check(15, 3, 5, 4).unwrap());
        assert!(order_multiplicativity_check(21, 1, 21, 2).unwrap());
        assert!(order_multiplicativity_check(12, 3, 4, 5).unwrap());
        assert!(order_multiplicativity_check(12, 2, 6, 5).is_err());
    }

    #[test]
    fn residue_reduction() {
        assert_eq!(Residue::new(-1, 15).value(), 14);
        assert_eq!(Residue::new(19, 15).value(), 4);
        assert_eq!(Residue::from_u64(20, 15).value(), 5);
        assert_eq!(Residue::from_u64(20, 15).modulus(), 15);
    }

    #[test]
    #[should_panic(expected = "invariant violation")]
    fn non_exact_division_panics() {
        exact_div(5, 2);
    }

    #[test]
    #[should_panic(expected = "invariant violation")]
    fn non_exact_nat_division_panics() {
        nat_exact_div(Nat::from(5u8), &Nat::from(2u8));
    }
}
