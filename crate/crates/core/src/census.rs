//! Burnside counting of CI-classes of Cayley digraphs on `D_{2n}`:
//! the orbit count of `Aut(D_{2n})` on the power set of the non-identity
//! elements is `(1 / n phi(n)) * sum over automorphisms of 2^(cycle count)`.
//!
//! [`burnside_count`] sums over all automorphisms; [`dci_census`] collapses
//! the t-sum to divisor class representatives with totient weights, which
//! is valid for odd square-free n. Which n are known to give DCI-groups is
//! recorded as a small fact table in [`dci_status`]; for those n the orbit
//! count is the number of Cayley digraphs up to isomorphism, otherwise it
//! is an upper bound (the CI-class count).

use crate::arith::{self, Nat};
use crate::dihedral::enumerate_aut;
use crate::{cycles, d6p, oracle, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DciTag {
    KnownDci,
    KnownNotDci,
    Unknown,
}

impl DciTag {
    pub fn name(self) -> &'static str {
        match self {
            DciTag::KnownDci => "known_dci",
            DciTag::KnownNotDci => "known_not_dci",
            DciTag::Unknown => "unknown",
        }
    }
}

/// Whether `D_{2n}` is known to be a DCI-group, with a one-line reason.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DciStatus {
    pub tag: DciTag,
    pub citation: &'static str,
}

/// Fact table: `D_{2p}` is DCI for every prime p; `D_{6p}` is DCI exactly
/// for primes p >= 5; a dihedral DCI-group with n > 2 forces n odd and
/// square-free.
pub fn dci_status(n: u64) -> DciStatus {
    if arith::is_prime(n) {
        return DciStatus {
            tag: DciTag::KnownDci,
            citation: "D_{2p} is a DCI-group for every prime p",
        };
    }
    if n % 3 == 0 && n / 3 > 3 && arith::is_prime(n / 3) {
        return DciStatus {
            tag: DciTag::KnownDci,
            citation: "D_{6p} is a DCI-group if and only if the prime p is at least 5",
        };
    }
    if n > 2 && (n % 2 == 0 || !arith::is_squarefree(n)) {
        return DciStatus {
            tag: DciTag::KnownNotDci,
            citation: "a dihedral DCI-group with n > 2 requires n odd and square-free",
        };
    }
    DciStatus {
        tag: DciTag::Unknown,
        citation: "no DCI classification recorded for this n",
    }
}

/// Result of one census computation.
///
/// `burnside_sum` is always an exact multiple of `aut_order`, and
/// `orbit_count * aut_order = burnside_sum`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusResult {
    pub n: u64,
    /// `n * phi(n)`, the order of the automorphism group.
    pub aut_order: u64,
    /// `sum over automorphisms of 2^(cycle count)`.
    pub burnside_sum: Nat,
    /// The number of CI-classes of Cayley digraphs on `D_{2n}`.
    pub orbit_count: Nat,
    pub dci: DciStatus,
}

fn assemble(n: u64, burnside_sum: Nat) -> CensusResult {
    let aut_order = n * arith::euler_phi(n).expect("n >= 3");
    let orbit_count = arith::nat_exact_div(burnside_sum.clone(), &Nat::from(aut_order));
    CensusResult { n, aut_order, burnside_sum, orbit_count, dci: dci_status(n) }
}

/// Orbit count by direct summation of `2^(cycle count)` over all
/// `n * phi(n)` automorphisms.
pub fn burnside_count(n: u64) -> Result<CensusResult> {
    if n < 3 {
        return Err(Error::Domain(format!("the census requires n >= 3, got {n}")));
    }
    let mut sum = Nat::from(0u8);
    for a in enumerate_aut(n) {
        sum += Nat::from(1u8) << cycles::c_total(n, a.r(), a.t())?.total;
    }
    Ok(assemble(n, sum))
}

/// Orbit count by the divisor-weighted census formula
/// `(1/(n phi(n))) * sum over divisors t of n of phi(n/t) * sum over units r
/// of 2^(c_u(r) + c_v(r, t))`, valid for n > 2 odd and square-free.
///
/// The divisor t = n stands for the class of t' = 0. When the status is not
/// `KnownDci` the result still counts CI-classes; it is then only an upper
/// bound for the isomorphism count.
pub fn dci_census(n: u64) -> Result<CensusResult> {
    if n <= 2 || n % 2 == 0 || !arith::is_squarefree(n) {
        return Err(Error::HypothesisViolated(format!(
            "the census formula requires n > 2 odd and square-free, got {n}"
        )));
    }
    let mut sum = Nat::from(0u8);
    for t in arith::divisors_of(n)? {
        let weight = arith::euler_phi(n / t)?;
        let mut inner = Nat::from(0u8);
        for r in 1..n {
            if arith::gcd(r, n) != 1 {
                continue;
            }
            let c = cycles::c_u_total(n, r)? + cycles::c_v_squarefree(n, r, t % n)?;
            inner += Nat::from(1u8) << c;
        }
        sum += Nat::from(weight) * inner;
    }
    Ok(assemble(n, sum))
}

/// Census row assembled from the closed-form `D_{6p}` count.
pub fn d6p_census(p: u64) -> Result<CensusResult> {
    let orbit_count = d6p::d6p_count(p)?;
    let n = 3 * p;
    let aut_order = n * arith::euler_phi(n)?;
    Ok(CensusResult {
        n,
        aut_order,
        burnside_sum: &orbit_count * Nat::from(aut_order),
        orbit_count,
        dci: dci_status(n),
    })
}

/// Census row from direct power-set orbit enumeration.
pub fn oracle_census(n: u64, max_mask_bits: u32) -> Result<CensusResult> {
    if n < 3 {
        return Err(Error::Domain(format!("the census requires n >= 3, got {n}")));
    }
    let orbit_count = oracle::powerset_orbit_count_with_limit(n, max_mask_bits)?;
    let aut_order = n * arith::euler_phi(n)?;
    Ok(CensusResult {
        n,
        aut_order,
        burnside_sum: &orbit_count * Nat::from(aut_order),
        orbit_count,
        dci: dci_status(n),
    })
}

/// How a census value is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Direct sum over all automorphisms.
    Burnside,
    /// Divisor-weighted formula for odd square-free n.
    Theorem,
    /// Closed form for n = 3p.
    D6p,
    /// Brute-force power-set orbit enumeration.
    Oracle,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Burnside => "burnside",
            Method::Theorem => "theorem",
            Method::D6p => "d6p",
            Method::Oracle => "oracle",
        }
    }
}

/// One row of a census table; errors are kept per row so a batch never
/// aborts early.
#[derive(Debug, Clone)]
pub struct TableRow {
    pub n: u64,
    /// Set for rows produced by the D_{6p} closed form.
    pub p: Option<u64>,
    pub method: Method,
    pub outcome: Result<CensusResult>,
}

/// Evaluate the census over a list of n values with a fixed method.
pub fn census_table(n_values: &[u64], method: Method) -> Vec<TableRow> {
    census_table_with_limit(n_values, method, oracle::DEFAULT_MAX_MASK_BITS)
}

/// As [`census_table`], with an explicit mask-width cap for the oracle
/// method.
pub fn census_table_with_limit(n_values: &[u64], method: Method, max_mask_bits: u32) -> Vec<TableRow> {
    n_values
        .iter()
        .map(|&n| {
            let (p, outcome) = match method {
                Method::Burnside => (None, burnside_count(n)),
                Method::Theorem => (None, dci_census(n)),
                Method::Oracle => (None, oracle_census(n, max_mask_bits)),
                Method::D6p => {
                    if n % 3 == 0 && n > 0 {
                        (Some(n / 3), d6p_census(n / 3))
                    } else {
                        (
                            None,
                            Err(Error::NotApplicable(format!("n = {n} is not of the form 3p"))),
                        )
                    }
                }
            };
            TableRow { n, p, method, outcome }
        })
        .collect()
}
