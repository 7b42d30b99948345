//! Brute-force ground truth, kept independent of the closed forms it
//! checks: cycle counting by permutation traversal, cycle counting by
//! averaging fixed points over the cyclic group generated by an
//! automorphism, and direct orbit enumeration on the power set of the
//! non-identity elements.

use std::collections::HashSet;

use crate::arith::{self, Nat};
use crate::cycles::CycleData;
use crate::dihedral::{enumerate_aut, Aut, Element, Permutation};
use crate::{Error, Result};

/// Connection sets as bitmasks: bit k set iff indexed element k is in the
/// set. Only the low 2n - 1 bits may be set.
pub type SubsetMask = u64;

/// Default cap on the subset-mask width (2n - 1 bits), i.e. n <= 13.
/// The visited bitset for the default is at most 4 MiB.
pub const DEFAULT_MAX_MASK_BITS: u32 = 25;

/// Number of cycles (fixed points included) in the disjoint-cycle
/// factorization, by visited-marking traversal.
pub fn perm_cycle_count(perm: &Permutation) -> u64 {
    let mut seen = vec![false; perm.size()];
    let mut count = 0;
    for start in 0..perm.size() {
        if seen[start] {
            continue;
        }
        count += 1;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = perm.image_of(x);
        }
    }
    count
}

/// Cycle lengths in ascending order.
pub fn cycle_lengths(perm: &Permutation) -> Vec<u64> {
    let mut seen = vec![false; perm.size()];
    let mut lengths = Vec::new();
    for start in 0..perm.size() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            len += 1;
            x = perm.image_of(x);
        }
        lengths.push(len);
    }
    lengths.sort_unstable();
    lengths
}

/// The 2n - 1 non-identity elements in index order.
fn indexed_elements(n: u64) -> Vec<Element> {
    let mut out = Vec::with_capacity(2 * n as usize - 1);
    for i in 1..n {
        out.push(Element::rotation(n, i));
    }
    for j in 0..n {
        out.push(Element::reflection(n, j));
    }
    out
}

/// Cycle count via the averaged fixed-point identity
/// `c = (1/|a|) * sum over y in <a> of |fix(y)|`, with the powers generated
/// by repeated composition and fixed points counted element by element.
pub fn cycle_count_via_fixpoints(a: &Aut) -> u64 {
    let elements = indexed_elements(a.n());
    let mut fix_sum = 0u64;
    let mut steps = 0u64;
    let mut cur = *a;
    loop {
        steps += 1;
        fix_sum += elements
            .iter()
            .filter(|&&g| cur.apply(g).expect("same n") == g)
            .count() as u64;
        if cur.is_identity() {
            break;
        }
        cur = cur.compose(a).expect("same n");
    }
    arith::exact_div(fix_sum, steps)
}

/// Per-block cycle data read off the explicit permutation: rotations are
/// grouped by element order, reflections form the V block.
pub fn cycle_data_via_permutation(a: &Aut) -> CycleData {
    let n = a.n();
    let perm = a.to_permutation();
    let rot_points = n as usize - 1;
    let mut seen = vec![false; perm.size()];
    let mut u_counts = std::collections::BTreeMap::new();
    let mut c_v = 0u64;
    for start in 0..perm.size() {
        if seen[start] {
            continue;
        }
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = perm.image_of(x);
        }
        if start < rot_points {
            // element u^(start+1) has order n / gcd(n, start+1); every
            // element of its cycle shares that order
            let d = n / arith::gcd(n, start as u64 + 1);
            *u_counts.entry(d).or_insert(0u64) += 1;
        } else {
            c_v += 1;
        }
    }
    let u_parts: Vec<(u64, u64)> = u_counts.into_iter().collect();
    let total = c_v + u_parts.iter().map(|&(_, c)| c).sum::<u64>();
    CycleData { n, u_parts, c_v, total }
}

fn mask_image(mask: SubsetMask, perm: &[u32]) -> SubsetMask {
    let mut img = 0;
    let mut rest = mask;
    while rest != 0 {
        let k = rest.trailing_zeros();
        img |= 1 << perm[k as usize];
        rest &= rest - 1;
    }
    img
}

fn permutation_tables(n: u64) -> Vec<Vec<u32>> {
    enumerate_aut(n)
        .iter()
        .map(|a| a.to_permutation().images().iter().map(|&y| y as u32).collect())
        .collect()
}

/// Exact number of automorphism orbits on the power set of the 2n - 1
/// non-identity elements, by exhaustive mask enumeration under the default
/// width cap.
pub fn powerset_orbit_count(n: u64) -> Result<Nat> {
    powerset_orbit_count_with_limit(n, DEFAULT_MAX_MASK_BITS)
}

/// As [`powerset_orbit_count`] with an explicit width cap.
pub fn powerset_orbit_count_with_limit(n: u64, max_mask_bits: u32) -> Result<Nat> {
    if n == 0 {
        return Err(Error::Domain("group parameter n must be positive".into()));
    }
    let width = 2 * n - 1;
    if width > max_mask_bits as u64 || width >= 63 {
        return Err(Error::TooLarge(format!(
            "2n - 1 = {width} bits exceeds the {max_mask_bits}-bit subset-mask limit"
        )));
    }
    let perms = permutation_tables(n);
    let mask_count: u64 = 1 << width;
    let mut visited = vec![0u64; mask_count.div_ceil(64) as usize];
    let mut orbits = 0u64;
    for mask in 0..mask_count {
        if visited[(mask >> 6) as usize] & (1 << (mask & 63)) != 0 {
            continue;
        }
        orbits += 1;
        // the permutations form a group, so single-step images cover the
        // whole orbit
        for perm in &perms {
            let img = mask_image(mask, perm);
            visited[(img >> 6) as usize] |= 1 << (img & 63);
        }
    }
    Ok(Nat::from(orbits))
}

/// Orbit and stabilizer sizes of one connection set under the full
/// automorphism group.
pub fn orbit_and_stabilizer(n: u64, mask: SubsetMask) -> (u64, u64) {
    let perms = permutation_tables(n);
    let mut orbit = HashSet::new();
    let mut stabilizer = 0u64;
    for perm in &perms {
        let img = mask_image(mask, perm);
        if img == mask {
            stabilizer += 1;
        }
        orbit.insert(img);
    }
    (orbit.len() as u64, stabilizer)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_counts() {
        assert_eq!(perm_cycle_count(&Permutation::identity(29)), 29);
        assert_eq!(perm_cycle_count(&Aut::new(3, 1, 1).unwrap().to_permutation()), 3);
        assert_eq!(perm_cycle_count(&Aut::new(15, 4, 5).unwrap().to_permutation()), 11);
    }

    #[test]
    fn fixpoint_route() {
        assert_eq!(cycle_count_via_fixpoints(&Aut::identity(15)), 29);
        assert_eq!(cycle_count_via_fixpoints(&Aut::new(15, 4, 5).unwrap()), 11);
        // frozen from the oracle's first run: one 4-cycle on rotations,
        // a fixed reflection plus one 4-cycle on reflections
        assert_eq!(cycle_count_via_fixpoints(&Aut::new(5, 2, 0).unwrap()), 3);
    }

    #[test]
    fn per_block_data() {
        let data = cycle_data_via_permutation(&Aut::new(15, 4, 5).unwrap());
        assert_eq!(data.u_parts, vec![(3, 2), (5, 2), (15, 4)]);
        assert_eq!(data.c_v, 3);
        assert_eq!(data.total, 11);
    }

    #[test]
    fn orbit_counts() {
        assert_eq!(powerset_orbit_count(3).unwrap(), Nat::from(12u8));
        assert_eq!(powerset_orbit_count(5).unwrap(), Nat::from(44u8));
        assert!(matches!(
            powerset_orbit_count_with_limit(13, 24),
            Err(Error::TooLarge(_))
        ));
    }

    #[test]
    fn orbit_stabilizer_product() {
        // |orbit| * |stabilizer| = |Aut| for a few masks
        for mask in [0u64, 1, 0b1010, 0b111_111_111] {
            let (orbit, stab) = orbit_and_stabilizer(5, mask);
            assert_eq!(orbit * stab, 20, "mask {mask:#b}");
        }
    }
}
