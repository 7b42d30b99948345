//! The dihedral group `D_{2n} = <u, v | u^n = v^2 = 1, vuv = u^-1>`, its
//! automorphisms, and their explicit permutation action on the 2n - 1
//! non-identity elements.
//!
//! Every automorphism sends `u^i -> u^(ri)` and `u^j v -> u^(rj + t) v` for
//! a unit r mod n and an arbitrary residue t mod n, so [`Aut`] is just the
//! canonical triple (n, r, t). Composition reads left to right: `a.compose(b)`
//! applies a first, then b.

use crate::arith::{self, Residue};
use crate::{Error, Result};

/// A non-trivial element of `D_{2n}`: a rotation `u^i` or reflection `u^j v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ElementKind {
    Rotation(u64),
    Reflection(u64),
}

/// Group element with its group parameter; exponents are reduced mod n and
/// `Rotation(0)` is the identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Element {
    n: u64,
    kind: ElementKind,
}

impl Element {
    pub fn rotation(n: u64, exponent: u64) -> Element {
        assert!(n >= 1, "invariant violation: group parameter must be positive");
        Element { n, kind: ElementKind::Rotation(exponent % n) }
    }

    pub fn reflection(n: u64, exponent: u64) -> Element {
        assert!(n >= 1, "invariant violation: group parameter must be positive");
        Element { n, kind: ElementKind::Reflection(exponent % n) }
    }

    pub fn identity(n: u64) -> Element {
        Element::rotation(n, 0)
    }

    pub fn n(self) -> u64 {
        self.n
    }

    pub fn kind(self) -> ElementKind {
        self.kind
    }

    pub fn is_identity(self) -> bool {
        self.kind == ElementKind::Rotation(0)
    }
}

/// Automorphism of `D_{2n}` as the canonical triple (n, r, t) with
/// gcd(r, n) = 1 and r, t in `[0, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Aut {
    n: u64,
    r: u64,
    t: u64,
}

impl Aut {
    /// Canonicalize the subscripts mod n and check that r is a unit.
    pub fn new(n: u64, r: u64, t: u64) -> Result<Aut> {
        if n == 0 {
            return Err(Error::Domain("group parameter n must be positive".into()));
        }
        let r = Residue::from_u64(r, n).value();
        let t = Residue::from_u64(t, n).value();
        if arith::gcd(r, n) != 1 {
            return Err(Error::InvalidAutomorphism { n, r });
        }
        Ok(Aut { n, r, t })
    }

    pub fn identity(n: u64) -> Aut {
        assert!(n >= 1, "invariant violation: group parameter must be positive");
        Aut { n, r: 1 % n, t: 0 }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    pub fn is_identity(&self) -> bool {
        self.r == 1 % self.n && self.t == 0
    }

    /// Image of a group element: `u^i -> u^(ri)`, `u^j v -> u^(rj + t) v`.
    pub fn apply(&self, g: Element) -> Result<Element> {
        if g.n() != self.n {
            return Err(Error::Domain(format!(
                "mismatched group parameters: automorphism on n={} applied to element with n={}",
                self.n,
                g.n()
            )));
        }
        Ok(match g.kind() {
            ElementKind::Rotation(i) => {
                Element::rotation(self.n, arith::mul_mod(self.r, i, self.n))
            }
            ElementKind::Reflection(j) => Element::reflection(
                self.n,
                (arith::mul_mod(self.r, j, self.n) + self.t) % self.n,
            ),
        })
    }

    /// `a.compose(b)` applies a first, then b: the triple
    /// `(n, r r' mod n, (r' t + t') mod n)`.
    pub fn compose(&self, then: &Aut) -> Result<Aut> {
        if then.n != self.n {
            return Err(Error::Domain(format!(
                "mismatched group parameters: {} vs {}",
                self.n, then.n
            )));
        }
        Ok(Aut {
            n: self.n,
            r: arith::mul_mod(self.r, then.r, self.n),
            t: (arith::mul_mod(then.r, self.t, self.n) + then.t) % self.n,
        })
    }

    /// s-th power via the closed form `(n, r^s, t S_s(r))`, so s may be
    /// astronomically large; `power(a, 0)` is the identity.
    pub fn power(&self, s: u64) -> Aut {
        Aut {
            n: self.n,
            r: arith::pow_mod(self.r, s, self.n),
            t: arith::mul_mod(self.t, arith::geom_sum_mod(self.r, s, self.n).value(), self.n),
        }
    }

    /// Order of the automorphism, `n |r|_n / gcd(n, t S_{|r|_n}(r))`.
    pub fn order(&self) -> u64 {
        kappa_unchecked(self.n, self.r, self.t)
    }

    /// The bijection induced on the 2n - 1 non-identity elements, with the
    /// fixed indexing: points `0 .. n-1` are `u^1 .. u^(n-1)` and points
    /// `n-1 .. 2n-2` are `v, uv, .., u^(n-1) v`.
    pub fn to_permutation(&self) -> Permutation {
        let n = self.n as usize;
        let mut image = vec![0usize; 2 * n - 1];
        for i in 1..n {
            image[i - 1] = arith::mul_mod(self.r, i as u64, self.n) as usize - 1;
        }
        for j in 0..n {
            let jr = (arith::mul_mod(self.r, j as u64, self.n) + self.t) % self.n;
            image[n - 1 + j] = n - 1 + jr as usize;
        }
        Permutation { image }
    }
}

/// `kappa(n, r, t) = n |r|_n / gcd(n, t S_{|r|_n}(r))`, the order of the
/// automorphism with subscripts (r, t).
pub fn kappa(n: u64, r: u64, t: u64) -> Result<u64> {
    let a = Aut::new(n, r, t)?;
    Ok(kappa_unchecked(a.n, a.r, a.t))
}

pub(crate) fn kappa_unchecked(n: u64, r: u64, t: u64) -> u64 {
    let ord = arith::mult_order(r, n).expect("unit by construction");
    let ts = arith::mul_mod(t % n, arith::geom_sum_mod(r, ord, n).value(), n);
    // gcd(n, tS) computed from tS mod n; gcd(0, n) = n.
    arith::exact_div(n, arith::gcd(ts, n)) * ord
}

/// All n*phi(n) automorphisms of `D_{2n}`, r ascending then t ascending.
pub fn enumerate_aut(n: u64) -> Vec<Aut> {
    assert!(n >= 1, "invariant violation: group parameter must be positive");
    let mut out = Vec::new();
    for r in 0..n {
        if arith::gcd(r, n) == 1 {
            for t in 0..n {
                out.push(Aut { n, r, t });
            }
        }
    }
    out
}

/// Verification-suite check: conjugating by the automorphism (x, y) moves
/// the t-subscript to `(1 - r) y + x t` without changing the order, so the
/// two kappa values must agree.
pub fn conjugation_invariance_check(n: u64, r: u64, t: u64, x: u64, y: u64) -> Result<bool> {
    if n == 0 {
        return Err(Error::Domain("group parameter n must be positive".into()));
    }
    let (r, t, x, y) = (r % n, t % n, x % n, y % n);
    if arith::gcd(r, n) != 1 || arith::gcd(x, n) != 1 {
        return Err(Error::Domain(format!("r={r} and x={x} must be units modulo {n}")));
    }
    let one_minus_r = (n + 1 - r) % n;
    let conjugated_t = (arith::mul_mod(one_minus_r, y, n) + arith::mul_mod(x, t, n)) % n;
    Ok(kappa(n, r, t)? == kappa(n, r, conjugated_t)?)
}

/// Explicit permutation as an image array over `{0, .., size-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    /// Build from an image array, checking it is a bijection.
    pub fn from_images(image: Vec<usize>) -> Result<Permutation> {
        let size = image.len();
        let mut seen = vec![false; size];
        for &y in &image {
            if y >= size || seen[y] {
                return Err(Error::Domain("image array is not a bijection".into()));
            }
            seen[y] = true;
        }
        Ok(Permutation { image })
    }

    pub fn identity(size: usize) -> Permutation {
        Permutation { image: (0..size).collect() }
    }

    pub fn size(&self) -> usize {
        self.image.len()
    }

    pub fn image_of(&self, point: usize) -> usize {
        self.image[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.image
    }

    /// `p.then(q)` applies p first, then q.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.size(), other.size(), "invariant violation: size mismatch");
        Permutation {
            image: self.image.iter().map(|&y| other.image[y]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(k, &y)| k == y)
    }
}
