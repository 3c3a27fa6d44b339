//! Bit-index arithmetic and the algebra of square-free symmetric
//! polynomials written in the basis of elementary symmetric functions.
//!
//! A symmetric square-free polynomial over F2 is a sum of elementary
//! symmetric functions `sigma_i` plus an optional constant term. Degrees
//! are identified with their binary representations: the product
//! `sigma_i * sigma_j` collapses to `sigma_{i|j}`, and `sigma_i` evaluated
//! on a vector of Hamming weight `w` is `C(w, i) mod 2`, which by Lucas'
//! theorem is 1 exactly when the bits of `i` are a subset of the bits
//! of `w`.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Bitwise subset test on binary representations: `a ⊆ b`.
#[inline]
pub fn subset(a: u64, b: u64) -> bool {
    a & b == a
}

/// Parity of the binomial coefficient `C(w, i)`.
///
/// By Lucas' theorem this is odd exactly when `b(i) ⊆ b(w)`, so no
/// integer binomial is ever computed.
#[inline]
pub fn binom_parity(w: u64, i: u64) -> bool {
    subset(i, w)
}

/// Degree of the product `sigma_i * sigma_j` in the square-free quotient.
///
/// Both degrees must be positive; the constant `sigma_0 = 1` is handled
/// separately by [`SymmetricPoly`].
#[inline]
pub fn sigma_mul(i: u64, j: u64) -> u64 {
    debug_assert!(i >= 1 && j >= 1);
    i | j
}

/// Coefficient support of a [`SymmetricPoly`], excluding the constant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Support {
    /// Finitely many degrees, each with coefficient 1.
    Finite(BTreeSet<u64>),
    /// Eventually periodic support with a power-of-two period `tau`.
    ///
    /// `window[(i - 1) % tau]` is the coefficient of `sigma_i` for every
    /// `i >= 1`; the window is indexed by the residues `1..=tau`.
    Periodic { tau: u64, window: Vec<bool> },
}

/// A square-free symmetric polynomial over F2 in the sigma basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricPoly {
    constant: bool,
    support: Support,
}

impl SymmetricPoly {
    pub fn zero() -> Self {
        Self::from_degrees(false, [])
    }

    pub fn one() -> Self {
        Self::from_degrees(true, [])
    }

    /// The single elementary symmetric function `sigma_i`, `i >= 1`.
    pub fn sigma(i: u64) -> Self {
        assert!(i >= 1, "sigma degree must be positive");
        Self::from_degrees(false, [i])
    }

    pub fn from_degrees(constant: bool, degrees: impl IntoIterator<Item = u64>) -> Self {
        let support: BTreeSet<u64> = degrees.into_iter().inspect(|&d| assert!(d >= 1)).collect();
        SymmetricPoly {
            constant,
            support: Support::Finite(support),
        }
    }

    /// Builds a periodic polynomial; `tau` must be a power of two and
    /// `window.len() == tau`.
    pub fn periodic(constant: bool, tau: u64, window: Vec<bool>) -> Self {
        assert!(tau.is_power_of_two(), "period must be a power of two");
        assert_eq!(window.len() as u64, tau);
        SymmetricPoly {
            constant,
            support: Support::Periodic { tau, window },
        }
    }

    pub fn constant_bit(&self) -> bool {
        self.constant
    }

    pub fn support(&self) -> &Support {
        &self.support
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.support, Support::Finite(_))
    }

    /// The period, when in periodic form.
    pub fn period(&self) -> Option<u64> {
        match &self.support {
            Support::Periodic { tau, .. } => Some(*tau),
            Support::Finite(_) => None,
        }
    }

    /// Coefficient of `sigma_i`, `i >= 1`.
    pub fn coeff(&self, i: u64) -> bool {
        assert!(i >= 1);
        match &self.support {
            Support::Finite(set) => set.contains(&i),
            Support::Periodic { tau, window } => window[((i - 1) % tau) as usize],
        }
    }

    /// Supported degrees of a finite polynomial, ascending.
    ///
    /// Panics on periodic form; restrict first.
    pub fn degrees(&self) -> impl Iterator<Item = u64> + '_ {
        match &self.support {
            Support::Finite(set) => set.iter().copied(),
            Support::Periodic { .. } => panic!("degrees() on periodic support"),
        }
    }

    pub fn is_zero(&self) -> bool {
        if self.constant {
            return false;
        }
        match &self.support {
            Support::Finite(set) => set.is_empty(),
            Support::Periodic { window, .. } => window.iter().all(|&b| !b),
        }
    }

    /// Drops every degree above `n`, unrolling periodic support.
    ///
    /// The result is always finite: no square-free monomial of degree
    /// above `n` exists in `n` variables.
    pub fn restrict(&self, n: u64) -> SymmetricPoly {
        let degrees: BTreeSet<u64> = match &self.support {
            _ if n == 0 => BTreeSet::new(),
            Support::Finite(set) => set.range(1..=n).copied().collect(),
            Support::Periodic { .. } => (1..=n).filter(|&i| self.coeff(i)).collect(),
        };
        SymmetricPoly {
            constant: self.constant,
            support: Support::Finite(degrees),
        }
    }

    /// Evaluates at any point of Hamming weight `w`.
    ///
    /// `sigma_i` contributes exactly when `b(i) ⊆ b(w)`, so only the
    /// submasks of `w` are visited.
    pub fn eval_at_weight(&self, w: u64) -> bool {
        let mut acc = self.constant;
        let mut sub = w;
        loop {
            if sub >= 1 && self.coeff(sub) {
                acc = !acc;
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & w;
        }
        acc
    }

    /// XOR of two finite polynomials.
    pub fn xor(&self, other: &SymmetricPoly) -> Result<SymmetricPoly> {
        let (a, b) = match (&self.support, &other.support) {
            (Support::Finite(a), Support::Finite(b)) => (a, b),
            _ => return Err(Error::PeriodicOperand),
        };
        Ok(SymmetricPoly {
            constant: self.constant ^ other.constant,
            support: Support::Finite(a.symmetric_difference(b).copied().collect()),
        })
    }

    /// Product of two finite polynomials.
    ///
    /// Each pair of supported degrees contributes `sigma_{i|j}` with XOR
    /// accumulation; the constant distributes over the other operand.
    pub fn mul(&self, other: &SymmetricPoly) -> Result<SymmetricPoly> {
        let (a, b) = match (&self.support, &other.support) {
            (Support::Finite(a), Support::Finite(b)) => (a, b),
            _ => return Err(Error::PeriodicOperand),
        };
        let mut support = BTreeSet::new();
        let mut toggle = |d: u64| {
            if !support.remove(&d) {
                support.insert(d);
            }
        };
        for &i in a {
            for &j in b {
                toggle(sigma_mul(i, j));
            }
        }
        if self.constant {
            for &j in b {
                toggle(j);
            }
        }
        if other.constant {
            for &i in a {
                toggle(i);
            }
        }
        Ok(SymmetricPoly {
            constant: self.constant & other.constant,
            support: Support::Finite(support),
        })
    }
}

/// Substitutes `y_e -> sigma_{2^e}` into a polynomial over `F2[y_0..y_s]`.
///
/// Each monomial is a bitmask over the exponents `e`; since the degrees
/// `2^e` have disjoint bits, the monomial `{e_1,..,e_r}` collapses to
/// `sigma_{2^{e_1} + .. + 2^{e_r}}`, i.e. to `sigma_mask`. The empty
/// monomial is the constant 1. Duplicate monomials cancel over F2.
pub fn from_power_basis(monomials: &[u64]) -> SymmetricPoly {
    let mut constant = false;
    let mut support = BTreeSet::new();
    for &m in monomials {
        if m == 0 {
            constant = !constant;
        } else if !support.remove(&m) {
            support.insert(m);
        }
    }
    SymmetricPoly {
        constant,
        support: Support::Finite(support),
    }
}

impl fmt::Display for SymmetricPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.support {
            Support::Finite(set) => {
                let mut terms: Vec<String> = Vec::new();
                if self.constant {
                    terms.push("1".into());
                }
                terms.extend(set.iter().map(|d| format!("sigma[{d}]")));
                if terms.is_empty() {
                    write!(f, "0")
                } else {
                    write!(f, "{}", terms.join(" + "))
                }
            }
            Support::Periodic { tau, .. } => {
                let mut terms: Vec<String> = Vec::new();
                if self.constant {
                    terms.push("1".into());
                }
                terms.extend(
                    (1..=*tau)
                        .filter(|&i| self.coeff(i))
                        .map(|d| format!("sigma[{d}]")),
                );
                if terms.is_empty() {
                    write!(f, "0 (period {tau})")
                } else {
                    write!(f, "{} (period {tau})", terms.join(" + "))
                }
            }
        }
    }
}
