//! Truth tables, algebraic normal forms and the binary Moebius transform.
//!
//! Dense vectors are bit-packed; the transform runs as a butterfly over
//! word-internal strides first and whole words after. The symbolic
//! transform realizes the complement-product formula
//! `(1 + X)^{1+b} * X^b` monomial by monomial and serves as the slow
//! verifier for the dense path. Expansion of sigma-basis polynomials to
//! explicit monomial sets makes this module the brute-force oracle layer
//! for the rest of the crate.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::symfunc::SymmetricPoly;

/// Cap on dense vectors: 2^24 bits is 2 MiB.
pub const MAX_DENSE_VARS: usize = 24;
/// Cap on the symbolic Moebius verifier.
pub const MAX_SYMBOLIC_VARS: usize = 12;
/// Cap on the total monomial count an expansion may produce.
pub const EXPAND_BUDGET: u64 = 1 << 22;

fn check_vars(n: usize, cap: usize, what: &'static str) -> Result<()> {
    if n > cap {
        Err(Error::VarCap { n, cap, what })
    } else {
        Ok(())
    }
}

/// A packed vector of bits.
#[derive(Clone, PartialEq, Eq)]
pub struct Bits {
    len: usize,
    words: Vec<u64>,
}

impl Bits {
    pub fn zeros(len: usize) -> Self {
        Bits {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Bits::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i >> 6] >> (i & 63) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, bit: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i & 63);
        if bit {
            self.words[i >> 6] |= mask;
        } else {
            self.words[i >> 6] &= !mask;
        }
    }

    #[inline]
    pub fn toggle(&mut self, i: usize) {
        self.words[i >> 6] ^= 1u64 << (i & 63);
    }

    pub fn count_ones(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }
}

impl fmt::Debug for Bits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", u8::from(self.get(i)))?;
        }
        Ok(())
    }
}

// Selects bit positions whose index has a 0 at the stride bit.
const STRIDE_MASKS: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0f0f_0f0f_0f0f_0f0f,
    0x00ff_00ff_00ff_00ff,
    0x0000_ffff_0000_ffff,
    0x0000_0000_ffff_ffff,
];

/// In-place binary Moebius transform: `out[m] = XOR of in[b] over b ⊆ m`.
///
/// Self-inverse; maps a function's ANF coefficient vector to its
/// evaluation vector and back.
pub fn moebius_in_place(v: &mut Bits) -> Result<()> {
    if !v.len.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(v.len));
    }
    for (p, &mask) in STRIDE_MASKS.iter().enumerate() {
        let stride = 1usize << p;
        if stride >= v.len {
            break;
        }
        for w in v.words.iter_mut() {
            *w ^= (*w & mask) << stride;
        }
    }
    let words = &mut v.words;
    let mut stride = 1usize;
    while stride < words.len() {
        let mut start = 0;
        while start < words.len() {
            for k in 0..stride {
                words[start + stride + k] ^= words[start + k];
            }
            start += 2 * stride;
        }
        stride *= 2;
    }
    Ok(())
}

/// Out-of-place [`moebius_in_place`].
pub fn moebius(v: &Bits) -> Result<Bits> {
    let mut out = v.clone();
    moebius_in_place(&mut out)?;
    Ok(out)
}

/// Point evaluations of a Boolean function in `n` variables.
///
/// Bit `m` (read as a subset mask, bit `i` = value of `x_{i+1}`) is the
/// function's value at the point `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruthTable {
    n: usize,
    bits: Bits,
}

/// ANF coefficients of a Boolean function: bit `m` is the coefficient of
/// the monomial `X^m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseAnf {
    n: usize,
    bits: Bits,
}

macro_rules! dense_vector_impl {
    ($ty:ident) => {
        impl $ty {
            pub fn new(n: usize, bits: Bits) -> Result<Self> {
                check_vars(n, MAX_DENSE_VARS, "dense vectors")?;
                if bits.len() != 1usize << n {
                    return Err(Error::NotPowerOfTwo(bits.len()));
                }
                Ok(Self { n, bits })
            }

            pub fn n(&self) -> usize {
                self.n
            }

            pub fn bits(&self) -> &Bits {
                &self.bits
            }

            pub fn into_bits(self) -> Bits {
                self.bits
            }
        }
    };
}

dense_vector_impl!(TruthTable);
dense_vector_impl!(DenseAnf);

impl TruthTable {
    /// The ANF of this function, via the transform.
    pub fn to_anf(&self) -> DenseAnf {
        let mut bits = self.bits.clone();
        moebius_in_place(&mut bits).expect("length is a power of two");
        DenseAnf { n: self.n, bits }
    }
}

impl DenseAnf {
    /// The evaluation vector of this ANF, via the transform.
    pub fn to_truth_table(&self) -> TruthTable {
        let mut bits = self.bits.clone();
        moebius_in_place(&mut bits).expect("length is a power of two");
        TruthTable { n: self.n, bits }
    }

    /// Evaluates at one point: XOR of coefficients over submasks.
    pub fn evaluate(&self, point: u32) -> bool {
        debug_assert!((point as usize) < 1usize << self.n);
        let mut acc = false;
        let mut sub = point;
        loop {
            acc ^= self.bits.get(sub as usize);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & point;
        }
        acc
    }

    /// Recognizes a symmetric ANF and collects it into the sigma basis.
    ///
    /// Returns `None` if two monomials of the same degree carry different
    /// coefficients.
    pub fn collect_symmetric(&self) -> Option<SymmetricPoly> {
        let mut seen: Vec<Option<bool>> = vec![None; self.n + 1];
        for m in 0..1usize << self.n {
            let d = (m as u32).count_ones() as usize;
            let bit = self.bits.get(m);
            match seen[d] {
                None => seen[d] = Some(bit),
                Some(prev) if prev != bit => return None,
                _ => {}
            }
        }
        let constant = seen[0].unwrap_or(false);
        let degrees = (1..=self.n as u64).filter(|&d| seen[d as usize] == Some(true));
        Some(SymmetricPoly::from_degrees(constant, degrees))
    }
}

/// A square-free multivariate polynomial as an explicit set of monomials,
/// each a subset mask over the variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseAnf {
    n: usize,
    monomials: BTreeSet<u32>,
}

impl SparseAnf {
    pub fn new(n: usize) -> Result<Self> {
        check_vars(n, MAX_DENSE_VARS, "sparse polynomials")?;
        Ok(SparseAnf {
            n,
            monomials: BTreeSet::new(),
        })
    }

    pub fn from_monomials(n: usize, masks: impl IntoIterator<Item = u32>) -> Result<Self> {
        let mut f = SparseAnf::new(n)?;
        for m in masks {
            f.toggle(m);
        }
        Ok(f)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn monomials(&self) -> impl Iterator<Item = u32> + '_ {
        self.monomials.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    /// XOR-inserts a monomial; a second insertion cancels the first.
    pub fn toggle(&mut self, mask: u32) {
        debug_assert!((mask as usize) < 1usize << self.n);
        if !self.monomials.remove(&mask) {
            self.monomials.insert(mask);
        }
    }

    /// XOR of coefficients over monomials contained in the point mask.
    pub fn evaluate(&self, point: u32) -> bool {
        self.monomials.iter().filter(|&&m| m & point == m).count() % 2 == 1
    }

    /// Monomial-level product with square-free reduction: each pair of
    /// monomials contributes their union, parity-accumulated.
    pub fn mul(&self, other: &SparseAnf) -> SparseAnf {
        debug_assert_eq!(self.n, other.n);
        let mut out = SparseAnf {
            n: self.n,
            monomials: BTreeSet::new(),
        };
        for &a in &self.monomials {
            for &b in &other.monomials {
                out.toggle(a | b);
            }
        }
        out
    }

    pub fn xor(&self, other: &SparseAnf) -> SparseAnf {
        debug_assert_eq!(self.n, other.n);
        SparseAnf {
            n: self.n,
            monomials: self
                .monomials
                .symmetric_difference(&other.monomials)
                .copied()
                .collect(),
        }
    }

    /// Dense coefficient vector of this polynomial.
    pub fn to_dense(&self) -> DenseAnf {
        let mut bits = Bits::zeros(1 << self.n);
        for &m in &self.monomials {
            bits.toggle(m as usize);
        }
        DenseAnf { n: self.n, bits }
    }

    pub fn from_dense(f: &DenseAnf) -> SparseAnf {
        let mut monomials = BTreeSet::new();
        for m in 0..1usize << f.n {
            if f.bits.get(m) {
                monomials.insert(m as u32);
            }
        }
        SparseAnf { n: f.n, monomials }
    }
}

/// Bulk evaluation of a sparse polynomial: the dense transform applied to
/// its coefficient vector.
pub fn truth_table_of(f: &SparseAnf) -> TruthTable {
    f.to_dense().to_truth_table()
}

/// Symbolic Moebius transform, monomial by monomial.
///
/// The image of the monomial `X^b` is `(1 + X)^{complement of b} * X^b`:
/// every way of extending `b` inside its complement, XOR-accumulated.
/// Slow by construction; capped at [`MAX_SYMBOLIC_VARS`].
pub fn moebius_symbolic(f: &SparseAnf) -> Result<SparseAnf> {
    check_vars(f.n, MAX_SYMBOLIC_VARS, "the symbolic transform")?;
    let full = (1u32 << f.n) - 1;
    let mut out = SparseAnf::new(f.n)?;
    for &b in &f.monomials {
        let comp = full & !b;
        let mut sub = comp;
        loop {
            out.toggle(b | sub);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & comp;
        }
    }
    Ok(out)
}

/// Next-larger integer with the same popcount (Gosper's hack).
fn next_same_popcount(m: u32) -> u32 {
    let c = m & m.wrapping_neg();
    let r = m + c;
    r | (((m ^ r) >> 2) / c)
}

/// Expands a finite sigma-basis polynomial into its explicit monomials in
/// `n` variables: all `C(n, i)` degree-`i` subsets for each supported
/// degree, plus the constant.
pub fn expand(p: &SymmetricPoly, n: usize) -> Result<SparseAnf> {
    check_vars(n, MAX_DENSE_VARS, "expansion")?;
    assert!(
        p.is_finite(),
        "restrict periodic polynomials before expanding"
    );
    let mut total: u64 = 0;
    for d in p.degrees().filter(|&d| d <= n as u64) {
        total += binomial(n as u64, d);
        if total > EXPAND_BUDGET {
            return Err(Error::BudgetExceeded {
                monomials: total,
                budget: EXPAND_BUDGET,
            });
        }
    }
    let mut out = SparseAnf::new(n)?;
    if p.constant_bit() {
        out.toggle(0);
    }
    for d in p.degrees().filter(|&d| d <= n as u64) {
        let mut m = (1u32 << d) - 1;
        let limit = 1u32 << n;
        while m < limit {
            out.toggle(m);
            if m == 0 {
                break;
            }
            m = next_same_popcount(m);
        }
    }
    Ok(out)
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

// ---------------------------------------------------------------------
// Text formats.

/// Writes a dense bit vector as two lines: `n=<int>` and the 2^n bits in
/// mask order.
pub fn format_vector(n: usize, bits: &Bits) -> String {
    let mut out = format!("n={n}\n");
    out.reserve(bits.len() + 1);
    for i in 0..bits.len() {
        out.push(if bits.get(i) { '1' } else { '0' });
    }
    out.push('\n');
    out
}

/// Parses the two-line vector format produced by [`format_vector`].
pub fn parse_vector(text: &str) -> Result<(usize, Bits)> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty vector file".into()))?;
    let n: usize = header
        .strip_prefix("n=")
        .ok_or_else(|| Error::Parse("expected 'n=<int>' header".into()))?
        .trim()
        .parse()
        .map_err(|_| Error::Parse("invalid variable count".into()))?;
    check_vars(n, MAX_DENSE_VARS, "dense vectors")?;
    let body = lines
        .next()
        .ok_or_else(|| Error::Parse("missing bit line".into()))?;
    if body.len() != 1usize << n {
        return Err(Error::Parse(format!(
            "expected {} bits, found {}",
            1usize << n,
            body.len()
        )));
    }
    let mut bits = Bits::zeros(1 << n);
    for (i, c) in body.chars().enumerate() {
        match c {
            '0' => {}
            '1' => bits.set(i, true),
            _ => return Err(Error::Parse(format!("invalid bit character '{c}'"))),
        }
    }
    Ok((n, bits))
}

impl fmt::Display for SparseAnf {
    /// ANF text format: monomials in ascending mask order, variables
    /// ascending within a monomial, `1` for the constant, `0` for zero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monomials.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .monomials
            .iter()
            .map(|&m| {
                if m == 0 {
                    "1".to_string()
                } else {
                    (0..32)
                        .filter(|i| m >> i & 1 == 1)
                        .map(|i| format!("x{}", i + 1))
                        .collect::<Vec<_>>()
                        .join("*")
                }
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}
