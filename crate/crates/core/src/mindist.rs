//! Minimum-distance certification of binary codes through the
//! composition identity `phi_t ∘ F = phi_1`.
//!
//! A code is given either by a generator matrix (`F(v) = v * G`) or by an
//! explicit evaluation table. The identity holds exactly when every
//! nonzero message maps to a word of weight at least `t`; for linear
//! codes the minimum weight is the minimum distance, so a binary search
//! over `t` pins `d` in at most `ceil(log2 n)` identity checks. A
//! brute-force weight enumeration serves as the independent oracle.

use crate::anf::{expand, Bits};
use crate::error::{Error, Result};
use crate::sphere::build_phi;

/// Cap on the message arity of evaluation tables (2^k entries).
pub const MAX_MAP_VARS: usize = 24;
/// Cap on the message arity of the symbolic backend (dense 2^k vectors).
pub const MAX_SYMBOLIC_K: usize = 16;
/// Code length cap; words are stored in a single machine word.
pub const MAX_CODE_LEN: usize = 64;

/// Which backend carries out the identity check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Pointwise: the two ANFs in `k` variables are equal iff they agree
    /// on all `2^k` points.
    Eval,
    /// Literal substitution of the linear forms into the expanded
    /// polynomial, with square-free reduction.
    Symbolic,
}

/// A `k x n` binary generator matrix; row `i`, bit `j` is the entry in
/// column `j + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorMatrix {
    k: usize,
    n: usize,
    rows: Vec<u64>,
}

impl GeneratorMatrix {
    pub fn new(n: usize, rows: Vec<u64>) -> Result<Self> {
        let k = rows.len();
        if n == 0 || n > MAX_CODE_LEN || k == 0 || k > n {
            return Err(Error::Parse(format!("invalid code dimensions [{n},{k}]")));
        }
        let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        if rows.iter().any(|&r| r & !mask != 0) {
            return Err(Error::Parse("row wider than the code length".into()));
        }
        Ok(GeneratorMatrix { k, n, rows })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    /// `F(v) = v * G`: XOR of the rows selected by the message bits.
    pub fn encode(&self, v: u64) -> u64 {
        let mut word = 0;
        for (i, &row) in self.rows.iter().enumerate() {
            if v >> i & 1 == 1 {
                word ^= row;
            }
        }
        word
    }

    /// Rank over F2 by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut rows = self.rows.clone();
        let mut rank = 0;
        for col in 0..self.n {
            let bit = 1u64 << col;
            if let Some(p) = (rank..rows.len()).find(|&r| rows[r] & bit != 0) {
                rows.swap(rank, p);
                let pivot = rows[rank];
                for (r, row) in rows.iter_mut().enumerate() {
                    if r != rank && *row & bit != 0 {
                        *row ^= pivot;
                    }
                }
                rank += 1;
            }
        }
        rank
    }

    fn require_full_rank(&self) -> Result<()> {
        let rank = self.rank();
        if rank != self.k {
            Err(Error::RankDeficient { rank, k: self.k })
        } else {
            Ok(())
        }
    }
}

/// An explicit generator map: `images[v] = F(v)` for all `2^k` messages.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeMap {
    k: usize,
    n: usize,
    images: Vec<u64>,
}

impl CodeMap {
    pub fn new(k: usize, n: usize, images: Vec<u64>) -> Result<Self> {
        if k == 0 || k > MAX_MAP_VARS || n == 0 || n > MAX_CODE_LEN {
            return Err(Error::Parse(format!("invalid map dimensions [{n},{k}]")));
        }
        if images.len() != 1usize << k {
            return Err(Error::Parse(format!(
                "expected {} images, found {}",
                1usize << k,
                images.len()
            )));
        }
        if images[0] != 0 {
            return Err(Error::NonzeroOrigin);
        }
        let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        if images.iter().any(|&w| w & !mask != 0) {
            return Err(Error::Parse("image wider than the code length".into()));
        }
        Ok(CodeMap { k, n, images })
    }

    pub fn from_matrix(g: &GeneratorMatrix) -> Result<Self> {
        if g.k > MAX_MAP_VARS {
            return Err(Error::VarCap {
                n: g.k,
                cap: MAX_MAP_VARS,
                what: "code map tabulation",
            });
        }
        let images = (0..1u64 << g.k).map(|v| g.encode(v)).collect();
        CodeMap::new(g.k, g.n, images)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn images(&self) -> &[u64] {
        &self.images
    }
}

/// A code handed to the distance checks: a matrix or an explicit map.
#[derive(Debug, Clone)]
pub enum Code {
    Linear(GeneratorMatrix),
    Map(CodeMap),
}

/// Checks `min weight >= t` through the identity `phi_t ∘ F = phi_1`.
///
/// Generator matrices must be full rank; the symbolic method is only
/// defined for them.
pub fn weight_at_least(code: &Code, t: u64, method: Method) -> Result<bool> {
    assert!(t >= 1);
    match (code, method) {
        (Code::Map(map), Method::Eval) => weight_at_least_eval(map, t),
        (Code::Map(_), Method::Symbolic) => Err(Error::Parse(
            "symbolic checks need a generator matrix".into(),
        )),
        (Code::Linear(g), Method::Eval) => {
            g.require_full_rank()?;
            weight_at_least_eval(&CodeMap::from_matrix(g)?, t)
        }
        (Code::Linear(g), Method::Symbolic) => {
            g.require_full_rank()?;
            weight_at_least_symbolic(g, t)
        }
    }
}

fn weight_at_least_eval(map: &CodeMap, t: u64) -> Result<bool> {
    let phi = build_phi(t)?;
    // phi_t depends only on the weight of the word.
    let by_weight: Vec<bool> = (0..=map.n as u64).map(|w| phi.eval_at_weight(w)).collect();
    Ok(map
        .images
        .iter()
        .enumerate()
        .all(|(v, &word)| by_weight[word.count_ones() as usize] == (v != 0)))
}

fn weight_at_least_symbolic(g: &GeneratorMatrix, t: u64) -> Result<bool> {
    if g.k > MAX_SYMBOLIC_K {
        return Err(Error::VarCap {
            n: g.k,
            cap: MAX_SYMBOLIC_K,
            what: "the symbolic backend",
        });
    }
    let outer = expand(&build_phi(t)?.restrict(g.n as u64), g.n)?;
    // Column j substitutes to the linear form over the messages bits
    // selected by that column of G.
    let columns: Vec<u32> = (0..g.n)
        .map(|j| {
            (0..g.k)
                .filter(|&i| g.rows[i] >> j & 1 == 1)
                .fold(0u32, |m, i| m | 1 << i)
        })
        .collect();
    let size = 1usize << g.k;
    let mut composed = Bits::zeros(size);
    for mono in outer.monomials() {
        // Product of the column forms, with y_i^2 = y_i reduction.
        let mut term = Bits::zeros(size);
        term.set(0, true);
        for j in (0..g.n).filter(|&j| mono >> j & 1 == 1) {
            let mut next = Bits::zeros(size);
            for a in 0..size {
                if term.get(a) {
                    for i in (0..g.k).filter(|&i| columns[j] >> i & 1 == 1) {
                        next.toggle(a | 1 << i);
                    }
                }
            }
            term = next;
        }
        for a in 0..size {
            if term.get(a) {
                composed.toggle(a);
            }
        }
    }
    let target = expand(&build_phi(1)?.restrict(g.k as u64), g.k)?
        .to_dense()
        .into_bits();
    Ok(composed == target)
}

/// Outcome of [`min_distance`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DistanceResult {
    pub d: u64,
    /// Identity checks performed by the search.
    pub checks: u32,
}

/// Exact minimum distance of a full-rank linear code.
///
/// Binary search over `t in [1, n]` for the largest certified threshold;
/// `t = 1` holds for free since a full-rank map sends nonzero messages to
/// nonzero words.
pub fn min_distance(g: &GeneratorMatrix) -> Result<DistanceResult> {
    g.require_full_rank()?;
    let map = CodeMap::from_matrix(g)?;
    let mut lo = 1u64;
    let mut hi = g.n as u64;
    let mut checks = 0;
    while lo < hi {
        let mid = (lo + hi + 1) / 2;
        checks += 1;
        if weight_at_least_eval(&map, mid)? {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    Ok(DistanceResult { d: lo, checks })
}

/// Verdict of the one-directional nonlinear bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// The identity fails, so the minimum distance is below `t`.
    DistanceBelow,
    /// The identity holds; for nonlinear codes this bounds the minimum
    /// weight, not the distance.
    Inconclusive,
}

/// Sufficient test for `d < t` on an arbitrary code map.
pub fn weight_bound_nonlinear(map: &CodeMap, t: u64) -> Result<Verdict> {
    if weight_at_least_eval(map, t)? {
        Ok(Verdict::Inconclusive)
    } else {
        Ok(Verdict::DistanceBelow)
    }
}

/// The independent oracle: minimum weight over all nonzero messages by
/// exhaustive enumeration.
pub fn brute_force_min_weight(code: &Code) -> Result<u64> {
    let map = match code {
        Code::Map(map) => map.clone(),
        Code::Linear(g) => CodeMap::from_matrix(g)?,
    };
    Ok(map
        .images
        .iter()
        .skip(1)
        .map(|w| w.count_ones() as u64)
        .min()
        .expect("k >= 1"))
}

// ---------------------------------------------------------------------
// File formats.

/// Parses a generator-matrix file: optional `#` comments, optional
/// `k n` header, then `k` rows of `n` binary digits (whitespace between
/// digits permitted).
pub fn parse_generator_matrix(text: &str) -> Result<GeneratorMatrix> {
    let lines: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    if lines.is_empty() {
        return Err(Error::Parse("empty generator-matrix file".into()));
    }
    let mut idx = 0;
    let mut header: Option<(usize, usize)> = None;
    let fields: Vec<&str> = lines[0].split_whitespace().collect();
    if fields.len() == 2 && fields.iter().any(|f| f.len() > 1 || !"01".contains(*f)) {
        let k = fields[0]
            .parse()
            .map_err(|_| Error::Parse("invalid k in header".into()))?;
        let n = fields[1]
            .parse()
            .map_err(|_| Error::Parse("invalid n in header".into()))?;
        header = Some((k, n));
        idx = 1;
    }
    let mut rows = Vec::new();
    let mut n = header.map(|(_, n)| n);
    for line in &lines[idx..] {
        let mut row = 0u64;
        let mut width = 0;
        for c in line.chars().filter(|c| !c.is_whitespace()) {
            match c {
                '0' => {}
                '1' => {
                    if width >= 64 {
                        return Err(Error::Parse("row wider than 64 columns".into()));
                    }
                    row |= 1 << width;
                }
                _ => return Err(Error::Parse(format!("invalid matrix character '{c}'"))),
            }
            width += 1;
        }
        match n {
            None => n = Some(width),
            Some(n) if n != width => {
                return Err(Error::Parse(format!("row of width {width}, expected {n}")))
            }
            _ => {}
        }
        rows.push(row);
    }
    if let Some((k, _)) = header {
        if rows.len() != k {
            return Err(Error::Parse(format!(
                "header declares k = {k} but found {} rows",
                rows.len()
            )));
        }
    }
    GeneratorMatrix::new(n.unwrap_or(0), rows)
}

/// Parses a code-map file: `k n` header, then `2^k` lines
/// `v_mask image_mask` in binary.
pub fn parse_code_map(text: &str) -> Result<CodeMap> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty code-map file".into()))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::Parse("expected 'k n' header".into()));
    }
    let k: usize = fields[0]
        .parse()
        .map_err(|_| Error::Parse("invalid k in header".into()))?;
    let n: usize = fields[1]
        .parse()
        .map_err(|_| Error::Parse("invalid n in header".into()))?;
    if k == 0 || k > MAX_MAP_VARS {
        return Err(Error::Parse(format!("unsupported arity k = {k}")));
    }
    let parse_bin = |s: &str, width: usize| -> Result<u64> {
        if s.len() != width || !s.chars().all(|c| c == '0' || c == '1') {
            return Err(Error::Parse(format!(
                "expected {width} binary digits, found '{s}'"
            )));
        }
        // First character is column 1 (least significant).
        Ok(s.chars()
            .rev()
            .fold(0u64, |acc, c| acc << 1 | u64::from(c == '1')))
    };
    let mut images = vec![None; 1usize << k];
    for line in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::Parse(format!("expected 'v image', found '{line}'")));
        }
        let v = parse_bin(fields[0], k)? as usize;
        let image = parse_bin(fields[1], n)?;
        if images[v].replace(image).is_some() {
            return Err(Error::Parse(format!("duplicate message {v:0k$b}")));
        }
    }
    let images: Option<Vec<u64>> = images.into_iter().collect();
    let images = images.ok_or_else(|| Error::Parse("missing message entries".into()))?;
    CodeMap::new(k, n, images)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn matrix(rows: &[&str]) -> GeneratorMatrix {
        parse_generator_matrix(&rows.join("\n")).unwrap()
    }

    pub(crate) fn hamming_7_4() -> GeneratorMatrix {
        matrix(&["1000110", "0100101", "0010011", "0001111"])
    }

    fn extended_hamming_8_4() -> GeneratorMatrix {
        matrix(&["10001101", "01001011", "00100111", "00011110"])
    }

    #[test]
    fn weight_at_least_examples() {
        let rep = matrix(&["111"]);
        assert!(weight_at_least(&Code::Linear(rep.clone()), 3, Method::Eval).unwrap());
        assert!(!weight_at_least(&Code::Linear(rep), 4, Method::Eval).unwrap());

        let ham = hamming_7_4();
        for method in [Method::Eval, Method::Symbolic] {
            assert!(weight_at_least(&Code::Linear(ham.clone()), 3, method).unwrap());
            assert!(!weight_at_least(&Code::Linear(ham.clone()), 4, method).unwrap());
            assert!(weight_at_least(&Code::Linear(ham.clone()), 1, method).unwrap());
        }
    }

    #[test]
    fn min_distance_examples() {
        assert_eq!(min_distance(&hamming_7_4()).unwrap().d, 3);
        assert_eq!(min_distance(&matrix(&["111"])).unwrap().d, 3);
        assert_eq!(min_distance(&extended_hamming_8_4()).unwrap().d, 4);
    }

    #[test]
    fn search_count_is_logarithmic() {
        for g in [hamming_7_4(), extended_hamming_8_4(), matrix(&["111"])] {
            let result = min_distance(&g).unwrap();
            let bound = (g.n() as f64).log2().ceil() as u32 + 1;
            assert!(
                result.checks <= bound,
                "{} checks for n={}",
                result.checks,
                g.n()
            );
        }
    }

    #[test]
    fn rank_deficiency_is_an_error() {
        let g = matrix(&["1100", "1100"]);
        assert!(matches!(
            min_distance(&g),
            Err(Error::RankDeficient { rank: 1, k: 2 })
        ));
        assert!(weight_at_least(&Code::Linear(g), 1, Method::Eval).is_err());
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(
            brute_force_min_weight(&Code::Linear(hamming_7_4())).unwrap(),
            3
        );
        let id5 = matrix(&["10000", "01000", "00100", "00010", "00001"]);
        assert_eq!(brute_force_min_weight(&Code::Linear(id5)).unwrap(), 1);
    }

    #[test]
    fn nonlinear_bound_examples() {
        let ham = CodeMap::from_matrix(&hamming_7_4()).unwrap();
        assert_eq!(
            weight_bound_nonlinear(&ham, 4).unwrap(),
            Verdict::DistanceBelow
        );
        assert_eq!(
            weight_bound_nonlinear(&ham, 3).unwrap(),
            Verdict::Inconclusive
        );

        let identity = CodeMap::new(4, 4, (0..16).collect()).unwrap();
        assert_eq!(
            weight_bound_nonlinear(&identity, 2).unwrap(),
            Verdict::DistanceBelow
        );
    }

    #[test]
    fn code_map_validates_origin() {
        assert_eq!(
            CodeMap::new(2, 3, vec![1, 2, 3, 4]),
            Err(Error::NonzeroOrigin)
        );
    }

    #[test]
    fn matrix_parsing() {
        // Header, comments and spaced digits are all accepted.
        let text = "# a [7,4] code\n4 7\n1 0 0 0 1 1 0\n0100101\n0010011\n0001111\n";
        assert_eq!(parse_generator_matrix(text).unwrap(), hamming_7_4());

        assert!(parse_generator_matrix("10\n011\n").is_err());
        assert!(parse_generator_matrix("2 3\n101\n").is_err());
        assert!(parse_generator_matrix("abc\n").is_err());
        assert!(parse_generator_matrix("").is_err());
    }

    #[test]
    fn code_map_parsing() {
        let text = "2 3\n00 000\n10 110\n01 011\n11 101\n";
        let map = parse_code_map(text).unwrap();
        assert_eq!(map.images(), &[0b000, 0b011, 0b110, 0b101]);

        assert!(parse_code_map("2 3\n00 000\n").is_err());
        assert!(parse_code_map("2 3\n00 000\n00 000\n01 011\n11 101\n").is_err());
    }
}
