//! Exact data model for a triple of graphs `G1, G2, G3` on a common vertex
//! set, stored as one coloring: every unordered vertex pair carries a subset
//! of the three colors, color `i` meaning "this pair is an edge of `G_i`".
//!
//! The representation is a flat upper-triangular array of 3-bit masks indexed
//! by the lexicographic rank of the pair, so triangle scans stay cache-dense.
//! All counting is exact integer arithmetic; floats never enter this module.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// One of the three colors (equivalently: an index into `G1, G2, G3`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Color(u8);

impl Color {
    pub const ONE: Color = Color(1);
    pub const TWO: Color = Color(2);
    pub const THREE: Color = Color(3);
    /// All colors in ascending order.
    pub const ALL: [Color; 3] = [Color::ONE, Color::TWO, Color::THREE];

    /// A color from its 1-based id. Returns `None` outside `1..=3`.
    pub fn new(id: u8) -> Option<Color> {
        (1..=3).contains(&id).then_some(Color(id))
    }

    /// 1-based id, as used in the file formats.
    pub fn id(self) -> u8 {
        self.0
    }

    /// 0-based bit position inside a [`ColorSet`] mask.
    pub fn bit(self) -> u8 {
        self.0 - 1
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The subset of colors carried by one vertex pair. Bit `i-1` set means the
/// pair is an edge of `G_i`. A pair with cardinality `t` is "t-colored"; the
/// empty set means uncolored.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ColorSet(u8);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);
    pub const ALL: ColorSet = ColorSet(0b111);

    /// Builds a set from a raw 3-bit mask. Returns `None` above 7.
    pub fn from_bits(bits: u8) -> Option<ColorSet> {
        (bits <= 7).then_some(ColorSet(bits))
    }

    /// Builds a set from a slice of colors.
    pub fn from_colors(colors: &[Color]) -> ColorSet {
        let mut s = ColorSet::EMPTY;
        for &c in colors {
            s = s.with(c);
        }
        s
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn contains(self, c: Color) -> bool {
        self.0 >> c.bit() & 1 != 0
    }

    #[must_use]
    pub fn with(self, c: Color) -> ColorSet {
        ColorSet(self.0 | 1 << c.bit())
    }

    #[must_use]
    pub fn without(self, c: Color) -> ColorSet {
        ColorSet(self.0 & !(1 << c.bit()))
    }

    /// Number of colors present, i.e. the `t` in "t-colored".
    pub fn cardinality(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Colors present, ascending.
    pub fn colors(self) -> impl Iterator<Item = Color> {
        Color::ALL.into_iter().filter(move |c| self.contains(*c))
    }

    /// Color ids present, ascending. Convenience for report serialization.
    pub fn color_ids(self) -> Vec<u8> {
        self.colors().map(Color::id).collect()
    }

    /// The image of this set under a color permutation.
    #[must_use]
    pub fn permuted(self, perm: &ColorPermutation) -> ColorSet {
        let mut s = ColorSet::EMPTY;
        for c in self.colors() {
            s = s.with(perm.apply(c));
        }
        s
    }
}

impl fmt::Display for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, c) in self.colors().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

/// A permutation of the three colors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ColorPermutation {
    image: [Color; 3],
}

impl ColorPermutation {
    pub const IDENTITY: ColorPermutation = ColorPermutation {
        image: [Color::ONE, Color::TWO, Color::THREE],
    };

    /// `image[i]` is where color `i+1` goes. Returns `None` unless the images
    /// are a permutation of `{1,2,3}`.
    pub fn new(image: [Color; 3]) -> Option<ColorPermutation> {
        let mut seen = [false; 3];
        for c in image {
            let b = c.bit() as usize;
            if seen[b] {
                return None;
            }
            seen[b] = true;
        }
        Some(ColorPermutation { image })
    }

    pub fn apply(&self, c: Color) -> Color {
        self.image[c.bit() as usize]
    }

    /// All six color permutations, in lexicographic image order.
    pub fn all() -> [ColorPermutation; 6] {
        let c = Color::ALL;
        let mk = |a: usize, b: usize, d: usize| ColorPermutation {
            image: [c[a], c[b], c[d]],
        };
        [
            mk(0, 1, 2),
            mk(0, 2, 1),
            mk(1, 0, 2),
            mk(1, 2, 0),
            mk(2, 0, 1),
            mk(2, 1, 0),
        ]
    }
}

/// Exact edge counts `(e(G1), e(G2), e(G3))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeCounts {
    pub e1: u64,
    pub e2: u64,
    pub e3: u64,
}

impl EdgeCounts {
    pub fn new(e1: u64, e2: u64, e3: u64) -> EdgeCounts {
        EdgeCounts { e1, e2, e3 }
    }

    pub fn get(&self, c: Color) -> u64 {
        match c {
            Color::ONE => self.e1,
            Color::TWO => self.e2,
            _ => self.e3,
        }
    }

    pub fn sum(&self) -> u64 {
        self.e1 + self.e2 + self.e3
    }

    /// The product `e(G1) * e(G2) * e(G3)`, overflow-checked. The counts of
    /// any coloring on `n <= 2048` vertices stay inside 64 bits; the checked
    /// 128-bit widening makes an overflow loud rather than silent.
    pub fn product(&self) -> Result<u128, ProductOverflow> {
        (self.e1 as u128)
            .checked_mul(self.e2 as u128)
            .and_then(|p| p.checked_mul(self.e3 as u128))
            .ok_or(ProductOverflow)
    }

    /// Counts permuted by a color permutation.
    #[must_use]
    pub fn permuted(&self, perm: &ColorPermutation) -> EdgeCounts {
        let mut out = [0u64; 3];
        for c in Color::ALL {
            out[perm.apply(c).bit() as usize] = self.get(c);
        }
        EdgeCounts::new(out[0], out[1], out[2])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Error)]
#[error("edge-count product exceeds the 128-bit integer range")]
pub struct ProductOverflow;

/// A certified rainbow triangle: three vertices plus a bijection of the three
/// triangle pairs to three distinct colors, each contained in its pair's mask.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RainbowWitness {
    /// Vertices with `u < v < w`.
    pub vertices: (usize, usize, usize),
    /// Colors assigned to the pairs `(u,v)`, `(u,w)`, `(v,w)`, in that order.
    pub colors: [Color; 3],
}

/// Errors from constructing or mutating a [`Coloring`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("vertex count must be at least 1")]
    EmptyVertexSet,
    #[error("vertex index {index} out of range for {n} vertices")]
    VertexOutOfRange { index: usize, n: usize },
    #[error("pair endpoints must be distinct (got vertex {0} twice)")]
    LoopPair(usize),
    #[error("canonical form limited to {limit} vertices, coloring has {n}")]
    CanonicalLimit { n: usize, limit: usize },
}

/// Parse errors for the two file formats.
#[derive(Debug, Error)]
pub enum ParseError {
    #[error("invalid JSON coloring: {0}")]
    Json(String),
    #[error("vertex count must be at least 1")]
    EmptyVertexSet,
    #[error("vertex index {index} out of range for {n} vertices")]
    VertexOutOfRange { index: usize, n: usize },
    #[error("pair endpoints must be distinct (got vertex {0} twice)")]
    LoopPair(usize),
    #[error("duplicate pair ({u},{v})")]
    DuplicatePair { u: usize, v: usize },
    #[error("color id {0} outside 1..=3")]
    BadColor(u8),
    #[error("compact string needs {expected} mask digits for n={n}, got {got}")]
    LengthMismatch {
        n: usize,
        expected: usize,
        got: usize,
    },
    #[error("mask character {ch:?} at position {pos} is not an octal digit 0-7")]
    BadMaskChar { ch: char, pos: usize },
    #[error("compact string needs an \"n:\" prefix when n is not supplied out of band")]
    MissingPrefix,
    #[error("invalid vertex-count prefix {0:?}")]
    BadPrefix(String),
}

/// Largest `n` canonicalized by default; the enumeration is `n! * 6` strings.
pub const DEFAULT_CANONICAL_LIMIT: usize = 9;

/// Lexicographic rank of pair `(u, v)` with `u < v` among all pairs of `n`.
#[inline]
pub fn pair_rank(n: usize, u: usize, v: usize) -> usize {
    debug_assert!(u < v && v < n);
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

/// Number of vertex pairs, `C(n,2)`.
#[inline]
pub fn pair_count(n: usize) -> usize {
    n * (n - 1) / 2
}

/// Rainbow-feasibility table: entry `(m1<<6)|(m2<<3)|m3` is true iff three
/// pairs with masks `m1,m2,m3` admit a system of distinct representatives,
/// i.e. a bijection to the three colors. Symmetric in its three arguments.
pub(crate) static RAINBOW_SDR: [bool; 512] = build_sdr_table();

const fn sdr_exists(m1: u8, m2: u8, m3: u8) -> bool {
    // All 6 bijections of {bit0, bit1, bit2} onto the three masks.
    (m1 & 1 != 0 && m2 & 2 != 0 && m3 & 4 != 0)
        || (m1 & 1 != 0 && m2 & 4 != 0 && m3 & 2 != 0)
        || (m1 & 2 != 0 && m2 & 1 != 0 && m3 & 4 != 0)
        || (m1 & 2 != 0 && m2 & 4 != 0 && m3 & 1 != 0)
        || (m1 & 4 != 0 && m2 & 1 != 0 && m3 & 2 != 0)
        || (m1 & 4 != 0 && m2 & 2 != 0 && m3 & 1 != 0)
}

const fn build_sdr_table() -> [bool; 512] {
    let mut t = [false; 512];
    let mut i = 0;
    while i < 512 {
        let m1 = (i >> 6) as u8 & 7;
        let m2 = (i >> 3) as u8 & 7;
        let m3 = i as u8 & 7;
        t[i] = sdr_exists(m1, m2, m3);
        i += 1;
    }
    t
}

#[inline]
pub(crate) fn sdr(m1: u8, m2: u8, m3: u8) -> bool {
    RAINBOW_SDR[((m1 as usize) << 6) | ((m2 as usize) << 3) | m3 as usize]
}

/// The six color assignments `(c_uv, c_uw, c_vw)` in lexicographic order,
/// used to report the least rainbow witness deterministically.
const ASSIGNMENTS: [[Color; 3]; 6] = [
    [Color::ONE, Color::TWO, Color::THREE],
    [Color::ONE, Color::THREE, Color::TWO],
    [Color::TWO, Color::ONE, Color::THREE],
    [Color::TWO, Color::THREE, Color::ONE],
    [Color::THREE, Color::ONE, Color::TWO],
    [Color::THREE, Color::TWO, Color::ONE],
];

/// A triple of graphs on `n` vertices, encoded as a pair-coloring.
///
/// Values are logically immutable once built: mutation happens through
/// `set_colors` during construction, after which read operations are safe to
/// share across threads.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coloring {
    n: usize,
    masks: Vec<ColorSet>,
}

impl Coloring {
    /// An uncolored coloring on `n >= 1` vertices: all `C(n,2)` pairs empty.
    pub fn new(n: usize) -> Result<Coloring, ColoringError> {
        if n == 0 {
            return Err(ColoringError::EmptyVertexSet);
        }
        Ok(Coloring {
            n,
            masks: vec![ColorSet::EMPTY; pair_count(n)],
        })
    }

    pub(crate) fn from_parts(n: usize, masks: Vec<ColorSet>) -> Coloring {
        debug_assert_eq!(masks.len(), pair_count(n));
        Coloring { n, masks }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pair_count(&self) -> usize {
        self.masks.len()
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<(usize, usize), ColoringError> {
        if u == v {
            return Err(ColoringError::LoopPair(u));
        }
        for idx in [u, v] {
            if idx >= self.n {
                return Err(ColoringError::VertexOutOfRange {
                    index: idx,
                    n: self.n,
                });
            }
        }
        Ok(if u < v { (u, v) } else { (v, u) })
    }

    /// Overwrites the mask of pair `{u, v}` (order irrelevant).
    pub fn set_colors(&mut self, u: usize, v: usize, s: ColorSet) -> Result<(), ColoringError> {
        let (u, v) = self.check_pair(u, v)?;
        self.masks[pair_rank(self.n, u, v)] = s;
        Ok(())
    }

    /// The mask of pair `{u, v}`.
    ///
    /// Panics on a loop or out-of-range index; use [`Coloring::try_colors`]
    /// for fallible access.
    pub fn colors(&self, u: usize, v: usize) -> ColorSet {
        self.try_colors(u, v).expect("valid vertex pair")
    }

    pub fn try_colors(&self, u: usize, v: usize) -> Result<ColorSet, ColoringError> {
        let (u, v) = self.check_pair(u, v)?;
        Ok(self.masks[pair_rank(self.n, u, v)])
    }

    /// All pairs in lexicographic order with their masks.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, ColorSet)> + '_ {
        let n = self.n;
        (0..n)
            .flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
            .zip(self.masks.iter())
            .map(|((u, v), &s)| (u, v, s))
    }

    /// Exact per-color edge counts.
    pub fn edge_counts(&self) -> EdgeCounts {
        let mut e = [0u64; 3];
        for s in &self.masks {
            for c in s.colors() {
                e[c.bit() as usize] += 1;
            }
        }
        EdgeCounts::new(e[0], e[1], e[2])
    }

    /// `counts[t]` = number of pairs carrying exactly `t` colors.
    pub fn t_colored_counts(&self) -> [usize; 4] {
        let mut counts = [0usize; 4];
        for s in &self.masks {
            counts[s.cardinality()] += 1;
        }
        counts
    }

    /// True iff every pair carries at least one color.
    pub fn is_fully_colored(&self) -> bool {
        self.masks.iter().all(|s| !s.is_empty())
    }

    /// Finds a rainbow triangle if one exists: vertices `u < v < w` whose
    /// three pairs can be assigned three pairwise distinct colors, each
    /// present in its pair's mask. The search is deterministic: the
    /// lexicographically least `(u, v, w)` is returned with the least
    /// assignment `(c_uv, c_uw, c_vw)`.
    pub fn has_rainbow_triangle(&self) -> Option<RainbowWitness> {
        let n = self.n;
        for u in 0..n {
            for v in u + 1..n {
                let m_uv = self.masks[pair_rank(n, u, v)].bits();
                if m_uv == 0 {
                    continue;
                }
                for w in v + 1..n {
                    let m_uw = self.masks[pair_rank(n, u, w)].bits();
                    let m_vw = self.masks[pair_rank(n, v, w)].bits();
                    if !sdr(m_uv, m_uw, m_vw) {
                        continue;
                    }
                    for [c_uv, c_uw, c_vw] in ASSIGNMENTS {
                        if self.masks[pair_rank(n, u, v)].contains(c_uv)
                            && self.masks[pair_rank(n, u, w)].contains(c_uw)
                            && self.masks[pair_rank(n, v, w)].contains(c_vw)
                        {
                            return Some(RainbowWitness {
                                vertices: (u, v, w),
                                colors: [c_uv, c_uw, c_vw],
                            });
                        }
                    }
                    unreachable!("SDR table and assignment scan disagree");
                }
            }
        }
        None
    }

    /// The coloring with vertices relabeled: pair `{u,v}` of the result
    /// carries the mask of `{perm[u], perm[v]}` in `self`.
    #[must_use]
    pub fn relabeled(&self, perm: &[usize]) -> Coloring {
        assert_eq!(perm.len(), self.n, "permutation length must equal n");
        let n = self.n;
        let mut masks = vec![ColorSet::EMPTY; self.masks.len()];
        for (slot, mask) in masks.iter_mut().enumerate() {
            let (u, v) = unrank(n, slot);
            let (pu, pv) = (perm[u], perm[v]);
            let (pu, pv) = if pu < pv { (pu, pv) } else { (pv, pu) };
            *mask = self.masks[pair_rank(n, pu, pv)];
        }
        Coloring { n, masks }
    }

    /// The coloring with every mask pushed through a color permutation.
    #[must_use]
    pub fn with_permuted_colors(&self, perm: &ColorPermutation) -> Coloring {
        Coloring {
            n: self.n,
            masks: self.masks.iter().map(|s| s.permuted(perm)).collect(),
        }
    }

    /// Canonical byte encoding under vertex relabeling and color renaming:
    /// the minimum compact string over all `n! * 6` symmetries. Two colorings
    /// canonicalize equally iff they are isomorphic. Enumerative by design;
    /// rejected above the limit (default [`DEFAULT_CANONICAL_LIMIT`]).
    pub fn canonical_form(&self) -> Result<String, ColoringError> {
        self.canonical_form_with_limit(DEFAULT_CANONICAL_LIMIT)
    }

    pub fn canonical_form_with_limit(&self, limit: usize) -> Result<String, ColoringError> {
        if self.n > limit {
            return Err(ColoringError::CanonicalLimit { n: self.n, limit });
        }
        let n = self.n;
        let m = self.masks.len();
        // mask image tables for the six color permutations
        let mask_tables: Vec<[u8; 8]> = ColorPermutation::all()
            .iter()
            .map(|p| {
                let mut t = [0u8; 8];
                for (bits, slot) in t.iter_mut().enumerate() {
                    *slot = ColorSet(bits as u8).permuted(p).bits();
                }
                t
            })
            .collect();
        let pair_list: Vec<(usize, usize)> = (0..m).map(|r| unrank(n, r)).collect();

        let mut best: Option<Vec<u8>> = None;
        let mut buf = vec![0u8; m];
        let mut perm: Vec<usize> = (0..n).collect();
        permute(&mut perm, 0, &mut |perm| {
            for table in &mask_tables {
                let mut strictly_less = false;
                let mut complete = true;
                for (slot, &(i, j)) in pair_list.iter().enumerate() {
                    let (u, v) = (perm[i], perm[j]);
                    let (u, v) = if u < v { (u, v) } else { (v, u) };
                    let digit = table[self.masks[pair_rank(n, u, v)].bits() as usize];
                    if let (Some(best), false) = (&best, strictly_less) {
                        if digit > best[slot] {
                            complete = false;
                            break;
                        }
                        if digit < best[slot] {
                            strictly_less = true;
                        }
                    }
                    buf[slot] = digit;
                }
                if complete && (best.is_none() || strictly_less) {
                    best = Some(buf.clone());
                }
            }
        });

        let digits: String = best
            .expect("at least the identity candidate")
            .iter()
            .map(|d| char::from(b'0' + d))
            .collect();
        Ok(format!("{}:{}", n, digits))
    }

    /// JSON file format: `{"n": ..., "pairs": [{"u", "v", "colors"}]}` with
    /// `u < v`, colors sorted ascending, uncolored pairs omitted.
    pub fn to_json_string(&self) -> String {
        let pairs: Vec<JsonPair> = self
            .pairs()
            .filter(|(_, _, s)| !s.is_empty())
            .map(|(u, v, s)| JsonPair {
                u,
                v,
                colors: s.color_ids(),
            })
            .collect();
        serde_json::to_string_pretty(&JsonColoring { n: self.n, pairs })
            .expect("coloring serialization cannot fail")
    }

    /// Compact file format with vertex-count prefix: `"n:digits"` where the
    /// digits are the octal masks of all pairs in lexicographic order.
    pub fn to_compact_string(&self) -> String {
        format!("{}:{}", self.n, self.compact_digits())
    }

    /// Just the mask digits of the compact format (n supplied out of band).
    pub fn compact_digits(&self) -> String {
        self.masks
            .iter()
            .map(|s| char::from(b'0' + s.bits()))
            .collect()
    }

    /// Parses either file format, auto-detected: JSON if the text starts with
    /// `{`, otherwise the compact format with its `n:` prefix.
    pub fn parse(text: &str) -> Result<Coloring, ParseError> {
        let trimmed = text.trim();
        if trimmed.starts_with('{') {
            Coloring::from_json_str(trimmed)
        } else {
            Coloring::from_compact_str(trimmed)
        }
    }

    pub fn from_json_str(text: &str) -> Result<Coloring, ParseError> {
        let raw: JsonColoring =
            serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))?;
        if raw.n == 0 {
            return Err(ParseError::EmptyVertexSet);
        }
        let mut coloring = Coloring::new(raw.n).expect("n >= 1 checked");
        let mut seen = BTreeMap::new();
        for p in &raw.pairs {
            if p.u == p.v {
                return Err(ParseError::LoopPair(p.u));
            }
            for idx in [p.u, p.v] {
                if idx >= raw.n {
                    return Err(ParseError::VertexOutOfRange {
                        index: idx,
                        n: raw.n,
                    });
                }
            }
            let key = (p.u.min(p.v), p.u.max(p.v));
            if seen.insert(key, ()).is_some() {
                return Err(ParseError::DuplicatePair { u: key.0, v: key.1 });
            }
            let mut s = ColorSet::EMPTY;
            for &id in &p.colors {
                let c = Color::new(id).ok_or(ParseError::BadColor(id))?;
                s = s.with(c);
            }
            coloring
                .set_colors(key.0, key.1, s)
                .expect("bounds already validated");
        }
        Ok(coloring)
    }

    pub fn from_compact_str(text: &str) -> Result<Coloring, ParseError> {
        let (prefix, digits) = text.split_once(':').ok_or(ParseError::MissingPrefix)?;
        let n: usize = prefix
            .trim()
            .parse()
            .map_err(|_| ParseError::BadPrefix(prefix.to_string()))?;
        Coloring::from_compact_digits(digits.trim(), n)
    }

    /// Compact format with `n` supplied out of band (no prefix).
    pub fn from_compact_digits(digits: &str, n: usize) -> Result<Coloring, ParseError> {
        if n == 0 {
            return Err(ParseError::EmptyVertexSet);
        }
        let expected = pair_count(n);
        let got = digits.chars().count();
        if got != expected {
            return Err(ParseError::LengthMismatch { n, expected, got });
        }
        let mut masks = Vec::with_capacity(expected);
        for (pos, ch) in digits.chars().enumerate() {
            let bits = match ch {
                '0'..='7' => ch as u8 - b'0',
                _ => return Err(ParseError::BadMaskChar { ch, pos }),
            };
            masks.push(ColorSet(bits));
        }
        Ok(Coloring { n, masks })
    }
}

fn unrank(n: usize, mut rank: usize) -> (usize, usize) {
    for u in 0..n {
        let row = n - u - 1;
        if rank < row {
            return (u, u + 1 + rank);
        }
        rank -= row;
    }
    panic!("pair rank out of range");
}

/// Heap's algorithm; calls `visit` on every permutation of `items`.
fn permute<T, F: FnMut(&[T])>(items: &mut [T], k: usize, visit: &mut F) {
    let n = items.len();
    if k == n {
        visit(items);
        return;
    }
    for i in k..n {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

#[derive(Serialize, Deserialize)]
struct JsonColoring {
    n: usize,
    pairs: Vec<JsonPair>,
}

#[derive(Serialize, Deserialize)]
struct JsonPair {
    u: usize,
    v: usize,
    colors: Vec<u8>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(ids: &[u8]) -> ColorSet {
        ColorSet::from_colors(
            &ids.iter()
                .map(|&i| Color::new(i).unwrap())
                .collect::<Vec<_>>(),
        )
    }

    #[test]
    fn new_coloring_pair_slots() {
        assert_eq!(Coloring::new(3).unwrap().pair_count(), 3);
        assert_eq!(Coloring::new(1).unwrap().pair_count(), 0);
        assert_eq!(Coloring::new(5).unwrap().pair_count(), 10);
        assert_eq!(Coloring::new(0).unwrap_err(), ColoringError::EmptyVertexSet);
        let c = Coloring::new(3).unwrap();
        assert_eq!(c.edge_counts(), EdgeCounts::new(0, 0, 0));
        assert!(c.pairs().all(|(_, _, s)| s.is_empty()));
    }

    #[test]
    fn set_colors_round_trip_and_normalization() {
        let mut c = Coloring::new(4).unwrap();
        c.set_colors(0, 1, set(&[1, 2])).unwrap();
        assert_eq!(c.colors(0, 1), set(&[1, 2]));
        // reversed order stores under the normalized pair
        c.set_colors(1, 0, set(&[3])).unwrap();
        assert_eq!(c.colors(0, 1), set(&[3]));
        // overwrite with empty clears
        c.set_colors(0, 1, ColorSet::EMPTY).unwrap();
        assert!(c.colors(0, 1).is_empty());
        assert_eq!(
            c.set_colors(2, 2, set(&[1])).unwrap_err(),
            ColoringError::LoopPair(2)
        );
        assert_eq!(
            c.set_colors(0, 4, set(&[1])).unwrap_err(),
            ColoringError::VertexOutOfRange { index: 4, n: 4 }
        );
    }

    #[test]
    fn pair_rank_is_lexicographic() {
        let n = 5;
        let mut expected = 0;
        for u in 0..n {
            for v in u + 1..n {
                assert_eq!(pair_rank(n, u, v), expected);
                assert_eq!(unrank(n, expected), (u, v));
                expected += 1;
            }
        }
    }

    #[test]
    fn rainbow_forced_triangle() {
        let mut c = Coloring::new(3).unwrap();
        c.set_colors(0, 1, set(&[1])).unwrap();
        c.set_colors(0, 2, set(&[2])).unwrap();
        c.set_colors(1, 2, set(&[3])).unwrap();
        let w = c.has_rainbow_triangle().unwrap();
        assert_eq!(w.vertices, (0, 1, 2));
        assert_eq!(w.colors, [Color::ONE, Color::TWO, Color::THREE]);
    }

    #[test]
    fn rainbow_needs_all_three_colors() {
        for n in 2..6 {
            let mut c = Coloring::new(n).unwrap();
            for u in 0..n {
                for v in u + 1..n {
                    c.set_colors(u, v, set(&[1, 2])).unwrap();
                }
            }
            assert!(c.has_rainbow_triangle().is_none(), "n={n}");
        }
    }

    #[test]
    fn rainbow_witness_is_least() {
        // two rainbow triangles; the reported one must be lexicographically first
        let mut c = Coloring::new(4).unwrap();
        for (u, v) in [(0usize, 1usize), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)] {
            c.set_colors(u, v, ColorSet::ALL).unwrap();
        }
        let w = c.has_rainbow_triangle().unwrap();
        assert_eq!(w.vertices, (0, 1, 2));
        assert_eq!(w.colors, [Color::ONE, Color::TWO, Color::THREE]);
    }

    #[test]
    fn t_colored_counts_partition() {
        let mut c = Coloring::new(4).unwrap();
        assert_eq!(c.t_colored_counts(), [6, 0, 0, 0]);
        c.set_colors(0, 1, ColorSet::ALL).unwrap();
        c.set_colors(2, 3, set(&[2])).unwrap();
        let t = c.t_colored_counts();
        assert_eq!(t, [4, 1, 0, 1]);
        assert_eq!(t.iter().sum::<usize>(), 6);
        let all = Coloring::from_compact_str("2:7").unwrap();
        assert_eq!(all.t_colored_counts(), [0, 0, 0, 1]);
    }

    #[test]
    fn fully_colored_vacuous_for_single_vertex() {
        assert!(Coloring::new(1).unwrap().is_fully_colored());
        let mut c = Coloring::new(2).unwrap();
        assert!(!c.is_fully_colored());
        c.set_colors(0, 1, set(&[3])).unwrap();
        assert!(c.is_fully_colored());
    }

    #[test]
    fn product_examples() {
        assert_eq!(EdgeCounts::new(6, 6, 6).product().unwrap(), 216);
        assert_eq!(EdgeCounts::new(28, 29, 17).product().unwrap(), 13804);
        assert_eq!(EdgeCounts::new(0, 7, 9).product().unwrap(), 0);
    }

    #[test]
    fn compact_format_example() {
        let c = Coloring::from_compact_str("3:334").unwrap();
        assert_eq!(c.colors(0, 1), set(&[1, 2]));
        assert_eq!(c.colors(0, 2), set(&[1, 2]));
        assert_eq!(c.colors(1, 2), set(&[3]));
        assert_eq!(c.to_compact_string(), "3:334");
    }

    #[test]
    fn parse_errors_are_descriptive() {
        assert!(matches!(
            Coloring::from_compact_str("3:33"),
            Err(ParseError::LengthMismatch {
                n: 3,
                expected: 3,
                got: 2
            })
        ));
        assert!(matches!(
            Coloring::from_compact_str("3:338"),
            Err(ParseError::BadMaskChar { ch: '8', pos: 2 })
        ));
        assert!(matches!(
            Coloring::from_compact_str("abc"),
            Err(ParseError::MissingPrefix)
        ));
        assert!(matches!(
            Coloring::from_compact_str("x:334"),
            Err(ParseError::BadPrefix(_))
        ));
        assert!(matches!(
            Coloring::from_compact_str("0:"),
            Err(ParseError::EmptyVertexSet)
        ));
        let dup = r#"{"n":3,"pairs":[{"u":0,"v":1,"colors":[1]},{"u":1,"v":0,"colors":[2]}]}"#;
        assert!(matches!(
            Coloring::from_json_str(dup),
            Err(ParseError::DuplicatePair { u: 0, v: 1 })
        ));
        let oob = r#"{"n":3,"pairs":[{"u":0,"v":3,"colors":[1]}]}"#;
        assert!(matches!(
            Coloring::from_json_str(oob),
            Err(ParseError::VertexOutOfRange { index: 3, n: 3 })
        ));
        let badc = r#"{"n":3,"pairs":[{"u":0,"v":1,"colors":[4]}]}"#;
        assert!(matches!(
            Coloring::from_json_str(badc),
            Err(ParseError::BadColor(4))
        ));
    }

    #[test]
    fn json_round_trip() {
        let mut c = Coloring::new(5).unwrap();
        c.set_colors(0, 3, set(&[1, 3])).unwrap();
        c.set_colors(2, 4, set(&[2])).unwrap();
        let back = Coloring::parse(&c.to_json_string()).unwrap();
        assert_eq!(back, c);
        let back2 = Coloring::parse(&c.to_compact_string()).unwrap();
        assert_eq!(back2, c);
    }

    #[test]
    fn canonical_form_invariance_small() {
        let mut c = Coloring::new(4).unwrap();
        c.set_colors(0, 1, set(&[1, 2])).unwrap();
        c.set_colors(1, 2, set(&[3])).unwrap();
        let canon = c.canonical_form().unwrap();

        let relabeled = c.relabeled(&[2, 0, 3, 1]);
        assert_eq!(relabeled.canonical_form().unwrap(), canon);

        let swap = ColorPermutation::new([Color::THREE, Color::TWO, Color::ONE]).unwrap();
        assert_eq!(
            c.with_permuted_colors(&swap).canonical_form().unwrap(),
            canon
        );
    }

    #[test]
    fn canonical_form_distinguishes_non_isomorphic() {
        let mut a = Coloring::new(3).unwrap();
        a.set_colors(0, 1, set(&[1])).unwrap();
        let mut b = Coloring::new(3).unwrap();
        b.set_colors(0, 1, set(&[1, 2])).unwrap();
        assert_ne!(a.canonical_form().unwrap(), b.canonical_form().unwrap());
    }

    #[test]
    fn canonical_form_respects_limit() {
        let c = Coloring::new(10).unwrap();
        assert_eq!(
            c.canonical_form().unwrap_err(),
            ColoringError::CanonicalLimit { n: 10, limit: 9 }
        );
        assert!(c.canonical_form_with_limit(10).is_ok());
    }

    #[test]
    fn color_permutations_are_all_distinct() {
        let perms = ColorPermutation::all();
        for (i, p) in perms.iter().enumerate() {
            for q in &perms[i + 1..] {
                assert_ne!(p.image, q.image);
            }
        }
        let s = set(&[1, 3]);
        let p = ColorPermutation::new([Color::TWO, Color::THREE, Color::ONE]).unwrap();
        assert_eq!(s.permuted(&p), set(&[1, 2]));
    }

    #[test]
    fn sdr_table_spot_checks() {
        assert!(sdr(0b111, 0b111, 0b111));
        assert!(sdr(0b001, 0b010, 0b100));
        assert!(!sdr(0b001, 0b001, 0b111)); // two pairs demand color 1
        assert!(!sdr(0b011, 0b011, 0b011)); // three pairs, two colors
        assert!(!sdr(0b000, 0b111, 0b111)); // an uncolored pair blocks
    }
}
