//! Assignment types for rainbow, Roman, and set domination, with validity
//! predicates and weights.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::graph::{Graph, Vertex};

/// Largest supported color count for rainbow assignments.
pub const MAX_COLORS: u8 = 8;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LabelingError {
    #[error("assignment covers {got} vertices but the graph has {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("operation requires k = 2, assignment has k = {0}")]
    NotTwoColors(u8),
    #[error("color {color} outside 1..={k}")]
    ColorOutOfRange { color: u8, k: u8 },
    #[error("color count {0} exceeds the supported maximum {MAX_COLORS}")]
    TooManyColors(u8),
    #[error("Roman value {0} outside 0..=2")]
    RomanValueOutOfRange(u8),
    #[error("vertex sets support at most 64 vertices, got {0}")]
    TooManyVertices(usize),
}

/// Subset of the colors `{1..k}` packed into a byte; bit `i-1` stands for
/// color `i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ColorSet(u8);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);

    pub fn single(color: u8) -> ColorSet {
        debug_assert!((1..=MAX_COLORS).contains(&color));
        ColorSet(1 << (color - 1))
    }

    /// All of `{1..k}`.
    pub fn full(k: u8) -> ColorSet {
        debug_assert!(k <= MAX_COLORS);
        ColorSet(((1u16 << k) - 1) as u8)
    }

    pub fn from_colors(colors: &[u8]) -> Result<ColorSet, LabelingError> {
        let mut bits = 0u8;
        for &c in colors {
            if c == 0 || c > MAX_COLORS {
                return Err(LabelingError::ColorOutOfRange {
                    color: c,
                    k: MAX_COLORS,
                });
            }
            bits |= 1 << (c - 1);
        }
        Ok(ColorSet(bits))
    }

    pub fn from_bits(bits: u8) -> ColorSet {
        ColorSet(bits)
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, color: u8) -> bool {
        color >= 1 && color <= MAX_COLORS && self.0 >> (color - 1) & 1 == 1
    }

    pub fn union(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 | other.0)
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn colors(self) -> impl Iterator<Item = u8> {
        (1..=MAX_COLORS).filter(move |&c| self.contains(c))
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.colors()).finish()
    }
}

impl Serialize for ColorSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.colors())
    }
}

impl<'de> Deserialize<'de> for ColorSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let colors = Vec::<u8>::deserialize(d)?;
        ColorSet::from_colors(&colors).map_err(D::Error::custom)
    }
}

/// A k-rainbow assignment: one color subset of `{1..k}` per vertex. The
/// color count is stored in the value so validity is self-describing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RainbowAssignment {
    k: u8,
    colors: Vec<ColorSet>,
}

impl RainbowAssignment {
    pub fn new(k: u8, colors: Vec<ColorSet>) -> Result<RainbowAssignment, LabelingError> {
        if k == 0 || k > MAX_COLORS {
            return Err(LabelingError::TooManyColors(k));
        }
        let full = ColorSet::full(k);
        for cs in &colors {
            if cs.0 & !full.0 != 0 {
                return Err(LabelingError::ColorOutOfRange {
                    color: (8 - (cs.0 & !full.0).leading_zeros()) as u8,
                    k,
                });
            }
        }
        Ok(RainbowAssignment { k, colors })
    }

    pub fn empty(k: u8, n: usize) -> RainbowAssignment {
        RainbowAssignment {
            k,
            colors: vec![ColorSet::EMPTY; n],
        }
    }

    pub fn k(&self) -> u8 {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn get(&self, v: Vertex) -> ColorSet {
        self.colors[v]
    }

    pub fn set(&mut self, v: Vertex, cs: ColorSet) {
        debug_assert_eq!(cs.0 & !ColorSet::full(self.k).0, 0);
        self.colors[v] = cs;
    }

    pub fn color_sets(&self) -> &[ColorSet] {
        &self.colors
    }

    /// Total number of assigned colors.
    pub fn weight(&self) -> u32 {
        self.colors.iter().map(|cs| cs.len()).sum()
    }
}

/// True iff every vertex with the empty set sees all `k` colors across its
/// open neighborhood. Isolated uncolored vertices always fail, matching the
/// bare definition on disconnected graphs.
pub fn is_valid_krdf(g: &Graph, f: &RainbowAssignment) -> Result<bool, LabelingError> {
    if f.len() != g.n() {
        return Err(LabelingError::LengthMismatch {
            expected: g.n(),
            got: f.len(),
        });
    }
    let full = ColorSet::full(f.k);
    for v in g.vertices() {
        if !f.get(v).is_empty() {
            continue;
        }
        let mut seen = ColorSet::EMPTY;
        for &u in g.neighbors(v) {
            seen = seen.union(f.get(u));
        }
        if seen != full {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Ordered partition `(V_0, V_1^1, V_1^2, V_2)` induced by a 2-rainbow
/// assignment.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RainbowPartition {
    pub v0: VertexSet,
    pub v1_1: VertexSet,
    pub v1_2: VertexSet,
    pub v2: VertexSet,
}

pub fn induced_partition(f: &RainbowAssignment) -> Result<RainbowPartition, LabelingError> {
    if f.k != 2 {
        return Err(LabelingError::NotTwoColors(f.k));
    }
    if f.len() > 64 {
        return Err(LabelingError::TooManyVertices(f.len()));
    }
    let mut parts = [VertexSet::EMPTY; 4];
    for (v, cs) in f.colors.iter().enumerate() {
        parts[cs.0 as usize].insert(v);
    }
    Ok(RainbowPartition {
        v0: parts[0],
        v1_1: parts[1],
        v1_2: parts[2],
        v2: parts[3],
    })
}

/// Roman domination function: a value in `{0,1,2}` per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RomanAssignment {
    values: Vec<u8>,
}

impl RomanAssignment {
    pub fn new(values: Vec<u8>) -> Result<RomanAssignment, LabelingError> {
        if let Some(&bad) = values.iter().find(|&&x| x > 2) {
            return Err(LabelingError::RomanValueOutOfRange(bad));
        }
        Ok(RomanAssignment { values })
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.values.iter().map(|&x| x as u32).sum()
    }

    /// The weight-preserving embedding into 2-rainbow assignments:
    /// 0 -> {}, 1 -> {1}, 2 -> {1,2}.
    pub fn to_rainbow(&self) -> RainbowAssignment {
        let colors = self
            .values
            .iter()
            .map(|&x| match x {
                0 => ColorSet::EMPTY,
                1 => ColorSet::single(1),
                _ => ColorSet::full(2),
            })
            .collect();
        RainbowAssignment { k: 2, colors }
    }
}

/// True iff every vertex with value 0 has a neighbor with value 2.
pub fn is_valid_roman(g: &Graph, r: &RomanAssignment) -> Result<bool, LabelingError> {
    if r.len() != g.n() {
        return Err(LabelingError::LengthMismatch {
            expected: g.n(),
            got: r.len(),
        });
    }
    for v in g.vertices() {
        if r.values[v] == 0 && !g.neighbors(v).iter().any(|&u| r.values[u] == 2) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Vertex subset as a single-word bitmask (graphs up to 64 vertices).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_mask(mask: u64) -> VertexSet {
        VertexSet(mask)
    }

    pub fn from_indices(indices: &[Vertex]) -> Result<VertexSet, LabelingError> {
        let mut mask = 0u64;
        for &v in indices {
            if v >= 64 {
                return Err(LabelingError::TooManyVertices(v + 1));
            }
            mask |= 1 << v;
        }
        Ok(VertexSet(mask))
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: Vertex) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: Vertex) {
        debug_assert!(v < 64);
        self.0 |= 1 << v;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = Vertex> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(v)
            }
        })
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let indices = Vec::<usize>::deserialize(d)?;
        VertexSet::from_indices(&indices).map_err(D::Error::custom)
    }
}

/// True iff `N[S] = V`.
pub fn is_dominating(g: &Graph, s: VertexSet) -> bool {
    g.vertices()
        .all(|v| s.contains(v) || g.neighbors(v).iter().any(|&u| s.contains(u)))
}

/// The classical embedding of a dominating set into 2-rainbow assignments:
/// `{1,2}` on `S`, empty elsewhere.
pub fn dominating_to_rainbow(n: usize, s: VertexSet) -> RainbowAssignment {
    let colors = (0..n)
        .map(|v| {
            if s.contains(v) {
                ColorSet::full(2)
            } else {
                ColorSet::EMPTY
            }
        })
        .collect();
    RainbowAssignment { k: 2, colors }
}

/// Parses the per-vertex color-array form, e.g. `[[1],[],[2]]` with `k`
/// alongside.
pub fn rainbow_from_color_lists(
    k: u8,
    lists: &[Vec<u8>],
) -> Result<RainbowAssignment, LabelingError> {
    let mut colors = Vec::with_capacity(lists.len());
    for list in lists {
        let cs = ColorSet::from_colors(list)?;
        for c in cs.colors() {
            if c > k {
                return Err(LabelingError::ColorOutOfRange { color: c, k });
            }
        }
        colors.push(cs);
    }
    RainbowAssignment::new(k, colors)
}
