//! Color lists over `{1, 2, 3}` and colorings.

use std::fmt;

use thiserror::Error;

use crate::graph::Graph;

pub type Color = u8;

pub const COLORS: [Color; 3] = [1, 2, 3];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ListError {
    #[error("color {0} is outside {{1, 2, 3}}")]
    ColorOutOfRange(u8),
}

/// A subset of `{1, 2, 3}` packed into the low three bits.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ColorSet(u8);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);
    pub const FULL: ColorSet = ColorSet(0b111);

    pub fn from_colors(colors: &[u8]) -> Result<Self, ListError> {
        let mut bits = 0;
        for &c in colors {
            if !(1..=3).contains(&c) {
                return Err(ListError::ColorOutOfRange(c));
            }
            bits |= 1 << (c - 1);
        }
        Ok(ColorSet(bits))
    }

    /// From the raw bitmask; bit `c - 1` stands for color `c`.
    pub fn from_bits(bits: u8) -> Self {
        ColorSet(bits & 0b111)
    }

    pub fn single(c: Color) -> Self {
        debug_assert!((1..=3).contains(&c));
        ColorSet(1 << (c - 1))
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn contains(self, c: Color) -> bool {
        (1..=3).contains(&c) && self.0 & (1 << (c - 1)) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn without(self, c: Color) -> Self {
        ColorSet(self.0 & !(1 << (c - 1)))
    }

    /// Colors in increasing order.
    pub fn colors(self) -> impl Iterator<Item = Color> {
        COLORS.into_iter().filter(move |&c| self.contains(c))
    }

    pub fn min(self) -> Option<Color> {
        self.colors().next()
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.colors()).finish()
    }
}

/// `L(v)` for every vertex `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListAssignment {
    lists: Vec<ColorSet>,
}

impl ListAssignment {
    pub fn new(lists: Vec<ColorSet>) -> Self {
        Self { lists }
    }

    /// Every vertex gets `{1, 2, 3}`.
    pub fn full(n: usize) -> Self {
        Self::uniform(n, ColorSet::FULL)
    }

    pub fn uniform(n: usize, list: ColorSet) -> Self {
        Self {
            lists: vec![list; n],
        }
    }

    pub fn from_colors(lists: &[Vec<u8>]) -> Result<Self, ListError> {
        lists
            .iter()
            .map(|l| ColorSet::from_colors(l))
            .collect::<Result<_, _>>()
            .map(Self::new)
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub fn get(&self, v: usize) -> ColorSet {
        self.lists[v]
    }

    pub fn set(&mut self, v: usize, list: ColorSet) {
        self.lists[v] = list;
    }

    pub fn iter(&self) -> impl Iterator<Item = ColorSet> + '_ {
        self.lists.iter().copied()
    }

    pub fn max_list_len(&self) -> usize {
        self.lists.iter().map(|l| l.len()).max().unwrap_or(0)
    }

    /// The assignment restricted to `vertices`, reindexed like
    /// [`Graph::induced_subgraph`].
    pub fn restrict(&self, vertices: &[usize]) -> Self {
        Self {
            lists: vertices.iter().map(|&v| self.lists[v]).collect(),
        }
    }
}

/// A total map from vertices to colors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring(Vec<Color>);

impl Coloring {
    pub fn new(colors: Vec<Color>) -> Self {
        Self(colors)
    }

    pub fn color(&self, v: usize) -> Color {
        self.0[v]
    }

    pub fn as_slice(&self) -> &[Color] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// True iff `f` is total, proper, and respects every list.
pub fn check_coloring(g: &Graph, lists: &ListAssignment, f: &Coloring) -> bool {
    f.len() == g.n()
        && lists.len() == g.n()
        && (0..g.n()).all(|v| lists.get(v).contains(f.color(v)))
        && g.edges().all(|(u, v)| f.color(u) != f.color(v))
}
