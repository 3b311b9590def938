use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

/// A set of simple-reflection indices (0-based internally, printed with the
/// 1-based Bourbaki labels).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Subset(u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn full(rank: usize) -> Self {
        Subset(((1u64 << rank) - 1) as u32)
    }

    pub fn from_bits(bits: u32) -> Self {
        Subset(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        Subset(it.into_iter().fold(0, |acc, i| acc | (1 << i)))
    }

    /// From 1-based diagram labels.
    pub fn from_labels(labels: &[usize]) -> Self {
        Self::from_indices(labels.iter().map(|l| l - 1))
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> Self {
        Subset(self.0 | (1 << i))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&i| self.contains(i))
    }

    pub fn indices(self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn labels(self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }

    /// All subsets of `{0, …, rank-1}`.
    pub fn all(rank: usize) -> impl Iterator<Item = Subset> {
        (0..1u32 << rank).map(Subset)
    }
}

/// Lexicographic order on the sorted index lists, so `∅ < {1} < {1,2} < {2}`.
impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.labels().iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", labels.join(","))
    }
}

impl Serialize for Subset {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.labels())
    }
}
