//! Integer partitions, multi-partitions over a finite basis, and the
//! coarsening order between them.
//!
//! A [`Partition`] is stored as a weakly decreasing list of positive parts.
//! A [`MultiPartition`] assigns a partition to each basis index; indices
//! mapped to the empty partition are not stored, so structural equality is
//! equality of the finitely supported map.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::error::AlgebraError;
use crate::rational::{factorial, Rational};

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a partition from parts in any order.
    pub fn new(mut parts: Vec<u32>) -> Result<Self, AlgebraError> {
        if parts.contains(&0) {
            return Err(AlgebraError::ZeroPart);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { parts })
    }

    /// Builds a partition from a multiplicity map `size -> count`.
    pub fn from_multiplicities(mults: &BTreeMap<u32, usize>) -> Result<Self, AlgebraError> {
        let parts = mults
            .iter()
            .flat_map(|(&size, &count)| std::iter::repeat_n(size, count))
            .collect();
        Self::new(parts)
    }

    /// Parts in weakly decreasing order.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn multiplicities(&self) -> BTreeMap<u32, usize> {
        let mut mults = BTreeMap::new();
        for &part in &self.parts {
            *mults.entry(part).or_insert(0) += 1;
        }
        mults
    }

    pub fn multiplicity(&self, size: u32) -> usize {
        self.parts.iter().filter(|&&p| p == size).count()
    }

    pub(crate) fn insert_part(&mut self, size: u32) {
        debug_assert!(size > 0);
        let at = self.parts.partition_point(|&p| p >= size);
        self.parts.insert(at, size);
    }

    /// Removes one copy of `size`; returns false if there is none.
    pub(crate) fn remove_part(&mut self, size: u32) -> bool {
        match self.parts.iter().position(|&p| p == size) {
            Some(at) => {
                self.parts.remove(at);
                true
            }
            None => false,
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{part}")?;
        }
        write!(f, ")")
    }
}

/// Every partition of `n` exactly once, in reverse-lexicographic order of
/// the part sequences: `(n)` first, `(1,…,1)` last.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn extend(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for part in (1..=max_part.min(remaining)).rev() {
            prefix.push(part);
            extend(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(n, n, &mut Vec::new(), &mut out);
    out
}

/// `∏_ℓ ℓ^{m_ℓ} · m_ℓ!` where `m_ℓ` is the multiplicity of the part `ℓ`.
pub fn z_constant(partition: &Partition) -> Rational {
    let value = partition
        .multiplicities()
        .into_iter()
        .fold(BigInt::from(1), |acc, (size, count)| {
            acc * BigInt::from(size).pow(count as u32) * factorial(count as u32)
        });
    Rational::from_integer(value)
}

/// True iff `coarse` and `fine` have equal weight and the parts of `fine`
/// can be grouped into blocks whose sums are the parts of `coarse`.
pub fn is_coarser(coarse: &Partition, fine: &Partition) -> bool {
    if coarse.weight() != fine.weight() || coarse.len() > fine.len() {
        return false;
    }
    if coarse == fine {
        return true;
    }
    let mut capacity: Vec<u32> = coarse.parts.clone();
    fill_bins(&fine.parts, &mut capacity)
}

// Exact bin packing of `items` (decreasing) into bins with the given remaining
// capacities. Bins with equal remaining capacity are interchangeable.
fn fill_bins(items: &[u32], capacity: &mut [u32]) -> bool {
    let Some((&item, rest)) = items.split_first() else {
        return capacity.iter().all(|&c| c == 0);
    };
    for bin in 0..capacity.len() {
        let cap = capacity[bin];
        if cap < item || capacity[..bin].contains(&cap) {
            continue;
        }
        capacity[bin] -= item;
        let found = fill_bins(rest, capacity);
        capacity[bin] += item;
        if found {
            return true;
        }
    }
    false
}

/// A finitely supported map from basis indices to partitions.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiPartition {
    assignments: BTreeMap<usize, Partition>,
}

impl MultiPartition {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Empty partitions in the input are dropped.
    pub fn from_pairs<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (usize, Partition)>,
    {
        let assignments = pairs.into_iter().filter(|(_, p)| !p.is_empty()).collect();
        Self { assignments }
    }

    pub fn single(index: usize, partition: Partition) -> Self {
        Self::from_pairs([(index, partition)])
    }

    pub fn get(&self, index: usize) -> Option<&Partition> {
        self.assignments.get(&index)
    }

    /// Nonempty assignments in increasing index order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &Partition)> {
        self.assignments.iter().map(|(&i, p)| (i, p))
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.assignments.keys().copied()
    }

    pub fn weight(&self) -> u32 {
        self.assignments.values().map(Partition::weight).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.assignments.is_empty()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.assignments.keys().next_back().copied()
    }

    pub fn multiplicity(&self, index: usize, size: u32) -> usize {
        self.get(index).map_or(0, |p| p.multiplicity(size))
    }

    pub fn insert_part(&mut self, index: usize, size: u32) {
        self.assignments.entry(index).or_default().insert_part(size);
    }

    pub fn remove_part(&mut self, index: usize, size: u32) -> bool {
        let Some(partition) = self.assignments.get_mut(&index) else {
            return false;
        };
        let removed = partition.remove_part(size);
        if partition.is_empty() {
            self.assignments.remove(&index);
        }
        removed
    }

    /// Product of `z_constant` over all assigned partitions.
    pub fn z_constant(&self) -> Rational {
        self.assignments
            .values()
            .fold(Rational::from_integer(1.into()), |acc, p| acc * z_constant(p))
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (n, (index, partition)) in self.assignments.iter().enumerate() {
            if n > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{index}:{partition}")?;
        }
        write!(f, "}}")
    }
}

/// Componentwise coarsening: equal weights at every index and each
/// `coarse(i)` coarser than `fine(i)`.
pub fn multipartition_coarser(coarse: &MultiPartition, fine: &MultiPartition) -> bool {
    let empty = Partition::empty();
    let indices: std::collections::BTreeSet<usize> = coarse.support().chain(fine.support()).collect();
    indices.into_iter().all(|i| {
        is_coarser(
            coarse.get(i).unwrap_or(&empty),
            fine.get(i).unwrap_or(&empty),
        )
    })
}

/// All multi-partitions over indices `0..dim` of total weight `weight`.
pub fn multipartitions_of(weight: u32, dim: usize) -> Vec<MultiPartition> {
    fn extend(
        index: usize,
        dim: usize,
        remaining: u32,
        current: &mut Vec<(usize, Partition)>,
        out: &mut Vec<MultiPartition>,
    ) {
        if index + 1 == dim {
            for p in partitions_of(remaining) {
                current.push((index, p));
                out.push(MultiPartition::from_pairs(current.iter().cloned()));
                current.pop();
            }
            return;
        }
        for here in (0..=remaining).rev() {
            for p in partitions_of(here) {
                current.push((index, p));
                extend(index + 1, dim, remaining - here, current, out);
                current.pop();
            }
        }
    }
    if dim == 0 {
        return if weight == 0 { vec![MultiPartition::empty()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    extend(0, dim, weight, &mut Vec::new(), &mut out);
    out
}
