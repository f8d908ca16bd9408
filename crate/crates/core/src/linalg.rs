//! Rank of sparse rational matrices by Gaussian elimination.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::rational::Rational;

/// A sparse row: column key to nonzero entry.
pub type SparseRow<K> = BTreeMap<K, Rational>;

/// Rank of the matrix whose rows are given. Zero entries may be present.
pub fn rank<K: Ord + Clone>(rows: &[SparseRow<K>]) -> usize {
    // pivot column -> reduced row with leading entry 1 at that column
    let mut pivots: BTreeMap<K, SparseRow<K>> = BTreeMap::new();
    for row in rows {
        let mut current: SparseRow<K> =
            row.iter().filter(|(_, v)| !v.is_zero()).map(|(k, v)| (k.clone(), v.clone())).collect();
        loop {
            let Some((lead, lead_value)) = current.iter().next().map(|(k, v)| (k.clone(), v.clone())) else {
                break;
            };
            match pivots.get(&lead) {
                Some(pivot) => {
                    for (k, v) in pivot {
                        let slot = current.entry(k.clone()).or_insert_with(Rational::zero);
                        *slot -= &lead_value * v;
                        if slot.is_zero() {
                            current.remove(k);
                        }
                    }
                }
                None => {
                    let normalized = current.into_iter().map(|(k, v)| (k, v / &lead_value)).collect();
                    pivots.insert(lead, normalized);
                    break;
                }
            }
        }
    }
    pivots.len()
}
