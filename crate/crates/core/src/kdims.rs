//! Degreewise dimensions of `⊕_ℓ K_{S_ℓ}(X^ℓ)` for a cellular `X` with
//! `dim K(X) = d`, via the decomposition over partitions
//! `ν = 1^{m_1} 2^{m_2} ⋯` of `ℓ` into `⊗_j S^{m_j} K(X)`, compared with the
//! Fock space.

use crate::fock::fock_dim;
use crate::heisenberg::PairingMatrix;
use crate::partitions::partitions_of;

/// `K(X)` as a based space with its pairing; only the dimension matters here.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KModel {
    pairing: PairingMatrix,
}

impl KModel {
    pub fn new(pairing: PairingMatrix) -> Self {
        Self { pairing }
    }

    pub fn dim(&self) -> usize {
        self.pairing.dim()
    }

    pub fn pairing(&self) -> &PairingMatrix {
        &self.pairing
    }

    pub fn compare_dims(&self, max_level: u32) -> DimComparison {
        compare_dims(max_level, self.dim())
    }
}

fn multiset_count(d: u64, m: u64) -> u64 {
    // dim S^m of a d-dimensional space = binom(d + m - 1, m)
    if m == 0 {
        return 1;
    }
    if d == 0 {
        return 0;
    }
    let n = d + m - 1;
    let k = m.min(d - 1);
    (0..k).fold(1u64, |acc, j| acc * (n - j) / (j + 1))
}

/// `Σ_{ν ⊢ ℓ} ∏_j dim S^{m_j(ν)} ℚ^d`.
pub fn vistoli_dim(level: u32, d: usize) -> u64 {
    partitions_of(level)
        .iter()
        .map(|nu| {
            nu.multiplicities()
                .values()
                .map(|&m| multiset_count(d as u64, m as u64))
                .product::<u64>()
        })
        .sum()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimRow {
    pub level: u32,
    pub fock: u64,
    pub vistoli: u64,
}

impl DimRow {
    pub fn equal(&self) -> bool {
        self.fock == self.vistoli
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimComparison {
    pub dim: usize,
    pub rows: Vec<DimRow>,
}

impl DimComparison {
    pub fn all_equal(&self) -> bool {
        self.rows.iter().all(DimRow::equal)
    }
}

pub fn compare_dims(max_level: u32, d: usize) -> DimComparison {
    let rows = (0..=max_level)
        .map(|level| DimRow { level, fock: fock_dim(level, d), vistoli: vistoli_dim(level, d) })
        .collect();
    DimComparison { dim: d, rows }
}
