//! The Fock representation, realised as polynomials in the commuting
//! creation symbols: the monomial `a(-ν)·𝟙` is stored under `ν`.
//!
//! Creation symbols multiply. An annihilator `a_α(n)` kills the vacuum and
//! acts as the derivation that removes one part `n` from some index `j`,
//! with scalar `n·⟨α, j⟩` per removable copy.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::heisenberg::{Element, Generator, NormalElement, NormalKey, PairingMatrix};
use crate::partitions::{multipartitions_of, MultiPartition, Partition};
use crate::rational::Rational;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FockVector {
    terms: BTreeMap<MultiPartition, Rational>,
}

impl FockVector {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The class of the unit.
    pub fn vacuum() -> Self {
        Self::monomial(MultiPartition::empty(), Rational::one())
    }

    pub fn monomial(nu: MultiPartition, coefficient: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(nu, coefficient);
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiPartition, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, nu: &MultiPartition) -> Rational {
        self.terms.get(nu).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, nu: MultiPartition, coefficient: Rational) {
        if coefficient.is_zero() {
            return;
        }
        let slot = self.terms.entry(nu.clone()).or_insert_with(Rational::zero);
        *slot += coefficient;
        if slot.is_zero() {
            self.terms.remove(&nu);
        }
    }

    pub fn add_assign(&mut self, other: &FockVector) {
        for (nu, c) in &other.terms {
            self.add_term(nu.clone(), c.clone());
        }
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(k, c)| (k.clone(), c * factor)).collect() }
    }

    /// Component of weight `level`.
    pub fn homogeneous_part(&self, level: u32) -> FockVector {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(nu, _)| nu.weight() == level)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for FockVector {
    /// Written as the creation polynomial applied to the vacuum, using the
    /// same term order as normal forms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut element = Element::zero();
        for (nu, c) in &self.terms {
            element.add_term(NormalKey::new(nu.clone(), MultiPartition::empty()).canonical_word(), c.clone());
        }
        element.fmt(f)
    }
}

pub fn act_generator(g: Generator, v: &FockVector, pairing: &PairingMatrix) -> FockVector {
    let mut out = FockVector::zero();
    for (nu, c) in v.terms() {
        if g.is_creation() {
            let mut grown = nu.clone();
            grown.insert_part(g.index(), g.level());
            out.add_term(grown, c.clone());
            continue;
        }
        let level = g.level();
        for (j, partition) in nu.iter() {
            let mult = partition.multiplicity(level);
            if mult == 0 {
                continue;
            }
            let scalar = pairing.get(g.index(), j) * Rational::from_integer((level as i64 * mult as i64).into());
            let mut shrunk = nu.clone();
            shrunk.remove_part(j, level);
            out.add_term(shrunk, c * scalar);
        }
    }
    out
}

/// Word-by-word action, rightmost symbol first.
pub fn act_element(x: &Element, v: &FockVector, pairing: &PairingMatrix) -> FockVector {
    let mut out = FockVector::zero();
    for (word, coefficient) in x.terms() {
        let mut acc = v.scale(coefficient);
        for &g in word.symbols().iter().rev() {
            if acc.is_zero() {
                break;
            }
            acc = act_generator(g, &acc, pairing);
        }
        out.add_assign(&acc);
    }
    out
}

pub fn act_normal(x: &NormalElement, v: &FockVector, pairing: &PairingMatrix) -> FockVector {
    act_element(&x.to_element(), v, pairing)
}

/// Number of multi-partitions of weight `level` over `dim` indices, i.e. the
/// coefficient of `q^level` in `∏_{n≥1} (1 - q^n)^{-dim}`.
pub fn fock_dim(level: u32, dim: usize) -> u64 {
    let level = level as usize;
    let partition_counts: Vec<u64> = (0..=level)
        .map(|n| crate::partitions::partitions_of(n as u32).len() as u64)
        .collect();
    let mut counts = vec![0u64; level + 1];
    counts[0] = 1;
    for _ in 0..dim {
        let mut next = vec![0u64; level + 1];
        for (i, &ci) in counts.iter().enumerate() {
            if ci == 0 {
                continue;
            }
            for (j, &pj) in partition_counts.iter().enumerate().take(level + 1 - i) {
                next[i + j] += ci * pj;
            }
        }
        counts = next;
    }
    counts[level]
}

/// `a(-ν)·𝟙` for every `ν` of weight `level` over `dim` indices.
pub fn creation_orbit(level: u32, dim: usize, pairing: &PairingMatrix) -> Vec<FockVector> {
    multipartitions_of(level, dim)
        .into_iter()
        .map(|nu| {
            let word = NormalKey::new(nu, MultiPartition::empty()).canonical_word();
            act_element(&Element::monomial(word, Rational::one()), &FockVector::vacuum(), pairing)
        })
        .collect()
}

/// Partition shorthand for one-index monomials.
pub fn single_index_monomial(index: usize, parts: &[u32]) -> MultiPartition {
    MultiPartition::single(index, Partition::new(parts.to_vec()).expect("positive parts"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{expand_p, Flavor};
    use crate::rational::{int, rat};

    fn g(index: usize, mode: i32) -> Generator {
        Generator::new(index, mode).unwrap()
    }

    #[test]
    fn generator_action_examples() {
        let p = PairingMatrix::identity(1);
        assert!(act_generator(g(0, 3), &FockVector::vacuum(), &p).is_zero());
        assert_eq!(
            act_generator(g(0, -2), &FockVector::vacuum(), &p),
            FockVector::monomial(single_index_monomial(0, &[2]), int(1))
        );
        let two_ones = FockVector::monomial(single_index_monomial(0, &[1, 1]), int(1));
        assert_eq!(
            act_generator(g(0, 1), &two_ones, &p),
            FockVector::monomial(single_index_monomial(0, &[1]), int(2))
        );
    }

    #[test]
    fn element_action_examples() {
        let chi = rat(5, 3);
        let p = PairingMatrix::scalar(chi.clone());
        let v = FockVector::monomial(single_index_monomial(0, &[3, 1]), rat(1, 7));
        assert_eq!(act_element(&Element::one(), &v, &p), v);
        let x = Element::monomial(crate::Word::new(vec![g(0, 1), g(0, -1)]), int(1));
        assert_eq!(act_element(&x, &FockVector::vacuum(), &p), FockVector::vacuum().scale(&chi));

        let mut expected = FockVector::zero();
        expected.add_term(single_index_monomial(0, &[2]), rat(1, 2));
        expected.add_term(single_index_monomial(0, &[1, 1]), rat(1, 2));
        assert_eq!(act_element(&expand_p(0, 2, Flavor::Plain), &FockVector::vacuum(), &p), expected);
    }

    #[test]
    fn cross_index_annihilation_uses_pairing_order() {
        let p = PairingMatrix::new(vec![vec![int(0), int(3)], vec![int(7), int(0)]]).unwrap();
        let v = FockVector::monomial(single_index_monomial(1, &[2]), int(1));
        // a_0(2) removes the part 2 at index 1 with scalar 2·⟨0, 1⟩ = 6
        assert_eq!(act_generator(g(0, 2), &v, &p), FockVector::vacuum().scale(&int(6)));
        assert!(act_generator(g(1, 2), &v, &p).is_zero());
    }

    #[test]
    fn fock_dim_examples() {
        assert_eq!(fock_dim(0, 3), 1);
        assert_eq!(fock_dim(4, 1), 5);
        assert_eq!(fock_dim(2, 2), 5);
        for level in 0..=6 {
            for dim in 1..=3 {
                assert_eq!(fock_dim(level, dim), multipartitions_of(level, dim).len() as u64);
            }
        }
    }

    #[test]
    fn display() {
        let mut v = FockVector::vacuum().scale(&int(-2));
        v.add_term(single_index_monomial(0, &[1, 1]), rat(1, 2));
        assert_eq!(v.to_string(), "1/2 a(0,-1) a(0,-1) - 2");
        assert_eq!(FockVector::zero().to_string(), "0");
        assert_eq!(FockVector::vacuum().to_string(), "1");
    }
}
