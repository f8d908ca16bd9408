//! The free algebra on the symbols `a_i(n)` and its quotient by the
//! Heisenberg commutation relation, with normal ordering onto the
//! `a(-ν) a(μ)` basis.
//!
//! Commutation convention: for `m > 0`,
//! `[a_α(m), a_β(-m)] = m · ⟨α, β⟩`, the pairing always being evaluated as
//! `⟨annihilator index, creator index⟩`. Every other pair of symbols
//! commutes.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::AlgebraError;
use crate::partitions::MultiPartition;
use crate::rational::{write_signed_term, Rational};

pub mod rewrite;

/// Bilinear form on the chosen basis: `entry(i, j) = ⟨β_i, β_j⟩`.
/// Not required to be symmetric.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingMatrix {
    dim: usize,
    entries: Vec<Rational>,
}

impl PairingMatrix {
    pub fn new(rows: Vec<Vec<Rational>>) -> Result<Self, AlgebraError> {
        let dim = rows.len();
        for (row, entries) in rows.iter().enumerate() {
            if entries.len() != dim {
                return Err(AlgebraError::NonSquarePairing { row, len: entries.len(), dim });
            }
        }
        Ok(Self { dim, entries: rows.into_iter().flatten().collect() })
    }

    pub fn identity(dim: usize) -> Self {
        let entries = (0..dim * dim)
            .map(|k| if k / dim == k % dim { Rational::one() } else { Rational::zero() })
            .collect();
        Self { dim, entries }
    }

    /// The 1×1 pairing `[[chi]]`.
    pub fn scalar(chi: Rational) -> Self {
        Self { dim: 1, entries: vec![chi] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// # Panics
    /// If either index is `>= dim`.
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        assert!(i < self.dim && j < self.dim, "pairing index ({i}, {j}) out of range for dimension {}", self.dim);
        &self.entries[i * self.dim + j]
    }

    pub fn try_get(&self, i: usize, j: usize) -> Result<&Rational, AlgebraError> {
        self.check_index(i)?;
        self.check_index(j)?;
        Ok(self.get(i, j))
    }

    pub fn check_index(&self, index: usize) -> Result<(), AlgebraError> {
        if index < self.dim {
            Ok(())
        } else {
            Err(AlgebraError::IndexOutOfRange { index, dim: self.dim })
        }
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        self.entries.chunks(self.dim.max(1)).take(self.dim)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }
}

/// The symbol `a_i(n)` with `n ≠ 0`. Negative modes create, positive modes
/// annihilate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    index: usize,
    mode: i32,
}

impl Generator {
    pub fn new(index: usize, mode: i32) -> Result<Self, AlgebraError> {
        if mode == 0 {
            return Err(AlgebraError::ZeroMode);
        }
        Ok(Self { index, mode })
    }

    /// `a_index(-level)`.
    pub fn creation(index: usize, level: u32) -> Self {
        assert!(level > 0, "creation level must be positive");
        Self { index, mode: -(level as i32) }
    }

    /// `a_index(level)`.
    pub fn annihilation(index: usize, level: u32) -> Self {
        assert!(level > 0, "annihilation level must be positive");
        Self { index, mode: level as i32 }
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn mode(&self) -> i32 {
        self.mode
    }

    pub fn level(&self) -> u32 {
        self.mode.unsigned_abs()
    }

    pub fn is_creation(&self) -> bool {
        self.mode < 0
    }

    // Creators precede annihilators; within each block sort by index, then
    // by |mode| ascending.
    pub(crate) fn canonical_key(&self) -> (bool, usize, u32) {
        (!self.is_creation(), self.index, self.level())
    }

    pub(crate) fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.canonical_key().cmp(&other.canonical_key())
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a({},{})", self.index, self.mode)
    }
}

/// `[g, h]` as a scalar multiple of the unit.
pub fn commutator_scalar(
    g: Generator,
    h: Generator,
    pairing: &PairingMatrix,
) -> Result<Rational, AlgebraError> {
    pairing.check_index(g.index)?;
    pairing.check_index(h.index)?;
    Ok(commutator_unchecked(g, h, pairing))
}

fn commutator_unchecked(g: Generator, h: Generator, pairing: &PairingMatrix) -> Rational {
    if g.mode + h.mode != 0 {
        return Rational::zero();
    }
    let (annihilator, creator) = if g.mode > 0 { (g, h) } else { (h, g) };
    Rational::from_integer(g.mode.into()) * pairing.get(annihilator.index, creator.index)
}

/// A monomial of the free algebra; the empty word is the unit.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Generator>);

impl Word {
    pub fn unit() -> Self {
        Self(Vec::new())
    }

    pub fn new(symbols: Vec<Generator>) -> Self {
        Self(symbols)
    }

    pub fn symbols(&self) -> &[Generator] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut symbols = Vec::with_capacity(self.len() + other.len());
        symbols.extend_from_slice(&self.0);
        symbols.extend_from_slice(&other.0);
        Word(symbols)
    }

    pub fn is_canonical(&self) -> bool {
        self.0.windows(2).all(|w| w[0].canonical_cmp(&w[1]) != Ordering::Greater)
    }

    /// The `a(-ν) a(μ)` pair of a canonical word.
    pub fn normal_key(&self) -> Option<NormalKey> {
        if !self.is_canonical() {
            return None;
        }
        let mut key = NormalKey::default();
        for g in &self.0 {
            if g.is_creation() {
                key.creation.insert_part(g.index, g.level());
            } else {
                key.annihilation.insert_part(g.index, g.level());
            }
        }
        Some(key)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Rational linear combination of words. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Element {
    terms: BTreeMap<Word, Rational>,
}

impl Element {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(Rational::one())
    }

    pub fn scalar(value: Rational) -> Self {
        Self::monomial(Word::unit(), value)
    }

    pub fn generator(g: Generator) -> Self {
        Self::monomial(Word(vec![g]), Rational::one())
    }

    pub fn monomial(word: Word, coefficient: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(word, coefficient);
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, word: &Word) -> Rational {
        self.terms.get(word).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, word: Word, coefficient: Rational) {
        if coefficient.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coefficient);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += coefficient;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        let terms = self.terms.iter().map(|(w, c)| (w.clone(), c * factor)).collect();
        Self { terms }
    }

    pub fn pow(&self, exponent: u32) -> Self {
        (0..exponent).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Largest basis index mentioned by any symbol.
    pub fn max_index(&self) -> Option<usize> {
        self.terms.keys().flat_map(|w| w.0.iter().map(|g| g.index)).max()
    }
}

/// Concatenation product, extended bilinearly. No rewriting is applied.
pub fn multiply(x: &Element, y: &Element) -> Element {
    let mut out = Element::zero();
    for (wx, cx) in &x.terms {
        for (wy, cy) in &y.terms {
            out.add_term(wx.concat(wy), cx * cy);
        }
    }
    out
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }
}

impl Mul for &Element {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        multiply(self, rhs)
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scale(&-Rational::one())
    }
}

macro_rules! forward_owned_binop {
    ($ty:ty, $tr:ident, $method:ident) => {
        impl $tr for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Element, Add, add);
forward_owned_binop!(Element, Sub, sub);
forward_owned_binop!(Element, Mul, mul);

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        -&self
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by(|(a, _), (b, _)| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        let mut out = String::new();
        for (i, (word, coefficient)) in ordered.into_iter().enumerate() {
            let monomial = if word.is_empty() { String::new() } else { word.to_string() };
            write_signed_term(&mut out, coefficient, &monomial, i == 0);
        }
        f.write_str(&out)
    }
}

/// Index of the basis element `a(-creation) a(annihilation)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NormalKey {
    pub creation: MultiPartition,
    pub annihilation: MultiPartition,
}

impl NormalKey {
    pub fn new(creation: MultiPartition, annihilation: MultiPartition) -> Self {
        Self { creation, annihilation }
    }

    /// Creators by index ascending and parts ascending, followed by
    /// annihilators in the same order.
    pub fn canonical_word(&self) -> Word {
        let mut symbols = Vec::new();
        for (index, partition) in self.creation.iter() {
            symbols.extend(partition.parts().iter().rev().map(|&k| Generator::creation(index, k)));
        }
        for (index, partition) in self.annihilation.iter() {
            symbols.extend(partition.parts().iter().rev().map(|&k| Generator::annihilation(index, k)));
        }
        Word(symbols)
    }
}

/// An element of the Heisenberg algebra in the `a(-ν) a(μ)` basis.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NormalElement {
    terms: BTreeMap<NormalKey, Rational>,
}

impl NormalElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(Rational::one())
    }

    pub fn scalar(value: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(NormalKey::default(), value);
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&NormalKey, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, key: &NormalKey) -> Rational {
        self.terms.get(key).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, key: NormalKey, coefficient: Rational) {
        if coefficient.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coefficient);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += coefficient;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &NormalElement) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c.clone());
        }
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(k, c)| (k.clone(), c * factor)).collect() }
    }

    /// The same vector written as a combination of canonical words.
    pub fn to_element(&self) -> Element {
        let mut out = Element::zero();
        for (key, c) in &self.terms {
            out.add_term(key.canonical_word(), c.clone());
        }
        out
    }

    /// Left multiplication by a single generator, staying in normal form.
    pub fn left_multiply(&self, g: Generator, pairing: &PairingMatrix) -> NormalElement {
        let mut out = NormalElement::zero();
        for (key, c) in &self.terms {
            if g.is_creation() {
                let mut moved = key.clone();
                moved.creation.insert_part(g.index, g.level());
                out.add_term(moved, c.clone());
                continue;
            }
            let level = g.level();
            let mut passed = key.clone();
            passed.annihilation.insert_part(g.index, level);
            out.add_term(passed, c.clone());
            // a_α(k) meets each creator a_j(-k) once, contributing k·⟨α, j⟩.
            for (j, partition) in key.creation.iter() {
                let mult = partition.multiplicity(level);
                if mult == 0 {
                    continue;
                }
                let scalar = Rational::from_integer((level as i64 * mult as i64).into())
                    * pairing.get(g.index, j);
                if scalar.is_zero() {
                    continue;
                }
                let mut contracted = key.clone();
                contracted.creation.remove_part(j, level);
                out.add_term(contracted, c * scalar);
            }
        }
        out
    }
}

impl Add for &NormalElement {
    type Output = NormalElement;
    fn add(self, rhs: &NormalElement) -> NormalElement {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

impl Sub for &NormalElement {
    type Output = NormalElement;
    fn sub(self, rhs: &NormalElement) -> NormalElement {
        let mut out = self.clone();
        out.add_assign(&rhs.scale(&-Rational::one()));
        out
    }
}

forward_owned_binop!(NormalElement, Add, add);
forward_owned_binop!(NormalElement, Sub, sub);

impl fmt::Display for NormalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_element().fmt(f)
    }
}

/// Normal form of `x` in the `a(-ν) a(μ)` basis.
///
/// Each word is read right to left and its symbols are left-multiplied onto
/// an already normal element, so creators move left past annihilators one
/// contraction at a time.
///
/// # Panics
/// If `x` mentions a basis index `>= pairing.dim()`.
pub fn normal_order(x: &Element, pairing: &PairingMatrix) -> NormalElement {
    left_multiply_element(x, &NormalElement::one(), pairing)
}

/// Normal form of `x · y` where `y` is already normal.
///
/// # Panics
/// If `x` or `y` mentions a basis index `>= pairing.dim()`.
pub fn left_multiply_element(
    x: &Element,
    y: &NormalElement,
    pairing: &PairingMatrix,
) -> NormalElement {
    let mut out = NormalElement::zero();
    for (word, coefficient) in x.terms() {
        let mut acc = y.scale(coefficient);
        for &g in word.symbols().iter().rev() {
            pairing.check_index(g.index).unwrap_or_else(|e| panic!("{e}"));
            acc = acc.left_multiply(g, pairing);
        }
        out.add_assign(&acc);
    }
    out
}

/// `normal_order(xy - yx)`.
pub fn commutator(x: &Element, y: &Element, pairing: &PairingMatrix) -> NormalElement {
    normal_order(&(x * y - y * x), pairing)
}
