//! Literal adjacent-swap rewriting.
//!
//! A redex is a position `i` where `w[i]` must move right of `w[i+1]` in the
//! canonical order. Swapping two symbols of the same sign is exact; swapping
//! an annihilator past a creator adds the commutator scalar times the word
//! with both symbols deleted. Any sequence of such steps reaches the same
//! normal form.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::{commutator_unchecked, Element, NormalElement, PairingMatrix, Word};
use crate::rational::Rational;

/// Positions of adjacent pairs that are out of canonical order.
pub fn redexes(word: &Word) -> Vec<usize> {
    word.symbols()
        .windows(2)
        .enumerate()
        .filter(|(_, pair)| pair[0].canonical_cmp(&pair[1]).is_gt())
        .map(|(i, _)| i)
        .collect()
}

/// One rewrite step at `position`, which must be a redex of `word`.
pub fn rewrite_at(word: &Word, position: usize, pairing: &PairingMatrix) -> Element {
    let symbols = word.symbols();
    let (left, right) = (symbols[position], symbols[position + 1]);
    assert!(left.canonical_cmp(&right).is_gt(), "position {position} is not a redex of {word}");
    let mut swapped = symbols.to_vec();
    swapped.swap(position, position + 1);
    let mut out = Element::monomial(Word::new(swapped), Rational::from_integer(1.into()));
    // xy = yx + [x, y]
    let scalar = commutator_unchecked(left, right, pairing);
    if !scalar.is_zero() {
        let mut contracted = symbols.to_vec();
        contracted.drain(position..position + 2);
        out.add_term(Word::new(contracted), scalar);
    }
    out
}

/// Rewrites until every word is canonical. `choose` picks which redex to
/// contract among the (nonempty) candidates of the current word.
pub fn normalize_with<F>(x: &Element, pairing: &PairingMatrix, mut choose: F) -> NormalElement
where
    F: FnMut(&Word, &[usize]) -> usize,
{
    for (word, _) in x.terms() {
        for g in word.symbols() {
            pairing.check_index(g.index()).unwrap_or_else(|e| panic!("{e}"));
        }
    }
    let mut pending: BTreeMap<Word, Rational> = x.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
    let mut out = NormalElement::zero();
    while let Some((word, coefficient)) = pending.pop_first() {
        let candidates = redexes(&word);
        if candidates.is_empty() {
            let key = word.normal_key().expect("word without redexes is canonical");
            out.add_term(key, coefficient);
            continue;
        }
        let position = choose(&word, &candidates);
        assert!(candidates.contains(&position), "strategy returned a non-redex position");
        for (next, c) in rewrite_at(&word, position, pairing).terms() {
            let slot = pending.entry(next.clone()).or_insert_with(Rational::zero);
            *slot += c * &coefficient;
            if slot.is_zero() {
                pending.remove(next);
            }
        }
    }
    out
}

/// Leftmost-redex strategy.
pub fn normalize_leftmost(x: &Element, pairing: &PairingMatrix) -> NormalElement {
    normalize_with(x, pairing, |_, candidates| candidates[0])
}
