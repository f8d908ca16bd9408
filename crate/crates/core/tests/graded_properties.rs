mod common;

use common::rng;
use heisenfock_core::graded::{euler_relation_holds, naive_sym_power, sym_euler_identity};
use heisenfock_core::rational::int;
use heisenfock_core::series::{one_minus_t_power, Series};
use heisenfock_core::{euler, ext_power, s_coefficient, sym_power, tensor, GradedDims, Rational};
use proptest::prelude::*;
use rand::Rng;

/// Every graded space with support in [-3, 3] and total dimension ≤ 6.
fn exhaustive_family() -> Vec<GradedDims> {
    fn rec(degree: i32, remaining: u64, current: &mut Vec<(i32, u64)>, out: &mut Vec<GradedDims>) {
        if degree > 3 {
            out.push(GradedDims::from_pairs(current.iter().copied()));
            return;
        }
        for d in 0..=remaining {
            current.push((degree, d));
            rec(degree + 1, remaining - d, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(-3, 6, &mut Vec::new(), &mut out);
    out
}

fn random_space(r: &mut impl Rng) -> GradedDims {
    GradedDims::from_pairs((0..r.gen_range(0..=4)).map(|_| (r.gen_range(-3..=3), r.gen_range(0..=3))))
}

#[test]
fn family_size() {
    // compositions of ≤ 6 into 7 parts: C(13, 7)
    assert_eq!(exhaustive_family().len(), 1716);
}

#[test]
fn symmetric_powers_have_binomial_euler_characteristic() {
    let mut spaces = exhaustive_family();
    let mut r = rng(41);
    spaces.extend((0..200).map(|_| random_space(&mut r)));
    for w in &spaces {
        for k in 0..=6 {
            assert!(sym_euler_identity(w, k), "W = {w}, k = {k}");
        }
    }
}

#[test]
fn exterior_powers_have_signed_binomial_euler_characteristic() {
    let mut spaces = exhaustive_family();
    let mut r = rng(42);
    spaces.extend((0..200).map(|_| random_space(&mut r)));
    for w in &spaces {
        let minus_chi = Rational::from_integer((-euler(w)).into());
        for k in 0..=6u32 {
            let sign = if k % 2 == 0 { int(1) } else { int(-1) };
            assert_eq!(
                Rational::from_integer(euler(&ext_power(w, k)).into()),
                sign * s_coefficient(&minus_chi, k),
                "W = {w}, k = {k}"
            );
        }
    }
}

#[test]
fn exterior_power_is_suspended_symmetric_power() {
    // ∧^k W ≅ S^k(W[1])[-k]
    for w in exhaustive_family().iter().step_by(7) {
        for k in 0..=5 {
            assert_eq!(ext_power(w, k), sym_power(&w.shift(-1), k).shift(k as i32), "W = {w}, k = {k}");
        }
    }
}

#[test]
fn euler_generating_function_is_binomial_series() {
    let mut r = rng(43);
    for _ in 0..50 {
        let w = random_space(&mut r);
        let chi = Rational::from_integer(euler(&w).into());
        let coeffs = (0..=8).map(|k| Rational::from_integer(euler(&sym_power(&w, k)).into())).collect();
        assert_eq!(Series::from_coeffs(coeffs, 8), one_minus_t_power(&chi, 8), "W = {w}");
    }
}

#[test]
fn naive_symmetric_power_fails_the_identity() {
    let counterexamples = exhaustive_family()
        .iter()
        .filter(|w| (0..=6).any(|k| {
            let naive = Rational::from_integer(euler(&naive_sym_power(w, k)).into());
            naive != s_coefficient(&Rational::from_integer(euler(w).into()), k)
        }))
        .count();
    assert!(counterexamples > 0);
    let odd_line = GradedDims::from_pairs([(1, 1)]);
    assert_eq!(euler(&naive_sym_power(&odd_line, 2)), 1);
    assert_eq!(s_coefficient(&int(-1), 2), int(0));
}

#[test]
fn euler_characteristics_reproduce_the_scalar_relation() {
    let mut r = rng(44);
    for _ in 0..10 {
        let h = random_space(&mut r);
        for m in 0..=5 {
            for n in 0..=5 {
                assert!(euler_relation_holds(&h, m, n), "H = {h}, m={m}, n={n}");
            }
        }
    }
}

fn space_strategy() -> impl Strategy<Value = GradedDims> {
    prop::collection::vec((-4i32..=4, 0u64..=3), 0..5).prop_map(GradedDims::from_pairs)
}

proptest! {
    #[test]
    fn euler_is_multiplicative(a in space_strategy(), b in space_strategy()) {
        prop_assert_eq!(euler(&tensor(&a, &b)), euler(&a) * euler(&b));
        prop_assert_eq!(tensor(&a, &b).total_dim(), a.total_dim() * b.total_dim());
    }

    #[test]
    fn tensor_is_commutative_with_unit(a in space_strategy(), b in space_strategy()) {
        prop_assert_eq!(tensor(&a, &b), tensor(&b, &a));
        prop_assert_eq!(tensor(&a, &GradedDims::unit()), a);
    }

    #[test]
    fn sym_power_of_even_space_counts_multisets(d in 1u64..5, k in 0u32..5) {
        let w = GradedDims::from_pairs([(0, d)]);
        let expected = s_coefficient(&Rational::from_integer((d as i64).into()), k);
        prop_assert_eq!(Rational::from_integer((sym_power(&w, k).total_dim() as i64).into()), expected);
    }
}
