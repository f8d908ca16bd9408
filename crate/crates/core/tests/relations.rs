mod common;

use std::collections::BTreeMap;

use common::pairing_family;
use heisenfock_core::generators::{
    check_relations, triangle_grid, triangularity_report, verify_grid, FamilyKind, GeneratorFamily,
};
use heisenfock_core::rational::int;
use heisenfock_core::series::{one_minus_t_power, Series};
use heisenfock_core::{
    expand_p, expand_q, normal_order, s_coefficient, verify_qp_relation, verify_qq_pp_commute, Element,
    Flavor, PairingMatrix, Rational, RelationVariant,
};

// Commutative polynomials in the creation symbols of one index, keyed by
// the sorted list of levels.
type Poly = BTreeMap<Vec<u32>, Rational>;

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let mut m: Vec<u32> = ma.iter().chain(mb).copied().collect();
            m.sort_unstable();
            *out.entry(m).or_insert_with(|| int(0)) += ca * cb;
        }
    }
    out.retain(|_, c| *c != int(0));
    out
}

// Coefficients of exp(sign · Σ_ℓ x_ℓ z^ℓ / ℓ) via n E_n = sign · Σ_k x_k E_{n-k}.
fn exp_series(order: u32, sign: i64) -> Vec<Poly> {
    let mut e: Vec<Poly> = vec![Poly::from([(Vec::new(), int(1))])];
    for n in 1..=order {
        let mut acc = Poly::new();
        for k in 1..=n {
            let x_k = Poly::from([(vec![k], int(sign))]);
            for (m, c) in poly_mul(&x_k, &e[(n - k) as usize]) {
                *acc.entry(m).or_insert_with(|| int(0)) += c;
            }
        }
        acc.retain(|_, c| *c != int(0));
        let n_inv = Rational::new(1.into(), (n as i64).into());
        e.push(acc.into_iter().map(|(m, c)| (m, c * &n_inv)).collect());
    }
    e
}

fn as_poly(x: &Element) -> Poly {
    let mut out = Poly::new();
    for (word, c) in x.terms() {
        let mut m: Vec<u32> = word.symbols().iter().map(|g| g.level()).collect();
        m.sort_unstable();
        *out.entry(m).or_insert_with(|| int(0)) += c;
    }
    out
}

#[test]
fn closed_formula_matches_series_exponential() {
    for (flavor, sign) in [(Flavor::Plain, 1), (Flavor::Transposed, -1)] {
        let series = exp_series(8, sign);
        for n in 0..=8 {
            assert_eq!(as_poly(&expand_p(0, n, flavor)), series[n as usize], "{flavor:?} n={n}");
            assert_eq!(as_poly(&expand_q(0, n, flavor)), series[n as usize], "{flavor:?} n={n}");
        }
    }
}

#[test]
fn family_level_zero_is_unit() {
    for kind in [FamilyKind::P, FamilyKind::Q, FamilyKind::PTransposed, FamilyKind::QTransposed] {
        assert_eq!(GeneratorFamily { kind, basis_index: 1, level: 0 }.element(), Element::one());
    }
}

#[test]
fn binomial_formula() {
    let mut chis: Vec<Rational> = (-3..=3).map(int).collect();
    chis.extend([Rational::new(1.into(), 2.into()), Rational::new((-5).into(), 3.into()), Rational::new(7.into(), 4.into())]);
    for chi in chis {
        let lhs = one_minus_t_power(&chi, 8);
        let rhs = Series::from_coeffs((0..=8).map(|k| s_coefficient(&chi, k)).collect(), 8);
        assert_eq!(lhs, rhs, "chi = {chi}");
    }
}

#[test]
fn plain_relations_hold_on_grid() {
    for dim in 1..=2 {
        for (name, pairing) in pairing_family(dim, 21) {
            let report = verify_grid(&triangle_grid(10), &pairing, RelationVariant::Plain);
            assert!(report.failure.is_none(), "{name} d={dim}: {}", report.failure.unwrap());
        }
    }
}

#[test]
fn transposed_and_mixed_relations_hold_on_grid() {
    for dim in 1..=2 {
        for (name, pairing) in pairing_family(dim, 22) {
            for variant in [RelationVariant::Transposed, RelationVariant::Mixed] {
                let report = verify_grid(&triangle_grid(10), &pairing, variant);
                assert!(report.failure.is_none(), "{name} d={dim}: {}", report.failure.unwrap());
            }
        }
    }
}

#[test]
fn wrong_coefficients_are_detected() {
    // with s^k(-χ) the plain families fail as soon as χ ≠ 0
    let pairing = PairingMatrix::scalar(int(3));
    let lhs = normal_order(&(&expand_q(0, 1, Flavor::Plain) * &expand_p(0, 1, Flavor::Plain)), &pairing);
    let wrong = normal_order(
        &(&(&expand_p(0, 1, Flavor::Plain) * &expand_q(0, 1, Flavor::Plain)) + &Element::scalar(int(-3))),
        &pairing,
    );
    assert_ne!(lhs, wrong);
    assert!(check_relations(1, 1, 0, 0, &pairing, RelationVariant::Plain).is_ok());
}

#[test]
fn named_examples() {
    let p5 = PairingMatrix::scalar(int(5));
    assert!(verify_qq_pp_commute(0, 3, 0, 0, &p5, RelationVariant::Plain));
    assert!(verify_qq_pp_commute(2, 3, 0, 0, &p5, RelationVariant::Plain));
    assert!(verify_qp_relation(1, 1, 0, 0, &p5, RelationVariant::Plain));
    assert!(verify_qp_relation(0, 4, 0, 0, &p5, RelationVariant::Plain));
}

#[test]
fn triangularity_with_two_indices() {
    for (name, pairing) in pairing_family(2, 23) {
        let report = triangularity_report(5, &pairing);
        assert!(report.holds(), "{name}: {:?}", report.violations.first());
    }
    let report = triangularity_report(4, &PairingMatrix::identity(1));
    assert!(report.holds());
}
