#![allow(dead_code)]

use heisenfock_core::rational::rat;
use heisenfock_core::{Element, FockVector, Generator, MultiPartition, PairingMatrix, Rational, Word};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_rational(rng: &mut impl Rng) -> Rational {
    rat(rng.gen_range(-4..=4), rng.gen_range(1..=3))
}

pub fn nonzero_rational(rng: &mut impl Rng) -> Rational {
    loop {
        let r = small_rational(rng);
        if r != rat(0, 1) {
            return r;
        }
    }
}

pub fn random_pairing(rng: &mut impl Rng, dim: usize) -> PairingMatrix {
    let rows = (0..dim).map(|_| (0..dim).map(|_| small_rational(rng)).collect()).collect();
    PairingMatrix::new(rows).unwrap()
}

pub fn random_word(rng: &mut impl Rng, dim: usize, max_len: usize, max_level: i32) -> Word {
    let len = rng.gen_range(0..=max_len);
    let symbols = (0..len)
        .map(|_| {
            let level = rng.gen_range(1..=max_level);
            let mode = if rng.gen_bool(0.5) { level } else { -level };
            Generator::new(rng.gen_range(0..dim), mode).unwrap()
        })
        .collect();
    Word::new(symbols)
}

pub fn random_element(rng: &mut impl Rng, dim: usize, max_terms: usize, max_len: usize) -> Element {
    let mut out = Element::zero();
    for _ in 0..rng.gen_range(1..=max_terms) {
        out.add_term(random_word(rng, dim, max_len, 3), nonzero_rational(rng));
    }
    out
}

pub fn random_fock_vector(rng: &mut impl Rng, dim: usize) -> FockVector {
    let mut out = FockVector::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let mut nu = MultiPartition::empty();
        for _ in 0..rng.gen_range(0..=3) {
            nu.insert_part(rng.gen_range(0..dim), rng.gen_range(1..=3));
        }
        out.add_term(nu, nonzero_rational(rng));
    }
    out
}

/// The five pairing shapes used by the relation grids.
pub fn pairing_family(dim: usize, seed: u64) -> Vec<(&'static str, PairingMatrix)> {
    let mut r = rng(seed);
    let symmetric = {
        let mut upper = std::collections::BTreeMap::new();
        let rows = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| upper.entry((i.min(j), i.max(j))).or_insert_with(|| nonzero_rational(&mut r)).clone())
                    .collect()
            })
            .collect();
        PairingMatrix::new(rows).unwrap()
    };
    let asymmetric = {
        let mut rows: Vec<Vec<Rational>> =
            (0..dim).map(|_| (0..dim).map(|_| nonzero_rational(&mut r)).collect()).collect();
        if dim > 1 {
            rows[0][1] = &rows[1][0] + rat(1, 2);
        }
        PairingMatrix::new(rows).unwrap()
    };
    let negative = {
        let rows = (0..dim)
            .map(|i| (0..dim).map(|j| rat(-(1 + i as i64 + 2 * j as i64), 1 + j as i64)).collect())
            .collect();
        PairingMatrix::new(rows).unwrap()
    };
    let zero_row = {
        let rows = (0..dim)
            .map(|i| (0..dim).map(|j| if i == 0 { rat(0, 1) } else { rat(3 + j as i64, 2) }).collect())
            .collect();
        PairingMatrix::new(rows).unwrap()
    };
    vec![
        ("identity", PairingMatrix::identity(dim)),
        ("symmetric", symmetric),
        ("asymmetric", asymmetric),
        ("negative", negative),
        ("zero-row", zero_row),
    ]
}
