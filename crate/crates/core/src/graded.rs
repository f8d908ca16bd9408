//! Finite-dimensional ℤ-graded vector spaces, tracked by their dimension
//! vectors.
//!
//! Symmetric and exterior powers follow the Koszul sign rule: a generator in
//! odd degree is exterior inside `S^k` and symmetric inside `∧^k`. The
//! two-variable generating series are
//!
//! ```text
//! Σ_k S^k W   t^k = ∏_{i even} (1 - t q^i)^{-d_i} · ∏_{i odd} (1 + t q^i)^{d_i}
//! Σ_k ∧^k W   t^k = ∏_{i even} (1 + t q^i)^{d_i}  · ∏_{i odd} (1 - t q^i)^{-d_i}
//! ```
//!
//! Specialising `q = -1` turns the first into `(1 - t)^{-χ(W)}`, so
//! `χ(S^k W) = s^k χ(W)`. The second becomes `(1 + t)^{χ(W)}`, so
//! `χ(∧^k W) = (-1)^k s^k(-χ(W))`.

use std::collections::BTreeMap;
use std::fmt;

use crate::generators::{expand_p, expand_q, s_coefficient, Flavor};
use crate::heisenberg::{normal_order, NormalElement, PairingMatrix};
use crate::rational::Rational;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GradedDims {
    dims: BTreeMap<i32, u64>,
}

impl GradedDims {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The ground field in degree 0.
    pub fn unit() -> Self {
        Self::from_pairs([(0, 1)])
    }

    /// Repeated degrees are summed; zero dimensions are dropped.
    pub fn from_pairs<I: IntoIterator<Item = (i32, u64)>>(pairs: I) -> Self {
        let mut dims = BTreeMap::new();
        for (degree, dim) in pairs {
            if dim > 0 {
                *dims.entry(degree).or_insert(0) += dim;
            }
        }
        Self { dims }
    }

    pub fn dim(&self, degree: i32) -> u64 {
        self.dims.get(&degree).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i32, u64)> + '_ {
        self.dims.iter().map(|(&d, &n)| (d, n))
    }

    pub fn total_dim(&self) -> u64 {
        self.dims.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dims.is_empty()
    }

    /// Moves every degree `i` to `i + by`.
    pub fn shift(&self, by: i32) -> Self {
        Self { dims: self.dims.iter().map(|(&d, &n)| (d + by, n)).collect() }
    }
}

impl fmt::Display for GradedDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (n, (degree, dim)) in self.dims.iter().enumerate() {
            if n > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{degree}:{dim}")?;
        }
        write!(f, "}}")
    }
}

/// `Σ_i (-1)^i dim W^i`.
pub fn euler(w: &GradedDims) -> i64 {
    w.iter()
        .map(|(degree, dim)| if degree.rem_euclid(2) == 0 { dim as i64 } else { -(dim as i64) })
        .sum()
}

/// Degreewise convolution.
pub fn tensor(w1: &GradedDims, w2: &GradedDims) -> GradedDims {
    let mut dims = BTreeMap::new();
    for (i, a) in w1.iter() {
        for (j, b) in w2.iter() {
            *dims.entry(i + j).or_insert(0u64) += a.checked_mul(b).expect("dimension overflow");
        }
    }
    GradedDims::from_pairs(dims)
}

// Polynomial in t (index = t-degree, truncated) with Laurent coefficients in q.
type Bivariate = Vec<BTreeMap<i32, u128>>;

fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, j| acc * (n - j) as u128 / (j + 1) as u128)
}

// (1 - t q^i)^{-d} when `symmetric`, (1 + t q^i)^d otherwise, up to t^k.
fn factor(degree: i32, dim: u64, symmetric: bool, k: usize) -> Bivariate {
    (0..=k)
        .map(|j| {
            let c = if symmetric { binomial(dim + j as u64 - 1, j as u64) } else { binomial(dim, j as u64) };
            let mut coeff = BTreeMap::new();
            if c > 0 {
                coeff.insert(degree * j as i32, c);
            }
            coeff
        })
        .collect()
}

fn multiply(a: &Bivariate, b: &Bivariate) -> Bivariate {
    let k = a.len().min(b.len());
    let mut out: Bivariate = vec![BTreeMap::new(); k];
    for (i, ai) in a.iter().enumerate().take(k) {
        for (j, bj) in b.iter().enumerate().take(k - i) {
            for (&da, &ca) in ai {
                for (&db, &cb) in bj {
                    let slot = out[i + j].entry(da + db).or_insert(0);
                    *slot = ca
                        .checked_mul(cb)
                        .and_then(|p| slot.checked_add(p))
                        .expect("dimension overflow");
                }
            }
        }
    }
    out
}

fn power_series(w: &GradedDims, k: u32, even_symmetric: bool, odd_symmetric: bool) -> GradedDims {
    let k = k as usize;
    let mut acc: Bivariate = vec![BTreeMap::new(); k + 1];
    acc[0].insert(0, 1);
    for (degree, dim) in w.iter() {
        let symmetric = if degree.rem_euclid(2) == 0 { even_symmetric } else { odd_symmetric };
        acc = multiply(&acc, &factor(degree, dim, symmetric, k));
    }
    GradedDims::from_pairs(
        acc[k].iter().map(|(&d, &c)| (d, u64::try_from(c).expect("dimension overflow"))),
    )
}

/// Graded symmetric power `S^k W`.
pub fn sym_power(w: &GradedDims, k: u32) -> GradedDims {
    power_series(w, k, true, false)
}

/// Graded exterior power `∧^k W`.
pub fn ext_power(w: &GradedDims, k: u32) -> GradedDims {
    power_series(w, k, false, true)
}

/// `S^k W` computed ignoring parity, as if every generator were even. This
/// is not the graded symmetric power and `χ(S^k W) = s^k χ(W)` fails for it
/// as soon as `W` has odd classes; kept for comparison.
pub fn naive_sym_power(w: &GradedDims, k: u32) -> GradedDims {
    power_series(w, k, true, true)
}

/// Checks `q^(m) p^(n) = Σ_k χ(S^k H) · p^(n-k) q^(m-k)` in the Heisenberg
/// algebra of the pairing `[[χ(H)]]`, i.e. that taking Euler
/// characteristics of the graded multiplicity spaces `S^k H` reproduces the
/// scalar relation.
pub fn euler_relation_holds(h: &GradedDims, m: u32, n: u32) -> bool {
    let chi = Rational::from_integer(euler(h).into());
    let pairing = PairingMatrix::scalar(chi);
    let lhs = normal_order(&(&expand_q(0, m, Flavor::Plain) * &expand_p(0, n, Flavor::Plain)), &pairing);
    let mut rhs = NormalElement::zero();
    for k in 0..=m.min(n) {
        let weight = Rational::from_integer(euler(&sym_power(h, k)).into());
        let term = &expand_p(0, n - k, Flavor::Plain) * &expand_q(0, m - k, Flavor::Plain);
        rhs.add_assign(&normal_order(&term, &pairing).scale(&weight));
    }
    lhs == rhs
}

/// `χ(S^k W) == s^k χ(W)`.
pub fn sym_euler_identity(w: &GradedDims, k: u32) -> bool {
    Rational::from_integer(euler(&sym_power(w, k)).into())
        == s_coefficient(&Rational::from_integer(euler(w).into()), k)
}
