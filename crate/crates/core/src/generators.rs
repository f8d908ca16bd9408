//! The generator families `p^(n)`, `q^(n)` and their transposed versions
//! `p^(1^n)`, `q^(1^n)`, the binomial coefficients `s^k χ`, and exact
//! checks of the relations between these families.
//!
//! The plain families are the coefficients of
//! `exp(Σ_{ℓ≥1} a(∓ℓ) z^ℓ / ℓ)`; the transposed ones use `exp(-Σ …)`.
//! Because symbols of one sign commute, the coefficient of `z^n` is the
//! closed sum `Σ_{λ⊢n} (±1)^{len λ} a(∓λ) / z_λ`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::heisenberg::{
    left_multiply_element, normal_order, Element, Generator, NormalElement, NormalKey,
    PairingMatrix, Word,
};
use crate::linalg::{rank, SparseRow};
use crate::partitions::{
    multipartition_coarser, multipartitions_of, partitions_of, z_constant, MultiPartition,
};
use crate::rational::{factorial, Rational};

// per-index weights of the creation and annihilation parts
type Bidegree = (Vec<u32>, Vec<u32>);

/// `s^k χ = (1/k!) · χ (χ+1) ⋯ (χ+k-1)`.
pub fn s_coefficient(chi: &Rational, k: u32) -> Rational {
    let rising = (0..k).fold(Rational::one(), |acc, j| acc * (chi + Rational::from_integer(j.into())));
    rising / Rational::from_integer(factorial(k))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    Plain,
    Transposed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    P,
    Q,
    PTransposed,
    QTransposed,
}

/// One member of a generator family; level 0 is the unit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorFamily {
    pub kind: FamilyKind,
    pub basis_index: usize,
    pub level: u32,
}

impl GeneratorFamily {
    pub fn element(&self) -> Element {
        match self.kind {
            FamilyKind::P => expand_p(self.basis_index, self.level, Flavor::Plain),
            FamilyKind::Q => expand_q(self.basis_index, self.level, Flavor::Plain),
            FamilyKind::PTransposed => expand_p(self.basis_index, self.level, Flavor::Transposed),
            FamilyKind::QTransposed => expand_q(self.basis_index, self.level, Flavor::Transposed),
        }
    }
}

fn expand(index: usize, n: u32, flavor: Flavor, creation: bool) -> Element {
    let mut out = Element::zero();
    for lambda in partitions_of(n) {
        let mut coefficient = Rational::one() / z_constant(&lambda);
        if flavor == Flavor::Transposed && lambda.len() % 2 == 1 {
            coefficient = -coefficient;
        }
        let symbols = lambda
            .parts()
            .iter()
            .rev()
            .map(|&k| if creation { Generator::creation(index, k) } else { Generator::annihilation(index, k) })
            .collect();
        out.add_term(Word::new(symbols), coefficient);
    }
    out
}

/// `p^(n)_index` (plain) or `p^(1^n)_index` (transposed).
pub fn expand_p(index: usize, n: u32, flavor: Flavor) -> Element {
    expand(index, n, flavor, true)
}

/// `q^(n)_index` (plain) or `q^(1^n)_index` (transposed).
pub fn expand_q(index: usize, n: u32, flavor: Flavor) -> Element {
    expand(index, n, flavor, false)
}

/// Which pair of families is being related.
///
/// * `Plain`: `p^(n)`, `q^(m)` with coefficients `s^k ⟨α,β⟩`.
/// * `Transposed`: `p^(1^n)`, `q^(1^m)` with the same coefficients.
/// * `Mixed`: `p^(n)`, `q^(1^m)` with coefficients `s^k(-⟨α,β⟩)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RelationVariant {
    Plain,
    Transposed,
    Mixed,
}

impl RelationVariant {
    pub const ALL: [RelationVariant; 3] = [Self::Plain, Self::Transposed, Self::Mixed];

    fn p_flavor(self) -> Flavor {
        match self {
            Self::Plain | Self::Mixed => Flavor::Plain,
            Self::Transposed => Flavor::Transposed,
        }
    }

    fn q_flavor(self) -> Flavor {
        match self {
            Self::Plain => Flavor::Plain,
            Self::Transposed | Self::Mixed => Flavor::Transposed,
        }
    }

    fn coefficient_argument(self, pairing_value: &Rational) -> Rational {
        match self {
            Self::Plain | Self::Transposed => pairing_value.clone(),
            Self::Mixed => -pairing_value,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Plain => "plain",
            Self::Transposed => "transposed",
            Self::Mixed => "mixed",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RelationKind {
    QCommute,
    PCommute,
    QP,
}

impl fmt::Display for RelationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::QCommute => "[q, q] = 0",
            Self::PCommute => "[p, p] = 0",
            Self::QP => "q p = sum_k s^k p q",
        })
    }
}

/// A relation instance whose two sides differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationFailure {
    pub relation: RelationKind,
    pub variant: RelationVariant,
    pub m: u32,
    pub n: u32,
    pub alpha: usize,
    pub beta: usize,
    pub lhs: NormalElement,
    pub rhs: NormalElement,
}

impl fmt::Display for RelationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} ({}) fails at m={}, n={}, alpha={}, beta={}: lhs = {}, rhs = {}",
            self.relation,
            self.variant.name(),
            self.m,
            self.n,
            self.alpha,
            self.beta,
            self.lhs,
            self.rhs
        )
    }
}

struct Instance<'a> {
    m: u32,
    n: u32,
    alpha: usize,
    beta: usize,
    pairing: &'a PairingMatrix,
    variant: RelationVariant,
}

impl Instance<'_> {
    fn fail(&self, relation: RelationKind, lhs: NormalElement, rhs: NormalElement) -> RelationFailure {
        RelationFailure {
            relation,
            variant: self.variant,
            m: self.m,
            n: self.n,
            alpha: self.alpha,
            beta: self.beta,
            lhs,
            rhs,
        }
    }

    fn commute(&self, relation: RelationKind) -> Result<(), RelationFailure> {
        let (x, y) = match relation {
            RelationKind::QCommute => (
                expand_q(self.alpha, self.m, self.variant.q_flavor()),
                expand_q(self.beta, self.n, self.variant.q_flavor()),
            ),
            _ => (
                expand_p(self.alpha, self.m, self.variant.p_flavor()),
                expand_p(self.beta, self.n, self.variant.p_flavor()),
            ),
        };
        let lhs = normal_order(&(&x * &y), self.pairing);
        let rhs = normal_order(&(&y * &x), self.pairing);
        if lhs == rhs {
            Ok(())
        } else {
            Err(self.fail(relation, lhs, rhs))
        }
    }

    fn qp(&self) -> Result<(), RelationFailure> {
        let (qf, pf) = (self.variant.q_flavor(), self.variant.p_flavor());
        let lhs = left_multiply_element(
            &expand_q(self.alpha, self.m, qf),
            &normal_order(&expand_p(self.beta, self.n, pf), self.pairing),
            self.pairing,
        );
        let chi = self.variant.coefficient_argument(self.pairing.get(self.alpha, self.beta));
        let mut rhs = NormalElement::zero();
        for k in 0..=self.m.min(self.n) {
            let coefficient = s_coefficient(&chi, k);
            if coefficient.is_zero() {
                continue;
            }
            let term = &expand_p(self.beta, self.n - k, pf) * &expand_q(self.alpha, self.m - k, qf);
            rhs.add_assign(&normal_order(&term, self.pairing).scale(&coefficient));
        }
        if lhs == rhs {
            Ok(())
        } else {
            Err(self.fail(RelationKind::QP, lhs, rhs))
        }
    }
}

/// `[q^(m)_α, q^(n)_β] = 0` and `[p^(m)_α, p^(n)_β] = 0` for the families of
/// `variant`.
pub fn verify_qq_pp_commute(
    m: u32,
    n: u32,
    alpha: usize,
    beta: usize,
    pairing: &PairingMatrix,
    variant: RelationVariant,
) -> bool {
    let inst = Instance { m, n, alpha, beta, pairing, variant };
    inst.commute(RelationKind::QCommute).is_ok() && inst.commute(RelationKind::PCommute).is_ok()
}

/// `q^(m)_α p^(n)_β = Σ_{k ≤ min(m,n)} s^k(χ) p^(n-k)_β q^(m-k)_α` with the
/// families and `χ` chosen by `variant`.
pub fn verify_qp_relation(
    m: u32,
    n: u32,
    alpha: usize,
    beta: usize,
    pairing: &PairingMatrix,
    variant: RelationVariant,
) -> bool {
    Instance { m, n, alpha, beta, pairing, variant }.qp().is_ok()
}

/// All three relations for one `(m, n, α, β)`; reports the first failure.
pub fn check_relations(
    m: u32,
    n: u32,
    alpha: usize,
    beta: usize,
    pairing: &PairingMatrix,
    variant: RelationVariant,
) -> Result<(), RelationFailure> {
    let inst = Instance { m, n, alpha, beta, pairing, variant };
    inst.commute(RelationKind::QCommute)?;
    inst.commute(RelationKind::PCommute)?;
    inst.qp()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridReport {
    pub instances: usize,
    pub failure: Option<RelationFailure>,
}

/// Checks every `(m, n)` in `degrees` for every ordered basis pair `(α, β)`.
/// Stops at the first failure.
pub fn verify_grid(
    degrees: &[(u32, u32)],
    pairing: &PairingMatrix,
    variant: RelationVariant,
) -> GridReport {
    let dim = pairing.dim();
    let mut instances = 0;
    for &(m, n) in degrees {
        for alpha in 0..dim {
            for beta in 0..dim {
                instances += 1;
                if let Err(failure) = check_relations(m, n, alpha, beta, pairing, variant) {
                    return GridReport { instances, failure: Some(failure) };
                }
            }
        }
    }
    GridReport { instances, failure: None }
}

/// `(m, n)` with `0 ≤ m, n ≤ max`.
pub fn square_grid(max: u32) -> Vec<(u32, u32)> {
    (0..=max).flat_map(|m| (0..=max).map(move |n| (m, n))).collect()
}

/// `(m, n)` with `m + n ≤ max`.
pub fn triangle_grid(max: u32) -> Vec<(u32, u32)> {
    (0..=max).flat_map(|m| (0..=max - m).map(move |n| (m, n))).collect()
}

/// `p(ν) q(μ)`: the product of `p^(k)_i` over the parts `k` of `ν(i)`
/// followed by the `q^(k)_i` for `μ`, indices ascending and parts ascending,
/// written in the `a(-ν′) a(μ′)` basis.
pub fn pq_to_a_basis(
    creation: &MultiPartition,
    annihilation: &MultiPartition,
    pairing: &PairingMatrix,
) -> NormalElement {
    let mut factors = Vec::new();
    for (index, partition) in creation.iter() {
        factors.extend(partition.parts().iter().rev().map(|&k| expand_p(index, k, Flavor::Plain)));
    }
    for (index, partition) in annihilation.iter() {
        factors.extend(partition.parts().iter().rev().map(|&k| expand_q(index, k, Flavor::Plain)));
    }
    factors
        .iter()
        .rev()
        .fold(NormalElement::one(), |acc, factor| left_multiply_element(factor, &acc, pairing))
}

/// Coefficient of `a(-ν) a(μ)` in `p(ν) q(μ)`: each `p^(k)` or `q^(k)`
/// contributes `1/k` through its single-part term.
pub fn diagonal_coefficient(creation: &MultiPartition, annihilation: &MultiPartition) -> Rational {
    creation
        .iter()
        .chain(annihilation.iter())
        .flat_map(|(_, p)| p.parts().to_vec())
        .fold(Rational::one(), |acc, k| acc / Rational::from_integer(k.into()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangularityViolation {
    pub key: NormalKey,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangularityReport {
    pub pairs_checked: usize,
    pub blocks_checked: usize,
    pub violations: Vec<TriangularityViolation>,
    /// Every fixed-bidegree block of the transition matrix has full rank.
    pub full_rank: bool,
}

impl TriangularityReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty() && self.full_rank
    }
}

/// Expands `p(ν) q(μ)` for all pairs with `|ν| + |μ| ≤ weight_bound` over
/// the pairing's basis and checks triangularity with respect to the
/// coarsening order, then the rank of each fixed-bidegree block.
pub fn triangularity_report(weight_bound: u32, pairing: &PairingMatrix) -> TriangularityReport {
    let dim = pairing.dim();
    let mut violations = Vec::new();
    let mut blocks: BTreeMap<Bidegree, Vec<SparseRow<NormalKey>>> = BTreeMap::new();
    let mut pairs_checked = 0;
    let bidegree = |mp: &MultiPartition| -> Vec<u32> {
        (0..dim).map(|i| mp.get(i).map_or(0, |p| p.weight())).collect()
    };
    for total in 0..=weight_bound {
        for creation_weight in 0..=total {
            let creations = multipartitions_of(creation_weight, dim);
            let annihilations = multipartitions_of(total - creation_weight, dim);
            for nu in &creations {
                for mu in &annihilations {
                    pairs_checked += 1;
                    let key = NormalKey::new(nu.clone(), mu.clone());
                    let expansion = pq_to_a_basis(nu, mu, pairing);
                    let diagonal = expansion.coefficient(&key);
                    if diagonal != diagonal_coefficient(nu, mu) || diagonal.is_zero() {
                        violations.push(TriangularityViolation {
                            key: key.clone(),
                            reason: format!("diagonal coefficient {diagonal}"),
                        });
                    }
                    for (other, _) in expansion.terms() {
                        if *other == key {
                            continue;
                        }
                        let finer = multipartition_coarser(nu, &other.creation)
                            && multipartition_coarser(mu, &other.annihilation);
                        if !finer {
                            violations.push(TriangularityViolation {
                                key: key.clone(),
                                reason: format!(
                                    "term a(-{}) a({}) is not strictly finer",
                                    other.creation, other.annihilation
                                ),
                            });
                        }
                    }
                    blocks
                        .entry((bidegree(nu), bidegree(mu)))
                        .or_default()
                        .push(expansion.terms().map(|(k, c)| (k.clone(), c.clone())).collect());
                }
            }
        }
    }
    let full_rank = blocks.values().all(|rows| rank(rows) == rows.len());
    TriangularityReport { pairs_checked, blocks_checked: blocks.len(), violations, full_rank }
}

pub fn check_triangularity(weight_bound: u32, pairing: &PairingMatrix) -> bool {
    triangularity_report(weight_bound, pairing).holds()
}
