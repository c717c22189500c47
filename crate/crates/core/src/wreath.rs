//! Irreducible labels of `Γ^n` up to permutation, their stabilizers in `S_n`,
//! and the class function `M_π` whose decomposition decides multiplicity
//! freeness of `L(G_n / K_n)`.
//!
//! For `π = π_{ℓ_1} ⊗ ... ⊗ π_{ℓ_n}` with sorted labels, the stabilizer is a
//! Young subgroup `S_{m_1} × ... × S_{m_r}` (one factor per distinct label).
//! `M_π(σ)` averages the character of `π∘ω` over the diagonal copy of `Γ`; on
//! `(δ, σ)` that character factors over the cycles `c` of `σ` as
//! `∏_c χ_{ℓ(c)}(δ^{|c|})`.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::chartable::{character_product, inner_product, is_real, mn_character, CharacterTable};
use crate::error::{Error, Result};
use crate::partitions::{
    class_size, enumerate_cycle_types, enumerate_partitions, hook_dimension, involution_count,
    CycleType, Partition,
};
use crate::scalar::{to_coefficient, to_multiplicity, ClassScalar};

/// Largest number of multisets [`enumerate_pi`] will produce.
pub const PI_ENUMERATION_CAP: u64 = 1_000_000;

/// A run of equal labels in a [`PiMultiset`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Block {
    pub irrep: usize,
    pub multiplicity: usize,
}

/// An irrep of `Γ^n` up to reordering of its factors.
#[derive(Clone, Debug)]
pub struct PiMultiset<'a, S> {
    gamma: &'a CharacterTable<S>,
    labels: Vec<usize>,
    blocks: Vec<Block>,
}

impl<'a, S: ClassScalar> PiMultiset<'a, S> {
    /// Sorts `labels`; any ordering of the same factors gives the same value.
    pub fn new(
        gamma: &'a CharacterTable<S>,
        labels: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        let mut labels: Vec<usize> = labels.into_iter().collect();
        if labels.is_empty() {
            return Err(Error::Invalid("π needs at least one factor".into()));
        }
        if let Some(&bad) = labels.iter().find(|&&l| l >= gamma.num_irreps()) {
            return Err(Error::Invalid(format!(
                "irrep index {bad} out of range for {}",
                gamma.name()
            )));
        }
        labels.sort_unstable();
        let mut blocks: Vec<Block> = Vec::new();
        for &l in &labels {
            match blocks.last_mut() {
                Some(b) if b.irrep == l => b.multiplicity += 1,
                _ => blocks.push(Block {
                    irrep: l,
                    multiplicity: 1,
                }),
            }
        }
        Ok(PiMultiset {
            gamma,
            labels,
            blocks,
        })
    }

    pub fn gamma(&self) -> &'a CharacterTable<S> {
        self.gamma
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn label_names(&self) -> Vec<String> {
        self.labels
            .iter()
            .map(|&l| self.gamma.irrep_label(l).to_string())
            .collect()
    }

    /// `∏ dim π_{ℓ_i}`.
    pub fn dimension(&self) -> BigUint {
        self.labels
            .iter()
            .fold(BigUint::one(), |acc, &l| acc * self.gamma.dimension(l))
    }
}

impl<S: ClassScalar> fmt::Display for PiMultiset<'_, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.label_names().join(", "))
    }
}

fn binomial(n: u64, k: u64) -> BigUint {
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Every sorted label sequence of length `n`, in lexicographic order.
pub fn enumerate_pi<S: ClassScalar>(
    gamma: &CharacterTable<S>,
    n: usize,
) -> Result<Vec<PiMultiset<'_, S>>> {
    if n == 0 {
        return Err(Error::Invalid("n must be at least 1".into()));
    }
    let s = gamma.num_irreps();
    let count = binomial((s + n - 1) as u64, n as u64);
    if count > BigUint::from(PI_ENUMERATION_CAP) {
        return Err(Error::size_limit(
            "number of π multisets",
            count,
            PI_ENUMERATION_CAP,
        ));
    }
    let mut out = Vec::new();
    let mut current = vec![0usize; n];
    loop {
        out.push(PiMultiset::new(gamma, current.iter().copied())?);
        // Next weakly increasing sequence.
        let Some(pos) = current.iter().rposition(|&x| x + 1 < s) else {
            break;
        };
        let next = current[pos] + 1;
        current[pos..].iter_mut().for_each(|x| *x = next);
    }
    Ok(out)
}

/// A conjugacy class of a Young subgroup: one cycle type per factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClassTuple(pub Vec<CycleType>);

/// An irrep of a Young subgroup: one partition per factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IrrepTuple(pub Vec<Partition>);

impl IrrepTuple {
    pub fn is_trivial(&self) -> bool {
        self.0.iter().all(|p| p.len() <= 1)
    }

    pub fn labels(&self) -> Vec<String> {
        self.0.iter().map(|p| p.to_string()).collect()
    }
}

fn join<T: fmt::Display>(items: &[T], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let parts: Vec<String> = items.iter().map(|x| x.to_string()).collect();
    write!(f, "[{}]", parts.join(" | "))
}

impl fmt::Display for ClassTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        join(&self.0, f)
    }
}

impl fmt::Display for IrrepTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        join(&self.0, f)
    }
}

/// `S_{m_1} × ... × S_{m_r}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YoungProduct {
    block_sizes: Vec<usize>,
}

fn cartesian<T: Clone>(factors: Vec<Vec<T>>) -> Vec<Vec<T>> {
    factors.into_iter().fold(vec![Vec::new()], |acc, options| {
        acc.iter()
            .flat_map(|prefix| {
                options.iter().map(move |o| {
                    let mut v = prefix.clone();
                    v.push(o.clone());
                    v
                })
            })
            .collect()
    })
}

impl YoungProduct {
    pub fn new(block_sizes: Vec<usize>) -> Result<Self> {
        if block_sizes.contains(&0) {
            return Err(Error::Invalid("Young factors must be nonempty".into()));
        }
        Ok(YoungProduct { block_sizes })
    }

    pub fn block_sizes(&self) -> &[usize] {
        &self.block_sizes
    }

    pub fn order(&self) -> BigUint {
        self.block_sizes.iter().fold(BigUint::one(), |acc, &m| {
            acc * crate::partitions::factorial(m)
        })
    }

    pub fn is_trivial(&self) -> bool {
        self.block_sizes.iter().all(|&m| m == 1)
    }

    /// Class tuples, identity first, in the product of the cycle-type orders.
    pub fn classes(&self) -> Result<Vec<ClassTuple>> {
        let factors = self
            .block_sizes
            .iter()
            .map(|&m| enumerate_cycle_types(m))
            .collect::<Result<Vec<_>>>()?;
        Ok(cartesian(factors).into_iter().map(ClassTuple).collect())
    }

    /// Irrep tuples, trivial first, in the product of the partition orders.
    pub fn irreps(&self) -> Result<Vec<IrrepTuple>> {
        let factors = self
            .block_sizes
            .iter()
            .map(|&m| enumerate_partitions(m))
            .collect::<Result<Vec<_>>>()?;
        Ok(cartesian(factors).into_iter().map(IrrepTuple).collect())
    }

    pub fn identity_class(&self) -> ClassTuple {
        ClassTuple(
            self.block_sizes
                .iter()
                .map(|&m| CycleType::identity(m))
                .collect(),
        )
    }

    pub fn trivial_irrep(&self) -> IrrepTuple {
        IrrepTuple(
            self.block_sizes
                .iter()
                .map(|&m| Partition::row(m))
                .collect(),
        )
    }

    fn check_class(&self, cls: &ClassTuple) -> Result<()> {
        let ok = cls.0.len() == self.block_sizes.len()
            && cls
                .0
                .iter()
                .zip(&self.block_sizes)
                .all(|(t, &m)| t.weight() == m);
        if ok {
            Ok(())
        } else {
            Err(Error::Invalid(format!(
                "class tuple {cls} does not fit blocks {:?}",
                self.block_sizes
            )))
        }
    }

    pub fn class_size(&self, cls: &ClassTuple) -> Result<BigUint> {
        self.check_class(cls)?;
        Ok(cls
            .0
            .iter()
            .fold(BigUint::one(), |acc, t| acc * class_size(t)))
    }

    pub fn character(&self, rho: &IrrepTuple, cls: &ClassTuple) -> Result<i64> {
        self.check_class(cls)?;
        rho.0
            .iter()
            .zip(&cls.0)
            .try_fold(1i64, |acc, (lambda, t)| Ok(acc * mn_character(lambda, t)?))
    }

    pub fn dimension(&self, rho: &IrrepTuple) -> BigUint {
        rho.0
            .iter()
            .fold(BigUint::one(), |acc, lambda| acc * hook_dimension(lambda))
    }

    /// Sum of the irreducible dimensions, `∏ I(m_j)`.
    pub fn dimension_sum(&self) -> Result<BigUint> {
        self.block_sizes
            .iter()
            .try_fold(BigUint::one(), |acc, &m| Ok(acc * involution_count(m)?))
    }
}

/// Stabilizer of `π` in `S_n`.
pub fn stabilizer<S: ClassScalar>(pi: &PiMultiset<'_, S>) -> YoungProduct {
    YoungProduct {
        block_sizes: pi.blocks.iter().map(|b| b.multiplicity).collect(),
    }
}

/// A class function on a Young subgroup.
#[derive(Clone, Debug)]
pub struct SPiClassFunction<S> {
    pub young: YoungProduct,
    pub classes: Vec<ClassTuple>,
    pub values: Vec<S>,
}

impl<S: ClassScalar> SPiClassFunction<S> {
    pub fn value(&self, cls: &ClassTuple) -> Option<&S> {
        self.classes
            .iter()
            .position(|c| c == cls)
            .map(|i| &self.values[i])
    }
}

/// `M_π` at one class of the stabilizer, by the cycle-product rule.
pub fn m_pi<S: ClassScalar>(pi: &PiMultiset<'_, S>, cls: &ClassTuple) -> Result<S> {
    let young = stabilizer(pi);
    young.check_class(cls)?;
    Ok(eval_m_pi(pi, cls))
}

fn eval_m_pi<S: ClassScalar>(pi: &PiMultiset<'_, S>, cls: &ClassTuple) -> S {
    let gamma = pi.gamma;
    let sum = (0..gamma.num_classes()).fold(S::zero(), |acc, c| {
        let mut term = gamma.size_scalars()[c].clone();
        for (block, t) in pi.blocks.iter().zip(&cls.0) {
            for &len in t.parts() {
                let powered = gamma.power_class(c, len as u64);
                term = term * gamma.value(block.irrep, powered).clone();
            }
        }
        acc + term
    });
    sum.div_int(gamma.order_int())
}

/// `M_π` on every class of the stabilizer.
pub fn m_pi_function<S: ClassScalar>(pi: &PiMultiset<'_, S>) -> Result<SPiClassFunction<S>> {
    let young = stabilizer(pi);
    let classes = young.classes()?;
    let values = classes.iter().map(|cls| eval_m_pi(pi, cls)).collect();
    Ok(SPiClassFunction {
        young,
        classes,
        values,
    })
}

/// `M_π(e) = (1/|Γ|) Σ_C |C| ∏_i χ_{ℓ_i}(C)`, evaluated factor by factor
/// without reference to the stabilizer.
pub fn m_pi_identity<S: ClassScalar>(pi: &PiMultiset<'_, S>) -> S {
    let gamma = pi.gamma;
    let product = character_product(gamma, &pi.labels);
    let trivial = vec![S::one(); gamma.num_classes()];
    inner_product(&product, &trivial, gamma).expect("lengths agree by construction")
}

/// Multiplicity of `target` in the tensor product of `sources`. Requires a
/// real-valued target character.
pub fn kron_multiplicity<S: ClassScalar>(
    gamma: &CharacterTable<S>,
    sources: &[usize],
    target: usize,
    tol: f64,
) -> Result<i64> {
    let n = gamma.num_irreps();
    if let Some(&bad) = sources.iter().chain([&target]).find(|&&i| i >= n) {
        return Err(Error::Invalid(format!("irrep index {bad} out of range")));
    }
    if !is_real(gamma, target) {
        return Err(Error::Hypothesis(format!(
            "target irrep '{}' of {} is not real-valued",
            gamma.irrep_label(target),
            gamma.name()
        )));
    }
    let product = character_product(gamma, sources);
    let ip = inner_product(&product, &gamma.irreps()[target].values, gamma)?;
    let names: Vec<&str> = sources.iter().map(|&s| gamma.irrep_label(s)).collect();
    to_multiplicity(
        &ip,
        tol,
        &format!(
            "multiplicity of {} in {}",
            gamma.irrep_label(target),
            names.join(" x ")
        ),
    )
}

/// Coefficients `a_ρ = <M_π, χ_ρ>` over the irreps of the stabilizer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub young: YoungProduct,
    pub coefficients: Vec<(IrrepTuple, u64)>,
}

impl Decomposition {
    pub fn max_coefficient(&self) -> u64 {
        self.coefficients.iter().map(|(_, a)| *a).max().unwrap_or(0)
    }

    /// First irrep (in enumeration order) whose coefficient reaches `bound`.
    pub fn first_at_least(&self, bound: u64) -> Option<(&IrrepTuple, u64)> {
        self.coefficients
            .iter()
            .find(|(_, a)| *a >= bound)
            .map(|(rho, a)| (rho, *a))
    }

    pub fn coefficient(&self, rho: &IrrepTuple) -> Option<u64> {
        self.coefficients
            .iter()
            .find(|(r, _)| r == rho)
            .map(|(_, a)| *a)
    }

    /// `Σ_ρ a_ρ dim ρ`, which must equal `M_π(e)`.
    pub fn weighted_dimension(&self) -> BigUint {
        self.coefficients
            .iter()
            .map(|(rho, a)| self.young.dimension(rho) * *a)
            .sum()
    }

    pub fn square_sum(&self) -> u64 {
        self.coefficients.iter().map(|(_, a)| a * a).sum()
    }
}

/// Decomposes `M_π` into irreducible characters of the stabilizer.
pub fn decompose_m_pi<S: ClassScalar>(pi: &PiMultiset<'_, S>, tol: f64) -> Result<Decomposition> {
    let f = m_pi_function(pi)?;
    decompose_class_function(pi, &f, tol)
}

pub(crate) fn decompose_class_function<S: ClassScalar>(
    pi: &PiMultiset<'_, S>,
    f: &SPiClassFunction<S>,
    tol: f64,
) -> Result<Decomposition> {
    let young = &f.young;
    let sizes = f
        .classes
        .iter()
        .map(|cls| {
            young
                .class_size(cls)
                .map(|s| S::from_bigint(&BigInt::from(s)))
        })
        .collect::<Result<Vec<S>>>()?;
    let order = BigInt::from(young.order());
    let coefficients = young
        .irreps()?
        .into_iter()
        .map(|rho| {
            let sum = f.classes.iter().zip(&f.values).zip(&sizes).try_fold(
                S::zero(),
                |acc, ((cls, value), size)| -> Result<S> {
                    let chi = young.character(&rho, cls)?;
                    Ok(acc + size.clone() * value.clone() * S::from_i64(chi))
                },
            )?;
            let a = to_coefficient(
                &sum.div_int(&order),
                tol,
                &format!("coefficient of {rho} in M_π for π = {pi}"),
            )?;
            Ok((rho, a))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Decomposition {
        young: young.clone(),
        coefficients,
    })
}

/// True when `M_π(e)` exceeds the total dimension of the stabilizer's irreps,
/// which forces some coefficient to be at least 2.
pub fn dimension_filter<S: ClassScalar>(pi: &PiMultiset<'_, S>, tol: f64) -> Result<bool> {
    let identity = m_pi_identity(pi);
    let value = to_multiplicity(&identity, tol, &format!("M_π(e) for π = {pi}"))?;
    let bound = stabilizer(pi).dimension_sum()?;
    Ok(value > 0 && BigUint::from(value as u64) > bound)
}
