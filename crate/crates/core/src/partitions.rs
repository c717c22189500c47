//! Integer partitions and cycle types.
//!
//! A [`Partition`] labels an irreducible representation of `S_k`; a
//! [`CycleType`] labels a conjugacy class. They share a representation but
//! order differently: partitions enumerate with `(k)` first (reverse
//! lexicographic), cycle types with the identity class `(1^k)` first.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};

/// Largest weight accepted by [`enumerate_partitions`] and friends.
pub const ENUMERATION_CAP: usize = 60;

/// Largest argument accepted by [`partition_count`].
pub const COUNT_CAP: usize = 10_000;

/// Largest argument accepted by [`involution_count`].
pub const INVOLUTION_CAP: usize = 40;

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from arbitrary positive parts, sorting them.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Invalid(format!(
                "partition {parts:?} has a zero part"
            )));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub(crate) fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(!parts.contains(&0));
        Partition { parts }
    }

    /// The one-row partition `(k)`.
    pub fn row(k: usize) -> Self {
        if k == 0 {
            Partition::default()
        } else {
            Partition { parts: vec![k] }
        }
    }

    /// The one-column partition `(1^k)`.
    pub fn column(k: usize) -> Self {
        Partition { parts: vec![1; k] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Transposed Young diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=cols)
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// Hook lengths, row by row.
    pub fn hooks(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.weight());
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                out.push(row - j + conj.parts[j] - i - 1);
            }
        }
        out
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("()");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join("."))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"3.1.1"` (or `"3,1,1"`); `"()"` is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(Partition::default());
        }
        let parts = s
            .split(['.', ','])
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition part {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Cycle lengths of a permutation class of `S_k`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct CycleType(Partition);

impl CycleType {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts).map(CycleType)
    }

    pub fn identity(k: usize) -> Self {
        CycleType(Partition::column(k))
    }

    pub fn as_partition(&self) -> &Partition {
        &self.0
    }

    pub fn parts(&self) -> &[usize] {
        self.0.parts()
    }

    pub fn weight(&self) -> usize {
        self.0.weight()
    }

    pub fn is_identity(&self) -> bool {
        self.0.parts.iter().all(|&p| p == 1)
    }

    /// Number of cycles, fixed points included.
    pub fn cycles(&self) -> usize {
        self.0.len()
    }

    /// Sign of any permutation of this type.
    pub fn sign(&self) -> i64 {
        if (self.weight() - self.cycles()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Order of any permutation of this type.
    pub fn element_order(&self) -> u64 {
        self.parts()
            .iter()
            .fold(1u64, |acc, &p| acc.lcm(&(p as u64)))
    }
}

impl From<Partition> for CycleType {
    fn from(p: Partition) -> Self {
        CycleType(p)
    }
}

impl Ord for CycleType {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.0.parts.cmp(&other.0.parts))
    }
}

impl PartialOrd for CycleType {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for CycleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.parse().map(CycleType)
    }
}

/// All partitions of `k` in partition order: `(k)` first, `(1^k)` last.
pub fn enumerate_partitions(k: usize) -> Result<Vec<Partition>> {
    if k > ENUMERATION_CAP {
        return Err(Error::size_limit("partition weight", k, ENUMERATION_CAP));
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(k, k, &mut current, &mut out);
    Ok(out)
}

fn fill(rest: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition::from_sorted(current.clone()));
        return;
    }
    for p in (1..=rest.min(max)).rev() {
        current.push(p);
        fill(rest - p, p, current, out);
        current.pop();
    }
}

/// All cycle types of `S_k`, identity class first.
pub fn enumerate_cycle_types(k: usize) -> Result<Vec<CycleType>> {
    let mut v = enumerate_partitions(k)?;
    v.reverse();
    Ok(v.into_iter().map(CycleType).collect())
}

/// Number of partitions of `k`, by Euler's pentagonal recurrence.
pub fn partition_count(k: usize) -> Result<BigUint> {
    if k > COUNT_CAP {
        return Err(Error::size_limit("partition count argument", k, COUNT_CAP));
    }
    let mut table: Vec<BigInt> = Vec::with_capacity(k + 1);
    table.push(BigInt::one());
    for i in 1..=k {
        let mut sum = BigInt::zero();
        for j in 1.. {
            let g1 = j * (3 * j - 1) / 2;
            if g1 > i {
                break;
            }
            let g2 = j * (3 * j + 1) / 2;
            let mut term = table[i - g1].clone();
            if g2 <= i {
                term += &table[i - g2];
            }
            if j % 2 == 1 {
                sum += term;
            } else {
                sum -= term;
            }
        }
        table.push(sum);
    }
    Ok(table[k]
        .to_biguint()
        .expect("partition counts are positive"))
}

/// `k!` as a big integer.
pub fn factorial(k: usize) -> BigUint {
    (1..=k as u64).fold(BigUint::one(), |acc, i| acc * i)
}

/// Centralizer order `z_t = prod l^{e_l} e_l!`.
pub fn centralizer_order(t: &CycleType) -> BigUint {
    let mut z = BigUint::one();
    let parts = t.parts();
    let mut i = 0;
    while i < parts.len() {
        let l = parts[i];
        let e = parts[i..].iter().take_while(|&&p| p == l).count();
        z *= BigUint::from(l).pow(e as u32) * factorial(e);
        i += e;
    }
    z
}

/// Number of permutations with cycle type `t`.
pub fn class_size(t: &CycleType) -> BigUint {
    factorial(t.weight()) / centralizer_order(t)
}

/// Cycle type of `sigma^m` for `sigma` of type `t`.
pub fn power_cycle_type(t: &CycleType, m: u64) -> CycleType {
    let mut parts = Vec::with_capacity(t.weight());
    for &l in t.parts() {
        let g = (l as u64).gcd(&m) as usize;
        parts.extend(std::iter::repeat_n(l / g, g));
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    CycleType(Partition::from_sorted(parts))
}

/// Dimension of the irreducible representation labelled `lambda`, by the
/// hook-length formula.
pub fn hook_dimension(lambda: &Partition) -> BigUint {
    let hooks = lambda
        .hooks()
        .into_iter()
        .fold(BigUint::one(), |acc, h| acc * h);
    factorial(lambda.weight()) / hooks
}

/// Largest irreducible dimension of `S_k` with every partition attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxDimension {
    pub dimension: BigUint,
    /// All maximizing partitions in partition order; the first is the
    /// canonical choice.
    pub labels: Vec<Partition>,
}

impl MaxDimension {
    pub fn partition(&self) -> &Partition {
        &self.labels[0]
    }
}

pub fn max_dimension(k: usize) -> Result<MaxDimension> {
    if k == 0 {
        return Err(Error::Invalid("max_dimension needs k >= 1".into()));
    }
    let all = enumerate_partitions(k)?;
    // Rank by log hook product; only near-minimal candidates get the exact
    // computation.
    let logs: Vec<f64> = all
        .par_iter()
        .map(|p| p.hooks().iter().map(|&h| (h as f64).ln()).sum())
        .collect();
    let floor = logs.iter().copied().fold(f64::INFINITY, f64::min);
    let mut best = MaxDimension {
        dimension: BigUint::zero(),
        labels: Vec::new(),
    };
    for (lambda, log) in all.into_iter().zip(logs) {
        if log > floor + 1e-6 {
            continue;
        }
        let d = hook_dimension(&lambda);
        match d.cmp(&best.dimension) {
            Ordering::Greater => {
                best.dimension = d;
                best.labels = vec![lambda];
            }
            Ordering::Equal => best.labels.push(lambda),
            Ordering::Less => {}
        }
    }
    Ok(best)
}

/// Number of involutions (including the identity) in `S_m`; equals the sum
/// of irreducible dimensions of `S_m`.
pub fn involution_count(m: usize) -> Result<BigUint> {
    if m > INVOLUTION_CAP {
        return Err(Error::size_limit(
            "involution count argument",
            m,
            INVOLUTION_CAP,
        ));
    }
    let (mut prev, mut cur) = (BigUint::one(), BigUint::one());
    for i in 2..=m {
        let next = &cur + &prev * BigUint::from(i - 1);
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn t(parts: &[usize]) -> CycleType {
        CycleType::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_small_cases() {
        assert_eq!(enumerate_partitions(0).unwrap(), vec![Partition::default()]);
        let five = enumerate_partitions(5).unwrap();
        assert_eq!(five.len(), 7);
        assert_eq!(five[0], p(&[5]));
        assert_eq!(five[6], p(&[1, 1, 1, 1, 1]));
        assert!(five.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(enumerate_partitions(8).unwrap().len(), 22);
        assert!(enumerate_partitions(61).is_err());
    }

    #[test]
    fn cycle_types_start_at_identity() {
        let ct = enumerate_cycle_types(4).unwrap();
        assert!(ct[0].is_identity());
        assert_eq!(ct.last().unwrap(), &t(&[4]));
    }

    #[test]
    fn pentagonal_counts() {
        let counts: Vec<u64> = [0, 1, 5, 10, 11, 60]
            .iter()
            .map(|&k| partition_count(k).unwrap().to_u64().unwrap())
            .collect();
        assert_eq!(counts, vec![1, 1, 7, 42, 56, 966_467]);
        assert!(partition_count(COUNT_CAP + 1).is_err());
        assert!(partition_count(COUNT_CAP).is_ok());
    }

    #[test]
    fn class_sizes_in_s5() {
        assert_eq!(class_size(&t(&[1, 1, 1, 1, 1])), BigUint::from(1u32));
        assert_eq!(class_size(&t(&[2, 1, 1, 1])), BigUint::from(10u32));
        assert_eq!(class_size(&t(&[2, 2, 1])), BigUint::from(15u32));
        assert_eq!(class_size(&t(&[4, 1])), BigUint::from(30u32));
        assert_eq!(class_size(&t(&[5])), BigUint::from(24u32));
    }

    #[test]
    fn powers_of_cycle_types() {
        assert_eq!(power_cycle_type(&t(&[4, 1]), 2), t(&[2, 2, 1]));
        assert_eq!(power_cycle_type(&t(&[4, 1]), 1), t(&[4, 1]));
        assert_eq!(power_cycle_type(&t(&[3, 2]), 2), t(&[3, 1, 1]));
        assert_eq!(power_cycle_type(&t(&[3, 2]), 6), t(&[1, 1, 1, 1, 1]));
    }

    #[test]
    fn squaring_an_explicit_permutation() {
        // (0 1 2)(3 4) squared, computed by composition.
        let perm = [1usize, 2, 0, 4, 3];
        let sq: Vec<usize> = (0..5).map(|i| perm[perm[i]]).collect();
        let mut seen = [false; 5];
        let mut lens = Vec::new();
        for s in 0..5 {
            if seen[s] {
                continue;
            }
            let (mut x, mut len) = (s, 0);
            while !seen[x] {
                seen[x] = true;
                x = sq[x];
                len += 1;
            }
            lens.push(len);
        }
        assert_eq!(
            CycleType::new(lens).unwrap(),
            power_cycle_type(&t(&[3, 2]), 2)
        );
    }

    #[test]
    fn hook_dimensions() {
        assert_eq!(hook_dimension(&p(&[7])), BigUint::one());
        assert_eq!(hook_dimension(&p(&[3, 2])), BigUint::from(5u32));
        assert_eq!(hook_dimension(&p(&[3, 1, 1])), BigUint::from(6u32));
    }

    #[test]
    fn maximal_dimensions() {
        let one = max_dimension(1).unwrap();
        assert_eq!(
            (one.partition().clone(), one.dimension),
            (p(&[1]), BigUint::one())
        );
        assert_eq!(max_dimension(8).unwrap().dimension, BigUint::from(90u32));
        assert_eq!(max_dimension(10).unwrap().dimension, BigUint::from(768u32));
        assert_eq!(max_dimension(11).unwrap().dimension, BigUint::from(2310u32));
        let seven = max_dimension(7).unwrap();
        assert_eq!(seven.labels, vec![p(&[4, 2, 1]), p(&[3, 2, 1, 1])]);
    }

    #[test]
    fn involutions() {
        let v: Vec<u64> = (0..=4)
            .map(|m| involution_count(m).unwrap().to_u64().unwrap())
            .collect();
        assert_eq!(v, vec![1, 1, 2, 4, 10]);
        assert!(involution_count(41).is_err());
    }

    #[test]
    fn conjugate_and_labels() {
        assert_eq!(p(&[3, 1, 1]).conjugate(), p(&[3, 1, 1]));
        assert_eq!(p(&[4, 2]).conjugate(), p(&[2, 2, 1, 1]));
        assert_eq!("3.1.1".parse::<Partition>().unwrap(), p(&[3, 1, 1]));
        assert_eq!(p(&[3, 2]).to_string(), "3.2");
        assert!("3.x".parse::<Partition>().is_err());
        assert_eq!(t(&[2, 1]).sign(), -1);
        assert_eq!(t(&[3, 2, 2]).element_order(), 6);
    }

    #[test]
    fn max_dimension_matches_full_scan() {
        for k in 1..=24 {
            let all = enumerate_partitions(k).unwrap();
            let top = all.iter().map(hook_dimension).max().unwrap();
            let labels: Vec<Partition> = all
                .into_iter()
                .filter(|p| hook_dimension(p) == top)
                .collect();
            let got = max_dimension(k).unwrap();
            assert_eq!((got.dimension, got.labels), (top, labels), "k = {k}");
        }
    }
}
