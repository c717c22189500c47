use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_integer::Integer;
use rayon::prelude::*;

use super::{CharacterTable, ClassInfo, Irrep, PowerMaps};
use crate::error::{Error, Result};
use crate::partitions::{
    class_size, enumerate_cycle_types, enumerate_partitions, factorial, power_cycle_type,
    CycleType, Partition,
};
use crate::scalar::{ClassScalar, DEFAULT_TABLE_TOL};

/// Largest `k` for which [`symmetric_table`] builds the full table.
pub const SYMMETRIC_TABLE_CAP: usize = 30;

type MemoKey = (Vec<usize>, Vec<usize>);

fn memo() -> &'static RwLock<HashMap<MemoKey, i64>> {
    static MEMO: OnceLock<RwLock<HashMap<MemoKey, i64>>> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `chi_lambda(mu)` by the Murnaghan–Nakayama rule.
pub fn mn_character(lambda: &Partition, mu: &CycleType) -> Result<i64> {
    if lambda.weight() != mu.weight() {
        return Err(Error::WeightMismatch {
            partition: lambda.weight(),
            cycle_type: mu.weight(),
        });
    }
    Ok(mn_rec(lambda.parts(), mu.parts()))
}

fn mn_rec(lambda: &[usize], mu: &[usize]) -> i64 {
    let Some((&strip, rest)) = mu.split_first() else {
        return 1;
    };
    if lambda.len() <= 1 {
        // A single row: every strip is horizontal.
        return 1;
    }
    if rest.is_empty() {
        // One strip covering the whole diagram exists only for hooks.
        return hook_leg(lambda).map_or(0, |leg| if leg % 2 == 0 { 1 } else { -1 });
    }
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(&v) = memo().read().expect("memo poisoned").get(&key) {
        return v;
    }
    let value = remove_rim_hooks(lambda, strip)
        .into_iter()
        .map(|(smaller, height)| {
            let sign = if height % 2 == 0 { 1 } else { -1 };
            sign * mn_rec(&smaller, rest)
        })
        .sum();
    memo()
        .write()
        .expect("memo poisoned")
        .entry(key)
        .or_insert(value);
    value
}

/// Leg length when `lambda` is a hook, `None` otherwise.
fn hook_leg(lambda: &[usize]) -> Option<usize> {
    lambda[1..]
        .iter()
        .all(|&p| p == 1)
        .then(|| lambda.len() - 1)
}

/// All partitions obtained by removing a rim hook of size `r`, with the hook's
/// leg length. Works on beta-numbers: a hook removal moves one bead down by `r`.
fn remove_rim_hooks(lambda: &[usize], r: usize) -> Vec<(Vec<usize>, usize)> {
    let len = lambda.len();
    let beta: Vec<usize> = lambda
        .iter()
        .enumerate()
        .map(|(i, &p)| p + len - 1 - i)
        .collect();
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let height = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.clone();
        next[i] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<usize> = next
            .iter()
            .enumerate()
            .map(|(j, &x)| x - (len - 1 - j))
            .filter(|&p| p > 0)
            .collect();
        out.push((parts, height));
    }
    out
}

/// Character table of `S_k`: classes are cycle types (identity first),
/// irreps are partitions in partition order.
pub fn symmetric_table<S: ClassScalar>(k: usize) -> Result<CharacterTable<S>> {
    if k == 0 || k > SYMMETRIC_TABLE_CAP {
        return Err(Error::size_limit(
            "symmetric table degree",
            k,
            SYMMETRIC_TABLE_CAP,
        ));
    }
    let cycle_types = enumerate_cycle_types(k)?;
    let index: HashMap<&CycleType, usize> = cycle_types
        .iter()
        .enumerate()
        .map(|(i, t)| (t, i))
        .collect();
    let classes = cycle_types
        .iter()
        .map(|t| ClassInfo {
            label: t.to_string(),
            size: class_size(t),
        })
        .collect();
    let orbits = cycle_types
        .iter()
        .map(|t| {
            (0..t.element_order())
                .map(|j| index[&power_cycle_type(t, j)])
                .collect()
        })
        .collect();
    let exponent = (1..=k as u64).fold(1u64, |acc, i| acc.lcm(&i));
    let irreps = enumerate_partitions(k)?
        .into_par_iter()
        .map(|lambda| {
            let values = cycle_types
                .iter()
                .map(|t| mn_rec(lambda.parts(), t.parts()))
                .map(S::from_i64)
                .collect();
            Irrep {
                label: lambda.to_string(),
                values,
            }
        })
        .collect();
    CharacterTable::new(
        format!("S{k}"),
        factorial(k),
        exponent,
        classes,
        PowerMaps::from_orbits(orbits),
        irreps,
        DEFAULT_TABLE_TOL,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::hook_dimension;
    use crate::Exact;
    use num_bigint::BigUint;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn t(parts: &[usize]) -> CycleType {
        CycleType::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn s5_worked_example_values() {
        assert_eq!(mn_character(&p(&[3, 1, 1]), &t(&[2, 2, 1])).unwrap(), -2);
        assert_eq!(mn_character(&p(&[3, 2]), &t(&[4, 1])).unwrap(), -1);
        assert!(matches!(
            mn_character(&p(&[3, 2]), &t(&[4])),
            Err(Error::WeightMismatch { .. })
        ));
    }

    #[test]
    fn identity_column_is_hook_dimension() {
        for k in 1..=9 {
            for lambda in enumerate_partitions(k).unwrap() {
                let chi = mn_character(&lambda, &CycleType::identity(k)).unwrap();
                assert_eq!(BigUint::from(chi as u64), hook_dimension(&lambda));
            }
        }
    }

    #[test]
    fn s5_row_of_the_six_dimensional_irrep() {
        let table = symmetric_table::<Exact>(5).unwrap();
        let row = table.irrep_index("3.1.1").unwrap();
        let order = ["1.1.1.1.1", "2.1.1.1", "2.2.1", "3.1.1", "3.2", "5", "4.1"];
        let values: Vec<i64> = order
            .iter()
            .map(|label| {
                let c = table
                    .classes()
                    .iter()
                    .position(|c| c.label == *label)
                    .unwrap();
                table.value(row, c).to_integer().try_into().unwrap()
            })
            .collect();
        assert_eq!(values, vec![6, 0, -2, 0, 0, 1, 0]);
        let mut dims: Vec<u64> = (0..7).map(|i| table.dimension(i)).collect();
        dims.sort();
        assert_eq!(dims, vec![1, 1, 4, 4, 5, 5, 6]);
    }

    #[test]
    fn trivial_group() {
        let table = symmetric_table::<Exact>(1).unwrap();
        assert_eq!(table.num_classes(), 1);
        assert_eq!(table.num_irreps(), 1);
        assert!(symmetric_table::<Exact>(0).is_err());
        assert!(symmetric_table::<Exact>(31).is_err());
    }

    #[test]
    fn conjugation_symmetry() {
        for k in 1..=8 {
            let classes = enumerate_cycle_types(k).unwrap();
            for lambda in enumerate_partitions(k).unwrap() {
                let conj = lambda.conjugate();
                for mu in &classes {
                    assert_eq!(
                        mn_character(&lambda, mu).unwrap(),
                        mn_character(&conj, mu).unwrap() * mu.sign(),
                        "{lambda} at {mu}"
                    );
                }
            }
        }
    }

    #[test]
    fn column_orthogonality() {
        for k in 1..=10 {
            let parts = enumerate_partitions(k).unwrap();
            let classes = enumerate_cycle_types(k).unwrap();
            let cols: Vec<Vec<i64>> = classes
                .iter()
                .map(|mu| parts.iter().map(|l| mn_character(l, mu).unwrap()).collect())
                .collect();
            for i in 0..cols.len() {
                for j in (i + 1)..cols.len() {
                    let dot: i64 = cols[i].iter().zip(&cols[j]).map(|(a, b)| a * b).sum();
                    assert_eq!(dot, 0, "S{k} columns {} and {}", classes[i], classes[j]);
                }
            }
        }
    }

    #[test]
    fn power_orbits_follow_cycle_types() {
        let table = symmetric_table::<Exact>(5).unwrap();
        let four_one = table
            .classes()
            .iter()
            .position(|c| c.label == "4.1")
            .unwrap();
        let double = table
            .classes()
            .iter()
            .position(|c| c.label == "2.2.1")
            .unwrap();
        assert_eq!(table.power_class(four_one, 2), double);
        assert_eq!(table.power_class(four_one, 4), 0);
        assert_eq!(table.power_class(four_one, 5), four_one);
        assert_eq!(table.exponent(), 60);
    }
}
