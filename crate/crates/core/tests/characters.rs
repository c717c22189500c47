//! Character values checked against the Jacobi–Trudi determinant over
//! permutation characters of Young subgroups, which shares no code with the
//! rim-hook recursion.

use wreath_gelfand::chartable::mn_character;
use wreath_gelfand::partitions::{
    enumerate_cycle_types, enumerate_partitions, CycleType, Partition,
};

/// Number of ways to distribute the cycles of `mu` into ordered boxes whose
/// total lengths are `alpha`; the permutation character of `S_α` at `μ`.
fn permutation_character(alpha: &[i64], cycles: &[usize]) -> i64 {
    if alpha.iter().any(|&a| a < 0) {
        return 0;
    }
    fn place(cycles: &[usize], room: &mut [i64]) -> i64 {
        let Some((&c, rest)) = cycles.split_first() else {
            return room.iter().all(|&r| r == 0) as i64;
        };
        let mut total = 0;
        for i in 0..room.len() {
            if room[i] >= c as i64 {
                room[i] -= c as i64;
                total += place(rest, room);
                room[i] += c as i64;
            }
        }
        total
    }
    place(cycles, &mut alpha.to_vec())
}

fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    if n == 0 {
        return vec![(Vec::new(), 1)];
    }
    let mut out = Vec::new();
    for (p, sign) in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            let flips = (p.len() - pos) as i64;
            out.push((q, if flips % 2 == 0 { sign } else { -sign }));
        }
    }
    out
}

fn jacobi_trudi(lambda: &Partition, mu: &CycleType) -> i64 {
    let l = lambda.len();
    permutations(l)
        .into_iter()
        .map(|(w, sign)| {
            let alpha: Vec<i64> = (0..l)
                .map(|i| lambda.parts()[i] as i64 - i as i64 + w[i] as i64)
                .collect();
            sign * permutation_character(&alpha, mu.parts())
        })
        .sum()
}

#[test]
fn rim_hooks_agree_with_determinant() {
    for k in 1..=8 {
        for lambda in enumerate_partitions(k).unwrap() {
            for mu in enumerate_cycle_types(k).unwrap() {
                assert_eq!(
                    mn_character(&lambda, &mu).unwrap(),
                    jacobi_trudi(&lambda, &mu),
                    "λ = {lambda}, μ = {mu}"
                );
            }
        }
    }
}

#[test]
fn known_values() {
    let chi = |l: &str, m: &str| mn_character(&l.parse().unwrap(), &m.parse().unwrap()).unwrap();
    assert_eq!(chi("3.1.1", "1.1.1.1.1"), 6);
    assert_eq!(chi("3.1.1", "2.2.1"), -2);
    assert_eq!(chi("3.2", "4.1"), -1);
    assert_eq!(chi("3.2", "3.2"), 1);
    assert_eq!(chi("3.1.1", "5"), 1);
}
