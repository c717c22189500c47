use num_bigint::BigUint;
use num_rational::Ratio;
use proptest::prelude::*;

use wreath_gelfand::chartable::{cyclic_table, dihedral_table, symmetric_table, CharacterTable};
use wreath_gelfand::crack::{cracking_point, is_gelfand, SearchOptions, Verdict};
use wreath_gelfand::partitions::{
    enumerate_cycle_types, enumerate_partitions, hook_dimension, involution_count, power_cycle_type,
};
use wreath_gelfand::scalar::ClassScalar;
use wreath_gelfand::wreath::{
    decompose_m_pi, dimension_filter, enumerate_pi, kron_multiplicity, m_pi, m_pi_identity,
    stabilizer,
};
use wreath_gelfand::{Approx, Approx32, Exact};

fn sym(k: usize) -> CharacterTable<Exact> {
    symmetric_table(k).unwrap()
}

proptest! {
    #[test]
    fn power_maps_compose(k in 1usize..=12, c in 0usize..100, a in 1u64..40, b in 1u64..40) {
        let t = sym(k);
        let c = c % t.num_classes();
        let lhs = t.power_class(t.power_class(c, a), b);
        prop_assert_eq!(lhs, t.power_class(c, a * b));
        let cycle_types = enumerate_cycle_types(k).unwrap();
        let ct = &cycle_types[c];
        prop_assert_eq!(
            power_cycle_type(&power_cycle_type(ct, a), b),
            power_cycle_type(ct, a * b)
        );
    }

    #[test]
    fn dimensions_sum_to_involutions(k in 1usize..=20) {
        let total: BigUint = enumerate_partitions(k).unwrap().iter().map(hook_dimension).sum();
        prop_assert_eq!(total, involution_count(k).unwrap());
    }
}

/// `M_π(e)` from the cycle-product rule at the identity class matches the
/// independent inner-product route.
fn identity_routes_agree<S: ClassScalar>(t: &CharacterTable<S>, n_max: usize) {
    for n in 1..=n_max {
        for pi in enumerate_pi(t, n).unwrap() {
            let young = stabilizer(&pi);
            let via_rule = m_pi(&pi, &young.identity_class()).unwrap();
            let direct = m_pi_identity(&pi);
            assert!(via_rule.distance(&direct) < 1e-9, "{} π = {pi}", t.name());
        }
    }
}

#[test]
fn identity_value_two_ways() {
    identity_routes_agree(&sym(3), 4);
    identity_routes_agree(&sym(4), 4);
    identity_routes_agree(&sym(5), 4);
    identity_routes_agree(&cyclic_table::<f64>(2), 4);
    identity_routes_agree(&cyclic_table::<f64>(3), 4);
    identity_routes_agree(&dihedral_table::<f64>(5).unwrap(), 4);
}

/// With a trivial stabilizer the only coefficient is the tensor
/// multiplicity of the last factor in the others.
#[test]
fn trivial_stabilizer_reduces_to_tensor_multiplicity() {
    for k in 1..=6 {
        let t = sym(k);
        for n in 1..=3 {
            for pi in enumerate_pi(&t, n).unwrap() {
                if !stabilizer(&pi).is_trivial() {
                    continue;
                }
                let (&last, rest) = pi.labels().split_last().unwrap();
                let a = kron_multiplicity(&t, rest, last, 0.0).unwrap();
                let d = decompose_m_pi(&pi, 0.0).unwrap();
                assert_eq!(d.coefficients.len(), 1);
                assert_eq!(d.coefficients[0].1 as i64, a, "S{k} π = {pi}");
            }
        }
    }
}

#[test]
fn dimension_filter_is_sound() {
    for k in [5, 6] {
        let t = sym(k);
        for pi in enumerate_pi(&t, 3).unwrap() {
            if dimension_filter(&pi, 0.0).unwrap() {
                let d = decompose_m_pi(&pi, 0.0).unwrap();
                assert!(d.max_coefficient() >= 2, "S{k} π = {pi}");
            }
        }
    }
}

#[test]
fn levels_past_the_crack_stay_cracked() {
    let opts = SearchOptions::default();
    for (k, levels) in [(3, [6, 7]), (4, [4, 5])] {
        let t = sym(k);
        for n in levels {
            assert_eq!(
                is_gelfand(&t, n, &opts).unwrap().verdict,
                Verdict::NotGelfand,
                "S{k} n={n}"
            );
        }
    }
}

#[test]
fn coefficients_are_nonnegative_integers_for_small_groups() {
    let t = sym(4);
    for n in 1..=4 {
        for pi in enumerate_pi(&t, n).unwrap() {
            let d = decompose_m_pi(&pi, 0.0).unwrap();
            let e = m_pi_identity(&pi).nearest_integer().unwrap().0;
            assert_eq!(d.weighted_dimension(), BigUint::from(e as u64));
        }
    }
}

#[test]
fn scalar_backends_agree() {
    let opts = SearchOptions::default();
    let exact = cracking_point(&sym(5), 4, &opts).unwrap();
    let small: CharacterTable<Ratio<i64>> = symmetric_table(5).unwrap();
    let wide: CharacterTable<Ratio<i128>> = symmetric_table(5).unwrap();
    let float: CharacterTable<Approx> = symmetric_table(5).unwrap();
    assert_eq!(cracking_point(&small, 4, &opts).unwrap(), exact);
    assert_eq!(cracking_point(&wide, 4, &opts).unwrap(), exact);
    let approx = cracking_point(&float, 4, &opts).unwrap();
    assert_eq!(approx.cracking_point, exact.cracking_point);
    assert_eq!(
        approx.levels.last().unwrap().witness,
        exact.levels.last().unwrap().witness
    );

    let single: CharacterTable<Approx32> = dihedral_table(5).unwrap();
    let loose = SearchOptions {
        tol: 1e-3,
        ..SearchOptions::default()
    };
    assert_eq!(
        cracking_point(&single, 7, &loose).unwrap().cracking_point,
        Some(6)
    );
}
