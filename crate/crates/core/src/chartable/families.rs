use num_bigint::BigUint;
use num_complex::Complex;
use num_integer::Integer;
use num_traits::{Float, FloatConst};
use std::fmt::Debug;

use super::{CharacterTable, ClassInfo, Irrep, PowerMaps};
use crate::error::{Error, Result};
use crate::scalar::DEFAULT_TABLE_TOL;

fn root_of_unity<T: Float + FloatConst>(num: u64, den: u64) -> Complex<T> {
    let r = num % den;
    let theta = T::TAU() * T::from(r).unwrap() / T::from(den).unwrap();
    Complex::new(theta.cos(), theta.sin())
}

fn two_cos<T: Float + FloatConst>(num: u64, den: u64) -> Complex<T> {
    let theta = T::TAU() * T::from(num % den).unwrap() / T::from(den).unwrap();
    Complex::new(T::from(2.0).unwrap() * theta.cos(), T::zero())
}

fn size(n: u64) -> BigUint {
    BigUint::from(n)
}

/// Character table of the cyclic group of order `m`.
pub fn cyclic_table<T>(m: u64) -> CharacterTable<Complex<T>>
where
    T: Float + FloatConst + Debug + Send + Sync + 'static,
{
    let m = m.max(1);
    let classes = (0..m)
        .map(|k| ClassInfo {
            label: format!("g{k}"),
            size: size(1),
        })
        .collect();
    let orbits = (0..m)
        .map(|k| {
            let order = m / k.gcd(&m);
            (0..order).map(|j| ((k * j) % m) as usize).collect()
        })
        .collect();
    let irreps = (0..m)
        .map(|j| Irrep {
            label: format!("chi{j}"),
            values: (0..m).map(|k| root_of_unity(j * k, m)).collect(),
        })
        .collect();
    CharacterTable::new(
        format!("C{m}"),
        size(m),
        m,
        classes,
        PowerMaps::from_orbits(orbits),
        irreps,
        DEFAULT_TABLE_TOL,
    )
    .expect("cyclic tables are well formed")
}

/// Character table of the dihedral group of order `2m`, `m >= 3`.
///
/// Classes: identity, rotation classes `r^k` (with `r^{m/2}` separate for even
/// `m`), then reflections (one class for odd `m`, two for even `m`).
pub fn dihedral_table<T>(m: u64) -> Result<CharacterTable<Complex<T>>>
where
    T: Float + FloatConst + Debug + Send + Sync + 'static,
{
    if m < 3 {
        return Err(Error::Invalid(format!(
            "dihedral group needs m >= 3, got {m}"
        )));
    }
    let even = m.is_multiple_of(2);
    // Rotation exponents represented by the rotation classes, identity first.
    let rotations: Vec<u64> = (0..=m / 2).collect();
    let rot_class = |e: u64| -> usize {
        let e = e % m;
        e.min(m - e) as usize
    };
    let n_rot = rotations.len();

    let mut classes: Vec<ClassInfo> = rotations
        .iter()
        .map(|&k| ClassInfo {
            label: if k == 0 {
                "1".to_string()
            } else {
                format!("r{k}")
            },
            size: size(if k == 0 || (even && k == m / 2) { 1 } else { 2 }),
        })
        .collect();
    let mut orbits: Vec<Vec<usize>> = rotations
        .iter()
        .map(|&k| {
            let order = m / k.gcd(&m);
            (0..order).map(|j| rot_class(k * j)).collect()
        })
        .collect();
    if even {
        classes.push(ClassInfo {
            label: "s".into(),
            size: size(m / 2),
        });
        classes.push(ClassInfo {
            label: "sr".into(),
            size: size(m / 2),
        });
        orbits.push(vec![0, n_rot]);
        orbits.push(vec![0, n_rot + 1]);
    } else {
        classes.push(ClassInfo {
            label: "s".into(),
            size: size(m),
        });
        orbits.push(vec![0, n_rot]);
    }

    let one = Complex::new(T::one(), T::zero());
    let linear = |rot_sign: f64, s_sign: f64| -> Vec<Complex<T>> {
        let r = T::from(rot_sign).unwrap();
        let s = T::from(s_sign).unwrap();
        let mut v: Vec<Complex<T>> = rotations
            .iter()
            .map(|&k| one * if k % 2 == 0 { T::one() } else { r })
            .collect();
        v.push(one * s);
        if even {
            v.push(one * s * r);
        }
        v
    };
    let mut irreps = vec![
        Irrep {
            label: "triv".into(),
            values: linear(1.0, 1.0),
        },
        Irrep {
            label: "sgn".into(),
            values: linear(1.0, -1.0),
        },
    ];
    if even {
        irreps.push(Irrep {
            label: "eps".into(),
            values: linear(-1.0, 1.0),
        });
        irreps.push(Irrep {
            label: "eps_sgn".into(),
            values: linear(-1.0, -1.0),
        });
    }
    let two_dim = if even { m / 2 - 1 } else { (m - 1) / 2 };
    for j in 1..=two_dim {
        let mut values: Vec<Complex<T>> = rotations.iter().map(|&k| two_cos(j * k, m)).collect();
        values.extend(std::iter::repeat_n(
            Complex::new(T::zero(), T::zero()),
            classes.len() - n_rot,
        ));
        irreps.push(Irrep {
            label: format!("psi{j}"),
            values,
        });
    }

    CharacterTable::new(
        format!("D{m}"),
        size(2 * m),
        m.lcm(&2),
        classes,
        PowerMaps::from_orbits(orbits),
        irreps,
        DEFAULT_TABLE_TOL,
    )
}
