//! Character tables of finite groups.
//!
//! A [`CharacterTable`] stores classes with sizes, per-class power orbits, and
//! irreducible character values in a chosen scalar backend. Tables come from
//! the Murnaghan–Nakayama rule ([`symmetric_table`]), closed forms
//! ([`cyclic_table`], [`dihedral_table`]) or JSON documents ([`load_table`]).

mod families;
mod io;
mod symmetric;
mod validate;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::ClassScalar;

pub use families::{cyclic_table, dihedral_table};
pub use io::{load_table, load_table_as, parse_table, render_table, AnyTable};
pub use symmetric::{mn_character, symmetric_table, SYMMETRIC_TABLE_CAP};
pub use validate::{validate, ValidationReport};

/// Value backend of a table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Backend {
    Exact,
    Approx,
}

impl Backend {
    pub fn as_str(self) -> &'static str {
        match self {
            Backend::Exact => "exact",
            Backend::Approx => "approx",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassInfo {
    pub label: String,
    pub size: BigUint,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Irrep<S> {
    pub label: String,
    pub values: Vec<S>,
}

/// Power maps stored per class: `orbits[c][j]` is the class of `x^j` for `x`
/// in class `c`, for `j` in `0..order(c)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerMaps {
    orbits: Vec<Vec<usize>>,
}

impl PowerMaps {
    pub fn from_orbits(orbits: Vec<Vec<usize>>) -> Self {
        PowerMaps { orbits }
    }

    /// Class of `x^m` for `x` in `class`.
    pub fn power(&self, class: usize, m: u64) -> usize {
        let orbit = &self.orbits[class];
        orbit[(m % orbit.len() as u64) as usize]
    }

    /// Order of the elements in `class`.
    pub fn element_order(&self, class: usize) -> u64 {
        self.orbits[class].len() as u64
    }

    /// The full map `class -> class of x^m`.
    pub fn map(&self, m: u64) -> Vec<usize> {
        (0..self.orbits.len()).map(|c| self.power(c, m)).collect()
    }

    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }
}

/// Character table of a finite group.
#[derive(Clone, Debug)]
pub struct CharacterTable<S> {
    name: String,
    order: BigUint,
    exponent: u64,
    classes: Vec<ClassInfo>,
    powers: PowerMaps,
    irreps: Vec<Irrep<S>>,
    tolerance: f64,
    sizes: Vec<S>,
    order_int: BigInt,
}

impl<S: ClassScalar> CharacterTable<S> {
    /// Assembles a table without validating it; see [`validate`].
    pub fn new(
        name: impl Into<String>,
        order: BigUint,
        exponent: u64,
        classes: Vec<ClassInfo>,
        powers: PowerMaps,
        irreps: Vec<Irrep<S>>,
        tolerance: f64,
    ) -> Result<Self> {
        if classes.is_empty() {
            return Err(Error::Invalid("a table needs at least one class".into()));
        }
        if powers.orbits.len() != classes.len() {
            return Err(Error::LengthMismatch {
                expected: classes.len(),
                got: powers.orbits.len(),
            });
        }
        for (c, orbit) in powers.orbits.iter().enumerate() {
            if orbit.is_empty() || orbit[0] != 0 || orbit.iter().any(|&x| x >= classes.len()) {
                return Err(Error::Validation(format!(
                    "power orbit of class '{}' is malformed",
                    classes[c].label
                )));
            }
        }
        for irrep in &irreps {
            if irrep.values.len() != classes.len() {
                return Err(Error::Validation(format!(
                    "irrep '{}' has {} values for {} classes",
                    irrep.label,
                    irrep.values.len(),
                    classes.len()
                )));
            }
        }
        let sizes = classes
            .iter()
            .map(|c| S::from_bigint(&BigInt::from(c.size.clone())))
            .collect();
        let order_int = BigInt::from(order.clone());
        if order_int.is_zero() {
            return Err(Error::Invalid("group order must be positive".into()));
        }
        Ok(CharacterTable {
            name: name.into(),
            order,
            exponent,
            classes,
            powers,
            irreps,
            tolerance: if S::EXACT { 0.0 } else { tolerance },
            sizes,
            order_int,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    pub(crate) fn order_int(&self) -> &BigInt {
        &self.order_int
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn classes(&self) -> &[ClassInfo] {
        &self.classes
    }

    pub fn irreps(&self) -> &[Irrep<S>] {
        &self.irreps
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn num_irreps(&self) -> usize {
        self.irreps.len()
    }

    pub fn powers(&self) -> &PowerMaps {
        &self.powers
    }

    /// Class sizes converted to the scalar backend.
    pub fn size_scalars(&self) -> &[S] {
        &self.sizes
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn backend(&self) -> Backend {
        if S::EXACT {
            Backend::Exact
        } else {
            Backend::Approx
        }
    }

    pub fn value(&self, irrep: usize, class: usize) -> &S {
        &self.irreps[irrep].values[class]
    }

    /// Class of `x^m` for `x` in `class`.
    pub fn power_class(&self, class: usize, m: u64) -> usize {
        self.powers.power(class, m)
    }

    /// Degree of an irrep, read off the identity column.
    pub fn dimension(&self, irrep: usize) -> u64 {
        self.irreps[irrep].values[0]
            .nearest_integer()
            .map(|(n, _)| n.max(0) as u64)
            .unwrap_or(0)
    }

    pub fn irrep_label(&self, irrep: usize) -> &str {
        &self.irreps[irrep].label
    }

    /// Finds an irrep by label, falling back to a numeric index.
    pub fn irrep_index(&self, label: &str) -> Option<usize> {
        let label = label.trim();
        self.irreps
            .iter()
            .position(|r| r.label == label)
            .or_else(|| {
                label
                    .parse::<usize>()
                    .ok()
                    .filter(|&i| i < self.irreps.len())
            })
    }

    /// Every irrep is linear.
    pub fn is_abelian(&self) -> bool {
        (0..self.num_irreps()).all(|i| self.dimension(i) == 1)
    }

    /// Structural equality with values compared within `tol`; names ignored.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.order == other.order
            && self.exponent == other.exponent
            && self.classes == other.classes
            && self.powers == other.powers
            && self.irreps.len() == other.irreps.len()
            && self.irreps.iter().zip(&other.irreps).all(|(a, b)| {
                a.label == b.label
                    && a.values
                        .iter()
                        .zip(&b.values)
                        .all(|(x, y)| x.distance(y) <= tol)
            })
    }
}

/// `(1/|G|) sum_C |C| f(C) conj(g(C))`.
pub fn inner_product<S: ClassScalar>(f: &[S], g: &[S], table: &CharacterTable<S>) -> Result<S> {
    let n = table.num_classes();
    for len in [f.len(), g.len()] {
        if len != n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: len,
            });
        }
    }
    let sum = f
        .iter()
        .zip(g)
        .zip(table.size_scalars())
        .fold(S::zero(), |acc, ((a, b), size)| {
            acc + size.clone() * a.clone() * b.conj()
        });
    Ok(sum.div_int(table.order_int()))
}

/// Whether an irreducible character is real-valued (imaginary parts below the
/// table tolerance).
pub fn is_real<S: ClassScalar>(table: &CharacterTable<S>, irrep: usize) -> bool {
    S::EXACT
        || table.irreps[irrep]
            .values
            .iter()
            .all(|v| v.im().abs() < table.tolerance.max(f64::EPSILON))
}

/// Pointwise product of several irreducible characters.
pub fn character_product<S: ClassScalar>(table: &CharacterTable<S>, irreps: &[usize]) -> Vec<S> {
    (0..table.num_classes())
        .map(|c| {
            irreps
                .iter()
                .fold(S::one(), |acc, &i| acc * table.value(i, c).clone())
        })
        .collect()
}
