use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use super::CharacterTable;
use crate::scalar::ClassScalar;

/// Outcome of [`validate`]. Residuals are maxima over all checked entries.
#[derive(Clone, Debug, Serialize)]
pub struct ValidationReport {
    pub table: String,
    pub tolerance: f64,
    pub row_residual: f64,
    pub column_residual: f64,
    pub size_sum_ok: bool,
    pub dimension_sum_ok: bool,
    pub power_maps_ok: bool,
    pub failures: Vec<String>,
    pub passed: bool,
}

/// Checks a table against the orthogonality relations, size and dimension
/// sums, and power-map consistency.
pub fn validate<S: ClassScalar>(table: &CharacterTable<S>) -> ValidationReport {
    let tol = table.tolerance();
    let mut failures = Vec::new();
    let classes = table.classes();
    let irreps = table.irreps();
    let nc = classes.len();

    if classes[0].size != BigUint::one() || table.powers().element_order(0) != 1 {
        failures.push(format!(
            "class '{}' is not the identity class",
            classes[0].label
        ));
    }
    if let Some(c) = classes.iter().find(|c| c.size.is_zero()) {
        failures.push(format!("class '{}' has size 0", c.label));
    }

    let size_sum: BigUint = classes.iter().map(|c| &c.size).sum();
    let size_sum_ok = &size_sum == table.order();
    if !size_sum_ok {
        failures.push(format!(
            "class sizes sum to {size_sum}, order is {}",
            table.order()
        ));
    }

    if irreps.len() != nc {
        failures.push(format!("{} irreps for {nc} classes", irreps.len()));
    }

    let mut dim_sq = BigUint::zero();
    for r in irreps {
        match r.values[0].nearest_integer() {
            Some((d, res)) if d > 0 && res <= tol => dim_sq += BigUint::from(d as u64).pow(2),
            _ => failures.push(format!(
                "irrep '{}' has non-positive-integer degree {}",
                r.label,
                r.values[0].display()
            )),
        }
    }
    let dimension_sum_ok = &dim_sq == table.order();
    if !dimension_sum_ok {
        failures.push(format!(
            "squared degrees sum to {dim_sq}, order is {}",
            table.order()
        ));
    }

    let conj: Vec<Vec<S>> = irreps
        .iter()
        .map(|r| r.values.iter().map(ClassScalar::conj).collect())
        .collect();
    let sizes = table.size_scalars();
    let order = table.order_int();

    let mut row_residual: f64 = 0.0;
    let mut bad_rows = Vec::new();
    for i in 0..irreps.len() {
        for j in i..irreps.len() {
            let sum = (0..nc).fold(S::zero(), |acc, c| {
                acc + sizes[c].clone() * irreps[i].values[c].clone() * conj[j][c].clone()
            });
            let expected = if i == j { S::one() } else { S::zero() };
            let res = sum.div_int(order).distance(&expected);
            row_residual = row_residual.max(res);
            if res > tol || res.is_nan() {
                failures.push(format!(
                    "row orthogonality <{}, {}> off by {res:e}",
                    irreps[i].label, irreps[j].label
                ));
                if i == j {
                    bad_rows.push(i);
                }
            }
        }
    }

    let mut column_residual: f64 = 0.0;
    let mut bad_cols = Vec::new();
    if irreps.len() == nc {
        for c in 0..nc {
            for d in c..nc {
                let sum = (0..irreps.len()).fold(S::zero(), |acc, i| {
                    acc + irreps[i].values[c].clone() * conj[i][d].clone()
                });
                let expected = if c == d { S::one() } else { S::zero() };
                let res = (sizes[c].clone() * sum).div_int(order).distance(&expected);
                column_residual = column_residual.max(res);
                if res > tol || res.is_nan() {
                    failures.push(format!(
                        "column orthogonality at classes '{}', '{}' off by {res:e}",
                        classes[c].label, classes[d].label
                    ));
                    if c == d {
                        bad_cols.push(c);
                    }
                }
            }
        }
    }
    if let ([r], [c]) = (bad_rows.as_slice(), bad_cols.as_slice()) {
        failures.push(format!(
            "suspect cell: irrep '{}' at class '{}'",
            irreps[*r].label, classes[*c].label
        ));
    }

    let power_maps_ok = check_power_maps(table, &mut failures);

    ValidationReport {
        table: table.name().to_string(),
        tolerance: tol,
        row_residual,
        column_residual,
        size_sum_ok,
        dimension_sum_ok,
        power_maps_ok,
        passed: failures.is_empty(),
        failures,
    }
}

fn check_power_maps<S: ClassScalar>(table: &CharacterTable<S>, failures: &mut Vec<String>) -> bool {
    let powers = table.powers();
    let before = failures.len();
    for (c, class) in table.classes().iter().enumerate() {
        let order = powers.element_order(c);
        if !table.exponent().is_multiple_of(order) {
            failures.push(format!(
                "power maps: class '{}' has order {order} not dividing exponent {}",
                class.label,
                table.exponent()
            ));
        }
        for a in 1..order {
            let pc = powers.power(c, a);
            for b in 1..=order {
                if powers.power(pc, b) != powers.power(c, a * b) {
                    failures.push(format!(
                        "power maps: ({a} then {b}) differs from {} at class '{}'",
                        a * b,
                        class.label
                    ));
                }
            }
        }
    }
    failures.len() == before
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartable::{cyclic_table, symmetric_table, CharacterTable, Irrep};
    use crate::{Approx, Exact};
    use num_complex::Complex64;

    #[test]
    fn exact_symmetric_tables_have_zero_residual() {
        let report = validate(&symmetric_table::<Exact>(8).unwrap());
        assert!(report.passed, "{:?}", report.failures);
        assert_eq!(report.row_residual, 0.0);
        assert_eq!(report.column_residual, 0.0);
    }

    #[test]
    fn cyclic_twelve_is_within_tolerance() {
        let report = validate(&cyclic_table::<f64>(12));
        assert!(report.passed);
        assert!(report.row_residual < 1e-9 && report.column_residual < 1e-9);
    }

    #[test]
    fn perturbed_cell_is_named() {
        let t: CharacterTable<Approx> = cyclic_table(4);
        let mut irreps: Vec<Irrep<Approx>> = t.irreps().to_vec();
        irreps[2].values[3] += Complex64::new(0.1, 0.0);
        let bad = CharacterTable::new(
            "C4*",
            t.order().clone(),
            t.exponent(),
            t.classes().to_vec(),
            t.powers().clone(),
            irreps,
            t.tolerance(),
        )
        .unwrap();
        let report = validate(&bad);
        assert!(!report.passed);
        assert!(report
            .failures
            .iter()
            .any(|f| f == "suspect cell: irrep 'chi2' at class 'g3'"));
    }
}
