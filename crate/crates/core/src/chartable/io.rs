//! JSON character-table documents.
//!
//! ```json
//! {
//!   "name": "C2", "order": 2, "exponent": 2, "backend": "approx",
//!   "classes": [{"label": "g0", "size": 1}, {"label": "g1", "size": 1}],
//!   "power_maps": {"2": [0, 0]},
//!   "irreps": [{"label": "chi0", "values": [1, 1]},
//!              {"label": "chi1", "values": [1, [-1.0, 0.0]]}]
//! }
//! ```
//!
//! `power_maps` lists the class of `x^m` for every `m` in `2..=exponent`.
//! Exact documents accept only JSON integers as values.

use num_bigint::BigUint;
use serde::Deserialize;
use serde_json::{json, Map, Value};

use super::{validate, Backend, CharacterTable, ClassInfo, Irrep, PowerMaps};
use crate::error::{Error, Result};
use crate::scalar::{ClassScalar, DEFAULT_TABLE_TOL};
use crate::{Approx, Exact};

/// Upper bound on the exponent of a loaded table; keeps `power_maps` small.
const EXPONENT_CAP: u64 = 1 << 20;

/// A table in whichever backend its document selected.
#[derive(Clone, Debug)]
pub enum AnyTable {
    Exact(CharacterTable<Exact>),
    Approx(CharacterTable<Approx>),
}

impl AnyTable {
    pub fn name(&self) -> &str {
        match self {
            AnyTable::Exact(t) => t.name(),
            AnyTable::Approx(t) => t.name(),
        }
    }

    pub fn backend(&self) -> Backend {
        match self {
            AnyTable::Exact(_) => Backend::Exact,
            AnyTable::Approx(_) => Backend::Approx,
        }
    }
}

impl From<CharacterTable<Exact>> for AnyTable {
    fn from(t: CharacterTable<Exact>) -> Self {
        AnyTable::Exact(t)
    }
}

impl From<CharacterTable<Approx>> for AnyTable {
    fn from(t: CharacterTable<Approx>) -> Self {
        AnyTable::Approx(t)
    }
}

#[derive(Deserialize)]
struct Document {
    name: String,
    order: u64,
    exponent: u64,
    backend: String,
    classes: Vec<ClassDoc>,
    power_maps: Map<String, Value>,
    irreps: Vec<IrrepDoc>,
}

#[derive(Deserialize)]
struct ClassDoc {
    label: String,
    size: u64,
}

#[derive(Deserialize)]
struct IrrepDoc {
    label: String,
    values: Vec<Value>,
}

/// Parses and validates a table document; the backend follows its
/// `"backend"` field.
pub fn load_table(document: &str) -> Result<AnyTable> {
    let table = parse_table(document)?;
    match &table {
        AnyTable::Exact(t) => checked(t)?,
        AnyTable::Approx(t) => checked(t)?,
    }
    Ok(table)
}

/// Like [`load_table`] but skips [`validate`], so a malformed table can
/// still be inspected.
pub fn parse_table(document: &str) -> Result<AnyTable> {
    let doc: Document = serde_json::from_str(document).map_err(|e| Error::Parse(e.to_string()))?;
    match doc.backend.as_str() {
        "exact" => build::<Exact>(doc).map(AnyTable::Exact),
        "approx" => build::<Approx>(doc).map(AnyTable::Approx),
        other => Err(Error::Parse(format!("unknown backend {other:?}"))),
    }
}

/// Parses a document into a specific scalar backend, ignoring its flag except
/// that exact scalars still require integral values.
pub fn load_table_as<S: ClassScalar>(document: &str) -> Result<CharacterTable<S>> {
    let doc: Document = serde_json::from_str(document).map_err(|e| Error::Parse(e.to_string()))?;
    let table = build(doc)?;
    checked(&table)?;
    Ok(table)
}

fn checked<S: ClassScalar>(table: &CharacterTable<S>) -> Result<()> {
    let report = validate(table);
    if !report.passed {
        return Err(Error::Validation(report.failures.join("; ")));
    }
    Ok(())
}

fn build<S: ClassScalar>(doc: Document) -> Result<CharacterTable<S>> {
    let n = doc.classes.len();
    if n == 0 {
        return Err(Error::Parse("no classes".into()));
    }
    if doc.exponent == 0 || doc.exponent > EXPONENT_CAP {
        return Err(Error::Parse(format!(
            "exponent {} out of range",
            doc.exponent
        )));
    }
    let classes: Vec<ClassInfo> = doc
        .classes
        .iter()
        .map(|c| ClassInfo {
            label: c.label.clone(),
            size: BigUint::from(c.size),
        })
        .collect();
    let maps = parse_power_maps(&doc.power_maps, doc.exponent, n)?;
    let orbits = orbits_from_maps(&maps, &classes, doc.exponent)?;

    let irreps = doc
        .irreps
        .iter()
        .map(|r| {
            if r.values.len() != n {
                return Err(Error::Parse(format!(
                    "irrep '{}' has {} values for {n} classes",
                    r.label,
                    r.values.len()
                )));
            }
            let values = r
                .values
                .iter()
                .enumerate()
                .map(|(c, v)| {
                    parse_value::<S>(v).ok_or_else(|| {
                        Error::Parse(format!(
                            "irrep '{}' class '{}': bad {} value {v}",
                            r.label,
                            classes[c].label,
                            if S::EXACT { "exact" } else { "approx" }
                        ))
                    })
                })
                .collect::<Result<Vec<S>>>()?;
            Ok(Irrep {
                label: r.label.clone(),
                values,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    CharacterTable::new(
        doc.name,
        BigUint::from(doc.order),
        doc.exponent,
        classes,
        PowerMaps::from_orbits(orbits),
        irreps,
        DEFAULT_TABLE_TOL,
    )
}

fn parse_value<S: ClassScalar>(v: &Value) -> Option<S> {
    if S::EXACT {
        return v.as_i64().map(S::from_i64);
    }
    match v {
        Value::Number(x) => S::from_parts(x.as_f64()?, 0.0),
        Value::Array(pair) if pair.len() == 2 => {
            S::from_parts(pair[0].as_f64()?, pair[1].as_f64()?)
        }
        _ => None,
    }
}

fn parse_power_maps(raw: &Map<String, Value>, exponent: u64, n: usize) -> Result<Vec<Vec<usize>>> {
    let mut maps = vec![Vec::new(); exponent as usize + 1];
    for (key, value) in raw {
        let m: u64 = key
            .parse()
            .map_err(|_| Error::Parse(format!("power map key {key:?} is not an integer")))?;
        if m < 2 || m > exponent {
            return Err(Error::Parse(format!(
                "power map key {m} outside 2..={exponent}"
            )));
        }
        let entries = value
            .as_array()
            .ok_or_else(|| Error::Parse(format!("power map {m} is not an array")))?;
        if entries.len() != n {
            return Err(Error::Parse(format!(
                "power map {m} has {} entries for {n} classes",
                entries.len()
            )));
        }
        maps[m as usize] = entries
            .iter()
            .map(|e| {
                e.as_u64()
                    .map(|x| x as usize)
                    .filter(|&x| x < n)
                    .ok_or_else(|| Error::Parse(format!("power map {m}: bad class index {e}")))
            })
            .collect::<Result<_>>()?;
    }
    if let Some(m) = (2..=exponent).find(|&m| maps[m as usize].is_empty()) {
        return Err(Error::Parse(format!("power map {m} missing")));
    }
    Ok(maps)
}

/// Converts `power_maps[m]` into per-class orbits, checking that each class
/// returns to the identity and that every map agrees with its orbit.
fn orbits_from_maps(
    maps: &[Vec<usize>],
    classes: &[ClassInfo],
    exponent: u64,
) -> Result<Vec<Vec<usize>>> {
    let power = |c: usize, m: u64| -> usize {
        match m {
            0 => 0,
            1 => c,
            _ => maps[m as usize][c],
        }
    };
    let mut orbits = Vec::with_capacity(classes.len());
    for (c, class) in classes.iter().enumerate() {
        let order = (1..=exponent).find(|&m| power(c, m) == 0).ok_or_else(|| {
            Error::Validation(format!(
                "power maps: class '{}' never reaches the identity by exponent {exponent}",
                class.label
            ))
        })?;
        let orbit: Vec<usize> = (0..order).map(|j| power(c, j)).collect();
        for m in 2..=exponent {
            if power(c, m) != orbit[(m % order) as usize] {
                return Err(Error::Validation(format!(
                    "power maps: map {m} at class '{}' is inconsistent with its order {order}",
                    class.label
                )));
            }
        }
        orbits.push(orbit);
    }
    Ok(orbits)
}

fn render_value<S: ClassScalar>(v: &S) -> Value {
    if S::EXACT {
        json!(v.nearest_integer().map(|(n, _)| n).unwrap_or_default())
    } else if v.im() == 0.0 && v.re().fract() == 0.0 && v.re().abs() < 1e15 {
        json!(v.re() as i64)
    } else {
        json!([v.re(), v.im()])
    }
}

/// Renders a table as a JSON document that [`load_table`] reads back.
pub fn render_table<S: ClassScalar>(table: &CharacterTable<S>) -> Result<String> {
    let to_u64 = |v: &BigUint, what: &str| {
        u64::try_from(v.clone())
            .map_err(|_| Error::size_limit("renderable integer", format!("{what} = {v}"), u64::MAX))
    };
    let classes = table
        .classes()
        .iter()
        .map(|c| Ok(json!({"label": c.label, "size": to_u64(&c.size, "class size")?})))
        .collect::<Result<Vec<_>>>()?;
    if table.exponent() > EXPONENT_CAP {
        return Err(Error::size_limit(
            "exponent",
            table.exponent(),
            EXPONENT_CAP,
        ));
    }
    let mut maps = Map::new();
    for m in 2..=table.exponent() {
        maps.insert(m.to_string(), json!(table.powers().map(m)));
    }
    let irreps: Vec<Value> = table
        .irreps()
        .iter()
        .map(|r| {
            json!({
                "label": r.label,
                "values": r.values.iter().map(render_value).collect::<Vec<_>>(),
            })
        })
        .collect();
    let doc = json!({
        "name": table.name(),
        "order": to_u64(table.order(), "order")?,
        "exponent": table.exponent(),
        "backend": table.backend().as_str(),
        "classes": classes,
        "power_maps": maps,
        "irreps": irreps,
    });
    Ok(serde_json::to_string_pretty(&doc).expect("json values serialize"))
}
