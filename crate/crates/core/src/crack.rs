//! Gelfand verdicts per level and the cracking-point search.
//!
//! A level `n` is a Gelfand pair iff every coefficient of every `M_π` is at
//! most 1. Each `π` goes through the cheapest applicable route: the
//! dimension-sum filter, then the tensor-multiplicity shortcut when the
//! stabilizer is trivial, then the full decomposition.

use std::fmt::Write as _;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::chartable::{is_real, CharacterTable};
use crate::error::{Error, Result};
use crate::json::biguint;
use crate::partitions::factorial;
use crate::scalar::{ClassScalar, DEFAULT_MULTIPLICITY_TOL};
use crate::wreath::{
    decompose_m_pi, dimension_filter, enumerate_pi, kron_multiplicity, stabilizer, Decomposition,
    IrrepTuple, PiMultiset,
};

/// π evaluated per parallel batch before checking for a witness.
const CHUNK: usize = 256;

#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Tolerance of the integer rounding rule.
    pub tol: f64,
    /// Keep scanning after the first witness.
    pub exhaustive: bool,
    /// Worker threads; 0 uses the global pool.
    pub workers: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            tol: DEFAULT_MULTIPLICITY_TOL,
            exhaustive: false,
            workers: 0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Gelfand,
    NotGelfand,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Gelfand => "gelfand",
            Verdict::NotGelfand => "not-gelfand",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub pi: Vec<String>,
    pub rho: Vec<String>,
    pub coeff: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    /// Multisets examined (all of them unless stopped at a witness).
    pub examined: usize,
    /// Decided by the dimension-sum filter.
    pub filter_hits: usize,
    /// Decided by the tensor-multiplicity shortcut.
    pub kron_shortcuts: usize,
    /// Needed the full decomposition.
    pub decomposed: usize,
    /// Multisets at this level.
    pub total: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GelfandReport {
    pub gamma: String,
    pub n: usize,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub counts: Counts,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrackReport {
    pub gamma: String,
    pub n_max: usize,
    /// First level that is not a Gelfand pair, if any up to `n_max`.
    pub cracking_point: Option<usize>,
    pub levels: Vec<GelfandReport>,
    pub warnings: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditRecord {
    pub gamma: String,
    pub n: usize,
    /// `Σ_π Σ_ρ a_ρ (n!/|S_π|) dim π dim ρ`.
    #[serde(serialize_with = "biguint")]
    pub induced_dimension: BigUint,
    /// `|Γ|^{n-1} = |G_n| / |K_n|`.
    #[serde(serialize_with = "biguint")]
    pub expected: BigUint,
    /// `Σ a_ρ²`, the dimension of the biinvariant algebra.
    pub square_sum: u64,
    pub passed: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Route {
    Filter,
    Kron,
    Full,
}

struct Outcome {
    route: Route,
    witness: Option<(IrrepTuple, u64)>,
}

fn examine<S: ClassScalar>(pi: &PiMultiset<'_, S>, tol: f64) -> Result<Outcome> {
    if dimension_filter(pi, tol)? {
        let d = decompose_m_pi(pi, tol)?;
        let (rho, a) = d.first_at_least(2).ok_or_else(|| {
            Error::Validation(format!(
                "π = {pi}: dimension filter fired but no coefficient reaches 2"
            ))
        })?;
        return Ok(Outcome {
            route: Route::Filter,
            witness: Some((rho.clone(), a)),
        });
    }
    let young = stabilizer(pi);
    let (&last, rest) = pi.labels().split_last().expect("π is nonempty");
    if young.is_trivial() && is_real(pi.gamma(), last) {
        let a = kron_multiplicity(pi.gamma(), rest, last, tol)?;
        let a = u64::try_from(a).map_err(|_| Error::NegativeCoefficient {
            value: a.to_string(),
            context: format!("tensor multiplicity for π = {pi}"),
        })?;
        return Ok(Outcome {
            route: Route::Kron,
            witness: (a >= 2).then(|| (young.trivial_irrep(), a)),
        });
    }
    let d = decompose_m_pi(pi, tol)?;
    Ok(Outcome {
        route: Route::Full,
        witness: d.first_at_least(2).map(|(rho, a)| (rho.clone(), a)),
    })
}

pub(crate) fn with_workers<R: Send>(workers: usize, f: impl FnOnce() -> R + Send) -> R {
    if workers == 0 {
        return f();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

/// Decides whether `(G_n, K_n)` is a Gelfand pair.
pub fn is_gelfand<S: ClassScalar>(
    gamma: &CharacterTable<S>,
    n: usize,
    opts: &SearchOptions,
) -> Result<GelfandReport> {
    let all = enumerate_pi(gamma, n)?;
    let mut counts = Counts {
        total: all.len(),
        ..Counts::default()
    };
    let mut witness = None;
    with_workers(opts.workers, || -> Result<()> {
        for chunk in all.chunks(CHUNK) {
            let outcomes: Vec<Result<Outcome>> =
                chunk.par_iter().map(|pi| examine(pi, opts.tol)).collect();
            for (pi, outcome) in chunk.iter().zip(outcomes) {
                let outcome = outcome?;
                counts.examined += 1;
                match outcome.route {
                    Route::Filter => counts.filter_hits += 1,
                    Route::Kron => counts.kron_shortcuts += 1,
                    Route::Full => counts.decomposed += 1,
                }
                if witness.is_none() {
                    if let Some((rho, a)) = outcome.witness {
                        witness = Some(Witness {
                            pi: pi.label_names(),
                            rho: rho.labels(),
                            coeff: a,
                        });
                    }
                }
                if witness.is_some() && !opts.exhaustive {
                    return Ok(());
                }
            }
        }
        Ok(())
    })?;
    Ok(GelfandReport {
        gamma: gamma.name().to_string(),
        n,
        verdict: if witness.is_some() {
            Verdict::NotGelfand
        } else {
            Verdict::Gelfand
        },
        witness,
        counts,
    })
}

/// Scans `n = 1..=n_max` and reports the first level that is not a Gelfand
/// pair.
pub fn cracking_point<S: ClassScalar>(
    gamma: &CharacterTable<S>,
    n_max: usize,
    opts: &SearchOptions,
) -> Result<CrackReport> {
    if n_max == 0 {
        return Err(Error::Invalid("n_max must be at least 1".into()));
    }
    let mut levels = Vec::new();
    let mut found = None;
    for n in 1..=n_max {
        let report = is_gelfand(gamma, n, opts)?;
        let cracked = report.verdict == Verdict::NotGelfand;
        levels.push(report);
        if cracked {
            found = Some(n);
            break;
        }
    }
    let mut warnings = Vec::new();
    if !gamma.is_abelian() {
        let order = gamma.order();
        match found {
            Some(n) if n < 3 || BigUint::from(n) > *order => warnings.push(format!(
                "cracking point {n} lies outside the range 3..=|Γ| = {order}"
            )),
            None if BigUint::from(n_max) >= *order => {
                warnings.push(format!("no crack up to n = {n_max} although |Γ| = {order}"))
            }
            _ => {}
        }
    } else if let Some(n) = found {
        warnings.push(format!("abelian group cracked at n = {n}"));
    }
    Ok(CrackReport {
        gamma: gamma.name().to_string(),
        n_max,
        cracking_point: found,
        levels,
        warnings,
    })
}

/// All decompositions at level `n`, in enumeration order.
pub fn decompose_all<'a, S: ClassScalar>(
    gamma: &'a CharacterTable<S>,
    n: usize,
    opts: &SearchOptions,
) -> Result<Vec<(PiMultiset<'a, S>, Decomposition)>> {
    let all = enumerate_pi(gamma, n)?;
    let decomps = with_workers(opts.workers, || {
        all.par_iter()
            .map(|pi| decompose_m_pi(pi, opts.tol))
            .collect::<Result<Vec<_>>>()
    })?;
    Ok(all.into_iter().zip(decomps).collect())
}

/// Checks that the induced representations account for all of
/// `L(G_n / K_n)`.
pub fn dimension_audit<S: ClassScalar>(
    gamma: &CharacterTable<S>,
    n: usize,
    opts: &SearchOptions,
) -> Result<AuditRecord> {
    let n_fact = factorial(n);
    let mut total = BigUint::default();
    let mut square_sum = 0;
    for (pi, d) in decompose_all(gamma, n, opts)? {
        let index = &n_fact / d.young.order();
        total += index * pi.dimension() * d.weighted_dimension();
        square_sum += d.square_sum();
    }
    let expected = gamma.order().pow(n as u32 - 1);
    Ok(AuditRecord {
        gamma: gamma.name().to_string(),
        n,
        passed: total == expected,
        induced_dimension: total,
        expected,
        square_sum,
    })
}

impl GelfandReport {
    pub fn witness_text(&self) -> String {
        match &self.witness {
            Some(w) => format!(
                "π = ({}), ρ = [{}], a = {}",
                w.pi.join(", "),
                w.rho.join(" | "),
                w.coeff
            ),
            None => "-".to_string(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let c = &self.counts;
        let _ = writeln!(out, "group     {}", self.gamma);
        let _ = writeln!(out, "n         {}", self.n);
        let _ = writeln!(out, "verdict   {}", self.verdict.as_str());
        let _ = writeln!(out, "witness   {}", self.witness_text());
        let _ = writeln!(
            out,
            "counts    examined {} of {}, filter {}, kron {}, decomposed {}",
            c.examined, c.total, c.filter_hits, c.kron_shortcuts, c.decomposed
        );
        out
    }
}

impl CrackReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "group {}  n_max {}", self.gamma, self.n_max);
        let _ = writeln!(
            out,
            "{:>3}  {:<12} {:>9} {:>7} {:>7} {:>10}  witness",
            "n", "verdict", "examined", "filter", "kron", "decomposed"
        );
        for level in &self.levels {
            let c = &level.counts;
            let _ = writeln!(
                out,
                "{:>3}  {:<12} {:>9} {:>7} {:>7} {:>10}  {}",
                level.n,
                level.verdict.as_str(),
                c.examined,
                c.filter_hits,
                c.kron_shortcuts,
                c.decomposed,
                level.witness_text()
            );
        }
        match self.cracking_point {
            Some(n) => {
                let _ = writeln!(out, "N={n}");
            }
            None => {
                let _ = writeln!(out, "no crack found up to {}", self.n_max);
            }
        }
        for w in &self.warnings {
            let _ = writeln!(out, "warning: {w}");
        }
        out
    }
}

impl AuditRecord {
    pub fn to_text(&self) -> String {
        format!(
            "audit {} n={}: induced {} vs |Γ|^(n-1) {} ({}); Σa² = {}\n",
            self.gamma,
            self.n,
            self.induced_dimension,
            self.expected,
            if self.passed { "pass" } else { "FAIL" },
            self.square_sum
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartable::{cyclic_table, symmetric_table};
    use crate::{Approx, Exact};

    fn sym(k: usize) -> CharacterTable<Exact> {
        symmetric_table(k).unwrap()
    }

    #[test]
    fn s5_levels() {
        let t = sym(5);
        let opts = SearchOptions::default();
        assert_eq!(is_gelfand(&t, 2, &opts).unwrap().verdict, Verdict::Gelfand);
        let r = is_gelfand(&t, 3, &opts).unwrap();
        assert_eq!(r.verdict, Verdict::NotGelfand);
        let w = r.witness.unwrap();
        assert_eq!(w.pi, vec!["3.2", "3.1.1", "3.1.1"]);
        assert_eq!(w.rho, vec!["1", "2"]);
        assert_eq!(w.coeff, 2);
    }

    #[test]
    fn abelian_group_stays_gelfand() {
        let c2: CharacterTable<Approx> = cyclic_table(2);
        let r = is_gelfand(&c2, 3, &SearchOptions::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Gelfand);
        assert!(r.witness.is_none());
        assert_eq!(r.counts.examined, r.counts.total);
        let c3: CharacterTable<Approx> = cyclic_table(3);
        let crack = cracking_point(&c3, 4, &SearchOptions::default()).unwrap();
        assert_eq!(crack.cracking_point, None);
        assert!(crack.to_text().contains("no crack found up to 4"));
    }

    #[test]
    fn s4_cracks_at_four() {
        let crack = cracking_point(&sym(4), 5, &SearchOptions::default()).unwrap();
        assert_eq!(crack.cracking_point, Some(4));
        assert!(crack.warnings.is_empty());
        assert!(crack.levels[..3]
            .iter()
            .all(|l| l.verdict == Verdict::Gelfand));
    }

    #[test]
    fn audits() {
        let opts = SearchOptions::default();
        for (n, expected) in [(2usize, 6u32), (3, 36)] {
            let a = dimension_audit(&sym(3), n, &opts).unwrap();
            assert!(a.passed);
            assert_eq!(a.expected, BigUint::from(expected));
        }
        let c2: CharacterTable<Approx> = cyclic_table(2);
        let a = dimension_audit(&c2, 3, &opts).unwrap();
        assert!(a.passed);
        assert_eq!(a.expected, BigUint::from(4u32));
    }

    #[test]
    fn exhaustive_scans_everything() {
        let t = sym(5);
        let opts = SearchOptions {
            exhaustive: true,
            ..SearchOptions::default()
        };
        let r = is_gelfand(&t, 3, &opts).unwrap();
        assert_eq!(r.counts.examined, r.counts.total);
        assert_eq!(r.witness.unwrap().pi, vec!["3.2", "3.1.1", "3.1.1"]);
    }

    #[test]
    fn reports_do_not_depend_on_workers() {
        let t = sym(4);
        let base = SearchOptions::default();
        let one = cracking_point(
            &t,
            4,
            &SearchOptions {
                workers: 1,
                ..base.clone()
            },
        )
        .unwrap();
        let four = cracking_point(&t, 4, &SearchOptions { workers: 4, ..base }).unwrap();
        assert_eq!(one, four);
        assert_eq!(
            serde_json::to_string(&one).unwrap(),
            serde_json::to_string(&four).unwrap()
        );
    }
}
