//! Brute-force ground truth on explicit groups.
//!
//! The wreath product is built element by element, its `K`-double cosets are
//! enumerated, and commutativity of the biinvariant convolution algebra is
//! checked with integer counts. None of this touches character tables.

use std::collections::HashMap;
use std::fmt;
use std::fmt::Write as _;

use rand::Rng;
use serde::Serialize;

use crate::chartable::{cyclic_table, symmetric_table, CharacterTable};
use crate::crack::{dimension_audit, is_gelfand, SearchOptions, Verdict};
use crate::error::{Error, Result};
use crate::{Approx, Exact};

/// Largest explicit `|G|`.
pub const GROUP_ORDER_CAP: usize = 20_000;
/// Largest double-coset count for the pairwise convolution check.
pub const DOUBLE_COSET_CAP: usize = 64;

/// Base groups small enough for the explicit construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase", tag = "kind", content = "degree")]
pub enum SmallGroup {
    Symmetric(usize),
    Cyclic(usize),
}

impl SmallGroup {
    pub fn new_symmetric(k: usize) -> Result<Self> {
        if !(1..=3).contains(&k) {
            return Err(Error::size_limit("oracle symmetric degree", k, 3));
        }
        Ok(SmallGroup::Symmetric(k))
    }

    pub fn new_cyclic(m: usize) -> Result<Self> {
        if !(1..=4).contains(&m) {
            return Err(Error::size_limit("oracle cyclic order", m, 4));
        }
        Ok(SmallGroup::Cyclic(m))
    }

    pub fn order(self) -> usize {
        match self {
            SmallGroup::Symmetric(k) => (1..=k).product(),
            SmallGroup::Cyclic(m) => m,
        }
    }

    fn base(self) -> BaseGroup {
        match self {
            SmallGroup::Symmetric(k) => BaseGroup::symmetric(k),
            SmallGroup::Cyclic(m) => BaseGroup::cyclic(m),
        }
    }
}

impl fmt::Display for SmallGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SmallGroup::Symmetric(k) => write!(f, "S{k}"),
            SmallGroup::Cyclic(m) => write!(f, "C{m}"),
        }
    }
}

/// A finite group given by its multiplication table.
#[derive(Clone, Debug)]
struct BaseGroup {
    mul: Vec<Vec<usize>>,
}

impl BaseGroup {
    fn symmetric(k: usize) -> Self {
        let perms = permutations(k);
        let index: HashMap<Vec<usize>, usize> = perms
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let mul = perms
            .iter()
            .map(|g| perms.iter().map(|h| index[&compose(g, h)]).collect())
            .collect();
        BaseGroup { mul }
    }

    fn cyclic(m: usize) -> Self {
        let mul = (0..m)
            .map(|a| (0..m).map(|b| (a + b) % m).collect())
            .collect();
        BaseGroup { mul }
    }

    fn order(&self) -> usize {
        self.mul.len()
    }
}

/// All permutations of `0..k` in lexicographic order of one-line notation.
fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                extend(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::with_capacity(k), &mut vec![false; k], &mut out);
    out
}

/// `(gh)(i) = g(h(i))`.
fn compose(g: &[usize], h: &[usize]) -> Vec<usize> {
    h.iter().map(|&i| g[i]).collect()
}

fn invert(g: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; g.len()];
    for (i, &gi) in g.iter().enumerate() {
        inv[gi] = i;
    }
    inv
}

/// `(a, s)` with `a ∈ Γ^n` and `s ∈ S_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WreathElement {
    pub gamma_tuple: Vec<usize>,
    pub perm: Vec<usize>,
}

/// `Γ ≀ S_n` with elements indexed lexicographically on (γ-tuple, permutation).
#[derive(Clone, Debug)]
pub struct ExplicitGroup {
    name: String,
    base: BaseGroup,
    n: usize,
    perms: Vec<Vec<usize>>,
    perm_mul: Vec<Vec<usize>>,
    perm_inv: Vec<usize>,
    perm_index: HashMap<Vec<usize>, usize>,
    base_inv: Vec<usize>,
    order: usize,
}

impl ExplicitGroup {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn element(&self, index: usize) -> WreathElement {
        let np = self.perms.len();
        let mut code = index / np;
        let mut gamma_tuple = vec![0; self.n];
        for slot in gamma_tuple.iter_mut().rev() {
            *slot = code % self.base.order();
            code /= self.base.order();
        }
        WreathElement {
            gamma_tuple,
            perm: self.perms[index % np].clone(),
        }
    }

    pub fn index_of(&self, x: &WreathElement) -> Option<usize> {
        let g = self.base.order();
        if x.gamma_tuple.len() != self.n || x.gamma_tuple.iter().any(|&a| a >= g) {
            return None;
        }
        let code = x.gamma_tuple.iter().fold(0, |acc, &a| acc * g + a);
        Some(code * self.perms.len() + *self.perm_index.get(&x.perm)?)
    }

    fn split(&self, index: usize) -> (usize, usize) {
        (index / self.perms.len(), index % self.perms.len())
    }

    fn digits(&self, mut code: usize) -> Vec<usize> {
        let g = self.base.order();
        let mut out = vec![0; self.n];
        for slot in out.iter_mut().rev() {
            *slot = code % g;
            code /= g;
        }
        out
    }

    /// `(a, s)(b, t) = (a · s(b), st)` with `s(b)_i = b_{s⁻¹(i)}`.
    pub fn multiply(&self, x: usize, y: usize) -> usize {
        let (xa, xs) = self.split(x);
        let (yb, yt) = self.split(y);
        let a = self.digits(xa);
        let b = self.digits(yb);
        let s_inv = &self.perms[self.perm_inv[xs]];
        let g = self.base.order();
        let code = (0..self.n).fold(0, |acc, i| acc * g + self.base.mul[a[i]][b[s_inv[i]]]);
        code * self.perms.len() + self.perm_mul[xs][yt]
    }

    /// `(a, s)⁻¹ = (s⁻¹(a⁻¹), s⁻¹)`.
    pub fn inverse(&self, x: usize) -> usize {
        let (xa, xs) = self.split(x);
        let a = self.digits(xa);
        let s = &self.perms[xs];
        let g = self.base.order();
        let code = (0..self.n).fold(0, |acc, i| acc * g + self.base_inv[a[s[i]]]);
        code * self.perms.len() + self.perm_inv[xs]
    }

    /// Identity and inverse laws on every element; associativity on
    /// `samples` random triples.
    pub fn check_axioms(&self, rng: &mut impl Rng, samples: usize) -> Result<()> {
        let e = self.identity();
        for x in 0..self.order {
            if self.multiply(e, x) != x || self.multiply(x, e) != x {
                return Err(Error::Validation(format!(
                    "identity law fails at element {x}"
                )));
            }
            let xi = self.inverse(x);
            if self.multiply(x, xi) != e || self.multiply(xi, x) != e {
                return Err(Error::Validation(format!(
                    "inverse law fails at element {x}"
                )));
            }
        }
        for _ in 0..samples {
            let (x, y, z) = (
                rng.random_range(0..self.order),
                rng.random_range(0..self.order),
                rng.random_range(0..self.order),
            );
            let left = self.multiply(self.multiply(x, y), z);
            let right = self.multiply(x, self.multiply(y, z));
            if left != right {
                return Err(Error::Validation(format!(
                    "associativity fails at ({x}, {y}, {z})"
                )));
            }
        }
        Ok(())
    }
}

/// Builds `G_n = Γ ≀ S_n` and the index set of `K_n = Δ_n × S_n`.
pub fn build_wreath(gamma: SmallGroup, n: usize) -> Result<(ExplicitGroup, Vec<usize>)> {
    if !(1..=3).contains(&n) {
        return Err(Error::size_limit("oracle level n", n, 3));
    }
    let base = gamma.base();
    let g = base.order();
    let perms = permutations(n);
    let order = g.pow(n as u32) * perms.len();
    if order > GROUP_ORDER_CAP {
        return Err(Error::size_limit(
            "explicit group order",
            order,
            GROUP_ORDER_CAP,
        ));
    }
    let perm_index: HashMap<Vec<usize>, usize> = perms
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    let perm_mul = perms
        .iter()
        .map(|s| perms.iter().map(|t| perm_index[&compose(s, t)]).collect())
        .collect();
    let perm_inv = perms.iter().map(|s| perm_index[&invert(s)]).collect();
    let base_inv = (0..g)
        .map(|a| {
            (0..g)
                .find(|&b| base.mul[a][b] == 0)
                .expect("group has inverses")
        })
        .collect();
    let group = ExplicitGroup {
        name: format!("{gamma} wr S{n}"),
        base,
        n,
        perms,
        perm_mul,
        perm_inv,
        perm_index,
        base_inv,
        order,
    };
    let k = (0..g)
        .flat_map(|a| {
            let group = &group;
            (0..group.perms.len()).map(move |p| {
                let code = (0..n).fold(0, |acc, _| acc * g + a);
                code * group.perms.len() + p
            })
        })
        .collect();
    Ok((group, k))
}

/// The `K`-double cosets of `G`, each listed in increasing index order and
/// ordered by smallest element.
pub fn double_cosets(group: &ExplicitGroup, k: &[usize]) -> Vec<Vec<usize>> {
    let mut block = vec![usize::MAX; group.order()];
    let mut out: Vec<Vec<usize>> = Vec::new();
    for x in 0..group.order() {
        if block[x] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut members = Vec::new();
        for &k1 in k {
            let k1x = group.multiply(k1, x);
            for &k2 in k {
                let y = group.multiply(k1x, k2);
                if block[y] == usize::MAX {
                    block[y] = id;
                    members.push(y);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

/// A point where `f_i ⋆ f_j` and `f_j ⋆ f_i` differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub i: usize,
    pub j: usize,
    pub x: usize,
    /// `|G| · (f_i ⋆ f_j)(x)`.
    pub left: u64,
    /// `|G| · (f_j ⋆ f_i)(x)`.
    pub right: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Commutativity {
    pub double_cosets: usize,
    pub commutes: bool,
    pub counterexample: Option<Counterexample>,
}

/// Checks `f_i ⋆ f_j = f_j ⋆ f_i` at every point for all double-coset
/// indicators. The first failure is the smallest `x`, then `(i, j)`.
pub fn convolution_commutes(group: &ExplicitGroup, k: &[usize]) -> Result<Commutativity> {
    let blocks = double_cosets(group, k);
    let b = blocks.len();
    if b > DOUBLE_COSET_CAP {
        return Err(Error::size_limit("double-coset count", b, DOUBLE_COSET_CAP));
    }
    let mut block_of = vec![0; group.order()];
    for (id, members) in blocks.iter().enumerate() {
        for &y in members {
            block_of[y] = id;
        }
    }
    let inverses: Vec<usize> = (0..group.order()).map(|y| group.inverse(y)).collect();
    let mut counts = vec![0u64; b * b];
    for x in 0..group.order() {
        counts.iter_mut().for_each(|c| *c = 0);
        // counts[i][j] = #{y ∈ D_j : x y⁻¹ ∈ D_i}
        for (y, &y_inv) in inverses.iter().enumerate() {
            counts[block_of[group.multiply(x, y_inv)] * b + block_of[y]] += 1;
        }
        for i in 0..b {
            for j in i + 1..b {
                let (left, right) = (counts[i * b + j], counts[j * b + i]);
                if left != right {
                    return Ok(Commutativity {
                        double_cosets: b,
                        commutes: false,
                        counterexample: Some(Counterexample {
                            i,
                            j,
                            x,
                            left,
                            right,
                        }),
                    });
                }
            }
        }
    }
    Ok(Commutativity {
        double_cosets: b,
        commutes: true,
        counterexample: None,
    })
}

type Matrix = Vec<Vec<i64>>;

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = b[0].len();
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| row.iter().zip(b).map(|(x, brow)| x * brow[j]).sum())
                .collect()
        })
        .collect()
}

fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    let (p, q) = (b.len(), b[0].len());
    let mut out = vec![vec![0; a[0].len() * q]; a.len() * p];
    for (i, arow) in a.iter().enumerate() {
        for (j, &x) in arow.iter().enumerate() {
            for (r, brow) in b.iter().enumerate() {
                for (c, &y) in brow.iter().enumerate() {
                    out[i * p + r][j * q + c] = x * y;
                }
            }
        }
    }
    out
}

fn trace(a: &Matrix) -> i64 {
    (0..a.len()).map(|i| a[i][i]).sum()
}

fn mat_pow(a: &Matrix, e: usize) -> Matrix {
    (1..e).fold(a.clone(), |acc, _| mat_mul(&acc, a))
}

/// The operator sending `v_1 ⊗ … ⊗ v_n` to the tensor with `v_i` in slot
/// `σ(i)`.
fn factor_permutation(sigma: &[usize], dims: &[usize]) -> Matrix {
    let total: usize = dims.iter().product();
    let mut out = vec![vec![0; total]; total];
    let strides = |d: &[usize]| -> Vec<usize> {
        let mut s = vec![1; d.len()];
        for i in (0..d.len().saturating_sub(1)).rev() {
            s[i] = s[i + 1] * d[i + 1];
        }
        s
    };
    let src_strides = strides(dims);
    let mut dst_dims = vec![0; dims.len()];
    for (i, &d) in dims.iter().enumerate() {
        dst_dims[sigma[i]] = d;
    }
    let dst_strides = strides(&dst_dims);
    let rows = (0..total).map(|col| {
        let mut rest = col;
        let mut row = 0;
        for i in 0..dims.len() {
            let digit = rest / src_strides[i];
            rest %= src_strides[i];
            row += digit * dst_strides[sigma[i]];
        }
        row
    });
    for (col, row) in rows.enumerate() {
        out[row][col] = 1;
    }
    out
}

fn cycles(sigma: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; sigma.len()];
    let mut out = Vec::new();
    for start in 0..sigma.len() {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cycle.push(i);
            i = sigma[i];
        }
        out.push(cycle);
    }
    out
}

/// Representations of `S_3` with integer matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TestRep {
    /// Degree-3 permutation matrices.
    Permutation,
    Sign,
}

impl TestRep {
    fn matrix(self, g: &[usize]) -> Matrix {
        match self {
            TestRep::Permutation => {
                let mut m = vec![vec![0; g.len()]; g.len()];
                for (i, &gi) in g.iter().enumerate() {
                    m[gi][i] = 1;
                }
                m
            }
            TestRep::Sign => {
                let odd = cycles(g).iter().filter(|c| c.len() % 2 == 0).count() % 2 == 1;
                vec![vec![if odd { -1 } else { 1 }]]
            }
        }
    }

    fn dimension(self) -> usize {
        match self {
            TestRep::Permutation => 3,
            TestRep::Sign => 1,
        }
    }
}

/// One failed comparison from [`wreath_char_check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharMismatch {
    pub sigma: Vec<usize>,
    pub reps: Vec<TestRep>,
    pub gamma: Vec<usize>,
    pub trace: i64,
    pub cycle_product: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharCheck {
    pub n: usize,
    pub comparisons: usize,
    pub mismatch: Option<CharMismatch>,
}

impl CharCheck {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

/// For random diagonal `δ = (γ, …, γ)` and every `σ ∈ S_n`, compares
/// `trace((A_1(γ) ⊗ … ⊗ A_n(γ)) · P_σ)` with `∏_cycles trace(A_c(γ)^{|c|})`.
/// Every assignment of test representations constant on the cycles of `σ`
/// is tried.
pub fn wreath_char_check(n: usize, trials: usize, rng: &mut impl Rng) -> Result<CharCheck> {
    if !(1..=3).contains(&n) {
        return Err(Error::size_limit("character check level n", n, 3));
    }
    if trials == 0 {
        return Err(Error::Invalid("trials must be positive".into()));
    }
    let s3 = permutations(3);
    let reps = [TestRep::Permutation, TestRep::Sign];
    let mut comparisons = 0;
    for _ in 0..trials {
        let gamma = &s3[rng.random_range(0..s3.len())];
        for sigma in permutations(n) {
            let cyc = cycles(&sigma);
            for choice in 0..reps.len().pow(cyc.len() as u32) {
                let mut assignment = vec![TestRep::Sign; n];
                let mut code = choice;
                for c in &cyc {
                    let r = reps[code % reps.len()];
                    code /= reps.len();
                    for &i in c {
                        assignment[i] = r;
                    }
                }
                let dims: Vec<usize> = assignment.iter().map(|r| r.dimension()).collect();
                let tensor = assignment
                    .iter()
                    .map(|r| r.matrix(gamma))
                    .reduce(|acc, m| kron(&acc, &m))
                    .expect("n >= 1");
                let lhs = trace(&mat_mul(&tensor, &factor_permutation(&sigma, &dims)));
                let rhs: i64 = cyc
                    .iter()
                    .map(|c| trace(&mat_pow(&assignment[c[0]].matrix(gamma), c.len())))
                    .product();
                comparisons += 1;
                if lhs != rhs {
                    return Ok(CharCheck {
                        n,
                        comparisons,
                        mismatch: Some(CharMismatch {
                            sigma,
                            reps: assignment,
                            gamma: gamma.clone(),
                            trace: lhs,
                            cycle_product: rhs,
                        }),
                    });
                }
            }
        }
    }
    Ok(CharCheck {
        n,
        comparisons,
        mismatch: None,
    })
}

/// Brute-force verdict next to the character-theoretic one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub gamma: String,
    pub n: usize,
    pub group_order: usize,
    pub subgroup_order: usize,
    pub double_cosets: usize,
    pub commutes: bool,
    pub counterexample: Option<Counterexample>,
    pub verdict: Verdict,
    /// `Σ a²` over all `(π, ρ)`.
    pub square_sum: u64,
    pub agree: bool,
}

impl OracleReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "group          {} wr S{}", self.gamma, self.n);
        let _ = writeln!(
            out,
            "|G|, |K|       {}, {}",
            self.group_order, self.subgroup_order
        );
        let _ = writeln!(
            out,
            "double cosets  {} (Σa² = {})",
            self.double_cosets, self.square_sum
        );
        let _ = writeln!(
            out,
            "convolution    {}",
            if self.commutes {
                "commutative"
            } else {
                "noncommutative"
            }
        );
        if let Some(c) = &self.counterexample {
            let _ = writeln!(
                out,
                "counterexample i={} j={} x={}: {} vs {}",
                c.i, c.j, c.x, c.left, c.right
            );
        }
        let _ = writeln!(out, "verdict        {}", self.verdict.as_str());
        let _ = writeln!(
            out,
            "agree          {}",
            if self.agree { "yes" } else { "NO" }
        );
        out
    }
}

/// Runs the brute-force check and the character-theoretic engine on the
/// same `(Γ, n)`.
pub fn cross_check(gamma: SmallGroup, n: usize, opts: &SearchOptions) -> Result<OracleReport> {
    let (group, k) = build_wreath(gamma, n)?;
    let conv = convolution_commutes(&group, &k)?;
    let (verdict, square_sum) = match gamma {
        SmallGroup::Symmetric(d) => {
            let t = symmetric_table::<Exact>(d)?;
            (
                is_gelfand(&t, n, opts)?.verdict,
                dimension_audit(&t, n, opts)?.square_sum,
            )
        }
        SmallGroup::Cyclic(m) => {
            let t: CharacterTable<Approx> = cyclic_table(m as u64);
            (
                is_gelfand(&t, n, opts)?.verdict,
                dimension_audit(&t, n, opts)?.square_sum,
            )
        }
    };
    let agree =
        conv.commutes == (verdict == Verdict::Gelfand) && conv.double_cosets as u64 == square_sum;
    Ok(OracleReport {
        gamma: gamma.to_string(),
        n,
        group_order: group.order(),
        subgroup_order: k.len(),
        double_cosets: conv.double_cosets,
        commutes: conv.commutes,
        counterexample: conv.counterexample,
        verdict,
        square_sum,
        agree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn sizes() {
        for (gamma, n, g, k) in [
            (SmallGroup::Symmetric(3), 2, 72, 12),
            (SmallGroup::Cyclic(2), 3, 48, 12),
            (SmallGroup::Symmetric(3), 3, 1296, 36),
        ] {
            let (group, sub) = build_wreath(gamma, n).unwrap();
            assert_eq!((group.order(), sub.len()), (g, k));
        }
    }

    #[test]
    fn axioms_hold() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for gamma in [SmallGroup::Symmetric(3), SmallGroup::Cyclic(4)] {
            let (group, _) = build_wreath(gamma, 3).unwrap();
            group.check_axioms(&mut rng, 500).unwrap();
        }
    }

    #[test]
    fn indexing_round_trips() {
        let (group, _) = build_wreath(SmallGroup::Symmetric(3), 2).unwrap();
        for x in 0..group.order() {
            assert_eq!(group.index_of(&group.element(x)), Some(x));
        }
    }

    #[test]
    fn extreme_subgroups() {
        let (group, k) = build_wreath(SmallGroup::Cyclic(3), 2).unwrap();
        let all: Vec<usize> = (0..group.order()).collect();
        assert_eq!(double_cosets(&group, &all).len(), 1);
        assert_eq!(
            double_cosets(&group, &[group.identity()]).len(),
            group.order()
        );
        let total: usize = double_cosets(&group, &k).iter().map(Vec::len).sum();
        assert_eq!(total, group.order());
    }

    #[test]
    fn nonabelian_group_algebra_is_noncommutative() {
        let (s3, _) = build_wreath(SmallGroup::Symmetric(3), 1).unwrap();
        let conv = convolution_commutes(&s3, &[s3.identity()]).unwrap();
        assert!(!conv.commutes);
        assert!(conv.counterexample.is_some());
    }

    #[test]
    fn character_rule_matches_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for n in 1..=3 {
            let check = wreath_char_check(n, 10, &mut rng).unwrap();
            assert!(check.passed(), "{check:?}");
        }
    }

    #[test]
    fn swap_gives_trace_of_square() {
        let g = vec![1, 2, 0];
        let a = TestRep::Permutation.matrix(&g);
        let lhs = trace(&mat_mul(
            &kron(&a, &a),
            &factor_permutation(&[1, 0], &[3, 3]),
        ));
        assert_eq!(lhs, trace(&mat_mul(&a, &a)));
    }
}
