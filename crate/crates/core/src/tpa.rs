//! Transposed Poisson structures: parametrized commutative product tables
//! on the catalog algebras, their instantiation, and exhaustive axiom
//! checks on basis tuples.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::catalog::{FamilyId, FamilyTag};
use crate::error::{Error, Result};
use crate::expr::{c, p, Expr};
use crate::lie::{LieAlgebra, SparseVector};
use crate::linalg::{int, rat, Matrix, Rational};
use crate::witness::CheckReport;

/// Row of a product table: `e_i · e_j = Σ coeff e_k`, 1-based, `i ≤ j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableEntry {
    pub i: usize,
    pub j: usize,
    pub terms: Vec<(usize, Expr)>,
}

/// One parametrized multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TPVariant {
    pub family: FamilyId,
    /// `TP`, `TP1`, `TP2`, ...
    pub key: String,
    /// Dimension regime the table was stated for, e.g. `n>=7`.
    pub regime: String,
    pub parameters: Vec<String>,
    /// Expressions that must be nonzero.
    pub constraints: Vec<Expr>,
    pub table: Vec<TableEntry>,
}

impl TPVariant {
    /// Namespace for parameter assignments, e.g. `g2n1[n=5].TP4`.
    pub fn id(&self) -> String {
        format!("{}[{}].{}", self.family.tag().key(), self.regime, self.key)
    }
}

impl fmt::Display for TPVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} on {}", self.key, self.family)?;
        for e in &self.table {
            let rhs: Vec<String> = e.terms.iter().map(|(k, c)| format!("({c}) e{k}")).collect();
            writeln!(f, "  e{}·e{} = {}", e.i, e.j, rhs.join(" + "))?;
        }
        for c in &self.constraints {
            writeln!(f, "  requires {c} ≠ 0")?;
        }
        Ok(())
    }
}

/// Values for every parameter of one variant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParameterAssignment {
    pub variant: String,
    pub values: BTreeMap<String, Rational>,
}

impl ParameterAssignment {
    /// All parameters zero. May violate domain constraints.
    pub fn zeros(v: &TPVariant) -> Self {
        ParameterAssignment {
            variant: v.id(),
            values: v
                .parameters
                .iter()
                .map(|n| (n.clone(), Rational::zero()))
                .collect(),
        }
    }

    pub fn with(mut self, name: &str, value: Rational) -> Self {
        self.values.insert(name.to_string(), value);
        self
    }
}

/// Commutative product stored on pairs `i ≤ j` (0-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutativeProduct {
    dim: usize,
    table: BTreeMap<(usize, usize), SparseVector>,
}

impl CommutativeProduct {
    pub fn trivial(dim: usize) -> Self {
        CommutativeProduct {
            dim,
            table: BTreeMap::new(),
        }
    }

    /// `(i, j, k, c)` entries meaning `e_i·e_j` gains `c e_k`, 1-based, any
    /// order of `i, j`.
    pub fn from_entries(
        dim: usize,
        entries: impl IntoIterator<Item = (usize, usize, usize, Rational)>,
    ) -> Result<Self> {
        let mut table: BTreeMap<(usize, usize), SparseVector> = BTreeMap::new();
        for (i, j, k, c) in entries {
            for idx in [i, j, k] {
                if idx == 0 || idx > dim {
                    return Err(Error::IndexOutOfRange(format!(
                        "basis index {idx} outside 1..={dim}"
                    )));
                }
            }
            let key = (i.min(j) - 1, i.max(j) - 1);
            let slot = table.entry(key).or_default();
            let coeff = slot.entry(k - 1).or_insert_with(Rational::zero);
            *coeff += c;
            if coeff.is_zero() {
                slot.remove(&(k - 1));
            }
        }
        table.retain(|_, v| !v.is_empty());
        Ok(CommutativeProduct { dim, table })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Stored products, `(i, j)` 0-based with `i ≤ j`.
    pub fn table(&self) -> &BTreeMap<(usize, usize), SparseVector> {
        &self.table
    }

    pub fn is_trivial(&self) -> bool {
        self.table.is_empty()
    }

    /// `e_i · e_j`, dense, 0-based.
    pub fn basis_product(&self, i: usize, j: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        if let Some(v) = self.table.get(&(i.min(j), i.max(j))) {
            for (k, c) in v {
                out[*k] = c.clone();
            }
        }
        out
    }

    pub fn multiply(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>> {
        if x.len() != self.dim || y.len() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "vectors of length {} and {} in dimension {}",
                x.len(),
                y.len(),
                self.dim
            )));
        }
        let mut out = vec![Rational::zero(); self.dim];
        for (&(i, j), v) in &self.table {
            let mut coeff = &x[i] * &y[j];
            if i != j {
                coeff += &x[j] * &y[i];
            }
            if coeff.is_zero() {
                continue;
            }
            for (k, c) in v {
                out[*k] += &coeff * c;
            }
        }
        Ok(out)
    }

    /// `v · e_j` for dense `v`.
    fn times_basis(&self, v: &[Rational], j: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for (i, vi) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            if let Some(prod) = self.table.get(&(i.min(j), i.max(j))) {
                for (k, c) in prod {
                    out[*k] += vi * c;
                }
            }
        }
        out
    }
}

fn sub_assign(a: &mut [Rational], b: &[Rational]) {
    for (x, y) in a.iter_mut().zip(b) {
        *x -= y;
    }
}

/// `(e_i·e_j)·e_k − e_i·(e_j·e_k)` on every ordered basis triple.
pub fn check_associative(prod: &CommutativeProduct) -> CheckReport {
    let n = prod.dim;
    let mut report = CheckReport::new("associative");
    for i in 0..n {
        for j in 0..n {
            let ij = prod.basis_product(i, j);
            for k in 0..n {
                let jk = prod.basis_product(j, k);
                let mut residual = prod.times_basis(&ij, k);
                sub_assign(&mut residual, &prod.times_basis(&jk, i));
                report.record(&[i, j, k], residual);
            }
        }
    }
    report
}

fn same_dim(alg: &LieAlgebra, prod: &CommutativeProduct) -> Result<()> {
    if alg.dim() != prod.dim {
        return Err(Error::DimensionMismatch(format!(
            "bracket of dimension {} with product of dimension {}",
            alg.dim(),
            prod.dim
        )));
    }
    Ok(())
}

/// `2 z·[x,y] = [z·x, y] + [x, z·y]` on basis elements `x = e_i`,
/// `y = e_j` (`i < j`) and every `z = e_k`. Violations are reported as
/// `(i, j, k)`.
pub fn check_transposed_leibniz(
    alg: &LieAlgebra,
    prod: &CommutativeProduct,
) -> Result<CheckReport> {
    same_dim(alg, prod)?;
    let n = prod.dim;
    let mut report = CheckReport::new("transposed_leibniz");
    for i in 0..n {
        for j in i + 1..n {
            let bracket = alg.basis_bracket_dense(i, j);
            for z in 0..n {
                let mut residual: Vec<Rational> = prod
                    .times_basis(&bracket, z)
                    .into_iter()
                    .map(|x| x * int(2))
                    .collect();
                sub_assign(
                    &mut residual,
                    &alg.bracket_with_basis(&prod.basis_product(z, i), j),
                );
                sub_assign(
                    &mut residual,
                    &alg.basis_bracket_with(i, &prod.basis_product(z, j)),
                );
                report.record(&[i, j, z], residual);
            }
        }
    }
    Ok(report)
}

/// `[x, y·z] = [x,y]·z + y·[x,z]` on basis elements, reported as
/// `(x, y, z)` with `y ≤ z`.
pub fn check_poisson_leibniz(alg: &LieAlgebra, prod: &CommutativeProduct) -> Result<CheckReport> {
    same_dim(alg, prod)?;
    let n = prod.dim;
    let mut report = CheckReport::new("poisson_leibniz");
    for x in 0..n {
        for y in 0..n {
            let xy = alg.basis_bracket_dense(x, y);
            for z in y..n {
                let mut residual = alg.basis_bracket_with(x, &prod.basis_product(y, z));
                sub_assign(&mut residual, &prod.times_basis(&xy, z));
                sub_assign(
                    &mut residual,
                    &prod.times_basis(&alg.basis_bracket_dense(x, z), y),
                );
                report.record(&[x, y, z], residual);
            }
        }
    }
    Ok(report)
}

/// `e_j ↦ e_i·e_j` as an `n×n` matrix (column `j` is the image of `e_j`).
pub fn multiplication_operator(prod: &CommutativeProduct, i: usize) -> Result<Matrix> {
    let n = prod.dim;
    if i >= n {
        return Err(Error::IndexOutOfRange(format!(
            "basis index {} outside 1..={n}",
            i + 1
        )));
    }
    let mut m = Matrix::zeros(n, n);
    for j in 0..n {
        for (k, c) in prod.basis_product(i, j).into_iter().enumerate() {
            m[(k, j)] = c;
        }
    }
    Ok(m)
}

pub fn instantiate(v: &TPVariant, a: &ParameterAssignment) -> Result<CommutativeProduct> {
    if a.variant != v.id() {
        return Err(Error::WrongVariant {
            expected: v.id(),
            found: a.variant.clone(),
        });
    }
    if let Some(missing) = v.parameters.iter().find(|n| !a.values.contains_key(*n)) {
        return Err(Error::MissingParameter(missing.clone()));
    }
    for constraint in &v.constraints {
        if constraint.eval(&a.values)?.is_zero() {
            return Err(Error::DomainConstraint(constraint.to_string()));
        }
    }
    let mut entries = Vec::new();
    for e in &v.table {
        for (k, coeff) in &e.terms {
            entries.push((e.i, e.j, *k, coeff.eval(&a.values)?));
        }
    }
    CommutativeProduct::from_entries(v.family.n(), entries)
}

fn stream_seed(variant: &str, seed: u64) -> u64 {
    // FNV-1a over the variant id, folded with the user seed.
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in variant.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h ^ seed.wrapping_mul(0x9e37_79b9_7f4a_7c15)
}

const SAMPLE_ATTEMPTS: usize = 64;

/// Seeded assignment with numerators in `[-bound, bound]` and denominators
/// in `[1, bound]`. Parameters named in domain constraints are redrawn
/// until every constraint is nonzero.
pub fn sample_parameters(v: &TPVariant, seed: u64, bound: u32) -> Result<ParameterAssignment> {
    let bound = i64::from(bound.max(1));
    let mut rng = ChaCha8Rng::seed_from_u64(stream_seed(&v.id(), seed));
    let draw = |rng: &mut ChaCha8Rng| rat(rng.gen_range(-bound..=bound), rng.gen_range(1..=bound));
    let mut values: BTreeMap<String, Rational> = v
        .parameters
        .iter()
        .map(|name| (name.clone(), draw(&mut rng)))
        .collect();
    let constrained: BTreeSet<String> = v.constraints.iter().flat_map(Expr::params).collect();
    for _ in 0..SAMPLE_ATTEMPTS {
        let ok = v
            .constraints
            .iter()
            .all(|c| c.eval(&values).map(|x| !x.is_zero()).unwrap_or(false));
        if ok {
            return Ok(ParameterAssignment {
                variant: v.id(),
                values,
            });
        }
        for name in &constrained {
            values.insert(name.clone(), draw(&mut rng));
        }
    }
    Err(Error::SamplingExhausted {
        variant: v.id(),
        attempts: SAMPLE_ATTEMPTS,
    })
}

/// Seed of the `s`-th sample in a sweep started from `seed`.
pub fn sweep_seed(seed: u64, s: usize) -> u64 {
    seed.wrapping_mul(1_000_003).wrapping_add(s as u64)
}

// ---------------------------------------------------------------------------
// Tables

fn a(i: usize) -> Expr {
    p(&format!("alpha_{i}"))
}

fn b(i: usize) -> Expr {
    p(&format!("beta_{i}"))
}

fn g(i: usize) -> Expr {
    p(&format!("gamma_{i}"))
}

fn sign(i: usize) -> i64 {
    if i.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Collects table rows; 1-based indices, ranges inclusive and possibly
/// empty.
struct Table {
    rows: BTreeMap<(usize, usize), Vec<(usize, Expr)>>,
}

impl Table {
    fn new() -> Self {
        Table {
            rows: BTreeMap::new(),
        }
    }

    fn put(&mut self, i: usize, j: usize, k: usize, coeff: impl Into<Expr>) -> &mut Self {
        self.rows
            .entry((i.min(j), i.max(j)))
            .or_default()
            .push((k, coeff.into()));
        self
    }

    fn put_range(
        &mut self,
        i: usize,
        j: usize,
        range: std::ops::RangeInclusive<usize>,
        term: impl Fn(usize) -> Expr,
    ) -> &mut Self {
        for t in range {
            self.put(i, j, t, term(t));
        }
        self
    }
}

fn param_order(name: &str) -> (String, usize) {
    match name.rsplit_once('_') {
        Some((prefix, idx)) => (prefix.to_string(), idx.parse().unwrap_or(usize::MAX)),
        None => (name.to_string(), 0),
    }
}

fn variant(
    family: FamilyId,
    regime: &str,
    key: &str,
    table: &Table,
    constraints: Vec<Expr>,
) -> TPVariant {
    let mut params = BTreeSet::new();
    for terms in table.rows.values() {
        for (_, e) in terms {
            e.collect_params(&mut params);
        }
    }
    for e in &constraints {
        e.collect_params(&mut params);
    }
    let mut parameters: Vec<String> = params.into_iter().collect();
    parameters.sort_by_key(|n| param_order(n));
    TPVariant {
        family,
        key: key.to_string(),
        regime: regime.to_string(),
        parameters,
        constraints,
        table: table
            .rows
            .iter()
            .map(|(&(i, j), terms)| TableEntry {
                i,
                j,
                terms: terms.clone(),
            })
            .collect(),
    }
}

fn half() -> Expr {
    c(1, 2)
}

fn g1n1_5(id: FamilyId) -> Vec<TPVariant> {
    let r = "n=5";
    let mut tp1 = Table::new();
    tp1.put(1, 1, 4, a(4)).put(1, 1, 5, a(5));
    tp1.put(1, 2, 4, b(4)).put(1, 2, 5, b(5));
    tp1.put(2, 2, 4, b(9)).put(2, 2, 5, b(10));

    let mut tp2 = Table::new();
    tp2.put(1, 1, 3, 1).put(1, 1, 4, a(4)).put(1, 1, 5, a(5));
    tp2.put(1, 2, 3, b(3)).put(1, 2, 4, b(4)).put(1, 2, 5, b(5));
    tp2.put(1, 3, 4, half() * b(3)).put(1, 3, 5, -half());
    tp2.put(2, 2, 3, b(3).pow(2))
        .put(2, 2, 4, b(9))
        .put(2, 2, 5, b(10));
    tp2.put(2, 3, 4, half() * b(3).pow(2))
        .put(2, 3, 5, -half() * b(3));

    let d = || a(1) - b(2);
    let mut tp3 = Table::new();
    tp3.put(1, 1, 1, a(1))
        .put(1, 1, 2, 1)
        .put(1, 1, 3, a(3))
        .put(1, 1, 4, a(4))
        .put(1, 1, 5, a(5));
    tp3.put(1, 2, 1, -c(1, 4) * d().pow(2))
        .put(1, 2, 2, b(2))
        .put(1, 2, 3, -half() * a(3) * d())
        .put(1, 2, 4, b(4))
        .put(1, 2, 5, b(5));
    tp3.put(1, 3, 3, half() * (a(1) + b(2)))
        .put(1, 3, 4, -c(1, 4) * a(3) * d())
        .put(1, 3, 5, -half() * a(3));
    tp3.put(1, 4, 4, c(1, 4) * (3 * a(1) + b(2)))
        .put(1, 4, 5, half());
    tp3.put(1, 5, 4, -c(1, 8) * d().pow(2))
        .put(1, 5, 5, c(1, 4) * (a(1) + 3 * b(2)));
    tp3.put(2, 2, 1, -c(1, 4) * d().pow(2) * b(2))
        .put(
            2,
            2,
            2,
            c(1, 4) * (-a(1).pow(2) - 2 * a(1) * b(2) + 3 * b(2).pow(2)),
        )
        .put(2, 2, 3, c(1, 4) * a(3) * d().pow(2))
        .put(
            2,
            2,
            4,
            c(1, 8)
                * (a(1).pow(2) * (a(5) * b(2) - b(5))
                    - b(2) * (2 * a(4) * b(2) - a(5) * b(2).pow(2) - 10 * b(4) + b(2) * b(5))
                    + 2 * a(1) * (a(4) * b(2) - a(5) * b(2).pow(2) - b(4) + b(2) * b(5))),
        )
        .put(
            2,
            2,
            5,
            c(1, 4)
                * (2 * b(4) - 2 * a(4) * b(2) - 3 * a(5) * b(2).pow(2)
                    + 3 * a(1) * (a(5) * b(2) - b(5))
                    + 7 * b(2) * b(5)),
        );
    tp3.put(2, 3, 3, c(1, 4) * (b(2).pow(2) - a(1).pow(2)))
        .put(2, 3, 4, c(1, 8) * a(3) * d().pow(2))
        .put(2, 3, 5, c(1, 4) * a(3) * d());
    tp3.put(2, 4, 4, c(1, 4) * a(1) * (b(2) - a(1)))
        .put(2, 4, 5, half() * b(2));
    tp3.put(2, 5, 4, -c(1, 8) * d().pow(2) * b(2)).put(
        2,
        5,
        5,
        -c(1, 4) * (a(1).pow(2) + a(1) * b(2) - 2 * b(2).pow(2)),
    );
    tp3.put(3, 3, 4, c(1, 8) * (b(2).pow(2) - a(1).pow(2)))
        .put(3, 3, 5, -c(1, 4) * (a(1) + b(2)));

    vec![
        variant(id, r, "TP1", &tp1, vec![]),
        variant(id, r, "TP2", &tp2, vec![]),
        variant(id, r, "TP3", &tp3, vec![]),
    ]
}

fn g1n1_general(id: FamilyId) -> Vec<TPVariant> {
    let n = id.n();
    let r = "n>=7";
    let mut tp1 = Table::new();
    tp1.put_range(1, 1, 4..=n, a);
    tp1.put(1, 2, n - 2, b(1))
        .put(1, 2, n - 1, b(2))
        .put(1, 2, n, b(3));
    tp1.put(1, 3, n - 1, half() * b(1))
        .put(1, 3, n, -half() * a(n - 2));
    for j in 4..=n - 3 {
        tp1.put(1, j, n, c(sign(j), 2) * a(n - j + 1));
    }
    tp1.put(2, 2, n - 2, b(4))
        .put(2, 2, n - 1, b(5))
        .put(2, 2, n, b(6));
    tp1.put(2, 3, n - 1, half() * b(4))
        .put(2, 3, n, -half() * b(1));

    let mut tp2 = Table::new();
    tp2.put(1, 1, 3, 1).put_range(1, 1, 4..=n, a);
    tp2.put(1, 2, n - 2, b(1))
        .put(1, 2, n - 1, b(2))
        .put(1, 2, n, b(3));
    tp2.put(1, 3, n - 1, half() * b(1))
        .put(1, 3, n, -half() * a(n - 2));
    for j in 4..=n - 3 {
        tp2.put(1, j, n, c(sign(j), 2) * a(n - j + 1));
    }
    tp2.put(1, n - 2, n, -half());
    tp2.put(2, 2, n - 1, b(4)).put(2, 2, n, b(5));
    tp2.put(2, 3, n, -half() * b(1));

    let mut tp3 = Table::new();
    tp3.put(1, 1, 2, 1).put_range(1, 1, 3..=n, a);
    tp3.put(1, 2, n - 1, 2 * b(1)).put(1, 2, n, b(2));
    tp3.put(1, 3, n, -half() * a(n - 2));
    for j in 4..=n - 2 {
        tp3.put(1, j, n, c(sign(j), 2) * a(n - j + 1));
    }
    tp3.put(1, n - 1, n, half());
    tp3.put(2, 2, n, b(1));

    vec![
        variant(id, r, "TP1", &tp1, vec![]),
        variant(id, r, "TP2", &tp2, vec![]),
        variant(id, r, "TP3", &tp3, vec![]),
    ]
}

fn g2n1_5(id: FamilyId) -> Vec<TPVariant> {
    let r = "n=5";
    let mut out = Vec::new();

    let mut t = Table::new();
    t.put(1, 1, 2, 1)
        .put(1, 1, 3, a(3))
        .put(1, 1, 4, a(4))
        .put(1, 1, 5, a(5));
    t.put(1, 2, 3, a(5) * (1 - 2 * a(16)) - 2 * a(15))
        .put(1, 2, 4, a(8));
    t.put(1, 3, 4, -(a(15) + a(5) * a(16)));
    t.put(1, 5, 3, -1).put(1, 5, 4, a(10));
    t.put(
        2,
        2,
        4,
        2 * (a(15) + a(5) * a(16)).pow(2) - a(5) * (2 * a(15) + a(16)),
    );
    t.put(2, 5, 4, a(15));
    t.put(5, 5, 4, a(16));
    out.push(variant(id, r, "TP1", &t, vec![]));

    let mut t = Table::new();
    t.put(1, 1, 3, a(3)).put(1, 1, 4, a(4));
    t.put(1, 2, 4, a(8));
    t.put(1, 5, 4, a(10));
    t.put(2, 2, 4, a(13));
    t.put(2, 5, 4, a(15));
    t.put(5, 5, 4, 1);
    out.push(variant(id, r, "TP2", &t, vec![]));

    let mut t = Table::new();
    t.put(1, 1, 3, a(7).pow(2)).put(1, 1, 4, a(4));
    t.put(1, 2, 3, a(7)).put(1, 2, 4, a(8));
    t.put(1, 3, 4, half() * a(7));
    t.put(1, 5, 4, a(10));
    t.put(2, 2, 3, 1).put(2, 2, 4, a(13));
    t.put(2, 3, 4, half());
    t.put(2, 5, 4, a(15));
    t.put(5, 5, 4, 1);
    out.push(variant(id, r, "TP3", &t, vec![]));

    let mut t = Table::new();
    t.put(1, 1, 3, (a(7).pow(2) - a(5) * (a(7) + 2 * a(15))) / a(12))
        .put(1, 1, 4, a(4))
        .put(1, 1, 5, a(5));
    t.put(1, 2, 3, a(7)).put(1, 2, 4, a(8)).put(1, 2, 5, a(9));
    t.put(1, 3, 4, half() * (a(7) - a(5)));
    t.put(1, 5, 4, half() * a(5) * a(12));
    t.put(2, 2, 3, a(12)).put(2, 2, 4, a(13)).put(2, 2, 5, 1);
    t.put(2, 3, 4, half() * a(12));
    t.put(2, 5, 4, a(15));
    out.push(variant(id, r, "TP4", &t, vec![a(12)]));

    let mut t = Table::new();
    t.put(1, 1, 3, a(3)).put(1, 1, 4, a(4)).put(1, 1, 5, a(5));
    t.put(1, 2, 3, a(7)).put(1, 2, 4, a(8));
    t.put(1, 3, 4, half() * (a(7) - a(5)));
    t.put(2, 2, 4, a(13)).put(2, 2, 5, 1);
    t.put(2, 5, 4, a(7) * (a(7) - a(5)) / (2 * a(5)));
    out.push(variant(id, r, "TP5", &t, vec![a(5)]));

    let mut t = Table::new();
    t.put(1, 1, 3, a(3)).put(1, 1, 4, a(4));
    t.put(1, 2, 4, a(8));
    t.put(2, 2, 4, a(13)).put(2, 2, 5, 1);
    t.put(2, 5, 4, a(15));
    out.push(variant(id, r, "TP6", &t, vec![]));

    let mut t = Table::new();
    t.put(1, 1, 3, a(3)).put(1, 1, 4, a(4));
    t.put(1, 2, 3, 2 * a(15)).put(1, 2, 4, a(8)).put(1, 2, 5, 1);
    t.put(1, 3, 4, half() * a(15));
    t.put(1, 5, 4, half() * (a(3) * (a(12) - 1) - 4 * a(15).pow(2)));
    t.put(2, 2, 3, a(12)).put(2, 2, 4, a(13));
    t.put(2, 3, 4, half() * (a(12) - 1));
    t.put(2, 5, 4, a(15));
    out.push(variant(id, r, "TP7", &t, vec![]));

    let mut t = Table::new();
    t.put(1, 1, 3, a(7).pow(2)).put(1, 1, 4, a(4));
    t.put(1, 2, 3, a(7)).put(1, 2, 4, a(8));
    t.put(1, 3, 4, half() * a(7));
    t.put(1, 5, 4, a(10));
    t.put(2, 2, 3, 1).put(2, 2, 4, a(13));
    t.put(2, 3, 4, half());
    t.put(2, 5, 4, a(15));
    out.push(variant(id, r, "TP8", &t, vec![]));

    let mut t = Table::new();
    t.put(1, 1, 3, a(3)).put(1, 1, 4, a(4)).put(1, 1, 5, a(5));
    t.put(1, 2, 3, a(7)).put(1, 2, 4, a(8));
    t.put(1, 3, 4, half() * (a(7) - a(5)));
    t.put(1, 5, 4, a(10));
    t.put(2, 2, 4, a(13));
    t.put(2, 5, 4, a(7) * (a(7) - a(5)) / (2 * a(5)));
    out.push(variant(id, r, "TP9", &t, vec![a(5)]));

    let mut t = Table::new();
    t.put(1, 1, 3, a(3)).put(1, 1, 4, a(4));
    t.put(1, 2, 4, a(8));
    t.put(1, 5, 4, a(10));
    t.put(2, 2, 4, a(13));
    t.put(2, 5, 4, a(15));
    out.push(variant(id, r, "TP10", &t, vec![]));

    out
}

fn g2n1_6(id: FamilyId) -> Vec<TPVariant> {
    let r = "n=6";
    let mut tp1 = Table::new();
    tp1.put(1, 1, 2, 1)
        .put(1, 1, 3, a(2))
        .put(1, 1, 4, a(3))
        .put(1, 1, 5, a(4));
    tp1.put(1, 2, 4, -2 * a(11)).put(1, 2, 5, a(7));
    tp1.put(1, 3, 5, -a(11));
    tp1.put(1, 6, 3, -1).put(1, 6, 4, -a(2)).put(1, 6, 5, a(8));
    tp1.put(2, 6, 5, a(11));
    tp1.put(6, 6, 4, 1).put(6, 6, 5, a(12));

    let mut tp2 = Table::new();
    tp2.put(1, 1, 3, 1).put(1, 1, 4, a(3)).put(1, 1, 5, a(4));
    tp2.put(1, 2, 4, a(6)).put(1, 2, 5, a(7));
    tp2.put(1, 3, 5, half() * a(6));
    tp2.put(1, 6, 4, -1).put(1, 6, 5, a(8));
    tp2.put(2, 2, 5, a(10));
    tp2.put(2, 6, 5, a(11));
    tp2.put(6, 6, 5, a(12));

    let mut tp3 = Table::new();
    tp3.put(1, 1, 4, a(3)).put(1, 1, 5, a(4));
    tp3.put(1, 2, 4, a(6)).put(1, 2, 5, a(7));
    tp3.put(1, 3, 5, half() * a(6));
    tp3.put(1, 6, 5, a(8));
    tp3.put(2, 2, 4, a(9)).put(2, 2, 5, a(10));
    tp3.put(2, 3, 5, half() * a(9));
    tp3.put(2, 6, 5, a(11));
    tp3.put(6, 6, 5, a(12));

    vec![
        variant(id, r, "TP1", &tp1, vec![]),
        variant(id, r, "TP2", &tp2, vec![]),
        variant(id, r, "TP3", &tp3, vec![]),
    ]
}

fn g2n1_general(id: FamilyId) -> Vec<TPVariant> {
    let n = id.n();
    let r = "n>=7";
    let mut tp1 = Table::new();
    tp1.put(1, 1, 2, 1).put_range(1, 1, 3..=n - 1, a);
    tp1.put(1, 2, n - 2, 2 * a(1)).put(1, 2, n - 1, a(n));
    tp1.put(1, 3, n - 1, a(1));
    tp1.put(1, n, 3, -1)
        .put_range(1, n, 4..=n - 2, |i| -a(i - 1))
        .put(1, n, n - 1, a(n + 1));
    tp1.put(2, n, n - 1, -(a(1) * a(3)));
    tp1.put_range(n, n, 4..=n - 2, |i| a(i - 1))
        .put(n, n, n - 1, a(n + 2));

    let mut tp2 = Table::new();
    tp2.put(1, 1, 3, 1).put_range(1, 1, 4..=n - 1, a);
    tp2.put(1, 2, n - 1, a(n));
    tp2.put(1, n, 4, -1)
        .put_range(1, n, 5..=n - 2, |i| -a(i - 1))
        .put(1, n, n - 1, a(n + 1));
    tp2.put(2, 2, n - 1, a(n + 3));
    tp2.put(2, n, n - 1, a(n + 4));
    tp2.put(n, n, 4, 1)
        .put_range(n, n, 5..=n - 2, |i| a(i - 1))
        .put(n, n, n - 1, a(n + 5));

    let mut tp3 = Table::new();
    tp3.put_range(1, 1, 4..=n - 1, a);
    tp3.put(1, 2, n - 2, 2 * a(1)).put(1, 2, n - 1, a(n));
    tp3.put(1, 3, n - 1, a(1));
    tp3.put_range(1, n, 5..=n - 2, |i| -a(i - 1))
        .put(1, n, n - 1, a(n + 1));
    tp3.put(2, 2, n - 2, 2 * a(n + 2))
        .put(2, 2, n - 1, a(n + 3));
    tp3.put(2, 3, n - 1, a(n + 2));
    tp3.put(2, n, n - 1, a(n + 4));
    tp3.put_range(n, n, 5..=n - 2, |i| a(i - 1))
        .put(n, n, n - 1, a(n + 5));

    vec![
        variant(id, r, "TP1", &tp1, vec![]),
        variant(id, r, "TP2", &tp2, vec![]),
        variant(id, r, "TP3", &tp3, vec![]),
    ]
}

fn g3n1_7(id: FamilyId) -> Vec<TPVariant> {
    let r = "n=7";
    let mut tp1 = Table::new();
    tp1.put(1, 1, 4, a(4)).put(1, 1, 5, a(5));
    tp1.put(1, 2, 5, 2 * a(6)).put(1, 2, 6, a(7));
    tp1.put(1, 3, 6, a(6));
    tp1.put(1, 7, 5, -a(4)).put(1, 7, 6, a(8));
    tp1.put(2, 2, 5, 2 * a(1)).put(2, 2, 6, a(9));
    tp1.put(2, 3, 6, a(1));
    tp1.put(2, 7, 6, a(10));
    tp1.put(7, 7, 6, a(11));

    let mut tp2 = Table::new();
    tp2.put(1, 1, 3, 2).put(1, 1, 4, a(4)).put(1, 1, 5, a(5));
    tp2.put(1, 2, 5, 2 * a(6)).put(1, 2, 6, a(7));
    tp2.put(1, 3, 6, a(6) - 1);
    tp2.put(1, 7, 4, -2).put(1, 7, 5, -a(4)).put(1, 7, 6, a(8));
    tp2.put(2, 2, 6, a(9));
    tp2.put(2, 7, 6, a(10));
    tp2.put(7, 7, 5, 2).put(7, 7, 6, a(11));

    vec![
        variant(id, r, "TP1", &tp1, vec![]),
        variant(id, r, "TP2", &tp2, vec![]),
    ]
}

fn g3n1_8(id: FamilyId) -> Vec<TPVariant> {
    let mut t = Table::new();
    t.put_range(1, 1, 4..=7, a);
    t.put(1, 2, 6, b(1)).put(1, 2, 7, b(2));
    t.put(1, 3, 7, half() * (b(1) - a(4)));
    t.put(1, 8, 5, -a(4)).put(1, 8, 6, -a(5)).put(1, 8, 7, g(1));
    t.put(2, 2, 6, b(3)).put(2, 2, 7, b(4));
    t.put(2, 3, 7, half() * b(3));
    t.put(2, 8, 7, g(2));
    t.put(8, 8, 6, a(4)).put(8, 8, 7, g(3));
    vec![variant(id, "n=8", "TP", &t, vec![])]
}

fn g3n1_9(id: FamilyId) -> Vec<TPVariant> {
    let r = "n=9";
    let mut tp1 = Table::new();
    tp1.put_range(1, 1, 4..=8, a);
    tp1.put(1, 2, 7, b(1)).put(1, 2, 8, b(2));
    tp1.put(1, 3, 8, half() * (b(1) - a(5)));
    tp1.put_range(1, 9, 5..=7, |t| -a(t - 1)).put(1, 9, 8, g(1));
    tp1.put(2, 2, 7, b(3)).put(2, 2, 8, b(4));
    tp1.put(2, 3, 8, half() * b(3));
    tp1.put(2, 9, 7, -a(4)).put(2, 9, 8, g(2));
    tp1.put(3, 9, 8, half() * a(4));
    tp1.put_range(9, 9, 6..=7, |t| a(t - 2)).put(9, 9, 8, g(3));

    let mut tp2 = Table::new();
    tp2.put(1, 1, 3, 1).put_range(1, 1, 5..=8, a);
    tp2.put(1, 2, 5, 1).put(1, 2, 7, b(1)).put(1, 2, 8, b(2));
    tp2.put(1, 3, 8, half() * (b(1) - a(5)));
    tp2.put(1, 9, 4, -1)
        .put_range(1, 9, 6..=7, |t| -a(t - 1))
        .put(1, 9, 8, g(1));
    tp2.put(2, 2, 7, 1).put(2, 2, 8, b(4));
    tp2.put(2, 9, 6, -1).put(2, 9, 8, g(2));
    tp2.put(9, 9, 5, 1).put(9, 9, 7, a(5)).put(9, 9, 8, g(3));

    vec![
        variant(id, r, "TP1", &tp1, vec![]),
        variant(id, r, "TP2", &tp2, vec![]),
    ]
}

fn g3n1_general(id: FamilyId) -> Vec<TPVariant> {
    let n = id.n();
    let r = "n>=10";
    let mut tp1 = Table::new();
    tp1.put_range(1, 1, 4..=n - 1, a);
    tp1.put_range(1, 2, 6..=n - 3, |t| a(t - 2))
        .put(1, 2, n - 2, b(1))
        .put(1, 2, n - 1, b(2));
    tp1.put(1, 3, n - 1, half() * (b(1) - a(n - 4)));
    tp1.put_range(1, n, 5..=n - 2, |t| -a(t - 1))
        .put(1, n, n - 1, g(1));
    tp1.put_range(2, 2, 8..=n - 3, |t| a(t - 4))
        .put(2, 2, n - 2, b(3))
        .put(2, 2, n - 1, b(4));
    tp1.put(2, 3, n - 1, half() * (b(3) - a(n - 6)));
    tp1.put_range(2, n, 7..=n - 2, |t| -a(t - 3))
        .put(2, n, n - 1, g(2));
    tp1.put(3, n, n - 1, half() * a(n - 5));
    tp1.put_range(n, n, 6..=n - 2, |t| a(t - 2))
        .put(n, n, n - 1, g(3));

    let mut tp2 = Table::new();
    tp2.put(1, 1, 3, 1)
        .put_range(1, 1, 4..=n - 6, a)
        .put_range(1, 1, n - 4..=n - 1, a);
    tp2.put(1, 2, 5, 1)
        .put_range(1, 2, 5..=n - 4, |t| a(t - 2))
        .put(1, 2, n - 2, b(1))
        .put(1, 2, n - 1, b(2));
    tp2.put(1, 3, n - 1, half() * (b(1) - a(n - 4)));
    tp2.put(1, n, 4, -1)
        .put_range(1, n, 5..=n - 5, |t| -a(t - 1))
        .put_range(1, n, n - 3..=n - 2, |t| -a(t - 1))
        .put(1, n, n - 1, g(1));
    tp2.put(2, 2, 7, 1)
        .put_range(2, 2, 8..=n - 2, |t| a(t - 4))
        .put(2, 2, n - 1, b(4));
    tp2.put(2, n, 6, -1)
        .put_range(2, n, 7..=n - 3, |t| -a(t - 3))
        .put(2, n, n - 1, g(2));
    tp2.put(n, n, 5, 1)
        .put_range(n, n, 6..=n - 4, |t| a(t - 2))
        .put(n, n, n - 2, a(n - 4))
        .put(n, n, n - 1, g(3));

    vec![
        variant(id, r, "TP1", &tp1, vec![]),
        variant(id, r, "TP2", &tp2, vec![]),
    ]
}

fn g1_7(id: FamilyId) -> Vec<TPVariant> {
    let mut tp1 = Table::new();
    tp1.put_range(1, 1, 4..=7, a);
    tp1.put(1, 2, 5, a(1)).put(1, 2, 6, a(2)).put(1, 2, 7, a(8));
    tp1.put(1, 3, 6, half() * (a(1) - a(4)))
        .put(1, 3, 7, -half() * a(5));
    tp1.put(1, 4, 7, half() * a(4));
    tp1.put(2, 2, 5, a(9))
        .put(2, 2, 6, a(10))
        .put(2, 2, 7, a(11));
    tp1.put(2, 3, 6, half() * a(9)).put(2, 3, 7, -half() * a(1));

    let mut tp2 = Table::new();
    tp2.put(1, 1, 3, 6).put_range(1, 1, 4..=7, a);
    tp2.put(1, 2, 4, -2)
        .put(1, 2, 5, a(1))
        .put(1, 2, 6, a(2))
        .put(1, 2, 7, a(8));
    tp2.put(1, 3, 5, -4)
        .put(1, 3, 6, half() * (a(1) - a(4)))
        .put(1, 3, 7, -half() * a(5));
    tp2.put(1, 4, 6, -2).put(1, 4, 7, half() * a(4));
    tp2.put(1, 5, 7, -3);
    tp2.put(2, 2, 5, c(-2, 3))
        .put(2, 2, 6, a(10))
        .put(2, 2, 7, a(11));
    tp2.put(2, 3, 6, c(2, 3)).put(2, 3, 7, -half() * a(1));
    tp2.put(2, 4, 7, -1);
    tp2.put(3, 3, 7, 2);

    vec![
        variant(id, "n=7", "TP1", &tp1, vec![]),
        variant(id, "n=7", "TP2", &tp2, vec![]),
    ]
}

fn g2_9(id: FamilyId) -> Vec<TPVariant> {
    let mut t = Table::new();
    t.put(1, 1, 5, a(1))
        .put(1, 1, 6, a(2))
        .put(1, 1, 7, a(3))
        .put(1, 1, 8, a(4))
        .put(1, 1, 9, a(5));
    t.put(1, 2, 6, c(1, 3) * a(1))
        .put(1, 2, 7, a(6))
        .put(1, 2, 8, a(7))
        .put(1, 2, 9, a(8));
    t.put(1, 3, 7, c(-4, 3) * a(1))
        .put(1, 3, 8, half() * (a(6) - 5 * a(2)))
        .put(1, 3, 9, -half() * a(3));
    t.put(1, 4, 8, c(1, 3) * a(1)).put(1, 4, 9, half() * a(2));
    t.put(1, 5, 9, -half() * a(1));
    t.put(2, 2, 7, a(9)).put(2, 2, 8, a(10)).put(2, 2, 9, a(11));
    t.put(2, 3, 8, c(1, 6) * (3 * a(9) - 5 * a(1)))
        .put(2, 3, 9, -half() * a(6));
    t.put(2, 4, 9, c(1, 6) * a(1));
    t.put(3, 3, 9, c(2, 3) * a(1));
    vec![variant(id, "n=9", "TP", &t, vec![])]
}

fn g3_11(id: FamilyId) -> Vec<TPVariant> {
    let mut t = Table::new();
    t.put_range(1, 1, 6..=11, a);
    t.put(1, 2, 7, -a(6))
        .put(1, 2, 8, -a(7))
        .put(1, 2, 9, a(1))
        .put(1, 2, 10, a(2))
        .put(1, 2, 11, a(3));
    t.put(1, 3, 10, half() * a(1)).put(1, 3, 11, -half() * a(9));
    t.put(1, 4, 10, half() * a(7)).put(1, 4, 11, half() * a(8));
    t.put(1, 5, 10, -half() * a(6))
        .put(1, 5, 11, -half() * a(7));
    t.put(1, 6, 11, half() * a(6));
    t.put(2, 2, 8, a(6))
        .put(2, 2, 9, a(4))
        .put(2, 2, 10, a(5))
        .put(2, 2, 11, a(12));
    t.put(2, 3, 10, half() * a(4)).put(2, 3, 11, -half() * a(1));
    t.put(2, 4, 10, -half() * a(6))
        .put(2, 4, 11, -half() * a(7));
    t.put(2, 5, 11, half() * a(6));
    vec![variant(id, "n=11", "TP", &t, vec![])]
}

/// Every transposed Poisson table stated for the algebra `id`.
pub fn variants(id: FamilyId) -> Vec<TPVariant> {
    let n = id.n();
    match id.tag() {
        FamilyTag::G1N1 if n == 5 => g1n1_5(id),
        FamilyTag::G1N1 => g1n1_general(id),
        FamilyTag::G2N1 if n == 5 => g2n1_5(id),
        FamilyTag::G2N1 if n == 6 => g2n1_6(id),
        FamilyTag::G2N1 => g2n1_general(id),
        FamilyTag::G3N1 if n == 7 => g3n1_7(id),
        FamilyTag::G3N1 if n == 8 => g3n1_8(id),
        FamilyTag::G3N1 if n == 9 => g3n1_9(id),
        FamilyTag::G3N1 => g3n1_general(id),
        FamilyTag::G1_7 => g1_7(id),
        FamilyTag::G2_9 => g2_9(id),
        FamilyTag::G3_11 => g3_11(id),
    }
}

pub fn list_variants(id: FamilyId) -> Vec<String> {
    variants(id).into_iter().map(|v| v.key).collect()
}

pub fn find_variant(id: FamilyId, key: &str) -> Result<TPVariant> {
    variants(id)
        .into_iter()
        .find(|v| v.key.eq_ignore_ascii_case(key))
        .ok_or_else(|| Error::UnknownVariant {
            family: id.to_string(),
            variant: key.to_string(),
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::make_algebra;
    use crate::derivations::{solve_derivation_space, DerivationProblem};

    fn e(n: usize, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); n];
        v[i - 1] = int(1);
        v
    }

    fn entries(prod: &CommutativeProduct) -> Vec<(usize, usize, usize, Rational)> {
        prod.table()
            .iter()
            .flat_map(|(&(i, j), v)| {
                v.iter()
                    .map(move |(&k, c)| (i + 1, j + 1, k + 1, c.clone()))
            })
            .collect()
    }

    #[test]
    fn variant_counts() {
        let count = |id| list_variants(id).len();
        assert_eq!(count(FamilyId::g1n1(5).unwrap()), 3);
        assert_eq!(count(FamilyId::g1n1(9).unwrap()), 3);
        assert_eq!(count(FamilyId::g2n1(5).unwrap()), 10);
        assert_eq!(count(FamilyId::g2n1(6).unwrap()), 3);
        assert_eq!(count(FamilyId::g2n1(8).unwrap()), 3);
        assert_eq!(count(FamilyId::g3n1(7).unwrap()), 2);
        assert_eq!(list_variants(FamilyId::g3n1(8).unwrap()), vec!["TP"]);
        assert_eq!(count(FamilyId::g3n1(9).unwrap()), 2);
        assert_eq!(count(FamilyId::g3n1(12).unwrap()), 2);
        assert_eq!(count(FamilyId::g1_7()), 2);
        assert_eq!(list_variants(FamilyId::g2_9()), vec!["TP"]);
        assert_eq!(list_variants(FamilyId::g3_11()), vec!["TP"]);
    }

    #[test]
    fn tp2_g1n1_7_at_zero() {
        let v = find_variant(FamilyId::g1n1(7).unwrap(), "TP2").unwrap();
        let prod = instantiate(&v, &ParameterAssignment::zeros(&v)).unwrap();
        assert_eq!(
            entries(&prod),
            vec![(1, 1, 3, int(1)), (1, 5, 7, rat(-1, 2))]
        );
        let op = multiplication_operator(&prod, 0).unwrap();
        assert_eq!(op.column(0), e(7, 3));
        let mut half_e7 = vec![Rational::zero(); 7];
        half_e7[6] = rat(-1, 2);
        assert_eq!(op.column(4), half_e7);
        assert!(op.column(1).iter().all(Zero::is_zero));
    }

    #[test]
    fn tp3_g1n1_5_balanced_point() {
        let v = find_variant(FamilyId::g1n1(5).unwrap(), "TP3").unwrap();
        let a = ParameterAssignment::zeros(&v)
            .with("alpha_1", int(1))
            .with("beta_2", int(1));
        let prod = instantiate(&v, &a).unwrap();
        assert_eq!(prod.basis_product(0, 1), e(5, 2));
        let mut expected = e(5, 4);
        expected[4] = rat(1, 2);
        assert_eq!(prod.basis_product(0, 3), expected);
    }

    #[test]
    fn domain_constraint_is_enforced() {
        let v = find_variant(FamilyId::g2n1(5).unwrap(), "TP5").unwrap();
        let err = instantiate(&v, &ParameterAssignment::zeros(&v)).unwrap_err();
        assert_eq!(err, Error::DomainConstraint("alpha_5".into()));
        assert!(err.to_string().contains("alpha_5≠0 violated"));
    }

    #[test]
    fn assignments_are_namespaced() {
        let v2 = find_variant(FamilyId::g2n1(5).unwrap(), "TP2").unwrap();
        let v3 = find_variant(FamilyId::g2n1(5).unwrap(), "TP3").unwrap();
        let a = ParameterAssignment::zeros(&v2);
        assert!(matches!(
            instantiate(&v3, &a),
            Err(Error::WrongVariant { .. })
        ));
        let mut missing = ParameterAssignment::zeros(&v2);
        missing.values.remove("alpha_13");
        assert_eq!(
            instantiate(&v2, &missing),
            Err(Error::MissingParameter("alpha_13".into()))
        );
    }

    #[test]
    fn associativity_examples() {
        assert!(check_associative(&CommutativeProduct::trivial(4)).passed());
        let idem = CommutativeProduct::from_entries(2, [(1, 1, 1, int(1))]).unwrap();
        assert!(check_associative(&idem).passed());
        let bad = CommutativeProduct::from_entries(2, [(1, 2, 1, int(1))]).unwrap();
        let r = check_associative(&bad);
        assert!(!r.passed());
        assert!(r.violations.iter().any(|w| w.indices == vec![1, 2, 2]));
    }

    #[test]
    fn tp1_g1n1_5_is_associative_for_samples() {
        let v = find_variant(FamilyId::g1n1(5).unwrap(), "TP1").unwrap();
        for seed in 0..10 {
            let prod = instantiate(&v, &sample_parameters(&v, seed, 5).unwrap()).unwrap();
            assert!(check_associative(&prod).passed());
        }
    }

    #[test]
    fn transposed_leibniz_examples() {
        let alg = make_algebra(FamilyId::g1n1(5).unwrap());
        let r = check_transposed_leibniz(&alg, &CommutativeProduct::trivial(5)).unwrap();
        assert!(r.passed());
        assert_eq!(r.tuples_checked, 10 * 5);

        let idem = CommutativeProduct::from_entries(5, [(1, 1, 1, int(1))]).unwrap();
        let r = check_transposed_leibniz(&alg, &idem).unwrap();
        let w = r
            .violations
            .iter()
            .find(|w| w.indices == vec![1, 2, 1])
            .unwrap();
        // 2 e1·e3 − [e1·e1, e2] − [e1, e1·e2] = −e3
        assert_eq!(
            w.residual,
            e(5, 3).into_iter().map(|x| -x).collect::<Vec<_>>()
        );

        assert!(check_transposed_leibniz(&alg, &CommutativeProduct::trivial(4)).is_err());
    }

    #[test]
    fn transposed_but_not_ordinary_poisson() {
        let alg = make_algebra(FamilyId::g1n1(7).unwrap());
        let v = find_variant(FamilyId::g1n1(7).unwrap(), "TP2").unwrap();
        let prod = instantiate(&v, &ParameterAssignment::zeros(&v)).unwrap();
        assert!(check_transposed_leibniz(&alg, &prod).unwrap().passed());
        let r = check_poisson_leibniz(&alg, &prod).unwrap();
        let w = r.witness().unwrap();
        assert_eq!(w.indices, vec![1, 1, 1]);
        assert_eq!(w.residual, e(7, 4));

        let abelian = LieAlgebra::abelian(7);
        assert!(check_poisson_leibniz(&abelian, &prod).unwrap().passed());
        assert!(check_poisson_leibniz(&alg, &CommutativeProduct::trivial(7))
            .unwrap()
            .passed());
    }

    #[test]
    fn operators_mirror_the_table() {
        assert!(multiplication_operator(&CommutativeProduct::trivial(3), 1)
            .unwrap()
            .is_zero());
        assert!(multiplication_operator(&CommutativeProduct::trivial(3), 3).is_err());
        let v = find_variant(FamilyId::g2_9(), "TP").unwrap();
        let prod = instantiate(&v, &sample_parameters(&v, 3, 5).unwrap()).unwrap();
        for i in 0..9 {
            let op = multiplication_operator(&prod, i).unwrap();
            for j in 0..9 {
                assert_eq!(op.column(j), prod.basis_product(j, i));
            }
        }
    }

    #[test]
    fn sampling_is_deterministic_and_respects_constraints() {
        let v = find_variant(FamilyId::g2n1(5).unwrap(), "TP4").unwrap();
        assert_eq!(sample_parameters(&v, 11, 5), sample_parameters(&v, 11, 5));
        for seed in 0..50 {
            let s = sample_parameters(&v, seed, 5).unwrap();
            assert!(!s.values["alpha_12"].is_zero());
            for (name, x) in &s.values {
                assert!(x.numer().magnitude() <= &5u32.into(), "{name}");
                assert!(x.denom() <= &5.into());
            }
        }
        let distinct: BTreeSet<Vec<Rational>> = (0..100)
            .map(|seed| {
                sample_parameters(&v, seed, 5)
                    .unwrap()
                    .values
                    .into_values()
                    .collect()
            })
            .collect();
        assert!(distinct.len() >= 95, "{} distinct", distinct.len());
    }

    #[test]
    fn denominators_are_declared_constraints() {
        let ids = [
            FamilyId::g1n1(5).unwrap(),
            FamilyId::g1n1(7).unwrap(),
            FamilyId::g2n1(5).unwrap(),
            FamilyId::g2n1(6).unwrap(),
            FamilyId::g2n1(7).unwrap(),
            FamilyId::g3n1(7).unwrap(),
            FamilyId::g3n1(8).unwrap(),
            FamilyId::g3n1(9).unwrap(),
            FamilyId::g3n1(10).unwrap(),
            FamilyId::g1_7(),
            FamilyId::g2_9(),
            FamilyId::g3_11(),
        ];
        for id in ids {
            for v in variants(id) {
                for entry in &v.table {
                    assert!(entry.i <= entry.j);
                    for (_, coeff) in &entry.terms {
                        for den in coeff.denominators() {
                            let covered = v.constraints.iter().any(|c| {
                                den == c
                                    || matches!(den, Expr::Mul(l, r)
                                        if matches!(**l, Expr::Const(_)) && **r == *c)
                            });
                            assert!(covered, "{}: denominator {den}", v.id());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn lemma_operator_membership_small_case() {
        let id = FamilyId::g2n1(6).unwrap();
        let alg = make_algebra(id);
        let space = solve_derivation_space(&DerivationProblem::half(&alg));
        for v in variants(id) {
            let prod = instantiate(&v, &sample_parameters(&v, 1, 5).unwrap()).unwrap();
            for i in 0..6 {
                let op = multiplication_operator(&prod, i).unwrap();
                assert!(
                    space.contains(&op).unwrap(),
                    "{} operator e{}",
                    v.id(),
                    i + 1
                );
            }
        }
    }
}
