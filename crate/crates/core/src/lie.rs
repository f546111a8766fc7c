//! Finite-dimensional Lie algebras given by structure constants on a fixed
//! basis `e1..en`.
//!
//! Only brackets `[e_i, e_j]` with `i < j` are stored; the rest follow from
//! antisymmetry. Indices are 0-based in this API and 1-based in anything
//! printed or serialized.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{nullspace, Matrix, Rational, Subspace};
use crate::witness::CheckReport;

/// Sparse coordinate vector, basis index to nonzero coefficient.
pub type SparseVector = BTreeMap<usize, Rational>;

#[derive(Clone, Debug)]
pub struct LieAlgebra {
    name: String,
    dim: usize,
    brackets: BTreeMap<(usize, usize), SparseVector>,
    // [e_i, e_j] for every ordered pair, row-major, antisymmetric completion.
    products: Vec<Vec<(usize, Rational)>>,
}

impl PartialEq for LieAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.dim == other.dim && self.brackets == other.brackets
    }
}

impl Eq for LieAlgebra {}

/// Dimensions of the lower central series `L^1 ⊇ L^2 ⊇ ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowerCentralSeries {
    pub terms: Vec<Subspace>,
    /// First `k` (1-based) with `L^k = 0`, if the series reaches zero.
    pub nilindex: Option<usize>,
}

impl LowerCentralSeries {
    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Subspace::dim).collect()
    }
}

impl LieAlgebra {
    /// Builds an algebra from `(i, j, k, c)` entries meaning `[e_i, e_j]`
    /// gains `c e_k`, all indices 1-based with `i < j`. Repeated pairs
    /// accumulate.
    pub fn from_table(
        name: impl Into<String>,
        dim: usize,
        entries: impl IntoIterator<Item = (usize, usize, usize, Rational)>,
    ) -> Result<Self> {
        let mut brackets: BTreeMap<(usize, usize), SparseVector> = BTreeMap::new();
        for (i, j, k, c) in entries {
            for idx in [i, j, k] {
                if idx == 0 || idx > dim {
                    return Err(Error::IndexOutOfRange(format!(
                        "basis index {idx} outside 1..={dim}"
                    )));
                }
            }
            if i >= j {
                return Err(Error::IndexOutOfRange(format!(
                    "bracket [e{i}, e{j}] must have i < j"
                )));
            }
            let slot = brackets.entry((i - 1, j - 1)).or_default();
            let coeff = slot.entry(k - 1).or_insert_with(Rational::zero);
            *coeff += c;
            if coeff.is_zero() {
                slot.remove(&(k - 1));
            }
        }
        brackets.retain(|_, v| !v.is_empty());
        Ok(Self::from_brackets(name.into(), dim, brackets))
    }

    fn from_brackets(
        name: String,
        dim: usize,
        brackets: BTreeMap<(usize, usize), SparseVector>,
    ) -> Self {
        let mut products = vec![Vec::new(); dim * dim];
        for (&(i, j), v) in &brackets {
            products[i * dim + j] = v.iter().map(|(&k, c)| (k, c.clone())).collect();
            products[j * dim + i] = v.iter().map(|(&k, c)| (k, -c.clone())).collect();
        }
        LieAlgebra {
            name,
            dim,
            brackets,
            products,
        }
    }

    pub fn abelian(dim: usize) -> Self {
        Self::from_brackets(format!("abelian{dim}"), dim, BTreeMap::new())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Stored brackets, `(i, j)` 0-based with `i < j`.
    pub fn brackets(&self) -> &BTreeMap<(usize, usize), SparseVector> {
        &self.brackets
    }

    pub fn is_abelian(&self) -> bool {
        self.brackets.is_empty()
    }

    /// `[e_i, e_j]` as sparse `(k, c)` pairs, 0-based.
    pub fn basis_bracket(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.products[i * self.dim + j]
    }

    pub fn basis_bracket_dense(&self, i: usize, j: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for (k, c) in self.basis_bracket(i, j) {
            out[*k] = c.clone();
        }
        out
    }

    fn check_len(&self, v: &[Rational]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} in a {}-dimensional algebra",
                v.len(),
                self.dim
            )));
        }
        Ok(())
    }

    /// Bilinear extension of the bracket table.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>> {
        self.check_len(x)?;
        self.check_len(y)?;
        let mut out = vec![Rational::zero(); self.dim];
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let coeff = xi * yj;
                for (k, c) in self.basis_bracket(i, j) {
                    out[*k] += &coeff * c;
                }
            }
        }
        Ok(out)
    }

    /// `[v, e_j]` for a dense `v`.
    pub fn bracket_with_basis(&self, v: &[Rational], j: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for (i, vi) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (k, c) in self.basis_bracket(i, j) {
                out[*k] += vi * c;
            }
        }
        out
    }

    /// `[e_i, v]` for a dense `v`.
    pub fn basis_bracket_with(&self, i: usize, v: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for (j, vj) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (k, c) in self.basis_bracket(i, j) {
                out[*k] += vj * c;
            }
        }
        out
    }

    /// Jacobi identity on every basis triple `i < j < k`.
    pub fn jacobi_check(&self) -> CheckReport {
        let mut report = CheckReport::new("jacobi");
        let n = self.dim;
        for i in 0..n {
            for j in i + 1..n {
                let ij = self.basis_bracket_dense(i, j);
                for k in j + 1..n {
                    let jk = self.basis_bracket_dense(j, k);
                    let ki = self.basis_bracket_dense(k, i);
                    let mut sum = self.bracket_with_basis(&ij, k);
                    for (s, t) in sum.iter_mut().zip(self.bracket_with_basis(&jk, i)) {
                        *s += t;
                    }
                    for (s, t) in sum.iter_mut().zip(self.bracket_with_basis(&ki, j)) {
                        *s += t;
                    }
                    report.record(&[i, j, k], sum);
                }
            }
        }
        report
    }

    /// `L^1 = L`, `L^{k+1} = [L^k, L]`, until the dimension hits zero or
    /// stops dropping.
    pub fn lower_central_series(&self) -> LowerCentralSeries {
        let mut terms = vec![Subspace::full(self.dim)];
        loop {
            let current = terms.last().expect("series starts non-empty");
            if current.dim() == 0 {
                let nilindex = Some(terms.len());
                return LowerCentralSeries { terms, nilindex };
            }
            let spanning: Vec<Vec<Rational>> = current
                .basis()
                .iter()
                .flat_map(|v| (0..self.dim).map(move |j| self.bracket_with_basis(v, j)))
                .collect();
            let next = Subspace::span(self.dim, spanning).expect("bracket keeps dimension");
            if next.dim() == current.dim() {
                return LowerCentralSeries {
                    terms,
                    nilindex: None,
                };
            }
            terms.push(next);
        }
    }

    pub fn nilindex(&self) -> Option<usize> {
        self.lower_central_series().nilindex
    }

    /// `[L, L]`.
    pub fn derived_subalgebra(&self) -> Subspace {
        let vectors = self.brackets.values().map(|v| {
            let mut d = vec![Rational::zero(); self.dim];
            for (k, c) in v {
                d[*k] = c.clone();
            }
            d
        });
        Subspace::span(self.dim, vectors.collect()).expect("bracket keeps dimension")
    }

    /// `{x : [x, e_i] = 0 for all i}`.
    pub fn center(&self) -> Subspace {
        let n = self.dim;
        let mut m = Matrix::zeros(n * n, n);
        for i in 0..n {
            for x in 0..n {
                for (k, c) in self.basis_bracket(x, i) {
                    m[(i * n + k, x)] = c.clone();
                }
            }
        }
        nullspace(&m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, Subspace};

    fn e(n: usize, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); n];
        v[i - 1] = int(1);
        v
    }

    fn g1_5() -> LieAlgebra {
        LieAlgebra::from_table(
            "g1_5",
            5,
            [(1, 2, 3, int(1)), (1, 3, 4, int(1)), (2, 3, 5, int(1))],
        )
        .unwrap()
    }

    #[test]
    fn bracket_on_basis() {
        let g = g1_5();
        assert_eq!(g.bracket(&e(5, 1), &e(5, 2)).unwrap(), e(5, 3));
        assert_eq!(g.bracket(&e(5, 2), &e(5, 3)).unwrap(), e(5, 5));
        let minus_e5: Vec<_> = e(5, 5).into_iter().map(|x| -x).collect();
        assert_eq!(g.bracket(&e(5, 3), &e(5, 2)).unwrap(), minus_e5);
        assert_eq!(
            g.bracket(&e(5, 1), &e(5, 1)).unwrap(),
            vec![Rational::zero(); 5]
        );
        assert!(g.bracket(&e(4, 1), &e(5, 1)).is_err());
    }

    #[test]
    fn table_validation() {
        assert!(LieAlgebra::from_table("x", 3, [(2, 2, 1, int(1))]).is_err());
        assert!(LieAlgebra::from_table("x", 3, [(2, 1, 1, int(1))]).is_err());
        assert!(LieAlgebra::from_table("x", 3, [(1, 4, 1, int(1))]).is_err());
        let cancelled =
            LieAlgebra::from_table("x", 3, [(1, 2, 3, int(1)), (1, 2, 3, int(-1))]).unwrap();
        assert!(cancelled.is_abelian());
    }

    #[test]
    fn jacobi_small_cases() {
        assert!(g1_5().jacobi_check().passed());
        assert_eq!(g1_5().jacobi_check().tuples_checked, 10);
        let two = LieAlgebra::from_table("two", 2, [(1, 2, 1, int(1)), (1, 2, 2, int(1))]).unwrap();
        let r = two.jacobi_check();
        assert!(r.passed());
        assert_eq!(r.tuples_checked, 0);
    }

    #[test]
    fn jacobi_failure_has_witness() {
        // J(1,2,3) = [e1,e3] + [e2,e1] + [-e3,e2] = -e1 + e2 + e3
        let g = LieAlgebra::from_table(
            "bad",
            3,
            [(1, 2, 1, int(1)), (2, 3, 2, int(1)), (1, 3, 3, int(1))],
        )
        .unwrap();
        let r = g.jacobi_check();
        assert!(!r.passed());
        assert_eq!(r.witness().unwrap().indices, vec![1, 2, 3]);
    }

    #[test]
    fn lower_central_series_g1_5() {
        let lcs = g1_5().lower_central_series();
        assert_eq!(lcs.dims(), vec![5, 3, 2, 0]);
        assert_eq!(lcs.nilindex, Some(4));
    }

    #[test]
    fn abelian_cases() {
        let a = LieAlgebra::abelian(3);
        let lcs = a.lower_central_series();
        assert_eq!(lcs.dims(), vec![3, 0]);
        assert_eq!(lcs.nilindex, Some(2));
        assert_eq!(a.center(), Subspace::full(3));
    }

    #[test]
    fn non_nilpotent_series_stabilizes() {
        let g = LieAlgebra::from_table("aff", 2, [(1, 2, 2, int(1))]).unwrap();
        let lcs = g.lower_central_series();
        assert_eq!(lcs.dims(), vec![2, 1]);
        assert_eq!(lcs.nilindex, None);
    }

    #[test]
    fn center_g1_5() {
        let z = g1_5().center();
        let expected = Subspace::span(5, vec![e(5, 4), e(5, 5)]).unwrap();
        assert_eq!(z, expected);
    }
}
