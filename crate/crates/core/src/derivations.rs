//! δ-derivations: linear maps with `φ([x,y]) = δ([φ(x),y] + [x,φ(y)])`.
//!
//! A linear map on `e1..en` is an `n×n` matrix whose column `j` is the image
//! of `e_j`. Spaces of maps are compared through the column-major
//! vectorization: coordinate `j*n + k` holds the `e_k` component of
//! `φ(e_j)` (0-based). Changing this order changes every canonical basis.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::catalog::{make_algebra, FamilyId, FamilyTag};
use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{equal_span, int, nullspace_of_rows, rat, Matrix, Rational, Subspace};

/// `n×n` matrix, column `j` = image of `e_j`.
pub type LinearMap = Matrix;

pub fn vectorize(map: &LinearMap) -> Vec<Rational> {
    let n = map.cols();
    (0..n)
        .flat_map(|j| (0..map.rows()).map(move |k| (j, k)))
        .map(|(j, k)| map[(k, j)].clone())
        .collect()
}

pub fn unvectorize(n: usize, v: &[Rational]) -> LinearMap {
    assert_eq!(v.len(), n * n, "vectorized map has wrong length");
    let mut m = Matrix::zeros(n, n);
    for j in 0..n {
        for k in 0..n {
            m[(k, j)] = v[j * n + k].clone();
        }
    }
    m
}

#[derive(Clone, Debug)]
pub struct DerivationProblem<'a> {
    pub algebra: &'a LieAlgebra,
    pub delta: Rational,
}

impl<'a> DerivationProblem<'a> {
    pub fn half(algebra: &'a LieAlgebra) -> Self {
        DerivationProblem {
            algebra,
            delta: rat(1, 2),
        }
    }

    pub fn new(algebra: &'a LieAlgebra, delta: Rational) -> Self {
        DerivationProblem { algebra, delta }
    }
}

/// A space of linear maps on an `n`-dimensional algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationSpace {
    algebra_dim: usize,
    space: Subspace,
}

impl DerivationSpace {
    pub fn from_maps(algebra_dim: usize, maps: &[LinearMap]) -> Result<Self> {
        let vectors = maps
            .iter()
            .map(|m| {
                if m.rows() != algebra_dim || m.cols() != algebra_dim {
                    return Err(Error::DimensionMismatch(format!(
                        "{}x{} map on a {algebra_dim}-dimensional algebra",
                        m.rows(),
                        m.cols()
                    )));
                }
                Ok(vectorize(m))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(DerivationSpace {
            algebra_dim,
            space: Subspace::span(algebra_dim * algebra_dim, vectors)?,
        })
    }

    pub fn algebra_dim(&self) -> usize {
        self.algebra_dim
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn subspace(&self) -> &Subspace {
        &self.space
    }

    pub fn basis_maps(&self) -> Vec<LinearMap> {
        self.space
            .basis()
            .iter()
            .map(|v| unvectorize(self.algebra_dim, v))
            .collect()
    }

    pub fn contains(&self, map: &LinearMap) -> Result<bool> {
        if map.rows() != self.algebra_dim || map.cols() != self.algebra_dim {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} map against a space of maps on dimension {}",
                map.rows(),
                map.cols(),
                self.algebra_dim
            )));
        }
        self.space.contains(&vectorize(map))
    }
}

/// Nonzero rows of the constraint system, plus the total row count.
fn constraint_rows(p: &DerivationProblem) -> (Vec<Vec<Rational>>, usize) {
    let alg = p.algebra;
    let n = alg.dim();
    let unknown = |j: usize, k: usize| j * n + k;
    let mut rows = Vec::new();
    let mut total = 0;
    for i in 0..n {
        for j in i + 1..n {
            // One block of n rows per pair, indexed by the output coordinate.
            let mut block = vec![vec![Rational::zero(); n * n]; n];
            for (m, c) in alg.basis_bracket(i, j) {
                for (k, row) in block.iter_mut().enumerate() {
                    row[unknown(*m, k)] += c;
                }
            }
            for l in 0..n {
                for (k, c) in alg.basis_bracket(l, j) {
                    block[*k][unknown(i, l)] -= &p.delta * c;
                }
                for (k, c) in alg.basis_bracket(i, l) {
                    block[*k][unknown(j, l)] -= &p.delta * c;
                }
            }
            total += n;
            rows.extend(block.into_iter().filter(|r| r.iter().any(|x| !x.is_zero())));
        }
    }
    (rows, total)
}

/// The linear system whose nullspace is the δ-derivation space: one row per
/// pair `i < j` and output coordinate `k`, in that order.
pub fn assemble_constraints(p: &DerivationProblem) -> Matrix {
    let alg = p.algebra;
    let n = alg.dim();
    let mut m = Matrix::zeros(n * (n.saturating_sub(1)) / 2 * n, n * n);
    let mut row = 0;
    for i in 0..n {
        for j in i + 1..n {
            for (mm, c) in alg.basis_bracket(i, j) {
                for k in 0..n {
                    m[(row + k, mm * n + k)] += c;
                }
            }
            for l in 0..n {
                for (k, c) in alg.basis_bracket(l, j) {
                    m[(row + k, i * n + l)] -= &p.delta * c;
                }
                for (k, c) in alg.basis_bracket(i, l) {
                    m[(row + k, j * n + l)] -= &p.delta * c;
                }
            }
            row += n;
        }
    }
    m
}

pub fn solve_derivation_space(p: &DerivationProblem) -> DerivationSpace {
    let n = p.algebra.dim();
    let (rows, _) = constraint_rows(p);
    DerivationSpace {
        algebra_dim: n,
        space: nullspace_of_rows(n * n, rows),
    }
}

/// Exhaustive check of the δ-derivation identity on basis pairs.
pub fn is_delta_derivation(alg: &LieAlgebra, map: &LinearMap, delta: &Rational) -> Result<bool> {
    let n = alg.dim();
    if map.rows() != n || map.cols() != n {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} map on a {n}-dimensional algebra",
            map.rows(),
            map.cols()
        )));
    }
    let images: Vec<Vec<Rational>> = (0..n).map(|j| map.column(j)).collect();
    for i in 0..n {
        for j in i + 1..n {
            let lhs = map.mul_vec(&alg.basis_bracket_dense(i, j))?;
            let a = alg.bracket_with_basis(&images[i], j);
            let b = alg.basis_bracket_with(i, &images[j]);
            for k in 0..n {
                if lhs[k] != delta * (&a[k] + &b[k]) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

pub fn is_half_derivation(alg: &LieAlgebra, map: &LinearMap) -> Result<bool> {
    is_delta_derivation(alg, map, &rat(1, 2))
}

/// Checks that every basis map sends `[L,L]` into itself and the center
/// into itself.
pub fn preserves_derived_and_center(alg: &LieAlgebra, space: &DerivationSpace) -> Result<bool> {
    let derived = alg.derived_subalgebra();
    let center = alg.center();
    for map in space.basis_maps() {
        if !derived.image(&map)?.is_subspace_of(&derived)? {
            return Ok(false);
        }
        if !center.image(&map)?.is_subspace_of(&center)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Builder for one closed-form map. Indices are 1-based as printed.
struct Phi {
    map: LinearMap,
}

impl Phi {
    fn new(n: usize) -> Self {
        Phi {
            map: Matrix::zeros(n, n),
        }
    }

    /// `φ(e_j)` gains `c e_k`.
    fn add(&mut self, j: usize, k: usize, c: Rational) {
        self.map[(k - 1, j - 1)] += c;
    }
}

/// A closed-form display: its free parameters and a map that is linear in
/// them.
struct Display {
    params: Vec<String>,
    build: Box<Builder>,
}

/// Maps a parameter lookup to the displayed map.
type Builder = dyn Fn(&dyn Fn(&str) -> Rational) -> LinearMap;

fn names(prefix: &str, idx: impl IntoIterator<Item = usize>) -> Vec<String> {
    idx.into_iter().map(|i| format!("{prefix}_{i}")).collect()
}

fn half() -> Rational {
    rat(1, 2)
}

fn sign(i: usize) -> Rational {
    if i.is_multiple_of(2) {
        int(1)
    } else {
        int(-1)
    }
}

fn display_for(id: FamilyId) -> Display {
    let n = id.n();
    match (id.tag(), n) {
        (FamilyTag::G1N1, 5) => Display {
            params: [names("alpha", 1..=5), names("beta", 1..=5)].concat(),
            build: Box::new(|p| {
                let a = |i: usize| p(&format!("alpha_{i}"));
                let b = |i: usize| p(&format!("beta_{i}"));
                let mut f = Phi::new(5);
                for i in 1..=5 {
                    f.add(1, i, a(i));
                    f.add(2, i, b(i));
                }
                f.add(3, 3, half() * (a(1) + b(2)));
                f.add(3, 4, half() * b(3));
                f.add(3, 5, -half() * a(3));
                f.add(4, 4, rat(1, 4) * (int(3) * a(1) + b(2)));
                f.add(4, 5, half() * a(2));
                f.add(5, 4, half() * b(1));
                f.add(5, 5, rat(1, 4) * (a(1) + int(3) * b(2)));
                f.map
            }),
        },
        (FamilyTag::G1N1, _) => Display {
            params: [names("alpha", 1..=n), names("beta", n - 2..=n)].concat(),
            build: Box::new(move |p| {
                let a = |i: usize| p(&format!("alpha_{i}"));
                let b = |i: usize| p(&format!("beta_{i}"));
                let mut f = Phi::new(n);
                for i in 1..=n {
                    f.add(1, i, a(i));
                }
                f.add(2, 2, a(1));
                for k in n - 2..=n {
                    f.add(2, k, b(k));
                }
                f.add(3, 3, a(1));
                f.add(3, n - 1, half() * b(n - 2));
                f.add(3, n, -half() * a(n - 2));
                for i in 4..=n - 1 {
                    f.add(i, i, a(1));
                    f.add(i, n, sign(i) * half() * a(n - i + 1));
                }
                f.add(n, n, a(1));
                f.map
            }),
        },
        (FamilyTag::G2N1, 5) => Display {
            params: [
                names("alpha", 1..=5),
                names("beta", 2..=5),
                names("gamma", [4]),
            ]
            .concat(),
            build: Box::new(|p| {
                let a = |i: usize| p(&format!("alpha_{i}"));
                let b = |i: usize| p(&format!("beta_{i}"));
                let g = |i: usize| p(&format!("gamma_{i}"));
                let mut f = Phi::new(5);
                for i in 1..=5 {
                    f.add(1, i, a(i));
                }
                for i in 2..=5 {
                    f.add(2, i, b(i));
                }
                f.add(3, 3, half() * (a(1) + b(2)));
                f.add(3, 4, half() * (b(3) - a(5)));
                f.add(4, 4, rat(1, 4) * (int(3) * a(1) + b(2)));
                f.add(5, 3, -a(2));
                f.add(5, 4, g(4));
                f.add(5, 5, half() * (int(3) * a(1) - b(2)));
                f.map
            }),
        },
        (FamilyTag::G2N1, 6) => Display {
            params: [
                names("alpha", 1..=6),
                names("beta", 4..=5),
                names("gamma", [5]),
            ]
            .concat(),
            build: Box::new(|p| {
                let a = |i: usize| p(&format!("alpha_{i}"));
                let b = |i: usize| p(&format!("beta_{i}"));
                let g = |i: usize| p(&format!("gamma_{i}"));
                let mut f = Phi::new(6);
                for i in 1..=6 {
                    f.add(1, i, a(i));
                }
                f.add(2, 2, a(1));
                f.add(2, 3, int(-3) * a(6));
                f.add(2, 4, b(4));
                f.add(2, 5, b(5));
                f.add(3, 3, a(1));
                f.add(3, 4, int(-2) * a(6));
                f.add(3, 5, half() * b(4));
                f.add(4, 4, a(1));
                f.add(4, 5, rat(-3, 2) * a(6));
                f.add(5, 5, a(1));
                f.add(6, 3, -a(2));
                f.add(6, 4, -a(3));
                f.add(6, 5, g(5));
                f.add(6, 6, a(1));
                f.map
            }),
        },
        (FamilyTag::G2N1, _) => Display {
            params: [
                names("alpha", 1..=n - 1),
                names("beta", n - 2..=n - 1),
                names("gamma", [n - 1]),
            ]
            .concat(),
            build: Box::new(move |p| {
                let a = |i: usize| p(&format!("alpha_{i}"));
                let b = |i: usize| p(&format!("beta_{i}"));
                let g = |i: usize| p(&format!("gamma_{i}"));
                let mut f = Phi::new(n);
                for i in 1..=n - 1 {
                    f.add(1, i, a(i));
                }
                f.add(2, 2, a(1));
                f.add(2, n - 2, b(n - 2));
                f.add(2, n - 1, b(n - 1));
                f.add(3, 3, a(1));
                f.add(3, n - 1, half() * b(n - 2));
                for i in 4..=n - 1 {
                    f.add(i, i, a(1));
                }
                for i in 3..=n - 2 {
                    f.add(n, i, -a(i - 1));
                }
                f.add(n, n - 1, g(n - 1));
                f.add(n, n, a(1));
                f.map
            }),
        },
        (FamilyTag::G3N1, 7) => Display {
            params: [
                names("alpha", 1..=6),
                names("beta", 5..=6),
                names("gamma", [6]),
            ]
            .concat(),
            build: Box::new(|p| {
                let a = |i: usize| p(&format!("alpha_{i}"));
                let b = |i: usize| p(&format!("beta_{i}"));
                let g = |i: usize| p(&format!("gamma_{i}"));
                let mut f = Phi::new(7);
                for i in 1..=6 {
                    f.add(1, i, a(i));
                }
                f.add(2, 2, a(1));
                f.add(2, 4, int(4) * a(2));
                f.add(2, 5, b(5));
                f.add(2, 6, b(6));
                f.add(3, 3, a(1));
                f.add(3, 5, int(2) * a(2));
                f.add(3, 6, half() * (b(5) - a(3)));
                f.add(4, 4, a(1));
                f.add(4, 6, rat(3, 2) * a(2));
                f.add(5, 5, a(1));
                f.add(6, 6, a(1));
                f.add(7, 3, -a(2));
                f.add(7, 4, -a(3));
                f.add(7, 5, -a(4));
                f.add(7, 6, g(6));
                f.add(7, 7, a(1));
                f.map
            }),
        },
        (FamilyTag::G3N1, _) => Display {
            params: [
                names("alpha", std::iter::once(1).chain(3..=n - 1)),
                names("beta", n - 2..=n - 1),
                names("gamma", [n - 1]),
            ]
            .concat(),
            build: Box::new(move |p| {
                let a = |i: usize| p(&format!("alpha_{i}"));
                let b = |i: usize| p(&format!("beta_{i}"));
                let g = |i: usize| p(&format!("gamma_{i}"));
                let mut f = Phi::new(n);
                f.add(1, 1, a(1));
                for i in 3..=n - 1 {
                    f.add(1, i, a(i));
                }
                f.add(2, 2, a(1));
                for i in 5..=n - 3 {
                    f.add(2, i, a(i - 2));
                }
                f.add(2, n - 2, b(n - 2));
                f.add(2, n - 1, b(n - 1));
                f.add(3, 3, a(1));
                f.add(3, n - 1, half() * (b(n - 2) - a(n - 4)));
                for i in 4..=n - 1 {
                    f.add(i, i, a(1));
                }
                for i in 4..=n - 2 {
                    f.add(n, i, -a(i - 1));
                }
                f.add(n, n - 1, g(n - 1));
                f.add(n, n, a(1));
                f.map
            }),
        },
        (FamilyTag::G1_7, _) => Display {
            params: [names("alpha", [1, 3, 4, 5, 6, 7]), names("beta", 5..=7)].concat(),
            build: Box::new(|p| {
                let a = |i: usize| p(&format!("alpha_{i}"));
                let b = |i: usize| p(&format!("beta_{i}"));
                let mut f = Phi::new(7);
                f.add(1, 1, a(1));
                for i in 3..=7 {
                    f.add(1, i, a(i));
                }
                f.add(2, 2, a(1));
                f.add(2, 4, rat(-1, 3) * a(3));
                for i in 5..=7 {
                    f.add(2, i, b(i));
                }
                f.add(3, 3, a(1));
                f.add(3, 5, rat(-2, 3) * a(3));
                f.add(3, 6, half() * (b(5) - a(4)));
                f.add(3, 7, -half() * a(5));
                f.add(4, 4, a(1));
                f.add(4, 6, rat(-1, 3) * a(3));
                f.add(4, 7, half() * a(4));
                f.add(5, 5, a(1));
                f.add(5, 7, -half() * a(3));
                f.add(6, 6, a(1));
                f.add(7, 7, a(1));
                f.map
            }),
        },
        (FamilyTag::G2_9, _) => Display {
            params: [names("alpha", [1, 5, 6, 7, 8, 9]), names("beta", 7..=9)].concat(),
            build: Box::new(|p| {
                let a = |i: usize| p(&format!("alpha_{i}"));
                let b = |i: usize| p(&format!("beta_{i}"));
                let mut f = Phi::new(9);
                f.add(1, 1, a(1));
                for i in 5..=9 {
                    f.add(1, i, a(i));
                }
                f.add(2, 2, a(1));
                f.add(2, 6, rat(1, 3) * a(5));
                for i in 7..=9 {
                    f.add(2, i, b(i));
                }
                f.add(3, 3, a(1));
                f.add(3, 7, rat(-4, 3) * a(5));
                f.add(3, 8, half() * (b(7) - int(5) * a(6)));
                f.add(3, 9, -half() * a(7));
                f.add(4, 4, a(1));
                f.add(4, 8, rat(1, 3) * a(5));
                f.add(4, 9, half() * a(6));
                f.add(5, 5, a(1));
                f.add(5, 9, -half() * a(5));
                for i in 6..=9 {
                    f.add(i, i, a(1));
                }
                f.map
            }),
        },
        (FamilyTag::G3_11, _) => Display {
            params: [
                names("alpha", [1, 6, 7, 8, 9, 10, 11]),
                names("beta", 9..=11),
            ]
            .concat(),
            build: Box::new(|p| {
                let a = |i: usize| p(&format!("alpha_{i}"));
                let b = |i: usize| p(&format!("beta_{i}"));
                let mut f = Phi::new(11);
                f.add(1, 1, a(1));
                for i in 6..=11 {
                    f.add(1, i, a(i));
                }
                f.add(2, 2, a(1));
                f.add(2, 7, -a(6));
                f.add(2, 8, -a(7));
                for i in 9..=11 {
                    f.add(2, i, b(i));
                }
                f.add(3, 3, a(1));
                f.add(3, 10, half() * b(9));
                f.add(3, 11, -half() * a(9));
                f.add(4, 4, a(1));
                f.add(4, 10, half() * a(7));
                f.add(4, 11, half() * a(8));
                f.add(5, 5, a(1));
                f.add(5, 10, -half() * a(6));
                f.add(5, 11, -half() * a(7));
                f.add(6, 6, a(1));
                f.add(6, 11, half() * a(6));
                for i in 7..=11 {
                    f.add(i, i, a(1));
                }
                f.map
            }),
        },
    }
}

/// Free parameter names of the closed-form half-derivation display.
pub fn predicted_parameters(id: FamilyId) -> Vec<String> {
    display_for(id).params
}

/// One map per free parameter of the closed-form display (that parameter 1,
/// the rest 0), in display order.
pub fn predicted_maps(id: FamilyId) -> Vec<LinearMap> {
    let display = display_for(id);
    display
        .params
        .iter()
        .map(|active| {
            let lookup = |name: &str| {
                if name == active {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            };
            (display.build)(&lookup)
        })
        .collect()
}

pub fn predicted_space(id: FamilyId) -> DerivationSpace {
    DerivationSpace::from_maps(id.n(), &predicted_maps(id)).expect("display maps are n×n")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub family: String,
    pub n: usize,
    pub solved_dim: usize,
    pub predicted_dim: usize,
    pub parameter_count: usize,
    pub equal: bool,
    /// Solved basis vectors outside the predicted span, vectorized.
    #[serde(serialize_with = "crate::io::serialize_rational_matrix")]
    pub only_solved: Vec<Vec<Rational>>,
    /// Predicted basis vectors outside the solved span, vectorized.
    #[serde(serialize_with = "crate::io::serialize_rational_matrix")]
    pub only_predicted: Vec<Vec<Rational>>,
}

/// Brute-force nullspace against the closed-form display.
pub fn verify_theorem(id: FamilyId) -> TheoremReport {
    let alg = make_algebra(id);
    let solved = solve_derivation_space(&DerivationProblem::half(&alg));
    let predicted = predicted_space(id);
    let outside = |a: &DerivationSpace, b: &DerivationSpace| -> Vec<Vec<Rational>> {
        a.subspace()
            .basis()
            .iter()
            .filter(|v| !b.subspace().contains(v).expect("same ambient dimension"))
            .cloned()
            .collect()
    };
    TheoremReport {
        family: id.tag().key().to_string(),
        n: id.n(),
        solved_dim: solved.dim(),
        predicted_dim: predicted.dim(),
        parameter_count: predicted_parameters(id).len(),
        equal: equal_span(solved.subspace(), predicted.subspace()).expect("same ambient dimension"),
        only_solved: outside(&solved, &predicted),
        only_predicted: outside(&predicted, &solved),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{nullspace, Matrix};

    fn g(id: FamilyId) -> LieAlgebra {
        make_algebra(id)
    }

    #[test]
    fn vectorization_is_column_major() {
        let mut m = Matrix::zeros(2, 2);
        m[(1, 0)] = int(7); // φ(e1) has e2 coefficient 7
        let v = vectorize(&m);
        assert_eq!(v[1], int(7));
        assert_eq!(unvectorize(2, &v), m);
    }

    #[test]
    fn abelian_constraints_vanish() {
        let a = LieAlgebra::abelian(3);
        let m = assemble_constraints(&DerivationProblem::half(&a));
        assert_eq!(m.rows(), 3 * 3);
        assert!(m.is_zero());
        assert_eq!(
            solve_derivation_space(&DerivationProblem::half(&a)).dim(),
            9
        );
    }

    #[test]
    fn dense_and_sparse_assembly_agree() {
        for id in [
            FamilyId::g1n1(5).unwrap(),
            FamilyId::g3n1(7).unwrap(),
            FamilyId::g1_7(),
        ] {
            let alg = g(id);
            let p = DerivationProblem::half(&alg);
            let dense = assemble_constraints(&p);
            let n = id.n();
            assert_eq!(dense.rows(), n * (n - 1) / 2 * n);
            let (_, total) = constraint_rows(&p);
            assert_eq!(total, dense.rows());
            assert_eq!(nullspace(&dense), *solve_derivation_space(&p).subspace());
        }
    }

    #[test]
    fn g1n1_5_has_ten_dimensional_space() {
        let alg = g(FamilyId::g1n1(5).unwrap());
        let m = assemble_constraints(&DerivationProblem::half(&alg));
        assert_eq!(nullspace(&m).dim(), 10);
    }

    #[test]
    fn identity_and_zero_maps() {
        let alg = g(FamilyId::g2n1(7).unwrap());
        assert!(is_half_derivation(&alg, &Matrix::identity(7)).unwrap());
        assert!(is_half_derivation(&alg, &Matrix::zeros(7, 7)).unwrap());
        assert!(!is_delta_derivation(&alg, &Matrix::identity(7), &int(1)).unwrap());
        assert!(is_half_derivation(&alg, &Matrix::identity(6)).is_err());
    }

    #[test]
    fn projection_onto_e1_is_not_half_derivation() {
        let alg = g(FamilyId::g1n1(5).unwrap());
        let mut m = Matrix::zeros(5, 5);
        m[(0, 0)] = int(1);
        assert!(!is_half_derivation(&alg, &m).unwrap());
    }

    #[test]
    fn predicted_parameter_counts() {
        assert_eq!(predicted_parameters(FamilyId::g1n1(9).unwrap()).len(), 12);
        assert_eq!(predicted_parameters(FamilyId::g2n1(5).unwrap()).len(), 10);
        assert_eq!(predicted_parameters(FamilyId::g3n1(8).unwrap()).len(), 9);
    }

    #[test]
    fn solved_maps_satisfy_identity() {
        let alg = g(FamilyId::g2_9());
        let space = solve_derivation_space(&DerivationProblem::half(&alg));
        for map in space.basis_maps() {
            assert!(is_half_derivation(&alg, &map).unwrap());
        }
    }

    #[test]
    fn ordinary_derivations_of_g1n1_5() {
        // δ = 1: derivations; identity is not one for a non-abelian algebra.
        let alg = g(FamilyId::g1n1(5).unwrap());
        let space = solve_derivation_space(&DerivationProblem::new(&alg, int(1)));
        assert!(!space.contains(&Matrix::identity(5)).unwrap());
        for map in space.basis_maps() {
            assert!(is_delta_derivation(&alg, &map, &int(1)).unwrap());
        }
    }
}
