//! The six families of quasi-filiform Lie algebras of maximum length.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{int, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum FamilyTag {
    G1N1,
    G2N1,
    G3N1,
    G1_7,
    G2_9,
    G3_11,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 6] = [
        FamilyTag::G1N1,
        FamilyTag::G2N1,
        FamilyTag::G3N1,
        FamilyTag::G1_7,
        FamilyTag::G2_9,
        FamilyTag::G3_11,
    ];

    /// Command-line spelling.
    pub fn key(self) -> &'static str {
        match self {
            FamilyTag::G1N1 => "g1n1",
            FamilyTag::G2N1 => "g2n1",
            FamilyTag::G3N1 => "g3n1",
            FamilyTag::G1_7 => "g1_7",
            FamilyTag::G2_9 => "g2_9",
            FamilyTag::G3_11 => "g3_11",
        }
    }

    /// Dimension for the sporadic algebras, `None` for the infinite series.
    pub fn fixed_dim(self) -> Option<usize> {
        match self {
            FamilyTag::G1_7 => Some(7),
            FamilyTag::G2_9 => Some(9),
            FamilyTag::G3_11 => Some(11),
            _ => None,
        }
    }

    pub fn min_dim(self) -> usize {
        match self {
            FamilyTag::G1N1 | FamilyTag::G2N1 => 5,
            FamilyTag::G3N1 => 7,
            other => other.fixed_dim().expect("sporadic family"),
        }
    }

    pub fn constraint(self) -> &'static str {
        match self {
            FamilyTag::G1N1 => "n ≥ 5, n odd",
            FamilyTag::G2N1 => "n ≥ 5",
            FamilyTag::G3N1 => "n ≥ 7",
            FamilyTag::G1_7 => "n = 7",
            FamilyTag::G2_9 => "n = 9",
            FamilyTag::G3_11 => "n = 11",
        }
    }
}

impl FromStr for FamilyTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyTag::ALL
            .into_iter()
            .find(|t| t.key().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidFamily(format!("unknown family {s:?}")))
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

/// A family together with a dimension satisfying its constraints.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FamilyId {
    tag: FamilyTag,
    n: usize,
}

impl FamilyId {
    /// Validates `n` against the family. Sporadic families accept `None` or
    /// their own dimension.
    pub fn new(tag: FamilyTag, n: Option<usize>) -> Result<Self> {
        if let Some(fixed) = tag.fixed_dim() {
            return match n {
                None => Ok(FamilyId { tag, n: fixed }),
                Some(m) if m == fixed => Ok(FamilyId { tag, n: fixed }),
                Some(m) => Err(Error::InvalidFamily(format!(
                    "{tag} has fixed dimension {fixed}, got n={m}"
                ))),
            };
        }
        let n = n.ok_or_else(|| Error::InvalidFamily(format!("{tag} requires --n")))?;
        if n < tag.min_dim() {
            return Err(Error::InvalidFamily(format!(
                "{tag} requires n ≥ {}, got n={n}",
                tag.min_dim()
            )));
        }
        if tag == FamilyTag::G1N1 && n % 2 == 0 {
            return Err(Error::InvalidFamily(format!(
                "{tag}: n must be odd, got n={n}"
            )));
        }
        Ok(FamilyId { tag, n })
    }

    pub fn g1n1(n: usize) -> Result<Self> {
        Self::new(FamilyTag::G1N1, Some(n))
    }

    pub fn g2n1(n: usize) -> Result<Self> {
        Self::new(FamilyTag::G2N1, Some(n))
    }

    pub fn g3n1(n: usize) -> Result<Self> {
        Self::new(FamilyTag::G3N1, Some(n))
    }

    pub fn g1_7() -> Self {
        FamilyId {
            tag: FamilyTag::G1_7,
            n: 7,
        }
    }

    pub fn g2_9() -> Self {
        FamilyId {
            tag: FamilyTag::G2_9,
            n: 9,
        }
    }

    pub fn g3_11() -> Self {
        FamilyId {
            tag: FamilyTag::G3_11,
            n: 11,
        }
    }

    pub fn tag(self) -> FamilyTag {
        self.tag
    }

    pub fn n(self) -> usize {
        self.n
    }

    /// Every valid id with `n ≤ n_max`; sporadic algebras always included.
    pub fn grid(n_max: usize) -> Vec<FamilyId> {
        let mut ids = Vec::new();
        for tag in [FamilyTag::G1N1, FamilyTag::G2N1, FamilyTag::G3N1] {
            ids.extend((tag.min_dim()..=n_max).filter_map(|n| Self::new(tag, Some(n)).ok()));
        }
        ids.extend([Self::g1_7(), Self::g2_9(), Self::g3_11()]);
        ids
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.tag.fixed_dim() {
            Some(_) => write!(f, "{}", self.tag),
            None => write!(f, "{}(n={})", self.tag, self.n),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyInfo {
    pub tag: FamilyTag,
    pub key: &'static str,
    pub constraint: &'static str,
    pub description: &'static str,
}

pub fn list_families() -> Vec<FamilyInfo> {
    let describe = |tag| match tag {
        FamilyTag::G1N1 => "[e1,ei]=e(i+1) for 2≤i≤n-2; [ei,e(n-i)]=(-1)^i en for 2≤i≤(n-1)/2",
        FamilyTag::G2N1 => "[e1,ei]=e(i+1) for 2≤i≤n-2; [ei,en]=e(i+2) for 2≤i≤n-3",
        FamilyTag::G3N1 => "g2n1 rows plus [e2,ei]=e(i+3) for 3≤i≤n-4",
        FamilyTag::G1_7 => "sporadic 7-dimensional algebra",
        FamilyTag::G2_9 => "sporadic 9-dimensional algebra",
        FamilyTag::G3_11 => "sporadic 11-dimensional algebra",
    };
    FamilyTag::ALL
        .into_iter()
        .map(|tag| FamilyInfo {
            tag,
            key: tag.key(),
            constraint: tag.constraint(),
            description: describe(tag),
        })
        .collect()
}

fn sign(i: usize) -> i64 {
    if i.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Accumulates `[e_i, e_j] = c e_k` rows with 1-based indices. Ranges are
/// inclusive and may be empty.
#[derive(Default)]
struct Table(Vec<(usize, usize, usize, Rational)>);

impl Table {
    fn push(&mut self, i: usize, j: usize, k: usize, c: i64) {
        self.0.push((i, j, k, int(c)));
    }

    /// `[e_1, e_i] = e_{i+1}` for `2 ≤ i ≤ last`.
    fn filiform(&mut self, last: usize) {
        for i in 2..=last {
            self.push(1, i, i + 1, 1);
        }
    }

    /// `[e_i, e_{top-i}] = (-1)^i e_top` for `2 ≤ i ≤ last`.
    fn sign_row(&mut self, top: usize, last: usize) {
        for i in 2..=last {
            self.push(i, top - i, top, sign(i));
        }
    }
}

pub fn make_algebra(id: FamilyId) -> LieAlgebra {
    let n = id.n;
    let mut t = Table::default();
    match id.tag {
        FamilyTag::G1N1 => {
            t.filiform(n - 2);
            t.sign_row(n, (n - 1) / 2);
        }
        FamilyTag::G2N1 => {
            t.filiform(n - 2);
            for i in 2..=n - 3 {
                t.push(i, n, i + 2, 1);
            }
        }
        FamilyTag::G3N1 => {
            t.filiform(n - 2);
            for i in 2..=n - 3 {
                t.push(i, n, i + 2, 1);
            }
            for i in 3..=n - 4 {
                t.push(2, i, i + 3, 1);
            }
        }
        FamilyTag::G1_7 => {
            t.filiform(5);
            for i in 3..=4 {
                t.push(2, i, i + 2, 1);
            }
            t.sign_row(7, 3);
        }
        FamilyTag::G2_9 => {
            t.filiform(7);
            for i in 3..=4 {
                t.push(2, i, i + 2, 1);
            }
            t.push(2, 5, 7, 3);
            t.push(2, 6, 8, 5);
            for i in 4..=5 {
                t.push(3, i, i + 3, -2);
            }
            t.sign_row(9, 4);
        }
        FamilyTag::G3_11 => {
            t.filiform(9);
            for i in 3..=4 {
                t.push(2, i, i + 2, 1);
            }
            for i in 6..=7 {
                t.push(2, i, i + 2, -1);
            }
            t.push(3, 7, 10, -1);
            for i in 4..=5 {
                t.push(3, i, i + 3, 1);
            }
            for i in 5..=6 {
                t.push(4, i, i + 4, 1);
            }
            t.sign_row(11, 5);
        }
    }
    let alg =
        LieAlgebra::from_table(id.to_string(), n, t.0).expect("catalog tables use valid indices");
    debug_assert!(alg.jacobi_check().passed(), "{id} violates Jacobi");
    alg
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn entries(g: &LieAlgebra) -> BTreeMap<(usize, usize), Vec<(usize, Rational)>> {
        g.brackets()
            .iter()
            .map(|(&(i, j), v)| {
                (
                    (i + 1, j + 1),
                    v.iter().map(|(&k, c)| (k + 1, c.clone())).collect(),
                )
            })
            .collect()
    }

    #[test]
    fn g1n1_n5_table() {
        let g = make_algebra(FamilyId::g1n1(5).unwrap());
        let expected: BTreeMap<_, _> = [
            ((1, 2), vec![(3, int(1))]),
            ((1, 3), vec![(4, int(1))]),
            ((2, 3), vec![(5, int(1))]),
        ]
        .into_iter()
        .collect();
        assert_eq!(entries(&g), expected);
    }

    #[test]
    fn g2_9_special_rows() {
        let e = entries(&make_algebra(FamilyId::g2_9()));
        assert_eq!(e[&(2, 5)], vec![(7, int(3))]);
        assert_eq!(e[&(2, 6)], vec![(8, int(5))]);
        assert_eq!(e[&(3, 4)], vec![(7, int(-2))]);
        assert_eq!(e[&(3, 6)], vec![(9, int(-1))]);
    }

    #[test]
    fn g3n1_n7_has_single_extra_row() {
        let e = entries(&make_algebra(FamilyId::g3n1(7).unwrap()));
        assert_eq!(e[&(2, 3)], vec![(6, int(1))]);
        assert!(!e.contains_key(&(2, 4)));
    }

    #[test]
    fn invalid_dimensions() {
        let err = FamilyId::g1n1(6).unwrap_err();
        assert!(err.to_string().contains("n must be odd"));
        assert!(FamilyId::g1n1(3).is_err());
        assert!(FamilyId::g2n1(4).is_err());
        assert!(FamilyId::g3n1(6).is_err());
        assert!(FamilyId::new(FamilyTag::G2_9, Some(8)).is_err());
        assert!(FamilyId::new(FamilyTag::G2N1, None).is_err());
        assert_eq!(FamilyId::new(FamilyTag::G3_11, None).unwrap().n(), 11);
    }

    #[test]
    fn family_listing() {
        let fams = list_families();
        assert_eq!(fams.len(), 6);
        let g3 = fams.iter().find(|f| f.tag == FamilyTag::G3N1).unwrap();
        assert!(g3.constraint.contains("n ≥ 7"));
        assert!(fams.iter().all(|f| f.constraint.starts_with("n ")));
    }

    #[test]
    fn g1n1_and_g2n1_share_filiform_rows() {
        for n in [5, 7, 9, 11] {
            let strip = |g: &LieAlgebra| {
                entries(g)
                    .into_iter()
                    .filter(|(_, v)| v.iter().all(|(k, _)| *k != n))
                    .filter(|((_, j), _)| *j != n)
                    .collect::<BTreeMap<_, _>>()
            };
            let a = strip(&make_algebra(FamilyId::g1n1(n).unwrap()));
            let b = strip(&make_algebra(FamilyId::g2n1(n).unwrap()));
            assert_eq!(a, b, "n={n}");
        }
    }

    #[test]
    fn parse_tags() {
        assert_eq!("G2N1".parse::<FamilyTag>().unwrap(), FamilyTag::G2N1);
        assert_eq!("g3_11".parse::<FamilyTag>().unwrap(), FamilyTag::G3_11);
        assert!("g4".parse::<FamilyTag>().is_err());
    }
}
