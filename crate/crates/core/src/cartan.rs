//! Cartan data and the weight/coweight lattices.
//!
//! Conventions: `a[i][j] = <alpha_i^vee, alpha_j>`. Weights are stored in the
//! fundamental-weight basis, so `alpha_j` is column `j` of the Cartan matrix.
//! Coweights are stored in the simple-coroot basis; with that choice
//! `<alpha_i^vee, omega_j> = delta_ij` and the pairing is the dot product.
//! Indices are 0-based internally and 1-based at every external surface.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{MvError, Result};

/// Finite Dynkin types accepted by the library (G2 is rejected).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CartanKind {
    pub kind: Family,
    pub rank: usize,
}

impl CartanKind {
    pub fn new(kind: Family, rank: usize) -> Self {
        Self { kind, rank }
    }
}

impl fmt::Display for CartanKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.kind, self.rank)
    }
}

impl FromStr for CartanKind {
    type Err = MvError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(|| MvError::UnknownType(s.to_string()))?;
        let rank: usize = chars.as_str().parse().map_err(|_| MvError::UnknownType(s.to_string()))?;
        let kind = match letter.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => return Err(MvError::G2Unsupported),
            _ => return Err(MvError::UnknownType(s.to_string())),
        };
        Ok(Self { kind, rank })
    }
}

/// A weight in the fundamental-weight basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

/// A coweight in the simple-coroot basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coweight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Self(vec![0; rank])
    }

    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Self(v)
    }
}

impl Coweight {
    pub fn zero(rank: usize) -> Self {
        Self(vec![0; rank])
    }

    pub fn simple_coroot(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Self(v)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn add(&self, other: &Coweight) -> Coweight {
        Coweight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Coweight) -> Coweight {
        Coweight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, c: i64) -> Coweight {
        Coweight(self.0.iter().map(|a| a * c).collect())
    }

    /// True when every coordinate is nonnegative, i.e. the coweight lies in `Q^vee_+`.
    pub fn in_positive_cone(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }
}

/// `<coweight, weight>`.
pub fn pair(c: &Coweight, w: &Weight) -> i64 {
    c.0.iter().zip(&w.0).map(|(a, b)| a * b).sum()
}

/// Validated Cartan data together with its positive roots.
#[derive(Clone, Debug)]
pub struct CartanData {
    kind: CartanKind,
    a: Vec<Vec<i64>>,
    /// Positive roots in simple-root coordinates.
    positive_roots: Vec<Vec<i64>>,
}

impl PartialEq for CartanData {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}
impl Eq for CartanData {}

impl Serialize for CartanData {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.kind.serialize(s)
    }
}

impl<'de> Deserialize<'de> for CartanData {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let kind = CartanKind::deserialize(d)?;
        CartanData::new(kind).map_err(serde::de::Error::custom)
    }
}

fn standard_matrix(kind: CartanKind) -> Result<Vec<Vec<i64>>> {
    let n = kind.rank;
    let bad = || MvError::UnknownType(kind.to_string());
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let link = |a: &mut Vec<Vec<i64>>, i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match kind.kind {
        Family::A => {
            if n < 1 {
                return Err(bad());
            }
            for i in 0..n.saturating_sub(1) {
                link(&mut a, i, i + 1);
            }
        }
        Family::B | Family::C => {
            if n < 2 {
                return Err(bad());
            }
            for i in 0..n - 1 {
                link(&mut a, i, i + 1);
            }
            if kind.kind == Family::B {
                // alpha_n short
                a[n - 1][n - 2] = -2;
            } else {
                a[n - 2][n - 1] = -2;
            }
        }
        Family::D => {
            if n < 4 {
                return Err(bad());
            }
            for i in 0..n - 2 {
                link(&mut a, i, i + 1);
            }
            link(&mut a, n - 3, n - 1);
        }
        Family::E => {
            if !(6..=8).contains(&n) {
                return Err(bad());
            }
            link(&mut a, 0, 2);
            link(&mut a, 1, 3);
            for i in 2..n - 1 {
                link(&mut a, i, i + 1);
            }
        }
        Family::F => {
            if n != 4 {
                return Err(bad());
            }
            link(&mut a, 0, 1);
            link(&mut a, 1, 2);
            link(&mut a, 2, 3);
            a[2][1] = -2;
        }
    }
    Ok(a)
}

impl CartanData {
    /// Standard Cartan matrix of the given type.
    pub fn new(kind: CartanKind) -> Result<Self> {
        let a = standard_matrix(kind)?;
        Self::from_matrix(kind, a)
    }

    pub fn parse(label: &str) -> Result<Self> {
        Self::new(label.parse()?)
    }

    /// Builds data from an explicit matrix, enforcing the crystallographic
    /// conditions and rejecting any G2 edge.
    #[allow(clippy::needless_range_loop)]
    pub fn from_matrix(kind: CartanKind, a: Vec<Vec<i64>>) -> Result<Self> {
        let n = a.len();
        if n != kind.rank || a.iter().any(|r| r.len() != n) {
            return Err(MvError::InvalidArgument("Cartan matrix shape".into()));
        }
        for i in 0..n {
            if a[i][i] != 2 {
                return Err(MvError::InvalidArgument(format!("a[{i}][{i}] != 2")));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                if a[i][j] > 0 || ((a[i][j] == 0) != (a[j][i] == 0)) {
                    return Err(MvError::InvalidArgument(format!("bad off-diagonal at ({i},{j})")));
                }
                let p = a[i][j] * a[j][i];
                if p == 3 {
                    return Err(MvError::G2Unsupported);
                }
                if p > 2 {
                    return Err(MvError::InvalidArgument(format!("not finite type at ({i},{j})")));
                }
            }
        }
        let positive_roots = positive_roots(&a)?;
        Ok(Self { kind, a, positive_roots })
    }

    pub fn kind(&self) -> CartanKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.kind.rank
    }

    /// `a_ij = <alpha_i^vee, alpha_j>`.
    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.a[i][j]
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.a
    }

    /// Simple root `alpha_j` in the fundamental-weight basis.
    pub fn simple_root(&self, j: usize) -> Weight {
        Weight((0..self.rank()).map(|k| self.a[k][j]).collect())
    }

    pub fn simple_coroot(&self, i: usize) -> Coweight {
        Coweight::simple_coroot(self.rank(), i)
    }

    pub fn fundamental_weight(&self, i: usize) -> Weight {
        Weight::fundamental(self.rank(), i)
    }

    /// `s_i(beta) = beta - <alpha_i^vee, beta> alpha_i`.
    pub fn reflect(&self, i: usize, beta: &Weight) -> Weight {
        let c = beta.0[i];
        Weight((0..self.rank()).map(|k| beta.0[k] - c * self.a[k][i]).collect())
    }

    /// `s_i(beta) = beta - <beta, alpha_i> alpha_i^vee` on coweights.
    pub fn reflect_coweight(&self, i: usize, beta: &Coweight) -> Coweight {
        let c: i64 = (0..self.rank()).map(|k| beta.0[k] * self.a[k][i]).sum();
        let mut out = beta.clone();
        out.0[i] -= c;
        out
    }

    /// Positive roots in simple-root coordinates.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// Converts a root given in simple-root coordinates to the weight basis.
    pub fn root_to_weight(&self, beta: &[i64]) -> Weight {
        Weight((0..self.rank()).map(|k| (0..self.rank()).map(|j| self.a[k][j] * beta[j]).sum()).collect())
    }

    /// `<coweight, alpha_j>`.
    pub fn pair_with_root(&self, c: &Coweight, j: usize) -> i64 {
        (0..self.rank()).map(|k| c.0[k] * self.a[k][j]).sum()
    }
}

fn positive_roots(a: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    let n = a.len();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut stack: Vec<Vec<i64>> = Vec::new();
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        seen.insert(e.clone());
        stack.push(e);
    }
    while let Some(beta) = stack.pop() {
        for i in 0..n {
            let c: i64 = (0..n).map(|k| a[i][k] * beta[k]).sum();
            let mut r = beta.clone();
            r[i] -= c;
            if r.iter().all(|&x| x >= 0) && r.iter().any(|&x| x > 0) && seen.insert(r.clone()) {
                if seen.len() > 10_000 {
                    return Err(MvError::InvalidArgument("root system is not finite".into()));
                }
                stack.push(r);
            }
        }
    }
    let mut roots: Vec<Vec<i64>> = seen.into_iter().collect();
    roots.sort_by(|x, y| {
        let hx: i64 = x.iter().sum();
        let hy: i64 = y.iter().sum();
        hx.cmp(&hy).then_with(|| x.cmp(y))
    });
    Ok(roots)
}
