//! Square matrices over a [`Ring`], with elimination over [`RatFunc`].

use std::fmt;

use super::poly::{RatFunc, Ring};
use crate::error::{MvError, Result};

/// Guard against runaway degrees in elimination.
pub const MAX_DEGREE: usize = 4096;

#[derive(Clone, Debug, PartialEq)]
pub struct Mat<R> {
    n: usize,
    e: Vec<R>,
}

pub type MatrixRF = Mat<RatFunc>;

impl<R: Ring> Mat<R> {
    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { R::one() } else { R::zero() })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> R) -> Self {
        let e = (0..n * n).map(|k| f(k / n, k % n)).collect();
        Self { n, e }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.e[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: R) {
        self.e[i * self.n + j] = x;
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.n;
        Self::from_fn(n, |i, j| {
            (0..n).fold(R::zero(), |acc, k| {
                let a = self.get(i, k);
                if a.is_zero() {
                    acc
                } else {
                    acc.add(&a.mul(other.get(k, j)))
                }
            })
        })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    /// Determinant of the submatrix on `rows` x `cols` (Laplace expansion).
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> R {
        assert_eq!(rows.len(), cols.len());
        if rows.is_empty() {
            return R::one();
        }
        let mut acc = R::zero();
        for (k, &c) in cols.iter().enumerate() {
            let a = self.get(rows[0], c);
            if a.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().enumerate().filter(|&(m, _)| m != k).map(|(_, &c)| c).collect();
            let term = a.mul(&self.minor(&rows[1..], &rest));
            acc = if k % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        acc
    }

    pub fn det(&self) -> R {
        let all: Vec<usize> = (0..self.n).collect();
        self.minor(&all, &all)
    }

    pub fn is_unit_upper(&self) -> bool {
        (0..self.n).all(|i| {
            (0..self.n).all(|j| match i.cmp(&j) {
                std::cmp::Ordering::Equal => *self.get(i, j) == R::one(),
                std::cmp::Ordering::Greater => self.get(i, j).is_zero(),
                std::cmp::Ordering::Less => true,
            })
        })
    }
}

fn guard(x: &RatFunc) -> Result<()> {
    if x.degree() > MAX_DEGREE {
        return Err(MvError::DegreeBound(x.degree()));
    }
    Ok(())
}

impl MatrixRF {
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_fn(rows.len(), |i, j| RatFunc::from_int(rows[i][j]))
    }

    /// Gauss-Jordan inverse.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.n;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for k in 0..n {
            let p = (k..n).find(|&r| !a.get(r, k).is_zero()).ok_or(MvError::Singular)?;
            if p != k {
                for j in 0..n {
                    a.e.swap(p * n + j, k * n + j);
                    inv.e.swap(p * n + j, k * n + j);
                }
            }
            let piv = a.get(k, k).inv()?;
            for j in 0..n {
                a.set(k, j, a.get(k, j).mul(&piv));
                inv.set(k, j, inv.get(k, j).mul(&piv));
            }
            for r in (0..n).filter(|&r| r != k) {
                let f = a.get(r, k).clone();
                if f.is_zero() {
                    continue;
                }
                for j in 0..n {
                    a.set(r, j, a.get(r, j).sub(&f.mul(a.get(k, j))));
                    let x = inv.get(r, j).sub(&f.mul(inv.get(k, j)));
                    guard(&x)?;
                    inv.set(r, j, x);
                }
            }
        }
        Ok(inv)
    }

    /// The unit upper triangular `U` in `self = L U` with `L` lower
    /// triangular, by elimination without pivoting.
    pub fn lu_upper(&self) -> Result<Self> {
        let n = self.n;
        let mut a = self.clone();
        for k in 0..n {
            let piv = a.get(k, k).clone();
            if piv.is_zero() {
                return Err(MvError::CellMembership(format!("leading principal minor of order {} vanishes", k + 1)));
            }
            let pinv = piv.inv()?;
            for r in k + 1..n {
                let f = a.get(r, k).mul(&pinv);
                if f.is_zero() {
                    continue;
                }
                for j in k..n {
                    let x = a.get(r, j).sub(&f.mul(a.get(k, j)));
                    guard(&x)?;
                    a.set(r, j, x);
                }
            }
            for j in k..n {
                a.set(k, j, a.get(k, j).mul(&pinv));
            }
        }
        Ok(a)
    }

    /// Largest numerator or denominator degree among the entries.
    pub fn degree(&self) -> usize {
        self.e.iter().map(RatFunc::degree).max().unwrap_or(0)
    }
}

impl<R: Ring + fmt::Display> fmt::Display for Mat<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_det() {
        let m = MatrixRF::from_ints(&[&[2, 1, 0], &[1, 1, 0], &[0, 3, 1]]);
        assert!(m.det().is_one());
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), MatrixRF::identity(3));
        let sing = MatrixRF::from_ints(&[&[1, 2], &[2, 4]]);
        assert!(matches!(sing.inverse(), Err(MvError::Singular)));
    }

    #[test]
    fn lu() {
        let m = MatrixRF::from_ints(&[&[2, 4], &[1, 5]]);
        let u = m.lu_upper().unwrap();
        assert!(u.is_unit_upper());
        assert_eq!(*u.get(0, 1), RatFunc::from_int(2));
        // m u^-1 must be lower triangular
        assert!(m.mul(&u.inverse().unwrap()).get(0, 1).is_zero());
        let bad = MatrixRF::from_ints(&[&[0, 1], &[1, 0]]);
        assert!(matches!(bad.lu_upper(), Err(MvError::CellMembership(_))));
    }

    #[test]
    fn minors() {
        let m = MatrixRF::from_ints(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]]);
        assert_eq!(m.minor(&[0, 2], &[1, 2]), RatFunc::from_int(2 * 10 - 3 * 8));
        assert_eq!(m.det(), RatFunc::from_int(-3));
    }
}
