//! Exact univariate polynomials and rational functions in `t` over `Q`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{MvError, Result};

/// Commutative ring operations needed by the matrix code.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn from_int(k: i64) -> Self;
}

/// Coefficients low degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly {
    c: Vec<BigRational>,
}

fn q(k: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(k))
}

impl UniPoly {
    pub fn from_coeffs(mut c: Vec<BigRational>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Self { c }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::from_coeffs(c.iter().map(|&k| q(k)).collect())
    }

    pub fn constant(x: BigRational) -> Self {
        Self::from_coeffs(vec![x])
    }

    /// `x t^k`.
    pub fn monomial(k: usize, x: BigRational) -> Self {
        let mut c = vec![BigRational::zero(); k];
        c.push(x);
        Self::from_coeffs(c)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.c
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    /// Order of vanishing at `t = 0`.
    pub fn ord(&self) -> Option<usize> {
        self.c.iter().position(|x| !x.is_zero())
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.c.last()
    }

    pub fn neg(&self) -> Self {
        Self { c: self.c.iter().map(|x| -x).collect() }
    }

    pub fn scale(&self, x: &BigRational) -> Self {
        Self::from_coeffs(self.c.iter().map(|y| y * x).collect())
    }

    fn combine(&self, other: &Self, sign: bool) -> Self {
        let len = self.c.len().max(other.c.len());
        let zero = BigRational::zero();
        let c = (0..len)
            .map(|k| {
                let a = self.c.get(k).unwrap_or(&zero);
                let b = other.c.get(k).unwrap_or(&zero);
                if sign {
                    a + b
                } else {
                    a - b
                }
            })
            .collect();
        Self::from_coeffs(c)
    }

    /// Quotient and remainder; `d` must be nonzero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead = d.c[dd].clone();
        let mut r = self.c.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quo = vec![BigRational::zero(); r.len() - dd];
        for k in (0..quo.len()).rev() {
            let f = &r[k + dd] / &lead;
            if !f.is_zero() {
                for (j, dj) in d.c.iter().enumerate() {
                    r[k + j] -= &f * dj;
                }
            }
            quo[k] = f;
        }
        r.truncate(dd);
        (Self::from_coeffs(quo), Self::from_coeffs(r))
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => self.clone(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    fn is_one_poly(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    /// Divides by `t^k`; the low coefficients must vanish.
    fn shift_down(&self, k: usize) -> Self {
        Self { c: self.c[k.min(self.c.len())..].to_vec() }
    }
}

impl Ring for UniPoly {
    fn zero() -> Self {
        Self { c: Vec::new() }
    }

    fn one() -> Self {
        Self { c: vec![BigRational::one()] }
    }

    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    fn add(&self, other: &Self) -> Self {
        self.combine(other, true)
    }

    fn sub(&self, other: &Self) -> Self {
        self.combine(other, false)
    }

    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut c = vec![BigRational::zero(); self.c.len() + other.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Self::from_coeffs(c)
    }

    fn from_int(k: i64) -> Self {
        Self::from_coeffs(vec![q(k)])
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, x) in self.c.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            let sign = if x.is_negative() { "-" } else { "+" };
            if first {
                if x.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = x.abs();
            match (k, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (_, true) => write!(f, "t^{k}")?,
                (_, false) => write!(f, "{a}*t^{k}")?,
            }
        }
        Ok(())
    }
}

/// `num / den` in lowest terms with `den` monic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: UniPoly,
    den: UniPoly,
}

impl RatFunc {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(MvError::Singular);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: UniPoly, den: UniPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        // strip common powers of t before the general gcd
        let k = num.ord().unwrap().min(den.ord().unwrap());
        let (num, den) = (num.shift_down(k), den.shift_down(k));
        let g = num.gcd(&den);
        let (num, den) = if g.degree() == Some(0) { (num, den) } else { (num.div_rem(&g).0, den.div_rem(&g).0) };
        let l = den.leading().unwrap().recip();
        Self { num: num.scale(&l), den: den.scale(&l) }
    }

    pub fn from_poly(p: UniPoly) -> Self {
        Self { num: p, den: UniPoly::one() }
    }

    /// `t^k` for any integer `k`.
    pub fn t_pow(k: i64) -> Self {
        let m = UniPoly::monomial(k.unsigned_abs() as usize, BigRational::one());
        if k >= 0 {
            Self::from_poly(m)
        } else {
            Self { num: UniPoly::one(), den: m }
        }
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    /// Larger of the numerator and denominator degrees.
    pub fn degree(&self) -> usize {
        self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0))
    }

    pub fn neg(&self) -> Self {
        Self { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    /// `ord_t(num) - ord_t(den)`.
    pub fn valuation(&self) -> Result<i64> {
        match (self.num.ord(), self.den.ord()) {
            (Some(a), Some(b)) => Ok(a as i64 - b as i64),
            _ => Err(MvError::UndefinedValuation),
        }
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }
}

impl Ring for RatFunc {
    fn zero() -> Self {
        Self { num: UniPoly::zero(), den: UniPoly::one() }
    }

    fn one() -> Self {
        Self::from_poly(UniPoly::one())
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::reduced(self.num.add(&other.num), self.den.clone());
        }
        Self::reduced(self.num.mul(&other.den).add(&other.num.mul(&self.den)), self.den.mul(&other.den))
    }

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        Self::reduced(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    fn from_int(k: i64) -> Self {
        Self::from_poly(UniPoly::from_int(k))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one_poly() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn division_and_gcd() {
        // (t+1)(t+2) / (t+1)
        let a = p(&[2, 3, 1]);
        let (qu, r) = a.div_rem(&p(&[1, 1]));
        assert_eq!(qu, p(&[2, 1]));
        assert!(r.is_zero());
        assert_eq!(a.gcd(&p(&[3, 4, 1])), p(&[1, 1]));
    }

    #[test]
    fn reduced_form() {
        let f = RatFunc::new(p(&[0, 0, 1, 3]), p(&[0, 2])).unwrap();
        assert_eq!(f.valuation().unwrap(), 1);
        let g = RatFunc::new(p(&[2, 3, 1]), p(&[1, 1])).unwrap();
        assert_eq!(g, RatFunc::from_poly(p(&[2, 1])));
        assert!(RatFunc::new(p(&[1]), UniPoly::zero()).is_err());
    }

    #[test]
    fn laurent_monomials() {
        let a = RatFunc::t_pow(-3);
        assert_eq!(a.valuation().unwrap(), -3);
        assert!(a.mul(&RatFunc::t_pow(3)).is_one());
        assert_eq!(a.add(&RatFunc::one()).valuation().unwrap(), -3);
        assert!(RatFunc::zero().valuation().is_err());
        assert_eq!(RatFunc::t_pow(2).sub(&RatFunc::t_pow(2)), RatFunc::zero());
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, 0, -2]).to_string(), "1 - 2*t^2");
        assert_eq!(RatFunc::t_pow(-1).to_string(), "(1) / (t^1)");
    }
}
