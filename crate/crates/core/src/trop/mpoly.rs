//! Multivariate integer polynomials in the chart coordinates `a_1, ..., a_m`,
//! used to decide vanishing of minors identically on a chart.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::Ring;

/// Sparse polynomial: exponent vector -> nonzero coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MPoly {
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MPoly {
    /// The variable `a_{k+1}` among `m`.
    pub fn var(m: usize, k: usize) -> Self {
        let mut e = vec![0; m];
        e[k] = 1;
        Self { terms: BTreeMap::from([(e, BigInt::one())]) }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Whether every coefficient is positive.
    pub fn is_subtraction_free(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }

    fn insert(&mut self, e: Vec<u32>, c: BigInt) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn padded(e: &[u32], len: usize) -> Vec<u32> {
        let mut v = e.to_vec();
        v.resize(len, 0);
        v
    }

    fn width(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }
}

impl Ring for MPoly {
    fn zero() -> Self {
        Self::default()
    }

    fn one() -> Self {
        Self::from_int(1)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add(&self, other: &Self) -> Self {
        let w = self.width().max(other.width());
        let mut out = Self::zero();
        for (e, c) in self.terms.iter().chain(&other.terms) {
            out.insert(Self::padded(e, w), c.clone());
        }
        out
    }

    fn sub(&self, other: &Self) -> Self {
        let neg = Self { terms: other.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() };
        self.add(&neg)
    }

    fn mul(&self, other: &Self) -> Self {
        let w = self.width().max(other.width());
        let mut out = Self::zero();
        for (ea, ca) in &self.terms {
            let ea = Self::padded(ea, w);
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(Self::padded(eb, w)).map(|(x, y)| x + y).collect();
                out.insert(e, ca * cb);
            }
        }
        out
    }

    fn from_int(k: i64) -> Self {
        let mut out = Self::zero();
        if k != 0 {
            out.terms.insert(Vec::new(), BigInt::from(k));
        }
        out
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(k, &p)| if p == 1 { format!("a{}", k + 1) } else { format!("a{}^{p}", k + 1) })
                .collect();
            let c = c.abs();
            match (vars.is_empty(), c.is_one()) {
                (true, _) => write!(f, "{c}")?,
                (false, true) => write!(f, "{}", vars.join("*"))?,
                (false, false) => write!(f, "{c}*{}", vars.join("*"))?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = MPoly::var(2, 0);
        let b = MPoly::var(2, 1);
        let s = a.add(&b);
        let sq = s.mul(&s);
        assert_eq!(sq.len(), 3);
        assert!(sq.is_subtraction_free());
        assert!(sq.sub(&sq).is_zero());
        assert_eq!(a.mul(&b).sub(&b.mul(&a)), MPoly::zero());
        assert_eq!(s.to_string(), "a2 + a1");
        assert_eq!(MPoly::from_int(-2).mul(&a).to_string(), "-2*a1");
    }
}
