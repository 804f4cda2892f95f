//! Type A model of `L^{w^-1}`: chart points, the maps `eta` and `iota`,
//! generalized minors and the tropical functions `M_gamma`.

use serde::{Deserialize, Serialize};

use super::matrix::{Mat, MatrixRF};
use super::mpoly::MPoly;
use super::poly::{RatFunc, Ring};
use crate::cartan::Family;
use crate::error::{MvError, Result};
use crate::polytope::Frame;
use crate::weyl::{Elem, WeylGroup};

/// Matrix size `n` for `SL_n`; errors outside type A.
pub fn require_type_a(g: &WeylGroup) -> Result<usize> {
    let kind = g.cartan().kind();
    if kind.kind != Family::A {
        return Err(MvError::InvalidArgument(format!("minors are implemented in type A only, got {kind}")));
    }
    Ok(kind.rank + 1)
}

/// `x` as a permutation of `0..n`: entry `p` is `x(p)`.
pub fn permutation(g: &WeylGroup, x: Elem) -> Vec<usize> {
    let mut img: Vec<usize> = (0..=g.rank()).collect();
    for &i in g.word(x) {
        img.swap(i, i + 1);
    }
    img
}

/// The weight `x omega_{i+1}` as the sorted index set `x{0..=i}`.
pub fn weight_set(g: &WeylGroup, x: Elem, i: usize) -> Vec<usize> {
    let p = permutation(g, x);
    let mut s = p[..=i].to_vec();
    s.sort_unstable();
    s
}

/// `x_{i+1}(f)`: the identity plus `f` at `(i, i+1)`.
pub fn x_elem<R: Ring>(n: usize, i: usize, f: R) -> Mat<R> {
    let mut m = Mat::identity(n);
    m.set(i, i + 1, f);
    m
}

/// `y(1) x(-1) y(1)` in the block `i, i+1`.
pub fn s_bar(n: usize, i: usize) -> MatrixRF {
    let mut m = MatrixRF::identity(n);
    m.set(i, i, RatFunc::zero());
    m.set(i + 1, i + 1, RatFunc::zero());
    m.set(i, i + 1, RatFunc::from_int(-1));
    m.set(i + 1, i, RatFunc::one());
    m
}

/// Product of the `s_bar` along `word`.
pub fn w_rep(n: usize, word: &[usize]) -> MatrixRF {
    word.iter().fold(MatrixRF::identity(n), |m, &i| m.mul(&s_bar(n, i)))
}

/// `x_{i_1}(t^{A_1}) ... x_{i_m}(t^{A_m})`.
pub fn chart_point(n: usize, word: &[usize], a: &[i64]) -> MatrixRF {
    word.iter().zip(a).fold(MatrixRF::identity(n), |m, (&i, &k)| m.mul(&x_elem(n, i, RatFunc::t_pow(k))))
}

/// `x_{i_1}(a_1) ... x_{i_m}(a_m)` with indeterminate `a_k`.
pub fn chart_symbolic(n: usize, word: &[usize]) -> Mat<MPoly> {
    let m = word.len();
    word.iter().enumerate().fold(Mat::identity(n), |acc, (k, &i)| acc.mul(&x_elem(n, i, MPoly::var(m, k))))
}

/// `D g^-1 D` with `D = diag(1, -1, 1, ...)`.
pub fn iota(g: &MatrixRF) -> Result<MatrixRF> {
    let inv = g.inverse()?;
    Ok(Mat::from_fn(g.n(), |i, j| {
        let x = inv.get(i, j);
        if (i + j) % 2 == 0 {
            x.clone()
        } else {
            x.neg()
        }
    }))
}

/// `eta_{w^-1}(g)`: the unit upper factor of `w_rep(w^-1) g^T`.
pub fn eta(grp: &WeylGroup, w: Elem, g: &MatrixRF) -> Result<MatrixRF> {
    let rep = w_rep(g.n(), grp.word(grp.inverse(w)));
    rep.mul(&g.transpose()).lu_upper()
}

/// `eta_{w^-1}^-1(z) = iota(eta_w(iota(z)))`.
pub fn eta_inv(grp: &WeylGroup, w: Elem, z: &MatrixRF) -> Result<MatrixRF> {
    iota(&eta(grp, grp.inverse(w), &iota(z)?)?)
}

/// `Delta_{u omega_{i+1}, v omega_{i+1}}`: rows `u{0..=i}`, columns `v{0..=i}`.
pub fn gen_minor<R: Ring>(grp: &WeylGroup, m: &Mat<R>, u: Elem, v: Elem, i: usize) -> R {
    m.minor(&weight_set(grp, u, i), &weight_set(grp, v, i))
}

/// `Delta^new_{v omega_{i+1}} = Delta_{v_w^-1 v omega_{i+1}, v omega_{i+1}}`.
pub fn delta_new<R: Ring>(grp: &WeylGroup, m: &Mat<R>, v: Elem, i: usize, w: Elem) -> R {
    let u = grp.mul(grp.inverse(grp.v_w(v, w)), v);
    gen_minor(grp, m, u, v, i)
}

/// A point of `L^{w^-1}(Z^trop)`: a reduced word of `w^-1` with exponents.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TropicalPoint {
    pub chart: Vec<usize>,
    pub a: Vec<i64>,
}

impl TropicalPoint {
    /// Checks that `chart` is a reduced word of `w^-1` matching `a` in length.
    pub fn new(grp: &WeylGroup, w: Elem, chart: Vec<usize>, a: Vec<i64>) -> Result<Self> {
        if chart.len() != a.len() {
            return Err(MvError::InvalidArgument(format!(
                "chart word has {} letters but {} exponents were given",
                chart.len(),
                a.len()
            )));
        }
        if !grp.is_reduced(&chart)? || grp.from_word(&chart)? != grp.inverse(w) {
            return Err(MvError::InvalidArgument(format!(
                "chart is not a reduced word of the inverse of {}",
                grp.label(w)
            )));
        }
        Ok(Self { chart, a })
    }

    /// Nonnegativity of the tropicalized potential.
    pub fn chi_trop_nonneg(&self) -> bool {
        self.a.iter().all(|&k| k >= 0)
    }
}

/// The default chart of `w^-1`: the reverse of the canonical word of `w`.
pub fn default_chart(grp: &WeylGroup, w: Elem) -> Vec<usize> {
    grp.word(w).iter().rev().copied().collect()
}

/// `eta_{w^-1}^-1` of the chart point, checked to be unipotent.
pub fn eta_inv_point(frame: &Frame, w: Elem, p: &TropicalPoint) -> Result<MatrixRF> {
    let grp = frame.group();
    let n = require_type_a(grp)?;
    let y = eta_inv(grp, w, &chart_point(n, &p.chart, &p.a))?;
    if !y.is_unit_upper() {
        return Err(MvError::InvariantFailure("eta inverse is not unit upper triangular".into()));
    }
    Ok(y)
}

/// `M_gamma` for one chamber weight (position in [`Frame::chamber_weights`]).
pub fn m_gamma(frame: &Frame, w: Elem, p: &TropicalPoint, gamma: usize) -> Result<i64> {
    let y = eta_inv_point(frame, w, p)?;
    let c = &frame.chamber_weights()[gamma];
    delta_new(frame.group(), &y, c.rep, c.index, w).valuation()
}

/// `M_gamma` for every chamber weight, in frame order.
pub fn m_values(frame: &Frame, w: Elem, p: &TropicalPoint) -> Result<Vec<i64>> {
    let y = eta_inv_point(frame, w, p)?;
    frame.chamber_weights().iter().map(|c| delta_new(frame.group(), &y, c.rep, c.index, w).valuation()).collect()
}
