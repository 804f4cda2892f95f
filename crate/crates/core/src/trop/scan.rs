//! Symbolic vanishing checks on the chart of `L^{w^-1}` and the empirical
//! edge-equality scan for `M_gamma` outside `Gamma^w`.

use super::matrix::Mat;
use super::minors::{
    chart_symbolic, default_chart, delta_new, eta_inv_point, gen_minor, require_type_a, weight_set, TropicalPoint,
};
use super::mpoly::MPoly;
use super::poly::Ring;
use crate::error::Result;
use crate::polytope::Frame;
use crate::report::Report;
use crate::weyl::{Elem, Side, WeylGroup};

/// Membership in `Gamma^w = {v omega_j : v <= w}` (Bruhat), per chamber weight.
pub fn gamma_w(frame: &Frame, w: Elem) -> Vec<bool> {
    let g = frame.group();
    frame.chamber_weights().iter().map(|c| g.bruhat_leq(c.rep, w)).collect()
}

fn set_label(s: &[usize]) -> String {
    s.iter().map(|k| (k + 1).to_string()).collect()
}

/// `mu >= nu` in the dominance order: `mu - nu` is a nonnegative sum of
/// simple roots. Both are index sets of the same size.
pub fn dominates(n: usize, mu: &[usize], nu: &[usize]) -> bool {
    let mut partial = 0i64;
    (0..n).all(|k| {
        partial += mu.contains(&k) as i64 - nu.contains(&k) as i64;
        partial >= 0
    })
}

fn subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == size)
        .map(|m| (0..n).filter(|&k| m >> k & 1 == 1).collect())
        .collect()
}

/// Checks on the symbolic chart `x_{i_1}(a_1) ... x_{i_m}(a_m)` of `L^{w^-1}`:
/// the defining vanishings, nonvanishing of every `Delta^new`, the minors
/// forced to vanish for `u <=_R w^-1 w0`, and the conjectured vanishing for
/// `u = v_w^-1 v`. The last report is empirical evidence only.
pub fn vanishing_scan(frame: &Frame, w: Elem) -> Result<Vec<Report>> {
    let g = frame.group();
    let n = require_type_a(g)?;
    let s = chart_symbolic(n, &default_chart(g, w));
    let wl = g.word_1based(w);
    let in_gw = gamma_w(frame, w);

    let mut cell = Report::new("cell-vanishing", wl.clone());
    let mut nonzero = Report::new("new-minor-nonzero", wl.clone());
    for (k, c) in frame.chamber_weights().iter().enumerate() {
        let d = gen_minor(g, &s, g.identity(), c.rep, c.index);
        let label = set_label(&weight_set(g, c.rep, c.index));
        cell.expect(d.is_zero() != in_gw[k], || {
            format!("Delta_{{omega_{}, {label}}} = {d}, in Gamma^w: {}", c.index + 1, in_gw[k])
        });
        for v in g.elements().filter(|&v| frame.cw(v, c.index) == k) {
            let d = delta_new(g, &s, v, c.index, w);
            nonzero.expect(!d.is_zero(), || format!("Delta^new vanishes at v = {}, {label}", g.label(v)));
        }
    }

    let mut forced = Report::new("forced-zero-minor", wl.clone());
    let top = g.mul(g.inverse(w), g.longest());
    for u in g.elements().filter(|&u| g.weak_leq(u, top, Side::Right)) {
        let wu = g.mul(w, u);
        for i in 0..g.rank() {
            let wus = g.rmul_gen(wu, i);
            if g.length(wus) != g.length(w) + g.length(u) + 1 {
                continue;
            }
            let d = gen_minor(g, &s, u, wus, i);
            forced.expect(d.is_zero(), || format!("u = {}, i = {}: Delta = {d}", g.label(u), i + 1));
        }
    }

    let mut conj = Report::new("conjectured-zero-minor (empirical)", wl);
    for v in g.elements() {
        let vw = g.v_w(v, w);
        let u = g.mul(g.inverse(vw), v);
        for i in (0..g.rank()).filter(|&i| !g.has_descent(v, i, Side::Right)) {
            let vs = g.rmul_gen(v, i);
            if g.v_w(vs, w) != vw {
                continue;
            }
            let d = gen_minor(g, &s, u, vs, i);
            conj.expect(d.is_zero(), || format!("v = {}, i = {}, u = {}: Delta = {d}", g.label(v), i + 1, g.label(u)));
        }
    }
    Ok(vec![cell, nonzero, forced, conj])
}

/// On the chart of `L^{w^-1}`: `Delta_{u omega_i, mu} = 0` whenever `w u` is
/// reduced and `mu` does not dominate `w u omega_i`.
pub fn support_bound_check(frame: &Frame, w: Elem) -> Result<Report> {
    let g = frame.group();
    let n = require_type_a(g)?;
    let s = chart_symbolic(n, &default_chart(g, w));
    let mut r = Report::new("support-bound", g.word_1based(w));
    for u in g.elements() {
        let wu = g.mul(w, u);
        if g.length(wu) != g.length(w) + g.length(u) {
            continue;
        }
        for i in 0..g.rank() {
            let rows = weight_set(g, u, i);
            let floor = weight_set(g, wu, i);
            for mu in subsets(n, i + 1).into_iter().filter(|mu| !dominates(n, mu, &floor)) {
                let d = s.minor(&rows, &mu);
                r.expect(d.is_zero(), || {
                    format!("u = {}: Delta_{{{}, {}}} = {d}", g.label(u), set_label(&rows), set_label(&mu))
                });
            }
        }
    }
    Ok(r)
}

fn three_term(g: &WeylGroup, m: &Mat<MPoly>, w: Elem, u: Elem, i: usize) -> (MPoly, MPoly) {
    let us = g.rmul_gen(u, i);
    let wu = g.mul(w, u);
    let wus = g.mul(w, us);
    let lhs = gen_minor(g, m, u, wu, i).mul(&gen_minor(g, m, us, wus, i));
    let mut prod = MPoly::one();
    for j in (0..g.rank()).filter(|&j| j != i) {
        for _ in 0..-g.cartan().a(j, i) {
            prod = prod.mul(&gen_minor(g, m, u, wu, j));
        }
    }
    let rhs = gen_minor(g, m, us, wu, i).mul(&gen_minor(g, m, u, wus, i)).add(&prod);
    (lhs, rhs)
}

/// The three-term minor identity for every `(u, i)` with `l(u s_i) = l(u)+1`
/// and `l(w u s_i) = l(w) + l(u) + 1`, on a generic unipotent element.
pub fn three_term_identity_check(frame: &Frame, w: Elem) -> Result<Report> {
    let g = frame.group();
    let n = require_type_a(g)?;
    let generic = chart_symbolic(n, g.word(g.longest()));
    let mut r = Report::new("three-term-identity", g.word_1based(w));
    for u in g.elements() {
        for i in 0..g.rank() {
            let us = g.rmul_gen(u, i);
            if g.length(us) != g.length(u) + 1 || g.length(g.mul(w, us)) != g.length(w) + g.length(u) + 1 {
                continue;
            }
            let (lhs, rhs) = three_term(g, &generic, w, u, i);
            r.expect(lhs == rhs, || format!("u = {}, i = {}: {lhs} != {rhs}", g.label(u), i + 1));
        }
    }
    Ok(r)
}

/// At one tropical point: `Delta^new` has the same valuation for every
/// representative `v` of a chamber weight, and the edge equalities
/// `M_{v omega_i} + M_{v s_i omega_i} = -sum_{j != i} a_ji M_{v omega_j}`
/// hold whenever `s_i` is not a right descent of `v` and `(v s_i)_w = v_w`.
/// Empirical evidence only.
pub fn edge_equality_check(frame: &Frame, w: Elem, a: &[i64]) -> Result<Report> {
    let g = frame.group();
    let point = TropicalPoint::new(g, w, default_chart(g, w), a.to_vec())?;
    let y = eta_inv_point(frame, w, &point)?;
    let mut m = vec![None; frame.gamma_len()];
    let mut r = Report::new("conjectured-edge-equality (empirical)", g.word_1based(w));
    for v in g.elements() {
        for i in 0..g.rank() {
            let val = delta_new(g, &y, v, i, w).valuation()?;
            let slot = &mut m[frame.cw(v, i)];
            match *slot {
                None => *slot = Some(val),
                Some(prev) => r.expect(prev == val, || {
                    format!("A = {a:?}: Delta^new at v = {}, i = {} has valuation {val}, not {prev}", g.label(v), i + 1)
                }),
            }
        }
    }
    let m: Vec<i64> = m.into_iter().map(|x| x.expect("every chamber weight has a representative")).collect();
    for v in g.elements() {
        let vw = g.v_w(v, w);
        for i in (0..g.rank()).filter(|&i| !g.has_descent(v, i, Side::Right)) {
            let vs = g.rmul_gen(v, i);
            if g.v_w(vs, w) != vw {
                continue;
            }
            let lhs = m[frame.cw(v, i)] + m[frame.cw(vs, i)];
            let rhs: i64 = (0..g.rank()).filter(|&j| j != i).map(|j| -g.cartan().a(j, i) * m[frame.cw(v, j)]).sum();
            r.expect(lhs == rhs, || format!("A = {a:?}, v = {}, i = {}: {lhs} != {rhs}", g.label(v), i + 1));
        }
    }
    Ok(r)
}
