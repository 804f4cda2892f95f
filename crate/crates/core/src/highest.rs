//! MV polytopes of highest vertex `w`: membership, generation, forced zeros of
//! Lusztig data, vertex collapse and the generalized diagonal inequalities.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::cartan::{pair, Coweight, Weight};
use crate::crystal::{saito_star, saito_word};
use crate::error::{MvError, Result};
use crate::polytope::{Frame, MvPolytope};
use crate::report::Report;
use crate::weyl::{Elem, Side, WeylGroup};

/// Words of `w0` checked exhaustively up to this rank, sampled above it.
pub const EXHAUSTIVE_WORD_RANK: usize = 3;
const WORD_SAMPLE: usize = 64;

/// `mu_w = mu_{w0}`.
pub fn is_in_pw(p: &MvPolytope, w: Elem) -> bool {
    p.vertex(w) == p.coweight()
}

/// All Lusztig vectors `(n_1..n_l, 0, ..., 0)` with `n_k <= bound`, in
/// lexicographic order. `word` must be a reduced word of `w0` whose first
/// `l(w)` letters spell `w`.
pub fn pw_lusztig_box(g: &WeylGroup, w: Elem, word: &[usize], bound: i64) -> Result<Vec<Vec<i64>>> {
    g.check_w0_word(word)?;
    let l = g.length(w);
    if g.from_word(&word[..l])? != w {
        return Err(MvError::InvalidArgument(format!("the first {l} letters of the word do not spell {}", g.label(w))));
    }
    if bound < 0 {
        return Err(MvError::InvalidArgument("bound must be nonnegative".into()));
    }
    let mut out = Vec::new();
    let mut n = vec![0i64; word.len()];
    loop {
        out.push(n.clone());
        let mut k = l;
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            if n[k] < bound {
                n[k] += 1;
                break;
            }
            n[k] = 0;
        }
    }
}

/// Every polytope of [`pw_lusztig_box`].
pub fn generate_pw(frame: &Arc<Frame>, w: Elem, word: &[usize], bound: i64) -> Result<Vec<MvPolytope>> {
    pw_lusztig_box(frame.group(), w, word, bound)?.iter().map(|n| MvPolytope::from_lusztig(frame, word, n)).collect()
}

/// Positions (0-based) where Lusztig data along `word` vanish on `P_w`: the
/// rightmost subword for `w^-1 w0`.
pub fn zero_positions(g: &WeylGroup, word: &[usize], w: Elem) -> Result<Vec<usize>> {
    g.rightmost_subword(word, g.mul(g.inverse(w), g.longest()))
}

/// Reduced words of `w0` used by the zero-pattern check.
pub fn checked_words(g: &WeylGroup) -> Vec<Vec<usize>> {
    let all = g.reduced_words(g.longest());
    if g.rank() <= EXHAUSTIVE_WORD_RANK || all.len() <= WORD_SAMPLE {
        return all;
    }
    let step = all.len().div_ceil(WORD_SAMPLE);
    all.into_iter().step_by(step).collect()
}

fn require_member(p: &MvPolytope, w: Elem) -> Result<()> {
    if !is_in_pw(p, w) {
        return Err(MvError::InvalidArgument(format!("polytope is not in P_w for w = {}", p.group().label(w))));
    }
    Ok(())
}

/// Lusztig data vanish at the rightmost-subword positions for every checked word.
pub fn zero_pattern_check(p: &MvPolytope, w: Elem) -> Result<Report> {
    require_member(p, w)?;
    let g = p.group();
    let mut r = Report::new("zeros", g.word_1based(w));
    for word in checked_words(g) {
        let n = p.lusztig(&word)?;
        for k in zero_positions(g, &word, w)? {
            r.expect(n[k] == 0, || {
                format!("word {:?}: n_{} = {} != 0", word.iter().map(|i| i + 1).collect::<Vec<_>>(), k + 1, n[k])
            });
        }
    }
    Ok(r)
}

/// `mu_v = mu_{v_w}` for all `v`, and every vertex is some `mu_v` with `v <= w`.
pub fn theorem_a_check(p: &MvPolytope, w: Elem) -> Report {
    let g = p.group();
    let mut r = Report::new("theorem-a", g.word_1based(w));
    for v in g.elements() {
        let vw = g.v_w(v, w);
        r.expect(p.vertex(v) == p.vertex(vw), || format!("mu_{} != mu_{}", g.label(v), g.label(vw)));
    }
    let support: Vec<&Coweight> = g.interval(w).into_iter().map(|x| p.vertex(x)).collect();
    for v in g.elements() {
        r.expect(support.contains(&p.vertex(v)), || format!("mu_{} is not a vertex indexed by [e, w]", g.label(v)));
    }
    r
}

/// `<mu_w - mu_{s_j w}, omega_k> <= 0` whenever `s_j w < w` and `k != j`.
pub fn generalized_diagonal_check(p: &MvPolytope) -> Report {
    let g = p.group();
    let n = g.rank();
    let mut r = Report::new("diagonals", vec![]);
    for w in g.elements() {
        for j in g.descents(w, Side::Left) {
            let d = p.vertex(w).sub(p.vertex(g.lmul_gen(j, w)));
            for k in (0..n).filter(|&k| k != j) {
                let v = pair(&d, &Weight::fundamental(n, k));
                r.expect(v <= 0, || {
                    format!("<mu_{} - mu_s{}{}, omega_{}> = {v}", g.label(w), j + 1, g.label(w), k + 1)
                });
            }
        }
    }
    r
}

/// `mu_{s_j w} = mu_{w0 s_{j*}}` for every left descent `j` of `w`.
pub fn s_jw_check(p: &MvPolytope, w: Elem) -> Result<Report> {
    require_member(p, w)?;
    let g = p.group();
    let mut r = Report::new("s_jw", g.word_1based(w));
    for j in g.descents(w, Side::Left) {
        let a = g.lmul_gen(j, w);
        let b = g.rmul_gen(g.longest(), g.star(j));
        r.expect(p.vertex(a) == p.vertex(b), || format!("mu_{} != mu_{}", g.label(a), g.label(b)));
    }
    Ok(r)
}

/// `W` grouped by `u -> u_w`; classes sorted, keyed by their `u_w`.
pub fn fan_partition(g: &WeylGroup, w: Elem) -> Vec<(Elem, Vec<Elem>)> {
    let mut classes: BTreeMap<Elem, Vec<Elem>> = BTreeMap::new();
    for u in g.elements() {
        classes.entry(g.v_w(u, w)).or_default().push(u);
    }
    classes.into_iter().collect()
}

/// Whether the vertex-equality partition of `p` is refined by the classes
/// of [`fan_partition`].
pub fn coarsening_check(p: &MvPolytope, w: Elem) -> bool {
    fan_partition(p.group(), w).iter().all(|(_, class)| class.iter().all(|&u| p.vertex(u) == p.vertex(class[0])))
}

/// `mu_v - mu_u` lies in the positive coroot cone whenever `u <=_R v`.
pub fn monotonicity_check(p: &MvPolytope) -> Report {
    let g = p.group();
    let mut r = Report::new("monotonicity", vec![]);
    for u in g.elements() {
        for v in g.elements().filter(|&v| g.weak_leq(u, v, Side::Right)) {
            r.expect(p.vertex(v).sub(p.vertex(u)).in_positive_cone(), || {
                format!("mu_{} - mu_{} not in the positive cone", g.label(v), g.label(u))
            });
        }
    }
    r
}

/// For `p` in `P_w`: `mu_v = mu_w` for `w <=_R v`, and the edge equalities
/// hold along every reduced word of `w^-1 w0` started at `w`.
pub fn upper_interval_check(p: &MvPolytope, w: Elem) -> Result<Report> {
    require_member(p, w)?;
    let g = p.group();
    let a = p.frame().cartan();
    let bz = p.bz();
    let mut r = Report::new("upper-interval", g.word_1based(w));
    for v in g.elements().filter(|&v| g.weak_leq(w, v, Side::Right)) {
        r.expect(p.vertex(v) == p.vertex(w), || format!("mu_{} != mu_{}", g.label(v), g.label(w)));
    }
    for word in g.reduced_words(g.mul(g.inverse(w), g.longest())) {
        let mut x = w;
        for &i in &word {
            let mut s = bz.at(g.rmul_gen(x, i), i) + bz.at(x, i);
            for j in (0..g.rank()).filter(|&j| j != i) {
                s += a.a(j, i) * bz.at(x, j);
            }
            r.expect(s == 0, || format!("edge at {} in direction {} is not an equality", g.label(x), i + 1));
            x = g.rmul_gen(x, i);
        }
    }
    Ok(r)
}

/// Membership through Saito reflections: `p` is in `P_w` iff
/// `sigma_{w^-1} p` is the point, and `sigma*_{j*}` moves `P_w` into
/// `P_{s_{j*} w}` or keeps it in `P_w` according to whether `s_j` is a
/// right descent of `w^-1 w0`. Membership of `p` itself is not required.
pub fn saito_membership_check(p: &MvPolytope, w: Elem) -> Result<Report> {
    let g = p.group();
    let member = is_in_pw(p, w);
    let mut r = Report::new("saito-membership", g.word_1based(w));
    let reduced = saito_word(p, g.word(g.inverse(w)))?;
    r.expect(member == reduced.is_point(), || {
        format!("membership {member} but sigma_(w^-1) reaches the point: {}", reduced.is_point())
    });
    if member {
        let top = g.mul(g.inverse(w), g.longest());
        for j in 0..g.rank() {
            let js = g.star(j);
            let q = saito_star(p, js)?;
            let target = if g.has_descent(top, j, Side::Right) { g.lmul_gen(js, w) } else { w };
            r.expect(is_in_pw(&q, target), || format!("sigma*_{} does not land in P_{}", js + 1, g.label(target)));
        }
    }
    Ok(r)
}

/// Evidence that a polytope lies in `P_w`.
#[derive(Clone, Debug)]
pub struct HighestVertexCertificate {
    pub w: Elem,
    pub polytope: MvPolytope,
    /// Pairs `(v, v_w)` with `mu_v = mu_{v_w}` verified.
    pub vertex_map: Vec<(Elem, Elem)>,
    /// Per checked word, the positions where the Lusztig data vanished.
    pub zero_positions: Vec<(Vec<usize>, Vec<usize>)>,
}

/// Runs membership, zero-pattern and collapse checks and records the evidence.
pub fn certify(p: &MvPolytope, w: Elem) -> Result<HighestVertexCertificate> {
    require_member(p, w)?;
    let g = p.group();
    for r in [zero_pattern_check(p, w)?, theorem_a_check(p, w), s_jw_check(p, w)?] {
        if !r.passed {
            return Err(MvError::InvariantFailure(format!("{}: {}", r.check, r.violations.join("; "))));
        }
    }
    let vertex_map = g.elements().map(|v| (v, g.v_w(v, w))).collect();
    let zero_positions = checked_words(g)
        .into_iter()
        .map(|word| {
            let n = p.lusztig(&word)?;
            let zeros = (0..n.len()).filter(|&k| n[k] == 0).collect();
            Ok((word, zeros))
        })
        .collect::<Result<_>>()?;
    Ok(HighestVertexCertificate { w, polytope: p.clone(), vertex_map, zero_positions })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w1(word: &[usize]) -> Vec<usize> {
        word.iter().map(|i| i - 1).collect()
    }

    #[test]
    fn point_in_every_pw() {
        let f = Frame::parse("A3").unwrap();
        let p = MvPolytope::zero(&f);
        for w in f.group().elements() {
            assert!(is_in_pw(&p, w));
            assert!(theorem_a_check(&p, w).passed);
        }
    }

    #[test]
    fn hexagon_not_in_s1s2() {
        let f = Frame::parse("A2").unwrap();
        let p = MvPolytope::from_lusztig(&f, &w1(&[1, 2, 1]), &[1, 2, 2]).unwrap();
        let s12 = f.group().from_word_1based(&[1, 2]).unwrap();
        assert!(!is_in_pw(&p, s12));
        assert!(!coarsening_check(&p, s12));
        assert!(generalized_diagonal_check(&p).passed);
        assert!(zero_pattern_check(&p, s12).is_err());
    }

    #[test]
    fn generation_box() {
        let f = Frame::parse("A3").unwrap();
        let g = f.group();
        let w = g.from_word_1based(&[1, 2, 3]).unwrap();
        let word = w1(&[1, 2, 3, 1, 2, 1]);
        let ps = generate_pw(&f, w, &word, 1).unwrap();
        assert_eq!(ps.len(), 8);
        assert!(ps.iter().all(|p| is_in_pw(p, w)));
        assert_eq!(generate_pw(&f, w, &word, 0).unwrap().len(), 1);
        assert!(generate_pw(&f, w, &w1(&[2, 1, 2, 3, 2, 1]), 1).is_err());
    }

    #[test]
    fn fan_classes() {
        let f = Frame::parse("A3").unwrap();
        let g = f.group();
        let w = g.from_word_1based(&[1, 2, 3]).unwrap();
        let classes = fan_partition(g, w);
        assert_eq!(classes.len(), 8);
        assert_eq!(classes.iter().map(|c| c.1.len()).sum::<usize>(), 24);
        assert!(fan_partition(g, g.longest()).iter().all(|c| c.1.len() == 1));
    }

    #[test]
    fn b2_generated_members() {
        let f = Frame::parse("B2").unwrap();
        let g = f.group();
        let w = g.from_word_1based(&[2, 1, 2]).unwrap();
        let s12 = g.from_word_1based(&[1, 2]).unwrap();
        let s121 = g.from_word_1based(&[1, 2, 1]).unwrap();
        for p in generate_pw(&f, w, &f.word_through(w), 2).unwrap() {
            assert_eq!(p.vertex(s12), p.vertex(s121));
            assert!(upper_interval_check(&p, w).unwrap().passed);
            assert!(saito_membership_check(&p, w).unwrap().passed);
            assert!(monotonicity_check(&p).passed);
            assert!(s_jw_check(&p, w).unwrap().passed);
        }
    }
}
