use super::{BzData, Violation};
use crate::weyl::Side;

/// Which text of the doubly-laced tropical Plücker relations to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Reading {
    /// `M_{w omega_j}` in the first relation and `2 M_{w s_i omega_i}` in the
    /// middle term of the second (homogeneous form).
    Standard,
    /// As `Standard` but with the first relation's `M_{omega_j}` taken at the
    /// identity.
    LiteralOmegaJ,
    /// Both as printed: `M_{omega_j}` and a coefficient of 1.
    Printed,
}

pub(super) fn edge_violations(bz: &BzData) -> Vec<Violation> {
    let frame = bz.frame();
    let g = frame.group();
    let a = frame.cartan();
    let n = frame.rank();
    let mut out = Vec::new();
    for w in g.elements() {
        for i in 0..n {
            let mut lhs = bz.at(g.rmul_gen(w, i), i) + bz.at(w, i);
            for j in (0..n).filter(|&j| j != i) {
                lhs += a.a(j, i) * bz.at(w, j);
            }
            if lhs > 0 {
                out.push(Violation { relation: "edge".into(), w: g.word_1based(w), indices: vec![i + 1], lhs, rhs: 0 });
            }
        }
    }
    out
}

pub(super) fn plucker_violations(bz: &BzData, reading: Reading) -> Vec<Violation> {
    let frame = bz.frame();
    let g = frame.group();
    let a = frame.cartan();
    let n = frame.rank();
    let mut out = Vec::new();
    for w in g.elements() {
        for i in 0..n {
            for j in 0..n {
                if i == j || a.a(i, j) == 0 {
                    continue;
                }
                if g.has_descent(w, i, Side::Right) || g.has_descent(w, j, Side::Right) {
                    continue;
                }
                let m = |word: &[usize], k: usize| bz.at(word.iter().fold(w, |x, &l| g.rmul_gen(x, l)), k);
                let mut check = |name: &str, lhs: i64, rhs: i64| {
                    if lhs != rhs {
                        out.push(Violation {
                            relation: name.into(),
                            w: g.word_1based(w),
                            indices: vec![i + 1, j + 1],
                            lhs,
                            rhs,
                        });
                    }
                };
                match (a.a(i, j), a.a(j, i)) {
                    (-1, -1) => {
                        // symmetric in (i, j); evaluate once
                        if i < j {
                            let lhs = m(&[i], i) + m(&[j], j);
                            let rhs = (m(&[], i) + m(&[i, j], j)).min(m(&[j, i], i) + m(&[], j));
                            check("simply-laced", lhs, rhs);
                        }
                    }
                    (-1, -2) => {
                        let mj = match reading {
                            Reading::Standard => m(&[], j),
                            Reading::LiteralOmegaJ | Reading::Printed => bz.at(g.identity(), j),
                        };
                        let lhs = m(&[j], j) + m(&[i, j], j) + m(&[i], i);
                        let rhs = (2 * m(&[i, j], j) + m(&[], i))
                            .min(2 * m(&[], j) + m(&[i, j, i], i))
                            .min(mj + m(&[j, i, j], j) + m(&[i], i));
                        check("doubly-laced (-1,-2) first", lhs, rhs);
                        let coeff = if reading == Reading::Printed { 1 } else { 2 };
                        let lhs = m(&[j, i], i) + 2 * m(&[i, j], j) + m(&[i], i);
                        let rhs = (2 * m(&[], j) + 2 * m(&[i, j, i], i))
                            .min(2 * m(&[j, i, j], j) + coeff * m(&[i], i))
                            .min(m(&[i, j, i], i) + 2 * m(&[i, j], j) + m(&[], i));
                        check("doubly-laced (-1,-2) second", lhs, rhs);
                    }
                    (-2, -1) => {
                        let lhs = m(&[j, i], i) + m(&[i], i) + m(&[i, j], j);
                        let rhs = (2 * m(&[i], i) + m(&[j, i, j], j))
                            .min(2 * m(&[i, j, i], i) + m(&[], j))
                            .min(m(&[i, j, i], i) + m(&[], i) + m(&[i, j], j));
                        check("doubly-laced (-2,-1) first", lhs, rhs);
                        let lhs = m(&[j], j) + 2 * m(&[i], i) + m(&[i, j], j);
                        let rhs = (2 * m(&[i, j, i], i) + 2 * m(&[], j))
                            .min(2 * m(&[], i) + 2 * m(&[i, j], j))
                            .min(m(&[], j) + 2 * m(&[i], i) + m(&[j, i, j], j));
                        check("doubly-laced (-2,-1) second", lhs, rhs);
                    }
                    _ => unreachable!("G2 edges are rejected when the Cartan data is built"),
                }
            }
        }
    }
    out
}
