//! The bicrystal structure on MV polytopes and Saito reflections.
//!
//! Each operator is computed on the one minimal path whose vertices the
//! operator prescribes (a word starting with `j` for the unstarred operators,
//! a word ending with `j*` for the starred ones), rebuilt into a full
//! polytope, and then checked against the vertex description of every
//! prescribed vertex. A mismatch is an [`MvError::InvariantFailure`].

use crate::cartan::Coweight;
use crate::error::{MvError, Result};
use crate::highest::checked_words;
use crate::polytope::MvPolytope;
use crate::report::Report;
use crate::weyl::{Elem, Side};

/// Result of a raising operator: a polytope, or the crystal's zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Raised {
    Polytope(MvPolytope),
    Bottom,
}

impl Raised {
    pub fn polytope(self) -> Option<MvPolytope> {
        match self {
            Raised::Polytope(p) => Some(p),
            Raised::Bottom => None,
        }
    }

    pub fn is_bottom(&self) -> bool {
        matches!(self, Raised::Bottom)
    }
}

/// `wt(P) = -mu_{w0}`.
pub fn wt(p: &MvPolytope) -> Coweight {
    p.coweight().scale(-1)
}

/// Coefficient of `mu_{s_j}` along `alpha_j^vee`.
pub fn epsilon(p: &MvPolytope, j: usize) -> i64 {
    p.vertex(p.group().gen(j)).0[j]
}

/// Coefficient of `mu_{w0} - mu_{s_j w0}` along `alpha_j^vee`.
pub fn epsilon_star(p: &MvPolytope, j: usize) -> i64 {
    let g = p.group();
    p.coweight().sub(p.vertex(g.lmul_gen(j, g.longest()))).0[j]
}

/// `phi_j = epsilon_j + <wt, alpha_j>`.
pub fn phi(p: &MvPolytope, j: usize) -> i64 {
    epsilon(p, j) + p.frame().cartan().pair_with_root(&wt(p), j)
}

pub fn phi_star(p: &MvPolytope, j: usize) -> i64 {
    epsilon_star(p, j) + p.frame().cartan().pair_with_root(&wt(p), j)
}

fn word_from(p: &MvPolytope, j: usize) -> Vec<usize> {
    let g = p.group();
    let mut word = vec![j];
    word.extend_from_slice(g.word(g.lmul_gen(j, g.longest())));
    word
}

fn word_to(p: &MvPolytope, j: usize) -> Vec<usize> {
    let g = p.group();
    let mut word = g.word(g.lmul_gen(j, g.longest())).to_vec();
    word.push(g.star(j));
    word
}

fn shift(p: &MvPolytope, word: &[usize], pos: usize, k: i64) -> Result<MvPolytope> {
    let mut n = p.lusztig(word)?;
    n[pos] += k;
    MvPolytope::from_lusztig(p.frame(), word, &n)
}

fn verify(
    q: &MvPolytope,
    p: &MvPolytope,
    moved: impl Fn(Elem) -> bool,
    fixed: impl Fn(Elem) -> bool,
    d: &Coweight,
    op: &str,
) -> Result<()> {
    let g = p.group();
    for x in g.elements() {
        let expect = if moved(x) {
            p.vertex(x).add(d)
        } else if fixed(x) {
            p.vertex(x).clone()
        } else {
            continue;
        };
        if *q.vertex(x) != expect {
            return Err(MvError::InvariantFailure(format!("{op}: vertex mu_{} not as prescribed", g.label(x))));
        }
    }
    Ok(())
}

/// `f_j^k`: shifts `mu_w` by `k alpha_j^vee` for every `w` with `s_j w < w`.
pub fn f_pow(p: &MvPolytope, j: usize, k: i64) -> Result<MvPolytope> {
    if k == 0 {
        return Ok(p.clone());
    }
    let g = p.group();
    let q = shift(p, &word_from(p, j), 0, k)?;
    let d = g.cartan().simple_coroot(j).scale(k);
    let e = g.identity();
    verify(&q, p, |x| g.has_descent(x, j, Side::Left), |x| x == e, &d, "f")?;
    Ok(q)
}

pub fn f_op(p: &MvPolytope, j: usize) -> Result<MvPolytope> {
    f_pow(p, j, 1)
}

/// `e_j^k`, or the zero element when `k > epsilon_j`.
pub fn e_pow(p: &MvPolytope, j: usize, k: i64) -> Result<Raised> {
    if k > epsilon(p, j) {
        return Ok(Raised::Bottom);
    }
    if k == 0 {
        return Ok(Raised::Polytope(p.clone()));
    }
    let g = p.group();
    let q = shift(p, &word_from(p, j), 0, -k)?;
    let d = g.cartan().simple_coroot(j).scale(-k);
    let e = g.identity();
    verify(&q, p, |x| g.has_descent(x, j, Side::Left), |x| x == e, &d, "e")?;
    Ok(Raised::Polytope(q))
}

/// `e_j`; the zero element exactly when `mu_e = mu_{s_j}`.
pub fn e_op(p: &MvPolytope, j: usize) -> Result<Raised> {
    e_pow(p, j, 1)
}

/// `(f*_j)^k`: moves `mu_{w0}` by `k alpha_j^vee`, fixing `mu_w` for `s_j w > w`.
pub fn f_star_pow(p: &MvPolytope, j: usize, k: i64) -> Result<MvPolytope> {
    if k == 0 {
        return Ok(p.clone());
    }
    let g = p.group();
    let word = word_to(p, j);
    let q = shift(p, &word, word.len() - 1, k)?;
    let d = g.cartan().simple_coroot(j).scale(k);
    let w0 = g.longest();
    verify(&q, p, |x| x == w0, |x| !g.has_descent(x, j, Side::Left), &d, "f*")?;
    Ok(q)
}

pub fn f_star(p: &MvPolytope, j: usize) -> Result<MvPolytope> {
    f_star_pow(p, j, 1)
}

/// `(e*_j)^k`, or the zero element when `k > epsilon*_j`.
pub fn e_star_pow(p: &MvPolytope, j: usize, k: i64) -> Result<Raised> {
    if k > epsilon_star(p, j) {
        return Ok(Raised::Bottom);
    }
    if k == 0 {
        return Ok(Raised::Polytope(p.clone()));
    }
    let g = p.group();
    let word = word_to(p, j);
    let q = shift(p, &word, word.len() - 1, -k)?;
    let d = g.cartan().simple_coroot(j).scale(-k);
    let w0 = g.longest();
    verify(&q, p, |x| x == w0, |x| !g.has_descent(x, j, Side::Left), &d, "e*")?;
    Ok(Raised::Polytope(q))
}

/// `e*_j`; the zero element exactly when `mu_{s_j w0} = mu_{w0}`.
pub fn e_star(p: &MvPolytope, j: usize) -> Result<Raised> {
    e_star_pow(p, j, 1)
}

fn expect_polytope(r: Raised, op: &str) -> Result<MvPolytope> {
    r.polytope().ok_or_else(|| MvError::InvariantFailure(format!("{op} reached the zero element")))
}

fn nonneg(k: i64, what: &str) -> Result<i64> {
    if k < 0 {
        return Err(MvError::InvariantFailure(format!("{what} = {k} < 0 at point of use")));
    }
    Ok(k)
}

/// Saito reflection `sigma_j`.
pub fn saito(p: &MvPolytope, j: usize) -> Result<MvPolytope> {
    let b = expect_polytope(e_pow(p, j, epsilon(p, j))?, "e")?;
    let up = nonneg(phi_star(&b, j), "phi*")?;
    let c = expect_polytope(e_star_pow(&b, j, epsilon_star(&b, j))?, "e*")?;
    f_pow(&c, j, up)
}

/// `*`-Saito reflection `sigma*_j`.
pub fn saito_star(p: &MvPolytope, j: usize) -> Result<MvPolytope> {
    let b = expect_polytope(e_star_pow(p, j, epsilon_star(p, j))?, "e*")?;
    let up = nonneg(phi(&b, j), "phi")?;
    let c = expect_polytope(e_pow(&b, j, epsilon(&b, j))?, "e")?;
    f_star_pow(&c, j, up)
}

/// `sigma_{i_1} ... sigma_{i_k}` applied to `p` (rightmost first).
pub fn saito_word(p: &MvPolytope, word: &[usize]) -> Result<MvPolytope> {
    word.iter().rev().try_fold(p.clone(), |acc, &i| saito(&acc, i))
}

pub fn saito_star_word(p: &MvPolytope, word: &[usize]) -> Result<MvPolytope> {
    word.iter().rev().try_fold(p.clone(), |acc, &i| saito_star(&acc, i))
}

/// `sigma_w` along the canonical reduced word of `w`.
pub fn saito_elem(p: &MvPolytope, w: Elem) -> Result<MvPolytope> {
    saito_word(p, p.group().word(w))
}

/// `mu_w = w wt(sigma_{w^-1}(P)) - wt(P)`.
pub fn mu_via_saito(p: &MvPolytope, w: Elem) -> Result<Coweight> {
    let g = p.group();
    let s = saito_elem(p, g.inverse(w))?;
    Ok(g.act_coweight(w, &wt(&s)).sub(&wt(p)))
}

type Stat = fn(&MvPolytope, usize) -> i64;
type Lower = fn(&MvPolytope, usize) -> Result<MvPolytope>;
type Raise = fn(&MvPolytope, usize) -> Result<Raised>;

/// The crystal axioms for both structures at `p`, plus the reading of
/// `epsilon_j` and `epsilon*_j` from first and last Lusztig coordinates.
pub fn axioms_check(p: &MvPolytope) -> Result<Report> {
    let g = p.group();
    let c = p.frame().cartan();
    let mut r = Report::new("crystal-axioms", vec![]);
    for j in 0..g.rank() {
        let aj = c.simple_coroot(j);
        for star in [false, true] {
            let (eps, ph, f, e): (Stat, Stat, Lower, Raise) =
                if star { (epsilon_star, phi_star, f_star, e_star) } else { (epsilon, phi, f_op, e_op) };
            let tag = if star { "*" } else { "" };
            r.expect(ph(p, j) == eps(p, j) + c.pair_with_root(&wt(p), j), || format!("phi{tag}_{} definition", j + 1));
            let up = f(p, j)?;
            r.expect(wt(&up) == wt(p).sub(&aj), || format!("wt(f{tag}_{} b)", j + 1));
            r.expect(eps(&up, j) == eps(p, j) + 1, || format!("eps{tag}(f{tag}_{} b)", j + 1));
            r.expect(ph(&up, j) == ph(p, j) - 1, || format!("phi{tag}(f{tag}_{} b)", j + 1));
            r.expect(e(&up, j)? == Raised::Polytope(p.clone()), || format!("e{tag}_{0} f{tag}_{0} b != b", j + 1));
            match e(p, j)? {
                Raised::Bottom => r.expect(eps(p, j) == 0, || format!("e{tag}_{} b = 0 with eps{tag} > 0", j + 1)),
                Raised::Polytope(down) => {
                    r.expect(eps(p, j) > 0, || format!("e{tag}_{} b != 0 with eps{tag} = 0", j + 1));
                    r.expect(wt(&down) == wt(p).add(&aj), || format!("wt(e{tag}_{} b)", j + 1));
                    r.expect(eps(&down, j) == eps(p, j) - 1, || format!("eps{tag}(e{tag}_{} b)", j + 1));
                    r.expect(ph(&down, j) == ph(p, j) + 1, || format!("phi{tag}(e{tag}_{} b)", j + 1));
                    r.expect(f(&down, j)? == *p, || format!("f{tag}_{0} e{tag}_{0} b != b", j + 1));
                }
            }
        }
    }
    for word in checked_words(g) {
        let n = p.lusztig(&word)?;
        let (first, last) = (word[0], g.star(word[word.len() - 1]));
        r.expect(epsilon(p, first) == n[0], || format!("eps_{} != n_1 on {word:?}", first + 1));
        r.expect(epsilon_star(p, last) == n[n.len() - 1], || format!("eps*_{} != n_m on {word:?}", last + 1));
    }
    Ok(r)
}

/// Saito reflections at `p`: vanishing of the opposite statistic, the
/// cyclic shift of Lusztig data, braid relations, the vertex formula
/// `mu_w = w wt(sigma_{w^-1} P) - wt(P)` and the edge formula
/// `mu_{w s_j} - mu_w = epsilon_j(sigma_{w^-1} P) w alpha_j^vee` for `w < w s_j`.
pub fn saito_check(p: &MvPolytope) -> Result<Report> {
    let g = p.group();
    let c = p.frame().cartan();
    let mut r = Report::new("saito", vec![]);
    for j in 0..g.rank() {
        r.expect(epsilon_star(&saito(p, j)?, j) == 0, || format!("eps*_{0}(sigma_{0} b) != 0", j + 1));
        r.expect(epsilon(&saito_star(p, j)?, j) == 0, || format!("eps_{0}(sigma*_{0} b) != 0", j + 1));
    }
    for word in checked_words(g) {
        let n = p.lusztig(&word)?;
        let m = word.len();
        let mut rot = word[1..].to_vec();
        rot.push(g.star(word[0]));
        let mut shifted = n[1..].to_vec();
        shifted.push(0);
        r.expect(saito(p, word[0])?.lusztig(&rot)? == shifted, || format!("sigma shift on {word:?}"));
        let mut rot = vec![g.star(word[m - 1])];
        rot.extend_from_slice(&word[..m - 1]);
        let mut shifted = vec![0];
        shifted.extend_from_slice(&n[..m - 1]);
        r.expect(saito_star(p, g.star(word[m - 1]))?.lusztig(&rot)? == shifted, || format!("sigma* shift on {word:?}"));
    }
    for i in 0..g.rank() {
        for j in i + 1..g.rank() {
            let m = g.braid_order(i, j);
            let a: Vec<usize> = (0..m).map(|t| if t % 2 == 0 { i } else { j }).collect();
            let b: Vec<usize> = (0..m).map(|t| if t % 2 == 0 { j } else { i }).collect();
            r.expect(saito_word(p, &a)? == saito_word(p, &b)?, || {
                format!("braid relation for sigma_{}, sigma_{}", i + 1, j + 1)
            });
            r.expect(saito_star_word(p, &a)? == saito_star_word(p, &b)?, || {
                format!("braid relation for sigma*_{}, sigma*_{}", i + 1, j + 1)
            });
        }
    }
    for w in g.elements() {
        let s = saito_elem(p, g.inverse(w))?;
        let mu = g.act_coweight(w, &wt(&s)).sub(&wt(p));
        r.expect(mu == *p.vertex(w), || format!("vertex formula at {}", g.label(w)));
        for j in (0..g.rank()).filter(|&j| !g.has_descent(w, j, Side::Right)) {
            let edge = p.vertex(g.rmul_gen(w, j)).sub(p.vertex(w));
            let expect = g.act_coweight(w, &c.simple_coroot(j)).scale(epsilon(&s, j));
            r.expect(edge == expect, || format!("edge formula at {}, j = {}", g.label(w), j + 1));
        }
    }
    Ok(r)
}
