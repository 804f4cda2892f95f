use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::{BzData, Frame, Reading};
use crate::cartan::{CartanData, Coweight};
use crate::error::{MvError, Result};

/// `(n1, n2, n3) -> (n2 + n3 - p, p, n1 + n2 - p)` with `p = min(n1, n3)`.
pub fn a2_braid_transition(n1: i64, n2: i64, n3: i64) -> (i64, i64, i64) {
    let p = n1.min(n3);
    (n2 + n3 - p, p, n1 + n2 - p)
}

/// Source word of a doubly-laced braid move, in the B2 labelling where
/// `a_12 = -1` and `a_21 = -2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum B2Source {
    /// `(1,2,1,2) -> (2,1,2,1)`
    OneTwo,
    /// `(2,1,2,1) -> (1,2,1,2)`
    TwoOne,
}

impl B2Source {
    fn words(self) -> ([usize; 4], [usize; 4]) {
        match self {
            B2Source::OneTwo => ([0, 1, 0, 1], [1, 0, 1, 0]),
            B2Source::TwoOne => ([1, 0, 1, 0], [0, 1, 0, 1]),
        }
    }

    pub fn reverse(self) -> Self {
        match self {
            B2Source::OneTwo => B2Source::TwoOne,
            B2Source::TwoOne => B2Source::OneTwo,
        }
    }
}

fn b2_frame() -> &'static Arc<Frame> {
    static FRAME: OnceLock<Arc<Frame>> = OnceLock::new();
    FRAME.get_or_init(|| Frame::parse("B2").expect("B2 is a valid type"))
}

/// Every 4-vector on the opposite word such that the two paths together form
/// a GGMS polygon satisfying the edge inequalities and all four
/// doubly-laced relations.
///
/// The target coroots at steps 1 and 4 are the two simple coroots, so the
/// middle two lengths determine the outer two by coweight conservation. Each
/// length is bounded by the height of the total coweight.
pub fn b2_solve(n: [i64; 4], src: B2Source) -> Result<Vec<[i64; 4]>> {
    if n.iter().any(|&x| x < 0) {
        return Err(MvError::InvalidArgument("Lusztig data must be nonnegative".into()));
    }
    let frame = b2_frame();
    let g = frame.group();
    let (sw, tw) = src.words();
    let src_path = frame.path_vertices(&sw, &n);
    let lam = src_path.last().expect("nonempty path").1.clone();
    let bound: i64 = lam.0.iter().sum();
    let beta = frame.path_coroots(&tw);
    let mut sols = Vec::new();
    for m2 in 0..=bound {
        for m3 in 0..=bound {
            let r = lam.sub(&beta[1].scale(m2)).sub(&beta[2].scale(m3));
            let (m1, m4) = (r.0[tw[0]], r.0[tw[3]]);
            if m1 < 0 || m4 < 0 {
                continue;
            }
            let m = [m1, m2, m3, m4];
            let mut mu: Vec<Option<Coweight>> = vec![None; g.order()];
            for (x, v) in src_path.iter().cloned().chain(frame.path_vertices(&tw, &m)) {
                mu[x.index()] = Some(v);
            }
            let mu: Vec<Coweight> = mu.into_iter().map(|v| v.expect("two paths cover B2")).collect();
            let Ok(bz) = BzData::from_vertices(frame, &mu) else { continue };
            if bz.edge_violations().is_empty() && bz.plucker_violations(Reading::Standard).is_empty() {
                sols.push(m);
            }
        }
    }
    Ok(sols)
}

type Transitions = HashMap<([i64; 4], B2Source), [i64; 4]>;

/// The unique solution of [`b2_solve`]; results are memoized.
pub fn b2_braid_transition(n: [i64; 4], src: B2Source) -> Result<[i64; 4]> {
    static CACHE: OnceLock<Mutex<Transitions>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(&m) = cache.lock().expect("cache lock").get(&(n, src)) {
        return Ok(m);
    }
    let sols = b2_solve(n, src)?;
    let [m] = sols[..] else {
        return Err(MvError::InvariantFailure(format!("B2 transition of {n:?} has {} solutions", sols.len())));
    };
    let mut c = cache.lock().expect("cache lock");
    c.insert((n, src), m);
    c.insert((m, src.reverse()), n);
    Ok(m)
}

/// Lusztig data after the braid move starting at position `p` of `word`.
pub(super) fn apply_move(cartan: &CartanData, word: &[usize], p: usize, n: &[i64]) -> Result<Vec<i64>> {
    let (i, j) = (word[p], word[p + 1]);
    let mut out = n.to_vec();
    match cartan.a(i, j) * cartan.a(j, i) {
        0 => out.swap(p, p + 1),
        1 => {
            let (a, b, c) = a2_braid_transition(n[p], n[p + 1], n[p + 2]);
            out[p..p + 3].copy_from_slice(&[a, b, c]);
        }
        2 => {
            let src = if cartan.a(i, j) == -1 { B2Source::OneTwo } else { B2Source::TwoOne };
            let m = b2_braid_transition([n[p], n[p + 1], n[p + 2], n[p + 3]], src)?;
            out[p..p + 4].copy_from_slice(&m);
        }
        _ => return Err(MvError::G2Unsupported),
    }
    Ok(out)
}
