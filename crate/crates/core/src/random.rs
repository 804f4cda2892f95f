//! Seeded generation of MV polytopes through random Lusztig data.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::polytope::{Frame, MvPolytope};
use crate::weyl::Elem;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_vector(rng: &mut impl Rng, len: usize, max: i64) -> Vec<i64> {
    (0..len).map(|_| rng.gen_range(0..=max)).collect()
}

/// Lusztig data uniform in `{0..max}^m` on the default word of `w0`.
pub fn random_polytope(frame: &Arc<Frame>, rng: &mut impl Rng, max: i64) -> Result<MvPolytope> {
    let word = frame.default_word();
    let n = random_vector(rng, word.len(), max);
    MvPolytope::from_lusztig(frame, &word, &n)
}

/// A member of `P_w`: random prefix data on [`Frame::word_through`].
pub fn random_pw(frame: &Arc<Frame>, w: Elem, rng: &mut impl Rng, max: i64) -> Result<MvPolytope> {
    let word = frame.word_through(w);
    let mut n = random_vector(rng, frame.group().length(w), max);
    n.resize(word.len(), 0);
    MvPolytope::from_lusztig(frame, &word, &n)
}

pub fn random_polytopes(frame: &Arc<Frame>, count: usize, max: i64, seed: u64) -> Result<Vec<MvPolytope>> {
    let mut r = rng(seed);
    (0..count).map(|_| random_polytope(frame, &mut r, max)).collect()
}

/// Every vector in `{0..bound}^len`, lexicographic.
pub fn grid(len: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=bound).map(move |x| {
                    let mut v = v.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_and_valid() {
        let f = Frame::parse("B2").unwrap();
        let a = random_polytopes(&f, 5, 3, 7).unwrap();
        assert_eq!(a, random_polytopes(&f, 5, 3, 7).unwrap());
        assert!(a.iter().all(|p| p.bz().is_bz_datum()));
        let w = f.group().from_word(&[1, 0]).unwrap();
        let p = random_pw(&f, w, &mut rng(1), 4).unwrap();
        assert!(crate::highest::is_in_pw(&p, w));
    }

    #[test]
    fn grid_order() {
        assert_eq!(grid(2, 1), vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(grid(0, 5), vec![Vec::<i64>::new()]);
    }
}
