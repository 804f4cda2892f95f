//! Finite Weyl groups: enumeration, Bruhat and weak orders, Demazure
//! products, the map `v -> v_w` and rightmost subwords.
//!
//! Elements are small handles into an enumerated group. The canonical form of
//! an element is its action matrix on the weight lattice; the group is keyed
//! by the image of `rho`, which is regular, so equal keys mean equal matrices.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cartan::{CartanData, Coweight, Weight};
use crate::error::{MvError, Result};

pub const DEFAULT_RANK_CAP: usize = 4;
const MAX_ORDER: usize = 1 << 20;

/// Handle to an element of a [`WeylGroup`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem(u32);

impl Elem {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// Serialized form of an element: one reduced word, 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordJson {
    pub word: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct WeylGroup {
    cartan: CartanData,
    words: Vec<Vec<usize>>,
    lengths: Vec<usize>,
    weight_mats: Vec<Vec<i64>>,
    coweight_mats: Vec<Vec<i64>>,
    left: Vec<Elem>,
    right: Vec<Elem>,
    inverse: Vec<Elem>,
    index: HashMap<Vec<i64>, Elem>,
    longest: Elem,
    star: Vec<usize>,
}

impl WeylGroup {
    pub fn new(cartan: &CartanData) -> Result<Self> {
        Self::with_cap(cartan, DEFAULT_RANK_CAP)
    }

    /// Enumerates the group, refusing ranks above `cap`.
    pub fn with_cap(cartan: &CartanData, cap: usize) -> Result<Self> {
        let n = cartan.rank();
        if n > cap {
            return Err(MvError::RankCap { rank: n, cap });
        }
        let a = cartan.matrix();
        let mut id_w = vec![0i64; n * n];
        let mut id_c = vec![0i64; n * n];
        for i in 0..n {
            id_w[i * n + i] = 1;
            id_c[i * n + i] = 1;
        }
        let mut words: Vec<Vec<usize>> = vec![vec![]];
        let mut lengths = vec![0usize];
        let mut weight_mats = vec![id_w];
        let mut coweight_mats = vec![id_c];
        let mut index: HashMap<Vec<i64>, Elem> = HashMap::new();
        index.insert(vec![1; n], Elem(0));
        let mut queue = VecDeque::from([0usize]);

        // BFS by left multiplication: s_i x is longer iff <alpha_i^vee, x rho> > 0
        while let Some(x) = queue.pop_front() {
            let rho_x = rho_image(&weight_mats[x], n);
            for i in 0..n {
                if rho_x[i] <= 0 {
                    continue;
                }
                let mut m = weight_mats[x].clone();
                for col in 0..n {
                    let c = m[i * n + col];
                    for k in 0..n {
                        m[k * n + col] -= c * a[k][i];
                    }
                }
                let key = rho_image(&m, n);
                if index.contains_key(&key) {
                    continue;
                }
                let mut cm = coweight_mats[x].clone();
                for col in 0..n {
                    let c: i64 = (0..n).map(|k| cm[k * n + col] * a[k][i]).sum();
                    cm[i * n + col] -= c;
                }
                let id = words.len();
                if id >= MAX_ORDER {
                    return Err(MvError::InvalidArgument("Weyl group too large".into()));
                }
                let mut word = Vec::with_capacity(words[x].len() + 1);
                word.push(i);
                word.extend_from_slice(&words[x]);
                words.push(word);
                lengths.push(lengths[x] + 1);
                weight_mats.push(m);
                coweight_mats.push(cm);
                index.insert(key, Elem(id as u32));
                queue.push_back(id);
            }
        }

        let order = words.len();
        let mut left = vec![Elem(0); order * n];
        let mut right = vec![Elem(0); order * n];
        for x in 0..order {
            let m = &weight_mats[x];
            let rho_x = rho_image(m, n);
            for i in 0..n {
                let mut l = rho_x.clone();
                let c = l[i];
                for (k, v) in l.iter_mut().enumerate() {
                    *v -= c * a[k][i];
                }
                left[x * n + i] = index[&l];
                // x s_i rho = x (rho - alpha_i)
                let r: Vec<i64> =
                    (0..n).map(|row| rho_x[row] - (0..n).map(|k| m[row * n + k] * a[k][i]).sum::<i64>()).collect();
                right[x * n + i] = index[&r];
            }
        }

        let longest = Elem((0..order).max_by_key(|&x| lengths[x]).expect("nonempty group") as u32);
        let mut g = WeylGroup {
            cartan: cartan.clone(),
            words,
            lengths,
            weight_mats,
            coweight_mats,
            left,
            right,
            inverse: Vec::new(),
            index,
            longest,
            star: Vec::new(),
        };
        g.inverse = (0..order)
            .map(|x| {
                let w: Vec<usize> = g.words[x].iter().rev().copied().collect();
                g.product_unchecked(&w)
            })
            .collect();
        g.star = (0..n)
            .map(|i| {
                let t = g.mul(g.mul(longest, g.gen(i)), longest);
                g.words[t.index()][0]
            })
            .collect();
        Ok(g)
    }

    pub fn cartan(&self) -> &CartanData {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn order(&self) -> usize {
        self.words.len()
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.order()).map(|x| Elem(x as u32))
    }

    pub fn identity(&self) -> Elem {
        Elem(0)
    }

    pub fn longest(&self) -> Elem {
        self.longest
    }

    pub fn gen(&self, i: usize) -> Elem {
        self.left[i]
    }

    pub fn length(&self, x: Elem) -> usize {
        self.lengths[x.index()]
    }

    /// Canonical reduced word, 0-based letters.
    pub fn word(&self, x: Elem) -> &[usize] {
        &self.words[x.index()]
    }

    /// Canonical reduced word with 1-based letters.
    pub fn word_1based(&self, x: Elem) -> Vec<usize> {
        self.word(x).iter().map(|i| i + 1).collect()
    }

    /// Human-readable label such as `s1s2s1`, or `e`.
    pub fn label(&self, x: Elem) -> String {
        if x == self.identity() {
            return "e".to_string();
        }
        self.word(x).iter().map(|i| format!("s{}", i + 1)).collect()
    }

    pub fn lmul_gen(&self, i: usize, x: Elem) -> Elem {
        self.left[x.index() * self.rank() + i]
    }

    pub fn rmul_gen(&self, x: Elem, i: usize) -> Elem {
        self.right[x.index() * self.rank() + i]
    }

    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        self.word(y).iter().fold(x, |acc, &i| self.rmul_gen(acc, i))
    }

    pub fn inverse(&self, x: Elem) -> Elem {
        self.inverse[x.index()]
    }

    fn product_unchecked(&self, word: &[usize]) -> Elem {
        word.iter().fold(Elem(0), |acc, &i| self.rmul_gen(acc, i))
    }

    /// Element of a word with 0-based letters.
    pub fn from_word(&self, word: &[usize]) -> Result<Elem> {
        if let Some(&bad) = word.iter().find(|&&i| i >= self.rank()) {
            return Err(MvError::InvalidWord(format!("letter {} outside 1..={}", bad + 1, self.rank())));
        }
        Ok(self.product_unchecked(word))
    }

    /// Element of a word with 1-based letters.
    pub fn from_word_1based(&self, word: &[usize]) -> Result<Elem> {
        if word.contains(&0) {
            return Err(MvError::InvalidWord("letter 0 (letters are 1-based)".into()));
        }
        let w: Vec<usize> = word.iter().map(|i| i - 1).collect();
        self.from_word(&w)
    }

    pub fn is_reduced(&self, word: &[usize]) -> Result<bool> {
        Ok(self.length(self.from_word(word)?) == word.len())
    }

    /// The element whose action on the weight lattice is `m` (row-major).
    pub fn from_matrix(&self, m: &[i64]) -> Option<Elem> {
        self.index.get(&rho_image(m, self.rank())).copied()
    }

    /// Weight-lattice action matrix, row-major; column `j` is `x omega_j`.
    pub fn matrix(&self, x: Elem) -> &[i64] {
        &self.weight_mats[x.index()]
    }

    pub fn act_weight(&self, x: Elem, w: &Weight) -> Weight {
        Weight(mat_vec(&self.weight_mats[x.index()], &w.0))
    }

    pub fn act_coweight(&self, x: Elem, c: &Coweight) -> Coweight {
        Coweight(mat_vec(&self.coweight_mats[x.index()], &c.0))
    }

    /// Number of positive roots sent to negative roots.
    pub fn inversions(&self, x: Elem) -> usize {
        let m = &self.weight_mats[x.index()];
        let roots = self.cartan.positive_roots();
        let table: HashSet<Vec<i64>> = roots.iter().map(|r| self.cartan.root_to_weight(r).0).collect();
        roots
            .iter()
            .filter(|r| {
                let img = mat_vec(m, &self.cartan.root_to_weight(r).0);
                !table.contains(&img)
            })
            .count()
    }

    pub fn has_descent(&self, x: Elem, i: usize, side: Side) -> bool {
        let y = match side {
            Side::Left => self.lmul_gen(i, x),
            Side::Right => self.rmul_gen(x, i),
        };
        self.length(y) < self.length(x)
    }

    pub fn descents(&self, x: Elem, side: Side) -> Vec<usize> {
        (0..self.rank()).filter(|&i| self.has_descent(x, i, side)).collect()
    }

    /// Strong Bruhat order by the lifting recursion.
    pub fn bruhat_leq(&self, u: Elem, w: Elem) -> bool {
        let (mut u, mut w) = (u, w);
        loop {
            if self.length(u) > self.length(w) {
                return false;
            }
            if w == self.identity() {
                return u == w;
            }
            let i = self.word(w)[0];
            if self.has_descent(u, i, Side::Left) {
                u = self.lmul_gen(i, u);
            }
            w = self.lmul_gen(i, w);
        }
    }

    /// Strong order by the subword property, enumerating reduced subwords of
    /// every reduced word of `w`. Exponential; test oracle only.
    pub fn bruhat_leq_subword(&self, u: Elem, w: Elem) -> bool {
        let k = self.length(u);
        self.reduced_words(w).iter().any(|word| {
            (0u64..1 << word.len()).any(|mask| {
                if mask.count_ones() as usize != k {
                    return false;
                }
                let sub: Vec<usize> = (0..word.len()).filter(|b| mask >> b & 1 == 1).map(|b| word[b]).collect();
                self.product_unchecked(&sub) == u
            })
        })
    }

    /// `u <=_R w` iff `l(u) + l(u^-1 w) = l(w)`; left analogue with `w u^-1`.
    pub fn weak_leq(&self, u: Elem, w: Elem, side: Side) -> bool {
        let q = match side {
            Side::Right => self.mul(self.inverse(u), w),
            Side::Left => self.mul(w, self.inverse(u)),
        };
        self.length(u) + self.length(q) == self.length(w)
    }

    /// Demazure product `u * w`.
    pub fn demazure(&self, u: Elem, w: Elem) -> Elem {
        self.word(u).iter().rev().fold(w, |acc, &i| {
            let y = self.lmul_gen(i, acc);
            if self.length(y) > self.length(acc) {
                y
            } else {
                acc
            }
        })
    }

    /// `v_w = (v w0)((w0 v^-1) * w)`.
    pub fn v_w(&self, v: Elem, w: Elem) -> Elem {
        let w0 = self.longest;
        let left = self.mul(v, w0);
        let d = self.demazure(self.mul(w0, self.inverse(v)), w);
        self.mul(left, d)
    }

    /// `v_w` as the maximal-length element of `[e,v]_R` meet `[e,w]`,
    /// certifying that the maximum is unique.
    pub fn v_w_brute(&self, v: Elem, w: Elem) -> Result<Elem> {
        let cands: Vec<Elem> =
            self.elements().filter(|&x| self.weak_leq(x, v, Side::Right) && self.bruhat_leq(x, w)).collect();
        let best = cands.iter().map(|&x| self.length(x)).max().unwrap_or(0);
        let top: Vec<Elem> = cands.into_iter().filter(|&x| self.length(x) == best).collect();
        match top.as_slice() {
            [x] => Ok(*x),
            _ => Err(MvError::InvariantFailure(format!(
                "{} maximal elements in [e,{}]_R meet [e,{}]",
                top.len(),
                self.label(v),
                self.label(w)
            ))),
        }
    }

    /// The involution with `s_{i*} = w0 s_i w0`.
    pub fn star(&self, i: usize) -> usize {
        self.star[i]
    }

    /// Positions (0-based, ascending) of the reverse-lexicographically first
    /// reduced subword of `word` with product `w`. `word` must be a reduced
    /// word of `w0`.
    pub fn rightmost_subword(&self, word: &[usize], w: Elem) -> Result<Vec<usize>> {
        self.check_w0_word(word)?;
        let mut rem = w;
        let mut picked = Vec::new();
        for k in (0..word.len()).rev() {
            if self.has_descent(rem, word[k], Side::Right) {
                picked.push(k);
                rem = self.rmul_gen(rem, word[k]);
            }
        }
        if rem != self.identity() {
            return Err(MvError::InvariantFailure("greedy subword did not terminate at e".into()));
        }
        picked.reverse();
        Ok(picked)
    }

    /// Literal definition of [`Self::rightmost_subword`] by exhaustive scan.
    pub fn rightmost_subword_brute(&self, word: &[usize], w: Elem) -> Result<Vec<usize>> {
        self.check_w0_word(word)?;
        let k = self.length(w);
        let m = word.len();
        let mut best: Option<Vec<usize>> = None;
        for mask in 0u64..1 << m {
            if mask.count_ones() as usize != k {
                continue;
            }
            let pos: Vec<usize> = (0..m).filter(|b| mask >> b & 1 == 1).collect();
            let letters: Vec<usize> = pos.iter().map(|&p| word[p]).collect();
            if self.product_unchecked(&letters) != w {
                continue;
            }
            let key: Vec<usize> = pos.iter().rev().copied().collect();
            let better = match &best {
                None => true,
                Some(b) => key > b.iter().rev().copied().collect::<Vec<_>>(),
            };
            if better {
                best = Some(pos);
            }
        }
        best.ok_or_else(|| MvError::InvariantFailure("no subword found".into()))
    }

    pub fn check_w0_word(&self, word: &[usize]) -> Result<()> {
        let x = self.from_word(word)?;
        if x != self.longest || word.len() != self.length(x) {
            return Err(MvError::InvalidWord(format!(
                "{:?} is not a reduced word of w0",
                word.iter().map(|i| i + 1).collect::<Vec<_>>()
            )));
        }
        Ok(())
    }

    /// All reduced words of `x`, sorted.
    pub fn reduced_words(&self, x: Elem) -> Vec<Vec<usize>> {
        let mut memo: HashMap<Elem, Vec<Vec<usize>>> = HashMap::new();
        let mut out = self.reduced_words_rec(x, &mut memo);
        out.sort();
        out
    }

    fn reduced_words_rec(&self, x: Elem, memo: &mut HashMap<Elem, Vec<Vec<usize>>>) -> Vec<Vec<usize>> {
        if x == self.identity() {
            return vec![vec![]];
        }
        if let Some(v) = memo.get(&x) {
            return v.clone();
        }
        let mut out = Vec::new();
        for i in self.descents(x, Side::Right) {
            for mut w in self.reduced_words_rec(self.rmul_gen(x, i), memo) {
                w.push(i);
                out.push(w);
            }
        }
        memo.insert(x, out.clone());
        out
    }

    /// Order of `s_i s_j`.
    pub fn braid_order(&self, i: usize, j: usize) -> usize {
        if i == j {
            return 1;
        }
        match self.cartan.a(i, j) * self.cartan.a(j, i) {
            0 => 2,
            1 => 3,
            2 => 4,
            _ => 6,
        }
    }

    /// Words one commutation or one rank-2 braid move away, with the move's
    /// start position.
    pub fn braid_neighbors(&self, word: &[usize]) -> Vec<(usize, Vec<usize>)> {
        let mut out = Vec::new();
        for p in 0..word.len().saturating_sub(1) {
            let (i, j) = (word[p], word[p + 1]);
            if i == j {
                continue;
            }
            let m = self.braid_order(i, j);
            if p + m > word.len() {
                continue;
            }
            let alternates = (0..m).all(|t| word[p + t] == if t % 2 == 0 { i } else { j });
            if alternates {
                let mut nw = word.to_vec();
                for t in 0..m {
                    nw[p + t] = if t % 2 == 0 { j } else { i };
                }
                out.push((p, nw));
            }
        }
        out
    }

    /// The Bruhat interval `[e, w]`, sorted.
    pub fn interval(&self, w: Elem) -> Vec<Elem> {
        let mut set: HashSet<Elem> = HashSet::from([self.identity()]);
        for &i in self.word(w) {
            let ext: Vec<Elem> = set.iter().map(|&x| self.rmul_gen(x, i)).collect();
            set.extend(ext);
        }
        let mut out: Vec<Elem> = set.into_iter().collect();
        out.sort();
        out
    }

    pub fn to_json(&self, x: Elem) -> WordJson {
        WordJson { word: self.word_1based(x) }
    }

    pub fn from_json(&self, j: &WordJson) -> Result<Elem> {
        self.from_word_1based(&j.word)
    }
}

impl fmt::Display for WeylGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W({})", self.cartan.kind())
    }
}

fn rho_image(m: &[i64], n: usize) -> Vec<i64> {
    (0..n).map(|r| m[r * n..(r + 1) * n].iter().sum()).collect()
}

fn mat_vec(m: &[i64], v: &[i64]) -> Vec<i64> {
    let n = v.len();
    (0..n).map(|r| m[r * n..(r + 1) * n].iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(label: &str) -> WeylGroup {
        WeylGroup::new(&CartanData::parse(label).unwrap()).unwrap()
    }

    fn el(g: &WeylGroup, w: &[usize]) -> Elem {
        g.from_word_1based(w).unwrap()
    }

    #[test]
    fn orders() {
        for (label, order) in
            [("A1", 2), ("A2", 6), ("B2", 8), ("A3", 24), ("B3", 48), ("C3", 48), ("A4", 120), ("D4", 192)]
        {
            let g = group(label);
            assert_eq!(g.order(), order, "{label}");
            assert_eq!(g.length(g.longest()), g.cartan().positive_roots().len());
        }
        let e6 = CartanData::parse("E6").unwrap();
        assert_eq!(WeylGroup::new(&e6).unwrap_err(), MvError::RankCap { rank: 6, cap: 4 });
    }

    #[test]
    fn words_and_lengths() {
        let g = group("A2");
        assert_eq!(el(&g, &[1, 2, 1]), el(&g, &[2, 1, 2]));
        assert_eq!(el(&g, &[1, 1]), g.identity());
        assert!(!g.is_reduced(&[0, 0]).unwrap());
        let a3 = group("A3");
        assert_eq!(a3.length(el(&a3, &[1, 2, 3, 1, 2, 1])), 6);
        assert!(a3.from_word_1based(&[4]).is_err());
        for x in a3.elements() {
            assert_eq!(a3.inversions(x), a3.length(x));
            assert_eq!(a3.from_word(a3.word(x)).unwrap(), x);
            assert_eq!(a3.mul(x, a3.inverse(x)), a3.identity());
        }
    }

    #[test]
    fn descents() {
        let g = group("A3");
        assert!(g.descents(g.identity(), Side::Left).is_empty());
        assert_eq!(g.descents(g.longest(), Side::Left), vec![0, 1, 2]);
        assert_eq!(g.descents(g.longest(), Side::Right), vec![0, 1, 2]);
        assert_eq!(g.descents(el(&g, &[1, 2, 3]), Side::Right), vec![2]);
    }

    #[test]
    fn bruhat_examples() {
        let g = group("A3");
        let w = el(&g, &[1, 2, 3]);
        // s1s3 is the subword (1,_,3) of (1,2,3)
        assert!(g.bruhat_leq(el(&g, &[1, 3]), w));
        assert!(!g.bruhat_leq(el(&g, &[2, 1]), w));
        assert!(g.bruhat_leq(el(&g, &[2]), w));
        assert!(g.weak_leq(el(&g, &[1, 2]), w, Side::Right));
        assert!(!g.weak_leq(el(&g, &[2, 3]), w, Side::Right));
    }

    #[test]
    fn demazure_examples() {
        let g = group("A2");
        let s1 = g.gen(0);
        let s12 = el(&g, &[1, 2]);
        assert_eq!(g.demazure(s1, s1), s1);
        assert_eq!(g.demazure(s1, s12), s12);
        assert_eq!(g.demazure(s12, s12), g.longest());
        for x in g.elements() {
            assert_eq!(g.demazure(g.longest(), x), g.longest());
        }
    }

    #[test]
    fn v_w_examples() {
        let g = group("A3");
        let w = el(&g, &[1, 2, 3]);
        assert_eq!(g.v_w(el(&g, &[3, 2, 1]), w), el(&g, &[3]));
        assert_eq!(g.v_w(el(&g, &[2, 1]), w), el(&g, &[2]));
    }

    #[test]
    fn star_involution() {
        let a2 = group("A2");
        assert_eq!(a2.star(0), 1);
        let b2 = group("B2");
        assert_eq!((b2.star(0), b2.star(1)), (0, 1));
        let a3 = group("A3");
        assert_eq!((a3.star(0), a3.star(1), a3.star(2)), (2, 1, 0));
    }

    #[test]
    fn rightmost_subword_table_rows() {
        let g = group("A3");
        let pos = |word: &[usize], w: &[usize]| -> Vec<usize> {
            let word: Vec<usize> = word.iter().map(|i| i - 1).collect();
            g.rightmost_subword(&word, el(&g, w)).unwrap().iter().map(|p| p + 1).collect()
        };
        assert_eq!(pos(&[2, 1, 3, 2, 1, 3], &[2, 1, 2]), vec![2, 4, 5]);
        assert_eq!(pos(&[1, 2, 3, 1, 2, 1], &[1, 2, 1]), vec![4, 5, 6]);
        assert!(pos(&[1, 2, 3, 1, 2, 1], &[]).is_empty());
    }

    #[test]
    fn reduced_words_and_braids() {
        let a2 = group("A2");
        assert_eq!(a2.reduced_words(a2.longest()), vec![vec![0, 1, 0], vec![1, 0, 1]]);
        let a3 = group("A3");
        assert_eq!(a3.reduced_words(a3.longest()).len(), 16);
        let b2 = group("B2");
        assert_eq!(b2.braid_neighbors(&[0, 1, 0, 1]), vec![(0, vec![1, 0, 1, 0])]);
        assert_eq!(a3.braid_neighbors(&[0, 2, 1]), vec![(0, vec![2, 0, 1])]);
    }

    #[test]
    fn intervals() {
        let g = group("A3");
        assert_eq!(g.interval(g.identity()), vec![g.identity()]);
        assert_eq!(g.interval(el(&g, &[1, 2, 3])).len(), 8);
        assert_eq!(g.interval(g.longest()).len(), 24);
    }
}
