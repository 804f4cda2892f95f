//! MV polytopes as BZ data, vertex data and Lusztig data.

mod braid;
mod relations;

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::cartan::{pair, CartanData, Coweight, Weight};
use crate::error::{MvError, Result};
use crate::weyl::{Elem, WeylGroup};

pub use braid::{a2_braid_transition, b2_braid_transition, b2_solve, B2Source};
pub use relations::Reading;

/// A chamber weight `v omega_i` with the shortest `v` producing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChamberWeight {
    pub weight: Weight,
    pub index: usize,
    pub rep: Elem,
}

/// The reduced words of `w0` and their braid graph.
#[derive(Debug)]
pub struct W0Words {
    pub words: Vec<Vec<usize>>,
    pub index: HashMap<Vec<usize>, usize>,
    /// `adj[k]` lists `(position, neighbour)` pairs.
    pub adj: Vec<Vec<(usize, usize)>>,
}

/// Everything about a root datum that polytopes share: the Weyl group, the
/// chamber weights and the indexing `(x, i) -> x omega_i`.
#[derive(Debug)]
pub struct Frame {
    group: WeylGroup,
    gamma: Vec<ChamberWeight>,
    gamma_index: HashMap<Weight, usize>,
    cw: Vec<usize>,
    w0_words: OnceLock<W0Words>,
}

impl Frame {
    pub fn new(cartan: &CartanData) -> Result<Arc<Frame>> {
        Ok(Self::from_group(WeylGroup::new(cartan)?))
    }

    pub fn parse(label: &str) -> Result<Arc<Frame>> {
        Self::new(&CartanData::parse(label)?)
    }

    pub fn from_group(group: WeylGroup) -> Arc<Frame> {
        let n = group.rank();
        // shortest representative first: elements are enumerated by length
        let mut by_weight: HashMap<Weight, (usize, Elem)> = HashMap::new();
        for x in group.elements() {
            for i in 0..n {
                let wt = group.act_weight(x, &Weight::fundamental(n, i));
                by_weight.entry(wt).or_insert((i, x));
            }
        }
        let mut gamma: Vec<ChamberWeight> =
            by_weight.into_iter().map(|(weight, (index, rep))| ChamberWeight { weight, index, rep }).collect();
        gamma.sort_by(|a, b| a.weight.cmp(&b.weight));
        let gamma_index: HashMap<Weight, usize> =
            gamma.iter().enumerate().map(|(k, c)| (c.weight.clone(), k)).collect();
        let mut cw = vec![0; group.order() * n];
        for x in group.elements() {
            for i in 0..n {
                let wt = group.act_weight(x, &Weight::fundamental(n, i));
                cw[x.index() * n + i] = gamma_index[&wt];
            }
        }
        Arc::new(Frame { group, gamma, gamma_index, cw, w0_words: OnceLock::new() })
    }

    pub fn group(&self) -> &WeylGroup {
        &self.group
    }

    pub fn cartan(&self) -> &CartanData {
        self.group.cartan()
    }

    pub fn rank(&self) -> usize {
        self.group.rank()
    }

    /// Chamber weights sorted by weight vector.
    pub fn chamber_weights(&self) -> &[ChamberWeight] {
        &self.gamma
    }

    pub fn gamma_len(&self) -> usize {
        self.gamma.len()
    }

    /// Position of `x omega_i` in [`Self::chamber_weights`].
    pub fn cw(&self, x: Elem, i: usize) -> usize {
        self.cw[x.index() * self.rank() + i]
    }

    pub fn gamma_position(&self, w: &Weight) -> Option<usize> {
        self.gamma_index.get(w).copied()
    }

    /// Reduced words of `w0`, computed on first use.
    pub fn w0_words(&self) -> &W0Words {
        self.w0_words.get_or_init(|| {
            let g = &self.group;
            let words = g.reduced_words(g.longest());
            let index: HashMap<Vec<usize>, usize> = words.iter().enumerate().map(|(k, w)| (w.clone(), k)).collect();
            let adj = words
                .iter()
                .map(|w| g.braid_neighbors(w).into_iter().map(|(p, nw)| (p, index[&nw])).collect())
                .collect();
            W0Words { words, index, adj }
        })
    }

    /// Canonical reduced word of `w0`: the canonical word of `w0` itself.
    pub fn default_word(&self) -> Vec<usize> {
        self.group.word(self.group.longest()).to_vec()
    }

    /// A reduced word of `w0` beginning with a reduced word of `w`.
    pub fn word_through(&self, w: Elem) -> Vec<usize> {
        let g = &self.group;
        let mut word = g.word(w).to_vec();
        let rest = g.mul(g.inverse(w), g.longest());
        word.extend_from_slice(g.word(rest));
        word
    }

    /// Coroot `w_{k-1} alpha_{i_k}^vee` of each step along `word`.
    pub fn path_coroots(&self, word: &[usize]) -> Vec<Coweight> {
        let g = &self.group;
        let mut x = g.identity();
        word.iter()
            .map(|&i| {
                let c = g.act_coweight(x, &Coweight::simple_coroot(self.rank(), i));
                x = g.rmul_gen(x, i);
                c
            })
            .collect()
    }

    /// Vertices `mu_{w_0}, ..., mu_{w_m}` along `word` for edge lengths `n`.
    pub fn path_vertices(&self, word: &[usize], n: &[i64]) -> Vec<(Elem, Coweight)> {
        let g = &self.group;
        let mut x = g.identity();
        let mut mu = Coweight::zero(self.rank());
        let mut out = vec![(x, mu.clone())];
        for (c, (&i, &len)) in self.path_coroots(word).iter().zip(word.iter().zip(n)) {
            x = g.rmul_gen(x, i);
            mu = mu.add(&c.scale(len));
            out.push((x, mu.clone()));
        }
        out
    }
}

/// A rule violation found by one of the checkers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub relation: String,
    /// Word (1-based) of the Weyl element where the relation was evaluated.
    pub w: Vec<usize>,
    /// 1-based indices involved.
    pub indices: Vec<usize>,
    pub lhs: i64,
    pub rhs: i64,
}

/// Hyperplane data `M: Gamma -> Z`.
#[derive(Clone, Debug)]
pub struct BzData {
    frame: Arc<Frame>,
    values: Vec<i64>,
}

impl PartialEq for BzData {
    fn eq(&self, other: &Self) -> bool {
        self.frame.cartan() == other.frame.cartan() && self.values == other.values
    }
}
impl Eq for BzData {}

impl BzData {
    pub fn zero(frame: &Arc<Frame>) -> Self {
        Self { frame: frame.clone(), values: vec![0; frame.gamma_len()] }
    }

    pub fn from_values(frame: &Arc<Frame>, values: Vec<i64>) -> Result<Self> {
        if values.len() != frame.gamma_len() {
            return Err(MvError::InvalidBz(format!("expected {} values, got {}", frame.gamma_len(), values.len())));
        }
        Ok(Self { frame: frame.clone(), values })
    }

    pub fn frame(&self) -> &Arc<Frame> {
        &self.frame
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [i64] {
        &mut self.values
    }

    /// `M_{x omega_i}`.
    pub fn at(&self, x: Elem, i: usize) -> i64 {
        self.values[self.frame.cw(x, i)]
    }

    pub fn get(&self, gamma: &Weight) -> Option<i64> {
        self.frame.gamma_position(gamma).map(|k| self.values[k])
    }

    /// `mu_x = sum_i M_{x omega_i} x alpha_i^vee`.
    pub fn vertex(&self, x: Elem) -> Coweight {
        let g = self.frame.group();
        let n = self.frame.rank();
        let mut c = Coweight::zero(n);
        for i in 0..n {
            c.0[i] = self.at(x, i);
        }
        g.act_coweight(x, &c)
    }

    pub fn vertices(&self) -> Vec<Coweight> {
        self.frame.group().elements().map(|x| self.vertex(x)).collect()
    }

    /// `M_{x omega_i} = <mu_x, x omega_i>`, after checking that the family
    /// is GGMS: `<mu_y - mu_x, x omega_i> >= 0` for all `x, y, i`.
    pub fn from_vertices(frame: &Arc<Frame>, mu: &[Coweight]) -> Result<Self> {
        let g = frame.group();
        let n = frame.rank();
        if mu.len() != g.order() {
            return Err(MvError::NotGgms(format!("expected {} vertices, got {}", g.order(), mu.len())));
        }
        for x in g.elements() {
            for i in 0..n {
                let gw = &frame.chamber_weights()[frame.cw(x, i)].weight;
                let mx = pair(&mu[x.index()], gw);
                if let Some(y) = g.elements().find(|y| pair(&mu[y.index()], gw) < mx) {
                    return Err(MvError::NotGgms(format!(
                        "<mu_{} - mu_{}, {} omega_{}> < 0",
                        g.label(y),
                        g.label(x),
                        g.label(x),
                        i + 1
                    )));
                }
            }
        }
        let mut values = vec![0; frame.gamma_len()];
        for x in g.elements() {
            for i in 0..n {
                let k = frame.cw(x, i);
                values[k] = pair(&mu[x.index()], &frame.chamber_weights()[k].weight);
            }
        }
        Ok(Self { frame: frame.clone(), values })
    }

    /// `M_{omega_i} = 0` for every `i`.
    pub fn is_normalized(&self) -> bool {
        let e = self.frame.group().identity();
        (0..self.frame.rank()).all(|i| self.at(e, i) == 0)
    }

    pub fn edge_violations(&self) -> Vec<Violation> {
        relations::edge_violations(self)
    }

    pub fn plucker_violations(&self, reading: Reading) -> Vec<Violation> {
        relations::plucker_violations(self, reading)
    }

    /// Normalization, edge inequalities and tropical Plücker relations.
    pub fn is_bz_datum(&self) -> bool {
        self.is_normalized()
            && self.edge_violations().is_empty()
            && self.plucker_violations(Reading::Standard).is_empty()
    }

    /// `mu_{w0}`.
    pub fn coweight(&self) -> Coweight {
        self.vertex(self.frame.group().longest())
    }

    /// Edge lengths along a reduced word of `w0`.
    pub fn lusztig(&self, word: &[usize]) -> Result<Vec<i64>> {
        let g = self.frame.group();
        g.check_w0_word(word)?;
        let n = self.frame.rank();
        let a = self.frame.cartan();
        let mut prev = g.identity();
        let mut out = Vec::with_capacity(word.len());
        for &i in word {
            let next = g.rmul_gen(prev, i);
            let mut v = -self.at(prev, i) - self.at(next, i);
            for j in (0..n).filter(|&j| j != i) {
                v -= a.a(j, i) * self.at(prev, j);
            }
            out.push(v);
            prev = next;
        }
        Ok(out)
    }
}

/// Lusztig data along a reduced word of `w0` (0-based letters).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LusztigDatum {
    pub word: Vec<usize>,
    pub n: Vec<i64>,
}

/// JSON form of [`LusztigDatum`] with 1-based letters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LusztigJson {
    pub word: Vec<usize>,
    pub n: Vec<i64>,
}

impl LusztigDatum {
    pub fn new(word: Vec<usize>, n: Vec<i64>) -> Result<Self> {
        if word.len() != n.len() {
            return Err(MvError::InvalidArgument(format!(
                "word has length {} but datum has length {}",
                word.len(),
                n.len()
            )));
        }
        if let Some(k) = n.iter().position(|&x| x < 0) {
            return Err(MvError::InvalidArgument(format!("entry {} is negative", k + 1)));
        }
        Ok(Self { word, n })
    }

    pub fn to_json(&self) -> LusztigJson {
        LusztigJson { word: self.word.iter().map(|i| i + 1).collect(), n: self.n.clone() }
    }

    pub fn from_json(j: &LusztigJson) -> Result<Self> {
        if j.word.contains(&0) {
            return Err(MvError::InvalidWord("letters are 1-based".into()));
        }
        Self::new(j.word.iter().map(|i| i - 1).collect(), j.n.clone())
    }
}

/// Builds the BZ datum with Lusztig data `n` along `word` by carrying the
/// datum across the whole braid graph of reduced words of `w0`; every route
/// must agree, and every vertex reached along different words must agree.
pub fn bz_from_lusztig(frame: &Arc<Frame>, word: &[usize], n: &[i64]) -> Result<BzData> {
    let g = frame.group();
    g.check_w0_word(word)?;
    LusztigDatum::new(word.to_vec(), n.to_vec())?;
    let w0w = frame.w0_words();
    let start = w0w.index[word];
    let mut data: Vec<Option<Vec<i64>>> = vec![None; w0w.words.len()];
    data[start] = Some(n.to_vec());
    let mut stack = vec![start];
    while let Some(k) = stack.pop() {
        let cur = data[k].clone().expect("visited");
        for &(p, nb) in &w0w.adj[k] {
            let next = braid::apply_move(frame.cartan(), &w0w.words[k], p, &cur)?;
            match &data[nb] {
                Some(existing) if *existing != next => {
                    return Err(MvError::InvariantFailure(format!(
                        "braid propagation disagrees on word {:?}",
                        w0w.words[nb].iter().map(|i| i + 1).collect::<Vec<_>>()
                    )));
                }
                Some(_) => {}
                None => {
                    data[nb] = Some(next);
                    stack.push(nb);
                }
            }
        }
    }
    let mut mu: Vec<Option<Coweight>> = vec![None; g.order()];
    for (k, d) in data.iter().enumerate() {
        let d = d.as_ref().ok_or_else(|| MvError::InvariantFailure("braid graph disconnected".into()))?;
        for (x, v) in frame.path_vertices(&w0w.words[k], d) {
            match &mu[x.index()] {
                Some(old) if *old != v => {
                    return Err(MvError::InvariantFailure(format!("vertex mu_{} differs between paths", g.label(x))));
                }
                Some(_) => {}
                None => mu[x.index()] = Some(v),
            }
        }
    }
    let mu: Vec<Coweight> = mu.into_iter().map(|v| v.expect("every element lies on a path")).collect();
    BzData::from_vertices(frame, &mu)
}

/// A validated MV polytope with cached vertices.
#[derive(Clone, Debug)]
pub struct MvPolytope {
    bz: BzData,
    mu: Vec<Coweight>,
}

impl PartialEq for MvPolytope {
    fn eq(&self, other: &Self) -> bool {
        self.bz == other.bz
    }
}
impl Eq for MvPolytope {}

impl MvPolytope {
    /// Validates `bz` as a BZ datum.
    pub fn new(bz: BzData) -> Result<Self> {
        if !bz.is_normalized() {
            return Err(MvError::InvalidBz("M_{omega_i} != 0".into()));
        }
        if let Some(v) = bz.edge_violations().first() {
            return Err(MvError::InvalidBz(format!("edge inequality fails at w = {:?}, i = {:?}", v.w, v.indices)));
        }
        if let Some(v) = bz.plucker_violations(Reading::Standard).first() {
            return Err(MvError::InvalidBz(format!(
                "tropical Plücker relation {} fails at w = {:?}, (i,j) = {:?}",
                v.relation, v.w, v.indices
            )));
        }
        let mu = bz.vertices();
        Ok(Self { bz, mu })
    }

    pub fn zero(frame: &Arc<Frame>) -> Self {
        let bz = BzData::zero(frame);
        let mu = bz.vertices();
        Self { bz, mu }
    }

    /// The polytope with Lusztig data `n` along the reduced word `word` of `w0`.
    /// A datum that fails validation is an invariant failure.
    pub fn from_lusztig(frame: &Arc<Frame>, word: &[usize], n: &[i64]) -> Result<Self> {
        let bz = bz_from_lusztig(frame, word, n)?;
        Self::new(bz).map_err(|e| MvError::InvariantFailure(e.to_string()))
    }

    pub fn frame(&self) -> &Arc<Frame> {
        self.bz.frame()
    }

    pub fn group(&self) -> &WeylGroup {
        self.bz.frame().group()
    }

    pub fn bz(&self) -> &BzData {
        &self.bz
    }

    pub fn vertex(&self, x: Elem) -> &Coweight {
        &self.mu[x.index()]
    }

    pub fn vertices(&self) -> &[Coweight] {
        &self.mu
    }

    pub fn coweight(&self) -> &Coweight {
        self.vertex(self.group().longest())
    }

    pub fn is_point(&self) -> bool {
        self.mu.iter().all(Coweight::is_zero)
    }

    pub fn lusztig(&self, word: &[usize]) -> Result<Vec<i64>> {
        self.bz.lusztig(word)
    }
}
