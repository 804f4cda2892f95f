//! JSON forms of polytopes, vertex data and Lusztig data.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::cartan::{CartanData, Coweight, Weight};
use crate::error::{MvError, Result};
use crate::polytope::{BzData, Frame, LusztigDatum, LusztigJson, MvPolytope};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanJson {
    pub kind: String,
    pub matrix: Vec<Vec<i64>>,
}

impl CartanJson {
    pub fn of(c: &CartanData) -> Self {
        Self { kind: c.kind().to_string(), matrix: c.matrix().to_vec() }
    }

    /// The Cartan data named by `kind`; a supplied matrix must agree with it.
    pub fn resolve(&self) -> Result<CartanData> {
        let c = CartanData::parse(&self.kind)?;
        if !self.matrix.is_empty() && self.matrix != c.matrix() {
            return Err(MvError::Schema(format!("matrix does not match type {}", self.kind)));
        }
        Ok(c)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BzEntry {
    pub weight: Vec<i64>,
    pub value: i64,
}

/// `{"cartan": {...}, "bz": [{"weight": [...], "value": n}, ...]}`, weights
/// sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeJson {
    pub cartan: CartanJson,
    pub bz: Vec<BzEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexEntry {
    /// 1-based canonical word of the Weyl element.
    pub w: Vec<usize>,
    pub mu: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerticesJson {
    pub cartan: CartanJson,
    pub vertices: Vec<VertexEntry>,
}

pub fn polytope_json(p: &MvPolytope) -> PolytopeJson {
    let f = p.frame();
    PolytopeJson {
        cartan: CartanJson::of(f.cartan()),
        bz: f
            .chamber_weights()
            .iter()
            .zip(p.bz().values())
            .map(|(c, &value)| BzEntry { weight: c.weight.0.clone(), value })
            .collect(),
    }
}

pub fn vertices_json(p: &MvPolytope) -> VerticesJson {
    let g = p.group();
    VerticesJson {
        cartan: CartanJson::of(p.frame().cartan()),
        vertices: g.elements().map(|x| VertexEntry { w: g.word_1based(x), mu: p.vertex(x).0.clone() }).collect(),
    }
}

/// Reads BZ data over `frame`; every chamber weight must appear exactly once.
pub fn polytope_from_entries(frame: &Arc<Frame>, entries: &[BzEntry]) -> Result<MvPolytope> {
    let mut values = vec![None; frame.gamma_len()];
    for e in entries {
        let k = frame
            .gamma_position(&Weight(e.weight.clone()))
            .ok_or_else(|| MvError::Schema(format!("{:?} is not a chamber weight", e.weight)))?;
        if values[k].replace(e.value).is_some() {
            return Err(MvError::Schema(format!("weight {:?} listed twice", e.weight)));
        }
    }
    let values = values
        .into_iter()
        .enumerate()
        .map(|(k, v)| {
            v.ok_or_else(|| MvError::Schema(format!("missing weight {:?}", frame.chamber_weights()[k].weight.0)))
        })
        .collect::<Result<Vec<_>>>()?;
    MvPolytope::new(BzData::from_values(frame, values)?)
}

pub fn polytope_from_vertices(frame: &Arc<Frame>, entries: &[VertexEntry]) -> Result<MvPolytope> {
    let g = frame.group();
    let mut mu = vec![None; g.order()];
    for e in entries {
        let x = g.from_word_1based(&e.w)?;
        if e.mu.len() != g.rank() {
            return Err(MvError::Schema(format!("vertex {:?} has the wrong length", e.mu)));
        }
        mu[x.index()] = Some(Coweight(e.mu.clone()));
    }
    let mu = mu
        .into_iter()
        .map(|m| m.ok_or_else(|| MvError::Schema("vertex data must list every Weyl element".into())))
        .collect::<Result<Vec<_>>>()?;
    MvPolytope::new(BzData::from_vertices(frame, &mu)?)
}

fn parse_value<T: serde::de::DeserializeOwned>(v: &Value) -> Result<T> {
    serde_json::from_value(v.clone()).map_err(|e| MvError::Schema(e.to_string()))
}

/// Any accepted input: a polytope (`bz`), vertex data (`vertices`), or
/// Lusztig data (`word`, `n`). `kind` fills in a missing `cartan` field.
pub fn read_polytope(text: &str, kind: Option<&str>) -> Result<MvPolytope> {
    let v: Value = serde_json::from_str(text).map_err(|e| MvError::Schema(e.to_string()))?;
    let obj = v.as_object().ok_or_else(|| MvError::Schema("expected a JSON object".into()))?;
    let cartan = match obj.get("cartan") {
        Some(c) => parse_value::<CartanJson>(c)?.resolve()?,
        None => CartanData::parse(kind.ok_or_else(|| MvError::Schema("no Cartan type given".into()))?)?,
    };
    if let Some(k) = kind {
        if CartanData::parse(k)? != cartan {
            return Err(MvError::Schema(format!("file is of type {}, not {k}", cartan.kind())));
        }
    }
    let frame = Frame::new(&cartan)?;
    if let Some(bz) = obj.get("bz") {
        polytope_from_entries(&frame, &parse_value::<Vec<BzEntry>>(bz)?)
    } else if let Some(vs) = obj.get("vertices") {
        polytope_from_vertices(&frame, &parse_value::<Vec<VertexEntry>>(vs)?)
    } else if obj.contains_key("word") {
        let j: LusztigJson = parse_value(&v)?;
        let d = LusztigDatum::from_json(&j)?;
        MvPolytope::from_lusztig(&frame, &d.word, &d.n)
    } else {
        Err(MvError::Schema("expected one of `bz`, `vertices`, or `word` and `n`".into()))
    }
}

/// Lusztig data of `p` along a 1-based word.
pub fn lusztig_json(p: &MvPolytope, word_1based: &[usize]) -> Result<LusztigJson> {
    if word_1based.contains(&0) {
        return Err(MvError::InvalidWord("letters are 1-based".into()));
    }
    let word: Vec<usize> = word_1based.iter().map(|i| i - 1).collect();
    let n = p.lusztig(&word)?;
    Ok(LusztigDatum::new(word, n)?.to_json())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips() {
        let p = read_polytope(r#"{"word":[1,2,1],"n":[1,2,2]}"#, Some("A2")).unwrap();
        assert_eq!(lusztig_json(&p, &[2, 1, 2]).unwrap(), LusztigJson { word: vec![2, 1, 2], n: vec![3, 1, 2] });
        let text = serde_json::to_string(&polytope_json(&p)).unwrap();
        assert_eq!(read_polytope(&text, None).unwrap(), p);
        let text = serde_json::to_string(&vertices_json(&p)).unwrap();
        assert_eq!(read_polytope(&text, Some("A2")).unwrap(), p);
        let j = polytope_json(&p);
        assert!(j.bz.windows(2).all(|w| w[0].weight < w[1].weight));
    }

    #[test]
    fn rejects() {
        assert!(matches!(read_polytope("{", Some("A2")), Err(MvError::Schema(_))));
        assert!(matches!(read_polytope(r#"{"word":[1,2,1],"n":[1,2,2]}"#, None), Err(MvError::Schema(_))));
        assert!(matches!(read_polytope(r#"{"x":1}"#, Some("A2")), Err(MvError::Schema(_))));
        assert!(matches!(read_polytope("{}", Some("G2")), Err(MvError::G2Unsupported)));
        let mut j = polytope_json(&MvPolytope::zero(&Frame::parse("A2").unwrap()));
        j.bz[0].value = 5;
        let text = serde_json::to_string(&j).unwrap();
        assert!(matches!(read_polytope(&text, None), Err(MvError::InvalidBz(_))));
        j.bz.pop();
        let text = serde_json::to_string(&j).unwrap();
        assert!(matches!(read_polytope(&text, None), Err(MvError::Schema(_))));
    }
}
