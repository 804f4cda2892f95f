//! Rank 2 polytopes as labelled planar polygons.
//!
//! Coroots are placed at the standard angle for the type: `alpha_1^vee` on
//! the x-axis and `alpha_2^vee` at 120 degrees (A2) or 135 degrees (B2, C2)
//! with the correct length ratio. The A2 embedding needs `sqrt(3)`, so `y`
//! is reported exactly as a rational multiple of `y_scale`.

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::cartan::Family;
use crate::error::{MvError, Result};
use crate::polytope::MvPolytope;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolygonVertex {
    /// Weyl elements sharing this vertex, 1-based words.
    pub labels: Vec<Vec<usize>>,
    /// Coweight coordinates in the simple coroot basis.
    pub coweight: Vec<i64>,
    pub x: String,
    /// `y / y_scale` as an exact rational.
    pub y: String,
    pub xf: f64,
    pub yf: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Polygon {
    pub kind: String,
    pub y_scale: String,
    /// Boundary in counterclockwise order from `mu_e`.
    pub vertices: Vec<PolygonVertex>,
}

/// `(x, y / scale)` images of the two simple coroots and `scale` itself.
fn embedding(p: &MvPolytope) -> Result<([[Rational64; 2]; 2], &'static str, f64)> {
    let c = p.frame().cartan();
    let r = |a, b| Rational64::new(a, b);
    if c.rank() != 2 {
        return Err(MvError::InvalidArgument(format!("polygons need rank 2, got {}", c.kind())));
    }
    Ok(match (c.kind().kind, c.a(0, 1), c.a(1, 0)) {
        (Family::A, _, _) => ([[r(1, 1), r(0, 1)], [r(-1, 2), r(1, 2)]], "sqrt(3)", 3f64.sqrt()),
        // alpha_2^vee long
        (_, -1, -2) => ([[r(1, 1), r(0, 1)], [r(-1, 1), r(1, 1)]], "1", 1.0),
        // alpha_2^vee short
        (_, -2, -1) => ([[r(1, 1), r(0, 1)], [r(-1, 2), r(1, 2)]], "1", 1.0),
        _ => return Err(MvError::InvalidArgument(format!("no planar embedding for {}", c.kind()))),
    })
}

/// The boundary walk `e, s1, s1s2, ..., w0, ..., s2s1, s2` with coincident
/// consecutive vertices merged.
pub fn polygon(p: &MvPolytope) -> Result<Polygon> {
    let (basis, scale, scale_f) = embedding(p)?;
    let g = p.group();
    let m = g.braid_order(0, 1);
    let alt = |first: usize, k: usize| -> Vec<usize> { (0..k).map(|t| (first + t) % 2).collect() };
    let mut walk = Vec::new();
    for k in 0..=m {
        walk.push(g.from_word(&alt(0, k))?);
    }
    for k in (1..m).rev() {
        walk.push(g.from_word(&alt(1, k))?);
    }
    let mut vertices: Vec<PolygonVertex> = Vec::new();
    for x in walk {
        let mu = p.vertex(x);
        if let Some(last) = vertices.last_mut() {
            if last.coweight == mu.0 {
                last.labels.push(g.word_1based(x));
                continue;
            }
        }
        let x_exact = basis[0][0] * mu.0[0] + basis[1][0] * mu.0[1];
        let y_exact = basis[0][1] * mu.0[0] + basis[1][1] * mu.0[1];
        let f = |q: Rational64| *q.numer() as f64 / *q.denom() as f64;
        vertices.push(PolygonVertex {
            labels: vec![g.word_1based(x)],
            coweight: mu.0.clone(),
            x: x_exact.to_string(),
            y: y_exact.to_string(),
            xf: f(x_exact),
            yf: f(y_exact) * scale_f,
        });
    }
    if vertices.len() > 1 && vertices[0].coweight == vertices.last().unwrap().coweight {
        let tail = vertices.pop().unwrap();
        vertices[0].labels.extend(tail.labels);
    }
    Ok(Polygon { kind: p.frame().cartan().kind().to_string(), y_scale: scale.into(), vertices })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::Frame;

    #[test]
    fn point_collapses() {
        let f = Frame::parse("B2").unwrap();
        let poly = polygon(&MvPolytope::zero(&f)).unwrap();
        assert_eq!(poly.vertices.len(), 1);
        assert_eq!(poly.vertices[0].labels.len(), 8);
    }

    #[test]
    fn hexagon() {
        let f = Frame::parse("A2").unwrap();
        let p = MvPolytope::from_lusztig(&f, &[0, 1, 0], &[1, 2, 2]).unwrap();
        let poly = polygon(&p).unwrap();
        assert_eq!(poly.vertices.len(), 6);
        assert_eq!(poly.y_scale, "sqrt(3)");
        // mu_{s1} = alpha_1^vee
        assert_eq!((poly.vertices[1].x.as_str(), poly.vertices[1].y.as_str()), ("1", "0"));
        assert!(polygon(&MvPolytope::zero(&Frame::parse("A3").unwrap())).is_err());
    }
}
