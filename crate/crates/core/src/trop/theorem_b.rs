//! Comparison of the tropical functions `M_gamma` with the combinatorial
//! BZ datum of the polytope in `P_w` having the matching Lusztig data.

use serde::{Deserialize, Serialize};

use super::minors::{default_chart, m_values, TropicalPoint};
use crate::error::{MvError, Result};
use crate::highest::is_in_pw;
use crate::polytope::{Frame, MvPolytope};
use crate::report::Report;
use crate::weyl::Elem;

/// A chamber weight where the two pipelines disagree, with the full witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    /// 1-based words.
    pub w: Vec<usize>,
    pub chart: Vec<usize>,
    #[serde(rename = "A")]
    pub a: Vec<i64>,
    pub gamma: Vec<i64>,
    pub oracle: i64,
    pub bz: i64,
}

/// Lusztig data along [`Frame::word_through`] for a point on the default
/// chart: the exponents reversed, padded with zeros.
pub fn lusztig_of_point(frame: &Frame, w: Elem, a: &[i64]) -> (Vec<usize>, Vec<i64>) {
    let word = frame.word_through(w);
    let mut n: Vec<i64> = a.iter().rev().copied().collect();
    n.resize(word.len(), 0);
    (word, n)
}

/// Outcome of one Theorem B comparison.
#[derive(Clone, Debug)]
pub struct TheoremBOutcome {
    pub report: Report,
    pub counterexamples: Vec<Counterexample>,
    pub polytope: MvPolytope,
}

/// Evaluates `(M_gamma(A))` and the BZ datum of the matching polytope and
/// compares them on every chamber weight. `a` lives on [`default_chart`].
pub fn theorem_b_check(frame: &std::sync::Arc<Frame>, w: Elem, a: &[i64]) -> Result<TheoremBOutcome> {
    let g = frame.group();
    let point = TropicalPoint::new(g, w, default_chart(g, w), a.to_vec())?;
    if !point.chi_trop_nonneg() {
        return Err(MvError::InvalidArgument("tropical point has a negative coordinate".into()));
    }
    let oracle = m_values(frame, w, &point)?;
    let (word, n) = lusztig_of_point(frame, w, a);
    let polytope = MvPolytope::from_lusztig(frame, &word, &n)?;
    let mut report = Report::new("theorem-b", g.word_1based(w));
    let mut counterexamples = Vec::new();
    for (k, c) in frame.chamber_weights().iter().enumerate() {
        let bz = polytope.bz().values()[k];
        report.expect(oracle[k] == bz, || format!("gamma {:?}: M = {}, BZ = {bz}", c.weight.0, oracle[k]));
        if oracle[k] != bz {
            counterexamples.push(Counterexample {
                w: g.word_1based(w),
                chart: point.chart.iter().map(|i| i + 1).collect(),
                a: a.to_vec(),
                gamma: c.weight.0.clone(),
                oracle: oracle[k],
                bz,
            });
        }
    }
    report.expect(is_in_pw(&polytope, w), || "polytope is not in P_w".into());
    Ok(TheoremBOutcome { report, counterexamples, polytope })
}
