//! Sweeps over many independent checks, run on the rayon pool when the
//! `parallel` feature is on. Output order never depends on scheduling.

use std::sync::Arc;

use crate::error::Result;
use crate::highest::{generate_pw, theorem_a_check};
use crate::polytope::{Frame, MvPolytope, Reading};
use crate::random::{grid, random_vector, rng};
use crate::report::Report;
use crate::trop::{edge_equality_check, theorem_b_check, vanishing_scan, Counterexample};
use crate::weyl::Elem;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Exec {
    Sequential,
    /// Falls back to sequential without the `parallel` feature.
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

/// Order-preserving map.
pub fn map<T, R, F>(exec: Exec, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(f).collect()
        }
        _ => items.iter().map(f).collect(),
    }
}

/// Theorem A on every polytope of every `P_w` with prefix entries at most
/// `bound`; one report per `w`, in group order.
pub fn theorem_a_sweep(frame: &Arc<Frame>, bound: i64, exec: Exec) -> Result<Vec<Report>> {
    let ws: Vec<Elem> = frame.group().elements().collect();
    map(exec, &ws, |&w| {
        let mut r = Report::new("theorem-a", frame.group().word_1based(w));
        for p in generate_pw(frame, w, &frame.word_through(w), bound)? {
            r.absorb(theorem_a_check(&p, w));
        }
        Ok(r)
    })
    .into_iter()
    .collect()
}

/// One report folding a per-polytope check over `ps`.
pub fn fold_reports(
    check: &str,
    ps: &[MvPolytope],
    exec: Exec,
    f: impl Fn(&MvPolytope) -> Report + Sync + Send,
) -> Report {
    let mut out = Report::new(check, vec![]);
    for r in map(exec, ps, f) {
        out.absorb(r);
    }
    out
}

/// Every `(w, A)` with `A` in `{0..bound}^{l(w)}`.
pub fn exhaustive_points(frame: &Frame, bound: i64) -> Vec<(Elem, Vec<i64>)> {
    let g = frame.group();
    g.elements().flat_map(|w| grid(g.length(w), bound).into_iter().map(move |a| (w, a))).collect()
}

/// `per_w` seeded random points in `{0..max}^{l(w)}` for each `w` in `ws`.
pub fn random_points(frame: &Frame, ws: &[Elem], per_w: usize, max: i64, seed: u64) -> Vec<(Elem, Vec<i64>)> {
    let mut r = rng(seed);
    let g = frame.group();
    ws.iter()
        .flat_map(|&w| (0..per_w).map(move |_| w).collect::<Vec<_>>())
        .map(|w| (w, random_vector(&mut r, g.length(w), max)))
        .collect()
}

/// Theorem B on every point; a single report and all counterexamples.
pub fn theorem_b_sweep(
    frame: &Arc<Frame>,
    points: &[(Elem, Vec<i64>)],
    exec: Exec,
) -> Result<(Report, Vec<Counterexample>)> {
    let mut report = Report::new("theorem-b", vec![]);
    let mut cex = Vec::new();
    for out in map(exec, points, |(w, a)| theorem_b_check(frame, *w, a)) {
        let out = out?;
        report.absorb(out.report);
        cex.extend(out.counterexamples);
    }
    Ok((report, cex))
}

/// Symbolic vanishing scans for every `w` that occurs in `points`, followed
/// by the edge-equality scan on every point. Empirical evidence only.
pub fn conjecture_scan(frame: &Arc<Frame>, points: &[(Elem, Vec<i64>)], exec: Exec) -> Result<Vec<Report>> {
    let mut ws: Vec<Elem> = points.iter().map(|p| p.0).collect();
    ws.sort();
    ws.dedup();
    let mut by_check: Vec<Report> = Vec::new();
    let mut push = |r: Report| match by_check.iter_mut().find(|b| b.check == r.check) {
        Some(b) => b.absorb(r),
        None => by_check.push(Report { w: vec![], ..r }),
    };
    for rs in map(exec, &ws, |&w| vanishing_scan(frame, w)) {
        rs?.into_iter().for_each(&mut push);
    }
    for r in map(exec, points, |(w, a)| edge_equality_check(frame, *w, a)) {
        push(r?);
    }
    Ok(by_check)
}

/// How often the tropical Plücker relations under `reading` disagree with the
/// standard reading on `ps`. Informational; disagreement is expected for the
/// printed readings in the doubly-laced case.
pub fn reading_comparison(ps: &[MvPolytope], reading: Reading, exec: Exec) -> Report {
    let name = format!("plucker-reading-{}", format!("{reading:?}").to_lowercase());
    fold_reports(&name, ps, exec, |p| {
        let mut r = Report::new(&name, vec![]);
        let std = p.bz().plucker_violations(Reading::Standard).len();
        let other = p.bz().plucker_violations(reading).len();
        r.expect(std == other, || {
            format!(
                "Lusztig {:?}: {other} violations, standard reading {std}",
                p.lusztig(&p.frame().default_word()).unwrap_or_default()
            )
        });
        r
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::random_polytopes;

    #[test]
    fn sequential_matches_parallel() {
        let f = Frame::parse("A2").unwrap();
        let a = theorem_a_sweep(&f, 1, Exec::Sequential).unwrap();
        let b = theorem_a_sweep(&f, 1, Exec::Parallel).unwrap();
        assert_eq!(a, b);
        assert!(a.iter().all(|r| r.passed));
        let pts = exhaustive_points(&f, 1);
        assert_eq!(pts.len(), 1 + 2 * 2 + 2 * 4 + 8);
        let (ra, ca) = theorem_b_sweep(&f, &pts, Exec::Sequential).unwrap();
        let (rb, cb) = theorem_b_sweep(&f, &pts, Exec::Parallel).unwrap();
        assert_eq!((ra.clone(), ca), (rb, cb));
        assert!(ra.passed);
    }

    #[test]
    fn conjecture_scan_small() {
        let f = Frame::parse("A2").unwrap();
        let reports = conjecture_scan(&f, &exhaustive_points(&f, 1), Exec::default()).unwrap();
        assert_eq!(reports.len(), 5);
        assert!(reports.iter().all(|r| r.passed && r.checked > 0));
    }

    #[test]
    fn readings_differ_in_b2() {
        let f = Frame::parse("B2").unwrap();
        let ps = random_polytopes(&f, 30, 3, 11).unwrap();
        assert!(reading_comparison(&ps, Reading::Standard, Exec::Sequential).passed);
        assert!(!reading_comparison(&ps, Reading::Printed, Exec::Sequential).passed);
    }
}
