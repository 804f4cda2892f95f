//! Acceptance run: one line per criterion, `PASS` or `FAIL`, with timing.
//! Exits nonzero if any criterion fails or overruns its time limit.

use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use mvpw::cartan::{Coweight, Weight};
use mvpw::crystal::{axioms_check, e_op, e_star, f_op, f_star, saito_check, Raised};
use mvpw::highest::{generalized_diagonal_check, generate_pw, saito_membership_check, zero_positions};
use mvpw::polytope::{b2_solve, B2Source, Frame, MvPolytope};
use mvpw::random::{random_polytopes, random_pw, rng};
use mvpw::report::Report;
use mvpw::sweep::{
    conjecture_scan, exhaustive_points, fold_reports, random_points, theorem_a_sweep, theorem_b_sweep, Exec,
};
use mvpw::trop::{
    chart_point, chart_symbolic, default_chart, delta_new, eta_inv_point, gen_minor, m_values, weight_set, MPoly, Ring,
    TropicalPoint,
};
use mvpw::weyl::Elem;

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn frame(label: &str) -> Arc<Frame> {
    Frame::parse(label).expect("supported type")
}

fn zb(word: &[usize]) -> Vec<usize> {
    word.iter().map(|i| i - 1).collect()
}

fn elem(f: &Frame, word: &[usize]) -> Elem {
    f.group().from_word_1based(word).expect("valid word")
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn passed(r: &Report) -> Result<(), String> {
    ensure(r.passed, || {
        let head: Vec<&String> = r.violations.iter().take(3).collect();
        format!("{} failed {} of {}: {head:?}", r.check, r.violations.len(), r.checked)
    })
}

fn lusztig(p: &MvPolytope, word: &[usize]) -> Result<Vec<i64>, String> {
    p.lusztig(&zb(word)).map_err(|e| e.to_string())
}

fn round_trip() -> Outcome {
    let f = frame("A2");
    let p = MvPolytope::from_lusztig(&f, &zb(&[1, 2, 1]), &[1, 2, 2]).map_err(|e| e.to_string())?;
    let there = lusztig(&p, &[2, 1, 2])?;
    ensure(there == [3, 1, 2], || format!("(1,2,2) on (1,2,1) became {there:?}"))?;
    let q = MvPolytope::from_lusztig(&f, &zb(&[2, 1, 2]), &there).map_err(|e| e.to_string())?;
    let back = lusztig(&q, &[1, 2, 1])?;
    ensure(back == [1, 2, 2], || format!("(3,1,2) on (2,1,2) came back as {back:?}"))?;
    let lam = Coweight(vec![3, 4]);
    ensure(*p.coweight() == lam && *q.coweight() == lam, || {
        format!("coweights {:?} / {:?}", p.coweight(), q.coweight())
    })?;
    Ok("(1,2,2) <-> (3,1,2), coweight 3a1 + 4a2".into())
}

fn crystal_table() -> Outcome {
    let f = frame("A2");
    let p = MvPolytope::from_lusztig(&f, &zb(&[1, 2, 1]), &[1, 0, 2]).map_err(|e| e.to_string())?;
    let up = |r: mvpw::error::Result<MvPolytope>| r.map_err(|e| e.to_string());
    let down = |r: mvpw::error::Result<Raised>| -> Result<MvPolytope, String> {
        r.map_err(|e| e.to_string())?.polytope().ok_or_else(|| "unexpected zero element".to_string())
    };
    let (w121, w212) = ([1, 2, 1], [2, 1, 2]);
    let cases: Vec<(&str, MvPolytope, [usize; 3], [i64; 3])> = vec![
        ("f_1", up(f_op(&p, 0))?, w121, [2, 0, 2]),
        ("e_1", down(e_op(&p, 0))?, w121, [0, 0, 2]),
        ("f*_2", up(f_star(&p, 1))?, w121, [1, 0, 3]),
        ("e*_2", down(e_star(&p, 1))?, w121, [1, 0, 1]),
        ("f_2", up(f_op(&p, 1))?, w212, [2, 1, 0]),
        ("e_2", down(e_op(&p, 1))?, w212, [0, 1, 0]),
        ("f*_1", up(f_star(&p, 0))?, w212, [1, 1, 1]),
    ];
    ensure(lusztig(&p, &w212)? == [1, 1, 0], || "P on (2,1,2) is not (1,1,0)".into())?;
    for (name, q, word, expect) in &cases {
        let got = lusztig(q, word)?;
        ensure(got == *expect, || format!("{name}(P) on {word:?} is {got:?}, expected {expect:?}"))?;
    }
    ensure(e_star(&p, 0).map_err(|e| e.to_string())?.is_bottom(), || "e*_1(P) is not the zero element".into())?;
    ensure(up(f_op(&p, 1))? == up(f_star(&p, 1))?, || "f_2(P) != f*_2(P)".into())?;
    ensure(down(e_op(&p, 1))? == down(e_star(&p, 1))?, || "e_2(P) != e*_2(P)".into())?;
    Ok("8 operator outputs and 2 coincidences".into())
}

fn zero_table() -> Outcome {
    let f = frame("A3");
    let g = f.group();
    let w = elem(&f, &[1, 2, 3]);
    let rows: [([usize; 6], [usize; 3]); 6] = [
        ([1, 2, 3, 1, 2, 1], [4, 5, 6]),
        ([2, 3, 1, 2, 1, 3], [3, 4, 5]),
        ([1, 3, 2, 1, 3, 2], [3, 4, 6]),
        ([3, 2, 1, 3, 2, 3], [2, 3, 5]),
        ([1, 2, 1, 3, 2, 1], [3, 5, 6]),
        ([2, 1, 3, 2, 1, 3], [2, 4, 5]),
    ];
    for (word, zeros) in &rows {
        let got: Vec<usize> =
            zero_positions(g, &zb(word), w).map_err(|e| e.to_string())?.iter().map(|k| k + 1).collect();
        ensure(got == zeros, || format!("zeros on {word:?}: {got:?}, expected {zeros:?}"))?;
    }
    // chains of equal vertices, words 1-based; the table's row for
    // (3,2,1,3,2,3) prints s3s1 where its zeros give s3s2
    let w0 = [1, 2, 3, 1, 2, 1];
    let mut chains: Vec<Vec<&[usize]>> = vec![
        vec![&[1, 2, 3], &[1, 2, 3, 1], &[1, 2, 3, 1, 2], &w0],
        vec![&[2, 3], &[2, 3, 1], &[2, 3, 1, 2], &[2, 3, 1, 2, 1]],
        vec![&[1, 3], &[1, 3, 2], &[1, 3, 2, 1]],
        vec![&[1, 2, 3, 2, 1], &w0],
        vec![&[3], &[3, 2], &[3, 2, 1]],
        vec![&[3, 2, 1, 3], &[3, 2, 1, 3, 2]],
        vec![&[1, 2], &[1, 2, 1]],
        vec![&[1, 2, 3, 1], &[1, 2, 3, 1, 2], &w0],
        vec![&[2], &[2, 1]],
        vec![&[2, 1, 3], &[2, 1, 3, 2], &[2, 1, 3, 2, 1]],
    ];
    // the vertex-collapse relations listed alongside the table
    chains.extend([
        vec![&[2, 3, 1, 2, 1][..], &[2, 3]],
        vec![&[1, 3, 2, 1], &[1, 3]],
        vec![&[3, 2, 1], &[3]],
        vec![&[1, 2, 1], &[1, 2]],
        vec![&[2, 1], &[2]],
    ]);
    let ps = generate_pw(&f, w, &f.word_through(w), 3).map_err(|e| e.to_string())?;
    ensure(ps.len() == 64, || format!("{} polytopes generated", ps.len()))?;
    let mut literal_fail = 0;
    let printed = [elem(&f, &[3]), elem(&f, &[3, 1])];
    for p in &ps {
        for chain in &chains {
            let first = p.vertex(elem(&f, chain[0]));
            for x in &chain[1..] {
                ensure(p.vertex(elem(&f, x)) == first, || {
                    format!(
                        "mu_{} != mu_{} at Lusztig {:?}",
                        g.label(elem(&f, chain[0])),
                        g.label(elem(&f, x)),
                        p.lusztig(&f.word_through(w))
                    )
                })?;
            }
        }
        if p.vertex(printed[0]) != p.vertex(printed[1]) {
            literal_fail += 1;
        }
    }
    Ok(format!(
        "6 zero patterns, {} vertex chains on 64 polytopes; printed mu_s3 = mu_s3s1 read as mu_s3s2 (literal text fails on {literal_fail}/64)",
        chains.len()
    ))
}

fn v_w_agreement() -> Outcome {
    let mut total = 0;
    for label in ["A3", "B2"] {
        let f = frame(label);
        let g = f.group();
        for v in g.elements() {
            for w in g.elements() {
                let brute = g.v_w_brute(v, w).map_err(|e| e.to_string())?;
                ensure(brute == g.v_w(v, w), || format!("{label}: v = {}, w = {}", g.label(v), g.label(w)))?;
                total += 1;
            }
        }
    }
    ensure(total == 576 + 64, || format!("{total} pairs"))?;
    Ok("576 A3 pairs and 64 B2 pairs, unique maximum each time".into())
}

fn theorem_a() -> Outcome {
    let f = frame("A3");
    let reports = theorem_a_sweep(&f, 2, Exec::default()).map_err(|e| e.to_string())?;
    let mut checked = 0;
    for r in &reports {
        passed(r)?;
        checked += r.checked;
    }
    Ok(format!("{} elements, {checked} relations", reports.len()))
}

fn sl3_minors() -> Outcome {
    let f = frame("A2");
    let g = f.group();
    let w = elem(&f, &[1, 2]);
    let chart = default_chart(g, w);
    ensure(chart == [1, 0], || format!("chart {chart:?}"))?;
    // x2(beta) x1(alpha)
    let m = chart_symbolic(3, &chart);
    let (beta, alpha) = (MPoly::var(2, 0), MPoly::var(2, 1));
    let label = |rep: Elem, i: usize| weight_set(g, rep, i).iter().map(|k| (k + 1).to_string()).collect::<String>();
    let expect = [
        ("1", MPoly::one()),
        ("12", MPoly::one()),
        ("2", alpha.clone()),
        ("23", alpha.mul(&beta)),
        ("13", beta.clone()),
        ("3", MPoly::zero()),
    ];
    let e = g.identity();
    for (name, value) in &expect {
        let c = f
            .chamber_weights()
            .iter()
            .find(|c| label(c.rep, c.index) == *name)
            .ok_or_else(|| format!("no chamber weight {name}"))?;
        let got = gen_minor(g, &m, e, c.rep, c.index);
        ensure(got == *value, || format!("Delta_{name} = {got}, expected {value}"))?;
    }
    let three = f.chamber_weights().iter().find(|c| label(c.rep, c.index) == "3").expect("w0 omega_1");
    let dn = delta_new(g, &m, three.rep, three.index, w);
    ensure(dn == beta, || format!("Delta^new_3 = {dn}"))?;
    let at = |m: &[i64], v: [i64; 2]| m[f.gamma_position(&Weight(v.to_vec())).expect("chamber weight")];
    for a in 0..=4 {
        for b in 0..=4 {
            let p = TropicalPoint::new(g, w, chart.clone(), vec![b, a]).map_err(|e| e.to_string())?;
            let y = eta_inv_point(&f, w, &p).map_err(|e| e.to_string())?;
            ensure(y == chart_point(3, &[1, 0], &[-b, -a]), || format!("eta inverse at (a,b) = ({a},{b})"))?;
            let mv = m_values(&f, w, &p).map_err(|e| e.to_string())?;
            let got = [
                at(&mv, [1, 0]),
                at(&mv, [0, 1]),
                at(&mv, [-1, 1]),
                at(&mv, [-1, 0]),
                at(&mv, [1, -1]),
                at(&mv, [0, -1]),
            ];
            ensure(got == [0, 0, -a, -a - b, -b, -b], || format!("M values at ({a},{b}): {got:?}"))?;
        }
    }
    Ok("minors 1, 1, alpha, alpha*beta, beta, Delta_3 = 0, Delta^new_3 = beta; eta inverse and M on {0..4}^2".into())
}

fn theorem_b() -> Outcome {
    let a2 = frame("A2");
    let (r, cex) = theorem_b_sweep(&a2, &exhaustive_points(&a2, 4), Exec::default()).map_err(|e| e.to_string())?;
    passed(&r)?;
    ensure(cex.is_empty(), || format!("{} A2 counterexamples", cex.len()))?;
    let a3 = frame("A3");
    let ws: Vec<Elem> = a3.group().elements().collect();
    let pts = random_points(&a3, &ws, 100, 4, 0x5eed);
    let (r3, cex3) = theorem_b_sweep(&a3, &pts, Exec::default()).map_err(|e| e.to_string())?;
    passed(&r3)?;
    ensure(cex3.is_empty(), || format!("{} A3 counterexamples", cex3.len()))?;
    Ok(format!("A2 exhaustive ({} values), A3 100 points for each of 24 w ({} values)", r.checked, r3.checked))
}

fn diagonals() -> Outcome {
    let mut total = 0;
    for (k, label) in ["A2", "B2", "A3"].into_iter().enumerate() {
        let f = frame(label);
        let ps = random_polytopes(&f, 500, 6, 100 + k as u64).map_err(|e| e.to_string())?;
        let r = fold_reports("diagonals", &ps, Exec::default(), generalized_diagonal_check);
        passed(&r)?;
        total += r.checked;
    }
    Ok(format!("500 polytopes each in A2, B2, A3 ({total} inequalities)"))
}

fn crystal_suite() -> Outcome {
    let mut summary = Vec::new();
    for (k, label) in ["A2", "B2", "A3"].into_iter().enumerate() {
        let f = frame(label);
        let g = f.group();
        let ws: Vec<Elem> = g.elements().collect();
        let mut r = rng(200 + k as u64);
        let mut ps = random_polytopes(&f, 100, 4, 300 + k as u64).map_err(|e| e.to_string())?;
        let mut targets: Vec<Elem> = ps.iter().enumerate().map(|(i, _)| ws[i % ws.len()]).collect();
        for i in 0..100 {
            let w = ws[i % ws.len()];
            ps.push(random_pw(&f, w, &mut r, 4).map_err(|e| e.to_string())?);
            targets.push(w);
        }
        let items: Vec<(MvPolytope, Elem)> = ps.into_iter().zip(targets).collect();
        let reports = mvpw::sweep::map(Exec::default(), &items, |(p, w)| -> mvpw::error::Result<[Report; 3]> {
            Ok([axioms_check(p)?, saito_check(p)?, saito_membership_check(p, *w)?])
        });
        let mut merged = [
            Report::new("crystal-axioms", vec![]),
            Report::new("saito", vec![]),
            Report::new("saito-membership", vec![]),
        ];
        for rs in reports {
            for (m, r) in merged.iter_mut().zip(rs.map_err(|e| e.to_string())?) {
                m.absorb(r);
            }
        }
        for m in &merged {
            passed(m)?;
        }
        summary.push(format!("{label} {}", items.len()));
    }
    Ok(format!("axioms, Saito shifts/braids/vertex formula, membership transport on {}", summary.join(", ")))
}

fn conjecture() -> Outcome {
    let a2 = frame("A2");
    let a3 = frame("A3");
    let ws: Vec<Elem> = a3.group().elements().collect();
    let mut lines = Vec::new();
    for (f, pts, label) in [
        (&a2, exhaustive_points(&a2, 4), "SL3 exhaustive"),
        (&a3, random_points(&a3, &ws, 10, 4, 0xc0de), "SL4 sampled"),
    ] {
        let reports = conjecture_scan(f, &pts, Exec::default()).map_err(|e| e.to_string())?;
        for r in &reports {
            passed(r)?;
        }
        let checked: usize = reports.iter().map(|r| r.checked).sum();
        lines.push(format!("{label}: {} points, {checked} checks, 0 counterexamples", pts.len()));
    }
    Ok(format!("empirical evidence, not proof; {}", lines.join("; ")))
}

fn b2_solver() -> Outcome {
    let f = frame("B2");
    let words = |src: B2Source| match src {
        B2Source::OneTwo => ([0, 1, 0, 1], [1, 0, 1, 0]),
        B2Source::TwoOne => ([1, 0, 1, 0], [0, 1, 0, 1]),
    };
    let mut count = 0;
    for src in [B2Source::OneTwo, B2Source::TwoOne] {
        let (sw, tw) = words(src);
        for n in mvpw::random::grid(4, 4) {
            let n = [n[0], n[1], n[2], n[3]];
            let sols = b2_solve(n, src).map_err(|e| e.to_string())?;
            ensure(sols.len() == 1, || format!("{n:?}: {} solutions", sols.len()))?;
            let m = sols[0];
            let back = b2_solve(m, src.reverse()).map_err(|e| e.to_string())?;
            ensure(back == [n], || format!("{n:?} -> {m:?} -> {back:?}"))?;
            let end = |word: &[usize], d: &[i64]| f.path_vertices(word, d).last().expect("nonempty").1.clone();
            ensure(end(&sw, &n) == end(&tw, &m), || format!("coweight changes on {n:?}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} data in both directions"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("1 Lusztig round trip (1,2,1) <-> (2,1,2)", Duration::from_secs(1), round_trip),
        ("2 crystal operator table", Duration::from_secs(1), crystal_table),
        ("3 forced zeros and vertex equalities, A3 w = s1s2s3", Duration::from_secs(30), zero_table),
        ("4 v_w brute force vs Demazure formula", Duration::from_secs(10), v_w_agreement),
        ("5 vertex collapse sweep, A3", Duration::from_secs(120), theorem_a),
        ("6 SL3 minors, eta inverse and M values, w = s1s2", Duration::from_secs(5), sl3_minors),
        ("7 valuation oracle equals BZ datum", Duration::from_secs(600), theorem_b),
        ("8 generalized diagonal inequalities", Duration::from_secs(120), diagonals),
        ("9 crystal and Saito suite", Duration::from_secs(300), crystal_suite),
        ("10 conjecture scan", Duration::from_secs(1800), conjecture),
        ("11 B2 transition solver", Duration::from_secs(60), b2_solver),
    ];
    let mut failed = 0;
    for (name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let (status, detail) = match outcome {
            Ok(d) if took <= limit => ("PASS", d),
            Ok(d) => ("FAIL", format!("over the {limit:?} limit; {d}")),
            Err(e) => ("FAIL", e),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("{status} [{name}] {:.2}s (limit {}s): {detail}", took.as_secs_f64(), limit.as_secs());
    }
    println!("{} of 11 criteria passed", 11 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
