use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use mvpw::crystal::{axioms_check, saito_check};
use mvpw::error::MvError;
use mvpw::highest::{
    checked_words, coarsening_check, generalized_diagonal_check, generate_pw, is_in_pw, saito_membership_check,
    theorem_a_check, zero_pattern_check, zero_positions,
};
use mvpw::io::{lusztig_json, polytope_json, read_polytope, vertices_json};
use mvpw::polygon::polygon;
use mvpw::polytope::{Frame, MvPolytope, Reading};
use mvpw::random::random_polytopes;
use mvpw::report::Report;
use mvpw::sweep::{self, exhaustive_points, random_points, Exec};
use mvpw::weyl::Elem;

#[derive(Parser)]
#[command(name = "mvpw", version, about = "MV polytopes of highest vertex w")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Convert a polytope between Lusztig, BZ and vertex data.
    Convert {
        /// JSON file, or `-` for standard input.
        input: String,
        /// `bz`, `vertices`, or `lusztig` (with --word).
        #[arg(long)]
        to: String,
        #[command(flatten)]
        common: Common,
    },
    /// Run one family of checks and report every instance.
    Verify {
        #[arg(value_enum)]
        check: Check,
        #[command(flatten)]
        common: Common,
    },
    /// Planar boundary of a rank 2 polytope.
    Polygon {
        input: String,
        #[command(flatten)]
        common: Common,
    },
    /// Empirical scan of the conjectured vanishing minors and edge
    /// equalities, and of alternative readings of the Plücker relations.
    Scan {
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct Common {
    /// Cartan type such as A2, B2, A3.
    #[arg(long)]
    kind: Option<String>,
    /// Weyl element as a comma-separated 1-based word.
    #[arg(long)]
    w: Option<String>,
    /// Comma-separated 1-based reduced word of w0.
    #[arg(long)]
    word: Option<String>,
    /// Bound on Lusztig entries or tropical coordinates.
    #[arg(long, default_value_t = 2)]
    bound: i64,
    /// Random samples; for tropical checks, points per Weyl element
    /// (0 means the exhaustive grid).
    #[arg(long, default_value_t = 0)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Run sweeps on one thread.
    #[arg(long)]
    sequential: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Check {
    TheoremA,
    Zeros,
    Diagonals,
    CrystalAxioms,
    Saito,
    Fan,
    TheoremB,
    ConjectureScan,
}

enum Failure {
    Usage(String),
    Math(String),
    Internal(String),
}

impl From<MvError> for Failure {
    fn from(e: MvError) -> Self {
        match e {
            MvError::InvalidBz(_) | MvError::NotGgms(_) => Failure::Math(e.to_string()),
            MvError::InvariantFailure(_)
            | MvError::Singular
            | MvError::CellMembership(_)
            | MvError::UndefinedValuation
            | MvError::DegreeBound(_) => Failure::Internal(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<(String, bool), Failure>;

fn parse_word(s: &str) -> Result<Vec<usize>, Failure> {
    if s.trim().is_empty() || s == "e" {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| Failure::Usage(format!("bad letter `{t}` in `{s}`"))))
        .collect()
}

fn zero_based(word: &[usize]) -> Result<Vec<usize>, Failure> {
    word.iter().map(|&i| i.checked_sub(1).ok_or_else(|| Failure::Usage("letters are 1-based".into()))).collect()
}

fn read_input(path: &str) -> Result<String, Failure> {
    let mut text = String::new();
    if path == "-" {
        io::stdin().read_to_string(&mut text).map_err(|e| Failure::Usage(e.to_string()))?;
    } else {
        text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
    }
    Ok(text)
}

impl Common {
    fn frame(&self) -> Result<Arc<Frame>, Failure> {
        let kind = self.kind.as_deref().ok_or_else(|| Failure::Usage("--kind is required".into()))?;
        Ok(Frame::parse(kind)?)
    }

    fn elem(&self, frame: &Frame) -> Result<Option<Elem>, Failure> {
        self.w.as_deref().map(|s| Ok(frame.group().from_word_1based(&parse_word(s)?)?)).transpose()
    }

    fn exec(&self) -> Exec {
        if self.sequential {
            Exec::Sequential
        } else {
            Exec::default()
        }
    }

    fn render(&self, value: &Value, reports: &[Report]) -> String {
        match self.format {
            Format::Json => pretty(value),
            Format::Tsv => {
                let mut s = String::from("check\tw\tpassed\tchecked\tviolations\n");
                for r in reports {
                    let w: Vec<String> = r.w.iter().map(|i| i.to_string()).collect();
                    s += &format!(
                        "{}\t{}\t{}\t{}\t{}\n",
                        r.check,
                        w.join(","),
                        r.passed,
                        r.checked,
                        r.violations.join("; ")
                    );
                }
                s
            }
        }
    }
}

fn pretty<T: Serialize>(x: &T) -> String {
    serde_json::to_string_pretty(x).expect("serializable") + "\n"
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn convert(input: &str, to: &str, c: &Common) -> Outcome {
    let p = read_polytope(&read_input(input)?, c.kind.as_deref())?;
    let text = match to {
        "bz" => pretty(&polytope_json(&p)),
        "vertices" => pretty(&vertices_json(&p)),
        "lusztig" => {
            let word = match &c.word {
                Some(s) => parse_word(s)?,
                None => p.frame().default_word().iter().map(|i| i + 1).collect(),
            };
            pretty(&lusztig_json(&p, &word)?)
        }
        other => return Err(Failure::Usage(format!("unknown target `{other}`; use bz, vertices or lusztig"))),
    };
    Ok((text, true))
}

fn polygon_cmd(input: &str, c: &Common) -> Outcome {
    let p = read_polytope(&read_input(input)?, c.kind.as_deref())?;
    let poly = polygon(&p)?;
    let text = match c.format {
        Format::Json => pretty(&poly),
        Format::Tsv => {
            let mut s = format!("labels\tx\ty*{}\txf\tyf\n", poly.y_scale);
            for v in &poly.vertices {
                let labels: Vec<String> = v
                    .labels
                    .iter()
                    .map(|l| if l.is_empty() { "e".into() } else { l.iter().map(|i| format!("s{i}")).collect() })
                    .collect();
                s += &format!("{}\t{}\t{}\t{}\t{}\n", labels.join("="), v.x, v.y, v.xf, v.yf);
            }
            s
        }
    };
    Ok((text, true))
}

/// Members of `P_w` for the selected elements (all of `W` without --w).
fn members(frame: &Arc<Frame>, c: &Common) -> Result<Vec<(Elem, Vec<MvPolytope>)>, Failure> {
    let ws: Vec<Elem> = match c.elem(frame)? {
        Some(w) => vec![w],
        None => frame.group().elements().collect(),
    };
    ws.into_iter()
        .map(|w| {
            let word = match &c.word {
                Some(s) => zero_based(&parse_word(s)?)?,
                None => frame.word_through(w),
            };
            Ok((w, generate_pw(frame, w, &word, c.bound)?))
        })
        .collect()
}

fn samples(frame: &Arc<Frame>, c: &Common) -> Result<Vec<MvPolytope>, Failure> {
    let n = if c.samples == 0 { 100 } else { c.samples };
    Ok(random_polytopes(frame, n, c.bound, c.seed)?)
}

fn tropical_points(frame: &Arc<Frame>, c: &Common) -> Result<Vec<(Elem, Vec<i64>)>, Failure> {
    let ws: Vec<Elem> = match c.elem(frame)? {
        Some(w) => vec![w],
        None => frame.group().elements().collect(),
    };
    Ok(if c.samples == 0 {
        exhaustive_points(frame, c.bound).into_iter().filter(|(w, _)| ws.contains(w)).collect()
    } else {
        random_points(frame, &ws, c.samples, c.bound, c.seed)
    })
}

fn collect<F>(c: &Common, check: &str, ps: &[MvPolytope], f: F) -> Result<Report, Failure>
where
    F: Fn(&MvPolytope) -> mvpw::error::Result<Report> + Sync + Send,
{
    let mut out = Report::new(check, vec![]);
    for r in sweep::map(c.exec(), ps, f) {
        out.absorb(r?);
    }
    Ok(out)
}

fn verify(check: Check, c: &Common) -> Outcome {
    let frame = c.frame()?;
    let g = frame.group();
    let mut extra = serde_json::Map::new();
    let reports: Vec<Report> = match check {
        Check::TheoremA => members(&frame, c)?
            .into_iter()
            .map(|(w, ps)| {
                let mut r = Report::new("theorem-a", g.word_1based(w));
                ps.iter().for_each(|p| r.absorb(theorem_a_check(p, w)));
                r
            })
            .collect(),
        Check::Zeros => {
            let mut patterns = Vec::new();
            let mut out = Vec::new();
            for (w, ps) in members(&frame, c)? {
                for word in checked_words(g) {
                    let zeros: Vec<usize> = zero_positions(g, &word, w)?.iter().map(|k| k + 1).collect();
                    patterns.push(json!({
                        "w": g.word_1based(w),
                        "word": word.iter().map(|i| i + 1).collect::<Vec<_>>(),
                        "zeros": zeros,
                    }));
                }
                let mut r = Report::new("zeros", g.word_1based(w));
                for p in &ps {
                    r.absorb(zero_pattern_check(p, w)?);
                }
                out.push(r);
            }
            extra.insert("patterns".into(), Value::Array(patterns));
            out
        }
        Check::Diagonals => {
            let ps = samples(&frame, c)?;
            vec![sweep::fold_reports("diagonals", &ps, c.exec(), generalized_diagonal_check)]
        }
        Check::CrystalAxioms => vec![collect(c, "crystal-axioms", &samples(&frame, c)?, axioms_check)?],
        Check::Saito => {
            let mut out = vec![collect(c, "saito", &samples(&frame, c)?, saito_check)?];
            let ps = samples(&frame, c)?;
            for (w, members) in members(&frame, c)? {
                let mut r = Report::new("saito-membership", g.word_1based(w));
                for p in ps.iter().chain(&members) {
                    r.absorb(saito_membership_check(p, w)?);
                }
                out.push(r);
            }
            out
        }
        Check::Fan => {
            let ps = samples(&frame, c)?;
            members(&frame, c)?
                .into_iter()
                .map(|(w, members)| {
                    let mut r = Report::new("fan", g.word_1based(w));
                    for p in ps.iter().chain(&members) {
                        r.expect(coarsening_check(p, w) == is_in_pw(p, w), || {
                            format!("coarsening and membership disagree for mu_w0 = {:?}", p.coweight().0)
                        });
                    }
                    r
                })
                .collect()
        }
        Check::TheoremB => {
            let (r, cex) = sweep::theorem_b_sweep(&frame, &tropical_points(&frame, c)?, c.exec())?;
            extra.insert("counterexamples".into(), to_value(&cex));
            vec![Report { w: c.elem(&frame)?.map(|w| g.word_1based(w)).unwrap_or_default(), ..r }]
        }
        Check::ConjectureScan => {
            extra.insert("note".into(), json!("empirical evidence only"));
            sweep::conjecture_scan(&frame, &tropical_points(&frame, c)?, c.exec())?
        }
    };
    let passed = reports.iter().all(|r| r.passed);
    let mut obj = serde_json::Map::new();
    obj.insert("kind".into(), json!(frame.cartan().kind().to_string()));
    obj.insert("passed".into(), json!(passed));
    obj.insert("reports".into(), to_value(&reports));
    obj.extend(extra);
    Ok((c.render(&Value::Object(obj), &reports), passed))
}

fn scan(c: &Common) -> Outcome {
    let frame = c.frame()?;
    let mut reports = Vec::new();
    let mut notes = Vec::new();
    if mvpw::trop::require_type_a(frame.group()).is_ok() {
        reports.extend(sweep::conjecture_scan(&frame, &tropical_points(&frame, c)?, c.exec())?);
    } else {
        notes.push("minor scans need type A; only the relation readings were compared".to_string());
    }
    let passed = reports.iter().all(|r| r.passed);
    let ps = samples(&frame, c)?;
    let readings: Vec<Report> = [Reading::LiteralOmegaJ, Reading::Printed]
        .into_iter()
        .map(|rd| sweep::reading_comparison(&ps, rd, c.exec()))
        .collect();
    let value = json!({
        "kind": frame.cartan().kind().to_string(),
        "note": "empirical evidence only; a clean scan is not a proof",
        "passed": passed,
        "reports": reports,
        "readings": readings,
        "notes": notes,
    });
    let all: Vec<Report> = reports.iter().chain(&readings).cloned().collect();
    Ok((c.render(&value, &all), passed))
}

fn run(cli: Cli) -> (Outcome, Option<PathBuf>) {
    match cli.command {
        Command::Convert { input, to, common } => (convert(&input, &to, &common), common.out),
        Command::Verify { check, common } => (verify(check, &common), common.out),
        Command::Polygon { input, common } => (polygon_cmd(&input, &common), common.out),
        Command::Scan { common } => (scan(&common), common.out),
    }
}

fn main() -> ExitCode {
    let (outcome, out) = run(Cli::parse());
    match outcome {
        Ok((text, passed)) => {
            let written = match out {
                Some(path) => fs::write(&path, text).map_err(|e| format!("{}: {e}", path.display())),
                None => io::stdout().write_all(text.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(if passed { 0 } else { 1 })
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Math(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
        Err(Failure::Internal(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
