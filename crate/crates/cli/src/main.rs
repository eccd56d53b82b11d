use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use descent_algebra::algebra::{self, SigmaExpr};
use descent_algebra::characters;
use descent_algebra::cosets;
use descent_algebra::hopf;
use descent_algebra::rsk;
use descent_algebra::symfun::{self, Basis};
use descent_algebra::tables::{self, Table};
use descent_algebra::verify::{self, Check};
use descent_algebra::{Bip, Error, Rat, SComp, SignedPerm};

#[derive(Parser)]
#[command(name = "descent", version, about = "Descent algebras of hyperoctahedral groups")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    /// Emit CSV instead of text.
    #[arg(long, global = true)]
    csv: bool,
    /// Run above the default size envelope.
    #[arg(long, global = true)]
    force: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// List the signed compositions of n.
    Comps { n: usize },
    /// Descent composition and ascent set of a signed permutation.
    Desc { #[arg(allow_hyphen_values = true)] perm: SignedPerm },
    /// Minimal left coset representatives X_C.
    Xset { n: usize, #[arg(allow_hyphen_values = true)] comp: SComp },
    /// Descent fiber Y_C.
    Yset { n: usize, #[arg(allow_hyphen_values = true)] comp: SComp },
    /// The product x_C x_D in the x- and y-bases.
    Mult {
        n: usize,
        #[arg(allow_hyphen_values = true)] c: SComp,
        #[arg(allow_hyphen_values = true)] d: SComp,
    },
    /// Character table of the descent algebra.
    Chartable { n: usize },
    /// Tables I to VII for n = 2.
    Tables2,
    /// Signed Robinson-Schensted pair of a permutation.
    Rsk { #[arg(allow_hyphen_values = true)] perm: SignedPerm },
    /// Coplactic classes of W_n.
    Coplactic { n: usize },
    /// Product and coproduct of the Hopf algebra of signed permutations.
    Hopf {
        #[command(subcommand)]
        op: HopfOp,
    },
    /// Characteristic of theta(x_C) or of the irreducible xi_lambda.
    Ch { n: usize, #[arg(allow_hyphen_values = true)] arg: String },
    /// Run a verification suite.
    Verify { suite: Suite, n: usize },
}

#[derive(Subcommand)]
enum HopfOp {
    /// u * v; pass "" for the empty permutation.
    Prod {
        #[arg(allow_hyphen_values = true)] u: String,
        #[arg(allow_hyphen_values = true)] v: String,
    },
    /// Delta(w).
    Coprod { #[arg(allow_hyphen_values = true)] w: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Core,
    Cosets,
    Algebra,
    Characters,
    Rsk,
    Hopf,
    Symfun,
    All,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Core => "core",
            Suite::Cosets => "cosets",
            Suite::Algebra => "algebra",
            Suite::Characters => "characters",
            Suite::Rsk => "rsk",
            Suite::Hopf => "hopf",
            Suite::Symfun => "symfun",
            Suite::All => "all",
        }
    }
}

#[derive(Clone, Copy, PartialEq)]
enum Format {
    Text,
    Json,
    Csv,
}

/// Result of one command in all three output forms.
struct Output {
    text: String,
    json: Value,
    rows: Vec<Vec<String>>,
    failed: bool,
}

impl Output {
    fn new(text: String, json: Value, rows: Vec<Vec<String>>) -> Self {
        Output { text, json, rows, failed: false }
    }
}

const ENUM_MAX: usize = 5;
const COMPS_MAX: usize = 10;

fn envelope(what: &'static str, n: usize, max: usize, force: bool) -> Result<(), Error> {
    if n > max && !force {
        return Err(Error::Envelope { what, n, max });
    }
    Ok(())
}

fn same_size(c: &SComp, n: usize) -> Result<(), Error> {
    if c.n() != n {
        return Err(Error::SizeMismatch(c.n(), n));
    }
    Ok(())
}

fn parse_perm(s: &str) -> Result<SignedPerm, Error> {
    let t = s.trim();
    if t.is_empty() || t == "∅" {
        Ok(SignedPerm::empty())
    } else {
        t.parse()
    }
}

fn perms_output(ws: &[SignedPerm], what: &str, c: &SComp) -> Output {
    let text: String = ws.iter().map(|w| format!("{w}\n")).collect();
    let list: Vec<String> = ws.iter().map(|w| w.to_string()).collect();
    let rows = std::iter::once(vec!["window".to_string()]).chain(list.iter().map(|w| vec![w.clone()])).collect();
    Output::new(text, json!({ "set": what, "comp": c.to_string(), "count": ws.len(), "elements": list }), rows)
}

fn rat_cell(r: &Rat) -> String {
    r.to_string()
}

fn table_output(t: &Table) -> Output {
    let mut rows = vec![t.header.clone()];
    rows.extend(t.rows.iter().cloned());
    Output::new(t.to_string(), serde_json::to_value(t).expect("serializable"), rows)
}

/// `name : coeff` lines from a Display impl, as CSV rows.
fn term_rows(header: [&str; 2], text: &str) -> Vec<Vec<String>> {
    let mut rows = vec![header.iter().map(|s| s.to_string()).collect()];
    for line in text.lines() {
        if let Some((a, b)) = line.rsplit_once(" : ") {
            rows.push(vec![a.to_string(), b.to_string()]);
        }
    }
    rows
}

fn term_json(text: &str) -> Value {
    let terms: Vec<Value> = text
        .lines()
        .filter_map(|l| l.rsplit_once(" : "))
        .map(|(a, b)| json!({ "term": a, "coeff": b }))
        .collect();
    Value::Array(terms)
}

fn run(cli: &Cli) -> Result<Output, Error> {
    let force = cli.force;
    Ok(match &cli.cmd {
        Cmd::Comps { n } => {
            envelope("comps", *n, COMPS_MAX, force)?;
            let cs = SComp::all(*n);
            let list: Vec<String> = cs.iter().map(|c| c.to_string()).collect();
            let text = list.iter().map(|c| format!("{c}\n")).collect();
            let rows = std::iter::once(vec!["comp".to_string()]).chain(list.iter().map(|c| vec![c.clone()])).collect();
            Output::new(text, json!({ "n": n, "count": cs.len(), "comps": list }), rows)
        }
        Cmd::Desc { perm } => {
            let c = perm.descent_composition();
            let asc: Vec<String> = perm.ascent_set().iter().map(|g| g.to_string()).collect();
            let text = format!("{c}\nascents: {}\n", asc.join(" "));
            let rows = vec![
                vec!["perm".into(), "composition".into(), "ascents".into()],
                vec![perm.to_string(), c.to_string(), asc.join(" ")],
            ];
            Output::new(text, json!({ "perm": perm.to_string(), "composition": c.to_string(), "ascents": asc }), rows)
        }
        Cmd::Xset { n, comp } => {
            envelope("xset", *n, ENUM_MAX, force)?;
            same_size(comp, *n)?;
            perms_output(&cosets::x_set(comp)?, "X", comp)
        }
        Cmd::Yset { n, comp } => {
            envelope("yset", *n, ENUM_MAX, force)?;
            same_size(comp, *n)?;
            perms_output(&cosets::descent_fiber(comp)?, "Y", comp)
        }
        Cmd::Mult { n, c, d } => {
            envelope("mult", *n, algebra::MAX_SIGMA_N, force)?;
            same_size(c, *n)?;
            same_size(d, *n)?;
            let p = algebra::sigma_multiply(&SigmaExpr::basis(c), &SigmaExpr::basis(d))?;
            // x_C = Σ_{C←D} y_D, so the y-coordinate at D sums the x-coordinates over C ← D.
            let comps = SComp::all(*n);
            let mut xs = Vec::new();
            let mut ys = Vec::new();
            for e in &comps {
                let k = p.coord(e);
                if k != Rat::from_integer(0.into()) {
                    xs.push((e.to_string(), k));
                }
                let y: Rat = comps.iter().filter(|a| a.left_arrow(e)).map(|a| p.coord(a)).sum();
                if y != Rat::from_integer(0.into()) {
                    ys.push((e.to_string(), y));
                }
            }
            let mut text = format!("x[{c}] * x[{d}]\n");
            let mut rows = vec![vec!["basis".to_string(), "comp".to_string(), "coeff".to_string()]];
            for (name, terms) in [("x", &xs), ("y", &ys)] {
                text.push_str(&format!("{name}-basis:\n"));
                for (e, k) in terms.iter() {
                    text.push_str(&format!("  {name}[{e}] : {k}\n"));
                    rows.push(vec![name.to_string(), e.clone(), rat_cell(k)]);
                }
            }
            let js = |t: &Vec<(String, Rat)>| -> Value {
                Value::Array(t.iter().map(|(e, k)| json!({ "comp": e, "coeff": k.to_string() })).collect())
            };
            Output::new(text, json!({ "left": c.to_string(), "right": d.to_string(), "x": js(&xs), "y": js(&ys) }), rows)
        }
        Cmd::Chartable { n } => {
            envelope("chartable", *n, 4, force)?;
            let bips = Bip::all(*n);
            let t = characters::sigma_character_table(*n)?;
            let mut header = vec![String::new()];
            header.extend(bips.iter().map(|m| format!("x[{}]", m.hat())));
            let rows = bips
                .iter()
                .zip(&t)
                .map(|(l, r)| {
                    let mut row = vec![format!("pi[{}]", l.hat())];
                    row.extend(r.iter().map(rat_cell));
                    row
                })
                .collect();
            table_output(&Table {
                title: format!("Character table of Sigma'(W_{n})"),
                header,
                rows,
                notes: vec![],
            })
        }
        Cmd::Tables2 => {
            let ts = tables::all_tables()?;
            let text = ts.iter().map(|t| t.to_string()).collect::<Vec<_>>().join("\n");
            let mut rows = Vec::new();
            for t in &ts {
                let name = t.title.split('.').next().unwrap_or_default().to_string();
                let mut h = vec!["table".to_string()];
                h.extend(t.header.iter().cloned());
                rows.push(h);
                for r in &t.rows {
                    let mut row = vec![name.clone()];
                    row.extend(r.iter().cloned());
                    rows.push(row);
                }
            }
            let mut out = Output::new(text, serde_json::to_value(&ts).expect("serializable"), rows);
            out.failed = ts.iter().flat_map(|t| &t.notes).any(|n| n.contains("FAILED"));
            out
        }
        Cmd::Rsk { perm } => {
            let (p, q) = rsk::rsk(perm);
            let c = rsk::tableau_composition(&q)?;
            let text = format!("P: {p}\nQ: {q}\nshape: {}\nC(Q): {c}\n", q.shape());
            let rows = vec![
                vec!["perm".into(), "P".into(), "Q".into(), "shape".into(), "C(Q)".into()],
                vec![perm.to_string(), p.to_string(), q.to_string(), q.shape().to_string(), c.to_string()],
            ];
            let js = json!({
                "perm": perm.to_string(), "P": p.to_string(), "Q": q.to_string(),
                "shape": q.shape().to_string(), "composition": c.to_string(),
            });
            Output::new(text, js, rows)
        }
        Cmd::Coplactic { n } => {
            envelope("coplactic", *n, ENUM_MAX, force)?;
            let mut text = String::new();
            let mut rows = vec![vec!["Q".into(), "shape".into(), "C(Q)".into(), "size".into(), "members".into()]];
            let mut js = Vec::new();
            for (q, ms) in rsk::coplactic_classes(*n)? {
                let c = rsk::tableau_composition(&q)?;
                let members: Vec<String> = ms.iter().map(|w| w.to_string()).collect();
                text.push_str(&format!("Q = {q} | shape {} | C(Q) = {c} | {} elements\n", q.shape(), ms.len()));
                for m in &members {
                    text.push_str(&format!("  {m}\n"));
                }
                rows.push(vec![q.to_string(), q.shape().to_string(), c.to_string(), ms.len().to_string(), members.join("; ")]);
                js.push(json!({ "Q": q.to_string(), "shape": q.shape().to_string(), "composition": c.to_string(), "members": members }));
            }
            Output::new(text, json!({ "n": n, "classes": js }), rows)
        }
        Cmd::Hopf { op } => match op {
            HopfOp::Prod { u, v } => {
                let (u, v) = (parse_perm(u)?, parse_perm(v)?);
                envelope("hopf", u.n() + v.n(), 2 * ENUM_MAX, force)?;
                let p = hopf::hopf_product(&u, &v).to_string();
                Output::new(p.clone(), json!({ "u": u.to_string(), "v": v.to_string(), "terms": term_json(&p) }), term_rows(["perm", "coeff"], &p))
            }
            HopfOp::Coprod { w } => {
                let w = parse_perm(w)?;
                envelope("hopf", w.n(), 2 * ENUM_MAX, force)?;
                let d = hopf::hopf_coproduct(&w).to_string();
                Output::new(d.clone(), json!({ "w": w.to_string(), "terms": term_json(&d) }), term_rows(["tensor", "coeff"], &d))
            }
        },
        Cmd::Ch { n, arg } => {
            envelope("ch", *n, 4, force)?;
            let (what, f) = if arg.contains('|') {
                let l: Bip = arg.parse()?;
                if l.size() != *n {
                    return Err(Error::SizeMismatch(l.size(), *n));
                }
                (format!("xi[{l}]"), characters::irreducible(&l)?)
            } else {
                let c: SComp = arg.parse()?;
                same_size(&c, *n)?;
                (format!("theta(x[{c}])"), characters::induced_trivial(&c)?)
            };
            let x = symfun::ch(&f);
            let schur = x.to_basis(Basis::Schur).to_string();
            let power = x.to_string();
            let chars = x.to_basis(Basis::PowerChar).to_string();
            let mut text = format!("ch({what})\nschur:\n");
            for (name, body) in [("schur", &schur), ("power (class)", &power), ("power (tau/eps)", &chars)] {
                if name != "schur" {
                    text.push_str(&format!("{name}:\n"));
                }
                text.extend(body.lines().map(|l| format!("  {l}\n")));
            }
            let mut rows = vec![vec!["basis".to_string(), "term".to_string(), "coeff".to_string()]];
            for (name, body) in [("schur", &schur), ("power", &power), ("powerchar", &chars)] {
                for r in term_rows(["", ""], body).into_iter().skip(1) {
                    rows.push(vec![name.to_string(), r[0].clone(), r[1].clone()]);
                }
            }
            let js = json!({
                "of": what, "schur": term_json(&schur), "power": term_json(&power), "powerchar": term_json(&chars),
            });
            Output::new(text, js, rows)
        }
        Cmd::Verify { suite, n } => {
            let checks = verify::run_suite(suite.name(), *n, force)?;
            verify_output(suite.name(), *n, &checks)
        }
    })
}

fn verify_output(suite: &str, n: usize, checks: &[Check]) -> Output {
    let failures: Vec<&Check> = checks.iter().filter(|c| !c.passed).collect();
    let mut text = String::new();
    let mut rows = vec![vec!["suite".into(), "label".into(), "n".into(), "passed".into(), "detail".into()]];
    for c in checks {
        let mark = if c.passed { "pass" } else { "FAIL" };
        text.push_str(&format!("[{mark}] {} | n={} | {}", c.suite, c.n, c.label));
        if !c.passed && !c.detail.is_empty() {
            text.push_str(&format!(" | {}", c.detail));
        }
        text.push('\n');
        rows.push(vec![c.suite.clone(), c.label.clone(), c.n.to_string(), c.passed.to_string(), c.detail.clone()]);
    }
    text.push_str(&format!("{} checks, {} failed\n", checks.len(), failures.len()));
    let json = json!({
        "suite": suite, "n": n, "passed": failures.is_empty(),
        "total": checks.len(), "failed": failures.len(),
        "checks": checks, "failures": failures,
    });
    Output { text, json, rows, failed: !failures.is_empty() }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Envelope { .. } => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let format = if cli.json {
        Format::Json
    } else if cli.csv {
        Format::Csv
    } else {
        Format::Text
    };
    let out = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            let code = exit_code(&e);
            if format == Format::Json {
                println!("{}", json!({ "error": e.to_string(), "exit": code }));
            } else {
                eprintln!("error: {e}");
            }
            return ExitCode::from(code);
        }
    };
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    let written = match format {
        Format::Text => lock.write_all(out.text.as_bytes()),
        Format::Json => writeln!(lock, "{}", serde_json::to_string_pretty(&out.json).expect("serializable")),
        Format::Csv => {
            let mut w = csv::WriterBuilder::new().flexible(true).from_writer(lock);
            out.rows.iter().try_for_each(|r| w.write_record(r)).and_then(|_| w.flush().map_err(csv::Error::from)).map_err(std::io::Error::other)
        }
    };
    if written.is_err() {
        return ExitCode::from(2);
    }
    if out.failed {
        if format != Format::Json {
            let record = out.json.get("failures").cloned().unwrap_or(Value::Null);
            eprintln!("{}", json!({ "status": "failed", "failures": record }));
        }
        return ExitCode::from(1);
    }
    ExitCode::SUCCESS
}
