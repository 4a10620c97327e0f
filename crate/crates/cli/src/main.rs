use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hilden_core::plat::{induced_handlebody_map, plat_summary, PlatSummary};
use hilden_core::{
    coset_equivalence_check, evaluate, hilden_map, is_pure, kernel_omega_necessary, relation_suite, signed_decompose,
    Error, GeneratorWord, MappingClassElement, SurfaceConfig,
};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(
    name = "hilden",
    version,
    about = "Surface mapping classes that extend over handlebodies, motion groups and plat closures"
)]
struct Cli {
    /// Emit one JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[arg(long, global = true, value_enum, env = "HILDEN_OUTPUT", default_value_t = Mode::Text)]
    output: Mode,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Text,
    Json,
}

#[derive(Args, Debug, Clone)]
struct Surface {
    #[arg(long, default_value_t = 0)]
    genus: usize,
    #[arg(long)]
    arcs: usize,
}

#[derive(Args, Debug, Clone)]
struct WordArg {
    /// Generator word, e.g. "iota[1] lam[2]^-1".
    #[arg(long, allow_hyphen_values = true)]
    word: String,
}

#[derive(Args, Debug, Clone)]
struct PlatArgs {
    #[arg(long, default_value_t = 0)]
    genus: usize,
    #[arg(long, required_unless_present = "file")]
    arcs: Option<usize>,
    /// Handle twists describing the Heegaard splitting.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    psi: String,
    /// Hilden generators describing the braid.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    sigma: String,
    /// One job per line: `--genus G --arcs N --psi "..." --sigma "..."`.
    #[arg(long, conflicts_with_all = ["arcs", "psi", "sigma"])]
    file: Option<PathBuf>,
}

#[derive(Parser, Debug)]
#[command(no_binary_name = true)]
struct PlatJob {
    #[arg(long, default_value_t = 0)]
    genus: usize,
    #[arg(long)]
    arcs: usize,
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    psi: String,
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    sigma: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a word to a mapping class and print its action.
    Eval {
        #[command(flatten)]
        surface: Surface,
        #[command(flatten)]
        word: WordArg,
    },
    /// Check the defining relations among the catalog generators.
    Relations {
        #[command(flatten)]
        surface: Surface,
    },
    /// Puncture permutation and its signed decomposition.
    Perm {
        #[command(flatten)]
        surface: Surface,
        #[command(flatten)]
        word: WordArg,
    },
    /// Necessary conditions for an element to extend over the handlebody and fix the arcs.
    Member {
        #[command(flatten)]
        surface: Surface,
        #[command(flatten)]
        word: WordArg,
    },
    /// Image under the Hilden map in the motion group of the trivial link.
    Motion {
        #[arg(long)]
        arcs: usize,
        #[command(flatten)]
        word: WordArg,
    },
    /// Presentation and homology of a generalized plat closure.
    Plat(PlatArgs),
    /// Compare the closures of sigma and sigma·epsilon.
    Coset {
        #[command(flatten)]
        surface: Surface,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        psi: String,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        sigma: String,
        #[arg(long, allow_hyphen_values = true)]
        epsilon: String,
    },
}

/// Result of one job. `ok == false` means a mathematical check failed.
struct Report {
    command: &'static str,
    inputs: Value,
    result: Value,
    diagnostics: Vec<String>,
    ok: bool,
    text: String,
}

impl Report {
    fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "ok": self.ok,
            "inputs": self.inputs,
            "result": self.result,
            "diagnostics": self.diagnostics,
        })
    }
}

enum Failure {
    Usage(String),
    Math(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Invalid(_) | Error::NotAutomorphism(_) => Failure::Math(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<Report, Failure>;

fn config(s: &Surface) -> Result<Arc<SurfaceConfig>, Failure> {
    Ok(Arc::new(SurfaceConfig::new(s.genus as i64, s.arcs as i64)?))
}

fn word_for(text: &str, cfg: &SurfaceConfig) -> Result<GeneratorWord, Failure> {
    Ok(GeneratorWord::parse_for(text, cfg.genus(), cfg.arcs())?)
}

fn surface_inputs(s: &Surface) -> Value {
    json!({ "genus": s.genus, "arcs": s.arcs })
}

fn run_eval(s: &Surface, text: &str) -> Outcome {
    let cfg = config(s)?;
    let w = word_for(text, &cfg)?;
    let e = evaluate(&cfg, &w)?;
    let report = e.validate();
    let h1: Vec<Vec<i64>> = e.h1_matrix().to_rows();
    let element = e.to_json();
    let mut out = String::new();
    writeln!(out, "word: {w}").unwrap();
    writeln!(out, "perm: {}", join(&e.perm().one_line())).unwrap();
    for (sym, img) in &element.images {
        writeln!(out, "  {sym} -> {img}").unwrap();
    }
    if !h1.is_empty() {
        writeln!(out, "H1 action:\n{}", e.h1_matrix().to_string().trim_end()).unwrap();
    }
    write!(out, "valid: {}", yes(report.passed)).unwrap();
    let mut inputs = surface_inputs(s);
    inputs["word"] = json!(text);
    Ok(Report {
        command: "eval",
        inputs,
        result: json!({ "element": element, "h1_matrix": h1, "valid": report.passed }),
        diagnostics: report.witness.into_iter().collect(),
        ok: report.passed,
        text: out,
    })
}

fn run_relations(s: &Surface) -> Outcome {
    let cfg = config(s)?;
    let report = relation_suite(&cfg);
    let mut out = String::new();
    for r in &report.instances {
        writeln!(out, "{} {}: {} = {}", if r.passed { "PASS" } else { "FAIL" }, r.family, r.lhs, r.rhs).unwrap();
    }
    let failed = report.failures().count();
    write!(out, "{} of {} instances hold", report.instances.len() - failed, report.instances.len()).unwrap();
    let diagnostics = report
        .failures()
        .map(|f| format!("{}: {} = {} fails: {}", f.family, f.lhs, f.rhs, f.witness.clone().unwrap_or_default()))
        .collect();
    Ok(Report {
        command: "relations",
        inputs: surface_inputs(s),
        result: serde_json::to_value(&report).expect("serializable"),
        diagnostics,
        ok: report.passed(),
        text: out,
    })
}

fn element(s: &Surface, text: &str) -> Result<(Arc<SurfaceConfig>, MappingClassElement), Failure> {
    let cfg = config(s)?;
    let w = word_for(text, &cfg)?;
    let e = evaluate(&cfg, &w)?;
    Ok((cfg, e))
}

fn run_perm(s: &Surface, text: &str) -> Outcome {
    let (cfg, e) = element(s, text)?;
    let signed = signed_decompose(e.perm(), cfg.arcs());
    let pure = is_pure(&e);
    let mut out = format!("perm: {}\npure: {}", join(&e.perm().one_line()), yes(pure));
    match &signed {
        Some(sp) => write!(out, "\narcs: {}\nsigns: {}", join(&sp.one_line()), join(sp.signs())).unwrap(),
        None => out.push_str("\nnot a signed permutation"),
    }
    let mut inputs = surface_inputs(s);
    inputs["word"] = json!(text);
    Ok(Report {
        command: "perm",
        inputs,
        result: json!({ "perm": e.perm().one_line(), "pure": pure, "signed": signed }),
        diagnostics: Vec::new(),
        ok: signed.is_some(),
        text: out,
    })
}

fn run_member(s: &Surface, text: &str) -> Outcome {
    let (cfg, e) = element(s, text)?;
    let signed = signed_decompose(e.perm(), cfg.arcs()).is_some();
    let homology = kernel_omega_necessary(&e);
    let extends = induced_handlebody_map(&e).is_some();
    let ok = signed && homology && extends;
    let out = format!(
        "preserves arc pairs: {}\nacts trivially on H1: {}\nextends over the handlebody: {}\nnecessary conditions: {}",
        yes(signed),
        yes(homology),
        yes(extends),
        if ok { "hold" } else { "fail" }
    );
    let mut inputs = surface_inputs(s);
    inputs["word"] = json!(text);
    Ok(Report {
        command: "member",
        inputs,
        result: json!({
            "signed_permutation": signed,
            "trivial_on_h1": homology,
            "extends_over_handlebody": extends,
            "necessary_conditions_hold": ok,
        }),
        diagnostics: vec!["these conditions are necessary, not sufficient".into()],
        ok,
        text: out,
    })
}

fn run_motion(arcs: usize, text: &str) -> Outcome {
    if arcs == 0 {
        return Err(Failure::Usage("--arcs must be at least 1".into()));
    }
    let w = GeneratorWord::parse_for(text, 0, arcs)?;
    let m = hilden_map(&w, arcs)?;
    let mut out = String::new();
    for (x, img) in m.table() {
        writeln!(out, "{x} -> {img}").unwrap();
    }
    write!(out, "identity: {}", yes(m.is_identity())).unwrap();
    Ok(Report {
        command: "motion",
        inputs: json!({ "arcs": arcs, "word": text }),
        result: json!({ "automorphism": m, "identity": m.is_identity() }),
        diagnostics: Vec::new(),
        ok: true,
        text: out,
    })
}

fn plat_text(s: &PlatSummary) -> String {
    format!("raw: {}\nsimplified: {}\nH1: {}", s.raw, s.simplified, s.homology)
}

fn plat_job(genus: usize, arcs: usize, psi: &str, sigma: &str) -> Outcome {
    let cfg = Arc::new(SurfaceConfig::with_arcs(genus, arcs));
    let p = word_for(psi, &cfg)?;
    let s = word_for(sigma, &cfg)?;
    let summary = plat_summary(&cfg, &p, &s)?;
    Ok(Report {
        command: "plat",
        inputs: json!({ "genus": genus, "arcs": arcs, "psi": psi, "sigma": sigma }),
        text: plat_text(&summary),
        result: json!({
            "raw": summary.raw,
            "simplified": summary.simplified,
            "homology": summary.homology,
            "h1": summary.homology.to_string(),
        }),
        diagnostics: Vec::new(),
        ok: true,
    })
}

fn run_plat_file(path: &PathBuf) -> Outcome {
    let content = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let mut jobs = Vec::new();
    for (lineno, line) in content.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let where_ = format!("{}:{}", path.display(), lineno + 1);
        let tokens = shlex::split(line).ok_or_else(|| Failure::Usage(format!("{where_}: unbalanced quotes")))?;
        let job = PlatJob::try_parse_from(tokens).map_err(|e| Failure::Usage(format!("{where_}: {e}")))?;
        jobs.push((where_, job));
    }
    let mut results = Vec::new();
    let mut text = String::new();
    let mut diagnostics = Vec::new();
    let mut ok = true;
    for (where_, job) in &jobs {
        let r = plat_job(job.genus, job.arcs, &job.psi, &job.sigma).map_err(|f| match f {
            Failure::Usage(m) => Failure::Usage(format!("{where_}: {m}")),
            Failure::Math(m) => Failure::Math(format!("{where_}: {m}")),
        })?;
        writeln!(text, "# {where_}\n{}", r.text).unwrap();
        ok &= r.ok;
        diagnostics.extend(r.diagnostics.iter().map(|d| format!("{where_}: {d}")));
        results.push(json!({ "inputs": r.inputs, "result": r.result }));
    }
    Ok(Report {
        command: "plat",
        inputs: json!({ "file": path, "jobs": jobs.len() }),
        result: json!({ "jobs": results }),
        diagnostics,
        ok,
        text: text.trim_end().to_string(),
    })
}

fn run_coset(s: &Surface, psi: &str, sigma: &str, epsilon: &str) -> Outcome {
    let cfg = config(s)?;
    let (p, sg, e) = (word_for(psi, &cfg)?, word_for(sigma, &cfg)?, word_for(epsilon, &cfg)?);
    let rep = coset_equivalence_check(&cfg, &p, &sg, &e)?;
    let text = format!(
        "sigma:\n{}\nsigma epsilon:\n{}\nhomology equal: {}",
        plat_text(&rep.sigma),
        plat_text(&rep.sigma_epsilon),
        yes(rep.homology_equal)
    );
    let mut inputs = surface_inputs(s);
    inputs["psi"] = json!(psi);
    inputs["sigma"] = json!(sigma);
    inputs["epsilon"] = json!(epsilon);
    Ok(Report {
        command: "coset",
        inputs,
        result: serde_json::to_value(&rep).expect("serializable"),
        diagnostics: Vec::new(),
        ok: rep.homology_equal,
        text,
    })
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn dispatch(cmd: &Command) -> Outcome {
    match cmd {
        Command::Eval { surface, word } => run_eval(surface, &word.word),
        Command::Relations { surface } => run_relations(surface),
        Command::Perm { surface, word } => run_perm(surface, &word.word),
        Command::Member { surface, word } => run_member(surface, &word.word),
        Command::Motion { arcs, word } => run_motion(*arcs, &word.word),
        Command::Plat(a) => match &a.file {
            Some(path) => run_plat_file(path),
            None => plat_job(a.genus, a.arcs.expect("required without --file"), &a.psi, &a.sigma),
        },
        Command::Coset { surface, psi, sigma, epsilon } => run_coset(surface, psi, sigma, epsilon),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let json_mode = cli.json || cli.output == Mode::Json;
    match dispatch(&cli.command) {
        Ok(report) => {
            if json_mode {
                println!("{}", serde_json::to_string_pretty(&report.to_json()).expect("serializable"));
            } else {
                println!("{}", report.text);
                for d in &report.diagnostics {
                    eprintln!("note: {d}");
                }
            }
            ExitCode::from(if report.ok { 0 } else { 1 })
        }
        Err(f) => {
            let (code, kind, msg) = match f {
                Failure::Usage(m) => (2, "usage", m),
                Failure::Math(m) => (1, "math", m),
            };
            if json_mode {
                let v = json!({ "ok": false, "error": { "kind": kind, "message": msg }, "diagnostics": [msg] });
                println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
            } else {
                eprintln!("error: {msg}");
            }
            ExitCode::from(code)
        }
    }
}
