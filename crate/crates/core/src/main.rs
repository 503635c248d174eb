use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use resetcalc::congruences::{
    cayley_graph, classify, fixture, lambda_sets, Caps, CongruenceRepr, RightCongruenceK,
};
use resetcalc::graphs::AGraph;
use resetcalc::projective::{turing_sequence, verify_projective_system, IdealSequence, Violation};
use resetcalc::turing::{
    example_machine, is_left_reset_bounded, is_right_reset_bounded, parse_machine, AnbnOracle,
    Bounds, ResetOracle, ResetVerdict, RunVerdict, TuringMachine,
};
use resetcalc::words::{Alphabet, Ideal, Word};
use resetcalc::{Error, Result};

#[derive(Parser)]
#[command(
    name = "resetcalc",
    version,
    about = "Reset words, semaphore codes and right congruences"
)]
struct Cli {
    /// Output mode.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SideArg {
    Right,
    Left,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a machine on an input word and print every tape.
    TmRun {
        /// Machine file, or `builtin:anbn`.
        machine: String,
        /// Input word over the input letters; `ε` or "" for the empty word.
        tape: String,
        #[arg(long, default_value_t = 10_000)]
        max_steps: usize,
    },
    /// Bounded reset search over all words up to a length.
    TmResets {
        machine: String,
        #[arg(long)]
        len: usize,
        #[arg(long, default_value_t = 2)]
        ctx: usize,
        #[arg(long, default_value_t = 20)]
        steps: usize,
        #[arg(long, value_enum, default_value_t = SideArg::Right)]
        side: SideArg,
        /// Compare against a closed-form oracle (`builtin-anbn`).
        #[arg(long)]
        oracle: Option<String>,
    },
    /// Structural and reset analysis of an A-graph.
    GraphAnalyze {
        graph: String,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, default_value_t = 4)]
        reset_cap: usize,
    },
    /// Classify a congruence given by a partition file, an ideal file or `fixture:NAME`.
    CongClassify {
        input: String,
        #[arg(long, default_value_t = 6)]
        cap: usize,
        #[arg(long, default_value_t = 6)]
        k_max: usize,
    },
    /// Check the projective system of an ideal sequence file or `builtin:anbn:K`.
    ProjVerify {
        sequence: String,
        #[arg(long, default_value_t = 6)]
        cap: usize,
    },
}

/// One output line: a key with its table rendering and its JSON value.
struct Finding {
    key: String,
    text: String,
    json: Value,
}

struct Report {
    op: &'static str,
    input: String,
    params: Vec<(&'static str, Value)>,
    findings: Vec<Finding>,
    violations: bool,
}

impl Report {
    fn new(op: &'static str, input: &str, params: Vec<(&'static str, Value)>) -> Self {
        Report {
            op,
            input: input.to_string(),
            params,
            findings: Vec::new(),
            violations: false,
        }
    }

    fn add(&mut self, key: impl Into<String>, text: impl Into<String>, json: Value) {
        self.findings.push(Finding {
            key: key.into(),
            text: text.into(),
            json,
        });
    }

    fn print(&self, format: Format) {
        match format {
            Format::Table => {
                println!("op: {}", self.op);
                println!("input: {}", self.input);
                let ps: Vec<String> = self
                    .params
                    .iter()
                    .map(|(k, v)| format!("{k}={}", plain(v)))
                    .collect();
                println!("params: {}", ps.join(" "));
                for f in &self.findings {
                    println!("{}: {}", f.key, f.text);
                }
            }
            Format::Json => {
                let params: Map<String, Value> = self
                    .params
                    .iter()
                    .map(|(k, v)| (k.to_string(), v.clone()))
                    .collect();
                for f in &self.findings {
                    let rec = json!({
                        "schema": 1,
                        "op": self.op,
                        "input": self.input,
                        "params": params,
                        "verdict": { f.key.clone(): f.json },
                    });
                    println!("{rec}");
                }
            }
        }
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn braces(a: &Alphabet, words: impl IntoIterator<Item = Word>) -> (String, Value) {
    let ws: Vec<String> = words.into_iter().map(|w| a.render(&w)).collect();
    (format!("{{{}}}", ws.join(", ")), json!(ws))
}

fn read(path: &str) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{path}: {e}")))
}

fn load_machine(source: &str) -> Result<TuringMachine> {
    if source == "builtin:anbn" {
        return Ok(example_machine());
    }
    parse_machine(&read(source)?)
}

fn tm_run(machine: &str, tape: &str, max_steps: usize) -> Result<Report> {
    let tm = load_machine(machine)?;
    let input = tm.tape_alphabet().parse_word(tape)?;
    let (trace, verdict) = tm.run_input(&input, max_steps)?;
    let mut r = Report::new(
        "tm-run",
        machine,
        vec![("tape", json!(tape)), ("max_steps", json!(max_steps))],
    );
    for (i, w) in trace.iter().enumerate() {
        let s = tm.render(w);
        r.add(
            format!("step {i}"),
            s.clone(),
            json!({ "step": i, "tape": s }),
        );
    }
    let last = trace.last().expect("trace starts with the initial tape");
    let state = last
        .0
        .iter()
        .find_map(|&s| tm.state_of(s))
        .map(|q| tm.states()[q].clone());
    let text = match (&state, verdict) {
        (Some(q), RunVerdict::HaltedFinal | RunVerdict::HaltedNonfinal) => {
            format!("{} ({q})", verdict.as_str())
        }
        _ => verdict.as_str().to_string(),
    };
    r.add(
        "verdict",
        text,
        json!({ "verdict": verdict.as_str(), "state": state, "steps": trace.len() - 1 }),
    );
    Ok(r)
}

fn tm_resets(
    machine: &str,
    len: usize,
    bounds: Bounds,
    side: SideArg,
    oracle: Option<&str>,
) -> Result<Report> {
    let tm = load_machine(machine)?;
    let oracle: Option<Box<dyn ResetOracle>> = match oracle {
        None => None,
        Some("builtin-anbn") => Some(Box::new(AnbnOracle)),
        Some(other) => return Err(Error::Invalid(format!("unknown oracle `{other}`"))),
    };
    let side_name = if side == SideArg::Right {
        "right"
    } else {
        "left"
    };
    let mut params = vec![
        ("len", json!(len)),
        ("ctx", json!(bounds.ctx_len)),
        ("steps", json!(bounds.n_max)),
        ("side", json!(side_name)),
    ];
    if let Some(o) = &oracle {
        params.push(("oracle", json!(o.name())));
    }
    let mut r = Report::new("tm-resets", machine, params);
    let mut disagreements = 0usize;
    let mut counts = [0usize; 3];
    for w in tm.omega().words_upto(len) {
        // the search runs without the oracle so the two can be compared
        let v = match side {
            SideArg::Right => is_right_reset_bounded(&tm, &w, bounds, None),
            SideArg::Left => is_left_reset_bounded(&tm, &w, bounds, None),
        };
        counts[match v {
            ResetVerdict::Reset(_) => 0,
            ResetVerdict::NonReset(_) => 1,
            ResetVerdict::Unknown { .. } => 2,
        }] += 1;
        let word = tm.render(&w);
        let mut text = v.label().to_string();
        let mut rec = json!({ "word": word, "verdict": v.label() });
        if let Some(o) = &oracle {
            let says = match side {
                SideArg::Right => o.is_right_reset(&w),
                SideArg::Left => o.is_left_reset(&w),
            };
            let agree = !matches!(
                (&v, says),
                (ResetVerdict::NonReset(_), Some(true)) | (ResetVerdict::Reset(_), Some(false))
            );
            disagreements += usize::from(!agree);
            let said = match says {
                Some(true) => "reset",
                Some(false) => "non-reset",
                None => "unknown",
            };
            text = format!(
                "{text}\toracle={said}\t{}",
                if agree { "agree" } else { "DISAGREE" }
            );
            rec["oracle"] = json!(said);
            rec["agree"] = json!(agree);
        }
        r.add(format!("word {word}"), text, rec);
    }
    let summary = format!(
        "reset={} non-reset={} unknown={}",
        counts[0], counts[1], counts[2]
    );
    r.add(
        "summary",
        summary,
        json!({ "reset": counts[0], "non-reset": counts[1], "unknown": counts[2] }),
    );
    if oracle.is_some() {
        r.add(
            "disagreements",
            disagreements.to_string(),
            json!(disagreements),
        );
        r.violations = disagreements > 0;
    }
    Ok(r)
}

fn graph_analyze(path: &str, k: usize, reset_cap: usize) -> Result<Report> {
    let g = AGraph::from_text(&read(path)?)?;
    let a = g.alphabet().clone();
    let mut r = Report::new(
        "graph-analyze",
        path,
        vec![("k", json!(k)), ("reset_cap", json!(reset_cap))],
    );
    r.add(
        "vertices",
        g.vertex_count().to_string(),
        json!(g.vertex_count()),
    );
    r.add(
        "deterministic",
        g.is_deterministic().to_string(),
        json!(g.is_deterministic()),
    );
    r.add(
        "complete",
        g.is_complete().to_string(),
        json!(g.is_complete()),
    );
    r.add(
        "strongly_connected",
        g.is_strongly_connected().to_string(),
        json!(g.is_strongly_connected()),
    );
    let past: Vec<String> = g
        .infinite_past()
        .iter()
        .enumerate()
        .filter(|(_, &b)| b)
        .map(|(i, _)| g.names()[i].clone())
        .collect();
    r.add(
        "infinite_past",
        format!("{{{}}}", past.join(", ")),
        json!(past),
    );
    let c = g.minus_omega_certificates();
    r.add(
        "minus_omega",
        format!("trim={} deterministic={} complete={} all={}", c.trim, c.deterministic_mw, c.complete_mw, c.all()),
        json!({ "trim": c.trim, "deterministic": c.deterministic_mw, "complete": c.complete_mw, "all": c.all() }),
    );
    if g.table().is_err() {
        r.add(
            "resets",
            "n/a (graph is not deterministic and complete)",
            Value::Null,
        );
        return Ok(r);
    }
    let resets = g.reset_words_upto(reset_cap)?;
    let (text, js) = braces(&a, resets.iter().cloned());
    r.add(format!("Res<={reset_cap}"), text, js);
    r.add(
        format!("{k}-reset"),
        g.is_k_reset(k)?.to_string(),
        json!(g.is_k_reset(k)?),
    );
    let pairs: Vec<String> = g
        .mu_k(k)?
        .into_iter()
        .map(|(p, q)| format!("({}, {})", g.names()[p], g.names()[q]))
        .collect();
    r.add(
        format!("mu_{k}"),
        format!("{{{}}}", pairs.join(", ")),
        json!(pairs),
    );
    let labels = g.mu_closure(k)?;
    let mut classes: Vec<Vec<String>> = Vec::new();
    for (v, &l) in labels.iter().enumerate() {
        if l == classes.len() {
            classes.push(Vec::new());
        }
        classes[l].push(g.names()[v].clone());
    }
    let text: Vec<String> = classes
        .iter()
        .map(|c| format!("{{{}}}", c.join(", ")))
        .collect();
    r.add(format!("mu_{k}_closure"), text.join(" "), json!(classes));
    Ok(r)
}

fn load_congruence(input: &str) -> Result<CongruenceRepr> {
    if let Some(name) = input.strip_prefix("fixture:") {
        return fixture(name);
    }
    let text = read(input)?;
    if text.lines().any(|l| l.trim_start().starts_with("block:")) {
        return Ok(CongruenceRepr::HatLift(RightCongruenceK::from_text(&text)?));
    }
    // an ideal file: `alphabet:` header followed by an ideal block
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim().starts_with('#'));
    let (ln, head) = lines.next().ok_or_else(|| Error::Parse {
        line: 1,
        msg: "empty input".into(),
    })?;
    let names = head
        .trim()
        .strip_prefix("alphabet:")
        .ok_or_else(|| Error::Parse {
            line: ln + 1,
            msg: "expected `alphabet:` or `block:` lines".into(),
        })?;
    let a = Alphabet::new(&names.split_whitespace().collect::<Vec<_>>())?;
    let rest: String = text
        .lines()
        .skip(ln + 1)
        .map(|l| format!("{l}\n"))
        .collect();
    let ideal = Ideal::from_text(&a, &rest).map_err(|e| match e {
        Error::Parse { line, msg } => Error::Parse {
            line: line + ln + 1,
            msg,
        },
        other => other,
    })?;
    CongruenceRepr::special(ideal)
}

fn cong_classify(input: &str, cap: usize, k_max: usize) -> Result<Report> {
    let repr = load_congruence(input)?;
    let a = repr.alphabet().clone();
    let mut r = Report::new(
        "cong-classify",
        input,
        vec![("cap", json!(cap)), ("k_max", json!(k_max))],
    );
    r.add("kind", repr.kind(), json!(repr.kind()));
    let c = classify(&repr, Caps { cap, k_max })?;
    r.add("open", c.open.to_string(), json!(c.open));
    let index = c
        .index
        .map_or("infinite or unknown".to_string(), |i| i.to_string());
    r.add("index", index, json!(c.index));
    let reason =
        (c.special == Some(false)).then(|| match (&c.lambda_comparable, c.special_via_lambda) {
            (Some((u, v)), _) => format!(
                "Lambda not suffix code {{{}, {}}}",
                a.render(u),
                a.render(v)
            ),
            (None, Some(false)) => "a word of Lambda is not a reset".to_string(),
            _ => "three-path condition fails".to_string(),
        });
    let text = match (c.special, &reason) {
        (Some(b), None) => b.to_string(),
        (Some(b), Some(why)) => format!("{b}, reason: {why}"),
        (None, _) => "undetermined".to_string(),
    };
    r.add(
        "special",
        text,
        json!({ "value": c.special, "reason": reason }),
    );
    if matches!(repr, CongruenceRepr::RuleFixture(_)) {
        return Ok(r);
    }
    let lam = lambda_sets(&repr, cap)?;
    let (text, js) = braces(&a, lam.lambda.iter().cloned());
    r.add("Lambda", text, js);
    // Λ' grows exponentially with the cap, so only its size is reported
    let n = lam.lambda_prime.len();
    r.add(format!("|Lambda'<={cap}|"), n.to_string(), json!(n));
    if let Ok(cay) = cayley_graph(&repr) {
        let m = cay.sigma.k().saturating_sub(1);
        let res = cay.graph.reset_words_upto(m)?;
        let ws: Vec<String> = res.iter().map(|w| a.render(w)).collect();
        r.add(
            format!("Res<={m}"),
            format!("[{}]", ws.join(", ")),
            json!(ws),
        );
    }
    let prof = c
        .profinite_at
        .map_or(format!("none up to {k_max}"), |k| k.to_string());
    r.add("profinite_at", prof, json!(c.profinite_at));
    Ok(r)
}

fn load_sequence(source: &str) -> Result<IdealSequence> {
    if let Some(k) = source.strip_prefix("builtin:anbn:") {
        let k = k
            .parse()
            .map_err(|_| Error::Invalid(format!("bad level count in `{source}`")))?;
        return turing_sequence(&example_machine(), k, &AnbnOracle);
    }
    IdealSequence::from_text(&read(source)?)
}

fn proj_verify(source: &str, cap: usize) -> Result<Report> {
    let seq = load_sequence(source)?;
    let a = seq.alphabet().clone();
    let report = verify_projective_system(&seq, cap)?;
    let mut r = Report::new("proj-verify", source, vec![("cap", json!(cap))]);
    r.add("levels", seq.len().to_string(), json!(seq.len()));
    let sizes: Vec<String> = report.code_sizes.iter().map(usize::to_string).collect();
    r.add("code_sizes", sizes.join(" "), json!(report.code_sizes));
    for v in &report.violations {
        let text = match v {
            Violation::NotOnto { k, m, word } => format!("phi_{k}{m} misses {}", a.render(word)),
            Violation::NoSuffix { k, m, word } => {
                format!("{} has no level {m} suffix (k={k})", a.render(word))
            }
            Violation::SuffixCodeBreach { k, m, word } => {
                format!("{} has several level {m} suffixes (k={k})", a.render(word))
            }
            Violation::Action { k, m, word, letter } => {
                format!(
                    "action square fails for {} · {} (k={k}, m={m})",
                    a.render(word),
                    a.name(*letter)
                )
            }
            Violation::Composition { k, l, m, word } => {
                format!(
                    "phi_{l}{m} . phi_{k}{l} != phi_{k}{m} at {}",
                    a.render(word)
                )
            }
        };
        r.add("violation", text.clone(), json!(text));
    }
    r.add(
        "violations",
        report.violations.len().to_string(),
        json!(report.violations.len()),
    );
    r.add(
        "unverified at cap",
        report.unverified.len().to_string(),
        json!(report.unverified.len()),
    );
    r.violations = !report.passed();
    Ok(r)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let out = match &cli.cmd {
        Cmd::TmRun {
            machine,
            tape,
            max_steps,
        } => tm_run(machine, tape, *max_steps),
        Cmd::TmResets {
            machine,
            len,
            ctx,
            steps,
            side,
            oracle,
        } => tm_resets(
            machine,
            *len,
            Bounds {
                ctx_len: *ctx,
                n_max: *steps,
            },
            *side,
            oracle.as_deref(),
        ),
        Cmd::GraphAnalyze {
            graph,
            k,
            reset_cap,
        } => graph_analyze(graph, *k, *reset_cap),
        Cmd::CongClassify { input, cap, k_max } => cong_classify(input, *cap, *k_max),
        Cmd::ProjVerify { sequence, cap } => proj_verify(sequence, *cap),
    };
    match out {
        Ok(report) => {
            report.print(cli.format);
            ExitCode::from(u8::from(report.violations))
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
