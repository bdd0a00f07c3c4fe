//! `conjrep`: evaluate words, check relations and claims, search for kernel
//! elements.
//!
//! Exit status: 0 on success, 1 when a hard check fails or a search runs out
//! of budget, 2 on usage errors.

mod q;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use conjrep::claims::qsets::{qset_expressions, qset_member, QSetId};
use conjrep::claims::reduce::{conjugate_reduce, detect_and_reduce, ReduceCase};
use conjrep::claims::registry::{any_hard_failure, verify_claims};
use conjrep::claims::search::{
    kernel_search, SearchConfig, SearchError, SearchFamily, DEFAULT_NODE_BUDGET,
};
use conjrep::rep::{predicted_det, verify_relations};
use conjrep::scalar::{format_complex, lp_eval};
use conjrep::words::{
    enumerate_alpha_subgroup, parse_word, parse_word_in, AlphaElem, Alphabet, E1Spec, FamilyForm,
};
use conjrep::{RepContext, ScalarMode};

use q::{parse_q, QValue};

#[derive(Parser)]
#[command(
    name = "conjrep",
    version,
    about = "The Lawrence-Krammer extension to conjugating automorphisms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the matrix of a word.
    Eval(EvalArgs),
    /// Check the defining relations and the claim registry.
    Verify(VerifyArgs),
    /// Search for words with identity image (n = 3).
    Search(SearchArgs),
    /// Conjugate a restricted-family word to a shorter one (n = 3).
    Reduce(ReduceArgs),
    /// Test membership of q in P_k, R_k or S_k.
    Qset(QsetArgs),
    /// List the six elements of the alpha subgroup of C_3.
    AlphaWords(JsonFlag),
}

#[derive(Args)]
struct ModeArgs {
    /// Specialise q: `2`, `1/2`, `0.3` (exact) or `3+1i` (complex).
    #[arg(long, allow_hyphen_values = true, conflicts_with = "symbolic")]
    q: Option<String>,
    /// Keep q formal (the default).
    #[arg(long)]
    symbolic: bool,
}

impl ModeArgs {
    fn mode(&self) -> Result<ScalarMode, String> {
        let Some(s) = &self.q else {
            return Ok(ScalarMode::Symbolic);
        };
        let res = match parse_q(s)? {
            QValue::Exact(r) => ScalarMode::rational(r),
            QValue::Complex(z) => ScalarMode::complex(z),
        };
        res.map_err(|e| e.to_string())
    }
}

#[derive(Args)]
struct JsonFlag {
    /// Machine-readable output.
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlphabetArg {
    Any,
    Sigma,
    T,
}

#[derive(Args)]
struct EvalArgs {
    /// Space-separated letters, e.g. "s1 a2 T^-1"; "" or "1" is the empty word.
    word: String,
    #[arg(short, default_value_t = 3)]
    n: usize,
    #[command(flatten)]
    mode: ModeArgs,
    #[arg(long, value_enum, default_value_t = AlphabetArg::Any)]
    alphabet: AlphabetArg,
    /// Also print the determinant and the one predicted from letter counts.
    #[arg(long)]
    det: bool,
    #[command(flatten)]
    json: JsonFlag,
}

#[derive(Args)]
struct VerifyArgs {
    /// Check relations only (with --claims: both).
    #[arg(long)]
    relations: bool,
    /// Run the claim registry only (with --relations: both).
    #[arg(long)]
    claims: bool,
    /// Ranks for the relation check; defaults to 3 and 4.
    #[arg(short)]
    n: Vec<usize>,
    #[command(flatten)]
    json: JsonFlag,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    E1,
    E,
    Freewords,
}

#[derive(Args)]
struct SearchArgs {
    #[command(flatten)]
    mode: ModeArgs,
    #[arg(long, value_enum, default_value_t = FamilyArg::E)]
    family: FamilyArg,
    #[arg(long, default_value_t = 4)]
    max_r: usize,
    #[arg(long = "max-exp", default_value_t = 4)]
    max_exp: i64,
    #[arg(long = "max-len", default_value_t = 8)]
    max_len: usize,
    /// Identity tolerance in complex mode.
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,
    #[arg(long)]
    threads: Option<usize>,
    #[command(flatten)]
    json: JsonFlag,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormArg {
    Trailing,
    Leading,
}

#[derive(Args)]
struct ReduceArgs {
    /// The blocks A_1 ... A_r, each an alpha word such as "a1 a2".
    #[arg(required = true)]
    blocks: Vec<String>,
    #[arg(long, value_enum, default_value_t = FormArg::Trailing)]
    form: FormArg,
    /// `a`, `b` or `c<i>` (e.g. `c0`); tries every case when absent.
    #[arg(long = "case")]
    case: Option<String>,
    #[command(flatten)]
    json: JsonFlag,
}

#[derive(Clone, Copy, ValueEnum)]
enum SetArg {
    P,
    R,
    S,
}

#[derive(Args)]
struct QsetArgs {
    #[arg(long, value_enum, ignore_case = true)]
    set: SetArg,
    #[arg(short)]
    k: i64,
    #[arg(long, allow_hyphen_values = true)]
    q: String,
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    #[command(flatten)]
    json: JsonFlag,
}

enum Failure {
    Usage(String),
    Check(String),
}

type CmdResult = Result<bool, Failure>;

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

fn print_json(v: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(v).expect("values serialise")
    );
}

fn cmd_eval(a: &EvalArgs) -> CmdResult {
    let mode = a.mode.mode().map_err(usage)?;
    let alphabet = match a.alphabet {
        AlphabetArg::Any => Alphabet::Any,
        AlphabetArg::Sigma => Alphabet::Sigma,
        AlphabetArg::T => Alphabet::T,
    };
    let w = parse_word_in(&a.word, a.n, alphabet).map_err(usage)?;
    let ctx = RepContext::new(a.n, mode.clone()).map_err(usage)?;
    let m = ctx.rep_word(&w).map_err(usage)?;
    let predicted = predicted_det(&w);
    let predicted = match &mode {
        ScalarMode::Symbolic => predicted.to_string(),
        _ => lp_eval(&predicted, &mode).map_err(usage)?.to_string(),
    };
    if a.json.json {
        let mut v = json!({
            "word": w.to_string(),
            "n": a.n,
            "mode": mode.to_string(),
            "matrix": m.to_string_rows(),
        });
        if a.det {
            v["det"] = json!(m.det_string());
            v["predicted_det"] = json!(predicted);
        }
        print_json(&v);
    } else {
        println!("{}", m.render());
        if a.det {
            println!("det = {}", m.det_string());
            println!("predicted det = {predicted}");
        }
    }
    Ok(true)
}

fn cmd_verify(a: &VerifyArgs) -> CmdResult {
    let both = a.relations == a.claims;
    let mut ok = true;
    let mut out = json!({});
    if a.relations || both {
        let ranks = if a.n.is_empty() {
            vec![3, 4]
        } else {
            a.n.clone()
        };
        let mut reports = Vec::new();
        for n in ranks {
            let report = verify_relations(n).map_err(usage)?;
            ok &= report.all_hold();
            if !a.json.json {
                for c in &report.checks {
                    let status = if c.holds { "PASS" } else { "FAIL" };
                    println!(
                        "n={n} {:<14} {status}  {} = {}",
                        c.family.to_string(),
                        c.lhs,
                        c.rhs
                    );
                }
            }
            reports.push(report);
        }
        out["relations"] = serde_json::to_value(&reports).expect("reports serialise");
    }
    if a.claims || both {
        let verdicts = verify_claims();
        ok &= !any_hard_failure(&verdicts);
        if !a.json.json {
            for v in &verdicts {
                println!(
                    "{:<34} {:<18} {}",
                    v.claim_id,
                    v.status.to_string(),
                    v.locus
                );
            }
            let hard = verdicts
                .iter()
                .filter(|v| v.status.is_hard_failure())
                .count();
            println!("{} claims, {} hard failures", verdicts.len(), hard);
        }
        out["claims"] = serde_json::to_value(&verdicts).expect("verdicts serialise");
    }
    if a.json.json {
        // the claim report on its own is a bare array of verdicts
        if a.claims && !a.relations {
            print_json(&out["claims"]);
        } else {
            print_json(&out);
        }
    }
    Ok(ok)
}

fn cmd_search(a: &SearchArgs) -> CmdResult {
    let mode = a.mode.mode().map_err(usage)?;
    let family = match a.family {
        FamilyArg::E1 => SearchFamily::E1,
        FamilyArg::E => SearchFamily::E,
        FamilyArg::Freewords => SearchFamily::FreeWords,
    };
    let mut config = SearchConfig::new(mode.clone(), family);
    config.max_r = a.max_r;
    config.max_abs_exponent = a.max_exp;
    config.max_length = a.max_len;
    config.tolerance = a.tol;
    config.node_budget = a.budget;
    config.threads = a.threads;
    let start = Instant::now();
    let report = match kernel_search(&config) {
        Ok(r) => r,
        Err(e @ SearchError::InvalidConfig(_)) | Err(e @ SearchError::Scalar(_)) => {
            return Err(usage(e))
        }
        Err(e) => return Err(Failure::Check(e.to_string())),
    };
    let elapsed = start.elapsed();
    let nontrivial = report.nontrivial_hits().count();
    if a.json.json {
        let hits: Vec<Value> = report
            .hits
            .iter()
            .map(|h| json!({"word": h.word.to_string(), "nontrivial": h.nontrivial, "matrix": h.matrix.to_string_rows()}))
            .collect();
        print_json(&json!({
            "mode": mode.to_string(),
            "family": format!("{family:?}"),
            "hits": hits,
            "nontrivial_hits": nontrivial,
            "nodes": report.nodes,
            "det_passed": report.det_passed,
            "prefilter_passed": report.prefilter_passed,
        }));
    } else {
        for h in &report.hits {
            let tag = if h.nontrivial {
                "nontrivial"
            } else {
                "trivial"
            };
            println!("{}  [{tag}]", h.word);
        }
        println!(
            "{} hits ({nontrivial} nontrivial); {} nodes, {} past det filter, {} past prefilter; {:.2?}",
            report.hits.len(),
            report.nodes,
            report.det_passed,
            report.prefilter_passed,
            elapsed
        );
    }
    Ok(true)
}

fn parse_case(s: &str) -> Result<ReduceCase, String> {
    match s {
        "a" => Ok(ReduceCase::A),
        "b" => Ok(ReduceCase::B),
        _ => s
            .strip_prefix('c')
            .and_then(|i| i.parse().ok())
            .map(ReduceCase::C)
            .ok_or_else(|| format!("unknown case {s:?}; use a, b or c<i>")),
    }
}

fn cmd_reduce(a: &ReduceArgs) -> CmdResult {
    let mut blocks = Vec::new();
    for b in &a.blocks {
        let w = parse_word(b, 3).map_err(usage)?;
        match AlphaElem::from_letters(w.letters()) {
            Some(e) if e != AlphaElem::Id => blocks.push(e),
            _ => return Err(usage(format!("{b:?} is not a nontrivial alpha element"))),
        }
    }
    let form = match a.form {
        FormArg::Trailing => FamilyForm::TrailingT,
        FormArg::Leading => FamilyForm::LeadingT,
    };
    let spec = E1Spec::new(blocks, form);
    let red = match &a.case {
        Some(c) => conjugate_reduce(&spec, parse_case(c).map_err(usage)?),
        None => detect_and_reduce(&spec),
    }
    .map_err(usage)?;
    let holds = red.holds();
    let nontrivial = red.reduced_nontrivial();
    if a.json.json {
        print_json(&json!({
            "case": red.case.to_string(),
            "x": red.x.to_string(),
            "w": red.w.to_string(),
            "reduced": red.reduced.to_string(),
            "images_equal": holds,
            "reduced_is_identity": !nontrivial,
        }));
    } else {
        println!("case     {}", red.case);
        println!("x        {}", red.x);
        println!("w        {}", red.w);
        println!("reduced  {}", red.reduced);
        println!("rho(w^-1 x w) = rho(reduced): {holds}");
        println!("rho(reduced) = I: {}", !nontrivial);
    }
    Ok(holds)
}

fn cmd_qset(a: &QsetArgs) -> CmdResult {
    let set = match a.set {
        SetArg::P => QSetId::P(a.k),
        SetArg::R => QSetId::R(a.k),
        SetArg::S => QSetId::S(a.k),
    };
    let q = parse_q(&a.q).map_err(usage)?.to_complex();
    let member = qset_member(set, q, a.tol).map_err(usage)?;
    let exprs = qset_expressions(set, q).map_err(usage)?;
    if a.json.json {
        print_json(&json!({
            "set": set.to_string(),
            "q": format_complex(q),
            "member": member,
            "expressions": exprs.iter().map(|z| format_complex(*z)).collect::<Vec<_>>(),
        }));
    } else {
        println!("q = {} in {set}: {member}", format_complex(q));
        for z in exprs {
            println!("  {}", format_complex(z));
        }
    }
    Ok(true)
}

fn cmd_alpha_words(a: &JsonFlag) -> CmdResult {
    let all = enumerate_alpha_subgroup();
    if a.json {
        let v: Vec<Value> = all
            .iter()
            .map(|x| json!({"word": x.word.to_string(), "identity": x.is_identity, "matrix": x.matrix.to_string_rows()}))
            .collect();
        print_json(&Value::Array(v));
    } else {
        for x in &all {
            println!("{}", x.word);
            println!("{}", x.matrix.render());
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Eval(a) => cmd_eval(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Search(a) => cmd_search(a),
        Command::Reduce(a) => cmd_reduce(a),
        Command::Qset(a) => cmd_qset(a),
        Command::AlphaWords(a) => cmd_alpha_words(a),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
