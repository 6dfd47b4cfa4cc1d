//! `gkm`: command-line front end for path-model crystals and Demazure
//! characters of generalized Kac–Moody algebras.

use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use gkm_crystal::crystal::{branch, generate, prv_check, tensor_decompose, Decomposition, GenerateOptions, DEFAULT_NODE_BUDGET};
use gkm_crystal::demazure::{demazure_character, demazure_crystal, verify_theorem4, StageLimits};
use gkm_crystal::monoid::{to_minimal_dominant_reduced, BlockForm, MonoidWord, DEFAULT_REWRITE_BUDGET};
use gkm_crystal::verify::{run_suite, SuiteOptions};
use gkm_crystal::{BorcherdsCartanDatum, Error, RationalWeight};

#[derive(Parser)]
#[command(name = "gkm", version, about = "Path-model crystals and Demazure characters for generalized Kac-Moody algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct Common {
    /// Datum file (JSON: indices, matrix, optional symmetrizer, weights).
    #[arg(long)]
    datum: String,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Maximum number of crystal nodes.
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    node_budget: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Crystal graph of B(lambda) up to a depth.
    Crystal {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        weight: String,
        #[arg(long)]
        depth: usize,
    },
    /// Truncated character of V(lambda).
    Char {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        weight: String,
        #[arg(long)]
        depth: usize,
    },
    /// Demazure character by the operator formula.
    DemazureChar(DemazureArgs),
    /// Demazure crystal B_w(lambda) by staged lowering.
    DemazureCrystal(DemazureArgs),
    /// Decomposition of V(left) (x) V(right) up to a depth.
    Tensor {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long)]
        depth: usize,
        /// Also check the truncated character identity.
        #[arg(long)]
        verify: bool,
    },
    /// Restriction of V(lambda) to the subalgebra on a subset of indices.
    Branch {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        weight: String,
        /// Index labels of the subset, separated by spaces or commas.
        #[arg(long, default_value = "")]
        levi: String,
        #[arg(long)]
        depth: usize,
        #[arg(long)]
        verify: bool,
    },
    /// Sufficient condition for V(w1 lambda + w2 mu) to occur in V(lambda) (x) V(mu).
    Prv {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long, default_value = "")]
        left_word: String,
        #[arg(long, default_value = "")]
        right_word: String,
        #[arg(long)]
        depth: usize,
    },
    /// Runs a verification suite on the bundled fixtures.
    Verify {
        /// One of: paper-examples, thm1, thm2, thm3, thm4, prv, invariants, lemma411, shadow.
        #[arg(long)]
        suite: String,
        /// Overrides the suite's generation depth.
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        node_budget: usize,
    },
}

#[derive(Args)]
struct DemazureArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long)]
    weight: String,
    /// Word in written order, e.g. "r1 r2^2".
    #[arg(long, default_value = "")]
    word: String,
    /// Depth guard for the computation.
    #[arg(long, default_value_t = 64)]
    depth: usize,
    #[arg(long, default_value_t = DEFAULT_REWRITE_BUDGET)]
    rewrite_budget: usize,
    /// Also compare operator formula and crystal enumeration.
    #[arg(long)]
    verify: bool,
}

/// A command outcome: output document, text rendering and exit code.
struct Outcome {
    json: Value,
    text: String,
    code: u8,
}

impl Outcome {
    fn ok(json: Value, text: String) -> Self {
        Self { json, text, code: 0 }
    }
}

fn load(common: &Common) -> Result<Arc<BorcherdsCartanDatum>, Error> {
    Ok(Arc::new(BorcherdsCartanDatum::load(&common.datum)?))
}

fn gen_options(common: &Common) -> GenerateOptions {
    GenerateOptions { indices: None, node_budget: common.node_budget }
}

fn decomposition_text(d: &BorcherdsCartanDatum, dec: &Decomposition<gkm_crystal::Rational>) -> String {
    let mut out: Vec<String> =
        dec.components.iter().map(|(w, m)| format!("{m} x V({})", w.display(d))).collect();
    if let Some(v) = dec.verified() {
        out.push(format!("character identity: {}", if v { "holds" } else { "FAILS" }));
    }
    out.join("\n")
}

fn normal_form(d: &BorcherdsCartanDatum, args: &DemazureArgs, lam: &RationalWeight) -> Result<BlockForm, Error> {
    let word = MonoidWord::parse(d, &args.word)?;
    to_minimal_dominant_reduced(d, &word, lam, args.rewrite_budget)
}

fn demazure(args: &DemazureArgs, crystal: bool) -> Result<Outcome, Error> {
    let d = load(&args.common)?;
    let lam = RationalWeight::named(&d, &args.weight)?;
    let form = normal_form(&d, args, &lam)?;
    let limits = StageLimits { node_budget: args.common.node_budget, max_depth: args.depth };
    let mut out = if crystal {
        let set = demazure_crystal(&d, &lam, &form, &limits)?;
        let nodes: Vec<Value> =
            set.iter().map(|p| json!({ "weight": p.wt().to_json(&d), "path": p.to_json(&d) })).collect();
        let text = set.iter().map(|p| p.wt().display(&d)).collect::<Vec<_>>().join("\n");
        Outcome::ok(json!({ "word": args.word, "normal_form": form.display(&d), "size": set.len(), "nodes": nodes }), text)
    } else {
        let ch = demazure_character(&d, &lam, &form, args.depth)?;
        Outcome::ok(
            json!({ "word": args.word, "normal_form": form.display(&d), "character": ch.to_json(&d) }),
            ch.display(&d),
        )
    };
    if args.verify {
        let check = verify_theorem4(&d, &lam, &form, &limits)?;
        out.json["verified"] = json!(check.passed());
        out.json["check"] = serde_json::to_value(&check).expect("check serializes");
        out.text.push_str(&format!("\nverification: {}", if check.passed() { "pass" } else { "FAIL" }));
        if !check.passed() {
            out.code = 4;
        }
    }
    Ok(out)
}

fn run(cli: Cli) -> Result<(Outcome, Format), Error> {
    match cli.command {
        Command::Crystal { common, weight, depth } => {
            let d = load(&common)?;
            let lam = RationalWeight::named(&d, &weight)?;
            let g = generate(&d, &lam, depth, &gen_options(&common))?;
            let text = g
                .weight_multiplicities()
                .iter()
                .map(|(w, m)| format!("{m}  {}", w.display(&d)))
                .collect::<Vec<_>>()
                .join("\n");
            Ok((Outcome::ok(g.to_json(), format!("{} nodes\n{text}", g.len())), common.format))
        }
        Command::Char { common, weight, depth } => {
            let d = load(&common)?;
            let lam = RationalWeight::named(&d, &weight)?;
            let ch = generate(&d, &lam, depth, &gen_options(&common))?.truncated_character();
            Ok((Outcome::ok(json!({ "depth": depth, "character": ch.to_json(&d) }), ch.display(&d)), common.format))
        }
        Command::DemazureChar(args) => Ok((demazure(&args, false)?, args.common.format)),
        Command::DemazureCrystal(args) => Ok((demazure(&args, true)?, args.common.format)),
        Command::Tensor { common, left, right, depth, verify } => {
            let d = load(&common)?;
            let l = RationalWeight::named(&d, &left)?;
            let r = RationalWeight::named(&d, &right)?;
            let dec = tensor_decompose(&d, &l, &r, depth, verify, &gen_options(&common))?;
            let code = if dec.verified() == Some(false) { 4 } else { 0 };
            Ok((Outcome { json: dec.to_json(&d), text: decomposition_text(&d, &dec), code }, common.format))
        }
        Command::Branch { common, weight, levi, depth, verify } => {
            let d = load(&common)?;
            let lam = RationalWeight::named(&d, &weight)?;
            let subset = levi
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| d.index_of(s))
                .collect::<Result<Vec<_>, _>>()?;
            let dec = branch(&d, &lam, &subset, depth, verify, &gen_options(&common))?;
            let code = if dec.verified() == Some(false) { 4 } else { 0 };
            Ok((Outcome { json: dec.to_json(&d), text: decomposition_text(&d, &dec), code }, common.format))
        }
        Command::Prv { common, left, right, left_word, right_word, depth } => {
            let d = load(&common)?;
            let l = RationalWeight::named(&d, &left)?;
            let r = RationalWeight::named(&d, &right)?;
            let wl = MonoidWord::parse(&d, &left_word)?;
            let wr = MonoidWord::parse(&d, &right_word)?;
            let (rep, assoc) = prv_check(&d, &l, &r, &wl, &wr, depth, &gen_options(&common))?;
            let text = format!("nu = {}\n{}", rep.nu.display(&d), rep.note);
            let code = if rep.is_failure() { 1 } else { 0 };
            Ok((Outcome { json: rep.to_json(&d, assoc.derived()), text, code }, common.format))
        }
        Command::Verify { suite, depth, format, node_budget } => {
            let report = run_suite(&suite, &SuiteOptions { depth, node_budget })?;
            let text = report
                .checks
                .iter()
                .map(|c| format!("{}  {}", format!("{:?}", c.status).to_lowercase(), c.check))
                .collect::<Vec<_>>()
                .join("\n");
            let code = if report.passed() { 0 } else { 1 };
            Ok((Outcome { json: report.to_json(), text, code }, format))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, format)) => {
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).expect("output serializes")),
                Format::Text => println!("{}", out.text),
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            let code = e.exit_code();
            eprintln!("{}", json!({ "error": e.to_string(), "exit_code": code }));
            ExitCode::from(code as u8)
        }
    }
}
