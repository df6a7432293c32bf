use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context as _};
use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use rbdend::enveloping::{verify_envelope, FiniteDendriform, OracleElement, RbOracle};
use rbdend::suites::{self, SuiteReport};
use rbdend::trees::{
    self, enumerate_binary, enumerate_planar, filter_words, parse_binary_tree, parse_planar_tree, TreeFamily,
};
use rbdend::{Alphabet, BaseAlgebra, Context, Flavor, Limits, MultTable, Scalar};

#[derive(Parser, Debug)]
#[command(name = "rbdend", version, about = "Free Rota-Baxter algebras, dendriform structures and trees")]
struct Cli {
    /// Weight of the Rota-Baxter operator, an exact rational.
    #[arg(long, global = true, default_value = "0", allow_hyphen_values = true)]
    weight: String,

    /// Base algebra: zero, tensor, or table:PATH.
    #[arg(long, global = true, default_value = "zero")]
    base: String,

    /// File with one generator name per line.
    #[arg(long, global = true)]
    alphabet: Option<PathBuf>,

    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Largest size for counts and tree checks.
    #[arg(long, global = true, default_value_t = 4)]
    max_n: usize,

    /// Random trials per property.
    #[arg(long, global = true, default_value_t = 200)]
    trials: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate an expression in the free Rota-Baxter algebra.
    Eval { expression: String },
    /// Run a property suite.
    Check {
        #[arg(value_enum)]
        suite: Suite,
    },
    /// Count trees or tree-image words for n = 0..=max-n.
    Count {
        #[arg(value_enum)]
        family: CountFamily,
    },
    /// Map a tree to its bracketed word.
    Embed {
        #[arg(value_enum)]
        family: Family,
        tree: String,
    },
    /// Check that a dendriform morphism into an oracle kills the ideal
    /// generators of the enveloping algebra.
    Envelope {
        /// Structure-constant file with basis images.
        dfile: Option<PathBuf>,
        /// Use the structure induced on the oracle itself, with identity images.
        #[arg(long, value_enum, conflicts_with = "dfile")]
        induced: Option<InducedFlavor>,
        /// sequences[:N] or polynomials[:D].
        #[arg(long, default_value = "sequences:6")]
        oracle: String,
        /// Only the first N basis pairs.
        #[arg(long)]
        pairs: Option<usize>,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    Words,
    Dendriform,
    Oracle,
    Trees,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum CountFamily {
    Binary,
    Planar,
    Diwords,
    Triwords,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    Binary,
    Planar,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum InducedFlavor {
    Tri,
    Di,
}

/// What a command prints, and whether every check in it passed.
struct Outcome {
    text: String,
    json: Value,
    pass: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let body = match cli.format {
                Format::Text => out.text,
                Format::Json => serde_json::to_string_pretty(&out.json).expect("json values serialize"),
            };
            // a closed pipe is not an error worth reporting
            let _ = writeln!(std::io::stdout().lock(), "{body}");
            if out.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            if cli.format == Format::Json {
                let _ = writeln!(std::io::stdout().lock(), "{}", json!({ "schema": 1, "error": format!("{e:#}") }));
            }
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    let weight: Scalar = cli
        .weight
        .parse()
        .map_err(|e| anyhow!("invalid weight `{}`: {e}", cli.weight))?;
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    let limits = Limits::default();
    match &cli.command {
        Command::Eval { expression } => {
            let ctx = session_context(cli, weight)?;
            let e = ctx.parse(expression)?;
            let rendered = ctx.render(&e);
            Ok(Outcome {
                json: json!({ "schema": 1, "command": "eval", "result": rendered }),
                text: rendered,
                pass: true,
            })
        }
        Command::Check { suite } => {
            if cli.trials == 0 {
                bail!("--trials must be at least 1");
            }
            let report = match suite {
                Suite::Words => suites::words_suite(&session_context(cli, weight)?, cli.trials, &mut rng)?,
                Suite::Dendriform => {
                    suites::dendriform_suite(&session_context(cli, weight)?, cli.trials, &mut rng)?
                }
                Suite::Oracle => {
                    let alphabet = load_alphabet(cli, &["x", "y", "z"])?;
                    suites::oracle_suite(&alphabet, &weight, cli.trials, &mut rng)?
                }
                Suite::Trees => {
                    let alphabet = load_alphabet(cli, &["x", "y"])?;
                    suites::trees_suite(&alphabet, cli.max_n, cli.max_n, limits.max_enumeration)?
                }
            };
            Ok(suite_outcome(&report))
        }
        Command::Count { family } => count(cli, *family, limits.max_enumeration),
        Command::Embed { family, tree } => embed(cli, *family, tree),
        Command::Envelope {
            dfile,
            induced,
            oracle,
            pairs,
        } => envelope(weight, dfile.as_deref(), *induced, oracle, *pairs),
    }
}

fn load_alphabet(cli: &Cli, default: &[&str]) -> anyhow::Result<Alphabet> {
    match &cli.alphabet {
        Some(path) => Ok(Alphabet::parse(&read(path)?)?),
        None => Ok(Alphabet::new(default)?),
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn session_context(cli: &Cli, weight: Scalar) -> anyhow::Result<Context> {
    let (alphabet, base) = match cli.base.as_str() {
        "zero" => (load_alphabet(cli, &["x", "y", "z"])?, BaseAlgebra::ZeroProduct),
        "tensor" => (load_alphabet(cli, &["x", "y", "z"])?, BaseAlgebra::FreeMonoid),
        other => {
            let path = other
                .strip_prefix("table:")
                .ok_or_else(|| anyhow!("unknown base `{other}` (expected zero, tensor or table:PATH)"))?;
            let given = cli.alphabet.as_ref().map(|p| read(p)).transpose()?;
            let given = given.map(|t| Alphabet::parse(&t)).transpose()?;
            let (alphabet, table) = MultTable::parse(&read(Path::new(path))?, given.as_ref())?;
            (alphabet, BaseAlgebra::Table(table))
        }
    };
    Ok(Context::new(alphabet, base, weight)?)
}

fn suite_outcome(report: &SuiteReport) -> Outcome {
    let mut text = String::new();
    for r in &report.results {
        match &r.counterexample {
            None => text.push_str(&format!("PASS {} ({} trials)\n", r.property, r.trials)),
            Some(c) => text.push_str(&format!("FAIL {} ({} trials): {c}\n", r.property, r.trials)),
        }
    }
    let pass = report.pass();
    text.push_str(if pass { "all properties hold" } else { "some property fails" });
    Outcome {
        text,
        json: json!({ "schema": 1, "command": "check", "report": report, "pass": pass }),
        pass,
    }
}

fn count(cli: &Cli, family: CountFamily, cap: usize) -> anyhow::Result<Outcome> {
    let alphabet = load_alphabet(cli, &["x"])?;
    let mut rows = Vec::new();
    let mut text = String::new();
    let mut pass = true;
    match family {
        CountFamily::Binary | CountFamily::Planar => {
            text.push_str("n\ttrees\n");
            for n in 0..=cli.max_n {
                let c = if family == CountFamily::Binary {
                    enumerate_binary(n, &alphabet, cap)?.len()
                } else {
                    enumerate_planar(n, &alphabet, cap)?.len()
                };
                text.push_str(&format!("{n}\t{c}\n"));
                rows.push(json!({ "n": n, "count": c }));
            }
        }
        CountFamily::Diwords | CountFamily::Triwords => {
            let tf = if family == CountFamily::Diwords {
                TreeFamily::Binary
            } else {
                TreeFamily::Planar
            };
            text.push_str("n\twords\timages\tagree\n");
            for n in 0..=cli.max_n {
                let words = filter_words(tf, n, &alphabet, cap)?;
                let images = trees::tree_images(tf, n, &alphabet, cap)?;
                let agree = words == images;
                pass &= agree;
                text.push_str(&format!("{n}\t{}\t{}\t{}\n", words.len(), images.len(), if agree { "yes" } else { "NO" }));
                rows.push(json!({ "n": n, "words": words.len(), "images": images.len(), "agree": agree }));
            }
        }
    }
    let name = format!("{family:?}").to_lowercase();
    Ok(Outcome {
        text: text.trim_end().to_string(),
        json: json!({ "schema": 1, "command": "count", "family": name, "alphabet": alphabet.names(), "rows": rows, "pass": pass }),
        pass,
    })
}

fn embed(cli: &Cli, family: Family, tree: &str) -> anyhow::Result<Outcome> {
    let alphabet = load_alphabet(cli, &["x", "y", "z"])?;
    let (word, predicate, holds) = match family {
        Family::Binary => {
            let w = trees::phi(&parse_binary_tree(tree, &alphabet)?)?;
            let ok = trees::is_diword(&w);
            (w, "diword", ok)
        }
        Family::Planar => {
            let w = trees::psi(&parse_planar_tree(tree, &alphabet)?)?;
            let ok = trees::is_triword(&w);
            (w, "triword", ok)
        }
    };
    let rendered = word.render(&alphabet);
    Ok(Outcome {
        text: format!("{rendered}\n{predicate}: {}", if holds { "yes" } else { "no" }),
        json: json!({ "schema": 1, "command": "embed", "word": rendered, "predicate": predicate, "holds": holds }),
        pass: holds,
    })
}

fn envelope(
    weight: Scalar,
    dfile: Option<&Path>,
    induced: Option<InducedFlavor>,
    oracle: &str,
    pairs: Option<usize>,
) -> anyhow::Result<Outcome> {
    let o = RbOracle::parse_spec(oracle, &weight)?;
    let (d, images): (FiniteDendriform, Vec<OracleElement>) = match (dfile, induced) {
        (Some(path), _) => {
            let file = FiniteDendriform::parse(&read(path)?).with_context(|| format!("parsing {}", path.display()))?;
            let coords = file
                .images
                .ok_or_else(|| anyhow!("{} gives no `image` lines", path.display()))?;
            let images = coords.into_iter().map(|c| o.element(c)).collect::<Result<_, _>>()?;
            (file.algebra, images)
        }
        (None, Some(flavor)) => {
            let flavor = match flavor {
                InducedFlavor::Tri => Flavor::Trialgebra,
                InducedFlavor::Di => Flavor::Dialgebra,
            };
            FiniteDendriform::from_induced(&o, flavor)?
        }
        (None, None) => bail!("give a structure-constant file or --induced tri|di"),
    };
    let report = verify_envelope(&d, &images, &o, &weight, pairs)?;
    Ok(Outcome {
        text: report.to_string(),
        pass: report.pass,
        json: serde_json::to_value(&report)?,
    })
}
