//! `smashprime`: exact verification of Hopf algebras, module algebras,
//! smash products and Drinfeld twists from the command line.
//!
//! Every subcommand prints one JSON report per line and exits with the
//! combined status: 0 pass or vacuous, 1 fail, 2 input error, 3 unsupported.

mod commands;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::Value;
use smashprime::catalog::{self, Entry};
use smashprime::report::{combined_status, Report, Status};
use smashprime::{io, Error, Field, Result};

#[derive(Parser, Debug)]
#[command(
    name = "smashprime",
    version,
    about = "Exact checks for Hopf algebras, smash products and twists"
)]
struct Cli {
    /// Base field for catalog names and JSON inputs without a "field" key: Q or Fp.
    #[arg(long, global = true, default_value = "Q")]
    field: String,

    /// Seed for every randomized check.
    #[arg(long, global = true, env = "SMASHPRIME_SEED", default_value_t = 42)]
    seed: u64,

    /// Number of sampled ideals or vectors for randomized checks.
    #[arg(long, global = true, default_value_t = 10)]
    samples: usize,

    /// Also write the report stream to this file.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Do not print reports or diagnostics on the terminal.
    #[arg(long, global = true)]
    quiet: bool,

    #[command(subcommand)]
    command: Command,
}

/// Where the object under test comes from.
#[derive(Args, Debug, Clone)]
struct Source {
    /// A catalog name such as "group:Q[S3]" or "ma:swap2".
    #[arg(long, conflicts_with = "input")]
    catalog: Option<String>,

    /// A JSON file holding an Algebra, Hopf or module-algebra object.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
struct TwistSource {
    #[command(flatten)]
    source: Source,

    /// Twist JSON ({"J": [...]}) as a file path or inline text.
    #[arg(long)]
    twist: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check every axiom of the input.
    Validate(Source),
    /// Jacobson radical of the (underlying) algebra.
    Radical(Source),
    /// Whether the (underlying) algebra is semiprime.
    Semiprime(Source),
    /// Left and right integrals of a Hopf algebra.
    Integrals(Source),
    /// Semisimplicity of a Hopf algebra via an integral with nonzero counit.
    Semisimple(Source),
    /// Cosemisimplicity of a Hopf algebra.
    Cosemisimple(Source),
    /// The dual Hopf algebra.
    Dual(Source),
    /// The antipode of a Hopf algebra.
    Antipode(Source),
    /// Structure constants of the smash product.
    Smash(Source),
    /// Whether the smash product is semiprime.
    SmashSemiprime(Source),
    /// Whether a module algebra is H-semiprime.
    HSemiprime(Source),
    /// Invariants and central invariants of a module algebra.
    Invariants(Source),
    /// The separability idempotent of A#H over A.
    Separability(Source),
    /// End_{A#H}(A) against the invariants.
    EndIso(Source),
    /// Annihilator versus essentiality on sampled H-stable ideals.
    Lemma31 {
        #[command(flatten)]
        source: Source,
        /// Random probes per ideal.
        #[arg(long, default_value_t = 50)]
        probes: usize,
    },
    /// Invariant elements in sampled H-stable left ideals.
    Retract(Source),
    /// The map a -> a#t and t·I for sampled H-stable left ideals.
    Thm44(Source),
    /// Check a Drinfeld twist.
    TwistVerify(TwistSource),
    /// Twist a Hopf or module algebra and check the result.
    TwistApply(TwistSource),
    /// Grid search for twists on a group algebra over Q.
    TwistSearch {
        /// Catalog name or JSON file of the Hopf algebra.
        #[arg(long)]
        hopf: String,
        /// Comma-separated coefficient grid, e.g. "0,1,-1,1/2,-1/2".
        #[arg(long)]
        grid: Option<String>,
    },
    /// Check a triangular structure.
    TriangularVerify {
        #[command(flatten)]
        source: Source,
        /// R-matrix JSON ({"R": [...]}) as a file path or inline text.
        #[arg(long)]
        r: String,
    },
    /// Semiprimeness before and after twisting.
    Transfer(TwistSource),
    /// List or emit catalog entries.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Run every verification suite.
    VerifyPaper {
        /// Run only these suites.
        #[arg(long)]
        suite: Vec<String>,
        /// Random probes per ideal in the annihilator suite.
        #[arg(long, default_value_t = 50)]
        probes: usize,
        /// Debug mode: corrupt the counit of every instance in the Maschke suite.
        #[arg(long)]
        corrupt_counit: bool,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    /// One report listing every catalog name.
    List,
    /// Print the JSON form of a catalog entry.
    Emit { name: String },
}

/// Common context for the command implementations.
pub struct Ctx {
    pub field: Field,
    pub seed: u64,
    pub samples: usize,
}

/// A loaded input together with the name used in reports.
pub struct Loaded {
    pub instance: String,
    pub entry: Entry,
}

fn read_json(text: &str, what: &str) -> Result<Value> {
    io::parse_text(text).map_err(|e| Error::input(format!("{what}: {}", strip_prefix(&e))))
}

fn strip_prefix(e: &Error) -> String {
    match e {
        Error::Input(m) => m.clone(),
        other => other.to_string(),
    }
}

fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::input(format!("{}: {e}", path.display())))
}

/// Inline JSON if the argument starts with `{`, otherwise a file path.
fn file_or_inline(arg: &str, what: &str) -> Result<Value> {
    if arg.trim_start().starts_with('{') {
        read_json(arg, what)
    } else {
        let path = Path::new(arg);
        read_json(&read_file(path)?, &path.display().to_string())
    }
}

/// Picks the object kind from its keys.
fn entry_from_value(v: &Value, field: Field) -> Result<Entry> {
    match v {
        Value::String(name) => catalog::lookup(name, field),
        Value::Object(map) if map.contains_key("action") => {
            Ok(Entry::ModuleAlgebra(io::module_algebra_from_value(v, field)?))
        }
        Value::Object(map) if map.contains_key("comult") => Ok(Entry::Hopf(io::hopf_from_value(v, field)?)),
        Value::Object(map) if map.contains_key("mult") => Ok(Entry::Algebra(io::algebra_from_value(v, field)?)),
        Value::Object(_) => Err(Error::input(
            "top-level object has none of the keys \"mult\", \"comult\", \"action\"",
        )),
        _ => Err(Error::input("top level must be a JSON object or a catalog name string")),
    }
}

impl Source {
    fn instance(&self) -> String {
        match (&self.catalog, &self.input) {
            (Some(name), _) => name.clone(),
            (None, Some(path)) => path.display().to_string(),
            (None, None) => String::new(),
        }
    }

    fn load(&self, field: Field) -> Result<Loaded> {
        let entry = match (&self.catalog, &self.input) {
            (Some(name), _) => catalog::lookup(name, field)?,
            (None, Some(path)) => {
                let where_ = path.display().to_string();
                let v = read_json(&read_file(path)?, &where_)?;
                entry_from_value(&v, field).map_err(|e| Error::input(format!("{where_}: {}", strip_prefix(&e))))?
            }
            (None, None) => return Err(Error::input("give --catalog <name> or --input <file>")),
        };
        Ok(Loaded {
            instance: self.instance(),
            entry,
        })
    }
}

fn hopf_arg(arg: &str, field: Field) -> Result<(String, Entry)> {
    if Path::new(arg).is_file() {
        let v = read_json(&read_file(Path::new(arg))?, arg)?;
        Ok((arg.to_string(), entry_from_value(&v, field)?))
    } else {
        Ok((arg.to_string(), catalog::lookup(arg, field)?))
    }
}

fn run(cli: &Cli) -> Vec<Report> {
    let name = command_name(&cli.command);
    let field = match Field::from_name(&cli.field) {
        Ok(f) => f,
        Err(e) => return vec![Report::from_error(name, "", &e)],
    };
    let ctx = Ctx {
        field,
        seed: cli.seed,
        samples: cli.samples,
    };
    let one = |source: &Source, f: &dyn Fn(&Ctx, &Loaded) -> Result<Report>| -> Vec<Report> {
        let result = source
            .load(field)
            .and_then(|l| commands::validated(name, &l).map_or_else(|| f(&ctx, &l), Ok));
        vec![finish(name, &source.instance(), result)]
    };
    match &cli.command {
        Command::Validate(s) => {
            let r = s.load(field).map(|l| commands::validate(&l));
            vec![finish(name, &s.instance(), r)]
        }
        Command::Radical(s) => one(s, &commands::radical),
        Command::Semiprime(s) => one(s, &commands::semiprime),
        Command::Integrals(s) => one(s, &commands::integrals),
        Command::Semisimple(s) => one(s, &commands::semisimple),
        Command::Cosemisimple(s) => one(s, &commands::cosemisimple),
        Command::Dual(s) => one(s, &commands::dual),
        Command::Antipode(s) => one(s, &commands::antipode),
        Command::Smash(s) => one(s, &commands::smash),
        Command::SmashSemiprime(s) => one(s, &commands::smash_semiprime),
        Command::HSemiprime(s) => one(s, &commands::h_semiprime),
        Command::Invariants(s) => one(s, &commands::invariants),
        Command::Separability(s) => one(s, &commands::separability),
        Command::EndIso(s) => one(s, &commands::end_iso),
        Command::Lemma31 { source, probes } => one(source, &|c, l| commands::lemma31(c, l, *probes)),
        Command::Retract(s) => one(s, &commands::retract),
        Command::Thm44(s) => one(s, &commands::thm44),
        Command::TwistVerify(t) => twist_command(name, t, field, &|l, j| commands::twist_verify(l, j)),
        Command::TwistApply(t) => twist_command(name, t, field, &|l, j| commands::twist_apply(l, j)),
        Command::Transfer(t) => twist_command(name, t, field, &|l, j| commands::transfer(l, j)),
        Command::TriangularVerify { source, r } => {
            let result = source.load(field).and_then(|l| match commands::validated(name, &l) {
                Some(bad) => Ok(bad),
                None => commands::triangular_verify(&l, &file_or_inline(r, "R-matrix")?),
            });
            vec![finish(name, &source.instance(), result)]
        }
        Command::TwistSearch { hopf, grid } => {
            let result = hopf_arg(hopf, field).and_then(|(instance, entry)| {
                let l = Loaded { instance, entry };
                commands::validated(name, &l).map_or_else(|| commands::twist_search(&l, grid.as_deref()), Ok)
            });
            vec![finish(name, hopf, result)]
        }
        Command::Catalog {
            action: CatalogAction::List,
        } => vec![commands::catalog_list()],
        Command::Catalog {
            action: CatalogAction::Emit { .. },
        } => unreachable!("handled before dispatch"),
        Command::VerifyPaper {
            suite,
            probes,
            corrupt_counit,
        } => commands::verify_paper(&ctx, suite, *probes, *corrupt_counit),
    }
}

fn twist_command(
    name: &str,
    t: &TwistSource,
    field: Field,
    f: &dyn Fn(&Loaded, &Value) -> Result<Report>,
) -> Vec<Report> {
    let result = t.source.load(field).and_then(|l| match commands::validated(name, &l) {
        Some(bad) => Ok(bad),
        None => f(&l, &file_or_inline(&t.twist, "twist")?),
    });
    vec![finish(name, &t.source.instance(), result)]
}

/// Stamps command and instance onto a result, turning errors into reports.
fn finish(command: &str, instance: &str, result: Result<Report>) -> Report {
    match result {
        Ok(mut r) => {
            r.command = command.into();
            if r.instance.is_empty() {
                r.instance = instance.into();
            }
            r
        }
        Err(e) => Report::from_error(command, instance, &e),
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Validate(_) => "validate",
        Command::Radical(_) => "radical",
        Command::Semiprime(_) => "semiprime",
        Command::Integrals(_) => "integrals",
        Command::Semisimple(_) => "semisimple",
        Command::Cosemisimple(_) => "cosemisimple",
        Command::Dual(_) => "dual",
        Command::Antipode(_) => "antipode",
        Command::Smash(_) => "smash",
        Command::SmashSemiprime(_) => "smash-semiprime",
        Command::HSemiprime(_) => "h-semiprime",
        Command::Invariants(_) => "invariants",
        Command::Separability(_) => "separability",
        Command::EndIso(_) => "end-iso",
        Command::Lemma31 { .. } => "lemma31",
        Command::Retract(_) => "retract",
        Command::Thm44(_) => "thm44",
        Command::TwistVerify(_) => "twist-verify",
        Command::TwistApply(_) => "twist-apply",
        Command::TwistSearch { .. } => "twist-search",
        Command::TriangularVerify { .. } => "triangular-verify",
        Command::Transfer(_) => "transfer",
        Command::Catalog { .. } => "catalog",
        Command::VerifyPaper { .. } => "verify-paper",
    }
}

fn emit(cli: &Cli, lines: &[String]) -> std::io::Result<()> {
    if let Some(path) = &cli.output {
        let mut f = fs::File::create(path)?;
        for l in lines {
            writeln!(f, "{l}")?;
        }
    }
    if !cli.quiet {
        let stdout = std::io::stdout();
        let mut out = stdout.lock();
        for l in lines {
            writeln!(out, "{l}")?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (lines, status) = match &cli.command {
        Command::Catalog {
            action: CatalogAction::Emit { name },
        } => match Field::from_name(&cli.field).and_then(|f| commands::catalog_emit(name, f)) {
            Ok(v) => (vec![v.to_string()], Status::Pass),
            Err(e) => {
                let r = Report::from_error("catalog", name.as_str(), &e);
                (vec![r.to_json_line()], r.status)
            }
        },
        _ => {
            let reports = run(&cli);
            if !cli.quiet {
                for r in reports
                    .iter()
                    .filter(|r| matches!(r.status, Status::InputError | Status::Unsupported))
                {
                    eprintln!("smashprime {}: {}: {}", r.command, r.instance, r.conclusion);
                }
            }
            (
                reports.iter().map(Report::to_json_line).collect(),
                combined_status(&reports),
            )
        }
    };
    if let Err(e) = emit(&cli, &lines).or_else(|e| {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            Ok(())
        } else {
            Err(e)
        }
    }) {
        eprintln!("smashprime: cannot write output: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(status.exit_code() as u8)
}
