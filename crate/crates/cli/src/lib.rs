//! The `slt` command line.
//!
//! Exit codes: 0 success, 1 model and oracle disagree, 2 input or validation
//! error, 3 enumeration guard exceeded.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use slt_core::formats::{self, HasseDiagram, Problem, Style};
use slt_core::{
    congruence_closure, freest_model, full_cross_batch, oracle_equiv, reduce_atomization,
    subdirect_factors, Error, Guards, Model, Redundancy,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DISAGREE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "slt", version, about = "Atomized semilattice toolkit")]
struct Cli {
    /// Seed for randomized checks.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Override every enumeration guard (maximum |C|).
    #[arg(long, global = true)]
    guard: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Structured,
}

impl From<Format> for Style {
    fn from(f: Format) -> Style {
        match f {
            Format::Text => Style::Text,
            Format::Structured => Style::Structured,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build the freest model of the assertions and answer the queries.
    Atomize {
        file: PathBuf,
        #[arg(long)]
        reduce: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Cross the assertions into a base model read from a file.
    Cross {
        file: PathBuf,
        #[arg(long)]
        base: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Compare the freest model with the congruence-closure oracle.
    Check {
        file: PathBuf,
        #[arg(long = "max-c")]
        max_c: Option<usize>,
    },
    /// List the compatible atoms, flagged R (redundant) or NR.
    Omega { file: PathBuf },
    /// Print the subdirect factors and each element's factor tuple.
    Decompose { file: PathBuf },
    /// Emit the Hasse diagram in DOT.
    Hasse {
        file: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
}

enum Failure {
    Input(String),
    Guard(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Input(_) => EXIT_INPUT,
            Failure::Guard(_) => EXIT_GUARD,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Guard(m) => m,
        }
    }
}

fn core_failure(context: &Path, e: Error) -> Failure {
    let msg = format!("{}: {e}", context.display());
    match e {
        Error::Guard { .. } | Error::MemoryGuard { .. } => Failure::Guard(msg),
        _ => Failure::Input(msg),
    }
}

type Outcome = Result<i32, Failure>;

struct Session<'a> {
    guards: Guards,
    seed: Option<u64>,
    out: &'a mut dyn Write,
}

/// Runs the command line; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
            } else {
                let _ = write!(out, "{rendered}");
            }
            return code;
        }
    };
    let guards = cli.guard.map(Guards::uniform).unwrap_or_default();
    let mut session = Session {
        guards,
        seed: cli.seed,
        out,
    };
    match session.dispatch(cli.command) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.code()
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_problem(path: &Path) -> Result<Problem, Failure> {
    let text = read(path)?;
    formats::parse_problem(&text).map_err(|e| core_failure(path, e))
}

fn pos_neg(positive: bool) -> &'static str {
    if positive {
        "POS"
    } else {
        "NEG"
    }
}

impl Session<'_> {
    fn emit(&mut self, text: &str) -> Result<(), Failure> {
        self.out
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Input(format!("write failed: {e}")))
    }

    fn dispatch(&mut self, command: Command) -> Outcome {
        match command {
            Command::Atomize {
                file,
                reduce,
                format,
            } => self.atomize(&file, reduce, format.into()),
            Command::Cross { file, base, format } => self.cross(&file, &base, format.into()),
            Command::Check { file, max_c } => self.check(&file, max_c),
            Command::Omega { file } => self.omega(&file),
            Command::Decompose { file } => self.decompose(&file),
            Command::Hasse { file, output } => self.hasse(&file, output.as_deref()),
        }
    }

    fn freest(&self, path: &Path, problem: &Problem) -> Result<Model, Failure> {
        freest_model(problem.table.clone(), &problem.assertions).map_err(|e| core_failure(path, e))
    }

    fn answer_queries(&mut self, model: &Model, problem: &Problem) -> Result<(), Failure> {
        for q in &problem.queries {
            let line = format!(
                "query {}: {}\n",
                q.display(&problem.table),
                pos_neg(model.satisfies(q))
            );
            self.emit(&line)?;
        }
        Ok(())
    }

    fn atomize(&mut self, path: &Path, reduce: bool, style: Style) -> Outcome {
        let problem = load_problem(path)?;
        let mut model = self.freest(path, &problem)?;
        if reduce {
            model = reduce_atomization(&model);
        }
        self.emit(&formats::serialize_model(&model, style))?;
        self.answer_queries(&model, &problem)?;
        Ok(EXIT_OK)
    }

    fn cross(&mut self, path: &Path, base: &Path, style: Style) -> Outcome {
        let problem = load_problem(path)?;
        let base_text = read(base)?;
        let base_model = formats::parse_model(&base_text, Some(&problem.table))
            .map_err(|e| core_failure(base, e))?;
        let model = full_cross_batch(&base_model, &problem.assertions)
            .map_err(|e| core_failure(path, e))?;
        self.emit(&formats::serialize_model(&model, style))?;
        self.answer_queries(&model, &problem)?;
        Ok(EXIT_OK)
    }

    fn check(&mut self, path: &Path, max_c: Option<usize>) -> Outcome {
        let problem = load_problem(path)?;
        let mut guards = self.guards;
        if let Some(n) = max_c {
            guards.oracle = n;
        }
        let oracle = congruence_closure(problem.table.clone(), &problem.assertions, &guards)
            .map_err(|e| core_failure(path, e))?;

        let mut runs = vec![("input order".to_owned(), problem.assertions.clone())];
        if let Some(seed) = self.seed {
            let mut shuffled = problem.assertions.clone();
            shuffled.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
            runs.push((format!("shuffled order, seed {seed}"), shuffled));
        }
        for (label, assertions) in runs {
            let model = freest_model(problem.table.clone(), &assertions)
                .map_err(|e| core_failure(path, e))?;
            let verdict =
                oracle_equiv(&model, &oracle, &guards).map_err(|e| core_failure(path, e))?;
            if let Some(ce) = verdict.counterexample {
                let line = format!(
                    "disagree ({label}): {} model {} oracle {}\n",
                    ce.duple.display(&problem.table),
                    pos_neg(ce.model_says),
                    pos_neg(ce.oracle_says)
                );
                self.emit(&line)?;
                return Ok(EXIT_DISAGREE);
            }
            let line = format!(
                "ok ({label}): {} atoms agree with congruence closure on {} term pairs\n",
                model.atoms().len(),
                verdict.pairs_checked
            );
            self.emit(&line)?;
        }
        Ok(EXIT_OK)
    }

    fn omega(&mut self, path: &Path) -> Outcome {
        let problem = load_problem(path)?;
        let model = self.freest(path, &problem)?;
        let analysis = Redundancy::new(&model, &self.guards).map_err(|e| core_failure(path, e))?;
        let mut text = String::new();
        for atom in analysis.omega() {
            let redundant = analysis
                .is_redundant(atom)
                .map_err(|e| core_failure(path, e))?;
            let flag = if redundant { "R " } else { "NR" };
            text.push_str(&format!("{flag} {}\n", atom.display(&problem.table)));
        }
        self.emit(&text)?;
        Ok(EXIT_OK)
    }

    fn decompose(&mut self, path: &Path) -> Outcome {
        let problem = load_problem(path)?;
        let model = self.freest(path, &problem)?;
        let factors = subdirect_factors(&model).map_err(|e| core_failure(path, e))?;
        let diagram = HasseDiagram::of(&model, &self.guards).map_err(|e| core_failure(path, e))?;
        let mut text = String::new();
        for (i, f) in factors.iter().enumerate() {
            text.push_str(&format!(
                "factor {i} {}\n",
                f.atom().display(&problem.table)
            ));
        }
        for term in &diagram.nodes {
            let bits: String = factors
                .iter()
                .map(|f| if f.project(term) { '1' } else { '0' })
                .collect();
            text.push_str(&format!(
                "element {} -> {bits}\n",
                term.display(&problem.table)
            ));
        }
        self.emit(&text)?;
        Ok(EXIT_OK)
    }

    fn hasse(&mut self, path: &Path, output: Option<&Path>) -> Outcome {
        let problem = load_problem(path)?;
        let model = self.freest(path, &problem)?;
        let dot = formats::hasse_dot(&model, &self.guards).map_err(|e| core_failure(path, e))?;
        match output {
            Some(target) => fs::write(target, dot)
                .map_err(|e| Failure::Input(format!("{}: {e}", target.display())))?,
            None => self.emit(&dot)?,
        }
        Ok(EXIT_OK)
    }
}
