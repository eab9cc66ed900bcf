//! Batch command-line front end: classify, decompose, build and verify
//! the structures provided by the `staraut` library, with JSON on stdin
//! arguments and stdout. Exit codes: 0 when all checks pass, 1 when a
//! mathematical check fails (the JSON output carries a counterexample),
//! 2 on usage or IO errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use staraut_cli::commands::{self, Bounds, CommandError};

#[derive(Parser)]
#[command(name = "staraut", version, about = "Exact computations with quadratic forms, cocycles, ribbon structures, graded duality, Chu pairs and profunctors")]
struct Cli {
    /// Also write the JSON output to this path.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Weak quadratic forms: enumerate, decompose, classify, check.
    #[command(subcommand)]
    Qf(QfCommand),
    /// Abelian 3-cocycles: check, construct from a quadratic form.
    #[command(subcommand)]
    Cocycle(CocycleCommand),
    /// Skeletal ribbon structures: build, check, enumerate, equivalence.
    #[command(subcommand)]
    Ribbon(RibbonCommand),
    /// Graded vector space identity verification.
    #[command(subcommand)]
    Gvect(GvectCommand),
    /// Chu pair identity verification.
    #[command(subcommand)]
    Chu(ChuCommand),
    /// Profunctor calculus demonstrations.
    #[command(subcommand)]
    Prof(ProfCommand),
}

#[derive(Subcommand)]
enum QfCommand {
    /// Enumerate all weak quadratic forms on a group.
    Enumerate {
        /// Group JSON: {"cyclic_orders":[n1,...]} (inline or @path).
        #[arg(long)]
        group: String,
    },
    /// Decompose a weak quadratic form as q = qtilde * eta.
    Decompose {
        /// Form JSON: {"group":..., "values":[[element, root],...]}.
        #[arg(long)]
        form: String,
    },
    /// Classify all weak quadratic forms on a group into Aut(G) orbits.
    Classify {
        #[arg(long)]
        group: String,
    },
    /// Check the weak/classical/shift-symmetry axioms of a value table.
    Check {
        #[arg(long)]
        form: String,
        /// Element JSON [k1,...]: also check q(g) = q(-g + g0).
        #[arg(long = "symmetric-wrt")]
        symmetric_wrt: Option<String>,
    },
}

#[derive(Subcommand)]
enum CocycleCommand {
    /// Check the abelian 3-cocycle conditions of a (psi, omega) pair.
    Check {
        #[arg(long)]
        group: String,
        /// Cocycle JSON: {"psi":[[g1,g2,g3,root],...], "omega":[[g1,g2,root],...]}.
        #[arg(long)]
        cocycle: String,
    },
    /// Solve for an abelian 3-cocycle with the given diagonal.
    FromQform {
        #[arg(long)]
        form: String,
    },
}

#[derive(Subcommand)]
enum RibbonCommand {
    /// Build the skeletal structure of a representable datum.
    Build {
        /// Datum JSON: {"q": form, "eta": {"images":[...]}, "g0": element}.
        #[arg(long)]
        datum: String,
    },
    /// Run the five coherence checks on a structure.
    Check {
        #[arg(long)]
        group: String,
        /// Structure JSON: {"psi":..., "omega":..., "theta":..., "g0":...}.
        #[arg(long)]
        structure: String,
    },
    /// Build the structures of all representable data on a group.
    Enumerate {
        #[arg(long)]
        group: String,
    },
    /// Search for a braided monoidal equivalence witness.
    Equivalent {
        #[arg(long)]
        group: String,
        #[arg(long)]
        first: String,
        #[arg(long)]
        second: String,
    },
}

#[derive(Subcommand)]
enum GvectCommand {
    /// Verify the graded duality identities on seeded random spaces.
    Verify {
        #[arg(long)]
        group: String,
        #[arg(long)]
        seed: u64,
        #[arg(long = "max-dim", default_value_t = 3)]
        max_dim: usize,
        #[arg(long, default_value_t = 5)]
        samples: usize,
    },
}

#[derive(Subcommand)]
enum ChuCommand {
    /// Verify the star-autonomy identities on seeded valid pairs.
    Verify {
        #[arg(long)]
        seed: u64,
        #[arg(long = "max-dim", default_value_t = 3)]
        max_dim: usize,
        #[arg(long, default_value_t = 20)]
        count: usize,
    },
}

#[derive(Subcommand)]
enum ProfCommand {
    /// Run the coend-calculus checks on a category.
    Demo {
        /// Category JSON or a builtin name: z2, z3, poset3, endo3, discrete2.
        #[arg(long)]
        category: String,
    },
}

fn dispatch(cli: &Cli) -> Result<Value, CommandError> {
    let bounds = Bounds::from_env()?;
    match &cli.command {
        Command::Qf(cmd) => match cmd {
            QfCommand::Enumerate { group } => commands::qf_enumerate(group, bounds),
            QfCommand::Decompose { form } => commands::qf_decompose(form),
            QfCommand::Classify { group } => commands::qf_classify(group, bounds),
            QfCommand::Check { form, symmetric_wrt } => {
                commands::qf_check(form, symmetric_wrt.as_deref())
            }
        },
        Command::Cocycle(cmd) => match cmd {
            CocycleCommand::Check { group, cocycle } => commands::cocycle_check(group, cocycle),
            CocycleCommand::FromQform { form } => commands::cocycle_from_qform(form),
        },
        Command::Ribbon(cmd) => match cmd {
            RibbonCommand::Build { datum } => commands::ribbon_build(datum),
            RibbonCommand::Check { group, structure } => commands::ribbon_check(group, structure),
            RibbonCommand::Enumerate { group } => commands::ribbon_enumerate(group, bounds),
            RibbonCommand::Equivalent { group, first, second } => {
                commands::ribbon_equivalent(group, first, second)
            }
        },
        Command::Gvect(GvectCommand::Verify { group, seed, max_dim, samples }) => {
            commands::gvect_verify(group, *seed, *max_dim, *samples)
        }
        Command::Chu(ChuCommand::Verify { seed, max_dim, count }) => {
            commands::chu_verify(*seed, *max_dim, *count)
        }
        Command::Prof(ProfCommand::Demo { category }) => commands::prof_demo(category),
    }
}

fn emit(out: &Option<PathBuf>, value: &Value) -> Result<(), String> {
    let text = value.to_string();
    println!("{text}");
    if let Some(path) = out {
        std::fs::write(path, text).map_err(|e| format!("cannot write '{}': {e}", path.display()))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (value, code) = match dispatch(&cli) {
        Ok(v) => (v, 0u8),
        Err(CommandError::CheckFailed(v)) => (v, 1),
        Err(CommandError::Usage(msg)) => (json!({ "error": msg }), 2),
    };
    if let Err(msg) = emit(&cli.out, &value) {
        eprintln!("{msg}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
