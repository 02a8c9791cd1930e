use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use wfs_cli::commands::{run, CliError, Command, ModelArgs, Settings};
use wfs_cli::dsl;
use wfs_cli::workspace::Workspace;
use wfs_core::Bounds;

/// Lifting properties, cylinders and homotopy on finite graphs, preorders
/// and small categories.
#[derive(Debug, Parser)]
#[command(name = "wfs", version)]
struct Cli {
    /// Workspace file with named objects, maps, cylinders and generator sets.
    #[arg(short, long, global = true)]
    workspace: Option<PathBuf>,

    /// Extra declarations, parsed after the workspace file. Repeatable.
    #[arg(short = 'e', long = "define", global = true)]
    define: Vec<String>,

    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,

    /// Depth of the generator levels for fibrancy and weak equivalences.
    #[arg(long, env = "WFS_DEPTH", default_value_t = 2, global = true)]
    depth: usize,

    /// Maximum number of cells attached by the small object argument.
    #[arg(long, env = "WFS_MAX_CELLS", default_value_t = Bounds::default().max_steps, global = true)]
    max_cells: usize,

    /// Maximum number of squares or candidate maps any single search visits.
    #[arg(long, env = "WFS_SEARCH_CAP", default_value_t = Bounds::default().square_cap, global = true)]
    search_cap: u64,

    /// Seed for sampled claims in the example suites.
    #[arg(long, env = "WFS_SEED", default_value_t = Settings::default().seed, global = true)]
    seed: u64,

    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Args)]
struct Model {
    /// Cylinder to use; defaults to the only one declared.
    #[arg(long)]
    cylinder: Option<String>,
    /// Generating cofibrations; defaults to the only genset declared.
    #[arg(long)]
    genset: Option<String>,
    /// Extra generating trivial cofibrations.
    #[arg(long)]
    s: Option<String>,
    /// Known trivial cofibrations added to the truncated generator levels.
    #[arg(long)]
    augment: Option<String>,
}

impl From<Model> for ModelArgs {
    fn from(m: Model) -> Self {
        ModelArgs {
            cylinder: m.cylinder,
            genset: m.genset,
            s: m.s,
            augment: m.augment,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Decide whether the square (top, bottom) from LEFT to RIGHT has a
    /// diagonal, or check a proposed one.
    Lift {
        left: String,
        right: String,
        top: String,
        bottom: String,
        #[arg(long)]
        diagonal: Option<String>,
    },
    /// Does MAP have the right lifting property against a generator set?
    Rlp {
        map: String,
        #[arg(long)]
        genset: Option<String>,
    },
    /// Does MAP lie in the left class of the right class of a generator set?
    Llp {
        map: String,
        #[arg(long)]
        genset: Option<String>,
    },
    /// Small object argument factorization of MAP.
    Factor {
        map: String,
        #[arg(long)]
        genset: Option<String>,
    },
    /// Pushout-product of MAP with an endpoint (with --k) or the boundary.
    Star {
        map: String,
        #[arg(long)]
        cylinder: Option<String>,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Pullback-hom of MAP with the boundary (relational structures only).
    Costar {
        map: String,
        #[arg(long)]
        cylinder: Option<String>,
    },
    /// Generator levels for fibrations.
    Lambda {
        #[arg(long)]
        cylinder: Option<String>,
        #[arg(long)]
        genset: Option<String>,
        #[arg(long)]
        s: Option<String>,
    },
    /// Is OBJECT fibrant?
    Fibrant {
        object: String,
        #[command(flatten)]
        model: Model,
    },
    /// Are F and G homotopic?
    Homotopic {
        f: String,
        g: String,
        #[arg(long)]
        cylinder: Option<String>,
    },
    /// Is MAP a homotopy equivalence?
    Heq {
        map: String,
        #[arg(long)]
        cylinder: Option<String>,
    },
    /// Is MAP a weak equivalence?
    Weq {
        map: String,
        #[command(flatten)]
        model: Model,
    },
    /// Connected components of an object, or the induced map of a map.
    Pi0 { name: String },
    /// Pushout of the span F, G out of a common source.
    Pushout { f: String, g: String },
    /// Check that the pushout-products of the generators with the endpoints
    /// and boundary stay cofibrations.
    CheckCartesian {
        #[arg(long)]
        cylinder: Option<String>,
        #[arg(long)]
        genset: Option<String>,
    },
    /// Run a named example suite, or a single claim as SUITE-CLAIM.
    CheckExample { name: String },
}

impl From<Cmd> for Command {
    fn from(c: Cmd) -> Self {
        match c {
            Cmd::Lift {
                left,
                right,
                top,
                bottom,
                diagonal,
            } => Command::Lift {
                left,
                right,
                top,
                bottom,
                diagonal,
            },
            Cmd::Rlp { map, genset } => Command::Rlp { map, genset },
            Cmd::Llp { map, genset } => Command::Llp { map, genset },
            Cmd::Factor { map, genset } => Command::Factor { map, genset },
            Cmd::Star { map, cylinder, k } => Command::Star { map, cylinder, k },
            Cmd::Costar { map, cylinder } => Command::Costar { map, cylinder },
            Cmd::Lambda { cylinder, genset, s } => Command::Lambda { cylinder, genset, s },
            Cmd::Fibrant { object, model } => Command::Fibrant {
                object,
                model: model.into(),
            },
            Cmd::Homotopic { f, g, cylinder } => Command::Homotopic { f, g, cylinder },
            Cmd::Heq { map, cylinder } => Command::Heq { map, cylinder },
            Cmd::Weq { map, model } => Command::Weq {
                map,
                model: model.into(),
            },
            Cmd::Pi0 { name } => Command::Pi0 { name },
            Cmd::Pushout { f, g } => Command::Pushout { f, g },
            Cmd::CheckCartesian { cylinder, genset } => Command::CheckCartesian { cylinder, genset },
            Cmd::CheckExample { name } => Command::CheckExample { name },
        }
    }
}

fn load(cli: &Cli) -> Result<Workspace, CliError> {
    let mut ws = match &cli.workspace {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
            dsl::parse_document(&text).map_err(|e| CliError::Usage(format!("{}:{e}", path.display())))?
        }
        None => Workspace::new(),
    };
    for text in &cli.define {
        ws = dsl::extend(&ws, text).map_err(|e| CliError::Usage(format!("--define:{e}")))?;
    }
    Ok(ws)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let settings = Settings {
        depth: cli.depth,
        bounds: Bounds {
            square_cap: cli.search_cap,
            max_steps: cli.max_cells,
        },
        seed: cli.seed,
    };
    let format = cli.format;
    let outcome = load(&cli).and_then(|ws| run(&ws, &Command::from(cli.command), settings));
    match outcome {
        Ok(report) => {
            match format {
                Format::Json => println!("{}", report.to_json()),
                Format::Text => print!("{}", report.to_text()),
            }
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
