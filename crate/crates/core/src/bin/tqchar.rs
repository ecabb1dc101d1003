use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use tqchar::cache::default_cache_dir;
use tqchar::cartan::{heights, Orientation};
use tqchar::fm::graph_of;
use tqchar::format::{
    character_to_json, character_to_text, graph_to_dot, kl_tables_to_json, multiplicity_table,
};
use tqchar::kl::{simple_qchar_t1, KLTables};
use tqchar::restrict::{branching, canonical_p, chi_t_ordinary, DominantWeight};
use tqchar::tensor::DrinfeldSpec;
use tqchar::{DynkinDiagram, Engine, Error, QCharacter, Spectral};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Parser)]
#[command(name = "tqchar", version, about = "t-analogues of q-characters for ADE quantum loop algebras")]
struct Cli {
    /// Dynkin type, e.g. A3, D4, E6
    #[arg(long = "type", short = 't', global = true)]
    diagram: Option<String>,

    #[arg(long, short = 'f', global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Directory for cached fundamental characters [default: $TQCHAR_CACHE_DIR,
    /// then the user cache directory]
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,

    /// Keep fundamental characters in memory only
    #[arg(long, global = true)]
    no_cache: bool,

    /// Abort once a computation has produced this many monomials
    #[arg(long, global = true)]
    max_monomials: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Character of the l-fundamental module at a node
    Fundamental {
        node: usize,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        step: i32,
    },
    /// Character of a standard module given by its Drinfeld polynomial,
    /// e.g. "2:1^2 1:0" or a JSON list of {node, orbit, step, mult}
    Standard { spec: String },
    /// Multiplicities of simple modules in a standard module
    Multiplicity { spec: String },
    /// Character of a simple module at t = 1
    Simple { spec: String },
    /// Branching of the restriction to the finite-type subalgebra
    Branch {
        /// Comma separated coefficients of the dominant weight
        weight: String,
        /// Arrows such as "1>2,3>2"; defaults to k>l for k<l
        #[arg(long)]
        orientation: Option<String>,
    },
    /// Coloured graph of a standard module character in DOT
    Graph { spec: String },
}

fn render_character(chi: &QCharacter, format: Format) -> tqchar::Result<String> {
    match format {
        Format::Text => character_to_text(chi),
        Format::Json => Ok(character_to_json(chi) + "\n"),
        Format::Dot => Ok(graph_to_dot(&graph_of(chi))),
    }
}

fn run(cli: Cli) -> tqchar::Result<String> {
    let diagram: DynkinDiagram = cli
        .diagram
        .as_deref()
        .ok_or_else(|| Error::Parse("missing --type".into()))?
        .parse()?;
    let mut engine = Engine::new(diagram.clone());
    if let Some(n) = cli.max_monomials {
        engine = engine.with_max_monomials(n);
    }
    if !cli.no_cache {
        if let Some(dir) = cli.cache_dir.clone().or_else(default_cache_dir) {
            engine = engine.with_cache_dir(dir);
        }
    }
    let parse_spec = |s: &str| -> tqchar::Result<DrinfeldSpec> {
        let spec = DrinfeldSpec::parse_any(s)?;
        spec.0.check_vertices(&diagram)?;
        Ok(spec)
    };

    match cli.command {
        Command::Fundamental { node, step } => {
            let chi = engine.fundamental(node, Spectral::new(0, step))?;
            render_character(&chi, cli.format)
        }
        Command::Standard { spec } => {
            let chi = engine.standard(&parse_spec(&spec)?.0)?;
            render_character(&chi, cli.format)
        }
        Command::Graph { spec } => {
            let chi = engine.standard(&parse_spec(&spec)?.0)?;
            Ok(graph_to_dot(&graph_of(&chi)))
        }
        Command::Simple { spec } => {
            let chi = simple_qchar_t1(&engine, &parse_spec(&spec)?.0)?;
            render_character(&chi, cli.format)
        }
        Command::Multiplicity { spec } => {
            let tables = KLTables::build(&engine, &parse_spec(&spec)?.0)?;
            Ok(match cli.format {
                Format::Json => kl_tables_to_json(&tables) + "\n",
                _ => multiplicity_table(&tables),
            })
        }
        Command::Branch {
            weight,
            orientation,
        } => {
            let w: DominantWeight = weight.parse()?;
            w.check(&diagram)?;
            let o = match orientation {
                Some(s) => Orientation::parse(&diagram, &s)?,
                None => Orientation::ascending(&diagram),
            };
            let h = heights(&diagram, &o);
            let top = chi_t_ordinary(&engine, &canonical_p(&w, &h))?;
            let z = branching(&engine, &h, &w)?;
            let rows: Vec<_> = top
                .dominant_weights()
                .into_iter()
                .filter_map(|w1| z.get(&w1).map(|&m| (w1, m)))
                .collect();
            Ok(match cli.format {
                Format::Json => {
                    let rows: Vec<_> = rows
                        .iter()
                        .map(|(w1, m)| {
                            serde_json::json!({
                                "weight": w1.coords(),
                                "z": m,
                                "c": top.coeff_dominant(w1),
                            })
                        })
                        .collect();
                    serde_json::to_string_pretty(&rows)? + "\n"
                }
                _ => {
                    let mut out = String::from("weight\tZ\tc(t)\n");
                    for (w1, m) in &rows {
                        writeln!(
                            out,
                            "{} ({})\t{}\t{}",
                            w1,
                            w1.lambda_notation(),
                            m,
                            top.coeff_dominant(w1)
                        )
                        .unwrap();
                    }
                    out
                }
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_internal() { 3 } else { 2 })
        }
    }
}
