use std::fs;
use std::io::{self, Read};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rigcon::explorer::{self, Crystal, ExportFormat, Property};
use rigcon::folding::{self, FoldingSpec};
use rigcon::hw::{self, HighestWeight};
use rigcon::render::{self, Style};
use rigcon::{crystal, io as rcio, star, CartanDatum, Direction, RiggedConfiguration, Structure};

#[derive(Parser)]
#[command(name = "rc", version, about = "Rigged configurations and the star crystal structure")]
struct Cli {
    /// Worker threads for enumeration and checks (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct DatumArgs {
    /// Cartan type such as `D4` or `G2`.
    #[arg(long, conflicts_with = "gcm")]
    cartan: Option<String>,
    /// Raw generalized Cartan matrix as JSON, e.g. `[[2,-2],[-2,2]]`.
    #[arg(long)]
    gcm: Option<String>,
}

#[derive(Args)]
struct InputArgs {
    #[command(flatten)]
    datum: DatumArgs,
    /// Rigged configuration as JSON or text; `-` reads stdin. Defaults to the
    /// empty configuration.
    #[arg(long)]
    input: Option<String>,
    /// Print JSON instead of the text layout.
    #[arg(long)]
    json: bool,
    /// Print partitions one below the other.
    #[arg(long, conflicts_with = "json")]
    vertical: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum StructureArg {
    Ordinary,
    Star,
    Both,
}

impl StructureArg {
    fn structures(self) -> Vec<Structure> {
        match self {
            StructureArg::Ordinary => vec![Structure::Ordinary],
            StructureArg::Star => vec![Structure::Star],
            StructureArg::Both => vec![Structure::Ordinary, Structure::Star],
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Dot,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Apply a word of operators; the first letter acts first.
    Apply {
        #[command(flatten)]
        input: InputArgs,
        /// Comma-separated node labels.
        #[arg(long, default_value = "")]
        word: String,
        #[arg(long, default_value = "ordinary")]
        structure: Structure,
        #[arg(long, default_value = "f")]
        op: Direction,
        /// Work in RC(lambda) (ordinary) or RC(lambda)* (star); fundamental
        /// weight coefficients, comma-separated.
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Apply the *-involution.
    Involute {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Print the jumps kappa_a for every node.
    Kappa {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Print epsilon, phi, their star versions, kappa and the weight.
    Stats {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Print the difference statistic tau.
    Tau {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Test membership in RC(lambda) and optionally print the image under Xi.
    Project {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        xi: bool,
    },
    /// Enumerate elements up to a depth, or all of RC(lambda).
    Enumerate {
        #[command(flatten)]
        datum: DatumArgs,
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long, value_enum, default_value = "ordinary")]
        structure: StructureArg,
        /// Print only node counts.
        #[arg(long)]
        count: bool,
    },
    /// Export a crystal graph.
    Graph {
        #[command(flatten)]
        datum: DatumArgs,
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long, value_enum, default_value = "both")]
        structure: StructureArg,
        #[arg(long, value_enum, default_value = "dot")]
        format: FormatArg,
        #[arg(long)]
        output: Option<String>,
    },
    /// Check the bicrystal axioms and invariants on every element up to a depth.
    Check {
        #[command(flatten)]
        datum: DatumArgs,
        #[arg(long, default_value_t = 4)]
        depth: usize,
        /// Comma-separated property names, `bicrystal` or `all`.
        #[arg(long, default_value = "all")]
        props: String,
        #[arg(long)]
        json_report: bool,
    },
    /// List the shipped foldings, or validate a folding file.
    Foldings {
        #[arg(long)]
        spec: Option<String>,
    },
    /// Map a configuration through a folding.
    Virtualize {
        /// Name of a shipped folding, e.g. `G2 in D4`.
        #[arg(long, conflicts_with = "spec")]
        folding: Option<String>,
        /// Folding file.
        #[arg(long)]
        spec: Option<String>,
        #[arg(long)]
        input: Option<String>,
        #[arg(long)]
        json: bool,
    },
}

fn read_source(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

impl DatumArgs {
    fn datum(&self) -> Result<Option<Arc<CartanDatum>>> {
        match (&self.cartan, &self.gcm) {
            (Some(t), _) => Ok(Some(Arc::new(CartanDatum::parse_type(t)?))),
            (None, Some(m)) => {
                let gcm: Vec<Vec<i64>> = serde_json::from_str(m).context("parsing --gcm")?;
                Ok(Some(Arc::new(CartanDatum::from_gcm(gcm)?)))
            }
            (None, None) => Ok(None),
        }
    }

    fn require(&self) -> Result<Arc<CartanDatum>> {
        self.datum()?.ok_or_else(|| anyhow!("give --cartan or --gcm"))
    }
}

impl InputArgs {
    fn load(&self) -> Result<RiggedConfiguration> {
        let datum = self.datum.datum()?;
        let Some(path) = &self.input else {
            let datum = datum.ok_or_else(|| anyhow!("give --cartan, --gcm or --input"))?;
            return Ok(RiggedConfiguration::empty(datum));
        };
        let text = read_source(path)?;
        if text.trim_start().starts_with('{') {
            return Ok(match datum {
                Some(d) => rcio::from_json_with(&text, d)?,
                None => rcio::from_json(&text)?,
            });
        }
        let datum = datum.ok_or_else(|| anyhow!("text input needs --cartan or --gcm"))?;
        Ok(render::parse_text(&text, datum)?)
    }

    fn show(&self, rc: &RiggedConfiguration) -> String {
        if self.json {
            rcio::to_json(rc)
        } else if self.vertical {
            render::render(rc, Style::Vertical)
        } else {
            render::render(rc, Style::Horizontal)
        }
    }
}

fn parse_list<T: std::str::FromStr>(text: &str) -> Result<Vec<T>>
where
    T::Err: std::fmt::Display,
{
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<T>().map_err(|e| anyhow!("`{s}`: {e}")))
        .collect()
}

fn highest_weight(datum: &Arc<CartanDatum>, lambda: &str) -> Result<HighestWeight> {
    Ok(HighestWeight::from_coefficients(datum.clone(), parse_list(lambda)?)?)
}

fn fmt_list(values: impl IntoIterator<Item = i64>) -> String {
    let items: Vec<String> = values.into_iter().map(|v| v.to_string()).collect();
    format!("[{}]", items.join(", "))
}

fn crystal_for(datum: Arc<CartanDatum>, lambda: Option<&str>, structures: &[Structure]) -> Result<Crystal> {
    Ok(match lambda {
        None => Crystal::Infinity(datum),
        Some(l) => {
            let ctx = highest_weight(&datum, l)?;
            match structures {
                [Structure::Star] => Crystal::LambdaStar(ctx),
                [Structure::Ordinary] => Crystal::Lambda(ctx),
                _ => bail!("with --lambda choose --structure ordinary or star"),
            }
        }
    })
}

fn apply(
    rc: &RiggedConfiguration,
    word: &[usize],
    structure: Structure,
    direction: Direction,
    ctx: Option<&HighestWeight>,
) -> Result<Option<RiggedConfiguration>> {
    let Some(ctx) = ctx else {
        return Ok(crystal::apply_word(rc, word, structure, direction)?);
    };
    for &a in word {
        rc.datum().index(a)?;
    }
    let mut cur = rc.clone();
    for &a in word {
        let next = match (structure, direction) {
            (Structure::Ordinary, Direction::F) => hw::f_lambda(&cur, ctx, a)?,
            (Structure::Ordinary, Direction::E) => hw::e_lambda(&cur, ctx, a)?,
            (Structure::Star, Direction::F) => hw::f_star_lambda(&cur, ctx, a),
            (Structure::Star, Direction::E) => hw::e_star_lambda(&cur, ctx, a),
        };
        match next {
            Some(x) => cur = x,
            None => return Ok(None),
        }
    }
    Ok(Some(cur))
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Apply {
            input,
            word,
            structure,
            op,
            lambda,
        } => {
            let rc = input.load()?;
            let ctx = lambda.map(|l| highest_weight(rc.datum(), &l)).transpose()?;
            let word: Vec<usize> = parse_list(&word)?;
            match apply(&rc, &word, structure, op, ctx.as_ref())? {
                Some(x) => println!("{}", input.show(&x)),
                None => println!("0"),
            }
        }
        Command::Involute { input } => {
            let rc = input.load()?;
            println!("{}", input.show(&star::involute(&rc)));
        }
        Command::Kappa { input } => {
            let rc = input.load()?;
            println!("{}", fmt_list(rc.datum().nodes().map(|a| star::kappa(&rc, a))));
        }
        Command::Stats { input } => {
            let rc = input.load()?;
            let nodes = || rc.datum().nodes();
            let rows = [
                ("epsilon", fmt_list(nodes().map(|a| crystal::epsilon(&rc, a)))),
                ("phi", fmt_list(nodes().map(|a| crystal::phi(&rc, a)))),
                ("epsilon*", fmt_list(nodes().map(|a| star::epsilon_star(&rc, a)))),
                ("phi*", fmt_list(nodes().map(|a| star::phi_star(&rc, a)))),
                ("kappa", fmt_list(nodes().map(|a| star::kappa(&rc, a)))),
                ("weight", rc.weight().to_string()),
            ];
            for (name, value) in rows {
                println!("{name:<9}{value}");
            }
        }
        Command::Tau { input } => {
            let rc = input.load()?;
            println!("{}", fmt_list(hw::tau(&rc).lambda_part));
        }
        Command::Project { input, lambda, xi } => {
            let rc = input.load()?;
            let ctx = highest_weight(rc.datum(), &lambda)?;
            let inside = hw::in_rc_lambda(&rc, &ctx);
            println!("in RC(lambda): {inside}");
            println!("tau: {}", fmt_list(hw::tau(&rc).lambda_part));
            if inside {
                println!("weight: {}", hw::weight_lambda(&rc, &ctx));
                if xi {
                    println!("{}", input.show(&hw::xi(&rc, &ctx)?));
                }
            }
        }
        Command::Enumerate {
            datum,
            depth,
            lambda,
            structure,
            count,
        } => {
            let structures = structure.structures();
            let crystal = crystal_for(datum.require()?, lambda.as_deref(), &structures)?;
            if lambda.is_none() && depth.is_none() {
                bail!("RC(infinity) is infinite; give --depth");
            }
            let graph = explorer::bfs(&crystal, &structures, depth);
            if count {
                println!("{}", explorer::summary(&graph));
            } else {
                for (id, x) in graph.nodes().iter().enumerate() {
                    println!("# {id} depth {}\n{x}\n", graph.depth(id));
                }
            }
        }
        Command::Graph {
            datum,
            depth,
            lambda,
            structure,
            format,
            output,
        } => {
            let structures = structure.structures();
            let crystal = crystal_for(datum.require()?, lambda.as_deref(), &structures)?;
            if lambda.is_none() && depth.is_none() {
                bail!("RC(infinity) is infinite; give --depth");
            }
            let graph = explorer::bfs(&crystal, &structures, depth);
            let format = match format {
                FormatArg::Dot => ExportFormat::Dot,
                FormatArg::Json => ExportFormat::Json,
            };
            let text = explorer::export(&graph, format);
            match output {
                Some(path) => fs::write(&path, text).with_context(|| format!("writing {path}"))?,
                None => print!("{text}"),
            }
        }
        Command::Check {
            datum,
            depth,
            props,
            json_report,
        } => {
            let datum = datum.require()?;
            let props = Property::parse_list(&props).map_err(|e| anyhow!(e))?;
            let report = explorer::check(&datum, depth, &props);
            if json_report {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                println!(
                    "{} elements of {} up to depth {}",
                    report.elements, report.cartan, depth
                );
                for r in &report.results {
                    let status = if r.failed == 0 { "ok" } else { "FAIL" };
                    println!(
                        "{:<12} {status:<4} {} passed, {} failed",
                        r.property.name(),
                        r.passed,
                        r.failed
                    );
                    if let Some(c) = &r.counterexample {
                        println!("    {} at [{}]: {}", c.detail, c.word.join(" "), c.element);
                    }
                }
            }
            if !report.all_passed() {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Foldings { spec } => match spec {
            Some(path) => {
                let f = folding::validate_folding(&FoldingSpec::from_json(&read_source(&path)?)?)?;
                println!("valid: {} -> {}", f.source(), f.target());
            }
            None => {
                for f in folding::builtin_foldings()? {
                    let gamma = fmt_list(f.source().nodes().map(|a| f.gamma(a)));
                    println!("{:<10} {} -> {} gamma {gamma}", f.name(), f.source(), f.target());
                }
            }
        },
        Command::Virtualize {
            folding: name,
            spec,
            input,
            json,
        } => {
            let f = match (name, spec) {
                (Some(n), _) => folding::builtin_folding(&n)?.ok_or_else(|| anyhow!("no shipped folding `{n}`"))?,
                (None, Some(path)) => folding::validate_folding(&FoldingSpec::from_json(&read_source(&path)?)?)?,
                (None, None) => bail!("give --folding or --spec"),
            };
            let rc = match input {
                Some(path) => {
                    let text = read_source(&path)?;
                    if text.trim_start().starts_with('{') {
                        rcio::from_json_with(&text, f.source().clone())?
                    } else {
                        render::parse_text(&text, f.source().clone())?
                    }
                }
                None => RiggedConfiguration::empty(f.source().clone()),
            };
            let image = folding::virtualize(&rc, &f)?;
            if json {
                println!("{}", rcio::to_json(&image));
            } else {
                println!("{image}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::FAILURE;
        }
    }
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
