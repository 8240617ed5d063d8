//! `wpc`: command-line access to the quotient computations in `wpc-core`.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use wpc_core::classify::{curve_kind, wpl_type};
use wpc_core::exactnum::{QuadField, Rational, Scalar};
use wpc_core::expr::parse_generators;
use wpc_core::lgroup::{enumerate_subgroups, Subgroup, SubgroupSpec, WeightType, DEFAULT_TORSION_BOUND};
use wpc_core::params::{gamma_orbit, j_invariant, transformed_parameter, TubularRow};
use wpc_core::quotient::{hyperelliptic_subgroup, quotient_curve};
use wpc_core::tables::{
    render_json, render_markdown, smooth_genus_search, table_arnold, table_domestic, table_genus2, table_tubular,
};
use wpc_core::tube::{tube_quotient, TubeAction};
use wpc_core::{Error, Execution};

#[derive(Parser)]
#[command(name = "wpc", version, about = "Quotients of weighted projective lines by finite string-group actions")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Largest torsion group order that enumeration commands accept.
    #[arg(long, global = true, default_value_t = DEFAULT_TORSION_BOUND)]
    bound: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Markdown,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableName {
    Domestic,
    Tubular,
    Genus2,
    Arnold,
}

#[derive(Subcommand)]
enum Command {
    /// Genus and weights of the quotient by a subgroup.
    Quotient {
        #[arg(long, value_parser = parse_weights, allow_hyphen_values = true)]
        weights: Weights,
        /// Comma-separated generators, `tL`, or `{"generators": [...]}`.
        #[arg(long, allow_hyphen_values = true)]
        subgroup: String,
    },
    /// Order, generators and elements of the torsion group.
    Torsion {
        #[arg(long, value_parser = parse_weights, allow_hyphen_values = true)]
        weights: Weights,
    },
    /// Every subgroup of the torsion group with its quotient.
    Subgroups {
        #[arg(long, value_parser = parse_weights, allow_hyphen_values = true)]
        weights: Weights,
    },
    /// Domestic, tubular or wild; with a subgroup, also the kind of the quotient.
    Classify {
        #[arg(long, value_parser = parse_weights, allow_hyphen_values = true)]
        weights: Weights,
        #[arg(long, allow_hyphen_values = true)]
        subgroup: Option<String>,
    },
    /// Regenerate one of the classification tables.
    Table {
        #[arg(value_enum)]
        name: TableName,
        /// Largest family parameter n for the domestic table.
        #[arg(long, default_value_t = 6)]
        n_max: u32,
        /// Largest coprime pair entry for the two-point domestic family.
        #[arg(long, default_value_t = 4)]
        k_params: u32,
    },
    /// The subgroup of (2,...,2) with a hyperelliptic quotient of genus g.
    Hyperelliptic {
        #[arg(long)]
        genus: u64,
    },
    /// Decomposition of a tube of rank p under a group of order n acting through tau^k.
    Tube {
        #[arg(long)]
        rank: u64,
        #[arg(long)]
        order: u64,
        #[arg(long)]
        k: u64,
    },
    /// j-invariant of a parameter (a rational or `omega`).
    Jinv {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Orbit of a parameter under the cross-ratio group.
    Gamma {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Parameter of a quotient of P1(2,2,2,2; lambda).
    Transform {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// x1-x2, x1-x3, x1-x4, triple or omega.
        #[arg(long)]
        row: String,
    },
    /// All classes with a smooth quotient of the given genus (unvalidated beyond genus 2).
    Search {
        #[arg(long)]
        genus: u64,
        /// Widen every search bound by this much.
        #[arg(long, default_value_t = 0)]
        slack: u32,
    },
}

/// A `--weights 2,3,4` list, validated by the library rather than by clap.
#[derive(Clone)]
struct Weights(Vec<i64>);

fn parse_weights(s: &str) -> Result<Weights, String> {
    s.split(',')
        .map(str::trim)
        .filter(|w| !w.is_empty())
        .map(|w| w.parse::<i64>().map_err(|e| format!("{w:?}: {e}")))
        .collect::<Result<_, _>>()
        .map(Weights)
}

fn weight_type(w: &Weights) -> Result<WeightType, Error> {
    WeightType::new(w.0.iter().copied())
}

fn subgroup(p: &WeightType, text: &str, bound: u64) -> Result<Subgroup, Error> {
    let text = text.trim();
    if text.eq_ignore_ascii_case("tl") {
        check_bound(p, bound)?;
        return Ok(Subgroup::whole_torsion(p));
    }
    let gens = if text.starts_with('{') {
        let spec: SubgroupSpec = serde_json::from_str(text).map_err(|e| Error::Syntax {
            pos: e.column().saturating_sub(1),
            message: e.to_string(),
        })?;
        parse_generators(&spec.generators.join(","), p)?
    } else if text.is_empty() {
        Vec::new()
    } else {
        parse_generators(text, p)?
    };
    Subgroup::generate(p, &gens)
}

fn parameter(text: &str) -> Result<Scalar, Error> {
    if text.trim().eq_ignore_ascii_case("omega") {
        return Ok(Scalar::from_quad(QuadField::omega().generator()));
    }
    Ok(Scalar::Rational(text.trim().parse::<Rational>()?))
}

fn rational_parameter(text: &str) -> Result<Rational, Error> {
    text.trim().parse()
}

fn check_bound(p: &WeightType, bound: u64) -> Result<(), Error> {
    let order = p.torsion_order();
    if order > bound {
        return Err(Error::TorsionTooLarge { order, bound });
    }
    Ok(())
}

/// Output of a command: JSON, plus a Markdown rendering when the command has
/// one of its own.
struct Output {
    json: Value,
    markdown: Option<String>,
}

impl From<Value> for Output {
    fn from(json: Value) -> Self {
        Output { json, markdown: None }
    }
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Two-column Markdown for a JSON object.
fn field_table(v: &Value) -> String {
    let mut out = String::from("| field | value |\n|---|---|\n");
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                let _ = writeln!(out, "| {k} | {} |", cell(x));
            }
        }
        other => {
            let _ = writeln!(out, "| value | {} |", cell(other));
        }
    }
    out
}

fn run(cli: &Cli) -> Result<Output, Error> {
    let exec = Execution::from_env();
    Ok(match &cli.command {
        Command::Quotient { weights, subgroup: s } => {
            let p = weight_type(weights)?;
            let h = subgroup(&p, s, cli.bound)?;
            to_value(&quotient_curve(&p, &h)?).into()
        }
        Command::Torsion { weights } => {
            let p = weight_type(weights)?;
            check_bound(&p, cli.bound)?;
            json!({
                "weights": p,
                "order": p.torsion_order(),
                "lcm": p.lcm(),
                "generators": p.torsion_generators(),
                "elements": p.torsion_elements(),
            })
            .into()
        }
        Command::Subgroups { weights } => {
            let p = weight_type(weights)?;
            let mut rows = Vec::new();
            let mut md = String::from("| order | H | Y | genus |\n|---|---|---|---|\n");
            for h in enumerate_subgroups(&p, cli.bound)? {
                let h = h.with_small_generators();
                let y = quotient_curve(&p, &h)?;
                let gens: Vec<String> = h.generators().iter().map(ToString::to_string).collect();
                let _ = writeln!(
                    md,
                    "| {} | <{}> | {:?} | {} |",
                    h.order(),
                    gens.join(", "),
                    y.reduced_weights(),
                    y.genus()
                );
                rows.push(json!({ "subgroup": h, "quotient": y, "kind": curve_kind(&y) }));
            }
            Output {
                json: Value::Array(rows),
                markdown: Some(md),
            }
        }
        Command::Classify { weights, subgroup: s } => {
            let p = weight_type(weights)?;
            let mut v = json!({ "type": wpl_type(&p) });
            if let Some(s) = s {
                let y = quotient_curve(&p, &subgroup(&p, s, cli.bound)?)?;
                v["quotient_kind"] = to_value(&curve_kind(&y));
            }
            v.into()
        }
        Command::Table { name, n_max, k_params } => {
            let rows = match name {
                TableName::Domestic => table_domestic(*n_max, *k_params, exec)?,
                TableName::Tubular => table_tubular(exec)?,
                TableName::Genus2 => table_genus2(exec)?,
                TableName::Arnold => table_arnold(exec)?,
            };
            Output {
                json: serde_json::from_str(&render_json(&rows)).expect("valid JSON"),
                markdown: Some(render_markdown(&rows)),
            }
        }
        Command::Hyperelliptic { genus } => {
            let (p, h) = hyperelliptic_subgroup(*genus)?;
            let y = quotient_curve(&p, &h)?;
            json!({ "weights": p, "subgroup": h, "quotient": y }).into()
        }
        Command::Tube { rank, order, k } => {
            let a = TubeAction::new(*rank, *order, *k)?;
            to_value(&tube_quotient(&a)).into()
        }
        Command::Jinv { lambda } => json!({ "j": j_invariant(&parameter(lambda)?)? }).into(),
        Command::Gamma { lambda } => to_value(&gamma_orbit(&parameter(lambda)?)?).into(),
        Command::Transform { lambda, row } => {
            let row: TubularRow = row.parse()?;
            let mu = transformed_parameter(row, &rational_parameter(lambda)?)?;
            let orbit = gamma_orbit(&mu)?;
            json!({ "row": row, "mu": mu, "orbit": orbit }).into()
        }
        Command::Search { genus, slack } => {
            let found = smooth_genus_search(*genus, *slack, exec)?;
            Output {
                json: to_value(&found),
                markdown: Some(render_markdown(&found.rows)),
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            match (cli.format, out.markdown) {
                (Format::Markdown, Some(md)) => print!("{md}"),
                (Format::Markdown, None) => print!("{}", field_table(&out.json)),
                (Format::Json, _) => {
                    println!("{}", serde_json::to_string_pretty(&out.json).expect("valid JSON"))
                }
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            let body = json!({ "error": e.kind(), "message": e.to_string() });
            eprintln!("{body}");
            ExitCode::from(1)
        }
    }
}
