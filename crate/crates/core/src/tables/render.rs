use std::fmt::Write;

use super::{ParamNote, TableRow};
use crate::classify::CurveKind;
use crate::params::TubularRow;

fn weights(w: &[u32]) -> String {
    let parts: Vec<String> = w.iter().map(u32::to_string).collect();
    format!("({})", parts.join(","))
}

fn subgroup_cell(row: &TableRow) -> String {
    let h = row.subgroup();
    if h.is_whole_torsion() {
        return "tL".to_string();
    }
    let gens: Vec<String> = h.generators().iter().map(ToString::to_string).collect();
    format!("<{}>", gens.join(", "))
}

fn curve_cell(row: &TableRow) -> String {
    let q = row.quotient().reduced_weights();
    let mut cell = match row.kind() {
        CurveKind::WplDomestic | CurveKind::WplTubular | CurveKind::WplWild => {
            format!("P1{}", weights(q))
        }
        CurveKind::SmoothElliptic => "E".to_string(),
        CurveKind::WeightedElliptic | CurveKind::HigherGenus(_) if q.is_empty() => "Y".to_string(),
        CurveKind::WeightedElliptic | CurveKind::HigherGenus(_) => format!("Y{}", weights(q)),
    };
    if let Some(note) = row.param_note() {
        let mu = match note {
            ParamNote::Lambda(TubularRow::Triple | TubularRow::Omega) => "gamma(lambda)".to_string(),
            ParamNote::Lambda(r) => format!("gamma(transform[{r}](lambda))"),
            ParamNote::MinusOne => "gamma(-1)".to_string(),
            ParamNote::Omega => "gamma(omega)".to_string(),
        };
        let _ = write!(cell, "; mu in {mu}");
    }
    cell
}

/// Markdown table with columns weights | H | Y | genus.
pub fn render_markdown(rows: &[TableRow]) -> String {
    let mut out = String::from("| weights | H | Y | genus |\n|---|---|---|---|\n");
    for row in rows {
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} |",
            weights(row.source_weights().weights()),
            subgroup_cell(row),
            curve_cell(row),
            row.quotient().genus()
        );
    }
    out
}

pub fn render_json(rows: &[TableRow]) -> String {
    serde_json::to_string_pretty(rows).expect("rows serialize")
}
