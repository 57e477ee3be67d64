//! Rendering of count tables: rows are the radical exponent `r`, columns
//! the vertex count `n`.

use num_bigint::BigUint;
use serde::Serialize;
use tautilt_core::error::{Error, Result};
use tautilt_core::{CountEngine, Family};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Markdown,
    Csv,
    Json,
}

#[derive(Debug, Clone)]
pub struct TableRequest {
    pub family: Family,
    pub r_max: u32,
    pub n_max: i64,
    pub format: TableFormat,
}

/// Exact cell values for `r = 1..=r_max`, `n = 1..=n_max`.
pub fn table_values(
    engine: &CountEngine,
    family: Family,
    r_max: u32,
    n_max: i64,
) -> Result<Vec<Vec<BigUint>>> {
    if r_max < 1 || n_max < 1 {
        return Err(Error::InvalidInput(format!(
            "table ranges must be nonempty: r_max={r_max}, n_max={n_max}"
        )));
    }
    (1..=r_max)
        .map(|r| (1..=n_max).map(|n| engine.count(family, r as i64, n)).collect())
        .collect()
}

#[derive(Serialize)]
struct JsonRow {
    r: u32,
    values: Vec<String>,
}

#[derive(Serialize)]
struct JsonTable {
    family: &'static str,
    n_max: i64,
    rows: Vec<JsonRow>,
}

pub fn render(engine: &CountEngine, req: &TableRequest) -> Result<String> {
    let values = table_values(engine, req.family, req.r_max, req.n_max)?;
    Ok(match req.format {
        TableFormat::Markdown => render_markdown(req, &values),
        TableFormat::Csv => render_csv(&values),
        TableFormat::Json => render_json(req, &values),
    })
}

fn render_markdown(req: &TableRequest, values: &[Vec<BigUint>]) -> String {
    let mut out = String::new();
    out.push_str(&format!("| {} r\\n |", req.family));
    for n in 1..=req.n_max {
        out.push_str(&format!(" {n} |"));
    }
    out.push('\n');
    out.push_str("| --- |");
    for _ in 1..=req.n_max {
        out.push_str(" --- |");
    }
    out.push('\n');
    for (row, r) in values.iter().zip(1..) {
        out.push_str(&format!("| {r} |"));
        for v in row {
            out.push_str(&format!(" {v} |"));
        }
        out.push('\n');
    }
    out
}

fn render_csv(values: &[Vec<BigUint>]) -> String {
    let mut out = String::new();
    for row in values {
        let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

fn render_json(req: &TableRequest, values: &[Vec<BigUint>]) -> String {
    let table = JsonTable {
        family: req.family.name(),
        n_max: req.n_max,
        rows: values
            .iter()
            .zip(1..)
            .map(|(row, r)| JsonRow {
                r,
                values: row.iter().map(|v| v.to_string()).collect(),
            })
            .collect(),
    };
    let mut text = serde_json::to_string_pretty(&table).expect("table serializes");
    text.push('\n');
    text
}

/// Data cells of a rendered markdown table, row-major, for the golden
/// comparisons.
pub fn parse_markdown_cells(rendered: &str) -> Vec<Vec<String>> {
    rendered
        .lines()
        .skip(2)
        .map(|line| {
            line.split('|')
                .map(str::trim)
                .filter(|c| !c.is_empty())
                .skip(1) // the r label
                .map(str::to_owned)
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_matches_row_layout() {
        let e = CountEngine::new();
        let req = TableRequest {
            family: Family::TLin,
            r_max: 1,
            n_max: 3,
            format: TableFormat::Csv,
        };
        assert_eq!(render(&e, &req).unwrap(), "1,1,1\n");
    }

    #[test]
    fn markdown_cells_roundtrip() {
        let e = CountEngine::new();
        let req = TableRequest {
            family: Family::TCyc,
            r_max: 2,
            n_max: 4,
            format: TableFormat::Markdown,
        };
        let cells = parse_markdown_cells(&render(&e, &req).unwrap());
        assert_eq!(cells, vec![vec!["1", "1", "1", "1"], vec!["1", "3", "4", "7"]]);
    }

    #[test]
    fn json_carries_decimal_strings() {
        let e = CountEngine::new();
        let req = TableRequest {
            family: Family::SCyc,
            r_max: 6,
            n_max: 12,
            format: TableFormat::Json,
        };
        let text = render(&e, &req).unwrap();
        let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed["rows"][5]["values"][11], "638356");
    }

    #[test]
    fn empty_ranges_are_rejected() {
        let e = CountEngine::new();
        assert!(table_values(&e, Family::TLin, 0, 5).is_err());
        assert!(table_values(&e, Family::TLin, 2, 0).is_err());
    }
}
