//! Report and table rendering: aligned text, JSON with a stable schema, and
//! flat CSV. All three are byte-deterministic for a given input.

use crate::Format;
use serde_json::{json, Map, Value};
use wcatalan_core::report::{Cell, Outcome, VerificationReport, Witness};

/// JSON schema per report:
/// `{identity, grid: [{params, pass, witness?} | {params, skipped}], summary}`.
pub fn report_json(report: &VerificationReport) -> Value {
    let grid: Vec<Value> = report.cells.iter().map(cell_json).collect();
    let summary = report.summary();
    json!({
        "identity": report.identity.tag(),
        "grid": grid,
        "summary": {
            "total": summary.total,
            "passed": summary.passed,
            "failed": summary.failed,
            "skipped": summary.skipped,
        },
    })
}

fn cell_json(cell: &Cell) -> Value {
    let mut params = Map::new();
    for (key, value) in &cell.params {
        params.insert((*key).to_string(), json!(value));
    }
    let mut obj = Map::new();
    obj.insert("params".into(), Value::Object(params));
    match &cell.outcome {
        Outcome::Pass => {
            obj.insert("pass".into(), json!(true));
        }
        Outcome::Fail(witness) => {
            obj.insert("pass".into(), json!(false));
            obj.insert("witness".into(), witness_json(witness));
        }
        Outcome::Skip(note) => {
            obj.insert("skipped".into(), json!(note));
        }
    }
    Value::Object(obj)
}

fn witness_json(witness: &Witness) -> Value {
    let mut obj = Map::new();
    obj.insert("lhs".into(), json!(witness.lhs));
    obj.insert("rhs".into(), json!(witness.rhs));
    if let Some(index) = witness.first_diff {
        obj.insert("first_diff".into(), json!(index));
    }
    if let Some(detail) = &witness.detail {
        obj.insert("detail".into(), json!(detail));
    }
    Value::Object(obj)
}

pub const CSV_HEADER: [&str; 7] = ["identity", "params", "status", "first_diff", "lhs", "rhs", "note"];

fn csv_record(identity: &str, cell: &Cell) -> [String; 7] {
    let (status, first_diff, lhs, rhs, note) = match &cell.outcome {
        Outcome::Pass => ("pass", String::new(), String::new(), String::new(), String::new()),
        Outcome::Fail(w) => (
            "fail",
            w.first_diff.map(|i| i.to_string()).unwrap_or_default(),
            w.lhs.clone(),
            w.rhs.clone(),
            w.detail.clone().unwrap_or_default(),
        ),
        Outcome::Skip(note) => ("skip", String::new(), String::new(), String::new(), note.clone()),
    };
    [
        identity.to_string(),
        cell.params_string(),
        status.to_string(),
        first_diff,
        lhs,
        rhs,
        note,
    ]
}

/// Renders one or more verification reports. JSON output is a single object
/// for a single report and an array otherwise, newline-terminated.
pub fn render_reports(reports: &[VerificationReport], format: Format) -> String {
    match format {
        Format::Json => {
            let value = if reports.len() == 1 {
                report_json(&reports[0])
            } else {
                Value::Array(reports.iter().map(report_json).collect())
            };
            let mut out = serde_json::to_string(&value).expect("reports serialize");
            out.push('\n');
            out
        }
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(Vec::new());
            writer.write_record(CSV_HEADER).expect("csv header");
            for report in reports {
                for cell in &report.cells {
                    writer
                        .write_record(csv_record(report.identity.tag(), cell))
                        .expect("csv record");
                }
            }
            String::from_utf8(writer.into_inner().expect("csv flush")).expect("csv utf8")
        }
        Format::Text => {
            let mut out = String::new();
            for (i, report) in reports.iter().enumerate() {
                if i > 0 {
                    out.push('\n');
                }
                render_text_report(report, &mut out);
            }
            if reports.len() > 1 {
                let failed: usize = reports.iter().map(|r| r.summary().failed).sum();
                let total: usize = reports.iter().map(|r| r.summary().total).sum();
                out.push_str(&format!(
                    "\noverall: {} identities, {total} cells, {failed} failed\n",
                    reports.len()
                ));
            }
            out
        }
    }
}

fn render_text_report(report: &VerificationReport, out: &mut String) {
    out.push_str(&format!("identity: {}\n", report.identity.tag()));
    let width = report
        .cells
        .iter()
        .map(|c| c.params_string().len())
        .max()
        .unwrap_or(0);
    for cell in &report.cells {
        let params = cell.params_string();
        match &cell.outcome {
            Outcome::Pass => {
                out.push_str(&format!("  {params:<width$}  pass\n"));
            }
            Outcome::Fail(w) => {
                out.push_str(&format!("  {params:<width$}  FAIL  lhs={} rhs={}", w.lhs, w.rhs));
                if let Some(index) = w.first_diff {
                    out.push_str(&format!(" first_diff={index}"));
                }
                if let Some(detail) = &w.detail {
                    out.push_str(&format!(" ({detail})"));
                }
                out.push('\n');
            }
            Outcome::Skip(note) => {
                out.push_str(&format!("  {params:<width$}  skip  {note}\n"));
            }
        }
    }
    out.push_str(&format!("  summary: {}\n", report.summary()));
}

/// One table row: `n`, the exact number, the polynomial in the stable
/// textual format.
pub struct TableRow {
    pub n: u32,
    pub number: String,
    pub poly: String,
}

pub fn render_table(w: Option<u32>, rows: &[TableRow], format: Format) -> String {
    match format {
        Format::Json => {
            let json_rows: Vec<Value> = rows
                .iter()
                .map(|r| json!({"n": r.n, "number": r.number, "poly": r.poly}))
                .collect();
            let value = match w {
                Some(w) => json!({"table": "w-catalan", "w": w, "rows": json_rows}),
                None => json!({"table": "catalan", "rows": json_rows}),
            };
            let mut out = serde_json::to_string(&value).expect("table serialize");
            out.push('\n');
            out
        }
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(Vec::new());
            writer.write_record(["n", "number", "poly"]).expect("csv header");
            for row in rows {
                writer
                    .write_record([row.n.to_string(), row.number.clone(), row.poly.clone()])
                    .expect("csv record");
            }
            String::from_utf8(writer.into_inner().expect("csv flush")).expect("csv utf8")
        }
        Format::Text => {
            let (number_label, poly_label) = match w {
                Some(w) => (format!("C_{{n,{w}}}"), format!("C_{{n,{w}}}(x)")),
                None => ("C_n".to_string(), "C_n(x)".to_string()),
            };
            let n_width = rows.iter().map(|r| r.n.to_string().len()).max().unwrap_or(1).max(1);
            let num_width = rows
                .iter()
                .map(|r| r.number.len())
                .max()
                .unwrap_or(0)
                .max(number_label.len());
            let mut out = format!("{:<n_width$}  {number_label:<num_width$}  {poly_label}\n", "n");
            for row in rows {
                out.push_str(&format!(
                    "{:<n_width$}  {:<num_width$}  {}\n",
                    row.n, row.number, row.poly
                ));
            }
            out
        }
    }
}
