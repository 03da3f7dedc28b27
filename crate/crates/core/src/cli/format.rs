use serde_json::Value;

use super::run::Report;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Table,
}

const COLUMNS: [&str; 6] = ["id", "type", "status", "exact", "decimal", "note"];

/// One line per job; `table7` and bordism jobs expand into sub-rows.
fn rows(report: &Report) -> Vec<[String; 6]> {
    let mut out = Vec::new();
    for r in &report.records {
        let note = match (&r.error, &r.details) {
            (Some(e), _) => e.message.clone(),
            (None, Some(d)) if r.job_type == "bordism" => matrix_note(&d["matrix"]),
            _ => String::new(),
        };
        out.push([
            r.id.clone(),
            r.job_type.to_string(),
            r.status.to_string(),
            r.exact.clone().unwrap_or_default(),
            r.decimal.clone().unwrap_or_default(),
            note,
        ]);
        if r.job_type == "table7" {
            if let Some(Value::Array(sub)) = r.details.as_ref().map(|d| &d["rows"]) {
                for row in sub {
                    let s = |k: &str| row[k].as_str().unwrap_or_default().to_string();
                    out.push([
                        format!("{}/{}", r.id, s("label")),
                        s("route"),
                        s("status"),
                        s("computed"),
                        String::new(),
                        format!("expected {} = {}", s("expected_form"), s("expected")),
                    ]);
                }
            }
        }
    }
    out
}

/// `[["1/2","0"],["0","1"]]` as `[[1/2, 0], [0, 1]]`.
fn matrix_note(m: &Value) -> String {
    let row = |r: &Value| {
        let cells: Vec<&str> = r.as_array().into_iter().flatten().filter_map(Value::as_str).collect();
        format!("[{}]", cells.join(", "))
    };
    let rows: Vec<String> = m.as_array().into_iter().flatten().map(row).collect();
    format!("[{}]", rows.join(", "))
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(report).expect("report serializes") + "\n",
        Format::Csv => {
            let mut s = COLUMNS.join(",") + "\n";
            for row in rows(report) {
                s += &row.iter().map(|f| csv_field(f)).collect::<Vec<_>>().join(",");
                s.push('\n');
            }
            s
        }
        Format::Table => {
            let body = rows(report);
            let mut widths: Vec<usize> = COLUMNS.iter().map(|c| c.chars().count()).collect();
            // The last column is left unpadded.
            for row in &body {
                for (w, f) in widths.iter_mut().zip(&row[..COLUMNS.len() - 1]) {
                    *w = (*w).max(f.chars().count());
                }
            }
            let line = |fields: Vec<&str>| {
                let cells: Vec<String> = fields
                    .iter()
                    .zip(&widths)
                    .map(|(f, w)| format!("{f}{}", " ".repeat(w.saturating_sub(f.chars().count()))))
                    .collect();
                cells.join("  ").trim_end().to_string() + "\n"
            };
            let mut s = line(COLUMNS.to_vec());
            s += &line(widths.iter().map(|&w| "-".repeat(w)).collect::<Vec<_>>().iter().map(String::as_str).collect());
            for row in &body {
                s += &line(row.iter().map(String::as_str).collect());
            }
            s
        }
    }
}
