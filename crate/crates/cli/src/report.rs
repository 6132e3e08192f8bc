use std::io::Write;

use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
    Jsonl,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Success,
    /// A mismatch, failed check or counterexample.
    Failure,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Success => 0,
            Status::Failure => 1,
        }
    }
}

/// One output row: a JSON object for the machine formats and preformatted
/// cells for the table.
#[derive(Clone, Debug)]
pub struct Record {
    pub json: Map<String, Value>,
    pub cells: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub command: String,
    pub params: Map<String, Value>,
    pub summary: Map<String, Value>,
    pub columns: Vec<String>,
    pub records: Vec<Record>,
    pub status: Status,
}

impl Report {
    pub fn new(command: &str, columns: &[&str]) -> Self {
        Report {
            command: command.to_string(),
            params: Map::new(),
            summary: Map::new(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            records: Vec::new(),
            status: Status::Success,
        }
    }

    pub fn param(&mut self, key: &str, value: impl Into<Value>) {
        self.params.insert(key.to_string(), value.into());
    }

    pub fn summarize(&mut self, key: &str, value: impl Into<Value>) {
        self.summary.insert(key.to_string(), value.into());
    }

    pub fn push(&mut self, json: Map<String, Value>, cells: Vec<String>) {
        debug_assert_eq!(cells.len(), self.columns.len());
        self.records.push(Record { json, cells });
    }

    pub fn fail(&mut self) {
        self.status = Status::Failure;
    }

    fn status_str(&self) -> &'static str {
        match self.status {
            Status::Success => "success",
            Status::Failure => "failure",
        }
    }

    pub fn to_json(&self) -> Value {
        let mut top = Map::new();
        top.insert("command".into(), self.command.clone().into());
        top.insert("params".into(), Value::Object(self.params.clone()));
        top.insert("status".into(), self.status_str().into());
        top.insert("summary".into(), Value::Object(self.summary.clone()));
        top.insert(
            "records".into(),
            Value::Array(
                self.records
                    .iter()
                    .map(|r| Value::Object(r.json.clone()))
                    .collect(),
            ),
        );
        Value::Object(top)
    }

    /// Writes the report to `out`. In `jsonl` mode only the records go to
    /// `out`; the summary line goes to `side`.
    pub fn render(
        &self,
        format: Format,
        out: &mut dyn Write,
        side: &mut dyn Write,
    ) -> std::io::Result<()> {
        match format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, &self.to_json())?;
                writeln!(out)
            }
            Format::Jsonl => {
                for r in &self.records {
                    serde_json::to_writer(&mut *out, &r.json)?;
                    writeln!(out)?;
                }
                let mut tail = Map::new();
                tail.insert("status".into(), self.status_str().into());
                tail.insert("summary".into(), Value::Object(self.summary.clone()));
                serde_json::to_writer(&mut *side, &tail)?;
                writeln!(side)
            }
            Format::Csv => self.render_csv(out),
            Format::Table => self.render_table(out),
        }
    }

    fn render_csv(&self, out: &mut dyn Write) -> std::io::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let keys: Vec<String> = match self.records.first() {
            Some(r) => r.json.keys().cloned().collect(),
            None => Vec::new(),
        };
        if keys.is_empty() {
            return Ok(());
        }
        w.write_record(&keys)?;
        for r in &self.records {
            w.write_record(keys.iter().map(|k| match r.json.get(k) {
                Some(Value::String(s)) => s.clone(),
                Some(v) => v.to_string(),
                None => String::new(),
            }))?;
        }
        w.flush()
    }

    fn render_table(&self, out: &mut dyn Write) -> std::io::Result<()> {
        let params: Vec<String> = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={}", plain(v)))
            .collect();
        writeln!(out, "{} {}", self.command, params.join(" "))?;
        for (k, v) in &self.summary {
            writeln!(out, "  {k}: {}", plain(v))?;
        }
        writeln!(out, "  status: {}", self.status_str())?;
        if self.records.is_empty() {
            return Ok(());
        }
        writeln!(out)?;
        let mut widths: Vec<usize> = self.columns.iter().map(|c| c.chars().count()).collect();
        for r in &self.records {
            for (w, c) in widths.iter_mut().zip(&r.cells) {
                *w = (*w).max(c.chars().count());
            }
        }
        let line = |cells: &[String]| {
            let padded: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect();
            padded.join("  ").trim_end().to_string()
        };
        writeln!(out, "{}", line(&self.columns))?;
        for r in &self.records {
            writeln!(out, "{}", line(&r.cells))?;
        }
        Ok(())
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn sample() -> Report {
        let mut r = Report::new("demo", &["k", "value"]);
        r.param("n", 3);
        r.summarize("total", "6·h(3)");
        let mut m = Map::new();
        m.insert("partition".into(), json!([3]));
        m.insert("coeff".into(), json!("6/1"));
        r.push(m, vec!["(3)".into(), "6".into()]);
        r
    }

    fn rendered(r: &Report, f: Format) -> (String, String) {
        let (mut out, mut side) = (Vec::new(), Vec::new());
        r.render(f, &mut out, &mut side).unwrap();
        (
            String::from_utf8(out).unwrap(),
            String::from_utf8(side).unwrap(),
        )
    }

    #[test]
    fn formats() {
        let r = sample();
        let (table, _) = rendered(&r, Format::Table);
        assert_eq!(
            table,
            "demo n=3\n  total: 6·h(3)\n  status: success\n\nk    value\n(3)  6\n"
        );
        let (csv, _) = rendered(&r, Format::Csv);
        assert_eq!(csv, "partition,coeff\n[3],6/1\n");
        let (lines, side) = rendered(&r, Format::Jsonl);
        assert_eq!(lines, "{\"partition\":[3],\"coeff\":\"6/1\"}\n");
        assert!(side.contains("\"status\":\"success\""));
        let (json, _) = rendered(&r, Format::Json);
        let v: Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["records"][0]["coeff"], "6/1");
        assert_eq!(v["params"]["n"], 3);
    }

    #[test]
    fn failure_exit_code() {
        let mut r = sample();
        assert_eq!(r.status.exit_code(), 0);
        r.fail();
        assert_eq!(r.status.exit_code(), 1);
    }
}
