use std::io::Write;

use clap::ValueEnum;
use serde::Serialize;

use crate::failure::{code, Failure};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// One verdict line. `is_saturated` implies `is_blocker`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportRow {
    pub n: usize,
    pub t: usize,
    pub is_blocker: bool,
    pub is_saturated: bool,
    pub classification: Option<String>,
    pub stability_distance: Option<usize>,
    /// Construction band, for spectrum sweeps.
    pub source: Option<String>,
    /// Space-separated `a-b` pairs, for exhaustive sweeps.
    pub edges: Option<String>,
    pub elapsed_ms: Option<f64>,
}

/// Rows as JSON lines or CSV with a header, then a summary line.
pub struct Reporter {
    format: Format,
    csv: Option<csv::Writer<std::io::Stdout>>,
}

impl Reporter {
    pub fn new(format: Format) -> Self {
        Reporter {
            format,
            csv: (format == Format::Csv).then(|| csv::Writer::from_writer(std::io::stdout())),
        }
    }

    pub fn row<T: Serialize>(&mut self, row: &T) -> Result<(), Failure> {
        match &mut self.csv {
            Some(w) => w
                .serialize(row)
                .map_err(|e| Failure::new(code::IO, e.to_string())),
            None => {
                let line = serde_json::to_string(row).expect("rows serialize");
                writeln!(std::io::stdout(), "{line}").map_err(|e| Failure::io("stdout", e))
            }
        }
    }

    pub fn finish(&mut self) -> Result<(), Failure> {
        match &mut self.csv {
            Some(w) => w.flush().map_err(|e| Failure::io("stdout", e)),
            None => Ok(()),
        }
    }

    pub fn summary<T: Serialize>(mut self, summary: &T) -> Result<(), Failure> {
        self.finish()?;
        let body = serde_json::to_string(summary).expect("summaries serialize");
        let line = match self.format {
            Format::Json => format!("{{\"summary\":{body}}}"),
            Format::Csv => format!("# summary {body}"),
        };
        writeln!(std::io::stdout(), "{line}").map_err(|e| Failure::io("stdout", e))
    }
}
