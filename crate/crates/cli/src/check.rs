use std::path::PathBuf;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};
use triblock::characterization::{stability_distance, verdict, Recognized, Verdict};
use triblock::dp::redundant_edges;
use triblock::{witness_triangulation, EdgeSet};

use crate::failure::Failure;
use crate::input::{edge_list, read_document};
use crate::report::{Format, ReportRow};

#[derive(Debug, clap::Args)]
pub struct Args {
    /// Document path; standard input when omitted or `-`.
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Leave out timing so the output is reproducible.
    #[arg(long)]
    stable: bool,
}

#[derive(Debug, Serialize)]
struct CheckReport {
    #[serde(flatten)]
    row: ReportRow,
    /// Parameters of the recognized family member.
    shape: Option<Value>,
    /// A triangulation avoiding every edge, for non-blockers.
    witness: Option<Vec<[usize; 2]>>,
    /// Edges whose removal keeps a blocker, for unsaturated blockers.
    redundant: Option<Vec<[usize; 2]>>,
}

pub fn shape_json(r: &Recognized) -> Value {
    match r {
        Recognized::Minimum(s) => json!({
            "rotation": s.rotation,
            "net_length": s.net_length,
            "beam_targets": s.beam_targets,
        }),
        Recognized::OneAbove(c) => json!({
            "variant": c.variant.label(),
            "rotation": c.rotation,
            "pivot": c.pivot,
            "net_length": c.net_length,
            "anchor": c.anchor,
            "width": c.width,
            "beam_targets": c.beam_targets,
            "beam_targets_right": c.beam_targets_right,
        }),
    }
}

/// Verdict fields shared by check and the exhaustive sweep.
pub fn row_for(b: &EdgeSet, v: &Verdict) -> ReportRow {
    let stability = match &v.recognized {
        Some(Recognized::OneAbove(_)) => stability_distance(b).ok().map(|(_, d)| d),
        _ => None,
    };
    ReportRow {
        n: b.n(),
        t: b.len(),
        is_blocker: v.is_blocker,
        is_saturated: v.is_saturated,
        classification: v.recognized.as_ref().map(|r| r.label().to_string()),
        stability_distance: stability,
        source: None,
        edges: None,
        elapsed_ms: None,
    }
}

pub fn exit_code(v: &Verdict) -> u8 {
    match (v.is_blocker, v.is_saturated) {
        (true, true) => 0,
        (false, _) => 1,
        (true, false) => 2,
    }
}

pub fn run(args: Args) -> Result<u8, Failure> {
    let (_, b) = read_document(args.input.as_deref())?;
    let start = Instant::now();
    let v = verdict(&b);
    let mut row = row_for(&b, &v);
    if !args.stable {
        row.elapsed_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    match args.format {
        Format::Csv => {
            let mut out = crate::report::Reporter::new(args.format);
            out.row(&row)?;
            out.finish()?;
        }
        Format::Json => {
            let witness = (!v.is_blocker)
                .then(|| witness_triangulation(&b.complement()))
                .flatten()
                .map(|t| edge_list(t.diagonals()));
            let redundant = (v.is_blocker && !v.is_saturated).then(|| {
                redundant_edges(&b)
                    .into_iter()
                    .map(|e| [e.a(), e.b()])
                    .collect()
            });
            let report = CheckReport {
                row,
                shape: v.recognized.as_ref().map(shape_json),
                witness,
                redundant,
            };
            let text = serde_json::to_string(&report).expect("reports serialize");
            crate::input::write_output(None, &format!("{text}\n"))?;
        }
    }
    Ok(exit_code(&v))
}
