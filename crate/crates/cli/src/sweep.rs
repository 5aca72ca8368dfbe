use std::collections::BTreeMap;
use std::ops::RangeInclusive;
use std::time::Instant;

use clap::{ArgGroup, ValueEnum};
use serde::Serialize;
use triblock::capacity::{Guard, MAX_EXHAUSTIVE_N};
use triblock::characterization::verdict;
use triblock::constructions::{
    build_spectrum_blocker_traced, closed_form_coefficients, max_reachable, recursion_coefficients,
};
use triblock::enumeration::{all_saturated_blockers, orbit_representatives, Group};
use triblock::is_saturated_blocker;

use crate::check::row_for;
use crate::failure::{code, Failure};
use crate::input::edge_string;
use crate::report::{Format, ReportRow, Reporter};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GroupArg {
    Rotation,
    Dihedral,
}

#[derive(Debug, clap::Args)]
#[command(group(
    ArgGroup::new("mode")
        .required(true)
        .args(["spectrum", "exhaustive", "coefficients"])
))]
pub struct Args {
    /// Build and verify every size from n-2 to max_reachable(n), for n in a range like `25..40`.
    #[arg(long, value_name = "RANGE", value_parser = parse_range)]
    spectrum: Option<RangeInclusive<usize>>,
    /// Find every saturated blocker for n in a range.
    #[arg(long, value_name = "RANGE", value_parser = parse_range)]
    exhaustive: Option<RangeInclusive<usize>>,
    /// Recursion against closed-form coefficients for steps in a range.
    #[arg(long, value_name = "RANGE", value_parser = parse_range)]
    coefficients: Option<RangeInclusive<usize>>,

    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Symmetry group for orbit counts.
    #[arg(long, value_enum, default_value = "rotation")]
    group: GroupArg,
    /// Leave out timing so two runs are byte-identical.
    #[arg(long)]
    stable: bool,
}

/// `a..b` and `a..=b` are both inclusive; a bare `a` is a single value.
fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("{x:?}: {e}"));
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (num(lo)?, num(hi.strip_prefix('=').unwrap_or(hi))?),
        None => (num(s)?, num(s)?),
    };
    if lo > hi {
        return Err(format!("empty range {s}"));
    }
    Ok(lo..=hi)
}

#[derive(Debug, Default, Serialize)]
struct Summary {
    passed: usize,
    failed: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    spectrum: Option<BTreeMap<usize, Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    orbits: Option<BTreeMap<usize, BTreeMap<usize, usize>>>,
}

#[derive(Debug, Serialize)]
struct CoefficientRow {
    step: usize,
    quadratic: String,
    linear: String,
    constant: String,
    agrees: bool,
}

fn elapsed(stable: bool, start: Instant) -> Option<f64> {
    (!stable).then(|| start.elapsed().as_secs_f64() * 1e3)
}

fn spectrum(
    range: RangeInclusive<usize>,
    args: &Args,
    out: &mut Reporter,
) -> Result<Summary, Failure> {
    let mut summary = Summary::default();
    for n in range {
        if n < 4 {
            return Err(Failure::new(
                code::PARAMETER,
                format!("spectrum sweeps need n >= 4, got {n}"),
            ));
        }
        for t in n - 2..=max_reachable(n) {
            let start = Instant::now();
            let row = match build_spectrum_blocker_traced(n, t) {
                Ok(built) => {
                    let saturated =
                        is_saturated_blocker(&built.blocker) && built.blocker.len() == t;
                    ReportRow {
                        n,
                        t,
                        is_blocker: saturated || triblock::is_blocker(&built.blocker),
                        is_saturated: saturated,
                        classification: None,
                        stability_distance: None,
                        source: Some(built.band.label().to_string()),
                        edges: None,
                        elapsed_ms: elapsed(args.stable, start),
                    }
                }
                Err(e) => ReportRow {
                    n,
                    t,
                    is_blocker: false,
                    is_saturated: false,
                    classification: None,
                    stability_distance: None,
                    source: Some(format!("error: {e}")),
                    edges: None,
                    elapsed_ms: elapsed(args.stable, start),
                },
            };
            if row.is_saturated {
                summary.passed += 1;
            } else {
                summary.failed += 1;
            }
            out.row(&row)?;
        }
    }
    Ok(summary)
}

fn exhaustive(
    range: RangeInclusive<usize>,
    args: &Args,
    out: &mut Reporter,
) -> Result<Summary, Failure> {
    let group = match args.group {
        GroupArg::Rotation => Group::Rotation,
        GroupArg::Dihedral => Group::Dihedral,
    };
    // refuse the whole range up front rather than stopping partway through
    Guard::from_env().check("saturated blocker search", *range.end(), MAX_EXHAUSTIVE_N)?;
    let mut summary = Summary::default();
    let mut spectra = BTreeMap::new();
    let mut orbits = BTreeMap::new();
    for n in range {
        let start = Instant::now();
        let found = all_saturated_blockers(n, None)?;
        let search_ms = elapsed(args.stable, start);
        let mut by_size: BTreeMap<usize, Vec<_>> = BTreeMap::new();
        for b in &found {
            by_size.entry(b.len()).or_default().push(b.clone());
            let mut row = row_for(b, &verdict(b));
            row.edges = Some(edge_string(b));
            row.elapsed_ms = search_ms;
            if row.is_saturated {
                summary.passed += 1;
            } else {
                summary.failed += 1;
            }
            out.row(&row)?;
        }
        spectra.insert(n, by_size.keys().copied().collect());
        orbits.insert(
            n,
            by_size
                .iter()
                .map(|(&t, sets)| (t, orbit_representatives(sets.iter(), group).len()))
                .collect(),
        );
    }
    summary.spectrum = Some(spectra);
    summary.orbits = Some(orbits);
    Ok(summary)
}

fn coefficients(range: RangeInclusive<usize>, out: &mut Reporter) -> Result<Summary, Failure> {
    let mut summary = Summary::default();
    for i in range {
        let step = u32::try_from(i).map_err(|_| Failure::new(code::PARAMETER, "step too large"))?;
        let rec = recursion_coefficients(step);
        let closed = closed_form_coefficients(step);
        let agrees = rec == closed;
        if agrees {
            summary.passed += 1;
        } else {
            summary.failed += 1;
        }
        out.row(&CoefficientRow {
            step: i,
            quadratic: rec.quadratic.to_string(),
            linear: rec.linear.to_string(),
            constant: rec.constant.to_string(),
            agrees,
        })?;
    }
    Ok(summary)
}

pub fn run(args: Args) -> Result<u8, Failure> {
    let mut out = Reporter::new(args.format);
    let summary = if let Some(r) = args.spectrum.clone() {
        spectrum(r, &args, &mut out)?
    } else if let Some(r) = args.exhaustive.clone() {
        exhaustive(r, &args, &mut out)?
    } else if let Some(r) = args.coefficients.clone() {
        coefficients(r, &mut out)?
    } else {
        unreachable!("clap requires one mode")
    };
    let failed = summary.failed;
    out.summary(&summary)?;
    Ok(if failed == 0 { 0 } else { code::VERIFICATION })
}

#[cfg(test)]
mod tests {
    use super::parse_range;

    #[test]
    fn ranges_are_inclusive() {
        assert_eq!(parse_range("25..40").unwrap(), 25..=40);
        assert_eq!(parse_range("0..=20").unwrap(), 0..=20);
        assert_eq!(parse_range("6").unwrap(), 6..=6);
        assert!(parse_range("9..3").is_err());
        assert!(parse_range("x..3").is_err());
    }
}
