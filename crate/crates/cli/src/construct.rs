use std::path::PathBuf;

use clap::ArgGroup;
use triblock::characterization::{build_bouquet, build_butterfly, build_seagull};
use triblock::constructions::{
    build_matrioshka, build_min_blocker, build_quadrilateral, build_spectrum_blocker_traced,
    QuadPartition,
};
use triblock::document::BlockerDocument;
use triblock::{is_saturated_blocker, EdgeSet};

use crate::failure::{code, Failure};
use crate::input::{read_document, write_output};

#[derive(Debug, clap::Args)]
#[command(group(
    ArgGroup::new("family")
        .required(true)
        .args(["spectrum", "min", "seagull", "butterfly", "bouquet", "quad", "matrioshka"])
))]
pub struct Args {
    /// A saturated blocker of size T on an N-gon.
    #[arg(long, num_args = 2, value_names = ["N", "T"])]
    spectrum: Option<Vec<usize>>,
    /// Minimum-sized blocker: net length --m, beam targets --beams.
    #[arg(long, value_name = "N")]
    min: Option<usize>,
    /// Size n-1 blocker with one missing ear-cover at --pivot.
    #[arg(long, value_name = "N")]
    seagull: Option<usize>,
    /// Size n-1 blocker with two missing ear-covers at --pivot.
    #[arg(long, value_name = "N")]
    butterfly: Option<usize>,
    /// Size n-1 blocker with a vase on --pivot, rim at --anchor spanning --width.
    #[arg(long, value_name = "N")]
    bouquet: Option<usize>,
    /// Quadrilateral blocker with cuts A < B < C.
    #[arg(long, num_args = 4, value_names = ["N", "A", "B", "C"])]
    quad: Option<Vec<usize>>,
    /// Quadrilateral blocker with sub-blockers nested at the top and bottom.
    #[arg(long, num_args = 4, value_names = ["N", "A", "B", "C"])]
    matrioshka: Option<Vec<usize>>,

    /// Net length: ear-covers (0,2) through (m,m+2).
    #[arg(long = "m")]
    m: Option<usize>,
    /// Beam targets, comma-separated, one per vertex after the net.
    #[arg(long, value_delimiter = ',')]
    beams: Vec<usize>,
    /// Bouquet beams after the rim.
    #[arg(long, value_delimiter = ',')]
    beams_right: Vec<usize>,
    /// Vertex the missing ear-covers or the vase sit on.
    #[arg(long)]
    pivot: Option<usize>,
    /// Bouquet rim start: the rim is (anchor, anchor+width).
    #[arg(long)]
    anchor: Option<usize>,
    /// Bouquet rim span.
    #[arg(long)]
    width: Option<usize>,
    /// Document for the top sub-polygon; a full net when omitted.
    #[arg(long, requires = "matrioshka")]
    top: Option<PathBuf>,
    /// Document for the bottom sub-polygon; a full net when omitted.
    #[arg(long, requires = "matrioshka")]
    bottom: Option<PathBuf>,

    /// Skip the saturation self-check.
    #[arg(long)]
    no_verify: bool,
    /// Document path; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn need(value: Option<usize>, flag: &str, family: &str) -> Result<usize, Failure> {
    value.ok_or_else(|| Failure::new(code::PARAMETER, format!("--{family} needs --{flag}")))
}

fn list(xs: &[usize]) -> String {
    xs.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn sub_blocker(path: Option<&PathBuf>, n: usize) -> Result<EdgeSet, Failure> {
    match path {
        Some(p) => Ok(read_document(Some(p))?.1),
        None => Ok(build_min_blocker(n, n - 3, &[])?),
    }
}

fn build(args: &Args) -> Result<BlockerDocument, Failure> {
    if let Some(v) = &args.spectrum {
        let (n, t) = (v[0], v[1]);
        let built = build_spectrum_blocker_traced(n, t)?;
        return Ok(BlockerDocument::from_edge_set(&built.blocker)
            .with("construction", "spectrum")
            .with("band", built.band.label()));
    }
    if let Some(n) = args.min {
        let m = need(args.m, "m", "min")?;
        let b = build_min_blocker(n, m, &args.beams)?;
        return Ok(BlockerDocument::from_edge_set(&b)
            .with("construction", "minimum")
            .with("m", m.to_string())
            .with("beams", list(&args.beams)));
    }
    if let Some(n) = args.seagull.or(args.butterfly) {
        let family = if args.seagull.is_some() {
            "seagull"
        } else {
            "butterfly"
        };
        let pivot = need(args.pivot, "pivot", family)?;
        let m = need(args.m, "m", family)?;
        let b = match family {
            "seagull" => build_seagull(n, pivot, m, &args.beams)?,
            _ => build_butterfly(n, pivot, m, &args.beams)?,
        };
        return Ok(BlockerDocument::from_edge_set(&b)
            .with("construction", family)
            .with("pivot", pivot.to_string())
            .with("m", m.to_string())
            .with("beams", list(&args.beams)));
    }
    if let Some(n) = args.bouquet {
        let pivot = need(args.pivot, "pivot", "bouquet")?;
        let m = need(args.m, "m", "bouquet")?;
        let anchor = need(args.anchor, "anchor", "bouquet")?;
        let width = need(args.width, "width", "bouquet")?;
        let b = build_bouquet(n, pivot, m, anchor, width, &args.beams, &args.beams_right)?;
        return Ok(BlockerDocument::from_edge_set(&b)
            .with("construction", "bouquet")
            .with("pivot", pivot.to_string())
            .with("m", m.to_string())
            .with("anchor", anchor.to_string())
            .with("width", width.to_string())
            .with("beams", list(&args.beams))
            .with("beams_right", list(&args.beams_right)));
    }
    let (family, v) = match (&args.quad, &args.matrioshka) {
        (Some(v), _) => ("quadrilateral", v),
        (_, Some(v)) => ("matrioshka", v),
        _ => unreachable!("clap requires one family"),
    };
    let p = QuadPartition::new(v[0], v[1], v[2], v[3])?;
    let b = match family {
        "quadrilateral" => build_quadrilateral(&p),
        _ => {
            let top = sub_blocker(args.top.as_ref(), p.top() + 2)?;
            let bottom = sub_blocker(args.bottom.as_ref(), p.bottom() + 2)?;
            build_matrioshka(&p, &top, &bottom)?
        }
    };
    Ok(BlockerDocument::from_edge_set(&b)
        .with("construction", family)
        .with("cuts", list(&v[1..])))
}

pub fn run(args: Args) -> Result<u8, Failure> {
    let mut doc = build(&args)?;
    let verified = if args.no_verify {
        "skipped"
    } else {
        let b = doc.to_edge_set()?;
        if !is_saturated_blocker(&b) {
            return Err(Failure::new(
                code::VERIFICATION,
                "constructed set is not a saturated blocker",
            ));
        }
        "saturated"
    };
    doc = doc.with("verified", verified);
    write_output(args.out.as_ref(), &doc.to_json())?;
    Ok(0)
}
