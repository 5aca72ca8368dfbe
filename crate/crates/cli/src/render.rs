use std::path::PathBuf;

use triblock::characterization::{stability_distance, verdict, Recognized};
use triblock::render::{render_svg, RenderOptions};
use triblock::witness_triangulation;

use crate::failure::{code, Failure};
use crate::input::{read_document, write_output};

#[derive(Debug, clap::Args)]
pub struct Args {
    /// Document path; standard input when omitted or `-`.
    input: Option<PathBuf>,
    /// Overlay a triangulation that avoids every edge, if one exists.
    #[arg(long)]
    witness: bool,
    /// Draw the nearby minimum-sized blocker of a size n-1 saturated
    /// blocker: removed edges dotted, added ones bold.
    #[arg(long, conflicts_with = "witness")]
    stability: bool,
    /// SVG path; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

pub fn run(args: Args) -> Result<u8, Failure> {
    let (doc, b) = read_document(args.input.as_deref())?;
    let v = verdict(&b);
    let mut opts = RenderOptions {
        title: Some(match doc.metadata.get("construction") {
            Some(c) => format!("{c}: {} diagonals of a {}-gon", b.len(), b.n()),
            None => format!("{} diagonals of a {}-gon", b.len(), b.n()),
        }),
        ..RenderOptions::default()
    };
    if let Some(Recognized::OneAbove(c)) = &v.recognized {
        opts.special = Some(c.special_edges(b.n()));
    }
    let mut drawn = b.clone();
    if args.witness {
        if v.is_blocker {
            eprintln!("note: every triangulation uses one of these edges; no witness to draw");
        } else {
            opts.witness = witness_triangulation(&b.complement()).map(|t| t.into_diagonals());
        }
    }
    if args.stability {
        if !matches!(v.recognized, Some(Recognized::OneAbove(_))) {
            return Err(Failure::new(
                code::PARAMETER,
                "--stability needs a saturated blocker of size n-1",
            ));
        }
        let (near, _) = stability_distance(&b)?;
        opts.removed = Some(b.difference(&near));
        opts.special = Some(near.difference(&b));
        drawn = near;
    }
    write_output(args.out.as_ref(), &render_svg(&drawn, &opts))?;
    Ok(0)
}
