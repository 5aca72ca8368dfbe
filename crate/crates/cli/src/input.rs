use std::io::Read;
use std::path::{Path, PathBuf};

use triblock::document::BlockerDocument;
use triblock::EdgeSet;

use crate::failure::{code, Failure};

/// Reads a document from `path`, or standard input when absent or `-`.
pub fn read_document(path: Option<&Path>) -> Result<(BlockerDocument, EdgeSet), Failure> {
    let text = match path {
        Some(p) if p != Path::new("-") => std::fs::read_to_string(p)
            .map_err(|e| Failure::new(code::MALFORMED, format!("{}: {e}", p.display())))?,
        _ => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::new(code::MALFORMED, format!("stdin: {e}")))?;
            s
        }
    };
    let doc = BlockerDocument::parse(&text)?;
    let set = doc.to_edge_set()?;
    Ok((doc, set))
}

/// Writes to `path`, or standard output when absent.
pub fn write_output(path: Option<&PathBuf>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::io(&p.display().to_string(), e)),
        None => {
            use std::io::Write;
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .map_err(|e| Failure::io("stdout", e))
        }
    }
}

pub fn edge_list(b: &EdgeSet) -> Vec<[usize; 2]> {
    b.iter().map(|e| [e.a(), e.b()]).collect()
}

/// `0-3 0-4 1-3`.
pub fn edge_string(b: &EdgeSet) -> String {
    b.iter()
        .map(|e| format!("{}-{}", e.a(), e.b()))
        .collect::<Vec<_>>()
        .join(" ")
}
