use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a polygon needs at least 3 vertices, got {0}")]
    PolygonTooSmall(usize),

    #[error("vertex {vertex} is out of range for a {n}-gon")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("({0}, {0}) is a loop, not an edge")]
    LoopEdge(usize),

    #[error("({a}, {b}) is a boundary edge of the {n}-gon; only diagonals are allowed")]
    BoundaryEdge { a: usize, b: usize, n: usize },

    #[error("edge ({a}, {b}) appears more than once")]
    DuplicateEdge { a: usize, b: usize },

    #[error("polygon sizes differ: {0} vs {1}")]
    SizeMismatch(usize, usize),

    #[error("n = {n} exceeds the capacity guard {limit} for {what} (set TRIBLOCK_UNGUARDED=1 to override)")]
    Capacity {
        what: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("beam target {target} of vertex {vertex} is outside the allowed range {lo}..={hi}")]
    BeamTargetOutOfRange {
        vertex: usize,
        target: usize,
        lo: usize,
        hi: usize,
    },

    #[error("beams ({v1}, {t1}) and ({v2}, {t2}) conflict")]
    ConflictingBeams {
        v1: usize,
        t1: usize,
        v2: usize,
        t2: usize,
    },

    #[error("t = {t} is outside the realizable range {lo}..={hi} for n = {n} (n - 2 up to max_reachable({n}) = {hi})")]
    SizeOutOfRange {
        n: usize,
        t: usize,
        lo: usize,
        hi: usize,
    },

    #[error(
        "sub-blocker for the {which} polygon is not a saturated blocker of a {expected_n}-gon"
    )]
    InvalidSubBlocker {
        which: &'static str,
        expected_n: usize,
    },

    #[error("edge ({a}, {b}) is not incident to the inserted vertex {vertex}")]
    NotIncident { a: usize, b: usize, vertex: usize },

    #[error("no classification matches: {0}")]
    Classification(String),

    #[error("malformed document: {0}")]
    MalformedDocument(String),

    #[error("internal construction failure: {0}")]
    Construction(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
