use triblock::Error;

/// Exit codes above the three verdicts.
pub mod code {
    /// Unreadable input or malformed JSON.
    pub const MALFORMED: u8 = 3;
    /// Well-formed JSON that is not a valid diagonal set.
    pub const INVALID_DOCUMENT: u8 = 4;
    /// Construction parameters violate a bound.
    pub const PARAMETER: u8 = 5;
    /// A capacity guard refused the request.
    pub const CAPACITY: u8 = 6;
    /// A constructed set failed its self-check, or a sweep had failures.
    pub const VERIFICATION: u8 = 7;
    pub const IO: u8 = 8;
}

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }

    pub fn io(context: &str, err: std::io::Error) -> Self {
        Failure::new(code::IO, format!("{context}: {err}"))
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let class = match &err {
            Error::MalformedDocument(_) => code::MALFORMED,
            Error::PolygonTooSmall(_)
            | Error::VertexOutOfRange { .. }
            | Error::LoopEdge(_)
            | Error::BoundaryEdge { .. }
            | Error::DuplicateEdge { .. }
            | Error::SizeMismatch(..) => code::INVALID_DOCUMENT,
            Error::Capacity { .. } => code::CAPACITY,
            Error::Construction(_) => code::VERIFICATION,
            _ => code::PARAMETER,
        };
        Failure::new(class, err.to_string())
    }
}
