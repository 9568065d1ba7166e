use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeomError {
    #[error("points coincide")]
    CoincidentPoints,
    #[error("lines coincide")]
    CoincidentLines,
    #[error("points are not collinear (residual {0:.3e})")]
    NotCollinear(f64),
    #[error("lines are not concurrent (residual {0:.3e})")]
    NotConcurrent(f64),
    #[error("cross ratio is indeterminate (0/0)")]
    IndeterminateRatio,
    #[error("cross ratio is infinite")]
    InfiniteRatio,
    #[error("degenerate triple")]
    DegenerateTriple,
    #[error("input is not real")]
    NonRealInput,
    #[error("degenerate quadrangle")]
    DegenerateQuadrangle,
    #[error("line passes through a vertex")]
    LineThroughVertex,
    #[error("degenerate conic")]
    DegenerateConic,
    #[error("degenerate input")]
    DegenerateInput,
    #[error("line is tangent to the conic")]
    TangentLine,
    #[error("point is not on the line")]
    PointNotOnLine,
    #[error("point lies on the conic")]
    PointOnConic,
    #[error("point is not on the conic")]
    PointNotOnConic,
    #[error("endpoint lies on the absolute conic")]
    EndpointOnConic,
    #[error("center lies on the absolute conic")]
    CenterOnConic,
    #[error("point is outside the model")]
    PointOutsideModel,
    #[error("vertex is outside the model")]
    VertexOutsideModel,
    #[error("point is not interior to the absolute conic")]
    PointNotInterior,
    #[error("line does not pass through the point")]
    LineNotThroughPoint,
    #[error("rays have different origins")]
    DifferentOrigins,
    #[error("conic class does not match the requested geometry")]
    KindMismatch,
    #[error("general position violated: {0}")]
    GeneralPositionViolation(String),
    #[error("cevians are not concurrent")]
    NonConcurrentCevians,
    #[error("points are not on a common conic (residual {0:.3e})")]
    PointsNotConconic(f64),
    #[error("no coherent orientation exists")]
    NoCoherentAssignment,
    #[error("sampling exhausted after {0} retries")]
    SamplingExhausted(usize),
    #[error("unknown theorem `{0}`")]
    UnknownTheorem(String),
    #[error("points at infinity of the chart")]
    ChartDegenerate,
}

pub type Result<T> = std::result::Result<T, GeomError>;
