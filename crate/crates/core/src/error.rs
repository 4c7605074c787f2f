use thiserror::Error;

use crate::rootfind::RootSet;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot parse {what}: offending token `{token}` ({reason})")]
    Parse {
        what: &'static str,
        token: String,
        reason: String,
    },

    #[error("degree {degree} exceeds the window (n-1)*mu = {window}")]
    NotRealizable { degree: usize, window: usize },

    #[error("degree sequence {0} is not graphical")]
    NotGraphical(String),

    #[error("invalid family spec: {0}")]
    InvalidSpec(String),

    #[error("root iteration did not converge after {sweeps} sweeps")]
    NonConvergence {
        sweeps: usize,
        partial: Box<RootSet>,
    },

    #[error("no sign change on [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },

    #[error("root at distance {distance:e} from the circle |z| = {radius} cannot be placed")]
    Ambiguous { radius: f64, distance: f64 },

    #[error("polynomial is a monomial; {0} is degenerate")]
    Degenerate(&'static str),

    #[error("coefficient of x^{0} is zero inside the support")]
    ZeroCoefficient(usize),

    #[error("invalid BKW form: {0}")]
    DegenerateForm(String),

    #[error("no witness with |error| <= {tol:e} for a <= {max_a}")]
    NotFound { tol: f64, max_a: u32 },

    #[error("sign-change certificate failed for n = {0}")]
    IntervalCertificate(usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn parse(
        what: &'static str,
        token: impl Into<String>,
        reason: impl Into<String>,
    ) -> Self {
        Error::Parse {
            what,
            token: token.into(),
            reason: reason.into(),
        }
    }
}
