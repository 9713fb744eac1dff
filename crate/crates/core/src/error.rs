use core::fmt;

use crate::Complex64;

/// Errors raised by the toolkit.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A coefficient or parameter was NaN or infinite.
    NonFinite,
    /// A series was built from an empty coefficient list.
    EmptySeries,
    /// Division (or a logarithm) by a series whose constant term is too small.
    DivisionByNonUnit { constant: Complex64 },
    /// `integrate` was given a series with a nonzero constant term.
    NonzeroConstantTerm,
    /// `compose` was given an inner series with a nonzero constant term.
    NonzeroInnerConstant,
    /// The angle lies outside `[pi/2, pi)`.
    AlphaOutOfRange { alpha: f64 },
    /// A log argument came within `1e-12` of the branch point.
    BranchHazard { z: Complex64 },
    /// A candidate Schwarz function failed `w(0) = 0` or `sup |w| < 1`.
    NotSchwarz { bound: f64 },
    /// A series is not of the form `z + a_2 z^2 + ...`.
    NotNormalized,
    /// A sampled value broke one of the distortion bounds.
    BoundViolation { witness: Complex64, excess: f64 },
    /// A boundary angle hit one of the two singular directions of the strip map.
    ExcludedTheta { theta: f64 },
    /// `f'` vanished (to `1e-9`) at a sample point.
    DerivativeVanishes { z: Complex64 },
    /// No sign change was found before `1 - 1e-9`.
    NoSignChange,
    /// The function handed to the root finder is not negative at the origin.
    NotNegativeAtOrigin { value: f64 },
    /// A scalar argument fell outside its documented domain.
    InvalidParameter { name: &'static str, value: f64 },
}

impl Error {
    /// True for failures of the numerics themselves, as opposed to bad input.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::NoSignChange
                | Error::NotNegativeAtOrigin { .. }
                | Error::BoundViolation { .. }
                | Error::DerivativeVanishes { .. }
                | Error::BranchHazard { .. }
        )
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonFinite => write!(f, "non-finite value"),
            Error::EmptySeries => write!(f, "series needs at least one coefficient"),
            Error::DivisionByNonUnit { constant } => {
                write!(f, "constant term {constant} is not invertible")
            }
            Error::NonzeroConstantTerm => write!(f, "integrate requires a zero constant term"),
            Error::NonzeroInnerConstant => {
                write!(f, "inner series of a composition must vanish at 0")
            }
            Error::AlphaOutOfRange { alpha } => {
                write!(f, "alpha = {alpha} is outside [pi/2, pi)")
            }
            Error::BranchHazard { z } => write!(f, "log branch point reached near z = {z}"),
            Error::NotSchwarz { bound } => {
                write!(f, "not a Schwarz function (sampled sup |w| = {bound})")
            }
            Error::NotNormalized => write!(f, "series is not normalized (need c0 = 0, c1 = 1)"),
            Error::BoundViolation { witness, excess } => {
                write!(f, "bound violated by {excess:e} at z = {witness}")
            }
            Error::ExcludedTheta { theta } => write!(f, "theta = {theta} is an excluded angle"),
            Error::DerivativeVanishes { z } => write!(f, "f' vanishes near z = {z}"),
            Error::NoSignChange => write!(f, "no sign change found on (0, 1)"),
            Error::NotNegativeAtOrigin { value } => {
                write!(f, "function must be negative at r = 0 (got {value})")
            }
            Error::InvalidParameter { name, value } => write!(f, "invalid {name}: {value}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
