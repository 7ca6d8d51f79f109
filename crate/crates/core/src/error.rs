use thiserror::Error;

use crate::algebra::BasisSym;
use crate::lattice::Degree;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("pairing of the Cartan element with {0} vanishes")]
    ZeroPairing(Degree),

    #[error("degree must be nonzero")]
    ZeroDegree,

    #[error("{0} lies outside the tabulated window")]
    OutOfWindow(BasisSym),

    #[error("tensor is not antisymmetric")]
    NotAntisymmetric,

    #[error("derivation is not homogeneous of nonzero degree {degree}{}", at_suffix(.at))]
    NotHomogeneous {
        degree: Degree,
        at: Option<BasisSym>,
    },

    #[error("inner witness does not reproduce the derivation at {0}")]
    VerificationFailed(BasisSym),

    #[error("degree-0 window system has no solution: {0}")]
    NoSolution(crate::cohomology::NoSolutionDiagnostics),

    #[error("input tensor is zero")]
    ZeroTensor,

    #[error("probe schedule exhausted after {probes} probes without a witness")]
    InconclusiveBudgetExhausted { probes: usize },
}

fn at_suffix(at: &Option<BasisSym>) -> String {
    at.as_ref().map(|s| format!(" at {s}")).unwrap_or_default()
}
