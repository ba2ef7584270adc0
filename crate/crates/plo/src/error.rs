use thiserror::Error;

use crate::chain::ChainCertificate;
use crate::interval::Interval;
use crate::rat::Rat;

/// Everything that can go wrong in this crate.
///
/// All arithmetic is exact, so none of these are numerical: they are
/// either malformed inputs, violated preconditions, or resource caps.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("node list must start with 0,0 and end with 1,1")]
    EndpointsNotFixed,

    #[error("node coordinates must be strictly increasing in both axes")]
    NotMonotone,

    #[error("point {0} lies outside [0,1]")]
    OutOfDomain(Rat),

    #[error("invalid interval ({0}, {1}): need 0 <= left < right <= 1")]
    BadInterval(Rat, Rat),

    #[error("{0} is not an orbital of the map")]
    NotAnOrbital(Interval),

    #[error("point {point} does not lie inside the orbital {orbital}")]
    NotInOrbital { point: Rat, orbital: Interval },

    #[error("shared ends are only defined when one interval contains the other; {0} and {1} are not nested")]
    NoContainment(Interval, Interval),

    #[error("{inner} is not a proper subinterval of {outer}")]
    NotNested { inner: Interval, outer: Interval },

    #[error("{x} and {y} do not lie inside the same orbital of the generating set")]
    NotSameOrbital { x: Rat, y: Rat },

    #[error("signed orbitals do not form a strictly ascending chain")]
    NotAChain,

    #[error("pool contains a transition chain: {0}")]
    HasTransitionChain(Box<ChainCertificate>),

    #[error("tower is not fundamental: {inner} escapes every fundamental domain of its signature on {outer}, so the generated group contains a transition chain")]
    TowerNotFundamental { inner: Interval, outer: Interval },

    #[error("precondition violated for {a} and {b}: {why}")]
    PartitionPrecondition { a: Interval, b: Interval, why: String },

    #[error("context map {index} is not a single bump on the given orbital")]
    ContextOrbitalMismatch { index: usize },

    #[error("resource limit: computation exceeds the configured cap of {0}")]
    ResourceLimit(usize),

    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),

    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
}
