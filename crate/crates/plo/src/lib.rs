//! Exact computation in the group of piecewise-linear, orientation-preserving
//! homeomorphisms of the unit interval.
//!
//! Everything runs on arbitrary-precision rationals — no floats, no epsilon
//! comparisons — so every reported orbital endpoint, crossing certificate,
//! witness interval, and bump code is exact and reproducible.
//!
//! The layers, bottom to top:
//!
//! - [`rat`] and [`interval`]: rational scalars and open subintervals of
//!   `[0, 1]`, with the crossing/containment relation taxonomy.
//! - [`plmap`]: the group elements themselves — node lists defining
//!   piecewise-linear bijections, with composition, inversion, powers,
//!   conjugation, and commutators.
//! - [`orbital`]: supports decomposed into orbitals, signed orbitals,
//!   fundamental domains, generating sets, and group words.
//! - [`chain`]: the partial order on signed orbitals, towers, transition
//!   chain detection with verifiable certificates, and ball search over a
//!   generating set.
//! - [`countability`]: length classes, disjoint witness intervals for
//!   chain-free towers, bouncepoints and corners, and the injective
//!   bump-to-code map underlying the counting argument.
//! - [`construct`]: canonical fixtures — model bumps, crossing pairs,
//!   nested towers, wreath generator pairs — built to order.
//! - [`sample`]: seeded random generators for maps, bumps, towers, and
//!   bouncing pairs.
//! - [`io`], [`svg`]: text/JSON parsing and rendering, and deterministic
//!   SVG plots.
//! - [`verify`]: named property suites producing reproducible reports.

pub mod chain;
pub mod construct;
pub mod countability;
pub mod error;
pub mod interval;
pub mod io;
pub mod orbital;
pub mod plmap;
pub mod rat;
pub mod sample;
pub mod svg;
pub mod verify;

pub use chain::{
    compare_signed, conjugate_tower, detect_transition_chain, downset, is_fundamental,
    maximal_towers, product_orbital_check, search_transition_chain, signed_orbitals, upset,
    BallSearch, ChainCertificate, ProductCheck, SignedCmp, Tower,
};
pub use construct::{
    affine_carrier, crossing_pair, model_bump, nested_tower, one_bump, rescale_into,
    wreath_generators,
};
pub use countability::{
    bouncepoints, bump_code, chain_partition_check, check_injectivity, corners,
    endpoint_witness, length_class, witness_intervals, witness_intervals_with, BumpCode,
    InjectivityReport, LengthClass,
};
pub use error::Error;
pub use interval::{Interval, Relation};
pub use orbital::{
    bump, direction, find_mover, fundamental_domain, group_orbitals,
    lies_in_fundamental_domain, orbitals, Direction, GenSet, HalfOpen, Letter, SignedOrbital,
    Word,
};
pub use plmap::{commutator, PLMap};
pub use rat::Rat;
pub use verify::{run_verify, Check, Report, VerifyOptions, SUITES};
