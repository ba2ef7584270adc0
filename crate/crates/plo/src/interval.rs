//! Open subintervals of the unit interval and their mutual positions.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::rat::Rat;

/// How two open intervals sit relative to each other.
///
/// `Crossing` is the interesting case: the intervals overlap but neither
/// contains the other. It is exactly the configuration that makes a pair
/// of signed orbitals a transition chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    Disjoint,
    Equal,
    ProperSub,
    ProperSup,
    Crossing,
}

/// Nonempty open interval `(left, right)` with `0 <= left < right <= 1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "(Rat, Rat)", into = "(Rat, Rat)")]
pub struct Interval {
    left: Rat,
    right: Rat,
}

impl Interval {
    /// Panics unless `0 <= left < right <= 1`.
    pub fn new(left: Rat, right: Rat) -> Self {
        Self::try_new(left, right).expect("invalid interval")
    }

    pub fn try_new(left: Rat, right: Rat) -> Result<Self, Error> {
        if left.is_negative() || left >= right || right > Rat::one() {
            return Err(Error::BadInterval(left, right));
        }
        Ok(Interval { left, right })
    }

    /// The whole of `(0, 1)`.
    pub fn unit() -> Self {
        Interval {
            left: Rat::zero(),
            right: Rat::one(),
        }
    }

    pub fn left(&self) -> &Rat {
        &self.left
    }

    pub fn right(&self) -> &Rat {
        &self.right
    }

    pub fn length(&self) -> Rat {
        &self.right - &self.left
    }

    pub fn midpoint(&self) -> Rat {
        (&self.left + &self.right) / Rat::from_int(2)
    }

    /// Strict interior membership.
    pub fn contains_point(&self, x: &Rat) -> bool {
        &self.left < x && x < &self.right
    }

    /// `other ⊆ self` (not necessarily proper).
    pub fn contains(&self, other: &Interval) -> bool {
        self.left <= other.left && other.right <= self.right
    }

    pub fn intersection(&self, other: &Interval) -> Option<Interval> {
        let left = self.left.clone().max(other.left.clone());
        let right = self.right.clone().min(other.right.clone());
        (left < right).then(|| Interval { left, right })
    }

    pub fn relation(&self, other: &Interval) -> Relation {
        if self == other {
            Relation::Equal
        } else if self.right <= other.left || other.right <= self.left {
            Relation::Disjoint
        } else if other.contains(self) {
            Relation::ProperSub
        } else if self.contains(other) {
            Relation::ProperSup
        } else {
            Relation::Crossing
        }
    }

    /// Whether the two intervals have a common left end or a common right
    /// end. Only defined when one contains the other; for overlapping
    /// incomparable intervals the question has no useful answer, so it is
    /// an error rather than a silent `false`.
    pub fn shares_end(&self, other: &Interval) -> Result<bool, Error> {
        match self.relation(other) {
            Relation::Equal => Ok(true),
            Relation::ProperSub | Relation::ProperSup => {
                Ok(self.left == other.left || self.right == other.right)
            }
            _ => Err(Error::NoContainment(self.clone(), other.clone())),
        }
    }
}

impl TryFrom<(Rat, Rat)> for Interval {
    type Error = Error;
    fn try_from((l, r): (Rat, Rat)) -> Result<Self, Error> {
        Interval::try_new(l, r)
    }
}

impl From<Interval> for (Rat, Rat) {
    fn from(iv: Interval) -> Self {
        (iv.left, iv.right)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.left, self.right)
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
