//! Piecewise-linear homeomorphisms of the unit interval.
//!
//! A [`PLMap`] is an orientation-preserving homeomorphism of `[0,1]` that
//! is affine on finitely many pieces. It is stored as the node list of its
//! graph — `(0,0)`, the breakpoints with their images, `(1,1)` — kept in
//! canonical form: no interior node survives unless the slope actually
//! changes there. Two maps are equal as functions iff their node lists are
//! equal, so derived `PartialEq` is function equality.
//!
//! Maps act on the right: `(x)f` is `f.at(&x)`, and `f.then(&g)` is the
//! product `fg`, the map `x ↦ ((x)f)g` — apply `f` first. Conjugation
//! follows the same convention: `f.conjugate(&c)` is `c⁻¹fc`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::interval::Interval;
use crate::rat::Rat;

/// Orientation-preserving PL homeomorphism of `[0,1]` in canonical form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<(Rat, Rat)>", into = "Vec<(Rat, Rat)>")]
pub struct PLMap {
    nodes: Vec<(Rat, Rat)>,
}

impl PLMap {
    /// Builds a map from graph nodes, validating and canonicalizing.
    ///
    /// The list must start with `(0,0)`, end with `(1,1)`, and be strictly
    /// increasing in both coordinates. Interior nodes where the slope does
    /// not change are dropped, so e.g. `[(0,0), (1/2,1/2), (1,1)]` comes
    /// back as the identity.
    pub fn new(nodes: Vec<(Rat, Rat)>) -> Result<Self, Error> {
        let first_ok = nodes.first().map_or(false, |n| n.0.is_zero() && n.1.is_zero());
        let last_ok = nodes.last().map_or(false, |n| n.0.is_one() && n.1.is_one());
        if nodes.len() < 2 || !first_ok || !last_ok {
            return Err(Error::EndpointsNotFixed);
        }
        for w in nodes.windows(2) {
            if w[0].0 >= w[1].0 || w[0].1 >= w[1].1 {
                return Err(Error::NotMonotone);
            }
        }

        let mut canon: Vec<(Rat, Rat)> = Vec::with_capacity(nodes.len());
        for node in nodes {
            while canon.len() >= 2 && collinear(&canon[canon.len() - 2], canon.last().unwrap(), &node) {
                canon.pop();
            }
            canon.push(node);
        }
        Ok(PLMap { nodes: canon })
    }

    pub fn identity() -> Self {
        PLMap {
            nodes: vec![
                (Rat::zero(), Rat::zero()),
                (Rat::one(), Rat::one()),
            ],
        }
    }

    pub fn is_identity(&self) -> bool {
        self.nodes.len() == 2
    }

    pub fn nodes(&self) -> &[(Rat, Rat)] {
        &self.nodes
    }

    /// `(x)f`. Panics if `x` is outside `[0,1]`; use [`PLMap::evaluate`]
    /// for untrusted input.
    pub fn at(&self, x: &Rat) -> Rat {
        assert!(
            !x.is_negative() && *x <= Rat::one(),
            "point outside [0,1]"
        );
        let i = self.segment_left_of(x);
        let (x0, y0) = &self.nodes[i];
        let (x1, y1) = &self.nodes[i + 1];
        y0 + (x - x0) * (y1 - y0) / (x1 - x0)
    }

    /// Checked evaluation.
    pub fn evaluate(&self, x: &Rat) -> Result<Rat, Error> {
        if x.is_negative() || *x > Rat::one() {
            return Err(Error::OutOfDomain(x.clone()));
        }
        Ok(self.at(x))
    }

    /// `(y)f⁻¹` without constructing the inverse map. Panics outside `[0,1]`.
    pub fn preimage(&self, y: &Rat) -> Rat {
        assert!(
            !y.is_negative() && *y <= Rat::one(),
            "point outside [0,1]"
        );
        let i = self
            .nodes
            .partition_point(|n| n.1 <= *y)
            .clamp(1, self.nodes.len() - 1)
            - 1;
        let (x0, y0) = &self.nodes[i];
        let (x1, y1) = &self.nodes[i + 1];
        x0 + (y - y0) * (x1 - x0) / (y1 - y0)
    }

    /// The product `fg`: apply `self` first, then `g`.
    pub fn then(&self, g: &PLMap) -> PLMap {
        let mut xs: Vec<Rat> = self.nodes.iter().map(|n| n.0.clone()).collect();
        // the composite can only break where f breaks or where f lands on a
        // break of g
        for (gx, _) in g.nodes() {
            xs.push(self.preimage(gx));
        }
        xs.sort();
        xs.dedup();
        let nodes = xs
            .into_iter()
            .map(|x| {
                let y = g.at(&self.at(&x));
                (x, y)
            })
            .collect();
        PLMap::new(nodes).expect("composite of homeomorphisms is a homeomorphism")
    }

    pub fn inverse(&self) -> PLMap {
        let nodes = self.nodes.iter().map(|(x, y)| (y.clone(), x.clone())).collect();
        PLMap { nodes }
    }

    /// `c⁻¹ self c` (right-action conjugation).
    pub fn conjugate(&self, c: &PLMap) -> PLMap {
        c.inverse().then(self).then(c)
    }

    /// `n`-fold product; negative `n` powers the inverse.
    pub fn pow(&self, n: i64) -> PLMap {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut acc = PLMap::identity();
        for _ in 0..n.unsigned_abs() {
            acc = acc.then(&base);
        }
        acc
    }

    /// Interior x-coordinates where the slope changes. Canonical form
    /// guarantees these are genuine breakpoints.
    pub fn breakpoints(&self) -> Vec<Rat> {
        self.nodes[1..self.nodes.len() - 1]
            .iter()
            .map(|n| n.0.clone())
            .collect()
    }

    /// Maximal open intervals on which the map is affine, with their
    /// slopes, left to right. The identity has a single component
    /// `((0,1), 1)`.
    pub fn affine_components(&self) -> Vec<(Interval, Rat)> {
        (0..self.nodes.len() - 1)
            .map(|i| {
                let iv = Interval::new(self.nodes[i].0.clone(), self.nodes[i + 1].0.clone());
                (iv, self.segment_slope(i))
            })
            .collect()
    }

    /// Slope immediately to the right of `x`. Panics at `x = 1`.
    pub fn slope_right_of(&self, x: &Rat) -> Rat {
        assert!(*x < Rat::one(), "no component to the right of 1");
        self.segment_slope(self.segment_left_of(x))
    }

    /// Slopes at the two ends of an orbital of this map: the slope just
    /// right of its left end and the slope just left of its right end.
    pub fn boundary_slopes(&self, orbital: &Interval) -> Result<(Rat, Rat), Error> {
        if !self.orbitals().contains(orbital) {
            return Err(Error::NotAnOrbital(orbital.clone()));
        }
        let initial = self.slope_right_of(orbital.left());
        let last = self
            .nodes
            .partition_point(|n| n.0 < *orbital.right())
            .clamp(1, self.nodes.len() - 1)
            - 1;
        Ok((initial, self.segment_slope(last)))
    }

    /// Image of an open interval; orientation preservation makes it the
    /// interval between the images of the ends.
    pub fn image_of(&self, iv: &Interval) -> Interval {
        Interval::new(self.at(iv.left()), self.at(iv.right()))
    }

    fn segment_left_of(&self, x: &Rat) -> usize {
        self.nodes
            .partition_point(|n| n.0 <= *x)
            .clamp(1, self.nodes.len() - 1)
            - 1
    }

    fn segment_slope(&self, i: usize) -> Rat {
        let (x0, y0) = &self.nodes[i];
        let (x1, y1) = &self.nodes[i + 1];
        (y1 - y0) / (x1 - x0)
    }
}

/// `f⁻¹g⁻¹fg`.
pub fn commutator(f: &PLMap, g: &PLMap) -> PLMap {
    f.inverse().then(&g.inverse()).then(f).then(g)
}

fn collinear(a: &(Rat, Rat), b: &(Rat, Rat), c: &(Rat, Rat)) -> bool {
    // cross-multiplied slope equality, no divisions
    (&b.1 - &a.1) * (&c.0 - &b.0) == (&c.1 - &b.1) * (&b.0 - &a.0)
}

impl TryFrom<Vec<(Rat, Rat)>> for PLMap {
    type Error = Error;
    fn try_from(nodes: Vec<(Rat, Rat)>) -> Result<Self, Error> {
        PLMap::new(nodes)
    }
}

impl From<PLMap> for Vec<(Rat, Rat)> {
    fn from(map: PLMap) -> Self {
        map.nodes
    }
}

impl fmt::Display for PLMap {
    /// Node-list form: `0,0 1/2,1/4 3/4,1/2 1,1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (x, y)) in self.nodes.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{x},{y}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PLMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PLMap[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(n, d)
    }

    fn map(s: &str) -> PLMap {
        crate::io::parse_map(s).unwrap()
    }

    #[test]
    fn validation() {
        assert_eq!(map("0,0 1/2,1/2 1,1"), PLMap::identity());
        assert!(matches!(
            PLMap::new(vec![(r(0, 1), r(0, 1))]),
            Err(Error::EndpointsNotFixed)
        ));
        assert!(matches!(
            PLMap::new(vec![
                (r(0, 1), r(0, 1)),
                (r(1, 2), r(1, 4)),
                (r(1, 4), r(1, 2)),
                (r(1, 1), r(1, 1)),
            ]),
            Err(Error::NotMonotone)
        ));
        assert!(matches!(
            PLMap::new(vec![(r(0, 1), r(0, 1)), (r(1, 2), r(1, 2))]),
            Err(Error::EndpointsNotFixed)
        ));
    }

    #[test]
    fn canonical_collapse() {
        // the nodes at 1/8 and 1/4 sit on the initial slope-1/2 segment
        // and vanish; the genuine breaks at 1/2 and 3/4 survive
        let m = map("0,0 1/8,1/16 1/4,1/8 1/2,1/4 3/4,1/2 1,1");
        assert_eq!(m, map("0,0 1/2,1/4 3/4,1/2 1,1"));
        assert_eq!(m.breakpoints(), vec![r(1, 2), r(3, 4)]);
        // a fully collinear interior collapses to the identity
        assert!(map("0,0 1/3,1/3 2/3,2/3 1,1").is_identity());
    }

    #[test]
    fn evaluation() {
        let a = map("0,0 1/2,1/4 3/4,1/2 1,1");
        assert_eq!(a.at(&r(0, 1)), r(0, 1));
        assert_eq!(a.at(&r(1, 1)), r(1, 1));
        assert_eq!(a.at(&r(1, 2)), r(1, 4));
        assert_eq!(a.at(&r(5, 8)), r(3, 8));
        assert_eq!(a.at(&r(7, 8)), r(3, 4));
        assert!(matches!(a.evaluate(&r(3, 2)), Err(Error::OutOfDomain(_))));
        assert_eq!(a.preimage(&r(3, 8)), r(5, 8));
    }

    #[test]
    fn composition_and_inverse() {
        let a = map("0,0 1/2,1/4 3/4,1/2 1,1");
        let aa = a.then(&a);
        assert_eq!(aa.at(&r(1, 2)), r(1, 8));
        assert_eq!(a.inverse(), map("0,0 1/4,1/2 1/2,3/4 1,1"));
        assert_eq!(a.then(&a.inverse()), PLMap::identity());
        assert_eq!(a.inverse().then(&a), PLMap::identity());
        assert_eq!(a.pow(2), aa);
        assert_eq!(a.pow(-1), a.inverse());
        assert_eq!(a.pow(0), PLMap::identity());
        assert_eq!(a.pow(3), a.then(&a).then(&a));
        assert_eq!(a.pow(-2).then(&a.pow(2)), PLMap::identity());
    }

    #[test]
    fn right_action_order() {
        // (x)(fg) must equal ((x)f)g, i.e. `then` applies the left factor first
        let a = map("0,0 1/2,1/4 3/4,1/2 1,1");
        let b = map("0,0 1/4,1/4 3/8,5/16 7/16,3/8 1/2,1/2 1,1");
        let x = r(3, 8);
        assert_eq!(a.then(&b).at(&x), b.at(&a.at(&x)));
        assert_eq!(b.then(&a).at(&x), a.at(&b.at(&x)));
    }

    #[test]
    fn components_and_slopes() {
        let a = map("0,0 1/2,1/4 3/4,1/2 1,1");
        let comps = a.affine_components();
        assert_eq!(
            comps,
            vec![
                (Interval::new(r(0, 1), r(1, 2)), r(1, 2)),
                (Interval::new(r(1, 2), r(3, 4)), r(1, 1)),
                (Interval::new(r(3, 4), r(1, 1)), r(2, 1)),
            ]
        );
        assert_eq!(
            PLMap::identity().affine_components(),
            vec![(Interval::unit(), r(1, 1))]
        );
        assert_eq!(a.breakpoints(), vec![r(1, 2), r(3, 4)]);
        assert_eq!(a.slope_right_of(&r(0, 1)), r(1, 2));
        assert_eq!(a.slope_right_of(&r(1, 2)), r(1, 1));
        assert_eq!(a.slope_right_of(&r(5, 8)), r(1, 1));

        assert_eq!(a.boundary_slopes(&Interval::unit()), Ok((r(1, 2), r(2, 1))));
        assert_eq!(
            a.inverse().boundary_slopes(&Interval::unit()),
            Ok((r(2, 1), r(1, 2)))
        );
        assert!(matches!(
            a.boundary_slopes(&Interval::new(r(1, 4), r(1, 2))),
            Err(Error::NotAnOrbital(_))
        ));
    }

    #[test]
    fn conjugation_and_commutator() {
        let a = map("0,0 1/2,1/4 3/4,1/2 1,1");
        let c = map("0,0 1/4,1/2 1,1");
        let conj = a.conjugate(&c);
        // (x)(c^-1 a c) checked pointwise at a few rationals
        for x in [r(1, 8), r(1, 3), r(2, 3), r(15, 16)] {
            assert_eq!(conj.at(&x), c.at(&a.at(&c.inverse().at(&x))));
        }
        assert_eq!(commutator(&a, &a), PLMap::identity());
        let id = PLMap::identity();
        assert_eq!(commutator(&a, &id), PLMap::identity());
    }

    #[test]
    fn display_round_trip() {
        let s = "0,0 1/2,1/4 3/4,1/2 1,1";
        assert_eq!(map(s).to_string(), s);
        assert_eq!(PLMap::identity().to_string(), "0,0 1,1");
    }
}
