//! Canonical constructions: the model bump, rescaled one-bump maps,
//! crossing pairs, nested fundamental towers, and wreath-style commuting
//! generator pairs.
//!
//! Everything here is built from one fixed map — the model bump with
//! slopes `{1/2, 1, 2}` — so node coordinates stay dyadic and small. All
//! outputs are deterministic fixtures: the same call always returns the
//! same maps, which is what makes them usable as frozen test values.

use crate::chain::Tower;
use crate::error::Error;
use crate::interval::{Interval, Relation};
use crate::orbital::{fundamental_domain, GenSet, SignedOrbital};
use crate::plmap::PLMap;
use crate::rat::Rat;

/// Towers deeper than this are refused: each level shrinks the orbital by
/// a factor of 4, so the cap keeps node denominators within reason.
pub const MAX_TOWER_DEPTH: usize = 32;

/// The model bump: one orbital `(0,1)`, moving points left, with nodes
/// `(0,0), (1/2,1/4), (3/4,1/2), (1,1)` and slopes `1/2, 1, 2`.
pub fn model_bump() -> PLMap {
    PLMap::new(vec![
        (Rat::zero(), Rat::zero()),
        (Rat::new(1, 2), Rat::new(1, 4)),
        (Rat::new(3, 4), Rat::new(1, 2)),
        (Rat::one(), Rat::one()),
    ])
    .expect("model bump nodes are valid")
}

/// Carries a map of the unit interval onto `a` by rescaling both axes
/// with `t ↦ a.left + length(a)·t` and extending by the identity
/// outside. Orbitals of the input land on their rescaled images inside
/// `a`; slopes are unchanged.
pub fn rescale_into(f: &PLMap, a: &Interval) -> PLMap {
    let scale = a.length();
    let place = |t: &Rat| a.left() + &scale * t;
    let mut nodes: Vec<(Rat, Rat)> = Vec::with_capacity(f.nodes().len() + 2);
    if !a.left().is_zero() {
        nodes.push((Rat::zero(), Rat::zero()));
    }
    for (x, y) in f.nodes() {
        nodes.push((place(x), place(y)));
    }
    if a.right() != &Rat::one() {
        nodes.push((Rat::one(), Rat::one()));
    }
    PLMap::new(nodes).expect("rescaled nodes are valid")
}

/// The model bump carried affinely onto `a` (both axes rescaled by
/// `x ↦ a.left + length(a)·x`), extended by the identity outside.
/// The result has orbitals exactly `[a]` and boundary slopes `(1/2, 2)`.
pub fn one_bump(a: &Interval) -> PLMap {
    rescale_into(&model_bump(), a)
}

/// A piecewise-linear homeomorphism of `[0,1]` that is affine on `from`
/// and carries it onto `to`, interpolating linearly outside. Fails with
/// the underlying validation error when the endpoints cannot be matched
/// monotonically (for instance `from` touching `0` while `to` does not).
pub fn affine_carrier(from: &Interval, to: &Interval) -> Result<PLMap, Error> {
    let mut nodes = vec![(Rat::zero(), Rat::zero())];
    if !from.left().is_zero() || !to.left().is_zero() {
        nodes.push((from.left().clone(), to.left().clone()));
    }
    if from.right() != &Rat::one() || to.right() != &Rat::one() {
        nodes.push((from.right().clone(), to.right().clone()));
    }
    nodes.push((Rat::one(), Rat::one()));
    PLMap::new(nodes)
}

/// The standard crossing pair: bumps on `(0, 3/4)` and `(1/4, 1)`.
/// Their orbitals overlap on `(1/4, 3/4)` without either containing the
/// other, so the pair is the smallest transition-chain fixture.
pub fn crossing_pair() -> (PLMap, PLMap) {
    (
        one_bump(&Interval::new(Rat::zero(), Rat::new(3, 4))),
        one_bump(&Interval::new(Rat::new(1, 4), Rat::one())),
    )
}

/// A strictly nested tower of one-bump maps, `depth` levels deep.
///
/// Level 1 is the bump on `(0,1)`; each further level is the bump on the
/// open interior of the fundamental domain of the previous level anchored
/// at its orbital's midpoint. That placement makes every nested pair
/// fundamental by construction, so the tower passes every witness-interval
/// precondition. Returns the generators (outermost first) alongside the
/// tower.
pub fn nested_tower(depth: usize) -> Result<(GenSet, Tower), Error> {
    assert!(depth >= 1, "towers have at least one level");
    if depth > MAX_TOWER_DEPTH {
        return Err(Error::ResourceLimit(MAX_TOWER_DEPTH));
    }
    let mut orbital = Interval::unit();
    let mut generators = Vec::with_capacity(depth);
    let mut elements = Vec::with_capacity(depth);
    for _ in 0..depth {
        let f = one_bump(&orbital);
        let next = fundamental_domain(&orbital.midpoint(), &f, &orbital)
            .expect("midpoint lies in the orbital")
            .interior();
        elements.push(SignedOrbital::new(orbital.clone(), f.clone()).expect("own orbital"));
        generators.push(f);
        orbital = next;
    }
    let tower = Tower::new(elements).expect("nested orbitals form a chain");
    Ok((GenSet::new(format!("nested-{depth}"), generators), tower))
}

/// A commuting-conjugates pair `{h, f}`: `f` is the bump on `outer`, and
/// `h` is a bump placed inside a fundamental domain of `f`, shrinking
/// `inner` if it does not already fit.
///
/// The anchor is `inner`'s left endpoint when that is interior to
/// `outer`, otherwise `inner`'s midpoint; `h` then lives on the part of
/// `inner` inside the anchored fundamental domain. Because `h`'s support
/// sits inside a single fundamental domain, its conjugates under distinct
/// powers of `f` have pairwise disjoint supports and therefore commute
/// exactly — the finite shadow of a wreath product.
pub fn wreath_generators(inner: &Interval, outer: &Interval) -> Result<GenSet, Error> {
    if inner.relation(outer) != Relation::ProperSub {
        return Err(Error::NotNested {
            inner: inner.clone(),
            outer: outer.clone(),
        });
    }
    let f = one_bump(outer);
    let anchor = if inner.left() > outer.left() {
        inner.left().clone()
    } else {
        inner.midpoint()
    };
    // the rightward orientation of f maps the anchor strictly right, so
    // (anchor, min(inner.right, anchor·f⃗)) is nonempty and fundamental
    let step = f.inverse().at(&anchor);
    let right = inner.right().clone().min(step);
    let h = one_bump(&Interval::new(anchor, right));
    Ok(GenSet::new("wreath", vec![h, f]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::{detect_transition_chain, is_fundamental, product_orbital_check};
    use crate::countability::{corners, witness_intervals};
    use crate::io::parse_map;
    use crate::orbital::{group_orbitals, orbitals, GenSet};
    use crate::plmap::commutator;

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(n, d)
    }

    fn iv(ln: i64, ld: i64, rn: i64, rd: i64) -> Interval {
        Interval::new(Rat::new(ln, ld), Rat::new(rn, rd))
    }

    fn map(s: &str) -> PLMap {
        parse_map(s).unwrap()
    }

    #[test]
    fn model_bump_shape() {
        let a = model_bump();
        assert_eq!(a, map("0,0 1/2,1/4 3/4,1/2 1,1"));
        assert_eq!(orbitals(&a), vec![Interval::unit()]);
        assert_eq!(
            a.boundary_slopes(&Interval::unit()).unwrap(),
            (r(1, 2), r(2, 1))
        );
    }

    #[test]
    fn rescaled_bumps() {
        assert_eq!(one_bump(&Interval::unit()), model_bump());
        assert_eq!(
            one_bump(&iv(1, 4, 1, 2)),
            map("0,0 1/4,1/4 3/8,5/16 7/16,3/8 1/2,1/2 1,1")
        );
        assert_eq!(
            one_bump(&iv(1, 4, 1, 1)),
            map("0,0 1/4,1/4 5/8,7/16 13/16,5/8 1,1")
        );
        for a in [iv(1, 4, 1, 2), iv(0, 1, 3, 4), iv(1, 3, 8, 9)] {
            let f = one_bump(&a);
            assert_eq!(orbitals(&f), vec![a.clone()]);
            assert_eq!(f.boundary_slopes(&a).unwrap(), (r(1, 2), r(2, 1)));
        }
    }

    #[test]
    fn rescaling_is_conjugation() {
        // carrying the bump on B onto A by any map that is affine on B
        // gives exactly the bump on A
        let pairs = [
            (iv(1, 2, 3, 4), iv(1, 4, 1, 2)),
            (iv(1, 4, 3, 8), iv(1, 8, 5, 8)),
            (iv(1, 3, 2, 3), iv(1, 3, 2, 3)),
        ];
        for (b, a) in &pairs {
            let c = affine_carrier(b, a).unwrap();
            assert_eq!(c.image_of(b), *a);
            assert_eq!(one_bump(b).conjugate(&c), one_bump(a));
        }
        assert_eq!(
            affine_carrier(&Interval::unit(), &Interval::unit()).unwrap(),
            PLMap::identity()
        );
        // a carrier cannot pull an interior endpoint to the boundary
        assert!(affine_carrier(&iv(0, 1, 1, 2), &iv(1, 4, 1, 2)).is_err());
    }

    #[test]
    fn crossing_pair_is_a_transition_chain() {
        let (f, g) = crossing_pair();
        assert_eq!(orbitals(&f), vec![iv(0, 1, 3, 4)]);
        assert_eq!(orbitals(&g), vec![iv(1, 4, 1, 1)]);
        let cert = detect_transition_chain(&[f.clone(), g.clone()]).unwrap();
        assert_eq!(cert.overlap, iv(1, 4, 3, 4));
        assert!(cert.verify());
        let gens = GenSet::new("crossing", vec![f.clone(), g.clone()]);
        assert_eq!(group_orbitals(&gens), vec![Interval::unit()]);
        assert_eq!(corners(&f, &g), vec![r(7, 12)]);
    }

    #[test]
    fn nested_tower_levels() {
        let (gens, tower) = nested_tower(1).unwrap();
        assert_eq!(gens.generators(), &[model_bump()]);
        assert_eq!(tower.len(), 1);
        assert_eq!(tower.elements()[0].orbital(), &Interval::unit());

        let (gens, tower) = nested_tower(2).unwrap();
        assert_eq!(
            gens.generators(),
            &[model_bump(), one_bump(&iv(1, 4, 1, 2))]
        );
        assert_eq!(tower.elements()[0].orbital(), &iv(1, 4, 1, 2));

        let (_, tower) = nested_tower(3).unwrap();
        let orbs: Vec<&Interval> = tower.elements().iter().map(|e| e.orbital()).collect();
        assert_eq!(
            orbs,
            vec![&iv(5, 16, 3, 8), &iv(1, 4, 1, 2), &Interval::unit()]
        );
    }

    #[test]
    fn nested_towers_pass_every_chain_check() {
        for depth in 1..=6 {
            let (gens, tower) = nested_tower(depth).unwrap();
            assert_eq!(detect_transition_chain(gens.generators()), None);
            assert!(is_fundamental(tower.elements()));
            assert!(product_orbital_check(tower.elements()).unwrap().verified);
            let ws = witness_intervals(&tower).unwrap();
            assert_eq!(ws.len(), depth);
            for i in 0..ws.len() {
                for j in i + 1..ws.len() {
                    assert_eq!(ws[i].relation(&ws[j]), Relation::Disjoint);
                }
            }
        }
        // frozen depth-3 witnesses
        let (_, tower) = nested_tower(3).unwrap();
        assert_eq!(
            witness_intervals(&tower).unwrap(),
            vec![iv(5, 16, 3, 8), iv(1, 4, 19, 64), iv(0, 1, 3, 16)]
        );
    }

    #[test]
    fn tower_depth_is_capped() {
        assert!(nested_tower(MAX_TOWER_DEPTH).is_ok());
        assert_eq!(
            nested_tower(MAX_TOWER_DEPTH + 1),
            Err(Error::ResourceLimit(MAX_TOWER_DEPTH))
        );
    }

    #[test]
    fn wreath_pair_commutes_under_conjugation() {
        let gens = wreath_generators(&iv(5, 16, 3, 8), &iv(1, 4, 1, 2)).unwrap();
        let (h, f) = (&gens.generators()[0], &gens.generators()[1]);
        assert_eq!(f, &one_bump(&iv(1, 4, 1, 2)));
        assert_eq!(orbitals(h), vec![iv(5, 16, 3, 8)]);
        assert!(commutator(h, &h.conjugate(f)).is_identity());
        for i in -3..=3i64 {
            for j in -3..=3i64 {
                if i == j {
                    continue;
                }
                let hi = h.conjugate(&f.pow(i));
                let hj = h.conjugate(&f.pow(j));
                assert!(
                    commutator(&hi, &hj).is_identity(),
                    "conjugates by f^{i} and f^{j} fail to commute"
                );
            }
        }
        assert_eq!(group_orbitals(&gens), vec![iv(1, 4, 1, 2)]);
    }

    #[test]
    fn wreath_shrinks_oversized_inners() {
        // inner shares outer's left end, so the anchor falls back to the
        // midpoint and the support shrinks into a fundamental domain
        let gens = wreath_generators(&iv(1, 4, 3, 8), &iv(1, 4, 1, 2)).unwrap();
        let h = &gens.generators()[0];
        assert_eq!(orbitals(h), vec![iv(5, 16, 3, 8)]);

        // a wide inner is trimmed on the right
        let gens = wreath_generators(&iv(5, 16, 1, 2), &iv(1, 4, 1, 2)).unwrap();
        let h = &gens.generators()[0];
        assert_eq!(orbitals(h), vec![iv(5, 16, 3, 8)]);

        assert_eq!(
            wreath_generators(&Interval::unit(), &iv(1, 4, 1, 2)),
            Err(Error::NotNested {
                inner: Interval::unit(),
                outer: iv(1, 4, 1, 2),
            })
        );
    }
}
