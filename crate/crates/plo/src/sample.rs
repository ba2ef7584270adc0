//! Seeded random generators for property tests and verification suites.
//!
//! Everything takes the RNG by argument and draws node coordinates from a
//! rational grid `k/denom`, so a fixed seed reproduces the exact same
//! fixtures — byte for byte — on every run. The generators never emit
//! invalid data: maps are monotone by construction, bumps really have one
//! orbital, towers really are fundamental chains. Tests then probe the
//! library's behavior on those fixtures rather than trusting the
//! generator twice.

use std::collections::BTreeSet;

use rand::Rng;

use crate::chain::Tower;
use crate::construct::rescale_into;
use crate::interval::Interval;
use crate::orbital::SignedOrbital;
use crate::plmap::PLMap;
use crate::rat::Rat;

/// A grid rational strictly between 0 and 1.
pub fn grid_point(rng: &mut impl Rng, denom: i64) -> Rat {
    assert!(denom >= 2);
    Rat::new(rng.gen_range(1..denom), denom)
}

/// A valid interval with grid endpoints (boundary values allowed).
pub fn interval_on_grid(rng: &mut impl Rng, denom: i64) -> Interval {
    assert!(denom >= 2);
    let a = rng.gen_range(0..denom);
    let b = rng.gen_range(a + 1..=denom);
    Interval::new(Rat::new(a, denom), Rat::new(b, denom))
}

/// `count` distinct integers from `1..denom`, ascending.
fn distinct_sorted(rng: &mut impl Rng, count: usize, denom: i64) -> Vec<i64> {
    assert!((count as i64) < denom);
    let mut picked = BTreeSet::new();
    while picked.len() < count {
        picked.insert(rng.gen_range(1..denom));
    }
    picked.into_iter().collect()
}

/// A random homeomorphism with up to `max_interior` interior nodes on the
/// `k/denom` grid. Any two ascending coordinate lists of equal length
/// give a valid map, so no rejection is needed.
pub fn map_on_grid(rng: &mut impl Rng, max_interior: usize, denom: i64) -> PLMap {
    let k = rng.gen_range(0..=max_interior);
    let xs = distinct_sorted(rng, k, denom);
    let ys = distinct_sorted(rng, k, denom);
    let mut nodes = vec![(Rat::zero(), Rat::zero())];
    nodes.extend(
        xs.into_iter()
            .zip(ys)
            .map(|(x, y)| (Rat::new(x, denom), Rat::new(y, denom))),
    );
    nodes.push((Rat::one(), Rat::one()));
    PLMap::new(nodes).expect("ascending grid nodes form a valid map")
}

/// A random one-bump map with orbital exactly `(0,1)`.
///
/// All interior nodes are sampled strictly on one side of the diagonal;
/// the region on either side is convex, so every segment between nodes
/// stays off the diagonal and the whole of `(0,1)` moves. Which side is a
/// coin flip, so the family exercises both directions of motion.
pub fn unit_bump(rng: &mut impl Rng, max_interior: usize, denom: i64) -> PLMap {
    let k = rng.gen_range(1..=max_interior.max(1));
    let below = rng.gen_bool(0.5);
    loop {
        let xs = distinct_sorted(rng, k, denom);
        let ys = distinct_sorted(rng, k, denom);
        let dominated = xs
            .iter()
            .zip(&ys)
            .all(|(x, y)| if below { y < x } else { y > x });
        if !dominated {
            continue;
        }
        let mut nodes = vec![(Rat::zero(), Rat::zero())];
        nodes.extend(
            xs.into_iter()
                .zip(ys)
                .map(|(x, y)| (Rat::new(x, denom), Rat::new(y, denom))),
        );
        nodes.push((Rat::one(), Rat::one()));
        return PLMap::new(nodes).expect("one-sided grid nodes form a valid bump");
    }
}

/// A random bump whose single orbital is exactly `a`: a unit bump carried
/// into `a` by the affine rescaling.
pub fn bump_on(rng: &mut impl Rng, a: &Interval, max_interior: usize, denom: i64) -> PLMap {
    rescale_into(&unit_bump(rng, max_interior, denom), a)
}

/// A random fundamental tower of the given depth, with its signatures.
///
/// Level orbitals descend by choosing a random anchor in the current
/// orbital and taking the open interior of the fundamental domain there,
/// so every nested pair of the result is fundamental by construction and
/// the pool has no transition chains. With `decoy` set, the top orbital
/// leaves room at the right end of `[0,1]` and one randomly chosen
/// signature gets an extra bump there — a second orbital that chain
/// detection and witness construction must tolerate.
pub fn tower(rng: &mut impl Rng, depth: usize, decoy: bool, denom: i64) -> (Vec<PLMap>, Tower) {
    assert!(depth >= 1);
    let mut orbital = if decoy {
        Interval::new(Rat::zero(), Rat::new(7, 8))
    } else {
        Interval::unit()
    };
    let decoy_level = decoy.then(|| rng.gen_range(0..depth));
    let mut signatures = Vec::with_capacity(depth);
    let mut elements: Vec<SignedOrbital> = Vec::with_capacity(depth);
    for level in 0..depth {
        let mut f = bump_on(rng, &orbital, 4, denom);
        if decoy_level == Some(level) {
            let lair = Interval::new(Rat::new(29, 32), Rat::new(31, 32));
            f = f.then(&bump_on(rng, &lair, 3, denom));
        }
        let element = SignedOrbital::new(orbital.clone(), f.clone())
            .expect("constructed signature keeps its orbital");
        signatures.push(f);
        // anchor somewhere in the middle half so the next level keeps room
        let anchor = orbital.left() + &orbital.length() * &Rat::new(rng.gen_range(4..=12), 16);
        let step = element.oriented_rightward().at(&anchor);
        elements.push(element);
        orbital = Interval::new(anchor, step);
    }
    let tower = Tower::new(elements).expect("nested orbitals form a chain");
    (signatures, tower)
}

/// A pair `(f, g)` with a guaranteed bouncepoint, and that point.
///
/// `g = f·h` where `h` is a bump strictly to the right of some value `c`;
/// at `b = (c)f⁻¹` the two maps agree and the extra factor bends `g`
/// away, so `b` lands in `bouncepoints(f, g)` by construction.
pub fn bouncing_pair(rng: &mut impl Rng, denom: i64) -> (PLMap, PLMap, Rat) {
    let f = map_on_grid(rng, 5, denom);
    let c = Rat::new(rng.gen_range(1..denom - 1), denom);
    let lair = Interval::new(c.clone(), Rat::one());
    let h = bump_on(rng, &lair, 3, denom);
    let g = f.then(&h);
    let b = f.preimage(&c);
    (f, g, b)
}

/// `count` pairwise distinct unit bumps, by exact map equality.
pub fn bump_family(rng: &mut impl Rng, count: usize, max_interior: usize, denom: i64) -> Vec<PLMap> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let f = unit_bump(rng, max_interior, denom);
        if seen.insert(f.nodes().to_vec()) {
            out.push(f);
        }
    }
    out
}
