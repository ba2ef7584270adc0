//! Desk-scale countability machinery.
//!
//! The countability argument for orbitals of a chain-free group rests on
//! four finite constructions, all implemented here exactly:
//!
//! * *witness intervals* — pairwise disjoint intervals, one per tower
//!   element, pinning each signed orbital to its own patch of `[0,1]`;
//! * the *length partition* `I_n = ((2/3)^n, (2/3)^{n-1}]` of `(0,1]`,
//!   compared with exact rationals rather than logarithms;
//! * *bouncepoints* and *corners* — the two ways a pair of maps can agree
//!   at a point and diverge to its right, classified by whether the point
//!   breaks an affine component;
//! * the *bump code* — the finite slope/bouncepoint record that separates
//!   distinct one-bump maps sharing an orbital.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::chain::{detect_transition_chain, fundamental_violation, Tower};
use crate::error::Error;
use crate::interval::{Interval, Relation};
use crate::orbital::orbitals;
use crate::plmap::PLMap;
use crate::rat::Rat;

/// The class `I_n = ((2/3)^n, (2/3)^{n-1}]` of the length partition of
/// `(0,1]`. Indices start at 1 (`I_1 = (2/3, 1]`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct LengthClass {
    index: u32,
}

impl LengthClass {
    pub fn index(&self) -> u32 {
        self.index
    }

    /// The class interval as (exclusive lower, inclusive upper) bounds.
    pub fn bounds(&self) -> (Rat, Rat) {
        let r = Rat::new(2, 3);
        (r.pow(self.index as i32), r.pow(self.index as i32 - 1))
    }

    pub fn contains(&self, length: &Rat) -> bool {
        let (lo, hi) = self.bounds();
        &lo < length && length <= &hi
    }
}

impl fmt::Display for LengthClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "I_{}", self.index)
    }
}

/// The unique `n` with `(2/3)^n < length(A) <= (2/3)^{n-1}`, found by
/// exact comparison against descending powers of `2/3`.
pub fn length_class(a: &Interval) -> LengthClass {
    let len = a.length();
    let ratio = Rat::new(2, 3);
    let mut upper = Rat::one(); // (2/3)^(n-1) for the current candidate n
    let mut n = 1u32;
    loop {
        let lower = &upper * &ratio;
        if len > lower {
            return LengthClass { index: n };
        }
        upper = lower;
        n += 1;
    }
}

/// One pairwise-disjoint interval per tower element, built with the
/// canonical choices: for each non-minimal element the base is its
/// immediate predecessor and the sample point is that base's midpoint.
///
/// The minimum element witnesses itself by its own orbital. Every other
/// element `(A, f)` with `A = (a, ·)` gets `(a, c)` where `c` is the
/// sample point pulled back one step through the rightward-oriented
/// signature — a point that fundamentality forces strictly left of the
/// base orbital, which is what makes the results disjoint.
pub fn witness_intervals(t: &Tower) -> Result<Vec<Interval>, Error> {
    let choices: Vec<(usize, Rat)> = (1..t.len())
        .map(|i| (i - 1, t.elements()[i - 1].orbital().midpoint()))
        .collect();
    witness_intervals_with(t, &choices)
}

/// [`witness_intervals`] with explicit `(base index, sample point)`
/// choices, one per non-minimal element in ascending tower order. Any
/// base strictly below the element and any point inside the base's
/// orbital produces pairwise disjoint witnesses — the construction does
/// not depend on the canonical choice, and tests exploit that freedom.
///
/// Preconditions, checked up front: the signatures admit no transition
/// chain, and every nested pair of the tower is fundamental. (The second
/// does not follow from the first for a finite list, but both hold
/// automatically when the signatures generate a chain-free group, which
/// is the situation the construction models.)
pub fn witness_intervals_with(
    t: &Tower,
    choices: &[(usize, Rat)],
) -> Result<Vec<Interval>, Error> {
    assert_eq!(
        choices.len(),
        t.len().saturating_sub(1),
        "one (base, point) choice per non-minimal element"
    );
    let sigs: Vec<PLMap> = t.elements().iter().map(|e| e.signature().clone()).collect();
    if let Some(cert) = detect_transition_chain(&sigs) {
        return Err(Error::HasTransitionChain(Box::new(cert)));
    }
    if let Some((inner, outer)) = fundamental_violation(t.elements()) {
        return Err(Error::TowerNotFundamental {
            inner: inner.orbital().clone(),
            outer: outer.orbital().clone(),
        });
    }

    let mut out = Vec::with_capacity(t.len());
    for (i, e) in t.elements().iter().enumerate() {
        if i == 0 {
            out.push(e.orbital().clone());
            continue;
        }
        let (base, x) = &choices[i - 1];
        assert!(*base < i, "witness base must come from the downset");
        let b = t.elements()[*base].orbital();
        if !b.contains_point(x) {
            return Err(Error::NotInOrbital {
                point: x.clone(),
                orbital: b.clone(),
            });
        }
        let c = e.oriented_rightward().preimage(x);
        out.push(Interval::new(e.orbital().left().clone(), c));
    }
    Ok(out)
}

/// Checks that intervals sharing a length class with `o` and crossing
/// nothing are totally ordered by containment.
///
/// Preconditions (violations are reported with the offending pair): every
/// pool member intersects `o`, no two of `pool ∪ {o}` cross, and every
/// pool member shares `o`'s length class. Under these the answer is
/// always `true` — two disjoint subintervals of `o` would each need
/// length above `(2/3)^n` while fitting side by side into at most
/// `(2/3)^(n-1) = (3/2)·(2/3)^n`, which is impossible — so a `false`
/// signals a bug rather than a mathematical possibility.
pub fn chain_partition_check(pool: &[Interval], o: &Interval) -> Result<bool, Error> {
    let fail = |a: &Interval, b: &Interval, why: &str| Error::PartitionPrecondition {
        a: a.clone(),
        b: b.clone(),
        why: why.to_string(),
    };
    let class = length_class(o);
    for a in pool {
        if a.intersection(o).is_none() {
            return Err(fail(a, o, "does not intersect the reference interval"));
        }
        if length_class(a) != class {
            return Err(fail(a, o, "length class differs from the reference interval"));
        }
    }
    let all: Vec<&Interval> = pool.iter().chain(std::iter::once(o)).collect();
    for i in 0..all.len() {
        for j in i + 1..all.len() {
            if all[i].relation(all[j]) == Relation::Crossing {
                return Err(fail(all[i], all[j], "the intervals cross"));
            }
        }
    }
    Ok((0..all.len()).all(|i| {
        (i + 1..all.len()).all(|j| {
            matches!(
                all[i].relation(all[j]),
                Relation::Equal | Relation::ProperSub | Relation::ProperSup
            )
        })
    }))
}

/// Whether `f` and `g` agree at `b` and diverge immediately to its
/// right. For piecewise-linear maps "diverge on some `(b, c)`" is
/// exactly "different slopes leaving `b`".
fn equal_then_diverging(b: &Rat, f: &PLMap, g: &PLMap) -> bool {
    f.at(b) == g.at(b) && f.slope_right_of(b) != g.slope_right_of(b)
}

/// Points where `f` and `g` agree, diverge to the right, and at least
/// one of the two breaks: the merged breakpoint grid filtered by
/// [`equal_then_diverging`]. Ascending.
pub fn bouncepoints(f: &PLMap, g: &PLMap) -> Vec<Rat> {
    let mut grid = f.breakpoints();
    grid.extend(g.breakpoints());
    grid.sort();
    grid.dedup();
    grid.retain(|b| equal_then_diverging(b, f, g));
    grid
}

/// Points where the graphs of `f` and `g` cross transversally inside an
/// affine component of *both* maps: for every overlapping pair of
/// components with distinct slopes, the unique solution of `f = g` is a
/// corner when it lies strictly inside the overlap. Ascending.
pub fn corners(f: &PLMap, g: &PLMap) -> Vec<Rat> {
    let gcs = g.affine_components();
    let mut out = Vec::new();
    for (fc, fs) in f.affine_components() {
        for (gc, gs) in &gcs {
            if &fs == gs {
                continue;
            }
            let Some(overlap) = fc.intersection(gc) else {
                continue;
            };
            // line of f on fc: y = fs·x + (f(x0) − fs·x0); same for g
            let cf = f.at(fc.left()) - &fs * fc.left();
            let cg = g.at(gc.left()) - gs * gc.left();
            let x = (cg - cf) / (&fs - gs);
            if overlap.contains_point(&x) {
                out.push(x);
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Whether `b` is an endpoint of some orbital of `f g⁻¹`. Bouncepoints
/// and corners always are — they are exactly the points where `f g⁻¹`
/// stops being the identity — and this is the check that says so.
pub fn endpoint_witness(b: &Rat, f: &PLMap, g: &PLMap) -> bool {
    orbitals(&f.then(&g.inverse()))
        .iter()
        .any(|o| o.left() == b || o.right() == b)
}

/// The finite record separating one-bump maps on a shared orbital: the
/// slope leaving the left endpoint, then one `(point, slope leaving)`
/// pair per breakpoint that bounces against some context map.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct BumpCode {
    pub initial_slope: Rat,
    pub steps: Vec<(Rat, Rat)>,
}

impl fmt::Display for BumpCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "slope {}", self.initial_slope)?;
        for (b, s) in &self.steps {
            write!(f, ", at {} slope {}", b, s)?;
        }
        Ok(())
    }
}

impl fmt::Debug for BumpCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Encodes `f` on its orbital `o` relative to a finite context: the
/// initial slope plus, for each breakpoint of `f` inside `o` that is a
/// bouncepoint of `(f, g)` for some context map `g`, the slope of `f`
/// leaving it.
///
/// Every context map must be a single bump with orbital exactly `o`.
/// The context stands in for the ambient group of the original
/// existential definition; taking the full family under study as context
/// is what makes the encoding injective on that family.
pub fn bump_code(f: &PLMap, o: &Interval, context: &[PLMap]) -> Result<BumpCode, Error> {
    if !orbitals(f).contains(o) {
        return Err(Error::NotAnOrbital(o.clone()));
    }
    for (i, g) in context.iter().enumerate() {
        if orbitals(g) != [o.clone()] {
            return Err(Error::ContextOrbitalMismatch { index: i });
        }
    }
    let initial_slope = f.slope_right_of(o.left());
    let steps = f
        .breakpoints()
        .into_iter()
        .filter(|b| o.contains_point(b))
        .filter(|b| context.iter().any(|g| equal_then_diverging(b, f, g)))
        .map(|b| {
            let s = f.slope_right_of(&b);
            (b, s)
        })
        .collect();
    Ok(BumpCode {
        initial_slope,
        steps,
    })
}

/// Result of encoding a family of bumps against itself.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InjectivityReport {
    pub total: usize,
    pub distinct_codes: usize,
    /// Index pairs whose codes collide; empty exactly when the encoding
    /// is injective on the family.
    pub collisions: Vec<(usize, usize)>,
}

/// Encodes every bump with the whole family as context and reports
/// collisions. Pairwise distinct bumps sharing the single orbital `o`
/// must produce pairwise distinct codes.
pub fn check_injectivity(bumps: &[PLMap], o: &Interval) -> Result<InjectivityReport, Error> {
    let codes: Vec<BumpCode> = bumps
        .iter()
        .map(|f| bump_code(f, o, bumps))
        .collect::<Result<_, _>>()?;
    let distinct: BTreeSet<&BumpCode> = codes.iter().collect();
    let mut collisions = Vec::new();
    for i in 0..codes.len() {
        for j in i + 1..codes.len() {
            if codes[i] == codes[j] {
                collisions.push((i, j));
            }
        }
    }
    Ok(InjectivityReport {
        total: bumps.len(),
        distinct_codes: distinct.len(),
        collisions,
    })
}
