//! Orbitals: where a map actually moves points.
//!
//! The support of a map `f` — the set of `x` with `(x)f ≠ x` — is open,
//! so it decomposes into maximal open intervals. Those intervals are the
//! *orbitals* of `f`. On each orbital `f` moves every point the same way
//! (all rightward or all leftward), which gives each orbital a direction.
//! A [`SignedOrbital`] remembers both the interval and the map it came
//! from; the map is called the orbital's *signature*.
//!
//! Fixed-point sets of PL maps are computed exactly: on each affine piece
//! the equation `(x)f = x` is linear, so the support decomposes with
//! rational endpoints and no approximation.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::interval::{Interval, Relation};
use crate::plmap::PLMap;
use crate::rat::Rat;

/// Which way a map pushes points on one of its orbitals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Direction {
    Right,
    Left,
}

/// Half-open interval `[lo, hi)`, used for fundamental domains.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HalfOpen {
    lo: Rat,
    hi: Rat,
}

impl HalfOpen {
    pub fn new(lo: Rat, hi: Rat) -> Self {
        assert!(lo < hi, "empty half-open interval");
        HalfOpen { lo, hi }
    }

    pub fn lo(&self) -> &Rat {
        &self.lo
    }

    pub fn hi(&self) -> &Rat {
        &self.hi
    }

    pub fn contains_point(&self, x: &Rat) -> bool {
        &self.lo <= x && x < &self.hi
    }

    /// Whether the open interval sits inside `[lo, hi)`.
    pub fn contains_interval(&self, iv: &Interval) -> bool {
        &self.lo <= iv.left() && iv.right() <= &self.hi
    }

    /// The open interior `(lo, hi)`.
    pub fn interior(&self) -> Interval {
        Interval::new(self.lo.clone(), self.hi.clone())
    }
}

impl fmt::Display for HalfOpen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {})", self.lo, self.hi)
    }
}

impl fmt::Debug for HalfOpen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An orbital together with the map it belongs to.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSignedOrbital", into = "RawSignedOrbital")]
pub struct SignedOrbital {
    orbital: Interval,
    signature: PLMap,
}

impl SignedOrbital {
    pub fn new(orbital: Interval, signature: PLMap) -> Result<Self, Error> {
        if !orbitals(&signature).contains(&orbital) {
            return Err(Error::NotAnOrbital(orbital));
        }
        Ok(SignedOrbital { orbital, signature })
    }

    pub(crate) fn new_unchecked(orbital: Interval, signature: PLMap) -> Self {
        debug_assert!(orbitals(&signature).contains(&orbital));
        SignedOrbital { orbital, signature }
    }

    pub fn orbital(&self) -> &Interval {
        &self.orbital
    }

    pub fn signature(&self) -> &PLMap {
        &self.signature
    }

    pub fn direction(&self) -> Direction {
        let mid = self.orbital.midpoint();
        if self.signature.at(&mid) > mid {
            Direction::Right
        } else {
            Direction::Left
        }
    }

    /// The signature or its inverse, whichever moves points of this
    /// orbital rightward.
    pub fn oriented_rightward(&self) -> PLMap {
        match self.direction() {
            Direction::Right => self.signature.clone(),
            Direction::Left => self.signature.inverse(),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct RawSignedOrbital {
    orbital: Interval,
    signature: PLMap,
}

impl TryFrom<RawSignedOrbital> for SignedOrbital {
    type Error = Error;
    fn try_from(raw: RawSignedOrbital) -> Result<Self, Error> {
        SignedOrbital::new(raw.orbital, raw.signature)
    }
}

impl From<SignedOrbital> for RawSignedOrbital {
    fn from(so: SignedOrbital) -> Self {
        RawSignedOrbital {
            orbital: so.orbital,
            signature: so.signature,
        }
    }
}

impl fmt::Display for SignedOrbital {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.orbital, self.signature)
    }
}

impl fmt::Debug for SignedOrbital {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A finite ordered generating set. Generators are labeled `g1, g2, …`
/// in listed order; duplicates are legal but worth flagging to users.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenSet {
    name: String,
    generators: Vec<PLMap>,
}

impl GenSet {
    pub fn new(name: impl Into<String>, generators: Vec<PLMap>) -> Self {
        assert!(!generators.is_empty(), "empty generating set");
        GenSet {
            name: name.into(),
            generators,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generators(&self) -> &[PLMap] {
        &self.generators
    }

    pub fn label(&self, index: usize) -> String {
        format!("g{}", index + 1)
    }

    /// Index pairs of generators that are equal as maps.
    pub fn duplicates(&self) -> Vec<(usize, usize)> {
        let mut dups = Vec::new();
        for i in 0..self.generators.len() {
            for j in i + 1..self.generators.len() {
                if self.generators[i] == self.generators[j] {
                    dups.push((i, j));
                }
            }
        }
        dups
    }
}

/// One letter of a word: a generator index, possibly inverted.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter {
    pub index: usize,
    pub inverse: bool,
}

/// A freely reduced word over a generating set.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Whether appending `l` would cancel against the last letter.
    pub fn cancels(&self, l: Letter) -> bool {
        self.letters
            .last()
            .map_or(false, |last| last.index == l.index && last.inverse != l.inverse)
    }

    pub fn extended(&self, l: Letter) -> Word {
        debug_assert!(!self.cancels(l), "word would not be freely reduced");
        let mut letters = self.letters.clone();
        letters.push(l);
        Word { letters }
    }

    /// The group element the word spells, multiplying left to right.
    pub fn element(&self, gens: &GenSet) -> PLMap {
        let mut acc = PLMap::identity();
        for l in &self.letters {
            let g = &gens.generators()[l.index];
            let m = if l.inverse { g.inverse() } else { g.clone() };
            acc = acc.then(&m);
        }
        acc
    }
}

impl fmt::Display for Word {
    /// `g1 g2^-1 g1`; the empty word prints as `e`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "g{}", l.index + 1)?;
            if l.inverse {
                write!(f, "^-1")?;
            }
        }
        Ok(())
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All orbitals of `f`, ascending and pairwise disjoint.
pub fn orbitals(f: &PLMap) -> Vec<Interval> {
    // Closed components of the fixed-point set, as (lo, hi) with lo <= hi.
    // 0 and 1 are always fixed.
    let mut fixed: Vec<(Rat, Rat)> = vec![
        (Rat::zero(), Rat::zero()),
        (Rat::one(), Rat::one()),
    ];
    for w in f.nodes().windows(2) {
        let (x0, y0) = &w[0];
        let (x1, y1) = &w[1];
        let run = x1 - x0;
        let rise = y1 - y0;
        if rise == run {
            // slope one: fixed on the whole piece or nowhere
            if y0 == x0 {
                fixed.push((x0.clone(), x1.clone()));
            }
        } else {
            // solve y0 + (x - x0) rise/run = x on [x0, x1]
            let x_star = (y0 * &run - x0 * &rise) / (&run - &rise);
            if &x_star >= x0 && &x_star <= x1 {
                fixed.push((x_star.clone(), x_star));
            }
        }
    }
    fixed.sort();
    let mut merged: Vec<(Rat, Rat)> = Vec::with_capacity(fixed.len());
    for (lo, hi) in fixed {
        match merged.last_mut() {
            Some(last) if lo <= last.1 => {
                if hi > last.1 {
                    last.1 = hi;
                }
            }
            _ => merged.push((lo, hi)),
        }
    }
    merged
        .windows(2)
        .map(|w| Interval::new(w[0].1.clone(), w[1].0.clone()))
        .collect()
}

impl PLMap {
    /// All orbitals, ascending. See [`orbitals`].
    pub fn orbitals(&self) -> Vec<Interval> {
        orbitals(self)
    }
}

/// Restriction of `f` to one orbital, extended by the identity: equal to
/// `f` on the orbital, identity elsewhere.
pub fn bump(f: &PLMap, orbital: &Interval) -> Result<PLMap, Error> {
    if !orbitals(f).contains(orbital) {
        return Err(Error::NotAnOrbital(orbital.clone()));
    }
    let mut nodes = Vec::new();
    if !orbital.left().is_zero() {
        nodes.push((Rat::zero(), Rat::zero()));
    }
    nodes.push((orbital.left().clone(), orbital.left().clone()));
    for (x, y) in f.nodes() {
        if orbital.contains_point(x) {
            nodes.push((x.clone(), y.clone()));
        }
    }
    nodes.push((orbital.right().clone(), orbital.right().clone()));
    if !orbital.right().is_one() {
        nodes.push((Rat::one(), Rat::one()));
    }
    Ok(PLMap::new(nodes).expect("restriction of a homeomorphism is valid"))
}

/// Which way `f` moves points on one of its orbitals.
pub fn direction(f: &PLMap, orbital: &Interval) -> Result<Direction, Error> {
    if !orbitals(f).contains(orbital) {
        return Err(Error::NotAnOrbital(orbital.clone()));
    }
    let mid = orbital.midpoint();
    Ok(if f.at(&mid) > mid {
        Direction::Right
    } else {
        Direction::Left
    })
}

/// Fundamental domain of `f` on one of its orbitals, anchored at `x`:
/// `[x, (x)f)` for a rightward orbital, normalized to `[(x)f, x)` for a
/// leftward one. Iterating `f` tiles the orbital by translates of this
/// half-open interval.
pub fn fundamental_domain(x: &Rat, f: &PLMap, orbital: &Interval) -> Result<HalfOpen, Error> {
    if !orbitals(f).contains(orbital) {
        return Err(Error::NotAnOrbital(orbital.clone()));
    }
    if !orbital.contains_point(x) {
        return Err(Error::NotInOrbital {
            point: x.clone(),
            orbital: orbital.clone(),
        });
    }
    let fx = f.at(x);
    Ok(if fx > *x {
        HalfOpen::new(x.clone(), fx)
    } else {
        HalfOpen::new(fx, x.clone())
    })
}

/// Whether `a` sits inside some fundamental domain of the signed orbital
/// `b` — equivalently, whether the rightward-oriented signature maps `a`
/// entirely off itself. Requires `a` properly inside `b`'s orbital.
pub fn lies_in_fundamental_domain(a: &Interval, b: &SignedOrbital) -> Result<bool, Error> {
    if a.relation(b.orbital()) != Relation::ProperSub {
        return Err(Error::NotNested {
            inner: a.clone(),
            outer: b.orbital().clone(),
        });
    }
    let g = b.oriented_rightward();
    Ok(g.image_of(a).relation(a) == Relation::Disjoint)
}

/// Connected components of the union of all generators' supports. Any
/// word over the generators fixes whatever every generator fixes, so
/// these are exactly the orbitals of the generated group.
pub fn group_orbitals(g: &GenSet) -> Vec<Interval> {
    let mut all: Vec<Interval> = g.generators().iter().flat_map(orbitals).collect();
    all.sort();
    let mut merged: Vec<Interval> = Vec::new();
    for iv in all {
        match merged.last_mut() {
            // strict overlap merges; touching endpoints stay separate
            // because the shared endpoint is fixed by every generator
            Some(last) if iv.left() < last.right() => {
                if iv.right() > last.right() {
                    *last = Interval::new(last.left().clone(), iv.right().clone());
                }
            }
            _ => merged.push(iv),
        }
    }
    merged
}

/// Breadth-first search for a word `w` with `(x)w > y`, scanning freely
/// reduced words of length at most `radius` in lexicographic order
/// (`g1 < g1⁻¹ < g2 < …`), so the result is the lexicographically first
/// success at the smallest length. `None` means no word within the
/// radius — not a proof that no mover exists.
///
/// Requires `x < y` and both points inside the same group orbital.
pub fn find_mover(
    g: &GenSet,
    x: &Rat,
    y: &Rat,
    radius: usize,
) -> Result<Option<Word>, Error> {
    assert!(x < y, "need x < y");
    let comps = group_orbitals(g);
    let cx = comps.iter().find(|c| c.contains_point(x));
    let cy = comps.iter().find(|c| c.contains_point(y));
    match (cx, cy) {
        (Some(a), Some(b)) if a == b => {}
        _ => {
            return Err(Error::NotSameOrbital {
                x: x.clone(),
                y: y.clone(),
            })
        }
    }

    let mut letters = Vec::with_capacity(g.generators().len() * 2);
    for (i, m) in g.generators().iter().enumerate() {
        letters.push((m.clone(), Letter { index: i, inverse: false }));
        letters.push((m.inverse(), Letter { index: i, inverse: true }));
    }

    // carry (word, (x)word); children inherit lexicographic order
    let mut level: Vec<(Word, Rat)> = vec![(Word::empty(), x.clone())];
    for _ in 0..radius {
        let mut next = Vec::new();
        for (w, val) in &level {
            for (m, l) in &letters {
                if w.cancels(*l) {
                    continue;
                }
                let nv = m.at(val);
                let nw = w.extended(*l);
                if nv > *y {
                    return Ok(Some(nw));
                }
                next.push((nw, nv));
            }
        }
        level = next;
    }
    Ok(None)
}
