//! Transition chains and towers of signed orbitals.
//!
//! Signed orbitals are partially ordered: `(A, f) < (B, g)` exactly when
//! `A` is properly contained in `B`. Equal orbitals with different
//! signatures are incomparable, as are disjoint or crossing orbitals. A
//! *tower* is a chain in this order. A *transition chain* is a crossing
//! pair — two signed orbitals that overlap without either containing the
//! other. Groups whose elements admit no transition chain are exactly the
//! locally solvable ones, which makes the detector below the operational
//! solvability test for a finite set of maps.
//!
//! Detection over a fixed set of maps is exact and complete. Searching a
//! word ball ([`search_transition_chain`]) is exact over the ball it
//! enumerates, but a clean ball is *not* a proof that the generated group
//! has no transition chain — see [`BallSearch::NoneWithinRadius`].

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::Error;
use crate::interval::{Interval, Relation};
use crate::orbital::{lies_in_fundamental_domain, orbitals, GenSet, Letter, SignedOrbital, Word};
use crate::plmap::PLMap;
use crate::rat::Rat;

/// Outcome of comparing two signed orbitals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignedCmp {
    Less,
    Greater,
    Equal,
    Incomparable,
}

/// All signed orbitals of the given maps, in input order (each map's
/// orbitals ascending). Identity maps contribute nothing.
pub fn signed_orbitals(maps: &[PLMap]) -> Vec<SignedOrbital> {
    maps.iter()
        .flat_map(|m| {
            orbitals(m)
                .into_iter()
                .map(move |o| SignedOrbital::new_unchecked(o, m.clone()))
        })
        .collect()
}

/// Partial order: containment of orbitals, with signatures compared
/// trivially (only identical signatures are equal).
pub fn compare_signed(p: &SignedOrbital, q: &SignedOrbital) -> SignedCmp {
    match p.orbital().relation(q.orbital()) {
        Relation::ProperSub => SignedCmp::Less,
        Relation::ProperSup => SignedCmp::Greater,
        Relation::Equal => {
            if p.signature() == q.signature() {
                SignedCmp::Equal
            } else {
                SignedCmp::Incomparable
            }
        }
        Relation::Disjoint | Relation::Crossing => SignedCmp::Incomparable,
    }
}

/// Pool members strictly below `a`, in pool order. `a` itself (and
/// anything equal to it) is excluded.
pub fn downset(a: &SignedOrbital, pool: &[SignedOrbital]) -> Vec<SignedOrbital> {
    pool.iter()
        .filter(|p| compare_signed(p, a) == SignedCmp::Less)
        .cloned()
        .collect()
}

/// Pool members strictly above `a`, in pool order.
pub fn upset(a: &SignedOrbital, pool: &[SignedOrbital]) -> Vec<SignedOrbital> {
    pool.iter()
        .filter(|p| compare_signed(p, a) == SignedCmp::Greater)
        .cloned()
        .collect()
}

/// A strictly ascending chain of signed orbitals, smallest orbital first.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct Tower {
    elements: Vec<SignedOrbital>,
}

impl Tower {
    /// Sorts the input, drops exact duplicates, and verifies the chain
    /// property (every adjacent pair strictly nested).
    pub fn new(elements: Vec<SignedOrbital>) -> Result<Self, Error> {
        let mut v = elements;
        // proper nesting means strictly shorter, so length sorts a chain
        v.sort_by(|a, b| {
            a.orbital()
                .length()
                .cmp(&b.orbital().length())
                .then_with(|| a.cmp(b))
        });
        v.dedup();
        for w in v.windows(2) {
            if compare_signed(&w[0], &w[1]) != SignedCmp::Less {
                return Err(Error::NotAChain);
            }
        }
        Ok(Tower { elements: v })
    }

    pub(crate) fn from_ascending(elements: Vec<SignedOrbital>) -> Self {
        debug_assert!(elements
            .windows(2)
            .all(|w| compare_signed(&w[0], &w[1]) == SignedCmp::Less));
        Tower { elements }
    }

    pub fn elements(&self) -> &[SignedOrbital] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

impl fmt::Display for Tower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "tower[")?;
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, " < ")?;
            }
            write!(f, "{}", e.orbital())?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Tower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All maximal chains in the pool, each as a tower. Maximal chains are
/// exactly the minimal-to-maximal paths along the cover relation, so the
/// enumeration walks the Hasse diagram. Output is deterministic: the pool
/// is canonicalized first and towers come out sorted by their element
/// sequences.
pub fn maximal_towers(pool: &[SignedOrbital]) -> Vec<Tower> {
    let mut p: Vec<SignedOrbital> = pool.to_vec();
    p.sort();
    p.dedup();
    if p.is_empty() {
        return Vec::new();
    }
    let n = p.len();
    let less = |i: usize, j: usize| compare_signed(&p[i], &p[j]) == SignedCmp::Less;
    let mut covers: Vec<Vec<usize>> = vec![Vec::new(); n];
    for i in 0..n {
        for j in 0..n {
            if less(i, j) && !(0..n).any(|k| less(i, k) && less(k, j)) {
                covers[i].push(j);
            }
        }
    }
    let minimal: Vec<usize> = (0..n).filter(|&i| !(0..n).any(|j| less(j, i))).collect();

    let mut towers = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    fn walk(
        i: usize,
        covers: &[Vec<usize>],
        p: &[SignedOrbital],
        stack: &mut Vec<usize>,
        out: &mut Vec<Tower>,
    ) {
        stack.push(i);
        if covers[i].is_empty() {
            out.push(Tower::from_ascending(
                stack.iter().map(|&k| p[k].clone()).collect(),
            ));
        } else {
            for &j in &covers[i] {
                walk(j, covers, p, stack, out);
            }
        }
        stack.pop();
    }
    for &m in &minimal {
        walk(m, &covers, &p, &mut stack, &mut towers);
    }
    towers.sort_by(|a, b| a.elements.cmp(&b.elements));
    towers
}

/// Whether every nested pair of the pool is fundamental: each smaller
/// orbital lies inside a fundamental domain of each larger one. This is
/// what towers inherit automatically when the generated group has no
/// transition chains.
pub fn is_fundamental(pool: &[SignedOrbital]) -> bool {
    fundamental_violation(pool).is_none()
}

/// First nested pair (inner, outer) violating fundamentality, scanning a
/// canonicalized pool; `None` means the pool is fundamental.
pub fn fundamental_violation(
    pool: &[SignedOrbital],
) -> Option<(SignedOrbital, SignedOrbital)> {
    let mut p: Vec<SignedOrbital> = pool.to_vec();
    p.sort();
    p.dedup();
    for inner in &p {
        for outer in &p {
            if compare_signed(inner, outer) == SignedCmp::Less {
                let ok = lies_in_fundamental_domain(inner.orbital(), outer)
                    .expect("nested pair satisfies the precondition");
                if !ok {
                    return Some((inner.clone(), outer.clone()));
                }
            }
        }
    }
    None
}

/// Conjugates every element of the tower: orbitals map to their images
/// under `c`, signatures to their conjugates. Conjugation preserves the
/// containment order, so the result is again a tower.
pub fn conjugate_tower(t: &Tower, c: &PLMap) -> Tower {
    let elements = t
        .elements()
        .iter()
        .map(|e| {
            SignedOrbital::new_unchecked(
                c.image_of(e.orbital()),
                e.signature().conjugate(c),
            )
        })
        .collect();
    Tower::new(elements).expect("conjugation preserves towers")
}

/// Products of a tower's signatures in both multiplication orders, with
/// the check that the largest orbital survives as an orbital of each
/// product.
#[derive(Debug, Clone, PartialEq)]
pub struct ProductCheck {
    /// `a1 a2 ⋯ an`, smallest signature first.
    pub ascending: PLMap,
    /// `an ⋯ a2 a1`.
    pub descending: PLMap,
    /// The chain's largest orbital is an orbital of both products.
    pub verified: bool,
}

/// Requires a strictly ascending chain (as produced by [`Tower`]).
pub fn product_orbital_check(chain: &[SignedOrbital]) -> Result<ProductCheck, Error> {
    if chain.is_empty()
        || chain
            .windows(2)
            .any(|w| compare_signed(&w[0], &w[1]) != SignedCmp::Less)
    {
        return Err(Error::NotAChain);
    }
    let fold = |iter: &mut dyn Iterator<Item = &SignedOrbital>| {
        iter.fold(PLMap::identity(), |acc, e| acc.then(e.signature()))
    };
    let ascending = fold(&mut chain.iter());
    let descending = fold(&mut chain.iter().rev());
    let top = chain.last().unwrap().orbital();
    let verified =
        orbitals(&ascending).contains(top) && orbitals(&descending).contains(top);
    Ok(ProductCheck {
        ascending,
        descending,
        verified,
    })
}

/// A crossing pair of signed orbitals: the certificate that a transition
/// chain exists. `first` is the orbital reaching further left; `overlap`
/// is the (open, nonempty) intersection. Everything needed to re-verify
/// the certificate is embedded.
#[derive(Clone, PartialEq, Serialize)]
pub struct ChainCertificate {
    pub first: SignedOrbital,
    pub second: SignedOrbital,
    pub overlap: Interval,
}

impl ChainCertificate {
    /// Re-checks the certificate from its own data.
    pub fn verify(&self) -> bool {
        orbitals(self.first.signature()).contains(self.first.orbital())
            && orbitals(self.second.signature()).contains(self.second.orbital())
            && self.first.orbital().relation(self.second.orbital()) == Relation::Crossing
            && self.first.orbital().left() < self.second.orbital().left()
            && self
                .first
                .orbital()
                .intersection(self.second.orbital())
                .as_ref()
                == Some(&self.overlap)
    }

    fn from_pair(p: &SignedOrbital, q: &SignedOrbital) -> Self {
        let (first, second) = if p.orbital().left() < q.orbital().left() {
            (p.clone(), q.clone())
        } else {
            (q.clone(), p.clone())
        };
        let overlap = first
            .orbital()
            .intersection(second.orbital())
            .expect("crossing orbitals overlap");
        ChainCertificate {
            first,
            second,
            overlap,
        }
    }
}

impl fmt::Display for ChainCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} crosses {} on {}",
            self.first.orbital(),
            self.second.orbital(),
            self.overlap
        )
    }
}

impl fmt::Debug for ChainCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Scans all pairs of signed orbitals of the given maps and returns a
/// crossing pair if one exists. Deterministic: among all crossings the
/// certificate with the leftmost (then shortest) overlap wins, with input
/// position as the final tie-break. `None` is a complete answer for the
/// maps given — orbitals of a fixed finite set either cross or they don't.
pub fn detect_transition_chain(maps: &[PLMap]) -> Option<ChainCertificate> {
    let pool = signed_orbitals(maps);
    let mut best: Option<((Rat, Rat), ChainCertificate)> = None;
    for i in 0..pool.len() {
        for j in i + 1..pool.len() {
            if pool[i].orbital().relation(pool[j].orbital()) != Relation::Crossing {
                continue;
            }
            let cert = ChainCertificate::from_pair(&pool[i], &pool[j]);
            let key = (cert.overlap.left().clone(), cert.overlap.right().clone());
            if best.as_ref().map_or(true, |(k, _)| key < *k) {
                best = Some((key, cert));
            }
        }
    }
    best.map(|(_, c)| c)
}

/// Result of a word-ball search for a transition chain.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum BallSearch {
    /// A crossing pair among ball elements, with the words that spell the
    /// two signatures (aligned with `certificate.first`/`second`).
    Found {
        certificate: ChainCertificate,
        words: (Word, Word),
    },
    /// The entire ball of freely reduced words up to `radius` was
    /// enumerated without finding a crossing. Not a proof of absence in
    /// the group: a chain may appear at a larger radius.
    NoneWithinRadius { radius: usize, elements: usize },
}

/// Enumerates the ball of freely reduced words of length at most
/// `radius` (deduplicated to distinct group elements, breadth-first, so
/// each element keeps its lexicographically first geodesic word) and
/// scans every pair of elements for crossing orbitals.
///
/// `cap` bounds the number of distinct elements stored; exceeding it is
/// [`Error::ResourceLimit`]. The certificate choice is deterministic:
/// leftmost (then shortest) overlap first, then shortest and
/// lexicographically least word pairs.
pub fn search_transition_chain(
    g: &GenSet,
    radius: usize,
    cap: usize,
) -> Result<BallSearch, Error> {
    let mut letters = Vec::with_capacity(g.generators().len() * 2);
    for (i, m) in g.generators().iter().enumerate() {
        letters.push((m.clone(), Letter { index: i, inverse: false }));
        letters.push((m.inverse(), Letter { index: i, inverse: true }));
    }

    let mut elems: Vec<(PLMap, Word)> = vec![(PLMap::identity(), Word::empty())];
    let mut seen: HashMap<PLMap, usize> = HashMap::new();
    seen.insert(PLMap::identity(), 0);

    let mut frontier: Vec<usize> = vec![0];
    for _ in 0..radius {
        let mut next = Vec::new();
        for &ei in &frontier {
            for (m, l) in &letters {
                let (elem, word) = &elems[ei];
                if word.cancels(*l) {
                    continue;
                }
                let ne = elem.then(m);
                if seen.contains_key(&ne) {
                    continue;
                }
                if elems.len() >= cap {
                    return Err(Error::ResourceLimit(cap));
                }
                let nw = word.extended(*l);
                seen.insert(ne.clone(), elems.len());
                next.push(elems.len());
                elems.push((ne, nw));
            }
        }
        frontier = next;
    }

    // flatten to signed orbitals tagged with their element index
    let mut pool: Vec<(usize, SignedOrbital)> = Vec::new();
    for (ei, (m, _)) in elems.iter().enumerate() {
        for o in orbitals(m) {
            pool.push((ei, SignedOrbital::new_unchecked(o, m.clone())));
        }
    }

    let mut best: Option<(CertKey, ChainCertificate, (Word, Word))> = None;
    for i in 0..pool.len() {
        for j in i + 1..pool.len() {
            let (ei, p) = &pool[i];
            let (ej, q) = &pool[j];
            if ei == ej {
                continue; // orbitals of one element never cross each other
            }
            if p.orbital().relation(q.orbital()) != Relation::Crossing {
                continue;
            }
            let cert = ChainCertificate::from_pair(p, q);
            let (wp, wq) = (&elems[*ei].1, &elems[*ej].1);
            let words = if cert.first == *p {
                (wp.clone(), wq.clone())
            } else {
                (wq.clone(), wp.clone())
            };
            let key = CertKey {
                overlap_left: cert.overlap.left().clone(),
                overlap_right: cert.overlap.right().clone(),
                word_lengths: words.0.len() + words.1.len(),
                words: (words.0.clone(), words.1.clone()),
            };
            if best.as_ref().map_or(true, |(k, _, _)| key < *k) {
                best = Some((key, cert, words));
            }
        }
    }

    Ok(match best {
        Some((_, certificate, words)) => BallSearch::Found { certificate, words },
        None => BallSearch::NoneWithinRadius {
            radius,
            elements: elems.len(),
        },
    })
}

#[derive(PartialEq, Eq, PartialOrd, Ord)]
struct CertKey {
    overlap_left: Rat,
    overlap_right: Rat,
    word_lengths: usize,
    words: (Word, Word),
}
