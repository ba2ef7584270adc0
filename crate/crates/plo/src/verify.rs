//! Named property suites with deterministic seeding and reporting.
//!
//! Each suite exercises one slice of the library against independently
//! stated invariants — group identities, conjugation covariance,
//! fundamentality, chain detection against a brute-force oracle, witness
//! disjointness, the length partition, bouncepoint/corner duality, code
//! injectivity, wreath commutation, and IO round-trips. All randomness
//! flows from the caller's seed through a per-suite stream, so a report
//! for a fixed `(suites, seed, size)` is byte-identical run to run; that
//! reproducibility is itself one of the properties under test.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::chain::{
    compare_signed, detect_transition_chain, is_fundamental, product_orbital_check,
    search_transition_chain, signed_orbitals, BallSearch, conjugate_tower,
};
use crate::construct::{crossing_pair, nested_tower, one_bump, rescale_into, wreath_generators};
use crate::countability::{
    bouncepoints, bump_code, check_injectivity, corners, endpoint_witness, length_class,
    witness_intervals, witness_intervals_with,
};
use crate::error::Error;
use crate::interval::Interval;
use crate::io::{load_maps, parse_map, parse_named_maps, render_json, render_text, serialize_map};
use crate::orbital::{lies_in_fundamental_domain, orbitals, GenSet};
use crate::plmap::{commutator, PLMap};
use crate::rat::Rat;
use crate::sample;
use crate::svg::{render_svg, SvgOptions};

/// Every suite name, in canonical order.
pub const SUITES: [&str; 10] = [
    "group-axioms",
    "conjugation",
    "fundamental",
    "chains",
    "witness",
    "length-class",
    "bounce",
    "phi-injectivity",
    "wreath",
    "io",
];

/// Seed and scale for a verification run. `size` is the per-suite case
/// count; suites with fixed fixtures ignore it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOptions {
    pub seed: u64,
    pub size: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { seed: 0, size: 100 }
    }
}

/// One named check within a suite.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub suite: String,
    pub name: String,
    pub passed: bool,
    pub cases: usize,
    /// Empty when passing; a pointer to the first failure otherwise.
    pub details: String,
}

/// The outcome of a verification run. Serialization carries no clocks or
/// environment data, so identical inputs give identical bytes.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub seed: u64,
    pub size: usize,
    pub checks: Vec<Check>,
    pub passed: bool,
}

impl Report {
    pub fn to_text(&self) -> String {
        let mut s = format!("verification with seed {}, size {}\n", self.seed, self.size);
        for c in &self.checks {
            let mark = if c.passed { "pass" } else { "FAIL" };
            s.push_str(&format!(
                "  [{mark}] {}/{} ({} cases)",
                c.suite, c.name, c.cases
            ));
            if !c.details.is_empty() {
                s.push_str(&format!(": {}", c.details));
            }
            s.push('\n');
        }
        let verdict = if self.passed { "all passed" } else { "FAILED" };
        s.push_str(&format!("{} checks, {verdict}\n", self.checks.len()));
        s
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// Runs the named suites (deduplicated, in given order) and collects the
/// report. Unknown names fail before anything runs.
pub fn run_verify(suites: &[&str], options: &VerifyOptions) -> Result<Report, Error> {
    let mut chosen: Vec<&str> = Vec::new();
    for s in suites {
        let canonical = SUITES
            .iter()
            .find(|k| *k == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))?;
        if !chosen.contains(canonical) {
            chosen.push(canonical);
        }
    }
    let mut checks = Vec::new();
    for suite in chosen {
        let salt = SUITES.iter().position(|k| *k == suite).unwrap() as u64;
        let rng = ChaCha8Rng::seed_from_u64(options.seed ^ (0x9e37_79b9_7f4a_7c15u64).wrapping_mul(salt + 1));
        let run = match suite {
            "group-axioms" => suite_group_axioms(rng, options.size),
            "conjugation" => suite_conjugation(rng, options.size),
            "fundamental" => suite_fundamental(rng, options.size),
            "chains" => suite_chains(rng, options.size),
            "witness" => suite_witness(rng, options.size),
            "length-class" => suite_length_class(options.size),
            "bounce" => suite_bounce(rng, options.size),
            "phi-injectivity" => suite_phi(rng, options.size),
            "wreath" => suite_wreath(rng),
            "io" => suite_io(rng, options.size),
            _ => unreachable!("validated above"),
        };
        checks.extend(run);
    }
    let passed = checks.iter().all(|c| c.passed);
    Ok(Report {
        seed: options.seed,
        size: options.size,
        checks,
        passed,
    })
}

/// Collects per-case failures into a single pass/fail check.
struct Tally {
    suite: &'static str,
    name: &'static str,
    cases: usize,
    failures: usize,
    first: String,
}

impl Tally {
    fn new(suite: &'static str, name: &'static str) -> Self {
        Tally {
            suite,
            name,
            cases: 0,
            failures: 0,
            first: String::new(),
        }
    }

    fn record(&mut self, ok: bool, context: impl Fn() -> String) {
        self.record_n(1, ok, context);
    }

    /// One verdict covering `n` underlying cases (e.g. a whole family).
    fn record_n(&mut self, n: usize, ok: bool, context: impl Fn() -> String) {
        self.cases += n;
        if !ok {
            self.failures += 1;
            if self.first.is_empty() {
                self.first = context();
            }
        }
    }

    fn into_check(self) -> Check {
        let details = if self.failures == 0 {
            String::new()
        } else {
            format!("{} failures, first: {}", self.failures, self.first)
        };
        Check {
            suite: self.suite.to_string(),
            name: self.name.to_string(),
            passed: self.failures == 0,
            cases: self.cases,
            details,
        }
    }
}

fn suite_group_axioms(mut rng: ChaCha8Rng, size: usize) -> Vec<Check> {
    let s = "group-axioms";
    let mut inverse = Tally::new(s, "inverse-identities");
    let mut assoc = Tally::new(s, "associativity");
    let mut powers = Tally::new(s, "power-laws");
    let mut neutral = Tally::new(s, "identity-neutrality");
    let id = PLMap::identity();
    for _ in 0..size {
        let f = sample::map_on_grid(&mut rng, 10, 48);
        let g = sample::map_on_grid(&mut rng, 10, 48);
        let h = sample::map_on_grid(&mut rng, 10, 48);
        inverse.record(
            f.then(&f.inverse()).is_identity()
                && f.inverse().then(&f).is_identity()
                && f.inverse().inverse() == f,
            || format!("f = {f}"),
        );
        assoc.record(
            f.then(&g).then(&h) == f.then(&g.then(&h)),
            || format!("f = {f}, g = {g}, h = {h}"),
        );
        powers.record(
            f.pow(0).is_identity()
                && f.pow(1) == f
                && f.pow(-1) == f.inverse()
                && f.pow(3) == f.then(&f).then(&f)
                && f.pow(-2) == f.inverse().then(&f.inverse()),
            || format!("f = {f}"),
        );
        neutral.record(
            f.then(&id) == f && id.then(&f) == f,
            || format!("f = {f}"),
        );
    }
    vec![
        inverse.into_check(),
        assoc.into_check(),
        powers.into_check(),
        neutral.into_check(),
    ]
}

fn suite_conjugation(mut rng: ChaCha8Rng, size: usize) -> Vec<Check> {
    let s = "conjugation";
    let mut images = Tally::new(s, "orbital-images");
    let mut slopes = Tally::new(s, "boundary-slopes");
    let mut towers = Tally::new(s, "tower-order-isomorphism");
    for case in 0..size {
        let f = sample::map_on_grid(&mut rng, 8, 48);
        let c = sample::map_on_grid(&mut rng, 8, 48);
        let fc = f.conjugate(&c);
        let expected: Vec<Interval> = orbitals(&f).iter().map(|a| c.image_of(a)).collect();
        let got = orbitals(&fc);
        let img_ok = expected == got;
        images.record(img_ok, || format!("f = {f}, c = {c}"));
        if img_ok {
            slopes.record(
                orbitals(&f).iter().all(|a| {
                    f.boundary_slopes(a).unwrap()
                        == fc.boundary_slopes(&c.image_of(a)).unwrap()
                }),
                || format!("f = {f}, c = {c}"),
            );
        }

        let depth = 1 + case % 4;
        let (_, t) = sample::tower(&mut rng, depth, false, 24);
        let tc = conjugate_tower(&t, &c);
        let iso = (0..t.len()).all(|i| {
            (0..t.len()).all(|j| {
                compare_signed(&t.elements()[i], &t.elements()[j])
                    == compare_signed(&tc.elements()[i], &tc.elements()[j])
            })
        });
        towers.record(iso, || format!("depth {depth}, c = {c}"));
    }
    vec![images.into_check(), slopes.into_check(), towers.into_check()]
}

fn suite_fundamental(mut rng: ChaCha8Rng, size: usize) -> Vec<Check> {
    let s = "fundamental";
    let mut fixed = Tally::new(s, "nested-tower-fixtures");
    for depth in 1..=6 {
        let (gens, tower) = nested_tower(depth).expect("depth within cap");
        let product = product_orbital_check(tower.elements()).expect("tower is a chain");
        fixed.record(
            detect_transition_chain(gens.generators()).is_none()
                && is_fundamental(tower.elements())
                && product.verified,
            || format!("depth {depth}"),
        );
    }

    let mut pairs = Tally::new(s, "random-fundamental-pairs");
    let mut products = Tally::new(s, "product-orbital");
    for case in 0..size {
        let (_, t) = sample::tower(&mut rng, 2, false, 48);
        let inner = &t.elements()[0];
        let outer = &t.elements()[1];
        pairs.record(
            is_fundamental(t.elements())
                && lies_in_fundamental_domain(inner.orbital(), outer) == Ok(true),
            || format!("inner {}, outer {}", inner.orbital(), outer.orbital()),
        );
        let depth = 1 + case % 4;
        let (_, t) = sample::tower(&mut rng, depth, false, 24);
        products.record(
            product_orbital_check(t.elements())
                .map(|p| p.verified)
                .unwrap_or(false),
            || format!("depth {depth}"),
        );
    }

    // a bump hugging its outer orbital escapes every fundamental domain;
    // the checker must say so rather than wave it through
    let mut negative = Tally::new(s, "non-fundamental-detected");
    let wide = parse_map("0,0 1/8,1/8 1/4,5/32 3/4,19/32 7/8,7/8 1,1").unwrap();
    let pool = signed_orbitals(&[one_bump(&Interval::unit()), wide]);
    negative.record(!is_fundamental(&pool), || "wide bump accepted".to_string());

    vec![
        fixed.into_check(),
        pairs.into_check(),
        products.into_check(),
        negative.into_check(),
    ]
}

/// Crossing test written independently of `Interval::relation`, as the
/// oracle for the detector.
fn crosses(a: &Interval, b: &Interval) -> bool {
    (a.left() < b.left() && b.left() < a.right() && a.right() < b.right())
        || (b.left() < a.left() && a.left() < b.right() && b.right() < a.right())
}

fn suite_chains(mut rng: ChaCha8Rng, size: usize) -> Vec<Check> {
    let s = "chains";
    let mut oracle = Tally::new(s, "detector-matches-oracle");
    for _ in 0..size {
        let count = rng.gen_range(1..=4);
        let maps: Vec<PLMap> = (0..count)
            .map(|_| {
                let iv = sample::interval_on_grid(&mut rng, 12);
                sample::bump_on(&mut rng, &iv, 3, 24)
            })
            .collect();
        let per_map: Vec<Vec<Interval>> = maps.iter().map(orbitals).collect();
        let mut brute = false;
        for i in 0..per_map.len() {
            for j in i + 1..per_map.len() {
                for a in &per_map[i] {
                    for b in &per_map[j] {
                        brute |= crosses(a, b);
                    }
                }
            }
        }
        let det = detect_transition_chain(&maps);
        let ok = match &det {
            Some(cert) => {
                brute && cert.verify() && crosses(cert.first.orbital(), cert.second.orbital())
            }
            None => !brute,
        };
        oracle.record(ok, || {
            format!(
                "maps {:?}, detector {:?}",
                maps.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
                det
            )
        });
    }

    let mut search = Tally::new(s, "ball-search-fixtures");
    let (f, g) = crossing_pair();
    let found = search_transition_chain(&GenSet::new("crossing", vec![f, g]), 1, 10_000);
    search.record(
        matches!(
            &found,
            Ok(BallSearch::Found { certificate, .. }) if certificate.verify()
        ),
        || format!("crossing pair search returned {found:?}"),
    );
    let (gens, _) = nested_tower(3).expect("depth within cap");
    let clean = search_transition_chain(&gens, 3, 100_000);
    search.record(
        matches!(
            &clean,
            Ok(BallSearch::NoneWithinRadius { radius: 3, elements }) if *elements > 1
        ),
        || format!("nested search returned {clean:?}"),
    );

    vec![oracle.into_check(), search.into_check()]
}

fn suite_witness(mut rng: ChaCha8Rng, size: usize) -> Vec<Check> {
    let s = "witness";
    let mut disjoint = Tally::new(s, "pairwise-disjoint");
    let mut contained = Tally::new(s, "contained-in-own-orbital");
    for case in 0..size {
        let depth = 1 + case % 6;
        let (_, t) = sample::tower(&mut rng, depth, case % 3 == 0, 48);

        let mut runs: Vec<Vec<Interval>> = Vec::new();
        match witness_intervals(&t) {
            Ok(ws) => runs.push(ws),
            Err(e) => {
                disjoint.record(false, || format!("default choices failed: {e}"));
                continue;
            }
        }
        // three alternative (base, point) selections — the construction
        // must not care which downset element anchors the witness
        for variant in 0..3 {
            let choices: Vec<(usize, Rat)> = (1..t.len())
                .map(|i| {
                    let base = match variant {
                        0 => i - 1,
                        1 => 0,
                        _ => rng.gen_range(0..i),
                    };
                    let orb = t.elements()[base].orbital();
                    let num = match variant {
                        0 => 1,
                        1 => 7,
                        _ => rng.gen_range(1..16),
                    };
                    (base, orb.left() + &orb.length() * &Rat::new(num, 16))
                })
                .collect();
            match witness_intervals_with(&t, &choices) {
                Ok(ws) => runs.push(ws),
                Err(e) => disjoint.record(false, || format!("variant {variant} failed: {e}")),
            }
        }

        for ws in &runs {
            let mut all_disjoint = true;
            for i in 0..ws.len() {
                for j in i + 1..ws.len() {
                    all_disjoint &= ws[i].intersection(&ws[j]).is_none();
                }
            }
            disjoint.record(all_disjoint, || format!("witnesses {ws:?}"));
            contained.record(
                ws.iter()
                    .zip(t.elements())
                    .all(|(w, e)| e.orbital().contains(w)),
                || format!("witnesses {ws:?}"),
            );
        }
    }
    vec![disjoint.into_check(), contained.into_check()]
}

fn suite_length_class(size: usize) -> Vec<Check> {
    let s = "length-class";
    let size = size.max(2);
    // enough powers of 2/3 to cover the shortest grid length
    let mut powers = vec![Rat::one()];
    while powers.last().unwrap() > &Rat::new(1, size as i64 * 2) {
        powers.push(powers.last().unwrap() * Rat::new(2, 3));
    }
    powers.push(powers.last().unwrap() * Rat::new(2, 3));

    let mut total = Tally::new(s, "partition-totality");
    for k in 1..=size {
        let len = Rat::new(k as i64, size as i64);
        let class = length_class(&Interval::new(Rat::zero(), len.clone()));
        let members = (1..powers.len())
            .filter(|&n| powers[n] < len && len <= powers[n - 1])
            .collect::<Vec<_>>();
        total.record(
            members.len() == 1 && members[0] == class.index() as usize && class.contains(&len),
            || format!("length {len} classed {class}"),
        );
    }

    let mut boundary = Tally::new(s, "boundary-values");
    for k in 0..=20 {
        let len = Rat::new(2, 3).pow(k);
        let class = length_class(&Interval::new(Rat::zero(), len.clone()));
        boundary.record(class.index() == k as u32 + 1, || {
            format!("(2/3)^{k} classed {class}")
        });
    }

    // exhaustive forcing search on a 16-grid: disjoint subintervals of o
    // must never both land in o's class
    let mut forcing = Tally::new(s, "half-length-forcing");
    const N: i64 = 16;
    let class_of = |i: i64, j: i64| {
        length_class(&Interval::new(Rat::new(i, N), Rat::new(j, N))).index()
    };
    let mut classes = vec![vec![0u32; (N + 1) as usize]; (N + 1) as usize];
    for i in 0..N {
        for j in i + 1..=N {
            classes[i as usize][j as usize] = class_of(i, j);
        }
    }
    for ol in 0..N {
        for or in ol + 1..=N {
            let co = classes[ol as usize][or as usize];
            for al in ol..or {
                for ar in al + 1..=or {
                    for bl in ar..or {
                        for br in bl + 1..=or {
                            if (al, ar) == (ol, or) || (bl, br) == (ol, or) {
                                continue;
                            }
                            let shared = classes[al as usize][ar as usize] == co
                                && classes[bl as usize][br as usize] == co;
                            forcing.record(!shared, || {
                                format!(
                                    "o=({ol}/{N},{or}/{N}) a=({al}/{N},{ar}/{N}) b=({bl}/{N},{br}/{N})"
                                )
                            });
                        }
                    }
                }
            }
        }
    }

    vec![total.into_check(), boundary.into_check(), forcing.into_check()]
}

fn suite_bounce(mut rng: ChaCha8Rng, size: usize) -> Vec<Check> {
    let s = "bounce";
    let mut fixed = Tally::new(s, "crossing-pair-corner");
    let (f, g) = crossing_pair();
    fixed.record(
        corners(&f, &g) == vec![Rat::new(7, 12)] && bouncepoints(&f, &g).is_empty(),
        || "crossing pair corners changed".to_string(),
    );

    let mut planted = Tally::new(s, "planted-bouncepoints");
    let mut duality = Tally::new(s, "endpoint-duality");
    let mut trichotomy = Tally::new(s, "divergence-trichotomy");
    for _ in 0..size {
        let (f, g, b) = sample::bouncing_pair(&mut rng, 48);
        planted.record(bouncepoints(&f, &g).contains(&b), || {
            format!("f = {f}, g = {g}, planted {b}")
        });

        let f2 = sample::map_on_grid(&mut rng, 6, 48);
        let g2 = sample::map_on_grid(&mut rng, 6, 48);
        for (p, q) in [(&f, &g), (&f2, &g2)] {
            let bp = bouncepoints(p, q);
            let co = corners(p, q);
            duality.record(
                bp.iter().chain(&co).all(|b| endpoint_witness(b, p, q)),
                || format!("f = {p}, g = {q}"),
            );
            trichotomy.record(
                orbitals(&p.then(&q.inverse()))
                    .iter()
                    .map(|o| o.left())
                    .filter(|b| !b.is_zero())
                    .all(|b| bp.contains(b) || co.contains(b)),
                || format!("f = {p}, g = {q}"),
            );
        }
    }
    vec![
        fixed.into_check(),
        planted.into_check(),
        duality.into_check(),
        trichotomy.into_check(),
    ]
}

fn suite_phi(mut rng: ChaCha8Rng, size: usize) -> Vec<Check> {
    let s = "phi-injectivity";
    let mut unit = Tally::new(s, "distinct-codes-on-unit");
    let family = sample::bump_family(&mut rng, size, 5, 64);
    match check_injectivity(&family, &Interval::unit()) {
        Ok(report) => unit.record_n(
            size,
            report.total == size
                && report.distinct_codes == size
                && report.collisions.is_empty(),
            || {
                format!(
                    "{} bumps gave {} codes, collisions {:?}",
                    report.total, report.distinct_codes, report.collisions
                )
            },
        ),
        Err(e) => unit.record_n(size, false, || format!("encoding failed: {e}")),
    }

    // the same family carried onto a smaller orbital must stay separated
    let mut carried = Tally::new(s, "distinct-codes-carried");
    let target = Interval::new(Rat::new(1, 3), Rat::new(5, 6));
    let moved: Vec<PLMap> = family.iter().map(|f| rescale_into(f, &target)).collect();
    match check_injectivity(&moved, &target) {
        Ok(report) => carried.record_n(size, report.collisions.is_empty(), || {
            format!("collisions {:?}", report.collisions)
        }),
        Err(e) => carried.record_n(size, false, || format!("encoding failed: {e}")),
    }

    // self-context sanity: codes against only yourself carry no steps
    let mut selfless = Tally::new(s, "no-self-bounce");
    for f in family.iter().take(size.min(25)) {
        let code = bump_code(f, &Interval::unit(), std::slice::from_ref(f))
            .expect("family bumps encode");
        selfless.record(code.steps.is_empty(), || format!("f = {f}"));
    }

    vec![unit.into_check(), carried.into_check(), selfless.into_check()]
}

fn suite_wreath(mut rng: ChaCha8Rng) -> Vec<Check> {
    let s = "wreath";
    let mut commute = Tally::new(s, "conjugates-commute");
    let mut support = Tally::new(s, "group-orbital");
    let mut fixtures: Vec<(Interval, Interval)> = vec![
        (
            Interval::new(Rat::new(5, 16), Rat::new(3, 8)),
            Interval::new(Rat::new(1, 4), Rat::new(1, 2)),
        ),
        (
            Interval::new(Rat::new(1, 4), Rat::new(3, 8)),
            Interval::new(Rat::new(1, 4), Rat::new(1, 2)),
        ),
        (
            Interval::new(Rat::new(1, 8), Rat::new(1, 2)),
            Interval::new(Rat::zero(), Rat::new(3, 4)),
        ),
    ];
    for _ in 0..5 {
        let outer = sample::interval_on_grid(&mut rng, 8);
        let quarter = &outer.length() * &Rat::new(1, 4);
        let inner = Interval::new(outer.left() + &quarter, outer.left() + &quarter * &Rat::new(2, 1));
        fixtures.push((inner, outer));
    }
    for (inner, outer) in &fixtures {
        let gens = wreath_generators(inner, outer).expect("nested fixtures");
        let (h, f) = (&gens.generators()[0], &gens.generators()[1]);
        let mut all = true;
        for i in -3..=3i64 {
            for j in -3..=3i64 {
                if i != j {
                    all &= commutator(&h.conjugate(&f.pow(i)), &h.conjugate(&f.pow(j)))
                        .is_identity();
                }
            }
        }
        commute.record(all, || format!("inner {inner}, outer {outer}"));
        support.record(
            crate::orbital::group_orbitals(&gens) == vec![outer.clone()],
            || format!("inner {inner}, outer {outer}"),
        );
    }
    vec![commute.into_check(), support.into_check()]
}

fn suite_io(mut rng: ChaCha8Rng, size: usize) -> Vec<Check> {
    let s = "io";
    let mut corpus: Vec<(String, PLMap)> = Vec::new();
    corpus.push(("id".into(), PLMap::identity()));
    corpus.push(("a".into(), one_bump(&Interval::unit())));
    corpus.push(("b".into(), one_bump(&Interval::new(Rat::new(1, 4), Rat::new(1, 2)))));
    let (f, g) = crossing_pair();
    corpus.push(("cross1".into(), f));
    corpus.push(("cross2".into(), g));
    for depth in 1..=4 {
        let (gens, _) = nested_tower(depth).expect("depth within cap");
        for (i, m) in gens.generators().iter().enumerate() {
            corpus.push((format!("n{depth}g{}", i + 1), m.clone()));
        }
    }
    for i in 0..size.max(4) / 4 {
        corpus.push((format!("r{i}"), sample::map_on_grid(&mut rng, 10, 48)));
    }

    let mut text_rt = Tally::new(s, "text-round-trip");
    for (name, m) in &corpus {
        text_rt.record(parse_map(&serialize_map(m)) == Ok(m.clone()), || {
            format!("map {name}")
        });
    }

    let mut file_rt = Tally::new(s, "document-round-trip");
    file_rt.record(
        load_maps(&render_json(&corpus)).as_ref() == Ok(&corpus),
        || "json corpus".to_string(),
    );
    file_rt.record(
        parse_named_maps(&render_text(&corpus)).as_ref() == Ok(&corpus),
        || "text corpus".to_string(),
    );

    let mut svg_det = Tally::new(s, "svg-determinism");
    let first = render_svg(&corpus, &SvgOptions::default());
    let second = render_svg(&corpus, &SvgOptions::default());
    svg_det.record(first == second, || "svg bytes differ".to_string());
    svg_det.record(
        first.matches("<polyline").count() == corpus.len(),
        || "polyline count off".to_string(),
    );

    vec![text_rt.into_check(), file_rt.into_check(), svg_det.into_check()]
}
