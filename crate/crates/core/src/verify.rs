//! The invariant suite behind `selfdesc verify`.
//!
//! Every check walks small generations exhaustively and compares two
//! independent routes to the same answer. The transforms under test are
//! supplied through [`Transforms`], so a deliberately broken implementation
//! can be fed through the suite to confirm that it fails.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use num_bigint::BigUint;

use crate::bijections::{
    decode_ballot, decode_ballot_m, encode_ballot, encode_ballot_m, enumerate_m_increase, enumerate_unit_increase,
    is_west_path, self_describing_to_unit_increase, unit_increase_to_self_describing, west_tree_labels,
    west_tree_labels_m,
};
use crate::census::{count_matching, find_counterexample, CensusConfig, Scratch};
use crate::combinatorics::{
    ballot_count, catalan, catalan_by_recursion, fuss_catalan, name_distribution_closed, unit_increase_count_closed,
};
use crate::enumerate::{enumerate_a, generation_size};
use crate::family::{enumerate_family, family_path, is_family_member, name_distribution};
use crate::sequence::{self, Sequence, Term, Terms};

/// Double-point counts of γ for generations 0 through 6.
pub const DOUBLE_POINT_COUNTS: [u64; 7] = [1, 2, 4, 10, 26, 70, 216];

/// The transforms exercised by the suite.
pub trait Transforms: Sync {
    fn delta(&self, terms: &[Term], out: &mut Vec<Term>);
    fn gamma(&self, terms: &[Term], out: &mut Vec<Term>);
    fn mu(&self, terms: &[Term], out: &mut Vec<Term>);
}

/// The library's own transforms.
#[derive(Debug, Clone, Copy, Default)]
pub struct Library;

impl Transforms for Library {
    fn delta(&self, terms: &[Term], out: &mut Vec<Term>) {
        sequence::delta_into(terms, out);
    }

    fn gamma(&self, terms: &[Term], out: &mut Vec<Term>) {
        sequence::gamma_into(terms, out);
    }

    fn mu(&self, terms: &[Term], out: &mut Vec<Term>) {
        out.clear();
        out.extend(terms.iter().enumerate().map(|(i, &t)| i as Term - t));
    }
}

/// δ counting `<=` instead of `<` on the last index; everything else as
/// [`Library`].
#[derive(Debug, Clone, Copy, Default)]
pub struct FaultyDelta;

impl Transforms for FaultyDelta {
    fn delta(&self, terms: &[Term], out: &mut Vec<Term>) {
        sequence::delta_into(terms, out);
        let last = terms.len() - 1;
        let t = terms[last];
        out[last] = terms[..last].iter().filter(|&&x| x <= t).count() as Term;
    }

    fn gamma(&self, terms: &[Term], out: &mut Vec<Term>) {
        Library.gamma(terms, out)
    }

    fn mu(&self, terms: &[Term], out: &mut Vec<Term>) {
        Library.mu(terms, out)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    /// Every generation up to 6.
    Quick,
    /// The full ranges of each invariant, clipped to the census cap.
    Full,
}

#[derive(Debug, Clone, Copy)]
struct Ranges {
    exhaustive: usize,
    fixed_counts: usize,
    double_counts: usize,
    family_counts: usize,
    unit_distribution: usize,
    ballots: usize,
    m_increase: usize,
    closed_forms: u64,
}

impl Ranges {
    fn new(level: Level, cap: usize) -> Self {
        let r = match level {
            Level::Quick => Ranges {
                exhaustive: 6,
                fixed_counts: 6,
                double_counts: 6,
                family_counts: 6,
                unit_distribution: 6,
                ballots: 6,
                m_increase: 6,
                closed_forms: 30,
            },
            Level::Full => Ranges {
                exhaustive: 7,
                fixed_counts: 9,
                double_counts: 8,
                family_counts: 9,
                unit_distribution: 10,
                ballots: 8,
                m_increase: 6,
                closed_forms: 30,
            },
        };
        Ranges {
            exhaustive: r.exhaustive.min(cap),
            fixed_counts: r.fixed_counts.min(cap),
            double_counts: r.double_counts.min(cap),
            family_counts: r.family_counts.min(cap),
            ..r
        }
    }
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

type Outcome = Result<String, String>;
type Check<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

/// Runs the suite, calling `on_check` as each check finishes.
pub fn run_with<F>(level: Level, config: &CensusConfig, t: &dyn Transforms, mut on_check: F) -> Report
where
    F: FnMut(&CheckResult),
{
    let r = Ranges::new(level, config.cap);
    let checks: Vec<Check<'_>> = vec![
        (
            "delta image lies in A",
            Box::new(move || delta_image_in_a(t, config, r)),
        ),
        (
            "delta_fast equals delta",
            Box::new(move || delta_fast_matches(t, config, r)),
        ),
        (
            "gamma equals mu after delta",
            Box::new(move || gamma_factorization(t, config, r)),
        ),
        ("mu is an involution", Box::new(move || mu_involution(t, config, r))),
        (
            "a <= delta(a), equal iff family member",
            Box::new(move || lex_lemma(t, config, r)),
        ),
        (
            "enumeration of A is complete and valid",
            Box::new(move || enumeration_complete(r)),
        ),
        (
            "delta stabilizes within n(n+1)/2 steps",
            Box::new(move || delta_stabilizes(t, config, r)),
        ),
        (
            "gamma reaches a double point within n(n+1) steps",
            Box::new(move || gamma_doubles(t, config, r)),
        ),
        (
            "delta fixed points counted by catalan(n+1)",
            Box::new(move || fixed_counts(t, config, r)),
        ),
        (
            "gamma double-point counts",
            Box::new(move || double_counts(t, config, r)),
        ),
        ("gamma fixes only (0)", Box::new(move || gamma_fixed(t, config, r))),
        (
            "family names equal delta-fixed sequences",
            Box::new(move || family_equals_fixed(t, config, r)),
        ),
        (
            "name distribution is c_r * c_(n-r)",
            Box::new(move || name_distribution_check(r)),
        ),
        (
            "oldest-name counts satisfy z_(n+1) = g_n",
            Box::new(move || oldest_recursion(r)),
        ),
        (
            "naming-rule membership agrees with delta",
            Box::new(move || membership_agrees(t, config, r)),
        ),
        ("sibship sizes and youngest names", Box::new(move || sibship_shape(r))),
        (
            "catalan binomial formula equals recursion",
            Box::new(move || catalan_routes(r)),
        ),
        (
            "closed-form row sums equal catalan(n+1)",
            Box::new(move || closed_row_sums(r)),
        ),
        ("ballot_count equals word census", Box::new(move || ballot_census(r))),
        (
            "fuss_catalan counts m-increase sequences",
            Box::new(move || m_increase_counts(r)),
        ),
        (
            "unit-increase distribution matches closed form",
            Box::new(move || unit_distribution(r)),
        ),
        ("ballot encoding is a bijection", Box::new(move || ballot_roundtrip(r))),
        ("west labels are valid distinct paths", Box::new(move || west_paths(r))),
        (
            "family and unit-increase trees are isomorphic",
            Box::new(move || tree_isomorphism(r)),
        ),
    ];

    let mut report = Report::default();
    for (name, check) in checks {
        let started = Instant::now();
        let outcome = check();
        let result = CheckResult {
            name,
            passed: outcome.is_ok(),
            detail: outcome.unwrap_or_else(|e| e),
            elapsed: started.elapsed(),
        };
        on_check(&result);
        report.checks.push(result);
    }
    report
}

pub fn run(level: Level, config: &CensusConfig, t: &dyn Transforms) -> Report {
    run_with(level, config, t, |_| {})
}

fn show(terms: &[Term]) -> String {
    terms.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(",")
}

/// Fails with the first counterexample found in 𝒜ₙ for any `n <= max`.
fn exhaustive<F>(max: usize, config: &CensusConfig, what: &str, pred: F) -> Outcome
where
    F: Fn(&[Term], &mut Scratch) -> bool + Sync,
{
    let mut checked: u128 = 0;
    for n in 0..=max {
        match find_counterexample(n, config, &pred) {
            Ok(None) => checked += generation_size(n),
            Ok(Some(bad)) => return Err(format!("{what} fails at {}", show(&bad))),
            Err(e) => return Err(e.to_string()),
        }
    }
    Ok(format!("{checked} sequences, n <= {max}"))
}

fn delta_image_in_a(t: &dyn Transforms, config: &CensusConfig, r: Ranges) -> Outcome {
    // arbitrary non-negative words of length L over 0..=L+1
    let mut out = Vec::new();
    let mut raw_checked = 0u64;
    for len in 1..=5usize {
        let radix = len as u64 + 2;
        for code in 0..radix.pow(len as u32) {
            let mut c = code;
            let word: Vec<Term> = (0..len)
                .map(|_| {
                    let d = (c % radix) as Term;
                    c /= radix;
                    d
                })
                .collect();
            t.delta(&word, &mut out);
            if out.len() != word.len() || !out.iter().enumerate().all(|(i, &x)| x as usize <= i) {
                return Err(format!("delta({}) = {} is not in A", show(&word), show(&out)));
            }
            raw_checked += 1;
        }
    }
    let inner = exhaustive(r.exhaustive, config, "delta image", |terms, s| {
        t.delta(terms, &mut s.a);
        s.a.len() == terms.len() && s.a.iter().enumerate().all(|(i, &x)| x as usize <= i)
    })?;
    Ok(format!("{raw_checked} raw words; {inner}"))
}

fn delta_fast_matches(t: &dyn Transforms, config: &CensusConfig, r: Ranges) -> Outcome {
    exhaustive(r.exhaustive, config, "delta_fast = delta", |terms, s| {
        t.delta(terms, &mut s.a);
        let raw = crate::RawSequence::new(terms.to_vec()).expect("non-empty");
        sequence::delta_fast(&raw).terms() == s.a.as_slice()
    })
}

fn gamma_factorization(t: &dyn Transforms, config: &CensusConfig, r: Ranges) -> Outcome {
    exhaustive(r.exhaustive, config, "gamma = mu delta", |terms, s| {
        t.delta(terms, &mut s.a);
        t.mu(&s.a, &mut s.b);
        let mu_delta = std::mem::take(&mut s.b);
        t.gamma(terms, &mut s.b);
        mu_delta == s.b
    })
}

fn mu_involution(t: &dyn Transforms, config: &CensusConfig, r: Ranges) -> Outcome {
    exhaustive(r.exhaustive, config, "mu mu = id", |terms, s| {
        t.mu(terms, &mut s.a);
        t.mu(&s.a, &mut s.b);
        s.b == terms
    })
}

fn lex_lemma(t: &dyn Transforms, config: &CensusConfig, r: Ranges) -> Outcome {
    exhaustive(r.exhaustive, config, "lemma", |terms, s| {
        t.delta(terms, &mut s.a);
        let member = family_path(terms).is_some();
        match terms.cmp(&s.a) {
            std::cmp::Ordering::Equal => member,
            std::cmp::Ordering::Less => !member,
            std::cmp::Ordering::Greater => false,
        }
    })
}

fn enumeration_complete(r: Ranges) -> Outcome {
    for n in 0..=r.exhaustive {
        let mut count: u128 = 0;
        let mut prev: Option<Sequence> = None;
        for s in enumerate_a(n) {
            if !sequence::validate_in_a(&s) || s.len() != n + 1 {
                return Err(format!("{s} is not in A_{n}"));
            }
            if prev.as_ref().is_some_and(|p| p >= &s) {
                return Err(format!("{s} out of order in A_{n}"));
            }
            prev = Some(s);
            count += 1;
        }
        if count != generation_size(n) {
            return Err(format!("A_{n} has {count} sequences, expected {}", generation_size(n)));
        }
    }
    Ok(format!("n <= {}", r.exhaustive))
}

fn delta_stabilizes(t: &dyn Transforms, config: &CensusConfig, r: Ranges) -> Outcome {
    exhaustive(r.exhaustive, config, "delta chain", |terms, s| {
        let n = terms.len() - 1;
        let bound = n * (n + 1) / 2;
        let mut current = terms.to_vec();
        for _ in 0..=bound {
            t.delta(&current, &mut s.a);
            match current.as_slice().cmp(s.a.as_slice()) {
                std::cmp::Ordering::Equal => return true,
                std::cmp::Ordering::Less => std::mem::swap(&mut current, &mut s.a),
                std::cmp::Ordering::Greater => return false,
            }
        }
        false
    })
}

fn gamma_doubles(t: &dyn Transforms, config: &CensusConfig, r: Ranges) -> Outcome {
    exhaustive(r.exhaustive, config, "gamma double point", |terms, s| {
        let n = terms.len() - 1;
        let bound = n * (n + 1);
        let mut current = terms.to_vec();
        for _ in 0..=bound {
            t.gamma(&current, &mut s.a);
            t.gamma(&s.a, &mut s.b);
            if s.b == current {
                return true;
            }
            std::mem::swap(&mut current, &mut s.a);
        }
        false
    })
}

fn fixed_counts(t: &dyn Transforms, config: &CensusConfig, r: Ranges) -> Outcome {
    let mut values = Vec::new();
    for n in 0..=r.fixed_counts {
        let count = count_matching(n, config, |terms, s| {
            t.delta(terms, &mut s.a);
            s.a == terms
        })
        .map_err(|e| e.to_string())?;
        let expected = catalan(n as u64 + 1);
        if BigUint::from(count) != expected {
            return Err(format!("n={n}: {count} fixed points, catalan(n+1) = {expected}"));
        }
        values.push(count.to_string());
    }
    Ok(values.join(","))
}

/// Brute-force double-point count of γ in 𝒜ₙ under `t`.
fn double_count(t: &dyn Transforms, config: &CensusConfig, n: usize) -> Result<u64, String> {
    count_matching(n, config, |terms, s| {
        t.gamma(terms, &mut s.a);
        t.gamma(&s.a, &mut s.b);
        s.b == terms
    })
    .map_err(|e| e.to_string())
}

fn double_counts(t: &dyn Transforms, config: &CensusConfig, r: Ranges) -> Outcome {
    let mut values = Vec::new();
    for n in 0..=r.double_counts {
        let count = double_count(t, config, n)?;
        if let Some(&expected) = DOUBLE_POINT_COUNTS.get(n) {
            if count != expected {
                return Err(format!("n={n}: {count} double points, expected {expected}"));
            }
        }
        if n >= 3 && count <= 1u64 << n {
            return Err(format!("n={n}: {count} double points, not more than 2^{n}"));
        }
        values.push(count.to_string());
    }
    Ok(values.join(","))
}

fn gamma_fixed(t: &dyn Transforms, config: &CensusConfig, r: Ranges) -> Outcome {
    for n in 0..=r.exhaustive {
        let count = count_matching(n, config, |terms, s| {
            t.gamma(terms, &mut s.a);
            s.a == terms
        })
        .map_err(|e| e.to_string())?;
        let expected = u64::from(n == 0);
        if count != expected {
            return Err(format!("n={n}: {count} gamma-fixed sequences, expected {expected}"));
        }
    }
    Ok(format!("n <= {}", r.exhaustive))
}

fn family_equals_fixed(t: &dyn Transforms, config: &CensusConfig, r: Ranges) -> Outcome {
    for n in 0..=r.family_counts {
        let family: Vec<Sequence> = enumerate_family(n).map(|f| f.into_full_name()).collect();
        if n <= r.exhaustive {
            let mut out = Vec::new();
            let fixed: HashSet<Sequence> = enumerate_a(n)
                .filter(|s| {
                    t.delta(s.terms(), &mut out);
                    out == s.terms()
                })
                .collect();
            let named: HashSet<Sequence> = family.iter().cloned().collect();
            if named.len() != family.len() {
                return Err(format!("n={n}: family names repeat"));
            }
            if named != fixed {
                let stray = named.symmetric_difference(&fixed).next().expect("sets differ");
                return Err(format!("n={n}: sets differ at {stray}"));
            }
        } else {
            let fixed = count_matching(n, config, |terms, s| {
                t.delta(terms, &mut s.a);
                s.a == terms
            })
            .map_err(|e| e.to_string())?;
            if fixed != family.len() as u64 {
                return Err(format!("n={n}: {} family members, {fixed} fixed points", family.len()));
            }
        }
    }
    Ok(format!(
        "sets equal n <= {}, counts equal n <= {}",
        r.exhaustive, r.family_counts
    ))
}

fn name_distribution_check(r: Ranges) -> Outcome {
    for n in 0..=r.family_counts {
        let dist = name_distribution(n);
        for (name, &count) in dist.counts.iter().enumerate() {
            let expected = name_distribution_closed(n as u64, name as u64).map_err(|e| e.to_string())?;
            if BigUint::from(count) != expected {
                return Err(format!("n={n}, r={name}: {count} members, expected {expected}"));
            }
        }
    }
    Ok(format!("n <= {}", r.family_counts))
}

fn oldest_recursion(r: Ranges) -> Outcome {
    for n in 0..r.family_counts {
        let g = enumerate_family(n).count() as u64;
        let z = name_distribution(n + 1).oldest();
        if z != g {
            return Err(format!("z_{} = {z} but g_{n} = {g}", n + 1));
        }
    }
    Ok(format!("n < {}", r.family_counts))
}

fn membership_agrees(t: &dyn Transforms, config: &CensusConfig, r: Ranges) -> Outcome {
    exhaustive(r.exhaustive, config, "membership", |terms, s| {
        t.delta(terms, &mut s.a);
        is_family_member(&crate::RawSequence::new(terms.to_vec()).expect("non-empty")) == (s.a == terms)
    })
}

fn sibship_shape(r: Ranges) -> Outcome {
    for n in 0..r.family_counts.min(8) {
        for node in enumerate_family(n) {
            let kids = node.children();
            if kids.len() != node.seniority() + 2 {
                return Err(format!("{} has {} children", node.full_name(), kids.len()));
            }
            let youngest = kids.last().expect("at least two children");
            if youngest.name() as usize != n + 1 {
                return Err(format!("youngest child of {} is {}", node.full_name(), youngest.name()));
            }
            if kids.iter().enumerate().any(|(i, k)| k.seniority() != i) {
                return Err(format!("children of {} misnumbered", node.full_name()));
            }
        }
    }
    Ok(format!("parents of generation n <= {}", r.family_counts.min(8)))
}

fn catalan_routes(r: Ranges) -> Outcome {
    let rec = catalan_by_recursion(r.closed_forms as usize);
    for (n, c) in rec.iter().enumerate() {
        if catalan(n as u64) != *c {
            return Err(format!("n={n}: binomial {} vs recursion {c}", catalan(n as u64)));
        }
    }
    Ok(format!("n <= {}", r.closed_forms))
}

fn closed_row_sums(r: Ranges) -> Outcome {
    for n in 0..=r.closed_forms {
        let target = catalan(n + 1);
        let names: BigUint = (0..=n).map(|k| name_distribution_closed(n, k).expect("k <= n")).sum();
        let units: BigUint = (0..=n).map(|k| unit_increase_count_closed(n, k).expect("k <= n")).sum();
        if names != target || units != target {
            return Err(format!("n={n}: rows sum to {names} and {units}, expected {target}"));
        }
    }
    Ok(format!("n <= {}", r.closed_forms))
}

/// Words of `ones` +1's and `neg` −1's with non-negative partial sums, by
/// checking every arrangement.
pub fn ballot_word_census(ones: u32, neg: u32) -> u64 {
    let len = ones + neg;
    (0u64..1 << len)
        .filter(|mask| mask.count_ones() == neg)
        .filter(|mask| {
            let mut sum = 0i64;
            (0..len).all(|i| {
                sum += if mask >> i & 1 == 1 { -1 } else { 1 };
                sum >= 0
            })
        })
        .count() as u64
}

fn ballot_census(r: Ranges) -> Outcome {
    for n in 0..=r.ballots as u32 {
        for k in 0..=n {
            let brute = ballot_word_census(n, k);
            let closed = ballot_count(u64::from(n), u64::from(k)).map_err(|e| e.to_string())?;
            if BigUint::from(brute) != closed {
                return Err(format!("({n},{k}): census {brute}, formula {closed}"));
            }
        }
    }
    Ok(format!("n <= {}", r.ballots))
}

fn m_increase_counts(r: Ranges) -> Outcome {
    for m in 1..=3u32 {
        for n in 0..=r.m_increase {
            let brute = enumerate_m_increase(m, n).map_err(|e| e.to_string())?.count();
            let closed = fuss_catalan(u64::from(m), n as u64 + 1).map_err(|e| e.to_string())?;
            if BigUint::from(brute) != closed {
                return Err(format!("m={m}, n={n}: census {brute}, formula {closed}"));
            }
            if m == 1 && closed != catalan(n as u64 + 1) {
                return Err(format!("n={n}: m = 1 column differs from catalan"));
            }
        }
    }
    Ok(format!("m <= 3, n <= {}", r.m_increase))
}

fn unit_distribution(r: Ranges) -> Outcome {
    for n in 0..=r.unit_distribution {
        let mut counts = vec![0u64; n + 1];
        for a in enumerate_unit_increase(n) {
            counts[a.as_sequence().last() as usize] += 1;
        }
        for (last, &count) in counts.iter().enumerate() {
            let closed = unit_increase_count_closed(n as u64, last as u64).map_err(|e| e.to_string())?;
            if BigUint::from(count) != closed {
                return Err(format!("n={n}, r={last}: census {count}, formula {closed}"));
            }
        }
        let total: u64 = counts.iter().sum();
        if BigUint::from(total) != catalan(n as u64 + 1) {
            return Err(format!("n={n}: {total} unit-increase sequences"));
        }
    }
    Ok(format!("n <= {}", r.unit_distribution))
}

fn ballot_roundtrip(r: Ranges) -> Outcome {
    for n in 0..=r.ballots {
        for a in enumerate_unit_increase(n) {
            let w = encode_ballot(&a);
            let last = a.as_sequence().last() as usize;
            if w.ups() != n || w.downs() != n - last {
                return Err(format!("{a} encodes to {w}: wrong symbol counts"));
            }
            if w.partial_sums().iter().any(|&p| p < 0) {
                return Err(format!("{a} encodes to {w}: negative partial sum"));
            }
            match decode_ballot(&w) {
                Ok(back) if back == a => {}
                other => return Err(format!("{a} -> {w} -> {other:?}")),
            }
        }
    }
    for m in 1..=3u32 {
        for n in 0..=r.m_increase {
            for a in enumerate_m_increase(m, n).map_err(|e| e.to_string())? {
                let w = encode_ballot_m(&a);
                let last = *a.terms().last().expect("non-empty") as usize;
                if w.ups() != n || w.downs() != m as usize * n - last {
                    return Err(format!("m={m}: {a} encodes to {w}: wrong symbol counts"));
                }
                match decode_ballot_m(&w) {
                    Ok(back) if back == a => {}
                    other => return Err(format!("m={m}: {a} -> {w} -> {other:?}")),
                }
            }
        }
    }
    Ok(format!("unit n <= {}; m <= 3, n <= {}", r.ballots, r.m_increase))
}

fn west_paths(r: Ranges) -> Outcome {
    for n in 0..=r.ballots {
        let mut seen = HashSet::new();
        let mut total = 0usize;
        for a in enumerate_unit_increase(n) {
            let labels = west_tree_labels(&a);
            if !is_west_path(1, &labels) {
                return Err(format!("{a} gives an invalid West path {labels:?}"));
            }
            seen.insert(labels);
            total += 1;
        }
        if seen.len() != total {
            return Err(format!("n={n}: label paths collide"));
        }
    }
    for m in 1..=3u32 {
        for n in 0..=r.m_increase {
            for a in enumerate_m_increase(m, n).map_err(|e| e.to_string())? {
                if !is_west_path(m, &west_tree_labels_m(&a)) {
                    return Err(format!("m={m}: {a} gives an invalid West path"));
                }
            }
        }
    }
    Ok(format!("n <= {}", r.ballots))
}

fn tree_isomorphism(r: Ranges) -> Outcome {
    for n in 0..=r.family_counts.min(r.ballots) {
        let mut units = enumerate_unit_increase(n);
        for member in enumerate_family(n) {
            let image = self_describing_to_unit_increase(member.full_name()).map_err(|e| e.to_string())?;
            match units.next() {
                Some(u) if u == image => {}
                other => return Err(format!("{} maps to {image}, expected {other:?}", member.full_name())),
            }
            if unit_increase_to_self_describing(&image) != *member.full_name() {
                return Err(format!("{} does not round-trip", member.full_name()));
            }
        }
        if units.next().is_some() {
            return Err(format!("n={n}: more unit-increase sequences than family members"));
        }
    }
    Ok(format!("n <= {}", r.family_counts.min(r.ballots)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ballot_census_small() {
        assert_eq!(ballot_word_census(3, 2), 5);
        assert_eq!(ballot_word_census(4, 4), 14);
        assert_eq!(ballot_word_census(0, 0), 1);
        assert_eq!(ballot_word_census(1, 2), 0);
    }

    #[test]
    fn quick_passes() {
        let report = run(Level::Quick, &CensusConfig::sequential(), &Library);
        if let Some(c) = report.failures().next() {
            panic!("{}: {}", c.name, c.detail);
        }
        assert_eq!(report.checks.len(), 24);
    }

    #[test]
    fn injected_fault_is_caught() {
        let report = run(Level::Quick, &CensusConfig::sequential(), &FaultyDelta);
        assert!(!report.all_passed());
        let failed: Vec<_> = report.failures().map(|c| c.name).collect();
        assert!(failed.contains(&"delta_fast equals delta"));
        assert!(failed.contains(&"delta fixed points counted by catalan(n+1)"));
    }

    #[test]
    fn cap_clips_ranges() {
        let r = Ranges::new(Level::Full, 4);
        assert_eq!((r.exhaustive, r.fixed_counts, r.double_counts), (4, 4, 4));
        assert_eq!(r.unit_distribution, 10);
    }
}
