//! Finite integer sequences, the domain 𝒜 and the transforms δ, μ and γ.
//!
//! A [`RawSequence`] is any non-empty list of non-negative terms. A
//! [`Sequence`] additionally satisfies `0 <= a_i <= i` for every index, which
//! is the membership condition for 𝒜. δ accepts either; μ and γ are defined
//! only on 𝒜 and therefore take a [`Sequence`].

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rank::RankCounter;

pub type Term = u32;

/// Read access to the terms of either sequence kind.
pub trait Terms {
    fn terms(&self) -> &[Term];

    /// Length minus one.
    fn generation(&self) -> usize {
        self.terms().len() - 1
    }
}

/// A non-empty sequence of non-negative integers with no further constraint.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RawSequence(Vec<Term>);

impl RawSequence {
    pub fn new(terms: Vec<Term>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::Empty);
        }
        Ok(RawSequence(terms))
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.0
    }
}

impl Terms for RawSequence {
    fn terms(&self) -> &[Term] {
        &self.0
    }
}

/// A member of 𝒜: non-empty, with `0 <= a_i <= i` at every index.
///
/// The derived ordering is lexicographic with shorter prefixes first; use
/// [`lex_compare`] when the lengths must agree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sequence(Vec<Term>);

impl Sequence {
    pub fn new(terms: Vec<Term>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::Empty);
        }
        check_in_a(&terms)?;
        Ok(Sequence(terms))
    }

    /// The generation-0 sequence `(0)`.
    pub fn root() -> Self {
        Sequence(vec![0])
    }

    /// Wraps terms already known to lie in 𝒜.
    pub(crate) fn from_terms_unchecked(terms: Vec<Term>) -> Self {
        debug_assert!(!terms.is_empty() && validate_terms(&terms));
        Sequence(terms)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn last(&self) -> Term {
        self.0[self.0.len() - 1]
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.0
    }

    pub fn to_raw(&self) -> RawSequence {
        RawSequence(self.0.clone())
    }

    /// Appends a term, returning the child in the tree 𝒯.
    pub fn extended(&self, term: Term) -> Result<Self> {
        let mut terms = Vec::with_capacity(self.0.len() + 1);
        terms.extend_from_slice(&self.0);
        terms.push(term);
        Sequence::new(terms)
    }

    pub fn is_prefix_of(&self, other: &Sequence) -> bool {
        other.0.starts_with(&self.0)
    }
}

impl Terms for Sequence {
    fn terms(&self) -> &[Term] {
        &self.0
    }
}

impl AsRef<[Term]> for Sequence {
    fn as_ref(&self) -> &[Term] {
        &self.0
    }
}

impl TryFrom<RawSequence> for Sequence {
    type Error = Error;

    fn try_from(raw: RawSequence) -> Result<Self> {
        check_in_a(&raw.0)?;
        Ok(Sequence(raw.0))
    }
}

impl From<Sequence> for RawSequence {
    fn from(s: Sequence) -> Self {
        RawSequence(s.0)
    }
}

fn check_in_a(terms: &[Term]) -> Result<()> {
    match terms.iter().enumerate().find(|&(i, &t)| t as usize > i) {
        Some((index, &value)) => Err(Error::NotInA { index, value }),
        None => Ok(()),
    }
}

fn validate_terms(terms: &[Term]) -> bool {
    terms.iter().enumerate().all(|(i, &t)| t as usize <= i)
}

/// True iff every term satisfies `0 <= a_i <= i`.
pub fn validate_in_a<T: Terms + ?Sized>(s: &T) -> bool {
    validate_terms(s.terms())
}

/// `(δa)_i = #{ j < i : a_j < a_i }`.
pub fn delta<T: Terms + ?Sized>(s: &T) -> Sequence {
    let mut out = Vec::with_capacity(s.terms().len());
    delta_into(s.terms(), &mut out);
    Sequence(out)
}

/// Quadratic δ into a reusable buffer.
pub fn delta_into(terms: &[Term], out: &mut Vec<Term>) {
    out.clear();
    for (i, &t) in terms.iter().enumerate() {
        // bounded by i, so wrapping never happens; unchecked adds vectorize
        let smaller = terms[..i]
            .iter()
            .fold(0 as Term, |c, &x| c.wrapping_add(Term::from(x < t)));
        out.push(smaller);
    }
}

/// `(γa)_i = #{ j < i : a_j >= a_i }`, written directly rather than as μδ.
pub fn gamma_into(terms: &[Term], out: &mut Vec<Term>) {
    out.clear();
    for (i, &t) in terms.iter().enumerate() {
        let not_smaller = terms[..i]
            .iter()
            .fold(0 as Term, |c, &x| c.wrapping_add(Term::from(x >= t)));
        out.push(not_smaller);
    }
}

/// Same contract as [`delta`] in `O(n log n)`, via a binary indexed tree
/// over the ranks of the distinct term values.
pub fn delta_fast<T: Terms + ?Sized>(s: &T) -> Sequence {
    let terms = s.terms();
    let n = terms.len();
    let max = terms.iter().copied().max().unwrap_or(0) as usize;
    let mut out = Vec::with_capacity(n);

    if max <= 2 * n {
        let mut counter = RankCounter::new(max + 1);
        for &t in terms {
            out.push(counter.count_below(t as usize));
            counter.insert(t as usize);
        }
    } else {
        // Sparse values: compress to ranks so the tree stays O(n).
        let mut distinct = terms.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        let mut counter = RankCounter::new(distinct.len());
        for &t in terms {
            let rank = distinct.binary_search(&t).expect("value was inserted");
            out.push(counter.count_below(rank));
            counter.insert(rank);
        }
    }
    Sequence(out)
}

/// Mirror involution `(μa)_i = i - a_i`.
pub fn mu(s: &Sequence) -> Sequence {
    let terms = s.0.iter().enumerate().map(|(i, &t)| i as Term - t).collect();
    Sequence(terms)
}

pub fn gamma(s: &Sequence) -> Sequence {
    let mut out = Vec::with_capacity(s.len());
    gamma_into(&s.0, &mut out);
    Sequence(out)
}

/// Lexicographic comparison within one generation.
pub fn lex_compare(a: &Sequence, b: &Sequence) -> Result<Ordering> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(a.0.cmp(&b.0))
}

pub(crate) fn format_terms(terms: &[Term], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    for (i, t) in terms.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{t}")?;
    }
    Ok(())
}

pub(crate) fn parse_terms(text: &str) -> Result<Vec<Term>> {
    if text.is_empty() {
        return Err(Error::Empty);
    }
    text.split(',')
        .enumerate()
        .map(|(position, token)| {
            // `u32::from_str` accepts a leading '+', the text format does not.
            if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::Parse {
                    position,
                    token: token.to_string(),
                });
            }
            token.parse().map_err(|_| Error::Parse {
                position,
                token: token.to_string(),
            })
        })
        .collect()
}

impl fmt::Display for RawSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_terms(&self.0, f)
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_terms(&self.0, f)
    }
}

impl FromStr for RawSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RawSequence::new(parse_terms(s)?)
    }
}

impl FromStr for Sequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Sequence::new(parse_terms(s)?)
    }
}
