//! Lexicographic enumeration of a generation 𝒜ₙ.
//!
//! Digit `i` of the odometer runs over `0..=i`, so the lexicographic rank of
//! a sequence is its value in the mixed radix `(1, 2, ..., n+1)`. Ranks let
//! callers cut `[0, (n+1)!)` into contiguous blocks and walk each block
//! independently.

use std::ops::Range;

use crate::sequence::{Sequence, Term, Terms};

/// Largest generation the odometer accepts.
pub const MAX_GENERATION: usize = 20;

/// `(n+1)!`, the size of 𝒜ₙ.
pub fn generation_size(n: usize) -> u128 {
    (1..=n as u128 + 1).product()
}

/// Lexicographic rank of `s` within its generation.
pub fn rank<T: Terms + ?Sized>(s: &T) -> u128 {
    s.terms()
        .iter()
        .enumerate()
        .fold(0u128, |acc, (i, &t)| acc * (i as u128 + 1) + t as u128)
}

/// Inverse of [`rank`]. Panics if `r >= (n+1)!`.
pub fn unrank(n: usize, r: u128) -> Sequence {
    assert!(r < generation_size(n), "rank {r} out of range for generation {n}");
    let mut terms = vec![0; n + 1];
    let mut rest = r;
    for i in (0..=n).rev() {
        let radix = i as u128 + 1;
        terms[i] = (rest % radix) as Term;
        rest /= radix;
    }
    Sequence::from_terms_unchecked(terms)
}

/// Splits `[0, (n+1)!)` into at most `parts` contiguous, non-empty blocks
/// of near-equal size.
pub fn partition(n: usize, parts: usize) -> Vec<Range<u128>> {
    let total = generation_size(n);
    let parts = (parts.max(1) as u128).min(total);
    let base = total / parts;
    let extra = total % parts;
    let mut start = 0;
    (0..parts)
        .map(|k| {
            let len = base + u128::from(k < extra);
            let block = start..start + len;
            start += len;
            block
        })
        .collect()
}

/// Mixed-radix odometer over a rank range of 𝒜ₙ.
///
/// [`Odometer::advance`] steps in place without allocating; the [`Iterator`]
/// implementation clones each state into a [`Sequence`].
#[derive(Debug, Clone)]
pub struct Odometer {
    digits: Vec<Term>,
    remaining: u128,
    fresh: bool,
}

impl Odometer {
    /// All of 𝒜ₙ.
    pub fn new(n: usize) -> Self {
        Self::range(n, 0..generation_size(n))
    }

    /// Ranks `range.start..range.end` of 𝒜ₙ.
    pub fn range(n: usize, range: Range<u128>) -> Self {
        assert!(n <= MAX_GENERATION, "generation {n} above {MAX_GENERATION}");
        let total = generation_size(n);
        assert!(range.end <= total, "range end {} beyond {total}", range.end);
        let remaining = range.end.saturating_sub(range.start);
        let digits = if remaining > 0 {
            unrank(n, range.start).into_terms()
        } else {
            vec![0; n + 1]
        };
        Odometer {
            digits,
            remaining,
            fresh: true,
        }
    }

    pub fn remaining(&self) -> u128 {
        self.remaining
    }

    /// Moves to the next sequence and returns its terms.
    pub fn advance(&mut self) -> Option<&[Term]> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        if self.fresh {
            self.fresh = false;
        } else {
            self.tick();
        }
        Some(&self.digits)
    }

    fn tick(&mut self) {
        for i in (0..self.digits.len()).rev() {
            if (self.digits[i] as usize) < i {
                self.digits[i] += 1;
                return;
            }
            self.digits[i] = 0;
        }
    }
}

impl Iterator for Odometer {
    type Item = Sequence;

    fn next(&mut self) -> Option<Sequence> {
        self.advance().map(|t| Sequence::from_terms_unchecked(t.to_vec()))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        match usize::try_from(self.remaining) {
            Ok(n) => (n, Some(n)),
            Err(_) => (usize::MAX, None),
        }
    }
}

/// Lazily yields every sequence of 𝒜ₙ once, in lexicographic order.
pub fn enumerate_a(n: usize) -> Odometer {
    Odometer::new(n)
}
