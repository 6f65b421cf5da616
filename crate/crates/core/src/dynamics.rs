//! Orbits of δ, γ and μ on 𝒜, and censuses of their fixed and double points.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::census::{count_matching, CensusConfig};
use crate::error::{Error, Result};
use crate::sequence::{self, delta_into, gamma_into, Sequence, Terms};

/// The endomorphisms of 𝒜 that orbit routines can iterate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Endomorphism {
    Delta,
    DeltaFast,
    Gamma,
    Mu,
}

impl Endomorphism {
    pub const ALL: [Endomorphism; 4] = [
        Endomorphism::Delta,
        Endomorphism::DeltaFast,
        Endomorphism::Gamma,
        Endomorphism::Mu,
    ];

    pub fn apply(self, s: &Sequence) -> Sequence {
        match self {
            Endomorphism::Delta => sequence::delta(s),
            Endomorphism::DeltaFast => sequence::delta_fast(s),
            Endomorphism::Gamma => sequence::gamma(s),
            Endomorphism::Mu => sequence::mu(s),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Endomorphism::Delta => "delta",
            Endomorphism::DeltaFast => "delta-fast",
            Endomorphism::Gamma => "gamma",
            Endomorphism::Mu => "mu",
        }
    }

    /// Application budget that always suffices for [`orbit`] on a
    /// generation-`n` start.
    ///
    /// δ reaches its fixed point within `n(n+1)/2` steps and γ reaches a
    /// double point within `n(n+1)`; detecting the cycle costs `period`
    /// further applications.
    pub fn default_budget(self, n: usize) -> usize {
        match self {
            Endomorphism::Delta | Endomorphism::DeltaFast => n * (n + 1) / 2 + 1,
            Endomorphism::Gamma => n * (n + 1) + 2,
            Endomorphism::Mu => 2,
        }
    }
}

impl fmt::Display for Endomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Endomorphism {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "delta" => Ok(Endomorphism::Delta),
            "delta-fast" | "delta_fast" => Ok(Endomorphism::DeltaFast),
            "gamma" => Ok(Endomorphism::Gamma),
            "mu" => Ok(Endomorphism::Mu),
            other => Err(Error::InvalidArgument(format!("unknown endomorphism {other:?}"))),
        }
    }
}

/// Full record of iterating an endomorphism until a sequence repeats.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitTrace {
    pub start: Sequence,
    /// Index in `visited` of the first sequence that lies on the cycle.
    pub steps_to_cycle: usize,
    pub period: usize,
    /// The terminal cycle, rotated to begin at its lexicographically
    /// smallest element.
    pub cycle: Vec<Sequence>,
    /// Every sequence from `start` up to (not including) the first repeat.
    pub visited: Vec<Sequence>,
}

impl OrbitTrace {
    /// The first point of the orbit that lies on the cycle.
    pub fn cycle_entry(&self) -> &Sequence {
        &self.visited[self.steps_to_cycle]
    }
}

/// Iterates `e` from `start` until some sequence repeats.
///
/// `max_steps` bounds the number of applications; an orbit that has not
/// closed within it yields [`Error::BudgetExceeded`].
pub fn orbit(start: &Sequence, e: Endomorphism, max_steps: usize) -> Result<OrbitTrace> {
    if max_steps == 0 {
        return Err(Error::InvalidArgument("max_steps must be at least 1".into()));
    }
    let mut seen: HashMap<Sequence, usize> = HashMap::new();
    let mut visited = vec![start.clone()];
    seen.insert(start.clone(), 0);

    for _ in 0..max_steps {
        let next = e.apply(visited.last().expect("non-empty"));
        if let Some(&entry) = seen.get(&next) {
            let mut cycle = visited[entry..].to_vec();
            let smallest = cycle
                .iter()
                .enumerate()
                .min_by(|a, b| a.1.cmp(b.1))
                .map(|(i, _)| i)
                .expect("cycle is non-empty");
            cycle.rotate_left(smallest);
            return Ok(OrbitTrace {
                start: start.clone(),
                steps_to_cycle: entry,
                period: cycle.len(),
                cycle,
                visited,
            });
        }
        seen.insert(next.clone(), visited.len());
        visited.push(next);
    }
    Err(Error::BudgetExceeded { max_steps })
}

/// [`orbit`] with [`Endomorphism::default_budget`].
pub fn orbit_default(start: &Sequence, e: Endomorphism) -> Result<OrbitTrace> {
    orbit(start, e, e.default_budget(start.generation()))
}

/// Applies δ until the sequence stops changing. Returns the fixed point and
/// the number of applications that changed the sequence.
pub fn stabilize_delta(s: &Sequence) -> (Sequence, usize) {
    let (terms, steps) = stabilize_delta_terms(s.terms());
    (Sequence::from_terms_unchecked(terms), steps)
}

pub(crate) fn stabilize_delta_terms(terms: &[u32]) -> (Vec<u32>, usize) {
    let mut current = terms.to_vec();
    let mut next = Vec::with_capacity(terms.len());
    let mut steps = 0;
    loop {
        delta_into(&current, &mut next);
        if next == current {
            return (current, steps);
        }
        std::mem::swap(&mut current, &mut next);
        steps += 1;
    }
}

/// Applies γ until reaching a point of period dividing 2. Returns that
/// point and the number of applications.
pub fn find_double_point_gamma(s: &Sequence) -> (Sequence, usize) {
    let (terms, steps) = double_point_gamma_terms(s.terms());
    (Sequence::from_terms_unchecked(terms), steps)
}

pub(crate) fn double_point_gamma_terms(terms: &[u32]) -> (Vec<u32>, usize) {
    let mut current = terms.to_vec();
    let mut once = Vec::with_capacity(terms.len());
    let mut twice = Vec::with_capacity(terms.len());
    let mut steps = 0;
    loop {
        gamma_into(&current, &mut once);
        gamma_into(&once, &mut twice);
        if twice == current {
            return (current, steps);
        }
        std::mem::swap(&mut current, &mut once);
        steps += 1;
    }
}

pub fn is_fixed(s: &Sequence, e: Endomorphism) -> bool {
    e.apply(s) == *s
}

/// Period of `s` under γ divides 2.
pub fn is_double_point_gamma(s: &Sequence) -> bool {
    sequence::gamma(&sequence::gamma(s)) == *s
}

/// Brute-force number of δ-fixed sequences in 𝒜ₙ.
pub fn count_fixed_points_delta(n: usize, config: &CensusConfig) -> Result<u64> {
    count_matching(n, config, |terms, scratch| {
        delta_into(terms, &mut scratch.a);
        scratch.a == terms
    })
}

/// Brute-force number of sequences in 𝒜ₙ with γ(γ(s)) = s.
pub fn count_double_points_gamma(n: usize, config: &CensusConfig) -> Result<u64> {
    count_matching(n, config, |terms, scratch| {
        gamma_into(terms, &mut scratch.a);
        gamma_into(&scratch.a, &mut scratch.b);
        scratch.b == terms
    })
}

/// Brute-force number of γ-fixed sequences in 𝒜ₙ.
pub fn count_fixed_points_gamma(n: usize, config: &CensusConfig) -> Result<u64> {
    count_matching(n, config, |terms, scratch| {
        gamma_into(terms, &mut scratch.a);
        scratch.a == terms
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(t: &str) -> Sequence {
        t.parse().unwrap()
    }

    #[test]
    fn orbit_examples() {
        let t = orbit_default(&seq("0,0,1"), Endomorphism::Delta).unwrap();
        assert_eq!(t.steps_to_cycle, 1);
        assert_eq!(t.period, 1);
        assert_eq!(t.cycle, vec![seq("0,0,2")]);
        assert_eq!(t.visited, vec![seq("0,0,1"), seq("0,0,2")]);

        let t = orbit_default(&seq("0,1,0"), Endomorphism::Gamma).unwrap();
        assert_eq!(t.steps_to_cycle, 0);
        assert_eq!(t.period, 2);
        assert_eq!(t.cycle, vec![seq("0,0,2"), seq("0,1,0")]);

        let t = orbit_default(&seq("0"), Endomorphism::Gamma).unwrap();
        assert_eq!((t.steps_to_cycle, t.period), (0, 1));
        assert_eq!(t.cycle, vec![seq("0")]);
    }

    #[test]
    fn orbit_cycle_invariant() {
        for s in crate::enumerate::enumerate_a(4) {
            for e in Endomorphism::ALL {
                let t = orbit_default(&s, e).unwrap();
                assert_eq!(t.period, t.cycle.len());
                for i in 0..t.period {
                    assert_eq!(e.apply(&t.cycle[i]), t.cycle[(i + 1) % t.period]);
                }
                assert!(t.cycle.contains(t.cycle_entry()));
            }
        }
    }

    #[test]
    fn orbit_budget() {
        assert_eq!(
            orbit(&seq("0,0,1"), Endomorphism::Delta, 1),
            Err(Error::BudgetExceeded { max_steps: 1 })
        );
        assert!(orbit(&seq("0,0,1"), Endomorphism::Delta, 2).is_ok());
        assert!(orbit(&seq("0"), Endomorphism::Delta, 0).is_err());
    }

    #[test]
    fn mu_orbits_have_period_at_most_two() {
        let t = orbit_default(&seq("0,1,1"), Endomorphism::Mu).unwrap();
        assert_eq!((t.steps_to_cycle, t.period), (0, 2));
        let t = orbit_default(&seq("0,0,2,1,2"), Endomorphism::Mu).unwrap();
        assert_eq!(t.cycle, vec![seq("0,0,2,1,2"), seq("0,1,0,2,2")]);
        // i - a_i = a_i has no solution at odd i
        let t = orbit_default(&seq("0"), Endomorphism::Mu).unwrap();
        assert_eq!(t.period, 1);
    }

    #[test]
    fn stabilize_examples() {
        assert_eq!(stabilize_delta(&seq("0,1,1")), (seq("0,1,1"), 0));
        assert_eq!(stabilize_delta(&seq("0,0,1")), (seq("0,0,2"), 1));
        let (fixed, steps) = stabilize_delta(&seq("0,1,2,0"));
        assert!(is_fixed(&fixed, Endomorphism::Delta));
        assert!(steps <= 6);
        // 0,1,2,0 is already δ-fixed: every predecessor count matches
        assert_eq!((fixed, steps), (seq("0,1,2,0"), 0));
    }

    #[test]
    fn double_point_examples() {
        assert_eq!(find_double_point_gamma(&seq("0,0,1")), (seq("0,1,0"), 1));
        assert_eq!(find_double_point_gamma(&seq("0,1,2")), (seq("0,1,2"), 0));
        assert_eq!(find_double_point_gamma(&seq("0")), (seq("0"), 0));
    }

    #[test]
    fn fixedness_examples() {
        assert!(is_fixed(&seq("0,1,0"), Endomorphism::Delta));
        assert!(!is_fixed(&seq("0,0,1"), Endomorphism::Delta));
        assert!(is_fixed(&seq("0"), Endomorphism::Gamma));
        assert!(is_double_point_gamma(&seq("0,1,2")));
    }

    #[test]
    fn census_examples() {
        let cfg = CensusConfig::sequential();
        assert_eq!(count_fixed_points_delta(0, &cfg), Ok(1));
        assert_eq!(count_fixed_points_delta(2, &cfg), Ok(5));
        assert_eq!(count_fixed_points_delta(6, &cfg), Ok(429));
        assert_eq!(count_double_points_gamma(0, &cfg), Ok(1));
        assert_eq!(count_double_points_gamma(2, &cfg), Ok(4));
        assert_eq!(count_double_points_gamma(6, &cfg), Ok(216));
    }

    #[test]
    fn endomorphism_names() {
        for e in Endomorphism::ALL {
            assert_eq!(e.name().parse::<Endomorphism>(), Ok(e));
        }
        assert!("sigma".parse::<Endomorphism>().is_err());
    }
}
