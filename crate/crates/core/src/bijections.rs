//! Sequences with bounded increase and their ballot-word and West-tree
//! encodings.
//!
//! A sequence has *m-increase* when `a_0 = 0` and `0 <= a_{i+1} <= a_i + m`.
//! For `m = 1` these are the unit-increase sequences, which also lie in 𝒜.
//! Writing `b_i = a_i - a_{i+1} + m`, each step becomes one positive symbol
//! of weight `m` followed by `b_i` symbols −1; the partial sum after step `i`
//! is exactly `a_{i+1}`, which is why the words never dip below zero.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::family::family_path;
use crate::sequence::{format_terms, Sequence, Term, Terms};

fn check_m_increase(m: u32, terms: &[Term]) -> Result<()> {
    if m == 0 {
        return Err(Error::InvalidArgument("increase bound m must be at least 1".into()));
    }
    match terms.first() {
        None => return Err(Error::Empty),
        Some(&0) => {}
        Some(&t) => {
            return Err(Error::NotIncreaseBounded {
                m,
                reason: format!("first term is {t}, expected 0"),
            })
        }
    }
    for (i, w) in terms.windows(2).enumerate() {
        if u64::from(w[1]) > u64::from(w[0]) + u64::from(m) {
            return Err(Error::NotIncreaseBounded {
                m,
                reason: format!("term {} at index {} exceeds {} + {m}", w[1], i + 1, w[0]),
            });
        }
    }
    Ok(())
}

/// A sequence in 𝒜 with `a_{i+1} <= a_i + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnitIncreaseSequence(Sequence);

impl UnitIncreaseSequence {
    pub fn new(s: Sequence) -> Result<Self> {
        check_m_increase(1, s.terms())?;
        Ok(UnitIncreaseSequence(s))
    }

    pub fn as_sequence(&self) -> &Sequence {
        &self.0
    }

    pub fn into_sequence(self) -> Sequence {
        self.0
    }
}

impl Terms for UnitIncreaseSequence {
    fn terms(&self) -> &[Term] {
        self.0.terms()
    }
}

impl TryFrom<MIncreaseSequence> for UnitIncreaseSequence {
    type Error = Error;

    fn try_from(s: MIncreaseSequence) -> Result<Self> {
        if s.m != 1 {
            return Err(Error::InvalidArgument(format!("expected m = 1, got m = {}", s.m)));
        }
        // unit increase from 0 keeps a_i <= i
        Ok(UnitIncreaseSequence(Sequence::from_terms_unchecked(s.terms)))
    }
}

impl fmt::Display for UnitIncreaseSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for UnitIncreaseSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        UnitIncreaseSequence::new(s.parse()?)
    }
}

/// `a_0 = 0` and `0 <= a_{i+1} <= a_i + m`. Not necessarily in 𝒜 for `m > 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MIncreaseSequence {
    m: u32,
    terms: Vec<Term>,
}

impl MIncreaseSequence {
    pub fn new(m: u32, terms: Vec<Term>) -> Result<Self> {
        check_m_increase(m, &terms)?;
        Ok(MIncreaseSequence { m, terms })
    }

    pub fn parse(m: u32, text: &str) -> Result<Self> {
        Self::new(m, crate::sequence::parse_terms(text)?)
    }

    pub fn m(&self) -> u32 {
        self.m
    }
}

impl Terms for MIncreaseSequence {
    fn terms(&self) -> &[Term] {
        &self.terms
    }
}

impl From<UnitIncreaseSequence> for MIncreaseSequence {
    fn from(s: UnitIncreaseSequence) -> Self {
        MIncreaseSequence {
            m: 1,
            terms: s.0.into_terms(),
        }
    }
}

impl fmt::Display for MIncreaseSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_terms(&self.terms, f)
    }
}

/// Lexicographic odometer over the generation-`n` m-increase sequences.
#[derive(Debug, Clone)]
pub struct MIncreaseIter {
    m: u32,
    current: Option<Vec<Term>>,
}

impl Iterator for MIncreaseIter {
    type Item = MIncreaseSequence;

    fn next(&mut self) -> Option<MIncreaseSequence> {
        let out = self.current.clone()?;
        let terms = self.current.as_mut().expect("checked above");
        let bump = (1..terms.len()).rev().find(|&i| terms[i] < terms[i - 1] + self.m);
        match bump {
            Some(i) => {
                terms[i] += 1;
                terms[i + 1..].fill(0);
            }
            None => self.current = None,
        }
        Some(MIncreaseSequence { m: self.m, terms: out })
    }
}

pub fn enumerate_m_increase(m: u32, n: usize) -> Result<MIncreaseIter> {
    if m == 0 {
        return Err(Error::InvalidArgument("increase bound m must be at least 1".into()));
    }
    Ok(MIncreaseIter {
        m,
        current: Some(vec![0; n + 1]),
    })
}

pub fn enumerate_unit_increase(n: usize) -> impl Iterator<Item = UnitIncreaseSequence> {
    enumerate_m_increase(1, n)
        .expect("m = 1 is valid")
        .map(|s| UnitIncreaseSequence::try_from(s).expect("m = 1"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BallotStep {
    /// The positive symbol, of the word's weight.
    Up,
    /// −1.
    Down,
}

/// A word of positive symbols of a fixed weight and −1's with every partial
/// sum non-negative.
///
/// Text form: `+` and `-` for weight 1 (`"++--"`); for larger weights the
/// positive symbol is the weight in brackets (`"[2]--"`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BallotWord {
    weight: u32,
    steps: Vec<BallotStep>,
}

impl BallotWord {
    pub fn new(weight: u32, steps: Vec<BallotStep>) -> Result<Self> {
        if weight == 0 {
            return Err(Error::MalformedBallot("positive weight must be at least 1".into()));
        }
        let mut sum: i64 = 0;
        for (i, step) in steps.iter().enumerate() {
            sum += match step {
                BallotStep::Up => i64::from(weight),
                BallotStep::Down => -1,
            };
            if sum < 0 {
                return Err(Error::MalformedBallot(format!("partial sum negative at position {i}")));
            }
        }
        Ok(BallotWord { weight, steps })
    }

    /// Parses the text form. An empty string is the empty word of weight 1;
    /// the weight of an empty word does not survive printing.
    pub fn parse(text: &str) -> Result<Self> {
        let mut weight: Option<u32> = None;
        let mut steps = Vec::new();
        let mut rest = text;
        while let Some(c) = rest.chars().next() {
            let w = match c {
                '-' => {
                    steps.push(BallotStep::Down);
                    rest = &rest[1..];
                    continue;
                }
                '+' => {
                    rest = &rest[1..];
                    1
                }
                '[' => {
                    let close = rest
                        .find(']')
                        .ok_or_else(|| Error::BallotSyntax("unclosed '['".into()))?;
                    let digits = &rest[1..close];
                    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                        return Err(Error::BallotSyntax(format!("bad weight {digits:?}")));
                    }
                    let w = digits
                        .parse()
                        .map_err(|_| Error::BallotSyntax(format!("bad weight {digits:?}")))?;
                    rest = &rest[close + 1..];
                    w
                }
                other => return Err(Error::BallotSyntax(format!("unexpected character {other:?}"))),
            };
            match weight {
                Some(prev) if prev != w => {
                    return Err(Error::MalformedBallot(format!("mixed positive weights {prev} and {w}")))
                }
                _ => weight = Some(w),
            }
            steps.push(BallotStep::Up);
        }
        BallotWord::new(weight.unwrap_or(1), steps)
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn steps(&self) -> &[BallotStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn ups(&self) -> usize {
        self.steps.iter().filter(|&&s| s == BallotStep::Up).count()
    }

    pub fn downs(&self) -> usize {
        self.steps.len() - self.ups()
    }

    /// Running sums after each symbol.
    pub fn partial_sums(&self) -> Vec<i64> {
        let mut sum = 0;
        self.steps
            .iter()
            .map(|step| {
                sum += match step {
                    BallotStep::Up => i64::from(self.weight),
                    BallotStep::Down => -1,
                };
                sum
            })
            .collect()
    }
}

impl fmt::Display for BallotWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            match (step, self.weight) {
                (BallotStep::Down, _) => f.write_str("-")?,
                (BallotStep::Up, 1) => f.write_str("+")?,
                (BallotStep::Up, w) => write!(f, "[{w}]")?,
            }
        }
        Ok(())
    }
}

impl FromStr for BallotWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BallotWord::parse(s)
    }
}

fn encode_with_weight(m: u32, terms: &[Term]) -> BallotWord {
    let mut steps = Vec::new();
    for w in terms.windows(2) {
        let downs = w[0] + m - w[1];
        steps.push(BallotStep::Up);
        steps.extend(std::iter::repeat_n(BallotStep::Down, downs as usize));
    }
    BallotWord { weight: m, steps }
}

pub fn encode_ballot(a: &UnitIncreaseSequence) -> BallotWord {
    encode_with_weight(1, a.terms())
}

pub fn encode_ballot_m(a: &MIncreaseSequence) -> BallotWord {
    encode_with_weight(a.m, &a.terms)
}

/// Inverse of [`encode_ballot_m`]: one block per positive symbol, `b_i`
/// being the run of −1's after it.
pub fn decode_ballot_m(w: &BallotWord) -> Result<MIncreaseSequence> {
    let m = w.weight;
    let mut terms: Vec<Term> = vec![0];
    let mut steps = w.steps.iter().peekable();
    while let Some(step) = steps.next() {
        if *step != BallotStep::Up {
            return Err(Error::MalformedBallot(
                "block does not start with a positive symbol".into(),
            ));
        }
        let mut run: u64 = 0;
        while steps.next_if_eq(&&BallotStep::Down).is_some() {
            run += 1;
        }
        let prev = u64::from(*terms.last().expect("non-empty"));
        let next = (prev + u64::from(m))
            .checked_sub(run)
            .ok_or_else(|| Error::MalformedBallot(format!("term {} would be negative", terms.len())))?;
        terms.push(next as Term);
    }
    Ok(MIncreaseSequence { m, terms })
}

pub fn decode_ballot(w: &BallotWord) -> Result<UnitIncreaseSequence> {
    if w.weight != 1 {
        return Err(Error::MalformedBallot(format!(
            "expected unit weight, word has weight {}",
            w.weight
        )));
    }
    UnitIncreaseSequence::try_from(decode_ballot_m(w)?)
}

/// Path of labels in West's tree: every term shifted up by 2.
pub fn west_tree_labels(a: &UnitIncreaseSequence) -> Vec<u64> {
    a.terms().iter().map(|&t| u64::from(t) + 2).collect()
}

/// The m-generalization: every term shifted up by `m + 1`.
pub fn west_tree_labels_m(a: &MIncreaseSequence) -> Vec<u64> {
    let shift = u64::from(a.m) + 1;
    a.terms.iter().map(|&t| u64::from(t) + shift).collect()
}

/// Whether `labels` is a root-to-node path in the generalized West tree:
/// root `m + 1`, and a vertex labelled `x` has children `m+1 ..= m+x`.
pub fn is_west_path(m: u32, labels: &[u64]) -> bool {
    let base = u64::from(m) + 1;
    labels.first() == Some(&base) && labels.windows(2).all(|w| w[1] >= base && w[1] <= u64::from(m) + w[0])
}

/// Maps a self-describing sequence to the unit-increase sequence at the same
/// position in the isomorphic tree.
///
/// Both trees give a vertex of seniority `s` (resp. last term `a`) exactly
/// `s + 2` (resp. `a + 2`) children, so matching children by birth order is
/// a tree isomorphism. The image is the sequence of seniorities along the
/// family path.
pub fn self_describing_to_unit_increase(s: &Sequence) -> Result<UnitIncreaseSequence> {
    let path = family_path(s.terms())
        .ok_or_else(|| Error::InvalidArgument(format!("{s} is not a member of the Catalan family")))?;
    let terms = path.into_iter().map(|p| p as Term).collect();
    Ok(UnitIncreaseSequence(Sequence::from_terms_unchecked(terms)))
}

/// Inverse of [`self_describing_to_unit_increase`].
pub fn unit_increase_to_self_describing(a: &UnitIncreaseSequence) -> Sequence {
    let mut terms: Vec<Term> = vec![0];
    let mut sibship: Vec<Term> = vec![0];
    for (generation, &position) in a.terms().iter().enumerate().skip(1) {
        let position = position as usize;
        let name = if position == sibship.len() {
            generation as Term
        } else {
            sibship[position]
        };
        sibship.truncate(position);
        sibship.push(name);
        terms.push(name);
    }
    Sequence::from_terms_unchecked(terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use BallotStep::{Down as D, Up as U};

    fn unit(t: &str) -> UnitIncreaseSequence {
        t.parse().unwrap()
    }

    #[test]
    fn validation() {
        assert!("0,1,0,1,2".parse::<UnitIncreaseSequence>().is_ok());
        assert!(matches!(
            "0,0,2".parse::<UnitIncreaseSequence>(),
            Err(Error::NotIncreaseBounded { m: 1, .. })
        ));
        assert!(MIncreaseSequence::new(2, vec![0, 2, 4, 1]).is_ok());
        assert!(MIncreaseSequence::new(2, vec![0, 3]).is_err());
        assert!(MIncreaseSequence::new(2, vec![1]).is_err());
        assert!(MIncreaseSequence::new(0, vec![0]).is_err());
        assert_eq!(MIncreaseSequence::new(2, vec![]), Err(Error::Empty));
    }

    #[test]
    fn enumeration_examples() {
        let g1: Vec<String> = enumerate_unit_increase(1).map(|s| s.to_string()).collect();
        assert_eq!(g1, ["0,0", "0,1"]);
        let g2: Vec<String> = enumerate_unit_increase(2).map(|s| s.to_string()).collect();
        assert_eq!(g2, ["0,0,0", "0,0,1", "0,1,0", "0,1,1", "0,1,2"]);
        assert_eq!(enumerate_unit_increase(4).count(), 42);

        let m2: Vec<String> = enumerate_m_increase(2, 1).unwrap().map(|s| s.to_string()).collect();
        assert_eq!(m2, ["0,0", "0,1", "0,2"]);
        assert_eq!(enumerate_m_increase(2, 2).unwrap().count(), 12);
        assert_eq!(enumerate_m_increase(5, 0).unwrap().count(), 1);
        assert!(enumerate_m_increase(0, 2).is_err());
    }

    #[test]
    fn encode_examples() {
        assert_eq!(encode_ballot(&unit("0,1,0")).steps(), &[U, U, D, D]);
        assert_eq!(encode_ballot(&unit("0,1,2")).steps(), &[U, U]);
        assert!(encode_ballot(&unit("0")).is_empty());
        assert_eq!(encode_ballot(&unit("0,1,0")).to_string(), "++--");

        let a = MIncreaseSequence::new(2, vec![0, 2]).unwrap();
        assert_eq!(encode_ballot_m(&a).to_string(), "[2]");
        let a = MIncreaseSequence::new(2, vec![0, 0]).unwrap();
        assert_eq!(encode_ballot_m(&a).to_string(), "[2]--");
    }

    #[test]
    fn decode_examples() {
        assert_eq!(decode_ballot(&"++--".parse().unwrap()), Ok(unit("0,1,0")));
        assert_eq!(decode_ballot(&"+-+-".parse().unwrap()), Ok(unit("0,0,0")));
        assert_eq!(decode_ballot(&"".parse().unwrap()), Ok(unit("0")));
        let m = decode_ballot_m(&"[2]-[2]---".parse().unwrap()).unwrap();
        assert_eq!((m.m(), m.to_string()), (2, "0,1,0".to_string()));
        assert!(decode_ballot(&"[2]".parse().unwrap()).is_err());
    }

    #[test]
    fn malformed_words() {
        for bad in ["-+", "+--", "+x", "[2", "[]", "[a]", "+[2]", "[0]"] {
            assert!(bad.parse::<BallotWord>().is_err(), "{bad:?}");
        }
        assert!(BallotWord::new(1, vec![D]).is_err());
        // a word that parses but starts a block with −1 cannot exist; a
        // hand-built one still decodes into an error
        let w = BallotWord {
            weight: 1,
            steps: vec![D, U],
        };
        assert!(decode_ballot_m(&w).is_err());
    }

    #[test]
    fn ballot_text_roundtrip() {
        for text in ["", "+", "++--+-", "[3]---[3]", "[12]"] {
            assert_eq!(text.parse::<BallotWord>().unwrap().to_string(), text);
        }
    }

    #[test]
    fn west_examples() {
        assert_eq!(west_tree_labels(&unit("0,1,2")), vec![2, 3, 4]);
        assert_eq!(west_tree_labels(&unit("0,0,0")), vec![2, 2, 2]);
        let a = MIncreaseSequence::new(2, vec![0, 2]).unwrap();
        assert_eq!(west_tree_labels_m(&a), vec![3, 5]);
        assert!(is_west_path(1, &[2, 3, 4]));
        assert!(is_west_path(2, &[3, 5]));
        assert!(!is_west_path(1, &[2, 4]));
        assert!(!is_west_path(1, &[3]));
        assert!(!is_west_path(1, &[]));
    }

    #[test]
    fn tree_isomorphism_roundtrip() {
        for n in 0..=7 {
            let family: Vec<Sequence> = crate::family::enumerate_family(n).map(|f| f.into_full_name()).collect();
            let units: Vec<UnitIncreaseSequence> = enumerate_unit_increase(n).collect();
            assert_eq!(family.len(), units.len());
            let mapped: Vec<UnitIncreaseSequence> = family
                .iter()
                .map(|s| self_describing_to_unit_increase(s).unwrap())
                .collect();
            // both enumerations are breadth-first by birth order
            assert_eq!(mapped, units);
            for (s, u) in family.iter().zip(&units) {
                assert_eq!(unit_increase_to_self_describing(u), *s);
            }
        }
        assert!(self_describing_to_unit_increase(&"0,0,1".parse().unwrap()).is_err());
    }
}
