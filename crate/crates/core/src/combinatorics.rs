//! Exact closed-form counts in arbitrary precision.
//!
//! Every division in these formulas is exact; a non-zero remainder means the
//! implementation is wrong and panics.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type BigCount = BigUint;

fn exact_div(numerator: BigUint, denominator: impl Into<BigUint>) -> BigUint {
    let denominator = denominator.into();
    let (q, r) = numerator.div_rem(&denominator);
    assert!(r.is_zero(), "inexact division in closed-form count");
    q
}

/// `C(n, k)` by the multiplicative method, dividing exactly at every step.
pub fn binomial(n: u64, k: u64) -> BigCount {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 1..=k {
        // acc = C(n-k+i-1, i-1); times (n-k+i) is divisible by i
        acc = exact_div(acc * (n - k + i), i);
    }
    acc
}

/// `c_n = C(2n, n) / (n+1)`.
pub fn catalan(n: u64) -> BigCount {
    exact_div(binomial(2 * n, n), n + 1)
}

/// `c_0 .. c_max` from `c_{n+1} = Σ c_i c_{n-i}`.
pub fn catalan_by_recursion(max: usize) -> Vec<BigCount> {
    let mut c: Vec<BigCount> = vec![BigUint::one()];
    for n in 0..max {
        let next = (0..=n).map(|i| &c[i] * &c[n - i]).sum();
        c.push(next);
    }
    c
}

/// `c_m(n) = C((m+1)n, n) / (mn+1)`.
pub fn fuss_catalan(m: u64, n: u64) -> Result<BigCount> {
    if m == 0 {
        return Err(Error::InvalidArgument("Fuss-Catalan order m must be at least 1".into()));
    }
    Ok(exact_div(binomial((m + 1) * n, n), m * n + 1))
}

/// Words of `ones` +1's and `neg_ones` −1's whose partial sums stay
/// non-negative: `(n+1-k)/(n+1) · C(n+k, n)`.
pub fn ballot_count(ones: u64, neg_ones: u64) -> Result<BigCount> {
    if neg_ones > ones {
        return Err(Error::InvalidArgument(format!(
            "ballot count needs neg_ones <= ones, got {neg_ones} > {ones}"
        )));
    }
    let n = ones;
    let k = neg_ones;
    Ok(exact_div(binomial(n + k, n) * (n + 1 - k), n + 1))
}

/// Unit-increase sequences of generation `n` ending in `r`:
/// `(r+1)/(n+1) · C(2n-r, n)`.
pub fn unit_increase_count_closed(n: u64, r: u64) -> Result<BigCount> {
    if r > n {
        return Err(Error::InvalidArgument(format!("final term {r} exceeds generation {n}")));
    }
    Ok(exact_div(binomial(2 * n - r, n) * (r + 1), n + 1))
}

/// Family members of generation `n` named `r`: `c_r · c_{n-r}`.
pub fn name_distribution_closed(n: u64, r: u64) -> Result<BigCount> {
    if r > n {
        return Err(Error::InvalidArgument(format!("name {r} exceeds generation {n}")));
    }
    Ok(catalan(r) * catalan(n - r))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigCount {
        BigUint::from(v)
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(0, 0), big(1));
        assert_eq!(binomial(6, 2), big(15));
        assert_eq!(binomial(9, 3), big(84));
        assert_eq!(binomial(3, 5), big(0));
        assert_eq!(binomial(60, 30), big(118264581564861424));
        // Pascal's rule
        for n in 1..40 {
            for k in 1..n {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
            }
        }
    }

    #[test]
    fn catalan_examples() {
        assert_eq!(catalan(0), big(1));
        assert_eq!(catalan(3), big(5));
        assert_eq!(catalan(10), big(16796));
        let rec = catalan_by_recursion(30);
        for (n, c) in rec.iter().enumerate() {
            assert_eq!(catalan(n as u64), *c);
        }
        assert_eq!(catalan(30), big(3814986502092304));
    }

    #[test]
    fn fuss_examples() {
        assert_eq!(fuss_catalan(1, 5), Ok(big(42)));
        assert_eq!(fuss_catalan(2, 2), Ok(big(3)));
        assert_eq!(fuss_catalan(2, 3), Ok(big(12)));
        assert!(fuss_catalan(0, 3).is_err());
        for n in 0..20 {
            assert_eq!(fuss_catalan(1, n), Ok(catalan(n)));
        }
    }

    #[test]
    fn ballot_examples() {
        assert_eq!(ballot_count(3, 2), Ok(big(5)));
        for n in 0..10 {
            assert_eq!(ballot_count(n, 0), Ok(big(1)));
            assert_eq!(ballot_count(n, n), Ok(catalan(n)));
        }
        assert_eq!(ballot_count(4, 4), Ok(big(14)));
        assert!(ballot_count(2, 3).is_err());
    }

    #[test]
    fn unit_increase_examples() {
        assert_eq!(unit_increase_count_closed(2, 0), Ok(big(2)));
        assert_eq!(unit_increase_count_closed(2, 2), Ok(big(1)));
        for n in 0..12 {
            assert_eq!(unit_increase_count_closed(n, n), Ok(big(1)));
        }
        assert!(unit_increase_count_closed(2, 3).is_err());
    }

    #[test]
    fn name_distribution_examples() {
        assert_eq!(name_distribution_closed(2, 1), Ok(big(1)));
        assert_eq!(name_distribution_closed(4, 2), Ok(big(4)));
        for n in 0..12 {
            assert_eq!(name_distribution_closed(n, 0), Ok(catalan(n)));
        }
    }

    #[test]
    fn row_sums() {
        for n in 0..=30u64 {
            let names: BigCount = (0..=n).map(|r| name_distribution_closed(n, r).unwrap()).sum();
            let units: BigCount = (0..=n).map(|r| unit_increase_count_closed(n, r).unwrap()).sum();
            assert_eq!(names, catalan(n + 1));
            assert_eq!(units, catalan(n + 1));
        }
    }
}
