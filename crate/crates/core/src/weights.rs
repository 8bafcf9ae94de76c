//! Dominant weights of `U(n)`: non-increasing integer tuples.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{check_len, Error, Result};

/// A non-increasing integer tuple `λ_1 ≥ … ≥ λ_n`, `n ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct DominantWeight(Vec<i64>);

/// Distinct values of a weight with their multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupedWeight {
    pub values: Vec<i64>,
    pub multiplicities: Vec<usize>,
}

impl DominantWeight {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        validate(&entries)
    }

    /// The scalar weight `(a, …, a)`.
    pub fn scalar(a: i64, n: usize) -> Self {
        assert!(n >= 1, "weights have at least one entry");
        DominantWeight(vec![a; n])
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Adds `c` to every entry (twist by a power of the determinant).
    pub fn shifted(&self, c: i64) -> Self {
        DominantWeight(self.0.iter().map(|x| x + c).collect())
    }

    pub fn group(&self) -> GroupedWeight {
        group(self)
    }

    pub fn is_strongly_dominant(&self) -> bool {
        is_strongly_dominant(self)
    }

    pub fn is_scalar(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }
}

/// Checks that `seq` is non-increasing; the error carries the first index `i`
/// with `seq[i] < seq[i + 1]`.
pub fn validate(seq: &[i64]) -> Result<DominantWeight> {
    if seq.is_empty() {
        return Err(Error::EmptyWeight);
    }
    if let Some(i) = seq.windows(2).position(|w| w[0] < w[1]) {
        return Err(Error::NotDominant(i));
    }
    Ok(DominantWeight(seq.to_vec()))
}

pub fn group(lambda: &DominantWeight) -> GroupedWeight {
    let mut values: Vec<i64> = Vec::new();
    let mut multiplicities: Vec<usize> = Vec::new();
    for &x in lambda.entries() {
        match values.last() {
            Some(&v) if v == x => *multiplicities.last_mut().unwrap() += 1,
            _ => {
                values.push(x);
                multiplicities.push(1);
            }
        }
    }
    GroupedWeight {
        values,
        multiplicities,
    }
}

impl GroupedWeight {
    /// Number of distinct values.
    pub fn m(&self) -> usize {
        self.values.len()
    }

    pub fn n(&self) -> usize {
        self.multiplicities.iter().sum()
    }

    pub fn expand(&self) -> DominantWeight {
        let entries = self
            .values
            .iter()
            .zip(&self.multiplicities)
            .flat_map(|(&v, &k)| std::iter::repeat_n(v, k))
            .collect();
        DominantWeight(entries)
    }

    /// Index of the first coordinate of each group.
    pub fn offsets(&self) -> Vec<usize> {
        self.multiplicities
            .iter()
            .scan(0, |acc, &k| {
                let start = *acc;
                *acc += k;
                Some(start)
            })
            .collect()
    }
}

pub fn is_strongly_dominant(lambda: &DominantWeight) -> bool {
    lambda.entries().windows(2).all(|w| w[0] > w[1])
}

/// `λ_1 ≥ μ_1 ≥ λ_2 ≥ μ_2 ≥ … ≥ λ_n ≥ μ_n`, i.e. `λ/μ` is a horizontal strip.
pub fn interlaces_below(lambda: &DominantWeight, mu: &DominantWeight) -> Result<bool> {
    check_len(lambda.n(), mu.n())?;
    let l = lambda.entries();
    let m = mu.entries();
    let n = l.len();
    Ok((0..n).all(|i| l[i] >= m[i] && (i + 1 == n || m[i] >= l[i + 1])))
}

/// Dimension of the irreducible `U(n)`-module with highest weight `λ`,
/// `Π_{i<j} (λ_i − λ_j + j − i) / (j − i)`.
pub fn weyl_dimension(lambda: &DominantWeight) -> BigInt {
    let l = lambda.entries();
    let n = l.len();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..n {
        for j in i + 1..n {
            let gap = (j - i) as i64;
            num *= BigInt::from(l[i] - l[j] + gap);
            den *= BigInt::from(gap);
        }
    }
    debug_assert!((&num % &den).is_zero());
    num / den
}

/// All dominant weights of length `n` with entries in `lo..=hi`, in
/// lexicographically decreasing order.
pub fn dominant_in_box(n: usize, lo: i64, hi: i64) -> Vec<DominantWeight> {
    fn rec(n: usize, lo: i64, cap: i64, cur: &mut Vec<i64>, out: &mut Vec<DominantWeight>) {
        if cur.len() == n {
            out.push(DominantWeight(cur.clone()));
            return;
        }
        for v in (lo..=cap).rev() {
            cur.push(v);
            rec(n, lo, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n >= 1 && lo <= hi {
        rec(n, lo, hi, &mut Vec::with_capacity(n), &mut out);
    }
    out
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Parses comma-separated integers, e.g. `"3,1,-2"`. Surrounding
/// parentheses are tolerated.
impl FromStr for DominantWeight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let entries = body
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|e| Error::Parse(format!("weight entry `{}`: {e}", t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        validate(&entries)
    }
}

impl TryFrom<Vec<i64>> for DominantWeight {
    type Error = Error;

    fn try_from(v: Vec<i64>) -> Result<Self> {
        validate(&v)
    }
}

impl From<DominantWeight> for Vec<i64> {
    fn from(w: DominantWeight) -> Self {
        w.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(v: &[i64]) -> DominantWeight {
        validate(v).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(validate(&[3, 3, 1]).is_ok());
        assert_eq!(validate(&[1, 2]), Err(Error::NotDominant(0)));
        assert_eq!(validate(&[5, 4, 4, 6]), Err(Error::NotDominant(2)));
        assert!(validate(&[-1, -1, -1]).is_ok());
        assert_eq!(validate(&[]), Err(Error::EmptyWeight));
    }

    #[test]
    fn group_examples() {
        let g = group(&w(&[3, 3, 1]));
        assert_eq!(g.values, vec![3, 1]);
        assert_eq!(g.multiplicities, vec![2, 1]);
        let g = group(&w(&[5, 5, 5]));
        assert_eq!((g.values, g.multiplicities), (vec![5], vec![3]));
        let g = group(&w(&[4, 2, 0]));
        assert_eq!((g.values, g.multiplicities), (vec![4, 2, 0], vec![1, 1, 1]));
        assert_eq!(group(&w(&[2, 2, 1, 0, 0])).offsets(), vec![0, 2, 3]);
    }

    #[test]
    fn strongly_dominant_examples() {
        assert!(w(&[3, 1]).is_strongly_dominant());
        assert!(!w(&[3, 3, 1]).is_strongly_dominant());
        assert!(!w(&[0, 0, 0]).is_strongly_dominant());
    }

    #[test]
    fn interlacing_examples() {
        // Every horizontal strip of size 1 removed from (3,1), by brute force.
        let lambda = w(&[3, 1]);
        let strips: Vec<DominantWeight> = dominant_in_box(2, -2, 4)
            .into_iter()
            .filter(|nu| lambda.sum() - nu.sum() == 1)
            .filter(|nu| {
                let (l, v) = (lambda.entries(), nu.entries());
                l[0] >= v[0] && v[0] >= l[1] && l[1] >= v[1]
            })
            .collect();
        assert_eq!(strips, vec![w(&[3, 0]), w(&[2, 1])]);
        assert!(interlaces_below(&lambda, &w(&[3, 0])).unwrap());

        assert!(!interlaces_below(&w(&[-1, -1, -1]), &w(&[0, 0, -1])).unwrap());
        assert!(interlaces_below(&w(&[4, 2, -1]), &w(&[4, 2, -1])).unwrap());
        assert_eq!(
            interlaces_below(&w(&[1, 0]), &w(&[1, 0, 0])),
            Err(Error::LengthMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn weyl_dimension_examples() {
        assert_eq!(weyl_dimension(&w(&[0, 0, 0])), BigInt::from(1));
        assert_eq!(weyl_dimension(&w(&[1, 0])), BigInt::from(2));
        // Degree-2 monomials in three variables.
        let monomials = (0..=2)
            .flat_map(|a| (0..=2 - a).map(move |b| (a, b)))
            .count();
        assert_eq!(weyl_dimension(&w(&[0, 0, -2])), BigInt::from(monomials));
        // Overflows i64 along the way.
        let big = w(&[4000, 3000, 2000, 1000, 0, -1000, -2000, -3000]);
        assert!(weyl_dimension(&big) > BigInt::from(i64::MAX));
    }

    #[test]
    fn parse_and_display() {
        let l: DominantWeight = "3,1,-2".parse().unwrap();
        assert_eq!(l.entries(), &[3, 1, -2]);
        assert_eq!(l.to_string(), "(3,1,-2)");
        assert_eq!("(3, 1,-2)".parse::<DominantWeight>().unwrap(), l);
        assert!("1,2".parse::<DominantWeight>().is_err());
        assert!("1,x".parse::<DominantWeight>().is_err());
        assert_eq!(serde_json::to_string(&l).unwrap(), "[3,1,-2]");
        assert!(serde_json::from_str::<DominantWeight>("[0,1]").is_err());
    }

    #[test]
    fn box_enumeration_counts() {
        // Multisets of size n from 7 values.
        assert_eq!(dominant_in_box(2, -3, 3).len(), 28);
        assert_eq!(dominant_in_box(3, -3, 3).len(), 84);
    }

    fn weight_strategy() -> impl Strategy<Value = DominantWeight> {
        prop::collection::vec(-10i64..10, 1..7).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            DominantWeight(v)
        })
    }

    proptest! {
        #[test]
        fn group_round_trip(l in weight_strategy()) {
            let g = group(&l);
            prop_assert_eq!(g.expand(), l.clone());
            prop_assert!(g.values.windows(2).all(|p| p[0] > p[1]));
            prop_assert_eq!(
                is_strongly_dominant(&l),
                g.multiplicities.iter().all(|&k| k == 1)
            );
        }

        #[test]
        fn interlacing_lowers_sum(l in weight_strategy(), seed in prop::collection::vec(0i64..4, 6)) {
            let n = l.n();
            let e = l.entries();
            let mu: Vec<i64> = (0..n)
                .map(|i| if i + 1 < n { e[i] - (seed[i] % (e[i] - e[i + 1] + 1)) } else { e[i] - seed[i] })
                .collect();
            let mu = validate(&mu).unwrap();
            prop_assert!(interlaces_below(&l, &mu).unwrap());
            prop_assert!(l.sum() >= mu.sum());
        }

        #[test]
        fn dimension_twist_invariant(l in weight_strategy(), c in -50i64..50) {
            prop_assert_eq!(weyl_dimension(&l), weyl_dimension(&l.shifted(c)));
        }
    }
}
