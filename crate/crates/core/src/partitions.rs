//! Integer partitions with weakly decreasing parts.

use std::fmt;

use crate::error::{Error, Result};

pub const MAX_WEIGHT: u32 = 60;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, rejecting parts that are zero or increase.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain(format!("{parts:?} is not a partition")));
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// η_i with the 1-based index used in the formulas.
    pub fn part(&self, i: usize) -> u32 {
        self.parts[i - 1]
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", body.join(","))
    }
}

/// All partitions of k in reverse lexicographic order, 1 <= k <= 60.
pub fn partitions_of(k: u32) -> Result<Vec<Partition>> {
    if k == 0 {
        return Err(Error::Domain("partitions are enumerated for k >= 1".into()));
    }
    if k > MAX_WEIGHT {
        return Err(Error::CapExceeded(format!(
            "k = {k} exceeds the enumeration cap {MAX_WEIGHT}"
        )));
    }
    let mut out = Vec::new();
    let mut current = vec![k];
    loop {
        out.push(Partition { parts: current.clone() });
        // drop trailing ones, lower the last part above one, refill greedily
        let mut ones = 0;
        while current.last() == Some(&1) {
            current.pop();
            ones += 1;
        }
        let Some(last) = current.pop() else { break };
        let lowered = last - 1;
        let mut rest = ones + 1;
        current.push(lowered);
        while rest > 0 {
            let take = rest.min(lowered);
            current.push(take);
            rest -= take;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashSet;

    /// p(n) by the pentagonal-number recurrence.
    fn partition_numbers(max: usize) -> Vec<u64> {
        let mut p = vec![0i64; max + 1];
        p[0] = 1;
        for n in 1..=max {
            let mut acc = 0i64;
            for j in 1.. {
                let g1 = j * (3 * j - 1) / 2;
                if g1 > n {
                    break;
                }
                let sign = if j % 2 == 1 { 1 } else { -1 };
                acc += sign * p[n - g1];
                let g2 = j * (3 * j + 1) / 2;
                if g2 <= n {
                    acc += sign * p[n - g2];
                }
            }
            p[n] = acc;
        }
        p.into_iter().map(|v| v as u64).collect()
    }

    /// Counts by dynamic programming over the largest allowed part.
    fn partition_count_dp(n: usize) -> u64 {
        let mut ways = vec![0u64; n + 1];
        ways[0] = 1;
        for part in 1..=n {
            for total in part..=n {
                ways[total] += ways[total - part];
            }
        }
        ways[n]
    }

    #[test]
    fn small_cases() {
        let one = partitions_of(1).unwrap();
        assert_eq!(one, vec![Partition::new(vec![1]).unwrap()]);
        let four: Vec<Vec<u32>> = partitions_of(4).unwrap().iter().map(|p| p.parts().to_vec()).collect();
        assert_eq!(four, vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]);
        assert_eq!(partitions_of(10).unwrap().len() as u64, partition_count_dp(10));
        assert_eq!(partitions_of(10).unwrap().len(), 42);
    }

    #[test]
    fn counts_match_recurrence() {
        let p = partition_numbers(40);
        for k in 1..=40u32 {
            assert_eq!(partitions_of(k).unwrap().len() as u64, p[k as usize], "k={k}");
        }
    }

    #[test]
    fn limits() {
        assert!(matches!(partitions_of(61), Err(Error::CapExceeded(_))));
        assert!(partitions_of(0).is_err());
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::new(vec![3, 1, 1]).unwrap().to_string(), "(3,1,1)");
    }

    proptest! {
        #[test]
        fn well_formed_and_distinct(k in 1u32..=25) {
            let all = partitions_of(k).unwrap();
            let mut seen = HashSet::new();
            for p in &all {
                prop_assert_eq!(p.weight(), k);
                prop_assert!(p.parts().windows(2).all(|w| w[0] >= w[1]));
                prop_assert!(p.parts().iter().all(|&x| x >= 1));
                prop_assert!(seen.insert(p.clone()));
            }
            // reverse lexicographic
            prop_assert!(all.windows(2).all(|w| w[0].parts() > w[1].parts()));
        }
    }
}
