use crate::types::Assignment;

/// Every non-increasing `k`-vector of non-negative integers summing to `n`,
/// i.e. the partitions of `n` into at most `k` parts padded with zeros.
///
/// Yields in reverse-lexicographic order, starting from `[n, 0, .., 0]`.
pub fn enumerate_decreasing_assignments(n: usize, k: usize) -> DecreasingAssignments {
    DecreasingAssignments::new(n, k)
}

#[derive(Debug, Clone)]
pub struct DecreasingAssignments {
    current: Option<Vec<usize>>,
}

impl DecreasingAssignments {
    fn new(n: usize, k: usize) -> Self {
        let current = match k {
            // with no parts only the empty sum is representable
            0 => (n == 0).then(Vec::new),
            _ => {
                let mut first = vec![0; k];
                first[0] = n;
                Some(first)
            }
        };
        Self { current }
    }
}

/// Advances `parts` to its reverse-lexicographic successor in place.
/// Returns false when `parts` was the last partition.
fn advance(parts: &mut [usize]) -> bool {
    let k = parts.len();
    let mut rest = 0;
    for j in (0..k).rev() {
        let v = parts[j];
        if v >= 1 {
            let lowered = v - 1;
            let spill = rest + 1;
            // positions after j must hold `spill` with each part <= lowered
            if lowered > 0 && spill <= lowered * (k - 1 - j) {
                parts[j] = lowered;
                let mut left = spill;
                for slot in &mut parts[j + 1..] {
                    *slot = left.min(lowered);
                    left -= *slot;
                }
                return true;
            }
        }
        rest += v;
    }
    false
}

impl Iterator for DecreasingAssignments {
    type Item = Assignment;

    fn next(&mut self) -> Option<Assignment> {
        let out = self.current.take()?;
        let mut successor = out.clone();
        if advance(&mut successor) {
            self.current = Some(successor);
        }
        Some(Assignment::new(out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn collect(n: usize, k: usize) -> Vec<Vec<usize>> {
        enumerate_decreasing_assignments(n, k)
            .map(Assignment::into_inner)
            .collect()
    }

    /// Brute force: filter all k-tuples in 0..=n.
    fn filtered(n: usize, k: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = vec![0; k];
        loop {
            if cur.iter().sum::<usize>() == n && cur.windows(2).all(|w| w[0] >= w[1]) {
                out.push(cur.clone());
            }
            let mut i = 0;
            loop {
                if i == k {
                    out.sort_by(|a, b| b.cmp(a));
                    return out;
                }
                cur[i] += 1;
                if cur[i] <= n {
                    break;
                }
                cur[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn five_into_three() {
        assert_eq!(
            collect(5, 3),
            vec![
                vec![5, 0, 0],
                vec![4, 1, 0],
                vec![3, 2, 0],
                vec![3, 1, 1],
                vec![2, 2, 1]
            ]
        );
    }

    #[test]
    fn trivial_cases() {
        assert_eq!(collect(0, 3), vec![vec![0, 0, 0]]);
        assert_eq!(collect(3, 1), vec![vec![3]]);
        assert_eq!(collect(1, 4), vec![vec![1, 0, 0, 0]]);
    }

    #[test]
    fn partition_counts() {
        assert_eq!(collect(5, 3).len(), 5);
        assert_eq!(collect(9, 5).len(), 23);
        // p(12) = 77 with unrestricted parts
        assert_eq!(collect(12, 12).len(), 77);
    }

    #[test]
    fn matches_filtered_tuples() {
        for n in 0..=8 {
            for k in 1..=5 {
                assert_eq!(collect(n, k), filtered(n, k), "n={n} k={k}");
            }
        }
    }
}
