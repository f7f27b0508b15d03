//! Mixed-radix counters for exhaustive enumeration of choice assignments.

/// Iterates over every assignment of one option index per position.
/// Zero positions yield exactly one empty assignment.
pub(crate) struct MixedRadix {
    sizes: Vec<usize>,
    current: Vec<usize>,
    done: bool,
}

impl MixedRadix {
    /// Panics if any position has zero options.
    pub(crate) fn new(sizes: Vec<usize>) -> Self {
        assert!(sizes.iter().all(|&s| s > 0), "empty option list");
        let current = vec![0; sizes.len()];
        MixedRadix {
            sizes,
            current,
            done: false,
        }
    }

    /// Total number of assignments, saturating at `u128::MAX`.
    pub(crate) fn count(sizes: &[usize]) -> u128 {
        sizes
            .iter()
            .fold(1u128, |acc, &s| acc.saturating_mul(s as u128))
    }
}

impl Iterator for MixedRadix {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let item = self.current.clone();
        // Odometer increment, least significant position last.
        self.done = true;
        for i in (0..self.current.len()).rev() {
            self.current[i] += 1;
            if self.current[i] < self.sizes[i] {
                self.done = false;
                break;
            }
            self.current[i] = 0;
        }
        if self.current.is_empty() {
            self.done = true;
        }
        Some(item)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn covers_all_assignments_in_order() {
        let all: Vec<Vec<usize>> = MixedRadix::new(vec![2, 3]).collect();
        assert_eq!(
            all,
            vec![
                vec![0, 0],
                vec![0, 1],
                vec![0, 2],
                vec![1, 0],
                vec![1, 1],
                vec![1, 2],
            ]
        );
    }

    #[test]
    fn empty_positions_yield_one_assignment() {
        let all: Vec<Vec<usize>> = MixedRadix::new(vec![]).collect();
        assert_eq!(all, vec![Vec::<usize>::new()]);
    }

    #[test]
    fn counts_saturate() {
        assert_eq!(MixedRadix::count(&[2, 3]), 6);
        assert_eq!(MixedRadix::count(&[]), 1);
        assert_eq!(MixedRadix::count(&[usize::MAX, usize::MAX, 4]), u128::MAX);
    }
}
