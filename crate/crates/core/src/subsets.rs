//! Deterministic enumeration orders shared by the exhaustive searches.

/// Size-`k` subsets of `0..n` in binary-counter order (vertex 0 is the least
/// significant bit), i.e. ascending value of the membership bitmask.
pub(crate) struct KSubsets {
    n: usize,
    current: Vec<usize>,
    started: bool,
    done: bool,
}

impl KSubsets {
    pub(crate) fn new(n: usize, k: usize) -> Self {
        Self {
            n,
            current: (0..k).collect(),
            started: false,
            done: k > n,
        }
    }

    /// Moves to the next subset; `false` once the sequence is exhausted.
    pub(crate) fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        if !self.started {
            self.started = true;
            return true;
        }
        let k = self.current.len();
        let c = &mut self.current;
        // Lowest element that can move up without colliding with its successor.
        let pivot = (0..k).find(|&i| {
            let limit = if i + 1 < k { c[i + 1] } else { self.n };
            c[i] + 1 < limit
        });
        match pivot {
            Some(i) => {
                c[i] += 1;
                for (j, slot) in c.iter_mut().enumerate().take(i) {
                    *slot = j;
                }
                true
            }
            None => {
                self.done = true;
                false
            }
        }
    }

    pub(crate) fn current(&self) -> &[usize] {
        &self.current
    }
}

/// Rearranges `perm` into the next permutation in lexicographic order.
/// Returns `false` (leaving `perm` untouched) when it is already the last one.
pub(crate) fn next_permutation(perm: &mut [usize]) -> bool {
    let Some(i) = (1..perm.len()).rev().find(|&i| perm[i - 1] < perm[i]) else {
        return false;
    };
    let pivot = i - 1;
    let j = (i..perm.len())
        .rev()
        .find(|&j| perm[j] > perm[pivot])
        .unwrap();
    perm.swap(pivot, j);
    perm[i..].reverse();
    true
}
