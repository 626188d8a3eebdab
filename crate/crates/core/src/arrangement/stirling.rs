use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Row `k` of the unsigned Stirling numbers of the first kind,
/// `c(k, 0..=k)`.
fn stirling_row(k: usize) -> Vec<BigUint> {
    let mut row = vec![BigUint::one()];
    for m in 1..=k {
        let mut next = vec![BigUint::zero(); m + 1];
        for i in 1..=m {
            // c(m, i) = c(m-1, i-1) + (m-1) c(m-1, i)
            next[i] = row[i - 1].clone();
            if i < m {
                next[i] += &row[i] * BigUint::from(m - 1);
            }
        }
        row = next;
    }
    row
}

/// Unsigned Stirling number of the first kind: permutations of `k` elements
/// with exactly `i` cycles. Zero outside `1 <= i <= k` (for `k >= 1`).
pub fn stirling_c(k: usize, i: usize) -> BigUint {
    if i > k {
        return BigUint::zero();
    }
    stirling_row(k).swap_remove(i)
}

/// `c(k, k) + c(k, k-1) + ... + c(k, k-n)`: the largest possible number of
/// orders of `k` spacelike events in `n` space dimensions.
pub fn f_bound(n: usize, k: usize) -> BigUint {
    let row = stirling_row(k);
    (0..=n.min(k)).map(|i| row[k - i].clone()).sum()
}

pub fn factorial(k: usize) -> BigUint {
    (1..=k).map(BigUint::from).product()
}
