//! Exact binomial coefficients and the colexicographic order on fixed-size
//! subsets of `[m] = {1, ..., m}`.
//!
//! Everything here is integer-exact. Overflow is reported as `None` rather
//! than wrapped or approximated, so callers can turn it into a capacity
//! error that names the quantity that blew up.

/// `C(n, k)` as an exact `u64`, or `None` if the value does not fit.
///
/// Intermediate products are exact at every step (the running value after
/// `t` factors is `C(n-k+t, t)`, itself a binomial coefficient bounded by
/// the final result), so `None` is returned only when the result really
/// exceeds `u64::MAX`.
pub fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for t in 1..=k {
        acc = acc.checked_mul((n - k + t) as u128)?;
        acc /= t as u128;
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

/// Rank of a strictly increasing subset of `[m]` (1-based elements) in
/// colexicographic order among subsets of the same size. The rank of
/// `{x_1 < ... < x_n}` is the sum of `C(x_t - 1, t)`.
pub fn colex_rank(set: &[u32]) -> Option<u64> {
    debug_assert!(set.windows(2).all(|w| w[0] < w[1]), "set must be sorted");
    let mut rank: u64 = 0;
    for (t, &x) in set.iter().enumerate() {
        rank = rank.checked_add(binomial(u64::from(x) - 1, t as u64 + 1)?)?;
    }
    Some(rank)
}

/// Inverse of [`colex_rank`]: the `rank`-th subset of size `n` in colex
/// order. The caller is responsible for `rank < C(m, n)` when a ground set
/// bound `m` is intended; elements grow as far as the rank demands.
pub fn colex_unrank(mut rank: u64, n: u32) -> Vec<u32> {
    let mut out = vec![0u32; n as usize];
    for t in (1..=n).rev() {
        // Largest x with C(x - 1, t) <= rank; x starts at t where the
        // coefficient is 0.
        let mut x = t;
        while binomial(u64::from(x), u64::from(t)).is_some_and(|c| c <= rank) {
            x += 1;
        }
        rank -= binomial(u64::from(x) - 1, u64::from(t)).expect("shrinking coefficient fits");
        out[t as usize - 1] = x;
    }
    out
}

/// First subset of size `n` in colex order: `{1, ..., n}`.
pub fn colex_first(n: u32) -> Vec<u32> {
    (1..=n).collect()
}

/// Advances `set` to its colex successor among subsets of `[m]`, in place.
/// Returns `false` (leaving `set` untouched) when `set` is already the last
/// subset, `{m-n+1, ..., m}`.
pub fn colex_successor(set: &mut [u32], m: u32) -> bool {
    let n = set.len();
    for t in 0..n {
        let bound = if t + 1 < n { set[t + 1] } else { m + 1 };
        if set[t] + 1 < bound {
            set[t] += 1;
            for (slot, value) in set[..t].iter_mut().zip(1..) {
                *slot = value;
            }
            return true;
        }
    }
    false
}
