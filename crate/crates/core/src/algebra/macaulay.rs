//! Macaulay's bound on the growth of Hilbert functions.

fn binom(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, j| acc * (n - j) as u128 / (j + 1) as u128)
}

/// The `i`-binomial expansion `a = C(a_i, i) + C(a_{i-1}, i-1) + ... + C(a_j, j)`
/// with `a_i > a_{i-1} > ... > a_j >= j >= 1`, as `(a_k, k)` pairs.
pub fn binomial_expansion(mut a: u64, i: u32) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut k = i as u64;
    while a > 0 && k >= 1 {
        let mut top = k;
        while binom(top + 1, k) <= a as u128 {
            top += 1;
        }
        a -= binom(top, k) as u64;
        out.push((top, k as u32));
        k -= 1;
    }
    out
}

/// `a^<i>`: shift every term of the `i`-binomial expansion up by one in both
/// arguments. `0^<i> = 0`.
pub fn macaulay_upper(a: u64, i: u32) -> u64 {
    assert!(i >= 1, "Macaulay bound needs i >= 1");
    binomial_expansion(a, i).iter().map(|&(t, k)| binom(t + 1, k as u64 + 1) as u64).sum()
}
