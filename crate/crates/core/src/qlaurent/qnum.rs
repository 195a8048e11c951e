//! Quantum integers, factorials, and Gaussian binomials.

use super::Laurent;

/// The balanced quantum integer `[k]_{q^a} = (q^{ak} - q^{-ak}) / (q^a - q^{-a})`.
///
/// Panics if `a == 0`.
pub fn q_int(k: i64, a: i64) -> Laurent {
    assert!(a >= 1, "q_int needs a positive base exponent, got {a}");
    if k < 0 {
        return -q_int(-k, a);
    }
    Laurent::from_terms((0..k).map(|j| (a * (k - 1 - 2 * j), 1)))
}

/// `[k]_{q^a}!`, with `[0]! = 1`.
pub fn q_factorial(k: u32, a: i64) -> Laurent {
    (1..=k as i64).fold(Laurent::one(), |acc, j| acc * q_int(j, a))
}

/// The Gaussian binomial `[m brack k]_{q^a}`, computed as a quotient of
/// factorials with an exact-division check.
///
/// Panics if `k > m`, or if the division leaves a remainder (which would be
/// an arithmetic bug, not a user error).
pub fn q_binomial(m: u32, k: u32, a: i64) -> Laurent {
    assert!(k <= m, "q_binomial needs k <= m, got k={k}, m={m}");
    let den = q_factorial(m - k, a) * q_factorial(k, a);
    q_factorial(m, a).div_exact(&den).expect("Gaussian binomial division must be exact")
}

/// `{a} = q^a + q^{-a}`.
pub fn q_brace(a: i64) -> Laurent {
    Laurent::from_terms([(a, 1), (-a, 1)])
}
