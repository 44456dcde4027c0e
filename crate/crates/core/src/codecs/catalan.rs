use num_bigint::BigUint;
use num_traits::{One, Zero};

/// `C_n = binomial(2n, n) / (n + 1)`.
pub fn catalan(n: usize) -> BigUint {
    let mut c = BigUint::one();
    for k in 0..n {
        c = c * BigUint::from(2 * (2 * k + 1)) / BigUint::from(k + 2);
    }
    c
}

/// `C_0, ..., C_n`.
pub fn catalan_table(n: usize) -> Vec<BigUint> {
    let mut t = Vec::with_capacity(n + 1);
    t.push(BigUint::one());
    for k in 0..n {
        let next = &t[k] * BigUint::from(2 * (2 * k + 1)) / BigUint::from(k + 2);
        t.push(next);
    }
    t
}

/// `ceil(log2 u)` for `u >= 1`; 0 for `u <= 1`.
pub fn ceil_log2(u: &BigUint) -> usize {
    if u.is_zero() || u.is_one() {
        return 0;
    }
    let m = u - BigUint::one();
    m.bits() as usize
}

/// Width in bits of a fixed-width Catalan rank of size `n`.
pub fn ranked_width(n: usize) -> usize {
    ceil_log2(&catalan(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let expected = [1u32, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796];
        for (n, &c) in expected.iter().enumerate() {
            assert_eq!(catalan(n), BigUint::from(c));
        }
        assert_eq!(catalan_table(10), expected.iter().map(|&c| BigUint::from(c)).collect::<Vec<_>>());
    }

    #[test]
    fn recursion_and_closed_form_agree() {
        let t = catalan_table(30);
        for n in 1..=30 {
            let rec: BigUint = (0..n).map(|i| &t[i] * &t[n - 1 - i]).sum();
            assert_eq!(rec, t[n], "n = {n}");
        }
    }

    #[test]
    fn widths() {
        let expected = [0, 1, 3, 4, 6, 8, 9, 11, 13, 15];
        for (i, &w) in expected.iter().enumerate() {
            assert_eq!(ranked_width(i + 1), w);
        }
        for n in 0..=64 {
            assert!(ranked_width(n) <= 2 * n);
        }
        assert_eq!(ceil_log2(&BigUint::from(1024u32)), 10);
        assert_eq!(ceil_log2(&BigUint::from(1025u32)), 11);
    }
}
