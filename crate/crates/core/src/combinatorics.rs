//! Small combinatorial helpers shared by the numeric and symbolic checks.

/// Parity (0 or 1) of the number of inversions of `seq`, which equals the
/// parity of the number of adjacent transpositions that sort it.
pub fn inversion_parity(seq: &[usize]) -> u8 {
    let mut inv = 0usize;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inv += 1;
            }
        }
    }
    (inv % 2) as u8
}

/// `C(n, k)` as a `u128`; panics on overflow.
pub fn choose(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// `C(n, 2) mod 2`, extended to negative `n` by the polynomial `n(n-1)/2`.
pub fn choose2_parity(n: i64) -> u8 {
    (n * (n - 1) / 2).rem_euclid(2) as u8
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_of_small_sequences() {
        assert_eq!(inversion_parity(&[4, 5, 6, 7]), 0);
        assert_eq!(inversion_parity(&[2, 1, 3]), 1);
        assert_eq!(inversion_parity(&[3, 2, 1]), 1);
        assert_eq!(inversion_parity(&[]), 0);
    }

    #[test]
    fn binomials() {
        assert_eq!(choose(8, 7) * choose(7, 6), 56);
        assert_eq!(choose(10, 8) * choose(8, 6), 1260);
        assert_eq!(choose(12, 9) * choose(9, 6), 18480);
        assert_eq!(choose(3, 5), 0);
        assert_eq!(choose2_parity(3), 1);
        assert_eq!(choose2_parity(4), 0);
        assert_eq!(choose2_parity(-1), 1);
    }
}
