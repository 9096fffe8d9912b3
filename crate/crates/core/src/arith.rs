//! Integer helpers for group orders.

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors in ascending order.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Largest power of `p` dividing `n`.
pub fn p_part(mut n: u64, p: u64) -> u64 {
    if p < 2 {
        return 1;
    }
    let mut part = 1;
    while n > 0 && n.is_multiple_of(p) {
        n /= p;
        part *= p;
    }
    part
}

/// `Some(p)` when `n = p^a` with `a ≥ 1`.
pub fn prime_power_base(n: u64) -> Option<u64> {
    match prime_divisors(n).as_slice() {
        [p] => Some(*p),
        _ => None,
    }
}

pub fn is_power_of(n: u64, p: u64) -> bool {
    n >= 1 && p_part(n, p) == n
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorization_helpers() {
        assert_eq!(prime_divisors(972), vec![2, 3]);
        assert_eq!(p_part(972, 3), 243);
        assert_eq!(p_part(972, 5), 1);
        assert_eq!(prime_power_base(243), Some(3));
        assert_eq!(prime_power_base(1), None);
        assert_eq!(prime_power_base(12), None);
        assert!(is_prime(97) && !is_prime(1) && !is_prime(91));
        assert!(is_power_of(1, 3) && is_power_of(81, 3) && !is_power_of(18, 3));
        assert_eq!(gcd(12, 18), 6);
    }
}
