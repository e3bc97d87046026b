//! Elementary integer arithmetic.

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// Prime factorisation as `(prime, exponent)` pairs in increasing order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Returns `(p, k)` when `n = p^k` with `p` prime and `k >= 1`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    match factorize(n).as_slice() {
        [(p, k)] => Some((*p, *k)),
        _ => None,
    }
}

/// Sum and number of the positive divisors of `r`.
///
/// `sigma_tau(4) == (7, 3)`.
pub fn sigma_tau(r: u64) -> (u64, u64) {
    assert!(r >= 1, "sigma_tau is defined for r >= 1");
    factorize(r).iter().fold((1, 1), |(s, t), &(p, e)| {
        // (p^(e+1) - 1) / (p - 1)
        let geometric = (p.pow(e + 1) - 1) / (p - 1);
        (s * geometric, t * (e as u64 + 1))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_tau_matches_divisor_enumeration() {
        for r in 1..=200u64 {
            let divisors: Vec<u64> = (1..=r).filter(|d| r % d == 0).collect();
            assert_eq!(
                sigma_tau(r),
                (divisors.iter().sum(), divisors.len() as u64),
                "r = {r}"
            );
        }
        assert_eq!(sigma_tau(4), (7, 3));
        assert_eq!(sigma_tau(1), (1, 1));
        assert_eq!(sigma_tau(12), (28, 6));
    }

    #[test]
    fn primes_and_powers() {
        assert!(is_prime(2) && is_prime(3) && is_prime(97));
        assert!(!is_prime(1) && !is_prime(9) && !is_prime(0));
        assert_eq!(prime_power(243), Some((3, 5)));
        assert_eq!(prime_power(12), None);
        assert_eq!(lcm(4, 6), 12);
    }
}
