//! Small exact-integer helpers shared by the other modules.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

/// `base^exp mod m`, with `m ≥ 1`.
pub fn mod_pow(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    if m <= u32::MAX as u64 {
        let mut acc = 1u64;
        let mut b = base % m;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * b % m;
            }
            b = b * b % m;
            exp >>= 1;
        }
        return acc;
    }
    let m128 = m as u128;
    let mut acc: u128 = 1;
    let mut b = (base % m) as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

/// Same as [`mod_pow`] over arbitrary-precision integers.
pub fn big_mod_pow(base: &BigUint, exp: &BigUint, m: &BigUint) -> BigUint {
    base.modpow(exp, m)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 || n % 3 == 0 {
        return false;
    }
    let mut i = 5u64;
    while i.saturating_mul(i) <= n {
        if n % i == 0 || n % (i + 2) == 0 {
            return false;
        }
        i += 6;
    }
    true
}

/// Prime factorisation by trial division as `(prime, exponent)` pairs in
/// increasing order of the prime.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn least_prime_divisor(n: u64) -> Option<u64> {
    factorize(n).first().map(|&(p, _)| p)
}

/// Primes `≤ limit` in increasing order.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter_map(|(k, &b)| b.then_some(k as u64))
        .collect()
}

/// Carmichael's function λ(n): the exponent of `(Z/n)^×`.
pub fn carmichael(n: u64) -> u64 {
    if n <= 2 {
        return 1;
    }
    factorize(n).into_iter().fold(1, |acc, (p, e)| {
        let pe = p.pow(e);
        let l = if p == 2 && e >= 3 {
            pe / 4
        } else {
            pe / p * (p - 1)
        };
        lcm(acc, l)
    })
}

/// Multiplicative order of `c` modulo `a`, or `None` when `c` is not a unit.
///
/// Starts from λ(a) and strips prime factors while the power stays 1, so the
/// cost is polynomial in `log a` rather than linear in `a`.
pub fn multiplicative_order(c: u64, a: u64) -> Option<u64> {
    if a == 1 {
        return Some(1);
    }
    if gcd(c % a, a) != 1 {
        return None;
    }
    let lambda = carmichael(a);
    let mut order = lambda;
    for (q, _) in factorize(lambda) {
        while order % q == 0 && mod_pow(c, order / q, a) == 1 {
            order /= q;
        }
    }
    Some(order)
}

/// `⌊log₂ n⌋` for `n ≥ 1`.
pub fn floor_log2(n: u64) -> u32 {
    assert!(n >= 1, "log2 of zero");
    63 - n.leading_zeros()
}

/// `⌈n / d⌉` for `d > 0`.
pub fn ceil_div(n: u64, d: u64) -> u64 {
    n.div_ceil(d)
}

/// Binomial coefficient `C(n, k) mod p` by Lucas' theorem; zero when `k < 0`
/// or `k > n`.
pub fn binomial_mod_p(n: i64, k: i64, p: u64) -> u64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let (mut n, mut k) = (n as u64, k as u64);
    let mut acc = 1u64;
    while n > 0 || k > 0 {
        let (nd, kd) = (n % p, k % p);
        if kd > nd {
            return 0;
        }
        acc = acc * small_binomial(nd, kd) % p;
        n /= p;
        k /= p;
    }
    acc % p
}

fn small_binomial(n: u64, k: u64) -> u64 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// Exact rational with `i128` parts and a positive denominator.
///
/// Values are not kept reduced; comparisons cross-multiply. Intended for the
/// short inequality chains in the proof sweeps, where operands stay small.
#[derive(Clone, Copy, Debug)]
pub struct Frac {
    num: i128,
    den: i128,
}

impl Frac {
    pub fn new(num: i128, den: i128) -> Self {
        assert!(den != 0, "zero denominator");
        if den < 0 {
            Frac { num: -num, den: -den }
        } else {
            Frac { num, den }
        }
    }

    pub fn int(v: i128) -> Self {
        Frac { num: v, den: 1 }
    }

    pub fn num(&self) -> i128 {
        self.num
    }

    pub fn den(&self) -> i128 {
        self.den
    }

    pub fn reduced(self) -> Self {
        let g = self.num.gcd(&self.den);
        if g <= 1 {
            self
        } else {
            Frac { num: self.num / g, den: self.den / g }
        }
    }

    pub fn floor(&self) -> i128 {
        num_integer::Integer::div_floor(&self.num, &self.den)
    }

    pub fn ceil(&self) -> i128 {
        -num_integer::Integer::div_floor(&(-self.num), &self.den)
    }

    pub fn is_integer(&self) -> bool {
        self.num % self.den == 0
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl PartialEq for Frac {
    fn eq(&self, other: &Self) -> bool {
        self.num * other.den == other.num * self.den
    }
}

impl Eq for Frac {}

impl PartialOrd for Frac {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Frac {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num * other.den).cmp(&(other.num * self.den))
    }
}

impl std::ops::Add for Frac {
    type Output = Frac;
    fn add(self, o: Frac) -> Frac {
        if self.den == o.den {
            Frac { num: self.num + o.num, den: self.den }
        } else {
            Frac { num: self.num * o.den + o.num * self.den, den: self.den * o.den }
        }
    }
}

impl std::ops::Sub for Frac {
    type Output = Frac;
    fn sub(self, o: Frac) -> Frac {
        self + Frac { num: -o.num, den: o.den }
    }
}

impl std::ops::Mul for Frac {
    type Output = Frac;
    fn mul(self, o: Frac) -> Frac {
        Frac { num: self.num * o.num, den: self.den * o.den }
    }
}

impl std::ops::Div for Frac {
    type Output = Frac;
    fn div(self, o: Frac) -> Frac {
        Frac::new(self.num * o.den, self.den * o.num)
    }
}

impl fmt::Display for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.reduced();
        if r.den == 1 {
            write!(f, "{}", r.num)
        } else {
            write!(f, "{}/{}", r.num, r.den)
        }
    }
}

impl std::str::FromStr for Frac {
    type Err = String;

    /// Parses `NUM` or `NUM/DEN` with decimal integers.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num: i128 = n.parse().map_err(|_| format!("invalid numerator in {s:?}"))?;
        let den: i128 = d.parse().map_err(|_| format!("invalid denominator in {s:?}"))?;
        if den == 0 {
            return Err(format!("zero denominator in {s:?}"));
        }
        Ok(Frac::new(num, den))
    }
}
