//! Base-p digit arithmetic and binomial coefficients modulo a prime.
//!
//! Everything here is word-sized: Lucas' theorem gives `C(a, b) mod p` as a
//! product of digit binomials and Kummer's theorem gives the p-adic valuation
//! of `C(a, b)` as a carry count, so no big integers are ever formed.
//!
//! A two-part partition `(a, b)` is James when `C(a + j, j) = 0 mod p` for all
//! `1 <= j <= b`. The digit form of that condition is
//! `a = -1 mod p^(l_p(b) + 1)`, i.e. the lowest `l_p(b) + 1` digits of `a` are
//! all `p - 1`. Two other digit forms are in circulation,
//! `a = -1 mod p^(l_p(b))` and `l_p(a) < v_p(b + 1)`; both disagree with the
//! binomial condition on small cases (e.g. `a = 2, b = 3, p = 3`), so the
//! binomial loop is treated as the definition.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An odd prime, the characteristic of the coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct PrimeModulus {
    p: u32,
    // Lemire fastmod constant, floor(2^64 / p) + 1
    magic: u64,
}

impl PrimeModulus {
    pub fn new(p: u64) -> Result<Self> {
        if p == 2 {
            return Err(Error::EvenCharacteristic(p));
        }
        if p > u32::MAX as u64 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeModulus {
            p: p as u32,
            magic: u64::MAX / p + 1,
        })
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce(self, x: u64) -> u32 {
        (x % self.p as u64) as u32
    }

    /// Residue of a signed integer in `[0, p)`.
    #[inline]
    pub fn reduce_signed(self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    /// Reduces any `u32` with two multiplications instead of a division.
    #[inline]
    pub fn reduce_u32(self, x: u32) -> u32 {
        let low = self.magic.wrapping_mul(x as u64);
        ((low as u128 * self.p as u128) >> 64) as u32
    }

    /// True when `x + f * y` fits in a `u32` for all residues.
    #[inline]
    pub fn is_small(self) -> bool {
        self.p <= 1 << 16
    }

    #[inline]
    pub fn add(self, x: u32, y: u32) -> u32 {
        self.reduce(x as u64 + y as u64)
    }

    #[inline]
    pub fn sub(self, x: u32, y: u32) -> u32 {
        self.reduce(x as u64 + (self.p - y) as u64)
    }

    #[inline]
    pub fn neg(self, x: u32) -> u32 {
        if x == 0 {
            0
        } else {
            self.p - x
        }
    }

    #[inline]
    pub fn mul(self, x: u32, y: u32) -> u32 {
        self.reduce(x as u64 * y as u64)
    }

    pub fn pow(self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1 % self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn inv(self, x: u32) -> Result<u32> {
        let x = x % self.p;
        if x == 0 {
            return Err(Error::NotInvertible(x as u64, self.p));
        }
        Ok(self.pow(x, self.p as u64 - 2))
    }
}

impl TryFrom<u64> for PrimeModulus {
    type Error = Error;

    fn try_from(p: u64) -> Result<Self> {
        PrimeModulus::new(p)
    }
}

impl From<PrimeModulus> for u64 {
    fn from(p: PrimeModulus) -> u64 {
        p.p as u64
    }
}

impl std::fmt::Display for PrimeModulus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.p)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Little-endian base-p expansion. Zero has no digits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digits {
    value: u64,
    digits: Vec<u32>,
}

impl Digits {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    /// Digit at position `i`, zero beyond the leading digit.
    pub fn digit(&self, i: usize) -> u32 {
        self.digits.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }
}

pub fn digits_base_p(a: u64, p: PrimeModulus) -> Digits {
    let base = p.get() as u64;
    let mut digits = Vec::new();
    let mut rest = a;
    while rest > 0 {
        digits.push((rest % base) as u32);
        rest /= base;
    }
    Digits { value: a, digits }
}

/// Largest `e` with `p^e | a`.
pub fn p_adic_val(a: u64, p: PrimeModulus) -> Result<u32> {
    if a == 0 {
        return Err(Error::ZeroArgument);
    }
    let base = p.get() as u64;
    let mut e = 0;
    let mut rest = a;
    while rest.is_multiple_of(base) {
        rest /= base;
        e += 1;
    }
    Ok(e)
}

/// Index of the leading base-p digit, `floor(log_p a)`.
pub fn p_adic_length(a: u64, p: PrimeModulus) -> Result<u32> {
    if a == 0 {
        return Err(Error::ZeroArgument);
    }
    Ok(digits_base_p(a, p).len() as u32 - 1)
}

/// `p^e`, or `None` on overflow.
pub fn checked_pow(p: PrimeModulus, e: u32) -> Option<u64> {
    (p.get() as u64).checked_pow(e)
}

/// Binomial coefficient of two single digits, reduced mod p.
fn small_binom_mod(n: u32, k: u32, p: PrimeModulus) -> u32 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut num = 1u32;
    let mut den = 1u32;
    for i in 0..k {
        num = p.mul(num, n - i);
        den = p.mul(den, i + 1);
    }
    // n < p so den is a unit
    p.mul(num, p.inv(den).expect("digit factorial is a unit"))
}

/// `C(a, b) mod p` by Lucas' theorem; zero when `b > a`.
pub fn binom_mod_p(a: u64, b: u64, p: PrimeModulus) -> u32 {
    if b > a {
        return 0;
    }
    let base = p.get() as u64;
    let (mut x, mut y) = (a, b);
    let mut acc = 1 % p.get();
    while y > 0 {
        let (xd, yd) = ((x % base) as u32, (y % base) as u32);
        if yd > xd {
            return 0;
        }
        acc = p.mul(acc, small_binom_mod(xd, yd, p));
        x /= base;
        y /= base;
    }
    acc
}

/// `v_p(C(a, b))`: the number of carries when adding `a - b` and `b` in base p.
pub fn binom_val_p(a: u64, b: u64, p: PrimeModulus) -> Result<u32> {
    if b > a {
        return Err(Error::BinomialOrder { a, b });
    }
    let base = p.get() as u64;
    let (mut x, mut y) = (a - b, b);
    let mut carry = 0u64;
    let mut carries = 0;
    while x > 0 || y > 0 || carry > 0 {
        let s = x % base + y % base + carry;
        carry = u64::from(s >= base);
        carries += carry as u32;
        x /= base;
        y /= base;
    }
    Ok(carries)
}

/// True iff `C(a + j, j) = 0 mod p` for every `1 <= j <= b`.
pub fn all_binoms_divisible(a: u64, b: u64, p: PrimeModulus) -> bool {
    (1..=b).all(|j| binom_mod_p(a + j, j, p) == 0)
}

/// Digit form of [`all_binoms_divisible`]: `a = -1 mod p^(l_p(b) + 1)`.
pub fn all_binoms_divisible_digits(a: u64, b: u64, p: PrimeModulus) -> bool {
    if b == 0 {
        return true;
    }
    let l = p_adic_length(b, p).expect("b > 0");
    match checked_pow(p, l + 1) {
        Some(m) => (a + 1).is_multiple_of(m),
        None => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64) -> PrimeModulus {
        PrimeModulus::new(n).unwrap()
    }

    #[test]
    fn modulus_validation() {
        assert!(matches!(
            PrimeModulus::new(2),
            Err(Error::EvenCharacteristic(2))
        ));
        assert!(matches!(PrimeModulus::new(9), Err(Error::NotPrime(9))));
        assert!(matches!(PrimeModulus::new(1), Err(Error::NotPrime(1))));
        assert_eq!(PrimeModulus::new(7).unwrap().get(), 7);
    }

    #[test]
    fn field_ops() {
        let q = p(7);
        assert_eq!(q.inv(3).unwrap(), 5);
        assert_eq!(q.sub(2, 5), 4);
        assert_eq!(q.neg(0), 0);
        assert_eq!(q.reduce_signed(-1), 6);
        assert!(q.inv(0).is_err());
    }

    #[test]
    fn digits_examples() {
        assert_eq!(digits_base_p(8, p(3)).digits(), &[2, 2]);
        assert_eq!(digits_base_p(3, p(3)).digits(), &[0, 1]);
        assert!(digits_base_p(0, p(5)).is_empty());
    }

    #[test]
    fn valuation_and_length() {
        assert_eq!(p_adic_val(4, p(3)).unwrap(), 0);
        assert_eq!(p_adic_val(9, p(3)).unwrap(), 2);
        assert_eq!(p_adic_val(45, p(3)).unwrap(), 2);
        assert!(matches!(p_adic_val(0, p(3)), Err(Error::ZeroArgument)));
        assert_eq!(p_adic_length(3, p(3)).unwrap(), 1);
        assert_eq!(p_adic_length(8, p(3)).unwrap(), 1);
        assert_eq!(p_adic_length(2, p(3)).unwrap(), 0);
        assert!(p_adic_length(0, p(3)).is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binom_mod_p(5, 2, p(3)), 1);
        assert_eq!(binom_mod_p(6, 3, p(3)), 2);
        assert_eq!(binom_mod_p(17, 0, p(5)), 1);
        assert_eq!(binom_mod_p(2, 3, p(5)), 0);
        assert_eq!(binom_val_p(11, 3, p(3)).unwrap(), 1);
        assert_eq!(binom_val_p(9, 1, p(3)).unwrap(), 2);
        assert_eq!(binom_val_p(5, 2, p(3)).unwrap(), 0);
        assert!(binom_val_p(2, 3, p(3)).is_err());
    }

    #[test]
    fn divisible_families() {
        assert!(all_binoms_divisible(8, 3, p(3)));
        assert!(!all_binoms_divisible(2, 3, p(3)));
        assert!(all_binoms_divisible(4, 0, p(3)));
        // the exponent l_p(b) alone would accept this case
        assert!((2 + 1) % 3u64.pow(p_adic_length(3, p(3)).unwrap()) == 0);
        assert!(!all_binoms_divisible_digits(2, 3, p(3)));
        assert!(all_binoms_divisible_digits(8, 3, p(3)));
    }
}
