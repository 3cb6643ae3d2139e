//! Field coefficients: arbitrary-precision rationals or a prime field `F_p`.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::fmt;

/// A coefficient in the base field of a polynomial ring.
///
/// `Rat` is a rational number (characteristic 0); `Mod` is a residue in
/// `F_p`, stored reduced to `0..p`. Mixing characteristics in one operation
/// is a programming error and panics.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Coeff {
    Rat(BigRational),
    Mod { v: u64, p: u64 },
}

impl Coeff {
    pub fn zero(characteristic: u64) -> Self {
        Self::from_i64(0, characteristic)
    }

    pub fn one(characteristic: u64) -> Self {
        Self::from_i64(1, characteristic)
    }

    pub fn from_i64(v: i64, characteristic: u64) -> Self {
        match characteristic {
            0 => Coeff::Rat(BigRational::from(BigInt::from(v))),
            p => Coeff::Mod {
                v: v.rem_euclid(p as i64) as u64,
                p,
            },
        }
    }

    pub fn from_bigint(v: &BigInt, characteristic: u64) -> Self {
        match characteristic {
            0 => Coeff::Rat(BigRational::from(v.clone())),
            p => {
                let r = v % BigInt::from(p);
                let r = if r.is_negative() { r + BigInt::from(p) } else { r };
                let digits = r.to_u64_digits().1;
                Coeff::Mod {
                    v: digits.first().copied().unwrap_or(0),
                    p,
                }
            }
        }
    }

    /// Rational `num/den`; `den` must be nonzero and invertible mod p.
    pub fn from_ratio(num: &BigInt, den: &BigInt, characteristic: u64) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        match characteristic {
            0 => Some(Coeff::Rat(BigRational::new(num.clone(), den.clone()))),
            _ => {
                let n = Self::from_bigint(num, characteristic);
                let d = Self::from_bigint(den, characteristic);
                n.div(&d)
            }
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Coeff::Rat(_) => 0,
            Coeff::Mod { p, .. } => *p,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Rat(r) => r.is_zero(),
            Coeff::Mod { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Rat(r) => r.is_one(),
            Coeff::Mod { v, .. } => *v == 1,
        }
    }

    fn check_same(&self, other: &Self) {
        assert_eq!(
            self.characteristic(),
            other.characteristic(),
            "coefficient characteristic mismatch"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_same(other);
        match (self, other) {
            (Coeff::Rat(a), Coeff::Rat(b)) => Coeff::Rat(a + b),
            (Coeff::Mod { v: a, p }, Coeff::Mod { v: b, .. }) => Coeff::Mod {
                v: ((*a as u128 + *b as u128) % *p as u128) as u64,
                p: *p,
            },
            _ => unreachable!(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_same(other);
        match (self, other) {
            (Coeff::Rat(a), Coeff::Rat(b)) => Coeff::Rat(a - b),
            (Coeff::Mod { v: a, p }, Coeff::Mod { v: b, .. }) => Coeff::Mod {
                v: ((*a as u128 + (*p - *b) as u128) % *p as u128) as u64,
                p: *p,
            },
            _ => unreachable!(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_same(other);
        match (self, other) {
            (Coeff::Rat(a), Coeff::Rat(b)) => Coeff::Rat(a * b),
            (Coeff::Mod { v: a, p }, Coeff::Mod { v: b, .. }) => Coeff::Mod {
                v: mul_mod(*a, *b, *p),
                p: *p,
            },
            _ => unreachable!(),
        }
    }

    pub fn neg(&self) -> Self {
        match self {
            Coeff::Rat(a) => Coeff::Rat(-a),
            Coeff::Mod { v, p } => Coeff::Mod {
                v: if *v == 0 { 0 } else { p - v },
                p: *p,
            },
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        match self {
            Coeff::Rat(a) => Some(Coeff::Rat(a.recip())),
            // p is prime, so Fermat gives v^(p-2) = v^(-1).
            Coeff::Mod { v, p } => Some(Coeff::Mod {
                v: pow_mod(*v, *p - 2, *p),
                p: *p,
            }),
        }
    }

    pub fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.mul(&i))
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Coeff::Mod { v, .. } => write!(f, "{v}"),
        }
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc: u64 = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin, valid for all `u64` inputs.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_field_laws() {
        let a = Coeff::from_i64(3, 0);
        let b = Coeff::from_i64(-7, 0);
        assert_eq!(a.add(&b), Coeff::from_i64(-4, 0));
        assert_eq!(a.mul(&b), Coeff::from_i64(-21, 0));
        assert_eq!(a.sub(&a), Coeff::zero(0));
        let inv = a.inv().unwrap();
        assert!(a.mul(&inv).is_one());
        assert_eq!(inv.to_string(), "1/3");
    }

    #[test]
    fn prime_field_arithmetic() {
        let p = 7;
        let a = Coeff::from_i64(5, p);
        let b = Coeff::from_i64(-3, p);
        assert_eq!(b, Coeff::from_i64(4, p));
        assert_eq!(a.add(&b), Coeff::from_i64(2, p));
        assert_eq!(a.mul(&b), Coeff::from_i64(6, p));
        assert!(a.mul(&a.inv().unwrap()).is_one());
        assert_eq!(Coeff::zero(p).inv(), None);
    }

    #[test]
    fn big_modular_reduction() {
        let big = BigInt::parse_bytes(b"123456789012345678901234567890", 10).unwrap();
        let c = Coeff::from_bigint(&big, 97);
        let expect = (&big % BigInt::from(97)).to_u64_digits().1[0];
        assert_eq!(c, Coeff::Mod { v: expect, p: 97 });
    }

    #[test]
    fn primality() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(97));
        assert!(is_prime_u64(1_000_000_007));
        assert!(!is_prime_u64(0));
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64(91));
        assert!(!is_prime_u64(1_000_000_008));
    }
}
