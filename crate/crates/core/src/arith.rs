//! Exact scalars: rationals, half-integers, sums of square roots of rationals,
//! and Gaussian pairs of those.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::{Integer, Roots};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// A value in (1/2)Z, stored as twice the value.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInt(i64);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);
    pub const HALF: HalfInt = HalfInt(1);
    pub const ONE: HalfInt = HalfInt(2);

    pub const fn from_int(v: i64) -> Self {
        HalfInt(2 * v)
    }

    pub const fn from_twice(t: i64) -> Self {
        HalfInt(t)
    }

    pub const fn twice(self) -> i64 {
        self.0
    }

    pub const fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn abs(self) -> Self {
        HalfInt(self.0.abs())
    }

    pub fn signum(self) -> i64 {
        self.0.signum()
    }

    /// The integer value if integral.
    pub fn to_int(self) -> Option<i64> {
        self.is_integer().then_some(self.0 / 2)
    }

    pub fn to_rational(self) -> Rational {
        rat(self.0, 2)
    }

    pub fn to_f64(self) -> f64 {
        self.0 as f64 / 2.0
    }

    /// Both values lie in the same class of Z or 1/2 + Z.
    pub fn same_class(self, other: HalfInt) -> bool {
        (self.0 - other.0) % 2 == 0
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, o: HalfInt) -> HalfInt {
        HalfInt(self.0 + o.0)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, o: HalfInt) -> HalfInt {
        HalfInt(self.0 - o.0)
    }
}

impl Add<i64> for HalfInt {
    type Output = HalfInt;
    fn add(self, o: i64) -> HalfInt {
        HalfInt(self.0 + 2 * o)
    }
}

impl Sub<i64> for HalfInt {
    type Output = HalfInt;
    fn sub(self, o: i64) -> HalfInt {
        HalfInt(self.0 - 2 * o)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt(-self.0)
    }
}

impl AddAssign<i64> for HalfInt {
    fn add_assign(&mut self, o: i64) {
        self.0 += 2 * o;
    }
}

impl From<i64> for HalfInt {
    fn from(v: i64) -> Self {
        HalfInt::from_int(v)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl fmt::Debug for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for HalfInt {
    type Err = Error;

    /// Accepts "3", "-1/2", "5/2", "2.5", "-0.5", "4/2".
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("not a half-integer: {s:?}"));
        if let Some((p, q)) = s.split_once('/') {
            let p: i64 = p.trim().parse().map_err(|_| bad())?;
            let q: i64 = q.trim().parse().map_err(|_| bad())?;
            return match q {
                1 => Ok(HalfInt(2 * p)),
                2 => Ok(HalfInt(p)),
                _ if q != 0 && (2 * p) % q == 0 => Ok(HalfInt(2 * p / q)),
                _ => Err(bad()),
            };
        }
        if let Some((ip, fp)) = s.split_once('.') {
            let neg = ip.starts_with('-');
            let whole: i64 = if ip == "-" || ip.is_empty() {
                0
            } else {
                ip.parse().map_err(|_| bad())?
            };
            let frac = fp.trim_end_matches('0');
            let half = match frac {
                "" => 0,
                "5" => 1,
                _ => return Err(bad()),
            };
            let t = 2 * whole.abs() + half;
            return Ok(HalfInt(if neg { -t } else { t }));
        }
        s.parse::<i64>().map(HalfInt::from_int).map_err(|_| bad())
    }
}

impl Serialize for HalfInt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for HalfInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Splits n = s^2 * m with m square-free. Trial division; inputs here are
/// products of small integers so the loop terminates quickly.
fn square_free_split(n: &BigUint) -> (BigUint, BigUint) {
    if n.is_zero() {
        return (BigUint::zero(), BigUint::zero());
    }
    if let Some(v) = n.to_u64() {
        let (s, m) = square_free_split_u64(v);
        return (BigUint::from(s), BigUint::from(m));
    }
    let mut rem = n.clone();
    let mut outside = BigUint::one();
    let mut free = BigUint::one();
    let mut p = BigUint::from(2u32);
    while &p * &p * &p <= rem {
        let pp = &p * &p;
        while (&rem % &pp).is_zero() {
            rem /= &pp;
            outside *= &p;
        }
        if (&rem % &p).is_zero() {
            rem /= &p;
            free *= &p;
        }
        p += 1u32;
    }
    // rem is 1, a prime, a prime squared, or a product of two distinct primes
    let r = rem.sqrt();
    if &r * &r == rem {
        outside *= r;
    } else {
        free *= rem;
    }
    (outside, free)
}

fn square_free_split_u64(mut n: u64) -> (u64, u64) {
    let mut outside = 1u64;
    let mut free = 1u64;
    let mut p = 2u64;
    while p.saturating_mul(p).saturating_mul(p) <= n {
        while n % (p * p) == 0 {
            n /= p * p;
            outside *= p;
        }
        if n % p == 0 {
            n /= p;
            free *= p;
        }
        p += 1;
    }
    let r = n.sqrt();
    if r * r == n {
        outside *= r;
    } else {
        free *= n;
    }
    (outside, free)
}

/// A finite sum of c_m * sqrt(m) with square-free keys m and nonzero rational c_m.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SqrtRatSum {
    terms: BTreeMap<BigUint, Rational>,
}

impl SqrtRatSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(q: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(BigUint::one(), q);
        }
        SqrtRatSum { terms }
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_rational(rat_int(v))
    }

    /// Nonnegative square root of q.
    pub fn sqrt_of_rational(q: &Rational) -> Result<Self> {
        if q.is_negative() {
            return Err(Error::Domain(format!("square root of negative rational {q}")));
        }
        if q.is_zero() {
            return Ok(Self::zero());
        }
        // sqrt(p/q) = sqrt(p q) / q
        let num = q.numer().magnitude();
        let den = q.denom().magnitude();
        let (s, m) = square_free_split(&(num * den));
        let coeff = Rational::new(BigInt::from(s), BigInt::from(den.clone()));
        let mut terms = BTreeMap::new();
        terms.insert(m, coeff);
        Ok(SqrtRatSum { terms })
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BigUint, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The rational value when there is no irrational part.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&BigUint::one()).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        SqrtRatSum {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(m, c)| c.to_f64().unwrap_or(f64::NAN) * m.to_f64().unwrap_or(f64::NAN).sqrt())
            .sum()
    }

    fn add_term(&mut self, m: BigUint, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn add_ref(&self, o: &Self) -> Self {
        let (mut acc, other) = if self.terms.len() >= o.terms.len() {
            (self.clone(), o)
        } else {
            (o.clone(), self)
        };
        for (m, c) in &other.terms {
            acc.add_term(m.clone(), c.clone());
        }
        acc
    }

    fn mul_ref(&self, o: &Self) -> Self {
        let mut acc = SqrtRatSum::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                // sqrt(m1) sqrt(m2) = g sqrt((m1/g)(m2/g)), and the cofactor is square-free
                let g = m1.gcd(m2);
                let key = (m1 / &g) * (m2 / &g);
                let c = c1 * c2 * Rational::from_integer(BigInt::from(g));
                acc.add_term(key, c);
            }
        }
        acc
    }
}

impl fmt::Display for SqrtRatSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "sqrt({m})")?;
            } else {
                write!(f, "{a}*sqrt({m})")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SqrtRatSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Neg for SqrtRatSum {
    type Output = SqrtRatSum;
    fn neg(self) -> SqrtRatSum {
        SqrtRatSum {
            terms: self.terms.into_iter().map(|(k, v)| (k, -v)).collect(),
        }
    }
}

impl Neg for &SqrtRatSum {
    type Output = SqrtRatSum;
    fn neg(self) -> SqrtRatSum {
        -self.clone()
    }
}

macro_rules! forward_binop {
    ($ty:ty, $trait:ident, $method:ident, $body:expr) => {
        impl $trait<&$ty> for &$ty {
            type Output = $ty;
            fn $method(self, o: &$ty) -> $ty {
                $body(self, o)
            }
        }
        impl $trait<$ty> for $ty {
            type Output = $ty;
            fn $method(self, o: $ty) -> $ty {
                $body(&self, &o)
            }
        }
        impl $trait<&$ty> for $ty {
            type Output = $ty;
            fn $method(self, o: &$ty) -> $ty {
                $body(&self, o)
            }
        }
    };
}

forward_binop!(SqrtRatSum, Add, add, |a: &SqrtRatSum, b: &SqrtRatSum| a.add_ref(b));
forward_binop!(SqrtRatSum, Sub, sub, |a: &SqrtRatSum, b: &SqrtRatSum| a.add_ref(&-b));
forward_binop!(SqrtRatSum, Mul, mul, |a: &SqrtRatSum, b: &SqrtRatSum| a.mul_ref(b));

impl AddAssign<&SqrtRatSum> for SqrtRatSum {
    fn add_assign(&mut self, o: &SqrtRatSum) {
        for (m, c) in &o.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

pub fn arith(x: &SqrtRatSum, y: &SqrtRatSum, op: ArithOp) -> SqrtRatSum {
    match op {
        ArithOp::Add => x + y,
        ArithOp::Sub => x - y,
        ArithOp::Mul => x * y,
    }
}

/// re + i*im with both parts in SqrtRatSum. Generator entries live here:
/// the diagonal generator and the j = 0 coefficients are purely imaginary.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Gauss {
    pub re: SqrtRatSum,
    pub im: SqrtRatSum,
}

impl Gauss {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn real(re: SqrtRatSum) -> Self {
        Gauss { re, im: SqrtRatSum::zero() }
    }

    pub fn imag(im: SqrtRatSum) -> Self {
        Gauss { re: SqrtRatSum::zero(), im }
    }

    pub fn from_rational(q: Rational) -> Self {
        Self::real(SqrtRatSum::from_rational(q))
    }

    /// sign * sqrt(rad), landing on the imaginary axis when rad < 0.
    pub fn signed_sqrt(sign: i64, rad: &Rational) -> Self {
        if sign == 0 || rad.is_zero() {
            return Self::zero();
        }
        let s = rat_int(sign.signum());
        if rad.is_negative() {
            Self::imag(SqrtRatSum::sqrt_of_rational(&-rad).expect("nonnegative").scale(&s))
        } else {
            Self::real(SqrtRatSum::sqrt_of_rational(rad).expect("nonnegative").scale(&s))
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Gauss { re: self.re.clone(), im: -&self.im }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Gauss { re: self.re.scale(c), im: self.im.scale(c) }
    }

    /// Multiplication by i.
    pub fn times_i(&self) -> Self {
        Gauss { re: -&self.im, im: self.re.clone() }
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }

    /// The rational value when the entry is rational.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.im.is_zero() {
            self.re.as_rational()
        } else {
            None
        }
    }

    fn mul_ref(&self, o: &Self) -> Self {
        let mut re = SqrtRatSum::zero();
        let mut im = SqrtRatSum::zero();
        if !self.re.is_zero() {
            if !o.re.is_zero() {
                re += &(&self.re * &o.re);
            }
            if !o.im.is_zero() {
                im += &(&self.re * &o.im);
            }
        }
        if !self.im.is_zero() {
            if !o.im.is_zero() {
                re = re - &self.im * &o.im;
            }
            if !o.re.is_zero() {
                im += &(&self.im * &o.re);
            }
        }
        Gauss { re, im }
    }
}

impl fmt::Display for Gauss {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "i*({})", self.im),
            (false, false) => write!(f, "{} + i*({})", self.re, self.im),
        }
    }
}

impl fmt::Debug for Gauss {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Neg for Gauss {
    type Output = Gauss;
    fn neg(self) -> Gauss {
        Gauss { re: -self.re, im: -self.im }
    }
}

impl Neg for &Gauss {
    type Output = Gauss;
    fn neg(self) -> Gauss {
        -self.clone()
    }
}

forward_binop!(Gauss, Add, add, |a: &Gauss, b: &Gauss| Gauss {
    re: &a.re + &b.re,
    im: &a.im + &b.im
});
forward_binop!(Gauss, Sub, sub, |a: &Gauss, b: &Gauss| Gauss {
    re: &a.re - &b.re,
    im: &a.im - &b.im
});
forward_binop!(Gauss, Mul, mul, |a: &Gauss, b: &Gauss| a.mul_ref(b));

impl AddAssign<&Gauss> for Gauss {
    fn add_assign(&mut self, o: &Gauss) {
        self.re += &o.re;
        self.im += &o.im;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(n: i64, d: i64) -> SqrtRatSum {
        SqrtRatSum::sqrt_of_rational(&rat(n, d)).unwrap()
    }

    #[test]
    fn sqrt_examples() {
        let half = s(1, 2);
        let mut want = BTreeMap::new();
        want.insert(BigUint::from(2u32), rat(1, 2));
        assert_eq!(half.terms, want);
        assert!(s(0, 1).is_zero());
        assert_eq!(s(9, 4), SqrtRatSum::from_rational(rat(3, 2)));
        assert!(SqrtRatSum::sqrt_of_rational(&rat(-1, 3)).is_err());
    }

    #[test]
    fn arith_examples() {
        assert_eq!(s(2, 1) * s(2, 1), SqrtRatSum::from_int(2));
        assert_eq!(s(2, 1) * s(3, 1), s(6, 1));
        let h = SqrtRatSum::from_rational(rat(1, 2)) * s(2, 1);
        assert_eq!(&h + &h, s(2, 1));
        assert_eq!(arith(&s(6, 1), &s(10, 1), ArithOp::Mul), SqrtRatSum::from_int(2) * s(15, 1));
    }

    #[test]
    fn large_radicand_square_free() {
        // 2^2 * 3^3 * 10007^2 * 1000003, beyond u64 once squared out
        let n = BigUint::from(4u32) * 27u32 * 10007u32 * 10007u32 * 1000003u32 * 1000003u32 * 999983u32;
        let (o, m) = square_free_split(&n);
        assert_eq!(o, BigUint::from(2u32 * 3 * 10007) * 1000003u32);
        assert_eq!(m, BigUint::from(3u32 * 999983));
    }

    #[test]
    fn halfint_parse_print() {
        for (src, twice) in [("5/2", 5), ("2.5", 5), ("-1/2", -1), ("-0.5", -1), ("3", 6), ("4/2", 4), ("-3.0", -6)] {
            assert_eq!(src.parse::<HalfInt>().unwrap().twice(), twice, "{src}");
        }
        assert!("1/3".parse::<HalfInt>().is_err());
        assert!("0.25".parse::<HalfInt>().is_err());
        assert_eq!(HalfInt::from_twice(5).to_string(), "5/2");
        assert_eq!(HalfInt::from_twice(-4).to_string(), "-2");
    }

    #[test]
    fn gauss_square_of_i() {
        let i = Gauss::imag(SqrtRatSum::one());
        assert_eq!(&i * &i, Gauss::from_rational(rat_int(-1)));
        assert_eq!(Gauss::signed_sqrt(-1, &rat(-1, 2)), Gauss::imag(-s(1, 2)));
    }

    fn arb_term() -> impl Strategy<Value = SqrtRatSum> {
        (-50i64..50, 1i64..20, 1i64..10_000).prop_map(|(c, d, m)| {
            SqrtRatSum::from_rational(rat(c, d)) * s(m, 1)
        })
    }

    fn arb_sum() -> impl Strategy<Value = SqrtRatSum> {
        prop::collection::vec(arb_term(), 0..4).prop_map(|v| v.into_iter().fold(SqrtRatSum::zero(), |a, b| a + b))
    }

    proptest! {
        #[test]
        fn self_difference_is_zero(x in arb_sum()) {
            prop_assert!((&x - &x).is_zero());
        }

        #[test]
        fn zero_test_matches_float(x in arb_sum(), y in arb_sum()) {
            let d = &x - &y;
            let f = x.to_f64() - y.to_f64();
            if d.is_zero() {
                prop_assert!(f.abs() < 1e-9);
            } else {
                prop_assert!((d.to_f64() - f).abs() < 1e-9 * (1.0 + f.abs()));
            }
        }

        #[test]
        fn mul_commutative_associative(x in arb_sum(), y in arb_sum(), z in arb_sum()) {
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        }

        #[test]
        fn sqrt_squares_back(n in 0i64..100_000, d in 1i64..1000) {
            let r = s(n, d);
            prop_assert_eq!(&r * &r, SqrtRatSum::from_rational(rat(n, d)));
        }
    }
}
