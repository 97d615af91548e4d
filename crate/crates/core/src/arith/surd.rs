use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::Rational;
use crate::error::{Error, Result};

/// A quadratic surd p + q*sqrt(d) with rational p, q and a square-free
/// non-negative integer d. One radical suffices for wall endpoints, which
/// come from intersecting lines with conics; comparisons are decided by
/// exact sign analysis, never by floating approximation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadSurd {
    p: Rational,
    q: Rational,
    d: u64,
}

impl QuadSurd {
    pub fn new(p: Rational, q: Rational, d: u64) -> Result<Self> {
        if q.is_zero() || d == 0 {
            return Ok(QuadSurd { p, q: Rational::zero(), d: 0 });
        }
        let (root, free) = split_square(&BigInt::from(d))?;
        if free == 1 {
            // the radicand was a perfect square; fold into the rational part
            Ok(QuadSurd { p: p + q * Rational::from(root), q: Rational::zero(), d: 0 })
        } else {
            Ok(QuadSurd { p, q: q * Rational::from(root), d: free })
        }
    }

    pub fn from_rational(p: Rational) -> Self {
        QuadSurd { p, q: Rational::zero(), d: 0 }
    }

    /// Exact square root of a non-negative rational, as (k/m)*sqrt(f).
    pub fn sqrt_of(x: &Rational) -> Result<Self> {
        if x.is_negative() {
            return Err(Error::DomainError(format!("sqrt of negative rational {x}")));
        }
        if x.is_zero() {
            return Ok(QuadSurd::from_rational(Rational::zero()));
        }
        let n = x.numer().clone();
        let m = x.denom().clone();
        // sqrt(n/m) = sqrt(n*m)/m
        let (square_root, free) = split_square(&(&n * &m))?;
        Ok(QuadSurd::new(
            Rational::zero(),
            Rational::from_big(square_root, m),
            free,
        )?)
    }

    pub fn rational_part(&self) -> &Rational {
        &self.p
    }

    pub fn radical_coeff(&self) -> &Rational {
        &self.q
    }

    pub fn radicand(&self) -> u64 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.q.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        if self.is_rational() {
            Some(&self.p)
        } else {
            None
        }
    }

    pub fn sign(&self) -> i32 {
        sign_single(&self.p, &self.q, self.d)
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    pub fn neg(&self) -> QuadSurd {
        QuadSurd { p: -self.p.clone(), q: -self.q.clone(), d: self.d }
    }

    pub fn add_rational(&self, r: &Rational) -> QuadSurd {
        QuadSurd { p: self.p.clone() + r.clone(), q: self.q.clone(), d: self.d }
    }

    pub fn scale(&self, k: &Rational) -> QuadSurd {
        if k.is_zero() {
            return QuadSurd::from_rational(Rational::zero());
        }
        QuadSurd {
            p: self.p.clone() * k.clone(),
            q: self.q.clone() * k.clone(),
            d: self.d,
        }
    }

    /// Sum when the radicals are compatible (equal, or one side rational).
    pub fn try_add(&self, other: &QuadSurd) -> Result<QuadSurd> {
        let d = match (self.q.is_zero(), other.q.is_zero()) {
            (true, _) => other.d,
            (_, true) => self.d,
            _ if self.d == other.d => self.d,
            _ => return Err(Error::UnsupportedRadicalPair(self.d, other.d)),
        };
        QuadSurd::new(
            self.p.clone() + other.p.clone(),
            self.q.clone() + other.q.clone(),
            d,
        )
    }

    pub fn try_sub(&self, other: &QuadSurd) -> Result<QuadSurd> {
        self.try_add(&other.neg())
    }

    /// Decimal approximation, only for SVG coordinate emission.
    pub fn to_f64(&self) -> f64 {
        self.p.to_f64() + self.q.to_f64() * (self.d as f64).sqrt()
    }

    /// Total order consistent with the real values. The case analysis is
    /// complete for single-radical surds: same-radical differences reduce
    /// to one sign test, and cross-radical ones to at most two squarings.
    pub fn compare(&self, other: &QuadSurd) -> Ordering {
        let a = self.p.clone() - other.p.clone();
        let sign = if self.q.is_zero() || other.q.is_zero() || self.d == other.d {
            // single radical: a + (q - q')*sqrt(d)
            let (q, d) = if self.q.is_zero() {
                (-other.q.clone(), other.d)
            } else if other.q.is_zero() || self.d == other.d {
                (self.q.clone() - other.q.clone(), self.d)
            } else {
                unreachable!()
            };
            sign_single(&a, &q, d)
        } else {
            // sign of u - v with u = a + q*sqrt(d), v = q'*sqrt(e)
            let su = sign_single(&a, &self.q, self.d);
            let sv = other.q.signum();
            if su != sv {
                (su - sv).signum()
            } else if su == 0 {
                0
            } else {
                // same nonzero sign: compare u^2 against the rational v^2
                let u2_rat = a.clone() * a.clone()
                    + self.q.clone() * self.q.clone() * Rational::from(self.d as i64);
                let u2_rad = Rational::from(2) * a * self.q.clone();
                let v2 = other.q.clone() * other.q.clone()
                    * Rational::from(other.d as i64);
                su * sign_single(&(u2_rat - v2), &u2_rad, self.d)
            }
        };
        sign.cmp(&0)
    }
}

impl PartialOrd for QuadSurd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.compare(other))
    }
}

impl Ord for QuadSurd {
    fn cmp(&self, other: &Self) -> Ordering {
        self.compare(other)
    }
}

/// Exact comparison of two surds.
pub fn surd_compare(x: &QuadSurd, y: &QuadSurd) -> Ordering {
    x.compare(y)
}

/// Sign of a + b*sqrt(d).
fn sign_single(a: &Rational, b: &Rational, d: u64) -> i32 {
    if b.is_zero() || d == 0 {
        return a.signum();
    }
    if a.is_zero() {
        return b.signum();
    }
    let sa = a.signum();
    if sa == b.signum() {
        return sa;
    }
    let lhs = a.clone() * a.clone();
    let rhs = b.clone() * b.clone() * Rational::from(d as i64);
    sa * (lhs - rhs).signum()
}

/// Write n = k^2 * f with f square-free; returns (k, f).
/// Square factors are extracted by trial division; radicands here come
/// from small wall discriminants.
fn split_square(n: &BigInt) -> Result<(BigInt, u64)> {
    assert!(n.is_positive() || n.is_zero());
    if n.is_zero() {
        return Ok((BigInt::zero(), 0));
    }
    let mut rem = n.clone();
    let mut root = BigInt::one();
    let mut free = BigInt::one();
    let mut p = BigInt::from(2);
    let limit = BigInt::from(100_000u32);
    while &p * &p <= rem && p <= limit {
        let mut count = 0u32;
        while (&rem % &p).is_zero() {
            rem /= &p;
            count += 1;
        }
        if count > 0 {
            root *= p.pow(count / 2);
            if count % 2 == 1 {
                free *= &p;
            }
        }
        p += 1;
    }
    if !rem.is_one() {
        let s = rem.sqrt();
        if &s * &s == rem {
            root *= s;
        } else {
            free *= rem;
        }
    }
    let free = free
        .to_u64()
        .ok_or_else(|| Error::DomainError(format!("radicand too large: {n}")))?;
    Ok((root, free))
}

/// Prints as "p+q*sqrt(D)", dropping vanishing parts.
impl fmt::Display for QuadSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q.is_zero() {
            return write!(f, "{}", self.p);
        }
        let radical = if self.q == Rational::one() {
            format!("sqrt({})", self.d)
        } else if self.q == Rational::from(-1) {
            format!("-sqrt({})", self.d)
        } else {
            format!("{}*sqrt({})", self.q, self.d)
        };
        if self.p.is_zero() {
            write!(f, "{radical}")
        } else if radical.starts_with('-') {
            write!(f, "{}-{}", self.p, &radical[1..])
        } else {
            write!(f, "{}+{}", self.p, radical)
        }
    }
}

impl FromStr for QuadSurd {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::ParseError(format!("bad surd {s:?}"));
        if !s.contains("sqrt") {
            return Ok(QuadSurd::from_rational(s.parse()?));
        }
        // split at the '+'/'-' that separates rational and radical parts
        let (rat_part, rad_part) = match s.rfind(['+', '-']).filter(|&i| i > 0) {
            Some(i) if !s[..i].contains("sqrt") => {
                let sign = if s.as_bytes()[i] == b'-' { "-" } else { "" };
                (s[..i].to_string(), format!("{sign}{}", &s[i + 1..]))
            }
            _ => ("0".to_string(), s.to_string()),
        };
        let rad_part = rad_part.trim().to_string();
        let (coeff, radicand) = match rad_part.split_once("sqrt(") {
            Some((c, rest)) => {
                let inner = rest.strip_suffix(')').ok_or_else(bad)?;
                let c = c.trim().trim_end_matches('*').trim();
                let coeff: Rational = match c {
                    "" => Rational::one(),
                    "-" => Rational::from(-1),
                    other => other.parse()?,
                };
                let d: u64 = inner.trim().parse().map_err(|_| bad())?;
                (coeff, d)
            }
            None => return Err(bad()),
        };
        QuadSurd::new(rat_part.parse()?, coeff, radicand)
    }
}

impl Serialize for QuadSurd {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for QuadSurd {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::rat;
    use proptest::prelude::*;

    fn surd(p: Rational, q: Rational, d: u64) -> QuadSurd {
        QuadSurd::new(p, q, d).unwrap()
    }

    #[test]
    fn equal_rationals() {
        let x = QuadSurd::from_rational(rat(1, 1));
        assert_eq!(x.compare(&QuadSurd::from_rational(rat(1, 1))), Ordering::Equal);
    }

    #[test]
    fn sqrt2_less_than_three_halves() {
        let x = surd(Rational::zero(), Rational::one(), 2);
        let y = QuadSurd::from_rational(rat(3, 2));
        assert_eq!(x.compare(&y), Ordering::Less);
    }

    #[test]
    fn sqrt2_minus_one_positive() {
        let x = surd(rat(-1, 1), Rational::one(), 2);
        assert_eq!(x.compare(&QuadSurd::from_rational(Rational::zero())), Ordering::Greater);
        assert_eq!(x.sign(), 1);
    }

    #[test]
    fn cross_radical_comparison() {
        // sqrt(2) < sqrt(3) < 1 + sqrt(2)
        let r2 = surd(Rational::zero(), Rational::one(), 2);
        let r3 = surd(Rational::zero(), Rational::one(), 3);
        let one_r2 = surd(Rational::one(), Rational::one(), 2);
        assert_eq!(r2.compare(&r3), Ordering::Less);
        assert_eq!(r3.compare(&one_r2), Ordering::Less);
        assert_eq!(one_r2.compare(&r2), Ordering::Greater);
    }

    #[test]
    fn radicand_is_normalized_square_free() {
        let x = surd(Rational::zero(), Rational::one(), 8);
        assert_eq!(x.radicand(), 2);
        assert_eq!(x.radical_coeff(), &rat(2, 1));
        let y = surd(Rational::zero(), Rational::one(), 9);
        assert!(y.is_rational());
        assert_eq!(y.as_rational(), Some(&rat(3, 1)));
    }

    #[test]
    fn sqrt_of_rational() {
        let x = QuadSurd::sqrt_of(&rat(1, 2)).unwrap();
        // sqrt(1/2) = (1/2) sqrt(2)
        assert_eq!(x.radicand(), 2);
        assert_eq!(x.radical_coeff(), &rat(1, 2));
        assert!(QuadSurd::sqrt_of(&rat(-1, 1)).is_err());
        let y = QuadSurd::sqrt_of(&rat(9, 4)).unwrap();
        assert_eq!(y.as_rational(), Some(&rat(3, 2)));
    }

    #[test]
    fn display_and_parse_round_trip() {
        for x in [
            QuadSurd::from_rational(rat(-3, 2)),
            surd(rat(1, 2), rat(-1, 3), 5),
            surd(Rational::zero(), Rational::one(), 2),
            surd(rat(2, 1), Rational::one(), 7),
            surd(rat(2, 1), rat(-1, 1), 7),
        ] {
            let s = x.to_string();
            let back: QuadSurd = s.parse().unwrap();
            assert_eq!(back, x, "round trip of {s}");
        }
    }

    proptest! {
        #[test]
        fn order_agrees_with_floats(
            p1 in -20i64..20, q1 in -20i64..20, d1 in 0u64..30,
            p2 in -20i64..20, q2 in -20i64..20, d2 in 0u64..30,
        ) {
            let x = surd(rat(p1, 4), rat(q1, 4), d1);
            let y = surd(rat(p2, 4), rat(q2, 4), d2);
            let fx = x.to_f64();
            let fy = y.to_f64();
            if (fx - fy).abs() > 1e-9 {
                let expect = fx.partial_cmp(&fy).unwrap();
                prop_assert_eq!(x.compare(&y), expect);
            }
        }

        #[test]
        fn order_agrees_with_high_precision_arithmetic(
            p1 in -50i64..50, q1 in -50i64..50, d1 in 0u64..50,
            p2 in -50i64..50, q2 in -50i64..50, d2 in 0u64..50,
        ) {
            // fixed-point oracle with 70 decimal digits: floor(10^70 * value)
            fn scaled(x: &QuadSurd) -> BigInt {
                let s: BigInt = BigInt::from(10).pow(70);
                let rad = (BigInt::from(x.radicand()) * &s * &s).sqrt();
                let p = x.rational_part();
                let q = x.radical_coeff();
                (p.numer() * &s * q.denom() + q.numer() * rad * p.denom())
                    / (p.denom() * q.denom())
            }
            let x = surd(rat(p1, 7), rat(q1, 7), d1);
            let y = surd(rat(p2, 7), rat(q2, 7), d2);
            let dx = scaled(&x) - scaled(&y);
            // resolve only differences beyond 1e-30 (oracle truncation noise)
            if dx.abs() > BigInt::from(10).pow(40) {
                prop_assert_eq!(x.compare(&y), dx.sign().partial_cmp(&num_bigint::Sign::NoSign).unwrap());
            }
        }

        #[test]
        fn order_is_antisymmetric_and_consistent(
            p1 in -10i64..10, q1 in -10i64..10, d1 in 0u64..20,
            p2 in -10i64..10, q2 in -10i64..10, d2 in 0u64..20,
        ) {
            let x = surd(rat(p1, 3), rat(q1, 3), d1);
            let y = surd(rat(p2, 3), rat(q2, 3), d2);
            prop_assert_eq!(x.compare(&y), y.compare(&x).reverse());
            if let Ok(diff) = x.try_sub(&y) {
                prop_assert_eq!(diff.sign().cmp(&0), x.compare(&y));
            }
        }
    }
}
