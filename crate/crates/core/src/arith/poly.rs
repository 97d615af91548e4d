use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::rational::Rational;

/// A quadratic polynomial c2*t^2 + c1*t + c0 with exact rational
/// coefficients. Evaluation, derivative and vertex are all exact.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadPoly {
    pub c2: Rational,
    pub c1: Rational,
    pub c0: Rational,
}

impl QuadPoly {
    pub fn new(c2: Rational, c1: Rational, c0: Rational) -> Self {
        QuadPoly { c2, c1, c0 }
    }

    pub fn constant(c: Rational) -> Self {
        QuadPoly::new(Rational::zero(), Rational::zero(), c)
    }

    /// a*t + b
    pub fn linear(a: Rational, b: Rational) -> Self {
        QuadPoly::new(Rational::zero(), a, b)
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        (&self.c2 * t + self.c1.clone()) * t.clone() + self.c0.clone()
    }

    pub fn derivative(&self) -> QuadPoly {
        QuadPoly::linear(Rational::from(2) * self.c2.clone(), self.c1.clone())
    }

    /// Stationary point, when the polynomial is genuinely quadratic.
    pub fn vertex(&self) -> Option<Rational> {
        if self.c2.is_zero() {
            None
        } else {
            Some(-self.c1.clone() / (Rational::from(2) * self.c2.clone()))
        }
    }

    /// c1^2 - 4 c2 c0
    pub fn discriminant(&self) -> Rational {
        self.c1.clone() * self.c1.clone()
            - Rational::from(4) * self.c2.clone() * self.c0.clone()
    }

    pub fn is_zero(&self) -> bool {
        self.c2.is_zero() && self.c1.is_zero() && self.c0.is_zero()
    }

    /// Substitute t -> a*t + b.
    pub fn compose_affine(&self, a: &Rational, b: &Rational) -> QuadPoly {
        let two = Rational::from(2);
        QuadPoly::new(
            self.c2.clone() * a.clone() * a.clone(),
            two * self.c2.clone() * a.clone() * b.clone() + self.c1.clone() * a.clone(),
            self.c2.clone() * b.clone() * b.clone() + self.c1.clone() * b.clone()
                + self.c0.clone(),
        )
    }

    pub fn scale(&self, k: &Rational) -> QuadPoly {
        QuadPoly::new(
            self.c2.clone() * k.clone(),
            self.c1.clone() * k.clone(),
            self.c0.clone() * k.clone(),
        )
    }
}

impl Add for QuadPoly {
    type Output = QuadPoly;
    fn add(self, rhs: QuadPoly) -> QuadPoly {
        QuadPoly::new(self.c2 + rhs.c2, self.c1 + rhs.c1, self.c0 + rhs.c0)
    }
}

impl Sub for QuadPoly {
    type Output = QuadPoly;
    fn sub(self, rhs: QuadPoly) -> QuadPoly {
        QuadPoly::new(self.c2 - rhs.c2, self.c1 - rhs.c1, self.c0 - rhs.c0)
    }
}

impl Neg for QuadPoly {
    type Output = QuadPoly;
    fn neg(self) -> QuadPoly {
        QuadPoly::new(-self.c2, -self.c1, -self.c0)
    }
}

impl fmt::Display for QuadPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})t^2 + ({})t + ({})", self.c2, self.c1, self.c0)
    }
}

/// Exact decision of q(t) >= 0 for all t in [a, b].
///
/// The minimum of a quadratic over an interval sits at an endpoint, or at
/// the vertex when the parabola opens upward and the vertex lies inside.
pub fn quad_nonneg_on(q: &QuadPoly, a: &Rational, b: &Rational) -> bool {
    assert!(a <= b, "empty interval");
    if q.eval(a).is_negative() || q.eval(b).is_negative() {
        return false;
    }
    if q.c2.is_positive() {
        if let Some(v) = q.vertex() {
            if &v > a && &v < b && q.eval(&v).is_negative() {
                return false;
            }
        }
    }
    true
}

/// Dense polynomial with rational coefficients, low degree first.
/// Backs the Sturm-sequence sign analysis used by the star-shape checker;
/// quadratics stay in `QuadPoly`, this type only appears in verification
/// subroutines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly(Vec<Rational>);

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().map_or(false, Rational::is_zero) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn from_quad(q: &QuadPoly) -> Self {
        Poly::new(vec![q.c0.clone(), q.c1.clone(), q.c2.clone()])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.0.iter().rev() {
            acc = acc * t.clone() + c.clone();
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        if self.0.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| Rational::from(i as i64) * c.clone())
                .collect(),
        )
    }

    fn leading(&self) -> Rational {
        self.0.last().cloned().unwrap_or_else(Rational::zero)
    }

    fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let lc = self.leading();
        Poly::new(self.0.iter().map(|c| c.clone() / lc.clone()).collect())
    }

    /// Exact division with remainder over the rationals.
    pub fn divrem(&self, div: &Poly) -> (Poly, Poly) {
        assert!(!div.is_zero(), "division by zero polynomial");
        let mut rem = self.0.clone();
        let dd = div.degree();
        let lead = div.leading();
        if rem.len() <= dd {
            return (Poly::zero(), Poly::new(rem));
        }
        let mut quo = vec![Rational::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let coef = rem[i].clone() / lead.clone();
            if !coef.is_zero() {
                for (j, dc) in div.0.iter().enumerate() {
                    let idx = i - dd + j;
                    rem[idx] = rem[idx].clone() - coef.clone() * dc.clone();
                }
            }
            quo[i - dd] = coef;
        }
        rem.truncate(dd);
        (Poly::new(quo), Poly::new(rem))
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r.monic();
        }
        a
    }

    /// Squarefree polynomial whose roots are exactly the odd-multiplicity
    /// real roots of `self`.
    pub fn odd_multiplicity_part(&self) -> Poly {
        if self.degree() == 0 || self.is_zero() {
            return Poly::new(vec![Rational::one()]);
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == 0 {
            return self.monic();
        }
        let (squarefree, r) = self.divrem(&g);
        debug_assert!(r.is_zero());
        let even_in_g = g.odd_multiplicity_part();
        let common = squarefree.gcd(&even_in_g);
        let (odd, r2) = squarefree.monic().divrem(&common);
        debug_assert!(r2.is_zero());
        odd.monic()
    }

    /// Scale by the absolute value of the leading coefficient; unlike
    /// `monic` this never flips the sign, which Sturm chains require.
    fn positive_normal(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let scale = self.leading().abs();
        Poly::new(self.0.iter().map(|c| c.clone() / scale.clone()).collect())
    }

    fn sturm_chain(&self) -> Vec<Poly> {
        let mut chain = vec![self.clone(), self.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            let (_, r) = chain[n - 2].divrem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(r.neg_poly().positive_normal());
        }
        chain
    }

    fn neg_poly(&self) -> Poly {
        Poly::new(self.0.iter().map(|c| -c.clone()).collect())
    }

    /// Number of distinct real roots in the open interval (a, b).
    /// Requires a squarefree input; roots at the endpoints are deflated
    /// first so they are not counted.
    pub fn count_roots_open(&self, a: &Rational, b: &Rational) -> usize {
        assert!(a < b);
        let mut p = self.clone();
        if p.is_zero() {
            panic!("root counting of the zero polynomial");
        }
        for endpoint in [a, b] {
            while !p.is_zero() && p.degree() >= 1 && p.eval(endpoint).is_zero() {
                let lin = Poly::new(vec![-endpoint.clone(), Rational::one()]);
                let (q, r) = p.divrem(&lin);
                debug_assert!(r.is_zero());
                p = q;
            }
        }
        if p.degree() == 0 {
            return 0;
        }
        let chain = p.sturm_chain();
        let va = sign_changes(chain.iter().map(|q| q.eval(a).signum()));
        let vb = sign_changes(chain.iter().map(|q| q.eval(b).signum()));
        va.saturating_sub(vb)
    }

    /// Exact decision of p(t) >= 0 for all t in [a, b].
    pub fn nonneg_on(&self, a: &Rational, b: &Rational) -> bool {
        assert!(a <= b);
        if a == b {
            return !self.eval(a).is_negative();
        }
        if self.is_zero() {
            return true;
        }
        let odd = self.odd_multiplicity_part();
        if odd.degree() >= 1 && odd.count_roots_open(a, b) > 0 {
            return false;
        }
        // No interior sign change: the sign away from (even) roots is
        // constant, so one nonzero sample decides, and endpoint values
        // cover the closed interval.
        if self.eval(a).is_negative() || self.eval(b).is_negative() {
            return false;
        }
        let n = self.degree() + 2;
        for k in 1..n {
            let t = a.clone()
                + (b.clone() - a.clone()) * Rational::new(k as i64, n as i64);
            let v = self.eval(&t);
            if !v.is_zero() {
                return !v.is_negative();
            }
        }
        true // vanishes at deg+1 points: identically zero on the interval
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.0.len().max(rhs.0.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.0.get(i).cloned().unwrap_or_else(Rational::zero);
            let b = rhs.0.get(i).cloned().unwrap_or_else(Rational::zero);
            out.push(a + b);
        }
        Poly::new(out)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &rhs.neg_poly()
    }
}

fn sign_changes<I: Iterator<Item = i32>>(signs: I) -> usize {
    let mut count = 0;
    let mut last = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::rat;
    use proptest::prelude::*;

    fn q(c2: i64, c1: i64, c0: i64) -> QuadPoly {
        QuadPoly::new(Rational::from(c2), Rational::from(c1), Rational::from(c0))
    }

    #[test]
    fn nonneg_square_on_symmetric_interval() {
        assert!(quad_nonneg_on(&q(1, 0, 0), &rat(-1, 1), &rat(1, 1)));
    }

    #[test]
    fn nonneg_fails_at_left_endpoint() {
        // t^2 - 1 on [0, 2] is negative at 0
        assert!(!quad_nonneg_on(&q(1, 0, -1), &rat(0, 1), &rat(2, 1)));
    }

    #[test]
    fn concave_between_roots() {
        // -t^2 + t has roots 0, 1 and is nonnegative between them
        assert!(quad_nonneg_on(&q(-1, 1, 0), &rat(0, 1), &rat(1, 1)));
    }

    #[test]
    fn convex_vertex_dips_negative() {
        // t^2 - t is negative at its vertex 1/2
        assert!(!quad_nonneg_on(&q(1, -1, 0), &rat(0, 1), &rat(1, 1)));
    }

    #[test]
    fn sturm_counts_quartic_roots() {
        // (t^2 - 2)(t^2 - 3) has four roots in (-2, 2)
        let p = &Poly::new(vec![rat(-2, 1), rat(0, 1), rat(1, 1)])
            * &Poly::new(vec![rat(-3, 1), rat(0, 1), rat(1, 1)]);
        assert_eq!(p.count_roots_open(&rat(-2, 1), &rat(2, 1)), 4);
        assert_eq!(p.count_roots_open(&rat(0, 1), &rat(2, 1)), 2);
    }

    #[test]
    fn odd_part_strips_even_roots() {
        // t^2 (t - 1): odd part should be t - 1 up to normalization
        let p = Poly::new(vec![rat(0, 1), rat(0, 1), rat(-1, 1), rat(1, 1)]);
        let odd = p.odd_multiplicity_part();
        assert_eq!(odd.degree(), 1);
        assert!(odd.eval(&rat(1, 1)).is_zero());
    }

    #[test]
    fn nonneg_detects_touching_zero() {
        // t^2 (even root at 0) is nonnegative on [-1, 1]
        let p = Poly::new(vec![rat(0, 1), rat(0, 1), rat(1, 1)]);
        assert!(p.nonneg_on(&rat(-1, 1), &rat(1, 1)));
        // t^2 - t is negative strictly inside [0, 1] with zero endpoints
        let p = Poly::new(vec![rat(0, 1), rat(-1, 1), rat(1, 1)]);
        assert!(!p.nonneg_on(&rat(0, 1), &rat(1, 1)));
    }

    proptest! {
        #[test]
        fn quad_nonneg_agrees_with_dense_sampling(
            c2 in -8i64..8, c1 in -8i64..8, c0 in -8i64..8,
            a in -4i64..4, w in 1i64..6,
        ) {
            let poly = q(c2, c1, c0);
            let lo = Rational::from(a);
            let hi = Rational::from(a + w);
            let exact = quad_nonneg_on(&poly, &lo, &hi);
            // sampling can only miss violations, never invent them
            let mut sampled_neg = false;
            for k in 0..=1000 {
                let t = lo.clone() + (hi.clone() - lo.clone()) * rat(k, 1000);
                if poly.eval(&t).is_negative() {
                    sampled_neg = true;
                    break;
                }
            }
            if exact {
                prop_assert!(!sampled_neg);
            }
            if sampled_neg {
                prop_assert!(!exact);
            }
        }

        #[test]
        fn poly_nonneg_matches_quad_rule(
            c2 in -6i64..6, c1 in -6i64..6, c0 in -6i64..6,
            a in -3i64..3, w in 1i64..5,
        ) {
            let quad = q(c2, c1, c0);
            let lo = Rational::from(a);
            let hi = Rational::from(a + w);
            prop_assert_eq!(
                Poly::from_quad(&quad).nonneg_on(&lo, &hi),
                quad_nonneg_on(&quad, &lo, &hi)
            );
        }
    }
}
