use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::poly::QuadPoly;
use super::rational::Rational;
use crate::error::{Error, Result};

/// A piecewise quadratic function on [first breakpoint, last breakpoint].
///
/// Interval i is [t_i, t_{i+1}), half-open, except the last which is
/// closed. Overrides are isolated point values taking precedence over the
/// pieces; they make genuinely discontinuous functions representable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PiecewiseQuad {
    breakpoints: Vec<Rational>,
    pieces: Vec<QuadPoly>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    overrides: BTreeMap<Rational, Rational>,
}

impl PiecewiseQuad {
    pub fn new(breakpoints: Vec<Rational>, pieces: Vec<QuadPoly>) -> Result<Self> {
        PiecewiseQuad::with_overrides(breakpoints, pieces, BTreeMap::new())
    }

    pub fn with_overrides(
        breakpoints: Vec<Rational>,
        pieces: Vec<QuadPoly>,
        overrides: BTreeMap<Rational, Rational>,
    ) -> Result<Self> {
        if breakpoints.len() < 2 || pieces.len() + 1 != breakpoints.len() {
            return Err(Error::DomainError(format!(
                "need k+1 breakpoints for k pieces, got {} and {}",
                breakpoints.len(),
                pieces.len()
            )));
        }
        if !breakpoints.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::DomainError(
                "breakpoints must be strictly increasing".into(),
            ));
        }
        for t in overrides.keys() {
            if t < &breakpoints[0] || t > breakpoints.last().unwrap() {
                return Err(Error::DomainError(format!(
                    "override point {t} outside the domain"
                )));
            }
        }
        Ok(PiecewiseQuad { breakpoints, pieces, overrides })
    }

    pub fn domain(&self) -> (&Rational, &Rational) {
        (&self.breakpoints[0], self.breakpoints.last().unwrap())
    }

    pub fn breakpoints(&self) -> &[Rational] {
        &self.breakpoints
    }

    pub fn pieces(&self) -> &[QuadPoly] {
        &self.pieces
    }

    pub fn overrides(&self) -> &BTreeMap<Rational, Rational> {
        &self.overrides
    }

    /// Index of the piece covering t under the half-open convention.
    pub fn piece_index(&self, t: &Rational) -> Result<usize> {
        let (lo, hi) = self.domain();
        if t < lo || t > hi {
            return Err(Error::OutOfDomain(t.to_string()));
        }
        if t == hi {
            return Ok(self.pieces.len() - 1);
        }
        // last breakpoint <= t
        let idx = self
            .breakpoints
            .iter()
            .rposition(|b| b <= t)
            .expect("t >= first breakpoint");
        Ok(idx)
    }

    pub fn eval(&self, t: &Rational) -> Result<Rational> {
        if let Some(v) = self.overrides.get(t) {
            let (lo, hi) = self.domain();
            debug_assert!(t >= lo && t <= hi);
            return Ok(v.clone());
        }
        let idx = self.piece_index(t)?;
        Ok(self.pieces[idx].eval(t))
    }

    /// The pieces as (interval, polynomial) triples.
    pub fn intervals(&self) -> impl Iterator<Item = (&Rational, &Rational, &QuadPoly)> {
        self.breakpoints
            .windows(2)
            .zip(&self.pieces)
            .map(|(w, p)| (&w[0], &w[1], p))
    }

    /// Pointwise sum with another quadratic on the whole domain.
    pub fn add_quad(&self, q: &QuadPoly) -> PiecewiseQuad {
        let pieces = self.pieces.iter().map(|p| p.clone() + q.clone()).collect();
        let overrides = self
            .overrides
            .iter()
            .map(|(t, v)| (t.clone(), v.clone() + q.eval(t)))
            .collect();
        PiecewiseQuad {
            breakpoints: self.breakpoints.clone(),
            pieces,
            overrides,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::rat;

    fn two_piece() -> PiecewiseQuad {
        // -t/2 on [0, 1/2), 3t/2 - 1 on [1/2, 1]
        PiecewiseQuad::new(
            vec![rat(0, 1), rat(1, 2), rat(1, 1)],
            vec![
                QuadPoly::linear(rat(-1, 2), rat(0, 1)),
                QuadPoly::linear(rat(3, 2), rat(-1, 1)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn breakpoint_uses_right_piece() {
        let f = two_piece();
        assert_eq!(f.eval(&rat(1, 2)).unwrap(), rat(-1, 4));
    }

    #[test]
    fn last_breakpoint_uses_last_piece() {
        let f = two_piece();
        assert_eq!(f.eval(&rat(1, 1)).unwrap(), rat(1, 2));
    }

    #[test]
    fn override_takes_precedence() {
        let mut overrides = BTreeMap::new();
        overrides.insert(rat(1, 2), rat(0, 1));
        let base = two_piece();
        let f = PiecewiseQuad::with_overrides(
            base.breakpoints.clone(),
            base.pieces.clone(),
            overrides,
        )
        .unwrap();
        assert_eq!(f.eval(&rat(1, 2)).unwrap(), rat(0, 1));
        assert_eq!(f.eval(&rat(1, 4)).unwrap(), rat(-1, 8));
    }

    #[test]
    fn out_of_domain() {
        let f = two_piece();
        assert!(matches!(f.eval(&rat(-1, 10)), Err(Error::OutOfDomain(_))));
        assert!(matches!(f.eval(&rat(11, 10)), Err(Error::OutOfDomain(_))));
    }

    #[test]
    fn rejects_bad_breakpoints() {
        assert!(PiecewiseQuad::new(
            vec![rat(0, 1), rat(0, 1)],
            vec![QuadPoly::constant(rat(1, 1))]
        )
        .is_err());
        assert!(PiecewiseQuad::new(vec![rat(0, 1), rat(1, 1)], vec![]).is_err());
    }

    #[test]
    fn right_continuity_at_interior_breakpoints() {
        let f = two_piece();
        for (i, b) in f.breakpoints().iter().enumerate().skip(1) {
            if i < f.pieces().len() {
                assert_eq!(f.eval(b).unwrap(), f.pieces()[i].eval(b));
            }
        }
    }
}
