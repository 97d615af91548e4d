//! Numerical walls in the (beta, alpha)-plane, their exact endpoints on
//! the parabola or the Theta curve, BG-type inequality checks, the
//! first-wall width bound, and candidate-destabilizer enumeration.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{rat, QuadSurd, Rational};
use crate::bounds::{theta, theta_linear_piece};
use crate::chern::{delta_bar, delta_surface, twist_beta, NumChern};
use crate::error::{Error, Result};
use crate::geometry::{LatticeChern, SurfaceLattice, Variety};

/// Which boundary curve of the stability region a wall is clipped
/// against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WallBoundary {
    Parabola,
    ThetaCurve,
}

/// The region a stability parameter point is required to lie in: above
/// the parabola alpha = beta^2/2, or above the extended Theta curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Region {
    Parabola,
    ThetaExtended,
}

/// A point of the stability parameter space, validated against its
/// region on construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TiltPoint {
    pub beta: Rational,
    pub alpha: Rational,
    pub region: Region,
}

impl TiltPoint {
    pub fn new(beta: Rational, alpha: Rational, region: Region) -> Result<Self> {
        let floor = match region {
            Region::Parabola => beta.clone() * beta.clone() * rat(1, 2),
            Region::ThetaExtended => theta(&beta),
        };
        if alpha <= floor {
            return Err(Error::OutOfDomain(format!(
                "({beta}, {alpha}) not above the region boundary value {floor}"
            )));
        }
        Ok(TiltPoint { beta, alpha, region })
    }
}

/// A numerical wall, stored as the full line alpha = slope*beta +
/// intercept; clipping to a segment happens in `wall_endpoints`. The
/// pivots are the p_H points of the rank-nonzero characters defining it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Wall {
    pub slope: Rational,
    pub intercept: Rational,
    pub pivots: Vec<(Rational, Rational)>,
}

impl Wall {
    /// alpha-value of the wall line at beta.
    pub fn alpha_at(&self, beta: &Rational) -> Rational {
        self.slope.clone() * beta.clone() + self.intercept.clone()
    }
}

/// An exact wall endpoint; both coordinates are surds over the same
/// radical, coming from one line-conic intersection.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurdPoint {
    pub beta: QuadSurd,
    pub alpha: QuadSurd,
}

/// p_H(v) = (s1/(e s0), s2/(e s0)), the point every wall of a
/// rank-nonzero character passes through.
pub fn p_h(v: &NumChern) -> Result<(Rational, Rational)> {
    if v.rank().is_zero() {
        return Err(Error::RankZero);
    }
    let den = v.hdeg() * v.rank().clone();
    Ok((v.s()[1].clone() / den.clone(), v.s()[2].clone() / den))
}

/// The line where v and w have equal tilted slope, or None when the
/// locus is empty, vertical, or all of the parameter space (numerically
/// proportional classes).
pub fn wall_between(v: &NumChern, w: &NumChern) -> Result<Option<Wall>> {
    if v.variety() != w.variety() {
        return Err(Error::DomainError("characters on different varieties".into()));
    }
    let e = v.hdeg();
    let (sv, sw) = (v.s(), w.s());
    // clearing denominators in nu(v) = nu(w) gives A alpha + B beta + C = 0
    let a = e.clone() * (sw[0].clone() * sv[1].clone() - sv[0].clone() * sw[1].clone());
    let b = e * (sv[0].clone() * sw[2].clone() - sw[0].clone() * sv[2].clone());
    let c = sw[1].clone() * sv[2].clone() - sv[1].clone() * sw[2].clone();
    if a.is_zero() {
        return Ok(None);
    }
    let mut pivots = Vec::new();
    for x in [v, w] {
        if !x.rank().is_zero() {
            pivots.push(p_h(x)?);
        }
    }
    Ok(Some(Wall {
        slope: -b / a.clone(),
        intercept: -c / a,
        pivots,
    }))
}

/// Exact intersection of a wall line with the region boundary, ordered
/// by beta; None when the line misses the boundary entirely.
pub fn wall_endpoints(wall: &Wall, boundary: WallBoundary) -> Result<Option<(SurdPoint, SurdPoint)>> {
    match boundary {
        WallBoundary::Parabola => parabola_endpoints(wall),
        WallBoundary::ThetaCurve => theta_endpoints(wall),
    }
}

fn surd_point_on(wall: &Wall, beta: QuadSurd) -> SurdPoint {
    let alpha = beta.scale(&wall.slope).add_rational(&wall.intercept);
    SurdPoint { beta, alpha }
}

fn parabola_endpoints(wall: &Wall) -> Result<Option<(SurdPoint, SurdPoint)>> {
    // beta^2/2 = slope*beta + intercept
    let disc = wall.slope.clone() * wall.slope.clone()
        + Rational::from(2) * wall.intercept.clone();
    if disc.is_negative() {
        return Ok(None);
    }
    let root = QuadSurd::sqrt_of(&disc)?;
    let b1 = root.neg().add_rational(&wall.slope);
    let b2 = root.add_rational(&wall.slope);
    Ok(Some((surd_point_on(wall, b1), surd_point_on(wall, b2))))
}

fn theta_endpoints(wall: &Wall) -> Result<Option<(SurdPoint, SurdPoint)>> {
    // Theta(t) >= t^2/2 - 1/4, so every intersection with the line
    // satisfies t^2 - 2 slope t - 2 intercept - 1/2 <= 0; bound the
    // radius of that window by |slope| + |intercept| + 1
    let disc = wall.slope.clone() * wall.slope.clone()
        + Rational::from(2) * wall.intercept.clone()
        + rat(1, 2);
    if disc.is_negative() {
        return Ok(None);
    }
    let radius = wall.slope.abs() + wall.intercept.abs() + Rational::one();
    let lo = wall.slope.clone() - radius.clone();
    let hi = wall.slope.clone() + radius;
    let j_lo = floor_i64(&(lo * Rational::from(2)))?;
    let j_hi = ceil_i64(&(hi * Rational::from(2)))?;
    let mut solutions: Vec<Rational> = Vec::new();
    for j in j_lo..j_hi {
        let piece = theta_linear_piece(j);
        let (a, b) = (rat(j, 2), rat(j + 1, 2));
        let da = piece.c1.clone() - wall.slope.clone();
        let db = piece.c0.clone() - wall.intercept.clone();
        if da.is_zero() {
            if db.is_zero() {
                // the line contains this whole Theta segment
                solutions.push(a);
                solutions.push(b);
            }
            continue;
        }
        let t = -db / da;
        if t >= a && t <= b {
            solutions.push(t);
        }
    }
    solutions.sort();
    solutions.dedup();
    match (solutions.first(), solutions.last()) {
        (Some(b1), Some(b2)) => Ok(Some((
            surd_point_on(wall, QuadSurd::from_rational(b1.clone())),
            surd_point_on(wall, QuadSurd::from_rational(b2.clone())),
        ))),
        _ => Ok(None),
    }
}

fn floor_i64(x: &Rational) -> Result<i64> {
    use num_traits::ToPrimitive;
    x.floor()
        .to_i64()
        .ok_or_else(|| Error::DomainError(format!("value {x} out of integer range")))
}

fn ceil_i64(x: &Rational) -> Result<i64> {
    Ok(-floor_i64(&-x.clone())?)
}

/// beta_2 - beta_1 for endpoints ordered beta_1 <= beta_2.
pub fn wall_width(ep: &(SurdPoint, SurdPoint)) -> Result<QuadSurd> {
    ep.1.beta.try_sub(&ep.0.beta)
}

/// The first-wall width bound beta_2 - beta_1 <= d, only meaningful for
/// endpoints straddling beta = 0.
pub fn check_first_wall_bound(ep: &(SurdPoint, SurdPoint), d: i64) -> Result<bool> {
    if ep.0.beta.sign() >= 0 || ep.1.beta.sign() <= 0 {
        return Err(Error::StraddleViolation);
    }
    let width = wall_width(ep)?;
    Ok(width <= QuadSurd::from_rational(Rational::from(d)))
}

/// alpha_mu = -mu^2 + (2d-1)mu/4, the alpha-axis intercept of the
/// restriction line at slope mu on a degree-d surface.
pub fn alpha_mu(d: i64, mu: &Rational) -> Result<Rational> {
    if d < 1 {
        return Err(Error::DomainError(format!("degree {d} must be >= 1")));
    }
    if mu.is_negative() || mu > &rat(1, 2) {
        return Err(Error::DomainError(format!("slope {mu} outside [0, 1/2]")));
    }
    let dd = Rational::from(d);
    let value = -mu.clone() * mu.clone() + (Rational::from(2) * dd.clone() - Rational::one()) * mu.clone() * rat(1, 4);
    // the same number as the restriction line (mu - d/2)(x - mu) + Theta(mu)
    // evaluated at x = 0
    debug_assert_eq!(
        value,
        (mu.clone() - dd * rat(1, 2)) * (-mu.clone()) + theta(mu)
    );
    Ok(value)
}

/// The generalized BG quadratic on P^3 at (beta, alpha):
/// (2 alpha - beta^2) Delta-bar + 4 (s2^beta)^2 - 6 s1^beta s3^beta.
/// Nonnegative on tilt-semistable objects; the caller compares with 0.
pub fn bg3_quadratic(v: &NumChern, beta: &Rational, alpha: &Rational) -> Result<Rational> {
    if v.variety() != &Variety::ProjSpace3 {
        return Err(Error::WrongVariety);
    }
    let t = twist_beta(v, beta);
    let coeff = Rational::from(2) * alpha.clone() - beta.clone() * beta.clone();
    Ok(coeff * delta_bar(v)
        + Rational::from(4) * t.s()[2].clone() * t.s()[2].clone()
        - Rational::from(6) * t.s()[1].clone() * t.s()[3].clone())
}

/// Classical BG chain Delta-bar >= H^{n-2} Delta >= 0; the surface
/// discriminant leg only when lattice data is supplied.
pub fn bg_classical_check(
    v: &NumChern,
    surface: Option<(&SurfaceLattice, &LatticeChern)>,
) -> Result<bool> {
    let db = delta_bar(v);
    match surface {
        None => Ok(!db.is_negative()),
        Some((lattice, lc)) => {
            let ds = delta_surface(lattice, lc)?;
            Ok(db >= ds && !ds.is_negative())
        }
    }
}

/// Tilt BG: Delta-bar >= 0.
pub fn bg_tilt_check(v: &NumChern) -> bool {
    !delta_bar(v).is_negative()
}

/// The alpha-axis intercept of the line through p_H(v) and
/// p_H(twist_beta(v, d)); closed form y - m^2 + dm/2 for (m, y) = p_H(v).
pub fn restriction_alpha(v: &NumChern, d: i64) -> Result<Rational> {
    let (m, y) = p_h(v)?;
    let twisted = twist_beta(v, &Rational::from(d));
    let (m2, y2) = p_h(&twisted)?;
    // intercept of the line through (m, y) and (m2, y2)
    let slope = (y2.clone() - y.clone()) / (m2 - m.clone());
    let intercept = y.clone() - slope * m.clone();
    let dd = Rational::from(d);
    debug_assert_eq!(
        intercept,
        y.clone() - m.clone() * m.clone() + dd.clone() * m.clone() * rat(1, 2)
    );
    Ok(y - m.clone() * m.clone() + dd * m * rat(1, 2))
}

/// All integral characters w within the rank bound whose wall with v
/// meets the given beta-interval above the parabola with both sides
/// passing the numeric heart check somewhere on the wall segment.
///
/// Integrality lattice: s0, s1 integers, s2 half-integer; s3 is set to 0
/// since walls do not see it. Output is deduplicated by wall line
/// (keeping the lexicographically smallest w) and sorted by (s0, s1, s2),
/// identically regardless of how the search is partitioned across
/// workers.
pub fn enumerate_candidate_walls(
    v: &NumChern,
    rank_bound: i64,
    beta_lo: &Rational,
    beta_hi: &Rational,
) -> Result<Vec<(NumChern, Wall)>> {
    if v.variety() != &Variety::ProjSpace3 {
        return Err(Error::WrongVariety);
    }
    if rank_bound < 1 {
        return Err(Error::DomainError(format!(
            "rank bound {rank_bound} must be >= 1"
        )));
    }
    if beta_lo >= beta_hi {
        return Err(Error::DomainError(format!(
            "empty beta interval [{beta_lo}, {beta_hi}]"
        )));
    }
    let dv = delta_bar(v);
    if dv.is_negative() {
        return Err(Error::DomainError(format!(
            "discriminant {dv} of the target character is negative"
        )));
    }
    // candidate s1 window from the heart conditions along the interval:
    // s1 >= -R*B for w, s1 <= s1(v) + (R + |s0(v)|) B for v - w
    let b_max = beta_lo.abs().max(beta_hi.abs());
    let r_bound = Rational::from(rank_bound);
    let s1_min = floor_i64(&(-(r_bound.clone() * b_max.clone())))?;
    let s1_max = ceil_i64(
        &(v.s()[1].clone() + (r_bound + v.s()[0].abs()) * b_max),
    )?;

    let hits: Vec<(i64, i64, i64, NumChern, Wall)> = (-rank_bound..=rank_bound)
        .into_par_iter()
        .map(|s0| {
            candidates_for_rank(v, s0, s1_min, s1_max, &dv, beta_lo, beta_hi)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();

    // deduplicate by wall line, keeping the smallest (s0, s1, 2 s2)
    let mut by_line: BTreeMap<(Rational, Rational), (i64, i64, i64, NumChern, Wall)> =
        BTreeMap::new();
    for (s0, s1, k, w, wall) in hits {
        let key = (wall.slope.clone(), wall.intercept.clone());
        match by_line.get(&key) {
            Some((a, b, c, _, _)) if (*a, *b, *c) <= (s0, s1, k) => {}
            _ => {
                by_line.insert(key, (s0, s1, k, w, wall));
            }
        }
    }
    let mut out: Vec<(i64, i64, i64, NumChern, Wall)> = by_line.into_values().collect();
    out.sort_by_key(|(s0, s1, k, _, _)| (*s0, *s1, *k));
    Ok(out.into_iter().map(|(_, _, _, w, wall)| (w, wall)).collect())
}

fn candidates_for_rank(
    v: &NumChern,
    s0: i64,
    s1_min: i64,
    s1_max: i64,
    dv: &Rational,
    beta_lo: &Rational,
    beta_hi: &Rational,
) -> Result<Vec<(i64, i64, i64, NumChern, Wall)>> {
    let mut found = Vec::new();
    if s0 == 0 && v.s()[0].is_zero() {
        // both rank zero: the slope-equality locus is never a
        // non-vertical line
        return Ok(found);
    }
    for s1 in s1_min..=s1_max {
        let s1r = Rational::from(s1);
        // half-integer range for s2 from the discriminant constraints
        let range = if s0 != 0 {
            // 0 <= s1^2 - 2 s0 s2 <= dv
            let s0r = Rational::from(s0);
            let x1 = (s1r.clone() * s1r.clone() - dv.clone()) / (Rational::from(2) * s0r.clone());
            let x2 = s1r.clone() * s1r.clone() / (Rational::from(2) * s0r);
            Some((x1.clone().min(x2.clone()), x1.max(x2)))
        } else {
            // rank-zero w: delta(w) = s1^2 must fit, and delta(v - w)
            // in [0, dv - s1^2] pins s2 to an interval
            let headroom = dv.clone() - s1r.clone() * s1r.clone();
            if headroom.is_negative() {
                None
            } else {
                let s0v = v.s()[0].clone();
                let gap = v.s()[1].clone() - s1r.clone();
                let base = Rational::from(2) * s0v.clone() * v.s()[2].clone()
                    - gap.clone() * gap;
                let x1 = base.clone() / (Rational::from(2) * s0v.clone());
                let x2 = (base + headroom) / (Rational::from(2) * s0v);
                Some((x1.clone().min(x2.clone()), x1.max(x2)))
            }
        };
        let Some((s2_lo, s2_hi)) = range else { continue };
        let k_lo = ceil_i64(&(s2_lo * Rational::from(2)))?;
        let k_hi = floor_i64(&(s2_hi * Rational::from(2)))?;
        for k in k_lo..=k_hi {
            let w = NumChern::p3(vec![
                Rational::from(s0),
                s1r.clone(),
                rat(k, 2),
                Rational::zero(),
            ])?;
            let dw = delta_bar(&w);
            let rest = v.sub(&w)?;
            let drest = delta_bar(&rest);
            if dw.is_negative() || drest.is_negative() || dw + drest > *dv {
                continue;
            }
            let Some(wall) = wall_between(v, &w)? else { continue };
            if !wall_feasible(&wall, &w, &rest, beta_lo, beta_hi)? {
                continue;
            }
            found.push((s0, s1, k, w, wall));
        }
    }
    Ok(found)
}

/// Does the wall segment above the parabola intersect the beta-interval
/// at a point where both sides pass the numeric heart check?
fn wall_feasible(
    wall: &Wall,
    w: &NumChern,
    rest: &NumChern,
    beta_lo: &Rational,
    beta_hi: &Rational,
) -> Result<bool> {
    // the wall meets the closed region above the parabola iff
    // g(beta) = beta^2/2 - alpha_wall(beta) dips <= 0 on the interval
    let g = |beta: &Rational| {
        beta.clone() * beta.clone() * rat(1, 2) - wall.alpha_at(beta)
    };
    let mut g_min = g(beta_lo).min(g(beta_hi));
    if &wall.slope > beta_lo && &wall.slope < beta_hi {
        g_min = g_min.min(g(&wall.slope));
    }
    if g_min.is_positive() {
        return Ok(false);
    }
    // intersect [beta_lo, beta_hi] with the parabola chord of the wall
    let Some((p1, p2)) = parabola_endpoints(wall)? else {
        return Ok(false);
    };
    let mut lo = p1.beta.clone().max(QuadSurd::from_rational(beta_lo.clone()));
    let mut hi = p2.beta.clone().min(QuadSurd::from_rational(beta_hi.clone()));
    // each heart condition s1 - s0 beta >= 0 clips the interval further
    for side in [w, rest] {
        let s0 = &side.s()[0];
        let s1 = &side.s()[1];
        if s0.is_zero() {
            if s1.is_negative() {
                return Ok(false);
            }
            continue;
        }
        let cut = QuadSurd::from_rational(s1.clone() / s0.clone());
        if s0.is_positive() {
            hi = hi.min(cut);
        } else {
            lo = lo.max(cut);
        }
    }
    Ok(lo <= hi)
}
