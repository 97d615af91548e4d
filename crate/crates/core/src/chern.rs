//! Numerical Chern characters in intersection-number coordinates,
//! beta-twists, slopes, and discriminants.
//!
//! A character is stored as s_i = H^{dim-i}.ch_i, the pairings every
//! formula here is written in; the only residue of H itself is the top
//! degree e = H^dim.

use serde::{Deserialize, Serialize};

use crate::arith::{rat, Rational};
use crate::error::{Error, Result};
use crate::geometry::{SurfaceLattice, LatticeChern, Variety};

/// Numerical Chern character on a polarized variety, as the vector
/// (s_0, ..., s_dim) with s_i = H^{dim-i}.ch_i.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumChern {
    variety: Variety,
    s: Vec<Rational>,
}

impl NumChern {
    pub fn new(variety: Variety, s: Vec<Rational>) -> Result<Self> {
        if s.len() != variety.dim() + 1 {
            return Err(Error::DomainError(format!(
                "character needs {} entries on a {}-fold, got {}",
                variety.dim() + 1,
                variety.dim(),
                s.len()
            )));
        }
        Ok(NumChern { variety, s })
    }

    pub fn p3(s: Vec<Rational>) -> Result<Self> {
        NumChern::new(Variety::ProjSpace3, s)
    }

    /// ch(O(kH)) on P^3.
    pub fn line_bundle_p3(k: i64) -> Self {
        let k = Rational::from(k);
        NumChern {
            variety: Variety::ProjSpace3,
            s: vec![
                Rational::one(),
                k.clone(),
                k.pow(2) * rat(1, 2),
                k.pow(3) * rat(1, 6),
            ],
        }
    }

    pub fn variety(&self) -> &Variety {
        &self.variety
    }

    pub fn s(&self) -> &[Rational] {
        &self.s
    }

    pub fn rank(&self) -> &Rational {
        &self.s[0]
    }

    pub fn hdeg(&self) -> Rational {
        Rational::from(self.variety.hdeg())
    }

    /// Integrality predicate for characters of actual objects on P^3:
    /// s0, s1 integral, s2 half-integral, s3 sixth-integral. Intermediate
    /// symbolic values are legitimately non-integral, so this is checked,
    /// never enforced.
    pub fn is_integral(&self) -> bool {
        matches!(self.variety, Variety::ProjSpace3)
            && self.s[0].is_integer()
            && self.s[1].is_integer()
            && self.s[2].is_multiple_of_inverse(2)
            && self.s[3].is_multiple_of_inverse(6)
    }

    pub fn add(&self, other: &NumChern) -> Result<NumChern> {
        if self.variety != other.variety {
            return Err(Error::DomainError("characters on different varieties".into()));
        }
        let s = self
            .s
            .iter()
            .zip(&other.s)
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        NumChern::new(self.variety.clone(), s)
    }

    pub fn sub(&self, other: &NumChern) -> Result<NumChern> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> NumChern {
        NumChern {
            variety: self.variety.clone(),
            s: self.s.iter().map(|x| -x.clone()).collect(),
        }
    }
}

/// The beta-twisted character e^{-beta H}.ch in s-coordinates:
/// s_i^beta = sum_j (-beta)^{i-j}/(i-j)! s_j, with the j = 0 term
/// carrying an extra factor e.
pub fn twist_beta(v: &NumChern, beta: &Rational) -> NumChern {
    let e = v.hdeg();
    let n = v.s.len();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut acc = Rational::zero();
        for j in 0..=i {
            let k = i - j;
            let mut coeff = (-beta.clone()).pow(k as u32) * inv_factorial(k);
            if j == 0 {
                coeff *= e.clone();
            }
            acc += coeff * v.s[j].clone();
        }
        out.push(acc);
    }
    // the j = 0 factor e applies only to the s_0 contribution; undo the
    // spurious e on the diagonal term i = j = 0
    out[0] = v.s[0].clone();
    NumChern { variety: v.variety.clone(), s: out }
}

fn inv_factorial(k: usize) -> Rational {
    let mut f = Rational::one();
    for i in 1..=k as i64 {
        f *= Rational::from(i);
    }
    f.recip()
}

/// Slope mu_H = s1 / (e s0), infinite (None) on rank zero.
pub fn slope_mu(v: &NumChern) -> Option<Rational> {
    if v.s[0].is_zero() {
        None
    } else {
        Some(v.s[1].clone() / (v.hdeg() * v.s[0].clone()))
    }
}

/// Tilted slope nu_{beta,alpha} = (s2 - alpha e s0)/(s1 - beta e s0),
/// infinite (None) on the vertical-wall locus.
pub fn slope_nu(v: &NumChern, beta: &Rational, alpha: &Rational) -> Option<Rational> {
    let e = v.hdeg();
    let den = v.s[1].clone() - beta.clone() * e.clone() * v.s[0].clone();
    if den.is_zero() {
        None
    } else {
        Some((v.s[2].clone() - alpha.clone() * e * v.s[0].clone()) / den)
    }
}

/// Discriminant in H-pairings: s1^2 - 2 e s0 s2.
pub fn delta_bar(v: &NumChern) -> Rational {
    v.s[1].clone() * v.s[1].clone()
        - Rational::from(2) * v.hdeg() * v.s[0].clone() * v.s[2].clone()
}

/// Surface discriminant ch1^2 - 2 ch0 ch2 on a lattice.
pub fn delta_surface(lattice: &SurfaceLattice, v: &LatticeChern) -> Result<Rational> {
    if v.c1.len() != lattice.rank() {
        return Err(Error::RankMismatch { expected: lattice.rank(), got: v.c1.len() });
    }
    Ok(lattice.pair(&v.c1, &v.c1) - Rational::from(2) * v.r.clone() * v.ch2.clone())
}

/// Necessary (not sufficient) numeric condition for membership in the
/// tilted heart at level beta: s1 - beta e s0 >= 0. Full membership needs
/// Harder-Narasimhan data this crate does not model.
pub fn heart_numeric_check(v: &NumChern, beta: &Rational) -> bool {
    !(v.s[1].clone() - beta.clone() * v.hdeg() * v.s[0].clone()).is_negative()
}

/// Normalized surface coordinates (r, a, b) = (ch0, H.ch1/d, ch2) of a
/// character on a degree-d surface.
pub fn to_surface_triple(v: &NumChern) -> Result<(Rational, Rational, Rational)> {
    if v.variety.dim() != 2 {
        return Err(Error::WrongDimension(v.variety.dim()));
    }
    let d = v.hdeg();
    Ok((v.s[0].clone(), v.s[1].clone() / d, v.s[2].clone()))
}
