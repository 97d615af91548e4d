//! Polarized varieties, surface intersection lattices, Todd classes, the
//! Grothendieck-Riemann-Roch pushforward to P^3, and numerical Euler
//! pairings.

use serde::{Deserialize, Serialize};

use crate::arith::{rat, Rational};
use crate::chern::NumChern;
use crate::error::{Error, Result};

/// The ambient polarized variety a numerical Chern character lives on:
/// either P^3 itself or a smooth degree-d hypersurface of dimension n.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Variety {
    ProjSpace3,
    Hypersurface { n: usize, d: i64 },
}

impl Variety {
    pub fn hypersurface(n: usize, d: i64) -> Result<Self> {
        if d < 1 {
            return Err(Error::InvalidDegree(d));
        }
        if n < 2 {
            return Err(Error::DomainError(format!("dimension must be >= 2, got {n}")));
        }
        Ok(Variety::Hypersurface { n, d })
    }

    pub fn dim(&self) -> usize {
        match self {
            Variety::ProjSpace3 => 3,
            Variety::Hypersurface { n, .. } => *n,
        }
    }

    /// H^n, the top self-intersection of the polarization.
    pub fn hdeg(&self) -> i64 {
        match self {
            Variety::ProjSpace3 => 1,
            Variety::Hypersurface { d, .. } => *d,
        }
    }
}

/// Intersection data of a surface in a chosen basis of divisor classes:
/// the Gram matrix, the canonical class, and the degree-2 Todd number
/// (which equals chi(O)). td_1 = -K/2 is derived from the canonical
/// class, so c_2 never appears as a separate symbol.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceLattice {
    pub basis: Vec<String>,
    pub gram: Vec<Vec<i64>>,
    pub canonical: Vec<i64>,
    /// The polarization H in the basis; the designated class dual twists
    /// are taken with respect to.
    pub hclass: Vec<i64>,
    pub todd2: Rational,
}

impl SurfaceLattice {
    /// The quadric surface P^1 x P^1 with its ruling basis (h1, h2).
    pub fn quadric() -> Self {
        SurfaceLattice {
            basis: vec!["h1".into(), "h2".into()],
            gram: vec![vec![0, 1], vec![1, 0]],
            canonical: vec![-2, -2],
            hclass: vec![1, 1],
            todd2: Rational::one(),
        }
    }

    /// Rank-1 lattice of a degree-d surface in P^3, spanned by H.
    pub fn hypersurface_rank1(d: i64) -> Result<Self> {
        if d < 1 {
            return Err(Error::InvalidDegree(d));
        }
        let (_, _, todd2) = todd_hypersurface(d)?;
        Ok(SurfaceLattice {
            basis: vec!["H".into()],
            gram: vec![vec![d]],
            canonical: vec![d - 4],
            hclass: vec![1],
            todd2,
        })
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    fn check_rank(&self, v: &LatticeChern) -> Result<()> {
        if v.c1.len() != self.rank() {
            return Err(Error::RankMismatch { expected: self.rank(), got: v.c1.len() });
        }
        Ok(())
    }

    /// Intersection number of two divisor classes given in the basis.
    pub fn pair(&self, a: &[Rational], b: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (i, ai) in a.iter().enumerate() {
            for (j, bj) in b.iter().enumerate() {
                acc += ai.clone() * bj.clone() * Rational::from(self.gram[i][j]);
            }
        }
        acc
    }

    fn canonical_rat(&self) -> Vec<Rational> {
        self.canonical.iter().map(|&k| Rational::from(k)).collect()
    }

    pub fn hclass_rat(&self) -> Vec<Rational> {
        self.hclass.iter().map(|&k| Rational::from(k)).collect()
    }

    /// H^2 in this lattice.
    pub fn hdeg(&self) -> Rational {
        let h = self.hclass_rat();
        self.pair(&h, &h)
    }

    /// Serializes to the small structured text document consumed by the
    /// `chi` command.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("basis: {}\n", self.basis.join(" ")));
        for row in &self.gram {
            let row: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            out.push_str(&format!("gram: {}\n", row.join(" ")));
        }
        let canonical: Vec<String> = self.canonical.iter().map(|x| x.to_string()).collect();
        out.push_str(&format!("canonical: {}\n", canonical.join(" ")));
        let hclass: Vec<String> = self.hclass.iter().map(|x| x.to_string()).collect();
        out.push_str(&format!("hclass: {}\n", hclass.join(" ")));
        out.push_str(&format!("todd2: {}\n", self.todd2));
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut basis = Vec::new();
        let mut gram = Vec::new();
        let mut canonical = Vec::new();
        let mut hclass = Vec::new();
        let mut todd2 = None;
        let bad = |line: &str| Error::ParseError(format!("bad lattice line {line:?}"));
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, rest) = line.split_once(':').ok_or_else(|| bad(line))?;
            let rest = rest.trim();
            match key.trim() {
                "basis" => basis = rest.split_whitespace().map(String::from).collect(),
                "gram" => {
                    let row: std::result::Result<Vec<i64>, _> =
                        rest.split_whitespace().map(str::parse).collect();
                    gram.push(row.map_err(|_| bad(line))?);
                }
                "canonical" => {
                    let row: std::result::Result<Vec<i64>, _> =
                        rest.split_whitespace().map(str::parse).collect();
                    canonical = row.map_err(|_| bad(line))?;
                }
                "hclass" => {
                    let row: std::result::Result<Vec<i64>, _> =
                        rest.split_whitespace().map(str::parse).collect();
                    hclass = row.map_err(|_| bad(line))?;
                }
                "todd2" => todd2 = Some(rest.parse::<Rational>()?),
                _ => return Err(bad(line)),
            }
        }
        let rank = basis.len();
        let todd2 = todd2.ok_or_else(|| Error::ParseError("missing todd2".into()))?;
        if rank == 0
            || gram.len() != rank
            || gram.iter().any(|r| r.len() != rank)
            || canonical.len() != rank
            || hclass.len() != rank
        {
            return Err(Error::ParseError("inconsistent lattice dimensions".into()));
        }
        for i in 0..rank {
            for j in 0..rank {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::ParseError("gram matrix not symmetric".into()));
                }
            }
        }
        Ok(SurfaceLattice { basis, gram, canonical, hclass, todd2 })
    }
}

/// A full surface Chern character (ch0, ch1, ch2) with ch1 written in the
/// lattice basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeChern {
    pub r: Rational,
    pub c1: Vec<Rational>,
    pub ch2: Rational,
}

impl LatticeChern {
    pub fn new(r: Rational, c1: Vec<Rational>, ch2: Rational) -> Self {
        LatticeChern { r, c1, ch2 }
    }

    /// ch of O(D) for a divisor class D on the given lattice.
    pub fn line_bundle(lattice: &SurfaceLattice, class: &[Rational]) -> Self {
        let half_square = lattice.pair(class, class) * rat(1, 2);
        LatticeChern::new(Rational::one(), class.to_vec(), half_square)
    }

    pub fn structure_sheaf(lattice: &SurfaceLattice) -> Self {
        LatticeChern::new(
            Rational::one(),
            vec![Rational::zero(); lattice.rank()],
            Rational::zero(),
        )
    }
}

/// Todd class of a smooth degree-d surface in P^3, in H_S-coefficient
/// form: (1, 2 - d/2, d^3/6 - d^2 + 11d/6). The last slot is chi(O).
pub fn todd_hypersurface(d: i64) -> Result<(Rational, Rational, Rational)> {
    if d < 1 {
        return Err(Error::InvalidDegree(d));
    }
    let d = Rational::from(d);
    let td1 = Rational::from(2) - d.clone() * rat(1, 2);
    let td2 = d.pow(3) * rat(1, 6) - d.pow(2) + d * rat(11, 6);
    Ok((Rational::one(), td1, td2))
}

/// Todd class of P^3 in H-coefficient form: (1, 2, 11/6, 1).
pub fn todd_p3() -> (Rational, Rational, Rational, Rational) {
    (Rational::one(), Rational::from(2), rat(11, 6), Rational::one())
}

/// Pushforward of a surface character along the embedding of a degree-d
/// surface into P^3, in the normalized coordinates r = ch0, a = H.ch1/d,
/// b = ch2. Returns intersection numbers
/// (0, dr, (a - dr/2)d, b - d^2 a/2 + d^3 r/6).
pub fn grr_pushforward(d: i64, r: &Rational, a: &Rational, b: &Rational) -> Result<NumChern> {
    if d < 1 {
        return Err(Error::InvalidDegree(d));
    }
    let dr = Rational::from(d);
    let s1 = dr.clone() * r.clone();
    let s2 = (a.clone() - dr.clone() * r.clone() * rat(1, 2)) * dr.clone();
    let s3 = b.clone() - dr.pow(2) * a.clone() * rat(1, 2) + dr.pow(3) * r.clone() * rat(1, 6);
    NumChern::new(Variety::ProjSpace3, vec![Rational::zero(), s1, s2, s3])
}

/// Numerical Euler pairing chi(v, w) = integral of ch(v)^dual . ch(w) . td
/// over the surface, with ch^dual = (r, -c1, ch2).
pub fn euler_pairing(
    lattice: &SurfaceLattice,
    v: &LatticeChern,
    w: &LatticeChern,
) -> Result<Rational> {
    lattice.check_rank(v)?;
    lattice.check_rank(w)?;
    // degree-2 part of ch(v)^dual . ch(w)
    let deg2 = v.r.clone() * w.ch2.clone() + w.r.clone() * v.ch2.clone()
        - lattice.pair(&v.c1, &w.c1);
    // degree-1 part, paired against td_1 = -K/2
    let deg1: Vec<Rational> = v
        .c1
        .iter()
        .zip(&w.c1)
        .map(|(a, b)| v.r.clone() * b.clone() - w.r.clone() * a.clone())
        .collect();
    let minus_half_k: Vec<Rational> = lattice
        .canonical_rat()
        .iter()
        .map(|k| -k.clone() * rat(1, 2))
        .collect();
    Ok(v.r.clone() * w.r.clone() * lattice.todd2.clone()
        + lattice.pair(&deg1, &minus_half_k)
        + deg2)
}

/// ch(E^dual(H)) = (r, rH - c1, ch2 - c1.H + r H^2/2).
pub fn dual_twist(lattice: &SurfaceLattice, v: &LatticeChern) -> Result<LatticeChern> {
    lattice.check_rank(v)?;
    let h = lattice.hclass_rat();
    let c1: Vec<Rational> = h
        .iter()
        .zip(&v.c1)
        .map(|(hi, ci)| v.r.clone() * hi.clone() - ci.clone())
        .collect();
    let h2 = lattice.hdeg();
    let ch2 = v.ch2.clone() - lattice.pair(&v.c1, &h) + v.r.clone() * h2 * rat(1, 2);
    Ok(LatticeChern::new(v.r.clone(), c1, ch2))
}
