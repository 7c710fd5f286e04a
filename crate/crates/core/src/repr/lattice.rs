//! Finite lattices in the two groups.
//!
//! A time-frequency lattice is a subgroup `aZ_N x bZ_N` of `Z_N x Z_N`,
//! enumerated row-major (time index outer, frequency index inner). A dyadic
//! lattice enumerates the detail atoms of a periodized filter bank, finest
//! level first and translations ascending within a level, followed by the
//! approximation atoms of the coarsest level.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A time-frequency shift `(k, l)` on `Z_N x Z_N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TfPoint {
    pub k: usize,
    pub l: usize,
    pub n: usize,
}

impl TfPoint {
    pub fn new(k: usize, l: usize, n: usize) -> Result<Self> {
        if n == 0 || k >= n || l >= n {
            return Err(Error::Index(format!(
                "time-frequency point ({k}, {l}) outside Z_{n} x Z_{n}"
            )));
        }
        Ok(Self { k, l, n })
    }

    /// Signed representative of an index: `k` if `k <= N/2`, else `k - N`.
    pub fn signed(index: usize, n: usize) -> i64 {
        if 2 * index <= n {
            index as i64
        } else {
            index as i64 - n as i64
        }
    }

    pub fn signed_k(&self) -> i64 {
        Self::signed(self.k, self.n)
    }

    pub fn signed_l(&self) -> i64 {
        Self::signed(self.l, self.n)
    }

    /// Group sum on `Z_N x Z_N` (the phase coordinate is carried by the cocycle).
    pub fn add(&self, other: &TfPoint) -> Result<TfPoint> {
        if self.n != other.n {
            return Err(Error::Dimension {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(TfPoint {
            k: (self.k + other.k) % self.n,
            l: (self.l + other.l) % self.n,
            n: self.n,
        })
    }

    pub fn sub(&self, other: &TfPoint) -> Result<TfPoint> {
        if self.n != other.n {
            return Err(Error::Dimension {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(TfPoint {
            k: (self.k + self.n - other.k) % self.n,
            l: (self.l + self.n - other.l) % self.n,
            n: self.n,
        })
    }
}

/// Which filter-bank channel an affine atom comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Band {
    Detail,
    Approximation,
}

/// A dyadic scale-translation pair. `j = 0` is the finest level and the
/// attached scale value is `a = 2^{-j}`. Approximation atoms sit on the
/// coarsest level `j = J - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AffinePoint {
    pub j: usize,
    pub k: usize,
    pub band: Band,
}

impl AffinePoint {
    pub fn detail(j: usize, k: usize) -> Self {
        Self {
            j,
            k,
            band: Band::Detail,
        }
    }

    pub fn approximation(j: usize, k: usize) -> Self {
        Self {
            j,
            k,
            band: Band::Approximation,
        }
    }

    pub fn scale(&self) -> f64 {
        (-(self.j as f64)).exp2()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LatticePoint {
    Tf(TfPoint),
    Affine(AffinePoint),
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticePoint::Tf(p) => write!(f, "(k={}, l={})", p.k, p.l),
            LatticePoint::Affine(p) => match p.band {
                Band::Detail => write!(f, "(j={}, k={})", p.j, p.k),
                Band::Approximation => write!(f, "(j={}, k={}, approx)", p.j, p.k),
            },
        }
    }
}

/// Subgroup `time_step * Z_N x freq_step * Z_N` of the time-frequency plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TfLattice {
    n: usize,
    time_step: usize,
    freq_step: usize,
}

impl TfLattice {
    pub fn full(n: usize) -> Result<Self> {
        Self::new(n, 1, 1)
    }

    pub fn new(n: usize, time_step: usize, freq_step: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidLattice("modulus must be positive".into()));
        }
        if time_step == 0 || n % time_step != 0 || freq_step == 0 || n % freq_step != 0 {
            return Err(Error::InvalidLattice(format!(
                "steps ({time_step}, {freq_step}) must divide N = {n}"
            )));
        }
        Ok(Self {
            n,
            time_step,
            freq_step,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn time_step(&self) -> usize {
        self.time_step
    }

    pub fn freq_step(&self) -> usize {
        self.freq_step
    }

    pub fn time_count(&self) -> usize {
        self.n / self.time_step
    }

    pub fn freq_count(&self) -> usize {
        self.n / self.freq_step
    }

    pub fn len(&self) -> usize {
        self.time_count() * self.freq_count()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_full(&self) -> bool {
        self.time_step == 1 && self.freq_step == 1
    }

    pub fn point(&self, index: usize) -> TfPoint {
        let fc = self.freq_count();
        TfPoint {
            k: (index / fc) * self.time_step,
            l: (index % fc) * self.freq_step,
            n: self.n,
        }
    }

    pub fn index_of(&self, p: &TfPoint) -> Option<usize> {
        if p.n != self.n || p.k % self.time_step != 0 || p.l % self.freq_step != 0 {
            return None;
        }
        Some((p.k / self.time_step) * self.freq_count() + p.l / self.freq_step)
    }
}

/// Dyadic lattice of a `levels`-stage periodized filter bank on `Z_N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineLattice {
    n: usize,
    levels: usize,
}

impl AffineLattice {
    /// `J = log2(N) - 1` levels, leaving two approximation coefficients.
    pub fn standard(n: usize) -> Result<Self> {
        if n < 4 || !n.is_power_of_two() {
            return Err(Error::InvalidLattice(format!(
                "dyadic lattice needs N a power of two with N >= 4, got {n}"
            )));
        }
        Self::new(n, n.trailing_zeros() as usize - 1)
    }

    pub fn new(n: usize, levels: usize) -> Result<Self> {
        if levels == 0 {
            return Err(Error::InvalidLattice("at least one level required".into()));
        }
        if levels >= usize::BITS as usize || n == 0 || n % (1usize << levels) != 0 {
            return Err(Error::InvalidLattice(format!(
                "N = {n} is not divisible by 2^{levels}"
            )));
        }
        Ok(Self { n, levels })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn levels(&self) -> usize {
        self.levels
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of translations of the detail atoms at level `j`.
    pub fn detail_count(&self, j: usize) -> usize {
        self.n >> (j + 1)
    }

    pub fn approximation_count(&self) -> usize {
        self.n >> self.levels
    }

    fn level_offset(&self, j: usize) -> usize {
        (0..j).map(|i| self.detail_count(i)).sum()
    }

    pub fn point(&self, index: usize) -> AffinePoint {
        let mut rest = index;
        for j in 0..self.levels {
            let count = self.detail_count(j);
            if rest < count {
                return AffinePoint::detail(j, rest);
            }
            rest -= count;
        }
        AffinePoint::approximation(self.levels - 1, rest)
    }

    pub fn index_of(&self, p: &AffinePoint) -> Option<usize> {
        if p.j >= self.levels {
            return None;
        }
        match p.band {
            Band::Detail if p.k < self.detail_count(p.j) => Some(self.level_offset(p.j) + p.k),
            Band::Approximation if p.j == self.levels - 1 && p.k < self.approximation_count() => {
                Some(self.n - self.approximation_count() + p.k)
            }
            _ => None,
        }
    }

    pub fn check_point(&self, p: &AffinePoint) -> Result<usize> {
        self.index_of(p).ok_or_else(|| {
            Error::Index(format!(
                "affine point {} outside lattice with N = {}, J = {}",
                LatticePoint::Affine(*p),
                self.n,
                self.levels
            ))
        })
    }
}

/// An ordered finite family of group elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Lattice {
    Tf(TfLattice),
    Affine(AffineLattice),
}

impl Lattice {
    pub fn len(&self) -> usize {
        match self {
            Lattice::Tf(l) => l.len(),
            Lattice::Affine(l) => l.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Dimension of the signal space the lattice acts on.
    pub fn dim(&self) -> usize {
        match self {
            Lattice::Tf(l) => l.n(),
            Lattice::Affine(l) => l.n(),
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            Lattice::Tf(_) => "time-frequency",
            Lattice::Affine(_) => "affine",
        }
    }

    pub fn point(&self, index: usize) -> LatticePoint {
        match self {
            Lattice::Tf(l) => LatticePoint::Tf(l.point(index)),
            Lattice::Affine(l) => LatticePoint::Affine(l.point(index)),
        }
    }

    pub fn points(&self) -> impl Iterator<Item = LatticePoint> + '_ {
        (0..self.len()).map(move |i| self.point(i))
    }

    pub fn index_of(&self, p: &LatticePoint) -> Option<usize> {
        match (self, p) {
            (Lattice::Tf(l), LatticePoint::Tf(q)) => l.index_of(q),
            (Lattice::Affine(l), LatticePoint::Affine(q)) => l.index_of(q),
            _ => None,
        }
    }

    pub(crate) fn expect_same(&self, other: &Lattice) -> Result<()> {
        if self != other {
            return Err(Error::LatticeMismatch(format!(
                "{} lattice of size {} vs {} lattice of size {}",
                self.kind_name(),
                self.len(),
                other.kind_name(),
                other.len()
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn tf_order_is_row_major() {
        let lat = TfLattice::new(8, 2, 4).unwrap();
        assert_eq!(lat.len(), 8);
        let pts: Vec<_> = (0..lat.len()).map(|i| lat.point(i)).collect();
        assert_eq!((pts[0].k, pts[0].l), (0, 0));
        assert_eq!((pts[1].k, pts[1].l), (0, 4));
        assert_eq!((pts[2].k, pts[2].l), (2, 0));
        for (i, p) in pts.iter().enumerate() {
            assert_eq!(lat.index_of(p), Some(i));
        }
        assert_eq!(lat.index_of(&TfPoint::new(1, 0, 8).unwrap()), None);
    }

    #[test]
    fn affine_order_and_distinctness() {
        let lat = AffineLattice::standard(16).unwrap();
        assert_eq!(lat.levels(), 3);
        let pts: Vec<_> = (0..lat.len()).map(|i| lat.point(i)).collect();
        assert_eq!(pts[0], AffinePoint::detail(0, 0));
        assert_eq!(pts[8], AffinePoint::detail(1, 0));
        assert_eq!(pts[12], AffinePoint::detail(2, 0));
        assert_eq!(pts[14], AffinePoint::approximation(2, 0));
        let set: HashSet<_> = pts.iter().collect();
        assert_eq!(set.len(), 16);
        for (i, p) in pts.iter().enumerate() {
            assert_eq!(lat.index_of(p), Some(i));
        }
        assert!(lat.check_point(&AffinePoint::detail(0, 8)).is_err());
        assert!(lat.check_point(&AffinePoint::detail(3, 0)).is_err());
    }

    #[test]
    fn invalid_lattices() {
        assert!(AffineLattice::standard(12).is_err());
        assert!(AffineLattice::standard(2).is_err());
        assert!(AffineLattice::new(12, 3).is_err());
        assert!(AffineLattice::new(12, 2).is_ok());
        assert!(TfLattice::new(8, 3, 1).is_err());
    }

    #[test]
    fn signed_representatives() {
        assert_eq!(TfPoint::signed(3, 8), 3);
        assert_eq!(TfPoint::signed(4, 8), 4);
        assert_eq!(TfPoint::signed(5, 8), -3);
        assert_eq!(TfPoint::signed(7, 8), -1);
    }
}
