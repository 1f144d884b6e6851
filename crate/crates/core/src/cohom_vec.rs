use std::fmt;
use std::ops::{Add, AddAssign};

use serde::ser::{Serialize, SerializeSeq, Serializer};

/// Dimensions `h^0 .. h^{N-1}` of the cohomology of a sheaf on an `(N-1)`-dimensional variety.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Cohom<const N: usize>(pub [u64; N]);

/// Cohomology on one copy of P2.
pub type P2Cohom = Cohom<3>;
/// Cohomology on the flag threefold.
pub type FlagCohom = Cohom<4>;
/// Cohomology on P2 x P2.
pub type CohomVector = Cohom<5>;

impl<const N: usize> Cohom<N> {
    pub fn zero() -> Self {
        Cohom([0; N])
    }

    pub fn concentrated(degree: usize, dim: u64) -> Self {
        let mut h = [0; N];
        h[degree] = dim;
        Cohom(h)
    }

    pub fn euler(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &h)| if i % 2 == 0 { h as i64 } else { -(h as i64) })
            .sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&h| h == 0)
    }

    /// Number of degrees carrying nonzero cohomology.
    pub fn support_size(&self) -> usize {
        self.0.iter().filter(|&&h| h != 0).count()
    }

    pub fn scaled(&self, k: u64) -> Self {
        Cohom(self.0.map(|h| h * k))
    }

    pub fn get(&self, i: usize) -> u64 {
        self.0.get(i).copied().unwrap_or(0)
    }
}

impl<const N: usize> Default for Cohom<N> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<const N: usize> Add for Cohom<N> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

impl<const N: usize> AddAssign for Cohom<N> {
    fn add_assign(&mut self, rhs: Self) {
        for (a, b) in self.0.iter_mut().zip(rhs.0) {
            *a += b;
        }
    }
}

impl<const N: usize> fmt::Display for Cohom<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, h) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{h}")?;
        }
        write!(f, ")")
    }
}

impl<const N: usize> Serialize for Cohom<N> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(N))?;
        for h in &self.0 {
            seq.serialize_element(h)?;
        }
        seq.end()
    }
}

/// Kunneth formula: `H^k(A ⊠ B) = ⊕_{i+j=k} H^i(A) ⊗ H^j(B)`.
pub fn kunneth(left: P2Cohom, right: P2Cohom) -> CohomVector {
    let mut h = [0u64; 5];
    for (i, &a) in left.0.iter().enumerate() {
        for (j, &b) in right.0.iter().enumerate() {
            h[i + j] += a * b;
        }
    }
    Cohom(h)
}
