use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// An irreducible homogeneous bundle `S^sym Ω (twist)` on P2.
///
/// Partitions with two parts are reduced through `∧²Ω = O(-3)`, so only
/// `sym ∈ {0, 1, 2}` (`O`, `Ω`, `S²Ω`) ever appear.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct FactorBundle {
    pub sym: u32,
    pub twist: i64,
}

pub const MAX_SYM: u32 = 2;

impl FactorBundle {
    pub fn o(t: i64) -> Self {
        FactorBundle { sym: 0, twist: t }
    }

    pub fn omega(t: i64) -> Self {
        FactorBundle { sym: 1, twist: t }
    }

    pub fn s2omega(t: i64) -> Self {
        FactorBundle { sym: 2, twist: t }
    }

    /// `S_{(l1, l2)} Ω (t)`, reduced to `S^{l1 - l2} Ω (t - 3 l2)`.
    pub fn schur(l1: i64, l2: i64, t: i64) -> Result<Self> {
        if l2 < 0 || l1 < l2 {
            return Err(Error::MalformedPartition(l1, l2));
        }
        let sym = l1 - l2;
        if sym > MAX_SYM as i64 {
            return Err(Error::OutsideFactorSet(format!("S^{sym}Ω")));
        }
        Ok(FactorBundle { sym: sym as u32, twist: t - 3 * l2 })
    }

    pub fn rank(&self) -> u64 {
        self.sym as u64 + 1
    }

    pub fn is_line(&self) -> bool {
        self.sym == 0
    }

    pub fn twisted(&self, s: i64) -> Self {
        FactorBundle { sym: self.sym, twist: self.twist + s }
    }

    /// `S^k Ω(t)^∨ = S^k Ω(3k - t)`.
    pub fn dual(&self) -> Self {
        FactorBundle { sym: self.sym, twist: 3 * self.sym as i64 - self.twist }
    }

    /// Pieri: `S^a Ω ⊗ S^b Ω = ⊕_{i ≤ min(a,b)} S^{a+b-2i} Ω (-3i)`.
    pub fn tensor(&self, other: &Self) -> Result<Vec<Self>> {
        let (a, b) = (self.sym, other.sym);
        let t = self.twist + other.twist;
        let mut out = Vec::new();
        for i in 0..=a.min(b) {
            let sym = a + b - 2 * i;
            if sym > MAX_SYM {
                return Err(Error::OutsideFactorSet(format!("{self} ⊗ {other}")));
            }
            out.push(FactorBundle { sym, twist: t - 3 * i as i64 });
        }
        Ok(out)
    }
}

impl fmt::Display for FactorBundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sym {
            0 => write!(f, "O({})", self.twist),
            1 => write!(f, "Om({})", self.twist),
            2 => write!(f, "S2Om({})", self.twist),
            k => write!(f, "S{k}Om({})", self.twist),
        }
    }
}
