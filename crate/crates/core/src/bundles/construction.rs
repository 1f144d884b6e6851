use std::fmt;

use serde::Serialize;

use super::expr::BundleExpr;
use crate::error::{Error, Result};

/// Position of an object in a short exact sequence `0 → S → M → Q → 0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub enum Slot {
    Sub,
    Mid,
    Quot,
}

impl Slot {
    pub fn index(self) -> usize {
        match self {
            Slot::Sub => 0,
            Slot::Mid => 1,
            Slot::Quot => 2,
        }
    }

    pub fn mirrored(self) -> Slot {
        match self {
            Slot::Sub => Slot::Quot,
            Slot::Mid => Slot::Mid,
            Slot::Quot => Slot::Sub,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub enum Side {
    Left,
    Right,
}

/// A homomorphism between two factors on one P2, given by explicit data.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub enum FactorMap {
    /// `O(a) → O(a + d)`, multiplication by a form of degree `d`
    /// (list of exponent vectors with coefficients).
    Mult(Vec<([u32; 3], i64)>),
    /// `O(a) → Ω(a + 2) ⊂ O(a + 1)^3`, the section `x × c`.
    Koszul([i64; 3]),
    /// `Ω(t) ⊂ O(t - 1)^3 → O(t - 1)`, contraction with the constant vector `c`.
    Contract([i64; 3]),
}

impl FactorMap {
    pub fn linear(c: [i64; 3]) -> Self {
        let terms = (0..3)
            .map(|i| {
                let mut e = [0; 3];
                e[i] = 1;
                (e, c[i])
            })
            .collect();
        FactorMap::Mult(terms)
    }

    /// The transpose map between the duals, up to a global sign.
    pub fn dual(&self) -> Self {
        match self {
            FactorMap::Mult(p) => FactorMap::Mult(p.clone()),
            FactorMap::Koszul(c) => FactorMap::Contract(*c),
            FactorMap::Contract(c) => FactorMap::Koszul(*c),
        }
    }
}

/// A map `id_L ⊠ Φ : (L ⊠ A)^cols → (L ⊠ B)^rows` where `Φ` is the matrix
/// `entries` of factor maps acting on `side`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct KnownMap {
    pub side: Side,
    pub entries: Vec<Vec<FactorMap>>,
}

impl KnownMap {
    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.entries.first().map_or(0, Vec::len)
    }

    pub fn transposed_dual(&self) -> Self {
        let (r, c) = (self.rows(), self.cols());
        let entries = (0..c)
            .map(|j| (0..r).map(|i| self.entries[i][j].dual()).collect())
            .collect();
        KnownMap { side: self.side, entries }
    }
}

/// `h^degree(U ⊗ context) = dim` for the unknown object `U` of a construction.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct Fact {
    pub context: BundleExpr,
    pub degree: usize,
    pub dim: u64,
}

/// An object defined by a short exact sequence in which the other two terms
/// are known, tensored with a sum-form `context`.
///
/// Line-bundle twists are absorbed into the sequence itself, so `context`
/// stays `O(0,0)` unless a non-line bundle was tensored in.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct Construction {
    parts: [Option<BundleExpr>; 3],
    unknown: Slot,
    nontrivial: bool,
    generic: bool,
    map: Option<KnownMap>,
    facts: Vec<Fact>,
    context: BundleExpr,
}

impl Construction {
    fn new(parts: [Option<BundleExpr>; 3], unknown: Slot) -> Self {
        Construction {
            parts,
            unknown,
            nontrivial: false,
            generic: false,
            map: None,
            facts: vec![],
            context: BundleExpr::line(0, 0),
        }
    }

    /// Middle term of `0 → sub → E → quotient → 0`. A trivial extension is
    /// the direct sum.
    pub fn extension(sub: BundleExpr, quotient: BundleExpr, nontrivial: bool) -> BundleExpr {
        if !nontrivial {
            return sub + quotient;
        }
        let mut c = Self::new([Some(sub), None, Some(quotient)], Slot::Mid);
        c.nontrivial = true;
        c.into()
    }

    pub fn extension_decl(sub: BundleExpr, quotient: BundleExpr) -> Self {
        let mut c = Self::new([Some(sub), None, Some(quotient)], Slot::Mid);
        c.nontrivial = true;
        c
    }

    /// Cokernel `Q` of `0 → sub → mid → Q → 0`.
    pub fn cokernel(sub: BundleExpr, mid: BundleExpr) -> Self {
        Self::new([Some(sub), Some(mid), None], Slot::Quot)
    }

    /// Kernel `S` of `0 → S → mid → quotient → 0`.
    pub fn kernel(mid: BundleExpr, quotient: BundleExpr) -> Self {
        Self::new([None, Some(mid), Some(quotient)], Slot::Sub)
    }

    pub fn with_map(mut self, map: KnownMap) -> Self {
        self.map = Some(map);
        self
    }

    pub fn with_fact(mut self, context: BundleExpr, degree: usize, dim: u64) -> Self {
        self.facts.push(Fact { context, degree, dim });
        self.facts.sort();
        self
    }

    /// Allow maximal ranks for otherwise undetermined maps.
    pub fn assume_generic(mut self) -> Self {
        self.generic = true;
        self
    }

    pub fn unknown(&self) -> Slot {
        self.unknown
    }

    pub fn is_nontrivial(&self) -> bool {
        self.nontrivial
    }

    pub fn is_generic(&self) -> bool {
        self.generic
    }

    pub fn context(&self) -> &BundleExpr {
        &self.context
    }

    pub fn has_trivial_context(&self) -> bool {
        self.context == BundleExpr::line(0, 0)
    }

    /// The known parts before tensoring with the context.
    pub fn base_part(&self, slot: Slot) -> Option<&BundleExpr> {
        self.parts[slot.index()].as_ref()
    }

    /// A known part of the sequence tensored with the context.
    pub fn part(&self, slot: Slot) -> Result<Option<BundleExpr>> {
        match &self.parts[slot.index()] {
            None => Ok(None),
            Some(p) if self.has_trivial_context() => Ok(Some(p.clone())),
            Some(p) => p.tensor(&self.context).map(Some),
        }
    }

    /// Facts whose context matches the current one.
    pub fn active_facts(&self) -> Vec<(usize, u64)> {
        self.facts
            .iter()
            .filter(|f| f.context == self.context)
            .map(|f| (f.degree, f.dim))
            .collect()
    }

    pub fn facts(&self) -> &[Fact] {
        &self.facts
    }

    /// For a nontrivial extension tensored with the dual of its quotient,
    /// the first connecting map sends the identity to the extension class.
    /// For a quotient `L^k` tensored with `L^∨` the map `H^0(O^k) → H^1(S ⊗ L^∨)`
    /// has the k components of the class as its columns.
    pub fn connecting_map_nonzero(&self) -> bool {
        if !self.nontrivial || self.unknown != Slot::Mid {
            return false;
        }
        match self.parts[2].as_ref() {
            Some(q) if q.dual() == self.context => true,
            Some(q) if q.is_sum_form() && q.terms().len() == 1 => {
                let t = &q.terms()[0];
                t.left.is_line() && t.right.is_line() && BundleExpr::line(-t.left.twist, -t.right.twist) == self.context
            }
            _ => false,
        }
    }

    /// The explicit map between the known parts, if it still applies in the
    /// current context (every context term must be a line bundle on the
    /// map's side).
    pub fn active_map(&self) -> Option<&KnownMap> {
        let map = self.map.as_ref()?;
        if !self.context.is_sum_form() {
            return None;
        }
        let ok = self.context.terms().iter().all(|t| match map.side {
            Side::Left => t.left.is_line(),
            Side::Right => t.right.is_line(),
        });
        ok.then_some(map)
    }

    pub fn rank(&self) -> Result<u64> {
        let r = |s: Slot| -> Result<i64> {
            Ok(self.parts[s.index()].as_ref().map(BundleExpr::rank).transpose()?.unwrap_or(0) as i64)
        };
        let ctx = self.context.rank()? as i64;
        let base = match self.unknown {
            Slot::Mid => r(Slot::Sub)? + r(Slot::Quot)?,
            Slot::Quot => r(Slot::Mid)? - r(Slot::Sub)?,
            Slot::Sub => r(Slot::Mid)? - r(Slot::Quot)?,
        };
        if base < 0 {
            return Err(Error::NegativeRank(base));
        }
        Ok(base as u64 * ctx as u64)
    }

    pub fn twist(&self, m: i64, n: i64) -> Self {
        let mut c = self.clone();
        if self.has_trivial_context() {
            for p in c.parts.iter_mut().flatten() {
                *p = p.twist(m, n);
            }
            for f in &mut c.facts {
                f.context = f.context.twist(-m, -n);
            }
            c.facts.sort();
        } else {
            c.context = c.context.twist(m, n);
        }
        c
    }

    /// Dualizes the sequence: `0 → Q^∨ → M^∨ → S^∨ → 0`.
    pub fn dual(&self) -> Self {
        let [s, m, q] = &self.parts;
        let d = |p: &Option<BundleExpr>| p.as_ref().map(BundleExpr::dual);
        let mut facts: Vec<Fact> = self
            .facts
            .iter()
            .map(|f| Fact { context: f.context.dual().twist(-3, -3), degree: 4 - f.degree, dim: f.dim })
            .collect();
        facts.sort();
        Construction {
            parts: [d(q), d(m), d(s)],
            unknown: self.unknown.mirrored(),
            nontrivial: self.nontrivial,
            generic: self.generic,
            map: self.map.as_ref().map(KnownMap::transposed_dual),
            facts,
            context: self.context.dual(),
        }
    }

    pub fn tensor(&self, b: &BundleExpr) -> Result<Self> {
        if !b.is_sum_form() {
            return Err(Error::Unsupported("tensor product of two declared constructions".into()));
        }
        if self.has_trivial_context() {
            if let Some((m, n)) = b.as_line() {
                return Ok(self.twist(m, n));
            }
        }
        let mut c = self.clone();
        c.context = self.context.tensor(b)?;
        Ok(c)
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |p: &Option<BundleExpr>| p.as_ref().map(|e| e.to_string()).unwrap_or_default();
        let [s, m, q] = &self.parts;
        match self.unknown {
            Slot::Mid => write!(f, "ext({};{};nontriv)", show(s), show(q))?,
            Slot::Quot => write!(f, "coker({} -> {})", show(s), show(m))?,
            Slot::Sub => write!(f, "ker({} -> {})", show(m), show(q))?,
        }
        if !self.has_trivial_context() {
            write!(f, " (x) ({})", self.context)?;
        }
        Ok(())
    }
}
