use std::fmt;
use std::ops::Add;

use serde::Serialize;

use super::construction::Construction;
use super::factor::FactorBundle;
use crate::error::{Error, Result};

/// `multiplicity · (left ⊠ right)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct BoxTerm {
    pub left: FactorBundle,
    pub right: FactorBundle,
    pub multiplicity: u64,
}

impl BoxTerm {
    pub fn rank(&self) -> u64 {
        self.multiplicity * self.left.rank() * self.right.rank()
    }

    fn key(&self) -> (FactorBundle, FactorBundle) {
        (self.left, self.right)
    }
}

/// A bundle on P2 × P2 in normal form: a sorted sum of box terms with
/// merged multiplicities, plus a sorted list of declared constructions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Default)]
pub struct BundleExpr {
    terms: Vec<BoxTerm>,
    constructions: Vec<(u64, Construction)>,
}

impl BundleExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = BoxTerm>) -> Self {
        let mut e = BundleExpr { terms: terms.into_iter().collect(), constructions: vec![] };
        e.normalize();
        e
    }

    pub fn term(left: FactorBundle, right: FactorBundle, multiplicity: u64) -> Self {
        Self::from_terms([BoxTerm { left, right, multiplicity }])
    }

    pub fn boxed(left: FactorBundle, right: FactorBundle) -> Self {
        Self::term(left, right, 1)
    }

    /// `O(m, n)`.
    pub fn line(m: i64, n: i64) -> Self {
        Self::boxed(FactorBundle::o(m), FactorBundle::o(n))
    }

    /// `O ⊠ Ω(1)`.
    pub fn g1() -> Self {
        Self::boxed(FactorBundle::o(0), FactorBundle::omega(1))
    }

    /// `Ω(1) ⊠ O`.
    pub fn g2() -> Self {
        Self::boxed(FactorBundle::omega(1), FactorBundle::o(0))
    }

    pub fn construction(c: Construction) -> Self {
        BundleExpr { terms: vec![], constructions: vec![(1, c)] }
    }

    pub fn terms(&self) -> &[BoxTerm] {
        &self.terms
    }

    pub fn constructions(&self) -> &[(u64, Construction)] {
        &self.constructions
    }

    pub fn is_sum_form(&self) -> bool {
        self.constructions.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.constructions.is_empty()
    }

    /// `Some((m, n))` when the expression is exactly one copy of `O(m, n)`.
    pub fn as_line(&self) -> Option<(i64, i64)> {
        match (self.terms.as_slice(), self.constructions.is_empty()) {
            ([t], true) if t.multiplicity == 1 && t.left.is_line() && t.right.is_line() => {
                Some((t.left.twist, t.right.twist))
            }
            _ => None,
        }
    }

    fn normalize(&mut self) {
        self.terms.retain(|t| t.multiplicity > 0);
        self.terms.sort_by_key(BoxTerm::key);
        let mut merged: Vec<BoxTerm> = Vec::with_capacity(self.terms.len());
        for t in self.terms.drain(..) {
            match merged.last_mut() {
                Some(last) if last.key() == t.key() => last.multiplicity += t.multiplicity,
                _ => merged.push(t),
            }
        }
        self.terms = merged;

        self.constructions.retain(|(k, _)| *k > 0);
        self.constructions.sort_by(|a, b| a.1.cmp(&b.1));
        let mut merged: Vec<(u64, Construction)> = Vec::with_capacity(self.constructions.len());
        for (k, c) in self.constructions.drain(..) {
            match merged.last_mut() {
                Some(last) if last.1 == c => last.0 += k,
                _ => merged.push((k, c)),
            }
        }
        self.constructions = merged;
    }

    pub fn scaled(&self, k: u64) -> Self {
        let mut e = self.clone();
        for t in &mut e.terms {
            t.multiplicity *= k;
        }
        for c in &mut e.constructions {
            c.0 *= k;
        }
        e.normalize();
        e
    }

    pub fn twist(&self, m: i64, n: i64) -> Self {
        let mut e = BundleExpr {
            terms: self
                .terms
                .iter()
                .map(|t| BoxTerm {
                    left: t.left.twisted(m),
                    right: t.right.twisted(n),
                    multiplicity: t.multiplicity,
                })
                .collect(),
            constructions: self
                .constructions
                .iter()
                .map(|(k, c)| (*k, c.twist(m, n)))
                .collect(),
        };
        e.normalize();
        e
    }

    pub fn dual(&self) -> Self {
        let mut e = BundleExpr {
            terms: self
                .terms
                .iter()
                .map(|t| BoxTerm {
                    left: t.left.dual(),
                    right: t.right.dual(),
                    multiplicity: t.multiplicity,
                })
                .collect(),
            constructions: self.constructions.iter().map(|(k, c)| (*k, c.dual())).collect(),
        };
        e.normalize();
        e
    }

    /// Tensor product. At least one side must be in sum form.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        if !self.is_sum_form() && !other.is_sum_form() {
            return Err(Error::Unsupported(
                "tensor product of two declared constructions".into(),
            ));
        }
        let mut terms = Vec::new();
        for a in &self.terms {
            for b in &other.terms {
                let ls = a.left.tensor(&b.left)?;
                let rs = a.right.tensor(&b.right)?;
                for l in &ls {
                    for r in &rs {
                        terms.push(BoxTerm {
                            left: *l,
                            right: *r,
                            multiplicity: a.multiplicity * b.multiplicity,
                        });
                    }
                }
            }
        }
        let mut constructions = Vec::new();
        for (k, c) in &self.constructions {
            for (factor, mult) in other.sum_part_chunks() {
                constructions.push((k * mult, c.tensor(&factor)?));
            }
        }
        for (k, c) in &other.constructions {
            for (factor, mult) in self.sum_part_chunks() {
                constructions.push((k * mult, c.tensor(&factor)?));
            }
        }
        let mut e = BundleExpr { terms, constructions };
        e.normalize();
        Ok(e)
    }

    /// The sum part as a single chunk (it is tensored into a construction's
    /// context as a whole). Empty when there is no sum part.
    fn sum_part_chunks(&self) -> Vec<(BundleExpr, u64)> {
        if self.terms.is_empty() {
            vec![]
        } else {
            vec![(BundleExpr { terms: self.terms.clone(), constructions: vec![] }, 1)]
        }
    }

    pub fn rank(&self) -> Result<u64> {
        let mut r: u64 = self.terms.iter().map(BoxTerm::rank).sum();
        for (k, c) in &self.constructions {
            r += k * c.rank()?;
        }
        Ok(r)
    }
}

impl Add for BundleExpr {
    type Output = BundleExpr;

    fn add(mut self, rhs: BundleExpr) -> BundleExpr {
        self.terms.extend(rhs.terms);
        self.constructions.extend(rhs.constructions);
        self.normalize();
        self
    }
}

impl From<Construction> for BundleExpr {
    fn from(c: Construction) -> Self {
        BundleExpr::construction(c)
    }
}

impl fmt::Display for BoxTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.multiplicity != 1 {
            write!(f, "{}*", self.multiplicity)?;
        }
        write!(f, "{}#{}", self.left, self.right)
    }
}

impl fmt::Display for BundleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for t in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{t}")?;
        }
        for (k, c) in &self.constructions {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if *k != 1 {
                write!(f, "{k}*")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}
