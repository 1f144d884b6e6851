//! Concrete families of Ulrich bundles and the three extension examples.
//!
//! A family member is a cokernel or kernel of an explicit map whose
//! coefficients are drawn from a fixed-seed generator, so every member is
//! reproducible and its cohomology is computed from actual matrix ranks.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{status_of, ulrich_certificate, UlrichCertificate, UlrichProfile};
use crate::bundles::{BundleExpr, Construction, FactorBundle, FactorMap, KnownMap, Side};
use crate::cohomology::{cohom_bounds, ext_dim, ext_dim_p2};
use crate::error::{Error, Result};
use crate::report::{Check, Status};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum FamilyKind {
    E1,
    E2,
    E3,
    E4,
    E5,
    E6,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 6] = [Self::E1, Self::E2, Self::E3, Self::E4, Self::E5, Self::E6];

    fn index(self) -> u64 {
        Self::ALL.iter().position(|k| *k == self).unwrap() as u64 + 1
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "e1" => Ok(Self::E1),
            "e2" => Ok(Self::E2),
            "e3" => Ok(Self::E3),
            "e4" => Ok(Self::E4),
            "e5" => Ok(Self::E5),
            "e6" => Ok(Self::E6),
            _ => Err(Error::UnknownIdentifier(s.into())),
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.index())
    }
}

fn coefficients(rng: &mut ChaCha8Rng) -> [i64; 3] {
    loop {
        let c = [rng.gen_range(-4..=4), rng.gen_range(-4..=4), rng.gen_range(-4..=4)];
        if c != [0, 0, 0] {
            return c;
        }
    }
}

fn matrix(rows: usize, cols: usize, rng: &mut ChaCha8Rng, entry: fn([i64; 3]) -> FactorMap) -> Vec<Vec<FactorMap>> {
    (0..rows).map(|_| (0..cols).map(|_| entry(coefficients(rng))).collect()).collect()
}

/// A member of one of the six rank-`r` families, with map coefficients drawn
/// from a generator seeded by `(kind, r)`.
pub fn family(kind: FamilyKind, r: u64) -> Result<BundleExpr> {
    if r == 0 {
        return Err(Error::Unsupported("family rank must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(1000 * kind.index() + r);
    let n = r as usize;
    let (o, om) = (FactorBundle::o, FactorBundle::omega);
    let line = |m, k, copies: u64| BundleExpr::line(m, k).scaled(copies);
    let c = match kind {
        FamilyKind::E1 => Construction::cokernel(line(-1, 1, r), line(0, 1, 2 * r))
            .with_map(KnownMap { side: Side::Left, entries: matrix(2 * n, n, &mut rng, FactorMap::linear) }),
        FamilyKind::E2 => Construction::cokernel(line(1, -1, r), line(1, 0, 2 * r))
            .with_map(KnownMap { side: Side::Right, entries: matrix(2 * n, n, &mut rng, FactorMap::linear) }),
        FamilyKind::E3 => Construction::kernel(line(1, 0, 2 * r), line(2, 0, r))
            .with_map(KnownMap { side: Side::Left, entries: matrix(n, 2 * n, &mut rng, FactorMap::linear) }),
        FamilyKind::E4 => Construction::kernel(line(0, 1, 2 * r), line(0, 2, r))
            .with_map(KnownMap { side: Side::Right, entries: matrix(n, 2 * n, &mut rng, FactorMap::linear) }),
        FamilyKind::E5 => Construction::cokernel(line(1, 0, r), BundleExpr::term(o(1), om(2), r))
            .with_map(KnownMap { side: Side::Right, entries: matrix(n, n, &mut rng, FactorMap::Koszul) }),
        FamilyKind::E6 => Construction::cokernel(line(0, 1, r), BundleExpr::term(om(2), o(1), r))
            .with_map(KnownMap { side: Side::Left, entries: matrix(n, n, &mut rng, FactorMap::Koszul) }),
    };
    Ok(c.into())
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum Example {
    /// `0 → Ω(2)⊠Ω(3) → V → O(2,0) → 0`
    Aes,
    /// `0 → Ω(2)⊠Ω(3) → V → Ω(3)⊠Ω(2) → 0`
    Aes2,
    /// `0 → O(1)⊠Ω → E → O⊠Ω(2) → 0` for a generic class; `E(1)` is the bundle checked.
    Ab,
}

impl FromStr for Example {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "aes" => Ok(Self::Aes),
            "aes2" => Ok(Self::Aes2),
            "ab" => Ok(Self::Ab),
            _ => Err(Error::UnknownIdentifier(s.into())),
        }
    }
}

impl fmt::Display for Example {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Example::Aes => "aes",
            Example::Aes2 => "aes2",
            Example::Ab => "ab",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ExampleReport {
    pub which: Example,
    pub bundle: BundleExpr,
    /// `dim Ext^1(quotient, sub)`.
    pub ext_space_dim: u64,
    pub certificate: UlrichCertificate,
    pub profile: Option<UlrichProfile>,
    /// Upper bound `h^0(V ⊗ Q^∨) + h^0(V ⊗ S^∨)` for `h^0(V ⊗ V^∨)`.
    pub endomorphism_bound: u64,
    pub checks: Vec<Check>,
}

impl ExampleReport {
    pub fn status(&self) -> Status {
        status_of(&self.checks)
    }
}

/// Builds one of the extension examples and checks what is claimed for it.
pub fn extension_example(which: Example) -> Result<ExampleReport> {
    let (o, om) = (FactorBundle::o, FactorBundle::omega);
    let (sub, quot) = match which {
        Example::Aes => (BundleExpr::boxed(om(2), om(3)), BundleExpr::line(2, 0)),
        Example::Aes2 => (BundleExpr::boxed(om(2), om(3)), BundleExpr::boxed(om(3), om(2))),
        Example::Ab => (BundleExpr::boxed(o(1), om(0)), BundleExpr::boxed(o(0), om(2))),
    };
    let mut c = Construction::extension_decl(sub.clone(), quot.clone());
    c = match which {
        // a nontrivial class kills H^0(V(-2,0))
        Example::Aes => c.with_fact(BundleExpr::line(-2, 0), 0, 0),
        Example::Aes2 => c,
        // for a generic class the first connecting map is an isomorphism
        Example::Ab => c.with_fact(BundleExpr::line(0, 0), 0, 0).with_fact(BundleExpr::line(0, 0), 1, 0).assume_generic(),
    };
    let base: BundleExpr = c.into();
    let bundle = if which == Example::Ab { base.twist(1, 1) } else { base.clone() };

    let ext_space_dim = ext_dim(&quot, &sub, 1)?;
    let certificate = ulrich_certificate(&bundle)?;
    let profile = if certificate.is_ulrich() { Some(UlrichProfile::of(&bundle)?) } else { None };
    let h0_upper = |other: &BundleExpr| -> Result<u64> { Ok(cohom_bounds(&base.tensor(&other.dual())?)?.upper.get(0)) };
    let endomorphism_bound = h0_upper(&quot)? + h0_upper(&sub)?;

    let name = which.to_string();
    let mut checks = vec![];
    let (ext_expected, rank_expected) = match which {
        Example::Aes => (8, 5),
        Example::Aes2 => (27, 8),
        Example::Ab => (9, 4),
    };
    checks.push(Check::compare("dim Ext^1(Q, S)", &name, ext_expected, ext_space_dim));
    checks.push(Check::compare("rank", &name, rank_expected, certificate.rank));
    checks.push(Check::compare("Ulrich", &name, true, certificate.is_ulrich()));
    let (a0, b0) = profile.map(|p| (p.a[0], p.b[0])).unwrap_or((0, 0));
    match which {
        Example::Aes => {
            checks.push(Check::compare("a0", &name, 3, a0));
            checks.push(Check::compare("b0", &name, 9, b0));
        }
        Example::Aes2 => {
            checks.push(Check::compare("a0", &name, 9, a0));
            checks.push(Check::compare("b0", &name, 9, b0));
        }
        Example::Ab => {
            let w = ext_dim_p2(&om(2), &om(0), 1)?;
            checks.push(Check::compare("dim W = Ext^1(Om(2), Om)", &name, 3, w));
            checks.push(Check::compare("a0 and b0 nonzero", &name, true, a0 != 0 && b0 != 0));
        }
    }
    checks.push(Check::compare("h0(V (x) V^) <= 1", &name, 1, endomorphism_bound));
    Ok(ExampleReport { which, bundle, ext_space_dim, certificate, profile, endomorphism_bound, checks })
}
