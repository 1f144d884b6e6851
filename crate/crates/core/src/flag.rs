//! The flag threefold F ⊂ P2 × P2, cut out by the (1,1) form `Σ x_i y_i`.
//!
//! Every bundle here is the restriction of a bundle expression on X. Line
//! bundles go through Borel–Weil–Bott on F directly; everything else goes
//! through `0 → e(-1,-1) → e → e|F → 0`, where multiplication by the form is
//! an explicit matrix on the Čech models of the two factors.

use std::fmt;

use serde::Serialize;

use crate::bundles::{BoxTerm, BundleExpr, FactorBundle, Slot};
use crate::cech::{factor_cohomology, var_mult};
use crate::chow::chi;
use crate::cohom_vec::{CohomVector, FlagCohom};
use crate::cohomology::cohom;
use crate::error::{Error, Result};
use crate::les::{les_chase, LesProblem, RankInfo};
use crate::linalg::{induced_rank, Matrix};
use crate::report::{all_pass, Check};
use crate::weylbott::cohomology_flag_line;

/// `res(lift)`, a bundle on F given by a bundle on X.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct FlagBundle {
    lift: BundleExpr,
}

impl FlagBundle {
    pub fn res(e: BundleExpr) -> Self {
        FlagBundle { lift: e }
    }

    pub fn line(a: i64, b: i64) -> Self {
        Self::res(BundleExpr::line(a, b))
    }

    /// `G1(a,b) = p1^*Ω(1) ⊗ O_F(a,b)`.
    pub fn g1(a: i64, b: i64) -> Self {
        Self::res(BundleExpr::boxed(FactorBundle::omega(1 + a), FactorBundle::o(b)))
    }

    /// `G2(a,b) = p2^*Ω(1) ⊗ O_F(a,b)`.
    pub fn g2(a: i64, b: i64) -> Self {
        Self::res(BundleExpr::boxed(FactorBundle::o(a), FactorBundle::omega(1 + b)))
    }

    pub fn lift(&self) -> &BundleExpr {
        &self.lift
    }

    pub fn twist(&self, a: i64, b: i64) -> Self {
        Self::res(self.lift.twist(a, b))
    }

    pub fn scaled(&self, k: u64) -> Self {
        Self::res(self.lift.scaled(k))
    }

    pub fn tensor(&self, other: &FlagBundle) -> Result<Self> {
        Ok(Self::res(self.lift.tensor(&other.lift)?))
    }

    pub fn rank(&self) -> Result<u64> {
        self.lift.rank()
    }
}

impl std::ops::Add for FlagBundle {
    type Output = FlagBundle;

    fn add(self, rhs: FlagBundle) -> FlagBundle {
        FlagBundle::res(self.lift + rhs.lift)
    }
}

impl fmt::Display for FlagBundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "res({})", self.lift)
    }
}

fn form_matrix(l: &FactorBundle, r: &FactorBundle, i: usize, j: usize) -> Result<Matrix> {
    let mut m: Option<Matrix> = None;
    for v in 0..3 {
        let k = var_mult(v, l, i)?.kron(&var_mult(v, r, j)?);
        match &mut m {
            None => m = Some(k),
            Some(m) => m.add_assign(&k),
        }
    }
    Ok(m.expect("three variables"))
}

/// Rank in each degree of `Σ x_i y_i : H(t(-1,-1)) → H(t)` for one box term.
pub fn form_ranks(t: &BoxTerm) -> Result<[u64; 5]> {
    let (l, r) = (t.left.twisted(-1), t.right.twisted(-1));
    let mut ranks = [0u64; 5];
    for i in 0..3 {
        for j in 0..3 {
            let (sl, sr) = (factor_cohomology(&l, i)?, factor_cohomology(&r, j)?);
            let (dl, dr) = (factor_cohomology(&t.left, i)?, factor_cohomology(&t.right, j)?);
            if sl.dim() * sr.dim() == 0 || dl.dim() * dr.dim() == 0 {
                continue;
            }
            let m = form_matrix(&l, &r, i, j)?;
            let rank = induced_rank(&m, &sl.tensor(&sr), &dl.tensor(&dr)) as u64;
            ranks[i + j] += t.multiplicity * rank;
        }
    }
    Ok(ranks)
}

fn truncate(h: CohomVector) -> Result<FlagCohom> {
    if h.get(4) != 0 {
        return Err(Error::CheckFailed(format!("restriction with h4 = {} on a threefold", h.get(4))));
    }
    Ok(crate::cohom_vec::Cohom([h.0[0], h.0[1], h.0[2], h.0[3]]))
}

fn restriction_problem(sub: CohomVector, mid: CohomVector, ranks: Vec<RankInfo>, generic: bool) -> LesProblem<5> {
    LesProblem {
        unknown: Slot::Quot,
        known: [sub, mid, CohomVector::zero()],
        ranks,
        // F is a threefold
        facts: vec![(4, 0)],
        generic,
    }
}

/// Restriction route for one box term, exact.
fn restrict_term(t: &BoxTerm) -> Result<FlagCohom> {
    let e = BundleExpr::from_terms([t.clone()]);
    let sub = cohom(&e.twist(-1, -1))?;
    let mid = cohom(&e)?;
    let ranks = match form_ranks(t) {
        Ok(r) => r.iter().map(|&r| RankInfo::Known(r)).collect(),
        // no explicit model for a factor: only the zeros are usable
        Err(Error::Unsupported(_)) => vec![],
        Err(e) => return Err(e),
    };
    let sol = les_chase(&restriction_problem(sub, mid, ranks, false))?;
    let h = sol.value().ok_or_else(|| {
        Error::Indeterminate(format!("restriction of {e}: between {} and {}", sol.lower, sol.upper))
    })?;
    truncate(h)
}

/// Restriction of an arbitrary expression: box terms exactly, constructions
/// by the sequence chase on X followed by a chase of the restriction sequence.
pub fn cohom_restriction(e: &BundleExpr) -> Result<FlagCohom> {
    let mut total = FlagCohom::zero();
    for t in e.terms() {
        total += restrict_term(t)?;
    }
    for (k, c) in e.constructions() {
        let single: BundleExpr = c.clone().into();
        let sub = cohom(&single.twist(-1, -1))?;
        let mid = cohom(&single)?;
        let sol = les_chase(&restriction_problem(sub, mid, vec![], c.is_generic()))?;
        let h = sol.value().ok_or_else(|| {
            Error::Indeterminate(format!("restriction of {c}: between {} and {}", sol.lower, sol.upper))
        })?;
        total += truncate(h)?.scaled(*k);
    }
    Ok(total)
}

/// Cohomology on F: line-bundle terms by Borel–Weil–Bott, the rest by restriction.
pub fn cohom_flag(f: &FlagBundle) -> Result<FlagCohom> {
    let mut total = FlagCohom::zero();
    let mut rest = vec![];
    for t in f.lift.terms() {
        if t.left.is_line() && t.right.is_line() {
            total += cohomology_flag_line(t.left.twist, t.right.twist).scaled(t.multiplicity);
        } else {
            rest.push(t.clone());
        }
    }
    let mut other = BundleExpr::from_terms(rest);
    for (k, c) in f.lift.constructions() {
        other = other + BundleExpr::from(c.clone()).scaled(*k);
    }
    Ok(total + cohom_restriction(&other)?)
}

pub fn chi_flag(f: &FlagBundle) -> Result<i64> {
    Ok(chi(&f.lift)? - chi(&f.lift.twist(-1, -1))?)
}

/// Third finite difference of `χ(O_F(t,t))`, i.e. `3! · (leading coefficient)`.
pub fn degree_of_f() -> Result<i64> {
    let c = |t: i64| chi_flag(&FlagBundle::line(t, t));
    Ok(c(3)? - 3 * c(2)? + 3 * c(1)? - c(0)?)
}

pub const FLAG_DEGREE: u64 = 6;

pub fn ulrich_flag_checks(f: &FlagBundle) -> Result<Vec<Check>> {
    let rank = f.rank()?;
    let input = f.to_string();
    let mut checks = vec![];
    for j in 1..=3 {
        let got = cohom_flag(&f.twist(-j, -j))?;
        checks.push(Check::compare(&format!("H(V({}, {})) = 0", -j, -j), &input, FlagCohom::zero(), got));
    }
    checks.push(Check::compare("h0(V) = 6 rank", &input, FLAG_DEGREE * rank, cohom_flag(f)?.get(0)));
    Ok(checks)
}

pub fn is_ulrich_flag(f: &FlagBundle) -> Result<bool> {
    Ok(all_pass(&ulrich_flag_checks(f)?))
}

/// The six numbers read off the E1 table of `A = V(-1,-1)` on F.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct FlagInvariants {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub d: u64,
    pub e: u64,
    pub f: u64,
}

pub fn flag_invariants(v: &FlagBundle) -> Result<FlagInvariants> {
    let a_ = v.twist(-1, -1);
    let h = |x: FlagBundle, i: usize| -> Result<u64> { Ok(cohom_flag(&x)?.get(i)) };
    let with_g1 = a_.tensor(&FlagBundle::g1(0, -1))?;
    let with_g2 = a_.tensor(&FlagBundle::g2(-1, 0))?;
    Ok(FlagInvariants {
        a: h(a_.twist(0, -1), 1)?,
        b: h(a_.twist(-1, 0), 1)?,
        c: h(with_g2.clone(), 1)?,
        d: h(with_g1.clone(), 1)?,
        e: h(with_g1, 2)?,
        f: h(with_g2, 2)?,
    })
}

/// `0 → O_F(0,1)^c ⊕ O_F(1,0)^d → G1(1,1)^b ⊕ G2(1,1)^a → V → 0`.
#[derive(Clone, Debug, Serialize)]
pub struct FlagResolution {
    pub invariants: FlagInvariants,
    pub rank: i64,
    pub sub: FlagBundle,
    pub mid: FlagBundle,
    pub checks: Vec<Check>,
}

impl fmt::Display for FlagResolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = &self.invariants;
        write!(
            f,
            "0 -> O_F(0,1)^{} + O_F(1,0)^{} -> G1(1,1)^{} + G2(1,1)^{} -> V -> 0",
            i.c, i.d, i.b, i.a
        )
    }
}

pub const FLAG_BALANCE_TWISTS: [(i64, i64); 6] = [(0, 0), (1, 0), (0, 1), (1, 1), (-1, 0), (0, -1)];

/// The shape from the four invariants. With `v` the `χ` of the shape is
/// compared against `χ(V(s,t))`; `χ = 6 rank` is always checked.
pub fn resolution_shape_flag(inv: FlagInvariants, v: Option<&FlagBundle>) -> Result<FlagResolution> {
    let sub = FlagBundle::line(0, 1).scaled(inv.c) + FlagBundle::line(1, 0).scaled(inv.d);
    let mid = FlagBundle::g1(1, 1).scaled(inv.b) + FlagBundle::g2(1, 1).scaled(inv.a);
    let rank = 2 * (inv.a + inv.b) as i64 - (inv.c + inv.d) as i64;
    let input = format!("a={}, b={}, c={}, d={}", inv.a, inv.b, inv.c, inv.d);
    let shape_chi = |s: i64, t: i64| -> Result<i64> { Ok(chi_flag(&mid.twist(s, t))? - chi_flag(&sub.twist(s, t))?) };
    let mut checks = vec![Check::compare("rank is positive", &input, true, rank > 0)];
    checks.push(Check::compare("chi = 6 rank", &input, FLAG_DEGREE as i64 * rank, shape_chi(0, 0)?));
    if let Some(v) = v {
        checks.push(Check::compare("rank balance", &input, v.rank()? as i64, rank));
        for (s, t) in FLAG_BALANCE_TWISTS {
            let tw = format!("{input}; twist ({s},{t})");
            checks.push(Check::compare("chi balance", &tw, chi_flag(&v.twist(s, t))?, shape_chi(s, t)?));
        }
    }
    Ok(FlagResolution { invariants: inv, rank, sub, mid, checks })
}
