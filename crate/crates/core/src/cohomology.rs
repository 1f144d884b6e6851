//! Cohomology of bundle expressions on P2 × P2: Künneth over the
//! Borel–Weil–Bott factor engine, and a sequence chase for constructions.

use rayon::prelude::*;
use serde::Serialize;

use crate::bundles::{BoxTerm, BundleExpr, Construction, KnownMap, Side, Slot};
use crate::cech::{factor_cohomology, factor_map_matrix, map_target};
use crate::cohom_vec::{kunneth, Cohom, CohomVector, P2Cohom};
use crate::error::{Error, Result};
use crate::les::{les_chase, LesProblem, LesSolution, RankInfo};
use crate::linalg::{induced_rank, Matrix};
use crate::weylbott::cohomology_p2;

pub fn cohom_term(t: &BoxTerm) -> CohomVector {
    kunneth(cohomology_p2(&t.left), cohomology_p2(&t.right)).scaled(t.multiplicity)
}

/// Cohomology of `e`, or `Indeterminate` if a construction leaves a free rank.
pub fn cohom(e: &BundleExpr) -> Result<CohomVector> {
    let b = cohom_bounds(e)?;
    b.value().ok_or_else(|| {
        let free: Vec<String> = b.free.iter().map(|f| format!("{} ∈ [{}, {}]", f.map, f.lo, f.hi)).collect();
        Error::Indeterminate(format!(
            "{e}: between {} and {}; free ranks: {}",
            b.lower,
            b.upper,
            free.join(", ")
        ))
    })
}

/// Lower and upper bounds for every `h^i(e)`, with the ranks left free.
pub fn cohom_bounds(e: &BundleExpr) -> Result<LesSolution<5>> {
    let mut fixed = CohomVector::zero();
    for t in e.terms() {
        fixed += cohom_term(t);
    }
    let mut sol = LesSolution { lower: fixed, upper: fixed, free: vec![] };
    for (k, c) in e.constructions() {
        let s = construction_bounds(c)?;
        sol.lower += s.lower.scaled(*k);
        sol.upper += s.upper.scaled(*k);
        sol.free.extend(s.free);
    }
    Ok(sol)
}

pub fn construction_bounds(c: &Construction) -> Result<LesSolution<5>> {
    let unknown = c.unknown();
    let mut known = [CohomVector::zero(); 3];
    for slot in [Slot::Sub, Slot::Mid, Slot::Quot] {
        if slot == unknown {
            continue;
        }
        let part = c.part(slot)?.expect("known slot present");
        known[slot.index()] = cohom(&part)?;
    }
    let mut ranks = vec![];
    if unknown == Slot::Mid && c.is_nontrivial() {
        let s = c.base_part(Slot::Sub).expect("sub");
        let q = c.base_part(Slot::Quot).expect("quot");
        let e1 = ext_dim(q, s, 1)?;
        if e1 == 0 {
            return Err(Error::InconsistentFacts(format!(
                "nontrivial extension declared but Ext^1({q}, {s}) = 0"
            )));
        }
        if c.connecting_map_nonzero() {
            ranks.push(RankInfo::AtLeast(1));
        }
    }
    if let Some(map) = c.active_map() {
        ranks = map_ranks(c, map)?.into_iter().map(RankInfo::Known).collect();
    }
    let p = LesProblem { unknown, known, ranks, facts: c.active_facts(), generic: c.is_generic() };
    les_chase(&p)
}

fn single_term(e: &BundleExpr) -> Result<&BoxTerm> {
    match (e.terms(), e.is_sum_form()) {
        ([t], true) => Ok(t),
        _ => Err(Error::Unsupported(format!("explicit map on {e}, expected a single box term"))),
    }
}

/// Rank of `Φ` on `H^j` of the factor `a` (with `Φ` applied copywise).
fn factor_matrix_rank(map: &KnownMap, a: &crate::bundles::FactorBundle, j: usize) -> Result<u64> {
    let (rows, cols) = (map.rows(), map.cols());
    let b = map_target(&map.entries[0][0], a)?;
    for row in &map.entries {
        for entry in row {
            if map_target(entry, a)? != b {
                return Err(Error::Unsupported("explicit map with mixed targets".into()));
            }
        }
    }
    let src = factor_cohomology(a, j)?;
    let dst = factor_cohomology(&b, j)?;
    if src.dim() == 0 || dst.dim() == 0 {
        return Ok(0);
    }
    let grid: Vec<Vec<Matrix>> = map
        .entries
        .iter()
        .map(|row| row.iter().map(|e| factor_map_matrix(e, a, j)).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    let big = Matrix::blocks(&grid, dst.ambient, src.ambient);
    Ok(induced_rank(&big, &src.copies(cols), &dst.copies(rows)) as u64)
}

/// Ranks in each degree of `id ⊠ Φ` between the two known parts.
fn map_ranks(c: &Construction, map: &KnownMap) -> Result<Vec<u64>> {
    let (src_slot, dst_slot) = match c.unknown() {
        Slot::Quot => (Slot::Sub, Slot::Mid),
        Slot::Sub => (Slot::Mid, Slot::Quot),
        Slot::Mid => return Err(Error::Unsupported("explicit map on an extension".into())),
    };
    let src = single_term(c.base_part(src_slot).expect("known"))?;
    let dst = single_term(c.base_part(dst_slot).expect("known"))?;
    if src.multiplicity as usize != map.cols() || dst.multiplicity as usize != map.rows() {
        return Err(Error::Unsupported("explicit map shape does not match the sequence".into()));
    }
    let (fixed, moving) = match map.side {
        Side::Left => (src.right, src.left),
        Side::Right => (src.left, src.right),
    };
    let mut ranks = vec![0u64; 5];
    for ct in c.context().terms() {
        let (c_fixed, c_moving) = match map.side {
            Side::Left => (ct.right, ct.left),
            Side::Right => (ct.left, ct.right),
        };
        let a = moving.twisted(c_moving.twist);
        let per_degree: Vec<u64> = (0..3).map(|j| factor_matrix_rank(map, &a, j)).collect::<Result<_>>()?;
        for piece in fixed.tensor(&c_fixed)? {
            let h = cohomology_p2(&piece);
            for i in 0..3 {
                for j in 0..3 {
                    ranks[i + j] += ct.multiplicity * h.0[i] * per_degree[j];
                }
            }
        }
    }
    Ok(ranks)
}

/// `dim Ext^k(a, b) = h^k(a^∨ ⊗ b)`.
pub fn ext_dim(a: &BundleExpr, b: &BundleExpr, k: usize) -> Result<u64> {
    Ok(cohom(&a.dual().tensor(b)?)?.0[k])
}

/// `dim Ext^k(a, b)` for two factors on a single P2.
pub fn ext_dim_p2(a: &crate::bundles::FactorBundle, b: &crate::bundles::FactorBundle, k: usize) -> Result<u64> {
    let mut h = P2Cohom::zero();
    for f in a.dual().tensor(b)? {
        h += cohomology_p2(&f);
    }
    Ok(h.0[k])
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct Window {
    pub m: (i64, i64),
    pub n: (i64, i64),
}

impl Window {
    pub fn square(lo: i64, hi: i64) -> Self {
        Window { m: (lo, hi), n: (lo, hi) }
    }

    pub fn points(&self) -> Vec<(i64, i64)> {
        (self.m.0..=self.m.1).flat_map(|m| (self.n.0..=self.n.1).map(move |n| (m, n))).collect()
    }
}

impl Default for Window {
    fn default() -> Self {
        Window::square(-6, 3)
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CohomTable {
    pub window: Window,
    pub entries: Vec<((i64, i64), CohomVector)>,
}

impl CohomTable {
    pub fn get(&self, m: i64, n: i64) -> Option<CohomVector> {
        self.entries.iter().find(|(p, _)| *p == (m, n)).map(|(_, h)| *h)
    }
}

/// `cohom(e(m, n))` over a window, evaluated in parallel.
pub fn cohom_table(e: &BundleExpr, window: Window) -> Result<CohomTable> {
    let entries = window
        .points()
        .into_par_iter()
        .map(|(m, n)| cohom(&e.twist(m, n)).map(|h| ((m, n), h)))
        .collect::<Result<Vec<_>>>()?;
    Ok(CohomTable { window, entries })
}

/// `h^i(e) = h^{4-i}(e^∨(-3, -3))` for all `i`.
pub fn serre_dual_check(e: &BundleExpr) -> Result<bool> {
    let h = cohom(e)?;
    let d = cohom(&e.dual().twist(-3, -3))?;
    Ok((0..5).all(|i| h.0[i] == d.0[4 - i]))
}

pub fn euler(h: &Cohom<5>) -> i64 {
    h.euler()
}
