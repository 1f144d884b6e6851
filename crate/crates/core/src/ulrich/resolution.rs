//! The two line-bundle resolutions an Ulrich bundle is forced to have.
//!
//! Layer multiplicities come from the profile. In the outermost layers the
//! `a2` copies sit on `O(0,-1)` (resp. `O(3,2)`) and the `b2` copies on
//! `O(-1,0)` (resp. `O(2,3)`): this is what the Koszul resolutions of
//! `O(2,0)` and of `Ω(3) ⊠ Ω(2)` look like, and the χ balance rejects the
//! other placement.

use std::fmt;

use serde::Serialize;

use super::{status_of, UlrichProfile, DEGREE};
use crate::bundles::BundleExpr;
use crate::chow::chi;
use crate::error::{Error, Result};
use crate::report::{Check, Status};

/// A direct sum of line bundles `O(m,n)^k`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Layer(pub Vec<((i64, i64), u64)>);

fn binom2(t: i64) -> i64 {
    (t + 2) * (t + 1) / 2
}

fn line_chi(m: i64, n: i64) -> i64 {
    binom2(m) * binom2(n)
}

impl Layer {
    pub fn rank(&self) -> u64 {
        self.0.iter().map(|(_, k)| k).sum()
    }

    pub fn chi(&self, s: i64, t: i64) -> i64 {
        self.0.iter().map(|&((m, n), k)| k as i64 * line_chi(m + s, n + t)).sum()
    }

    /// `h^0` of the layer; line bundles with a negative degree contribute nothing.
    pub fn h0(&self) -> u64 {
        self.0
            .iter()
            .filter(|((m, n), _)| *m >= 0 && *n >= 0)
            .map(|&((m, n), k)| k * line_chi(m, n) as u64)
            .sum()
    }

    pub fn to_expr(&self) -> BundleExpr {
        self.0
            .iter()
            .filter(|(_, k)| *k > 0)
            .fold(BundleExpr::zero(), |acc, &((m, n), k)| acc + BundleExpr::line(m, n).scaled(k))
    }
}

impl fmt::Display for Layer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .filter(|(_, k)| *k > 0)
            .map(|((m, n), k)| format!("O({m},{n})^{k}"))
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// `0 → L2 → L1 → L0 → V → 0` and `0 → V → R0 → R1 → R2 → 0`, stored as
/// `left = [L2, L1, L0]` and `right = [R0, R1, R2]`.
#[derive(Clone, Debug, Serialize)]
pub struct ResolutionShape {
    pub profile: UlrichProfile,
    pub left: [Layer; 3],
    pub right: [Layer; 3],
    pub checks: Vec<Check>,
}

impl ResolutionShape {
    pub fn status(&self) -> Status {
        status_of(&self.checks)
    }

    fn left_chi(&self, s: i64, t: i64) -> i64 {
        self.left[2].chi(s, t) - self.left[1].chi(s, t) + self.left[0].chi(s, t)
    }

    fn right_chi(&self, s: i64, t: i64) -> i64 {
        self.right[0].chi(s, t) - self.right[1].chi(s, t) + self.right[2].chi(s, t)
    }
}

impl fmt::Display for ResolutionShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [l2, l1, l0] = &self.left;
        let [r0, r1, r2] = &self.right;
        writeln!(f, "0 -> {l2} -> {l1} -> {l0} -> V -> 0")?;
        write!(f, "0 -> V -> {r0} -> {r1} -> {r2} -> 0")
    }
}

pub const BALANCE_TWISTS: [(i64, i64); 12] = [
    (0, 0),
    (1, 0),
    (0, 1),
    (1, 1),
    (-1, 0),
    (0, -1),
    (-1, -1),
    (2, 0),
    (0, 2),
    (-2, -1),
    (-1, -2),
    (2, 2),
];

/// Builds both shapes and checks rank, `χ` and `h^0` balances. If `v` is
/// given the `χ` of each layer complex is also compared with `χ(V(s,t))`.
pub fn resolution_shape(p: &UlrichProfile, v: Option<&BundleExpr>) -> Result<ResolutionShape> {
    let bad: Vec<String> = p.invariant_checks().iter().filter(|c| !c.passed()).map(|c| c.to_string()).collect();
    if !bad.is_empty() {
        return Err(Error::CheckFailed(format!("inconsistent profile: {}", bad.join("; "))));
    }
    let (a, b) = (p.a, p.b);
    let mid = 3 * a[2] + 3 * b[2];
    let left = [
        Layer(vec![((-1, 0), b[2]), ((0, -1), a[2])]),
        Layer(vec![((-1, 1), a[1]), ((0, 0), mid), ((1, -1), b[1])]),
        Layer(vec![((1, 0), a[0]), ((0, 1), b[0])]),
    ];
    let right = [
        Layer(vec![((1, 2), b[4]), ((2, 1), a[4])]),
        Layer(vec![((1, 3), a[3]), ((2, 2), mid), ((3, 1), b[3])]),
        Layer(vec![((2, 3), b[2]), ((3, 2), a[2])]),
    ];
    let mut shape = ResolutionShape { profile: *p, left, right, checks: vec![] };
    let input = p.to_string();
    let r = p.rank as i64;
    let mut checks = vec![
        Check::compare(
            "left rank balance",
            &input,
            r,
            shape.left[0].rank() as i64 - shape.left[1].rank() as i64 + shape.left[2].rank() as i64,
        ),
        Check::compare(
            "right rank balance",
            &input,
            r,
            shape.right[0].rank() as i64 - shape.right[1].rank() as i64 + shape.right[2].rank() as i64,
        ),
        Check::compare(
            "h0 balance",
            &input,
            (DEGREE * p.rank) as i64,
            shape.left[0].h0() as i64 - shape.left[1].h0() as i64 + shape.left[2].h0() as i64,
        ),
        Check::compare("a0 or b0 nonzero", &input, true, a[0] != 0 || b[0] != 0),
        Check::compare("a4 or b4 nonzero", &input, true, a[4] != 0 || b[4] != 0),
    ];
    for (s, t) in BALANCE_TWISTS {
        let tw = format!("{input}; twist ({s},{t})");
        checks.push(Check::compare("chi balance, left vs right", &tw, shape.left_chi(s, t), shape.right_chi(s, t)));
        if let Some(v) = v {
            let want = chi(&v.twist(s, t))?;
            checks.push(Check::compare("chi balance, left vs V", &tw, want, shape.left_chi(s, t)));
        }
    }
    shape.checks = checks;
    Ok(shape)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundles::parse;

    #[test]
    fn omega_box_layers_match_koszul_product() {
        // tensor of 0 → O → O(1)^3 → Ω(3) → 0 and 0 → O(-1) → O^3 → Ω(2) → 0
        let v = parse("Om(3)#Om(2)").unwrap();
        let p = UlrichProfile::new(4, [9, 0, 1, 0, 9], [0, 3, 0, 3, 0]).unwrap();
        let s = resolution_shape(&p, Some(&v)).unwrap();
        assert_eq!(s.left[0].to_expr(), BundleExpr::line(0, -1));
        assert_eq!(s.left[1].to_expr(), BundleExpr::line(0, 0).scaled(3) + BundleExpr::line(1, -1).scaled(3));
        assert_eq!(s.left[2].to_expr(), BundleExpr::line(1, 0).scaled(9));
        assert_eq!(s.right[2].to_expr(), BundleExpr::line(3, 2));
        assert_eq!(s.status(), Status::Pass, "{:?}", s.checks);
    }

    #[test]
    fn printed_outer_layer_breaks_chi() {
        // O(-1,0) in place of O(0,-1): χ at twist (0,1) comes out one short
        let s = resolution_shape(&UlrichProfile::new(4, [9, 0, 1, 0, 9], [0, 3, 0, 3, 0]).unwrap(), None).unwrap();
        let mut wrong = s.left.clone();
        wrong[0] = Layer(vec![((-1, 0), 1)]);
        let chi_wrong = wrong[0].chi(0, 1) - wrong[1].chi(0, 1) + wrong[2].chi(0, 1);
        assert_eq!(chi_wrong, 63);
        assert_eq!(s.left_chi(0, 1), 64);
        assert_eq!(chi(&parse("Om(3)#Om(2)").unwrap().twist(0, 1)).unwrap(), 64);
    }

    #[test]
    fn line_bundle_layers_are_koszul() {
        let v = parse("O(2,0)").unwrap();
        let p = UlrichProfile::new(1, [3, 0, 0, 0, 3], [0, 0, 1, 0, 0]).unwrap();
        let s = resolution_shape(&p, Some(&v)).unwrap();
        assert_eq!(s.to_string(), "0 -> O(-1,0)^1 -> O(0,0)^3 -> O(1,0)^3 -> V -> 0\n0 -> V -> O(2,1)^3 -> O(2,2)^3 -> O(2,3)^1 -> 0");
        assert_eq!(s.status(), Status::Pass);
    }

    #[test]
    fn inconsistent_profile_is_an_error() {
        let p = UlrichProfile { rank: 3, a: [9, 0, 1, 0, 9], b: [0, 3, 0, 3, 0] };
        assert!(matches!(resolution_shape(&p, None), Err(Error::CheckFailed(_))));
    }

    #[test]
    fn h0_counts_only_effective_lines() {
        let l = Layer(vec![((1, 0), 2), ((-1, 1), 5), ((0, 0), 1)]);
        assert_eq!(l.h0(), 7);
        assert_eq!(l.rank(), 8);
    }
}
