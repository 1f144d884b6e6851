//! Borel–Weil–Bott for `GL_3`: cohomology of irreducible homogeneous bundles on P2
//! and of line bundles on the full flag variety `SL_3 / B`.
//!
//! Weights are triples in the standard coordinates. The shift is `ρ = (2, 1, 0)`.
//! A homogeneous bundle `S^k Ω(t)` on P2 corresponds to the weight `(t - k, k, 0)`
//! and the line bundle `O_F(a, b)` on the flag threefold to `(a + b, b, 0)`.
//! With these conventions `O(t)` has `h^0 = C(t+2, 2)`, `Ω(3)` has `h^0 = 8`
//! and `O_F(1, 1)` has `h^0 = 8`.

use crate::bundles::FactorBundle;
use crate::cohom_vec::{Cohom, FlagCohom, P2Cohom};
use crate::error::{Error, Result};

pub const RHO: [i64; 3] = [2, 1, 0];

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct IntegerWeight(pub [i64; 3]);

impl IntegerWeight {
    pub fn is_dominant(&self) -> bool {
        let w = self.0;
        w[0] >= w[1] && w[1] >= w[2]
    }
}

/// Result of the dotted action `w ↦ σ(w + ρ) - ρ`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DottedAction {
    /// `w + ρ` has a repeated entry: every cohomology group vanishes.
    Singular,
    /// `dominant = sort(w + ρ) - ρ`, reached after `length` transpositions.
    Regular { dominant: IntegerWeight, length: usize },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BottOutcome {
    Acyclic,
    Concentrated { degree: usize, dimension: u64 },
}

pub fn dotted_weyl(w: IntegerWeight) -> DottedAction {
    let mut v = [w.0[0] + RHO[0], w.0[1] + RHO[1], w.0[2] + RHO[2]];
    if v[0] == v[1] || v[1] == v[2] || v[0] == v[2] {
        return DottedAction::Singular;
    }
    let mut length = 0;
    for i in 0..3 {
        for j in i + 1..3 {
            if v[i] < v[j] {
                length += 1;
            }
        }
    }
    v.sort_unstable_by(|a, b| b.cmp(a));
    DottedAction::Regular {
        dominant: IntegerWeight([v[0] - RHO[0], v[1] - RHO[1], v[2] - RHO[2]]),
        length,
    }
}

/// Weyl dimension formula for `GL_3`.
pub fn weyl_dimension(w: IntegerWeight) -> Result<u64> {
    if !w.is_dominant() {
        return Err(Error::NonDominant(w.0));
    }
    let [a, b, c] = w.0;
    let num = (a - b + 1) * (b - c + 1) * (a - c + 2);
    debug_assert_eq!(num % 2, 0);
    Ok((num / 2) as u64)
}

pub fn bott(w: IntegerWeight) -> BottOutcome {
    match dotted_weyl(w) {
        DottedAction::Singular => BottOutcome::Acyclic,
        DottedAction::Regular { dominant, length } => BottOutcome::Concentrated {
            degree: length,
            // sorted weights are dominant by construction
            dimension: weyl_dimension(dominant).expect("sorted weight is dominant"),
        },
    }
}

pub fn factor_weight(f: &FactorBundle) -> IntegerWeight {
    let k = f.sym as i64;
    IntegerWeight([f.twist - k, k, 0])
}

/// `(h^0, h^1, h^2)` of `S^k Ω(t)` on P2.
pub fn cohomology_p2(f: &FactorBundle) -> P2Cohom {
    match bott(factor_weight(f)) {
        BottOutcome::Acyclic => Cohom::zero(),
        BottOutcome::Concentrated { degree, dimension } => Cohom::concentrated(degree, dimension),
    }
}

/// Cohomology of `S_λ Ω (t)` for an arbitrary partition `λ = (l1 ≥ l2 ≥ 0)`.
pub fn cohomology_p2_schur(l1: i64, l2: i64, t: i64) -> Result<P2Cohom> {
    let f = FactorBundle::schur(l1, l2, t)?;
    Ok(cohomology_p2(&f))
}

pub fn flag_line_weight(a: i64, b: i64) -> IntegerWeight {
    IntegerWeight([a + b, b, 0])
}

/// `(h^0, .., h^3)` of `O_F(a, b)` on the flag threefold.
pub fn cohomology_flag_line(a: i64, b: i64) -> FlagCohom {
    match bott(flag_line_weight(a, b)) {
        BottOutcome::Acyclic => Cohom::zero(),
        BottOutcome::Concentrated { degree, dimension } => Cohom::concentrated(degree, dimension),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom2(n: i64) -> u64 {
        if n < 2 {
            0
        } else {
            (n * (n - 1) / 2) as u64
        }
    }

    /// Counts semistandard tableaux of shape `(p, q)` with entries in `1..=3`.
    fn ssyt_count(p: usize, q: usize) -> u64 {
        fn rows(len: usize) -> Vec<Vec<u8>> {
            let mut out = vec![vec![]];
            for _ in 0..len {
                out = out
                    .into_iter()
                    .flat_map(|r: Vec<u8>| {
                        let lo = r.last().copied().unwrap_or(1);
                        (lo..=3).map(move |x| {
                            let mut r = r.clone();
                            r.push(x);
                            r
                        })
                    })
                    .collect();
            }
            out
        }
        let tops = rows(p);
        let bottoms = rows(q);
        let mut n = 0;
        for t in &tops {
            for b in &bottoms {
                if b.iter().zip(t).all(|(x, y)| x > y) {
                    n += 1;
                }
            }
        }
        n
    }

    #[test]
    fn dotted_action_examples() {
        assert_eq!(
            dotted_weyl(IntegerWeight([3, 1, 0])),
            DottedAction::Regular { dominant: IntegerWeight([3, 1, 0]), length: 0 }
        );
        assert_eq!(dotted_weyl(IntegerWeight([-1, 0, 0])), DottedAction::Singular);
        // (-2,0,0) + ρ = (0,1,0) repeats 0, so O(-2) is acyclic.
        assert_eq!(dotted_weyl(IntegerWeight([-2, 0, 0])), DottedAction::Singular);
        assert_eq!(
            dotted_weyl(IntegerWeight([-3, 0, 0])),
            DottedAction::Regular { dominant: IntegerWeight([-1, -1, -1]), length: 2 }
        );
        assert_eq!(
            dotted_weyl(IntegerWeight([-1, 1, 0])),
            DottedAction::Regular { dominant: IntegerWeight([0, 0, 0]), length: 1 }
        );
    }

    #[test]
    fn weyl_dimension_matches_tableaux() {
        assert_eq!(weyl_dimension(IntegerWeight([0, 0, 0])).unwrap(), 1);
        assert_eq!(weyl_dimension(IntegerWeight([1, 0, 0])).unwrap(), 3);
        assert_eq!(weyl_dimension(IntegerWeight([1, 0, -1])).unwrap(), 8);
        assert_eq!(weyl_dimension(IntegerWeight([2, 1, 0])).unwrap(), 8);
        for a in 0..6i64 {
            for b in 0..=a {
                let w = IntegerWeight([a, b, 0]);
                assert_eq!(weyl_dimension(w).unwrap(), ssyt_count(a as usize, b as usize));
                let shifted = IntegerWeight([a - 4, b - 4, -4]);
                assert_eq!(weyl_dimension(shifted).unwrap(), ssyt_count(a as usize, b as usize));
            }
        }
        assert!(weyl_dimension(IntegerWeight([0, 1, 0])).is_err());
    }

    #[test]
    fn p2_anchor_values() {
        assert_eq!(cohomology_p2(&FactorBundle::o(-3)), Cohom([0, 0, 1]));
        assert_eq!(cohomology_p2(&FactorBundle::omega(0)), Cohom([0, 1, 0]));
        assert_eq!(cohomology_p2(&FactorBundle::omega(1)), Cohom([0, 0, 0]));
        assert_eq!(cohomology_p2(&FactorBundle::omega(2)), Cohom([3, 0, 0]));
        assert_eq!(cohomology_p2(&FactorBundle::omega(3)), Cohom([8, 0, 0]));
        assert_eq!(cohomology_p2(&FactorBundle::omega(-2)), Cohom([0, 0, 3]));
    }

    #[test]
    fn line_bundles_are_binomials() {
        for t in -10..10i64 {
            let h = cohomology_p2(&FactorBundle::o(t));
            assert_eq!(h.0[0], binom2(t + 2));
            assert_eq!(h.0[1], 0);
            assert_eq!(h.0[2], binom2(-t - 1));
        }
    }

    /// h^i(Ω(t)) from the Euler sequence 0 → Ω(t) → O(t-1)^3 → O(t) → 0,
    /// using only the closed-form cohomology of line bundles.
    fn omega_by_euler(t: i64) -> [u64; 3] {
        let h0 = |s: i64| binom2(s + 2);
        let h2 = |s: i64| binom2(-s - 1);
        // H^0(O(t-1))^3 → H^0(O(t)) is surjective for t ≥ 1, zero map otherwise.
        let rank0 = if t >= 1 { h0(t) } else { 0 };
        // H^2(O(t-1))^3 → H^2(O(t)) is surjective whenever the target is nonzero.
        let rank2 = h2(t);
        [3 * h0(t - 1) - rank0, h0(t) - rank0, 3 * h2(t - 1) - rank2]
    }

    #[test]
    fn omega_matches_euler_sequence() {
        for t in -8..=8 {
            assert_eq!(cohomology_p2(&FactorBundle::omega(t)).0, omega_by_euler(t), "Ω({t})");
        }
    }

    #[test]
    fn bott_concentration_and_serre_duality() {
        for k in 0..=2u32 {
            for t in -8..=8 {
                let f = FactorBundle { sym: k, twist: t };
                let h = cohomology_p2(&f);
                assert!(h.support_size() <= 1);
                let d = cohomology_p2(&f.dual().twisted(-3));
                assert_eq!(h.0, [d.0[2], d.0[1], d.0[0]], "{f:?}");
            }
        }
    }

    #[test]
    fn flag_lines() {
        assert_eq!(cohomology_flag_line(0, 0), Cohom([1, 0, 0, 0]));
        assert_eq!(cohomology_flag_line(1, 0), Cohom([3, 0, 0, 0]));
        assert_eq!(cohomology_flag_line(0, 1), Cohom([3, 0, 0, 0]));
        assert_eq!(cohomology_flag_line(1, 1), Cohom([8, 0, 0, 0]));
        assert_eq!(cohomology_flag_line(-2, -2), Cohom([0, 0, 0, 1]));
        for a in -4..4 {
            for b in -4..4 {
                let h = cohomology_flag_line(a, b);
                let s = cohomology_flag_line(b, a);
                assert_eq!(h, s);
                let d = cohomology_flag_line(-a - 2, -b - 2);
                assert_eq!(h.0, [d.0[3], d.0[2], d.0[1], d.0[0]]);
            }
        }
    }
}
