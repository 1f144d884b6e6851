//! Intersection theory on P2 × P2: `Q[h1, h2] / (h1³, h2³)`, Chern characters,
//! and Hirzebruch–Riemann–Roch.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::bundles::{BundleExpr, FactorBundle, Slot};
use crate::error::{Error, Result};

pub type Q = Ratio<i128>;

/// `coeff[i][j]` is the coefficient of `h1^i h2^j`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ChowClass {
    pub coeff: [[Q; 3]; 3],
}

/// A class on a single P2: coefficients of `1, h, h²`.
type P2Class = [Q; 3];

fn p2_mul(a: &P2Class, b: &P2Class) -> P2Class {
    let mut c = [Q::zero(), Q::zero(), Q::zero()];
    for i in 0..3 {
        for j in 0..3 - i {
            c[i + j] += a[i] * b[j];
        }
    }
    c
}

fn p2_exp(t: i64) -> P2Class {
    let t = Q::from_integer(t as i128);
    [Q::one(), t, t * t / Q::from_integer(2)]
}

fn p2_sub(a: &P2Class, b: &P2Class) -> P2Class {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn p2_scale(a: &P2Class, k: i128) -> P2Class {
    let k = Q::from_integer(k);
    [a[0] * k, a[1] * k, a[2] * k]
}

/// Chern character of `S^k Ω (t)` on P2.
pub fn ch_factor(f: &FactorBundle) -> [Q; 3] {
    // Euler sequence: ch(Ω) = 3 e^{-h} - 1.
    let omega = p2_sub(&p2_scale(&p2_exp(-1), 3), &p2_exp(0));
    let untwisted = match f.sym {
        0 => p2_exp(0),
        1 => omega,
        // Ω ⊗ Ω = S²Ω ⊕ O(-3)
        2 => p2_sub(&p2_mul(&omega, &omega), &p2_exp(-3)),
        k => unreachable!("S^{k}Ω is outside the factor set"),
    };
    p2_mul(&untwisted, &p2_exp(f.twist))
}

/// `td(P2) = 1 + 3/2 h + h²`.
pub fn td_p2() -> [Q; 3] {
    [Q::one(), Q::new(3, 2), Q::one()]
}

impl ChowClass {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        let mut c = Self::zero();
        c.coeff[0][0] = Q::one();
        c
    }

    /// Pullback product `p1^* a · p2^* b`.
    pub fn outer(a: &[Q; 3], b: &[Q; 3]) -> Self {
        let mut c = Self::zero();
        for (row, x) in c.coeff.iter_mut().zip(a) {
            for (cell, y) in row.iter_mut().zip(b) {
                *cell = *x * *y;
            }
        }
        c
    }

    pub fn td_x() -> Self {
        Self::outer(&td_p2(), &td_p2())
    }

    pub fn scaled(&self, k: i128) -> Self {
        let mut c = self.clone();
        for row in &mut c.coeff {
            for x in row {
                *x *= Q::from_integer(k);
            }
        }
        c
    }

    /// Coefficient of `h1² h2²`.
    pub fn degree(&self) -> Q {
        self.coeff[2][2]
    }

    pub fn rank(&self) -> Q {
        self.coeff[0][0]
    }

    /// Negates the parts of odd total degree (the effect of dualizing on `ch`).
    pub fn odd_negated(&self) -> Self {
        let mut c = self.clone();
        for i in 0..3 {
            for j in 0..3 {
                if (i + j) % 2 == 1 {
                    c.coeff[i][j] = -c.coeff[i][j];
                }
            }
        }
        c
    }
}

impl Add for &ChowClass {
    type Output = ChowClass;
    fn add(self, rhs: &ChowClass) -> ChowClass {
        let mut c = self.clone();
        for i in 0..3 {
            for j in 0..3 {
                c.coeff[i][j] += rhs.coeff[i][j];
            }
        }
        c
    }
}

impl Neg for &ChowClass {
    type Output = ChowClass;
    fn neg(self) -> ChowClass {
        self.scaled(-1)
    }
}

impl Sub for &ChowClass {
    type Output = ChowClass;
    fn sub(self, rhs: &ChowClass) -> ChowClass {
        self + &(-rhs)
    }
}

impl Mul for &ChowClass {
    type Output = ChowClass;
    fn mul(self, rhs: &ChowClass) -> ChowClass {
        let mut c = ChowClass::zero();
        for i1 in 0..3 {
            for j1 in 0..3 {
                if self.coeff[i1][j1].is_zero() {
                    continue;
                }
                for i2 in 0..3 - i1 {
                    for j2 in 0..3 - j1 {
                        c.coeff[i1 + i2][j1 + j2] += self.coeff[i1][j1] * rhs.coeff[i2][j2];
                    }
                }
            }
        }
        c
    }
}

impl fmt::Display for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for i in 0..3 {
            for j in 0..3 {
                let c = self.coeff[i][j];
                if !c.is_zero() {
                    parts.push(format!("({c})h1^{i}h2^{j}"));
                }
            }
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

pub fn ch(e: &BundleExpr) -> Result<ChowClass> {
    let mut total = ChowClass::zero();
    for t in e.terms() {
        let c = ChowClass::outer(&ch_factor(&t.left), &ch_factor(&t.right));
        total = &total + &c.scaled(t.multiplicity as i128);
    }
    for (k, c) in e.constructions() {
        let part = |s: Slot| -> Result<ChowClass> {
            match c.part(s)? {
                Some(p) => ch(&p),
                None => Ok(ChowClass::zero()),
            }
        };
        let v = match c.unknown() {
            Slot::Mid => &part(Slot::Sub)? + &part(Slot::Quot)?,
            Slot::Quot => &part(Slot::Mid)? - &part(Slot::Sub)?,
            Slot::Sub => &part(Slot::Mid)? - &part(Slot::Quot)?,
        };
        total = &total + &v.scaled(*k as i128);
    }
    Ok(total)
}

/// Euler characteristic by Hirzebruch–Riemann–Roch.
pub fn chi(e: &BundleExpr) -> Result<i64> {
    let d = (&ch(e)? * &ChowClass::td_x()).degree();
    if !d.is_integer() {
        return Err(Error::CheckFailed(format!("non-integral Euler characteristic {d} for {e}")));
    }
    Ok(d.to_integer() as i64)
}

/// `4! ·` the leading coefficient of `t ↦ χ(O(t, t))`, recovered from
/// exact values at five points by finite differences.
pub fn degree_of_x() -> i64 {
    let vals: Vec<i128> = (0..5).map(|t| chi(&BundleExpr::line(t, t)).expect("line bundles") as i128).collect();
    // fourth forward difference of a quartic is 4! times its leading coefficient
    let mut d = vals;
    for _ in 0..4 {
        d = d.windows(2).map(|w| w[1] - w[0]).collect();
    }
    d[0] as i64
}
