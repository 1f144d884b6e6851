//! Explicit models of the cohomology groups of `O(t)` and `Ω(t)` on P2 as
//! subquotients of spaces of Čech monomials, together with the matrices of
//! multiplication and of the maps in [`FactorMap`].
//!
//! `H^0(O(t))` has the monomials of degree `t` as basis and `H^2(O(t))` the
//! inverse monomials `x^e` with every `e_i ≤ -1` and `|e| = t`. Multiplication
//! by a monomial shifts exponents and kills whatever leaves the region.
//! `Ω(t)` is modelled through `0 → Ω(t) → O(t-1)^3 → O(t) → 0`.

use std::collections::HashMap;

use crate::bundles::{FactorBundle, FactorMap};
use crate::error::{Error, Result};
use crate::linalg::{kernel, Echelon, Matrix, Subquotient};

pub type Exponent = [i64; 3];

/// Čech basis of `H^j(O(t))`; empty unless `j ∈ {0, 2}`.
pub fn monomials(j: usize, t: i64) -> Vec<Exponent> {
    let mut out = Vec::new();
    match j {
        0 if t >= 0 => {
            for a in (0..=t).rev() {
                for b in (0..=t - a).rev() {
                    out.push([a, b, t - a - b]);
                }
            }
        }
        2 if t <= -3 => {
            for a in (1..=-t - 2).rev() {
                for b in (1..=-t - 1 - a).rev() {
                    out.push([-a, -b, t + a + b]);
                }
            }
        }
        _ => {}
    }
    out
}

fn index_of(basis: &[Exponent]) -> HashMap<Exponent, usize> {
    basis.iter().enumerate().map(|(i, e)| (*e, i)).collect()
}

fn poly_degree(poly: &[([u32; 3], i64)]) -> Result<i64> {
    let mut d = None;
    for (e, _) in poly {
        let de = (e[0] + e[1] + e[2]) as i64;
        if d.is_some_and(|d| d != de) {
            return Err(Error::Unsupported("inhomogeneous polynomial".into()));
        }
        d = Some(de);
    }
    d.ok_or_else(|| Error::Unsupported("zero polynomial has no degree".into()))
}

/// Multiplication by `poly` as a map `H^j(O(t)) → H^j(O(t + deg))`.
pub fn mult_matrix(poly: &[([u32; 3], i64)], j: usize, t: i64) -> Result<Matrix> {
    let d = poly_degree(poly)?;
    let src = monomials(j, t);
    let dst = monomials(j, t + d);
    let idx = index_of(&dst);
    let mut m = Matrix::zeros(dst.len(), src.len());
    for (c, e) in src.iter().enumerate() {
        for (p, coef) in poly {
            let f = [e[0] + p[0] as i64, e[1] + p[1] as i64, e[2] + p[2] as i64];
            if let Some(&r) = idx.get(&f) {
                m.add_at(r, c, *coef);
            }
        }
    }
    Ok(m)
}

fn var(i: usize) -> Vec<([u32; 3], i64)> {
    let mut e = [0; 3];
    e[i] = 1;
    vec![(e, 1)]
}

/// `H^j(O(t-1))^3 → H^j(O(t))`, `(f_0, f_1, f_2) ↦ Σ x_i f_i`.
fn euler_matrix(j: usize, t: i64) -> Matrix {
    let parts: Vec<Matrix> = (0..3).map(|i| mult_matrix(&var(i), j, t - 1).expect("monomial")).collect();
    Matrix::blocks(&[parts], monomials(j, t).len(), monomials(j, t - 1).len())
}

fn block_diag3(m: &Matrix) -> Matrix {
    let z = Matrix::zeros(m.rows, m.cols);
    Matrix::blocks(
        &[
            vec![m.clone(), z.clone(), z.clone()],
            vec![z.clone(), m.clone(), z.clone()],
            vec![z.clone(), z, m.clone()],
        ],
        m.rows,
        m.cols,
    )
}

fn check_supported(f: &FactorBundle) -> Result<()> {
    if f.sym > 1 {
        return Err(Error::Unsupported(format!("explicit cohomology model of {f}")));
    }
    Ok(())
}

/// Size of the ambient space in which `H^j(f)` is modelled.
pub fn ambient_dim(f: &FactorBundle, j: usize) -> Result<usize> {
    check_supported(f)?;
    Ok(match (f.sym, j) {
        (0, _) => monomials(j, f.twist).len(),
        (1, 0) | (1, 2) => 3 * monomials(j, f.twist - 1).len(),
        (1, 1) => monomials(0, f.twist).len(),
        _ => 0,
    })
}

/// `H^j(f)` as a subquotient of its ambient model.
pub fn factor_cohomology(f: &FactorBundle, j: usize) -> Result<Subquotient> {
    check_supported(f)?;
    let t = f.twist;
    Ok(match (f.sym, j) {
        (0, _) => Subquotient::whole(monomials(j, t).len()),
        (1, 0) | (1, 2) => {
            let e = euler_matrix(j, t);
            Subquotient::subspace(e.cols, kernel(&e))
        }
        (1, 1) => {
            let e = euler_matrix(0, t);
            let image = Echelon::span(e.rows, e.columns()).basis();
            Subquotient { ambient: e.rows, u: Subquotient::whole(e.rows).u, w: image }
        }
        _ => Subquotient::whole(0),
    })
}

/// Multiplication by `poly` from `H^j(f)` to `H^j(f(deg))`, on ambient models.
pub fn factor_mult(poly: &[([u32; 3], i64)], f: &FactorBundle, j: usize) -> Result<Matrix> {
    check_supported(f)?;
    let t = f.twist;
    Ok(match (f.sym, j) {
        (0, _) => mult_matrix(poly, j, t)?,
        (1, 0) | (1, 2) => block_diag3(&mult_matrix(poly, j, t - 1)?),
        (1, 1) => mult_matrix(poly, 0, t)?,
        _ => Matrix::zeros(0, 0),
    })
}

/// Multiplication by the variable `x_i`, from `H^j(f)` to `H^j(f(1))`.
pub fn var_mult(i: usize, f: &FactorBundle, j: usize) -> Result<Matrix> {
    factor_mult(&var(i), f, j)
}

/// Target of a factor map applied to `source`.
pub fn map_target(map: &FactorMap, source: &FactorBundle) -> Result<FactorBundle> {
    match (map, source.sym) {
        (FactorMap::Mult(p), 0) => Ok(FactorBundle::o(source.twist + poly_degree(p)?)),
        (FactorMap::Koszul(_), 0) => Ok(FactorBundle::omega(source.twist + 2)),
        (FactorMap::Contract(_), 1) => Ok(FactorBundle::o(source.twist - 1)),
        _ => Err(Error::Unsupported(format!("map {map:?} does not apply to {source}"))),
    }
}

/// Matrix of `map` from `H^j(source)` to `H^j(target)` on ambient models.
pub fn factor_map_matrix(map: &FactorMap, source: &FactorBundle, j: usize) -> Result<Matrix> {
    let target = map_target(map, source)?;
    let (rows, cols) = (ambient_dim(&target, j)?, ambient_dim(source, j)?);
    if rows == 0 || cols == 0 {
        return Ok(Matrix::zeros(rows, cols));
    }
    match map {
        FactorMap::Mult(p) => factor_mult(p, source, j),
        FactorMap::Koszul(c) => {
            // x × c
            let forms: [Vec<([u32; 3], i64)>; 3] = [
                vec![([0, 1, 0], c[2]), ([0, 0, 1], -c[1])],
                vec![([0, 0, 1], c[0]), ([1, 0, 0], -c[2])],
                vec![([1, 0, 0], c[1]), ([0, 1, 0], -c[0])],
            ];
            let t = source.twist;
            let n_src = monomials(j, t).len();
            let n_dst = monomials(j, t + 1).len();
            let grid: Vec<Vec<Matrix>> = forms
                .iter()
                .map(|f| {
                    let f: Vec<_> = f.iter().filter(|(_, k)| *k != 0).cloned().collect();
                    if f.is_empty() {
                        Ok(vec![Matrix::zeros(n_dst, n_src)])
                    } else {
                        Ok(vec![mult_matrix(&f, j, t)?])
                    }
                })
                .collect::<Result<_>>()?;
            Ok(Matrix::blocks(&grid, n_dst, n_src))
        }
        FactorMap::Contract(c) => {
            let n = monomials(j, source.twist - 1).len();
            let grid = vec![c
                .iter()
                .map(|&ci| {
                    let mut m = Matrix::identity(n);
                    for k in 0..n {
                        m.set(k, k, ci);
                    }
                    m
                })
                .collect::<Vec<_>>()];
            Ok(Matrix::blocks(&grid, n, n))
        }
    }
}
