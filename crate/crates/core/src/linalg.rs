//! Exact linear algebra over Q with fraction-free integer elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

pub type Vector = Vec<BigInt>;

/// Dense integer matrix acting on column vectors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<i64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn add_at(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] += v;
    }

    pub fn apply(&self, v: &[BigInt]) -> Vector {
        assert_eq!(v.len(), self.cols);
        let mut out = vec![BigInt::zero(); self.rows];
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, o) in out.iter_mut().enumerate() {
                let a = self.get(r, c);
                if a != 0 {
                    *o += x * a;
                }
            }
        }
        out
    }

    pub fn kron(&self, other: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self.get(i1, j1);
                if a == 0 {
                    continue;
                }
                for i2 in 0..other.rows {
                    for j2 in 0..other.cols {
                        let b = other.get(i2, j2);
                        if b != 0 {
                            m.set(i1 * other.rows + i2, j1 * other.cols + j2, a * b);
                        }
                    }
                }
            }
        }
        m
    }

    /// Accumulates `other` into `self`.
    pub fn add_assign(&mut self, other: &Matrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += b;
        }
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols)
            .map(|c| (0..self.rows).map(|r| BigInt::from(self.get(r, c))).collect())
            .collect()
    }

    /// Block matrix from a grid of equally shaped blocks.
    pub fn blocks(grid: &[Vec<Matrix>], block_rows: usize, block_cols: usize) -> Matrix {
        let nr = grid.len();
        let nc = grid.first().map_or(0, Vec::len);
        let mut m = Matrix::zeros(nr * block_rows, nc * block_cols);
        for (bi, row) in grid.iter().enumerate() {
            for (bj, b) in row.iter().enumerate() {
                assert_eq!((b.rows, b.cols), (block_rows, block_cols));
                for i in 0..block_rows {
                    for j in 0..block_cols {
                        m.set(bi * block_rows + i, bj * block_cols + j, b.get(i, j));
                    }
                }
            }
        }
        m
    }

    pub fn rank(&self) -> usize {
        Echelon::span(self.rows, self.columns()).rank()
    }
}

/// Echelon basis of a subspace of `Q^ambient`, grown one vector at a time.
#[derive(Clone, Debug)]
pub struct Echelon {
    ambient: usize,
    rows: Vec<(usize, Vector)>,
}

fn normalize(v: &mut Vector) {
    let mut g = BigInt::zero();
    for x in v.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
        }
    }
    if g.is_zero() {
        return;
    }
    let lead_negative = v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    if lead_negative {
        g = -g;
    }
    if g != BigInt::from(1) {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
}

impl Echelon {
    pub fn new(ambient: usize) -> Self {
        Echelon { ambient, rows: vec![] }
    }

    pub fn span(ambient: usize, vectors: impl IntoIterator<Item = Vector>) -> Self {
        let mut e = Self::new(ambient);
        for v in vectors {
            e.insert(v);
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> Vec<Vector> {
        self.rows.iter().map(|(_, v)| v.clone()).collect()
    }

    fn reduce(&self, mut v: Vector) -> Vector {
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let a = row[*p].clone();
            let b = v[*p].clone();
            let g = a.gcd(&b);
            let (ca, cb) = (&a / &g, &b / &g);
            for (x, y) in v.iter_mut().zip(row) {
                if y.is_zero() {
                    if !x.is_zero() {
                        *x *= &ca;
                    }
                } else {
                    *x = &*x * &ca - y * &cb;
                }
            }
            normalize(&mut v);
        }
        v
    }

    /// Adds `v` to the span; returns whether it was independent.
    pub fn insert(&mut self, v: Vector) -> bool {
        assert_eq!(v.len(), self.ambient);
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        normalize(&mut v);
        let at = self.rows.partition_point(|(q, _)| *q < p);
        self.rows.insert(at, (p, v));
        true
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.reduce(v.to_vec()).iter().all(Zero::is_zero)
    }
}

pub fn rank_of(ambient: usize, vectors: impl IntoIterator<Item = Vector>) -> usize {
    Echelon::span(ambient, vectors).rank()
}

/// Basis of `{x : A x = 0}`.
pub fn kernel(a: &Matrix) -> Vec<Vector> {
    let (m, n) = (a.rows, a.cols);
    let mut e = Echelon::new(m + n);
    for k in 0..n {
        let mut v: Vector = (0..m).map(|r| BigInt::from(a.get(r, k))).collect();
        v.extend((0..n).map(|j| BigInt::from((j == k) as i64)));
        e.insert(v);
    }
    e.rows.iter().filter(|(p, _)| *p >= m).map(|(_, v)| v[m..].to_vec()).collect()
}

/// The quotient `U / W` of two subspaces `W ⊂ U ⊂ Q^ambient`.
#[derive(Clone, Debug)]
pub struct Subquotient {
    pub ambient: usize,
    pub u: Vec<Vector>,
    pub w: Vec<Vector>,
}

impl Subquotient {
    pub fn whole(ambient: usize) -> Self {
        let u = (0..ambient)
            .map(|i| (0..ambient).map(|j| BigInt::from((i == j) as i64)).collect())
            .collect();
        Subquotient { ambient, u, w: vec![] }
    }

    pub fn subspace(ambient: usize, u: Vec<Vector>) -> Self {
        Subquotient { ambient, u, w: vec![] }
    }

    pub fn dim(&self) -> usize {
        self.u.len() - self.w.len()
    }

    /// Direct sum of `n` copies.
    pub fn copies(&self, n: usize) -> Subquotient {
        let place = |k: usize, v: &Vector| -> Vector {
            let mut out = vec![BigInt::zero(); self.ambient * n];
            out[k * self.ambient..(k + 1) * self.ambient].clone_from_slice(v);
            out
        };
        Subquotient {
            ambient: self.ambient * n,
            u: (0..n).flat_map(|k| self.u.iter().map(move |v| place(k, v))).collect(),
            w: (0..n).flat_map(|k| self.w.iter().map(move |v| place(k, v))).collect(),
        }
    }

    /// Tensor product `(U1 ⊗ U2) / (W1 ⊗ U2 + U1 ⊗ W2)`.
    pub fn tensor(&self, other: &Subquotient) -> Subquotient {
        let kr = |x: &Vector, y: &Vector| -> Vector {
            let mut out = Vec::with_capacity(x.len() * y.len());
            for a in x {
                for b in y {
                    out.push(a * b);
                }
            }
            out
        };
        let ambient = self.ambient * other.ambient;
        let u = self.u.iter().flat_map(|x| other.u.iter().map(move |y| kr(x, y))).collect();
        let w_span = self
            .w
            .iter()
            .flat_map(|x| other.u.iter().map(move |y| kr(x, y)))
            .chain(self.u.iter().flat_map(|x| other.w.iter().map(move |y| kr(x, y))));
        let w = Echelon::span(ambient, w_span).basis();
        Subquotient { ambient, u, w }
    }
}

/// Rank of the map `src → dst` induced by `a` on subquotients.
/// Assumes `a(U_src) ⊂ U_dst` and `a(W_src) ⊂ W_dst`.
pub fn induced_rank(a: &Matrix, src: &Subquotient, dst: &Subquotient) -> usize {
    assert_eq!((a.rows, a.cols), (dst.ambient, src.ambient));
    let mut e = Echelon::span(dst.ambient, dst.w.iter().cloned());
    let base = e.rank();
    for u in &src.u {
        e.insert(a.apply(u));
    }
    e.rank() - base
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> Matrix {
        let mut m = Matrix::zeros(rows.len(), rows[0].len());
        for (i, r) in rows.iter().enumerate() {
            for (j, &v) in r.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    #[test]
    fn rank_and_kernel() {
        let a = mat(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let k = kernel(&a);
        assert_eq!(k.len(), 1);
        assert!(a.apply(&k[0]).iter().all(Zero::is_zero));
        assert_eq!(Matrix::identity(4).rank(), 4);
        assert_eq!(Matrix::zeros(3, 5).rank(), 0);
    }

    #[test]
    fn kron_rank_multiplies() {
        let a = mat(&[&[1, 1], &[1, 1]]);
        let b = mat(&[&[1, 0, 2], &[0, 1, 3]]);
        assert_eq!(a.kron(&b).rank(), a.rank() * b.rank());
    }

    #[test]
    fn quotient_rank() {
        // projection of Q^2 onto Q^2 / <e1>
        let src = Subquotient::whole(2);
        let dst = Subquotient { ambient: 2, u: Subquotient::whole(2).u, w: vec![vec![1.into(), 0.into()]] };
        assert_eq!(induced_rank(&Matrix::identity(2), &src, &dst), 1);
        let t = src.tensor(&dst);
        assert_eq!(t.dim(), 2);
    }
}
