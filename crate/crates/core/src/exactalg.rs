//! Exact integer and rational linear algebra.
//!
//! Everything here works over arbitrary-precision integers or rationals:
//! determinants, Smith normal form, Sylvester inertia, Kronecker products and
//! the symmetric `UᵀDU` factorization used by short-vector enumeration.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("entry count {got} does not match shape {rows}x{cols}")]
    BadShape { rows: usize, cols: usize, got: usize },
    #[error("ragged rows: row {row} has {got} entries, expected {expected}")]
    Ragged { row: usize, expected: usize, got: usize },
    #[error("incompatible shapes {0:?} and {1:?}")]
    ShapeMismatch((usize, usize), (usize, usize)),
    #[error("matrix is not positive-definite")]
    NotPositiveDefinite,
}

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self, MatrixError> {
        if data.len() != rows * cols {
            return Err(MatrixError::BadShape { rows, cols, got: data.len() });
        }
        Ok(IntMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from nested rows. An empty slice gives the 0x0 matrix.
    pub fn from_rows<T>(rows: &[Vec<T>]) -> Result<Self, MatrixError>
    where
        T: Clone + Into<BigInt>,
    {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(MatrixError::Ragged { row: i, expected: cols, got: row.len() });
            }
            data.extend(row.iter().cloned().map(Into::into));
        }
        Ok(IntMatrix { rows: rows.len(), cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        IntMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn transpose(&self) -> IntMatrix {
        IntMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix, MatrixError> {
        if self.cols != other.rows {
            return Err(MatrixError::ShapeMismatch(
                (self.rows, self.cols),
                (other.rows, other.cols),
            ));
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// `self · M · selfᵀ`, i.e. the Gram matrix of the rows of `self` under `M`.
    pub fn congruence(&self, m: &IntMatrix) -> Result<IntMatrix, MatrixError> {
        self.mul(m)?.mul(&self.transpose())
    }

    pub fn scale(&self, k: &BigInt) -> IntMatrix {
        IntMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * k).collect() }
    }

    /// gcd of all entries (0 for the zero matrix).
    pub fn content(&self) -> BigInt {
        self.data.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
    }

    fn require_square(&self) -> Result<usize, MatrixError> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(MatrixError::NotSquare { rows: self.rows, cols: self.cols })
        }
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries((0..self.rows).map(|i| self.row(i))).finish()
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Dense row-major matrix of rationals, always in canonical form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, data: vec![BigRational::zero(); rows * cols] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigRational) {
        self.data[i * self.cols + j] = value;
    }
}

impl From<&IntMatrix> for RatMatrix {
    fn from(m: &IntMatrix) -> Self {
        RatMatrix {
            rows: m.rows,
            cols: m.cols,
            data: m.data.iter().map(|x| BigRational::from_integer(x.clone())).collect(),
        }
    }
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn det(m: &IntMatrix) -> Result<BigInt, MatrixError> {
    let n = m.require_square()?;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = m.to_rows();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    Ok(sign * &a[n - 1][n - 1])
}

/// Invariant factors `s₁ | s₂ | … | s_n` of a square integer matrix.
///
/// Unit factors are kept, so the list always has length `n`. Zeros (for a
/// singular matrix) come last.
pub fn smith_normal_form(m: &IntMatrix) -> Result<Vec<BigInt>, MatrixError> {
    m.require_square()?;
    Ok(invariant_factors(m))
}

/// Invariant factors of a matrix of any shape; the list has length
/// `min(rows, cols)`.
pub fn invariant_factors(m: &IntMatrix) -> Vec<BigInt> {
    let k = m.rows.min(m.cols);
    if k == 0 {
        return Vec::new();
    }
    // For a nonsingular square matrix the column lattice contains |det|·Zⁿ, so
    // the whole reduction can run modulo |det| without changing the cokernel.
    let modulus = if m.is_square() {
        det(m).ok().filter(|d| !d.is_zero()).map(|d| d.abs())
    } else {
        None
    };
    let mut a = m.to_rows();
    if let Some(d) = &modulus {
        for row in &mut a {
            for x in row.iter_mut() {
                *x = sym_mod(x, d);
            }
        }
    }
    let mut diag = diagonalize(&mut a, modulus.as_ref());
    if let Some(d) = &modulus {
        for x in &mut diag {
            *x = x.gcd(d);
        }
    }
    normalize_chain(&mut diag);
    diag
}

/// Representative of `x mod d` in `(-d/2, d/2]`.
fn sym_mod(x: &BigInt, d: &BigInt) -> BigInt {
    let r = x.mod_floor(d);
    if &r * 2 > *d {
        r - d
    } else {
        r
    }
}

/// Euclidean row/column reduction to diagonal form. Returns the absolute
/// diagonal (not yet a divisibility chain).
fn diagonalize(a: &mut [Vec<BigInt>], modulus: Option<&BigInt>) -> Vec<BigInt> {
    let rows = a.len();
    let cols = a[0].len();
    let k = rows.min(cols);
    let reduce = |x: BigInt| match modulus {
        Some(d) => sym_mod(&x, d),
        None => x,
    };
    let mut diag = vec![BigInt::zero(); k];
    for t in 0..k {
        loop {
            // smallest nonzero entry of the trailing block becomes the pivot
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if a[i][j].is_zero() {
                        continue;
                    }
                    if best.map_or(true, |(bi, bj)| a[i][j].magnitude() < a[bi][bj].magnitude()) {
                        best = Some((i, j));
                        if a[i][j].magnitude().is_one() {
                            break;
                        }
                    }
                }
                if best.is_some_and(|(bi, bj)| a[bi][bj].magnitude().is_one()) {
                    break;
                }
            }
            let Some((pi, pj)) = best else {
                return diag;
            };
            a.swap(t, pi);
            if pj != t {
                for row in a.iter_mut() {
                    row.swap(t, pj);
                }
            }
            let pivot = a[t][t].clone();
            let mut clean = true;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&pivot);
                if !q.is_zero() {
                    let (top, rest) = a.split_at_mut(i);
                    let src = &top[t];
                    let dst = &mut rest[0];
                    for j in t..cols {
                        if !src[j].is_zero() {
                            dst[j] = reduce(&dst[j] - &q * &src[j]);
                        }
                    }
                }
                if !a[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&pivot);
                if !q.is_zero() {
                    for row in a.iter_mut().skip(t) {
                        if !row[t].is_zero() {
                            let v = &row[j] - &q * &row[t];
                            row[j] = reduce(v);
                        }
                    }
                }
                if !a[t][j].is_zero() {
                    clean = false;
                }
            }
            if clean {
                diag[t] = a[t][t].abs();
                break;
            }
        }
    }
    diag
}

/// Turns a diagonal into the divisibility chain of the same abelian group by
/// pairwise `(a, b) ↦ (gcd, lcm)` moves. Zeros migrate to the end.
fn normalize_chain(d: &mut [BigInt]) {
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            let g = d[i].gcd(&d[j]);
            let l = d[i].lcm(&d[j]);
            d[i] = g;
            d[j] = l;
        }
    }
}

/// Rank over ℚ.
pub fn rank(m: &IntMatrix) -> usize {
    invariant_factors(m).iter().filter(|x| !x.is_zero()).count()
}

/// Basis of the ℤ-span of the rows of `m`, in row echelon form with positive
/// pivots.
pub fn row_basis(m: &IntMatrix) -> IntMatrix {
    let mut a = m.to_rows();
    let cols = m.cols;
    let mut basis: Vec<Vec<BigInt>> = Vec::new();
    for c in 0..cols {
        loop {
            let nz: Vec<usize> = (0..a.len()).filter(|&i| !a[i][c].is_zero()).collect();
            if nz.is_empty() {
                break;
            }
            let p = *nz.iter().min_by_key(|&&i| a[i][c].magnitude().clone()).unwrap();
            for &i in &nz {
                if i == p {
                    continue;
                }
                let q = a[i][c].div_floor(&a[p][c]);
                let src = a[p].clone();
                for j in c..cols {
                    let v = &a[i][j] - &q * &src[j];
                    a[i][j] = v;
                }
            }
            if nz.len() == 1 || (0..a.len()).all(|i| i == p || a[i][c].is_zero()) {
                let mut row = a.swap_remove(p);
                if row[c].is_negative() {
                    for x in &mut row {
                        *x = -&*x;
                    }
                }
                basis.push(row);
                break;
            }
        }
        a.retain(|r| r.iter().any(|x| !x.is_zero()));
    }
    let rows = basis.len();
    IntMatrix::new(rows, cols, basis.into_iter().flatten().collect()).expect("echelon rows have uniform width")
}

/// Sylvester inertia `(n₊, n₋, n₀)` of a symmetric matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

/// Inertia by symmetric elimination over ℚ. When every remaining diagonal
/// entry vanishes, a congruence `eᵢ ← eᵢ + eⱼ` with `aᵢⱼ ≠ 0` creates a
/// nonzero pivot.
pub fn inertia(m: &IntMatrix) -> Result<Inertia, MatrixError> {
    let n = m.require_square()?;
    if !m.is_symmetric() {
        return Err(MatrixError::NotSymmetric);
    }
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| m.row(i).iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect();
    let mut out = Inertia { positive: 0, negative: 0, zero: 0 };
    let mut active: Vec<usize> = (0..n).collect();
    while !active.is_empty() {
        let pivot = active.iter().position(|&i| !a[i][i].is_zero());
        let pivot = match pivot {
            Some(p) => p,
            None => {
                let pair = active.iter().enumerate().find_map(|(pi, &i)| {
                    active.iter().find(|&&j| j != i && !a[i][j].is_zero()).map(|&j| (pi, i, j))
                });
                let Some((pi, i, j)) = pair else {
                    out.zero += active.len();
                    break;
                };
                // row/col i += row/col j
                for &k in &active {
                    let v = &a[i][k] + &a[j][k];
                    a[i][k] = v;
                }
                for &k in &active {
                    let v = &a[k][i] + &a[k][j];
                    a[k][i] = v;
                }
                pi
            }
        };
        let p = active.swap_remove(pivot);
        let d = a[p][p].clone();
        if d.is_positive() {
            out.positive += 1;
        } else {
            out.negative += 1;
        }
        for &i in &active {
            if a[i][p].is_zero() {
                continue;
            }
            let f = &a[i][p] / &d;
            for &j in &active {
                if !a[p][j].is_zero() {
                    let v = &a[i][j] - &f * &a[p][j];
                    a[i][j] = v;
                }
            }
        }
    }
    Ok(out)
}

/// Kronecker product, `(A⊗B)[(i,k),(j,l)] = A[i,j]·B[k,l]`.
pub fn kronecker(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    IntMatrix::from_fn(a.rows * b.rows, a.cols * b.cols, |r, c| {
        let (i, k) = (r / b.rows, r % b.rows);
        let (j, l) = (c / b.cols, c % b.cols);
        a.get(i, j) * b.get(k, l)
    })
}

/// Block-diagonal sum.
pub fn block_diagonal(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    IntMatrix::from_fn(a.rows + b.rows, a.cols + b.cols, |i, j| {
        match (i < a.rows, j < a.cols) {
            (true, true) => a.get(i, j).clone(),
            (false, false) => b.get(i - a.rows, j - a.cols).clone(),
            _ => BigInt::zero(),
        }
    })
}

/// Factorization `G = Uᵀ·diag(d)·U` of a positive-definite matrix with `U`
/// unit upper-triangular, so that
/// `xᵀGx = Σᵢ dᵢ (xᵢ + Σ_{j>i} uᵢⱼ xⱼ)²`.
#[derive(Clone, Debug)]
pub struct SymmetricFactor {
    pub diag: Vec<BigRational>,
    pub upper: RatMatrix,
}

pub fn positive_definite_factor(m: &IntMatrix) -> Result<SymmetricFactor, MatrixError> {
    let n = m.require_square()?;
    if !m.is_symmetric() {
        return Err(MatrixError::NotSymmetric);
    }
    let mut q = RatMatrix::from(m);
    for i in 0..n {
        let d = q.get(i, i).clone();
        if !d.is_positive() {
            return Err(MatrixError::NotPositiveDefinite);
        }
        for j in i + 1..n {
            let v = q.get(i, j) / &d;
            q.set(i, j, v);
        }
        for k in i + 1..n {
            let qik = q.get(i, k).clone();
            if qik.is_zero() {
                continue;
            }
            for l in k..n {
                let v = q.get(k, l) - &qik * &d * q.get(i, l);
                q.set(k, l, v);
            }
        }
    }
    let mut upper = RatMatrix::zeros(n, n);
    let mut diag = Vec::with_capacity(n);
    for i in 0..n {
        diag.push(q.get(i, i).clone());
        upper.set(i, i, BigRational::one());
        for j in i + 1..n {
            upper.set(i, j, q.get(i, j).clone());
        }
    }
    Ok(SymmetricFactor { diag, upper })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_rows(rows).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn det_examples() {
        assert_eq!(det(&mat(&[vec![2, -1], vec![-1, 2]])).unwrap(), BigInt::from(3));
        assert_eq!(det(&IntMatrix::identity(3)).unwrap(), BigInt::one());
        let g = mat(&[vec![4, 0, 2, 0], vec![0, 4, 0, 2], vec![2, 0, 4, 0], vec![0, 2, 0, 4]]);
        assert_eq!(det(&g).unwrap(), BigInt::from(144));
    }

    #[test]
    fn det_needs_row_swap() {
        let m = mat(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(det(&m).unwrap(), BigInt::from(-1));
        let s = mat(&[vec![1, 2], vec![2, 4]]);
        assert!(det(&s).unwrap().is_zero());
    }

    #[test]
    fn det_rejects_rectangular() {
        let m = mat(&[vec![1, 2, 3]]);
        assert_eq!(det(&m), Err(MatrixError::NotSquare { rows: 1, cols: 3 }));
    }

    #[test]
    fn snf_examples() {
        assert_eq!(smith_normal_form(&mat(&[vec![2, 0], vec![0, 2]])).unwrap(), ints(&[2, 2]));
        assert_eq!(smith_normal_form(&mat(&[vec![2, -1], vec![-1, 2]])).unwrap(), ints(&[1, 3]));
        assert_eq!(smith_normal_form(&IntMatrix::identity(2)).unwrap(), ints(&[1, 1]));
    }

    #[test]
    fn snf_fixes_divisibility() {
        assert_eq!(smith_normal_form(&mat(&[vec![2, 0], vec![0, 3]])).unwrap(), ints(&[1, 6]));
        assert_eq!(smith_normal_form(&mat(&[vec![6, 0], vec![0, 4]])).unwrap(), ints(&[2, 12]));
    }

    #[test]
    fn snf_singular_and_rectangular() {
        assert_eq!(smith_normal_form(&mat(&[vec![2, 4], vec![4, 8]])).unwrap(), ints(&[2, 0]));
        assert_eq!(invariant_factors(&mat(&[vec![2, 4, 6]])), ints(&[2]));
        assert_eq!(invariant_factors(&mat(&[vec![1, 1], vec![1, -1], vec![0, 2]])), ints(&[1, 2]));
    }

    #[test]
    fn inertia_examples() {
        let i = inertia(&mat(&[vec![2, -1], vec![-1, -1]])).unwrap();
        assert_eq!((i.positive, i.negative, i.zero), (1, 1, 0));
        let i = inertia(&mat(&[vec![2, 0], vec![0, 2]])).unwrap();
        assert_eq!((i.positive, i.negative, i.zero), (2, 0, 0));
        let i = inertia(&mat(&[vec![0]])).unwrap();
        assert_eq!((i.positive, i.negative, i.zero), (0, 0, 1));
    }

    #[test]
    fn inertia_zero_diagonal() {
        let i = inertia(&mat(&[vec![0, 1], vec![1, 0]])).unwrap();
        assert_eq!((i.positive, i.negative, i.zero), (1, 1, 0));
        let i = inertia(&mat(&[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 0]])).unwrap();
        assert_eq!((i.positive, i.negative, i.zero), (1, 1, 1));
    }

    #[test]
    fn inertia_rejects_asymmetric() {
        assert_eq!(inertia(&mat(&[vec![1, 2], vec![0, 1]])), Err(MatrixError::NotSymmetric));
    }

    #[test]
    fn kronecker_examples() {
        let a2 = mat(&[vec![2, 1], vec![1, 2]]);
        assert_eq!(kronecker(&mat(&[vec![1]]), &a2), a2);
        assert_eq!(kronecker(&mat(&[vec![2]]), &a2), mat(&[vec![4, 2], vec![2, 4]]));
        let expect = mat(&[
            vec![2, 1, 0, 0],
            vec![1, 2, 0, 0],
            vec![0, 0, 2, 1],
            vec![0, 0, 1, 2],
        ]);
        assert_eq!(kronecker(&IntMatrix::identity(2), &a2), expect);
        assert_eq!(block_diagonal(&a2, &a2), expect);
    }

    #[test]
    fn row_basis_spans() {
        let m = mat(&[vec![1, 1], vec![1, -1], vec![2, 0]]);
        let b = row_basis(&m);
        assert_eq!(b.rows(), 2);
        assert_eq!(det(&b).unwrap().abs(), BigInt::from(2));
        let m = mat(&[vec![2, 4], vec![3, 6]]);
        assert_eq!(row_basis(&m), mat(&[vec![1, 2]]));
    }

    #[test]
    fn factor_reconstructs_quadratic_form() {
        let g = mat(&[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]);
        let f = positive_definite_factor(&g).unwrap();
        let x = [3i64, -2, 5];
        let mut q = BigRational::zero();
        for i in 0..3 {
            let mut t = BigRational::from_integer(x[i].into());
            for j in i + 1..3 {
                t += f.upper.get(i, j) * BigRational::from_integer(x[j].into());
            }
            q += &f.diag[i] * &t * &t;
        }
        // xᵀGx for x = (3,-2,5)
        assert_eq!(q, BigRational::from_integer(BigInt::from(2 * 9 + 2 * 4 + 2 * 25 + 2 * 6 + 2 * 10)));
        assert_eq!(
            positive_definite_factor(&mat(&[vec![1, 2], vec![2, 1]])).unwrap_err(),
            MatrixError::NotPositiveDefinite
        );
    }
}
