//! Integral lattices carried by a symmetric Gram matrix.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exactalg::{self, Inertia, IntMatrix, MatrixError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error("Gram matrix is degenerate (determinant 0)")]
    Degenerate,
    #[error("lattice rank must be positive")]
    Empty,
    #[error("vector has {got} coordinates, lattice rank is {rank}")]
    Dimension { rank: usize, got: usize },
}

/// A nondegenerate integral lattice `(ℤʳ, b)` given by its Gram matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct GramLattice {
    gram: IntMatrix,
    disc: BigInt,
}

impl GramLattice {
    pub fn new(gram: IntMatrix) -> Result<Self, LatticeError> {
        if !gram.is_square() {
            return Err(MatrixError::NotSquare { rows: gram.rows(), cols: gram.cols() }.into());
        }
        if gram.rows() == 0 {
            return Err(LatticeError::Empty);
        }
        if !gram.is_symmetric() {
            return Err(MatrixError::NotSymmetric.into());
        }
        let disc = exactalg::det(&gram)?;
        if disc.is_zero() {
            return Err(LatticeError::Degenerate);
        }
        Ok(GramLattice { gram, disc })
    }

    pub fn from_rows<T: Clone + Into<BigInt>>(rows: &[Vec<T>]) -> Result<Self, LatticeError> {
        Self::new(IntMatrix::from_rows(rows)?)
    }

    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    /// `gcd{b(x, y)}` over the lattice, i.e. the gcd of the Gram entries.
    pub fn content(&self) -> BigInt {
        self.gram.content()
    }

    /// `(L, b / content)`.
    pub fn primitive_rescale(&self) -> GramLattice {
        let d = self.content();
        if d.is_one() {
            return self.clone();
        }
        let r = self.rank();
        let gram = IntMatrix::from_fn(r, r, |i, j| self.gram.get(i, j) / &d);
        let disc = &self.disc / d.pow(r as u32);
        GramLattice { gram, disc }
    }

    /// `det(b(eᵢ, eⱼ))`.
    pub fn discriminant(&self) -> &BigInt {
        &self.disc
    }

    pub fn disc_group(&self) -> DiscGroup {
        DiscGroup::new(exactalg::invariant_factors(&self.gram))
    }

    /// Even iff every diagonal entry is even (`b(x,x) ≡ Σ xᵢ² b(eᵢ,eᵢ) mod 2`).
    pub fn is_even(&self) -> bool {
        (0..self.rank()).all(|i| self.gram.get(i, i).is_even())
    }

    pub fn is_unimodular(&self) -> bool {
        self.disc.abs().is_one()
    }

    pub fn inertia(&self) -> Inertia {
        exactalg::inertia(&self.gram).expect("Gram matrix is square and symmetric")
    }

    pub fn is_positive_definite(&self) -> bool {
        self.inertia().positive == self.rank()
    }

    pub fn direct_sum(&self, other: &GramLattice) -> GramLattice {
        GramLattice {
            gram: exactalg::block_diagonal(&self.gram, &other.gram),
            disc: &self.disc * &other.disc,
        }
    }

    /// Tensor product; the Gram matrix is the Kronecker product.
    pub fn tensor(&self, other: &GramLattice) -> GramLattice {
        let gram = exactalg::kronecker(&self.gram, &other.gram);
        // det(A⊗B) = det(A)^rank(B) · det(B)^rank(A)
        let disc = self.disc.pow(other.rank() as u32) * other.disc.pow(self.rank() as u32);
        GramLattice { gram, disc }
    }

    /// `b(x, y)` for coordinate vectors.
    pub fn inner(&self, x: &[i64], y: &[i64]) -> Result<BigInt, LatticeError> {
        let r = self.rank();
        for v in [x, y] {
            if v.len() != r {
                return Err(LatticeError::Dimension { rank: r, got: v.len() });
            }
        }
        let mut acc = BigInt::zero();
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            let mut row = BigInt::zero();
            for (j, &yj) in y.iter().enumerate() {
                if yj != 0 {
                    row += self.gram.get(i, j) * yj;
                }
            }
            acc += row * xi;
        }
        Ok(acc)
    }

    pub fn norm(&self, x: &[i64]) -> Result<BigInt, LatticeError> {
        self.inner(x, x)
    }

    /// Sublattice spanned by the rows of `basis` (given in coordinates of
    /// this lattice), if those rows are independent.
    pub fn sublattice(&self, basis: &IntMatrix) -> Result<GramLattice, LatticeError> {
        GramLattice::new(basis.congruence(&self.gram)?)
    }
}

impl fmt::Debug for GramLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GramLattice").field("gram", &self.gram).field("disc", &self.disc).finish()
    }
}

/// Invariant factors `s₁ | s₂ | … | s_r` of the discriminant group `L*/L`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiscGroup {
    invariant_factors: Vec<BigInt>,
}

impl DiscGroup {
    /// Accepts factors already in a divisibility chain.
    pub fn new(invariant_factors: Vec<BigInt>) -> Self {
        debug_assert!(invariant_factors.windows(2).all(|w| (&w[1] % &w[0]).is_zero()));
        DiscGroup { invariant_factors }
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn order(&self) -> BigInt {
        self.invariant_factors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.iter().all(One::is_one)
    }

    /// Factors other than 1; two groups are isomorphic iff these agree.
    pub fn nontrivial_factors(&self) -> Vec<BigInt> {
        self.invariant_factors.iter().filter(|s| !s.is_one()).cloned().collect()
    }

    pub fn is_isomorphic(&self, other: &DiscGroup) -> bool {
        self.nontrivial_factors() == other.nontrivial_factors()
    }
}

impl fmt::Display for DiscGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.nontrivial_factors().iter().map(|s| format!("Z/{s}")).collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}
