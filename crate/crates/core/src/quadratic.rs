//! Trace forms of quadratic fields `ℚ(√c)`.
//!
//! The ring of integers is `ℤ + ℤω` with `ω = √c` or `ω = (1+√c)/2`. Every
//! Gram entry is a function of `Trace(ω)` and `Norm(ω)`, so no polynomial
//! arithmetic is needed.

use num_bigint::BigInt;
use thiserror::Error;

use crate::cyclotomic::{factorize, Involution};
use crate::exactalg::IntMatrix;
use crate::lattice::GramLattice;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuadError {
    #[error("c = {0} does not define a quadratic field (need squarefree c ∉ {{0, 1}})")]
    InvalidParameter(i64),
    #[error("complex conjugation requires an imaginary quadratic field, got c = {0}")]
    RealField(i64),
}

/// `ℚ(√c)` for squarefree `c ≠ 0, 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QuadField {
    c: i64,
}

pub fn is_squarefree(n: u64) -> bool {
    n != 0 && factorize(n).iter().all(|&(_, a)| a == 1)
}

impl QuadField {
    pub fn new(c: i64) -> Result<Self, QuadError> {
        if c == 0 || c == 1 || !is_squarefree(c.unsigned_abs()) {
            return Err(QuadError::InvalidParameter(c));
        }
        Ok(QuadField { c })
    }

    pub fn c(&self) -> i64 {
        self.c
    }

    pub fn is_imaginary(&self) -> bool {
        self.c < 0
    }

    fn one_mod_four(&self) -> bool {
        self.c.rem_euclid(4) == 1
    }

    /// `(Trace(ω), Norm(ω))` for the second integral basis element.
    pub fn omega_trace_norm(&self) -> (i64, i64) {
        if self.one_mod_four() {
            (1, (1 - self.c) / 4)
        } else {
            (0, -self.c)
        }
    }

    /// Field discriminant: `c` if `c ≡ 1 mod 4`, else `4c`.
    pub fn discriminant(&self) -> i64 {
        if self.one_mod_four() {
            self.c
        } else {
            4 * self.c
        }
    }

    /// Gram matrix of `Trace(x·θ(y))` on the basis `1, ω`.
    pub fn gram(&self, theta: Involution) -> Result<GramLattice, QuadError> {
        let (t, n) = self.omega_trace_norm();
        let corner = match theta {
            // Trace(ω²) = Trace(ω)² − 2·Norm(ω)
            Involution::Identity => t * t - 2 * n,
            Involution::Conjugation => {
                if !self.is_imaginary() {
                    return Err(QuadError::RealField(self.c));
                }
                // ω·ω̄ = Norm(ω) is rational
                2 * n
            }
        };
        let rows = [vec![2, t], vec![t, corner]];
        let gram = IntMatrix::from_rows(&rows).expect("2x2");
        Ok(GramLattice::new(gram).expect("quadratic trace forms are nondegenerate"))
    }
}

pub fn quad_discriminant(c: i64) -> Result<BigInt, QuadError> {
    Ok(BigInt::from(QuadField::new(c)?.discriminant()))
}

pub fn quad_gram(c: i64, theta: Involution) -> Result<GramLattice, QuadError> {
    QuadField::new(c)?.gram(theta)
}
