//! Cyclicity of `p`-primary parts of the discriminant group of `ℤ[ζ_m]`.
//!
//! The discriminant group of the conjugation trace form is isomorphic to
//! `𝒪/𝔡`. Its `p`-primary part is cyclic exactly when a single prime lies
//! over `p`, `p` is odd, `e = 2` and `f = 1`. Both sides are computed here
//! independently: Smith normal form of the Gram matrix on one side, the
//! cyclotomic splitting law on the other.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::cyclotomic::{self, CycloError, Involution, RamificationData};
use crate::lattice::DiscGroup;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CyclicityError {
    #[error(transparent)]
    Cyclo(#[from] CycloError),
    #[error("the criterion needs a field of degree > 1, but φ({0}) = 1")]
    DegreeOne(u64),
    #[error("{p} is not ramified in Q(zeta_{m})")]
    Unramified { m: u64, p: u64 },
}

/// `p`-adic valuations of the invariant factors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PPrimaryReport {
    pub p: u64,
    /// positive valuations only
    pub exponents: Vec<u32>,
    pub cyclic: bool,
}

impl PPrimaryReport {
    pub fn is_nontrivial_cyclic(&self) -> bool {
        self.exponents.len() == 1
    }
}

fn valuation(x: &BigInt, p: u64) -> u32 {
    if x.is_zero() {
        return u32::MAX;
    }
    let p = BigInt::from(p);
    let mut x = x.clone();
    let mut v = 0;
    loop {
        let (q, r) = x.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        x = q;
        v += 1;
    }
}

pub fn p_primary(dg: &DiscGroup, p: u64) -> PPrimaryReport {
    let exponents: Vec<u32> =
        dg.invariant_factors().iter().map(|s| valuation(s, p)).filter(|&v| v > 0).collect();
    PPrimaryReport { p, cyclic: exponents.len() <= 1, exponents }
}

fn ramified_data(m: u64, p: u64) -> Result<RamificationData, CyclicityError> {
    let data = cyclotomic::ramification(m, p)?;
    if cyclotomic::phi(m) <= 1 {
        return Err(CyclicityError::DegreeOne(m));
    }
    if !data.is_ramified() {
        return Err(CyclicityError::Unramified { m, p });
    }
    Ok(data)
}

/// The splitting-law side: `g = 1`, `p` odd, `e = 2`, `f = 1`.
pub fn criterion(m: u64, p: u64) -> Result<bool, CyclicityError> {
    let d = ramified_data(m, p)?;
    Ok(d.g == 1 && p % 2 == 1 && d.e == 2 && d.f == 1)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossCheck {
    pub m: u64,
    pub p: u64,
    pub ramification: RamificationData,
    pub report: PPrimaryReport,
    pub snf_cyclic: bool,
    pub criterion: bool,
    pub agree: bool,
}

/// Compares the Smith-form answer with the splitting-law answer for one `(m, p)`.
pub fn crosscheck(m: u64, p: u64) -> Result<CrossCheck, CyclicityError> {
    let ramification = ramified_data(m, p)?;
    let predicted = criterion(m, p)?;
    let dg = cyclotomic::gram_trace_form(m, Involution::Conjugation)?.disc_group();
    Ok(crosscheck_with(m, p, ramification, &dg, predicted))
}

fn crosscheck_with(m: u64, p: u64, ramification: RamificationData, dg: &DiscGroup, predicted: bool) -> CrossCheck {
    let report = p_primary(dg, p);
    let snf_cyclic = report.is_nontrivial_cyclic();
    CrossCheck { m, p, ramification, report, snf_cyclic, criterion: predicted, agree: snf_cyclic == predicted }
}

/// All ramified `(m, p)` pairs for one conductor, sharing one Smith form.
pub fn crosscheck_conductor(m: u64) -> Result<Vec<CrossCheck>, CyclicityError> {
    if m < 3 || cyclotomic::phi(m) <= 1 {
        return Ok(Vec::new());
    }
    let dg = cyclotomic::gram_trace_form(m, Involution::Conjugation)?.disc_group();
    let mut out = Vec::new();
    for (p, _) in cyclotomic::factorize(m) {
        let data = cyclotomic::ramification(m, p)?;
        if !data.is_ramified() {
            continue;
        }
        out.push(crosscheck_with(m, p, data, &dg, criterion(m, p)?));
    }
    Ok(out)
}
