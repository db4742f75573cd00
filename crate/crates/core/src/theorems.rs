//! Verification harness: predicted versus computed classifications of trace
//! forms over the cyclotomic and quadratic families.
//!
//! The "only if" directions are checked over these two families only, so
//! every record is family-verified rather than a statement about all number
//! fields.

use std::f64::consts::PI;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::cyclotomic::{self, CycloError, Involution};
use crate::discgroup::{self, CrossCheck, CyclicityError};
use crate::lattice::GramLattice;
use crate::quadratic::{self, QuadError, QuadField};
use crate::roots::{self, Classification, EnumerationBudget, RootType, RootsError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TheoremError {
    #[error(transparent)]
    Cyclo(#[from] CycloError),
    #[error(transparent)]
    Quad(#[from] QuadError),
    #[error(transparent)]
    Roots(#[from] RootsError),
    #[error(transparent)]
    Cyclicity(#[from] CyclicityError),
    #[error("{theta} is not admissible for {field}: identity needs a totally real field, conjugation a CM field")]
    Inadmissible { field: String, theta: &'static str },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Cyclotomic(u64),
    Quadratic(i64),
}

/// A field from one of the two families together with its involution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    kind: FieldKind,
    theta: Involution,
}

impl FieldSpec {
    /// `θ = id` only for `m ≤ 2` (ℚ), complex conjugation only for `m ≥ 3`.
    pub fn cyclotomic(m: u64, theta: Involution) -> Result<Self, TheoremError> {
        if m == 0 {
            return Err(CycloError::ZeroConductor.into());
        }
        let totally_real = m <= 2;
        Self::admissible(FieldKind::Cyclotomic(m), theta, totally_real)
    }

    /// `θ = id` only for `c > 0`, complex conjugation only for `c < 0`.
    pub fn quadratic(c: i64, theta: Involution) -> Result<Self, TheoremError> {
        QuadField::new(c)?;
        Self::admissible(FieldKind::Quadratic(c), theta, c > 0)
    }

    /// The admissible involution for the field, which is unique in both families.
    pub fn natural(kind: FieldKind) -> Result<Self, TheoremError> {
        match kind {
            FieldKind::Cyclotomic(m) => {
                Self::cyclotomic(m, if m <= 2 { Involution::Identity } else { Involution::Conjugation })
            }
            FieldKind::Quadratic(c) => {
                Self::quadratic(c, if c > 0 { Involution::Identity } else { Involution::Conjugation })
            }
        }
    }

    fn admissible(kind: FieldKind, theta: Involution, totally_real: bool) -> Result<Self, TheoremError> {
        let ok = match theta {
            Involution::Identity => totally_real,
            Involution::Conjugation => !totally_real,
        };
        let spec = FieldSpec { kind, theta };
        if ok {
            Ok(spec)
        } else {
            Err(TheoremError::Inadmissible { field: spec.field_name(), theta: theta.tag() })
        }
    }

    pub fn kind(&self) -> FieldKind {
        self.kind
    }

    pub fn theta(&self) -> Involution {
        self.theta
    }

    pub fn field_name(&self) -> String {
        match self.kind {
            FieldKind::Cyclotomic(m) => format!("Q(zeta_{m})"),
            FieldKind::Quadratic(c) => format!("Q(sqrt({c}))"),
        }
    }

    pub fn gram(&self) -> GramLattice {
        match self.kind {
            FieldKind::Cyclotomic(m) => {
                cyclotomic::gram_trace_form(m, self.theta).expect("admissible spec")
            }
            FieldKind::Quadratic(c) => quadratic::quad_gram(c, self.theta).expect("admissible spec"),
        }
    }

    pub fn degree(&self) -> usize {
        match self.kind {
            FieldKind::Cyclotomic(m) => cyclotomic::phi(m) as usize,
            FieldKind::Quadratic(_) => 2,
        }
    }

    /// Key used to order report records: cyclotomic by conductor, then quadratic by `c`.
    fn sort_key(&self) -> (u8, i64) {
        match self.kind {
            FieldKind::Cyclotomic(m) => (0, m as i64),
            FieldKind::Quadratic(c) => (1, c),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}, theta={}", self.field_name(), self.theta.tag())
    }
}

fn odd_part(mut m: u64) -> u64 {
    while m % 2 == 0 && m > 0 {
        m /= 2;
    }
    m
}

fn is_power_of_three(mut k: u64) -> bool {
    if k < 3 {
        return false;
    }
    while k % 3 == 0 {
        k /= 3;
    }
    k == 1
}

/// What the classification theorems say about a field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prediction {
    /// the unscaled trace form is a root lattice
    pub root_lattice: bool,
    /// similar to `ℤⁿ`
    pub integral_similar: bool,
    /// similar to an even primitive root lattice, namely `𝔸₂^{n/2}`
    pub a2_similar: bool,
    /// `m̃` whenever one of the similarity statements applies
    #[serde(serialize_with = "crate::report::opt_big_as_string")]
    pub content: Option<BigInt>,
}

impl Prediction {
    /// Expected decomposition of the primitive rescale, when one is predicted.
    pub fn expected_similar(&self, n: usize) -> Option<Vec<RootType>> {
        if self.integral_similar {
            Some(vec![RootType::Z1; n])
        } else if self.a2_similar {
            Some(vec![RootType::A(2); n / 2])
        } else {
            None
        }
    }
}

pub fn predict(spec: &FieldSpec) -> Prediction {
    let n = spec.degree() as u64;
    let (root_lattice, integral_similar, a2_similar) = match spec.kind {
        FieldKind::Cyclotomic(m) => {
            let canonical = cyclotomic::canonical_conductor(m);
            (
                matches!(canonical, 1 | 3 | 4),
                m.is_power_of_two(),
                is_power_of_three(odd_part(m)),
            )
        }
        FieldKind::Quadratic(c) => (c == -3 || c == -1, c == -1, c == -3),
    };
    let content = if integral_similar {
        Some(BigInt::from(n))
    } else if a2_similar {
        Some(BigInt::from(n / 2))
    } else {
        None
    };
    Prediction { root_lattice, integral_similar, a2_similar, content }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Agreement {
    pub root_lattice: bool,
    pub integral_similar: bool,
    pub a2_similar: bool,
    pub content: bool,
}

impl Agreement {
    pub fn all(&self) -> bool {
        self.root_lattice && self.integral_similar && self.a2_similar && self.content
    }
}

/// Computed invariants of one trace-form lattice next to the prediction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationRecord {
    pub spec: FieldSpec,
    pub n: usize,
    pub content: BigInt,
    pub disc: BigInt,
    pub invariant_factors: Vec<BigInt>,
    pub even: bool,
    pub positive_definite: bool,
    pub unscaled: Classification,
    pub similar: Classification,
    pub prediction: Prediction,
    pub agreement: Agreement,
}

impl ClassificationRecord {
    pub fn agrees(&self) -> bool {
        self.agreement.all()
    }
}

pub fn verify(spec: &FieldSpec, budget: EnumerationBudget) -> Result<ClassificationRecord, TheoremError> {
    let gram = spec.gram();
    let n = gram.rank();
    let unscaled = roots::witt_decompose(&gram, budget)?;
    let similar = roots::similar_to(&gram, budget)?;
    let content = gram.content();
    let prediction = predict(spec);

    let similar_types = similar.decomposition().map(|d| d.types());
    let integral = similar_types.as_ref().is_some_and(|t| t.iter().all(|&x| x == RootType::Z1));
    let even_root = similar_types.as_ref().is_some_and(|t| t.iter().all(|&x| x != RootType::Z1));
    let expected = prediction.expected_similar(n);

    let agreement = Agreement {
        root_lattice: unscaled.is_root() == prediction.root_lattice,
        integral_similar: integral == prediction.integral_similar
            && (!integral || similar_types == expected),
        a2_similar: even_root == prediction.a2_similar && (!even_root || similar_types == expected),
        content: prediction.content.as_ref().map_or(true, |c| c == &content),
    };

    Ok(ClassificationRecord {
        spec: *spec,
        n,
        disc: gram.discriminant().clone(),
        invariant_factors: gram.disc_group().invariant_factors().to_vec(),
        even: gram.is_even(),
        positive_definite: gram.is_positive_definite(),
        content,
        unscaled,
        similar,
        prediction,
        agreement,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Theorem4Check {
    pub even_unimodular: bool,
    /// true iff the primitive rescale is not even unimodular
    pub holds: bool,
    /// `|disc K|^{1/n} > n/2`
    pub root_discriminant_exceeds_half_degree: bool,
}

/// True iff the primitive rescale of `l` is NOT both even and unimodular.
pub fn not_even_unimodular(l: &GramLattice) -> bool {
    let p = l.primitive_rescale();
    !(p.is_even() && p.is_unimodular())
}

pub fn check_theorem4(spec: &FieldSpec) -> Theorem4Check {
    let gram = spec.gram();
    let holds = not_even_unimodular(&gram);
    let n = gram.rank() as u32;
    // |disc|^{1/n} > n/2  ⟺  |disc|·2ⁿ > nⁿ
    let lhs = gram.discriminant().abs() * BigInt::from(2).pow(n);
    let rhs = BigInt::from(n).pow(n);
    Theorem4Check { even_unimodular: !holds, holds, root_discriminant_exceeds_half_degree: lhs > rhs }
}

/// Largest deviation between the embedding form `Σ_σ σ(x)·conj(σ(y))` on
/// the power basis, evaluated in floating point, and the exact conjugation
/// trace Gram matrix.
pub fn check_bk(m: u64) -> Result<f64, TheoremError> {
    let gram = cyclotomic::CyclotomicRing::new(m)?.gram_matrix(Involution::Conjugation)?;
    let n = gram.rows();
    let units: Vec<u64> = (1..=m).filter(|k| k.gcd(&m) == 1).collect();
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            let (mut re, mut im) = (0.0f64, 0.0f64);
            for &k in &units {
                // σ_k(ζ^i)·conj(σ_k(ζ^j)) = e^{2πik(i−j)/m}
                let angle = 2.0 * PI * (k as f64) * (i as f64 - j as f64) / m as f64;
                re += angle.cos();
                im += angle.sin();
            }
            let exact = gram.get(i, j).to_f64().expect("small entries");
            worst = worst.max((re - exact).abs()).max(im.abs());
        }
    }
    Ok(worst)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BkRow {
    pub m: u64,
    pub max_deviation: f64,
    pub within_tolerance: bool,
}

pub fn bk_table(max_m: u64, tolerance: f64) -> Result<Vec<BkRow>, TheoremError> {
    (3..=max_m)
        .into_par_iter()
        .map(|m| {
            let d = check_bk(m)?;
            Ok(BkRow { m, max_deviation: d, within_tolerance: d < tolerance })
        })
        .collect()
}

/// Admissible specs: cyclotomic `1 ≤ m ≤ max_m` and squarefree quadratic
/// `|c| ≤ max_quad`, each with its natural involution.
pub fn sweep_specs(max_m: u64, max_quad: i64) -> Vec<FieldSpec> {
    let cyclo = (1..=max_m).map(FieldKind::Cyclotomic);
    let quad = (-max_quad..=max_quad)
        .filter(|&c| c != 0 && c != 1 && quadratic::is_squarefree(c.unsigned_abs()))
        .map(FieldKind::Quadratic);
    cyclo.chain(quad).map(|k| FieldSpec::natural(k).expect("natural involution")).collect()
}

/// Verifies every spec in parallel; records come back sorted by conductor.
pub fn sweep(
    max_m: u64,
    max_quad: i64,
    budget: EnumerationBudget,
) -> Result<Vec<ClassificationRecord>, TheoremError> {
    let mut out: Vec<ClassificationRecord> =
        sweep_specs(max_m, max_quad).par_iter().map(|s| verify(s, budget)).collect::<Result<_, _>>()?;
    out.sort_by_key(|r| r.spec.sort_key());
    Ok(out)
}

/// Crosscheck rows for every `3 ≤ m ≤ max_m` and every ramified `p | m`.
pub fn cyclicity_table(max_m: u64) -> Result<Vec<CrossCheck>, TheoremError> {
    let per_m: Vec<Vec<CrossCheck>> = (3..=max_m)
        .into_par_iter()
        .map(discgroup::crosscheck_conductor)
        .collect::<Result<_, _>>()?;
    Ok(per_m.into_iter().flatten().collect())
}
