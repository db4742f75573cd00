//! Short vectors, Witt's root-lattice test and ADE identification.
//!
//! A positive-definite lattice is a root lattice iff it is generated by its
//! vectors of norm 1 and 2. Norm-1 vectors are pairwise orthogonal and each
//! spans a `ℤ¹` summand; the remaining indecomposable summands are the
//! connected components of the norm-2 vectors orthogonal to all of them,
//! joined whenever two roots pair nontrivially.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use petgraph::unionfind::UnionFind;
use thiserror::Error;

use crate::exactalg::{self, IntMatrix};
use crate::lattice::GramLattice;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootsError {
    #[error("short-vector enumeration needs a positive-definite lattice")]
    NotPositiveDefinite,
    #[error("rank {rank} exceeds the enumeration cap of {max}")]
    RankTooLarge { rank: usize, max: usize },
    #[error("enumeration budget of {0} search nodes exceeded")]
    BudgetExceeded(u64),
    #[error("Gram entry {0} does not fit a machine word")]
    EntryTooLarge(BigInt),
    #[error("inconsistent root component: {0}")]
    Inconsistent(String),
}

/// Limits for short-vector enumeration. Exceeding either is an error, never
/// a truncated answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationBudget {
    pub max_rank: usize,
    pub max_nodes: u64,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget { max_rank: 128, max_nodes: 200_000_000 }
    }
}

/// All vectors `x` with `0 < b(x,x) ≤ bound`, one representative per `±x`
/// (the one whose last nonzero coordinate is positive), sorted
/// lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShortVectorSet {
    pub bound: u64,
    pub vectors: Vec<Vec<i64>>,
    pub norms: Vec<u64>,
}

impl ShortVectorSet {
    pub fn classes(&self) -> usize {
        self.vectors.len()
    }

    /// Number of vectors of norm exactly `s`, counting both signs.
    pub fn count_with_norm(&self, s: u64) -> usize {
        2 * self.norms.iter().filter(|&&n| n == s).count()
    }

    pub fn with_norm(&self, s: u64) -> impl Iterator<Item = &Vec<i64>> {
        self.vectors.iter().zip(&self.norms).filter(move |(_, &n)| n == s).map(|(v, _)| v)
    }
}

fn small_gram(l: &GramLattice) -> Result<Vec<Vec<i128>>, RootsError> {
    let r = l.rank();
    (0..r)
        .map(|i| {
            (0..r)
                .map(|j| {
                    let x = l.gram().get(i, j);
                    x.to_i64().map(i128::from).ok_or_else(|| RootsError::EntryTooLarge(x.clone()))
                })
                .collect()
        })
        .collect()
}

fn exact_norm(g: &[Vec<i128>], x: &[i64]) -> i128 {
    let mut acc = 0i128;
    for (i, &xi) in x.iter().enumerate() {
        if xi == 0 {
            continue;
        }
        let row: i128 = g[i].iter().zip(x).map(|(&a, &xj)| a * xj as i128).sum();
        acc += row * xi as i128;
    }
    acc
}

fn ratio_to_f64(q: &num_rational::BigRational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// Fincke–Pohst enumeration of all vectors of norm in `[1, bound]`.
///
/// The lattice is factored exactly as `Uᵀ·diag(d)·U` over ℚ. The search tree
/// walks coordinates from last to first using that factor rounded to `f64`,
/// with every coordinate interval widened by a small margin; each candidate
/// that reaches a leaf is accepted only after its norm is recomputed exactly
/// from the integer Gram matrix.
pub fn enumerate_short(
    l: &GramLattice,
    bound: u64,
    budget: EnumerationBudget,
) -> Result<ShortVectorSet, RootsError> {
    let r = l.rank();
    if r > budget.max_rank {
        return Err(RootsError::RankTooLarge { rank: r, max: budget.max_rank });
    }
    let factor = exactalg::positive_definite_factor(l.gram()).map_err(|_| RootsError::NotPositiveDefinite)?;
    let gram = small_gram(l)?;
    let d: Vec<f64> = factor.diag.iter().map(ratio_to_f64).collect();
    let u: Vec<Vec<f64>> =
        (0..r).map(|i| (0..r).map(|j| ratio_to_f64(factor.upper.get(i, j))).collect()).collect();

    let limit = bound as f64 * (1.0 + 1e-9) + 1e-9;
    let mut search = Search {
        r,
        d: &d,
        u: &u,
        gram: &gram,
        bound: bound as i128,
        limit,
        x: vec![0; r],
        nodes: 0,
        max_nodes: budget.max_nodes,
        found: Vec::new(),
    };
    search.descend(r, 0.0, true)?;
    let mut found = search.found;
    found.sort();
    let (vectors, norms) = found.into_iter().unzip();
    Ok(ShortVectorSet { bound, vectors, norms })
}

struct Search<'a> {
    r: usize,
    d: &'a [f64],
    u: &'a [Vec<f64>],
    gram: &'a [Vec<i128>],
    bound: i128,
    limit: f64,
    x: Vec<i64>,
    nodes: u64,
    max_nodes: u64,
    found: Vec<(Vec<i64>, u64)>,
}

impl Search<'_> {
    /// Coordinates `level..r` are fixed; choose `x[level-1]`.
    fn descend(&mut self, level: usize, used: f64, zero_tail: bool) -> Result<(), RootsError> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(RootsError::BudgetExceeded(self.max_nodes));
        }
        if level == 0 {
            if zero_tail {
                return Ok(());
            }
            let n = exact_norm(self.gram, &self.x);
            if n >= 1 && n <= self.bound {
                self.found.push((self.x.clone(), n as u64));
            }
            return Ok(());
        }
        let i = level - 1;
        let center: f64 = -(level..self.r).map(|j| self.u[i][j] * self.x[j] as f64).sum::<f64>();
        let room = (self.limit - used).max(0.0);
        let half = (room / self.d[i]).sqrt() + 1e-9;
        let mut lo = (center - half).ceil() as i64;
        let hi = (center + half).floor() as i64;
        if zero_tail {
            lo = lo.max(0);
        }
        for v in lo..=hi {
            let t = v as f64 - center;
            let next = used + self.d[i] * t * t;
            if next > self.limit {
                continue;
            }
            self.x[i] = v;
            self.descend(i, next, zero_tail && v == 0)?;
        }
        self.x[i] = 0;
        Ok(())
    }
}

/// Indecomposable root lattice types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootType {
    Z1,
    A(usize),
    D(usize),
    E6,
    E7,
    E8,
}

impl RootType {
    pub fn rank(&self) -> usize {
        match *self {
            RootType::Z1 => 1,
            RootType::A(l) | RootType::D(l) => l,
            RootType::E6 => 6,
            RootType::E7 => 7,
            RootType::E8 => 8,
        }
    }

    pub fn family(&self) -> &'static str {
        match self {
            RootType::Z1 => "Z1",
            RootType::A(_) => "A",
            RootType::D(_) => "D",
            RootType::E6 => "E6",
            RootType::E7 => "E7",
            RootType::E8 => "E8",
        }
    }

    /// Number of norm-2 vectors.
    pub fn root_count(&self) -> usize {
        match *self {
            RootType::Z1 => 0,
            RootType::A(l) => l * (l + 1),
            RootType::D(l) => 2 * l * (l - 1),
            RootType::E6 => 72,
            RootType::E7 => 126,
            RootType::E8 => 240,
        }
    }

    /// Number of norm-1 vectors.
    pub fn unit_count(&self) -> usize {
        match self {
            RootType::Z1 => 2,
            _ => 0,
        }
    }

    pub fn discriminant(&self) -> u64 {
        match *self {
            RootType::Z1 => 1,
            RootType::A(l) => l as u64 + 1,
            RootType::D(_) => 4,
            RootType::E6 => 3,
            RootType::E7 => 2,
            RootType::E8 => 1,
        }
    }

    /// Standard Gram matrix (Cartan matrix for the even types).
    pub fn gram(&self) -> GramLattice {
        let l = self.rank();
        let mut edges: Vec<(usize, usize)> = Vec::new();
        match *self {
            RootType::Z1 => return GramLattice::from_rows(&[vec![1i64]]).expect("unimodular"),
            RootType::A(_) => edges.extend((0..l - 1).map(|i| (i, i + 1))),
            RootType::D(_) => {
                edges.extend((0..l - 2).map(|i| (i, i + 1)));
                edges.push((l - 3, l - 1));
            }
            RootType::E6 | RootType::E7 | RootType::E8 => {
                edges.extend((0..l - 2).map(|i| (i, i + 1)));
                edges.push((2, l - 1));
            }
        }
        let mut g = vec![vec![0i64; l]; l];
        for (i, row) in g.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (a, b) in edges {
            g[a][b] = -1;
            g[b][a] = -1;
        }
        GramLattice::from_rows(&g).expect("Cartan matrices are nondegenerate")
    }

    fn is_valid(&self) -> bool {
        match *self {
            RootType::A(l) => l >= 1,
            RootType::D(l) => l >= 4,
            _ => true,
        }
    }
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            RootType::A(l) => write!(f, "A{l}"),
            RootType::D(l) => write!(f, "D{l}"),
            other => write!(f, "{}", other.family()),
        }
    }
}

/// What identification needs to know about one component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentSignature {
    pub rank: usize,
    /// full counts, both signs
    pub unit_vectors: usize,
    pub roots: usize,
    pub discriminant: BigInt,
}

/// Decides the ADE type from the root count and cross-checks the
/// discriminant.
pub fn identify_type(sig: &ComponentSignature) -> Result<RootType, RootsError> {
    let l = sig.rank;
    let candidate = if sig.unit_vectors > 0 {
        (l == 1).then_some(RootType::Z1)
    } else {
        let n = sig.roots;
        match n {
            72 if l == 6 => Some(RootType::E6),
            126 if l == 7 => Some(RootType::E7),
            240 if l == 8 => Some(RootType::E8),
            _ if n == l * (l + 1) => Some(RootType::A(l)),
            _ if l >= 4 && n == 2 * l * (l - 1) => Some(RootType::D(l)),
            _ => None,
        }
    };
    let t = candidate.filter(RootType::is_valid).ok_or_else(|| {
        RootsError::Inconsistent(format!(
            "rank {l} with {} unit vectors and {} roots matches no catalog type",
            sig.unit_vectors, sig.roots
        ))
    })?;
    if sig.discriminant.abs() != BigInt::from(t.discriminant()) {
        return Err(RootsError::Inconsistent(format!(
            "{t} has discriminant {}, component has {}",
            t.discriminant(),
            sig.discriminant
        )));
    }
    Ok(t)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootComponent {
    pub root_type: RootType,
    /// one representative per `±` class, in lattice coordinates
    pub generators: Vec<Vec<i64>>,
}

/// Orthogonal decomposition into indecomposable root lattices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDecomposition {
    pub components: Vec<RootComponent>,
    pub unit_vectors: usize,
    pub roots: usize,
}

impl RootDecomposition {
    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.root_type.rank()).sum()
    }

    pub fn types(&self) -> Vec<RootType> {
        self.components.iter().map(|c| c.root_type).collect()
    }

    /// True when every component is `t`.
    pub fn is_power_of(&self, t: RootType) -> bool {
        self.components.iter().all(|c| c.root_type == t)
    }

    /// Direct sum of the catalog Gram matrices of the components.
    pub fn standard_form(&self) -> Option<GramLattice> {
        self.components.iter().map(|c| c.root_type.gram()).reduce(|a, b| a.direct_sum(&b))
    }

    /// Checks rank, discriminant, root count and unit count against the
    /// catalog values of the identified components.
    pub fn certify(&self, l: &GramLattice) -> Result<(), RootsError> {
        let std = self
            .standard_form()
            .ok_or_else(|| RootsError::Inconsistent("empty decomposition".into()))?;
        // ℤᵏ contributes its 2k(k−1) vectors ±eᵢ±eⱼ on top of the catalog roots
        let k = self.components.iter().filter(|c| c.root_type == RootType::Z1).count();
        let roots: usize =
            self.components.iter().map(|c| c.root_type.root_count()).sum::<usize>() + 2 * k * k.saturating_sub(1);
        let units: usize = self.components.iter().map(|c| c.root_type.unit_count()).sum();
        let checks = [
            (std.rank() == l.rank(), "rank"),
            (std.discriminant().abs() == l.discriminant().abs(), "discriminant"),
            (roots == self.roots, "root count"),
            (units == self.unit_vectors, "unit count"),
        ];
        match checks.iter().find(|(ok, _)| !ok) {
            Some((_, what)) => Err(RootsError::Inconsistent(format!("{what} differs from the catalog sum"))),
            None => Ok(()),
        }
    }

    /// Compact form such as `A2^2` or `Z1^3 + A1`.
    pub fn summary(&self) -> String {
        let mut parts: Vec<(RootType, usize)> = Vec::new();
        for t in self.types() {
            match parts.last_mut() {
                Some((last, k)) if *last == t => *k += 1,
                _ => parts.push((t, 1)),
            }
        }
        parts
            .iter()
            .map(|(t, k)| if *k == 1 { t.to_string() } else { format!("{t}^{k}") })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NotRootReason {
    NotPositiveDefinite,
    /// vectors of norm 1 and 2 span a proper sublattice (or nothing)
    NotGenerated { short_vectors: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    Root(RootDecomposition),
    NotRoot(NotRootReason),
}

impl Classification {
    pub fn decomposition(&self) -> Option<&RootDecomposition> {
        match self {
            Classification::Root(d) => Some(d),
            Classification::NotRoot(_) => None,
        }
    }

    pub fn is_root(&self) -> bool {
        matches!(self, Classification::Root(_))
    }

    pub fn summary(&self) -> String {
        match self {
            Classification::Root(d) => d.summary(),
            Classification::NotRoot(_) => "not_root".to_string(),
        }
    }
}

fn vectors_matrix(vs: &[&Vec<i64>], r: usize) -> IntMatrix {
    IntMatrix::from_fn(vs.len(), r, |i, j| BigInt::from(vs[i][j]))
}

/// Witt's test and decomposition into indecomposable components.
pub fn witt_decompose(l: &GramLattice, budget: EnumerationBudget) -> Result<Classification, RootsError> {
    if !l.is_positive_definite() {
        return Ok(Classification::NotRoot(NotRootReason::NotPositiveDefinite));
    }
    let r = l.rank();
    let sv = enumerate_short(l, 2, budget)?;
    let all: Vec<&Vec<i64>> = sv.vectors.iter().collect();
    let generated = all.len() >= r && {
        let f = exactalg::invariant_factors(&vectors_matrix(&all, r));
        f.len() == r && f.iter().all(One::is_one)
    };
    if !generated {
        return Ok(Classification::NotRoot(NotRootReason::NotGenerated { short_vectors: 2 * all.len() }));
    }

    let units: Vec<&Vec<i64>> = sv.with_norm(1).collect();
    let roots: Vec<&Vec<i64>> = sv
        .with_norm(2)
        .filter(|v| units.iter().all(|u| l.inner(u, v).expect("rank checked").is_zero()))
        .collect();

    let mut components = Vec::new();
    for u in &units {
        components.push(RootComponent { root_type: RootType::Z1, generators: vec![(*u).clone()] });
    }

    let mut uf = UnionFind::<usize>::new(roots.len());
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            if !l.inner(roots[i], roots[j]).expect("rank checked").is_zero() {
                uf.union(i, j);
            }
        }
    }
    let labels = uf.into_labeling();
    let mut groups: Vec<Vec<&Vec<i64>>> = Vec::new();
    let mut seen: Vec<Option<usize>> = vec![None; roots.len()];
    for (i, &lab) in labels.iter().enumerate() {
        let slot = match seen[lab] {
            Some(s) => s,
            None => {
                groups.push(Vec::new());
                seen[lab] = Some(groups.len() - 1);
                groups.len() - 1
            }
        };
        groups[slot].push(roots[i]);
    }
    for g in groups {
        let basis = exactalg::row_basis(&vectors_matrix(&g, r));
        let sub = l
            .sublattice(&basis)
            .map_err(|e| RootsError::Inconsistent(format!("component basis: {e}")))?;
        let sig = ComponentSignature {
            rank: basis.rows(),
            unit_vectors: 0,
            roots: 2 * g.len(),
            discriminant: sub.discriminant().clone(),
        };
        let root_type = identify_type(&sig)?;
        components.push(RootComponent { root_type, generators: g.into_iter().cloned().collect() });
    }
    components.sort_by(|a, b| match a.root_type.cmp(&b.root_type) {
        Ordering::Equal => a.generators.cmp(&b.generators),
        o => o,
    });

    let dec = RootDecomposition {
        components,
        unit_vectors: sv.count_with_norm(1),
        roots: sv.count_with_norm(2),
    };
    dec.certify(l)?;
    Ok(Classification::Root(dec))
}

/// Classification of the primitive rescale, which decides similarity to a
/// root lattice.
pub fn similar_to(l: &GramLattice, budget: EnumerationBudget) -> Result<Classification, RootsError> {
    witt_decompose(&l.primitive_rescale(), budget)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lat(rows: &[Vec<i64>]) -> GramLattice {
        GramLattice::from_rows(rows).unwrap()
    }

    fn classify(l: &GramLattice) -> Classification {
        witt_decompose(l, EnumerationBudget::default()).unwrap()
    }

    #[test]
    fn enumerate_examples() {
        let a2 = RootType::A(2).gram();
        assert_eq!(enumerate_short(&a2, 2, EnumerationBudget::default()).unwrap().classes(), 3);
        for n in 1..6 {
            let id = GramLattice::new(IntMatrix::identity(n)).unwrap();
            let sv = enumerate_short(&id, 1, EnumerationBudget::default()).unwrap();
            assert_eq!(sv.classes(), n);
        }
        let p12 = lat(&[vec![2, 0, 1, 0], vec![0, 2, 0, 1], vec![1, 0, 2, 0], vec![0, 1, 0, 2]]);
        let sv = enumerate_short(&p12, 2, EnumerationBudget::default()).unwrap();
        assert_eq!(sv.classes(), 6);
        assert_eq!(sv.count_with_norm(1), 0);
        assert_eq!(sv.count_with_norm(2), 12);
    }

    #[test]
    fn enumerate_rejects_indefinite() {
        let l = lat(&[vec![2, -1], vec![-1, -1]]);
        assert_eq!(enumerate_short(&l, 2, EnumerationBudget::default()), Err(RootsError::NotPositiveDefinite));
    }

    #[test]
    fn budgets_fail_loudly() {
        let e8 = RootType::E8.gram();
        let tight = EnumerationBudget { max_rank: 128, max_nodes: 10 };
        assert_eq!(enumerate_short(&e8, 2, tight), Err(RootsError::BudgetExceeded(10)));
        let small = EnumerationBudget { max_rank: 4, max_nodes: 1000 };
        assert_eq!(enumerate_short(&e8, 2, small), Err(RootsError::RankTooLarge { rank: 8, max: 4 }));
    }

    #[test]
    fn catalog_counts() {
        for t in [RootType::A(1), RootType::A(5), RootType::D(4), RootType::D(6), RootType::E6, RootType::E7, RootType::E8] {
            let g = t.gram();
            assert_eq!(g.discriminant(), &BigInt::from(t.discriminant()), "{t}");
            let sv = enumerate_short(&g, 2, EnumerationBudget::default()).unwrap();
            assert_eq!(sv.count_with_norm(2), t.root_count(), "{t}");
        }
    }

    #[test]
    fn witt_examples() {
        let c = classify(&RootType::A(2).gram());
        assert_eq!(c.decomposition().unwrap().types(), vec![RootType::A(2)]);
        let c = classify(&lat(&[vec![2, 0], vec![0, 2]]));
        assert_eq!(c.decomposition().unwrap().types(), vec![RootType::A(1), RootType::A(1)]);
        assert_eq!(c.summary(), "A1^2");
        let c = classify(&lat(&[vec![4, 0], vec![0, 4]]));
        assert_eq!(c, Classification::NotRoot(NotRootReason::NotGenerated { short_vectors: 0 }));
        let c = classify(&lat(&[vec![2, -1], vec![-1, -1]]));
        assert_eq!(c, Classification::NotRoot(NotRootReason::NotPositiveDefinite));
    }

    #[test]
    fn unit_vectors_split_off() {
        // ℤ³ has norm-2 vectors joining every pair of unit vectors
        let z3 = GramLattice::new(IntMatrix::identity(3)).unwrap();
        let d = classify(&z3);
        assert_eq!(d.decomposition().unwrap().types(), vec![RootType::Z1; 3]);
        let mixed = lat(&[vec![1, 0], vec![0, 2]]);
        assert_eq!(classify(&mixed).summary(), "Z1 + A1");
    }

    #[test]
    fn e_types_and_d_types() {
        for t in [RootType::D(4), RootType::D(5), RootType::E6, RootType::E7, RootType::E8] {
            assert_eq!(classify(&t.gram()).decomposition().unwrap().types(), vec![t]);
        }
    }

    #[test]
    fn generation_failure() {
        // trace form of ℚ(√5): a single root pair
        let l = lat(&[vec![2, 1], vec![1, 3]]);
        assert!(matches!(classify(&l), Classification::NotRoot(NotRootReason::NotGenerated { .. })));
    }

    #[test]
    fn identify_rejects_mismatch() {
        let sig = ComponentSignature { rank: 2, unit_vectors: 0, roots: 6, discriminant: BigInt::from(4) };
        assert!(matches!(identify_type(&sig), Err(RootsError::Inconsistent(_))));
        let sig = ComponentSignature { rank: 8, unit_vectors: 0, roots: 240, discriminant: BigInt::one() };
        assert_eq!(identify_type(&sig).unwrap(), RootType::E8);
        let sig = ComponentSignature { rank: 1, unit_vectors: 2, roots: 0, discriminant: BigInt::one() };
        assert_eq!(identify_type(&sig).unwrap(), RootType::Z1);
        let sig = ComponentSignature { rank: 2, unit_vectors: 0, roots: 6, discriminant: BigInt::from(3) };
        assert_eq!(identify_type(&sig).unwrap(), RootType::A(2));
    }
}
