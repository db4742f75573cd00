//! Independent oracles shared by the integration suites. Nothing here goes
//! through the Smith-form, factorization or enumeration code it checks.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use tracelat::{GramLattice, IntMatrix};

/// Determinant by cofactor expansion along the first row.
pub fn det_cofactor(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    match n {
        0 => BigInt::one(),
        1 => m[0][0].clone(),
        _ => {
            let mut acc = BigInt::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<BigInt>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
                    .collect();
                let term = &m[0][j] * det_cofactor(&minor);
                if j % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = combinations(n - 1, k);
    for mut c in combinations(n - 1, k - 1) {
        c.push(n - 1);
        out.push(c);
    }
    out
}

/// Invariant factors from determinantal divisors: `s_k = d_k / d_{k−1}`,
/// `d_k` the gcd of all k×k minors.
pub fn invariant_factors_by_minors(m: &IntMatrix) -> Vec<BigInt> {
    let rows = m.to_rows();
    let k_max = m.rows().min(m.cols());
    let mut d_prev = BigInt::one();
    let mut out = Vec::new();
    for k in 1..=k_max {
        let mut g = BigInt::zero();
        for rs in combinations(m.rows(), k) {
            for cs in combinations(m.cols(), k) {
                let sub: Vec<Vec<BigInt>> =
                    rs.iter().map(|&r| cs.iter().map(|&c| rows[r][c].clone()).collect()).collect();
                g = g.gcd(&det_cofactor(&sub));
            }
        }
        if g.is_zero() {
            out.extend(std::iter::repeat(BigInt::zero()).take(k_max - k + 1));
            return out;
        }
        out.push(&g / &d_prev);
        d_prev = g;
    }
    out
}

fn norm(g: &[Vec<BigInt>], x: &[i64]) -> BigInt {
    let mut acc = BigInt::zero();
    for i in 0..x.len() {
        for j in 0..x.len() {
            acc += &g[i][j] * x[i] * x[j];
        }
    }
    acc
}

/// All ±-classes of vectors with `1 ≤ b(x,x) ≤ bound`, by scanning the box
/// `|xᵢ| ≤ √(bound·(G⁻¹)ᵢᵢ)`, with `(G⁻¹)ᵢᵢ = cofactorᵢᵢ / det` from cofactor
/// expansion. Representatives have their last nonzero coordinate positive,
/// output sorted lexicographically.
pub fn box_enumerate(l: &GramLattice, bound: u64) -> Vec<(Vec<i64>, u64)> {
    let g = l.gram().to_rows();
    let r = g.len();
    let det = det_cofactor(&g);
    assert!(det.is_positive());
    let radius: Vec<i64> = (0..r)
        .map(|i| {
            let minor: Vec<Vec<BigInt>> = g
                .iter()
                .enumerate()
                .filter(|&(a, _)| a != i)
                .map(|(_, row)| row.iter().enumerate().filter(|&(b, _)| b != i).map(|(_, x)| x.clone()).collect())
                .collect();
            let cof = det_cofactor(&minor);
            // largest t with t²·det ≤ bound·cof
            let rhs = BigInt::from(bound) * cof;
            let mut t = 0i64;
            while BigInt::from((t + 1) * (t + 1)) * &det <= rhs {
                t += 1;
            }
            t
        })
        .collect();
    let mut out = Vec::new();
    let mut x: Vec<i64> = radius.iter().map(|&t| -t).collect();
    loop {
        let last_nz = x.iter().rposition(|&v| v != 0);
        if let Some(p) = last_nz {
            if x[p] > 0 {
                let n = norm(&g, &x);
                if n >= BigInt::one() && n <= BigInt::from(bound) {
                    out.push((x.clone(), n.try_into().unwrap()));
                }
            }
        }
        // odometer
        let mut i = 0;
        loop {
            if i == r {
                out.sort();
                return out;
            }
            if x[i] < radius[i] {
                x[i] += 1;
                break;
            }
            x[i] = -radius[i];
            i += 1;
        }
    }
}

/// Catalog lattices of rank ≤ 4 as Gram matrices of explicit coordinate
/// bases in `ℝᵐ` (standard dot product).
pub fn coordinate_catalog() -> Vec<(&'static str, GramLattice)> {
    fn gram_of(basis: &[Vec<i64>]) -> GramLattice {
        let rows: Vec<Vec<i64>> = basis
            .iter()
            .map(|u| basis.iter().map(|v| u.iter().zip(v).map(|(a, b)| a * b).sum()).collect())
            .collect();
        GramLattice::from_rows(&rows).unwrap()
    }
    // A_n: e_i − e_{i+1} in ℝⁿ⁺¹; D_4: e1−e2, e2−e3, e3−e4, e3+e4
    let a = |n: usize| -> Vec<Vec<i64>> {
        (0..n)
            .map(|i| {
                let mut v = vec![0; n + 1];
                v[i] = 1;
                v[i + 1] = -1;
                v
            })
            .collect()
    };
    let z = |n: usize| -> Vec<Vec<i64>> {
        (0..n)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                v
            })
            .collect()
    };
    vec![
        ("Z1", gram_of(&z(1))),
        ("Z2", gram_of(&z(2))),
        ("Z3", gram_of(&z(3))),
        ("Z4", gram_of(&z(4))),
        ("A1", gram_of(&a(1))),
        ("A2", gram_of(&a(2))),
        ("A3", gram_of(&a(3))),
        ("A4", gram_of(&a(4))),
        ("D4", gram_of(&[vec![1, -1, 0, 0], vec![0, 1, -1, 0], vec![0, 0, 1, -1], vec![0, 0, 1, 1]])),
    ]
}

/// 𝔼₈ from its simple roots in `ℝ⁸`: `½(e₁+e₈−e₂−…−e₇)`, `e₁+e₂` and
/// `e_{i+1}−e_i` for `i = 1…6`. Coordinates are doubled so everything is
/// integral; the Gram matrix is divided by 4.
pub fn e8_from_coordinates() -> GramLattice {
    let mut basis: Vec<Vec<i64>> = vec![vec![1, -1, -1, -1, -1, -1, -1, 1], vec![2, 2, 0, 0, 0, 0, 0, 0]];
    for i in 0..6 {
        let mut v = vec![0; 8];
        v[i + 1] = 2;
        v[i] = -2;
        basis.push(v);
    }
    let rows: Vec<Vec<i64>> = basis
        .iter()
        .map(|u| basis.iter().map(|v| u.iter().zip(v).map(|(a, b)| a * b).sum::<i64>() / 4).collect())
        .collect();
    GramLattice::from_rows(&rows).unwrap()
}

/// Product-basis change of coordinates: row `a·φ(j) + b` holds the power
/// basis coordinates of `ζ_i^a ζ_j^b = ζ_{ij}^{a·j + b·i}`.
pub fn product_basis(i: u64, j: u64) -> IntMatrix {
    let ring = tracelat::CyclotomicRing::new(i * j).unwrap();
    let (ni, nj) = (tracelat::cyclotomic::phi(i) as usize, tracelat::cyclotomic::phi(j) as usize);
    let n = ni * nj;
    let mut rows = Vec::with_capacity(n);
    for a in 0..ni {
        for b in 0..nj {
            let e = ring.zeta_pow((a as u64 * j + b as u64 * i) as i64);
            rows.push(e.coeffs().to_vec());
        }
    }
    IntMatrix::from_rows(&rows).unwrap()
}
