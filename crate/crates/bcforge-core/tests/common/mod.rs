//! Independent oracles for the integration tests. Nothing here calls into
//! the crate's elimination machinery: ranks come from a fraction-free
//! Bareiss elimination over the Gaussian integers, kernels from a separate
//! textbook elimination with back-substitution.

#![allow(dead_code)]

use bcforge_core::matrix::Matrix;
use bcforge_core::scalar::Scalar;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Gaussian integer.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GInt {
    fn zero() -> Self {
        GInt {
            re: BigInt::zero(),
            im: BigInt::zero(),
        }
    }

    fn one() -> Self {
        GInt {
            re: BigInt::one(),
            im: BigInt::zero(),
        }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn mul(&self, o: &GInt) -> GInt {
        GInt {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    fn sub(&self, o: &GInt) -> GInt {
        GInt {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }

    /// Exact division; panics when the quotient is not a Gaussian integer,
    /// which would indicate a broken Bareiss invariant.
    fn div_exact(&self, o: &GInt) -> GInt {
        let norm = &o.re * &o.re + &o.im * &o.im;
        assert!(!norm.is_zero(), "division by zero Gaussian integer");
        let re_num = &self.re * &o.re + &self.im * &o.im;
        let im_num = &self.im * &o.re - &self.re * &o.im;
        assert!((&re_num % &norm).is_zero() && (&im_num % &norm).is_zero(), "inexact division");
        GInt {
            re: re_num / &norm,
            im: im_num / norm,
        }
    }
}

fn lcm(a: &BigInt, b: &BigInt) -> BigInt {
    if a.is_zero() || b.is_zero() {
        return BigInt::one();
    }
    let g = num_integer_gcd(a.clone(), b.clone());
    (a / &g * b).abs()
}

fn num_integer_gcd(mut a: BigInt, mut b: BigInt) -> BigInt {
    a = a.abs();
    b = b.abs();
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

/// Clears denominators row by row (row scaling preserves rank).
fn to_gaussian_integers(m: &Matrix) -> Vec<Vec<GInt>> {
    let mut rows = Vec::with_capacity(m.rows());
    for i in 0..m.rows() {
        let mut scale = BigInt::one();
        for j in 0..m.cols() {
            let s = m.get(i, j);
            scale = lcm(&scale, s.re.denom());
            scale = lcm(&scale, s.im.denom());
        }
        let scale_r = BigRational::from(scale);
        let row: Vec<GInt> = (0..m.cols())
            .map(|j| {
                let s = m.get(i, j);
                let re = &s.re * &scale_r;
                let im = &s.im * &scale_r;
                assert!(re.denom().is_one() && im.denom().is_one());
                GInt {
                    re: re.numer().clone(),
                    im: im.numer().clone(),
                }
            })
            .collect();
        rows.push(row);
    }
    rows
}

/// Rank by fraction-free (Bareiss) elimination over Z[i]: every division is
/// by the previous pivot and is exact.
pub fn oracle_rank(m: &Matrix) -> usize {
    if m.rows() == 0 || m.cols() == 0 {
        return 0;
    }
    let mut a = to_gaussian_integers(m);
    let rows = a.len();
    let cols = a[0].len();
    let mut prev = GInt::one();
    let mut rank = 0usize;
    let mut pivot_row = 0usize;
    for col in 0..cols {
        let Some(pr) = (pivot_row..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(pivot_row, pr);
        let pivot = a[pivot_row][col].clone();
        for r in 0..rows {
            if r == pivot_row {
                continue;
            }
            for c in 0..cols {
                if c == col {
                    continue;
                }
                let num = a[r][c].mul(&pivot).sub(&a[r][col].mul(&a[pivot_row][c]));
                a[r][c] = num.div_exact(&prev);
            }
            a[r][col] = GInt::zero();
        }
        prev = pivot;
        rank += 1;
        pivot_row += 1;
        if pivot_row == rows {
            break;
        }
    }
    rank
}

/// Kernel basis via an independent elimination: forward elimination without
/// pivot normalization, then back-substitution per free column.
pub fn oracle_kernel_basis(m: &Matrix) -> Vec<Vec<Scalar>> {
    let rows = m.rows();
    let cols = m.cols();
    let mut a: Vec<Vec<Scalar>> = (0..rows)
        .map(|i| (0..cols).map(|j| m.get(i, j).clone()).collect())
        .collect();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; cols];
    let mut r = 0usize;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, pr);
        for i in (r + 1)..rows {
            if a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].div(&a[r][c]);
            let pivot_row: Vec<Scalar> = a[r][c..cols].to_vec();
            for (off, pv) in pivot_row.iter().enumerate() {
                let sub = &f * pv;
                a[i][c + off] = &a[i][c + off] - &sub;
            }
        }
        pivot_of_col[c] = Some(r);
        r += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|&c| pivot_of_col[c].is_none()).collect();
    let pivots: Vec<(usize, usize)> = (0..cols)
        .filter_map(|c| pivot_of_col[c].map(|row| (row, c)))
        .collect();
    let mut basis = Vec::new();
    for &fc in &free {
        let mut x = vec![Scalar::zero(); cols];
        x[fc] = Scalar::one();
        // Back-substitute pivot variables from the bottom up.
        for &(row, pc) in pivots.iter().rev() {
            let mut acc = Scalar::zero();
            for j in (pc + 1)..cols {
                if !a[row][j].is_zero() && !x[j].is_zero() {
                    acc += &(&a[row][j] * &x[j]);
                }
            }
            x[pc] = (-acc).div(&a[row][pc]);
        }
        basis.push(x);
    }
    basis
}

/// dim(span(u) + span(w)) from the rank oracle.
pub fn oracle_dim_sum(u: &Matrix, w: &Matrix) -> usize {
    oracle_rank(&u.hstack(w))
}

/// dim(span(u) ∩ span(w)) from the dimension formula.
pub fn oracle_dim_intersection(u: &Matrix, w: &Matrix) -> usize {
    oracle_rank(u) + oracle_rank(w) - oracle_dim_sum(u, w)
}

pub fn random_matrix(seed: u64, rows: usize, cols: usize) -> Matrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Matrix::from_fn(rows, cols, |_, _| {
        Scalar::from_parts(rng.gen_range(-2i64..=2), 1, rng.gen_range(-1i64..=1), 1)
    })
}

pub fn random_vector(seed: u64, len: usize) -> Vec<Scalar> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..len)
        .map(|_| Scalar::from_parts(rng.gen_range(-3i64..=3), 1, rng.gen_range(-2i64..=2), 1))
        .collect()
}

use bcforge_core::models::{FormType, Generator, GeneratorSpec, ModelSpec, OneForm};

/// The Iwasawa nilmanifold complex: full exterior algebra on three
/// holomorphic one-forms with dω3 = −ω1∧ω2, plus the conjugate relation.
pub fn iwasawa_spec() -> ModelSpec {
    let names = ["w1", "w2", "w3", "w̄1", "w̄2", "w̄3"];
    let oneforms: Vec<OneForm> = names
        .iter()
        .enumerate()
        .map(|(i, n)| OneForm {
            name: n.to_string(),
            form_type: if i < 3 { FormType::Holo } else { FormType::Anti },
            partner: (i + 3) % 6,
            differential: match i {
                2 => vec![(Scalar::from_int(-1), 0, 1)],
                5 => vec![(Scalar::from_int(-1), 3, 4)],
                _ => Vec::new(),
            },
        })
        .collect();
    let mut gens = Vec::new();
    for hmask in 0u8..8 {
        for amask in 0u8..8 {
            let hol: Vec<usize> = (0..3).filter(|&i| hmask >> i & 1 == 1).collect();
            let anti: Vec<usize> = (0..3).filter(|&i| amask >> i & 1 == 1).map(|i| i + 3).collect();
            gens.push(Generator {
                weight: Vec::new(),
                hol,
                anti,
            });
        }
    }
    ModelSpec {
        name: "iwasawa".into(),
        pd_dim: 3,
        oneforms,
        coordinates: Vec::new(),
        characters: Vec::new(),
        trivial_weights: vec![Vec::new()],
        generators: GeneratorSpec::Explicit(gens),
    }
}
