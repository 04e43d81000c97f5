//! Linear forms, invertible coordinate changes and seeded generic forms.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::{common_denominator, Rational};
use crate::ring::Ring;

/// Inclusive bound on the absolute value of sampled coefficients.
pub const SAMPLE_RANGE: i64 = 1000;

/// A linear form `Σ a_i x_i` without constant term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearForm {
    coeffs: Vec<Rational>,
}

impl LinearForm {
    pub fn new(coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.iter().all(|c| c.is_zero()) {
            return Err(Error::ZeroForm);
        }
        Ok(LinearForm { coeffs })
    }

    pub fn from_integers(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    /// The coordinate form `x_i`.
    pub fn coordinate(nvars: usize, i: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); nvars];
        coeffs[i] = Rational::one();
        LinearForm { coeffs }
    }

    pub fn from_polynomial(p: &Polynomial) -> Result<Self> {
        let c = p
            .linear_coefficients()
            .ok_or_else(|| Error::NotLinear(alloc::format!("{p}")))?;
        Self::new(c)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn nvars(&self) -> usize {
        self.coeffs.len()
    }

    pub fn to_polynomial(&self, ring: &Ring) -> Result<Polynomial> {
        if ring.nvars() != self.coeffs.len() {
            return Err(Error::PointLength {
                expected: ring.nvars(),
                got: self.coeffs.len(),
            });
        }
        let mut acc = Polynomial::zero(ring);
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = acc.add(&Polynomial::var(ring, i).scale(c))?;
            }
        }
        Ok(acc)
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.coeffs.len() {
            return Err(Error::PointLength {
                expected: self.coeffs.len(),
                got: point.len(),
            });
        }
        Ok(self.coeffs.iter().zip(point).map(|(a, b)| a * b).sum())
    }

    /// Same hyperplane, scaled to coprime integers with positive leading entry.
    pub fn primitive(&self) -> LinearForm {
        let den = common_denominator(&self.coeffs);
        let ints: Vec<Rational> = self
            .coeffs
            .iter()
            .map(|c| c * Rational::from_integer(den.clone()))
            .collect();
        let g = ints.iter().fold(num_bigint::BigInt::zero(), |acc, v| {
            num_integer::Integer::gcd(&acc, v.numer())
        });
        let first = ints.iter().find(|c| !c.is_zero()).expect("nonzero form");
        let mut s = Rational::from_integer(g).recip();
        if first < &Rational::zero() {
            s = -s;
        }
        LinearForm {
            coeffs: ints.iter().map(|c| c * &s).collect(),
        }
    }
}

/// Determinant by fraction-exact Gaussian elimination.
pub fn determinant(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rational::zero();
        };
        if piv != col {
            a.swap(piv, col);
            det = -det;
        }
        let p = a[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &p;
            for c in col..n {
                let v = &f * &a[col][c];
                a[r][c] -= v;
            }
        }
    }
    det
}

/// Reduced row echelon form; returns pivot columns.
pub fn row_reduce(a: &mut [Vec<Rational>]) -> Vec<usize> {
    let rows = a.len();
    let cols = a.first().map(|r| r.len()).unwrap_or(0);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(piv, r);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for k in 0..cols {
                    let v = &f * &a[r][k];
                    a[i][k] -= v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of `{v : A v = 0}` for a matrix given by rows with `ncols` columns.
pub fn kernel(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut a: Vec<Vec<Rational>> = rows.to_vec();
    let pivots = row_reduce(&mut a);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![Rational::zero(); ncols];
            v[fc] = Rational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[r][fc].clone();
            }
            v
        })
        .collect()
}

/// An invertible square matrix acting by `x_i ↦ Σ_j M[i][j] x_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordinateChange {
    matrix: Vec<Vec<Rational>>,
}

impl CoordinateChange {
    pub fn new(matrix: Vec<Vec<Rational>>) -> Result<Self> {
        let n = matrix.len();
        if n == 0 || matrix.iter().any(|r| r.len() != n) || determinant(&matrix).is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(CoordinateChange { matrix })
    }

    pub fn from_integers(rows: &[&[i64]]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rational::from_integer(v.into())).collect())
                .collect(),
        )
    }

    pub fn identity(n: usize) -> Self {
        let matrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                    .collect()
            })
            .collect();
        CoordinateChange { matrix }
    }

    pub fn size(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<Rational>] {
        &self.matrix
    }

    pub fn determinant(&self) -> Rational {
        determinant(&self.matrix)
    }

    pub fn inverse(&self) -> CoordinateChange {
        let n = self.size();
        let mut aug: Vec<Vec<Rational>> = self
            .matrix
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let mut r = row.clone();
                r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
                r
            })
            .collect();
        row_reduce(&mut aug);
        CoordinateChange {
            matrix: aug.into_iter().map(|r| r[n..].to_vec()).collect(),
        }
    }

    /// `f ∘ M`.
    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        let ring = f.ring();
        if ring.nvars() != self.size() {
            return Err(Error::SingularMatrix);
        }
        let images: Vec<Polynomial> = self
            .matrix
            .iter()
            .map(|row| LinearForm { coeffs: row.clone() }.to_polynomial(ring))
            .collect::<Result<_>>()?;
        f.compose(&images, ring)
    }

    /// `M v`: new coordinates `v` to old coordinates.
    pub fn map_point(&self, v: &[Rational]) -> Vec<Rational> {
        self.matrix
            .iter()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// `Mᵀ a`: the form `a` pulled back to new coordinates.
    pub fn pull_back_form(&self, form: &LinearForm) -> LinearForm {
        let n = self.size();
        let coeffs = (0..n)
            .map(|j| (0..n).map(|i| &form.coeffs[i] * &self.matrix[i][j]).sum())
            .collect();
        LinearForm { coeffs }
    }
}

/// Derives an independent seed for sub-computation `tag` (splitmix64 finaliser).
pub fn mix_seed(seed: u64, tag: u64) -> u64 {
    let mut z = seed ^ tag.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn draw_nonzero(rng: &mut ChaCha8Rng) -> i64 {
    let span = (2 * SAMPLE_RANGE + 1) as u32;
    let zone = u32::MAX - u32::MAX % span;
    loop {
        let v = rng.next_u32();
        if v >= zone {
            continue;
        }
        let c = (v % span) as i64 - SAMPLE_RANGE;
        if c != 0 {
            return c;
        }
    }
}

/// Nonzero integer coefficients in `[-SAMPLE_RANGE, SAMPLE_RANGE]`, reproducible
/// from `seed`. With a constraint `p` the coefficient at the last nonzero
/// coordinate of `p` is solved so the form vanishes at `p`; it is zero exactly
/// when `p` is a coordinate point. The result is scaled to primitive integers.
pub fn sample_generic_form(
    nvars: usize,
    seed: u64,
    constraint: Option<&[Rational]>,
) -> Result<LinearForm> {
    if nvars < 2 {
        return Err(Error::VariableIndex { index: nvars, nvars: 2 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let Some(p) = constraint else {
        let c: Vec<i64> = (0..nvars).map(|_| draw_nonzero(&mut rng)).collect();
        return LinearForm::from_integers(&c);
    };
    if p.len() != nvars {
        return Err(Error::PointLength {
            expected: nvars,
            got: p.len(),
        });
    }
    let k = p
        .iter()
        .rposition(|v| !v.is_zero())
        .ok_or(Error::ConstraintUnsatisfiable)?;
    let unit = p.iter().filter(|v| !v.is_zero()).count() == 1;
    for _ in 0..64 {
        let mut c: Vec<Rational> = (0..nvars)
            .map(|_| Rational::from_integer(draw_nonzero(&mut rng).into()))
            .collect();
        let rest: Rational = (0..nvars).filter(|&i| i != k).map(|i| &c[i] * &p[i]).sum();
        c[k] = -rest / &p[k];
        if c[k].is_zero() && !unit {
            continue;
        }
        return Ok(LinearForm { coeffs: c }.primitive());
    }
    Err(Error::ConstraintUnsatisfiable)
}
