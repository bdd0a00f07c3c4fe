//! Dense square matrices over any [`Scalar`].
//!
//! Row `r` of a representation matrix is the image of basis vector `e_r`, and
//! products compose left to right: the matrix of `uv` is `M(u) * M(v)`.

use std::fmt;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::scalar::{format_complex, LaurentPoly, ModP, Scalar, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("dimension mismatch: {0} vs {1}")]
    DimMismatch(usize, usize),
    #[error("scalar modes differ")]
    ModeMismatch,
    #[error("operation only supported for dimension 3, got {0}")]
    UnsupportedDim(usize),
    #[error("rows do not form a square matrix")]
    NotSquare,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[derive(Clone, PartialEq)]
pub struct Matrix<S> {
    dim: usize,
    entries: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn identity(dim: usize) -> Self {
        Self::scalar(dim, S::one())
    }

    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![S::zero(); dim * dim],
        }
    }

    pub fn scalar(dim: usize, value: S) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = value.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self, MatrixError> {
        let dim = rows.len();
        if dim == 0 || rows.iter().any(|r| r.len() != dim) {
            return Err(MatrixError::NotSquare);
        }
        Ok(Self {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &S {
        &self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: S) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[S]> {
        self.entries.chunks(self.dim)
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Matrix<T> {
        Matrix {
            dim: self.dim,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn try_map<T: Scalar, E>(&self, f: impl Fn(&S) -> Result<T, E>) -> Result<Matrix<T>, E> {
        Ok(Matrix {
            dim: self.dim,
            entries: self.entries.iter().map(f).collect::<Result<_, _>>()?,
        })
    }

    pub fn scale(&self, c: &S) -> Self {
        self.map(|x| x.mul(c))
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, MatrixError> {
        self.check_dim(rhs)?;
        Ok(Self {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a.add(b))
                .collect(),
        })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, MatrixError> {
        self.check_dim(rhs)?;
        Ok(Self {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a.sub(b))
                .collect(),
        })
    }

    fn check_dim(&self, rhs: &Self) -> Result<(), MatrixError> {
        if self.dim != rhs.dim {
            return Err(MatrixError::DimMismatch(self.dim, rhs.dim));
        }
        Ok(())
    }

    /// Standard product. Zero entries are skipped, which makes products with
    /// the sparse generator matrices cheap.
    pub fn mul(&self, rhs: &Self) -> Result<Self, MatrixError> {
        self.check_dim(rhs)?;
        let n = self.dim;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &rhs.entries[k * n + j];
                    if b.is_zero() {
                        continue;
                    }
                    let slot = &mut out.entries[i * n + j];
                    *slot = slot.add(&a.mul(b));
                }
            }
        }
        Ok(out)
    }

    /// `self^exp` for `exp >= 0`.
    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::identity(self.dim);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same dimension");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same dimension");
            }
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().enumerate().all(|(idx, x)| {
            if idx / self.dim == idx % self.dim {
                x.is_one()
            } else {
                x.is_zero()
            }
        })
    }

    pub fn trace(&self) -> S {
        (0..self.dim).fold(S::zero(), |acc, i| acc.add(self.get(i, i)))
    }

    /// Exact determinant: cofactor expansion up to dimension 4, fraction-free
    /// (Bareiss) elimination above.
    pub fn det(&self) -> S {
        if self.dim <= 4 {
            cofactor_det(&self.entries, self.dim)
        } else {
            bareiss_det(self)
        }
    }

    /// Characteristic polynomial of a 3x3 matrix.
    pub fn char_poly(&self) -> Result<CharPoly<S>, MatrixError> {
        if self.dim != 3 {
            return Err(MatrixError::UnsupportedDim(self.dim));
        }
        let m = |i: usize, j: usize| self.get(i, j);
        let minor = |i: usize, j: usize| m(i, i).mul(m(j, j)).sub(&m(i, j).mul(m(j, i)));
        Ok(CharPoly {
            trace: self.trace(),
            minor_sum: minor(0, 1).add(&minor(0, 2)).add(&minor(1, 2)),
            det: self.det(),
        })
    }

    /// Row-major text rendering, one bracketed row per line.
    pub fn render(&self) -> String {
        self.rows()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect::<Vec<_>>()
            .join("\n")
    }

    /// Array-of-arrays of rendered entries, for JSON output.
    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        self.rows()
            .map(|r| r.iter().map(|x| x.to_string()).collect())
            .collect()
    }
}

fn cofactor_det<S: Scalar>(entries: &[S], n: usize) -> S {
    match n {
        0 => S::one(),
        1 => entries[0].clone(),
        2 => entries[0]
            .mul(&entries[3])
            .sub(&entries[1].mul(&entries[2])),
        _ => {
            let mut acc = S::zero();
            for col in 0..n {
                let a = &entries[col];
                if a.is_zero() {
                    continue;
                }
                let minor: Vec<S> = (1..n)
                    .flat_map(|r| {
                        (0..n)
                            .filter(move |&c| c != col)
                            .map(move |c| entries[r * n + c].clone())
                    })
                    .collect();
                let term = a.mul(&cofactor_det(&minor, n - 1));
                acc = if col % 2 == 0 {
                    acc.add(&term)
                } else {
                    acc.sub(&term)
                };
            }
            acc
        }
    }
}

fn bareiss_det<S: Scalar>(m: &Matrix<S>) -> S {
    let n = m.dim;
    let mut a: Vec<Vec<S>> = m.rows().map(|r| r.to_vec()).collect();
    let mut sign_flip = false;
    let mut prev = S::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign_flip = !sign_flip;
                }
                None => return S::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = num
                    .exact_div(&prev)
                    .expect("Bareiss quotients are exact in an integral domain");
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign_flip {
        d.neg()
    } else {
        d
    }
}

/// `lambda^3 - trace*lambda^2 + minor_sum*lambda - det`.
#[derive(Debug, Clone, PartialEq)]
pub struct CharPoly<S> {
    pub trace: S,
    pub minor_sum: S,
    pub det: S,
}

impl<S: Scalar> CharPoly<S> {
    /// Coefficients from `lambda^3` down to the constant term.
    pub fn coefficients(&self) -> [S; 4] {
        [
            S::one(),
            self.trace.neg(),
            self.minor_sum.clone(),
            self.det.neg(),
        ]
    }

    /// Evaluates the polynomial at a matrix; Cayley-Hamilton says the result
    /// is zero for the matrix it came from.
    pub fn eval_matrix(&self, m: &Matrix<S>) -> Result<Matrix<S>, MatrixError> {
        let m2 = m.mul(m)?;
        let m3 = m2.mul(m)?;
        m3.sub(&m2.scale(&self.trace))?
            .add(&m.scale(&self.minor_sum))?
            .sub(&Matrix::scalar(m.dim(), self.det.clone()))
    }
}

impl<S: Scalar> fmt::Display for CharPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "l^3 - ({})*l^2 + ({})*l - ({})",
            self.trace, self.minor_sum, self.det
        )
    }
}

impl<S: Scalar> fmt::Display for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<S: Scalar> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix{:?}", self.to_string_rows())
    }
}

impl Matrix<LaurentPoly> {
    pub fn eval_rational(&self, q: &BigRational) -> Result<Matrix<BigRational>, ScalarError> {
        self.try_map(|p| p.eval_rational(q))
    }

    pub fn eval_complex(&self, q: Complex64) -> Result<Matrix<Complex64>, ScalarError> {
        self.try_map(|p| p.eval_complex(q))
    }

    pub fn eval_modp(&self, q: ModP) -> Option<Matrix<ModP>> {
        self.try_map(|p| ModP::eval(p, q).ok_or(())).ok()
    }
}

impl Matrix<BigRational> {
    pub fn to_complex(&self) -> Matrix<Complex64> {
        self.map(|r| {
            Complex64::new(
                r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN),
                0.0,
            )
        })
    }
}

impl Matrix<Complex64> {
    /// Entrywise comparison with the identity.
    pub fn is_identity_within(&self, tol: f64) -> bool {
        self.rows().enumerate().all(|(i, r)| {
            r.iter().enumerate().all(|(j, x)| {
                let target = if i == j { 1.0 } else { 0.0 };
                (x - Complex64::new(target, 0.0)).norm() <= tol
            })
        })
    }

    pub fn render_complex(&self) -> Vec<Vec<String>> {
        self.rows()
            .map(|r| r.iter().map(|z| format_complex(*z)).collect())
            .collect()
    }

    /// The three eigenvalues of a 3x3 matrix, as a multiset in no particular
    /// order.
    ///
    /// The matrix is first shifted by `trace/3`, so the depressed cubic comes
    /// from the shifted matrix directly. This keeps near-scalar matrices such
    /// as `q^2 I` accurate. Cardano's formula gives starting values, which a
    /// few Newton steps on the unshifted polynomial then polish. A close
    /// pair next to a well separated third root is recomputed from the
    /// deflated quadratic (see [`split_double_root`]).
    pub fn eigenvalues(&self) -> Result<[Complex64; 3], MatrixError> {
        if self.dim != 3 {
            return Err(MatrixError::UnsupportedDim(self.dim));
        }
        let shift = self.trace() / 3.0;
        let b = self.sub(&Matrix::scalar(3, shift)).expect("same dimension");
        let cp = b.char_poly()?;
        // mu^3 + p mu + r with the residual trace ignored
        let roots = depressed_cubic_roots(cp.minor_sum, -cp.det);
        let full = self.char_poly()?;
        let polished = roots.map(|mu| polish_root(&full, mu + shift));
        Ok(split_double_root(&full, polished))
    }
}

fn depressed_cubic_roots(p: Complex64, r: Complex64) -> [Complex64; 3] {
    let zero = Complex64::new(0.0, 0.0);
    let disc = (r * r / 4.0 + p * p * p / 27.0).sqrt();
    let (c1, c2) = (-r / 2.0 + disc, -r / 2.0 - disc);
    let c = if c1.norm() >= c2.norm() { c1 } else { c2 };
    if c.norm() == 0.0 {
        // p = r = 0: triple root at the shift
        return [zero; 3];
    }
    let u = c.powf(1.0 / 3.0);
    let omega = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
    let mut out = [zero; 3];
    let mut uk = u;
    for slot in &mut out {
        *slot = uk - p / (3.0 * uk);
        uk *= omega;
    }
    out
}

/// Newton steps converge only linearly on a double root, leaving each copy
/// about `sqrt(eps)` off in opposite directions that need not cancel. When
/// two roots sit much closer to each other than to the third, the pair is
/// replaced by the roots of the quadratic left after dividing out the
/// third, whose sum and product are then exact to rounding.
fn split_double_root(cp: &CharPoly<Complex64>, roots: [Complex64; 3]) -> [Complex64; 3] {
    let scale = roots.iter().map(|z| z.norm()).fold(1.0, f64::max);
    let close = 1e-5 * scale;
    for lone in 0..3 {
        let (i, j) = ((lone + 1) % 3, (lone + 2) % 3);
        let pair_gap = (roots[i] - roots[j]).norm();
        let apart = (roots[lone] - roots[i])
            .norm()
            .min((roots[lone] - roots[j]).norm());
        if pair_gap <= close && apart > 100.0 * close {
            let first = roots[lone];
            let s = cp.trace - first;
            let prod = cp.minor_sum - first * s;
            let root = (s * s - 4.0 * prod).sqrt();
            let big = if (s + root).norm() >= (s - root).norm() {
                (s + root) / 2.0
            } else {
                (s - root) / 2.0
            };
            let small = if big.norm() == 0.0 { big } else { prod / big };
            return [first, big, small];
        }
    }
    roots
}

fn polish_root(cp: &CharPoly<Complex64>, start: Complex64) -> Complex64 {
    let f = |x: Complex64| ((x - cp.trace) * x + cp.minor_sum) * x - cp.det;
    let df = |x: Complex64| (3.0 * x - 2.0 * cp.trace) * x + cp.minor_sum;
    let mut x = start;
    let mut fx = f(x).norm();
    for _ in 0..8 {
        let d = df(x);
        if d.norm() == 0.0 || fx == 0.0 {
            break;
        }
        let next = x - f(x) / d;
        let fn_ = f(next).norm();
        // also stops on NaN
        if fn_.partial_cmp(&fx) != Some(std::cmp::Ordering::Less) {
            break;
        }
        x = next;
        fx = fn_;
    }
    x
}

/// Distance between two 3-element multisets: the best matching's largest
/// error, each term relative to `max(1, |expected|)`.
pub fn multiset_distance(got: &[Complex64; 3], expected: &[Complex64; 3]) -> f64 {
    const PERMS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    PERMS
        .iter()
        .map(|p| {
            (0..3)
                .map(|i| (got[i] - expected[p[i]]).norm() / expected[p[i]].norm().max(1.0))
                .fold(0.0, f64::max)
        })
        .fold(f64::INFINITY, f64::min)
}

/// A matrix in whichever mode the caller picked at run time.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyMatrix {
    Symbolic(Matrix<LaurentPoly>),
    Rational(Matrix<BigRational>),
    Complex(Matrix<Complex64>),
}

impl AnyMatrix {
    pub fn dim(&self) -> usize {
        match self {
            Self::Symbolic(m) => m.dim(),
            Self::Rational(m) => m.dim(),
            Self::Complex(m) => m.dim(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, MatrixError> {
        match (self, rhs) {
            (Self::Symbolic(a), Self::Symbolic(b)) => a.mul(b).map(Self::Symbolic),
            (Self::Rational(a), Self::Rational(b)) => a.mul(b).map(Self::Rational),
            (Self::Complex(a), Self::Complex(b)) => a.mul(b).map(Self::Complex),
            _ => Err(MatrixError::ModeMismatch),
        }
    }

    pub fn render(&self) -> String {
        match self {
            Self::Symbolic(m) => m.render(),
            Self::Rational(m) => m.render(),
            Self::Complex(m) => m.render(),
        }
    }

    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        match self {
            Self::Symbolic(m) => m.to_string_rows(),
            Self::Rational(m) => m.to_string_rows(),
            Self::Complex(m) => m.render_complex(),
        }
    }

    pub fn det_string(&self) -> String {
        match self {
            Self::Symbolic(m) => m.det().to_string(),
            Self::Rational(m) => m.det().to_string(),
            Self::Complex(m) => format_complex(m.det()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    fn int_matrix(rows: &[[i64; 3]]) -> Matrix<LaurentPoly> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| LaurentPoly::constant(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn identity_is_neutral() {
        let m = int_matrix(&[[1, 2, 3], [4, 5, 6], [7, 8, 10]]);
        let i = Matrix::identity(3);
        assert_eq!(i.mul(&m).unwrap(), m);
        assert_eq!(m.mul(&i).unwrap(), m);
        assert_eq!(i.det(), LaurentPoly::one());
    }

    #[test]
    fn dim_mismatch() {
        let a = Matrix::<LaurentPoly>::identity(3);
        let b = Matrix::<LaurentPoly>::identity(2);
        assert_eq!(a.mul(&b), Err(MatrixError::DimMismatch(3, 2)));
        let r = AnyMatrix::Rational(Matrix::identity(3));
        assert_eq!(
            AnyMatrix::Symbolic(a).mul(&r),
            Err(MatrixError::ModeMismatch)
        );
    }

    #[test]
    fn not_square() {
        let rows = vec![vec![LaurentPoly::one(), LaurentPoly::zero()]];
        assert_eq!(Matrix::from_rows(rows), Err(MatrixError::NotSquare));
    }

    #[test]
    fn bareiss_agrees_with_cofactor() {
        // 5x5 symbolic matrix with a zero leading pivot to exercise row swaps.
        let q = LaurentPoly::q();
        let mut rows = vec![vec![LaurentPoly::zero(); 5]; 5];
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                if i == 0 && j == 0 {
                    continue;
                }
                *x = &q.pow(((i * 3 + j * 7) % 4) as u32)
                    + &LaurentPoly::constant((i as i64) - (j as i64));
            }
        }
        let m = Matrix::from_rows(rows).unwrap();
        assert_eq!(bareiss_det(&m), cofactor_det(&m.entries, 5));
    }

    #[test]
    fn char_poly_identity() {
        let cp = Matrix::<LaurentPoly>::identity(3).char_poly().unwrap();
        let c: Vec<String> = cp.coefficients().iter().map(|x| x.to_string()).collect();
        assert_eq!(c, ["1", "-3", "3", "-1"]);
        assert_eq!(
            Matrix::<LaurentPoly>::identity(2).char_poly(),
            Err(MatrixError::UnsupportedDim(2))
        );
    }

    #[test]
    fn cayley_hamilton_small() {
        let m = Matrix::from_rows(vec![
            vec![lp(&[(1, 1)]), lp(&[(0, 2)]), lp(&[(-1, 1)])],
            vec![lp(&[]), lp(&[(2, -1), (0, 1)]), lp(&[(0, 3)])],
            vec![lp(&[(0, 1)]), lp(&[(1, 1)]), lp(&[])],
        ])
        .unwrap();
        let cp = m.char_poly().unwrap();
        let z = cp.eval_matrix(&m).unwrap();
        assert!(z.entries.iter().all(|x| x.is_zero()));
    }

    #[test]
    fn pow_zero_is_identity() {
        let m = int_matrix(&[[0, 1, 0], [1, 0, 0], [0, 0, 1]]);
        assert!(m.pow(0).is_identity());
        assert!(m.pow(2).is_identity());
        assert!(!m.pow(3).is_identity());
    }
}
