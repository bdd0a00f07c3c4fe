//! The representation `rho` of `C_n` on the free module with basis `v_{i,j}`,
//! `1 <= i < j <= n`, ordered lexicographically.

use std::sync::OnceLock;

use num_complex::Complex64;
use num_rational::BigRational;
use serde::Serialize;
use thiserror::Error;

use crate::matrix::{AnyMatrix, Matrix};
use crate::scalar::{LaurentPoly, ModP, Scalar, ScalarError, ScalarMode};
use crate::words::relations::{relation_instances, RelationFamily};
use crate::words::{Gen, Word, WordError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("T is only defined for n = 3")]
    TOnlyForN3,
    #[error("word lives in C_{word} but the context is C_{ctx}")]
    RankMismatch { word: usize, ctx: usize },
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Basis pairs `(i, j)` in lexicographic order, 1-based.
pub fn basis_pairs(n: usize) -> Vec<(usize, usize)> {
    (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect()
}

/// Position of `v_{i,j}` in the lexicographic basis.
pub fn basis_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(1 <= i && i < j && j <= n);
    // pairs with first entry < i, then offset within row i
    (i - 1) * n - (i - 1) * i / 2 + (j - i - 1)
}

pub fn dimension(n: usize) -> usize {
    n * (n - 1) / 2
}

fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
    LaurentPoly::from_terms(terms.iter().copied())
}

/// The symbolic matrix of one generator. `s_i^-1` uses the closed-form
/// inverse of the `s_i` action.
pub fn symbolic_generator(n: usize, g: Gen) -> Result<Matrix<LaurentPoly>, RepError> {
    Word::new(n, vec![g])?;
    match g {
        Gen::T => {
            let w = Word::from_trusted(3, vec![Gen::Sigma(2), Gen::Alpha(2), Gen::Alpha(1)]);
            return Ok(word_product(&w, |g| simple_generator(3, g)));
        }
        Gen::TInv => {
            let w = Word::from_trusted(3, vec![Gen::Alpha(1), Gen::Alpha(2), Gen::SigmaInv(2)]);
            return Ok(word_product(&w, |g| simple_generator(3, g)));
        }
        _ => {}
    }
    Ok(simple_generator(n, g))
}

fn simple_generator(n: usize, g: Gen) -> Matrix<LaurentPoly> {
    let dim = dimension(n);
    let mut m = Matrix::<LaurentPoly>::zero(dim);
    let idx = |a: usize, b: usize| basis_index(n, a, b);
    let one = LaurentPoly::one();
    // q(q-1), 1-q, q, q^2
    let qq1 = lp(&[(2, 1), (1, -1)]);
    let one_minus_q = lp(&[(0, 1), (1, -1)]);
    let q = LaurentPoly::q();
    let q2 = lp(&[(2, 1)]);
    // inverse coefficients: q^-1, 1-q^-1, q^-2-q^-1, q^-2
    let qi = lp(&[(-1, 1)]);
    let one_minus_qi = lp(&[(0, 1), (-1, -1)]);
    let qi2_minus_qi = lp(&[(-2, 1), (-1, -1)]);
    let qi2 = lp(&[(-2, 1)]);

    for (k, l) in basis_pairs(n) {
        let row = idx(k, l);
        let mut set = |a: usize, b: usize, v: &LaurentPoly| m.set(row, idx(a, b), v.clone());
        match g {
            Gen::Alpha(i) => {
                let (a, b) = (swap(k, i), swap(l, i));
                // v_{i,i+1} is fixed; other pairs keep their order under the swap
                let (a, b) = if a < b { (a, b) } else { (b, a) };
                set(a, b, &one);
            }
            Gen::Sigma(i) => {
                if l == i && k < i {
                    set(k, i, &one_minus_q);
                    set(k, i + 1, &q);
                    set(i, i + 1, &qq1);
                } else if l == i + 1 && k < i {
                    set(k, i, &one);
                } else if (k, l) == (i, i + 1) {
                    set(i, i + 1, &q2);
                } else if k == i && l > i + 1 {
                    set(i, i + 1, &qq1);
                    set(i, l, &one_minus_q);
                    set(i + 1, l, &q);
                } else if k == i + 1 {
                    set(i, l, &one);
                } else {
                    set(k, l, &one);
                }
            }
            Gen::SigmaInv(i) => {
                if l == i && k < i {
                    set(k, i + 1, &one);
                } else if l == i + 1 && k < i {
                    set(k, i, &qi);
                    set(k, i + 1, &one_minus_qi);
                    set(i, i + 1, &qi2_minus_qi);
                } else if (k, l) == (i, i + 1) {
                    set(i, i + 1, &qi2);
                } else if k == i && l > i + 1 {
                    set(i + 1, l, &one);
                } else if k == i + 1 {
                    set(i, l, &qi);
                    set(i + 1, l, &one_minus_qi);
                    set(i, i + 1, &qi2_minus_qi);
                } else {
                    set(k, l, &one);
                }
            }
            Gen::T | Gen::TInv => unreachable!("composite letters are built from the others"),
        }
    }
    m
}

fn swap(x: usize, i: usize) -> usize {
    if x == i {
        i + 1
    } else if x == i + 1 {
        i
    } else {
        x
    }
}

fn word_product<S: Scalar>(w: &Word, mut gen: impl FnMut(Gen) -> Matrix<S>) -> Matrix<S> {
    let dim = dimension(w.n());
    w.letters().iter().fold(Matrix::identity(dim), |acc, &g| {
        acc.mul(&gen(g)).expect("generators share the dimension")
    })
}

fn slot(n: usize, g: Gen) -> usize {
    let m = n - 1;
    match g {
        Gen::Sigma(i) => i - 1,
        Gen::SigmaInv(i) => m + i - 1,
        Gen::Alpha(i) => 2 * m + i - 1,
        Gen::T => 3 * m,
        Gen::TInv => 3 * m + 1,
    }
}

fn all_gens(n: usize) -> Vec<Gen> {
    let mut out: Vec<Gen> = (1..n)
        .flat_map(|i| [Gen::Sigma(i), Gen::SigmaInv(i), Gen::Alpha(i)])
        .collect();
    if n == 3 {
        out.extend([Gen::T, Gen::TInv]);
    }
    out
}

/// Generator matrices over one scalar type, built once.
#[derive(Clone)]
pub struct GeneratorTable<S> {
    n: usize,
    mats: Vec<Option<Matrix<S>>>,
}

impl<S: Scalar> std::fmt::Debug for GeneratorTable<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GeneratorTable(n = {})", self.n)
    }
}

impl<S: Scalar> GeneratorTable<S> {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, g: Gen) -> &Matrix<S> {
        self.mats[slot(self.n, g)]
            .as_ref()
            .expect("letter validated against this rank")
    }

    /// The ordered product of generator matrices, leftmost letter first.
    pub fn word(&self, w: &Word) -> Matrix<S> {
        assert_eq!(w.n(), self.n, "word rank differs from table rank");
        word_product(w, |g| self.get(g).clone())
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&Matrix<S>) -> Matrix<T>) -> GeneratorTable<T> {
        GeneratorTable {
            n: self.n,
            mats: self.mats.iter().map(|m| m.as_ref().map(&f)).collect(),
        }
    }
}

impl GeneratorTable<LaurentPoly> {
    pub fn symbolic(n: usize) -> Result<Self, RepError> {
        if n < 2 {
            return Err(WordError::BadRank(n).into());
        }
        let mut mats = vec![None; 3 * (n - 1) + 2];
        for g in all_gens(n) {
            mats[slot(n, g)] = Some(symbolic_generator(n, g)?);
        }
        Ok(Self { n, mats })
    }

    pub fn rational(&self, q: &BigRational) -> Result<GeneratorTable<BigRational>, ScalarError> {
        let mats = self
            .mats
            .iter()
            .map(|m| m.as_ref().map(|m| m.eval_rational(q)).transpose())
            .collect::<Result<_, _>>()?;
        Ok(GeneratorTable { n: self.n, mats })
    }

    pub fn complex(&self, q: Complex64) -> Result<GeneratorTable<Complex64>, ScalarError> {
        let mats = self
            .mats
            .iter()
            .map(|m| m.as_ref().map(|m| m.eval_complex(q)).transpose())
            .collect::<Result<_, _>>()?;
        Ok(GeneratorTable { n: self.n, mats })
    }

    pub fn modp(&self, q: ModP) -> Option<GeneratorTable<ModP>> {
        let mats = self
            .mats
            .iter()
            .map(|m| match m {
                Some(m) => m.eval_modp(q).map(Some),
                None => Some(None),
            })
            .collect::<Option<_>>()?;
        Some(GeneratorTable { n: self.n, mats })
    }
}

/// Shared symbolic table for `C_3`.
pub fn c3_table() -> &'static GeneratorTable<LaurentPoly> {
    static TABLE: OnceLock<GeneratorTable<LaurentPoly>> = OnceLock::new();
    TABLE.get_or_init(|| GeneratorTable::symbolic(3).expect("n = 3 is valid"))
}

/// Symbolic `rho(w)`. Words in `C_3` reuse the shared table.
pub fn symbolic_word_matrix(w: &Word) -> Matrix<LaurentPoly> {
    if w.n() == 3 {
        c3_table().word(w)
    } else {
        GeneratorTable::symbolic(w.n())
            .expect("word rank was validated on construction")
            .word(w)
    }
}

#[derive(Debug, Clone)]
enum AnyTable {
    Symbolic(GeneratorTable<LaurentPoly>),
    Rational(GeneratorTable<BigRational>),
    Complex(GeneratorTable<Complex64>),
}

/// A rank and a scalar mode, with generator matrices cached at construction.
#[derive(Debug, Clone)]
pub struct RepContext {
    n: usize,
    mode: ScalarMode,
    table: AnyTable,
}

impl RepContext {
    pub fn new(n: usize, mode: ScalarMode) -> Result<Self, RepError> {
        let sym = if n == 3 {
            c3_table().clone()
        } else {
            GeneratorTable::symbolic(n)?
        };
        let table = match &mode {
            ScalarMode::Symbolic => AnyTable::Symbolic(sym),
            ScalarMode::Rational(q) => AnyTable::Rational(sym.rational(q)?),
            ScalarMode::Complex(q) => AnyTable::Complex(sym.complex(*q)?),
        };
        Ok(Self { n, mode, table })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mode(&self) -> &ScalarMode {
        &self.mode
    }

    pub fn generator_matrix(&self, g: Gen) -> Result<AnyMatrix, RepError> {
        if matches!(g, Gen::T | Gen::TInv) && self.n != 3 {
            return Err(RepError::TOnlyForN3);
        }
        Word::new(self.n, vec![g])?;
        Ok(match &self.table {
            AnyTable::Symbolic(t) => AnyMatrix::Symbolic(t.get(g).clone()),
            AnyTable::Rational(t) => AnyMatrix::Rational(t.get(g).clone()),
            AnyTable::Complex(t) => AnyMatrix::Complex(t.get(g).clone()),
        })
    }

    pub fn rep_word(&self, w: &Word) -> Result<AnyMatrix, RepError> {
        if w.n() != self.n {
            return Err(RepError::RankMismatch {
                word: w.n(),
                ctx: self.n,
            });
        }
        Ok(match &self.table {
            AnyTable::Symbolic(t) => AnyMatrix::Symbolic(t.word(w)),
            AnyTable::Rational(t) => AnyMatrix::Rational(t.word(w)),
            AnyTable::Complex(t) => AnyMatrix::Complex(t.word(w)),
        })
    }
}

/// `(-1)^sign * q^exp`: the determinant predicted from letter counts alone.
///
/// `det rho(s_i) = (-1)^{n-2} q^n`, `det rho(a_i) = (-1)^{n-2}` and
/// `det rho(T) = -q^3`, so for `C_3` this is
/// `(-1)^{a_1 + a_2 + t - i} q^{3(t - i)}` on `T`/alpha words and
/// `(-1)^{a + s} q^{3e}` on sigma/alpha words.
pub fn predicted_det(w: &Word) -> LaurentPoly {
    let c = w.gen_counts();
    let n = w.n() as i64;
    let sign = (n - 2) * (c.alpha_total + c.sigma_count) as i64 + (c.t + c.t_inv) as i64;
    let exp = n * c.sigma_exponent_sum + 3 * (c.t as i64 - c.t_inv as i64);
    let coeff = if sign % 2 == 0 { 1 } else { -1 };
    LaurentPoly::monomial(coeff, exp)
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationCheck {
    pub family: RelationFamily,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationReport {
    pub n: usize,
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn families_covered(&self) -> Vec<RelationFamily> {
        let mut f: Vec<RelationFamily> = self.checks.iter().map(|c| c.family).collect();
        f.sort();
        f.dedup();
        f
    }
}

/// Checks every relation instance as an exact symbolic matrix identity.
pub fn verify_relations(n: usize) -> Result<RelationReport, RepError> {
    let table = if n == 3 {
        c3_table().clone()
    } else {
        GeneratorTable::symbolic(n)?
    };
    let checks = relation_instances(n)
        .into_iter()
        .map(|r| RelationCheck {
            family: r.family,
            holds: table.word(&r.lhs) == table.word(&r.rhs),
            lhs: r.lhs.to_string(),
            rhs: r.rhs.to_string(),
        })
        .collect();
    Ok(RelationReport { n, checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_word;

    fn rows(m: &Matrix<LaurentPoly>) -> Vec<Vec<String>> {
        m.to_string_rows()
    }

    fn sym(s: &str) -> Matrix<LaurentPoly> {
        symbolic_word_matrix(&parse_word(s, 3).unwrap())
    }

    #[test]
    fn basis_order() {
        assert_eq!(
            basis_pairs(4),
            vec![(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
        );
        for n in 2..7 {
            for (pos, (i, j)) in basis_pairs(n).into_iter().enumerate() {
                assert_eq!(basis_index(n, i, j), pos);
            }
        }
    }

    #[test]
    fn printed_generators_n3() {
        assert_eq!(
            rows(&sym("s1")),
            [
                ["q^2", "0", "0"],
                ["-q + q^2", "1 - q", "q"],
                ["0", "1", "0"]
            ]
        );
        assert_eq!(
            rows(&sym("s2")),
            [
                ["1 - q", "q", "-q + q^2"],
                ["1", "0", "0"],
                ["0", "0", "q^2"]
            ]
        );
        assert_eq!(
            rows(&sym("a1")),
            [["1", "0", "0"], ["0", "0", "1"], ["0", "1", "0"]]
        );
        assert_eq!(
            rows(&sym("a2")),
            [["0", "1", "0"], ["1", "0", "0"], ["0", "0", "1"]]
        );
        assert_eq!(
            rows(&sym("T")),
            [
                ["q", "-q + q^2", "1 - q"],
                ["0", "0", "1"],
                ["0", "q^2", "0"]
            ]
        );
    }

    #[test]
    fn alpha3_on_v13_at_n4() {
        let m = symbolic_generator(4, Gen::Alpha(3)).unwrap();
        let row = basis_index(4, 1, 3);
        for c in 0..6 {
            let expect = c == basis_index(4, 1, 4);
            assert_eq!(m.get(row, c).is_one(), expect);
            assert_eq!(m.get(row, c).is_zero(), !expect);
        }
    }

    #[test]
    fn sigma_inverse_is_inverse() {
        for n in 2..=6 {
            for i in 1..n {
                let a = symbolic_generator(n, Gen::Sigma(i)).unwrap();
                let b = symbolic_generator(n, Gen::SigmaInv(i)).unwrap();
                assert!(a.mul(&b).unwrap().is_identity(), "n={n} i={i}");
                assert!(b.mul(&a).unwrap().is_identity(), "n={n} i={i}");
            }
        }
        assert!(sym("T T^-1").is_identity());
    }

    #[test]
    fn errors() {
        assert!(matches!(
            symbolic_generator(3, Gen::Sigma(3)),
            Err(RepError::Word(_))
        ));
        let ctx = RepContext::new(4, ScalarMode::Symbolic).unwrap();
        assert_eq!(ctx.generator_matrix(Gen::T), Err(RepError::TOnlyForN3));
        let w = parse_word("a1", 3).unwrap();
        assert_eq!(
            ctx.rep_word(&w),
            Err(RepError::RankMismatch { word: 3, ctx: 4 })
        );
    }

    #[test]
    fn determinants_of_generators() {
        for n in 2..=5 {
            for i in 1..n {
                let s = symbolic_generator(n, Gen::Sigma(i)).unwrap();
                let w = Word::new(n, vec![Gen::Sigma(i)]).unwrap();
                assert_eq!(s.det(), predicted_det(&w));
                let a = symbolic_generator(n, Gen::Alpha(i)).unwrap();
                let w = Word::new(n, vec![Gen::Alpha(i)]).unwrap();
                assert_eq!(a.det(), predicted_det(&w));
            }
        }
        assert_eq!(sym("s1").det().to_string(), "-q^3");
        assert_eq!(sym("a2").det().to_string(), "-1");
    }

    #[test]
    fn relations_small_ranks() {
        for n in 3..=5 {
            let r = verify_relations(n).unwrap();
            assert!(r.all_hold(), "n={n}");
        }
    }
}
