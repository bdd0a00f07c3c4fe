//! Words of `C_n` acting on the free group `F_n`, used as an independent
//! check that a word is a nontrivial group element.
//!
//! Four conventions are conceivable: two Artin formulas for `s_i` times two
//! ways of composing. [`select_conventions`] tests all four against the
//! defining relations on `F_4`; [`SELECTED`] is the one used everywhere else.

use std::fmt;

use serde::Serialize;

use crate::words::relations::relation_instances;
use crate::words::{Gen, Word};

/// A reduced word in `x_1, ..., x_n`; letter `k` is `x_k`, `-k` is `x_k^-1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord(Vec<i32>);

impl FreeWord {
    pub fn identity() -> Self {
        Self(Vec::new())
    }

    pub fn generator(k: usize) -> Self {
        Self(vec![k as i32])
    }

    /// Builds a word from signed letters and reduces it.
    pub fn from_letters(letters: impl IntoIterator<Item = i32>) -> Self {
        let mut out = Self::identity();
        for l in letters {
            out.push(l);
        }
        out
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn push(&mut self, l: i32) {
        if self.0.last() == Some(&-l) {
            self.0.pop();
        } else {
            self.0.push(l);
        }
    }

    pub fn mul(&self, rhs: &FreeWord) -> FreeWord {
        let mut out = self.clone();
        for &l in &rhs.0 {
            out.push(l);
        }
        out
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord(self.0.iter().rev().map(|l| -l).collect())
    }

    /// Replaces every `x_k` by `images[k - 1]`.
    pub fn substitute(&self, images: &[FreeWord]) -> FreeWord {
        let mut out = FreeWord::identity();
        for &l in &self.0 {
            let img = &images[(l.unsigned_abs() - 1) as usize];
            if l > 0 {
                for &m in &img.0 {
                    out.push(m);
                }
            } else {
                for &m in img.0.iter().rev() {
                    out.push(-m);
                }
            }
        }
        out
    }

    /// Splits `f^-1 x_j f` into `(f, j)` if the word has that shape.
    pub fn as_conjugate(&self) -> Option<(FreeWord, usize)> {
        let len = self.0.len();
        if len.is_multiple_of(2) {
            return None;
        }
        let mid = len / 2;
        let pivot = self.0[mid];
        if pivot < 0 {
            return None;
        }
        let symmetric = (0..mid).all(|t| self.0[t] == -self.0[len - 1 - t]);
        symmetric.then(|| (FreeWord(self.0[mid + 1..].to_vec()), pivot as usize))
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let tokens: Vec<String> = self
            .0
            .iter()
            .map(|&l| {
                if l > 0 {
                    format!("x{l}")
                } else {
                    format!("x{}^-1", -l)
                }
            })
            .collect();
        f.write_str(&tokens.join(" "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ArtinVariant {
    /// `s_i: x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i`
    Standard,
    /// `s_i: x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}`
    Inverse,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Composition {
    /// Images are rewritten letter by letter as the word is read:
    /// `phi_{ug}(x) = phi_u(x)` with every `x_k` replaced by `phi_g(x_k)`.
    Sequential,
    /// `phi_{ug}(x) = phi_g(x)` with every `x_k` replaced by `phi_u(x_k)`.
    Nested,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Convention {
    pub variant: ArtinVariant,
    pub composition: Composition,
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = match self.variant {
            ArtinVariant::Standard => "x_i -> x_i x_(i+1) x_i^-1, x_(i+1) -> x_i",
            ArtinVariant::Inverse => "x_i -> x_(i+1), x_(i+1) -> x_(i+1)^-1 x_i x_(i+1)",
        };
        let c = match self.composition {
            Composition::Sequential => "sequential",
            Composition::Nested => "nested",
        };
        write!(f, "s_i: {v}; {c} composition")
    }
}

pub const ALL_CONVENTIONS: [Convention; 4] = [
    Convention {
        variant: ArtinVariant::Standard,
        composition: Composition::Sequential,
    },
    Convention {
        variant: ArtinVariant::Standard,
        composition: Composition::Nested,
    },
    Convention {
        variant: ArtinVariant::Inverse,
        composition: Composition::Sequential,
    },
    Convention {
        variant: ArtinVariant::Inverse,
        composition: Composition::Nested,
    },
];

/// The convention used by [`apply_word`].
pub const SELECTED: Convention = Convention {
    variant: ArtinVariant::Standard,
    composition: Composition::Sequential,
};

/// An endomorphism of `F_n`, stored as the images of `x_1, ..., x_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Automorphism {
    images: Vec<FreeWord>,
}

impl Automorphism {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (1..=n).map(FreeWord::generator).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(k, w)| w.letters() == [k as i32 + 1])
    }

    /// The conjugating shape `x_i -> f_i^-1 x_{P(i)} f_i` with `P` a
    /// permutation; returns the pairs `(f_i, P(i))`.
    pub fn conjugating_shape(&self) -> Option<Vec<(FreeWord, usize)>> {
        let parts: Vec<(FreeWord, usize)> = self
            .images
            .iter()
            .map(|w| w.as_conjugate())
            .collect::<Option<_>>()?;
        let mut seen = vec![false; self.n()];
        for (_, j) in &parts {
            if *j == 0 || *j > self.n() || std::mem::replace(&mut seen[j - 1], true) {
                return None;
            }
        }
        Some(parts)
    }

    fn compose(&self, g: &Automorphism, composition: Composition) -> Automorphism {
        let images = match composition {
            Composition::Sequential => self
                .images
                .iter()
                .map(|w| w.substitute(&g.images))
                .collect(),
            Composition::Nested => g
                .images
                .iter()
                .map(|w| w.substitute(&self.images))
                .collect(),
        };
        Automorphism { images }
    }
}

impl fmt::Display for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .images
            .iter()
            .enumerate()
            .map(|(k, w)| format!("x{} -> {}", k + 1, w))
            .collect();
        f.write_str(&parts.join(", "))
    }
}

fn simple_generator(g: Gen, n: usize, variant: ArtinVariant) -> Automorphism {
    let mut a = Automorphism::identity(n);
    let (i, inverse) = match g {
        Gen::Alpha(i) => {
            a.images.swap(i - 1, i);
            return a;
        }
        Gen::Sigma(i) => (i, false),
        Gen::SigmaInv(i) => (i, true),
        Gen::T | Gen::TInv => unreachable!("composite letters are expanded first"),
    };
    let (xi, xj) = (i as i32, i as i32 + 1);
    let standard = inverse == (variant == ArtinVariant::Inverse);
    if standard {
        a.images[i - 1] = FreeWord::from_letters([xi, xj, -xi]);
        a.images[i] = FreeWord::generator(i);
    } else {
        a.images[i - 1] = FreeWord::generator(i + 1);
        a.images[i] = FreeWord::from_letters([-xj, xi, xj]);
    }
    a
}

/// The automorphism of a single letter under `conv`.
pub fn artin_generator(g: Gen, n: usize, conv: Convention) -> Automorphism {
    match g {
        Gen::T => apply_letters(&[Gen::Sigma(2), Gen::Alpha(2), Gen::Alpha(1)], n, conv),
        Gen::TInv => apply_letters(&[Gen::Alpha(1), Gen::Alpha(2), Gen::SigmaInv(2)], n, conv),
        _ => simple_generator(g, n, conv.variant),
    }
}

fn apply_letters(letters: &[Gen], n: usize, conv: Convention) -> Automorphism {
    letters.iter().fold(Automorphism::identity(n), |acc, &g| {
        acc.compose(&artin_generator(g, n, conv), conv.composition)
    })
}

/// The automorphism of `w` under the selected convention, letters composed
/// in reading order.
pub fn apply_word(w: &Word) -> Automorphism {
    apply_word_with(w, SELECTED)
}

pub fn apply_word_with(w: &Word, conv: Convention) -> Automorphism {
    apply_letters(w.letters(), w.n(), conv)
}

/// Conventions under which every defining relation of `C_n` holds on `F_n`.
pub fn select_conventions(n: usize) -> Vec<Convention> {
    let relations = relation_instances(n);
    ALL_CONVENTIONS
        .into_iter()
        .filter(|&c| {
            relations
                .iter()
                .all(|r| apply_word_with(&r.lhs, c) == apply_word_with(&r.rhs, c))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_word;

    fn act(s: &str) -> Automorphism {
        apply_word(&parse_word(s, 3).unwrap())
    }

    #[test]
    fn generator_images() {
        assert_eq!(act("s1").images()[0].to_string(), "x1 x2 x1^-1");
        assert_eq!(act("s1").images()[2].to_string(), "x3");
        assert_eq!(act("a2").images()[1].to_string(), "x3");
    }

    #[test]
    fn identity_cases() {
        assert!(act("").is_identity());
        assert!(act("s1 s1^-1").is_identity());
        assert!(act("T T^-1").is_identity());
        assert!(!act("a1").is_identity());
        assert!(act("a1 a2 a1 a2 a1 a2").is_identity());
    }

    #[test]
    fn example_word_is_nontrivial() {
        assert!(!act("a2 T a2 T a2 T a2 T T^-4").is_identity());
    }

    #[test]
    fn conjugate_detection() {
        let w = FreeWord::from_letters([-2, 1, 2]);
        assert_eq!(w.as_conjugate(), Some((FreeWord::generator(2), 1)));
        assert_eq!(FreeWord::from_letters([1, 2]).as_conjugate(), None);
        assert_eq!(FreeWord::from_letters([2, -1, -2]).as_conjugate(), None);
        assert!(act("s1 a2 T^-3 s2").conjugating_shape().is_some());
    }

    #[test]
    fn substitution_reduces() {
        let w = FreeWord::from_letters([1, -1, 2]);
        assert_eq!(w.to_string(), "x2");
        let images = [FreeWord::from_letters([1, 2]), FreeWord::from_letters([-2])];
        assert_eq!(
            FreeWord::from_letters([1, 2])
                .substitute(&images)
                .to_string(),
            "x1"
        );
    }
}
