//! The subgroup of `C_3` generated by `a1` and `a2`, a copy of `S_3`.

use std::collections::VecDeque;
use std::fmt;
use std::ops::Mul;

use serde::Serialize;

use super::{Gen, Word};
use crate::matrix::Matrix;
use crate::rep::symbolic_word_matrix;
use crate::scalar::LaurentPoly;

/// An element of the alpha subgroup, named by its shortest word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum AlphaElem {
    Id,
    A1,
    A2,
    A1A2,
    A2A1,
    A1A2A1,
}

impl AlphaElem {
    pub const NONTRIVIAL: [AlphaElem; 5] = [
        AlphaElem::A1,
        AlphaElem::A2,
        AlphaElem::A1A2,
        AlphaElem::A2A1,
        AlphaElem::A1A2A1,
    ];

    const ALL: [AlphaElem; 6] = [
        AlphaElem::Id,
        AlphaElem::A1,
        AlphaElem::A2,
        AlphaElem::A1A2,
        AlphaElem::A2A1,
        AlphaElem::A1A2A1,
    ];

    pub fn letters(self) -> &'static [Gen] {
        use Gen::Alpha;
        match self {
            AlphaElem::Id => &[],
            AlphaElem::A1 => &[Alpha(1)],
            AlphaElem::A2 => &[Alpha(2)],
            AlphaElem::A1A2 => &[Alpha(1), Alpha(2)],
            AlphaElem::A2A1 => &[Alpha(2), Alpha(1)],
            AlphaElem::A1A2A1 => &[Alpha(1), Alpha(2), Alpha(1)],
        }
    }

    pub fn word(self) -> Word {
        Word::from_trusted(3, self.letters().to_vec())
    }

    pub fn length(self) -> usize {
        self.letters().len()
    }

    /// Row `r` of the permutation matrix has its 1 in column `perm()[r]`.
    fn perm(self) -> [usize; 3] {
        self.letters().iter().fold([0, 1, 2], |p, g| {
            let s = gen_perm(*g);
            [s[p[0]], s[p[1]], s[p[2]]]
        })
    }

    fn from_perm(p: [usize; 3]) -> Self {
        *Self::ALL
            .iter()
            .find(|e| e.perm() == p)
            .expect("every permutation of three points is listed")
    }

    pub fn inverse(self) -> Self {
        let p = self.perm();
        let mut inv = [0; 3];
        for (r, &c) in p.iter().enumerate() {
            inv[c] = r;
        }
        Self::from_perm(inv)
    }

    /// The element represented by a word in `a1`, `a2`; `None` if another
    /// letter occurs.
    pub fn from_letters(letters: &[Gen]) -> Option<Self> {
        letters.iter().try_fold(AlphaElem::Id, |acc, g| match g {
            Gen::Alpha(1) => Some(acc * AlphaElem::A1),
            Gen::Alpha(2) => Some(acc * AlphaElem::A2),
            _ => None,
        })
    }
}

fn gen_perm(g: Gen) -> [usize; 3] {
    match g {
        Gen::Alpha(1) => [0, 2, 1],
        Gen::Alpha(2) => [1, 0, 2],
        _ => unreachable!("only a1 and a2 act as permutations here"),
    }
}

impl fmt::Display for AlphaElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word())
    }
}

/// The product `self * rhs`, `self` applied first.
impl Mul for AlphaElem {
    type Output = AlphaElem;

    fn mul(self, rhs: Self) -> Self {
        let (a, b) = (self.perm(), rhs.perm());
        Self::from_perm([b[a[0]], b[a[1]], b[a[2]]])
    }
}

/// One element found by [`enumerate_alpha_subgroup`].
#[derive(Debug, Clone, PartialEq)]
pub struct AlphaWord {
    pub word: Word,
    pub matrix: Matrix<LaurentPoly>,
    pub is_identity: bool,
}

/// Closes `{a1, a2}` under multiplication, breadth first, keeping the first
/// (shortest, then lexicographically least) word for each distinct matrix.
/// The identity is included and flagged.
pub fn enumerate_alpha_subgroup() -> Vec<AlphaWord> {
    let gens = [Gen::Alpha(1), Gen::Alpha(2)];
    let mut found: Vec<AlphaWord> = Vec::new();
    let mut queue = VecDeque::from([Word::empty(3)]);
    while let Some(w) = queue.pop_front() {
        let m = symbolic_word_matrix(&w);
        if found.iter().any(|f| f.matrix == m) {
            continue;
        }
        found.push(AlphaWord {
            is_identity: m.is_identity(),
            word: w.clone(),
            matrix: m,
        });
        for g in gens {
            let mut letters = w.letters().to_vec();
            letters.push(g);
            queue.push_back(Word::from_trusted(3, letters));
        }
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_has_six_elements() {
        let all = enumerate_alpha_subgroup();
        let names: Vec<String> = all.iter().map(|a| a.word.to_string()).collect();
        assert_eq!(names, ["1", "a1", "a2", "a1 a2", "a2 a1", "a1 a2 a1"]);
        assert_eq!(all.iter().filter(|a| a.is_identity).count(), 1);
    }

    #[test]
    fn group_table_is_consistent() {
        for a in AlphaElem::ALL {
            assert_eq!(a * a.inverse(), AlphaElem::Id);
            assert_eq!(AlphaElem::from_letters(a.letters()), Some(a));
            for b in AlphaElem::ALL {
                let mut l = a.letters().to_vec();
                l.extend_from_slice(b.letters());
                assert_eq!(AlphaElem::from_letters(&l), Some(a * b));
            }
        }
    }

    #[test]
    fn braid_like_identities() {
        use Gen::Alpha;
        let aba = AlphaElem::from_letters(&[Alpha(2), Alpha(1), Alpha(2)]).unwrap();
        assert_eq!(aba, AlphaElem::A1A2A1);
        let abab = AlphaElem::from_letters(&[Alpha(1), Alpha(2), Alpha(1), Alpha(2)]).unwrap();
        assert_eq!(abab, AlphaElem::A2A1);
        assert_eq!(AlphaElem::A1A2 * AlphaElem::A1A2, AlphaElem::A2A1);
    }
}
