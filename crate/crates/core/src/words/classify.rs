//! Sorting words of `C_3` into the shapes that can or cannot lie in the kernel.
//!
//! Every word in `T`, `a1`, `a2` is an alpha element, a power of `T`, or an
//! alternation of alpha blocks and `T` powers. Only alternations with `T`
//! exponent sum 0 and even total alpha length have determinant 1.

use std::fmt;

use serde::Serialize;

use super::{AlphaElem, Gen, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum KernelForm {
    /// The empty word after normalisation.
    Identity,
    /// (i) a single nontrivial alpha element.
    Alpha,
    /// (ii) `T^k`, `k != 0`.
    TPower,
    /// (iii) `A_1 T^{s_1} ... A_r T^{s_r}`.
    AlphaLeading,
    /// (iv) `T^{s_1} A_1 ... T^{s_r} A_r`.
    TLeading,
}

impl fmt::Display for KernelForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            KernelForm::Identity => "identity",
            KernelForm::Alpha => "i",
            KernelForm::TPower => "ii",
            KernelForm::AlphaLeading => "iii",
            KernelForm::TLeading => "iv",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Block {
    Alpha(AlphaElem),
    T(i64),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub form: KernelForm,
    pub eligible: bool,
    pub reason: String,
    /// The normalised alternation of alpha blocks and `T` powers.
    pub blocks: Vec<Block>,
    pub t_exponent_sum: i64,
    pub alpha_length_sum: usize,
}

/// Rewrites `s1`, `s2` and their inverses in the `T`/alpha alphabet.
pub fn to_t_alphabet(w: &Word) -> Word {
    use Gen::*;
    let mut out = Vec::with_capacity(w.length());
    for &g in w.letters() {
        match g {
            Sigma(2) => out.extend([T, Alpha(1), Alpha(2)]),
            Sigma(1) => out.extend([Alpha(2), Alpha(1), T, Alpha(2), Alpha(1)]),
            SigmaInv(2) => out.extend([Alpha(2), Alpha(1), TInv]),
            SigmaInv(1) => out.extend([Alpha(1), Alpha(2), TInv, Alpha(1), Alpha(2)]),
            other => out.push(other),
        }
    }
    Word::from_trusted(w.n(), out)
}

/// Collapses a `T`/alpha word into alternating blocks, multiplying alpha
/// runs inside `S_3` and dropping trivial blocks until nothing merges.
pub fn normalise_blocks(w: &Word) -> Vec<Block> {
    let mut stack: Vec<Block> = Vec::new();
    let push = |stack: &mut Vec<Block>, b: Block| {
        let mut b = b;
        loop {
            match (stack.last().copied(), b) {
                (_, Block::Alpha(AlphaElem::Id)) | (_, Block::T(0)) => return,
                (Some(Block::Alpha(x)), Block::Alpha(y)) => {
                    stack.pop();
                    b = Block::Alpha(x * y);
                }
                (Some(Block::T(x)), Block::T(y)) => {
                    stack.pop();
                    b = Block::T(x + y);
                }
                _ => {
                    stack.push(b);
                    return;
                }
            }
        }
    };
    for &g in w.letters() {
        let b = match g {
            Gen::Alpha(1) => Block::Alpha(AlphaElem::A1),
            Gen::Alpha(2) => Block::Alpha(AlphaElem::A2),
            Gen::T => Block::T(1),
            Gen::TInv => Block::T(-1),
            _ => unreachable!("word was rewritten into the T alphabet"),
        };
        push(&mut stack, b);
    }
    stack
}

/// Classifies a word of `C_3`. Sigma letters are first rewritten with
/// `s2 = T a1 a2` and `s1 = a2 a1 T a2 a1`.
pub fn classify_kernel_candidate(w: &Word) -> Classification {
    let blocks = normalise_blocks(&to_t_alphabet(w));
    let t_exponent_sum: i64 = blocks
        .iter()
        .map(|b| if let Block::T(s) = b { *s } else { 0 })
        .sum();
    let alpha_length_sum: usize = blocks
        .iter()
        .map(|b| {
            if let Block::Alpha(a) = b {
                a.length()
            } else {
                0
            }
        })
        .sum();
    let (form, eligible, reason) = match blocks.as_slice() {
        [] => (KernelForm::Identity, false, "trivial word".to_string()),
        [Block::Alpha(a)] => (
            KernelForm::Alpha,
            false,
            format!("{a} maps to a non-identity permutation matrix"),
        ),
        [Block::T(k)] => (
            KernelForm::TPower,
            false,
            format!("det(rho(T^{k})) = (-q)^{} != 1", 3 * k),
        ),
        [first, ..] => {
            let form = if matches!(first, Block::Alpha(_)) {
                KernelForm::AlphaLeading
            } else {
                KernelForm::TLeading
            };
            if t_exponent_sum != 0 {
                (
                    form,
                    false,
                    format!("T exponent sum {t_exponent_sum} != 0, so det != 1"),
                )
            } else if alpha_length_sum % 2 == 1 {
                (
                    form,
                    false,
                    "odd total alpha length, so det = -1".to_string(),
                )
            } else {
                (
                    form,
                    true,
                    "exponent sum 0 and even alpha length".to_string(),
                )
            }
        }
    };
    Classification {
        form,
        eligible,
        reason,
        blocks,
        t_exponent_sum,
        alpha_length_sum,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_word;

    fn classify(s: &str) -> Classification {
        classify_kernel_candidate(&parse_word(s, 3).unwrap())
    }

    #[test]
    fn spec_cases() {
        let c = classify("T^3");
        assert_eq!((c.form, c.eligible), (KernelForm::TPower, false));
        let c = classify("a1");
        assert_eq!((c.form, c.eligible), (KernelForm::Alpha, false));
        let c = classify("a1 T a1 T^-1");
        assert_eq!((c.form, c.eligible), (KernelForm::AlphaLeading, true));
    }

    #[test]
    fn normalisation_uses_alpha_relations() {
        let c = classify("a1 a2 a1 a2 a1 a2");
        assert_eq!(c.form, KernelForm::Identity);
        let c = classify("T a1 a2 a1 a2 a1 a2 T^-1");
        assert_eq!(c.form, KernelForm::Identity);
        let c = classify("T^2 a2 a1 a2 T^-2 a1");
        assert_eq!(c.form, KernelForm::TLeading);
        assert_eq!(
            c.blocks,
            vec![
                Block::T(2),
                Block::Alpha(AlphaElem::A1A2A1),
                Block::T(-2),
                Block::Alpha(AlphaElem::A1)
            ]
        );
        assert!(c.eligible);
    }

    #[test]
    fn determinant_obstructions() {
        assert!(!classify("a1 T a2 a1 T^-1").eligible);
        assert!(!classify("a1 T a1 T").eligible);
    }

    #[test]
    fn sigma_letters_are_rewritten() {
        let c = classify("s2");
        assert_eq!(c.t_exponent_sum, 1);
        let c = classify("s1 s1^-1");
        assert_eq!(c.form, KernelForm::Identity);
    }
}
