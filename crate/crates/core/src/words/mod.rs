//! Words in the generators of `C_n`.
//!
//! Letters are stored unrolled: `s1^3` is three `Sigma(1)` letters. Indices are
//! 1-based. For `n = 3` the extra letters `T = s2 a2 a1` and `T^-1` are
//! available.

pub mod alpha;
pub mod classify;
pub mod families;
pub mod relations;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

pub use alpha::{enumerate_alpha_subgroup, AlphaElem, AlphaWord};
pub use classify::{classify_kernel_candidate, Classification, KernelForm};
pub use families::{build_from_spec, E1Spec, ESpec, FamilyForm, SpecError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    Sigma(usize),
    SigmaInv(usize),
    Alpha(usize),
    T,
    TInv,
}

impl Gen {
    pub fn inverse(self) -> Self {
        match self {
            Gen::Sigma(i) => Gen::SigmaInv(i),
            Gen::SigmaInv(i) => Gen::Sigma(i),
            Gen::Alpha(i) => Gen::Alpha(i),
            Gen::T => Gen::TInv,
            Gen::TInv => Gen::T,
        }
    }

    pub fn index(self) -> Option<usize> {
        match self {
            Gen::Sigma(i) | Gen::SigmaInv(i) | Gen::Alpha(i) => Some(i),
            Gen::T | Gen::TInv => None,
        }
    }

    fn base_token(self) -> String {
        match self {
            Gen::Sigma(i) | Gen::SigmaInv(i) => format!("s{i}"),
            Gen::Alpha(i) => format!("a{i}"),
            Gen::T | Gen::TInv => "T".to_string(),
        }
    }

    fn sign(self) -> i64 {
        match self {
            Gen::SigmaInv(_) | Gen::TInv => -1,
            _ => 1,
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign() < 0 {
            write!(f, "{}^-1", self.base_token())
        } else {
            f.write_str(&self.base_token())
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("syntax error at column {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("generator {gen} needs n >= {needed}, but n = {n}")]
    Index {
        gen: String,
        needed: usize,
        n: usize,
    },
    #[error("T is only defined for n = 3 (got n = {0})")]
    TRequiresN3(usize),
    #[error("token {token} at column {pos} is not allowed in the {alphabet} alphabet")]
    Alphabet {
        token: String,
        pos: usize,
        alphabet: Alphabet,
    },
    #[error("n must be at least 2, got {0}")]
    BadRank(usize),
}

/// Which letters the parser accepts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Alphabet {
    #[default]
    Any,
    /// `s<k>` and `a<k>` only.
    Sigma,
    /// `T` and `a<k>` only.
    T,
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Alphabet::Any => "any",
            Alphabet::Sigma => "sigma",
            Alphabet::T => "t",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    n: usize,
    letters: Vec<Gen>,
}

/// Letter statistics used by the determinant formula and the kernel
/// classifier. `alpha1`/`alpha2` count `a1`/`a2`; `alpha_total` counts all
/// `a<k>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct GenCounts {
    pub alpha1: usize,
    pub alpha2: usize,
    pub alpha_total: usize,
    pub t: usize,
    pub t_inv: usize,
    pub sigma_count: usize,
    pub sigma_exponent_sum: i64,
}

impl Word {
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            letters: Vec::new(),
        }
    }

    pub fn new(n: usize, letters: Vec<Gen>) -> Result<Self, WordError> {
        if n < 2 {
            return Err(WordError::BadRank(n));
        }
        for &g in &letters {
            check_gen(g, n)?;
        }
        Ok(Self { n, letters })
    }

    /// Builds a word whose letters are already known to be valid for `n`.
    pub(crate) fn from_trusted(n: usize, letters: Vec<Gen>) -> Self {
        Self { n, letters }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[Gen] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Sum of absolute exponents; each stored letter counts once.
    pub fn length(&self) -> usize {
        self.letters.len()
    }

    pub fn concat(&self, rhs: &Word) -> Word {
        assert_eq!(self.n, rhs.n, "words over different C_n");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&rhs.letters);
        Word::from_trusted(self.n, letters)
    }

    pub fn inverse(&self) -> Word {
        Word::from_trusted(
            self.n,
            self.letters.iter().rev().map(|g| g.inverse()).collect(),
        )
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.letters.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        Word::from_trusted(self.n, letters)
    }

    /// `T^k` in `C_3`.
    pub fn t_power(k: i64) -> Word {
        let g = if k < 0 { Gen::TInv } else { Gen::T };
        Word::from_trusted(3, vec![g; k.unsigned_abs() as usize])
    }

    /// Replaces `T` by `s2 a2 a1` and `T^-1` by `a1 a2 s2^-1`.
    pub fn expand_t(&self) -> Word {
        let mut out = Vec::with_capacity(self.letters.len());
        for &g in &self.letters {
            match g {
                Gen::T => out.extend([Gen::Sigma(2), Gen::Alpha(2), Gen::Alpha(1)]),
                Gen::TInv => out.extend([Gen::Alpha(1), Gen::Alpha(2), Gen::SigmaInv(2)]),
                other => out.push(other),
            }
        }
        Word::from_trusted(self.n, out)
    }

    /// Cancels adjacent inverse pairs (including `a_i a_i`) until none are
    /// left. No other relation is used.
    pub fn free_reduce(&self) -> Word {
        let mut stack: Vec<Gen> = Vec::with_capacity(self.letters.len());
        for &g in &self.letters {
            if stack.last() == Some(&g.inverse()) {
                stack.pop();
            } else {
                stack.push(g);
            }
        }
        Word::from_trusted(self.n, stack)
    }

    pub fn uses_t(&self) -> bool {
        self.letters.iter().any(|g| matches!(g, Gen::T | Gen::TInv))
    }

    pub fn uses_sigma(&self) -> bool {
        self.letters
            .iter()
            .any(|g| matches!(g, Gen::Sigma(_) | Gen::SigmaInv(_)))
    }

    pub fn gen_counts(&self) -> GenCounts {
        let mut c = GenCounts::default();
        for &g in &self.letters {
            match g {
                Gen::Alpha(i) => {
                    c.alpha_total += 1;
                    match i {
                        1 => c.alpha1 += 1,
                        2 => c.alpha2 += 1,
                        _ => {}
                    }
                }
                Gen::Sigma(_) => {
                    c.sigma_count += 1;
                    c.sigma_exponent_sum += 1;
                }
                Gen::SigmaInv(_) => {
                    c.sigma_count += 1;
                    c.sigma_exponent_sum -= 1;
                }
                Gen::T => c.t += 1,
                Gen::TInv => c.t_inv += 1,
            }
        }
        c
    }
}

fn check_gen(g: Gen, n: usize) -> Result<(), WordError> {
    match g.index() {
        Some(i) if i == 0 || i >= n => Err(WordError::Index {
            gen: g.base_token(),
            needed: i + 1,
            n,
        }),
        Some(_) => Ok(()),
        None if n != 3 => Err(WordError::TRequiresN3(n)),
        None => Ok(()),
    }
}

/// Compressed rendering: runs of one letter become `x^k`; the empty word is
/// `1`. The output parses back to the same word.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.letters.len() {
            let g = self.letters[i];
            let mut j = i;
            while j < self.letters.len() && self.letters[j] == g {
                j += 1;
            }
            let run = (j - i) as i64;
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            let exp = run * g.sign();
            if exp == 1 {
                f.write_str(&g.base_token())?;
            } else {
                write!(f, "{}^{}", g.base_token(), exp)?;
            }
            i = j;
        }
        Ok(())
    }
}

pub fn parse_word(text: &str, n: usize) -> Result<Word, WordError> {
    parse_word_in(text, n, Alphabet::Any)
}

/// Parses whitespace-separated tokens `s<k>`, `a<k>`, `T`, each with an
/// optional `^<int>` suffix. Negative exponents are accepted for `s` and `T`
/// only. A lone `1` denotes the empty word.
pub fn parse_word_in(text: &str, n: usize, alphabet: Alphabet) -> Result<Word, WordError> {
    if n < 2 {
        return Err(WordError::BadRank(n));
    }
    let chars: Vec<char> = text.chars().collect();
    let mut letters = Vec::new();
    let mut pos = 0;
    let syntax = |pos: usize, msg: &str| WordError::Syntax {
        pos: pos + 1,
        msg: msg.to_string(),
    };
    let read_int = |pos: &mut usize| -> Option<i64> {
        let start = *pos;
        while *pos < chars.len() && chars[*pos].is_ascii_digit() {
            *pos += 1;
        }
        if start == *pos {
            return None;
        }
        chars[start..*pos].iter().collect::<String>().parse().ok()
    };

    loop {
        while pos < chars.len() && chars[pos].is_whitespace() {
            pos += 1;
        }
        if pos >= chars.len() {
            break;
        }
        let start = pos;
        let kind = chars[pos];
        pos += 1;
        let base = match kind {
            's' | 'a' => {
                let idx =
                    read_int(&mut pos).ok_or_else(|| syntax(pos, "expected generator index"))?;
                let idx = usize::try_from(idx).map_err(|_| syntax(start, "index out of range"))?;
                if kind == 's' {
                    Gen::Sigma(idx)
                } else {
                    Gen::Alpha(idx)
                }
            }
            'T' => Gen::T,
            '1' if letters.is_empty() => {
                let end_ok = pos >= chars.len() || chars[pos..].iter().all(|c| c.is_whitespace());
                if !end_ok {
                    return Err(syntax(pos, "the identity token 1 must stand alone"));
                }
                break;
            }
            other => return Err(syntax(start, &format!("unexpected character {other:?}"))),
        };
        let mut exp: i64 = 1;
        if pos < chars.len() && chars[pos] == '^' {
            pos += 1;
            let negative = pos < chars.len() && chars[pos] == '-';
            if negative || (pos < chars.len() && chars[pos] == '+') {
                pos += 1;
            }
            let v = read_int(&mut pos).ok_or_else(|| syntax(pos, "expected integer exponent"))?;
            exp = if negative { -v } else { v };
        }
        if pos < chars.len() && !chars[pos].is_whitespace() {
            return Err(syntax(pos, "tokens must be separated by whitespace"));
        }
        let token: String = chars[start..pos].iter().collect();
        let allowed = match (alphabet, base) {
            (Alphabet::Any, _) | (_, Gen::Alpha(_)) => true,
            (Alphabet::Sigma, g) => g != Gen::T,
            (Alphabet::T, g) => g == Gen::T,
        };
        if !allowed {
            return Err(WordError::Alphabet {
                token,
                pos: start + 1,
                alphabet,
            });
        }
        if exp < 0 && matches!(base, Gen::Alpha(_)) {
            return Err(syntax(
                start,
                "negative exponents are only allowed for s and T",
            ));
        }
        check_gen(base, n)?;
        let g = if exp < 0 { base.inverse() } else { base };
        letters.extend(std::iter::repeat_n(g, exp.unsigned_abs() as usize));
    }
    Ok(Word::from_trusted(n, letters))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn notation_length_example() {
        // a1^-1 is written a1 since a1 is an involution
        let w = parse_word("s1^5 a2 s2^-2 a1 s1^-2", 3).unwrap();
        assert_eq!(w.length(), 11);
    }

    #[test]
    fn example_word_parses() {
        let w = parse_word("a2 T a2 T a2 T a2 T T^-4", 3).unwrap();
        assert_eq!(w.length(), 12);
        assert_eq!(w.to_string(), "a2 T a2 T a2 T a2 T T^-4");
        let c = w.gen_counts();
        assert_eq!((c.alpha1, c.alpha2, c.t, c.t_inv), (0, 4, 4, 4));
    }

    #[test]
    fn empty_and_identity_token() {
        assert!(parse_word("", 3).unwrap().is_empty());
        assert!(parse_word("  1 ", 3).unwrap().is_empty());
        assert_eq!(Word::empty(3).to_string(), "1");
        assert_eq!(Word::empty(3).gen_counts(), GenCounts::default());
    }

    #[test]
    fn index_errors() {
        assert!(matches!(parse_word("s3", 3), Err(WordError::Index { .. })));
        assert!(matches!(parse_word("a0", 3), Err(WordError::Index { .. })));
        assert!(parse_word("s3", 4).is_ok());
        assert_eq!(parse_word("T", 4), Err(WordError::TRequiresN3(4)));
    }

    #[test]
    fn syntax_errors_report_position() {
        match parse_word("a1 x2", 3) {
            Err(WordError::Syntax { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_word("a1^-1", 3),
            Err(WordError::Syntax { .. })
        ));
        assert!(matches!(
            parse_word("a1T", 3),
            Err(WordError::Syntax { .. })
        ));
        assert!(matches!(parse_word("s", 3), Err(WordError::Syntax { .. })));
        assert!(matches!(parse_word("T^", 3), Err(WordError::Syntax { .. })));
    }

    #[test]
    fn alphabet_restriction() {
        assert!(matches!(
            parse_word_in("a1 T", 3, Alphabet::Sigma),
            Err(WordError::Alphabet { .. })
        ));
        assert!(matches!(
            parse_word_in("s1 a1", 3, Alphabet::T),
            Err(WordError::Alphabet { .. })
        ));
        assert!(parse_word_in("a1 T^-2", 3, Alphabet::T).is_ok());
    }

    #[test]
    fn expand_t_letters() {
        let w = parse_word("T", 3).unwrap().expand_t();
        assert_eq!(w.to_string(), "s2 a2 a1");
        let w = parse_word("T^-1", 3).unwrap().expand_t();
        assert_eq!(w.to_string(), "a1 a2 s2^-1");
        let w = parse_word("T T^-1", 3).unwrap().expand_t();
        assert_eq!(w.length(), 6);
        assert!(w.free_reduce().is_empty());
        assert_eq!(parse_word("T^-4", 3).unwrap().expand_t().length(), 12);
    }

    #[test]
    fn free_reduce_cases() {
        assert!(parse_word("a1 a1", 3).unwrap().free_reduce().is_empty());
        assert_eq!(
            parse_word("s1 s1^-1 s2", 3)
                .unwrap()
                .free_reduce()
                .to_string(),
            "s2"
        );
        let relator = parse_word("a1 a2 a1 a2 a1 a2", 3).unwrap();
        assert_eq!(relator.free_reduce(), relator);
    }

    #[test]
    fn sigma_counts() {
        let c = parse_word("s1^5 s2^-2", 3).unwrap().gen_counts();
        assert_eq!((c.sigma_count, c.sigma_exponent_sum), (7, 3));
    }

    #[test]
    fn inverse_and_pow() {
        let w = parse_word("a1 T s1", 3).unwrap();
        assert!(w.concat(&w.inverse()).free_reduce().is_empty());
        assert_eq!(w.pow(-1), w.inverse());
        assert_eq!(w.pow(0), Word::empty(3));
        assert_eq!(Word::t_power(-3).to_string(), "T^-3");
    }
}
