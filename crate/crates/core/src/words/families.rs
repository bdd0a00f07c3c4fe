//! The word families `A_1 T^{s_1} ... A_r T^{s_r}` and their leading-`T`
//! mirrors, with `A_i` drawn from the nontrivial alpha elements.

use serde::Serialize;
use thiserror::Error;

use super::{AlphaElem, Gen, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FamilyForm {
    /// `A_1 T^{s_1} A_2 T^{s_2} ... A_r T^{s_r}`
    TrailingT,
    /// `T^{s_1} A_1 T^{s_2} A_2 ... T^{s_r} A_r`
    LeadingT,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("exponent sum is {0}, must be 0")]
    ExponentSum(i64),
    #[error("total alpha length is {0}, must be even")]
    OddLength(usize),
    #[error("A_{0} must be a nontrivial alpha element")]
    TrivialBlock(usize),
    #[error("need r >= 1 blocks")]
    Empty,
    #[error("got {a} alpha blocks but {s} exponents")]
    LengthMismatch { a: usize, s: usize },
}

/// General member of the family: arbitrary exponents summing to zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ESpec {
    pub a_list: Vec<AlphaElem>,
    pub s_list: Vec<i64>,
    pub form: FamilyForm,
}

/// The restricted family: `A_1 T A_2 T ... A_r T^{1-r}` or
/// `T^{1-r} A_1 T A_2 ... T A_r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct E1Spec {
    pub a_list: Vec<AlphaElem>,
    pub form: FamilyForm,
}

impl E1Spec {
    pub fn new(a_list: Vec<AlphaElem>, form: FamilyForm) -> Self {
        Self { a_list, form }
    }

    pub fn r(&self) -> usize {
        self.a_list.len()
    }

    pub fn to_espec(&self) -> ESpec {
        let r = self.a_list.len() as i64;
        let s_list = match self.form {
            FamilyForm::TrailingT => (0..r).map(|i| if i == r - 1 { 1 - r } else { 1 }).collect(),
            FamilyForm::LeadingT => (0..r).map(|i| if i == 0 { 1 - r } else { 1 }).collect(),
        };
        ESpec {
            a_list: self.a_list.clone(),
            s_list,
            form: self.form,
        }
    }
}

impl ESpec {
    pub fn validate(&self) -> Result<(), SpecError> {
        if self.a_list.is_empty() {
            return Err(SpecError::Empty);
        }
        if self.a_list.len() != self.s_list.len() {
            return Err(SpecError::LengthMismatch {
                a: self.a_list.len(),
                s: self.s_list.len(),
            });
        }
        if let Some(i) = self.a_list.iter().position(|a| *a == AlphaElem::Id) {
            return Err(SpecError::TrivialBlock(i + 1));
        }
        let sum: i64 = self.s_list.iter().sum();
        if sum != 0 {
            return Err(SpecError::ExponentSum(sum));
        }
        let len: usize = self.a_list.iter().map(|a| a.length()).sum();
        if !len.is_multiple_of(2) {
            return Err(SpecError::OddLength(len));
        }
        Ok(())
    }
}

/// Anything that names a family member.
pub trait FamilySpec {
    fn espec(&self) -> ESpec;
}

impl FamilySpec for ESpec {
    fn espec(&self) -> ESpec {
        self.clone()
    }
}

impl FamilySpec for E1Spec {
    fn espec(&self) -> ESpec {
        self.to_espec()
    }
}

/// The concrete word in the `T`/alpha alphabet.
pub fn build_from_spec(spec: &impl FamilySpec) -> Result<Word, SpecError> {
    let spec = spec.espec();
    spec.validate()?;
    Ok(assemble(&spec.a_list, &spec.s_list, spec.form))
}

/// Assembles blocks without checking the family conditions.
pub fn assemble(a_list: &[AlphaElem], s_list: &[i64], form: FamilyForm) -> Word {
    let mut letters = Vec::new();
    let push_t = |letters: &mut Vec<Gen>, s: i64| {
        let g = if s < 0 { Gen::TInv } else { Gen::T };
        letters.extend(std::iter::repeat_n(g, s.unsigned_abs() as usize));
    };
    for (a, &s) in a_list.iter().zip(s_list) {
        match form {
            FamilyForm::TrailingT => {
                letters.extend_from_slice(a.letters());
                push_t(&mut letters, s);
            }
            FamilyForm::LeadingT => {
                push_t(&mut letters, s);
                letters.extend_from_slice(a.letters());
            }
        }
    }
    Word::from_trusted(3, letters)
}
