//! Instances of the seven defining relation families of `C_n`.

use std::fmt;

use serde::Serialize;

use super::{Gen, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum RelationFamily {
    /// `s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}`
    Braid,
    /// `s_i s_j = s_j s_i`, `|i - j| >= 2`
    SigmaCommute,
    /// `a_i^2 = 1`
    AlphaInvolution,
    /// `a_i a_j = a_j a_i`, `|i - j| >= 2`
    AlphaCommute,
    /// `a_i s_j = s_j a_i`, `|i - j| >= 2`
    MixedCommute,
    /// `s_i a_{i+1} a_i = a_{i+1} a_i s_{i+1}`
    MixedFirst,
    /// `s_{i+1} s_i a_{i+1} = a_i s_{i+1} s_i`
    MixedSecond,
}

impl RelationFamily {
    pub const ALL: [RelationFamily; 7] = [
        RelationFamily::Braid,
        RelationFamily::SigmaCommute,
        RelationFamily::AlphaInvolution,
        RelationFamily::AlphaCommute,
        RelationFamily::MixedCommute,
        RelationFamily::MixedFirst,
        RelationFamily::MixedSecond,
    ];
}

impl fmt::Display for RelationFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RelationFamily::Braid => "braid",
            RelationFamily::SigmaCommute => "sigma-commute",
            RelationFamily::AlphaInvolution => "alpha-involution",
            RelationFamily::AlphaCommute => "alpha-commute",
            RelationFamily::MixedCommute => "mixed-commute",
            RelationFamily::MixedFirst => "mixed-1",
            RelationFamily::MixedSecond => "mixed-2",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationInstance {
    pub family: RelationFamily,
    pub lhs: Word,
    pub rhs: Word,
}

impl fmt::Display for RelationInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

/// All instances of every family for rank `n`. Commutation relations use
/// `|i - j| >= 2`, the standard presentation.
pub fn relation_instances(n: usize) -> Vec<RelationInstance> {
    use Gen::{Alpha as A, Sigma as S};
    let m = n.saturating_sub(1);
    let mut out = Vec::new();
    let mut add = |family, lhs: Vec<Gen>, rhs: Vec<Gen>| {
        out.push(RelationInstance {
            family,
            lhs: Word::from_trusted(n, lhs),
            rhs: Word::from_trusted(n, rhs),
        })
    };
    for i in 1..m {
        add(
            RelationFamily::Braid,
            vec![S(i), S(i + 1), S(i)],
            vec![S(i + 1), S(i), S(i + 1)],
        );
    }
    for i in 1..=m {
        for j in i + 2..=m {
            add(
                RelationFamily::SigmaCommute,
                vec![S(i), S(j)],
                vec![S(j), S(i)],
            );
        }
    }
    for i in 1..=m {
        add(RelationFamily::AlphaInvolution, vec![A(i), A(i)], vec![]);
    }
    for i in 1..=m {
        for j in i + 2..=m {
            add(
                RelationFamily::AlphaCommute,
                vec![A(i), A(j)],
                vec![A(j), A(i)],
            );
        }
    }
    for i in 1..=m {
        for j in 1..=m {
            if i.abs_diff(j) >= 2 {
                add(
                    RelationFamily::MixedCommute,
                    vec![A(i), S(j)],
                    vec![S(j), A(i)],
                );
            }
        }
    }
    for i in 1..m {
        add(
            RelationFamily::MixedFirst,
            vec![S(i), A(i + 1), A(i)],
            vec![A(i + 1), A(i), S(i + 1)],
        );
    }
    for i in 1..m {
        add(
            RelationFamily::MixedSecond,
            vec![S(i + 1), S(i), A(i + 1)],
            vec![A(i), S(i + 1), S(i)],
        );
    }
    out
}
