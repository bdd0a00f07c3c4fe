//! Bounded search for words of `C_3` whose image is the identity.
//!
//! Candidates come from the block families `A_1 T^{s_1} ... A_r T^{s_r}` (and
//! their leading-`T` mirrors) or from all freely reduced words in `a1`, `a2`,
//! `T`, `T^-1`. Products are built incrementally along a depth-first tree in
//! a cheap scalar type: residues mod `2^61 - 1` for the exact modes, `f64`
//! complex numbers otherwise. Words passing the determinant filter and the
//! cheap identity test are confirmed exactly, then checked against the
//! free-group action so each hit is labelled trivial or nontrivial.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::free_group::apply_word;
use crate::matrix::{AnyMatrix, Matrix};
use crate::rep::{c3_table, GeneratorTable};
use crate::scalar::{ModP, Scalar, ScalarError, ScalarMode};
use crate::words::families::assemble;
use crate::words::{AlphaElem, FamilyForm, Gen, Word};

/// Default tolerance for the complex identity test.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;
/// Default cap on visited tree nodes.
pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

/// A fixed residue standing in for a formal `q`. A symbolic identity
/// survives any specialisation, so this only discards non-identities.
const GENERIC_Q: u64 = 1_234_567_891_011;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SearchFamily {
    /// `s = (1, ..., 1, 1 - r)` or its leading-`T` mirror.
    E1,
    /// Arbitrary `|s_i| <= max_abs_exponent` with `sum s_i = 0`.
    E,
    /// Freely reduced words of length `<= max_length`.
    FreeWords,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchConfig {
    pub mode: ScalarMode,
    pub family: SearchFamily,
    pub max_r: usize,
    pub max_abs_exponent: i64,
    pub max_length: usize,
    /// Entrywise tolerance, complex mode only.
    pub tolerance: f64,
    pub node_budget: u64,
    /// Worker threads; `None` uses the global pool.
    pub threads: Option<usize>,
}

impl SearchConfig {
    pub fn new(mode: ScalarMode, family: SearchFamily) -> Self {
        Self {
            mode,
            family,
            max_r: 4,
            max_abs_exponent: 4,
            max_length: 8,
            tolerance: DEFAULT_TOLERANCE,
            node_budget: DEFAULT_NODE_BUDGET,
            threads: None,
        }
    }

    pub fn validate(&self) -> Result<(), SearchError> {
        let bad = |m: &str| Err(SearchError::InvalidConfig(m.to_string()));
        match self.family {
            SearchFamily::E1 | SearchFamily::E if self.max_r == 0 => {
                return bad("max_r must be positive")
            }
            SearchFamily::E if self.max_abs_exponent <= 0 => {
                return bad("max_abs_exponent must be positive")
            }
            SearchFamily::FreeWords if self.max_length == 0 => {
                return bad("max_length must be positive")
            }
            _ => {}
        }
        if !(self.tolerance > 0.0 && self.tolerance <= 1e-4) {
            return bad("tolerance must lie in (0, 1e-4]");
        }
        if self.node_budget == 0 {
            return bad("node_budget must be positive");
        }
        if self.threads == Some(0) {
            return bad("threads must be positive");
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SearchError {
    #[error("invalid search bounds: {0}")]
    InvalidConfig(String),
    #[error("node budget of {0} exceeded")]
    BudgetExceeded(u64),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("could not start worker pool: {0}")]
    ThreadPool(String),
}

/// A confirmed word with identity image.
#[derive(Debug, Clone, PartialEq)]
pub struct Hit {
    pub word: Word,
    pub matrix: AnyMatrix,
    /// Whether the word acts nontrivially on the free group.
    pub nontrivial: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchReport {
    /// Sorted by length, then letters.
    pub hits: Vec<Hit>,
    pub nodes: u64,
    /// Candidates that passed the determinant filter.
    pub det_passed: u64,
    /// Candidates that passed the cheap identity test.
    pub prefilter_passed: u64,
}

impl SearchReport {
    pub fn nontrivial_hits(&self) -> impl Iterator<Item = &Hit> {
        self.hits.iter().filter(|h| h.nontrivial)
    }
}

/// Determinant test from letter counts: `det = (-1)^odd q^{3 t_net}`.
#[derive(Debug, Clone)]
enum DetFilter {
    Symbolic,
    Rational(BigRational),
    Complex(Complex64, f64),
}

impl DetFilter {
    fn accepts(&self, odd: bool, t_net: i64) -> bool {
        let exp = 3 * t_net;
        match self {
            DetFilter::Symbolic => !odd && exp == 0,
            DetFilter::Rational(q) => {
                // (-1)^odd q^exp = 1 forces exp = 0 unless q = 1 or q = -1
                if One::is_one(q) {
                    !odd
                } else if One::is_one(&-q) {
                    odd == (exp % 2 != 0)
                } else {
                    !odd && exp == 0
                }
            }
            DetFilter::Complex(q, tol) => {
                let sign = if odd { -1.0 } else { 1.0 };
                let v = q.powi(exp as i32) * sign;
                (v - 1.0).norm() <= *tol
            }
        }
    }
}

struct Counters {
    nodes: AtomicU64,
    det: AtomicU64,
    pre: AtomicU64,
    budget: u64,
    stop: AtomicBool,
}

impl Counters {
    fn visit(&self) -> bool {
        let n = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if n > self.budget {
            self.stop.store(true, Ordering::Relaxed);
        }
        !self.stop.load(Ordering::Relaxed)
    }
}

type IdentityTest<'a, S> = Box<dyn Fn(&Matrix<S>) -> bool + Sync + 'a>;
type Confirm<'a> = Box<dyn Fn(&Word) -> Option<AnyMatrix> + Sync + 'a>;

/// The parts of a search that depend on the scalar mode.
struct Engine<'a, S> {
    table: GeneratorTable<S>,
    looks_identity: IdentityTest<'a, S>,
    confirm: Confirm<'a>,
    det: DetFilter,
}

/// Running letter counts for the determinant filter.
#[derive(Debug, Clone, Copy, Default)]
struct Tally {
    alpha_len: usize,
    t_abs: u64,
    t_net: i64,
}

impl Tally {
    fn odd(self) -> bool {
        (self.alpha_len as u64 + self.t_abs) % 2 == 1
    }

    fn add_alpha(mut self, len: usize) -> Self {
        self.alpha_len += len;
        self
    }

    fn add_t(mut self, s: i64) -> Self {
        self.t_abs += s.unsigned_abs();
        self.t_net += s;
        self
    }

    fn add_gen(self, g: Gen) -> Self {
        match g {
            Gen::T => self.add_t(1),
            Gen::TInv => self.add_t(-1),
            _ => self.add_alpha(1),
        }
    }
}

type Found = Vec<(Word, AnyMatrix)>;

fn mul3<S: Scalar>(a: &Matrix<S>, b: &Matrix<S>) -> Matrix<S> {
    a.mul(b).expect("all matrices are 3x3")
}

impl<S: Scalar> Engine<'_, S> {
    /// Runs the filters on a finished candidate.
    fn test(
        &self,
        m: &Matrix<S>,
        tally: Tally,
        word: impl FnOnce() -> Word,
        ctr: &Counters,
        out: &mut Found,
    ) {
        if !self.det.accepts(tally.odd(), tally.t_net) {
            return;
        }
        ctr.det.fetch_add(1, Ordering::Relaxed);
        if !(self.looks_identity)(m) {
            return;
        }
        ctr.pre.fetch_add(1, Ordering::Relaxed);
        let w = word();
        if let Some(mat) = (self.confirm)(&w) {
            out.push((w, mat));
        }
    }

    fn t_power(&self, s: i64) -> Matrix<S> {
        let t = self.table.get(if s < 0 { Gen::TInv } else { Gen::T });
        t.pow(s.unsigned_abs() as u32)
    }

    fn free_words(&self, max_len: usize, ctr: &Counters) -> Found {
        const LETTERS: [Gen; 4] = [Gen::Alpha(1), Gen::Alpha(2), Gen::T, Gen::TInv];
        let mut prefixes: Vec<Vec<Gen>> = LETTERS.iter().map(|&g| vec![g]).collect();
        if max_len >= 2 {
            prefixes = prefixes
                .into_iter()
                .flat_map(|p| {
                    let first = p[0];
                    LETTERS
                        .iter()
                        .filter(move |&&g| g != first.inverse())
                        .map(move |&g| vec![first, g])
                })
                .collect();
        }
        let mut found: Found = Vec::new();
        // the length-one words are roots of the split; test them once
        if max_len >= 2 {
            for g in LETTERS {
                if ctr.visit() {
                    let tally = Tally::default().add_gen(g);
                    self.test(
                        self.table.get(g),
                        tally,
                        || Word::from_trusted(3, vec![g]),
                        ctr,
                        &mut found,
                    );
                }
            }
        }
        let parts: Vec<Found> = prefixes
            .par_iter()
            .map(|p| {
                let mut out = Vec::new();
                let m = p
                    .iter()
                    .fold(Matrix::identity(3), |acc, &g| mul3(&acc, self.table.get(g)));
                let tally = p.iter().fold(Tally::default(), |t, &g| t.add_gen(g));
                let mut letters = p.clone();
                self.free_dfs(&mut letters, &m, tally, max_len, ctr, &mut out);
                out
            })
            .collect();
        found.extend(parts.into_iter().flatten());
        found
    }

    fn free_dfs(
        &self,
        letters: &mut Vec<Gen>,
        m: &Matrix<S>,
        tally: Tally,
        max_len: usize,
        ctr: &Counters,
        out: &mut Found,
    ) {
        if !ctr.visit() {
            return;
        }
        self.test(
            m,
            tally,
            || Word::from_trusted(3, letters.clone()),
            ctr,
            out,
        );
        if letters.len() == max_len {
            return;
        }
        let last = *letters.last().expect("prefixes are nonempty");
        for g in [Gen::Alpha(1), Gen::Alpha(2), Gen::T, Gen::TInv] {
            if g == last.inverse() {
                continue;
            }
            let next = mul3(m, self.table.get(g));
            letters.push(g);
            self.free_dfs(letters, &next, tally.add_gen(g), max_len, ctr, out);
            letters.pop();
        }
    }

    /// Every `(A_1, s_1), ..., (A_r, s_r)` with `s` drawn from `exps(i, r, sum)`.
    fn blocks(&self, max_r: usize, exps: &ExpRule, ctr: &Counters) -> Found {
        let mut roots = Vec::new();
        for r in 1..=max_r {
            for form in [FamilyForm::TrailingT, FamilyForm::LeadingT] {
                for a in AlphaElem::NONTRIVIAL {
                    for s in exps(form, 0, r, 0) {
                        roots.push((r, form, a, s));
                    }
                }
            }
        }
        let alpha: Vec<(AlphaElem, Matrix<S>)> = AlphaElem::NONTRIVIAL
            .iter()
            .map(|&a| {
                (
                    a,
                    a.letters()
                        .iter()
                        .fold(Matrix::identity(3), |m, &g| mul3(&m, self.table.get(g))),
                )
            })
            .collect();
        let alpha_of = |a: AlphaElem| &alpha.iter().find(|(b, _)| *b == a).expect("nontrivial").1;
        let parts: Vec<Found> = roots
            .par_iter()
            .map(|&(r, form, a, s)| {
                let mut out = Vec::new();
                let mut state = BlockState {
                    r,
                    form,
                    a_list: vec![a],
                    s_list: vec![s],
                };
                let m = self.block(form, alpha_of(a), s);
                let tally = Tally::default().add_alpha(a.length()).add_t(s);
                self.block_dfs(&mut state, &m, tally, &alpha, exps, ctr, &mut out);
                out
            })
            .collect();
        parts.into_iter().flatten().collect()
    }

    fn block(&self, form: FamilyForm, a: &Matrix<S>, s: i64) -> Matrix<S> {
        match form {
            FamilyForm::TrailingT => mul3(a, &self.t_power(s)),
            FamilyForm::LeadingT => mul3(&self.t_power(s), a),
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn block_dfs(
        &self,
        st: &mut BlockState,
        m: &Matrix<S>,
        tally: Tally,
        alpha: &[(AlphaElem, Matrix<S>)],
        exps: &ExpRule,
        ctr: &Counters,
        out: &mut Found,
    ) {
        if !ctr.visit() {
            return;
        }
        let depth = st.a_list.len();
        if depth == st.r {
            let word = || assemble(&st.a_list, &st.s_list, st.form).free_reduce();
            self.test(m, tally, word, ctr, out);
            return;
        }
        let sum: i64 = st.s_list.iter().sum();
        for (a, am) in alpha {
            for s in exps(st.form, depth, st.r, sum) {
                let next = mul3(m, &self.block(st.form, am, s));
                st.a_list.push(*a);
                st.s_list.push(s);
                self.block_dfs(
                    st,
                    &next,
                    tally.add_alpha(a.length()).add_t(s),
                    alpha,
                    exps,
                    ctr,
                    out,
                );
                st.a_list.pop();
                st.s_list.pop();
            }
        }
    }
}

/// Allowed exponents for block `i` of `r`, given the exponent sum so far.
type ExpRule = dyn Fn(FamilyForm, usize, usize, i64) -> Vec<i64> + Sync;

struct BlockState {
    r: usize,
    form: FamilyForm,
    a_list: Vec<AlphaElem>,
    s_list: Vec<i64>,
}

fn run<S: Scalar>(engine: &Engine<'_, S>, config: &SearchConfig, ctr: &Counters) -> Found {
    match config.family {
        SearchFamily::FreeWords => engine.free_words(config.max_length, ctr),
        SearchFamily::E => {
            let m = config.max_abs_exponent;
            let exps = move |_: FamilyForm, i: usize, r: usize, sum: i64| -> Vec<i64> {
                if i + 1 == r {
                    if sum.abs() <= m {
                        vec![-sum]
                    } else {
                        vec![]
                    }
                } else {
                    (-m..=m).collect()
                }
            };
            engine.blocks(config.max_r, &exps, ctr)
        }
        SearchFamily::E1 => {
            let exps = |form: FamilyForm, i: usize, r: usize, _: i64| -> Vec<i64> {
                let last = match form {
                    FamilyForm::TrailingT => i + 1 == r,
                    FamilyForm::LeadingT => i == 0,
                };
                vec![if last { 1 - r as i64 } else { 1 }]
            };
            engine.blocks(config.max_r, &exps, ctr)
        }
    }
}

fn prepare_and_run(config: &SearchConfig, ctr: &Counters) -> Result<Found, SearchError> {
    let sym = c3_table();
    let confirm_symbolic = |w: &Word| {
        let m = sym.word(w);
        m.is_identity().then_some(AnyMatrix::Symbolic(m))
    };
    match &config.mode {
        ScalarMode::Symbolic => {
            let table = sym
                .modp(ModP::new(GENERIC_Q))
                .expect("generic residue is nonzero");
            let engine = Engine {
                table,
                looks_identity: Box::new(|m: &Matrix<ModP>| m.is_identity()),
                confirm: Box::new(confirm_symbolic),
                det: DetFilter::Symbolic,
            };
            Ok(run(&engine, config, ctr))
        }
        ScalarMode::Rational(q) => {
            let exact = sym.rational(q)?;
            let confirm = {
                let exact = exact.clone();
                move |w: &Word| {
                    let m = exact.word(w);
                    m.is_identity().then_some(AnyMatrix::Rational(m))
                }
            };
            let det = DetFilter::Rational(q.clone());
            match ModP::from_rational(q).and_then(|r| sym.modp(r)) {
                Some(table) => {
                    let engine = Engine {
                        table,
                        looks_identity: Box::new(|m: &Matrix<ModP>| m.is_identity()),
                        confirm: Box::new(confirm),
                        det,
                    };
                    Ok(run(&engine, config, ctr))
                }
                None => {
                    let engine = Engine {
                        table: exact,
                        looks_identity: Box::new(|m: &Matrix<BigRational>| m.is_identity()),
                        confirm: Box::new(confirm),
                        det,
                    };
                    Ok(run(&engine, config, ctr))
                }
            }
        }
        ScalarMode::Complex(q) => {
            let table = sym.complex(*q)?;
            let tol = config.tolerance;
            let confirm = {
                let table = table.clone();
                move |w: &Word| {
                    let m = table.word(w);
                    m.is_identity_within(tol).then_some(AnyMatrix::Complex(m))
                }
            };
            let engine = Engine {
                table,
                looks_identity: Box::new(move |m: &Matrix<Complex64>| m.is_identity_within(tol)),
                confirm: Box::new(confirm),
                det: DetFilter::Complex(*q, tol),
            };
            Ok(run(&engine, config, ctr))
        }
    }
}

/// Runs a bounded kernel search. Output is independent of the thread count.
pub fn kernel_search(config: &SearchConfig) -> Result<SearchReport, SearchError> {
    config.validate()?;
    let ctr = Counters {
        nodes: AtomicU64::new(0),
        det: AtomicU64::new(0),
        pre: AtomicU64::new(0),
        budget: config.node_budget,
        stop: AtomicBool::new(false),
    };
    let found = match config.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| SearchError::ThreadPool(e.to_string()))?
            .install(|| prepare_and_run(config, &ctr))?,
        None => prepare_and_run(config, &ctr)?,
    };
    if ctr.stop.load(Ordering::Relaxed) {
        return Err(SearchError::BudgetExceeded(config.node_budget));
    }
    let mut unique: BTreeMap<(usize, Vec<Gen>), AnyMatrix> = BTreeMap::new();
    // blocks with s_i = 0 can cancel down to the empty word
    for (w, m) in found.into_iter().filter(|(w, _)| !w.is_empty()) {
        unique
            .entry((w.length(), w.letters().to_vec()))
            .or_insert(m);
    }
    let hits = unique
        .into_iter()
        .map(|((_, letters), matrix)| {
            let word = Word::from_trusted(3, letters);
            let nontrivial = !apply_word(&word).is_identity();
            Hit {
                word,
                matrix,
                nontrivial,
            }
        })
        .collect();
    Ok(SearchReport {
        hits,
        nodes: ctr.nodes.load(Ordering::Relaxed),
        det_passed: ctr.det.load(Ordering::Relaxed),
        prefilter_passed: ctr.pre.load(Ordering::Relaxed),
    })
}
