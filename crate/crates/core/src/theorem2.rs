//! The languages `π`, `μ⁰`, `μ¹`, `μ` and `A = μ ∪ π` over `{0,1,2,3}`, the map
//! `F` and the decomposition of `A^ω` into `μ^ω` and the pieces
//! `A_{t,S,j,N}`.
//!
//! Every word involved has the *block shape* `2^N ⌢ [m_i 2^{P_i} 3 2^{R_i}]`
//! with `m_i ∈ {0,1}`; the deciders work on that token form so that run
//! lengths never have to be materialized.
//!
//! Nothing here consults the product-graph search of the transition system:
//! `π^ω ∩ K_{N,j}` is decided by cutting the word into `π`-factors.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::pairs::{m_index_of, m_offset, PairCode, PairIndex};
use crate::rtree::{qf_member, RTreePresentation, TreeState};
use crate::word::{
    run_decompose, Alphabet, FiniteWord, KnjWord, LassoWord, Letter, SyntheticWord,
    MATERIALIZE_LIMIT, THREE, TWO,
};
use crate::Decision;

/// One `m 2^P 3 2^R` block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Block {
    pub m: Letter,
    pub p: u128,
    pub r: u128,
}

/// A finite word in block shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Shape {
    pub n: u128,
    pub blocks: Vec<Block>,
}

impl Shape {
    pub fn to_word(&self) -> Result<FiniteWord> {
        let total = self.blocks.iter().try_fold(self.n, |acc, b| {
            acc.checked_add(b.p)?.checked_add(b.r)?.checked_add(2)
        });
        match total {
            Some(t) if t <= MATERIALIZE_LIMIT => {}
            Some(t) => return Err(Error::TooLong(t)),
            None => return Err(Error::Overflow("word length")),
        }
        let mut out = vec![TWO; self.n as usize];
        for b in &self.blocks {
            out.push(b.m);
            out.extend(std::iter::repeat_n(TWO, b.p as usize));
            out.push(THREE);
            out.extend(std::iter::repeat_n(TWO, b.r as usize));
        }
        FiniteWord::new(Alphabet::QUATERNARY, out)
    }
}

/// Incremental parser of the block shape over run tokens.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum ShapeState {
    Start,
    /// the leading run is complete
    Ready,
    /// inside `m 2^P`, waiting for the `3`
    NeedThree(Letter, u128),
    /// inside the trailing run of a complete block
    AfterThree(Letter, u128, u128),
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct ShapeParser {
    state: ShapeState,
    n: u128,
    blocks: Vec<Block>,
}

impl ShapeParser {
    fn new() -> Self {
        ShapeParser {
            state: ShapeState::Start,
            n: 0,
            blocks: Vec::new(),
        }
    }

    /// Feeds one token; `false` on a shape error.
    fn feed(&mut self, delim: Option<Letter>, run: u128) -> bool {
        use ShapeState::*;
        self.state = match (self.state, delim) {
            (Start, None) => {
                self.n = run;
                Ready
            }
            (Start | Ready, Some(m @ (0 | 1))) => NeedThree(m, run),
            (NeedThree(m, p), Some(THREE)) => AfterThree(m, p, run),
            (AfterThree(m, p, r), Some(m2 @ (0 | 1))) => {
                self.blocks.push(Block { m, p, r });
                NeedThree(m2, run)
            }
            (AfterThree(m, p, r), None) => AfterThree(m, p, r + run),
            (Ready, None) => {
                self.n += run;
                Ready
            }
            _ => return false,
        };
        true
    }

    /// The complete shape, if the input ended right after a block.
    fn finish(mut self) -> Option<Shape> {
        match self.state {
            ShapeState::AfterThree(m, p, r) => {
                self.blocks.push(Block { m, p, r });
                Some(Shape {
                    n: self.n,
                    blocks: self.blocks,
                })
            }
            _ => None,
        }
    }
}

fn tokens(s: &FiniteWord) -> impl Iterator<Item = (Option<Letter>, u128)> + '_ {
    run_decompose(s).into_iter().map(|(d, r)| (d, r as u128))
}

/// Parses `2^N ⌢ [m_i 2^{P_i} 3 2^{R_i}]_{i≤l}`; no condition on the runs.
pub fn block_shape(s: &FiniteWord) -> Option<Shape> {
    let mut parser = ShapeParser::new();
    for (d, r) in tokens(s) {
        if !parser.feed(d, r) {
            return None;
        }
    }
    parser.finish()
}

fn is_m(value: u128) -> bool {
    m_index_of(value).is_some()
}

/// `M_{a+1}` when `value = M_a`.
fn next_m(value: u128) -> Option<u128> {
    m_index_of(value).and_then(|a| m_offset(a + 1).ok())
}

/// A witnessing `π` decomposition: block `i` reads `m_i` from `n_i` to `p_i`
/// and pads with `r_i = M_{j+i+1} − p_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiDecomposition {
    pub j: u32,
    pub blocks: Vec<PiBlock>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PiBlock {
    pub n: PairIndex,
    pub m: Letter,
    pub p: PairIndex,
    pub r: u128,
}

/// The `j` with `P_0 = M_{j+1}` and the chain states after each block, if
/// the blocks can start a `π`-word from `n`: runs match `M_{j+1}, M_{j+2}, …`
/// and every block but the last is followed by its full run.
///
/// The returned states are all `p` reachable from `n` through the `m`s.
pub fn pi_prefix_states(n: u128, blocks: &[Block]) -> Option<(u32, Vec<PairCode>)> {
    let first = blocks.first()?;
    let j = m_index_of(first.p)?.checked_sub(1)?;
    if n > m_offset(j).ok()? {
        return None;
    }
    for (i, b) in blocks.iter().enumerate() {
        let run = m_offset(j + i as u32 + 1).ok()?;
        if b.p != run || (i + 1 < blocks.len() && b.r != run) {
            return None;
        }
    }
    let mut states = vec![PairCode::from_index(PairIndex(n)).ok()?];
    for b in blocks {
        states = states
            .iter()
            .flat_map(|s| [s.push(0, b.m), s.push(1, b.m)])
            .collect::<Result<Vec<_>>>()
            .ok()?;
    }
    Some((j, states))
}

/// Token-level `π` recognizer.
pub fn pi_decompose(shape: &Shape, r: &RTreePresentation) -> Option<PiDecomposition> {
    let first = shape.blocks.first()?;
    let j = m_index_of(first.p)?.checked_sub(1)?;
    let l = shape.blocks.len() - 1;
    let n0 = shape.n;
    if n0 > m_offset(j).ok()? {
        return None;
    }
    let mut runs = Vec::with_capacity(l + 1);
    for (i, b) in shape.blocks.iter().enumerate() {
        let run = m_offset(j.checked_add(i as u32 + 1)?).ok()?;
        if b.p != run || (i < l && b.r != run) || b.r > run {
            return None;
        }
        runs.push(run);
    }
    // the last state is forced by the final run; the chain is its truncations
    let p_last = PairIndex(runs[l] - shape.blocks[l].r);
    let start = PairCode::from_index(PairIndex(n0)).ok()?;
    let end = PairCode::from_index(p_last).ok()?;
    let steps = l + 1;
    if end.len != start.len + steps {
        return None;
    }
    let alpha_tail = shape.blocks.iter().fold(0u64, |acc, b| (acc << 1) | b.m as u64);
    if end.beta >> steps != start.beta || end.alpha != (start.alpha << steps) | alpha_tail {
        return None;
    }
    if !qf_member(r, p_last).ok()? {
        return None;
    }
    let mut blocks = Vec::with_capacity(steps);
    let mut prev = PairIndex(n0);
    for (i, b) in shape.blocks.iter().enumerate() {
        let drop = steps - 1 - i;
        let code = PairCode {
            len: start.len + i + 1,
            beta: end.beta >> drop,
            alpha: end.alpha >> drop,
        };
        let p = code.index().ok()?;
        blocks.push(PiBlock {
            n: prev,
            m: b.m,
            p,
            r: runs[i] - p.0,
        });
        prev = p;
    }
    Some(PiDecomposition { j, blocks })
}

pub fn pi_member(s: &FiniteWord, r: &RTreePresentation) -> Option<PiDecomposition> {
    pi_decompose(&block_shape(s)?, r)
}

/// Shape with at least two blocks and every `P_i` some `M_j`.
fn mu_common(shape: &Shape) -> bool {
    shape.blocks.len() >= 2 && shape.blocks.iter().all(|b| is_m(b.p))
}

pub fn mu0_shape(shape: &Shape) -> bool {
    mu_common(shape) && {
        let b = shape.blocks[shape.blocks.len() - 2];
        b.p != b.r
    }
}

pub fn mu1_shape(shape: &Shape) -> bool {
    mu_common(shape) && {
        let l = shape.blocks.len() - 2;
        next_m(shape.blocks[l].p) != Some(shape.blocks[l + 1].p)
    }
}

pub fn mu_shape(shape: &Shape) -> bool {
    mu0_shape(shape) || mu1_shape(shape)
}

pub fn mu0_member(s: &FiniteWord) -> bool {
    block_shape(s).is_some_and(|sh| mu0_shape(&sh))
}

pub fn mu1_member(s: &FiniteWord) -> bool {
    block_shape(s).is_some_and(|sh| mu1_shape(&sh))
}

pub fn mu_member(s: &FiniteWord) -> bool {
    block_shape(s).is_some_and(|sh| mu_shape(&sh))
}

pub fn a_shape_member(shape: &Shape, r: &RTreePresentation) -> bool {
    mu_shape(shape) || pi_decompose(shape, r).is_some()
}

pub fn a_member(s: &FiniteWord, r: &RTreePresentation) -> bool {
    block_shape(s).is_some_and(|sh| a_shape_member(&sh, r))
}

/// Whether the lasso lies in `P`: block shape forever with every `P_i` some
/// `M_j`. `None` if checking would read more than `budget` letters.
///
/// Any error is visible within `|u| + 3|v| + 2` letters: past that point the
/// letter before a run and the run itself repeat with period `|v|`.
pub fn lasso_in_p(w: &LassoWord, budget: usize) -> Option<bool> {
    if w.cycle().letters().iter().all(|&a| a == TWO) {
        return Some(false);
    }
    let len = 2 * w.spoke().len() + 4 * w.cycle().len() + 4;
    if len > budget {
        return None;
    }
    let toks: Vec<_> = tokens(&w.prefix(len)).collect();
    let mut parser = ShapeParser::new();
    for (k, &(d, run)) in toks.iter().enumerate() {
        if !parser.feed(d, run) {
            return Some(false);
        }
        // the last run may continue past the materialized prefix
        if let ShapeState::NeedThree(_, p) = parser.state {
            if k + 1 < toks.len() && !is_m(p) {
                return Some(false);
            }
        }
    }
    Some(true)
}

/// An element of `K_{N,j}` seen from block `offset` on: blocks
/// `m_t 2^{M_{j+t+1}} 3 2^{M_{j+t+1}}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnjTail {
    pub j: u32,
    pub m: LassoWord,
}

/// Block profile of a word in `P` whose blocks eventually follow some
/// `K_{n,j}`: explicit head blocks, then the tail's blocks in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Profile {
    pub n: u128,
    pub head: Vec<Block>,
    pub tail: KnjTail,
}

impl Profile {
    pub fn block(&self, i: usize) -> Result<Block> {
        if let Some(b) = self.head.get(i) {
            return Ok(*b);
        }
        let t = i - self.head.len();
        let run = m_offset(
            u32::try_from(t)
                .ok()
                .and_then(|t| self.tail.j.checked_add(t)?.checked_add(1))
                .ok_or(Error::Overflow("block index"))?,
        )?;
        Ok(Block {
            m: self.tail.m.letter_at(t),
            p: run,
            r: run,
        })
    }

    /// The tail seen from block `i ≥ head.len()`.
    pub fn tail_from(&self, i: usize) -> (u32, LassoWord) {
        let t = i - self.head.len();
        (self.tail.j + t as u32, self.tail.m.drop_prefix(t))
    }

    /// Violations can only involve head blocks and the first tail block.
    pub fn violation(&self, i: usize) -> Result<bool> {
        let (b, c) = (self.block(i)?, self.block(i + 1)?);
        Ok(b.p != b.r || next_m(b.p) != Some(c.p))
    }

    pub fn max_violation(&self) -> Result<Option<usize>> {
        for i in (0..self.head.len()).rev() {
            if self.violation(i)? {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }
}

/// Block profile of a word built on some `K_{n,j}`; `None` if it is not in `P`.
pub fn profile(w: &SyntheticWord) -> Result<Option<Profile>> {
    let (head, tail) = match w {
        SyntheticWord::Lasso(_) => {
            return Err(Error::InvalidAutomaton(
                "lasso words have no K-tail profile".into(),
            ))
        }
        SyntheticWord::Knj(k) => (None, k),
        SyntheticWord::Prefixed { head, tail } => (Some(head), tail),
    };
    let mut parser = ShapeParser::new();
    if let Some(h) = head {
        for (d, r) in tokens(h) {
            if !parser.feed(d, r) {
                return Ok(None);
            }
        }
    }
    if !parser.feed(None, tail.n()) {
        return Ok(None);
    }
    if matches!(parser.state, ShapeState::NeedThree(..)) {
        return Ok(None);
    }
    let n = parser.n;
    let mut head = parser.blocks;
    if let ShapeState::AfterThree(m, p, r) = parser.state {
        head.push(Block { m, p, r });
    }
    if !head.iter().all(|b| is_m(b.p)) {
        return Ok(None);
    }
    Ok(Some(Profile {
        n,
        head,
        tail: KnjTail {
            j: tail.j(),
            m: tail.m().clone(),
        },
    }))
}

/// `w` as an element of some `K_{N,j}`, if it is one.
pub fn to_knj(w: &SyntheticWord) -> Result<Option<KnjWord>> {
    let prof = match w {
        SyntheticWord::Lasso(_) => return Ok(None),
        SyntheticWord::Knj(k) => return Ok(Some(k.clone())),
        SyntheticWord::Prefixed { .. } => match profile(w)? {
            Some(p) => p,
            None => return Ok(None),
        },
    };
    let Some(j) = m_index_of(prof.block(0)?.p).and_then(|a| a.checked_sub(1)) else {
        return Ok(None);
    };
    if prof.n > m_offset(j)? || prof.max_violation()?.is_some() {
        return Ok(None);
    }
    let mut spoke: Vec<Letter> = prof.head.iter().map(|b| b.m).collect();
    spoke.extend_from_slice(prof.tail.m.spoke().letters());
    let m = LassoWord::new(
        FiniteWord::new(Alphabet::BINARY, spoke)?,
        prof.tail.m.cycle().clone(),
    )?;
    Ok(Some(KnjWord::new(prof.n, j, m)?))
}

pub fn mu_omega_member(w: &SyntheticWord, budget: usize) -> Decision {
    match w {
        // a lasso in P has bounded runs, so every period of blocks contains a
        // violation, and infinitely many violations cut it into μ-words
        SyntheticWord::Lasso(l) => match lasso_in_p(l, budget) {
            Some(b) => Decision::from_bool(b),
            None => Decision::Inconclusive,
        },
        // K-tails never violate, and each μ-factor needs its own violation
        SyntheticWord::Knj(_) | SyntheticWord::Prefixed { .. } => Decision::No,
    }
}

/// A value of `F`: `t = None` stands for `∅`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Triple {
    pub t: Option<FiniteWord>,
    pub s: u128,
    pub j: u32,
}

impl std::fmt::Display for Triple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.t {
            None => write!(f, "(∅,{},{})", self.s, self.j),
            Some(t) => write!(f, "({},{},{})", t, self.s, self.j),
        }
    }
}

pub fn f_map(w: &SyntheticWord, budget: usize) -> Result<Triple> {
    if let SyntheticWord::Lasso(l) = w {
        return match lasso_in_p(l, budget) {
            Some(true) => Err(Error::InMuOmega),
            Some(false) => Err(Error::NotInP),
            None => Err(Error::BudgetExceeded(budget)),
        };
    }
    let prof = profile(w)?.ok_or(Error::NotInP)?;
    f_map_profile(&prof)
}

pub fn f_map_profile(prof: &Profile) -> Result<Triple> {
    let j0 = m_index_of(prof.block(0)?.p).ok_or(Error::NotInP)?;
    let violation = prof.max_violation()?;
    if violation.is_none() && j0 >= 1 && prof.n <= m_offset(j0 - 1)? {
        return Ok(Triple {
            t: None,
            s: prof.n,
            j: j0,
        });
    }
    let l = violation.ok_or(Error::NoMaximalViolation)?;
    let mut blocks: Vec<Block> = (0..=l).map(|i| prof.block(i)).collect::<Result<_>>()?;
    let next = prof.block(l + 1)?;
    blocks.push(Block { r: 0, ..next });
    let t = Shape { n: prof.n, blocks }.to_word()?;
    let j1 = m_index_of(prof.block(l + 2)?.p).ok_or(Error::NotInP)?;
    Ok(Triple {
        t: Some(t),
        s: next.r,
        j: j1,
    })
}

fn twos(k: u128) -> Result<Vec<Letter>> {
    if k > MATERIALIZE_LIMIT {
        return Err(Error::TooLong(k));
    }
    Ok(vec![TWO; k as usize])
}

/// `t 2^S m 2^{M_{j+1}} 3`.
fn probe_word(t: Option<&FiniteWord>, s: u128, m: Letter, j: u32) -> Result<FiniteWord> {
    let mut out: Vec<Letter> = t.map(|t| t.letters().to_vec()).unwrap_or_default();
    out.extend(twos(s)?);
    out.push(m);
    out.extend(twos(m_offset(j + 1)?)?);
    out.push(THREE);
    FiniteWord::new(Alphabet::QUATERNARY, out)
}

pub fn is_suitable(t: Option<&FiniteWord>, s: u128, j: u32) -> Result<bool> {
    let head_ok = match t {
        None => s <= m_offset(j)?,
        Some(t) => mu_member(t) && t.last() == Some(THREE),
    };
    if !head_ok {
        return Ok(false);
    }
    for m in 0..2 {
        if mu_member(&probe_word(t, s, m, j)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Decides `γ ∈ π^ω` for `γ ∈ K_{N,j}` by cutting it into `π`-factors.
///
/// A factorization carries the current pair index from block to block: a
/// factor starting at block `k` with leading run `n` reads `m_k, m_{k+1}, …`
/// along `n → p → …` and may end at block `k'` exactly when `q_p ∈ Q_f`, the
/// remainder of the run `M_{j+k'+1} − p` becoming the next factor's leading
/// run. Which cuts lie ahead depends only on the tree state of `q_p` and the
/// phase of `m`, so partial factorizations are merged on that key and the word
/// is accepted iff a reachable cycle of keys contains a cut. Every cut is
/// re-validated by the `π` recognizer on the factor's tokens.
pub fn pi_omega_knj_member(w: &SyntheticWord, r: &RTreePresentation) -> Result<bool> {
    let SyntheticWord::Knj(k) = w else {
        return Err(Error::NotInKnj);
    };
    let j = k.j();
    let m = k.m();
    type Key = (TreeState, usize);
    struct Node {
        block: usize,
        state: PairCode,
        factor_start: usize,
        factor_n: u128,
    }
    let key_of = |state: PairCode, block: usize| -> Key { (r.run_code(state), m.phase(block)) };
    let run = |i: usize| -> Result<u128> {
        m_offset(j.checked_add(i as u32 + 1).ok_or(Error::Overflow("block index"))?)
    };

    let start = PairCode::from_index(PairIndex(k.n()))?;
    let origin = key_of(start, 0);
    let mut edges: HashMap<Key, Vec<(Key, bool)>> = HashMap::new();
    let mut seen = HashSet::from([origin]);
    let mut queue = VecDeque::from([Node {
        block: 0,
        state: start,
        factor_start: 0,
        factor_n: k.n(),
    }]);
    while let Some(node) = queue.pop_front() {
        let from = key_of(node.state, node.block);
        let letter = m.letter_at(node.block);
        for b in 0..2 {
            let next = node.state.push(b, letter)?;
            let p = next.index()?;
            let mut cut = qf_member(r, p)?;
            if cut {
                let mut blocks: Vec<Block> = (node.factor_start..=node.block)
                    .map(|i| {
                        let rr = run(i)?;
                        Ok(Block {
                            m: m.letter_at(i),
                            p: rr,
                            r: rr,
                        })
                    })
                    .collect::<Result<_>>()?;
                let last = blocks.last_mut().expect("nonempty factor");
                last.r = last.p - p.0;
                let factor = Shape {
                    n: node.factor_n,
                    blocks,
                };
                cut = pi_decompose(&factor, r).is_some();
                debug_assert!(cut, "cut rejected by the recognizer");
            }
            let to = key_of(next, node.block + 1);
            edges.entry(from).or_default().push((to, cut));
            if seen.insert(to) {
                let (factor_start, factor_n) = if cut {
                    (node.block + 1, p.0)
                } else {
                    (node.factor_start, node.factor_n)
                };
                queue.push_back(Node {
                    block: node.block + 1,
                    state: next,
                    factor_start,
                    factor_n,
                });
            }
        }
    }
    let reaches = |from: Key, target: Key| -> bool {
        let mut seen = vec![from];
        let mut stack = vec![from];
        while let Some(x) = stack.pop() {
            if x == target {
                return true;
            }
            for &(y, _) in edges.get(&x).map(Vec::as_slice).unwrap_or(&[]) {
                if !seen.contains(&y) {
                    seen.push(y);
                    stack.push(y);
                }
            }
        }
        false
    };
    Ok(edges
        .iter()
        .any(|(&x, out)| out.iter().any(|&(y, cut)| cut && reaches(y, x))))
}

/// How [`a_omega_member`] classified a word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AOmegaPath {
    MuOmega,
    NotInP,
    /// `P ∖ μ^ω` but outside every `P_{t,S,j}` with `(t,S,j)` suitable.
    Unclassified,
    /// In `P_{t,S,j}`; `n` is the `N` witnessing `A_{t,S,j,N}`, if any.
    Suitable { triple: Triple, n: Option<u128> },
    Inconclusive,
}

impl AOmegaPath {
    pub fn decision(&self) -> Decision {
        match self {
            AOmegaPath::MuOmega | AOmegaPath::Suitable { n: Some(_), .. } => Decision::Yes,
            AOmegaPath::Inconclusive => Decision::Inconclusive,
            _ => Decision::No,
        }
    }
}

/// Evaluates `μ^ω ∪ ⋃ A_{t,S,j,N}` on `w`.
pub fn a_omega_classify(
    w: &SyntheticWord,
    r: &RTreePresentation,
    budget: usize,
) -> Result<AOmegaPath> {
    match mu_omega_member(w, budget) {
        Decision::Yes => return Ok(AOmegaPath::MuOmega),
        Decision::Inconclusive => return Ok(AOmegaPath::Inconclusive),
        Decision::No => {}
    }
    let f = match f_map(w, budget) {
        Ok(f) => f,
        Err(Error::NotInP) => return Ok(AOmegaPath::NotInP),
        Err(Error::NoMaximalViolation) => return Ok(AOmegaPath::Unclassified),
        Err(Error::BudgetExceeded(_)) => return Ok(AOmegaPath::Inconclusive),
        Err(e) => return Err(e),
    };
    let j = f.j.checked_sub(1).ok_or(Error::NotInP)?;
    let triple = Triple { j, ..f };
    if !is_suitable(triple.t.as_ref(), triple.s, j)? {
        return Ok(AOmegaPath::Unclassified);
    }
    // γ ∈ P_{t,S,j}: t 2^S is a prefix and the rest lies in K_{0,j}
    let t_len = triple.t.as_ref().map_or(0, FiniteWord::len) as u128;
    let cut = usize::try_from(t_len + triple.s).map_err(|_| Error::Overflow("prefix length"))?;
    let m = match to_knj(&w.drop_prefix(cut)?)? {
        Some(k) if k.n() == 0 && k.j() == j => k.m().clone(),
        _ => return Ok(AOmegaPath::Unclassified),
    };
    let candidates: Vec<u128> = match triple.t {
        None => vec![triple.s],
        Some(_) => (0..=m_offset(j)?.min(triple.s)).collect(),
    };
    for n in candidates {
        let shifted = SyntheticWord::Knj(KnjWord::new(n, j, m.clone())?);
        if pi_omega_knj_member(&shifted, r)? {
            return Ok(AOmegaPath::Suitable { triple, n: Some(n) });
        }
    }
    Ok(AOmegaPath::Suitable { triple, n: None })
}

pub fn a_omega_member(w: &SyntheticWord, r: &RTreePresentation, budget: usize) -> Result<Decision> {
    Ok(a_omega_classify(w, r, budget)?.decision())
}
