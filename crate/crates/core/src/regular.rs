//! ω-powers of regular languages, lasso membership for Büchi automata and the
//! small explicit witnesses: `{0}^ω`, `{0^k 1}^ω = P_∞` and the open set
//! `2^ω ∖ {10^ω}`.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::word::{Alphabet, FiniteWord, LassoWord, Letter};

pub type State = usize;

/// A nondeterministic finite automaton. `delta[q][a]` lists the successors of
/// `q` on letter `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteAutomaton {
    alphabet: Alphabet,
    initial: State,
    accepting: Vec<bool>,
    delta: Vec<Vec<Vec<State>>>,
}

impl FiniteAutomaton {
    pub fn new(
        alphabet: Alphabet,
        initial: State,
        accepting: Vec<State>,
        delta: Vec<Vec<Vec<State>>>,
    ) -> Result<Self> {
        let n = delta.len();
        if initial >= n {
            return Err(Error::InvalidAutomaton(format!(
                "initial state {initial} not among {n} states"
            )));
        }
        for (q, row) in delta.iter().enumerate() {
            if row.len() != alphabet.size() as usize {
                return Err(Error::InvalidAutomaton(format!(
                    "state {q} has {} letter entries, expected {}",
                    row.len(),
                    alphabet.size()
                )));
            }
            if let Some(&bad) = row.iter().flatten().find(|&&p| p >= n) {
                return Err(Error::InvalidAutomaton(format!(
                    "state {q} refers to undeclared state {bad}"
                )));
            }
        }
        let mut acc = vec![false; n];
        for q in accepting {
            *acc.get_mut(q).ok_or_else(|| {
                Error::InvalidAutomaton(format!("accepting state {q} is undeclared"))
            })? = true;
        }
        Ok(FiniteAutomaton {
            alphabet,
            initial,
            accepting: acc,
            delta,
        })
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.delta.len()
    }

    pub fn initial(&self) -> State {
        self.initial
    }

    pub fn is_accepting(&self, q: State) -> bool {
        self.accepting[q]
    }

    pub fn successors(&self, q: State, a: Letter) -> &[State] {
        &self.delta[q][a as usize]
    }

    /// Subset step used by membership and by the factorization oracles.
    pub fn step_set(&self, current: &[bool], a: Letter) -> Vec<bool> {
        let mut next = vec![false; self.state_count()];
        for (q, _) in current.iter().enumerate().filter(|(_, &on)| on) {
            for &p in self.successors(q, a) {
                next[p] = true;
            }
        }
        next
    }

    pub fn accepts(&self, w: &FiniteWord) -> bool {
        let mut cur = vec![false; self.state_count()];
        cur[self.initial] = true;
        for &a in w.letters() {
            if !self.alphabet.contains(a) {
                return false;
            }
            cur = self.step_set(&cur, a);
        }
        cur.iter().zip(&self.accepting).any(|(&on, &acc)| on && acc)
    }
}

/// Same shape as [`FiniteAutomaton`]; the accepting set is read as a Büchi
/// condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BuchiAutomaton(FiniteAutomaton);

impl BuchiAutomaton {
    pub fn new(inner: FiniteAutomaton) -> Self {
        BuchiAutomaton(inner)
    }

    pub fn automaton(&self) -> &FiniteAutomaton {
        &self.0
    }
}

/// Recognizer of `{u₁u₂⋯ | u_i ∈ V ∖ {ε}}`.
///
/// A fresh accepting state `c` marks factor boundaries: it copies the outgoing
/// edges of the initial state, and every edge of `V` into an accepting state
/// gets a twin into `c`. The empty word never matters for `V^ω`.
pub fn omega_power_automaton(v: &FiniteAutomaton) -> BuchiAutomaton {
    let n = v.state_count();
    let cut = n;
    let sigma = v.alphabet.size() as usize;
    let mut delta: Vec<Vec<Vec<State>>> = Vec::with_capacity(n + 1);
    for q in 0..n {
        let row = (0..sigma)
            .map(|a| {
                let mut succ = v.delta[q][a].clone();
                if succ.iter().any(|&p| v.accepting[p]) {
                    succ.push(cut);
                }
                succ
            })
            .collect();
        delta.push(row);
    }
    let cut_row = delta[v.initial].clone();
    delta.push(cut_row);
    let mut accepting = vec![false; n + 1];
    accepting[cut] = true;
    BuchiAutomaton(FiniteAutomaton {
        alphabet: v.alphabet,
        initial: cut,
        accepting,
        delta,
    })
}

/// A node of the product of an automaton with the phases of a lasso.
pub type ProductNode = (State, usize);

/// An accepting run over a lasso, replayable edge by edge: the stem leads from
/// the initial node to `cycle[0]`, and the cycle returns to it through at
/// least one accepting node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LassoRun {
    pub stem: Vec<ProductNode>,
    pub cycle: Vec<ProductNode>,
}

/// Decides whether the Büchi automaton accepts the lasso word, returning an
/// accepting run when one exists.
///
/// The search runs on `states × phases`, where phases are the positions of
/// `spoke + cycle`; an accepting product node on a reachable cycle is exactly
/// a run visiting accepting states infinitely often.
pub fn lasso_run(b: &BuchiAutomaton, w: &LassoWord) -> Option<LassoRun> {
    let a = &b.0;
    if !w.fits(a.alphabet) {
        return None;
    }
    let phases = w.phase_count();
    let next_phase = |ph: usize| w.phase(ph + 1);
    let succ = |(q, ph): ProductNode| -> Vec<ProductNode> {
        let letter = w.letter_at(ph);
        a.successors(q, letter)
            .iter()
            .map(|&p| (p, next_phase(ph)))
            .collect()
    };
    let idx = |(q, ph): ProductNode| q * phases + ph;
    let total = a.state_count() * phases;

    let start = (a.initial, 0);
    let parents = bfs(start, total, idx, &succ);
    for q in 0..a.state_count() {
        if !a.accepting[q] {
            continue;
        }
        for ph in 0..phases {
            let node = (q, ph);
            if parents[idx(node)].is_none() {
                continue;
            }
            let back = bfs_to(node, total, idx, &succ);
            if let Some(cycle) = back {
                let stem = path_to(&parents, idx, start, node);
                return Some(LassoRun { stem, cycle });
            }
        }
    }
    None
}

pub fn lasso_accepts(b: &BuchiAutomaton, w: &LassoWord) -> bool {
    lasso_run(b, w).is_some()
}

/// Checks a run edge by edge against the automaton and the word.
pub fn replay_run(b: &BuchiAutomaton, w: &LassoWord, run: &LassoRun) -> bool {
    let a = &b.0;
    let step_ok = |(q, ph): ProductNode, (p, ph2): ProductNode| {
        ph2 == w.phase(ph + 1) && a.successors(q, w.letter_at(ph)).contains(&p)
    };
    let Some(&first) = run.cycle.first() else {
        return false;
    };
    let mut path = run.stem.clone();
    path.push(first);
    if path[0] != (a.initial, 0) {
        return false;
    }
    let mut cyc = run.cycle.clone();
    cyc.push(first);
    path.windows(2).all(|p| step_ok(p[0], p[1]))
        && cyc.windows(2).all(|p| step_ok(p[0], p[1]))
        && run.cycle.iter().any(|&(q, _)| a.accepting[q])
}

type Parents = Vec<Option<Option<ProductNode>>>;

fn bfs(
    start: ProductNode,
    total: usize,
    idx: impl Fn(ProductNode) -> usize,
    succ: &impl Fn(ProductNode) -> Vec<ProductNode>,
) -> Parents {
    let mut parent: Parents = vec![None; total];
    parent[idx(start)] = Some(None);
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        for y in succ(x) {
            if parent[idx(y)].is_none() {
                parent[idx(y)] = Some(Some(x));
                queue.push_back(y);
            }
        }
    }
    parent
}

fn path_to(
    parents: &Parents,
    idx: impl Fn(ProductNode) -> usize,
    start: ProductNode,
    target: ProductNode,
) -> Vec<ProductNode> {
    let mut path = Vec::new();
    let mut cur = target;
    while cur != start {
        let prev = parents[idx(cur)].flatten().expect("node reached by bfs");
        path.push(prev);
        cur = prev;
    }
    path.reverse();
    path
}

/// Shortest nonempty path from `node` back to itself, listed from `node`.
fn bfs_to(
    node: ProductNode,
    total: usize,
    idx: impl Fn(ProductNode) -> usize + Copy,
    succ: &impl Fn(ProductNode) -> Vec<ProductNode>,
) -> Option<Vec<ProductNode>> {
    let mut parent: Parents = vec![None; total];
    let mut queue = VecDeque::new();
    for y in succ(node) {
        if y == node {
            return Some(vec![node]);
        }
        if parent[idx(y)].is_none() {
            parent[idx(y)] = Some(Some(node));
            queue.push_back(y);
        }
    }
    while let Some(x) = queue.pop_front() {
        for y in succ(x) {
            if y == node {
                let mut path = vec![x];
                let mut cur = x;
                while let Some(Some(prev)) = parent[idx(cur)] {
                    if prev == node {
                        break;
                    }
                    path.push(prev);
                    cur = prev;
                }
                path.push(node);
                path.reverse();
                return Some(path);
            }
            if parent[idx(y)].is_none() {
                parent[idx(y)] = Some(Some(x));
                queue.push_back(y);
            }
        }
    }
    None
}

/// `{s ∈ 2^{<ω} | 0 ≺ s or ∃k 10^k1 ≺ s}`, whose ω-power is `2^ω ∖ {10^ω}`.
pub fn xi1_sigma_witness() -> FiniteAutomaton {
    // 0: start, 1: accepting sink, 2: read 10^k
    FiniteAutomaton::new(
        Alphabet::BINARY,
        0,
        vec![1],
        vec![
            vec![vec![1], vec![2]],
            vec![vec![1], vec![1]],
            vec![vec![2], vec![1]],
        ],
    )
    .expect("well-formed witness")
}

/// `{0}`, whose ω-power is `{0^ω}`.
pub fn singleton_zero() -> FiniteAutomaton {
    FiniteAutomaton::new(
        Alphabet::BINARY,
        0,
        vec![1],
        vec![vec![vec![1], vec![]], vec![vec![], vec![]]],
    )
    .expect("well-formed witness")
}

/// `{0^k 1 | k ∈ ω}`, whose ω-power is `P_∞`.
pub fn zeros_then_one() -> FiniteAutomaton {
    FiniteAutomaton::new(
        Alphabet::BINARY,
        0,
        vec![1],
        vec![vec![vec![0], vec![1]], vec![vec![], vec![]]],
    )
    .expect("well-formed witness")
}

/// The automaton with no accepting state.
pub fn empty_language(alphabet: Alphabet) -> FiniteAutomaton {
    let row = vec![Vec::new(); alphabet.size() as usize];
    FiniteAutomaton::new(alphabet, 0, vec![], vec![row]).expect("well-formed")
}

/// Membership in `P_∞`: infinitely many 1s, i.e. a 1 in the cycle.
pub fn pinf_member(w: &LassoWord) -> Result<bool> {
    if !w.fits(Alphabet::BINARY) {
        return Err(Error::LetterOutOfRange {
            letter: 2,
            size: 2,
        });
    }
    Ok(w.cycle().letters().contains(&1))
}

/// `0^{b(0)} 1 0^{b(1)} 1 ⋯ 0^{b(k)} 1`, the finite part of the embedding of
/// Baire space into `P_∞`.
pub fn baire_embed_prefix(b: &[usize]) -> FiniteWord {
    let mut letters = Vec::with_capacity(b.iter().sum::<usize>() + b.len());
    for &k in b {
        letters.extend(std::iter::repeat_n(0, k));
        letters.push(1);
    }
    FiniteWord::from_trusted(Alphabet::BINARY, letters)
}
