//! Regular prefix-closed trees over the pair alphabet and the countable
//! transition system they induce on pair indices.
//!
//! A state of the system is a pair index `n`; reading `m` moves to any `p`
//! whose β-part extends that of `q_n` by one letter and whose α-part is
//! `q¹_n m`. Only the tree automaton's state matters for acceptance, so runs
//! over lassos are searched on `tree states × α phases`.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::pairs::{PairCode, PairIndex, QPair};
use crate::word::{Alphabet, LassoWord, Letter};

pub type TreeState = usize;

/// Pair letters are coded `2·β-bit + α-bit`, listed as `"00" "01" "10" "11"`.
pub const PAIR_LETTERS: [&str; 4] = ["00", "01", "10", "11"];

fn pair_letter(beta: Letter, alpha: Letter) -> usize {
    2 * beta as usize + alpha as usize
}

/// A deterministic automaton over pair letters; the presented tree is the set
/// of pair words whose run ends (equivalently, stays) in live states.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RTreePresentation {
    names: Vec<String>,
    initial: TreeState,
    live: Vec<bool>,
    delta: Vec<[TreeState; 4]>,
}

impl RTreePresentation {
    pub fn new(
        names: Vec<String>,
        initial: TreeState,
        live: Vec<TreeState>,
        delta: Vec<[TreeState; 4]>,
    ) -> Result<Self> {
        let n = names.len();
        if delta.len() != n {
            return Err(Error::InvalidTree(format!(
                "{} states but {} transition rows",
                n,
                delta.len()
            )));
        }
        if initial >= n {
            return Err(Error::InvalidTree("initial state is undeclared".into()));
        }
        if let Some(&bad) = delta.iter().flatten().find(|&&p| p >= n) {
            return Err(Error::InvalidTree(format!("transition to undeclared state {bad}")));
        }
        let mut flags = vec![false; n];
        for q in live {
            *flags
                .get_mut(q)
                .ok_or_else(|| Error::InvalidTree(format!("live state {q} is undeclared")))? = true;
        }
        let tree = RTreePresentation {
            names,
            initial,
            live: flags,
            delta,
        };
        tree.validate()?;
        Ok(tree)
    }

    /// The tree of all pair words.
    pub fn full() -> Self {
        RTreePresentation::new(vec!["L".into()], 0, vec![0], vec![[0; 4]]).expect("valid")
    }

    /// `{(t, s) | t = s}`.
    pub fn diag() -> Self {
        RTreePresentation::new(
            vec!["L".into(), "D".into()],
            0,
            vec![0],
            vec![[0, 1, 1, 0], [1, 1, 1, 1]],
        )
        .expect("valid")
    }

    pub fn builtin(name: &str) -> Option<Self> {
        match name {
            "full" => Some(Self::full()),
            "diag" => Some(Self::diag()),
            _ => None,
        }
    }

    fn validate(&self) -> Result<()> {
        if !self.live[self.initial] {
            return Err(Error::InvalidTree(
                "the initial state must be live (the empty pair word is in the tree)".into(),
            ));
        }
        for (q, row) in self.delta.iter().enumerate() {
            if self.live[q] {
                continue;
            }
            if let Some(k) = (0..4).find(|&k| self.live[row[k]]) {
                return Err(Error::InvalidTree(format!(
                    "not prefix-closed: dead state {} reaches live state {} on {}",
                    self.names[q], self.names[row[k]], PAIR_LETTERS[k]
                )));
            }
        }
        Ok(())
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn initial(&self) -> TreeState {
        self.initial
    }

    pub fn state_count(&self) -> usize {
        self.names.len()
    }

    pub fn is_live(&self, q: TreeState) -> bool {
        self.live[q]
    }

    pub fn step(&self, q: TreeState, beta: Letter, alpha: Letter) -> TreeState {
        self.delta[q][pair_letter(beta, alpha)]
    }

    pub fn transitions(&self, q: TreeState) -> [TreeState; 4] {
        self.delta[q]
    }

    /// The state reached after reading the packed pair.
    pub fn run_code(&self, code: PairCode) -> TreeState {
        (0..code.len).fold(self.initial, |q, i| {
            self.step(q, code.beta_bit(i), code.alpha_bit(i))
        })
    }
}

pub fn r_contains(r: &RTreePresentation, p: &QPair) -> bool {
    let q = p
        .beta()
        .letters()
        .iter()
        .zip(p.alpha().letters())
        .fold(r.initial, |q, (&b, &a)| r.step(q, b, a));
    r.is_live(q)
}

/// `q_N ∈ Q_f`: β-part nonempty, ending in 1, and the pair in the tree.
pub fn qf_member(r: &RTreePresentation, n: PairIndex) -> Result<bool> {
    let code = PairCode::from_index(n)?;
    Ok(code.len > 0 && code.beta_bit(code.len - 1) == 1 && r.is_live(r.run_code(code)))
}

/// A run over a lasso, described by the β-letters it guesses after leaving
/// `q_start`: first `stem`, then `cycle` forever. `cycle.len()` is a multiple
/// of the α-cycle length, so the run is itself ultimately periodic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TsWitness {
    pub stem: Vec<Letter>,
    pub cycle: Vec<Letter>,
}

type Node = (TreeState, usize);

struct Product<'a> {
    r: &'a RTreePresentation,
    alpha: &'a LassoWord,
    phases: usize,
}

impl Product<'_> {
    fn index(&self, (q, ph): Node) -> usize {
        q * self.phases + ph
    }

    /// Successor on β-letter `b`, and whether that step lands in `Q_f`.
    fn step(&self, (q, ph): Node, b: Letter) -> (Node, bool) {
        let next = self.r.step(q, b, self.alpha.letter_at(ph));
        ((next, self.alpha.phase(ph + 1)), b == 1 && self.r.is_live(next))
    }

    /// Breadth-first parents from `from`, recording the β-letter used.
    fn search(&self, from: Node) -> Vec<Option<(Node, Letter)>> {
        let mut parent = vec![None; self.r.state_count() * self.phases];
        let mut seen = vec![false; parent.len()];
        seen[self.index(from)] = true;
        let mut queue = VecDeque::from([from]);
        while let Some(x) = queue.pop_front() {
            for b in 0..2 {
                let (y, _) = self.step(x, b);
                if !seen[self.index(y)] {
                    seen[self.index(y)] = true;
                    parent[self.index(y)] = Some((x, b));
                    queue.push_back(y);
                }
            }
        }
        parent
    }

    fn letters_to(
        &self,
        parent: &[Option<(Node, Letter)>],
        from: Node,
        to: Node,
    ) -> Option<Vec<Letter>> {
        let mut out = Vec::new();
        let mut cur = to;
        while cur != from {
            let (prev, b) = parent[self.index(cur)]?;
            out.push(b);
            cur = prev;
        }
        out.reverse();
        Some(out)
    }
}

/// Searches for a Büchi-accepting run of the transition system from
/// `q_start` reading `alpha`.
pub fn ts_lasso_run(
    r: &RTreePresentation,
    start: PairIndex,
    alpha: &LassoWord,
) -> Result<Option<TsWitness>> {
    if !alpha.fits(Alphabet::BINARY) {
        return Err(Error::LetterOutOfRange {
            letter: 2,
            size: 2,
        });
    }
    let product = Product {
        r,
        alpha,
        phases: alpha.phase_count(),
    };
    let origin = (r.run_code(PairCode::from_index(start)?), 0);
    let reach = product.search(origin);
    let reached = |x: Node| x == origin || reach[product.index(x)].is_some();
    for q in 0..r.state_count() {
        for ph in 0..product.phases {
            let x = (q, ph);
            if !reached(x) {
                continue;
            }
            for b in 0..2 {
                let (y, hit) = product.step(x, b);
                if !hit {
                    continue;
                }
                let back = product.search(y);
                let Some(tail) = product.letters_to(&back, y, x) else {
                    continue;
                };
                let stem = product
                    .letters_to(&reach, origin, x)
                    .expect("x is reachable");
                let mut cycle = vec![b];
                cycle.extend(tail);
                return Ok(Some(TsWitness { stem, cycle }));
            }
        }
    }
    Ok(None)
}

pub fn ts_lasso_accepts(r: &RTreePresentation, start: PairIndex, alpha: &LassoWord) -> Result<bool> {
    Ok(ts_lasso_run(r, start, alpha)?.is_some())
}

/// Checks a witness by simulation: the cycle must return to its starting
/// product node and land in `Q_f` at least once.
pub fn replay_ts_witness(
    r: &RTreePresentation,
    start: PairIndex,
    alpha: &LassoWord,
    w: &TsWitness,
) -> Result<bool> {
    if w.cycle.is_empty() {
        return Ok(false);
    }
    let code = PairCode::from_index(start)?;
    let mut q = r.run_code(code);
    let mut pos = 0usize;
    for &b in &w.stem {
        q = r.step(q, b, alpha.letter_at(pos));
        pos += 1;
    }
    let anchor = (q, alpha.phase(pos));
    let mut hit = false;
    for &b in &w.cycle {
        q = r.step(q, b, alpha.letter_at(pos));
        pos += 1;
        hit |= b == 1 && r.is_live(q);
    }
    Ok(hit && (q, alpha.phase(pos)) == anchor)
}

/// The set the transition system accepts from `q_0`.
pub fn derived_b_member(r: &RTreePresentation, alpha: &LassoWord) -> Result<bool> {
    ts_lasso_accepts(r, PairIndex(0), alpha)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lasso(u: &str, v: &str) -> LassoWord {
        LassoWord::from_digits(Alphabet::BINARY, u, v).unwrap()
    }

    #[test]
    fn tree_membership() {
        let q = |b, a| QPair::from_digits(b, a).unwrap();
        assert!(r_contains(&RTreePresentation::full(), &q("01", "10")));
        assert!(r_contains(&RTreePresentation::diag(), &q("01", "01")));
        assert!(!r_contains(&RTreePresentation::diag(), &q("01", "00")));
    }

    #[test]
    fn accepting_pairs() {
        let full = RTreePresentation::full();
        assert!(qf_member(&full, PairIndex(4)).unwrap());
        assert!(!qf_member(&full, PairIndex(1)).unwrap());
        assert!(!qf_member(&full, PairIndex(0)).unwrap());
        assert!(!qf_member(&RTreePresentation::diag(), PairIndex(0)).unwrap());
        assert!(!qf_member(&RTreePresentation::diag(), PairIndex(3)).unwrap());
    }

    #[test]
    fn acceptance_examples() {
        let diag = RTreePresentation::diag();
        let full = RTreePresentation::full();
        let q0 = PairIndex(0);
        assert!(ts_lasso_accepts(&diag, q0, &lasso("", "01")).unwrap());
        assert!(!ts_lasso_accepts(&diag, q0, &lasso("1", "0")).unwrap());
        assert!(ts_lasso_accepts(&full, q0, &lasso("1", "0")).unwrap());
        assert!(derived_b_member(&diag, &lasso("", "1")).unwrap());
        assert!(!derived_b_member(&diag, &lasso("", "0")).unwrap());
        assert!(derived_b_member(&full, &lasso("", "0")).unwrap());
        // q_3 = (1,0) already leaves the diagonal
        assert!(!ts_lasso_accepts(&diag, PairIndex(3), &lasso("", "1")).unwrap());
    }

    #[test]
    fn witnesses_replay() {
        let diag = RTreePresentation::diag();
        let w = lasso("10", "011");
        let run = ts_lasso_run(&diag, PairIndex(4), &w).unwrap().unwrap();
        assert!(replay_ts_witness(&diag, PairIndex(4), &w, &run).unwrap());
        let mut bad = run.clone();
        bad.cycle = vec![0; bad.cycle.len()];
        assert!(!replay_ts_witness(&diag, PairIndex(4), &w, &bad).unwrap());
    }

    #[test]
    fn prefix_closure_is_enforced() {
        let err = RTreePresentation::new(
            vec!["A".into(), "B".into()],
            0,
            vec![0],
            vec![[1, 1, 1, 1], [0, 0, 0, 0]],
        );
        assert!(matches!(err, Err(Error::InvalidTree(_))));
        let dead_start = RTreePresentation::new(vec!["A".into()], 0, vec![], vec![[0; 4]]);
        assert!(matches!(dead_start, Err(Error::InvalidTree(_))));
    }
}
