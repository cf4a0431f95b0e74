//! Direct factorization searches for `A^ω`, used as evidence against the
//! classification `μ^ω ∪ ⋃ A_{t,S,j,N}`.
//!
//! Factors are validated one by one with the finitary recognizers; no map `F`
//! and no suitable triples are involved. Once a factorization has passed all
//! violations of the block profile, the remainder lies in some `K_{n,j}`,
//! where only `π`-factors fit, and it is handed to the transition system.

use std::collections::HashSet;

use crate::error::Result;
use crate::pairs::{m_offset, PairIndex};
use crate::rtree::{ts_lasso_accepts, RTreePresentation};
use crate::theorem2::{a_shape_member, pi_prefix_states, profile, Block, Shape};
use crate::word::{Letter, LassoWord, SyntheticWord, THREE, TWO};
use crate::Decision;

/// Longest factor the lasso search tries from a given cut.
pub fn lasso_horizon(w: &LassoWord) -> usize {
    2 * w.spoke().len() + 6 * w.cycle().len() + 8
}

/// Searches factorizations of a lasso into `A`-words of length at most
/// [`lasso_horizon`]. Cuts with equal phase have equal futures, so a
/// factorization exists iff a cycle of phases is reachable from phase 0.
/// `Yes` is certain; `No` only covers the horizon.
pub fn lasso_factorization(w: &LassoWord, r: &RTreePresentation, budget: usize) -> Decision {
    let h = lasso_horizon(w);
    let phases = w.phase_count();
    if phases * h > budget {
        return Decision::Inconclusive;
    }
    let text = w.prefix(phases + h);
    let mut edges = vec![Vec::new(); phases];
    for (p, out) in edges.iter_mut().enumerate() {
        for end in factor_ends(&text.letters()[p..p + h], r) {
            let ph = w.phase(p + end);
            if !out.contains(&ph) {
                out.push(ph);
            }
        }
    }
    Decision::from_bool(cycle_reachable(&edges, 0))
}

/// Lengths of the prefixes of `text` that lie in `A`. Every `A`-word has
/// block shape, so only ends inside a run following a `3` are tried.
fn factor_ends(text: &[Letter], r: &RTreePresentation) -> Vec<usize> {
    let run = |i: usize| text[i..].iter().take_while(|&&a| a == TWO).count();
    let n = run(0);
    let mut i = n;
    let mut blocks: Vec<Block> = Vec::new();
    let mut out = Vec::new();
    while i + 1 < text.len() && text[i] < TWO {
        let m = text[i];
        let p = run(i + 1);
        let three = i + 1 + p;
        if text.get(three) != Some(&THREE) {
            break;
        }
        let rr = run(three + 1);
        blocks.push(Block { m, p: p as u128, r: 0 });
        for k in 0..=rr {
            blocks.last_mut().expect("pushed").r = k as u128;
            if a_shape_member(&Shape { n: n as u128, blocks: blocks.clone() }, r) {
                out.push(three + 1 + k);
            }
        }
        blocks.last_mut().expect("pushed").r = rr as u128;
        i = three + 1 + rr;
    }
    out
}

fn cycle_reachable(edges: &[Vec<usize>], start: usize) -> bool {
    let mut reach = vec![false; edges.len()];
    let mut stack = vec![start];
    reach[start] = true;
    while let Some(x) = stack.pop() {
        for &y in &edges[x] {
            if !reach[y] {
                reach[y] = true;
                stack.push(y);
            }
        }
    }
    (0..edges.len()).filter(|&x| reach[x]).any(|x| {
        let mut seen = vec![false; edges.len()];
        let mut stack = edges[x].clone();
        while let Some(y) = stack.pop() {
            if y == x {
                return true;
            }
            if !std::mem::replace(&mut seen[y], true) {
                stack.extend(&edges[y]);
            }
        }
        false
    })
}

/// Direct search for words built on a `K`-tail.
///
/// A cut is a block index `i` together with the leading run `n` of the next
/// factor. Factors are tried explicitly while they start within the head and
/// the first two tail blocks; a cut beyond that, or a `π`-factor still open
/// there, is continued by the transition system from the corresponding pair
/// index.
pub fn synthetic_factorization(w: &SyntheticWord, r: &RTreePresentation) -> Result<bool> {
    if let SyntheticWord::Lasso(l) = w {
        return Ok(lasso_factorization(l, r, usize::MAX) == Decision::Yes);
    }
    let Some(prof) = profile(w)? else {
        return Ok(false);
    };
    let horizon = prof.head.len() + 2;
    let mut seen: HashSet<(usize, u128)> = HashSet::new();
    let mut stack = vec![(0usize, prof.n)];
    while let Some((i, n)) = stack.pop() {
        if !seen.insert((i, n)) {
            continue;
        }
        if i >= horizon {
            let (_, m) = prof.tail_from(i);
            if ts_lasso_accepts(r, PairIndex(n), &m)? {
                return Ok(true);
            }
            continue;
        }
        let mut blocks: Vec<Block> = Vec::new();
        for k in i..horizon {
            let b = prof.block(k)?;
            blocks.push(b);
            for rr in 0..=b.r {
                let mut factor = blocks.clone();
                factor.last_mut().expect("nonempty").r = rr;
                if a_shape_member(&Shape { n, blocks: factor }, r) {
                    stack.push((k + 1, b.r - rr));
                }
            }
        }
        // a π-factor covering blocks i..horizon completely and continuing
        let last = *blocks.last().expect("i < horizon");
        if last.r != last.p {
            continue;
        }
        let Some((j, states)) = pi_prefix_states(n, &blocks) else {
            continue;
        };
        let next = prof.block(horizon)?;
        if m_offset(j + (horizon - i) as u32 + 1)? != next.p {
            continue;
        }
        let (_, m) = prof.tail_from(horizon);
        for s in states {
            if ts_lasso_accepts(r, s.index()?, &m)? {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{Alphabet, KnjWord};

    #[test]
    fn knj_words_follow_the_transition_system() {
        let diag = RTreePresentation::diag();
        let m = |u, v| LassoWord::from_digits(Alphabet::BINARY, u, v).unwrap();
        let k = |n, j, w: LassoWord| SyntheticWord::from(KnjWord::new(n, j, w).unwrap());
        assert!(synthetic_factorization(&k(0, 0, m("", "1")), &diag).unwrap());
        assert!(!synthetic_factorization(&k(0, 0, m("1", "0")), &diag).unwrap());
    }

    #[test]
    fn token_scan_matches_letter_scan() {
        use crate::theorem2::a_member;
        use crate::word::{Alphabet, FiniteWord};
        let diag = RTreePresentation::diag();
        let words = ["122223022223", "1222232222122223", "0222232", "2122223222", "12223", "1222232"];
        for a in words {
            for b in words {
                let w = FiniteWord::from_digits(Alphabet::QUATERNARY, &format!("{a}{b}")).unwrap();
                let slow: Vec<usize> = (1..=w.len())
                    .filter(|&k| a_member(&w.prefix(k), &diag))
                    .collect();
                assert_eq!(factor_ends(w.letters(), &diag), slow, "{w}");
            }
        }
    }

    #[test]
    fn lasso_examples() {
        let diag = RTreePresentation::diag();
        let l = |u, v| LassoWord::from_digits(Alphabet::QUATERNARY, u, v).unwrap();
        assert_eq!(lasso_factorization(&l("", "1222232222122223"), &diag, usize::MAX), Decision::Yes);
        assert_eq!(lasso_factorization(&l("", "2"), &diag, usize::MAX), Decision::No);
        // every block is a violation
        assert_eq!(lasso_factorization(&l("", "122223"), &diag, usize::MAX), Decision::Yes);
        assert_eq!(lasso_factorization(&l("", "12223"), &diag, usize::MAX), Decision::No);
    }
}
