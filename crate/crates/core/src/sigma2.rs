//! The context-free language over `{0,1,2}` whose ω-power is Σ⁰₂ but not Π⁰₂,
//! together with the erasing map `e` that reduces its ω-power to
//! `2^ω ∖ {10^ω}`.
//!
//! Throughout, the *balance* of a ternary word is `n₁ − n₂`; `T` is the set of
//! words none of whose prefixes has negative balance.

use crate::error::{Error, Result};
use crate::word::{Alphabet, FiniteWord, LassoWord, Letter, TWO};
use crate::Decision;

pub fn count_letter(s: &FiniteWord, j: Letter) -> usize {
    s.count(j)
}

fn delta(a: Letter) -> i64 {
    match a {
        1 => 1,
        TWO => -1,
        _ => 0,
    }
}

fn ternary_check(letters: &[Letter]) -> Result<()> {
    match letters.iter().find(|&&a| a > TWO) {
        Some(&letter) => Err(Error::LetterOutOfRange { letter, size: 3 }),
        None => Ok(()),
    }
}

fn in_t(letters: &[Letter]) -> bool {
    let mut bal = 0i64;
    letters.iter().all(|&a| {
        bal += delta(a);
        bal >= 0
    })
}

pub fn t_member(s: &FiniteWord) -> bool {
    ternary_check(s.letters()).is_ok() && in_t(s.letters())
}

/// Prefixes through `u v v` and a nonnegative cycle balance cover every prefix.
pub fn t_member_lasso(w: &LassoWord) -> bool {
    let (u, v) = (w.spoke().letters(), w.cycle().letters());
    if ternary_check(u).is_err() || ternary_check(v).is_err() {
        return false;
    }
    let unrolled: Vec<Letter> = u.iter().chain(v).chain(v).copied().collect();
    in_t(&unrolled) && v.iter().map(|&a| delta(a)).sum::<i64>() >= 0
}

/// The erasing state: the output so far and the positions of its 1s that a
/// later 2 may still turn into 0.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EraseState {
    emitted: Vec<Letter>,
    live_ones: Vec<usize>,
}

impl EraseState {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn emitted(&self) -> &[Letter] {
        &self.emitted
    }

    pub fn live_ones(&self) -> &[usize] {
        &self.live_ones
    }

    pub fn feed(&mut self, a: Letter) -> Result<()> {
        match a {
            0 => self.emitted.push(0),
            1 => {
                self.live_ones.push(self.emitted.len());
                self.emitted.push(1);
            }
            TWO => {
                let pos = self.live_ones.pop().ok_or(Error::NotInT)?;
                self.emitted[pos] = 0;
            }
            letter => return Err(Error::LetterOutOfRange { letter, size: 3 }),
        }
        Ok(())
    }
}

pub fn erase_fin(s: &FiniteWord) -> Result<FiniteWord> {
    let mut st = EraseState::new();
    for &a in s.letters() {
        st.feed(a)?;
    }
    FiniteWord::new(Alphabet::BINARY, st.emitted)
}

/// `e(u v^ω)` as a lasso, or `None` if no period was found within `budget`
/// letters of input.
///
/// One cycle first pops `e` live 1s (the 2s of `v` that `v` cannot match
/// itself) and then leaves `e + n₁(v) − n₂(v)` new ones. Since the cycle balance
/// is nonnegative, the live 1s below the lowest point of the next cycle are
/// never popped, so everything emitted before the first of the top `e` live 1s
/// is final. The unsettled part was emitted during the last cycle, hence takes
/// finitely many values, and a repetition at cycle boundaries gives the
/// period.
pub fn erase_lasso(w: &LassoWord, budget: usize) -> Result<Option<LassoWord>> {
    if !t_member_lasso(w) {
        return Err(Error::NotInT);
    }
    let v = w.cycle().letters();
    let mut bal = 0i64;
    let mut low = 0i64;
    for &a in v {
        bal += delta(a);
        low = low.min(bal);
    }
    let e = (-low) as usize;

    let mut st = EraseState::new();
    for &a in w.spoke().letters() {
        st.feed(a)?;
    }
    let mut seen: Vec<(Vec<(Letter, bool)>, usize)> = Vec::new();
    let mut used = w.spoke().len();
    loop {
        let settled = if e == 0 {
            st.emitted.len()
        } else {
            st.live_ones[st.live_ones.len() - e]
        };
        let key: Vec<(Letter, bool)> = (settled..st.emitted.len())
            .map(|i| (st.emitted[i], st.live_ones.binary_search(&i).is_ok()))
            .collect();
        if let Some((_, start)) = seen.iter().find(|(k, _)| *k == key) {
            let spoke = FiniteWord::new(Alphabet::BINARY, st.emitted[..*start].to_vec())?;
            let cycle = FiniteWord::new(Alphabet::BINARY, st.emitted[*start..settled].to_vec())?;
            return LassoWord::new(spoke, cycle).map(Some);
        }
        seen.push((key, settled));
        if used + v.len() > budget {
            return Ok(None);
        }
        for &a in v {
            st.feed(a)?;
        }
        used += v.len();
    }
}

/// `E` by definition: balanced, nonempty, in `T`, and the erasure of all but
/// the last letter starts with 1.
pub fn e_def_member(s: &FiniteWord) -> bool {
    let l = s.letters();
    if l.is_empty() || !t_member(s) || s.count(1) != s.count(TWO) {
        return false;
    }
    erase_fin(&s.prefix(l.len() - 1)).is_ok_and(|w| w.letters().first() == Some(&1))
}

/// `E` by the one-counter description: starts with 1, ends with 2, balanced,
/// and strictly positive on every proper nonempty prefix.
pub fn e_counter_member(s: &FiniteWord) -> bool {
    let l = s.letters();
    if l.first() != Some(&1) || l.last() != Some(&TWO) {
        return false;
    }
    let mut counter = 0i64;
    for (i, &a) in l.iter().enumerate() {
        if a > TWO {
            return false;
        }
        counter += delta(a);
        if i + 1 < l.len() && counter <= 0 {
            return false;
        }
    }
    counter == 0
}

/// Length of the `E`-word starting at `i`, if any: it must begin with 1 and
/// ends at the first return of the balance to its starting level.
fn e_word_at(l: &[Letter], i: usize) -> Option<usize> {
    if l.get(i) != Some(&1) {
        return None;
    }
    let mut counter = 0i64;
    for (k, &a) in l[i..].iter().enumerate() {
        counter += delta(a);
        if counter == 0 {
            return Some(k + 1);
        }
    }
    None
}

/// Membership in `A = {0} ∪ E ∪ {c₀1 c₁1 ⋯ c_k1 | c_j ∈ ({0} ∪ E)*, k > 0 or c₀ ≠ ε}`.
pub fn a3_member(s: &FiniteWord) -> bool {
    let l = s.letters();
    if ternary_check(l).is_err() {
        return false;
    }
    if l == [0] || e_counter_member(s) {
        return true;
    }
    // states: (position, separators placed capped at 2, c₀ nonempty, last step was a separator)
    let n = l.len();
    let idx = |i: usize, k: usize, c0: bool, sep: bool| ((i * 3 + k) * 2 + c0 as usize) * 2 + sep as usize;
    let mut seen = vec![false; (n + 1) * 12];
    let mut stack = vec![(0usize, 0usize, false, false)];
    seen[idx(0, 0, false, false)] = true;
    while let Some((i, k, c0, sep)) = stack.pop() {
        if i == n {
            if sep && (k >= 2 || c0) {
                return true;
            }
            continue;
        }
        let mut next = Vec::with_capacity(3);
        let factor_end = if l[i] == 0 { Some(i + 1) } else { e_word_at(l, i).map(|len| i + len) };
        if let Some(j) = factor_end {
            next.push((j, k, c0 || k == 0, false));
        }
        if l[i] == 1 {
            next.push((i + 1, (k + 1).min(2), c0, true));
        }
        for st @ (a, b, c, d) in next {
            if !seen[idx(a, b, c, d)] {
                seen[idx(a, b, c, d)] = true;
                stack.push(st);
            }
        }
    }
    false
}

/// `2^ω ∖ {10^ω}`.
pub fn b2_omega_member(w: &LassoWord) -> bool {
    let w = crate::word::normalize(w);
    !(w.spoke().letters() == [1] && w.cycle().letters() == [0])
}

/// Decides `a ∈ A^ω` by searching factorizations, independently of `e`.
///
/// Every `A`-word is in `T`, so every cut of a factorization sits at a
/// position whose balance is minimal over the whole remaining suffix. Which
/// factorizations exist from such a position depends only on its phase, so
/// the search runs on phases and accepts iff a cycle is reachable from phase
/// 0. A factor from `p` that reaches some phase reaches it within
/// `max(2, |u| − p) + 2|v|` letters (shift any longer one back by `|v|`), so
/// the search is exact; `budget` caps the letters scanned.
pub fn a3_omega_member(w: &LassoWord, budget: usize) -> Result<Decision> {
    if !t_member_lasso(w) {
        return Err(Error::NotInT);
    }
    let (ul, vl) = (w.spoke().len(), w.cycle().len());
    let phases = w.phase_count();
    let horizon = |p: usize| 2usize.max(ul.saturating_sub(p)) + 2 * vl;
    let span = phases + horizon(0) + vl + 1;
    let mut balance = vec![0i64; span + 1];
    for i in 0..span {
        balance[i + 1] = balance[i] + delta(w.letter_at(i));
    }
    // a position is a candidate cut iff no later balance is smaller; the
    // balance over one further cycle decides it since the cycle balance is ≥ 0
    let cut_ok = |q: usize| {
        let ph = w.phase(q);
        let end = ph.max(ul) + vl;
        (ph..=end).all(|r| balance[r] >= balance[ph])
    };

    let mut scanned = 0usize;
    let mut edges: Vec<Vec<usize>> = vec![Vec::new(); phases];
    for (p, out) in edges.iter_mut().enumerate() {
        if !cut_ok(p) {
            continue;
        }
        let h = horizon(p);
        scanned += h;
        if scanned > budget {
            return Ok(Decision::Inconclusive);
        }
        let mut rel = 0i64;
        let mut interior_positive = true;
        for len in 1..=h {
            let a = w.letter_at(p + len - 1);
            rel += delta(a);
            let end = p + len;
            let in_a = if !cut_ok(end) {
                false
            } else if rel == 0 {
                (len == 1 && a == 0) || (w.letter_at(p) == 1 && interior_positive && len > 1)
            } else {
                a == 1 && len >= 2
            };
            if in_a {
                let target = w.phase(end);
                if !out.contains(&target) {
                    out.push(target);
                }
            }
            if rel <= 0 {
                interior_positive = false;
            }
        }
    }
    Ok(Decision::from_bool(reaches_cycle(&edges, 0)))
}

/// Whether some cycle is reachable from `start`.
fn reaches_cycle(edges: &[Vec<usize>], start: usize) -> bool {
    let n = edges.len();
    let mut reach = vec![false; n];
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
    // a reachable node lies on a cycle iff it can reach itself
    (0..n).filter(|&x| reach[x]).any(|x| {
        let mut seen = vec![false; n];
        let mut stack: Vec<usize> = edges[x].clone();
        while let Some(y) = stack.pop() {
            if y == x {
                return true;
            }
            if !seen[y] {
                seen[y] = true;
                stack.extend(&edges[y]);
            }
        }
        false
    })
}

/// `e(a) ∈ 2^ω ∖ {10^ω}`.
pub fn e_preimage_check(w: &LassoWord, budget: usize) -> Result<Decision> {
    Ok(match erase_lasso(w, budget)? {
        Some(image) => Decision::from_bool(b2_omega_member(&image)),
        None => Decision::Inconclusive,
    })
}
