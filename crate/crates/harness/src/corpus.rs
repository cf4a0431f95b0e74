//! Deterministic word corpora.

use omega_core::pairs::m_offset;
use omega_core::sigma2::t_member_lasso;
use omega_core::theorem2::{Block, Shape};
use omega_core::word::{Alphabet, FiniteWord, KnjWord, LassoWord, Letter, SyntheticWord};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// All words of length `len`, in lexicographic order.
pub fn words(alphabet: Alphabet, len: usize) -> impl Iterator<Item = FiniteWord> {
    let k = alphabet.size() as u64;
    let count = k.checked_pow(len as u32).expect("corpus size fits in u64");
    (0..count).map(move |mut x| {
        let mut l = vec![0; len];
        for c in l.iter_mut().rev() {
            *c = (x % k) as Letter;
            x /= k;
        }
        FiniteWord::new(alphabet, l).expect("letters in range")
    })
}

/// All words of length at most `max`, shortest first.
pub fn words_up_to(alphabet: Alphabet, max: usize) -> impl Iterator<Item = FiniteWord> {
    (0..=max).flat_map(move |len| words(alphabet, len))
}

/// Every canonical lasso with `|u| ≤ max_spoke` and `1 ≤ |v| ≤ max_cycle`,
/// ordered by spoke length, cycle length, spoke, cycle.
pub fn corpus_lassos<F>(
    alphabet: Alphabet,
    max_spoke: usize,
    max_cycle: usize,
    filter: F,
) -> impl Iterator<Item = LassoWord>
where
    F: Fn(&LassoWord) -> bool,
{
    (0..=max_spoke)
        .flat_map(move |lu| (1..=max_cycle).map(move |lv| (lu, lv)))
        .flat_map(move |(lu, lv)| {
            words(alphabet, lu).flat_map(move |u| {
                words(alphabet, lv).filter_map(move |v| {
                    let l = LassoWord::raw(u.clone(), v).expect("nonempty cycle");
                    l.is_canonical().then_some(l)
                })
            })
        })
        .filter(move |l| filter(l))
}

fn random_letters(rng: &mut ChaCha8Rng, k: u8, len: usize) -> Vec<Letter> {
    (0..len).map(|_| rng.gen_range(0..k)).collect()
}

/// `count` lassos in `T` with `|u|, |v| ≤ max`, drawn from `seed`. Letters
/// are uniform except that a 2 which would unbalance the prefix becomes a 1;
/// draws whose cycle is unbalanced are redrawn.
pub fn random_t_lassos(seed: u64, count: usize, max: usize) -> Vec<LassoWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let lu = rng.gen_range(0..=max);
        let lv = rng.gen_range(1..=max);
        let mut all = random_letters(&mut rng, 3, lu + lv);
        let mut bal = 0i32;
        for c in all.iter_mut() {
            if *c == 2 && bal == 0 {
                *c = 1;
            }
            bal += i32::from(*c == 1) - i32::from(*c == 2);
        }
        let v = all.split_off(lu);
        let l = LassoWord::new(
            FiniteWord::new(Alphabet::TERNARY, all).expect("ternary"),
            FiniteWord::new(Alphabet::TERNARY, v).expect("ternary"),
        )
        .expect("nonempty cycle");
        if t_member_lasso(&l) {
            out.push(l);
        }
    }
    out
}

/// Blocks `m 2^P 3 2^R` that mostly continue the growing runs `M_{j+1},
/// M_{j+2}, …`, with occasional resets and cut-short runs, so that words land
/// in `P`, in `μ^ω` and in the `K`-sets often enough to matter.
fn random_blocks(rng: &mut ChaCha8Rng, count: usize) -> Vec<Block> {
    let mut idx: u32 = rng.gen_range(1..=2);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let m = rng.gen_range(0..2);
        let run = m_offset(idx).expect("small index");
        let b = match rng.gen_range(0..8) {
            0 => {
                idx = 1;
                Block { m, p: 4, r: 4 }
            }
            1 => {
                idx = 1;
                Block { m, p: run, r: rng.gen_range(0..=run) }
            }
            2 => Block {
                m,
                p: *[1u128, 3, 5].choose(rng).expect("nonempty"),
                r: rng.gen_range(0..3),
            },
            _ => {
                idx += 1;
                Block { m, p: run, r: run }
            }
        };
        if idx > 3 {
            idx = 1;
        }
        out.push(b);
    }
    out
}

fn shape_word(n: u128, blocks: Vec<Block>) -> FiniteWord {
    Shape { n, blocks }.to_word().expect("small runs")
}

/// Words for the `A^ω` decomposition suite: lassos and `K`-tailed words whose
/// letters follow the block pattern, drawn from `seed`.
pub fn structured_words(seed: u64, count: usize) -> Vec<SyntheticWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        let n = rng.gen_range(0..5);
        if i % 2 == 0 {
            let (lu, lv) = (rng.gen_range(0..=2), rng.gen_range(1..=3));
            let u = random_blocks(&mut rng, lu);
            let v = random_blocks(&mut rng, lv);
            let w = LassoWord::new(shape_word(n, u), shape_word(0, v)).expect("nonempty cycle");
            out.push(SyntheticWord::Lasso(w));
        } else {
            let lh = rng.gen_range(0..=3);
            let head = random_blocks(&mut rng, lh);
            let j = rng.gen_range(0..=2);
            let tn = rng.gen_range(0..=m_offset(j).expect("small").min(6));
            let (lu, lv) = (rng.gen_range(0..=2), rng.gen_range(1..=2));
            let u = random_letters(&mut rng, 2, lu);
            let v = random_letters(&mut rng, 2, lv);
            let m = LassoWord::new(
                FiniteWord::new(Alphabet::BINARY, u).expect("binary"),
                FiniteWord::new(Alphabet::BINARY, v).expect("binary"),
            )
            .expect("nonempty cycle");
            let tail = KnjWord::new(tn, j, m).expect("address in range");
            let head = if head.is_empty() && n == 0 {
                FiniteWord::empty(Alphabet::QUATERNARY)
            } else {
                shape_word(n, head)
            };
            out.push(SyntheticWord::prefixed(head, tail));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use omega_core::sigma2::t_member_lasso;

    fn names(it: impl Iterator<Item = LassoWord>) -> Vec<String> {
        it.map(|l| l.to_string()).collect()
    }

    #[test]
    fn small_corpora() {
        assert_eq!(names(corpus_lassos(Alphabet::BINARY, 0, 1, |_| true)), ["(0)", "(1)"]);
        let c = names(corpus_lassos(Alphabet::BINARY, 1, 1, |_| true));
        assert!(c.contains(&"0(1)".to_string()) && c.contains(&"1(0)".to_string()));
        assert!(!c.contains(&"0(0)".to_string()));
        let t = names(corpus_lassos(Alphabet::TERNARY, 0, 2, t_member_lasso));
        assert!(t.contains(&"(12)".to_string()));
        assert!(!t.contains(&"(21)".to_string()));
    }

    #[test]
    fn canonical_lassos_are_distinct_words() {
        let all: Vec<_> = corpus_lassos(Alphabet::BINARY, 3, 3, |_| true).collect();
        let set: std::collections::HashSet<_> = all.iter().collect();
        assert_eq!(set.len(), all.len());
    }

    #[test]
    fn seeded_corpora_replay() {
        assert_eq!(random_t_lassos(7, 50, 8), random_t_lassos(7, 50, 8));
        assert!(random_t_lassos(7, 50, 8).iter().all(t_member_lasso));
        assert_eq!(structured_words(3, 20), structured_words(3, 20));
    }
}
