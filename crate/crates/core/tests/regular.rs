//! The ω-power automaton against a brute-force factorization search.

use omega_core::regular::{
    lasso_accepts, lasso_run, omega_power_automaton, pinf_member, replay_run, singleton_zero,
    xi1_sigma_witness, zeros_then_one, FiniteAutomaton,
};
use omega_core::word::{Alphabet, FiniteWord, LassoWord};
use proptest::prelude::*;

/// Cuts at equal phases have equal futures; a simple accepting path in the
/// product of `V`'s automaton with the phases never needs a factor longer than
/// `(states + 1) · phases`.
fn brute_force(v: &FiniteAutomaton, w: &LassoWord) -> bool {
    let phases = w.phase_count();
    let h = (v.state_count() + 1) * phases;
    let text = w.prefix(phases + h);
    let edges: Vec<Vec<usize>> = (0..phases)
        .map(|p| {
            (p + 1..=p + h)
                .filter(|&e| {
                    v.accepts(&FiniteWord::new(w.alphabet(), text.letters()[p..e].to_vec()).unwrap())
                })
                .map(|e| w.phase(e))
                .collect()
        })
        .collect();
    let reach = |from: &[usize]| {
        let mut seen = vec![false; phases];
        let mut stack = from.to_vec();
        while let Some(x) = stack.pop() {
            if !std::mem::replace(&mut seen[x], true) {
                stack.extend(&edges[x]);
            }
        }
        seen
    };
    let from0 = reach(&[0]);
    (0..phases).any(|x| from0[x] && reach(&edges[x])[x])
}

fn all_lassos(size: u8, max_u: usize, max_v: usize) -> Vec<LassoWord> {
    let a = Alphabet::new(size).unwrap();
    let words = |len: usize| -> Vec<FiniteWord> {
        (0..(size as usize).pow(len as u32))
            .map(|mut x| {
                let mut l = vec![0; len];
                for c in l.iter_mut().rev() {
                    *c = (x % size as usize) as u8;
                    x /= size as usize;
                }
                FiniteWord::new(a, l).unwrap()
            })
            .collect()
    };
    let mut out = Vec::new();
    for lu in 0..=max_u {
        for lv in 1..=max_v {
            for u in words(lu) {
                for v in words(lv) {
                    let l = LassoWord::raw(u.clone(), v).unwrap();
                    if l.is_canonical() {
                        out.push(l);
                    }
                }
            }
        }
    }
    out
}

fn nfa(states: usize) -> impl Strategy<Value = FiniteAutomaton> {
    let row = prop::collection::vec(prop::collection::vec(0..states, 0..=2), 2);
    (
        prop::collection::vec(row, states),
        prop::collection::vec(any::<bool>(), states),
    )
        .prop_map(move |(delta, acc)| {
            let accepting = (0..states).filter(|&q| acc[q]).collect();
            FiniteAutomaton::new(Alphabet::BINARY, 0, accepting, delta).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn random_automata_agree_with_factorizations(v in nfa(3)) {
        let b = omega_power_automaton(&v);
        for w in all_lassos(2, 2, 3) {
            let run = lasso_run(&b, &w);
            prop_assert_eq!(run.is_some(), brute_force(&v, &w), "word {}", w);
            if let Some(run) = run {
                prop_assert!(replay_run(&b, &w, &run));
            }
        }
    }
}

#[test]
fn witnesses_match_their_closed_forms() {
    let zero = omega_power_automaton(&singleton_zero());
    let pinf = omega_power_automaton(&zeros_then_one());
    let xi1 = omega_power_automaton(&xi1_sigma_witness());
    for w in all_lassos(2, 3, 3) {
        let s = w.to_string();
        assert_eq!(lasso_accepts(&zero, &w), s == "(0)", "{s}");
        assert_eq!(lasso_accepts(&pinf, &w), pinf_member(&w).unwrap(), "{s}");
        assert_eq!(lasso_accepts(&xi1, &w), s != "1(0)", "{s}");
        assert_eq!(lasso_accepts(&xi1, &w), brute_force(&xi1_sigma_witness(), &w), "{s}");
    }
}
