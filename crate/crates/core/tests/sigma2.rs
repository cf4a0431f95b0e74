use omega_core::sigma2::{
    a3_member, a3_omega_member, count_letter, e_counter_member, e_def_member, e_preimage_check,
    erase_fin, erase_lasso, t_member, t_member_lasso,
};
use omega_core::word::{Alphabet, FiniteWord, LassoWord};
use omega_core::Decision;
use proptest::prelude::*;

fn ternary(len: usize) -> impl Iterator<Item = FiniteWord> {
    (0..3usize.pow(len as u32)).map(move |mut x| {
        let mut l = vec![0; len];
        for c in l.iter_mut().rev() {
            *c = (x % 3) as u8;
            x /= 3;
        }
        FiniteWord::new(Alphabet::TERNARY, l).unwrap()
    })
}

fn slice(s: &[u8]) -> FiniteWord {
    FiniteWord::new(Alphabet::TERNARY, s.to_vec()).unwrap()
}

/// `s ∈ ({0} ∪ E)*`, straight from the definition.
fn seg(s: &[u8]) -> bool {
    s.is_empty()
        || (1..=s.len()).any(|k| {
            let head = &s[..k];
            (head == [0] || e_def_member(&slice(head))) && seg(&s[k..])
        })
}

/// `{0} ∪ E ∪ {c₀1 c₁1 ⋯ c_k1 | c_i ∈ ({0}∪E)*, k > 0 or c₀ ≠ ∅}`.
fn a_by_definition(s: &[u8]) -> bool {
    if s == [0] || e_def_member(&slice(s)) {
        return true;
    }
    // split into c_i 1 pieces, trying every 1 as a separator
    fn pieces(s: &[u8], first: bool, c0_nonempty: bool) -> bool {
        if s.is_empty() {
            return !first;
        }
        (0..s.len()).filter(|&i| s[i] == 1).any(|i| {
            seg(&s[..i]) && {
                let rest = &s[i + 1..];
                if rest.is_empty() {
                    !first || c0_nonempty || i > 0
                } else {
                    pieces(rest, false, c0_nonempty || (first && i > 0))
                }
            }
        })
    }
    pieces(s, true, false)
}

#[test]
fn a_matches_its_definition() {
    for len in 0..=8 {
        for s in ternary(len) {
            assert_eq!(a3_member(&s), a_by_definition(s.letters()), "{s}");
        }
    }
}

#[test]
fn e_characterizations_agree_up_to_ten() {
    for len in 0..=10 {
        for s in ternary(len) {
            assert_eq!(e_def_member(&s), e_counter_member(&s), "{s}");
        }
    }
}

#[test]
fn erase_length_law() {
    for len in 0..=9 {
        for s in ternary(len).filter(t_member) {
            let e = erase_fin(&s).unwrap();
            assert_eq!(e.len(), count_letter(&s, 0) + count_letter(&s, 1), "{s}");
            assert_eq!(e.alphabet(), Alphabet::BINARY);
        }
    }
}

#[test]
fn erase_rejects_words_outside_t() {
    assert!(erase_fin(&FiniteWord::from_digits(Alphabet::TERNARY, "21").unwrap()).is_err());
    let l = LassoWord::from_digits(Alphabet::TERNARY, "", "122").unwrap();
    assert!(!t_member_lasso(&l));
    assert!(erase_lasso(&l, 1000).is_err());
}

fn t_lasso() -> impl Strategy<Value = LassoWord> {
    (
        prop::collection::vec(0u8..3, 0..=6),
        prop::collection::vec(0u8..3, 1..=6),
    )
        .prop_map(|(u, v)| {
            LassoWord::new(
                FiniteWord::new(Alphabet::TERNARY, u).unwrap(),
                FiniteWord::new(Alphabet::TERNARY, v).unwrap(),
            )
            .unwrap()
        })
        .prop_filter("in T", t_member_lasso)
}

/// Random letters, with a 2 that would unbalance the prefix turned into a 1.
fn t_word() -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0u8..3, 0..=12).prop_map(|mut v| {
        let mut bal = 0i32;
        for c in v.iter_mut() {
            if *c == 2 && bal == 0 {
                *c = 1;
            }
            bal += i32::from(*c == 1) - i32::from(*c == 2);
        }
        v
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]
    /// The erased lasso is the limit of the erased prefixes: every letter of
    /// it is eventually frozen in `erase_fin` of long prefixes.
    #[test]
    fn erase_lasso_is_the_prefix_limit(w in t_lasso()) {
        let out = erase_lasso(&w, 100_000).unwrap().expect("periodic");
        let n = w.spoke().len() + 64 * w.cycle().len() + 64;
        let fin = erase_fin(&w.prefix(n)).unwrap();
        let l = 12;
        prop_assert!(fin.len() >= l);
        prop_assert_eq!(out.prefix(l), fin.prefix(l), "word {}", w);
    }

    #[test]
    fn erase_is_a_homomorphism_on_t(u in t_word(), v in t_word()) {
        let (s, t) = (slice(&u), slice(&v));
        prop_assert!(t_member(&s) && t_member(&t));
        let st = s.concat(&t).unwrap();
        prop_assert_eq!(erase_fin(&st).unwrap(), erase_fin(&s).unwrap().concat(&erase_fin(&t).unwrap()).unwrap());
    }

    #[test]
    fn factorization_matches_preimage(w in t_lasso()) {
        let a = a3_omega_member(&w, 10_000).unwrap();
        let e = e_preimage_check(&w, 10_000).unwrap();
        prop_assert!(a.is_conclusive() && e.is_conclusive());
        prop_assert_eq!(a, e, "word {}", w);
    }
}

#[test]
fn examples() {
    let l = |u, v| LassoWord::from_digits(Alphabet::TERNARY, u, v).unwrap();
    assert_eq!(a3_omega_member(&l("", "1122"), 1000).unwrap(), Decision::Yes);
    assert_eq!(a3_omega_member(&l("1", "12"), 1000).unwrap(), Decision::No);
    assert_eq!(e_preimage_check(&l("", "1"), 1000).unwrap(), Decision::Yes);
}
