use omega_core::pairs::{
    index_of_q, is_transition, m_index_of, m_offset, q_of_index, successors, PairCode, PairIndex,
    QPair,
};
use omega_core::word::{
    normalize, recompose, run_decompose, Alphabet, FiniteWord, KnjWord, LassoWord, SyntheticWord,
};
use proptest::prelude::*;

fn letters(size: u8, max: usize) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0..size, 0..=max)
}

fn lasso(size: u8, max_u: usize, max_v: usize) -> impl Strategy<Value = LassoWord> {
    (letters(size, max_u), prop::collection::vec(0..size, 1..=max_v)).prop_map(move |(u, v)| {
        let a = Alphabet::new(size).unwrap();
        LassoWord::raw(FiniteWord::new(a, u).unwrap(), FiniteWord::new(a, v).unwrap()).unwrap()
    })
}

proptest! {
    #[test]
    fn normalize_keeps_the_word(w in lasso(3, 6, 6)) {
        let n = normalize(&w);
        prop_assert!(n.is_canonical());
        prop_assert!(n.spoke().len() <= w.spoke().len());
        prop_assert!(n.cycle().len() <= w.cycle().len());
        for i in 0..3 * (w.spoke().len() + w.cycle().len()) {
            prop_assert_eq!(n.letter_at(i), w.letter_at(i));
        }
        prop_assert_eq!(normalize(&n), n);
    }

    #[test]
    fn drop_prefix_shifts(w in lasso(4, 5, 5), k in 0usize..20) {
        let d = w.drop_prefix(k);
        prop_assert!(d.is_canonical());
        for i in 0..20 {
            prop_assert_eq!(d.letter_at(i), w.letter_at(k + i));
        }
    }

    #[test]
    fn equal_words_have_equal_canonical_forms(w in lasso(2, 4, 4), reps in 1usize..4, shift in 0usize..5) {
        // unroll the cycle and push letters from the cycle into the spoke
        let a = w.alphabet();
        let total = w.spoke().len() + shift;
        let spoke = w.prefix(total);
        let cycle: Vec<u8> = (0..reps * w.cycle().len()).map(|i| w.letter_at(total + i)).collect();
        let other = LassoWord::new(spoke, FiniteWord::new(a, cycle).unwrap()).unwrap();
        prop_assert_eq!(other, normalize(&w));
    }

    #[test]
    fn runs_recompose(v in letters(4, 30)) {
        let s = FiniteWord::new(Alphabet::QUATERNARY, v).unwrap();
        let runs = run_decompose(&s);
        prop_assert_eq!(recompose(Alphabet::QUATERNARY, &runs).unwrap(), s);
    }

    #[test]
    fn pair_index_roundtrip(n in 0u128..(1u128 << 100)) {
        let p = q_of_index(PairIndex(n)).unwrap();
        prop_assert_eq!(index_of_q(&p).unwrap(), PairIndex(n));
        prop_assert_eq!(PairCode::from_index(PairIndex(n)).unwrap().index().unwrap(), PairIndex(n));
    }

    #[test]
    fn transitions_extend_both_components(n in 0u128..100_000, m in 0u8..2) {
        let p = q_of_index(PairIndex(n)).unwrap();
        for s in successors(PairIndex(n), m).unwrap() {
            prop_assert!(is_transition(PairIndex(n), m, s).unwrap());
            let q = q_of_index(s).unwrap();
            prop_assert_eq!(q.len(), p.len() + 1);
            prop_assert!(p.beta().is_prefix_of(q.beta()));
            prop_assert!(p.alpha().is_prefix_of(q.alpha()));
            prop_assert_eq!(q.alpha().last(), Some(m));
        }
    }

    #[test]
    fn knj_prefixes_agree_with_suffixes(n in 0u128..=20, j in 1u32..=2, w in lasso(2, 3, 3), k in 0usize..60) {
        prop_assume!(n <= m_offset(j).unwrap());
        let knj = SyntheticWord::from(KnjWord::new(n, j, w).unwrap());
        let whole = knj.prefix(k + 40).unwrap();
        let rest = knj.drop_prefix(k).unwrap().prefix(40).unwrap();
        prop_assert_eq!(&whole.letters()[k..], rest.letters());
    }
}

#[test]
fn first_pairs_in_order() {
    let expected = [("", ""), ("0", "0"), ("0", "1"), ("1", "0"), ("1", "1"), ("00", "00"), ("00", "01")];
    for (i, (b, a)) in expected.iter().enumerate() {
        assert_eq!(q_of_index(PairIndex(i as u128)).unwrap(), QPair::from_digits(b, a).unwrap());
    }
}

#[test]
fn offsets_close_each_length_class() {
    for j in 0..=20u32 {
        let m = m_offset(j).unwrap();
        assert_eq!(m_index_of(m), Some(j));
        assert_eq!(q_of_index(PairIndex(m)).unwrap().len(), j as usize);
        assert_eq!(q_of_index(PairIndex(m + 1)).unwrap().len(), j as usize + 1);
    }
    assert!(m_offset(64).is_err());
}

mod knj_consistency {
    use omega_core::knj::{knj_consistent_len, knj_prefix_consistent, phi, phi_inverse, KnjAddress};
    use omega_core::word::{Alphabet, FiniteWord, LassoWord};
    use proptest::prelude::*;

    proptest! {
        /// The template scan and the run-by-run check agree on every prefix
        /// of a word with one letter changed.
        #[test]
        fn scans_agree(n in 0u128..=4, j in 1u32..=2, u in prop::collection::vec(0u8..2, 0..3),
                       v in prop::collection::vec(0u8..2, 1..3), at in 0usize..120, letter in 0u8..4) {
            let addr = KnjAddress::new(n, j).unwrap();
            let m = LassoWord::new(
                FiniteWord::new(Alphabet::BINARY, u).unwrap(),
                FiniteWord::new(Alphabet::BINARY, v).unwrap(),
            ).unwrap();
            let w = phi_inverse(&m, addr).unwrap();
            prop_assert_eq!(phi(&w).unwrap(), m);
            let mut letters = w.prefix(120).unwrap().into_letters();
            letters[at] = letter;
            let s = FiniteWord::new(Alphabet::QUATERNARY, letters).unwrap();
            let good = knj_consistent_len(&s, addr);
            for k in 0..=s.len() {
                prop_assert_eq!(knj_prefix_consistent(&s.prefix(k), addr), k <= good, "prefix {}", k);
            }
        }
    }
}
