//! The verification suites. Every suite turns its parameters into a list of
//! case inputs (word literals and the like), checks them in parallel, and can
//! replay a single input, which is how counterexamples are reproduced.

use omega_core::evidence::{lasso_factorization, synthetic_factorization};
use omega_core::knj::{knj_consistent_len, knj_prefix_consistent, phi, phi_inverse, KnjAddress};
use omega_core::pairs::{index_of_q, m_offset, q_of_index, PairCode, PairIndex, QPair};
use omega_core::regular::{
    lasso_accepts, omega_power_automaton, pinf_member, singleton_zero, xi1_sigma_witness,
    zeros_then_one,
};
use omega_core::rtree::{ts_lasso_accepts, RTreePresentation};
use omega_core::sigma2::{
    a3_omega_member, e_counter_member, e_def_member, e_preimage_check, erase_fin, t_member,
    t_member_lasso,
};
use omega_core::theorem2::{a_omega_classify, mu_omega_member, pi_omega_knj_member, AOmegaPath};
use omega_core::word::{Alphabet, FiniteWord, KnjWord, LassoWord, SyntheticWord};
use omega_core::Decision;
use rayon::prelude::*;
use thiserror::Error;

use crate::corpus::{corpus_lassos, random_t_lassos, structured_words, words_up_to};
use crate::files::{load_rtree, FileError};
use crate::literal::{parse_word_literal, Literal};
use crate::report::{CaseResult, Parameters, SuiteReport};

pub const SUITES: [&str; 9] = [
    "pair-enum-roundtrip",
    "erase-homomorphism",
    "E-dual-characterization",
    "sigma2-main",
    "xi-low-witnesses",
    "knj-roundtrip",
    "theorem2-key-equality",
    "mu-knj-disjoint",
    "a-omega-decomposition",
];

/// Prefix length up to which codec consistency is checked.
pub const KNJ_PREFIX_LEN: usize = 2000;

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error("unknown suite {0:?}; known suites: {list}", list = SUITES.join(", "))]
    UnknownSuite(String),
    #[error("invalid parameter: {0}")]
    InvalidParams(String),
    #[error("bad case input {input:?}: {msg}")]
    BadInput { input: String, msg: String },
    #[error(transparent)]
    File(#[from] FileError),
    #[error(transparent)]
    Word(#[from] omega_core::Error),
}

impl SuiteError {
    fn input(input: &str, msg: impl ToString) -> Self {
        SuiteError::BadInput {
            input: input.to_owned(),
            msg: msg.to_string(),
        }
    }
}

/// Parameters as given on the command line; unset values take per-suite
/// defaults.
#[derive(Debug, Clone, Default)]
pub struct SuiteArgs {
    pub bound: Option<u64>,
    pub seed: Option<u64>,
    pub trees: Vec<String>,
    pub budget: Option<usize>,
    pub random_cases: Option<usize>,
}

fn uses_trees(suite: &str) -> bool {
    matches!(suite, "theorem2-key-equality" | "a-omega-decomposition")
}

fn default_bound(suite: &str) -> u64 {
    match suite {
        "pair-enum-roundtrip" => 100_000,
        "erase-homomorphism" => 8,
        "E-dual-characterization" => 12,
        "sigma2-main" => 4,
        "xi-low-witnesses" => 5,
        "a-omega-decomposition" => 3,
        _ => 4,
    }
}

fn default_random(suite: &str) -> usize {
    match suite {
        "sigma2-main" => 10_000,
        "a-omega-decomposition" => 2_000,
        _ => 0,
    }
}

pub fn resolve(suite: &str, args: &SuiteArgs) -> Result<Parameters, SuiteError> {
    if !SUITES.contains(&suite) {
        return Err(SuiteError::UnknownSuite(suite.to_owned()));
    }
    let trees = if !uses_trees(suite) {
        if !args.trees.is_empty() {
            return Err(SuiteError::InvalidParams(format!("{suite} takes no R-tree")));
        }
        Vec::new()
    } else if args.trees.is_empty() {
        vec!["full".to_owned(), "diag".to_owned()]
    } else {
        args.trees.clone()
    };
    let bound = args.bound.unwrap_or_else(|| default_bound(suite));
    let limit = match suite {
        "pair-enum-roundtrip" => 1 << 40,
        "E-dual-characterization" => 16,
        "erase-homomorphism" => 10,
        "a-omega-decomposition" => 4,
        _ => 8,
    };
    if bound > limit {
        return Err(SuiteError::InvalidParams(format!(
            "bound {bound} exceeds the limit {limit} for {suite}"
        )));
    }
    Ok(Parameters {
        bound: Some(bound),
        seed: args.seed.unwrap_or(1),
        trees,
        budget: args.budget.unwrap_or(10_000),
        random_cases: args.random_cases.unwrap_or_else(|| default_random(suite)),
    })
}

/// Precomputed data shared by the cases of one run.
struct Context {
    params: Parameters,
    trees: Vec<(String, RTreePresentation)>,
    /// `(s, erase_fin(s))` for `s ∈ T` up to the bound.
    erased: Vec<(FiniteWord, FiniteWord)>,
}

impl Context {
    fn new(suite: &str, params: &Parameters) -> Result<Self, SuiteError> {
        let trees = params
            .trees
            .iter()
            .map(|t| Ok((t.clone(), load_rtree(t)?)))
            .collect::<Result<_, SuiteError>>()?;
        let erased = if suite == "erase-homomorphism" {
            words_up_to(Alphabet::TERNARY, bound(params))
                .filter(t_member)
                .map(|s| {
                    let e = erase_fin(&s).expect("s ∈ T");
                    (s, e)
                })
                .collect()
        } else {
            Vec::new()
        };
        Ok(Context {
            params: params.clone(),
            trees,
            erased,
        })
    }

    fn tree(&self, name: &str) -> Result<RTreePresentation, SuiteError> {
        match self.trees.iter().find(|(n, _)| n == name) {
            Some((_, r)) => Ok(r.clone()),
            None => Ok(load_rtree(name)?),
        }
    }
}

fn bound(p: &Parameters) -> usize {
    p.bound.expect("resolved") as usize
}

fn finite_literal(w: &FiniteWord) -> String {
    if w.is_empty() {
        "ε".to_owned()
    } else {
        w.to_string()
    }
}

/// `(N, j, m)` for every `j ≤ 2`, `N ≤ M_j` and binary lasso within the bound.
fn knj_grid(max: usize) -> Vec<KnjWord> {
    let lassos: Vec<LassoWord> = corpus_lassos(Alphabet::BINARY, max, max, |_| true).collect();
    let mut out = Vec::new();
    for j in 0..=2 {
        for n in 0..=m_offset(j).expect("small") {
            for m in &lassos {
                out.push(KnjWord::new(n, j, m.clone()).expect("address in range"));
            }
        }
    }
    out
}

fn case_inputs(suite: &str, ctx: &Context) -> Vec<String> {
    let p = &ctx.params;
    let with_trees = |words: Vec<String>| -> Vec<String> {
        p.trees
            .iter()
            .flat_map(|t| words.iter().map(move |w| format!("{w}@{t}")))
            .collect()
    };
    match suite {
        "pair-enum-roundtrip" => {
            let mut v: Vec<String> = (1..=6).map(|i| format!("q{i}")).collect();
            v.extend((0..=6).map(|j| format!("M{j}")));
            v.extend((0..p.bound.expect("resolved")).map(|n| n.to_string()));
            v
        }
        "erase-homomorphism" => ctx.erased.iter().map(|(s, _)| finite_literal(s)).collect(),
        "E-dual-characterization" => words_up_to(Alphabet::TERNARY, bound(p))
            .map(|s| finite_literal(&s))
            .collect(),
        "sigma2-main" => {
            let mut v: Vec<String> =
                corpus_lassos(Alphabet::TERNARY, bound(p), bound(p), t_member_lasso)
                    .map(|l| l.to_string())
                    .collect();
            v.extend(random_t_lassos(p.seed, p.random_cases, 8).iter().map(|l| l.to_string()));
            v
        }
        "xi-low-witnesses" => corpus_lassos(Alphabet::BINARY, bound(p), bound(p), |_| true)
            .map(|l| l.to_string())
            .collect(),
        "knj-roundtrip" | "mu-knj-disjoint" => {
            knj_grid(bound(p)).iter().map(|k| k.to_string()).collect()
        }
        "theorem2-key-equality" => {
            with_trees(knj_grid(bound(p)).iter().map(|k| k.to_string()).collect())
        }
        "a-omega-decomposition" => {
            let mut words: Vec<String> =
                corpus_lassos(Alphabet::QUATERNARY, bound(p), bound(p), |_| true)
                    .map(|l| l.to_string())
                    .collect();
            words.extend(knj_grid(2).iter().map(|k| k.to_string()));
            words.extend(structured_words(p.seed, p.random_cases).iter().map(|w| w.to_string()));
            with_trees(words)
        }
        _ => unreachable!("suite names are validated"),
    }
}

fn parse_omega(input: &str) -> Result<SyntheticWord, SuiteError> {
    match parse_word_literal(input) {
        Ok(Literal::Omega(w)) => Ok(w),
        Ok(Literal::Finite(_)) => Err(SuiteError::input(input, "expected an ω-word")),
        Err(e) => Err(SuiteError::input(input, e)),
    }
}

fn parse_lasso(input: &str, alphabet: Alphabet) -> Result<LassoWord, SuiteError> {
    match parse_omega(input)? {
        SyntheticWord::Lasso(l) if l.fits(alphabet) => Ok(l.with_alphabet(alphabet)?),
        _ => Err(SuiteError::input(input, format!("expected a lasso over {} letters", alphabet.size()))),
    }
}

fn parse_finite(input: &str, alphabet: Alphabet) -> Result<FiniteWord, SuiteError> {
    match parse_word_literal(input) {
        Ok(Literal::Finite(w)) => w
            .with_alphabet(alphabet)
            .map_err(|e| SuiteError::input(input, e)),
        Ok(_) => Err(SuiteError::input(input, "expected a finite word")),
        Err(e) => Err(SuiteError::input(input, e)),
    }
}

fn parse_knj(input: &str) -> Result<KnjWord, SuiteError> {
    match parse_omega(input)? {
        SyntheticWord::Knj(k) => Ok(k),
        _ => Err(SuiteError::input(input, "expected K[N,j]m")),
    }
}

fn split_tree(input: &str) -> Result<(&str, &str), SuiteError> {
    input
        .rsplit_once('@')
        .ok_or_else(|| SuiteError::input(input, "expected WORD@TREE"))
}

/// The pairs `q₁ … q₆` in the order the enumeration lists them.
const FIRST_PAIRS: [(&str, &str); 6] = [
    ("0", "0"),
    ("0", "1"),
    ("1", "0"),
    ("1", "1"),
    ("00", "00"),
    ("00", "01"),
];

fn check(suite: &str, ctx: &Context, input: &str) -> Result<CaseResult, SuiteError> {
    let p = &ctx.params;
    Ok(match suite {
        "pair-enum-roundtrip" => {
            if let Some(i) = input.strip_prefix('q') {
                let i: usize = i.parse().map_err(|e| SuiteError::input(input, e))?;
                let (b, a) = *FIRST_PAIRS
                    .get(i.wrapping_sub(1))
                    .ok_or_else(|| SuiteError::input(input, "only q1…q6 are listed"))?;
                let expected = QPair::from_digits(b, a)?;
                CaseResult::compare(input, expected, q_of_index(PairIndex(i as u128))?)
            } else if let Some(j) = input.strip_prefix('M') {
                // q_{M_j} has length j and q_{M_j + 1} length j + 1
                let j: u32 = j.parse().map_err(|e| SuiteError::input(input, e))?;
                let m = m_offset(j)?;
                let last = q_of_index(PairIndex(m))?;
                let next = q_of_index(PairIndex(m + 1))?;
                let ones = "1".repeat(j as usize);
                let expected = QPair::from_digits(&ones, &ones)?;
                let mut r = CaseResult::compare(input, expected, last);
                r.merge(CaseResult::compare(input, j as usize + 1, next.len()));
                r
            } else {
                let n: u128 = input.parse().map_err(|e| SuiteError::input(input, e))?;
                let q = q_of_index(PairIndex(n))?;
                let mut r = CaseResult::compare(input, n, index_of_q(&q)?.0);
                let code = PairCode::from_index(PairIndex(n))?;
                r.merge(CaseResult::compare(input, n, code.index()?.0));
                r
            }
        }
        "erase-homomorphism" => {
            let (s_text, t_filter) = match input.split_once(',') {
                Some((s, t)) => (s, Some(parse_finite(t, Alphabet::TERNARY)?)),
                None => (input, None),
            };
            let s = parse_finite(s_text, Alphabet::TERNARY)?;
            if !t_member(&s) {
                return Err(SuiteError::input(input, "s ∉ T"));
            }
            let es = erase_fin(&s)?;
            let single;
            let ts: &[(FiniteWord, FiniteWord)] = match t_filter {
                Some(t) => {
                    let et = erase_fin(&t).map_err(|e| SuiteError::input(input, e))?;
                    single = [(t, et)];
                    &single
                }
                None => &ctx.erased,
            };
            let mut r = CaseResult::default();
            for (t, et) in ts {
                let st = s.concat(t)?;
                let got = erase_fin(&st)?;
                let expected = es.concat(et)?;
                let label = format!("{},{}", finite_literal(&s), finite_literal(t));
                r.merge(CaseResult::compare(
                    label,
                    finite_literal(&expected),
                    finite_literal(&got),
                ));
            }
            r
        }
        "E-dual-characterization" => {
            let s = parse_finite(input, Alphabet::TERNARY)?;
            let (def, counter) = (e_def_member(&s), e_counter_member(&s));
            CaseResult::compare(input, def, counter).tally(if def { "in-E" } else { "not-in-E" })
        }
        "sigma2-main" => {
            let w = parse_lasso(input, Alphabet::TERNARY)?;
            if !t_member_lasso(&w) {
                return Err(SuiteError::input(input, "not in T"));
            }
            let a = a3_omega_member(&w, p.budget)?;
            let e = e_preimage_check(&w, p.budget)?;
            if !a.is_conclusive() || !e.is_conclusive() {
                CaseResult::inconclusive()
            } else {
                CaseResult::compare(input, e, a).tally(if a == Decision::Yes { "yes" } else { "no" })
            }
        }
        "xi-low-witnesses" => {
            let w = parse_lasso(input, Alphabet::BINARY)?;
            let name = w.to_string();
            let zero = lasso_accepts(&omega_power_automaton(&singleton_zero()), &w);
            let pinf = lasso_accepts(&omega_power_automaton(&zeros_then_one()), &w);
            let open = lasso_accepts(&omega_power_automaton(&xi1_sigma_witness()), &w);
            let mut r = CaseResult::compare(format!("{name} in {{0}}^ω"), name == "(0)", zero);
            r.merge(CaseResult::compare(format!("{name} in {{0^k1}}^ω"), pinf_member(&w)?, pinf));
            r.merge(CaseResult::compare(format!("{name} in B^ω"), name != "1(0)", open));
            r
        }
        "knj-roundtrip" => {
            let k = parse_knj(input)?;
            let addr = KnjAddress::new(k.n(), k.j())?;
            let w = phi_inverse(k.m(), addr)?;
            let mut r = CaseResult::compare(input.to_owned(), k.m().to_string(), phi(&w)?.to_string());
            let prefix = w.prefix(KNJ_PREFIX_LEN)?;
            // one scan covers every prefix length; a sample goes through the
            // run-by-run check as well
            r.merge(CaseResult::compare(
                format!("{input} prefix"),
                KNJ_PREFIX_LEN,
                knj_consistent_len(&prefix, addr),
            ));
            for len in (0..=64).chain((65..=KNJ_PREFIX_LEN).step_by(97)).chain([KNJ_PREFIX_LEN]) {
                r.merge(CaseResult::compare(
                    format!("{input} prefix {len}"),
                    true,
                    knj_prefix_consistent(&prefix.prefix(len), addr),
                ));
            }
            r
        }
        "theorem2-key-equality" => {
            let (word, tree) = split_tree(input)?;
            let r = ctx.tree(tree)?;
            let k = parse_knj(word)?;
            let ts = ts_lasso_accepts(&r, PairIndex(k.n()), k.m())?;
            let pi = pi_omega_knj_member(&SyntheticWord::Knj(k), &r)?;
            CaseResult::compare(input, ts, pi).tally(if ts { "accepted" } else { "rejected" })
        }
        "mu-knj-disjoint" => {
            let k = parse_knj(input)?;
            let got = mu_omega_member(&SyntheticWord::Knj(k), p.budget);
            CaseResult::compare(input, Decision::No, got)
        }
        "a-omega-decomposition" => {
            let (word, tree) = split_tree(input)?;
            let r = ctx.tree(tree)?;
            let w = parse_omega(word)?;
            let path = a_omega_classify(&w, &r, p.budget)?;
            let tally = match &path {
                AOmegaPath::MuOmega => "mu-omega",
                AOmegaPath::NotInP => "outside-P",
                AOmegaPath::Unclassified => "no-suitable-triple",
                AOmegaPath::Suitable { n: Some(_), .. } => "suitable-member",
                AOmegaPath::Suitable { n: None, .. } => "suitable-nonmember",
                AOmegaPath::Inconclusive => "inconclusive",
            };
            let evidence = match &w {
                SyntheticWord::Lasso(l) => lasso_factorization(l, &r, p.budget.saturating_mul(1000)),
                _ => Decision::from_bool(synthetic_factorization(&w, &r)?),
            };
            if !path.decision().is_conclusive() || !evidence.is_conclusive() {
                CaseResult::inconclusive().tally(tally)
            } else {
                CaseResult::compare(input, evidence, path.decision()).tally(tally)
            }
        }
        _ => return Err(SuiteError::UnknownSuite(suite.to_owned())),
    })
}

/// Runs a suite over its whole corpus.
pub fn run_suite(suite: &str, args: &SuiteArgs) -> Result<SuiteReport, SuiteError> {
    let params = resolve(suite, args)?;
    let ctx = Context::new(suite, &params)?;
    let inputs = case_inputs(suite, &ctx);
    let results = inputs
        .par_iter()
        .map(|input| check(suite, &ctx, input))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SuiteReport::build(suite, params, results))
}

/// Checks a single case input, e.g. a counterexample from a report.
pub fn replay(suite: &str, args: &SuiteArgs, input: &str) -> Result<SuiteReport, SuiteError> {
    let params = resolve(suite, args)?;
    let mut ctx = Context::new(suite, &params)?;
    // a single erase case still checks against every t unless one is given
    if suite == "erase-homomorphism" && input.contains(',') {
        ctx.erased.clear();
    }
    let result = check(suite, &ctx, input)?;
    Ok(SuiteReport::build(suite, params, vec![result]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::VerdictValue;

    fn small(bound: u64) -> SuiteArgs {
        SuiteArgs {
            bound: Some(bound),
            random_cases: Some(20),
            ..SuiteArgs::default()
        }
    }

    #[test]
    fn every_suite_passes_small() {
        for suite in SUITES {
            let bound = match suite {
                "pair-enum-roundtrip" => 500,
                "a-omega-decomposition" | "knj-roundtrip" | "theorem2-key-equality" | "mu-knj-disjoint" => 1,
                _ => 3,
            };
            let r = run_suite(suite, &small(bound)).unwrap();
            assert_eq!(r.verdict.value, VerdictValue::Pass, "{}", r.summary());
            assert!(r.cases_total > 0, "{suite}");
        }
    }

    #[test]
    fn e_dual_counts_every_word() {
        let r = run_suite("E-dual-characterization", &small(6)).unwrap();
        assert_eq!(r.cases_total, (0..=6).map(|k| 3u64.pow(k)).sum::<u64>());
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(matches!(run_suite("nope", &SuiteArgs::default()), Err(SuiteError::UnknownSuite(_))));
        assert!(matches!(
            run_suite("E-dual-characterization", &small(40)),
            Err(SuiteError::InvalidParams(_))
        ));
        let trees = SuiteArgs {
            trees: vec!["diag".into()],
            ..SuiteArgs::default()
        };
        assert!(matches!(run_suite("sigma2-main", &trees), Err(SuiteError::InvalidParams(_))));
    }

    #[test]
    fn replays_single_inputs() {
        let r = replay("sigma2-main", &SuiteArgs::default(), "1(12)").unwrap();
        assert_eq!(r.verdict.value, VerdictValue::Pass);
        let r = replay("erase-homomorphism", &small(3), "1,12").unwrap();
        assert_eq!(r.cases_total, 1);
        let r = replay("a-omega-decomposition", &SuiteArgs::default(), "(1222232222122223)@diag").unwrap();
        assert_eq!(r.tallies, vec![("mu-omega".to_string(), 1)]);
        assert!(replay("theorem2-key-equality", &SuiteArgs::default(), "K[0,0](1)").is_err());
    }
}
