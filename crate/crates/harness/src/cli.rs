//! The `omegabench` command line.
//!
//! Exit codes: 0 pass/true, 1 fail/false, 2 usage error, 3 inconclusive.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use omega_core::pairs::{m_offset, q_of_index, PairIndex};
use omega_core::regular::{
    lasso_accepts, omega_power_automaton, singleton_zero, xi1_sigma_witness, zeros_then_one,
    FiniteAutomaton,
};
use omega_core::rtree::RTreePresentation;
use omega_core::sigma2::{
    a3_member, a3_omega_member, e_def_member, erase_fin, erase_lasso, t_member,
};
use omega_core::theorem2::{
    a_member, a_omega_classify, mu0_member, mu1_member, mu_member, pi_member, AOmegaPath,
};
use omega_core::word::{Alphabet, FiniteWord, LassoWord, SyntheticWord};
use omega_core::Decision;

use crate::files::{load_automaton, load_rtree};
use crate::literal::{parse_word_literal, Literal};
use crate::report::VerdictValue;
use crate::suites::{replay, run_suite, SuiteArgs};

pub const EXIT_TRUE: u8 = 0;
pub const EXIT_FALSE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_INCONCLUSIVE: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "omegabench", version, about = "ω-powers of finitary languages: deciders and verification suites")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Pair enumeration: `enum q --index N` or `enum m --j J`.
    Enum {
        #[command(subcommand)]
        what: EnumCommand,
    },
    /// The erasing map on a finite word or a lasso in T.
    Erase {
        #[arg(long, conflicts_with = "lasso", required_unless_present = "lasso")]
        word: Option<String>,
        #[arg(long)]
        lasso: Option<String>,
        #[arg(long, default_value_t = 10_000)]
        budget: usize,
    },
    /// Membership of a finite word in one of the finitary languages.
    Member {
        #[arg(long, value_enum)]
        lang: Lang,
        #[arg(long, default_value = "diag")]
        rtree: String,
        #[arg(long)]
        word: String,
    },
    /// Membership of an ω-word in the ω-power of a construction.
    OmegaMember {
        #[arg(long, value_enum)]
        construction: Construction,
        #[arg(long)]
        input: String,
        #[arg(long, default_value = "diag")]
        rtree: String,
        /// Automaton file for `--construction file`.
        #[arg(long, required_if_eq("construction", "file"))]
        automaton: Option<PathBuf>,
        #[arg(long, default_value_t = 10_000)]
        budget: usize,
    },
    /// Runs a verification suite and writes its JSON report.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        bound: Option<u64>,
        #[arg(long)]
        seed: Option<u64>,
        /// May be repeated; suites over trees default to `full` and `diag`.
        #[arg(long)]
        rtree: Vec<String>,
        #[arg(long)]
        budget: Option<usize>,
        /// Number of seeded random cases, for suites that draw any.
        #[arg(long)]
        random: Option<usize>,
        /// Check only this case input, e.g. a counterexample from a report.
        #[arg(long)]
        replay: Option<String>,
        /// Record wall-clock time in the report (makes it non-reproducible).
        #[arg(long)]
        timing: bool,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum EnumCommand {
    /// The pair `q_N`.
    Q {
        #[arg(long)]
        index: u128,
    },
    /// The offset `M_j`.
    M {
        #[arg(long)]
        j: u32,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Lang {
    #[value(name = "E")]
    E,
    #[value(name = "A3")]
    A3,
    #[value(name = "B2")]
    B2,
    #[value(name = "T")]
    T,
    #[value(name = "pi")]
    Pi,
    #[value(name = "mu")]
    Mu,
    #[value(name = "mu0")]
    Mu0,
    #[value(name = "mu1")]
    Mu1,
    #[value(name = "A4")]
    A4,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Construction {
    Sigma2,
    Xi1Sigma,
    Xi1Pi,
    Xi2Pi,
    Theorem2,
    File,
}

/// A failure reported with exit code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

/// Output lines and the exit code.
pub struct Outcome {
    pub lines: Vec<String>,
    pub code: u8,
}

impl Outcome {
    fn new(line: impl Into<String>, code: u8) -> Self {
        Outcome {
            lines: vec![line.into()],
            code,
        }
    }

    fn boolean(b: bool) -> Self {
        Outcome::new(b.to_string(), if b { EXIT_TRUE } else { EXIT_FALSE })
    }

    fn decision(d: Decision) -> Self {
        let code = match d {
            Decision::Yes => EXIT_TRUE,
            Decision::No => EXIT_FALSE,
            Decision::Inconclusive => EXIT_INCONCLUSIVE,
        };
        Outcome::new(d.to_string(), code)
    }
}

fn finite(text: &str, alphabet: Alphabet) -> Result<FiniteWord, UsageError> {
    match parse_word_literal(text)? {
        Literal::Finite(w) => Ok(w.with_alphabet(alphabet)?),
        Literal::Omega(_) => Err(UsageError(format!("{text:?} is not a finite word"))),
    }
}

fn omega(text: &str) -> Result<SyntheticWord, UsageError> {
    match parse_word_literal(text)? {
        Literal::Omega(w) => Ok(w),
        Literal::Finite(_) => Err(UsageError(format!("{text:?} is not an ω-word"))),
    }
}

fn lasso(text: &str, alphabet: Alphabet) -> Result<LassoWord, UsageError> {
    match omega(text)? {
        SyntheticWord::Lasso(l) => Ok(l.with_alphabet(alphabet)?),
        _ => Err(UsageError(format!("{text:?} is not a lasso"))),
    }
}

fn tree(spec: &str) -> Result<RTreePresentation, UsageError> {
    Ok(load_rtree(spec)?)
}

fn omega_power(v: &FiniteAutomaton, text: &str) -> Result<Outcome, UsageError> {
    let w = lasso(text, v.alphabet())?;
    Ok(Outcome::decision(Decision::from_bool(lasso_accepts(&omega_power_automaton(v), &w))))
}

pub fn execute(cli: Cli) -> Result<Outcome, UsageError> {
    match cli.command {
        Command::Enum { what } => match what {
            EnumCommand::Q { index } => Ok(Outcome::new(q_of_index(PairIndex(index))?.to_string(), EXIT_TRUE)),
            EnumCommand::M { j } => Ok(Outcome::new(m_offset(j)?.to_string(), EXIT_TRUE)),
        },
        Command::Erase { word, lasso: l, budget } => {
            if let Some(w) = word {
                let s = finite(&w, Alphabet::TERNARY)?;
                let e = erase_fin(&s)?;
                let text = if e.is_empty() { "ε".to_owned() } else { e.to_string() };
                Ok(Outcome::new(text, EXIT_TRUE))
            } else {
                let w = lasso(&l.expect("clap requires one"), Alphabet::TERNARY)?;
                Ok(match erase_lasso(&w, budget)? {
                    Some(e) => Outcome::new(e.to_string(), EXIT_TRUE),
                    None => Outcome::new("undetermined", EXIT_INCONCLUSIVE),
                })
            }
        }
        Command::Member { lang, rtree, word } => {
            let b = match lang {
                Lang::E => e_def_member(&finite(&word, Alphabet::TERNARY)?),
                Lang::A3 => a3_member(&finite(&word, Alphabet::TERNARY)?),
                Lang::T => t_member(&finite(&word, Alphabet::TERNARY)?),
                Lang::B2 => xi1_sigma_witness().accepts(&finite(&word, Alphabet::BINARY)?),
                Lang::Pi => pi_member(&finite(&word, Alphabet::QUATERNARY)?, &tree(&rtree)?).is_some(),
                Lang::Mu => mu_member(&finite(&word, Alphabet::QUATERNARY)?),
                Lang::Mu0 => mu0_member(&finite(&word, Alphabet::QUATERNARY)?),
                Lang::Mu1 => mu1_member(&finite(&word, Alphabet::QUATERNARY)?),
                Lang::A4 => a_member(&finite(&word, Alphabet::QUATERNARY)?, &tree(&rtree)?),
            };
            Ok(Outcome::boolean(b))
        }
        Command::OmegaMember {
            construction,
            input,
            rtree,
            automaton,
            budget,
        } => match construction {
            Construction::Sigma2 => {
                let w = lasso(&input, Alphabet::TERNARY)?;
                Ok(Outcome::decision(a3_omega_member(&w, budget)?))
            }
            Construction::Xi1Sigma => omega_power(&xi1_sigma_witness(), &input),
            Construction::Xi1Pi => omega_power(&singleton_zero(), &input),
            Construction::Xi2Pi => omega_power(&zeros_then_one(), &input),
            Construction::File => {
                let a = load_automaton(&automaton.expect("clap requires it"))?;
                omega_power(&a, &input)
            }
            Construction::Theorem2 => {
                let w = omega(&input)?;
                let path = a_omega_classify(&w, &tree(&rtree)?, budget)?;
                let mut out = Outcome::decision(path.decision());
                out.lines.push(format!("path: {}", describe(&path)));
                Ok(out)
            }
        },
        Command::Verify {
            suite,
            bound,
            seed,
            rtree,
            budget,
            random,
            replay: one,
            timing,
            out,
        } => {
            let args = SuiteArgs {
                bound,
                seed,
                trees: rtree,
                budget,
                random_cases: random,
            };
            let start = Instant::now();
            let mut report = match one {
                Some(input) => replay(&suite, &args, &input)?,
                None => run_suite(&suite, &args)?,
            };
            if timing {
                report.runtime_ms = Some(start.elapsed().as_millis() as u64);
            }
            std::fs::write(&out, report.to_json() + "\n")
                .map_err(|e| UsageError(format!("cannot write {}: {e}", out.display())))?;
            let code = match report.verdict.value {
                VerdictValue::Pass => EXIT_TRUE,
                VerdictValue::Fail => EXIT_FALSE,
                VerdictValue::Inconclusive => EXIT_INCONCLUSIVE,
            };
            Ok(Outcome::new(report.summary(), code))
        }
    }
}

fn describe(path: &AOmegaPath) -> String {
    match path {
        AOmegaPath::MuOmega => "μ^ω".to_owned(),
        AOmegaPath::NotInP => "outside P".to_owned(),
        AOmegaPath::Unclassified => "in P, no suitable triple".to_owned(),
        AOmegaPath::Suitable { triple, n: Some(n) } => format!("suitable {triple}, N = {n}"),
        AOmegaPath::Suitable { triple, n: None } => format!("suitable {triple}, no N"),
        AOmegaPath::Inconclusive => "budget exhausted".to_owned(),
    }
}
