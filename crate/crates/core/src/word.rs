//! Finite words, ultimately periodic ω-words and the synthetic ω-words used to
//! probe the block-coded sets `K[N,j]`.
//!
//! Letters are small integers. Alphabets have 2, 3 or 4 letters; in the
//! 4-letter alphabet the letters `2` and `3` play the role of separators.

use std::fmt;

use crate::error::{Error, Result};
use crate::pairs::m_offset;

pub type Letter = u8;

/// The separator letter `2`.
pub const TWO: Letter = 2;
/// The block terminator letter `3`.
pub const THREE: Letter = 3;

/// Words larger than this are never materialized.
pub const MATERIALIZE_LIMIT: u128 = 1 << 26;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Alphabet(u8);

impl Alphabet {
    pub const BINARY: Alphabet = Alphabet(2);
    pub const TERNARY: Alphabet = Alphabet(3);
    pub const QUATERNARY: Alphabet = Alphabet(4);

    pub fn new(size: u8) -> Result<Self> {
        match size {
            2..=4 => Ok(Alphabet(size)),
            other => Err(Error::BadAlphabet(other)),
        }
    }

    pub fn size(self) -> u8 {
        self.0
    }

    pub fn contains(self, letter: Letter) -> bool {
        letter < self.0
    }

    /// Smallest alphabet containing every letter of `letters`.
    pub fn smallest_for(letters: &[Letter]) -> Result<Self> {
        let max = letters.iter().copied().max().unwrap_or(0);
        Alphabet::new((max + 1).max(2))
    }

    fn check(self, letters: &[Letter]) -> Result<()> {
        match letters.iter().find(|&&l| !self.contains(l)) {
            Some(&letter) => Err(Error::LetterOutOfRange {
                letter,
                size: self.0,
            }),
            None => Ok(()),
        }
    }
}

/// An immutable finite word over a declared alphabet.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteWord {
    alphabet: Alphabet,
    letters: Vec<Letter>,
}

impl FiniteWord {
    pub fn new(alphabet: Alphabet, letters: Vec<Letter>) -> Result<Self> {
        alphabet.check(&letters)?;
        Ok(FiniteWord { alphabet, letters })
    }

    pub fn empty(alphabet: Alphabet) -> Self {
        FiniteWord {
            alphabet,
            letters: Vec::new(),
        }
    }

    /// Builds a word from a string of decimal digits, e.g. `"0120"`.
    pub fn from_digits(alphabet: Alphabet, digits: &str) -> Result<Self> {
        let letters = digits
            .bytes()
            .map(|b| match b {
                b'0'..=b'9' => Ok(b - b'0'),
                _ => Err(Error::LetterOutOfRange {
                    letter: b,
                    size: alphabet.size(),
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        FiniteWord::new(alphabet, letters)
    }

    pub(crate) fn from_trusted(alphabet: Alphabet, letters: Vec<Letter>) -> Self {
        debug_assert!(alphabet.check(&letters).is_ok());
        FiniteWord { alphabet, letters }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn last(&self) -> Option<Letter> {
        self.letters.last().copied()
    }

    /// The same letters over another alphabet.
    pub fn with_alphabet(&self, alphabet: Alphabet) -> Result<Self> {
        FiniteWord::new(alphabet, self.letters.clone())
    }

    pub fn concat(&self, other: &FiniteWord) -> Result<FiniteWord> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch {
                left: self.alphabet.size(),
                right: other.alphabet.size(),
            });
        }
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(FiniteWord::from_trusted(self.alphabet, letters))
    }

    /// The length-`n` prefix, or the whole word if it is shorter.
    pub fn prefix(&self, n: usize) -> FiniteWord {
        let n = n.min(self.len());
        FiniteWord::from_trusted(self.alphabet, self.letters[..n].to_vec())
    }

    pub fn is_prefix_of(&self, other: &FiniteWord) -> bool {
        other.letters.starts_with(&self.letters)
    }

    /// Number of occurrences of `letter`.
    pub fn count(&self, letter: Letter) -> usize {
        self.letters.iter().filter(|&&l| l == letter).count()
    }
}

impl fmt::Display for FiniteWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("ε");
        }
        for l in &self.letters {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Writes the digits of `letters` without the `ε` convention.
pub(crate) fn digits(letters: &[Letter]) -> String {
    letters.iter().map(|l| char::from(b'0' + l)).collect()
}

/// An ultimately periodic ω-word `spoke · cycle^ω`, always kept in canonical
/// form: the cycle is primitive and the spoke is as short as possible. Two
/// lassos denote the same ω-word iff they are structurally equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LassoWord {
    spoke: FiniteWord,
    cycle: FiniteWord,
}

impl LassoWord {
    pub fn new(spoke: FiniteWord, cycle: FiniteWord) -> Result<Self> {
        if spoke.alphabet != cycle.alphabet {
            return Err(Error::AlphabetMismatch {
                left: spoke.alphabet.size(),
                right: cycle.alphabet.size(),
            });
        }
        if cycle.is_empty() {
            return Err(Error::EmptyCycle);
        }
        let alphabet = spoke.alphabet;
        let (s, c) = normalize_parts(spoke.letters, cycle.letters);
        Ok(LassoWord {
            spoke: FiniteWord::from_trusted(alphabet, s),
            cycle: FiniteWord::from_trusted(alphabet, c),
        })
    }

    pub fn from_digits(alphabet: Alphabet, spoke: &str, cycle: &str) -> Result<Self> {
        LassoWord::new(
            FiniteWord::from_digits(alphabet, spoke)?,
            FiniteWord::from_digits(alphabet, cycle)?,
        )
    }

    /// Builds a lasso without normalizing. Only for callers that enumerate raw
    /// representations (tests, corpus filters).
    pub fn raw(spoke: FiniteWord, cycle: FiniteWord) -> Result<Self> {
        if spoke.alphabet != cycle.alphabet {
            return Err(Error::AlphabetMismatch {
                left: spoke.alphabet.size(),
                right: cycle.alphabet.size(),
            });
        }
        if cycle.is_empty() {
            return Err(Error::EmptyCycle);
        }
        Ok(LassoWord { spoke, cycle })
    }

    pub fn alphabet(&self) -> Alphabet {
        self.spoke.alphabet
    }

    pub fn spoke(&self) -> &FiniteWord {
        &self.spoke
    }

    pub fn cycle(&self) -> &FiniteWord {
        &self.cycle
    }

    pub fn is_canonical(&self) -> bool {
        normalize(self) == *self
    }

    pub fn letter_at(&self, i: usize) -> Letter {
        let u = self.spoke.len();
        if i < u {
            self.spoke.letters[i]
        } else {
            self.cycle.letters[(i - u) % self.cycle.len()]
        }
    }

    /// Position of letter `i` inside the finite graph `spoke + cycle`.
    pub fn phase(&self, i: usize) -> usize {
        let u = self.spoke.len();
        if i < u {
            i
        } else {
            u + (i - u) % self.cycle.len()
        }
    }

    /// Number of distinct phases, `|spoke| + |cycle|`.
    pub fn phase_count(&self) -> usize {
        self.spoke.len() + self.cycle.len()
    }

    pub fn prefix(&self, n: usize) -> FiniteWord {
        let letters = (0..n).map(|i| self.letter_at(i)).collect();
        FiniteWord::from_trusted(self.alphabet(), letters)
    }

    /// The ω-word with its first `k` letters removed.
    pub fn drop_prefix(&self, k: usize) -> LassoWord {
        let u = self.spoke.len();
        let (spoke, cycle) = if k <= u {
            (self.spoke.letters[k..].to_vec(), self.cycle.letters.clone())
        } else {
            let mut c = self.cycle.letters.clone();
            let len = c.len();
            c.rotate_left((k - u) % len);
            (Vec::new(), c)
        };
        let (s, c) = normalize_parts(spoke, cycle);
        LassoWord {
            spoke: FiniteWord::from_trusted(self.alphabet(), s),
            cycle: FiniteWord::from_trusted(self.alphabet(), c),
        }
    }

    pub fn with_alphabet(&self, alphabet: Alphabet) -> Result<Self> {
        Ok(LassoWord {
            spoke: self.spoke.with_alphabet(alphabet)?,
            cycle: self.cycle.with_alphabet(alphabet)?,
        })
    }

    /// True if the ω-word contains only letters `< size`.
    pub fn fits(&self, alphabet: Alphabet) -> bool {
        alphabet.check(&self.spoke.letters).is_ok() && alphabet.check(&self.cycle.letters).is_ok()
    }
}

impl fmt::Display for LassoWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}({})",
            digits(&self.spoke.letters),
            digits(&self.cycle.letters)
        )
    }
}

/// Canonical representative: primitive cycle, shortest spoke.
pub fn normalize(l: &LassoWord) -> LassoWord {
    let (s, c) = normalize_parts(l.spoke.letters.clone(), l.cycle.letters.clone());
    LassoWord {
        spoke: FiniteWord::from_trusted(l.alphabet(), s),
        cycle: FiniteWord::from_trusted(l.alphabet(), c),
    }
}

fn normalize_parts(mut spoke: Vec<Letter>, cycle: Vec<Letter>) -> (Vec<Letter>, Vec<Letter>) {
    let n = cycle.len();
    let root = (1..=n)
        .find(|&p| n.is_multiple_of(p) && (p..n).all(|i| cycle[i] == cycle[i - p]))
        .unwrap_or(n);
    let mut cycle = cycle[..root].to_vec();
    while let (Some(&a), Some(&b)) = (spoke.last(), cycle.last()) {
        if a != b {
            break;
        }
        spoke.pop();
        cycle.rotate_right(1);
    }
    (spoke, cycle)
}

/// An element of `K[N,j]` given by its address and the binary ω-word `m` it
/// codes: `2^N · m_0 2^{M_{j+1}} 3 2^{M_{j+1}} · m_1 2^{M_{j+2}} 3 2^{M_{j+2}} ⋯`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KnjWord {
    n: u128,
    j: u32,
    m: LassoWord,
}

impl KnjWord {
    pub fn new(n: u128, j: u32, m: LassoWord) -> Result<Self> {
        let bound = m_offset(j)?;
        if n > bound {
            return Err(Error::InvalidAddress { n, j, bound });
        }
        if !m.fits(Alphabet::BINARY) {
            let letter = (0..m.phase_count())
                .map(|i| m.letter_at(i))
                .find(|&l| l >= 2)
                .unwrap_or(2);
            return Err(Error::LetterOutOfRange { letter, size: 2 });
        }
        let m = m.with_alphabet(Alphabet::BINARY)?;
        Ok(KnjWord { n, j, m })
    }

    pub fn n(&self) -> u128 {
        self.n
    }

    pub fn j(&self) -> u32 {
        self.j
    }

    /// The coded binary word.
    pub fn m(&self) -> &LassoWord {
        &self.m
    }

    /// Length of the 2-runs in block `i`, i.e. `M_{j+i+1}`.
    pub fn block_run(&self, i: usize) -> Result<u128> {
        let idx = u32::try_from(i)
            .ok()
            .and_then(|i| self.j.checked_add(i)?.checked_add(1))
            .ok_or(Error::Overflow("block index"))?;
        m_offset(idx)
    }

    pub fn prefix(&self, n: usize) -> Result<FiniteWord> {
        let mut out: Vec<Letter> = Vec::with_capacity(n);
        let push_run = |out: &mut Vec<Letter>, len: u128| {
            let room = (n - out.len()) as u128;
            let k = len.min(room) as usize;
            out.extend(std::iter::repeat_n(TWO, k));
        };
        push_run(&mut out, self.n);
        let mut i = 0;
        while out.len() < n {
            let run = self.block_run(i)?;
            out.push(self.m.letter_at(i));
            push_run(&mut out, run);
            if out.len() < n {
                out.push(THREE);
            }
            push_run(&mut out, run);
            i += 1;
        }
        out.truncate(n);
        Ok(FiniteWord::from_trusted(Alphabet::QUATERNARY, out))
    }

    /// Removes the first `k` letters.
    pub fn drop_prefix(&self, k: u128) -> Result<SyntheticWord> {
        if k <= self.n {
            return Ok(SyntheticWord::Knj(KnjWord {
                n: self.n - k,
                j: self.j,
                m: self.m.clone(),
            }));
        }
        let mut rest = k - self.n;
        let mut i = 0usize;
        loop {
            let run = self.block_run(i)?;
            let block_len = 2 * run + 2;
            if rest >= block_len {
                rest -= block_len;
                i += 1;
                continue;
            }
            let next_j = self.j + i as u32 + 1;
            let next_m = self.m.drop_prefix(i + 1);
            if rest == 0 {
                return Ok(SyntheticWord::Knj(KnjWord {
                    n: 0,
                    j: next_j - 1,
                    m: self.m.drop_prefix(i),
                }));
            }
            if rest >= run + 2 {
                // inside the trailing run: what is left is 2^b then the next block
                let b = block_len - rest;
                return Ok(SyntheticWord::Knj(KnjWord {
                    n: b,
                    j: next_j,
                    m: next_m,
                }));
            }
            // inside `m_i 2^run 3`
            let head_len = run + 2 - rest;
            if head_len > MATERIALIZE_LIMIT {
                return Err(Error::TooLong(head_len));
            }
            let mut head = vec![TWO; (head_len - 1) as usize];
            head.push(THREE);
            return Ok(SyntheticWord::prefixed(
                FiniteWord::from_trusted(Alphabet::QUATERNARY, head),
                KnjWord {
                    n: run,
                    j: next_j,
                    m: next_m,
                },
            ));
        }
    }
}

impl fmt::Display for KnjWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K[{},{}]{}", self.n, self.j, self.m)
    }
}

/// The ω-words the deciders operate on.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SyntheticWord {
    Lasso(LassoWord),
    Knj(KnjWord),
    /// A finite word followed by an element of some `K[N,j]`.
    Prefixed { head: FiniteWord, tail: KnjWord },
}

impl SyntheticWord {
    /// `head · tail`, folded into `Knj` when the head is a run of 2s that the
    /// address can absorb.
    pub fn prefixed(head: FiniteWord, tail: KnjWord) -> SyntheticWord {
        if head.is_empty() {
            return SyntheticWord::Knj(tail);
        }
        if head.letters.iter().all(|&l| l == TWO) {
            let n = tail.n + head.len() as u128;
            if m_offset(tail.j).is_ok_and(|bound| n <= bound) {
                return SyntheticWord::Knj(KnjWord { n, ..tail });
            }
        }
        let head = FiniteWord::from_trusted(Alphabet::QUATERNARY, head.letters);
        SyntheticWord::Prefixed { head, tail }
    }

    pub fn alphabet(&self) -> Alphabet {
        match self {
            SyntheticWord::Lasso(l) => l.alphabet(),
            _ => Alphabet::QUATERNARY,
        }
    }

    pub fn prefix(&self, n: usize) -> Result<FiniteWord> {
        match self {
            SyntheticWord::Lasso(l) => Ok(l.prefix(n)),
            SyntheticWord::Knj(k) => k.prefix(n),
            SyntheticWord::Prefixed { head, tail } => {
                if n <= head.len() {
                    return Ok(head.prefix(n));
                }
                head.concat(&tail.prefix(n - head.len())?)
            }
        }
    }

    /// Removes the first `k` letters.
    pub fn drop_prefix(&self, k: usize) -> Result<SyntheticWord> {
        match self {
            SyntheticWord::Lasso(l) => Ok(SyntheticWord::Lasso(l.drop_prefix(k))),
            SyntheticWord::Knj(w) => w.drop_prefix(k as u128),
            SyntheticWord::Prefixed { head, tail } => {
                if k <= head.len() {
                    let rest = FiniteWord::from_trusted(head.alphabet, head.letters[k..].to_vec());
                    Ok(SyntheticWord::prefixed(rest, tail.clone()))
                } else {
                    tail.drop_prefix((k - head.len()) as u128)
                }
            }
        }
    }
}

impl fmt::Display for SyntheticWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SyntheticWord::Lasso(l) => l.fmt(f),
            SyntheticWord::Knj(k) => k.fmt(f),
            SyntheticWord::Prefixed { head, tail } => write!(f, "{}{}", digits(&head.letters), tail),
        }
    }
}

impl From<LassoWord> for SyntheticWord {
    fn from(l: LassoWord) -> Self {
        SyntheticWord::Lasso(l)
    }
}

impl From<KnjWord> for SyntheticWord {
    fn from(k: KnjWord) -> Self {
        SyntheticWord::Knj(k)
    }
}

pub fn concat(u: &FiniteWord, v: &FiniteWord) -> Result<FiniteWord> {
    u.concat(v)
}

/// Length-`n` prefix of a synthetic word.
pub fn prefix(w: &SyntheticWord, n: usize) -> Result<FiniteWord> {
    w.prefix(n)
}

/// `w − s`: the ω-word left after removing the prefix `s`.
pub fn suffix_from(w: &SyntheticWord, s: &FiniteWord) -> Result<SyntheticWord> {
    let head = w.prefix(s.len())?;
    if head.letters != s.letters {
        return Err(Error::NotAPrefix {
            prefix: s.to_string(),
        });
    }
    w.drop_prefix(s.len())
}

/// One entry of a run decomposition: a delimiter letter (absent for a leading
/// run) followed by a run of `2`s.
pub type RunEntry = (Option<Letter>, usize);

/// Splits a word into delimiters and the runs of `2` that follow them.
///
/// `122223` becomes `[(1,4), (3,0)]`; a word starting with `2` gets a leading
/// `(None, k)` entry.
pub fn run_decompose(s: &FiniteWord) -> Vec<RunEntry> {
    let mut out: Vec<RunEntry> = Vec::new();
    for &l in &s.letters {
        if l == TWO {
            match out.last_mut() {
                Some((_, run)) => *run += 1,
                None => out.push((None, 1)),
            }
        } else {
            out.push((Some(l), 0));
        }
    }
    out
}

/// Inverse of [`run_decompose`].
pub fn recompose(alphabet: Alphabet, entries: &[RunEntry]) -> Result<FiniteWord> {
    let mut letters = Vec::new();
    for &(delim, run) in entries {
        if let Some(d) = delim {
            letters.push(d);
        }
        letters.extend(std::iter::repeat_n(TWO, run));
    }
    FiniteWord::new(alphabet, letters)
}
