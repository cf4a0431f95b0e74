//! The enumeration `q_0, q_1, …` of equal-length pairs of binary words, the
//! offsets `M_j` and the transition relation `n →^m p`.
//!
//! Pairs are listed by length; inside one length class the order is
//! lexicographic with the β-component as major key and the α-component as
//! minor key, both read most-significant-letter first. Class `L` holds `4^L`
//! pairs and starts at index `(4^L − 1) / 3`.
//!
//! Indices are `u128`, which covers every pair of length at most
//! [`MAX_PAIR_LEN`]; anything longer reports [`Error::Overflow`].

use std::fmt;

use crate::error::{Error, Result};
use crate::word::{Alphabet, FiniteWord, Letter};

/// Longest pair length whose indices fit in a `u128`.
pub const MAX_PAIR_LEN: usize = 63;

/// Index of a pair in the enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairIndex(pub u128);

impl fmt::Display for PairIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Index of the first pair of length `len`.
fn class_start(len: usize) -> Result<u128> {
    if len > MAX_PAIR_LEN + 1 {
        return Err(Error::Overflow("pair length"));
    }
    if len == MAX_PAIR_LEN + 1 {
        return Ok(u128::MAX / 3);
    }
    Ok(((1u128 << (2 * len)) - 1) / 3)
}

/// `M_j = Σ_{i<j} 4^{i+1}`, the index of the last pair of length `j`.
pub fn m_offset(j: u32) -> Result<u128> {
    let j = j as usize;
    if j > MAX_PAIR_LEN {
        return Err(Error::Overflow("M_j"));
    }
    Ok(class_start(j + 1)? - 1)
}

/// Returns `j` if `value = M_j`.
pub fn m_index_of(value: u128) -> Option<u32> {
    (0..=MAX_PAIR_LEN as u32).find(|&j| m_offset(j).is_ok_and(|m| m == value))
}

/// The pair `(β, α)` packed as two bit strings of equal length, most
/// significant bit first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PairCode {
    pub len: usize,
    pub beta: u64,
    pub alpha: u64,
}

impl PairCode {
    pub const EMPTY: PairCode = PairCode {
        len: 0,
        beta: 0,
        alpha: 0,
    };

    pub fn from_index(n: PairIndex) -> Result<Self> {
        let mut len = 0;
        while class_start(len + 1)? <= n.0 {
            len += 1;
            if len > MAX_PAIR_LEN {
                return Err(Error::Overflow("pair index"));
            }
        }
        let rank = n.0 - class_start(len)?;
        let mask = if len == 0 { 0 } else { (1u128 << len) - 1 };
        Ok(PairCode {
            len,
            beta: (rank >> len) as u64,
            alpha: (rank & mask) as u64,
        })
    }

    pub fn index(self) -> Result<PairIndex> {
        if self.len > MAX_PAIR_LEN {
            return Err(Error::Overflow("pair length"));
        }
        let rank = ((self.beta as u128) << self.len) | self.alpha as u128;
        Ok(PairIndex(class_start(self.len)? + rank))
    }

    /// Appends β-bit `beta_bit` and α-bit `alpha_bit`.
    pub fn push(self, beta_bit: Letter, alpha_bit: Letter) -> Result<Self> {
        if self.len >= MAX_PAIR_LEN {
            return Err(Error::Overflow("pair length"));
        }
        Ok(PairCode {
            len: self.len + 1,
            beta: (self.beta << 1) | beta_bit as u64,
            alpha: (self.alpha << 1) | alpha_bit as u64,
        })
    }

    pub fn beta_bit(self, i: usize) -> Letter {
        ((self.beta >> (self.len - 1 - i)) & 1) as Letter
    }

    pub fn alpha_bit(self, i: usize) -> Letter {
        ((self.alpha >> (self.len - 1 - i)) & 1) as Letter
    }

    pub fn to_pair(self) -> QPair {
        let bits = |f: &dyn Fn(usize) -> Letter| (0..self.len).map(f).collect::<Vec<_>>();
        QPair {
            beta: FiniteWord::from_trusted(Alphabet::BINARY, bits(&|i| self.beta_bit(i))),
            alpha: FiniteWord::from_trusted(Alphabet::BINARY, bits(&|i| self.alpha_bit(i))),
        }
    }
}

/// An element of `Q`: a guessed β-prefix and the α-prefix read so far.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QPair {
    beta: FiniteWord,
    alpha: FiniteWord,
}

impl QPair {
    pub fn new(beta: FiniteWord, alpha: FiniteWord) -> Result<Self> {
        if beta.len() != alpha.len() {
            return Err(Error::PairLengthMismatch {
                beta: beta.len(),
                alpha: alpha.len(),
            });
        }
        Ok(QPair {
            beta: beta.with_alphabet(Alphabet::BINARY)?,
            alpha: alpha.with_alphabet(Alphabet::BINARY)?,
        })
    }

    pub fn from_digits(beta: &str, alpha: &str) -> Result<Self> {
        QPair::new(
            FiniteWord::from_digits(Alphabet::BINARY, beta)?,
            FiniteWord::from_digits(Alphabet::BINARY, alpha)?,
        )
    }

    pub fn beta(&self) -> &FiniteWord {
        &self.beta
    }

    pub fn alpha(&self) -> &FiniteWord {
        &self.alpha
    }

    pub fn len(&self) -> usize {
        self.beta.len()
    }

    pub fn is_empty(&self) -> bool {
        self.beta.is_empty()
    }

    pub fn code(&self) -> Result<PairCode> {
        if self.len() > MAX_PAIR_LEN {
            return Err(Error::Overflow("pair length"));
        }
        let pack = |w: &FiniteWord| w.letters().iter().fold(0u64, |acc, &b| (acc << 1) | b as u64);
        Ok(PairCode {
            len: self.len(),
            beta: pack(&self.beta),
            alpha: pack(&self.alpha),
        })
    }
}

impl fmt::Display for QPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.beta, self.alpha)
    }
}

pub fn q_of_index(n: PairIndex) -> Result<QPair> {
    Ok(PairCode::from_index(n)?.to_pair())
}

pub fn index_of_q(p: &QPair) -> Result<PairIndex> {
    p.code()?.index()
}

/// The two `p` with `n →^m p`, smaller index first.
pub fn successors(n: PairIndex, m: Letter) -> Result<[PairIndex; 2]> {
    let q = PairCode::from_index(n)?;
    Ok([q.push(0, m)?.index()?, q.push(1, m)?.index()?])
}

pub fn is_transition(n: PairIndex, m: Letter, p: PairIndex) -> Result<bool> {
    Ok(successors(n, m)?.contains(&p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(b: &str, a: &str) -> QPair {
        QPair::from_digits(b, a).unwrap()
    }

    #[test]
    fn listed_pairs() {
        let expected = [
            ("", ""),
            ("0", "0"),
            ("0", "1"),
            ("1", "0"),
            ("1", "1"),
            ("00", "00"),
            ("00", "01"),
        ];
        for (i, (b, a)) in expected.iter().enumerate() {
            assert_eq!(q_of_index(PairIndex(i as u128)).unwrap(), q(b, a), "q_{i}");
        }
    }

    #[test]
    fn index_examples() {
        assert_eq!(index_of_q(&q("0", "1")).unwrap(), PairIndex(2));
        assert_eq!(index_of_q(&q("1", "1")).unwrap(), PairIndex(4));
        assert_eq!(index_of_q(&q("11", "11")).unwrap(), PairIndex(20));
        assert!(matches!(
            QPair::from_digits("0", "01"),
            Err(Error::PairLengthMismatch { .. })
        ));
    }

    #[test]
    fn offsets() {
        assert_eq!(m_offset(0).unwrap(), 0);
        assert_eq!(m_offset(1).unwrap(), 4);
        assert_eq!(m_offset(2).unwrap(), 20);
        assert_eq!(m_offset(3).unwrap(), 84);
        assert!(m_offset(63).is_ok());
        assert!(m_offset(64).is_err());
        // native 64-bit width is enough below j = 20
        assert!(m_offset(19).unwrap() < u64::MAX as u128);
        assert_eq!(m_index_of(20), Some(2));
        assert_eq!(m_index_of(21), None);
    }

    #[test]
    fn successor_examples() {
        assert_eq!(successors(PairIndex(0), 1).unwrap(), [PairIndex(2), PairIndex(4)]);
        assert_eq!(successors(PairIndex(1), 0).unwrap(), [PairIndex(5), PairIndex(9)]);
        assert_eq!(successors(PairIndex(0), 0).unwrap(), [PairIndex(1), PairIndex(3)]);
        assert!(is_transition(PairIndex(0), 1, PairIndex(4)).unwrap());
        assert!(!is_transition(PairIndex(0), 1, PairIndex(3)).unwrap());
        assert!(!is_transition(PairIndex(1), 0, PairIndex(1)).unwrap());
    }

    #[test]
    fn longest_pairs_round_trip() {
        let last = PairIndex(u128::MAX / 3 - 1);
        let code = PairCode::from_index(last).unwrap();
        assert_eq!(code.len, MAX_PAIR_LEN);
        assert_eq!(code.index().unwrap(), last);
        assert!(PairCode::from_index(PairIndex(u128::MAX / 3)).is_err());
    }
}
