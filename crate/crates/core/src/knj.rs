//! The codec `φ_{N,j}` between `K_{N,j}` and binary ω-words.

use crate::error::{Error, Result};
use crate::pairs::m_offset;
use crate::word::{Alphabet, FiniteWord, KnjWord, LassoWord, SyntheticWord, THREE, TWO};

/// An address `(N, j)` with `N ≤ M_j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct KnjAddress {
    n: u128,
    j: u32,
}

impl KnjAddress {
    pub fn new(n: u128, j: u32) -> Result<Self> {
        let bound = m_offset(j)?;
        if n > bound {
            return Err(Error::InvalidAddress { n, j, bound });
        }
        Ok(KnjAddress { n, j })
    }

    pub fn n(self) -> u128 {
        self.n
    }

    pub fn j(self) -> u32 {
        self.j
    }
}

pub fn phi_inverse(m: &LassoWord, addr: KnjAddress) -> Result<SyntheticWord> {
    Ok(KnjWord::new(addr.n, addr.j, m.clone())?.into())
}

pub fn phi(w: &SyntheticWord) -> Result<LassoWord> {
    match w {
        SyntheticWord::Knj(k) => Ok(k.m().clone()),
        _ => Err(Error::NotInKnj),
    }
}

/// Whether `s` extends to some element of `K_{N,j}`.
pub fn knj_prefix_consistent(s: &FiniteWord, addr: KnjAddress) -> bool {
    // `Err(verdict)` ends the scan early
    fn take_run(len: u128, rest: &mut &[u8]) -> std::result::Result<(), bool> {
        let avail = rest.iter().take_while(|&&a| a == TWO).count();
        if (avail as u128) < len {
            // consistent only if the word ends inside the run
            return Err(avail == rest.len());
        }
        *rest = &rest[len as usize..];
        Ok(())
    }
    let scan = || -> std::result::Result<(), bool> {
        let mut rest = s.letters();
        take_run(addr.n, &mut rest)?;
        for i in 0u32.. {
            match rest.first() {
                None => return Ok(()),
                Some(&b) if b > 1 => return Err(false),
                Some(_) => rest = &rest[1..],
            }
            let Ok(run) = m_offset(addr.j + i + 1) else {
                // runs this long outlast any materializable word
                return Err(rest.iter().all(|&a| a == TWO));
            };
            take_run(run, &mut rest)?;
            match rest.first() {
                None => return Ok(()),
                Some(&THREE) => rest = &rest[1..],
                Some(_) => return Err(false),
            }
            take_run(run, &mut rest)?;
        }
        Ok(())
    };
    scan().map_or_else(|verdict| verdict, |()| true)
}

/// Length of the longest prefix of `s` that extends to an element of
/// `K_{N,j}`: the first position where `s` leaves the template `2^N ? 2^M 3
/// 2^M ? …`, where `?` is any binary letter.
pub fn knj_consistent_len(s: &FiniteWord, addr: KnjAddress) -> usize {
    let letters = s.letters();
    let mut pos = 0usize;
    // advances over `count` letters satisfying `ok`; false at the first miss
    let mut expect = |ok: fn(u8) -> bool, count: u128| -> std::result::Result<(), usize> {
        for _ in 0..count {
            match letters.get(pos) {
                Some(&a) if ok(a) => pos += 1,
                _ => return Err(pos),
            }
        }
        Ok(())
    };
    let mut scan = || -> std::result::Result<(), usize> {
        expect(|a| a == TWO, addr.n)?;
        for i in 0u32.. {
            let Ok(run) = m_offset(addr.j + i + 1) else {
                // past the last representable run only 2s can follow
                return expect(|a| a == TWO, u128::MAX);
            };
            expect(|a| a <= 1, 1)?;
            expect(|a| a == TWO, run)?;
            expect(|a| a == THREE, 1)?;
            expect(|a| a == TWO, run)?;
        }
        Ok(())
    };
    scan().err().unwrap_or(letters.len())
}

/// Position of the letter `m_i` in the expansion of `K_{N,j}`.
pub fn m_position(addr: KnjAddress, i: u32) -> Result<u128> {
    let mut pos = addr.n;
    for k in 0..i {
        let run = m_offset(addr.j + k + 1)?;
        pos = run
            .checked_mul(2)
            .and_then(|r| r.checked_add(2))
            .and_then(|r| r.checked_add(pos))
            .ok_or(Error::Overflow("K position"))?;
    }
    Ok(pos)
}

pub fn quaternary(digits: &str) -> Result<FiniteWord> {
    FiniteWord::from_digits(Alphabet::QUATERNARY, digits)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(u: &str, v: &str) -> LassoWord {
        LassoWord::from_digits(Alphabet::BINARY, u, v).unwrap()
    }

    fn addr(n: u128, j: u32) -> KnjAddress {
        KnjAddress::new(n, j).unwrap()
    }

    #[test]
    fn expansions() {
        let w = phi_inverse(&m("", "1"), addr(0, 0)).unwrap();
        assert_eq!(w.prefix(11).unwrap().to_string(), "12222322221");
        let w = phi_inverse(&m("", "0"), addr(0, 0)).unwrap();
        assert_eq!(w.prefix(11).unwrap().to_string(), "02222322220");
        // N = 1 needs j ≥ 1 since M_0 = 0
        assert!(phi_inverse(&m("", "1"), KnjAddress { n: 1, j: 0 }).is_err());
        let w = phi_inverse(&m("", "1"), addr(1, 1)).unwrap();
        let expected = format!("21{}3", "2".repeat(20));
        assert_eq!(w.prefix(expected.len()).unwrap().to_string(), expected);
    }

    #[test]
    fn round_trip_and_errors() {
        let w = phi_inverse(&m("", "1"), addr(0, 0)).unwrap();
        assert_eq!(phi(&w).unwrap(), m("", "1"));
        let w = phi_inverse(&m("1", "0"), addr(4, 1)).unwrap();
        assert_eq!(phi(&w).unwrap(), m("1", "0"));
        let two = LassoWord::from_digits(Alphabet::QUATERNARY, "", "2").unwrap();
        assert_eq!(phi(&two.into()), Err(Error::NotInKnj));
        assert!(matches!(KnjAddress::new(1, 0), Err(Error::InvalidAddress { .. })));
    }

    #[test]
    fn prefix_consistency_examples() {
        assert!(knj_prefix_consistent(&quaternary("1222").unwrap(), addr(0, 0)));
        assert!(!knj_prefix_consistent(&quaternary("12223").unwrap(), addr(0, 0)));
        assert!(knj_prefix_consistent(&quaternary("").unwrap(), addr(0, 0)));
        assert!(knj_prefix_consistent(&quaternary("1222232222022222").unwrap(), addr(0, 0)));
        assert!(!knj_prefix_consistent(&quaternary("12222322223").unwrap(), addr(0, 0)));
        assert!(!knj_prefix_consistent(&quaternary("2").unwrap(), addr(0, 0)));
    }

    #[test]
    fn m_positions() {
        assert_eq!(m_position(addr(0, 0), 0).unwrap(), 0);
        assert_eq!(m_position(addr(0, 0), 1).unwrap(), 10);
        assert_eq!(m_position(addr(1, 1), 2).unwrap(), 1 + 42 + 170);
    }
}
