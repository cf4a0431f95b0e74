//! Word literals.
//!
//! ```text
//! finite   := [0-3]+ | ε
//! lasso    := [0-3]* '(' [0-3]+ ')'
//! knj      := [0-3]* 'K[' N ',' j ']' binary-lasso
//! ```
//!
//! A `knj` literal with a leading finite part denotes that word followed by
//! the element of `K[N,j]`. Finite words and lassos get the smallest alphabet
//! (at least binary) holding their letters.

use omega_core::word::{Alphabet, FiniteWord, KnjWord, LassoWord, Letter, SyntheticWord};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Literal {
    Finite(FiniteWord),
    Omega(SyntheticWord),
}

impl Literal {
    pub fn lasso(&self) -> Option<&LassoWord> {
        match self {
            Literal::Omega(SyntheticWord::Lasso(l)) => Some(l),
            _ => None,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LiteralError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: &'static str },
    #[error(transparent)]
    Word(#[from] omega_core::Error),
}

struct Cursor {
    chars: Vec<char>,
    pos: usize,
}

impl Cursor {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn fail<T>(&self, msg: &'static str) -> Result<T, LiteralError> {
        Err(LiteralError::Syntax { pos: self.pos, msg })
    }

    fn expect(&mut self, c: char, msg: &'static str) -> Result<(), LiteralError> {
        if self.peek() != Some(c) {
            return self.fail(msg);
        }
        self.pos += 1;
        Ok(())
    }

    fn digits(&mut self) -> Vec<Letter> {
        let mut out = Vec::new();
        while let Some(d) = self.peek().and_then(|c| c.to_digit(4)) {
            out.push(d as Letter);
            self.pos += 1;
        }
        out
    }

    fn number(&mut self) -> Result<u128, LiteralError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.fail("expected a number");
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse().map_err(|_| LiteralError::Syntax {
            pos: start,
            msg: "number out of range",
        })
    }

    fn end(&self) -> Result<(), LiteralError> {
        match self.peek() {
            None => Ok(()),
            Some(_) => self.fail("unexpected character"),
        }
    }

    /// `'(' digits ')'` after the spoke has been read.
    fn cycle(&mut self) -> Result<Vec<Letter>, LiteralError> {
        self.expect('(', "expected '('")?;
        let cycle = self.digits();
        if cycle.is_empty() {
            return self.fail("empty cycle");
        }
        self.expect(')', "expected ')'")?;
        Ok(cycle)
    }
}

fn word(letters: Vec<Letter>) -> Result<FiniteWord, LiteralError> {
    let a = Alphabet::smallest_for(&letters)?;
    Ok(FiniteWord::new(a, letters)?)
}

fn lasso(spoke: Vec<Letter>, cycle: Vec<Letter>) -> Result<LassoWord, LiteralError> {
    let mut all = spoke.clone();
    all.extend(&cycle);
    let a = Alphabet::smallest_for(&all)?;
    Ok(LassoWord::new(FiniteWord::new(a, spoke)?, FiniteWord::new(a, cycle)?)?)
}

pub fn parse_word_literal(text: &str) -> Result<Literal, LiteralError> {
    let text = text.trim();
    if text == "ε" {
        return Ok(Literal::Finite(FiniteWord::empty(Alphabet::BINARY)));
    }
    let mut c = Cursor {
        chars: text.chars().collect(),
        pos: 0,
    };
    let head = c.digits();
    match c.peek() {
        None if head.is_empty() => c.fail("empty literal"),
        None => Ok(Literal::Finite(word(head)?)),
        Some('(') => {
            let cycle = c.cycle()?;
            c.end()?;
            Ok(Literal::Omega(SyntheticWord::Lasso(lasso(head, cycle)?)))
        }
        Some('K') => {
            c.pos += 1;
            c.expect('[', "expected '['")?;
            let n = c.number()?;
            c.expect(',', "expected ','")?;
            let j_pos = c.pos;
            let j = u32::try_from(c.number()?).map_err(|_| LiteralError::Syntax {
                pos: j_pos,
                msg: "number out of range",
            })?;
            c.expect(']', "expected ']'")?;
            let m_pos = c.pos;
            let spoke = c.digits();
            let cycle = c.cycle()?;
            c.end()?;
            if spoke.iter().chain(&cycle).any(|&d| d > 1) {
                return Err(LiteralError::Syntax {
                    pos: m_pos,
                    msg: "K[N,j] codes a binary lasso",
                });
            }
            let m = lasso(spoke, cycle)?.with_alphabet(Alphabet::BINARY)?;
            let tail = KnjWord::new(n, j, m)?;
            let head = FiniteWord::new(Alphabet::QUATERNARY, head)?;
            Ok(Literal::Omega(SyntheticWord::prefixed(head, tail)))
        }
        Some(_) => c.fail("unexpected character"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn omega(s: &str) -> SyntheticWord {
        match parse_word_literal(s).unwrap() {
            Literal::Omega(w) => w,
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn lassos() {
        let w = omega("1(12)");
        assert_eq!(w.to_string(), "1(12)");
        assert_eq!(omega("0(0)").to_string(), "(0)");
        assert_eq!(omega("(0101)").to_string(), "(01)");
    }

    #[test]
    fn knj() {
        let w = omega("K[0,0]1(0)");
        assert!(matches!(&w, SyntheticWord::Knj(k) if k.n() == 0 && k.j() == 0));
        assert_eq!(w.to_string(), "K[0,0]1(0)");
        let p = omega("0222232K[0,1](1)");
        assert!(matches!(p, SyntheticWord::Prefixed { .. }));
        assert_eq!(p.to_string(), "0222232K[0,1](1)");
        // a head of 2s is absorbed into the address
        assert_eq!(omega("22K[1,1](1)").to_string(), "K[3,1](1)");
    }

    #[test]
    fn finite() {
        assert_eq!(
            parse_word_literal("0123").unwrap(),
            Literal::Finite(FiniteWord::from_digits(Alphabet::QUATERNARY, "0123").unwrap())
        );
        let e = parse_word_literal("ε").unwrap();
        assert!(matches!(e, Literal::Finite(w) if w.is_empty()));
    }

    #[test]
    fn errors_carry_positions() {
        let err = |s| parse_word_literal(s).unwrap_err();
        assert_eq!(err("1(12"), LiteralError::Syntax { pos: 4, msg: "expected ')'" });
        assert_eq!(err("1()"), LiteralError::Syntax { pos: 2, msg: "empty cycle" });
        assert_eq!(err("14"), LiteralError::Syntax { pos: 1, msg: "unexpected character" });
        assert_eq!(err("K[0,0]2(0)"), LiteralError::Syntax { pos: 6, msg: "K[N,j] codes a binary lasso" });
        assert_eq!(err(""), LiteralError::Syntax { pos: 0, msg: "empty literal" });
        assert!(matches!(err("K[1,0](0)"), LiteralError::Word(_)));
        assert!(matches!(err("(1)2"), LiteralError::Syntax { pos: 3, .. }));
    }
}
