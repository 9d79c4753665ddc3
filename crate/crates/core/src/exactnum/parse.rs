//! The textual literal grammar for exact numbers.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | 'i' | 'sqrt' '(' expr ')' | '(' expr ')'
//! ```
//!
//! A parser owns a growing tower.  `sqrt(x)` first looks for a square root
//! already present in the tower and only adjoins a new level when there is
//! none, so the tower stays as small as the literals allow.

use num_bigint::BigInt;

use super::tower::{Num, Sign, Tower};
use super::{NumError, Rational};

/// Stateful parser that accumulates the tower needed by the literals it
/// has seen so far.
#[derive(Clone, Debug)]
pub struct LiteralParser {
    tower: Tower,
}

impl Default for LiteralParser {
    fn default() -> Self {
        LiteralParser { tower: Tower::rational() }
    }
}

impl LiteralParser {
    pub fn new() -> Self {
        Self::default()
    }

    /// Starts from an existing tower.
    pub fn with_tower(tower: Tower) -> Self {
        LiteralParser { tower }
    }

    pub fn tower(&self) -> &Tower {
        &self.tower
    }

    /// Parses one literal.  The result lives in the current tower, which may
    /// have grown.
    pub fn parse(&mut self, src: &str) -> Result<Num, NumError> {
        let mut p = Cursor { src: src.as_bytes(), pos: 0, ctx: self };
        let v = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.err("unexpected trailing input"));
        }
        v.lift(&self.tower)
    }

    /// Parses a radicand and adjoins its square root as a new level,
    /// rejecting squares and non-positive values.
    pub fn adjoin(&mut self, radicand: &str) -> Result<(), NumError> {
        let r = self.parse(radicand)?;
        self.tower = self.tower.extend(&r)?;
        Ok(())
    }

    pub fn adjoin_i(&mut self) {
        self.tower = self.tower.complexified();
    }

    /// Lifts a previously parsed value into the final tower.
    pub fn finish(&self, x: &Num) -> Num {
        x.lift(&self.tower).expect("parsed values embed into the parser tower")
    }

    fn sqrt(&mut self, x: Num) -> Result<Num, NumError> {
        let x = x.lift(&Tower::join(&x.tower().clone(), &self.tower).ok_or(NumError::IncompatibleTowers)?)?;
        if !x.is_real() {
            return Err(NumError::NotReal);
        }
        let re = x.re();
        match re.sign()? {
            Sign::Zero => Ok(Num::zero()),
            Sign::Positive => self.real_sqrt(&re),
            Sign::Negative => {
                let y = self.real_sqrt(&(-re))?;
                self.adjoin_i();
                let i = self.tower.imaginary_unit().expect("just complexified");
                Ok(i * y)
            }
        }
    }

    fn real_sqrt(&mut self, x: &Num) -> Result<Num, NumError> {
        let real = self.tower.real_tower();
        let x = x.lift(&real)?;
        if let Some(y) = x.exact_sqrt()? {
            return Ok(y);
        }
        self.tower = self.tower.extend(&x)?;
        Ok(self.tower.generator(self.tower.real_levels() - 1))
    }
}

/// Parses a single literal with a fresh parser.
pub fn parse_literal(src: &str) -> Result<Num, NumError> {
    LiteralParser::new().parse(src)
}

struct Cursor<'a, 'b> {
    src: &'a [u8],
    pos: usize,
    ctx: &'b mut LiteralParser,
}

impl Cursor<'_, '_> {
    fn err(&self, msg: &str) -> NumError {
        NumError::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Num, NumError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                let t = self.term()?;
                acc = acc.try_add(&t)?;
            } else if self.eat(b'-') {
                let t = self.term()?;
                acc = acc.try_sub(&t)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Num, NumError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                let t = self.unary()?;
                acc = acc.try_mul(&t)?;
            } else if self.eat(b'/') {
                let t = self.unary()?;
                acc = acc.try_div(&t)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Num, NumError> {
        if self.eat(b'-') {
            return Ok(-self.unary()?);
        }
        if self.eat(b'+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Num, NumError> {
        let base = self.atom()?;
        if self.eat(b'^') {
            self.skip_ws();
            let start = self.pos;
            let n = self.integer()?;
            let e: u32 = n.try_into().map_err(|_| NumError::Parse { pos: start, msg: "exponent too large".into() })?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt, NumError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("validated digits"))
    }

    fn atom(&mut self) -> Result<Num, NumError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => Ok(Num::from_rational(Rational::from_integer(self.integer()?))),
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(v)
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let word = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                match word {
                    "i" => {
                        self.ctx.adjoin_i();
                        Ok(Num::i())
                    }
                    "sqrt" => {
                        if !self.eat(b'(') {
                            return Err(self.err("expected '(' after sqrt"));
                        }
                        let inner = self.expr()?;
                        if !self.eat(b')') {
                            return Err(self.err("expected ')'"));
                        }
                        self.ctx.sqrt(inner)
                    }
                    _ => Err(NumError::Parse { pos: start, msg: format!("unknown identifier '{word}'") }),
                }
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn rationals_and_arithmetic() {
        assert_eq!(parse_literal("-3/4 + 1/4").unwrap(), Num::from_rational(rat(-1, 2)));
        assert_eq!(parse_literal("2^10 - (3*4)").unwrap(), Num::from_int(1012));
    }

    #[test]
    fn square_roots_build_minimal_tower() {
        let mut p = LiteralParser::new();
        let x = p.parse("sqrt(60)/2").unwrap();
        let y = p.parse("sqrt(15)").unwrap();
        assert_eq!(p.tower().real_levels(), 1);
        assert_eq!(p.finish(&x), y);
        let z = p.parse("sqrt(9/4)").unwrap();
        assert_eq!(z, Num::from_rational(rat(3, 2)));
        assert_eq!(p.tower().real_levels(), 1);
    }

    #[test]
    fn negative_radicand_gives_i() {
        let mut p = LiteralParser::new();
        let x = p.parse("sqrt(-3)").unwrap();
        assert!(p.tower().is_complex());
        assert_eq!(&x * &x, Num::from_int(-3));
        let w = p.parse("sqrt(2) + i").unwrap();
        assert_eq!(p.tower().real_levels(), 2);
        assert_eq!(w.im(), Num::one());
    }

    #[test]
    fn display_round_trip_nested() {
        let mut p = LiteralParser::new();
        let x = p.parse("3/2*sqrt(15)*sqrt(215208*sqrt(15) + 833497) - 7 + i/3").unwrap();
        let s = x.to_string();
        let mut q = LiteralParser::with_tower(p.tower().clone());
        assert_eq!(q.parse(&s).unwrap(), x);
        assert_eq!(q.tower(), p.tower());
    }

    #[test]
    fn errors_carry_positions() {
        match parse_literal("1 + foo").unwrap_err() {
            NumError::Parse { pos, .. } => assert_eq!(pos, 4),
            e => panic!("unexpected {e}"),
        }
        assert!(parse_literal("(1").is_err());
        assert_eq!(parse_literal("1/0").unwrap_err(), NumError::DivisionByZero);
    }
}
