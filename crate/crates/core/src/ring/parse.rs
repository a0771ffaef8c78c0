//! Recursive-descent parser for the ring text grammar.
//!
//! ```text
//! spec     := quotient (("x" | "×") quotient)*
//! quotient := atom ("/" genlist)*
//! atom     := "Z/" int | "GF(" int ")[x]/(" poly ")" | "(" spec ")"
//! genlist  := "(" [elem ("," elem)*] ")"
//! elem     := "(" elem ("," elem)* ")" | poly
//! poly     := ["-"] term (("+" | "-") term)*
//! term     := int ["*"] ["x" ["^" int]] | "x" ["^" int]
//! ```
//!
//! Quotients bind tighter than products: `Z/4 x Z/8 / (4)` is `Z/4 × (Z/8/(4))`.

use super::spec::{ElementExpr, RingSpec};
use crate::error::{Error, Result};

pub fn parse_ring_spec(text: &str) -> Result<RingSpec> {
    let mut p = Parser::new(text);
    let spec = p.spec()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.error("unexpected trailing input"));
    }
    spec.validate()?;
    Ok(spec)
}

pub fn parse_element(text: &str) -> Result<ElementExpr> {
    let mut p = Parser::new(text);
    let e = p.elem()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn new(text: &str) -> Self {
        Parser {
            chars: text.chars().collect(),
            pos: 0,
        }
    }

    fn error(&self, msg: &str) -> Error {
        Error::parse(self.pos, msg)
    }

    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{c}'")))
        }
    }

    fn expect_word(&mut self, word: &str) -> Result<()> {
        self.skip_ws();
        for c in word.chars() {
            if self.peek() != Some(c) {
                return Err(self.error(&format!("expected '{word}'")));
            }
            self.pos += 1;
        }
        Ok(())
    }

    fn int(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits
            .parse()
            .map_err(|_| Error::parse(start, "integer out of range"))
    }

    fn spec(&mut self) -> Result<RingSpec> {
        let mut factors = vec![self.quotient()?];
        loop {
            self.skip_ws();
            match self.peek() {
                Some('x') | Some('×') => {
                    self.pos += 1;
                    factors.push(self.quotient()?);
                }
                _ => break,
            }
        }
        Ok(if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            RingSpec::product(factors)
        })
    }

    fn quotient(&mut self) -> Result<RingSpec> {
        let mut spec = self.atom()?;
        while self.eat('/') {
            let gens = self.genlist()?;
            spec = RingSpec::quotient(spec, gens);
        }
        Ok(spec)
    }

    fn atom(&mut self) -> Result<RingSpec> {
        self.skip_ws();
        match self.peek() {
            Some('Z') => {
                self.pos += 1;
                self.expect('/')?;
                Ok(RingSpec::zmod(self.int()?))
            }
            Some('G') => {
                self.expect_word("GF")?;
                self.expect('(')?;
                let p = self.int()?;
                self.expect(')')?;
                self.expect('[')?;
                self.expect('x')?;
                self.expect(']')?;
                self.expect('/')?;
                self.expect('(')?;
                let start = self.pos;
                let poly = match self.poly()? {
                    ElementExpr::Poly(c) => c,
                    ElementExpr::Tuple(_) => unreachable!(),
                };
                self.expect(')')?;
                if !super::spec::is_prime(p) {
                    return Err(Error::InvalidSpec(format!("GF({p}): {p} is not prime")));
                }
                if poly.iter().any(|&c| c < 0 || c as u64 >= p) {
                    return Err(Error::parse(start, "coefficients must be reduced modulo p"));
                }
                let coeffs = poly.iter().map(|&c| c as u64).collect();
                Ok(RingSpec::poly_quot(p, coeffs))
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.spec()?;
                self.expect(')')?;
                Ok(inner)
            }
            _ => Err(self.error("expected 'Z/', 'GF(' or '('")),
        }
    }

    fn genlist(&mut self) -> Result<Vec<ElementExpr>> {
        self.expect('(')?;
        let mut gens = Vec::new();
        if self.eat(')') {
            return Ok(gens);
        }
        loop {
            gens.push(self.elem()?);
            if self.eat(')') {
                return Ok(gens);
            }
            self.expect(',')?;
        }
    }

    fn elem(&mut self) -> Result<ElementExpr> {
        self.skip_ws();
        if self.peek() == Some('(') {
            self.pos += 1;
            let mut items = vec![self.elem()?];
            while self.eat(',') {
                items.push(self.elem()?);
            }
            self.expect(')')?;
            Ok(if items.len() == 1 {
                items.pop().unwrap()
            } else {
                ElementExpr::Tuple(items)
            })
        } else {
            self.poly()
        }
    }

    fn poly(&mut self) -> Result<ElementExpr> {
        let mut coeffs: Vec<i64> = Vec::new();
        let mut sign = if self.eat('-') { -1 } else { 1 };
        loop {
            let (c, deg) = self.term()?;
            if coeffs.len() <= deg {
                coeffs.resize(deg + 1, 0);
            }
            coeffs[deg] = c
                .checked_mul(sign)
                .and_then(|v| coeffs[deg].checked_add(v))
                .ok_or_else(|| self.error("coefficient overflow"))?;
            if self.eat('+') {
                sign = 1;
            } else if self.eat('-') {
                sign = -1;
            } else {
                break;
            }
        }
        Ok(ElementExpr::Poly(coeffs).normalized())
    }

    fn term(&mut self) -> Result<(i64, usize)> {
        self.skip_ws();
        let coeff = if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let c = self.int()?;
            let c = i64::try_from(c).map_err(|_| self.error("coefficient overflow"))?;
            self.eat('*');
            Some(c)
        } else {
            None
        };
        self.skip_ws();
        if self.peek() == Some('x') {
            self.pos += 1;
            let deg = if self.eat('^') { self.int()? as usize } else { 1 };
            if deg > 64 {
                return Err(self.error("exponent too large"));
            }
            Ok((coeff.unwrap_or(1), deg))
        } else {
            coeff
                .map(|c| (c, 0))
                .ok_or_else(|| self.error("expected a term"))
        }
    }
}
