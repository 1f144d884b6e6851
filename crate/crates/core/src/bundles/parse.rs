//! Recursive-descent parser for the bundle expression language.
//!
//! ```text
//! Expr   := Term ("+" Term)*
//! Term   := [int "*"] Box
//! Box    := Factor "#" Factor | Named
//! Factor := "O(" int ")" | "Om(" int ")" | "S2Om(" int ")"
//! Named  := "O(" int "," int ")" | "G1" | "G2" | "ext(" Expr ";" Expr ";" ("triv"|"nontriv") ")"
//! ```

use super::construction::Construction;
use super::expr::BundleExpr;
use super::factor::FactorBundle;
use crate::error::{Error, Result};

pub fn parse(text: &str) -> Result<BundleExpr> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: msg.to_string() }
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

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        let mut neg = false;
        if let Some(&c) = self.src.get(self.pos) {
            if c == b'-' || c == b'+' {
                neg = c == b'-';
                self.pos += 1;
                self.skip_ws();
            }
        }
        let digits = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if digits == self.pos {
            self.pos = start;
            return Err(self.err("expected integer"));
        }
        let s = std::str::from_utf8(&self.src[digits..self.pos]).expect("ascii digits");
        let v: i64 = s.parse().map_err(|_| Error::Parse { pos: digits, msg: "integer out of range".into() })?;
        Ok(if neg { -v } else { v })
    }

    fn ident(&mut self) -> Result<(usize, String)> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected identifier"));
        }
        Ok((start, String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()))
    }

    fn expr(&mut self) -> Result<BundleExpr> {
        let mut e = self.term()?;
        while self.eat(b'+') {
            e = e + self.term()?;
        }
        Ok(e)
    }

    fn term(&mut self) -> Result<BundleExpr> {
        let mult = if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let at = self.pos;
            let k = self.int()?;
            self.expect(b'*')?;
            if k <= 0 {
                return Err(Error::Parse { pos: at, msg: "multiplicity must be positive".into() });
            }
            k as u64
        } else {
            1
        };
        Ok(self.boxed()?.scaled(mult))
    }

    fn boxed(&mut self) -> Result<BundleExpr> {
        let (at, id) = self.ident()?;
        match id.as_str() {
            "G1" => Ok(BundleExpr::g1()),
            "G2" => Ok(BundleExpr::g2()),
            "ext" => self.ext(),
            "O" => {
                self.expect(b'(')?;
                let m = self.int()?;
                if self.eat(b',') {
                    let n = self.int()?;
                    self.expect(b')')?;
                    return Ok(BundleExpr::line(m, n));
                }
                self.expect(b')')?;
                let left = FactorBundle::o(m);
                self.expect(b'#')?;
                let right = self.factor()?;
                Ok(BundleExpr::boxed(left, right))
            }
            "Om" | "S2Om" => {
                let left = self.factor_args(at, &id)?;
                self.expect(b'#')?;
                let right = self.factor()?;
                Ok(BundleExpr::boxed(left, right))
            }
            _ => Err(Error::UnknownIdentifier(id)),
        }
    }

    fn factor(&mut self) -> Result<FactorBundle> {
        let (at, id) = self.ident()?;
        self.factor_args(at, &id)
    }

    fn factor_args(&mut self, _at: usize, id: &str) -> Result<FactorBundle> {
        let make: fn(i64) -> FactorBundle = match id {
            "O" => FactorBundle::o,
            "Om" => FactorBundle::omega,
            "S2Om" => FactorBundle::s2omega,
            _ => return Err(Error::UnknownIdentifier(id.to_string())),
        };
        self.expect(b'(')?;
        let t = self.int()?;
        self.expect(b')')?;
        Ok(make(t))
    }

    fn ext(&mut self) -> Result<BundleExpr> {
        self.expect(b'(')?;
        let sub = self.expr()?;
        self.expect(b';')?;
        let quot = self.expr()?;
        self.expect(b';')?;
        let (_, flag) = self.ident()?;
        let nontrivial = match flag.as_str() {
            "triv" => false,
            "nontriv" => true,
            _ => return Err(Error::UnknownIdentifier(flag)),
        };
        self.expect(b')')?;
        Ok(Construction::extension(sub, quot, nontrivial))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_and_boxes() {
        assert_eq!(parse("O(2,0)").unwrap(), BundleExpr::line(2, 0));
        assert_eq!(
            parse("Om(3)#Om(2)").unwrap(),
            BundleExpr::boxed(FactorBundle::omega(3), FactorBundle::omega(2))
        );
        let e = parse(" 2 * O(0, 1) + G1 ").unwrap();
        assert_eq!(e, BundleExpr::line(0, 1).scaled(2) + BundleExpr::g1());
        assert_eq!(parse("O(-1)#S2Om(4)").unwrap().rank().unwrap(), 3);
    }

    #[test]
    fn extensions() {
        let t = parse("ext(O(1,0);O(0,1);triv)").unwrap();
        assert_eq!(t, BundleExpr::line(1, 0) + BundleExpr::line(0, 1));
        let n = parse("ext(Om(2)#Om(3);O(2,0);nontriv)").unwrap();
        assert!(!n.is_sum_form());
        assert_eq!(n.rank().unwrap(), 5);
        assert_eq!(parse(&n.to_string()).unwrap(), n);
    }

    #[test]
    fn errors() {
        assert!(matches!(parse("O(1,"), Err(Error::Parse { .. })));
        assert!(matches!(parse("Q(1)#O(1)"), Err(Error::UnknownIdentifier(_))));
        assert!(matches!(parse("O(1)"), Err(Error::Parse { pos: 4, .. })));
        assert!(matches!(parse("O(1,1) O(2,2)"), Err(Error::Parse { .. })));
        assert!(matches!(parse("0*O(1,1)"), Err(Error::Parse { .. })));
        assert!(matches!(parse("ext(O(1,1);O(0,0);maybe)"), Err(Error::UnknownIdentifier(_))));
    }
}
