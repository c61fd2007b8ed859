//! Recursive-descent parser for the ASCII formula grammar.
//!
//! ```text
//! formula := disj ( "->" formula )?
//! disj    := conj ( "|" conj )*
//! conj    := unary ( "&" unary )*
//! unary   := "~" unary | quant | "(" formula ")" | term ( "=" | "<=" ) term
//! quant   := ( "forall" | "exists" ) ident ( "<=" term )? "." formula
//! term    := prod ( "+" prod )*
//! prod    := atom ( "*" atom )*
//! atom    := "0" | "S" "(" term ")" | ident | "(" term ")"
//! ```

use super::syntax::{Formula, Ident, Term};
use super::SyntaxError;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Zero,
    Succ,
    Ident(String),
    LParen,
    RParen,
    Plus,
    Star,
    Eq,
    Le,
    Tilde,
    Amp,
    Bar,
    Arrow,
    Dot,
    ForAll,
    Exists,
}

fn describe(t: Option<&Tok>) -> String {
    match t {
        None => "end of input".into(),
        Some(Tok::Ident(s)) => format!("identifier `{s}`"),
        Some(t) => format!("{t:?}"),
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, SyntaxError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0' => {
                i += 1;
                if i < bytes.len() && bytes[i].is_ascii_digit() {
                    return Err(SyntaxError::new(start, "numeric literals other than `0` are not allowed"));
                }
                Tok::Zero
            }
            b'(' => {
                i += 1;
                Tok::LParen
            }
            b')' => {
                i += 1;
                Tok::RParen
            }
            b'+' => {
                i += 1;
                Tok::Plus
            }
            b'*' => {
                i += 1;
                Tok::Star
            }
            b'=' => {
                i += 1;
                Tok::Eq
            }
            b'~' => {
                i += 1;
                Tok::Tilde
            }
            b'&' => {
                i += 1;
                Tok::Amp
            }
            b'|' => {
                i += 1;
                Tok::Bar
            }
            b'.' => {
                i += 1;
                Tok::Dot
            }
            b'<' if bytes.get(i + 1) == Some(&b'=') => {
                i += 2;
                Tok::Le
            }
            b'-' if bytes.get(i + 1) == Some(&b'>') => {
                i += 2;
                Tok::Arrow
            }
            c if c.is_ascii_alphabetic() => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                match &text[start..i] {
                    "S" => Tok::Succ,
                    "forall" => Tok::ForAll,
                    "exists" => Tok::Exists,
                    "BY" => return Err(SyntaxError::new(start, "`BY` is reserved")),
                    word => Tok::Ident(word.to_string()),
                }
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(SyntaxError::new(start, format!("unexpected character `{ch}`")));
            }
        };
        out.push((tok, start));
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(_, o)| *o).unwrap_or(self.end)
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: Tok) -> Result<(), SyntaxError> {
        if self.eat(&t) {
            Ok(())
        } else {
            Err(self.error(format!("expected {t:?}, found {}", describe(self.peek()))))
        }
    }

    fn error(&self, msg: impl Into<String>) -> SyntaxError {
        SyntaxError::new(self.offset(), msg)
    }

    fn formula(&mut self) -> Result<Formula, SyntaxError> {
        let lhs = self.disj()?;
        if self.eat(&Tok::Arrow) {
            let rhs = self.formula()?;
            Ok(Formula::implies(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn disj(&mut self) -> Result<Formula, SyntaxError> {
        let mut acc = self.conj()?;
        while self.eat(&Tok::Bar) {
            let rhs = self.conj()?;
            acc = Formula::or(acc, rhs);
        }
        Ok(acc)
    }

    fn conj(&mut self) -> Result<Formula, SyntaxError> {
        let mut acc = self.unary()?;
        while self.eat(&Tok::Amp) {
            let rhs = self.unary()?;
            acc = Formula::and(acc, rhs);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Formula, SyntaxError> {
        crate::logic::deep(|| self.unary_inner())
    }

    fn unary_inner(&mut self) -> Result<Formula, SyntaxError> {
        match self.peek() {
            Some(Tok::Tilde) => {
                self.pos += 1;
                Ok(Formula::not(self.unary()?))
            }
            Some(Tok::ForAll) | Some(Tok::Exists) => self.quantifier(),
            Some(Tok::LParen) => {
                // Either a parenthesised formula or an atom whose left term
                // starts with a parenthesis.
                let save = self.pos;
                if let Ok(f) = self.atom_formula() {
                    return Ok(f);
                }
                self.pos = save;
                self.expect(Tok::LParen)?;
                let f = self.formula()?;
                self.expect(Tok::RParen)?;
                Ok(f)
            }
            _ => self.atom_formula(),
        }
    }

    fn quantifier(&mut self) -> Result<Formula, SyntaxError> {
        let universal = matches!(self.peek(), Some(Tok::ForAll));
        self.pos += 1;
        let at = self.offset();
        let x = match self.peek() {
            Some(Tok::Ident(name)) => {
                let x = Ident::new(name).map_err(|e| SyntaxError::new(at, e.message))?;
                self.pos += 1;
                x
            }
            other => return Err(self.error(format!("expected variable, found {}", describe(other)))),
        };
        let bound = if self.eat(&Tok::Le) {
            let bound_at = self.offset();
            let t = self.term()?;
            if t.occurs(&x) {
                return Err(SyntaxError::new(
                    bound_at,
                    format!("bound of `{x}` may not mention `{x}`"),
                ));
            }
            Some(t)
        } else {
            None
        };
        self.expect(Tok::Dot)?;
        let body = self.formula()?;
        Ok(match (universal, bound) {
            (true, None) => Formula::forall(&x, body),
            (false, None) => Formula::exists(&x, body),
            (true, Some(t)) => Formula::bounded_forall(&x, t, body),
            (false, Some(t)) => Formula::bounded_exists(&x, t, body),
        })
    }

    fn atom_formula(&mut self) -> Result<Formula, SyntaxError> {
        let lhs = self.term()?;
        if self.eat(&Tok::Eq) {
            Ok(Formula::eq(lhs, self.term()?))
        } else if self.eat(&Tok::Le) {
            Ok(Formula::le(lhs, self.term()?))
        } else {
            Err(self.error(format!("expected `=` or `<=`, found {}", describe(self.peek()))))
        }
    }

    fn term(&mut self) -> Result<Term, SyntaxError> {
        let mut acc = self.product()?;
        while self.eat(&Tok::Plus) {
            let rhs = self.product()?;
            acc = Term::add(acc, rhs);
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<Term, SyntaxError> {
        let mut acc = self.atom_term()?;
        while self.eat(&Tok::Star) {
            let rhs = self.atom_term()?;
            acc = Term::mul(acc, rhs);
        }
        Ok(acc)
    }

    fn atom_term(&mut self) -> Result<Term, SyntaxError> {
        crate::logic::deep(|| self.atom_term_inner())
    }

    fn atom_term_inner(&mut self) -> Result<Term, SyntaxError> {
        let at = self.offset();
        match self.peek().cloned() {
            Some(Tok::Zero) => {
                self.pos += 1;
                Ok(Term::Zero)
            }
            Some(Tok::Succ) => {
                self.pos += 1;
                self.expect(Tok::LParen)?;
                let inner = self.term()?;
                self.expect(Tok::RParen)?;
                Ok(Term::succ(inner))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                Ident::new(&name)
                    .map(Term::Var)
                    .map_err(|e| SyntaxError::new(at, e.message))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let t = self.term()?;
                self.expect(Tok::RParen)?;
                Ok(t)
            }
            other => Err(self.error(format!("expected term, found {}", describe(other.as_ref())))),
        }
    }

    fn finish(&self) -> Result<(), SyntaxError> {
        match self.peek() {
            None => Ok(()),
            Some(t) => Err(self.error(format!("unexpected trailing {}", describe(Some(t))))),
        }
    }
}

pub fn parse_formula(text: &str) -> Result<Formula, SyntaxError> {
    let mut p = Parser { toks: lex(text)?, pos: 0, end: text.len() };
    let f = p.formula()?;
    p.finish()?;
    Ok(f)
}

pub fn parse_term(text: &str) -> Result<Term, SyntaxError> {
    let mut p = Parser { toks: lex(text)?, pos: 0, end: text.len() };
    let t = p.term()?;
    p.finish()?;
    Ok(t)
}
