//! Recursive-descent parser for the demo expression language.
//!
//! ```text
//! expr    := 'let' IDENT '=' expr 'in' expr | additive
//! additive := term (('+' | '-') term)*
//! term    := primary (('*' | '/') primary)*
//! primary := INT | IDENT | 'ask' IDENT | 'log' '(' expr ')'
//!          | 'put' '(' expr ')' | 'get' | '(' expr ')'
//! ```
//!
//! `*` and `/` bind tighter than `+` and `-`; all binary operators are
//! left-associative. `let`, `in`, `ask`, `log`, `get`, and `put` are
//! reserved words.

use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl BinOp {
    fn symbol(self) -> char {
        match self {
            BinOp::Add => '+',
            BinOp::Sub => '-',
            BinOp::Mul => '*',
            BinOp::Div => '/',
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(i64),
    Var(String),
    Bin(BinOp, Box<Expr>, Box<Expr>),
    Let(String, Box<Expr>, Box<Expr>),
    Ask(String),
    Log(Box<Expr>),
    Get,
    Put(Box<Expr>),
}

/// A syntax error with the byte offset where parsing failed.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("syntax error at offset {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

const KEYWORDS: [&str; 6] = ["let", "in", "ask", "log", "get", "put"];

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

pub fn parse_program(src: &str) -> Result<Expr, ParseError> {
    let mut parser = Parser {
        src: src.as_bytes(),
        pos: 0,
    };
    let expr = parser.expr()?;
    parser.skip_ws();
    if parser.pos != parser.src.len() {
        return Err(parser.fail("unexpected trailing input"));
    }
    Ok(expr)
}

impl<'a> Parser<'a> {
    fn fail(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            offset: self.pos,
            message: message.into(),
        }
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

    fn eat(&mut self, expected: u8) -> Result<(), ParseError> {
        if self.peek() == Some(expected) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.fail(format!("expected `{}`", expected as char)))
        }
    }

    /// Consume a keyword if it is next (with a word boundary after it).
    fn keyword(&mut self, word: &str) -> bool {
        self.skip_ws();
        let end = self.pos + word.len();
        if self.src.get(self.pos..end) == Some(word.as_bytes()) {
            let boundary = self
                .src
                .get(end)
                .is_none_or(|c| !c.is_ascii_alphanumeric() && *c != b'_');
            if boundary {
                self.pos = end;
                return true;
            }
        }
        false
    }

    fn ident(&mut self) -> Result<String, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if self
            .src
            .get(self.pos)
            .is_none_or(|c| !c.is_ascii_alphabetic() && *c != b'_')
        {
            return Err(self.fail("expected an identifier"));
        }
        while self
            .src
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_alphanumeric() || *c == b'_')
        {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii identifier")
            .to_string();
        if KEYWORDS.contains(&name.as_str()) {
            self.pos = start;
            return Err(self.fail(format!("`{name}` is a reserved word")));
        }
        Ok(name)
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        if self.keyword("let") {
            let name = self.ident()?;
            self.eat(b'=')?;
            let bound = self.expr()?;
            self.skip_ws();
            if !self.keyword("in") {
                return Err(self.fail("expected `in`"));
            }
            let body = self.expr()?;
            return Ok(Expr::Let(name, Box::new(bound), Box::new(body)));
        }
        self.additive()
    }

    fn additive(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    lhs = Expr::Bin(BinOp::Add, Box::new(lhs), Box::new(rhs));
                }
                Some(b'-') => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    lhs = Expr::Bin(BinOp::Sub, Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.primary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let rhs = self.primary()?;
                    lhs = Expr::Bin(BinOp::Mul, Box::new(lhs), Box::new(rhs));
                }
                Some(b'/') => {
                    self.pos += 1;
                    let rhs = self.primary()?;
                    lhs = Expr::Bin(BinOp::Div, Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn parenthesized(&mut self) -> Result<Expr, ParseError> {
        self.eat(b'(')?;
        let inner = self.expr()?;
        self.eat(b')')?;
        Ok(inner)
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        match self.peek() {
            Some(b'(') => self.parenthesized(),
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
                    self.pos += 1;
                }
                let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("digits");
                let value: i64 = digits.parse().map_err(|_| ParseError {
                    offset: start,
                    message: "integer literal out of range".to_string(),
                })?;
                Ok(Expr::Int(value))
            }
            Some(_) => {
                if self.keyword("ask") {
                    return Ok(Expr::Ask(self.ident()?));
                }
                if self.keyword("log") {
                    return Ok(Expr::Log(Box::new(self.parenthesized()?)));
                }
                if self.keyword("put") {
                    return Ok(Expr::Put(Box::new(self.parenthesized()?)));
                }
                if self.keyword("get") {
                    return Ok(Expr::Get);
                }
                if self.keyword("let") || self.keyword("in") {
                    return Err(self.fail("expression expected"));
                }
                Ok(Expr::Var(self.ident()?))
            }
            None => Err(self.fail("expression expected")),
        }
    }
}

/// Render an expression so that [`parse_program`] reads it back verbatim.
pub fn pretty(expr: &Expr) -> String {
    // A `let` in operand position needs its own parentheses.
    fn operand(expr: &Expr) -> String {
        match expr {
            Expr::Let(..) => format!("({})", pretty(expr)),
            _ => pretty(expr),
        }
    }
    match expr {
        Expr::Int(n) => n.to_string(),
        Expr::Var(name) => name.clone(),
        Expr::Bin(op, lhs, rhs) => {
            format!("({} {} {})", operand(lhs), op.symbol(), operand(rhs))
        }
        Expr::Let(name, bound, body) => {
            format!("let {name} = {} in {}", pretty(bound), pretty(body))
        }
        Expr::Ask(name) => format!("ask {name}"),
        Expr::Log(inner) => format!("log({})", pretty(inner)),
        Expr::Get => "get".to_string(),
        Expr::Put(inner) => format!("put({})", pretty(inner)),
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", pretty(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn precedence_binds_mul_over_add() {
        let ast = parse_program("1 + 2 * 3").unwrap();
        assert_eq!(
            ast,
            Expr::Bin(
                BinOp::Add,
                Box::new(Expr::Int(1)),
                Box::new(Expr::Bin(
                    BinOp::Mul,
                    Box::new(Expr::Int(2)),
                    Box::new(Expr::Int(3))
                ))
            )
        );
    }

    #[test]
    fn operators_are_left_associative() {
        let ast = parse_program("10 - 3 - 2").unwrap();
        assert_eq!(
            ast,
            Expr::Bin(
                BinOp::Sub,
                Box::new(Expr::Bin(
                    BinOp::Sub,
                    Box::new(Expr::Int(10)),
                    Box::new(Expr::Int(3))
                )),
                Box::new(Expr::Int(2))
            )
        );
    }

    #[test]
    fn let_ask_and_division_parse() {
        let ast = parse_program("let x = ask a in x / 0").unwrap();
        assert_eq!(
            ast,
            Expr::Let(
                "x".to_string(),
                Box::new(Expr::Ask("a".to_string())),
                Box::new(Expr::Bin(
                    BinOp::Div,
                    Box::new(Expr::Var("x".to_string())),
                    Box::new(Expr::Int(0))
                ))
            )
        );
    }

    #[test]
    fn truncated_input_reports_the_offset() {
        let err = parse_program("put(").unwrap_err();
        assert_eq!(err.offset, 4);
    }

    #[test]
    fn trailing_input_is_rejected() {
        let err = parse_program("1 + 2 junk").unwrap_err();
        assert_eq!(err.offset, 6);
    }

    #[test]
    fn reserved_words_are_not_identifiers() {
        assert!(parse_program("let in = 1 in 2").is_err());
        assert!(parse_program("get").is_ok());
        assert!(parse_program("getx").is_ok());
    }

    #[test]
    fn underscore_is_an_identifier() {
        let ast = parse_program("let _ = log(get) in put(5)").unwrap();
        assert!(matches!(ast, Expr::Let(name, _, _) if name == "_"));
    }

    fn arb_ident() -> impl Strategy<Value = String> {
        "[a-z_][a-z0-9_]{0,5}".prop_filter("not a keyword", |s| {
            !KEYWORDS.contains(&s.as_str())
        })
    }

    fn arb_expr() -> impl Strategy<Value = Expr> {
        let leaf = prop_oneof![
            (0i64..1000).prop_map(Expr::Int),
            arb_ident().prop_map(Expr::Var),
            arb_ident().prop_map(Expr::Ask),
            Just(Expr::Get),
        ];
        leaf.prop_recursive(4, 32, 4, |inner| {
            prop_oneof![
                (
                    prop_oneof![
                        Just(BinOp::Add),
                        Just(BinOp::Sub),
                        Just(BinOp::Mul),
                        Just(BinOp::Div)
                    ],
                    inner.clone(),
                    inner.clone()
                )
                    .prop_map(|(op, l, r)| Expr::Bin(op, Box::new(l), Box::new(r))),
                (arb_ident(), inner.clone(), inner.clone())
                    .prop_map(|(n, b, e)| Expr::Let(n, Box::new(b), Box::new(e))),
                inner.clone().prop_map(|e| Expr::Log(Box::new(e))),
                inner.prop_map(|e| Expr::Put(Box::new(e))),
            ]
        })
    }

    proptest! {
        // The AST round-trips through the pretty-printer.
        #[test]
        fn pretty_then_parse_is_identity(expr in arb_expr()) {
            let printed = pretty(&expr);
            let reparsed = parse_program(&printed).unwrap();
            prop_assert_eq!(reparsed, expr);
        }
    }
}
