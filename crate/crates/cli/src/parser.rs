//! Recursive-descent parser for algebra expressions.
//!
//! ```text
//! expr      := sign? term (('+' | '-') term)*
//! term      := factor ('*'? factor)*
//! factor    := atom ('^' uint)?
//! atom      := rational | generator | '(' expr ')' | '[' expr ',' expr ']'
//! generator := ('a' | 'p' | 'q' | 'pt' | 'qt') '(' int ',' int ')'
//! rational  := uint ('/' uint)?
//! ```
//!
//! Whitespace is ignored and juxtaposition is multiplication, so the printed
//! form of any normal-ordered element parses back to the same element.

use std::fmt;

use heisenfock_core::{expand_p, expand_q, Element, Flavor, Generator, Rational};
use num_traits::Zero;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    A,
    P,
    Q,
    PTransposed,
    QTransposed,
}

impl Family {
    fn from_name(name: &str) -> Option<Self> {
        Some(match name {
            "a" => Self::A,
            "p" => Self::P,
            "q" => Self::Q,
            "pt" => Self::PTransposed,
            "qt" => Self::QTransposed,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::A => "a",
            Self::P => "p",
            Self::Q => "q",
            Self::PTransposed => "pt",
            Self::QTransposed => "qt",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Number(Rational),
    Atom { family: Family, index: usize, mode: i32 },
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Bracket(Box<Expr>, Box<Expr>),
}

impl Expr {
    /// The element denoted, with `[x, y] = xy - yx` left unordered.
    pub fn eval(&self) -> Element {
        match self {
            Self::Number(c) => Element::scalar(c.clone()),
            Self::Atom { family, index, mode } => {
                let level = mode.unsigned_abs();
                match family {
                    Family::A => Element::generator(Generator::new(*index, *mode).expect("checked by the parser")),
                    Family::P => expand_p(*index, level, Flavor::Plain),
                    Family::Q => expand_q(*index, level, Flavor::Plain),
                    Family::PTransposed => expand_p(*index, level, Flavor::Transposed),
                    Family::QTransposed => expand_q(*index, level, Flavor::Transposed),
                }
            }
            Self::Neg(x) => -x.eval(),
            Self::Add(x, y) => x.eval() + y.eval(),
            Self::Sub(x, y) => x.eval() - y.eval(),
            Self::Mul(x, y) => x.eval() * y.eval(),
            Self::Pow(x, k) => x.eval().pow(*k),
            Self::Bracket(x, y) => {
                let (x, y) = (x.eval(), y.eval());
                &x * &y - &y * &x
            }
        }
    }
}

impl fmt::Display for Expr {
    /// Fully parenthesised.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Number(c) => write!(f, "{c}"),
            Self::Atom { family, index, mode } => write!(f, "{}({index},{mode})", family.name()),
            Self::Neg(x) => write!(f, "(-({x}))"),
            Self::Add(x, y) => write!(f, "({x} + {y})"),
            Self::Sub(x, y) => write!(f, "({x} - {y})"),
            Self::Mul(x, y) => write!(f, "({x} {y})"),
            Self::Pow(x, k) => write!(f, "({x})^{k}"),
            Self::Bracket(x, y) => write!(f, "[{x}, {y}]"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("unbalanced brackets: {0}")]
    Unbalanced(String),
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: i64, dim: usize },
    #[error("a-generators need a nonzero mode")]
    ZeroMode,
    #[error("{family}({index},{level}) needs a nonnegative level")]
    NegativeLevel { family: &'static str, index: usize, level: i64 },
    #[error("number too large: {0}")]
    Overflow(String),
}

impl ParseErrorKind {
    /// Stable name of the error class.
    pub fn class(&self) -> &'static str {
        match self {
            Self::Syntax(_) => "syntax",
            Self::Unbalanced(_) => "unbalanced",
            Self::IndexOutOfRange { .. } => "index-out-of-range",
            Self::ZeroMode => "zero-mode",
            Self::NegativeLevel { .. } => "negative-level",
            Self::Overflow(_) => "overflow",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(String),
    Ident(String),
    Open(char),
    Close(char),
    Comma,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(s) | Tok::Ident(s) => write!(f, "'{s}'"),
            Tok::Open(c) | Tok::Close(c) => write!(f, "'{c}'"),
            Tok::Comma => f.write_str("','"),
            Tok::Plus => f.write_str("'+'"),
            Tok::Minus => f.write_str("'-'"),
            Tok::Star => f.write_str("'*'"),
            Tok::Slash => f.write_str("'/'"),
            Tok::Caret => f.write_str("'^'"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn tokenize(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let (mut line, mut column) = (1, 1);
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (start_line, start_column) = (line, column);
        let mut advance = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next().unwrap();
            if c == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
            c
        };
        let tok = if c.is_whitespace() {
            advance(&mut chars);
            continue;
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while chars.peek().is_some_and(|c| c.is_ascii_digit()) {
                s.push(advance(&mut chars));
            }
            Tok::Int(s)
        } else if c.is_ascii_alphabetic() {
            let mut s = String::new();
            while chars.peek().is_some_and(|c| c.is_ascii_alphanumeric()) {
                s.push(advance(&mut chars));
            }
            Tok::Ident(s)
        } else {
            advance(&mut chars);
            match c {
                '(' | '[' => Tok::Open(c),
                ')' | ']' => Tok::Close(c),
                ',' => Tok::Comma,
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '/' => Tok::Slash,
                '^' => Tok::Caret,
                other => {
                    return Err(ParseError {
                        line: start_line,
                        column: start_column,
                        kind: ParseErrorKind::Syntax(format!("unexpected character {other:?}")),
                    })
                }
            }
        };
        out.push(Token { tok, line: start_line, column: start_column });
    }
    out.push(Token { tok: Tok::End, line, column });
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    dim: usize,
    // open brackets, innermost last, with their positions
    open: Vec<(char, usize, usize)>,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.tokens[self.pos].tok
    }

    fn bump(&mut self) -> &Token {
        let t = &self.tokens[self.pos];
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn error_here(&self, kind: ParseErrorKind) -> ParseError {
        let t = &self.tokens[self.pos];
        ParseError { line: t.line, column: t.column, kind }
    }

    fn unexpected(&self, wanted: &str) -> ParseError {
        let found = self.peek().clone();
        match found {
            Tok::End if !self.open.is_empty() => {
                let (c, line, column) = *self.open.last().unwrap();
                ParseError { line, column, kind: ParseErrorKind::Unbalanced(format!("'{c}' is never closed")) }
            }
            Tok::Close(c) if !self.open.iter().any(|&(o, ..)| closer(o) == c) => {
                self.error_here(ParseErrorKind::Unbalanced(format!("'{c}' has no matching opener")))
            }
            Tok::Close(c) if self.open.last().is_some_and(|&(o, ..)| closer(o) != c) => {
                let (o, ..) = *self.open.last().unwrap();
                self.error_here(ParseErrorKind::Unbalanced(format!("'{o}' closed by '{c}'")))
            }
            found => self.error_here(ParseErrorKind::Syntax(format!("expected {wanted}, found {found}"))),
        }
    }

    fn expect(&mut self, tok: Tok, wanted: &str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.unexpected(wanted))
        }
    }

    fn open(&mut self, c: char) {
        let t = &self.tokens[self.pos];
        self.open.push((c, t.line, t.column));
        self.bump();
    }

    fn close(&mut self, c: char) -> Result<(), ParseError> {
        self.expect(Tok::Close(c), &format!("'{c}'"))?;
        self.open.pop();
        Ok(())
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let negate = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            if *self.peek() == Tok::Plus {
                self.bump();
            }
            false
        };
        let first = self.term()?;
        let mut acc = if negate { Expr::Neg(Box::new(first)) } else { first };
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Tok::Int(_) | Tok::Ident(_) | Tok::Open(_))
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.factor()?;
        loop {
            if *self.peek() == Tok::Star {
                self.bump();
            } else if !self.starts_factor() {
                return Ok(acc);
            }
            acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
        }
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        match self.peek().clone() {
            Tok::Int(s) => {
                let k = s.parse::<u32>().map_err(|_| self.error_here(ParseErrorKind::Overflow(s.clone())))?;
                self.bump();
                Ok(Expr::Pow(Box::new(base), k))
            }
            _ => Err(self.unexpected("an exponent")),
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek().clone() {
            Tok::Int(num) => {
                self.bump();
                let mut value = Rational::from_integer(num.parse().expect("digits"));
                if *self.peek() == Tok::Slash {
                    self.bump();
                    let Tok::Int(den) = self.peek().clone() else {
                        return Err(self.unexpected("a denominator"));
                    };
                    let den: Rational = Rational::from_integer(den.parse().expect("digits"));
                    if den.is_zero() {
                        return Err(self.error_here(ParseErrorKind::Syntax("zero denominator".into())));
                    }
                    self.bump();
                    value /= den;
                }
                Ok(Expr::Number(value))
            }
            Tok::Ident(name) => self.generator(&name),
            Tok::Open('(') => {
                self.open('(');
                let inner = self.expr()?;
                self.close(')')?;
                Ok(inner)
            }
            Tok::Open('[') => {
                self.open('[');
                let x = self.expr()?;
                self.expect(Tok::Comma, "','")?;
                let y = self.expr()?;
                self.close(']')?;
                Ok(Expr::Bracket(Box::new(x), Box::new(y)))
            }
            _ => Err(self.unexpected("a number, generator, '(' or '['")),
        }
    }

    fn signed_int(&mut self) -> Result<(i64, usize, usize), ParseError> {
        let (line, column) = (self.tokens[self.pos].line, self.tokens[self.pos].column);
        let negative = *self.peek() == Tok::Minus;
        if negative {
            self.bump();
        }
        let Tok::Int(digits) = self.peek().clone() else {
            return Err(self.unexpected("an integer"));
        };
        let text = if negative { format!("-{digits}") } else { digits };
        let value = text
            .parse::<i32>()
            .map_err(|_| self.error_here(ParseErrorKind::Overflow(text.clone())))?;
        self.bump();
        Ok((value as i64, line, column))
    }

    fn generator(&mut self, name: &str) -> Result<Expr, ParseError> {
        let Some(family) = Family::from_name(name) else {
            return Err(self.error_here(ParseErrorKind::Syntax(format!("unknown generator '{name}'"))));
        };
        let (line, column) = (self.tokens[self.pos].line, self.tokens[self.pos].column);
        self.bump();
        if *self.peek() != Tok::Open('(') {
            return Err(self.unexpected("'('"));
        }
        self.open('(');
        let (index, index_line, index_column) = self.signed_int()?;
        self.expect(Tok::Comma, "','")?;
        let (mode, ..) = self.signed_int()?;
        self.close(')')?;
        let at = |kind| ParseError { line, column, kind };
        if index < 0 || index as usize >= self.dim {
            return Err(ParseError {
                line: index_line,
                column: index_column,
                kind: ParseErrorKind::IndexOutOfRange { index, dim: self.dim },
            });
        }
        let index = index as usize;
        match family {
            Family::A if mode == 0 => Err(at(ParseErrorKind::ZeroMode)),
            Family::A => Ok(Expr::Atom { family, index, mode: mode as i32 }),
            _ if mode < 0 => Err(at(ParseErrorKind::NegativeLevel { family: family.name(), index, level: mode })),
            _ => Ok(Expr::Atom { family, index, mode: mode as i32 }),
        }
    }
}

fn closer(open: char) -> char {
    if open == '(' {
        ')'
    } else {
        ']'
    }
}

/// Parses `text` for a lattice of dimension `dim`.
pub fn parse_expr(text: &str, dim: usize) -> Result<Expr, ParseError> {
    let mut parser = Parser { tokens: tokenize(text)?, pos: 0, dim, open: Vec::new() };
    let expr = parser.expr()?;
    if *parser.peek() != Tok::End {
        return Err(parser.unexpected("an operator or end of input"));
    }
    Ok(expr)
}

/// Shorthand for `parse_expr(..)?.eval()`.
pub fn parse_element(text: &str, dim: usize) -> Result<Element, ParseError> {
    parse_expr(text, dim).map(|e| e.eval())
}
