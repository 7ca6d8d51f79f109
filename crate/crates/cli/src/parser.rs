//! Recursive-descent parser for scripts.
//!
//! ```text
//! script  := stmt* command ';'? EOF
//! stmt    := ident '=' expr ';'
//! command := ident '(' (ident '=' expr (',' ident '=' expr)*)? ')'
//! expr    := ('+'|'-')? tensor (('+'|'-') tensor)*
//! tensor  := product ('(x)' product)*
//! product := unary ('*'? unary)*
//! unary   := '-' unary | primary
//! primary := number | 'i' | 'd1' | 'd2' | 'L' '(' expr (';' expr)? ')'
//!          | ident '(' (expr (',' expr)*)? ')' | ident
//!          | '(' expr (';' expr)? ')' | '[' (expr (',' expr)*)? ']'
//!          | '{' (expr ':' expr (',' expr ':' expr)*)? '}'
//! ```

use virbialg_core::Scalar;

use crate::error::ScriptError;
use crate::lexer::{tokenize, Pos, Tok, Token};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Num(Scalar),
    Name(String),
    Cartan(usize),
    /// `L(e)` for a degree-valued `e`, or `L(e1;e2)`.
    L(Box<Expr>, Option<Box<Expr>>),
    Degree(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Otimes(Box<Expr>, Box<Expr>),
    Call(String, Vec<Expr>),
    List(Vec<Expr>),
    Table(Vec<(Expr, Expr)>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Binding {
    pub name: String,
    pub expr: Expr,
    pub pos: Pos,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Command {
    pub name: String,
    pub args: Vec<(String, Expr)>,
    pub pos: Pos,
    /// Source text of the invocation, whitespace collapsed.
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Script {
    pub bindings: Vec<Binding>,
    pub command: Command,
}

pub const RESERVED: &[&str] = &["L", "d1", "d2", "i"];

struct Parser<'a> {
    src: &'a str,
    toks: Vec<Token>,
    at: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].tok
    }

    fn peek_at(&self, k: usize) -> &Tok {
        let i = (self.at + k).min(self.toks.len() - 1);
        &self.toks[i].tok
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].pos
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].tok.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn error(&self, msg: impl Into<String>) -> ScriptError {
        let p = self.pos();
        ScriptError::syntax(p.line, p.col, msg)
    }

    fn expect(&mut self, want: Tok, context: &str) -> Result<(), ScriptError> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(self.error(format!(
                "expected {} {context}, found {}",
                want.describe(),
                self.peek().describe()
            )))
        }
    }

    fn ident(&mut self, context: &str) -> Result<String, ScriptError> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.bump();
                Ok(s)
            }
            other => Err(self.error(format!(
                "expected identifier {context}, found {}",
                other.describe()
            ))),
        }
    }

    fn script(&mut self) -> Result<Script, ScriptError> {
        let mut bindings = Vec::new();
        loop {
            let pos = self.pos();
            let name = self.ident("at start of statement")?;
            match self.peek() {
                Tok::Eq => {
                    self.bump();
                    let expr = self.expr()?;
                    self.expect(Tok::Semi, "after binding")?;
                    bindings.push(Binding { name, expr, pos });
                }
                Tok::LParen => {
                    let command = self.command(name, pos)?;
                    if *self.peek() == Tok::Semi {
                        self.bump();
                    }
                    if *self.peek() != Tok::Eof {
                        return Err(self.error("the command must be the last statement"));
                    }
                    return Ok(Script { bindings, command });
                }
                other => {
                    return Err(self.error(format!(
                        "expected '=' or '(' after '{name}', found {}",
                        other.describe()
                    )))
                }
            }
        }
    }

    fn command(&mut self, name: String, pos: Pos) -> Result<Command, ScriptError> {
        self.expect(Tok::LParen, "after command name")?;
        let mut args = Vec::new();
        if *self.peek() != Tok::RParen {
            loop {
                let key = self.ident("for command argument")?;
                self.expect(Tok::Eq, "after argument name")?;
                args.push((key, self.expr()?));
                if *self.peek() == Tok::Comma {
                    self.bump();
                } else {
                    break;
                }
            }
        }
        let end = self.pos().offset + 1;
        self.expect(Tok::RParen, "to close the command")?;
        let text = self.src[pos.offset..end]
            .split_whitespace()
            .collect::<Vec<_>>()
            .join(" ");
        Ok(Command {
            name,
            args,
            pos,
            text,
        })
    }

    fn expr(&mut self) -> Result<Expr, ScriptError> {
        let mut lhs = match self.peek() {
            Tok::Minus => {
                self.bump();
                Expr::Neg(Box::new(self.tensor()?))
            }
            Tok::Plus => {
                self.bump();
                self.tensor()?
            }
            _ => self.tensor()?,
        };
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.tensor()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.tensor()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn tensor(&mut self) -> Result<Expr, ScriptError> {
        let mut lhs = self.product()?;
        while *self.peek() == Tok::Otimes {
            self.bump();
            if !self.starts_primary() && *self.peek() != Tok::Minus {
                return Err(self.error(format!(
                    "expected a factor after '(x)', found {}",
                    self.peek().describe()
                )));
            }
            lhs = Expr::Otimes(Box::new(lhs), Box::new(self.product()?));
        }
        Ok(lhs)
    }

    fn starts_primary(&self) -> bool {
        matches!(
            self.peek(),
            Tok::Num(_) | Tok::Ident(_) | Tok::LParen | Tok::LBracket | Tok::LBrace
        )
    }

    fn product(&mut self) -> Result<Expr, ScriptError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Tok::Num(_) | Tok::Ident(_) | Tok::LParen => {
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ScriptError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Expr, ScriptError> {
        match self.peek().clone() {
            Tok::Num(n) => {
                self.bump();
                Ok(Expr::Num(n))
            }
            Tok::Ident(name) => {
                self.bump();
                match name.as_str() {
                    "i" => Ok(Expr::Num(Scalar::i())),
                    "d1" => Ok(Expr::Cartan(1)),
                    "d2" => Ok(Expr::Cartan(2)),
                    "L" => {
                        self.expect(Tok::LParen, "after 'L'")?;
                        let first = self.expr()?;
                        let second = if *self.peek() == Tok::Semi {
                            self.bump();
                            Some(Box::new(self.expr()?))
                        } else {
                            None
                        };
                        self.expect(Tok::RParen, "to close the degree")?;
                        Ok(Expr::L(Box::new(first), second))
                    }
                    _ if *self.peek() == Tok::LParen => {
                        self.bump();
                        let args = self.list(Tok::RParen)?;
                        Ok(Expr::Call(name, args))
                    }
                    _ => Ok(Expr::Name(name)),
                }
            }
            Tok::LParen => {
                self.bump();
                let first = self.expr()?;
                if *self.peek() == Tok::Semi {
                    self.bump();
                    let second = self.expr()?;
                    self.expect(Tok::RParen, "to close the degree")?;
                    return Ok(Expr::Degree(Box::new(first), Box::new(second)));
                }
                self.expect(Tok::RParen, "to close the parenthesis")?;
                Ok(first)
            }
            Tok::LBracket => {
                self.bump();
                Ok(Expr::List(self.list(Tok::RBracket)?))
            }
            Tok::LBrace => {
                self.bump();
                let mut entries = Vec::new();
                if *self.peek() != Tok::RBrace {
                    loop {
                        let key = self.expr()?;
                        self.expect(Tok::Colon, "after table key")?;
                        entries.push((key, self.expr()?));
                        if *self.peek() == Tok::Comma {
                            self.bump();
                        } else {
                            break;
                        }
                    }
                }
                self.expect(Tok::RBrace, "to close the table")?;
                Ok(Expr::Table(entries))
            }
            other => Err(self.error(format!(
                "expected an expression, found {}",
                other.describe()
            ))),
        }
    }

    fn list(&mut self, close: Tok) -> Result<Vec<Expr>, ScriptError> {
        let mut items = Vec::new();
        if *self.peek() != close {
            loop {
                items.push(self.expr()?);
                if *self.peek() == Tok::Comma {
                    self.bump();
                } else {
                    break;
                }
            }
        }
        self.expect(close, "to close the list")?;
        Ok(items)
    }
}

pub fn parse(src: &str) -> Result<Script, ScriptError> {
    let mut p = Parser {
        src,
        toks: tokenize(src)?,
        at: 0,
    };
    p.script()
}

/// Parses a single expression, as used for round-trip checks.
pub fn parse_expr(src: &str) -> Result<Expr, ScriptError> {
    let mut p = Parser {
        src,
        toks: tokenize(src)?,
        at: 0,
    };
    let e = p.expr()?;
    if *p.peek_at(0) != Tok::Eof {
        return Err(p.error(format!(
            "unexpected {} after expression",
            p.peek().describe()
        )));
    }
    Ok(e)
}
