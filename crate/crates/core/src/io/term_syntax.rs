//! Text syntax for linear terms.
//!
//! ```text
//! input := ('[' NAME (',' NAME)* ']')? term
//! term  := lam | app
//! lam   := ('\' | 'λ') NAME '.' term        -- body extends as far right as possible
//! app   := atom atom* lam?                  -- left-associative
//! atom  := NAME | '(' term ')'
//! NAME  := [a-z][a-z0-9_]*
//! ```
//!
//! The printer always emits `\`, parenthesizes every non-variable argument,
//! and names variables deterministically: the context first, then binders
//! in the order they are printed.

use crate::lambda::{LinearTerm, Term};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TermSyntaxError {
    #[error("syntax error at column {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("variable `{0}` is not used exactly once")]
    NonLinear(String),
    #[error("variable `{0}` is unbound")]
    UnboundVariable(String),
}

/// The `n`-th display name: x, y, z, w, u, v, x1, x2, …
pub fn display_name(n: usize) -> String {
    const BASE: [&str; 6] = ["x", "y", "z", "w", "u", "v"];
    match BASE.get(n) {
        Some(s) => (*s).to_string(),
        None => format!("x{}", n - BASE.len() + 1),
    }
}

pub fn print_term(t: &LinearTerm) -> String {
    let free: Vec<String> = (0..t.arity()).map(display_name).collect();
    let mut out = String::new();
    if !free.is_empty() {
        out.push('[');
        out.push_str(&free.join(", "));
        out.push_str("] ");
    }
    let mut printer = Printer {
        free,
        binders: Vec::new(),
        next_name: t.arity(),
        out,
    };
    printer.term(t.term(), Position::Top);
    printer.out
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Position {
    Top,
    Fun,
    Arg,
}

struct Printer {
    free: Vec<String>,
    binders: Vec<String>,
    next_name: usize,
    out: String,
}

impl Printer {
    fn term(&mut self, t: &Term, pos: Position) {
        match t {
            Term::Var(i) => {
                let depth = self.binders.len();
                let name = if *i < depth {
                    &self.binders[depth - 1 - i]
                } else {
                    &self.free[i - depth]
                };
                self.out.push_str(name);
            }
            Term::App(f, a) => {
                let paren = pos == Position::Arg;
                if paren {
                    self.out.push('(');
                }
                self.term(f, Position::Fun);
                self.out.push(' ');
                self.term(a, Position::Arg);
                if paren {
                    self.out.push(')');
                }
            }
            Term::Lam(b) => {
                let paren = pos != Position::Top;
                if paren {
                    self.out.push('(');
                }
                let name = display_name(self.next_name);
                self.next_name += 1;
                self.out.push('\\');
                self.out.push_str(&name);
                self.out.push_str(". ");
                self.binders.push(name);
                self.term(b, Position::Top);
                self.binders.pop();
                if paren {
                    self.out.push(')');
                }
            }
        }
    }
}

pub fn parse_term(text: &str) -> Result<LinearTerm, TermSyntaxError> {
    let tokens = tokenize(text)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        context: Vec::new(),
        binders: Vec::new(),
        end: text.chars().count(),
    };
    if p.peek() == Some(&Tok::LBracket) {
        p.bump();
        loop {
            let (name, at) = p.expect_name()?;
            if p.context.iter().any(|(n, _)| *n == name) {
                return Err(syntax(at, format!("duplicate context variable `{name}`")));
            }
            p.context.push((name, 0));
            match p.bump() {
                Some((Tok::Comma, _)) => continue,
                Some((Tok::RBracket, _)) => break,
                other => return Err(p.unexpected(other, "`,` or `]`")),
            }
        }
    }
    let term = p.term()?;
    if let Some(tok) = p.bump() {
        return Err(p.unexpected(Some(tok), "end of input"));
    }
    if let Some((name, _)) = p.context.iter().find(|(_, uses)| *uses != 1) {
        return Err(TermSyntaxError::NonLinear(name.clone()));
    }
    let arity = p.context.len();
    Ok(LinearTerm::new(term, arity).expect("usage counts were checked while parsing"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Lambda,
    Dot,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Name(String),
}

fn syntax(position: usize, message: impl Into<String>) -> TermSyntaxError {
    TermSyntaxError::Syntax {
        position,
        message: message.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, TermSyntaxError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '\\' | 'λ' => Tok::Lambda,
            '.' => Tok::Dot,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            ',' => Tok::Comma,
            'a'..='z' => {
                let start = i;
                while i < chars.len() && matches!(chars[i], 'a'..='z' | '0'..='9' | '_') {
                    i += 1;
                }
                out.push((Tok::Name(chars[start..i].iter().collect()), start));
                continue;
            }
            other => return Err(syntax(i, format!("unexpected character `{other}`"))),
        };
        out.push((tok, i));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(Tok, usize)>,
    pos: usize,
    /// Context names with use counts; index = context slot.
    context: Vec<(String, u32)>,
    /// Enclosing binders, outermost first, with use counts.
    binders: Vec<(String, u32)>,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn bump(&mut self) -> Option<(Tok, usize)> {
        let tok = self.tokens.get(self.pos).cloned();
        if tok.is_some() {
            self.pos += 1;
        }
        tok
    }

    fn unexpected(&self, tok: Option<(Tok, usize)>, wanted: &str) -> TermSyntaxError {
        match tok {
            Some((t, at)) => syntax(at, format!("expected {wanted}, found {t:?}")),
            None => syntax(self.end, format!("expected {wanted}, found end of input")),
        }
    }

    fn expect_name(&mut self) -> Result<(String, usize), TermSyntaxError> {
        match self.bump() {
            Some((Tok::Name(n), at)) => Ok((n, at)),
            other => Err(self.unexpected(other, "a variable name")),
        }
    }

    fn term(&mut self) -> Result<Term, TermSyntaxError> {
        if self.peek() == Some(&Tok::Lambda) {
            return self.lam();
        }
        let mut acc = self.atom()?;
        loop {
            match self.peek() {
                Some(Tok::Name(_)) | Some(Tok::LParen) => {
                    let arg = self.atom()?;
                    acc = Term::app(acc, arg);
                }
                Some(Tok::Lambda) => {
                    let arg = self.lam()?;
                    return Ok(Term::app(acc, arg));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn lam(&mut self) -> Result<Term, TermSyntaxError> {
        self.bump();
        let (name, _) = self.expect_name()?;
        match self.bump() {
            Some((Tok::Dot, _)) => {}
            other => return Err(self.unexpected(other, "`.`")),
        }
        self.binders.push((name, 0));
        let body = self.term()?;
        let (name, uses) = self.binders.pop().expect("pushed above");
        if uses != 1 {
            return Err(TermSyntaxError::NonLinear(name));
        }
        Ok(Term::lam(body))
    }

    fn atom(&mut self) -> Result<Term, TermSyntaxError> {
        match self.bump() {
            Some((Tok::Name(name), _)) => self.resolve(name),
            Some((Tok::LParen, _)) => {
                let t = self.term()?;
                match self.bump() {
                    Some((Tok::RParen, _)) => Ok(t),
                    other => Err(self.unexpected(other, "`)`")),
                }
            }
            other => Err(self.unexpected(other, "a variable or `(`")),
        }
    }

    fn resolve(&mut self, name: String) -> Result<Term, TermSyntaxError> {
        let depth = self.binders.len();
        if let Some(k) = self.binders.iter().rposition(|(n, _)| *n == name) {
            self.binders[k].1 += 1;
            return Ok(Term::Var(depth - 1 - k));
        }
        if let Some(slot) = self.context.iter().position(|(n, _)| *n == name) {
            self.context[slot].1 += 1;
            return Ok(Term::Var(depth + slot));
        }
        Err(TermSyntaxError::UnboundVariable(name))
    }
}
