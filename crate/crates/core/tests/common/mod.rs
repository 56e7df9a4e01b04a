#![allow(dead_code)]

use lammap::io::parse_term;
use lammap::lambda::{color, Coloring, Kind, LinearTerm};

/// The 54 one-variable normal planar terms of size four, in single-letter
/// notation with juxtaposition for application and free variable `x`.
pub const SIZE_FOUR_TERMS: [&str; 54] = [
    "x(λy.y(λz.z(λw.w)))",
    "x(λy.y(λz.λw.wz))",
    "x(λy.(y(λz.z))(λw.w))",
    "x(λy.λz.z(y(λw.w)))",
    "x(λy.λz.z(λw.wy))",
    "x(λy.λz.(z(λw.w))y)",
    "x(λy.λz.(zy)(λw.w))",
    "x(λy.λz.λw.w(zy))",
    "x(λy.λz.λw.(wz)y)",
    "(x(λy.y))(λz.z(λw.w))",
    "(x(λy.y))(λz.λw.wz)",
    "(x(λy.y(λz.z)))(λw.w)",
    "(x(λy.λz.zy))(λw.w)",
    "((x(λy.y))(λz.z))(λw.w)",
    "λy.y(x(λz.z(λw.w)))",
    "λy.y(x(λz.λw.wz))",
    "λy.y((x(λz.z))(λw.w))",
    "λy.y(λz.z(x(λw.w)))",
    "λy.y(λz.z(λw.wx))",
    "λy.y(λz.(z(λw.w))x)",
    "λy.y(λz.(zx)(λw.w))",
    "λy.y(λz.λw.w(zx))",
    "λy.y(λz.λw.(wz)x)",
    "λy.(y(λz.z))(x(λw.w))",
    "λy.(y(λz.z))(λw.wx)",
    "λy.(y(λz.z(λw.w)))x",
    "λy.(y(λz.λw.wz))x",
    "λy.((y(λz.z))(λw.w))x",
    "λy.(yx)(λz.z(λw.w))",
    "λy.(yx)(λz.λw.wz)",
    "λy.(y(x(λz.z)))(λw.w)",
    "λy.(y(λz.zx))(λw.w)",
    "λy.((y(λz.z))x)(λw.w)",
    "λy.((yx)(λz.z))(λw.w)",
    "λy.λz.z(y(x(λw.w)))",
    "λy.λz.z(y(λw.wx))",
    "λy.λz.z((y(λw.w))x)",
    "λy.λz.z((yx)(λw.w))",
    "λy.λz.z(λw.w(yx))",
    "λy.λz.z(λw.(wy)x)",
    "λy.λz.(z(λw.w))(yx)",
    "λy.λz.(zy)(x(λw.w))",
    "λy.λz.(zy)(λw.wx)",
    "λy.λz.(z(y(λw.w)))x",
    "λy.λz.(z(λw.wy))x",
    "λy.λz.(z(λw.w)y)x",
    "λy.λz.((zy)(λw.w))x",
    "λy.λz.(z(yx))(λw.w)",
    "λy.λz.((zy)x)(λw.w)",
    "λy.λz.λw.w(z(yx))",
    "λy.λz.λw.w((zy)x)",
    "λy.λz.λw.(wz)(yx)",
    "λy.λz.λw.(w(zy))x",
    "λy.λz.λw.((wz)y)x",
];

/// Rewrites single-letter notation (`[y]λz.zy`) into the parser's syntax
/// by separating adjacent variable names.
pub fn spaced(compact: &str) -> String {
    let mut out = String::with_capacity(compact.len() * 2);
    let mut prev_letter = false;
    for ch in compact.chars() {
        let letter = ch.is_ascii_lowercase();
        if letter && prev_letter {
            out.push(' ');
        }
        out.push(ch);
        prev_letter = letter;
    }
    out
}

pub fn term(compact: &str) -> LinearTerm {
    let src = spaced(compact);
    parse_term(&src).unwrap_or_else(|e| panic!("{src}: {e}"))
}

pub fn colored(compact: &str, kind: Kind) -> (LinearTerm, Coloring) {
    let t = term(compact);
    let c = color(&t, kind).unwrap_or_else(|| panic!("{compact} has no {kind:?} coloring"));
    (t, c)
}

/// Minimal structural check of the DOT subset the emitters use:
/// `(graph|digraph) ID { stmt* }` where a statement is `node [attrs];`,
/// `ID [attrs]?;` or `ID (--|->) ID [attrs]?;`. Edge endpoints must be
/// declared and the edge operator must match the graph kind.
pub fn validate_dot(text: &str) -> Result<(), String> {
    let tokens = tokenize(text)?;
    let mut pos = 0;
    let next = |pos: &mut usize| -> Result<&Tok, String> {
        let t = tokens.get(*pos).ok_or("unexpected end of input")?;
        *pos += 1;
        Ok(t)
    };
    let edge_op = match next(&mut pos)? {
        Tok::Id(k) if k == "digraph" => "->",
        Tok::Id(k) if k == "graph" => "--",
        t => return Err(format!("expected graph kind, got {t:?}")),
    };
    if !matches!(next(&mut pos)?, Tok::Id(_)) {
        return Err("expected graph name".into());
    }
    if *next(&mut pos)? != Tok::Punct("{") {
        return Err("expected `{`".into());
    }
    let mut declared = std::collections::HashSet::new();
    loop {
        let head = next(&mut pos)?.clone();
        let Tok::Id(id) = head else {
            if head == Tok::Punct("}") {
                break;
            }
            return Err(format!("unexpected {head:?}"));
        };
        match tokens.get(pos) {
            Some(Tok::Punct(op)) if *op == "->" || *op == "--" => {
                if *op != edge_op {
                    return Err(format!("edge operator {op} in a graph using {edge_op}"));
                }
                pos += 1;
                let Tok::Id(to) = next(&mut pos)?.clone() else {
                    return Err("expected edge target".into());
                };
                for end in [&id, &to] {
                    if !declared.contains(end) {
                        return Err(format!("edge endpoint {end} is not declared"));
                    }
                }
            }
            _ => {
                if id != "node" && id != "edge" {
                    declared.insert(id);
                }
            }
        }
        if tokens.get(pos) == Some(&Tok::Punct("[")) {
            pos += 1;
            loop {
                let Tok::Id(_) = next(&mut pos)? else {
                    return Err("expected attribute name".into());
                };
                if *next(&mut pos)? != Tok::Punct("=") {
                    return Err("expected `=`".into());
                }
                if !matches!(next(&mut pos)?, Tok::Id(_) | Tok::Quoted(_)) {
                    return Err("expected attribute value".into());
                }
                match next(&mut pos)? {
                    Tok::Punct(",") => continue,
                    Tok::Punct("]") => break,
                    t => return Err(format!("unexpected {t:?} in attribute list")),
                }
            }
        }
        if *next(&mut pos)? != Tok::Punct(";") {
            return Err("expected `;`".into());
        }
    }
    if pos != tokens.len() {
        return Err("trailing input after `}`".into());
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Id(String),
    Quoted(String),
    Punct(&'static str),
}

fn tokenize(text: &str) -> Result<Vec<Tok>, String> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '{' | '}' | '[' | ']' | ';' | ',' | '=' => {
                chars.next();
                out.push(Tok::Punct(match c {
                    '{' => "{",
                    '}' => "}",
                    '[' => "[",
                    ']' => "]",
                    ';' => ";",
                    ',' => ",",
                    _ => "=",
                }));
            }
            '-' => {
                chars.next();
                match chars.next() {
                    Some('>') => out.push(Tok::Punct("->")),
                    Some('-') => out.push(Tok::Punct("--")),
                    other => return Err(format!("bad edge operator -{other:?}")),
                }
            }
            '"' => {
                chars.next();
                let mut s = String::new();
                loop {
                    match chars.next() {
                        Some('"') => break,
                        Some('\\') => s.push(chars.next().ok_or("unterminated escape")?),
                        Some(ch) => s.push(ch),
                        None => return Err("unterminated string".into()),
                    }
                }
                out.push(Tok::Quoted(s));
            }
            c if c.is_ascii_alphanumeric() || c == '_' => {
                let mut s = String::new();
                while let Some(&ch) = chars.peek() {
                    if ch.is_ascii_alphanumeric() || ch == '_' || ch == '.' {
                        s.push(ch);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Tok::Id(s));
            }
            other => return Err(format!("unexpected character {other:?}")),
        }
    }
    Ok(out)
}
