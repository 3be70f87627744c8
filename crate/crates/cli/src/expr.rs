//! Construction expressions.
//!
//! ```text
//! expr := 'unit' | INT | IDENT [ '(' expr { ',' expr } ')' ]
//! ```
//!
//! Bare identifiers are only meaningful as step variants.

use std::fmt;

use lattica_core::constructions::{
    aol_sandwich, boolean, bound, chain, horizontal_sum, m_lattice, ordinal_sum, sandwich, step, ConstructionError,
    StepVariant,
};
use lattica_core::tower::{tower, TowerFamily};
use lattica_core::{InvolutionLattice, Structure};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Unit(Pos),
    Int(u64, Pos),
    Ident(String, Pos),
    Call { name: String, args: Vec<Expr>, pos: Pos },
}

impl Expr {
    pub fn pos(&self) -> Pos {
        match self {
            Expr::Unit(p) | Expr::Int(_, p) | Expr::Ident(_, p) => *p,
            Expr::Call { pos, .. } => *pos,
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Unit(_) => f.write_str("unit"),
            Expr::Int(v, _) => write!(f, "{v}"),
            Expr::Ident(s, _) => f.write_str(s),
            Expr::Call { name, args, .. } => {
                write!(f, "{name}(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("syntax error at {pos}: expected {}, found {found}", expected.join(" or "))]
pub struct SyntaxError {
    pub pos: Pos,
    pub expected: Vec<String>,
    pub found: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(u64),
    LParen,
    RParen,
    Comma,
    End,
    Bad(char),
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("'{s}'"),
            Tok::Int(v) => format!("'{v}'"),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Comma => "','".into(),
            Tok::End => "end of input".into(),
            Tok::Bad(c) => format!("'{c}'"),
        }
    }
}

fn lex(text: &str) -> Vec<(Tok, Pos)> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut column) = (1, 1);
    while let Some(&c) = chars.peek() {
        let pos = Pos { line, column };
        if c == '\n' {
            chars.next();
            line += 1;
            column = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            column += 1;
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                if !(d.is_ascii_alphanumeric() || d == '_') {
                    break;
                }
                s.push(d);
                chars.next();
                column += 1;
            }
            out.push((Tok::Ident(s), pos));
            continue;
        }
        if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                s.push(d);
                chars.next();
                column += 1;
            }
            match s.parse() {
                Ok(v) => out.push((Tok::Int(v), pos)),
                Err(_) => out.push((Tok::Bad(c), pos)),
            }
            continue;
        }
        chars.next();
        column += 1;
        out.push((
            match c {
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                ',' => Tok::Comma,
                other => Tok::Bad(other),
            },
            pos,
        ));
    }
    out.push((Tok::End, Pos { line, column }));
    out
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &(Tok, Pos) {
        &self.toks[self.at]
    }

    fn bump(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> SyntaxError {
        let (tok, pos) = self.peek();
        SyntaxError {
            pos: *pos,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: tok.describe(),
        }
    }

    fn expr(&mut self) -> Result<Expr, SyntaxError> {
        match self.peek().0.clone() {
            Tok::Int(v) => {
                let (_, pos) = self.bump();
                Ok(Expr::Int(v, pos))
            }
            Tok::Ident(name) => {
                let (_, pos) = self.bump();
                if name == "unit" {
                    return Ok(Expr::Unit(pos));
                }
                if self.peek().0 != Tok::LParen {
                    return Ok(Expr::Ident(name, pos));
                }
                self.bump();
                let mut args = vec![self.expr()?];
                loop {
                    match self.peek().0 {
                        Tok::Comma => {
                            self.bump();
                            args.push(self.expr()?);
                        }
                        Tok::RParen => {
                            self.bump();
                            return Ok(Expr::Call { name, args, pos });
                        }
                        _ => return Err(self.error(&["')'", "','"])),
                    }
                }
            }
            _ => Err(self.error(&["name", "integer", "'unit'"])),
        }
    }
}

pub fn parse_expr(text: &str) -> Result<Expr, SyntaxError> {
    let mut p = Parser { toks: lex(text), at: 0 };
    let e = p.expr()?;
    if p.peek().0 != Tok::End {
        return Err(p.error(&["end of input"]));
    }
    Ok(e)
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("{pos}: unknown operation '{name}'")]
    UnknownOperation { name: String, pos: Pos },
    #[error("{pos}: {name} takes {expected} argument(s), got {got}")]
    Arity { name: String, expected: String, got: usize, pos: Pos },
    #[error("{pos}: expected {expected}, found '{found}'")]
    ArgumentKind { expected: &'static str, found: String, pos: Pos },
    #[error("{pos}: {message}")]
    Domain { message: String, pos: Pos },
    #[error("{pos}: {source}")]
    Construction { source: ConstructionError, pos: Pos },
    #[error("{pos}: a tower can only appear at the top level")]
    NestedTower { pos: Pos },
}

/// An evaluated expression: a structure, and the whole family for a tower.
#[derive(Clone, Debug)]
pub struct Evaluated {
    pub structure: Structure,
    pub tower: Option<TowerFamily>,
}

pub fn evaluate(e: &Expr) -> Result<Evaluated, EvalError> {
    if let Expr::Call { name, args, pos } = e {
        if name == "tower" {
            arity(name, args, "3", args.len() == 3, *pos)?;
            let seed = structure(&args[0])?;
            let k = int(&args[1], 0, 64)?;
            let variant = variant(&args[2])?;
            let family = tower(&seed, k, variant).map_err(|source| EvalError::Construction { source, pos: *pos })?;
            return Ok(Evaluated {
                structure: family.last().clone(),
                tower: Some(family),
            });
        }
    }
    Ok(Evaluated {
        structure: structure(e)?,
        tower: None,
    })
}

fn arity(name: &str, args: &[Expr], expected: &str, ok: bool, pos: Pos) -> Result<(), EvalError> {
    if ok {
        Ok(())
    } else {
        Err(EvalError::Arity {
            name: name.to_string(),
            expected: expected.to_string(),
            got: args.len(),
            pos,
        })
    }
}

fn int(e: &Expr, min: u64, max: u64) -> Result<usize, EvalError> {
    match e {
        Expr::Int(v, _) if (min..=max).contains(v) => Ok(*v as usize),
        Expr::Int(v, pos) => Err(EvalError::Domain {
            message: format!("{v} is outside {min}..={max}"),
            pos: *pos,
        }),
        other => Err(EvalError::ArgumentKind {
            expected: "an integer",
            found: other.to_string(),
            pos: other.pos(),
        }),
    }
}

fn variant(e: &Expr) -> Result<StepVariant, EvalError> {
    match e {
        Expr::Ident(s, pos) => StepVariant::parse(s).ok_or_else(|| EvalError::ArgumentKind {
            expected: "kleene, double3 or plain",
            found: s.clone(),
            pos: *pos,
        }),
        other => Err(EvalError::ArgumentKind {
            expected: "kleene, double3 or plain",
            found: other.to_string(),
            pos: other.pos(),
        }),
    }
}

fn involution(e: &Expr) -> Result<InvolutionLattice, EvalError> {
    match structure(e)? {
        Structure::Involution(s) => Ok(s.without_brouwer()),
        Structure::Lattice(_) => Err(EvalError::ArgumentKind {
            expected: "an involution lattice",
            found: e.to_string(),
            pos: e.pos(),
        }),
    }
}

fn structure(e: &Expr) -> Result<Structure, EvalError> {
    let (name, args, pos) = match e {
        Expr::Call { name, args, pos } => (name.as_str(), args.as_slice(), *pos),
        other => {
            return Err(EvalError::ArgumentKind {
                expected: "a construction",
                found: other.to_string(),
                pos: other.pos(),
            })
        }
    };
    let built = |r: Result<Structure, ConstructionError>| r.map_err(|source| EvalError::Construction { source, pos });
    let one = |ok: bool| arity(name, args, "1", ok, pos);
    match name {
        "chain" => {
            one(args.len() == 1)?;
            built(chain(int(&args[0], 1, 4096)?).map(Structure::Lattice))
        }
        "bool" => {
            one(args.len() == 1)?;
            built(boolean(int(&args[0], 0, 12)?).map(Structure::Involution))
        }
        "m" => {
            one(args.len() == 1)?;
            built(m_lattice(int(&args[0], 1, 4096)?).map(Structure::Lattice))
        }
        "dual" => {
            one(args.len() == 1)?;
            let s = structure(&args[0])?;
            Ok(match s {
                Structure::Lattice(l) => Structure::Lattice(l.dual()),
                Structure::Involution(k) => {
                    let inv = k.inv().to_vec();
                    Structure::Involution(
                        InvolutionLattice::new(k.lattice().dual(), inv).expect("an involution of L is one of Lᵈ"),
                    )
                }
            })
        }
        "bound" => {
            one(args.len() == 1)?;
            Ok(bound(&structure(&args[0])?).result)
        }
        "osum" => {
            arity(name, args, "2", args.len() == 2, pos)?;
            let (l, m) = (structure(&args[0])?, structure(&args[1])?);
            Ok(Structure::Lattice(ordinal_sum(l.lattice(), m.lattice()).result))
        }
        "hsum" => {
            arity(name, args, "at least 1", !args.is_empty(), pos)?;
            let parts = args.iter().map(structure).collect::<Result<Vec<_>, _>>()?;
            built(horizontal_sum(&parts).map(|w| w.result))
        }
        "sandwich" => {
            arity(name, args, "2", args.len() == 2, pos)?;
            let l = structure(&args[0])?;
            let k = match &args[1] {
                Expr::Unit(_) => None,
                other => Some(involution(other)?),
            };
            Ok(Structure::Involution(sandwich(l.lattice(), k.as_ref()).result))
        }
        "aol" => {
            one(args.len() == 1)?;
            let k = involution(&args[0])?;
            built(aol_sandwich(&k).map(|w| Structure::Involution(w.result)))
        }
        "step" => {
            arity(name, args, "2", args.len() == 2, pos)?;
            let m = structure(&args[0])?;
            let v = variant(&args[1])?;
            built(step(&m, v).map(|w| w.result))
        }
        "tower" => Err(EvalError::NestedTower { pos }),
        _ => Err(EvalError::UnknownOperation {
            name: name.to_string(),
            pos,
        }),
    }
}
