//! Propositional disjunctive programs: formula AST, rules and the parser.
//!
//! Grammar (UTF-8 text, `%` starts a comment running to end of line):
//!
//! ```text
//! program := (rule)* ;
//! rule    := head ( ":-" body )? "." ;
//! head    := atom ( ";" atom )* ;
//! body    := or_expr ;
//! or_expr := and_expr ( "|" and_expr )* ;
//! and_expr:= unary ( "," unary )* ;
//! unary   := "not" unary | "(" body ")" | atom | "#true" | "#false" | "#u" | "#c" ;
//! atom    := [a-z][A-Za-z0-9_]* ;
//! ```
//!
//! An empty body denotes the constant `#true`.

use crate::error::{Error, Result};
use crate::four::TruthValue;
use crate::lattice::{Element, FiniteLattice};

/// Atom index into the owning program's sorted universe.
pub type AtomId = u32;

/// A propositional formula over atoms and the four truth constants.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Atom(AtomId),
    Const(TruthValue),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
}

impl Formula {
    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    /// Atoms occurring in the formula, as a bitset.
    pub fn atom_mask(&self) -> u64 {
        match self {
            Formula::Atom(i) => 1 << i,
            Formula::Const(_) => 0,
            Formula::Not(f) => f.atom_mask(),
            Formula::And(a, b) | Formula::Or(a, b) => a.atom_mask() | b.atom_mask(),
        }
    }

    fn is_literal(&self) -> bool {
        match self {
            Formula::Atom(_) | Formula::Const(_) => true,
            Formula::Not(inner) => matches!(**inner, Formula::Atom(_) | Formula::Const(_)),
            _ => false,
        }
    }

    /// True when the formula is a conjunction of literals (atoms, negated
    /// atoms, truth constants).
    pub fn is_literal_conjunction(&self) -> bool {
        match self {
            Formula::And(a, b) => a.is_literal_conjunction() && b.is_literal_conjunction(),
            other => other.is_literal(),
        }
    }

    /// True when no negation occurs anywhere in the formula.
    pub fn is_negation_free(&self) -> bool {
        match self {
            Formula::Atom(_) | Formula::Const(_) => true,
            Formula::Not(_) => false,
            Formula::And(a, b) | Formula::Or(a, b) => a.is_negation_free() && b.is_negation_free(),
        }
    }

    /// Renders the formula with the given atom names.
    pub fn display(&self, atoms: &[String]) -> String {
        match self {
            Formula::Atom(i) => atoms[*i as usize].clone(),
            Formula::Const(TruthValue::T) => "#true".into(),
            Formula::Const(TruthValue::F) => "#false".into(),
            Formula::Const(TruthValue::U) => "#u".into(),
            Formula::Const(TruthValue::C) => "#c".into(),
            Formula::Not(f) => format!("not {}", f.display_nested(atoms)),
            Formula::And(a, b) => {
                format!("{}, {}", a.display_nested_and(atoms), b.display_nested_and(atoms))
            }
            Formula::Or(a, b) => format!("{} | {}", a.display(atoms), b.display(atoms)),
        }
    }

    fn display_nested(&self, atoms: &[String]) -> String {
        match self {
            Formula::And(..) | Formula::Or(..) => format!("({})", self.display(atoms)),
            _ => self.display(atoms),
        }
    }

    fn display_nested_and(&self, atoms: &[String]) -> String {
        match self {
            Formula::Or(..) => format!("({})", self.display(atoms)),
            _ => self.display(atoms),
        }
    }
}

/// A rule: a non-empty disjunction of head atoms and a body formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    /// Head atoms as a bitset over the program universe; never empty.
    pub head: Element,
    pub body: Formula,
}

impl Rule {
    /// Head atomic, body a conjunction of literals.
    pub fn is_normal(&self) -> bool {
        self.head.bits().count_ones() == 1 && self.body.is_literal_conjunction()
    }

    /// Body a conjunction of literals (head may be disjunctive).
    pub fn is_disjunctively_normal(&self) -> bool {
        self.body.is_literal_conjunction()
    }

    /// No negation in the body.
    pub fn is_positive(&self) -> bool {
        self.body.is_negation_free()
    }

    pub fn display(&self, atoms: &[String]) -> String {
        let head: Vec<&str> = atoms
            .iter()
            .enumerate()
            .filter(|(i, _)| self.head.contains_bit(*i))
            .map(|(_, a)| a.as_str())
            .collect();
        if self.body == Formula::Const(TruthValue::T) {
            format!("{}.", head.join(";"))
        } else {
            format!("{} :- {}.", head.join(";"), self.body.display(atoms))
        }
    }
}

/// A propositional disjunctive logic program with its atom universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Program {
    atoms: Vec<String>,
    rules: Vec<Rule>,
}

impl Program {
    /// Parses a program; the universe is the sorted set of occurring atoms.
    pub fn parse(text: &str) -> Result<Program> {
        Program::parse_with_extra_atoms(text, &[])
    }

    /// Parses a program and extends the universe with extra atom names.
    pub fn parse_with_extra_atoms(text: &str, extra: &[&str]) -> Result<Program> {
        let tokens = lex(text)?;
        let mut raw_rules = parse_rules(&tokens)?;
        let mut atoms: Vec<String> = raw_rules
            .iter()
            .flat_map(|r| r.head.iter().cloned().chain(collect_atoms(&r.body)))
            .chain(extra.iter().map(|s| s.to_string()))
            .collect();
        atoms.sort();
        atoms.dedup();
        if atoms.len() > 63 {
            return Err(Error::capacity(format!(
                "program uses {} atoms, exceeding the 63-atom bitset width",
                atoms.len()
            )));
        }
        let id_of = |name: &str| -> AtomId {
            atoms.binary_search_by(|a| a.as_str().cmp(name)).unwrap() as AtomId
        };
        let rules = raw_rules
            .drain(..)
            .map(|r| {
                let mut head = 0u64;
                for name in &r.head {
                    head |= 1 << id_of(name);
                }
                Rule { head: Element(head), body: intern(&r.body, &id_of) }
            })
            .collect();
        Ok(Program { atoms, rules })
    }

    /// Builds a program directly from rules over a fixed universe.
    pub fn from_rules(atoms: Vec<String>, rules: Vec<Rule>) -> Result<Program> {
        let mask = if atoms.len() >= 64 { u64::MAX } else { (1u64 << atoms.len()) - 1 };
        for (i, rule) in rules.iter().enumerate() {
            if rule.head.bits() == 0 {
                return Err(Error::domain(format!("rule {} has an empty head", i + 1)));
            }
            if rule.head.bits() & !mask != 0 || rule.body.atom_mask() & !mask != 0 {
                return Err(Error::domain(format!("rule {} uses atoms outside the universe", i + 1)));
            }
        }
        Ok(Program { atoms, rules })
    }

    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    pub fn atom_count(&self) -> usize {
        self.atoms.len()
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    /// The powerset lattice over the program universe.
    pub fn lattice(&self) -> FiniteLattice {
        FiniteLattice::powerset(self.atoms.iter().cloned())
            .expect("universe width was checked at construction")
    }

    pub fn is_normal(&self) -> bool {
        self.rules.iter().all(Rule::is_normal)
    }

    pub fn is_disjunctively_normal(&self) -> bool {
        self.rules.iter().all(Rule::is_disjunctively_normal)
    }

    pub fn is_positive(&self) -> bool {
        self.rules.iter().all(Rule::is_positive)
    }

    pub fn display(&self) -> String {
        self.rules.iter().map(|r| r.display(&self.atoms)).collect::<Vec<_>>().join("\n")
    }
}

// ---------------------------------------------------------------------------
// Lexer and parser.

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Atom(String),
    Const(TruthValue),
    Not,
    Semi,
    Comma,
    Pipe,
    If,
    Dot,
    LParen,
    RParen,
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (tline, tcol) = (line, col);
        let bump = |c: char, line: &mut usize, col: &mut usize| {
            if c == '\n' {
                *line += 1;
                *col = 1;
            } else {
                *col += 1;
            }
        };
        match c {
            '%' => {
                while let Some(&c) = chars.peek() {
                    chars.next();
                    bump(c, &mut line, &mut col);
                    if c == '\n' {
                        break;
                    }
                }
            }
            c if c.is_whitespace() => {
                chars.next();
                bump(c, &mut line, &mut col);
            }
            ';' | ',' | '|' | '.' | '(' | ')' => {
                chars.next();
                bump(c, &mut line, &mut col);
                out.push(Spanned {
                    tok: match c {
                        ';' => Tok::Semi,
                        ',' => Tok::Comma,
                        '|' => Tok::Pipe,
                        '.' => Tok::Dot,
                        '(' => Tok::LParen,
                        _ => Tok::RParen,
                    },
                    line: tline,
                    col: tcol,
                });
            }
            ':' => {
                chars.next();
                bump(':', &mut line, &mut col);
                match chars.peek() {
                    Some('-') => {
                        chars.next();
                        bump('-', &mut line, &mut col);
                        out.push(Spanned { tok: Tok::If, line: tline, col: tcol });
                    }
                    _ => return Err(Error::parse(tline, tcol, "expected `:-`")),
                }
            }
            '#' => {
                chars.next();
                bump('#', &mut line, &mut col);
                let mut word = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_alphanumeric() {
                        word.push(c);
                        chars.next();
                        bump(c, &mut line, &mut col);
                    } else {
                        break;
                    }
                }
                let tv = match word.as_str() {
                    "true" => TruthValue::T,
                    "false" => TruthValue::F,
                    "u" => TruthValue::U,
                    "c" => TruthValue::C,
                    other => {
                        return Err(Error::parse(tline, tcol, format!("unknown constant #{other}")))
                    }
                };
                out.push(Spanned { tok: Tok::Const(tv), line: tline, col: tcol });
            }
            c if c.is_ascii_lowercase() => {
                let mut word = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        word.push(c);
                        chars.next();
                        bump(c, &mut line, &mut col);
                    } else {
                        break;
                    }
                }
                let tok = if word == "not" { Tok::Not } else { Tok::Atom(word) };
                out.push(Spanned { tok, line: tline, col: tcol });
            }
            other => {
                return Err(Error::parse(tline, tcol, format!("unexpected character `{other}`")));
            }
        }
    }
    Ok(out)
}

/// Rule with atom names, before universe interning.
struct RawRule {
    head: Vec<String>,
    body: RawFormula,
}

enum RawFormula {
    Atom(String),
    Const(TruthValue),
    Not(Box<RawFormula>),
    And(Box<RawFormula>, Box<RawFormula>),
    Or(Box<RawFormula>, Box<RawFormula>),
}

fn collect_atoms(f: &RawFormula) -> Vec<String> {
    match f {
        RawFormula::Atom(a) => vec![a.clone()],
        RawFormula::Const(_) => vec![],
        RawFormula::Not(f) => collect_atoms(f),
        RawFormula::And(a, b) | RawFormula::Or(a, b) => {
            let mut v = collect_atoms(a);
            v.extend(collect_atoms(b));
            v
        }
    }
}

fn intern(f: &RawFormula, id_of: &impl Fn(&str) -> AtomId) -> Formula {
    match f {
        RawFormula::Atom(a) => Formula::Atom(id_of(a)),
        RawFormula::Const(c) => Formula::Const(*c),
        RawFormula::Not(f) => Formula::not(intern(f, id_of)),
        RawFormula::And(a, b) => Formula::and(intern(a, id_of), intern(b, id_of)),
        RawFormula::Or(a, b) => Formula::or(intern(a, id_of), intern(b, id_of)),
    }
}

struct Parser<'a> {
    toks: &'a [Spanned],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Spanned> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<&Spanned> {
        let t = self.toks.get(self.pos);
        self.pos += 1;
        t
    }

    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.pos)
            .or_else(|| self.toks.last())
            .map(|t| (t.line, t.col))
            .unwrap_or((1, 1))
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<()> {
        let (line, col) = self.here();
        match self.next() {
            Some(t) if t.tok == tok => Ok(()),
            _ => Err(Error::parse(line, col, format!("expected {what}"))),
        }
    }

    fn parse_atom(&mut self) -> Result<String> {
        let (line, col) = self.here();
        match self.next() {
            Some(Spanned { tok: Tok::Atom(a), .. }) => Ok(a.clone()),
            Some(Spanned { tok: Tok::Not, .. }) => {
                Err(Error::parse(line, col, "`not` is a reserved word, not an atom"))
            }
            _ => Err(Error::parse(line, col, "expected an atom")),
        }
    }

    fn parse_unary(&mut self) -> Result<RawFormula> {
        let (line, col) = self.here();
        match self.next() {
            Some(Spanned { tok: Tok::Not, .. }) => {
                Ok(RawFormula::Not(Box::new(self.parse_unary()?)))
            }
            Some(Spanned { tok: Tok::LParen, .. }) => {
                let body = self.parse_or()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(body)
            }
            Some(Spanned { tok: Tok::Atom(a), .. }) => Ok(RawFormula::Atom(a.clone())),
            Some(Spanned { tok: Tok::Const(c), .. }) => Ok(RawFormula::Const(*c)),
            _ => Err(Error::parse(line, col, "expected a body term")),
        }
    }

    fn parse_and(&mut self) -> Result<RawFormula> {
        let mut acc = self.parse_unary()?;
        while matches!(self.peek(), Some(Spanned { tok: Tok::Comma, .. })) {
            self.next();
            let rhs = self.parse_unary()?;
            acc = RawFormula::And(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn parse_or(&mut self) -> Result<RawFormula> {
        let mut acc = self.parse_and()?;
        while matches!(self.peek(), Some(Spanned { tok: Tok::Pipe, .. })) {
            self.next();
            let rhs = self.parse_and()?;
            acc = RawFormula::Or(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn parse_rule(&mut self) -> Result<RawRule> {
        let (line, col) = self.here();
        let mut head = vec![self.parse_atom().map_err(|_| {
            Error::parse(line, col, "expected a rule head (non-empty disjunction of atoms)")
        })?];
        while matches!(self.peek(), Some(Spanned { tok: Tok::Semi, .. })) {
            self.next();
            head.push(self.parse_atom()?);
        }
        let body = if matches!(self.peek(), Some(Spanned { tok: Tok::If, .. })) {
            self.next();
            self.parse_or()?
        } else {
            RawFormula::Const(TruthValue::T)
        };
        self.expect(Tok::Dot, "`.` at end of rule")?;
        Ok(RawRule { head, body })
    }
}

fn parse_rules(toks: &[Spanned]) -> Result<Vec<RawRule>> {
    let mut parser = Parser { toks, pos: 0 };
    let mut rules = Vec::new();
    while parser.peek().is_some() {
        rules.push(parser.parse_rule()?);
    }
    Ok(rules)
}
