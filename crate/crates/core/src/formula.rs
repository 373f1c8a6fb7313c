//! Modal formulas: the AST, a precedence-climbing parser, a printer and
//! simultaneous substitution.
//!
//! Concrete syntax (ASCII, whitespace-insensitive):
//!
//! | syntax | meaning |
//! |--------|---------|
//! | `p`, `q1`, `r` | propositional variable |
//! | `#f` / `#t` | bottom / top (`#t` is sugar for `~#f`) |
//! | `~f` | negation |
//! | `[]f`, `<>f` | box, diamond |
//! | `f & g` | conjunction (left-associative) |
//! | `f \| g` | disjunction (left-associative) |
//! | `f -> g` | implication (right-associative) |
//!
//! Unary operators bind tightest, then `&`, then `|`, then `->`. The Unicode
//! symbols `¬ □ ◇ ∧ ∨ → ⊥ ⊤` are accepted as alternatives.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A propositional modal formula.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Formula {
    Var(String),
    Bottom,
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Box(Box<Formula>),
    Diamond(Box<Formula>),
}

impl Formula {
    pub fn var(name: &str) -> Formula {
        Formula::Var(name.to_string())
    }

    /// `#t`, i.e. `~#f`.
    pub fn top() -> Formula {
        Formula::Bottom.not()
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(self) -> Formula {
        Formula::Not(Box::new(self))
    }

    pub fn and(self, other: Formula) -> Formula {
        Formula::And(Box::new(self), Box::new(other))
    }

    pub fn or(self, other: Formula) -> Formula {
        Formula::Or(Box::new(self), Box::new(other))
    }

    pub fn implies(self, other: Formula) -> Formula {
        Formula::Implies(Box::new(self), Box::new(other))
    }

    pub fn boxed(self) -> Formula {
        Formula::Box(Box::new(self))
    }

    pub fn diamond(self) -> Formula {
        Formula::Diamond(Box::new(self))
    }

    /// Applies `[]` `n` times; `box_power(f, 0)` is `f` itself.
    pub fn box_power(self, n: usize) -> Formula {
        (0..n).fold(self, |f, _| f.boxed())
    }

    /// Applies `<>` `n` times.
    pub fn diamond_power(self, n: usize) -> Formula {
        (0..n).fold(self, |f, _| f.diamond())
    }

    /// Folds a non-empty list of formulas into a left-nested conjunction.
    pub fn conjunction<I: IntoIterator<Item = Formula>>(parts: I) -> Option<Formula> {
        parts.into_iter().reduce(Formula::and)
    }

    /// The propositional variables occurring in the formula, sorted.
    pub fn variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_variables(&mut out);
        out
    }

    fn collect_variables(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Var(name) => {
                out.insert(name.clone());
            }
            Formula::Bottom => {}
            Formula::Not(f) | Formula::Box(f) | Formula::Diamond(f) => f.collect_variables(out),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => {
                l.collect_variables(out);
                r.collect_variables(out);
            }
        }
    }

    /// Number of nodes in the tree.
    pub fn size(&self) -> usize {
        match self {
            Formula::Var(_) | Formula::Bottom => 1,
            Formula::Not(f) | Formula::Box(f) | Formula::Diamond(f) => 1 + f.size(),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => {
                1 + l.size() + r.size()
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Formula::Var(_) | Formula::Bottom => 0,
            Formula::Not(f) | Formula::Box(f) | Formula::Diamond(f) => 1 + f.depth(),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => {
                1 + l.depth().max(r.depth())
            }
        }
    }

    /// Simultaneous substitution. Variables without a binding are left alone.
    pub fn substitute(&self, bindings: &BTreeMap<String, Formula>) -> Formula {
        match self {
            Formula::Var(name) => bindings.get(name).cloned().unwrap_or_else(|| self.clone()),
            Formula::Bottom => Formula::Bottom,
            Formula::Not(f) => f.substitute(bindings).not(),
            Formula::Box(f) => f.substitute(bindings).boxed(),
            Formula::Diamond(f) => f.substitute(bindings).diamond(),
            Formula::And(l, r) => l.substitute(bindings).and(r.substitute(bindings)),
            Formula::Or(l, r) => l.substitute(bindings).or(r.substitute(bindings)),
            Formula::Implies(l, r) => l.substitute(bindings).implies(r.substitute(bindings)),
        }
    }

    /// Substitutes a single variable.
    pub fn substitute_one(&self, name: &str, replacement: Formula) -> Formula {
        let mut bindings = BTreeMap::new();
        bindings.insert(name.to_string(), replacement);
        self.substitute(&bindings)
    }

    /// The two sides of an implication, if this is one.
    pub fn as_implication(&self) -> Option<(&Formula, &Formula)> {
        match self {
            Formula::Implies(l, r) => Some((l, r)),
            _ => None,
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::Implies(..) => 1,
            Formula::Or(..) => 2,
            Formula::And(..) => 3,
            Formula::Not(_) | Formula::Box(_) | Formula::Diamond(_) => 4,
            Formula::Var(_) | Formula::Bottom => 5,
        }
    }

    fn is_binary(&self) -> bool {
        matches!(
            self,
            Formula::And(..) | Formula::Or(..) | Formula::Implies(..)
        )
    }

    /// Writes the formula with the fewest parentheses the grammar allows.
    pub fn to_minimal_string(&self) -> String {
        let mut out = String::new();
        write_minimal(self, &mut out);
        out
    }
}

/// Prints with minimal parentheses, except that binary operands of the
/// outermost connective are always parenthesized, so that axioms read like
/// `(p & <><>q) -> (<>q | <><>(q & <>p))`.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        match self {
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => {
                let op = binary_symbol(self);
                write_root_operand(l, &mut out);
                out.push_str(op);
                write_root_operand(r, &mut out);
            }
            _ => write_minimal(self, &mut out),
        }
        f.write_str(&out)
    }
}

fn write_root_operand(f: &Formula, out: &mut String) {
    if f.is_binary() {
        out.push('(');
        write_minimal(f, out);
        out.push(')');
    } else {
        write_minimal(f, out);
    }
}

fn binary_symbol(f: &Formula) -> &'static str {
    match f {
        Formula::And(..) => " & ",
        Formula::Or(..) => " | ",
        Formula::Implies(..) => " -> ",
        _ => unreachable!("not a binary connective"),
    }
}

fn write_minimal(f: &Formula, out: &mut String) {
    match f {
        Formula::Var(name) => out.push_str(name),
        Formula::Bottom => out.push_str("#f"),
        Formula::Not(g) => {
            out.push('~');
            write_child(g, 4, out);
        }
        Formula::Box(g) => {
            out.push_str("[]");
            write_child(g, 4, out);
        }
        Formula::Diamond(g) => {
            out.push_str("<>");
            write_child(g, 4, out);
        }
        Formula::And(l, r) | Formula::Or(l, r) => {
            let prec = f.precedence();
            // left-associative: the right operand needs strictly higher precedence
            write_child(l, prec, out);
            out.push_str(binary_symbol(f));
            write_child(r, prec + 1, out);
        }
        Formula::Implies(l, r) => {
            write_child(l, 2, out);
            out.push_str(" -> ");
            write_child(r, 1, out);
        }
    }
}

fn write_child(f: &Formula, min_prec: u8, out: &mut String) {
    if f.precedence() < min_prec {
        out.push('(');
        write_minimal(f, out);
        out.push(')');
    } else {
        write_minimal(f, out);
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unexpected character {found:?} at position {position}")]
    UnknownToken { position: usize, found: char },
    #[error("expected {expected} at position {position}, found {found}")]
    Unexpected {
        position: usize,
        expected: &'static str,
        found: String,
    },
    #[error("unexpected end of input, expected {expected}")]
    UnexpectedEnd { expected: &'static str },
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Ident(String),
    Bottom,
    Top,
    Not,
    And,
    Or,
    Implies,
    Box,
    Diamond,
    LParen,
    RParen,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Ident(name) => write!(f, "identifier {name:?}"),
            Token::Bottom => f.write_str("'#f'"),
            Token::Top => f.write_str("'#t'"),
            Token::Not => f.write_str("'~'"),
            Token::And => f.write_str("'&'"),
            Token::Or => f.write_str("'|'"),
            Token::Implies => f.write_str("'->'"),
            Token::Box => f.write_str("'[]'"),
            Token::Diamond => f.write_str("'<>'"),
            Token::LParen => f.write_str("'('"),
            Token::RParen => f.write_str("')'"),
        }
    }
}

/// Positions are character offsets into the input.
fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let two = |second: char| chars.get(i + 1) == Some(&second);
        let token = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                tokens.push((start, Token::Ident(chars[start..i].iter().collect())));
                continue;
            }
            '#' if two('f') => Token::Bottom,
            '#' if two('t') => Token::Top,
            '-' if two('>') => Token::Implies,
            '[' if two(']') => Token::Box,
            '<' if two('>') => Token::Diamond,
            '~' | '¬' => Token::Not,
            '&' | '∧' => Token::And,
            '|' | '∨' => Token::Or,
            '→' => Token::Implies,
            '□' => Token::Box,
            '◇' => Token::Diamond,
            '⊥' => Token::Bottom,
            '⊤' => Token::Top,
            '(' => Token::LParen,
            ')' => Token::RParen,
            found => return Err(ParseError::UnknownToken { position: i, found }),
        };
        let width = match token {
            Token::Bottom | Token::Top | Token::Implies | Token::Box | Token::Diamond
                if c.is_ascii() =>
            {
                2
            }
            _ => 1,
        };
        i += width;
        tokens.push((start, token));
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn next(&mut self) -> Option<(usize, Token)> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn implication(&mut self) -> Result<Formula, ParseError> {
        let left = self.disjunction()?;
        if self.peek() == Some(&Token::Implies) {
            self.pos += 1;
            let right = self.implication()?;
            return Ok(left.implies(right));
        }
        Ok(left)
    }

    fn disjunction(&mut self) -> Result<Formula, ParseError> {
        let mut left = self.conjunction()?;
        while self.peek() == Some(&Token::Or) {
            self.pos += 1;
            left = left.or(self.conjunction()?);
        }
        Ok(left)
    }

    fn conjunction(&mut self) -> Result<Formula, ParseError> {
        let mut left = self.unary()?;
        while self.peek() == Some(&Token::And) {
            self.pos += 1;
            left = left.and(self.unary()?);
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        const EXPECTED: &str = "a formula";
        match self.next() {
            None => Err(ParseError::UnexpectedEnd { expected: EXPECTED }),
            Some((_, Token::Not)) => Ok(self.unary()?.not()),
            Some((_, Token::Box)) => Ok(self.unary()?.boxed()),
            Some((_, Token::Diamond)) => Ok(self.unary()?.diamond()),
            Some((_, Token::Ident(name))) => Ok(Formula::Var(name)),
            Some((_, Token::Bottom)) => Ok(Formula::Bottom),
            Some((_, Token::Top)) => Ok(Formula::top()),
            Some((_, Token::LParen)) => {
                let inner = self.implication()?;
                match self.next() {
                    Some((_, Token::RParen)) => Ok(inner),
                    Some((position, found)) => Err(ParseError::Unexpected {
                        position,
                        expected: "')'",
                        found: found.to_string(),
                    }),
                    None => Err(ParseError::UnexpectedEnd { expected: "')'" }),
                }
            }
            Some((position, found)) => Err(ParseError::Unexpected {
                position,
                expected: EXPECTED,
                found: found.to_string(),
            }),
        }
    }
}

/// Parses a formula in the concrete syntax described in the module docs.
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let mut parser = Parser {
        tokens: tokenize(text)?,
        pos: 0,
    };
    let formula = parser.implication()?;
    if let Some((position, found)) = parser.next() {
        return Err(ParseError::Unexpected {
            position,
            expected: "end of input",
            found: found.to_string(),
        });
    }
    Ok(formula)
}

impl FromStr for Formula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}
