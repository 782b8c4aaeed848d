//! Recursive element values.
//!
//! Elements are closed values rather than indices into a registry, so a
//! functor image (a subset, a scalar table, a tagged value) is
//! self-describing and new carriers can be produced without global state.
//! The derived `Ord` is lexicographic over the variant tree, giving every
//! collection of elements a strict total order; `FinSet` stores elements in
//! that order.

use crate::error::{CatError, Result};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    /// Named atom.
    Atom(String),
    /// Ordered pair, the carrier shape of binary products.
    Pair(Box<Element>, Box<Element>),
    /// Left insertion into a binary coproduct.
    Left(Box<Element>),
    /// Right insertion into a binary coproduct.
    Right(Box<Element>),
    /// The inhabitant of singleton units.
    Unit,
    /// Finite set of elements, stored deduplicated in canonical order.
    Subset(Vec<Element>),
    /// Finite map element -> semiring scalar, keys in canonical order,
    /// zero-scalar entries dropped by the code that builds tables.
    Table(Vec<(Element, Element)>),
    /// Representative of a quotient class (the least class member).
    Class(Box<Element>),
}

impl Element {
    pub fn atom(label: impl Into<String>) -> Self {
        Element::Atom(label.into())
    }

    pub fn pair(a: Element, b: Element) -> Self {
        Element::Pair(Box::new(a), Box::new(b))
    }

    pub fn left(a: Element) -> Self {
        Element::Left(Box::new(a))
    }

    pub fn right(a: Element) -> Self {
        Element::Right(Box::new(a))
    }

    /// Builds a subset value: sorts and deduplicates.
    pub fn subset(mut items: Vec<Element>) -> Self {
        items.sort();
        items.dedup();
        Element::Subset(items)
    }

    /// Builds a table value: sorts by key, rejects duplicate keys.
    /// Zero-scalar entries must already be dropped by the caller (it knows
    /// the semiring).
    pub fn table(mut entries: Vec<(Element, Element)>) -> Result<Self> {
        entries.sort();
        for w in entries.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(CatError::structural(format!(
                    "duplicate table key {}",
                    w[0].0
                )));
            }
        }
        Ok(Element::Table(entries))
    }

    pub fn class(a: Element) -> Self {
        Element::Class(Box::new(a))
    }

    /// Projections for pair elements.
    pub fn fst(&self) -> Result<&Element> {
        match self {
            Element::Pair(a, _) => Ok(a),
            other => Err(CatError::structural(format!("not a pair: {other}"))),
        }
    }

    pub fn snd(&self) -> Result<&Element> {
        match self {
            Element::Pair(_, b) => Ok(b),
            other => Err(CatError::structural(format!("not a pair: {other}"))),
        }
    }

    pub fn as_subset(&self) -> Result<&[Element]> {
        match self {
            Element::Subset(items) => Ok(items),
            other => Err(CatError::structural(format!("not a subset: {other}"))),
        }
    }

    pub fn as_table(&self) -> Result<&[(Element, Element)]> {
        match self {
            Element::Table(entries) => Ok(entries),
            other => Err(CatError::structural(format!("not a table: {other}"))),
        }
    }

    pub fn class_rep(&self) -> Result<&Element> {
        match self {
            Element::Class(a) => Ok(a),
            other => Err(CatError::structural(format!("not a class: {other}"))),
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Atom(s) => write!(f, "{s}"),
            Element::Pair(a, b) => write!(f, "({a},{b})"),
            Element::Left(a) => write!(f, "inl({a})"),
            Element::Right(a) => write!(f, "inr({a})"),
            Element::Unit => write!(f, "*"),
            Element::Subset(items) => {
                write!(f, "{{")?;
                for (i, e) in items.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{e}")?;
                }
                write!(f, "}}")
            }
            Element::Table(entries) => {
                write!(f, "[")?;
                for (i, (k, v)) in entries.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{k}:{v}")?;
                }
                write!(f, "]")
            }
            Element::Class(a) => write!(f, "cls({a})"),
        }
    }
}

/// Parses the canonical textual form produced by `Display`. Atom labels are
/// restricted to `[A-Za-z0-9_'-]` so the grammar stays unambiguous.
pub fn parse_element(input: &str) -> Result<Element> {
    let mut p = Parser {
        src: input.as_bytes(),
        pos: 0,
    };
    let e = p.element()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(CatError::structural(format!(
            "trailing input at byte {} in element {:?}",
            p.pos, input
        )));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> Result<()> {
        match self.peek() {
            Some(c) if c == b => {
                self.pos += 1;
                Ok(())
            }
            other => Err(CatError::structural(format!(
                "expected {:?} at byte {}, found {:?}",
                b as char, self.pos, other.map(|c| c as char)
            ))),
        }
    }

    fn ident(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() {
            let c = self.src[self.pos];
            if c.is_ascii_alphanumeric() || c == b'_' || c == b'\'' || c == b'-' {
                self.pos += 1;
            } else {
                break;
            }
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn element(&mut self) -> Result<Element> {
        match self.peek() {
            Some(b'*') => {
                self.pos += 1;
                Ok(Element::Unit)
            }
            Some(b'(') => {
                self.eat(b'(')?;
                let a = self.element()?;
                self.eat(b',')?;
                let b = self.element()?;
                self.eat(b')')?;
                Ok(Element::pair(a, b))
            }
            Some(b'{') => {
                self.eat(b'{')?;
                let mut items = Vec::new();
                if self.peek() == Some(b'}') {
                    self.pos += 1;
                    return Ok(Element::Subset(items));
                }
                loop {
                    items.push(self.element()?);
                    match self.peek() {
                        Some(b',') => self.pos += 1,
                        Some(b'}') => {
                            self.pos += 1;
                            break;
                        }
                        other => {
                            return Err(CatError::structural(format!(
                                "expected ',' or '}}', found {:?}",
                                other.map(|c| c as char)
                            )))
                        }
                    }
                }
                Ok(Element::subset(items))
            }
            Some(b'[') => {
                self.eat(b'[')?;
                let mut entries = Vec::new();
                if self.peek() == Some(b']') {
                    self.pos += 1;
                    return Element::table(entries);
                }
                loop {
                    let k = self.element()?;
                    self.eat(b':')?;
                    let v = self.element()?;
                    entries.push((k, v));
                    match self.peek() {
                        Some(b',') => self.pos += 1,
                        Some(b']') => {
                            self.pos += 1;
                            break;
                        }
                        other => {
                            return Err(CatError::structural(format!(
                                "expected ',' or ']', found {:?}",
                                other.map(|c| c as char)
                            )))
                        }
                    }
                }
                Element::table(entries)
            }
            Some(_) => {
                let name = self.ident();
                if name.is_empty() {
                    return Err(CatError::structural(format!(
                        "cannot parse element at byte {}",
                        self.pos
                    )));
                }
                // inl/inr/cls followed by '(' are constructors, otherwise atoms.
                if self.peek() == Some(b'(') {
                    match name.as_str() {
                        "inl" => {
                            self.eat(b'(')?;
                            let a = self.element()?;
                            self.eat(b')')?;
                            return Ok(Element::left(a));
                        }
                        "inr" => {
                            self.eat(b'(')?;
                            let a = self.element()?;
                            self.eat(b')')?;
                            return Ok(Element::right(a));
                        }
                        "cls" => {
                            self.eat(b'(')?;
                            let a = self.element()?;
                            self.eat(b')')?;
                            return Ok(Element::class(a));
                        }
                        _ => {}
                    }
                }
                Ok(Element::Atom(name))
            }
            None => Err(CatError::structural("unexpected end of element input")),
        }
    }
}
