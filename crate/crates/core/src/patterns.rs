//! Named forbidden graphs and parameterised families.
//!
//! A pattern id is a `+`-separated disjoint union of terms, each an optional
//! multiplicity followed by a base shape: `co-gem`, `paw+P1`, `P3+2P2`,
//! `K3+P1`, `4P1`, `antihole7`, `K_5`, `C_7`. The order-four graphs use the
//! fixed labellings of the standard order-four table.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, GraphError, MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("unknown pattern name `{0}`")]
    Unknown(String),
    #[error("invalid parameter in `{name}`: {reason}")]
    InvalidParam { name: String, reason: &'static str },
    #[error("pattern `{0}` is larger than {max} vertices", max = MAX_ORDER)]
    TooLarge(String),
}

/// Base shapes a term can name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Shape {
    CoGem,
    Gem,
    Paw,
    Claw,
    Diamond,
    Bull,
    House,
    Path(usize),
    Complete(usize),
    Cycle(usize),
    Antihole(usize),
}

impl Shape {
    fn order(self) -> usize {
        match self {
            Shape::CoGem | Shape::Gem | Shape::Bull | Shape::House => 5,
            Shape::Paw | Shape::Claw | Shape::Diamond => 4,
            Shape::Path(n) | Shape::Complete(n) | Shape::Cycle(n) | Shape::Antihole(n) => n,
        }
    }

    fn build(self) -> Graph {
        let e = |n, edges: &[(usize, usize)]| Graph::from_edges(n, edges).expect("fixed edge list");
        match self {
            Shape::CoGem => e(5, &[(0, 1), (1, 2), (2, 3)]),
            Shape::Gem => e(5, &[(0, 1), (1, 2), (2, 3)]).complement(),
            Shape::Paw => e(4, &[(0, 2), (0, 3), (1, 3), (2, 3)]),
            Shape::Claw => e(4, &[(0, 3), (1, 3), (2, 3)]),
            Shape::Diamond => e(4, &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
            Shape::Bull => e(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)]),
            Shape::House => e(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 4)]),
            Shape::Path(4) => e(4, &[(0, 2), (0, 3), (1, 3)]),
            Shape::Path(n) => Graph::path(n).expect("order checked"),
            Shape::Complete(n) => Graph::complete(n).expect("order checked"),
            Shape::Cycle(n) => Graph::cycle(n).expect("order checked"),
            Shape::Antihole(n) => Graph::cycle(n).expect("order checked").complement(),
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::CoGem => f.write_str("co-gem"),
            Shape::Gem => f.write_str("gem"),
            Shape::Paw => f.write_str("paw"),
            Shape::Claw => f.write_str("claw"),
            Shape::Diamond => f.write_str("diamond"),
            Shape::Bull => f.write_str("bull"),
            Shape::House => f.write_str("house"),
            Shape::Path(n) => write!(f, "P{n}"),
            Shape::Complete(n) => write!(f, "K{n}"),
            Shape::Cycle(n) => write!(f, "C{n}"),
            Shape::Antihole(n) => write!(f, "antihole{n}"),
        }
    }
}

/// A named pattern: a disjoint union of `(multiplicity, shape)` terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PatternId {
    terms: Vec<(usize, Shape)>,
}

impl PatternId {
    pub fn shape(shape: Shape) -> PatternId {
        PatternId {
            terms: vec![(1, shape)],
        }
    }

    /// `P3 + c·P2`.
    pub fn p3_plus_c_p2(c: usize) -> PatternId {
        let mut terms = vec![(1, Shape::Path(3))];
        if c > 0 {
            terms.push((c, Shape::Path(2)));
        }
        PatternId { terms }
    }

    /// `P3 + l·P1`.
    pub fn p3_plus_l_p1(l: usize) -> PatternId {
        let mut terms = vec![(1, Shape::Path(3))];
        if l > 0 {
            terms.push((l, Shape::Path(1)));
        }
        PatternId { terms }
    }

    pub fn terms(&self) -> &[(usize, Shape)] {
        &self.terms
    }

    pub fn order(&self) -> usize {
        self.terms.iter().map(|&(m, s)| m * s.order()).sum()
    }

    /// Builds the graph. Terms are laid out left to right.
    pub fn realize(&self) -> Result<Graph, PatternError> {
        if self.order() > MAX_ORDER {
            return Err(PatternError::TooLarge(self.to_string()));
        }
        if let Some(g) = order_four_table()
            .iter()
            .find(|(name, _)| *name == self.to_string())
            .map(|(_, edges)| Graph::from_edges(4, edges).expect("fixed edge list"))
        {
            return Ok(g);
        }
        let mut g = Graph::empty(0).expect("order 0");
        for &(m, s) in &self.terms {
            let part = s.build();
            for _ in 0..m {
                g = g
                    .disjoint_union(&part)
                    .map_err(|_: GraphError| PatternError::TooLarge(self.to_string()))?;
            }
        }
        Ok(g)
    }
}

impl fmt::Display for PatternId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (m, s)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            if *m != 1 {
                write!(f, "{m}")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for PatternId {
    type Err = PatternError;

    fn from_str(s: &str) -> Result<PatternId, PatternError> {
        let s = s.trim();
        if s.is_empty() {
            return Err(PatternError::Unknown(s.to_string()));
        }
        let terms = s
            .split('+')
            .map(|t| parse_term(t.trim(), s))
            .collect::<Result<Vec<_>, _>>()?;
        let id = PatternId { terms };
        if id.order() > MAX_ORDER {
            return Err(PatternError::TooLarge(s.to_string()));
        }
        Ok(id)
    }
}

fn parse_term(term: &str, whole: &str) -> Result<(usize, Shape), PatternError> {
    let digits = term.bytes().take_while(u8::is_ascii_digit).count();
    let (mult, rest) = if digits > 0 {
        let m: usize = term[..digits].parse().map_err(|_| PatternError::InvalidParam {
            name: whole.to_string(),
            reason: "multiplicity does not fit",
        })?;
        if m == 0 {
            return Err(PatternError::InvalidParam {
                name: whole.to_string(),
                reason: "multiplicity must be positive",
            });
        }
        (m, &term[digits..])
    } else {
        (1, term)
    };
    let lower = rest.to_ascii_lowercase();
    let named = match lower.as_str() {
        "co-gem" | "cogem" => Some(Shape::CoGem),
        "gem" => Some(Shape::Gem),
        "paw" => Some(Shape::Paw),
        "claw" => Some(Shape::Claw),
        "diamond" => Some(Shape::Diamond),
        "bull" => Some(Shape::Bull),
        "house" => Some(Shape::House),
        _ => None,
    };
    if let Some(shape) = named {
        return Ok((mult, shape));
    }
    let invalid = |reason| PatternError::InvalidParam {
        name: whole.to_string(),
        reason,
    };
    let (kind, num) = if let Some(n) = lower.strip_prefix("antihole") {
        ("antihole", n)
    } else if let Some(n) = lower.strip_prefix('p') {
        ("P", n)
    } else if let Some(n) = lower.strip_prefix('k') {
        ("K", n)
    } else if let Some(n) = lower.strip_prefix('c') {
        ("C", n)
    } else {
        return Err(PatternError::Unknown(whole.to_string()));
    };
    let num = num.strip_prefix('_').unwrap_or(num);
    if num.is_empty() || !num.bytes().all(|b| b.is_ascii_digit()) {
        return Err(PatternError::Unknown(whole.to_string()));
    }
    let n: usize = num.parse().map_err(|_| invalid("order does not fit"))?;
    if n > MAX_ORDER {
        return Err(PatternError::TooLarge(whole.to_string()));
    }
    let shape = match kind {
        "P" if n >= 1 => Shape::Path(n),
        "K" if n >= 1 => Shape::Complete(n),
        "C" if n >= 3 => Shape::Cycle(n),
        "antihole" if n >= 5 && n % 2 == 1 => Shape::Antihole(n),
        "C" => return Err(invalid("cycles need at least 3 vertices")),
        "antihole" => return Err(invalid("antiholes need odd order at least 5")),
        _ => return Err(invalid("order must be positive")),
    };
    Ok((mult, shape))
}

/// Parses and builds a pattern in one step.
pub fn realize(name: &str) -> Result<Graph, PatternError> {
    name.parse::<PatternId>()?.realize()
}

/// The eleven graphs of order four with their fixed edge lists.
fn order_four_table() -> &'static [(&'static str, &'static [(usize, usize)])] {
    &[
        ("4P1", &[]),
        ("P2+2P1", &[(0, 3)]),
        ("P3+P1", &[(0, 3), (1, 3)]),
        ("2P2", &[(0, 2), (1, 3)]),
        ("claw", &[(0, 3), (1, 3), (2, 3)]),
        ("P4", &[(0, 2), (0, 3), (1, 3)]),
        ("K3+P1", &[(0, 2), (0, 3), (2, 3)]),
        ("paw", &[(0, 2), (0, 3), (1, 3), (2, 3)]),
        ("C4", &[(0, 2), (0, 3), (1, 2), (1, 3)]),
        ("diamond", &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
        ("K4", &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
    ]
}

/// All eleven graphs of order four, in table order, with their names.
pub fn catalog_order4() -> Vec<(&'static str, Graph)> {
    order_four_table()
        .iter()
        .map(|(name, edges)| (*name, Graph::from_edges(4, edges).expect("fixed edge list")))
        .collect()
}

/// Complement of the cycle `C_n` for odd `n >= 5`.
pub fn antihole(n: usize) -> Result<Graph, PatternError> {
    if n < 5 || n.is_multiple_of(2) || n > MAX_ORDER {
        return Err(PatternError::InvalidParam {
            name: format!("antihole{n}"),
            reason: "antiholes need odd order between 5 and 63",
        });
    }
    Ok(Shape::Antihole(n).build())
}

/// Names listed by the `catalog` command.
pub fn catalog_names() -> Vec<&'static str> {
    let mut names = vec!["co-gem", "gem", "paw+P1", "bull", "house", "P5", "P3+2P1"];
    names.extend(order_four_table().iter().map(|(n, _)| *n));
    names
}
