use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// An expression over the four clique-width operations. Labels are positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum KExpression {
    /// A single vertex with the given label.
    Vertex(u32),
    Union(Box<KExpression>, Box<KExpression>),
    /// Adds every edge between an `i`-labelled and a `j`-labelled vertex.
    Join(u32, u32, Box<KExpression>),
    /// Relabels every `i`-labelled vertex to `j`.
    Rename(u32, u32, Box<KExpression>),
}

/// A graph whose vertex `v` carries `labels[v]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelledGraph {
    pub graph: Graph,
    pub labels: Vec<u32>,
}

impl KExpression {
    pub fn vertex(label: u32) -> Self {
        KExpression::Vertex(label)
    }

    pub fn union(a: KExpression, b: KExpression) -> Self {
        KExpression::Union(Box::new(a), Box::new(b))
    }

    pub fn join(i: u32, j: u32, e: KExpression) -> Self {
        KExpression::Join(i, j, Box::new(e))
    }

    pub fn rename(i: u32, j: u32, e: KExpression) -> Self {
        KExpression::Rename(i, j, Box::new(e))
    }

    /// Number of `Vertex` leaves.
    pub fn vertex_count(&self) -> usize {
        match self {
            KExpression::Vertex(_) => 1,
            KExpression::Union(a, b) => a.vertex_count() + b.vertex_count(),
            KExpression::Join(_, _, e) | KExpression::Rename(_, _, e) => e.vertex_count(),
        }
    }

    /// Every label mentioned anywhere in the expression.
    pub fn labels(&self) -> BTreeSet<u32> {
        let mut out = BTreeSet::new();
        self.collect_labels(&mut out);
        out
    }

    fn collect_labels(&self, out: &mut BTreeSet<u32>) {
        match self {
            KExpression::Vertex(l) => {
                out.insert(*l);
            }
            KExpression::Union(a, b) => {
                a.collect_labels(out);
                b.collect_labels(out);
            }
            KExpression::Join(i, j, e) | KExpression::Rename(i, j, e) => {
                out.insert(*i);
                out.insert(*j);
                e.collect_labels(out);
            }
        }
    }

    fn check(&self) -> Result<()> {
        match self {
            KExpression::Vertex(0) => Err(Error::Expression("label 0".into())),
            KExpression::Vertex(_) => Ok(()),
            KExpression::Union(a, b) => {
                a.check()?;
                b.check()
            }
            KExpression::Join(i, j, e) | KExpression::Rename(i, j, e) => {
                if *i == 0 || *j == 0 {
                    return Err(Error::Expression("label 0".into()));
                }
                if matches!(self, KExpression::Join(..)) && i == j {
                    return Err(Error::JoinSameLabel(*i));
                }
                e.check()
            }
        }
    }
}

/// The number of distinct labels mentioned in `e`.
pub fn width(e: &KExpression) -> usize {
    e.labels().len()
}

/// Evaluates `e`. Vertices are numbered by the left-to-right order of the
/// `Vertex` leaves.
pub fn evaluate(e: &KExpression) -> Result<LabelledGraph> {
    e.check()?;
    let n = e.vertex_count();
    let mut graph = Graph::empty(n);
    let mut labels = vec![0u32; n];
    let mut next = 0;
    let members = eval(e, &mut graph, &mut labels, &mut next);
    debug_assert_eq!(members.len(), n);
    Ok(LabelledGraph { graph, labels })
}

/// Returns the vertices created by `e`; their current labels live in `labels`.
fn eval(e: &KExpression, g: &mut Graph, labels: &mut [u32], next: &mut usize) -> Vec<usize> {
    match e {
        KExpression::Vertex(l) => {
            let v = *next;
            *next += 1;
            labels[v] = *l;
            vec![v]
        }
        KExpression::Union(a, b) => {
            let mut vs = eval(a, g, labels, next);
            vs.extend(eval(b, g, labels, next));
            vs
        }
        KExpression::Join(i, j, inner) => {
            let vs = eval(inner, g, labels, next);
            let is: Vec<usize> = vs.iter().copied().filter(|&v| labels[v] == *i).collect();
            let js: Vec<usize> = vs.iter().copied().filter(|&v| labels[v] == *j).collect();
            for &u in &is {
                for &v in &js {
                    g.add_edge_unchecked(u, v);
                }
            }
            vs
        }
        KExpression::Rename(i, j, inner) => {
            let vs = eval(inner, g, labels, next);
            for &v in &vs {
                if labels[v] == *i {
                    labels[v] = *j;
                }
            }
            vs
        }
    }
}

impl fmt::Display for KExpression {
    /// `(v l)`, `(u e1 e2)`, `(j i k e)`, `(r i k e)` with single spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KExpression::Vertex(l) => write!(f, "(v {l})"),
            KExpression::Union(a, b) => write!(f, "(u {a} {b})"),
            KExpression::Join(i, j, e) => write!(f, "(j {i} {j} {e})"),
            KExpression::Rename(i, j, e) => write!(f, "(r {i} {j} {e})"),
        }
    }
}

/// The text form followed by a line feed.
pub fn to_text(e: &KExpression) -> String {
    format!("{e}\n")
}

impl FromStr for KExpression {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let tokens = tokenize(s)?;
        let mut pos = 0;
        let e = parse(&tokens, &mut pos)?;
        if pos != tokens.len() {
            return Err(Error::Expression("trailing input".into()));
        }
        e.check()?;
        Ok(e)
    }
}

#[derive(Debug, PartialEq)]
enum Token<'a> {
    Open,
    Close,
    Word(&'a str),
}

fn tokenize(s: &str) -> Result<Vec<Token<'_>>> {
    let mut out = Vec::new();
    let bytes = s.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        match bytes[i] {
            b'(' => {
                out.push(Token::Open);
                i += 1;
            }
            b')' => {
                out.push(Token::Close);
                i += 1;
            }
            b if b.is_ascii_whitespace() => i += 1,
            b if b.is_ascii_alphanumeric() => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                out.push(Token::Word(&s[start..i]));
            }
            b => return Err(Error::Expression(format!("unexpected byte {:?}", b as char))),
        }
    }
    Ok(out)
}

fn parse(tokens: &[Token<'_>], pos: &mut usize) -> Result<KExpression> {
    let bad = |m: &str| Error::Expression(m.to_string());
    let next = |pos: &mut usize| -> Result<&Token<'_>> {
        let t = tokens.get(*pos).ok_or_else(|| bad("unexpected end"))?;
        *pos += 1;
        Ok(t)
    };
    if next(pos)? != &Token::Open {
        return Err(bad("expected `(`"));
    }
    let Token::Word(op) = next(pos)? else {
        return Err(bad("expected an operator"));
    };
    let label = |pos: &mut usize| -> Result<u32> {
        match tokens.get(*pos) {
            Some(Token::Word(w)) if w.bytes().all(|b| b.is_ascii_digit()) => {
                *pos += 1;
                w.parse().map_err(|_| bad("label out of range"))
            }
            _ => Err(bad("expected a label")),
        }
    };
    let e = match *op {
        "v" => KExpression::Vertex(label(pos)?),
        "u" => {
            let a = parse(tokens, pos)?;
            let b = parse(tokens, pos)?;
            KExpression::union(a, b)
        }
        "j" | "r" => {
            let i = label(pos)?;
            let j = label(pos)?;
            let inner = parse(tokens, pos)?;
            if *op == "j" {
                KExpression::join(i, j, inner)
            } else {
                KExpression::rename(i, j, inner)
            }
        }
        other => return Err(Error::Expression(format!("unknown operator `{other}`"))),
    };
    if tokens.get(*pos) != Some(&Token::Close) {
        return Err(bad("expected `)`"));
    }
    *pos += 1;
    Ok(e)
}
