//! Named graphs, induced containment and class membership tests.
//!
//! Pattern names follow the grammar
//!
//! ```text
//! ATOM := P<r> | C<r> | K<r> | K1,<r> | S<h>,<i>,<j> | bull | X<k>
//! TERM := [<mult>]ATOM
//! NAME := TERM(+TERM)*
//! ```
//!
//! with an optional `co-` prefix (also `co-(NAME)`) that complements the
//! whole disjoint union. Terms are laid out left to right, so `2P1+P3` has
//! isolated vertices 0 and 1 followed by the path `2 - 3 - 4`.

mod class_s;
mod induced;
mod self_comp;

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::graph::{complete, cycle, path, star, Graph};

pub use class_s::{class_s_graphs, is_in_s, lemma_useful_check, subdivided_claw, UsefulReport};
pub use induced::{contains_induced, induced_embedding, is_free, is_induced_subgraph};
pub use self_comp::{
    complementing_permutations, enumerate_self_complementary, is_self_complementary,
    MAX_SELF_COMP_N,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Atom {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// `K_{1,r}`.
    Star(usize),
    /// `S_{h,i,j}` with `1 <= h <= i <= j`.
    Claw(usize, usize, usize),
    Bull,
    /// One of the ten self-complementary graphs on eight vertices.
    X(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Pattern {
    pub terms: Vec<(usize, Atom)>,
    pub complemented: bool,
}

impl Atom {
    fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidPattern(m));
        match *self {
            Atom::Path(0) | Atom::Complete(0) => bad(format!("{self} needs r >= 1")),
            Atom::Cycle(r) if r < 3 => bad(format!("{self} needs r >= 3")),
            Atom::Star(0) => bad(format!("{self} needs r >= 1")),
            Atom::Claw(h, i, j) if !(1 <= h && h <= i && i <= j) => {
                bad(format!("{self} needs 1 <= h <= i <= j"))
            }
            Atom::X(k) if !(1..=10).contains(&k) => bad(format!("{self} needs 1 <= k <= 10")),
            _ => Ok(()),
        }
    }

    pub fn instantiate(&self) -> Result<Graph> {
        self.validate()?;
        Ok(match *self {
            Atom::Path(r) => path(r),
            Atom::Cycle(r) => cycle(r),
            Atom::Complete(r) => complete(r),
            Atom::Star(r) => star(r),
            Atom::Claw(h, i, j) => subdivided_claw(h, i, j),
            Atom::Bull => bull(),
            Atom::X(k) => x_graphs()[k - 1].clone(),
        })
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Path(r) => write!(f, "P{r}"),
            Atom::Cycle(r) => write!(f, "C{r}"),
            Atom::Complete(r) => write!(f, "K{r}"),
            Atom::Star(r) => write!(f, "K1,{r}"),
            Atom::Claw(h, i, j) => write!(f, "S{h},{i},{j}"),
            Atom::Bull => write!(f, "bull"),
            Atom::X(k) => write!(f, "X{k}"),
        }
    }
}

impl Pattern {
    pub fn instantiate(&self) -> Result<Graph> {
        let mut g = Graph::empty(0);
        for &(mult, atom) in &self.terms {
            if mult == 0 {
                return Err(Error::InvalidPattern("multiplier 0".into()));
            }
            let a = atom.instantiate()?;
            for _ in 0..mult {
                g = g.disjoint_union(&a);
            }
        }
        Ok(if self.complemented { g.complement() } else { g })
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.complemented {
            write!(f, "co-")?;
        }
        for (i, (mult, atom)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            if *mult != 1 {
                write!(f, "{mult}")?;
            }
            write!(f, "{atom}")?;
        }
        Ok(())
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(name: &str) -> Result<Pattern> {
        let unknown = || Error::UnknownPattern(name.to_string());
        let (complemented, body) = match name.strip_prefix("co-") {
            Some(rest) => {
                let rest = match rest.strip_prefix('(') {
                    Some(inner) => inner.strip_suffix(')').ok_or_else(unknown)?,
                    None => rest,
                };
                (true, rest)
            }
            None => (false, name),
        };
        if body.is_empty() {
            return Err(unknown());
        }
        let terms = body
            .split('+')
            .map(|t| parse_term(t).ok_or_else(unknown))
            .collect::<Result<Vec<_>>>()?;
        let p = Pattern { terms, complemented };
        for (_, atom) in &p.terms {
            atom.validate()?;
        }
        Ok(p)
    }
}

fn parse_term(t: &str) -> Option<(usize, Atom)> {
    let split = t.find(|c: char| !c.is_ascii_digit())?;
    let mult = if split == 0 { 1 } else { t[..split].parse().ok()? };
    Some((mult, parse_atom(&t[split..])?))
}

fn parse_atom(a: &str) -> Option<Atom> {
    if a == "bull" {
        return Some(Atom::Bull);
    }
    let head = a.chars().next()?;
    let rest = &a[head.len_utf8()..];
    let nums: Vec<usize> = rest
        .split(',')
        .map(|s| {
            (!s.is_empty() && s.bytes().all(|b| b.is_ascii_digit()))
                .then(|| s.parse().ok())
                .flatten()
        })
        .collect::<Option<_>>()?;
    match (head, nums.as_slice()) {
        ('P', &[r]) => Some(Atom::Path(r)),
        ('C', &[r]) => Some(Atom::Cycle(r)),
        ('K', &[r]) => Some(Atom::Complete(r)),
        ('K', &[1, r]) => Some(Atom::Star(r)),
        ('S', &[h, i, j]) => Some(Atom::Claw(h, i, j)),
        ('X', &[k]) => Some(Atom::X(k)),
        _ => None,
    }
}

/// Parses and instantiates a pattern name.
pub fn named(name: &str) -> Result<Graph> {
    name.parse::<Pattern>()?.instantiate()
}

/// Instantiates a name known to be valid.
pub(crate) fn known(name: &str) -> Graph {
    named(name).unwrap_or_else(|e| panic!("built-in pattern {name}: {e}"))
}

/// The bull: triangle `0 1 3` with horns `2` on `1` and `4` on `3`.
pub fn bull() -> Graph {
    Graph::new(5, &[(0, 1), (0, 3), (1, 2), (3, 4), (1, 3)]).unwrap()
}

const X_FIXTURE: &str = include_str!("../../fixtures/self_complementary_8.txt");

/// `X1..X10` in order, read from the fixture with vertices shifted to `0..8`.
pub fn x_graphs() -> &'static [Graph] {
    static CELL: OnceLock<Vec<Graph>> = OnceLock::new();
    CELL.get_or_init(|| parse_x_fixture(X_FIXTURE).expect("fixture is well formed"))
}

fn parse_x_fixture(text: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for line in text.lines().map(str::trim) {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (label, edges) = line
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("fixture line `{line}`")))?;
        if label.trim() != format!("X{}", out.len() + 1) {
            return Err(Error::Parse(format!("fixture label `{label}` out of order")));
        }
        let mut pairs = Vec::new();
        for e in edges.split_whitespace() {
            let (a, b) = e
                .split_once('-')
                .ok_or_else(|| Error::Parse(format!("fixture edge `{e}`")))?;
            let parse = |s: &str| {
                s.parse::<usize>()
                    .ok()
                    .filter(|&v| (1..=8).contains(&v))
                    .ok_or_else(|| Error::Parse(format!("fixture vertex `{s}`")))
            };
            pairs.push((parse(a)? - 1, parse(b)? - 1));
        }
        out.push(Graph::new(8, &pairs)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{canonical_form, is_isomorphic};

    #[test]
    fn grammar_roundtrip() {
        for name in ["P4", "2P1+P3", "K1,3+3P1", "co-2P1+P3", "S1,2,3", "bull", "X7", "C5", "K3"] {
            let p: Pattern = name.parse().unwrap();
            assert_eq!(p.to_string(), name);
        }
        let p: Pattern = "co-(P1+P3)".parse().unwrap();
        assert_eq!(p.to_string(), "co-P1+P3");
        assert_eq!(named("1P4").unwrap(), named("P4").unwrap());
    }

    #[test]
    fn grammar_rejects() {
        for name in ["", "Q3", "P", "2", "P1+", "co-", "K1,", "S1,2", "co-(P4", "P-1", "+P1"] {
            assert!(matches!(name.parse::<Pattern>(), Err(Error::UnknownPattern(_))), "{name}");
        }
        for name in ["C2", "P0", "K0", "S2,1,1", "S0,1,1", "X11", "X0", "K1,0"] {
            assert!(matches!(name.parse::<Pattern>(), Err(Error::InvalidPattern(_))), "{name}");
        }
        assert!(named("0P1").is_err());
    }

    #[test]
    fn instantiation_examples() {
        assert!(is_isomorphic(&named("S1,1,1").unwrap(), &named("K1,3").unwrap()));
        let b = named("bull").unwrap();
        assert_eq!(b.edge_count(), 5);
        let mut d = b.degree_sequence();
        d.sort();
        assert_eq!(d, vec![1, 1, 2, 3, 3]);
        let g = named("2P1+P3").unwrap();
        assert_eq!((g.n(), g.edge_count()), (5, 2));
        assert_eq!(g.edges(), vec![(2, 3), (3, 4)]);
        assert_eq!(named("co-2P1+P3").unwrap(), g.complement());
        assert_eq!(named("5P1").unwrap(), Graph::empty(5));
    }

    #[test]
    fn x_catalogue_transcription() {
        let xs = x_graphs();
        assert_eq!(xs.len(), 10);
        for (k, x) in xs.iter().enumerate() {
            assert_eq!(x.edge_count(), 14, "X{}", k + 1);
            assert!(is_isomorphic(x, &x.complement()), "X{} not self-complementary", k + 1);
        }
        let forms: std::collections::HashSet<_> = xs.iter().map(canonical_form).collect();
        assert_eq!(forms.len(), 10);
    }
}
