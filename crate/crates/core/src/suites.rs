//! Verification suites, one per acceptance criterion. Each suite runs a
//! batch of checks and reports one item per group of inputs, sorted by key.
//!
//! Reports contain no timings, so a suite prints the same report every time.
//! Time limits are listed in [`SUITES`] for callers that measure them.

use std::fmt;
use std::time::Duration;

use rayon::prelude::*;

use crate::classifier::{classify_bigenic, classify_pair_complement, Status};
use crate::cliquewidth::{
    cliquewidth, cograph_expression, comp_anti_deletion, cw_via_primes, degree2_expression, find_mixed_partition,
    matching_comatching_deletion, victor_pipeline, VICTOR_WIDTH_BOUND,
};
use crate::error::{Error, Result};
use crate::generators::{
    freeness_report, subdivide_all, thm5_claims, thm5_graph, thm6_claims, thm6_graph, thm7_claims, thm7_graph, wall,
    VertexClass,
};
use crate::graph::io::to_graph6;
use crate::graph::{enumerate_graphs, enumerate_hereditary, Graph, VertexSet};
use crate::patterns::{
    bull, enumerate_self_complementary, is_free, is_induced_subgraph, known, lemma_useful_check, x_graphs,
};
use crate::structure::{
    all_split_partitions, bipartite_ramsey_check, clique_number, fixed_vertex, split_partition,
    unique_split_partition_check,
};

#[derive(Clone, Copy, Debug)]
pub struct SuiteInfo {
    pub name: &'static str,
    /// Acceptance criterion number.
    pub criterion: usize,
    /// Default size parameter, usually the largest vertex count.
    pub default_budget: Option<usize>,
    pub time_limit: Duration,
    pub about: &'static str,
}

const fn suite(
    name: &'static str,
    criterion: usize,
    default_budget: Option<usize>,
    secs: u64,
    about: &'static str,
) -> SuiteInfo {
    SuiteInfo { name, criterion, default_budget, time_limit: Duration::from_secs(secs), about }
}

pub const SUITES: &[SuiteInfo] = &[
    suite("exact-sanity", 1, Some(6), 1, "cw of sP1, Kn, P4, C5 by the exact solver"),
    suite("atmost-2", 2, Some(7), 60, "max degree 2 gives cw at most 4, constructively"),
    suite("p4-free", 3, Some(7), 60, "P4-free graphs have cw at most 2, constructively"),
    suite("complement", 4, Some(6), 300, "cw of the complement is at most twice cw"),
    suite("prime", 5, Some(6), 300, "cw via prime induced subgraphs equals cw"),
    suite("split-char", 6, Some(7), 60, "split iff (2P2, C4, C5)-free"),
    suite("ramsey", 7, None, 60, "bipartite Ramsey number Rb(2,2) = 5"),
    suite("self-comp-catalog", 8, Some(8), 60, "self-complementary graph counts"),
    suite("ramsey-for-self-comp", 9, Some(9), 60, "(C4, C5, K4)-free self-complementary graphs lie in the bull"),
    suite("self-comp-structure", 10, None, 60, "fixed vertices, split partitions and clique numbers"),
    suite("matching-comatching", 11, Some(8), 600, "one deletion per block gives a matching or co-matching"),
    suite("comp-anti", 12, Some(8), 600, "three deletions per side give complete or anti-complete"),
    suite("victor", 13, Some(9), 1800, "the reduction pipeline certifies bounded width"),
    suite("thm8", 14, Some(8), 1800, "largest cw of (2P1+P3, co-2P1+P3)-free graphs"),
    suite("thm5-7-freeness", 15, Some(3), 300, "the wall constructions avoid their claimed patterns"),
    suite("classifier", 16, Some(4), 300, "bigenic verdicts are decided, symmetric, complement-invariant"),
    suite("useful", 17, Some(10), 300, "class S graphs avoiding four patterns lie in four hosts"),
];

pub fn suite_info(name: &str) -> Result<&'static SuiteInfo> {
    SUITES.iter().find(|s| s.name == name).ok_or_else(|| Error::UnknownSuite(name.to_string()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Item {
    pub key: String,
    pub pass: bool,
    /// A counterexample for failures, a short count or value otherwise.
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub items: Vec<Item>,
    pub summary: String,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.pass)
    }
}

/// `ITEM <key> PASS|FAIL <detail>` lines, then `PASS|FAIL <summary>`.
impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = |p: bool| if p { "PASS" } else { "FAIL" };
        for i in &self.items {
            write!(f, "ITEM {} {}", i.key, word(i.pass))?;
            if !i.detail.is_empty() {
                write!(f, " {}", i.detail)?;
            }
            writeln!(f)?;
        }
        writeln!(f, "{} {}", word(self.passed()), self.summary)
    }
}

/// Runs suite `name` with size parameter `budget`, or its default.
pub fn run_suite(name: &str, budget: Option<usize>) -> Result<SuiteReport> {
    let info = suite_info(name)?;
    let b = budget.or(info.default_budget).unwrap_or(0);
    let (mut items, summary) = match info.criterion {
        1 => exact_sanity(b)?,
        2 => atmost_two(b)?,
        3 => p4_free(b)?,
        4 => complement(b)?,
        5 => prime(b)?,
        6 => split_char(b)?,
        7 => ramsey()?,
        8 => self_comp_catalog(b)?,
        9 => ramsey_for_self_comp(b)?,
        10 => self_comp_structure()?,
        11 => matching_comatching(b)?,
        12 => comp_anti(b)?,
        13 => victor(b)?,
        14 => thm8(b)?,
        15 => freeness(b)?,
        16 => classifier(b)?,
        17 => useful(b),
        _ => unreachable!("criterion numbers are 1 to 17"),
    };
    items.sort_by(|a, b| a.key.cmp(&b.key));
    Ok(SuiteReport { name: info.name, items, summary })
}

type Outcome = (Vec<Item>, String);

fn item(key: impl Into<String>, pass: bool, detail: impl Into<String>) -> Item {
    Item { key: key.into(), pass, detail: detail.into() }
}

/// Checks `ok` on every graph of every order `1..=max_n` that `keep`
/// accepts; one item per order. A failing item names the first failure in
/// enumeration order.
fn per_order<K, F>(max_n: usize, keep: K, ok: F) -> Result<(Vec<Item>, usize)>
where
    K: Fn(&Graph) -> bool + Sync + Copy,
    F: Fn(&Graph) -> Result<bool> + Sync,
{
    let mut items = Vec::new();
    let mut total = 0;
    for n in 1..=max_n {
        let gs = enumerate_hereditary(n, keep)?;
        total += gs.len();
        let bad = gs.par_iter().map(|g| ok(g).map(|r| (!r).then(|| to_graph6(g)))).collect::<Result<Vec<_>>>()?;
        let item = match bad.into_iter().flatten().next() {
            Some(w) => item(format!("n={n:02}"), false, w),
            None => item(format!("n={n:02}"), true, format!("{} graphs", gs.len())),
        };
        items.push(item);
    }
    Ok((items, total))
}

fn exact_sanity(max_s: usize) -> Result<Outcome> {
    let mut cases: Vec<(String, Graph, usize)> = vec![("P4".into(), known("P4"), 3), ("C5".into(), known("C5"), 3)];
    for s in 1..=max_s {
        cases.push((format!("{s}P1"), Graph::empty(s), 1));
        if s >= 2 {
            cases.push((format!("K{s}"), Graph::complete(s), 2));
        }
    }
    let mut items = Vec::new();
    for (key, g, want) in cases {
        let got = cliquewidth(&g)?;
        items.push(item(key, got == want, format!("cw={got}")));
    }
    let n = items.len();
    Ok((items, format!("{n} exact values")))
}

fn atmost_two(max_n: usize) -> Result<Outcome> {
    let (items, total) = per_order(
        max_n,
        |g| g.max_degree() <= 2,
        |g| {
            let cert = degree2_expression(g)?;
            Ok(cliquewidth(g)? <= 4 && cert.verify() && cert.graph() == g && cert.width() <= 4)
        },
    )?;
    Ok((items, format!("{total} graphs of max degree 2 have cw <= 4")))
}

fn p4_free(max_n: usize) -> Result<Outcome> {
    let (items, total) = per_order(
        max_n,
        |g| !is_induced_subgraph(&known("P4"), g),
        |g| {
            let cert = cograph_expression(g)?;
            Ok(cliquewidth(g)? <= 2 && cert.verify() && cert.graph() == g && cert.width() <= 2)
        },
    )?;
    Ok((items, format!("{total} P4-free graphs have cw <= 2")))
}

fn complement(max_n: usize) -> Result<Outcome> {
    let (items, total) =
        per_order(max_n, |_| true, |g| Ok(cliquewidth(&g.complement())? <= 2 * cliquewidth(g)?))?;
    Ok((items, format!("{total} graphs satisfy cw(co-G) <= 2 cw(G)")))
}

fn prime(max_n: usize) -> Result<Outcome> {
    let (items, total) = per_order(max_n, |_| true, |g| Ok(cw_via_primes(g)? == cliquewidth(g)?))?;
    Ok((items, format!("{total} graphs agree")))
}

fn split_char(max_n: usize) -> Result<Outcome> {
    let hs = [known("2P2"), known("C4"), known("C5")];
    let (items, _) = per_order(
        max_n,
        |_| true,
        |g| {
            let part = split_partition(g);
            Ok(part.as_ref().is_none_or(|p| p.is_valid(g)) && part.is_some() == is_free(g, &hs))
        },
    )?;
    let last = enumerate_graphs(max_n)?.len();
    Ok((items, format!("{last} graphs on {max_n} vertices")))
}

fn ramsey() -> Result<Outcome> {
    let four = bipartite_ramsey_check(2, 2, 4)?;
    let five = bipartite_ramsey_check(2, 2, 5)?;
    let rows = |c: &crate::structure::Colouring| {
        c.rows.iter().map(|r| format!("{r:0w$b}", w = c.n)).collect::<Vec<_>>().join(",")
    };
    let items = vec![
        match &four {
            Some(c) => item("K4,4", c.n == 4 && !c.has_monochromatic(2, 2), rows(c)),
            None => item("K4,4", false, "every colouring has a monochromatic K2,2"),
        },
        match &five {
            None => item("K5,5", true, "every colouring has a monochromatic K2,2"),
            Some(c) => item("K5,5", false, rows(c)),
        },
    ];
    Ok((items, "Rb(2,2)=5".into()))
}

fn self_comp_catalog(max_n: usize) -> Result<Outcome> {
    let expected = |n: usize| match n {
        1 | 4 => Some(1),
        5 => Some(2),
        8 => Some(10),
        2 | 3 | 6 | 7 => Some(0),
        _ => None,
    };
    let mut items = Vec::new();
    let mut counts = Vec::new();
    for n in 1..=max_n {
        let gs = enumerate_self_complementary(n)?;
        let sizes_ok = gs.iter().all(|g| 4 * g.edge_count() == n * (n - 1));
        let count_ok = expected(n).is_none_or(|e| e == gs.len());
        items.push(item(format!("n={n:02}"), sizes_ok && count_ok, format!("{} graphs", gs.len())));
        counts.push(gs.len().to_string());
    }
    Ok((items, format!("counts {}", counts.join(","))))
}

fn ramsey_for_self_comp(max_n: usize) -> Result<Outcome> {
    let hs = [known("C4"), known("C5"), known("K4")];
    let b = bull();
    let mut items = Vec::new();
    for n in 1..=max_n {
        let gs = enumerate_self_complementary(n)?;
        let free: Vec<&Graph> = gs.iter().filter(|g| is_free(g, &hs)).collect();
        let bad = free.iter().find(|g| !is_induced_subgraph(g, &b));
        items.push(match bad {
            Some(g) => item(format!("n={n:02}"), false, to_graph6(g)),
            None => item(format!("n={n:02}"), true, format!("{} free of {}", free.len(), gs.len())),
        });
    }
    Ok((items, "free self-complementary graphs are induced in the bull".into()))
}

fn self_comp_structure() -> Result<Outcome> {
    let mut items = Vec::new();
    for n in [5, 9] {
        let gs = enumerate_self_complementary(n)?;
        let bad = gs.iter().find(|g| fixed_vertex(g).is_err());
        items.push(match bad {
            Some(g) => item(format!("fixed-vertex n={n}"), false, to_graph6(g)),
            None => item(format!("fixed-vertex n={n}"), true, format!("{} graphs", gs.len())),
        });
    }
    for (k, x) in x_graphs()[..3].iter().enumerate() {
        let r = unique_split_partition_check(x)?;
        items.push(item(format!("split-unique X{}", k + 1), r.holds(), format!("{} partitions", r.partitions.len())));
    }
    let split: Vec<Graph> =
        enumerate_self_complementary(8)?.into_iter().filter(|g| split_partition(g).is_some()).collect();
    let bad = split.iter().find(|g| clique_number(g) != 4);
    items.push(match bad {
        Some(g) => item("split-omega n=8", false, to_graph6(g)),
        None => item("split-omega n=8", true, format!("{} split graphs", split.len())),
    });
    Ok((items, "self-complementary structure".into()))
}

fn free_of_pair(g: &Graph) -> bool {
    is_free(g, &[known("2P1+P3"), known("co-2P1+P3")])
}

/// Bipartitions `(x, y)` of `g` passing `accept`, with `x` a bit mask.
fn bipartitions(g: &Graph, ordered: bool, accept: impl Fn(&VertexSet, &VertexSet) -> bool) -> Vec<(VertexSet, VertexSet)> {
    let n = g.n();
    let full = VertexSet::full(n);
    (0..1u64 << n)
        .filter(|m| ordered || m & 1 == 1)
        .map(|m| {
            let x = VertexSet::from_mask(n, m);
            let y = full.difference(&x);
            (x, y)
        })
        .filter(|(x, y)| accept(x, y))
        .collect()
}

fn matching_comatching(max_n: usize) -> Result<Outcome> {
    let (items, total) = per_order(max_n, free_of_pair, |g| {
        let uniform = |s: &VertexSet| g.is_clique(s) || g.is_independent(s);
        Ok(bipartitions(g, false, |x, y| uniform(x) && uniform(y))
            .iter()
            .all(|(x, y)| matching_comatching_deletion(g, x, y).is_some()))
    })?;
    Ok((items, format!("{total} free graphs checked")))
}

fn comp_anti(max_n: usize) -> Result<Outcome> {
    let (items, total) = per_order(max_n, free_of_pair, |g| {
        Ok(bipartitions(g, true, |x, y| g.is_clique(x) && g.is_independent(y))
            .iter()
            .all(|(x, y)| comp_anti_deletion(g, x, y).is_some()))
    })?;
    Ok((items, format!("{total} free graphs checked")))
}

fn victor(max_n: usize) -> Result<Outcome> {
    let mut items = Vec::new();
    let mut widest = 0;
    let mut certified = 0;
    for n in 1..=max_n {
        let gs = enumerate_hereditary(n, free_of_pair)?;
        let outcomes = gs
            .par_iter()
            .map(|g| -> Result<Option<(bool, usize)>> {
                let Some(part) = find_mixed_partition(g, 3, 3)? else { return Ok(None) };
                let out = victor_pipeline(g, &part)?;
                let c = &out.certificate;
                let w = c.width();
                let ok = c.verify() && c.graph() == g && w as u128 <= out.bound && w as u128 <= VICTOR_WIDTH_BOUND;
                Ok(Some((ok, w)))
            })
            .collect::<Result<Vec<_>>>()?;
        let bad = gs.iter().zip(&outcomes).find(|(_, o)| matches!(o, Some((false, _))));
        let done: Vec<usize> = outcomes.iter().flatten().map(|&(_, w)| w).collect();
        let max_w = done.iter().copied().max().unwrap_or(0);
        widest = widest.max(max_w);
        certified += done.len();
        items.push(match bad {
            Some((g, _)) => item(format!("n={n:02}"), false, to_graph6(g)),
            None => item(format!("n={n:02}"), true, format!("{} certified max width {max_w}", done.len())),
        });
    }
    Ok((items, format!("{certified} certificates, widest {widest}, bound 49*2^66-1")))
}

fn thm8(max_n: usize) -> Result<Outcome> {
    let mut items = Vec::new();
    let mut best = 0;
    for n in 1..=max_n {
        let gs = enumerate_hereditary(n, free_of_pair)?;
        let ws = gs.par_iter().map(cliquewidth).collect::<Result<Vec<_>>>()?;
        let m = ws.into_iter().max().unwrap_or(0);
        best = best.max(m);
        items.push(item(format!("n={n:02}"), m as u128 <= VICTOR_WIDTH_BOUND, format!("max cw {m}")));
    }
    Ok((items, format!("max cw {best}")))
}

fn freeness(max_h: usize) -> Result<Outcome> {
    let mut items = Vec::new();
    for h in 2..=max_h {
        let runs = [("thm5", thm5_graph(h)?.0, thm5_claims()), ("thm6", thm6_graph(h)?.0, thm6_claims()), (
            "thm7",
            thm7_graph(h)?.0,
            thm7_claims(),
        )];
        for (tag, g, claims) in runs {
            for (p, w) in freeness_report(&g, &claims)?.items {
                let detail = w.map(|w| w.to_string()).unwrap_or_default();
                items.push(item(format!("{tag} h={h} {p}"), detail.is_empty(), detail));
            }
        }
        let girth = subdivide_all(&wall(h)?.graph, 1).graph.girth();
        items.push(item(format!("thm6 h={h} girth"), girth == Some(12), format!("{girth:?}")));
    }
    let (g, t) = thm7_graph(2)?;
    let parts = all_split_partitions(&g);
    let unique = parts.len() == 1 && parts[0].clique == t.members(VertexClass::A).to_vec();
    items.push(item("thm7 h=2 split-unique", unique, format!("{} partitions", parts.len())));
    Ok((items, format!("heights 2 to {max_h}")))
}

fn classifier(max_n: usize) -> Result<Outcome> {
    let gs: Vec<Graph> = (1..=max_n).map(enumerate_graphs).collect::<Result<Vec<_>>>()?.concat();
    let mut pairs = Vec::new();
    for (i, a) in gs.iter().enumerate() {
        for b in &gs[i..] {
            pairs.push((a, b));
        }
    }
    let check = |a: &Graph, b: &Graph| -> Result<bool> {
        let v = classify_bigenic(a, b)?;
        Ok(v.status != Status::Open
            && classify_bigenic(b, a)? == v
            && classify_bigenic(&a.complement(), &b.complement())? == v)
    };
    let bad = pairs
        .par_iter()
        .map(|&(a, b)| check(a, b).map(|ok| (!ok).then(|| format!("{} {}", to_graph6(a), to_graph6(b)))))
        .collect::<Result<Vec<_>>>()?;
    let mut items = vec![match bad.into_iter().flatten().next() {
        Some(w) => item("bigenic", false, w),
        None => item("bigenic", true, format!("{} pairs", pairs.len())),
    }];
    let hs: Vec<Graph> = (1..=max_n + 1).map(enumerate_graphs).collect::<Result<Vec<_>>>()?.concat();
    let bad = hs
        .par_iter()
        .map(|h| {
            let agree = classify_bigenic(h, &h.complement())?.status == classify_pair_complement(h).status;
            Ok((!agree).then(|| to_graph6(h)))
        })
        .collect::<Result<Vec<_>>>()?;
    items.push(match bad.into_iter().flatten().next() {
        Some(w) => item("pair-complement", false, w),
        None => item("pair-complement", true, format!("{} graphs", hs.len())),
    });
    Ok((items, format!("pairs up to {max_n} vertices")))
}

fn useful(max_n: usize) -> Outcome {
    let r = lemma_useful_check(max_n);
    let detail = match &r.counterexample {
        Some((p, free, listed)) => format!("{p} free={free} listed={listed}"),
        None => format!("{} graphs", r.checked),
    };
    (vec![item(format!("class-S n<={max_n}"), r.passed(), detail)], format!("{} class S graphs", r.checked))
}
