//! Command-line front end for the cwlab library.
//!
//! Exit codes: 0 on success, PASS or a bounded verdict; 1 on FAIL or an
//! unbounded or open verdict; 2 on usage or input errors.

use std::fs;
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use cwlab::classifier::{
    classify_bigenic, classify_pair_with_family, classify_single, Status, Verdict,
};
use cwlab::cliquewidth::{exact_cliquewidth, to_text as expr_text};
use cwlab::generators::{
    freeness_report, subdivide_all, thm5_claims, thm5_graph, thm6_claims, thm6_graph, thm7_claims,
    thm7_graph, wall, ConstructionTrace,
};
use cwlab::graph::io::{from_graph6, from_text, to_graph6, to_text};
use cwlab::graph::{enumerate_hereditary, VertexSet};
use cwlab::patterns::{enumerate_self_complementary, is_free, named, Pattern};
use cwlab::suites::{run_suite, SUITES};
use cwlab::{Error, Graph};

#[derive(Parser)]
#[command(name = "cwlab", version, about = "Clique-width laboratory")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a wall, one of the wall constructions, or a named graph.
    Gen {
        #[arg(value_enum)]
        kind: GenKind,
        #[arg(long, default_value_t = 2)]
        height: usize,
        /// Subdivide every wall edge this many times.
        #[arg(long, default_value_t = 0)]
        subdivide: usize,
        /// Pattern name for `gen named`.
        #[arg(long)]
        name: Option<String>,
        /// Append `CLASS <vertex> <class>` lines for the constructions.
        #[arg(long)]
        trace: bool,
    },
    /// Apply one graph operation and print the result.
    Transform {
        #[arg(long)]
        graph: String,
        #[arg(long, value_enum)]
        op: TransformOp,
        /// Comma-separated vertex list.
        #[arg(long, value_delimiter = ',')]
        set: Vec<usize>,
        /// Second vertex list for `bipartite-complement`.
        #[arg(long, value_delimiter = ',')]
        other: Vec<usize>,
        /// Subdivision count for `subdivide`.
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// Check a graph against forbidden induced subgraphs.
    Free {
        #[arg(long)]
        graph: String,
        /// Comma-separated pattern names.
        #[arg(long, value_delimiter = ',')]
        patterns: Vec<String>,
        /// Use the forbidden set claimed for a construction.
        #[arg(long, value_enum)]
        claims: Option<Construction>,
    },
    /// Exact clique-width.
    Cw {
        #[arg(long)]
        graph: String,
        /// Give up above this width.
        #[arg(long)]
        max_width: Option<usize>,
        /// Also print a witnessing expression.
        #[arg(long)]
        expr: bool,
    },
    /// Boundedness of clique-width for a class given by forbidden graphs.
    Classify {
        #[arg(long)]
        h1: String,
        #[arg(long)]
        h2: Option<String>,
        /// Self-complementary graphs forbidden together with H1 and co-H1.
        #[arg(long, value_delimiter = ',')]
        family: Vec<String>,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, required_unless_present_any = ["list", "all"])]
        suite: Option<String>,
        /// Size parameter, usually the largest vertex count.
        #[arg(long)]
        budget: Option<usize>,
        #[arg(long)]
        all: bool,
        #[arg(long)]
        list: bool,
    },
    /// List graphs on n vertices, one per isomorphism class.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Keep only graphs free of these comma-separated patterns.
        #[arg(long, value_delimiter = ',')]
        free: Vec<String>,
        /// Keep only self-complementary graphs.
        #[arg(long)]
        self_comp: bool,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Wall,
    Thm5,
    Thm6,
    Thm7,
    Named,
}

#[derive(Clone, Copy, ValueEnum)]
enum Construction {
    Thm5,
    Thm6,
    Thm7,
}

#[derive(Clone, Copy, ValueEnum)]
enum TransformOp {
    Complement,
    SubgraphComplement,
    BipartiteComplement,
    Delete,
    Subdivide,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Graph6,
}

/// Printed output and exit code.
type Outcome = (String, u8);

/// A file in the text or graph6 format, or a pattern name.
fn read_graph(arg: &str) -> cwlab::Result<Graph> {
    if Path::new(arg).is_file() {
        let s = fs::read_to_string(arg).map_err(|e| Error::Parse(format!("{arg}: {e}")))?;
        let first = s.lines().next().unwrap_or("").trim();
        if !first.is_empty() && !first.contains(' ') {
            return from_graph6(first);
        }
        return from_text(&s);
    }
    named(arg)
}

fn vertex_set(n: usize, vs: &[usize]) -> cwlab::Result<VertexSet> {
    VertexSet::try_from_iter(n, vs.iter().copied()).map_err(|vertex| Error::VertexOutOfRange { vertex, n })
}

fn construction(c: Construction, height: usize) -> cwlab::Result<(Graph, ConstructionTrace)> {
    match c {
        Construction::Thm5 => thm5_graph(height),
        Construction::Thm6 => thm6_graph(height),
        Construction::Thm7 => thm7_graph(height),
    }
}

fn verdict_outcome(v: Verdict) -> Outcome {
    let code = if v.status == Status::Bounded { 0 } else { 1 };
    (format!("{v}\n"), code)
}

fn run(cmd: Command) -> cwlab::Result<Outcome> {
    match cmd {
        Command::Gen { kind, height, subdivide, name, trace } => {
            let c = match kind {
                GenKind::Wall => return Ok((to_text(&subdivide_all(&wall(height)?.graph, subdivide).graph), 0)),
                GenKind::Named => {
                    let name = name.ok_or_else(|| Error::Precondition("gen named needs --name".into()))?;
                    return Ok((to_text(&named(&name)?), 0));
                }
                GenKind::Thm5 => Construction::Thm5,
                GenKind::Thm6 => Construction::Thm6,
                GenKind::Thm7 => Construction::Thm7,
            };
            let (g, t) = construction(c, height)?;
            let mut out = to_text(&g);
            if trace {
                out.push_str(&t.class_lines());
            }
            Ok((out, 0))
        }
        Command::Transform { graph, op, set, other, k } => {
            let g = read_graph(&graph)?;
            let n = g.n();
            let h = match op {
                TransformOp::Complement => g.complement(),
                TransformOp::SubgraphComplement => g.subgraph_complementation(&vertex_set(n, &set)?)?,
                TransformOp::BipartiteComplement => {
                    g.bipartite_complementation(&vertex_set(n, &set)?, &vertex_set(n, &other)?)?
                }
                TransformOp::Delete => g.delete_vertices(&vertex_set(n, &set)?)?,
                TransformOp::Subdivide => subdivide_all(&g, k).graph,
            };
            Ok((to_text(&h), 0))
        }
        Command::Free { graph, patterns, claims } => {
            let g = read_graph(&graph)?;
            let mut list = match claims {
                Some(Construction::Thm5) => thm5_claims(),
                Some(Construction::Thm6) => thm6_claims(),
                Some(Construction::Thm7) => thm7_claims(),
                None => Vec::new(),
            };
            for p in &patterns {
                list.push(p.parse::<Pattern>()?);
            }
            if list.is_empty() {
                return Err(Error::Precondition("no patterns given".into()));
            }
            let r = freeness_report(&g, &list)?;
            Ok((r.to_string(), if r.passed() { 0 } else { 1 }))
        }
        Command::Cw { graph, max_width, expr } => {
            let g = read_graph(&graph)?;
            let (k, cert) = exact_cliquewidth(&g, max_width)?;
            let mut out = format!("{k}\n");
            if let (true, Some(e)) = (expr, cert.expr()) {
                out.push_str(&expr_text(e));
            }
            Ok((out, 0))
        }
        Command::Classify { h1, h2, family } => {
            let h = read_graph(&h1)?;
            if !family.is_empty() {
                if h2.is_some() {
                    return Err(Error::Precondition("--h2 and --family are exclusive".into()));
                }
                let f = family.iter().map(|x| read_graph(x)).collect::<cwlab::Result<Vec<_>>>()?;
                return Ok(verdict_outcome(classify_pair_with_family(&h, &f)?));
            }
            match h2 {
                Some(h2) => Ok(verdict_outcome(classify_bigenic(&h, &read_graph(&h2)?)?)),
                None => Ok(verdict_outcome(classify_single(&h))),
            }
        }
        Command::Verify { suite, budget, all, list } => {
            if list {
                let out = SUITES.iter().map(|s| format!("{} {}: {}\n", s.criterion, s.name, s.about)).collect();
                return Ok((out, 0));
            }
            let names: Vec<String> = match (all, suite) {
                (true, _) => SUITES.iter().map(|s| s.name.to_string()).collect(),
                (false, Some(s)) => vec![s],
                (false, None) => unreachable!("clap requires --suite, --all or --list"),
            };
            let mut out = String::new();
            let mut ok = true;
            for name in names {
                let r = run_suite(&name, budget)?;
                ok &= r.passed();
                out.push_str(&r.to_string());
            }
            Ok((out, if ok { 0 } else { 1 }))
        }
        Command::Enumerate { n, free, self_comp, format } => {
            let hs = free.iter().map(|p| named(p)).collect::<cwlab::Result<Vec<_>>>()?;
            let gs = if self_comp {
                enumerate_self_complementary(n)?.into_iter().filter(|g| is_free(g, &hs)).collect()
            } else {
                enumerate_hereditary(n, |g| is_free(g, &hs))?
            };
            let out = gs
                .iter()
                .map(|g| match format {
                    Format::Graph6 => format!("{}\n", to_graph6(g)),
                    Format::Text => to_text(g),
                })
                .collect();
            Ok((out, 0))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
