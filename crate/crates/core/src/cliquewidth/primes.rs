use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::structure::maximal_modules;

use super::exact::{cliquewidth, MAX_EXACT_N};

/// Clique-width through modular decomposition: the exact width of each
/// prime quotient met along the decomposition, maximised with 2 at every
/// series node and taken over components at every parallel node.
pub fn cw_via_primes(g: &Graph) -> Result<usize> {
    if g.n() > MAX_EXACT_N {
        return Err(Error::Budget { size: g.n(), budget: MAX_EXACT_N });
    }
    decompose(g)
}

fn decompose(g: &Graph) -> Result<usize> {
    if g.n() <= 1 {
        return Ok(g.n());
    }
    let components = g.components();
    if components.len() > 1 {
        return components.iter().try_fold(0, |acc, c| Ok(acc.max(decompose(&g.induced_subgraph(c)?)?)));
    }
    let co_components = g.complement().components();
    if co_components.len() > 1 {
        return co_components.iter().try_fold(2, |acc, c| Ok(acc.max(decompose(&g.induced_subgraph(c)?)?)));
    }
    let modules = maximal_modules(g);
    let reps: Vec<usize> = modules.iter().map(|m| m.first().unwrap()).collect();
    let mut best = cliquewidth(&g.induced_by_order(&reps))?;
    for m in &modules {
        best = best.max(decompose(&g.induced_subgraph(m)?)?);
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, enumerate_graphs, path, VertexSet};
    use crate::patterns::is_free;
    use crate::structure::is_prime;

    /// Maximum exact width over every induced subgraph that is prime, with
    /// graphs on one or two vertices counted as prime.
    fn literal(g: &Graph) -> usize {
        let n = g.n();
        (1u64..1 << n)
            .map(|mask| g.induced_subgraph(&VertexSet::from_mask(n, mask)).unwrap())
            .filter(|h| h.n() <= 2 || is_prime(h).unwrap())
            .map(|h| cliquewidth(&h).unwrap())
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn examples() {
        assert_eq!(cw_via_primes(&path(4)).unwrap(), 3);
        assert_eq!(cw_via_primes(&cycle(5)).unwrap(), 3);
        assert_eq!(cw_via_primes(&Graph::empty(0)).unwrap(), 0);
    }

    #[test]
    fn agrees_with_exact_and_literal_definition() {
        for n in 1..=6 {
            for g in enumerate_graphs(n).unwrap() {
                let exact = cliquewidth(&g).unwrap();
                assert_eq!(cw_via_primes(&g).unwrap(), exact, "{g:?}");
                assert_eq!(literal(&g), exact, "{g:?}");
                if is_free(&g, &[path(4)]) {
                    assert!(exact <= 2);
                }
            }
        }
    }
}
