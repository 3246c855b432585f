//! Modules and primality, split structure, cliques, and facts about
//! self-complementary graphs.

mod cliques;
mod modules;
mod ramsey;
mod split;

pub use cliques::{clique_number, independence_number, maximum_clique};
pub use modules::{
    find_nontrivial_module, is_module, is_prime, is_prime_by_closure, maximal_modules,
    module_closure, MAX_MODULE_SEARCH_N,
};
pub use ramsey::{bipartite_ramsey_check, Colouring, MAX_RAMSEY_N};
pub use split::{all_split_partitions, split_partition, SplitPartition};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::patterns::{complementing_permutations, is_self_complementary};

/// The unique fixed vertex of a complementing permutation of an odd-order
/// self-complementary graph, after checking that deleting it leaves a
/// self-complementary graph.
///
/// Every complementing permutation is checked to fix exactly one vertex;
/// the vertex fixed by the lexicographically first one is returned.
pub fn fixed_vertex(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n % 2 == 0 {
        return Err(Error::Precondition(format!("order {n} is even")));
    }
    let perms = complementing_permutations(g);
    if perms.is_empty() {
        return Err(Error::Precondition("graph is not self-complementary".into()));
    }
    let mut first = None;
    for f in &perms {
        let fixed: Vec<usize> = (0..n).filter(|&v| f[v] == v).collect();
        if fixed.len() != 1 {
            return Err(Error::Precondition(format!(
                "complementing permutation {f:?} fixes {} vertices",
                fixed.len()
            )));
        }
        first.get_or_insert(fixed[0]);
    }
    let v = first.unwrap();
    if is_self_complementary(&g.delete_vertex(v)?).is_none() {
        return Err(Error::Precondition(format!("deleting fixed vertex {v} breaks self-complementarity")));
    }
    Ok(v)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitUniqueness {
    pub partitions: Vec<SplitPartition>,
}

impl SplitUniqueness {
    /// Exactly one split partition, with sides of equal size.
    pub fn holds(&self) -> bool {
        matches!(self.partitions.as_slice(), [p] if p.clique.len() == p.indep.len())
    }
}

/// All split partitions of an even-order self-complementary split graph.
pub fn unique_split_partition_check(g: &Graph) -> Result<SplitUniqueness> {
    if g.n() % 2 == 1 {
        return Err(Error::Precondition(format!("order {} is odd", g.n())));
    }
    if is_self_complementary(g).is_none() {
        return Err(Error::Precondition("graph is not self-complementary".into()));
    }
    let partitions = all_split_partitions(g);
    if partitions.is_empty() {
        return Err(Error::Precondition("graph is not split".into()));
    }
    Ok(SplitUniqueness { partitions })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, is_isomorphic, path};
    use crate::patterns::{bull, enumerate_self_complementary, x_graphs};

    #[test]
    fn fixed_vertex_examples() {
        let c5 = cycle(5);
        assert!(fixed_vertex(&c5).is_ok());
        let v = fixed_vertex(&bull()).unwrap();
        assert!(is_isomorphic(&bull().delete_vertex(v).unwrap(), &path(4)));
        assert!(fixed_vertex(&path(4)).is_err());
        assert!(fixed_vertex(&path(3)).is_err());
        for g in enumerate_self_complementary(9).unwrap() {
            assert!(fixed_vertex(&g).is_ok());
        }
    }

    #[test]
    fn split_uniqueness_examples() {
        assert!(unique_split_partition_check(&path(4)).unwrap().holds());
        for x in &x_graphs()[..3] {
            let r = unique_split_partition_check(x).unwrap();
            assert!(r.holds());
            assert_eq!(r.partitions[0].clique.len(), 4);
        }
        assert!(unique_split_partition_check(&x_graphs()[3]).is_err());
        assert!(unique_split_partition_check(&cycle(5)).is_err());
    }
}
