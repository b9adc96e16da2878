//! Exhaustive labeled enumeration, capped at desk scale.
//!
//! Both enumerators are also addressable by rank (`labeled_tree_by_rank`,
//! `graph_from_mask`) so callers can split the range across workers.

use crate::error::{Error, Result};
use crate::graph::Graph;

use super::prufer::decode_edges;

pub const MAX_ENUM_TREE_N: usize = 10;
pub const MAX_ENUM_GRAPH_N: usize = 6;

/// `n^(n-2)` for `n >= 2`, and 1 for `n = 1`.
pub fn labeled_tree_count(n: usize) -> u64 {
    if n <= 2 {
        1
    } else {
        (n as u64).pow(n as u32 - 2)
    }
}

/// All labeled trees on `n` vertices in lexicographic Prüfer-code order.
pub fn all_labeled_trees(n: usize) -> Result<LabeledTrees> {
    check_tree_n(n)?;
    Ok(LabeledTrees {
        n,
        next: 0,
        total: labeled_tree_count(n),
    })
}

/// The tree whose Prüfer code is the `rank`-th in lexicographic order
/// (the code read as a base-`n` number, most significant digit first).
pub fn labeled_tree_by_rank(n: usize, rank: u64) -> Result<Graph> {
    check_tree_n(n)?;
    if rank >= labeled_tree_count(n) {
        return Err(Error::invalid(format!(
            "tree rank {rank} out of range for n = {n}"
        )));
    }
    Ok(tree_at(n, rank))
}

fn tree_at(n: usize, rank: u64) -> Graph {
    if n == 1 {
        return Graph::empty(1);
    }
    let len = n - 2;
    let mut code = vec![0usize; len];
    let mut r = rank;
    for slot in code.iter_mut().rev() {
        *slot = (r % n as u64) as usize;
        r /= n as u64;
    }
    Graph::from_edge_list(decode_edges(&code), Some(n)).expect("Prüfer decoding yields a tree")
}

fn check_tree_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::invalid("tree enumeration needs n >= 1"));
    }
    if n > MAX_ENUM_TREE_N {
        return Err(Error::CapExceeded {
            what: "labeled tree enumeration order",
            cap: MAX_ENUM_TREE_N,
            got: n,
        });
    }
    Ok(())
}

#[derive(Debug, Clone)]
pub struct LabeledTrees {
    n: usize,
    next: u64,
    total: u64,
}

impl Iterator for LabeledTrees {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next >= self.total {
            return None;
        }
        let g = tree_at(self.n, self.next);
        self.next += 1;
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for LabeledTrees {}

/// Number of vertex pairs, i.e. bits in a graph mask.
fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// The graph whose edge set is `mask`, bit `k` standing for the `k`-th pair
/// `(i, j)`, `i < j`, in lexicographic order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if mask >> bit & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    Graph::from_edge_list(edges, Some(n)).expect("mask edges are simple")
}

/// All `2^(n(n-1)/2)` labeled graphs on `n` vertices in mask order,
/// optionally only the connected ones.
pub fn all_graphs(n: usize, connected_only: bool) -> Result<AllGraphs> {
    if n == 0 {
        return Err(Error::invalid("graph enumeration needs n >= 1"));
    }
    if n > MAX_ENUM_GRAPH_N {
        return Err(Error::CapExceeded {
            what: "graph enumeration order",
            cap: MAX_ENUM_GRAPH_N,
            got: n,
        });
    }
    Ok(AllGraphs {
        n,
        next: 0,
        total: 1u64 << pair_count(n),
        connected_only,
    })
}

#[derive(Debug, Clone)]
pub struct AllGraphs {
    n: usize,
    next: u64,
    total: u64,
    connected_only: bool,
}

impl AllGraphs {
    /// Total number of masks, before any connectivity filtering.
    pub fn mask_count(&self) -> u64 {
        self.total
    }
}

impl Iterator for AllGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next < self.total {
            let g = graph_from_mask(self.n, self.next);
            self.next += 1;
            if !self.connected_only || g.is_connected() {
                return Some(g);
            }
        }
        None
    }
}
