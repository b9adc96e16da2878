//! Deterministic constructors for the graph families under study.
//!
//! Labelings are fixed so that degree sequences read back in a known
//! arrangement:
//!
//! * `path`: vertices `0..n` in order.
//! * `star`: center `0`, leaves `1..n`.
//! * `double_star`: centers `u = 0` (degree `k`) and `v = 1` (degree `r`),
//!   then `u`'s leaves, then `v`'s leaves.
//! * `complete_bipartite`: part A is `0..m`, part B is `m..m+n`.
//! * caterpillars: spine `x_1..x_k` is `0..k`, leaves follow in spine order.

mod enumerate;
mod prufer;

pub use enumerate::{
    all_graphs, all_labeled_trees, graph_from_mask, labeled_tree_by_rank, labeled_tree_count,
    AllGraphs, LabeledTrees, MAX_ENUM_GRAPH_N, MAX_ENUM_TREE_N,
};
pub use prufer::{prufer_decode, prufer_encode, prufer_roundtrip};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Uniform caterpillar `C(n, m)`: a spine of `n` vertices, each with `m`
/// pendant leaves. The realized tree has `n(m+1)` vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CaterpillarSpec {
    n: usize,
    m: usize,
}

impl CaterpillarSpec {
    pub fn new(n: usize, m: usize) -> Result<Self> {
        if n < 1 || m < 1 {
            return Err(Error::invalid(format!(
                "caterpillar needs n >= 1 and m >= 1, got n={n}, m={m}"
            )));
        }
        Ok(CaterpillarSpec { n, m })
    }

    pub fn spine_len(&self) -> usize {
        self.n
    }

    pub fn leaves_per_spine_vertex(&self) -> usize {
        self.m
    }

    pub fn order(&self) -> usize {
        self.n * (self.m + 1)
    }
}

/// Intended degrees of the spine vertices of a caterpillar, in spine order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpineSequence(Vec<usize>);

impl SpineSequence {
    /// Ends need degree >= 1, interior vertices >= 2 (their two spine edges).
    pub fn new(degrees: Vec<usize>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::invalid("spine sequence must be non-empty"));
        }
        let k = degrees.len();
        for (i, &d) in degrees.iter().enumerate() {
            let interior = i > 0 && i + 1 < k;
            if interior && d < 2 {
                return Err(Error::invalid(format!(
                    "interior spine degree d_{} = {d} is below 2",
                    i + 1
                )));
            }
            if !interior && d < 1 {
                return Err(Error::invalid(format!(
                    "end spine degree d_{} = {d} is below 1",
                    i + 1
                )));
            }
        }
        Ok(SpineSequence(degrees))
    }

    /// True when `degrees` satisfies the realizability rules of [`SpineSequence::new`].
    pub fn is_realizable(degrees: &[usize]) -> bool {
        let k = degrees.len();
        k >= 1
            && degrees.iter().enumerate().all(
                |(i, &d)| {
                    if i > 0 && i + 1 < k {
                        d >= 2
                    } else {
                        d >= 1
                    }
                },
            )
    }

    pub fn degrees(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn leaves_at(&self, i: usize) -> usize {
        let k = self.0.len();
        let d = self.0[i];
        if k == 1 {
            d
        } else if i == 0 || i + 1 == k {
            d - 1
        } else {
            d - 2
        }
    }
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::invalid("path needs n >= 1"));
    }
    Graph::from_edge_list((1..n).map(|i| (i - 1, i)), Some(n))
}

pub fn star(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::invalid(format!("star needs n >= 2, got {n}")));
    }
    Graph::from_edge_list((1..n).map(|i| (0, i)), Some(n))
}

/// Double star with adjacent centers of degree `k` and `r`.
pub fn double_star(r: usize, k: usize) -> Result<Graph> {
    if k < 2 || r < 1 {
        return Err(Error::invalid(format!(
            "double star needs k >= 2 and r >= 1, got r={r}, k={k}"
        )));
    }
    let n = k + r;
    let mut edges = vec![(0, 1)];
    edges.extend((0..k - 1).map(|j| (0, 2 + j)));
    edges.extend((0..r - 1).map(|j| (1, 1 + k + j)));
    Graph::from_edge_list(edges, Some(n))
}

pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph> {
    if m < 1 || n < 1 {
        return Err(Error::invalid(format!(
            "complete bipartite graph needs both parts non-empty, got ({m},{n})"
        )));
    }
    let edges = (0..m).flat_map(|a| (m..m + n).map(move |b| (a, b)));
    Graph::from_edge_list(edges, Some(m + n))
}

/// `C(n, m)`. Leaf `y_{i,j}` (0-based) is vertex `n + i*m + j`. For `n = 1`
/// this is the star on `m + 1` vertices.
pub fn caterpillar_uniform(spec: CaterpillarSpec) -> Graph {
    let (n, m) = (spec.n, spec.m);
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    for i in 0..n {
        edges.extend((0..m).map(|j| (i, n + i * m + j)));
    }
    Graph::from_edge_list(edges, Some(spec.order())).expect("caterpillar construction is valid")
}

/// Caterpillar whose spine degrees are exactly `seq`, in order.
pub fn caterpillar_from_spine(seq: &SpineSequence) -> Graph {
    let k = seq.len();
    let mut edges: Vec<(usize, usize)> = (1..k).map(|i| (i - 1, i)).collect();
    let mut next = k;
    for i in 0..k {
        for _ in 0..seq.leaves_at(i) {
            edges.push((i, next));
            next += 1;
        }
    }
    Graph::from_edge_list(edges, Some(next)).expect("caterpillar construction is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted_degrees(g: &Graph) -> Vec<usize> {
        g.degree_sequence().sorted_desc().0
    }

    #[test]
    fn paths() {
        assert_eq!(path(1).unwrap().size(), 0);
        assert_eq!(path(3).unwrap().degree_sequence().values(), &[1, 2, 1]);
        let p5 = path(5).unwrap();
        assert_eq!(p5.size(), 4);
        assert!(p5.is_tree());
        assert!(path(0).is_err());
    }

    #[test]
    fn stars() {
        assert_eq!(star(4).unwrap().degree_sequence().values(), &[3, 1, 1, 1]);
        assert_eq!(star(2).unwrap().size(), 1);
        assert!(star(1).is_err());
        assert!(star(0).is_err());
    }

    #[test]
    fn double_stars() {
        let g = double_star(2, 3).unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(sorted_degrees(&g), vec![3, 2, 1, 1, 1]);
        assert_eq!(g.degree(0).unwrap(), 3);
        assert_eq!(g.degree(1).unwrap(), 2);
        // r = 1 degenerates to a star on k + 1 vertices
        let g = double_star(1, 3).unwrap();
        assert_eq!(sorted_degrees(&g), sorted_degrees(&star(4).unwrap()));
        assert!(double_star(2, 1).is_err());
        assert!(double_star(0, 3).is_err());
    }

    #[test]
    fn complete_bipartite_graphs() {
        let g = complete_bipartite(2, 3).unwrap();
        assert_eq!(g.size(), 6);
        assert_eq!(g.degree_sequence().values(), &[3, 3, 2, 2, 2]);
        let g = complete_bipartite(3, 3).unwrap();
        assert!(g.degree_sequence().values().iter().all(|&d| d == 3));
        assert!(complete_bipartite(0, 3).is_err());
    }

    #[test]
    fn uniform_caterpillars() {
        let g = caterpillar_uniform(CaterpillarSpec::new(3, 3).unwrap());
        assert_eq!(g.order(), 12);
        assert_eq!(g.size(), 11);
        assert!(g.is_tree());
        assert_eq!(&g.degree_sequence().values()[..3], &[4, 5, 4]);
        assert_eq!(g.degree(1).unwrap(), 5);

        let g = caterpillar_uniform(CaterpillarSpec::new(1, 3).unwrap());
        assert_eq!(g, star(4).unwrap());

        let g = caterpillar_uniform(CaterpillarSpec::new(2, 3).unwrap());
        assert_eq!(g.order(), 8);
        assert_eq!(&g.degree_sequence().values()[..2], &[4, 4]);

        assert!(CaterpillarSpec::new(0, 3).is_err());
        assert!(CaterpillarSpec::new(3, 0).is_err());
    }

    #[test]
    fn spine_caterpillars() {
        let seq = SpineSequence::new(vec![4, 5, 4]).unwrap();
        let g = caterpillar_from_spine(&seq);
        let uniform = caterpillar_uniform(CaterpillarSpec::new(3, 3).unwrap());
        assert_eq!(sorted_degrees(&g), sorted_degrees(&uniform));
        assert_eq!(&g.degree_sequence().values()[..3], &[4, 5, 4]);

        let p2 = caterpillar_from_spine(&SpineSequence::new(vec![1, 1]).unwrap());
        assert_eq!((p2.order(), p2.size()), (2, 1));

        let p5 = caterpillar_from_spine(&SpineSequence::new(vec![2, 2, 2]).unwrap());
        assert_eq!(sorted_degrees(&p5), sorted_degrees(&path(5).unwrap()));
        assert!(p5.is_tree());

        let single = caterpillar_from_spine(&SpineSequence::new(vec![3]).unwrap());
        assert_eq!(single, star(4).unwrap());
    }

    #[test]
    fn spine_sequence_rejections() {
        assert!(SpineSequence::new(vec![]).is_err());
        assert!(SpineSequence::new(vec![2, 1, 2]).is_err());
        assert!(SpineSequence::new(vec![0, 2]).is_err());
        assert!(SpineSequence::is_realizable(&[1, 2, 1]));
        assert!(!SpineSequence::is_realizable(&[1, 1, 1]));
    }
}
