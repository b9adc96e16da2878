//! Second-route oracle for integration tests. Graphs are dense adjacency
//! matrices built from their definitions, independently of the library's
//! generators, and every index is read off the matrix. The spectral radius
//! comes from a full symmetric eigendecomposition.
#![allow(dead_code)]

use nalgebra::DMatrix;

#[derive(Debug, Clone)]
pub struct Dense {
    pub a: Vec<Vec<u8>>,
}

impl Dense {
    pub fn new(n: usize) -> Dense {
        Dense {
            a: vec![vec![0; n]; n],
        }
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn join(&mut self, u: usize, v: usize) {
        assert_ne!(u, v);
        self.a[u][v] = 1;
        self.a[v][u] = 1;
    }

    pub fn from_graph(g: &irrlab::Graph) -> Dense {
        let mut d = Dense::new(g.order());
        for &(u, v) in g.edges() {
            d.join(u, v);
        }
        d
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.a
            .iter()
            .map(|row| row.iter().map(|&x| x as i64).sum())
            .collect()
    }

    pub fn edge_count(&self) -> i64 {
        let mut e = 0;
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                e += self.a[i][j] as i64;
            }
        }
        e
    }

    fn edge_sum(&self, f: impl Fn(i64, i64) -> i64) -> i64 {
        let d = self.degrees();
        let mut s = 0;
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                if self.a[i][j] == 1 {
                    s += f(d[i], d[j]);
                }
            }
        }
        s
    }

    fn pair_sum(&self, f: impl Fn(i64, i64) -> i64) -> i64 {
        let d = self.degrees();
        let mut s = 0;
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                s += f(d[i], d[j]);
            }
        }
        s
    }

    pub fn irr(&self) -> i64 {
        self.edge_sum(|x, y| (x - y).abs())
    }

    pub fn sigma(&self) -> i64 {
        self.edge_sum(|x, y| (x - y).pow(2))
    }

    pub fn m2(&self) -> i64 {
        self.edge_sum(|x, y| x * y)
    }

    pub fn irr_total(&self) -> i64 {
        self.pair_sum(|x, y| (x - y).abs())
    }

    pub fn sigma_total(&self) -> i64 {
        self.pair_sum(|x, y| (x - y).pow(2))
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for (v, seen_v) in seen.iter_mut().enumerate() {
                if self.a[u][v] == 1 && !*seen_v {
                    *seen_v = true;
                    stack.push(v);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    pub fn spectral_radius(&self) -> f64 {
        let n = self.n();
        let m = DMatrix::from_fn(n, n, |i, j| self.a[i][j] as f64);
        m.symmetric_eigen()
            .eigenvalues
            .iter()
            .cloned()
            .fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn mean_degree(&self) -> f64 {
        2.0 * self.edge_count() as f64 / self.n() as f64
    }
}

/// Star on `n` vertices with the center placed last.
pub fn star(n: usize) -> Dense {
    let mut d = Dense::new(n);
    for leaf in 0..n - 1 {
        d.join(leaf, n - 1);
    }
    d
}

pub fn path(n: usize) -> Dense {
    let mut d = Dense::new(n);
    for i in 1..n {
        d.join(i - 1, i);
    }
    d
}

/// Spine vertices occupy the top indices, leaves are numbered first.
pub fn caterpillar_with_leaves(leaves: &[usize]) -> Dense {
    let k = leaves.len();
    let total: usize = leaves.iter().sum::<usize>() + k;
    let mut d = Dense::new(total);
    let spine = |i: usize| total - k + i;
    for i in 1..k {
        d.join(spine(i - 1), spine(i));
    }
    let mut next = 0;
    for (i, &count) in leaves.iter().enumerate() {
        for _ in 0..count {
            d.join(next, spine(i));
            next += 1;
        }
    }
    d
}

pub fn caterpillar(n: usize, m: usize) -> Dense {
    caterpillar_with_leaves(&vec![m; n])
}

/// Caterpillar whose spine vertex `i` has degree `degrees[i]`.
pub fn spine_caterpillar(degrees: &[usize]) -> Dense {
    let k = degrees.len();
    let leaves: Vec<usize> = degrees
        .iter()
        .enumerate()
        .map(|(i, &d)| {
            let spine_neighbors = if k == 1 {
                0
            } else if i == 0 || i + 1 == k {
                1
            } else {
                2
            };
            d - spine_neighbors
        })
        .collect();
    caterpillar_with_leaves(&leaves)
}

/// Adjacent centers of degrees `k` and `r`.
pub fn double_star(r: usize, k: usize) -> Dense {
    caterpillar_with_leaves(&[k - 1, r - 1])
}

pub fn complete_bipartite(m: usize, n: usize) -> Dense {
    let mut d = Dense::new(m + n);
    for i in 0..m {
        for j in 0..n {
            d.join(i, m + j);
        }
    }
    d
}

/// Visits every labeled tree on `n >= 2` vertices in Prüfer-code rank
/// order, decoding each code naively in quadratic time.
pub fn for_each_tree(n: usize, mut visit: impl FnMut(u64, &Dense)) {
    assert!(n >= 2);
    if n == 2 {
        let mut d = Dense::new(2);
        d.join(0, 1);
        visit(0, &d);
        return;
    }
    let len = n - 2;
    let total = (n as u64).pow(len as u32);
    let mut code = vec![0usize; len];
    for rank in 0..total {
        let mut r = rank;
        for slot in code.iter_mut().rev() {
            *slot = (r % n as u64) as usize;
            r /= n as u64;
        }
        let mut degree = vec![1usize; n];
        for &c in &code {
            degree[c] += 1;
        }
        let mut d = Dense::new(n);
        for &c in &code {
            let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
            d.join(leaf, c);
            degree[leaf] = 0;
            degree[c] -= 1;
        }
        let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
        d.join(rest[0], rest[1]);
        visit(rank, &d);
    }
}

/// Every labeled graph on `n` vertices.
pub fn all_graphs(n: usize) -> Vec<Dense> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let mut d = Dense::new(n);
            for (bit, &(i, j)) in pairs.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    d.join(i, j);
                }
            }
            d
        })
        .collect()
}
