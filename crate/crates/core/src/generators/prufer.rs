use crate::error::{Error, Result};
use crate::graph::Graph;

/// Decodes a Prüfer code into the tree on `code.len() + 2` labeled vertices.
pub fn prufer_decode(code: &[usize]) -> Result<Graph> {
    let n = code.len() + 2;
    if let Some(&bad) = code.iter().find(|&&v| v >= n) {
        return Err(Error::invalid(format!(
            "Prüfer entry {bad} out of range for n = {n}"
        )));
    }
    Ok(Graph::from_edge_list(decode_edges(code), Some(n)).expect("Prüfer decoding yields a tree"))
}

/// Edges of the decoded tree. Entries must already be in range.
pub(crate) fn decode_edges(code: &[usize]) -> Vec<(usize, usize)> {
    let n = code.len() + 2;
    let mut degree = vec![1usize; n];
    for &v in code {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    // Linear-time variant: `ptr` scans for the smallest leaf, `leaf` may jump
    // back when removing an edge creates a smaller one.
    let mut ptr = 0;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &v in code {
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 && v < ptr {
            leaf = v;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    edges
}

/// Prüfer code of a labeled tree.
pub fn prufer_encode(tree: &Graph) -> Result<Vec<usize>> {
    if !tree.is_tree() {
        return Err(Error::invalid("Prüfer encoding needs a tree"));
    }
    let n = tree.order();
    if n <= 2 {
        return Ok(Vec::new());
    }
    let mut degree = tree.degrees();
    let mut removed = vec![false; n];
    let mut code = Vec::with_capacity(n - 2);
    for _ in 0..n - 2 {
        let leaf = (0..n)
            .find(|&v| !removed[v] && degree[v] == 1)
            .expect("a tree always has a leaf");
        removed[leaf] = true;
        let parent = *tree
            .neighbors(leaf)
            .iter()
            .find(|&&w| !removed[w])
            .expect("leaf has one live neighbor");
        degree[parent] -= 1;
        code.push(parent);
    }
    Ok(code)
}

/// Decode then re-encode; the identity on valid codes.
pub fn prufer_roundtrip(code: &[usize]) -> Result<Vec<usize>> {
    prufer_encode(&prufer_decode(code)?)
}
