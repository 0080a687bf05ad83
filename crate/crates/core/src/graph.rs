//! Multigraphs with loops, used by the graphic and framed-bicircular backends.

use crate::error::{MatroidError, Result};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Graph {
    pub vertices: Vec<String>,
    /// (u, v, edge label); u == v is a loop. Parallel edges allowed.
    pub edges: Vec<(String, String, String)>,
}

impl Graph {
    pub fn new<V, E>(vertices: V, edges: E) -> Result<Graph>
    where
        V: IntoIterator<Item = String>,
        E: IntoIterator<Item = (String, String, String)>,
    {
        let g = Graph {
            vertices: vertices.into_iter().collect(),
            edges: edges.into_iter().collect(),
        };
        g.check()?;
        Ok(g)
    }

    /// The complete graph on vertices v0..v{n-1} with edge labels "e{i}_{j}".
    pub fn complete(n: usize) -> Graph {
        let vertices: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((format!("v{i}"), format!("v{j}"), format!("e{i}_{j}")));
            }
        }
        Graph { vertices, edges }
    }

    fn check(&self) -> Result<()> {
        let mut seen = HashMap::new();
        for (i, v) in self.vertices.iter().enumerate() {
            if seen.insert(v.clone(), i).is_some() {
                return Err(MatroidError::LabelCollision(v.clone()));
            }
        }
        for (u, v, _) in &self.edges {
            if !seen.contains_key(u) {
                return Err(MatroidError::UnknownElement(u.clone()));
            }
            if !seen.contains_key(v) {
                return Err(MatroidError::UnknownElement(v.clone()));
            }
        }
        Ok(())
    }

    pub fn vertex_index(&self) -> HashMap<&str, usize> {
        self.vertices.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect()
    }
}

/// Union-find over vertex indices.
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> UnionFind {
        UnionFind { parent: (0..n).collect() }
    }

    pub fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    /// Returns true when the two were in different components.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            false
        } else {
            self.parent[ra] = rb;
            true
        }
    }
}

/// Maximum bipartite matching by augmenting paths. `adj[i]` lists the right
/// vertices available to left vertex `i`.
pub fn max_bipartite_matching(adj: &[Vec<usize>], right_size: usize) -> usize {
    let mut match_right: Vec<Option<usize>> = vec![None; right_size];
    let mut size = 0;
    for left in 0..adj.len() {
        let mut visited = vec![false; right_size];
        if augment(left, adj, &mut match_right, &mut visited) {
            size += 1;
        }
    }
    size
}

fn augment(
    left: usize,
    adj: &[Vec<usize>],
    match_right: &mut [Option<usize>],
    visited: &mut [bool],
) -> bool {
    for &r in &adj[left] {
        if visited[r] {
            continue;
        }
        visited[r] = true;
        if match_right[r].is_none()
            || augment(match_right[r].unwrap(), adj, match_right, visited)
        {
            match_right[r] = Some(left);
            return true;
        }
    }
    false
}
