//! Undirected simple graphs over vertices `1..=n` with sorted adjacency sets.
//!
//! Vertices are 1-indexed at the API surface; storage is 0-indexed internally.

use thiserror::Error;

use crate::matrix::ZeroOneMatrix;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("vertex {0} out of range 1..={1}")]
    VertexOutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("induced subgraph requires a nonempty vertex set")]
    EmptyKeep,
}

/// Undirected simple graph. Adjacency lists are sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Graph on `n` vertices with the given 1-indexed edges. Duplicate edges
    /// are ignored; self-loops and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u == 0 || u > n {
                return Err(GraphError::VertexOutOfRange(u, n));
            }
            if v == 0 || v > n {
                return Err(GraphError::VertexOutOfRange(v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u - 1].push(v);
            adj[v - 1].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { n, adj })
    }

    pub fn edgeless(n: usize) -> Graph {
        assert!(n > 0, "graph must have at least one vertex");
        Graph { n, adj: vec![Vec::new(); n] }
    }

    pub fn complete(n: usize) -> Graph {
        assert!(n > 0, "graph must have at least one vertex");
        let adj = (1..=n)
            .map(|v| (1..=n).filter(|&u| u != v).collect())
            .collect();
        Graph { n, adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        1..=self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as 1-indexed pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for v in 1..=self.n {
            for &u in &self.adj[v - 1] {
                if v < u {
                    out.push((v, u));
                }
            }
        }
        out
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v == 0 || v > self.n {
            Err(GraphError::VertexOutOfRange(v, self.n))
        } else {
            Ok(())
        }
    }

    /// Sorted open neighborhood of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        assert!(v >= 1 && v <= self.n, "vertex {v} out of range");
        &self.adj[v - 1]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }

    pub fn min_degree(&self) -> usize {
        (1..=self.n).map(|v| self.degree(v)).min().unwrap()
    }

    pub fn max_degree(&self) -> usize {
        (1..=self.n).map(|v| self.degree(v)).max().unwrap()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        assert!(u >= 1 && u <= self.n && v >= 1 && v <= self.n);
        self.adj[u - 1].binary_search(&v).is_ok()
    }

    pub fn is_complete(&self) -> bool {
        (1..=self.n).all(|v| self.degree(v) == self.n - 1)
    }

    /// Closed neighborhood `N[v]` as a sorted vertex list.
    pub fn closed_neighborhood(&self, v: usize) -> Result<Vec<usize>, GraphError> {
        self.check_vertex(v)?;
        let mut out = Vec::with_capacity(self.degree(v) + 1);
        let pos = self.adj[v - 1].partition_point(|&u| u < v);
        out.extend_from_slice(&self.adj[v - 1][..pos]);
        out.push(v);
        out.extend_from_slice(&self.adj[v - 1][pos..]);
        Ok(out)
    }

    /// The set `U` of universal vertices, sorted.
    pub fn universal_vertices(&self) -> Vec<usize> {
        (1..=self.n).filter(|&v| self.degree(v) == self.n - 1).collect()
    }

    /// `M*(G)`: the adjacency matrix with ones added on the main diagonal.
    /// Row and column `i` (0-indexed) describe vertex `i + 1`.
    pub fn augmented_adjacency(&self) -> ZeroOneMatrix {
        let mut m = ZeroOneMatrix::zeros(self.n, self.n);
        for v in 1..=self.n {
            m.set(v - 1, v - 1, true);
            for &u in &self.adj[v - 1] {
                m.set(v - 1, u - 1, true);
            }
        }
        m
    }

    /// Checks whether `d` meets every closed neighborhood at least `k` times.
    /// `k = 0` holds for any set. Duplicates in `d` are counted once.
    pub fn verify_ktuple(&self, d: &[usize], k: usize) -> Result<bool, GraphError> {
        Ok(self.ktuple_deficiencies(d, k)?.is_empty())
    }

    /// Vertices `v` with `|N[v] ∩ d| < k`, paired with their actual counts.
    pub fn ktuple_deficiencies(
        &self,
        d: &[usize],
        k: usize,
    ) -> Result<Vec<(usize, usize)>, GraphError> {
        let mut member = vec![false; self.n];
        for &v in d {
            self.check_vertex(v)?;
            member[v - 1] = true;
        }
        let mut out = Vec::new();
        for v in 1..=self.n {
            let mut count = usize::from(member[v - 1]);
            count += self.adj[v - 1].iter().filter(|&&u| member[u - 1]).count();
            if count < k {
                out.push((v, count));
            }
        }
        Ok(out)
    }

    /// Induced subgraph on `keep` plus the map from new labels back to the
    /// original ones (`map[new - 1] = old`). `keep` is deduplicated.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<(Graph, Vec<usize>), GraphError> {
        if keep.is_empty() {
            return Err(GraphError::EmptyKeep);
        }
        let mut map: Vec<usize> = keep.to_vec();
        for &v in &map {
            self.check_vertex(v)?;
        }
        map.sort_unstable();
        map.dedup();
        let mut inverse = vec![0usize; self.n]; // old - 1 -> new, 0 = absent
        for (new0, &old) in map.iter().enumerate() {
            inverse[old - 1] = new0 + 1;
        }
        let adj = map
            .iter()
            .map(|&old| {
                self.adj[old - 1]
                    .iter()
                    .filter_map(|&u| match inverse[u - 1] {
                        0 => None,
                        new => Some(new),
                    })
                    .collect()
            })
            .collect();
        Ok((Graph { n: map.len(), adj }, map))
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut components = Vec::new();
        for start in 1..=self.n {
            if seen[start - 1] {
                continue;
            }
            let mut queue = vec![start];
            seen[start - 1] = true;
            let mut comp = Vec::new();
            while let Some(v) = queue.pop() {
                comp.push(v);
                for &u in &self.adj[v - 1] {
                    if !seen[u - 1] {
                        seen[u - 1] = true;
                        queue.push(u);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }

    /// Complement graph: same vertices, edges exactly where `self` has none.
    pub fn complement(&self) -> Graph {
        let adj = (1..=self.n)
            .map(|v| {
                (1..=self.n)
                    .filter(|&u| u != v && !self.has_edge(u, v))
                    .collect()
            })
            .collect();
        Graph { n: self.n, adj }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|v| (v, v + 1)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn closed_neighborhood_basics() {
        let k3 = Graph::complete(3);
        assert_eq!(k3.closed_neighborhood(1).unwrap(), vec![1, 2, 3]);
        let p3 = path(3);
        assert_eq!(p3.closed_neighborhood(2).unwrap(), vec![1, 2, 3]);
        assert_eq!(
            p3.closed_neighborhood(9),
            Err(GraphError::VertexOutOfRange(9, 3))
        );
    }

    #[test]
    fn universal_vertices_on_complete_graph() {
        let k5 = Graph::complete(5);
        assert_eq!(k5.universal_vertices(), vec![1, 2, 3, 4, 5]);
        assert!(path(4).universal_vertices().is_empty());
    }

    #[test]
    fn augmented_adjacency_edge_cases() {
        // Edgeless graph gives the identity matrix.
        let m = Graph::edgeless(3).augmented_adjacency();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(m.get(i, j), i == j);
            }
        }
        // Complete graph gives the all-ones matrix.
        let j4 = Graph::complete(4).augmented_adjacency();
        assert!((0..4).all(|i| (0..4).all(|j| j4.get(i, j))));
    }

    #[test]
    fn verify_ktuple_zero_and_range() {
        let g = path(3);
        assert!(g.verify_ktuple(&[], 0).unwrap());
        assert!(g.verify_ktuple(&[2], 1).unwrap());
        assert!(!g.verify_ktuple(&[1], 1).unwrap());
        assert!(g.verify_ktuple(&[7], 1).is_err());
    }

    #[test]
    fn whole_vertex_set_iff_min_degree_bound() {
        for g in [path(5), Graph::complete(4), Graph::edgeless(2)] {
            let all: Vec<usize> = g.vertices().collect();
            for k in 0..=g.vertex_count() + 1 {
                assert_eq!(
                    g.verify_ktuple(&all, k).unwrap(),
                    k <= g.min_degree() + 1,
                    "k={k}"
                );
            }
        }
    }

    #[test]
    fn induced_subgraph_relabels() {
        let k4 = Graph::complete(4);
        let (g, map) = k4.induced_subgraph(&[4, 2, 3]).unwrap();
        assert_eq!(map, vec![2, 3, 4]);
        assert!(g.is_complete());
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(k4.induced_subgraph(&[]), Err(GraphError::EmptyKeep));
        // keep = V gives an isomorphic copy under the identity map.
        let (h, id) = k4.induced_subgraph(&[1, 2, 3, 4]).unwrap();
        assert_eq!(id, vec![1, 2, 3, 4]);
        assert_eq!(h, k4);
    }

    #[test]
    fn components_of_two_cliques() {
        let g = Graph::from_edges(4, &[(1, 2), (3, 4)]).unwrap();
        assert_eq!(g.connected_components(), vec![vec![1, 2], vec![3, 4]]);
        assert_eq!(Graph::edgeless(3).connected_components().len(), 3);
        assert!(Graph::complete(3).is_connected());
    }

    #[test]
    fn self_domination_forces_universal() {
        // Any d with verify_ktuple(g, d, |d|) consists of universal vertices.
        let g = Graph::from_edges(4, &[(1, 2), (1, 3), (1, 4), (2, 3)]).unwrap();
        assert!(g.verify_ktuple(&[1], 1).unwrap());
        assert!(!g.verify_ktuple(&[1, 2], 2).unwrap());
        let k3 = Graph::complete(3);
        assert!(k3.verify_ktuple(&[1, 2], 2).unwrap());
    }
}
