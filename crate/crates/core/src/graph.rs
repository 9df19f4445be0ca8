//! Undirected simple graphs over dense integer vertex labels, with the wheel
//! constructor and the query primitives the growth and analysis modules build on.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// Dense vertex label: a graph with `n` vertices uses exactly `0..n`.
pub type VertexId = usize;

/// Default vertex cap for [`SimpleGraph::count_simple_cycles`].
pub const DEFAULT_CYCLE_COUNT_CAP: usize = 12;

/// Canonical 3-cycle identifier: a sorted vertex triple.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Triangle {
    a: VertexId,
    b: VertexId,
    c: VertexId,
}

impl Triangle {
    /// Builds the canonical triangle on three distinct vertices, in any order.
    pub fn new(x: VertexId, y: VertexId, z: VertexId) -> Result<Self> {
        let mut v = [x, y, z];
        v.sort_unstable();
        if v[0] == v[1] || v[1] == v[2] {
            return Err(Error::InvalidParameter(format!(
                "triangle vertices must be distinct, got ({x},{y},{z})"
            )));
        }
        Ok(Triangle {
            a: v[0],
            b: v[1],
            c: v[2],
        })
    }

    pub fn vertices(&self) -> [VertexId; 3] {
        [self.a, self.b, self.c]
    }

    /// The three edges, each as `(min,max)`, in lexicographic order.
    pub fn edges(&self) -> [(VertexId, VertexId); 3] {
        [(self.a, self.b), (self.a, self.c), (self.b, self.c)]
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.a == v || self.b == v || self.c == v
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.c)
    }
}

/// A cycle given as a vertex sequence; the first vertex implicitly closes it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VertexCycle {
    vertices: Vec<VertexId>,
}

impl VertexCycle {
    pub fn new(vertices: Vec<VertexId>) -> Self {
        VertexCycle { vertices }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

impl fmt::Display for VertexCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.vertices {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

/// Undirected loop-free graph in adjacency-set representation.
///
/// The adjacency structure is symmetric by construction; every neighbor id is
/// below the vertex count. Queries are pure, so values can be cloned and sent
/// to concurrent workers freely.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SimpleGraph {
    adj: Vec<BTreeSet<VertexId>>,
    edge_count: usize,
}

impl SimpleGraph {
    /// An edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        SimpleGraph {
            adj: vec![BTreeSet::new(); n],
            edge_count: 0,
        }
    }

    /// The wheel of order `m`: hub `0` joined to every vertex of the rim
    /// cycle `1..m`. Requires `m >= 4`; has `2(m-1)` edges.
    pub fn wheel(m: usize) -> Result<Self> {
        if m < 4 {
            return Err(Error::InvalidParameter(format!(
                "wheel order must be at least 4, got {m}"
            )));
        }
        let mut g = SimpleGraph::new(m);
        for i in 1..m {
            g.add_edge(0, i)?; // spokes
        }
        for i in 1..m - 1 {
            g.add_edge(i, i + 1)?; // rim
        }
        g.add_edge(m - 1, 1)?;
        Ok(g)
    }

    /// Builds a graph on `n` vertices from an edge list.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut g = SimpleGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Appends an isolated vertex and returns its id.
    pub fn add_vertex(&mut self) -> VertexId {
        self.adj.push(BTreeSet::new());
        self.adj.len() - 1
    }

    /// Inserts the undirected edge `{u,v}`. Idempotent on existing edges.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<()> {
        let n = self.adj.len();
        if u >= n || v >= n {
            return Err(Error::InvalidParameter(format!(
                "edge ({u},{v}) out of range for {n} vertices"
            )));
        }
        if u == v {
            return Err(Error::InvalidParameter(format!("loop edge ({u},{u})")));
        }
        if self.adj[u].insert(v) {
            self.adj[v].insert(u);
            self.edge_count += 1;
        }
        Ok(())
    }

    /// Removes the edge `{u,v}` if present.
    pub fn remove_edge(&mut self, u: VertexId, v: VertexId) -> Result<()> {
        let n = self.adj.len();
        if u >= n || v >= n {
            return Err(Error::InvalidParameter(format!(
                "edge ({u},{v}) out of range for {n} vertices"
            )));
        }
        if self.adj[u].remove(&v) {
            self.adj[v].remove(&u);
            self.edge_count -= 1;
        }
        Ok(())
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.adj.len() && self.adj[u].contains(&v)
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adj[v].iter().copied()
    }

    /// All edges as `(u,v)` with `u < v`, in ascending lexicographic order.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (u, nbrs) in self.adj.iter().enumerate() {
            for &v in nbrs.range(u + 1..) {
                out.push((u, v));
            }
        }
        out
    }

    /// Every 3-clique, found by scanning each edge's common neighborhood.
    /// Output is sorted lexicographically on the canonical triples.
    pub fn triangles(&self) -> Vec<Triangle> {
        let mut out = Vec::new();
        for (u, nbrs) in self.adj.iter().enumerate() {
            for &v in nbrs.range(u + 1..) {
                for &w in self.adj[v].range(v + 1..) {
                    if self.adj[u].contains(&w) {
                        out.push(Triangle { a: u, b: v, c: w });
                    }
                }
            }
        }
        out
    }

    /// Length of the shortest cycle, or `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let n = self.adj.len();
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        for start in 0..n {
            dist.fill(usize::MAX);
            parent.fill(usize::MAX);
            dist[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        // Non-tree edge: a cycle of at most this length exists.
                        let len = dist[u] + dist[w] + 1;
                        if best.map_or(true, |b| len < b) {
                            best = Some(len);
                        }
                    }
                }
            }
        }
        best
    }

    fn bfs_eccentricity(&self, start: VertexId) -> Result<usize> {
        let n = self.adj.len();
        let mut dist = vec![usize::MAX; n];
        dist[start] = 0;
        let mut queue = VecDeque::from([start]);
        let mut reached = 1;
        let mut ecc = 0;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    ecc = ecc.max(dist[w]);
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        if reached < n {
            return Err(Error::Domain("diameter of a disconnected graph".into()));
        }
        Ok(ecc)
    }

    /// Exact diameter via all-pairs breadth-first search. The graph must be
    /// connected.
    pub fn diameter(&self) -> Result<usize> {
        let n = self.adj.len();
        if n == 0 {
            return Err(Error::Domain("diameter of the empty graph".into()));
        }
        let mut best = 0;
        for v in 0..n {
            best = best.max(self.bfs_eccentricity(v)?);
        }
        Ok(best)
    }

    /// True iff the sequence visits every vertex exactly once and each
    /// consecutive pair (cyclically) is an edge. Malformed sequences are
    /// simply not Hamiltonian cycles.
    pub fn is_hamiltonian_cycle(&self, cycle: &VertexCycle) -> bool {
        let vs = cycle.vertices();
        let n = self.adj.len();
        if vs.len() != n || n < 3 {
            return false;
        }
        let mut seen = vec![false; n];
        for &v in vs {
            if v >= n || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        (0..n).all(|i| self.has_edge(vs[i], vs[(i + 1) % n]))
    }

    /// Number of distinct simple cycles of length >= 3, with rotations and
    /// reflections identified.
    ///
    /// Counted by depth-first search rooted at each vertex: a cycle is
    /// charged to its smallest vertex, paths may only use larger vertices,
    /// and each cycle is seen once per direction, so the raw count halves.
    /// Exponential; refuses graphs above `max_vertices`.
    pub fn count_simple_cycles(&self, max_vertices: usize) -> Result<u64> {
        let n = self.adj.len();
        if n > max_vertices {
            return Err(Error::ResourceLimit(format!(
                "cycle counting capped at {max_vertices} vertices, graph has {n}"
            )));
        }
        let mut total: u64 = 0;
        let mut used = vec![false; n];
        for root in 0..n {
            used[root] = true;
            total += self.cycle_dfs(root, root, 1, &mut used);
            used[root] = false;
        }
        debug_assert_eq!(total % 2, 0);
        Ok(total / 2)
    }

    fn cycle_dfs(&self, root: VertexId, v: VertexId, depth: usize, used: &mut Vec<bool>) -> u64 {
        let mut found = 0;
        for &w in &self.adj[v] {
            if w == root {
                if depth >= 3 {
                    found += 1;
                }
            } else if w > root && !used[w] {
                used[w] = true;
                found += self.cycle_dfs(root, w, depth + 1, used);
                used[w] = false;
            }
        }
        found
    }

    /// Dense 0/1 adjacency matrix; symmetric with zero diagonal.
    pub fn adjacency_matrix(&self) -> Vec<Vec<u8>> {
        let n = self.adj.len();
        let mut m = vec![vec![0u8; n]; n];
        for (u, nbrs) in self.adj.iter().enumerate() {
            for &v in nbrs {
                m[u][v] = 1;
            }
        }
        m
    }

    /// Structural audit: symmetry, loop-freedom, in-range neighbor ids and a
    /// consistent edge counter.
    pub fn check_structure(&self) -> std::result::Result<(), String> {
        let n = self.adj.len();
        let mut half_edges = 0;
        for (u, nbrs) in self.adj.iter().enumerate() {
            for &v in nbrs {
                if v >= n {
                    return Err(format!("neighbor {v} of {u} out of range"));
                }
                if v == u {
                    return Err(format!("loop at {u}"));
                }
                if !self.adj[v].contains(&u) {
                    return Err(format!("asymmetric edge ({u},{v})"));
                }
                half_edges += 1;
            }
        }
        if half_edges != 2 * self.edge_count {
            return Err(format!(
                "edge counter {} disagrees with adjacency ({} half-edges)",
                self.edge_count, half_edges
            ));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tri(a: usize, b: usize, c: usize) -> Triangle {
        Triangle::new(a, b, c).unwrap()
    }

    /// Independent oracle: cubic scan over all vertex triples.
    fn brute_force_triangles(g: &SimpleGraph) -> Vec<Triangle> {
        let n = g.vertex_count();
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) {
                        out.push(tri(a, b, c));
                    }
                }
            }
        }
        out
    }

    /// The 7-vertex graph drawn in the first construction example: K4 on
    /// {0,1,2,3} plus v4~{0,1,2}, v5~{0,1,4}, v6~{0,2,3}.
    fn figure_one() -> SimpleGraph {
        SimpleGraph::from_edges(
            7,
            &[
                (0, 1),
                (1, 2),
                (0, 2),
                (2, 3),
                (0, 3),
                (1, 3),
                (0, 4),
                (1, 4),
                (2, 4),
                (0, 5),
                (4, 5),
                (1, 5),
                (3, 6),
                (0, 6),
                (2, 6),
            ],
        )
        .unwrap()
    }

    #[test]
    fn wheel_four_is_complete() {
        let g = SimpleGraph::wheel(4).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 6);
        for u in 0..4 {
            for v in u + 1..4 {
                assert!(g.has_edge(u, v));
            }
        }
    }

    #[test]
    fn wheel_five_degrees() {
        let g = SimpleGraph::wheel(5).unwrap();
        assert_eq!(g.edge_count(), 8);
        assert_eq!(g.degree(0), 4);
        for v in 1..5 {
            assert_eq!(g.degree(v), 3);
        }
        assert!(!g.has_edge(1, 3)); // non-adjacent rim pair
    }

    #[test]
    fn wheel_hub_degree() {
        let g = SimpleGraph::wheel(7).unwrap();
        assert_eq!(g.degree(0), 6);
    }

    #[test]
    fn wheel_rejects_small_orders() {
        assert!(matches!(
            SimpleGraph::wheel(3),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn wheel_edge_counts_over_range() {
        for m in 4..=12 {
            let g = SimpleGraph::wheel(m).unwrap();
            assert_eq!(g.edge_count(), 2 * (m - 1));
            let expected_triangles = if m == 4 { m } else { m - 1 };
            assert_eq!(g.triangles().len(), expected_triangles);
        }
    }

    #[test]
    fn add_edge_is_idempotent() {
        let mut g = SimpleGraph::new(3);
        g.add_edge(0, 1).unwrap();
        g.add_edge(1, 0).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn add_edge_rejects_bad_input() {
        let mut g = SimpleGraph::new(3);
        assert!(matches!(g.add_edge(0, 0), Err(Error::InvalidParameter(_))));
        assert!(matches!(g.add_edge(0, 3), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn triangle_enumeration_matches_brute_force() {
        for g in [
            SimpleGraph::wheel(4).unwrap(),
            SimpleGraph::wheel(6).unwrap(),
            figure_one(),
        ] {
            assert_eq!(g.triangles(), brute_force_triangles(&g));
        }
    }

    #[test]
    fn triangle_counts() {
        assert_eq!(SimpleGraph::wheel(4).unwrap().triangles().len(), 4);
        assert_eq!(SimpleGraph::wheel(6).unwrap().triangles().len(), 5);
        assert_eq!(figure_one().triangles().len(), 13); // 3*7 - 8
    }

    #[test]
    fn triangle_canonicalization() {
        assert_eq!(tri(3, 1, 2), tri(1, 2, 3));
        assert!(Triangle::new(1, 1, 2).is_err());
        assert_eq!(tri(1, 2, 3).edges(), [(1, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn girth_of_wheels_is_three() {
        for m in 4..=9 {
            assert_eq!(SimpleGraph::wheel(m).unwrap().girth(), Some(3));
        }
    }

    #[test]
    fn girth_of_forest_is_infinite() {
        let g = SimpleGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.girth(), None);
    }

    #[test]
    fn girth_of_square() {
        let g = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(g.girth(), Some(4));
    }

    #[test]
    fn diameters() {
        assert_eq!(SimpleGraph::wheel(5).unwrap().diameter().unwrap(), 2);
        assert_eq!(SimpleGraph::wheel(4).unwrap().diameter().unwrap(), 1);
        assert_eq!(SimpleGraph::wheel(9).unwrap().diameter().unwrap(), 2);
    }

    #[test]
    fn diameter_requires_connectivity() {
        let g = SimpleGraph::new(2);
        assert!(matches!(g.diameter(), Err(Error::Domain(_))));
    }

    #[test]
    fn hamiltonian_cycle_checks() {
        let g = SimpleGraph::wheel(5).unwrap();
        assert!(g.is_hamiltonian_cycle(&VertexCycle::new(vec![0, 1, 2, 3, 4])));
        assert!(!g.is_hamiltonian_cycle(&VertexCycle::new(vec![0, 1, 2, 3])));
        assert!(!g.is_hamiltonian_cycle(&VertexCycle::new(vec![0, 1, 3, 2, 4])));
        assert!(!g.is_hamiltonian_cycle(&VertexCycle::new(vec![0, 1, 2, 3, 3])));
    }

    #[test]
    fn simple_cycle_counts() {
        assert_eq!(
            SimpleGraph::wheel(4)
                .unwrap()
                .count_simple_cycles(DEFAULT_CYCLE_COUNT_CAP)
                .unwrap(),
            7
        );
        assert_eq!(
            SimpleGraph::wheel(5)
                .unwrap()
                .count_simple_cycles(DEFAULT_CYCLE_COUNT_CAP)
                .unwrap(),
            13
        );
        let triangle = SimpleGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(
            triangle.count_simple_cycles(DEFAULT_CYCLE_COUNT_CAP).unwrap(),
            1
        );
    }

    #[test]
    fn simple_cycle_cap() {
        let g = SimpleGraph::wheel(13).unwrap();
        assert!(matches!(
            g.count_simple_cycles(DEFAULT_CYCLE_COUNT_CAP),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn adjacency_matrix_of_k4() {
        let m = SimpleGraph::wheel(4).unwrap().adjacency_matrix();
        for u in 0..4 {
            for v in 0..4 {
                assert_eq!(m[u][v], u8::from(u != v));
            }
        }
    }

    #[test]
    fn adjacency_row_sums_of_figure_one() {
        let g = figure_one();
        let m = g.adjacency_matrix();
        let sums: Vec<usize> = m
            .iter()
            .map(|row| row.iter().map(|&x| x as usize).sum())
            .collect();
        assert_eq!(sums, vec![6, 5, 5, 4, 4, 3, 3]);
        assert_eq!(sums.iter().sum::<usize>(), 30); // 2 * 15
    }

    #[test]
    fn structure_audit_passes() {
        let g = figure_one();
        assert!(g.check_structure().is_ok());
    }
}
