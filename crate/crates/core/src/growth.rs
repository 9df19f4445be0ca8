//! The wheel-seeded random Apollonian growth process.
//!
//! A state starts as a wheel graph. Each step picks a triangle that was never
//! picked before, stacks a new vertex onto it, and joins the vertex to the
//! triangle's corners. The state also maintains, incrementally, a Hamiltonian
//! cycle (heuristically; see [`extend_hamiltonian`]) and a proper coloring on
//! at most four colors.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::counting::{choosable_count_formula, edge_count_formula, triangle_count_formula};
use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, Triangle, VertexCycle, VertexId};
use crate::report::Check;
use crate::rng::RngStream;

/// Which triangles of the seed are eligible for stacking.
///
/// The two modes differ only for a seed of order 4, whose rim triangle
/// `(1,2,3)` is a 3-cycle of the graph but not an interior face of the usual
/// plane drawing. `AllThreeCycles` exposes it; `PlanarFaces` does not.
#[derive(Copy, Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum GrowthMode {
    #[serde(rename = "all-3-cycles")]
    AllThreeCycles,
    #[serde(rename = "planar-faces")]
    PlanarFaces,
}

impl GrowthMode {
    pub fn as_str(&self) -> &'static str {
        match self {
            GrowthMode::AllThreeCycles => "all-3-cycles",
            GrowthMode::PlanarFaces => "planar-faces",
        }
    }
}

impl fmt::Display for GrowthMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GrowthMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" | "all-3-cycles" => Ok(GrowthMode::AllThreeCycles),
            "planar-faces" => Ok(GrowthMode::PlanarFaces),
            other => Err(Error::InvalidParameter(format!(
                "unknown growth mode '{other}' (expected 'all' or 'planar-faces')"
            ))),
        }
    }
}

/// Vertex coloring on the palette {0,1,2,3}.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Coloring {
    colors: Vec<u8>,
}

impl Coloring {
    pub fn from_colors(colors: Vec<u8>) -> Self {
        Coloring { colors }
    }

    pub fn color(&self, v: VertexId) -> u8 {
        self.colors[v]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.colors
    }

    /// Number of distinct colors actually used.
    pub fn colors_used(&self) -> usize {
        let mut seen = [false; 256];
        let mut count = 0;
        for &c in &self.colors {
            if !seen[c as usize] {
                seen[c as usize] = true;
                count += 1;
            }
        }
        count
    }

    /// True iff no edge of `g` joins two equal colors and every vertex of `g`
    /// has a color in {0,1,2,3}.
    pub fn is_proper(&self, g: &SimpleGraph) -> bool {
        if self.colors.len() != g.vertex_count() {
            return false;
        }
        if self.colors.iter().any(|&c| c > 3) {
            return false;
        }
        g.edges()
            .iter()
            .all(|&(u, v)| self.colors[u] != self.colors[v])
    }
}

/// Splices `v` into `cycle` across one edge of `t`.
///
/// If at least one of `t`'s three edges lies on the cycle, the
/// lexicographically smallest such edge `(u,w)` is replaced by `u -> v -> w`
/// and the new cycle is returned; otherwise `None`. The caller guarantees `v`
/// is not on the cycle and `t`'s corners are. A `None` is an ordinary value:
/// the incremental maintenance hands over to the exact search when it occurs.
pub fn extend_hamiltonian(cycle: &VertexCycle, t: Triangle, v: VertexId) -> Option<VertexCycle> {
    let vs = cycle.vertices();
    let k = vs.len();
    let t_edges = t.edges();
    let mut best: Option<((VertexId, VertexId), usize)> = None;
    for i in 0..k {
        let a = vs[i];
        let b = vs[(i + 1) % k];
        let e = (a.min(b), a.max(b));
        if t_edges.contains(&e) && best.map_or(true, |(be, _)| e < be) {
            best = Some((e, i));
        }
    }
    best.map(|(_, i)| {
        let mut out = vs.to_vec();
        out.insert(i + 1, v);
        VertexCycle::new(out)
    })
}

/// Colors `v` with the unique palette color missing from `t`'s corners.
///
/// Panics if the corners do not carry three distinct colors; that cannot
/// happen through the public step path and indicates internal corruption.
pub fn extend_coloring(coloring: &Coloring, t: Triangle, v: VertexId) -> Coloring {
    assert_eq!(
        v,
        coloring.len(),
        "coloring invariant violated: new vertex {v} is not the next index"
    );
    let [a, b, c] = t.vertices();
    let used = [coloring.color(a), coloring.color(b), coloring.color(c)];
    assert!(
        used[0] != used[1] && used[1] != used[2] && used[0] != used[2],
        "coloring invariant violated: triangle {t} carries colors {used:?}"
    );
    let free = (0u8..4)
        .find(|c| !used.contains(c))
        .expect("a 3-colored triangle leaves one palette color free");
    let mut colors = coloring.colors.clone();
    colors.push(free);
    Coloring { colors }
}

/// Choosable-triangle pool: contiguous storage with a position map, giving
/// O(1) uniform sampling and swap-removal. Insertion order is canonical
/// (seed triangles sorted, then each step's three new triangles in
/// lexicographic order), which pins down the sampled indexing.
#[derive(Clone, Debug, Default)]
struct TrianglePool {
    items: Vec<Triangle>,
    index: HashMap<Triangle, usize>,
}

impl TrianglePool {
    fn insert(&mut self, t: Triangle) {
        debug_assert!(!self.index.contains_key(&t));
        self.index.insert(t, self.items.len());
        self.items.push(t);
    }

    fn remove(&mut self, t: &Triangle) -> bool {
        match self.index.remove(t) {
            None => false,
            Some(pos) => {
                self.items.swap_remove(pos);
                if pos < self.items.len() {
                    self.index.insert(self.items[pos], pos);
                }
                true
            }
        }
    }

    fn contains(&self, t: &Triangle) -> bool {
        self.index.contains_key(t)
    }

    fn len(&self) -> usize {
        self.items.len()
    }

    fn get(&self, i: usize) -> Triangle {
        self.items[i]
    }

    fn sorted(&self) -> Vec<Triangle> {
        let mut v = self.items.clone();
        v.sort_unstable();
        v
    }
}

/// Full construction state: graph, triangle bookkeeping, history, and the
/// incrementally maintained Hamiltonian cycle and coloring.
///
/// A state is a value; growing two clones in parallel is fine, feeding one
/// state concurrent steps is not.
#[derive(Clone, Debug)]
pub struct WragState {
    m: usize,
    mode: GrowthMode,
    graph: SimpleGraph,
    choosable: TrianglePool,
    chosen: BTreeSet<Triangle>,
    history: Vec<Triangle>,
    ham_cycle: Option<VertexCycle>,
    ham_heuristic_failed: bool,
    coloring: Coloring,
}

impl WragState {
    /// The step-0 state: the seed wheel, its triangle pool, the rim-walk
    /// Hamiltonian cycle `(0,1,...,m-1)` and the canonical wheel coloring
    /// (hub 0; rim alternating 1,2; the last rim vertex takes 3 when the rim
    /// cycle is odd, i.e. when `m` is even).
    pub fn seed(m: usize, mode: GrowthMode) -> Result<Self> {
        let graph = SimpleGraph::wheel(m)?;
        let mut choosable = TrianglePool::default();
        let mut seed_triangles = graph.triangles();
        seed_triangles.sort_unstable();
        let rim = if m == 4 {
            Some(Triangle::new(1, 2, 3).expect("distinct"))
        } else {
            None
        };
        for t in seed_triangles {
            if mode == GrowthMode::PlanarFaces && Some(t) == rim {
                continue;
            }
            choosable.insert(t);
        }

        let mut colors = vec![0u8; m];
        for i in 1..m {
            colors[i] = if i == m - 1 && m % 2 == 0 {
                3
            } else if i % 2 == 1 {
                1
            } else {
                2
            };
        }

        Ok(WragState {
            m,
            mode,
            graph,
            choosable,
            chosen: BTreeSet::new(),
            history: Vec::new(),
            ham_cycle: Some(VertexCycle::new((0..m).collect())),
            ham_heuristic_failed: false,
            coloring: Coloring::from_colors(colors),
        })
    }

    pub fn seed_order(&self) -> usize {
        self.m
    }

    pub fn mode(&self) -> GrowthMode {
        self.mode
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    /// Growth steps taken so far.
    pub fn steps(&self) -> usize {
        self.history.len()
    }

    pub fn order(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn history(&self) -> &[Triangle] {
        &self.history
    }

    pub fn choosable_len(&self) -> usize {
        self.choosable.len()
    }

    pub fn is_choosable(&self, t: &Triangle) -> bool {
        self.choosable.contains(t)
    }

    /// The choosable pool in canonical lexicographic order.
    pub fn choosable_sorted(&self) -> Vec<Triangle> {
        self.choosable.sorted()
    }

    pub fn chosen(&self) -> &BTreeSet<Triangle> {
        &self.chosen
    }

    pub fn ham_cycle(&self) -> Option<&VertexCycle> {
        self.ham_cycle.as_ref()
    }

    pub fn ham_heuristic_failed(&self) -> bool {
        self.ham_heuristic_failed
    }

    pub fn coloring(&self) -> &Coloring {
        &self.coloring
    }

    /// Stacks a new vertex onto `t`: the vertex takes the next dense label,
    /// is joined to `t`'s corners, `t` moves from choosable to chosen, the
    /// three triangles through the new vertex enter the pool, and the
    /// Hamiltonian cycle and coloring are extended. Returns the new vertex.
    pub fn step_with(&mut self, t: Triangle) -> Result<VertexId> {
        if !self.choosable.contains(&t) {
            return Err(if self.chosen.contains(&t) {
                Error::InvalidChoice(format!("triangle {t} was already chosen"))
            } else {
                Error::InvalidChoice(format!("triangle {t} is not in the choosable pool"))
            });
        }
        let v = self.graph.add_vertex();
        for u in t.vertices() {
            self.graph.add_edge(v, u)?;
        }
        self.choosable.remove(&t);
        self.chosen.insert(t);
        // t.edges() is lexicographically sorted and v exceeds every existing
        // label, so the three insertions keep canonical order.
        for (x, y) in t.edges() {
            self.choosable
                .insert(Triangle::new(x, y, v).expect("new vertex is distinct"));
        }
        self.history.push(t);

        if !self.ham_heuristic_failed {
            let cycle = self.ham_cycle.as_ref().expect("cycle present until failure");
            match extend_hamiltonian(cycle, t, v) {
                Some(c) => self.ham_cycle = Some(c),
                None => {
                    self.ham_heuristic_failed = true;
                    self.ham_cycle = None;
                }
            }
        }
        self.coloring = extend_coloring(&self.coloring, t, v);
        Ok(v)
    }

    /// One uniform random step over the current pool. Returns the triangle
    /// chosen. The pool is never empty: each step removes one triangle and
    /// inserts three.
    pub fn step_random(&mut self, rng: &mut RngStream) -> Result<Triangle> {
        debug_assert!(self.choosable.len() >= 2, "pool cannot stall");
        let idx = rng.below(self.choosable.len() as u64) as usize;
        let t = self.choosable.get(idx);
        self.step_with(t)?;
        Ok(t)
    }

    /// Invariant audit, one named check per claim, in stable order.
    pub fn audit(&self) -> Vec<Check> {
        let i = self.history.len();
        let n = self.m + i;
        let mut checks = Vec::new();

        checks.push(Check::compare(
            "vertex-count",
            self.graph.vertex_count(),
            n,
        ));
        checks.push(Check::compare(
            "edge-count",
            self.graph.edge_count(),
            edge_count_formula(self.m, n).unwrap_or(usize::MAX),
        ));

        let triangles: BTreeSet<Triangle> = self.graph.triangles().into_iter().collect();
        checks.push(Check::compare(
            "triangle-count",
            triangles.len(),
            triangle_count_formula(self.m, i).unwrap_or(usize::MAX),
        ));
        checks.push(Check::compare(
            "choosable-count",
            self.choosable.len(),
            choosable_count_formula(self.m, i, self.mode).unwrap_or(usize::MAX),
        ));

        let pool: BTreeSet<Triangle> = self.choosable.items.iter().copied().collect();
        let disjoint = pool.is_disjoint(&self.chosen);
        checks.push(Check::bool("pool-chosen-disjoint", disjoint));

        // In planar-faces mode the order-4 seed's rim triangle is tracked
        // nowhere, so the union misses exactly that one triangle.
        let mut expected_union = triangles.clone();
        if self.mode == GrowthMode::PlanarFaces && self.m == 4 {
            expected_union.remove(&Triangle::new(1, 2, 3).expect("distinct"));
        }
        let union: BTreeSet<Triangle> = pool.union(&self.chosen).copied().collect();
        checks.push(Check::bool("pool-chosen-cover-triangles", union == expected_union));

        checks.push(Check::bool(
            "graph-structure",
            self.graph.check_structure().is_ok(),
        ));
        checks.push(Check::bool(
            "coloring-proper",
            self.coloring.is_proper(&self.graph),
        ));
        checks.push(Check::bool(
            "coloring-at-most-4",
            self.coloring.colors_used() <= 4,
        ));
        let ham_ok = if self.ham_heuristic_failed {
            self.ham_cycle.is_none()
        } else {
            self.ham_cycle
                .as_ref()
                .is_some_and(|c| self.graph.is_hamiltonian_cycle(c))
        };
        checks.push(Check::bool("ham-cycle-valid", ham_ok));
        checks
    }

    pub fn audit_ok(&self) -> bool {
        self.audit().iter().all(|c| c.passed)
    }
}

/// Replays a recorded history on a fresh seed. Every derived field
/// (edges, coloring, Hamiltonian cycle) is re-computed, never trusted.
pub fn rebuild_from_history(m: usize, mode: GrowthMode, history: &[Triangle]) -> Result<WragState> {
    let mut state = WragState::seed(m, mode)?;
    for &t in history {
        state.step_with(t)?;
    }
    Ok(state)
}

/// Result of [`generate`]: the grown state, plus a flag for the degenerate
/// `n = m` request, which returns the bare seed.
pub struct Generated {
    pub state: WragState,
    pub seed_only: bool,
}

/// Grows a graph of order `n` from a seed of order `m` with `n - m` uniform
/// random steps. Pure function of `(m, n, rng_seed, mode)`.
pub fn generate(m: usize, n: usize, rng_seed: u64, mode: GrowthMode) -> Result<Generated> {
    if n < m {
        return Err(Error::InvalidParameter(format!(
            "order {n} below seed order {m}"
        )));
    }
    let mut state = WragState::seed(m, mode)?;
    let mut rng = RngStream::new(rng_seed);
    for _ in 0..(n - m) {
        state.step_random(&mut rng)?;
    }
    Ok(Generated {
        seed_only: n == m,
        state,
    })
}
