//! Graph representations with designated terminals, plus the class checks
//! (chordality, tournament, maximum degree) other modules rely on as
//! preconditions.
//!
//! Vertices are dense indices `0..n`. External names are mapped to indices
//! at the I/O boundary only; everything in here works on plain `usize` ids.

use std::collections::BTreeSet;

use crate::error::{Result, TournamentDefect, TrackError};

pub type VertexId = usize;
pub type EdgeId = usize;

/// Vertex set claimed to distinguish all s-t paths.
pub type TrackingSet = BTreeSet<VertexId>;

/// Ordered sequence of trackers observed along a path.
pub type TrackerSequence = Vec<VertexId>;

/// A simple graph (directed or undirected) with designated terminals.
///
/// No self loops and no parallel edges. For directed graphs a pair may be
/// connected in both directions; that is two distinct arcs, not a parallel
/// edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StGraph {
    directed: bool,
    out_adj: Vec<BTreeSet<VertexId>>,
    in_adj: Vec<BTreeSet<VertexId>>,
    s: VertexId,
    t: VertexId,
}

impl StGraph {
    pub fn undirected(
        n: usize,
        s: VertexId,
        t: VertexId,
        edges: &[(VertexId, VertexId)],
    ) -> Result<Self> {
        let mut g = Self::empty(false, n, s, t)?;
        for &(u, v) in edges {
            g.check_endpoints(u, v)?;
            if g.out_adj[u].contains(&v) {
                return Err(TrackError::InvalidInput(format!(
                    "parallel edge ({u}, {v})"
                )));
            }
            g.out_adj[u].insert(v);
            g.out_adj[v].insert(u);
        }
        Ok(g)
    }

    pub fn directed(
        n: usize,
        s: VertexId,
        t: VertexId,
        arcs: &[(VertexId, VertexId)],
    ) -> Result<Self> {
        let mut g = Self::empty(true, n, s, t)?;
        for &(u, v) in arcs {
            g.check_endpoints(u, v)?;
            if g.out_adj[u].contains(&v) {
                return Err(TrackError::InvalidInput(format!("parallel arc ({u}, {v})")));
            }
            g.out_adj[u].insert(v);
            g.in_adj[v].insert(u);
        }
        Ok(g)
    }

    fn empty(directed: bool, n: usize, s: VertexId, t: VertexId) -> Result<Self> {
        if s >= n || t >= n {
            return Err(TrackError::InvalidInput(format!(
                "terminals {s}, {t} out of range for {n} vertices"
            )));
        }
        if s == t {
            return Err(TrackError::InvalidInput(
                "terminals must be distinct".to_string(),
            ));
        }
        Ok(StGraph {
            directed,
            out_adj: vec![BTreeSet::new(); n],
            in_adj: vec![BTreeSet::new(); if directed { n } else { 0 }],
            s,
            t,
        })
    }

    fn check_endpoints(&self, u: VertexId, v: VertexId) -> Result<()> {
        let n = self.n();
        if u >= n || v >= n {
            return Err(TrackError::InvalidInput(format!(
                "edge ({u}, {v}) out of range for {n} vertices"
            )));
        }
        if u == v {
            return Err(TrackError::InvalidInput(format!("self loop at {u}")));
        }
        Ok(())
    }

    /// Rebuilds a graph with the same shape but a different edge set.
    pub fn with_edges(&self, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        if self.directed {
            Self::directed(self.n(), self.s, self.t, edges)
        } else {
            Self::undirected(self.n(), self.s, self.t, edges)
        }
    }

    pub fn n(&self) -> usize {
        self.out_adj.len()
    }

    pub fn s(&self) -> VertexId {
        self.s
    }

    pub fn t(&self) -> VertexId {
        self.t
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    /// Neighbors of `v` in an undirected graph, out-neighbors in a directed one.
    pub fn out_neighbors(&self, v: VertexId) -> &BTreeSet<VertexId> {
        &self.out_adj[v]
    }

    pub fn in_neighbors(&self, v: VertexId) -> &BTreeSet<VertexId> {
        if self.directed {
            &self.in_adj[v]
        } else {
            &self.out_adj[v]
        }
    }

    /// Undirected neighborhood N(v).
    pub fn neighbors(&self, v: VertexId) -> &BTreeSet<VertexId> {
        &self.out_adj[v]
    }

    /// Edge test. For directed graphs this is the arc u -> v.
    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.n() && v < self.n() && self.out_adj[u].contains(&v)
    }

    pub fn degree(&self, v: VertexId) -> usize {
        if self.directed {
            self.out_adj[v].len() + self.in_adj[v].len()
        } else {
            self.out_adj[v].len()
        }
    }

    /// All edges in ascending `(u, v)` order. Undirected edges are reported
    /// once with `u < v`; directed graphs report every arc.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            for &v in &self.out_adj[u] {
                if self.directed || u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        let total: usize = self.out_adj.iter().map(|a| a.len()).sum();
        if self.directed {
            total
        } else {
            total / 2
        }
    }
}

/// Vertex-removal mask: a subgraph view without copying the graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mask {
    removed: Vec<bool>,
}

impl Mask {
    pub fn allow_all(n: usize) -> Self {
        Mask {
            removed: vec![false; n],
        }
    }

    pub fn removing<I: IntoIterator<Item = VertexId>>(n: usize, vertices: I) -> Self {
        let mut m = Mask::allow_all(n);
        for v in vertices {
            m.remove(v);
        }
        m
    }

    pub fn remove(&mut self, v: VertexId) {
        self.removed[v] = true;
    }

    pub fn is_removed(&self, v: VertexId) -> bool {
        self.removed[v]
    }

    pub fn n(&self) -> usize {
        self.removed.len()
    }
}

/// A simple path, stored as its vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    pub vertices: Vec<VertexId>,
}

impl Path {
    pub fn new(vertices: Vec<VertexId>) -> Self {
        Path { vertices }
    }

    pub fn first(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn last(&self) -> VertexId {
        *self.vertices.last().unwrap()
    }

    pub fn len_edges(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    /// True when `a` is immediately followed by `b` somewhere on the path.
    pub fn has_consecutive(&self, a: VertexId, b: VertexId) -> bool {
        self.vertices.windows(2).any(|w| w[0] == a && w[1] == b)
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    /// Validates the path as a simple `from`-`to` path in the masked view of `g`.
    pub fn is_valid_between(
        &self,
        g: &StGraph,
        mask: &Mask,
        from: VertexId,
        to: VertexId,
    ) -> bool {
        if self.vertices.is_empty() || self.first() != from || self.last() != to {
            return false;
        }
        let distinct: BTreeSet<_> = self.vertices.iter().collect();
        if distinct.len() != self.vertices.len() {
            return false;
        }
        if self.vertices.iter().any(|&v| v >= g.n() || mask.is_removed(v)) {
            return false;
        }
        self.vertices.windows(2).all(|w| g.has_edge(w[0], w[1]))
    }

    pub fn is_valid_st(&self, g: &StGraph, mask: &Mask) -> bool {
        self.is_valid_between(g, mask, g.s(), g.t())
    }
}

/// An edge of a weighted multigraph. The id is stable under reduction.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiEdge {
    pub id: EdgeId,
    pub u: VertexId,
    pub v: VertexId,
    pub weight: f64,
}

/// Undirected edge-weighted graph with terminals; parallel edges permitted.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedMultigraph {
    n: usize,
    s: VertexId,
    t: VertexId,
    edges: Vec<MultiEdge>,
}

impl WeightedMultigraph {
    pub fn new(
        n: usize,
        s: VertexId,
        t: VertexId,
        edges: &[(VertexId, VertexId, f64)],
    ) -> Result<Self> {
        if s >= n || t >= n {
            return Err(TrackError::InvalidInput(format!(
                "terminals {s}, {t} out of range for {n} vertices"
            )));
        }
        if s == t {
            return Err(TrackError::InvalidInput(
                "terminals must be distinct".to_string(),
            ));
        }
        let mut out = Vec::with_capacity(edges.len());
        for (id, &(u, v, w)) in edges.iter().enumerate() {
            if u >= n || v >= n {
                return Err(TrackError::InvalidInput(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(TrackError::InvalidInput(format!("self loop at {u}")));
            }
            if !w.is_finite() {
                return Err(TrackError::InvalidInput(format!(
                    "edge ({u}, {v}) has non-finite weight"
                )));
            }
            out.push(MultiEdge { id, u, v, weight: w });
        }
        Ok(WeightedMultigraph {
            n,
            s,
            t,
            edges: out,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn s(&self) -> VertexId {
        self.s
    }

    pub fn t(&self) -> VertexId {
        self.t
    }

    pub fn edges(&self) -> &[MultiEdge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> Option<&MultiEdge> {
        self.edges
            .binary_search_by_key(&id, |e| e.id)
            .ok()
            .map(|i| &self.edges[i])
    }

    pub fn total_weight(&self) -> f64 {
        self.edges.iter().map(|e| e.weight).sum()
    }

    /// Keeps only the listed edges; ids are preserved.
    pub fn filtered(&self, keep: &BTreeSet<EdgeId>) -> Self {
        WeightedMultigraph {
            n: self.n,
            s: self.s,
            t: self.t,
            edges: self
                .edges
                .iter()
                .filter(|e| keep.contains(&e.id))
                .cloned()
                .collect(),
        }
    }

    /// Per-vertex incidence lists sorted by `(neighbor, edge id)`.
    pub fn adjacency(&self) -> Vec<Vec<(VertexId, EdgeId)>> {
        let mut adj = vec![Vec::new(); self.n];
        for e in &self.edges {
            adj[e.u].push((e.v, e.id));
            adj[e.v].push((e.u, e.id));
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        adj
    }
}

/// Path through a multigraph: the vertex sequence plus the ids of the edges
/// traversed, which disambiguates parallel edges.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiPath {
    pub vertices: Vec<VertexId>,
    pub edge_ids: Vec<EdgeId>,
}

/// Outcome of the chordality check: a perfect elimination ordering, or a
/// chordless cycle of length at least four as a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChordalityCheck {
    Chordal { elimination_order: Vec<VertexId> },
    NotChordal { chordless_cycle: Vec<VertexId> },
}

impl ChordalityCheck {
    pub fn is_chordal(&self) -> bool {
        matches!(self, ChordalityCheck::Chordal { .. })
    }
}

/// Chordality recognition by lexicographic breadth-first search: compute a
/// candidate perfect elimination ordering and validate it. On failure the
/// graph contains a chordless cycle, which is located and returned.
pub fn is_chordal(g: &StGraph) -> Result<ChordalityCheck> {
    if g.is_directed() {
        return Err(TrackError::ExpectedUndirected);
    }
    let visit_order = lex_bfs(g);
    let elimination_order: Vec<VertexId> = visit_order.into_iter().rev().collect();
    if validate_peo(g, &elimination_order) {
        Ok(ChordalityCheck::Chordal { elimination_order })
    } else {
        let cycle = find_chordless_cycle(g)
            .expect("perfect elimination ordering rejected, so a chordless cycle exists");
        Ok(ChordalityCheck::NotChordal {
            chordless_cycle: cycle,
        })
    }
}

/// Lexicographic BFS visit order; ties broken toward the smallest id.
fn lex_bfs(g: &StGraph) -> Vec<VertexId> {
    let n = g.n();
    let mut labels: Vec<Vec<u32>> = vec![Vec::new(); n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let mut best: Option<VertexId> = None;
        for v in 0..n {
            if visited[v] {
                continue;
            }
            match best {
                None => best = Some(v),
                Some(b) if labels[v] > labels[b] => best = Some(v),
                _ => {}
            }
        }
        let v = best.expect("unvisited vertex remains");
        visited[v] = true;
        order.push(v);
        let stamp = (n - step) as u32;
        for &w in g.neighbors(v) {
            if !visited[w] {
                labels[w].push(stamp);
            }
        }
    }
    order
}

/// Checks the perfect elimination property: every vertex's first later
/// neighbor must be adjacent to all its other later neighbors.
fn validate_peo(g: &StGraph, order: &[VertexId]) -> bool {
    let n = g.n();
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for &v in order {
        let later: Vec<VertexId> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| pos[w] > pos[v])
            .collect();
        if later.len() < 2 {
            continue;
        }
        let parent = *later
            .iter()
            .min_by_key(|&&w| pos[w])
            .expect("nonempty later neighborhood");
        for &w in &later {
            if w != parent && !g.has_edge(parent, w) {
                return false;
            }
        }
    }
    true
}

/// Locates a chordless cycle of length >= 4 in a non-chordal graph.
///
/// For some vertex `v` with non-adjacent neighbors `x`, `y`, a shortest
/// x-y path avoiding the rest of N[v] closes a chordless cycle through `v`.
/// Such a triple exists whenever the graph has a hole.
fn find_chordless_cycle(g: &StGraph) -> Option<Vec<VertexId>> {
    let n = g.n();
    for v in 0..n {
        let nb: Vec<VertexId> = g.neighbors(v).iter().copied().collect();
        for (i, &x) in nb.iter().enumerate() {
            for &y in &nb[i + 1..] {
                if g.has_edge(x, y) {
                    continue;
                }
                let mut blocked = vec![false; n];
                blocked[v] = true;
                for &w in &nb {
                    if w != x && w != y {
                        blocked[w] = true;
                    }
                }
                if let Some(path) = bfs_path(g, &blocked, x, y) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

/// Shortest path from `from` to `to` over unblocked vertices; deterministic
/// because neighbors are explored in ascending order.
fn bfs_path(g: &StGraph, blocked: &[bool], from: VertexId, to: VertexId) -> Option<Vec<VertexId>> {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    parent[from] = from;
    queue.push_back(from);
    while let Some(u) = queue.pop_front() {
        if u == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = parent[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for &w in g.out_neighbors(u) {
            if !blocked[w] && parent[w] == usize::MAX {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    None
}

/// True when the directed graph has an arc between every unordered pair,
/// in exactly one direction.
pub fn is_tournament(g: &StGraph) -> Result<bool> {
    Ok(tournament_defect(g)?.is_none())
}

/// Locates the first pair violating the tournament property, if any.
pub fn tournament_defect(g: &StGraph) -> Result<Option<TournamentDefect>> {
    if !g.is_directed() {
        return Err(TrackError::ExpectedDirected);
    }
    let n = g.n();
    for u in 0..n {
        for v in u + 1..n {
            let uv = g.has_edge(u, v);
            let vu = g.has_edge(v, u);
            match (uv, vu) {
                (true, true) => return Ok(Some(TournamentDefect::BothDirections(u, v))),
                (false, false) => return Ok(Some(TournamentDefect::MissingPair(u, v))),
                _ => {}
            }
        }
    }
    Ok(None)
}

/// Maximum degree; for directed graphs in-degree plus out-degree.
pub fn max_degree(g: &StGraph) -> usize {
    (0..g.n()).map(|v| g.degree(v)).max().unwrap_or(0)
}

/// Acyclicity of the graph after removing `removed`. Undirected graphs are
/// checked for graph-theoretic cycles, directed ones for directed cycles.
pub fn is_acyclic_after_removal(g: &StGraph, removed: &BTreeSet<VertexId>) -> bool {
    let n = g.n();
    let alive = |v: VertexId| !removed.contains(&v);
    if g.is_directed() {
        // DFS three-color cycle detection.
        let mut color = vec![0u8; n];
        for start in 0..n {
            if !alive(start) || color[start] != 0 {
                continue;
            }
            let mut stack = vec![(start, false)];
            while let Some((u, done)) = stack.pop() {
                if done {
                    color[u] = 2;
                    continue;
                }
                if color[u] == 2 {
                    continue;
                }
                if color[u] == 1 {
                    continue;
                }
                color[u] = 1;
                stack.push((u, true));
                for &w in g.out_neighbors(u) {
                    if !alive(w) {
                        continue;
                    }
                    if color[w] == 1 {
                        return false;
                    }
                    if color[w] == 0 {
                        stack.push((w, false));
                    }
                }
            }
        }
        true
    } else {
        // A forest has strictly fewer edges than vertices in each component.
        let mut seen = vec![false; n];
        for start in 0..n {
            if !alive(start) || seen[start] {
                continue;
            }
            let mut verts = 0usize;
            let mut half_edges = 0usize;
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(u) = stack.pop() {
                verts += 1;
                for &w in g.neighbors(u) {
                    if !alive(w) {
                        continue;
                    }
                    half_edges += 1;
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            if half_edges / 2 >= verts {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Triangle on s, t, x.
    pub(crate) fn triangle() -> StGraph {
        StGraph::undirected(3, 0, 1, &[(0, 1), (0, 2), (1, 2)]).unwrap()
    }

    /// Chordless four-cycle s - a - t - b - s.
    pub(crate) fn diamond() -> StGraph {
        StGraph::undirected(4, 0, 2, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    /// Fan: path s - v1 - ... - v_{n-3} - t plus an apex adjacent to everything.
    pub(crate) fn fan(n: usize) -> StGraph {
        assert!(n >= 4);
        // ids: s = 0, t = 1, x = 2, v1.. = 3..
        let mut edges = vec![(0, 3)];
        for i in 0..n - 4 {
            edges.push((3 + i, 4 + i));
        }
        edges.push((n - 1, 1));
        edges.push((2, 0));
        edges.push((2, 1));
        for i in 0..n - 3 {
            edges.push((2, 3 + i));
        }
        StGraph::undirected(n, 0, 1, &edges).unwrap()
    }

    /// Transitive orientation of K4: s -> a, b, t; a -> b, t; b -> t.
    pub(crate) fn tour4() -> StGraph {
        StGraph::directed(4, 0, 3, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    /// Exhaustive chordality oracle: every simple cycle of length >= 4 must
    /// have a chord. Only usable at desk scale.
    pub(crate) fn brute_force_chordal(g: &StGraph) -> bool {
        let n = g.n();
        // Enumerate cycles as closed walks anchored at their smallest vertex.
        fn dfs(
            g: &StGraph,
            anchor: VertexId,
            path: &mut Vec<VertexId>,
            on_path: &mut Vec<bool>,
            ok: &mut bool,
        ) {
            let last = *path.last().unwrap();
            for &w in g.neighbors(last) {
                if w == anchor && path.len() >= 3 {
                    // Found a cycle; second vertex < last vertex dedups the
                    // two traversal directions.
                    if path[1] < *path.last().unwrap() && path.len() >= 4 {
                        let has_chord = (0..path.len()).any(|i| {
                            ((i + 2)..path.len()).any(|j| {
                                !(i == 0 && j == path.len() - 1) && g.has_edge(path[i], path[j])
                            })
                        });
                        if !has_chord {
                            *ok = false;
                        }
                    }
                } else if w > anchor && !on_path[w] {
                    path.push(w);
                    on_path[w] = true;
                    dfs(g, anchor, path, on_path, ok);
                    on_path[w] = false;
                    path.pop();
                    if !*ok {
                        return;
                    }
                }
            }
        }
        let mut ok = true;
        for anchor in 0..n {
            let mut on_path = vec![false; n];
            on_path[anchor] = true;
            let mut path = vec![anchor];
            dfs(g, anchor, &mut path, &mut on_path, &mut ok);
            if !ok {
                return false;
            }
        }
        true
    }

    #[test]
    fn triangle_is_chordal() {
        match is_chordal(&triangle()).unwrap() {
            ChordalityCheck::Chordal { elimination_order } => {
                assert_eq!(elimination_order.len(), 3);
            }
            other => panic!("expected chordal, got {other:?}"),
        }
    }

    #[test]
    fn diamond_is_not_chordal_with_witness() {
        match is_chordal(&diamond()).unwrap() {
            ChordalityCheck::NotChordal { chordless_cycle } => {
                assert_eq!(chordless_cycle, vec![0, 1, 2, 3]);
            }
            other => panic!("expected chordless cycle, got {other:?}"),
        }
    }

    #[test]
    fn fan5_is_chordal_and_matches_brute_force() {
        let g = fan(5);
        assert!(is_chordal(&g).unwrap().is_chordal());
        assert!(brute_force_chordal(&g));
    }

    #[test]
    fn chordality_rejects_directed_input() {
        assert_eq!(
            is_chordal(&tour4()).unwrap_err(),
            TrackError::ExpectedUndirected
        );
    }

    #[test]
    fn peo_later_neighbors_form_cliques() {
        for g in [triangle(), fan(5), fan(7)] {
            let ChordalityCheck::Chordal { elimination_order } = is_chordal(&g).unwrap() else {
                panic!("expected chordal");
            };
            let mut pos = vec![0; g.n()];
            for (i, &v) in elimination_order.iter().enumerate() {
                pos[v] = i;
            }
            for &v in &elimination_order {
                let later: Vec<_> = g
                    .neighbors(v)
                    .iter()
                    .copied()
                    .filter(|&w| pos[w] > pos[v])
                    .collect();
                for (i, &a) in later.iter().enumerate() {
                    for &b in &later[i + 1..] {
                        assert!(g.has_edge(a, b), "later neighbors {a}, {b} of {v} not adjacent");
                    }
                }
            }
        }
    }

    #[test]
    fn chordality_agrees_with_brute_force_on_random_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(3..=9);
            let p = rng.gen_range(0.15..0.5);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            let g = StGraph::undirected(n, 0, 1, &edges).unwrap();
            assert_eq!(
                is_chordal(&g).unwrap().is_chordal(),
                brute_force_chordal(&g)
            );
        }
    }

    #[test]
    fn tournament_checks() {
        assert!(is_tournament(&tour4()).unwrap());
        let missing =
            StGraph::directed(4, 0, 3, &[(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)]).unwrap();
        assert_eq!(
            tournament_defect(&missing).unwrap(),
            Some(TournamentDefect::MissingPair(1, 2))
        );
        let doubled = StGraph::directed(
            4,
            0,
            3,
            &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 1), (1, 3), (2, 3)],
        )
        .unwrap();
        assert_eq!(
            tournament_defect(&doubled).unwrap(),
            Some(TournamentDefect::BothDirections(1, 2))
        );
        assert_eq!(
            is_tournament(&diamond()).unwrap_err(),
            TrackError::ExpectedDirected
        );
    }

    #[test]
    fn max_degree_examples() {
        assert_eq!(max_degree(&diamond()), 2);
        assert_eq!(max_degree(&triangle()), 2);
        // Apex of the fan touches s, t and both path vertices.
        assert_eq!(max_degree(&fan(5)), 4);
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert!(StGraph::undirected(3, 0, 0, &[]).is_err());
        assert!(StGraph::undirected(3, 0, 1, &[(1, 1)]).is_err());
        assert!(StGraph::undirected(3, 0, 1, &[(0, 1), (1, 0)]).is_err());
        assert!(StGraph::undirected(2, 0, 3, &[]).is_err());
        assert!(StGraph::directed(3, 0, 1, &[(0, 1), (0, 1)]).is_err());
        // Opposite arcs are two distinct arcs, not parallels.
        assert!(StGraph::directed(3, 0, 1, &[(0, 1), (1, 0)]).is_ok());
    }

    #[test]
    fn multigraph_construction() {
        let g = WeightedMultigraph::new(2, 0, 1, &[(0, 1, 2.0), (0, 1, 7.0)]).unwrap();
        assert_eq!(g.edges().len(), 2);
        assert_eq!(g.edge(1).unwrap().weight, 7.0);
        assert!(WeightedMultigraph::new(2, 0, 1, &[(0, 0, 1.0)]).is_err());
        assert!(WeightedMultigraph::new(2, 0, 1, &[(0, 1, f64::NAN)]).is_err());
    }

    #[test]
    fn acyclicity_checks() {
        assert!(!is_acyclic_after_removal(&diamond(), &BTreeSet::new()));
        assert!(is_acyclic_after_removal(
            &diamond(),
            &BTreeSet::from([1usize])
        ));
        // The transitive tournament is a DAG.
        assert!(is_acyclic_after_removal(&tour4(), &BTreeSet::new()));
        // A directed cycle needs a removal to break.
        let cyc = StGraph::directed(3, 0, 1, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(!is_acyclic_after_removal(&cyc, &BTreeSet::new()));
        assert!(is_acyclic_after_removal(&cyc, &BTreeSet::from([2usize])));
    }

    proptest::proptest! {
        #[test]
        fn undirected_adjacency_is_symmetric(seed in 0u64..500) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let n = rng.gen_range(2..=10);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.4) {
                        edges.push((u, v));
                    }
                }
            }
            let g = StGraph::undirected(n, 0, 1, &edges).unwrap();
            for u in 0..n {
                for v in 0..n {
                    proptest::prop_assert_eq!(
                        g.neighbors(u).contains(&v),
                        g.neighbors(v).contains(&u)
                    );
                }
            }
        }
    }
}
