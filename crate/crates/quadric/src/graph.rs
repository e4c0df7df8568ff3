//! Finite simplicial graphs with exact metric queries, embedded-cycle
//! enumeration and the 4-bridged recognition procedure.
//!
//! Vertex identifiers are opaque strings with the lexicographic total order;
//! every "choose one" step breaks ties by this order, so all operations are
//! deterministic.  Graphs are immutable values: removal produces new graphs.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::{Error, Result};

/// A finite simplicial graph: no self-loops, no parallel edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialGraph {
    /// Sorted, unique vertex names.  Index order equals lexicographic order.
    names: Vec<String>,
    adj: Vec<BTreeSet<usize>>,
}

/// All-pairs hop counts.  `None` marks a disconnected pair.
#[derive(Debug, Clone)]
pub struct DistanceMatrix {
    names: Vec<String>,
    dist: Vec<Vec<Option<usize>>>,
}

/// A two-part vertex coloring with no monochromatic edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub part0: BTreeSet<String>,
    pub part1: BTreeSet<String>,
}

/// A cyclic vertex sequence of length >= 3 in canonical form: the
/// lexicographically least among all rotations of both directions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexCycle {
    vertices: Vec<String>,
}

/// Outcome of the 4-bridged check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FourBridgedVerdict {
    FourBridged,
    /// An isometrically embedded cycle of length != 4.
    NotFourBridged(VertexCycle),
}

impl FourBridgedVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, FourBridgedVerdict::FourBridged)
    }

    pub fn witness(&self) -> Option<&VertexCycle> {
        match self {
            FourBridgedVerdict::FourBridged => None,
            FourBridgedVerdict::NotFourBridged(c) => Some(c),
        }
    }
}

pub(crate) fn valid_identifier(s: &str) -> bool {
    !s.is_empty()
        && s.chars()
            .all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '.' || c == '-')
}

impl VertexCycle {
    /// Canonicalizes a cyclic vertex sequence (least rotation/reflection).
    pub fn new<S: Into<String>>(vertices: Vec<S>) -> Result<Self> {
        let vs: Vec<String> = vertices.into_iter().map(Into::into).collect();
        if vs.len() < 3 {
            return Err(Error::NotACycle(format!("length {} < 3", vs.len())));
        }
        Ok(Self {
            vertices: canonical_cycle(&vs),
        })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    /// Consecutive vertex pairs, including the wrap-around pair.
    pub fn edges(&self) -> impl Iterator<Item = (&str, &str)> {
        let n = self.vertices.len();
        (0..n).map(move |i| {
            (
                self.vertices[i].as_str(),
                self.vertices[(i + 1) % n].as_str(),
            )
        })
    }

    pub fn display(&self) -> String {
        self.vertices.join(" ")
    }
}

fn canonical_cycle(vs: &[String]) -> Vec<String> {
    let n = vs.len();
    let mut best: Option<Vec<&String>> = None;
    let reversed: Vec<&String> = vs.iter().rev().collect();
    let forward: Vec<&String> = vs.iter().collect();
    for seq in [&forward, &reversed] {
        for r in 0..n {
            let cand: Vec<&String> = (0..n).map(|i| seq[(r + i) % n]).collect();
            if best.as_ref().map_or(true, |b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap().into_iter().cloned().collect()
}

impl SimplicialGraph {
    /// Builds a graph from vertex names and undirected edges.
    pub fn new<S: AsRef<str>>(vertices: &[S], edges: &[(S, S)]) -> Result<Self> {
        let mut names: Vec<String> = Vec::with_capacity(vertices.len());
        for v in vertices {
            let v = v.as_ref();
            if !valid_identifier(v) {
                return Err(Error::BadIdentifier(v.to_string()));
            }
            names.push(v.to_string());
        }
        names.sort();
        if names.windows(2).any(|w| w[0] == w[1]) {
            let dup = names
                .windows(2)
                .find(|w| w[0] == w[1])
                .map(|w| w[0].clone())
                .unwrap();
            return Err(Error::Duplicate(dup));
        }
        let mut adj = vec![BTreeSet::new(); names.len()];
        for (a, b) in edges {
            let (a, b) = (a.as_ref(), b.as_ref());
            let ia = names
                .binary_search_by(|x| x.as_str().cmp(a))
                .map_err(|_| Error::MissingEndpoint(a.to_string()))?;
            let ib = names
                .binary_search_by(|x| x.as_str().cmp(b))
                .map_err(|_| Error::MissingEndpoint(b.to_string()))?;
            if ia == ib {
                return Err(Error::SelfLoop(a.to_string()));
            }
            if !adj[ia].insert(ib) {
                return Err(Error::Duplicate(format!("e {} {}", a.min(b), a.max(b))));
            }
            adj[ib].insert(ia);
        }
        Ok(Self { names, adj })
    }

    /// Path graph v0 - v1 - ... on `n` vertices.
    pub fn path(n: usize) -> Self {
        let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        let edges: Vec<(String, String)> = (1..n)
            .map(|i| (format!("v{}", i - 1), format!("v{i}")))
            .collect();
        Self::new(&names, &edges).unwrap()
    }

    /// Cycle graph on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        let mut edges: Vec<(String, String)> = (1..n)
            .map(|i| (format!("v{}", i - 1), format!("v{i}")))
            .collect();
        edges.push((format!("v{}", n - 1), "v0".to_string()));
        Self::new(&names, &edges).unwrap()
    }

    /// Complete bipartite graph K_{m,n} with parts a0..,b0.. .
    pub fn complete_bipartite(m: usize, n: usize) -> Self {
        let mut names = Vec::new();
        for i in 0..m {
            names.push(format!("a{i}"));
        }
        for j in 0..n {
            names.push(format!("b{j}"));
        }
        let mut edges = Vec::new();
        for i in 0..m {
            for j in 0..n {
                edges.push((format!("a{i}"), format!("b{j}")));
            }
        }
        Self::new(&names, &edges).unwrap()
    }

    /// Grid graph with `rows x cols` vertices named `<r>.<c>`.
    pub fn grid(rows: usize, cols: usize) -> Self {
        let mut names = Vec::new();
        let mut edges = Vec::new();
        for r in 0..rows {
            for c in 0..cols {
                names.push(format!("{r}.{c}"));
                if r + 1 < rows {
                    edges.push((format!("{r}.{c}"), format!("{}.{c}", r + 1)));
                }
                if c + 1 < cols {
                    edges.push((format!("{r}.{c}"), format!("{r}.{}", c + 1)));
                }
            }
        }
        Self::new(&names, &edges).unwrap()
    }

    /// Star K_{1,n} with center `c` and leaves `l0..`.
    pub fn star(n: usize) -> Self {
        let mut names = vec!["c".to_string()];
        let mut edges = Vec::new();
        for i in 0..n {
            names.push(format!("l{i}"));
            edges.push(("c".to_string(), format!("l{i}")));
        }
        Self::new(&names, &edges).unwrap()
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> impl Iterator<Item = &str> {
        self.names.iter().map(|s| s.as_str())
    }

    /// Edges with endpoints sorted, listed in lexicographic order.
    pub fn edges(&self) -> Vec<(String, String)> {
        let mut out = Vec::new();
        for (i, nb) in self.adj.iter().enumerate() {
            for &j in nb {
                if i < j {
                    out.push((self.names[i].clone(), self.names[j].clone()));
                }
            }
        }
        out
    }

    pub fn has_vertex(&self, v: &str) -> bool {
        self.idx(v).is_ok()
    }

    pub fn has_edge(&self, a: &str, b: &str) -> bool {
        match (self.idx(a), self.idx(b)) {
            (Ok(i), Ok(j)) => self.adj[i].contains(&j),
            _ => false,
        }
    }

    pub fn neighbors(&self, v: &str) -> Result<BTreeSet<String>> {
        let i = self.idx(v)?;
        Ok(self.adj[i].iter().map(|&j| self.names[j].clone()).collect())
    }

    pub fn degree(&self, v: &str) -> Result<usize> {
        Ok(self.adj[self.idx(v)?].len())
    }

    pub(crate) fn idx(&self, v: &str) -> Result<usize> {
        self.names
            .binary_search_by(|x| x.as_str().cmp(v))
            .map_err(|_| Error::UnknownVertex(v.to_string()))
    }

    pub(crate) fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub(crate) fn adj_ids(&self, i: usize) -> &BTreeSet<usize> {
        &self.adj[i]
    }

    fn bfs_from(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.names.len()];
        dist[src] = Some(0);
        let mut queue = VecDeque::new();
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        if self.names.is_empty() {
            return true;
        }
        self.bfs_from(0).iter().all(|d| d.is_some())
    }

    /// All-pairs shortest path table (breadth-first search semantics).
    pub fn distance_matrix(&self) -> DistanceMatrix {
        let dist = (0..self.names.len()).map(|i| self.bfs_from(i)).collect();
        DistanceMatrix {
            names: self.names.clone(),
            dist,
        }
    }

    pub fn distance(&self, a: &str, b: &str) -> Result<Option<usize>> {
        let ia = self.idx(a)?;
        let ib = self.idx(b)?;
        Ok(self.bfs_from(ia)[ib])
    }

    /// Largest finite distance.  `None` when the graph is empty.
    pub fn diameter(&self) -> Option<usize> {
        let dm = self.distance_matrix();
        dm.dist
            .iter()
            .flat_map(|row| row.iter().filter_map(|d| *d))
            .max()
    }

    /// Two-coloring without monochromatic edges, or `None` if an odd cycle
    /// exists.  The least vertex of each connected component goes to part 0.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let n = self.names.len();
        let mut color: Vec<Option<bool>> = vec![None; n];
        for start in 0..n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut queue = VecDeque::new();
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &w in &self.adj[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        _ => {}
                    }
                }
            }
        }
        let mut part0 = BTreeSet::new();
        let mut part1 = BTreeSet::new();
        for (i, c) in color.iter().enumerate() {
            if c == &Some(false) {
                part0.insert(self.names[i].clone());
            } else {
                part1.insert(self.names[i].clone());
            }
        }
        Some(Bipartition { part0, part1 })
    }

    /// Full subgraph on the given vertex set.
    pub fn full_subgraph(&self, s: &BTreeSet<String>) -> Result<Self> {
        for v in s {
            self.idx(v)?;
        }
        let names: Vec<&str> = s.iter().map(|v| v.as_str()).collect();
        let mut edges = Vec::new();
        for a in s {
            for b in s {
                if a < b && self.has_edge(a, b) {
                    edges.push((a.as_str(), b.as_str()));
                }
            }
        }
        Self::new(&names, &edges)
    }

    /// A new graph with `v` removed.
    pub fn remove_vertex(&self, v: &str) -> Result<Self> {
        self.idx(v)?;
        let s: BTreeSet<String> = self
            .names
            .iter()
            .filter(|n| n.as_str() != v)
            .cloned()
            .collect();
        self.full_subgraph(&s)
    }

    /// Full subgraph on all vertices at distance at most `r` from `v`.
    pub fn ball(&self, v: &str, r: usize) -> Result<Self> {
        let i = self.idx(v)?;
        let dist = self.bfs_from(i);
        let s: BTreeSet<String> = (0..self.names.len())
            .filter(|&j| matches!(dist[j], Some(d) if d <= r))
            .map(|j| self.names[j].clone())
            .collect();
        self.full_subgraph(&s)
    }

    /// Exactly the vertices at distance `r` from `v`.
    pub fn metric_sphere(&self, v: &str, r: usize) -> Result<BTreeSet<String>> {
        let i = self.idx(v)?;
        let dist = self.bfs_from(i);
        Ok((0..self.names.len())
            .filter(|&j| dist[j] == Some(r))
            .map(|j| self.names[j].clone())
            .collect())
    }

    /// Every embedded cycle of length <= `max_len`, once per canonical form,
    /// sorted by (length, vertex sequence).
    pub fn enumerate_embedded_cycles(&self, max_len: usize) -> Result<Vec<VertexCycle>> {
        if max_len < 3 {
            return Err(Error::InvalidInput(format!(
                "max_len {max_len} < 3 admits no cycles"
            )));
        }
        let n = self.names.len();
        let mut out: Vec<VertexCycle> = Vec::new();
        // One canonical representative per cycle: enumerate by the least
        // vertex s on the cycle, walking only vertices > s, and keep the
        // direction with second vertex < last vertex.
        let mut path: Vec<usize> = Vec::new();
        let mut on_path = vec![false; n];
        for s in 0..n {
            path.clear();
            path.push(s);
            on_path[s] = true;
            self.cycle_dfs(s, s, max_len, &mut path, &mut on_path, &mut out);
            on_path[s] = false;
        }
        out.sort_by(|a, b| (a.len(), a.vertices()).cmp(&(b.len(), b.vertices())));
        Ok(out)
    }

    fn cycle_dfs(
        &self,
        s: usize,
        u: usize,
        max_len: usize,
        path: &mut Vec<usize>,
        on_path: &mut Vec<bool>,
        out: &mut Vec<VertexCycle>,
    ) {
        for &w in &self.adj[u] {
            if w == s && path.len() >= 3 && path[1] < *path.last().unwrap() {
                let cyc: Vec<String> = path.iter().map(|&i| self.names[i].clone()).collect();
                out.push(VertexCycle::new(cyc).unwrap());
            }
            if w > s && !on_path[w] && path.len() < max_len {
                path.push(w);
                on_path[w] = true;
                self.cycle_dfs(s, w, max_len, path, on_path, out);
                on_path[w] = false;
                path.pop();
            }
        }
    }

    /// Length of a shortest cycle, or `None` in a forest.  Computed exactly:
    /// for each edge uv, dist(u, v) without that edge plus one.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for (i, nb) in self.adj.iter().enumerate() {
            for &j in nb {
                if i >= j {
                    continue;
                }
                // BFS from i to j avoiding the edge (i, j).
                let mut dist = vec![None; self.names.len()];
                dist[i] = Some(0usize);
                let mut queue = VecDeque::new();
                queue.push_back(i);
                while let Some(u) = queue.pop_front() {
                    let du = dist[u].unwrap();
                    for &w in &self.adj[u] {
                        if (u == i && w == j) || (u == j && w == i) {
                            continue;
                        }
                        if dist[w].is_none() {
                            dist[w] = Some(du + 1);
                            queue.push_back(w);
                        }
                    }
                }
                if let Some(d) = dist[j] {
                    let len = d + 1;
                    if best.map_or(true, |b| len < b) {
                        best = Some(len);
                    }
                }
            }
        }
        best
    }

    fn check_cycle(&self, c: &VertexCycle) -> Result<Vec<usize>> {
        let ids: Vec<usize> = c
            .vertices()
            .iter()
            .map(|v| self.idx(v))
            .collect::<Result<_>>()?;
        let mut seen = BTreeSet::new();
        for &i in &ids {
            if !seen.insert(i) {
                return Err(Error::NotACycle(format!(
                    "vertex `{}` repeats",
                    self.names[i]
                )));
            }
        }
        for k in 0..ids.len() {
            let a = ids[k];
            let b = ids[(k + 1) % ids.len()];
            if !self.adj[a].contains(&b) {
                return Err(Error::NotACycle(format!(
                    "`{}` and `{}` are not adjacent",
                    self.names[a], self.names[b]
                )));
            }
        }
        Ok(ids)
    }

    /// True iff cycle distances coincide with graph distances for all pairs.
    pub fn is_isometric_cycle(&self, c: &VertexCycle) -> Result<bool> {
        let ids = self.check_cycle(c)?;
        let n = ids.len();
        for a in 0..n {
            let dist = self.bfs_from(ids[a]);
            for b in a + 1..n {
                let along = (b - a).min(n - (b - a));
                if dist[ids[b]] != Some(along) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// True iff every isometrically embedded cycle has length 4.
    ///
    /// An isometric cycle of length L has diameter floor(L/2), so the search
    /// is bounded by 2*diameter+1; this bound is standard but not taken from
    /// any particular source.
    pub fn is_4_bridged(&self) -> Result<FourBridgedVerdict> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let diam = self.diameter().unwrap_or(0);
        let bound = (2 * diam + 1).min(self.names.len());
        if bound < 3 {
            return Ok(FourBridgedVerdict::FourBridged);
        }
        for c in self.enumerate_embedded_cycles(bound)? {
            if c.len() != 4 && self.is_isometric_cycle(&c)? {
                return Ok(FourBridgedVerdict::NotFourBridged(c));
            }
        }
        Ok(FourBridgedVerdict::FourBridged)
    }

    /// All embedded 6-cycles with no edge joining an opposing vertex pair.
    pub fn six_cycle_diagonal_violations(&self) -> Vec<VertexCycle> {
        if self.names.len() < 6 {
            return Vec::new();
        }
        self.enumerate_embedded_cycles(6)
            .unwrap()
            .into_iter()
            .filter(|c| c.len() == 6)
            .filter(|c| {
                let vs = c.vertices();
                !(0..3).any(|i| self.has_edge(&vs[i], &vs[i + 3]))
            })
            .collect()
    }

    /// True iff the full subgraph on `s` is complete bipartite with both
    /// parts nonempty.
    pub fn is_biclique(&self, s: &BTreeSet<String>) -> Result<bool> {
        let sub = self.full_subgraph(s)?;
        let Some(bip) = sub.bipartition() else {
            return Ok(false);
        };
        if bip.part0.is_empty() || bip.part1.is_empty() {
            return Ok(false);
        }
        for a in &bip.part0 {
            for b in &bip.part1 {
                if !sub.has_edge(a, b) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// True iff distances inside the full subgraph on `s` equal distances in
    /// the ambient graph for all pairs in `s`.
    pub fn is_isometric_subgraph(&self, s: &BTreeSet<String>) -> Result<bool> {
        let sub = self.full_subgraph(s)?;
        if !sub.is_connected() {
            return Err(Error::DisconnectedSubgraph(
                "isometric check requires a connected full subgraph".into(),
            ));
        }
        let inner = sub.distance_matrix();
        for a in s {
            let da = self.bfs_from(self.idx(a)?);
            for b in s {
                if a < b && inner.get(a, b) != da[self.idx(b)?] {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// True iff every geodesic between members of `s` stays in `s`,
    /// checked by the interval criterion: u lies on a geodesic from a to b
    /// iff |a,u| + |u,b| = |a,b|.
    pub fn is_convex_subgraph(&self, s: &BTreeSet<String>) -> Result<bool> {
        if s.is_empty() {
            return Err(Error::InvalidInput("empty vertex set".into()));
        }
        let ids: Vec<usize> = s.iter().map(|v| self.idx(v)).collect::<Result<_>>()?;
        let in_s: BTreeSet<usize> = ids.iter().copied().collect();
        let dists: BTreeMap<usize, Vec<Option<usize>>> =
            ids.iter().map(|&i| (i, self.bfs_from(i))).collect();
        for (k, &a) in ids.iter().enumerate() {
            for &b in &ids[k + 1..] {
                let Some(dab) = dists[&a][b] else { continue };
                for u in 0..self.names.len() {
                    if in_s.contains(&u) {
                        continue;
                    }
                    if let (Some(dau), Some(dub)) = (dists[&a][u], dists[&b][u]) {
                        if dau + dub == dab {
                            return Ok(false);
                        }
                    }
                }
            }
        }
        Ok(true)
    }
}

impl DistanceMatrix {
    pub fn get(&self, a: &str, b: &str) -> Option<usize> {
        let ia = self.names.binary_search_by(|x| x.as_str().cmp(a)).ok()?;
        let ib = self.names.binary_search_by(|x| x.as_str().cmp(b)).ok()?;
        self.dist[ia][ib]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub(crate) fn by_index(&self, i: usize, j: usize) -> Option<usize> {
        self.dist[i][j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[&str]) -> BTreeSet<String> {
        vs.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn distance_on_path() {
        let g = SimplicialGraph::new(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        assert_eq!(g.distance("a", "c").unwrap(), Some(2));
        let dm = g.distance_matrix();
        assert_eq!(dm.get("a", "a"), Some(0));
        assert_eq!(dm.get("c", "a"), Some(2));
    }

    #[test]
    fn distance_single_vertex() {
        let g = SimplicialGraph::new(&["x"], &[]).unwrap();
        let dm = g.distance_matrix();
        assert_eq!(dm.get("x", "x"), Some(0));
    }

    #[test]
    fn six_cycle_antipodal_distance_matches_brute_force() {
        let g = SimplicialGraph::cycle(6);
        // Oracle: shortest path by exhaustive enumeration of simple paths.
        fn brute(g: &SimplicialGraph, a: &str, b: &str) -> Option<usize> {
            fn rec(
                g: &SimplicialGraph,
                cur: &str,
                tgt: &str,
                seen: &mut Vec<String>,
            ) -> Option<usize> {
                if cur == tgt {
                    return Some(0);
                }
                let mut best = None;
                for w in g.neighbors(cur).unwrap() {
                    if !seen.contains(&w) {
                        seen.push(w.clone());
                        if let Some(d) = rec(g, &w, tgt, seen) {
                            if best.map_or(true, |b| d + 1 < b) {
                                best = Some(d + 1);
                            }
                        }
                        seen.pop();
                    }
                }
                best
            }
            rec(g, a, b, &mut vec![a.to_string()])
        }
        assert_eq!(brute(&g, "v0", "v3"), Some(3));
        assert_eq!(g.distance("v0", "v3").unwrap(), Some(3));
        let dm = g.distance_matrix();
        for a in g.vertices() {
            for b in g.vertices() {
                assert_eq!(dm.get(a, b), brute(&g, a, b));
            }
        }
    }

    #[test]
    fn triangle_inequality_exact() {
        let g = SimplicialGraph::grid(3, 3);
        let dm = g.distance_matrix();
        let vs: Vec<&str> = g.vertices().collect();
        for &u in &vs {
            for &v in &vs {
                for &w in &vs {
                    let (a, b, c) = (dm.get(u, w), dm.get(u, v), dm.get(v, w));
                    if let (Some(a), Some(b), Some(c)) = (a, b, c) {
                        assert!(a <= b + c);
                    }
                }
            }
        }
    }

    #[test]
    fn bipartition_cases() {
        let c4 = SimplicialGraph::cycle(4);
        let bip = c4.bipartition().unwrap();
        assert_eq!(bip.part0.len(), 2);
        assert_eq!(bip.part1.len(), 2);
        assert!(bip.part0.contains("v0"));

        let c3 = SimplicialGraph::cycle(3);
        assert!(c3.bipartition().is_none());

        // Oracle: brute-force 2-coloring of K_{2,3}.
        let k23 = SimplicialGraph::complete_bipartite(2, 3);
        let vs: Vec<String> = k23.vertices().map(|s| s.to_string()).collect();
        let mut found = false;
        'outer: for mask in 0..(1u32 << vs.len()) {
            for (a, b) in k23.edges() {
                let ia = vs.iter().position(|v| *v == a).unwrap();
                let ib = vs.iter().position(|v| *v == b).unwrap();
                if (mask >> ia) & 1 == (mask >> ib) & 1 {
                    continue 'outer;
                }
            }
            found = true;
            break;
        }
        assert!(found);
        let bip = k23.bipartition().unwrap();
        assert_eq!(
            (bip.part0.len().min(bip.part1.len()), bip.part0.len().max(bip.part1.len())),
            (2, 3)
        );
    }

    #[test]
    fn balls_and_spheres() {
        let c6 = SimplicialGraph::cycle(6);
        let b0 = c6.ball("v2", 0).unwrap();
        assert_eq!(b0.vertex_count(), 1);
        let b1 = c6.ball("v2", 1).unwrap();
        assert_eq!(b1.vertex_count(), 3);
        assert_eq!(b1.edge_count(), 2);

        // 3x3 grid, center, r=1 -> star K_{1,4}.
        let g = SimplicialGraph::grid(3, 3);
        let b = g.ball("1.1", 1).unwrap();
        assert_eq!(b.vertex_count(), 5);
        assert_eq!(b.edge_count(), 4);
        assert!(b.is_biclique(&b.vertices().map(String::from).collect()).unwrap());

        assert_eq!(c6.metric_sphere("v0", 0).unwrap(), set(&["v0"]));
        let p = SimplicialGraph::path(3);
        assert_eq!(p.metric_sphere("v0", 2).unwrap(), set(&["v2"]));
        // K_{2,3} from a degree-3 vertex: sphere of radius 2 is the other
        // vertex of its part.
        let k23 = SimplicialGraph::complete_bipartite(2, 3);
        assert_eq!(k23.metric_sphere("a0", 2).unwrap(), set(&["a1"]));
        assert!(c6.ball("zz", 1).is_err());
    }

    /// Brute-force embedded cycle oracle: check every vertex subset and every
    /// cyclic arrangement of it.
    fn brute_cycles(g: &SimplicialGraph, max_len: usize) -> BTreeSet<VertexCycle> {
        let vs: Vec<String> = g.vertices().map(String::from).collect();
        let mut out = BTreeSet::new();
        let n = vs.len();
        fn perms(items: &[usize]) -> Vec<Vec<usize>> {
            if items.len() <= 1 {
                return vec![items.to_vec()];
            }
            let mut out = Vec::new();
            for (k, &x) in items.iter().enumerate() {
                let rest: Vec<usize> = items
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != k)
                    .map(|(_, &y)| y)
                    .collect();
                for mut p in perms(&rest) {
                    p.insert(0, x);
                    out.push(p);
                }
            }
            out
        }
        for mask in 1u32..(1 << n) {
            let subset: Vec<usize> = (0..n).filter(|i| (mask >> i) & 1 == 1).collect();
            if subset.len() < 3 || subset.len() > max_len {
                continue;
            }
            for p in perms(&subset) {
                let ok = (0..p.len())
                    .all(|i| g.has_edge(&vs[p[i]], &vs[p[(i + 1) % p.len()]]));
                if ok {
                    let cyc: Vec<String> = p.iter().map(|&i| vs[i].clone()).collect();
                    out.insert(VertexCycle::new(cyc).unwrap());
                }
            }
        }
        out
    }

    #[test]
    fn cycle_enumeration() {
        let c4 = SimplicialGraph::cycle(4);
        assert_eq!(c4.enumerate_embedded_cycles(4).unwrap().len(), 1);

        let k23 = SimplicialGraph::complete_bipartite(2, 3);
        let found = k23.enumerate_embedded_cycles(4).unwrap();
        assert_eq!(found.len(), 3);
        let oracle = brute_cycles(&k23, 4);
        assert_eq!(found.iter().cloned().collect::<BTreeSet<_>>(), oracle);

        let tree = SimplicialGraph::path(5);
        assert!(tree.enumerate_embedded_cycles(10).unwrap().is_empty());

        // Cross-validate on a denser graph.
        let k33 = SimplicialGraph::complete_bipartite(3, 3);
        let found = k33.enumerate_embedded_cycles(6).unwrap();
        let oracle = brute_cycles(&k33, 6);
        assert_eq!(found.iter().cloned().collect::<BTreeSet<_>>(), oracle);
    }

    #[test]
    fn isometric_cycles() {
        let c6 = SimplicialGraph::cycle(6);
        let all = c6.enumerate_embedded_cycles(6).unwrap();
        assert_eq!(all.len(), 1);
        assert!(c6.is_isometric_cycle(&all[0]).unwrap());

        // A 6-cycle in K_{3,3} is not isometric: chords force distance 2.
        let k33 = SimplicialGraph::complete_bipartite(3, 3);
        let six: Vec<VertexCycle> = k33
            .enumerate_embedded_cycles(6)
            .unwrap()
            .into_iter()
            .filter(|c| c.len() == 6)
            .collect();
        assert!(!six.is_empty());
        for c in &six {
            assert!(!k33.is_isometric_cycle(c).unwrap());
        }

        // Any 4-cycle in a simplicial bipartite graph is isometric.
        for c in k33.enumerate_embedded_cycles(4).unwrap() {
            assert!(k33.is_isometric_cycle(&c).unwrap());
        }

        let not_cycle = VertexCycle::new(vec!["a0", "a1", "b0"]).unwrap();
        assert!(k33.is_isometric_cycle(&not_cycle).is_err());
    }

    #[test]
    fn four_bridged_verdicts() {
        let c6 = SimplicialGraph::cycle(6);
        match c6.is_4_bridged().unwrap() {
            FourBridgedVerdict::NotFourBridged(c) => assert_eq!(c.len(), 6),
            _ => panic!("C6 is not 4-bridged"),
        }

        let k23 = SimplicialGraph::complete_bipartite(2, 3);
        assert!(k23.is_4_bridged().unwrap().holds());

        let grid = SimplicialGraph::grid(3, 3);
        assert!(grid.is_4_bridged().unwrap().holds());

        let two = SimplicialGraph::new(&["a", "b"], &[]).unwrap();
        assert!(two.is_4_bridged().is_err());
    }

    /// Definition-by-enumeration oracle for the 4-bridged property, with no
    /// length bound beyond the vertex count.
    pub(crate) fn four_bridged_oracle(g: &SimplicialGraph) -> bool {
        g.enumerate_embedded_cycles(g.vertex_count().max(3))
            .unwrap()
            .into_iter()
            .all(|c| c.len() == 4 || !g.is_isometric_cycle(&c).unwrap())
    }

    #[test]
    fn four_bridged_matches_oracle_on_small_bipartite_graphs() {
        // All connected bipartite graphs on parts (m, n) with m+n <= 6.
        for m in 1..=3usize {
            for n in m..=(6 - m) {
                let total = m * n;
                for mask in 0u32..(1 << total) {
                    let mut edges = Vec::new();
                    for i in 0..m {
                        for j in 0..n {
                            if (mask >> (i * n + j)) & 1 == 1 {
                                edges.push((format!("a{i}"), format!("b{j}")));
                            }
                        }
                    }
                    let mut names: Vec<String> = (0..m).map(|i| format!("a{i}")).collect();
                    names.extend((0..n).map(|j| format!("b{j}")));
                    let g = SimplicialGraph::new(&names, &edges).unwrap();
                    if !g.is_connected() {
                        continue;
                    }
                    assert_eq!(
                        g.is_4_bridged().unwrap().holds(),
                        four_bridged_oracle(&g),
                        "disagreement on mask {mask} (m={m}, n={n})"
                    );
                }
            }
        }
    }

    #[test]
    fn six_cycle_diagonals() {
        let c6 = SimplicialGraph::cycle(6);
        assert_eq!(c6.six_cycle_diagonal_violations().len(), 1);
        let k33 = SimplicialGraph::complete_bipartite(3, 3);
        assert!(k33.six_cycle_diagonal_violations().is_empty());
        let tree = SimplicialGraph::path(7);
        assert!(tree.six_cycle_diagonal_violations().is_empty());
    }

    #[test]
    fn biclique_checks() {
        let c4 = SimplicialGraph::cycle(4);
        assert!(c4
            .is_biclique(&c4.vertices().map(String::from).collect())
            .unwrap());
        let p = SimplicialGraph::path(3);
        assert!(p.is_biclique(&set(&["v0", "v1"])).unwrap());
        assert!(p.is_biclique(&set(&["v0", "v1", "v2"])).unwrap());
        assert!(!p.is_biclique(&set(&["v0"])).unwrap());
        assert!(!p.is_biclique(&set(&["v0", "v2"])).unwrap());
        assert!(p.is_biclique(&set(&["v0", "zz"])).is_err());
    }

    #[test]
    fn isometric_subgraphs() {
        let k23 = SimplicialGraph::complete_bipartite(2, 3);
        for v in k23.vertices() {
            for r in 0..=2 {
                let b = k23.ball(v, r).unwrap();
                let s: BTreeSet<String> = b.vertices().map(String::from).collect();
                assert!(k23.is_isometric_subgraph(&s).unwrap());
            }
        }
        // Two antipodal vertices plus one arc of a 6-cycle.
        let c6 = SimplicialGraph::cycle(6);
        assert!(c6
            .is_isometric_subgraph(&set(&["v0", "v1", "v2", "v3"]))
            .unwrap());
        assert!(c6.is_isometric_subgraph(&set(&["v0", "v3"])).is_err());
    }

    #[test]
    fn convexity() {
        let g = SimplicialGraph::grid(3, 3);
        assert!(g
            .is_convex_subgraph(&g.vertices().map(String::from).collect())
            .unwrap());
        assert!(g.is_convex_subgraph(&set(&["1.1"])).unwrap());
        // Radius-1 ball in a 7x7 window of the square grid is not convex.
        let w = SimplicialGraph::grid(7, 7);
        let b = w.ball("3.3", 1).unwrap();
        let s: BTreeSet<String> = b.vertices().map(String::from).collect();
        assert!(!w.is_convex_subgraph(&s).unwrap());
        assert!(w.is_convex_subgraph(&BTreeSet::new()).is_err());
    }

    #[test]
    fn construction_errors() {
        assert!(SimplicialGraph::new(&["a", "a"], &[]).is_err());
        assert!(SimplicialGraph::new(&["a"], &[("a", "a")]).is_err());
        assert!(SimplicialGraph::new(&["a"], &[("a", "b")]).is_err());
        assert!(SimplicialGraph::new(&["a", "b"], &[("a", "b"), ("b", "a")]).is_err());
        assert!(SimplicialGraph::new(&["a b"], &[]).is_err());
    }

    #[test]
    fn girth_values() {
        assert_eq!(SimplicialGraph::cycle(5).girth(), Some(5));
        assert_eq!(SimplicialGraph::complete_bipartite(2, 3).girth(), Some(4));
        assert_eq!(SimplicialGraph::path(4).girth(), None);
        assert_eq!(SimplicialGraph::cycle(6).girth(), Some(6));
    }

    #[test]
    fn canonical_cycle_form() {
        let a = VertexCycle::new(vec!["b", "c", "a", "d"]).unwrap();
        let b = VertexCycle::new(vec!["d", "a", "c", "b"]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.vertices(), &["a", "c", "b", "d"]);
    }
}
