//! Immutable simple graphs with stable text labels.
//!
//! Vertices are dense indices `0..n` in first-appearance order; every derived
//! structure (induced subgraphs, paths, cliques) refers to these indices.
//! Adjacency lists are kept sorted so that all iteration is deterministic.

use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop on label `{0}`")]
    SelfLoop(String),
    #[error("empty input: no vertices declared")]
    EmptyInput,
    #[error("line {line}: expected one or two tokens, found {found}")]
    TooManyTokens { line: usize, found: usize },
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown vertex index {0}")]
    UnknownVertex(usize),
    #[error("endpoint {0} lies in a blocker's closed neighborhood")]
    BlockedEndpoint(usize),
}

/// An undirected simple graph. Immutable after construction.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}; ", self.n(), self.edge_count())?;
        let edges: Vec<String> = self
            .edges()
            .map(|(u, v)| format!("{}-{}", self.labels[u], self.labels[v]))
            .collect();
        write!(f, "{})", edges.join(" "))
    }
}

impl Graph {
    /// Builds a graph from explicit labels and index edges.
    ///
    /// Labels must be distinct and whitespace-free. Duplicate edges are
    /// deduplicated; self-loops are rejected.
    pub fn from_edges<S: AsRef<str>>(
        labels: &[S],
        edges: &[(usize, usize)],
    ) -> Result<Self, GraphError> {
        let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        if labels.is_empty() {
            return Err(GraphError::EmptyInput);
        }
        let mut seen = BTreeSet::new();
        for l in &labels {
            if l.chars().any(char::is_whitespace) || l.is_empty() {
                return Err(GraphError::DuplicateLabel(l.clone()));
            }
            if !seen.insert(l.clone()) {
                return Err(GraphError::DuplicateLabel(l.clone()));
            }
        }
        let n = labels.len();
        let mut adj = vec![BTreeSet::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::UnknownVertex(u));
            }
            if v >= n {
                return Err(GraphError::UnknownVertex(v));
            }
            if u == v {
                return Err(GraphError::SelfLoop(labels[u].clone()));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph {
            labels,
            adj: adj.into_iter().map(|s| s.into_iter().collect()).collect(),
        })
    }

    /// Parses the edge-list text format.
    ///
    /// Lines are split on ASCII whitespace; lines beginning with `#` are
    /// ignored. One token declares an isolated vertex, two tokens declare an
    /// edge, more is an error. Labels are indexed in first-appearance order
    /// and duplicate edges are deduplicated.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let mut labels: Vec<String> = Vec::new();
        let mut index = std::collections::HashMap::new();
        let mut edges: Vec<(usize, usize)> = Vec::new();
        let mut intern = |tok: &str, labels: &mut Vec<String>| -> usize {
            *index.entry(tok.to_string()).or_insert_with(|| {
                labels.push(tok.to_string());
                labels.len() - 1
            })
        };
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let toks: Vec<&str> = line.split_ascii_whitespace().collect();
            match toks.len() {
                1 => {
                    intern(toks[0], &mut labels);
                }
                2 => {
                    if toks[0] == toks[1] {
                        return Err(GraphError::SelfLoop(toks[0].to_string()));
                    }
                    let u = intern(toks[0], &mut labels);
                    let v = intern(toks[1], &mut labels);
                    edges.push((u, v));
                }
                k => {
                    return Err(GraphError::TooManyTokens {
                        line: lineno + 1,
                        found: k,
                    })
                }
            }
        }
        if labels.is_empty() {
            return Err(GraphError::EmptyInput);
        }
        Graph::from_edges(&labels, &edges)
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Sorted neighbor indices of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.adj[u]
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Closed neighborhood `N[v]`, sorted.
    pub fn closed_neighborhood(&self, v: usize) -> Vec<usize> {
        let mut out = self.adj[v].clone();
        let pos = out.binary_search(&v).unwrap_err();
        out.insert(pos, v);
        out
    }

    /// True iff `v` is adjacent to every other vertex.
    pub fn is_universal(&self, v: usize) -> bool {
        self.degree(v) == self.n() - 1
    }

    pub fn is_independent_set(&self, set: &[usize]) -> bool {
        for (i, &u) in set.iter().enumerate() {
            for &v in &set[i + 1..] {
                if u == v || self.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_clique(&self, set: &[usize]) -> bool {
        for (i, &u) in set.iter().enumerate() {
            for &v in &set[i + 1..] {
                if u == v || !self.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(u) = stack.pop() {
                comp.push(u);
                for &v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Induced subgraph on `s` (need not be sorted), original labels kept.
    ///
    /// Vertex `i` of the result is the `i`-th smallest member of `s`.
    pub fn induced(&self, s: &[usize]) -> Result<Graph, GraphError> {
        let mut verts: Vec<usize> = s.to_vec();
        verts.sort_unstable();
        verts.dedup();
        if let Some(&bad) = verts.iter().find(|&&v| v >= self.n()) {
            return Err(GraphError::UnknownVertex(bad));
        }
        let mut back = vec![usize::MAX; self.n()];
        for (i, &v) in verts.iter().enumerate() {
            back[v] = i;
        }
        let labels: Vec<String> = verts.iter().map(|&v| self.labels[v].clone()).collect();
        let mut edges = Vec::new();
        for &v in &verts {
            for &w in self.neighbors(v) {
                if v < w && back[w] != usize::MAX {
                    edges.push((back[v], back[w]));
                }
            }
        }
        Graph::from_edges(&labels, &edges)
    }

    /// Complement of the union of closed neighborhoods, sorted.
    pub fn outside_closed_neighborhoods(&self, centers: &[usize]) -> Vec<usize> {
        let mut banned = vec![false; self.n()];
        for &c in centers {
            banned[c] = true;
            for &w in self.neighbors(c) {
                banned[w] = true;
            }
        }
        (0..self.n()).filter(|&v| !banned[v]).collect()
    }

    /// Shortest `s`–`t` path avoiding every blocker's closed neighborhood.
    ///
    /// Breadth-first from `s` over `V \ ∪ N[x]`, exploring neighbors in
    /// ascending index order so ties resolve deterministically. Returns
    /// `Ok(None)` when `s` and `t` are separated, and `BlockedEndpoint`
    /// when an endpoint itself is banned (trivially no path, but reported
    /// distinctly for diagnostics).
    pub fn path_missing(
        &self,
        s: usize,
        t: usize,
        blockers: &[usize],
    ) -> Result<Option<Path>, GraphError> {
        assert_ne!(s, t, "path endpoints must differ");
        if s >= self.n() {
            return Err(GraphError::UnknownVertex(s));
        }
        if t >= self.n() {
            return Err(GraphError::UnknownVertex(t));
        }
        let mut banned = vec![false; self.n()];
        for &c in blockers {
            if c >= self.n() {
                return Err(GraphError::UnknownVertex(c));
            }
            banned[c] = true;
            for &w in self.neighbors(c) {
                banned[w] = true;
            }
        }
        if banned[s] {
            return Err(GraphError::BlockedEndpoint(s));
        }
        if banned[t] {
            return Err(GraphError::BlockedEndpoint(t));
        }
        let mut parent = vec![usize::MAX; self.n()];
        let mut queue = std::collections::VecDeque::new();
        parent[s] = s;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            if u == t {
                break;
            }
            for &v in self.neighbors(u) {
                if !banned[v] && parent[v] == usize::MAX {
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
        if parent[t] == usize::MAX {
            return Ok(None);
        }
        let mut verts = vec![t];
        let mut cur = t;
        while cur != s {
            cur = parent[cur];
            verts.push(cur);
        }
        verts.reverse();
        Ok(Some(Path::new(self, verts).expect("BFS yields a valid path")))
    }

    /// Writes the graph back out in the edge-list text format.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        let mut covered = vec![false; self.n()];
        for (u, v) in self.edges() {
            covered[u] = true;
            covered[v] = true;
            out.push_str(&format!("{} {}\n", self.labels[u], self.labels[v]));
        }
        for (v, label) in self.labels.iter().enumerate() {
            if !covered[v] {
                out.push_str(&format!("{label}\n"));
            }
        }
        out
    }
}

/// A path: distinct vertices with consecutive pairs adjacent in the host.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Path {
    verts: Vec<usize>,
}

impl Path {
    pub fn new(g: &Graph, verts: Vec<usize>) -> Option<Path> {
        if verts.is_empty() {
            return None;
        }
        let mut seen = BTreeSet::new();
        for &v in &verts {
            if v >= g.n() || !seen.insert(v) {
                return None;
            }
        }
        for w in verts.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return None;
            }
        }
        Some(Path { verts })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.verts
    }

    /// Number of vertices on the path.
    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    pub fn first(&self) -> usize {
        self.verts[0]
    }

    pub fn last(&self) -> usize {
        *self.verts.last().unwrap()
    }

    /// True iff `x` has no neighbor on the path and is not on it.
    pub fn missed_by(&self, g: &Graph, x: usize) -> bool {
        self.verts
            .iter()
            .all(|&v| v != x && !g.has_edge(x, v))
    }
}
