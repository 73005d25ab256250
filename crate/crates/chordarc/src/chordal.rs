//! Chordality, maximal cliques, clique trees, and clique covers.
//!
//! Recognition runs lexicographic BFS and verifies the reversed visit order
//! as a perfect elimination ordering. Everything downstream (clique
//! extraction, clique-tree construction, the greedy independent set and
//! cover) consumes that ordering, so results are deterministic for a given
//! graph.

use crate::graph::Graph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ChordalError {
    #[error("ordering is not a perfect elimination ordering")]
    InvalidPeo,
    #[error("graph is not chordal")]
    NotChordal,
    #[error("node {0} is not a leaf of the clique tree")]
    NotALeaf(usize),
    #[error("leaf {0} has no private vertex; clique tree is invalid")]
    NoPrivateVertex(usize),
}

/// A perfect elimination ordering: `order[0]` is eliminated first, and each
/// vertex's later neighbors form a clique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Peo {
    order: Vec<usize>,
}

impl Peo {
    pub fn order(&self) -> &[usize] {
        &self.order
    }
}

/// Lexicographic BFS visit order, ties broken toward lower vertex index.
fn lex_bfs(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut label: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let mut best: Option<usize> = None;
        for v in 0..n {
            if visited[v] {
                continue;
            }
            match best {
                None => best = Some(v),
                Some(b) => {
                    if label[v] > label[b] {
                        best = Some(v);
                    }
                }
            }
        }
        let u = best.expect("unvisited vertex exists");
        visited[u] = true;
        order.push(u);
        for &w in g.neighbors(u) {
            if !visited[w] {
                // Higher step numbers sort earlier in the lexicographic
                // comparison when stored as (n - step), so push descending.
                label[w].push(n - step);
            }
        }
    }
    order
}

/// Verifies the elimination property of `order` (eliminated-first order).
fn is_peo(g: &Graph, order: &[usize]) -> bool {
    let n = g.n();
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for &v in order {
        // Later neighbors of v; the earliest of them must dominate the rest.
        let later: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| pos[w] > pos[v])
            .collect();
        let Some(&u) = later.iter().min_by_key(|&&w| pos[w]) else {
            continue;
        };
        for &w in &later {
            if w != u && !g.has_edge(u, w) {
                return false;
            }
        }
    }
    true
}

/// Returns a perfect elimination ordering when `g` is chordal.
pub fn is_chordal(g: &Graph) -> Option<Peo> {
    let mut order = lex_bfs(g);
    order.reverse();
    if is_peo(g, &order) {
        Some(Peo { order })
    } else {
        None
    }
}

/// All maximal cliques of a chordal graph, each sorted ascending, the
/// sequence sorted lexicographically.
pub fn maximal_cliques(g: &Graph, peo: &Peo) -> Result<Vec<Vec<usize>>, ChordalError> {
    if !is_peo(g, &peo.order) {
        return Err(ChordalError::InvalidPeo);
    }
    let n = g.n();
    let mut pos = vec![0usize; n];
    for (i, &v) in peo.order.iter().enumerate() {
        pos[v] = i;
    }
    // Candidate cliques: v plus its later neighbors, for every v.
    let mut cands: Vec<Vec<usize>> = Vec::with_capacity(n);
    for &v in &peo.order {
        let mut c: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| pos[w] > pos[v])
            .collect();
        c.push(v);
        c.sort_unstable();
        cands.push(c);
    }
    cands.sort();
    cands.dedup();
    let is_subset = |a: &[usize], b: &[usize]| a.iter().all(|x| b.binary_search(x).is_ok());
    let mut out: Vec<Vec<usize>> = Vec::new();
    for (i, c) in cands.iter().enumerate() {
        let dominated = cands
            .iter()
            .enumerate()
            .any(|(j, d)| i != j && c.len() <= d.len() && is_subset(c, d) && c != d);
        if !dominated {
            out.push(c.clone());
        }
    }
    out.sort();
    Ok(out)
}

/// A tree over the maximal cliques of a chordal graph in which, for every
/// vertex, the cliques containing it induce a subtree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueTree {
    pub cliques: Vec<Vec<usize>>,
    pub edges: Vec<(usize, usize)>,
}

impl CliqueTree {
    pub fn node_count(&self) -> usize {
        self.cliques.len()
    }

    /// Sorted neighbor node indices of node `i`.
    pub fn tree_neighbors(&self, i: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == i {
                    Some(b)
                } else if b == i {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn node_degree(&self, i: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == i || b == i)
            .count()
    }

    /// Leaf node indices, ascending. A single node counts as a leaf.
    pub fn leaves(&self) -> Vec<usize> {
        if self.node_count() == 1 {
            return vec![0];
        }
        (0..self.node_count())
            .filter(|&i| self.node_degree(i) == 1)
            .collect()
    }

    /// Node indices on the unique tree path from `a` to `b`, inclusive.
    pub fn tree_path(&self, a: usize, b: usize) -> Vec<usize> {
        let k = self.node_count();
        let mut parent = vec![usize::MAX; k];
        let mut queue = std::collections::VecDeque::new();
        parent[a] = a;
        queue.push_back(a);
        while let Some(u) = queue.pop_front() {
            if u == b {
                break;
            }
            for v in self.tree_neighbors(u) {
                if parent[v] == usize::MAX {
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
        let mut path = vec![b];
        let mut cur = b;
        while cur != a {
            cur = parent[cur];
            path.push(cur);
        }
        path.reverse();
        path
    }
}

/// Builds a clique tree by Prim's algorithm on clique-intersection weights,
/// growing from node 0 with ties broken toward lower node index. Cliques of
/// different components have empty intersections, so disconnected graphs
/// come out joined by weight-zero edges, which preserves the subtree
/// property.
pub fn build_clique_tree(g: &Graph) -> Result<CliqueTree, ChordalError> {
    let peo = is_chordal(g).ok_or(ChordalError::NotChordal)?;
    let cliques = maximal_cliques(g, &peo)?;
    let k = cliques.len();
    let weight = |a: &[usize], b: &[usize]| -> usize {
        let mut count = 0;
        for x in a {
            if b.binary_search(x).is_ok() {
                count += 1;
            }
        }
        count
    };
    let mut in_tree = vec![false; k];
    in_tree[0] = true;
    let mut edges = Vec::with_capacity(k.saturating_sub(1));
    for _ in 1..k {
        let mut best: Option<(usize, usize, usize)> = None; // (weight, new, old)
        for v in 0..k {
            if in_tree[v] {
                continue;
            }
            for u in 0..k {
                if !in_tree[u] {
                    continue;
                }
                let w = weight(&cliques[u], &cliques[v]);
                let cand = (w, v, u);
                best = match best {
                    None => Some(cand),
                    Some((bw, bv, bu)) => {
                        if w > bw || (w == bw && (v < bv || (v == bv && u < bu))) {
                            Some(cand)
                        } else {
                            Some((bw, bv, bu))
                        }
                    }
                };
            }
        }
        let (_, v, u) = best.expect("graph has at least one clique outside the tree");
        in_tree[v] = true;
        edges.push((u.min(v), u.max(v)));
    }
    edges.sort_unstable();
    Ok(CliqueTree { cliques, edges })
}

/// True iff the nodes are exactly the maximal cliques of `g`, the edges form
/// a spanning tree, and every vertex's clique set induces a subtree.
pub fn validate_clique_tree(g: &Graph, t: &CliqueTree) -> bool {
    let Some(peo) = is_chordal(g) else {
        return false;
    };
    let Ok(expected) = maximal_cliques(g, &peo) else {
        return false;
    };
    let mut actual = t.cliques.clone();
    for c in &mut actual {
        c.sort_unstable();
    }
    actual.sort();
    if actual != expected {
        return false;
    }
    let k = t.node_count();
    if t.edges.len() + 1 != k {
        return false;
    }
    // Connectivity of the tree itself.
    let mut seen = vec![false; k];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for v in t.tree_neighbors(u) {
            if v >= k {
                return false;
            }
            if !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    if seen.iter().any(|&s| !s) {
        return false;
    }
    // Subtree property per vertex.
    for v in 0..g.n() {
        let holders: Vec<usize> = (0..k)
            .filter(|&i| t.cliques[i].binary_search(&v).is_ok())
            .collect();
        if holders.is_empty() {
            return false;
        }
        let mut reach = vec![false; k];
        let mut stack = vec![holders[0]];
        reach[holders[0]] = true;
        while let Some(u) = stack.pop() {
            for w in t.tree_neighbors(u) {
                if !reach[w] && t.cliques[w].binary_search(&v).is_ok() {
                    reach[w] = true;
                    stack.push(w);
                }
            }
        }
        if holders.iter().any(|&h| !reach[h]) {
            return false;
        }
    }
    true
}

/// A collection of maximal cliques covering every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueCover {
    pub members: Vec<Vec<usize>>,
}

/// Maximum independent set and a clique cover of the same size.
///
/// Greedy over the elimination ordering: take each vertex none of whose
/// neighbors was taken before it; the taken vertex plus its later neighbors
/// seeds one cover member. Each member is then extended to a maximal clique
/// by repeatedly adding the lowest-index common neighbor. Every member
/// contains its own independent-set vertex, so extended members stay
/// pairwise distinct and the cover size equals the independence number.
pub fn alpha_and_cover(g: &Graph, peo: &Peo) -> Result<(Vec<usize>, CliqueCover), ChordalError> {
    if !is_peo(g, &peo.order) {
        return Err(ChordalError::InvalidPeo);
    }
    let n = g.n();
    let mut pos = vec![0usize; n];
    for (i, &v) in peo.order.iter().enumerate() {
        pos[v] = i;
    }
    let mut marked = vec![false; n];
    let mut independent = Vec::new();
    let mut members = Vec::new();
    for &v in &peo.order {
        if marked[v] {
            continue;
        }
        independent.push(v);
        let mut member: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| pos[w] > pos[v])
            .collect();
        member.push(v);
        member.sort_unstable();
        for &w in g.neighbors(v) {
            marked[w] = true;
        }
        members.push(member);
    }
    for member in &mut members {
        extend_to_maximal(g, member);
    }
    let mut dedup = members.clone();
    dedup.sort();
    dedup.dedup();
    assert_eq!(
        dedup.len(),
        members.len(),
        "cover members collide after extension; independence computation is broken"
    );
    independent.sort_unstable();
    debug_assert!(g.is_independent_set(&independent));
    Ok((independent, CliqueCover { members }))
}

/// Extends a clique in place to a maximal one, lowest-index candidate first.
fn extend_to_maximal(g: &Graph, clique: &mut Vec<usize>) {
    loop {
        let mut added = false;
        for v in 0..g.n() {
            if clique.binary_search(&v).is_ok() {
                continue;
            }
            if clique.iter().all(|&u| g.has_edge(u, v)) {
                let pos = clique.binary_search(&v).unwrap_err();
                clique.insert(pos, v);
                added = true;
                break;
            }
        }
        if !added {
            return;
        }
    }
}

/// The lowest-index vertex that lives in the leaf clique and nowhere else.
pub fn leaf_private_vertex(
    g: &Graph,
    t: &CliqueTree,
    leaf: usize,
) -> Result<usize, ChordalError> {
    let _ = g;
    if t.node_count() > 1 && t.node_degree(leaf) != 1 {
        return Err(ChordalError::NotALeaf(leaf));
    }
    for &v in &t.cliques[leaf] {
        let elsewhere = (0..t.node_count())
            .any(|i| i != leaf && t.cliques[i].binary_search(&v).is_ok());
        if !elsewhere {
            return Ok(v);
        }
    }
    Err(ChordalError::NoPrivateVertex(leaf))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn c4() -> Graph {
        Graph::from_edges(&["0", "1", "2", "3"], &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    fn k4() -> Graph {
        Graph::from_edges(
            &["0", "1", "2", "3"],
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        )
        .unwrap()
    }

    #[test]
    fn c4_is_not_chordal() {
        assert!(is_chordal(&c4()).is_none());
    }

    #[test]
    fn k4_is_chordal() {
        assert!(is_chordal(&k4()).is_some());
    }

    #[test]
    fn c5_and_c6_are_not_chordal() {
        for n in [5usize, 6] {
            let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
            let g = Graph::from_edges(&labels, &edges).unwrap();
            assert!(is_chordal(&g).is_none(), "C{n} misclassified as chordal");
        }
    }

    #[test]
    fn k3_single_clique() {
        let g = Graph::from_edges(&["0", "1", "2"], &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let peo = is_chordal(&g).unwrap();
        assert_eq!(maximal_cliques(&g, &peo).unwrap(), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn p3_two_cliques() {
        let g = Graph::parse("a b\nb c").unwrap();
        let peo = is_chordal(&g).unwrap();
        assert_eq!(
            maximal_cliques(&g, &peo).unwrap(),
            vec![vec![0, 1], vec![1, 2]]
        );
    }

    #[test]
    fn invalid_peo_rejected() {
        // In P3 the middle vertex first is not an elimination ordering.
        let g = Graph::parse("a b\nb c").unwrap();
        let bad = Peo { order: vec![1, 0, 2] };
        assert_eq!(maximal_cliques(&g, &bad), Err(ChordalError::InvalidPeo));
    }

    #[test]
    fn p3_tree_single_edge() {
        let g = Graph::parse("a b\nb c").unwrap();
        let t = build_clique_tree(&g).unwrap();
        assert_eq!(t.cliques, vec![vec![0, 1], vec![1, 2]]);
        assert_eq!(t.edges, vec![(0, 1)]);
        assert!(validate_clique_tree(&g, &t));
    }

    #[test]
    fn disconnected_edges_join() {
        let g = Graph::parse("a b\nc d").unwrap();
        let t = build_clique_tree(&g).unwrap();
        assert_eq!(t.node_count(), 2);
        assert_eq!(t.edges.len(), 1);
        assert!(validate_clique_tree(&g, &t));
    }

    #[test]
    fn single_node_tree_valid() {
        let g = Graph::from_edges(&["0", "1", "2"], &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let t = CliqueTree {
            cliques: vec![vec![0, 1, 2]],
            edges: vec![],
        };
        assert!(validate_clique_tree(&g, &t));
    }

    #[test]
    fn broken_subtree_detected() {
        // Star of three edges sharing vertex 1: clique tree must keep the
        // cliques containing 1 connected, so a path through none fails.
        let g = Graph::parse("a b\nb c\nb d").unwrap();
        let t = build_clique_tree(&g).unwrap();
        assert!(validate_clique_tree(&g, &t));
        let bad = CliqueTree {
            cliques: t.cliques.clone(),
            edges: vec![(0, 1), (0, 2)],
        };
        // Whether this particular rewiring is valid depends on the clique
        // layout; at minimum the validator must agree with a direct check.
        let direct_ok = {
            let mut ok = true;
            for v in 0..g.n() {
                let holders: Vec<usize> = (0..bad.node_count())
                    .filter(|&i| bad.cliques[i].binary_search(&v).is_ok())
                    .collect();
                if holders.len() > 1 {
                    // All holders must be connected via holder-only nodes.
                    let mut reach = vec![false; bad.node_count()];
                    let mut stack = vec![holders[0]];
                    reach[holders[0]] = true;
                    while let Some(u) = stack.pop() {
                        for w in bad.tree_neighbors(u) {
                            if !reach[w] && bad.cliques[w].binary_search(&v).is_ok() {
                                reach[w] = true;
                                stack.push(w);
                            }
                        }
                    }
                    ok &= holders.iter().all(|&h| reach[h]);
                }
            }
            ok
        };
        assert_eq!(validate_clique_tree(&g, &bad), direct_ok);
    }

    #[test]
    fn alpha_k5() {
        let labels: Vec<String> = (0..5).map(|i| i.to_string()).collect();
        let mut edges = Vec::new();
        for i in 0..5 {
            for j in i + 1..5 {
                edges.push((i, j));
            }
        }
        let g = Graph::from_edges(&labels, &edges).unwrap();
        let peo = is_chordal(&g).unwrap();
        let (ind, cover) = alpha_and_cover(&g, &peo).unwrap();
        assert_eq!(ind.len(), 1);
        assert_eq!(cover.members, vec![vec![0, 1, 2, 3, 4]]);
    }

    #[test]
    fn alpha_4k1() {
        let g = Graph::parse("a\nb\nc\nd").unwrap();
        let peo = is_chordal(&g).unwrap();
        let (ind, cover) = alpha_and_cover(&g, &peo).unwrap();
        assert_eq!(ind, vec![0, 1, 2, 3]);
        assert_eq!(cover.members.len(), 4);
        for m in &cover.members {
            assert_eq!(m.len(), 1);
        }
    }

    #[test]
    fn cover_members_are_maximal_cliques() {
        let g = Graph::parse("a b\nb c\nc d\nd e\nb d").unwrap();
        let peo = is_chordal(&g).unwrap();
        let (ind, cover) = alpha_and_cover(&g, &peo).unwrap();
        assert_eq!(ind.len(), cover.members.len());
        let all = maximal_cliques(&g, &peo).unwrap();
        for m in &cover.members {
            assert!(all.contains(m), "{m:?} is not a maximal clique");
        }
        let mut covered: Vec<usize> = cover.members.concat();
        covered.sort_unstable();
        covered.dedup();
        assert_eq!(covered, (0..g.n()).collect::<Vec<_>>());
    }

    #[test]
    fn private_vertex_p3() {
        let g = Graph::parse("a b\nb c").unwrap();
        let t = build_clique_tree(&g).unwrap();
        assert_eq!(leaf_private_vertex(&g, &t, 0).unwrap(), 0);
        assert_eq!(leaf_private_vertex(&g, &t, 1).unwrap(), 2);
    }

    #[test]
    fn private_vertex_rejects_internal_node() {
        let g = Graph::parse("a b\nb c\nc d").unwrap();
        let t = build_clique_tree(&g).unwrap();
        let internal = (0..t.node_count())
            .find(|&i| t.node_degree(i) == 2)
            .unwrap();
        assert_eq!(
            leaf_private_vertex(&g, &t, internal),
            Err(ChordalError::NotALeaf(internal))
        );
    }
}
