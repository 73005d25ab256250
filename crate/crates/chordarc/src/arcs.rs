//! Circular-arc representations built by traversing a clique tree.
//!
//! An Euler tour of the clique tree (as a symmetric digraph) lays the clique
//! occurrences `A_0..A_{k-1}` around a circle of `k` points. A mapping `φ`
//! places every vertex at one occurrence of a clique containing it; each
//! vertex's arc then stretches from just after the first occurrence behind
//! its position that drops it to just before the first occurrence ahead that
//! drops it. When every edge satisfies one of the four star conditions,
//! those arcs form an exact model of the graph, and
//! [`construct_representation`] chooses the tree, tour, and `φ` so that they
//! do whenever the graph is chordal, has no blocking quadruple, and has
//! independence number at most four.

use crate::chordal::{
    alpha_and_cover, build_clique_tree, is_chordal, leaf_private_vertex, validate_clique_tree,
    ChordalError, CliqueTree,
};
use crate::graph::Graph;
use crate::obstruction::{avoid_witness, find_blocking_quadruple, BlockingQuadruple};
use serde_json::json;
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ArcError {
    #[error("graph is not chordal")]
    NotChordal,
    #[error("graph contains a blocking quadruple on {:?}", .0.quad)]
    HasBlockingQuadruple(Box<BlockingQuadruple>),
    #[error("independence number {0} is outside the constructive range")]
    AlphaTooLarge(usize),
    #[error("vertex {0} belongs to every clique occurrence on the tour")]
    UniversalVertex(usize),
    #[error("vertex {0} is not in its assigned tour clique")]
    Star0Violation(usize),
    #[error("the four vertices form a blocking quadruple; avoid graph rejected")]
    QuadrupleIsBq,
    #[error("construction invariant failed: {0}")]
    ProofViolation(String),
    #[error(transparent)]
    Chordal(#[from] ChordalError),
}

/// Cyclic clique-node sequence traversing each tree edge once per direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerTour {
    pub nodes: Vec<usize>,
}

impl EulerTour {
    pub fn k(&self) -> usize {
        self.nodes.len()
    }

    /// Lexicographically smallest rotation, for dedup and comparison.
    pub fn canonical_rotation(&self) -> Vec<usize> {
        let k = self.nodes.len();
        let mut best = self.nodes.clone();
        for s in 1..k {
            let rot: Vec<usize> = (0..k).map(|i| self.nodes[(i + s) % k]).collect();
            if rot < best {
                best = rot;
            }
        }
        best
    }

    /// Checks the defining invariants against a tree.
    pub fn is_valid_for(&self, t: &CliqueTree) -> bool {
        let k = self.nodes.len();
        if t.node_count() == 1 {
            return self.nodes == [0];
        }
        if k != 2 * t.edges.len() {
            return false;
        }
        let mut used: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for i in 0..k {
            let a = self.nodes[i];
            let b = self.nodes[(i + 1) % k];
            *used.entry((a, b)).or_insert(0) += 1;
        }
        for &(a, b) in &t.edges {
            if used.get(&(a, b)) != Some(&1) || used.get(&(b, a)) != Some(&1) {
                return false;
            }
        }
        used.len() == 2 * t.edges.len()
    }
}

/// All Euler tours from depth-first traversal rooted at the lowest-index
/// branch vertex (node 0 when the tree is a path), enumerating child orders
/// at vertices of tree degree ≥ 3 and keeping ascending order elsewhere.
/// Deduplicated up to rotation, in first-generated order.
pub fn enumerate_euler_tours(t: &CliqueTree) -> Vec<EulerTour> {
    let k = t.node_count();
    if k == 1 {
        return vec![EulerTour { nodes: vec![0] }];
    }
    let root = (0..k).find(|&i| t.node_degree(i) >= 3).unwrap_or(0);
    let walks = subtree_walks(t, root, usize::MAX);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mut w in walks {
        w.pop(); // the closing return to the root is implicit in the cycle
        let tour = EulerTour { nodes: w };
        debug_assert!(tour.is_valid_for(t));
        if seen.insert(tour.canonical_rotation()) {
            out.push(tour);
        }
    }
    out
}

/// Closed walks `node .. node` covering the subtree under `node`.
fn subtree_walks(t: &CliqueTree, node: usize, parent: usize) -> Vec<Vec<usize>> {
    let children: Vec<usize> = t
        .tree_neighbors(node)
        .into_iter()
        .filter(|&c| c != parent)
        .collect();
    if children.is_empty() {
        return vec![vec![node]];
    }
    let per_child: Vec<Vec<Vec<usize>>> = children
        .iter()
        .map(|&c| subtree_walks(t, c, node))
        .collect();
    let orders: Vec<Vec<usize>> = if t.node_degree(node) >= 3 {
        permutations(children.len())
    } else {
        vec![(0..children.len()).collect()]
    };
    let mut out = Vec::new();
    for order in &orders {
        let mut partials: Vec<Vec<usize>> = vec![vec![node]];
        for &ci in order {
            let mut next = Vec::new();
            for partial in &partials {
                for walk in &per_child[ci] {
                    let mut ext = partial.clone();
                    ext.extend_from_slice(walk);
                    ext.push(node);
                    next.push(ext);
                }
            }
            partials = next;
        }
        out.extend(partials);
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(n, cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Vertex → tour index placement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiMap {
    pub phi: Vec<usize>,
}

/// Avoid relation among four designated vertices. Edges come in
/// complementary pairs, so a non-quadruple yields a 4-cycle, a perfect
/// matching, or no edges at all.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AvoidGraphH {
    pub verts: [usize; 4],
    adj: [[bool; 4]; 4],
}

impl AvoidGraphH {
    pub fn has_edge_slots(&self, i: usize, j: usize) -> bool {
        self.adj[i][j]
    }

    pub fn has_edge_verts(&self, u: usize, v: usize) -> bool {
        let i = self.verts.iter().position(|&x| x == u);
        let j = self.verts.iter().position(|&x| x == v);
        match (i, j) {
            (Some(i), Some(j)) => self.adj[i][j],
            _ => false,
        }
    }

    pub fn edge_count(&self) -> usize {
        let mut c = 0;
        for i in 0..4 {
            for j in i + 1..4 {
                if self.adj[i][j] {
                    c += 1;
                }
            }
        }
        c
    }
}

/// The avoid graph on four distinct pairwise non-adjacent vertices.
pub fn build_avoid_graph(g: &Graph, verts: [usize; 4]) -> Result<AvoidGraphH, ArcError> {
    assert!(
        g.is_independent_set(&verts),
        "avoid graph requires an independent quadruple"
    );
    let mut adj = [[false; 4]; 4];
    for (pair, complement) in [
        ([0usize, 1usize], [2usize, 3usize]),
        ([0, 2], [1, 3]),
        ([0, 3], [1, 2]),
        ([2, 3], [0, 1]),
        ([1, 3], [0, 2]),
        ([1, 2], [0, 3]),
    ] {
        let p1 = (verts[pair[0]], verts[pair[1]]);
        let p2 = (verts[complement[0]], verts[complement[1]]);
        if avoid_witness(g, p1, p2).is_some() {
            adj[pair[0]][pair[1]] = true;
            adj[pair[1]][pair[0]] = true;
        }
    }
    let h = AvoidGraphH { verts, adj };
    if h.edge_count() == 6 {
        return Err(ArcError::QuadrupleIsBq);
    }
    // Avoidance is symmetric in the two pairs, so edges arrive in
    // complementary pairs.
    for (i, j, x, y) in [(0, 1, 2, 3), (0, 2, 1, 3), (0, 3, 1, 2)] {
        debug_assert_eq!(h.adj[i][j], h.adj[x][y]);
    }
    Ok(h)
}

/// A circular-arc model over `k` circle points: per-vertex `(ℓ, r)` index
/// pairs plus the vertices drawn as the full circle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcRep {
    pub k: usize,
    pub arcs: BTreeMap<usize, (usize, usize)>,
    pub full: BTreeSet<usize>,
}

impl ArcRep {
    /// Membership mask of the closed clockwise arc from `λ_{ℓ+1}` to
    /// `λ_{r−1}`.
    pub fn covered_points(&self, v: usize) -> Vec<bool> {
        let mut mask = vec![false; self.k];
        if self.full.contains(&v) {
            mask.iter_mut().for_each(|b| *b = true);
            return mask;
        }
        let (l, r) = self.arcs[&v];
        let start = (l + 1) % self.k;
        let end = (r + self.k - 1) % self.k;
        let len = (end + self.k - start) % self.k + 1;
        for step in 0..len {
            mask[(start + step) % self.k] = true;
        }
        mask
    }

    /// Two arcs intersect exactly when they share a circle point; full
    /// circles meet everything.
    pub fn intersects(&self, u: usize, v: usize) -> bool {
        if self.full.contains(&u) || self.full.contains(&v) {
            return true;
        }
        let a = self.covered_points(u);
        let b = self.covered_points(v);
        (0..self.k).any(|i| a[i] && b[i])
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.arcs.keys().copied().chain(self.full.iter().copied())
    }

    pub fn to_json(&self, g: &Graph) -> serde_json::Value {
        let arcs: BTreeMap<String, Vec<usize>> = self
            .arcs
            .iter()
            .map(|(&v, &(l, r))| (g.label(v).to_string(), vec![l, r]))
            .collect();
        let full: Vec<String> = self
            .full
            .iter()
            .map(|&v| g.label(v).to_string())
            .collect();
        json!({ "k": self.k, "arcs": arcs, "full": full })
    }

    /// Parses the JSON emitted by [`ArcRep::to_json`], resolving labels
    /// against `g`.
    pub fn from_json(g: &Graph, value: &serde_json::Value) -> Result<ArcRep, String> {
        let k = value
            .get("k")
            .and_then(|v| v.as_u64())
            .ok_or("missing integer field `k`")? as usize;
        if k == 0 {
            return Err("`k` must be positive".into());
        }
        let mut arcs = BTreeMap::new();
        let obj = value
            .get("arcs")
            .and_then(|v| v.as_object())
            .ok_or("missing object field `arcs`")?;
        for (label, pair) in obj {
            let v = g
                .index_of(label)
                .ok_or_else(|| format!("unknown vertex label `{label}`"))?;
            let nums: Vec<usize> = pair
                .as_array()
                .map(|a| {
                    a.iter()
                        .filter_map(|x| x.as_u64())
                        .map(|x| x as usize)
                        .collect()
                })
                .unwrap_or_default();
            if nums.len() != 2 || nums[0] >= k || nums[1] >= k {
                return Err(format!("vertex `{label}` needs two indices below {k}"));
            }
            arcs.insert(v, (nums[0], nums[1]));
        }
        let mut full = BTreeSet::new();
        if let Some(arr) = value.get("full").and_then(|v| v.as_array()) {
            for item in arr {
                let label = item.as_str().ok_or("`full` entries must be labels")?;
                let v = g
                    .index_of(label)
                    .ok_or_else(|| format!("unknown vertex label `{label}`"))?;
                full.insert(v);
            }
        }
        Ok(ArcRep { k, arcs, full })
    }
}

fn check_star0(g: &Graph, t: &CliqueTree, tour: &EulerTour, phi: &PhiMap) -> Result<(), ArcError> {
    for u in 0..g.n() {
        let idx = phi.phi[u];
        if idx >= tour.k() {
            return Err(ArcError::Star0Violation(u));
        }
        let node = tour.nodes[idx];
        if t.cliques[node].binary_search(&u).is_err() {
            return Err(ArcError::Star0Violation(u));
        }
    }
    Ok(())
}

/// Computes every vertex's `(ℓ, r)` pair by the two scans from its `φ`
/// position: backward to the first occurrence dropping the vertex, forward
/// likewise. Requires each vertex absent from at least one occurrence.
pub fn arcs_from_phi(
    g: &Graph,
    t: &CliqueTree,
    tour: &EulerTour,
    phi: &PhiMap,
) -> Result<ArcRep, ArcError> {
    check_star0(g, t, tour, phi)?;
    let k = tour.k();
    let contains = |idx: usize, u: usize| t.cliques[tour.nodes[idx]].binary_search(&u).is_ok();
    let mut arcs = BTreeMap::new();
    for u in 0..g.n() {
        let p = phi.phi[u];
        let l = (1..k).map(|s| (p + k - s) % k).find(|&i| !contains(i, u));
        let r = (1..k).map(|s| (p + s) % k).find(|&i| !contains(i, u));
        match (l, r) {
            (Some(l), Some(r)) => {
                arcs.insert(u, (l, r));
            }
            _ => return Err(ArcError::UniversalVertex(u)),
        }
    }
    Ok(ArcRep {
        k,
        arcs,
        full: BTreeSet::new(),
    })
}

/// Outcome of the star-condition check for one edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarFailure {
    pub edge: (usize, usize),
    /// Verdicts for the four conditions in order.
    pub verdicts: [bool; 4],
    /// A violating vertex per failed condition.
    pub witnesses: [Option<usize>; 4],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarReport {
    pub pass: bool,
    pub failures: Vec<StarFailure>,
}

/// Evaluates the four edge conditions.
///
/// For an edge `uv`, a vertex `x` counts on one side when `φ(x)` lies
/// strictly inside the clockwise index interval from `φ(u)` to `φ(v)` (or
/// the reverse side). Conditions 1–4 ask `u` (resp. `v`) to be adjacent to
/// every counted `x` on one fixed side; an edge passes when at least one
/// condition holds, and edges with `φ(u) = φ(v)` pass vacuously.
pub fn check_star_conditions(
    g: &Graph,
    tour: &EulerTour,
    t: &CliqueTree,
    phi: &PhiMap,
) -> Result<StarReport, ArcError> {
    check_star0(g, t, tour, phi)?;
    let k = tour.k();
    let between = |a: usize, b: usize, x: usize| -> bool {
        if a == b {
            return false;
        }
        let rel_x = (x + k - a) % k;
        let rel_b = (b + k - a) % k;
        rel_x > 0 && rel_x < rel_b
    };
    let mut failures = Vec::new();
    for (u, v) in g.edges() {
        let (pu, pv) = (phi.phi[u], phi.phi[v]);
        if pu == pv {
            continue;
        }
        let mut verdicts = [true; 4];
        let mut witnesses = [None; 4];
        for x in 0..g.n() {
            let side1 = between(pu, pv, phi.phi[x]);
            let side2 = between(pv, pu, phi.phi[x]);
            let checks = [
                (side1, u, 0usize),
                (side1, v, 1),
                (side2, u, 2),
                (side2, v, 3),
            ];
            for (applies, end, c) in checks {
                if applies && verdicts[c] && !g.has_edge(end, x) {
                    verdicts[c] = false;
                    witnesses[c] = Some(x);
                }
            }
        }
        if !verdicts.iter().any(|&b| b) {
            failures.push(StarFailure {
                edge: (u, v),
                verdicts,
                witnesses,
            });
        }
    }
    Ok(StarReport {
        pass: failures.is_empty(),
        failures,
    })
}

/// Builds a verified circular-arc representation of a chordal graph with no
/// blocking quadruple and independence number at most four.
///
/// Universal vertices are set aside and re-added as full circles. The
/// remaining graph must be chordal; a blocking quadruple or an independence
/// number of five or more is an error. Otherwise the clique tree's leaf
/// count dispatches the construction: a path tree gets the two-sweep tour,
/// three leaves covering the graph place each vertex at its cover clique,
/// and four leaves (or three leaves plus an interior cover clique) search
/// Euler tours that respect the avoid graph, re-attaching one tree edge
/// when the search is obstructed. The final model is star-checked and
/// verified against the input before being returned; internal failures
/// surface as `ProofViolation`.
pub fn construct_representation(g: &Graph) -> Result<ArcRep, ArcError> {
    let universal: BTreeSet<usize> = (0..g.n()).filter(|&v| g.is_universal(v)).collect();
    let rest: Vec<usize> = (0..g.n()).filter(|v| !universal.contains(v)).collect();
    if rest.is_empty() {
        return Ok(ArcRep {
            k: 1,
            arcs: BTreeMap::new(),
            full: universal,
        });
    }
    let core = g.induced(&rest).expect("vertex set is in range");
    let peo = is_chordal(&core).ok_or(ArcError::NotChordal)?;
    if let Some(bq) = find_blocking_quadruple(&core) {
        let quad = bq.quad.map(|v| rest[v]);
        let witnesses = bq.witnesses.clone().map(|(p, h)| {
            let verts: Vec<usize> = p.vertices().iter().map(|&v| rest[v]).collect();
            (
                crate::graph::Path::new(g, verts).expect("paths survive index lifting"),
                h,
            )
        });
        return Err(ArcError::HasBlockingQuadruple(Box::new(
            BlockingQuadruple { quad, witnesses },
        )));
    }
    let (independent, cover) = alpha_and_cover(&core, &peo)?;
    let alpha = independent.len();
    if alpha >= 5 {
        return Err(ArcError::AlphaTooLarge(alpha));
    }
    let mut tree = build_clique_tree(&core)?;
    let cap = 2 * tree.edges.len() + 2;
    let mut iterations = 0;
    let (tour, phi) = loop {
        iterations += 1;
        if iterations > cap {
            return Err(ArcError::ProofViolation(
                "tree re-attachment did not converge".into(),
            ));
        }
        let leaves = tree.leaves();
        if tree.node_count() > 1 {
            // Every clique cover contains every leaf clique.
            for &leaf in &leaves {
                if !cover.members.contains(&tree.cliques[leaf]) {
                    return Err(ArcError::ProofViolation(format!(
                        "leaf clique {leaf} missing from the clique cover"
                    )));
                }
            }
        }
        match leaves.len() {
            1 => {
                return Err(ArcError::ProofViolation(
                    "single-clique graph survived universal stripping".into(),
                ))
            }
            2 => break path_tree_assignment(&core, &tree),
            3 if cover.members.len() == 3 => break leaf_cover_assignment(&core, &tree)?,
            3 => match interior_cover_case(&core, &tree, &cover)? {
                CaseOutcome::Done(tp) => break tp,
                CaseOutcome::Swapped(next) => {
                    tree = next;
                    continue;
                }
            },
            4 => match four_leaf_case(&core, &tree)? {
                CaseOutcome::Done(tp) => break tp,
                CaseOutcome::Swapped(next) => {
                    tree = next;
                    continue;
                }
            },
            n => {
                return Err(ArcError::ProofViolation(format!(
                    "clique tree has {n} leaves with cover size {}",
                    cover.members.len()
                )))
            }
        }
    };
    let rep_core = arcs_from_phi(&core, &tree, &tour, &phi)?;
    let star = check_star_conditions(&core, &tour, &tree, &phi)?;
    if !star.pass {
        return Err(ArcError::ProofViolation(format!(
            "star conditions failed on {} edge(s)",
            star.failures.len()
        )));
    }
    let mut arcs = BTreeMap::new();
    for (&v, &lr) in &rep_core.arcs {
        arcs.insert(rest[v], lr);
    }
    let rep = ArcRep {
        k: rep_core.k,
        arcs,
        full: universal,
    };
    let report = crate::oracle::verify_representation(g, &rep)
        .map_err(|e| ArcError::ProofViolation(format!("representation malformed: {e}")))?;
    if !report.equal {
        return Err(ArcError::ProofViolation(format!(
            "intersection graph differs: {} missing, {} extra",
            report.missing.len(),
            report.extra.len()
        )));
    }
    Ok(rep)
}

enum CaseOutcome {
    Done((EulerTour, PhiMap)),
    Swapped(CliqueTree),
}

/// Path-shaped tree: forward sweep then backward sweep, every vertex placed
/// at the first forward clique containing it. The cliques holding a vertex
/// form a consecutive run of the path, which makes the first star condition
/// hold for every edge.
fn path_tree_assignment(g: &Graph, t: &CliqueTree) -> (EulerTour, PhiMap) {
    let leaves = t.leaves();
    let start = leaves[0];
    let m = t.node_count();
    let mut order = vec![start];
    let mut prev = usize::MAX;
    while order.len() < m {
        let cur = *order.last().unwrap();
        let next = t
            .tree_neighbors(cur)
            .into_iter()
            .find(|&x| x != prev)
            .expect("path continues");
        prev = cur;
        order.push(next);
    }
    let mut nodes = order.clone();
    for i in (1..m - 1).rev() {
        nodes.push(order[i]);
    }
    let tour = EulerTour { nodes };
    let phi = (0..g.n())
        .map(|u| {
            (0..m)
                .find(|&i| t.cliques[order[i]].binary_search(&u).is_ok())
                .expect("every vertex lies in a maximal clique")
        })
        .collect();
    (tour, PhiMap { phi })
}

/// Three leaves covering the graph: any tour works, every vertex sits at
/// the unique occurrence of the lowest leaf clique containing it.
fn leaf_cover_assignment(g: &Graph, t: &CliqueTree) -> Result<(EulerTour, PhiMap), ArcError> {
    let leaves = t.leaves();
    let tour = enumerate_euler_tours(t)
        .into_iter()
        .next()
        .expect("every tree has a tour");
    let phi = leaf_phi(g, t, &tour, &leaves)?;
    Ok((tour, phi))
}

/// Positions of selected clique nodes along a tour, in tour order.
fn restriction(tour: &EulerTour, nodes: &BTreeSet<usize>) -> Vec<usize> {
    tour.nodes
        .iter()
        .copied()
        .filter(|n| nodes.contains(n))
        .collect()
}

fn cyclically_equal(a: &[usize], b: &[usize]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let n = a.len();
    (0..n).any(|s| (0..n).all(|i| a[(s + i) % n] == b[i]))
}

/// Four leaves: the leaves are the cover, their private vertices define the
/// avoid graph, and the tour must place avoid-related leaves cyclically
/// consecutive. When no tour of a two-branch tree works, one of the two
/// edges at the branch nearer the first leaf pair moves to the other
/// branch, producing a single-branch tree that always admits a tour.
fn four_leaf_case(g: &Graph, t: &CliqueTree) -> Result<CaseOutcome, ArcError> {
    let leaves = t.leaves();
    let privates: Vec<usize> = leaves
        .iter()
        .map(|&l| leaf_private_vertex(g, t, l))
        .collect::<Result<_, _>>()?;
    let quad = [privates[0], privates[1], privates[2], privates[3]];
    let h = build_avoid_graph(g, quad).map_err(|e| match e {
        ArcError::QuadrupleIsBq => ArcError::ProofViolation(
            "leaf privates form a quadruple in a quadruple-free graph".into(),
        ),
        other => other,
    })?;
    let leaf_set: BTreeSet<usize> = leaves.iter().copied().collect();
    for tour in enumerate_euler_tours(t) {
        if tour_respects(&tour, &leaf_set, &leaves, &h) {
            let phi = leaf_phi(g, t, &tour, &leaves)?;
            return Ok(CaseOutcome::Done((tour, phi)));
        }
    }
    // No tour respects the avoid graph, which pins the tree to the
    // two-branch form and the avoid graph to the crossing 4-cycle.
    let branches: Vec<usize> = (0..t.node_count())
        .filter(|&i| t.node_degree(i) >= 3)
        .collect();
    if branches.len() != 2 {
        return Err(ArcError::ProofViolation(
            "tour search failed outside the two-branch form".into(),
        ));
    }
    let c = branches[0];
    let w = branches[1];
    let c_side: Vec<usize> = leaves
        .iter()
        .copied()
        .filter(|&l| t.tree_path(l, w).contains(&c))
        .collect();
    let w_side: Vec<usize> = leaves
        .iter()
        .copied()
        .filter(|&l| !c_side.contains(&l))
        .collect();
    if c_side.len() != 2 || w_side.len() != 2 {
        return Err(ArcError::ProofViolation(
            "branch vertices do not split the leaves two and two".into(),
        ));
    }
    let slot = |leaf: usize| leaves.iter().position(|&l| l == leaf).unwrap();
    let bad_cycle = !h.has_edge_slots(slot(c_side[0]), slot(c_side[1]))
        && !h.has_edge_slots(slot(w_side[0]), slot(w_side[1]))
        && h.edge_count() == 4;
    if !bad_cycle {
        return Err(ArcError::ProofViolation(
            "tour search failed although the avoid graph is not the crossing cycle".into(),
        ));
    }
    for &target in &c_side {
        let path = t.tree_path(c, target);
        let c1 = path[1];
        let separator: Vec<usize> = t.cliques[c]
            .iter()
            .copied()
            .filter(|v| t.cliques[c1].binary_search(v).is_ok())
            .collect();
        if separator
            .iter()
            .all(|v| t.cliques[w].binary_search(v).is_ok())
        {
            return reattach(g, t, (c, c1), w);
        }
    }
    Err(ArcError::ProofViolation(
        "neither separator is contained in the far branch clique".into(),
    ))
}

/// Removes edge `(from, to)` and attaches `to` at `anchor`, validating the
/// result is still a clique tree.
fn reattach(
    g: &Graph,
    t: &CliqueTree,
    (from, to): (usize, usize),
    anchor: usize,
) -> Result<CaseOutcome, ArcError> {
    let mut next = t.clone();
    next.edges
        .retain(|&(a, b)| (a, b) != (from.min(to), from.max(to)));
    next.edges.push((anchor.min(to), anchor.max(to)));
    next.edges.sort_unstable();
    if !validate_clique_tree(g, &next) {
        return Err(ArcError::ProofViolation(
            "re-attached tree lost the clique-tree property".into(),
        ));
    }
    Ok(CaseOutcome::Swapped(next))
}

/// Every avoid edge must join leaves that are cyclically consecutive in the
/// tour's restriction to the leaf cliques.
fn tour_respects(
    tour: &EulerTour,
    leaf_set: &BTreeSet<usize>,
    leaves: &[usize],
    h: &AvoidGraphH,
) -> bool {
    let ring = restriction(tour, leaf_set);
    let m = ring.len();
    for i in 0..4 {
        for j in i + 1..4 {
            if !h.has_edge_slots(i, j) {
                continue;
            }
            let pa = ring.iter().position(|&x| x == leaves[i]).unwrap();
            let pb = ring.iter().position(|&x| x == leaves[j]).unwrap();
            let diff = (pa + m - pb) % m;
            if diff != 1 && diff != m - 1 {
                return false;
            }
        }
    }
    true
}

/// φ for covers made of the leaves: the unique occurrence of the
/// lowest-index leaf clique containing the vertex.
fn leaf_phi(
    g: &Graph,
    t: &CliqueTree,
    tour: &EulerTour,
    leaves: &[usize],
) -> Result<PhiMap, ArcError> {
    let mut occurrence = BTreeMap::new();
    for &leaf in leaves {
        let pos = tour
            .nodes
            .iter()
            .position(|&x| x == leaf)
            .expect("leaf occurs in the tour");
        occurrence.insert(leaf, pos);
    }
    let phi = (0..g.n())
        .map(|u| {
            let leaf = leaves
                .iter()
                .copied()
                .find(|&l| t.cliques[l].binary_search(&u).is_ok())
                .ok_or_else(|| {
                    ArcError::ProofViolation(format!("vertex {u} outside every leaf clique"))
                })?;
            Ok(occurrence[&leaf])
        })
        .collect::<Result<Vec<usize>, ArcError>>()?;
    Ok(PhiMap { phi })
}

/// Three leaves but a four-clique cover: the interior cover clique anchors
/// the vertices outside the leaves. The tour is pinned to the cyclic
/// pattern `Q1,Q4,Q2,Q4,Q3(,Q4)` after ordering the leaves so that the
/// first pair carries no avoid edge; when the structure blocks the ordering
/// the interior clique is re-attached at the branch vertex, handing the
/// graph to the four-leaf case.
fn interior_cover_case(
    g: &Graph,
    t: &CliqueTree,
    cover: &crate::chordal::CliqueCover,
) -> Result<CaseOutcome, ArcError> {
    let leaves = t.leaves();
    let leaf_cliques: Vec<&Vec<usize>> = leaves.iter().map(|&l| &t.cliques[l]).collect();
    let interior_member = cover
        .members
        .iter()
        .find(|m| !leaf_cliques.contains(m))
        .ok_or_else(|| ArcError::ProofViolation("no interior cover clique".into()))?;
    let q4_node = (0..t.node_count())
        .find(|&i| &t.cliques[i] == interior_member)
        .ok_or_else(|| {
            ArcError::ProofViolation("interior cover clique is not a tree node".into())
        })?;
    let branches: Vec<usize> = (0..t.node_count())
        .filter(|&i| t.node_degree(i) >= 3)
        .collect();
    let &[branch] = branches.as_slice() else {
        return Err(ArcError::ProofViolation(
            "three-leaf tree without a unique branch vertex".into(),
        ));
    };
    let leaf_privates: Vec<usize> = leaves
        .iter()
        .map(|&l| leaf_private_vertex(g, t, l))
        .collect::<Result<_, _>>()?;
    // The interior cover clique owns a vertex outside the other three
    // members; otherwise three cliques would already cover the graph.
    let v4 = interior_member
        .iter()
        .copied()
        .find(|v| !leaf_cliques.iter().any(|c| c.binary_search(v).is_ok()))
        .ok_or_else(|| {
            ArcError::ProofViolation("interior cover clique adds no private vertex".into())
        })?;
    let quad = [leaf_privates[0], leaf_privates[1], leaf_privates[2], v4];
    let h = build_avoid_graph(g, quad).map_err(|e| match e {
        ArcError::QuadrupleIsBq => ArcError::ProofViolation(
            "cover privates form a quadruple in a quadruple-free graph".into(),
        ),
        other => other,
    })?;
    // Slot i of `h` is leaf i's private vertex, slot 3 the interior one.
    let ordered: Option<(usize, usize, usize)> = if q4_node == branch {
        // Any leaf pair without an avoid edge may open the pattern.
        [(0usize, 1usize, 2usize), (0, 2, 1), (1, 2, 0)]
            .into_iter()
            .find(|&(i, j, _)| !h.has_edge_slots(i, j))
            .map(|(i, j, r)| (leaves[i], leaves[j], leaves[r]))
    } else {
        // The leaf behind the interior clique is pinned to the middle of
        // the pattern; its avoid edges to the other two decide their order.
        let mid_slot = (0..3)
            .find(|&i| t.tree_path(branch, leaves[i]).contains(&q4_node))
            .ok_or_else(|| {
                ArcError::ProofViolation("interior clique lies on no leaf branch".into())
            })?;
        let others: Vec<usize> = (0..3).filter(|&i| i != mid_slot).collect();
        let cross = h.has_edge_slots(others[0], others[1]) && h.has_edge_slots(mid_slot, 3);
        if !cross {
            // Degenerate attachment: move the interior clique's far edge to
            // the branch vertex, producing a four-leaf tree.
            let path = t.tree_path(q4_node, leaves[mid_slot]);
            let q2p = path[1];
            let separator: Vec<usize> = t.cliques[q4_node]
                .iter()
                .copied()
                .filter(|v| t.cliques[q2p].binary_search(v).is_ok())
                .collect();
            if !separator
                .iter()
                .all(|v| t.cliques[branch].binary_search(v).is_ok())
            {
                return Err(ArcError::ProofViolation(
                    "interior separator escapes the branch clique".into(),
                ));
            }
            return reattach(g, t, (q4_node, q2p), branch);
        }
        [(others[0], others[1]), (others[1], others[0])]
            .into_iter()
            .find(|&(first, _)| !h.has_edge_slots(first, mid_slot))
            .map(|(first, last)| (leaves[first], leaves[mid_slot], leaves[last]))
    };
    let Some((q1, q2, q3)) = ordered else {
        return Err(ArcError::ProofViolation(
            "avoid graph leaves no usable leaf pair".into(),
        ));
    };
    let mut pattern = vec![q1, q4_node, q2, q4_node, q3];
    if q4_node == branch {
        pattern.push(q4_node);
    }
    let mut cover_nodes: BTreeSet<usize> = leaves.iter().copied().collect();
    cover_nodes.insert(q4_node);
    for tour in enumerate_euler_tours(t) {
        if !cyclically_equal(&restriction(&tour, &cover_nodes), &pattern) {
            continue;
        }
        let phi = interior_phi(g, t, &tour, &leaves, q4_node, q1, q2)?;
        return Ok(CaseOutcome::Done((tour, phi)));
    }
    Err(ArcError::ProofViolation(
        "no tour realizes the pinned cover pattern".into(),
    ))
}

/// φ with an interior cover clique: leaf vertices go to their leaf's unique
/// occurrence, interior-only vertices to the interior occurrence between
/// the first and second pattern leaves.
fn interior_phi(
    g: &Graph,
    t: &CliqueTree,
    tour: &EulerTour,
    leaves: &[usize],
    q4_node: usize,
    q1: usize,
    q2: usize,
) -> Result<PhiMap, ArcError> {
    let k = tour.k();
    let pos_of = |node: usize| tour.nodes.iter().position(|&x| x == node).unwrap();
    let p1 = pos_of(q1);
    let p2 = pos_of(q2);
    let in_open = |x: usize| {
        let rel_x = (x + k - p1) % k;
        let rel_b = (p2 + k - p1) % k;
        rel_x > 0 && rel_x < rel_b
    };
    let chosen: Vec<usize> = (0..k)
        .filter(|&i| tour.nodes[i] == q4_node && in_open(i))
        .collect();
    let &[q4_pos] = chosen.as_slice() else {
        return Err(ArcError::ProofViolation(
            "interior clique occurrence between the pattern leaves is not unique".into(),
        ));
    };
    let mut occurrence = BTreeMap::new();
    for &leaf in leaves {
        occurrence.insert(leaf, pos_of(leaf));
    }
    let phi = (0..g.n())
        .map(|u| {
            if let Some(&leaf) = leaves
                .iter()
                .find(|&&l| t.cliques[l].binary_search(&u).is_ok())
            {
                return Ok(occurrence[&leaf]);
            }
            if t.cliques[q4_node].binary_search(&u).is_ok() {
                return Ok(q4_pos);
            }
            Err(ArcError::ProofViolation(format!(
                "vertex {u} outside the clique cover"
            )))
        })
        .collect::<Result<Vec<usize>, ArcError>>()?;
    Ok(PhiMap { phi })
}
