//! The forbidden-subgraph families and certificate matching.
//!
//! Two catalogs share one encoding. The `Fig3-*` families are the chordal
//! minimal graphs that are not interval graphs; each carries an asteroidal
//! triple on the roles `a`, `b`, `c`. The `Fig1-*` families characterize
//! chordal (indeed nearly chordal) graphs containing a blocking quadruple;
//! each carries a blocking quadruple on the roles `a`, `b`, `c`, `d`.
//!
//! * `a` — net: triangle `ta,tb,tc` with pendants `a,b,c`; `Fig1-a` adds an
//!   isolated `d`.
//! * `b` — dome over a five-vertex path `b,p1,p2,p3,c` with a pendant `a`
//!   under the path's midpoint; `Fig1-b` adds an isolated `d`.
//! * `c` — two adjacent hubs `hl,hr` over a path `w1..wt` (t ≥ 1), an apex
//!   `a` on both hubs, `b` on `hl,w1`, `c` on `hr,wt`; `Fig1-c` adds an
//!   isolated `d`.
//! * `d` — a hub dominating a path `x1,m1..mt,x2` (t ≥ 1) with pendants `b`
//!   at `x1`, `c` at `x2`, and `a` under the hub; in `Fig1-d` one interior
//!   vertex plays the role `d`.
//! * `e` — the three-legged spider with center `d` (`Fig3-e` names the
//!   center `center`) and leg tips `a`, `b`, `c`.
//! * `Fig1-f` — triangle `d,x1,x2` with pendants `b,c` at `x1,x2` and a
//!   two-edge tail `d,mid,a`.
//! * `Fig1-g` — K4 on `d,ka,kb,kc` with pendants `a,b,c` at `ka,kb,kc`.

use crate::graph::Graph;
use serde_json::json;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ObstructionError {
    #[error("graph is not nearly chordal")]
    NotNearlyChordal,
    #[error("no obstruction found where one is guaranteed")]
    NoObstructionFound,
    #[error("unknown obstruction family `{0}`")]
    UnknownFamily(String),
    #[error("bad path parameter for family {family}: {params:?}")]
    BadParams { family: &'static str, params: Vec<usize> },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyId {
    Fig1A,
    Fig1B,
    Fig1C,
    Fig1D,
    Fig1E,
    Fig1F,
    Fig1G,
    Fig3A,
    Fig3B,
    Fig3C,
    Fig3D,
    Fig3E,
}

/// Blocking-quadruple families in search order.
pub const FIG1_FAMILIES: [FamilyId; 7] = [
    FamilyId::Fig1A,
    FamilyId::Fig1B,
    FamilyId::Fig1C,
    FamilyId::Fig1D,
    FamilyId::Fig1E,
    FamilyId::Fig1F,
    FamilyId::Fig1G,
];

/// Interval-obstruction families in search order.
pub const FIG3_FAMILIES: [FamilyId; 5] = [
    FamilyId::Fig3A,
    FamilyId::Fig3B,
    FamilyId::Fig3C,
    FamilyId::Fig3D,
    FamilyId::Fig3E,
];

impl FamilyId {
    pub fn as_str(&self) -> &'static str {
        match self {
            FamilyId::Fig1A => "Fig1-a",
            FamilyId::Fig1B => "Fig1-b",
            FamilyId::Fig1C => "Fig1-c",
            FamilyId::Fig1D => "Fig1-d",
            FamilyId::Fig1E => "Fig1-e",
            FamilyId::Fig1F => "Fig1-f",
            FamilyId::Fig1G => "Fig1-g",
            FamilyId::Fig3A => "Fig3-a",
            FamilyId::Fig3B => "Fig3-b",
            FamilyId::Fig3C => "Fig3-c",
            FamilyId::Fig3D => "Fig3-d",
            FamilyId::Fig3E => "Fig3-e",
        }
    }

    pub fn parse(s: &str) -> Result<FamilyId, ObstructionError> {
        for f in FIG1_FAMILIES.iter().chain(FIG3_FAMILIES.iter()) {
            if f.as_str() == s {
                return Ok(*f);
            }
        }
        Err(ObstructionError::UnknownFamily(s.to_string()))
    }

    /// True for the families with a variable-length path.
    pub fn is_parametrized(&self) -> bool {
        matches!(
            self,
            FamilyId::Fig1C | FamilyId::Fig1D | FamilyId::Fig3C | FamilyId::Fig3D
        )
    }

    /// Vertex count of the smallest member.
    pub fn min_size(&self) -> usize {
        match self {
            FamilyId::Fig3A => 6,
            FamilyId::Fig1B => 8,
            _ => 7,
        }
    }

    /// Interior-path length (`mids`) realizing `size` vertices, if any.
    pub(crate) fn mids_for_size(&self, size: usize) -> Option<usize> {
        match self {
            FamilyId::Fig3C => size.checked_sub(5).filter(|&t| t >= 1),
            FamilyId::Fig1C | FamilyId::Fig3D | FamilyId::Fig1D => {
                size.checked_sub(6).filter(|&t| t >= 1)
            }
            _ => (size == self.min_size()).then_some(0),
        }
    }
}

impl std::fmt::Display for FamilyId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A family instance as named roles plus the template edge set over them.
#[derive(Clone, Debug)]
pub struct Template {
    pub family: FamilyId,
    pub role_names: Vec<String>,
    pub edges: Vec<(usize, usize)>,
    /// Path parameters recorded on extracted certificates: interior vertex
    /// count for the `c` families, path edge count for the `d` families.
    pub path_params: Vec<usize>,
}

impl Template {
    pub fn size(&self) -> usize {
        self.role_names.len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&(i.min(j), i.max(j)))
    }

    pub fn degree(&self, i: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == i || b == i)
            .count()
    }

    /// The template graph itself, role names as labels.
    pub fn to_graph(&self) -> Graph {
        Graph::from_edges(&self.role_names, &self.edges).expect("templates are simple graphs")
    }
}

struct Builder {
    names: Vec<String>,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn new() -> Self {
        Builder {
            names: Vec::new(),
            edges: Vec::new(),
        }
    }

    fn role(&mut self, name: impl Into<String>) -> usize {
        self.names.push(name.into());
        self.names.len() - 1
    }

    fn edge(&mut self, i: usize, j: usize) {
        self.edges.push((i.min(j), i.max(j)));
    }

    fn finish(mut self, family: FamilyId, path_params: Vec<usize>) -> Template {
        self.edges.sort_unstable();
        self.edges.dedup();
        Template {
            family,
            role_names: self.names,
            edges: self.edges,
            path_params,
        }
    }
}

/// Builds a family instance.
///
/// `mids` is the interior path length for the parametrized families (must be
/// ≥ 1 there, 0 elsewhere). `d_pos` selects, for `Fig1-d` only, which
/// interior vertex (1-based) carries the role `d`.
pub fn family_template(
    family: FamilyId,
    mids: usize,
    d_pos: usize,
) -> Result<Template, ObstructionError> {
    let bad = || ObstructionError::BadParams {
        family: family.as_str(),
        params: vec![mids, d_pos],
    };
    match family {
        FamilyId::Fig3A | FamilyId::Fig1A => {
            if mids != 0 {
                return Err(bad());
            }
            let mut b = Builder::new();
            let a = b.role("a");
            let bb = b.role("b");
            let c = b.role("c");
            let ta = b.role("ta");
            let tb = b.role("tb");
            let tc = b.role("tc");
            b.edge(ta, tb);
            b.edge(ta, tc);
            b.edge(tb, tc);
            b.edge(a, ta);
            b.edge(bb, tb);
            b.edge(c, tc);
            if family == FamilyId::Fig1A {
                b.role("d");
            }
            Ok(b.finish(family, vec![]))
        }
        FamilyId::Fig3B | FamilyId::Fig1B => {
            if mids != 0 {
                return Err(bad());
            }
            let mut b = Builder::new();
            let a = b.role("a");
            let bb = b.role("b");
            let c = b.role("c");
            let dome = b.role("dome");
            let p1 = b.role("p1");
            let p2 = b.role("p2");
            let p3 = b.role("p3");
            b.edge(bb, p1);
            b.edge(p1, p2);
            b.edge(p2, p3);
            b.edge(p3, c);
            b.edge(dome, bb);
            b.edge(dome, p1);
            b.edge(dome, p2);
            b.edge(dome, p3);
            b.edge(dome, c);
            b.edge(a, p2);
            if family == FamilyId::Fig1B {
                b.role("d");
            }
            Ok(b.finish(family, vec![]))
        }
        FamilyId::Fig3C | FamilyId::Fig1C => {
            if mids < 1 {
                return Err(bad());
            }
            let mut b = Builder::new();
            let a = b.role("a");
            let bb = b.role("b");
            let c = b.role("c");
            let hl = b.role("hl");
            let hr = b.role("hr");
            let ws: Vec<usize> = (1..=mids).map(|i| b.role(format!("w{i}"))).collect();
            b.edge(a, hl);
            b.edge(a, hr);
            b.edge(hl, hr);
            b.edge(bb, hl);
            b.edge(bb, ws[0]);
            b.edge(c, hr);
            b.edge(c, *ws.last().unwrap());
            for &w in &ws {
                b.edge(hl, w);
                b.edge(hr, w);
            }
            for pair in ws.windows(2) {
                b.edge(pair[0], pair[1]);
            }
            if family == FamilyId::Fig1C {
                b.role("d");
            }
            Ok(b.finish(family, vec![mids]))
        }
        FamilyId::Fig3D | FamilyId::Fig1D => {
            if mids < 1 || (family == FamilyId::Fig1D && !(1..=mids).contains(&d_pos)) {
                return Err(bad());
            }
            let mut b = Builder::new();
            let a = b.role("a");
            let bb = b.role("b");
            let c = b.role("c");
            let hub = b.role("hub");
            let x1 = b.role("x1");
            let x2 = b.role("x2");
            let ms: Vec<usize> = (1..=mids)
                .map(|i| {
                    if family == FamilyId::Fig1D && i == d_pos {
                        b.role("d")
                    } else {
                        b.role(format!("m{i}"))
                    }
                })
                .collect();
            b.edge(a, hub);
            b.edge(bb, x1);
            b.edge(c, x2);
            b.edge(hub, x1);
            b.edge(hub, x2);
            for &m in &ms {
                b.edge(hub, m);
            }
            b.edge(x1, ms[0]);
            for pair in ms.windows(2) {
                b.edge(pair[0], pair[1]);
            }
            b.edge(*ms.last().unwrap(), x2);
            Ok(b.finish(family, vec![mids + 1]))
        }
        FamilyId::Fig3E | FamilyId::Fig1E => {
            if mids != 0 {
                return Err(bad());
            }
            let mut b = Builder::new();
            let a = b.role("a");
            let bb = b.role("b");
            let c = b.role("c");
            let center = b.role(if family == FamilyId::Fig1E { "d" } else { "center" });
            let la = b.role("la");
            let lb = b.role("lb");
            let lc = b.role("lc");
            b.edge(center, la);
            b.edge(center, lb);
            b.edge(center, lc);
            b.edge(a, la);
            b.edge(bb, lb);
            b.edge(c, lc);
            Ok(b.finish(family, vec![]))
        }
        FamilyId::Fig1F => {
            if mids != 0 {
                return Err(bad());
            }
            let mut b = Builder::new();
            let a = b.role("a");
            let bb = b.role("b");
            let c = b.role("c");
            let d = b.role("d");
            let x1 = b.role("x1");
            let x2 = b.role("x2");
            let mid = b.role("mid");
            b.edge(d, x1);
            b.edge(d, x2);
            b.edge(x1, x2);
            b.edge(bb, x1);
            b.edge(c, x2);
            b.edge(d, mid);
            b.edge(mid, a);
            Ok(b.finish(family, vec![]))
        }
        FamilyId::Fig1G => {
            if mids != 0 {
                return Err(bad());
            }
            let mut b = Builder::new();
            let a = b.role("a");
            let bb = b.role("b");
            let c = b.role("c");
            let d = b.role("d");
            let ka = b.role("ka");
            let kb = b.role("kb");
            let kc = b.role("kc");
            for &(i, j) in &[(d, ka), (d, kb), (d, kc), (ka, kb), (ka, kc), (kb, kc)] {
                b.edge(i, j);
            }
            b.edge(a, ka);
            b.edge(bb, kb);
            b.edge(c, kc);
            Ok(b.finish(family, vec![]))
        }
    }
}

/// A family identifier plus a role-labeled embedding into a host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionCert {
    pub family: FamilyId,
    pub roles: BTreeMap<String, usize>,
    pub path_params: Vec<usize>,
}

impl ObstructionCert {
    /// The four blocking-quadruple vertices, when all named roles exist.
    pub fn quad(&self) -> Option<[usize; 4]> {
        Some([
            *self.roles.get("a")?,
            *self.roles.get("b")?,
            *self.roles.get("c")?,
            *self.roles.get("d")?,
        ])
    }

    /// The asteroidal-triple vertices `a`, `b`, `c`.
    pub fn triple(&self) -> Option<[usize; 3]> {
        Some([
            *self.roles.get("a")?,
            *self.roles.get("b")?,
            *self.roles.get("c")?,
        ])
    }

    pub fn to_json(&self, g: &Graph) -> serde_json::Value {
        let roles: BTreeMap<String, String> = self
            .roles
            .iter()
            .map(|(k, &v)| (k.clone(), g.label(v).to_string()))
            .collect();
        json!({
            "family": self.family.as_str(),
            "roles": roles,
            "path_params": self.path_params,
        })
    }
}

/// Rebuilds the template a certificate claims and checks the embedding is an
/// exact induced match: role vertices distinct, every template edge present,
/// every template non-edge absent.
pub fn match_family(g: &Graph, cert: &ObstructionCert) -> Result<bool, ObstructionError> {
    let tmpl = match template_for_cert(cert) {
        Ok(t) => t,
        Err(ObstructionError::BadParams { .. }) => return Ok(false),
        Err(e) => return Err(e),
    };
    let mut assigned = Vec::with_capacity(tmpl.size());
    for name in &tmpl.role_names {
        match cert.roles.get(name) {
            Some(&v) if v < g.n() => assigned.push(v),
            _ => return Ok(false),
        }
    }
    if cert.roles.len() != tmpl.size() {
        return Ok(false);
    }
    let mut sorted = assigned.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != assigned.len() {
        return Ok(false);
    }
    for i in 0..assigned.len() {
        for j in i + 1..assigned.len() {
            if g.has_edge(assigned[i], assigned[j]) != tmpl.has_edge(i, j) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Reconstructs the template for a certificate, inferring which interior
/// position carries `d` for the `Fig1-d` family from the missing `m` name.
pub(crate) fn template_for_cert(cert: &ObstructionCert) -> Result<Template, ObstructionError> {
    let bad = || ObstructionError::BadParams {
        family: cert.family.as_str(),
        params: cert.path_params.clone(),
    };
    match cert.family {
        FamilyId::Fig3C | FamilyId::Fig1C => {
            let &[t] = cert.path_params.as_slice() else {
                return Err(bad());
            };
            family_template(cert.family, t, 0)
        }
        FamilyId::Fig3D => {
            let &[edges] = cert.path_params.as_slice() else {
                return Err(bad());
            };
            if edges < 2 {
                return Err(bad());
            }
            family_template(cert.family, edges - 1, 0)
        }
        FamilyId::Fig1D => {
            let &[edges] = cert.path_params.as_slice() else {
                return Err(bad());
            };
            if edges < 2 {
                return Err(bad());
            }
            let t = edges - 1;
            let missing: Vec<usize> = (1..=t)
                .filter(|i| !cert.roles.contains_key(&format!("m{i}")))
                .collect();
            let &[pos] = missing.as_slice() else {
                return Err(bad());
            };
            family_template(cert.family, t, pos)
        }
        f => {
            if !cert.path_params.is_empty() {
                return Err(bad());
            }
            family_template(f, 0, 0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_and_edge_counts() {
        let cases: Vec<(FamilyId, usize, usize, usize, usize)> = vec![
            // family, mids, d_pos, vertices, edges
            (FamilyId::Fig3A, 0, 0, 6, 6),
            (FamilyId::Fig1A, 0, 0, 7, 6),
            (FamilyId::Fig3B, 0, 0, 7, 10),
            (FamilyId::Fig1B, 0, 0, 8, 10),
            (FamilyId::Fig3C, 1, 0, 6, 9),
            (FamilyId::Fig1C, 1, 0, 7, 9),
            (FamilyId::Fig3C, 2, 0, 7, 12),
            (FamilyId::Fig3D, 1, 0, 7, 8),
            (FamilyId::Fig1D, 1, 1, 7, 8),
            (FamilyId::Fig1D, 2, 1, 8, 10),
            (FamilyId::Fig3E, 0, 0, 7, 6),
            (FamilyId::Fig1E, 0, 0, 7, 6),
            (FamilyId::Fig1F, 0, 0, 7, 7),
            (FamilyId::Fig1G, 0, 0, 7, 9),
        ];
        for (fam, mids, pos, nv, ne) in cases {
            let t = family_template(fam, mids, pos).unwrap();
            assert_eq!(t.size(), nv, "{fam} vertex count");
            assert_eq!(t.edges.len(), ne, "{fam} edge count");
            t.to_graph(); // role names valid and edges simple
        }
    }

    #[test]
    fn parametrized_families_reject_zero() {
        assert!(family_template(FamilyId::Fig3C, 0, 0).is_err());
        assert!(family_template(FamilyId::Fig1D, 1, 0).is_err());
        assert!(family_template(FamilyId::Fig1D, 1, 2).is_err());
    }

    #[test]
    fn family_ids_roundtrip() {
        for f in FIG1_FAMILIES.iter().chain(FIG3_FAMILIES.iter()) {
            assert_eq!(FamilyId::parse(f.as_str()).unwrap(), *f);
        }
        assert!(FamilyId::parse("Fig9-z").is_err());
    }

    #[test]
    fn match_family_on_template_graph() {
        for (fam, mids, pos) in [
            (FamilyId::Fig1A, 0, 0),
            (FamilyId::Fig1D, 2, 1),
            (FamilyId::Fig1G, 0, 0),
        ] {
            let tmpl = family_template(fam, mids, pos).unwrap();
            let g = tmpl.to_graph();
            let roles: BTreeMap<String, usize> = tmpl
                .role_names
                .iter()
                .enumerate()
                .map(|(i, n)| (n.clone(), i))
                .collect();
            let cert = ObstructionCert {
                family: fam,
                roles,
                path_params: tmpl.path_params.clone(),
            };
            assert_eq!(match_family(&g, &cert), Ok(true), "{fam}");
        }
    }

    #[test]
    fn match_family_rejects_extra_edge() {
        let tmpl = family_template(FamilyId::Fig1E, 0, 0).unwrap();
        let mut edges = tmpl.edges.clone();
        let a = tmpl.role_names.iter().position(|n| n == "a").unwrap();
        let b = tmpl.role_names.iter().position(|n| n == "b").unwrap();
        edges.push((a.min(b), a.max(b)));
        let g = Graph::from_edges(&tmpl.role_names, &edges).unwrap();
        let roles: BTreeMap<String, usize> = tmpl
            .role_names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i))
            .collect();
        let cert = ObstructionCert {
            family: FamilyId::Fig1E,
            roles,
            path_params: vec![],
        };
        assert_eq!(match_family(&g, &cert), Ok(false));
    }

    #[test]
    fn match_family_symmetric_swap_still_matches() {
        // The spider template is symmetric in its b and c legs.
        let tmpl = family_template(FamilyId::Fig1E, 0, 0).unwrap();
        let g = tmpl.to_graph();
        let mut roles: BTreeMap<String, usize> = tmpl
            .role_names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i))
            .collect();
        let b = roles["b"];
        let c = roles["c"];
        let lb = roles["lb"];
        let lc = roles["lc"];
        roles.insert("b".into(), c);
        roles.insert("c".into(), b);
        roles.insert("lb".into(), lc);
        roles.insert("lc".into(), lb);
        let cert = ObstructionCert {
            family: FamilyId::Fig1E,
            roles,
            path_params: vec![],
        };
        assert_eq!(match_family(&g, &cert), Ok(true));
    }
}
