//! Exhaustive search for induced family embeddings.
//!
//! Iterative deepening over vertex subsets in lexicographic order, smallest
//! size first. Each subset is tested against every candidate family whose
//! template can be instantiated at that size; the first embedding found is
//! returned. Intended for desk-scale hosts (n ≤ 12 or so).

use super::family::{family_template, FamilyId, ObstructionCert, Template};
use crate::graph::Graph;
use std::collections::BTreeMap;

/// First induced embedding of any of `families`, in subset-then-family order.
pub fn search_families(g: &Graph, families: &[FamilyId]) -> Option<ObstructionCert> {
    let n = g.n();
    let min_size = families.iter().map(|f| f.min_size()).min()?;
    for size in min_size..=n {
        let templates: Vec<Template> = families
            .iter()
            .filter_map(|&f| {
                let mids = f.mids_for_size(size)?;
                family_template(f, mids, if f == FamilyId::Fig1D { 1 } else { 0 }).ok()
            })
            .collect();
        if templates.is_empty() {
            continue;
        }
        let mut subset: Vec<usize> = (0..size).collect();
        loop {
            for tmpl in &templates {
                if let Some(assign) = embed_in_subset(g, &subset, tmpl) {
                    let roles: BTreeMap<String, usize> = tmpl
                        .role_names
                        .iter()
                        .cloned()
                        .zip(assign)
                        .collect();
                    return Some(ObstructionCert {
                        family: tmpl.family,
                        roles,
                        path_params: tmpl.path_params.clone(),
                    });
                }
            }
            if !next_combination(&mut subset, n) {
                break;
            }
        }
    }
    None
}

/// Advances `subset` to the next size-|subset| combination of `0..n` in
/// lexicographic order; false when exhausted.
fn next_combination(subset: &mut [usize], n: usize) -> bool {
    let k = subset.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if subset[i] < n - (k - i) {
            subset[i] += 1;
            for j in i + 1..k {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Finds a bijective role assignment of `tmpl` onto exactly the vertices of
/// `subset` such that the induced adjacency matches the template edge for
/// edge. Returns template-position → host-vertex.
fn embed_in_subset(g: &Graph, subset: &[usize], tmpl: &Template) -> Option<Vec<usize>> {
    let p = tmpl.size();
    if subset.len() != p {
        return None;
    }
    // Degrees within the subset must match template degrees as multisets.
    let sub_deg: Vec<usize> = subset
        .iter()
        .map(|&v| {
            subset
                .iter()
                .filter(|&&w| w != v && g.has_edge(v, w))
                .count()
        })
        .collect();
    let tmpl_deg: Vec<usize> = (0..p).map(|i| tmpl.degree(i)).collect();
    {
        let mut a = sub_deg.clone();
        let mut b = tmpl_deg.clone();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return None;
        }
    }
    struct Search<'a> {
        g: &'a Graph,
        subset: &'a [usize],
        sub_deg: Vec<usize>,
        tmpl: &'a Template,
        tmpl_deg: Vec<usize>,
        assign: Vec<Option<usize>>,
        used: Vec<bool>,
    }
    impl Search<'_> {
        fn rec(&mut self, pos: usize) -> bool {
            let p = self.tmpl.size();
            if pos == p {
                return true;
            }
            for cand in 0..p {
                if self.used[cand] || self.sub_deg[cand] != self.tmpl_deg[pos] {
                    continue;
                }
                let v = self.subset[cand];
                let ok = (0..pos).all(|q| {
                    let w = self.assign[q].unwrap();
                    self.g.has_edge(v, w) == self.tmpl.has_edge(pos, q)
                });
                if !ok {
                    continue;
                }
                self.assign[pos] = Some(v);
                self.used[cand] = true;
                if self.rec(pos + 1) {
                    return true;
                }
                self.assign[pos] = None;
                self.used[cand] = false;
            }
            false
        }
    }
    let mut search = Search {
        g,
        subset,
        sub_deg,
        tmpl,
        tmpl_deg,
        assign: vec![None; p],
        used: vec![false; p],
    };
    if search.rec(0) {
        Some(search.assign.into_iter().map(Option::unwrap).collect())
    } else {
        None
    }
}
