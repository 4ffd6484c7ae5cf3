use std::collections::{BTreeSet, HashMap, VecDeque};

use super::{EdgeStyle, SLabeledDigraph};

type EdgeKey = (usize, usize, usize, EdgeStyle);

fn edge_counts(g: &SLabeledDigraph, relabel: &[usize]) -> HashMap<EdgeKey, usize> {
    let mut out = HashMap::new();
    for e in g.edges() {
        *out.entry((e.src, e.dst, relabel[e.label], e.style)).or_insert(0) += 1;
    }
    out
}

fn signature(g: &SLabeledDigraph, v: usize, relabel: &[usize]) -> Vec<(usize, bool, EdgeStyle)> {
    let mut sig: Vec<(usize, bool, EdgeStyle)> = g
        .edges()
        .iter()
        .flat_map(|e| {
            let mut here = Vec::new();
            if e.src == v {
                here.push((relabel[e.label], true, e.style));
            }
            if e.dst == v {
                here.push((relabel[e.label], false, e.style));
            }
            here
        })
        .collect();
    sig.sort();
    sig
}

/// Label- and style-preserving isomorphism `Γ1 → Γ2`, matching generators by
/// name. Returns the image of each vertex of `Γ1`.
pub fn labeled_isomorphic(g1: &SLabeledDigraph, g2: &SLabeledDigraph) -> Option<Vec<usize>> {
    let s1 = g1.system().names();
    let s2 = g2.system().names();
    if s1.len() != s2.len() || g1.vertex_count() != g2.vertex_count() || g1.edges().len() != g2.edges().len() {
        return None;
    }
    let relabel: Vec<usize> = s1
        .iter()
        .map(|n| s2.iter().position(|m| m == n))
        .collect::<Option<Vec<_>>>()?;
    let identity: Vec<usize> = (0..s2.len()).collect();
    let c1 = edge_counts(g1, &relabel);
    let c2 = edge_counts(g2, &identity);
    let sig1: Vec<_> = (0..g1.vertex_count()).map(|v| signature(g1, v, &relabel)).collect();
    let sig2: Vec<_> = (0..g2.vertex_count()).map(|v| signature(g2, v, &identity)).collect();
    let mut ms1 = sig1.clone();
    let mut ms2 = sig2.clone();
    ms1.sort();
    ms2.sort();
    if ms1 != ms2 {
        return None;
    }

    let adj1 = g1.undirected_neighbors();
    let adj2 = g2.undirected_neighbors();
    let mut order = Vec::new();
    let mut parent = vec![None; g1.vertex_count()];
    let mut seen = vec![false; g1.vertex_count()];
    for start in 0..g1.vertex_count() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in &adj1[v] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(v);
                    queue.push_back(w);
                }
            }
        }
    }

    let neighbours1: Vec<BTreeSet<usize>> = adj1.iter().map(|a| a.iter().copied().collect()).collect();
    let search = Search {
        order,
        parent,
        sig1,
        sig2,
        c1,
        c2,
        neighbours1,
        adj2,
    };
    let mut map = vec![usize::MAX; g1.vertex_count()];
    let mut used = vec![false; g2.vertex_count()];
    search.extend(0, &mut map, &mut used).then_some(map)
}

struct Search {
    order: Vec<usize>,
    parent: Vec<Option<usize>>,
    sig1: Vec<Vec<(usize, bool, EdgeStyle)>>,
    sig2: Vec<Vec<(usize, bool, EdgeStyle)>>,
    c1: HashMap<EdgeKey, usize>,
    c2: HashMap<EdgeKey, usize>,
    neighbours1: Vec<BTreeSet<usize>>,
    adj2: Vec<Vec<usize>>,
}

impl Search {
    fn consistent(&self, v: usize, w: usize, map: &[usize]) -> bool {
        let styles = [EdgeStyle::Solid, EdgeStyle::Dashed];
        let labels: BTreeSet<usize> = self.sig1[v].iter().map(|x| x.0).collect();
        let mut partners: Vec<usize> = self.neighbours1[v]
            .iter()
            .copied()
            .filter(|&x| map[x] != usize::MAX)
            .collect();
        partners.push(v);
        for x in partners {
            let y = if x == v { w } else { map[x] };
            for &l in &labels {
                for st in styles {
                    let a = |c: &HashMap<EdgeKey, usize>, p, q| c.get(&(p, q, l, st)).copied().unwrap_or(0);
                    if a(&self.c1, v, x) != a(&self.c2, w, y) || a(&self.c1, x, v) != a(&self.c2, y, w) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn extend(&self, depth: usize, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        let candidates: Vec<usize> = match self.parent[v] {
            Some(p) => {
                let mut c: Vec<usize> = self.adj2[map[p]].clone();
                c.sort();
                c.dedup();
                c
            }
            None => (0..self.sig2.len()).collect(),
        };
        for w in candidates {
            if used[w] || self.sig1[v] != self.sig2[w] || !self.consistent(v, w, map) {
                continue;
            }
            map[v] = w;
            used[w] = true;
            if self.extend(depth + 1, map, used) {
                return true;
            }
            map[v] = usize::MAX;
            used[w] = false;
        }
        false
    }
}
