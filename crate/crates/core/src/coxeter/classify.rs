use std::fmt;

use super::CoxeterSystem;

/// Finite irreducible Coxeter types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ComponentType {
    A(usize),
    B(usize),
    D(usize),
    E(usize),
    F4,
    H(usize),
    I2(u32),
}

impl fmt::Display for ComponentType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComponentType::A(n) => write!(f, "A{n}"),
            ComponentType::B(n) => write!(f, "B{n}"),
            ComponentType::D(n) => write!(f, "D{n}"),
            ComponentType::E(n) => write!(f, "E{n}"),
            ComponentType::F4 => write!(f, "F4"),
            ComponentType::H(n) => write!(f, "H{n}"),
            ComponentType::I2(m) => write!(f, "I2({m})"),
        }
    }
}

/// Connected components of the Coxeter graph with their finite type, or
/// `None` when the component generates an infinite group.
pub fn classify_components(w: &CoxeterSystem) -> Vec<(Vec<usize>, Option<ComponentType>)> {
    let k = w.rank();
    let joined = |i: usize, j: usize| i != j && w.m(i, j) != Some(2);
    let mut seen = vec![false; k];
    let mut out = Vec::new();
    for start in 0..k {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut i = 0;
        while i < comp.len() {
            let v = comp[i];
            for u in 0..k {
                if !seen[u] && joined(v, u) {
                    seen[u] = true;
                    comp.push(u);
                }
            }
            i += 1;
        }
        comp.sort();
        let ty = classify(w, &comp);
        out.push((comp, ty));
    }
    out
}

fn classify(w: &CoxeterSystem, comp: &[usize]) -> Option<ComponentType> {
    let n = comp.len();
    if n == 1 {
        return Some(ComponentType::A(1));
    }
    let mut edges = Vec::new();
    for (a, &i) in comp.iter().enumerate() {
        for (b, &j) in comp.iter().enumerate().skip(a + 1) {
            match w.m(i, j) {
                Some(2) => {}
                Some(m) => edges.push((a, b, m)),
                None => return None,
            }
        }
    }
    if n == 2 {
        return Some(match edges[0].2 {
            3 => ComponentType::A(2),
            4 => ComponentType::B(2),
            m => ComponentType::I2(m),
        });
    }
    if edges.len() != n - 1 {
        return None;
    }
    let mut deg = vec![0usize; n];
    for &(a, b, _) in &edges {
        deg[a] += 1;
        deg[b] += 1;
    }
    let branch: Vec<usize> = (0..n).filter(|&v| deg[v] >= 3).collect();
    let heavy: Vec<&(usize, usize, u32)> = edges.iter().filter(|e| e.2 > 3).collect();
    if branch.is_empty() {
        let at_end = |e: &(usize, usize, u32)| deg[e.0] == 1 || deg[e.1] == 1;
        return match heavy.as_slice() {
            [] => Some(ComponentType::A(n)),
            [e] if e.2 == 4 && at_end(e) => Some(ComponentType::B(n)),
            [e] if e.2 == 4 && n == 4 && !at_end(e) => Some(ComponentType::F4),
            [e] if e.2 == 5 && at_end(e) && (n == 3 || n == 4) => Some(ComponentType::H(n)),
            _ => None,
        };
    }
    if branch.len() != 1 || deg[branch[0]] != 3 || !heavy.is_empty() {
        return None;
    }
    let centre = branch[0];
    let mut legs = Vec::new();
    for &(a, b, _) in &edges {
        let first = if a == centre {
            b
        } else if b == centre {
            a
        } else {
            continue;
        };
        let mut len = 1;
        let (mut prev, mut cur) = (centre, first);
        while deg[cur] == 2 {
            let next = edges
                .iter()
                .find_map(|&(x, y, _)| {
                    if x == cur && y != prev {
                        Some(y)
                    } else if y == cur && x != prev {
                        Some(x)
                    } else {
                        None
                    }
                })
                .expect("path continues");
            prev = cur;
            cur = next;
            len += 1;
        }
        legs.push(len);
    }
    legs.sort();
    match legs.as_slice() {
        [1, 1, c] => Some(ComponentType::D(c + 3)),
        [1, 2, 2] => Some(ComponentType::E(6)),
        [1, 2, 3] => Some(ComponentType::E(7)),
        [1, 2, 4] => Some(ComponentType::E(8)),
        _ => None,
    }
}
