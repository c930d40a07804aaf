//! Gentle tree quivers on t vertices ("A_t-quivers") and their coordinate
//! map into the AR quiver of the derived category of the linear A_t quiver.
//!
//! Tilting objects of that category correspond bijectively to these quivers
//! once normalized to minimal first coordinate zero.

use std::collections::BTreeSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    Alpha,
    Beta,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub color: Color,
}

/// A tree on `t` vertices with arrows colored alpha/beta such that every
/// vertex has at most one incoming and one outgoing arrow of each color.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtQuiver {
    pub t: usize,
    pub edges: Vec<Edge>,
}

impl AtQuiver {
    fn gentle(&self) -> bool {
        let mut in_a = vec![0u8; self.t];
        let mut out_a = vec![0u8; self.t];
        let mut in_b = vec![0u8; self.t];
        let mut out_b = vec![0u8; self.t];
        for e in &self.edges {
            match e.color {
                Color::Alpha => {
                    out_a[e.from] += 1;
                    in_a[e.to] += 1;
                }
                Color::Beta => {
                    out_b[e.from] += 1;
                    in_b[e.to] += 1;
                }
            }
        }
        (0..self.t).all(|v| in_a[v] <= 1 && out_a[v] <= 1 && in_b[v] <= 1 && out_b[v] <= 1)
    }

    /// Canonical string under colored-digraph isomorphism.  The underlying
    /// graph is a tree, so an AHU-style encoding rooted at the centroid(s)
    /// is a complete invariant; edge labels carry color and direction.
    pub fn canonical(&self) -> String {
        let adj = self.adjacency();
        let centroids = tree_centroids(self.t, &adj);
        centroids
            .iter()
            .map(|&c| encode(c, usize::MAX, &adj))
            .min()
            .unwrap()
    }

    fn adjacency(&self) -> Vec<Vec<(usize, Color, bool)>> {
        // (neighbor, color, is_forward_from_this_vertex)
        let mut adj = vec![Vec::new(); self.t];
        for e in &self.edges {
            adj[e.from].push((e.to, e.color, true));
            adj[e.to].push((e.from, e.color, false));
        }
        adj
    }
}

fn encode(v: usize, parent: usize, adj: &[Vec<(usize, Color, bool)>]) -> String {
    let mut kids: Vec<String> = adj[v]
        .iter()
        .filter(|&&(w, _, _)| w != parent)
        .map(|&(w, color, fwd)| {
            let label = match (color, fwd) {
                (Color::Alpha, true) => 'a',
                (Color::Alpha, false) => 'A',
                (Color::Beta, true) => 'b',
                (Color::Beta, false) => 'B',
            };
            format!("{label}{}", encode(w, v, adj))
        })
        .collect();
    kids.sort();
    format!("({})", kids.join(""))
}

fn tree_centroids(t: usize, adj: &[Vec<(usize, Color, bool)>]) -> Vec<usize> {
    if t == 1 {
        return vec![0];
    }
    let mut size = vec![0usize; t];
    fn sizes(v: usize, parent: usize, adj: &[Vec<(usize, Color, bool)>], size: &mut [usize]) {
        size[v] = 1;
        for &(w, _, _) in &adj[v] {
            if w != parent {
                sizes(w, v, adj, size);
                size[v] += size[w];
            }
        }
    }
    sizes(0, usize::MAX, adj, &mut size);
    let mut best = Vec::new();
    let mut best_weight = usize::MAX;
    for v in 0..t {
        let mut weight = t - size[v];
        for &(w, _, _) in &adj[v] {
            if size[w] < size[v] {
                weight = weight.max(size[w]);
            }
        }
        // Recompute downward sizes relative to v via the standard trick.
        match weight.cmp(&best_weight) {
            std::cmp::Ordering::Less => {
                best_weight = weight;
                best = vec![v];
            }
            std::cmp::Ordering::Equal => best.push(v),
            std::cmp::Ordering::Greater => {}
        }
    }
    best
}

/// Labeled trees on t vertices via Pruefer sequences.
fn labeled_trees(t: usize) -> Vec<Vec<(usize, usize)>> {
    if t == 1 {
        return vec![vec![]];
    }
    if t == 2 {
        return vec![vec![(0, 1)]];
    }
    let mut out = Vec::new();
    let len = t - 2;
    let mut seq = vec![0usize; len];
    loop {
        out.push(pruefer_decode(t, &seq));
        // Increment the sequence in base t.
        let mut k = 0;
        loop {
            if k == len {
                return out;
            }
            seq[k] += 1;
            if seq[k] < t {
                break;
            }
            seq[k] = 0;
            k += 1;
        }
    }
}

fn pruefer_decode(t: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; t];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(t - 1);
    let mut leaves: BTreeSet<usize> = (0..t).filter(|&v| degree[v] == 1).collect();
    for &s in seq {
        let leaf = *leaves.iter().next().unwrap();
        leaves.remove(&leaf);
        edges.push((leaf.min(s), leaf.max(s)));
        degree[s] -= 1;
        if degree[s] == 1 {
            leaves.insert(s);
        }
    }
    let rest: Vec<usize> = leaves.into_iter().collect();
    edges.push((rest[0].min(rest[1]), rest[0].max(rest[1])));
    edges
}

/// All A_t-quivers up to colored-digraph isomorphism, in canonical order.
pub fn at_quivers(t: usize) -> Vec<AtQuiver> {
    assert!(t >= 1, "need at least one vertex");
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for tree in labeled_trees(t) {
        let e = tree.len();
        // Each edge gets one of two directions and one of two colors.
        for mask in 0..(1u32 << (2 * e)) {
            let edges: Vec<Edge> = tree
                .iter()
                .enumerate()
                .map(|(k, &(u, v))| {
                    let flip = mask >> (2 * k) & 1 == 1;
                    let color = if mask >> (2 * k + 1) & 1 == 1 {
                        Color::Beta
                    } else {
                        Color::Alpha
                    };
                    let (from, to) = if flip { (v, u) } else { (u, v) };
                    Edge { from, to, color }
                })
                .collect();
            let q = AtQuiver { t, edges };
            if q.gentle() {
                let canon = q.canonical();
                if seen.insert(canon) {
                    out.push(q);
                }
            }
        }
    }
    out.sort_by_key(|q| q.canonical());
    out
}

/// The coordinate map of an A_t-quiver.
///
/// Vertex x goes to `(g(x), h(x))` in the AR quiver of the derived category
/// of A_t with `h(x) = 1 + e_alpha(x) + s_beta(x)`; `g` is constant along
/// alpha arrows and jumps by `e_alpha(source) + s_alpha(target) + 1` along
/// beta arrows, normalized to minimum zero.  Here `s_c(x)` counts vertices
/// whose tree path from x starts with a forward arrow of color c, and
/// `e_c(x)` those whose path to x ends with one.
pub fn phi(q: &AtQuiver) -> Vec<(i64, i64)> {
    let t = q.t;
    let adj = q.adjacency();
    let mut s_alpha = vec![0i64; t];
    let mut s_beta = vec![0i64; t];
    let mut e_alpha = vec![0i64; t];
    for x in 0..t {
        // Size of the subtree hanging off each forward edge at x.
        for &(w, color, fwd) in &adj[x] {
            let sz = subtree_size(w, x, &adj) as i64;
            if fwd {
                match color {
                    Color::Alpha => s_alpha[x] += sz,
                    Color::Beta => s_beta[x] += sz,
                }
            }
        }
        // Vertices whose path INTO x ends with a forward alpha arrow.
        for &(w, color, fwd) in &adj[x] {
            if !fwd && color == Color::Alpha {
                e_alpha[x] += subtree_size(w, x, &adj) as i64;
            }
        }
    }
    let h: Vec<i64> = (0..t).map(|x| 1 + e_alpha[x] + s_beta[x]).collect();
    let mut g = vec![i64::MIN; t];
    g[0] = 0;
    let mut stack = vec![0usize];
    while let Some(v) = stack.pop() {
        for &(w, color, fwd) in &adj[v] {
            if g[w] != i64::MIN {
                continue;
            }
            let (src, dst) = if fwd { (v, w) } else { (w, v) };
            let jump = match color {
                Color::Alpha => 0,
                Color::Beta => e_alpha[src] + s_alpha[dst] + 1,
            };
            g[w] = if fwd { g[v] + jump } else { g[v] - jump };
            stack.push(w);
        }
    }
    let min = *g.iter().min().unwrap();
    (0..t).map(|x| (g[x] - min, h[x])).collect()
}

fn subtree_size(v: usize, parent: usize, adj: &[Vec<(usize, Color, bool)>]) -> usize {
    1 + adj[v]
        .iter()
        .filter(|&&(w, _, _)| w != parent)
        .map(|&(w, _, _)| subtree_size(w, v, adj))
        .sum::<usize>()
}
