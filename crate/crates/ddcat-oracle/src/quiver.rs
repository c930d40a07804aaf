//! The repetitive algebra of `Lambda(r, n, m)` over a finite level window.
//!
//! The base quiver is an oriented cycle `0 -> 1 -> ... -> n-1 -> 0` with a
//! tail `-m -> ... -> -1 -> 0` and quadratic zero relations on the last `r`
//! cycle compositions.  The repetitive quiver doubles it over the integers:
//! one copy of every vertex and arrow per level, plus one connecting arrow
//! per maximal path, with relations declaring every path through a
//! connecting arrow zero unless it stays inside a full path, and all full
//! paths with common endpoints equal.

use std::collections::BTreeMap;

use ddcat_core::Params;

use crate::error::{OracleError, Result};

/// Arrow of the base quiver.
#[derive(Debug, Clone)]
pub struct BaseArrow {
    pub name: String,
    pub from: i64,
    pub to: i64,
}

#[derive(Debug, Clone)]
pub struct BaseQuiver {
    pub p: Params,
    pub arrows: Vec<BaseArrow>,
    /// Quadratic zero relations as arrow-index pairs.
    pub relations: Vec<(usize, usize)>,
    /// Maximal paths of the bound quiver, as arrow-index sequences.
    pub maximal_paths: Vec<Vec<usize>>,
}

impl BaseQuiver {
    pub fn new(p: &Params) -> Self {
        let (r, n, m) = (p.r(), p.n(), p.m());
        let mut arrows = Vec::new();
        for j in -m..=-1 {
            arrows.push(BaseArrow { name: format!("a{j}"), from: j, to: j + 1 });
        }
        // Cycle arrows j -> j+1 (mod n), named b below the relation zone and
        // c inside it.
        let mut cycle_idx = BTreeMap::new();
        for j in 0..n {
            let name = if j <= n - r { format!("b{j}") } else { format!("c{j}") };
            cycle_idx.insert(j, arrows.len());
            arrows.push(BaseArrow { name, from: j, to: (j + 1) % n });
        }
        let relations: Vec<(usize, usize)> = (n - r..n)
            .map(|k| (cycle_idx[&k], cycle_idx[&((k + 1) % n)]))
            .collect();

        // Maximal paths: out-degrees are at most one, so follow successors
        // from every arrow without an admissible predecessor.
        let succ = |a: usize| -> Option<usize> {
            arrows
                .iter()
                .enumerate()
                .find(|(b, arr)| arr.from == arrows[a].to && !relations.contains(&(a, *b)))
                .map(|(b, _)| b)
        };
        let mut maximal_paths = Vec::new();
        for start in 0..arrows.len() {
            let has_pred = (0..arrows.len())
                .any(|b| arrows[b].to == arrows[start].from && !relations.contains(&(b, start)));
            if has_pred {
                continue;
            }
            let mut path = vec![start];
            while let Some(nx) = succ(*path.last().unwrap()) {
                path.push(nx);
            }
            maximal_paths.push(path);
        }
        BaseQuiver { p: *p, arrows, relations, maximal_paths }
    }
}

pub type Vid = usize;
pub type Aid = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct QVertex {
    pub level: i64,
    pub v: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArrowKind {
    /// Copy of a base arrow at a level.
    Level { level: i64, base: usize },
    /// Connecting arrow of a maximal path, from its end at `level` to its
    /// start at `level + 1`.
    Connect { level: i64, path: usize },
}

#[derive(Debug, Clone)]
pub struct QArrow {
    pub kind: ArrowKind,
    pub from: Vid,
    pub to: Vid,
    pub name: String,
}

/// The repetitive quiver restricted to levels `[-w, w]`.
#[derive(Debug)]
pub struct RepQuiver {
    pub p: Params,
    pub w: i64,
    pub base: BaseQuiver,
    pub vertices: Vec<QVertex>,
    vindex: BTreeMap<(i64, i64), Vid>,
    pub arrows: Vec<QArrow>,
    pub out: Vec<Vec<Aid>>,
    pub into: Vec<Vec<Aid>>,
    /// Inherited quadratic zero relations, as arrow pairs.
    pub zero_pairs: Vec<(Aid, Aid)>,
    /// Commutativity relations: two parallel wrapped paths that agree.
    pub comm_pairs: Vec<(Vec<Aid>, Vec<Aid>)>,
    /// String functions on arrows, +-1 each.
    pub sigma_fn: Vec<i8>,
    pub eps_fn: Vec<i8>,
}

impl RepQuiver {
    pub fn new(p: &Params, w: i64) -> Result<Self> {
        if w < 1 {
            return Err(OracleError::Window("need level bound >= 1".into()));
        }
        let base = BaseQuiver::new(p);
        let mut vertices = Vec::new();
        let mut vindex = BTreeMap::new();
        for level in -w..=w {
            for v in -p.m()..p.n() {
                vindex.insert((level, v), vertices.len());
                vertices.push(QVertex { level, v });
            }
        }
        let mut arrows: Vec<QArrow> = Vec::new();
        for level in -w..=w {
            for (bi, b) in base.arrows.iter().enumerate() {
                arrows.push(QArrow {
                    kind: ArrowKind::Level { level, base: bi },
                    from: vindex[&(level, b.from)],
                    to: vindex[&(level, b.to)],
                    name: format!("{}@{}", b.name, level),
                });
            }
            if level < w {
                for (pi, path) in base.maximal_paths.iter().enumerate() {
                    let s = base.arrows[path[0]].from;
                    let e = base.arrows[*path.last().unwrap()].to;
                    // The tail-and-cycle path gets the long connecting
                    // arrow y; the single arrows of the relation zone get
                    // x-names indexed by their start.
                    let through_b = path
                        .iter()
                        .any(|&bi| !base.arrows[bi].name.starts_with('c'));
                    let name = if through_b {
                        format!("y@{level}")
                    } else {
                        format!("x{s}@{level}")
                    };
                    arrows.push(QArrow {
                        kind: ArrowKind::Connect { level, path: pi },
                        from: vindex[&(level, e)],
                        to: vindex[&(level + 1, s)],
                        name,
                    });
                }
            }
        }
        let mut out = vec![Vec::new(); vertices.len()];
        let mut into = vec![Vec::new(); vertices.len()];
        for (ai, a) in arrows.iter().enumerate() {
            out[a.from].push(ai);
            into[a.to].push(ai);
        }
        // Special biserial sanity.
        for v in 0..vertices.len() {
            if out[v].len() > 2 || into[v].len() > 2 {
                return Err(OracleError::Calibration(format!(
                    "vertex {:?} violates the biserial bound",
                    vertices[v]
                )));
            }
        }

        // Inherited zero relations per level.
        let mut zero_pairs = Vec::new();
        let level_arrow = |level: i64, bi: usize| -> Option<Aid> {
            arrows
                .iter()
                .position(|a| matches!(a.kind, ArrowKind::Level { level: l, base } if l == level && base == bi))
        };
        for level in -w..=w {
            for &(x, y) in &base.relations {
                if let (Some(a), Some(b)) = (level_arrow(level, x), level_arrow(level, y)) {
                    zero_pairs.push((a, b));
                }
            }
        }

        // Commutativity: for each shared (vertex, occurrence) of two
        // distinct positions on maximal paths, the two wrapped paths agree.
        // Occurrences are indexed by (path, position in 0..=len).
        let mut occurrences: Vec<(usize, usize, i64)> = Vec::new(); // (path, pos, vertex)
        for (pi, path) in base.maximal_paths.iter().enumerate() {
            for pos in 0..=path.len() {
                let v = if pos == 0 {
                    base.arrows[path[0]].from
                } else {
                    base.arrows[path[pos - 1]].to
                };
                occurrences.push((pi, pos, v));
            }
        }
        let mut comm_pairs = Vec::new();
        for level in -w..w {
            let find_connect = |pi: usize| -> Option<Aid> {
                arrows.iter().position(
                    |a| matches!(a.kind, ArrowKind::Connect { level: l, path } if l == level && path == pi),
                )
            };
            for (k1, &(p1, pos1, v1)) in occurrences.iter().enumerate() {
                for &(p2, pos2, v2) in occurrences.iter().skip(k1 + 1) {
                    if v1 != v2 || (p1 == p2 && pos1 == pos2) {
                        continue;
                    }
                    let wrap = |pi: usize, pos: usize| -> Option<Vec<Aid>> {
                        let path = &base.maximal_paths[pi];
                        let mut seq = Vec::new();
                        for &bi in &path[pos..] {
                            seq.push(level_arrow(level, bi)?);
                        }
                        seq.push(find_connect(pi)?);
                        for &bi in &path[..pos] {
                            seq.push(level_arrow(level + 1, bi)?);
                        }
                        Some(seq)
                    };
                    if let (Some(w1), Some(w2)) = (wrap(p1, pos1), wrap(p2, pos2)) {
                        comm_pairs.push((w1, w2));
                    }
                }
            }
        }

        let mut q = RepQuiver {
            p: *p,
            w,
            base,
            vertices,
            vindex,
            arrows,
            out,
            into,
            zero_pairs,
            comm_pairs,
            sigma_fn: Vec::new(),
            eps_fn: Vec::new(),
        };
        q.assign_string_functions()?;
        Ok(q)
    }

    pub fn vid(&self, level: i64, v: i64) -> Option<Vid> {
        self.vindex.get(&(level, v)).copied()
    }

    pub fn vertex(&self, vid: Vid) -> QVertex {
        self.vertices[vid]
    }

    /// The maximal path owning a connecting arrow.
    fn connect_info(&self, aid: Aid) -> Option<(i64, usize)> {
        match self.arrows[aid].kind {
            ArrowKind::Connect { level, path } => Some((level, path)),
            _ => None,
        }
    }

    fn base_index(&self, aid: Aid) -> Option<(i64, usize)> {
        match self.arrows[aid].kind {
            ArrowKind::Level { level, base } => Some((level, base)),
            _ => None,
        }
    }

    /// Is a directed arrow sequence a nonzero path of the repetitive
    /// algebra?  `strict` additionally quotients the socle away (full paths
    /// become zero), which is the right notion for string combinatorics.
    pub fn path_nonzero(&self, seq: &[Aid], strict: bool) -> bool {
        // Consecutivity.
        for k in 0..seq.len().saturating_sub(1) {
            if self.arrows[seq[k]].to != self.arrows[seq[k + 1]].from {
                return false;
            }
        }
        let connects: Vec<usize> = (0..seq.len())
            .filter(|&k| self.connect_info(seq[k]).is_some())
            .collect();
        match connects.len() {
            0 => {
                // One level: just avoid the quadratic relations.
                for k in 0..seq.len().saturating_sub(1) {
                    if self.zero_pairs.contains(&(seq[k], seq[k + 1])) {
                        return false;
                    }
                }
                true
            }
            1 => {
                let kc = connects[0];
                let (_, pi) = self.connect_info(seq[kc]).unwrap();
                let path = &self.base.maximal_paths[pi];
                let before = &seq[..kc];
                let after = &seq[kc + 1..];
                if before.len() + after.len() + strict as usize > path.len() {
                    return false;
                }
                // `before` must be a suffix of the maximal path (previous
                // level), `after` a prefix (next level).
                let suffix_ok = before.iter().rev().zip(path.iter().rev()).all(|(&a, &bi)| {
                    self.base_index(a).is_some_and(|(_, b)| b == bi)
                });
                let prefix_ok = after
                    .iter()
                    .zip(path.iter())
                    .all(|(&a, &bi)| self.base_index(a).is_some_and(|(_, b)| b == bi));
                suffix_ok && prefix_ok
            }
            _ => false,
        }
    }

    /// Arrow ids whose composite is the full path of a maximal path at a
    /// level, using the decomposition with everything before the connecting
    /// arrow.
    pub fn full_paths_from(&self, vid: Vid) -> Vec<Vec<Aid>> {
        // All maximal nonzero paths from vid of "full" length; used to
        // identify the socle of a projective.
        let mut out = Vec::new();
        let mut stack: Vec<Vec<Aid>> = vec![Vec::new()];
        while let Some(cur) = stack.pop() {
            let end = if cur.is_empty() {
                vid
            } else {
                self.arrows[*cur.last().unwrap()].to
            };
            let mut extended = false;
            for &a in &self.out[end] {
                let mut nxt = cur.clone();
                nxt.push(a);
                if self.path_nonzero(&nxt, false) {
                    stack.push(nxt);
                    extended = true;
                }
            }
            if !extended && !cur.is_empty() && !self.path_nonzero(&cur, true) {
                // Nonzero in the algebra but zero in the socle quotient:
                // that is exactly a full path.
                out.push(cur);
            }
        }
        out
    }

    /// Greedy parity assignment of the string functions over the fixed
    /// arrow order, honoring: same-source arrows have opposite sigma,
    /// same-target arrows opposite eps, and sigma(second) = -eps(first) for
    /// every nonzero length-two composite.
    fn assign_string_functions(&mut self) -> Result<()> {
        let n = self.arrows.len();
        // Variables: 2*a = sigma(a), 2*a+1 = eps(a); union-find with parity.
        let mut parent: Vec<usize> = (0..2 * n).collect();
        let mut parity: Vec<u8> = vec![0; 2 * n];
        fn find(parent: &mut Vec<usize>, parity: &mut Vec<u8>, x: usize) -> (usize, u8) {
            if parent[x] == x {
                return (x, 0);
            }
            let (root, par) = find(parent, parity, parent[x]);
            parent[x] = root;
            parity[x] ^= par;
            (root, parity[x])
        }
        let union = |parent: &mut Vec<usize>, parity: &mut Vec<u8>, x: usize, y: usize, rel: u8| -> bool {
            let (rx, px) = find(parent, parity, x);
            let (ry, py) = find(parent, parity, y);
            if rx == ry {
                return px ^ py == rel;
            }
            parent[rx] = ry;
            parity[rx] = px ^ py ^ rel;
            true
        };
        let mut constraints: Vec<(usize, usize, u8)> = Vec::new();
        for v in 0..self.vertices.len() {
            if let [a, b] = self.out[v][..] {
                constraints.push((2 * a, 2 * b, 1));
            }
            if let [a, b] = self.into[v][..] {
                constraints.push((2 * a + 1, 2 * b + 1, 1));
            }
        }
        for a in 0..n {
            for &b in &self.out[self.arrows[a].to] {
                if self.path_nonzero(&[a, b], true) {
                    constraints.push((2 * b, 2 * a + 1, 1));
                }
            }
        }
        for (x, y, rel) in constraints {
            if !union(&mut parent, &mut parity, x, y, rel) {
                return Err(OracleError::Calibration(
                    "inconsistent string function constraints".into(),
                ));
            }
        }
        let mut value: Vec<Option<i8>> = vec![None; 2 * n];
        for x in 0..2 * n {
            let (root, par) = find(&mut parent, &mut parity, x);
            if value[root].is_none() {
                // First variable of the class, in arrow order, gets +1.
                value[root] = Some(if par == 0 { 1 } else { -1 });
            }
            let rv = value[root].unwrap();
            value[x] = Some(if par == 0 { rv } else { -rv });
        }
        self.sigma_fn = (0..n).map(|a| value[2 * a].unwrap()).collect();
        self.eps_fn = (0..n).map(|a| value[2 * a + 1].unwrap()).collect();
        Ok(())
    }
}
