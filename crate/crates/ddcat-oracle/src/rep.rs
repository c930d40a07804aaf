//! Explicit representations over the windowed repetitive quiver: string
//! modules, projectives, Hom spaces by linear algebra, stable Hom, and
//! (co)syzygies.

use std::collections::BTreeMap;

use crate::error::{OracleError, Result};
use crate::fp::{span_rank, Mat};
use crate::quiver::{Aid, RepQuiver, Vid};
use crate::word::{Letter, StringWord};

/// A finite-dimensional representation: a dimension per vertex and a matrix
/// per arrow (mapping the source fiber to the target fiber).
#[derive(Debug, Clone)]
pub struct Rep {
    pub p: u64,
    pub dims: Vec<usize>,
    pub mats: Vec<Mat>,
}

impl Rep {
    pub fn zero_shaped(q: &RepQuiver, p: u64, dims: Vec<usize>) -> Rep {
        let mats = q
            .arrows
            .iter()
            .map(|a| Mat::zero(p, dims[a.to], dims[a.from]))
            .collect();
        Rep { p, dims, mats }
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Matrix of a path (first arrow applied first).
    pub fn path_action(&self, q: &RepQuiver, path: &[Aid]) -> Mat {
        assert!(!path.is_empty());
        let mut m = self.mats[path[0]].clone();
        for &a in &path[1..] {
            m = self.mats[a].mul(&m);
        }
        let _ = q;
        m
    }

    /// All quadratic zero relations annihilate and all wrapped parallel
    /// paths agree.
    pub fn check_relations(&self, q: &RepQuiver) -> bool {
        for &(a, b) in &q.zero_pairs {
            if !self.mats[b].mul(&self.mats[a]).is_zero() {
                return false;
            }
        }
        for (l, r) in &q.comm_pairs {
            if self.path_action(q, l) != self.path_action(q, r) {
                return false;
            }
        }
        true
    }
}

/// The representation of a string: basis points along the walk, incidence
/// matrices along the letters.
pub fn string_rep(q: &RepQuiver, p: u64, w: &StringWord) -> Rep {
    let mut verts: Vec<Vid> = vec![w.start(q)];
    for l in w.letters() {
        verts.push(l.end(q));
    }
    let mut dims = vec![0usize; q.vertices.len()];
    let mut index = Vec::with_capacity(verts.len());
    for &v in &verts {
        index.push(dims[v]);
        dims[v] += 1;
    }
    let mut rep = Rep::zero_shaped(q, p, dims);
    for (k, l) in w.letters().iter().enumerate() {
        // Walk nodes k and k+1; a direct letter maps node k to node k+1,
        // an inverse letter maps node k+1 to node k.
        let (src_node, dst_node) = if l.inverse { (k + 1, k) } else { (k, k + 1) };
        let m = &mut rep.mats[l.arrow];
        m[(index[dst_node], index[src_node])] = 1;
    }
    rep
}

/// Solution space of the intertwining equations, as flat vectors.
pub struct HomSpace {
    /// (vertex, row, col) -> position in the flat vector.
    pub layout: Vec<(Vid, usize, usize)>,
    pub basis: Vec<Vec<u64>>,
}

pub fn hom_space(q: &RepQuiver, m: &Rep, n: &Rep) -> HomSpace {
    let p = m.p;
    let mut layout = Vec::new();
    let mut offset: BTreeMap<Vid, usize> = BTreeMap::new();
    for v in 0..q.vertices.len() {
        if m.dims[v] > 0 && n.dims[v] > 0 {
            offset.insert(v, layout.len());
            for r in 0..n.dims[v] {
                for c in 0..m.dims[v] {
                    layout.push((v, r, c));
                }
            }
        }
    }
    let vars = layout.len();
    if vars == 0 {
        return HomSpace { layout, basis: vec![] };
    }
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for (ai, arr) in q.arrows.iter().enumerate() {
        let (s, t) = (arr.from, arr.to);
        // F_t * M_a = N_a * F_s; one equation per (row in N_t, col in M_s).
        for r in 0..n.dims[t] {
            for c in 0..m.dims[s] {
                let mut row = vec![0u64; vars];
                let mut nontrivial = false;
                if let Some(&ot) = offset.get(&t) {
                    for k in 0..m.dims[t] {
                        let coeff = m.mats[ai][(k, c)];
                        if coeff != 0 {
                            row[ot + r * m.dims[t] + k] = (row[ot + r * m.dims[t] + k] + coeff) % p;
                            nontrivial = true;
                        }
                    }
                }
                if let Some(&os) = offset.get(&s) {
                    for k in 0..n.dims[s] {
                        let coeff = n.mats[ai][(r, k)];
                        if coeff != 0 {
                            let pos = os + k * m.dims[s] + c;
                            row[pos] = (row[pos] + p - coeff) % p;
                            nontrivial = true;
                        }
                    }
                }
                if nontrivial {
                    rows.push(row);
                }
            }
        }
    }
    if rows.is_empty() {
        let basis = (0..vars)
            .map(|k| {
                let mut v = vec![0u64; vars];
                v[k] = 1;
                v
            })
            .collect();
        return HomSpace { layout, basis };
    }
    let mat = Mat::from_rows(p, &rows);
    HomSpace { layout, basis: mat.nullspace() }
}

pub fn hom_dim_linear(q: &RepQuiver, m: &Rep, n: &Rep) -> usize {
    hom_space(q, m, n).basis.len()
}

/// A projective indecomposable: path classes out of a vertex, with the two
/// full paths identified at the socle.
pub struct Projective {
    pub rep: Rep,
    /// Path class of each basis vector, as an arrow sequence (empty for the
    /// top); the socle classes of the two arms coincide.
    pub classes: Vec<Vec<Aid>>,
    /// Basis index per vertex per slot.
    pub top_vertex: Vid,
}

/// Enumerate the nonzero path classes from `v` and assemble the projective.
pub fn projective(q: &RepQuiver, p: u64, v: Vid) -> Result<Projective> {
    let lev = q.vertex(v).level;
    if lev >= q.w {
        return Err(OracleError::Window(format!(
            "projective at level {lev} needs the next level"
        )));
    }
    // Collect nonzero paths; identify the full ones into a single class.
    let mut paths: Vec<Vec<Aid>> = vec![vec![]];
    let mut stack = vec![Vec::<Aid>::new()];
    while let Some(cur) = stack.pop() {
        let end = if cur.is_empty() { v } else { q.arrows[*cur.last().unwrap()].to };
        for &a in &q.out[end] {
            let mut nxt = cur.clone();
            nxt.push(a);
            if q.path_nonzero(&nxt, false) {
                paths.push(nxt.clone());
                stack.push(nxt);
            }
        }
    }
    // Split off the full paths (zero in the socle quotient).
    let mut socle: Vec<Vec<Aid>> = Vec::new();
    let mut proper: Vec<Vec<Aid>> = Vec::new();
    for path in paths {
        if !path.is_empty() && !q.path_nonzero(&path, true) {
            socle.push(path);
        } else {
            proper.push(path);
        }
    }
    if socle.is_empty() {
        return Err(OracleError::Calibration(format!(
            "projective at {:?} has no socle path",
            q.vertex(v)
        )));
    }
    let mut classes = proper;
    let socle_index = classes.len();
    classes.push(socle[0].clone());
    let socle_paths = socle;

    let mut dims = vec![0usize; q.vertices.len()];
    let mut slot = Vec::with_capacity(classes.len());
    let end_of = |path: &Vec<Aid>| -> Vid {
        if path.is_empty() { v } else { q.arrows[*path.last().unwrap()].to }
    };
    for c in &classes {
        let e = end_of(c);
        slot.push(dims[e]);
        dims[e] += 1;
    }
    let mut rep = Rep::zero_shaped(q, p, dims);
    let class_of = |path: &Vec<Aid>| -> Option<usize> {
        if !q.path_nonzero(path, false) {
            return None;
        }
        if !path.is_empty() && !q.path_nonzero(path, true) {
            return Some(socle_index);
        }
        classes.iter().position(|c| c == path)
    };
    for (ci, c) in classes.iter().enumerate() {
        let e = end_of(c);
        for &a in &q.out[e] {
            let mut nxt = c.clone();
            nxt.push(a);
            if let Some(cj) = class_of(&nxt) {
                let ej = end_of(&classes[cj]);
                rep.mats[a][(slot[cj], slot[ci])] = 1;
                debug_assert_eq!(ej, q.arrows[a].to);
            }
        }
    }
    // The socle class also receives the other arm's last step.
    for sp in &socle_paths {
        let prefix: Vec<Aid> = sp[..sp.len() - 1].to_vec();
        if let Some(ci) = class_of(&prefix) {
            let a = *sp.last().unwrap();
            rep.mats[a][(slot[socle_index], slot[ci])] = 1;
        }
    }
    if !rep.check_relations(q) {
        return Err(OracleError::Calibration(format!(
            "projective at {:?} violates relations",
            q.vertex(v)
        )));
    }
    Ok(Projective { rep, classes, top_vertex: v })
}

/// Radical of a representation: per-vertex span of all incoming images.
fn radical_basis(q: &RepQuiver, m: &Rep) -> Vec<Vec<Vec<u64>>> {
    let mut rad: Vec<Vec<Vec<u64>>> = vec![Vec::new(); q.vertices.len()];
    for (ai, arr) in q.arrows.iter().enumerate() {
        for c in 0..m.dims[arr.from] {
            let col = m.mats[ai].col(c);
            if col.iter().any(|&x| x != 0) {
                rad[arr.to].push(col);
            }
        }
    }
    rad
}

/// Projective cover: generators lift a basis of the top.
pub struct Cover {
    pub total: Rep,
    /// Per generator: (vertex, the projective, the map into the target as
    /// per-vertex matrices stacked into the total).
    pub pieces: Vec<(Vid, Projective)>,
    /// The cover map per vertex: dims target x dims total.
    pub pi: Vec<Mat>,
}

pub fn projective_cover(q: &RepQuiver, m: &Rep) -> Result<Cover> {
    let p = m.p;
    let rad = radical_basis(q, m);
    // Pick generators: coordinates of m completing the radical.
    let mut gens: Vec<(Vid, Vec<u64>)> = Vec::new();
    for v in 0..q.vertices.len() {
        if m.dims[v] == 0 {
            continue;
        }
        let mut span: Vec<Vec<u64>> = rad[v].clone();
        let mut rank = span_rank(p, &span);
        for k in 0..m.dims[v] {
            let mut e = vec![0u64; m.dims[v]];
            e[k] = 1;
            span.push(e.clone());
            let r2 = span_rank(p, &span);
            if r2 > rank {
                rank = r2;
                gens.push((v, e));
            } else {
                span.pop();
            }
        }
    }
    let mut pieces = Vec::new();
    for (v, _) in &gens {
        pieces.push((*v, projective(q, p, *v)?));
    }
    // Assemble the total representation and the map.
    let mut dims = vec![0usize; q.vertices.len()];
    let mut offsets: Vec<Vec<usize>> = Vec::new(); // per piece, per vertex
    for (_, proj) in &pieces {
        let mut off = vec![0usize; q.vertices.len()];
        for v in 0..q.vertices.len() {
            off[v] = dims[v];
            dims[v] += proj.rep.dims[v];
        }
        offsets.push(off);
    }
    let mut total = Rep::zero_shaped(q, p, dims.clone());
    for (k, (_, proj)) in pieces.iter().enumerate() {
        for a in 0..q.arrows.len() {
            let src = q.arrows[a].from;
            let dst = q.arrows[a].to;
            for r in 0..proj.rep.dims[dst] {
                for c in 0..proj.rep.dims[src] {
                    let val = proj.rep.mats[a][(r, c)];
                    if val != 0 {
                        total.mats[a][(offsets[k][dst] + r, offsets[k][src] + c)] = val;
                    }
                }
            }
        }
    }
    let mut pi: Vec<Mat> = (0..q.vertices.len())
        .map(|v| Mat::zero(p, m.dims[v], dims[v]))
        .collect();
    for (k, (gen, proj)) in pieces.iter().enumerate() {
        let (gv, gvec) = (&gens[k].0, &gens[k].1);
        debug_assert_eq!(gen, gv);
        // Basis vector of class c maps to m . path(c) applied to the
        // generator.
        let mut slot_count = vec![0usize; q.vertices.len()];
        for class in &proj.classes {
            let e = if class.is_empty() {
                *gv
            } else {
                q.arrows[*class.last().unwrap()].to
            };
            let target: Vec<u64> = if class.is_empty() {
                gvec.clone()
            } else {
                let act = m.path_action(q, class);
                (0..m.dims[e])
                    .map(|r| {
                        (0..m.dims[*gv])
                            .map(|c| act[(r, c)] * gvec[c] % p)
                            .sum::<u64>()
                            % p
                    })
                    .collect()
            };
            let col = offsets[k][e] + slot_count[e];
            slot_count[e] += 1;
            for r in 0..m.dims[e] {
                pi[e][(r, col)] = target[r];
            }
        }
    }
    // Surjectivity check.
    for v in 0..q.vertices.len() {
        if m.dims[v] > 0 && pi[v].rank() < m.dims[v] {
            return Err(OracleError::Calibration(format!(
                "cover not surjective at {:?}",
                q.vertex(v)
            )));
        }
    }
    Ok(Cover { total, pieces, pi })
}

/// Stable Hom: morphisms modulo the ones factoring through the projective
/// cover of the target.
pub fn stable_hom_dim(q: &RepQuiver, m: &Rep, n: &Rep) -> Result<usize> {
    let hs = hom_space(q, m, n);
    if hs.basis.is_empty() {
        return Ok(0);
    }
    let cover = projective_cover(q, n)?;
    let hp = hom_space(q, m, &cover.total);
    // Compose each basis map with pi, expressed in the hom(m, n) layout.
    let mut vecs = Vec::new();
    for f in &hp.basis {
        let mut composed = vec![0u64; hs.layout.len()];
        // f as per-vertex matrix: F_v with rows over cover dims.
        for (pos, &(v, r, c)) in hs.layout.iter().enumerate() {
            // (pi_v * F_v)[r][c] = sum_k pi_v[r][k] F_v[k][c]
            let mut acc = 0u64;
            for (hp_pos, &(vv, rr, cc)) in hp.layout.iter().enumerate() {
                if vv == v && cc == c {
                    acc = (acc + cover.pi[v][(r, rr)] * f[hp_pos]) % m.p;
                }
            }
            composed[pos] = acc;
        }
        vecs.push(composed);
    }
    let factoring = span_rank(m.p, &vecs);
    Ok(hs.basis.len() - factoring)
}

/// Split off every projective(-injective) direct summand.
pub fn strip_projective_summands(q: &RepQuiver, rep: &Rep) -> Result<Rep> {
    let mut cur = rep.clone();
    'outer: loop {
        for v in 0..q.vertices.len() {
            if cur.dims[v] == 0 {
                continue;
            }
            let lev = q.vertex(v).level;
            if lev >= q.w {
                continue;
            }
            let proj = projective(q, cur.p, v)?;
            // Candidate inclusions: P(v) -> cur, one per basis vector of
            // cur at v; candidate retractions from hom_space.
            let retr = hom_space(q, &cur, &proj.rep);
            if retr.basis.is_empty() {
                continue;
            }
            for gen_idx in 0..cur.dims[v] {
                let mut gvec = vec![0u64; cur.dims[v]];
                gvec[gen_idx] = 1;
                let finc = inclusion_from_generator(q, &proj, &cur, &gvec)?;
                let Some(finc) = finc else { continue };
                for g in &retr.basis {
                    // Scalar of g . finc on the top of P(v); the trivial
                    // class is created first, so it sits in slot 0 at v.
                    let mut scalar = 0u64;
                    for (pos, &(vv, rr, cc)) in retr.layout.iter().enumerate() {
                        if vv == v && rr == 0 {
                            scalar = (scalar + g[pos] * finc[v][(cc, 0)]) % cur.p;
                        }
                    }
                    if scalar == 0 {
                        continue;
                    }
                    // Split: replace cur by the kernel of the idempotent
                    // complement, i.e. ker(g) after correcting by the unit.
                    let next = split_off(q, &cur, &proj, &finc, g, &retr.layout)?;
                    cur = next;
                    continue 'outer;
                }
            }
        }
        return Ok(cur);
    }
}

/// The module map P(v) -> M sending the top to the given element, as
/// per-vertex matrices (columns over P(v) dims); None when the element does
/// not satisfy the relations (cannot happen when the target is a module).
fn inclusion_from_generator(
    q: &RepQuiver,
    proj: &Projective,
    m: &Rep,
    gvec: &[u64],
) -> Result<Option<Vec<Mat>>> {
    let p = m.p;
    let v = proj.top_vertex;
    let mut out: Vec<Mat> = (0..q.vertices.len())
        .map(|u| Mat::zero(p, m.dims[u], proj.rep.dims[u]))
        .collect();
    let mut slot_count = vec![0usize; q.vertices.len()];
    for class in &proj.classes {
        let e = if class.is_empty() {
            v
        } else {
            q.arrows[*class.last().unwrap()].to
        };
        let col = slot_count[e];
        slot_count[e] += 1;
        let target: Vec<u64> = if class.is_empty() {
            gvec.to_vec()
        } else {
            let act = m.path_action(q, class);
            (0..m.dims[e])
                .map(|r| {
                    (0..m.dims[v])
                        .map(|c| act[(r, c)] * gvec[c] % p)
                        .sum::<u64>()
                        % p
                })
                .collect()
        };
        for r in 0..m.dims[e] {
            out[e][(r, col)] = target[r];
        }
    }
    Ok(Some(out))
}

/// Given a split pair (inclusion f: P -> M, retraction g: M -> P with
/// g f a unit on the top), compute a complement of the image.
fn split_off(
    q: &RepQuiver,
    m: &Rep,
    proj: &Projective,
    finc: &[Mat],
    g: &[u64],
    layout: &[(Vid, usize, usize)],
) -> Result<Rep> {
    let p = m.p;
    // Materialize g as per-vertex matrices.
    let mut gmat: Vec<Mat> = (0..q.vertices.len())
        .map(|u| Mat::zero(p, proj.rep.dims[u], m.dims[u]))
        .collect();
    for (pos, &(v, r, c)) in layout.iter().enumerate() {
        gmat[v][(r, c)] = g[pos];
    }
    // h = g f: End(P); it is an isomorphism, so M = im f + ker g and the
    // kernel of (h^{-1} g) is a complement of im f.  Per vertex the kernel
    // of g itself has the right dimension because h is invertible.
    let mut dims = vec![0usize; q.vertices.len()];
    let mut kernels: Vec<Vec<Vec<u64>>> = Vec::new();
    for v in 0..q.vertices.len() {
        let h = gmat[v].mul(&finc[v]);
        // Invertibility per vertex (square since dims match).
        if h.rows != h.cols || (h.rows > 0 && h.rank() < h.rows) {
            return Err(OracleError::Calibration(
                "split pair is not an isomorphism on the summand".into(),
            ));
        }
        let ker = gmat[v].nullspace();
        dims[v] = ker.len();
        kernels.push(ker);
    }
    let mut out = Rep::zero_shaped(q, p, dims.clone());
    for (ai, arr) in q.arrows.iter().enumerate() {
        let (s, t) = (arr.from, arr.to);
        if dims[s] == 0 || dims[t] == 0 {
            continue;
        }
        // Express M_a(ker_s basis) in the ker_t basis; the image must lie in
        // ker_t because g intertwines and P has no component there... it
        // does in general, so solve the linear system honestly.
        let kt = Mat::from_rows(p, &kernels[t]); // rows are basis vectors
        for (cidx, kv) in kernels[s].iter().enumerate() {
            let img: Vec<u64> = (0..m.dims[t])
                .map(|r| {
                    (0..m.dims[s])
                        .map(|c| m.mats[ai][(r, c)] * kv[c] % p)
                        .sum::<u64>()
                        % p
                })
                .collect();
            // Solve x * kt = img (row convention): transpose solve.
            let mut ktt = Mat::zero(p, m.dims[t], dims[t]);
            for r in 0..dims[t] {
                for c in 0..m.dims[t] {
                    ktt[(c, r)] = kt[(r, c)];
                }
            }
            let x = ktt.solve(&img).ok_or_else(|| {
                OracleError::Calibration("kernel is not arrow-stable in split".into())
            })?;
            for r in 0..dims[t] {
                out.mats[ai][(r, cidx)] = x[r];
            }
        }
    }
    Ok(out)
}

/// Socle basis per vertex: vectors killed by every outgoing arrow.
fn socle_basis(q: &RepQuiver, m: &Rep) -> Vec<Vec<Vec<u64>>> {
    let p = m.p;
    let mut out = Vec::new();
    for v in 0..q.vertices.len() {
        if m.dims[v] == 0 {
            out.push(Vec::new());
            continue;
        }
        let mut rows: Vec<Vec<u64>> = Vec::new();
        for &a in &q.out[v] {
            for r in 0..m.dims[q.arrows[a].to] {
                rows.push((0..m.dims[v]).map(|c| m.mats[a][(r, c)]).collect());
            }
        }
        if rows.is_empty() {
            out.push(
                (0..m.dims[v])
                    .map(|k| {
                        let mut e = vec![0u64; m.dims[v]];
                        e[k] = 1;
                        e
                    })
                    .collect(),
            );
        } else {
            out.push(Mat::from_rows(p, &rows).nullspace());
        }
    }
    out
}

/// The injective indecomposable at a vertex: dual path classes into it.
pub fn injective(q: &RepQuiver, p: u64, v: Vid) -> Result<Projective> {
    let lev = q.vertex(v).level;
    if lev <= -q.w {
        return Err(OracleError::Window(format!(
            "injective at level {lev} needs the previous level"
        )));
    }
    // Paths ending at v, with the two full ones identified.
    let mut paths: Vec<Vec<Aid>> = vec![vec![]];
    let mut stack = vec![Vec::<Aid>::new()];
    while let Some(cur) = stack.pop() {
        let start = if cur.is_empty() { v } else { q.arrows[cur[0]].from };
        for &a in &q.into[start] {
            let mut nxt = vec![a];
            nxt.extend(cur.iter().copied());
            if q.path_nonzero(&nxt, false) {
                paths.push(nxt.clone());
                stack.push(nxt);
            }
        }
    }
    let mut socle: Vec<Vec<Aid>> = Vec::new();
    let mut proper: Vec<Vec<Aid>> = Vec::new();
    for path in paths {
        if !path.is_empty() && !q.path_nonzero(&path, true) {
            socle.push(path);
        } else {
            proper.push(path);
        }
    }
    if socle.is_empty() {
        return Err(OracleError::Calibration(format!(
            "injective at {:?} has no deep path",
            q.vertex(v)
        )));
    }
    let mut classes = proper;
    let top_index = classes.len();
    classes.push(socle[0].clone());
    let socle_paths = socle;

    let start_of = |path: &Vec<Aid>| -> Vid {
        if path.is_empty() { v } else { q.arrows[path[0]].from }
    };
    let mut dims = vec![0usize; q.vertices.len()];
    let mut slot = Vec::with_capacity(classes.len());
    for c in &classes {
        let s = start_of(c);
        slot.push(dims[s]);
        dims[s] += 1;
    }
    let mut rep = Rep::zero_shaped(q, p, dims);
    let class_of = |path: &Vec<Aid>| -> Option<usize> {
        if !q.path_nonzero(path, false) {
            return None;
        }
        if !path.is_empty() && !q.path_nonzero(path, true) {
            return Some(top_index);
        }
        classes.iter().position(|c| c == path)
    };
    // Arrow a maps the class of p to the class of (a . p) when nonzero:
    // the dual-basis action phi_p . a = phi_{a p}... acting by prepending.
    for (ci, c) in classes.iter().enumerate() {
        let s = start_of(c);
        for &a in &q.into[s] {
            let mut nxt = vec![a];
            nxt.extend(c.iter().copied());
            if let Some(cj) = class_of(&nxt) {
                rep.mats[a][(slot[ci], slot[cj])] = 1;
            }
        }
    }
    for sp in &socle_paths {
        let suffix: Vec<Aid> = sp[1..].to_vec();
        if let Some(ci) = class_of(&suffix) {
            let a = sp[0];
            rep.mats[a][(slot[ci], slot[top_index])] = 1;
        }
    }
    if !rep.check_relations(q) {
        return Err(OracleError::Calibration(format!(
            "injective at {:?} violates relations",
            q.vertex(v)
        )));
    }
    Ok(Projective { rep, classes, top_vertex: v })
}

/// Syzygy (sign -1) or cosyzygy (sign +1) in the stable category:
/// kernel of the projective cover, respectively cokernel of the injective
/// envelope, with projective summands stripped.
pub fn syzygy(q: &RepQuiver, m: &Rep, sign: i64) -> Result<Rep> {
    match sign {
        -1 => {
            let cover = projective_cover(q, m)?;
            let p = m.p;
            let mut dims = vec![0usize; q.vertices.len()];
            let mut kernels: Vec<Vec<Vec<u64>>> = Vec::new();
            for v in 0..q.vertices.len() {
                let ker = cover.pi[v].nullspace();
                dims[v] = ker.len();
                kernels.push(ker);
            }
            let mut out = Rep::zero_shaped(q, p, dims.clone());
            for (ai, arr) in q.arrows.iter().enumerate() {
                let (s, t) = (arr.from, arr.to);
                if dims[s] == 0 || dims[t] == 0 {
                    continue;
                }
                let mut ktt = Mat::zero(p, cover.total.dims[t], dims[t]);
                for (r, kv) in kernels[t].iter().enumerate() {
                    for c in 0..cover.total.dims[t] {
                        ktt[(c, r)] = kv[c];
                    }
                }
                for (cidx, kv) in kernels[s].iter().enumerate() {
                    let img: Vec<u64> = (0..cover.total.dims[t])
                        .map(|r| {
                            (0..cover.total.dims[s])
                                .map(|c| cover.total.mats[ai][(r, c)] * kv[c] % p)
                                .sum::<u64>()
                                % p
                        })
                        .collect();
                    let x = ktt.solve(&img).ok_or_else(|| {
                        OracleError::Calibration("cover kernel not arrow-stable".into())
                    })?;
                    for r in 0..dims[t] {
                        out.mats[ai][(r, cidx)] = x[r];
                    }
                }
            }
            strip_projective_summands(q, &out)
        }
        1 => {
            let p = m.p;
            let soc = socle_basis(q, m);
            // Envelope pieces: one injective per socle basis vector, with
            // the functional dual to it.
            let mut pieces: Vec<(Vid, Projective, Vec<u64>)> = Vec::new();
            for v in 0..q.vertices.len() {
                if soc[v].is_empty() {
                    continue;
                }
                // Dual functionals: rows of the inverse of the completed
                // basis, restricted to the socle block.
                let dim = m.dims[v];
                let mut rows = soc[v].clone();
                // Complete to a basis.
                for k in 0..dim {
                    let mut e = vec![0u64; dim];
                    e[k] = 1;
                    rows.push(e.clone());
                    if span_rank(p, &rows) < rows.len() {
                        rows.pop();
                    }
                }
                let bmat = Mat::from_rows(p, &rows);
                // Invert: solve bmat^T x = e_k for the dual functionals.
                let mut bt = Mat::zero(p, dim, dim);
                for r in 0..dim {
                    for c in 0..dim {
                        bt[(r, c)] = bmat[(c, r)];
                    }
                }
                for (k, _) in soc[v].iter().enumerate() {
                    let mut e = vec![0u64; dim];
                    e[k] = 1;
                    // functional psi with psi(row_j) = delta_{jk}
                    let psi = bt
                        .solve(&e)
                        .ok_or_else(|| OracleError::Calibration("socle basis degenerate".into()))?;
                    pieces.push((v, injective(q, p, v)?, psi));
                }
            }
            // Assemble the envelope target and the map env: M -> I.
            let mut dims = vec![0usize; q.vertices.len()];
            let mut offsets = Vec::new();
            for (_, inj, _) in &pieces {
                let mut off = vec![0usize; q.vertices.len()];
                for v in 0..q.vertices.len() {
                    off[v] = dims[v];
                    dims[v] += inj.rep.dims[v];
                }
                offsets.push(off);
            }
            let mut total = Rep::zero_shaped(q, p, dims.clone());
            for (k, (_, inj, _)) in pieces.iter().enumerate() {
                for a in 0..q.arrows.len() {
                    let (s, t) = (q.arrows[a].from, q.arrows[a].to);
                    for r in 0..inj.rep.dims[t] {
                        for c in 0..inj.rep.dims[s] {
                            let val = inj.rep.mats[a][(r, c)];
                            if val != 0 {
                                total.mats[a][(offsets[k][t] + r, offsets[k][s] + c)] = val;
                            }
                        }
                    }
                }
            }
            let mut env: Vec<Mat> = (0..q.vertices.len())
                .map(|u| Mat::zero(p, dims[u], m.dims[u]))
                .collect();
            for (k, (v, inj, psi)) in pieces.iter().enumerate() {
                // env(m)_u[class c] = psi(M_c(m)).
                let mut slot_count = vec![0usize; q.vertices.len()];
                for class in &inj.classes {
                    let s = if class.is_empty() {
                        *v
                    } else {
                        q.arrows[class[0]].from
                    };
                    let row = offsets[k][s] + slot_count[s];
                    slot_count[s] += 1;
                    for c in 0..m.dims[s] {
                        let val = if class.is_empty() {
                            psi[c]
                        } else {
                            let act = m.path_action(q, class);
                            (0..m.dims[*v])
                                .map(|r| psi[r] * act[(r, c)] % p)
                                .sum::<u64>()
                                % p
                        };
                        env[s][(row, c)] = val;
                    }
                }
            }
            // Injectivity check.
            for v in 0..q.vertices.len() {
                if m.dims[v] > 0 && env[v].rank() < m.dims[v] {
                    return Err(OracleError::Calibration(format!(
                        "envelope not injective at {:?}",
                        q.vertex(v)
                    )));
                }
            }
            // Cokernel: quotient bases.
            let mut out_dims = vec![0usize; q.vertices.len()];
            let mut proj_mats: Vec<Mat> = Vec::new();
            let mut lift_mats: Vec<Mat> = Vec::new();
            for v in 0..q.vertices.len() {
                let img: Vec<Vec<u64>> = (0..m.dims[v]).map(|c| env[v].col(c)).collect();
                let mut rows = img.clone();
                let base_rank = span_rank(p, &rows);
                let mut complement: Vec<Vec<u64>> = Vec::new();
                for k in 0..dims[v] {
                    let mut e = vec![0u64; dims[v]];
                    e[k] = 1;
                    rows.push(e.clone());
                    if span_rank(p, &rows) > base_rank + complement.len() {
                        complement.push(e);
                    } else {
                        rows.pop();
                    }
                }
                out_dims[v] = complement.len();
                // Change of basis: express any vector in img+complement
                // coordinates; the projection keeps the complement part.
                let mut basis = img;
                basis.extend(complement.iter().cloned());
                let bdim = basis.len();
                let mut bt = Mat::zero(p, dims[v], bdim);
                for (ci, vvec) in basis.iter().enumerate() {
                    for r in 0..dims[v] {
                        bt[(r, ci)] = vvec[r];
                    }
                }
                // projection: solve bt x = e_r, keep the tail coordinates.
                let mut pm = Mat::zero(p, out_dims[v], dims[v]);
                for r in 0..dims[v] {
                    let mut e = vec![0u64; dims[v]];
                    e[r] = 1;
                    if let Some(x) = bt.solve(&e) {
                        for t in 0..out_dims[v] {
                            pm[(t, r)] = x[bdim - out_dims[v] + t];
                        }
                    }
                }
                let mut lm = Mat::zero(p, dims[v], out_dims[v]);
                for (t, cv) in basis[bdim - out_dims[v]..].iter().enumerate() {
                    for r in 0..dims[v] {
                        lm[(r, t)] = cv[r];
                    }
                }
                proj_mats.push(pm);
                lift_mats.push(lm);
            }
            let mut out = Rep::zero_shaped(q, p, out_dims);
            for (ai, arr) in q.arrows.iter().enumerate() {
                let (s, t) = (arr.from, arr.to);
                out.mats[ai] = proj_mats[t].mul(&total.mats[ai]).mul(&lift_mats[s]);
            }
            strip_projective_summands(q, &out)
        }
        _ => Err(OracleError::UndefinedComposition(
            "syzygy sign must be +1 or -1".into(),
        )),
    }
}

/// Identify a representation as a string module by dimension vector and
/// Hom-profile agreement against probe modules.
pub fn identify_string(
    q: &RepQuiver,
    rep: &Rep,
    probes: &[Rep],
) -> Result<StringWord> {
    let total = rep.total_dim();
    if total == 0 {
        return Err(OracleError::Calibration("zero module has no string".into()));
    }
    // Depth-first walk through the support with exact multiplicities.
    let mut cands: Vec<StringWord> = Vec::new();
    let start_candidates: Vec<Vid> =
        (0..q.vertices.len()).filter(|&v| rep.dims[v] > 0).collect();
    for &v0 in &start_candidates {
        let mut stack: Vec<(Vec<Letter>, Vec<usize>)> = Vec::new();
        let mut used0 = rep.dims.clone();
        used0[v0] -= 1;
        stack.push((Vec::new(), used0));
        while let Some((ls, used)) = stack.pop() {
            if used.iter().all(|&x| x == 0) {
                let w = if ls.is_empty() {
                    StringWord::trivial(v0, 1)
                } else {
                    StringWord::Word(ls.clone())
                };
                if w.is_string(q) {
                    cands.push(w.class());
                }
                continue;
            }
            let end = if ls.is_empty() {
                v0
            } else {
                ls.last().unwrap().end(q)
            };
            for a in 0..q.arrows.len() {
                for inv in [false, true] {
                    let l = Letter { arrow: a, inverse: inv };
                    if l.start(q) != end {
                        continue;
                    }
                    let e = l.end(q);
                    if used[e] == 0 {
                        continue;
                    }
                    let mut nls = ls.clone();
                    nls.push(l);
                    let w = StringWord::Word(nls.clone());
                    if !w.is_string(q) {
                        continue;
                    }
                    let mut nused = used.clone();
                    nused[e] -= 1;
                    stack.push((nls, nused));
                }
            }
        }
    }
    cands.sort();
    cands.dedup();
    // Filter by Hom profiles.
    let mut matched = Vec::new();
    for w in cands {
        let wr = string_rep(q, rep.p, &w);
        let ok = probes.iter().all(|pr| {
            hom_dim_linear(q, pr, &wr) == hom_dim_linear(q, pr, rep)
                && hom_dim_linear(q, &wr, pr) == hom_dim_linear(q, rep, pr)
        }) && hom_dim_linear(q, &wr, rep) > 0
            && hom_dim_linear(q, rep, &wr) > 0;
        if ok {
            matched.push(w);
        }
    }
    matched.dedup();
    match matched.len() {
        1 => Ok(matched.pop().unwrap()),
        0 => Err(OracleError::Calibration(
            "no string matches the representation".into(),
        )),
        _ => Err(OracleError::Calibration(format!(
            "ambiguous string identification ({} candidates)",
            matched.len()
        ))),
    }
}
