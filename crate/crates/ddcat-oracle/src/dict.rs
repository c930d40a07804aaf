//! The coordinate-to-string dictionary.
//!
//! Anchors: the simple at cycle vertex 0 sits at `Z^0_{0,0}`; for `m > 0`
//! the simple at the last tail vertex sits on an X mouth, and the simple at
//! the top of the relation zone sits on a Y mouth.  Everything else is
//! propagated by hook moves (the mesh), AR translates, syzygies (the
//! suspension), and measured Hom profiles; every convention that is not
//! forced is fixed by calibrating against the closed-form Hom engine, and
//! any residual mismatch surfaces as a calibration error.
//!
//! One subtlety drives the walk strategy: for a trivial string the two
//! one-sided hook moves do not determine a geometric direction (the sign
//! does), so grids are filled by AR-translate diagonals, which are
//! direction free, plus one straight spine whose steps are disambiguated
//! against the previous cell and, where that is not possible, against Hom
//! probes into the already-mapped part.

use std::collections::BTreeMap;

use ddcat_core::hammock::hom_dim;
use ddcat_core::{Kind, ObjCoord, Params};

use crate::error::{OracleError, Result};
use crate::hooks;
use crate::quiver::RepQuiver;
use crate::rep::{hom_dim_linear, identify_string, stable_hom_dim, string_rep, syzygy, Rep};
use crate::word::StringWord;

pub struct Dictionary<'q> {
    pub params: Params,
    pub prime: u64,
    q: &'q RepQuiver,
    map: BTreeMap<ObjCoord, StringWord>,
    reps: BTreeMap<ObjCoord, Rep>,
    pub notes: Vec<String>,
}

/// Seeded xorshift64*; deterministic across platforms.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(seed.max(1))
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.0 = x;
        x.wrapping_mul(0x2545F4914F6CDD1D)
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }
}

impl<'q> Dictionary<'q> {
    pub fn get(&self, obj: ObjCoord) -> Option<&StringWord> {
        self.map.get(&obj)
    }

    pub fn rep(&self, obj: ObjCoord) -> Option<&Rep> {
        self.reps.get(&obj)
    }

    pub fn coords(&self) -> Vec<ObjCoord> {
        self.map.keys().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Stable Hom between two mapped coordinates.
    pub fn stable_hom(&self, a: ObjCoord, b: ObjCoord) -> Result<usize> {
        let ra = self
            .reps
            .get(&a)
            .ok_or_else(|| OracleError::Calibration(format!("{a} unmapped")))?;
        let rb = self
            .reps
            .get(&b)
            .ok_or_else(|| OracleError::Calibration(format!("{b} unmapped")))?;
        stable_hom_dim(self.q, ra, rb)
    }
}

/// Demote window escapes to walk ends; everything else is real.
fn soft(r: Result<Option<StringWord>>) -> Result<Option<StringWord>> {
    match r {
        Err(OracleError::Window(_)) => Ok(None),
        other => other,
    }
}

struct Builder<'q> {
    p: Params,
    prime: u64,
    q: &'q RepQuiver,
    map: BTreeMap<ObjCoord, StringWord>,
    reps: BTreeMap<ObjCoord, Rep>,
}

impl<'q> Builder<'q> {
    fn insert(&mut self, obj: ObjCoord, w: StringWord) {
        let r = string_rep(self.q, self.prime, &w);
        self.map.insert(obj, w);
        self.reps.insert(obj, r);
    }

    /// Does the candidate string pass stable-Hom probes for the claimed
    /// coordinate, against up to `count` nearby mapped cells?
    fn probes_pass(&self, target: ObjCoord, w: &StringWord, count: usize) -> Result<bool> {
        let wr = string_rep(self.q, self.prime, w);
        let mut near: Vec<ObjCoord> = self.map.keys().copied().collect();
        near.sort_by_key(|c| {
            ((c.i - target.i).abs() + (c.j - target.j).abs(), c.kind, c.comp, c.i, c.j)
        });
        for c in near.into_iter().take(count) {
            let r = &self.reps[&c];
            if stable_hom_dim(self.q, r, &wr)? != hom_dim(&self.p, c, target) as usize {
                return Ok(false);
            }
            if stable_hom_dim(self.q, &wr, r)? != hom_dim(&self.p, target, c) as usize {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The defined one-sided successors (or predecessors) of a string.
    fn mesh_moves(&self, w: &StringWord, fwd: bool) -> Result<Vec<StringWord>> {
        let mut out = Vec::new();
        let ops: [fn(&RepQuiver, &StringWord) -> Result<Option<StringWord>>; 2] = if fwd {
            [hooks::l1, hooks::r1]
        } else {
            [hooks::l1_inv, hooks::r1_inv]
        };
        for op in ops {
            if let Some(x) = soft(op(self.q, w))? {
                out.push(x);
            }
        }
        out.dedup_by_key(|x| x.class());
        Ok(out)
    }

    /// Continue a straight mesh walk: among the moves of `cur`, drop the one
    /// that doubles back diagonally over `prev`, and take the survivor.
    fn straight_step(
        &self,
        prev: &StringWord,
        cur: &StringWord,
        fwd: bool,
    ) -> Result<Option<StringWord>> {
        let cands = self.mesh_moves(cur, fwd)?;
        if cands.is_empty() {
            return Ok(None);
        }
        let diag = if fwd {
            soft(hooks::ar_translate_inv(self.q, prev))?
        } else {
            soft(hooks::ar_translate(self.q, prev))?
        };
        let Some(diag) = diag else {
            return Ok(None);
        };
        let rest: Vec<StringWord> = cands
            .into_iter()
            .filter(|c| c.class() != diag.class())
            .collect();
        match rest.len() {
            0 => Ok(None),
            1 => Ok(Some(rest.into_iter().next().unwrap())),
            _ => Err(OracleError::Calibration(
                "straight step is ambiguous".into(),
            )),
        }
    }

    /// Fill a Z-component grid from an anchor at `(comp, 0, 0)`.
    ///
    /// The spine runs along the ray (second coordinate); all other cells are
    /// AR-translate diagonals of it, which sidesteps any orientation
    /// ambiguity away from the spine.
    fn fill_z_grid(&mut self, anchor: &StringWord, comp: i64, cw: i64, swap: bool) -> Result<()> {
        let reach = 2 * cw + 1;
        let mut rows: BTreeMap<i64, BTreeMap<i64, StringWord>> = BTreeMap::new();
        let mut spine: BTreeMap<i64, StringWord> = BTreeMap::new();
        spine.insert(0, anchor.clone());
        for dir in [1i64, -1] {
            let mut prev: Option<StringWord> = None;
            let mut cur = anchor.clone();
            let mut j = 0;
            loop {
                j += dir;
                if j.abs() > reach {
                    break;
                }
                let next = match &prev {
                    None => {
                        // First step: the op labeling fixed by calibration.
                        let first = if dir > 0 {
                            if swap { hooks::r1(self.q, &cur) } else { hooks::l1(self.q, &cur) }
                        } else if swap {
                            hooks::r1_inv(self.q, &cur)
                        } else {
                            hooks::l1_inv(self.q, &cur)
                        };
                        soft(first)?
                    }
                    Some(p) => self.straight_step(p, &cur, dir > 0)?,
                };
                match next {
                    Some(nx) => {
                        spine.insert(j, nx.clone());
                        prev = Some(cur);
                        cur = nx;
                    }
                    None => break,
                }
            }
        }
        rows.insert(0, spine);
        // Upward diagonals: cell (i, j) = tau^{-1} of cell (i-1, j-1).
        for i in 1..=cw {
            let mut row = BTreeMap::new();
            for j in -cw..=reach {
                if let Some(w) = rows[&(i - 1)].get(&(j - 1)) {
                    if let Some(nx) = soft(hooks::ar_translate_inv(self.q, w))? {
                        row.insert(j, nx);
                    }
                }
            }
            rows.insert(i, row);
        }
        // Downward diagonals: cell (i, j) = tau of cell (i+1, j+1).
        for i in (-cw..=-1).rev() {
            let mut row = BTreeMap::new();
            for j in -reach..=cw {
                if let Some(w) = rows[&(i + 1)].get(&(j + 1)) {
                    if let Some(nx) = soft(hooks::ar_translate(self.q, w))? {
                        row.insert(j, nx);
                    }
                }
            }
            rows.insert(i, row);
        }
        for (&i, row) in &rows {
            for (&j, w) in row {
                if i.abs() <= cw && j.abs() <= cw {
                    self.insert(ObjCoord::z(comp, i, j), w.clone());
                }
            }
        }
        Ok(())
    }

    /// Fill an X or Y component grid from a mouth anchor at diagonal
    /// coordinate `base`.  Each height row is a tau orbit; one vertical seed
    /// per row is chosen by dropping the known down-move and, at the mouth,
    /// by Hom probes.
    fn fill_xy_grid(
        &mut self,
        anchor: &StringWord,
        kind: Kind,
        comp: i64,
        base: i64,
        cw: i64,
    ) -> Result<()> {
        let reach = 2 * cw + 1;
        let at = |c: i64, h: i64| match kind {
            Kind::X => ObjCoord::x(comp, c, c + h),
            Kind::Y => ObjCoord::y(comp, c + h, c),
            Kind::Z => unreachable!(),
        };
        let mut rows: Vec<BTreeMap<i64, StringWord>> = Vec::new();
        let mut mouth = BTreeMap::new();
        mouth.insert(base, anchor.clone());
        for dir in [1i64, -1] {
            let mut cur = anchor.clone();
            let mut c = base;
            loop {
                c += dir;
                if (c - base).abs() > reach + cw {
                    break;
                }
                let mv = if dir > 0 {
                    soft(hooks::ar_translate_inv(self.q, &cur))?
                } else {
                    soft(hooks::ar_translate(self.q, &cur))?
                };
                match mv {
                    Some(nx) => {
                        mouth.insert(c, nx.clone());
                        cur = nx;
                    }
                    None => break,
                }
            }
        }
        for (&c, w) in &mouth {
            if at(c, 0).i.abs() <= cw && at(c, 0).j.abs() <= cw {
                self.insert(at(c, 0), w.clone());
            }
        }
        rows.push(mouth);
        for h in 1..=reach {
            // Vertical seed: from some cell of the previous row, the move
            // that is not the known height-(h-2) cell.
            let mut seeded: Option<(i64, StringWord)> = None;
            let prev_row = rows[h as usize - 1].clone();
            for (&c, w) in &prev_row {
                let cands = self.mesh_moves(w, true)?;
                if cands.is_empty() {
                    continue;
                }
                let survivors: Vec<StringWord> = if h >= 2 {
                    match rows[h as usize - 2].get(&(c + 1)) {
                        Some(down) => cands
                            .into_iter()
                            .filter(|x| x.class() != down.class())
                            .collect(),
                        None => continue,
                    }
                } else {
                    // Mouth row: resolve with Hom probes.
                    let mut ok = Vec::new();
                    for x in cands {
                        if self.probes_pass(at(c, 1), &x, 8)? {
                            ok.push(x);
                        }
                    }
                    ok
                };
                if survivors.len() == 1 {
                    seeded = Some((c, survivors.into_iter().next().unwrap()));
                    break;
                }
            }
            let Some((c0, seed)) = seeded else { break };
            let mut row = BTreeMap::new();
            row.insert(c0, seed.clone());
            for dir in [1i64, -1] {
                let mut cur = seed.clone();
                let mut c = c0;
                loop {
                    c += dir;
                    if (c - base).abs() > reach + cw {
                        break;
                    }
                    let mv = if dir > 0 {
                        soft(hooks::ar_translate_inv(self.q, &cur))?
                    } else {
                        soft(hooks::ar_translate(self.q, &cur))?
                    };
                    match mv {
                        Some(nx) => {
                            row.insert(c, nx.clone());
                            cur = nx;
                        }
                        None => break,
                    }
                }
            }
            for (&c, w) in &row {
                let obj = at(c, h);
                if obj.i.abs() <= cw && obj.j.abs() <= cw {
                    self.insert(obj, w.clone());
                }
            }
            rows.push(row);
        }
        Ok(())
    }

    fn probe_reps(&self, comp: i64) -> Vec<Rep> {
        let sel: Vec<&Rep> = self
            .map
            .keys()
            .filter(|c| c.kind == Kind::Z && c.comp == comp)
            .map(|c| &self.reps[c])
            .collect();
        let step = (sel.len() / 6).max(1);
        sel.into_iter().step_by(step).take(6).cloned().collect()
    }

    /// Measured profile over a Z-component grid: stable Hom from each grid
    /// cell into the target (or from the source into each cell).
    fn z_profile(
        &self,
        comp: i64,
        other: &Rep,
        incoming: bool,
        probes: &[(i64, i64)],
    ) -> Result<Vec<((i64, i64), usize)>> {
        let mut out = Vec::new();
        for &(i, j) in probes {
            let Some(r) = self.reps.get(&ObjCoord::z(comp, i, j)) else {
                continue;
            };
            let v = if incoming {
                stable_hom_dim(self.q, r, other)?
            } else {
                stable_hom_dim(self.q, other, r)?
            };
            out.push(((i, j), v));
        }
        Ok(out)
    }
}

enum LineShape {
    Column(i64),
    Row(i64),
}

/// Detect a single-line profile.  In strict mode the line must have
/// measured zero cells on both flanks, so that a wider band cannot
/// masquerade as a line at the edge of the probes; trusted mouth anchors
/// (whose profile is a line by construction) use the relaxed mode.
fn detect_line(profile: &[((i64, i64), usize)], strict: bool) -> Option<LineShape> {
    let nonzero: Vec<(i64, i64)> = profile
        .iter()
        .filter(|&&(_, v)| v > 0)
        .map(|&(c, _)| c)
        .collect();
    if nonzero.is_empty() || profile.iter().any(|&(_, v)| v > 1) {
        return None;
    }
    let measured_zero =
        |i: i64, j: i64| profile.iter().any(|&((a, b), v)| a == i && b == j && v == 0);
    let c0 = nonzero[0].0;
    if nonzero.iter().all(|&(i, _)| i == c0)
        && profile.iter().all(|&((i, _), v)| (v > 0) == (i == c0))
        && nonzero.len() >= 2
        && (!strict
            || nonzero
                .iter()
                .all(|&(_, j)| measured_zero(c0 - 1, j) && measured_zero(c0 + 1, j)))
    {
        return Some(LineShape::Column(c0));
    }
    let r0 = nonzero[0].1;
    if nonzero.iter().all(|&(_, j)| j == r0)
        && profile.iter().all(|&((_, j), v)| (v > 0) == (j == r0))
        && nonzero.len() >= 2
        && (!strict
            || nonzero
                .iter()
                .all(|&(i, _)| measured_zero(i, r0 - 1) && measured_zero(i, r0 + 1)))
    {
        return Some(LineShape::Row(r0));
    }
    None
}

/// Build the dictionary over the coordinate window `cw` (|i|, |j| <= cw).
pub fn build_dictionary<'q>(
    p: &Params,
    q: &'q RepQuiver,
    cw: i64,
    prime: u64,
) -> Result<Dictionary<'q>> {
    let mut b = Builder {
        p: *p,
        prime,
        q,
        map: BTreeMap::new(),
        reps: BTreeMap::new(),
    };
    let mut notes = Vec::new();
    let v00 = q
        .vid(0, 0)
        .ok_or_else(|| OracleError::Window("cycle vertex 0 missing".into()))?;
    let s0 = StringWord::trivial(v00, 1);

    let probes: Vec<(i64, i64)> = (-2..=2)
        .flat_map(|i| (-2..=2).map(move |j| (i, j)))
        .collect();

    // Step 1: provisional grid for the base Z component.
    b.fill_z_grid(&s0, 0, cw, false)?;
    let mut swap0 = false;

    // Step 2: the Y-side anchor fixes the orientation.  The simple at the
    // cycle vertex n - r sits on a Y mouth; its incoming profile from the
    // base grid must be a row.
    let vy = q
        .vid(0, p.n() - p.r())
        .ok_or_else(|| OracleError::Window("relation-zone vertex missing".into()))?;
    let sy = StringWord::trivial(vy, 1);
    let mut sy_rep = string_rep(q, prime, &sy);
    let mut y_shift = 0i64;
    let (y_row, sy_word) = loop {
        let prof = b.z_profile(0, &sy_rep, true, &probes)?;
        match detect_line(&prof, false) {
            Some(LineShape::Row(c)) => {
                let word = if y_shift == 0 {
                    sy.clone()
                } else {
                    identify_string(q, &sy_rep, &b.probe_reps(0))?
                };
                break (c, word);
            }
            Some(LineShape::Column(_)) => {
                if swap0 {
                    return Err(OracleError::Calibration(
                        "base grid orientation oscillates".into(),
                    ));
                }
                swap0 = true;
                notes.push("base grid orientation flipped".into());
                b.map.clear();
                b.reps.clear();
                b.fill_z_grid(&s0, 0, cw, true)?;
            }
            None => {
                y_shift += 1;
                if y_shift >= p.r().max(2) {
                    return Err(OracleError::Calibration(
                        "no Y-side anchor profile found".into(),
                    ));
                }
                sy_rep = syzygy(q, &sy_rep, -1)?;
            }
        }
    };
    let y1 = ObjCoord::y(0, y_row - 1, y_row - 1).sigma(p, 1);

    // Step 3: the X-side anchor.  For m > 0 it is the simple at tail
    // vertex -1; for m = 0 search short strings for a column profile.
    let (x1, sx_word) = if p.m() > 0 {
        let vx = q
            .vid(0, -1)
            .ok_or_else(|| OracleError::Window("tail vertex missing".into()))?;
        let sx = StringWord::trivial(vx, 1);
        let mut rep = string_rep(q, prime, &sx);
        let mut shift = 0i64;
        loop {
            let prof = b.z_profile(0, &rep, true, &probes)?;
            match detect_line(&prof, false) {
                Some(LineShape::Column(c)) => {
                    let word = if shift == 0 {
                        sx.clone()
                    } else {
                        identify_string(q, &rep, &b.probe_reps(0))?
                    };
                    break (ObjCoord::x(0, c - 1, c - 1).sigma(p, 1), word);
                }
                Some(LineShape::Row(_)) => {
                    return Err(OracleError::Calibration(
                        "X anchor shows a row profile after orientation fixing".into(),
                    ))
                }
                None => {
                    shift += 1;
                    if shift >= p.r().max(2) {
                        return Err(OracleError::Calibration(
                            "no X-side anchor profile found".into(),
                        ));
                    }
                    rep = syzygy(q, &rep, -1)?;
                }
            }
        }
    } else {
        let mut found = None;
        'search: for w in StringWord::enumerate(q, 2 * (p.rank() as usize) + 2) {
            let wr = string_rep(q, prime, &w);
            if wr.total_dim() > 3 * p.rank() as usize {
                continue;
            }
            let prof = b.z_profile(0, &wr, true, &probes)?;
            if let Some(LineShape::Column(c)) = detect_line(&prof, true) {
                found = Some((ObjCoord::x(0, c - 1, c - 1).sigma(p, 1), w));
                break 'search;
            }
        }
        found.ok_or_else(|| OracleError::Calibration("no X mouth string found".into()))?
    };
    if p.m() > 0 && p.r() >= 2 && x1 != ObjCoord::x(1, 0, 0) {
        return Err(OracleError::Calibration(format!(
            "tail simple landed at {x1}, expected the X mouth at the origin"
        )));
    }

    // Step 4: walk the components.  From the grid of Z^{k-1}: anchor and
    // fill X^{k mod r} and Y^{k mod r}, then Z^k for k < r.
    let mut z_anchor = s0.clone();
    let mut x_anchor: (ObjCoord, StringWord) = (x1, sx_word);
    let mut y_anchor: (ObjCoord, StringWord) = (y1, sy_word);
    for k in 1..=p.r() {
        let comp = k % p.r();
        b.fill_xy_grid(&x_anchor.1, Kind::X, comp, x_anchor.0.i, cw)?;
        b.fill_xy_grid(&y_anchor.1, Kind::Y, comp, y_anchor.0.i, cw)?;
        if k == p.r() {
            break;
        }
        // Z^k anchor: the suspension of the previous one.
        let zrep = syzygy(q, &string_rep(q, prime, &z_anchor), 1)?;
        let zword = identify_string(q, &zrep, &b.probe_reps(k - 1))?;
        // Orientation of the new grid: the X^k mouth anchor must give a
        // column profile at its own index.
        let mut swapk = false;
        loop {
            b.fill_z_grid(&zword, k, cw, swapk)?;
            let xrep = string_rep(q, prime, &x_anchor.1);
            let prof = b.z_profile(k, &xrep, false, &probes)?;
            match detect_line(&prof, false) {
                Some(LineShape::Column(c)) if c == x_anchor.0.i => break,
                _ if !swapk => {
                    swapk = true;
                    notes.push(format!("component Z^{k} orientation flipped"));
                    for c in b.map.keys().copied().collect::<Vec<_>>() {
                        if c.kind == Kind::Z && c.comp == k {
                            b.map.remove(&c);
                            b.reps.remove(&c);
                        }
                    }
                }
                _ => {
                    return Err(OracleError::Calibration(format!(
                        "cannot orient the Z^{k} grid against the X anchor"
                    )))
                }
            }
        }
        z_anchor = zword;
        // Next X/Y anchors by syzygy of the current ones.
        let nx = syzygy(q, &string_rep(q, prime, &x_anchor.1), 1)?;
        let nxw = identify_string(q, &nx, &b.probe_reps(k))?;
        x_anchor = (x_anchor.0.sigma(p, 1), nxw);
        let ny = syzygy(q, &string_rep(q, prime, &y_anchor.1), 1)?;
        let nyw = identify_string(q, &ny, &b.probe_reps(k))?;
        y_anchor = (y_anchor.0.sigma(p, 1), nyw);
    }

    let mut dict = Dictionary {
        params: *p,
        prime,
        q,
        map: b.map,
        reps: b.reps,
        notes,
    };

    // Step 5: calibration sample: the dictionary must reproduce the engine
    // in degree zero on a deterministic sample.
    let coords = dict.coords();
    let mut rng = Rng::new(0x5EED);
    let mut checked = 0;
    while checked < 60 && coords.len() >= 2 {
        let a = coords[rng.below(coords.len())];
        let bb = coords[rng.below(coords.len())];
        let got = dict.stable_hom(a, bb)?;
        let want = hom_dim(p, a, bb) as usize;
        if got != want {
            return Err(OracleError::Calibration(format!(
                "dictionary disagrees with the engine at ({a}, {bb}): {got} vs {want}"
            )));
        }
        checked += 1;
    }
    dict.notes.push(format!("{} coordinates mapped", dict.len()));
    Ok(dict)
}

/// Cross-validation report between the engine and the oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub pairs: usize,
    pub hom_mismatches: usize,
    pub count_mismatches: usize,
    pub mapped: usize,
}

/// Sample coordinate pairs and compare: engine dimension vs stable Hom of
/// string modules, and the admissible-pair count vs the linear-algebra
/// dimension.  `perturb` deliberately corrupts one comparison.
pub fn cross_check(
    p: &Params,
    dict: &Dictionary<'_>,
    samples: usize,
    seed: u64,
    perturb: bool,
) -> Result<CheckReport> {
    let coords = dict.coords();
    if coords.len() < 2 {
        return Err(OracleError::Calibration("dictionary too small".into()));
    }
    let mut rng = Rng::new(seed);
    let mut hom_mismatches = 0;
    let mut count_mismatches = 0;
    for k in 0..samples {
        let a = coords[rng.below(coords.len())];
        let b = coords[rng.below(coords.len())];
        let mut engine = hom_dim(p, a, b) as usize;
        if perturb && k == samples / 2 {
            engine += 1;
        }
        let oracle = dict.stable_hom(a, b)?;
        if engine != oracle {
            hom_mismatches += 1;
        }
        let (wa, wb) = (dict.get(a).unwrap(), dict.get(b).unwrap());
        let comb = crate::maps::hom_count_combinatorial(dict.q, wa, wb);
        let lin = hom_dim_linear(dict.q, dict.rep(a).unwrap(), dict.rep(b).unwrap());
        if comb != lin {
            count_mismatches += 1;
        }
    }
    Ok(CheckReport {
        pairs: samples,
        hom_mismatches,
        count_mismatches,
        mapped: dict.len(),
    })
}
