//! Hom dimensions between indecomposables, in degree zero and in all
//! degrees, together with the coarse classification of objects by their
//! graded self-extensions.
//!
//! Every Hom space has dimension 0 or 1 when `r >= 2`; for `r = 1` the
//! merged components allow dimension 2 on one rectangle per source object.

use std::collections::BTreeMap;

use crate::coord::{Kind, ObjCoord};
use crate::params::Params;

/// Finitely supported map `degree -> dim Hom(A, Sigma^d B)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GradedDim(BTreeMap<i64, u8>);

impl GradedDim {
    pub fn get(&self, d: i64) -> u8 {
        *self.0.get(&d).unwrap_or(&0)
    }

    fn add(&mut self, d: i64, v: u8) {
        if v > 0 {
            *self.0.entry(d).or_insert(0) += v;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, u8)> + '_ {
        self.0.iter().map(|(&d, &v)| (d, v))
    }

    pub fn support(&self) -> Vec<i64> {
        self.0.keys().copied().collect()
    }

    /// Total dimension over all degrees.
    pub fn total(&self) -> i64 {
        self.0.values().map(|&v| v as i64).sum()
    }

    /// True when all entries sit in the given degree range.
    pub fn supported_within(&self, lo: i64, hi: i64) -> bool {
        self.0.keys().all(|&d| lo <= d && d <= hi)
    }

    pub fn from_pairs(pairs: &[(i64, u8)]) -> Self {
        let mut g = GradedDim::default();
        for &(d, v) in pairs {
            g.add(d, v);
        }
        g
    }

    /// JSON object keyed by degree strings, ascending.
    pub fn to_json(&self) -> String {
        let mut s = String::from("{");
        for (k, (d, v)) in self.iter().enumerate() {
            if k > 0 {
                s.push(',');
            }
            s.push_str(&format!("\"{d}\":{v}"));
        }
        s.push('}');
        s
    }
}

/// dim Hom(A, B) in degree zero.
///
/// Case analysis over the component pair; for `r = 1` the two clauses of a
/// merged component contribute additively, which is the only source of
/// two-dimensional Hom spaces.
pub fn hom_dim(p: &Params, a: ObjCoord, b: ObjCoord) -> u8 {
    let r = p.r();
    let next = (a.comp + 1).rem_euclid(r);
    let mut dim = 0u8;
    match a.kind {
        Kind::X => match b.kind {
            Kind::X => {
                if b.comp == a.comp && a.i <= b.i && b.i <= a.j && b.j >= a.j {
                    dim += 1;
                }
                if b.comp == next {
                    let s = a.serre(p, 1);
                    if b.i <= s.i && s.i <= b.j && b.j <= s.j {
                        dim += 1;
                    }
                }
            }
            Kind::Z => {
                if b.comp == a.comp && a.i <= b.i && b.i <= a.j {
                    dim += 1;
                }
            }
            Kind::Y => {}
        },
        Kind::Y => match b.kind {
            Kind::Y => {
                if b.comp == a.comp && b.i >= a.i && a.j <= b.j && b.j <= a.i {
                    dim += 1;
                }
                if b.comp == next {
                    let s = a.serre(p, 1);
                    if s.j <= b.i && b.i <= s.i && b.j <= s.j {
                        dim += 1;
                    }
                }
            }
            Kind::Z => {
                if b.comp == a.comp && a.j <= b.j && b.j <= a.i {
                    dim += 1;
                }
            }
            Kind::X => {}
        },
        Kind::Z => match b.kind {
            Kind::X => {
                if b.comp == next {
                    let c = ObjCoord::x(a.comp, a.i - 1, a.i - 1).sigma(p, 1);
                    if b.i <= c.i && c.i <= b.j {
                        dim += 1;
                    }
                }
            }
            Kind::Y => {
                if b.comp == next {
                    let c = ObjCoord::y(a.comp, a.j - 1, a.j - 1).sigma(p, 1);
                    if b.i >= c.i && c.i >= b.j {
                        dim += 1;
                    }
                }
            }
            Kind::Z => {
                if b.comp == a.comp && b.i >= a.i && b.j >= a.j {
                    dim += 1;
                }
                if b.comp == next {
                    let s = a.serre(p, 1);
                    if b.i <= s.i && b.j <= s.j {
                        dim += 1;
                    }
                }
            }
        },
    }
    dim
}

/// One linear constraint `lo <= base + step * l <= hi` on the wrap count l.
struct Affine {
    base: i64,
    step: i64,
}

fn floor_div(a: i64, b: i64) -> i64 {
    let q = a / b;
    if (a % b != 0) && ((a < 0) != (b < 0)) {
        q - 1
    } else {
        q
    }
}

fn ceil_div(a: i64, b: i64) -> i64 {
    -floor_div(-a, b)
}

/// Intersect constraints of the shape `value(l) >= lo` / `value(l) <= hi`
/// into an integer interval.  Returns None when empty; panics when a
/// constraint set fails to bound l on both sides, which cannot happen for
/// the hammock clauses of an algebra of finite global dimension.
fn solve(cons: &[(Affine, Option<i64>, Option<i64>)]) -> Option<(i64, i64)> {
    let mut lo: Option<i64> = None;
    let mut hi: Option<i64> = None;
    for (f, want_lo, want_hi) in cons {
        let mut bounds = Vec::with_capacity(2);
        if let Some(b) = want_lo {
            bounds.push((*b, true));
        }
        if let Some(b) = want_hi {
            bounds.push((*b, false));
        }
        for (b, is_lower) in bounds {
            if f.step == 0 {
                if (is_lower && f.base < b) || (!is_lower && f.base > b) {
                    return None;
                }
                continue;
            }
            // value >= b  <=>  l >= ceil((b-base)/step)   (step > 0)
            //             <=>  l <= floor((b-base)/step)  (step < 0)
            let from_below = is_lower == (f.step > 0);
            if from_below {
                let v = ceil_div(b - f.base, f.step);
                lo = Some(lo.map_or(v, |c| c.max(v)));
            } else {
                let v = floor_div(b - f.base, f.step);
                hi = Some(hi.map_or(v, |c| c.min(v)));
            }
        }
    }
    let (lo, hi) = (
        lo.expect("hammock clause must bound l from below"),
        hi.expect("hammock clause must bound l from above"),
    );
    (lo <= hi).then_some((lo, hi))
}

/// All degrees d with Hom(A, Sigma^d B) != 0, with exact dimensions.
///
/// For each residue of d mod r the target component is fixed and the target
/// coordinates are affine in the wrap count, so each hammock clause solves
/// to an integer interval; the support is their finite union.
pub fn graded_hom(p: &Params, a: ObjCoord, b: ObjCoord) -> GradedDim {
    let r = p.r();
    let next = (a.comp + 1).rem_euclid(r);
    let mut out = GradedDim::default();
    for rho in 0..r {
        let b0 = b.sigma(p, rho);
        // Coordinate drift of Sigma^r on the target component.
        let (si, sj) = match b.kind {
            Kind::X => (p.x_step(), p.x_step()),
            Kind::Y => (p.y_step(), p.y_step()),
            Kind::Z => (p.x_step(), p.y_step()),
        };
        let ti = |lo: Option<i64>, hi: Option<i64>| (Affine { base: b0.i, step: si }, lo, hi);
        let tj = |lo: Option<i64>, hi: Option<i64>| (Affine { base: b0.j, step: sj }, lo, hi);
        let mut clause = |cons: &[(Affine, Option<i64>, Option<i64>)]| {
            if let Some((llo, lhi)) = solve(cons) {
                for l in llo..=lhi {
                    out.add(rho + l * r, 1);
                }
            }
        };
        match (a.kind, b.kind) {
            (Kind::X, Kind::X) => {
                if b0.comp == a.comp {
                    clause(&[ti(Some(a.i), Some(a.j)), tj(Some(a.j), None)]);
                }
                if b0.comp == next {
                    let s = a.serre(p, 1);
                    clause(&[ti(None, Some(s.i)), tj(Some(s.i), Some(s.j))]);
                }
            }
            (Kind::X, Kind::Z) => {
                if b0.comp == a.comp {
                    clause(&[ti(Some(a.i), Some(a.j))]);
                }
            }
            (Kind::Y, Kind::Y) => {
                if b0.comp == a.comp {
                    clause(&[ti(Some(a.i), None), tj(Some(a.j), Some(a.i))]);
                }
                if b0.comp == next {
                    let s = a.serre(p, 1);
                    clause(&[ti(Some(s.j), Some(s.i)), tj(None, Some(s.j))]);
                }
            }
            (Kind::Y, Kind::Z) => {
                if b0.comp == a.comp {
                    clause(&[tj(Some(a.j), Some(a.i))]);
                }
            }
            (Kind::Z, Kind::X) => {
                if b0.comp == next {
                    let c = ObjCoord::x(a.comp, a.i - 1, a.i - 1).sigma(p, 1).i;
                    clause(&[ti(None, Some(c)), tj(Some(c), None)]);
                }
            }
            (Kind::Z, Kind::Y) => {
                if b0.comp == next {
                    let c = ObjCoord::y(a.comp, a.j - 1, a.j - 1).sigma(p, 1).i;
                    clause(&[ti(Some(c), None), tj(None, Some(c))]);
                }
            }
            (Kind::Z, Kind::Z) => {
                if b0.comp == a.comp {
                    clause(&[ti(Some(a.i), None), tj(Some(a.j), None)]);
                }
                if b0.comp == next {
                    let s = a.serre(p, 1);
                    clause(&[ti(None, Some(s.i)), tj(None, Some(s.j))]);
                }
            }
            _ => {}
        }
    }
    out
}

/// Graded endomorphisms of an X/Y object in closed form.
///
/// On the X side the self-maps live in degrees `l r` for
/// `0 <= l <= floor(h/(m+r))` and `1 - l r` for `1 <= l <= floor((h+1)/(m+r))`;
/// dually on the Y side with `n - r` in place of `m + r`.  Z objects are
/// exceptional.
pub fn endo_complex(p: &Params, a: ObjCoord) -> GradedDim {
    let mut out = GradedDim::default();
    match a.kind {
        Kind::Z => out.add(0, 1),
        Kind::X => {
            let h = a.j - a.i;
            let plus = h.div_euclid(p.x_step());
            let minus = (h + 1).div_euclid(p.x_step());
            for l in 0..=plus {
                out.add(l * p.r(), 1);
            }
            for l in 1..=minus {
                out.add(1 - l * p.r(), 1);
            }
        }
        Kind::Y => {
            let h = a.i - a.j;
            let per = p.n() - p.r();
            let minus = h.div_euclid(per);
            let plus = (h + 1).div_euclid(per);
            for l in 0..=minus {
                out.add(-l * p.r(), 1);
            }
            for l in 1..=plus {
                out.add(l * p.r() + 1, 1);
            }
        }
    }
    out
}

/// Coarse homological type of an indecomposable object.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ObjectClass {
    /// Graded endomorphisms reduce to scalars.
    Exceptional,
    /// Endomorphisms are `k + k[-d]`; `spherical` when additionally the
    /// Serre functor acts as `Sigma^d` on the object.
    Spherelike { d: i64, spherical: bool },
    /// At least three-dimensional graded endomorphisms, with some negative
    /// degree contribution.
    Big,
}

pub fn classify(p: &Params, a: ObjCoord) -> ObjectClass {
    match a.kind {
        Kind::Z => ObjectClass::Exceptional,
        Kind::X => {
            let h = a.j - a.i;
            let edge = p.m() + p.r() - 1;
            if h < edge {
                ObjectClass::Exceptional
            } else if h == edge {
                ObjectClass::Spherelike {
                    d: 1 - p.r(),
                    spherical: p.m() == 0 && p.r() == 1,
                }
            } else {
                ObjectClass::Big
            }
        }
        Kind::Y => {
            let h = a.i - a.j;
            let edge = p.n() - p.r() - 1;
            if h < edge {
                ObjectClass::Exceptional
            } else if h == edge {
                ObjectClass::Spherelike {
                    d: 1 + p.r(),
                    spherical: p.n() == p.r() + 1,
                }
            } else {
                ObjectClass::Big
            }
        }
    }
}

/// Alternating sum of the graded Hom dimensions.
pub fn euler_char(p: &Params, t: ObjCoord, a: ObjCoord) -> i64 {
    graded_hom(p, t, a)
        .iter()
        .map(|(d, v)| if d.rem_euclid(2) == 0 { v as i64 } else { -(v as i64) })
        .sum()
}

/// The rectangle of targets with two-dimensional Hom from `a`; nonempty only
/// for `r = 1` and `a` in an X component.  Used by the acceptance scan to
/// pin where dimension 2 may occur.
pub fn two_dim_locus(p: &Params, a: ObjCoord, b: ObjCoord) -> bool {
    p.r() == 1 && a.kind == Kind::X && b.kind == Kind::X && hom_dim(p, a, b) == 2
}
