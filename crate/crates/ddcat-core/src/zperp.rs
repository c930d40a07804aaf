//! The perpendicular category of a Z-component object.
//!
//! For exceptional `Z` the right orthogonal `Z^perp` is equivalent to the
//! derived category of the linear quiver `A_t`, `t = n + m - 1`.  This
//! module realizes that equivalence as an explicit chart: a bijection
//! between coordinates `(g, h)` of the `ZA_t` translation quiver (with
//! `1 <= h <= t`) and the ambient objects orthogonal to `Z`.
//!
//! The distinguished copy of the module category (the heart containing the
//! orthogonal Z-objects that map to `Z`) occupies the triangle
//! `{g >= 0, g + h <= t}`, with the projective `P(i)` at `(0, i)`.  The
//! chart is seeded there by closed forms and extended everywhere by the
//! ambient suspension; construction fails loudly if the closed forms do not
//! tile the triangle or leak Hom spaces to `Z`.

use std::collections::BTreeMap;

use crate::coord::ObjCoord;
use crate::error::{Error, Result};
use crate::hammock::graded_hom;
use crate::params::Params;

/// A point of the `ZA_t` translation quiver, `1 <= h <= t`.
pub type ChartPt = (i64, i64);

#[derive(Debug, Clone)]
pub struct Chart {
    p: Params,
    t: i64,
    base: ObjCoord,
    by_slot: BTreeMap<ChartPt, ObjCoord>,
    by_obj: BTreeMap<ObjCoord, ChartPt>,
}

/// Suspension on chart coordinates.
pub fn chart_sigma(t: i64, (g, h): ChartPt, pow: i64) -> ChartPt {
    let (mut g, mut h) = (g, h);
    for _ in 0..pow.abs() {
        if pow > 0 {
            let ng = g + h;
            h = t + 1 - h;
            g = ng;
        } else {
            let nh = t + 1 - h;
            g = g + h - t - 1;
            h = nh;
        }
    }
    (g, h)
}

/// Serre functor on chart coordinates: suspension of the AR translate.
pub fn chart_serre(t: i64, (g, h): ChartPt) -> ChartPt {
    chart_sigma(t, (g - 1, h), 1)
}

fn rect(t: i64, a: ChartPt, b: ChartPt) -> bool {
    a.0 <= b.0 && b.0 <= a.0 + a.1 - 1 && a.0 + a.1 <= b.0 + b.1 && b.0 + b.1 <= a.0 + t
}

/// dim Hom in degree zero inside the derived category of `A_t`, from the
/// chart combinatorics alone (no ambient algebra involved).
pub fn chart_hom0(t: i64, a: ChartPt, b: ChartPt) -> bool {
    rect(t, a, b) || rect(t, b, chart_serre(t, a))
}

pub fn chart_hom(t: i64, a: ChartPt, b: ChartPt, degree: i64) -> bool {
    chart_hom0(t, a, chart_sigma(t, b, degree))
}

/// Human-readable name of a chart point: heart objects are the interval
/// modules `P(i)/S(i)/I(i)/M[a,b]` of the linear `A_t` quiver; everything
/// else is a suspension of one.
pub fn chart_name(t: i64, pt: ChartPt) -> String {
    // Maintain pt = Sigma^c(cur) while walking cur into the fundamental
    // triangle.
    let mut c = 0i64;
    let mut cur = pt;
    while !(cur.0 >= 0 && cur.0 + cur.1 <= t) {
        if !(-(2 * t + 4 + pt.0.abs())..=(2 * t + 4 + pt.0.abs())).contains(&c) {
            break;
        }
        if cur.0 < 0 {
            cur = chart_sigma(t, cur, 1);
            c -= 1;
        } else {
            cur = chart_sigma(t, cur, -1);
            c += 1;
        }
    }
    let (a, b) = (cur.0 + 1, cur.0 + cur.1);
    let base = if a == 1 {
        format!("P{b}")
    } else if a == b {
        format!("S{a}")
    } else if b == t {
        format!("I{a}")
    } else {
        format!("M[{a},{b}]")
    };
    match c {
        0 => base,
        1 => format!("s({base})"),
        -1 => format!("s-1({base})"),
        k if k > 0 => format!("s{k}({base})"),
        k => format!("s{k}({base})"),
    }
}

impl Chart {
    /// Builds the chart for `Z = Z^0_{0,0}`.
    pub fn new(p: &Params) -> Result<Self> {
        let t = p.rank() - 1;
        let base = ObjCoord::z(0, 0, 0);
        let mut by_slot: BTreeMap<ChartPt, ObjCoord> = BTreeMap::new();
        let mut push = |slot: ChartPt, obj: ObjCoord| -> Result<()> {
            if let Some(old) = by_slot.insert(slot, obj) {
                return Err(Error::Calibration(format!(
                    "chart slot {slot:?} claimed by both {old} and {obj}"
                )));
            }
            Ok(())
        };

        // X family: the triangle of orthogonal objects at the bottom of X^0.
        for u in 0..=(p.x_step() - 2) {
            for v in u..=(p.x_step() - 2) {
                push((u, v - u + 1), ObjCoord::x(0, u, v))?;
            }
        }
        // Z family: the orthogonal staircase through Z^0.
        for b in -(p.n() - p.r())..=-1 {
            for u in 0.. {
                let h = t + b + 1 - u;
                if h < 1 {
                    break;
                }
                let obj = ObjCoord::z(0, u, b);
                if graded_hom(p, base, obj).is_zero() {
                    push((u, h), obj)?;
                }
            }
        }
        // Y family: a triangle one suspension up.
        for b in -(p.n() - p.r())..=-2 {
            for a in b..=-2 {
                push((b + t + 1, a - b + 1), ObjCoord::y(0, a, b).sigma(p, 1))?;
            }
        }

        // The three families must tile the fundamental triangle exactly and
        // must all be orthogonal to the base object.
        let mut expected = 0i64;
        for g in 0..t {
            for h in 1..=(t - g) {
                expected += 1;
                if !by_slot.contains_key(&(g, h)) {
                    return Err(Error::Calibration(format!(
                        "chart slot ({g},{h}) not covered for {p}"
                    )));
                }
            }
        }
        if by_slot.len() as i64 != expected {
            return Err(Error::Calibration(format!(
                "chart has {} slots, expected {expected} for {p}",
                by_slot.len()
            )));
        }
        for (&slot, &obj) in &by_slot {
            if !graded_hom(p, base, obj).is_zero() {
                return Err(Error::Calibration(format!(
                    "heart object {obj} at {slot:?} is not orthogonal to {base}"
                )));
            }
        }
        let by_obj: BTreeMap<ObjCoord, ChartPt> =
            by_slot.iter().map(|(&s, &o)| (o, s)).collect();
        let chart = Chart { p: *p, t, base, by_slot, by_obj };
        chart.check_mesh()?;
        Ok(chart)
    }

    /// Ambient Hom along every mesh arrow inside the heart must be nonzero;
    /// this pins the axis conventions of the closed forms.
    fn check_mesh(&self) -> Result<()> {
        for (&(g, h), &obj) in &self.by_slot {
            for next in [(g, h + 1), (g + 1, h - 1)] {
                if let Some(&tgt) = self.by_slot.get(&next) {
                    if crate::hammock::hom_dim(&self.p, obj, tgt) != 1 {
                        return Err(Error::Calibration(format!(
                            "mesh arrow ({g},{h}) -> {next:?} has no ambient map ({obj} -> {tgt})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn t(&self) -> i64 {
        self.t
    }

    pub fn base(&self) -> ObjCoord {
        self.base
    }

    /// Ambient object at a chart point (total on all of `ZA_t`).
    pub fn to_ambient(&self, pt: ChartPt) -> ObjCoord {
        let bound = pt.0.abs() + 2 * self.t + 4;
        for c in -bound..=bound {
            let red = chart_sigma(self.t, pt, -c);
            if let Some(&obj) = self.by_slot.get(&red) {
                return obj.sigma(&self.p, c);
            }
        }
        unreachable!("chart point {pt:?} has no suspension into the heart")
    }

    /// Chart point of an ambient object, when it is orthogonal to the base.
    pub fn to_chart(&self, obj: ObjCoord) -> Option<ChartPt> {
        let r = self.p.r();
        let bound = r * (obj.i.abs() + obj.j.abs() + self.p.rank() + 6);
        for c in -bound..=bound {
            if let Some(&slot) = self.by_obj.get(&obj.sigma(&self.p, -c)) {
                return Some(chart_sigma(self.t, slot, c));
            }
        }
        None
    }

    /// The projective `P(i)` of the distinguished heart, `1 <= i <= t`.
    pub fn heart_projective(&self, i: i64) -> ObjCoord {
        self.by_slot[&(0, i)]
    }
}
