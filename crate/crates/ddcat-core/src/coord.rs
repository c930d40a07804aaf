//! Coordinates for indecomposable objects and the elementary functors.
//!
//! The AR quiver has `3r` components: `X^0..X^{r-1}` and `Y^0..Y^{r-1}` of
//! shape `ZA_inf` and `Z^0..Z^{r-1}` of shape `ZA_inf^inf`.  An object is a
//! pair of integers `(i, j)` in one of them; irreducible maps raise exactly
//! one coordinate.

use crate::error::{Error, Result};
use crate::params::Params;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    X,
    Y,
    Z,
}

impl Kind {
    pub fn letter(&self) -> char {
        match self {
            Kind::X => 'X',
            Kind::Y => 'Y',
            Kind::Z => 'Z',
        }
    }
}

/// An indecomposable object `K^comp_{i,j}`.
///
/// Invariants: `j >= i` on X components, `i >= j` on Y components,
/// unconstrained on Z; `comp` is always reduced mod `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ObjCoord {
    pub kind: Kind,
    pub comp: i64,
    pub i: i64,
    pub j: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeshDir {
    /// Step along the ray: `(i, j) -> (i, j +- 1)`.
    RayStep,
    /// Step along the coray: `(i, j) -> (i +- 1, j)`.
    CorayStep,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MouthSide {
    RayMouth,
    CorayMouth,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriangleKind {
    Ray,
    Coray,
}

impl ObjCoord {
    /// Checked constructor; `comp` may be any integer and is reduced mod r.
    pub fn new(p: &Params, kind: Kind, comp: i64, i: i64, j: i64) -> Result<Self> {
        let c = comp.rem_euclid(p.r());
        let obj = ObjCoord { kind, comp: c, i, j };
        obj.check_shape()?;
        Ok(obj)
    }

    fn check_shape(&self) -> Result<()> {
        match self.kind {
            Kind::X if self.j < self.i => Err(Error::InvalidCoord(format!(
                "{self}: X components need j >= i"
            ))),
            Kind::Y if self.i < self.j => Err(Error::InvalidCoord(format!(
                "{self}: Y components need i >= j"
            ))),
            _ => Ok(()),
        }
    }

    pub fn x(comp: i64, i: i64, j: i64) -> Self {
        debug_assert!(j >= i);
        ObjCoord { kind: Kind::X, comp, i, j }
    }

    pub fn y(comp: i64, i: i64, j: i64) -> Self {
        debug_assert!(i >= j);
        ObjCoord { kind: Kind::Y, comp, i, j }
    }

    pub fn z(comp: i64, i: i64, j: i64) -> Self {
        ObjCoord { kind: Kind::Z, comp, i, j }
    }

    /// Distance from the mouth of a `ZA_inf` component.
    pub fn height(&self) -> Result<i64> {
        match self.kind {
            Kind::X => Ok(self.j - self.i),
            Kind::Y => Ok(self.i - self.j),
            Kind::Z => Err(Error::NotApplicable(format!(
                "{self}: Z components have no mouth"
            ))),
        }
    }

    pub fn is_mouth(&self) -> bool {
        matches!(self.kind, Kind::X | Kind::Y) && self.i == self.j
    }

    /// AR translate: `tau (i, j) = (i-1, j-1)`, iterated `pow` times.
    pub fn tau(&self, pow: i64) -> Self {
        ObjCoord {
            i: self.i - pow,
            j: self.j - pow,
            ..*self
        }
    }

    /// Suspension `Sigma^pow`.  One step raises the component index; the wrap
    /// from component `r-1` back to `0` shifts coordinates by a full period.
    pub fn sigma(&self, p: &Params, pow: i64) -> Self {
        let r = p.r();
        // Number of boundary wraps when moving from `comp` by `pow` steps.
        let wraps = (self.comp + pow).div_euclid(r);
        let comp = (self.comp + pow).rem_euclid(r);
        let (di, dj) = match self.kind {
            Kind::X => (wraps * p.x_step(), wraps * p.x_step()),
            Kind::Y => (wraps * p.y_step(), wraps * p.y_step()),
            Kind::Z => (wraps * p.x_step(), wraps * p.y_step()),
        };
        ObjCoord {
            kind: self.kind,
            comp,
            i: self.i + di,
            j: self.j + dj,
        }
    }

    /// Serre functor `S = Sigma tau`, iterated `pow` times.
    pub fn serre(&self, p: &Params, pow: i64) -> Self {
        self.tau(pow).sigma(p, pow)
    }

    /// One irreducible-map step; errors when it would cross the mouth.
    pub fn mesh_move(&self, dir: MeshDir, sign: i64) -> Result<Self> {
        debug_assert!(sign == 1 || sign == -1);
        let cand = match dir {
            MeshDir::RayStep => ObjCoord { j: self.j + sign, ..*self },
            MeshDir::CorayStep => ObjCoord { i: self.i + sign, ..*self },
        };
        match cand.check_shape() {
            Ok(()) => Ok(cand),
            Err(_) => Err(Error::OffComponent),
        }
    }

    /// The mouth object attached to `self` on the given side.
    ///
    /// For X/Y objects this is the intersection of the ray resp. coray
    /// through the object with the mouth of its own component.  For a Z
    /// object it is the unique mouth object of the next X resp. Y component
    /// receiving a nonzero map, namely `Sigma X^k_{i-1,i-1}` resp.
    /// `Sigma Y^k_{j-1,j-1}` (forced by Serre duality from the mouth
    /// hammocks; pinned by a calibration test against `hom_dim`).
    pub fn mouth_projection(&self, p: &Params, which: MouthSide) -> Self {
        match (self.kind, which) {
            (Kind::X, MouthSide::RayMouth) => ObjCoord { j: self.i, ..*self },
            (Kind::X, MouthSide::CorayMouth) => ObjCoord { i: self.j, ..*self },
            (Kind::Y, MouthSide::RayMouth) => ObjCoord { i: self.j, ..*self },
            (Kind::Y, MouthSide::CorayMouth) => ObjCoord { j: self.i, ..*self },
            (Kind::Z, MouthSide::RayMouth) => {
                ObjCoord::x(self.comp, self.i - 1, self.i - 1).sigma(p, 1)
            }
            (Kind::Z, MouthSide::CorayMouth) => {
                ObjCoord::y(self.comp, self.j - 1, self.j - 1).sigma(p, 1)
            }
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 4 {
            return Err(Error::Parse(format!(
                "expected KIND:comp:i:j but got {s:?}"
            )));
        }
        let kind = match parts[0].trim() {
            "X" | "x" => Kind::X,
            "Y" | "y" => Kind::Y,
            "Z" | "z" => Kind::Z,
            other => return Err(Error::Parse(format!("unknown component kind {other:?}"))),
        };
        let mut v = [0i64; 3];
        for (k, part) in parts[1..].iter().enumerate() {
            v[k] = part
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad integer {part:?} in {s:?}")))?;
        }
        let obj = ObjCoord { kind, comp: v[0], i: v[1], j: v[2] };
        obj.check_shape()?;
        if obj.comp < 0 {
            return Err(Error::Parse(format!("component index must be >= 0 in {s:?}")));
        }
        Ok(obj)
    }

    /// Strict parse: additionally reject component indices >= r.
    pub fn parse_for(p: &Params, s: &str) -> Result<Self> {
        let obj = Self::parse(s)?;
        if obj.comp >= p.r() {
            return Err(Error::Parse(format!(
                "component index {} out of range for r = {}",
                obj.comp,
                p.r()
            )));
        }
        Ok(obj)
    }
}

impl std::fmt::Display for ObjCoord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}:{}:{}", self.kind.letter(), self.comp, self.i, self.j)
    }
}

/// The two families of distinguished triangles connecting the mouths with Z
/// components: for `d >= 0`,
/// ray:   `X^k_{i,i+d} -> Z^k_{i,j} -> Z^k_{i+d+1,j}`;
/// coray: `Y^k_{j+d,j} -> Z^k_{i,j} -> Z^k_{i,j+d+1}`.
pub fn special_triangle(
    p: &Params,
    kind: TriangleKind,
    comp: i64,
    i: i64,
    j: i64,
    d: i64,
) -> Result<[ObjCoord; 3]> {
    if d < 0 {
        return Err(Error::InvalidCoord(format!("need d >= 0, got {d}")));
    }
    let comp = comp.rem_euclid(p.r());
    Ok(match kind {
        TriangleKind::Ray => [
            ObjCoord::x(comp, i, i + d),
            ObjCoord::z(comp, i, j),
            ObjCoord::z(comp, i + d + 1, j),
        ],
        TriangleKind::Coray => [
            ObjCoord::y(comp, j + d, j),
            ObjCoord::z(comp, i, j),
            ObjCoord::z(comp, i, j + d + 1),
        ],
    })
}

/// A finite segment between two objects on a common ray or coray.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment {
    pub endpoints: (ObjCoord, ObjCoord),
    pub members: Vec<ObjCoord>,
}

impl Segment {
    pub fn new(a: ObjCoord, b: ObjCoord) -> Result<Self> {
        if a.kind != b.kind || a.comp != b.comp {
            return Err(Error::InvalidCoord(format!(
                "{a} and {b} lie in different components"
            )));
        }
        let members: Vec<ObjCoord> = if a.i == b.i {
            let (lo, hi) = (a.j.min(b.j), a.j.max(b.j));
            (lo..=hi).map(|j| ObjCoord { j, ..a }).collect()
        } else if a.j == b.j {
            let (lo, hi) = (a.i.min(b.i), a.i.max(b.i));
            (lo..=hi).map(|i| ObjCoord { i, ..a }).collect()
        } else {
            return Err(Error::InvalidCoord(format!(
                "{a} and {b} share no ray or coray"
            )));
        };
        for m in &members {
            m.check_shape()?;
        }
        Ok(Segment { endpoints: (a, b), members })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p231() -> Params {
        Params::new(2, 3, 1).unwrap()
    }

    fn p252() -> Params {
        Params::new(2, 5, 2).unwrap()
    }

    #[test]
    fn heights() {
        assert_eq!(ObjCoord::x(0, 2, 5).height().unwrap(), 3);
        assert_eq!(ObjCoord::y(1, 4, 4).height().unwrap(), 0);
        assert!(ObjCoord::z(0, 0, 0).height().is_err());
    }

    #[test]
    fn tau_shifts_both_coordinates() {
        assert_eq!(ObjCoord::x(0, 2, 5).tau(1), ObjCoord::x(0, 1, 4));
        let a = ObjCoord::z(1, 0, 0);
        assert_eq!(a.tau(0), a);
        assert_eq!(a.tau(-3), ObjCoord::z(1, 3, 3));
    }

    #[test]
    fn sigma_matches_the_component_rules() {
        let p = p252();
        assert_eq!(ObjCoord::x(1, 3, 7).sigma(&p, 1), ObjCoord::x(0, 7, 11));
        assert_eq!(ObjCoord::z(1, 0, 0).sigma(&p, 1), ObjCoord::z(0, 4, -3));
        assert_eq!(ObjCoord::y(1, 3, 1).sigma(&p, 1), ObjCoord::y(0, 0, -2));
        // No wrap below the boundary.
        assert_eq!(ObjCoord::x(0, 3, 7).sigma(&p, 1), ObjCoord::x(1, 3, 7));
    }

    #[test]
    fn sigma_inverts() {
        let p = p231();
        let objs = [
            ObjCoord::x(0, -2, 4),
            ObjCoord::x(1, 0, 0),
            ObjCoord::y(1, 5, -3),
            ObjCoord::z(0, 7, -9),
        ];
        for a in objs {
            for pow in -6..=6 {
                assert_eq!(a.sigma(&p, pow).sigma(&p, -pow), a);
                // Iterating single steps agrees with the closed form.
                let mut b = a;
                for _ in 0..pow.abs() {
                    b = b.sigma(&p, pow.signum());
                }
                assert_eq!(b, a.sigma(&p, pow));
            }
        }
    }

    #[test]
    fn serre_examples() {
        let p = p252();
        assert_eq!(ObjCoord::x(0, 1, 1).serre(&p, 1), ObjCoord::x(1, 0, 0));
        let p31 = p231();
        assert_eq!(ObjCoord::z(0, 0, 0).serre(&p31, 1), ObjCoord::z(1, -1, -1));
        let a = ObjCoord::z(1, 2, -5);
        assert_eq!(a.serre(&p31, 1).serre(&p31, -1), a);
    }

    #[test]
    fn mesh_moves_respect_the_mouth() {
        let a = ObjCoord::x(0, 1, 1);
        assert_eq!(
            a.mesh_move(MeshDir::RayStep, 1).unwrap(),
            ObjCoord::x(0, 1, 2)
        );
        assert_eq!(a.mesh_move(MeshDir::RayStep, -1), Err(Error::OffComponent));
        assert_eq!(
            ObjCoord::z(0, 0, 0).mesh_move(MeshDir::CorayStep, -1).unwrap(),
            ObjCoord::z(0, -1, 0)
        );
    }

    #[test]
    fn xy_mouth_projections() {
        let p = p231();
        let a = ObjCoord::x(0, 2, 5);
        assert_eq!(a.mouth_projection(&p, MouthSide::RayMouth), ObjCoord::x(0, 2, 2));
        assert_eq!(a.mouth_projection(&p, MouthSide::CorayMouth), ObjCoord::x(0, 5, 5));
        let b = ObjCoord::y(1, 4, 1);
        assert_eq!(b.mouth_projection(&p, MouthSide::CorayMouth), ObjCoord::y(1, 4, 4));
        assert_eq!(b.mouth_projection(&p, MouthSide::RayMouth), ObjCoord::y(1, 1, 1));
    }

    #[test]
    fn special_triangles() {
        let p = p231();
        assert_eq!(
            special_triangle(&p, TriangleKind::Ray, 0, 0, 0, 0).unwrap(),
            [ObjCoord::x(0, 0, 0), ObjCoord::z(0, 0, 0), ObjCoord::z(0, 1, 0)]
        );
        assert_eq!(
            special_triangle(&p, TriangleKind::Coray, 0, 0, 0, 1).unwrap(),
            [ObjCoord::y(0, 1, 0), ObjCoord::z(0, 0, 0), ObjCoord::z(0, 0, 2)]
        );
    }

    #[test]
    fn parsing_round_trips() {
        let p = p231();
        let a = ObjCoord::parse_for(&p, "X:0:2:5").unwrap();
        assert_eq!(a, ObjCoord::x(0, 2, 5));
        assert_eq!(a.to_string(), "X:0:2:5");
        assert!(ObjCoord::parse_for(&p, "X:2:0:0").is_err());
        assert!(ObjCoord::parse("X:0:5:2").is_err());
        assert!(ObjCoord::parse("Q:0:0:0").is_err());
    }

    #[test]
    fn segments_interpolate() {
        let s = Segment::new(ObjCoord::z(0, 0, -1), ObjCoord::z(0, 3, -1)).unwrap();
        assert_eq!(s.members.len(), 4);
        assert!(Segment::new(ObjCoord::z(0, 0, 0), ObjCoord::z(0, 1, 1)).is_err());
    }
}
