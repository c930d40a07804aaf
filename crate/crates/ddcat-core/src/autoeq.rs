//! The object-level autoequivalence group.
//!
//! It is abelian, generated by the suspension and the two twist functors
//! T_X, T_Y coming from the exceptional cycles at the X- and Y-mouths, with
//! the single relation `Sigma^r = T_X^{m+r} T_Y^{r-n}` on objects.  An
//! element is stored as the exponent triple of `(Sigma, T_X, T_Y)` in a
//! canonical coset representative.

use crate::coord::{Kind, ObjCoord};
use crate::error::{Error, Result};
use crate::params::Params;
use crate::snf;

/// Exponents `(a, b, c)` of `Sigma^a T_X^b T_Y^c`, normalized so that
/// `0 <= a < r` with the suspension surplus folded into the twists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AutoEq {
    a: i64,
    b: i64,
    c: i64,
}

impl AutoEq {
    pub fn new(p: &Params, a: i64, b: i64, c: i64) -> Self {
        // (r, -(m+r), n-r) acts as the identity on objects.
        let q = a.div_euclid(p.r());
        AutoEq {
            a: a - q * p.r(),
            b: b + q * p.x_step(),
            c: c + q * p.y_step(),
        }
    }

    pub fn identity() -> Self {
        AutoEq { a: 0, b: 0, c: 0 }
    }

    pub fn sigma(p: &Params, pow: i64) -> Self {
        AutoEq::new(p, pow, 0, 0)
    }

    pub fn exponents(&self) -> (i64, i64, i64) {
        (self.a, self.b, self.c)
    }

    /// Apply to an object: suspension, then the twists.  T_X is the inverse
    /// AR translate on X, trivial on Y, and the coray step on Z; dually for
    /// T_Y.  The order is irrelevant since the group is abelian.
    pub fn apply(&self, p: &Params, obj: ObjCoord) -> ObjCoord {
        let s = obj.sigma(p, self.a);
        match s.kind {
            Kind::X => ObjCoord { i: s.i + self.b, j: s.j + self.b, ..s },
            Kind::Y => ObjCoord { i: s.i + self.c, j: s.j + self.c, ..s },
            Kind::Z => ObjCoord { i: s.i + self.b, j: s.j + self.c, ..s },
        }
    }

    pub fn compose(&self, p: &Params, other: &AutoEq) -> Self {
        AutoEq::new(p, self.a + other.a, self.b + other.b, self.c + other.c)
    }

    pub fn invert(&self, p: &Params) -> Self {
        AutoEq::new(p, -self.a, -self.b, -self.c)
    }

    /// Equality as object-level autoequivalences, i.e. modulo the relation.
    pub fn equal(&self, p: &Params, other: &AutoEq) -> bool {
        AutoEq::new(p, self.a, self.b, self.c) == AutoEq::new(p, other.a, other.b, other.c)
    }

    /// Textual form `S^a TX^b TY^c`.
    pub fn display(&self) -> String {
        format!("S^{} TX^{} TY^{}", self.a, self.b, self.c)
    }
}

/// The abstract group: free rank and torsion order of Z^3 modulo the
/// relation vector, computed via Smith normal form.
pub fn group_structure(p: &Params) -> (i64, i64) {
    let rel = vec![vec![p.r(), -p.x_step(), p.n() - p.r()]];
    let factors = snf::invariant_factors(&rel);
    let torsion = factors[0];
    debug_assert_eq!(torsion, p.ell());
    (2, torsion)
}

/// The unique (in normal form) autoequivalence carrying one Z-component
/// object to another.
pub fn transitive_witness(p: &Params, z1: ObjCoord, z2: ObjCoord) -> Result<AutoEq> {
    if z1.kind != Kind::Z || z2.kind != Kind::Z {
        return Err(Error::NotZComponent(format!("{z1} -> {z2}")));
    }
    let a = z2.comp - z1.comp;
    let s = z1.sigma(p, a);
    let phi = AutoEq::new(p, a, z2.i - s.i, z2.j - s.j);
    debug_assert_eq!(phi.apply(p, z1), z2);
    Ok(phi)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p231() -> Params {
        Params::new(2, 3, 1).unwrap()
    }

    #[test]
    fn twist_actions() {
        let p = p231();
        let tx = AutoEq::new(&p, 0, 1, 0);
        let ty = AutoEq::new(&p, 0, 0, 1);
        assert_eq!(tx.apply(&p, ObjCoord::z(0, 0, 0)), ObjCoord::z(0, 1, 0));
        assert_eq!(tx.apply(&p, ObjCoord::y(0, 3, 1)), ObjCoord::y(0, 3, 1));
        let txty = tx.compose(&p, &ty);
        assert_eq!(txty.apply(&p, ObjCoord::x(0, 2, 4)), ObjCoord::x(0, 3, 5));
        assert_eq!(txty.apply(&p, ObjCoord::x(0, 2, 4)), ObjCoord::x(0, 2, 4).tau(-1));
    }

    #[test]
    fn composition_and_inverse() {
        let p = p231();
        let one = AutoEq::new(&p, 1, 0, 0).compose(&p, &AutoEq::new(&p, -1, 0, 0));
        assert!(one.equal(&p, &AutoEq::identity()));
        assert_eq!(
            AutoEq::new(&p, 0, 2, 5).invert(&p),
            AutoEq::new(&p, 0, -2, -5)
        );
    }

    #[test]
    fn relation_is_recognized() {
        let p = p231();
        assert!(AutoEq::new(&p, 2, 0, 0).equal(&p, &AutoEq::new(&p, 0, 3, -1)));
        assert!(!AutoEq::new(&p, 2, 0, 0).equal(&p, &AutoEq::new(&p, 0, 3, 1)));
    }

    #[test]
    fn relation_holds_on_objects() {
        for p in [p231(), Params::new(1, 2, 1).unwrap(), Params::new(3, 5, 2).unwrap()] {
            let lhs = AutoEq::sigma(&p, p.r());
            let rhs = AutoEq::new(&p, 0, p.x_step(), p.y_step());
            for comp in 0..p.r() {
                for i in -3..=3 {
                    for j in -3..=3 {
                        let mut objs = vec![ObjCoord::z(comp, i, j)];
                        if j >= i {
                            objs.push(ObjCoord::x(comp, i, j));
                        }
                        if i >= j {
                            objs.push(ObjCoord::y(comp, i, j));
                        }
                        for o in objs {
                            assert_eq!(lhs.apply(&p, o), rhs.apply(&p, o), "{p} {o}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn group_structures() {
        assert_eq!(group_structure(&p231()), (2, 1));
        assert_eq!(group_structure(&Params::new(2, 4, 2).unwrap()), (2, 2));
        assert_eq!(group_structure(&Params::new(1, 2, 0).unwrap()), (2, 1));
    }

    #[test]
    fn witnesses() {
        let p = p231();
        let w = transitive_witness(&p, ObjCoord::z(0, 0, 0), ObjCoord::z(0, 2, 5)).unwrap();
        assert_eq!(w.exponents(), (0, 2, 5));
        let w2 = transitive_witness(&p, ObjCoord::z(0, 0, 0), ObjCoord::z(1, 3, -2)).unwrap();
        assert_eq!(w2.exponents(), (1, 3, -2));
        assert!(transitive_witness(&p, ObjCoord::x(0, 0, 0), ObjCoord::z(0, 0, 0)).is_err());
    }

    #[test]
    fn simple_transitivity_within_a_component() {
        let p = p231();
        let z1 = ObjCoord::z(0, 0, 0);
        for i in -2..=2 {
            for j in -2..=2 {
                let z2 = ObjCoord::z(0, i, j);
                let mut count = 0;
                for b in -6..=6 {
                    for c in -6..=6 {
                        if AutoEq::new(&p, 0, b, c).apply(&p, z1) == z2 {
                            count += 1;
                        }
                    }
                }
                assert_eq!(count, 1, "exactly one twist witness for {z2}");
            }
        }
    }
}
