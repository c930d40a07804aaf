//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line.  Every tolerance is pinned here; all checks are exact.

use std::collections::BTreeSet;
use std::time::Instant;

use ddcat_core::atq;
use ddcat_core::autoeq::{group_structure, AutoEq};
use ddcat_core::hammock::{endo_complex, euler_char, graded_hom, hom_dim};
use ddcat_core::params::gcd;
use ddcat_core::silting::{
    enumerate_silting, is_partial_silting, tilting_classes, tilting_with,
    window_objects, SiltingObject,
};
use ddcat_core::zperp::{chart_sigma, ChartPt};
use ddcat_core::{Kind, ObjCoord, Params, TriangleKind};
use ddcat_oracle::dict::{build_dictionary, cross_check, Rng};
use ddcat_oracle::fp::DEFAULT_PRIME;
use ddcat_oracle::hooks;
use ddcat_oracle::quiver::RepQuiver;
use ddcat_oracle::word::{Letter, StringWord};

fn params_panel() -> Vec<Params> {
    [(1, 2, 0), (1, 2, 1), (2, 3, 1), (2, 5, 2), (3, 4, 2)]
        .into_iter()
        .map(|(r, n, m)| Params::new(r, n, m).unwrap())
        .collect()
}

fn pass(n: u32, what: &str) {
    println!("criterion {n:02} PASS: {what}");
}

/// Independent description of the two-dimensional locus for r = 1: the
/// rectangle cut out by the ray region of the source and the coray region
/// of its Serre image.
fn in_two_dim_rect(p: &Params, a: ObjCoord, b: ObjCoord) -> bool {
    if p.r() != 1 || a.kind != Kind::X || b.kind != Kind::X {
        return false;
    }
    let m = p.m();
    let (i, j) = (a.i, a.j);
    i <= b.i && b.i <= j.min(i + m) && j.max(i + m) <= b.j && b.j <= j + m
}

#[test]
fn criterion_01_hom_dimension_bound() {
    let start = Instant::now();
    for p in params_panel() {
        let objs = window_objects(&p, 8);
        for &a in &objs {
            for &b in &objs {
                let g = graded_hom(&p, a, b);
                for (d, v) in g.iter() {
                    if p.r() >= 2 {
                        assert!(v <= 1, "{p} hom({a}, S^{d} {b}) = {v}");
                    } else {
                        assert!(v <= 2, "{p} hom({a}, S^{d} {b}) = {v}");
                        if v == 2 {
                            let bb = b.sigma(&p, d);
                            assert!(
                                in_two_dim_rect(&p, a, bb),
                                "{p}: dimension 2 outside the rectangle at hom({a}, {bb})"
                            );
                        }
                    }
                }
            }
        }
        // Conversely the rectangle really carries dimension 2.
        if p.r() == 1 {
            for &a in objs.iter().filter(|o| o.kind == Kind::X) {
                for &b in objs.iter().filter(|o| o.kind == Kind::X) {
                    if in_two_dim_rect(&p, a, b) {
                        assert_eq!(hom_dim(&p, a, b), 2, "{p} rect({a}, {b})");
                    }
                }
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    assert!(secs < 60.0, "runtime target exceeded: {secs:.1}s");
    pass(1, &format!("dimension bounds exact on the full grid ({secs:.1}s)"));
}

#[test]
fn criterion_02_serre_duality() {
    for p in params_panel() {
        let objs = window_objects(&p, 8);
        for &a in &objs {
            let sa = a.serre(&p, 1);
            for &b in &objs {
                assert_eq!(
                    hom_dim(&p, a, b),
                    hom_dim(&p, b, sa),
                    "{p}: Serre duality at ({a}, {b})"
                );
            }
        }
    }
    pass(2, "hom(A,B) = hom(B, SA) exhaustively");
}

#[test]
fn criterion_03_functor_relations() {
    for p in params_panel() {
        let objs = window_objects(&p, 6);
        let tx_ty = AutoEq::new(&p, 0, 1, 1);
        let sig_r = AutoEq::sigma(&p, p.r());
        let twist = AutoEq::new(&p, 0, p.x_step(), p.y_step());
        for &a in &objs {
            match a.kind {
                Kind::X => assert_eq!(a.sigma(&p, p.r()), a.tau(-(p.m() + p.r()))),
                Kind::Y => assert_eq!(a.sigma(&p, p.r()), a.tau(p.n() - p.r())),
                Kind::Z => {}
            }
            assert_eq!(tx_ty.apply(&p, a), a.tau(-1), "{p} {a}");
            assert_eq!(sig_r.apply(&p, a), twist.apply(&p, a), "{p} {a}");
        }
    }
    pass(3, "suspension periods and twist factorizations hold on objects");
}

#[test]
fn criterion_04_graded_endomorphisms() {
    for p in params_panel() {
        for comp in 0..p.r() {
            for h in 0..=12 {
                let x = ObjCoord::x(comp, 0, h);
                assert_eq!(endo_complex(&p, x), graded_hom(&p, x, x), "{p} X h={h}");
                let y = ObjCoord::y(comp, h, 0);
                assert_eq!(endo_complex(&p, y), graded_hom(&p, y, y), "{p} Y h={h}");
            }
        }
    }
    pass(4, "closed-form endomorphism complexes match the graded scan");
}

#[test]
fn criterion_05_group_structure() {
    let mut rng = Rng::new(7);
    for _ in 0..20 {
        let r = 1 + (rng.below(6) as i64);
        let n = r + 1 + (rng.below(7) as i64);
        let m = rng.below(7) as i64;
        let p = Params::new(r, n, m).unwrap();
        let (free, torsion) = group_structure(&p);
        assert_eq!(free, 2, "{p}");
        assert_eq!(torsion, gcd(r, gcd(n, m)), "{p}");
    }
    pass(5, "Smith-form torsion equals gcd(r,n,m) on 20 random triples");
}

const T3: i64 = 3;

fn pt(name: &str) -> ChartPt {
    match name {
        "P1" => (0, 1),
        "P2" => (0, 2),
        "P3" => (0, 3),
        "S2" => (1, 1),
        "I2" => (1, 2),
        "S3" => (2, 1),
        "sP1" => chart_sigma(T3, (0, 1), 1),
        "sP2" => chart_sigma(T3, (0, 2), 1),
        "sP3" => chart_sigma(T3, (0, 3), 1),
        "sS2" => chart_sigma(T3, (1, 1), 1),
        "s2P1" => chart_sigma(T3, chart_sigma(T3, (0, 1), 1), 1),
        _ => panic!("unknown name {name}"),
    }
}

type Pred = fn(i64, i64, i64) -> bool;

fn reference_families() -> Vec<([&'static str; 3], Pred)> {
    vec![
        (["P1", "P2", "P3"], |i, j, k| j >= i && k >= j.max(-1)),
        (["P1", "P3", "S3"], |i, j, k| k >= j && j >= i.max(-1)),
        (["P2", "S2", "P3"], |i, j, k| j >= i && k >= i.max(-1)),
        (["S2", "P3", "I2"], |i, j, k| j >= -1 && k >= i.max(j).max(-1)),
        (["P3", "I2", "S3"], |i, j, k| k >= j && j >= i && i >= -1),
        (["P3", "S3", "sS2"], |i, j, k| k >= j && j >= i && i >= -1),
        (["S2", "I2", "sP1"], |i, j, k| k >= j && j >= i.max(-1)),
        (["I2", "S3", "sP1"], |i, j, k| k >= i && j >= i && i >= -1),
        (["S2", "sP1", "sP3"], |i, j, k| j >= i && k >= j.max(-2)),
        (["sP1", "S3", "sP2"], |i, j, k| j >= -1 && k >= i.max(j)),
        (["S3", "sP2", "sS2"], |i, j, k| k >= j && j >= i && i >= -1),
        (["S3", "sS2", "s2P1"], |i, j, k| k >= j && j >= i && i >= -1),
    ]
}

fn normalize(points: &[(ChartPt, i64)]) -> BTreeSet<ChartPt> {
    points.iter().map(|&(p, c)| chart_sigma(T3, p, c)).collect()
}

#[test]
fn criterion_06_table_reproduction() {
    let p = Params::new(2, 3, 1).unwrap();
    let z = ObjCoord::z(0, 0, 0);
    let (lo, hi) = (-2i64, 3i64);
    let (families, instances) = enumerate_silting(&p, z, lo, hi).unwrap();
    assert_eq!(families.len(), 12, "family count");
    let mut computed: Vec<BTreeSet<BTreeSet<ChartPt>>> = vec![BTreeSet::new(); families.len()];
    for inst in &instances {
        let fam = &families[inst.family];
        let pts: Vec<(ChartPt, i64)> = fam
            .base
            .iter()
            .copied()
            .zip(inst.shifts.iter().copied())
            .collect();
        computed[inst.family].insert(normalize(&pts));
    }
    for (names, pred) in reference_families() {
        let base: BTreeSet<ChartPt> = names.iter().map(|n| pt(n)).collect();
        let fam_idx = families
            .iter()
            .position(|f| f.base.iter().copied().collect::<BTreeSet<_>>() == base)
            .unwrap_or_else(|| panic!("no family with base {names:?}"));
        let mut expect: BTreeSet<BTreeSet<ChartPt>> = BTreeSet::new();
        for i in lo..=hi {
            for j in lo..=hi {
                for k in lo..=hi {
                    if pred(i, j, k) {
                        expect.insert(normalize(&[
                            (pt(names[0]), i),
                            (pt(names[1]), j),
                            (pt(names[2]), k),
                        ]));
                    }
                }
            }
        }
        assert_eq!(computed[fam_idx], expect, "constraints for base {names:?}");
    }
    for inst in &instances {
        assert_eq!(inst.object.summands.len(), 4);
        assert!(is_partial_silting(&p, &inst.object.summands));
    }
    // Byte-exact golden reproduction.
    assert!(
        ddcat_cli::cmd_table231().is_ok(),
        "golden file comparison failed"
    );
    pass(6, "twelve families with the published constraint sets; golden match");
}

#[test]
fn criterion_07_six_tilting_objects() {
    let p = Params::new(2, 3, 1).unwrap();
    let z = ObjCoord::z(0, 0, 0);
    let got: BTreeSet<SiltingObject> = tilting_with(&p, z, 4).unwrap().into_iter().collect();
    let want: BTreeSet<SiltingObject> = [
        vec![ObjCoord::z(0, -1, 0), ObjCoord::x(1, -2, -2), ObjCoord::x(0, 0, 0)],
        vec![ObjCoord::x(1, -2, -2), ObjCoord::x(1, -2, -1), ObjCoord::x(0, 0, 0)],
        vec![ObjCoord::x(1, -1, -1), ObjCoord::x(1, -2, -1), ObjCoord::x(0, 0, 0)],
        vec![ObjCoord::x(1, -1, -1), ObjCoord::x(0, 0, 0), ObjCoord::x(0, 0, 1)],
        vec![ObjCoord::x(1, -1, -1), ObjCoord::x(0, 0, 1), ObjCoord::x(0, 1, 1)],
        vec![ObjCoord::x(1, -1, -1), ObjCoord::x(0, 1, 1), ObjCoord::z(0, 1, 0)],
    ]
    .into_iter()
    .map(|mut rest| {
        rest.push(z);
        SiltingObject::new(rest)
    })
    .collect();
    assert_eq!(got, want, "six tilting objects");
    // The documented lifted silting instance is emitted.
    let (_, instances) = enumerate_silting(&p, z, -2, 3).unwrap();
    let m = SiltingObject::new(vec![
        z,
        ObjCoord::x(0, -2, -2),
        ObjCoord::x(0, 0, 0),
        ObjCoord::z(0, 6, -1),
    ]);
    assert!(instances.iter().any(|inst| inst.object == m));
    pass(7, "six tilting objects and the documented lifted instance");
}

#[test]
fn criterion_08_dynkin_a3_machinery() {
    let quivers = atq::at_quivers(3);
    assert_eq!(quivers.len(), 6, "gentle tree quivers on three vertices");
    let images: BTreeSet<Vec<(i64, i64)>> = quivers
        .iter()
        .map(|q| {
            let mut v = atq::phi(q);
            v.sort();
            v
        })
        .collect();
    let expected: BTreeSet<Vec<(i64, i64)>> = [
        vec![(0, 1), (0, 2), (0, 3)],
        vec![(0, 1), (0, 3), (2, 1)],
        vec![(0, 3), (1, 1), (1, 2)],
        vec![(0, 2), (0, 3), (1, 1)],
        vec![(0, 3), (1, 2), (2, 1)],
        vec![(0, 3), (2, 1), (2, 3)],
    ]
    .into_iter()
    .collect();
    assert_eq!(images, expected, "coordinate maps of the six quivers");
    assert_eq!(tilting_classes(3).len(), 12, "tilting classes up to suspension");
    pass(8, "six quivers, published coordinates, twelve tilting classes");
}

#[test]
fn criterion_09_oracle_equivalence() {
    let start = Instant::now();
    let p = Params::new(2, 3, 1).unwrap();
    let q = RepQuiver::new(&p, 4).unwrap();
    let dict = build_dictionary(&p, &q, 3, DEFAULT_PRIME).unwrap();
    let report = cross_check(&p, &dict, 200, 42, false).unwrap();
    assert_eq!(report.pairs, 200);
    assert_eq!(report.hom_mismatches, 0, "engine vs stable Hom");
    assert_eq!(report.count_mismatches, 0, "admissible pairs vs linear algebra");
    let secs = start.elapsed().as_secs_f64();
    assert!(secs < 120.0, "runtime target exceeded: {secs:.1}s");
    pass(
        9,
        &format!(
            "200/200 dictionary pairs agree over {} mapped coordinates ({secs:.1}s)",
            report.mapped
        ),
    );
}

#[test]
fn criterion_10_euler_additivity() {
    let panel = params_panel();
    let mut rng = Rng::new(1009);
    for _ in 0..500 {
        let p = panel[rng.below(panel.len())];
        let kind = if rng.below(2) == 0 { TriangleKind::Ray } else { TriangleKind::Coray };
        let comp = rng.below(p.r() as usize) as i64;
        let i = rng.below(9) as i64 - 4;
        let j = rng.below(9) as i64 - 4;
        let d = rng.below(4) as i64;
        let [l, mid, r] = ddcat_core::coord::special_triangle(&p, kind, comp, i, j, d).unwrap();
        for _ in 0..20 {
            let tc = rng.below(p.r() as usize) as i64;
            let ti = rng.below(9) as i64 - 4;
            let tj = rng.below(9) as i64 - 4;
            let t = ObjCoord::z(tc, ti, tj);
            assert_eq!(
                euler_char(&p, t, mid),
                euler_char(&p, t, l) + euler_char(&p, t, r),
                "{p}: triangle at {kind:?} {comp} {i} {j} {d}, test {t}"
            );
        }
    }
    pass(10, "Euler characteristics add over 500 sampled triangles");
}

fn find_letter(q: &RepQuiver, name: &str, inv: bool) -> Letter {
    let a = q
        .arrows
        .iter()
        .position(|x| x.name == name)
        .unwrap_or_else(|| panic!("no arrow {name}"));
    Letter { arrow: a, inverse: inv }
}

fn chain_word(q: &RepQuiver, spec: &[(&str, bool)]) -> StringWord {
    let w = StringWord::Word(spec.iter().map(|&(n, i)| find_letter(q, n, i)).collect());
    assert!(w.is_string(q));
    w
}

#[test]
fn criterion_11_string_mesh_identities() {
    let p = Params::new(2, 3, 1).unwrap();
    let q = RepQuiver::new(&p, 4).unwrap();
    // Two-sided translates agree up to inversion on 200 random strings.
    let mut count = 0;
    for w in StringWord::enumerate(&q, 5) {
        if q.vertex(w.start(&q)).level.abs() >= 3 || q.vertex(w.end(&q)).level.abs() >= 3 {
            continue;
        }
        let a = hooks::l1(&q, &w).and_then(|x| match x {
            Some(x) => hooks::r1(&q, &x),
            None => Ok(None),
        });
        let b = hooks::r1(&q, &w).and_then(|x| match x {
            Some(x) => hooks::l1(&q, &x),
            None => Ok(None),
        });
        if let (Ok(Some(a)), Ok(Some(b))) = (a, b) {
            assert_eq!(a.class(), b.class(), "translate at {}", w.display(&q));
            count += 1;
        }
        if count >= 200 {
            break;
        }
    }
    assert!(count >= 200, "only {count} strings exercised");
    // The published ordered chain, in ascending order.
    let yarrow = find_letter(&q, "y@-1", false).arrow;
    let chain = vec![
        StringWord::trivial(q.vid(0, -1).unwrap(), q.eps_fn[yarrow]),
        chain_word(&q, &[("c2@-1", true), ("y@-1", false)]),
        chain_word(&q, &[("a-1@-1", false), ("c2@-1", true), ("y@-1", false)]),
        chain_word(
            &q,
            &[
                ("b1@-2", false),
                ("y@-2", false),
                ("a-1@-1", false),
                ("c2@-1", true),
                ("y@-1", false),
            ],
        ),
        chain_word(&q, &[("y@-1", false)]),
        chain_word(&q, &[("b1@-1", false), ("y@-1", false)]),
        chain_word(
            &q,
            &[("x2@-1", true), ("b0@-1", false), ("b1@-1", false), ("y@-1", false)],
        ),
        chain_word(
            &q,
            &[
                ("a-1@0", false),
                ("b0@0", false),
                ("b1@0", false),
                ("x2@-1", true),
                ("b0@-1", false),
                ("b1@-1", false),
                ("y@-1", false),
            ],
        ),
        chain_word(&q, &[("b0@-1", false), ("b1@-1", false), ("y@-1", false)]),
    ];
    for (i, v) in chain.iter().enumerate() {
        for (j, w) in chain.iter().enumerate() {
            assert_eq!(
                ddcat_oracle::geiss::geiss_cmp(&q, v, w).unwrap(),
                i.cmp(&j),
                "order of chain members {i}, {j}"
            );
        }
    }
    // The published AR triangle at the two-letter chain member.
    let w = chain[5].clone();
    let w1 = hooks::l1(&q, &w).unwrap().unwrap();
    assert_eq!(
        w1,
        chain_word(
            &q,
            &[("x2@-1", true), ("b0@-1", false), ("b1@-1", false), ("y@-1", false)]
        )
    );
    let one_w = hooks::r1(&q, &w).unwrap().unwrap();
    assert_eq!(one_w.class(), chain_word(&q, &[("b1@-1", false)]).class());
    let tau_inv = hooks::ar_translate_inv(&q, &w).unwrap().unwrap();
    assert_eq!(
        tau_inv.class(),
        chain_word(&q, &[("x2@-1", true), ("b0@-1", false), ("b1@-1", false)]).class()
    );
    pass(11, "translate identity on 200 strings; ordered chain and AR triangle verbatim");
}
