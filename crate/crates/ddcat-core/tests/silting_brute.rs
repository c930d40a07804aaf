//! Brute-force enumeration of silting objects, compared against the
//! family machinery.  In Dynkin type A a set of t indecomposables with no
//! positive-degree Homs (pairwise and self) is exactly a silting object, so
//! exhaustive subset search is an independent oracle for the classification.

use std::collections::BTreeSet;

use ddcat_core::hammock::graded_hom;
use ddcat_core::silting::{enumerate_silting, order_leq, window_objects};
use ddcat_core::zperp::{chart_hom, chart_sigma, ChartPt};
use ddcat_core::{Kind, ObjCoord, Params};

const T: i64 = 3;

fn chart_compatible(a: ChartPt, b: ChartPt) -> bool {
    (1..=T + 2).all(|d| !chart_hom(T, a, b, d) && !chart_hom(T, b, a, d))
}

#[test]
fn chart_families_match_subset_search() {
    // Window of chart points.
    let window: Vec<ChartPt> = (0..=5)
        .flat_map(|g| (1..=T).map(move |h| (g, h)))
        .collect();
    // Brute force: all 3-subsets with no positive-degree Homs.
    let mut brute: BTreeSet<BTreeSet<ChartPt>> = BTreeSet::new();
    for (i, &a) in window.iter().enumerate() {
        if !chart_compatible(a, a) {
            continue;
        }
        for (j, &b) in window.iter().enumerate().skip(i + 1) {
            if !(chart_compatible(b, b) && chart_compatible(a, b)) {
                continue;
            }
            for &c in window.iter().skip(j + 1) {
                if chart_compatible(c, c) && chart_compatible(a, c) && chart_compatible(b, c) {
                    brute.insert([a, b, c].into_iter().collect());
                }
            }
        }
    }
    // Family side: every silting object is a shifted tilting base.
    let fams = ddcat_core::silting::silting_families_at(T as usize);
    let mut from_families: BTreeSet<BTreeSet<ChartPt>> = BTreeSet::new();
    let mut presentations = 0usize;
    let (lo, hi) = (-8i64, 8i64);
    for fam in &fams {
        let k = fam.summands.len();
        let mut shifts = vec![lo; k];
        'outer: loop {
            if fam
                .hom_pairs
                .iter()
                .all(|&(s, t)| shifts[s] <= shifts[t])
            {
                let set: BTreeSet<ChartPt> = fam
                    .summands
                    .iter()
                    .zip(&shifts)
                    .map(|(&pt, &c)| chart_sigma(T, pt, c))
                    .collect();
                if set.iter().all(|pt| window.contains(pt)) {
                    presentations += 1;
                    from_families.insert(set);
                }
            }
            let mut s = 0;
            loop {
                if s == k {
                    break 'outer;
                }
                shifts[s] += 1;
                if shifts[s] <= hi {
                    break;
                }
                shifts[s] = lo;
                s += 1;
            }
        }
    }
    assert_eq!(from_families, brute, "family sweep vs subset search");
    // The presentation is unique: families partition the silting objects.
    assert_eq!(presentations, from_families.len(), "duplicate presentations");
    assert!(brute.len() > 50, "search space too small ({})", brute.len());
}

fn compatible(p: &Params, a: ObjCoord, b: ObjCoord) -> bool {
    graded_hom(p, a, b).iter().all(|(d, _)| d <= 0)
        && graded_hom(p, b, a).iter().all(|(d, _)| d <= 0)
}

#[test]
fn ambient_enumeration_matches_subset_search() {
    // Every silting object of (2,3,1) with summands in the window and the
    // origin base as order-minimal Z summand, by brute force.
    let p = Params::new(2, 3, 1).unwrap();
    let z = ObjCoord::z(0, 0, 0);
    let window = 3i64;
    let cands: Vec<ObjCoord> = window_objects(&p, window)
        .into_iter()
        .filter(|&u| u != z && compatible(&p, u, u) && compatible(&p, u, z))
        .filter(|&u| {
            // The base must stay order-minimal.
            u.kind != Kind::Z || order_leq(&p, z, u).unwrap()
        })
        .collect();
    let mut brute: BTreeSet<BTreeSet<ObjCoord>> = BTreeSet::new();
    for (i, &a) in cands.iter().enumerate() {
        for (j, &b) in cands.iter().enumerate().skip(i + 1) {
            if !compatible(&p, a, b) {
                continue;
            }
            for &c in cands.iter().skip(j + 1) {
                if compatible(&p, a, c) && compatible(&p, b, c) {
                    brute.insert([z, a, b, c].into_iter().collect());
                }
            }
        }
    }
    // The classification side, boxed generously and filtered to the window.
    let bound = p.r() * (2 * window + 4) + 2 * p.r();
    let (_, instances) = enumerate_silting(&p, z, -bound, bound).unwrap();
    let from_families: BTreeSet<BTreeSet<ObjCoord>> = instances
        .iter()
        .filter(|inst| {
            inst.object
                .summands
                .iter()
                .all(|o| o.i.abs() <= window && o.j.abs() <= window)
        })
        .map(|inst| inst.object.summands.iter().copied().collect())
        .collect();
    assert_eq!(
        from_families, brute,
        "lifted classification vs ambient subset search"
    );
    assert!(brute.len() > 10, "search space too small ({})", brute.len());
}
