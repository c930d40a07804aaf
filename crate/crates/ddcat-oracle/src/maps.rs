//! Morphism counting between string modules by admissible pairs: a factor
//! string of the source matched with a substring of the target, equal up to
//! inversion.

use crate::quiver::RepQuiver;
use crate::word::{Letter, StringWord};

/// Middle segments of the factor-string decompositions of `w`: cut points
/// (i, j) such that the piece before ends with an inverse letter (or is
/// empty) and the piece after starts with a direct letter (or is empty).
fn factor_middles(w: &StringWord) -> Vec<(usize, usize)> {
    let ls = w.letters();
    let n = ls.len();
    let mut out = Vec::new();
    for i in 0..=n {
        if i > 0 && !ls[i - 1].inverse {
            continue;
        }
        for j in i..=n {
            if j < n && ls[j].inverse {
                continue;
            }
            out.push((i, j));
        }
    }
    out
}

/// Middle segments of the substring decompositions of `w`: before ends
/// direct (or empty), after starts inverse (or empty).
fn sub_middles(w: &StringWord) -> Vec<(usize, usize)> {
    let ls = w.letters();
    let n = ls.len();
    let mut out = Vec::new();
    for i in 0..=n {
        if i > 0 && ls[i - 1].inverse {
            continue;
        }
        for j in i..=n {
            if j < n && !ls[j].inverse {
                continue;
            }
            out.push((i, j));
        }
    }
    out
}

/// The middle piece as comparable data: its letter sequence, or the vertex
/// when trivial.
enum Middle {
    Trivial(usize),
    Piece(Vec<Letter>),
}

fn middle(q: &RepQuiver, w: &StringWord, (i, j): (usize, usize)) -> Middle {
    let ls = w.letters();
    if i == j {
        let v = if i == 0 { w.start(q) } else { ls[i - 1].end(q) };
        Middle::Trivial(v)
    } else {
        Middle::Piece(ls[i..j].to_vec())
    }
}

fn middles_match(q: &RepQuiver, a: &Middle, b: &Middle) -> bool {
    match (a, b) {
        (Middle::Trivial(x), Middle::Trivial(y)) => x == y,
        (Middle::Piece(x), Middle::Piece(y)) => {
            if x.len() != y.len() {
                return false;
            }
            let eq = x == y;
            let inv_eq = x
                .iter()
                .rev()
                .map(Letter::inverted)
                .eq(y.iter().copied());
            let _ = q;
            eq || inv_eq
        }
        _ => false,
    }
}

/// dim Hom between the string modules of `v` and `w`: the number of
/// admissible (factor, substring) pairs with equal middles up to inversion.
pub fn hom_count_combinatorial(q: &RepQuiver, v: &StringWord, w: &StringWord) -> usize {
    let facs: Vec<Middle> = factor_middles(v)
        .into_iter()
        .map(|c| middle(q, v, c))
        .collect();
    let subs: Vec<Middle> = sub_middles(w).into_iter().map(|c| middle(q, w, c)).collect();
    let mut count = 0;
    for f in &facs {
        for s in &subs {
            if middles_match(q, f, s) {
                count += 1;
            }
        }
    }
    count
}
