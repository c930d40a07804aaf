//! The total order on strings with a common endpoint and endpoint sign,
//! refining the hook moves.

use std::cmp::Ordering;

use crate::error::{OracleError, Result};
use crate::quiver::RepQuiver;
use crate::word::StringWord;

/// Compare two strings ending at the same vertex with the same endpoint
/// sign.  `v < w` when `w` extends `v` through a direct arrow, when `v`
/// extends `w` through an inverse arrow, or when the letters before the
/// longest common suffix are inverse on the `v` side and direct on the `w`
/// side.
pub fn geiss_cmp(q: &RepQuiver, v: &StringWord, w: &StringWord) -> Result<Ordering> {
    if v.end(q) != w.end(q) || v.eps(q) != w.eps(q) {
        return Err(OracleError::NotComparable(format!(
            "{} vs {}",
            v.display(q),
            w.display(q)
        )));
    }
    let a = v.letters();
    let b = w.letters();
    let mut k = 0;
    while k < a.len() && k < b.len() && a[a.len() - 1 - k] == b[b.len() - 1 - k] {
        k += 1;
    }
    if k == a.len() && k == b.len() {
        return Ok(Ordering::Equal);
    }
    if k == a.len() {
        // v is a proper suffix of w.
        let before = b[b.len() - 1 - k];
        return Ok(if before.inverse { Ordering::Greater } else { Ordering::Less });
    }
    if k == b.len() {
        let before = a[a.len() - 1 - k];
        return Ok(if before.inverse { Ordering::Less } else { Ordering::Greater });
    }
    let pv = a[a.len() - 1 - k];
    let pw = b[b.len() - 1 - k];
    match (pv.inverse, pw.inverse) {
        (true, false) => Ok(Ordering::Less),
        (false, true) => Ok(Ordering::Greater),
        _ => Err(OracleError::Calibration(format!(
            "strings {} and {} diverge with parallel letters",
            v.display(q),
            w.display(q)
        ))),
    }
}

pub fn geiss_leq(q: &RepQuiver, v: &StringWord, w: &StringWord) -> Result<bool> {
    Ok(geiss_cmp(q, v, w)? != Ordering::Greater)
}
