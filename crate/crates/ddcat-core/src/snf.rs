//! Smith normal form over the integers, for the small matrices that show up
//! in group-structure computations.

/// Invariant factors d_1 | d_2 | ... (nonnegative, zeros trailing) of an
/// integer matrix.
pub fn invariant_factors(mat: &[Vec<i64>]) -> Vec<i64> {
    let rows = mat.len();
    let cols = if rows == 0 { 0 } else { mat[0].len() };
    let mut a: Vec<Vec<i64>> = mat.to_vec();
    let k = rows.min(cols);
    let mut out = Vec::with_capacity(k);
    let mut top = 0usize;
    while top < k {
        // Find a nonzero pivot of minimal absolute value.
        let mut pivot: Option<(usize, usize)> = None;
        for i in top..rows {
            for j in top..cols {
                if a[i][j] != 0
                    && pivot.is_none_or(|(pi, pj)| a[i][j].abs() < a[pi][pj].abs())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else {
            break;
        };
        a.swap(top, pi);
        for row in a.iter_mut() {
            row.swap(top, pj);
        }
        // Reduce the pivot row and column; restart whenever a remainder
        // survives, so the pivot absolute value strictly decreases.
        let mut dirty = false;
        for i in top + 1..rows {
            let q = a[i][top] / a[top][top];
            if q != 0 {
                for j in top..cols {
                    a[i][j] -= q * a[top][j];
                }
            }
            dirty |= a[i][top] != 0;
        }
        for j in top + 1..cols {
            let q = a[top][j] / a[top][top];
            if q != 0 {
                for i in top..rows {
                    a[i][j] -= q * a[i][top];
                }
            }
            dirty |= a[top][j] != 0;
        }
        if dirty {
            continue;
        }
        out.push(a[top][top].abs());
        top += 1;
    }
    // Fix the divisibility chain.
    for i in 0..out.len() {
        for j in i + 1..out.len() {
            let (x, y) = (out[i], out[j]);
            let g = crate::params::gcd(x, y);
            if g != x {
                out[i] = g;
                out[j] = if g == 0 { 0 } else { x / g * y };
            }
        }
    }
    while out.len() < k {
        out.push(0);
    }
    out
}
