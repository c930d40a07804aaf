//! Dense matrices over a prime field F_p, sized for module dimensions in
//! the dozens.

pub const DEFAULT_PRIME: u64 = 32003;
pub const SECOND_PRIME: u64 = 65537;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub p: u64,
    data: Vec<u64>,
}

impl Mat {
    pub fn zero(p: u64, rows: usize, cols: usize) -> Self {
        Mat { rows, cols, p, data: vec![0; rows * cols] }
    }

    pub fn identity(p: u64, n: usize) -> Self {
        let mut m = Mat::zero(p, n, n);
        for k in 0..n {
            m[(k, k)] = 1;
        }
        m
    }

    pub fn from_rows(p: u64, rows: &[Vec<u64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = Mat::zero(p, r, c);
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                m[(i, j)] = v % p;
            }
        }
        m
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows);
        let mut out = Mat::zero(self.p, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] = (out[(i, j)] + a * other[(k, j)]) % self.p;
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for k in 0..out.data.len() {
            out.data[k] = (out.data[k] + self.p - other.data[k]) % self.p;
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    fn inv_scalar(p: u64, a: u64) -> u64 {
        // Fermat; p is prime.
        let mut base = a % p;
        let mut exp = p - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        acc
    }

    /// In-place row echelon; returns pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pr) = (row..self.rows).find(|&r| self[(r, col)] != 0) else {
                continue;
            };
            for c in 0..self.cols {
                let tmp = self[(row, c)];
                self[(row, c)] = self[(pr, c)];
                self[(pr, c)] = tmp;
            }
            let inv = Self::inv_scalar(self.p, self[(row, col)]);
            for c in 0..self.cols {
                self[(row, c)] = self[(row, c)] * inv % self.p;
            }
            for r in 0..self.rows {
                if r != row && self[(r, col)] != 0 {
                    let f = self[(r, col)];
                    for c in 0..self.cols {
                        self[(r, c)] = (self[(r, c)] + (self.p - f) * self[(row, c)]) % self.p;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right null space, as columns.
    pub fn nullspace(&self) -> Vec<Vec<u64>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.sort();
        let mut basis = Vec::new();
        for &f in &free {
            let mut v = vec![0u64; self.cols];
            v[f] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = (self.p - m[(r, f)]) % self.p;
            }
            basis.push(v);
        }
        basis
    }

    /// One solution x of `self * x = b`, if any.
    pub fn solve(&self, b: &[u64]) -> Option<Vec<u64>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Mat::zero(self.p, self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug[(r, c)] = self[(r, c)];
            }
            aug[(r, self.cols)] = b[r] % self.p;
        }
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![0u64; self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = aug[(r, self.cols)];
        }
        Some(x)
    }

    pub fn col(&self, j: usize) -> Vec<u64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = u64;
    fn index(&self, (r, c): (usize, usize)) -> &u64 {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut u64 {
        &mut self.data[r * self.cols + c]
    }
}

/// Rank of the span of a set of vectors.
pub fn span_rank(p: u64, vecs: &[Vec<u64>]) -> usize {
    if vecs.is_empty() {
        return 0;
    }
    Mat::from_rows(p, vecs).rank()
}
