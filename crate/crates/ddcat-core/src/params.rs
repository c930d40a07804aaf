use crate::error::{Error, Result};

/// The defining triple of the gentle algebra `Lambda(r, n, m)`: an oriented
/// cycle of length `n` with `r` consecutive zero relations and a tail of
/// length `m`.  Finite global dimension forces `n > r >= 1`; `m = 0` is
/// allowed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Params {
    r: i64,
    n: i64,
    m: i64,
}

impl Params {
    pub fn new(r: i64, n: i64, m: i64) -> Result<Self> {
        if r < 1 {
            return Err(Error::InvalidParams(format!("need r >= 1, got r = {r}")));
        }
        if n <= r {
            return Err(Error::InvalidParams(format!(
                "need n > r for finite global dimension, got n = {n}, r = {r}"
            )));
        }
        if m < 0 {
            return Err(Error::InvalidParams(format!("need m >= 0, got m = {m}")));
        }
        Ok(Params { r, n, m })
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    /// Rank of the Grothendieck group: the number of quiver vertices.
    pub fn rank(&self) -> i64 {
        self.n + self.m
    }

    /// Coordinate drift of a full suspension period on X components:
    /// `Sigma^r = tau^{-(m+r)}` there, so coordinates gain `m + r`.
    pub fn x_step(&self) -> i64 {
        self.m + self.r
    }

    /// Coordinate drift of a full suspension period on Y components:
    /// `Sigma^r = tau^{n-r}`, so coordinates gain `r - n` (negative).
    pub fn y_step(&self) -> i64 {
        self.r - self.n
    }

    /// gcd(r, n, m); the torsion order of the autoequivalence group.
    pub fn ell(&self) -> i64 {
        gcd(self.r, gcd(self.n, self.m))
    }

    /// Parse "r,n,m".
    pub fn parse(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 3 {
            return Err(Error::Parse(format!("expected r,n,m but got {s:?}")));
        }
        let mut v = [0i64; 3];
        for (k, part) in parts.iter().enumerate() {
            v[k] = part
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad integer {part:?} in {s:?}")))?;
        }
        Params::new(v[0], v[1], v[2])
    }
}

impl std::fmt::Display for Params {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{})", self.r, self.n, self.m)
    }
}

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}
