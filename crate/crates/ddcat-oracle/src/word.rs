//! Strings: walks in the repetitive quiver avoiding inverse pairs and
//! relations, with the sign bookkeeping needed to compose them with trivial
//! strings.

use crate::error::{OracleError, Result};
use crate::quiver::{Aid, RepQuiver, Vid};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub arrow: Aid,
    pub inverse: bool,
}

impl Letter {
    pub fn direct(arrow: Aid) -> Self {
        Letter { arrow, inverse: false }
    }

    pub fn bar(arrow: Aid) -> Self {
        Letter { arrow, inverse: true }
    }

    pub fn start(&self, q: &RepQuiver) -> Vid {
        let a = &q.arrows[self.arrow];
        if self.inverse { a.to } else { a.from }
    }

    pub fn end(&self, q: &RepQuiver) -> Vid {
        let a = &q.arrows[self.arrow];
        if self.inverse { a.from } else { a.to }
    }

    pub fn inverted(&self) -> Self {
        Letter { arrow: self.arrow, inverse: !self.inverse }
    }
}

/// A string: either a signed trivial string at a vertex or a nonempty walk.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StringWord {
    Trivial { vertex: Vid, sign: i8 },
    Word(Vec<Letter>),
}

use StringWord::*;

impl StringWord {
    pub fn trivial(vertex: Vid, sign: i8) -> Self {
        debug_assert!(sign == 1 || sign == -1);
        Trivial { vertex, sign }
    }

    pub fn letters(&self) -> &[Letter] {
        match self {
            Trivial { .. } => &[],
            Word(ls) => ls,
        }
    }

    pub fn len(&self) -> usize {
        self.letters().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn start(&self, q: &RepQuiver) -> Vid {
        match self {
            Trivial { vertex, .. } => *vertex,
            Word(ls) => ls[0].start(q),
        }
    }

    pub fn end(&self, q: &RepQuiver) -> Vid {
        match self {
            Trivial { vertex, .. } => *vertex,
            Word(ls) => ls.last().unwrap().end(q),
        }
    }

    pub fn sigma(&self, q: &RepQuiver) -> i8 {
        match self {
            Trivial { sign, .. } => -sign,
            Word(ls) => {
                let l = ls[0];
                if l.inverse { q.eps_fn[l.arrow] } else { q.sigma_fn[l.arrow] }
            }
        }
    }

    pub fn eps(&self, q: &RepQuiver) -> i8 {
        match self {
            Trivial { sign, .. } => *sign,
            Word(ls) => {
                let l = *ls.last().unwrap();
                if l.inverse { q.sigma_fn[l.arrow] } else { q.eps_fn[l.arrow] }
            }
        }
    }

    pub fn invert(&self) -> Self {
        match self {
            Trivial { vertex, sign } => Trivial { vertex: *vertex, sign: -sign },
            Word(ls) => Word(ls.iter().rev().map(Letter::inverted).collect()),
        }
    }

    /// Canonical representative of {w, inverse(w)}; string modules do not
    /// see the orientation.
    pub fn class(&self) -> StringWord {
        let inv = self.invert();
        if *self <= inv { self.clone() } else { inv }
    }

    /// Walk validity: consecutive letters fit, no letter is followed by its
    /// own inverse, and every maximal one-directional run is a nonzero path
    /// of the socle quotient.
    pub fn is_string(&self, q: &RepQuiver) -> bool {
        let ls = match self {
            Trivial { .. } => return true,
            Word(ls) if ls.is_empty() => return false,
            Word(ls) => ls,
        };
        for k in 0..ls.len() - 1 {
            if ls[k].end(q) != ls[k + 1].start(q) {
                return false;
            }
            if ls[k].arrow == ls[k + 1].arrow && ls[k].inverse != ls[k + 1].inverse {
                return false;
            }
        }
        // Check maximal runs.
        let mut k = 0;
        while k < ls.len() {
            let dirn = ls[k].inverse;
            let mut e = k;
            while e + 1 < ls.len() && ls[e + 1].inverse == dirn {
                e += 1;
            }
            let mut run: Vec<Aid> = ls[k..=e].iter().map(|l| l.arrow).collect();
            if dirn {
                run.reverse();
            }
            if !q.path_nonzero(&run, true) {
                return false;
            }
            k = e + 1;
        }
        true
    }

    /// Composition; trivial strings demand matching signs.
    pub fn compose(&self, q: &RepQuiver, other: &StringWord) -> Result<StringWord> {
        let fail = |why: &str| {
            Err(OracleError::UndefinedComposition(format!(
                "{} . {}: {why}",
                self.display(q),
                other.display(q)
            )))
        };
        match (self, other) {
            (Trivial { vertex, sign }, _) => {
                if other.start(q) != *vertex {
                    return fail("start vertex mismatch");
                }
                match other {
                    Trivial { sign: s2, .. } => {
                        if *s2 == *sign { Ok(other.clone()) } else { fail("sign mismatch") }
                    }
                    _ => {
                        if other.sigma(q) == -sign {
                            Ok(other.clone())
                        } else {
                            fail("sigma mismatch")
                        }
                    }
                }
            }
            (_, Trivial { vertex, sign }) => {
                if self.end(q) != *vertex {
                    fail("end vertex mismatch")
                } else if self.eps(q) == *sign {
                    Ok(self.clone())
                } else {
                    fail("eps mismatch")
                }
            }
            (Word(a), Word(b)) => {
                if self.end(q) != other.start(q) {
                    return fail("endpoint mismatch");
                }
                let joined = Word(a.iter().chain(b.iter()).copied().collect());
                if joined.is_string(q) {
                    Ok(joined)
                } else {
                    fail("concatenation is not a string")
                }
            }
        }
    }

    /// Dimension vector of the associated module: one basis vector per walk
    /// vertex.
    pub fn dim_vec(&self, q: &RepQuiver) -> Vec<usize> {
        let mut dims = vec![0usize; q.vertices.len()];
        dims[self.start(q)] += 1;
        for l in self.letters() {
            dims[l.end(q)] += 1;
        }
        dims
    }

    /// Delimited serialization, `~` marking inverse letters.
    pub fn display(&self, q: &RepQuiver) -> String {
        match self {
            Trivial { vertex, sign } => {
                let v = q.vertex(*vertex);
                let s = if *sign > 0 { "+" } else { "-" };
                format!("1{s}@({},{})", v.level, v.v)
            }
            Word(ls) => ls
                .iter()
                .map(|l| {
                    let name = &q.arrows[l.arrow].name;
                    // Arrow names are "base@level".
                    match (l.inverse, name.split_once('@')) {
                        (true, Some((b, lev))) => format!("{b}~@{lev}"),
                        (false, _) => name.clone(),
                        (true, None) => format!("{name}~"),
                    }
                })
                .collect::<Vec<_>>()
                .join(" . "),
        }
    }

    /// All strings of length at most `max_len`, in a deterministic order.
    pub fn enumerate(q: &RepQuiver, max_len: usize) -> Vec<StringWord> {
        let mut out: Vec<StringWord> = Vec::new();
        for v in 0..q.vertices.len() {
            out.push(StringWord::trivial(v, 1));
            out.push(StringWord::trivial(v, -1));
        }
        let mut frontier: Vec<Vec<Letter>> = Vec::new();
        for a in 0..q.arrows.len() {
            frontier.push(vec![Letter::direct(a)]);
            frontier.push(vec![Letter::bar(a)]);
        }
        let mut len = 1;
        while len <= max_len && !frontier.is_empty() {
            let mut next = Vec::new();
            for ls in frontier {
                let w = Word(ls.clone());
                if !w.is_string(q) {
                    continue;
                }
                out.push(w.clone());
                let end = w.end(q);
                for a in 0..q.arrows.len() {
                    for inv in [false, true] {
                        let l = Letter { arrow: a, inverse: inv };
                        if l.start(q) == end {
                            let mut nx = ls.clone();
                            nx.push(l);
                            next.push(nx);
                        }
                    }
                }
            }
            frontier = next;
            len += 1;
        }
        out
    }
}
