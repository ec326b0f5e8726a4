use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};

/// An element of a finite symmetric group, stored as the image of each point.
/// Points are 0-based internally and 1-based in cycle notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    /// Validates that `images` is a bijection of `0..images.len()`.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::Parse {
                    line: 0,
                    msg: format!("images {images:?} are not a bijection of 0..{n}"),
                });
            }
            seen[i] = true;
        }
        Ok(Perm { images })
    }

    pub fn identity(n: usize) -> Self {
        Perm { images: (0..n).collect() }
    }

    /// Builds a permutation of degree `n` from disjoint cycles of 0-based
    /// points.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                let q = cycle[(k + 1) % cycle.len()];
                if p >= n || q >= n {
                    return Err(Error::Parse {
                        line: 0,
                        msg: format!("cycle point {} outside 1..={n}", p.max(q) + 1),
                    });
                }
                if seen[p] {
                    return Err(Error::Parse {
                        line: 0,
                        msg: format!("point {} appears twice in cycles", p + 1),
                    });
                }
                seen[p] = true;
                images[p] = q;
            }
        }
        Perm::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, p: usize) -> usize {
        self.images[p]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self·other`, applying `other` first.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(Perm {
            images: (0..self.degree()).map(|i| self.images[other.images[i]]).collect(),
        })
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Perm { images }
    }

    /// `[a,b] = a·b·a⁻¹·b⁻¹`.
    pub fn commutator(&self, other: &Perm) -> Result<Perm> {
        self.compose(other)?
            .compose(&self.inverse())?
            .compose(&other.inverse())
    }

    /// `a^b = b⁻¹·a·b`.
    pub fn conjugate(&self, by: &Perm) -> Result<Perm> {
        by.inverse().compose(self)?.compose(by)
    }

    pub fn commutes_with(&self, other: &Perm) -> Result<bool> {
        Ok(self.compose(other)? == other.compose(self)?)
    }

    pub fn pow(&self, k: u32) -> Perm {
        let mut out = Perm::identity(self.degree());
        for _ in 0..k {
            out = out.compose(self).expect("same degree");
        }
        out
    }

    /// The 0-based points moved by the permutation.
    pub fn support(&self) -> Vec<usize> {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &j)| *i != j)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn order(&self) -> u32 {
        let mut k = 1;
        let mut acc = self.clone();
        while !acc.is_identity() {
            acc = acc.compose(self).expect("same degree");
            k += 1;
        }
        k
    }

    /// Disjoint cycles of length at least two, each rotated to start at its
    /// smallest point and sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.images[start];
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.images[p];
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Parses 1-based cycle notation, e.g. `(1 2)(3 4)`, or `id`.
    pub fn parse(s: &str, degree: usize) -> Result<Self> {
        let s = s.trim();
        if s == "id" || s == "()" {
            return Ok(Perm::identity(degree));
        }
        let mut cycles = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let rest_trim = rest.trim_start();
            let Some(tail) = rest_trim.strip_prefix('(') else {
                return Err(Error::Parse {
                    line: 0,
                    msg: format!("expected '(' in cycle notation {s:?}"),
                });
            };
            let Some(close) = tail.find(')') else {
                return Err(Error::Parse { line: 0, msg: format!("unclosed cycle in {s:?}") });
            };
            let cycle = tail[..close]
                .split_whitespace()
                .map(|t| {
                    let p: usize = t.parse().map_err(|_| Error::Parse {
                        line: 0,
                        msg: format!("bad point {t:?} in {s:?}"),
                    })?;
                    if p == 0 || p > degree {
                        return Err(Error::Parse {
                            line: 0,
                            msg: format!("point {p} outside 1..={degree}"),
                        });
                    }
                    Ok(p - 1)
                })
                .collect::<Result<Vec<_>>>()?;
            if cycle.len() < 2 {
                return Err(Error::Parse {
                    line: 0,
                    msg: format!("cycle with fewer than two points in {s:?}"),
                });
            }
            cycles.push(cycle);
            rest = &tail[close + 1..];
        }
        Perm::from_cycles(degree, &cycles)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "id");
        }
        for cycle in cycles {
            write!(f, "({})", cycle.iter().map(|p| (p + 1).to_string()).join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The symmetric group on `1..=n`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SymmetricGroup {
    n: usize,
}

impl SymmetricGroup {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Parse { line: 0, msg: "degree must be at least 1".into() });
        }
        Ok(SymmetricGroup { n })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    /// Parses `S4`, `s4`, `S_4`.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        let digits = t
            .strip_prefix(['S', 's'])
            .map(|d| d.strip_prefix('_').unwrap_or(d))
            .ok_or_else(|| Error::Parse {
                line: 0,
                msg: format!("group {s:?} must have the form S<n>"),
            })?;
        let n: usize = digits.parse().map_err(|_| Error::Parse {
            line: 0,
            msg: format!("bad degree in group {s:?}"),
        })?;
        SymmetricGroup::new(n)
    }

    /// All n! elements in lexicographic order of their image vectors; the
    /// identity comes first.
    pub fn elements(&self) -> Result<Vec<Perm>> {
        crate::perm::algdisj::check_degree_cap(self.n)?;
        Ok((0..self.n)
            .permutations(self.n)
            .map(|images| Perm { images })
            .collect())
    }

    /// All elements commuting with `g`, in enumeration order.
    pub fn centralizer(&self, g: &Perm) -> Result<Vec<Perm>> {
        if g.degree() != self.n {
            return Err(Error::DegreeMismatch(g.degree(), self.n));
        }
        Ok(self
            .elements()?
            .into_iter()
            .filter(|x| x.commutes_with(g).expect("same degree"))
            .collect())
    }
}

impl fmt::Display for SymmetricGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S{}", self.n)
    }
}
