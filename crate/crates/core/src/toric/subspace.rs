use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::frac;
use crate::error::{Error, Result};
use crate::lattice::{hermite_rows, smith, unimodular_inverse};
use crate::linalg::{rank, rat, rref, Rat};

/// A connected toric subspace `{x : rows · x ≡ offset (mod 1)}`.
///
/// `rows` is the Hermite normal form of a saturated lattice and `offset` is
/// reduced into `[0, 1)`, so equal subspaces have equal representations.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ToricSubspace {
    n: usize,
    rows: Vec<Vec<BigInt>>,
    offset: Vec<Rat>,
}

impl ToricSubspace {
    pub fn whole(n: usize) -> Self {
        ToricSubspace { n, rows: Vec::new(), offset: Vec::new() }
    }

    pub(crate) fn from_canonical(n: usize, rows: Vec<Vec<BigInt>>, offset: Vec<Rat>) -> Self {
        ToricSubspace { n, rows, offset }
    }

    /// The point `x mod 1`.
    pub fn point(x: &[Rat]) -> Self {
        let n = x.len();
        let rows = (0..n).map(|i| (0..n).map(|j| BigInt::from(u8::from(i == j))).collect()).collect();
        ToricSubspace { n, rows, offset: x.iter().map(frac).collect() }
    }

    /// The connected components of `{x : m · x ≡ e (mod 1)}`.
    pub fn solve(n: usize, m: &[Vec<BigInt>], e: &[Rat]) -> Result<Vec<ToricSubspace>> {
        if m.is_empty() {
            return Ok(vec![ToricSubspace::whole(n)]);
        }
        let (p, d, q) = smith(m);
        let f: Vec<Rat> =
            p.iter().map(|row| row.iter().zip(e).map(|(a, b)| rat(a.clone()) * b).sum()).collect();
        let s = (0..m.len().min(n)).take_while(|&i| !d[i][i].is_zero()).count();
        if f[s..].iter().any(|x| !x.is_integer()) {
            return Ok(Vec::new());
        }
        let qinv = unimodular_inverse(&q);
        let r: Vec<Vec<BigInt>> = qinv[..s].to_vec();
        let h = hermite_rows(&r);

        let divisors: Vec<BigInt> = (0..s).map(|i| d[i][i].clone()).collect();
        let total = divisors.iter().try_fold(1usize, |acc, x| x.to_usize().and_then(|x| acc.checked_mul(x)));
        match total {
            Some(t) if t <= 1_000_000 => {}
            _ => return Err(Error::TooLarge("too many intersection components".into())),
        }
        let mut out = Vec::new();
        let mut j = vec![BigInt::zero(); s];
        loop {
            let t: Vec<Rat> = (0..s).map(|i| (&f[i] + rat(j[i].clone())) / rat(divisors[i].clone())).collect();
            // x = Q·y with y = (t, 0) satisfies R·x = t.
            let x: Vec<Rat> = q
                .iter()
                .map(|row| row[..s].iter().zip(&t).map(|(a, b)| rat(a.clone()) * b).sum())
                .collect();
            let offset = h.iter().map(|row| frac(&dot(row, &x))).collect();
            let c = ToricSubspace { n, rows: h.clone(), offset };
            if !out.contains(&c) {
                out.push(c);
            }
            let mut k = 0;
            while k < s {
                j[k] += 1;
                if j[k] < divisors[k] {
                    break;
                }
                j[k] = BigInt::zero();
                k += 1;
            }
            if k == s {
                break;
            }
        }
        out.sort();
        Ok(out)
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.n - self.rows.len()
    }

    pub fn codim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn offset(&self) -> &[Rat] {
        &self.offset
    }

    /// A rational point of the subspace.
    pub fn witness(&self) -> Vec<Rat> {
        let aug: Vec<Vec<Rat>> = self
            .rows
            .iter()
            .zip(&self.offset)
            .map(|(r, c)| r.iter().map(|x| rat(x.clone())).chain([c.clone()]).collect())
            .collect();
        let (red, pivots) = rref(&aug);
        let mut x = vec![rat(0); self.n];
        for (row, &p) in red.iter().zip(&pivots) {
            x[p] = row[self.n].clone();
        }
        x.iter().map(frac).collect()
    }

    pub fn contains_point(&self, x: &[Rat]) -> bool {
        self.rows.iter().zip(&self.offset).all(|(r, c)| (dot(r, x) - c).is_integer())
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &ToricSubspace) -> bool {
        let to_rat = |rows: &[Vec<BigInt>]| -> Vec<Vec<Rat>> {
            rows.iter().map(|r| r.iter().map(|x| rat(x.clone())).collect()).collect()
        };
        let mine = to_rat(&self.rows);
        let theirs = to_rat(&other.rows);
        let both: Vec<Vec<Rat>> = theirs.iter().chain(&mine).cloned().collect();
        rank(&both) == theirs.len() && self.contains_point(&other.witness())
    }

    pub fn intersect(&self, other: &ToricSubspace) -> Result<Vec<ToricSubspace>> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: other.n });
        }
        let m: Vec<Vec<BigInt>> = self.rows.iter().chain(&other.rows).cloned().collect();
        let e: Vec<Rat> = self.offset.iter().chain(&other.offset).cloned().collect();
        ToricSubspace::solve(self.n, &m, &e)
    }
}

fn dot(a: &[BigInt], x: &[Rat]) -> Rat {
    a.iter().zip(x).map(|(a, xi)| rat(a.clone()) * xi).sum()
}

/// Connected components of the intersection of all `subspaces`.
pub fn intersect_components(subspaces: &[ToricSubspace]) -> Result<Vec<ToricSubspace>> {
    let Some(first) = subspaces.first() else {
        return Err(Error::InvalidHyperplane("no subspaces given".into()));
    };
    let mut cur = vec![ToricSubspace::whole(first.n)];
    for s in subspaces {
        let mut next = Vec::new();
        for c in &cur {
            for x in c.intersect(s)? {
                if !next.contains(&x) {
                    next.push(x);
                }
            }
        }
        cur = next;
    }
    cur.sort();
    Ok(cur)
}

impl fmt::Display for ToricSubspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "T^{}", self.n);
        }
        if self.dim() == 0 {
            f.write_str("(")?;
            for (i, c) in self.offset.iter().enumerate() {
                if i > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{c}")?;
            }
            return f.write_str(")");
        }
        for (i, (r, c)) in self.rows.iter().zip(&self.offset).enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            for (j, a) in r.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{a}")?;
            }
            write!(f, " | {c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ToricSubspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
