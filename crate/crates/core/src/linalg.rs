//! Exact rational linear algebra: reduced row echelon form and
//! Fourier–Motzkin feasibility for mixed strict, weak and equality systems.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

pub fn rat(k: impl Into<BigInt>) -> Rat {
    Rat::from_integer(k.into())
}

/// Reduced row echelon form with zero rows dropped. Returns the rows and the
/// pivot column of each row.
pub fn rref(rows: &[Vec<Rat>]) -> (Vec<Vec<Rat>>, Vec<usize>) {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for v in m[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..ncols {
                    let t = &f * &m[r][j];
                    m[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(rows: &[Vec<Rat>]) -> usize {
    rref(rows).0.len()
}

/// A nonzero vector orthogonal to every row, if one exists.
pub fn kernel_vector(rows: &[Vec<Rat>], ncols: usize) -> Option<Vec<Rat>> {
    let (m, pivots) = rref(rows);
    let free = (0..ncols).find(|c| !pivots.contains(c))?;
    let mut x = vec![Rat::zero(); ncols];
    x[free] = Rat::one();
    for (row, &p) in m.iter().zip(&pivots) {
        x[p] = -row[free].clone();
    }
    Some(x)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Rel {
    /// `a·x = b`
    Eq,
    /// `a·x ≥ b`
    Ge,
    /// `a·x > b`
    Gt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<Rat>,
    pub rel: Rel,
    pub rhs: Rat,
}

impl Constraint {
    pub fn new(coeffs: Vec<Rat>, rel: Rel, rhs: Rat) -> Self {
        Constraint { coeffs, rel, rhs }
    }

    /// `a·x < b` stated as `-a·x > -b`.
    pub fn lt(coeffs: Vec<Rat>, rhs: Rat) -> Self {
        Constraint { coeffs: coeffs.into_iter().map(|c| -c).collect(), rel: Rel::Gt, rhs: -rhs }
    }

    pub fn le(coeffs: Vec<Rat>, rhs: Rat) -> Self {
        Constraint { coeffs: coeffs.into_iter().map(|c| -c).collect(), rel: Rel::Ge, rhs: -rhs }
    }
}

/// Decides whether the system has a real solution.
pub fn feasible(n: usize, constraints: &[Constraint]) -> bool {
    let mut eqs = Vec::new();
    let mut ineqs = Vec::new();
    for c in constraints {
        debug_assert_eq!(c.coeffs.len(), n);
        match c.rel {
            Rel::Eq => eqs.push(c.clone()),
            _ => ineqs.push(c.clone()),
        }
    }
    // Eliminate equalities by substitution.
    while let Some(e) = eqs.pop() {
        let Some(j) = e.coeffs.iter().position(|c| !c.is_zero()) else {
            if !e.rhs.is_zero() {
                return false;
            }
            continue;
        };
        let pivot = e.coeffs[j].clone();
        for c in eqs.iter_mut().chain(ineqs.iter_mut()) {
            if c.coeffs[j].is_zero() {
                continue;
            }
            let f = &c.coeffs[j] / &pivot;
            for (k, v) in c.coeffs.iter_mut().enumerate() {
                *v -= &f * &e.coeffs[k];
            }
            c.rhs -= &f * &e.rhs;
        }
    }
    fourier_motzkin(n, ineqs)
}

fn fourier_motzkin(n: usize, mut sys: Vec<Constraint>) -> bool {
    for j in 0..n {
        sys = prune(sys);
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        let mut rest = Vec::new();
        for c in sys {
            if c.coeffs[j].is_positive() {
                pos.push(c);
            } else if c.coeffs[j].is_negative() {
                neg.push(c);
            } else {
                rest.push(c);
            }
        }
        for p in &pos {
            for q in &neg {
                let fp = -&q.coeffs[j];
                let fq = p.coeffs[j].clone();
                let coeffs = (0..n).map(|k| &fp * &p.coeffs[k] + &fq * &q.coeffs[k]).collect();
                let rhs = &fp * &p.rhs + &fq * &q.rhs;
                let rel = if p.rel == Rel::Gt || q.rel == Rel::Gt { Rel::Gt } else { Rel::Ge };
                rest.push(Constraint { coeffs, rel, rhs });
            }
        }
        sys = rest;
    }
    sys.iter().all(|c| match c.rel {
        Rel::Gt => c.rhs.is_negative(),
        Rel::Ge => !c.rhs.is_positive(),
        Rel::Eq => c.rhs.is_zero(),
    })
}

// Scales each constraint so its first nonzero coefficient is ±1 and keeps only
// the tightest constraint per direction.
fn prune(sys: Vec<Constraint>) -> Vec<Constraint> {
    let mut best: BTreeMap<Vec<Rat>, (Rat, Rel)> = BTreeMap::new();
    let mut trivial = Vec::new();
    for c in sys {
        let Some(lead) = c.coeffs.iter().find(|v| !v.is_zero()).map(|v| v.abs()) else {
            trivial.push(c);
            continue;
        };
        let coeffs: Vec<Rat> = c.coeffs.iter().map(|v| v / &lead).collect();
        let rhs = &c.rhs / &lead;
        match best.get_mut(&coeffs) {
            Some((b, rel)) => {
                if rhs > *b || (rhs == *b && c.rel == Rel::Gt) {
                    *b = rhs;
                    *rel = c.rel;
                }
            }
            None => {
                best.insert(coeffs, (rhs, c.rel));
            }
        }
    }
    let mut out: Vec<Constraint> =
        best.into_iter().map(|(coeffs, (rhs, rel))| Constraint { coeffs, rel, rhs }).collect();
    // A violated trivial constraint is kept so infeasibility survives.
    out.extend(trivial.into_iter().filter(|c| match c.rel {
        Rel::Gt => !c.rhs.is_negative(),
        _ => c.rhs.is_positive(),
    }));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Rat> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn rref_and_rank() {
        let (m, piv) = rref(&[v(&[2, 4, 2]), v(&[1, 2, 1]), v(&[0, 1, 3])]);
        assert_eq!(m.len(), 2);
        assert_eq!(piv, [0, 1]);
        assert_eq!(m[0], v(&[1, 0, -5]));
        let k = kernel_vector(&[v(&[1, 1, 0])], 3).unwrap();
        assert_eq!(k, v(&[-1, 1, 0]));
        assert!(kernel_vector(&[v(&[1, 0]), v(&[0, 1])], 2).is_none());
    }

    #[test]
    fn strict_systems() {
        // 0 < x < 1 is feasible, x > 1 and x < 1 is not, x ≥ 1 and x ≤ 1 is.
        assert!(feasible(1, &[Constraint::new(v(&[1]), Rel::Gt, rat(0)), Constraint::lt(v(&[1]), rat(1))]));
        assert!(!feasible(1, &[Constraint::new(v(&[1]), Rel::Gt, rat(1)), Constraint::lt(v(&[1]), rat(1))]));
        assert!(feasible(1, &[Constraint::new(v(&[1]), Rel::Ge, rat(1)), Constraint::le(v(&[1]), rat(1))]));
        assert!(!feasible(1, &[Constraint::new(v(&[1]), Rel::Ge, rat(1)), Constraint::lt(v(&[1]), rat(1))]));
    }

    #[test]
    fn equalities() {
        // x + y = 1, x - y = 0, x > 1/2 is infeasible; x ≥ 1/2 is fine.
        let base = [Constraint::new(v(&[1, 1]), Rel::Eq, rat(1)), Constraint::new(v(&[1, -1]), Rel::Eq, rat(0))];
        let half = Rat::new(1.into(), 2.into());
        let mut s1 = base.to_vec();
        s1.push(Constraint::new(v(&[1, 0]), Rel::Gt, half.clone()));
        assert!(!feasible(2, &s1));
        let mut s2 = base.to_vec();
        s2.push(Constraint::new(v(&[1, 0]), Rel::Ge, half));
        assert!(feasible(2, &s2));
        assert!(!feasible(1, &[Constraint::new(v(&[0]), Rel::Eq, rat(1))]));
    }

    #[test]
    fn triangle_interior() {
        // x > 0, y > 0, x + y < 1.
        let sys = [
            Constraint::new(v(&[1, 0]), Rel::Gt, rat(0)),
            Constraint::new(v(&[0, 1]), Rel::Gt, rat(0)),
            Constraint::lt(v(&[1, 1]), rat(1)),
        ];
        assert!(feasible(2, &sys));
        let mut s = sys.to_vec();
        s.push(Constraint::new(v(&[1, 1]), Rel::Gt, rat(1)));
        assert!(!feasible(2, &s));
    }
}
