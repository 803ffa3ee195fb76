//! Graphical arrangements, chromatic polynomials and acyclic orientations.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::arrangement::{AffineArrangement, AffineHyperplane};
use crate::error::{Error, Result};
use crate::intpoly::IntPoly;
use crate::linalg::rat;
use crate::toric::{ToricArrangement, ToricHyperplane};

/// A simple graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl SimpleGraph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut es = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge ({u}, {v}) leaves the vertex set")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            let e = (u.min(v), u.max(v));
            if es.contains(&e) {
                return Err(Error::InvalidGraph(format!("edge ({u}, {v}) appears twice")));
            }
            es.push(e);
        }
        Ok(SimpleGraph { n, edges: es })
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        SimpleGraph { n, edges }
    }

    pub fn cycle(n: usize) -> Self {
        SimpleGraph::new(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).expect("n ≥ 3")
    }

    pub fn path(n: usize) -> Self {
        SimpleGraph { n, edges: (1..n).map(|i| (i - 1, i)).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Component label of each vertex.
    pub fn components(&self) -> Vec<usize> {
        let mut label: Vec<usize> = (0..self.n).collect();
        fn root(label: &mut [usize], mut x: usize) -> usize {
            while label[x] != x {
                label[x] = label[label[x]];
                x = label[x];
            }
            x
        }
        for &(u, v) in &self.edges {
            let (a, b) = (root(&mut label, u), root(&mut label, v));
            label[a.max(b)] = a.min(b);
        }
        (0..self.n).map(|x| root(&mut label, x)).collect()
    }

    pub fn component_count(&self) -> usize {
        let c = self.components();
        (0..self.n).filter(|&x| c[x] == x).count()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    // Relabel by degree and sort; isomorphic graphs often, not always, agree.
    fn canonical(&self) -> (usize, Vec<(usize, usize)>) {
        let mut deg = vec![0usize; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| deg[v]);
        let mut pos = vec![0; self.n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut es: Vec<_> = self.edges.iter().map(|&(u, v)| (pos[u].min(pos[v]), pos[u].max(pos[v]))).collect();
        es.sort_unstable();
        (self.n, es)
    }

    fn delete(&self, e: usize) -> SimpleGraph {
        let mut edges = self.edges.clone();
        edges.remove(e);
        SimpleGraph { n: self.n, edges }
    }

    // Merge the endpoints of edge `e`, dropping the loop and parallel edges.
    fn contract(&self, e: usize) -> SimpleGraph {
        let (u, v) = self.edges[e];
        let relabel = |x: usize| {
            let x = if x == v { u } else { x };
            if x > v { x - 1 } else { x }
        };
        let mut edges = Vec::new();
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            if i == e {
                continue;
            }
            let (a, b) = (relabel(a), relabel(b));
            let e = (a.min(b), a.max(b));
            if a != b && !edges.contains(&e) {
                edges.push(e);
            }
        }
        SimpleGraph { n: self.n - 1, edges }
    }
}

/// Hyperplanes `x_i - x_j = 0`, one per edge, in Euclidean and toric form.
pub fn graphical_arrangement(g: &SimpleGraph) -> (AffineArrangement, ToricArrangement) {
    let normal = |u: usize, v: usize| {
        let mut a = vec![BigInt::from(0); g.n];
        a[u] = BigInt::from(1);
        a[v] = BigInt::from(-1);
        a
    };
    let affine = g
        .edges
        .iter()
        .map(|&(u, v)| AffineHyperplane::new(normal(u, v), rat(0)).expect("nonzero normal"))
        .collect();
    let toric = g
        .edges
        .iter()
        .map(|&(u, v)| ToricHyperplane::new(normal(u, v), rat(0)).expect("nonzero normal"))
        .collect();
    (
        AffineArrangement::new(g.n, affine).expect("distinct edges give distinct hyperplanes"),
        ToricArrangement::new(g.n, toric).expect("distinct edges give distinct hyperplanes"),
    )
}

/// Chromatic polynomial by deletion–contraction.
pub fn chromatic_polynomial(g: &SimpleGraph) -> IntPoly {
    let mut memo = BTreeMap::new();
    chromatic_memo(g, &mut memo)
}

fn chromatic_memo(g: &SimpleGraph, memo: &mut BTreeMap<(usize, Vec<(usize, usize)>), IntPoly>) -> IntPoly {
    if g.edges.is_empty() {
        return IntPoly::monomial(BigInt::from(1), g.n);
    }
    let key = g.canonical();
    if let Some(p) = memo.get(&key) {
        return p.clone();
    }
    let e = g.edges.len() - 1;
    let p = &chromatic_memo(&g.delete(e), memo) - &chromatic_memo(&g.contract(e), memo);
    memo.insert(key, p.clone());
    p
}

/// Regions of the toric graphical arrangement: (-1)^{n-k} times the
/// coefficient of t^k in the chromatic polynomial, k the number of
/// components.
pub fn toric_graphical_region_count(g: &SimpleGraph) -> BigInt {
    let k = g.component_count();
    let c = chromatic_polynomial(g).coeff(k);
    if (g.n - k).is_multiple_of(2) { c } else { -c }
}

fn orientation_is_acyclic(n: usize, arcs: &[(usize, usize)]) -> bool {
    let mut indeg = vec![0usize; n];
    for &(_, v) in arcs {
        indeg[v] += 1;
    }
    let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0;
    while let Some(u) = stack.pop() {
        seen += 1;
        for &(a, b) in arcs {
            if a == u {
                indeg[b] -= 1;
                if indeg[b] == 0 {
                    stack.push(b);
                }
            }
        }
    }
    seen == n
}

const MAX_ORIENTED_EDGES: usize = 24;

fn orientations(g: &SimpleGraph) -> Result<impl Iterator<Item = Vec<(usize, usize)>> + '_> {
    let m = g.edges.len();
    if m > MAX_ORIENTED_EDGES {
        return Err(Error::TooLarge(format!("2^{m} orientations")));
    }
    Ok((0u64..1 << m).map(move |mask| {
        g.edges.iter().enumerate().map(|(i, &(u, v))| if mask >> i & 1 == 1 { (v, u) } else { (u, v) }).collect()
    }))
}

/// Acyclic orientations whose only sink is `v`, by exhaustive search.
pub fn unique_sink_acyclic_orientations(g: &SimpleGraph, v: usize) -> Result<u64> {
    if v >= g.n {
        return Err(Error::InvalidGraph(format!("vertex {v} is out of range")));
    }
    if !g.is_connected() {
        return Err(Error::InvalidGraph("the graph is not connected".into()));
    }
    let mut count = 0;
    for arcs in orientations(g)? {
        if !orientation_is_acyclic(g.n, &arcs) {
            continue;
        }
        let mut out = vec![false; g.n];
        for &(a, _) in &arcs {
            out[a] = true;
        }
        if (0..g.n).all(|x| out[x] != (x == v)) {
            count += 1;
        }
    }
    Ok(count)
}

/// All acyclic orientations, by exhaustive search.
pub fn acyclic_orientations(g: &SimpleGraph) -> Result<u64> {
    Ok(orientations(g)?.filter(|arcs| orientation_is_acyclic(g.n, arcs)).count() as u64)
}
