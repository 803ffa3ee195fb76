use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::poly::AbPoly;
use super::word::AbWord;

/// A formal sum of `k`-fold tensors of ab-monomials. By multilinearity this
/// represents any sum of tensors of ab-polynomials.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorSum {
    arity: usize,
    terms: BTreeMap<Vec<AbWord>, BigInt>,
}

impl TensorSum {
    pub fn zero(arity: usize) -> Self {
        TensorSum { arity, terms: BTreeMap::new() }
    }

    /// Embeds `p` as a 1-fold tensor sum.
    pub fn from_poly(p: &AbPoly) -> Self {
        let mut t = TensorSum::zero(1);
        for (w, k) in p.terms() {
            t.add_term(vec![w], k.clone());
        }
        t
    }

    /// `p_1 ⊗ ... ⊗ p_k`.
    pub fn from_factors(factors: &[AbPoly]) -> Self {
        let mut t = TensorSum::zero(0);
        t.add_term(Vec::new(), BigInt::from(1));
        for p in factors {
            let mut next = TensorSum::zero(t.arity + 1);
            for (ws, k) in &t.terms {
                for (w, c) in p.terms() {
                    let mut key = ws.clone();
                    key.push(w);
                    next.add_term(key, k * c);
                }
            }
            t = next;
        }
        t
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[AbWord], &BigInt)> + '_ {
        self.terms.iter().map(|(ws, k)| (ws.as_slice(), k))
    }

    pub fn coefficient(&self, ws: &[AbWord]) -> BigInt {
        self.terms.get(ws).cloned().unwrap_or_default()
    }

    /// Size of the multiset, counting each tensor with its multiplicity.
    pub fn multiset_size(&self) -> BigInt {
        self.terms.values().map(|k| k.abs()).sum()
    }

    pub fn add_term(&mut self, ws: Vec<AbWord>, k: BigInt) {
        assert_eq!(ws.len(), self.arity, "tensor arity mismatch");
        if k.is_zero() {
            return;
        }
        match self.terms.entry(ws) {
            Entry::Vacant(v) => {
                v.insert(k);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += k;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Applies Δ to tensor factor `i`, raising the arity by one.
    pub fn split_factor(&self, i: usize) -> TensorSum {
        assert!(i < self.arity);
        let mut out = TensorSum::zero(self.arity + 1);
        for (ws, k) in &self.terms {
            let w = ws[i];
            for j in 0..w.len() {
                let mut key = Vec::with_capacity(ws.len() + 1);
                key.extend_from_slice(&ws[..i]);
                key.push(w.prefix(j));
                key.push(w.slice(j + 1, w.len()));
                key.extend_from_slice(&ws[i + 1..]);
                out.add_term(key, k.clone());
            }
        }
        out
    }

    /// Sums `f(w_1, ..., w_k)` weighted by the coefficients.
    pub fn evaluate<F: FnMut(&[AbWord]) -> AbPoly>(&self, mut f: F) -> AbPoly {
        let mut out = AbPoly::zero();
        for (ws, k) in &self.terms {
            out += &f(ws).scale(k);
        }
        out
    }
}

/// Δ on a single word: the sum over deleted positions.
pub fn coproduct_word(w: AbWord) -> impl Iterator<Item = (AbWord, AbWord)> {
    (0..w.len()).map(move |j| (w.prefix(j), w.slice(j + 1, w.len())))
}

pub fn coproduct(p: &AbPoly) -> TensorSum {
    TensorSum::from_poly(p).split_factor(0)
}

/// Δ^k with `k + 1` tensor factors; Δ^0 is the identity and
/// Δ^k = (Δ^{k-1} ⊗ id) ∘ Δ.
pub fn coproduct_k(p: &AbPoly, k: usize) -> TensorSum {
    if k == 0 {
        return TensorSum::from_poly(p);
    }
    let mut out = TensorSum::zero(k + 1);
    for (w, c) in p.terms() {
        for (left, right) in coproduct_word(w) {
            let inner = coproduct_k(&AbPoly::monomial(left), k - 1);
            for (ws, m) in inner.terms() {
                let mut key = ws.to_vec();
                key.push(right);
                out.add_term(key, m * c);
            }
        }
    }
    out
}
