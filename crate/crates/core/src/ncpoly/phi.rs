use alloc::vec::Vec;

use num_bigint::BigInt;

use super::coproduct::{coproduct_k, coproduct_word};
use super::ops::{eta, kappa, kappa_word, lambda_t_word, lambda_ub, lambda_t};
use super::poly::AbPoly;
use super::word::{AbWord, Letter};
use crate::error::Result;

// φ of every prefix of `w`, by the right-end recurrences.
fn phi_prefixes(w: AbWord) -> Vec<AbPoly> {
    let two = BigInt::from(2);
    let c = AbPoly::c();
    let two_d = AbPoly::d().scale(&two);
    let mut out: Vec<AbPoly> = Vec::with_capacity(w.len() + 1);
    out.push(AbPoly::one());
    for i in 1..=w.len() {
        let next = match w.letter(i - 1) {
            Letter::A => &out[i - 1] * &c,
            Letter::B if i == 1 => AbPoly::b().scale(&two),
            Letter::B => match w.letter(i - 2) {
                Letter::B => &out[i - 1] * &c,
                Letter::A => &out[i - 2] * &two_d,
            },
        };
        out.push(next);
    }
    out
}

pub fn phi_word(w: AbWord) -> AbPoly {
    phi_prefixes(w).pop().unwrap()
}

/// φ computed by its recurrences.
pub fn phi(p: &AbPoly) -> Result<AbPoly> {
    p.homogeneous_degree()?;
    Ok(p.linear(phi_word))
}

/// φ_t(v) = κ(v) + Σ φ(v_(1))·b·λ_t(v_(2)).
pub fn phi_t_word(w: AbWord) -> AbPoly {
    let prefixes = phi_prefixes(w);
    let b = AbPoly::b();
    let mut out = kappa_word(w);
    for (j, (_, right)) in coproduct_word(w).enumerate() {
        let tail = lambda_t_word(right);
        if !tail.is_zero() {
            out += &(&(&prefixes[j] * &b) * &tail);
        }
    }
    out
}

pub fn phi_t(p: &AbPoly) -> Result<AbPoly> {
    p.homogeneous_degree()?;
    Ok(p.linear(phi_t_word))
}

/// φ_ub by the recurrences φ_ub(v·a) = φ(v)(a-b), φ_ub(v·bb) = φ_ub(v·b)(a-b),
/// φ_ub(v·ab) = 0, with φ_ub(1) = 1 and φ_ub(b) = 0.
pub fn phi_ub_word(w: AbWord) -> AbPoly {
    let a_b = AbPoly::a_minus_b_pow(1);
    let n = w.len();
    if n == 0 {
        return AbPoly::one();
    }
    match w.letter(n - 1) {
        Letter::A => &phi_word(w.prefix(n - 1)) * &a_b,
        Letter::B if n == 1 => AbPoly::zero(),
        Letter::B => match w.letter(n - 2) {
            Letter::B => &phi_ub_word(w.prefix(n - 1)) * &a_b,
            Letter::A => AbPoly::zero(),
        },
    }
}

pub fn phi_ub(p: &AbPoly) -> Result<AbPoly> {
    p.homogeneous_degree()?;
    Ok(p.linear(phi_ub_word))
}

/// Σ_{Δ^{k-1}(v)} κ(v_1)·b·η(v_2)·b⋯b·last(v_k), with `last` applied to the
/// final factor. `k = 1` gives κ.
fn chain_sum(p: &AbPoly, k: usize, last: fn(&AbPoly) -> AbPoly) -> AbPoly {
    assert!(k >= 1);
    if k == 1 {
        return kappa(p);
    }
    let b = AbPoly::b();
    coproduct_k(p, k - 1).evaluate(|ws| {
        let mut acc = kappa(&AbPoly::monomial(ws[0]));
        for (i, w) in ws.iter().enumerate().skip(1) {
            if acc.is_zero() {
                break;
            }
            let m = AbPoly::monomial(*w);
            let f = if i == ws.len() - 1 { last(&m) } else { eta(&m) };
            acc = &(&acc * &b) * &f;
        }
        acc
    })
}

/// φ_k(v) = Σ κ(v_1)·b·η(v_2)·b⋯b·η(v_k).
pub fn phi_k(p: &AbPoly, k: usize) -> AbPoly {
    chain_sum(p, k, eta)
}

pub fn phi_t_k(p: &AbPoly, k: usize) -> AbPoly {
    chain_sum(p, k, lambda_t)
}

pub fn phi_ub_k(p: &AbPoly, k: usize) -> AbPoly {
    chain_sum(p, k, lambda_ub)
}

fn max_degree(p: &AbPoly) -> usize {
    p.terms().map(|(w, _)| w.len()).max().unwrap_or(0)
}

/// φ as the sum of the φ_k, built from iterated coproducts.
pub fn phi_by_coproduct(p: &AbPoly) -> AbPoly {
    let mut out = AbPoly::zero();
    for k in 1..=max_degree(p) + 1 {
        out += &phi_k(p, k);
    }
    out
}

pub fn phi_t_by_coproduct(p: &AbPoly) -> AbPoly {
    let mut out = AbPoly::zero();
    for k in 1..=max_degree(p) + 1 {
        out += &phi_t_k(p, k);
    }
    out
}

pub fn phi_ub_by_coproduct(p: &AbPoly) -> AbPoly {
    let mut out = AbPoly::zero();
    for k in 1..=max_degree(p) + 1 {
        out += &phi_ub_k(p, k);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncpoly::cd::{cd_expand, omega};

    fn ab(s: &str) -> AbPoly {
        s.parse().unwrap()
    }

    fn all_words(n: usize) -> impl Iterator<Item = AbWord> {
        (0u64..1 << n).map(move |bits| {
            AbWord::from_letters((0..n).map(|i| if bits >> i & 1 == 1 { Letter::B } else { Letter::A }))
        })
    }

    #[test]
    fn base_values() {
        assert_eq!(phi(&AbPoly::one()).unwrap(), AbPoly::one());
        assert_eq!(phi(&ab("b")).unwrap(), ab("2*b"));
        assert_eq!(phi_t(&ab("a")).unwrap(), ab("a"));
        assert_eq!(phi_ub(&ab("b")).unwrap(), AbPoly::zero());
        assert!(phi(&ab("a + bb")).is_err());
    }

    #[test]
    fn recurrences_match_coproduct_sums() {
        for n in 0..=5 {
            for w in all_words(n) {
                let m = AbPoly::monomial(w);
                assert_eq!(phi_word(w), phi_by_coproduct(&m), "phi {w}");
                assert_eq!(phi_t_word(w), phi_t_by_coproduct(&m), "phi_t {w}");
                assert_eq!(phi_ub_word(w), phi_ub_by_coproduct(&m), "phi_ub {w}");
            }
        }
    }

    #[test]
    fn phi_agrees_with_omega_on_a_words() {
        for n in 0..=5 {
            for v in all_words(n) {
                let w = AbWord::a().concat(v);
                let m = AbPoly::monomial(w);
                assert_eq!(phi(&m).unwrap(), cd_expand(&omega(&m).unwrap()));
            }
        }
    }

    #[test]
    fn phi_t_of_aa() {
        let expected = &AbPoly::a_minus_b_pow(2) + &AbPoly::d();
        assert_eq!(phi_t(&ab("aa")).unwrap(), expected);
        assert_eq!(phi_t_k(&ab("aa + ab"), 1), kappa(&ab("aa + ab")));
    }
}
