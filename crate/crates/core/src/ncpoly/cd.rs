use alloc::collections::BTreeMap;
use alloc::string::ToString;

use num_bigint::BigInt;
use num_traits::Zero;

use super::poly::{AbPoly, CdPoly};
use super::word::{AbWord, CdLetter, CdWord, Letter};
use crate::error::{Error, Result};

/// Expands a cd-word into the ab-basis via `c = a + b`, `d = ab + ba`.
pub fn expand_word(w: CdWord) -> AbPoly {
    let mut acc = AbPoly::one();
    for l in w.letters() {
        let f = match l {
            CdLetter::C => AbPoly::c(),
            CdLetter::D => AbPoly::d(),
        };
        acc = &acc * &f;
    }
    acc
}

pub fn cd_expand(q: &CdPoly) -> AbPoly {
    q.linear(expand_word)
}

/// The ω map on a single word: each `ab` factor (scanning left to right)
/// becomes `d` with a factor of 2, every other letter becomes `c`.
pub fn omega_word(w: AbWord) -> (BigInt, CdWord) {
    let mut out = CdWord::EMPTY;
    let mut twos = 0usize;
    let mut i = 0;
    let n = w.len();
    while i < n {
        if w.letter(i) == Letter::A && i + 1 < n && w.letter(i + 1) == Letter::B {
            out = out.push(CdLetter::D);
            twos += 1;
            i += 2;
        } else {
            out = out.push(CdLetter::C);
            i += 1;
        }
    }
    (BigInt::from(1u8) << twos, out)
}

pub fn omega(p: &AbPoly) -> Result<CdPoly> {
    p.homogeneous_degree()?;
    Ok(p.linear(|w| {
        let (k, v) = omega_word(w);
        CdPoly::term(k, v)
    }))
}

// Ranks words of a fixed length left to right with `a > b`.
fn lead_key(w: AbWord) -> u64 {
    let n = w.len();
    let mut key = 0u64;
    for i in 0..n {
        if w.letter(i) == Letter::A {
            key |= 1 << (n - 1 - i);
        }
    }
    key
}

/// Rewrites a homogeneous ab-polynomial in the cd-basis. Fails with the
/// residual when `p` is not in the image of [`cd_expand`].
pub fn ab_to_cd(p: &AbPoly) -> Result<CdPoly> {
    p.homogeneous_degree()?;
    let mut residual: BTreeMap<u64, (AbWord, BigInt)> =
        p.terms().map(|(w, k)| (lead_key(w), (w, k.clone()))).collect();
    let mut out = CdPoly::zero();
    while let Some((_, (lead, k))) = residual.iter().next_back().map(|(a, b)| (*a, b.clone())) {
        let Some(cd) = leading_cd_word(lead) else {
            let rest = AbPoly::from_terms(residual.into_values());
            return Err(Error::NotCdExpressible { residual: rest.to_string() });
        };
        for (w, c) in expand_word(cd).terms() {
            let slot = residual.entry(lead_key(w)).or_insert_with(|| (w, BigInt::zero()));
            slot.1 -= c * &k;
            if slot.1.is_zero() {
                residual.remove(&lead_key(w));
            }
        }
        out.add_term(cd, k);
    }
    Ok(out)
}

// Inverse of the leading-word map c -> a, d -> ab.
fn leading_cd_word(w: AbWord) -> Option<CdWord> {
    let mut out = CdWord::EMPTY;
    let mut i = 0;
    while i < w.len() {
        match w.letter(i) {
            Letter::B => return None,
            Letter::A if i + 1 < w.len() && w.letter(i + 1) == Letter::B => {
                out = out.push(CdLetter::D);
                i += 2;
            }
            Letter::A => {
                out = out.push(CdLetter::C);
                i += 1;
            }
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab(s: &str) -> AbPoly {
        s.parse().unwrap()
    }

    fn cd(s: &str) -> CdPoly {
        s.parse().unwrap()
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega(&ab("aaa")).unwrap(), cd("ccc"));
        assert_eq!(omega(&ab("7*aab + 8*abb")).unwrap(), cd("14*cd + 16*dc"));
        assert_eq!(omega(&ab("abab")).unwrap(), cd("4*dd"));
        assert!(omega(&ab("a + ab")).is_err());
    }

    #[test]
    fn expansion_and_inverse() {
        assert_eq!(cd_expand(&cd("cc - 2*d")), ab("aa - ab - ba + bb"));
        assert_eq!(ab_to_cd(&ab("aa + ab + ba + bb")).unwrap(), cd("cc"));
        assert_eq!(ab_to_cd(&AbPoly::a_minus_b_pow(2)).unwrap(), cd("cc - 2*d"));
        let q = cd("1*ccc + 22*dc + 24*cd");
        assert_eq!(ab_to_cd(&cd_expand(&q)).unwrap(), q);
    }

    #[test]
    fn non_cd_polynomials_fail_with_residual() {
        match ab_to_cd(&ab("ab")) {
            Err(Error::NotCdExpressible { residual }) => assert_eq!(residual, "-1*ba"),
            other => panic!("unexpected {other:?}"),
        }
        assert!(ab_to_cd(&AbPoly::a_minus_b_pow(3)).is_err());
        assert!(ab_to_cd(&ab("b")).is_err());
    }
}
