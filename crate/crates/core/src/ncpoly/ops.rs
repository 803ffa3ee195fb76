use num_bigint::BigInt;

use super::poly::AbPoly;
use super::word::{AbWord, Letter};

/// κ(a^m) = (a-b)^m, zero on every other monomial.
pub fn kappa_word(w: AbWord) -> AbPoly {
    if w.is_power_of(Letter::A) {
        AbPoly::a_minus_b_pow(w.len())
    } else {
        AbPoly::zero()
    }
}

/// β(b^m) = (a-b)^m, zero on every other monomial.
pub fn beta_word(w: AbWord) -> AbPoly {
    if w.is_power_of(Letter::B) {
        AbPoly::a_minus_b_pow(w.len())
    } else {
        AbPoly::zero()
    }
}

/// η(b^m a^k) = 2(a-b)^{m+k}, zero on every other monomial.
pub fn eta_word(w: AbWord) -> AbPoly {
    match w.as_b_then_a() {
        Some(_) => AbPoly::a_minus_b_pow(w.len()).scale(&BigInt::from(2)),
        None => AbPoly::zero(),
    }
}

/// λ_t(b^m) = (a-b)^m, λ_t(b^m a) = (a-b)^{m+1}, zero otherwise.
pub fn lambda_t_word(w: AbWord) -> AbPoly {
    match w.as_b_then_a() {
        Some((_, 0)) | Some((_, 1)) => AbPoly::a_minus_b_pow(w.len()),
        _ => AbPoly::zero(),
    }
}

/// λ_ub = η - 2β.
pub fn lambda_ub_word(w: AbWord) -> AbPoly {
    if w.is_power_of(Letter::B) {
        return AbPoly::zero();
    }
    eta_word(w)
}

pub fn kappa(p: &AbPoly) -> AbPoly {
    p.linear(kappa_word)
}

pub fn beta(p: &AbPoly) -> AbPoly {
    p.linear(beta_word)
}

pub fn eta(p: &AbPoly) -> AbPoly {
    p.linear(eta_word)
}

pub fn lambda_t(p: &AbPoly) -> AbPoly {
    p.linear(lambda_t_word)
}

pub fn lambda_ub(p: &AbPoly) -> AbPoly {
    p.linear(lambda_ub_word)
}

/// Removes the last letter of each monomial; H'(1) = 0.
pub fn h_prime(p: &AbPoly) -> AbPoly {
    p.linear(|w| match w.without_last() {
        Some(v) => AbPoly::monomial(v),
        None => AbPoly::zero(),
    })
}

/// r(v·a) = v, r(v·b) = 0, r(1) = 0.
pub fn r_map(p: &AbPoly) -> AbPoly {
    p.linear(|w| match w.last() {
        Some(Letter::A) => AbPoly::monomial(w.without_last().unwrap()),
        _ => AbPoly::zero(),
    })
}
