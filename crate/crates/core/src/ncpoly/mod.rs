//! Noncommutative polynomials in `a`, `b` and in `c`, `d`, with the
//! coproduct and the linear operators built on it.

pub mod cd;
pub mod coproduct;
pub mod ops;
pub mod phi;
pub mod poly;
pub mod word;

pub use cd::{ab_to_cd, cd_expand, omega};
pub use coproduct::{coproduct, coproduct_k, TensorSum};
pub use ops::{beta, eta, h_prime, kappa, lambda_t, lambda_ub, r_map};
pub use phi::{phi, phi_t, phi_ub};
pub use poly::{AbPoly, CdPoly, Monomial, Poly};
pub use word::{AbWord, CdLetter, CdWord, Letter};
