use alloc::collections::BTreeMap;
use alloc::string::ToString;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::word::{AbWord, CdLetter, CdWord, Letter};
use crate::error::{Error, ParseError, Result};

/// Word types usable as polynomial monomials.
pub trait Monomial: Copy + Ord + fmt::Display {
    const ONE: Self;
    fn degree(self) -> usize;
    fn concat(self, other: Self) -> Self;
    fn reverse(self) -> Self;
    fn parse_word(s: &str) -> Result<Self, ParseError>;
}

impl Monomial for AbWord {
    const ONE: Self = AbWord::EMPTY;
    fn degree(self) -> usize {
        self.len()
    }
    fn concat(self, other: Self) -> Self {
        AbWord::concat(self, other)
    }
    fn reverse(self) -> Self {
        AbWord::reverse(self)
    }
    fn parse_word(s: &str) -> Result<Self, ParseError> {
        AbWord::parse(s)
    }
}

impl Monomial for CdWord {
    const ONE: Self = CdWord::EMPTY;
    fn degree(self) -> usize {
        CdWord::degree(self)
    }
    fn concat(self, other: Self) -> Self {
        CdWord::concat(self, other)
    }
    fn reverse(self) -> Self {
        CdWord::reverse(self)
    }
    fn parse_word(s: &str) -> Result<Self, ParseError> {
        CdWord::parse(s)
    }
}

/// Sparse polynomial with integer coefficients in noncommuting letters.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly<W: Monomial> {
    terms: BTreeMap<W, BigInt>,
}

pub type AbPoly = Poly<AbWord>;
pub type CdPoly = Poly<CdWord>;

impl<W: Monomial> Default for Poly<W> {
    fn default() -> Self {
        Poly { terms: BTreeMap::new() }
    }
}

impl<W: Monomial> Poly<W> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(W::ONE)
    }

    pub fn monomial(w: W) -> Self {
        Self::term(BigInt::one(), w)
    }

    pub fn term(k: impl Into<BigInt>, w: W) -> Self {
        let mut p = Self::zero();
        p.add_term(w, k.into());
        p
    }

    pub fn constant(k: impl Into<BigInt>) -> Self {
        Self::term(k, W::ONE)
    }

    pub fn from_terms<I: IntoIterator<Item = (W, BigInt)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (w, k) in terms {
            p.add_term(w, k);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (W, &BigInt)> + '_ {
        self.terms.iter().map(|(w, k)| (*w, k))
    }

    pub fn coefficient(&self, w: W) -> BigInt {
        self.terms.get(&w).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, w: W, k: BigInt) {
        if k.is_zero() {
            return;
        }
        let entry = self.terms.entry(w).or_default();
        *entry += k;
        if entry.is_zero() {
            self.terms.remove(&w);
        }
    }

    /// The common degree of all terms, `None` for the zero polynomial.
    pub fn homogeneous_degree(&self) -> Result<Option<usize>> {
        let mut degs = self.terms.keys().map(|w| w.degree());
        let Some(first) = degs.next() else {
            return Ok(None);
        };
        for d in degs {
            if d != first {
                return Err(Error::MixedDegree(first.min(d), first.max(d)));
            }
        }
        Ok(Some(first))
    }

    /// Word reversal, extended linearly.
    pub fn star(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, k)| (w.reverse(), k.clone())))
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Poly { terms: self.terms.iter().map(|(w, c)| (*w, c * k)).collect() }
    }

    pub fn pow(&self, m: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..m {
            acc = &acc * self;
        }
        acc
    }

    /// Extends a map on monomials linearly.
    pub fn linear<V: Monomial, F: FnMut(W) -> Poly<V>>(&self, mut f: F) -> Poly<V> {
        let mut out = Poly::zero();
        for (w, k) in &self.terms {
            let img = f(*w);
            for (v, c) in img.terms {
                out.add_term(v, c * k);
            }
        }
        out
    }

    pub fn is_even(&self) -> bool {
        self.terms.values().all(|k| k.is_even())
    }

    /// Divides every coefficient by two, failing on an odd coefficient.
    pub fn halve(&self, what: &str) -> Result<Self> {
        if !self.is_even() {
            return Err(Error::OddCoefficient { what: what.to_string() });
        }
        let two = BigInt::from(2);
        Ok(Poly { terms: self.terms.iter().map(|(w, k)| (*w, k / &two)).collect() })
    }

    pub fn parse(s: &str) -> Result<Self, ParseError> {
        let s: alloc::string::String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(ParseError::new(0, "empty polynomial"));
        }
        let mut p = Self::zero();
        let bytes = s.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let mut negative = false;
            if bytes[i] == b'+' || bytes[i] == b'-' {
                negative = bytes[i] == b'-';
                i += 1;
            } else if i > 0 {
                return Err(ParseError::new(0, "expected `+` or `-` between terms"));
            }
            let start = i;
            while i < bytes.len() && bytes[i] != b'+' && bytes[i] != b'-' {
                i += 1;
            }
            let token = &s[start..i];
            if token.is_empty() {
                return Err(ParseError::new(0, "missing term after sign"));
            }
            let (coef, word) = match token.split_once('*') {
                Some((k, w)) => (parse_coefficient(k)?, W::parse_word(w)?),
                None if token.bytes().all(|b| b.is_ascii_digit()) => {
                    (parse_coefficient(token)?, W::ONE)
                }
                None => (BigInt::one(), W::parse_word(token)?),
            };
            p.add_term(word, if negative { -coef } else { coef });
        }
        Ok(p)
    }
}

fn parse_coefficient(s: &str) -> Result<BigInt, ParseError> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseError::new(0, "coefficient must be a nonnegative integer"));
    }
    BigInt::from_str(s).map_err(|_| ParseError::new(0, "bad coefficient"))
}

impl<W: Monomial> FromStr for Poly<W> {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        Self::parse(s)
    }
}

impl<W: Monomial> fmt::Display for Poly<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (w, k)) in self.terms.iter().enumerate() {
            match (i, k.is_negative()) {
                (0, false) => write!(f, "{k}*{w}")?,
                (0, true) => write!(f, "-{}*{w}", k.abs())?,
                (_, false) => write!(f, " + {k}*{w}")?,
                (_, true) => write!(f, " - {}*{w}", k.abs())?,
            }
        }
        Ok(())
    }
}

impl<W: Monomial> fmt::Debug for Poly<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<W: Monomial> AddAssign<&Poly<W>> for Poly<W> {
    fn add_assign(&mut self, rhs: &Poly<W>) {
        for (w, k) in &rhs.terms {
            self.add_term(*w, k.clone());
        }
    }
}

impl<W: Monomial> SubAssign<&Poly<W>> for Poly<W> {
    fn sub_assign(&mut self, rhs: &Poly<W>) {
        for (w, k) in &rhs.terms {
            self.add_term(*w, -k);
        }
    }
}

impl<W: Monomial> Add for &Poly<W> {
    type Output = Poly<W>;
    fn add(self, rhs: &Poly<W>) -> Poly<W> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<W: Monomial> Sub for &Poly<W> {
    type Output = Poly<W>;
    fn sub(self, rhs: &Poly<W>) -> Poly<W> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<W: Monomial> Mul for &Poly<W> {
    type Output = Poly<W>;
    fn mul(self, rhs: &Poly<W>) -> Poly<W> {
        let mut out = Poly::zero();
        for (u, k) in &self.terms {
            for (v, c) in &rhs.terms {
                out.add_term(u.concat(*v), k * c);
            }
        }
        out
    }
}

impl<W: Monomial> Neg for &Poly<W> {
    type Output = Poly<W>;
    fn neg(self) -> Poly<W> {
        Poly { terms: self.terms.iter().map(|(w, k)| (*w, -k)).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<W: Monomial> $tr for Poly<W> {
            type Output = Poly<W>;
            fn $m(self, rhs: Poly<W>) -> Poly<W> {
                (&self).$m(&rhs)
            }
        }
        impl<W: Monomial> $tr<&Poly<W>> for Poly<W> {
            type Output = Poly<W>;
            fn $m(self, rhs: &Poly<W>) -> Poly<W> {
                (&self).$m(rhs)
            }
        }
        impl<W: Monomial> $tr<Poly<W>> for &Poly<W> {
            type Output = Poly<W>;
            fn $m(self, rhs: Poly<W>) -> Poly<W> {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<W: Monomial> Neg for Poly<W> {
    type Output = Poly<W>;
    fn neg(self) -> Poly<W> {
        -&self
    }
}

impl AbPoly {
    pub fn letter(l: Letter) -> Self {
        Self::monomial(AbWord::from_letters([l]))
    }

    pub fn a() -> Self {
        Self::letter(Letter::A)
    }

    pub fn b() -> Self {
        Self::letter(Letter::B)
    }

    /// `c = a + b`.
    pub fn c() -> Self {
        &Self::a() + &Self::b()
    }

    /// `d = ab + ba`.
    pub fn d() -> Self {
        let ab = AbWord::from_letters([Letter::A, Letter::B]);
        let ba = AbWord::from_letters([Letter::B, Letter::A]);
        &Self::monomial(ab) + &Self::monomial(ba)
    }

    /// `(a - b)^m`.
    pub fn a_minus_b_pow(m: usize) -> Self {
        (&Self::a() - &Self::b()).pow(m)
    }
}

impl CdPoly {
    pub fn c() -> Self {
        Self::monomial(CdWord::from_letters([CdLetter::C]))
    }

    pub fn d() -> Self {
        Self::monomial(CdWord::from_letters([CdLetter::D]))
    }

    pub fn c_pow(m: usize) -> Self {
        Self::monomial(CdWord::c_power(m))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab(s: &str) -> AbPoly {
        s.parse().unwrap()
    }

    #[test]
    fn products() {
        assert_eq!(&AbPoly::a() * &AbPoly::b(), ab("ab"));
        assert_eq!(AbPoly::a_minus_b_pow(2), ab("aa - ab - ba + bb"));
        let c2_2d = &AbPoly::c().pow(2) - &AbPoly::d().scale(&BigInt::from(2));
        assert_eq!(c2_2d, ab("aa - ab - ba + bb"));
    }

    #[test]
    fn star_reverses_words() {
        assert_eq!(ab("aab").star(), ab("baa"));
        assert_eq!(ab("7*aab + 8*abb").star(), ab("7*baa + 8*bba"));
    }

    #[test]
    fn text_round_trip() {
        let p = ab("1*aa + 2*ba + 6*ab + 6*bb");
        assert_eq!(p.to_string(), "1*aa + 2*ba + 6*ab + 6*bb");
        let q: CdPoly = "1*ccc + 22*dc + 24*cd".parse().unwrap();
        assert_eq!(q.to_string(), "1*ccc + 22*dc + 24*cd");
        let r = ab("-3*1 + 2*ab - 5*bb");
        assert_eq!(r.to_string(), "-3*1 + 2*ab - 5*bb");
        assert_eq!(ab(&r.to_string()), r);
        assert_eq!(AbPoly::zero().to_string(), "0");
        assert_eq!(ab("0"), AbPoly::zero());
    }

    #[test]
    fn degree_checks() {
        assert_eq!(ab("aa + bb").homogeneous_degree(), Ok(Some(2)));
        assert!(ab("a + bb").homogeneous_degree().is_err());
        assert_eq!(AbPoly::zero().homogeneous_degree(), Ok(None));
    }

    #[test]
    fn parse_errors() {
        assert!("2*ab +".parse::<AbPoly>().is_err());
        assert!("2*ac".parse::<AbPoly>().is_err());
        assert!("x".parse::<CdPoly>().is_err());
    }
}
