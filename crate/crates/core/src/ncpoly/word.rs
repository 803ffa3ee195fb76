use core::cmp::Ordering;
use core::fmt;

use crate::error::ParseError;

/// Longest word either word type can hold.
pub const MAX_WORD_LEN: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    A,
    B,
}

/// A monomial in the noncommuting letters `a` and `b`.
///
/// Letter `i` (counting from the left, starting at zero) is stored in bit `i`
/// of `bits`, with `b = 1`. The derived order compares the length first and
/// then the letters from the right end, which is the canonical term order used
/// for printing.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AbWord {
    len: u8,
    bits: u64,
}

impl AbWord {
    pub const EMPTY: AbWord = AbWord { len: 0, bits: 0 };

    pub fn a() -> Self {
        AbWord { len: 1, bits: 0 }
    }

    pub fn b() -> Self {
        AbWord { len: 1, bits: 1 }
    }

    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut w = AbWord::EMPTY;
        for l in letters {
            w = w.push(l);
        }
        w
    }

    /// `letter^m`.
    pub fn power(letter: Letter, m: usize) -> Self {
        assert!(m <= MAX_WORD_LEN, "ab-word longer than {MAX_WORD_LEN} letters");
        let bits = match letter {
            Letter::A => 0,
            Letter::B => low_mask(m),
        };
        AbWord { len: m as u8, bits }
    }

    pub fn len(self) -> usize {
        self.len as usize
    }

    pub fn is_empty(self) -> bool {
        self.len == 0
    }

    pub fn letter(self, i: usize) -> Letter {
        debug_assert!(i < self.len());
        if (self.bits >> i) & 1 == 1 {
            Letter::B
        } else {
            Letter::A
        }
    }

    pub fn letters(self) -> impl Iterator<Item = Letter> {
        (0..self.len()).map(move |i| self.letter(i))
    }

    pub fn first(self) -> Option<Letter> {
        (!self.is_empty()).then(|| self.letter(0))
    }

    pub fn last(self) -> Option<Letter> {
        (!self.is_empty()).then(|| self.letter(self.len() - 1))
    }

    pub fn count_b(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn push(self, l: Letter) -> Self {
        assert!(self.len() < MAX_WORD_LEN, "ab-word longer than {MAX_WORD_LEN} letters");
        let bit = match l {
            Letter::A => 0,
            Letter::B => 1u64 << self.len,
        };
        AbWord { len: self.len + 1, bits: self.bits | bit }
    }

    pub fn concat(self, other: AbWord) -> Self {
        let len = self.len() + other.len();
        assert!(len <= MAX_WORD_LEN, "ab-word longer than {MAX_WORD_LEN} letters");
        let bits = if other.len == 0 { self.bits } else { self.bits | (other.bits << self.len) };
        AbWord { len: len as u8, bits }
    }

    /// Letters `start..end`.
    pub fn slice(self, start: usize, end: usize) -> Self {
        assert!(start <= end && end <= self.len());
        let len = end - start;
        let bits = if len == 0 { 0 } else { (self.bits >> start) & low_mask(len) };
        AbWord { len: len as u8, bits }
    }

    pub fn prefix(self, n: usize) -> Self {
        self.slice(0, n)
    }

    /// The word with its last letter removed, or `None` for the empty word.
    pub fn without_last(self) -> Option<Self> {
        (!self.is_empty()).then(|| self.prefix(self.len() - 1))
    }

    pub fn reverse(self) -> Self {
        let n = self.len();
        let mut bits = 0u64;
        for i in 0..n {
            if (self.bits >> i) & 1 == 1 {
                bits |= 1 << (n - 1 - i);
            }
        }
        AbWord { len: self.len, bits }
    }

    /// True when every letter equals `l` (the empty word qualifies).
    pub fn is_power_of(self, l: Letter) -> bool {
        match l {
            Letter::A => self.bits == 0,
            Letter::B => self.bits == low_mask(self.len()),
        }
    }

    /// Splits `b^m a^k` into `(m, k)`.
    pub fn as_b_then_a(self) -> Option<(usize, usize)> {
        let m = self.bits.trailing_ones() as usize;
        let m = m.min(self.len());
        let rest = self.slice(m, self.len());
        rest.is_power_of(Letter::A).then(|| (m, rest.len()))
    }

    pub fn parse(s: &str) -> Result<Self, ParseError> {
        let s = s.trim();
        if s == "1" {
            return Ok(AbWord::EMPTY);
        }
        if s.is_empty() || s.len() > MAX_WORD_LEN {
            return Err(ParseError::new(0, "ab-word must have 1 to 64 letters or be `1`"));
        }
        let mut w = AbWord::EMPTY;
        for ch in s.chars() {
            w = w.push(match ch {
                'a' => Letter::A,
                'b' => Letter::B,
                _ => return Err(ParseError::new(0, "ab-word letters must be `a` or `b`")),
            });
        }
        Ok(w)
    }
}

impl fmt::Display for AbWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        for l in self.letters() {
            f.write_str(match l {
                Letter::A => "a",
                Letter::B => "b",
            })?;
        }
        Ok(())
    }
}

impl fmt::Debug for AbWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CdLetter {
    C,
    D,
}

impl CdLetter {
    pub fn degree(self) -> usize {
        match self {
            CdLetter::C => 1,
            CdLetter::D => 2,
        }
    }
}

/// A monomial in `c` (degree 1) and `d` (degree 2). Same bit layout as
/// [`AbWord`] with `d = 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct CdWord {
    len: u8,
    bits: u64,
}

impl CdWord {
    pub const EMPTY: CdWord = CdWord { len: 0, bits: 0 };

    pub fn from_letters<I: IntoIterator<Item = CdLetter>>(letters: I) -> Self {
        let mut w = CdWord::EMPTY;
        for l in letters {
            w = w.push(l);
        }
        w
    }

    pub fn c_power(m: usize) -> Self {
        assert!(m <= MAX_WORD_LEN, "cd-word longer than {MAX_WORD_LEN} letters");
        CdWord { len: m as u8, bits: 0 }
    }

    pub fn len(self) -> usize {
        self.len as usize
    }

    pub fn is_empty(self) -> bool {
        self.len == 0
    }

    pub fn degree(self) -> usize {
        self.len() + self.bits.count_ones() as usize
    }

    pub fn letter(self, i: usize) -> CdLetter {
        if (self.bits >> i) & 1 == 1 {
            CdLetter::D
        } else {
            CdLetter::C
        }
    }

    pub fn letters(self) -> impl Iterator<Item = CdLetter> {
        (0..self.len()).map(move |i| self.letter(i))
    }

    pub fn push(self, l: CdLetter) -> Self {
        assert!(self.len() < MAX_WORD_LEN, "cd-word longer than {MAX_WORD_LEN} letters");
        let bit = match l {
            CdLetter::C => 0,
            CdLetter::D => 1u64 << self.len,
        };
        CdWord { len: self.len + 1, bits: self.bits | bit }
    }

    pub fn concat(self, other: CdWord) -> Self {
        let len = self.len() + other.len();
        assert!(len <= MAX_WORD_LEN, "cd-word longer than {MAX_WORD_LEN} letters");
        let bits = if other.len == 0 { self.bits } else { self.bits | (other.bits << self.len) };
        CdWord { len: len as u8, bits }
    }

    pub fn reverse(self) -> Self {
        CdWord::from_letters(self.letters().collect::<alloc::vec::Vec<_>>().into_iter().rev())
    }

    pub fn parse(s: &str) -> Result<Self, ParseError> {
        let s = s.trim();
        if s == "1" {
            return Ok(CdWord::EMPTY);
        }
        if s.is_empty() || s.len() > MAX_WORD_LEN {
            return Err(ParseError::new(0, "cd-word must have 1 to 64 letters or be `1`"));
        }
        let mut w = CdWord::EMPTY;
        for ch in s.chars() {
            w = w.push(match ch {
                'c' => CdLetter::C,
                'd' => CdLetter::D,
                _ => return Err(ParseError::new(0, "cd-word letters must be `c` or `d`")),
            });
        }
        Ok(w)
    }
}

// Degree first, then letters compared from the right end with c < d.
impl Ord for CdWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let mut i = self.len();
            let mut j = other.len();
            while i > 0 && j > 0 {
                i -= 1;
                j -= 1;
                let o = self.letter(i).cmp(&other.letter(j));
                if o != Ordering::Equal {
                    return o;
                }
            }
            i.cmp(&j)
        })
    }
}

impl PartialOrd for CdWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for CdWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        for l in self.letters() {
            f.write_str(match l {
                CdLetter::C => "c",
                CdLetter::D => "d",
            })?;
        }
        Ok(())
    }
}

impl fmt::Debug for CdWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn concat_and_slice() {
        let w = AbWord::parse("aab").unwrap();
        assert_eq!(w.concat(AbWord::parse("ba").unwrap()).to_string(), "aabba");
        assert_eq!(w.slice(1, 3).to_string(), "ab");
        assert_eq!(w.reverse().to_string(), "baa");
        assert_eq!(AbWord::EMPTY.to_string(), "1");
    }

    #[test]
    fn term_order_reads_from_the_right() {
        let mut ws: alloc::vec::Vec<AbWord> =
            ["bb", "ab", "ba", "aa"].iter().map(|s| AbWord::parse(s).unwrap()).collect();
        ws.sort();
        let names: alloc::vec::Vec<_> = ws.iter().map(|w| w.to_string()).collect();
        assert_eq!(names, ["aa", "ba", "ab", "bb"]);

        let mut cs: alloc::vec::Vec<CdWord> =
            ["cd", "dc", "ccc"].iter().map(|s| CdWord::parse(s).unwrap()).collect();
        cs.sort();
        let names: alloc::vec::Vec<_> = cs.iter().map(|w| w.to_string()).collect();
        assert_eq!(names, ["ccc", "dc", "cd"]);
    }

    #[test]
    fn b_then_a_shape() {
        assert_eq!(AbWord::parse("bba").unwrap().as_b_then_a(), Some((2, 1)));
        assert_eq!(AbWord::parse("1").unwrap().as_b_then_a(), Some((0, 0)));
        assert_eq!(AbWord::parse("bab").unwrap().as_b_then_a(), None);
        assert_eq!(AbWord::power(Letter::B, 64).as_b_then_a(), Some((64, 0)));
    }

    #[test]
    fn rejects_bad_letters() {
        assert!(AbWord::parse("abc").is_err());
        assert!(CdWord::parse("ca").is_err());
    }
}
