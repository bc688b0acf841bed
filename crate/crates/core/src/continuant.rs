//! Continuants, convergent tables and the palindrome identities behind the
//! parity condition.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub(crate) fn join(parts: &[BigUint]) -> String {
    parts
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// A palindromic word `(a₁, …, a_{k−1})` of positive partial quotients.
/// The empty word is the period-1 case.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SymmetricWord(Vec<BigUint>);

impl SymmetricWord {
    pub fn new(parts: Vec<BigUint>) -> Result<Self> {
        if let Some(p) = parts.iter().find(|p| p.is_zero()) {
            return Err(Error::InvalidPart(p.to_string()));
        }
        if !parts.iter().eq(parts.iter().rev()) {
            return Err(Error::NotPalindromic(join(&parts)));
        }
        Ok(SymmetricWord(parts))
    }

    pub fn from_u64s(parts: &[u64]) -> Result<Self> {
        Self::new(parts.iter().copied().map(BigUint::from).collect())
    }

    pub fn parts(&self) -> &[BigUint] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Period length `k` of an expansion built on this word.
    pub fn period(&self) -> usize {
        self.0.len() + 1
    }
}

impl fmt::Display for SymmetricWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(&join(&self.0))
    }
}

/// Comma-separated positive integers; whitespace around tokens is ignored and
/// the empty string is the empty word.
impl FromStr for SymmetricWord {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        if text.trim().is_empty() {
            return Ok(SymmetricWord::default());
        }
        let mut parts = Vec::new();
        for token in text.split(',') {
            let token = token.trim();
            let value: BigInt = token.parse().map_err(|_| Error::Parse {
                token: token.to_string(),
                reason: "expected a decimal integer".into(),
            })?;
            match value.to_biguint() {
                Some(v) if !v.is_zero() => parts.push(v),
                _ => return Err(Error::InvalidPart(token.to_string())),
            }
        }
        SymmetricWord::new(parts)
    }
}

pub fn parse_word(text: &str) -> Result<SymmetricWord> {
    text.parse()
}

fn check_parts(word: &[BigUint]) -> Result<()> {
    match word.iter().find(|p| p.is_zero()) {
        Some(p) => Err(Error::InvalidPart(p.to_string())),
        None => Ok(()),
    }
}

/// Prefix continuants `K(), K(a₁), K(a₁,a₂), …, K(a₁…a_n)` (length `n + 1`).
fn prefix_continuants(word: &[BigUint]) -> Vec<BigUint> {
    let mut out = Vec::with_capacity(word.len() + 1);
    let mut prev = BigUint::zero();
    let mut cur = BigUint::one();
    out.push(cur.clone());
    for a in word {
        let next = a * &cur + &prev;
        prev = std::mem::replace(&mut cur, next);
        out.push(cur.clone());
    }
    out
}

/// The continuant `K(a₁…a_n)`, i.e. the convergent denominator of the word.
/// `K() = 1`.
pub fn continuant(word: &[BigUint]) -> Result<BigUint> {
    check_parts(word)?;
    Ok(prefix_continuants(word).pop().unwrap())
}

/// Numerators `P₀…P_n` and denominators `Q₀…Q_n` of `[a₀; a₁, …, a_n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContinuantTable {
    pub numerators: Vec<BigUint>,
    pub denominators: Vec<BigUint>,
}

pub fn convergents(a0: &BigUint, word: &[BigUint]) -> Result<ContinuantTable> {
    if a0.is_zero() {
        return Err(Error::InvalidPart(a0.to_string()));
    }
    check_parts(word)?;
    let mut numerators = vec![a0.clone()];
    let mut denominators = vec![BigUint::one()];
    let (mut p_prev, mut q_prev) = (BigUint::one(), BigUint::zero());
    for a in word {
        let p = a * numerators.last().unwrap() + &p_prev;
        let q = a * denominators.last().unwrap() + &q_prev;
        p_prev = numerators.last().unwrap().clone();
        q_prev = denominators.last().unwrap().clone();
        numerators.push(p);
        denominators.push(q);
    }
    Ok(ContinuantTable {
        numerators,
        denominators,
    })
}

/// `F_n` with `F₀ = 0`, `F₁ = F₂ = 1`.
pub fn fibonacci(n: usize) -> BigUint {
    let (mut a, mut b) = (BigUint::zero(), BigUint::one());
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// `C = K(a₁…a_{k−1})`, `B = K(a₁…a_{k−2})`, `A = K(a₂…a_{k−2})` for a
/// palindromic word. For such words `C·A − B² = (−1)^{k−1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContinuantTriple {
    pub c: BigUint,
    pub b: BigUint,
    pub a: BigUint,
    pub k: usize,
}

impl ContinuantTriple {
    /// `(−1)^{k−1}`
    pub fn sign(&self) -> BigInt {
        if self.k % 2 == 1 {
            BigInt::one()
        } else {
            -BigInt::one()
        }
    }
}

pub fn symmetric_triple(word: &SymmetricWord) -> Result<ContinuantTriple> {
    let parts = word.parts();
    let k = word.period();
    let (c, b, a) = match parts.len() {
        0 => (BigUint::one(), BigUint::zero(), BigUint::one()),
        1 => (parts[0].clone(), BigUint::one(), BigUint::zero()),
        n => {
            let prefix = prefix_continuants(parts);
            let inner = prefix_continuants(&parts[1..n - 1]);
            (
                prefix[n].clone(),
                prefix[n - 1].clone(),
                inner.last().unwrap().clone(),
            )
        }
    };
    let triple = ContinuantTriple { c, b, a, k };
    check_triple(word, &triple)?;
    Ok(triple)
}

fn check_triple(word: &SymmetricWord, t: &ContinuantTriple) -> Result<()> {
    let violation = |detail: String| Error::IdentityViolation {
        word: word.to_string(),
        detail,
    };
    let c = BigInt::from(t.c.clone());
    let b = BigInt::from(t.b.clone());
    let a = BigInt::from(t.a.clone());
    let det = &c * &a - &b * &b;
    if det != t.sign() {
        return Err(violation(format!("C·A − B² = {det}")));
    }
    // B² − (−1)^k = B² + (−1)^{k−1}
    let (quot, rem) = (&b * &b + t.sign()).div_rem(&c);
    if !rem.is_zero() || quot != a {
        return Err(violation(format!(
            "(B² − (−1)^k)/C = {quot} remainder {rem}, expected {a}"
        )));
    }
    if !b.gcd(&c).is_one() {
        return Err(violation("gcd(B, C) ≠ 1".into()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(parts: &[u64]) -> Vec<BigUint> {
        parts.iter().copied().map(BigUint::from).collect()
    }

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn continuant_values() {
        assert_eq!(continuant(&[]).unwrap(), big(1));
        assert_eq!(continuant(&w(&[2, 1, 2])).unwrap(), big(8));
        assert_eq!(continuant(&w(&[2, 1, 1, 1, 2])).unwrap(), big(21));
        assert_eq!(continuant(&w(&[3, 0])), Err(Error::InvalidPart("0".into())));
    }

    #[test]
    fn convergent_tables() {
        let t = convergents(&big(4), &w(&[1, 3, 1])).unwrap();
        assert_eq!(t.denominators, w(&[1, 1, 4, 5]));
        assert_eq!(t.numerators, w(&[4, 5, 19, 24]));

        let t = convergents(&big(1), &[]).unwrap();
        assert_eq!(t.denominators, w(&[1]));
        assert_eq!(t.numerators, w(&[1]));

        let t = convergents(&big(1), &w(&[1, 1, 1])).unwrap();
        assert_eq!(t.denominators, w(&[1, 1, 2, 3]));

        assert!(convergents(&big(0), &[]).is_err());
    }

    #[test]
    fn fibonacci_values() {
        assert_eq!(fibonacci(1), big(1));
        assert_eq!(fibonacci(2), big(1));
        assert_eq!(fibonacci(6), big(8));
        assert_eq!(fibonacci(8), big(21));
    }

    #[test]
    fn fibonacci_parity() {
        for n in 1..=300 {
            assert_eq!(fibonacci(n).is_even(), n % 3 == 0, "n={n}");
        }
    }

    #[test]
    fn all_ones_follows_fibonacci() {
        for k in 1..60 {
            let ones = vec![BigUint::one(); k - 1];
            let table = convergents(&big(1), &ones).unwrap();
            for (n, q) in table.denominators.iter().enumerate().skip(1) {
                assert_eq!(*q, fibonacci(n + 1));
            }
        }
    }

    #[test]
    fn triples() {
        let t = symmetric_triple(&SymmetricWord::from_u64s(&[2, 2]).unwrap()).unwrap();
        assert_eq!((t.c, t.b, t.a, t.k), (big(5), big(2), big(1), 3));

        let t = symmetric_triple(&SymmetricWord::from_u64s(&[1, 1, 1, 1]).unwrap()).unwrap();
        assert_eq!((t.c, t.b, t.a, t.k), (big(5), big(3), big(2), 5));

        let t = symmetric_triple(&SymmetricWord::default()).unwrap();
        assert_eq!((t.c, t.b, t.a, t.k), (big(1), big(0), big(1), 1));

        let t = symmetric_triple(&SymmetricWord::from_u64s(&[7]).unwrap()).unwrap();
        assert_eq!((t.c, t.b, t.a, t.k), (big(7), big(1), big(0), 2));
    }

    #[test]
    fn parse_words() {
        assert_eq!(
            parse_word("2,1,1,2").unwrap().parts(),
            &w(&[2, 1, 1, 2])[..]
        );
        assert_eq!(parse_word(" 2 , 2 ").unwrap().parts(), &w(&[2, 2])[..]);
        assert!(parse_word("").unwrap().is_empty());
        assert_eq!(parse_word("1,2"), Err(Error::NotPalindromic("1,2".into())));
        assert_eq!(parse_word("1,0,1"), Err(Error::InvalidPart("0".into())));
        assert_eq!(parse_word("-1"), Err(Error::InvalidPart("-1".into())));
        assert!(matches!(parse_word("1,x,1"), Err(Error::Parse { .. })));
        assert!(matches!(parse_word("1,,1"), Err(Error::Parse { .. })));
        assert!(matches!(parse_word("1 2"), Err(Error::Parse { .. })));
    }
}
