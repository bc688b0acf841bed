//! The inverse problem: given a palindromic word `(a₁, …, a_{k−1})`, find
//! every `N` with `√N = [a₀; (a₁, …, a_{k−1}, 2a₀)]`.
//!
//! Writing `C`, `B`, `A` for the word's continuant triple, the purely periodic
//! fixed point gives
//!
//! ```text
//! √N = [a₀; word, 2a₀]  ⟺  C | 2a₀·B + A  and  N = a₀² + (2a₀·B + A) / C
//! ```
//!
//! so the admissible `a₀` form one residue class `r + m·b` and `N` is a
//! quadratic in `b`. The congruence has no solution exactly when `B` and `A`
//! are both odd.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::continuant::{symmetric_triple, ContinuantTriple, SymmetricWord};
use crate::error::{Error, Result};
use crate::surd::{expand_sqrt, CfExpansion};

/// Parity of `B = Q_{k−2}` and `A = (Q_{k−2}² − (−1)^k)/Q_{k−1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParityVerdict {
    pub b_even: bool,
    pub a_even: bool,
    pub solvable: bool,
    pub k: usize,
}

pub fn theorem_condition(word: &SymmetricWord) -> Result<ParityVerdict> {
    let t = symmetric_triple(word)?;
    Ok(verdict_of(&t))
}

fn verdict_of(t: &ContinuantTriple) -> ParityVerdict {
    let b_even = t.b.is_even();
    let a_even = t.a.is_even();
    ParityVerdict {
        b_even,
        a_even,
        solvable: b_even || a_even,
        k: t.k,
    }
}

/// `a₀(b) = r + m·b` and `N(b) = alpha·b² + beta·b + gamma` for `b ≥ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Family {
    pub word: SymmetricWord,
    pub triple: ContinuantTriple,
    pub r: BigUint,
    pub m: BigUint,
    pub alpha: BigUint,
    pub beta: BigUint,
    pub gamma: BigUint,
}

impl Family {
    pub fn a0(&self, b: u64) -> BigUint {
        &self.r + &self.m * b
    }

    /// `(a₀(b), N(b))`. The polynomial and the fixed-point formula are both
    /// evaluated and must agree.
    pub fn eval(&self, b: u64) -> (BigUint, BigUint) {
        let a0 = self.a0(b);
        let bb = BigUint::from(b);
        let n = &self.alpha * &bb * &bb + &self.beta * &bb + &self.gamma;
        let (quot, rem) =
            (BigUint::from(2u32) * &a0 * &self.triple.b + &self.triple.a).div_rem(&self.triple.c);
        assert!(rem.is_zero(), "C does not divide 2a₀B + A");
        assert_eq!(
            n,
            &a0 * &a0 + quot,
            "family polynomial disagrees with fixed point"
        );
        (a0, n)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "a0 = {} + {}·b, N(b) = {}·b² + {}·b + {}",
            self.r, self.m, self.alpha, self.beta, self.gamma
        )
    }
}

pub fn family_eval(family: &Family, b: u64) -> (BigUint, BigUint) {
    family.eval(b)
}

/// Outcome of [`solve_family`]. `NoSolution` is the both-odd branch, not a
/// failure.
#[derive(Debug, Clone, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum Solution {
    Family(Family),
    NoSolution(ParityVerdict),
}

impl Solution {
    pub fn family(self) -> Option<Family> {
        match self {
            Solution::Family(f) => Some(f),
            Solution::NoSolution(_) => None,
        }
    }
}

/// `x` with `x ≡ −num · den⁻¹ (mod modulus)`, `0 ≤ x < modulus`.
fn solve_linear(num: &BigUint, den: &BigUint, modulus: &BigUint) -> BigUint {
    if modulus.is_one() {
        return BigUint::zero();
    }
    let inv = (den % modulus)
        .modinv(modulus)
        .expect("coefficient is coprime to the modulus");
    let neg = (modulus - num % modulus) % modulus;
    neg * inv % modulus
}

pub fn solve_family(word: &SymmetricWord) -> Result<Solution> {
    let triple = symmetric_triple(word)?;
    let verdict = verdict_of(&triple);
    let ContinuantTriple { c, b, a, .. } = &triple;
    let two = BigUint::from(2u32);

    // 2B·a₀ ≡ −A (mod C)
    let (residue, m) = if c.is_odd() {
        (solve_linear(a, &(&two * b), c), c.clone())
    } else if a.is_even() {
        // C even forces B odd; halve the congruence.
        let half = c / &two;
        (solve_linear(&(a / &two), b, &half), half)
    } else {
        debug_assert!(!verdict.solvable);
        return Ok(Solution::NoSolution(verdict));
    };
    debug_assert!(verdict.solvable);

    let r = if residue.is_zero() {
        m.clone()
    } else {
        residue
    };
    // N(b) = (r + mb)² + (2B(r + mb) + A)/C
    let alpha = &m * &m;
    let beta = &two * &r * &m + &two * b * &m / c;
    let (gamma_frac, rem) = (&two * b * &r + a).div_rem(c);
    assert!(
        rem.is_zero(),
        "least residue does not satisfy the congruence"
    );
    let gamma = &r * &r + gamma_frac;

    Ok(Solution::Family(Family {
        word: word.clone(),
        triple,
        r,
        m,
        alpha,
        beta,
        gamma,
    }))
}

/// Squarefree status of a candidate. `Unknown` above the factorization bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Squarefree {
    Yes,
    No,
    Unknown,
}

impl Squarefree {
    pub fn as_str(self) -> &'static str {
        match self {
            Squarefree::Yes => "true",
            Squarefree::No => "false",
            Squarefree::Unknown => "unknown",
        }
    }
}

impl fmt::Display for Squarefree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Radicands at or above the bound are not factored. Values beyond 2¹²⁸ are
/// never factored regardless of the bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorBound(pub BigUint);

impl Default for FactorBound {
    fn default() -> Self {
        FactorBound(BigUint::one() << 128u32)
    }
}

pub fn is_squarefree(n: &BigUint, bound: &FactorBound) -> Squarefree {
    if n >= &bound.0 {
        return Squarefree::Unknown;
    }
    let Some(n) = n.to_u128() else {
        return Squarefree::Unknown;
    };
    if n <= 1 {
        return Squarefree::Yes;
    }
    // cheap rejection on small squares first
    for p in [2u128, 3, 5, 7, 11, 13] {
        if n % (p * p) == 0 {
            return Squarefree::No;
        }
    }
    if num_prime::nt_funcs::factorize128(n)
        .values()
        .all(|&e| e == 1)
    {
        Squarefree::Yes
    } else {
        Squarefree::No
    }
}

/// Result of checking one `N` against an expected expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verification {
    pub word_match: bool,
    pub expansion: CfExpansion,
}

/// Compare `√N` against `[a₀; (word, 2a₀)]` element-wise.
pub fn verify_candidate(n: &BigUint, a0: &BigUint, word: &SymmetricWord) -> Result<Verification> {
    let expansion = expand_sqrt(n)?;
    let word_match = expansion.a0 == *a0
        && expansion.k() == word.period()
        && expansion.symmetric_part() == word.parts()
        && *expansion.period.last().unwrap() == a0 * 2u32;
    Ok(Verification {
        word_match,
        expansion,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateRecord {
    pub b: u64,
    pub a0: BigUint,
    pub n: BigUint,
    pub expected_period: usize,
    pub actual_period: usize,
    pub word_match: bool,
    pub squarefree: Squarefree,
}

pub fn candidate(family: &Family, b: u64, bound: &FactorBound) -> CandidateRecord {
    let (a0, n) = family.eval(b);
    let check =
        verify_candidate(&n, &a0, &family.word).expect("family members are never perfect squares");
    CandidateRecord {
        b,
        expected_period: family.word.period(),
        actual_period: check.expansion.k(),
        word_match: check.word_match,
        squarefree: is_squarefree(&n, bound),
        a0,
        n,
    }
}

/// Records for `b = 0, …, count − 1`, in order of `b`.
pub fn generate(
    word: &SymmetricWord,
    count: u64,
    bound: &FactorBound,
) -> Result<Vec<CandidateRecord>> {
    let family = solve_family(word)?
        .family()
        .ok_or_else(|| Error::NoSolution(word.to_string()))?;
    Ok(generate_from(&family, count, bound))
}

pub fn generate_from(family: &Family, count: u64, bound: &FactorBound) -> Vec<CandidateRecord> {
    (0..count)
        .into_par_iter()
        .map(|b| candidate(family, b, bound))
        .collect()
}
