//! Continued fraction expansion of `√N` by the exact `(m, d, a)` recurrence.
//!
//! Starting from `m₀ = 0`, `d₀ = 1`, `a₀ = ⌊√N⌋`:
//!
//! ```text
//! m' = d·a − m
//! d' = (N − m'²) / d
//! a' = ⌊(a₀ + m') / d'⌋
//! ```
//!
//! The period is found by detecting the first repeated `(m, d)` state, which
//! needs no knowledge about where the expansion becomes periodic. Radicands
//! below 2⁶² run the same recurrence on machine words.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};

const SMALL_LIMIT: u64 = 1 << 62;

/// `⌊√n⌋`.
pub fn isqrt(n: &BigUint) -> BigUint {
    n.sqrt()
}

pub fn is_perfect_square(n: &BigUint) -> bool {
    let r = isqrt(n);
    &r * &r == *n
}

/// `⌊√N⌋` together with the shortest repeating block `(a₁, …, a_k)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CfExpansion {
    pub a0: BigUint,
    pub period: Vec<BigUint>,
}

impl CfExpansion {
    /// Period length `k`.
    pub fn k(&self) -> usize {
        self.period.len()
    }

    /// The block `(a₁, …, a_{k−1})` preceding the closing `2a₀`.
    pub fn symmetric_part(&self) -> &[BigUint] {
        &self.period[..self.period.len() - 1]
    }
}

impl fmt::Display for CfExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}; (", self.a0)?;
        for (i, a) in self.period.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str(")]")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct State<T> {
    m: T,
    d: T,
}

struct Recurrence<T> {
    n: T,
    a0: T,
}

impl<T: Integer + Clone> Recurrence<T> {
    fn new(n: T, a0: T) -> Self {
        Recurrence { n, a0 }
    }

    fn start(&self) -> State<T> {
        State {
            m: T::zero(),
            d: T::one(),
        }
    }

    fn quotient(&self, s: &State<T>) -> T {
        (self.a0.clone() + s.m.clone()) / s.d.clone()
    }

    fn step(&self, s: &State<T>) -> State<T> {
        let a = self.quotient(s);
        let m = s.d.clone() * a - s.m.clone();
        let (d, rem) = (self.n.clone() - m.clone() * m.clone()).div_rem(&s.d);
        assert!(rem.is_zero(), "d does not divide N − m² exactly");
        let two_a0 = self.a0.clone() + self.a0.clone();
        assert!(m <= self.a0, "m exceeds a₀");
        assert!(!d.is_zero() && d <= two_a0, "d outside [1, 2a₀]");
        State { m, d }
    }

    /// `(μ, λ)`: index of the first state on the cycle and the cycle length
    /// (Brent's cycle detection).
    fn cycle(&self) -> (usize, usize) {
        let x0 = self.start();
        let mut power = 1usize;
        let mut lam = 1usize;
        let mut tortoise = x0.clone();
        let mut hare = self.step(&x0);
        while tortoise != hare {
            if power == lam {
                tortoise = hare.clone();
                power *= 2;
                lam = 0;
            }
            hare = self.step(&hare);
            lam += 1;
        }

        let mut tortoise = x0.clone();
        let mut hare = x0;
        for _ in 0..lam {
            hare = self.step(&hare);
        }
        let mut mu = 0usize;
        while tortoise != hare {
            tortoise = self.step(&tortoise);
            hare = self.step(&hare);
            mu += 1;
        }
        (mu, lam)
    }

    fn period(&self) -> Vec<T> {
        let (mu, lam) = self.cycle();
        assert_eq!(mu, 1, "expansion of √N must be periodic from a₁");
        let mut s = self.step(&self.start());
        let mut out = Vec::with_capacity(lam);
        for _ in 0..lam {
            out.push(self.quotient(&s));
            s = self.step(&s);
        }
        out
    }

    fn period_len(&self) -> usize {
        let (mu, lam) = self.cycle();
        assert_eq!(mu, 1, "expansion of √N must be periodic from a₁");
        lam
    }

    /// Period read off by stopping at the first `a_i = 2a₀` with `i ≥ 1`.
    fn period_until_terminal(&self) -> Vec<T> {
        let two_a0 = self.a0.clone() + self.a0.clone();
        let mut s = self.step(&self.start());
        let mut out = Vec::new();
        loop {
            let a = self.quotient(&s);
            let done = a == two_a0;
            out.push(a);
            if done {
                return out;
            }
            s = self.step(&s);
        }
    }
}

enum Radicand {
    Small(Recurrence<u64>),
    Big(Recurrence<BigUint>),
}

impl Radicand {
    fn new(n: &BigUint) -> Result<Self> {
        let a0 = isqrt(n);
        if &a0 * &a0 == *n {
            return Err(Error::PerfectSquare(n.clone()));
        }
        Ok(match n.to_u64() {
            Some(small) if small < SMALL_LIMIT => {
                Radicand::Small(Recurrence::new(small, a0.to_u64().unwrap()))
            }
            _ => Radicand::Big(Recurrence::new(n.clone(), a0)),
        })
    }

    fn a0(&self) -> BigUint {
        match self {
            Radicand::Small(r) => BigUint::from(r.a0),
            Radicand::Big(r) => r.a0.clone(),
        }
    }
}

fn widen(v: Vec<u64>) -> Vec<BigUint> {
    v.into_iter().map(BigUint::from).collect()
}

/// Expand `√N` into `[a₀; (a₁, …, a_k)]` with the exact minimal period.
pub fn expand_sqrt(n: &BigUint) -> Result<CfExpansion> {
    let rad = Radicand::new(n)?;
    let period = match &rad {
        Radicand::Small(r) => widen(r.period()),
        Radicand::Big(r) => r.period(),
    };
    Ok(CfExpansion {
        a0: rad.a0(),
        period,
    })
}

pub fn period_length(n: &BigUint) -> Result<usize> {
    Ok(match Radicand::new(n)? {
        Radicand::Small(r) => r.period_len(),
        Radicand::Big(r) => r.period_len(),
    })
}

/// Expansion obtained with the `a_i = 2a₀` stopping rule instead of state
/// repetition. Kept as an independent route for cross-checking.
pub fn expand_sqrt_until_terminal(n: &BigUint) -> Result<CfExpansion> {
    let rad = Radicand::new(n)?;
    let period = match &rad {
        Radicand::Small(r) => widen(r.period_until_terminal()),
        Radicand::Big(r) => r.period_until_terminal(),
    };
    Ok(CfExpansion {
        a0: rad.a0(),
        period,
    })
}

/// Same as [`expand_sqrt`] but always on unbounded integers.
#[doc(hidden)]
pub fn expand_sqrt_unbounded(n: &BigUint) -> Result<CfExpansion> {
    let a0 = isqrt(n);
    if &a0 * &a0 == *n {
        return Err(Error::PerfectSquare(n.clone()));
    }
    let rec = Recurrence::new(n.clone(), a0.clone());
    Ok(CfExpansion {
        a0,
        period: rec.period(),
    })
}
