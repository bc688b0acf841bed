//! The word recipe that keeps `Q_{k−1}` odd for every period `k`, its
//! Fibonacci closed forms, and the comparison against the uncorrected recipe.

use num_bigint::BigUint;
use num_integer::Integer;

use crate::continuant::{continuant, fibonacci, SymmetricWord};

fn framed_ones(k: usize) -> SymmetricWord {
    let mut parts = vec![BigUint::from(1u32); k - 1];
    parts[0] = BigUint::from(2u32);
    parts[k - 2] = BigUint::from(2u32);
    SymmetricWord::new(parts).expect("framed word is palindromic")
}

fn all_ones(k: usize) -> SymmetricWord {
    SymmetricWord::new(vec![BigUint::from(1u32); k - 1]).expect("all-ones word is palindromic")
}

/// `()` for `k = 1`; `(2, 1, …, 1, 2)` when `3 | k`; `(1, …, 1)` otherwise.
/// The word has length `k − 1`.
pub fn choose_word(k: usize) -> SymmetricWord {
    assert!(k >= 1, "period must be positive");
    if k > 1 && k.is_multiple_of(3) {
        framed_ones(k)
    } else {
        all_ones(k)
    }
}

/// The recipe with its two cases swapped. `k = 2` gives `(2)`.
pub fn original_word(k: usize) -> SymmetricWord {
    assert!(k >= 2, "original recipe starts at k = 2");
    if k.is_multiple_of(3) {
        all_ones(k)
    } else {
        framed_ones(k)
    }
}

/// `2F_k + F_{k−1}` when `3 | k`, `F_k` otherwise.
pub fn fib_closed_form(k: usize) -> BigUint {
    if k.is_multiple_of(3) {
        fibonacci(k) * 2u32 + fibonacci(k - 1)
    } else {
        fibonacci(k)
    }
}

/// `2F_k + F_{k−1} + F_{k+2}`, the closed form as it stood before correction.
pub fn erroneous_closed_form(k: usize) -> BigUint {
    fibonacci(k) * 2u32 + fibonacci(k - 1) + fibonacci(k + 2)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityReport {
    pub k: usize,
    pub word: SymmetricWord,
    pub q_k_minus_1: BigUint,
    pub is_odd: bool,
    pub fib_identity_value: BigUint,
    pub identity_holds: bool,
}

pub fn parity_report(k: usize) -> ParityReport {
    let word = choose_word(k);
    let q = continuant(word.parts()).expect("recipe parts are positive");
    let closed = fib_closed_form(k);
    ParityReport {
        k,
        is_odd: q.is_odd(),
        identity_holds: q == closed,
        fib_identity_value: closed,
        q_k_minus_1: q,
        word,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ErrataRow {
    pub k: usize,
    pub corrected_word: SymmetricWord,
    pub original_word: SymmetricWord,
    pub corrected_q: BigUint,
    pub original_q: BigUint,
    pub corrected_odd: bool,
    pub original_odd: bool,
    /// Only for `3 | k`.
    pub erroneous_formula_value: Option<BigUint>,
}

impl ErrataRow {
    pub fn new(k: usize) -> Self {
        let corrected_word = choose_word(k);
        let original_word = original_word(k);
        let corrected_q = continuant(corrected_word.parts()).unwrap();
        let original_q = continuant(original_word.parts()).unwrap();
        ErrataRow {
            k,
            corrected_odd: corrected_q.is_odd(),
            original_odd: original_q.is_odd(),
            erroneous_formula_value: k.is_multiple_of(3).then(|| erroneous_closed_form(k)),
            corrected_word,
            original_word,
            corrected_q,
            original_q,
        }
    }
}

/// Rows for `k = 2, …, k_max`.
pub fn errata_table(k_max: usize) -> Vec<ErrataRow> {
    (2..=k_max).map(ErrataRow::new).collect()
}
