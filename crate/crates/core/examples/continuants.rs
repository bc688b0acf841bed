//! Continuants, convergents and the palindrome triple `(C, B, A)`.

use cfperiod::{continuant, convergents, expand_sqrt, symmetric_triple, SymmetricWord};
use num_bigint::BigUint;

fn main() {
    // convergents of √23 = [4; (1,3,1,8)] just before the period closes
    let n = BigUint::from(23u32);
    let e = expand_sqrt(&n).unwrap();
    let table = convergents(&e.a0, e.symmetric_part()).unwrap();
    for (p, q) in table.numerators.iter().zip(&table.denominators) {
        println!(
            "{p}/{q}  p² − 23q² = {}",
            num_bigint::BigInt::from(p * p) - num_bigint::BigInt::from(&n * q * q)
        );
    }

    for text in ["", "3", "2,2", "1,1,1,1", "2,1,1,1,2", "5,1,3,1,5"] {
        let word: SymmetricWord = text.parse().unwrap();
        let t = symmetric_triple(&word).unwrap();
        let reversed: Vec<BigUint> = word.parts().iter().rev().cloned().collect();
        assert_eq!(
            continuant(word.parts()).unwrap(),
            continuant(&reversed).unwrap()
        );
        println!(
            "({word}): k = {}, C = {}, B = {}, A = {}, C·A − B² = {}",
            t.k,
            t.c,
            t.b,
            t.a,
            t.sign()
        );
    }
}
