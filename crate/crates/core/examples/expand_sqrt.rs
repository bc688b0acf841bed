//! Expand square roots into periodic continued fractions.
//!
//!     cargo run --example expand_sqrt -- 23 41 13 1000000000000000000000000000001

use cfperiod::{expand_sqrt, is_perfect_square};
use num_bigint::BigUint;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let inputs = if args.is_empty() {
        ["2", "7", "13", "23", "41", "94", "661"]
            .map(String::from)
            .to_vec()
    } else {
        args
    };
    for text in inputs {
        let Ok(n) = text.parse::<BigUint>() else {
            eprintln!("{text}: not a non-negative integer");
            continue;
        };
        if is_perfect_square(&n) {
            println!("√{n} is rational");
            continue;
        }
        let e = expand_sqrt(&n).unwrap();
        println!("√{n} = {e}  (k = {})", e.k());
    }
}
