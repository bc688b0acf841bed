//! Decide which palindromic words can occur as the period of some `√N`.
//!
//!     cargo run --example parity_check -- 1,1 2,2 1,2,1

use cfperiod::{theorem_condition, SymmetricWord};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let words = if args.is_empty() {
        [
            "", "1", "1,1", "2,2", "1,1,1", "1,2,1", "3,3", "1,1,1,1", "2,1,1,2",
        ]
        .map(String::from)
        .to_vec()
    } else {
        args
    };
    for text in words {
        match text
            .parse::<SymmetricWord>()
            .and_then(|w| theorem_condition(&w).map(|v| (w, v)))
        {
            Ok((w, v)) => println!(
                "({w:<9}) k = {}  B even: {:<5}  A even: {:<5}  {}",
                v.k,
                v.b_even,
                v.a_even,
                if v.solvable {
                    "solvable"
                } else {
                    "no N exists"
                }
            ),
            Err(e) => println!("{text}: {e}"),
        }
    }
}
