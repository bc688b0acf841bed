//! Build every `N` whose expansion has a given period word and verify the
//! first few against a direct expansion.
//!
//!     cargo run --example construct_family -- 2,1,1,1,2 12

use cfperiod::{generate, solve_family, FactorBound, Solution, SymmetricWord};

fn main() {
    let mut args = std::env::args().skip(1);
    let word: SymmetricWord = args
        .next()
        .unwrap_or_else(|| "2,2".into())
        .parse()
        .expect("palindromic word");
    let count: u64 = args.next().map_or(8, |c| c.parse().expect("count"));

    match solve_family(&word).unwrap() {
        Solution::NoSolution(v) => {
            println!(
                "({word}): B and A both odd (k = {}), no radicand exists",
                v.k
            );
            return;
        }
        Solution::Family(f) => println!("({word}): {f}"),
    }
    for r in generate(&word, count, &FactorBound::default()).unwrap() {
        let status = if r.word_match {
            "match".to_string()
        } else {
            format!("collapsed to period {}", r.actual_period)
        };
        println!(
            "b = {:>3}  a0 = {:>6}  N = {:>14}  squarefree: {:<7}  {status}",
            r.b, r.a0, r.n, r.squarefree
        );
    }
}
