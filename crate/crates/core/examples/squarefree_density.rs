//! Fraction of squarefree members among the first radicands of a family.
//!
//!     cargo run --release --example squarefree_density -- 1,1,1 2000

use cfperiod::{generate, FactorBound, Squarefree, SymmetricWord};

fn main() {
    let mut args = std::env::args().skip(1);
    let word: SymmetricWord = args
        .next()
        .unwrap_or_default()
        .parse()
        .expect("palindromic word");
    let count: u64 = args.next().map_or(1000, |c| c.parse().expect("count"));
    let records = generate(&word, count, &FactorBound::default()).expect("solvable word");

    let tally = |s| records.iter().filter(|r| r.squarefree == s).count();
    let (yes, no, unknown) = (
        tally(Squarefree::Yes),
        tally(Squarefree::No),
        tally(Squarefree::Unknown),
    );
    println!("word ({word}), first {count} members");
    println!("squarefree {yes}, not squarefree {no}, unknown {unknown}");
    println!("fraction {:.4}", yes as f64 / count as f64);
}
