//! The recipe word for each period `k`, with `Q_{k−1}` and its Fibonacci
//! closed form, plus the first few radicands of the resulting family.

use cfperiod::{generate, parity_report, FactorBound};

fn main() {
    let k_max: usize = std::env::args()
        .nth(1)
        .map_or(15, |k| k.parse().expect("k_max"));
    let bound = FactorBound::default();
    for k in 1..=k_max {
        let r = parity_report(k);
        let records = generate(&r.word, 3, &bound).expect("recipe words are solvable");
        let ns: Vec<String> = records
            .iter()
            .filter(|c| c.word_match)
            .map(|c| c.n.to_string())
            .collect();
        println!(
            "k = {k:>2}  ({})  Q = {}  odd: {}  closed form: {}  N ∈ {{{}}}",
            r.word,
            r.q_k_minus_1,
            r.is_odd,
            r.identity_holds,
            ns.join(", ")
        );
    }
}
