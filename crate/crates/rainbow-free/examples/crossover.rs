//! Sweep the exact integer optimum of the two-part construction against the
//! bipartite bound floor(n^2/4)^3 and locate the first crossing.
//!
//! ```bash
//! cargo run --release --example crossover
//! ```

use rainbow_free::objective::{crossover_n, discrete_best};

fn main() {
    println!(
        "{:>4} {:>7} {:>12} {:>12}  beats",
        "n", "best_a", "product", "bound"
    );
    for n in 2..=20 {
        let row = discrete_best(n).unwrap();
        println!(
            "{:>4} {:>7} {:>12} {:>12}  {}",
            row.n,
            row.best_a,
            row.product,
            row.frankl_bound,
            if row.beats_frankl { "yes" } else { "-" }
        );
    }
    println!();
    match crossover_n(30).unwrap() {
        Some(n) => println!("first n whose optimal product beats the bound: {n}"),
        None => println!("no crossing up to the limit"),
    }
}
