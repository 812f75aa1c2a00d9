//! Watch the exact integer optimum approach gamma * n^6 along a doubling
//! sequence of vertex counts.
//!
//! ```bash
//! cargo run --release --example convergence
//! ```

use rainbow_free::objective::{convergence_report, gamma_x0};

fn main() {
    let (gamma, x0) = gamma_x0();
    println!("gamma = {gamma:.12} (maximizer x0 = {x0:.6})");
    println!();
    println!("{:>6} {:>16} {:>14}", "n", "product/n^6", "deficit");
    let ns = [125, 250, 500, 1000, 2000];
    for row in convergence_report(&ns).unwrap() {
        println!("{:>6} {:>16.12} {:>14.3e}", row.n, row.ratio, row.deficit);
    }
    println!();
    println!("the deficit is positive and shrinks roughly like 1/n");
}
