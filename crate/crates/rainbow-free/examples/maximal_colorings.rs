//! Saturate rainbow-free colorings to maximality and verify the neighborhood
//! relations that force the clique decomposition on maximal colorings.
//!
//! ```bash
//! cargo run --release --example maximal_colorings
//! ```

use rainbow_free::analysis::neighborhood_consistency;
use rainbow_free::coloring::{Color, ColorSet, Coloring};
use rainbow_free::constructions::{frankl_bipartite, theorem1_construction};
use rainbow_free::search::{is_maximal_rainbow_free, maximality_closure};

fn main() {
    // a single colored pair saturates to all three colors: no triangle exists
    let mut tiny = Coloring::new(2).unwrap();
    tiny.set_colors(0, 1, ColorSet::from_colors(&[Color::ONE]))
        .unwrap();
    let closed = maximality_closure(&tiny).unwrap();
    println!(
        "single {{1}} pair on 2 vertices saturates to {}",
        closed.colors(0, 1)
    );
    println!();

    // the balanced bipartite triple on 4 vertices is already maximal: any
    // color on a within-part pair completes a rainbow through two all-color
    // cross pairs
    let frankl = frankl_bipartite(4).unwrap();
    let closed = maximality_closure(&frankl).unwrap();
    println!(
        "bipartite triple n=4: changed by closure: {}",
        closed != frankl
    );
    println!("  maximal: {}", is_maximal_rainbow_free(&closed));
    println!();

    // the two-part construction with a 2-vertex second block is NOT maximal:
    // that block's single pair absorbs the missing color
    let c = theorem1_construction(10, 8).unwrap();
    let closed = maximality_closure(&c).unwrap();
    println!("two-part n=10, a=8: changed by closure: {}", closed != c);
    println!("  pair (8,9) grew to {}", closed.colors(8, 9));
    println!("  counts before {:?}", c.edge_counts());
    println!("  counts after  {:?}", closed.edge_counts());
    println!("  maximal: {}", is_maximal_rainbow_free(&closed));
    println!();

    // on maximal fully-colored colorings, every 2-colored pair uv satisfies
    // the neighborhood relations (no mixed pairs with the missing color, and
    // matching one-color / two-color neighborhoods at u and v)
    for (n, a) in [(10, 8), (10, 6), (12, 9)] {
        let closed = maximality_closure(&theorem1_construction(n, a).unwrap()).unwrap();
        let violations = neighborhood_consistency(&closed);
        println!(
            "neighborhood relations on closed two-part (n={n}, a={a}): {} violations",
            violations.len()
        );
    }
}
