//! Structural checkers in action: the clique decomposition of the
//! multi-colored subgraph, the three-colored matching property, and the
//! counting diagnostics with their thresholds.
//!
//! ```bash
//! cargo run --release --example claim_structure
//! ```

use rainbow_free::analysis::{
    check_claim1, multi_color_subgraph, proof_diagnostics, three_color_isolation,
};
use rainbow_free::coloring::{Color, ColorSet, Coloring};
use rainbow_free::constructions::theorem1_construction;

fn main() {
    let c = theorem1_construction(10, 8).unwrap();
    let g = multi_color_subgraph(&c);
    println!("two-part construction n=10, a=8:");
    println!("  multi-colored subgraph: {} edges", g.edge_count());
    let report = check_claim1(&c);
    println!("  clique decomposition holds: {}", report.holds);
    for comp in &report.components {
        println!(
            "    component {:?} uniformly colored {:?}",
            comp.vertices, comp.colors
        );
    }
    println!(
        "  three-color isolation violations: {}",
        three_color_isolation(&c).len()
    );
    println!();

    // a hand-built violation: a two-colored path whose masks disagree
    let mut path = Coloring::new(3).unwrap();
    path.set_colors(0, 1, ColorSet::from_colors(&[Color::ONE, Color::TWO]))
        .unwrap();
    path.set_colors(1, 2, ColorSet::from_colors(&[Color::ONE, Color::THREE]))
        .unwrap();
    let bad = check_claim1(&path);
    println!("a {{1,2}}-{{1,3}} path on 3 vertices:");
    println!("  decomposition holds: {}", bad.holds);
    for v in &bad.violations {
        println!("    violation: {v:?}");
    }
    println!();

    // diagnostics at a size where the proof's thresholds genuinely engage
    let big = theorem1_construction(1000, 793).unwrap();
    let diag = proof_diagnostics(&big, 0.01);
    println!(
        "diagnostics for n=1000, a=793 (premise holds: {}):",
        diag.premise_holds
    );
    println!(
        "  edges {:?}, 2-colored {}, 3-colored {}",
        diag.counts, diag.c2, diag.c3
    );
    for check in &diag.checks {
        println!(
            "  {:<28} value {:>12.1} threshold {:>10.1} -> {}",
            check.name,
            check.value,
            check.threshold,
            match check.pass {
                Some(true) => "pass",
                Some(false) => "fail",
                None => "n/a",
            }
        );
    }
}
