//! The two interchangeable coloring file formats and canonical encodings.
//!
//! ```bash
//! cargo run --release --example file_formats
//! ```

use rainbow_free::coloring::{Color, ColorPermutation, Coloring};
use rainbow_free::constructions::theorem1_construction;

fn main() {
    let c = theorem1_construction(5, 4).unwrap();

    // format (a): JSON with explicit pairs, uncolored pairs omitted
    println!("JSON format:");
    println!("{}", c.to_json_string());
    println!();

    // format (b): one octal digit per pair in lexicographic order,
    // bit 0 <-> color 1, bit 1 <-> color 2, bit 2 <-> color 3
    println!("compact format: {}", c.to_compact_string());
    println!();

    // both parse back to the same coloring
    let from_json = Coloring::parse(&c.to_json_string()).unwrap();
    let from_compact = Coloring::parse(&c.to_compact_string()).unwrap();
    assert_eq!(from_json, c);
    assert_eq!(from_compact, c);
    println!("round trips agree: true");
    println!();

    // canonical form: minimum encoding over all vertex relabelings and color
    // renamings; isomorphic colorings canonicalize identically
    let canon = c.canonical_form().unwrap();
    println!("canonical form: {canon}");
    let relabeled = c.relabeled(&[4, 2, 0, 3, 1]);
    let recolored = relabeled.with_permuted_colors(
        &ColorPermutation::new([Color::THREE, Color::ONE, Color::TWO]).unwrap(),
    );
    println!(
        "after a relabeling + color swap: {}",
        recolored.to_compact_string()
    );
    println!(
        "same canonical form: {}",
        recolored.canonical_form().unwrap() == canon
    );
}
