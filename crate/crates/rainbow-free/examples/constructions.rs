//! Build the named rainbow-free configurations and inspect their counts.
//!
//! ```bash
//! cargo run --release --example constructions
//! ```

use rainbow_free::constructions::{
    frankl_bipartite, frankl_bound, theorem1_construction, two_clique_family, TwoCliqueParams,
};

fn main() {
    // Three copies of the balanced complete bipartite graph: every cross
    // pair carries all three colors. Product = floor(n^2/4)^3 exactly.
    let frankl = frankl_bipartite(10).unwrap();
    let counts = frankl.edge_counts();
    println!("bipartite triple, n=10:");
    println!("  counts  ({}, {}, {})", counts.e1, counts.e2, counts.e3);
    println!("  product {} = floor(100/4)^3", counts.product().unwrap());
    println!(
        "  rainbow-free: {}",
        frankl.has_rainbow_triangle().is_none()
    );
    println!(
        "  fully colored: {} (within-part pairs stay empty)",
        frankl.is_fully_colored()
    );
    println!();

    // The two-part clique construction: X of size a colored {1,2} inside,
    // Y colored {2,3} inside, all cross pairs colored {3}.
    let two_part = theorem1_construction(10, 8).unwrap();
    let counts = two_part.edge_counts();
    println!("two-part construction, n=10, a=8:");
    println!("  counts  ({}, {}, {})", counts.e1, counts.e2, counts.e3);
    println!(
        "  product {} vs bound {}",
        counts.product().unwrap(),
        frankl_bound(10).unwrap()
    );
    println!("  fully colored: {}", two_part.is_fully_colored());
    println!("  t-colored histogram: {:?}", two_part.t_colored_counts());
    println!();

    // The general family: cliques A ({1,2}), B ({1,3}), C ({2,3}) plus d
    // fully-colored matching edges, everything else colored {3}.
    let p = TwoCliqueParams::new(12, 5, 2, 3, 1).unwrap();
    let family = two_clique_family(&p).unwrap();
    let counts = family.edge_counts();
    println!("clique family, n=12, (a,b,c,d) = (5,2,3,1):");
    println!("  counts  ({}, {}, {})", counts.e1, counts.e2, counts.e3);
    println!("  product {}", counts.product().unwrap());
    println!(
        "  rainbow-free: {}",
        family.has_rainbow_triangle().is_none()
    );
    println!("  three-colored pairs: {}", family.t_colored_counts()[3]);
    println!();
    println!("compact encoding of the family coloring:");
    println!("  {}", family.to_compact_string());
}
