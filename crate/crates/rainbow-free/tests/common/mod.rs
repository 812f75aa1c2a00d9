//! Independent oracles shared by the integration suites. Everything here
//! deliberately avoids the library's rainbow table, pair ranking, and search
//! code: detection re-derives the six bijections inline, and enumeration is a
//! plain odometer over all mask tuples.
#![allow(dead_code)] // each test binary uses its own subset

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use rainbow_free::coloring::Coloring;

/// All bijections of the three triangle pairs onto the colors 1..=3.
const PERMS: [[u8; 3]; 6] = [
    [1, 2, 3],
    [1, 3, 2],
    [2, 1, 3],
    [2, 3, 1],
    [3, 1, 2],
    [3, 2, 1],
];

/// Pair index table in lexicographic order, built by direct enumeration.
#[allow(clippy::needless_range_loop)]
pub fn pair_index_table(n: usize) -> Vec<Vec<usize>> {
    let mut table = vec![vec![usize::MAX; n]; n];
    let mut next = 0;
    for u in 0..n {
        for v in u + 1..n {
            table[u][v] = next;
            table[v][u] = next;
            next += 1;
        }
    }
    table
}

/// Naive triple-loop rainbow detection over raw 3-bit masks.
pub fn naive_rainbow(n: usize, masks: &[u8], idx: &[Vec<usize>]) -> bool {
    for u in 0..n {
        for v in u + 1..n {
            for w in v + 1..n {
                let m = [masks[idx[u][v]], masks[idx[u][w]], masks[idx[v][w]]];
                for perm in PERMS {
                    if (0..3).all(|i| m[i] >> (perm[i] - 1) & 1 != 0) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Full enumeration of every coloring of `n` vertices (masks `1..=7` when
/// `fully`, `0..=7` otherwise), keeping the best rainbow-free product.
/// Returns `(best_product, tuples_visited)`.
pub fn enumerate_best(n: usize, fully: bool) -> (u64, u64) {
    let m = n * (n - 1) / 2;
    let idx = pair_index_table(n);
    let lo: u8 = if fully { 1 } else { 0 };
    let mut digits = vec![lo; m];
    let mut best = 0u64;
    let mut visited = 0u64;
    loop {
        visited += 1;
        if !naive_rainbow(n, &digits, &idx) {
            let mut e = [0u64; 3];
            for &d in &digits {
                e[0] += (d & 1) as u64;
                e[1] += (d >> 1 & 1) as u64;
                e[2] += (d >> 2 & 1) as u64;
            }
            let product = e[0] * e[1] * e[2];
            if product > best {
                best = product;
            }
        }
        let mut i = 0;
        loop {
            if i == m {
                return (best, visited);
            }
            if digits[i] < 7 {
                digits[i] += 1;
                break;
            }
            digits[i] = lo;
            i += 1;
        }
    }
}

/// Deterministic random coloring on `n` vertices.
pub fn random_coloring(rng: &mut ChaCha8Rng, n: usize) -> Coloring {
    let mut c = Coloring::new(n).expect("n >= 1");
    for u in 0..n {
        for v in u + 1..n {
            let bits: u8 = rng.gen_range(0..8);
            c.set_colors(
                u,
                v,
                rainbow_free::coloring::ColorSet::from_bits(bits).unwrap(),
            )
            .unwrap();
        }
    }
    c
}

pub fn mask_bits(c: &Coloring) -> Vec<u8> {
    c.pairs().map(|(_, _, s)| s.bits()).collect()
}

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
