//! Builders for the explicit rainbow-free configurations the product problem
//! is measured against: the balanced bipartite triple, the two-part
//! clique construction that beats it, and the general clique-plus-matching
//! family its optimality proof walks through.

use thiserror::Error;

use crate::coloring::{Color, ColorSet, Coloring, EdgeCounts, ProductOverflow};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("vertex count must be at least 1")]
    EmptyVertexSet,
    #[error("clique size {a} exceeds vertex count {n}")]
    CliqueTooLarge { a: usize, n: usize },
    #[error("blocks need a+b+c+2d = {required} vertices but only {n} available")]
    BlocksExceedVertices { required: usize, n: usize },
    #[error(transparent)]
    Overflow(#[from] ProductOverflow),
}

/// `C(x, 2)`, with the degenerate sizes 0 and 1 giving 0.
pub fn binomial2(x: u64) -> u64 {
    if x < 2 {
        0
    } else {
        x * (x - 1) / 2
    }
}

/// The conjectured bound `floor(n^2/4)^3` that the two-part construction
/// eventually beats.
pub fn frankl_bound(n: usize) -> Result<u128, ProductOverflow> {
    let m = (n as u128) * (n as u128) / 4;
    m.checked_mul(m)
        .and_then(|p| p.checked_mul(m))
        .ok_or(ProductOverflow)
}

/// Three copies of the complete bipartite graph with almost equal parts:
/// parts `0..floor(n/2)` and the rest; every cross pair gets all three
/// colors, within-part pairs stay uncolored. The union is bipartite, hence
/// triangle-free, hence rainbow-free, and each `e(G_i) = floor(n^2/4)`.
pub fn frankl_bipartite(n: usize) -> Result<Coloring, ConstructionError> {
    let mut c = Coloring::new(n).map_err(|_| ConstructionError::EmptyVertexSet)?;
    let half = n / 2;
    for u in 0..half {
        for v in half..n {
            c.set_colors(u, v, ColorSet::ALL).expect("indices in range");
        }
    }
    Ok(c)
}

/// The two-part construction: `X = 0..a` and `Y = a..n`; pairs inside `X`
/// colored `{1,2}`, inside `Y` colored `{2,3}`, cross pairs colored `{3}`.
/// Equivalently `G1 = K_X`, `G2 = K_X + K_Y`, `G3 = K_Y` plus all `X-Y`
/// edges. Fully colored and rainbow-free for every `0 <= a <= n`.
pub fn theorem1_construction(n: usize, a: usize) -> Result<Coloring, ConstructionError> {
    if a > n {
        return Err(ConstructionError::CliqueTooLarge { a, n });
    }
    let mut c = Coloring::new(n).map_err(|_| ConstructionError::EmptyVertexSet)?;
    let inside_x = ColorSet::from_colors(&[Color::ONE, Color::TWO]);
    let inside_y = ColorSet::from_colors(&[Color::TWO, Color::THREE]);
    let cross = ColorSet::from_colors(&[Color::THREE]);
    for u in 0..n {
        for v in u + 1..n {
            let s = if v < a {
                inside_x
            } else if u >= a {
                inside_y
            } else {
                cross
            };
            c.set_colors(u, v, s).expect("indices in range");
        }
    }
    Ok(c)
}

/// Closed-form edge counts of [`theorem1_construction`]:
/// `(C(a,2), C(a,2)+C(n-a,2), C(n-a,2)+a(n-a))`.
pub fn theorem1_counts(n: usize, a: usize) -> Result<EdgeCounts, ConstructionError> {
    if a > n {
        return Err(ConstructionError::CliqueTooLarge { a, n });
    }
    let (a, y) = (a as u64, (n - a) as u64);
    Ok(EdgeCounts::new(
        binomial2(a),
        binomial2(a) + binomial2(y),
        binomial2(y) + a * y,
    ))
}

/// The default clique size for the two-part construction when none is given:
/// `round(x0 * n)` with exact halves rounded down.
pub fn default_theorem1_a(n: usize, x0: f64) -> usize {
    let t = x0 * n as f64;
    let floor = t.floor();
    let a = if t - floor > 0.5 { floor + 1.0 } else { floor };
    (a as usize).min(n)
}

/// Parameters of the clique-plus-matching family: disjoint vertex blocks
/// `A` (colored `{1,2}` inside), `B` (`{1,3}`), `C` (`{2,3}`), `d` matching
/// edges colored `{1,2,3}` on fresh vertex pairs, and every remaining pair
/// colored `{3}`. Leftover vertices beyond `a+b+c+2d` are allowed and meet
/// the rest of the graph through `{3}` pairs only.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwoCliqueParams {
    pub n: usize,
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
}

impl TwoCliqueParams {
    pub fn new(
        n: usize,
        a: usize,
        b: usize,
        c: usize,
        d: usize,
    ) -> Result<Self, ConstructionError> {
        let p = TwoCliqueParams { n, a, b, c, d };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<(), ConstructionError> {
        if self.n == 0 {
            return Err(ConstructionError::EmptyVertexSet);
        }
        let required = self.a + self.b + self.c + 2 * self.d;
        if required > self.n {
            return Err(ConstructionError::BlocksExceedVertices {
                required,
                n: self.n,
            });
        }
        Ok(())
    }
}

/// Builds the clique-plus-matching family member. Vertex layout is fixed:
/// `A` first, then `B`, then `C`, then the `d` matching pairs, then any
/// leftover vertices. Always fully colored and rainbow-free: every triangle
/// not inside a single block uses at least two `{3}`-only pairs.
pub fn two_clique_family(p: &TwoCliqueParams) -> Result<Coloring, ConstructionError> {
    p.validate()?;
    let mask_a = ColorSet::from_colors(&[Color::ONE, Color::TWO]);
    let mask_b = ColorSet::from_colors(&[Color::ONE, Color::THREE]);
    let mask_c = ColorSet::from_colors(&[Color::TWO, Color::THREE]);
    let rest = ColorSet::from_colors(&[Color::THREE]);

    let b_start = p.a;
    let c_start = p.a + p.b;
    let m_start = p.a + p.b + p.c;
    let m_end = m_start + 2 * p.d;

    let block = |v: usize| -> usize {
        if v < b_start {
            0
        } else if v < c_start {
            1
        } else if v < m_start {
            2
        } else if v < m_end {
            3 + (v - m_start) / 2 // each matching edge is its own block
        } else {
            usize::MAX - v // leftovers are singleton blocks
        }
    };

    let mut coloring = Coloring::new(p.n).map_err(|_| ConstructionError::EmptyVertexSet)?;
    for u in 0..p.n {
        for v in u + 1..p.n {
            let s = if block(u) != block(v) {
                rest
            } else if v < b_start {
                mask_a
            } else if v < c_start {
                mask_b
            } else if v < m_start {
                mask_c
            } else {
                ColorSet::ALL // the two endpoints of one matching edge
            };
            coloring.set_colors(u, v, s).expect("indices in range");
        }
    }
    Ok(coloring)
}

/// Closed-form edge counts of the family, independently of the builder:
/// `e1 = C(a,2)+C(b,2)+d`, `e2 = C(a,2)+C(c,2)+d`, and `e3` adds every pair
/// outside the `A`-clique (so `e3 = C(n,2) - C(a,2)` written out as the
/// `{1,3}`/`{2,3}`/matching/cross contributions).
pub fn family_counts(p: &TwoCliqueParams) -> Result<EdgeCounts, ConstructionError> {
    p.validate()?;
    let (n, a, b, c, d) = (p.n as u64, p.a as u64, p.b as u64, p.c as u64, p.d as u64);
    let cross = binomial2(n) - binomial2(a) - binomial2(b) - binomial2(c) - d;
    Ok(EdgeCounts::new(
        binomial2(a) + binomial2(b) + d,
        binomial2(a) + binomial2(c) + d,
        binomial2(b) + binomial2(c) + d + cross,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frankl_small_counts() {
        let c5 = frankl_bipartite(5).unwrap();
        assert_eq!(c5.edge_counts(), EdgeCounts::new(6, 6, 6));
        assert_eq!(c5.edge_counts().product().unwrap(), 216);
        assert!(c5.has_rainbow_triangle().is_none());
        assert!(!c5.is_fully_colored()); // within-part pairs uncolored for n >= 3

        let c2 = frankl_bipartite(2).unwrap();
        assert_eq!(c2.edge_counts().product().unwrap(), 1);

        let c100 = frankl_bipartite(100).unwrap();
        assert_eq!(c100.edge_counts().product().unwrap(), 15_625_000_000);
        assert_eq!(
            c100.edge_counts().product().unwrap(),
            frankl_bound(100).unwrap()
        );
    }

    #[test]
    fn frankl_bound_matches_construction() {
        for n in 2..=200 {
            let c = frankl_bipartite(n).unwrap();
            assert_eq!(
                c.edge_counts().product().unwrap(),
                frankl_bound(n).unwrap(),
                "n={n}"
            );
        }
    }

    #[test]
    fn theorem1_reference_point() {
        let c = theorem1_construction(10, 8).unwrap();
        assert_eq!(c.edge_counts(), EdgeCounts::new(28, 29, 17));
        assert_eq!(c.edge_counts().product().unwrap(), 13804);
        assert!(c.has_rainbow_triangle().is_none());
        assert!(c.is_fully_colored());
        assert_eq!(c.t_colored_counts(), [0, 16, 29, 0]);
    }

    #[test]
    fn theorem1_degenerate_split() {
        let c = theorem1_construction(10, 10).unwrap();
        assert_eq!(c.edge_counts(), EdgeCounts::new(45, 45, 0));
        assert_eq!(c.edge_counts().product().unwrap(), 0);
        assert!(theorem1_construction(10, 11).is_err());
    }

    #[test]
    fn theorem1_closed_form_matches_enumeration() {
        for n in 1..=40 {
            for a in 0..=n {
                let c = theorem1_construction(n, a).unwrap();
                assert_eq!(
                    c.edge_counts(),
                    theorem1_counts(n, a).unwrap(),
                    "n={n} a={a}"
                );
                assert!(c.is_fully_colored());
            }
        }
    }

    #[test]
    fn family_specializes_to_two_part_construction() {
        let p = TwoCliqueParams::new(10, 8, 0, 2, 0).unwrap();
        assert_eq!(
            two_clique_family(&p).unwrap(),
            theorem1_construction(10, 8).unwrap()
        );
        assert_eq!(family_counts(&p).unwrap(), EdgeCounts::new(28, 29, 17));
    }

    #[test]
    fn family_three_blocks() {
        let p = TwoCliqueParams::new(6, 2, 2, 2, 0).unwrap();
        let c = two_clique_family(&p).unwrap();
        assert_eq!(c.edge_counts(), EdgeCounts::new(2, 2, 14));
        assert_eq!(family_counts(&p).unwrap(), c.edge_counts());
        assert!(c.has_rainbow_triangle().is_none());
        assert!(c.is_fully_colored());
    }

    #[test]
    fn family_pure_matching() {
        let p = TwoCliqueParams::new(4, 0, 0, 0, 2).unwrap();
        let c = two_clique_family(&p).unwrap();
        assert_eq!(c.edge_counts(), EdgeCounts::new(2, 2, 6));
        assert_eq!(family_counts(&p).unwrap(), c.edge_counts());
        assert!(c.has_rainbow_triangle().is_none());
        assert_eq!(c.t_colored_counts()[3], 2);
    }

    #[test]
    fn family_rejects_oversized_blocks() {
        assert_eq!(
            TwoCliqueParams::new(6, 3, 2, 1, 1).unwrap_err(),
            ConstructionError::BlocksExceedVertices { required: 8, n: 6 }
        );
        // exactly full is fine, as are leftovers
        TwoCliqueParams::new(8, 3, 2, 1, 1).unwrap();
        TwoCliqueParams::new(12, 3, 2, 1, 1).unwrap();
    }

    #[test]
    fn family_with_leftovers_stays_valid() {
        let p = TwoCliqueParams::new(9, 3, 0, 2, 1).unwrap();
        let c = two_clique_family(&p).unwrap();
        assert!(c.is_fully_colored());
        assert!(c.has_rainbow_triangle().is_none());
        assert_eq!(family_counts(&p).unwrap(), c.edge_counts());
    }

    #[test]
    fn family_invariants_exhaustive_small_sampled_large() {
        // exhaustively for small n
        for n in 1..=10 {
            for a in 0..=n {
                for b in 0..=n - a {
                    for c in 0..=n - a - b {
                        for d in 0..=(n - a - b - c) / 2 {
                            let p = TwoCliqueParams::new(n, a, b, c, d).unwrap();
                            let built = two_clique_family(&p).unwrap();
                            assert!(built.is_fully_colored(), "{p:?}");
                            assert!(built.has_rainbow_triangle().is_none(), "{p:?}");
                            assert_eq!(family_counts(&p).unwrap(), built.edge_counts(), "{p:?}");
                        }
                    }
                }
            }
        }
        // sampled up to n = 60
        use rand::prelude::*;
        let mut rng = rand::rngs::StdRng::seed_from_u64(0xfa31);
        for _ in 0..300 {
            let n = rng.gen_range(11..=60);
            let a = rng.gen_range(0..=n);
            let b = rng.gen_range(0..=n - a);
            let c = rng.gen_range(0..=n - a - b);
            let d = rng.gen_range(0..=(n - a - b - c) / 2);
            let p = TwoCliqueParams::new(n, a, b, c, d).unwrap();
            let built = two_clique_family(&p).unwrap();
            assert!(built.is_fully_colored(), "{p:?}");
            assert!(built.has_rainbow_triangle().is_none(), "{p:?}");
            assert_eq!(family_counts(&p).unwrap(), built.edge_counts(), "{p:?}");
        }
    }

    #[test]
    fn default_a_rounds_half_down() {
        assert_eq!(default_theorem1_a(10, 0.792736532), 8);
        assert_eq!(default_theorem1_a(2, 0.75), 1); // exact half 1.5 -> 1
        assert_eq!(default_theorem1_a(2, 0.7501), 2);
        assert_eq!(default_theorem1_a(4, 0.625), 2); // exact half 2.5 -> 2
        assert_eq!(default_theorem1_a(1000, 0.792736532344), 793);
    }
}
