//! Executable form of the structural arguments behind the fully-colored
//! optimality proof: the multi-colored subgraph decomposition, the
//! three-colored matching property, counting diagnostics against the proof's
//! intermediate thresholds, and the two displayed binomial inequalities.
//!
//! Checkers here are pure predicates on arbitrary colorings. The structural
//! statements are theorems only for product-maximal colorings at large `n`,
//! so sweeps and diagnostics report findings instead of asserting them.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::coloring::{Color, ColorSet, Coloring, EdgeCounts};
use crate::objective::gamma_x0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("binomial inequality arithmetic exceeds 128-bit range")]
    Overflow,
    #[error("inequality sweep limited to n_max <= 500, got {0}")]
    SweepTooLarge(usize),
}

/// Plain undirected graph on `0..n`, used for the >=2-colored subgraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<Vec<usize>>,
}

impl SimpleGraph {
    fn new(n: usize) -> SimpleGraph {
        SimpleGraph {
            n,
            adj: vec![Vec::new(); n],
        }
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u].push(v);
        self.adj[v].push(u);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nbrs) in self.adj.iter().enumerate() {
            for &v in nbrs {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Connected components as sorted vertex lists, sorted by least vertex.
    /// Isolated vertices form singleton components.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            let mut comp = Vec::new();
            seen[start] = true;
            while let Some(u) = stack.pop() {
                comp.push(u);
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    fn is_clique(&self, vertices: &[usize]) -> Option<(usize, usize)> {
        for (i, &u) in vertices.iter().enumerate() {
            for &v in &vertices[i + 1..] {
                if !self.has_edge(u, v) {
                    return Some((u, v));
                }
            }
        }
        None
    }

    /// Exact maximum clique size by branch and bound; intended for the small
    /// graphs this crate handles (guarded to n <= 64).
    pub fn max_clique_size(&self) -> usize {
        assert!(self.n <= 64, "exact max-clique limited to 64 vertices");
        if self.n == 0 {
            return 0;
        }
        let nbr: Vec<u64> = (0..self.n)
            .map(|u| self.adj[u].iter().fold(0u64, |acc, &v| acc | 1 << v))
            .collect();
        fn expand(nbr: &[u64], mut cand: u64, size: usize, best: &mut usize) {
            if size + cand.count_ones() as usize <= *best {
                return;
            }
            if cand == 0 {
                *best = (*best).max(size);
                return;
            }
            while cand != 0 {
                if size + cand.count_ones() as usize <= *best {
                    return;
                }
                let v = cand.trailing_zeros() as usize;
                cand &= cand - 1;
                expand(nbr, cand & nbr[v], size + 1, best);
            }
        }
        let mut best = 1;
        expand(
            &nbr,
            (1u64 << self.n.min(63)).wrapping_sub(1) | ((self.n == 64) as u64) << 63,
            0,
            &mut best,
        );
        best
    }
}

/// The simple graph of all pairs carrying at least two colors.
pub fn multi_color_subgraph(c: &Coloring) -> SimpleGraph {
    let mut g = SimpleGraph::new(c.n());
    for (u, v, s) in c.pairs() {
        if s.cardinality() >= 2 {
            g.add_edge(u, v);
        }
    }
    g
}

/// One component of the multi-colored subgraph (at least two vertices).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiCliqueComponent {
    pub vertices: Vec<usize>,
    /// Colors of the component's lexicographically first pair; when the
    /// component passes the uniformity check this is the common mask.
    pub colors: Vec<u8>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Claim1Violation {
    /// A component of the >=2-colored subgraph missing an internal edge.
    NotAClique {
        component: Vec<usize>,
        missing_u: usize,
        missing_v: usize,
    },
    /// Two pairs of one component carrying different masks.
    MixedMasks {
        component: Vec<usize>,
        pair_a: (usize, usize),
        colors_a: Vec<u8>,
        pair_b: (usize, usize),
        colors_b: Vec<u8>,
    },
}

/// Verdict on the clique decomposition of the >=2-colored subgraph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Claim1Report {
    pub holds: bool,
    pub components: Vec<MultiCliqueComponent>,
    pub violations: Vec<Claim1Violation>,
}

/// Checks that every connected component of the >=2-colored subgraph is a
/// clique whose pairs all carry one identical mask.
pub fn check_claim1(c: &Coloring) -> Claim1Report {
    let g = multi_color_subgraph(c);
    let mut components = Vec::new();
    let mut violations = Vec::new();
    for comp in g.components() {
        if comp.len() < 2 {
            continue;
        }
        let (u0, v0) = first_edge(&g, &comp);
        let reference = c.colors(u0, v0);
        components.push(MultiCliqueComponent {
            vertices: comp.clone(),
            colors: reference.color_ids(),
        });
        if let Some((u, v)) = g.is_clique(&comp) {
            violations.push(Claim1Violation::NotAClique {
                component: comp.clone(),
                missing_u: u,
                missing_v: v,
            });
        }
        for (i, &u) in comp.iter().enumerate() {
            for &v in &comp[i + 1..] {
                if !g.has_edge(u, v) {
                    continue; // already reported as a missing edge
                }
                let s = c.colors(u, v);
                if s != reference {
                    violations.push(Claim1Violation::MixedMasks {
                        component: comp.clone(),
                        pair_a: (u0, v0),
                        colors_a: reference.color_ids(),
                        pair_b: (u, v),
                        colors_b: s.color_ids(),
                    });
                }
            }
        }
    }
    Claim1Report {
        holds: violations.is_empty(),
        components,
        violations,
    }
}

fn first_edge(g: &SimpleGraph, comp: &[usize]) -> (usize, usize) {
    for (i, &u) in comp.iter().enumerate() {
        for &v in &comp[i + 1..] {
            if g.has_edge(u, v) {
                return (u, v);
            }
        }
    }
    unreachable!("components of size >= 2 contain an edge");
}

/// A three-colored pair touching a >=2-colored pair at a shared vertex.
/// Fully-colored rainbow-free colorings admit none, which is exactly why
/// their three-colored pairs form a matching.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct IsolationViolation {
    pub three_colored: (usize, usize),
    pub adjacent: (usize, usize),
    pub shared_vertex: usize,
}

/// Lists every adjacency between a three-colored pair and a >=2-colored
/// pair, sorted. Symmetric adjacencies between two three-colored pairs are
/// reported once.
pub fn three_color_isolation(c: &Coloring) -> Vec<IsolationViolation> {
    let n = c.n();
    let mut out = Vec::new();
    for (u, v, s) in c.pairs() {
        if s.cardinality() != 3 {
            continue;
        }
        for w in 0..n {
            if w == u || w == v {
                continue;
            }
            for shared in [u, v] {
                let (x, y) = (shared.min(w), shared.max(w));
                let other = c.colors(x, y);
                if other.cardinality() < 2 {
                    continue;
                }
                // report each unordered pair of pairs once
                if other.cardinality() == 3 && (x, y) < (u, v) {
                    continue;
                }
                out.push(IsolationViolation {
                    three_colored: (u, v),
                    adjacent: (x, y),
                    shared_vertex: shared,
                });
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckDirection {
    AtLeast,
    AtMost,
    Above,
}

/// One named quantity compared against its proof threshold.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ThresholdCheck {
    pub name: &'static str,
    pub value: f64,
    pub threshold: f64,
    pub direction: CheckDirection,
    /// `None` when the premise fails or the quantity is undefined here.
    pub pass: Option<bool>,
}

impl ThresholdCheck {
    fn evaluate(
        name: &'static str,
        value: f64,
        threshold: f64,
        direction: CheckDirection,
        applicable: bool,
    ) -> ThresholdCheck {
        let pass = applicable.then_some(match direction {
            CheckDirection::AtLeast => value >= threshold,
            CheckDirection::AtMost => value <= threshold,
            CheckDirection::Above => value > threshold,
        });
        ThresholdCheck {
            name,
            value,
            threshold,
            direction,
            pass,
        }
    }
}

/// Counting diagnostics of one coloring against the proof's intermediate
/// bounds. Failures at small `n` are expected and informational.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DiagnosticsReport {
    /// The structural premises: fully colored and rainbow-free.
    pub applicable: bool,
    /// Whether the product premise `product >= gamma * n^6 * (1 - epsilon)`
    /// holds; threshold checks are evaluated only under it.
    pub premise_holds: bool,
    pub epsilon: f64,
    pub n: usize,
    pub counts: EdgeCounts,
    pub sum_edges: u64,
    /// `3 * cbrt(product)`, the arithmetic-geometric mean step.
    pub amgm_lower: f64,
    /// Number of 2-colored pairs.
    pub c2: usize,
    /// Number of 3-colored pairs.
    pub c3: usize,
    /// Size of the largest clique in the >=2-colored subgraph: the largest
    /// component when the decomposition holds, exact max-clique otherwise.
    pub max_multiclique_a: usize,
    pub checks: Vec<ThresholdCheck>,
}

/// Evaluates the proof's counting thresholds on a coloring, conditioned on
/// the product premise with the caller's `epsilon`.
pub fn proof_diagnostics(c: &Coloring, epsilon: f64) -> DiagnosticsReport {
    let n = c.n();
    let nf = n as f64;
    let counts = c.edge_counts();
    let product = counts.product().expect("counts bounded by C(n,2)");
    let t = c.t_colored_counts();
    let (gamma, _) = gamma_x0();

    let applicable = c.is_fully_colored() && c.has_rainbow_triangle().is_none();
    let premise_holds = applicable && product as f64 >= gamma * nf.powi(6) * (1.0 - epsilon);

    let claim1 = check_claim1(c);
    let g = multi_color_subgraph(c);
    let max_a = if claim1.holds {
        claim1
            .components
            .iter()
            .map(|comp| comp.vertices.len())
            .max()
            .unwrap_or(1)
    } else if n <= 64 {
        g.max_clique_size()
    } else {
        // out of reach for the exact clique solver; fall back to the largest
        // component, an upper bound on the clique size
        g.components().iter().map(Vec::len).max().unwrap_or(1)
    };

    let amgm_lower = 3.0 * (product as f64).cbrt();
    let eval = premise_holds;
    let mut checks = vec![
        ThresholdCheck::evaluate(
            "amgm_sum_above",
            amgm_lower,
            0.8 * nf * nf + nf / 2.0,
            CheckDirection::Above,
            eval,
        ),
        ThresholdCheck::evaluate(
            "three_colored_at_most_half_n",
            t[3] as f64,
            nf / 2.0,
            CheckDirection::AtMost,
            eval,
        ),
        ThresholdCheck::evaluate(
            "two_colored_at_least",
            t[2] as f64,
            0.3 * nf * nf,
            CheckDirection::AtLeast,
            eval,
        ),
        ThresholdCheck::evaluate(
            "clique_at_least_06n",
            max_a as f64,
            0.6 * nf,
            CheckDirection::AtLeast,
            eval,
        ),
        ThresholdCheck::evaluate(
            "clique_at_least_0723n",
            max_a as f64,
            0.723 * nf,
            CheckDirection::AtLeast,
            eval,
        ),
        ThresholdCheck::evaluate(
            "clique_edges_at_least",
            (max_a * max_a.saturating_sub(1) / 2) as f64,
            0.26 * nf * nf,
            CheckDirection::AtLeast,
            eval,
        ),
    ];

    // The residual color: defined when the largest multi-colored component is
    // uniformly 2-colored, in which case the color missing from it plays the
    // role of the sparse graph.
    let residual = claim1
        .components
        .iter()
        .filter(|comp| comp.vertices.len() == max_a && comp.colors.len() == 2)
        .map(|comp| {
            let present = ColorSet::from_colors(
                &comp
                    .colors
                    .iter()
                    .filter_map(|&id| Color::new(id))
                    .collect::<Vec<_>>(),
            );
            Color::ALL
                .into_iter()
                .find(|&c| !present.contains(c))
                .expect("one color missing")
        })
        .next();
    match residual {
        Some(missing) if claim1.holds => checks.push(ThresholdCheck::evaluate(
            "residual_color_at_most",
            counts.get(missing) as f64,
            0.24 * nf * nf,
            CheckDirection::AtMost,
            eval,
        )),
        _ => checks.push(ThresholdCheck {
            name: "residual_color_at_most",
            value: f64::NAN,
            threshold: 0.24 * nf * nf,
            direction: CheckDirection::AtMost,
            pass: None,
        }),
    }

    DiagnosticsReport {
        applicable,
        premise_holds,
        epsilon,
        n,
        counts,
        sum_edges: counts.sum(),
        amgm_lower,
        c2: t[2],
        c3: t[3],
        max_multiclique_a: max_a,
        checks,
    }
}

fn binom2_u128(x: u128) -> Result<u128, AnalysisError> {
    if x < 2 {
        return Ok(0);
    }
    x.checked_mul(x - 1)
        .map(|p| p / 2)
        .ok_or(AnalysisError::Overflow)
}

/// Exact evaluation of the matching-removal inequality
/// `(C(a,2)+C(b,2)+d)(C(a,2)+C(c,2)+d) <= (C(a,2)+C(b,2))(C(a,2)+C(c+2d,2))`.
/// Returns whether it holds; arithmetic overflow is an explicit error.
pub fn check_d_inequality(a: u64, b: u64, c: u64, d: u64) -> Result<bool, AnalysisError> {
    let (a, b, c, d) = (a as u128, b as u128, c as u128, d as u128);
    let ca = binom2_u128(a)?;
    let lhs_l = ca
        .checked_add(binom2_u128(b)?)
        .and_then(|x| x.checked_add(d));
    let lhs_r = ca
        .checked_add(binom2_u128(c)?)
        .and_then(|x| x.checked_add(d));
    let rhs_l = ca.checked_add(binom2_u128(b)?);
    let merged = c.checked_add(2 * d).ok_or(AnalysisError::Overflow)?;
    let rhs_r = ca.checked_add(binom2_u128(merged)?);
    let lhs = lhs_l
        .zip(lhs_r)
        .and_then(|(x, y)| x.checked_mul(y))
        .ok_or(AnalysisError::Overflow)?;
    let rhs = rhs_l
        .zip(rhs_r)
        .and_then(|(x, y)| x.checked_mul(y))
        .ok_or(AnalysisError::Overflow)?;
    Ok(lhs <= rhs)
}

/// Exact evaluation of the block-merging inequality
/// `(C(a,2)+C(b,2))(C(a,2)+C(c,2)) <= (C(a,2)+C(b+c,2)) C(a,2)`.
pub fn check_b_inequality(a: u64, b: u64, c: u64) -> Result<bool, AnalysisError> {
    let (a, b, c) = (a as u128, b as u128, c as u128);
    let ca = binom2_u128(a)?;
    let lhs = ca
        .checked_add(binom2_u128(b)?)
        .zip(ca.checked_add(binom2_u128(c)?))
        .and_then(|(x, y)| x.checked_mul(y))
        .ok_or(AnalysisError::Overflow)?;
    let merged = b.checked_add(c).ok_or(AnalysisError::Overflow)?;
    let rhs = ca
        .checked_add(binom2_u128(merged)?)
        .and_then(|x| x.checked_mul(ca))
        .ok_or(AnalysisError::Overflow)?;
    Ok(lhs <= rhs)
}

/// A tuple falsifying one of the two inequalities within a sweep domain.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct InequalityViolation {
    /// `"matching_removal"` (the d-inequality) or `"block_merge"` (the
    /// b-inequality).
    pub rule: &'static str,
    pub n: u64,
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub d: u64,
}

/// `ceil(0.723 n)` in exact integer arithmetic.
fn proof_a_min(n: u64) -> u64 {
    (723 * n).div_ceil(1000)
}

/// Sweeps both inequalities over the proof's constrained domains for every
/// `n <= n_max` and returns each violating tuple (expected empty):
///
/// - matching removal: `a + b + c + 2d = n`, `c >= b`, `a >= 0.723 n`, and
///   not `b = c = 0` (the degenerate case the argument explicitly sets
///   aside; the bound genuinely fails there).
/// - block merge: `a + b + c = n`, `c >= b >= 1`, `a >= 0.723 n`.
pub fn sweep_inequalities(n_max: usize) -> Result<Vec<InequalityViolation>, AnalysisError> {
    if n_max > 500 {
        return Err(AnalysisError::SweepTooLarge(n_max));
    }
    let mut rows: Vec<InequalityViolation> = (0..=n_max as u64)
        .into_par_iter()
        .map(|n| {
            let mut out = Vec::new();
            for a in proof_a_min(n)..=n {
                let rest = n - a;
                for d in 0..=rest / 2 {
                    let rem = rest - 2 * d;
                    for b in 0..=rem / 2 {
                        let c = rem - b;
                        if c < b || (b == 0 && c == 0) {
                            continue;
                        }
                        if !check_d_inequality(a, b, c, d)? {
                            out.push(InequalityViolation {
                                rule: "matching_removal",
                                n,
                                a,
                                b,
                                c,
                                d,
                            });
                        }
                    }
                }
                for b in 1..=rest / 2 {
                    let c = rest - b;
                    if c < b {
                        continue;
                    }
                    if !check_b_inequality(a, b, c)? {
                        out.push(InequalityViolation {
                            rule: "block_merge",
                            n,
                            a,
                            b,
                            c,
                            d: 0,
                        });
                    }
                }
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>, AnalysisError>>()?
        .into_iter()
        .flatten()
        .collect();
    rows.sort_unstable();
    Ok(rows)
}

/// The same sweep without the clique-size constraint and without the
/// degenerate-case exclusions. Violations exist here; they demonstrate that
/// the proof's constraints carry real weight and are reported, not judged.
pub fn sweep_inequalities_exploratory(
    n_max: usize,
) -> Result<Vec<InequalityViolation>, AnalysisError> {
    if n_max > 500 {
        return Err(AnalysisError::SweepTooLarge(n_max));
    }
    let mut rows: Vec<InequalityViolation> = (0..=n_max as u64)
        .into_par_iter()
        .map(|n| {
            let mut out = Vec::new();
            for a in 0..=n {
                let rest = n - a;
                for d in 0..=rest / 2 {
                    let rem = rest - 2 * d;
                    for b in 0..=rem / 2 {
                        let c = rem - b;
                        if c < b {
                            continue;
                        }
                        if !check_d_inequality(a, b, c, d)? {
                            out.push(InequalityViolation {
                                rule: "matching_removal",
                                n,
                                a,
                                b,
                                c,
                                d,
                            });
                        }
                    }
                }
                for b in 1..=rest / 2 {
                    let c = rest - b;
                    if c < b {
                        continue;
                    }
                    if !check_b_inequality(a, b, c)? {
                        out.push(InequalityViolation {
                            rule: "block_merge",
                            n,
                            a,
                            b,
                            c,
                            d: 0,
                        });
                    }
                }
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>, AnalysisError>>()?
        .into_iter()
        .flatten()
        .collect();
    rows.sort_unstable();
    Ok(rows)
}

/// A failed neighborhood relation at a two-colored pair.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct NeighborhoodViolation {
    pub pair: (usize, usize),
    pub relation: &'static str,
    pub witness_vertex: usize,
}

/// Directly scans the neighborhood relations that force the clique
/// decomposition: for every 2-colored pair `uv` with mask `{i,j}` and missing
/// color `l`,
///
/// - no neighbor of `u` or `v` is joined by an exactly-`{i,l}` or `{j,l}`
///   pair,
/// - the exactly-`{l}` neighborhoods of `u` and `v` coincide,
/// - the exactly-`{i,j}` neighborhoods of `u` and `v` coincide (besides
///   `u, v` themselves).
///
/// Expected empty on maximal fully-colored rainbow-free colorings.
pub fn neighborhood_consistency(c: &Coloring) -> Vec<NeighborhoodViolation> {
    let n = c.n();
    let mut out = Vec::new();
    for (u, v, s) in c.pairs() {
        if s.cardinality() != 2 {
            continue;
        }
        let missing = Color::ALL
            .into_iter()
            .find(|&x| !s.contains(x))
            .expect("one missing");
        let [i, j] = {
            let mut it = s.colors();
            [it.next().unwrap(), it.next().unwrap()]
        };
        let exactly = |x: usize, y: usize, want: ColorSet| c.colors(x.min(y), x.max(y)) == want;
        let il = ColorSet::from_colors(&[i, missing]);
        let jl = ColorSet::from_colors(&[j, missing]);
        let only_l = ColorSet::from_colors(&[missing]);
        for w in 0..n {
            if w == u || w == v {
                continue;
            }
            for (endpoint, name) in [(u, "mixed_pair_at_u"), (v, "mixed_pair_at_v")] {
                if exactly(endpoint, w, il) || exactly(endpoint, w, jl) {
                    out.push(NeighborhoodViolation {
                        pair: (u, v),
                        relation: name,
                        witness_vertex: w,
                    });
                }
            }
            if exactly(u, w, only_l) != exactly(v, w, only_l) {
                out.push(NeighborhoodViolation {
                    pair: (u, v),
                    relation: "single_color_neighborhoods_differ",
                    witness_vertex: w,
                });
            }
            if exactly(u, w, s) != exactly(v, w, s) {
                out.push(NeighborhoodViolation {
                    pair: (u, v),
                    relation: "two_colored_neighborhoods_differ",
                    witness_vertex: w,
                });
            }
        }
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{theorem1_construction, two_clique_family, TwoCliqueParams};
    use crate::search::maximality_closure;

    fn set(ids: &[u8]) -> ColorSet {
        ColorSet::from_colors(
            &ids.iter()
                .map(|&i| Color::new(i).unwrap())
                .collect::<Vec<_>>(),
        )
    }

    #[test]
    fn multi_color_subgraph_of_two_part_construction() {
        let c = theorem1_construction(10, 8).unwrap();
        let g = multi_color_subgraph(&c);
        // K8 on the first block, K2 on the second, nothing across
        assert_eq!(g.edge_count(), 28 + 1);
        assert!(g.has_edge(0, 7));
        assert!(g.has_edge(8, 9));
        assert!(!g.has_edge(0, 8));
        let comps: Vec<usize> = g.components().iter().map(Vec::len).collect();
        assert_eq!(comps, vec![8, 2]);
    }

    #[test]
    fn multi_color_subgraph_trivial_cases() {
        let mut all3 = Coloring::new(4).unwrap();
        for u in 0..4 {
            for v in u + 1..4 {
                all3.set_colors(u, v, set(&[3])).unwrap();
            }
        }
        assert_eq!(multi_color_subgraph(&all3).edge_count(), 0);

        let mut single = Coloring::new(2).unwrap();
        single.set_colors(0, 1, ColorSet::ALL).unwrap();
        assert_eq!(multi_color_subgraph(&single).edge_count(), 1);
    }

    #[test]
    fn claim1_holds_on_the_construction() {
        let r = check_claim1(&theorem1_construction(10, 8).unwrap());
        assert!(r.holds);
        assert_eq!(r.components.len(), 2);
        assert_eq!(r.components[0].vertices, (0..8).collect::<Vec<_>>());
        assert_eq!(r.components[0].colors, vec![1, 2]);
        assert_eq!(r.components[1].vertices, vec![8, 9]);
        assert_eq!(r.components[1].colors, vec![2, 3]);
    }

    #[test]
    fn claim1_flags_a_mixed_path() {
        let mut c = Coloring::new(3).unwrap();
        c.set_colors(0, 1, set(&[1, 2])).unwrap();
        c.set_colors(1, 2, set(&[1, 3])).unwrap();
        let r = check_claim1(&c);
        assert!(!r.holds);
        assert!(r
            .violations
            .iter()
            .any(|v| matches!(v, Claim1Violation::NotAClique { .. })));
        assert!(r
            .violations
            .iter()
            .any(|v| matches!(v, Claim1Violation::MixedMasks { .. })));
    }

    #[test]
    fn claim1_vacuous_on_empty() {
        let r = check_claim1(&Coloring::new(5).unwrap());
        assert!(r.holds);
        assert!(r.components.is_empty());
    }

    #[test]
    fn isolation_on_the_matching_family() {
        let p = TwoCliqueParams::new(4, 0, 0, 0, 2).unwrap();
        let c = two_clique_family(&p).unwrap();
        assert!(three_color_isolation(&c).is_empty());
        assert_eq!(c.t_colored_counts()[3], 2);
    }

    #[test]
    fn isolation_flags_adjacent_multicolored_pairs() {
        let mut c = Coloring::new(3).unwrap();
        c.set_colors(0, 1, ColorSet::ALL).unwrap();
        c.set_colors(0, 2, set(&[1, 2])).unwrap();
        c.set_colors(1, 2, set(&[3])).unwrap();
        let v = three_color_isolation(&c);
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].three_colored, (0, 1));
        assert_eq!(v[0].adjacent, (0, 2));
        // and the same configuration indeed carries a rainbow triangle
        assert!(c.has_rainbow_triangle().is_some());
    }

    #[test]
    fn isolation_empty_without_three_colored_pairs() {
        let c = theorem1_construction(6, 4).unwrap();
        assert!(three_color_isolation(&c).is_empty());
    }

    #[test]
    fn diagnostics_pass_at_the_reference_size() {
        let c = theorem1_construction(1000, 793).unwrap();
        let r = proof_diagnostics(&c, 0.01);
        assert!(r.applicable);
        assert!(r.premise_holds);
        assert_eq!(r.max_multiclique_a, 793);
        assert_eq!(r.c3, 0);
        assert_eq!(r.c2, 314_028 + 21_321);
        for check in &r.checks {
            assert_eq!(check.pass, Some(true), "{}: {:?}", check.name, check);
        }
    }

    #[test]
    fn diagnostics_report_small_n_informationally() {
        let c = theorem1_construction(10, 8).unwrap();
        let r = proof_diagnostics(&c, 0.5);
        assert!(r.applicable);
        // with a generous epsilon the premise holds and some checks fail
        assert!(r.premise_holds);
        assert!(r.checks.iter().any(|ch| ch.pass == Some(false)));
    }

    #[test]
    fn diagnostics_not_applicable_on_zero_product() {
        let c = theorem1_construction(6, 6).unwrap();
        let r = proof_diagnostics(&c, 0.01);
        assert!(r.applicable);
        assert!(!r.premise_holds);
        assert!(r.checks.iter().all(|ch| ch.pass.is_none()));
    }

    #[test]
    fn d_inequality_degenerate_equalities() {
        assert!(check_d_inequality(18, 3, 4, 0).unwrap());
        assert!(check_d_inequality(5, 2, 3, 0).unwrap());
        // the excluded degenerate case really does fail
        assert!(!check_d_inequality(6, 0, 0, 1).unwrap());
    }

    #[test]
    fn b_inequality_degenerate_equalities() {
        assert!(check_b_inequality(7, 0, 4).unwrap());
        assert!(check_b_inequality(7, 0, 0).unwrap());
        // outside the clique-size constraint it can fail
        assert!(!check_b_inequality(1, 5, 5).unwrap());
    }

    #[test]
    fn proof_domain_sweep_is_clean() {
        assert!(sweep_inequalities(30).unwrap().is_empty());
        assert!(sweep_inequalities(0).unwrap().is_empty());
        assert!(matches!(
            sweep_inequalities(501),
            Err(AnalysisError::SweepTooLarge(501))
        ));
    }

    #[test]
    fn exploratory_sweep_surfaces_the_degenerate_failures() {
        let rows = sweep_inequalities_exploratory(12).unwrap();
        assert!(!rows.is_empty());
        assert!(rows
            .iter()
            .any(|r| r.rule == "matching_removal" && r.b == 0 && r.c == 0));
        assert!(rows.iter().any(|r| r.rule == "block_merge"));
    }

    #[test]
    fn b_inequality_sweep_at_072_up_to_200() {
        // the standalone domain for the block-merge inequality
        for n in 0..=200u64 {
            let a_min = (72 * n).div_ceil(100);
            for a in a_min..=n {
                let rest = n - a;
                for b in 1..=rest / 2 {
                    let c = rest - b;
                    if c < b {
                        continue;
                    }
                    assert!(
                        check_b_inequality(a, b, c).unwrap(),
                        "n={n} a={a} b={b} c={c}"
                    );
                }
            }
        }
    }

    #[test]
    fn neighborhood_relations_on_closed_constructions() {
        for (n, a) in [(10, 8), (10, 6), (12, 9), (9, 9)] {
            let closed = maximality_closure(&theorem1_construction(n, a).unwrap()).unwrap();
            assert!(
                neighborhood_consistency(&closed).is_empty(),
                "theorem1({n},{a}) after closure"
            );
        }
        let p = TwoCliqueParams::new(9, 3, 3, 3, 0).unwrap();
        let closed = maximality_closure(&two_clique_family(&p).unwrap()).unwrap();
        assert!(neighborhood_consistency(&closed).is_empty());
    }

    #[test]
    fn neighborhood_checker_catches_a_planted_violation() {
        // u-v is {1,2}; w joins u through an exactly-{1,3} pair
        let mut c = Coloring::new(3).unwrap();
        c.set_colors(0, 1, set(&[1, 2])).unwrap();
        c.set_colors(0, 2, set(&[1, 3])).unwrap();
        c.set_colors(1, 2, set(&[1])).unwrap();
        let v = neighborhood_consistency(&c);
        assert!(v.iter().any(|x| x.relation == "mixed_pair_at_u"));
    }

    #[test]
    fn max_clique_on_small_graphs() {
        let c = theorem1_construction(12, 7).unwrap();
        let g = multi_color_subgraph(&c);
        assert_eq!(g.max_clique_size(), 7);
        let empty = multi_color_subgraph(&Coloring::new(5).unwrap());
        assert_eq!(empty.max_clique_size(), 1);
    }
}
