//! Certified extremal search over rainbow-free colorings.
//!
//! Pairs are assigned in lexicographic order by a DFS over the 8 masks per
//! pair (7 when restricted to fully colored). A branch dies when the newly
//! completed triangle admits a rainbow assignment, or when the optimistic
//! per-color bound `e_i + remaining` cannot beat the incumbent. The incumbent
//! is shared across worker tasks through a monotone atomic cell, and ties at
//! the incumbent are never pruned, so the witness set is complete and
//! identical for every thread count.

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;
use thiserror::Error;

use crate::coloring::{
    pair_count, pair_rank, sdr, Color, ColorSet, Coloring, ColoringError, ParseError,
    RainbowWitness,
};
use crate::constructions::frankl_bipartite;
use crate::objective::discrete_best;

/// Hard vertex-count limit of the exact search.
pub const SEARCH_LIMIT: usize = 7;
/// Extended limit, only with `fully_colored` and full symmetry breaking.
pub const SEARCH_LIMIT_EXTENDED: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SymmetryLevel {
    None,
    ColorOnly,
    #[default]
    ColorAndVertex,
}

/// Configuration of one exact search run.
#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub n: usize,
    /// Restrict to colorings where every pair has a nonempty mask.
    pub fully_colored: bool,
    pub symmetry: SymmetryLevel,
    /// Optional caller-supplied incumbent. Must be achievable by an actual
    /// rainbow-free coloring satisfying the configuration, otherwise the
    /// reported optimum may understate (subtrees below the bound are cut).
    pub initial_lower_bound: Option<u128>,
    /// Worker threads: 1 = sequential, 0 = library default.
    pub thread_hint: usize,
    /// Abort after this many expanded nodes, reporting `complete = false`.
    pub node_limit: Option<u64>,
    /// Seed the incumbent from the known constructions (on by default).
    pub seed_constructions: bool,
}

impl SearchConfig {
    pub fn new(n: usize) -> SearchConfig {
        SearchConfig {
            n,
            fully_colored: false,
            symmetry: SymmetryLevel::default(),
            initial_lower_bound: None,
            thread_hint: 1,
            node_limit: None,
            seed_constructions: true,
        }
    }
}

/// Outcome of a search run. `complete` means the whole symmetry-reduced
/// space was covered (no node-limit abort).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub best_product: u128,
    /// Canonical encodings of every optimal coloring class.
    pub witnesses: BTreeSet<String>,
    pub nodes_expanded: u64,
    pub pruned_by_bound: u64,
    pub pruned_by_rainbow: u64,
    pub complete: bool,
}

#[derive(Debug, Error)]
pub enum SearchError {
    #[error(
        "search limited to {limit} vertices (got {n}); n = 8 needs fully_colored \
         and color_and_vertex symmetry"
    )]
    VertexCountTooLarge { n: usize, limit: usize },
    #[error("vertex count must be at least 1")]
    EmptyVertexSet,
    #[error("input coloring already contains a rainbow triangle at {0:?}")]
    RainbowInput(RainbowWitness),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Masks in decreasing popcount order, so strong incumbents surface early.
const ORDER_ALL: [u8; 8] = [7, 3, 5, 6, 1, 2, 4, 0];
/// One representative per orbit of the color-permutation group.
const ORDER_FIRST_SYMMETRIC: [u8; 4] = [7, 3, 1, 0];

fn branch_orders(fully: bool, symmetry: SymmetryLevel) -> (Vec<u8>, Vec<u8>) {
    let rest: Vec<u8> = ORDER_ALL
        .iter()
        .copied()
        .filter(|&m| !(fully && m == 0))
        .collect();
    let first = match symmetry {
        SymmetryLevel::None => rest.clone(),
        _ => ORDER_FIRST_SYMMETRIC
            .iter()
            .copied()
            .filter(|&m| !(fully && m == 0))
            .collect(),
    };
    (first, rest)
}

/// For each pair rank, the earlier-ranked pair pairs that complete a
/// triangle with it: pair `(u,v)` closes `(x,u,v)` for every `x < u`.
fn triangle_closures(n: usize) -> Vec<Vec<(usize, usize)>> {
    let mut tri = vec![Vec::new(); pair_count(n)];
    for u in 0..n {
        for v in u + 1..n {
            let slot = &mut tri[pair_rank(n, u, v)];
            for x in 0..u {
                slot.push((pair_rank(n, x, u), pair_rank(n, x, v)));
            }
        }
    }
    tri
}

struct SharedState {
    best: AtomicU64,
    nodes_used: AtomicU64,
    aborted: AtomicBool,
    node_limit: u64,
}

struct TaskState {
    masks: Vec<u8>,
    counts: [u64; 3],
    /// Floor for both pruning and witness storage; starts at the incumbent.
    best: u64,
    /// Raw mask vectors of leaves achieving `best`; empty if none reached it.
    witnesses: Vec<Vec<u8>>,
    nodes: u64,
    pruned_bound: u64,
    pruned_rainbow: u64,
}

struct Ctx<'a> {
    m: usize,
    tri: &'a [Vec<(usize, usize)>],
    order_first: &'a [u8],
    order_rest: &'a [u8],
    shared: &'a SharedState,
}

fn dfs(ctx: &Ctx<'_>, st: &mut TaskState, depth: usize) {
    if depth == ctx.m {
        let product = st.counts[0] * st.counts[1] * st.counts[2];
        if product > st.best {
            st.best = product;
            st.witnesses.clear();
        }
        if product == st.best {
            st.witnesses.push(st.masks[..ctx.m].to_vec());
        }
        ctx.shared.best.fetch_max(product, Ordering::Relaxed);
        return;
    }
    let order = if depth == 0 {
        ctx.order_first
    } else {
        ctx.order_rest
    };
    let remaining = (ctx.m - depth - 1) as u64;
    for &mask in order {
        if ctx.shared.aborted.load(Ordering::Relaxed) {
            return;
        }
        let closes_rainbow = ctx.tri[depth]
            .iter()
            .any(|&(r1, r2)| sdr(st.masks[r1], st.masks[r2], mask));
        if closes_rainbow {
            st.pruned_rainbow += 1;
            continue;
        }
        let added = [
            mask as u64 & 1,
            (mask >> 1) as u64 & 1,
            (mask >> 2) as u64 & 1,
        ];
        let incumbent = st.best.max(ctx.shared.best.load(Ordering::Relaxed));
        let ub = (st.counts[0] + added[0] + remaining)
            * (st.counts[1] + added[1] + remaining)
            * (st.counts[2] + added[2] + remaining);
        // Strictly-below cuts only: ties may still hold optimal witnesses.
        if ub < incumbent {
            st.pruned_bound += 1;
            continue;
        }
        st.nodes += 1;
        if ctx.shared.node_limit != u64::MAX
            && ctx.shared.nodes_used.fetch_add(1, Ordering::Relaxed) + 1 > ctx.shared.node_limit
        {
            ctx.shared.aborted.store(true, Ordering::Relaxed);
            return;
        }
        st.masks[depth] = mask;
        for (count, add) in st.counts.iter_mut().zip(added) {
            *count += add;
        }
        dfs(ctx, st, depth + 1);
        for (count, add) in st.counts.iter_mut().zip(added) {
            *count -= add;
        }
    }
}

/// Known rainbow-free colorings satisfying the configuration, used to seed
/// the incumbent.
fn seed_colorings(cfg: &SearchConfig) -> Vec<Coloring> {
    let mut seeds = Vec::new();
    if !cfg.seed_constructions {
        return seeds;
    }
    if let Ok(c) = frankl_bipartite(cfg.n) {
        seeds.push(c);
    }
    if cfg.n >= 2 {
        if let Ok(row) = discrete_best(cfg.n) {
            if let Ok(c) = crate::constructions::theorem1_construction(cfg.n, row.best_a) {
                seeds.push(c);
            }
        }
    }
    seeds.retain(|c| !cfg.fully_colored || c.is_fully_colored());
    seeds
}

/// Exhaustive search for the maximum product over all rainbow-free colorings
/// of `cfg.n` vertices (optionally fully colored), with certified optimality
/// and the complete set of optimal colorings up to isomorphism.
pub fn search_exact(cfg: &SearchConfig) -> Result<SearchResult, SearchError> {
    if cfg.n == 0 {
        return Err(SearchError::EmptyVertexSet);
    }
    let limit = if cfg.fully_colored && cfg.symmetry == SymmetryLevel::ColorAndVertex {
        SEARCH_LIMIT_EXTENDED
    } else {
        SEARCH_LIMIT
    };
    if cfg.n > limit {
        return Err(SearchError::VertexCountTooLarge { n: cfg.n, limit });
    }

    let n = cfg.n;
    let m = pair_count(n);
    let tri = triangle_closures(n);
    let (order_first, order_rest) = branch_orders(cfg.fully_colored, cfg.symmetry);

    let seeds: Vec<(u64, Coloring)> = seed_colorings(cfg)
        .into_iter()
        .map(|c| {
            let p = c.edge_counts().product().expect("small n cannot overflow");
            (u64::try_from(p).expect("small n fits u64"), c)
        })
        .collect();
    let seed_best = seeds.iter().map(|(p, _)| *p).max().unwrap_or(0);
    let ilb = cfg
        .initial_lower_bound
        .map(|b| u64::try_from(b).unwrap_or(u64::MAX))
        .unwrap_or(0);
    let incumbent0 = seed_best.max(ilb);

    let shared = SharedState {
        best: AtomicU64::new(incumbent0),
        nodes_used: AtomicU64::new(0),
        aborted: AtomicBool::new(false),
        node_limit: cfg.node_limit.unwrap_or(u64::MAX),
    };
    let ctx = Ctx {
        m,
        tri: &tri,
        order_first: &order_first,
        order_rest: &order_rest,
        shared: &shared,
    };

    let fresh_task = || TaskState {
        masks: vec![0u8; m.max(1)],
        counts: [0; 3],
        best: incumbent0,
        witnesses: Vec::new(),
        nodes: 0,
        pruned_bound: 0,
        pruned_rainbow: 0,
    };

    // Split the DFS tree at a fixed depth into independent subtasks.
    let threads = cfg.thread_hint;
    let split_depth = if threads == 1 { 0 } else { m.min(3) };
    let mut prefix_task = fresh_task();
    let mut prefixes: Vec<(Vec<u8>, [u64; 3])> = Vec::new();
    enumerate_prefixes(&ctx, &mut prefix_task, 0, split_depth, &mut prefixes);

    let run_task = |(prefix, counts): &(Vec<u8>, [u64; 3])| -> TaskState {
        let mut st = fresh_task();
        st.masks[..split_depth].copy_from_slice(prefix);
        st.counts = *counts;
        dfs(&ctx, &mut st, split_depth);
        st
    };

    let task_results: Vec<TaskState> = if threads == 1 {
        prefixes.iter().map(run_task).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("thread pool construction");
        pool.install(|| prefixes.par_iter().map(run_task).collect())
    };

    // Merge: the reported optimum is the best value actually achieved by a
    // seed or a visited leaf; never the bare initial_lower_bound.
    let mut best = seed_best;
    for t in &task_results {
        if !t.witnesses.is_empty() {
            best = best.max(t.best);
        }
    }
    let mut witnesses = BTreeSet::new();
    for (p, c) in &seeds {
        if *p == best {
            witnesses.insert(c.canonical_form()?);
        }
    }
    for t in &task_results {
        if t.witnesses.is_empty() || t.best != best {
            continue;
        }
        for raw in &t.witnesses {
            let coloring = Coloring::from_parts(
                n,
                raw.iter()
                    .map(|&b| ColorSet::from_bits(b).expect("3-bit mask"))
                    .collect(),
            );
            witnesses.insert(coloring.canonical_form()?);
        }
    }

    let mut nodes = prefix_task.nodes;
    let mut pruned_bound = prefix_task.pruned_bound;
    let mut pruned_rainbow = prefix_task.pruned_rainbow;
    for t in &task_results {
        nodes += t.nodes;
        pruned_bound += t.pruned_bound;
        pruned_rainbow += t.pruned_rainbow;
    }

    Ok(SearchResult {
        best_product: best as u128,
        witnesses,
        nodes_expanded: nodes,
        pruned_by_bound: pruned_bound,
        pruned_by_rainbow: pruned_rainbow,
        complete: !shared.aborted.load(Ordering::Relaxed),
    })
}

/// Collects all rainbow-free prefixes of the given depth, applying the
/// first-pair symmetry restriction but no bound pruning.
fn enumerate_prefixes(
    ctx: &Ctx<'_>,
    st: &mut TaskState,
    depth: usize,
    target: usize,
    out: &mut Vec<(Vec<u8>, [u64; 3])>,
) {
    if depth == target {
        out.push((st.masks[..target].to_vec(), st.counts));
        return;
    }
    let order = if depth == 0 {
        ctx.order_first
    } else {
        ctx.order_rest
    };
    for &mask in order {
        let closes_rainbow = ctx.tri[depth]
            .iter()
            .any(|&(r1, r2)| sdr(st.masks[r1], st.masks[r2], mask));
        if closes_rainbow {
            st.pruned_rainbow += 1;
            continue;
        }
        st.nodes += 1;
        st.masks[depth] = mask;
        let added = [
            mask as u64 & 1,
            (mask >> 1) as u64 & 1,
            (mask >> 2) as u64 & 1,
        ];
        for (count, add) in st.counts.iter_mut().zip(added) {
            *count += add;
        }
        enumerate_prefixes(ctx, st, depth + 1, target, out);
        for (count, add) in st.counts.iter_mut().zip(added) {
            *count -= add;
        }
    }
}

/// Re-checks a serialized witness independently of the search: parses it,
/// confirms rainbow-freeness, and compares the exact product.
pub fn verify_witness(encoding: &str, expected_product: u128) -> Result<bool, ParseError> {
    let c = Coloring::parse(encoding)?;
    if c.has_rainbow_triangle().is_some() {
        return Ok(false);
    }
    Ok(c.edge_counts()
        .product()
        .is_ok_and(|p| p == expected_product))
}

/// True iff adding `color` to pair `{u,v}` keeps the coloring rainbow-free.
/// Assumes the coloring is currently rainbow-free: only triangles through
/// the modified pair are inspected.
pub fn can_add_color(
    c: &Coloring,
    u: usize,
    v: usize,
    color: Color,
) -> Result<bool, ColoringError> {
    let current = c.try_colors(u, v)?;
    if current.contains(color) {
        return Ok(false);
    }
    let new_mask = current.with(color).bits();
    let n = c.n();
    let (u, v) = (u.min(v), u.max(v));
    for w in 0..n {
        if w == u || w == v {
            continue;
        }
        let m_uw = c.colors(u.min(w), u.max(w)).bits();
        let m_vw = c.colors(v.min(w), v.max(w)).bits();
        if sdr(new_mask, m_uw, m_vw) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff no color can be added to any pair without creating a rainbow
/// triangle.
pub fn is_maximal_rainbow_free(c: &Coloring) -> bool {
    if c.has_rainbow_triangle().is_some() {
        return false;
    }
    for (u, v, _) in c.pairs() {
        for color in Color::ALL {
            if !c.colors(u, v).contains(color)
                && can_add_color(c, u, v, color).expect("pair indices valid")
            {
                return false;
            }
        }
    }
    true
}

/// Greedily saturates a rainbow-free coloring: scans pairs in lexicographic
/// order, colors 1 then 2 then 3, adding every color that keeps the coloring
/// rainbow-free, and repeats until a full pass adds nothing. The output is
/// rainbow-free and maximal.
pub fn maximality_closure(c: &Coloring) -> Result<Coloring, SearchError> {
    if let Some(w) = c.has_rainbow_triangle() {
        return Err(SearchError::RainbowInput(w));
    }
    let mut out = c.clone();
    loop {
        let mut changed = false;
        for u in 0..out.n() {
            for v in u + 1..out.n() {
                for color in Color::ALL {
                    if !out.colors(u, v).contains(color)
                        && can_add_color(&out, u, v, color).expect("pair indices valid")
                    {
                        let grown = out.colors(u, v).with(color);
                        out.set_colors(u, v, grown).expect("pair indices valid");
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    debug_assert!(out.has_rainbow_triangle().is_none());
    Ok(out)
}
