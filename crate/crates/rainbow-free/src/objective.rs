//! The product objective in continuous and discrete form.
//!
//! For a two-part split with `|X| = x*n`, the three edge densities of the
//! two-part construction multiply to `n^6` times
//!
//! ```text
//! f(x) = x^2/2 * (x^2/2 + (1-x)^2/2) * (x(1-x) + (1-x)^2/2)
//! ```
//!
//! `gamma` is the maximum of `f` on `[0,1]` and `x0` its maximizer. This
//! module computes both, sweeps exact integer clique sizes, and locates the
//! crossover vertex count where the construction first beats
//! `floor(n^2/4)^3`.

use std::sync::OnceLock;

use serde::Serialize;
use thiserror::Error;

use crate::coloring::{EdgeCounts, ProductOverflow};
use crate::constructions::{frankl_bound, theorem1_counts};

/// The widely quoted approximation of the maximizer that does not actually
/// satisfy the stated `1/52 < gamma < 1/51` bounds; kept so reports can
/// surface the discrepancy. Evaluating the objective here gives ~0.01883,
/// which is below `1/52`. The computed maximizer is near 0.7927.
pub const QUOTED_X0: f64 = 0.729;

#[derive(Clone, Copy, Debug, PartialEq, Error)]
pub enum ObjectiveError {
    #[error("objective argument {0} outside [0, 1]")]
    OutOfDomain(f64),
    #[error("tolerance {0} below the supported minimum 1e-12")]
    ToleranceTooTight(f64),
    #[error("tolerance {0} must be a positive finite number")]
    BadTolerance(f64),
    #[error("sweep needs at least 2 vertices, got {0}")]
    TooFewVertices(usize),
    #[error(transparent)]
    Overflow(#[from] ProductOverflow),
}

/// Evaluates the product objective at `x`, written exactly as the three
/// density factors. Agreement with the simplified form is asserted to 1e-14.
pub fn eval_objective(x: f64) -> Result<f64, ObjectiveError> {
    if !(0.0..=1.0).contains(&x) {
        return Err(ObjectiveError::OutOfDomain(x));
    }
    let y = 1.0 - x;
    let factors = (x * x / 2.0) * (x * x / 2.0 + y * y / 2.0) * (x * y + y * y / 2.0);
    let simplified = eval_objective_simplified(x)?;
    assert!(
        (factors - simplified).abs() <= 1e-14,
        "objective forms disagree at x={x}: {factors} vs {simplified}"
    );
    Ok(factors)
}

/// The same objective after factoring: `x^2 (1-x^2) (x^2 + (1-x)^2) / 8`.
pub fn eval_objective_simplified(x: f64) -> Result<f64, ObjectiveError> {
    if !(0.0..=1.0).contains(&x) {
        return Err(ObjectiveError::OutOfDomain(x));
    }
    let y = 1.0 - x;
    Ok(x * x * (1.0 - x * x) * (x * x + y * y) / 8.0)
}

/// Outcome of the global maximization of the objective on `[0,1]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct OptimizationResult {
    /// Maximizer, in `(0,1)`.
    pub x0: f64,
    /// Maximum value; equals `eval_objective(x0)` up to evaluation precision.
    pub gamma: f64,
    /// Width of the final bracket around `x0`; at most the requested
    /// tolerance.
    pub bracket_width: f64,
    /// Number of objective evaluations spent.
    pub evaluations: u64,
}

const GRID_INTERVALS: usize = 10_000;
const GOLDEN_RATIO: f64 = 0.618_033_988_749_894_9;

/// Global maximum of the objective on `[0,1]`: a dense grid scan (1e4+1
/// points) brackets the maximizer, then golden-section refinement shrinks the
/// bracket to `tol`. Returned `gamma` is the best value actually evaluated,
/// so it dominates every grid point by construction. Ties during the scan
/// keep the smaller `x`.
pub fn maximize_objective(tol: f64) -> Result<OptimizationResult, ObjectiveError> {
    if !tol.is_finite() || tol <= 0.0 {
        return Err(ObjectiveError::BadTolerance(tol));
    }
    if tol < 1e-12 {
        return Err(ObjectiveError::ToleranceTooTight(tol));
    }

    let mut evaluations = 0u64;
    let mut eval = |x: f64| -> f64 {
        evaluations += 1;
        eval_objective(x).expect("grid points stay inside [0,1]")
    };

    let mut best_x = 0.0;
    let mut best_val = f64::NEG_INFINITY;
    let mut best_idx = 0usize;
    for i in 0..=GRID_INTERVALS {
        let x = i as f64 / GRID_INTERVALS as f64;
        let v = eval(x);
        if v > best_val {
            best_val = v;
            best_x = x;
            best_idx = i;
        }
    }

    let h = 1.0 / GRID_INTERVALS as f64;
    let mut lo = (best_idx.saturating_sub(1)) as f64 * h;
    let mut hi = ((best_idx + 1).min(GRID_INTERVALS)) as f64 * h;

    // Golden-section refinement on the bracket.
    let mut x1 = hi - GOLDEN_RATIO * (hi - lo);
    let mut x2 = lo + GOLDEN_RATIO * (hi - lo);
    let mut f1 = eval(x1);
    let mut f2 = eval(x2);
    while hi - lo > tol {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + GOLDEN_RATIO * (hi - lo);
            f2 = eval(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - GOLDEN_RATIO * (hi - lo);
            f1 = eval(x1);
        }
        let (cx, cv) = if f1 >= f2 { (x1, f1) } else { (x2, f2) };
        if cv > best_val || (cv == best_val && cx < best_x) {
            best_val = cv;
            best_x = cx;
        }
    }

    Ok(OptimizationResult {
        x0: best_x,
        gamma: best_val,
        bracket_width: hi - lo,
        evaluations,
    })
}

/// `(gamma, x0)` at the default 1e-10 tolerance, computed once per process.
pub fn gamma_x0() -> (f64, f64) {
    static CACHE: OnceLock<(f64, f64)> = OnceLock::new();
    *CACHE.get_or_init(|| {
        let r = maximize_objective(1e-10).expect("default tolerance is valid");
        (r.gamma, r.x0)
    })
}

/// One row of the exact integer sweep at a fixed `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DiscreteSweepRow {
    pub n: usize,
    /// Clique size maximizing the product; smallest on ties.
    pub best_a: usize,
    pub counts: EdgeCounts,
    pub product: u128,
    pub frankl_bound: u128,
    pub beats_frankl: bool,
}

/// Sweeps `a` over `0..=n` through the two-part construction's closed-form
/// counts and returns the exact maximizer row. All arithmetic is exact.
pub fn discrete_best(n: usize) -> Result<DiscreteSweepRow, ObjectiveError> {
    if n < 2 {
        return Err(ObjectiveError::TooFewVertices(n));
    }
    let mut best: Option<(usize, EdgeCounts, u128)> = None;
    for a in 0..=n {
        let counts = theorem1_counts(n, a).expect("a <= n by loop bounds");
        let product = counts.product()?;
        let better = match &best {
            None => true,
            Some((_, _, best_product)) => product > *best_product,
        };
        if better {
            best = Some((a, counts, product));
        }
    }
    let (best_a, counts, product) = best.expect("sweep covers a = 0");
    let bound = frankl_bound(n)?;
    Ok(DiscreteSweepRow {
        n,
        best_a,
        counts,
        product,
        frankl_bound: bound,
        beats_frankl: product > bound,
    })
}

/// Smallest `n <= limit` whose optimal integer product exceeds
/// `floor(n^2/4)^3`, or `None` if no such `n` exists below the limit.
pub fn crossover_n(limit: usize) -> Result<Option<usize>, ObjectiveError> {
    for n in 2..=limit.max(1) {
        if discrete_best(n)?.beats_frankl {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

/// One row of the asymptotic consistency report.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ConvergenceRow {
    pub n: usize,
    /// `product / n^6` for the optimal integer clique size.
    pub ratio: f64,
    /// `gamma - ratio`; positive and shrinking as `n` grows.
    pub deficit: f64,
}

/// Compares the exact integer optimum against `gamma * n^6` for each listed
/// `n`.
pub fn convergence_report(ns: &[usize]) -> Result<Vec<ConvergenceRow>, ObjectiveError> {
    let (gamma, _) = gamma_x0();
    ns.iter()
        .map(|&n| {
            let row = discrete_best(n)?;
            let ratio = row.product as f64 / (n as f64).powi(6);
            Ok(ConvergenceRow {
                n,
                ratio,
                deficit: gamma - ratio,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn objective_endpoint_and_midpoint_values() {
        assert_eq!(eval_objective(0.0).unwrap(), 0.0);
        assert_eq!(eval_objective(1.0).unwrap(), 0.0);
        assert_eq!(eval_objective(0.5).unwrap(), 3.0 / 256.0);
        assert!(matches!(
            eval_objective(1.5),
            Err(ObjectiveError::OutOfDomain(_))
        ));
        assert!(matches!(
            eval_objective(-0.1),
            Err(ObjectiveError::OutOfDomain(_))
        ));
    }

    #[test]
    fn objective_forms_agree_on_grid() {
        for i in 0..=10_000 {
            let x = i as f64 / 10_000.0;
            let a = eval_objective(x).unwrap();
            let b = eval_objective_simplified(x).unwrap();
            assert!((a - b).abs() <= 1e-14, "x={x}");
            if i != 0 && i != 10_000 {
                assert!(a > 0.0, "positive on the open interval, x={x}");
            }
        }
    }

    #[test]
    fn maximum_lies_between_the_stated_bounds() {
        let r = maximize_objective(1e-10).unwrap();
        assert!(
            r.gamma > 1.0 / 52.0 && r.gamma < 1.0 / 51.0,
            "gamma={}",
            r.gamma
        );
        assert!(r.x0 > 0.0 && r.x0 < 1.0);
        assert!(r.bracket_width <= 1e-10);
        // grid-oracle location of the maximizer
        assert!((r.x0 - 0.792736532).abs() < 1e-6, "x0={}", r.x0);
        assert!((r.gamma - 0.019596632024).abs() < 1e-9, "gamma={}", r.gamma);
    }

    #[test]
    fn tolerance_contract() {
        let coarse = maximize_objective(1e-6).unwrap();
        let fine = maximize_objective(1e-10).unwrap();
        assert!((coarse.x0 - fine.x0).abs() <= 1e-6);
        assert!(matches!(
            maximize_objective(1e-13),
            Err(ObjectiveError::ToleranceTooTight(_))
        ));
        assert!(matches!(
            maximize_objective(0.0),
            Err(ObjectiveError::BadTolerance(_))
        ));
    }

    #[test]
    fn quoted_maximizer_misses_the_bounds() {
        let at_quoted = eval_objective(QUOTED_X0).unwrap();
        assert!(at_quoted < 1.0 / 52.0, "f(0.729)={at_quoted}");
        let (gamma, _) = gamma_x0();
        assert!(at_quoted < gamma);
    }

    #[test]
    fn discrete_sweep_reference_rows() {
        let r10 = discrete_best(10).unwrap();
        assert_eq!(r10.best_a, 8);
        assert_eq!(r10.counts, EdgeCounts::new(28, 29, 17));
        assert_eq!(r10.product, 13804);
        assert_eq!(r10.frankl_bound, 15625);
        assert!(!r10.beats_frankl);

        let r15 = discrete_best(15).unwrap();
        assert_eq!(r15.best_a, 12);
        assert_eq!(r15.counts, EdgeCounts::new(66, 69, 39));
        assert_eq!(r15.product, 177_606);
        assert_eq!(r15.frankl_bound, 175_616);
        assert!(r15.beats_frankl);

        let r2 = discrete_best(2).unwrap();
        assert_eq!(r2.product, 0);
        assert_eq!(r2.best_a, 0); // ties broken toward smaller a

        assert!(matches!(
            discrete_best(1),
            Err(ObjectiveError::TooFewVertices(1))
        ));
    }

    #[test]
    fn crossover_is_fifteen() {
        assert_eq!(crossover_n(14).unwrap(), None);
        assert_eq!(crossover_n(20).unwrap(), Some(15));
        assert_eq!(crossover_n(2).unwrap(), None);
    }

    #[test]
    fn convergence_toward_gamma() {
        let rows = convergence_report(&[2, 100, 200, 1000]).unwrap();
        assert!(rows[0].deficit > 1e-2, "n=2 is far from the limit");
        assert!(rows[3].deficit.abs() <= 1e-3);
        assert!(
            rows[2].deficit < rows[1].deficit,
            "deficit shrinks from n=100 to n=200"
        );
        assert!(rows.iter().all(|r| r.deficit > 0.0));
    }

    #[test]
    fn integer_sweep_never_exceeds_gamma() {
        let (gamma, _) = gamma_x0();
        for n in 2..=2000 {
            let row = discrete_best(n).unwrap();
            let ratio = row.product as f64 / (n as f64).powi(6);
            assert!(ratio <= gamma + 1e-6, "n={n} ratio={ratio}");
        }
    }
}
