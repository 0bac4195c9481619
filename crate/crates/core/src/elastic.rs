//! Base (non-segmented) elastic distances: DTW and its derivatives, plus a
//! lock-step Euclidean baseline.
//!
//! The cumulative-cost recursion is evaluated bottom-up with two rolling rows,
//! so a distance value costs O(min(n1, n2)) memory. [`cost_matrix`] retains the
//! full grid for path inspection.

use crate::error::Error;
use crate::scalar::Scalar;
use crate::series::{point_distance_unchecked, SeriesView, TimeSeries};
use crate::Result;

/// Modified logistic weight function: weight of a phase difference `i`,
/// steepness `g`, ceiling `w_max`, midpoint `n_c`.
///
/// `w = w_max / (1 + exp(-g (i - n_c)))`; constant `w_max / 2` when `g = 0`,
/// nondecreasing in the phase for `g > 0`.
pub fn mlwf_weight<T: Scalar>(phase: usize, n_c: T, g: T, w_max: T) -> T {
    w_max / (T::one() + (-g * (T::from_count(phase) - n_c)).exp())
}

/// Default logistic midpoint: the midpoint of the longer series, `ceil(max(n1, n2) / 2)`.
pub fn default_midpoint<T: Scalar>(n1: usize, n2: usize) -> T {
    T::from_count(n1.max(n2).div_ceil(2))
}

#[derive(Clone, Copy)]
struct Mlwf<T> {
    g: T,
    w_max: T,
    n_c: T,
}

impl<T: Scalar> Mlwf<T> {
    fn weight(&self, phase: usize) -> T {
        mlwf_weight(phase, self.n_c, self.g, self.w_max)
    }
}

/// Rolling-row evaluation of the cumulative-cost recursion. The local cost of
/// aligning points (i, j) is their Euclidean distance, optionally scaled by
/// the logistic weight of the phase difference |i - j|.
fn warp_distance<T: Scalar>(
    a: SeriesView<'_, T>,
    b: SeriesView<'_, T>,
    weights: Option<Mlwf<T>>,
) -> Result<T> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    // Local cost and phase are symmetric, so orient the shorter series along
    // the rolling row.
    let (rows, cols) = if a.len() < b.len() { (b, a) } else { (a, b) };
    let m = cols.len();
    let mut prev = vec![T::zero(); m];
    let mut curr = vec![T::zero(); m];
    for i in 0..rows.len() {
        let p = rows.point(i);
        for j in 0..m {
            let mut cost = point_distance_unchecked(p, cols.point(j));
            if let Some(w) = weights {
                cost = w.weight(i.abs_diff(j)) * cost;
            }
            let best = if i == 0 && j == 0 {
                T::zero()
            } else if i == 0 {
                curr[j - 1]
            } else if j == 0 {
                prev[0]
            } else {
                prev[j - 1].min(prev[j]).min(curr[j - 1])
            };
            curr[j] = cost + best;
        }
        std::mem::swap(&mut prev, &mut curr);
    }
    Ok(prev[m - 1])
}

/// Dynamic time warping distance: minimum cumulative Euclidean cost over all
/// monotone warping paths. Unnormalized, symmetric in its arguments.
pub fn dtw<T: Scalar>(a: SeriesView<'_, T>, b: SeriesView<'_, T>) -> Result<T> {
    warp_distance(a, b, None)
}

/// Weighted DTW with an explicit logistic midpoint `n_c`.
pub fn wdtw_with_midpoint<T: Scalar>(
    a: SeriesView<'_, T>,
    b: SeriesView<'_, T>,
    g: T,
    w_max: T,
    n_c: T,
) -> Result<T> {
    warp_distance(a, b, Some(Mlwf { g, w_max, n_c }))
}

/// Weighted DTW: local costs scaled by the logistic weight of the phase
/// difference, midpoint at the longer series' half length.
pub fn wdtw<T: Scalar>(a: SeriesView<'_, T>, b: SeriesView<'_, T>, g: T, w_max: T) -> Result<T> {
    wdtw_with_midpoint(a, b, g, w_max, default_midpoint(a.len(), b.len()))
}

/// Complexity estimate: root-sum-square of consecutive differences;
/// 0 for constant or single-point series.
pub fn complexity_estimate<T: Scalar>(t: SeriesView<'_, T>) -> T {
    (1..t.len())
        .map(|i| {
            t.point(i - 1)
                .iter()
                .zip(t.point(i))
                .map(|(&x, &y)| {
                    let d = x - y;
                    d * d
                })
                .sum::<T>()
        })
        .sum::<T>()
        .sqrt()
}

/// Complexity correction factor `max(CE) / min(CE)`.
///
/// Defined as 1 when both complexity estimates are 0 (aligning two constant
/// series); errors when exactly one is 0, where the ratio diverges.
pub fn correction_factor<T: Scalar>(a: SeriesView<'_, T>, b: SeriesView<'_, T>) -> Result<T> {
    let ca = complexity_estimate(a);
    let cb = complexity_estimate(b);
    let (lo, hi) = if ca < cb { (ca, cb) } else { (cb, ca) };
    if lo == T::zero() {
        if hi == T::zero() {
            Ok(T::one())
        } else {
            Err(Error::DegenerateComplexity)
        }
    } else {
        Ok(hi / lo)
    }
}

/// Complexity-invariant DTW: `dtw(a, b)` scaled by the correction factor.
/// Always at least `dtw(a, b)`.
pub fn cidtw<T: Scalar>(a: SeriesView<'_, T>, b: SeriesView<'_, T>) -> Result<T> {
    let d = dtw(a, b)?;
    Ok(d * correction_factor(a, b)?)
}

/// First-derivative data of a view, per dimension, same length as the input.
///
/// Interior points use `((x_i - x_{i-1}) + (x_{i+1} - x_{i-1}) / 2) / 2`;
/// endpoints copy their neighbour's value. A two-point series degenerates to
/// the plain slope at both positions.
pub(crate) fn derivative_data<T: Scalar>(t: SeriesView<'_, T>) -> Result<Vec<T>> {
    let n = t.len();
    if n < 2 {
        return Err(Error::SeriesTooShort { len: n, required: 2 });
    }
    let dim = t.dim();
    let two = T::from_count(2);
    let mut out = vec![T::zero(); n * dim];
    if n == 2 {
        for c in 0..dim {
            let slope = t.point(1)[c] - t.point(0)[c];
            out[c] = slope;
            out[dim + c] = slope;
        }
        return Ok(out);
    }
    for i in 1..n - 1 {
        let prev = t.point(i - 1);
        let cur = t.point(i);
        let next = t.point(i + 1);
        for c in 0..dim {
            out[i * dim + c] = ((cur[c] - prev[c]) + (next[c] - prev[c]) / two) / two;
        }
    }
    for c in 0..dim {
        out[c] = out[dim + c];
        out[(n - 1) * dim + c] = out[(n - 2) * dim + c];
    }
    Ok(out)
}

/// First-derivative transform of a series (shape features for DDTW/WDDTW).
pub fn derivative_transform<T: Scalar>(t: &TimeSeries<T>) -> Result<TimeSeries<T>> {
    TimeSeries::new(t.id(), t.dim(), derivative_data(t.as_view())?)
}

/// Derivative DTW: plain DTW over the first-derivative transforms.
pub fn ddtw<T: Scalar>(a: SeriesView<'_, T>, b: SeriesView<'_, T>) -> Result<T> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    let da = derivative_data(a)?;
    let db = derivative_data(b)?;
    warp_distance(
        SeriesView::new(&da, a.dim())?,
        SeriesView::new(&db, b.dim())?,
        None,
    )
}

/// Weighted derivative DTW with an explicit logistic midpoint.
pub fn wddtw_with_midpoint<T: Scalar>(
    a: SeriesView<'_, T>,
    b: SeriesView<'_, T>,
    g: T,
    w_max: T,
    n_c: T,
) -> Result<T> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    let da = derivative_data(a)?;
    let db = derivative_data(b)?;
    warp_distance(
        SeriesView::new(&da, a.dim())?,
        SeriesView::new(&db, b.dim())?,
        Some(Mlwf { g, w_max, n_c }),
    )
}

/// Weighted derivative DTW, midpoint at the longer series' half length.
pub fn wddtw<T: Scalar>(a: SeriesView<'_, T>, b: SeriesView<'_, T>, g: T, w_max: T) -> Result<T> {
    wddtw_with_midpoint(a, b, g, w_max, default_midpoint(a.len(), b.len()))
}

/// Lock-step Euclidean baseline: square root of the summed squared point
/// distances at equal indices. Requires equal lengths.
pub fn euclidean_lockstep<T: Scalar>(a: SeriesView<'_, T>, b: SeriesView<'_, T>) -> Result<T> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok((0..a.len())
        .map(|i| {
            a.point(i)
                .iter()
                .zip(b.point(i))
                .map(|(&x, &y)| {
                    let d = x - y;
                    d * d
                })
                .sum::<T>()
        })
        .sum::<T>()
        .sqrt())
}

/// Full cumulative-cost grid, retained for path extraction and debugging.
#[derive(Debug, Clone)]
pub struct CostMatrix<T> {
    rows: usize,
    cols: usize,
    values: Vec<T>,
}

impl<T: Scalar> CostMatrix<T> {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Cumulative cost of aligning prefixes `a[..=i]` and `b[..=j]`.
    pub fn get(&self, i: usize, j: usize) -> T {
        self.values[i * self.cols + j]
    }

    /// The full-alignment cost, equal to [`dtw`] of the same pair.
    pub fn final_cost(&self) -> T {
        self.values[self.values.len() - 1]
    }

    /// One optimal warping path, as (i, j) index pairs from (0, 0) to the
    /// opposite corner. Ties prefer the diagonal.
    pub fn warping_path(&self) -> Vec<(usize, usize)> {
        let mut path = vec![(self.rows - 1, self.cols - 1)];
        let (mut i, mut j) = (self.rows - 1, self.cols - 1);
        while i > 0 || j > 0 {
            let step = if i == 0 {
                (i, j - 1)
            } else if j == 0 {
                (i - 1, j)
            } else {
                let diag = self.get(i - 1, j - 1);
                let up = self.get(i - 1, j);
                let left = self.get(i, j - 1);
                if diag <= up && diag <= left {
                    (i - 1, j - 1)
                } else if up <= left {
                    (i - 1, j)
                } else {
                    (i, j - 1)
                }
            };
            path.push(step);
            (i, j) = step;
        }
        path.reverse();
        path
    }
}

/// Evaluates the full cumulative-cost grid for `a` against `b` (unweighted).
pub fn cost_matrix<T: Scalar>(a: SeriesView<'_, T>, b: SeriesView<'_, T>) -> Result<CostMatrix<T>> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    let (rows, cols) = (a.len(), b.len());
    let mut values = vec![T::zero(); rows * cols];
    for i in 0..rows {
        let p = a.point(i);
        for j in 0..cols {
            let cost = point_distance_unchecked(p, b.point(j));
            let best = if i == 0 && j == 0 {
                T::zero()
            } else if i == 0 {
                values[j - 1]
            } else if j == 0 {
                values[(i - 1) * cols]
            } else {
                let diag = values[(i - 1) * cols + j - 1];
                let up = values[(i - 1) * cols + j];
                let left = values[i * cols + j - 1];
                diag.min(up).min(left)
            };
            values[i * cols + j] = cost + best;
        }
    }
    Ok(CostMatrix { rows, cols, values })
}
