//! Time-series domain types and element-level distance primitives.

use crate::error::Error;
use crate::scalar::Scalar;
use crate::Result;

/// An ordered sequence of `dim`-dimensional points, stored row-major.
///
/// Construction validates the invariants the kernels rely on: at least one
/// point, a whole number of points, and finite components throughout. All
/// types are immutable after construction and safe to share across threads.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeries<T> {
    id: String,
    dim: usize,
    data: Vec<T>,
}

impl<T: Scalar> TimeSeries<T> {
    /// Builds a series from row-major data (`data.len()` must be a multiple of `dim`).
    pub fn new(id: impl Into<String>, dim: usize, data: Vec<T>) -> Result<Self> {
        let id = id.into();
        if dim == 0 {
            return Err(Error::InvalidParameter(format!(
                "series {id:?}: dimension must be positive"
            )));
        }
        if data.is_empty() {
            return Err(Error::EmptySeries { id });
        }
        if data.len() % dim != 0 {
            return Err(Error::RaggedData {
                id,
                len: data.len(),
                dim,
            });
        }
        if let Some(bad) = data.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite {
                id,
                index: bad / dim,
            });
        }
        Ok(Self { id, dim, data })
    }

    /// Convenience constructor for one-dimensional series.
    pub fn univariate(id: impl Into<String>, values: Vec<T>) -> Result<Self> {
        Self::new(id, 1, values)
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of points.
    pub fn len(&self) -> usize {
        self.data.len() / self.dim
    }

    /// Always false: the constructor rejects empty series.
    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    /// The `i`-th point as a component slice.
    pub fn point(&self, i: usize) -> &[T] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn points(&self) -> impl Iterator<Item = &[T]> {
        self.data.chunks_exact(self.dim)
    }

    /// Raw row-major component data.
    pub fn data(&self) -> &[T] {
        &self.data
    }

    pub fn as_view(&self) -> SeriesView<'_, T> {
        SeriesView {
            data: &self.data,
            dim: self.dim,
        }
    }

    /// Zero-copy view of the points in `start..end`.
    pub fn range_view(&self, start: usize, end: usize) -> SeriesView<'_, T> {
        SeriesView {
            data: &self.data[start * self.dim..end * self.dim],
            dim: self.dim,
        }
    }

    /// Same data under a different identifier.
    pub fn with_id(mut self, id: impl Into<String>) -> Self {
        self.id = id.into();
        self
    }
}

/// Borrowed window over a series; all distance kernels operate on views.
#[derive(Debug, Clone, Copy)]
pub struct SeriesView<'a, T> {
    data: &'a [T],
    dim: usize,
}

impl<'a, T: Scalar> SeriesView<'a, T> {
    /// Wraps a row-major slice as a view; the slice must be nonempty and a
    /// whole number of `dim`-sized points.
    pub fn new(data: &'a [T], dim: usize) -> Result<Self> {
        if dim == 0 || data.is_empty() || data.len() % dim != 0 {
            return Err(Error::InvalidParameter(format!(
                "view over {} values is not a whole number of {dim}-dimensional points",
                data.len()
            )));
        }
        Ok(Self { data, dim })
    }

    /// View over a one-dimensional slice.
    pub fn univariate(values: &'a [T]) -> Result<Self> {
        Self::new(values, 1)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.data.len() / self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn point(&self, i: usize) -> &'a [T] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn points(&self) -> impl Iterator<Item = &'a [T]> {
        self.data.chunks_exact(self.dim)
    }

    pub fn data(&self) -> &'a [T] {
        self.data
    }
}

/// Euclidean distance between two points of equal dimension.
pub fn point_distance<T: Scalar>(a: &[T], b: &[T]) -> Result<T> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(point_distance_unchecked(a, b))
}

/// Euclidean distance without the dimension check; callers verify once up front.
#[inline]
pub(crate) fn point_distance_unchecked<T: Scalar>(a: &[T], b: &[T]) -> T {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(&x, &y)| {
            let d = x - y;
            d * d
        })
        .sum::<T>()
        .sqrt()
}

/// Distances between consecutive points; length `n - 1`, empty for a single point.
pub fn consecutive_distances<T: Scalar>(t: SeriesView<'_, T>) -> Vec<T> {
    (1..t.len())
        .map(|i| point_distance_unchecked(t.point(i - 1), t.point(i)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn point_distance_identity() {
        assert_eq!(point_distance(&[4.0], &[4.0]).unwrap(), 0.0);
        assert_eq!(point_distance(&[1.0, 2.0, 3.0], &[1.0, 2.0, 3.0]).unwrap(), 0.0);
    }

    #[test]
    fn point_distance_3_4_5() {
        assert_relative_eq!(point_distance(&[0.0, 3.0], &[4.0, 0.0]).unwrap(), 5.0);
    }

    #[test]
    fn point_distance_dimension_mismatch() {
        assert!(matches!(
            point_distance(&[1.0], &[1.0, 2.0]),
            Err(Error::DimensionMismatch { left: 1, right: 2 })
        ));
    }

    #[test]
    fn consecutive_distances_fig_series() {
        let t = TimeSeries::univariate("a", vec![4.0, 5.0, 6.0, 1.0, 2.0, 3.0, 7.0, 8.0, 9.0]).unwrap();
        assert_eq!(
            consecutive_distances(t.as_view()),
            vec![1.0, 1.0, 5.0, 1.0, 1.0, 4.0, 1.0, 1.0]
        );
    }

    #[test]
    fn consecutive_distances_constant_and_single() {
        let c = TimeSeries::univariate("c", vec![7.0, 7.0, 7.0]).unwrap();
        assert_eq!(consecutive_distances(c.as_view()), vec![0.0, 0.0]);
        let s = TimeSeries::univariate("s", vec![5.0]).unwrap();
        assert!(consecutive_distances(s.as_view()).is_empty());
    }

    #[test]
    fn construction_rejects_empty_nan_ragged() {
        assert!(matches!(
            TimeSeries::<f64>::univariate("e", vec![]),
            Err(Error::EmptySeries { .. })
        ));
        assert!(matches!(
            TimeSeries::univariate("n", vec![1.0, f64::NAN]),
            Err(Error::NonFinite { index: 1, .. })
        ));
        assert!(matches!(
            TimeSeries::univariate("i", vec![f64::INFINITY]),
            Err(Error::NonFinite { index: 0, .. })
        ));
        assert!(matches!(
            TimeSeries::new("r", 2, vec![1.0, 2.0, 3.0]),
            Err(Error::RaggedData { .. })
        ));
        assert!(matches!(
            TimeSeries::new("z", 0, vec![1.0]),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn multivariate_points_and_views() {
        let t = TimeSeries::new("m", 3, vec![1.0, 2.0, 3.0, 4.0, 5.0, 6.0]).unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t.point(1), &[4.0, 5.0, 6.0]);
        let v = t.range_view(1, 2);
        assert_eq!(v.len(), 1);
        assert_eq!(v.point(0), &[4.0, 5.0, 6.0]);
    }
}
