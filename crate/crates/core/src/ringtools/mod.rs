//! Exact scalars in Q(√q) and cone-supported formal series.

mod laurent;
mod scalar;
mod series;

pub use laurent::LaurentPoly;
pub use scalar::Scalar;
pub use series::{series_equal, ConeSeries, Discrepancy, SeriesComparison, SeriesTerm};
