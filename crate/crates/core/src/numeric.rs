//! First-order marching of the approximant triangle along a partitioned
//! path. Works with every step kind, callable ones included.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::system::{ApproxSystem, FloatStep, Order};

/// Points `γ(0), ..., γ(N)` of a discretized path.
#[derive(Clone, Debug, PartialEq)]
pub struct PathPartition {
    points: Vec<Complex64>,
}

impl PathPartition {
    pub fn new(points: Vec<Complex64>) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::Partition("a partition needs at least two points".into()));
        }
        if points.iter().any(|z| !z.is_finite()) {
            return Err(Error::Partition("partition points must be finite".into()));
        }
        Ok(Self { points })
    }

    pub fn points(&self) -> &[Complex64] {
        &self.points
    }

    /// Number of sub-intervals `N`.
    pub fn steps(&self) -> usize {
        self.points.len() - 1
    }

    pub fn delta(&self, k: usize) -> Complex64 {
        self.points[k + 1] - self.points[k]
    }

    pub fn deltas(&self) -> Vec<Complex64> {
        (0..self.steps()).map(|k| self.delta(k)).collect()
    }

    pub fn mesh(&self) -> f64 {
        (0..self.steps()).map(|k| self.delta(k).norm()).fold(0.0, f64::max)
    }

    pub fn start(&self) -> Complex64 {
        self.points[0]
    }

    pub fn end(&self) -> Complex64 {
        self.points[self.steps()]
    }
}

fn segment(x0: Complex64, x1: Complex64, n: usize) -> impl Iterator<Item = Complex64> {
    let d = x1 - x0;
    (0..=n).map(move |k| if k == n { x1 } else { x0 + d * (k as f64 / n as f64) })
}

/// `N + 1` equally spaced points from `x0` to `x1`.
pub fn straight_partition(x0: Complex64, x1: Complex64, n: usize) -> Result<PathPartition> {
    if n == 0 {
        return Err(Error::Partition("N must be at least 1".into()));
    }
    PathPartition::new(segment(x0, x1, n).collect())
}

/// Straight partitions of each segment, joined without repeating joints.
pub fn polyline_partition(vertices: &[Complex64], per_segment: usize) -> Result<PathPartition> {
    if vertices.len() < 2 {
        return Err(Error::Partition("a polyline needs at least two vertices".into()));
    }
    if per_segment == 0 {
        return Err(Error::Partition("N must be at least 1".into()));
    }
    let mut points = vec![vertices[0]];
    for w in vertices.windows(2) {
        points.extend(segment(w[0], w[1], per_segment).skip(1));
    }
    PathPartition::new(points)
}

/// `values[i][k] ≈ g_i^[n](γ(k))`.
#[derive(Clone, Debug, PartialEq)]
pub struct NumericTable {
    pub n: usize,
    pub points: Vec<Complex64>,
    pub values: Vec<Vec<Complex64>>,
}

impl NumericTable {
    /// The approximation `ḡ^[n]` along the path.
    pub fn top(&self) -> &[Complex64] {
        &self.values[0]
    }

    pub fn terminal(&self) -> Complex64 {
        *self.values[0].last().expect("nonempty path")
    }
}

/// Which index the outer loop runs over; the results are identical.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum LoopOrder {
    #[default]
    KOuter,
    IOuter,
}

pub fn numeric_approximate(sys: &ApproxSystem, path: &PathPartition, n: usize) -> Result<NumericTable> {
    numeric_approximate_with(sys, path, n, LoopOrder::default())
}

pub fn numeric_approximate_with(
    sys: &ApproxSystem,
    path: &PathPartition,
    n: usize,
    order: LoopOrder,
) -> Result<NumericTable> {
    if let Order::Finite(o) = sys.order {
        if n > o {
            return Err(Error::OrderExceeded { requested: n, order: o });
        }
    }
    let x0 = sys.basepoint.to_complex();
    if (path.start() - x0).norm() > 1e-12 * x0.norm().max(1.0) {
        return Err(Error::Partition(format!("the path starts at {} but the basepoint is {x0}", path.start())));
    }
    let steps: Vec<FloatStep> = (0..n).map(|i| sys.step(i).to_float()).collect();
    let big_n = path.steps();
    let pts = path.points();
    let mut values: Vec<Vec<Complex64>> = (0..=n)
        .map(|i| {
            let mut row = vec![Complex64::new(0.0, 0.0); big_n + 1];
            row[0] = sys.value(i).to_complex();
            row
        })
        .collect();
    let top = values[n][0];
    values[n].fill(top);

    let cell = |values: &mut Vec<Vec<Complex64>>, i: usize, k: usize| -> Result<()> {
        let v = values[i][k - 1] + steps[i].eval(values[i + 1][k - 1], pts[k - 1]) * (pts[k] - pts[k - 1]);
        if !v.is_finite() {
            return Err(Error::Marching { row: i, step: k });
        }
        values[i][k] = v;
        Ok(())
    };
    match order {
        LoopOrder::KOuter => {
            for k in 1..=big_n {
                for i in 0..n {
                    cell(&mut values, i, k)?;
                }
            }
        }
        LoopOrder::IOuter => {
            for i in (0..n).rev() {
                for k in 1..=big_n {
                    cell(&mut values, i, k)?;
                }
            }
        }
    }
    Ok(NumericTable { n, points: pts.to_vec(), values })
}
