//! Sampling plans for 2-D rectangles and 1-D intervals.

use serde::Serialize;

use crate::error::{Error, Result};

/// Uniform rectangular sampling plan, row-major with x as the outer index.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GridSpec {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
    pub nx: usize,
    pub ny: usize,
    pub exclude_diagonal: bool,
}

impl GridSpec {
    pub fn new(x_min: f64, x_max: f64, y_min: f64, y_max: f64, nx: usize, ny: usize) -> Result<Self> {
        let g = GridSpec { x_min, x_max, y_min, y_max, nx, ny, exclude_diagonal: false };
        g.validate()?;
        Ok(g)
    }

    /// 400x400 uniform over [1e-3, 1/2]^2, diagonal included.
    pub fn default_kyfan() -> Self {
        GridSpec {
            x_min: 1e-3,
            x_max: 0.5,
            y_min: 1e-3,
            y_max: 0.5,
            nx: 400,
            ny: 400,
            exclude_diagonal: false,
        }
    }

    pub fn with_counts(mut self, nx: usize, ny: usize) -> Self {
        self.nx = nx;
        self.ny = ny;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.x_min < self.x_max && self.y_min < self.y_max) {
            return Err(Error::Grid("bounds must be ordered".into()));
        }
        if self.nx < 2 || self.ny < 2 {
            return Err(Error::Grid("point counts must be >= 2".into()));
        }
        Ok(())
    }

    /// Both axis extents must lie in (0, 1/2] for Ky Fan checks.
    pub fn validate_kyfan(&self) -> Result<()> {
        self.validate()?;
        if !(self.x_min > 0.0 && self.y_min > 0.0 && self.x_max <= 0.5 && self.y_max <= 0.5) {
            return Err(Error::Grid("Ky Fan grid must lie within (0, 1/2]^2".into()));
        }
        Ok(())
    }

    pub fn xs(&self) -> Vec<f64> {
        linspace(self.x_min, self.x_max, self.nx)
    }

    pub fn ys(&self) -> Vec<f64> {
        linspace(self.y_min, self.y_max, self.ny)
    }

    /// Row-major point list; diagonal points dropped when the flag is set.
    pub fn points(&self) -> Vec<[f64; 2]> {
        let xs = self.xs();
        let ys = self.ys();
        let mut out = Vec::with_capacity(self.nx * self.ny);
        for &x in &xs {
            for &y in &ys {
                if self.exclude_diagonal && x == y {
                    continue;
                }
                out.push([x, y]);
            }
        }
        out
    }
}

/// Uniform 1-D sampling plan.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Grid1D {
    pub min: f64,
    pub max: f64,
    pub n: usize,
}

impl Grid1D {
    pub fn new(min: f64, max: f64, n: usize) -> Result<Self> {
        if !(min < max) {
            return Err(Error::Grid("bounds must be ordered".into()));
        }
        if n < 2 {
            return Err(Error::Grid("point count must be >= 2".into()));
        }
        Ok(Grid1D { min, max, n })
    }

    /// 4000 uniform points over [1e-4, 1-1e-4].
    pub fn default_unit() -> Self {
        Grid1D { min: 1e-4, max: 1.0 - 1e-4, n: 4000 }
    }

    /// Interval for g(s) checks on (1, s_max], default s_max = 100.
    pub fn default_g() -> Self {
        Grid1D { min: 1.0 + 1e-4, max: 100.0, n: 4000 }
    }

    pub fn points(&self) -> Vec<f64> {
        linspace(self.min, self.max, self.n)
    }
}

pub fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    assert!(n >= 2);
    let step = (b - a) / (n - 1) as f64;
    (0..n).map(|i| if i == n - 1 { b } else { a + i as f64 * step }).collect()
}
