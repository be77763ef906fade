//! Uniformly sampled time series with labeled columns.

use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use crate::error::{Error, Result};

/// A uniformly sampled trajectory. Rows are time samples, columns are the
/// labeled variables. Sample `i` sits at `times[i] = i * dt` unless the
/// trajectory was built from an offset slice.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub dt: f64,
    pub times: Vec<f64>,
    pub labels: Vec<String>,
    data: Vec<f64>,
    width: usize,
}

impl Trajectory {
    pub fn new(dt: f64, labels: Vec<String>) -> Self {
        let width = labels.len();
        Trajectory {
            dt,
            times: Vec::new(),
            labels,
            data: Vec::new(),
            width,
        }
    }

    pub fn with_capacity(dt: f64, labels: Vec<String>, rows: usize) -> Self {
        let width = labels.len();
        Trajectory {
            dt,
            times: Vec::with_capacity(rows),
            labels,
            data: Vec::with_capacity(rows * width),
            width,
        }
    }

    pub fn push_row(&mut self, t: f64, row: &[f64]) {
        debug_assert_eq!(row.len(), self.width);
        self.times.push(t);
        self.data.extend_from_slice(row);
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.width..(i + 1) * self.width]
    }

    pub fn column_index(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::Usage(format!("no column '{label}' in trajectory")))
    }

    pub fn column(&self, label: &str) -> Result<Vec<f64>> {
        let j = self.column_index(label)?;
        Ok((0..self.len()).map(|i| self.row(i)[j]).collect())
    }

    /// Checks uniform spacing and rectangular shape.
    pub fn validate(&self) -> Result<()> {
        if self.data.len() != self.times.len() * self.width {
            return Err(Error::Usage("ragged trajectory data".into()));
        }
        for (i, pair) in self.times.windows(2).enumerate() {
            let gap = pair[1] - pair[0];
            if (gap - self.dt).abs() > 1e-9 * self.dt.max(1.0) {
                return Err(Error::Usage(format!(
                    "non-uniform spacing at sample {i}: {gap} vs dt = {}",
                    self.dt
                )));
            }
        }
        Ok(())
    }

    /// Keeps every `stride`-th row (always keeps the first row).
    pub fn subsample(&self, stride: usize) -> Trajectory {
        assert!(stride >= 1);
        let mut out = Trajectory::new(self.dt * stride as f64, self.labels.clone());
        for i in (0..self.len()).step_by(stride) {
            out.push_row(self.times[i], self.row(i));
        }
        out
    }

    /// Writes `t,<labels...>` CSV in scientific notation, full precision.
    pub fn write_csv(&self, path: &Path, stride: usize) -> Result<()> {
        let file = std::fs::File::create(path)?;
        let mut w = BufWriter::new(file);
        writeln!(w, "t,{}", self.labels.join(","))?;
        for i in (0..self.len()).step_by(stride.max(1)) {
            write!(w, "{:.15e}", self.times[i])?;
            for v in self.row(i) {
                write!(w, ",{v:.15e}")?;
            }
            writeln!(w)?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn read_csv(path: &Path) -> Result<Trajectory> {
        let file = std::fs::File::open(path)?;
        let reader = BufReader::new(file);
        let mut lines = reader.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::Usage(format!("{}: empty CSV", path.display())))??;
        let mut cols = header.split(',');
        if cols.next() != Some("t") {
            return Err(Error::Usage(format!(
                "{}: first CSV column must be 't'",
                path.display()
            )));
        }
        let labels: Vec<String> = cols.map(|s| s.trim().to_string()).collect();
        let width = labels.len();
        let mut times = Vec::new();
        let mut data = Vec::new();
        for (lineno, line) in lines.enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let mut fields = line.split(',');
            let parse = |s: Option<&str>| -> Result<f64> {
                s.ok_or_else(|| Error::Usage(format!("line {}: short row", lineno + 2)))?
                    .trim()
                    .parse::<f64>()
                    .map_err(|e| Error::Usage(format!("line {}: {e}", lineno + 2)))
            };
            times.push(parse(fields.next())?);
            for _ in 0..width {
                data.push(parse(fields.next())?);
            }
        }
        let dt = if times.len() >= 2 { times[1] - times[0] } else { 0.0 };
        let traj = Trajectory {
            dt,
            times,
            labels,
            data,
            width,
        };
        traj.validate()?;
        Ok(traj)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Trajectory {
        let mut t = Trajectory::new(0.5, vec!["a".into(), "b".into()]);
        t.push_row(0.0, &[1.0, 2.0]);
        t.push_row(0.5, &[3.0, 4.0]);
        t.push_row(1.0, &[5.0, 6.0]);
        t
    }

    #[test]
    fn round_trips_through_csv() {
        let traj = sample();
        let dir = std::env::temp_dir().join("mzgrid_traj_test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("t.csv");
        traj.write_csv(&path, 1).unwrap();
        let back = Trajectory::read_csv(&path).unwrap();
        assert_eq!(back.labels, traj.labels);
        assert_eq!(back.len(), traj.len());
        for i in 0..traj.len() {
            assert_eq!(back.row(i), traj.row(i));
        }
    }

    #[test]
    fn subsample_keeps_first_row_and_stride() {
        let traj = sample();
        let sub = traj.subsample(2);
        assert_eq!(sub.len(), 2);
        assert_eq!(sub.row(0), &[1.0, 2.0]);
        assert_eq!(sub.row(1), &[5.0, 6.0]);
        assert!((sub.dt - 1.0).abs() < 1e-15);
    }

    #[test]
    fn validate_rejects_non_uniform_times() {
        let mut traj = sample();
        traj.times[2] = 1.7;
        assert!(traj.validate().is_err());
    }
}
