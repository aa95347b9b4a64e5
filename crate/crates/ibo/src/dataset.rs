//! Ordered collection of evaluated points.

/// An ordered list of `(point, objective value)` pairs, in evaluation order.
///
/// This is the observation set the surrogate model is trained on; the engine
/// appends to it after every accepted evaluation.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Dataset {
    points: Vec<Vec<f64>>,
    values: Vec<f64>,
}

impl Dataset {
    pub fn new() -> Self {
        Self::default()
    }

    /// Append one observation. Points must share a dimension; this is the
    /// caller's responsibility and is checked in debug builds only.
    pub fn push(&mut self, point: Vec<f64>, value: f64) {
        debug_assert!(
            self.points.last().map_or(true, |p| p.len() == point.len()),
            "dimension mismatch in dataset"
        );
        self.points.push(point);
        self.values.push(value);
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[f64], f64)> {
        self.points
            .iter()
            .map(Vec::as_slice)
            .zip(self.values.iter().copied())
    }

    /// Index of the lowest value; earliest index wins ties.
    pub fn best_index(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for (i, &v) in self.values.iter().enumerate() {
            match best {
                Some(b) if self.values[b] <= v => {}
                _ => best = Some(i),
            }
        }
        best
    }

    /// The lowest observed value and its point; earliest index wins ties.
    pub fn best(&self) -> Option<(&[f64], f64)> {
        self.best_index()
            .map(|i| (self.points[i].as_slice(), self.values[i]))
    }

    /// The most recently appended observation.
    pub fn last(&self) -> Option<(&[f64], f64)> {
        self.points
            .last()
            .map(|p| (p.as_slice(), *self.values.last().unwrap()))
    }
}

impl FromIterator<(Vec<f64>, f64)> for Dataset {
    fn from_iter<T: IntoIterator<Item = (Vec<f64>, f64)>>(iter: T) -> Self {
        let mut ds = Dataset::new();
        for (p, v) in iter {
            ds.push(p, v);
        }
        ds
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn best_breaks_ties_by_earliest_index() {
        let mut ds = Dataset::new();
        ds.push(vec![0.0], 2.0);
        ds.push(vec![1.0], 1.0);
        ds.push(vec![2.0], 1.0);
        assert_eq!(ds.best_index(), Some(1));
        let (p, v) = ds.best().unwrap();
        assert_eq!(p, &[1.0]);
        assert_eq!(v, 1.0);
    }

    #[test]
    fn last_returns_most_recent() {
        let mut ds = Dataset::new();
        ds.push(vec![0.0], 2.0);
        ds.push(vec![3.0], 5.0);
        assert_eq!(ds.last().unwrap().0, &[3.0]);
        assert_eq!(ds.last().unwrap().1, 5.0);
    }

    #[test]
    fn empty_dataset_has_no_best() {
        assert!(Dataset::new().best().is_none());
        assert!(Dataset::new().last().is_none());
    }
}
