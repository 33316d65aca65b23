//! Observed-data representation: margin metadata, rank/tie structure and
//! empirical marginal cdfs.
//!
//! Everything here is immutable after construction and safe to share across
//! parallel chains.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Measurement scale of one column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MarginKind {
    Continuous,
    /// Ordered categories coded 1..=levels.
    Ordinal { levels: u32 },
    /// Equivalent to Ordinal with two levels for all downstream computation.
    Binary,
}

impl MarginKind {
    pub fn levels(&self) -> Option<u32> {
        match self {
            MarginKind::Continuous => None,
            MarginKind::Ordinal { levels } => Some(*levels),
            MarginKind::Binary => Some(2),
        }
    }

    pub fn is_discrete(&self) -> bool {
        !matches!(self, MarginKind::Continuous)
    }

    pub fn validate(&self) -> Result<()> {
        if let MarginKind::Ordinal { levels } = self {
            if *levels < 2 {
                return Err(Error::invalid(format!(
                    "ordinal margin needs at least 2 levels, got {levels}"
                )));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MarginSpec {
    pub kind: MarginKind,
    pub label: String,
}

impl MarginSpec {
    pub fn new(kind: MarginKind, label: impl Into<String>) -> Self {
        MarginSpec { kind, label: label.into() }
    }

    pub fn continuous(label: impl Into<String>) -> Self {
        Self::new(MarginKind::Continuous, label)
    }

    pub fn ordinal(levels: u32, label: impl Into<String>) -> Self {
        Self::new(MarginKind::Ordinal { levels }, label)
    }

    pub fn binary(label: impl Into<String>) -> Self {
        Self::new(MarginKind::Binary, label)
    }
}

/// n×p mixed-type data with missingness mask, stored column-major. Ordinal
/// levels are stored as their numeric codes 1..=c.
#[derive(Debug, Clone)]
pub struct MixedData {
    n: usize,
    p: usize,
    values: Vec<f64>,
    missing: Vec<bool>,
    margins: Vec<MarginSpec>,
}

impl MixedData {
    /// Build and validate. `values` and `missing` are column-major n·p slabs;
    /// masked entries may hold any payload.
    pub fn new(
        n: usize,
        values: Vec<f64>,
        missing: Vec<bool>,
        margins: Vec<MarginSpec>,
    ) -> Result<Self> {
        let p = margins.len();
        if n == 0 || p == 0 {
            return Err(Error::invalid("data must have at least one row and column"));
        }
        if values.len() != n * p || missing.len() != n * p {
            return Err(Error::invalid(format!(
                "storage size mismatch: expected {}x{} entries",
                n, p
            )));
        }
        let data = MixedData { n, p, values, missing, margins };
        data.validate()?;
        Ok(data)
    }

    fn validate(&self) -> Result<()> {
        for j in 0..self.p {
            let spec = &self.margins[j];
            spec.kind.validate()?;
            let mut first: Option<f64> = None;
            let mut constant = true;
            let mut observed = 0usize;
            for i in 0..self.n {
                if self.is_missing(i, j) {
                    continue;
                }
                let v = self.raw(i, j);
                if !v.is_finite() {
                    return Err(Error::Ingestion {
                        row: i + 1,
                        column: spec.label.clone(),
                        message: format!("non-finite value {v}"),
                    });
                }
                if let Some(c) = spec.kind.levels() {
                    if v.fract() != 0.0 || v < 1.0 || v > c as f64 {
                        return Err(Error::Ingestion {
                            row: i + 1,
                            column: spec.label.clone(),
                            message: format!(
                                "ordinal code {v} is not an integer in 1..={c}"
                            ),
                        });
                    }
                }
                observed += 1;
                match first {
                    None => first = Some(v),
                    Some(f) => {
                        if f != v {
                            constant = false;
                        }
                    }
                }
            }
            if observed == 0 {
                return Err(Error::invalid(format!(
                    "column '{}' is entirely missing",
                    spec.label
                )));
            }
            if constant && observed > 1 {
                return Err(Error::invalid(format!(
                    "column '{}' is constant across its non-missing entries; \
                     its correlations are unidentified",
                    spec.label
                )));
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn margins(&self) -> &[MarginSpec] {
        &self.margins
    }

    pub fn margin(&self, j: usize) -> &MarginSpec {
        &self.margins[j]
    }

    #[inline]
    fn raw(&self, i: usize, j: usize) -> f64 {
        self.values[j * self.n + i]
    }

    #[inline]
    pub fn is_missing(&self, i: usize, j: usize) -> bool {
        self.missing[j * self.n + i]
    }

    /// Observed value, or None when masked.
    #[inline]
    pub fn value(&self, i: usize, j: usize) -> Option<f64> {
        if self.is_missing(i, j) {
            None
        } else {
            Some(self.raw(i, j))
        }
    }

    /// Count of non-missing entries in column j.
    pub fn observed_count(&self, j: usize) -> usize {
        (0..self.n).filter(|&i| !self.is_missing(i, j)).count()
    }

    pub fn missing_rows(&self, j: usize) -> Vec<usize> {
        (0..self.n).filter(|&i| self.is_missing(i, j)).collect()
    }

    pub fn has_missing(&self) -> bool {
        self.missing.iter().any(|&m| m)
    }

    pub fn column_index(&self, label: &str) -> Option<usize> {
        self.margins.iter().position(|m| m.label == label)
    }

    /// New data with column j's values mapped through `f` (same mask, same
    /// margin kind). Intended for monotone-transform invariance checks and
    /// the study transforms.
    pub fn with_transformed_column(&self, j: usize, f: impl Fn(f64) -> f64) -> Result<Self> {
        let mut values = self.values.clone();
        for i in 0..self.n {
            if !self.missing[j * self.n + i] {
                values[j * self.n + i] = f(values[j * self.n + i]);
            }
        }
        MixedData::new(self.n, values, self.missing.clone(), self.margins.clone())
    }
}

/// One tie group: a distinct observed value and the rows attaining it.
#[derive(Debug, Clone, PartialEq)]
pub struct TieGroup {
    pub value: f64,
    pub rows: Vec<usize>,
}

/// Per-column ordered partition of the non-missing rows by distinct observed
/// value — the computational form of the rank constraint set. Equal observed
/// values impose no mutual ordering constraint.
#[derive(Debug, Clone)]
pub struct TieGroups {
    columns: Vec<Vec<TieGroup>>,
}

impl TieGroups {
    pub fn column(&self, j: usize) -> &[TieGroup] {
        &self.columns[j]
    }

    pub fn n_columns(&self) -> usize {
        self.columns.len()
    }
}

/// Build the rank partition of each column. Missing rows are excluded; groups
/// are sorted strictly ascending in value.
pub fn build_tie_groups(data: &MixedData) -> TieGroups {
    let mut columns = Vec::with_capacity(data.p());
    for j in 0..data.p() {
        let mut pairs: Vec<(f64, usize)> = (0..data.n())
            .filter_map(|i| data.value(i, j).map(|v| (v, i)))
            .collect();
        pairs.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
        let mut groups: Vec<TieGroup> = Vec::new();
        for (v, i) in pairs {
            match groups.last_mut() {
                Some(g) if g.value == v => g.rows.push(i),
                _ => groups.push(TieGroup { value: v, rows: vec![i] }),
            }
        }
        columns.push(groups);
    }
    TieGroups { columns }
}

/// Scaled empirical marginal cdf of one column:
/// F̂(t) = #{i : y_i ≤ t} / (n_obs + 1), so values live strictly in (0,1).
#[derive(Debug, Clone, PartialEq)]
pub struct EmpiricalCdf {
    values: Vec<f64>,
    /// Cumulative proportions, same length as `values`.
    cum: Vec<f64>,
    n_obs: usize,
}

/// Empirical cdf of column j (missing rows excluded).
pub fn empirical_cdf(data: &MixedData, j: usize) -> EmpiricalCdf {
    let groups = build_tie_groups(data).columns.swap_remove(j);
    EmpiricalCdf::from_groups(&groups)
}

impl EmpiricalCdf {
    pub(crate) fn from_groups(groups: &[TieGroup]) -> Self {
        let n_obs: usize = groups.iter().map(|g| g.rows.len()).sum();
        let scale = (n_obs + 1) as f64;
        let mut values = Vec::with_capacity(groups.len());
        let mut cum = Vec::with_capacity(groups.len());
        let mut count = 0usize;
        for g in groups {
            count += g.rows.len();
            values.push(g.value);
            cum.push(count as f64 / scale);
        }
        EmpiricalCdf { values, cum, n_obs }
    }

    /// Build directly from a slice of observations (used by the synthetic
    /// generators for reference margins).
    pub fn from_sample(sample: &[f64]) -> Result<Self> {
        if sample.is_empty() {
            return Err(Error::invalid("empty sample for empirical cdf"));
        }
        let mut sorted = sample.to_vec();
        sorted.sort_by(f64::total_cmp);
        let n_obs = sorted.len();
        let scale = (n_obs + 1) as f64;
        let mut values = Vec::new();
        let mut cum = Vec::new();
        let mut count = 0usize;
        let mut iter = sorted.into_iter().peekable();
        while let Some(v) = iter.next() {
            count += 1;
            while iter.peek() == Some(&v) {
                iter.next();
                count += 1;
            }
            values.push(v);
            cum.push(count as f64 / scale);
        }
        Ok(EmpiricalCdf { values, cum, n_obs })
    }

    pub fn n_obs(&self) -> usize {
        self.n_obs
    }

    /// Sorted distinct observed values.
    pub fn support(&self) -> &[f64] {
        &self.values
    }

    /// Cumulative proportion at each support point.
    pub fn cumulative(&self) -> &[f64] {
        &self.cum
    }

    /// F̂(t): scaled proportion of observations ≤ t. Zero below the minimum.
    pub fn eval(&self, t: f64) -> f64 {
        match self.values.partition_point(|&v| v <= t) {
            0 => 0.0,
            k => self.cum[k - 1],
        }
    }

    /// Left limit F̂(t⁻): scaled proportion of observations strictly < t.
    pub fn eval_left(&self, t: f64) -> f64 {
        match self.values.partition_point(|&v| v < t) {
            0 => 0.0,
            k => self.cum[k - 1],
        }
    }

    /// Pseudo-inverse: the smallest stored value whose cumulative proportion
    /// reaches u. Mass above the empirical maximum clamps to the observed
    /// maximum (the empirical cdf has bounded support).
    pub fn pseudo_inverse(&self, u: f64) -> Result<f64> {
        if !(u > 0.0 && u < 1.0) {
            return Err(Error::invalid(format!("pseudo-inverse input {u} must lie in (0,1)")));
        }
        let k = self.cum.partition_point(|&c| c < u);
        if k >= self.values.len() {
            Ok(*self.values.last().unwrap())
        } else {
            Ok(self.values[k])
        }
    }
}

/// A data matrix bundled with its rank structure and empirical margins —
/// the read-only inputs every downstream stage shares.
#[derive(Debug, Clone)]
pub struct Dataset {
    pub data: MixedData,
    pub ties: TieGroups,
    pub cdfs: Vec<EmpiricalCdf>,
}

impl Dataset {
    pub fn new(data: MixedData) -> Self {
        let ties = build_tie_groups(&data);
        let cdfs = (0..data.p())
            .map(|j| EmpiricalCdf::from_groups(ties.column(j)))
            .collect();
        Dataset { data, ties, cdfs }
    }

    pub fn n(&self) -> usize {
        self.data.n()
    }

    pub fn p(&self) -> usize {
        self.data.p()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn column_data(values: &[f64], missing: &[bool], kind: MarginKind) -> MixedData {
        // Two-column helper: the probe column plus a continuous anchor so a
        // single-column probe can still be constant-checked independently.
        let n = values.len();
        let mut vals = values.to_vec();
        let mut miss = missing.to_vec();
        vals.extend((0..n).map(|i| i as f64));
        miss.extend(std::iter::repeat(false).take(n));
        MixedData::new(
            n,
            vals,
            miss,
            vec![MarginSpec::new(kind, "probe"), MarginSpec::continuous("anchor")],
        )
        .unwrap()
    }

    #[test]
    fn tie_groups_definition_case() {
        let d = column_data(&[1.0, 2.0, 2.0, 3.0], &[false; 4], MarginKind::Continuous);
        let tg = build_tie_groups(&d);
        let col = tg.column(0);
        assert_eq!(col.len(), 3);
        assert_eq!(col[0], TieGroup { value: 1.0, rows: vec![0] });
        assert_eq!(col[1], TieGroup { value: 2.0, rows: vec![1, 2] });
        assert_eq!(col[2], TieGroup { value: 3.0, rows: vec![3] });
    }

    #[test]
    fn tie_groups_single_observation() {
        // n=1 would make the anchor constant-check degenerate, so build by hand.
        let d = MixedData::new(
            1,
            vec![5.1],
            vec![false],
            vec![MarginSpec::continuous("x")],
        )
        .unwrap();
        let tg = build_tie_groups(&d);
        assert_eq!(tg.column(0).len(), 1);
        assert_eq!(tg.column(0)[0].rows, vec![0]);
    }

    #[test]
    fn tie_groups_exclude_missing_rows() {
        let d = column_data(
            &[3.0, 1.0, 0.0, 2.0],
            &[false, false, true, false],
            MarginKind::Continuous,
        );
        let col = build_tie_groups(&d);
        let col = col.column(0);
        assert_eq!(col.len(), 3);
        assert_eq!(col[0], TieGroup { value: 1.0, rows: vec![1] });
        assert_eq!(col[1], TieGroup { value: 2.0, rows: vec![3] });
        assert_eq!(col[2], TieGroup { value: 3.0, rows: vec![0] });
    }

    #[test]
    fn empirical_cdf_count_arithmetic() {
        let d = column_data(&[5.0, 2.0, 9.0], &[false; 3], MarginKind::Continuous);
        let cdf = empirical_cdf(&d, 0);
        assert_eq!(cdf.eval(5.0), 0.5);
        assert_eq!(cdf.eval(9.0), 0.75);
        assert_eq!(cdf.eval(1.0), 0.0);
        assert_eq!(cdf.eval(6.5), 0.5);
        assert_eq!(cdf.eval_left(5.0), 0.25);
        assert_eq!(cdf.eval_left(2.0), 0.0);
    }

    #[test]
    fn pseudo_inverse_inf_definition() {
        let d = column_data(&[5.0, 2.0, 9.0], &[false; 3], MarginKind::Continuous);
        let cdf = empirical_cdf(&d, 0);
        assert_eq!(cdf.pseudo_inverse(0.5).unwrap(), 5.0);
        assert_eq!(cdf.pseudo_inverse(1e-9).unwrap(), 2.0);
        assert_eq!(cdf.pseudo_inverse(0.99).unwrap(), 9.0);
        assert!(cdf.pseudo_inverse(0.0).is_err());
        assert!(cdf.pseudo_inverse(1.0).is_err());
        assert!(cdf.pseudo_inverse(-0.5).is_err());
    }

    #[test]
    fn cdf_round_trip_recovers_observed_values() {
        let vals = [4.0, 1.0, 1.0, 2.5, 7.0, 2.5, -3.0];
        let d = column_data(&vals, &[false; 7], MarginKind::Continuous);
        let cdf = empirical_cdf(&d, 0);
        for &y in &vals {
            assert_eq!(cdf.pseudo_inverse(cdf.eval(y)).unwrap(), y);
        }
    }

    #[test]
    fn max_cumulative_is_n_over_n_plus_one() {
        let d = column_data(&[1.0, 2.0, 3.0, 4.0], &[false; 4], MarginKind::Continuous);
        let cdf = empirical_cdf(&d, 0);
        assert_eq!(cdf.eval(4.0), 4.0 / 5.0);
        assert!(cdf.cumulative().iter().all(|&c| c > 0.0 && c < 1.0));
    }

    #[test]
    fn missing_aware_cdf_scaling() {
        let d = column_data(
            &[5.0, 2.0, 0.0, 9.0],
            &[false, false, true, false],
            MarginKind::Continuous,
        );
        let cdf = empirical_cdf(&d, 0);
        assert_eq!(cdf.n_obs(), 3);
        assert_eq!(cdf.eval(5.0), 0.5);
    }

    #[test]
    fn ordinal_code_validation() {
        let bad = MixedData::new(
            3,
            vec![1.0, 2.0, 6.0, 0.0, 1.0, 2.0],
            vec![false; 6],
            vec![
                MarginSpec::ordinal(5, "levels"),
                MarginSpec::continuous("anchor"),
            ],
        );
        assert!(bad.is_err());
        let fractional = MixedData::new(
            2,
            vec![1.5, 2.0, 0.0, 1.0],
            vec![false; 4],
            vec![
                MarginSpec::ordinal(3, "levels"),
                MarginSpec::continuous("anchor"),
            ],
        );
        assert!(fractional.is_err());
    }

    #[test]
    fn constant_and_all_missing_columns_rejected() {
        let constant = MixedData::new(
            3,
            vec![2.0, 2.0, 2.0, 1.0, 2.0, 3.0],
            vec![false; 6],
            vec![MarginSpec::continuous("c"), MarginSpec::continuous("a")],
        );
        assert!(matches!(constant, Err(Error::InvalidInput(_))));

        let all_missing = MixedData::new(
            2,
            vec![1.0, 2.0, 0.0, 0.0],
            vec![false, false, true, true],
            vec![MarginSpec::continuous("ok"), MarginSpec::continuous("gone")],
        );
        assert!(all_missing.is_err());
    }

    #[test]
    fn binary_margin_counts_as_two_levels() {
        assert_eq!(MarginKind::Binary.levels(), Some(2));
        let d = MixedData::new(
            4,
            vec![1.0, 2.0, 1.0, 2.0, 0.5, 1.5, 2.5, 3.5],
            vec![false; 8],
            vec![MarginSpec::binary("b"), MarginSpec::continuous("a")],
        );
        assert!(d.is_ok());
    }

    #[test]
    fn dataset_bundles_consistent_views() {
        let d = column_data(&[3.0, 1.0, 2.0, 2.0], &[false; 4], MarginKind::Continuous);
        let ds = Dataset::new(d);
        assert_eq!(ds.ties.column(0).len(), 3);
        assert_eq!(ds.cdfs[0].support(), &[1.0, 2.0, 3.0]);
        assert_eq!(ds.cdfs[0].eval(2.0), 3.0 / 5.0);
    }
}
