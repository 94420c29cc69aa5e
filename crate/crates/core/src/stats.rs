//! Agreement, significance and aggregation statistics for run reports.

use std::fmt;

use serde::{Deserialize, Serialize};
use statrs::distribution::{ContinuousCDF, Normal};

/// Significance level for Mann-Whitney decisions.
pub const ALPHA: f64 = 0.05;

/// Combined sample size up to which Mann-Whitney p-values are exact.
pub const EXACT_LIMIT: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StatsError {
    #[error("contingency table is empty")]
    EmptyTable,
    #[error("rater label vectors differ in length ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("sample is empty")]
    EmptySample,
    #[error("sample contains a non-finite value")]
    NonFinite,
    #[error("success rate undefined: {0}")]
    UndefinedRate(String),
}

/// 2x2 agreement counts for two binary raters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContingencyTable {
    /// Both positive.
    pub a: u64,
    /// Rater 1 positive, rater 2 negative.
    pub b: u64,
    /// Rater 1 negative, rater 2 positive.
    pub c: u64,
    /// Both negative.
    pub d: u64,
}

impl ContingencyTable {
    pub fn new(a: u64, b: u64, c: u64, d: u64) -> Result<Self, StatsError> {
        let t = Self { a, b, c, d };
        if t.n() == 0 {
            return Err(StatsError::EmptyTable);
        }
        Ok(t)
    }

    pub fn from_labels(rater1: &[bool], rater2: &[bool]) -> Result<Self, StatsError> {
        if rater1.len() != rater2.len() {
            return Err(StatsError::LengthMismatch(rater1.len(), rater2.len()));
        }
        let mut t = Self { a: 0, b: 0, c: 0, d: 0 };
        for (&x, &y) in rater1.iter().zip(rater2) {
            match (x, y) {
                (true, true) => t.a += 1,
                (true, false) => t.b += 1,
                (false, true) => t.c += 1,
                (false, false) => t.d += 1,
            }
        }
        Self::new(t.a, t.b, t.c, t.d)
    }

    pub fn n(&self) -> u64 {
        self.a + self.b + self.c + self.d
    }

    /// The same table with rater roles swapped.
    pub fn transpose(&self) -> Self {
        Self { a: self.a, b: self.c, c: self.b, d: self.d }
    }

    pub fn observed_agreement(&self) -> f64 {
        (self.a + self.d) as f64 / self.n() as f64
    }

    pub fn expected_agreement(&self) -> f64 {
        let (a, b, c, d) = (self.a as f64, self.b as f64, self.c as f64, self.d as f64);
        let n = self.n() as f64;
        ((a + b) * (a + c) + (c + d) * (b + d)) / (n * n)
    }
}

/// Agreement summary; `None` marks a statistic that is undefined for the table.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AgreementStats {
    pub p_o: f64,
    pub p_e: f64,
    pub kappa: Option<f64>,
    pub p_pos: Option<f64>,
    pub p_neg: Option<f64>,
    pub pabak: f64,
}

impl AgreementStats {
    pub fn of(table: &ContingencyTable) -> Self {
        let (p_pos, p_neg) = pos_neg_agreement(table);
        Self {
            p_o: table.observed_agreement(),
            p_e: table.expected_agreement(),
            kappa: cohen_kappa(table),
            p_pos,
            p_neg,
            pabak: pabak(table),
        }
    }
}

/// Cohen's kappa, undefined when chance agreement is 1.
pub fn cohen_kappa(table: &ContingencyTable) -> Option<f64> {
    let p_o = table.observed_agreement();
    let p_e = table.expected_agreement();
    let n = u128::from(table.n());
    let (a, b, c, d) = (u128::from(table.a), u128::from(table.b), u128::from(table.c), u128::from(table.d));
    if (a + b) * (a + c) + (c + d) * (b + d) == n * n {
        return None;
    }
    Some((p_o - p_e) / (1.0 - p_e))
}

pub fn pos_neg_agreement(table: &ContingencyTable) -> (Option<f64>, Option<f64>) {
    let (a, b, c, d) = (table.a as f64, table.b as f64, table.c as f64, table.d as f64);
    let ratio = |num: f64, den: f64| (den > 0.0).then(|| num / den);
    (ratio(2.0 * a, 2.0 * a + b + c), ratio(2.0 * d, 2.0 * d + b + c))
}

pub fn pabak(table: &ContingencyTable) -> f64 {
    2.0 * table.observed_agreement() - 1.0
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PValueMethod {
    Exact,
    Normal,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MannWhitney {
    pub u_a: f64,
    pub u_b: f64,
    pub p_two_sided: f64,
    pub method: PValueMethod,
}

impl MannWhitney {
    pub fn significant(&self) -> bool {
        self.p_two_sided < ALPHA
    }
}

/// Midranks (1-based) of `values`, plus the tie group sizes.
fn midranks(values: &[f64]) -> (Vec<f64>, Vec<usize>) {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&i, &j| values[i].total_cmp(&values[j]));
    let mut ranks = vec![0.0; values.len()];
    let mut ties = Vec::new();
    let mut start = 0;
    while start < order.len() {
        let mut end = start + 1;
        while end < order.len() && values[order[end]] == values[order[start]] {
            end += 1;
        }
        let rank = (start + end + 1) as f64 / 2.0;
        for &i in &order[start..end] {
            ranks[i] = rank;
        }
        ties.push(end - start);
        start = end;
    }
    (ranks, ties)
}

/// Two-sided Mann-Whitney U test of `a` against `b`.
///
/// Exact permutation p-values (conditional on ties) up to [`EXACT_LIMIT`]
/// combined observations, otherwise the normal approximation with tie and
/// continuity corrections.
pub fn mann_whitney_u(a: &[f64], b: &[f64]) -> Result<MannWhitney, StatsError> {
    if a.is_empty() || b.is_empty() {
        return Err(StatsError::EmptySample);
    }
    if a.iter().chain(b).any(|v| !v.is_finite()) {
        return Err(StatsError::NonFinite);
    }
    let (na, nb) = (a.len(), b.len());
    let pooled: Vec<f64> = a.iter().chain(b).copied().collect();
    let (ranks, ties) = midranks(&pooled);
    let rank_sum_a: f64 = ranks[..na].iter().sum();
    let u_a = rank_sum_a - (na * (na + 1)) as f64 / 2.0;
    let u_b = (na * nb) as f64 - u_a;

    let (p, method) = if na + nb <= EXACT_LIMIT {
        (exact_p(&ranks, na, u_a), PValueMethod::Exact)
    } else {
        (normal_p(na, nb, u_a, &ties), PValueMethod::Normal)
    };
    Ok(MannWhitney { u_a, u_b, p_two_sided: p.min(1.0), method })
}

/// Enumerate all splits of the pooled midranks via a count DP over doubled
/// rank sums, so ties stay exact.
fn exact_p(ranks: &[f64], na: usize, u_a: f64) -> f64 {
    let doubled: Vec<usize> = ranks.iter().map(|r| (r * 2.0).round() as usize).collect();
    let max_sum: usize = doubled.iter().sum();
    // ways[k][s]: subsets of size k with doubled rank sum s
    let mut ways = vec![vec![0f64; max_sum + 1]; na + 1];
    ways[0][0] = 1.0;
    for &r in &doubled {
        for k in (1..=na).rev() {
            for s in (r..=max_sum).rev() {
                let add = ways[k - 1][s - r];
                if add != 0.0 {
                    ways[k][s] += add;
                }
            }
        }
    }
    let total: f64 = ways[na].iter().sum();
    let offset = na * (na + 1); // doubled minimum rank sum
    let observed = (2.0 * u_a).round() as usize + offset;
    let (mut le, mut ge) = (0.0, 0.0);
    for (s, &w) in ways[na].iter().enumerate() {
        if s <= observed {
            le += w;
        }
        if s >= observed {
            ge += w;
        }
    }
    (2.0 * le.min(ge) / total).min(1.0)
}

fn normal_p(na: usize, nb: usize, u_a: f64, ties: &[usize]) -> f64 {
    let (n1, n2) = (na as f64, nb as f64);
    let n = n1 + n2;
    let mean = n1 * n2 / 2.0;
    let tie_term: f64 = ties.iter().map(|&t| (t * t * t - t) as f64).sum::<f64>() / (n * (n - 1.0));
    let sd = (n1 * n2 / 12.0 * ((n + 1.0) - tie_term)).sqrt();
    if sd == 0.0 {
        return 1.0;
    }
    let u = u_a.max(n1 * n2 - u_a);
    let z = (u - mean - 0.5) / sd;
    let std_normal = Normal::new(0.0, 1.0).expect("valid parameters");
    2.0 * std_normal.sf(z)
}

/// Percentage of successful attempts, displayed with one decimal.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SuccessRate(pub f64);

impl fmt::Display for SuccessRate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.1}", self.0)
    }
}

pub fn success_rate(successes: u64, attempts: u64) -> Result<SuccessRate, StatsError> {
    if attempts == 0 {
        return Err(StatsError::UndefinedRate("no attempts".into()));
    }
    if successes > attempts {
        return Err(StatsError::UndefinedRate(format!("{successes} successes out of {attempts} attempts")));
    }
    Ok(SuccessRate(100.0 * successes as f64 / attempts as f64))
}

/// Mean and population standard deviation, shown as `m±s`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MeanStd {
    pub mean: f64,
    pub std: f64,
}

impl fmt::Display for MeanStd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mean == 0.0 && self.std == 0.0 {
            write!(f, "0")
        } else {
            write!(f, "{:.3}±{:.3}", self.mean, self.std)
        }
    }
}

pub fn aggregate(values: &[f64]) -> Result<MeanStd, StatsError> {
    if values.is_empty() {
        return Err(StatsError::EmptySample);
    }
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / n;
    Ok(MeanStd { mean, std: var.sqrt() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(a: u64, b: u64, c: u64, d: u64) -> ContingencyTable {
        ContingencyTable::new(a, b, c, d).unwrap()
    }

    #[test]
    fn kappa_reference_table() {
        let s = AgreementStats::of(&table(40, 10, 5, 45));
        assert!((s.p_o - 0.85).abs() < 1e-12);
        assert!((s.p_e - 0.5).abs() < 1e-12);
        assert!((s.kappa.unwrap() - 0.7).abs() < 1e-12);
        assert!((s.pabak - 0.7).abs() < 1e-12);
        assert!((s.p_pos.unwrap() - 80.0 / 95.0).abs() < 1e-12);
        assert!((s.p_neg.unwrap() - 90.0 / 105.0).abs() < 1e-12);
    }

    #[test]
    fn perfect_agreement() {
        let s = AgreementStats::of(&table(7, 0, 0, 3));
        assert_eq!(s.kappa, Some(1.0));
        assert_eq!((s.p_pos, s.p_neg), (Some(1.0), Some(1.0)));
        assert_eq!(s.pabak, 1.0);
    }

    #[test]
    fn degenerate_tables_are_flagged() {
        let all_pos = AgreementStats::of(&table(12, 0, 0, 0));
        assert_eq!(all_pos.kappa, None);
        assert_eq!(all_pos.p_neg, None);
        assert_eq!(AgreementStats::of(&table(0, 0, 0, 4)).kappa, None);
        assert_eq!(pos_neg_agreement(&table(0, 3, 2, 5)).0, Some(0.0));
        assert_eq!(ContingencyTable::new(0, 0, 0, 0), Err(StatsError::EmptyTable));
    }

    #[test]
    fn pabak_midpoint() {
        assert_eq!(pabak(&table(1, 1, 1, 1)), 0.0);
    }

    #[test]
    fn labels_build_table() {
        let t = ContingencyTable::from_labels(&[true, true, false, false, true], &[true, false, true, false, true]).unwrap();
        assert_eq!(t, table(2, 1, 1, 1));
    }

    #[test]
    fn mann_whitney_small_cases() {
        let r = mann_whitney_u(&[1.0, 2.0], &[3.0, 4.0]).unwrap();
        assert_eq!((r.u_a, r.u_b), (0.0, 4.0));
        assert!((r.p_two_sided - 2.0 / 6.0).abs() < 1e-12);
        assert_eq!(r.method, PValueMethod::Exact);
        let r = mann_whitney_u(&[1.0, 3.0], &[2.0, 4.0]).unwrap();
        assert_eq!((r.u_a, r.u_b), (1.0, 3.0));
        let r = mann_whitney_u(&[2.0, 4.0], &[1.0, 3.0]).unwrap();
        assert_eq!((r.u_a, r.u_b), (3.0, 1.0));
    }

    #[test]
    fn identical_samples_are_not_significant() {
        let xs = [3.0, 1.0, 4.0, 1.0, 5.0];
        let r = mann_whitney_u(&xs, &xs).unwrap();
        assert!((r.p_two_sided - 1.0).abs() < 1e-12);
        assert!(!r.significant());
    }

    #[test]
    fn mann_whitney_rejects_empty() {
        assert_eq!(mann_whitney_u(&[], &[1.0]), Err(StatsError::EmptySample));
    }

    #[test]
    fn success_rates() {
        assert_eq!(success_rate(33, 61).unwrap().to_string(), "54.1");
        assert_eq!(success_rate(46, 46).unwrap().to_string(), "100.0");
        assert_eq!(success_rate(0, 46).unwrap().to_string(), "0.0");
        assert!(success_rate(1, 0).is_err());
    }

    #[test]
    fn aggregates() {
        let m = aggregate(&[2.0; 5]).unwrap();
        assert_eq!((m.mean, m.std), (2.0, 0.0));
        let m = aggregate(&[0.0, 1.0]).unwrap();
        assert_eq!((m.mean, m.std), (0.5, 0.5));
        assert_eq!(m.to_string(), "0.500±0.500");
        assert_eq!(aggregate(&[0.0, 0.0]).unwrap().to_string(), "0");
        assert!(aggregate(&[]).is_err());
    }
}
