//! End-to-end comparison of FFLV points and string points, with witnesses.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::crystal;
use crate::degenmap::{self, AffineLatticeMap, TwistOutcome};
use crate::error::{Error, Result};
use crate::fflv::{self, ExponentVector, LatticePointSet};
use crate::rootsys::{fflv_weight, string_weight, DominantWeight, Family, LieType};

/// Witness lists are truncated to this many entries; totals stay exact.
pub const WITNESS_CAP: usize = 10;

/// Default bound on `dim V(λ)` above which a case is skipped.
pub const DEFAULT_BUDGET: u64 = 250_000;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CaseDescriptor {
    #[serde(rename = "type")]
    pub family: Family,
    pub rank: usize,
    pub weight: Vec<u32>,
}

impl CaseDescriptor {
    pub fn new(ty: &LieType, weight: &DominantWeight) -> Self {
        CaseDescriptor {
            family: ty.family,
            rank: ty.rank,
            weight: weight.0.clone(),
        }
    }

    pub fn lie_type(&self) -> LieType {
        LieType {
            family: self.family,
            rank: self.rank,
        }
    }
}

impl std::fmt::Display for CaseDescriptor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let w: Vec<String> = self.weight.iter().map(u32::to_string).collect();
        write!(f, "{}{} [{}]", self.family, self.rank, w.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// Up to [`WITNESS_CAP`] points plus the exact number of offending points.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witnesses {
    pub total: usize,
    pub points: Vec<Vec<i64>>,
}

impl Witnesses {
    fn push(&mut self, p: Vec<i64>) {
        self.total += 1;
        if self.points.len() < WITNESS_CAP {
            self.points.push(p);
        }
    }

    pub fn is_empty(&self) -> bool {
        self.total == 0
    }
}

fn widen(p: &ExponentVector) -> Vec<i64> {
    p.0.iter().map(|&v| v as i64).collect()
}

/// Outcome of comparing `T(P(λ)^ℤ)` with the string points of `λ̃`.
///
/// `missing` holds string points not reached by `T`; `extra` holds images of `T`
/// that are not string points (possibly with negative entries).
///
/// `weight_twist` is the affine map from string weights (target algebra) to FFLV
/// weights (source algebra) fitted on all pairs `(wt T(p), wt p)`; a passing case
/// requires it. `forward_twist` records the attempt in the opposite direction,
/// which fails whenever distinct FFLV weights are affinely dependent in a way the
/// string weights are not.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub case: CaseDescriptor,
    pub status: Status,
    pub fflv_count: u64,
    pub string_count: u64,
    pub weyl_dim: u64,
    pub equal: bool,
    pub missing: Witnesses,
    pub extra: Witnesses,
    pub weight_twist: Option<TwistOutcome>,
    pub forward_twist: Option<TwistOutcome>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Adds `delta` to one entry of the matrix before applying `T`. Used by mutation tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixFault {
    pub row: usize,
    pub col: usize,
    pub delta: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckOptions {
    pub budget: u64,
    pub fault: Option<MatrixFault>,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            budget: DEFAULT_BUDGET,
            fault: None,
        }
    }
}

fn build_map(
    ty: &LieType,
    weight: &DominantWeight,
    fault: Option<MatrixFault>,
) -> Result<AffineLatticeMap> {
    let map = AffineLatticeMap::new(ty, weight)?;
    match fault {
        Some(f) if f.row < map.matrix.len() && f.col < map.matrix.len() => {
            let mut m = (*map.matrix).clone();
            m[f.row][f.col] += f.delta;
            Ok(map.with_matrix(m))
        }
        _ => Ok(map),
    }
}

/// Compares `T(P(λ)^ℤ)` with `Q_w(λ̃)^ℤ`, checks both counts against the Weyl
/// dimension and fits weight twists between `wt p` and `wt T(p)`.
pub fn check_main(
    ty: &LieType,
    weight: &DominantWeight,
    opts: &CheckOptions,
) -> Result<VerificationReport> {
    weight.check_rank(ty)?;
    let start = Instant::now();
    let case = CaseDescriptor::new(ty, weight);
    let weyl_dim = ty.weyl_dim(weight).to_u64().unwrap_or(u64::MAX);
    let mut report = VerificationReport {
        case,
        status: Status::Skipped,
        fflv_count: 0,
        string_count: 0,
        weyl_dim,
        equal: false,
        missing: Witnesses::default(),
        extra: Witnesses::default(),
        weight_twist: None,
        forward_twist: None,
        note: None,
        elapsed: Duration::ZERO,
    };
    if weyl_dim > opts.budget {
        report.note = Some(format!(
            "dim V(λ) = {weyl_dim} exceeds budget {}",
            opts.budget
        ));
        report.elapsed = start.elapsed();
        return Ok(report);
    }

    let source = fflv::points(ty, weight)?;
    let target = crystal::string_points(ty, weight)?;
    let map = build_map(ty, weight, opts.fault)?;
    report.fflv_count = source.len() as u64;
    report.string_count = target.len() as u64;

    let mut images: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut pairs = Vec::with_capacity(source.len());
    let mut all_valid = true;
    for p in &source {
        let raw = map.apply_raw(&p.0);
        match raw
            .iter()
            .map(|&v| u32::try_from(v))
            .collect::<std::result::Result<Vec<_>, _>>()
        {
            Ok(q) => {
                pairs.push((
                    fflv_weight(ty, weight, &p.0)?,
                    string_weight(ty, weight, &q)?,
                ));
                if !target.contains(&ExponentVector(q)) {
                    report.extra.push(raw.clone());
                }
            }
            Err(_) => {
                all_valid = false;
                report.extra.push(raw.clone());
            }
        }
        images.insert(raw);
    }
    for q in &target {
        let wide = widen(q);
        if !images.contains(&wide) {
            report.missing.push(wide);
        }
    }
    report.equal = report.missing.is_empty() && report.extra.is_empty();
    if all_valid {
        let reversed: Vec<_> = pairs.iter().map(|(a, b)| (b.clone(), a.clone())).collect();
        report.weight_twist = Some(degenmap::weight_twist_solve(&reversed));
        report.forward_twist = Some(degenmap::weight_twist_solve(&pairs));
    }

    let counts_ok = report.fflv_count == weyl_dim
        && report.string_count == weyl_dim
        && images.len() as u64 == weyl_dim;
    let twist_ok = report
        .weight_twist
        .as_ref()
        .is_some_and(TwistOutcome::is_fit);
    report.status = if report.equal && counts_ok && twist_ok {
        Status::Pass
    } else {
        Status::Fail
    };
    if report.equal && !counts_ok {
        report.note = Some("sets agree but a count differs from dim V(λ)".into());
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

/// `S(λ₁) + S(λ₂) ⊆ S(λ₁ + λ₂)` for both FFLV points and string points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinkowskiReport {
    #[serde(rename = "type")]
    pub family: Family,
    pub rank: usize,
    pub first: Vec<u32>,
    pub second: Vec<u32>,
    pub fflv_contained: bool,
    pub string_contained: bool,
    pub fflv_witnesses: Witnesses,
    pub string_witnesses: Witnesses,
}

impl MinkowskiReport {
    pub fn passed(&self) -> bool {
        self.fflv_contained && self.string_contained
    }
}

fn containment(lhs: &LatticePointSet, rhs: &LatticePointSet) -> Witnesses {
    let mut w = Witnesses::default();
    for p in lhs.difference(rhs) {
        w.push(widen(p));
    }
    w
}

pub fn check_minkowski(
    ty: &LieType,
    first: &DominantWeight,
    second: &DominantWeight,
) -> Result<MinkowskiReport> {
    first.check_rank(ty)?;
    second.check_rank(ty)?;
    let sum = first.add(second);
    let fflv_w = containment(
        &fflv::points(ty, first)?.minkowski_sum(&fflv::points(ty, second)?),
        &fflv::points(ty, &sum)?,
    );
    let string_w = containment(
        &crystal::string_points(ty, first)?.minkowski_sum(&crystal::string_points(ty, second)?),
        &crystal::string_points(ty, &sum)?,
    );
    Ok(MinkowskiReport {
        family: ty.family,
        rank: ty.rank,
        first: first.0.clone(),
        second: second.0.clone(),
        fflv_contained: fflv_w.is_empty(),
        string_contained: string_w.is_empty(),
        fflv_witnesses: fflv_w,
        string_witnesses: string_w,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DilationRow {
    pub k: u32,
    pub fflv_count: u64,
    pub string_count: u64,
    pub weyl_dim: u64,
    pub image_equal: bool,
}

impl DilationRow {
    pub fn passed(&self) -> bool {
        self.image_equal && self.fflv_count == self.weyl_dim && self.string_count == self.weyl_dim
    }
}

/// Lattice-level dilation check for `kλ`, `1 ≤ k ≤ k_max`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorollaryReport {
    pub case: CaseDescriptor,
    pub rows: Vec<DilationRow>,
}

impl CorollaryReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(DilationRow::passed)
    }
}

pub fn check_lattice_corollary(
    ty: &LieType,
    weight: &DominantWeight,
    k_max: u32,
) -> Result<CorollaryReport> {
    if k_max < 2 {
        return Err(Error::OutOfRange(format!(
            "k_max = {k_max}, need at least 2"
        )));
    }
    weight.check_rank(ty)?;
    let mut rows = Vec::new();
    for k in 1..=k_max {
        let lam = weight.scale(k);
        let source = fflv::points(ty, &lam)?;
        let target = crystal::string_points(ty, &lam)?;
        let map = AffineLatticeMap::new(ty, &lam)?;
        let mut image = LatticePointSet::new(target.dim());
        let mut image_ok = true;
        for p in &source {
            match map.apply(p) {
                Ok(q) => {
                    image.insert(q)?;
                }
                Err(_) => image_ok = false,
            }
        }
        rows.push(DilationRow {
            k,
            fflv_count: source.len() as u64,
            string_count: target.len() as u64,
            weyl_dim: ty.weyl_dim(&lam).to_u64().unwrap_or(u64::MAX),
            image_equal: image_ok && image == target,
        });
    }
    Ok(CorollaryReport {
        case: CaseDescriptor::new(ty, weight),
        rows,
    })
}

/// All dominant weights of one type with `Σ a_i ≤ max_level`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GridEntry {
    pub ty: LieType,
    pub max_level: u32,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GridConfig {
    pub entries: Vec<GridEntry>,
    pub options: CheckOptions,
}

impl GridConfig {
    /// A ranks 1 to 4 up to level 3 and C ranks 2 to 3 up to level 2.
    pub fn standard() -> Self {
        let mut entries: Vec<GridEntry> = (1..=4)
            .map(|n| GridEntry {
                ty: LieType::a(n),
                max_level: 3,
            })
            .collect();
        entries.extend((2..=3).map(|n| GridEntry {
            ty: LieType::c(n),
            max_level: 2,
        }));
        GridConfig {
            entries,
            options: CheckOptions::default(),
        }
    }

    pub fn cases(&self) -> Vec<(LieType, DominantWeight)> {
        let mut cases: Vec<(LieType, DominantWeight)> = self
            .entries
            .iter()
            .flat_map(|e| {
                DominantWeight::enumerate(e.ty.rank, e.max_level)
                    .into_iter()
                    .map(move |w| (e.ty, w))
            })
            .collect();
        cases.sort();
        cases.dedup();
        cases
    }
}

/// Runs [`check_main`] on every case in parallel on the current rayon pool; the
/// result is sorted by case descriptor.
pub fn run_grid(config: &GridConfig) -> Result<Vec<VerificationReport>> {
    let mut reports = config
        .cases()
        .par_iter()
        .map(|(ty, w)| check_main(ty, w, &config.options))
        .collect::<Result<Vec<_>>>()?;
    reports.sort_by(|a, b| a.case.cmp(&b.case));
    Ok(reports)
}

/// [`run_grid`] on a dedicated pool with the given number of threads.
pub fn run_grid_with_threads(
    config: &GridConfig,
    threads: usize,
) -> Result<Vec<VerificationReport>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::OutOfRange(format!("thread pool: {e}")))?;
    pool.install(|| run_grid(config))
}

/// True if every report passed; skipped cases count as not passed.
pub fn all_passed(reports: &[VerificationReport]) -> bool {
    reports.iter().all(VerificationReport::passed)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[u32]) -> DominantWeight {
        DominantWeight::new(v.to_vec())
    }

    #[test]
    fn main_small_cases() {
        let opts = CheckOptions::default();
        for (ty, lam, count) in [
            (LieType::a(1), w(&[1]), 2),
            (LieType::a(2), w(&[1, 0]), 3),
            (LieType::c(2), w(&[0, 1]), 5),
        ] {
            let r = check_main(&ty, &lam, &opts).unwrap();
            assert!(r.passed(), "{r:?}");
            assert_eq!(
                (r.fflv_count, r.string_count, r.weyl_dim),
                (count, count, count)
            );
        }
    }

    #[test]
    fn forward_twist_can_fail_while_reverse_fits() {
        // ±ε1, ±ε2 are affinely dependent; their images ε1, ε2, ε3, -ε3 are not.
        let r = check_main(&LieType::c(2), &w(&[1, 0]), &CheckOptions::default()).unwrap();
        assert!(r.passed());
        assert!(r.weight_twist.as_ref().unwrap().is_fit());
        assert!(!r.forward_twist.as_ref().unwrap().is_fit());
    }

    #[test]
    fn budget_skips() {
        let opts = CheckOptions {
            budget: 2,
            fault: None,
        };
        let r = check_main(&LieType::a(2), &w(&[1, 0]), &opts).unwrap();
        assert_eq!(r.status, Status::Skipped);
        assert!(r.note.is_some());
        assert!(!all_passed(&[r]));
    }

    #[test]
    fn fault_produces_witness() {
        let opts = CheckOptions {
            budget: DEFAULT_BUDGET,
            fault: Some(MatrixFault {
                row: 0,
                col: 0,
                delta: 1,
            }),
        };
        let r = check_main(&LieType::a(1), &w(&[1]), &opts).unwrap();
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.missing.points, vec![vec![0]]);
    }

    #[test]
    fn witness_cap() {
        let mut ws = Witnesses::default();
        for k in 0..25 {
            ws.push(vec![k]);
        }
        assert_eq!(ws.total, 25);
        assert_eq!(ws.points.len(), WITNESS_CAP);
    }

    #[test]
    fn minkowski_examples() {
        let r = check_minkowski(&LieType::a(3), &w(&[1, 0, 0]), &w(&[0, 1, 0])).unwrap();
        assert!(r.passed());
        let r = check_minkowski(&LieType::c(2), &w(&[1, 0]), &w(&[1, 0])).unwrap();
        assert!(r.passed());
        let r = check_minkowski(&LieType::a(2), &w(&[1, 1]), &w(&[0, 0])).unwrap();
        assert!(r.passed());
    }

    #[test]
    fn corollary_examples() {
        let r = check_lattice_corollary(&LieType::a(2), &w(&[1, 0]), 3).unwrap();
        let counts: Vec<u64> = r.rows.iter().map(|row| row.fflv_count).collect();
        assert_eq!(counts, vec![3, 6, 10]);
        assert!(r.passed());
        let r = check_lattice_corollary(&LieType::c(2), &w(&[0, 0]), 2).unwrap();
        assert!(r.rows.iter().all(|row| row.weyl_dim == 1 && row.passed()));
        assert!(check_lattice_corollary(&LieType::a(2), &w(&[1, 0]), 1).is_err());
    }

    #[test]
    fn empty_grid() {
        let reports = run_grid(&GridConfig::default()).unwrap();
        assert!(reports.is_empty());
        assert!(all_passed(&reports));
    }

    #[test]
    fn grid_is_sorted() {
        let config = GridConfig {
            entries: vec![
                GridEntry {
                    ty: LieType::c(2),
                    max_level: 1,
                },
                GridEntry {
                    ty: LieType::a(2),
                    max_level: 1,
                },
            ],
            options: CheckOptions::default(),
        };
        let reports = run_grid_with_threads(&config, 2).unwrap();
        assert_eq!(reports.len(), 6);
        assert!(reports.windows(2).all(|p| p[0].case < p[1].case));
        assert!(all_passed(&reports));
    }
}
