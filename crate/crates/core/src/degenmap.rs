//! The affine unimodular map `T_{X_n,λ}(p) = t_{X_n,λ} + 𝒳_n(p)` from FFLV
//! coordinates to string coordinates, and the fold/unfold correspondences
//! between `C_m` and `A_{2m-1}`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fflv::ExponentVector;
use crate::linalg::{self, Solution};
use crate::rootsys::{DominantWeight, Family, LabelBasis, LieType, RootLabel, Weight};

/// Square integer matrix, `matrix[row][col]`; column `k` is the image of the k-th basis label.
pub type IntMatrix = Vec<Vec<i64>>;

fn matrix_cache() -> &'static Mutex<HashMap<LieType, Arc<IntMatrix>>> {
    static CACHE: OnceLock<Mutex<HashMap<LieType, Arc<IntMatrix>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The linear map `𝒳_n` in the descending label basis.
///
/// Type A: `e_{a,b} ↦ -Σ_{b ≤ c ≤ n} e_{a,c} - Σ_{c < a} e_{c,b}`.
/// Type C: `e_{a,ā} ↦ -(e_{a,ā} + 2 Σ_{c<a} e_{c,ā})`, and otherwise
/// `e_{a,b} ↦ -(Σ_{b ≤ c ≤ ā} e_{a,c} + Σ_{c<a} (e_{c,b} + e_{c,ā}))`,
/// column ranges taken in the symplectic order.
pub fn build_matrix(ty: &LieType) -> Result<Arc<IntMatrix>> {
    if let Some(m) = matrix_cache().lock().expect("matrix cache").get(ty) {
        return Ok(Arc::clone(m));
    }
    let m = Arc::new(compute_matrix(ty));
    check_unimodular(ty, &m)?;
    matrix_cache()
        .lock()
        .expect("matrix cache")
        .insert(*ty, Arc::clone(&m));
    Ok(m)
}

fn compute_matrix(ty: &LieType) -> IntMatrix {
    let n = ty.rank;
    let basis = LabelBasis::new(*ty);
    let size = basis.len();
    let mut m = vec![vec![0i64; size]; size];
    let pos = |row: usize, key: usize| {
        basis
            .position_by_key(row, key)
            .unwrap_or_else(|| panic!("label ({row}, key {key}) outside H({ty})"))
    };
    for (col, label) in basis.labels().iter().enumerate() {
        let a = label.row;
        let b = label.column_key(n);
        let mut add = |row: usize, key: usize, v: i64| m[pos(row, key)][col] -= v;
        match ty.family {
            Family::A => {
                for c in b..=n {
                    add(a, c, 1);
                }
                for c in 1..a {
                    add(c, b, 1);
                }
            }
            Family::C => {
                let a_bar = 2 * n - a;
                if b == a_bar {
                    add(a, a_bar, 1);
                    for c in 1..a {
                        add(c, b, 2);
                    }
                } else {
                    for c in b..=a_bar {
                        add(a, c, 1);
                    }
                    for c in 1..a {
                        add(c, b, 1);
                        add(c, a_bar, 1);
                    }
                }
            }
        }
    }
    m
}

fn check_unimodular(ty: &LieType, m: &IntMatrix) -> Result<()> {
    let allowed: &[i64] = match ty.family {
        Family::A => &[0, -1],
        Family::C => &[0, -1, -2],
    };
    if let Some(bad) = m.iter().flatten().find(|v| !allowed.contains(v)) {
        return Err(Error::gate(
            "matrix-entries",
            format!("{ty}: entry {bad} outside {allowed:?}"),
        ));
    }
    let det = linalg::determinant(m);
    if !linalg::abs_is_one(&det) {
        return Err(Error::gate("unimodular", format!("{ty}: det = {det}")));
    }
    Ok(())
}

/// Exact determinant of `𝒳_n`.
pub fn determinant(ty: &LieType) -> Result<BigInt> {
    Ok(linalg::determinant(&build_matrix(ty)?))
}

/// The ordered basis `B_n` under which `-𝒳_n` is upper triangular: for type A
/// `(e_{1,n}, …, e_{n,n}, e_{1,n-1}, …, e_{1,1})`; for type C the barred labels
/// `(e_{1,1̄}, e_{1,2̄}, e_{2,2̄}, …, e_{n-1,(n-1)‾})` come first.
pub fn triangular_basis(ty: &LieType) -> Vec<RootLabel> {
    let n = ty.rank;
    let mut out = Vec::new();
    if ty.family == Family::C {
        for j in 1..n {
            out.extend((1..=j).map(|l| RootLabel::barred(l, j)));
        }
    }
    for j in (1..=n).rev() {
        out.extend((1..=j).map(|l| RootLabel::new(l, j)));
    }
    out
}

/// Checks that `-𝒳_n`, reordered by [`triangular_basis`], is upper unitriangular.
pub fn is_triangular_in_basis(ty: &LieType, m: &IntMatrix) -> bool {
    let basis = LabelBasis::new(*ty);
    let order: Option<Vec<usize>> = triangular_basis(ty)
        .iter()
        .map(|l| basis.position(l))
        .collect();
    let Some(order) = order else {
        return false;
    };
    if order.len() != basis.len() {
        return false;
    }
    order.iter().enumerate().all(|(r, &pr)| {
        order.iter().enumerate().all(|(c, &pc)| {
            let v = -m[pr][pc];
            match r.cmp(&c) {
                std::cmp::Ordering::Equal => v == 1,
                std::cmp::Ordering::Greater => v == 0,
                std::cmp::Ordering::Less => true,
            }
        })
    })
}

/// `t_{X_n,ω_i}` in the descending label basis.
pub fn fundamental_translation(ty: &LieType, i: usize) -> Result<Vec<i64>> {
    let n = ty.rank;
    if i == 0 || i > n {
        return Err(Error::OutOfRange(format!("fundamental index {i} for {ty}")));
    }
    let basis = LabelBasis::new(*ty);
    Ok(basis
        .labels()
        .iter()
        .map(|label| {
            let l = label.row;
            let j = label.column_key(n);
            match ty.family {
                Family::A => i64::from(j >= i && l <= i),
                Family::C => {
                    let (i_bar, l_bar) = (2 * n - i, 2 * n - l);
                    if (i <= j && j < i_bar && l <= i) || (l_bar == j && l <= i) {
                        1
                    } else if l_bar > j && i_bar <= j {
                        2
                    } else {
                        0
                    }
                }
            }
        })
        .collect())
}

/// `t_{X_n,λ} = Σ a_i t_{X_n,ω_i}`.
pub fn build_translation(ty: &LieType, weight: &DominantWeight) -> Result<Vec<i64>> {
    weight.check_rank(ty)?;
    let mut t = vec![0i64; ty.num_positive_roots()];
    for (idx, &a) in weight.0.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for (x, y) in t.iter_mut().zip(fundamental_translation(ty, idx + 1)?) {
            *x += a as i64 * y;
        }
    }
    Ok(t)
}

/// The affine map `p ↦ translation + matrix · p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineLatticeMap {
    pub ty: LieType,
    pub matrix: Arc<IntMatrix>,
    pub translation: Vec<i64>,
}

impl AffineLatticeMap {
    /// `T_{X_n,λ}`.
    pub fn new(ty: &LieType, weight: &DominantWeight) -> Result<Self> {
        Ok(AffineLatticeMap {
            ty: *ty,
            matrix: build_matrix(ty)?,
            translation: build_translation(ty, weight)?,
        })
    }

    /// Same translation with an arbitrary matrix. Used to inject faults in tests.
    pub fn with_matrix(mut self, matrix: IntMatrix) -> Self {
        self.matrix = Arc::new(matrix);
        self
    }

    pub fn apply_raw(&self, p: &[u32]) -> Vec<i64> {
        let mut out = self.translation.clone();
        for (k, &x) in p.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (o, row) in out.iter_mut().zip(self.matrix.iter()) {
                *o += row[k] * x as i64;
            }
        }
        out
    }

    /// Image of a lattice point; a negative coordinate fails the `T-nonnegative` gate.
    pub fn apply(&self, p: &ExponentVector) -> Result<ExponentVector> {
        if p.len() != self.translation.len() {
            return Err(Error::LengthMismatch {
                expected: self.translation.len(),
                actual: p.len(),
            });
        }
        let raw = self.apply_raw(&p.0);
        raw.iter()
            .map(|&v| u32::try_from(v))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(ExponentVector)
            .map_err(|_| {
                Error::gate(
                    "T-nonnegative",
                    format!("{}: T{} = {:?} has a negative entry", self.ty, p, raw),
                )
            })
    }
}

/// `T_{X_n,λ}(p)`.
pub fn apply_t(
    ty: &LieType,
    weight: &DominantWeight,
    p: &ExponentVector,
) -> Result<ExponentVector> {
    AffineLatticeMap::new(ty, weight)?.apply(p)
}

/// Folds a label `(ℓ, j)` of `H(A_{2m-1})` onto `H(C_m)`: labels with `ℓ + j ≤ 2m`
/// are kept (column `j > m` read as the barred column `2m - j`), others map to
/// `(2m - j, 2m - ℓ)`.
pub fn fold(label: &RootLabel, m: usize) -> Result<RootLabel> {
    let (l, j) = (label.row, label.col);
    if label.barred || l == 0 || l > j || j > 2 * m - 1 {
        return Err(Error::OutOfRange(format!(
            "{label} is not a label of A{}",
            2 * m - 1
        )));
    }
    Ok(if l + j <= 2 * m {
        RootLabel::from_key(l, j, m)
    } else {
        RootLabel::from_key(2 * m - j, 2 * m - l, m)
    })
}

/// The `A_{2m-1}` label carrying the same row and column position as a `C_m` label.
pub fn canonical_a_label(label: &RootLabel, m: usize) -> RootLabel {
    RootLabel::new(label.row, label.column_key(m))
}

/// Folds an `A_{2m-1}` exponent vector into `C_m` coordinates by summing fibres.
pub fn fold_vector(m: usize, a: &[u32]) -> Result<ExponentVector> {
    let ab = LabelBasis::new(LieType::a(2 * m - 1));
    let cb = LabelBasis::new(LieType::c(m));
    if a.len() != ab.len() {
        return Err(Error::LengthMismatch {
            expected: ab.len(),
            actual: a.len(),
        });
    }
    let mut out = ExponentVector::zero(cb.len());
    for (label, &x) in ab.labels().iter().zip(a) {
        let folded = fold(label, m)?;
        out.0[cb.position(&folded).expect("fold lands in H(C_m)")] += x;
    }
    Ok(out)
}

/// Embeds `C_m` coordinates into `A_{2m-1}` coordinates through [`canonical_a_label`].
pub fn embed_c_in_a(m: usize, p: &ExponentVector) -> Result<ExponentVector> {
    let ab = LabelBasis::new(LieType::a(2 * m - 1));
    let cb = LabelBasis::new(LieType::c(m));
    if p.len() != cb.len() {
        return Err(Error::LengthMismatch {
            expected: cb.len(),
            actual: p.len(),
        });
    }
    let mut out = ExponentVector::zero(ab.len());
    for (label, &x) in cb.labels().iter().zip(&p.0) {
        let pos = ab
            .position(&canonical_a_label(label, m))
            .expect("C_m labels sit inside A_{2m-1}");
        out.0[pos] += x;
    }
    Ok(out)
}

/// Letters of `A_{2m-1}` whose lowering operators sum to the image of `f_j` of `C_m`:
/// `{j, 2m - j}` for `j < m`, `{m}` for `j = m`.
pub fn unfold_letter(j: usize, m: usize) -> Result<Vec<usize>> {
    if j == 0 || j > m {
        return Err(Error::OutOfRange(format!("letter {j} of C{m}")));
    }
    Ok(if j < m { vec![j, 2 * m - j] } else { vec![m] })
}

/// An affine map `x ↦ linear · x + shift` between weight lattices, in
/// fundamental-weight coordinates, with exact rational entries printed as strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineTwist {
    pub linear: Vec<Vec<String>>,
    pub shift: Vec<String>,
    /// Dimension of the affine span of the source weights; the map is determined
    /// on that span.
    pub source_span: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum TwistOutcome {
    Fit(AffineTwist),
    /// No affine map fits; the pair is one that contradicts the others.
    NoFit {
        source: Vec<i64>,
        target: Vec<i64>,
    },
}

impl TwistOutcome {
    pub fn is_fit(&self) -> bool {
        matches!(self, TwistOutcome::Fit(_))
    }
}

/// Finds one affine map sending every source weight to its paired target weight.
pub fn weight_twist_solve(pairs: &[(Weight, Weight)]) -> TwistOutcome {
    // A source weight paired with two different targets already rules out any map.
    let mut unique: BTreeMap<&[i64], &[i64]> = BTreeMap::new();
    for (s, t) in pairs {
        match unique.get(s.coords.as_slice()) {
            Some(prev) if *prev != t.coords.as_slice() => {
                return TwistOutcome::NoFit {
                    source: s.coords.clone(),
                    target: t.coords.clone(),
                };
            }
            _ => {
                unique.insert(&s.coords, &t.coords);
            }
        }
    }
    let Some((first_s, first_t)) = unique.iter().next() else {
        return TwistOutcome::Fit(AffineTwist {
            linear: Vec::new(),
            shift: Vec::new(),
            source_span: 0,
        });
    };
    let (src_dim, tgt_dim) = (first_s.len(), first_t.len());
    let q = |v: i64| BigRational::from_integer(v.into());
    let entries: Vec<(&[i64], &[i64])> = unique.into_iter().collect();
    let design: Vec<Vec<BigRational>> = entries
        .iter()
        .map(|(s, _)| s.iter().map(|&v| q(v)).chain([q(1)]).collect())
        .collect();
    let mut linear = vec![vec![String::new(); src_dim]; tgt_dim];
    let mut shift = vec![String::new(); tgt_dim];
    let mut span = 0;
    for r in 0..tgt_dim {
        let rhs: Vec<BigRational> = entries.iter().map(|(_, t)| q(t[r])).collect();
        match linalg::solve(&design, &rhs) {
            Solution::Consistent { x, rank } => {
                span = rank.saturating_sub(1);
                for (k, v) in x[..src_dim].iter().enumerate() {
                    linear[r][k] = v.to_string();
                }
                shift[r] = x[src_dim].to_string();
            }
            Solution::Inconsistent { row } => {
                return TwistOutcome::NoFit {
                    source: entries[row].0.to_vec(),
                    target: entries[row].1.to_vec(),
                };
            }
        }
    }
    TwistOutcome::Fit(AffineTwist {
        linear,
        shift,
        source_span: span,
    })
}
