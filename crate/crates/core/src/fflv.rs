//! FFLV lattice points `P(λ)^ℤ` for types A and C.
//!
//! Fundamental sets come from chain enumeration; general weights are built as
//! lattice-level Minkowski sums and gated on the Weyl dimension.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{DominantWeight, Family, LabelBasis, LieType};

/// Exponents indexed by the descending label sequence of `H(X_n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(pub Vec<u32>);

impl ExponentVector {
    pub fn zero(len: usize) -> Self {
        ExponentVector(vec![0; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn add(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, k: u32) -> Self {
        ExponentVector(self.0.iter().map(|a| a * k).collect())
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A finite set of exponent vectors of a common length, kept in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticePointSet {
    dim: usize,
    points: BTreeSet<ExponentVector>,
}

impl LatticePointSet {
    pub fn new(dim: usize) -> Self {
        LatticePointSet {
            dim,
            points: BTreeSet::new(),
        }
    }

    /// `{0}` in dimension `dim`.
    pub fn origin(dim: usize) -> Self {
        let mut s = Self::new(dim);
        s.points.insert(ExponentVector::zero(dim));
        s
    }

    pub fn from_points<I>(dim: usize, points: I) -> Result<Self>
    where
        I: IntoIterator<Item = ExponentVector>,
    {
        let mut s = Self::new(dim);
        for p in points {
            s.insert(p)?;
        }
        Ok(s)
    }

    /// Inserts a point; returns whether it was new.
    pub fn insert(&mut self, p: ExponentVector) -> Result<bool> {
        if p.len() != self.dim {
            return Err(Error::LengthMismatch {
                expected: self.dim,
                actual: p.len(),
            });
        }
        Ok(self.points.insert(p))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &ExponentVector) -> bool {
        self.points.contains(p)
    }

    pub fn iter(&self) -> impl Iterator<Item = &ExponentVector> {
        self.points.iter()
    }

    /// Pointwise Minkowski sum `{x + y}`.
    pub fn minkowski_sum(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch in Minkowski sum");
        let mut out = Self::new(self.dim);
        for x in &self.points {
            for y in &other.points {
                out.points.insert(x.add(y));
            }
        }
        out
    }

    /// Points of `self` missing from `other`.
    pub fn difference<'a>(&'a self, other: &'a Self) -> impl Iterator<Item = &'a ExponentVector> {
        self.points.difference(&other.points)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.points.is_subset(&other.points)
    }
}

impl<'a> IntoIterator for &'a LatticePointSet {
    type Item = &'a ExponentVector;
    type IntoIter = std::collections::btree_set::Iter<'a, ExponentVector>;

    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}

/// 0/1 points `Σ_k e_{ℓ_k, j_k}` with `ℓ_s < … < ℓ_1 ≤ i ≤ j_1 < … < j_s`, columns
/// compared in the symplectic order for type C.
pub fn fundamental_points(ty: &LieType, i: usize) -> Result<LatticePointSet> {
    let n = ty.rank;
    if i == 0 || i > n {
        return Err(Error::OutOfRange(format!("fundamental index {i} for {ty}")));
    }
    let basis = LabelBasis::new(*ty);
    let max_key = match ty.family {
        Family::A => n,
        Family::C => 2 * n - 1,
    };
    let mut out = LatticePointSet::new(basis.len());
    let mut current = ExponentVector::zero(basis.len());
    // Rows strictly decrease, column keys strictly increase along a chain.
    fn extend(
        basis: &LabelBasis,
        max_key: usize,
        row_bound: usize,
        key_from: usize,
        current: &mut ExponentVector,
        out: &mut LatticePointSet,
    ) {
        out.points.insert(current.clone());
        for key in key_from..=max_key {
            for row in 1..=row_bound {
                if let Some(pos) = basis.position_by_key(row, key) {
                    current.0[pos] = 1;
                    extend(basis, max_key, row - 1, key + 1, current, out);
                    current.0[pos] = 0;
                }
            }
        }
    }
    extend(&basis, max_key, i, i, &mut current, &mut out);

    let expected = ty.weyl_dim(&DominantWeight::fundamental(n, i));
    if BigUint::from(out.len()) != expected {
        return Err(Error::gate(
            "fflv-fundamental-dimension",
            format!(
                "{ty}, ω{i}: {} points, Weyl dimension {expected}",
                out.len()
            ),
        ));
    }
    Ok(out)
}

/// `P(λ)^ℤ` as the Minkowski sum of `a_i` copies of each fundamental set.
pub fn points(ty: &LieType, weight: &DominantWeight) -> Result<LatticePointSet> {
    weight.check_rank(ty)?;
    let dim = ty.num_positive_roots();
    let mut acc = LatticePointSet::origin(dim);
    for (idx, &a) in weight.0.iter().enumerate() {
        if a == 0 {
            continue;
        }
        let fundamental = fundamental_points(ty, idx + 1)?;
        for _ in 0..a {
            acc = acc.minkowski_sum(&fundamental);
        }
    }
    let expected = ty.weyl_dim(weight);
    if BigUint::from(acc.len()) != expected {
        return Err(Error::gate(
            "fflv-minkowski-dimension",
            format!(
                "{ty}, λ={weight}: {} points, Weyl dimension {expected}",
                acc.len()
            ),
        ));
    }
    Ok(acc)
}

/// All Dyck paths of `H(A_n)`: label sequences from `(ℓ,ℓ)` to `(j,j)` with
/// steps `(a,b) → (a,b+1)` or `(a,b) → (a+1,b)`, as lists of label positions
/// together with their endpoints `(ℓ, j)`.
pub fn dyck_paths(n: usize) -> Vec<(usize, usize, Vec<usize>)> {
    let basis = LabelBasis::new(LieType::a(n));
    let mut out = Vec::new();
    for start in 1..=n {
        let mut path = Vec::new();
        walk(&basis, n, start, start, &mut path, &mut out);
    }
    fn walk(
        basis: &LabelBasis,
        n: usize,
        a: usize,
        b: usize,
        path: &mut Vec<(usize, usize)>,
        out: &mut Vec<(usize, usize, Vec<usize>)>,
    ) {
        path.push((a, b));
        if a == b {
            let positions = path
                .iter()
                .map(|&(r, c)| basis.position_by_key(r, c).expect("label on path"))
                .collect();
            out.push((path[0].0, b, positions));
        }
        if b < n {
            walk(basis, n, a, b + 1, path, out);
        }
        if a < b {
            walk(basis, n, a + 1, b, path, out);
        }
        path.pop();
    }
    out
}

/// Checks `S` against the type-A Dyck-path inequalities in both directions: every
/// point satisfies them, and every integer point of the bounding box that
/// satisfies them lies in `S`.
pub fn dyck_check_a(n: usize, weight: &DominantWeight, set: &LatticePointSet) -> bool {
    let ty = LieType::a(n);
    if weight.check_rank(&ty).is_err() || set.dim() != ty.num_positive_roots() {
        return false;
    }
    let bound = |l: usize, j: usize| -> u32 { weight.0[l - 1..j].iter().sum() };
    let paths = dyck_paths(n);
    let satisfies = |p: &[u32]| {
        paths
            .iter()
            .all(|(l, j, path)| path.iter().map(|&k| p[k]).sum::<u32>() <= bound(*l, *j))
    };
    if !set.iter().all(|p| satisfies(p.as_slice())) {
        return false;
    }
    let basis = LabelBasis::new(ty);
    let caps: Vec<u32> = basis.labels().iter().map(|l| bound(l.row, l.col)).collect();
    let mut p = vec![0u32; caps.len()];
    loop {
        if satisfies(&p) && !set.contains(&ExponentVector(p.clone())) {
            return false;
        }
        // Odometer over the box.
        let mut k = 0;
        loop {
            if k == p.len() {
                return true;
            }
            if p[k] < caps[k] {
                p[k] += 1;
                break;
            }
            p[k] = 0;
            k += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::RootLabel;

    fn vector(ty: &LieType, support: &[RootLabel]) -> ExponentVector {
        let basis = LabelBasis::new(*ty);
        let mut v = ExponentVector::zero(basis.len());
        for l in support {
            v.0[basis.position(l).unwrap()] += 1;
        }
        v
    }

    #[test]
    fn a3_omega2_fundamental_points() {
        let ty = LieType::a(3);
        let got = fundamental_points(&ty, 2).unwrap();
        let r = RootLabel::new;
        let expected = LatticePointSet::from_points(
            6,
            [
                vec![],
                vec![r(1, 2)],
                vec![r(2, 2)],
                vec![r(1, 3)],
                vec![r(2, 3)],
                vec![r(2, 2), r(1, 3)],
            ]
            .iter()
            .map(|s| vector(&ty, s)),
        )
        .unwrap();
        assert_eq!(got, expected);
    }

    #[test]
    fn c2_omega2_fundamental_points() {
        let ty = LieType::c(2);
        let got = fundamental_points(&ty, 2).unwrap();
        let r = RootLabel::new;
        let expected = LatticePointSet::from_points(
            4,
            [
                vec![],
                vec![r(1, 2)],
                vec![r(2, 2)],
                vec![RootLabel::barred(1, 1)],
                vec![r(2, 2), RootLabel::barred(1, 1)],
            ]
            .iter()
            .map(|s| vector(&ty, s)),
        )
        .unwrap();
        assert_eq!(got, expected);
    }

    #[test]
    fn fundamental_index_out_of_range() {
        assert!(matches!(
            fundamental_points(&LieType::a(2), 3),
            Err(Error::OutOfRange(_))
        ));
        assert!(fundamental_points(&LieType::a(2), 0).is_err());
    }

    #[test]
    fn fundamental_points_are_zero_one_chains() {
        for ty in [LieType::a(4), LieType::c(3), LieType::c(4)] {
            let basis = LabelBasis::new(ty);
            for i in 1..=ty.rank {
                let set = fundamental_points(&ty, i).unwrap();
                assert!(set.contains(&ExponentVector::zero(basis.len())));
                for p in &set {
                    let mut support: Vec<_> =
                        p.0.iter()
                            .enumerate()
                            .filter(|(_, &x)| x > 0)
                            .map(|(k, &x)| {
                                assert_eq!(x, 1);
                                basis.labels()[k]
                            })
                            .collect();
                    support.sort_by_key(|l| l.column_key(ty.rank));
                    if let Some(first) = support.first() {
                        assert!(first.row <= i && first.column_key(ty.rank) >= i);
                    }
                    for w in support.windows(2) {
                        assert!(w[0].row > w[1].row);
                        assert!(w[0].column_key(ty.rank) < w[1].column_key(ty.rank));
                    }
                }
            }
        }
    }

    #[test]
    fn points_small_cases() {
        let a2 = LieType::a(2);
        assert_eq!(
            points(&a2, &DominantWeight::zero(2)).unwrap(),
            LatticePointSet::origin(3)
        );
        assert_eq!(
            points(&a2, &DominantWeight::fundamental(2, 1)).unwrap(),
            fundamental_points(&a2, 1).unwrap()
        );
        assert_eq!(points(&a2, &DominantWeight(vec![1, 1])).unwrap().len(), 8);
        assert!(matches!(
            points(&a2, &DominantWeight(vec![1])),
            Err(Error::InvalidWeight(_))
        ));
    }

    #[test]
    fn c_points_embed_into_a_points() {
        for n in 2..=4 {
            let c = LieType::c(n);
            let a = LieType::a(2 * n - 1);
            let cb = LabelBasis::new(c);
            let ab = LabelBasis::new(a);
            for i in 1..=n {
                let cset = fundamental_points(&c, i).unwrap();
                let aset = fundamental_points(&a, i).unwrap();
                for p in &cset {
                    let mut q = ExponentVector::zero(ab.len());
                    for (k, &x) in p.0.iter().enumerate() {
                        let l = cb.labels()[k];
                        let pos = ab.position_by_key(l.row, l.column_key(n)).unwrap();
                        q.0[pos] += x;
                    }
                    assert!(aset.contains(&q), "C{n} ω{i}: {p} not in A{}", 2 * n - 1);
                }
            }
        }
    }

    #[test]
    fn dyck_check_examples() {
        let a1 = LieType::a(1);
        let w = DominantWeight(vec![1]);
        assert!(dyck_check_a(1, &w, &points(&a1, &w).unwrap()));

        let a2 = LieType::a(2);
        let rho = DominantWeight(vec![1, 1]);
        assert!(dyck_check_a(2, &rho, &points(&a2, &rho).unwrap()));

        let w1 = DominantWeight::fundamental(2, 1);
        let mut bad = points(&a2, &w1).unwrap();
        bad.insert(vector(&a2, &[RootLabel::new(2, 2)])).unwrap();
        assert!(!dyck_check_a(2, &w1, &bad));

        // Dropping a point breaks the converse direction.
        let full = points(&a2, &rho).unwrap();
        let missing = LatticePointSet::from_points(3, full.iter().skip(1).cloned()).unwrap();
        assert!(!dyck_check_a(2, &rho, &missing));
    }

    #[test]
    fn dyck_path_count() {
        // Paths from (ℓ,ℓ) to (j,j) inside the staircase are counted by Catalan numbers.
        let catalan = [1usize, 1, 2, 5, 14];
        for n in 1..=4 {
            let expected: usize = (1..=n)
                .flat_map(|l| (l..=n).map(move |j| catalan[j - l]))
                .sum();
            assert_eq!(dyck_paths(n).len(), expected);
        }
    }
}
