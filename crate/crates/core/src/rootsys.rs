//! Root-system bookkeeping for types A and C.
//!
//! A source algebra of type `X_n` is paired with a target algebra of the same
//! family and rank `2n - 1`. Coordinates of every lattice point are indexed by
//! the positive-root labels of the source, listed in descending `≼` order; the
//! k-th label also names the k-th letter of the fixed reduced word in the
//! target Weyl group.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, Solution};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    C,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A => f.write_str("A"),
            Family::C => f.write_str("C"),
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(Family::A),
            "C" | "c" => Ok(Family::C),
            other => Err(Error::InvalidType(format!("unknown family `{other}`"))),
        }
    }
}

/// A Lie type `X_n` with `X ∈ {A, C}` and `n ≥ 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LieType {
    pub family: Family,
    pub rank: usize,
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidType("rank must be at least 1".into()));
        }
        Ok(LieType { family, rank })
    }

    pub fn a(rank: usize) -> Self {
        Self::new(Family::A, rank).expect("rank >= 1")
    }

    pub fn c(rank: usize) -> Self {
        Self::new(Family::C, rank).expect("rank >= 1")
    }

    /// The algebra of the same family and rank `2n - 1` that hosts the Demazure module.
    pub fn target(&self) -> LieType {
        LieType {
            family: self.family,
            rank: 2 * self.rank - 1,
        }
    }

    /// Number of positive roots, `N = |H(X_n)|`.
    pub fn num_positive_roots(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::C => n * n,
        }
    }

    /// Generalized Cartan entry `⟨α_i^∨, α_j⟩`, 1-based. For type C the last simple root is long.
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        let n = self.rank;
        if i == j {
            return 2;
        }
        if i.abs_diff(j) != 1 {
            return 0;
        }
        match self.family {
            Family::C if i == n - 1 && j == n => -2,
            _ => -1,
        }
    }

    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        (1..=n)
            .map(|i| (1..=n).map(|j| self.cartan(i, j)).collect())
            .collect()
    }

    /// Fundamental-weight coordinates of the simple root `α_j`.
    pub fn simple_root(&self, j: usize) -> Vec<i64> {
        (1..=self.rank).map(|i| self.cartan(i, j)).collect()
    }

    /// Exact dimension of the simple module `V(λ)` from the Weyl dimension formula.
    pub fn weyl_dim(&self, weight: &DominantWeight) -> BigUint {
        assert_eq!(weight.rank(), self.rank, "weight rank mismatch");
        let n = self.rank;
        // ε-coordinates of λ + ρ and of ρ.
        let dim_eps = match self.family {
            Family::A => n + 1,
            Family::C => n,
        };
        let lam: Vec<i64> = (0..dim_eps)
            .map(|i| weight.0[i.min(n)..].iter().map(|&a| a as i64).sum())
            .collect();
        let rho: Vec<i64> = (0..dim_eps).map(|i| (dim_eps - i) as i64).collect();
        let shifted: Vec<i64> = lam.iter().zip(&rho).map(|(a, b)| a + b).collect();
        // Positive coroots as ε-vectors, paired through the standard inner product.
        let mut num = BigUint::one();
        let mut den = BigUint::one();
        let mut pair = |f: &dyn Fn(&[i64]) -> i64| {
            num *= BigUint::from(f(&shifted) as u64);
            den *= BigUint::from(f(&rho) as u64);
        };
        for i in 0..dim_eps {
            for j in i + 1..dim_eps {
                pair(&|v: &[i64]| v[i] - v[j]);
                if self.family == Family::C {
                    pair(&|v: &[i64]| v[i] + v[j]);
                }
            }
            if self.family == Family::C {
                pair(&|v: &[i64]| v[i]);
            }
        }
        num / den
    }
}

/// A positive-root label `(ℓ, j)` or `(ℓ, j̄)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootLabel {
    pub row: usize,
    pub col: usize,
    pub barred: bool,
}

impl fmt::Display for RootLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.barred {
            write!(f, "({},{}bar)", self.row, self.col)
        } else {
            write!(f, "({},{})", self.row, self.col)
        }
    }
}

impl RootLabel {
    pub fn new(row: usize, col: usize) -> Self {
        RootLabel {
            row,
            col,
            barred: false,
        }
    }

    pub fn barred(row: usize, col: usize) -> Self {
        RootLabel {
            row,
            col,
            barred: true,
        }
    }

    /// Position of the column in `1 < 2 < … < n = n̄ < (n-1)‾ < … < 1̄`, as an integer in `1..2n`.
    pub fn column_key(&self, rank: usize) -> usize {
        if self.barred {
            2 * rank - self.col
        } else {
            self.col
        }
    }

    /// Label with the given row and column key; keys above `rank` are barred columns.
    pub fn from_key(row: usize, key: usize, rank: usize) -> Self {
        if key > rank {
            RootLabel::barred(row, 2 * rank - key)
        } else {
            RootLabel::new(row, key)
        }
    }

    /// Simple reflection index of the word letter carried by this label.
    pub fn letter(&self, rank: usize) -> usize {
        self.row + self.column_key(rank) - 1
    }
}

impl LieType {
    pub fn contains_label(&self, label: &RootLabel) -> bool {
        let n = self.rank;
        let l = label.row;
        if l == 0 {
            return false;
        }
        match (self.family, label.barred) {
            (_, false) => l <= label.col && label.col <= n,
            (Family::A, true) => false,
            (Family::C, true) => l <= label.col && label.col < n,
        }
    }

    /// The order `≼`: `(a,b) ≼ (c,d)` iff `b < d` or `b = d` and `a ≥ c`, columns in symplectic order.
    pub fn compare_labels(&self, x: &RootLabel, y: &RootLabel) -> Ordering {
        let (kx, ky) = (x.column_key(self.rank), y.column_key(self.rank));
        kx.cmp(&ky).then(y.row.cmp(&x.row))
    }

    /// `H(X_n)` sorted in descending `≼` order.
    pub fn build_labels(&self) -> Vec<RootLabel> {
        let n = self.rank;
        let max_key = match self.family {
            Family::A => n,
            Family::C => 2 * n - 1,
        };
        let mut out = Vec::with_capacity(self.num_positive_roots());
        for key in (1..=max_key).rev() {
            let label_rows = if key > n { 2 * n - key } else { key };
            for row in 1..=label_rows {
                out.push(RootLabel::from_key(row, key, n));
            }
        }
        out
    }

    /// The fixed reduced word in the target Weyl group, one letter per label.
    pub fn reduced_word(&self) -> ReducedWord {
        let n = self.rank;
        let mut letters = Vec::with_capacity(self.num_positive_roots());
        if self.family == Family::C {
            // τ_{2n-1} τ_{2n-2} … τ_{n+1}
            for j in (n + 1..=2 * n - 1).rev() {
                letters.extend(j..=2 * n - 1);
            }
        }
        // σ_n … σ_1
        for j in (1..=n).rev() {
            letters.extend(j..=2 * j - 1);
        }
        ReducedWord { letters }
    }

    /// Simple-root coefficients of `α_{ℓ,j}` (or `α_{ℓ,j̄}`).
    pub fn root_coefficients(&self, label: &RootLabel) -> Result<Vec<i64>> {
        if !self.contains_label(label) {
            return Err(Error::OutOfRange(format!("label {label} not in H({self})")));
        }
        let n = self.rank;
        let mut c = vec![0i64; n];
        if label.barred {
            for k in label.row..label.col {
                c[k - 1] = 1;
            }
            for k in label.col..n {
                c[k - 1] = 2;
            }
            c[n - 1] = 1;
        } else {
            for k in label.row..=label.col {
                c[k - 1] = 1;
            }
        }
        Ok(c)
    }

    /// Fundamental-weight coordinates of the positive root with the given label.
    pub fn root_weight(&self, label: &RootLabel) -> Result<Vec<i64>> {
        let coeffs = self.root_coefficients(label)?;
        let mut w = vec![0i64; self.rank];
        for (j, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                for (wi, ai) in w.iter_mut().zip(self.simple_root(j + 1)) {
                    *wi += c * ai;
                }
            }
        }
        Ok(w)
    }

    /// Length of the Weyl group element `s_{i_1} ⋯ s_{i_k}`, counted as the number of
    /// positive roots it sends to negative roots (permutation model for A, signed
    /// permutations for C).
    pub fn weyl_length(&self, letters: &[usize]) -> Result<usize> {
        let n = self.rank;
        if let Some(&bad) = letters.iter().find(|&&i| i == 0 || i > n) {
            return Err(Error::OutOfRange(format!("letter {bad} for rank {n}")));
        }
        let dim = match self.family {
            Family::A => n + 1,
            Family::C => n,
        };
        let apply = |mut v: Vec<i64>| -> Vec<i64> {
            for &i in letters.iter().rev() {
                if self.family == Family::C && i == n {
                    v[n - 1] = -v[n - 1];
                } else {
                    v.swap(i - 1, i);
                }
            }
            v
        };
        let is_negative = |v: &[i64]| v.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0);
        let mut roots = Vec::new();
        for i in 0..dim {
            for j in i + 1..dim {
                let mut v = vec![0; dim];
                v[i] = 1;
                v[j] = -1;
                roots.push(v.clone());
                if self.family == Family::C {
                    v[j] = 1;
                    roots.push(v);
                }
            }
            if self.family == Family::C {
                let mut v = vec![0; dim];
                v[i] = 2;
                roots.push(v);
            }
        }
        Ok(roots
            .into_iter()
            .filter(|r| is_negative(&apply(r.clone())))
            .count())
    }
}

/// `H(X_n)` in descending `≼` order together with a reverse lookup.
#[derive(Clone, Debug)]
pub struct LabelBasis {
    ty: LieType,
    labels: Vec<RootLabel>,
    index: HashMap<RootLabel, usize>,
}

impl LabelBasis {
    pub fn new(ty: LieType) -> Self {
        let labels = ty.build_labels();
        let index = labels.iter().enumerate().map(|(k, l)| (*l, k)).collect();
        LabelBasis { ty, labels, index }
    }

    pub fn lie_type(&self) -> LieType {
        self.ty
    }

    pub fn labels(&self) -> &[RootLabel] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn position(&self, label: &RootLabel) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// Position of the label with the given row and column key.
    pub fn position_by_key(&self, row: usize, key: usize) -> Option<usize> {
        self.position(&RootLabel::from_key(row, key, self.ty.rank))
    }
}

/// A word `s_{i_1} ⋯ s_{i_N}` in the target Weyl group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ReducedWord {
    pub letters: Vec<usize>,
}

impl ReducedWord {
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

/// `λ = Σ a_i ω_i` with `a_i ≥ 0`, in the source algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DominantWeight(pub Vec<u32>);

impl DominantWeight {
    pub fn new(coeffs: Vec<u32>) -> Self {
        DominantWeight(coeffs)
    }

    pub fn zero(rank: usize) -> Self {
        DominantWeight(vec![0; rank])
    }

    /// The fundamental weight `ω_i`, 1-based.
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i - 1] = 1;
        DominantWeight(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn level(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        DominantWeight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, k: u32) -> Self {
        DominantWeight(self.0.iter().map(|a| a * k).collect())
    }

    pub fn check_rank(&self, ty: &LieType) -> Result<()> {
        if self.rank() != ty.rank {
            return Err(Error::InvalidWeight(format!(
                "weight has {} coefficients, {ty} needs {}",
                self.rank(),
                ty.rank
            )));
        }
        Ok(())
    }

    /// `λ̃ = Σ a_i ω̃_{2i-1}` in fundamental-weight coordinates of the target algebra.
    pub fn lift(&self) -> Vec<i64> {
        let n = self.rank();
        let mut out = vec![0i64; 2 * n - 1];
        for (i, &a) in self.0.iter().enumerate() {
            out[2 * i] = a as i64;
        }
        out
    }

    /// All dominant weights of the given rank with `Σ a_i ≤ max_level`, in
    /// increasing level, then lexicographic order.
    pub fn enumerate(rank: usize, max_level: u32) -> Vec<DominantWeight> {
        let mut out = Vec::new();
        for level in 0..=max_level {
            let mut cur = vec![0u32; rank];
            compositions(&mut cur, 0, level, &mut out);
        }
        out
    }
}

fn compositions(cur: &mut Vec<u32>, pos: usize, left: u32, out: &mut Vec<DominantWeight>) {
    if pos + 1 == cur.len() {
        cur[pos] = left;
        out.push(DominantWeight(cur.clone()));
        return;
    }
    for a in (0..=left).rev() {
        cur[pos] = a;
        compositions(cur, pos + 1, left - a, out);
    }
    cur[pos] = 0;
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// An integral weight, stored in fundamental-weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight {
    pub ty: LieType,
    pub coords: Vec<i64>,
}

impl Weight {
    /// Coordinates in the basis of simple roots, via the inverse Cartan matrix.
    pub fn simple_root_coords(&self) -> Vec<BigRational> {
        // λ = Σ c_j α_j has fundamental coordinates Σ_j ⟨α_i^∨, α_j⟩ c_j.
        let a = linalg::to_rational_matrix(&self.ty.cartan_matrix());
        let b: Vec<BigRational> = self
            .coords
            .iter()
            .map(|&x| BigRational::from_integer(x.into()))
            .collect();
        match linalg::solve(&a, &b) {
            Solution::Consistent { x, .. } => x,
            Solution::Inconsistent { .. } => unreachable!("Cartan matrices are invertible"),
        }
    }
}

/// Weight of `f^p v_λ`, i.e. `λ - Σ p_{ℓ,j} α_{ℓ,j}`, in the source algebra.
pub fn fflv_weight(ty: &LieType, weight: &DominantWeight, p: &[u32]) -> Result<Weight> {
    weight.check_rank(ty)?;
    let labels = ty.build_labels();
    if p.len() != labels.len() {
        return Err(Error::LengthMismatch {
            expected: labels.len(),
            actual: p.len(),
        });
    }
    let mut coords: Vec<i64> = weight.0.iter().map(|&a| a as i64).collect();
    for (label, &m) in labels.iter().zip(p) {
        if m == 0 {
            continue;
        }
        for (c, r) in coords.iter_mut().zip(ty.root_weight(label)?) {
            *c -= m as i64 * r;
        }
    }
    Ok(Weight { ty: *ty, coords })
}

/// Weight of `f_{i_1}^{q_1} ⋯ f_{i_N}^{q_N} v_λ̃`, i.e. `λ̃ - Σ q_k α̃_{i_k}`, in the target algebra.
pub fn string_weight(ty: &LieType, weight: &DominantWeight, q: &[u32]) -> Result<Weight> {
    weight.check_rank(ty)?;
    let word = ty.reduced_word();
    if q.len() != word.len() {
        return Err(Error::LengthMismatch {
            expected: word.len(),
            actual: q.len(),
        });
    }
    let target = ty.target();
    let mut coords = weight.lift();
    for (&letter, &m) in word.letters.iter().zip(q) {
        if m == 0 {
            continue;
        }
        for (c, r) in coords.iter_mut().zip(target.simple_root(letter)) {
            *c -= m as i64 * r;
        }
    }
    Ok(Weight { ty: target, coords })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: u64, k: u64) -> u64 {
        if k > n {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn a3_labels_follow_printed_basis() {
        let labels = LieType::a(3).build_labels();
        let expected =
            [(1, 3), (2, 3), (3, 3), (1, 2), (2, 2), (1, 1)].map(|(r, c)| RootLabel::new(r, c));
        assert_eq!(labels, expected);
    }

    #[test]
    fn c2_labels_follow_printed_basis() {
        let labels = LieType::c(2).build_labels();
        assert_eq!(
            labels,
            vec![
                RootLabel::barred(1, 1),
                RootLabel::new(1, 2),
                RootLabel::new(2, 2),
                RootLabel::new(1, 1)
            ]
        );
        assert_eq!(LieType::a(1).build_labels(), vec![RootLabel::new(1, 1)]);
    }

    #[test]
    fn ascending_chain_for_a3() {
        let ty = LieType::a(3);
        let mut labels = ty.build_labels();
        labels.sort_by(|x, y| ty.compare_labels(x, y));
        let chain: Vec<_> = labels.iter().map(|l| (l.row, l.col)).collect();
        assert_eq!(chain, vec![(1, 1), (2, 2), (1, 2), (3, 3), (2, 3), (1, 3)]);
    }

    #[test]
    fn build_labels_is_sorted_descending() {
        for family in [Family::A, Family::C] {
            for n in 1..=6 {
                let ty = LieType::new(family, n).unwrap();
                let labels = ty.build_labels();
                assert_eq!(labels.len(), ty.num_positive_roots());
                assert!(labels.iter().all(|l| ty.contains_label(l)));
                for pair in labels.windows(2) {
                    assert_eq!(ty.compare_labels(&pair[0], &pair[1]), Ordering::Greater);
                }
            }
        }
    }

    #[test]
    fn reduced_words_match_printed_examples() {
        assert_eq!(LieType::a(3).reduced_word().letters, vec![3, 4, 5, 2, 3, 1]);
        assert_eq!(LieType::c(2).reduced_word().letters, vec![3, 2, 3, 1]);
        assert_eq!(LieType::a(1).reduced_word().letters, vec![1]);
    }

    #[test]
    fn word_letters_align_with_labels_and_are_reduced() {
        for family in [Family::A, Family::C] {
            for n in 1..=10 {
                let ty = LieType::new(family, n).unwrap();
                let word = ty.reduced_word();
                let labels = ty.build_labels();
                assert_eq!(word.len(), labels.len());
                for (l, &i) in labels.iter().zip(&word.letters) {
                    assert_eq!(l.letter(n), i, "{ty} label {l}");
                }
                assert_eq!(ty.target().weyl_length(&word.letters).unwrap(), word.len());
            }
        }
    }

    #[test]
    fn weyl_length_detects_non_reduced_words() {
        let ty = LieType::a(3);
        assert_eq!(ty.weyl_length(&[1, 1]).unwrap(), 0);
        assert_eq!(ty.weyl_length(&[1, 2, 1]).unwrap(), 3);
        assert_eq!(ty.weyl_length(&[1, 2, 1, 2]).unwrap(), 2);
        let c = LieType::c(2);
        // (s1 s2)^2 is the longest element of C2, of length 4.
        assert_eq!(c.weyl_length(&[1, 2, 1, 2]).unwrap(), 4);
        assert_eq!(c.weyl_length(&[1, 2, 1, 2, 1]).unwrap(), 3);
    }

    #[test]
    fn weyl_dim_examples() {
        assert_eq!(
            LieType::a(3).weyl_dim(&DominantWeight::fundamental(3, 2)),
            BigUint::from(6u32)
        );
        assert_eq!(
            LieType::c(3).weyl_dim(&DominantWeight::fundamental(3, 2)),
            BigUint::from(14u32)
        );
        for ty in [LieType::a(4), LieType::c(3)] {
            assert_eq!(ty.weyl_dim(&DominantWeight::zero(ty.rank)), BigUint::one());
        }
        // ρ in rank 3 gives 2^6.
        assert_eq!(
            LieType::a(3).weyl_dim(&DominantWeight(vec![1, 1, 1])),
            BigUint::from(64u32)
        );
    }

    #[test]
    fn weyl_dim_on_fundamentals_matches_binomials() {
        for n in 1..=8u64 {
            for i in 1..=n {
                let lam = DominantWeight::fundamental(n as usize, i as usize);
                assert_eq!(
                    LieType::a(n as usize).weyl_dim(&lam),
                    BigUint::from(binom(n + 1, i))
                );
                let c = binom(2 * n, i) - if i >= 2 { binom(2 * n, i - 2) } else { 0 };
                assert_eq!(LieType::c(n as usize).weyl_dim(&lam), BigUint::from(c));
            }
        }
    }

    #[test]
    fn c1_coincides_with_a1() {
        for a in 0..5 {
            let lam = DominantWeight(vec![a]);
            assert_eq!(LieType::c(1).weyl_dim(&lam), LieType::a(1).weyl_dim(&lam));
        }
        assert_eq!(LieType::c(1).build_labels(), LieType::a(1).build_labels());
        assert_eq!(LieType::c(1).reduced_word(), LieType::a(1).reduced_word());
    }

    #[test]
    fn fflv_weight_examples() {
        let a2 = LieType::a(2);
        let w1 = DominantWeight::fundamental(2, 1);
        assert_eq!(
            fflv_weight(&a2, &w1, &[0, 0, 0]).unwrap().coords,
            vec![1, 0]
        );
        // labels of A2: (1,2), (2,2), (1,1); α1 + α2 = (1,1) in fundamental coordinates.
        let w = fflv_weight(&a2, &w1, &[1, 0, 0]).unwrap();
        assert_eq!(w.coords, vec![0, -1]);
        assert_eq!(
            w.simple_root_coords(),
            vec![
                BigRational::new((-1).into(), 3.into()),
                BigRational::new((-2).into(), 3.into())
            ]
        );

        let c2 = LieType::c(2);
        let w2 = DominantWeight::fundamental(2, 2);
        assert_eq!(
            c2.root_coefficients(&RootLabel::barred(1, 1)).unwrap(),
            vec![2, 1]
        );
        let w = fflv_weight(&c2, &w2, &[1, 0, 0, 0]).unwrap();
        // 2α1 + α2 = 2(2,-1) + (-2,2) = (2, 0).
        assert_eq!(w.coords, vec![-2, 1]);
        assert!(fflv_weight(&c2, &w2, &[1, 0]).is_err());
    }

    #[test]
    fn string_weight_examples() {
        let a2 = LieType::a(2);
        let w1 = DominantWeight::fundamental(2, 1);
        assert_eq!(
            string_weight(&a2, &w1, &[0, 0, 0]).unwrap().coords,
            vec![1, 0, 0]
        );
        // s2 s3 s1 (ω̃1): s1 ω1 = ω1 - α1, s3 fixes it, s2 subtracts α2.
        // The result is ε3, i.e. (0, -1, 1) in fundamental coordinates of A3.
        let ext = string_weight(&a2, &w1, &[1, 0, 1]).unwrap();
        assert_eq!(ext.coords, vec![0, -1, 1]);
        let a1 = LieType::a(1);
        assert_eq!(
            string_weight(&a1, &DominantWeight(vec![1]), &[1])
                .unwrap()
                .coords,
            vec![-1]
        );
        assert!(string_weight(&a2, &w1, &[0]).is_err());
    }

    #[test]
    fn enumerate_weights_by_level() {
        let ws = DominantWeight::enumerate(2, 2);
        assert_eq!(ws.len(), 6);
        assert_eq!(ws[0], DominantWeight(vec![0, 0]));
        assert!(ws.windows(2).all(|w| w[0].level() <= w[1].level()));
        assert_eq!(DominantWeight::enumerate(3, 0).len(), 1);
    }
}
