//! Exterior-power oracle.
//!
//! Chevalley lowering operators act on `Λ^i ℂ^d` with exact rational
//! coefficients. For type `C_m` the operators are the unfolded sums
//! `f_j + f_{2m-j}` (and `f_m`) of `A_{2m-1}` operators, written in the basis of
//! `ℂ^{2m}` whose k-th vector matches the k-th crystal letter. Everything here
//! is independent of the crystal code and is used to cross-check it.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::degenmap::{self, AffineLatticeMap};
use crate::error::{Error, Result};
use crate::fflv::{self, ExponentVector, LatticePointSet};
use crate::rootsys::{string_weight, DominantWeight, Family, LabelBasis, LieType, Weight};

/// A vector of `Λ^degree ℂ^d`: strictly increasing 1-based index tuples with
/// nonzero rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedgeVector {
    degree: usize,
    terms: BTreeMap<Vec<u8>, BigRational>,
}

impl WedgeVector {
    pub fn zero(degree: usize) -> Self {
        WedgeVector {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// `e_{k_1} ∧ … ∧ e_{k_r}` for arbitrary distinct indices, normalized with its sign.
    pub fn basis(indices: &[u8]) -> Self {
        let mut v = Self::zero(indices.len());
        v.add_term(indices.to_vec(), BigRational::one());
        v
    }

    /// `e_1 ∧ … ∧ e_k`.
    pub fn initial(k: usize) -> Self {
        let idx: Vec<u8> = (1..=k as u8).collect();
        Self::basis(&idx)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u8>, BigRational> {
        &self.terms
    }

    pub fn coefficient(&self, tuple: &[u8]) -> BigRational {
        self.terms
            .get(tuple)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Adds `coeff · e_{indices}` after sorting the indices; repeated indices vanish.
    fn add_term(&mut self, mut indices: Vec<u8>, coeff: BigRational) {
        debug_assert_eq!(indices.len(), self.degree);
        // Insertion sort counting transpositions.
        let mut swaps = 0usize;
        for a in 1..indices.len() {
            let mut b = a;
            while b > 0 && indices[b - 1] > indices[b] {
                indices.swap(b - 1, b);
                swaps += 1;
                b -= 1;
            }
        }
        if indices.windows(2).any(|w| w[0] == w[1]) {
            return;
        }
        let signed = if swaps % 2 == 1 { -coeff } else { coeff };
        let entry = self.terms.entry(indices).or_insert_with(BigRational::zero);
        *entry += signed;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    /// Applies the linear map of `ℂ^d` sending `e_from ↦ Σ coeff · e_to` over the
    /// given entries, extended to wedges by the Leibniz rule.
    pub fn apply_linear(&self, entries: &[(u8, u8, BigRational)]) -> Self {
        let mut out = Self::zero(self.degree);
        for (tuple, c) in &self.terms {
            for slot in 0..tuple.len() {
                for (from, to, coeff) in entries {
                    if tuple[slot] == *from {
                        let mut t = tuple.clone();
                        t[slot] = *to;
                        out.add_term(t, c * coeff);
                    }
                }
            }
        }
        out
    }
}

/// The lowering operators of `A_m` on `ℂ^{m+1}`, or of `C_m` unfolded into `A_{2m-1}` on `ℂ^{2m}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChevalleyAction {
    pub family: Family,
    pub rank: usize,
}

impl ChevalleyAction {
    pub fn new(family: Family, rank: usize) -> Self {
        ChevalleyAction { family, rank }
    }

    /// Dimension of the natural representation.
    pub fn dim(&self) -> usize {
        match self.family {
            Family::A => self.rank + 1,
            Family::C => 2 * self.rank,
        }
    }

    /// Matrix entries `(from, to, coefficient)` of `f_j`.
    pub fn generator(&self, j: usize) -> Result<Vec<(u8, u8, BigRational)>> {
        if j == 0 || j > self.rank {
            return Err(Error::OutOfRange(format!(
                "generator {j} of {}{}",
                self.family, self.rank
            )));
        }
        let letters = match self.family {
            Family::A => vec![j],
            Family::C => degenmap::unfold_letter(j, self.rank)?,
        };
        Ok(letters
            .into_iter()
            .map(|k| (k as u8, k as u8 + 1, BigRational::one()))
            .collect())
    }

    /// `f_j · v`.
    pub fn act_simple(&self, j: usize, v: &WedgeVector) -> Result<WedgeVector> {
        self.check_vector(v)?;
        Ok(v.apply_linear(&self.generator(j)?))
    }

    /// Applies the operator product `f_{ops[0]} f_{ops[1]} ⋯`, rightmost factor first.
    pub fn act_product(&self, ops: &[usize], v: &WedgeVector) -> Result<WedgeVector> {
        self.check_vector(v)?;
        let mut cur = v.clone();
        for &j in ops.iter().rev() {
            if cur.is_zero() {
                break;
            }
            cur = cur.apply_linear(&self.generator(j)?);
        }
        Ok(cur)
    }

    /// `x.v = f_{i_1}^{x_1} ⋯ f_{i_N}^{x_N} (v)` for a monomial aligned to `word`.
    pub fn act_monomial(&self, word: &[usize], x: &[u32], v: &WedgeVector) -> Result<WedgeVector> {
        if word.len() != x.len() {
            return Err(Error::LengthMismatch {
                expected: word.len(),
                actual: x.len(),
            });
        }
        self.act_product(&expand_monomial(word, x), v)
    }

    fn check_vector(&self, v: &WedgeVector) -> Result<()> {
        let d = self.dim();
        if let Some(bad) = v
            .terms
            .keys()
            .flatten()
            .find(|&&k| k == 0 || k as usize > d)
        {
            return Err(Error::OutOfRange(format!("basis index {bad} for ℂ^{d}")));
        }
        Ok(())
    }

    /// All standard basis wedges of `Λ^degree ℂ^d`.
    pub fn basis_wedges(&self, degree: usize) -> Vec<WedgeVector> {
        subsets(self.dim(), degree)
            .into_iter()
            .map(|s| WedgeVector::basis(&s))
            .collect()
    }
}

/// The letter sequence of `f_{i_1}^{x_1} ⋯ f_{i_N}^{x_N}`.
pub fn expand_monomial(word: &[usize], x: &[u32]) -> Vec<usize> {
    word.iter()
        .zip(x)
        .flat_map(|(&j, &e)| std::iter::repeat_n(j, e as usize))
        .collect()
}

fn subsets(d: usize, k: usize) -> Vec<Vec<u8>> {
    fn rec(start: usize, d: usize, k: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..=d {
            if d - x + 1 < k - cur.len() {
                break;
            }
            cur.push(x as u8);
            rec(x + 1, d, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, d, k, &mut Vec::new(), &mut out);
    out
}

/// Result of comparing two operators on every basis wedge of `Λ^i ℂ^d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum SimOutcome {
    /// `r · f(v) = g(v)` for all `v` with one positive rational `r`.
    Equivalent { ratio: String },
    /// Proportional with one common ratio, but that ratio is negative.
    NegativelyProportional { ratio: String },
    /// No common ratio; `witness` is a basis wedge on which the comparison fails.
    NotEquivalent { witness: Vec<u8> },
}

impl SimOutcome {
    pub fn holds(&self) -> bool {
        matches!(self, SimOutcome::Equivalent { .. })
    }
}

/// `f ~_i g`: one ratio `r ∈ ℚ_+` with `r · f(v) = g(v)` for every basis wedge `v` of
/// degree `degree`. Operators are letter sequences applied rightmost first.
pub fn sim_check(
    action: &ChevalleyAction,
    f: &[usize],
    g: &[usize],
    degree: usize,
) -> Result<SimOutcome> {
    let mut ratio: Option<BigRational> = None;
    for v in action.basis_wedges(degree) {
        let fv = action.act_product(f, &v)?;
        let gv = action.act_product(g, &v)?;
        let witness = || v.terms.keys().next().cloned().unwrap_or_default();
        match (fv.is_zero(), gv.is_zero()) {
            (true, true) => continue,
            (true, false) | (false, true) => {
                return Ok(SimOutcome::NotEquivalent { witness: witness() });
            }
            (false, false) => {}
        }
        if fv.terms.len() != gv.terms.len() || fv.terms.keys().ne(gv.terms.keys()) {
            return Ok(SimOutcome::NotEquivalent { witness: witness() });
        }
        for (t, c) in &fv.terms {
            let r = &gv.terms[t] / c;
            match &ratio {
                None => ratio = Some(r),
                Some(prev) if *prev != r => {
                    return Ok(SimOutcome::NotEquivalent { witness: witness() });
                }
                Some(_) => {}
            }
        }
    }
    let r = ratio.unwrap_or_else(BigRational::one);
    Ok(if r.is_positive() {
        SimOutcome::Equivalent {
            ratio: r.to_string(),
        }
    } else {
        SimOutcome::NegativelyProportional {
            ratio: r.to_string(),
        }
    })
}

/// Whether `f_l f_j = f_j f_l` as operators on `ℂ^d`.
pub fn commute_on_vectors(action: &ChevalleyAction, l: usize, j: usize) -> Result<bool> {
    for v in action.basis_wedges(1) {
        if action.act_product(&[l, j], &v)? != action.act_product(&[j, l], &v)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One row of the commutation table for `(i, l, j)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommRow {
    pub degree: usize,
    pub l: usize,
    pub j: usize,
    pub not_adjacent: bool,
    pub commute: bool,
    pub equivalent: bool,
}

impl CommRow {
    pub fn consistent(&self) -> bool {
        self.not_adjacent == self.commute && self.commute == self.equivalent
    }
}

/// Sweeps `|l - j| ≠ 1 ⇔ f_l f_j = f_j f_l ⇔ f_l f_j ~_i f_j f_l` over `1 ≤ i, l, j ≤ m`.
pub fn comm_table(action: &ChevalleyAction) -> Result<Vec<CommRow>> {
    let m = action.rank;
    let mut rows = Vec::new();
    for degree in 1..=m {
        for l in 1..=m {
            for j in 1..=m {
                rows.push(CommRow {
                    degree,
                    l,
                    j,
                    not_adjacent: l.abs_diff(j) != 1,
                    commute: commute_on_vectors(action, l, j)?,
                    equivalent: sim_check(action, &[l, j], &[j, l], degree)?.holds(),
                });
            }
        }
    }
    Ok(rows)
}

fn target_action(ty: &LieType) -> ChevalleyAction {
    let t = ty.target();
    ChevalleyAction::new(t.family, t.rank)
}

/// Whether the monomial `x`, aligned to the word of `ty`, acts nonzero on `e_1 ∧ … ∧ e_{2i-1}`.
pub fn acts_nonzero(ty: &LieType, i: usize, x: &[u32]) -> Result<bool> {
    let word = ty.reduced_word();
    let v = WedgeVector::initial(2 * i - 1);
    Ok(!target_action(ty)
        .act_monomial(&word.letters, x, &v)?
        .is_zero())
}

/// `T_{X_n,ω_i}(p)` does not annihilate `e_1 ∧ … ∧ e_{2i-1}`.
pub fn nonannihilation_check(ty: &LieType, i: usize, p: &ExponentVector) -> Result<bool> {
    let map = AffineLatticeMap::new(ty, &DominantWeight::fundamental(ty.rank, i))?;
    acts_nonzero(ty, i, &map.apply(p)?.0)
}

/// Positions of the labels `(ℓ, j)` with `ℓ ≤ i ≤ j`: the support allowed for string
/// points of `ω̃_i` in type A.
pub fn restricted_block(n: usize, i: usize) -> Vec<usize> {
    let basis = LabelBasis::new(LieType::a(n));
    basis
        .labels()
        .iter()
        .enumerate()
        .filter(|(_, l)| l.row <= i && i <= l.col)
        .map(|(k, _)| k)
        .collect()
}

/// Nonzero 0/1 monomials on the restricted block, grouped by weight.
pub fn weight_classes_a(n: usize, i: usize) -> Result<BTreeMap<Weight, Vec<ExponentVector>>> {
    let ty = LieType::a(n);
    if i == 0 || i > n {
        return Err(Error::OutOfRange(format!("fundamental index {i} for {ty}")));
    }
    let lam = DominantWeight::fundamental(n, i);
    let block = restricted_block(n, i);
    let len = ty.num_positive_roots();
    let mut classes: BTreeMap<Weight, Vec<ExponentVector>> = BTreeMap::new();
    for mask in 0u64..(1u64 << block.len()) {
        let mut x = vec![0u32; len];
        for (b, &pos) in block.iter().enumerate() {
            if mask >> b & 1 == 1 {
                x[pos] = 1;
            }
        }
        if acts_nonzero(&ty, i, &x)? {
            let w = string_weight(&ty, &lam, &x)?;
            classes.entry(w).or_default().push(ExponentVector(x));
        }
    }
    Ok(classes)
}

/// Whether `x` is the neglex-minimal nonzero monomial of its weight: among all nonzero
/// 0/1 block monomials of the same weight, the one whose first differing entry is
/// largest.
pub fn is_neglex_minimal(n: usize, i: usize, x: &ExponentVector) -> Result<bool> {
    let ty = LieType::a(n);
    if x.len() != ty.num_positive_roots() || !acts_nonzero(&ty, i, &x.0)? {
        return Ok(false);
    }
    let w = string_weight(&ty, &DominantWeight::fundamental(n, i), &x.0)?;
    let classes = weight_classes_a(n, i)?;
    Ok(classes
        .get(&w)
        .and_then(|class| class.iter().max())
        .is_some_and(|min| min == x))
}

/// `T_{A_n,ω_i}(p)` is the neglex-minimal nonzero monomial of its weight.
pub fn minimality_check_a(n: usize, i: usize, p: &ExponentVector) -> Result<bool> {
    let ty = LieType::a(n);
    let map = AffineLatticeMap::new(&ty, &DominantWeight::fundamental(n, i))?;
    is_neglex_minimal(n, i, &map.apply(p)?)
}

/// String points of `ω̃_i` rebuilt from the wedge action alone: the neglex-minimal
/// nonzero 0/1 block monomial of every weight.
pub fn oracle_string_points_a(n: usize, i: usize) -> Result<LatticePointSet> {
    let classes = weight_classes_a(n, i)?;
    LatticePointSet::from_points(
        LieType::a(n).num_positive_roots(),
        classes.into_values().filter_map(|c| c.into_iter().max()),
    )
}

/// Checks, on `e_1 ∧ … ∧ e_{2i-1}`, that every basis wedge of `f^a · v` (type-A word of
/// `A_{2m-1}`, acting in `A_{4m-3}`) also occurs in the unfolded action of `f^{fold(a)}`
/// (type-C word of `C_m`, acting in `C_{2m-1}`).
pub fn unfold_contains(m: usize, i: usize, a: &ExponentVector) -> Result<bool> {
    let a_ty = LieType::a(2 * m - 1);
    let c_ty = LieType::c(m);
    let v = WedgeVector::initial(2 * i - 1);
    let folded = degenmap::fold_vector(m, &a.0)?;
    let lhs = target_action(&a_ty).act_monomial(&a_ty.reduced_word().letters, &a.0, &v)?;
    let rhs = target_action(&c_ty).act_monomial(&c_ty.reduced_word().letters, &folded.0, &v)?;
    Ok(lhs.terms().keys().all(|t| rhs.coefficient(t).is_positive()))
}

/// For a `C_n` fundamental point `p`: `fold(T_A(p)) = T_C(p)` with `p` embedded
/// canonically into `A_{2n-1}`, `T_A(p)` acts nonzero, and it is a summand of the
/// unfolded action of `T_C(p)`.
pub fn summand_check_c(n: usize, i: usize, p: &ExponentVector) -> Result<bool> {
    let c_ty = LieType::c(n);
    let a_ty = LieType::a(2 * n - 1);
    let lam_c = DominantWeight::fundamental(n, i);
    let lam_a = DominantWeight::fundamental(2 * n - 1, i);
    let tc = AffineLatticeMap::new(&c_ty, &lam_c)?.apply(p)?;
    let ta = AffineLatticeMap::new(&a_ty, &lam_a)?.apply(&degenmap::embed_c_in_a(n, p)?)?;
    if degenmap::fold_vector(n, &ta.0)? != tc {
        return Ok(false);
    }
    Ok(acts_nonzero(&a_ty, i, &ta.0)? && unfold_contains(n, i, &ta)?)
}

/// All fundamental FFLV points of `C_n` for `ω_i` that fail [`summand_check_c`].
pub fn summand_failures_c(n: usize, i: usize) -> Result<Vec<ExponentVector>> {
    let pts = fflv::fundamental_points(&LieType::c(n), i)?;
    let mut bad = Vec::new();
    for p in &pts {
        if !summand_check_c(n, i, p)? {
            bad.push(p.clone());
        }
    }
    Ok(bad)
}
