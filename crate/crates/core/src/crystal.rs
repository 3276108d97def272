//! String lattice points `Q_w(λ̃)^ℤ` of the Demazure crystal for the fixed word.
//!
//! Elements are tensor words in the vector crystal of the target algebra. For
//! type `C_m` the letters `1 < … < m < m̄ < … < 1̄` are encoded as `1..=2m`
//! with `k̄ ↦ 2m + 1 - k`, which is also the index of the matching basis vector
//! of `ℂ^{2m}` in the oracle's reordered basis.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fflv::{ExponentVector, LatticePointSet};
use crate::rootsys::{DominantWeight, Family, LieType, ReducedWord, Weight};

/// The crystal of the natural representation of `A_m` or `C_m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VectorCrystal {
    pub family: Family,
    pub rank: usize,
}

impl VectorCrystal {
    pub fn new(family: Family, rank: usize) -> Self {
        assert!(rank >= 1, "vector crystal needs rank >= 1");
        VectorCrystal { family, rank }
    }

    /// Number of letters: `m + 1` for A, `2m` for C.
    pub fn size(&self) -> usize {
        match self.family {
            Family::A => self.rank + 1,
            Family::C => 2 * self.rank,
        }
    }

    /// `f̃_j` on a single letter.
    pub fn f(&self, j: usize, x: u8) -> Option<u8> {
        let x = x as usize;
        let m = self.rank;
        let y = match self.family {
            Family::A => (x == j).then_some(j + 1),
            Family::C if j < m => {
                if x == j {
                    Some(j + 1)
                } else if x == 2 * m - j {
                    Some(2 * m + 1 - j)
                } else {
                    None
                }
            }
            Family::C => (x == m).then_some(m + 1),
        };
        y.map(|v| v as u8)
    }

    /// `ẽ_j` on a single letter, the inverse of `f̃_j`.
    pub fn e(&self, j: usize, x: u8) -> Option<u8> {
        let x = x as usize;
        let m = self.rank;
        let y = match self.family {
            Family::A => (x == j + 1).then_some(j),
            Family::C if j < m => {
                if x == j + 1 {
                    Some(j)
                } else if x == 2 * m + 1 - j {
                    Some(2 * m - j)
                } else {
                    None
                }
            }
            Family::C => (x == m + 1).then_some(m),
        };
        y.map(|v| v as u8)
    }

    /// ε-coordinates of the weight of a letter.
    fn letter_weight(&self, x: u8, eps: &mut [i64]) {
        let x = x as usize;
        match self.family {
            Family::A => eps[x - 1] += 1,
            Family::C if x <= self.rank => eps[x - 1] += 1,
            Family::C => eps[2 * self.rank - x] -= 1,
        }
    }

    pub fn letter_name(&self, x: u8) -> String {
        let x = x as usize;
        match self.family {
            Family::C if x > self.rank => format!("{}bar", 2 * self.rank + 1 - x),
            _ => x.to_string(),
        }
    }
}

/// Which unmatched position the lowering operator acts on in a tensor word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SignatureRule {
    /// Cancel `(f-able, e-able)` pairs read left to right; `f̃` acts on the leftmost
    /// unmatched f-able letter, `ẽ` on the rightmost unmatched e-able letter.
    /// Column words `1 ⊗ 2 ⊗ … ⊗ k` are highest weight.
    LeftmostUnmatched,
    /// The mirror image: words are read right to left.
    RightmostUnmatched,
}

/// Order in which the Demazure operators `F_{i_k}` are composed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClosureOrder {
    /// `F_{i_1}(F_{i_2}(… F_{i_N}({u}) …))`: the last letter is applied first.
    LastLetterFirst,
    /// `F_{i_N}(… F_{i_1}({u}) …)`.
    FirstLetterFirst,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CrystalConfig {
    pub rule: SignatureRule,
    pub order: ClosureOrder,
}

impl Default for CrystalConfig {
    /// The combination selected by [`calibrate`].
    fn default() -> Self {
        CrystalConfig {
            rule: SignatureRule::LeftmostUnmatched,
            order: ClosureOrder::LastLetterFirst,
        }
    }
}

/// A tensor word of vector-crystal letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CrystalElement(pub Vec<u8>);

impl CrystalElement {
    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn render(&self, crystal: &VectorCrystal) -> String {
        if self.0.is_empty() {
            return "∅".into();
        }
        self.0
            .iter()
            .map(|&x| crystal.letter_name(x))
            .collect::<Vec<_>>()
            .join("⊗")
    }
}

impl fmt::Display for CrystalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u8::to_string).collect();
        write!(f, "{}", parts.join("⊗"))
    }
}

/// Unmatched positions after bracketing, under [`SignatureRule::LeftmostUnmatched`]:
/// (unmatched e-able positions, unmatched f-able positions), both left to right.
fn unmatched(crystal: &VectorCrystal, j: usize, word: &[u8]) -> (Vec<usize>, Vec<usize>) {
    let mut open_f = Vec::new();
    let mut free_e = Vec::new();
    for (pos, &x) in word.iter().enumerate() {
        if crystal.f(j, x).is_some() {
            open_f.push(pos);
        } else if crystal.e(j, x).is_some() && open_f.pop().is_none() {
            free_e.push(pos);
        }
    }
    (free_e, open_f)
}

/// `f̃_j` on a tensor word; `None` is the zero element.
pub fn tensor_f(
    crystal: &VectorCrystal,
    rule: SignatureRule,
    j: usize,
    b: &CrystalElement,
) -> Option<CrystalElement> {
    match rule {
        SignatureRule::LeftmostUnmatched => {
            let (_, free_f) = unmatched(crystal, j, &b.0);
            let pos = *free_f.first()?;
            let mut out = b.clone();
            out.0[pos] = crystal.f(j, out.0[pos])?;
            Some(out)
        }
        SignatureRule::RightmostUnmatched => mirrored(b, |w| {
            tensor_f(crystal, SignatureRule::LeftmostUnmatched, j, w)
        }),
    }
}

/// `ẽ_j` on a tensor word; `None` is the zero element.
pub fn tensor_e(
    crystal: &VectorCrystal,
    rule: SignatureRule,
    j: usize,
    b: &CrystalElement,
) -> Option<CrystalElement> {
    match rule {
        SignatureRule::LeftmostUnmatched => {
            let (free_e, _) = unmatched(crystal, j, &b.0);
            let pos = *free_e.last()?;
            let mut out = b.clone();
            out.0[pos] = crystal.e(j, out.0[pos])?;
            Some(out)
        }
        SignatureRule::RightmostUnmatched => mirrored(b, |w| {
            tensor_e(crystal, SignatureRule::LeftmostUnmatched, j, w)
        }),
    }
}

fn mirrored(
    b: &CrystalElement,
    op: impl FnOnce(&CrystalElement) -> Option<CrystalElement>,
) -> Option<CrystalElement> {
    let mut rev = b.clone();
    rev.0.reverse();
    let mut out = op(&rev)?;
    out.0.reverse();
    Some(out)
}

/// Weight of a tensor word in fundamental-weight coordinates of the crystal's algebra.
pub fn element_weight(crystal: &VectorCrystal, b: &CrystalElement) -> Weight {
    let m = crystal.rank;
    let dim = match crystal.family {
        Family::A => m + 1,
        Family::C => m,
    };
    let mut eps = vec![0i64; dim];
    for &x in &b.0 {
        crystal.letter_weight(x, &mut eps);
    }
    let mut coords: Vec<i64> = (0..m - usize::from(crystal.family == Family::C))
        .map(|i| eps[i] - eps[i + 1])
        .collect();
    if crystal.family == Family::C {
        coords.push(eps[m - 1]);
    }
    Weight {
        ty: LieType {
            family: crystal.family,
            rank: m,
        },
        coords,
    }
}

/// Highest-weight word of `λ̃` in the target: `a_i` copies of the column `1 ⊗ 2 ⊗ … ⊗ (2i-1)`
/// for each `i`, in increasing `i`.
pub fn build_highest(ty: &LieType, weight: &DominantWeight) -> Result<CrystalElement> {
    weight.check_rank(ty)?;
    let mut word = Vec::new();
    for (idx, &a) in weight.0.iter().enumerate() {
        let height = 2 * idx + 1;
        for _ in 0..a {
            word.extend((1..=height).map(|x| x as u8));
        }
    }
    Ok(CrystalElement(word))
}

/// Demazure crystal of the target module for the fixed word, with the cached data
/// needed for string extraction.
#[derive(Clone, Debug)]
pub struct DemazureCrystal {
    pub ty: LieType,
    pub weight: DominantWeight,
    pub word: ReducedWord,
    pub crystal: VectorCrystal,
    pub config: CrystalConfig,
    pub highest: CrystalElement,
    elements: BTreeSet<CrystalElement>,
}

impl DemazureCrystal {
    /// Saturates `{u_λ̃}` under `F_j(S) = { f̃_j^k b : b ∈ S, k ≥ 0 }` along the word.
    /// Fails the dimension gate unless the result has `dim V(λ)` elements.
    pub fn new(ty: &LieType, weight: &DominantWeight, config: CrystalConfig) -> Result<Self> {
        let dc = Self::saturate(ty, weight, config)?;
        let expected = ty.weyl_dim(weight);
        if BigUint::from(dc.elements.len()) != expected {
            return Err(Error::gate(
                "demazure-dimension",
                format!(
                    "{ty}, λ={weight}: {} crystal elements, Weyl dimension {expected}",
                    dc.elements.len()
                ),
            ));
        }
        Ok(dc)
    }

    fn saturate(ty: &LieType, weight: &DominantWeight, config: CrystalConfig) -> Result<Self> {
        let target = ty.target();
        let crystal = VectorCrystal::new(target.family, target.rank);
        let word = ty.reduced_word();
        let highest = build_highest(ty, weight)?;
        if !is_highest_weight(&crystal, config.rule, &highest) {
            return Err(Error::gate(
                "highest-weight",
                format!("{} is not annihilated by every raising operator", highest),
            ));
        }
        let mut elements = BTreeSet::from([highest.clone()]);
        let letters: Vec<usize> = match config.order {
            ClosureOrder::LastLetterFirst => word.letters.iter().rev().copied().collect(),
            ClosureOrder::FirstLetterFirst => word.letters.clone(),
        };
        for j in letters {
            let mut next = elements.clone();
            for b in &elements {
                let mut cur = b.clone();
                while let Some(lower) = tensor_f(&crystal, config.rule, j, &cur) {
                    next.insert(lower.clone());
                    cur = lower;
                }
            }
            elements = next;
        }
        Ok(DemazureCrystal {
            ty: *ty,
            weight: weight.clone(),
            word,
            crystal,
            config,
            highest,
            elements,
        })
    }

    pub fn elements(&self) -> &BTreeSet<CrystalElement> {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Greedy raising along the word: `q_k` is the largest power of `ẽ_{i_k}` that
    /// does not kill the current element. The walk must end at the highest-weight word.
    pub fn extract_string(&self, b: &CrystalElement) -> Result<ExponentVector> {
        extract_string(
            &self.crystal,
            self.config.rule,
            &self.word,
            &self.highest,
            b,
        )
    }

    /// Replays `f̃_{i_1}^{q_1} ⋯ f̃_{i_N}^{q_N}` on the highest-weight word.
    pub fn replay_string(&self, q: &ExponentVector) -> Option<CrystalElement> {
        let mut cur = self.highest.clone();
        for (&j, &times) in self.word.letters.iter().zip(&q.0).rev() {
            for _ in 0..times {
                cur = tensor_f(&self.crystal, self.config.rule, j, &cur)?;
            }
        }
        Some(cur)
    }

    /// String points of all elements, each tagged with its element. Extraction
    /// must be injective.
    pub fn string_map(&self) -> Result<BTreeMap<ExponentVector, CrystalElement>> {
        let mut out = BTreeMap::new();
        for b in &self.elements {
            let q = self.extract_string(b)?;
            if let Some(prev) = out.insert(q.clone(), b.clone()) {
                return Err(Error::gate(
                    "string-injective",
                    format!("{prev} and {b} share string coordinates {q}"),
                ));
            }
        }
        Ok(out)
    }

    pub fn string_points(&self) -> Result<LatticePointSet> {
        let map = self.string_map()?;
        LatticePointSet::from_points(self.word.len(), map.into_keys())
    }
}

pub fn is_highest_weight(crystal: &VectorCrystal, rule: SignatureRule, b: &CrystalElement) -> bool {
    (1..=crystal.rank).all(|j| tensor_e(crystal, rule, j, b).is_none())
}

pub fn extract_string(
    crystal: &VectorCrystal,
    rule: SignatureRule,
    word: &ReducedWord,
    highest: &CrystalElement,
    b: &CrystalElement,
) -> Result<ExponentVector> {
    let mut cur = b.clone();
    let mut q = Vec::with_capacity(word.len());
    for &j in &word.letters {
        let mut k = 0;
        while let Some(up) = tensor_e(crystal, rule, j, &cur) {
            cur = up;
            k += 1;
        }
        q.push(k);
    }
    if &cur != highest {
        return Err(Error::gate(
            "string-extraction",
            format!("raising {b} along the word ends at {cur}, not at {highest}"),
        ));
    }
    Ok(ExponentVector(q))
}

/// Demazure set for the default configuration.
pub fn demazure_set(ty: &LieType, weight: &DominantWeight) -> Result<BTreeSet<CrystalElement>> {
    Ok(DemazureCrystal::new(ty, weight, CrystalConfig::default())?.elements)
}

/// `Q_w(λ̃)^ℤ` for the default configuration.
pub fn string_points(ty: &LieType, weight: &DominantWeight) -> Result<LatticePointSet> {
    DemazureCrystal::new(ty, weight, CrystalConfig::default())?.string_points()
}

/// Cases used to select the crystal conventions.
pub fn calibration_cases() -> Vec<(LieType, DominantWeight)> {
    vec![
        (LieType::a(1), DominantWeight(vec![1])),
        (LieType::a(2), DominantWeight(vec![1, 0])),
        (LieType::a(2), DominantWeight(vec![0, 1])),
        (LieType::a(2), DominantWeight(vec![1, 1])),
        (LieType::a(3), DominantWeight(vec![0, 1, 0])),
        (LieType::c(2), DominantWeight(vec![0, 1])),
    ]
}

/// Every configuration that passes the highest-weight and dimension gates on all
/// calibration cases.
pub fn calibrate() -> Vec<CrystalConfig> {
    let mut ok = Vec::new();
    for rule in [
        SignatureRule::LeftmostUnmatched,
        SignatureRule::RightmostUnmatched,
    ] {
        for order in [
            ClosureOrder::LastLetterFirst,
            ClosureOrder::FirstLetterFirst,
        ] {
            let config = CrystalConfig { rule, order };
            let passes = calibration_cases().iter().all(|(ty, w)| {
                DemazureCrystal::new(ty, w, config)
                    .and_then(|dc| dc.string_points().map(|_| ()))
                    .is_ok()
            });
            if passes {
                ok.push(config);
            }
        }
    }
    ok
}
