use serde::{Deserialize, Serialize};

use fsl_core::{
    crystal, fflv, DominantWeight, Family, LatticePointSet, LieType, Result, RootLabel,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Fflv,
    String,
}

/// A set of lattice points together with the labels its coordinates refer to.
///
/// Keys serialize in alphabetical order; points are sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeDocument {
    pub kind: Kind,
    pub labels: Vec<RootLabel>,
    pub points: Vec<Vec<u32>>,
    pub rank: usize,
    #[serde(rename = "type")]
    pub family: Family,
    pub weight: Vec<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub word: Option<Vec<usize>>,
}

impl PolytopeDocument {
    fn from_set(ty: &LieType, weight: &DominantWeight, kind: Kind, set: &LatticePointSet) -> Self {
        PolytopeDocument {
            kind,
            labels: ty.build_labels(),
            points: set.iter().map(|p| p.0.clone()).collect(),
            rank: ty.rank,
            family: ty.family,
            weight: weight.0.clone(),
            word: match kind {
                Kind::Fflv => None,
                Kind::String => Some(ty.reduced_word().letters),
            },
        }
    }

    pub fn fflv(ty: &LieType, weight: &DominantWeight) -> Result<Self> {
        weight.check_rank(ty)?;
        Ok(Self::from_set(
            ty,
            weight,
            Kind::Fflv,
            &fflv::points(ty, weight)?,
        ))
    }

    /// String points of `λ̃` for the lifted weight, with `weight` given in the source algebra.
    pub fn string(ty: &LieType, weight: &DominantWeight) -> Result<Self> {
        weight.check_rank(ty)?;
        Ok(Self::from_set(
            ty,
            weight,
            Kind::String,
            &crystal::string_points(ty, weight)?,
        ))
    }

    /// True if every point has one entry per label and the points are strictly ascending.
    pub fn is_well_formed(&self) -> bool {
        self.points.iter().all(|p| p.len() == self.labels.len())
            && self.points.windows(2).all(|w| w[0] < w[1])
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }
}
