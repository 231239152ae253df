//! The JSON spec file read by `describe`.

use serde::{Deserialize, Serialize};
use sslocus_core::{GlobalSpec, PlaceSpec, PolarizationIndex, SignaturePair, SplittingType};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportKind {
    Rz,
    Shimura,
}

impl ReportKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ReportKind::Rz => "rz",
            ReportKind::Shimura => "shimura",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Keyword {
    #[serde(rename = "all-parities")]
    AllParities,
}

/// `j` as written: an integer or the keyword `"all-parities"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum JField {
    Index(i64),
    Keyword(Keyword),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Splitting {
    Split,
    Inert,
}

impl From<Splitting> for SplittingType {
    fn from(s: Splitting) -> Self {
        match s {
            Splitting::Split => SplittingType::Split,
            Splitting::Inert => SplittingType::Inert,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlaceEntry {
    pub splitting: Splitting,
    pub signature: [u32; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    pub p: u64,
    #[serde(default)]
    pub j: Option<JField>,
    pub report: ReportKind,
    pub places: Vec<PlaceEntry>,
}

/// The pieces `N^j` a spec file asks for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Selection {
    /// One piece per listed index.
    Pieces(Vec<PolarizationIndex>),
    /// The Shimura-level locus, with the `j` that was supplied and ignored.
    Shimura { ignored_j: Option<i64> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelectionError(pub String);

impl SpecFile {
    pub fn parse(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// The spec as written; validation happens downstream.
    pub fn global_spec(&self) -> GlobalSpec {
        GlobalSpec::new(
            self.p,
            self.places
                .iter()
                .map(|place| PlaceSpec {
                    splitting: place.splitting.into(),
                    signature: SignaturePair::new(place.signature[0], place.signature[1]),
                })
                .collect(),
        )
    }

    /// An absent `j` on an rz report means both parities.
    pub fn selection(&self) -> Result<Selection, SelectionError> {
        match (self.report, self.j) {
            (ReportKind::Rz, Some(JField::Index(j))) => {
                Ok(Selection::Pieces(vec![PolarizationIndex(j)]))
            }
            (ReportKind::Rz, None | Some(JField::Keyword(Keyword::AllParities))) => {
                Ok(Selection::Pieces(vec![
                    PolarizationIndex(0),
                    PolarizationIndex(1),
                ]))
            }
            (ReportKind::Shimura, None) => Ok(Selection::Shimura { ignored_j: None }),
            (ReportKind::Shimura, Some(JField::Index(j))) => {
                Ok(Selection::Shimura { ignored_j: Some(j) })
            }
            (ReportKind::Shimura, Some(JField::Keyword(Keyword::AllParities))) => {
                Err(SelectionError(String::from(
                    "AllParitiesRequiresRz: \"all-parities\" is only legal with \"report\": \"rz\"",
                )))
            }
        }
    }
}
