//! The local factors `N^{split,j}_{(a,b)}` and `N^{inert,j}_{(a,b)}` for
//! `a + b <= 4`.
//!
//! Each case is one declarative [`TableRow`]; [`LocalTable::geometry`]
//! evaluates a row at a prime `p` and index `j`. The oracle in
//! [`crate::oracle`] diffs against the same rows, so a transcription error in
//! the table shows up as a failed check there.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::count::Count;
use crate::model::{PolarizationIndex, SignaturePair, SplittingType, MAX_M};

use IncidenceFormula as F;
use SplittingType::{Inert, Split};

/// Isomorphism type of an irreducible component of a local factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ComponentVariety {
    Point,
    ProjectiveLine,
    /// `x0^{p+1} + x1^{p+1} + x2^{p+1} = 0` in `P^2`.
    FermatCurve,
    /// `x0^{p+1} + x1^{p+1} + x2^{p+1} + x3^{p+1} = 0` in `P^3`.
    FermatSurface,
}

impl ComponentVariety {
    pub fn name(self) -> &'static str {
        match self {
            ComponentVariety::Point => "point",
            ComponentVariety::ProjectiveLine => "projective line",
            ComponentVariety::FermatCurve => "Fermat curve",
            ComponentVariety::FermatSurface => "Fermat surface",
        }
    }

    pub fn equation(self) -> Option<&'static str> {
        match self {
            ComponentVariety::FermatCurve => Some("x0^(p+1) + x1^(p+1) + x2^(p+1) = 0 in P^2"),
            ComponentVariety::FermatSurface => {
                Some("x0^(p+1) + x1^(p+1) + x2^(p+1) + x3^(p+1) = 0 in P^3")
            }
            _ => None,
        }
    }
}

impl fmt::Display for ComponentVariety {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// How a component `X'` meets a fixed component `X` of one local factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Relation {
    Equal,
    PointIntersection,
    /// Only occurs on the inert `(2,2)` factor.
    LineIntersection,
}

impl Relation {
    pub const ALL: [Relation; 3] = [
        Relation::Equal,
        Relation::PointIntersection,
        Relation::LineIntersection,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Relation::Equal => "equal",
            Relation::PointIntersection => "point",
            Relation::LineIntersection => "line",
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The closed forms in `p` that occur as local incidence constants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IncidenceFormula {
    PPlus1,
    P2Plus1,
    P3Plus1,
    PTimesP3Plus1,
    P2TimesP2Plus1,
    P3TimesP3Plus1,
    P3Plus1TimesP2Plus1,
    P3Plus1TimesPPlus1,
}

impl IncidenceFormula {
    pub const ALL: [IncidenceFormula; 8] = [
        IncidenceFormula::PPlus1,
        IncidenceFormula::P2Plus1,
        IncidenceFormula::P3Plus1,
        IncidenceFormula::PTimesP3Plus1,
        IncidenceFormula::P2TimesP2Plus1,
        IncidenceFormula::P3TimesP3Plus1,
        IncidenceFormula::P3Plus1TimesP2Plus1,
        IncidenceFormula::P3Plus1TimesPPlus1,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            IncidenceFormula::PPlus1 => "p+1",
            IncidenceFormula::P2Plus1 => "p^2+1",
            IncidenceFormula::P3Plus1 => "p^3+1",
            IncidenceFormula::PTimesP3Plus1 => "p(p^3+1)",
            IncidenceFormula::P2TimesP2Plus1 => "p^2(p^2+1)",
            IncidenceFormula::P3TimesP3Plus1 => "p^3(p^3+1)",
            IncidenceFormula::P3Plus1TimesP2Plus1 => "(p^3+1)(p^2+1)",
            IncidenceFormula::P3Plus1TimesPPlus1 => "(p^3+1)(p+1)",
        }
    }

    pub fn eval(self, p: u64) -> BigUint {
        let p = BigUint::from(p);
        let one = BigUint::one();
        let p2 = &p * &p;
        let p3 = &p2 * &p;
        match self {
            IncidenceFormula::PPlus1 => &p + &one,
            IncidenceFormula::P2Plus1 => &p2 + &one,
            IncidenceFormula::P3Plus1 => &p3 + &one,
            IncidenceFormula::PTimesP3Plus1 => &p * (&p3 + &one),
            IncidenceFormula::P2TimesP2Plus1 => &p2 * (&p2 + &one),
            IncidenceFormula::P3TimesP3Plus1 => &p3 * (&p3 + &one),
            IncidenceFormula::P3Plus1TimesP2Plus1 => (&p3 + &one) * (&p2 + &one),
            IncidenceFormula::P3Plus1TimesPPlus1 => (&p3 + &one) * (&p + &one),
        }
    }

    pub fn count(self, p: u64) -> Count {
        Count::new(self.eval(p), self.tag())
    }
}

impl fmt::Display for IncidenceFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// When a row's moduli space is nonempty, as a function of `m` and `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Nonemptiness {
    Never,
    Always,
    /// Nonempty iff `m * j` is even.
    WhenMjEven,
    /// Nonempty iff `j` is even.
    WhenJEven,
}

impl Nonemptiness {
    pub fn holds(self, m: u32, j: PolarizationIndex) -> bool {
        match self {
            Nonemptiness::Never => false,
            Nonemptiness::Always => true,
            Nonemptiness::WhenMjEven => m.is_multiple_of(2) || !j.is_odd(),
            Nonemptiness::WhenJEven => !j.is_odd(),
        }
    }
}

/// Incidence data of a positive-dimensional row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PositiveRow {
    pub dimension: u32,
    pub variety: ComponentVariety,
    pub points_per_component: Option<IncidenceFormula>,
    pub components_per_point: Option<IncidenceFormula>,
    pub point_neighbors: IncidenceFormula,
    pub line_neighbors: Option<IncidenceFormula>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RowShape {
    ZeroDimensional,
    Positive(PositiveRow),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TableRow {
    pub splitting: SplittingType,
    pub signature: SignaturePair,
    pub nonempty: Nonemptiness,
    /// Geometry whenever the row is nonempty.
    pub shape: RowShape,
}

const fn empty_row(splitting: SplittingType, a: u32, b: u32) -> TableRow {
    TableRow {
        splitting,
        signature: SignaturePair::new(a, b),
        nonempty: Nonemptiness::Never,
        shape: RowShape::ZeroDimensional,
    }
}

const fn zero_dim_row(
    splitting: SplittingType,
    a: u32,
    b: u32,
    nonempty: Nonemptiness,
) -> TableRow {
    TableRow {
        splitting,
        signature: SignaturePair::new(a, b),
        nonempty,
        shape: RowShape::ZeroDimensional,
    }
}

/// One row per normalized signature with `a + b <= 4` and per splitting type.
pub const STANDARD_ROWS: [TableRow; 16] = [
    empty_row(Split, 0, 1),
    empty_row(Split, 0, 2),
    zero_dim_row(Split, 1, 1, Nonemptiness::Always),
    empty_row(Split, 0, 3),
    empty_row(Split, 1, 2),
    empty_row(Split, 0, 4),
    empty_row(Split, 1, 3),
    TableRow {
        splitting: Split,
        signature: SignaturePair::new(2, 2),
        nonempty: Nonemptiness::Always,
        shape: RowShape::Positive(PositiveRow {
            dimension: 1,
            variety: ComponentVariety::ProjectiveLine,
            points_per_component: Some(F::P2Plus1),
            components_per_point: Some(F::P2Plus1),
            point_neighbors: F::P2TimesP2Plus1,
            line_neighbors: None,
        }),
    },
    zero_dim_row(Inert, 0, 1, Nonemptiness::WhenMjEven),
    zero_dim_row(Inert, 0, 2, Nonemptiness::WhenMjEven),
    zero_dim_row(Inert, 1, 1, Nonemptiness::Always),
    zero_dim_row(Inert, 0, 3, Nonemptiness::WhenMjEven),
    TableRow {
        splitting: Inert,
        signature: SignaturePair::new(1, 2),
        nonempty: Nonemptiness::WhenJEven,
        shape: RowShape::Positive(PositiveRow {
            dimension: 1,
            variety: ComponentVariety::FermatCurve,
            points_per_component: Some(F::P3Plus1),
            components_per_point: Some(F::PPlus1),
            point_neighbors: F::PTimesP3Plus1,
            line_neighbors: None,
        }),
    },
    zero_dim_row(Inert, 0, 4, Nonemptiness::WhenMjEven),
    TableRow {
        splitting: Inert,
        signature: SignaturePair::new(1, 3),
        nonempty: Nonemptiness::Always,
        shape: RowShape::Positive(PositiveRow {
            dimension: 1,
            variety: ComponentVariety::FermatCurve,
            points_per_component: Some(F::P3Plus1),
            components_per_point: Some(F::P3Plus1),
            point_neighbors: F::P3TimesP3Plus1,
            line_neighbors: None,
        }),
    },
    TableRow {
        splitting: Inert,
        signature: SignaturePair::new(2, 2),
        nonempty: Nonemptiness::Always,
        shape: RowShape::Positive(PositiveRow {
            dimension: 2,
            variety: ComponentVariety::FermatSurface,
            points_per_component: None,
            components_per_point: None,
            point_neighbors: F::P3Plus1TimesP2Plus1,
            line_neighbors: Some(F::P3Plus1TimesPPlus1),
        }),
    },
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LocalStatus {
    Empty,
    ZeroDimensional,
    PositiveDimensional,
}

impl LocalStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            LocalStatus::Empty => "empty",
            LocalStatus::ZeroDimensional => "zero-dimensional",
            LocalStatus::PositiveDimensional => "positive-dimensional",
        }
    }
}

/// The evaluated geometry of one local factor at a fixed `p` and `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalGeometry {
    pub splitting: SplittingType,
    pub signature: SignaturePair,
    pub status: LocalStatus,
    pub dimension: Option<u32>,
    pub component_variety: Option<ComponentVariety>,
    pub points_per_component: Option<Count>,
    pub components_per_point: Option<Count>,
    /// Number of components `X'` meeting a fixed `X` in the given way.
    /// `Equal` maps to 1 whenever the factor is nonempty.
    pub neighbor_counts: BTreeMap<Relation, Count>,
}

impl LocalGeometry {
    pub fn is_empty(&self) -> bool {
        self.status == LocalStatus::Empty
    }

    pub fn neighbor_count(&self, relation: Relation) -> Option<&Count> {
        self.neighbor_counts.get(&relation)
    }

    /// `components_per_point - 1`; `None` unless both incidence fields exist.
    pub fn double_counted_neighbors(&self) -> Option<BigUint> {
        let points = self.points_per_component.as_ref()?;
        let comps = self.components_per_point.as_ref()?;
        Some(&points.value * (&comps.value - BigUint::one()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LocalError {
    UnsupportedSignature { signature: SignaturePair },
}

impl fmt::Display for LocalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LocalError::UnsupportedSignature { signature } => write!(
                f,
                "UnsupportedSignature: {signature} is not a normalized signature with 1 <= a+b <= {MAX_M}"
            ),
        }
    }
}

impl TableRow {
    pub fn evaluate(&self, p: u64, j: PolarizationIndex) -> LocalGeometry {
        let mut geometry = LocalGeometry {
            splitting: self.splitting,
            signature: self.signature,
            status: LocalStatus::Empty,
            dimension: None,
            component_variety: None,
            points_per_component: None,
            components_per_point: None,
            neighbor_counts: BTreeMap::new(),
        };
        if !self.nonempty.holds(self.signature.m(), j) {
            return geometry;
        }
        geometry
            .neighbor_counts
            .insert(Relation::Equal, Count::one());
        match self.shape {
            RowShape::ZeroDimensional => {
                geometry.status = LocalStatus::ZeroDimensional;
                geometry.dimension = Some(0);
                geometry.component_variety = Some(ComponentVariety::Point);
            }
            RowShape::Positive(row) => {
                geometry.status = LocalStatus::PositiveDimensional;
                geometry.dimension = Some(row.dimension);
                geometry.component_variety = Some(row.variety);
                geometry.points_per_component = row.points_per_component.map(|f| f.count(p));
                geometry.components_per_point = row.components_per_point.map(|f| f.count(p));
                geometry
                    .neighbor_counts
                    .insert(Relation::PointIntersection, row.point_neighbors.count(p));
                if let Some(line) = row.line_neighbors {
                    geometry
                        .neighbor_counts
                        .insert(Relation::LineIntersection, line.count(p));
                }
            }
        }
        geometry
    }
}

/// A lookup table of local factor rows. [`LocalTable::standard`] is the
/// table used everywhere; other tables exist to exercise the oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalTable {
    rows: Vec<TableRow>,
}

impl Default for LocalTable {
    fn default() -> Self {
        LocalTable::standard()
    }
}

impl LocalTable {
    pub fn standard() -> Self {
        LocalTable {
            rows: STANDARD_ROWS.to_vec(),
        }
    }

    pub fn from_rows(rows: Vec<TableRow>) -> Self {
        LocalTable { rows }
    }

    pub fn rows(&self) -> &[TableRow] {
        &self.rows
    }

    pub fn row(&self, splitting: SplittingType, signature: SignaturePair) -> Option<&TableRow> {
        self.rows
            .iter()
            .find(|row| row.splitting == splitting && row.signature == signature)
    }

    pub fn row_mut(
        &mut self,
        splitting: SplittingType,
        signature: SignaturePair,
    ) -> Option<&mut TableRow> {
        self.rows
            .iter_mut()
            .find(|row| row.splitting == splitting && row.signature == signature)
    }

    pub fn geometry(
        &self,
        splitting: SplittingType,
        signature: SignaturePair,
        p: u64,
        j: PolarizationIndex,
    ) -> Result<LocalGeometry, LocalError> {
        self.row(splitting, signature)
            .map(|row| row.evaluate(p, j))
            .ok_or(LocalError::UnsupportedSignature { signature })
    }
}

fn standard_row(splitting: SplittingType, signature: SignaturePair) -> Option<&'static TableRow> {
    STANDARD_ROWS
        .iter()
        .find(|row| row.splitting == splitting && row.signature == signature)
}

/// Geometry of `N^{splitting,j}_{sig}` at the prime `p`, from the standard table.
pub fn local_factor_geometry(
    splitting: SplittingType,
    signature: SignaturePair,
    p: u64,
    j: PolarizationIndex,
) -> Result<LocalGeometry, LocalError> {
    standard_row(splitting, signature)
        .map(|row| row.evaluate(p, j))
        .ok_or(LocalError::UnsupportedSignature { signature })
}

/// Height of the quasi-isogeny on the piece with `ord_p(c(rho)) = j`: `m * j`.
pub fn quasi_isogeny_height(m: u32, j: PolarizationIndex) -> i128 {
    i128::from(m) * i128::from(j.0)
}
