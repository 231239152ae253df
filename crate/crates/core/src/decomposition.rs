//! Product geometry of `N^j = prod_i N^{split/inert, j}_{(a_i,b_i)}` and of the
//! supersingular locus it uniformizes.
//!
//! An irreducible component of the product is a product of one component per
//! place. Two components `X`, `X'` meet iff they meet coordinatewise, and the
//! per-coordinate relations form an [`IntersectionPattern`]. The isomorphism
//! type of `X ∩ X'` only depends on the tallies `(r, s1, s2, t)` of the
//! pattern, which is its [`IntersectionClass`].
//!
//! Two numbers are reported per class. `per_pattern` is the number of `X'`
//! realizing one fixed pattern in the class: the product of the local neighbor
//! counts. `multiplicity` is the number of patterns in the class.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write as _;

use num_bigint::BigUint;
use num_integer::binomial;
use num_traits::One;

use crate::count::Count;
use crate::local_geometry::{
    local_factor_geometry, ComponentVariety, LocalError, LocalGeometry, LocalStatus, Relation,
};
use crate::model::{validate_spec, GlobalSpec, PolarizationIndex, SpecViolation};

/// Tally of the component varieties of the local factors.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct ComponentProfile {
    /// `d`: Fermat curve factors.
    pub curves: usize,
    /// `e`: Fermat surface factors.
    pub surfaces: usize,
    /// `f`: projective line factors.
    pub lines: usize,
    pub zero_dim_factors: usize,
}

impl ComponentProfile {
    pub fn dimension(&self) -> usize {
        self.curves + 2 * self.surfaces + self.lines
    }

    /// Isomorphism type of a component, e.g. `C^1 x S^1 x P1^1`.
    pub fn component_type(&self) -> String {
        product_type(self.curves, self.surfaces, self.lines)
    }

    /// Every class `(r, s1, s2, t)` with `r <= d`, `s1 + s2 <= e`, `t <= f`,
    /// starting from the identity class.
    pub fn classes(&self) -> Vec<IntersectionClass> {
        let mut out = Vec::new();
        for r in (0..=self.curves).rev() {
            for s1 in (0..=self.surfaces).rev() {
                for s2 in (0..=self.surfaces - s1).rev() {
                    for t in (0..=self.lines).rev() {
                        out.push(IntersectionClass { r, s1, s2, t });
                    }
                }
            }
        }
        out
    }

    fn tally(factors: &[LocalGeometry]) -> Self {
        let mut profile = ComponentProfile::default();
        for factor in factors {
            match factor.component_variety {
                Some(ComponentVariety::FermatCurve) => profile.curves += 1,
                Some(ComponentVariety::FermatSurface) => profile.surfaces += 1,
                Some(ComponentVariety::ProjectiveLine) => profile.lines += 1,
                Some(ComponentVariety::Point) => profile.zero_dim_factors += 1,
                None => {}
            }
        }
        profile
    }
}

fn product_type(curves: usize, surfaces: usize, lines: usize) -> String {
    let mut parts = Vec::new();
    for (symbol, exp) in [("C", curves), ("S", surfaces), ("P1", lines)] {
        if exp > 0 {
            parts.push(alloc::format!("{symbol}^{exp}"));
        }
    }
    if parts.is_empty() {
        String::from("point")
    } else {
        parts.join(" x ")
    }
}

/// `r` equal curve coordinates, `s1` equal and `s2` line-meeting surface
/// coordinates, `t` equal line coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntersectionClass {
    pub r: usize,
    pub s1: usize,
    pub s2: usize,
    pub t: usize,
}

impl IntersectionClass {
    pub const fn new(r: usize, s1: usize, s2: usize, t: usize) -> Self {
        IntersectionClass { r, s1, s2, t }
    }

    /// `C^r x S^s1 x P1^(s2+t)`.
    pub fn isomorphism_type(&self) -> String {
        product_type(self.r, self.s1, self.s2 + self.t)
    }

    pub fn fits(&self, profile: &ComponentProfile) -> bool {
        self.r <= profile.curves && self.s1 + self.s2 <= profile.surfaces && self.t <= profile.lines
    }

    pub fn is_identity_for(&self, profile: &ComponentProfile) -> bool {
        self.r == profile.curves && self.s1 == profile.surfaces && self.t == profile.lines
    }
}

impl fmt::Display for IntersectionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.r, self.s1, self.s2, self.t)
    }
}

/// One relation per place.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntersectionPattern(pub Vec<Relation>);

impl IntersectionPattern {
    pub fn all_equal(n: usize) -> Self {
        IntersectionPattern(alloc::vec![Relation::Equal; n])
    }

    pub fn relations(&self) -> &[Relation] {
        &self.0
    }

    fn class_against(&self, factors: &[LocalGeometry]) -> IntersectionClass {
        let mut class = IntersectionClass::new(0, 0, 0, 0);
        for (relation, factor) in self.0.iter().zip(factors) {
            match (factor.component_variety, relation) {
                (Some(ComponentVariety::FermatCurve), Relation::Equal) => class.r += 1,
                (Some(ComponentVariety::FermatSurface), Relation::Equal) => class.s1 += 1,
                (Some(ComponentVariety::FermatSurface), Relation::LineIntersection) => {
                    class.s2 += 1
                }
                (Some(ComponentVariety::ProjectiveLine), Relation::Equal) => class.t += 1,
                _ => {}
            }
        }
        class
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GlobalStatus {
    Empty,
    Nonempty,
}

impl GlobalStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            GlobalStatus::Empty => "empty",
            GlobalStatus::Nonempty => "nonempty",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ReportLevel {
    /// One piece `N^j` of the Rapoport-Zink space.
    RZSpace,
    /// The supersingular locus of the Shimura variety.
    ShimuraSS,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassEntry {
    pub class: IntersectionClass,
    /// Components `X'` realizing one fixed pattern of this class.
    pub per_pattern: Option<Count>,
    /// Number of patterns in this class.
    pub multiplicity: Option<BigUint>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlobalGeometry {
    pub report_level: ReportLevel,
    /// The piece `N^j` described; `None` for [`ReportLevel::ShimuraSS`].
    pub j: Option<PolarizationIndex>,
    pub status: GlobalStatus,
    pub dimension: Option<usize>,
    /// All zero when the geometry is empty.
    pub profile: ComponentProfile,
    /// Local factors in place order. Shimura-level reports carry no counts.
    pub factors: Vec<LocalGeometry>,
    /// 1-based indices of places whose local factor is empty.
    pub empty_places: Vec<usize>,
    pub classes: Vec<ClassEntry>,
}

impl GlobalGeometry {
    pub fn is_empty(&self) -> bool {
        self.status == GlobalStatus::Empty
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecompositionError {
    InvalidSpec(Vec<SpecViolation>),
    Local(LocalError),
    /// The pattern was requested on an empty geometry.
    EmptyGeometry,
    InconsistentPattern {
        place: usize,
        reason: &'static str,
    },
    InvalidClass {
        class: IntersectionClass,
    },
}

impl fmt::Display for DecompositionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecompositionError::InvalidSpec(violations) => {
                f.write_str("InvalidSpec:")?;
                for v in violations {
                    write!(f, " {v};")?;
                }
                Ok(())
            }
            DecompositionError::Local(err) => write!(f, "{err}"),
            DecompositionError::EmptyGeometry => {
                f.write_str("EmptyGeometry: the geometry has no components")
            }
            DecompositionError::InconsistentPattern { place, reason } => {
                write!(f, "InconsistentPattern: place {place}: {reason}")
            }
            DecompositionError::InvalidClass { class } => {
                write!(
                    f,
                    "InvalidClass: {class} does not fit the component profile"
                )
            }
        }
    }
}

impl From<LocalError> for DecompositionError {
    fn from(err: LocalError) -> Self {
        DecompositionError::Local(err)
    }
}

fn local_factors(
    spec: &GlobalSpec,
    j: PolarizationIndex,
) -> Result<Vec<LocalGeometry>, DecompositionError> {
    validate_spec(spec).map_err(DecompositionError::InvalidSpec)?;
    spec.places
        .iter()
        .map(|place| {
            local_factor_geometry(place.splitting, place.signature, spec.p, j)
                .map_err(DecompositionError::from)
        })
        .collect()
}

fn nonempty_factors(
    spec: &GlobalSpec,
    j: PolarizationIndex,
) -> Result<Vec<LocalGeometry>, DecompositionError> {
    let factors = local_factors(spec, j)?;
    if factors.iter().any(LocalGeometry::is_empty) {
        return Err(DecompositionError::EmptyGeometry);
    }
    Ok(factors)
}

fn pattern_count(
    factors: &[LocalGeometry],
    pattern: &IntersectionPattern,
) -> Result<Count, DecompositionError> {
    if pattern.0.len() != factors.len() {
        return Err(DecompositionError::InconsistentPattern {
            place: pattern.0.len().min(factors.len()) + 1,
            reason: "pattern length differs from the number of places",
        });
    }
    let mut value = BigUint::one();
    // (formula tag, exponent) in order of first appearance.
    let mut tags: Vec<(&str, usize)> = Vec::new();
    for (i, (relation, factor)) in pattern.0.iter().zip(factors).enumerate() {
        let count = factor.neighbor_count(*relation).ok_or_else(|| {
            let reason = match (relation, factor.status) {
                (Relation::LineIntersection, _) => {
                    "line intersection outside an inert (2,2) factor"
                }
                (_, LocalStatus::ZeroDimensional) => {
                    "zero-dimensional factor only admits the equal relation"
                }
                _ => "relation not available on this factor",
            };
            DecompositionError::InconsistentPattern {
                place: i + 1,
                reason,
            }
        })?;
        if *relation == Relation::Equal {
            continue;
        }
        value *= &count.value;
        match tags.iter_mut().find(|(tag, _)| *tag == count.formula) {
            Some((_, exp)) => *exp += 1,
            None => tags.push((count.formula.as_str(), 1)),
        }
    }
    Ok(Count::new(value, product_formula(&tags)))
}

fn product_formula(tags: &[(&str, usize)]) -> String {
    if tags.is_empty() {
        return String::from("1");
    }
    let mut out = String::new();
    for (i, (tag, exp)) in tags.iter().enumerate() {
        if i > 0 {
            out.push_str(" * ");
        }
        if *exp == 1 {
            out.push_str(tag);
        } else {
            let _ = write!(out, "({tag})^{exp}");
        }
    }
    out
}

/// The representative pattern of a class: within each factor type, the
/// earliest coordinates take the equal (then line) relations.
fn canonical_pattern(factors: &[LocalGeometry], class: &IntersectionClass) -> IntersectionPattern {
    let (mut r, mut s1, mut s2, mut t) = (class.r, class.s1, class.s2, class.t);
    let take = |budget: &mut usize| {
        if *budget > 0 {
            *budget -= 1;
            true
        } else {
            false
        }
    };
    IntersectionPattern(
        factors
            .iter()
            .map(|factor| match factor.component_variety {
                Some(ComponentVariety::FermatCurve) if take(&mut r) => Relation::Equal,
                Some(ComponentVariety::FermatSurface) if take(&mut s1) => Relation::Equal,
                Some(ComponentVariety::FermatSurface) if take(&mut s2) => {
                    Relation::LineIntersection
                }
                Some(ComponentVariety::ProjectiveLine) if take(&mut t) => Relation::Equal,
                Some(ComponentVariety::Point) | None => Relation::Equal,
                _ => Relation::PointIntersection,
            })
            .collect(),
    )
}

fn class_multiplicity(profile: &ComponentProfile, class: &IntersectionClass) -> BigUint {
    let big = |x: usize| BigUint::from(x);
    let curves = binomial(big(profile.curves), big(class.r));
    // e! / (s1! s2! (e - s1 - s2)!)
    let surfaces = binomial(big(profile.surfaces), big(class.s1))
        * binomial(big(profile.surfaces - class.s1), big(class.s2));
    let lines = binomial(big(profile.lines), big(class.t));
    curves * surfaces * lines
}

fn class_entry(
    factors: &[LocalGeometry],
    profile: &ComponentProfile,
    class: IntersectionClass,
) -> Result<ClassEntry, DecompositionError> {
    if !class.fits(profile) {
        return Err(DecompositionError::InvalidClass { class });
    }
    let per_pattern = pattern_count(factors, &canonical_pattern(factors, &class))?;
    Ok(ClassEntry {
        class,
        per_pattern: Some(per_pattern),
        multiplicity: Some(class_multiplicity(profile, &class)),
    })
}

/// Geometry of the piece `N^j` of the Rapoport-Zink space attached to `spec`.
pub fn rz_geometry(
    spec: &GlobalSpec,
    j: PolarizationIndex,
) -> Result<GlobalGeometry, DecompositionError> {
    let factors = local_factors(spec, j)?;
    let empty_places: Vec<usize> = factors
        .iter()
        .enumerate()
        .filter(|(_, f)| f.is_empty())
        .map(|(i, _)| i + 1)
        .collect();
    if !empty_places.is_empty() {
        return Ok(GlobalGeometry {
            report_level: ReportLevel::RZSpace,
            j: Some(j),
            status: GlobalStatus::Empty,
            dimension: None,
            profile: ComponentProfile::default(),
            factors,
            empty_places,
            classes: Vec::new(),
        });
    }
    let profile = ComponentProfile::tally(&factors);
    let dimension = factors
        .iter()
        .map(|f| f.dimension.unwrap_or(0) as usize)
        .sum();
    let classes = profile
        .classes()
        .into_iter()
        .map(|class| class_entry(&factors, &profile, class))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GlobalGeometry {
        report_level: ReportLevel::RZSpace,
        j: Some(j),
        status: GlobalStatus::Nonempty,
        dimension: Some(dimension),
        profile,
        factors,
        empty_places,
        classes,
    })
}

/// Number of components `X'` meeting a fixed component `X` of `N^j` with the
/// given per-place relations.
pub fn neighbor_count_per_pattern(
    spec: &GlobalSpec,
    j: PolarizationIndex,
    pattern: &IntersectionPattern,
) -> Result<Count, DecompositionError> {
    let factors = nonempty_factors(spec, j)?;
    pattern_count(&factors, pattern)
}

/// `(per_pattern, multiplicity)` for an intersection class of `N^j`.
pub fn neighbor_count_per_class(
    spec: &GlobalSpec,
    j: PolarizationIndex,
    class: &IntersectionClass,
) -> Result<(Count, BigUint), DecompositionError> {
    let factors = nonempty_factors(spec, j)?;
    let profile = ComponentProfile::tally(&factors);
    let entry = class_entry(&factors, &profile, *class)?;
    Ok((
        entry.per_pattern.expect("rz class entries carry counts"),
        entry.multiplicity.expect("rz class entries carry counts"),
    ))
}

/// The class a pattern falls into, relative to the factors of `N^j`.
pub fn class_of_pattern(
    spec: &GlobalSpec,
    j: PolarizationIndex,
    pattern: &IntersectionPattern,
) -> Result<IntersectionClass, DecompositionError> {
    let factors = nonempty_factors(spec, j)?;
    pattern_count(&factors, pattern)?;
    Ok(pattern.class_against(&factors))
}

fn strip_counts(mut factor: LocalGeometry) -> LocalGeometry {
    factor.points_per_component = None;
    factor.components_per_point = None;
    factor.neighbor_counts.clear();
    factor
}

/// Geometry of the supersingular locus uniformized by the Rapoport-Zink space
/// of `spec`, whose places carry the local signatures at the chosen prime of
/// the reflex field.
///
/// The locus is a finite disjoint union of quotients of `N` by discrete
/// groups acting through local isomorphisms, so dimension, component type and
/// intersection types carry over while component and neighbor counts do not.
pub fn shimura_ss_geometry(spec: &GlobalSpec) -> Result<GlobalGeometry, DecompositionError> {
    // rz_geometry only depends on the parity of j.
    let even = rz_geometry(spec, PolarizationIndex(0))?;
    let mut geometry = if even.is_empty() {
        rz_geometry(spec, PolarizationIndex(1))?
    } else {
        even
    };
    if geometry.is_empty() {
        // Report the places that are empty for every j.
        let odd = local_factors(spec, PolarizationIndex(1))?;
        let even = local_factors(spec, PolarizationIndex(0))?;
        geometry.empty_places = (0..spec.n())
            .filter(|&i| odd[i].is_empty() && even[i].is_empty())
            .map(|i| i + 1)
            .collect();
        if geometry.empty_places.is_empty() {
            // Mixed parities: no single j makes every factor nonempty.
            geometry.empty_places = geometry
                .factors
                .iter()
                .enumerate()
                .filter(|(_, f)| f.is_empty())
                .map(|(i, _)| i + 1)
                .collect();
        }
    }
    geometry.report_level = ReportLevel::ShimuraSS;
    geometry.j = None;
    geometry.factors = geometry.factors.into_iter().map(strip_counts).collect();
    for entry in &mut geometry.classes {
        entry.per_pattern = None;
        entry.multiplicity = None;
    }
    Ok(geometry)
}
