//! Diffs the oracle's enumerations against a [`LocalTable`].

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::time::Duration;

use num_bigint::BigUint;
use num_traits::One;

use super::field::FqSquared;
use super::projective::{count_projective_points, fermat_point_count, line_census, LineCensus};
use super::OracleError;
use crate::count::Count;
use crate::local_geometry::{LocalGeometry, LocalTable, Relation};
use crate::model::{PolarizationIndex, SignaturePair, SplittingType};

/// Largest `p` verified unless the caller raises the bound.
pub const DEFAULT_MAX_P: u64 = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CheckKind {
    /// An enumeration compared with a table entry.
    Enumerated,
    /// An enumeration compared with a textbook closed form; checks the oracle.
    ClosedForm,
    /// Table entries compared with each other. The constants involved are
    /// table-only and are validated only through this identity.
    TableIdentity,
}

impl CheckKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckKind::Enumerated => "enumerated",
            CheckKind::ClosedForm => "closed-form",
            CheckKind::TableIdentity => "table-only, identity-checked",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    /// What the expected value refers to, e.g. `inert (1,2) points per component`.
    pub subject: String,
    pub kind: CheckKind,
    /// `None` when the table has no entry to compare with.
    pub expected: Option<Count>,
    pub observed: BigUint,
    pub pass: bool,
}

impl Check {
    fn new(
        name: &'static str,
        subject: String,
        kind: CheckKind,
        expected: Option<Count>,
        observed: BigUint,
    ) -> Self {
        let pass = expected.as_ref().is_some_and(|e| e.value == observed);
        Check {
            name,
            subject,
            kind,
            expected,
            observed,
            pass,
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.expected {
            Some(expected) => write!(
                f,
                "{}: expected {} = {}, observed {}",
                self.name, expected.formula, expected.value, self.observed
            )?,
            None => write!(
                f,
                "{}: expected <missing from table>, observed {}",
                self.name, self.observed
            )?,
        }
        write!(
            f,
            " [{}] ({}; {})",
            if self.pass { "pass" } else { "FAIL" },
            self.subject,
            self.kind.as_str()
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub p: u64,
    pub nonresidue: u64,
    pub checks: Vec<Check>,
    /// Statements the table relies on that no check here can confirm.
    pub assumptions: Vec<&'static str>,
    /// Filled in by callers that have a clock.
    pub elapsed: Option<Duration>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "verify p={} over GF({}) = GF({})(sqrt {})",
            self.p,
            self.p * self.p,
            self.p,
            self.nonresidue
        )?;
        for check in &self.checks {
            writeln!(f, "{check}")?;
        }
        for assumption in &self.assumptions {
            writeln!(f, "assumption: {assumption}")?;
        }
        let passed = self.checks.iter().filter(|c| c.pass).count();
        write!(f, "{passed}/{} checks passed", self.checks.len())?;
        if let Some(elapsed) = self.elapsed {
            write!(f, " in {} ms", elapsed.as_millis())?;
        }
        writeln!(f)
    }
}

const ASSUMPTIONS: [&str; 3] = [
    "components-per-point constants p+1 (inert (1,2)), p^3+1 (inert (1,3)) and p^2+1 (split (2,2)) come from the vertex-lattice model; they are table-only, identity-checked",
    "inert (2,2) points-per-component and components-per-point are not tabulated",
    "split (1,1) is taken to be nonempty and zero-dimensional for every j",
];

/// Validates `p` against the bound and builds the field.
pub fn check_bounds(p: u64, max_p: u64) -> Result<FqSquared, OracleError> {
    let field = FqSquared::new(p)?;
    if p > max_p {
        return Err(OracleError::BoundExceeded { p, max_p });
    }
    Ok(field)
}

pub fn verify_counts(p: u64, max_p: u64) -> Result<VerificationReport, OracleError> {
    verify_counts_with_table(p, max_p, &LocalTable::standard())
}

pub fn verify_counts_with_table(
    p: u64,
    max_p: u64,
    table: &LocalTable,
) -> Result<VerificationReport, OracleError> {
    let field = check_bounds(p, max_p)?;
    let census = line_census(&field, false);
    Ok(verify_against(&field, table, &census))
}

fn nonempty_row(
    table: &LocalTable,
    splitting: SplittingType,
    a: u32,
    b: u32,
    p: u64,
) -> Option<LocalGeometry> {
    table
        .geometry(splitting, SignaturePair::new(a, b), p, PolarizationIndex(0))
        .ok()
        .filter(|g| !g.is_empty())
}

fn closed_form(value: u64, formula: &str) -> Option<Count> {
    Some(Count::new(BigUint::from(value), formula))
}

/// Runs every check against `table`, given a finished sweep over the lines
/// of `P^3(GF(p^2))`.
pub fn verify_against(
    field: &FqSquared,
    table: &LocalTable,
    census: &LineCensus,
) -> VerificationReport {
    let p = field.p();
    let q = field.order();
    let big = BigUint::from;
    let mut checks = Vec::new();

    let split22 = nonempty_row(table, SplittingType::Split, 2, 2, p);
    let inert12 = nonempty_row(table, SplittingType::Inert, 1, 2, p);
    let inert13 = nonempty_row(table, SplittingType::Inert, 1, 3, p);
    let inert22 = nonempty_row(table, SplittingType::Inert, 2, 2, p);

    let line_points = count_projective_points(field, 2);
    let plane_points = count_projective_points(field, 3);
    let space_points = count_projective_points(field, 4);
    let curve_points = fermat_point_count(field, 3).expect("3 variables");
    let surface_points = fermat_point_count(field, 4).expect("4 variables");

    checks.push(Check::new(
        "projective_plane_points",
        String::from("|P^2(GF(q))|"),
        CheckKind::ClosedForm,
        closed_form(q * q + q + 1, "q^2+q+1"),
        big(plane_points),
    ));
    checks.push(Check::new(
        "projective_space_points",
        String::from("|P^3(GF(q))|"),
        CheckKind::ClosedForm,
        closed_form(q * q * q + q * q + q + 1, "q^3+q^2+q+1"),
        big(space_points),
    ));
    checks.push(Check::new(
        "projective_space_lines",
        String::from("lines of P^3(GF(q))"),
        CheckKind::ClosedForm,
        closed_form((q * q + 1) * (q * q + q + 1), "(q^2+1)(q^2+q+1)"),
        big(census.lines_examined),
    ));
    checks.push(Check::new(
        "projective_line_points",
        String::from("split (2,2) points per component"),
        CheckKind::Enumerated,
        split22
            .as_ref()
            .and_then(|g| g.points_per_component.clone()),
        big(line_points),
    ));
    checks.push(Check::new(
        "fermat_curve_points",
        String::from("inert (1,2) points per component"),
        CheckKind::Enumerated,
        inert12
            .as_ref()
            .and_then(|g| g.points_per_component.clone()),
        big(curve_points),
    ));
    checks.push(Check::new(
        "fermat_curve_points",
        String::from("inert (1,3) points per component"),
        CheckKind::Enumerated,
        inert13
            .as_ref()
            .and_then(|g| g.points_per_component.clone()),
        big(curve_points),
    ));
    checks.push(Check::new(
        "fermat_surface_points",
        String::from("inert (2,2) point-intersection neighbors"),
        CheckKind::Enumerated,
        inert22
            .as_ref()
            .and_then(|g| g.neighbor_count(Relation::PointIntersection).cloned()),
        big(surface_points),
    ));
    checks.push(Check::new(
        "fermat_surface_lines",
        String::from("inert (2,2) line-intersection neighbors"),
        CheckKind::Enumerated,
        inert22
            .as_ref()
            .and_then(|g| g.neighbor_count(Relation::LineIntersection).cloned()),
        big(census.lines_on_surface),
    ));
    checks.push(Check::new(
        "surface_line_incidences",
        String::from("distinct surface points over all counted lines"),
        CheckKind::ClosedForm,
        closed_form(census.lines_on_surface * (q + 1), "lines x (q+1)"),
        big(census.incidences),
    ));

    for row in table.rows() {
        let geometry = row.evaluate(p, PolarizationIndex(0));
        let (Some(points), Some(comps)) = (
            geometry.points_per_component.as_ref(),
            geometry.components_per_point.as_ref(),
        ) else {
            continue;
        };
        let expected = Count::new(
            &points.value * (&comps.value - BigUint::one()),
            format!("[{}] * ([{}] - 1)", points.formula, comps.formula),
        );
        let observed = geometry
            .neighbor_count(Relation::PointIntersection)
            .map(|c| c.value.clone())
            .unwrap_or_default();
        checks.push(Check::new(
            "double_counting",
            format!(
                "{} {} point-intersection neighbors",
                row.splitting, row.signature
            ),
            CheckKind::TableIdentity,
            Some(expected),
            observed,
        ));
    }

    VerificationReport {
        p,
        nonresidue: field.nonresidue(),
        checks,
        assumptions: ASSUMPTIONS.to_vec(),
        elapsed: None,
    }
}
