//! The `describe` report, rendered as canonical JSON or as text.
//!
//! JSON objects are `serde_json::Map`s, which keep keys sorted, and every
//! count is a decimal string, so re-parsing and re-rendering a report gives
//! the same bytes.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde_json::{json, Map, Value};
use sslocus_core::model::SpecViolation;
use sslocus_core::{
    quasi_isogeny_height, rz_geometry, shimura_ss_geometry, validate_spec, Count,
    DecompositionError, GlobalGeometry, GlobalSpec, LocalGeometry, Relation, ReportLevel,
};

use crate::spec_file::{ReportKind, Selection, SpecFile};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescribeReport {
    pub input: SpecFile,
    pub spec: GlobalSpec,
    pub kind: ReportKind,
    pub geometries: Vec<GlobalGeometry>,
    pub warnings: Vec<String>,
}

/// Why a spec file could not be described; every message starts with the
/// name of the violated rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescribeError {
    pub messages: Vec<String>,
}

impl From<Vec<SpecViolation>> for DescribeError {
    fn from(violations: Vec<SpecViolation>) -> Self {
        DescribeError {
            messages: violations.iter().map(ToString::to_string).collect(),
        }
    }
}

impl From<DecompositionError> for DescribeError {
    fn from(err: DecompositionError) -> Self {
        match err {
            DecompositionError::InvalidSpec(violations) => violations.into(),
            other => DescribeError {
                messages: vec![other.to_string()],
            },
        }
    }
}

pub fn describe(input: &SpecFile) -> Result<DescribeReport, DescribeError> {
    let spec = input.global_spec();
    validate_spec(&spec)?;
    let selection = input.selection().map_err(|e| DescribeError {
        messages: vec![e.0],
    })?;
    let mut warnings = Vec::new();
    let geometries = match &selection {
        Selection::Pieces(js) => js
            .iter()
            .map(|&j| rz_geometry(&spec, j))
            .collect::<Result<Vec<_>, _>>()?,
        Selection::Shimura { ignored_j } => {
            if let Some(j) = ignored_j {
                warnings.push(format!(
                    "j = {j} is ignored for shimura reports; the locus is described for every j at once"
                ));
            }
            vec![shimura_ss_geometry(&spec)?]
        }
    };
    if input.report == ReportKind::Shimura {
        if spec.places.iter().all(|place| place.signature.a == 0) {
            warnings.push(String::from(
                "every local signature is (0,m); the moduli problem is representable by a Shimura variety only when the global signatures are not all (0,m), which this spec cannot confirm",
            ));
        }
        warnings.push(String::from(
            "component and neighbor counts are omitted at Shimura level; they depend on the arithmetic quotient",
        ));
    }
    let table_only: BTreeSet<String> = geometries
        .iter()
        .flat_map(|g| g.factors.iter())
        .filter(|f| f.components_per_point.is_some())
        .map(|f| format!("{} {}", f.splitting, f.signature))
        .collect();
    if !table_only.is_empty() {
        warnings.push(format!(
            "components_per_point of {} is table-only, identity-checked",
            table_only.into_iter().collect::<Vec<_>>().join(", ")
        ));
    }
    Ok(DescribeReport {
        input: input.clone(),
        spec,
        kind: input.report,
        geometries,
        warnings,
    })
}

fn count_json(count: &Count) -> Value {
    json!({ "value": count.value.to_string(), "formula": count.formula })
}

fn factor_json(place: usize, factor: &LocalGeometry) -> Value {
    let mut obj = Map::new();
    obj.insert("place".into(), json!(place));
    obj.insert("splitting".into(), json!(factor.splitting.as_str()));
    obj.insert(
        "signature".into(),
        json!([factor.signature.a, factor.signature.b]),
    );
    obj.insert("status".into(), json!(factor.status.as_str()));
    obj.insert("dimension".into(), json!(factor.dimension));
    obj.insert(
        "component_variety".into(),
        json!(factor.component_variety.map(|v| v.name())),
    );
    if let Some(count) = &factor.points_per_component {
        obj.insert("points_per_component".into(), count_json(count));
    }
    if let Some(count) = &factor.components_per_point {
        obj.insert("components_per_point".into(), count_json(count));
    }
    if !factor.neighbor_counts.is_empty() {
        let neighbors: Map<String, Value> = factor
            .neighbor_counts
            .iter()
            .map(|(rel, count)| (rel.as_str().to_string(), count_json(count)))
            .collect();
        obj.insert("neighbor_counts".into(), Value::Object(neighbors));
    }
    Value::Object(obj)
}

fn geometry_json(geometry: &GlobalGeometry, m: u32) -> Value {
    let profile = &geometry.profile;
    let classes: Vec<Value> = geometry
        .classes
        .iter()
        .map(|entry| {
            let c = entry.class;
            let mut obj = Map::new();
            obj.insert("class".into(), json!([c.r, c.s1, c.s2, c.t]));
            obj.insert("isomorphism_type".into(), json!(c.isomorphism_type()));
            if let Some(count) = &entry.per_pattern {
                obj.insert("per_pattern".into(), count_json(count));
            }
            if let Some(mult) = &entry.multiplicity {
                obj.insert("multiplicity".into(), json!(mult.to_string()));
            }
            Value::Object(obj)
        })
        .collect();
    json!({
        "level": match geometry.report_level {
            ReportLevel::RZSpace => "rz",
            ReportLevel::ShimuraSS => "shimura",
        },
        "j": geometry.j.map(|j| j.0),
        "quasi_isogeny_height": geometry.j.map(|j| quasi_isogeny_height(m, j).to_string()),
        "status": geometry.status.as_str(),
        "dimension": geometry.dimension,
        "profile": {
            "curves": profile.curves,
            "surfaces": profile.surfaces,
            "lines": profile.lines,
            "zero_dimensional": profile.zero_dim_factors,
            "component_type": (!geometry.is_empty()).then(|| profile.component_type()),
        },
        "empty_places": geometry.empty_places,
        "factors": geometry
            .factors
            .iter()
            .enumerate()
            .map(|(i, f)| factor_json(i + 1, f))
            .collect::<Vec<_>>(),
        "classes": classes,
    })
}

impl DescribeReport {
    fn m(&self) -> u32 {
        self.spec.m().expect("validated specs have places")
    }

    pub fn to_json(&self) -> Value {
        json!({
            "input": serde_json::to_value(&self.input).expect("spec files serialize"),
            "n": self.spec.n(),
            "m": self.m(),
            "geometries": self
                .geometries
                .iter()
                .map(|g| geometry_json(g, self.m()))
                .collect::<Vec<_>>(),
            "warnings": self.warnings,
        })
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn render_json(&self) -> String {
        render_json(&self.to_json())
    }

    pub fn render_text(&self, color: bool) -> String {
        let p = self.spec.p;
        let heading = |text: &str| {
            if color {
                format!("\x1b[1m{text}\x1b[0m")
            } else {
                text.to_string()
            }
        };
        let audit = |count: &Count| count.audit(p);
        let mut out = String::new();
        let _ = writeln!(
            out,
            "p = {p}, n = {}, m = {}, report = {}",
            self.spec.n(),
            self.m(),
            self.kind.as_str()
        );
        let _ = writeln!(out, "places:");
        for (i, place) in self.spec.places.iter().enumerate() {
            let _ = writeln!(out, "  {}: {place}", i + 1);
        }
        for geometry in &self.geometries {
            out.push('\n');
            match geometry.j {
                Some(j) => {
                    let _ = writeln!(out, "{}", heading(&format!("N^j with j = {}", j.0)));
                    let _ = writeln!(
                        out,
                        "quasi-isogeny height: {}",
                        quasi_isogeny_height(self.m(), j)
                    );
                }
                None => {
                    let _ = writeln!(out, "{}", heading("supersingular locus"));
                }
            }
            let _ = writeln!(out, "status: {}", geometry.status.as_str());
            if geometry.is_empty() {
                let places: Vec<String> = geometry
                    .empty_places
                    .iter()
                    .map(ToString::to_string)
                    .collect();
                let _ = writeln!(out, "empty places: {}", places.join(", "));
                continue;
            }
            let profile = &geometry.profile;
            let _ = writeln!(out, "dimension: {}", geometry.dimension.unwrap_or(0));
            let _ = writeln!(
                out,
                "component type: {} (d = {}, e = {}, f = {}, zero-dimensional factors = {})",
                profile.component_type(),
                profile.curves,
                profile.surfaces,
                profile.lines,
                profile.zero_dim_factors
            );
            let _ = writeln!(out, "local factors:");
            for (i, factor) in geometry.factors.iter().enumerate() {
                let mut line = format!(
                    "  {}: {} {}: {}",
                    i + 1,
                    factor.splitting,
                    factor.signature,
                    factor.status.as_str()
                );
                if let Some(dim) = factor.dimension {
                    let _ = write!(line, ", dimension {dim}");
                }
                if let Some(variety) = factor.component_variety {
                    let _ = write!(line, ", components {}", variety.name());
                    if let Some(eq) = variety.equation() {
                        let _ = write!(line, " [{eq}]");
                    }
                }
                let _ = writeln!(out, "{line}");
                if let Some(count) = &factor.points_per_component {
                    let _ = writeln!(out, "     points per component: {}", audit(count));
                }
                if let Some(count) = &factor.components_per_point {
                    let _ = writeln!(out, "     components per point: {}", audit(count));
                }
                for rel in [Relation::PointIntersection, Relation::LineIntersection] {
                    if let Some(count) = factor.neighbor_count(rel) {
                        let _ = writeln!(
                            out,
                            "     neighbors meeting in a {}: {}",
                            rel.as_str(),
                            audit(count)
                        );
                    }
                }
            }
            let _ = writeln!(out, "intersection classes (r,s1,s2,t):");
            for entry in &geometry.classes {
                let mut line = format!("  {}  {}", entry.class, entry.class.isomorphism_type());
                if let Some(count) = &entry.per_pattern {
                    let _ = write!(line, "  per pattern {}", audit(count));
                }
                if let Some(mult) = &entry.multiplicity {
                    let _ = write!(line, "  patterns {mult}");
                }
                let _ = writeln!(out, "{line}");
            }
        }
        if !self.warnings.is_empty() {
            out.push('\n');
            let _ = writeln!(out, "{}", heading("warnings"));
            for warning in &self.warnings {
                let _ = writeln!(out, "  - {warning}");
            }
        }
        out
    }
}

pub fn render_json(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("values serialize");
    text.push('\n');
    text
}
