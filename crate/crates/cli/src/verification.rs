//! The `verify` command: a thread-partitioned line census fed into the core
//! verification checks.

use std::num::NonZeroUsize;
use std::thread;
use std::time::Instant;

use serde_json::{json, Value};
use sslocus_core::oracle::verify::check_bounds;
use sslocus_core::oracle::{
    line_census_part, verify_against, FermatForm, FqSquared, LineCensus, OracleError,
    VerificationReport,
};
use sslocus_core::LocalTable;

/// Census over all lines of `P^3(GF(p^2))`, split into `workers` residue
/// classes of the enumeration index. The totals do not depend on `workers`.
pub fn parallel_line_census(field: &FqSquared, workers: NonZeroUsize, collect: bool) -> LineCensus {
    let form = FermatForm::new(field);
    let parts = workers.get() as u64;
    if parts == 1 {
        return line_census_part(&form, 0, 1, collect);
    }
    thread::scope(|scope| {
        let handles: Vec<_> = (0..parts)
            .map(|part| {
                let form = &form;
                scope.spawn(move || line_census_part(form, part, parts, collect))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("census worker panicked"))
            .fold(LineCensus::default(), |acc, part| acc + part)
    })
}

pub fn default_workers() -> NonZeroUsize {
    thread::available_parallelism().unwrap_or(NonZeroUsize::MIN)
}

pub fn run_verification(
    p: u64,
    max_p: u64,
    workers: NonZeroUsize,
    table: &LocalTable,
) -> Result<VerificationReport, OracleError> {
    let start = Instant::now();
    let field = check_bounds(p, max_p)?;
    let census = parallel_line_census(&field, workers, false);
    let mut report = verify_against(&field, table, &census);
    report.elapsed = Some(start.elapsed());
    Ok(report)
}

pub fn report_json(report: &VerificationReport) -> Value {
    let checks: Vec<Value> = report
        .checks
        .iter()
        .map(|c| {
            json!({
                "name": c.name,
                "subject": c.subject,
                "kind": c.kind.as_str(),
                "expected": c.expected.as_ref().map(|e| json!({
                    "value": e.value.to_string(),
                    "formula": e.formula,
                })),
                "observed": c.observed.to_string(),
                "pass": c.pass,
            })
        })
        .collect();
    json!({
        "p": report.p,
        "nonresidue": report.nonresidue,
        "checks": checks,
        "assumptions": report.assumptions,
        "all_passed": report.all_passed(),
        "elapsed_ms": report.elapsed.map(|d| d.as_millis() as u64),
    })
}
