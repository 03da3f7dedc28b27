//! Job execution and report records.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use super::manifest::{named_model, JobDef, Resolved, Route, SCHEMA};
use super::CliError;
use crate::action::{coboundary_shift, Theory, TheoryKind};
use crate::fields::{FieldOrbit, Presentation};
use crate::groups::Cochain;
use crate::scalars::{CyclotomicScalar, ScalarRecord};
use crate::topology::{builtin_complex, Builtin};
use crate::tqft::{
    bordism_matrix, dim_via_torus, partition_by_fields, partition_closed, partition_product_formula, state_space,
    Manifold, TqftError,
};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ErrorRecord {
    pub code: i32,
    pub kind: &'static str,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct JobRecord {
    pub id: String,
    #[serde(rename = "type")]
    pub job_type: &'static str,
    pub inputs_digest: String,
    /// `ok`, `PASS`, `FAIL` or `error`.
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<ScalarRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<String>,
    /// Display only; `value` is authoritative.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decimal: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub details: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub seed: u64,
    pub records: Vec<JobRecord>,
}

impl Report {
    /// The exit code of the first failing record, or 0.
    pub fn exit_code(&self) -> i32 {
        self.records
            .iter()
            .find_map(|r| match (&r.error, r.status) {
                (Some(e), _) => Some(e.code),
                (None, "FAIL") => Some(super::EXIT_CHECK_FAILED),
                _ => None,
            })
            .unwrap_or(0)
    }
}

struct Outcome {
    status: &'static str,
    value: Option<CyclotomicScalar>,
    details: Option<Value>,
}

impl Outcome {
    fn value(v: CyclotomicScalar, details: Option<Value>) -> Self {
        Self { status: "ok", value: Some(v), details }
    }

    fn check(pass: bool, value: Option<CyclotomicScalar>, details: Value) -> Self {
        Self { status: if pass { "PASS" } else { "FAIL" }, value, details: Some(details) }
    }
}

fn digest(v: &Value) -> String {
    let bytes = serde_json::to_vec(v).expect("json value");
    Sha256::digest(&bytes).iter().map(|b| format!("{b:02x}")).collect()
}

fn orbit_json(theory: &Theory, o: &FieldOrbit) -> Value {
    let g = theory.group();
    let names: Vec<&str> = o.representative.values().iter().map(|&x| g.name(x)).collect();
    json!({"representative": names, "orbit_size": o.orbit_size, "stabilizer": o.stabilizer_order})
}

fn integer(n: usize) -> CyclotomicScalar {
    CyclotomicScalar::integer(n as i64)
}

fn random_eta(theory: &Theory, rng: &mut ChaCha8Rng) -> Result<Cochain, CliError> {
    let omega = theory.group_cocycle().ok_or_else(|| CliError::Compute("needs a cocycle theory".into()))?;
    let g = omega.group().clone();
    let e = g.identity();
    let n = omega.modulus();
    Ok(Cochain::from_fn(&g, omega.degree() - 1, n, |args| {
        if args.contains(&e) {
            0
        } else {
            rng.gen_range(0..n) as i64
        }
    }))
}

fn run_job(r: &Resolved<'_>, job: &JobDef, seed: u64) -> Result<Outcome, CliError> {
    match job {
        JobDef::Closed { theory, manifold, route, .. } => {
            let (t, x) = (r.theory(theory)?, r.manifold(manifold)?);
            let v = match route {
                Route::Orbits => partition_closed(t, x)?,
                Route::Fields => partition_by_fields(t, x)?,
                Route::ProductFormula => partition_product_formula(t, x)?,
            };
            Ok(Outcome::value(v, None))
        }
        JobDef::StateSpace { theory, manifold, .. } => {
            let t = r.theory(theory)?;
            let s = state_space(t, &r.presentation(manifold)?)?;
            let basis: Vec<Value> = s.basis.iter().map(|o| orbit_json(t, o)).collect();
            Ok(Outcome::value(integer(s.dimension), Some(json!({"dimension": s.dimension, "basis": basis}))))
        }
        JobDef::DimViaTorus { theory, manifold, .. } => {
            Ok(Outcome::value(dim_via_torus(r.theory(theory)?, &r.presentation(manifold)?)?, None))
        }
        JobDef::Bordism { theory, bordism, .. } => {
            let t = r.theory(theory)?;
            let m = bordism_matrix(t, r.bordism(bordism)?)?;
            let basis = |b: &[FieldOrbit]| b.iter().map(|o| orbit_json(t, o)).collect::<Vec<_>>();
            Ok(Outcome {
                status: "ok",
                value: None,
                details: Some(json!({
                    "rows": m.matrix.rows(),
                    "cols": m.matrix.cols(),
                    "matrix": m.matrix,
                    "source_basis": basis(&m.source_basis),
                    "target_basis": basis(&m.target_basis),
                })),
            })
        }
        JobDef::CoboundaryInvariance { theory, manifold, samples, .. } => {
            let (t, x) = (r.theory(theory)?, r.manifold(manifold)?);
            let base = partition_closed(t, x)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut mismatches = 0usize;
            for _ in 0..*samples {
                let shifted = coboundary_shift(t, &random_eta(t, &mut rng)?).map_err(TqftError::from)?;
                if partition_closed(&shifted, x)? != base {
                    mismatches += 1;
                }
            }
            Ok(Outcome::check(mismatches == 0, Some(base), json!({"samples": samples, "mismatches": mismatches})))
        }
        JobDef::Table7 { .. } => table7(),
    }
}

struct Row {
    label: String,
    route: &'static str,
    computed: CyclotomicScalar,
    expected: CyclotomicScalar,
    expected_form: String,
}

fn w1(n: usize) -> Theory {
    Theory::w1_power(n).expect("positive power")
}

fn complex(name: &str) -> Result<Manifold, CliError> {
    let b: Builtin = name.parse().map_err(|e: crate::topology::TopologyError| CliError::Compute(e.to_string()))?;
    Ok(Manifold::Complex(builtin_complex(&b).map_err(|e| CliError::Compute(e.to_string()))?))
}

fn table7_rows() -> Result<Vec<Row>, CliError> {
    let mut rows = Vec::new();
    let zero = CyclotomicScalar::integer(0);
    for g in 0..=3usize {
        let x = complex(&format!("sigma({g})"))?;
        let expected = CyclotomicScalar::from_rational(1, BigRational::new(BigInt::from(4).pow(g as u32), BigInt::from(2)))
            .expect("level 1");
        for (route, value) in [("enumeration", partition_closed(&w1(2), &x)?), ("product_formula", partition_product_formula(&w1(2), &x)?)] {
            rows.push(Row {
                label: format!("Z_w1^2(sigma({g}))"),
                route,
                computed: value,
                expected: expected.clone(),
                expected_form: "2^(2g-1)".into(),
            });
        }
    }
    rows.push(Row {
        label: "Z_w1^1(circle)".into(),
        route: "enumeration",
        computed: partition_closed(&w1(1), &complex("circle")?)?,
        expected: zero.clone(),
        expected_form: "0".into(),
    });
    rows.push(Row {
        label: "Z_w1^2(rp2)".into(),
        route: "enumeration",
        computed: partition_closed(&w1(2), &complex("rp2")?)?,
        expected: zero.clone(),
        expected_form: "0".into(),
    });
    for n in [3, 4] {
        let x = Manifold::Model(named_model(&format!("real_projective({n})"))?);
        for (route, value) in [("enumeration", partition_closed(&w1(n), &x)?), ("product_formula", partition_product_formula(&w1(n), &x)?)] {
            rows.push(Row {
                label: format!("Z_w1^{n}(RP^{n})"),
                route,
                computed: value,
                expected: zero.clone(),
                expected_form: "0".into(),
            });
        }
    }
    for (m, l) in [(1, 1), (2, 1), (1, 2)] {
        let x = Manifold::Model(named_model(&format!("dold({m},{l})"))?);
        let n = m + 2 * l;
        rows.push(Row {
            label: format!("Z_w1^{n}(P({m},{l}))"),
            route: "enumeration",
            computed: partition_closed(&w1(n), &x)?,
            expected: CyclotomicScalar::integer(1),
            expected_form: "1".into(),
        });
    }
    let klein = complex("klein")?;
    for (route, value) in [("enumeration", partition_closed(&w1(2), &klein)?), ("product_formula", partition_product_formula(&w1(2), &klein)?)] {
        rows.push(Row {
            label: "Z_w1^2(klein)".into(),
            route,
            computed: value,
            expected: zero.clone(),
            expected_form: "0".into(),
        });
    }
    let circle = Presentation::parse(1, &[]).expect("circle");
    let dim = state_space(&w1(2), &circle)?.dimension;
    for (route, value) in [("transgression", integer(dim)), ("torus_state_sum", dim_via_torus(&w1(2), &circle)?)] {
        rows.push(Row {
            label: "dim Z_w1^2(circle)".into(),
            route,
            computed: value,
            expected: CyclotomicScalar::integer(2),
            expected_form: "2^b1".into(),
        });
    }
    Ok(rows)
}

fn table7() -> Result<Outcome, CliError> {
    let rows = table7_rows()?;
    let pass = rows.iter().all(|r| r.computed == r.expected);
    let rows: Vec<Value> = rows
        .iter()
        .map(|r| {
            json!({
                "label": r.label,
                "route": r.route,
                "computed": r.computed.to_string(),
                "expected": r.expected.to_string(),
                "expected_form": r.expected_form,
                "status": if r.computed == r.expected { "PASS" } else { "FAIL" },
            })
        })
        .collect();
    Ok(Outcome::check(pass, None, json!({ "rows": rows })))
}

fn is_cocycle_theory(t: &Theory) -> bool {
    matches!(t.kind(), TheoryKind::Cocycle(_))
}

fn record(r: &Resolved<'_>, job: &JobDef, seed: u64) -> JobRecord {
    let inputs = r.job_inputs(job);
    let mut rec = JobRecord {
        id: job.id().to_string(),
        job_type: job.type_name(),
        inputs_digest: digest(&inputs),
        status: "ok",
        value: None,
        exact: None,
        decimal: None,
        details: None,
        error: None,
    };
    if let JobDef::CoboundaryInvariance { theory, .. } = job {
        if r.theory(theory).is_ok_and(|t| !is_cocycle_theory(t)) {
            let e = CliError::Compute("coboundary shifts need a cocycle theory".into());
            rec.status = "error";
            rec.error = Some(ErrorRecord { code: e.exit_code(), kind: e.kind(), message: e.to_string() });
            return rec;
        }
    }
    match run_job(r, job, seed) {
        Ok(o) => {
            rec.status = o.status;
            if let Some(v) = o.value {
                rec.value = Some(v.to_record());
                rec.exact = Some(v.to_string());
                rec.decimal = Some(v.decimal());
            }
            rec.details = o.details;
        }
        Err(e) => {
            rec.status = "error";
            rec.error = Some(ErrorRecord { code: e.exit_code(), kind: e.kind(), message: e.to_string() });
        }
    }
    rec
}

/// Per-job seed, independent of scheduling.
fn job_seed(seed: u64, id: &str) -> u64 {
    let h = Sha256::digest(format!("{seed}:{id}").as_bytes());
    u64::from_le_bytes(h[..8].try_into().expect("8 bytes"))
}

/// Runs every job on a pool of `threads` workers; records keep manifest order.
pub fn run_manifest(r: &Resolved<'_>, threads: usize, seed: u64) -> Result<Report, CliError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .map_err(|e| CliError::Compute(e.to_string()))?;
    let records = pool.install(|| {
        r.manifest.jobs.par_iter().map(|job| record(r, job, job_seed(seed, job.id()))).collect::<Vec<_>>()
    });
    Ok(Report { schema: SCHEMA, seed, records })
}
