//! Implementation of the `toricfan` subcommands.
//!
//! Every command returns an [`Outcome`]: an exit code, a [`ReportDocument`]
//! and a plain-text rendering. Exit codes are 0 on success, 1 when a
//! verification fails and 2 for unusable input.
//!
//! Fan arguments are file paths or one of the built-in names `@barnette`
//! (the singular fan over the Barnette sphere) and `@barnette-smooth` (its
//! desingularisation, recomputed on every use).

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use serde_json::json;
use thiserror::Error;

use crate::certify::{certify_realization, CertError, Realization};
use crate::complex::{underlying_complex, verify_barnette_obstruction, ComplexError, SimplicialComplex};
use crate::datasets::{barnette_fan, barnette_one_face_points, BARNETTE_SCAN_BOUND, BARNETTE_SCAN_COUNTS};
use crate::fan::{Fan, FanError};
use crate::formats::{
    parse_int_list, ComplexDocument, FanDocument, FormatError, Metadata, RealizationDocument, ReportDocument,
};
use crate::scan::{scan_box_with_workers, ScanError};
use crate::subdivision::{
    cone_ray_sum, desingularize_barnette, generate_family, refines, stellar_subdivide, suspend_fan,
    SubdivisionError,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

pub const BUILTIN_BARNETTE: &str = "@barnette";
pub const BUILTIN_SMOOTH: &str = "@barnette-smooth";
/// Realization argument meaning "use the fan's ray vectors".
pub const RAYS_REALIZATION: &str = "@rays";

#[derive(Debug, Error)]
pub enum CommandError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Fan(#[from] FanError),
    #[error(transparent)]
    Subdivision(#[from] SubdivisionError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Cert(#[from] CertError),
    #[error(transparent)]
    Scan(#[from] ScanError),
    #[error("{0}")]
    Usage(String),
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub exit_code: i32,
    pub report: ReportDocument,
    pub text: String,
}

impl Outcome {
    fn finish(mut report: ReportDocument, exit_code: i32, text: String, started: Instant) -> Self {
        report.timing_ms = started.elapsed().as_millis() as u64;
        Outcome { exit_code, report, text }
    }
}

fn run(command: &str, body: impl FnOnce() -> Result<(ReportDocument, i32, String), CommandError>) -> Outcome {
    let started = Instant::now();
    match body() {
        Ok((report, code, text)) => Outcome::finish(report, code, text, started),
        Err(e) => {
            let mut report = ReportDocument::new(command, &[]);
            report.push("input", false, json!({ "error": e.to_string() }));
            Outcome::finish(report, EXIT_INPUT, format!("error: {e}\n"), started)
        }
    }
}

fn read(path: &Path) -> Result<Vec<u8>, CommandError> {
    std::fs::read(path).map_err(|source| CommandError::Io { path: path.to_path_buf(), source })
}

fn write(path: &Path, text: &str) -> Result<(), CommandError> {
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        std::fs::create_dir_all(parent).map_err(|source| CommandError::Io { path: parent.to_path_buf(), source })?;
    }
    std::fs::write(path, text).map_err(|source| CommandError::Io { path: path.to_path_buf(), source })
}

/// Loads a fan from a path or built-in name; also returns the canonical bytes
/// for digesting.
pub fn load_fan(source: &str) -> Result<(Fan, Vec<u8>), CommandError> {
    let fan = match source {
        BUILTIN_BARNETTE => barnette_fan(),
        BUILTIN_SMOOTH => desingularize_barnette().0,
        path => {
            let bytes = read(Path::new(path))?;
            let text = String::from_utf8_lossy(&bytes);
            return Ok((FanDocument::parse(&text)?.to_fan()?, bytes));
        }
    };
    let bytes = FanDocument::from_fan(&fan, None).to_canonical_string().into_bytes();
    Ok((fan, bytes))
}

/// What a complex argument resolved to.
pub enum LoadedComplex {
    Fan(Fan),
    Complex(SimplicialComplex),
}

impl LoadedComplex {
    pub fn complex(&self) -> SimplicialComplex {
        match self {
            LoadedComplex::Fan(f) => underlying_complex(f),
            LoadedComplex::Complex(c) => c.clone(),
        }
    }
}

/// Loads a complex file, or a fan (built-in or file) whose underlying complex
/// is meant.
pub fn load_complex(source: &str) -> Result<(LoadedComplex, Vec<u8>), CommandError> {
    if source.starts_with('@') {
        let (fan, bytes) = load_fan(source)?;
        return Ok((LoadedComplex::Fan(fan), bytes));
    }
    let bytes = read(Path::new(source))?;
    let value: serde_json::Value = serde_json::from_slice(&bytes).map_err(FormatError::from)?;
    if value.get("facets").is_some() {
        let doc: ComplexDocument = serde_json::from_value(value).map_err(FormatError::from)?;
        Ok((LoadedComplex::Complex(doc.to_complex()?), bytes))
    } else {
        let doc: FanDocument = serde_json::from_value(value).map_err(FormatError::from)?;
        Ok((LoadedComplex::Fan(doc.to_fan()?), bytes))
    }
}

fn completeness_section(fan: &Fan, witness: Option<&str>) -> Result<(bool, serde_json::Value, String), CommandError> {
    let w = match witness {
        Some(s) => parse_int_list(s)?,
        None => fan.default_witness()?,
    };
    let r = fan.verify_completeness(&w)?;
    let text = format!(
        "completeness: {} ({} facets, all paired: {}, opposite sides: {}, witness {} in {} cone(s))\n",
        if r.verdict { "complete" } else { "NOT complete" },
        r.facet_count,
        r.all_facets_paired,
        r.all_pairs_opposite,
        r.witness,
        r.witness_multiplicity
    );
    Ok((r.verdict, serde_json::to_value(&r).expect("serializable"), text))
}

fn smoothness_section(fan: &Fan) -> (serde_json::Value, String) {
    let r = fan.smoothness_report();
    let singular: Vec<_> = r.singular().map(|c| json!({ "cone": c.name, "determinant": c.determinant.to_string() })).collect();
    let dets: Vec<_> = r
        .cones
        .iter()
        .map(|c| json!({ "cone": c.name, "rays": fan.cone_word(c.cone), "determinant": c.determinant.to_string() }))
        .collect();
    let mut text = format!("smooth: {}\n", r.smooth);
    for c in r.singular() {
        let _ = writeln!(text, "  singular {} = {} det {}", c.name, fan.cone_word(c.cone), c.determinant);
    }
    (json!({ "smooth": r.smooth, "singular": singular, "determinants": dets }), text)
}

/// `verify`: completeness (decides the exit code) plus per-cone determinants.
pub fn cmd_verify(fan_source: &str, witness: Option<&str>) -> Outcome {
    run("verify", || {
        let (fan, bytes) = load_fan(fan_source)?;
        let mut report = ReportDocument::new("verify", &[&bytes]);
        let (complete, details, mut text) = completeness_section(&fan, witness)?;
        report.push("completeness", complete, details);
        let (smooth, smooth_text) = smoothness_section(&fan);
        // informational: singular fans may still verify
        report.push("smoothness", true, smooth);
        text.push_str(&smooth_text);
        Ok((report, if complete { EXIT_OK } else { EXIT_FAILED }, text))
    })
}

/// `scan`: lattice-point classification of `[-bound, bound]^n`.
pub fn cmd_scan(fan_source: &str, bound: i64, workers: usize, collect_one_face: bool) -> Outcome {
    run("scan", || {
        let (fan, bytes) = load_fan(fan_source)?;
        let mut report = ReportDocument::new("scan", &[&bytes]);
        let scan = scan_box_with_workers(&fan, bound, workers, collect_one_face)?;
        let ok = scan.not_covered == 0 && scan.sum_check();
        report.push("scan", ok, serde_json::to_value(&scan).expect("serializable"));
        let mut text = format!("{scan}\n");
        if fan == barnette_fan() && bound == BARNETTE_SCAN_BOUND {
            let counts_match = scan.counts_descending() == BARNETTE_SCAN_COUNTS;
            let points_match = scan.one_face_points.as_ref().map(|p| *p == barnette_one_face_points());
            let passed = counts_match && points_match.unwrap_or(true);
            report.push(
                "golden",
                passed,
                json!({ "expected_counts": BARNETTE_SCAN_COUNTS, "counts_match": counts_match, "one_face_points_match": points_match }),
            );
            let _ = writeln!(text, "reference counts reproduced: {passed}");
        }
        let code = if report.verdict { EXIT_OK } else { EXIT_FAILED };
        Ok((report, code, text))
    })
}

/// `desingularize`: replays the ten subdivisions and writes the smooth fan.
pub fn cmd_desingularize(out: Option<&Path>) -> Outcome {
    run("desingularize", || {
        let (fan, steps) = desingularize_barnette();
        let doc = FanDocument::from_fan(&fan, Some(Metadata::named("barnette-smooth", "ten stellar subdivisions of @barnette")));
        let doc_text = doc.to_canonical_string();
        let mut report = ReportDocument::new("desingularize", &[]);
        let mut text = String::new();
        let log: Vec<_> = steps.iter().map(|s| serde_json::to_value(s).expect("serializable")).collect();
        for (i, s) in steps.iter().enumerate() {
            let _ = writeln!(
                text,
                "step {:>2}: {} = {} on face {}, replaced {} -> {} cones",
                i + 1,
                s.new_ray_label,
                s.new_ray,
                s.face.concat(),
                s.affected_cones.join(","),
                s.produced_cones.len()
            );
        }
        report.push("steps", steps.len() == 10, json!(log));
        let smooth = fan.smoothness_report().smooth;
        let complete = fan.is_complete()?;
        let refined = refines(&fan, &barnette_fan())?;
        report.push(
            "result",
            smooth && complete && refined,
            json!({ "rays": fan.rays().len(), "max_cones": fan.cones().len(), "smooth": smooth, "complete": complete, "refines_barnette": refined }),
        );
        let _ = writeln!(
            text,
            "result: {} rays, {} maximal cones, smooth {smooth}, complete {complete}, refines @barnette {refined}",
            fan.rays().len(),
            fan.cones().len()
        );
        match out {
            Some(path) => write(path, &doc_text)?,
            None => report.push("fan", true, serde_json::to_value(&doc).expect("serializable")),
        }
        Ok((report, if smooth && complete && refined { EXIT_OK } else { EXIT_FAILED }, text))
    })
}

fn write_fan_result(
    report: &mut ReportDocument,
    text: &mut String,
    fan: &Fan,
    out: Option<&Path>,
    metadata: Metadata,
) -> Result<bool, CommandError> {
    let complete = fan.is_complete()?;
    let smooth = fan.smoothness_report().smooth;
    let fv = underlying_complex(fan).f_vector();
    report.push(
        "result",
        complete,
        json!({ "ambient_dim": fan.ambient_dim(), "rays": fan.rays().len(), "max_cones": fan.cones().len(), "complete": complete, "smooth": smooth, "f_vector": fv }),
    );
    let _ = writeln!(
        text,
        "result: dimension {}, {} rays, {} maximal cones, complete {complete}, smooth {smooth}, f-vector {fv}",
        fan.ambient_dim(),
        fan.rays().len(),
        fan.cones().len()
    );
    let doc = FanDocument::from_fan(fan, Some(metadata));
    match out {
        Some(path) => write(path, &doc.to_canonical_string())?,
        None => report.push("fan", true, serde_json::to_value(&doc).expect("serializable")),
    }
    Ok(complete)
}

/// How `subdivide` picks its point.
pub enum SubdivisionTarget<'a> {
    /// Sum of the rays of the cone with these labels.
    Cone(&'a str),
    /// Explicit point, comma-separated integers.
    Point(&'a str),
}

/// `subdivide`: one stellar subdivision.
pub fn cmd_subdivide(fan_source: &str, target: SubdivisionTarget<'_>, label: Option<&str>, out: Option<&Path>) -> Outcome {
    run("subdivide", || {
        let (fan, bytes) = load_fan(fan_source)?;
        let p = match target {
            SubdivisionTarget::Cone(labels) => {
                let labels: Vec<&str> = labels.split(',').map(str::trim).collect();
                cone_ray_sum(&fan, fan.find_cone(&labels)?)
            }
            SubdivisionTarget::Point(s) => parse_int_list(s)?,
        };
        let label = label.map_or_else(|| fan.fresh_label("f"), str::to_string);
        let (fine, step) = stellar_subdivide(&fan, &p, &label)?;
        let mut report = ReportDocument::new("subdivide", &[&bytes]);
        report.push("subdivision", true, serde_json::to_value(&step).expect("serializable"));
        let mut text = format!(
            "subdivided at {} = {} (face {}), replaced {} by {} cones\n",
            step.new_ray_label,
            step.new_ray,
            step.face.concat(),
            step.affected_cones.join(","),
            step.produced_cones.len()
        );
        let ok = write_fan_result(&mut report, &mut text, &fine, out, Metadata::named("subdivision", &format!("{fan_source} at {p}")))?;
        Ok((report, if ok { EXIT_OK } else { EXIT_FAILED }, text))
    })
}

/// `suspend`: the fan over the suspension.
pub fn cmd_suspend(fan_source: &str, out: Option<&Path>) -> Outcome {
    run("suspend", || {
        let (fan, bytes) = load_fan(fan_source)?;
        let s = suspend_fan(&fan);
        let mut report = ReportDocument::new("suspend", &[&bytes]);
        let mut text = String::new();
        let ok = write_fan_result(&mut report, &mut text, &s, out, Metadata::named("suspension", fan_source))?;
        Ok((report, if ok { EXIT_OK } else { EXIT_FAILED }, text))
    })
}

/// `family`: `count` successive subdivisions of a smooth complete base.
pub fn cmd_family(base_source: &str, count: usize, out_dir: Option<&Path>) -> Outcome {
    run("family", || {
        let (base, bytes) = load_fan(base_source)?;
        let members = generate_family(&base, count)?;
        let mut report = ReportDocument::new("family", &[&bytes]);
        let mut text = format!("{:>6} {:>6} {:>10} {:>7} {:>9}  f-vector\n", "member", "rays", "max_cones", "smooth", "complete");
        let mut rows = Vec::new();
        let mut all_ok = true;
        for (i, fan) in members.iter().enumerate() {
            let smooth = fan.smoothness_report().smooth;
            let complete = fan.is_complete()?;
            all_ok &= smooth && complete;
            let fv = underlying_complex(fan).f_vector();
            let _ = writeln!(text, "{:>6} {:>6} {:>10} {:>7} {:>9}  {fv}", i + 1, fan.rays().len(), fan.cones().len(), smooth, complete);
            rows.push(json!({ "member": i + 1, "rays": fan.rays().len(), "max_cones": fan.cones().len(), "smooth": smooth, "complete": complete, "f_vector": fv }));
            if let Some(dir) = out_dir {
                let doc = FanDocument::from_fan(fan, Some(Metadata::named(&format!("family-{:02}", i + 1), base_source)));
                write(&dir.join(format!("family_{:02}.json", i + 1)), &doc.to_canonical_string())?;
            }
        }
        report.push("members", all_ok, json!(rows));
        Ok((report, if all_ok { EXIT_OK } else { EXIT_FAILED }, text))
    })
}

/// Queries for `complex`.
pub enum ComplexQuery<'a> {
    Star(&'a str),
    Link(&'a str),
    FVector,
    Obstruction,
    Pseudomanifold,
}

fn labels_of(s: &str) -> Vec<&str> {
    s.split(',').map(str::trim).filter(|x| !x.is_empty()).collect()
}

/// `complex`: star, link, f-vector, pseudomanifold check or the obstruction
/// facts, on a complex file or the underlying complex of a fan.
pub fn cmd_complex(source: &str, query: ComplexQuery<'_>) -> Outcome {
    run("complex", || {
        let (loaded, bytes) = load_complex(source)?;
        let c = loaded.complex();
        let mut report = ReportDocument::new("complex", &[&bytes]);
        let mut text = String::new();
        let mut code = EXIT_OK;
        match query {
            ComplexQuery::Star(face) | ComplexQuery::Link(face) => {
                let is_star = matches!(query, ComplexQuery::Star(_));
                let labels = labels_of(face);
                let sub = if is_star { c.star_of(&labels)? } else { c.link_of(&labels)? };
                let facets: Vec<String> = sub.facets().iter().map(|f| sub.face_word(f)).collect();
                let name = if is_star { "star" } else { "link" };
                let cycle = sub.as_cycle();
                let _ = writeln!(text, "{name} of {}: {} facets: {}", labels.concat(), facets.len(), facets.join(", "));
                if let Some(w) = &cycle {
                    let _ = writeln!(text, "  cycle {}", w.join("-"));
                }
                report.push(name, true, json!({ "face": labels, "facets": facets, "cycle": cycle }));
            }
            ComplexQuery::FVector => {
                let fv = c.f_vector();
                let _ = writeln!(text, "f-vector {fv}, Euler characteristic {}", fv.euler_characteristic());
                report.push("f_vector", true, json!({ "f_vector": fv, "euler_characteristic": fv.euler_characteristic() }));
            }
            ComplexQuery::Pseudomanifold => {
                let r = c.pseudomanifold_check();
                let _ = writeln!(
                    text,
                    "pseudomanifold check: {} ({} bad ridges, connected {}, Euler {} expected {})",
                    if r.passed { "pass" } else { "FAIL" },
                    r.ridge_defects.len(),
                    r.connected,
                    r.euler_characteristic,
                    r.expected_euler
                );
                if !r.passed {
                    code = EXIT_FAILED;
                }
                report.push("pseudomanifold", r.passed, serde_json::to_value(&r).expect("serializable"));
            }
            ComplexQuery::Obstruction => {
                let r = verify_barnette_obstruction(&c)?;
                for f in &r.facts {
                    let _ = writeln!(text, "[{}] {}: {}", if f.passed { "pass" } else { "FAIL" }, f.name, f.witness);
                }
                for d in &r.star_discrepancies {
                    let _ = writeln!(text, "note: {d}");
                }
                if !r.verdict {
                    code = EXIT_FAILED;
                }
                report.push("obstruction", r.verdict, serde_json::to_value(&r).expect("serializable"));
            }
        }
        Ok((report, code, text))
    })
}

/// `certify`: checks a claimed convex realization. `@rays` as the
/// realization uses the ray vectors of the fan given as the complex.
pub fn cmd_certify(complex_source: &str, realization_source: &str) -> Outcome {
    run("certify", || {
        let (loaded, cbytes) = load_complex(complex_source)?;
        let c = loaded.complex();
        let (realization, rbytes) = if realization_source == RAYS_REALIZATION {
            let LoadedComplex::Fan(fan) = &loaded else {
                return Err(CommandError::Usage("@rays needs a fan as the complex argument".into()));
            };
            let r = Realization::from_int_points(fan.rays().iter().map(|r| (r.label.as_str(), &r.vector)))?;
            let bytes = RealizationDocument::from_realization(&r).to_canonical_string().into_bytes();
            (r, bytes)
        } else {
            let bytes = read(Path::new(realization_source))?;
            let doc: RealizationDocument = serde_json::from_slice(&bytes).map_err(FormatError::from)?;
            (doc.to_realization()?, bytes)
        };
        let r = certify_realization(&c, &realization)?;
        let mut report = ReportDocument::new("certify", &[&cbytes, &rbytes]);
        let mut text = format!("{} ({} facets checked)\n", r.verdict, r.facets_checked);
        if let Some(v) = r.first_violation() {
            let _ = writeln!(
                text,
                "  first violated facet {}: above [{}] below [{}] on [{}]",
                v.face,
                v.above.join(","),
                v.below.join(","),
                v.on.join(",")
            );
        }
        if let Some(extra) = r.extra_supported.first() {
            let _ = writeln!(text, "  {} non-facet vertex sets are supported, first {extra}", r.extra_supported.len());
        }
        report.push("certificate", r.passed, serde_json::to_value(&r).expect("serializable"));
        Ok((report, if r.passed { EXIT_OK } else { EXIT_FAILED }, text))
    })
}
