//! Command-line frontend. [`run`] parses an argument vector and returns the
//! exit code together with the JSON document for standard output, so the
//! binary is a thin wrapper and every subcommand can be tested in process.
//!
//! Exit codes: 0 on success, 1 on domain errors, 2 on malformed input or
//! bad usage. All numbers in the output are decimal strings.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::cubic::{
    ec_add, flexes, normal_form, weierstrass_any_flex, j_invariant, AffineECPoint, WeierstrassData,
};
use crate::exactalg::{format_rational, int, parse_rational, FormJson, Matrix3};
use crate::fixtures::{self, Curve, CurveFile};
use crate::kontsevich::{CacheStatus, NkTable};
use crate::pencils::{nonflex_fiber_accounting, singular_members, unisecant_count_k3, Pencil};
use crate::singular::{
    genus_bound, genus_with_profile, intersect, lemma5_certificate, lemma5_datum,
    family_derivative_check, multiplicity_sequence, CurveFamily,
};
use crate::torsion::{contact_count, level_histogram};
use crate::{Error, HomogeneousForm, ProjectivePoint, Result};

pub const DEFAULT_CACHE: &str = "nk-cache.json";
pub const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Parser, Debug)]
#[command(name = "unisecant", version, about = "Exact enumerative geometry of plane cubics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// A curve given as a file path, or `fixture:NAME` for a built-in one.
#[derive(Args, Debug, Clone)]
struct CurveArg {
    #[arg(long, alias = "cubic")]
    curve: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Kontsevich numbers N_1..N_max
    Nk {
        #[arg(long)]
        max: u32,
        #[arg(long)]
        cache: Option<PathBuf>,
        #[arg(long)]
        no_cache: bool,
    },
    /// Contact points of level k by minimal level
    Torsion {
        #[arg(long)]
        k: u64,
    },
    /// Flexes of a smooth cubic
    Flexes(CurveArg),
    /// j-invariant of a cubic, or of a normal form
    Jinv {
        #[arg(long, alias = "cubic")]
        curve: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<String>,
    },
    /// Geometric genus and singularity profile
    Genus {
        #[command(flatten)]
        curve: CurveArg,
        #[arg(long)]
        assume_irreducible: bool,
    },
    /// Infinitely-near multiplicity tree at a point
    Resolve {
        #[command(flatten)]
        curve: CurveArg,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Intersection points of two curves
    Intersect {
        #[command(flatten)]
        curve: CurveArg,
        #[arg(long)]
        other: String,
    },
    /// Discriminant of the contact pencil at a point
    PencilDisc {
        #[command(flatten)]
        curve: CurveArg,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Number of rational unisecant curves of degree k
    Unisecant {
        #[command(flatten)]
        curve: CurveArg,
        #[arg(long, default_value_t = 3)]
        k: u32,
    },
    /// Genus bound and the finiteness certificate
    Bounds {
        #[arg(long, default_value_t = 3)]
        deg_c: i64,
        #[arg(long)]
        deg_a: Option<i64>,
        #[arg(long)]
        curve: Option<String>,
    },
    /// Derivative check for an equisingular family
    CheckFamily {
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 5)]
        samples: usize,
    },
    /// Randomized consistency checks
    Selftest {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        cases: usize,
    },
}

/// Exit code and the text for each output stream.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Malformed(_) => 2,
        _ => 1,
    }
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match dispatch(cli.command) {
        Ok(v) => Outcome { code: 0, stdout: render(&v), stderr: String::new() },
        Err(e) => Outcome {
            code: exit_code(&e),
            stdout: render(&json!({ "error": e.to_string() })),
            stderr: String::new(),
        },
    }
}

fn render(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("serializable");
    s.push('\n');
    s
}

fn load_curve(spec: &str) -> Result<Curve> {
    if let Some(name) = spec.strip_prefix("fixture:") {
        let c = fixtures::by_name(name).ok_or_else(|| Error::Malformed(format!("no fixture {name:?}")))?;
        // built-in claims go through the same verification as files
        return c.to_file().verify();
    }
    CurveFile::load(Path::new(spec))
}

fn parse_point(s: &str) -> Result<ProjectivePoint> {
    ProjectivePoint::parse(s)
}

fn strings<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(|x| x.to_string()).collect()
}

fn dispatch(cmd: Command) -> Result<Value> {
    match cmd {
        Command::Nk { max, cache, no_cache } => {
            let path = if no_cache { None } else { Some(cache.unwrap_or_else(|| DEFAULT_CACHE.into())) };
            let (table, status) = NkTable::load_or_compute(max, path.as_deref())?;
            let entries: Vec<[String; 2]> =
                table.entries().map(|(k, v)| [k.to_string(), v.to_string()]).collect();
            let mut out = json!({ "entries": entries });
            if let CacheStatus::Invalid(e) = status {
                out["cache_rebuilt"] = Value::String(e.to_string());
            }
            Ok(out)
        }
        Command::Torsion { k } => {
            let hist = level_histogram(k)?;
            let by_level: Map<String, Value> =
                hist.iter().map(|(l, n)| (l.to_string(), Value::String(n.to_string()))).collect();
            Ok(json!({ "k": k.to_string(), "total": contact_count(k)?.to_string(), "by_level": by_level }))
        }
        Command::Flexes(c) => {
            let curve = load_curve(&c.curve)?;
            let fl = flexes(&curve.form)?;
            Ok(json!({
                "count_with_multiplicity": fl.count_with_multiplicity.to_string(),
                "distinct": fl.distinct.to_string(),
                "eliminant_squarefree": fl.eliminant_squarefree(),
                "rational": fl.rational.iter().map(|p| p.to_strings()).collect::<Vec<_>>(),
            }))
        }
        Command::Jinv { curve, alpha, beta } => {
            let w = match (curve, alpha, beta) {
                (Some(c), None, None) => weierstrass_any_flex(&load_curve(&c)?.form)?,
                (None, Some(a), Some(b)) => WeierstrassData::normal(parse_rational(&a)?, parse_rational(&b)?),
                _ => return Err(Error::Malformed("give --curve, or both --alpha and --beta".into())),
            };
            Ok(json!({
                "j": format_rational(&j_invariant(&w)?),
                "alpha": format_rational(&w.alpha),
                "beta": format_rational(&w.beta),
            }))
        }
        Command::Genus { curve, assume_irreducible } => {
            let c = load_curve(&curve.curve)?;
            let (g, profile) = genus_with_profile(&c.form, assume_irreducible)?;
            Ok(json!({
                "genus": g.to_string(),
                "arithmetic_genus": crate::singular::arithmetic_genus(c.form.degree()).to_string(),
                "delta": profile.delta().to_string(),
                "singular_points": profile.to_json(),
            }))
        }
        Command::Resolve { curve, point } => {
            let c = load_curve(&curve.curve)?;
            let p = parse_point(&point)?;
            let tree = multiplicity_sequence(&c.form, &p)?;
            Ok(json!({
                "point": p.to_strings(),
                "multiplicities": strings(&tree.multiplicities()),
                "delta": tree.delta().to_string(),
                "tree": tree.to_json(),
            }))
        }
        Command::Intersect { curve, other } => {
            let a = load_curve(&curve.curve)?;
            let b = load_curve(&other)?;
            let x = intersect(&a.form, &b.form)?;
            Ok(json!({
                "points": x.points.iter().map(|(p, m)| json!({"point": p.to_strings(), "multiplicity": m.to_string()})).collect::<Vec<_>>(),
                "irrational_multiplicity": x.irrational_multiplicity.to_string(),
                "total": x.total().to_string(),
                "bezout": (a.form.degree() * b.form.degree()).to_string(),
            }))
        }
        Command::PencilDisc { curve, point } => {
            let c = load_curve(&curve.curve)?;
            let p = parse_point(&point)?;
            let pen = Pencil::contact(&c.form, &p)?;
            let mut out = singular_members(&pen)?.to_json();
            out["generator"] = serde_json::to_value(pen.g.to_json()).expect("serializable");
            if let Ok(acc) = nonflex_fiber_accounting(&c.form, &p) {
                let (s1, s2) = acc.singular_member.parameter.coords();
                out["singular_at_point"] = json!({
                    "s1": format_rational(&s1),
                    "s2": format_rational(&s2),
                    "multiplicity": acc.multiplicity_at_member().to_string(),
                    "kind": acc.kind_at_point.as_str(),
                });
            }
            Ok(out)
        }
        Command::Unisecant { curve, k } => {
            if k != 3 {
                return Err(Error::Domain(format!("unisecant counts are implemented for k = 3 only, got {k}")));
            }
            let c = load_curve(&curve.curve)?;
            let u = unisecant_count_k3(&c.form)?;
            Ok(json!({
                "j": format_rational(&u.j),
                "flex_pencil": u.flex_pencil.to_string(),
                "total": u.total.to_string(),
            }))
        }
        Command::Bounds { deg_c, deg_a, curve } => {
            let mut out = Map::new();
            out.insert("deg_c".into(), Value::String(deg_c.to_string()));
            if let Some(d) = deg_a {
                out.insert("deg_a".into(), Value::String(d.to_string()));
                out.insert("genus_bound".into(), Value::String(format_rational(&genus_bound(deg_c, d))));
            }
            if let Some(c) = curve {
                let a = load_curve(&c)?;
                let dc = u32::try_from(deg_c).map_err(|_| Error::Malformed("--deg-c must be nonnegative".into()))?;
                let (sq, mu, ac) = lemma5_datum(&a.form, dc)?;
                out.insert(
                    "certificate".into(),
                    json!({
                        "a_squared": sq.to_string(),
                        "sum_mu": mu.to_string(),
                        "a_dot_c": ac.to_string(),
                        "holds": lemma5_certificate(sq, mu, ac),
                    }),
                );
            }
            if out.len() == 1 {
                return Err(Error::Malformed("give --deg-a and/or --curve".into()));
            }
            Ok(Value::Object(out))
        }
        Command::CheckFamily { family, samples } => {
            let fam = load_family(&family)?;
            let check = family_derivative_check(&fam, samples)?;
            Ok(json!({
                "holds": check.holds(),
                "derivative": serde_json::to_value(check.derivative.to_json()).expect("serializable"),
                "points": check.points.iter().map(|(p, ok)| json!({"point": p.to_strings(), "holds": ok})).collect::<Vec<_>>(),
            }))
        }
        Command::Selftest { seed, cases } => selftest(seed, cases),
    }
}

/// Family file: `{"t0": "0", "coeffs": [form, form, ...]}`.
#[derive(Deserialize)]
struct FamilyFile {
    t0: String,
    coeffs: Vec<FormJson>,
}

fn load_family(spec: &str) -> Result<CurveFamily> {
    match spec {
        "fixture:moving-node" => return Ok(fixtures::moving_node_family()),
        "fixture:moving-cusp" => return Ok(fixtures::moving_cusp_family()),
        _ => {}
    }
    let text = std::fs::read_to_string(spec).map_err(|e| Error::Malformed(format!("{spec}: {e}")))?;
    let f: FamilyFile = serde_json::from_str(&text).map_err(|e| Error::Malformed(e.to_string()))?;
    let coeffs = f.coeffs.iter().map(HomogeneousForm::from_json).collect::<Result<Vec<_>>>()?;
    CurveFamily::new(coeffs, parse_rational(&f.t0)?)
}

fn random_form(rng: &mut ChaCha8Rng, degree: u32) -> HomogeneousForm {
    loop {
        let mut terms = Vec::new();
        for e in HomogeneousForm::monomials(degree) {
            if rng.gen_bool(0.6) {
                terms.push((e, int(rng.gen_range(-3..=3))));
            }
        }
        let f = HomogeneousForm::from_terms(degree, terms).expect("degree matches");
        if !f.is_zero() {
            return f;
        }
    }
}

fn random_matrix(rng: &mut ChaCha8Rng) -> Matrix3 {
    loop {
        let mut rows = [[0i64; 3]; 3];
        for r in rows.iter_mut() {
            for x in r.iter_mut() {
                *x = rng.gen_range(-3..=3);
            }
        }
        let m = Matrix3::from_ints(rows);
        if !m.det().is_zero() {
            return m;
        }
    }
}

/// Bezout on random pairs, j under random coordinate changes and the group
/// law on a fixed curve.
fn selftest(seed: u64, cases: usize) -> Result<Value> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let mut bezout = 0;
    for i in 0..cases {
        let (d1, d2) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
        let (f, g) = (random_form(&mut rng, d1), random_form(&mut rng, d2));
        match intersect(&f, &g) {
            Ok(x) => {
                bezout += 1;
                if x.total() != (d1 * d2) as usize {
                    failures.push(format!("bezout case {i}: total {} for degrees {d1},{d2}", x.total()));
                }
            }
            Err(Error::CommonComponent) => {}
            Err(e) => failures.push(format!("bezout case {i}: {e}")),
        }
    }
    for i in 0..cases {
        let (a, b) = (int(rng.gen_range(-5..=5)), int(rng.gen_range(-5..=5)));
        let w = WeierstrassData::normal(a.clone(), b.clone());
        if !w.is_smooth() {
            continue;
        }
        let j = j_invariant(&w)?;
        let moved = normal_form(&a, &b).substitute_linear(&random_matrix(&mut rng));
        match weierstrass_any_flex(&moved).and_then(|w2| j_invariant(&w2)) {
            Ok(j2) if j2 == j => {}
            Ok(j2) => failures.push(format!("j case {i}: {} vs {}", format_rational(&j2), format_rational(&j))),
            Err(e) => failures.push(format!("j case {i}: {e}")),
        }
    }
    let w = WeierstrassData::normal(int(-4), int(1));
    let pts = [AffineECPoint::from_ints(0, 1), AffineECPoint::from_ints(1, 1), AffineECPoint::from_ints(-1, 1)];
    for i in 0..cases {
        let pick = |rng: &mut ChaCha8Rng| pts[rng.gen_range(0..pts.len())].clone();
        let (p, q, r) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
        let lhs = ec_add(&w, &ec_add(&w, &p, &q)?, &r)?;
        let rhs = ec_add(&w, &p, &ec_add(&w, &q, &r)?)?;
        if lhs != rhs {
            failures.push(format!("associativity case {i}"));
        }
    }
    if !failures.is_empty() {
        return Err(Error::Internal(failures.join("; ")));
    }
    Ok(json!({
        "seed": seed.to_string(),
        "cases": cases.to_string(),
        "bezout_pairs": bezout.to_string(),
        "passed": true,
    }))
}
