use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use cosserat::constitutive::{
    check_conditions, couple_stress_dislocation, dislocation_couple_stress, energy_split_parts, stress_dislocation,
    ConditionReport,
};
use cosserat::params::{
    convert, parse_material, technical_constants, to_dislocation, DislocationParams, Material, MaterialDocument,
    Notation, Params, TaggedParams, UnitSystem, DEFAULT_L_C_MM,
};
use cosserat::poly::{matrix_curl, random_skew_field, unit_cube_points, vector_grad, verify_nye, PolyVectorField};
use cosserat::tables::{reproduce, ReproductionReport};
use cosserat::waves::{dispersion_sweep, log_grid, DispersionResult, WaveMedium};
use cosserat::{Mat3, SkewField};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::cli::{Format, Input, NyeField};
use crate::error::{CliError, Result};
use crate::output::{self, full, sig6};

/// Discrepancy bound for a passing Nye check.
pub const NYE_TOLERANCE: f64 = 1e-12;

pub struct Context {
    pub format: Option<Format>,
    pub units: Option<UnitSystem>,
}

struct Loaded {
    material: Material,
    /// Gauge in the record's length unit.
    l_c: f64,
}

fn load(input: &Input) -> Result<Loaded> {
    let text = match (&input.path, &input.json) {
        (_, Some(j)) => j.clone(),
        (Some(p), None) if p.as_os_str() == "-" => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            s
        }
        (Some(p), None) => std::fs::read_to_string(p)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", p.display())))?,
        (None, None) => return Err(CliError::Usage("no material given".into())),
    };
    let mut material = parse_material(&text)?;
    let default = match material.tagged.units {
        UnitSystem::MpaMm => DEFAULT_L_C_MM,
        UnitSystem::Si => DEFAULT_L_C_MM * 1e-3,
    };
    let l_c = input.l_c.or(material.l_c).unwrap_or(default);
    if !(l_c > 0.0 && l_c.is_finite()) {
        return Err(CliError::Model(cosserat::Error::InvalidInput(format!("L_c = {l_c} must be finite and positive"))));
    }
    if let (Params::Dislocation(d), Some(l)) = (&mut material.tagged.params, input.l_c) {
        *d = d.regauge(l);
    }
    Ok(Loaded { material, l_c })
}

/// The record in dislocation form, in the requested output units.
fn hub(loaded: &Loaded, units: Option<UnitSystem>) -> Result<(DislocationParams, UnitSystem)> {
    let tagged = &loaded.material.tagged;
    let d = to_dislocation(&tagged.params, loaded.l_c)?;
    let target = units.unwrap_or(tagged.units);
    let Params::Dislocation(d) = TaggedParams::new(Params::Dislocation(d), tagged.units).to_units(target).params else {
        unreachable!("unit conversion keeps the notation")
    };
    Ok((d, target))
}

fn emit_value(out: &mut impl Write, format: Format, v: &Value) -> Result<()> {
    match format {
        Format::Json => output::json(out, v),
        Format::Csv => output::key_value_csv(out, v),
        Format::Table => output::key_value_table(out, v),
    }
}

fn parse_target(s: &str) -> Result<Notation> {
    s.parse().map_err(|_| {
        let known: Vec<_> = Notation::ALL.iter().map(|n| n.name()).collect();
        CliError::Usage(format!("unknown notation {s:?} (expected one of {})", known.join(", ")))
    })
}

fn derived(d: &DislocationParams) -> Value {
    let [p1, p2, p3] = d.gauge_products();
    let mut v = json!({
        "L_c": d.l_c,
        "gauge_products": {"mu_e_Lc2_alpha1": p1, "mu_e_Lc2_alpha2": p2, "mu_e_Lc2_alpha3": p3},
    });
    match technical_constants(d) {
        Ok(t) => v["technical_constants"] = serde_json::to_value(t).expect("serializable"),
        Err(e) => v["technical_constants_error"] = Value::String(e.to_string()),
    }
    v
}

pub fn run_convert(ctx: &Context, out: &mut impl Write, input: &Input, to: &str) -> Result<i32> {
    let target = parse_target(to)?;
    let loaded = load(input)?;
    let tagged = &loaded.material.tagged;
    let converted = convert(tagged, target, Some(loaded.l_c))?;
    let converted = ctx.units.map_or(converted, |u| converted.to_units(u));
    let extra = match tagged.notation() {
        Notation::RelaxedMicromorphic => None,
        _ => Some(derived(&hub(&loaded, Some(converted.units))?.0)),
    };
    let doc = MaterialDocument::from_tagged(&converted, extra);
    emit_value(out, ctx.format.unwrap_or(Format::Json), &serde_json::to_value(doc).expect("serializable"))?;
    Ok(0)
}

fn check_table(out: &mut impl Write, r: &ConditionReport) -> Result<()> {
    let verdicts = [
        ("positive_definite", r.positive_definite),
        ("well_posed", r.well_posed),
        ("real_plane_waves", r.real_plane_waves),
        ("strongly_elliptic", r.strongly_elliptic),
        ("conformal_curvature", r.conformal_curvature),
    ];
    let rows: Vec<Vec<String>> = verdicts.iter().map(|(n, v)| vec![n.to_string(), v.to_string()]).collect();
    output::table(out, &["condition", "verdict"], &rows)?;
    writeln!(out)?;
    let rows: Vec<Vec<String>> = r
        .inequalities
        .iter()
        .map(|i| {
            let set = serde_json::to_value(i.set).expect("serializable");
            vec![set.as_str().unwrap_or_default().to_string(), i.name.clone(), sig6(i.margin), i.satisfied.to_string()]
        })
        .collect();
    output::table(out, &["set", "inequality", "margin", "satisfied"], &rows)
}

pub fn run_check(ctx: &Context, out: &mut impl Write, input: &Input) -> Result<i32> {
    let loaded = load(input)?;
    let (d, _) = hub(&loaded, ctx.units)?;
    let report = check_conditions(&d);
    match ctx.format.unwrap_or(Format::Json) {
        Format::Table => check_table(out, &report)?,
        f => emit_value(out, f, &serde_json::to_value(&report).expect("serializable"))?,
    }
    Ok(if report.well_posed { 0 } else { 1 })
}

fn parse_matrix(flag: &str, text: &str) -> Result<Mat3> {
    let rows: [[f64; 3]; 3] =
        serde_json::from_str(text).map_err(|e| CliError::Usage(format!("--{flag}: expected a 3x3 JSON array: {e}")))?;
    Ok(cosserat::tensor::Matrix3(rows))
}

pub fn run_energy(ctx: &Context, out: &mut impl Write, input: &Input, strain: &str, curvature: &str) -> Result<i32> {
    let e = parse_matrix("strain", strain)?;
    let k = parse_matrix("curvature", curvature)?;
    let loaded = load(input)?;
    let (d, units) = hub(&loaded, ctx.units)?;
    let m = d.moduli()?;
    let alpha = cosserat::poly::nye_forward(&k);
    let (w_elastic, w_curvature) = energy_split_parts(&e, &k, &m);
    let v = json!({
        "units": units,
        "L_c": d.l_c,
        "energy": {"total": w_elastic + w_curvature, "elastic": w_elastic, "curvature": w_curvature},
        "stress": stress_dislocation(&e, &m),
        "couple_stress": couple_stress_dislocation(&k, &m),
        "dislocation_density": alpha,
        "dislocation_couple_stress": dislocation_couple_stress(&alpha, &m),
    });
    emit_value(out, ctx.format.unwrap_or(Format::Json), &v)?;
    Ok(0)
}

fn dispersion_csv(w: impl Write, r: &DispersionResult) -> Result<()> {
    let mut w = csv::Writer::from_writer(w);
    w.write_record(["k", "branch_label", "omega", "omega_sq", "phase_velocity", "group_velocity", "real_flag"])?;
    for row in r.rows() {
        w.write_record([
            full(row.k),
            row.branch.label().to_string(),
            full(row.omega),
            full(row.omega_sq),
            full(row.phase_velocity),
            full(row.group_velocity),
            row.real.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

fn dispersion_table(out: &mut impl Write, r: &DispersionResult) -> Result<()> {
    let rows: Vec<Vec<String>> = r
        .rows()
        .iter()
        .map(|row| {
            vec![
                sig6(row.k),
                row.branch.label().to_string(),
                sig6(row.omega),
                sig6(row.omega_sq),
                sig6(row.phase_velocity),
                sig6(row.group_velocity),
                row.real.to_string(),
            ]
        })
        .collect();
    output::table(out, &["k", "branch_label", "omega", "omega_sq", "phase_velocity", "group_velocity", "real_flag"], &rows)
}

fn sidecar(w: &WaveMedium, r: &DispersionResult) -> Value {
    json!({
        "units": UnitSystem::Si,
        "L_c": w.moduli().l_c,
        "rho": w.rho(),
        "rot_inertia": w.rot_inertia(),
        "k_min": r.k_grid.first(),
        "k_max": r.k_grid.last(),
        "points": r.k_grid.len(),
        "branches": r.branches.iter().map(|b| b.branch.label()).collect::<Vec<_>>(),
        "cutoff_frequency": r.cutoff_frequency,
        "asymptotic": r.asymptotic,
    })
}

fn write_json_file(path: &Path, v: &Value) -> Result<()> {
    let mut f = std::fs::File::create(path)?;
    output::json(&mut f, v)
}

pub struct DispersionArgs<'a> {
    pub input: &'a Input,
    pub k_min: Option<f64>,
    pub k_max: Option<f64>,
    pub points: usize,
    pub output: Option<&'a PathBuf>,
    pub sidecar: Option<&'a PathBuf>,
}

pub fn run_dispersion(ctx: &Context, out: &mut impl Write, a: DispersionArgs) -> Result<i32> {
    let loaded = load(a.input)?;
    let medium = WaveMedium::from_tagged(&loaded.material.tagged, loaded.l_c)?;
    let l_c = medium.moduli().l_c;
    let grid = log_grid(a.k_min.unwrap_or(1e-2 / l_c), a.k_max.unwrap_or(1e2 / l_c), a.points)?;
    let result = dispersion_sweep(&medium, &grid)?;
    let side = sidecar(&medium, &result);
    let side_path = a.sidecar.cloned().or_else(|| a.output.map(|p| p.with_extension("json")));
    match a.output {
        Some(path) => dispersion_csv(std::fs::File::create(path)?, &result)?,
        None => match ctx.format.unwrap_or(Format::Csv) {
            Format::Csv => dispersion_csv(&mut *out, &result)?,
            Format::Table => dispersion_table(out, &result)?,
            Format::Json => {
                let mut v = serde_json::to_value(&result).expect("serializable");
                v["sidecar"] = side.clone();
                output::json(out, &v)?
            }
        },
    }
    if let Some(p) = side_path {
        write_json_file(&p, &side)?;
    }
    Ok(0)
}

pub fn run_nye_verify(ctx: &Context, out: &mut impl Write, degree: u32, seed: u64, points: usize, field: NyeField) -> Result<i32> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = match field {
        NyeField::Random => random_skew_field(&mut rng, degree).map_err(|e| CliError::Usage(format!("--degree: {e}")))?,
        NyeField::AntiX => SkewField::from_axial(PolyVectorField::position()),
    };
    if points == 0 {
        return Err(CliError::Usage("--points must be positive".into()));
    }
    let sample = unit_cube_points(&mut rng, points);
    let report = verify_nye(&a, &sample);
    let max = report.max_discrepancy();
    let pass = max <= NYE_TOLERANCE;
    let p = &sample[0];
    let minus_curl = Mat3::zero() - matrix_curl(&a.materialize()).eval(p);
    let g = vector_grad(&a.axial).eval(p);
    let rhs = g.transpose() - Mat3::identity().scale(g.trace());
    let v = json!({
        "field": match field { NyeField::Random => "random", NyeField::AntiX => "anti-x" },
        "degree": a.axial.degree(),
        "seed": seed,
        "points": report.points,
        "discrepancy": {
            "formula": report.formula,
            "dev_sym": report.dev_sym,
            "skew": report.skew,
            "sym": report.sym,
            "trace": report.trace,
            "max": max,
        },
        "first_point": {"x": p, "minus_curl_a": minus_curl, "nye_rhs": rhs},
        "tolerance": NYE_TOLERANCE,
        "status": if pass { "PASS" } else { "FAIL" },
    });
    emit_value(out, ctx.format.unwrap_or(Format::Json), &v)?;
    Ok(if pass { 0 } else { 1 })
}

fn reproduce_rows(r: &ReproductionReport, number: fn(f64) -> String) -> Vec<Vec<String>> {
    r.cells
        .iter()
        .map(|c| {
            let ext = |x: cosserat::params::Extended| x.finite().map_or("inf".to_string(), number);
            vec![
                c.material.to_string(),
                c.column.to_string(),
                ext(c.reference),
                ext(c.computed),
                number(c.deviation),
                c.status.to_string(),
            ]
        })
        .collect()
}

const REPRODUCE_HEADER: [&str; 6] = ["material", "column", "reference", "computed", "deviation", "status"];

pub fn run_reproduce(ctx: &Context, out: &mut impl Write) -> Result<i32> {
    let r = reproduce()?;
    match ctx.format.unwrap_or(Format::Table) {
        Format::Json => output::json(out, &serde_json::to_value(&r).expect("serializable"))?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(REPRODUCE_HEADER)?;
            for row in reproduce_rows(&r, full) {
                w.write_record(row)?;
            }
            w.flush()?;
        }
        Format::Table => {
            output::table(out, &REPRODUCE_HEADER, &reproduce_rows(&r, sig6))?;
            writeln!(out, "dataset v{}: {}", r.dataset_version, if r.pass { "PASS" } else { "FAIL" })?;
        }
    }
    Ok(if r.pass { 0 } else { 1 })
}
