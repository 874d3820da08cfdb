mod input;
mod output;

use std::collections::BTreeMap;
use std::process::ExitCode;

use anyhow::{anyhow, Result};
use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_traits::Zero;

use cobord::divdiff::{flag_class_exact, grassmann_class_exact, DivDiffError};
use cobord::exactalg::{BigRat, CobordismClass, OmegaIndex};
use cobord::genus::{
    cobordism_class, s_number_at, verify_constraints, GenericPoint, GenusError, GenusOptions,
};
use cobord::rootdata::{orbit_fixed_points, Builtin, SpaceSpec, StabilityMode};
use cobord::symmchern::{partitions_of, s_to_chern};

use input::{load_space, parse_builtin};
use output::{class_terms, omega_key, Checks, JsonInt, ResultDocument};

#[derive(Parser)]
#[command(name = "cobord", about = "Cobordism classes of homogeneous spaces from fixed-point data")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the cobordism class, s-numbers and Chern numbers
    Genus(GenusArgs),
    /// Check the vanishing constraints and integrality of the input data
    Verify(VerifyArgs),
    /// Compute the class by the closed-form route (flag and Grassmann builtins)
    Exact(ExactArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Builtin name (flag:N | grassmann:N:K | cp:N | m10:J1|J2|J3) or path to a space file
    input: String,
    /// Emit the machine-readable document instead of a table
    #[arg(long)]
    json: bool,
    /// Evaluation point x1,x2,... (integers or fractions); must be nonsingular
    #[arg(long)]
    point: Option<String>,
    /// Require exact weight-set stability instead of stability up to sign
    #[arg(long)]
    strict_stability: bool,
}

#[derive(Args)]
struct GenusArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Recompute at a second generic point and require agreement
    #[arg(long)]
    check_independence: bool,
    /// Query a single s-number for the given omega i1,i2,...
    #[arg(long)]
    omega: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Also evaluate this single s-number at the chosen point
    #[arg(long)]
    omega: Option<String>,
}

#[derive(Args)]
struct ExactArgs {
    /// Builtin name: flag:N | grassmann:N:K | cp:N
    input: String,
    /// Emit the machine-readable document instead of a table
    #[arg(long)]
    json: bool,
    /// Recompute through the localization route and compare
    #[arg(long)]
    cross_check: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // help/version requests are successes, everything else is usage
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let result = match cli.command {
        Command::Genus(args) => cmd_genus(&args),
        Command::Verify(args) => cmd_verify(&args),
        Command::Exact(args) => cmd_exact(&args),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn stability(common: &CommonArgs) -> StabilityMode {
    if common.strict_stability {
        StabilityMode::Strict
    } else {
        StabilityMode::Lines
    }
}

fn parse_point(raw: &str) -> Result<GenericPoint> {
    let coords = raw
        .split(',')
        .map(|p| p.trim().parse::<BigRat>().map_err(|e| anyhow!("bad coordinate {p:?}: {e}")))
        .collect::<Result<Vec<_>>>()?;
    if coords.is_empty() {
        return Err(anyhow!("empty point"));
    }
    Ok(GenericPoint::explicit(coords))
}

fn parse_omega(raw: &str) -> Result<OmegaIndex> {
    let exps = raw
        .split(',')
        .map(|p| p.trim().parse::<u32>().map_err(|e| anyhow!("bad omega entry {p:?}: {e}")))
        .collect::<Result<Vec<_>>>()?;
    Ok(OmegaIndex::new(exps))
}

/// Exit code for a computation-stage failure: user-input problems are 1,
/// violated mathematical constraints are 2.
fn genus_exit(e: &GenusError) -> u8 {
    match e {
        GenusError::SingularPoint | GenusError::BadOmega => 1,
        _ => 2,
    }
}

fn cmd_genus(args: &GenusArgs) -> Result<ExitCode> {
    let (name, spec) = load_space(&args.common.input, stability(&args.common))?;
    let point = args.common.point.as_deref().map(parse_point).transpose()?;

    if let Some(raw) = &args.omega {
        let omega = parse_omega(raw)?;
        return match s_number_at(&spec, &omega, point.as_ref()) {
            Ok(v) => {
                let n = spec.half_dimension();
                if args.common.json {
                    println!(
                        "{}",
                        serde_json::json!({ "omega": omega.padded(n), "s": JsonInt(v) })
                    );
                } else {
                    println!("s_({}) = {v}", omega_key(&omega, n));
                }
                Ok(ExitCode::SUCCESS)
            }
            Err(e) => {
                eprintln!("error: {e}");
                Ok(ExitCode::from(genus_exit(&e)))
            }
        };
    }

    let opts = GenusOptions { point, check_independence: args.check_independence };
    let report = match cobordism_class(&spec, &opts) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return Ok(ExitCode::from(genus_exit(&e)));
        }
    };
    let doc = build_document(&name, &spec, &report.cobordism_class, Checks {
        lower_vanishing: report.lower_coefficients_vanished,
        integrality: report.integrality_passed,
        point_independence: report.second_point_agreed,
        cross_check: None,
    })?;
    emit(&doc, args.common.json);
    if report.second_point_agreed == Some(false) {
        return Ok(ExitCode::from(2));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: &VerifyArgs) -> Result<ExitCode> {
    let (name, spec) = load_space(&args.common.input, stability(&args.common))?;
    let table = orbit_fixed_points(&spec).map_err(|e| anyhow!("cannot expand orbit: {e}"))?;
    let residuals = verify_constraints(&table);
    println!("space: {name}");
    let mut all_zero = true;
    for (l, poly) in &residuals {
        let ok = poly.is_zero();
        all_zero &= ok;
        if ok {
            println!("  degree {l}: residual 0");
        } else {
            println!("  degree {l}: residual {poly}");
        }
    }
    let point = args.common.point.as_deref().map(parse_point).transpose()?;
    let n = spec.half_dimension();
    let omega = match &args.omega {
        Some(raw) => parse_omega(raw)?,
        None => OmegaIndex::new(vec![n as u32]),
    };
    let mut integral = true;
    match s_number_at(&spec, &omega, point.as_ref()) {
        Ok(v) => println!("  s_({}) = {v}", omega_key(&omega, n)),
        Err(e @ (GenusError::SingularPoint | GenusError::BadOmega)) => {
            return Err(anyhow!("{e}"));
        }
        Err(e) => {
            integral = false;
            println!("  s_({}): {e}", omega_key(&omega, n));
        }
    }
    if all_zero && integral {
        println!("verdict: ok");
        Ok(ExitCode::SUCCESS)
    } else {
        println!("verdict: constraint violation");
        Ok(ExitCode::from(2))
    }
}

fn cmd_exact(args: &ExactArgs) -> Result<ExitCode> {
    let builtin = parse_builtin(&args.input)
        .ok_or_else(|| anyhow!("exact route needs a builtin name, got {:?}", args.input))??;
    let class = match &builtin {
        Builtin::Flag(n) => flag_class_exact(*n),
        Builtin::Grassmann(n, k) => {
            if *k == 0 || *k >= *n {
                return Err(anyhow!("grassmann:N:K needs 0 < K < N"));
            }
            grassmann_class_exact(*k, *n - *k)
        }
        Builtin::ProjectiveSpace(n) => grassmann_class_exact(1, *n),
        Builtin::M10(_) => return Err(anyhow!("no closed-form route for m10 structures")),
    };
    let class = class.map_err(|e| match e {
        DivDiffError::OutOfRange => anyhow!("builtin outside the supported size range"),
        other => anyhow!("exact route failed: {other}"),
    })?;

    let spec = input::load_space(&args.input, StabilityMode::Lines)?.1;
    let cross_check = if args.cross_check {
        let report = match cobordism_class(&spec, &GenusOptions::default()) {
            Ok(r) => r,
            Err(e) => {
                eprintln!("error: {e}");
                return Ok(ExitCode::from(genus_exit(&e)));
            }
        };
        Some(report.cobordism_class == class)
    } else {
        None
    };
    let doc = build_document(&args.input, &spec, &class, Checks {
        lower_vanishing: true,
        integrality: true,
        point_independence: None,
        cross_check,
    })?;
    emit(&doc, args.json);
    if cross_check == Some(false) {
        return Ok(ExitCode::from(2));
    }
    Ok(ExitCode::SUCCESS)
}

fn build_document(
    name: &str,
    spec: &SpaceSpec,
    class: &CobordismClass,
    checks: Checks,
) -> Result<ResultDocument> {
    let n = spec.half_dimension();
    let mut s_map: BTreeMap<OmegaIndex, BigInt> = partitions_of(n as u32)
        .iter()
        .map(|p| (p.to_omega(), BigInt::zero()))
        .collect();
    for (w, c) in class.terms() {
        s_map.insert(w.clone(), c.clone());
    }
    let chern = s_to_chern(&s_map, n as u32).map_err(|e| anyhow!("basis change failed: {e}"))?;
    let euler = s_map
        .get(&OmegaIndex::new(vec![n as u32]))
        .cloned()
        .unwrap_or_else(BigInt::zero);
    Ok(ResultDocument {
        name: name.to_string(),
        dimension: 2 * n,
        euler_characteristic: i64::try_from(&euler).unwrap_or(0),
        cobordism_class: class_terms(class, n),
        s_numbers: s_map.iter().map(|(w, v)| (omega_key(w, n), JsonInt(v.clone()))).collect(),
        chern_numbers: chern.iter().map(|(x, v)| (omega_key(x, n), JsonInt(v.clone()))).collect(),
        checks,
    })
}

fn emit(doc: &ResultDocument, json: bool) {
    if json {
        print!("{}", doc.to_json());
    } else {
        print!("{}", doc.render_table());
    }
}
