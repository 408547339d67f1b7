//! lpk: letterplace ideal toolkit.
//!
//! Subcommands build letterplace / co-letterplace ideals and the derived
//! families, compute Alexander duals, Betti tables and Hilbert numerators,
//! run the named verification checks, and drive the full acceptance suite.
//! Exit codes: 0 success / all checks pass, 1 a check failed, 2 bad input,
//! 3 an internal contradiction with a verified identity (a bug).

use std::collections::HashMap;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};

use lpk_core::export::{export, Dialect};
use lpk_core::families::{family, sqfree_power_dual, triangular_ladder, FamilySpec};
use lpk_core::hom::{downset, hom_poset, HomIdeal, OrderMode};
use lpk_core::homology::{betti_table, hilbert_numerator, ring_properties, BettiOptions};
use lpk_core::letterplace::{
    coletterplace, letterplace, letterplace_n, linear_quotients_certificate, transpose_pair_ideal,
};
use lpk_core::monomial::{alexander_dual, alexander_dual_checked, DualMethod, MonomialIdeal};
use lpk_core::poset::{parse_poset_expr, Poset};
use lpk_core::quotient::{
    builders, classify_fibers, is_regular_sequence, kernel_basis_labels, quotient_ideal,
    separations, FiberedMap, DEFAULT_DIVISOR_BUDGET,
};
use lpk_core::Error;

#[derive(Parser)]
#[command(name = "lpk", version, about = "letterplace ideal toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct letterplace-type ideals.
    Ideal(IdealArgs),
    /// Generate a derived ideal family.
    Family(FamilyArgs),
    /// Alexander dual of a squarefree ideal.
    Dual(DualArgs),
    /// Graded Betti table of S/I.
    Betti(BettiArgs),
    /// Hilbert-series numerator of S/I.
    Hilbert(HilbertArgs),
    /// Run a named verification check (exit 1 on FAIL).
    Check(CheckArgs),
    /// Emit an ideal as a computer-algebra-system script.
    Export(ExportArgs),
    /// Run the acceptance catalog.
    Suite(SuiteArgs),
}

#[derive(Args)]
struct IdealArgs {
    /// letterplace | coletterplace | sub
    kind: String,
    /// Poset expression, e.g. chain:3, prod(chain:2,chain:2), file:p.json
    #[arg(long)]
    poset: String,
    /// Chain length n.
    #[arg(long)]
    n: usize,
    /// For `sub`: generators of the poset ideal, one value tuple per map,
    /// e.g. "1,2;2,2" (values along the element order of the poset).
    #[arg(long)]
    downset: Option<String>,
    /// Weak order mode for `sub`: the label of a maximal poset element.
    #[arg(long)]
    weak: Option<String>,
    /// Write to a file instead of stdout.
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct FamilyArgs {
    /// multichain | sqfree_power_dual | det_initial | sym2_initial |
    /// ladder_initial | ferrers | strongly_stable | murai_stable |
    /// cointerval | uniform_face | colored_face
    name: String,
    /// Repeated key=value parameters; see the README for each family.
    #[arg(long = "param")]
    params: Vec<String>,
    /// Write a JSON sidecar recording the source ideal and the map.
    #[arg(long)]
    sidecar: Option<String>,
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct DualArgs {
    /// Path to an ideal in text format ("-" for stdin).
    #[arg(long)]
    ideal: String,
    /// transversal | facet | primes | all (all = run and compare the three)
    #[arg(long, default_value = "all")]
    method: String,
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct BettiArgs {
    #[arg(long)]
    ideal: String,
    /// Field characteristic (0 = rationals); overrides LPK_CHAR.
    #[arg(long)]
    char: Option<u64>,
    /// Print the table as JSON {"i,j": value}.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct HilbertArgs {
    #[arg(long)]
    ideal: String,
}

#[derive(Args)]
struct CheckArgs {
    /// regular-seq | fibers | duality | linear-res | cm | unseparable |
    /// colon-cert
    name: String,
    #[arg(long)]
    poset: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    /// Fibered map spec: mult:s=..,m=.. | shift:e=..;f=.. | proj:factor=..
    #[arg(long)]
    map: Option<String>,
    /// JSON fibered map {"pairs": [[src,tgt],...]}, requires --target.
    #[arg(long)]
    map_json: Option<String>,
    /// Target poset expression for --map-json.
    #[arg(long)]
    target: Option<String>,
    #[arg(long)]
    downset: Option<String>,
    #[arg(long)]
    weak: Option<String>,
    #[arg(long)]
    ideal: Option<String>,
    /// Search budget for `unseparable`.
    #[arg(long, default_value_t = 1 << 20)]
    budget: usize,
}

#[derive(Args)]
struct ExportArgs {
    #[arg(long)]
    ideal: String,
    /// m2 | singular
    #[arg(long)]
    dialect: String,
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct SuiteArgs {
    /// Seed for the randomized checks.
    #[arg(long, default_value_t = lpk_core::acceptance::DEFAULT_SEED)]
    seed: u64,
    /// Write the full JSON report here.
    #[arg(long)]
    json: Option<String>,
    /// Run only these criteria, e.g. --criteria 1,2,9 (default: all).
    #[arg(long)]
    criteria: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Bug(_) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Ideal(a) => cmd_ideal(a),
        Command::Family(a) => cmd_family(a),
        Command::Dual(a) => cmd_dual(a),
        Command::Betti(a) => cmd_betti(a),
        Command::Hilbert(a) => cmd_hilbert(a),
        Command::Check(a) => cmd_check(a),
        Command::Export(a) => cmd_export(a),
        Command::Suite(a) => cmd_suite(a),
    }
}

fn emit(text: &str, out: &Option<String>) -> Result<(), Error> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn read_ideal(path: &str) -> Result<MonomialIdeal, Error> {
    let text = if path == "-" {
        use std::io::Read;
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        buf
    } else {
        std::fs::read_to_string(path)?
    };
    MonomialIdeal::from_text(&text)
}

/// Parse "1,2;2,2" into downset generators over Hom(p, [n]).
fn parse_downset(
    spec: &str,
    p: &Poset,
    n: usize,
    weak: &Option<String>,
) -> Result<HomIdeal, Error> {
    let chain = Poset::chain(n);
    let amb = Arc::new(hom_poset(p, &chain, false)?);
    let mut gens = Vec::new();
    for part in spec.split(';').filter(|s| !s.trim().is_empty()) {
        let values: Vec<usize> = part
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad value {t:?} in downset spec")))
            })
            .collect::<Result<_, _>>()?;
        if values.len() != p.len() {
            return Err(Error::Parse(format!(
                "tuple {part:?} does not assign all {} poset elements",
                p.len()
            )));
        }
        let assignment: Vec<usize> = values
            .iter()
            .map(|&v| {
                if v == 0 || v > n {
                    Err(Error::Parse(format!("value {v} outside 1..={n}")))
                } else {
                    Ok(v - 1)
                }
            })
            .collect::<Result<_, _>>()?;
        gens.push(
            amb.find(&assignment)
                .ok_or_else(|| Error::Parse(format!("tuple {part:?} is not an isotone map")))?,
        );
    }
    let mode = match weak {
        None => OrderMode::Full,
        Some(label) => OrderMode::Weak(p.idx(label)?),
    };
    downset(amb, &gens, mode)
}

fn cmd_ideal(a: IdealArgs) -> Result<ExitCode, Error> {
    let p = parse_poset_expr(&a.poset)?;
    let ideal = match a.kind.as_str() {
        "letterplace" => letterplace_n(a.n, &p)?.ideal,
        "coletterplace" => coletterplace(&p, a.n)?.ideal,
        "sub" => {
            let spec = a
                .downset
                .as_deref()
                .ok_or_else(|| Error::Parse("`sub` needs --downset generators".into()))?;
            let j = parse_downset(spec, &p, a.n, &a.weak)?;
            letterplace(&p, &Poset::chain(a.n), Some(&j))?.ideal
        }
        other => return Err(Error::Parse(format!("unknown ideal kind {other:?}"))),
    };
    emit(&ideal.to_text(), &a.out)?;
    Ok(ExitCode::SUCCESS)
}

fn param_map(params: &[String]) -> Result<HashMap<String, String>, Error> {
    let mut map = HashMap::new();
    for p in params {
        let (k, v) = p
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected key=value, got {p:?}")))?;
        map.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(map)
}

fn need<'m>(m: &'m HashMap<String, String>, k: &str) -> Result<&'m str, Error> {
    m.get(k)
        .map(String::as_str)
        .ok_or_else(|| Error::Parse(format!("missing --param {k}=...")))
}

fn num(m: &HashMap<String, String>, k: &str) -> Result<usize, Error> {
    need(m, k)?
        .parse()
        .map_err(|_| Error::Parse(format!("bad number for {k}")))
}

fn num_list(s: &str) -> Result<Vec<usize>, Error> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad number {t:?}")))
        })
        .collect()
}

fn tuple_list(s: &str) -> Result<Vec<Vec<usize>>, Error> {
    s.split(';')
        .filter(|p| !p.trim().is_empty())
        .map(num_list)
        .collect()
}

fn face_list(s: &str) -> Result<Vec<Vec<usize>>, Error> {
    s.split(';')
        .map(|p| {
            let p = p.trim();
            if p.is_empty() || p == "-" {
                Ok(Vec::new())
            } else {
                num_list(p)
            }
        })
        .collect()
}

fn build_family_spec(name: &str, m: &HashMap<String, String>) -> Result<FamilySpec, Error> {
    let spec = match name {
        "multichain" => FamilySpec::Multichain {
            p: parse_poset_expr(need(m, "p")?)?,
            m: num(m, "m")?,
            s: num(m, "s")?,
        },
        "sqfree_power_dual" => FamilySpec::SqfreePowerDual {
            p: parse_poset_expr(need(m, "p")?)?,
            m: num(m, "m")?,
            s: num(m, "s")?,
        },
        "det_initial" => FamilySpec::DetInitial {
            n: num(m, "n")?,
            m: num(m, "m")?,
            s: num(m, "s")?,
            e: num_list(need(m, "e")?)?,
            f: num_list(need(m, "f")?)?,
        },
        "sym2_initial" => FamilySpec::Sym2Initial { n: num(m, "n")? },
        "ladder_initial" => {
            if let Some(preset) = m.get("preset") {
                let n = preset
                    .strip_prefix("triangular:")
                    .and_then(|v| v.parse().ok())
                    .ok_or_else(|| Error::Parse("preset must be triangular:<n>".into()))?;
                FamilySpec::LadderInitial {
                    rows: n,
                    cols: n,
                    cells: triangular_ladder(n),
                }
            } else {
                let cells = tuple_list(need(m, "cells")?)?
                    .into_iter()
                    .map(|t| {
                        if t.len() == 2 {
                            Ok((t[0], t[1]))
                        } else {
                            Err(Error::Parse("cells must be pairs a,b;c,d;...".into()))
                        }
                    })
                    .collect::<Result<_, _>>()?;
                FamilySpec::LadderInitial {
                    rows: num(m, "rows")?,
                    cols: num(m, "cols")?,
                    cells,
                }
            }
        }
        "ferrers" => FamilySpec::Ferrers {
            lambda: num_list(need(m, "lambda")?)?,
        },
        "strongly_stable" => FamilySpec::StronglyStable {
            d: num(m, "d")?,
            n: num(m, "n")?,
            gens: m.get("gens").map(|g| tuple_list(g)).transpose()?,
        },
        "murai_stable" => FamilySpec::MuraiStable {
            d: num(m, "d")?,
            n: num(m, "n")?,
            gens: m.get("gens").map(|g| tuple_list(g)).transpose()?,
            shifts: num_list(need(m, "shifts")?)?,
        },
        "cointerval" => FamilySpec::Cointerval {
            d: num(m, "d")?,
            n: num(m, "n")?,
            gens: m.get("gens").map(|g| tuple_list(g)).transpose()?,
        },
        "uniform_face" => FamilySpec::UniformFace {
            n: num(m, "n")?,
            faces: face_list(need(m, "faces")?)?,
        },
        "colored_face" => {
            let faces = need(m, "faces")?
                .split(';')
                .map(|p| -> Result<Vec<(usize, usize)>, Error> {
                    let p = p.trim();
                    if p.is_empty() || p == "-" {
                        return Ok(Vec::new());
                    }
                    p.split(',')
                        .map(|v| {
                            let (c, pos) = v.trim().split_once('.').ok_or_else(|| {
                                Error::Parse(format!("vertex {v:?} must be color.pos"))
                            })?;
                            Ok((
                                c.parse()
                                    .map_err(|_| Error::Parse(format!("bad color in {v:?}")))?,
                                pos.parse()
                                    .map_err(|_| Error::Parse(format!("bad position in {v:?}")))?,
                            ))
                        })
                        .collect()
                })
                .collect::<Result<Vec<Vec<(usize, usize)>>, Error>>()?;
            FamilySpec::ColoredFace {
                sizes: num_list(need(m, "sizes")?)?,
                faces,
            }
        }
        other => return Err(Error::Parse(format!("unknown family {other:?}"))),
    };
    Ok(spec)
}

fn cmd_family(a: FamilyArgs) -> Result<ExitCode, Error> {
    let params = param_map(&a.params)?;
    if a.name == "sqfree_power_dual" {
        // direct op: the dual generator listing, no map
        let p = parse_poset_expr(need(&params, "p")?)?;
        let ideal = sqfree_power_dual(&p, num(&params, "m")?, num(&params, "s")?)?;
        emit(&ideal.to_text(), &a.out)?;
        if let Some(path) = &a.sidecar {
            let side = serde_json::json!({ "family": a.name, "map": null });
            std::fs::write(path, serde_json::to_string_pretty(&side).unwrap())?;
        }
        return Ok(ExitCode::SUCCESS);
    }
    let spec = build_family_spec(&a.name, &params)?;
    let out = family(&spec)?;
    emit(&out.ideal.to_text(), &a.out)?;
    if let Some(path) = &a.sidecar {
        let map_json = out.map.as_ref().map(|f| {
            let pairs: Vec<(String, String)> = (0..f.source.len())
                .map(|i| {
                    (
                        f.source.label(i).to_string(),
                        f.target.label(f.apply(i)).to_string(),
                    )
                })
                .collect();
            serde_json::json!({
                "pairs": pairs,
                "target": serde_json::from_str::<serde_json::Value>(&f.target.to_json()).unwrap(),
            })
        });
        let side = serde_json::json!({
            "family": out.name,
            "source_ideal": out.source.ideal.to_text(),
            "map": map_json,
        });
        std::fs::write(path, serde_json::to_string_pretty(&side).unwrap())?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_dual(a: DualArgs) -> Result<ExitCode, Error> {
    let ideal = read_ideal(&a.ideal)?;
    let dual = match a.method.as_str() {
        "transversal" => alexander_dual(&ideal, DualMethod::Transversal)?,
        "facet" => alexander_dual(&ideal, DualMethod::FacetComplement)?,
        "primes" => alexander_dual(&ideal, DualMethod::Primes)?,
        "all" => alexander_dual_checked(&ideal)?,
        other => return Err(Error::Parse(format!("unknown method {other:?}"))),
    };
    emit(&dual.to_text(), &a.out)?;
    Ok(ExitCode::SUCCESS)
}

fn betti_options(char_flag: Option<u64>) -> Result<BettiOptions, Error> {
    let characteristic = match char_flag {
        Some(c) => c,
        None => match std::env::var("LPK_CHAR") {
            Ok(v) => v
                .parse()
                .map_err(|_| Error::Parse(format!("bad LPK_CHAR value {v:?}")))?,
            Err(_) => 0,
        },
    };
    Ok(BettiOptions::with_characteristic(characteristic))
}

fn cmd_betti(a: BettiArgs) -> Result<ExitCode, Error> {
    let ideal = read_ideal(&a.ideal)?;
    let opts = betti_options(a.char)?;
    let table = betti_table(&ideal, &opts)?;
    if a.json {
        println!("{}", table.to_json());
    } else {
        print!("{}", table.to_diagonal_string());
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_hilbert(a: HilbertArgs) -> Result<ExitCode, Error> {
    let ideal = read_ideal(&a.ideal)?;
    let poly = hilbert_numerator(&ideal);
    println!("{}", render_poly(&poly));
    Ok(ExitCode::SUCCESS)
}

fn render_poly(poly: &[i128]) -> String {
    if poly.is_empty() {
        return "0".to_string();
    }
    let mut parts: Vec<String> = Vec::new();
    for (d, &c) in poly.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let mag = c.unsigned_abs();
        let term = match d {
            0 => format!("{mag}"),
            1 if mag == 1 => "t".to_string(),
            1 => format!("{mag}*t"),
            _ if mag == 1 => format!("t^{d}"),
            _ => format!("{mag}*t^{d}"),
        };
        if parts.is_empty() {
            parts.push(if c < 0 { format!("-{term}") } else { term });
        } else {
            parts.push(format!("{} {term}", if c < 0 { "-" } else { "+" }));
        }
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" ")
    }
}

/// Build the fibered map requested by --map / --map-json against --poset.
fn build_map(a: &CheckArgs) -> Result<FiberedMap, Error> {
    if let Some(json_path) = &a.map_json {
        let poset_expr = a
            .poset
            .as_deref()
            .ok_or_else(|| Error::Parse("--map-json needs --poset prod(A,B)".into()))?;
        let (left, right) = product_factors(poset_expr)?;
        let target = parse_poset_expr(
            a.target
                .as_deref()
                .ok_or_else(|| Error::Parse("--map-json needs --target".into()))?,
        )?;
        let text = std::fs::read_to_string(json_path)?;
        let v: serde_json::Value =
            serde_json::from_str(&text).map_err(|e| Error::Parse(format!("map json: {e}")))?;
        let pairs = v
            .get("pairs")
            .and_then(|p| p.as_array())
            .ok_or_else(|| Error::Parse("map json needs a \"pairs\" array".into()))?;
        let pairs: Vec<(String, String)> = pairs
            .iter()
            .map(|p| {
                let arr = p
                    .as_array()
                    .filter(|a| a.len() == 2)
                    .ok_or_else(|| Error::Parse("each pair must be [source,target]".into()))?;
                Ok((
                    arr[0]
                        .as_str()
                        .ok_or_else(|| Error::Parse("pair entries must be strings".into()))?
                        .to_string(),
                    arr[1]
                        .as_str()
                        .ok_or_else(|| Error::Parse("pair entries must be strings".into()))?
                        .to_string(),
                ))
            })
            .collect::<Result<_, Error>>()?;
        return FiberedMap::from_pairs(&left, &right, &target, &pairs);
    }
    let spec = a
        .map
        .as_deref()
        .ok_or_else(|| Error::Parse("this check needs --map or --map-json".into()))?;
    if let Some(rest) = spec.strip_prefix("mult:") {
        let kv = kv_pairs(rest, ',')?;
        let p = parse_poset_expr(
            a.poset
                .as_deref()
                .ok_or_else(|| Error::Parse("mult needs --poset".into()))?,
        )?;
        return builders::multichain(&p, get_kv_num(&kv, "m")?, get_kv_num(&kv, "s")?);
    }
    if let Some(rest) = spec.strip_prefix("shift:") {
        let (left, right) = product_factors(
            a.poset
                .as_deref()
                .ok_or_else(|| Error::Parse("shift needs --poset prod(chain:n,chain:m)".into()))?,
        )?;
        if !left.is_total_order() || !right.is_total_order() {
            return Err(Error::Parse("shift needs a product of chains".into()));
        }
        let mut e = None;
        let mut f = None;
        for part in rest.split(';') {
            if let Some(v) = part.strip_prefix("e=") {
                e = Some(num_list(v)?);
            } else if let Some(v) = part.strip_prefix("f=") {
                f = Some(num_list(v)?);
            } else {
                return Err(Error::Parse(format!("bad shift component {part:?}")));
            }
        }
        return builders::det_shift(
            left.len(),
            right.len(),
            &e.ok_or_else(|| Error::Parse("shift needs e=".into()))?,
            &f.ok_or_else(|| Error::Parse("shift needs f=".into()))?,
        );
    }
    if let Some(rest) = spec.strip_prefix("proj:") {
        let kv = kv_pairs(rest, ',')?;
        let (left, right) = product_factors(
            a.poset
                .as_deref()
                .ok_or_else(|| Error::Parse("proj needs --poset prod(A,B)".into()))?,
        )?;
        return builders::projection(&left, &right, get_kv_num(&kv, "factor")?);
    }
    Err(Error::Parse(format!("unknown map spec {spec:?}")))
}

fn kv_pairs(s: &str, sep: char) -> Result<HashMap<String, String>, Error> {
    let mut out = HashMap::new();
    for part in s.split(sep) {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected key=value in {part:?}")))?;
        out.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(out)
}

fn get_kv_num(kv: &HashMap<String, String>, key: &str) -> Result<usize, Error> {
    kv.get(key)
        .ok_or_else(|| Error::Parse(format!("missing {key}=")))?
        .parse()
        .map_err(|_| Error::Parse(format!("bad number for {key}")))
}

/// Split a top-level prod(A,B) poset expression into its factors.
fn product_factors(expr: &str) -> Result<(Poset, Poset), Error> {
    let inner = expr
        .trim()
        .strip_prefix("prod(")
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("{expr:?} is not prod(A,B)")))?;
    let mut depth = 0;
    for (i, c) in inner.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                return Ok((
                    parse_poset_expr(&inner[..i])?,
                    parse_poset_expr(&inner[i + 1..])?,
                ));
            }
            _ => {}
        }
    }
    Err(Error::Parse(format!("{expr:?} is not prod(A,B)")))
}

fn verdict(pass: bool, label: &str, witness: Option<String>) -> ExitCode {
    if pass {
        println!("PASS {label}");
        ExitCode::SUCCESS
    } else {
        println!(
            "FAIL {label}{}",
            witness.map(|w| format!(" witness: {w}")).unwrap_or_default()
        );
        ExitCode::from(1)
    }
}

fn cmd_check(a: CheckArgs) -> Result<ExitCode, Error> {
    match a.name.as_str() {
        "duality" => {
            let p = parse_poset_expr(
                a.poset
                    .as_deref()
                    .ok_or_else(|| Error::Parse("duality needs --poset".into()))?,
            )?;
            let n = a.n.ok_or_else(|| Error::Parse("duality needs --n".into()))?;
            let lnp = letterplace_n(n, &p)?;
            let dual = alexander_dual_checked(&lnp.ideal)?;
            let lpn = coletterplace(&p, n)?;
            let transposed = transpose_pair_ideal(&lpn.ideal, &p, &Poset::chain(n))?;
            Ok(verdict(
                dual == transposed,
                &format!("duality L({n},P) ~ L(P,{n})^tau"),
                None,
            ))
        }
        "fibers" => {
            let map = build_map(&a)?;
            let rep = classify_fibers(&map);
            for f in &rep.fibers {
                println!(
                    "fiber over {}: {{{}}} chain={} left_strict={} right_strict={} bistrict={}",
                    map.target.label(f.target),
                    f.elements
                        .iter()
                        .map(|&e| map.source.label(e).to_string())
                        .collect::<Vec<_>>()
                        .join(", "),
                    f.chain,
                    f.left_strict,
                    f.right_strict,
                    f.bistrict
                );
            }
            Ok(verdict(
                rep.all_left_strict,
                &format!("left strict chain fibers (bistrict: {})", rep.all_bistrict),
                None,
            ))
        }
        "regular-seq" => {
            let map = build_map(&a)?;
            let selection = match &a.downset {
                Some(spec) => {
                    if !map.right.is_total_order() {
                        return Err(Error::Parse(
                            "--downset needs a chain codomain on the source product".into(),
                        ));
                    }
                    Some(parse_downset(spec, &map.left, map.right.len(), &a.weak)?)
                }
                None => None,
            };
            let source = letterplace(&map.left, &map.right, selection.as_ref())?;
            let basis = kernel_basis_labels(&map);
            let report = is_regular_sequence(&source.ideal, &basis, DEFAULT_DIVISOR_BUDGET)?;
            let witness = match &report.outcome {
                lpk_core::quotient::RegSeqOutcome::Regular => None,
                lpk_core::quotient::RegSeqOutcome::Zerodivisor { step, diff, .. } => {
                    Some(format!("step {step}: {} - {}", diff.0, diff.1))
                }
            };
            let image = quotient_ideal(&source.ideal, &map)?;
            println!("kernel basis size: {}", basis.len());
            println!("image generators: {}", image.gens().len());
            Ok(verdict(
                report.is_regular(),
                "kernel basis is a regular sequence",
                witness,
            ))
        }
        "linear-res" | "colon-cert" => {
            let p = parse_poset_expr(
                a.poset
                    .as_deref()
                    .ok_or_else(|| Error::Parse("this check needs --poset".into()))?,
            )?;
            let n = a.n.ok_or_else(|| Error::Parse("this check needs --n".into()))?;
            let j = match &a.downset {
                Some(spec) => parse_downset(spec, &p, n, &a.weak)?,
                None => HomIdeal::all(Arc::new(hom_poset(&p, &Poset::chain(n), false)?)),
            };
            let cert = linear_quotients_certificate(&j)?;
            println!(
                "certified linear quotients for {} generators; pd = {} (max |Lambda| = {})",
                cert.steps.len(),
                cert.pd,
                cert.pd_lambda
            );
            if a.name == "linear-res" {
                let l = letterplace(&p, &Poset::chain(n), Some(&j))?;
                if l.ideal.is_zero() {
                    return Ok(verdict(true, "empty ideal (trivially)", None));
                }
                let props = ring_properties(&l.ideal, &betti_options(None)?)?;
                return Ok(verdict(
                    props.linear_resolution,
                    "L(J) has linear resolution",
                    props.linear_resolution_reason,
                ));
            }
            Ok(verdict(true, "colon certificate verified", None))
        }
        "cm" => {
            let p = parse_poset_expr(
                a.poset
                    .as_deref()
                    .ok_or_else(|| Error::Parse("cm needs --poset".into()))?,
            )?;
            let n = a.n.ok_or_else(|| Error::Parse("cm needs --n".into()))?;
            let lnp = letterplace_n(n, &p)?;
            let props = ring_properties(&lnp.ideal, &betti_options(None)?)?;
            println!(
                "pd(S/I) = {}, codim = {}, depth = {}, CM = {}, Gorenstein = {}, dual CM = {:?}",
                props.pd_module,
                props.codim,
                props.depth,
                props.cohen_macaulay,
                props.gorenstein,
                props.dual_cohen_macaulay
            );
            let is_antichain = p.covers().is_empty();
            let is_chain = p.is_total_order();
            let ok = props.cohen_macaulay
                && props.gorenstein == is_antichain
                && props.dual_cohen_macaulay == Some(is_chain);
            Ok(verdict(
                ok,
                "CM; Gorenstein iff antichain; bi-CM iff chain",
                None,
            ))
        }
        "unseparable" => {
            let ideal = read_ideal(
                a.ideal
                    .as_deref()
                    .ok_or_else(|| Error::Parse("unseparable needs --ideal".into()))?,
            )?;
            let rep = separations(&ideal, a.budget)?;
            match rep.witness {
                Some(w) => {
                    println!(
                        "separable: split {} into {:?}; lifted ideal:\n{}",
                        w.split_variable,
                        w.new_labels,
                        w.lifted_ideal.to_text()
                    );
                    Ok(verdict(false, "ideal is unseparable", None))
                }
                None => Ok(verdict(
                    rep.exhaustive,
                    &format!(
                        "no separation found ({} candidates, exhaustive: {})",
                        rep.candidates_tried, rep.exhaustive
                    ),
                    None,
                )),
            }
        }
        other => Err(Error::Parse(format!("unknown check {other:?}"))),
    }
}

fn cmd_export(a: ExportArgs) -> Result<ExitCode, Error> {
    let ideal = read_ideal(&a.ideal)?;
    let dialect: Dialect = a.dialect.parse()?;
    emit(&export(&ideal, dialect), &a.out)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_suite(a: SuiteArgs) -> Result<ExitCode, Error> {
    let report = match &a.criteria {
        None => lpk_core::acceptance::run_suite(a.seed, &BettiOptions::default())?,
        Some(list) => {
            let which = num_list(list)?;
            lpk_core::acceptance::run_selected(a.seed, &BettiOptions::default(), &which)?
        }
    };
    print!("{}", report.render());
    if let Some(path) = &a.json {
        std::fs::write(path, report.to_json())?;
    }
    Ok(if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
