//! Command-line front end: parse JSON inputs, dispatch to the library,
//! print exact rationals, series, verdicts and witnesses.
//!
//! Exit codes: 0 success, 2 validation error, 64 usage error,
//! 66 input file not found.

mod output;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde::de::DeserializeOwned;


use grpdcard::json::{
    FunctorJson, GroupJson, GroupoidJson, PiFiniteJson, RelFinObjectJson, RelationalJson,
};
use grpdcard::series::{
    gset_egf, gset_groupoid_exponent, rep_component_series, tameness_bound_check, gl_order,
    RepComponentParams,
};
use grpdcard::functor::{functor_groupoid_cardinality, ternary_factorize, GroupoidFunctor};
use grpdcard::homotopy::homotopy_cardinality;
use grpdcard::relational::{lovasz_iso_test, count_homs, count_injective_homs, LovaszVerdict};
use grpdcard::relfin::{
    counting_distinguisher, decide_equivalence, default_probe_set, exhaustive_probe_set,
    faithful_hom_cardinality, hom_groupoid_cardinality, RelFinObject,
};
use num_bigint::BigInt;

use output::*;
use render::{float15, render_series};

const SCHEMA_HELP: &str = "\
JSON schemas:
  group      {\"order\": n, \"table\": [[..]]}  or
             {\"permutations\": {\"degree\": d, \"generators\": [[..]]}}
  groupoid   {\"objects\": [..], \"morphisms\": [{\"id\",\"src\",\"dst\"}],
              \"compose\": [[f,g,fg], ..]}   (fg = f∘g, g applied first) or
             {\"components\": [{\"aut_order_table\": [[..]], \"objects\": k}]}
  functor    {\"object_map\": [..], \"morphism_map\": [..]}
  relfin     {\"base\": <group>, \"components\": [{\"group\": <group>, \"map\": [..]}]}
  relational {\"signature\": [2], \"n\": 3, \"relations\": [[[0,1],[1,2],[2,0]]]}
  space      {\"components\": [[3],[1,2]]}
  series out {\"truncation\": N, \"coeffs\": [\"1\",\"1\",\"1/2\", ..]}";

#[derive(Parser)]
#[command(name = "grpdcard", version, about = "Exact groupoid cardinality toolkit")]
#[command(after_long_help = SCHEMA_HELP)]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Also print floating-point evaluations (15 significant digits).
    #[arg(long, global = true)]
    float: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Groupoid cardinality of a groupoid JSON file.
    Card { groupoid: PathBuf },
    /// Cardinality of the functor groupoid g^h by the class-wise formula.
    FunctorCard { h: PathBuf, g: PathBuf },
    /// Three-stage factorization of a functor between groupoids.
    Factorize { source: PathBuf, target: PathBuf, functor: PathBuf },
    /// Generating function of finite G-sets for a group JSON file.
    GsetEgf {
        group: PathBuf,
        /// Series truncation.
        #[arg(long = "N", default_value_t = 16)]
        n: usize,
    },
    /// Exact exponent of the G-set groupoid cardinality of a groupoid.
    GsetCard { groupoid: PathBuf },
    /// Order of GL_n over the field with q elements (q a prime power).
    GlOrder { n: usize, q: u64 },
    /// Series of reciprocal GL orders for one irreducible summand.
    RepSeries(RepSeriesArgs),
    /// Hom-groupoid cardinality between coproducts of homomorphisms.
    RelfinHom {
        s: PathBuf,
        f: PathBuf,
        /// Count only morphisms with injective group maps.
        #[arg(long)]
        faithful: bool,
    },
    /// Decide equivalence of two coproducts of homomorphisms.
    RelfinEquiv { f: PathBuf, f2: PathBuf },
    /// Search for a probe with different hom cardinalities into two objects.
    RelfinDistinguish {
        f: PathBuf,
        f2: PathBuf,
        /// Probe with every catalog group up to the maximal component order.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Number of homomorphisms between relational structures.
    Homcount {
        c: PathBuf,
        a: PathBuf,
        /// Count injective homomorphisms instead.
        #[arg(long)]
        injective: bool,
    },
    /// Homomorphism-counting isomorphism test for relational structures.
    LovaszTest {
        a: PathBuf,
        b: PathBuf,
        /// Probe universe-size bound.
        #[arg(long)]
        bound: usize,
    },
    /// Homotopy cardinality of a space given by homotopy group orders.
    HomotopyCard { space: PathBuf },
}

#[derive(Args)]
struct RepSeriesArgs {
    /// Dimension of the irreducible.
    #[arg(long)]
    dim: usize,
    /// Characteristic prime power of the base field.
    #[arg(long)]
    q: u64,
    /// Degree of the endomorphism field over the base field.
    #[arg(long, default_value_t = 1)]
    d: u32,
    /// Series truncation.
    #[arg(long = "N", default_value_t = 16)]
    n: usize,
    /// Also check the block-triangular bound termwise.
    #[arg(long)]
    check_bound: bool,
}

#[derive(Debug)]
enum CliError {
    FileNotFound(PathBuf),
    Io(PathBuf, std::io::Error),
    Invalid(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::FileNotFound(p) => write!(f, "file not found: {}", p.display()),
            CliError::Io(p, e) => write!(f, "cannot read {}: {e}", p.display()),
            CliError::Invalid(msg) => write!(f, "{msg}"),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::FileNotFound(_) => 66,
            _ => 2,
        }
    }
}

fn invalid(e: impl std::fmt::Display) -> CliError {
    CliError::Invalid(e.to_string())
}

fn load<T: DeserializeOwned>(path: &PathBuf) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        if e.kind() == std::io::ErrorKind::NotFound {
            CliError::FileNotFound(path.clone())
        } else {
            CliError::Io(path.clone(), e)
        }
    })?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::Invalid(format!("{}: invalid JSON: {e}", path.display())))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    return ExitCode::SUCCESS;
                }
                _ => 64,
            };
            eprint!("{e}");
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Card { groupoid } => {
            let g = load::<GroupoidJson>(groupoid)?.to_groupoid().map_err(invalid)?;
            let card = g.cardinality();
            emit_rational(cli, "cardinality", &card)
        }
        Command::FunctorCard { h, g } => {
            let h = load::<GroupoidJson>(h)?.to_groupoid().map_err(invalid)?;
            let g = load::<GroupoidJson>(g)?.to_groupoid().map_err(invalid)?;
            let card = functor_groupoid_cardinality(&h, &g);
            emit_rational(cli, "cardinality", &card)
        }
        Command::Factorize { source, target, functor } => {
            let src = Arc::new(load::<GroupoidJson>(source)?.to_groupoid().map_err(invalid)?);
            let tgt = Arc::new(load::<GroupoidJson>(target)?.to_groupoid().map_err(invalid)?);
            let fj = load::<FunctorJson>(functor)?;
            let f = GroupoidFunctor::new(src, tgt, fj.object_map, fj.morphism_map)
                .map_err(invalid)?;
            let t = ternary_factorize(&f);
            emit_factorization(cli, &t)
        }
        Command::GsetEgf { group, n } => {
            let g = load::<GroupJson>(group)?.to_group().map_err(invalid)?;
            let series = gset_egf(&g, *n).map_err(invalid)?;
            emit_series(cli, &series)
        }
        Command::GsetCard { groupoid } => {
            let g = load::<GroupoidJson>(groupoid)?.to_groupoid().map_err(invalid)?;
            let (exponent, value) = gset_groupoid_exponent(&g).map_err(invalid)?;
            if cli.json {
                to_json(&GsetCardOutput {
                    exponent: exponent.to_string(),
                    value: cli.float.then_some(value),
                })
            } else if cli.float {
                Ok(format!("exp({exponent}) = {}", float15(value)))
            } else {
                Ok(format!("exp({exponent})"))
            }
        }
        Command::GlOrder { n, q } => {
            let order = gl_order(*n, &BigInt::from(*q));
            if cli.json {
                to_json(&GlOrderOutput { order: order.to_string() })
            } else {
                Ok(order.to_string())
            }
        }
        Command::RepSeries(args) => {
            let params = validate_rep_params(args)?;
            let series = rep_component_series(&params, args.n);
            if args.check_bound {
                let check = tameness_bound_check(&params, args.n);
                if cli.json {
                    return to_json(&RepBoundOutput {
                        series: grpdcard::json::SeriesJson::from_series(&series),
                        partial_sum: check.partial_sum.to_string(),
                        bound: check.bound.to_string(),
                        holds: check.holds,
                    });
                }
                return Ok(format!(
                    "{}\npartial sum {} <= bound {}: {}",
                    render_series(&series),
                    check.partial_sum,
                    check.bound,
                    check.holds
                ));
            }
            emit_series(cli, &series)
        }
        Command::RelfinHom { s, f, faithful } => {
            let s = load::<RelFinObjectJson>(s)?.to_object().map_err(invalid)?;
            let f = load::<RelFinObjectJson>(f)?.to_object().map_err(invalid)?;
            let card = if *faithful {
                faithful_hom_cardinality(&s, &f).map_err(invalid)?
            } else {
                hom_groupoid_cardinality(&s, &f).map_err(invalid)?
            };
            emit_rational(cli, "cardinality", &card)
        }
        Command::RelfinEquiv { f, f2 } => {
            let f = load::<RelFinObjectJson>(f)?.to_object().map_err(invalid)?;
            let f2 = load::<RelFinObjectJson>(f2)?.to_object().map_err(invalid)?;
            let equivalent = decide_equivalence(&f, &f2).map_err(invalid)?;
            if cli.json {
                to_json(&EquivOutput { equivalent })
            } else {
                Ok(format!("equivalent: {equivalent}"))
            }
        }
        Command::RelfinDistinguish { f, f2, exhaustive } => {
            let f = load::<RelFinObjectJson>(f)?.to_object().map_err(invalid)?;
            let f2 = load::<RelFinObjectJson>(f2)?.to_object().map_err(invalid)?;
            let probes = if *exhaustive {
                let max_order = f
                    .components()
                    .iter()
                    .chain(f2.components())
                    .map(|c| c.source().order())
                    .max()
                    .unwrap_or(1);
                exhaustive_probe_set(f.base(), max_order)
            } else {
                default_probe_set(&f, &f2).map_err(invalid)?
            };
            let witness = counting_distinguisher(&f, &f2, &probes).map_err(invalid)?;
            emit_distinguisher(cli, witness.as_ref())
        }
        Command::Homcount { c, a, injective } => {
            let c = load::<RelationalJson>(c)?.to_structure().map_err(invalid)?;
            let a = load::<RelationalJson>(a)?.to_structure().map_err(invalid)?;
            let count = if *injective {
                count_injective_homs(&c, &a).map_err(invalid)?
            } else {
                count_homs(&c, &a).map_err(invalid)?
            };
            if cli.json {
                to_json(&HomcountOutput { count })
            } else {
                Ok(count.to_string())
            }
        }
        Command::LovaszTest { a, b, bound } => {
            let a = load::<RelationalJson>(a)?.to_structure().map_err(invalid)?;
            let b = load::<RelationalJson>(b)?.to_structure().map_err(invalid)?;
            let verdict = lovasz_iso_test(&a, &b, *bound).map_err(invalid)?;
            emit_lovasz(cli, &verdict)
        }
        Command::HomotopyCard { space } => {
            let x = load::<PiFiniteJson>(space)?.to_space().map_err(invalid)?;
            let card = homotopy_cardinality(&x);
            emit_rational(cli, "cardinality", &card)
        }
    }
}

fn validate_rep_params(args: &RepSeriesArgs) -> Result<RepComponentParams, CliError> {
    if args.dim == 0 {
        return Err(CliError::Invalid("dimension must be positive".into()));
    }
    if args.d == 0 {
        return Err(CliError::Invalid("field degree must be positive".into()));
    }
    if !is_prime_power(args.q) {
        return Err(CliError::Invalid(format!("q = {} is not a prime power", args.q)));
    }
    Ok(RepComponentParams::new(args.dim, args.q, args.d))
}

fn is_prime_power(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let p = (2..=q).find(|d| q % d == 0).unwrap();
    let mut q = q;
    while q % p == 0 {
        q /= p;
    }
    q == 1
}

fn emit_rational(cli: &Cli, _key: &str, value: &grpdcard::Rat) -> Result<String, CliError> {
    if cli.json {
        to_json(&RationalOutput {
            cardinality: value.to_string(),
            value: cli.float.then(|| rat_f64(value)),
        })
    } else if cli.float {
        Ok(format!("{value} = {}", float15(rat_f64(value))))
    } else {
        Ok(value.to_string())
    }
}

fn rat_f64(r: &grpdcard::Rat) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

fn emit_series(cli: &Cli, series: &grpdcard::RationalSeries) -> Result<String, CliError> {
    if cli.json {
        to_json(&grpdcard::json::SeriesJson::from_series(series))
    } else {
        Ok(render_series(series))
    }
}

fn emit_factorization(
    cli: &Cli,
    t: &grpdcard::functor::TernaryFactorization,
) -> Result<String, CliError> {
    let stages = [
        ("stage2", &t.stage2),
        ("stage1", &t.stage1),
        ("stage0", &t.stage0),
    ];
    if cli.json {
        let out = FactorizationOutput {
            im2: GroupoidJson::from_groupoid(&t.im2),
            im1: GroupoidJson::from_groupoid(&t.im1),
            im2_cardinality: t.im2.cardinality().to_string(),
            im1_cardinality: t.im1.cardinality().to_string(),
            stages: stages
                .iter()
                .map(|(name, f)| {
                    let c = f.classify();
                    StageOutput {
                        name: name.to_string(),
                        object_map: f.object_map(),
                        morphism_map: f.morphism_map(),
                        full: c.full,
                        faithful: c.faithful,
                        essentially_surjective: c.essentially_surjective,
                    }
                })
                .collect(),
        };
        return to_json(&out);
    }
    let mut lines = vec![
        format!(
            "im2: objects={} morphisms={} cardinality={}",
            t.im2.n_objects(),
            t.im2.n_morphisms(),
            t.im2.cardinality()
        ),
        format!(
            "im1: objects={} morphisms={} cardinality={}",
            t.im1.n_objects(),
            t.im1.n_morphisms(),
            t.im1.cardinality()
        ),
    ];
    for (name, f) in stages {
        let c = f.classify();
        lines.push(format!(
            "{name}: full={} faithful={} essentially_surjective={}",
            c.full, c.faithful, c.essentially_surjective
        ));
    }
    Ok(lines.join("\n"))
}

fn emit_distinguisher(
    cli: &Cli,
    witness: Option<&grpdcard::relfin::DistinguisherWitness>,
) -> Result<String, CliError> {
    match witness {
        Some(w) => {
            let probe_obj = RelFinObject::single(w.probe.clone());
            if cli.json {
                to_json(&DistinguishOutput {
                    distinguished: true,
                    witness: Some(RelFinObjectJson::from_object(&probe_obj)),
                    left: Some(w.left.to_string()),
                    right: Some(w.right.to_string()),
                })
            } else {
                Ok(format!(
                    "distinguished: probe with group of order {} separates ({} vs {})\nwitness: {}",
                    w.probe.source().order(),
                    w.left,
                    w.right,
                    serde_json::to_string(&RelFinObjectJson::from_object(&probe_obj))
                        .map_err(invalid)?
                ))
            }
        }
        None => {
            if cli.json {
                to_json(&DistinguishOutput {
                    distinguished: false,
                    witness: None,
                    left: None,
                    right: None,
                })
            } else {
                Ok("no distinguishing probe found".to_string())
            }
        }
    }
}

fn emit_lovasz(cli: &Cli, verdict: &LovaszVerdict) -> Result<String, CliError> {
    match verdict {
        LovaszVerdict::Distinguished { witness, hom_a, hom_b } => {
            let wj = RelationalJson::from_structure(witness);
            if cli.json {
                to_json(&LovaszOutput {
                    distinguished: true,
                    witness: Some(wj),
                    hom_a: Some(*hom_a),
                    hom_b: Some(*hom_b),
                    isomorphic: Some(false),
                })
            } else {
                Ok(format!(
                    "distinguished by C = {} ({hom_a} vs {hom_b} homomorphisms)",
                    serde_json::to_string(&wj).map_err(invalid)?
                ))
            }
        }
        LovaszVerdict::Indistinguishable { isomorphic } => {
            if cli.json {
                to_json(&LovaszOutput {
                    distinguished: false,
                    witness: None,
                    hom_a: None,
                    hom_b: None,
                    isomorphic: Some(*isomorphic),
                })
            } else {
                Ok(format!("indistinguishable; isomorphic: {isomorphic}"))
            }
        }
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string(value).map_err(|e| CliError::Invalid(e.to_string()))
}
