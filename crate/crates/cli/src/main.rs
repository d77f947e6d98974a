use std::path::PathBuf;
use std::process::ExitCode;

use cartan_pentads::modules::{Direction, GradedModule};
use cartan_pentads::spec_io::{self, PentadSpec, SpecError};
use cartan_pentads::{fixtures, Error, GradedAlgebra, QPentad, Rational, Sampling, DEFAULT_DEGREE_CAP};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

/// Graded Lie algebras from pentads of Cartan type.
#[derive(Parser, Debug)]
#[command(name = "pentad", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Cartan matrix, regularity, ranks and the h vectors.
    Analyze(Common),
    /// Builds the algebra to the truncation degree and reports its structure.
    Expand(Common),
    /// Extends the module declared in the spec (or given by --weight).
    Module(ModuleArgs),
    /// Resolves a builder spec into a plain pentad spec.
    Compose(Common),
    /// Runs the Jacobi, invariant-form and pairing checks.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct Common {
    /// Spec file (JSON or TOML).
    #[arg(long, short)]
    input: Option<PathBuf>,
    /// Truncation degree N.
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u64).range(1..))]
    max_degree: u64,
    /// Largest accepted truncation degree.
    #[arg(long, default_value_t = DEFAULT_DEGREE_CAP as u64)]
    degree_cap: u64,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Seed for randomized sampling.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args, Debug)]
struct ModuleArgs {
    #[command(flatten)]
    common: Common,
    /// Base weight in ε-coordinates, comma separated (overrides the spec).
    #[arg(long, allow_hyphen_values = true)]
    weight: Option<String>,
    /// Build the negative extension.
    #[arg(long)]
    negative: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    common: Common,
    /// Verify every shipped fixture at its own degree.
    #[arg(long, conflicts_with = "input")]
    all_fixtures: bool,
    /// Check this many random Jacobi triples instead of all of them.
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long, hide = true)]
    inject_fault: bool,
}

enum Failure {
    Parse(String),
    Invariant(String),
    Verify,
}

impl From<SpecError> for Failure {
    fn from(e: SpecError) -> Self {
        match e {
            SpecError::Parse(m) => Failure::Parse(m),
            SpecError::Invalid(e) => Failure::Invariant(e.to_string()),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Invariant(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Analyze(c) => analyze(c),
        Command::Expand(c) => expand(c),
        Command::Module(m) => module(m),
        Command::Compose(c) => compose(c),
        Command::Verify(v) => verify(v),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Parse(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Invariant(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
        Err(Failure::Verify) => ExitCode::from(4),
    }
}

fn load(c: &Common) -> Result<PentadSpec, Failure> {
    let path = c
        .input
        .as_ref()
        .ok_or_else(|| Failure::Parse("--input is required".into()))?;
    Ok(spec_io::load(path)?)
}

fn build(p: &QPentad, c: &Common) -> Result<GradedAlgebra<Rational>, Failure> {
    Ok(GradedAlgebra::build_local_part(p).extend_with_cap(c.max_degree as usize, c.degree_cap as usize)?)
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn fmt_vec(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(spec_io::format_rational).collect();
    format!("({})", parts.join(", "))
}

fn print_dims(dims: &[(i64, usize)]) {
    println!("{:>8}  {:>6}", "degree", "dim");
    for (k, d) in dims {
        println!("{k:>8}  {d:>6}");
    }
}

fn analyze(c: &Common) -> Outcome {
    let spec = load(c)?;
    let rep = spec.pentad.analyze();
    if c.json {
        print_json(&spec_io::pentad_report_json(&rep));
        return Ok(());
    }
    let p = &spec.pentad;
    println!("pentad P({}, {})", p.r(), p.n());
    println!("cartan matrix:\n{}", rep.cartan.matrix);
    println!("regular: {}", rep.regular);
    println!("rank D: {}  annihilator dim: {}", rep.rank_d, rep.ann_dim);
    println!("transitive: {}  symmetric: {}", rep.transitive, rep.symmetric);
    for (i, h) in rep.h_vectors.iter().enumerate() {
        println!("h_{} = {}", i + 1, fmt_vec(h));
    }
    Ok(())
}

fn expand(c: &Common) -> Outcome {
    let spec = load(c)?;
    let alg = build(&spec.pentad, c)?;
    let rep = alg.structure_report()?;
    let witness = alg.prehomogeneity_witness(32, c.seed);
    if c.json {
        let mut v = spec_io::structure_report_json(&rep);
        v["prehomogeneity_witness"] = match &witness {
            Some(w) => Value::Array(w.iter().map(|q| json!(spec_io::format_rational(q))).collect()),
            None => Value::Null,
        };
        print_json(&v);
        return Ok(());
    }
    print_dims(&rep.dims);
    match rep.total_dim {
        Some(t) => println!("finite, total dimension {t}"),
        None => println!(
            "truncated at degree {}; computed dimension {}",
            rep.max_degree, rep.computed_dim
        ),
    }
    println!("center of V_0: {}", rep.center_dim_0);
    if let Some(d) = &rep.decomposition {
        let verdict = if d.matches { "matches" } else { "does not match" };
        println!(
            "regular: center {} plus contragredient algebra, dimensions {verdict}",
            d.center_dim
        );
    }
    if let Some(w) = witness {
        println!("V_1 element with injective bracket on V_-1: {}", fmt_vec(&w));
    }
    println!("note: {}", rep.note);
    Ok(())
}

fn parse_weight(text: &str) -> Result<Vec<Rational>, Failure> {
    text.split(',')
        .map(|s| spec_io::parse_rational(s).map_err(Failure::from))
        .collect()
}

fn module(m: &ModuleArgs) -> Outcome {
    let spec = load(&m.common)?;
    let (weight, declared) = match (&m.weight, &spec.module) {
        (Some(w), _) => (parse_weight(w)?, Direction::Positive),
        (None, Some(ms)) => (ms.weight.clone(), ms.direction),
        (None, None) => return Err(Failure::Parse("the spec has no module and --weight is not set".into())),
    };
    let direction = if m.negative { Direction::Negative } else { declared };
    let alg = build(&spec.pentad, &m.common)?;
    let module = GradedModule::extension(&alg, &[weight], direction, m.common.max_degree as usize)?;
    if m.common.json {
        print_json(&spec_io::module_json(&module));
        return Ok(());
    }
    print_dims(&module.dims());
    match module.total_dim() {
        Some(t) => println!("terminated, total dimension {t}"),
        None => println!("not terminated by degree {}", module.max_degree()),
    }
    Ok(())
}

fn compose(c: &Common) -> Outcome {
    let spec = load(c)?;
    print_json(&spec_io::pentad_json(&spec.pentad));
    Ok(())
}

struct Check {
    name: &'static str,
    status: Result<bool, &'static str>,
}

fn run_checks(spec: &PentadSpec, alg: &GradedAlgebra<Rational>, sampling: Sampling) -> Vec<Check> {
    let mut checks = vec![
        Check {
            name: "jacobi",
            status: Ok(alg.verify_jacobi(sampling)),
        },
        Check {
            name: "invariant_form",
            status: match alg.verify_invariant_form() {
                Ok(ok) => Ok(ok),
                Err(_) => Err("A not symmetric"),
            },
        },
        Check {
            name: "pairing_rank",
            status: if spec.pentad.is_symmetric() {
                Ok(alg.pairings_nondegenerate())
            } else {
                Err("A not symmetric")
            },
        },
        Check {
            name: "phi_identities",
            status: Ok(spec.pentad.phi_pairing_identity_check()),
        },
        Check {
            name: "transitivity",
            status: Ok(alg.check_transitivity()),
        },
    ];
    if let Some(ms) = &spec.module {
        let module = GradedModule::extension(alg, std::slice::from_ref(&ms.weight), ms.direction, alg.max_degree());
        checks.push(Check {
            name: "module_relations",
            status: Ok(module.is_ok_and(|m| m.verify_relations())),
        });
    }
    checks
}

fn status_text(s: &Result<bool, &'static str>) -> String {
    match s {
        Ok(true) => "pass".into(),
        Ok(false) => "fail".into(),
        Err(why) => format!("skipped: {why}"),
    }
}

fn verify(v: &VerifyArgs) -> Outcome {
    let sampling = match v.samples {
        Some(count) => Sampling::Random {
            count,
            seed: v.common.seed,
        },
        None => Sampling::All,
    };
    let mut targets: Vec<(String, PentadSpec, usize, Option<Option<usize>>)> = Vec::new();
    if v.all_fixtures {
        for f in fixtures::ALL {
            targets.push((f.name.to_string(), f.load()?, f.max_degree, Some(f.total_dim)));
        }
    } else {
        let spec = load(&v.common)?;
        let name = v
            .common
            .input
            .as_ref()
            .map(|p| p.display().to_string())
            .unwrap_or_default();
        targets.push((name, spec, v.common.max_degree as usize, None));
    }
    let mut all_ok = true;
    let mut reports = Vec::new();
    for (name, spec, degree, expected_total) in targets {
        let mut alg =
            GradedAlgebra::build_local_part(&spec.pentad).extend_with_cap(degree, v.common.degree_cap as usize)?;
        if v.inject_fault {
            alg = alg.with_corrupted_bracket();
        }
        let mut checks = run_checks(&spec, &alg, sampling);
        if let Some(expected) = expected_total {
            let total = alg.structure_report()?.total_dim;
            checks.push(Check {
                name: "total_dim",
                status: Ok(total == expected),
            });
        }
        all_ok &= checks.iter().all(|c| c.status != Ok(false));
        if v.common.json {
            let entries: Vec<Value> = checks
                .iter()
                .map(|c| json!({ "check": c.name, "status": status_text(&c.status) }))
                .collect();
            reports.push(json!({ "target": name, "max_degree": degree, "checks": entries }));
        } else {
            println!("{name} (N = {degree})");
            for c in &checks {
                println!("  {:<18} {}", c.name, status_text(&c.status));
            }
        }
    }
    if v.common.json {
        print_json(&json!({ "passed": all_ok, "results": reports }));
    } else {
        println!(
            "{}",
            if all_ok {
                "all checks passed"
            } else {
                "verification failed"
            }
        );
    }
    if all_ok {
        Ok(())
    } else {
        Err(Failure::Verify)
    }
}
