use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use weakq::algebra::{checks as alg_checks, parse, render, Element, Flavor, WAlgebra};
use weakq::coeff::{CyclotomicField, GenericField, ScalarField};
use weakq::hopf::{self, Hopf};
use weakq::ore::crosscheck_engines;
use weakq::quotient::{RCheck, RSuite, RSystem};
use weakq::report::Report;
use weakq::Error;

#[derive(Parser)]
#[command(name = "weakq", version, about = "Exact computations in weak quantum algebras")]
struct Cli {
    #[command(flatten)]
    cfg: Config,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Args)]
struct Config {
    /// Scalar field: Q(q), or Q(zeta_d) with --d.
    #[arg(long, value_enum, global = true)]
    mode: Option<Mode>,
    /// Order of the root of unity (odd, > 1).
    #[arg(long, global = true)]
    d: Option<u32>,
    #[arg(long, value_enum, default_value_t = FlavorArg::W, global = true)]
    flavor: FlavorArg,
    #[arg(long, default_value_t = 4, global = true)]
    degree_bound: u32,
    #[arg(long, visible_alias = "format", value_enum, default_value_t = Output::Text, global = true)]
    output: Output,
    /// Comma-separated suite names.
    #[arg(long, value_delimiter = ',', global = true)]
    checks: Vec<String>,
    #[arg(long, default_value_t = 1, global = true)]
    seed: u64,
    #[arg(long, default_value_t = 200, global = true)]
    samples: usize,
    /// Print every checked item, not just the failures.
    #[arg(long, global = true)]
    verbose: bool,
    /// Report elapsed_ms as 0 so that repeated runs are byte-identical.
    #[arg(long, global = true)]
    no_timing: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Generic,
    Cyclotomic,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FlavorArg {
    W,
    V,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the PBW normal form of each expression.
    Normalize {
        #[arg(required = true, allow_hyphen_values = true)]
        exprs: Vec<String>,
    },
    /// Print the coproduct of each expression.
    Coproduct {
        #[arg(required = true, allow_hyphen_values = true)]
        exprs: Vec<String>,
    },
    /// Weak antipode identities, T^2 on the ideal tails, anti-multiplicativity.
    AntipodeCheck,
    /// Group-like basis elements and certificates for the rest.
    Grouplike,
    /// Compare the Ore-extension product with the rewriting engine.
    OreCheck,
    /// The quasi-R-matrix of the root-of-unity quotient.
    Rmatrix {
        #[command(subcommand)]
        action: RAction,
    },
    /// Run the identity suites.
    Axioms {
        /// Also run the diagnostic suites, which contain known failures.
        #[arg(long)]
        all: bool,
    },
}

#[derive(Subcommand)]
enum RAction {
    /// Print R (and R^ with --with-rhat).
    Build {
        #[arg(long)]
        with_rhat: bool,
    },
    /// Verify identities; --checks selects among rho, regular, intertwine,
    /// intertwine-full, quasitriangular, qybe.
    Verify,
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Singular => Failure::Internal(e.to_string()),
            e => Failure::Usage(e.to_string()),
        }
    }
}

struct Outcome {
    text: String,
    json: Value,
    pass: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            match cli.cfg.output {
                Output::Text => print!("{}", out.text),
                Output::Json => println!("{}", serde_json::to_string_pretty(&out.json).unwrap()),
            }
            if out.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let cfg = &cli.cfg;
    if cfg.degree_bound == 0 {
        return Err(Failure::Usage("--degree-bound must be at least 1".into()));
    }
    if let Command::Rmatrix { action } = &cli.cmd {
        if cfg.mode == Some(Mode::Generic) {
            return Err(Failure::Usage("rmatrix works over Q(zeta_d); drop --mode generic".into()));
        }
        let d = cfg.d.ok_or_else(|| Failure::Usage("rmatrix needs --d".into()))?;
        return rmatrix(cfg, d, action);
    }
    match (cfg.mode, cfg.d) {
        (Some(Mode::Generic), Some(_)) => Err(Failure::Usage("--d requires --mode cyclotomic".into())),
        (Some(Mode::Cyclotomic), None) => Err(Failure::Usage("--mode cyclotomic requires --d".into())),
        (_, Some(d)) => {
            let field = CyclotomicField::new(d).map_err(|e| Failure::Usage(e.to_string()))?;
            dispatch(field, cfg, &cli.cmd)
        }
        (_, None) => dispatch(GenericField, cfg, &cli.cmd),
    }
}

fn flavor(cfg: &Config) -> Flavor {
    match cfg.flavor {
        FlavorArg::W => Flavor::W,
        FlavorArg::V => Flavor::V,
    }
}

fn normalize<F: ScalarField>(a: &WAlgebra<F>, text: &str, flavor: Flavor) -> weakq::Result<Element<F::Elem>> {
    let x = parse(text, flavor, a.field())?;
    match flavor {
        Flavor::W => a.normalize(&x),
        Flavor::V => a.normalize_v(&x),
    }
}

fn dispatch<F: ScalarField>(field: F, cfg: &Config, cmd: &Command) -> Result<Outcome, Failure> {
    let alg = Arc::new(WAlgebra::new(field.clone()));
    let fl = flavor(cfg);
    let h = Hopf::new(alg.clone(), fl);
    let bound = cfg.degree_bound;
    match cmd {
        Command::Normalize { exprs } => {
            let mut text = String::new();
            let mut rows = Vec::new();
            for e in exprs {
                let nf = render(&normalize(&alg, e, fl)?, fl, &field);
                text.push_str(&format!("{nf}\n"));
                rows.push(json!({ "input": e, "normal_form": nf }));
            }
            Ok(Outcome { text, json: Value::Array(rows), pass: true })
        }
        Command::Coproduct { exprs } => {
            let mut text = String::new();
            let mut rows = Vec::new();
            for e in exprs {
                let d = h.render_tensor(&h.coproduct(&normalize(&alg, e, fl)?)?);
                text.push_str(&format!("{d}\n"));
                rows.push(json!({ "input": e, "coproduct": d }));
            }
            Ok(Outcome { text, json: Value::Array(rows), pass: true })
        }
        Command::AntipodeCheck => {
            let mut reports = Vec::new();
            match fl {
                Flavor::W => {
                    reports.push(hopf::check_weak_antipode_w(&h, bound));
                    let [ideal, _] = hopf::check_antipode_square(&h, bound);
                    reports.push(ideal);
                }
                Flavor::V => reports.push(hopf::check_j_weak_antipode_v(&h, bound)),
            }
            reports.push(hopf::check_antimorphism(&h, cfg.samples, cfg.seed));
            Ok(reports_outcome(&reports, cfg.verbose))
        }
        Command::Grouplike => {
            let set: Vec<String> = hopf::grouplike_set(&h, bound).iter().map(|m| m.render(fl)).collect();
            let reports = [hopf::grouplike_nonmembers(&h, bound), hopf::regular_monoid_check(&h, bound)];
            let mut out = reports_outcome(&reports, cfg.verbose);
            out.text = format!("group-like, degree <= {bound}: {{{}}}\n{}", set.join(", "), out.text);
            out.json = json!({ "grouplike": set, "reports": out.json });
            Ok(out)
        }
        Command::OreCheck => {
            let r = crosscheck_engines(field.clone(), cfg.samples, 3, cfg.seed);
            Ok(reports_outcome(&[r], cfg.verbose))
        }
        Command::Axioms { all } => {
            let reports = axioms(&alg, cfg, *all)?;
            Ok(reports_outcome(&reports, cfg.verbose))
        }
        Command::Rmatrix { .. } => unreachable!("handled before dispatch"),
    }
}

const SUITES: [&str; 14] = [
    "weak-antipode",
    "j-weak-antipode",
    "coassociativity",
    "counit",
    "multiplicativity",
    "antimorphism",
    "k-commutation",
    "ef-commutators",
    "v-commutation",
    "confluence",
    "j-structure",
    "mod-j",
    "grouplike",
    "ore",
];

const DIAGNOSTIC_SUITES: [&str; 3] = ["relations", "antipode-square", "wv-connection"];

fn axioms<F: ScalarField>(alg: &Arc<WAlgebra<F>>, cfg: &Config, all: bool) -> Result<Vec<Report>, Failure> {
    let names: Vec<&str> = if cfg.checks.is_empty() {
        let mut n = SUITES.to_vec();
        if all {
            n.extend(DIAGNOSTIC_SUITES);
        }
        n
    } else {
        cfg.checks.iter().map(String::as_str).collect()
    };
    let w = Hopf::w(alg.clone());
    let v = Hopf::v(alg.clone());
    let bound = cfg.degree_bound;
    let field = alg.field().clone();
    let mut out = Vec::new();
    for name in names {
        match name {
            "weak-antipode" => out.push(hopf::check_weak_antipode_w(&w, bound)),
            "j-weak-antipode" => out.push(hopf::check_j_weak_antipode_v(&v, bound)),
            "coassociativity" => {
                out.push(hopf::check_coassociativity(&w, bound));
                out.push(hopf::check_coassociativity(&v, bound));
            }
            "counit" => {
                out.push(hopf::check_counit_law(&w, bound));
                out.push(hopf::check_counit_law(&v, bound));
            }
            "multiplicativity" => {
                out.push(hopf::check_multiplicativity(&w, cfg.samples, cfg.seed));
                out.push(hopf::check_multiplicativity(&v, cfg.samples, cfg.seed));
            }
            "antimorphism" => {
                out.push(hopf::check_antimorphism(&w, cfg.samples, cfg.seed));
                out.push(hopf::check_antimorphism(&v, cfg.samples, cfg.seed));
            }
            "k-commutation" => out.push(alg_checks::check_k_commutation(alg, 5)),
            "ef-commutators" => out.push(alg_checks::check_ef_commutators(alg, 5)),
            "v-commutation" => out.push(alg_checks::check_v_commutation(alg, 3)),
            "confluence" => out.push(alg_checks::check_confluence(alg, 500, cfg.seed)),
            "j-structure" => out.extend(alg_checks::check_j_structure(alg, bound)),
            "mod-j" => out.push(alg_checks::check_mod_j(field.clone())),
            "grouplike" => {
                out.push(hopf::grouplike_nonmembers(&w, bound));
                out.push(hopf::regular_monoid_check(&w, bound.min(3)));
            }
            "ore" => out.push(crosscheck_engines(field.clone(), cfg.samples, 3, cfg.seed)),
            "relations" => {
                out.extend(hopf::check_structure_relations(&w));
                out.extend(hopf::check_structure_relations(&v));
            }
            "antipode-square" => out.extend(hopf::check_antipode_square(&w, bound)),
            "wv-connection" => {
                for m in v.domain(bound.min(3)) {
                    out.push(hopf::check_wv_connection(&w, &v, &alg.monomial(m)));
                }
            }
            other => {
                return Err(Failure::Usage(format!(
                    "unknown suite `{other}`; expected one of {}",
                    SUITES.iter().chain(&DIAGNOSTIC_SUITES).copied().collect::<Vec<_>>().join(", ")
                )))
            }
        }
    }
    Ok(out)
}

fn reports_outcome(reports: &[Report], verbose: bool) -> Outcome {
    let mut text = String::new();
    for r in reports {
        if verbose {
            text.push_str(&r.to_text());
            continue;
        }
        let failed: Vec<_> = r.failures().collect();
        text.push_str(&format!(
            "{}: {} ({} items, {} failed)\n",
            r.check,
            if r.pass { "pass" } else { "FAIL" },
            r.items.len(),
            failed.len()
        ));
        for i in failed {
            text.push_str(&format!("  [FAIL] {}\n      expected: {}\n      got:      {}\n", i.input, i.expected, i.got));
        }
        for n in &r.notes {
            text.push_str(&format!("  note: {n}\n"));
        }
    }
    Outcome {
        text,
        json: serde_json::to_value(reports).unwrap(),
        pass: reports.iter().all(|r| r.pass),
    }
}

fn rmatrix(cfg: &Config, d: u32, action: &RAction) -> Result<Outcome, Failure> {
    let sys = RSystem::new(d).map_err(|e| Failure::Usage(e.to_string()))?;
    match action {
        RAction::Build { with_rhat } => {
            if *with_rhat {
                sys.rhat()?;
            }
            let format = match cfg.output {
                Output::Text => "text",
                Output::Json => "json",
            };
            let doc = sys.export(format)?;
            let json = match cfg.output {
                Output::Json => serde_json::from_str(&doc).unwrap(),
                Output::Text => Value::Null,
            };
            Ok(Outcome { text: doc, json, pass: true })
        }
        RAction::Verify => {
            let suites: Vec<RSuite> = if cfg.checks.is_empty() {
                RSuite::ALL.to_vec()
            } else {
                cfg.checks
                    .iter()
                    .map(|s| s.parse().map_err(|_| Failure::Usage(format!("unknown check `{s}`"))))
                    .collect::<Result<_, _>>()?
            };
            let mut checks: Vec<RCheck> = Vec::new();
            for s in suites {
                checks.extend(sys.run(s)?);
            }
            if cfg.no_timing {
                checks.iter_mut().for_each(|c| c.elapsed_ms = 0);
            }
            let text = checks.iter().map(|c| c.to_text() + "\n").collect();
            Ok(Outcome {
                text,
                json: serde_json::to_value(&checks).unwrap(),
                pass: checks.iter().all(|c| c.pass),
            })
        }
    }
}
