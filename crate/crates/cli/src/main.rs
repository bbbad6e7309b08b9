//! `polyshift`: command-line access to monomial ideal arithmetic, homological
//! shift ideals, associated primes, law checkers and fuzz campaigns.
//!
//! Exit codes: 0 all checks passed, 1 counterexample found, 2 usage or input
//! error, 3 resource budget exhausted.

use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use polyshift::format::{parse_ideal, IdealJson};
use polyshift::harness::{fuzz, CampaignConfig, FamilyKind, Size};
use polyshift::laws::{self, LawId, LawParams, LawVerdict, Status};
use polyshift::polymatroid::{
    box_polymatroid, check_polymatroidal, check_strong_exchange, check_symmetric_exchange,
    is_componentwise_polymatroidal, is_matroidal, CmsCriterion, MobiusTable, PolymatroidCheck,
};
use polyshift::primes::{ass_with_budget, localize, v_number, MonomialPrime, DEFAULT_WITNESS_BUDGET};
use polyshift::resolution::{hs, koszul_tor_with_budget, Field};
use polyshift::{Error, MonomialIdeal, Monomial};

#[derive(Parser)]
#[command(name = "polyshift", version, about = "Homological shift ideals of monomial ideals and their powers")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Md,
    Csv,
}

#[derive(Args, Clone)]
struct IdealArg {
    /// Ideal as a file path or inline text (`x1*x3, x2^2` or JSON).
    #[arg(long)]
    ideal: String,
    /// Number of variables (defaults to the largest index used).
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Parse an ideal and print its minimal generators.
    Parse(IdealArg),
    /// Ideal arithmetic.
    Arith {
        #[arg(value_enum)]
        op: ArithOp,
        #[command(flatten)]
        input: IdealArg,
        /// Second ideal for product, colon, intersect and sum.
        #[arg(long)]
        other: Option<String>,
        /// Exponent for `power`.
        #[arg(long)]
        power: Option<u32>,
        /// Degree for `component`.
        #[arg(long)]
        degree: Option<u32>,
        /// Comma-separated bound for `restrict`.
        #[arg(long, value_delimiter = ',')]
        bound: Option<Vec<u32>>,
    },
    /// Test a structural property.
    Check {
        #[arg(value_enum)]
        property: Property,
        #[command(flatten)]
        input: IdealArg,
    },
    /// Homological shift ideal HS_i(I^k).
    Hs {
        #[command(flatten)]
        input: IdealArg,
        #[arg(long, default_value_t = 1)]
        i: usize,
        #[arg(long, default_value_t = 1)]
        power: u32,
    },
    /// Multigraded Betti numbers from Koszul homology.
    Betti {
        #[command(flatten)]
        input: IdealArg,
        /// Field characteristic (0 or a prime).
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u32,
        #[arg(long, default_value_t = 1)]
        power: u32,
        /// Candidate multidegree budget.
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Associated primes of S/HS_i(I^k) with witnesses.
    Ass {
        #[command(flatten)]
        input: IdealArg,
        #[arg(long, default_value_t = 0)]
        i: usize,
        #[arg(long, default_value_t = 1)]
        power: u32,
        /// Witness table budget (cells).
        #[arg(long)]
        budget: Option<usize>,
    },
    /// v-number and per-prime v-numbers.
    Vnum {
        #[command(flatten)]
        input: IdealArg,
    },
    /// Localization I(P) at a monomial prime.
    Localize {
        #[command(flatten)]
        input: IdealArg,
        /// Comma-separated 1-based variables of P.
        #[arg(long, value_delimiter = ',', required = true)]
        prime: Vec<usize>,
    },
    /// Möbius function queries.
    Mobius(MobiusArgs),
    /// Run a law checker.
    Verify(VerifyArgs),
    /// Seeded fuzz campaign.
    Fuzz(FuzzArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum ArithOp {
    Product,
    Sum,
    Power,
    Colon,
    Intersect,
    Socle,
    Saturate,
    Component,
    Restrict,
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    Polymatroidal,
    Symmetric,
    Strong,
    Matroidal,
    Componentwise,
}

#[derive(Args)]
struct MobiusArgs {
    /// Polymatroidal ideal whose dual carries the Möbius function.
    #[arg(long)]
    ideal: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    /// Cage for the dual (defaults to the bounding multidegree).
    #[arg(long, value_delimiter = ',')]
    cage: Option<Vec<u32>>,
    /// Base u for a membership query, as exponents.
    #[arg(long, value_delimiter = ',')]
    u: Option<Vec<u32>>,
    /// 1-based index set J for a membership query.
    #[arg(long, value_delimiter = ',')]
    j: Option<Vec<usize>>,
    /// Assemble HS_i from the criterion.
    #[arg(long)]
    i: Option<usize>,
    /// Truncated box {y <= c, |y| <= level}: print μ(0).
    #[arg(long = "box", value_delimiter = ',')]
    box_bound: Option<Vec<u32>>,
    #[arg(long)]
    level: Option<u32>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Law id: a single-ideal law, or one of five-variable-example,
    /// veronese-example, mobius-lemma, multipartite-matroidal.
    #[arg(long)]
    law: String,
    #[arg(long)]
    ideal: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    i: Option<usize>,
    #[arg(long, default_value_t = 4)]
    kmax: u32,
    #[arg(long)]
    k_from: Option<u32>,
    /// Box for mobius-lemma.
    #[arg(long = "box", value_delimiter = ',')]
    box_bound: Option<Vec<u32>>,
}

#[derive(Args)]
struct FuzzArgs {
    /// Families (repeatable or comma-separated), or `all`.
    #[arg(long, value_delimiter = ',', default_value = "all")]
    family: Vec<String>,
    /// Instances per family.
    #[arg(long, default_value_t = 20)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Law ids (comma-separated), or `all`.
    #[arg(long, value_delimiter = ',', default_value = "all")]
    laws: Vec<String>,
    #[arg(long, default_value_t = 3)]
    kmax: u32,
    #[arg(long)]
    i: Option<usize>,
    #[arg(long, default_value_t = 5)]
    n_max: usize,
    #[arg(long, default_value_t = 3)]
    deg_max: u32,
    #[arg(long, default_value_t = 40)]
    max_gens: usize,
    /// Largest number of generators of I^kmax a power-based law may face.
    #[arg(long, default_value_t = 2000)]
    budget: usize,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<String>,
}

/// Failure raised by a subcommand.
enum Failure {
    Input(String),
    Exhausted(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceExhausted(m) => Failure::Exhausted(m),
            other => Failure::Input(other.to_string()),
        }
    }
}

type Outcome = Result<u8, Failure>;

fn read_text(arg: &str) -> Result<String, Failure> {
    let p = Path::new(arg);
    if p.is_file() {
        std::fs::read_to_string(p).map_err(|e| Failure::Input(format!("cannot read {arg}: {e}")))
    } else {
        Ok(arg.to_string())
    }
}

fn load(arg: &str, n: Option<usize>) -> Result<MonomialIdeal, Failure> {
    let text = read_text(arg)?;
    parse_ideal(&text, n).map_err(|e| match e {
        Error::Parse { pos, msg } => {
            let line_start = text[..pos.min(text.len())].rfind('\n').map_or(0, |i| i + 1);
            let line_end = text[line_start..].find('\n').map_or(text.len(), |i| line_start + i);
            let caret = " ".repeat(pos.saturating_sub(line_start));
            Failure::Input(format!(
                "parse error at byte {pos}: {msg}\n  {}\n  {caret}^",
                &text[line_start..line_end]
            ))
        }
        other => Failure::from(other),
    })
}

fn print_ideal(ideal: &MonomialIdeal, format: Format) {
    match format {
        Format::Json => println!("{}", serde_json::to_string(&IdealJson::from(ideal)).expect("serializable")),
        _ => println!("{ideal}"),
    }
}

fn print_value(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn run(cli: Cli) -> Outcome {
    let format = cli.format;
    match cli.command {
        Command::Parse(input) => {
            let i = load(&input.ideal, input.n)?;
            print_ideal(&i, format);
            Ok(0)
        }
        Command::Arith {
            op,
            input,
            other,
            power,
            degree,
            bound,
        } => {
            let a = load(&input.ideal, input.n)?;
            let second = || -> Result<MonomialIdeal, Failure> {
                let text = other
                    .as_deref()
                    .ok_or_else(|| Failure::Input("this operation needs --other".into()))?;
                load(text, Some(a.n()))
            };
            let result = match op {
                ArithOp::Product => a.product(&second()?)?,
                ArithOp::Sum => a.sum(&second()?)?,
                ArithOp::Colon => a.colon_ideal(&second()?)?,
                ArithOp::Intersect => a.intersect(&second()?)?,
                ArithOp::Power => {
                    a.power(power.ok_or_else(|| Failure::Input("power needs --power".into()))?)
                }
                ArithOp::Socle => a.socle(),
                ArithOp::Saturate => {
                    let (sat, steps) = a.saturation();
                    if format == Format::Text {
                        eprintln!("saturation index {steps}");
                    }
                    sat
                }
                ArithOp::Component => {
                    a.graded_component(degree.ok_or_else(|| Failure::Input("component needs --degree".into()))?)
                }
                ArithOp::Restrict => {
                    a.restriction(bound.as_deref().ok_or_else(|| Failure::Input("restrict needs --bound".into()))?)?
                }
            };
            print_ideal(&result, format);
            Ok(0)
        }
        Command::Check { property, input } => {
            let i = load(&input.ideal, input.n)?;
            let (holds, detail) = match property {
                Property::Polymatroidal => {
                    let c = check_polymatroidal(&i);
                    let detail = match &c {
                        PolymatroidCheck::ExchangeFails(w) => json!({
                            "u": w.u.to_string(), "v": w.v.to_string(), "i": w.i + 1
                        }),
                        other => json!(format!("{other:?}")),
                    };
                    (c.holds(), detail)
                }
                Property::Symmetric => (check_symmetric_exchange(&i)?, Value::Null),
                Property::Strong => (check_strong_exchange(&i)?, Value::Null),
                Property::Matroidal => (is_matroidal(&i), Value::Null),
                Property::Componentwise => (is_componentwise_polymatroidal(&i), Value::Null),
            };
            match format {
                Format::Json => print_value(&json!({"holds": holds, "detail": detail})),
                _ if holds => println!("yes"),
                _ if detail.is_object() => println!("no: exchange fails for u = {}, v = {}, i = {}",
                    detail["u"].as_str().unwrap_or(""), detail["v"].as_str().unwrap_or(""), detail["i"]),
                _ => println!("no"),
            }
            Ok(if holds { 0 } else { 1 })
        }
        Command::Hs { input, i, power } => {
            let ideal = load(&input.ideal, input.n)?;
            print_ideal(&hs(&ideal.power(power), i)?, format);
            Ok(0)
        }
        Command::Betti {
            input,
            characteristic,
            power,
            budget,
        } => {
            let ideal = load(&input.ideal, input.n)?.power(power);
            let field = Field::new(characteristic)?;
            let tor = koszul_tor_with_budget(
                &ideal,
                field,
                budget.unwrap_or(polyshift::resolution::koszul::DEFAULT_CANDIDATE_BUDGET),
            )?;
            match format {
                Format::Json => print_value(&json!({"totals": tor.totals(), "multigraded": tor.to_json()})),
                _ => print!("{}", tor.to_text()),
            }
            Ok(0)
        }
        Command::Ass { input, i, power, budget } => {
            let ideal = load(&input.ideal, input.n)?;
            let target = if i == 0 && power == 1 { ideal } else { hs(&ideal.power(power), i)? };
            let a = ass_with_budget(&target, budget.unwrap_or(DEFAULT_WITNESS_BUDGET))?;
            match format {
                Format::Json => print_value(&a.to_json()),
                _ => {
                    for (p, w) in a.witnesses() {
                        println!("{p}  witness {w}");
                    }
                }
            }
            Ok(0)
        }
        Command::Vnum { input } => {
            let ideal = load(&input.ideal, input.n)?;
            let a = polyshift::primes::ass(&ideal)?;
            let v = v_number(&ideal)?;
            match format {
                Format::Json => {
                    let per: Vec<Value> = a
                        .witnesses()
                        .iter()
                        .map(|(p, w)| json!({"prime": p.one_based(), "v": w.degree(), "witness": w.to_string()}))
                        .collect();
                    print_value(&json!({"v": v, "primes": per}));
                }
                _ => {
                    println!("v = {v}");
                    for (p, w) in a.witnesses() {
                        println!("v_{p} = {}  witness {w}", w.degree());
                    }
                }
            }
            Ok(0)
        }
        Command::Localize { input, prime } => {
            let ideal = load(&input.ideal, input.n)?;
            let p = MonomialPrime::from_one_based(&prime)?;
            print_ideal(&localize(&ideal, &p)?, format);
            Ok(0)
        }
        Command::Mobius(args) => mobius(args, format),
        Command::Verify(args) => verify(args, format),
        Command::Fuzz(args) => fuzz_command(args, format),
    }
}

fn mobius(args: MobiusArgs, format: Format) -> Outcome {
    if let Some(c) = args.box_bound {
        let level = args.level.ok_or_else(|| Failure::Input("--box needs --level".into()))?;
        let mu0 = MobiusTable::new(&box_polymatroid(&c, level)?)?.mu_zero();
        match format {
            Format::Json => print_value(&json!({"box": c, "level": level, "mu_zero": mu0.to_string()})),
            _ => println!("mu(0) = {mu0}"),
        }
        return Ok(0);
    }
    let text = args
        .ideal
        .ok_or_else(|| Failure::Input("mobius needs --ideal or --box".into()))?;
    let ideal = load(&text, args.n)?;
    let cms = CmsCriterion::new(&ideal, args.cage)?;
    match (args.u, args.j, args.i) {
        (Some(u), Some(j), _) => {
            let j0: Vec<usize> = j
                .iter()
                .map(|&x| x.checked_sub(1).ok_or_else(|| Failure::Input("indices are 1-based".into())))
                .collect::<Result<_, _>>()?;
            let member = cms.membership(&Monomial::new(u), &j0)?;
            match format {
                Format::Json => print_value(&json!({"member": member})),
                _ => println!("{}", if member { "member" } else { "not a member" }),
            }
            Ok(0)
        }
        (None, None, Some(i)) => {
            print_ideal(&cms.hs_ideal(i), format);
            Ok(0)
        }
        _ => Err(Failure::Input("give --u and --j, or --i".into())),
    }
}

fn verdict_exit(v: &LawVerdict) -> u8 {
    match v.status {
        Status::Fails => 1,
        Status::ResourceExhausted => 3,
        _ => 0,
    }
}

fn print_verdict(v: &LawVerdict, format: Format) {
    match format {
        Format::Json => println!("{}", serde_json::to_string(v).expect("serializable")),
        _ => {
            println!("{}: {} ({} checks, {} ms)", v.law_id, v.status.as_str(), v.cost.checks, v.cost.elapsed_ms);
            if let Some(w) = &v.witness {
                println!("witness: {}", serde_json::to_string(w).expect("serializable"));
            }
            if let Some(map) = v.data.as_object() {
                for (key, value) in map {
                    println!("{key}: {}", serde_json::to_string(value).expect("serializable"));
                }
            }
        }
    }
}

fn verify(args: VerifyArgs, format: Format) -> Outcome {
    let verdict = match args.law.as_str() {
        "five-variable-example" => laws::five_variable_example(args.kmax)?,
        "veronese-example" => laws::veronese_example()?,
        "mobius-lemma" => {
            let c = args
                .box_bound
                .ok_or_else(|| Failure::Input("mobius-lemma needs --box and --i".into()))?;
            let i = args.i.ok_or_else(|| Failure::Input("mobius-lemma needs --i".into()))?;
            laws::mobius_lemma(&c, i as u32)?
        }
        "multipartite-matroidal" => laws::multipartite_matroidal(args.n.unwrap_or(6))?,
        id => {
            let law = LawId::parse(id)?;
            let text = args
                .ideal
                .ok_or_else(|| Failure::Input(format!("law {id} needs --ideal")))?;
            let ideal = load(&text, args.n)?;
            let params = LawParams {
                i: args.i,
                kmax: args.kmax,
                k_from: args.k_from,
            };
            laws::check(law, &ideal, &params)?
        }
    };
    print_verdict(&verdict, format);
    Ok(verdict_exit(&verdict))
}

fn fuzz_command(args: FuzzArgs, format: Format) -> Outcome {
    let families = if args.family.iter().any(|f| f == "all") {
        FamilyKind::RANDOM.to_vec()
    } else {
        args.family.iter().map(|f| FamilyKind::parse(f)).collect::<Result<_, _>>()?
    };
    let laws = if args.laws.iter().any(|l| l == "all") {
        LawId::ALL.to_vec()
    } else {
        args.laws.iter().map(|l| LawId::parse(l)).collect::<Result<_, _>>()?
    };
    let config = CampaignConfig {
        families,
        count: args.count,
        seed: args.seed,
        laws,
        size: Size::new(args.n_max, args.deg_max, args.max_gens),
        kmax: args.kmax,
        i: args.i,
        budget: args.budget,
        keep_verdicts: false,
    };
    let report = fuzz(&config)?;
    let rendered = match format {
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv(),
        Format::Md | Format::Text => report.to_markdown(),
    };
    match &args.out {
        Some(path) => std::fs::write(path, rendered).map_err(|e| Failure::Input(format!("cannot write {path}: {e}")))?,
        None => print!("{rendered}"),
    }
    if !report.counterexamples.is_empty() || !report.errors.is_empty() {
        return Ok(1);
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Exhausted(msg)) => {
            eprintln!("resource budget exhausted: {msg}");
            ExitCode::from(3)
        }
    }
}
