use std::fs;
use std::path::Path;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use ordsemi::archimedean::class_matrix_csv;
use ordsemi::descriptor::{GeneratorDescriptor, InstanceDescriptor, InstanceVisitor};
use ordsemi::engine::{fiber, k_smallest_products, products_up_to, Budget, ProductString};
use ordsemi::hahn::SeriesRing;
use ordsemi::verify::{verify_lemma_suite, SuiteParams};
use ordsemi::{
    LexExponents, OrderedGroup, OrderedSemigroup, Rational, RationalExponents, SampleElements,
};

/// Exact computation in totally ordered semigroups with well-ordered
/// generator sets.
#[derive(Parser)]
#[command(name = "ordsemi", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List products of the generators in ascending order.
    Enumerate(EnumerateArgs),
    /// List every string whose product is the target.
    Fiber(FiberArgs),
    /// Print the archimedean class comparison matrix as CSV.
    Classes(ClassesArgs),
    /// Run the verification suite on one instance and generator set.
    Verify(VerifyArgs),
    /// Hahn series arithmetic below an exponent bound.
    Series(SeriesArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum RowFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Text,
}

#[derive(Args)]
struct InstanceArg {
    /// Instance as JSON, a path to a JSON file, or a shorthand such as
    /// `additive_rationals`, `lex_vectors:2` or `shortlex:ab`.
    #[arg(long)]
    instance: String,
}

#[derive(Args)]
struct EnumerateArgs {
    #[command(flatten)]
    instance: InstanceArg,
    /// Generator set JSON file (or inline JSON).
    #[arg(long)]
    gens: String,
    /// Number of values to list.
    #[arg(long, required_unless_present = "up_to")]
    k: Option<usize>,
    /// List every value up to and including this one instead.
    #[arg(long)]
    up_to: Option<String>,
    /// Cap on elements pulled from a stream presentation.
    #[arg(long, default_value_t = Budget::default().pulls)]
    budget: usize,
    /// Cap on search-tree expansions.
    #[arg(long, default_value_t = Budget::default().expansions)]
    expansions: usize,
    #[arg(long, value_enum, default_value = "json")]
    format: RowFormat,
}

#[derive(Args)]
struct FiberArgs {
    #[command(flatten)]
    instance: InstanceArg,
    #[arg(long)]
    gens: String,
    #[arg(long)]
    target: String,
    /// Maximum string length; needed when the length is not bounded.
    #[arg(long)]
    length_cap: Option<usize>,
    /// Also report the number of distinct factor multisets.
    #[arg(long)]
    multiset: bool,
    #[arg(long, value_enum, default_value = "json")]
    format: RowFormat,
}

#[derive(Args)]
struct ClassesArgs {
    #[command(flatten)]
    instance: InstanceArg,
    #[arg(required = true)]
    elements: Vec<String>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    instance: InstanceArg,
    #[arg(long)]
    gens: String,
    #[arg(long, default_value_t = 20)]
    k: usize,
    #[arg(long, default_value_t = 4)]
    max_len: usize,
    #[arg(long, default_value_t = 10_000)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest number of tuples the brute-force oracle may evaluate.
    #[arg(long, default_value_t = ordsemi::oracle::DEFAULT_TUPLE_LIMIT)]
    tuple_limit: u128,
    #[arg(long, value_enum, default_value = "text")]
    format: ReportFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesOp {
    /// F + G
    Add,
    /// F * G
    Mul,
    /// 1 / (1 - F); every exponent of F must be positive.
    Inv,
}

#[derive(Args)]
struct SeriesArgs {
    #[arg(value_enum)]
    op: SeriesOp,
    /// Exponent bound; terms above it are dropped.
    #[arg(long)]
    bound: String,
    /// Exponent group: `rationals` or `lex:K`.
    #[arg(long, default_value = "rationals")]
    exponents: String,
    /// First operand, e.g. "3 + 2*x^(1/2) - x^(7/6)".
    f: String,
    /// Second operand for add and mul.
    g: Option<String>,
}

/// Inline JSON, a file path, or literal text.
fn read_arg(text: &str) -> Result<String> {
    let trimmed = text.trim_start();
    if !trimmed.starts_with('{') && Path::new(text).is_file() {
        return fs::read_to_string(text).with_context(|| format!("reading {text}"));
    }
    Ok(text.to_string())
}

fn instance(arg: &InstanceArg) -> Result<InstanceDescriptor> {
    Ok(read_arg(&arg.instance)?.parse()?)
}

fn generators(text: &str) -> Result<GeneratorDescriptor> {
    let body = read_arg(text)?;
    if !body.trim_start().starts_with('{') {
        bail!("generator set {text:?} is neither a JSON file nor inline JSON");
    }
    Ok(body.parse()?)
}

fn witness_list<S: OrderedSemigroup>(inst: &S, s: &ProductString<S::Element>) -> Vec<String> {
    s.factors().iter().map(|x| inst.format_element(x)).collect()
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

struct Enumerate<'a>(&'a EnumerateArgs, GeneratorDescriptor);

impl InstanceVisitor for Enumerate<'_> {
    type Output = Result<()>;

    fn visit<S>(self, inst: &S) -> Result<()>
    where
        S: SampleElements + Clone + Send + Sync + 'static,
    {
        let Enumerate(args, desc) = self;
        let gens = desc.build(inst)?;
        let budget = Budget::new(args.expansions, args.budget);
        let result = match &args.up_to {
            Some(t) => products_up_to(inst, gens, &inst.parse_element(t)?, budget)?,
            None => k_smallest_products(inst, gens, args.k.unwrap_or(0), budget)?,
        };
        if let RowFormat::Csv = args.format {
            println!("value,witness,fiber_size");
        }
        for e in &result.items {
            let value = inst.format_element(&e.value);
            match args.format {
                RowFormat::Json => println!(
                    "{}",
                    json!({
                        "value": value,
                        "witness": witness_list(inst, &e.witness),
                        "fiber_size": e.representatives,
                    })
                ),
                RowFormat::Csv => println!(
                    "{},{},{}",
                    csv_field(&value),
                    csv_field(&e.witness.format_with(inst)),
                    e.representatives
                ),
            }
        }
        if result.truncated {
            eprintln!("budget exhausted after {} values", result.items.len());
        }
        Ok(())
    }
}

struct Fiber<'a>(&'a FiberArgs, GeneratorDescriptor);

impl InstanceVisitor for Fiber<'_> {
    type Output = Result<()>;

    fn visit<S>(self, inst: &S) -> Result<()>
    where
        S: SampleElements + Clone + Send + Sync + 'static,
    {
        let Fiber(args, desc) = self;
        let gens = desc.build(inst)?;
        let target = inst.parse_element(&args.target)?;
        let f = fiber(inst, &gens, &target, args.length_cap)?;
        let value = inst.format_element(&target);
        let multiset = args.multiset.then(|| f.multiset_count(inst));
        if let RowFormat::Csv = args.format {
            let extra = if multiset.is_some() {
                ",multiset_count"
            } else {
                ""
            };
            println!("value,witness,fiber_size{extra}");
        }
        for w in &f.witnesses {
            match args.format {
                RowFormat::Json => {
                    let mut row = json!({
                        "value": value,
                        "witness": witness_list(inst, w),
                        "fiber_size": f.len(),
                    });
                    if let Some(m) = multiset {
                        row["multiset_count"] = json!(m);
                    }
                    println!("{row}");
                }
                RowFormat::Csv => {
                    let extra = multiset.map(|m| format!(",{m}")).unwrap_or_default();
                    println!(
                        "{},{},{}{extra}",
                        csv_field(&value),
                        csv_field(&w.format_with(inst)),
                        f.len()
                    );
                }
            }
        }
        if f.is_empty() {
            eprintln!("{value} is not a product of the generators");
        }
        Ok(())
    }
}

struct Classes<'a>(&'a [String]);

impl InstanceVisitor for Classes<'_> {
    type Output = Result<String>;

    fn visit<S>(self, inst: &S) -> Result<String>
    where
        S: SampleElements + Clone + Send + Sync + 'static,
    {
        let elements = self
            .0
            .iter()
            .map(|e| inst.parse_element(e))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(class_matrix_csv(inst, &elements))
    }
}

struct Verify<'a>(&'a VerifyArgs, GeneratorDescriptor);

impl InstanceVisitor for Verify<'_> {
    type Output = Result<bool>;

    fn visit<S>(self, inst: &S) -> Result<bool>
    where
        S: SampleElements + Clone + Send + Sync + 'static,
    {
        let Verify(args, desc) = self;
        let gens = desc.build(inst)?;
        let params = SuiteParams {
            k: args.k,
            max_len: args.max_len,
            trials: args.trials,
            seed: args.seed,
            tuple_limit: args.tuple_limit,
            fault: None,
        };
        let report = verify_lemma_suite(inst, &gens, &desc.describe(), &params);
        match args.format {
            ReportFormat::Json => println!("{}", serde_json::to_string_pretty(&report)?),
            ReportFormat::Text => print!("{}", report.to_text()),
        }
        Ok(report.all_passed())
    }
}

fn series<G: OrderedGroup>(group: G, args: &SeriesArgs) -> Result<String> {
    let ring: SeriesRing<G, Rational> = SeriesRing::new(group);
    let bound = ring.group().parse_element(&args.bound)?;
    let f = ring.parse(&args.f)?;
    let second = || -> Result<_> {
        match &args.g {
            Some(g) => Ok(ring.parse(g)?),
            None => bail!("this operation needs a second series"),
        }
    };
    let out = match args.op {
        SeriesOp::Add => ring.truncate(&ring.add(&f, &second()?), &bound),
        SeriesOp::Mul => ring.mul(&f, &second()?, &bound),
        SeriesOp::Inv => {
            if args.g.is_some() {
                bail!("inv takes a single series");
            }
            ring.geometric_inverse(&f, &bound)?
        }
    };
    Ok(ring.format(&out))
}

fn run(cli: Cli) -> Result<bool> {
    match &cli.command {
        Command::Enumerate(args) => {
            let gens = generators(&args.gens)?;
            instance(&args.instance)?.visit(Enumerate(args, gens))??;
        }
        Command::Fiber(args) => {
            let gens = generators(&args.gens)?;
            instance(&args.instance)?.visit(Fiber(args, gens))??;
        }
        Command::Classes(args) => {
            print!(
                "{}",
                instance(&args.instance)?.visit(Classes(&args.elements))??
            );
        }
        Command::Verify(args) => {
            let gens = generators(&args.gens)?;
            return instance(&args.instance)?.visit(Verify(args, gens))?;
        }
        Command::Series(args) => {
            let text = match args.exponents.split_once(':') {
                None if args.exponents == "rationals" => series(RationalExponents::new(), args)?,
                Some(("lex", k)) => {
                    let k: usize = k.parse().context("lex dimension")?;
                    if k == 0 {
                        bail!("lex dimension must be at least 1");
                    }
                    series(LexExponents::new(k), args)?
                }
                _ => bail!("unknown exponent group {:?}", args.exponents),
            };
            println!("{text}");
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
