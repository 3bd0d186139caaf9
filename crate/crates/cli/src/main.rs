//! `ramified`: command-line access to constellations, branching data and
//! radical inversion of polynomials.

mod text;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use ramified::covering::Slot;
use ramified::decompose::{compose_all, critical_values, CriticalValue};
use ramified::galois::find_domination;
use ramified::poly::parse_rational;
use ramified::radicals::{chebyshev_preimages, power_preimages, solve_cubic_at, solve_quartic_pencil_at};
use ramified::{
    amplify, branching_datum, classify_datum, classify_orders, critical_datum, decompose_poly, enumerate_galois_data,
    exemplar_with_cap, fibered_product, galois_closure, genus_rh, invert_chebyshev, invert_power, ritt_verdict,
    AmplifyReport, BranchingDatum, Constellation, DatumClass, ExactPolynomial, ExemplarSpec, FamilyTag, Passport,
    RadicalExpr, RittVerdict, Tracked, DEFAULT_CAP,
};

#[derive(Parser)]
#[command(name = "ramified", version, about = "Branched coverings, branching data and radical inversion")]
struct Cli {
    /// Output mode.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct Input {
    /// Constellation JSON file, or `-` for standard input.
    #[arg(long)]
    input: PathBuf,
}

#[derive(Args)]
struct Pair {
    /// Constellation JSON of the first covering.
    #[arg(long)]
    first: PathBuf,
    /// Constellation JSON of the second covering.
    #[arg(long)]
    second: PathBuf,
}

#[derive(Args)]
struct Coeffs {
    /// Rational coefficients from the leading one down, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    coeffs: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum InvertFamily {
    Power,
    Chebyshev,
}

#[derive(Subcommand)]
enum Command {
    /// Branching datum and passport of a constellation.
    Datum(Input),
    /// Genus of the covering surface.
    Genus(Input),
    /// Classify a list of branching orders or a datum file.
    Classify {
        /// Comma-separated orders, e.g. 2,3,7.
        #[arg(long, conflicts_with = "input", required_unless_present = "input")]
        orders: Option<String>,
        /// Branching datum JSON file.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Minimal Galois closure.
    Closure(Input),
    /// Irreducible components of the fibered product.
    Fprod(Pair),
    /// Whether the first covering factors through the second.
    Dominates(Pair),
    /// Minimal Galois covering of a listed family.
    Exemplar {
        #[arg(long)]
        family: FamilyTag,
        /// `n` for (n,n) and (2,2,n), the module size for torus families.
        #[arg(long)]
        param: Option<u64>,
    },
    /// Branching orders and degrees of Galois coverings of genus 0 or 1.
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(u64).range(0..=1))]
        genus: u64,
        #[arg(long)]
        nmax: u64,
    },
    /// Cyclic unbranched extension of a covering of positive genus.
    Amplify {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        d: u64,
    },
    /// Radical inverse of z^n or of the Chebyshev polynomial P_n.
    Invert {
        #[arg(long, value_enum)]
        family: InvertFamily,
        #[arg(long)]
        n: u32,
        #[arg(long, allow_hyphen_values = true)]
        w: String,
    },
    /// Roots of a cubic by critical values.
    SolveCubic {
        #[command(flatten)]
        coeffs: Coeffs,
        /// Value to solve for instead of zero.
        #[arg(long, allow_hyphen_values = true)]
        w: Option<String>,
        /// Emit the radical expression of every root.
        #[arg(long)]
        radical: bool,
    },
    /// Roots of a quartic through the pencil of conics.
    SolveQuartic {
        #[command(flatten)]
        coeffs: Coeffs,
        #[arg(long, allow_hyphen_values = true)]
        w: Option<String>,
        #[arg(long)]
        radical: bool,
    },
    /// Decomposition into indecomposable factors and the critical data.
    Decompose(Coeffs),
    /// Invertibility in radicals, with the preimages of `w` when given.
    Ritt {
        #[command(flatten)]
        coeffs: Coeffs,
        #[arg(long, allow_hyphen_values = true)]
        w: Option<String>,
    },
}

enum Failure {
    Usage(String),
    Domain(ramified::Error),
}

impl From<ramified::Error> for Failure {
    fn from(e: ramified::Error) -> Self {
        Failure::Domain(e)
    }
}

type Outcome<T> = Result<T, Failure>;

/// A command result: its JSON records and a human-readable rendering.
struct Output {
    records: Vec<String>,
    text: String,
}

impl Output {
    fn one<T: Serialize>(value: &T, text: String) -> Outcome<Self> {
        Ok(Output { records: vec![json(value)?], text })
    }
}

fn json<T: Serialize>(value: &T) -> Outcome<String> {
    serde_json::to_string(value).map_err(|e| Failure::Usage(format!("cannot serialize output: {e}")))
}

fn cap() -> Outcome<usize> {
    match std::env::var("RAMIFIED_CAP") {
        Ok(v) => {
            v.trim().parse().map_err(|_| Failure::Usage(format!("RAMIFIED_CAP must be a positive integer, got {v:?}")))
        }
        Err(_) => Ok(DEFAULT_CAP),
    }
}

fn read_text(path: &Path) -> Outcome<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s)
            .map_err(|e| Failure::Usage(format!("cannot read standard input: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

#[derive(Deserialize)]
struct RawConstellation {
    degree: usize,
    slots: Vec<RawSlot>,
}

#[derive(Deserialize)]
struct RawSlot {
    point: String,
    perm: Vec<usize>,
}

/// Shape errors are usage errors; invalid permutations or products are domain errors.
fn read_constellation(path: &Path) -> Outcome<Constellation> {
    let raw: RawConstellation = serde_json::from_str(&read_text(path)?)
        .map_err(|e| Failure::Usage(format!("{}: not a constellation: {e}", path.display())))?;
    let slots = raw
        .slots
        .into_iter()
        .map(|s| Ok(Slot::new(s.point, ramified::Permutation::new(s.perm)?)))
        .collect::<Outcome<Vec<Slot>>>()?;
    Ok(Constellation::new(raw.degree, slots)?)
}

#[derive(Deserialize)]
struct RawDatum {
    entries: Vec<ramified::DatumEntry>,
}

fn read_datum(path: &Path) -> Outcome<BranchingDatum> {
    let raw: RawDatum = serde_json::from_str(&read_text(path)?)
        .map_err(|e| Failure::Usage(format!("{}: not a branching datum: {e}", path.display())))?;
    Ok(BranchingDatum::new(raw.entries)?)
}

fn parse_orders(list: &str) -> Outcome<Vec<u64>> {
    list.split(',')
        .map(|s| s.trim().parse::<u64>().map_err(|_| Failure::Usage(format!("bad order {s:?} in --orders"))))
        .collect()
}

fn parse_poly(c: &Coeffs) -> Outcome<ExactPolynomial> {
    ExactPolynomial::parse_high_to_low(&c.coeffs).map_err(|e| Failure::Usage(format!("--coeffs: {e}")))
}

fn parse_value(s: &str) -> Outcome<Tracked> {
    parse_rational(s).map(Tracked::rational).map_err(|e| Failure::Usage(format!("--w: {e}")))
}

fn target(w: &Option<String>) -> Outcome<Tracked> {
    match w {
        Some(s) => parse_value(s),
        None => Ok(Tracked::int(0)),
    }
}

#[derive(Serialize)]
struct DatumReport {
    datum: BranchingDatum,
    passport: Passport,
}

#[derive(Serialize)]
struct GenusReport {
    genus: u64,
}

#[derive(Serialize)]
struct ComponentReport {
    constellation: Constellation,
    pairs: Vec<(usize, usize)>,
}

#[derive(Serialize)]
struct DominationReport {
    dominates: bool,
    map: Option<Vec<usize>>,
}

#[derive(Serialize)]
struct AmplifyOutput {
    constellation: Constellation,
    report: AmplifyReport,
}

#[derive(Serialize)]
struct InvertReport {
    expr: RadicalExpr,
    /// Value of `expr` on every branch assignment.
    values: Vec<[f64; 2]>,
    /// The `n` solutions of the equation, with multiplicity.
    preimages: Vec<[f64; 2]>,
}

#[derive(Serialize)]
#[serde(untagged)]
enum Roots {
    Values(Vec<[f64; 2]>),
    Radical(Vec<Tracked>),
}

#[derive(Serialize)]
struct RootsReport {
    roots: Roots,
}

#[derive(Serialize)]
struct DecomposeReport {
    factors: Vec<ExactPolynomial>,
    critical_values: Vec<CriticalValue>,
    datum: BranchingDatum,
}

#[derive(Serialize)]
struct RittReport {
    verdict: RittVerdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    preimages: Option<Vec<Tracked>>,
}

fn roots_report(roots: Vec<Tracked>, radical: bool) -> Outcome<Output> {
    let text = text::roots(&roots);
    let roots = if radical {
        Roots::Radical(roots)
    } else {
        Roots::Values(roots.iter().map(|r| [r.value.re, r.value.im]).collect())
    };
    Output::one(&RootsReport { roots }, text)
}

fn run(command: Command) -> Outcome<Output> {
    match command {
        Command::Datum(i) => {
            let c = read_constellation(&i.input)?;
            let (datum, passport) = branching_datum(&c);
            let text = text::datum(&datum, &passport);
            Output::one(&DatumReport { datum, passport }, text)
        }
        Command::Genus(i) => {
            let genus = genus_rh(&read_constellation(&i.input)?)?;
            Output::one(&GenusReport { genus }, format!("genus {genus}"))
        }
        Command::Classify { orders, input } => {
            let class: DatumClass = match (orders, input) {
                (Some(list), _) => classify_orders(&parse_orders(&list)?),
                (None, Some(path)) => classify_datum(&read_datum(&path)?),
                (None, None) => return Err(Failure::Usage("one of --orders or --input is required".into())),
            };
            let text = text::class(&class);
            Output::one(&class, text)
        }
        Command::Closure(i) => {
            let closure = galois_closure(&read_constellation(&i.input)?, cap()?)?;
            let text = text::constellation(&closure);
            Output::one(&closure, text)
        }
        Command::Fprod(p) => {
            let (a, b) = (read_constellation(&p.first)?, read_constellation(&p.second)?);
            let components: Vec<ComponentReport> = fibered_product(&a, &b)?
                .into_iter()
                .map(|w| ComponentReport { constellation: w.constellation, pairs: w.pairs })
                .collect();
            let text = text::components(&components.iter().map(|c| &c.constellation).collect::<Vec<_>>());
            Output::one(&components, text)
        }
        Command::Dominates(p) => {
            let (a, b) = (read_constellation(&p.first)?, read_constellation(&p.second)?);
            let map = find_domination(&a, &b)?;
            let text = if map.is_some() { "dominates" } else { "does not dominate" }.to_string();
            Output::one(&DominationReport { dominates: map.is_some(), map }, text)
        }
        Command::Exemplar { family, param } => {
            let needs_param = matches!(family, FamilyTag::PowerNN | FamilyTag::Dihedral22N) || family.is_torus();
            let param = match param {
                Some(p) => p,
                None if needs_param => return Err(Failure::Usage(format!("family {family} needs --param"))),
                None => 0,
            };
            let c = exemplar_with_cap(&ExemplarSpec::new(family, param), cap()?)?;
            let text = text::constellation(&c);
            Output::one(&c, text)
        }
        Command::Enumerate { genus, nmax } => {
            let data = enumerate_galois_data(genus, nmax);
            let text = text::galois_data(&data);
            let records = data.iter().map(json).collect::<Outcome<Vec<_>>>()?;
            Ok(Output { records, text })
        }
        Command::Amplify { input, d } => {
            let (constellation, report) = amplify(&read_constellation(&input.input)?, d, cap()?)?;
            let text = text::amplify(&report);
            Output::one(&AmplifyOutput { constellation, report }, text)
        }
        Command::Invert { family, n, w } => {
            if n == 0 {
                return Err(Failure::Usage("--n must be at least 1".into()));
            }
            let w = parse_rational(&w).map_err(|e| Failure::Usage(format!("--w: {e}")))?;
            let (expr, preimages) = match family {
                InvertFamily::Power => {
                    (invert_power(n, &RadicalExpr::rational(w.clone())), power_preimages(n, &Tracked::rational(w)))
                }
                InvertFamily::Chebyshev => (
                    invert_chebyshev(n, &RadicalExpr::rational(w.clone())),
                    chebyshev_preimages(n, &Tracked::rational(w)),
                ),
            };
            let values: Vec<[f64; 2]> = expr.eval_multi()?.iter().map(|z| [z.re, z.im]).collect();
            let preimages: Vec<[f64; 2]> = preimages.iter().map(|t| [t.value.re, t.value.im]).collect();
            let text = text::invert(&expr, &preimages);
            Output::one(&InvertReport { expr, values, preimages }, text)
        }
        Command::SolveCubic { coeffs, w, radical } => {
            roots_report(solve_cubic_at(&parse_poly(&coeffs)?, &target(&w)?)?, radical)
        }
        Command::SolveQuartic { coeffs, w, radical } => {
            roots_report(solve_quartic_pencil_at(&parse_poly(&coeffs)?, &target(&w)?)?, radical)
        }
        Command::Decompose(coeffs) => {
            let p = parse_poly(&coeffs)?;
            let factors = decompose_poly(&p);
            debug_assert_eq!(compose_all(&factors), p);
            let report = DecomposeReport { critical_values: critical_values(&p)?, datum: critical_datum(&p)?, factors };
            let text = text::decompose(&report.factors, &report.datum);
            Output::one(&report, text)
        }
        Command::Ritt { coeffs, w } => {
            let p = parse_poly(&coeffs)?;
            let verdict = ritt_verdict(&p)?;
            let preimages = match (&w, verdict.invertible) {
                (Some(_), true) => Some(verdict.preimages(&target(&w)?)?),
                _ => None,
            };
            let text = text::ritt(&verdict, preimages.as_deref());
            Output::one(&RittReport { verdict, preimages }, text)
        }
    }
}

#[derive(Serialize)]
struct ErrorReport<'a> {
    error: &'a str,
    message: String,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(out) => {
            match cli.format {
                Format::Json => {
                    for r in &out.records {
                        println!("{r}");
                    }
                }
                Format::Text => println!("{}", out.text),
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}\n\nFor more information, try '--help'.");
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            let report = ErrorReport { error: e.kind(), message: e.to_string() };
            eprintln!("{}", serde_json::to_string(&report).expect("error report serializes"));
            ExitCode::from(1)
        }
    }
}
