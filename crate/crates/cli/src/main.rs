//! `icm`: inspect numerical semigroups, their normalized ideals and the
//! posets those ideals form.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ideal_lattice::ideal::{format_kunz, parse_kunz};
use ideal_lattice::order::BoundFailure;
use ideal_lattice::verify::{self, VerificationReport};
use ideal_lattice::{
    irreducibles_in, plus_irreducibles, Direction, Distributivity, Error, IdealFamily,
    IrreducibleKind, NormalizedIdeal, NumericalSemigroup, OrderKind, OrderStructure,
};

#[derive(Parser)]
#[command(
    name = "icm",
    version,
    about = "Normalized ideals of numerical semigroups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,

    /// Write output here instead of standard output.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants of the semigroup generated by GENS.
    Info { gens: Vec<String> },
    /// Kunz coordinates of every normalized ideal.
    Ideals { gens: Vec<String> },
    /// A single ideal given by its Kunz coordinates, e.g. "(0,0,2)".
    Ideal {
        gens: Vec<String>,
        #[arg(long)]
        ideal: String,
    },
    /// The poset of normalized ideals: size, covers, lattice and distributivity.
    Poset {
        gens: Vec<String>,
        #[arg(long, value_enum, default_value_t = Kind::Preceq)]
        kind: Kind,
        /// Shorthand for `--format dot`.
        #[arg(long)]
        dot: bool,
    },
    /// Ideals irreducible for the given operation.
    Irreducibles {
        gens: Vec<String>,
        #[arg(long, value_enum)]
        kind: Irreducible,
    },
    /// Run a finite check of a structural claim.
    Verify {
        #[arg(value_enum)]
        claim: Claim,
        /// Genus bound for sweeps (multiplicity bound for ordinary-extension).
        #[arg(long, default_value_t = 8)]
        genus: usize,
        /// A single semigroup, as comma separated generators.
        #[arg(long)]
        sg: Option<String>,
        /// The generator to remove from `--sg`.
        #[arg(long = "gen")]
        generator: Option<i64>,
        /// A single ordinary semigroup H_m.
        #[arg(long)]
        m: Option<u32>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Preceq,
    Subset,
}

impl From<Kind> for OrderKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Preceq => OrderKind::Preceq,
            Kind::Subset => OrderKind::Subset,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Irreducible {
    Plus,
    Join,
    Meet,
    Union,
    Intersection,
}

impl From<Irreducible> for IrreducibleKind {
    fn from(k: Irreducible) -> Self {
        match k {
            Irreducible::Plus => IrreducibleKind::Plus,
            Irreducible::Join => IrreducibleKind::Join,
            Irreducible::Meet => IrreducibleKind::Meet,
            Irreducible::Union => IrreducibleKind::Union,
            Irreducible::Intersection => IrreducibleKind::Intersection,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Claim {
    UnitaryExtension,
    OrdinaryExtension,
    DownwardLemma,
    LatticeThreshold,
    Irreducibility,
}

/// Why a command did not succeed, mapped onto the exit status.
enum Failure {
    Usage(String),
    Library(Error),
    /// The report was already printed.
    Refuted,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(&cli, &mut out);
    if !out.is_empty() {
        let written = match &cli.output {
            Some(path) => {
                std::fs::write(path, &out).map_err(|e| format!("{}: {e}", path.display()))
            }
            None => {
                print!("{out}");
                Ok(())
            }
        };
        if let Err(e) = written {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Refuted) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Library(e)) => {
            eprintln!("error: {e}");
            match e {
                Error::PreconditionViolated(_) | Error::NotALattice => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn run(cli: &Cli, out: &mut String) -> Outcome {
    let format = cli.format;
    match &cli.command {
        Command::Info { gens } => info(&semigroup(gens)?, format, out),
        Command::Ideals { gens } => ideals(&semigroup(gens)?, format, out),
        Command::Ideal { gens, ideal } => single_ideal(&semigroup(gens)?, ideal, format, out),
        Command::Poset { gens, kind, dot } => {
            let format = if *dot { Format::Dot } else { format };
            poset(&semigroup(gens)?, (*kind).into(), format, out)
        }
        Command::Irreducibles { gens, kind } => {
            irreducible(&semigroup(gens)?, (*kind).into(), format, out)
        }
        Command::Verify {
            claim,
            genus,
            sg,
            generator,
            m,
        } => verify_claim(*claim, *genus, sg.as_deref(), *generator, *m, format, out),
    }
}

/// Generators may be given as separate arguments, comma separated, or both.
fn parse_generators<S: AsRef<str>>(args: &[S]) -> Result<Vec<u32>, Failure> {
    let gens: Vec<u32> = args
        .iter()
        .flat_map(|a| {
            a.as_ref()
                .split(',')
                .map(str::to_string)
                .collect::<Vec<_>>()
        })
        .map(|t| t.trim().to_string())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<u32>()
                .map_err(|_| Failure::Usage(format!("not a non-negative integer: {t}")))
        })
        .collect::<Result<_, _>>()?;
    if gens.is_empty() {
        return Err(Failure::Usage("no generators given".to_string()));
    }
    Ok(gens)
}

fn semigroup<S: AsRef<str>>(args: &[S]) -> Result<Arc<NumericalSemigroup>, Failure> {
    let gens = parse_generators(args)?;
    Ok(Arc::new(NumericalSemigroup::from_generators(&gens)?))
}

fn list(xs: impl IntoIterator<Item = impl ToString>) -> String {
    xs.into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn semigroup_json(s: &NumericalSemigroup) -> Value {
    json!({
        "generators": s.generators(),
        "multiplicity": s.multiplicity(),
        "embedding_dimension": s.embedding_dimension(),
        "frobenius": s.frobenius(),
        "conductor": s.conductor(),
        "genus": s.genus(),
        "gaps": s.gaps(),
        "kunz": s.kunz(),
    })
}

fn ideal_json(i: &NormalizedIdeal) -> Value {
    json!({
        "kunz": format_kunz(i.kunz()),
        "genus": i.genus(),
        "frobenius": i.frobenius(),
        "minimal_generators": i.minimal_generators(),
    })
}

fn document(s: &NumericalSemigroup, ideals: Value, order: Value, verdicts: Value) -> String {
    let doc = json!({
        "semigroup": semigroup_json(s),
        "ideals": ideals,
        "order": order,
        "verdicts": verdicts,
    });
    let mut text = serde_json::to_string_pretty(&doc).expect("plain JSON values");
    text.push('\n');
    text
}

fn no_dot(format: Format) -> Outcome {
    if format == Format::Dot {
        return Err(Failure::Usage(
            "dot output is only available for poset".to_string(),
        ));
    }
    Ok(())
}

fn info(s: &Arc<NumericalSemigroup>, format: Format, out: &mut String) -> Outcome {
    no_dot(format)?;
    if format == Format::Json {
        out.push_str(&document(s, Value::Null, Value::Null, Value::Null));
        return Ok(());
    }
    let _ = writeln!(out, "semigroup: {s}");
    let _ = writeln!(out, "multiplicity: {}", s.multiplicity());
    let _ = writeln!(out, "embedding dimension: {}", s.embedding_dimension());
    let _ = writeln!(out, "frobenius: {}", s.frobenius());
    let _ = writeln!(out, "conductor: {}", s.conductor());
    let _ = writeln!(out, "genus: {}", s.genus());
    let _ = writeln!(out, "gaps: {}", list(s.gaps()));
    let _ = writeln!(out, "minimal generators: {}", list(s.generators()));
    let _ = writeln!(out, "kunz: {}", format_kunz(s.kunz()));
    Ok(())
}

fn ideals(s: &Arc<NumericalSemigroup>, format: Format, out: &mut String) -> Outcome {
    no_dot(format)?;
    let family = IdealFamily::enumerate(s);
    if format == Format::Json {
        let ideals: Vec<Value> = family.iter().map(ideal_json).collect();
        out.push_str(&document(s, Value::Array(ideals), Value::Null, Value::Null));
        return Ok(());
    }
    for i in &family {
        let _ = writeln!(out, "{i}");
    }
    Ok(())
}

fn single_ideal(
    s: &Arc<NumericalSemigroup>,
    text: &str,
    format: Format,
    out: &mut String,
) -> Outcome {
    no_dot(format)?;
    let kunz = parse_kunz(text)
        .ok_or_else(|| Failure::Usage(format!("not a Kunz coordinate vector: {text}")))?;
    let ideal = NormalizedIdeal::from_kunz(s, kunz)?;
    if format == Format::Json {
        out.push_str(&document(
            s,
            json!([ideal_json(&ideal)]),
            Value::Null,
            Value::Null,
        ));
        return Ok(());
    }
    let small: Vec<i64> = (0..s.conductor() as i64)
        .filter(|&n| ideal.contains(n))
        .collect();
    let _ = writeln!(out, "kunz: {ideal}");
    let _ = writeln!(out, "genus: {}", ideal.genus());
    let _ = writeln!(out, "frobenius: {}", ideal.frobenius());
    let _ = writeln!(
        out,
        "minimal generators: {}",
        list(ideal.minimal_generators())
    );
    let _ = writeln!(out, "elements below {}: {}", s.conductor(), list(small));
    Ok(())
}

fn bound_failure_text(family: &IdealFamily, f: &BoundFailure) -> (String, String, Vec<String>) {
    let what = match f.direction {
        Direction::Upper => "join",
        Direction::Lower => "meet",
    };
    let pair = format!("{} {}", family.get(f.pair.0), family.get(f.pair.1));
    let bounds = f
        .bounds
        .iter()
        .map(|&b| family.get(b).to_string())
        .collect();
    (what.to_string(), pair, bounds)
}

fn poset(
    s: &Arc<NumericalSemigroup>,
    kind: OrderKind,
    format: Format,
    out: &mut String,
) -> Outcome {
    let family = Arc::new(IdealFamily::enumerate(s));
    let order = OrderStructure::build(family.clone(), kind);
    if format == Format::Dot {
        out.push_str(&order.to_dot());
        return Ok(());
    }
    let edges = order.cover_edges();
    let failure = order.lattice_failure();
    let distributivity = match failure {
        None => Some(order.distributivity()?),
        Some(_) => None,
    };
    let witness = match &distributivity {
        Some(Distributivity::NonDistributive { witness, .. }) => witness.clone(),
        _ => None,
    };

    if format == Format::Json {
        let kunz = |i: usize| format_kunz(family.get(i).kunz());
        let failure_json = failure.as_ref().map(|f| {
            let (what, _, _) = bound_failure_text(&family, f);
            json!({
                "missing": what,
                "pair": [kunz(f.pair.0), kunz(f.pair.1)],
                "bounds": f.bounds.iter().map(|&b| kunz(b)).collect::<Vec<_>>(),
            })
        });
        let sublattice_json = witness.as_ref().map(|w| {
            json!({
                "shape": w.shape,
                "elements": w.elements().iter().map(|&i| kunz(i)).collect::<Vec<_>>(),
            })
        });
        let order_json = json!({
            "kind": kind.name(),
            "size": order.len(),
            "cover_edges": edges.iter().map(|&(a, b)| [kunz(a), kunz(b)]).collect::<Vec<_>>(),
        });
        let verdicts = json!({
            "lattice": failure.is_none(),
            "lattice_failure": failure_json,
            "distributive": distributivity.as_ref().map(|d| *d == Distributivity::Distributive),
            "sublattice": sublattice_json,
        });
        let ideals: Vec<Value> = family
            .iter()
            .map(|i| json!(format_kunz(i.kunz())))
            .collect();
        out.push_str(&document(s, Value::Array(ideals), order_json, verdicts));
        return Ok(());
    }

    let yes_no = |b: bool| if b { "yes" } else { "no" };
    let _ = writeln!(out, "order: {}", kind.name());
    let _ = writeln!(out, "size: {}", order.len());
    let _ = writeln!(out, "cover edges: {}", edges.len());
    let _ = writeln!(out, "lattice: {}", yes_no(failure.is_none()));
    if let Some(f) = &failure {
        let (what, pair, bounds) = bound_failure_text(&family, f);
        let _ = writeln!(out, "no {what}: {pair}");
        let _ = writeln!(out, "extremal bounds: {}", bounds.join(" "));
    }
    if let Some(d) = &distributivity {
        let _ = writeln!(
            out,
            "distributive: {}",
            yes_no(*d == Distributivity::Distributive)
        );
    }
    if let Some(w) = &witness {
        let name = match w.shape {
            ideal_lattice::SublatticeShape::Pentagon => "pentagon",
            ideal_lattice::SublatticeShape::Diamond => "diamond",
        };
        let _ = writeln!(
            out,
            "{name}: {}",
            list(w.elements().iter().map(|&i| family.get(i)))
        );
    }
    Ok(())
}

fn irreducible(
    s: &Arc<NumericalSemigroup>,
    kind: IrreducibleKind,
    format: Format,
    out: &mut String,
) -> Outcome {
    no_dot(format)?;
    let family = Arc::new(IdealFamily::enumerate(s));
    let found = match kind.order_kind() {
        None => plus_irreducibles(&family),
        Some(order_kind) => {
            irreducibles_in(&OrderStructure::build(family.clone(), order_kind), kind)?
        }
    };
    if format == Format::Json {
        let ideals: Vec<Value> = found.iter().map(|&i| ideal_json(family.get(i))).collect();
        let verdicts = json!({ "irreducible": kind.name(), "count": found.len() });
        out.push_str(&document(s, Value::Array(ideals), Value::Null, verdicts));
        return Ok(());
    }
    for i in found {
        let _ = writeln!(out, "{}", family.get(i));
    }
    Ok(())
}

fn verify_claim(
    claim: Claim,
    genus: usize,
    sg: Option<&str>,
    generator: Option<i64>,
    m: Option<u32>,
    format: Format,
    out: &mut String,
) -> Outcome {
    no_dot(format)?;
    let single = match (sg, generator) {
        (Some(sg), Some(a)) => Some((semigroup(&[sg])?, a)),
        (None, None) => None,
        _ => return Err(Failure::Usage("--sg and --gen go together".to_string())),
    };
    let report = match claim {
        Claim::UnitaryExtension => match &single {
            Some((s, a)) => match verify::verify_unitary_extension(s, *a) {
                Err(Error::PreconditionViolated(msg)) => {
                    return precondition_with_comparison(s, *a, msg, format, out)
                }
                r => r?,
            },
            None => verify::verify_unitary_extension_sweep(genus),
        },
        Claim::DownwardLemma => match &single {
            Some((s, a)) => verify::verify_downward_lemma(s, *a)?,
            None => verify::verify_downward_lemma_sweep(genus),
        },
        Claim::OrdinaryExtension => match m {
            Some(m) => verify::verify_ordinary_extension(m)?,
            None => verify::verify_ordinary_extension_sweep(genus as u32),
        },
        Claim::LatticeThreshold => verify::verify_lattice_threshold(genus),
        Claim::Irreducibility => verify::verify_irreducibility(genus),
    };
    write_report(&report, format, out);
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Refuted)
    }
}

fn write_report(report: &VerificationReport, format: Format, out: &mut String) {
    if format == Format::Json {
        let mut text = serde_json::to_string_pretty(&json!({ "verdicts": [report] }))
            .expect("plain JSON values");
        text.push('\n');
        out.push_str(&text);
    } else {
        out.push_str(&report.to_string());
    }
}

/// Reports the violated precondition, then compares the two families
/// directly so the effect of dropping the hypothesis is visible.
fn precondition_with_comparison(
    s: &NumericalSemigroup,
    a: i64,
    msg: String,
    format: Format,
    out: &mut String,
) -> Outcome {
    let deviations = verify::unitary_extension_deviations(s, a).unwrap_or_default();
    if format == Format::Json {
        let doc = json!({ "precondition": msg, "deviations": deviations });
        let mut text = serde_json::to_string_pretty(&doc).expect("plain JSON values");
        text.push('\n');
        out.push_str(&text);
    } else {
        let _ = writeln!(out, "precondition violated: {msg}");
        let _ = writeln!(out, "direct comparison: {} deviations", deviations.len());
        for w in &deviations {
            let _ = writeln!(
                out,
                "- {}: {}",
                list(w.ideals.iter().map(|x| format_kunz(x))),
                w.statement
            );
            let _ = writeln!(out, "  expected: {}", w.expected);
            let _ = writeln!(out, "  actual: {}", w.actual);
        }
    }
    Err(Failure::Library(Error::PreconditionViolated(msg)))
}
