use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use dzrel_core::lie::ds_solve;
use dzrel_core::matrices::{
    build_a, build_a_symbolic, build_b, build_d, build_s, build_t, conjugate_m, symmetry_product,
};
use dzrel_core::numeric::{verify_relation, with_scalar_estimate};
use dzrel_core::period::{a_vector, ek_basis};
use dzrel_core::regularization::{fz_quotient_dim, shuffle_regularize, star_regularize};
use dzrel_core::relations::{correspondence_report, gkz_relations, ihara_relations, Relation};
use dzrel_core::{RatMatrix, Word};

#[derive(Parser)]
#[command(name = "dzrel", version, about = "Period polynomial relations between double zeta values")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Bracket relations modulo depth 3 and double zeta relations modulo Z(k)
    Relations {
        #[arg(long)]
        weight: usize,
        #[arg(long, value_enum, default_value_t = Kind::All)]
        kind: Kind,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Basis of restricted even period polynomials
    PeriodBasis {
        #[arg(long)]
        weight: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// One of the weight-k matrices
    Matrix {
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long)]
        weight: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Numerical check of the double zeta relations and their Z(k) scalars
    Check {
        #[arg(long)]
        weight: usize,
        #[arg(long, default_value_t = 30)]
        digits: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Correspondence checks for every even weight in a range
    Report {
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Basis of the double shuffle Lie algebra in one weight
    DsSolve {
        #[arg(long)]
        weight: usize,
    },
    /// Shuffle (or with --star, stuffle) regularization of a word in x, y
    Regularize {
        #[arg(long)]
        word: String,
        #[arg(long)]
        star: bool,
    },
    /// Dimension of the formal double zeta space in one weight
    FzDim {
        #[arg(long)]
        weight: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Bracket,
    Zeta,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    #[value(name = "A")]
    A,
    #[value(name = "Asym")]
    Asym,
    #[value(name = "M")]
    M,
    #[value(name = "S")]
    S,
    #[value(name = "T")]
    T,
    #[value(name = "D")]
    D,
    #[value(name = "B")]
    B,
    #[value(name = "tADB")]
    TAdb,
}

enum Failure {
    Usage(String),
    Check,
}

impl From<dzrel_core::Error> for Failure {
    fn from(e: dzrel_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("values serialize") + "\n"
}

fn unsupported(format: Format, cmd: &str) -> Failure {
    let name = match format {
        Format::Text => "text",
        Format::Json => "json",
        Format::Csv => "csv",
    };
    Failure::Usage(format!("format {name} is not available for {cmd}"))
}

fn relations_csv(rels: &[Relation]) -> String {
    let mut out = String::from("index,kind,weight,r,s,coeff\n");
    for (i, rel) in rels.iter().enumerate() {
        let kind = match rel.kind {
            dzrel_core::relations::RelationKind::Bracket => "bracket",
            dzrel_core::relations::RelationKind::DoubleZeta => "double_zeta",
        };
        for t in &rel.terms {
            writeln!(out, "{i},{kind},{},{},{},{}", rel.weight, t.r, t.s, t.coeff).unwrap();
        }
    }
    out
}

fn lines<T: ToString>(items: &[T]) -> String {
    items.iter().map(|x| x.to_string() + "\n").collect()
}

fn relations(weight: usize, kind: Kind, format: Format) -> Outcome {
    let mut rels = Vec::new();
    if matches!(kind, Kind::Bracket | Kind::All) {
        rels.extend(ihara_relations(weight)?);
    }
    if matches!(kind, Kind::Zeta | Kind::All) {
        rels.extend(gkz_relations(weight)?);
    }
    Ok(match format {
        Format::Text => lines(&rels),
        Format::Json => json(&rels),
        Format::Csv => relations_csv(&rels),
    })
}

fn period_basis(weight: usize, format: Format) -> Outcome {
    let basis = ek_basis(weight)?;
    match format {
        Format::Text => Ok(lines(&basis)),
        Format::Json => Ok(json(&basis)),
        Format::Csv => {
            let mut out = String::from("index,i,a_i\n");
            for (j, p) in basis.iter().enumerate() {
                for (i, a) in a_vector(p)?.iter().enumerate() {
                    writeln!(out, "{j},{},{a}", i + 1).unwrap();
                }
            }
            Ok(out)
        }
    }
}

fn matrix(which: Which, weight: usize, format: Format) -> Outcome {
    let m: RatMatrix = match which {
        Which::A => build_a(weight)?,
        Which::Asym => build_a_symbolic(weight)?,
        Which::M => conjugate_m(weight)?,
        Which::S => build_s(weight)?,
        Which::T => build_t(weight)?,
        Which::D => build_d(weight)?,
        Which::B => build_b(weight)?,
        Which::TAdb => symmetry_product(weight)?,
    };
    Ok(match format {
        Format::Text => format!("{m}\n"),
        Format::Csv => m.to_csv(),
        Format::Json => json(&m),
    })
}

fn check(weight: usize, digits: u32, format: Format) -> Outcome {
    if digits < 10 {
        return Err(Failure::Usage("--digits must be at least 10".into()));
    }
    let rels = gkz_relations(weight)?;
    let mut text = String::new();
    let mut results = Vec::new();
    let mut ok = true;
    for rel in &rels {
        let c = verify_relation(rel, digits)?;
        let passed = c.stable && c.relation_residual.below_decimal(digits - 5);
        ok &= passed;
        let lhs = rel.to_string();
        let lhs = lhs.split(" ≡").next().unwrap_or_default();
        writeln!(text, "{lhs} = {} Z({weight})", c.scalar).unwrap();
        writeln!(text, "  ratio    {:.prec$}", c.ratio, prec = digits as usize).unwrap();
        writeln!(text, "  residual {:.3e}", c.relation_residual.to_f64()).unwrap();
        writeln!(text, "  {}", if passed { "ok" } else { "FAILED" }).unwrap();
        results.push(serde_json::json!({
            "relation": with_scalar_estimate(rel, &c),
            "check": c,
            "passed": passed,
        }));
    }
    if rels.is_empty() {
        writeln!(text, "no double zeta relations in weight {weight}").unwrap();
    }
    let out = match format {
        Format::Text => text,
        Format::Json => json(&results),
        Format::Csv => return Err(unsupported(format, "check")),
    };
    print!("{out}");
    if ok {
        Ok(String::new())
    } else {
        Err(Failure::Check)
    }
}

fn report(from: usize, to: usize, format: Format) -> Outcome {
    if from > to {
        return Err(Failure::Usage(format!("empty range {from}..{to}")));
    }
    let mut reports = Vec::new();
    for k in (from..=to).filter(|k| k % 2 == 0) {
        reports.push(correspondence_report(k)?);
    }
    let out = match format {
        Format::Text => {
            let mut s = String::new();
            for r in &reports {
                writeln!(s, "weight {}: {}", r.weight, if r.all_ok() { "ok" } else { "FAILED" }).unwrap();
                for line in r.summary_lines() {
                    writeln!(s, "  {line}").unwrap();
                }
            }
            s
        }
        Format::Json => json(&reports),
        Format::Csv => return Err(unsupported(format, "report")),
    };
    print!("{out}");
    if reports.iter().all(|r| r.all_ok()) {
        Ok(String::new())
    } else {
        Err(Failure::Check)
    }
}

fn ds(weight: usize) -> Outcome {
    let basis = ds_solve(weight)?;
    let mut out = format!("dim {}\n", basis.len());
    out += &lines(&basis);
    Ok(out)
}

fn regularize(word: &str, star: bool) -> Outcome {
    let w: Word = word.parse()?;
    let z = if star { star_regularize(w)? } else { shuffle_regularize(w) };
    Ok(format!("{z}\n"))
}

fn fz_dim(weight: usize) -> Outcome {
    let q = fz_quotient_dim(weight)?;
    let mut out = format!("weight {}: {} symbols, dimension {}\n", q.weight, q.symbols, q.dim);
    for r in &q.relations {
        writeln!(out, "{r} = 0").unwrap();
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Relations { weight, kind, format } => relations(weight, kind, format),
        Command::PeriodBasis { weight, format } => period_basis(weight, format),
        Command::Matrix { which, weight, format } => matrix(which, weight, format),
        Command::Check { weight, digits, format } => check(weight, digits, format),
        Command::Report { from, to, format } => report(from, to, format),
        Command::DsSolve { weight } => ds(weight),
        Command::Regularize { word, star } => regularize(&word, star),
        Command::FzDim { weight } => fz_dim(weight),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
