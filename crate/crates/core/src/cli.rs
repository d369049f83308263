//! Command-line front end. [`run`] does all the work and returns the exit
//! status with the text to print, so it can be tested without a process.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::characters::{character_table, display_class_order, ClassFunction};
use crate::classify::{classify, IrredMultiset, Verdict};
use crate::error::{Error, Result};
use crate::graded::{
    coinvariant_character, hilbert_series, polynomial_ring_character, quotient_character, socle_analysis, Case,
    GradedCharacter, RepresentationType,
};
use crate::oracle::{is_regular_sequence, quotient_graded_character, GeneratorSet};
use crate::partitions::{partitions_of, Partition};
use crate::perm::Permutation;
use crate::tableaux::kostka_foulkes_tilde;

pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "symci", version, about = "Graded characters of S_n-stable complete intersections")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Graded character of R/I from the closed formula.
    Character {
        #[arg(long)]
        n: usize,
        #[arg(long = "case")]
        case: Case,
        /// Degree of the non-trivial summand (cases II-IV).
        #[arg(long)]
        d: Option<usize>,
        /// Comma-separated degrees of the trivial summands.
        #[arg(long, default_value = "")]
        c: String,
        /// Truncation degree for non-artinian quotients.
        #[arg(long)]
        bound: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether a decomposition of I/mI is possible.
    Classify {
        /// JSON file: {"n": 4, "summands": [{"partition": [2,2], "degree": 2}, ...]}
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Compare the formula with brute-force traces on explicit generators.
    Verify {
        #[arg(long)]
        gens: PathBuf,
        /// Representation type, e.g. "case IV d=2 c=2,3".
        #[arg(long, num_args = 1..)]
        against: Vec<String>,
        /// Truncation degree for non-artinian quotients.
        #[arg(long)]
        bound: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Character table of S_n and the modified Kostka-Foulkes polynomials.
    Tables {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Reproduce the worked n = 4 computations.
    Examples {
        #[arg(long)]
        json: bool,
    },
}

/// Runs one command. Returns the exit status and everything to print.
pub fn run(command: &Command) -> (i32, String) {
    let json = match command {
        Command::Character { json, .. }
        | Command::Classify { json, .. }
        | Command::Verify { json, .. }
        | Command::Tables { json, .. }
        | Command::Examples { json } => *json,
    };
    let result = match command {
        Command::Character {
            n,
            case,
            d,
            c,
            bound,
            json,
        } => character(*n, *case, *d, c, *bound, *json),
        Command::Classify { input, json } => classify_file(input, *json),
        Command::Verify {
            gens,
            against,
            bound,
            json,
        } => verify(gens, &against.join(" "), *bound, *json),
        Command::Tables { n, json } => tables(*n, *json),
        Command::Examples { json } => Ok((EXIT_OK, examples(*json))),
    };
    match result {
        Ok(out) => out,
        Err(e) if json => (
            EXIT_INVALID,
            envelope("error", json!({ "message": e.to_string() })) + "\n",
        ),
        Err(e) => (EXIT_INVALID, format!("error: {e}\n")),
    }
}

fn envelope(command: &str, mut body: Value) -> String {
    if let Value::Object(map) = &mut body {
        map.insert("schema_version".into(), json!(SCHEMA_VERSION));
        map.insert("command".into(), json!(command));
    }
    serde_json::to_string_pretty(&body).expect("serializable")
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn hilbert_line(g: &GradedCharacter) -> String {
    let h: Vec<String> = hilbert_series(g).iter().map(|x| x.to_string()).collect();
    h.join(" ")
}

fn character(
    n: usize,
    case: Case,
    d: Option<usize>,
    c: &str,
    bound: Option<usize>,
    json: bool,
) -> Result<(i32, String)> {
    let mut spec = format!("case {case}");
    if let Some(d) = d {
        write!(spec, " d={d}").unwrap();
    }
    write!(spec, " c={c}").unwrap();
    let rt: RepresentationType = spec.parse()?;
    let g = quotient_character(&rt, n, bound)?;
    let socle = socle_analysis(&g).ok();
    if json {
        let body = json!({
            "n": n,
            "representation_type": to_value(&rt),
            "character": to_value(&g),
            "hilbert_series": hilbert_series(&g).iter().map(|x| x.to_string().parse::<i64>().unwrap_or(i64::MAX)).collect::<Vec<_>>(),
            "socle": socle.as_ref().map(to_value),
        });
        return Ok((EXIT_OK, envelope("character", body) + "\n"));
    }
    let mut out = String::new();
    writeln!(out, "{rt}, n = {n}").unwrap();
    writeln!(out, "{g}").unwrap();
    writeln!(out, "hilbert: {}", hilbert_line(&g)).unwrap();
    if let Some(s) = socle {
        let kind = if s.top_is_trivial {
            "trivial"
        } else if s.top_is_alternating {
            "alternating"
        } else {
            "other"
        };
        writeln!(out, "socle: degree {}, {kind}", s.top_degree).unwrap();
    }
    Ok((EXIT_OK, out))
}

fn read(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        message: format!("{}: {e}", path.display()),
    })
}

fn classify_file(path: &PathBuf, json: bool) -> Result<(i32, String)> {
    let text = read(path)?;
    let ms: IrredMultiset = serde_json::from_str(&text).map_err(|e| Error::Parse {
        line: e.line(),
        message: e.to_string(),
    })?;
    let verdict = classify(&ms)?;
    if json {
        return Ok((EXIT_OK, envelope("classify", to_value(&verdict)) + "\n"));
    }
    let out = match verdict {
        Verdict::Accepted(c) => {
            let note = if c.degenerate_small_n { " (degenerate small n)" } else { "" };
            format!("accepted: {}{note}\n", c.representation_type)
        }
        Verdict::Rejected(r) => {
            let w: Vec<String> = r.witness.iter().map(|s| s.to_string()).collect();
            format!("rejected by {}: {}\nwitness: {}\n", r.rule, r.reason, w.join(", "))
        }
    };
    Ok((EXIT_OK, out))
}

fn verify(path: &PathBuf, against: &str, bound: Option<usize>, json: bool) -> Result<(i32, String)> {
    let gs = GeneratorSet::parse(&read(path)?)?;
    let n = gs.n();
    let rt: RepresentationType = against.parse()?;
    let formula = quotient_character(&rt, n, bound)?;
    // One degree past the top lets the oracle see the quotient vanish.
    let horizon = match formula.top_degree() {
        Some(e) => e + 1,
        None => formula.bound(),
    };
    let oracle = quotient_graded_character(&gs, horizon)?;
    let regularity = is_regular_sequence(&gs, None)?;

    let mut rows = Vec::new();
    let mut all_match = formula.is_exact() == oracle.is_exact();
    for d in 0..=horizon {
        let (Ok(f), Ok(o)) = (formula.coefficient(d), oracle.coefficient(d)) else {
            continue;
        };
        let ok = f == o;
        all_match &= ok;
        rows.push((d, ok, f, o));
    }
    let status = if all_match { EXIT_OK } else { EXIT_MISMATCH };
    if json {
        let degrees: Vec<Value> = rows
            .iter()
            .map(|(d, ok, f, o)| json!({ "degree": d, "match": ok, "formula": to_value(f), "oracle": to_value(o) }))
            .collect();
        let body = json!({
            "n": n,
            "representation_type": to_value(&rt),
            "match": all_match,
            "formula_exact": formula.is_exact(),
            "oracle_exact": oracle.is_exact(),
            "degrees": degrees,
            "regularity": to_value(&regularity),
        });
        return Ok((status, envelope("verify", body) + "\n"));
    }
    let mut out = String::new();
    writeln!(out, "{rt}, n = {n}, generator degrees {:?}", gs.degrees()).unwrap();
    for (d, ok, f, o) in &rows {
        if *ok {
            writeln!(out, "degree {d}: MATCH {}", f.to_chi_string()).unwrap();
        } else {
            writeln!(out, "degree {d}: MISMATCH formula {} oracle {}", f.to_chi_string(), o.to_chi_string()).unwrap();
        }
    }
    if formula.is_exact() != oracle.is_exact() {
        writeln!(
            out,
            "MISMATCH: formula is {}, oracle is {}",
            if formula.is_exact() { "a polynomial" } else { "truncated" },
            if oracle.is_exact() { "a polynomial" } else { "truncated" },
        )
        .unwrap();
    }
    writeln!(out, "regular sequence: {} ({})", regularity.regular, regularity.note).unwrap();
    writeln!(out, "{}", if all_match { "MATCH" } else { "MISMATCH" }).unwrap();
    Ok((status, out))
}

fn class_label(mu: &Partition) -> String {
    Permutation::from_cycle_type(mu).to_string()
}

fn render_table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let width: Vec<usize> = (0..cols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for r in rows {
        let cells: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(c, s)| {
                let pad = width[c] - s.chars().count();
                if c == 0 {
                    format!("{s}{}", " ".repeat(pad))
                } else {
                    format!("{}{s}", " ".repeat(pad))
                }
            })
            .collect();
        writeln!(out, "{}", cells.join("  ").trim_end()).unwrap();
    }
    out
}

fn tables(n: usize, json: bool) -> Result<(i32, String)> {
    if n == 0 {
        return Err(Error::InvalidPartition("tables need n ≥ 1".into()));
    }
    let classes = display_class_order(n);
    let table = character_table(n);
    let column = Partition::column(n);
    if json {
        let chars: Vec<Value> = table
            .iter()
            .map(|(l, c)| json!({ "partition": to_value(l), "values": to_value(c) }))
            .collect();
        let sizes: Vec<Value> = classes
            .iter()
            .map(|mu| json!({ "cycle_type": to_value(mu), "representative": class_label(mu), "size": mu.class_size().to_string().parse::<u64>().unwrap_or(u64::MAX) }))
            .collect();
        let kostka: Vec<Value> = partitions_of(n)
            .iter()
            .map(|l| json!({ "partition": to_value(l), "polynomial": to_value(&kostka_foulkes_tilde(l, &column)) }))
            .collect();
        let body = json!({ "n": n, "classes": sizes, "characters": chars, "kostka_foulkes_tilde": kostka });
        return Ok((EXIT_OK, envelope("tables", body) + "\n"));
    }
    let mut rows = vec![
        std::iter::once(String::new()).chain(classes.iter().map(class_label)).collect::<Vec<_>>(),
        std::iter::once("size".to_string())
            .chain(classes.iter().map(|mu| mu.class_size().to_string()))
            .collect(),
    ];
    for (lambda, chi) in &table {
        rows.push(
            std::iter::once(format!("χ[{}]", lambda.to_plain_string()))
                .chain(classes.iter().map(|mu| chi.value(mu).to_string()))
                .collect(),
        );
    }
    let mut out = format!("character table of S_{n}\n");
    out.push_str(&render_table(&rows));
    writeln!(out, "\nmodified Kostka-Foulkes polynomials K̃[λ,{}]", column.to_exponent_string()).unwrap();
    let krows: Vec<Vec<String>> = partitions_of(n)
        .iter()
        .map(|l| vec![format!("λ = {l}"), kostka_foulkes_tilde(l, &column).to_string()])
        .collect();
    out.push_str(&render_table(&krows));
    Ok((EXIT_OK, out))
}

/// The worked `n = 4` computations, as `(label, representation type)`.
pub const WORKED_TYPES: [(&str, &str); 4] = [
    ("I = (e1^3, e1^2 - e2, e3, e4)", "case I c=2,3,3,4"),
    ("I = (e1^2, e2, e3, vdm)", "case II d=6 c=2,2,3"),
    ("I = (x1^2, x2^2, x3^2, x4^2)", "case III d=2 c=2"),
    ("I = (g1, g2, e2, e1^3)", "case IV d=2 c=2,3"),
];

fn examples(json: bool) -> String {
    let n = 4;
    let column = Partition::column(n);
    let kostka: Vec<(Partition, String)> = partitions_of(n)
        .into_iter()
        .map(|l| {
            let k = kostka_foulkes_tilde(&l, &column).to_string();
            (l, k)
        })
        .collect();
    let coinv = coinvariant_character(n);
    let ring = polynomial_ring_character(n, 4);
    let quotients: Vec<(&str, RepresentationType, GradedCharacter)> = WORKED_TYPES
        .iter()
        .map(|(label, s)| {
            let rt: RepresentationType = s.parse().expect("valid type");
            let g = quotient_character(&rt, n, None).expect("admissible type");
            (*label, rt, g)
        })
        .collect();

    if json {
        let body = json!({
            "kostka_foulkes_tilde": kostka.iter().map(|(l, k)| json!({ "partition": to_value(l), "polynomial": k })).collect::<Vec<_>>(),
            "coinvariant": to_value(&coinv),
            "polynomial_ring": to_value(&ring),
            "quotients": quotients.iter().map(|(label, rt, g)| json!({
                "ideal": label,
                "representation_type": to_value(rt),
                "character": to_value(g),
                "socle": socle_analysis(g).ok().map(|s| to_value(&s)),
            })).collect::<Vec<_>>(),
        });
        return envelope("examples", body) + "\n";
    }
    let mut out = String::new();
    writeln!(out, "modified Kostka-Foulkes polynomials, n = 4").unwrap();
    for (l, k) in &kostka {
        writeln!(out, "  K̃[{l},{}] = {k}", column.to_exponent_string()).unwrap();
    }
    writeln!(out, "\ncoinvariant algebra R_S4\n  {coinv}").unwrap();
    writeln!(out, "\npolynomial ring R\n  {ring}").unwrap();
    for (label, rt, g) in &quotients {
        writeln!(out, "\n{label}: {rt}\n  {g}").unwrap();
        writeln!(out, "  hilbert: {}", hilbert_line(g)).unwrap();
        if let Ok(s) = socle_analysis(g) {
            let kind = if s.top_is_alternating { "alternating" } else if s.top_is_trivial { "trivial" } else { "other" };
            writeln!(out, "  socle: degree {}, {kind}", s.top_degree).unwrap();
        }
    }
    out
}

/// Renders a class function as a single table row, columns in display order.
pub fn class_function_row(cf: &ClassFunction) -> String {
    let cells: Vec<String> = display_class_order(cf.n())
        .iter()
        .map(|mu| cf.value(mu).to_string())
        .collect();
    cells.join(" ")
}
