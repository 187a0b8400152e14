//! Command-line front end: canonize, minimize, evaluate, solve, and compare
//! linear quaternion functions stored as JSON documents.
//!
//! Exit codes: 0 success, 1 internal or I/O failure, 2 parse failure,
//! 3 singular function, 4 functions not equal.

mod format;

use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use quatlin::linfun::{functions_equal, GeneralLinearFunction};
use quatlin::quat::Quaternion;
use quatlin::random::{random_function, Lcg64};
use quatlin::svd;
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "quatlin",
    version,
    about = "Canonic forms and minimal decompositions of linear quaternion functions",
    long_about = "Reads linear quaternion functions f(q) = sum_p m_p q n_p from JSON \
                  documents, reduces them through their 4x4 coefficient matrix, and \
                  prints canonic coefficients, minimal double-sided decompositions, \
                  evaluations, and inversions."
)]
struct Cli {
    /// Emit structured JSON instead of human-readable text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Side {
    /// Aq + Bqi + Cqj + Dqk
    Left,
    /// qA' + iqB' + jqC' + kqD'
    Right,
    /// Aq + qb + v1 q i + v3 q j + v5 q k
    Mixed,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce a function to one of the sixteen-coefficient canonic forms.
    Canonize {
        /// Which grouping of the coefficient matrix to extract.
        #[arg(long, value_enum)]
        side: Side,
        /// Function document ("-" reads stdin).
        input: String,
    },
    /// Rewrite a function as the shortest sum of double-sided terms.
    Minimize {
        /// Function document ("-" reads stdin).
        input: String,
    },
    /// Evaluate the function at a quaternion argument.
    Eval {
        /// Argument components w,x,y,z.
        #[arg(long, value_parser = parse_components, allow_hyphen_values = true)]
        q: [f64; 4],
        /// Function document ("-" reads stdin).
        input: String,
    },
    /// Find the argument that the function maps to a given value.
    Solve {
        /// Target components w,x,y,z.
        #[arg(long, value_parser = parse_components, allow_hyphen_values = true)]
        r: [f64; 4],
        /// Function document ("-" reads stdin).
        input: String,
    },
    /// Decide whether two documents denote the same function.
    Equal {
        /// First function document.
        a: String,
        /// Second function document.
        b: String,
        /// Relative tolerance on the coefficient-matrix difference.
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
    },
    /// Write a seeded random function document.
    Random {
        /// Number of double-sided terms.
        #[arg(long)]
        terms: usize,
        /// Generator seed; same seed and term count, same bytes.
        #[arg(long)]
        seed: u64,
        /// Output path ("-" writes stdout).
        #[arg(long)]
        out: String,
    },
    /// Show why the three-term form Aq + qB + CqD cannot be canonic.
    MeisterDemo {
        /// Generator seed.
        #[arg(long)]
        seed: u64,
    },
}

enum CliError {
    Io(String),
    Parse(String),
    Singular,
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Singular => 3,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Io(m) | CliError::Parse(m) => m.clone(),
            CliError::Singular => "function is singular".to_string(),
        }
    }
}

fn parse_components(text: &str) -> Result<[f64; 4], String> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != 4 {
        return Err(format!("expected 4 comma-separated components, got {}", parts.len()));
    }
    let mut out = [0.0; 4];
    for (slot, part) in out.iter_mut().zip(&parts) {
        let v: f64 = part
            .parse()
            .map_err(|_| format!("`{part}` is not a number"))?;
        if !v.is_finite() {
            return Err(format!("`{part}` is not finite"));
        }
        *slot = v;
    }
    Ok(out)
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::Io(format!("cannot read stdin: {e}")))?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(|e| CliError::Io(format!("cannot read {path}: {e}")))
    }
}

fn load_function(path: &str) -> Result<GeneralLinearFunction, CliError> {
    let text = read_input(path)?;
    let doc = format::FunctionDocument::parse(&text)
        .map_err(|m| CliError::Parse(format!("{path}: {m}")))?;
    Ok(doc.to_function())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("{}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Canonize { side, input } => cmd_canonize(side, &input, cli.json),
        Command::Minimize { input } => cmd_minimize(&input, cli.json),
        Command::Eval { q, input } => cmd_eval(q, &input, cli.json),
        Command::Solve { r, input } => cmd_solve(r, &input, cli.json),
        Command::Equal { a, b, tol } => cmd_equal(&a, &b, tol, cli.json),
        Command::Random { terms, seed, out } => cmd_random(terms, seed, &out),
        Command::MeisterDemo { seed } => cmd_meister_demo(seed, cli.json),
    }
}

fn cmd_canonize(side: Side, input: &str, json: bool) -> Result<u8, CliError> {
    let f = load_function(input)?;
    let m = f.matrix();
    let rank = m.numeric_rank();

    // One row per coefficient: human label, JSON key, component vector.
    struct Coefficient(&'static str, &'static str, [f64; 4]);

    let (tag, rows) = match side {
        Side::Left => {
            let cf = m.canonic_left();
            (
                "left",
                vec![
                    Coefficient("A", "a", cf.a.as_vector()),
                    Coefficient("B", "b", cf.b.as_vector()),
                    Coefficient("C", "c", cf.c.as_vector()),
                    Coefficient("D", "d", cf.d.as_vector()),
                ],
            )
        }
        Side::Right => {
            let cf = m.canonic_right();
            (
                "right",
                vec![
                    Coefficient("A'", "a", cf.a.as_vector()),
                    Coefficient("B'", "b", cf.b.as_vector()),
                    Coefficient("C'", "c", cf.c.as_vector()),
                    Coefficient("D'", "d", cf.d.as_vector()),
                ],
            )
        }
        Side::Mixed => {
            let mf = m.mixed_form();
            (
                "mixed",
                vec![
                    Coefficient("A", "a", mf.a.as_vector()),
                    Coefficient("b", "b", mf.b.as_quaternion().as_vector()),
                    Coefficient("v1", "v1", mf.v1.as_quaternion().as_vector()),
                    Coefficient("v3", "v3", mf.v3.as_quaternion().as_vector()),
                    Coefficient("v5", "v5", mf.v5.as_quaternion().as_vector()),
                ],
            )
        }
    };

    if json {
        let mut payload = serde_json::Map::new();
        for Coefficient(_, key, v) in &rows {
            payload.insert((*key).to_string(), json!(v));
        }
        let doc = json!({
            "form": tag,
            "coefficients": payload,
            "matrix": m.entries(),
            "rank": rank,
        });
        print!("{}", format::to_json_string(&doc));
    } else {
        println!("form: {tag}");
        for Coefficient(label, _, v) in &rows {
            println!("{label} = {}", format::quat(Quaternion::from_vector(*v)));
        }
        println!("matrix:");
        println!("{}", format::matrix(m.entries()));
        println!("rank: {rank}");
    }
    Ok(0)
}

fn cmd_minimize(input: &str, json: bool) -> Result<u8, CliError> {
    let f = load_function(input)?;
    let m = f.matrix();
    let factors = svd::svd(m.entries()).expect("Jacobi SVD convergence");
    let dec = svd::minimal_decomposition(&m);

    if json {
        let terms: Vec<_> = dec
            .terms
            .iter()
            .map(|t| json!({"left": t.left.as_vector(), "right": t.right.as_vector()}))
            .collect();
        let doc = json!({
            "form": "minimal",
            "rank": dec.terms.len(),
            "singular_values": factors.sigma,
            "terms": terms,
        });
        print!("{}", format::to_json_string(&doc));
    } else {
        println!("rank: {}", dec.terms.len());
        let sigma: Vec<String> = factors.sigma.iter().map(|&s| format::sig6(s)).collect();
        println!("singular values: {}", sigma.join(" "));
        for (n, t) in dec.terms.iter().enumerate() {
            println!(
                "term {}: ({}) q ({})",
                n + 1,
                format::quat(t.left),
                format::quat(t.right)
            );
        }
    }
    Ok(0)
}

fn cmd_eval(q: [f64; 4], input: &str, json: bool) -> Result<u8, CliError> {
    let f = load_function(input)?;
    let value = f.evaluate(Quaternion::from_vector(q));
    if json {
        let doc = json!({"form": "eval", "value": value.as_vector()});
        print!("{}", format::to_json_string(&doc));
    } else {
        println!("f(q) = {}", format::quat(value));
    }
    Ok(0)
}

fn cmd_solve(r: [f64; 4], input: &str, json: bool) -> Result<u8, CliError> {
    let f = load_function(input)?;
    let target = Quaternion::from_vector(r);
    let q = f.solve(target).map_err(|_| CliError::Singular)?;
    let residual = (f.evaluate(q) - target).norm();
    if json {
        let doc = json!({"form": "solve", "solution": q.as_vector(), "residual": residual});
        print!("{}", format::to_json_string(&doc));
    } else {
        println!("q = {}", format::quat(q));
        println!("residual = {}", format::sig6(residual));
    }
    Ok(0)
}

fn cmd_equal(a: &str, b: &str, tol: f64, json: bool) -> Result<u8, CliError> {
    let fa = load_function(a)?;
    let fb = load_function(b)?;
    let equal = functions_equal(&fa, &fb, tol);
    let difference = fa.matrix().max_abs_diff(&fb.matrix());
    if json {
        let doc = json!({"equal": equal, "max_difference": difference});
        print!("{}", format::to_json_string(&doc));
    } else if equal {
        println!("equal");
    } else {
        println!("not equal: max matrix difference = {}", format::sig6(difference));
    }
    Ok(if equal { 0 } else { 4 })
}

fn cmd_random(terms: usize, seed: u64, out: &str) -> Result<u8, CliError> {
    let f = random_function(terms, seed);
    let text = format::to_json_string(&format::FunctionDocument::from_function(&f));
    if out == "-" {
        print!("{text}");
    } else {
        fs::write(out, text).map_err(|e| CliError::Io(format!("cannot write {out}: {e}")))?;
    }
    Ok(0)
}

fn cmd_meister_demo(seed: u64, json: bool) -> Result<u8, CliError> {
    let mut rng = Lcg64::new(seed);
    let mf = rng.next_meister();
    let m = mf.matrix();
    let rank = m.numeric_rank();
    let general = rng.next_function(10);
    let general_rank = general.matrix().numeric_rank();

    if json {
        let doc = json!({
            "form": "meister-demo",
            "seed": seed,
            "coefficients": {
                "a": mf.a.as_vector(),
                "b": mf.b.as_vector(),
                "c": mf.c.as_vector(),
                "d": mf.d.as_vector(),
            },
            "matrix": m.entries(),
            "rank": rank,
            "general_rank": general_rank,
            "canonic": false,
        });
        print!("{}", format::to_json_string(&doc));
    } else {
        println!("Meister form f(q) = Aq + qB + CqD, seed {seed}");
        println!("A = {}", format::quat(mf.a));
        println!("B = {}", format::quat(mf.b));
        println!("C = {}", format::quat(mf.c));
        println!("D = {}", format::quat(mf.d));
        println!("matrix:");
        println!("{}", format::matrix(m.entries()));
        println!("rank: {rank}");
        println!("random 10-term function rank: {general_rank}");
        println!(
            "verdict: three rank-1 pieces top out at rank {rank} < {general_rank}, \
             so Aq + qB + CqD cannot express a general linear quaternion function"
        );
    }
    Ok(0)
}
