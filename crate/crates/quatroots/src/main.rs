use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use quatroots::analysis::{
    self, ClassifyOptions, FlagStatus,
};
use quatroots::bezout::{barnett_stack, bezout_matrix, sylvester_resultant};
use quatroots::parse::parse_poly;
use quatroots::poly::{decompose, split_complex, QuatPoly};
use quatroots::report;
use quatroots::Error;

/// Exact root classification for polynomials over the real quaternions.
#[derive(Parser)]
#[command(name = "quatroots", version, about)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,

    /// Emit machine-readable JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Residual tolerance for the numeric root finder
    #[arg(long, global = true)]
    tol: Option<f64>,

    /// Iteration cap for the numeric root finder
    #[arg(long, global = true, default_value_t = 400)]
    max_iters: usize,

    /// Exact-only report: degrees, ranks, predicates, no approximated roots
    #[arg(long, global = true)]
    no_numeric: bool,

    /// Read expressions from a file, one per line ('#' starts a comment)
    #[arg(long, global = true)]
    batch: Option<PathBuf>,

    /// Write output to a file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Full classification report: E, D, ranks, predicates, roots, bounds
    Classify { expr: Option<String> },
    /// Closed-form solver for quadratics with a complex root
    Quadratic { expr: Option<String> },
    /// Height-based strict bounds on root norms
    Bounds { expr: Option<String> },
    /// All roots with integer coordinates
    IntegerRoots { expr: Option<String> },
    /// Debug view: Bezout matrix, stacked matrix, ranks, resultant
    Bezout { expr: Option<String> },
}

impl Cmd {
    fn expr(&self) -> Option<&str> {
        match self {
            Cmd::Classify { expr }
            | Cmd::Quadratic { expr }
            | Cmd::Bounds { expr }
            | Cmd::IntegerRoots { expr }
            | Cmd::Bezout { expr } => expr.as_deref(),
        }
    }
}

// exit codes: 0 ok, 2 bad input, 3 a consistency check failed
const EXIT_OK: u8 = 0;
const EXIT_PARSE: u8 = 2;
const EXIT_FLAG: u8 = 3;

struct Rendered {
    text: String,
    json: Value,
    code: u8,
}

fn input_error(source: &str, e: &Error) -> Rendered {
    Rendered {
        text: format!("error: {}: {}\n", source, e),
        json: json!({ "input": source, "error": e.to_string() }),
        code: EXIT_PARSE,
    }
}

fn run_classify(source: &str, p: &QuatPoly, opts: &ClassifyOptions) -> Rendered {
    match analysis::classify_with(p, opts) {
        Ok(r) => {
            let failed = r
                .consistency_flags
                .iter()
                .any(|f| f.status == FlagStatus::Fail);
            Rendered {
                text: report::report_text(&r),
                json: report::report_json(&r),
                code: if failed { EXIT_FLAG } else { EXIT_OK },
            }
        }
        Err(e) => input_error(source, &e),
    }
}

fn run_quadratic(source: &str, p: &QuatPoly) -> Rendered {
    match analysis::solve_quadratic_complex_case(p) {
        Ok(s) => Rendered {
            text: report::quadratic_text(&s),
            json: report::quadratic_json(&s),
            code: EXIT_OK,
        },
        Err(Error::ConditionFails) => Rendered {
            text: "no complex root: the quadratic solvability condition fails\n".to_string(),
            json: json!({ "has_complex_root": false, "reason": "condition fails" }),
            code: EXIT_OK,
        },
        Err(e) => input_error(source, &e),
    }
}

fn run_bounds(source: &str, p: &QuatPoly) -> Rendered {
    match analysis::root_bounds(p) {
        Ok(b) => Rendered {
            text: report::bounds_text(&b),
            json: report::bounds_json(&b),
            code: EXIT_OK,
        },
        Err(e) => input_error(source, &e),
    }
}

fn run_integer_roots(source: &str, p: &QuatPoly) -> Rendered {
    match analysis::enumerate_integer_roots(p) {
        Ok(roots) => Rendered {
            text: report::integer_roots_text(&roots),
            json: report::integer_roots_json(&roots),
            code: EXIT_OK,
        },
        Err(e) => input_error(source, &e),
    }
}

fn run_bezout(source: &str, p: &QuatPoly) -> Rendered {
    let go = || -> quatroots::Result<Rendered> {
        let monic = p.monic_left()?;
        let (f, g) = decompose(&monic);
        let (f1, f2) = split_complex(&f);
        let (g1, g2) = split_complex(&g);
        let bez = bezout_matrix(&f, &g)?;
        let stack = barnett_stack(&f1, &[f2.clone(), g1.clone(), g2.clone()])?;
        let res = sylvester_resultant(&f, &g)?;
        let rank_bez = bez.rank();
        let rank_stack = stack.rank();
        let text = format!(
            "Bez(f, g):\n{}rank = {}\n\nstacked matrix of f1 against f2, g1, g2:\n{}rank = {}\n\nR(f, g) = {}\n",
            report::matrix_text(&bez),
            rank_bez,
            report::matrix_text(&stack),
            rank_stack,
            res
        );
        let jsn = json!({
            "bez_f_g": report::matrix_json(&bez, report::gaussian_json),
            "rank_bez_fg": rank_bez,
            "barnett_stack": report::matrix_json(&stack, report::rational_json),
            "rank_barnett": rank_stack,
            "resultant_f_g": report::gaussian_json(&res),
        });
        Ok(Rendered {
            text,
            json: jsn,
            code: EXIT_OK,
        })
    };
    go().unwrap_or_else(|e| input_error(source, &e))
}

fn run_one(cmd: &Cmd, source: &str, opts: &ClassifyOptions) -> Rendered {
    let p = match parse_poly(source) {
        Ok(p) => p,
        Err(e) => return input_error(source, &e),
    };
    match cmd {
        Cmd::Classify { .. } => run_classify(source, &p, opts),
        Cmd::Quadratic { .. } => run_quadratic(source, &p),
        Cmd::Bounds { .. } => run_bounds(source, &p),
        Cmd::IntegerRoots { .. } => run_integer_roots(source, &p),
        Cmd::Bezout { .. } => run_bezout(source, &p),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = ClassifyOptions {
        tol: cli.tol,
        max_iters: cli.max_iters,
        numeric: !cli.no_numeric,
    };

    let inputs: Vec<String> = if let Some(path) = &cli.batch {
        match fs::read_to_string(path) {
            Ok(text) => text
                .lines()
                .map(|l| match l.find('#') {
                    Some(n) => &l[..n],
                    None => l,
                })
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .map(str::to_string)
                .collect(),
            Err(e) => {
                eprintln!("error: cannot read {}: {}", path.display(), e);
                return ExitCode::from(EXIT_PARSE);
            }
        }
    } else {
        match cli.cmd.expr() {
            Some(e) => vec![e.to_string()],
            None => {
                eprintln!("error: no expression given (pass one or use --batch)");
                return ExitCode::from(EXIT_PARSE);
            }
        }
    };

    let results: Vec<Rendered> = inputs
        .iter()
        .map(|s| run_one(&cli.cmd, s, &opts))
        .collect();

    let mut code = EXIT_OK;
    let mut out = String::new();
    if cli.json {
        let body = if cli.batch.is_some() {
            Value::Array(results.iter().map(|r| r.json.clone()).collect())
        } else {
            results[0].json.clone()
        };
        out.push_str(&serde_json::to_string_pretty(&body).unwrap());
        out.push('\n');
    } else {
        for (n, r) in results.iter().enumerate() {
            if cli.batch.is_some() {
                out.push_str(&format!("== {}\n", inputs[n]));
            }
            out.push_str(&r.text);
        }
    }
    for r in &results {
        code = code.max(r.code);
    }

    match &cli.out {
        Some(path) => {
            if let Err(e) = fs::write(path, out) {
                eprintln!("error: cannot write {}: {}", path.display(), e);
                return ExitCode::from(EXIT_PARSE);
            }
        }
        None => {
            let mut stdout = std::io::stdout();
            let _ = stdout.write_all(out.as_bytes());
        }
    }
    ExitCode::from(code)
}
