use std::fmt::Write as _;
use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use clutter_ci::classify::classify_ideal;
use clutter_ci::code::{code_parameters_with_budget, DEFAULT_CODEWORD_BUDGET};
use clutter_ci::json::{
    parse_generators, parse_paramset, CheckOutput, ClassificationOutput, CodeOutput, EnumerateOutput,
    GbOutput, IdealOutput,
};
use clutter_ci::projective::DEFAULT_POINT_BUDGET;
use clutter_ci::{buchberger, enumerate_set, vanishing_ideal, Error, MonomialOrder, ParamSet, PointSet};

#[derive(Parser, Debug)]
#[command(
    name = "clutter-ci",
    version,
    about = "Vanishing ideals, complete-intersection forms and evaluation codes of monomially parameterized projective sets over finite fields"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Input file, `-` for stdin, or inline JSON starting with `{`
    #[arg(long, global = true, default_value = "-")]
    input: String,

    #[arg(long, global = true, value_enum, default_value_t = Order::Grevlex)]
    order: Order,

    /// Degree of the evaluation code
    #[arg(long, global = true, default_value_t = 1)]
    degree: u32,

    /// Largest number of parameter tuples to enumerate
    #[arg(long, global = true, default_value_t = DEFAULT_POINT_BUDGET)]
    budget_points: u64,

    /// Largest number of coefficient vectors swept for the minimum distance
    #[arg(long, global = true, default_value_t = DEFAULT_CODEWORD_BUDGET)]
    budget_codewords: u64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Subcommand, Debug, Clone, Copy)]
enum Command {
    /// List the points of X
    Enumerate,
    /// Minimal generators, reduced Gröbner basis and Hilbert function of I(X)
    Ideal,
    /// Complete-intersection test and normal form (clutter-type inputs)
    Classify,
    /// Reduced Gröbner basis of explicit generators
    Gb,
    /// Length, dimension and minimum distance of the degree-d code on X
    Code,
    /// Clutter type, monoid closure and binomial generation
    Check,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Order {
    Grevlex,
    Lex,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Text,
}

fn read_input(input: &str) -> Result<String, Error> {
    if input.trim_start().starts_with('{') {
        return Ok(input.to_string());
    }
    let mut text = String::new();
    if input == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Error::Malformed(format!("stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(input).map_err(|e| Error::Malformed(format!("{input}: {e}")))?;
    }
    Ok(text)
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("outputs serialize") + "\n"
}

fn points(cli: &Cli, ps: &ParamSet) -> Result<PointSet, Error> {
    enumerate_set(ps, cli.budget_points)
}

fn lines(out: &mut String, title: &str, items: &[String]) {
    let _ = writeln!(out, "{title}:");
    for i in items {
        let _ = writeln!(out, "  {i}");
    }
}

fn run(cli: &Cli) -> Result<String, Error> {
    let text = read_input(&cli.input)?;
    let order = match cli.order {
        Order::Grevlex => MonomialOrder::GRevLex,
        Order::Lex => MonomialOrder::Lex,
    };
    let text_format = cli.format == Format::Text;
    Ok(match cli.command {
        Command::Enumerate => {
            let out = EnumerateOutput::new(&points(cli, &parse_paramset(&text)?)?);
            if text_format {
                let mut s = format!("|X| = {}\n", out.count);
                for p in &out.points {
                    let _ = writeln!(s, "{p}");
                }
                s
            } else {
                json(&out)
            }
        }
        Command::Ideal => {
            let vi = vanishing_ideal(&points(cli, &parse_paramset(&text)?)?)?;
            let gb = match order {
                MonomialOrder::GRevLex => vi.gb().clone(),
                MonomialOrder::Lex => buchberger(vi.gb().elements(), order)?,
            };
            let out = IdealOutput::new(&vi, &gb);
            if text_format {
                let mut s = String::new();
                lines(&mut s, "points", &out.points);
                lines(&mut s, "generators", &out.generators);
                lines(&mut s, &format!("reduced Groebner basis ({})", order.name()), &out.reduced_gb);
                let h: Vec<String> = out.hilbert.0.iter().map(|h| h.to_string()).collect();
                let _ = writeln!(s, "Hilbert function: {} (constant afterwards)", h.join(", "));
                s
            } else {
                json(&out)
            }
        }
        Command::Classify => {
            let ps = parse_paramset(&text)?;
            ps.require_clutter_type()?;
            let c = classify_ideal(&vanishing_ideal(&points(cli, &ps)?)?)?;
            let out = ClassificationOutput::new(&c);
            if text_format {
                let mut s = format!(
                    "complete intersection: {}\nform: {}\nminimal generators: {} (height {})\n",
                    if out.is_ci { "yes" } else { "no" },
                    out.form,
                    out.mu_total,
                    c.height
                );
                if let Some(r) = out.r {
                    let _ = writeln!(s, "r: {r}");
                }
                let perm: Vec<String> = out.permutation.iter().map(|i| format!("t{i}")).collect();
                let _ = writeln!(s, "permutation: {}", perm.join(" "));
                s
            } else {
                json(&out)
            }
        }
        Command::Gb => {
            let gb = buchberger(&parse_generators(&text)?, order)?;
            let out = GbOutput::new(&gb);
            if text_format {
                out.reduced_gb.iter().map(|g| g.clone() + "\n").collect()
            } else {
                json(&out)
            }
        }
        Command::Code => {
            if cli.degree == 0 {
                return Err(Error::Unsupported("--degree must be at least 1".into()));
            }
            let x = points(cli, &parse_paramset(&text)?)?;
            let vi = vanishing_ideal(&x)?;
            let c = code_parameters_with_budget(&x, &vi, cli.degree, cli.budget_codewords)?;
            let out = CodeOutput::new(&c);
            if text_format {
                let d = out.dmin.map_or("?".to_string(), |d| d.to_string());
                format!("[{}, {}, {}] (d = {})\n", out.n, out.k, d, out.d)
            } else {
                json(&out)
            }
        }
        Command::Check => {
            let ps = parse_paramset(&text)?;
            let x = points(cli, &ps)?;
            let vi = vanishing_ideal(&x)?;
            let out = CheckOutput {
                clutter_type: ps.is_clutter_type(),
                monoid_closed: x.monoid_closed(),
                binomial_generated: vi.is_binomial_generated(),
            };
            if text_format {
                format!(
                    "clutter type: {}\nmonoid closed: {}\nbinomial generated: {}\n",
                    out.clutter_type, out.monoid_closed, out.binomial_generated
                )
            } else {
                json(&out)
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::BudgetExceeded { .. } => 3,
                Error::Defect(_) => 1,
                _ => 2,
            })
        }
    }
}
