use std::path::Path;

use lctreg::algebra::rational::{parse_rational, to_short};
use lctreg::algebra::{parse_ideal, parse_polynomial, Ideal, Rational, TermOrder};
use lctreg::groebner::{buchberger, radical_membership, saturate_irrelevant};
use lctreg::harness::{
    build_report, fraction_sequence, run_suite, CorpusKind, CorpusSpec, SuiteOptions,
};
use lctreg::integrality::is_integral_over;
use lctreg::monomial::{
    integral_closure_monomial, lct_monomial, multiplier_ideal_monomial, MonomialIdeal,
};
use lctreg::parallel::Parallelism;
use lctreg::resolution::{regularity, RegularityMode};
use lctreg::Error;
use num_traits::Signed;
use serde_json::Value;

use crate::args::{Cli, Command, Input, Mode, Order};
use crate::output::Output;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    /// Bad arguments or unreadable/unparsable input.
    Usage,
    /// A well-posed request without a mathematical answer.
    Math,
}

impl ErrorKind {
    pub fn code(self) -> u8 {
        match self {
            ErrorKind::Math => 1,
            ErrorKind::Usage => 2,
        }
    }
}

#[derive(Debug)]
pub struct CliError {
    pub kind: ErrorKind,
    pub message: String,
}

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError {
        kind: ErrorKind::Usage,
        message: e.to_string(),
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let kind = match e {
            Error::Syntax { .. }
            | Error::UndeclaredVariable { .. }
            | Error::ZeroGenerator { .. }
            | Error::VariableCountMismatch { .. }
            | Error::InvalidParameter(_) => ErrorKind::Usage,
            _ => ErrorKind::Math,
        };
        CliError {
            kind,
            message: e.to_string(),
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn read_input(input: &Input) -> Result<Ideal> {
    let text = match (&input.ideal, &input.file) {
        (Some(s), None) => s.clone(),
        (None, Some(path)) => read_file(path)?,
        _ => return Err(usage("an ideal is required, inline or through --file")),
    };
    parse_ideal(&text).map_err(usage)
}

fn read_file(path: &Path) -> Result<String> {
    let raw = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(raw
        .lines()
        .filter(|l| !l.trim_start().starts_with('#'))
        .collect::<Vec<_>>()
        .join("\n"))
}

fn parse_weights(cs: &[String]) -> Result<Vec<Rational>> {
    cs.iter()
        .map(|c| {
            let r = parse_rational(c).map_err(usage)?;
            if !r.is_positive() {
                return Err(usage(format!("--c must be positive, got {c}")));
            }
            Ok(r)
        })
        .collect()
}

fn term_order(order: Order) -> TermOrder {
    match order {
        Order::Lex => TermOrder::lex(),
        Order::Grevlex => TermOrder::grevlex(),
    }
}

fn show(ideal: &Ideal, order: &TermOrder) -> String {
    let n = ideal.nvars();
    let vars = if n == 1 {
        "x0".to_string()
    } else {
        format!("x0..x{}", n - 1)
    };
    let gens: Vec<String> = ideal
        .generators()
        .iter()
        .map(|g| g.display_with(order))
        .collect();
    format!("vars {vars}; {}", gens.join(", "))
}

fn monomial(ideal: &Ideal) -> Result<MonomialIdeal> {
    Ok(MonomialIdeal::from_ideal(ideal)?)
}

fn mode_of(mode: &Mode, default: RegularityMode) -> RegularityMode {
    if mode.sheaf {
        RegularityMode::Sheaf
    } else if mode.module {
        RegularityMode::Module
    } else {
        default
    }
}

fn mode_name(mode: RegularityMode) -> &'static str {
    match mode {
        RegularityMode::Sheaf => "sheaf",
        RegularityMode::Module => "module",
    }
}

fn rationals(rs: &[Rational]) -> Value {
    Value::Array(rs.iter().map(|r| to_short(r).into()).collect())
}

fn sheaf_reg(m: &MonomialIdeal) -> Result<i64> {
    Ok(regularity(&m.to_ideal(), RegularityMode::Sheaf)?.reg)
}

pub fn run(cli: &Cli) -> Result<Vec<Output>> {
    let order = term_order(cli.order);
    match &cli.command {
        Command::Reg { input, mode } => {
            let ideal = read_input(input)?;
            let mode = mode_of(mode, RegularityMode::Sheaf);
            let r = regularity(&ideal, mode)?;
            let used = parse_ideal(&r.ideal).map_err(usage)?;
            Ok(vec![Output::new("reg")
                .field("reg", r.reg)
                .field("mode", mode_name(mode))
                .field("dhat", r.dhat)
                .field("ideal", show(&used, &order))])
        }
        Command::Betti { input, mode } => {
            let ideal = read_input(input)?;
            let mode = mode_of(mode, RegularityMode::Module);
            let r = regularity(&ideal, mode)?;
            let entries: Vec<Value> = r
                .betti
                .entries()
                .iter()
                .map(|e| serde_json::json!([e.i, e.j, e.value]))
                .collect();
            Ok(vec![Output::new("betti")
                .field("mode", mode_name(mode))
                .field("reg", r.reg)
                .field("betti", entries)
                .block(r.betti.to_string())])
        }
        Command::Saturate { input } => {
            let ideal = read_input(input)?;
            let sat = saturate_irrelevant(&ideal)?;
            let gb = buchberger(&sat, &order)?;
            let out = Ideal::from_generators(ideal.nvars(), gb.elements().to_vec());
            let already = lctreg::groebner::ideal_equal(&ideal, &sat)?;
            Ok(vec![Output::new("saturate")
                .field("saturation", show(&out, &order))
                .field("saturated", already)])
        }
        Command::Lct { input } => {
            let m = monomial(&read_input(input)?)?;
            let r = lct_monomial(&m)?;
            Ok(vec![Output::new("lct")
                .field("lct", to_short(&r.lct))
                .field("lambda", to_short(&r.lambda))
                .field("weights", rationals(&r.witness))
                .field("dual", rationals(&r.certificate.dual))
                .field("verified", r.verify())])
        }
        Command::Multiplier { input, c } => {
            let weights = parse_weights(c)?;
            let m = monomial(&read_input(input)?)?;
            weights
                .iter()
                .map(|c| {
                    let j = multiplier_ideal_monomial(&m, c)?;
                    Ok(Output::new("multiplier")
                        .field("c", to_short(c))
                        .field("ideal", show(&j.to_ideal(), &order))
                        .field("reg", sheaf_reg(&j)?))
                })
                .collect()
        }
        Command::Intclosure { input } => {
            let m = monomial(&read_input(input)?)?;
            let closure = integral_closure_monomial(&m)?;
            let reg = if closure.is_unit() {
                0
            } else {
                sheaf_reg(&closure)?
            };
            Ok(vec![Output::new("intclosure")
                .field("closure", show(&closure.to_ideal(), &order))
                .field("reg", reg)])
        }
        Command::RadicalMember { input, poly } => {
            let ideal = read_input(input)?;
            let f = parse_polynomial(poly, ideal.nvars()).map_err(usage)?;
            Ok(vec![
                Output::new("radical-member").field("member", radical_membership(&f, &ideal)?)
            ])
        }
        Command::IntegralMember { input, poly, max_k } => {
            let ideal = read_input(input)?;
            let f = parse_polynomial(poly, ideal.nvars()).map_err(usage)?;
            let v = is_integral_over(&f, &ideal, *max_k)?;
            let mut out = Output::new("integral-member").field("integral", v.is_integral());
            out = match v {
                lctreg::integrality::IntegralityVerdict::Integral { k } => {
                    out.field("k", k).field("verified", v.reverify(&f, &ideal)?)
                }
                lctreg::integrality::IntegralityVerdict::NotShown { bound } => {
                    out.field("bound", bound)
                }
            };
            Ok(vec![out])
        }
        Command::Check { input, c, max_k } => {
            let ideal = read_input(input)?;
            let options = SuiteOptions {
                c_samples: parse_weights(c)?,
                fraction_k: *max_k,
                parallelism: Parallelism::Sequential,
            };
            let report = build_report(0, &ideal, &options)?;
            Ok(vec![record("check", &report)])
        }
        Command::Suite {
            seed,
            count,
            nvars,
            max_exp,
            min_gens,
            max_gens,
            out,
            c,
            max_k,
            sequential,
        } => {
            let spec = CorpusSpec {
                nvars: *nvars,
                min_generators: *min_gens,
                max_generators: *max_gens,
                max_exponent: *max_exp,
                count: *count,
                seed: *seed,
                kind: CorpusKind::Monomial,
                degrees: None,
            };
            let options = SuiteOptions {
                c_samples: parse_weights(c)?,
                fraction_k: *max_k,
                parallelism: if *sequential {
                    Parallelism::Sequential
                } else {
                    Parallelism::Parallel
                },
            };
            let run = run_suite(&spec, out.as_deref(), &options)?;
            let mut o = record("suite", &run.summary);
            if let Some(path) = out {
                o = o.field("report", path.display().to_string());
            }
            Ok(vec![o])
        }
        Command::Fractions { input, max_k } => {
            let ideal = read_input(input)?;
            monomial(&ideal)?;
            let f = fraction_sequence(&ideal, *max_k)?;
            Ok(vec![record("fractions", &f)])
        }
    }
}

/// Fields of a serializable harness value, kept in its own schema.
fn record<T: serde::Serialize>(command: &'static str, value: &T) -> Output {
    let mut out = Output::new(command);
    if let Ok(Value::Object(map)) = serde_json::to_value(value) {
        out.fields = map;
    }
    out
}
