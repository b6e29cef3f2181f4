//! Command-line front end: evaluation, table generation, audits, and
//! p-adic integration runs.

use std::io::Write;
use std::process::ExitCode;

use clap::{CommandFactory, FromArgMatches, Parser, Subcommand, ValueEnum};

use qcalc::audit::{
    audit_all, audit_identity, lookup, registry, report_json, report_summary, AuditConfig,
    AuditReport, PadicSettings,
};
use qcalc::bernoulli::{moment, BernoulliCache};
use qcalc::bernstein::bernstein;
use qcalc::padic::{convergence_profile, IntegrandSpec, PadicContext};
use qcalc::qcore::gauss_binom;
use qcalc::rational::{rat_from_string, rat_to_string, Rat};
use qcalc::render::{table, to_csv, to_json, to_latex, to_text, TableKind};
use qcalc::stirling::{s1_gen, s2_explicit};

#[derive(Parser)]
#[command(
    name = "qcalc",
    about = "Exact q-number calculus: evaluation, tables, identity audits, p-adic integrals"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate one exact object and print it (or its value at q0)
    Eval {
        /// beta | beta-order | beta-inverse | stirling1 | stirling2 | qbinom | bernstein
        object: String,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: Option<u32>,
        /// rational evaluation point q0 ("num/den" or integer)
        #[arg(long)]
        at: Option<String>,
        /// integer point x0 for bivariate objects evaluated with --at
        #[arg(long)]
        x: Option<u32>,
    },
    /// Audit identities and write a report
    Audit {
        /// identity labels (see the list below); repeatable
        #[arg(long = "id")]
        ids: Vec<String>,
        /// audit every registered label
        #[arg(long)]
        all: bool,
        /// override the per-label parameter bound
        #[arg(long = "max-n")]
        max_n: Option<u32>,
        /// odd prime for p-adic labels
        #[arg(long, default_value_t = 3)]
        p: u64,
        /// admissible q for p-adic labels ("num/den" or integer)
        #[arg(long, default_value = "4")]
        q: String,
        /// p-adic working precision N
        #[arg(long, default_value_t = 8)]
        prec: u32,
        /// disable p-adic labels (they are listed as skipped)
        #[arg(long = "no-padic")]
        no_padic: bool,
        /// output file (stdout when omitted)
        #[arg(long)]
        out: Option<String>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
        /// exit nonzero if EQ8_VS_DELTA or EQ10 falsifies (kernel gate)
        #[arg(long)]
        strict: bool,
    },
    /// Riemann-sum convergence profile of the p-adic q-integral, as CSV
    Padic {
        /// power-xq | qpow | qbinom | bernstein | const
        #[arg(long)]
        integrand: String,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        m: Option<i64>,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long, default_value_t = 3)]
        p: u64,
        #[arg(long, default_value = "4")]
        q: String,
        #[arg(long, default_value_t = 8)]
        prec: u32,
        /// inclusive level range "a..b"
        #[arg(long, default_value = "3..6")]
        levels: String,
    },
    /// Emit a table of exact values
    Table {
        /// stirling1 | stirling2 | beta | qbinom
        kind: String,
        #[arg(long = "max-n", default_value_t = 6)]
        max_n: u32,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
    Latex,
    Text,
}

fn labels_help() -> String {
    let mut s = String::from("Registered identity labels:\n");
    for info in registry() {
        let variants = if info.variants.is_empty() {
            String::new()
        } else {
            format!(" (variants: {})", info.variants.join(", "))
        };
        let padic = if info.padic { " [p-adic]" } else { "" };
        s.push_str(&format!("  {}{variants}{padic} - {}\n", info.label, info.describe));
    }
    s
}

fn main() -> ExitCode {
    let help = labels_help();
    let cmd = Cli::command().mut_subcommand("audit", |c| c.after_help(help.clone()));
    let matches = cmd.get_matches();
    let cli = match Cli::from_arg_matches(&matches) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn run(cli: Cli) -> qcalc::Result<ExitCode> {
    match cli.command {
        Cmd::Eval { object, n, k, at, x } => eval_cmd(&object, n, k, at.as_deref(), x),
        Cmd::Audit {
            ids,
            all,
            max_n,
            p,
            q,
            prec,
            no_padic,
            out,
            format,
            strict,
        } => audit_cmd(ids, all, max_n, p, &q, prec, no_padic, out, format, strict),
        Cmd::Padic {
            integrand,
            n,
            m,
            k,
            p,
            q,
            prec,
            levels,
        } => padic_cmd(&integrand, n, m, k, p, &q, prec, &levels),
        Cmd::Table { kind, max_n, format } => {
            let kind = match TableKind::parse(&kind) {
                Ok(k) => k,
                Err(e) => return Ok(usage_error(&e.to_string())),
            };
            let rows = table(kind, max_n);
            let rendered = match format {
                TableFormat::Csv => to_csv(&rows),
                TableFormat::Json => to_json(&rows),
                TableFormat::Latex => to_latex(&rows),
                TableFormat::Text => to_text(&rows),
            };
            print!("{rendered}");
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn parse_q(s: &str) -> qcalc::Result<Rat> {
    rat_from_string(s)
}

fn eval_cmd(
    object: &str,
    n: u32,
    k: Option<u32>,
    at: Option<&str>,
    x: Option<u32>,
) -> qcalc::Result<ExitCode> {
    let cache = BernoulliCache::new();
    let need_k = || {
        k.ok_or_else(|| {
            qcalc::QError::InvalidArgument(format!("{object} needs --k"))
        })
    };
    // scalar objects live in Q(q); bernstein is bivariate
    let scalar = match object {
        "beta" => Some(cache.beta(n)),
        "beta-order" => Some(cache.beta_order(n, need_k()?)),
        "beta-inverse" => Some(cache.beta_inverse_order(n, need_k()?)),
        "stirling1" => {
            let kk = need_k()? as usize;
            let row = s1_gen(n);
            Some(if kk < row.len() {
                qcalc::ratfun::RatFunQ::from_poly(row[kk].clone())
            } else {
                qcalc::ratfun::RatFunQ::zero()
            })
        }
        "stirling2" => Some(s2_explicit(n, need_k()?)),
        "qbinom" => Some(qcalc::ratfun::RatFunQ::from_poly(gauss_binom(
            n,
            need_k()? as i64,
        ))),
        "bernstein" => None,
        other => {
            return Ok(usage_error(&format!(
                "unknown object '{other}' (expected beta|beta-order|beta-inverse|stirling1|stirling2|qbinom|bernstein)"
            )))
        }
    };
    match scalar {
        Some(v) => match at {
            Some(q0) => println!("{}", rat_to_string(&v.eval(&parse_q(q0)?)?)),
            None => println!("{}", v.render()),
        },
        None => {
            let b = bernstein(need_k()?, n)?;
            match (at, x) {
                (Some(q0), Some(x0)) => {
                    println!("{}", rat_to_string(&b.eval_point(x0, &parse_q(q0)?)?))
                }
                (Some(_), None) => {
                    return Ok(usage_error("bernstein with --at also needs --x"))
                }
                _ => println!("{}", b.render()),
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[allow(clippy::too_many_arguments)]
fn audit_cmd(
    ids: Vec<String>,
    all: bool,
    max_n: Option<u32>,
    p: u64,
    q: &str,
    prec: u32,
    no_padic: bool,
    out: Option<String>,
    format: ReportFormat,
    strict: bool,
) -> qcalc::Result<ExitCode> {
    if !all && ids.is_empty() {
        return Ok(usage_error("pass --all or at least one --id LABEL"));
    }
    for id in &ids {
        if lookup(id).is_err() {
            return Ok(usage_error(&format!("unknown identity label '{id}'")));
        }
    }
    let q = parse_q(q)?;
    let padic = if no_padic {
        None
    } else {
        let settings = PadicSettings::new(p, q, prec);
        // surface inadmissible parameters as a usage error up front
        if let Err(e) = settings.context() {
            return Ok(usage_error(&e.to_string()));
        }
        Some(settings)
    };
    let config = AuditConfig { max_n, padic };
    let report = if all {
        audit_all(&config)?
    } else {
        let mut verdicts = Vec::new();
        let mut skipped = Vec::new();
        for id in &ids {
            let info = lookup(id)?;
            if info.padic && config.padic.is_none() {
                skipped.push(id.clone());
                continue;
            }
            verdicts.extend(audit_identity(id, &config)?);
        }
        let mut meta = qcalc::audit::base_meta(&config);
        meta.skipped_by_config = skipped;
        AuditReport { meta, verdicts }
    };
    let rendered = match format {
        ReportFormat::Json => report_json(&report),
        ReportFormat::Text => report_summary(&report),
    };
    match out {
        Some(path) => {
            let mut f = std::fs::File::create(&path)
                .map_err(|e| qcalc::QError::InvalidArgument(format!("{path}: {e}")))?;
            f.write_all(rendered.as_bytes())
                .map_err(|e| qcalc::QError::InvalidArgument(format!("{path}: {e}")))?;
        }
        None => print!("{rendered}"),
    }
    if strict {
        let gate_broken = report.verdicts.iter().any(|v| {
            (v.id == "EQ8_VS_DELTA" || v.id == "EQ10") && v.verdict.is_falsified()
        });
        if gate_broken {
            eprintln!("strict mode: kernel-integrity gate (EQ8_VS_DELTA/EQ10) falsified");
            return Ok(ExitCode::from(1));
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[allow(clippy::too_many_arguments)]
fn padic_cmd(
    integrand: &str,
    n: Option<u32>,
    m: Option<i64>,
    k: Option<u32>,
    p: u64,
    q: &str,
    prec: u32,
    levels: &str,
) -> qcalc::Result<ExitCode> {
    let q = parse_q(q)?;
    let ctx = match PadicContext::new(p, q.clone(), prec) {
        Ok(c) => c,
        Err(e) => return Ok(usage_error(&e.to_string())),
    };
    let (spec, target): (IntegrandSpec, Option<Rat>) = match integrand {
        "const" => (IntegrandSpec::PowerXq(0), Some(Rat::from_integer(1.into()))),
        "power-xq" => {
            let n = n.unwrap_or(1);
            let cache = BernoulliCache::new();
            (IntegrandSpec::PowerXq(n), Some(cache.beta(n).eval(&q)?))
        }
        "qpow" => {
            let m = m.unwrap_or(1);
            let target = if m == -1 { None } else { Some(moment(m)?.eval(&q)?) };
            (IntegrandSpec::QPow(m), target)
        }
        "qbinom" => (IntegrandSpec::QBinomX(n.unwrap_or(1)), None),
        "bernstein" => {
            let (kk, nn) = (k.unwrap_or(0), n.unwrap_or(1));
            if kk > nn {
                return Ok(usage_error("bernstein integrand needs k <= n"));
            }
            (IntegrandSpec::Bernstein { k: kk, n: nn }, None)
        }
        other => {
            return Ok(usage_error(&format!(
                "unknown integrand '{other}' (expected power-xq|qpow|qbinom|bernstein|const)"
            )))
        }
    };
    let (a, b) = match levels.split_once("..") {
        Some((a, b)) => match (a.parse::<u32>(), b.parse::<u32>()) {
            (Ok(a), Ok(b)) if a >= 1 && a <= b => (a, b),
            _ => return Ok(usage_error("levels must be 'a..b' with 1 <= a <= b")),
        },
        None => return Ok(usage_error("levels must be 'a..b'")),
    };
    let rows = convergence_profile(&ctx, &spec, a..=b, target.as_ref())?;
    if target.is_some() {
        println!("level,residue,precision,agreement_valuation");
    } else {
        println!("level,residue,precision");
    }
    for row in rows {
        let residue = row.value.render().replace(' ', "");
        match row.agreement {
            Some(a) => println!(
                "{},{},{},{}",
                row.level,
                residue,
                row.value.known_precision(),
                a.render()
            ),
            None => println!("{},{},{}", row.level, residue, row.value.known_precision()),
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn help_lists_every_label() {
        let help = labels_help();
        for info in registry() {
            assert!(help.contains(info.label), "{} missing", info.label);
        }
    }

}
