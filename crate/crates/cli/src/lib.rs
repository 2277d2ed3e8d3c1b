//! Command-line front end: argument parsing, output records and rendering.
//!
//! [`run`] does all the work and returns the text to print plus the exit
//! code, so the binary is a two-line wrapper and everything here can be
//! driven directly from tests.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use vanishing_core::cyclotomic::check_certificate;
use vanishing_core::height::{self, HeightError, HeightValue};
use vanishing_core::semigroup::Gaps;
use vanishing_core::solver::{self, render_table, WQuery};
use vanishing_core::witness::{self, WitnessCertificate, WitnessError};
use vanishing_core::DEFAULT_BUDGET;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "vanishing",
    version,
    about = "Vanishing power sums of roots of unity: x_1^l + ... + x_n^l = 0 with x_i^m = 1",
    after_help = "Exit codes: 0 answered (including negative answers), 1 usage error, 2 search budget exceeded."
)]
pub struct Cli {
    /// Emit one JSON record per line instead of text
    #[arg(long, global = true)]
    pub json: bool,

    /// Node cap for exhaustive searches
    #[arg(long, global = true, value_name = "NODES", default_value_t = DEFAULT_BUDGET,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: u64,

    /// Include wall-clock time in JSON records
    #[arg(long, global = true)]
    pub timing: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone, Copy)]
pub struct Triple {
    /// Number of roots n
    #[arg(short = 'n', value_parser = clap::value_parser!(u64).range(1..))]
    pub n: u64,
    /// Power l
    #[arg(short = 'l', default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub l: u64,
    /// Order m of the roots of unity
    #[arg(short = 'm', value_parser = clap::value_parser!(u64).range(1..))]
    pub m: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether n is in W_l(m)
    Decide(Triple),
    /// Construct a witness certificate
    Witness {
        #[command(flatten)]
        triple: Triple,
        /// Require all n roots to be distinct
        #[arg(long)]
        distinct: bool,
        /// Re-check the certificate by exact reduction
        #[arg(long)]
        verify: bool,
    },
    /// Compute the height H(n;l,m)
    Height(Triple),
    /// Verify a certificate file (bare certificate or a witness record)
    Verify { file: PathBuf },
    /// Print W(d) for every divisor d of m
    Table {
        #[arg(short = 'm', value_parser = clap::value_parser!(u64).range(1..))]
        m: u64,
    },
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inputs {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub distinct: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub file: Option<String>,
}

impl Inputs {
    fn triple(t: Triple) -> Self {
        Self { n: Some(t.n), l: Some(t.l), m: Some(t.m), ..Self::default() }
    }
}

/// One answered command. Field order is the serialisation order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub command: String,
    pub inputs: Inputs,
    pub result: String,
    pub trace: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<WitnessCertificate>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_us: Option<u64>,
}

impl OutputRecord {
    fn new(command: &str, inputs: Inputs) -> Self {
        Self {
            command: command.to_string(),
            inputs,
            result: String::new(),
            trace: Vec::new(),
            certificate: None,
            timing_us: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record is plain data")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let i = &self.inputs;
        let mut header = vec![self.command.clone()];
        for (k, v) in [("n", i.n), ("l", i.l), ("m", i.m)] {
            if let Some(v) = v {
                header.push(format!("{k}={v}"));
            }
        }
        if i.distinct == Some(true) {
            header.push("distinct".into());
        }
        if let Some(f) = &i.file {
            header.push(f.clone());
        }
        out.push_str(&header.join(" "));
        out.push('\n');
        for line in &self.trace {
            out.push_str("  ");
            out.push_str(line);
            out.push('\n');
        }
        out.push_str(&format!("result: {}\n", self.result));
        if let Some(c) = &self.certificate {
            out.push_str(&format!("certificate: {}\n", c.to_json()));
        }
        out
    }
}

/// Accepted contents of a certificate file.
#[derive(Deserialize)]
#[serde(untagged)]
enum CertificateFile {
    Bare(WitnessCertificate),
    Record(OutputRecord),
}

pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { stdout: String::new(), stderr: text, code }
            } else {
                Outcome { stdout: text, stderr: String::new(), code }
            };
        }
    };
    execute(&cli)
}

pub fn execute(cli: &Cli) -> Outcome {
    if let Command::Table { m } = cli.command {
        if !cli.json {
            return Outcome { stdout: render_table(m), stderr: String::new(), code: EXIT_OK };
        }
    }
    let started = Instant::now();
    let result = match &cli.command {
        Command::Decide(t) => Ok(cmd_decide(*t)),
        Command::Witness { triple, distinct, verify } => cmd_witness(*triple, *distinct, *verify, cli.budget),
        Command::Height(t) => cmd_height(*t, cli.budget),
        Command::Verify { file } => cmd_verify(file),
        Command::Table { m } => Ok((cmd_table(*m), EXIT_OK)),
    };
    match result {
        Ok((mut rec, code)) => {
            if cli.timing {
                rec.timing_us = Some(started.elapsed().as_micros() as u64);
            }
            let stdout = if cli.json { rec.to_json() + "\n" } else { rec.to_text() };
            Outcome { stdout, stderr: String::new(), code }
        }
        Err(msg) => Outcome { stdout: String::new(), stderr: format!("error: {msg}\n"), code: EXIT_USAGE },
    }
}

fn query(t: Triple) -> WQuery {
    WQuery::new(t.n, t.l, t.m).expect("clap enforces positive inputs")
}

/// Reduction trace shared by `decide` and negative `witness` answers.
fn membership_trace(t: Triple) -> (bool, Vec<String>) {
    let red = solver::reduce(t.l, t.m);
    let mut trace = vec![red.to_string()];
    let sg = red.semigroup();
    let member = solver::decide(query(t));
    if red.m_prime == 1 {
        trace.push(format!("m divides l: W_{}({}) is empty", t.l, t.m));
    } else if member {
        let rep = sg.representation(t.n).expect("member");
        let terms: Vec<String> = rep
            .iter()
            .zip(sg.generators())
            .filter(|(&c, _)| c > 0)
            .map(|(c, p)| format!("{c}*{p}"))
            .collect();
        trace.push(format!("representation: {} = {}", t.n, terms.join(" + ")));
    } else {
        match sg.gaps() {
            Gaps::NonMultiples(p) => trace.push(format!("{} is not a multiple of {p}", t.n)),
            _ => trace.push(format!("{} is a gap of {sg}", t.n)),
        }
    }
    (member, trace)
}

pub fn cmd_decide(t: Triple) -> (OutputRecord, i32) {
    let mut rec = OutputRecord::new("decide", Inputs::triple(t));
    let (member, trace) = membership_trace(t);
    rec.trace = trace;
    rec.result = member.to_string();
    (rec, EXIT_OK)
}

pub fn cmd_witness(t: Triple, distinct: bool, verify: bool, budget: u64) -> Result<(OutputRecord, i32), String> {
    let mut rec = OutputRecord::new("witness", Inputs { distinct: Some(distinct), ..Inputs::triple(t) });
    let q = query(t);
    match witness::construct(q, distinct, budget) {
        Ok(Some(cert)) => {
            rec.trace = cert.derivation.clone();
            if verify {
                match check_certificate(&cert) {
                    Ok(()) => rec.trace.push("verify: exact reduction mod Phi_m is zero".into()),
                    Err(r) => rec.trace.push(format!("verify: rejected: {r}")),
                }
            }
            rec.result = "found".into();
            rec.certificate = Some(cert);
            Ok((rec, EXIT_OK))
        }
        Ok(None) => {
            rec.result = "none".into();
            let (member, trace) = membership_trace(t);
            if !member {
                rec.trace = trace;
                rec.trace.push(format!("{} is not in W_{}({})", t.n, t.l, t.m));
            } else if t.n > t.m {
                rec.trace.push(format!("distinct witnesses need n <= m, got n={} > m={}", t.n, t.m));
            } else {
                let red = solver::reduce(t.l, t.m);
                let reason = match height::compute_height(t.n, 1, red.m_prime, budget) {
                    Ok(h) => match h.h {
                        HeightValue::Exact(h) => format!("H({};{})={h} > {}", t.n, red.m_prime, red.d),
                        _ => format!("H({};{}) > {}", t.n, red.m_prime, red.d),
                    },
                    Err(_) => format!("H({};{}) > {}", t.n, red.m_prime, red.d),
                };
                rec.trace.push(red.to_string());
                rec.trace.push(reason);
            }
            Ok((rec, EXIT_OK))
        }
        Err(WitnessError::BudgetExceeded(nodes)) => {
            rec.result = "unknown".into();
            rec.trace.push(format!("budget exceeded after {nodes} nodes"));
            Ok((rec, EXIT_BUDGET))
        }
        Err(e) => Err(e.to_string()),
    }
}

pub fn cmd_height(t: Triple, budget: u64) -> Result<(OutputRecord, i32), String> {
    let mut rec = OutputRecord::new("height", Inputs::triple(t));
    let r = match height::compute_height(t.n, t.l, t.m, budget) {
        Ok(r) => r,
        Err(HeightError::BudgetExceeded(nodes)) => {
            rec.result = "unknown".into();
            rec.trace.push(format!("budget exceeded after {nodes} nodes"));
            return Ok((rec, EXIT_BUDGET));
        }
        Err(e) => return Err(e.to_string()),
    };
    rec.trace.push(format!("method: {}", r.method));
    let code = match r.h {
        HeightValue::Exact(h) => {
            rec.result = format!("h={h}");
            EXIT_OK
        }
        HeightValue::Undefined => {
            rec.result = "undefined".into();
            rec.trace.push(format!("{} is not in W_{}({})", t.n, t.l, t.m));
            EXIT_OK
        }
        HeightValue::Unknown { lower, upper } => {
            rec.result = "unknown".into();
            rec.trace.push(format!("budget exceeded: {lower} <= H <= {upper}"));
            EXIT_BUDGET
        }
    };
    if let Some(w) = r.witness {
        rec.trace.extend(w.derivation.iter().cloned());
        rec.certificate = Some(w);
    }
    Ok((rec, code))
}

pub fn cmd_verify(file: &std::path::Path) -> Result<(OutputRecord, i32), String> {
    let text = std::fs::read_to_string(file).map_err(|e| format!("{}: {e}", file.display()))?;
    let cert = match serde_json::from_str::<CertificateFile>(&text) {
        Ok(CertificateFile::Bare(c)) => c,
        Ok(CertificateFile::Record(r)) => r
            .certificate
            .ok_or_else(|| format!("{}: record has no certificate", file.display()))?,
        Err(e) => return Err(format!("{}: not a certificate: {e}", file.display())),
    };
    let mut rec = OutputRecord::new("verify", Inputs { file: Some(file.display().to_string()), ..Inputs::default() });
    rec.inputs.n = Some(cert.n);
    rec.inputs.l = Some(cert.ell);
    rec.inputs.m = Some(cert.m);
    match check_certificate(&cert) {
        Ok(()) => {
            rec.result = "true".into();
            rec.trace.push("exact reduction mod Phi_m is zero".into());
        }
        Err(r) => {
            rec.result = "false".into();
            rec.trace.push(r.to_string());
        }
    }
    Ok((rec, EXIT_OK))
}

pub fn cmd_table(m: u64) -> OutputRecord {
    let mut rec = OutputRecord::new("table", Inputs { m: Some(m), ..Inputs::default() });
    rec.trace = render_table(m).lines().skip(1).map(str::to_string).collect();
    rec.result = format!("{} rows", rec.trace.len());
    rec
}
