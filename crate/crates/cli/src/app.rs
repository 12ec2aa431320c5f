//! Command dispatch.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use topodeg::algebra::QuotientAlgebra;
use topodeg::bezoutian::Functional;
use topodeg::degree::{
    analyze_checked, build_h, check_assumptions, intersection_number_from, Analysis, DegreeProblem,
    Outcome, SearchOptions,
};
use topodeg::forms::{build_form, SymBilinearForm};
use topodeg::linalg::RatMatrix;
use topodeg::oracle::{numeric_degree_sum, OracleConfig};
use topodeg::polyring::{parse_polynomial, Polynomial};
use topodeg::{Error, ErrorClass};

use crate::problem::{self, Kind, Problem};
use crate::report::{AlgebraDump, Checks, ErrorInfo, FormDump, OracleSummary, Report};

/// Exit code when `--time-budget` runs out.
pub const EXIT_TIMEOUT: i32 = 6;

#[derive(Parser, Debug)]
#[command(
    name = "topodeg",
    version,
    about = "Exact degree sums and Whitney intersection numbers"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Intersection number of an immersion file (`f:`/`g:` lines).
    Immersion(RunArgs),
    /// Degree sum of a square map file (`h:`/`i:`/`u:` lines).
    Degree(RunArgs),
}

#[derive(Args, Debug, Clone)]
pub struct RunArgs {
    pub file: PathBuf,
    /// Print one JSON object instead of the text report.
    #[arg(long)]
    pub json: bool,
    /// Attach a floating point cross-check.
    #[arg(long)]
    pub verify: bool,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Half-space polynomial; for immersions it lives in the doubled ring.
    #[arg(long = "u", value_name = "POLY")]
    pub u: Option<String>,
    #[arg(long)]
    pub dump_algebra: bool,
    #[arg(long)]
    pub dump_bezoutian: bool,
    #[arg(long)]
    pub dump_forms: bool,
    #[arg(long, default_value_t = 64)]
    pub retries: usize,
    /// Wall clock limit in seconds.
    #[arg(long, value_name = "SEC")]
    pub time_budget: Option<f64>,
}

impl Command {
    pub fn parts(&self) -> (Kind, &RunArgs) {
        match self {
            Command::Immersion(a) => (Kind::Immersion, a),
            Command::Degree(a) => (Kind::Degree, a),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Execution {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn exit_code(e: &Error) -> i32 {
    match e.class() {
        ErrorClass::Assumption => 2,
        ErrorClass::Genericity => 3,
        ErrorClass::Input => 4,
        ErrorClass::Internal => 5,
    }
}

fn class_name(e: &Error) -> &'static str {
    match e.class() {
        ErrorClass::Assumption => "assumption",
        ErrorClass::Genericity => "genericity",
        ErrorClass::Input => "input",
        ErrorClass::Internal => "internal",
    }
}

fn strings(v: &[topodeg::polyring::Rational]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn matrix_strings(m: &RatMatrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| strings(m.row(i))).collect()
}

fn form_dump(name: &str, f: &SymBilinearForm) -> FormDump {
    FormDump {
        name: name.to_string(),
        matrix: matrix_strings(f.matrix()),
        signature: f.signature(),
        det_sign: f.det_sign(),
    }
}

fn algebra_dump(a: &QuotientAlgebra) -> AlgebraDump {
    AlgebraDump {
        dim: a.dim(),
        basis: a.basis_strings(),
        multable: a
            .multable()
            .iter()
            .map(|row| row.iter().map(|v| strings(v)).collect())
            .collect(),
    }
}

struct Session<'a> {
    kind: Kind,
    args: &'a RunArgs,
    report: Report,
}

impl Session<'_> {
    fn finish(mut self, err: Option<Error>) -> Execution {
        let mut stderr = String::new();
        let code = match &err {
            None => 0,
            Some(e) => {
                stderr.push_str(&format!("error: {e}\n"));
                self.report.error = Some(ErrorInfo {
                    class: class_name(e).to_string(),
                    message: e.to_string(),
                });
                exit_code(e)
            }
        };
        let stdout = if self.args.json {
            let mut s = self.report.to_json();
            s.push('\n');
            s
        } else {
            self.report.human()
        };
        Execution {
            code,
            stdout,
            stderr,
        }
    }

    fn run(&mut self) -> Result<(), Error> {
        let text = std::fs::read_to_string(&self.args.file).map_err(|e| {
            Error::InvalidProblem(format!("cannot read {}: {e}", self.args.file.display()))
        })?;
        let pf = problem::parse(&text)?;
        if pf.kind != self.kind {
            return Err(Error::InvalidProblem(format!(
                "`{}` command given a {} file",
                self.kind.name(),
                pf.kind.name()
            )));
        }
        let parsed = pf.problem()?;
        let (dp, imm) = match parsed {
            Problem::Immersion(p) => (build_h(&p), Some(p)),
            Problem::Degree(dp) => (dp, None),
        };
        let u_flag = match &self.args.u {
            Some(s) => Some(parse_polynomial(dp.ring(), s).map_err(|e| match e {
                Error::Parse {
                    column, message, ..
                } => Error::InvalidProblem(format!("--u column {column}: {message}")),
                other => other,
            })?),
            None => None,
        };

        let checked = match check_assumptions(&dp) {
            Ok(c) => c,
            Err(failure) => {
                self.report.assumption_checks = Checks {
                    finite_dim: failure.checks.finite_dim,
                    comaximal: failure.checks.comaximal,
                };
                return Err(failure.error);
            }
        };
        self.report.assumption_checks = Checks {
            finite_dim: Some(true),
            comaximal: Some(true),
        };
        self.report.dim_a = Some(checked.algebra.dim());
        let analysis = analyze_checked(&dp, checked)?;
        self.report.signature_phi_t = Some(analysis.phi_t.signature());
        if self.args.dump_algebra {
            self.report.algebra = Some(algebra_dump(&analysis.algebra));
        }
        if self.args.dump_bezoutian {
            self.report.bezoutian = Some(matrix_strings(analysis.bezoutian.coords()));
        }
        if self.args.dump_forms {
            self.report.forms = Some(vec![form_dump("Phi_T", &analysis.phi_t)]);
        }
        if self.args.verify {
            self.verify(&dp, &analysis);
        }

        match imm {
            Some(p) => {
                self.report.m = Some(p.m());
                let opts = SearchOptions {
                    seed: self.args.seed,
                    retries: self.args.retries,
                    u: u_flag,
                    phi: None,
                };
                let rep = intersection_number_from(&p, &dp, &analysis, &opts)?;
                let deg = rep.degree;
                match deg.result {
                    Outcome::Integer(k) => self.report.intersection_number = Some(k),
                    Outcome::Mod2(b) => {
                        self.report.intersection_number = Some(b as i64);
                        self.report.mod2 = true;
                        self.report.attempts = Some(rep.attempts);
                    }
                }
                self.report.det_sign_phi = deg.det_sign_phi;
                self.report.det_sign_psi = deg.det_sign_psi;
                self.report.u_used = deg.u_used.as_ref().map(|u| u.to_string());
                self.report.phi_used = deg.phi_used.as_ref().map(|f| strings(f.weights()));
                if let (Some(u), Some(phi)) = (&deg.u_used, &deg.phi_used) {
                    self.dump_pair(&analysis, u, phi)?;
                }
            }
            None => {
                self.report.degree_sum = Some(analysis.phi_t.signature());
                if let Some(u) = u_flag.as_ref().or(dp.u()) {
                    self.report.u_used = Some(u.to_string());
                    if self.args.dump_forms {
                        let psi = analysis.psi_t(u)?;
                        if let Some(f) = self.report.forms.as_mut() {
                            f.push(form_dump("Psi_T", &psi));
                        }
                    }
                    let half = analysis.degree_sum_halfspace(u)?;
                    self.report.signature_psi_t = half.signature_psi_t;
                    self.report.det_sign_phi = half.det_sign_phi;
                    self.report.det_sign_psi = half.det_sign_psi;
                    if let Outcome::Integer(k) = half.result {
                        self.report.degree_sum_halfspace = Some(k);
                    }
                }
            }
        }
        Ok(())
    }

    fn dump_pair(
        &mut self,
        analysis: &Analysis,
        u: &Polynomial,
        phi: &Functional,
    ) -> Result<(), Error> {
        if !self.args.dump_forms {
            return Ok(());
        }
        let f = build_form(&analysis.algebra, phi, None)?;
        let g = build_form(&analysis.algebra, phi, Some(u))?;
        if let Some(forms) = self.report.forms.as_mut() {
            forms.push(form_dump("Phi", &f));
            forms.push(form_dump("Psi", &g));
        }
        Ok(())
    }

    fn verify(&mut self, dp: &DegreeProblem, analysis: &Analysis) {
        let cfg = OracleConfig {
            seed: self.args.seed,
            ..OracleConfig::default()
        };
        let rep = numeric_degree_sum(dp, &cfg);
        self.report.oracle = Some(OracleSummary {
            sum: rep.sum,
            zeros: rep.zeros.len(),
            regular: rep.regular,
            agrees: rep.regular && rep.sum == analysis.phi_t.signature(),
        });
    }
}

/// Runs one command to completion without touching the process state.
pub fn execute(kind: Kind, args: &RunArgs) -> Execution {
    let mut session = Session {
        kind,
        args,
        report: Report::new(kind.name()),
    };
    let err = session.run().err();
    session.finish(err)
}
