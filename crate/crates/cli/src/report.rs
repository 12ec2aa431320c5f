//! JSON report schema.

use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checks {
    pub finite_dim: Option<bool>,
    pub comaximal: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleSummary {
    pub sum: i64,
    pub zeros: usize,
    pub regular: bool,
    pub agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDump {
    pub dim: usize,
    pub basis: Vec<String>,
    /// `multable[i][j]` are the coordinates of `e_i e_j`.
    pub multable: Vec<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormDump {
    pub name: String,
    pub matrix: Vec<Vec<String>>,
    pub signature: i64,
    pub det_sign: i32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorInfo {
    pub class: String,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub kind: String,
    #[serde(rename = "dim_A", skip_serializing_if = "Option::is_none", default)]
    pub dim_a: Option<usize>,
    #[serde(
        rename = "signature_phi_T",
        skip_serializing_if = "Option::is_none",
        default
    )]
    pub signature_phi_t: Option<i64>,
    #[serde(
        rename = "signature_psi_T",
        skip_serializing_if = "Option::is_none",
        default
    )]
    pub signature_psi_t: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub det_sign_phi: Option<i32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub det_sign_psi: Option<i32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub m: Option<usize>,
    /// Integer for even `m`, `0`/`1` for odd `m`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub intersection_number: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub degree_sum: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub degree_sum_halfspace: Option<i64>,
    pub mod2: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub u_used: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub phi_used: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub attempts: Option<usize>,
    pub assumption_checks: Checks,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub oracle: Option<OracleSummary>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub algebra: Option<AlgebraDump>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub bezoutian: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub forms: Option<Vec<FormDump>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<ErrorInfo>,
}

impl Report {
    pub fn new(kind: &str) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            kind: kind.to_string(),
            dim_a: None,
            signature_phi_t: None,
            signature_psi_t: None,
            det_sign_phi: None,
            det_sign_psi: None,
            m: None,
            intersection_number: None,
            degree_sum: None,
            degree_sum_halfspace: None,
            mod2: false,
            u_used: None,
            phi_used: None,
            attempts: None,
            assumption_checks: Checks::default(),
            oracle: None,
            algebra: None,
            bezoutian: None,
            forms: None,
            error: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// Plain text rendering.
    pub fn human(&self) -> String {
        let mut out = String::new();
        let mut line = |k: &str, v: String| out.push_str(&format!("{k:<24}{v}\n"));
        line("kind", self.kind.clone());
        let flag = |b: Option<bool>| match b {
            Some(true) => "ok".to_string(),
            Some(false) => "FAILED".to_string(),
            None => "not reached".to_string(),
        };
        line("finite_dim", flag(self.assumption_checks.finite_dim));
        line("comaximal", flag(self.assumption_checks.comaximal));
        if let Some(d) = self.dim_a {
            line("dim A", d.to_string());
        }
        if let Some(m) = self.m {
            line("m", m.to_string());
        }
        if let Some(s) = self.signature_phi_t {
            line("signature Phi_T", s.to_string());
        }
        if let Some(s) = self.signature_psi_t {
            line("signature Psi_T", s.to_string());
        }
        if let Some(s) = self.det_sign_phi {
            line("sgn det Phi", s.to_string());
        }
        if let Some(s) = self.det_sign_psi {
            line("sgn det Psi", s.to_string());
        }
        if let Some(u) = &self.u_used {
            line("u", u.clone());
        }
        if let Some(phi) = &self.phi_used {
            line("phi weights", phi.join(" "));
        }
        if let Some(k) = self.degree_sum {
            line("degree sum", k.to_string());
        }
        if let Some(k) = self.degree_sum_halfspace {
            line("degree sum (u > 0)", k.to_string());
        }
        if let Some(k) = self.intersection_number {
            let v = if self.mod2 {
                format!("{k} (mod 2)")
            } else {
                k.to_string()
            };
            line("intersection number", v);
        }
        if let Some(o) = &self.oracle {
            line(
                "oracle",
                format!(
                    "sum {} over {} zeros, regular {}, agrees {}",
                    o.sum, o.zeros, o.regular, o.agrees
                ),
            );
        }
        if let Some(e) = &self.error {
            line("error", format!("{} ({})", e.message, e.class));
        }
        if let Some(a) = &self.algebra {
            out.push_str(&format!(
                "\nalgebra: dim {}\nbasis: {}\n",
                a.dim,
                a.basis.join(", ")
            ));
            for (i, row) in a.multable.iter().enumerate() {
                for (j, v) in row.iter().enumerate().skip(i) {
                    out.push_str(&format!("e{} * e{} = [{}]\n", i + 1, j + 1, v.join(", ")));
                }
            }
        }
        if let Some(t) = &self.bezoutian {
            out.push_str("\nbezoutian t:\n");
            out.push_str(&matrix_text(t));
        }
        if let Some(forms) = &self.forms {
            for f in forms {
                out.push_str(&format!(
                    "\n{}: signature {}, sgn det {}\n",
                    f.name, f.signature, f.det_sign
                ));
                out.push_str(&matrix_text(&f.matrix));
            }
        }
        out
    }
}

fn matrix_text(rows: &[Vec<String>]) -> String {
    let width = rows.iter().flatten().map(|s| s.len()).max().unwrap_or(1);
    rows.iter()
        .map(|r| {
            let cells: Vec<String> = r.iter().map(|s| format!("{s:>width$}")).collect();
            format!("[ {} ]\n", cells.join("  "))
        })
        .collect()
}
