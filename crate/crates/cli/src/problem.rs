//! Line-oriented problem files.
//!
//! ```text
//! # unit sphere
//! vars: x1 x2 x3
//! f: x1^2 + x2^2 + x3^2 - 1
//! g: x1
//! g: x2
//! g: x1*x3
//! g: x2*x3
//! ```
//!
//! Immersion files use `f:` and `g:` lines, degree files `h:`, `i:` and at
//! most one `u:` line.

use topodeg::degree::{DegreeProblem, ImmersionProblem};
use topodeg::polyring::{parse_polynomial, Polynomial, VarRing};
use topodeg::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Immersion,
    Degree,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Immersion => "immersion",
            Kind::Degree => "degree",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tag {
    F,
    G,
    H,
    I,
    U,
}

impl Tag {
    fn parse(s: &str) -> Option<Tag> {
        Some(match s {
            "f" => Tag::F,
            "g" => Tag::G,
            "h" => Tag::H,
            "i" => Tag::I,
            "u" => Tag::U,
            _ => return None,
        })
    }

    fn kind(self) -> Kind {
        match self {
            Tag::F | Tag::G => Kind::Immersion,
            Tag::H | Tag::I | Tag::U => Kind::Degree,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Statement {
    pub tag: Tag,
    pub poly: Polynomial,
    pub line: usize,
}

#[derive(Clone, Debug)]
pub struct ProblemFile {
    pub kind: Kind,
    pub ring: VarRing,
    pub statements: Vec<Statement>,
}

#[derive(Clone, Debug)]
pub enum Problem {
    Immersion(ImmersionProblem),
    Degree(DegreeProblem),
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

pub fn parse(text: &str) -> Result<ProblemFile> {
    let mut ring: Option<VarRing> = None;
    let mut kind: Option<(Kind, usize)> = None;
    let mut statements = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let Some(colon) = content.find(':') else {
            let col = content.len() - content.trim_start().len() + 1;
            return Err(parse_error(lineno, col, "expected `tag: ...`"));
        };
        let tag_text = content[..colon].trim();
        let body = &content[colon + 1..];
        let body_col = colon + 2;
        if tag_text == "vars" {
            if ring.is_some() {
                return Err(parse_error(lineno, 1, "duplicate `vars:` line"));
            }
            let names: Vec<&str> = body
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .collect();
            if names.is_empty() {
                return Err(parse_error(lineno, body_col, "no variables declared"));
            }
            for name in &names {
                let ok = name
                    .chars()
                    .next()
                    .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                    && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
                if !ok {
                    let col = colon + 2 + body.find(name).unwrap_or(0);
                    return Err(parse_error(
                        lineno,
                        col,
                        format!("invalid variable name `{name}`"),
                    ));
                }
            }
            ring = Some(
                VarRing::new(&names).map_err(|e| parse_error(lineno, body_col, e.to_string()))?,
            );
            continue;
        }
        let Some(tag) = Tag::parse(tag_text) else {
            let col = content.find(tag_text).unwrap_or(0) + 1;
            return Err(parse_error(
                lineno,
                col,
                format!("unknown tag `{tag_text}`"),
            ));
        };
        let Some(r) = ring.as_ref() else {
            return Err(parse_error(
                lineno,
                1,
                "`vars:` must come before polynomial lines",
            ));
        };
        match kind {
            None => kind = Some((tag.kind(), lineno)),
            Some((k, first)) if k != tag.kind() => {
                return Err(parse_error(
                    lineno,
                    1,
                    format!(
                        "`{tag_text}:` mixes a {} line into a {} file (line {first})",
                        tag.kind().name(),
                        k.name()
                    ),
                ));
            }
            Some(_) => {}
        }
        let poly = parse_polynomial(r, body).map_err(|e| match e {
            Error::Parse {
                column, message, ..
            } => parse_error(lineno, colon + 1 + column, message),
            other => other,
        })?;
        statements.push(Statement {
            tag,
            poly,
            line: lineno,
        });
    }
    let ring = ring.ok_or_else(|| parse_error(1, 1, "missing `vars:` line"))?;
    let (kind, _) = kind.ok_or_else(|| parse_error(1, 1, "no polynomial lines"))?;
    Ok(ProblemFile {
        kind,
        ring,
        statements,
    })
}

impl ProblemFile {
    fn polys(&self, tag: Tag) -> Vec<Polynomial> {
        self.statements
            .iter()
            .filter(|s| s.tag == tag)
            .map(|s| s.poly.clone())
            .collect()
    }

    /// Checks tag counts and builds the library problem.
    pub fn problem(&self) -> Result<Problem> {
        match self.kind {
            Kind::Immersion => {
                let f = self.polys(Tag::F);
                let g = self.polys(Tag::G);
                Ok(Problem::Immersion(ImmersionProblem::new(&self.ring, f, g)?))
            }
            Kind::Degree => {
                let h = self.polys(Tag::H);
                let mut u = self.polys(Tag::U);
                if u.len() > 1 {
                    return Err(Error::InvalidProblem(format!(
                        "at most one `u:` line allowed, got {}",
                        u.len()
                    )));
                }
                Ok(Problem::Degree(DegreeProblem::new(
                    &self.ring,
                    h,
                    self.polys(Tag::I),
                    u.pop(),
                )?))
            }
        }
    }
}
