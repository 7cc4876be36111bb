//! Problem files, in a line-oriented text form or as JSON.
//!
//! ```text
//! # comment
//! char 32003
//! vars x, y
//! quotient x*y^2
//! ideal I = x^2, x*y
//! task multseq I
//! seed 0
//! ```

use serde::{Deserialize, Serialize};

use super::parser::{parse_polynomial_at, split_top_level, Origin};
use crate::dependence::DEFAULT_MAX_N;
use crate::error::{Error, Result};
use crate::kernel::{FieldSpec, PolyRing, PrimeField, Rationals, DEFAULT_PRIME};
use crate::multseq::{Route, DEFAULT_CAP_N, DEFAULT_CAP_RS, DEFAULT_SEEDS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TaskKind {
    Multseq,
    Jmult,
    Endpoints,
    CheckIntegral,
    Sv,
    Hilbert,
}

impl TaskKind {
    pub const ALL: [TaskKind; 6] = [
        TaskKind::Multseq,
        TaskKind::Jmult,
        TaskKind::Endpoints,
        TaskKind::CheckIntegral,
        TaskKind::Sv,
        TaskKind::Hilbert,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            TaskKind::Multseq => "multseq",
            TaskKind::Jmult => "jmult",
            TaskKind::Endpoints => "endpoints",
            TaskKind::CheckIntegral => "check-integral",
            TaskKind::Sv => "sv",
            TaskKind::Hilbert => "hilbert",
        }
    }

    pub fn default_labels(&self) -> Vec<String> {
        let l: &[&str] = match self {
            TaskKind::CheckIntegral => &["I", "J"],
            TaskKind::Sv => &["X", "Y"],
            _ => &["I"],
        };
        l.iter().map(|s| s.to_string()).collect()
    }
}

impl std::str::FromStr for TaskKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TaskKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::Format(format!("unknown task {s}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TaskSpec {
    pub kind: TaskKind,
    #[serde(default)]
    pub labels: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealSpec {
    pub label: String,
    pub gens: Vec<String>,
}

/// Options as written in the file; unset values fall back to defaults.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seeds: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub route: Option<Route>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_n: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cap_rs: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cap_n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub equidimensional: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub join: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<bool>,
}

/// Options with every default filled in.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Settings {
    pub seed: u64,
    pub seeds: usize,
    pub route: Route,
    pub max_n: u32,
    pub cap_rs: usize,
    pub cap_n: usize,
    pub equidimensional: bool,
    pub join: bool,
    pub oracle: bool,
}

impl Options {
    /// `self` with every value set in `over` replacing ours.
    pub fn overridden_by(&self, over: &Options) -> Options {
        Options {
            seed: over.seed.or(self.seed),
            seeds: over.seeds.or(self.seeds),
            route: over.route.or(self.route),
            max_n: over.max_n.or(self.max_n),
            cap_rs: over.cap_rs.or(self.cap_rs),
            cap_n: over.cap_n.or(self.cap_n),
            equidimensional: over.equidimensional.or(self.equidimensional),
            join: over.join.or(self.join),
            oracle: over.oracle.or(self.oracle),
        }
    }

    pub fn settings(&self) -> Settings {
        Settings {
            seed: self.seed.unwrap_or(0),
            seeds: self.seeds.unwrap_or(DEFAULT_SEEDS),
            route: self.route.unwrap_or(Route::B),
            max_n: self.max_n.unwrap_or(DEFAULT_MAX_N),
            cap_rs: self.cap_rs.unwrap_or(DEFAULT_CAP_RS),
            cap_n: self.cap_n.unwrap_or(DEFAULT_CAP_N),
            equidimensional: self.equidimensional.unwrap_or(false),
            join: self.join.unwrap_or(false),
            oracle: self.oracle.unwrap_or(false),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    #[serde(rename = "char", default, skip_serializing_if = "Option::is_none")]
    pub characteristic: Option<u64>,
    pub vars: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub quotient: Vec<String>,
    #[serde(default)]
    pub ideals: Vec<IdealSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub task: Option<TaskSpec>,
    #[serde(default)]
    pub options: Options,
}

fn perr(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn is_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_alphabetic() || c == '_')
        && chars.all(|c| c.is_alphanumeric() || c == '_')
}

fn parse_bool(s: &str) -> Option<bool> {
    match s {
        "true" | "yes" | "1" => Some(true),
        "false" | "no" | "0" => Some(false),
        _ => None,
    }
}

/// A polynomial string with the position where it starts in the file.
#[derive(Clone, Copy)]
struct Located<'a> {
    text: &'a str,
    origin: Origin,
}

fn leading_ws(s: &str) -> usize {
    s.chars().take_while(|c| c.is_whitespace()).count()
}

/// Splits a generator list, trimming each piece and tracking its column.
fn split_gens(text: &str, line: usize, col: usize) -> Result<Vec<Located<'_>>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    split_top_level(text)
        .into_iter()
        .map(|(off, piece)| {
            let c = col + off + leading_ws(piece);
            let t = piece.trim();
            if t.is_empty() {
                return Err(perr(line, c, "empty generator"));
            }
            Ok(Located {
                text: t,
                origin: Origin { line, column: c },
            })
        })
        .collect()
}

impl ProblemFile {
    pub fn field_spec(&self) -> Result<FieldSpec> {
        FieldSpec::new(self.characteristic.unwrap_or(DEFAULT_PRIME))
    }

    /// The same file over another field, with every polynomial checked again.
    pub fn with_characteristic(&self, characteristic: u64) -> Result<Self> {
        let mut out = self.clone();
        out.characteristic = Some(characteristic);
        out.validate(None)?;
        Ok(out)
    }

    pub fn ideal(&self, label: &str) -> Result<&IdealSpec> {
        self.ideals
            .iter()
            .find(|i| i.label == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Reads a file, choosing JSON when the first non-blank byte is `{`.
    pub fn from_bytes(bytes: &[u8]) -> Result<Self> {
        let text = match std::str::from_utf8(bytes) {
            Ok(t) => t,
            Err(e) => {
                let valid = &bytes[..e.valid_up_to()];
                let prefix = std::str::from_utf8(valid).expect("valid prefix");
                let line = prefix.matches('\n').count() + 1;
                let column = prefix.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
                return Err(perr(line, column, "invalid UTF-8"));
            }
        };
        Self::parse(text)
    }

    pub fn parse(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            Self::from_json(text)
        } else {
            Self::from_text(text)
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: ProblemFile =
            serde_json::from_str(text).map_err(|e| perr(e.line().max(1), e.column().max(1), format!("invalid JSON: {e}")))?;
        file.validate(None)?;
        Ok(file)
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut file = ProblemFile {
            characteristic: None,
            vars: Vec::new(),
            quotient: Vec::new(),
            ideals: Vec::new(),
            task: None,
            options: Options::default(),
        };
        // positions of every polynomial, checked once the variables are known
        let mut spots: Vec<(usize, usize)> = Vec::new();
        let mut quotient_spots = Vec::new();
        let mut ideal_spots: Vec<Vec<(usize, usize)>> = Vec::new();
        let mut seen_vars = false;
        for (k, raw) in text.lines().enumerate() {
            let line = k + 1;
            let content = match raw.find('#') {
                Some(p) => &raw[..p],
                None => raw,
            };
            if content.trim().is_empty() {
                continue;
            }
            let indent = leading_ws(content);
            let body = content.trim_start();
            let key_len = body.find(char::is_whitespace).unwrap_or(body.len());
            let key = &body[..key_len];
            let rest = &body[key_len..];
            let rest_col = 1 + indent + key.chars().count() + leading_ws(rest);
            let value = rest.trim();
            let missing = || perr(line, rest_col, format!("missing value for {key}"));
            let bad = |what: &str| perr(line, rest_col, format!("invalid {what}: {value}"));
            match key {
                "char" => {
                    let p: u64 = value.parse().map_err(|_| bad("characteristic"))?;
                    FieldSpec::new(p).map_err(|e| perr(line, rest_col, e.to_string()))?;
                    file.characteristic = Some(p);
                }
                "vars" => {
                    if seen_vars {
                        return Err(perr(line, 1 + indent, "variables declared twice"));
                    }
                    seen_vars = true;
                    for (off, piece) in split_top_level(rest) {
                        let name = piece.trim();
                        let col = 1 + indent + key.chars().count() + off + leading_ws(piece);
                        if !is_name(name) {
                            return Err(perr(line, col, format!("invalid variable name {name:?}")));
                        }
                        if file.vars.iter().any(|v| v == name) {
                            return Err(perr(line, col, format!("duplicate variable {name}")));
                        }
                        file.vars.push(name.to_string());
                    }
                }
                "quotient" => {
                    let col0 = 1 + indent + key.chars().count();
                    for g in split_gens(rest, line, col0)? {
                        file.quotient.push(g.text.to_string());
                        quotient_spots.push((g.origin.line, g.origin.column));
                    }
                }
                "ideal" => {
                    let eq = rest.find('=').ok_or_else(|| perr(line, rest_col, "expected 'ideal LABEL = generators'"))?;
                    let label = rest[..eq].trim();
                    if !is_name(label) {
                        return Err(perr(line, rest_col, format!("invalid label {label:?}")));
                    }
                    if file.ideals.iter().any(|i| i.label == label) {
                        return Err(perr(line, rest_col, format!("ideal {label} defined twice")));
                    }
                    let col0 = 1 + indent + key.chars().count() + rest[..=eq].chars().count();
                    let gens = split_gens(&rest[eq + 1..], line, col0)?;
                    ideal_spots.push(gens.iter().map(|g| (g.origin.line, g.origin.column)).collect());
                    file.ideals.push(IdealSpec {
                        label: label.to_string(),
                        gens: gens.iter().map(|g| g.text.to_string()).collect(),
                    });
                }
                "task" => {
                    let mut words = value.split_whitespace();
                    let kind: TaskKind = words
                        .next()
                        .ok_or_else(missing)?
                        .parse()
                        .map_err(|_| bad("task"))?;
                    let labels: Vec<String> = words.map(|w| w.to_string()).collect();
                    file.task = Some(TaskSpec { kind, labels });
                }
                "seed" => file.options.seed = Some(value.parse().map_err(|_| bad("seed"))?),
                "seeds" => file.options.seeds = Some(value.parse().map_err(|_| bad("seed count"))?),
                "route" => file.options.route = Some(value.parse().map_err(|_| bad("route"))?),
                "max_n" => file.options.max_n = Some(value.parse().map_err(|_| bad("max_n"))?),
                "cap_rs" => file.options.cap_rs = Some(value.parse().map_err(|_| bad("cap_rs"))?),
                "cap_n" => file.options.cap_n = Some(value.parse().map_err(|_| bad("cap_n"))?),
                "equidimensional" => file.options.equidimensional = Some(parse_bool(value).ok_or_else(|| bad("flag"))?),
                "join" => file.options.join = Some(parse_bool(value).ok_or_else(|| bad("flag"))?),
                "oracle" => file.options.oracle = Some(parse_bool(value).ok_or_else(|| bad("flag"))?),
                other => return Err(perr(line, 1 + indent, format!("unknown keyword {other}"))),
            }
            if value.is_empty() && !matches!(key, "ideal" | "quotient") {
                return Err(missing());
            }
        }
        spots.extend(quotient_spots);
        for s in ideal_spots {
            spots.extend(s);
        }
        file.validate(Some(&spots))?;
        Ok(file)
    }

    /// Checks the field, the variables and every polynomial string.
    fn validate(&self, spots: Option<&[(usize, usize)]>) -> Result<()> {
        let spec = self.field_spec().map_err(|e| perr(1, 1, e.to_string()))?;
        if self.vars.is_empty() {
            return Err(perr(1, 1, "no variables declared"));
        }
        for (k, v) in self.vars.iter().enumerate() {
            if !is_name(v) || self.vars[..k].contains(v) {
                return Err(perr(1, 1, format!("invalid or duplicate variable {v:?}")));
            }
        }
        for (k, i) in self.ideals.iter().enumerate() {
            if self.ideals[..k].iter().any(|j| j.label == i.label) {
                return Err(perr(1, 1, format!("ideal {} defined twice", i.label)));
            }
        }
        let texts: Vec<&str> = self
            .quotient
            .iter()
            .chain(self.ideals.iter().flat_map(|i| i.gens.iter()))
            .map(|s| s.as_str())
            .collect();
        let origin = |k: usize| match spots {
            Some(s) => Origin {
                line: s[k].0,
                column: s[k].1,
            },
            None => Origin::default(),
        };
        if spec.characteristic == 0 {
            let ring = PolyRing::new(Rationals, self.vars.clone());
            for (k, t) in texts.iter().enumerate() {
                parse_polynomial_at(t, &ring, origin(k))?;
            }
        } else {
            let ring = PolyRing::new(PrimeField::new(spec.characteristic)?, self.vars.clone());
            for (k, t) in texts.iter().enumerate() {
                parse_polynomial_at(t, &ring, origin(k))?;
            }
        }
        Ok(())
    }

    /// The text form; `parse(to_text(f)) == f`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(p) = self.characteristic {
            out.push_str(&format!("char {p}\n"));
        }
        out.push_str(&format!("vars {}\n", self.vars.join(", ")));
        if !self.quotient.is_empty() {
            out.push_str(&format!("quotient {}\n", self.quotient.join(", ")));
        }
        for i in &self.ideals {
            out.push_str(&format!("ideal {} = {}\n", i.label, i.gens.join(", ")));
        }
        if let Some(t) = &self.task {
            out.push_str("task ");
            out.push_str(t.kind.as_str());
            for l in &t.labels {
                out.push(' ');
                out.push_str(l);
            }
            out.push('\n');
        }
        let o = &self.options;
        let mut opt = |k: &str, v: Option<String>| {
            if let Some(v) = v {
                out.push_str(&format!("{k} {v}\n"));
            }
        };
        opt("seed", o.seed.map(|v| v.to_string()));
        opt("seeds", o.seeds.map(|v| v.to_string()));
        opt("route", o.route.map(|v| v.to_string()));
        opt("max_n", o.max_n.map(|v| v.to_string()));
        opt("cap_rs", o.cap_rs.map(|v| v.to_string()));
        opt("cap_n", o.cap_n.map(|v| v.to_string()));
        opt("equidimensional", o.equidimensional.map(|v| v.to_string()));
        opt("join", o.join.map(|v| v.to_string()));
        opt("oracle", o.oracle.map(|v| v.to_string()));
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("problem files serialize")
    }
}
