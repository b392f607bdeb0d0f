//! Session documents and their validation.

use std::str::FromStr;

use matdet::determinacy::{DerivationSet, Multiplier};
use matdet::{Field, GroupBase, GroupSpec, Ideal, MonomialOrder, PolyMatrix, Polynomial, Ring, RingCtx, Space};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

pub const SCHEMA: &str = "1";

/// Environment variable overriding the S-pair budget of every computation.
pub const BUDGET_VAR: &str = "MATDET_SPAIR_BUDGET";

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Session {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ring: Option<RingSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub space: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub task: Option<String>,
    #[serde(default)]
    pub options: Options,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingSpec {
    pub vars: Vec<String>,
    #[serde(default = "default_field")]
    pub field: String,
}

fn default_field() -> String {
    "QQ".into()
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub jet_degree: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub power_bound: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Index of `I_j` or `ann.coker_j`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub j: Option<i64>,
    /// Expected height passed to `sing`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideal: Option<Vec<String>>,
    /// The ideal saturated against.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub by: Option<Vec<String>>,
    /// `unit`, `max` or `max2`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub derivations: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Task {
    Minors,
    AnnCoker,
    Sing,
    Sat,
    Loewy,
    T1,
    Verdict,
    Suite,
}

impl Task {
    pub const ALL: [Task; 8] = [
        Task::Minors,
        Task::AnnCoker,
        Task::Sing,
        Task::Sat,
        Task::Loewy,
        Task::T1,
        Task::Verdict,
        Task::Suite,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Task::Minors => "minors",
            Task::AnnCoker => "anncoker",
            Task::Sing => "sing",
            Task::Sat => "sat",
            Task::Loewy => "loewy",
            Task::T1 => "t1",
            Task::Verdict => "verdict",
            Task::Suite => "suite",
        }
    }
}

impl FromStr for Task {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Task> {
        let lower = s.to_ascii_lowercase();
        Task::ALL
            .iter()
            .copied()
            .find(|t| t.name() == lower)
            .ok_or_else(|| CliError::Usage(format!("task: unknown task {s:?}")))
    }
}

/// `QQ` or `GFp:<prime>`.
pub fn parse_field(s: &str) -> CliResult<Field> {
    if s.eq_ignore_ascii_case("qq") {
        return Ok(Field::Rational);
    }
    let p = s
        .strip_prefix("GFp:")
        .or_else(|| s.strip_prefix("gfp:"))
        .ok_or_else(|| CliError::Usage(format!("ring.field: expected QQ or GFp:<prime>, got {s:?}")))?;
    let p: u32 = p
        .parse()
        .map_err(|_| CliError::Usage(format!("ring.field: {p:?} is not an integer")))?;
    Field::prime(p).map_err(|e| CliError::field("ring.field", e))
}

/// Group name, optionally followed by `^(m)` for the filtered subgroup.
pub fn parse_group(s: &str) -> CliResult<GroupSpec> {
    let (name, filtered) = match s.strip_suffix("^(m)") {
        Some(n) => (n, true),
        None => (s, false),
    };
    let base = GroupBase::from_str(name).map_err(|_| {
        let names: Vec<_> = GroupBase::ALL.iter().map(|g| g.name()).collect();
        CliError::Usage(format!("group: unknown group {s:?}, expected one of {}", names.join(", ")))
    })?;
    Ok(GroupSpec { base, filtered })
}

pub fn parse_derivations(s: &str) -> CliResult<Multiplier> {
    match s.to_ascii_lowercase().as_str() {
        "unit" | "all" => Ok(Multiplier::Unit),
        "max" | "m" => Ok(Multiplier::Max),
        "max2" | "m2" => Ok(Multiplier::MaxSquared),
        _ => Err(CliError::Usage(format!(
            "options.derivations: expected unit, max or max2, got {s:?}"
        ))),
    }
}

/// A session with every field parsed.
#[derive(Clone, Debug)]
pub struct Loaded {
    pub task: Task,
    pub ring: Ring,
    pub matrix: Option<PolyMatrix>,
    pub group: Option<GroupSpec>,
    pub options: Options,
}

impl Loaded {
    pub fn matrix(&self) -> CliResult<&PolyMatrix> {
        self.matrix
            .as_ref()
            .ok_or_else(|| CliError::Usage(format!("matrix: required by task {}", self.task.name())))
    }

    pub fn group(&self) -> CliResult<GroupSpec> {
        self.group
            .ok_or_else(|| CliError::Usage(format!("group: required by task {}", self.task.name())))
    }

    pub fn derivations(&self) -> CliResult<DerivationSet> {
        let m = match &self.options.derivations {
            Some(s) => parse_derivations(s)?,
            None => Multiplier::Unit,
        };
        Ok(DerivationSet::new(&self.ring, m))
    }

    /// Parses `options.<name>` as generators of an ideal.
    pub fn ideal_option(&self, name: &str, gens: &Option<Vec<String>>) -> CliResult<Option<Ideal>> {
        let Some(gens) = gens else { return Ok(None) };
        let polys = gens
            .iter()
            .enumerate()
            .map(|(i, s)| {
                Polynomial::parse(&self.ring, s)
                    .map_err(|e| CliError::field(format!("options.{name}[{i}] {s:?}"), e))
            })
            .collect::<CliResult<Vec<_>>>()?;
        Ok(Some(Ideal::new(&self.ring, polys)))
    }
}

pub fn parse_session(text: &str) -> CliResult<Session> {
    serde_json::from_str(text).map_err(|e| CliError::Json(e.to_string()))
}

/// Validates a session. `budget` caps every standard-basis computation.
pub fn load(session: &Session, budget: Option<u64>) -> CliResult<Loaded> {
    if let Some(s) = &session.schema {
        if s != SCHEMA {
            return Err(CliError::Usage(format!("schema: unsupported version {s:?}, expected \"{SCHEMA}\"")));
        }
    }
    let task: Task = session
        .task
        .as_deref()
        .ok_or_else(|| CliError::Usage("task: missing".into()))?
        .parse()?;
    let ring = match &session.ring {
        Some(spec) => {
            let field = parse_field(&spec.field)?;
            RingCtx::from_names(spec.vars.clone(), field, MonomialOrder::LocalDegRevLex)
                .map_err(|e| CliError::field("ring.vars", e))?
        }
        None if task == Task::Suite => RingCtx::local_numbered(2, Field::prime(32003)?)?,
        None => return Err(CliError::Usage("ring: missing".into())),
    };
    let ring = ring.with_spair_budget(budget);
    let space = match &session.space {
        Some(s) => Space::from_str(s).map_err(|e| CliError::field("space", e))?,
        None => Space::Full,
    };
    let matrix = match &session.matrix {
        Some(rows) => Some(parse_matrix(&ring, rows, space)?),
        None => None,
    };
    let group = session.group.as_deref().map(parse_group).transpose()?;
    Ok(Loaded {
        task,
        ring,
        matrix,
        group,
        options: session.options.clone(),
    })
}

fn parse_matrix(ring: &Ring, rows: &[Vec<String>], space: Space) -> CliResult<PolyMatrix> {
    let n = rows.first().map(Vec::len).unwrap_or(0);
    let mut entries = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(CliError::field(
                format!("matrix[{i}]"),
                matdet::Error::InvalidMatrix(format!("row has {} entries, expected {n}", row.len())),
            ));
        }
        for (j, s) in row.iter().enumerate() {
            let f = Polynomial::parse(ring, s).map_err(|e| CliError::field(format!("matrix[{i}][{j}] {s:?}"), e))?;
            entries.push(f);
        }
    }
    PolyMatrix::new(ring, rows.len(), n, entries, space).map_err(|e| CliError::field("matrix", e))
}

/// Reads the budget override; unset or empty means unlimited.
pub fn budget_from_env() -> CliResult<Option<u64>> {
    match std::env::var(BUDGET_VAR) {
        Ok(v) if v.trim().is_empty() => Ok(None),
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| CliError::Usage(format!("{BUDGET_VAR}: {v:?} is not a nonnegative integer"))),
        Err(_) => Ok(None),
    }
}
