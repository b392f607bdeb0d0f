//! Task dispatch and JSON rendering.

use matdet::determinacy::{radical_support_glr, sing, t1_ann, verdict};
use matdet::jets::jet_loewy;
use matdet::{Decision, GroupBase, Ideal, PolyMatrix, RadicalOptions, Space, Verdict};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::CliResult;
use crate::session::{Loaded, Task, SCHEMA};
use crate::suite;

/// Largest default jet degree for oracle cross-checks.
pub const JET_CAP: u32 = 12;

#[derive(Debug, Serialize)]
pub struct RingEcho {
    pub vars: Vec<String>,
    pub field: String,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub task: &'static str,
    pub ring: RingEcho,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub space: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<String>>>,
    pub result: Value,
    pub elapsed_ms: u64,
}

/// Exit status of a computed report.
pub fn exit_code(task: Task, result: &Value) -> i32 {
    match (task, result["verdict"]["label"].as_str()) {
        (Task::Verdict, Some("not-finitely-determined")) => 2,
        (Task::Verdict, Some("unknown")) => 3,
        (Task::Suite, _) if result["all_ok"] == json!(false) => 1,
        _ => 0,
    }
}

pub fn build(loaded: &Loaded, result: Value, elapsed_ms: u64) -> Report {
    let a = loaded.matrix.as_ref();
    Report {
        schema: SCHEMA,
        task: loaded.task.name(),
        ring: RingEcho {
            vars: loaded.ring.vars().to_vec(),
            field: loaded.ring.field().to_string(),
        },
        space: a.map(|a| a.space().to_string()),
        group: loaded.group.map(|g| g.to_string()),
        matrix: a.map(matrix_strings),
        result,
        elapsed_ms,
    }
}

fn matrix_strings(a: &PolyMatrix) -> Vec<Vec<String>> {
    (0..a.rows())
        .map(|i| (0..a.cols()).map(|j| a.get(i, j).to_string()).collect())
        .collect()
}

/// Canonical generators, Loewy length and the jet cross-check of `ll`.
pub fn ideal_value(i: &Ideal, jet_degree: Option<u32>) -> CliResult<Value> {
    let gens = i.canonical_strings()?;
    let ll = i.contains_power_of_max()?;
    let oracle = match ll {
        Some(ll) => {
            let d = jet_degree.unwrap_or((ll + 2).min(JET_CAP));
            let jl = jet_loewy(i, d);
            let expected = if ll < d { Some(ll) } else { None };
            json!({"degree": d, "jet_loewy": jl, "agrees": jl == expected})
        }
        None => Value::Null,
    };
    Ok(json!({"gens": gens, "loewy": ll, "oracle": oracle}))
}

pub fn run(loaded: &Loaded) -> CliResult<Value> {
    let jd = loaded.options.jet_degree;
    match loaded.task {
        Task::Minors => {
            let a = loaded.matrix()?;
            let js: Vec<i64> = match loaded.options.j {
                Some(j) => vec![j],
                None => (1..=a.rows().min(a.cols()) as i64).collect(),
            };
            let mut out = Vec::new();
            for j in js {
                let i = a.minors(j)?;
                out.push(json!({"j": j, "height": i.height()?, "ideal": ideal_value(&i, jd)?}));
            }
            Ok(json!({ "minors": out }))
        }
        Task::AnnCoker => {
            let a = loaded.matrix()?;
            let js: Vec<i64> = match loaded.options.j {
                Some(j) => vec![j],
                None => (1..=a.rows() as i64).collect(),
            };
            let mut out = Vec::new();
            for j in js {
                out.push(json!({"j": j, "ideal": ideal_value(&a.ann_coker_j(j)?, jd)?}));
            }
            Ok(json!({ "ann_coker": out }))
        }
        Task::Sing => {
            let j = match loaded.ideal_option("ideal", &loaded.options.ideal)? {
                Some(j) => j,
                None => loaded.matrix()?.minors(1)?,
            };
            let r = match loaded.options.r {
                Some(r) => r,
                None => j.height()?,
            };
            let d = loaded.derivations()?;
            let s = sing(&j, r, &d)?;
            Ok(json!({
                "r": r,
                "derivations": format!("{:?}", d.multiplier()).to_ascii_lowercase(),
                "ideal": j.canonical_strings()?,
                "sing": ideal_value(&s, jd)?,
            }))
        }
        Task::Sat => {
            let i = required(loaded, "ideal", &loaded.options.ideal)?;
            let by = required(loaded, "by", &loaded.options.by)?;
            let (s, k) = i.saturate(&by)?;
            Ok(json!({"saturation": ideal_value(&s, jd)?, "exponent": k}))
        }
        Task::Loewy => {
            let i = required(loaded, "ideal", &loaded.options.ideal)?;
            Ok(json!({ "ideal": ideal_value(&i, jd)? }))
        }
        Task::T1 => {
            let a = loaded.matrix()?;
            let i = t1_ann(loaded.group()?, a)?;
            Ok(json!({ "t1_ann": ideal_value(&i, jd)? }))
        }
        Task::Verdict => verdict_value(loaded),
        Task::Suite => suite::run(&loaded.ring, loaded.options.seed.unwrap_or(42)),
    }
}

fn required(loaded: &Loaded, name: &str, gens: &Option<Vec<String>>) -> CliResult<Ideal> {
    loaded.ideal_option(name, gens)?.ok_or_else(|| {
        crate::error::CliError::Usage(format!("options.{name}: required by task {}", loaded.task.name()))
    })
}

fn verdict_value(loaded: &Loaded) -> CliResult<Value> {
    let a = loaded.matrix()?;
    let group = loaded.group()?;
    let jd = loaded.options.jet_degree;
    let rep = verdict(group, a)?;
    let opt_ideal = |i: &Option<Ideal>| -> CliResult<Value> {
        match i {
            Some(i) => ideal_value(i, jd),
            None => Ok(Value::Null),
        }
    };
    let heights: Vec<Value> = rep
        .heights
        .iter()
        .map(|h| json!({"j": h.j, "height": h.height, "expected": h.expected, "ok": h.ok}))
        .collect();
    let v = match &rep.verdict {
        Verdict::FinitelyDetermined { lo, hi } => json!({"label": rep.verdict.label(), "lo": lo, "hi": hi}),
        Verdict::NotFinitelyDetermined { reason } | Verdict::Unknown { reason } => {
            json!({"label": rep.verdict.label(), "reason": reason})
        }
    };
    let radical = match (loaded.options.power_bound, &rep.exact) {
        (Some(bound), Some(exact)) if group.base == GroupBase::CGlr && a.space() == Space::Full => {
            Value::String(radical_agreement(a, exact, bound)?.into())
        }
        _ => Value::Null,
    };
    Ok(json!({
        "rows": rep.rows,
        "cols": rep.cols,
        "p": rep.p,
        "heights": heights,
        "lower": opt_ideal(&rep.lower)?,
        "exact": opt_ideal(&rep.exact)?,
        "upper": opt_ideal(&rep.upper)?,
        "sandwich": rep.sandwich,
        "radical_agreement": radical,
        "verdict": v,
    }))
}

/// Compares `√ann(T¹)` with the radical support ideal away from the closed
/// point, trying powers up to `bound`.
fn radical_agreement(a: &PolyMatrix, exact: &Ideal, bound: u32) -> CliResult<&'static str> {
    let m = Ideal::max_ideal(a.ring());
    let lhs = exact.saturate(&m)?.0;
    let rhs = radical_support_glr(a)?.saturate(&m)?.0;
    let opts = RadicalOptions {
        power_bound: bound,
        rabinowitsch: false,
    };
    Ok(match lhs.radicals_equal(&rhs, &opts)? {
        Decision::Yes => "yes",
        Decision::No => "no",
        Decision::Unknown => "unknown",
    })
}

