//! Verification suites, structure-constant tables and canonical expansions.
//!
//! Every suite enumerates a deterministic grid of checks, evaluates them in
//! parallel and reports them in grid order.

mod expand;
mod suites;
mod table;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use expand::{expand_comult, expand_idp, Basis, ComultForm};
pub use suites::{weight_profiles, WeightProfile};
pub use table::{constant_table, emit_table, ConstantTable, TableFormat, TableRow};

/// Environment variable holding the largest accepted bound (default [`DEFAULT_CEILING`]).
pub const CEILING_VAR: &str = "IQUANTUM_MAX_N";
pub const DEFAULT_CEILING: i64 = 24;

/// The resource ceiling currently in force.
pub fn ceiling() -> i64 {
    std::env::var(CEILING_VAR)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_CEILING)
}

pub(crate) fn check_ceiling(requested: i64) -> Result<()> {
    let ceiling = ceiling();
    if requested > ceiling {
        return Err(Error::ResourceLimit { requested, ceiling });
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VarsigmaMode {
    /// `v` is an independent formal variable.
    #[serde(rename = "generic")]
    Generic,
    /// Both sides are compared after substituting `v = q^-1`.
    #[serde(rename = "q-inverse")]
    Specialized,
}

impl fmt::Display for VarsigmaMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VarsigmaMode::Generic => "generic",
            VarsigmaMode::Specialized => "q-inverse",
        })
    }
}

impl FromStr for VarsigmaMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "generic" => Ok(VarsigmaMode::Generic),
            "q-inverse" | "specialized" => Ok(VarsigmaMode::Specialized),
            _ => Err(Error::Parse(format!("unknown varsigma mode `{s}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    QIdentities,
    PbwCore,
    MultEven,
    MultOdd,
    ComultEven,
    ComultOdd,
    FhyForms,
    ProofRecurrences,
    Chi,
    Positivity,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::QIdentities,
        Suite::PbwCore,
        Suite::MultEven,
        Suite::MultOdd,
        Suite::ComultEven,
        Suite::ComultOdd,
        Suite::FhyForms,
        Suite::ProofRecurrences,
        Suite::Chi,
        Suite::Positivity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::QIdentities => "qidentities",
            Suite::PbwCore => "pbw-core",
            Suite::MultEven => "mult-even",
            Suite::MultOdd => "mult-odd",
            Suite::ComultEven => "comult-even",
            Suite::ComultOdd => "comult-odd",
            Suite::FhyForms => "fhy-forms",
            Suite::ProofRecurrences => "proof-recurrences",
            Suite::Chi => "chi",
            Suite::Positivity => "positivity",
        }
    }

    /// The bound used when none is given.
    pub fn default_bound(self, mode: VarsigmaMode) -> i64 {
        let specialized = mode == VarsigmaMode::Specialized;
        match self {
            Suite::QIdentities => 20,
            Suite::PbwCore => 12,
            Suite::MultEven | Suite::MultOdd => {
                if specialized {
                    16
                } else {
                    12
                }
            }
            Suite::ComultEven | Suite::ComultOdd => {
                if specialized {
                    8
                } else {
                    6
                }
            }
            Suite::FhyForms => 6,
            Suite::ProofRecurrences => 8,
            Suite::Chi => 10,
            Suite::Positivity => 16,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub params: BTreeMap<String, i64>,
    pub pass: bool,
    /// The nonzero difference (or the error) when the check fails.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Parameters {
    pub bound: i64,
    pub varsigma: VarsigmaMode,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub parameters: Parameters,
    pub checks: Vec<Check>,
    pub wall_time_s: f64,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn count(&self, id: &str) -> usize {
        self.checks.iter().filter(|c| c.id == id).count()
    }

    /// JSON text with keys in a fixed order.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is serializable")
    }
}

/// Outcome of one check: `None` on success, otherwise a witness.
pub(crate) type Outcome = Result<Option<String>>;

pub(crate) struct Job {
    id: &'static str,
    params: Vec<(&'static str, i64)>,
    run: Box<dyn Fn() -> Outcome + Send + Sync>,
}

pub(crate) fn job(
    id: &'static str,
    params: &[(&'static str, i64)],
    run: impl Fn() -> Outcome + Send + Sync + 'static,
) -> Job {
    Job {
        id,
        params: params.to_vec(),
        run: Box::new(run),
    }
}

/// Runs `suite` up to `bound`. Fails only on bad arguments; failing checks are reported, not raised.
pub fn run_suite(suite: Suite, bound: i64, mode: VarsigmaMode) -> Result<SuiteReport> {
    if bound < 1 {
        return Err(Error::InvalidBound(bound));
    }
    check_ceiling(bound)?;
    let start = Instant::now();
    let jobs = suites::jobs(suite, bound as i32, mode);
    let checks = jobs
        .into_par_iter()
        .map(|j| {
            let (pass, witness) = match (j.run)() {
                Ok(None) => (true, None),
                Ok(Some(w)) => (false, Some(w)),
                Err(e) => (false, Some(format!("error: {e}"))),
            };
            Check {
                id: j.id.to_string(),
                params: j.params.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
                pass,
                witness,
            }
        })
        .collect();
    Ok(SuiteReport {
        suite: suite.name().to_string(),
        parameters: Parameters { bound, varsigma: mode },
        checks,
        wall_time_s: start.elapsed().as_secs_f64(),
    })
}

/// Parses the suite name first so that unknown names report `UnknownSuite`.
pub fn run_suite_named(name: &str, bound: Option<i64>, mode: VarsigmaMode) -> Result<SuiteReport> {
    let suite: Suite = name.parse()?;
    run_suite(suite, bound.unwrap_or_else(|| suite.default_bound(mode)), mode)
}
