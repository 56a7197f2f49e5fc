//! The verification sweep: evaluate every requested method on every
//! parameter tuple, compare values degree by degree, and persist the
//! outcomes. Tuples are distributed across a worker pool; results are
//! re-sorted by key before reporting so parallel and serial runs print
//! byte-identical summaries.

use crate::cache::{self, Cache, VerificationRecord};
use crate::output::{DisagreementOut, VerifyReport, VerifySummary};
use powideal::error::Error;
use powideal::exec::{map_items, ExecMode};
use powideal::hilbert::{hf_conjectured, hf_proved_k2, hf_table, Method};
use powideal::oracle::{hf_oracle, OracleConfig};
use powideal::{fatpoints, Params};
use std::collections::BTreeMap;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DegreePolicy {
    All,
    Range(u32, u32),
}

#[derive(Debug, Clone)]
pub struct SweepSpec {
    pub n: (u32, u32),
    pub k: (u32, u32),
    pub d: (u32, u32),
    pub degrees: DegreePolicy,
    pub methods: Vec<Method>,
    pub max_block_entries: usize,
    pub mode: ExecMode,
    pub skip_guarded: bool,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<(), String> {
        if self.methods.is_empty() {
            return Err("no methods requested".into());
        }
        if self.k.0 < 2 {
            return Err(format!("k must be >= 2, got {}", self.k.0));
        }
        if self.d.0 < 1 {
            return Err(format!("d must be >= 1, got {}", self.d.0));
        }
        Ok(())
    }

    fn tuples(&self) -> Vec<Params> {
        let mut out = Vec::new();
        for n in self.n.0..=self.n.1 {
            for k in self.k.0..=self.k.1 {
                for d in self.d.0..=self.d.1 {
                    if let Ok(p) = Params::new(n, k, d) {
                        out.push(p);
                    }
                }
            }
        }
        out
    }
}

/// Degrees at which a method is defined for the given parameters, before
/// the degree policy is applied. Methods that do not apply to the tuple at
/// all return an empty list.
fn method_degrees(p: &Params, method: Method) -> Vec<u32> {
    let full = || (0..p.vanishing_degree()).collect::<Vec<u32>>();
    let window = || {
        let dd = p.gen_degree();
        (0..p.d().saturating_sub(1)).map(|j| dd + j).collect::<Vec<u32>>()
    };
    match method {
        Method::ProvedK2 => {
            if p.k() == 2 {
                full()
            } else {
                Vec::new()
            }
        }
        Method::Conjectured | Method::Oracle => full(),
        Method::Series => {
            let in_range = p.k() == 2
                && match p.n() {
                    1 => true,
                    2 => p.d() >= 2,
                    3 => p.d() >= 3,
                    _ => false,
                };
            if in_range {
                full()
            } else {
                Vec::new()
            }
        }
        Method::Duality | Method::Comp => {
            if p.n() >= 1 {
                window()
            } else {
                Vec::new()
            }
        }
    }
}

#[derive(Debug, Clone)]
enum Outcome {
    Value(String),
    Cached(String),
    Guarded,
}

#[derive(Debug, Clone)]
struct TupleEval {
    p: Params,
    /// (degree, method) -> outcome, naturally sorted.
    outcomes: BTreeMap<(u32, Method), Outcome>,
}

fn eval_tuple(
    p: &Params,
    spec: &SweepSpec,
    cached: &Arc<std::collections::HashMap<cache::Key, String>>,
) -> Result<TupleEval, Error> {
    let cfg = OracleConfig { max_block_entries: spec.max_block_entries, mode: spec.mode };
    let mut outcomes = BTreeMap::new();
    // whole-table methods computed once per tuple
    let mut series_table = None;
    for &method in &spec.methods {
        let mut degrees = method_degrees(p, method);
        if let DegreePolicy::Range(lo, hi) = spec.degrees {
            degrees.retain(|&i| i >= lo && i <= hi);
        }
        for i in degrees {
            let key = (p.n(), p.k(), p.d(), i, method.tag().to_string());
            if let Some(v) = cached.get(&key) {
                outcomes.insert((i, method), Outcome::Cached(v.clone()));
                continue;
            }
            let value = match method {
                Method::ProvedK2 => Some(hf_proved_k2(p, i)?.to_string()),
                Method::Conjectured => Some(hf_conjectured(p, i).to_string()),
                Method::Duality => Some(fatpoints::duality_hf(p, i - p.gen_degree())?.to_string()),
                Method::Comp => Some(fatpoints::comp_formula(p, i - p.gen_degree())?.to_string()),
                Method::Series => {
                    let table = match &series_table {
                        Some(t) => t,
                        None => {
                            series_table = Some(hf_table(p, Method::Series)?);
                            series_table.as_ref().unwrap()
                        }
                    };
                    Some(table.get(i).to_string())
                }
                Method::Oracle => match hf_oracle(p, i, &cfg) {
                    Ok(v) => Some(v.to_string()),
                    Err(Error::ResourceGuard { .. }) => None,
                    Err(e) => return Err(e),
                },
            };
            let outcome = match value {
                Some(v) => Outcome::Value(v),
                None => Outcome::Guarded,
            };
            outcomes.insert((i, method), outcome);
        }
    }
    Ok(TupleEval { p: *p, outcomes })
}

pub struct SweepResult {
    pub report: VerifyReport,
    pub new_records: Vec<VerificationRecord>,
    /// Every value (fresh and cached) as (n, k, d, degree, method, value),
    /// sorted by key.
    pub all_values: Vec<(u32, u32, u32, u32, String, String)>,
    pub guarded: u64,
}

pub fn run(spec: &SweepSpec, cache: &Cache) -> Result<SweepResult, Error> {
    let tuples = spec.tuples();
    let cached = Arc::new(cache.records.clone());
    let evals: Vec<Result<TupleEval, Error>> = {
        let cached = Arc::clone(&cached);
        map_items(spec.mode, tuples.clone(), move |p| eval_tuple(&p, spec, &cached))
    };

    let mut summary = VerifySummary {
        tuples: tuples.len() as u64,
        values: 0,
        computed: 0,
        cached: 0,
        guarded: 0,
        disagreements: 0,
    };
    let mut disagreements = Vec::new();
    let mut new_records = Vec::new();
    let mut all_values = Vec::new();
    let timestamp = cache::now_utc_seconds();
    let tool_version = env!("CARGO_PKG_VERSION").to_string();

    // tuples() is already sorted by (n, k, d); evals preserve that order
    for eval in evals {
        let eval = eval?;
        let p = eval.p;
        // group by degree for the agreement check
        let mut by_degree: BTreeMap<u32, Vec<(Method, String, bool)>> = BTreeMap::new();
        for ((degree, method), outcome) in &eval.outcomes {
            summary.values += 1;
            match outcome {
                Outcome::Value(v) => {
                    summary.computed += 1;
                    by_degree.entry(*degree).or_default().push((*method, v.clone(), true));
                }
                Outcome::Cached(v) => {
                    summary.cached += 1;
                    by_degree.entry(*degree).or_default().push((*method, v.clone(), false));
                }
                Outcome::Guarded => {
                    summary.guarded += 1;
                }
            }
        }
        for (degree, entries) in &by_degree {
            let all_agree = entries.windows(2).all(|w| w[0].1 == w[1].1);
            if !all_agree {
                summary.disagreements += 1;
                disagreements.push(DisagreementOut {
                    n: p.n(),
                    k: p.k(),
                    d: p.d(),
                    degree: *degree,
                    values: entries.iter().map(|(m, v, _)| (m.tag().to_string(), v.clone())).collect(),
                });
            }
            for (method, value, fresh) in entries {
                all_values.push((p.n(), p.k(), p.d(), *degree, method.tag().to_string(), value.clone()));
                if !fresh {
                    continue;
                }
                let agrees_with: Vec<String> = entries
                    .iter()
                    .filter(|(m, v, _)| m != method && v == value)
                    .map(|(m, _, _)| m.tag().to_string())
                    .collect();
                new_records.push(VerificationRecord {
                    n: p.n(),
                    k: p.k(),
                    d: p.d(),
                    degree: *degree,
                    method: method.tag().to_string(),
                    value: value.clone(),
                    agrees_with: if agrees_with.is_empty() { None } else { Some(agrees_with) },
                    timestamp,
                    tool_version: tool_version.clone(),
                });
            }
        }
    }

    let guarded = summary.guarded;
    Ok(SweepResult { report: VerifyReport { summary, disagreements }, new_records, all_values, guarded })
}
