//! Task execution and the JSON report.

use std::time::Instant;

use num_rational::BigRational;
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::asymptotics::{EventualPolynomial, FitDegree};
use crate::error::{Error, Result};
use crate::filtration::{
    explicit_filtration_table, multi_reduction_test, normalized_limit_estimate, product_power_table,
    ExplicitFiltration, LimitEstimate, PowerFiltrationFamily,
};
use crate::groebner::Ideal;
use crate::length::{colength, hs_samples, samuel_function, subquotient_length, LengthSample};
use crate::limits::Limits;
use crate::multiplicity::{e_function_with, MultiplicityOptions, DEFAULT_STABILITY_N};
use crate::reduction::{
    analytic_spread, certified_reduction_test, d_sequence_check, depth_positive, fiber_cone_relations,
    grade_cm, local_dimension, pair_report, radical_colon_stability, rees_criterion, same_radical,
    ReductionVerdict, TheoremFlag, DEFAULT_N_MAX, DEFAULT_WINDOW,
};

use super::parser::{Binding, Session, Task, TaskKind, SESSION_VERSION};

/// Identifier and version of the report layout in `docs/report-schema.json`.
pub const REPORT_SCHEMA: &str = "reeslab-report";
pub const REPORT_SCHEMA_VERSION: u32 = 1;

pub const LOCALIZATION_NOTE: &str =
    "all lengths, dimensions and multiplicities are computed in the ring localized at the ideal of all variables";

const DEFAULT_NRANGE: (u32, u32) = (1, 6);
const DEFAULT_MULT_NRANGE: (u32, u32) = (1, 5);
const DEFAULT_RADCOLON_NMAX: u32 = 3;
const DEFAULT_MRANGE: (u32, u32) = (1, 6);
const DEFAULT_LEVELS: u32 = 8;

#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    /// Worker threads; `None` uses the rayon default.
    pub jobs: Option<usize>,
    /// Replaces the built-in `nmax` default for tasks that do not set it.
    pub default_nmax: Option<u32>,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub json: Value,
    pub errors: usize,
}

impl Report {
    /// Process exit code: 0 iff no task errored.
    pub fn exit_code(&self) -> i32 {
        i32::from(self.errors > 0)
    }

    pub fn task(&self, index: usize) -> Option<&Value> {
        self.json["tasks"].get(index)
    }
}

pub fn rational_json(q: &BigRational) -> Value {
    json!({ "num": q.numer().to_string(), "den": q.denom().to_string() })
}

pub fn fit_json(p: &EventualPolynomial) -> Value {
    let degree = match p.degree() {
        FitDegree::Zero => json!("ZERO"),
        FitDegree::Finite(d) => json!(d),
    };
    json!({
        "binomial_coeffs": p.binomial_coeffs().iter().map(rational_json).collect::<Vec<_>>(),
        "degree": degree,
        "stab_index": p.stabilization_index(),
        "window": p.window(),
        "display": p.display_in_n(),
    })
}

pub fn table_json(t: &[LengthSample]) -> Value {
    json!({
        "index": t.iter().map(|s| s.index).collect::<Vec<_>>(),
        "values": t.iter().map(|s| s.value).collect::<Vec<_>>(),
    })
}

pub fn verdict_json(v: &ReductionVerdict) -> Value {
    json!({
        "verdict": v.label(),
        "is_reduction": v.is_reduction,
        "reduction_number": v.reduction_number,
        "method": v.method.to_string(),
        "n_max_searched": v.n_max_searched,
    })
}

pub fn flags_json(flags: &[TheoremFlag]) -> Value {
    let mut m = Map::new();
    for f in flags {
        m.insert(f.name.to_string(), json!({ "status": f.status.to_string(), "detail": f.detail }));
    }
    Value::Object(m)
}

fn limit_json(l: &LimitEstimate) -> Value {
    json!({
        "d": l.d,
        "verdict": l.verdict.to_string(),
        "evidence": "OBSERVED",
        "fit": fit_json(&l.fit),
        "ratios": l.values.iter().map(|(m, q)| json!({ "m": m, "value": rational_json(q) })).collect::<Vec<_>>(),
    })
}

fn error_json(e: &Error) -> Value {
    let kind = match e {
        Error::RingMismatch => "ring_mismatch",
        Error::InvalidRing(_) => "invalid_ring",
        Error::ZeroPolynomial => "zero_polynomial",
        Error::DivisionByZero => "division_by_zero",
        Error::Resource(_) => "resource",
        Error::NotMPrimary { .. } => "not_m_primary",
        Error::PossiblyInfiniteLength { .. } => "possibly_infinite_length",
        Error::NotContained(_) => "not_contained",
        Error::NotStabilized(_) => "not_stabilized",
        Error::InvalidArgument(_) => "invalid_argument",
        Error::Parse(_) => "parse",
    };
    json!({ "kind": kind, "message": e.to_string() })
}

fn range(r: Option<(u32, u32)>, default: (u32, u32)) -> std::ops::RangeInclusive<u32> {
    let (a, b) = r.unwrap_or(default);
    a..=b
}

struct Ctx<'a> {
    session: &'a Session,
    default_nmax: u32,
}

impl Ctx<'_> {
    fn nmax(&self, task: &Task) -> u32 {
        task.options.nmax.unwrap_or(self.default_nmax)
    }

    fn ideal(&self, name: &str) -> Result<&Ideal> {
        self.session.ideal(name)
    }

    fn pair(&self, task: &Task) -> Result<(&Ideal, &Ideal)> {
        Ok((self.ideal(&task.args[0])?, self.ideal(&task.args[1])?))
    }

    fn inputs(&self, task: &Task) -> Value {
        let mut args = Map::new();
        for a in &task.args {
            let text = match self.session.binding(a) {
                Some(Binding::Ideal(i)) => i.generators_string(),
                Some(Binding::Poly(p)) => p.to_string(),
                Some(Binding::Family(f)) => format!("({}) ↦ {}", f.param, f.template),
                None => a.clone(),
            };
            args.insert(a.clone(), json!(text));
        }
        let o = &task.options;
        json!({
            "args": task.args,
            "values": args,
            "options": {
                "nmax": o.nmax, "nrange": o.nrange.map(|r| [r.0, r.1]), "krange": o.krange.map(|r| [r.0, r.1]),
                "mrange": o.mrange.map(|r| [r.0, r.1]), "window": o.window, "d": o.d,
                "weights": o.weights, "levels": o.levels, "nstab": o.nstab,
            },
        })
    }

    fn execute(&self, task: &Task) -> Result<Value> {
        let o = &task.options;
        let window = o.window.unwrap_or(DEFAULT_WINDOW);
        match task.kind {
            TaskKind::Length => {
                let a = self.ideal(&task.args[0])?;
                let b = match task.args.get(1) {
                    Some(n) => Some(self.ideal(n)?),
                    None => None,
                };
                match (b, o.krange) {
                    (None, None) => Ok(json!({ "length": colength(a)? })),
                    (Some(b), None) => Ok(json!({ "length": subquotient_length(a, b)? })),
                    (None, Some((s, e))) => Ok(json!({ "table": table_json(&samuel_function(a, s..=e)?) })),
                    (Some(b), Some((s, e))) => Ok(json!({ "table": table_json(&hs_samples(a, b, s..=e)?) })),
                }
            }
            TaskKind::Rees => {
                let (i, j) = self.pair(task)?;
                let rc = rees_criterion(i, j, range(o.nrange, DEFAULT_NRANGE), window, self.nmax(task))?;
                Ok(json!({
                    "table": table_json(&rc.table),
                    "fit": fit_json(&rc.fit),
                    "dim": rc.dim,
                    "verdict": rc.label(),
                    "direct": verdict_json(&rc.direct),
                    "agrees_with_direct": rc.agrees_with_direct,
                }))
            }
            TaskKind::Reduction => {
                let (i, j) = self.pair(task)?;
                let v = certified_reduction_test(i, j, self.nmax(task), range(o.nrange, DEFAULT_NRANGE))?;
                Ok(verdict_json(&v))
            }
            TaskKind::Spread => {
                let j = self.ideal(&task.args[0])?;
                let rel = fiber_cone_relations(j)?;
                Ok(json!({
                    "analytic_spread": analytic_spread(j)?,
                    "fiber_relations": rel.generators().iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                }))
            }
            TaskKind::Grade => {
                let j = self.ideal(&task.args[0])?;
                Ok(json!({
                    "grade": grade_cm(j)?,
                    "local_dimension": local_dimension(j)?,
                    "dim": j.ring().dim(),
                    "depth_positive": depth_positive(j)?,
                }))
            }
            TaskKind::Dseq => {
                let seq = match self.session.binding(&task.args[0]) {
                    Some(Binding::Ideal(i)) => i.generators().to_vec(),
                    _ => task
                        .args
                        .iter()
                        .map(|a| match self.session.binding(a) {
                            Some(Binding::Poly(p)) => Ok(p.clone()),
                            _ => Err(Error::invalid(format!("'{a}' is not a poly"))),
                        })
                        .collect::<Result<Vec<_>>>()?,
                };
                let c = d_sequence_check(&seq)?;
                Ok(json!({
                    "weak": c.weak,
                    "strict": c.strict,
                    "failing_witness": c.failing_witness.map(|w| w.to_string()),
                }))
            }
            TaskKind::Radcolon => {
                let (i, j) = self.pair(task)?;
                let nmax = o.nmax.unwrap_or(DEFAULT_RADCOLON_NMAX);
                let rs = radical_colon_stability(i, j, nmax)?;
                let m = Ideal::maximal(i.ring());
                Ok(json!({
                    "stable_from": rs.stable_from,
                    "n_max": nmax,
                    "k_proxy": rs.k_proxy.generators_string(),
                    "radical_is_maximal": same_radical(&rs.k_proxy, &m)?,
                    "colons": rs.colons.iter().map(Ideal::generators_string).collect::<Vec<_>>(),
                }))
            }
            TaskKind::Mult => {
                let (i, j) = self.pair(task)?;
                let opts = MultiplicityOptions {
                    n_stability: o.nstab.unwrap_or(DEFAULT_STABILITY_N),
                    n_max: self.nmax(task),
                    window,
                };
                let r = e_function_with(i, j, range(o.nrange, DEFAULT_MULT_NRANGE), &opts)?;
                Ok(json!({
                    "k_proxy": r.k_proxy.generators_string(),
                    "r": r.r,
                    "t": r.t,
                    "table": table_json(&r.e_table),
                    "fit": fit_json(&r.e_fit),
                    "verdicts": flags_json(&r.verdicts),
                }))
            }
            TaskKind::Filtration => self.filtration(task),
            TaskKind::Verify => {
                let (i, j) = self.pair(task)?;
                let p = pair_report(i, j, range(o.nrange, DEFAULT_NRANGE), self.nmax(task))?;
                Ok(json!({
                    "lambda_table": table_json(&p.lambda_table),
                    "fit": fit_json(&p.p_fit),
                    "reduction": verdict_json(&p.reduction),
                    "analytic_spread": p.spread_j,
                    "grade": p.grade_j,
                    "dim": p.dim_r,
                    "d_sequence": {
                        "weak": p.d_sequence.weak,
                        "strict": p.d_sequence.strict,
                        "failing_witness": p.d_sequence.failing_witness.as_ref().map(|w| w.to_string()),
                    },
                    "theorem_flags": flags_json(&p.theorem_flags),
                }))
            }
        }
    }

    fn filtration(&self, task: &Task) -> Result<Value> {
        let o = &task.options;
        let ring = &self.session.ring;
        let d = o.d.unwrap_or(ring.dim() as u32);
        if task.args[0] == "power" {
            let names = &task.args[1..];
            let pairs = names
                .chunks(2)
                .map(|c| Ok((self.ideal(&c[0])?.clone(), self.ideal(&c[1])?.clone())))
                .collect::<Result<Vec<_>>>()?;
            let weights = o.weights.clone().unwrap_or_else(|| vec![1; pairs.len()]);
            let family = PowerFiltrationFamily::new(pairs, weights)?;
            let table = product_power_table(&family, range(o.mrange, DEFAULT_MRANGE))?;
            let limit = normalized_limit_estimate(&table, d)?;
            let mr = multi_reduction_test(&family, self.nmax(task))?;
            Ok(json!({
                "mode": "power",
                "table": table_json(&table),
                "limit": limit_json(&limit),
                "reduction": {
                    "per_pair": mr.per_pair.iter().map(verdict_json).collect::<Vec<_>>(),
                    "product": verdict_json(&mr.product),
                    "all_pairs_reduce": mr.all_pairs_reduce(),
                    "grade_at_least_one": mr.grade_at_least_one,
                    "consistent": mr.consistent,
                },
            }))
        } else {
            let levels = o.levels.unwrap_or(DEFAULT_LEVELS);
            let build = |name: &str| -> Result<ExplicitFiltration> {
                let f = self.session.family(name)?;
                let ideals = (1..=levels as i64).map(|m| f.at(ring, m)).collect::<Result<Vec<_>>>()?;
                ExplicitFiltration::new(ideals)
            };
            let fi = build(&task.args[1])?;
            let fj = build(&task.args[2])?;
            let table = explicit_filtration_table(&fi, &fj)?;
            let limit = normalized_limit_estimate(&table, d)?;
            let (i1, j1) = (fi.level(1).unwrap(), fj.level(1).unwrap());
            let level_one = certified_reduction_test(i1, j1, self.nmax(task), range(None, DEFAULT_NRANGE))?;
            Ok(json!({
                "mode": "explicit",
                "table": table_json(&table),
                "limit": limit_json(&limit),
                "level_one_reduction": verdict_json(&level_one),
            }))
        }
    }
}

/// Runs every task, in parallel when `jobs` allows, keeping task order.
pub fn run_tasks(session: &Session, opts: &RunOptions) -> Result<Report> {
    let ctx = Ctx { session, default_nmax: opts.default_nmax.unwrap_or(DEFAULT_N_MAX) };
    let limits = Limits::current();
    let run_one = |(index, task): (usize, &Task)| -> Value {
        let start = Instant::now();
        let outcome = limits.scoped(|| ctx.execute(task));
        let elapsed_ms = start.elapsed().as_millis() as u64;
        let mut entry = json!({
            "index": index,
            "line": task.line,
            "kind": task.kind.name(),
            "inputs": ctx.inputs(task),
            "elapsed_ms": elapsed_ms,
        });
        match outcome {
            Ok(result) => {
                entry["status"] = json!("ok");
                entry["result"] = result;
            }
            Err(e) => {
                entry["status"] = json!("error");
                entry["error"] = error_json(&e);
            }
        }
        entry
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = opts.jobs {
        builder = builder.num_threads(n.max(1));
    }
    let pool = builder.build().map_err(|e| Error::Resource(format!("cannot start worker pool: {e}")))?;
    let tasks: Vec<Value> = pool.install(|| session.tasks.par_iter().enumerate().map(run_one).collect());
    let errors = tasks.iter().filter(|t| t["status"] == "error").count();
    let json = json!({
        "schema": REPORT_SCHEMA,
        "schema_version": REPORT_SCHEMA_VERSION,
        "session_version": SESSION_VERSION,
        "ring": session.ring.session_header(),
        "localization": LOCALIZATION_NOTE,
        "tasks": tasks,
        "summary": { "tasks": session.tasks.len(), "ok": session.tasks.len() - errors, "errors": errors },
    });
    Ok(Report { json, errors })
}
