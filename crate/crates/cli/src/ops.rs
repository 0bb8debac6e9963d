//! Request/response operations shared by the command line and the service.

use muntz::bernstein::{bernstein_basis, elevation_weights};
use muntz::geometry::{curve_eval, elevate, join_c1, sample_curve, surface_eval, uniform_grid, JoinMode};
use muntz::partition::{dimension_elevation_partitions, partition_to_exponents};
use muntz::{ExactCurve, MuntzSpace, Partition, Rational};
use serde_json::{json, Value};

use crate::doc::{curve_doc, num, nums, parse_surface, ApiError, CurveFields, Reader};
use crate::limits::Limits;

/// Sample count when a request gives none.
pub const DEFAULT_SAMPLES: usize = 33;

fn sample_count(r: &mut Reader, v: &Value, key: &str, limits: &Limits) -> Option<usize> {
    let m = match v.get(key).filter(|x| !x.is_null()) {
        Some(x) => r.count(x, key)?,
        None => DEFAULT_SAMPLES,
    };
    if m > limits.max_samples {
        r.fail(key, format!("{m} samples exceed the limit {}", limits.max_samples));
        return None;
    }
    Some(m)
}

/// `{partition, n, interval}` to the basis polynomials.
pub fn basis(v: &Value, limits: &Limits) -> Result<Value, ApiError> {
    let mut r = Reader::new();
    let fields = (|| {
        r.object(v, "")?;
        let lam = r.get(v, "", "partition").and_then(|x| r.partition(x, "partition", limits));
        let n = r.get(v, "", "n").and_then(|x| r.order(x, "n", limits));
        let iv = r.get(v, "", "interval").and_then(|x| r.interval(x, "interval"));
        Some((lam?, n?, iv?))
    })();
    let (lam, n, (a, b)) = r.finish(fields)?;
    let space = MuntzSpace::new(lam, n)?;
    let basis = bernstein_basis(&space, &a, &b)?;
    let elements: Vec<Value> = basis
        .elements
        .iter()
        .enumerate()
        .map(|(k, e)| {
            let terms: Vec<Value> =
                e.terms().iter().map(|(x, c)| json!({ "exponent": x, "coefficient": num(c) })).collect();
            json!({ "k": k, "terms": terms })
        })
        .collect();
    Ok(json!({
        "partition": space.lambda(),
        "n": n,
        "exponents": space.exponents(),
        "interval": [num(&a), num(&b)],
        "elements": elements,
    }))
}

fn point_value(t: &Rational, p: &[Rational]) -> Value {
    json!({ "t": num(t), "point": nums(p) })
}

/// A curve document plus `t` (one parameter or a list).
pub fn eval(v: &Value, limits: &Limits) -> Result<Value, ApiError> {
    let mut r = Reader::new();
    let fields = CurveFields::read(&mut r, v, "", limits);
    let ts = r.get(v, "", "t").and_then(|t| match t {
        Value::Array(_) => r.rationals(t, "t"),
        _ => r.rational(t, "t").map(|x| vec![x]),
    });
    let ts = match ts {
        Some(ts) if ts.len() > limits.max_samples => {
            r.fail("t", format!("{} parameters exceed the limit {}", ts.len(), limits.max_samples));
            None
        }
        other => other,
    };
    let (fields, ts) = r.finish(fields.zip(ts))?;
    let curve = fields.into_curve()?;
    let values = ts
        .iter()
        .map(|t| Ok(point_value(t, &curve_eval(&curve, t)?)))
        .collect::<Result<Vec<_>, ApiError>>()?;
    Ok(json!({ "values": values }))
}

/// Validated curve and sample count `m` (the curve's `samples`, or `m`).
pub fn curve_and_count(v: &Value, limits: &Limits) -> Result<(ExactCurve, usize), ApiError> {
    let mut r = Reader::new();
    let fields = CurveFields::read(&mut r, v, "", limits);
    let key = if v.get("m").is_some() { "m" } else { "samples" };
    let m = sample_count(&mut r, v, key, limits);
    let (fields, m) = r.finish(fields.zip(m))?;
    Ok((fields.into_curve()?, m))
}

/// A curve document plus an optional sample count `m`.
pub fn sample(v: &Value, limits: &Limits) -> Result<Value, ApiError> {
    let (curve, m) = curve_and_count(v, limits)?;
    let samples: Vec<Value> = sample_curve(&curve, m)?.iter().map(|s| point_value(&s.t, &s.point)).collect();
    Ok(json!({ "samples": samples }))
}

/// A curve document plus the `target` partition of order `n + 1`.
pub fn elevate_op(v: &Value, limits: &Limits) -> Result<Value, ApiError> {
    let mut r = Reader::new();
    let fields = CurveFields::read(&mut r, v, "", limits);
    let target = r.get(v, "", "target").and_then(|x| r.partition(x, "target", limits));
    let (fields, target) = r.finish(fields.zip(target))?;
    let curve = fields.into_curve()?;
    let raised = elevate(&curve, &target)?;
    let weights: Vec<Value> = elevation_weights(&curve.space, &target, &curve.a, &curve.b)?
        .iter()
        .map(|(xi, rho)| json!({ "xi": num(xi), "rho": num(rho) }))
        .collect();
    Ok(json!({
        "curve": curve_doc(&raised),
        "exponents": raised.space.exponents(),
        "points": raised.points.iter().map(|p| nums(p)).collect::<Vec<_>>(),
        "weights": weights,
    }))
}

/// `{left: curve, mu, rho | c}`.
pub fn join(v: &Value, limits: &Limits) -> Result<Value, ApiError> {
    let mut r = Reader::new();
    let left = r.object(v, "").and_then(|_| r.get(v, "", "left")).and_then(|x| CurveFields::read(&mut r, x, "left", limits));
    let mu = r.get(v, "", "mu").and_then(|x| r.partition(x, "mu", limits));
    let rho = v.get("rho").filter(|x| !x.is_null());
    let c = v.get("c").filter(|x| !x.is_null());
    let mode = match (rho, c) {
        (Some(x), None) => r.rational(x, "rho").map(|rho| JoinMode::SolveForC { rho }),
        (None, Some(x)) => r.rational(x, "c").map(|c| JoinMode::SolveForQ1 { c }),
        _ => {
            r.fail("rho", "give exactly one of rho and c");
            None
        }
    };
    let ((left, mu), mode) = r.finish(left.zip(mu).zip(mode))?;
    let left = left.into_curve()?;
    let j = join_c1(&left, &mu, mode)?;
    Ok(json!({
        "c": num(&j.c),
        "interval": [num(&left.b), num(&j.c)],
        "q0": nums(&j.q0),
        "q1": nums(&j.q1),
    }))
}

/// A surface document plus an optional `m`; samples an `m × m` grid.
pub fn surface(v: &Value, limits: &Limits) -> Result<Value, ApiError> {
    let mut r = Reader::new();
    let m = sample_count(&mut r, v, "m", limits);
    let m = match m {
        Some(m) if m * m > limits.max_samples * 16 => {
            r.fail("m", "grid too large");
            None
        }
        other => other,
    };
    let m = r.finish(m)?;
    let s = parse_surface(v, limits)?;
    let us = uniform_grid(&s.u_interval.0, &s.u_interval.1, m)?;
    let vs = uniform_grid(&s.v_interval.0, &s.v_interval.1, m)?;
    let rows = us
        .iter()
        .map(|u| {
            vs.iter()
                .map(|w| Ok(json!({ "u": num(u), "v": num(w), "point": nums(&surface_eval(&s, u, w)?) })))
                .collect::<Result<Vec<_>, ApiError>>()
        })
        .collect::<Result<Vec<_>, ApiError>>()?;
    Ok(json!({ "samples": rows }))
}

/// `{partition, n, r_max?}` to every `μ` with `E_λ(n) ⊂ E_μ(n+1)` up to the shift bound.
pub fn elevation_partitions(v: &Value, limits: &Limits) -> Result<Value, ApiError> {
    let mut r = Reader::new();
    let fields = (|| {
        r.object(v, "")?;
        let lam = r.get(v, "", "partition").and_then(|x| r.partition(x, "partition", limits));
        let n = r.get(v, "", "n").and_then(|x| r.order(x, "n", limits));
        let r_max = match v.get("r_max").filter(|x| !x.is_null()) {
            Some(x) => r.count(x, "r_max").filter(|&k| {
                let ok = k <= limits.max_weight as usize;
                if !ok {
                    r.fail("r_max", format!("shift bound exceeds {}", limits.max_weight));
                }
                ok
            }),
            None => Some(1),
        };
        Some((lam?, n?, r_max?))
    })();
    let (lam, n, r_max) = r.finish(fields)?;
    let space = MuntzSpace::new(lam.clone(), n)?;
    let border = lam.border_complement();
    let list = dimension_elevation_partitions(&lam, n, r_max as u32)?
        .into_iter()
        .map(|mu| {
            let family = if !lam.is_empty() && mu.first() + 1 == lam.first() { "insertion" } else { "shifted" };
            Ok(json!({
                "partition": &mu,
                "exponents": partition_to_exponents(&mu, n + 1)?,
                "family": family,
                "border_complement": !lam.is_empty() && mu == border,
            }))
        })
        .collect::<Result<Vec<_>, ApiError>>()?;
    Ok(json!({
        "partition": &lam,
        "n": n,
        "exponents": space.exponents(),
        "elevations": list,
    }))
}

/// Used by both front ends to name partitions in messages.
pub fn describe(lam: &Partition) -> String {
    if lam.is_empty() {
        "∅".to_string()
    } else {
        lam.to_string()
    }
}
